#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "traag/classifiers.hpp"
#include "traag/mixed_graph.hpp"

namespace traag {

enum class Verdict { Decidable, Undecidable, Open };

const char* to_string(Verdict v);

struct GraphSummary {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t directed_edges = 0;
};

/// Decidability and separability verdicts for T(g), with the classifier witnesses that
/// back them.
struct PropertyReport {
  GraphSummary graph_summary;
  TransitiveForestResult transitive_forest;
  ChordalResult chordal;
  std::optional<ConeDecomposition> in_class_r;
  bool lerf = false;
  bool coherent = false;
  Verdict subgroup_membership = Verdict::Open;
  Verdict submonoid_membership = Verdict::Open;
  Verdict rational_membership = Verdict::Open;
  std::map<std::string, std::string> citations;
};

/// Runs every classifier and applies the verdict rules. Throws
/// InternalDisagreement if the verdicts violate the known implications.
PropertyReport analyze(const MixedGraph& g);

nlohmann::json to_json(const ConeDecomposition& d);
nlohmann::json to_json(const PropertyReport& r);
std::string render_text(const PropertyReport& r);
std::string render_decomposition(const ConeDecomposition& d);

struct BatchEntry {
  std::string source;
  std::optional<PropertyReport> report;
  std::string error;  // set when the input could not be read or parsed
};

struct BatchSummary {
  std::size_t graphs = 0;
  std::size_t failures = 0;
  std::size_t lerf = 0;
  std::size_t coherent = 0;
  std::size_t in_class_r = 0;
  std::map<std::string, std::map<std::string, std::size_t>> verdicts;  // field -> verdict -> count
};

struct BatchResult {
  std::vector<BatchEntry> entries;
  BatchSummary summary;
};

/// One report per graph in input order. Sources are labels for the output.
BatchResult batch_analyze(const std::vector<std::pair<std::string, MixedGraph>>& graphs);

/// Reads .tg files; a directory contributes its .tg files in name order.
/// Unreadable or malformed files become error entries.
BatchResult batch_analyze_paths(const std::vector<std::string>& paths);

nlohmann::json to_json(const BatchResult& b);
std::string render_text(const BatchResult& b);

}  // namespace traag
