#include "traag/report.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "traag/errors.hpp"

namespace traag {

namespace {

namespace fs = std::filesystem;

const char* kCiteLerf = "subgroup separable iff the underlying graph has no induced P4 and no induced C4";
const char* kCiteCoherent = "coherent iff the underlying graph is chordal";
const char* kCiteSubgroupChordal = "chordal defining graph: subgroup membership is decidable";
const char* kCiteSubgroupC4 =
    "induced C4: the square embedding yields A(C4) = F2 x F2, which has a subgroup with undecidable "
    "membership (Mikhailova)";
const char* kCiteSubgroupOpen = "not chordal and no induced C4: not settled";
const char* kCiteNotElementary =
    "not subgroup separable: submonoid and rational subset membership are undecidable";
const char* kCiteRational = "class R (single vertices closed under disjoint unions and cones): rational subset "
                            "membership is decidable";
const char* kCiteSubmonoidFromRational = "decidable rational subset membership implies decidable submonoid membership";
const char* kCiteElementaryOpen = "elementary defining graph outside class R: not settled";

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

void render_decomposition_into(const ConeDecomposition& d, std::size_t depth, std::string& out) {
  std::string indent(2 * depth, ' ');
  switch (d.node) {
    case ConeDecomposition::Node::Leaf:
      out += indent + "leaf " + d.vertex + "\n";
      break;
    case ConeDecomposition::Node::Union:
      out += indent + "union\n";
      for (const auto& c : d.children) render_decomposition_into(c, depth + 1, out);
      break;
    case ConeDecomposition::Node::Cone: {
      std::vector<std::string> kinds;
      for (const auto& [v, k] : d.kinds) kinds.push_back(v + (k == TipKind::IntoTip ? " >" : " -"));
      out += indent + "cone " + d.vertex + " [" + join(kinds, ", ") + "]\n";
      for (const auto& c : d.children) render_decomposition_into(c, depth + 1, out);
      break;
    }
  }
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Decidable: return "decidable";
    case Verdict::Undecidable: return "undecidable";
    case Verdict::Open: return "open";
  }
  return "?";
}

PropertyReport analyze(const MixedGraph& g) {
  PropertyReport r;
  r.graph_summary = {g.size(), g.edge_count(), g.directed_edge_count()};
  r.transitive_forest = is_transitive_forest(g);
  r.chordal = is_chordal(g);
  r.in_class_r = is_in_class_r(g);

  const bool elementary = r.transitive_forest.holds;
  if (r.in_class_r && !elementary)
    throw InternalDisagreement("class R graph that is not a transitive forest:\n" + serialize_graph(g));
  if (elementary && !r.chordal.holds)
    throw InternalDisagreement("transitive forest that is not chordal:\n" + serialize_graph(g));

  r.lerf = elementary;
  r.coherent = r.chordal.holds;
  r.citations["lerf"] = kCiteLerf;
  r.citations["coherent"] = kCiteCoherent;

  if (r.chordal.holds) {
    r.subgroup_membership = Verdict::Decidable;
    r.citations["subgroup_membership"] = kCiteSubgroupChordal;
  } else if (find_induced_c4(g)) {
    r.subgroup_membership = Verdict::Undecidable;
    r.citations["subgroup_membership"] = kCiteSubgroupC4;
  } else {
    r.subgroup_membership = Verdict::Open;
    r.citations["subgroup_membership"] = kCiteSubgroupOpen;
  }

  if (!elementary) {
    r.rational_membership = Verdict::Undecidable;
    r.submonoid_membership = Verdict::Undecidable;
    r.citations["rational_membership"] = kCiteNotElementary;
    r.citations["submonoid_membership"] = kCiteNotElementary;
  } else if (r.in_class_r) {
    r.rational_membership = Verdict::Decidable;
    r.submonoid_membership = Verdict::Decidable;
    r.citations["rational_membership"] = kCiteRational;
    r.citations["submonoid_membership"] = kCiteSubmonoidFromRational;
  } else {
    r.rational_membership = Verdict::Open;
    r.submonoid_membership = Verdict::Open;
    r.citations["rational_membership"] = kCiteElementaryOpen;
    r.citations["submonoid_membership"] = kCiteElementaryOpen;
  }
  return r;
}

nlohmann::json to_json(const ConeDecomposition& d) {
  using nlohmann::json;
  switch (d.node) {
    case ConeDecomposition::Node::Leaf:
      return json{{"leaf", d.vertex}};
    case ConeDecomposition::Node::Union: {
      json parts = json::array();
      for (const auto& c : d.children) parts.push_back(to_json(c));
      return json{{"union", parts}};
    }
    case ConeDecomposition::Node::Cone: {
      json kinds = json::object();
      for (const auto& [v, k] : d.kinds) kinds[v] = k == TipKind::IntoTip ? "into_tip" : "undirected";
      return json{{"cone", {{"tip", d.vertex}, {"base", to_json(d.children.front())}, {"kinds", kinds}}}};
    }
  }
  return nullptr;
}

nlohmann::json to_json(const PropertyReport& r) {
  using nlohmann::json;
  json j;
  j["graph_summary"] = {{"vertices", r.graph_summary.vertices},
                        {"edges", r.graph_summary.edges},
                        {"directed_edges", r.graph_summary.directed_edges}};

  json tf{{"value", r.transitive_forest.holds}, {"witness", nullptr}};
  if (const auto& w = r.transitive_forest.witness) {
    tf["witness"] = {{"shape", w->shape == ForbiddenShape::P4 ? "P4" : "C4"},
                     {"vertices", std::vector<std::string>(w->vertices.begin(), w->vertices.end())}};
  }
  j["transitive_forest"] = tf;

  json ch{{"value", r.chordal.holds}};
  if (r.chordal.holds)
    ch["perfect_elimination_ordering"] = r.chordal.elimination_order;
  else
    ch["chordless_cycle"] = r.chordal.chordless_cycle;
  j["chordal"] = ch;

  j["in_class_r"] = {{"value", r.in_class_r.has_value()},
                     {"decomposition", r.in_class_r ? to_json(*r.in_class_r) : json(nullptr)}};
  j["lerf"] = r.lerf;
  j["coherent"] = r.coherent;
  j["subgroup_membership"] = to_string(r.subgroup_membership);
  j["submonoid_membership"] = to_string(r.submonoid_membership);
  j["rational_membership"] = to_string(r.rational_membership);
  j["citations"] = r.citations;
  return j;
}

std::string render_decomposition(const ConeDecomposition& d) {
  std::string out;
  render_decomposition_into(d, 0, out);
  return out;
}

std::string render_text(const PropertyReport& r) {
  std::vector<std::pair<std::string, std::string>> rows;
  auto yes_no = [](bool b) { return std::string(b ? "yes" : "no"); };
  rows.emplace_back("vertices", std::to_string(r.graph_summary.vertices));
  rows.emplace_back("edges", std::to_string(r.graph_summary.edges) + " (" +
                                 std::to_string(r.graph_summary.directed_edges) + " directed)");
  std::string tf = yes_no(r.transitive_forest.holds);
  if (const auto& w = r.transitive_forest.witness) {
    tf += std::string(" (induced ") + (w->shape == ForbiddenShape::P4 ? "P4" : "C4") + ": " +
          join(std::vector<std::string>(w->vertices.begin(), w->vertices.end()), " ") + ")";
  }
  rows.emplace_back("transitive_forest", tf);
  rows.emplace_back("chordal", yes_no(r.chordal.holds) +
                                   (r.chordal.holds ? " (elimination order: " + join(r.chordal.elimination_order, " ")
                                                    : " (chordless cycle: " + join(r.chordal.chordless_cycle, " ")) +
                                   ")");
  rows.emplace_back("in_class_r", yes_no(r.in_class_r.has_value()));
  rows.emplace_back("lerf", yes_no(r.lerf));
  rows.emplace_back("coherent", yes_no(r.coherent));
  rows.emplace_back("subgroup_membership", to_string(r.subgroup_membership));
  rows.emplace_back("submonoid_membership", to_string(r.submonoid_membership));
  rows.emplace_back("rational_membership", to_string(r.rational_membership));

  std::size_t width = 0;
  for (const auto& row : rows) width = std::max(width, row.first.size());
  std::string out;
  for (const auto& [k, v] : rows) out += pad(k, width + 2) + v + "\n";
  if (r.in_class_r) out += "\ndecomposition:\n" + render_decomposition(*r.in_class_r);
  return out;
}

BatchResult batch_analyze(const std::vector<std::pair<std::string, MixedGraph>>& graphs) {
  BatchResult b;
  for (const auto& [source, g] : graphs) b.entries.push_back({source, analyze(g), {}});
  auto& s = b.summary;
  for (const auto& e : b.entries) {
    if (!e.report) {
      ++s.failures;
      continue;
    }
    ++s.graphs;
    const auto& r = *e.report;
    s.lerf += r.lerf ? 1 : 0;
    s.coherent += r.coherent ? 1 : 0;
    s.in_class_r += r.in_class_r ? 1 : 0;
    ++s.verdicts["subgroup_membership"][to_string(r.subgroup_membership)];
    ++s.verdicts["submonoid_membership"][to_string(r.submonoid_membership)];
    ++s.verdicts["rational_membership"][to_string(r.rational_membership)];
  }
  return b;
}

BatchResult batch_analyze_paths(const std::vector<std::string>& paths) {
  std::vector<std::string> files;
  for (const auto& p : paths) {
    std::error_code ec;
    if (fs::is_directory(p, ec)) {
      std::vector<std::string> found;
      for (const auto& entry : fs::directory_iterator(p, ec))
        if (entry.is_regular_file() && entry.path().extension() == ".tg") found.push_back(entry.path().string());
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else {
      files.push_back(p);
    }
  }

  std::vector<std::pair<std::string, MixedGraph>> graphs;
  std::vector<BatchEntry> failures;
  for (std::size_t i = 0; i < files.size(); ++i) {
    std::ifstream in(files[i]);
    if (!in) {
      failures.push_back({files[i], std::nullopt, "cannot open file"});
      continue;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      graphs.emplace_back(files[i], parse_graph(buf.str()));
    } catch (const Error& e) {
      failures.push_back({files[i], std::nullopt, e.what()});
    }
  }

  BatchResult parsed = batch_analyze(graphs);
  // Restore input order.
  BatchResult b;
  b.summary = parsed.summary;
  b.summary.failures = failures.size();
  std::size_t gi = 0, fi = 0;
  for (const auto& f : files) {
    if (gi < parsed.entries.size() && parsed.entries[gi].source == f)
      b.entries.push_back(std::move(parsed.entries[gi++]));
    else
      b.entries.push_back(std::move(failures[fi++]));
  }
  return b;
}

nlohmann::json to_json(const BatchResult& b) {
  using nlohmann::json;
  json entries = json::array();
  for (const auto& e : b.entries) {
    json j{{"source", e.source}};
    if (e.report)
      j["report"] = to_json(*e.report);
    else
      j["error"] = e.error;
    entries.push_back(j);
  }
  const auto& s = b.summary;
  json summary{{"graphs", s.graphs},
               {"failures", s.failures},
               {"lerf", s.lerf},
               {"coherent", s.coherent},
               {"in_class_r", s.in_class_r},
               {"verdicts", s.verdicts}};
  return json{{"reports", entries}, {"summary", summary}};
}

std::string render_text(const BatchResult& b) {
  std::size_t width = 6;
  for (const auto& e : b.entries) width = std::max(width, e.source.size());
  std::ostringstream out;
  out << pad("source", width + 2) << "lerf coherent class_r subgroup    submonoid   rational\n";
  for (const auto& e : b.entries) {
    out << pad(e.source, width + 2);
    if (!e.report) {
      out << "error: " << e.error << "\n";
      continue;
    }
    const auto& r = *e.report;
    out << pad(r.lerf ? "yes" : "no", 5) << pad(r.coherent ? "yes" : "no", 9)
        << pad(r.in_class_r ? "yes" : "no", 8) << pad(to_string(r.subgroup_membership), 12)
        << pad(to_string(r.submonoid_membership), 12) << to_string(r.rational_membership) << "\n";
  }
  const auto& s = b.summary;
  out << "\n" << s.graphs << " graphs, " << s.failures << " failures; lerf " << s.lerf << ", coherent "
      << s.coherent << ", class R " << s.in_class_r << "\n";
  for (const auto& [field, counts] : s.verdicts) {
    out << pad(field, 22);
    for (const auto& [verdict, n] : counts) out << verdict << " " << n << "  ";
    out << "\n";
  }
  return out.str();
}

}  // namespace traag
