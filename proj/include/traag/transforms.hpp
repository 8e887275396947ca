#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "traag/mixed_graph.hpp"
#include "traag/word.hpp"

namespace traag {

/// Effect of conjugating a neighbour v by the apex x.
enum class Conjugation {
  Fixed,     // x v x^-1 = v        (undirected edge)
  Inverted,  // x v x^-1 = v^-1     (x is the terminus)
  Shifted,   // x v x^-1 = v x^-2   (x is the origin)
};

const char* to_string(Conjugation c);

/// The index-2 subgroup <x^2, lk(x)> of T(g) for a universal vertex x,
/// presented as a twisted graph group on `delta`.
struct SubgroupGraphResult {
  MixedGraph delta;
  std::string apex;
  std::string new_generator;                     // stands for apex^2
  std::map<std::string, Word> generator_map;     // delta vertex -> word over g
  std::map<std::string, Conjugation> conjugation_table;
};

/// Replaces x by y = x^2 at x's position. Edges away from x are kept;
/// at y, edges with origin x stay directed (origin y), all others become
/// undirected. y is named x + "_sq", suffixed with "_2" while taken.
/// Throws NotUniversal.
SubgroupGraphResult apex_subgroup_graph(const MixedGraph& g, const std::string& apex);

/// Total exponent of the apex is even. Throws NotUniversal, UnknownGenerator.
bool in_index2_subgroup(const MixedGraph& g, const std::string& apex, const Word& w);

struct RewriteOptions {
  bool delta_normal_form = false;  // normalise the result in T(delta)
  bool strict = false;             // throw NotInSubgroup instead of returning nullopt
};

/// Schreier rewriting with transversal {1, x}: expresses a subgroup element
/// over the delta generators. Output is freely reduced.
std::optional<Word> rewrite_into_subgroup(const MixedGraph& g, const std::string& apex, const Word& w,
                                          RewriteOptions options = {});

/// Replaces each delta generator by its image under `generator_map`.
Word substitute(const SubgroupGraphResult& s, const Word& over_delta);

struct RelatorCheck {
  Edge edge;       // edge of delta
  Word relator;    // relator over delta
  Word image;      // substituted into g
  bool passed = false;
};

struct PresentationCheck {
  std::vector<RelatorCheck> relators;
  bool all_passed() const;
};

/// Every delta relator, pushed through `generator_map`, is trivial in T(g).
PresentationCheck verify_subgroup_presentation(const MixedGraph& g, const std::string& apex);

struct SemidirectAction {
  std::map<std::string, int> sign;  // v y v^-1 = y^sign(v)
  bool direct_product = false;      // every sign is +1
};

/// Action of the complement on <apex> when <apex> is normal: the apex must
/// be universal with every incident edge undirected or leaving the apex.
/// Throws ApexShape otherwise.
SemidirectAction semidirect_action(const MixedGraph& g, const std::string& apex);

}  // namespace traag
