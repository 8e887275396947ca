#include "traag/transforms.hpp"

#include <algorithm>

#include "traag/errors.hpp"

namespace traag {

namespace {

std::size_t require_universal(const MixedGraph& g, const std::string& apex) {
  std::size_t x = g.index_of(apex);
  if (!g.is_universal(x)) throw NotUniversal(apex);
  return x;
}

void append(std::vector<Syllable>& out, const std::string& gen, std::int64_t e) {
  if (!out.empty() && out.back().generator == gen) {
    out.back().exponent += e;
    if (out.back().exponent == 0) out.pop_back();
  } else {
    out.push_back({gen, e});
  }
}

}  // namespace

const char* to_string(Conjugation c) {
  switch (c) {
    case Conjugation::Fixed: return "fixed";
    case Conjugation::Inverted: return "inverted";
    case Conjugation::Shifted: return "shifted";
  }
  return "?";
}

SubgroupGraphResult apex_subgroup_graph(const MixedGraph& g, const std::string& apex) {
  const std::size_t x = require_universal(g, apex);

  std::string y = apex + "_sq";
  while (g.has_vertex(y)) y += "_2";

  std::vector<std::string> names = g.vertices();
  names[x] = y;

  SubgroupGraphResult r{MixedGraph({y}, {}), apex, y, {}, {}};
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (e.first != apex && e.second != apex) {
      edges.push_back(e);
      continue;
    }
    const std::string& other = e.first == apex ? e.second : e.first;
    if (!e.directed) {
      edges.push_back({y, other, false});
      r.conjugation_table[other] = Conjugation::Fixed;
    } else if (e.origin() == apex) {
      edges.push_back({y, other, true});
      r.conjugation_table[other] = Conjugation::Shifted;
    } else {
      edges.push_back({y, other, false});
      r.conjugation_table[other] = Conjugation::Inverted;
    }
  }
  r.delta = MixedGraph(std::move(names), edges);
  for (const auto& v : r.delta.vertices())
    r.generator_map[v] = v == y ? Word{{apex, 2}} : Word{{v, 1}};
  return r;
}

bool in_index2_subgroup(const MixedGraph& g, const std::string& apex, const Word& w) {
  require_universal(g, apex);
  std::int64_t total = 0;
  for (const auto& s : w.syllables) {
    if (!g.has_vertex(s.generator)) throw UnknownGenerator(s.generator);
    if (s.generator == apex) total += s.exponent;
  }
  return total % 2 == 0;
}

std::optional<Word> rewrite_into_subgroup(const MixedGraph& g, const std::string& apex, const Word& w,
                                          RewriteOptions options) {
  if (!in_index2_subgroup(g, apex, w)) {
    if (options.strict) throw NotInSubgroup("word has odd total exponent in " + apex);
    return std::nullopt;
  }
  const SubgroupGraphResult s = apex_subgroup_graph(g, apex);
  const std::string& y = s.new_generator;

  std::vector<Syllable> out;
  bool in_x_coset = false;
  for (const auto& syl : w.syllables) {
    const int step = syl.exponent > 0 ? 1 : -1;
    for (std::int64_t k = 0; k < std::llabs(syl.exponent); ++k) {
      if (syl.generator == apex) {
        // x from coset 1 and x^-1 from coset x emit nothing; the other two
        // close a full x^(+-2).
        if (in_x_coset == (step == 1)) append(out, y, step);
        in_x_coset = !in_x_coset;
        continue;
      }
      if (!in_x_coset) {
        append(out, syl.generator, step);
        continue;
      }
      switch (s.conjugation_table.at(syl.generator)) {
        case Conjugation::Fixed: append(out, syl.generator, step); break;
        case Conjugation::Inverted: append(out, syl.generator, -step); break;
        case Conjugation::Shifted:
          // x v x^-1 = v y^-1 and its inverse y v^-1
          if (step == 1) {
            append(out, syl.generator, 1);
            append(out, y, -1);
          } else {
            append(out, y, 1);
            append(out, syl.generator, -1);
          }
          break;
      }
    }
  }
  Word result(std::move(out));
  if (options.delta_normal_form) result = normal_form(s.delta, result);
  return result;
}

Word substitute(const SubgroupGraphResult& s, const Word& over_delta) {
  std::vector<Syllable> out;
  for (const auto& syl : over_delta.syllables) {
    auto it = s.generator_map.find(syl.generator);
    if (it == s.generator_map.end()) throw UnknownGenerator(syl.generator);
    Word image = syl.exponent > 0 ? it->second : invert(it->second);
    for (std::int64_t k = 0; k < std::llabs(syl.exponent); ++k)
      for (const auto& piece : image.syllables) append(out, piece.generator, piece.exponent);
  }
  return Word(std::move(out));
}

bool PresentationCheck::all_passed() const {
  return std::all_of(relators.begin(), relators.end(), [](const RelatorCheck& c) { return c.passed; });
}

PresentationCheck verify_subgroup_presentation(const MixedGraph& g, const std::string& apex) {
  const SubgroupGraphResult s = apex_subgroup_graph(g, apex);
  PresentationCheck report;
  for (const Edge& e : s.delta.edges()) {
    RelatorCheck c{e, relator(s.delta, e), {}, false};
    c.image = substitute(s, c.relator);
    c.passed = is_identity(g, c.image);
    report.relators.push_back(std::move(c));
  }
  return report;
}

SemidirectAction semidirect_action(const MixedGraph& g, const std::string& apex) {
  const std::size_t x = g.index_of(apex);
  if (!g.is_universal(x)) throw ApexShape("apex '" + apex + "' is not adjacent to every other vertex");
  SemidirectAction a;
  a.direct_product = true;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (v == x) continue;
    switch (g.link(x, v)) {
      case Link::Undirected: a.sign[g.name(v)] = 1; break;
      case Link::Out:
        a.sign[g.name(v)] = -1;
        a.direct_product = false;
        break;
      default:
        throw ApexShape("edge between '" + g.name(v) + "' and apex '" + apex + "' points into the apex");
    }
  }
  return a;
}

}  // namespace traag
