// Acceptance suite: one PASS/FAIL line per criterion, each with its time
// budget. Every count, seed and tolerance is fixed below.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "support.hpp"
#include "traag/report.hpp"
#include "traag/transforms.hpp"

using namespace traag;
using namespace traag::testing;

namespace {

// Collects failures; keeps the first few messages for the log.
class Tally {
 public:
  void check(bool ok, const std::function<std::string()>& what) {
    ++checks_;
    if (ok) return;
    if (failures_++ < 5) messages_.push_back(what());
  }
  std::size_t checks() const { return checks_; }
  std::size_t failures() const { return failures_; }
  const std::vector<std::string>& messages() const { return messages_; }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::vector<std::string> messages_;
};

struct Criterion {
  int number;
  std::string name;
  double budget_seconds;
  std::function<void(Tally&)> body;
};

std::vector<std::size_t> indices(const MixedGraph& g, const std::vector<std::string>& names) {
  std::vector<std::size_t> out;
  for (const auto& v : names) out.push_back(g.index_of(v));
  return out;
}

std::string show(const MixedGraph& g) { return serialize_graph(g); }
std::string show(const MixedGraph& g, const Word& x) { return serialize_graph(g) + "\nword: " + serialize_word(x); }

// Classifier agreement, witness re-verification and the implication chain.
void check_classifiers(Tally& t, const MixedGraph& g) {
  auto tf = is_transitive_forest(g);
  t.check(tf.holds == transitive_forest_by_peeling(g), [&] { return "transitive forest algorithms differ\n" + show(g); });
  if (tf.witness) {
    const auto& w = *tf.witness;
    bool ok = w.shape == ForbiddenShape::P4 ? verify_p4(g, w.vertices) : verify_c4(g, w.vertices);
    t.check(ok, [&] { return "forbidden witness does not verify\n" + show(g); });
  }
  t.check(tf.holds != tf.witness.has_value(), [&] { return "witness presence mismatch\n" + show(g); });

  auto ch = is_chordal(g);
  if (ch.holds)
    t.check(is_perfect_elimination_order(g, indices(g, ch.elimination_order)),
            [&] { return "elimination order does not verify\n" + show(g); });
  else
    t.check(verify_chordless_cycle(g, ch.chordless_cycle), [&] { return "chordless cycle does not verify\n" + show(g); });

  auto r = is_in_class_r(g);
  if (r) t.check(same_labeled_graph(replay(*r), g), [&] { return "decomposition does not replay\n" + show(g); });
  t.check(!r || tf.holds, [&] { return "class R but not a transitive forest\n" + show(g); });
  t.check(!tf.holds || ch.holds, [&] { return "transitive forest but not chordal\n" + show(g); });
}

void criterion1(Tally& t) {
  for_each_mixed_graph(4, [&](const MixedGraph& g) { check_classifiers(t, g); });
  std::mt19937_64 rng(1001);
  std::uniform_int_distribution<std::size_t> size(5, 7);
  for (int i = 0; i < 1000; ++i) check_classifiers(t, random_graph(rng, size(rng)));
}

void criterion2(Tally& t) {
  const std::size_t n = 6;
  std::vector<std::string> names{"a", "b", "c", "d", "e", "f"};
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (mask & (1u << k)) edges.push_back({names[pairs[k].first], names[pairs[k].second], false});
    MixedGraph g(names, edges);
    bool fast = is_chordal(g).holds;
    t.check(fast == !has_induced_long_cycle(g), [&] { return "chordality mismatch\n" + show(g); });
  }
}

// One random relation application: relator insertion, free insertion of
// x x^-1, or a single swap of adjacent syllables.
Word apply_relation(std::mt19937_64& rng, const MixedGraph& g, const Word& x) {
  std::uniform_int_distribution<int> move(0, 2);
  std::uniform_int_distribution<std::size_t> at(0, x.size());
  auto insert = [&](const Word& piece) {
    std::size_t p = at(rng);
    Word out;
    out.syllables.assign(x.syllables.begin(), x.syllables.begin() + static_cast<std::ptrdiff_t>(p));
    out.syllables.insert(out.syllables.end(), piece.syllables.begin(), piece.syllables.end());
    out.syllables.insert(out.syllables.end(), x.syllables.begin() + static_cast<std::ptrdiff_t>(p), x.syllables.end());
    return out;
  };
  int m = move(rng);
  auto edges = g.edges();
  if (m == 0 && !edges.empty()) {
    Word r = relator(g, edges[rng() % edges.size()]);
    return insert(rng() % 2 ? r : invert(r));
  }
  if (m == 1 || edges.empty()) {
    std::string v = g.name(rng() % g.size());
    return insert(Word{{v, 1}, {v, -1}});
  }
  Word reduced = free_reduce(x);
  std::vector<std::size_t> spots;
  for (std::size_t p = 0; p + 1 < reduced.size(); ++p)
    if (g.adjacent(g.index_of(reduced[p].generator), g.index_of(reduced[p + 1].generator))) spots.push_back(p);
  if (spots.empty()) return insert(Word{{g.name(0), -1}, {g.name(0), 1}});
  return *swap_adjacent(g, reduced, spots[rng() % spots.size()]);
}

void criterion3(Tally& t) {
  std::mt19937_64 rng(3003);
  std::uniform_int_distribution<std::uint64_t> code(0, mixed_graph_count(4) - 1);
  for (int i = 0; i < 500; ++i) {
    auto g = mixed_graph_from_code(4, code(rng));
    for (const Edge& e : g.edges()) {
      Word r = relator(g, e);
      t.check(normal_form(g, r).empty(), [&] { return "relator does not vanish\n" + show(g, r); });
      t.check(normal_form(g, invert(r)).empty(), [&] { return "inverse relator does not vanish\n" + show(g, r); });
      std::vector<Syllable> s = r.syllables;
      for (std::size_t k = 1; k < s.size(); ++k) {
        std::rotate(s.begin(), s.begin() + 1, s.end());
        t.check(normal_form(g, Word(s)).empty(), [&] { return "rotated relator does not vanish\n" + show(g, Word(s)); });
      }
    }
    for (int k = 0; k < 200; ++k) {
      Word x = random_word_upto(rng, g, 6);
      Word y = apply_relation(rng, g, x);
      t.check(equals(g, x, y), [&] { return "relation application changed the element\n" + show(g, x); });
      Word nf = normal_form(g, x);
      for (const auto& member : bfs_equivalence_class(g, x, 8))
        t.check(normal_form(g, member) == nf, [&] { return "swap class with two normal forms\n" + show(g, member); });
    }
  }
}

void criterion4(Tally& t) {
  std::mt19937_64 rng(4004);
  std::uniform_int_distribution<std::size_t> size(1, 5);
  for (int i = 0; i < 2000; ++i) {
    auto g = random_graph(rng, size(rng));
    auto a = underlying(g);
    // even split between arbitrary words and words that are trivial in A
    Word x = random_word_upto(rng, g, 6);
    if (i % 2) {
      Word half = random_word_upto(rng, g, 3);
      x = concat(half, invert(normal_form(a, half)));
    }
    bool trivial_a = is_identity(a, x);
    bool trivial_t = is_identity(g, square_map(x));
    t.check(trivial_a == trivial_t, [&] { return "square map does not preserve triviality\n" + show(g, x); });
    Word nf_a = normal_form(a, x);
    Word sq = square_map(nf_a);
    t.check(normal_form(g, sq) == sq, [&] { return "square of a normal form is not normal\n" + show(g, nf_a); });
  }
}

Word predicted_conjugate(Conjugation c, const std::string& v, const std::string& x) {
  switch (c) {
    case Conjugation::Fixed: return Word{{v, 1}};
    case Conjugation::Inverted: return Word{{v, -1}};
    case Conjugation::Shifted: return Word{{v, 1}, {x, -2}};
  }
  return {};
}

void check_star(Tally& t, std::mt19937_64& rng, const MixedGraph& g, const std::string& x) {
  auto check = verify_subgroup_presentation(g, x);
  t.check(check.all_passed(), [&] { return "subgroup relator fails\n" + show(g); });

  auto s = apex_subgroup_graph(g, x);
  for (const auto& [v, c] : s.conjugation_table)
    t.check(equals(g, conjugate(Word{{v, 1}}, Word{{x, 1}}), predicted_conjugate(c, v, x)),
            [&] { return "conjugation prediction fails for " + v + "\n" + show(g); });

  for (int k = 0; k < 50; ++k) {
    Word u = random_word_upto(rng, g, 6);
    if (!in_index2_subgroup(g, x, u)) u = concat(u, Word{{x, 1}});
    auto r = rewrite_into_subgroup(g, x, u);
    t.check(r.has_value(), [&] { return "even word rejected\n" + show(g, u); });
    if (!r) continue;
    t.check(equals(g, substitute(s, *r), u), [&] { return "rewrite does not round-trip\n" + show(g, u); });
    auto nf = rewrite_into_subgroup(g, x, u, {true, true});
    t.check(nf && normal_form(s.delta, *nf) == *nf && equals(g, substitute(s, *nf), u),
            [&] { return "normalized rewrite does not round-trip\n" + show(g, u); });
  }
}

void criterion5(Tally& t) {
  std::mt19937_64 rng(5005);
  for (std::size_t leaves = 1; leaves <= 5; ++leaves) {
    std::vector<std::string> names{"x"};
    for (std::size_t i = 1; i <= leaves; ++i) names.push_back("v" + std::to_string(i));
    std::size_t total = 1;
    for (std::size_t i = 0; i < leaves; ++i) total *= 3;
    for (std::size_t assignment = 0; assignment < total; ++assignment) {
      std::vector<Edge> edges;
      std::size_t code = assignment;
      for (std::size_t i = 1; i <= leaves; ++i, code /= 3) {
        switch (code % 3) {
          case 0: edges.push_back({"x", names[i], false}); break;
          case 1: edges.push_back({"x", names[i], true}); break;
          case 2: edges.push_back({names[i], "x", true}); break;
        }
      }
      check_star(t, rng, MixedGraph(names, edges), "x");
    }
  }
  std::uniform_int_distribution<std::size_t> size(1, 5);
  for (int i = 0; i < 200; ++i) {
    auto base = random_graph(rng, size(rng));
    std::map<std::string, TipKind> kinds;
    for (const auto& v : base.vertices()) kinds[v] = TipKind::Undirected;
    check_star(t, rng, reorient(rng, cone(base, "x", kinds)), "x");
  }
}

void criterion6(Tally& t) {
  std::mt19937_64 rng(6006);
  std::uniform_int_distribution<std::size_t> size(1, 9);
  for (int i = 0; i < 500; ++i) {
    RGraphBuilder build(rng);
    auto g = build.build(size(rng));
    auto d = is_in_class_r(g);
    t.check(d.has_value(), [&] { return "generated graph not recognized\n" + show(g); });
    if (d) t.check(same_labeled_graph(replay(*d), g), [&] { return "replay differs\n" + show(g); });
  }
  auto out_star = graph("vertices w a b c\nedge w > a\nedge w - b\nedge w - c");
  for (const auto& g : {p4(), c4(), out_star})
    t.check(!is_in_class_r(g), [&] { return "non-member accepted\n" + show(g); });
}

void criterion7(Tally& t) {
  auto expect = [&](const std::string& label, bool ok) { t.check(ok, [&] { return label; }); };
  auto p = analyze(p4());
  expect("P4 lerf", !p.lerf);
  expect("P4 coherent", p.coherent);
  expect("P4 subgroup", p.subgroup_membership == Verdict::Decidable);
  expect("P4 rational", p.rational_membership == Verdict::Undecidable);

  auto c = analyze(c4());
  expect("C4 lerf", !c.lerf);
  expect("C4 chordal", !c.chordal.holds);
  expect("C4 subgroup", c.subgroup_membership == Verdict::Undecidable);

  auto k = analyze(klein());
  expect("Klein lerf", k.lerf);
  expect("Klein class R", k.in_class_r.has_value());
  expect("Klein subgroup", k.subgroup_membership == Verdict::Decidable);
  expect("Klein submonoid", k.submonoid_membership == Verdict::Decidable);
  expect("Klein rational", k.rational_membership == Verdict::Decidable);

  auto z = analyze(z2());
  expect("Z2 lerf", z.lerf == k.lerf);
  expect("Z2 coherent", z.coherent == k.coherent);
  expect("Z2 class R", z.in_class_r.has_value() == k.in_class_r.has_value());
  expect("Z2 subgroup", z.subgroup_membership == k.subgroup_membership);
  expect("Z2 submonoid", z.submonoid_membership == k.submonoid_membership);
  expect("Z2 rational", z.rational_membership == k.rational_membership);
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "classifier agreement (4096 + 1000 graphs)", 30, criterion1},
      {2, "chordality vs induced-cycle search (32768 graphs)", 60, criterion2},
      {3, "word engine soundness (500 graphs x 200 words)", 300, criterion3},
      {4, "square embedding (2000 pairs)", 120, criterion4},
      {5, "index-2 transform on stars", 300, criterion5},
      {6, "class R generative testing (500 graphs)", 30, criterion6},
      {7, "canonical verdict table", 5, criterion7},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Tally t;
    auto start = std::chrono::steady_clock::now();
    std::string crash;
    try {
      c.body(t);
    } catch (const std::exception& e) {
      crash = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = crash.empty() && t.failures() == 0 && secs < c.budget_seconds;
    failed += ok ? 0 : 1;
    char line[256];
    std::snprintf(line, sizeof line, "criterion %d: %s  %s  checks=%zu failures=%zu time=%.2fs budget=%.0fs",
                  c.number, ok ? "PASS" : "FAIL", c.name.c_str(), t.checks(), t.failures(), secs, c.budget_seconds);
    std::cout << line << std::endl;
    if (!crash.empty()) std::cout << "  exception: " << crash << "\n";
    for (const auto& m : t.messages()) std::cout << "  " << m << "\n";
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
