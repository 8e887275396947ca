// Shared fixtures, generators and brute-force oracles for the test suites.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "traag/classifiers.hpp"
#include "traag/mixed_graph.hpp"
#include "traag/word.hpp"

namespace traag::testing {

inline MixedGraph graph(const std::string& text) { return parse_graph(text); }

inline MixedGraph p4() { return graph("vertices a b c d\nedge a - b\nedge b - c\nedge c - d"); }
inline MixedGraph c4() { return graph("vertices a b c d\nedge a - b\nedge b - c\nedge c - d\nedge d - a"); }
inline MixedGraph c5() {
  return graph("vertices a b c d e\nedge a - b\nedge b - c\nedge c - d\nedge d - e\nedge e - a");
}
inline MixedGraph klein() { return graph("vertices a b\nedge a > b"); }
inline MixedGraph z2() { return graph("vertices a b\nedge a - b"); }
inline MixedGraph mixed_square() {
  return graph("vertices a b c d\nedge a > b\nedge b - c\nedge c > d\nedge d - a");
}

inline Word w(const std::string& text) { return parse_word(text); }

/// Each vertex pair independently: absent, undirected, or directed either way.
inline MixedGraph random_graph(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("v" + std::to_string(i));
  std::vector<Edge> edges;
  std::uniform_int_distribution<int> kind(0, 3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      switch (kind(rng)) {
        case 0: break;
        case 1: edges.push_back({names[i], names[j], false}); break;
        case 2: edges.push_back({names[i], names[j], true}); break;
        case 3: edges.push_back({names[j], names[i], true}); break;
      }
    }
  return MixedGraph(names, edges);
}

/// Random word of exactly `letters` letters (not reduced).
inline Word random_word(std::mt19937_64& rng, const MixedGraph& g, std::size_t letters) {
  std::uniform_int_distribution<std::size_t> gen(0, g.size() - 1);
  std::bernoulli_distribution neg(0.5);
  Word out;
  for (std::size_t k = 0; k < letters; ++k) out.syllables.push_back({g.name(gen(rng)), neg(rng) ? -1 : 1});
  return out;
}

inline Word random_word_upto(std::mt19937_64& rng, const MixedGraph& g, std::size_t max_letters) {
  std::uniform_int_distribution<std::size_t> len(0, max_letters);
  return random_word(rng, g, len(rng));
}

/// Builds a random class-R graph on `n` fresh vertices by unions and cones.
class RGraphBuilder {
 public:
  explicit RGraphBuilder(std::mt19937_64& rng) : rng_(rng) {}

  MixedGraph build(std::size_t n) {
    if (n == 1) return MixedGraph({fresh()}, {});
    std::bernoulli_distribution use_cone(0.55);
    if (use_cone(rng_)) {
      MixedGraph base = build(n - 1);
      std::map<std::string, TipKind> kinds;
      std::bernoulli_distribution into(0.5);
      for (const auto& v : base.vertices()) kinds[v] = into(rng_) ? TipKind::IntoTip : TipKind::Undirected;
      return cone(base, fresh(), kinds);
    }
    std::uniform_int_distribution<std::size_t> split(1, n - 1);
    std::size_t k = split(rng_);
    MixedGraph left = build(k);
    MixedGraph right = build(n - k);
    return disjoint_union(left, right);
  }

 private:
  std::string fresh() { return "u" + std::to_string(next_++); }

  std::mt19937_64& rng_;
  std::size_t next_ = 0;
};

/// True iff some vertex subset of size >= 4 induces a cycle. Exhaustive.
inline bool has_induced_long_cycle(const MixedGraph& g) {
  const std::size_t n = g.size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    if (s.size() < 4) continue;
    bool all_degree_two = true;
    for (std::size_t a : s) {
      std::size_t d = 0;
      for (std::size_t b : s) d += g.adjacent(a, b) ? 1 : 0;
      all_degree_two = all_degree_two && d == 2;
    }
    if (!all_degree_two) continue;
    // 2-regular: a cycle iff connected
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{s.front()};
    seen[s.front()] = true;
    std::size_t reached = 0;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      ++reached;
      for (std::size_t v : s)
        if (!seen[v] && g.adjacent(u, v)) {
          seen[v] = true;
          stack.push_back(v);
        }
    }
    if (reached == s.size()) return true;
  }
  return false;
}

/// Lexicographically least ordered 4-tuple satisfying `pred`, by brute force.
template <typename Pred>
std::optional<Quad> brute_force_quad(const MixedGraph& g, Pred pred) {
  const std::size_t n = g.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
          Quad q{g.name(a), g.name(b), g.name(c), g.name(d)};
          if (pred(g, q)) return q;
        }
  return std::nullopt;
}

/// Copy of `g` with every edge kind drawn at random (adjacency unchanged).
inline MixedGraph reorient(std::mt19937_64& rng, const MixedGraph& g) {
  std::vector<Edge> edges;
  std::uniform_int_distribution<int> kind(0, 2);
  for (Edge e : g.edges()) {
    int k = kind(rng);
    if (k == 0) {
      e.directed = false;
    } else {
      e.directed = true;
      if (k == 2) std::swap(e.first, e.second);
    }
    edges.push_back(e);
  }
  return MixedGraph(g.vertices(), edges);
}

/// The first shortlex-least member of a set of words.
inline Word shortlex_min(const MixedGraph& g, const std::set<Word>& words) {
  return *std::min_element(words.begin(), words.end(),
                           [&](const Word& a, const Word& b) { return shortlex_less(g, a, b); });
}

}  // namespace traag::testing
