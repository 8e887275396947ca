#include "traag/classifiers.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "traag/errors.hpp"

namespace traag {

namespace {

Quad names_of(const MixedGraph& g, std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
  return {g.name(a), g.name(b), g.name(c), g.name(d)};
}

std::vector<std::vector<std::size_t>> neighbour_lists(const MixedGraph& g) {
  std::vector<std::vector<std::size_t>> nbrs(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      if (g.adjacent(i, j)) nbrs[i].push_back(j);
  return nbrs;
}

// Components of the subgraph induced on `subset` (sorted indices).
std::vector<std::vector<std::size_t>> split_components(const MixedGraph& g,
                                                       const std::vector<std::size_t>& subset) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> done(subset.size(), false);
  for (std::size_t s = 0; s < subset.size(); ++s) {
    if (done[s]) continue;
    std::vector<std::size_t> members;
    std::vector<std::size_t> stack{s};
    done[s] = true;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      members.push_back(subset[u]);
      for (std::size_t v = 0; v < subset.size(); ++v) {
        if (!done[v] && g.adjacent(subset[u], subset[v])) {
          done[v] = true;
          stack.push_back(v);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

bool universal_within(const MixedGraph& g, std::size_t w, const std::vector<std::size_t>& subset) {
  return std::all_of(subset.begin(), subset.end(),
                     [&](std::size_t v) { return v == w || g.adjacent(w, v); });
}

bool peel(const MixedGraph& g, const std::vector<std::size_t>& subset) {
  for (const auto& comp : split_components(g, subset)) {
    if (comp.size() == 1) continue;
    auto tip = std::find_if(comp.begin(), comp.end(),
                            [&](std::size_t w) { return universal_within(g, w, comp); });
    if (tip == comp.end()) return false;
    std::vector<std::size_t> rest;
    std::copy_if(comp.begin(), comp.end(), std::back_inserter(rest),
                 [&](std::size_t v) { return v != *tip; });
    if (!peel(g, rest)) return false;
  }
  return true;
}

class ConeRecognizer {
 public:
  explicit ConeRecognizer(const MixedGraph& g) : g_(g) {}

  std::optional<ConeDecomposition> run(const std::vector<std::size_t>& subset) {
    if (subset.size() == 1) return ConeDecomposition::leaf(g_.name(subset.front()));
    if (failed_.count(subset)) return std::nullopt;

    auto comps = split_components(g_, subset);
    std::optional<ConeDecomposition> result;
    if (comps.size() > 1) {
      std::vector<ConeDecomposition> parts;
      for (const auto& c : comps) {
        auto part = run(c);
        if (!part) break;
        parts.push_back(std::move(*part));
      }
      if (parts.size() == comps.size()) result = ConeDecomposition::join(std::move(parts));
    } else {
      for (std::size_t w : subset) {
        if (!admissible_tip(w, subset)) continue;
        std::vector<std::size_t> base;
        std::copy_if(subset.begin(), subset.end(), std::back_inserter(base),
                     [&](std::size_t v) { return v != w; });
        auto sub = run(base);
        if (!sub) continue;
        std::map<std::string, TipKind> kinds;
        for (std::size_t v : base)
          kinds[g_.name(v)] = g_.link(w, v) == Link::Undirected ? TipKind::Undirected : TipKind::IntoTip;
        result = ConeDecomposition::cone(std::move(*sub), g_.name(w), std::move(kinds));
        break;
      }
    }
    if (!result) failed_.insert(subset);
    return result;
  }

 private:
  bool admissible_tip(std::size_t w, const std::vector<std::size_t>& subset) const {
    return std::all_of(subset.begin(), subset.end(), [&](std::size_t v) {
      if (v == w) return true;
      Link l = g_.link(w, v);
      return l == Link::Undirected || l == Link::In;
    });
  }

  const MixedGraph& g_;
  std::set<std::vector<std::size_t>> failed_;
};

std::optional<std::vector<std::string>> find_chordless_cycle(const MixedGraph& g) {
  const std::size_t n = g.size();
  auto nbrs = neighbour_lists(g);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t a = 0; a < nbrs[v].size(); ++a) {
      for (std::size_t b = a + 1; b < nbrs[v].size(); ++b) {
        std::size_t u = nbrs[v][a], w = nbrs[v][b];
        if (g.adjacent(u, w)) continue;
        // Shortest u-w path avoiding v and the rest of its closed neighbourhood.
        std::vector<bool> blocked(n, false);
        blocked[v] = true;
        for (std::size_t x : nbrs[v]) blocked[x] = x != u && x != w;
        std::vector<std::size_t> parent(n, n);
        std::deque<std::size_t> queue{u};
        parent[u] = u;
        while (!queue.empty() && parent[w] == n) {
          std::size_t x = queue.front();
          queue.pop_front();
          for (std::size_t y : nbrs[x]) {
            if (blocked[y] || parent[y] != n) continue;
            parent[y] = x;
            queue.push_back(y);
          }
        }
        if (parent[w] == n) continue;
        std::vector<std::string> cycle{g.name(v)};
        std::vector<std::string> path;
        for (std::size_t x = w; x != u; x = parent[x]) path.push_back(g.name(x));
        path.push_back(g.name(u));
        cycle.insert(cycle.end(), path.rbegin(), path.rend());
        return cycle;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Quad> find_induced_p4(const MixedGraph& g) {
  auto nbrs = neighbour_lists(g);
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b : nbrs[a])
      for (std::size_t c : nbrs[b]) {
        if (c == a || g.adjacent(a, c)) continue;
        for (std::size_t d : nbrs[c]) {
          if (d == b || g.adjacent(b, d) || g.adjacent(a, d)) continue;
          return names_of(g, a, b, c, d);
        }
      }
  return std::nullopt;
}

std::optional<Quad> find_induced_c4(const MixedGraph& g) {
  auto nbrs = neighbour_lists(g);
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b : nbrs[a])
      for (std::size_t c : nbrs[b]) {
        if (c == a || g.adjacent(a, c)) continue;
        for (std::size_t d : nbrs[c]) {
          if (d == b || g.adjacent(b, d) || !g.adjacent(a, d)) continue;
          return names_of(g, a, b, c, d);
        }
      }
  return std::nullopt;
}

bool transitive_forest_by_peeling(const MixedGraph& g) {
  std::vector<std::size_t> all(g.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return peel(g, all);
}

TransitiveForestResult is_transitive_forest(const MixedGraph& g) {
  TransitiveForestResult r;
  if (auto p4 = find_induced_p4(g)) {
    r.witness = ForbiddenWitness{ForbiddenShape::P4, *p4};
  } else if (auto c4 = find_induced_c4(g)) {
    r.witness = ForbiddenWitness{ForbiddenShape::C4, *c4};
  }
  r.holds = !r.witness.has_value();
  if (r.holds != transitive_forest_by_peeling(g))
    throw InternalDisagreement("transitive forest: forbidden-subgraph search and peeling disagree on\n" +
                               serialize_graph(g));
  return r;
}

std::vector<std::size_t> lex_bfs_order(const MixedGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<std::size_t>> label(n);
  std::vector<bool> visited(n, false);
  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (visited[v]) continue;
      if (best == n || label[best] < label[v]) best = v;
    }
    visited[best] = true;
    order.push_back(best);
    for (std::size_t v = 0; v < n; ++v)
      if (!visited[v] && g.adjacent(best, v)) label[v].push_back(n - step);
  }
  return order;
}

bool is_perfect_elimination_order(const MixedGraph& g, const std::vector<std::size_t>& order) {
  const std::size_t n = g.size();
  if (order.size() != n) return false;
  std::vector<std::size_t> pos(n, n);
  for (std::size_t p = 0; p < n; ++p) {
    if (order[p] >= n || pos[order[p]] != n) return false;
    pos[order[p]] = p;
  }
  for (std::size_t p = 0; p < n; ++p) {
    std::vector<std::size_t> later;
    for (std::size_t u = 0; u < n; ++u)
      if (g.adjacent(order[p], u) && pos[u] > p) later.push_back(u);
    for (std::size_t a = 0; a < later.size(); ++a)
      for (std::size_t b = a + 1; b < later.size(); ++b)
        if (!g.adjacent(later[a], later[b])) return false;
  }
  return true;
}

ChordalResult is_chordal(const MixedGraph& g) {
  ChordalResult r;
  auto order = lex_bfs_order(g);
  std::reverse(order.begin(), order.end());
  if (is_perfect_elimination_order(g, order)) {
    r.holds = true;
    for (std::size_t i : order) r.elimination_order.push_back(g.name(i));
    return r;
  }
  auto cycle = find_chordless_cycle(g);
  if (!cycle)
    throw InternalDisagreement("lex-BFS rejected a graph with no chordless cycle:\n" + serialize_graph(g));
  r.chordless_cycle = std::move(*cycle);
  return r;
}

ConeDecomposition ConeDecomposition::leaf(std::string v) {
  ConeDecomposition d;
  d.node = Node::Leaf;
  d.vertex = std::move(v);
  return d;
}

ConeDecomposition ConeDecomposition::join(std::vector<ConeDecomposition> parts) {
  ConeDecomposition d;
  d.node = Node::Union;
  d.children = std::move(parts);
  return d;
}

ConeDecomposition ConeDecomposition::cone(ConeDecomposition base, std::string tip,
                                          std::map<std::string, TipKind> kinds) {
  ConeDecomposition d;
  d.node = Node::Cone;
  d.vertex = std::move(tip);
  d.children.push_back(std::move(base));
  d.kinds = std::move(kinds);
  return d;
}

MixedGraph replay(const ConeDecomposition& d) {
  switch (d.node) {
    case ConeDecomposition::Node::Leaf:
      return MixedGraph({d.vertex}, {});
    case ConeDecomposition::Node::Union: {
      if (d.children.empty()) throw PreconditionError("union node without members");
      MixedGraph acc = replay(d.children.front());
      for (std::size_t i = 1; i < d.children.size(); ++i) {
        MixedGraph part = replay(d.children[i]);
        for (const auto& v : part.vertices())
          if (acc.has_vertex(v)) throw DuplicateVertex(v);
        acc = disjoint_union(acc, part);
      }
      return acc;
    }
    case ConeDecomposition::Node::Cone:
      if (d.children.size() != 1) throw PreconditionError("cone node needs exactly one base");
      return cone(replay(d.children.front()), d.vertex, d.kinds);
  }
  throw PreconditionError("corrupt decomposition node");
}

std::optional<ConeDecomposition> is_in_class_r(const MixedGraph& g) {
  std::vector<std::size_t> all(g.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return ConeRecognizer(g).run(all);
}

bool verify_p4(const MixedGraph& g, const Quad& q) {
  std::array<std::size_t, 4> i{};
  for (std::size_t k = 0; k < 4; ++k) {
    auto f = g.find(q[k]);
    if (!f) return false;
    i[k] = *f;
  }
  if (std::set<std::size_t>(i.begin(), i.end()).size() != 4) return false;
  return g.adjacent(i[0], i[1]) && g.adjacent(i[1], i[2]) && g.adjacent(i[2], i[3]) &&
         !g.adjacent(i[0], i[2]) && !g.adjacent(i[1], i[3]) && !g.adjacent(i[0], i[3]);
}

bool verify_c4(const MixedGraph& g, const Quad& q) {
  std::array<std::size_t, 4> i{};
  for (std::size_t k = 0; k < 4; ++k) {
    auto f = g.find(q[k]);
    if (!f) return false;
    i[k] = *f;
  }
  if (std::set<std::size_t>(i.begin(), i.end()).size() != 4) return false;
  return g.adjacent(i[0], i[1]) && g.adjacent(i[1], i[2]) && g.adjacent(i[2], i[3]) &&
         g.adjacent(i[3], i[0]) && !g.adjacent(i[0], i[2]) && !g.adjacent(i[1], i[3]);
}

bool verify_chordless_cycle(const MixedGraph& g, const std::vector<std::string>& cycle) {
  const std::size_t k = cycle.size();
  if (k < 4) return false;
  std::vector<std::size_t> idx;
  for (const auto& v : cycle) {
    auto f = g.find(v);
    if (!f) return false;
    idx.push_back(*f);
  }
  if (std::set<std::size_t>(idx.begin(), idx.end()).size() != k) return false;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      bool consecutive = b == a + 1 || (a == 0 && b == k - 1);
      if (g.adjacent(idx[a], idx[b]) != consecutive) return false;
    }
  }
  return true;
}

}  // namespace traag
