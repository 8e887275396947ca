#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace traag {

/// An edge record. Undirected edges store their endpoints in canonical
/// vertex order; directed edges store origin then terminus.
struct Edge {
  std::string first;
  std::string second;
  bool directed = false;

  const std::string& origin() const { return first; }
  const std::string& terminus() const { return second; }

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// How vertex i relates to vertex j, read from i's side.
enum class Link : std::uint8_t {
  None,
  Undirected,
  Out,  // i is the origin of a directed edge towards j
  In,   // j is the origin, i the terminus
};

/// Kind of the edge joining a base vertex to a cone tip.
enum class TipKind : std::uint8_t { Undirected, IntoTip };

/// A finite mixed graph: a simplicial graph whose edges are either undirected
/// or directed. Vertex declaration order is the canonical total order used by
/// every ordering-dependent operation (witnesses, normal forms, listings).
/// Immutable once built.
class MixedGraph {
 public:
  /// Validates and builds. Throws PreconditionError (or a subclass) on an
  /// empty vertex set, duplicate names, loops, unknown endpoints or repeated
  /// vertex pairs.
  MixedGraph(std::vector<std::string> vertices, const std::vector<Edge>& edges);

  std::size_t size() const noexcept { return vertices_.size(); }
  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::string& name(std::size_t i) const { return vertices_[i]; }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws UnknownVertex.
  std::size_t index_of(std::string_view name) const;
  bool has_vertex(std::string_view name) const { return find(name).has_value(); }

  Link link(std::size_t i, std::size_t j) const { return links_[i * size() + j]; }
  bool adjacent(std::size_t i, std::size_t j) const { return link(i, j) != Link::None; }
  std::size_t degree(std::size_t i) const;
  bool is_universal(std::size_t i) const { return degree(i) + 1 == size(); }

  /// Edges ordered by (smaller endpoint index, larger endpoint index).
  std::vector<Edge> edges() const;
  std::size_t edge_count() const noexcept { return edge_count_; }
  std::size_t directed_edge_count() const noexcept { return directed_count_; }

  /// The record for the edge joining `u` and `v`, if any.
  std::optional<Edge> edge_between(std::string_view u, std::string_view v) const;

  friend bool operator==(const MixedGraph& a, const MixedGraph& b) {
    return a.vertices_ == b.vertices_ && a.links_ == b.links_;
  }

 private:
  MixedGraph() = default;
  friend MixedGraph build_from_links(std::vector<std::string>, std::vector<Link>);

  std::vector<std::string> vertices_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Link> links_;
  std::size_t edge_count_ = 0;
  std::size_t directed_count_ = 0;
};

/// Same vertex set and same edge records, regardless of declaration order.
bool same_labeled_graph(const MixedGraph& a, const MixedGraph& b);

// Text format (".tg"): optional '#' comment lines, one line
// "vertices n1 n2 ...", then lines "edge u - v" or "edge u > v".
MixedGraph parse_graph(std::string_view text);
std::string serialize_graph(const MixedGraph& g);

MixedGraph underlying(const MixedGraph& g);
MixedGraph induced(const MixedGraph& g, const std::set<std::string>& subset);
MixedGraph induced(const MixedGraph& g, const std::vector<std::size_t>& subset);

/// Colliding names in `b` get the suffix "_2" (repeated until fresh).
MixedGraph disjoint_union(const MixedGraph& a, const MixedGraph& b);

/// Adds `tip` joined to every vertex of `g` by an edge of the given kind.
MixedGraph cone(const MixedGraph& g, const std::string& tip,
                const std::map<std::string, TipKind>& kinds);

std::set<std::string> link(const MixedGraph& g, std::string_view v);

/// Connected components of the underlying graph, members in canonical order,
/// components ordered by their smallest member.
std::vector<std::vector<std::string>> components(const MixedGraph& g);
std::vector<std::vector<std::size_t>> component_indices(const MixedGraph& g);

/// Number of labeled mixed graphs on n vertices: 4^(n(n-1)/2).
std::uint64_t mixed_graph_count(std::size_t n);

/// Visits every labeled mixed graph on v1..vn (1 <= n <= 5, else SizeLimit).
/// Each vertex pair independently is absent, undirected, or directed either
/// way; the first pair varies slowest.
void for_each_mixed_graph(std::size_t n, const std::function<void(const MixedGraph&)>& visit);
std::vector<MixedGraph> enumerate_mixed_graphs(std::size_t n);

/// Builds graph number `code` of the enumeration (base-4 digit per pair).
MixedGraph mixed_graph_from_code(std::size_t n, std::uint64_t code);

}  // namespace traag
