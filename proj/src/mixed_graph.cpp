#include "traag/mixed_graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "traag/errors.hpp"

namespace traag {

namespace {

bool valid_name(std::string_view s) {
  if (s.empty()) return false;
  auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(s.front())) return false;
  return std::all_of(s.begin() + 1, s.end(),
                     [&](char c) { return alpha(c) || digit(c) || c == '_'; });
}

Link reverse(Link l) {
  switch (l) {
    case Link::Out: return Link::In;
    case Link::In: return Link::Out;
    default: return l;
  }
}

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

MixedGraph build_from_links(std::vector<std::string> vertices, std::vector<Link> links) {
  MixedGraph g;
  g.vertices_ = std::move(vertices);
  g.links_ = std::move(links);
  const std::size_t n = g.vertices_.size();
  for (std::size_t i = 0; i < n; ++i) g.index_.emplace(g.vertices_[i], i);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Link l = g.links_[i * n + j];
      if (l == Link::None) continue;
      ++g.edge_count_;
      if (l != Link::Undirected) ++g.directed_count_;
    }
  }
  return g;
}

MixedGraph::MixedGraph(std::vector<std::string> vertices, const std::vector<Edge>& edges) {
  if (vertices.empty()) throw PreconditionError("a mixed graph needs at least one vertex");
  vertices_ = std::move(vertices);
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!valid_name(vertices_[i]))
      throw PreconditionError("invalid vertex name '" + vertices_[i] + "'");
    if (!index_.emplace(vertices_[i], i).second) throw DuplicateVertex(vertices_[i]);
  }
  links_.assign(n * n, Link::None);
  for (const Edge& e : edges) {
    std::size_t u = index_of(e.first);
    std::size_t v = index_of(e.second);
    if (u == v) throw PreconditionError("loop at vertex '" + e.first + "'");
    if (links_[u * n + v] != Link::None)
      throw PreconditionError("more than one edge between '" + e.first + "' and '" +
                              e.second + "'");
    Link l = e.directed ? Link::Out : Link::Undirected;
    links_[u * n + v] = l;
    links_[v * n + u] = reverse(l);
    ++edge_count_;
    if (e.directed) ++directed_count_;
  }
}

std::optional<std::size_t> MixedGraph::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t MixedGraph::index_of(std::string_view name) const {
  auto i = find(name);
  if (!i) throw UnknownVertex(std::string(name));
  return *i;
}

std::size_t MixedGraph::degree(std::size_t i) const {
  std::size_t d = 0;
  for (std::size_t j = 0; j < size(); ++j) d += adjacent(i, j) ? 1 : 0;
  return d;
}

std::vector<Edge> MixedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i + 1; j < size(); ++j) {
      switch (link(i, j)) {
        case Link::None: break;
        case Link::Undirected: out.push_back({vertices_[i], vertices_[j], false}); break;
        case Link::Out: out.push_back({vertices_[i], vertices_[j], true}); break;
        case Link::In: out.push_back({vertices_[j], vertices_[i], true}); break;
      }
    }
  }
  return out;
}

std::optional<Edge> MixedGraph::edge_between(std::string_view u, std::string_view v) const {
  std::size_t i = index_of(u), j = index_of(v);
  if (i > j) std::swap(i, j);
  switch (link(i, j)) {
    case Link::None: return std::nullopt;
    case Link::Undirected: return Edge{vertices_[i], vertices_[j], false};
    case Link::Out: return Edge{vertices_[i], vertices_[j], true};
    case Link::In: return Edge{vertices_[j], vertices_[i], true};
  }
  return std::nullopt;
}

bool same_labeled_graph(const MixedGraph& a, const MixedGraph& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto j = b.find(a.name(i));
    if (!j) return false;
    for (std::size_t k = 0; k < a.size(); ++k) {
      auto m = b.find(a.name(k));
      if (!m || a.link(i, k) != b.link(*j, *m)) return false;
    }
  }
  return true;
}

MixedGraph parse_graph(std::string_view text) {
  std::optional<std::vector<std::string>> vertices;
  std::vector<Edge> edges;
  std::set<std::pair<std::string, std::string>> seen_pairs;
  std::set<std::string> vertex_set;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (tokens.front() == "vertices") {
      if (vertices) throw ParseError(line_no, "second 'vertices' line");
      if (tokens.size() < 2) throw ParseError(line_no, "'vertices' needs at least one name");
      vertices.emplace();
      for (std::size_t k = 1; k < tokens.size(); ++k) {
        if (!valid_name(tokens[k])) throw ParseError(line_no, "invalid vertex name '" + tokens[k] + "'");
        if (!vertex_set.insert(tokens[k]).second)
          throw ParseError(line_no, "duplicate vertex '" + tokens[k] + "'");
        vertices->push_back(tokens[k]);
      }
    } else if (tokens.front() == "edge") {
      if (!vertices) throw ParseError(line_no, "'edge' before 'vertices'");
      if (tokens.size() != 4 || (tokens[2] != "-" && tokens[2] != ">"))
        throw ParseError(line_no, "expected 'edge u - v' or 'edge u > v'");
      const std::string& u = tokens[1];
      const std::string& v = tokens[3];
      for (const auto* endpoint : {&u, &v}) {
        if (!vertex_set.count(*endpoint))
          throw ParseError(line_no, "unknown vertex '" + *endpoint + "'");
      }
      if (u == v) throw ParseError(line_no, "loop at vertex '" + u + "'");
      auto key = std::minmax(u, v);
      if (!seen_pairs.emplace(key.first, key.second).second)
        throw ParseError(line_no, "second edge between '" + u + "' and '" + v + "'");
      edges.push_back({u, v, tokens[2] == ">"});
    } else {
      throw ParseError(line_no, "unrecognised line starting with '" + tokens.front() + "'");
    }
    if (end == text.size()) break;
  }
  if (!vertices) throw ParseError(0, "missing 'vertices' line");
  return MixedGraph(std::move(*vertices), edges);
}

std::string serialize_graph(const MixedGraph& g) {
  std::string out = "vertices";
  for (const auto& v : g.vertices()) out += " " + v;
  for (const Edge& e : g.edges()) {
    out += "\nedge " + e.first + (e.directed ? " > " : " - ") + e.second;
  }
  return out;
}

MixedGraph underlying(const MixedGraph& g) {
  std::vector<Link> links(g.size() * g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      links[i * g.size() + j] = g.adjacent(i, j) ? Link::Undirected : Link::None;
  return build_from_links(g.vertices(), std::move(links));
}

MixedGraph induced(const MixedGraph& g, const std::vector<std::size_t>& subset) {
  std::vector<std::size_t> idx = subset;
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  if (idx.empty()) throw PreconditionError("induced subgraph on an empty vertex set");
  const std::size_t m = idx.size();
  std::vector<std::string> names;
  names.reserve(m);
  for (std::size_t i : idx) {
    if (i >= g.size()) throw PreconditionError("vertex index out of range");
    names.push_back(g.name(i));
  }
  std::vector<Link> links(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) links[a * m + b] = g.link(idx[a], idx[b]);
  return build_from_links(std::move(names), std::move(links));
}

MixedGraph induced(const MixedGraph& g, const std::set<std::string>& subset) {
  std::vector<std::size_t> idx;
  idx.reserve(subset.size());
  for (const auto& s : subset) idx.push_back(g.index_of(s));
  return induced(g, idx);
}

MixedGraph disjoint_union(const MixedGraph& a, const MixedGraph& b) {
  std::vector<std::string> names = a.vertices();
  std::set<std::string> taken(names.begin(), names.end());
  taken.insert(b.vertices().begin(), b.vertices().end());
  std::map<std::string, std::string> rename;
  for (const auto& v : b.vertices()) {
    std::string fresh = v;
    if (a.has_vertex(v)) {
      do {
        fresh += "_2";
      } while (taken.count(fresh));
      taken.insert(fresh);
    }
    rename[v] = fresh;
    names.push_back(fresh);
  }
  std::vector<Edge> edges = a.edges();
  for (Edge e : b.edges()) {
    e.first = rename[e.first];
    e.second = rename[e.second];
    edges.push_back(std::move(e));
  }
  return MixedGraph(std::move(names), edges);
}

MixedGraph cone(const MixedGraph& g, const std::string& tip,
                const std::map<std::string, TipKind>& kinds) {
  if (g.has_vertex(tip)) throw DuplicateVertex(tip);
  std::vector<std::string> names = g.vertices();
  names.push_back(tip);
  std::vector<Edge> edges = g.edges();
  for (const auto& v : g.vertices()) {
    auto it = kinds.find(v);
    if (it == kinds.end()) throw MissingKind(v);
    edges.push_back({v, tip, it->second == TipKind::IntoTip});
  }
  return MixedGraph(std::move(names), edges);
}

std::set<std::string> link(const MixedGraph& g, std::string_view v) {
  std::size_t i = g.index_of(v);
  std::set<std::string> out;
  for (std::size_t j = 0; j < g.size(); ++j)
    if (g.adjacent(i, j)) out.insert(g.name(j));
  return out;
}

std::vector<std::vector<std::size_t>> component_indices(const MixedGraph& g) {
  const std::size_t n = g.size();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    int id = static_cast<int>(out.size());
    std::vector<std::size_t> members;
    std::vector<std::size_t> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      members.push_back(u);
      for (std::size_t v = 0; v < n; ++v) {
        if (comp[v] < 0 && g.adjacent(u, v)) {
          comp[v] = id;
          stack.push_back(v);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

std::vector<std::vector<std::string>> components(const MixedGraph& g) {
  std::vector<std::vector<std::string>> out;
  for (const auto& c : component_indices(g)) {
    std::vector<std::string> names;
    for (std::size_t i : c) names.push_back(g.name(i));
    out.push_back(std::move(names));
  }
  return out;
}

std::uint64_t mixed_graph_count(std::size_t n) {
  return std::uint64_t{1} << (n * (n - 1));  // 4^(n(n-1)/2)
}

MixedGraph mixed_graph_from_code(std::size_t n, std::uint64_t code) {
  if (n < 1 || n > 5) throw SizeLimit("mixed graph enumeration supports 1 <= n <= 5");
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("v" + std::to_string(i));
  std::vector<Link> links(n * n, Link::None);
  const std::size_t pairs = n * (n - 1) / 2;
  std::size_t p = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++p) {
      unsigned digit = (code >> (2 * (pairs - 1 - p))) & 3u;
      static constexpr Link kFromDigit[] = {Link::None, Link::Undirected, Link::Out, Link::In};
      links[i * n + j] = kFromDigit[digit];
      links[j * n + i] = reverse(kFromDigit[digit]);
    }
  }
  return build_from_links(std::move(names), std::move(links));
}

void for_each_mixed_graph(std::size_t n, const std::function<void(const MixedGraph&)>& visit) {
  if (n < 1 || n > 5) throw SizeLimit("mixed graph enumeration supports 1 <= n <= 5");
  const std::uint64_t total = mixed_graph_count(n);
  for (std::uint64_t code = 0; code < total; ++code) visit(mixed_graph_from_code(n, code));
}

std::vector<MixedGraph> enumerate_mixed_graphs(std::size_t n) {
  std::vector<MixedGraph> out;
  for_each_mixed_graph(n, [&](const MixedGraph& g) { out.push_back(g); });
  return out;
}

}  // namespace traag
