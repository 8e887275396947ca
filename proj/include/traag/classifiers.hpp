#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "traag/mixed_graph.hpp"

namespace traag {

using Quad = std::array<std::string, 4>;

/// Lexicographically least (a,b,c,d) inducing the path a-b-c-d in the
/// underlying graph. Edge directions are ignored.
std::optional<Quad> find_induced_p4(const MixedGraph& g);

/// Lexicographically least (a,b,c,d) inducing the 4-cycle a-b-c-d-a.
std::optional<Quad> find_induced_c4(const MixedGraph& g);

enum class ForbiddenShape { P4, C4 };

struct ForbiddenWitness {
  ForbiddenShape shape;
  Quad vertices;
};

struct TransitiveForestResult {
  bool holds = false;
  std::optional<ForbiddenWitness> witness;  // set iff !holds; P4 preferred over C4
};

/// Forbidden-subgraph search cross-checked against universal-vertex peeling.
/// Throws InternalDisagreement if the two ever differ.
TransitiveForestResult is_transitive_forest(const MixedGraph& g);

/// Recursive characterisation on its own: every connected induced subgraph
/// reached by peeling one universal vertex per component must have one.
bool transitive_forest_by_peeling(const MixedGraph& g);

struct ChordalResult {
  bool holds = false;
  std::vector<std::string> elimination_order;  // perfect elimination ordering when chordal
  std::vector<std::string> chordless_cycle;    // induced cycle of length >= 4 otherwise
};

/// Lexicographic breadth-first search order of the underlying graph
/// (first visited first), ties broken by canonical order.
std::vector<std::size_t> lex_bfs_order(const MixedGraph& g);

/// True iff every vertex's neighbours later in `order` form a clique.
bool is_perfect_elimination_order(const MixedGraph& g, const std::vector<std::size_t>& order);

ChordalResult is_chordal(const MixedGraph& g);

/// Derivation tree witnessing membership in the class generated from single
/// vertices by disjoint unions and cones whose tip edges are undirected or
/// point into the tip.
struct ConeDecomposition {
  enum class Node { Leaf, Union, Cone };

  Node node = Node::Leaf;
  std::string vertex;                        // leaf vertex, or cone tip
  std::vector<ConeDecomposition> children;   // union members, or the single cone base
  std::map<std::string, TipKind> kinds;      // cone only: base vertex -> tip edge kind

  static ConeDecomposition leaf(std::string v);
  static ConeDecomposition join(std::vector<ConeDecomposition> parts);
  static ConeDecomposition cone(ConeDecomposition base, std::string tip,
                                std::map<std::string, TipKind> kinds);

  friend bool operator==(const ConeDecomposition&, const ConeDecomposition&) = default;
};

/// Rebuilds the graph a decomposition describes.
MixedGraph replay(const ConeDecomposition& d);

/// Backtracks over every admissible tip; returns a decomposition iff one exists.
std::optional<ConeDecomposition> is_in_class_r(const MixedGraph& g);

// Definition-level checks used to re-verify witnesses.
bool verify_p4(const MixedGraph& g, const Quad& q);
bool verify_c4(const MixedGraph& g, const Quad& q);
bool verify_chordless_cycle(const MixedGraph& g, const std::vector<std::string>& cycle);

}  // namespace traag
