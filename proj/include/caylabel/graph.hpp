#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "caylabel/semigroup.hpp"

namespace caylabel {

// Where a graph came from. Semigroup-specific operations require a cayley
// source; raw graphs only support the plain graph operations.
enum class GraphSource { cayley, raw };

// Directed graph on vertices 0..n-1. Loops are allowed, multiple edges are
// not. Stored as a dense adjacency matrix; every graph handled here is small.
class Graph {
 public:
  Graph(int order, GraphSource source, std::string label = "");

  int order() const noexcept { return order_; }
  GraphSource source() const noexcept { return source_; }
  const std::string& label() const noexcept { return label_; }

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const {
    return adj_[static_cast<std::size_t>(u) * order_ + v] != 0;
  }

  // Ordered pairs (u, v), sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;
  std::size_t edge_count() const;

  bool operator==(const Graph& other) const {
    return order_ == other.order_ && adj_ == other.adj_;
  }

 private:
  int order_;
  GraphSource source_;
  std::string label_;
  std::vector<char> adj_;
};

// Edges (u, c*u) for every vertex u and every c in C. C must be nonempty.
Graph build_cayley_graph(const Semigroup& s, const ElementSubset& c);

bool is_undirected(const Graph& g);

// Symmetrises the edge set; loops are preserved.
Graph underlying_undirected(const Graph& g);

// Vertices reachable from x by a directed path of length >= 1 (so x itself
// only when it lies on a cycle through x).
ElementSubset reachable_set(const Graph& g, int x);

// Component id per vertex; ids are dense and numbered by smallest member.
std::vector<int> weak_components(const Graph& g);
std::vector<int> strong_components(const Graph& g);
std::vector<int> weak_component_sizes(const Graph& g);  // indexed by component id

// All-pairs shortest path lengths in an undirected graph. Unreachable pairs
// hold the sentinel; they are never mixed into arithmetic by this library.
class DistanceMatrix {
 public:
  static constexpr int kUnreachable = -1;

  DistanceMatrix(int order, std::vector<int> d) : order_(order), d_(std::move(d)) {}

  int order() const noexcept { return order_; }
  bool finite(int u, int v) const { return raw(u, v) != kUnreachable; }

  // Distance between connected vertices; throws InternalError otherwise.
  int at(int u, int v) const;
  int raw(int u, int v) const { return d_[static_cast<std::size_t>(u) * order_ + v]; }

 private:
  int order_;
  std::vector<int> d_;
};

// Throws InputError on directed input: take underlying_undirected first.
DistanceMatrix distances(const Graph& g);

// True iff every weak component is a complete graph on its vertices (both
// edge directions present for directed input) and, when require_loops is
// set, every vertex carries a loop.
bool is_disjoint_union_of_completes(const Graph& g, bool require_loops);

// --- formats ----------------------------------------------------------------

// Edge list document: first content line is the vertex count, then one
// "u v" line per directed edge ("u u" is a loop). '#' starts a comment.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);
std::string to_dot(const Graph& g);

// --- undirectedness characterisation ----------------------------------------

// Result of comparing the graph-level test "Cay(S, C) is undirected" with
// the structural condition on (S, C): C S = S, the closure of C is
// completely simple, and in its matrix coordinates every (g; i, l) in C has,
// for each row j, some column m with (p[l][j]^-1 g^-1 p[m][i]^-1; j, m) in C.
struct UndirectednessReport {
  bool undirected = false;
  bool condition = false;

  bool agree() const { return undirected == condition; }
};

UndirectednessReport check_undirected_characterization(const Semigroup& s,
                                                       const ElementSubset& c);

}  // namespace caylabel
