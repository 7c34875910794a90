#include "caylabel/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "caylabel/rees.hpp"

namespace caylabel {

Graph::Graph(int order, GraphSource source, std::string label)
    : order_(order), source_(source), label_(std::move(label)),
      adj_(static_cast<std::size_t>(order) * order, 0) {
  if (order <= 0) throw InputError("graph order must be positive");
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || u >= order_ || v < 0 || v >= order_) {
    throw InputError("edge endpoint out of range");
  }
  adj_[static_cast<std::size_t>(u) * order_ + v] = 1;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < order_; ++u) {
    for (int v = 0; v < order_; ++v) {
      if (has_edge(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t Graph::edge_count() const {
  std::size_t count = 0;
  for (char bit : adj_) count += static_cast<std::size_t>(bit);
  return count;
}

Graph build_cayley_graph(const Semigroup& s, const ElementSubset& c) {
  if (c.size() != static_cast<std::size_t>(s.order())) {
    throw InputError("connection set parent order does not match the semigroup");
  }
  if (c.none()) throw InputError("connection set must be nonempty");
  Graph g(s.order(), GraphSource::cayley, "cayley" + subset_str(c));
  for (int u = 0; u < s.order(); ++u) {
    for (auto e = c.find_first(); e != ElementSubset::npos; e = c.find_next(e)) {
      g.add_edge(u, s.at(static_cast<int>(e), u));
    }
  }
  return g;
}

bool is_undirected(const Graph& g) {
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (g.has_edge(u, v) != g.has_edge(v, u)) return false;
    }
  }
  return true;
}

Graph underlying_undirected(const Graph& g) {
  Graph out(g.order(), g.source(), g.label().empty() ? "" : g.label() + "*");
  for (int u = 0; u < g.order(); ++u) {
    for (int v = 0; v < g.order(); ++v) {
      if (g.has_edge(u, v)) {
        out.add_edge(u, v);
        out.add_edge(v, u);
      }
    }
  }
  return out;
}

ElementSubset reachable_set(const Graph& g, int x) {
  if (x < 0 || x >= g.order()) throw InputError("vertex out of range");
  ElementSubset seen(static_cast<std::size_t>(g.order()));
  std::deque<int> queue;
  for (int v = 0; v < g.order(); ++v) {
    if (g.has_edge(x, v) && !seen.test(static_cast<std::size_t>(v))) {
      seen.set(static_cast<std::size_t>(v));
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v = 0; v < g.order(); ++v) {
      if (g.has_edge(u, v) && !seen.test(static_cast<std::size_t>(v))) {
        seen.set(static_cast<std::size_t>(v));
        queue.push_back(v);
      }
    }
  }
  return seen;
}

namespace {

// Renumbers arbitrary component labels densely by smallest member.
std::vector<int> renumber(const std::vector<int>& raw) {
  std::vector<int> out(raw.size(), -1);
  std::vector<int> map;
  int next = 0;
  for (std::size_t v = 0; v < raw.size(); ++v) {
    const int r = raw[v];
    if (static_cast<std::size_t>(r) >= map.size()) map.resize(static_cast<std::size_t>(r) + 1, -1);
    if (map[static_cast<std::size_t>(r)] < 0) map[static_cast<std::size_t>(r)] = next++;
    out[v] = map[static_cast<std::size_t>(r)];
  }
  return out;
}

}  // namespace

std::vector<int> weak_components(const Graph& g) {
  const int n = g.order();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  int label = 0;
  for (int start = 0; start < n; ++start) {
    if (comp[static_cast<std::size_t>(start)] >= 0) continue;
    std::deque<int> queue{start};
    comp[static_cast<std::size_t>(start)] = label;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v = 0; v < n; ++v) {
        if ((g.has_edge(u, v) || g.has_edge(v, u)) && comp[static_cast<std::size_t>(v)] < 0) {
          comp[static_cast<std::size_t>(v)] = label;
          queue.push_back(v);
        }
      }
    }
    ++label;
  }
  return comp;  // BFS from ascending roots already yields smallest-member ids
}

std::vector<int> strong_components(const Graph& g) {
  // Kosaraju: order by forward DFS finish time, then sweep the reverse graph.
  const int n = g.order();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  for (int root = 0; root < n; ++root) {
    if (seen[static_cast<std::size_t>(root)]) continue;
    std::vector<std::pair<int, int>> stack{{root, 0}};
    seen[static_cast<std::size_t>(root)] = 1;
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      bool advanced = false;
      while (next < n) {
        const int v = next++;
        if (g.has_edge(u, v) && !seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = 1;
          stack.emplace_back(v, 0);
          advanced = true;
          break;
        }
      }
      if (!advanced && (stack.back().second >= n)) {
        order.push_back(stack.back().first);
        stack.pop_back();
      }
    }
  }
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  int label = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (comp[static_cast<std::size_t>(*it)] >= 0) continue;
    std::deque<int> queue{*it};
    comp[static_cast<std::size_t>(*it)] = label;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v = 0; v < n; ++v) {
        if (g.has_edge(v, u) && comp[static_cast<std::size_t>(v)] < 0) {
          comp[static_cast<std::size_t>(v)] = label;
          queue.push_back(v);
        }
      }
    }
    ++label;
  }
  return renumber(comp);
}

std::vector<int> weak_component_sizes(const Graph& g) {
  const std::vector<int> comp = weak_components(g);
  const int count = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<int> sizes(static_cast<std::size_t>(count), 0);
  for (int c : comp) ++sizes[static_cast<std::size_t>(c)];
  return sizes;
}

int DistanceMatrix::at(int u, int v) const {
  const int d = raw(u, v);
  if (d == kUnreachable) throw InternalError("distance requested for an unreachable pair");
  return d;
}

DistanceMatrix distances(const Graph& g) {
  if (!is_undirected(g)) {
    throw InputError("distances require an undirected graph; take the underlying graph first");
  }
  const int n = g.order();
  std::vector<int> d(static_cast<std::size_t>(n) * n, DistanceMatrix::kUnreachable);
  for (int src = 0; src < n; ++src) {
    auto* row = d.data() + static_cast<std::size_t>(src) * n;
    row[src] = 0;
    std::deque<int> queue{src};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v = 0; v < n; ++v) {
        // Loops never shorten a path: d(u, u) stays 0.
        if (g.has_edge(u, v) && row[v] == DistanceMatrix::kUnreachable) {
          row[v] = row[u] + 1;
          queue.push_back(v);
        }
      }
    }
  }
  return DistanceMatrix(n, std::move(d));
}

bool is_disjoint_union_of_completes(const Graph& g, bool require_loops) {
  const std::vector<int> comp = weak_components(g);
  for (int u = 0; u < g.order(); ++u) {
    if (require_loops && !g.has_edge(u, u)) return false;
    for (int v = u + 1; v < g.order(); ++v) {
      if (comp[static_cast<std::size_t>(u)] != comp[static_cast<std::size_t>(v)]) continue;
      if (!g.has_edge(u, v) || !g.has_edge(v, u)) return false;
    }
  }
  return true;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<long> values;
  {
    std::string token;
    bool in_comment = false;
    auto flush = [&]() {
      if (token.empty()) return;
      try {
        std::size_t pos = 0;
        const long v = std::stol(token, &pos);
        if (pos != token.size()) throw std::invalid_argument(token);
        values.push_back(v);
      } catch (const std::exception&) {
        throw InputError("expected an integer in edge list, got '" + token + "'");
      }
      token.clear();
    };
    for (char ch : text) {
      if (ch == '\n') in_comment = false;
      else if (ch == '#') in_comment = true;
      if (in_comment || std::isspace(static_cast<unsigned char>(ch))) flush();
      else token.push_back(ch);
    }
    flush();
  }
  if (values.empty()) throw InputError("empty edge list document");
  if (values[0] <= 0 || values[0] > 100000) throw InputError("bad vertex count");
  if (values.size() % 2 == 0) {
    throw InputError("edge list must contain a vertex count followed by pairs");
  }
  Graph g(static_cast<int>(values[0]), GraphSource::raw, "raw");
  for (std::size_t k = 1; k + 1 < values.size(); k += 2) {
    const long u = values[k], v = values[k + 1];
    if (u < 0 || u >= values[0] || v < 0 || v >= values[0]) {
      throw InputError("edge endpoint out of range");
    }
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  return g;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << "\n";
  for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "digraph G {\n";
  std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
  for (const auto& [u, v] : g.edges()) {
    used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = 1;
  }
  for (int v = 0; v < g.order(); ++v) {
    if (!used[static_cast<std::size_t>(v)]) out << "  " << v << ";\n";
  }
  for (const auto& [u, v] : g.edges()) out << "  " << u << " -> " << v << ";\n";
  out << "}\n";
  return out.str();
}

UndirectednessReport check_undirected_characterization(const Semigroup& s,
                                                       const ElementSubset& c) {
  UndirectednessReport out;
  out.undirected = is_undirected(build_cayley_graph(s, c));

  out.condition = false;
  do {
    if (set_product(s, c, s.universe()) != s.universe()) break;  // C S = S
    const ElementSubset closure = generated_subsemigroup(s, c);
    const InducedSubsemigroup t = induced_subsemigroup(s, closure);
    if (!is_completely_simple(t.semigroup)) break;
    const ReesDecomposition d = rees_decompose(t.semigroup);

    bool all = true;
    for (auto ce = c.find_first(); all && ce != ElementSubset::npos; ce = c.find_next(ce)) {
      const ReesTriple tri = d.embedding[static_cast<std::size_t>(t.to_local(static_cast<int>(ce)))];
      const int g_inv = d.group_inverse(tri.g);
      for (int j = 0; all && j < d.i_size; ++j) {
        const int pj_inv = d.group_inverse(
            d.sandwich[static_cast<std::size_t>(tri.lambda)][static_cast<std::size_t>(j)]);
        bool found = false;
        for (int m = 0; m < d.lambda_size && !found; ++m) {
          const int pm_inv = d.group_inverse(
              d.sandwich[static_cast<std::size_t>(m)][static_cast<std::size_t>(tri.i)]);
          const int h = d.group.at(d.group.at(pj_inv, g_inv), pm_inv);
          const int local = d.parent_of(ReesTriple{h, j, m});
          found = c.test(static_cast<std::size_t>(t.elements[static_cast<std::size_t>(local)]));
        }
        all = found;
      }
    }
    out.condition = all;
  } while (false);
  return out;
}

}  // namespace caylabel
