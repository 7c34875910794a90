#include "caylabel/labelling.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace caylabel {

DistanceConstraint::DistanceConstraint(std::vector<long long> ks) : ks_(std::move(ks)) {
  if (ks_.empty()) throw InputError("constraint vector must be nonempty");
  if (ks_.size() > kMaxLength) {
    throw InputError("constraint length " + std::to_string(ks_.size()) +
                     " exceeds the limit of " + std::to_string(kMaxLength));
  }
  for (long long k : ks_) {
    if (k < 1 || k > kMaxValue) {
      throw InputError("separation values must lie in [1, " +
                       std::to_string(kMaxValue) + "]");
    }
  }
}

DistanceConstraint DistanceConstraint::parse(std::string_view csv) {
  std::vector<long long> ks;
  std::string token;
  auto flush = [&]() {
    if (token.empty()) throw InputError("empty entry in constraint list");
    try {
      std::size_t pos = 0;
      ks.push_back(std::stoll(token, &pos));
      if (pos != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw InputError("expected an integer in constraint list, got '" + token + "'");
    }
    token.clear();
  };
  for (char ch : csv) {
    if (ch == ',') flush();
    else if (!std::isspace(static_cast<unsigned char>(ch))) token.push_back(ch);
  }
  flush();
  return DistanceConstraint(std::move(ks));
}

std::string DistanceConstraint::str() const {
  std::string out;
  for (std::size_t i = 0; i < ks_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(ks_[i]);
  }
  return out;
}

long long Labelling::span() const {
  if (labels.empty()) return 0;
  const auto [lo, hi] = std::minmax_element(labels.begin(), labels.end());
  return *hi - *lo;
}

ValidationResult validate_labelling(const Graph& g, const DistanceConstraint& kappa,
                                    const Labelling& labelling) {
  if (labelling.labels.size() != static_cast<std::size_t>(g.order())) {
    throw InputError("labelling size does not match the graph order");
  }
  for (long long label : labelling.labels) {
    if (label < 1) throw InputError("labels must be positive integers");
  }
  const DistanceMatrix dist = distances(g);
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (!dist.finite(u, v)) continue;
      const int d = dist.at(u, v);
      if (d < 1 || d > kappa.length()) continue;
      const long long gap = std::llabs(labelling.labels[static_cast<std::size_t>(u)] -
                                       labelling.labels[static_cast<std::size_t>(v)]);
      if (gap < kappa.k(d)) {
        return {false, LabellingViolation{u, v, d, kappa.k(d), gap}};
      }
    }
  }
  return {true, std::nullopt};
}

BoundResult upper_bound_trivial(const Graph& g, const DistanceConstraint& kappa) {
  const long long kmax = *std::max_element(kappa.values().begin(), kappa.values().end());
  BoundResult out;
  out.value = static_cast<long long>(g.order() - 1) * kmax;
  out.witness.labels.resize(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) {
    out.witness.labels[static_cast<std::size_t>(v)] = static_cast<long long>(v) * kmax + 1;
  }
  return out;
}

namespace {

struct PairConstraint {
  int other;            // position in the assignment order, strictly earlier
  long long required;
};

// Feasibility of a span budget s: is there a valid labelling with labels in
// [1, s + 1]? Labels are assigned depth-first in the given vertex order.
bool feasible(long long budget, const std::vector<std::vector<PairConstraint>>& cons,
              std::vector<long long>& labels) {
  const std::size_t n = cons.size();
  std::size_t depth = 0;
  labels.assign(n, 0);  // 0 = next candidate is 1
  while (true) {
    long long candidate = labels[depth] + 1;
    bool placed = false;
    for (; candidate <= budget + 1; ++candidate) {
      bool ok = true;
      for (const PairConstraint& pc : cons[depth]) {
        if (std::llabs(candidate - labels[static_cast<std::size_t>(pc.other)]) < pc.required) {
          ok = false;
          break;
        }
      }
      if (ok) {
        placed = true;
        break;
      }
    }
    if (placed) {
      labels[depth] = candidate;
      if (++depth == n) return true;
      labels[depth] = 0;
    } else {
      if (depth == 0) return false;
      --depth;  // backtrack; labels[depth] resumes from its last value + 1
    }
  }
}

}  // namespace

SpanResult exact_span(const Graph& g, const DistanceConstraint& kappa, int solver_cap) {
  if (!is_undirected(g)) {
    throw InputError("span is defined for undirected graphs; take the underlying graph first");
  }
  const int n = g.order();
  const long long k1 = kappa.k(1);

  if (is_disjoint_union_of_completes(g, false)) {
    // Complete components have no pairs at distance 2 or more, so each
    // component is labelled 1, 1 + k1, ... independently.
    const std::vector<int> comp = weak_components(g);
    const std::vector<int> sizes = weak_component_sizes(g);
    const int largest = *std::max_element(sizes.begin(), sizes.end());
    SpanResult out;
    out.value = static_cast<long long>(largest - 1) * k1;
    out.lower_bound = out.value;
    out.certificate.labels.assign(static_cast<std::size_t>(n), 0);
    std::vector<long long> next(sizes.size(), 1);
    for (int v = 0; v < n; ++v) {
      long long& slot = next[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])];
      out.certificate.labels[static_cast<std::size_t>(v)] = slot;
      slot += k1;
    }
    out.method = SpanMethod::formula;
    return out;
  }

  if (n > solver_cap) {
    throw CapError("graph order " + std::to_string(n) + " exceeds the solver cap of " +
                   std::to_string(solver_cap));
  }

  const DistanceMatrix dist = distances(g);

  // Vertex order: decreasing degree in the distance-1 graph, ties by index.
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && dist.finite(u, v) && dist.at(u, v) == 1) {
        ++degree[static_cast<std::size_t>(u)];
      }
    }
  }
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return degree[static_cast<std::size_t>(a)] > degree[static_cast<std::size_t>(b)];
  });

  // Lower bound from a greedy clique in the distance-1 graph.
  std::vector<int> clique;
  for (int v : order) {
    bool adjacent_to_all = true;
    for (int c : clique) {
      if (!(dist.finite(v, c) && dist.at(v, c) == 1)) {
        adjacent_to_all = false;
        break;
      }
    }
    if (adjacent_to_all) clique.push_back(v);
  }
  const long long lower = static_cast<long long>(clique.size() - 1) * k1;

  // The search may start above the reported clique bound: vertices pairwise
  // within distance t are pairwise separated by at least min(k(1..t)), so
  // such a set of size m forces span >= (m - 1) * min(k(1..t)).
  long long search_from = lower;
  long long min_k = k1;
  for (int t = 2; t <= kappa.length(); ++t) {
    min_k = std::min(min_k, kappa.k(t));
    if (min_k <= 0) break;
    std::vector<int> close_clique;
    for (int v : order) {
      bool close_to_all = true;
      for (int c : close_clique) {
        if (!(dist.finite(v, c) && dist.at(v, c) <= t)) {
          close_to_all = false;
          break;
        }
      }
      if (close_to_all) close_clique.push_back(v);
    }
    search_from = std::max(
        search_from, static_cast<long long>(close_clique.size() - 1) * min_k);
  }

  // Pair constraints against earlier vertices in the assignment order.
  std::vector<std::vector<PairConstraint>> cons(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < a; ++b) {
      const int u = order[static_cast<std::size_t>(a)];
      const int v = order[static_cast<std::size_t>(b)];
      if (!dist.finite(u, v)) continue;
      const int d = dist.at(u, v);
      if (d >= 1 && d <= kappa.length()) {
        cons[static_cast<std::size_t>(a)].push_back(PairConstraint{b, kappa.k(d)});
      }
    }
  }

  std::vector<long long> labels;
  for (long long budget = search_from;; ++budget) {
    if (feasible(budget, cons, labels)) {
      SpanResult out;
      out.value = budget;
      out.lower_bound = lower;
      out.method = SpanMethod::exact;
      out.certificate.labels.assign(static_cast<std::size_t>(n), 0);
      for (int pos = 0; pos < n; ++pos) {
        out.certificate.labels[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])] =
            labels[static_cast<std::size_t>(pos)];
      }
      if (out.certificate.span() != budget) {
        throw InternalError("certificate span disagrees with the feasibility budget");
      }
      return out;
    }
  }
}

long long span_union_of_completes(const Graph& g, long long k1) {
  if (k1 < 1) throw InputError("k1 must be at least 1");
  if (!is_disjoint_union_of_completes(g, false)) {
    throw InputError("graph is not a disjoint union of complete graphs");
  }
  const std::vector<int> sizes = weak_component_sizes(g);
  const int largest = *std::max_element(sizes.begin(), sizes.end());
  return static_cast<long long>(largest - 1) * k1;
}

long long formula_left_zero_band(int band_order, int connection_order,
                                 long long k1, long long k2) {
  if (band_order < 1 || connection_order < 1 || connection_order > band_order) {
    throw InputError("need 1 <= |C| <= |B|");
  }
  if (k1 < 1 || k2 < 1) throw InputError("separations must be at least 1");
  if (connection_order == band_order) {
    return k1 * (band_order - 1);  // the graph is complete with loops
  }
  return k1 * (connection_order - 1) + std::max(k1, k2) +
         k2 * (band_order - connection_order - 1);
}

long long formula_zero_semigroup(int order_with_zero, long long k1, long long k2) {
  if (order_with_zero < 2) throw InputError("need at least two elements");
  if (k1 < 1 || k2 < 1) throw InputError("separations must be at least 1");
  return k1 + static_cast<long long>(order_with_zero - 2) * k2;
}

}  // namespace caylabel
