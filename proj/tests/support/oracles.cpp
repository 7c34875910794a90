#include "support/oracles.hpp"

#include <vector>

#include "caylabel/errors.hpp"

namespace caylabel::testing {

long long oracle_min_span(const Graph& g, const DistanceConstraint& kappa) {
  const int n = g.order();
  if (n == 0) throw InputError("oracle needs at least one vertex");
  const DistanceMatrix dist = distances(g);
  const long long top = upper_bound_trivial(g, kappa).value + 1;

  // Separation requirements against already-assigned vertices only.
  std::vector<std::vector<std::pair<int, long long>>> need(static_cast<std::size_t>(n));
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      const int d = dist.raw(u, v);
      if (d != DistanceMatrix::kUnreachable && d >= 1 && d <= kappa.length()) {
        need[static_cast<std::size_t>(v)].push_back({u, kappa.k(d)});
      }
    }
  }

  std::vector<long long> labels(static_cast<std::size_t>(n), 0);
  long long best = -1;
  int depth = 0;
  while (depth >= 0) {
    long long& label = labels[static_cast<std::size_t>(depth)];
    ++label;
    if (label > top) {
      label = 0;
      --depth;
      continue;
    }
    bool ok = true;
    for (const auto& [u, required] : need[static_cast<std::size_t>(depth)]) {
      const long long gap = label - labels[static_cast<std::size_t>(u)];
      if ((gap < 0 ? -gap : gap) < required) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    if (depth + 1 < n) {
      ++depth;
      continue;
    }
    long long lo = labels[0], hi = labels[0];
    for (long long value : labels) {
      if (value < lo) lo = value;
      if (value > hi) hi = value;
    }
    if (best < 0 || hi - lo < best) best = hi - lo;
  }
  if (best < 0) throw InternalError("oracle found no labelling at all");
  return best;
}

bool oracle_combinatorial(const Semigroup& s) {
  const int n = s.order();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if ((mask & (mask - 1)) == 0) continue;  // singletons never disqualify
    std::vector<int> members;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) members.push_back(i);

    bool closed = true;
    for (int x : members) {
      for (int y : members) {
        if (!(mask & (1u << s.at(x, y)))) {
          closed = false;
          break;
        }
      }
      if (!closed) break;
    }
    if (!closed) continue;

    int identity = -1;
    for (int e : members) {
      bool works = true;
      for (int x : members) {
        if (s.at(e, x) != x || s.at(x, e) != x) {
          works = false;
          break;
        }
      }
      if (works) {
        identity = e;
        break;
      }
    }
    if (identity < 0) continue;

    bool inverses = true;
    for (int x : members) {
      bool found = false;
      for (int y : members) {
        if (s.at(x, y) == identity && s.at(y, x) == identity) {
          found = true;
          break;
        }
      }
      if (!found) {
        inverses = false;
        break;
      }
    }
    if (inverses) return false;  // a group on >= 2 elements
  }
  return true;
}

bool oracle_union_of_completes_loop_free(const Graph& g) {
  const DistanceMatrix dist = distances(g);
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      const int d = dist.raw(u, v);
      if (d != DistanceMatrix::kUnreachable && d > 1) return false;
    }
  }
  return true;
}

}  // namespace caylabel::testing
