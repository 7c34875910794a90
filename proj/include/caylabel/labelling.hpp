#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "caylabel/graph.hpp"

namespace caylabel {

// Required label separations by distance: vertices at distance t must get
// labels at least k(t) apart, for 1 <= t <= length(). Pairs further apart
// than length() (or unreachable) are unconstrained.
class DistanceConstraint {
 public:
  static constexpr int kMaxLength = 8;
  static constexpr long long kMaxValue = 1'000'000;

  explicit DistanceConstraint(std::vector<long long> ks);
  static DistanceConstraint parse(std::string_view csv);  // "2,1"

  int length() const noexcept { return static_cast<int>(ks_.size()); }
  long long k(int t) const { return ks_[static_cast<std::size_t>(t - 1)]; }
  const std::vector<long long>& values() const noexcept { return ks_; }
  std::string str() const;

  bool operator==(const DistanceConstraint&) const = default;

 private:
  std::vector<long long> ks_;
};

// Vertex labels; always positive integers starting at 1.
struct Labelling {
  std::vector<long long> labels;

  long long span() const;
};

struct LabellingViolation {
  int u = 0;
  int v = 0;
  int distance = 0;
  long long required = 0;
  long long gap = 0;
};

struct ValidationResult {
  bool valid = false;
  std::optional<LabellingViolation> violation;  // first in lexicographic pair order
};

// Checks every pair at distance 1..length(). Throws InputError on directed
// graphs, size mismatches, or labels below 1.
ValidationResult validate_labelling(const Graph& g, const DistanceConstraint& kappa,
                                    const Labelling& labelling);

struct BoundResult {
  long long value = 0;
  Labelling witness;
};

// (n - 1) * max(kappa), witnessed by labels (i - 1) * max(kappa) + 1.
BoundResult upper_bound_trivial(const Graph& g, const DistanceConstraint& kappa);

enum class SpanMethod { exact, formula };

struct SpanResult {
  long long value = 0;
  long long lower_bound = 0;
  Labelling certificate;
  SpanMethod method = SpanMethod::exact;
};

inline constexpr int kDefaultSolverCap = 12;

// Minimum span over all valid labellings of an undirected graph.
//
// Disjoint unions of complete graphs are answered by the closed formula
// (largest component - 1) * k(1) with a block certificate and no size cap.
// Otherwise the solver runs a feasibility search: starting from the clique
// lower bound it tests span budgets s, s+1, ... by depth-first assignment of
// labels from [1, s+1] over vertices in decreasing-degree order (ties by
// index), pruning any partial assignment that violates a pair constraint.
// The first feasible budget is optimal and the found labelling is returned
// as the certificate.
SpanResult exact_span(const Graph& g, const DistanceConstraint& kappa,
                      int solver_cap = kDefaultSolverCap);

// (largest component - 1) * k1; requires a disjoint union of completes.
long long span_union_of_completes(const Graph& g, long long k1);

// Closed form for the star-free block labelling of a left zero band B with
// connection set of size connection_order:
//   k1 (|C| - 1) + max(k1, k2) + k2 (|B| - |C| - 1)
// with the complete-graph value k1 (|B| - 1) at the |C| = |B| boundary.
long long formula_left_zero_band(int band_order, int connection_order,
                                 long long k1, long long k2);

// Closed form k1 + (n - 2) k2 for a semigroup with zero, connection set the
// zero, on n >= 2 elements.
long long formula_zero_semigroup(int order_with_zero, long long k1, long long k2);

// Every connection set in a right zero band yields a loops-only graph.
constexpr long long span_right_zero_band() { return 0; }

}  // namespace caylabel
