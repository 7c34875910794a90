#pragma once

// Independent reference implementations used to cross-check the library.
// Each one takes the most direct route available (full enumeration, subset
// scans, plain distance checks) and shares no code with the implementation
// under test beyond the public data types.

#include "caylabel/graph.hpp"
#include "caylabel/labelling.hpp"
#include "caylabel/semigroup.hpp"

namespace caylabel::testing {

// Minimum span over every labelling with labels in [1, trivial_bound + 1],
// found by exhausting the label cube in natural vertex order (partial
// assignments that already violate a separation are not extended, which
// drops no valid labelling). Undirected graphs only.
long long oracle_min_span(const Graph& g, const DistanceConstraint& kappa);

// True iff no subset of s of size >= 2 forms a group under the induced
// product, decided by scanning all subsets for closure, identity, inverses.
bool oracle_combinatorial(const Semigroup& s);

// True iff every pair of distinct vertices is adjacent or unreachable,
// phrased through the distance matrix. Undirected graphs only.
bool oracle_union_of_completes_loop_free(const Graph& g);

}  // namespace caylabel::testing
