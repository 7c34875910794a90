#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "caylabel/graph.hpp"
#include "caylabel/labelling.hpp"
#include "caylabel/semigroup.hpp"

namespace caylabel {

// The sets of separation vectors a verification sweeps over: for each length
// in ells(), the cartesian product of the per-position value choices. Every
// length must be at least 2 (a single-distance constraint has nothing to say
// about the statements being checked).
class KGrid {
 public:
  KGrid();  // lengths {2, 3}, every position drawing from {1, 2, 3}

  KGrid(std::vector<int> ells, std::vector<std::vector<long long>> position_choices);

  // "ell=2,3;k=1,2,3" for a shared value set, or per-position sets via
  // "ell=2;k1=1,2;k2=1". Unlisted positions reuse the last listed set.
  static KGrid parse(std::string_view text);

  const std::vector<int>& ells() const noexcept { return ells_; }
  const std::vector<std::vector<long long>>& position_choices() const noexcept {
    return position_choices_;
  }

  // Expansion in deterministic order: lengths as given, then odometer order
  // over positions (last position varies fastest).
  std::vector<DistanceConstraint> constraints() const;

  std::string str() const;

 private:
  std::vector<int> ells_;
  std::vector<std::vector<long long>> position_choices_;
};

// One failing instance, encoded so it can be replayed: semigroup tables use
// the single-line table encoding, subsets are space separated indices, raw
// graphs use the edge-list document with newlines folded to ';'.
struct Counterexample {
  std::string semigroup;
  std::string subsemigroup;
  std::string connection_set;
  std::string graph;
  std::string kappa;
  std::string expected;
  std::string got;
  std::string note;
};

struct VerificationReport {
  static constexpr std::size_t kCounterexampleCap = 100;

  int theorem = 0;
  std::string universe;
  long long checked = 0;
  long long confirmed = 0;
  // Statement 1 is also tallied in its weaker per-instance form (some c
  // instead of every c); the strong form subsumes it.
  long long weak_checked = 0;
  long long weak_confirmed = 0;
  bool partial = false;
  long long counterexample_total = 0;
  std::vector<Counterexample> counterexamples;  // capped at kCounterexampleCap
  std::uint64_t seed = 0;
  long long elapsed_ms = 0;
  std::map<std::string, long long> effort;

  bool all_confirmed() const {
    return counterexample_total == 0 && confirmed == checked &&
           weak_confirmed == weak_checked;
  }

  void add_counterexample(Counterexample ce);

  // Accumulates counts, counterexamples (respecting the cap) and effort.
  void merge(const VerificationReport& other);

  // Structured document; timing is excluded by default so reports are byte
  // deterministic for a fixed universe, grid and seed.
  std::string to_json(bool include_timing = false) const;

  std::string text() const;
};

// Statement 1: S has only singleton subgroups if and only if for every
// subsemigroup T, every nonempty C inside T whose Cayley graph on T is
// undirected, every grid vector and every c in C the minimum span equals
// (|Cc| - 1) k1. The report confirms the equivalence for this S in the
// strong (every c) and weak (some c per vector) readings.
VerificationReport verify_theorem1(const Semigroup& s, const KGrid& grid,
                                   int solver_cap = kDefaultSolverCap);

// Statement 2: S is a right zero band if and only if for every nonempty
// subset C the Cayley graph is undirected and all grid spans equal
// (|Cc| - 1) k1 for every c in C.
VerificationReport verify_theorem2(const Semigroup& s, const KGrid& grid,
                                   int solver_cap = kDefaultSolverCap);

// Statement 3: for a fixed pair (S, C), three conditions are computed by
// independent code paths and checked for pairwise agreement:
//   (a) structural: C S = S, the closure of C is completely simple, and for
//       every c in C the set Cc is product-closed, a left group, and a left
//       ideal of the closure of C;
//   (b) graph: the Cayley graph is a disjoint union of complete graphs with
//       all loops present;
//   (c) span: the Cayley graph is undirected and all grid spans equal
//       (|Cc| - 1) k1 for every c in C.
VerificationReport verify_theorem3(const Semigroup& s, const ElementSubset& c,
                                   const KGrid& grid,
                                   int solver_cap = kDefaultSolverCap);

// Statement 4: an undirected raw graph is a disjoint union of complete
// graphs if and only if over the whole grid the minimum span equals
// (n_max - 1) k1, where n_max is the largest component order (a value that
// does not depend on k2 and beyond).
VerificationReport verify_theorem4(const Graph& g, const KGrid& grid,
                                   int solver_cap = kDefaultSolverCap);

// Loop-free undirected graph with each pair joined with probability 0.4.
Graph random_undirected_graph(int order, std::mt19937_64& rng);

struct CampaignOptions {
  int theorem = 0;   // 1..4
  int order_cap = 4; // statements 1-3: semigroup orders 1..order_cap
  KGrid grid;
  std::uint64_t seed = 1;  // statement 4 random graphs
  bool fail_fast = false;
  int workers = 0;         // 0 = hardware concurrency
  long long budget_ms = 0; // 0 = unlimited; exceeding it yields a partial report
  int random_count = 1000; // statement 4: random graphs on 6..8 vertices
  int exhaustive_max = 5;  // statement 4: exhaustive orders 1..exhaustive_max
  int solver_cap = kDefaultSolverCap;
};

// Exhaustive sweep over the statement's instance universe with parallel
// workers and a deterministic in-order merge of per-instance reports.
VerificationReport run_campaign(const CampaignOptions& opts);

}  // namespace caylabel
