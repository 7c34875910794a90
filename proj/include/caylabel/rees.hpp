#pragma once

#include <vector>

#include "caylabel/semigroup.hpp"

namespace caylabel {

// Coordinates of a parent element inside a matrix-semigroup decomposition:
// group index g, row index i (R class), column index lambda (L class).
struct ReesTriple {
  int g;
  int i;
  int lambda;

  bool operator==(const ReesTriple&) const = default;
};

// A completely simple semigroup written as a matrix semigroup over one of
// its maximal subgroups. `group` is the induced table on the H class of the
// chosen idempotent; `group_elements[k]` is the parent index of group
// element k. `sandwich` has lambda_size rows and i_size columns of group
// indices. `embedding[x]` gives the coordinates of parent element x and is
// verified to be a product-preserving bijection before the decomposition is
// returned.
struct ReesDecomposition {
  Semigroup group;
  int identity = 0;                  // identity index inside `group`
  std::vector<int> group_elements;   // group index -> parent index
  int i_size = 0;
  int lambda_size = 0;
  std::vector<int> r_reps;           // i -> parent representative in R_i n L_e
  std::vector<int> q_reps;           // lambda -> parent representative in R_e n L_lambda
  std::vector<std::vector<int>> sandwich;
  std::vector<ReesTriple> embedding;

  int group_inverse(int g) const;
  int parent_of(const ReesTriple& t) const;  // inverse of `embedding`
};

// Decomposes a completely simple semigroup. Throws InputError when the input
// is not completely simple and InternalError when any post-check fails
// (bijectivity or the product rule), which would indicate a bug here rather
// than bad input.
ReesDecomposition rees_decompose(const Semigroup& s);

}  // namespace caylabel
