#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "caylabel/errors.hpp"

namespace caylabel {

// Subsets of a semigroup are bitsets over the element indices 0..n-1.
// The bitset size is always the order of the parent semigroup.
using ElementSubset = boost::dynamic_bitset<>;

ElementSubset make_subset(int parent_order, const std::vector<int>& indices);
std::vector<int> subset_members(const ElementSubset& set);
std::string subset_str(const ElementSubset& set);

// Witness for a failed associativity check: (s_a s_b) s_c != s_a (s_b s_c).
struct AssociativityWitness {
  int a;
  int b;
  int c;
};

// A finite semigroup given by its Cayley table over dense indices 0..n-1.
// The table is stored row-major: table[x * n + y] is the product x * y.
// Construction validates entry ranges and associativity in O(n^3).
class Semigroup {
 public:
  Semigroup(int order, std::vector<int> table);

  // Parses the table document format:
  //   line 1: the order n
  //   lines 2..n+1: n space separated integers in [0, n)
  // Blank lines and lines starting with '#' are skipped. ':' counts as a
  // separator, so the single-line encode() form parses back too.
  static Semigroup parse(std::string_view text);

  // First failing triple in lexicographic scan order, if any.
  static std::optional<AssociativityWitness> associativity_witness(
      int order, const std::vector<int>& table);

  // For callers that guarantee associativity by construction
  // (the enumerator, sub-table extraction, product constructions).
  static Semigroup from_table_unchecked(int order, std::vector<int> table);

  int order() const noexcept { return order_; }

  // Product of elements x and y (unchecked; hot path).
  int at(int x, int y) const { return table_[static_cast<std::size_t>(x) * order_ + y]; }

  const std::vector<int>& table() const noexcept { return table_; }

  std::string to_table_string() const;

  // Compact single-line encoding "n:e e e ..." used in reports.
  std::string encode() const;

  ElementSubset universe() const;

  bool operator==(const Semigroup& other) const = default;

 private:
  struct unchecked_t {};
  Semigroup(unchecked_t, int order, std::vector<int> table);

  int order_;
  std::vector<int> table_;
};

// Range-checked product.
int product(const Semigroup& s, int x, int y);

// --- subset algebra ---------------------------------------------------------

// {a * b : a in A, b in B}.
ElementSubset set_product(const Semigroup& s, const ElementSubset& a,
                          const ElementSubset& b);

// Smallest product-closed subset containing c (c must be nonempty).
ElementSubset generated_subsemigroup(const Semigroup& s, const ElementSubset& c);

ElementSubset idempotents(const Semigroup& s);

// True iff t * a is contained in a. Requires a to be a subset of t.
bool is_left_ideal_of(const Semigroup& s, const ElementSubset& a,
                      const ElementSubset& t);
bool is_right_ideal_of(const Semigroup& s, const ElementSubset& a,
                       const ElementSubset& t);

// Smallest e in c with e * x == x. Throws InputError when no such e exists,
// which signals that the caller's preconditions (c generates a band acting
// onto the whole semigroup) do not hold.
int find_left_identity_from(const Semigroup& s, const ElementSubset& c, int x);

// --- structural predicates --------------------------------------------------

bool is_band(const Semigroup& s);               // x*x == x for all x
bool is_left_zero_band(const Semigroup& s);     // x*y == x
bool is_right_zero_band(const Semigroup& s);    // x*y == y
bool is_rectangular_band(const Semigroup& s);   // band with x*y*x == x

// True iff every subgroup is a singleton; decided by the power sequence of
// each element stabilising (x^m == x^{m+1} for some m).
bool is_combinatorial(const Semigroup& s);

bool is_left_simple(const Semigroup& s);        // no proper left ideal
bool is_right_simple(const Semigroup& s);
bool is_simple(const Semigroup& s);             // no proper two-sided ideal

bool is_left_cancellative(const Semigroup& s);  // rows injective
bool is_right_cancellative(const Semigroup& s); // columns injective

bool is_left_group(const Semigroup& s);   // left simple and right cancellative
bool is_right_group(const Semigroup& s);  // right simple and left cancellative

// For finite semigroups simplicity already implies complete simplicity
// (an idempotent always exists and every simple finite semigroup has a
// primitive one), so this is the same test as is_simple. The reduction is
// valid only in the finite setting handled here.
bool is_completely_simple(const Semigroup& s);

// Two-sided identity plus inverses.
bool is_group(const Semigroup& s);
std::optional<int> find_identity(const Semigroup& s);

// --- Green's relations ------------------------------------------------------

// Equivalence classes of the R, L and H relations, computed from equality
// of principal right/left ideals. Class ids are dense, numbered in order of
// the smallest contained element.
struct GreenClasses {
  std::vector<int> r_class;  // element -> R class id
  std::vector<int> l_class;
  std::vector<int> h_class;
  int r_count = 0;
  int l_count = 0;
  int h_count = 0;
};

GreenClasses green_classes(const Semigroup& s);

// --- constructions ----------------------------------------------------------

Semigroup cyclic_group(int n);
Semigroup left_zero_band(int n);
Semigroup right_zero_band(int n);
Semigroup direct_product(const Semigroup& s, const Semigroup& t);

// Appends a new zero element at index n (products with it are itself).
Semigroup adjoin_zero(const Semigroup& s);

// Matrix semigroup over a group: elements are triples (g; i, l) with
// g a group index, i in [0, i_size), l in [0, lambda_size), multiplied by
//   (g1; i1, l1) (g2; i2, l2) = (g1 * p[l1][i2] * g2; i1, l2).
// `sandwich` is lambda_size rows by i_size columns of group indices.
// Element index encoding: (g * i_size + i) * lambda_size + l.
Semigroup rees_matrix_semigroup(const Semigroup& group, int i_size,
                                int lambda_size,
                                const std::vector<std::vector<int>>& sandwich);

// --- sub-tables and isomorphism ---------------------------------------------

// A product-closed subset viewed as a semigroup in its own right.
// `elements[k]` is the parent index of local element k (ascending).
struct InducedSubsemigroup {
  Semigroup semigroup;
  std::vector<int> elements;
  std::vector<int> local;  // parent index -> local index, -1 outside

  int to_local(int parent_index) const { return local[parent_index]; }
};

// Throws InputError when `a` is empty or not product-closed.
InducedSubsemigroup induced_subsemigroup(const Semigroup& s, const ElementSubset& a);

bool is_closed_subset(const Semigroup& s, const ElementSubset& a);

// Exhaustive permutation search; perm maps indices of s to indices of t.
std::optional<std::vector<int>> find_isomorphism(const Semigroup& s,
                                                 const Semigroup& t);
bool is_isomorphic(const Semigroup& s, const Semigroup& t);

// Lexicographically smallest table over all relabellings; equal canonical
// tables characterise isomorphic semigroups.
std::vector<int> canonical_table(const Semigroup& s);

}  // namespace caylabel
