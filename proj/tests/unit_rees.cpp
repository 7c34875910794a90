#include <doctest.h>

#include "caylabel/errors.hpp"
#include "caylabel/rees.hpp"
#include "caylabel/semigroup.hpp"

using namespace caylabel;

namespace {

// Checks the decomposition invariants that every instance must satisfy:
// the embedding is a bijection onto G x I x Lambda and multiplication maps
// to the sandwich rule (g1; i1, l1)(g2; i2, l2) = (g1 p[l1][i2] g2; i1, l2).
void check_decomposition(const Semigroup& s, const ReesDecomposition& d) {
  REQUIRE(static_cast<int>(d.embedding.size()) == s.order());
  REQUIRE(d.group.order() * d.i_size * d.lambda_size == s.order());
  CHECK(is_group(d.group));
  CHECK(find_identity(d.group) == d.identity);

  for (int x = 0; x < s.order(); ++x) {
    CHECK(d.parent_of(d.embedding[static_cast<std::size_t>(x)]) == x);
  }
  for (int x = 0; x < s.order(); ++x) {
    for (int y = 0; y < s.order(); ++y) {
      const ReesTriple a = d.embedding[static_cast<std::size_t>(x)];
      const ReesTriple b = d.embedding[static_cast<std::size_t>(y)];
      const ReesTriple prod = d.embedding[static_cast<std::size_t>(s.at(x, y))];
      const int sandwich = d.sandwich[static_cast<std::size_t>(a.lambda)]
                                     [static_cast<std::size_t>(b.i)];
      CHECK(prod.g == d.group.at(d.group.at(a.g, sandwich), b.g));
      CHECK(prod.i == a.i);
      CHECK(prod.lambda == b.lambda);
    }
  }
}

}  // namespace

TEST_SUITE("rees") {

TEST_CASE("groups decompose with trivial index sets") {
  const Semigroup z3 = cyclic_group(3);
  const ReesDecomposition d = rees_decompose(z3);
  CHECK(d.group.order() == 3);
  CHECK(d.i_size == 1);
  CHECK(d.lambda_size == 1);
  CHECK(d.sandwich.size() == 1);
  check_decomposition(z3, d);
}

TEST_CASE("left groups decompose as group times left zero") {
  const Semigroup s = direct_product(cyclic_group(2), left_zero_band(2));
  const ReesDecomposition d = rees_decompose(s);
  CHECK(d.group.order() == 2);
  CHECK(d.i_size == 2);
  CHECK(d.lambda_size == 1);
  CHECK(d.sandwich == std::vector<std::vector<int>>{{d.identity, d.identity}});
  check_decomposition(s, d);
}

TEST_CASE("bands decompose with a trivial group") {
  const ReesDecomposition left = rees_decompose(left_zero_band(3));
  CHECK(left.group.order() == 1);
  CHECK(left.i_size == 3);
  CHECK(left.lambda_size == 1);
  check_decomposition(left_zero_band(3), left);

  const ReesDecomposition right = rees_decompose(right_zero_band(2));
  CHECK(right.group.order() == 1);
  CHECK(right.i_size == 1);
  CHECK(right.lambda_size == 2);
  check_decomposition(right_zero_band(2), right);

  const Semigroup rect = direct_product(left_zero_band(2), right_zero_band(3));
  const ReesDecomposition both = rees_decompose(rect);
  CHECK(both.group.order() == 1);
  CHECK(both.i_size == 2);
  CHECK(both.lambda_size == 3);
  check_decomposition(rect, both);
}

TEST_CASE("a constructed matrix semigroup round trips") {
  const Semigroup z2 = cyclic_group(2);
  const Semigroup m = rees_matrix_semigroup(z2, 2, 2, {{0, 0}, {0, 1}});
  const ReesDecomposition d = rees_decompose(m);
  CHECK(d.group.order() == 2);
  CHECK(d.i_size == 2);
  CHECK(d.lambda_size == 2);
  check_decomposition(m, d);
}

TEST_CASE("group inverses") {
  const ReesDecomposition d = rees_decompose(cyclic_group(4));
  for (int g = 0; g < 4; ++g) {
    CHECK(d.group.at(g, d.group_inverse(g)) == d.identity);
    CHECK(d.group.at(d.group_inverse(g), g) == d.identity);
  }
}

TEST_CASE("only completely simple input is accepted") {
  CHECK_THROWS_AS(rees_decompose(adjoin_zero(cyclic_group(2))), InputError);
  CHECK_THROWS_AS(rees_decompose(Semigroup(2, {0, 0, 0, 0})), InputError);
}

}  // TEST_SUITE
