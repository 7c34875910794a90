#include <doctest.h>

#include <vector>

#include "caylabel/errors.hpp"
#include "caylabel/labelling.hpp"
#include "support/oracles.hpp"

using namespace caylabel;

namespace {

Graph undirected_from(int order, const std::vector<std::pair<int, int>>& pairs) {
  Graph g(order, GraphSource::raw);
  for (auto [u, v] : pairs) {
    g.add_edge(u, v);
    if (u != v) g.add_edge(v, u);
  }
  return g;
}

Graph path_graph(int order) {
  Graph g(order, GraphSource::raw);
  for (int v = 0; v + 1 < order; ++v) {
    g.add_edge(v, v + 1);
    g.add_edge(v + 1, v);
  }
  return g;
}

Graph complete_graph(int order) {
  Graph g(order, GraphSource::raw);
  for (int u = 0; u < order; ++u)
    for (int v = 0; v < order; ++v)
      if (u != v) g.add_edge(u, v);
  return g;
}

// Centre vertex `leaves` joined to each leaf 0..leaves-1.
Graph star_graph(int leaves) {
  Graph g(leaves + 1, GraphSource::raw);
  for (int v = 0; v < leaves; ++v) {
    g.add_edge(v, leaves);
    g.add_edge(leaves, v);
  }
  return g;
}

}  // namespace

TEST_SUITE("labelling") {

TEST_CASE("distance constraint parsing and validation") {
  const DistanceConstraint kappa = DistanceConstraint::parse("2,1");
  CHECK(kappa.length() == 2);
  CHECK(kappa.k(1) == 2);
  CHECK(kappa.k(2) == 1);
  CHECK(kappa.str() == "2,1");
  CHECK(DistanceConstraint::parse(" 3 , 2 , 1 ").values() ==
        std::vector<long long>{3, 2, 1});
  CHECK(DistanceConstraint::parse("5").length() == 1);

  CHECK_THROWS_AS(DistanceConstraint::parse(""), InputError);
  CHECK_THROWS_AS(DistanceConstraint::parse("0,1"), InputError);
  CHECK_THROWS_AS(DistanceConstraint::parse("2,"), InputError);
  CHECK_THROWS_AS(DistanceConstraint::parse("2,x"), InputError);
  CHECK_THROWS_AS(DistanceConstraint::parse("1,1,1,1,1,1,1,1,1"), InputError);
  CHECK_THROWS_AS(DistanceConstraint::parse("1000001"), InputError);
  CHECK_NOTHROW(DistanceConstraint::parse("1000000"));
}

TEST_CASE("labelling span and validation") {
  CHECK(Labelling{{4, 1, 7}}.span() == 6);
  CHECK(Labelling{{3}}.span() == 0);

  const Graph p3 = path_graph(3);
  const DistanceConstraint kappa = DistanceConstraint::parse("2,1");
  CHECK(validate_labelling(p3, kappa, Labelling{{3, 1, 4}}).valid);

  const ValidationResult bad = validate_labelling(p3, kappa, Labelling{{1, 2, 4}});
  REQUIRE_FALSE(bad.valid);
  REQUIRE(bad.violation.has_value());
  CHECK(bad.violation->u == 0);
  CHECK(bad.violation->v == 1);
  CHECK(bad.violation->distance == 1);
  CHECK(bad.violation->required == 2);
  CHECK(bad.violation->gap == 1);

  // Shifting every label preserves validity.
  CHECK(validate_labelling(p3, kappa, Labelling{{13, 11, 14}}).valid);

  CHECK_THROWS_AS(validate_labelling(p3, kappa, Labelling{{1, 2}}), InputError);
  CHECK_THROWS_AS(validate_labelling(p3, kappa, Labelling{{0, 2, 4}}), InputError);
  Graph directed(2, GraphSource::raw);
  directed.add_edge(0, 1);
  CHECK_THROWS_AS(validate_labelling(directed, kappa, Labelling{{1, 2}}), InputError);

  // Pairs beyond the constraint length are unconstrained.
  const Graph p4 = path_graph(4);
  CHECK(validate_labelling(p4, DistanceConstraint::parse("1"), Labelling{{1, 2, 1, 2}}).valid);
}

TEST_CASE("trivial upper bound") {
  const BoundResult bound = upper_bound_trivial(path_graph(5), DistanceConstraint::parse("2,1"));
  CHECK(bound.value == 8);
  CHECK(bound.witness.labels == std::vector<long long>{1, 3, 5, 7, 9});
  CHECK(validate_labelling(path_graph(5), DistanceConstraint::parse("2,1"), bound.witness).valid);
  CHECK(upper_bound_trivial(path_graph(1), DistanceConstraint::parse("3,2")).value == 0);
}

TEST_CASE("exact span on pinned instances") {
  CHECK(exact_span(path_graph(3), DistanceConstraint::parse("2,1")).value == 3);
  CHECK(exact_span(path_graph(4), DistanceConstraint::parse("2,1")).value == 3);
  CHECK(exact_span(complete_graph(4), DistanceConstraint::parse("3,1")).value == 9);
  CHECK(exact_span(star_graph(2), DistanceConstraint::parse("1,2")).value == 2);
  CHECK(exact_span(star_graph(3), DistanceConstraint::parse("2,1")).value == 4);
  CHECK(exact_span(path_graph(1), DistanceConstraint::parse("2,1")).value == 0);

  // A complete graph takes the closed-form path and block certificate.
  const SpanResult k4 = exact_span(complete_graph(4), DistanceConstraint::parse("3,1"));
  CHECK(k4.method == SpanMethod::formula);
  CHECK(k4.certificate.labels == std::vector<long long>{1, 4, 7, 10});

  const SpanResult p3 = exact_span(path_graph(3), DistanceConstraint::parse("2,1"));
  CHECK(p3.method == SpanMethod::exact);
  CHECK(p3.value == 3);
  CHECK(validate_labelling(path_graph(3), DistanceConstraint::parse("2,1"), p3.certificate).valid);

  // Loops-only graphs cost nothing.
  Graph loops(3, GraphSource::raw);
  for (int v = 0; v < 3; ++v) loops.add_edge(v, v);
  CHECK(exact_span(loops, DistanceConstraint::parse("3,3")).value == 0);

  Graph directed(2, GraphSource::raw);
  directed.add_edge(0, 1);
  CHECK_THROWS_AS(exact_span(directed, DistanceConstraint::parse("2,1")), InputError);
  CHECK_THROWS_AS(exact_span(path_graph(13), DistanceConstraint::parse("2,1")), CapError);
  CHECK_NOTHROW(exact_span(path_graph(13), DistanceConstraint::parse("2,1"), 13));
}

TEST_CASE("certificates validate and match the reported value") {
  const std::vector<DistanceConstraint> kappas = {
      DistanceConstraint::parse("2,1"), DistanceConstraint::parse("1,2"),
      DistanceConstraint::parse("3,3"), DistanceConstraint::parse("1")};
  for (unsigned mask = 0; mask < 64; ++mask) {
    Graph g(4, GraphSource::raw);
    int bit = 0;
    for (int u = 0; u < 4; ++u) {
      for (int v = u + 1; v < 4; ++v, ++bit) {
        if (mask >> bit & 1) {
          g.add_edge(u, v);
          g.add_edge(v, u);
        }
      }
    }
    for (const DistanceConstraint& kappa : kappas) {
      const SpanResult r = exact_span(g, kappa);
      CHECK(validate_labelling(g, kappa, r.certificate).valid);
      CHECK(r.certificate.span() == r.value);
      CHECK(r.lower_bound <= r.value);
      CHECK(r.value <= upper_bound_trivial(g, kappa).value);
    }
  }
}

TEST_CASE("solver agrees with the enumeration oracle on three vertices") {
  for (unsigned mask = 0; mask < 8; ++mask) {
    Graph g(3, GraphSource::raw);
    int bit = 0;
    for (int u = 0; u < 3; ++u) {
      for (int v = u + 1; v < 3; ++v, ++bit) {
        if (mask >> bit & 1) {
          g.add_edge(u, v);
          g.add_edge(v, u);
        }
      }
    }
    for (long long k1 = 1; k1 <= 3; ++k1) {
      for (long long k2 = 1; k2 <= 3; ++k2) {
        const DistanceConstraint kappa({k1, k2});
        CHECK(exact_span(g, kappa).value == caylabel::testing::oracle_min_span(g, kappa));
      }
    }
  }
}

TEST_CASE("span is monotone in the separation vector") {
  const Graph p4 = path_graph(4);
  const Graph s3 = star_graph(3);
  auto value = [](const Graph& g, long long k1, long long k2) {
    return exact_span(g, DistanceConstraint({k1, k2})).value;
  };
  for (const Graph* g : {&p4, &s3}) {
    for (long long k1 = 1; k1 <= 3; ++k1) {
      for (long long k2 = 1; k2 <= 3; ++k2) {
        CHECK(value(*g, k1, k2) <= value(*g, k1 + 1, k2));
        CHECK(value(*g, k1, k2) <= value(*g, k1, k2 + 1));
      }
    }
  }
}

TEST_CASE("union of completes closed form") {
  Graph blocks(6, GraphSource::raw);
  for (int u : {0, 1, 2})
    for (int v : {0, 1, 2})
      if (u != v) blocks.add_edge(u, v);
  blocks.add_edge(3, 4);
  blocks.add_edge(4, 3);
  // vertex 5 stays isolated
  CHECK(span_union_of_completes(blocks, 2) == 4);
  CHECK(exact_span(blocks, DistanceConstraint::parse("2,1")).value == 4);
  CHECK(exact_span(blocks, DistanceConstraint::parse("2,1")).method == SpanMethod::formula);

  Graph isolated(3, GraphSource::raw);
  CHECK(span_union_of_completes(isolated, 7) == 0);

  CHECK_THROWS_AS(span_union_of_completes(path_graph(3), 1), InputError);
  CHECK_THROWS_AS(span_union_of_completes(blocks, 0), InputError);
}

TEST_CASE("left zero band closed form") {
  CHECK(formula_left_zero_band(4, 2, 2, 1) == 5);
  CHECK(formula_left_zero_band(4, 4, 2, 1) == 6);   // complete boundary
  CHECK(formula_left_zero_band(2, 1, 1, 1) == 1);
  CHECK(formula_left_zero_band(6, 3, 3, 2) == 13);  // 3*2 + 3 + 2*2
  CHECK_THROWS_AS(formula_left_zero_band(3, 0, 1, 1), InputError);
  CHECK_THROWS_AS(formula_left_zero_band(3, 4, 1, 1), InputError);
  CHECK_THROWS_AS(formula_left_zero_band(0, 0, 1, 1), InputError);
}

TEST_CASE("zero semigroup closed form") {
  CHECK(formula_zero_semigroup(5, 2, 1) == 5);
  CHECK(formula_zero_semigroup(2, 3, 7) == 3);
  CHECK(formula_zero_semigroup(3, 1, 2) == 3);
  CHECK_THROWS_AS(formula_zero_semigroup(1, 1, 1), InputError);
}

TEST_CASE("closed forms meet the solver exactly when k1 dominates") {
  // Underlying graph of a left zero band with |B| = 3, |C| = 1: a star.
  // With k1 >= k2 the closed forms are sharp; with k1 < k2 the solver can
  // interleave the centre between close leaf labels and land strictly lower.
  CHECK(exact_span(star_graph(2), DistanceConstraint::parse("2,1")).value ==
        formula_zero_semigroup(3, 2, 1));
  CHECK(exact_span(star_graph(2), DistanceConstraint::parse("1,2")).value == 2);
  CHECK(formula_zero_semigroup(3, 1, 2) == 3);

  for (long long k1 = 1; k1 <= 3; ++k1) {
    for (long long k2 = 1; k2 <= k1; ++k2) {
      const DistanceConstraint kappa({k1, k2});
      CHECK(exact_span(star_graph(3), kappa).value == formula_zero_semigroup(4, k1, k2));
    }
  }
}

TEST_CASE("right zero bands label for free") {
  CHECK(span_right_zero_band() == 0);
}

}  // TEST_SUITE
