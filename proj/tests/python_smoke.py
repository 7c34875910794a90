#!/usr/bin/env python3
"""Smoke test for the python bindings: builds a few structures, checks the
solver against the closed forms, and runs one tiny verification sweep."""

import sys

import caylabel as cl


def main():
    # Semigroup construction and predicates.
    z3 = cl.cyclic_group(3)
    assert z3.order == 3
    assert cl.is_group(z3)
    assert cl.find_identity(z3) == 0
    assert z3.encode() == "3:0 1 2 1 2 0 2 0 1"

    band = cl.left_zero_band(3)
    assert cl.is_left_zero_band(band)
    assert cl.idempotents(band) == [0, 1, 2]
    assert cl.generated_subsemigroup(band, [1]) == [1]

    parsed = cl.Semigroup.parse(z3.encode())
    assert parsed == z3 and cl.is_isomorphic(parsed, z3)

    # Green classes and the matrix decomposition of a left group.
    lg = cl.direct_product(cl.cyclic_group(2), cl.left_zero_band(2))
    assert cl.is_left_group(lg)
    green = cl.green_classes(lg)
    assert (green["r_classes"], green["l_classes"]) == (2, 1)
    rd = cl.rees_decompose(lg)
    assert rd["group"].order == 2 and rd["i_size"] == 2 and rd["lambda_size"] == 1

    # Cayley graph of a right zero band: every connection set yields loops
    # only, trivially a union of complete graphs.
    rz = cl.right_zero_band(3)
    g = cl.build_cayley_graph(rz, [0, 1])
    assert cl.is_undirected(g)
    assert cl.is_disjoint_union_of_completes(g, True) is True
    assert sorted(g.edges()) == [(0, 0), (1, 1), (2, 2)]

    # Star graph spans: solver against the closed form, both orientations.
    star = cl.build_cayley_graph(cl.adjoin_zero(cl.left_zero_band(4)), [4])
    star_u = cl.underlying_undirected(star)
    assert cl.exact_span(star_u, "2,1")["value"] == cl.formula_zero_semigroup(5, 2, 1) == 5
    assert cl.exact_span(star_u, [1, 2])["value"] == 6  # below the formula value 7

    # Validation and the trivial bound.
    path = cl.Graph(3, [(0, 1), (1, 0), (1, 2), (2, 1)])
    result = cl.exact_span(path, "2,1")
    assert result["value"] == 3 and result["method"] == "exact"
    check = cl.validate_labelling(path, "2,1", result["labels"])
    assert check["valid"] and check["violation"] is None
    bad = cl.validate_labelling(path, "2,1", [1, 2, 4])
    assert not bad["valid"] and bad["violation"]["u"] == 0

    # Edge list round trip.
    assert cl.Graph.parse(path.edge_list()).edge_list() == path.edge_list()

    # Distances: star leaves are two apart through the centre.
    dist = cl.distance_matrix(star_u)
    assert dist[0][1] == 2 and dist[0][4] == 1

    # One single-instance verification and one small sweep.
    report = cl.verify_theorem3(cl.adjoin_zero(cl.left_zero_band(3)), [0, 1, 2])
    assert report.all_confirmed() and report.checked == 1

    sweep = cl.run_campaign(theorem=2, order_cap=3, workers=2)
    assert sweep.all_confirmed() and sweep.checked == 122
    assert "theorem 2 verification" in sweep.text()
    assert '"counterexampleTotal": 0' in sweep.to_json()

    # Error mapping: invalid inputs arrive as ValueError, caps as RuntimeError.
    try:
        cl.Semigroup(2, [0, 1, 0, 0])
        raise AssertionError("non-associative table accepted")
    except ValueError:
        pass
    try:
        cl.count_semigroups(6)
        raise AssertionError("hard cap ignored")
    except RuntimeError:
        pass

    print("python smoke: all checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
