import random
from fractions import Fraction as F

import pytest

from octaquartic.classify import (
    CASE_LABELS,
    CASE_TABLE,
    ClassificationConflictError,
    Family,
    TopologyReport,
    a_zero_nodes,
    b_zero_nodes,
    classify,
    eps_nodes,
    frange,
    normalize,
    normalized_coeffs,
    sweep,
)
from octaquartic.quadric import NotAQuarticError, QuarticCoefficients


def test_normalize_eps_example():
    fam = normalize(QuarticCoefficients(1, F(1, 2), F(1, 2), F(3, 7)))
    assert fam.family is Family.EPS
    assert fam.beta == 2
    assert fam.eps1 == 1 and fam.eps2 == 1
    assert fam.k == 4 * F(3, 7) * F(1, 2) / F(1, 4)  # 4DB/C^2 = 24/7


def test_normalize_sign_flip():
    fam = normalize(QuarticCoefficients(0, -2, 2, 2))
    assert fam.family is Family.A_ZERO
    assert fam.eps2 == -1  # flipped to (0, 2, -2, -2)
    assert fam.d_sign == -1


def test_normalize_b_zero_thresholds_scale_invariant():
    fam = normalize(QuarticCoefficients(1, 0, -1, F(3, 4)))
    assert fam.family is Family.B_ZERO
    assert fam.d_over_c2 == F(3, 4)
    fam2 = normalize(QuarticCoefficients(16, 0, -4, F(3, 4)))  # lambda = 1/2 scaling
    assert fam2.d_over_c2 == F(3, 4)


def test_normalize_rejects_degenerate():
    with pytest.raises(NotAQuarticError):
        QuarticCoefficients(0, 0, 2, 3)


def test_classify_spec_examples():
    rep = classify(QuarticCoefficients(0, 1, -1, F(1, 8)))
    assert rep.case_label == "two_nested_spheres"
    assert rep.component_count == 2
    radii = sorted(r.value for r in rep.sphere_radii)
    kf = (1 - 4 * 0.125) ** 0.5
    assert abs(radii[0] - (0.5 * (1 - kf)) ** 0.5) < 1e-12
    assert abs(radii[1] - (0.5 * (1 + kf)) ** 0.5) < 1e-12

    rep = classify(QuarticCoefficients(0, 1, -1, F(1, 4)))
    assert rep.case_label == "double_sphere_multiplicity_two"
    assert abs(rep.sphere_radii[0].value - 0.5 ** 0.5) < 1e-12

    rep = classify(QuarticCoefficients(1, 0, -1, F(1, 2)))
    assert rep.component_count == 2
    assert rep.unbounded
    assert rep.nesting_depth == 1

    rep = classify(QuarticCoefficients(1, 1, -1, F(1, 5)))  # k = 4/5 at beta 1
    assert rep.case_label == "kummer_like_12_conic_points"
    assert [o.size for o in rep.singular_orbits] == [12]

    rep = classify(QuarticCoefficients(1, F(-1, 3), 0, 1))
    assert rep.case_label == "stellated_cube"


def test_every_label_in_taxonomy_with_metadata():
    assert set(CASE_TABLE) == set(CASE_LABELS)
    for label, (comp, unbounded, nesting, orbits) in CASE_TABLE.items():
        assert comp >= 0
        assert nesting <= max(comp, 0) or comp == 0 and nesting == 0
        if label == "empty":
            assert comp == 0


def test_report_invariants_on_random_inputs():
    rng = random.Random(31)
    for _ in range(3000):
        a, b, c, d = (F(rng.randint(-7, 7), rng.randint(1, 5)) for _ in range(4))
        if a == 0 and b == 0:
            continue
        rep = classify(QuarticCoefficients(a, b, c, d))
        assert rep.case_label in CASE_LABELS
        assert rep.component_count >= (0 if rep.case_label == "empty" else 1)
        assert rep.nesting_depth <= max(rep.component_count, 1)
        for orb in rep.singular_orbits:
            assert orb.size in (1, 6, 8, 12)


def test_thm2_d_over_c2_threshold_cases():
    labels = {}
    for d in (-1, 0, F(1, 2), F(3, 4), F(7, 8), 1, 2):
        rep = classify(QuarticCoefficients(1, 0, -1, F(d)))
        labels[F(d)] = (rep.case_label, rep.component_count)
    assert labels[F(-1)] == ("stellated_octahedron_unbounded", 1)
    assert labels[F(0)] == ("stellated_octahedron_plus_origin", 2)
    assert labels[F(1, 2)] == ("cuboid_in_stellated_octahedron", 2)
    assert labels[F(3, 4)] == ("eight_conic_points_cube_vertices", 1)
    assert labels[F(7, 8)] == ("stellated_surface_eight_holes", 1)
    assert labels[F(1)] == ("twelve_conic_points_octahedron_edges", 1)
    assert labels[F(2)] == ("six_half_cylinders", 6)


def test_paper_conflict_cases_are_flagged_in_provenance():
    rep = classify(QuarticCoefficients(1, 0, 1, 1))
    assert rep.case_label == "empty"
    assert "paper-conflict" in rep.provenance

    rep = classify(QuarticCoefficients(1, F(-1, 3), 0, 0))
    assert rep.case_label == "cube_diagonals_degenerate"
    assert "paper-conflict" in rep.provenance

    rep = classify(QuarticCoefficients(1, F(-1, 5), 0, 0))
    assert rep.case_label == "six_cones_through_origin"
    assert "paper-conflict" in rep.provenance


def test_two_simultaneous_thresholds_fire_degenerate_bullet():
    # beta = 3 with k = 0 lands on the origin bullet with the origin orbit
    rep = classify(normalized_coeffs(-1, -1, 3, 0))
    assert rep.case_label == "origin_point"
    assert [o.size for o in rep.singular_orbits] == [1]


def test_json_schema_fixed_fields():
    rep = classify(QuarticCoefficients(1, 0, -1, F(3, 4)))
    d = rep.to_json_dict()
    assert list(d) == [
        "case_label", "components", "unbounded", "nesting_depth",
        "singular_orbits", "radii", "family", "provenance",
    ]
    orb = d["singular_orbits"][0]
    assert set(orb) == {"rep", "rep_exact", "size", "stratum"}
    assert orb["size"] == 8 and orb["stratum"] == "space_diagonal"
    assert set(d["family"]) == {
        "family", "beta", "beta_float", "eps1", "eps2", "k", "k_float",
        "d_over_c2", "d_over_c2_float", "d_sign",
    }


def test_sweep_eps_boundaries_beta1():
    nodes = eps_nodes(1, -1, 1, frange(-1, 1, F(1, 20)))
    rows = sweep(nodes)
    assert all(r.error is None for r in rows)
    labels = [r.report.case_label for r in rows]
    ks = [r.params["k"] for r in rows]
    changes = [ks[i] for i in range(1, len(labels)) if labels[i] != labels[i - 1]]
    # boundaries at 0, 3/4 and 4/5; threshold nodes carry their own labels
    # so each boundary contributes a change entering and leaving it
    assert F(0) in changes
    assert F(3, 4) in changes and F(3, 4) + F(1, 20) in changes
    assert F(4, 5) in changes and F(4, 5) + F(1, 20) in changes


def test_sweep_b_zero_boundaries():
    rows = sweep(b_zero_nodes(-1, frange(F(-1, 2), F(3, 2), F(1, 100))))
    labels = [r.report.case_label for r in rows]
    ds = [r.params["d"] for r in rows]
    changes = {ds[i] for i in range(1, len(labels)) if labels[i] != labels[i - 1]}
    for tau in (F(0), F(3, 4), F(1)):
        assert tau in changes and tau + F(1, 100) in changes


def test_sweep_single_node():
    rows = sweep(a_zero_nodes(-1, [F(1, 8)]))
    assert len(rows) == 1
    assert rows[0].report.case_label == "two_nested_spheres"


def test_sweep_propagates_errors_without_abort():
    # smuggle an invalid coefficient object past construction: the sweep must
    # record the per-node failure and keep going
    bad = object.__new__(QuarticCoefficients)
    for name in "abcd":
        object.__setattr__(bad, name, F(0))
    good = QuarticCoefficients(0, 1, -1, F(1, 8))
    rows = sweep([({"i": 0}, bad), ({"i": 1}, good)])
    assert rows[0].error is not None and rows[0].report is None
    assert rows[1].error is None and rows[1].report.case_label == "two_nested_spheres"
