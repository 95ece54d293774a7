"""Randomised invariants: seeded sweeps over the whole coefficient space.

These are the library-wide contracts: scale invariance of verdicts, totality
of the case analysis, exact group invariance of the polynomial, coherence of
the exact emptiness decision with the sampled grid, and agreement between
symbolic and sampled ray-crossing counts away from tangencies.
"""

import random
from fractions import Fraction as F

from octaquartic.classify import CASE_LABELS, classify
from octaquartic.octgroup import generate_group, orbit, quartic_value, stabilizer_size
from octaquartic.oracle import build_grid, choose_box, count_components, ray_root_count
from octaquartic.quadric import (
    Existence,
    QuarticCoefficients,
    Stratum,
    existence_check,
    line_restriction,
)


def rand_coeffs(rng, span=8, den=5):
    while True:
        a, b, c, d = (F(rng.randint(-span, span), rng.randint(1, den)) for _ in range(4))
        if a != 0 or b != 0:
            return QuarticCoefficients(a, b, c, d)


def rand_scale(rng):
    x = F(0)
    while x == 0:
        x = F(rng.randint(-4, 4), rng.randint(1, 3))
    return x


def test_scale_invariance_and_totality_10k():
    rng = random.Random(101)
    for _ in range(10000):
        q = rand_coeffs(rng)
        rep = classify(q)  # totality: never an unmatched case, never a conflict
        assert rep.case_label in CASE_LABELS
        mu, lam = rand_scale(rng), rand_scale(rng)
        q2 = QuarticCoefficients(
            mu * lam ** 4 * q.a, mu * lam ** 4 * q.b, mu * lam ** 2 * q.c, mu * q.d
        )
        rep2 = classify(q2)
        assert rep2.case_label == rep.case_label
        assert rep2.component_count == rep.component_count
        assert rep2.nesting_depth == rep.nesting_depth
        assert sorted(o.size for o in rep2.singular_orbits) == sorted(
            o.size for o in rep.singular_orbits
        )
        # the scaled coefficients describe the surface shrunk by 1/|lam|:
        # the orbit parameter s = t^2 scales by lam^-2
        for o1, o2 in zip(rep.singular_orbits, rep2.singular_orbits):
            if o1.s is not None:
                assert o2.s == o1.s / (lam * lam)


def test_quartic_symmetry_under_all_48_elements():
    rng = random.Random(102)
    group = generate_group()
    checks = 0
    while checks < 10000:
        coeffs = tuple(F(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(4))
        for _ in range(5):
            p = tuple(F(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(3))
            base = quartic_value(coeffs, p)
            for g in group:
                assert quartic_value(coeffs, g.inverse().apply(p)) == base
                checks += 1


def test_quartic_value_depends_only_on_u_v():
    rng = random.Random(103)
    for _ in range(2000):
        q = rand_coeffs(rng)
        p = tuple(F(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(3))
        x, y, z = p
        direct = (
            q.a * (x * x * y * y + y * y * z * z + z * z * x * x)
            + q.b * (x * x + y * y + z * z) ** 2
            + q.c * (x * x + y * y + z * z)
            + q.d
        )
        assert q.evaluate(p) == direct


def test_orbit_stabilizer_on_random_points():
    rng = random.Random(104)
    for _ in range(300):
        p = tuple(F(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(3))
        assert orbit(p).size * stabilizer_size(p) == 48


def test_empty_existence_implies_zero_grid_components():
    rng = random.Random(105)
    tested = 0
    while tested < 40:
        q = rand_coeffs(rng, span=5, den=3)
        if existence_check(q) is not Existence.EMPTY:
            continue
        cc = count_components(build_grid(q, choose_box(q), 32))
        assert cc.count == 0, q
        assert cc.zero_cells == 0, q
        tested += 1


def test_ray_crossings_match_symbolic_roots_off_tangency():
    rng = random.Random(106)
    tested = 0
    while tested < 150:
        q = rand_coeffs(rng, span=5, den=3)
        half = choose_box(q)
        for stratum in Stratum:
            lr = line_restriction(q, stratum)
            if lr.double_positive_root is not None or lr.identically_zero:
                continue
            assert ray_root_count(q, stratum, half) == lr.positive_roots, (q, stratum)
            tested += 1


def test_existence_check_never_contradicts_nonempty_labels():
    rng = random.Random(107)
    for _ in range(3000):
        q = rand_coeffs(rng)
        rep = classify(q)
        ex = existence_check(q)
        if rep.case_label == "empty":
            assert ex is Existence.EMPTY
        elif rep.case_label == "origin_point":
            assert ex is Existence.POINT_ONLY
        else:
            assert ex is Existence.NONEMPTY_SURFACE
