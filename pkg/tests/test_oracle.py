import dataclasses
import io
import math
from fractions import Fraction as F

import numpy as np
import pytest

from octaquartic.classify import classify
from octaquartic.oracle import (
    EmptyMeshError,
    build_grid,
    choose_box,
    count_components,
    extract_mesh,
    low_residual_cells,
    mesh_component_count,
    mesh_edge_use_counts,
    nesting_depth,
    ray_root_count,
    refine_singularities,
    verify,
    write_obj,
)
from octaquartic.quadric import (
    QuarticCoefficients,
    Stratum,
    strata_singularities,
)


def test_choose_box_unit_sphere():
    assert choose_box(QuarticCoefficients(0, 1, 0, -1)) == F(3, 2)


def test_choose_box_from_largest_stratum_root():
    q = QuarticCoefficients(1, 0, -1, F(1, 2))
    # largest positive root over the strata: face diagonal s^2-2s+1/2 = 0
    s_max = 1 + math.sqrt(0.5)
    expected = F(math.ceil(1.5 * math.sqrt(s_max) * 16), 16)
    assert choose_box(q) == expected


def test_choose_box_floor_when_no_roots():
    assert choose_box(QuarticCoefficients(1, -3, 0, -1)) == 1


def test_grid_exactly_symmetric_under_all_48_elements():
    from octaquartic.octgroup import generate_group

    q = QuarticCoefficients(1, F(2, 3), F(-1, 2), F(1, 7))
    grid = build_grid(q, F(3, 2), 16)
    for arr in (grid.values, grid.signs):
        for g in generate_group():
            # a signed permutation acts on the symmetric lattice by permuting
            # axes and reversing the flipped ones
            axes = [0, 0, 0]
            flips = [False, False, False]
            for row_idx, row in enumerate(g.m):
                col = next(j for j in range(3) if row[j])
                axes[row_idx] = col
                flips[row_idx] = row[col] < 0
            moved = arr.transpose(*axes)
            for ax, flip in enumerate(flips):
                if flip:
                    moved = np.flip(moved, axis=ax)
            assert np.array_equal(arr, moved)


def test_grid_exact_zero_detection():
    # unit sphere: (1,0,0) and friends are lattice points of the L=3/2 grid
    q = QuarticCoefficients(0, 1, 0, -1)
    grid = build_grid(q, F(3, 2), 48)
    i = grid.coords.index(F(1))
    j = grid.coords.index(F(0))
    assert grid.signs[i, j, j] == 0
    assert grid.signs[j, j, j] == -1


def test_count_components_two_spheres():
    q = QuarticCoefficients(0, 1, -1, F(1, 8))
    cc = count_components(build_grid(q, choose_box(q), 64))
    assert cc.count == 2
    assert cc.boundary_touching == 0


def test_count_components_six_half_cylinders_touch_boundary():
    q = QuarticCoefficients(1, 0, -1, 2)
    cc = count_components(build_grid(q, choose_box(q), 64))
    assert cc.count == 6
    assert cc.boundary_touching == 6


def test_count_components_empty():
    q = QuarticCoefficients(1, 1, 1, 1)  # (+,+) with k > 0
    cc = count_components(build_grid(q, choose_box(q), 64))
    assert cc.count == 0
    assert not cc.has_sign_change


def test_count_components_inconclusive_on_tiny_sphere():
    # six vanishing spheres just below k = 1: thinner than a coarse grid
    q = QuarticCoefficients(1, 1, -1, F(999, 4000))  # k = 0.999
    cc = count_components(build_grid(q, choose_box(q), 16))
    assert cc.inconclusive


def test_ray_root_counts():
    q = QuarticCoefficients(1, 0, -1, F(1, 2))
    assert ray_root_count(q, Stratum.SPACE_DIAGONAL, choose_box(q)) == 2
    q = QuarticCoefficients(0, 1, 0, -1)
    assert ray_root_count(q, Stratum.AXIS, choose_box(q)) == 1
    q = QuarticCoefficients(1, 0, -1, F(3, 4))
    assert ray_root_count(q, Stratum.SPACE_DIAGONAL, choose_box(q)) == 0  # tangency


def test_nesting_depth_examples():
    q = QuarticCoefficients(0, 1, -1, F(1, 8))
    grid = build_grid(q, choose_box(q), 16)
    assert nesting_depth(grid, q) == 2
    q = QuarticCoefficients(0, 1, 0, -1)
    grid = build_grid(q, choose_box(q), 16)
    assert nesting_depth(grid, q) == 1
    q = QuarticCoefficients(1, 1, -1, F(1, 8))  # beta=1, 0 < k=1/2 < 3/4
    grid = build_grid(q, choose_box(q), 16)
    assert nesting_depth(grid, q) == 2


def test_refine_singularities_exact_cases():
    q = QuarticCoefficients(1, 0, -1, F(3, 4))
    refined = refine_singularities(q, strata_singularities(q))
    assert len(refined) == 1
    cand = refined[0]
    assert cand.accepted
    assert cand.f_residual < 1e-12 and cand.grad_residual < 1e-12
    assert abs(cand.point[0] - 0.5 ** 0.5) < 1e-12

    q = QuarticCoefficients(1, 1, -1, 0)  # origin, D = 0
    refined = refine_singularities(q, strata_singularities(q))
    assert refined[0].f_residual == 0.0 and refined[0].grad_residual == 0.0

    q = QuarticCoefficients(1, 0, -1, 1)
    refined = refine_singularities(q, strata_singularities(q))
    assert len(refined) == 1 and refined[0].orbit.size == 12
    assert refined[0].accepted


def test_mesh_unit_sphere_accuracy_and_watertightness():
    q = QuarticCoefficients(0, 1, 0, -1)
    half = choose_box(q)
    mesh = extract_mesh(q, half, 64)
    radii = np.linalg.norm(mesh.vertices, axis=1)
    tol = 2 * float(half) / 64
    assert np.all(np.abs(radii - 1.0) <= tol)
    counts = mesh_edge_use_counts(mesh.faces)
    assert all(v == 2 for v in counts.values())
    assert mesh_component_count(mesh) == 1


def test_mesh_two_shells():
    q = QuarticCoefficients(1, 0, -1, F(1, 2))
    mesh = extract_mesh(q, choose_box(q), 96)
    assert mesh_component_count(mesh) == 2


def test_mesh_vertices_satisfy_interpolation_bound():
    # first-order bound: |f(v)| <= C * (2L/n) * |grad f(v)| with C = 2
    for coeffs, n in [((0, 1, 0, -1), 64), ((1, 0, -1, F(1, 2)), 64)]:
        q = QuarticCoefficients(*coeffs)
        half = choose_box(q)
        mesh = extract_mesh(q, half, n)
        cell = 2 * float(half) / n
        a, b, c, d = (float(t) for t in q.as_tuple())
        x, y, z = mesh.vertices.T
        x2, y2, z2 = x * x, y * y, z * z
        u = x2 + y2 + z2
        v = x2 * y2 + y2 * z2 + z2 * x2
        fv = a * v + b * u * u + c * u + d
        gx = 2 * x * (a * (y2 + z2) + 2 * b * u + c)
        gy = 2 * y * (a * (x2 + z2) + 2 * b * u + c)
        gz = 2 * z * (a * (x2 + y2) + 2 * b * u + c)
        gnorm = np.sqrt(gx * gx + gy * gy + gz * gz)
        assert np.all(np.abs(fv) <= 2.0 * cell * gnorm + 1e-12)


def test_mesh_empty_for_degenerate_double_sphere():
    q = QuarticCoefficients(0, 1, -1, F(1, 4))
    with pytest.raises(EmptyMeshError):
        extract_mesh(q, choose_box(q), 64)


def test_obj_output_format():
    q = QuarticCoefficients(0, 1, 0, -1)
    mesh = extract_mesh(q, choose_box(q), 16)
    buf = io.StringIO()
    write_obj(mesh, buf)
    lines = buf.getvalue().splitlines()
    v_lines = [l for l in lines if l.startswith("v ")]
    f_lines = [l for l in lines if l.startswith("f ")]
    assert len(v_lines) == len(mesh.vertices)
    assert len(f_lines) == len(mesh.faces)
    assert all(len(l.split()) == 4 for l in v_lines + f_lines)
    indices = [int(tok) for l in f_lines for tok in l.split()[1:]]
    assert min(indices) >= 1 and max(indices) <= len(v_lines)


def test_verify_agreement_cases():
    q = QuarticCoefficients(1, 0, -1, F(3, 4))
    rep = classify(q)
    ver = verify(q, rep, n=64)
    assert ver.agreement == "agree"
    assert ver.boundary_touching > 0
    assert sorted(c.orbit.size for c in ver.singular_candidates if c.accepted) == [8]

    q = QuarticCoefficients(1, -3, 0, -1)
    ver = verify(q, classify(q), n=64)
    assert ver.agreement == "agree"
    assert ver.component_count == 0


def test_verify_degenerate_double_sphere():
    q = QuarticCoefficients(0, 1, -1, F(1, 4))
    ver = verify(q, classify(q), n=64)
    assert ver.agreement == "agree"
    assert ver.degenerate_locus_detected


def test_verify_negative_control():
    q = QuarticCoefficients(1, 0, -1, F(3, 4))
    rep = classify(q)
    corrupted = dataclasses.replace(rep, component_count=rep.component_count + 1)
    ver = verify(q, corrupted, n=64)
    assert ver.agreement == "disagree"


def test_verify_deterministic():
    q = QuarticCoefficients(0, 1, -1, F(1, 8))
    rep = classify(q)
    r1 = verify(q, rep, n=64).to_json_dict()
    r2 = verify(q, rep, n=64).to_json_dict()
    assert r1 == r2


def test_no_off_stratum_singularities_on_sample_cases():
    for coeffs in [(1, 0, -1, F(3, 4)), (1, 1, -1, F(1, 5)), (0, 1, -1, F(1, 8))]:
        q = QuarticCoefficients(*coeffs)
        grid = build_grid(q, choose_box(q), 32)
        assert low_residual_cells(grid, q) == 0
