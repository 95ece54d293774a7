"""Numerical verification of classifier verdicts.

Independent of the exact case analysis: sample the quartic on a cubic grid,
count zero-crossing cells under 26-adjacency, count ray crossings along the
three symmetry lines, Newton-polish the predicted singular points, and compare
field by field.  Grid corner signs are exact: the fast float evaluation is
trusted only where its error bound certifies the sign, and the remaining
corners are re-evaluated in rational arithmetic, so the component counter has
no tuning tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Tuple

import numpy as np
from scipy import ndimage

from .classify import DEGENERATE_LABELS, POINT_COMPONENT_LABELS, TopologyReport
from .quadric import (
    LineRestriction,
    QuarticCoefficients,
    Stratum,
    StratumOrbit,
    line_restriction,
    strata_singularities,
)

_STRUCTURE_26 = np.ones((3, 3, 3), dtype=bool)

# Relative slack for certifying float signs; anything closer to zero than
# this multiple of the term magnitude is re-evaluated exactly.
_SIGN_SLACK = 1e-11


class EmptyMeshError(RuntimeError):
    """Mesh extraction found no zero cell."""


def _positive_root_floats(lr: LineRestriction) -> list:
    a, b, c = float(lr.a), float(lr.b), float(lr.c)
    if lr.a == 0:
        if lr.b == 0:
            return []
        r = -c / b
        return [r] if r > 0 else []
    disc = b * b - 4 * a * c
    if disc < 0:
        return []
    sq = math.sqrt(disc)
    roots = [(-b + sq) / (2 * a), (-b - sq) / (2 * a)]
    return [r for r in roots if r > 0]


def choose_box(q: QuarticCoefficients) -> Fraction:
    """Box half-width: 1.5 * sqrt(largest stratum root), floored at 1.

    Rounded up to a sixteenth so grid corners are exact rationals.
    """
    s_max = 0.0
    for stratum in Stratum:
        lr = line_restriction(q, stratum)
        for r in _positive_root_floats(lr):
            s_max = max(s_max, r)
    half = 1.5 * math.sqrt(s_max) if s_max > 0 else 1.0
    rounded = Fraction(math.ceil(half * 16), 16)
    return max(rounded, Fraction(1))


@dataclass
class SignGrid:
    """Corner values and exact ternary signs of f on a symmetric lattice."""

    half_width: Fraction
    n: int
    coords: Tuple[Fraction, ...]
    values: np.ndarray  # float64, shape (n+1,)*3
    signs: np.ndarray  # int8 in {-1, 0, +1}, exact

    @property
    def cell(self) -> float:
        return 2 * float(self.half_width) / self.n


def build_grid(q: QuarticCoefficients, half_width: Fraction, n: int) -> SignGrid:
    if n < 16:
        raise ValueError("grid resolution must be at least 16")
    if n % 2:
        n += 1  # keep the origin on the lattice
    half_width = Fraction(half_width)
    coords = tuple(-half_width + Fraction(2 * half_width * i, n) for i in range(n + 1))
    axis = np.array([float(c) for c in coords])
    sq = axis * axis
    # Sort the three squared coordinates per point so u and v are computed
    # from identical float expressions at symmetric points: the sampled field
    # is then exactly invariant under all 48 signed permutations.
    s_all = np.stack(
        np.meshgrid(sq, sq, sq, indexing="ij"), axis=0
    )
    s_all.sort(axis=0)
    s0, s1, s2 = s_all[0], s_all[1], s_all[2]
    u = (s0 + s1) + s2
    v = (s0 * s1 + s1 * s2) + s2 * s0
    fa, fb, fc, fd = (float(t) for t in q.as_tuple())
    values = (fa * v + fb * (u * u)) + (fc * u + fd)
    magnitude = (abs(fa) * v + abs(fb) * (u * u)) + (abs(fc) * u + abs(fd))
    signs = np.sign(values).astype(np.int8)
    suspect = np.abs(values) <= _SIGN_SLACK * magnitude
    if suspect.any():
        sq_exact = [c * c for c in coords]
        a, b, c, d = q.as_tuple()
        for i, j, k in np.argwhere(suspect):
            si, sj, sk = sq_exact[i], sq_exact[j], sq_exact[k]
            ue = si + sj + sk
            ve = si * sj + sj * sk + sk * si
            val = a * ve + b * ue * ue + c * ue + d
            signs[i, j, k] = 1 if val > 0 else (-1 if val < 0 else 0)
    return SignGrid(half_width=half_width, n=n, coords=coords, values=values, signs=signs)


@dataclass
class ComponentCount:
    count: int
    boundary_touching: int
    inconclusive: bool
    has_sign_change: bool
    zero_cells: int
    min_abs_value: float
    n: int


def _corner_views(arr: np.ndarray):
    return (
        arr[:-1, :-1, :-1], arr[1:, :-1, :-1], arr[:-1, 1:, :-1], arr[:-1, :-1, 1:],
        arr[1:, 1:, :-1], arr[1:, :-1, 1:], arr[:-1, 1:, 1:], arr[1:, 1:, 1:],
    )


def count_components(grid: SignGrid) -> ComponentCount:
    """Zero-cell components under 26-adjacency.

    A cell is a zero-cell unless its eight corner signs are all strictly
    positive or all strictly negative.  A component is suspicious (counts as
    inconclusive) when it contains a genuine sign change yet spans at most
    two cells in every axis: the surface is thinner than the grid resolves,
    so the caller should re-run at double resolution.
    """
    corners = _corner_views(grid.signs)
    all_pos = corners[0] > 0
    all_neg = corners[0] < 0
    any_pos = corners[0] > 0
    any_neg = corners[0] < 0
    for c in corners[1:]:
        all_pos &= c > 0
        all_neg &= c < 0
        any_pos |= c > 0
        any_neg |= c < 0
    zero_cell = ~(all_pos | all_neg)
    mixed = zero_cell & any_pos & any_neg
    labels, count = ndimage.label(zero_cell, structure=_STRUCTURE_26)
    boundary = np.zeros_like(zero_cell)
    boundary[0, :, :] = boundary[-1, :, :] = True
    boundary[:, 0, :] = boundary[:, -1, :] = True
    boundary[:, :, 0] = boundary[:, :, -1] = True
    touching = np.unique(labels[boundary & zero_cell])
    touching = touching[touching > 0]
    inconclusive = False
    if count:
        slices = ndimage.find_objects(labels)
        for idx, sl in enumerate(slices, start=1):
            if sl is None:
                continue
            extent = max(s.stop - s.start for s in sl)
            if extent <= 2 and mixed[sl][labels[sl] == idx].any():
                inconclusive = True
                break
    return ComponentCount(
        count=int(count),
        boundary_touching=int(len(touching)),
        inconclusive=inconclusive,
        has_sign_change=bool(mixed.any()),
        zero_cells=int(zero_cell.sum()),
        min_abs_value=float(np.abs(grid.values).min()),
        n=grid.n,
    )


_RAY_COMPONENTS = {
    Stratum.AXIS: 1,
    Stratum.FACE_DIAGONAL: 2,
    Stratum.SPACE_DIAGONAL: 3,
}


def _values_along_ray(q: QuarticCoefficients, m: int, half_width, samples: int):
    # parametrised by the coordinate value x, so the ray spans the whole box
    # along its symmetry line: points (x,0,0), (x,x,0), (x,x,x), 0 < x <= L
    a, b, c, d = (float(t) for t in q.as_tuple())
    x = np.linspace(float(half_width) / samples, float(half_width), samples)
    x2 = x * x
    u = m * x2
    pairs = {1: 0, 2: 1, 3: 3}[m]
    v = pairs * x2 * x2
    return a * v + b * u * u + c * u + d


def ray_root_count(
    q: QuarticCoefficients,
    stratum: Stratum,
    half_width,
    samples: int = 4096,
) -> int:
    """Strict sign changes of f along the stratum line inside the box.

    Tangencies (double roots) touch without crossing and are not counted.
    """
    vals = _values_along_ray(q, _RAY_COMPONENTS[stratum], half_width, samples)
    signs = np.sign(vals)
    signs = signs[signs != 0]
    if signs.size < 2:
        return 0
    return int(np.count_nonzero(np.diff(signs)))


def nesting_depth(grid: SignGrid, q: QuarticCoefficients, samples: int = 4096) -> int:
    """Shells pierced by the positive x-axis ray: its strict sign changes."""
    return ray_root_count(q, Stratum.AXIS, grid.half_width, samples)


@dataclass
class RefinedCandidate:
    orbit: StratumOrbit
    point: Tuple[float, float, float]
    f_residual: float
    grad_residual: float
    converged: bool
    accepted: bool


def _float_gradient_norm(q: QuarticCoefficients, p) -> float:
    a, b, c, _ = (float(t) for t in q.as_tuple())
    x, y, z = p
    u = x * x + y * y + z * z
    gx = 2 * x * (a * (y * y + z * z) + 2 * b * u + c)
    gy = 2 * y * (a * (x * x + z * z) + 2 * b * u + c)
    gz = 2 * z * (a * (x * x + y * y) + 2 * b * u + c)
    return math.sqrt(gx * gx + gy * gy + gz * gz)


def _float_value(q: QuarticCoefficients, p) -> float:
    a, b, c, d = (float(t) for t in q.as_tuple())
    x2, y2, z2 = p[0] ** 2, p[1] ** 2, p[2] ** 2
    u = x2 + y2 + z2
    v = x2 * y2 + y2 * z2 + z2 * x2
    return a * v + b * u * u + c * u + d


def _exact_stratum_residuals(q: QuarticCoefficients, orbit: StratumOrbit):
    """Exact |f| and |grad f|^2 at sqrt(s)*direction; rational because f and
    the squared gradient depend on the point only through s."""
    a, b, c, d = q.as_tuple()
    if orbit.stratum is None:
        return abs(d), Fraction(0)
    s = orbit.s
    m = sum(1 for t in STRATUM_DIR_INT[orbit.stratum] if t)
    u = m * s
    pairs = {1: 0, 2: 1, 3: 3}[m]
    v = pairs * s * s
    f_val = a * v + b * u * u + c * u + d
    # each nonzero coordinate contributes 4*s*R^2 with R the common factor
    if orbit.stratum is Stratum.AXIS:
        r_factor = 2 * b * u + c
    elif orbit.stratum is Stratum.FACE_DIAGONAL:
        r_factor = a * s + 2 * b * u + c
    else:
        r_factor = 2 * a * s + 2 * b * u + c
    grad_sq = m * 4 * s * r_factor * r_factor
    return abs(f_val), grad_sq


STRATUM_DIR_INT = {
    Stratum.AXIS: (1, 0, 0),
    Stratum.FACE_DIAGONAL: (1, 1, 0),
    Stratum.SPACE_DIAGONAL: (1, 1, 1),
}


def refine_singularities(
    q: QuarticCoefficients,
    candidates: Sequence[StratumOrbit],
    max_iter: int = 50,
) -> list:
    """Newton-polish candidates along their stratum and report residuals.

    Acceptance threshold: |f| and |grad f| below 1e-9 * max(1, |D|).  The
    polish runs on d/dt f(t*dir), whose root at a tangency is simple.
    """
    tol = 1e-9 * max(1.0, abs(float(q.d)))
    out = []
    for orbit in candidates:
        if orbit.stratum is None:
            f_res = abs(float(q.d))
            out.append(
                RefinedCandidate(
                    orbit=orbit,
                    point=(0.0, 0.0, 0.0),
                    f_residual=f_res,
                    grad_residual=0.0,
                    converged=True,
                    accepted=f_res < tol,
                )
            )
            continue
        direction = STRATUM_DIR_INT[orbit.stratum]
        a, b, c, _ = (float(t) for t in q.as_tuple())
        m = sum(direction)
        pairs = {1: 0, 2: 1, 3: 3}[m]
        # along the stratum: f(t) = pairs*A*t^4 + m^2*B*t^4 + m*C*t^2 + D in t^2
        qa = pairs * a + m * m * b
        qb = m * c

        def dg(t):  # d/dt f(t * dir) / t = 4*qa*t^2 + 2*qb  times t
            return 4 * qa * t ** 3 + 2 * qb * t

        def d2g(t):
            return 12 * qa * t ** 2 + 2 * qb

        t = math.sqrt(float(orbit.s))
        converged = False
        for _ in range(max_iter):
            g1 = dg(t)
            g2 = d2g(t)
            if g2 == 0:
                break
            step = g1 / g2
            t -= step
            if abs(step) <= 1e-15 * max(1.0, abs(t)):
                converged = True
                break
        point = tuple(t * comp for comp in direction)
        f_res = abs(_float_value(q, point))
        g_res = _float_gradient_norm(q, point)
        exact_f, exact_g2 = _exact_stratum_residuals(q, orbit)
        if exact_f == 0:
            f_res = 0.0
        if exact_g2 == 0:
            g_res = 0.0
        out.append(
            RefinedCandidate(
                orbit=orbit,
                point=point,
                f_residual=f_res,
                grad_residual=g_res,
                converged=converged,
                accepted=converged and f_res < tol and g_res < tol,
            )
        )
    return out


# ---------------------------------------------------------------------------
# Mesh extraction


@dataclass
class Mesh:
    vertices: np.ndarray  # (m, 3) float
    faces: np.ndarray  # (t, 3) int, zero-based


def extract_mesh(q: QuarticCoefficients, half_width, n: int) -> Mesh:
    """Marching-cubes triangulation of the zero set inside the box."""
    from skimage import measure

    grid = build_grid(q, Fraction(half_width), n)
    cc = count_components(grid)
    if cc.zero_cells == 0:
        raise EmptyMeshError("no zero cell in the sampled box")
    h = grid.cell
    try:
        verts, faces, _, _ = measure.marching_cubes(
            grid.values, level=0.0, spacing=(h, h, h)
        )
    except ValueError as exc:
        raise EmptyMeshError(f"no extractable level set: {exc}") from None
    lo = float(grid.coords[0])
    verts = verts + lo
    return Mesh(vertices=verts, faces=faces.astype(np.int64))


def write_obj(mesh: Mesh, handle) -> None:
    """Wavefront OBJ, 9 significant digits, deterministic scan order."""
    for vx, vy, vz in mesh.vertices:
        handle.write(f"v {vx:.9g} {vy:.9g} {vz:.9g}\n")
    for i, j, k in mesh.faces:
        handle.write(f"f {i + 1} {j + 1} {k + 1}\n")


def mesh_edge_use_counts(faces: np.ndarray) -> dict:
    counts: dict = {}
    for tri in faces:
        a, b, c = int(tri[0]), int(tri[1]), int(tri[2])
        for e in ((a, b), (b, c), (c, a)):
            key = (min(e), max(e))
            counts[key] = counts.get(key, 0) + 1
    return counts


def mesh_component_count(mesh: Mesh) -> int:
    parent = list(range(len(mesh.vertices)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for tri in mesh.faces:
        a = find(int(tri[0]))
        for other in tri[1:]:
            b = find(int(other))
            if a != b:
                parent[b] = a
    roots = {find(int(v)) for tri in mesh.faces for v in tri}
    return len(roots)


# ---------------------------------------------------------------------------
# Full verification


@dataclass
class OracleReport:
    component_count: int
    boundary_touching: int
    ray_root_counts: dict
    singular_candidates: list
    degenerate_locus_detected: bool
    agreement: str  # agree | disagree | inconclusive
    resolution: int
    stable: bool
    half_width: Fraction
    details: list = field(default_factory=list)

    def to_json_dict(self) -> dict:
        return {
            "component_count": self.component_count,
            "boundary_touching": self.boundary_touching,
            "ray_root_counts": {k.value: v for k, v in self.ray_root_counts.items()},
            "singular_candidates": [
                {
                    "point": [float(x) for x in cand.point],
                    "f_residual": cand.f_residual,
                    "grad_residual": cand.grad_residual,
                    "orbit_size": cand.orbit.size,
                    "stratum": cand.orbit.kind,
                    "accepted": cand.accepted,
                }
                for cand in self.singular_candidates
            ],
            "degenerate_locus_detected": self.degenerate_locus_detected,
            "agreement": self.agreement,
            "resolution": self.resolution,
            "stable": self.stable,
            "half_width": str(self.half_width),
            "details": list(self.details),
        }


def verify(
    q: QuarticCoefficients,
    report: TopologyReport,
    n: int = 64,
    cap: int = 256,
) -> OracleReport:
    """Run the full numerical battery against a classifier report.

    Component counts are only trusted once two successive resolutions agree
    without an inconclusive flag; multiplicity-two loci never produce a sign
    change and are checked through the degenerate-locus mode instead.
    """
    half = choose_box(q)
    resolutions = []
    counts = []
    cur = n
    while cur <= cap:
        grid = build_grid(q, half, cur)
        cc = count_components(grid)
        resolutions.append(cur)
        counts.append((cc, grid))
        if len(counts) >= 2:
            prev = counts[-2][0]
            if (
                not prev.inconclusive
                and not cc.inconclusive
                and prev.count == cc.count
            ):
                break
        cur *= 2
    final_cc, final_grid = counts[-1]
    stable = (
        len(counts) >= 2
        and not counts[-2][0].inconclusive
        and not final_cc.inconclusive
        and counts[-2][0].count == final_cc.count
    )

    cell = final_grid.cell
    scale = max(1.0, *(abs(float(t)) for t in q.as_tuple()))
    degenerate = (not final_cc.has_sign_change) and (
        final_cc.zero_cells > 0 or final_cc.min_abs_value < 16 * cell * cell * scale
    )

    rays = {
        stratum: ray_root_count(q, stratum, half) for stratum in Stratum
    }
    candidates = refine_singularities(q, strata_singularities(q))

    details = []
    agree = True

    # Multiplicity-two loci and finite point sets produce no sign change; the
    # grid sees them only through exact lattice zeros or a vanishing minimum.
    point_mode = (
        report.case_label in DEGENERATE_LABELS
        or report.case_label in POINT_COMPONENT_LABELS
    )
    if point_mode:
        if final_cc.zero_cells > 0:
            if final_cc.count != report.component_count:
                agree = False
                details.append(
                    f"component count {final_cc.count} != {report.component_count}"
                )
        elif not degenerate:
            agree = False
            details.append(
                "zero set invisible on the lattice and no degenerate locus detected"
            )
        if report.case_label in DEGENERATE_LABELS and final_cc.has_sign_change:
            agree = False
            details.append("sign change present where a degenerate locus was expected")
    else:
        if final_cc.count != report.component_count:
            agree = False
            details.append(
                f"component count {final_cc.count} != {report.component_count}"
            )
    if (final_cc.boundary_touching > 0) != report.unbounded:
        agree = False
        details.append(
            f"boundary touching {final_cc.boundary_touching} inconsistent with "
            f"unbounded={report.unbounded}"
        )
    for stratum in Stratum:
        lr = line_restriction(q, stratum)
        if lr.double_positive_root is not None or lr.identically_zero:
            continue  # tangency or continuum: crossing count not comparable
        if rays[stratum] != lr.positive_roots:
            agree = False
            details.append(
                f"{stratum.value} ray crossings {rays[stratum]} != "
                f"symbolic {lr.positive_roots}"
            )
    accepted_sizes = sorted(c.orbit.size for c in candidates if c.accepted)
    report_sizes = sorted(o.size for o in report.singular_orbits)
    if accepted_sizes != report_sizes:
        agree = False
        details.append(
            f"singular orbit sizes {accepted_sizes} != report {report_sizes}"
        )

    if not stable and not point_mode:
        agreement = "inconclusive"
    else:
        agreement = "agree" if agree else "disagree"

    return OracleReport(
        component_count=final_cc.count,
        boundary_touching=final_cc.boundary_touching,
        ray_root_counts=rays,
        singular_candidates=candidates,
        degenerate_locus_detected=degenerate,
        agreement=agreement,
        resolution=final_grid.n,
        stable=stable,
        half_width=half,
        details=details,
    )


def low_residual_cells(
    grid: SignGrid,
    q: QuarticCoefficients,
    rel_tol: float = 1e-6,
) -> int:
    """Heuristic guard: lattice points where |f| and |grad f| are both small.

    Counts suspicious points away from the origin; the classifier expects all
    singular loci on symmetry strata, so a hit off the strata would flag a
    case the case table does not know about.
    """
    axis = np.array([float(c) for c in grid.coords])
    X, Y, Z = np.meshgrid(axis, axis, axis, indexing="ij")
    a, b, c, _ = (float(t) for t in q.as_tuple())
    u = X * X + Y * Y + Z * Z
    gx = 2 * X * (a * (Y * Y + Z * Z) + 2 * b * u + c)
    gy = 2 * Y * (a * (X * X + Z * Z) + 2 * b * u + c)
    gz = 2 * Z * (a * (X * X + Y * Y) + 2 * b * u + c)
    gnorm = np.sqrt(gx * gx + gy * gy + gz * gz)
    scale = max(1.0, *(abs(float(t)) for t in q.as_tuple()))
    hits = (np.abs(grid.values) < rel_tol * scale) & (gnorm < rel_tol * scale)
    # mask out the strata themselves (and the origin): sorted |coords| with a
    # zero tail or equal leading entries lie on a symmetry line
    cell = grid.cell
    sabs = np.sort(np.stack([np.abs(X), np.abs(Y), np.abs(Z)], axis=0), axis=0)
    on_axis = (sabs[1] <= cell) & (sabs[0] <= cell)
    on_face = (sabs[0] <= cell) & (np.abs(sabs[2] - sabs[1]) <= cell)
    on_diag = (np.abs(sabs[2] - sabs[1]) <= cell) & (np.abs(sabs[1] - sabs[0]) <= cell)
    hits &= ~(on_axis | on_face | on_diag)
    return int(hits.sum())
