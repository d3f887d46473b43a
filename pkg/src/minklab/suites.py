"""Named verification suites behind the command line front end.

Each suite returns a list of checks (name, passed, residual, tolerance,
note); reports are deterministic for a fixed (suite, seed, config) and
independent of the thread count.  Residuals are reported even on pass so
regressions stay visible across runs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import core, isometry, kinematics, projective, rigid, simultaneity
from . import lattice as lat

__all__ = ["Check", "Config", "SUITES", "run_suite"]


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    residual: float
    tolerance: float
    note: str = ""

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": bool(self.passed),
            "residual": float(self.residual),
            "tolerance": float(self.tolerance),
            "note": self.note,
        }


@dataclass(frozen=True)
class Config:
    """Runtime knobs, parsed from key=value lines and CLI flags."""

    grid: tuple[int, ...] = (41, 41)
    fd_step: float = 1e-3
    samples: int = 200
    regions: int = 60

    @classmethod
    def from_mapping(cls, mapping: dict) -> "Config":
        kwargs = {}
        if "grid" in mapping:
            kwargs["grid"] = parse_grid(mapping["grid"])
        for key in ("fd_step",):
            if key in mapping:
                kwargs[key] = float(mapping[key])
        for key in ("samples", "regions"):
            if key in mapping:
                kwargs[key] = int(mapping[key])
        return cls(**kwargs)

    def as_dict(self) -> dict:
        return {
            "grid": "x".join(str(s) for s in self.grid),
            "fd_step": self.fd_step,
            "samples": self.samples,
            "regions": self.regions,
        }


def parse_grid(text: str) -> tuple[int, ...]:
    parts = tuple(int(p) for p in str(text).lower().split("x"))
    if len(parts) not in (2, 3) or any(p < 3 for p in parts):
        raise ValueError(f"bad grid spec {text!r}")
    return parts


def _chk(name: str, residual: float, tolerance: float, note: str = "",
         passed: bool | None = None) -> Check:
    ok = residual < tolerance if passed is None else passed
    return Check(name, bool(ok), float(residual), float(tolerance), note)


# ---------------------------------------------------------------------- core

def suite_core(seed: int, config: Config) -> list[Check]:
    rng = np.random.default_rng(seed)
    checks = []
    n = 4
    e = np.eye(n)
    m = core.Metric(n)

    checks.append(_chk("inner.signature", abs(core.inner(e[0], e[0]) - 1)
                       + abs(core.inner(e[1], e[1]) + 1)
                       + abs(core.inner(e[0] + e[1], e[0] + e[1])), 1e-15,
                       "diagonal form on the standard basis"))
    cls = core.classify(core.MinkVector([0.5, 1, 0, 0]), m)
    checks.append(_chk("classify.spacelike", 0.0, 1.0,
                       "interval 0.25-1 < 0", passed=cls.label == "spacelike"))
    cs = core.cauchy_schwarz_case(e[0], e[1])
    checks.append(_chk("cauchy_schwarz.timelike_span", 0.0, 1.0,
                       "product inequality flips on timelike planes",
                       passed=cs["case"] == "<=" and cs["lhs"] <= cs["rhs"]))
    ts = core.strict_inverted_cs_holds(core.MinkVector([1, 0.2, 0.1, 0]), 500, seed)
    sp = core.strict_inverted_cs_holds(core.MinkVector([0.2, 1, 0, 0]), 500, seed)
    checks.append(_chk("strict_ics.timelike", 0.0, 1.0, "holds for every sample",
                       passed=ts["holds"]))
    checks.append(_chk("strict_ics.spacelike_witness", 0.0, 1.0,
                       "witness constructed", passed=not sp["holds"]))
    rt = core.reversed_triangle_check(core.MinkVector([2, 1, 0, 0]),
                                      core.MinkVector([2, -1, 0, 0]))
    expected_slack = 4 - 2 * math.sqrt(3)
    checks.append(_chk("reversed_triangle.slack", abs(rt["slack"] - expected_slack),
                       1e-12, "slack 4 - 2 sqrt(3)"))
    # distance-function axiom violations
    p, q = core.Event([0, 0, 0, 0]), core.Event([1, 1, 0, 0])
    w = core.Event([1, 0.999, 0, 0])
    q2 = core.Event([2, 0, 0, 0])
    d_null = core.minkowski_distance(p, q)
    tri = (core.minkowski_distance(p, w) + core.minkowski_distance(w, q2)
           - core.minkowski_distance(p, q2))
    checks.append(_chk("distance.null_pair", d_null, 1e-12,
                       "distinct pair at distance zero"))
    checks.append(_chk("distance.triangle_violated", 0.0, 1.0,
                       "chain strictly shorter than the straight segment",
                       passed=tri < 0))
    # time-orientation transitivity on random future-timelike triples
    bad = 0
    for _ in range(config.samples):
        vs = []
        while len(vs) < 3:
            v = rng.standard_normal(n)
            v[0] = abs(v[0]) + np.linalg.norm(v[1:]) + 0.1
            vs.append(v)
        uv, vw, uw = (core.inner(vs[0], vs[1]), core.inner(vs[1], vs[2]),
                      core.inner(vs[0], vs[2]))
        if uv > 0 and vw > 0 and uw <= 0:
            bad += 1
    checks.append(_chk("orientation.transitive", float(bad), 1.0,
                       f"{config.samples} random future triples"))
    # affine identities
    pts = [core.Event(rng.integers(-5, 5, size=n).astype(float)) for _ in range(3)]
    lhs = pts[0] + (pts[1] - pts[2])
    rhs = pts[1] + (pts[0] - pts[2])
    checks.append(_chk("affine.exchange_identity",
                       float(np.abs(lhs.a - rhs.a).max()), 1e-15,
                       "exact on integer coordinates"))
    comb = core.affine_combination(pts[:2], [2.0, -1.0])
    expect = pts[0] + (pts[0] - pts[1])
    checks.append(_chk("affine.combination", float(np.abs(comb.a - expect.a).max()),
                       1e-12, "both expansion bases agree"))
    frame = core.AffineFrame(pts[0], tuple(core.MinkVector(row)
                                           for row in rng.standard_normal((n, n))
                                           + 2 * np.eye(n)))
    x = rng.standard_normal(n)
    round_trip = core.frame_coords(frame, core.frame_point(frame, x))
    checks.append(_chk("frame.round_trip", float(np.abs(round_trip - x).max()),
                       1e-12, "chart and inverse chart"))
    return checks


# ------------------------------------------------------------------ isometry

def suite_isometry(seed: int, config: Config) -> list[Check]:
    rng = np.random.default_rng(seed)
    checks = []
    n = 4
    ok, res = isometry.is_lorentz(np.eye(n))
    checks.append(_chk("is_lorentz.identity", res, 1e-12, "", passed=ok))
    ok2, res2 = isometry.is_lorentz(np.diag([2.0, 1, 1, 1]))
    checks.append(_chk("is_lorentz.rejects_scaling", 0.0, 1.0, "", passed=not ok2))

    v = np.array([1.0, 0.0])
    refl = isometry.reflect(v, np.array([2.0, 3.0]))
    checks.append(_chk("reflect.worked", float(np.abs(refl - [-2.0, 3.0]).max()),
                       1e-14, "time axis flip"))
    worst = 0.0
    count_ok = True
    trials = max(20, config.samples // 4)
    for dim in (2, 3, 4):
        for _ in range(trials):
            L = isometry.random_lorentz(dim, rng, orthochronous=False, proper=False)
            factors = isometry.cartan_dieudonne(L)
            count_ok &= len(factors) <= 2 * dim - 1
            worst = max(worst, float(np.abs(
                isometry.compose_reflections(factors, dim) - L).max()))
    checks.append(_chk("cartan_dieudonne.reconstruction", worst, 1e-9,
                       f"{3 * trials} random matrices, dims 2-4",
                       passed=count_ok and worst < 1e-9))
    d = isometry.Dilation(2.0, core.Event([0, 0, 0, 0]))
    pt = core.Event([1, 1, 0, 0])
    img = isometry.dilation_apply(d, pt)
    checks.append(_chk("dilation.worked", float(np.abs(img.a - [2, 2, 0, 0]).max()),
                       1e-14, "doubles displacements from the centre"))
    lam = float(rng.uniform(0.5, 2.0))
    f = lam * isometry.random_lorentz(n, rng)
    cf = isometry.conformal_factor(f)
    checks.append(_chk("conformal.alpha", abs(cf["alpha"] - lam * lam), 1e-9,
                       "scaled isometry pulls back to alpha g"))
    checks.append(_chk("conformal.residual", cf["residual"], 1e-9, ""))

    events = [core.Event(rng.uniform(-5, 5, size=n)) for _ in range(40)]
    L = isometry.random_lorentz(n, rng)
    shift = rng.uniform(-1, 1, size=n)
    dil = float(rng.uniform(0.5, 2.0))

    def poinc_dil(p: core.Event) -> core.Event:
        return core.Event(dil * (L @ p.a) + shift)

    rep = isometry.relation_preservation_harness(events, poinc_dil, "gt")
    checks.append(_chk("relations.poincare_dilation", float(len(rep)), 1.0,
                       "empty violation report"))

    def trev(p: core.Event) -> core.Event:
        out = p.a.copy()
        out[0] = -out[0]
        return core.Event(out)

    rep_t = isometry.relation_preservation_harness(events, trev, "gt")
    rep_sign = isometry.relation_preservation_harness(events, trev, "interval-sign")
    checks.append(_chk("relations.time_reflection", 0.0, 1.0,
                       "breaks the oriented relation, keeps interval signs",
                       passed=len(rep_t) > 0 and len(rep_sign) == 0))

    pts = [rng.uniform(-3, 3, size=3) for _ in range(25)]
    dirs = [rng.standard_normal(3) for _ in range(8)]
    Q = isometry.random_rotation(4, rng)[1:, 1:]
    move = lambda y: Q @ y + np.array([0.3, -0.5, 1.0])
    rep_u = isometry.unit_distance_harness(move, 1.0, pts, dirs)
    rep_s = isometry.unit_distance_harness(lambda y: 2 * y, 1.0, pts, dirs)
    checks.append(_chk("unit_distance.motion", float(len(rep_u)), 1.0,
                       "rigid motion keeps the sampled distance"))
    checks.append(_chk("unit_distance.scaling_caught", 0.0, 1.0, "",
                       passed=len(rep_s) > 0))

    A = isometry.AffineIsometry(isometry.random_lorentz(n, rng), rng.uniform(-1, 1, n))
    B = isometry.AffineIsometry(isometry.random_lorentz(n, rng), rng.uniform(-1, 1, n))
    comp = A @ B
    checks.append(_chk("group.closure", isometry.lorentz_residual(comp.linear), 1e-9,
                       "composite stays an isometry"))
    return checks


# ---------------------------------------------------------------- kinematics

def suite_kinematics(seed: int, config: Config) -> list[Check]:
    rng = np.random.default_rng(seed)
    checks = []
    checks.append(_chk("a_of_v.gamma", abs(kinematics.a_of_v(-1.0, 0.6) - 1.25),
                       1e-15, "1/sqrt(1 - 0.36)"))
    checks.append(_chk("compose.einstein", abs(
        kinematics.compose_velocities(-1.0, 0.5, 0.5) - 0.8), 1e-15,
        "matches rapidity addition"))
    checks.append(_chk("compose.galilei", abs(
        kinematics.compose_velocities(0.0, 0.3, 0.4) - 0.7), 1e-15, ""))
    pole = kinematics.compose_velocities(1.0, 0.5, 2.0)
    neg = kinematics.compose_velocities(1.0, 2.0, 3.0)
    checks.append(_chk("compose.rotation_pathologies", abs(neg + 1.0), 1e-15,
                       "pole and sign flip past the pole",
                       passed=math.isinf(pole) and abs(neg + 1.0) < 1e-15))
    worst = 0.0
    for _ in range(config.samples):
        v, vp = rng.uniform(-0.9, 0.9, size=2)
        lhs = kinematics.rapidity(kinematics.compose_velocities(-1.0, v, vp))
        rhs = kinematics.rapidity(v) + kinematics.rapidity(vp)
        worst = max(worst, abs(lhs - rhs))
    checks.append(_chk("rapidity.additive", worst, 1e-12,
                       f"{config.samples} random pairs"))
    worst = 0.0
    for _ in range(config.samples):
        c = float(rng.uniform(0.5, 3.0))
        k = -1.0 / (c * c)
        v = float(rng.uniform(-0.9 * c, 0.9 * c))
        A = kinematics.boost_matrix_1d(k, v)
        beta = v / c
        gam = 1.0 / math.sqrt(1 - beta * beta)
        S = np.diag([c, 1.0])
        hyper = np.array([[gam, -beta * gam], [-beta * gam, gam]])
        worst = max(worst, float(np.abs(S @ A @ np.linalg.inv(S) - hyper).max()))
    checks.append(_chk("boost1d.hyperbolic_form", worst, 1e-12,
                       "entrywise in rescaled time"))
    worst_inv = 0.0
    for _ in range(config.samples):
        k = float(rng.uniform(-2.0, 2.0))
        vmax = 0.9 / math.sqrt(-k) if k < 0 else 2.0
        v = float(rng.uniform(-vmax, vmax))
        A = kinematics.boost_matrix_1d(k, v)
        worst_inv = max(worst_inv, float(np.abs(
            A @ kinematics.boost_matrix_1d(k, -v) - np.eye(2)).max()))
    checks.append(_chk("boost1d.reciprocity", worst_inv, 1e-12,
                       "opposite velocity inverts the matrix"))
    # spatial boosts: isometry plus rotation equivariance
    c = 1.0
    G4 = core.metric_matrix(4).copy()
    worst_lor = 0.0
    worst_eq = 0.0
    for _ in range(50):
        v = rng.uniform(-0.6, 0.6, size=3)
        if np.linalg.norm(v) >= 0.95:
            continue
        B = kinematics.boost_3d(v, c)
        worst_lor = max(worst_lor, isometry.lorentz_residual(B, G4))
        D = isometry.random_rotation(4, rng)[1:, 1:]
        lhs = kinematics.rotation_embedding(D) @ B @ kinematics.rotation_embedding(D.T)
        rhs = kinematics.boost_3d(D @ v, c)
        worst_eq = max(worst_eq, float(np.abs(lhs - rhs).max()))
    checks.append(_chk("boost3d.isometry", worst_lor, 1e-10, ""))
    checks.append(_chk("boost3d.equivariance", worst_eq, 1e-12,
                       "conjugation by rotations rotates the velocity"))
    br = kinematics.classify_branch(-4.0)
    checks.append(_chk("branch.invariant_speed", abs(br.invariant_speed - 0.5),
                       1e-15, "", passed=br.branch == "lorentz"))
    worst_assoc = 0.0
    for _ in range(config.samples):
        v1, v2, v3 = rng.uniform(-0.9, 0.9, size=3)
        lhs = kinematics.compose_velocities(-1.0, kinematics.compose_velocities(-1.0, v1, v2), v3)
        rhs = kinematics.compose_velocities(-1.0, v1, kinematics.compose_velocities(-1.0, v2, v3))
        worst_assoc = max(worst_assoc, abs(lhs - rhs))
    checks.append(_chk("compose.associative", worst_assoc, 1e-12, ""))
    return checks


# ---------------------------------------------------------------- projective

def suite_projective(seed: int, config: Config) -> list[Check]:
    rng = np.random.default_rng(seed)
    checks = []
    worked = projective.ProjectiveMap.worked_example(2)
    img = projective.proj_apply(worked, np.array([0.25, 0.5]))
    checks.append(_chk("proj.worked_map", float(np.abs(img - np.array([0.25, 0.5]) / 0.75).max()),
                       1e-14, "scales by 1/(1 - first coordinate)"))
    worst = 0.0
    for _ in range(25):
        A = rng.standard_normal((3, 3)) + 2 * np.eye(3)
        m = projective.ProjectiveMap(A, rng.standard_normal(3),
                                     0.2 * rng.standard_normal(3), 2.0)
        base = rng.uniform(-0.5, 0.5, size=3)
        direction = rng.standard_normal(3)
        pts = []
        for s in np.linspace(-0.2, 0.2, 5):
            try:
                pts.append(projective.proj_apply(m, base + s * direction))
            except projective.SingularHyperplaneError:
                pts = []
                break
        if len(pts) >= 3:
            worst = max(worst, projective.collinearity_residual(pts))
    checks.append(_chk("proj.lines_to_lines", worst, 1e-10,
                       "sampled segments stay collinear"))
    demo = projective.parallelism_breaking_demo([0.0, 1.0, 2.0])
    ang = demo["pairwise_angles"]
    checks.append(_chk("proj.parallelism_broken", 0.0, 1.0,
                       "image directions depend on the line offset",
                       passed=all(a > 1e-6 for a in ang.values())))
    b = projective.FLBoost(np.array([0.5, 0, 0]), c=1.0, R=10.0)
    samples = [(float(rng.uniform(0.5, 9.0)), rng.uniform(-3, 3, size=3))
               for _ in range(config.samples)]
    conj = projective.conjugation_check(b, samples)
    checks.append(_chk("fl.conjugation", conj["max_residual"], 1e-10,
                       f"{conj['used']} samples, {conj['skipped']} skipped"))
    # inverse composition
    binv = projective.FLBoost(-b.velocity, b.c, b.R)
    worst = 0.0
    used = 0
    for t, x in samples[:100]:
        try:
            t1, x1 = projective.fl_boost_apply(b, t, x)
            t2, x2 = projective.fl_boost_apply(binv, t1, x1)
        except projective.SingularHyperplaneError:
            continue
        used += 1
        worst = max(worst, abs(t2 - t), float(np.abs(x2 - x).max()))
    checks.append(_chk("fl.inverse", worst, 1e-10, f"{used} samples"))
    # limit of large invariant length
    R = 1e6
    bR = projective.FLBoost(np.array([0.5, 0, 0]), c=1.0, R=R)
    worst = 0.0
    for t, x in samples[:100]:
        t1, x1 = projective.fl_boost_apply(bR, t, x)
        t2, x2 = projective.lorentz_boost_event(bR.velocity, t, x, 1.0)
        bound = 10.0 * (float(np.linalg.norm(x)) + abs(t)) / R
        dev = max(abs(t1 - t2), float(np.abs(x1 - x2).max()))
        worst = max(worst, dev - bound)
    checks.append(_chk("fl.large_scale_limit", worst, 0.0,
                       "deviation bounded by 10 (|x| + c|t|)/R", passed=worst <= 0))
    # slab table
    bad = 0
    for _ in range(config.samples):
        t = float(rng.uniform(-20, 20))
        R, c = 5.0, 1.0
        if abs(abs(t) - R / c) < 1e-9:
            continue
        slab = projective.time_slab(t, R, c)
        try:
            tp, _ = projective.deformation_phi(R, c, t, np.zeros(3))
        except projective.SingularHyperplaneError:
            continue
        if slab == "front" and not tp >= 0:
            bad += 1
        if slab == "beyond" and not tp < -R / c:
            bad += 1
        if slab == "past" and not (-R / c < tp <= 0):
            bad += 1
    checks.append(_chk("fl.slab_table", float(bad), 1.0,
                       "squash maps the three slabs as tabulated"))
    return checks


# -------------------------------------------------------------- simultaneity

def suite_simultaneity(seed: int, config: Config) -> list[Check]:
    rng = np.random.default_rng(seed)
    checks = []
    line = simultaneity.WorldLine(core.Event([0.0, 2.0]), core.MinkVector([1.0, 0.0]))
    pts = simultaneity.line_cone_intersect(line, core.Event([0.0, 0.0]))
    got = sorted(tuple(p.a) for p in pts)
    checks.append(_chk("cone.two_points", float(np.abs(
        np.asarray(got) - [(-2.0, 2.0), (2.0, 2.0)]).max()), 1e-12,
        "timelike line meets the cone twice"))
    worst_mid = 0.0
    worst_prod = 0.0
    for _ in range(config.samples // 4):
        v = rng.standard_normal(4)
        v[0] = abs(v[0]) + np.linalg.norm(v[1:]) + 0.2
        ln = simultaneity.WorldLine(core.Event(rng.uniform(-2, 2, 4)), core.MinkVector(v))
        p = core.Event(rng.uniform(-2, 2, 4))
        if ln.contains(p):
            continue
        q = simultaneity.radar_simultaneous_event(ln, p)
        worst_mid = max(worst_mid, abs(core.inner(q - p, ln.direction)))
        qm, qp = simultaneity.radar_echo_points(ln, p)
        for s in np.linspace(0.05, 0.95, 10):
            qq = core.Event((1 - s) * qm.a + s * qp.a)
            lhs = core.inner(qq - p, qq - p)
            rhs = core.norm_g(qp - qq) * core.norm_g(qq - qm)
            worst_prod = max(worst_prod, abs(-lhs - rhs))
    checks.append(_chk("radar.orthogonal", worst_mid, 1e-10,
                       "midpoint is the orthogonal foot"))
    checks.append(_chk("radar.product_identity", worst_prod, 1e-10,
                       "holds at every interior point of the chord"))
    l1 = simultaneity.WorldLine(core.Event([0.0, 0.0]), core.MinkVector([1.0, 0.0]))
    l2 = simultaneity.WorldLine(core.Event([0.0, 1.0]), core.MinkVector([1.0, 0.5]))
    q, qp = simultaneity.mutual_simultaneity(l1, l2)
    res = max(float(np.abs(q.a - [-2.0, 0.0]).max()), float(np.abs(qp.a - [-2.0, 0.0]).max()))
    checks.append(_chk("mutual.intersection_case", res, 1e-10,
                       "intersecting observers agree at the crossing"))
    worst = 0.0
    for _ in range(config.samples // 4):
        v1, v2 = rng.standard_normal((2, 3))
        v1[0] = abs(v1[0]) + np.linalg.norm(v1[1:]) + 0.2
        v2[0] = abs(v2[0]) + np.linalg.norm(v2[1:]) + 0.2
        la = simultaneity.WorldLine(core.Event(rng.uniform(-2, 2, 3)), core.MinkVector(v1))
        lb = simultaneity.WorldLine(core.Event(rng.uniform(-2, 2, 3)), core.MinkVector(v2))
        try:
            q, qp = simultaneity.mutual_simultaneity(la, lb)
        except core.PreconditionError:
            continue
        d = q - qp
        worst = max(worst, abs(core.inner(d, la.direction)), abs(core.inner(d, lb.direction)))
    checks.append(_chk("mutual.orthogonality", worst, 1e-10, "skew pairs"))
    plane = simultaneity.simultaneity_hyperplane(l1, core.Event([0.0, 0.0]))
    checks.append(_chk("hyperplane.time_slice", 0.0, 1.0, "",
                       passed=plane.contains(core.Event([0.0, 5.0]))
                       and not plane.contains(core.Event([1.0, 5.0]))))
    return checks


# -------------------------------------------------------------------- lattice

def suite_lattice(seed: int, config: Config) -> list[Check]:
    rng = np.random.default_rng(seed)
    checks = []
    grid = lat.IntegerGrid.centered(*config.grid)
    small = lat.IntegerGrid.centered(13, 13)
    # production complement path against the brute-force oracle
    from .lattice import _kernels_py
    worst_ok = True
    modes = (lat.CAUSAL, lat.CHRONOLOGICAL, lat.GALILEI)
    for _ in range(15):
        mask = rng.random(small.size) < float(rng.uniform(0.05, 0.4))
        region = lat.Region(small, mask)
        for code, mode in enumerate(modes):
            brute = _kernels_py.complement_mask_bruteforce(small.coords, mask, code)
            fast = lat.complement(region, mode).mask
            worst_ok &= bool(np.array_equal(brute, fast))
    checks.append(_chk("kernel.bit_identical", 0.0, 1.0,
                       f"backend {lat.backend_name()} vs brute force",
                       passed=worst_ok))
    # law sweep
    bad = 0
    prev = None
    pairs = []
    for _ in range(config.regions):
        s = lat.random_region(grid, rng)
        for mode in (lat.CAUSAL, lat.CHRONOLOGICAL):
            sc = lat.complement(s, mode)
            scc = lat.complement(sc, mode)
            if lat.complement(scc, mode) != sc:
                bad += 1
            if lat.completion(scc, mode) != scc:
                bad += 1
        if prev is not None:
            pairs.append((lat.completion(prev, lat.CAUSAL), lat.completion(s, lat.CAUSAL)))
        prev = s
    checks.append(_chk("laws.complement_completion", float(bad), 1.0,
                       f"{config.regions} random regions, both modes"))
    dm = lat.de_morgan_check(pairs[: config.regions // 2], lat.CAUSAL)
    checks.append(_chk("laws.de_morgan", float(len(dm)), 1.0,
                       f"{len(pairs[: config.regions // 2])} complete pairs"))
    rep = lat.lattice_property_suite(grid, lat.CAUSAL, seed, n_regions=20)
    checks.append(_chk("laws.orthocomplement", float(len(rep["failures"])), 1.0,
                       "involution, bounds, complement meets/joins"))
    checks.append(_chk("laws.covering_fails", 0.0, 1.0,
                       "intermediate element below the two-point join",
                       passed=rep["covering"]["intermediate"] is not None
                       and rep["covering"]["join_is_expected_diamond"]))
    checks.append(_chk("laws.not_modular", 0.0, 1.0, "",
                       passed=rep["modularity"] is not None))
    checks.append(_chk("laws.not_distributive", 0.0, 1.0, "",
                       passed=rep["distributivity"] is not None))
    fig_grid = grid if min(config.grid) >= 41 else lat.IntegerGrid.centered(41, 41)
    fig = lat.fig2_counterexample(fig_grid)
    checks.append(_chk("fig2.witness_nonempty", 0.0, 1.0,
                       f"witness has {fig['witness'].count} cells",
                       passed=(not fig["holds"]) and fig["witness"].count > 0))
    checks.append(_chk("fig2.chron_analogue", 0.0, 1.0,
                       "curated closed shapes keep the law",
                       passed=fig["chron_analogue_holds"] is True))
    # galilei relation
    p0 = lat.Region.from_points(grid, [(0,) * grid.dim])
    slice0 = lat.Region(grid, grid.coords[:, 0] == 0)
    gal = lat.galilei_chron_complement(p0)
    checks.append(_chk("galilei.point_complement", 0.0, 1.0,
                       "time slice minus the point",
                       passed=gal == (slice0 - p0)))
    return checks


# ---------------------------------------------------------------------- rigid

def suite_rigid(seed: int, config: Config) -> list[Check]:
    rng = np.random.default_rng(seed)
    checks = []
    step = config.fd_step
    bf = rigid.boost_killing_field()
    probes = [np.array([0.0, x0, 0.0, 0.0]) for x0 in (0.5, 1.0, 2.0)]
    ver = rigid.is_rigid(bf, probes, step)
    checks.append(_chk("boost.rigid", ver["max_theta"], 1e-5, "",
                       passed=ver["rigid"]))
    worst = 0.0
    for p in probes:
        dec = rigid.kinematic_decomposition(bf, p, 2e-4)
        worst = max(worst, abs(dec.accel_norm_g - 1.0 / p[1]))
    checks.append(_chk("boost.acceleration", worst, 1e-6,
                       "modulus c^2 over the orbit label"))
    rot_probes = [np.array([0.0, 0.3, 0.1, 0.0]), np.array([0.1, 0.2, -0.4, 0.2])]
    rchk = rigid.rotation_killing_checks(1.0, 1.0, rot_probes, step)
    checks.append(_chk("rotation.rigid", rchk["max_theta"], 1e-5, ""))
    checks.append(_chk("rotation.vorticity", 0.0, 1.0, "",
                       passed=rchk["min_omega"] > 1e-3))
    checks.append(_chk("rotation.vorticity_transport", rchk["max_lie_omega"], 1e-5, ""))
    checks.append(_chk("rotation.comoving_split", rchk["max_h_split_residual"], 1e-10,
                       "projected metric matches the comoving closed form"))
    lam, tau, x0 = rigid.rindler_from_event(0.5, 2.0)
    orbit = rigid.boost_killing_flow(x0, tau)
    checks.append(_chk("wedge.round_trip", float(np.abs(orbit - [0.5, 2.0]).max()),
                       1e-10, "chart inversion"))
    gmat = rigid.wedge_chart_metric(x0, lam)
    checks.append(_chk("wedge.chart_metric", float(np.abs(
        gmat - np.diag([x0 * x0, -1.0])).max()), 1e-8,
        "squared label times flow angle, minus radial"))
    hw = rigid.hyperbolic_worldline(1.0)
    hf = rigid.herglotz_field(hw, (-1.5, 1.5))
    p = np.array([0.1, 1.2, 0.3, -0.2])
    checks.append(_chk("worldline.reproduces_boost", float(np.abs(hf(p) - bf(p)).max()),
                       1e-12, "constant-acceleration curve"))
    kt = rigid.killing_test(hf, [p], step)
    checks.append(_chk("worldline.constant_accel_killing", kt["closedness_residual"],
                       1e-5, "", passed=kt["is_killing"]))
    wig = rigid.wiggly_worldline(0.5)
    wf = rigid.herglotz_field(wig, (-0.5, 1.5))
    pw = wig.z(0.8)
    lie_fd = rigid.lie_derivative_oneform(wf, lambda y: rigid.accel_oneform(wf, y, step), pw, step)
    lie_closed = rigid.expected_lie_accel(wig, pw, (-0.5, 1.5))
    checks.append(_chk("worldline.jerk_formula", float(np.abs(lie_fd - lie_closed).max()),
                       1e-4, "variable acceleration transports the pull"))
    curv = rigid.projected_curvature_check(1.0, 1.0, [
        np.array([0.0, rho, 0.0, 0.0]) for rho in (0.1, 0.4, 0.7)], step)
    checks.append(_chk("curvature.identity", curv["max_residual"], 1e-4,
                       "comoving curvature balances the squared vorticity"))
    rep = rigid.reparameterization_invariance_check(
        bf, lambda x: 1.0 + 0.1 * math.sin(x[1]), probes, step)
    checks.append(_chk("rigid.reparam_invariant", 0.0, 1.0, "",
                       passed=rep["verdict_unchanged"]))
    return checks


SUITES = {
    "core": suite_core,
    "isometry": suite_isometry,
    "kinematics": suite_kinematics,
    "projective": suite_projective,
    "simultaneity": suite_simultaneity,
    "lattice": suite_lattice,
    "rigid": suite_rigid,
}


def run_suite(name: str, seed: int, config: Config) -> dict:
    """Execute a suite (or 'all') and assemble the canonical report."""
    if name == "all":
        names = list(SUITES)
    elif name in SUITES:
        names = [name]
    else:
        raise KeyError(name)
    checks: list[Check] = []
    for n in names:
        checks.extend(SUITES[n](seed, config))
    return {
        "schema_version": 1,
        "suite": name,
        "seed": seed,
        "config": config.as_dict(),
        "lattice_backend": lat.backend_name(),
        "checks": [c.as_dict() for c in checks],
        "passed": all(c.passed for c in checks),
        "counts": {"total": len(checks), "failed": sum(not c.passed for c in checks)},
    }
