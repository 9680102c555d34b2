"""Named verification cases: symbolic reduction checked against matrix models."""

from __future__ import annotations

import zlib
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..grading import diagram_eigenspace_dims, split_minimal_orbit_dim
from ..reduction import reduce, so_wedge, unique_closed_orbit
from ..rootsystem import build_root_system, combine_types, frobenius_schur
from ..satake import DecoratedSatakeDiagram, is_split, parse
from .algebras import MatrixLieAlgebra, build_algebra, su2, sl_H
from .checks import (
    GradedRealization,
    OracleError,
    flow_to_top,
    graded_action_check,
    kernel_vs_top,
    projective_orbit_dim,
)
from .linalg import ANGLE_TOL, EIG_CLUSTER_TOL, RESIDUAL_ATOL, numerical_rank
from .modules import (
    MatrixModule,
    adjoint,
    complex_standard,
    invariant_form_symmetry,
    outer_tensor,
    real_form,
    standard,
    sym,
    wedge,
)

DEFAULT_SEED = 20240601
FLOW_STARTS = 100
ORBIT_SAMPLES = 200


@dataclass
class Case:
    name: str
    form: str
    description: str
    diagram: Callable[[], DecoratedSatakeDiagram]
    module: Callable[[MatrixLieAlgebra], Tuple[MatrixModule, MatrixModule]]
    # global 1-based diagram node -> key accepted by the algebra's grading callable
    node_key: Callable[[int], object] = lambda i: i
    representative: Optional[Callable[[MatrixModule], np.ndarray]] = None


def _real(mod: MatrixModule) -> Tuple[MatrixModule, MatrixModule]:
    return mod, mod


def _so_wedge_module(p: int, q: int) -> Callable:
    def build(alg: MatrixLieAlgebra):
        return _real(wedge(standard(alg), p + 1))
    return build


def _null_plane_wedge(p: int, q: int) -> Callable[[MatrixModule], np.ndarray]:
    """e_1 ^ ... ^ e_p ^ x_1: a null p-plane wedged with an anisotropic vector."""
    def rep(mod: MatrixModule) -> np.ndarray:
        from itertools import combinations
        idx = tuple(range(p)) + (2 * p,)
        basis = list(combinations(range(p + q), p + 1))
        v = np.zeros(len(basis))
        v[basis.index(idx)] = 1.0
        return v
    return rep


def _sym_case(m: int) -> Case:
    return Case(
        f"sl2-sym{m}", "sl(2,R)", f"sl(2,R) on Sym^{m} R^2",
        lambda: parse(f"A1 black=[] arrows=[] w=[{m}]"),
        lambda alg: _real(sym(standard(alg), m)),
    )


def _desk_module(alg: MatrixLieAlgebra):
    s3 = sym(complex_standard(su2()), 3)
    c4 = complex_standard(sl_H(2))
    cplx = outer_tensor(alg, s3, c4)
    return real_form(cplx), cplx


CASES: Dict[str, Case] = {}
for _c in [
    Case("so12-wedge2", "so(1,2)", "so(1,2) on L^2 R^3", lambda: so_wedge(1, 2), _so_wedge_module(1, 2),
         representative=_null_plane_wedge(1, 2)),
    Case("so14-wedge2", "so(1,4)", "so(1,4) on L^2 R^5", lambda: so_wedge(1, 4), _so_wedge_module(1, 4),
         representative=_null_plane_wedge(1, 4)),
    Case("so25-wedge3", "so(2,5)", "so(2,5) on L^3 R^7", lambda: so_wedge(2, 5), _so_wedge_module(2, 5),
         representative=_null_plane_wedge(2, 5)),
    _sym_case(1), _sym_case(2), _sym_case(3), _sym_case(4),
    Case("sl3-adjoint", "sl(3,R)", "sl(3,R) adjoint", lambda: parse("A2 black=[] arrows=[] w=[1,1]"),
         lambda alg: _real(adjoint(alg))),
    Case("sl3-standard", "sl(3,R)", "sl(3,R) on R^3", lambda: parse("A2 black=[] arrows=[] w=[1,0]"),
         lambda alg: _real(standard(alg))),
    Case("slH2-desk", "su(2)+sl(2,H)", "sp(1)+sl(2,H) on the real form of S^3 C^2 [x] C^4",
         lambda: parse("A1 black=[1] arrows=[] w=[3] + A3 black=[1,3] arrows=[] w=[1,0,0]"),
         _desk_module, node_key=lambda i: (0, i) if i == 1 else (1, i - 1)),
]:
    CASES[_c.name] = _c


def case_rng(seed: int, name: str) -> np.random.Generator:
    return np.random.default_rng([seed, zlib.crc32(name.encode())])


@dataclass
class CaseContext:
    case: Case
    algebra: MatrixLieAlgebra
    module: MatrixModule
    complex_module: MatrixModule
    decorated: DecoratedSatakeDiagram
    crossed: Tuple[int, ...]
    realization: GradedRealization


def prepare(name: str) -> CaseContext:
    try:
        case = CASES[name]
    except KeyError:
        raise OracleError(f"unknown case {name!r}; known: {', '.join(CASES)}") from None
    alg = build_algebra(case.form)
    mod, cplx = case.module(alg)
    dd = case.diagram()
    res = reduce(dd)
    crossed = tuple(sorted(res.crossed))
    z = alg.grading(frozenset(case.node_key(i) for i in crossed))
    return CaseContext(case, alg, mod, cplx, dd, crossed, GradedRealization.from_matrix(mod, z))


def fault_injected(ctx: CaseContext, rng: np.random.Generator, scale: float = 1e-3) -> GradedRealization:
    """Same grading, action matrices randomly perturbed (negative control)."""
    act = [a + scale * rng.standard_normal(a.shape) * max(1.0, np.abs(a).max()) for a in ctx.module.action]
    bad = MatrixModule(ctx.algebra, act, ctx.module.label + "~")
    return GradedRealization(bad, ctx.realization.z_coords)


def _levels_match(ctx: CaseContext) -> Tuple[bool, str]:
    want = diagram_eigenspace_dims(ctx.decorated, ctx.crossed).levels
    levels, proj, imag = ctx.realization.module_levels()
    got = {lev: numerical_rank(proj[lev]) for lev in levels}
    ok = imag < EIG_CLUSTER_TOL and len(got) == len(want)
    for th, d in want.items():
        hit = [v for lev, v in got.items() if abs(lev - float(th)) < EIG_CLUSTER_TOL]
        ok = ok and hit == [d]
    text = ", ".join(f"{th}:{want[th]}" for th in sorted(want, reverse=True))
    return ok, text


def _fs_check(ctx: CaseContext) -> Tuple[bool, str]:
    d = ctx.decorated.diagram
    types = [frobenius_schur(build_root_system(c.type), w) for c, w in zip(d.components, ctx.decorated.component_weights())]
    symbolic = combine_types(types)
    form = invariant_form_symmetry(ctx.complex_module)
    numeric = {"symmetric": "real", "antisymmetric": "quaternionic", "none": "complex"}[form]
    return symbolic == numeric, f"symbolic {symbolic}, invariant form {form}"


def verify_case(name: str, seed: int = DEFAULT_SEED) -> dict:
    ctx = prepare(name)
    rng = case_rng(seed, name)
    g = ctx.realization
    res = reduce(ctx.decorated)
    verdict = unique_closed_orbit(res)
    checks: List[dict] = []

    def add(check: str, value, ok: bool) -> None:
        checks.append({"name": check, "value": value, "pass": bool(ok)})

    rep = ctx.algebra.structure_report()
    add("algebra structure residual", max(rep["closure_residual"], rep["jacobi_residual"]), ctx.algebra.check())
    hres = ctx.module.homomorphism_residual()
    add("module homomorphism residual", hres, hres < RESIDUAL_ATOL)

    sr = g.spectrum_report()
    add("ad(Z) spectrum integral", sr["algebra_integral"], sr["algebra_integral"] < EIG_CLUSTER_TOL and sr["algebra_imag"] < EIG_CLUSTER_TOL)
    ok, text = _levels_match(ctx)
    add("Z levels match symbolic eigenspace dims", text, ok)

    kt = kernel_vs_top(g)
    add("joint kernel of positive part = top eigenspace", {"dim": kt["kernel_dim"], "max_angle": kt["max_angle"]}, kt["pass"])
    top_sym = diagram_eigenspace_dims(ctx.decorated, ctx.crossed).top_dim
    add("top dim = symbolic prediction", {"numeric": kt["top_dim"], "symbolic": top_sym}, kt["top_dim"] == top_sym)
    add("top dim = w_dim_real", {"numeric": kt["top_dim"], "w_dim_real": res.w_dim_real}, kt["top_dim"] == res.w_dim_real)

    ga = graded_action_check(g)
    add("graded action residual", ga["max_residual"], ga["pass"])
    bad = graded_action_check(fault_injected(ctx, rng))
    add("fault injection detected", bad["max_residual"], not bad["pass"])

    worst, flows_ok = 0.0, True
    for _ in range(FLOW_STARTS):
        fr = flow_to_top(g, rng.standard_normal(ctx.module.dim))
        flows_ok = flows_ok and fr.ok
        worst = max(worst, fr.distances[-1] if fr.distances else 1.0)
    add(f"flow converges ({FLOW_STARTS} starts)", worst, flows_ok)
    v = rng.standard_normal(ctx.module.dim)
    v = v - g.top_projector() @ v
    fr = flow_to_top(g, v)
    add("zero top component rejected", fr.message, not fr.precondition)

    top = g.top_space()
    x = ctx.case.representative(ctx.module) if ctx.case.representative else top[:, 0]
    in_top = float(np.linalg.norm(x - top @ (top.T @ x)) / np.linalg.norm(x))
    add("representative lies in top eigenspace", in_top, in_top < ANGLE_TOL)
    rep_dim = projective_orbit_dim(ctx.module, x)
    sampled = [projective_orbit_dim(ctx.module, rng.standard_normal(ctx.module.dim)) for _ in range(ORBIT_SAMPLES)]
    add(
        f"minimality evidence: no sampled orbit smaller ({ORBIT_SAMPLES} samples)",
        {"representative": rep_dim, "sampled_min": min(sampled)},
        rep_dim <= min(sampled),
    )
    d = ctx.decorated.diagram
    if is_split(d) and len(d.components) == 1:
        rs = build_root_system(d.components[0].type)
        want = split_minimal_orbit_dim(rs, ctx.decorated.coefficients, d)
        add("split minimal orbit dim", {"numeric": rep_dim, "symbolic": want}, rep_dim == want)

    ok, text = _fs_check(ctx)
    add("Frobenius-Schur type", text, ok)

    return {
        "case": name,
        "description": ctx.case.description,
        "crossed": list(ctx.crossed),
        "k_summary": [[t, list(w)] for t, w in res.k_summary],
        "w_dim_real": res.w_dim_real,
        "verdict": verdict.verdict,
        "checks": checks,
        "seed": seed,
        "pass": all(c["pass"] for c in checks),
    }


def verify_reduction(name: str, seed: int = DEFAULT_SEED) -> dict:
    return verify_case(name, seed)


def verify_all(seed: int = DEFAULT_SEED, names: Optional[Sequence[str]] = None) -> List[dict]:
    return [verify_case(n, seed) for n in (names or list(CASES))]
