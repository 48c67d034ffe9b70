"""Command-line surface: relation suites, landscape data, state reports.

Subcommands
-----------
verify     run TL / braid / YBE / reduction residual suites (exit 1 on failure)
landscape  emit grid, section or curve samples as CSV or JSON
extrema    locate critical points and label the states sitting on them
state      report amplitudes and entanglement measures for one parameter point
reduce     cross-check the 8x8 factorized matrix against its 2x2 fusion form

All numbers are emitted with 17 significant digits so downstream plotting
is lossless, and a fixed seed makes randomized suites byte-reproducible.
Exit codes: 0 success, 1 tolerance failure, 2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import tempfile

import numpy as np

from . import __version__
from .braiding import (
    ALPHA_TYPE1,
    ALPHA_TYPE2,
    PHASE_TYPE1,
    PHASE_TYPE2,
    bell_braid,
    braid2x2_type1,
    braid2x2_type2,
    braid_from_tl,
    braid_rep_from_local,
    check_braid_relations,
    check_tl_relations,
    lift_two_site,
    permutation_matrix,
    quantum_dimension,
    tl2x2_type1,
    tl2x2_type2,
    tl_rep_from_local,
    tl_type1_local,
    tl_type2_local,
)
from .entanglement import classify_slocc, entanglement_report
from .fusionbasis import (
    LeakageError,
    embed_three_body,
    fusion_basis_type1,
    fusion_basis_type2,
    reduce_operator,
    verify_basis_reduction,
)
from .landscape import (
    AxisSpec,
    FUNCTIONS,
    find_critical_points_1d,
    find_critical_points_2d,
    get_function,
    sample_curve,
    sample_surface,
    section,
)
from .rmatrix import bundled_families, check_ybe
from .threebody import (
    AngleTriple,
    ConstraintViolation,
    ScatterParams,
    angles_to_params,
    fusion_form,
    product_form,
    random_constrained_triple,
    state_from_params,
)

EXIT_OK = 0
EXIT_TOLERANCE = 1
EXIT_USAGE = 2


def fmt(x: float) -> str:
    """Fixed 17-significant-digit decimal rendering."""
    return format(float(x), ".17g")


def _write_atomic(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".ybekit-")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        _write_atomic(path, text)


def parse_axis(raw: str, name: str) -> AxisSpec:
    parts = raw.split(":")
    if len(parts) != 3:
        raise ValueError(f"--{name} must look like start:stop:count, got {raw!r}")
    start, stop = float(parts[0]), float(parts[1])
    n = int(parts[2])
    return AxisSpec(name, start, stop, n)


def parse_thetas(raw: str) -> AngleTriple:
    parts = raw.split(",")
    if len(parts) != 3:
        raise ValueError(f"--thetas needs three comma-separated angles, got {raw!r}")
    return AngleTriple(float(parts[0]), float(parts[1]), float(parts[2]))


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _tl_suite(tol: float, perturb: float) -> list[tuple[str, float, float]]:
    rows = []
    local1 = tl_type1_local()
    if perturb:
        local1 = local1.copy()
        local1[1, 1] += perturb
    fixtures = [
        ("tl.type1.4x4.n3", tl_rep_from_local(local1, 3, 2.0)),
        ("tl.type2.4x4.n3", tl_rep_from_local(tl_type2_local(0.0), 3, math.sqrt(2.0))),
        ("tl.type1.2x2.strands4", tl2x2_type1()),
        ("tl.type2.2x2.strands4", tl2x2_type2()),
    ]
    for name, rep in fixtures:
        for relation, residual in check_tl_relations(rep).items():
            rows.append((f"{name}: {relation}", residual, tol))
    return rows


def _braid_suite(tol: float) -> list[tuple[str, float, float]]:
    rows = []
    fixtures = [
        ("braid.bell.n3", braid_rep_from_local(bell_braid(0.0), 3)),
        ("braid.permutation.n3", braid_rep_from_local(permutation_matrix(), 3)),
        ("braid.type1.2x2.strands4", braid2x2_type1()),
        ("braid.type2.2x2.strands4", braid2x2_type2()),
    ]
    for name, rep in fixtures:
        for relation, residual in check_braid_relations(rep).items():
            rows.append((f"{name}: {relation}", residual, tol))

    rows.append(
        ("alpha-d consistency: type1 (alpha=i, d=2)",
         abs(quantum_dimension(ALPHA_TYPE1) - 2.0), 1e-14)
    )
    rows.append(
        ("alpha-d consistency: type2 (alpha=e^{3i pi/8}, d=sqrt2)",
         abs(quantum_dimension(ALPHA_TYPE2) - math.sqrt(2.0)), 1e-14)
    )

    rep1 = tl_rep_from_local(tl_type1_local(), 3, 2.0)
    built1 = braid_from_tl(ALPHA_TYPE1, rep1, PHASE_TYPE1)
    target1 = braid_rep_from_local(permutation_matrix(), 3)
    dev1 = max(
        float(np.max(np.abs(a - b)))
        for a, b in zip(built1.generators, target1.generators)
    )
    rows.append(("braid-from-tl type1 reproduces the permutation braid", dev1, tol))

    rep2 = tl_rep_from_local(tl_type2_local(0.0), 3, math.sqrt(2.0))
    built2 = braid_from_tl(ALPHA_TYPE2, rep2, PHASE_TYPE2)
    target2 = braid_rep_from_local(bell_braid(0.0), 3)
    dev2 = max(
        float(np.max(np.abs(a - b)))
        for a, b in zip(built2.generators, target2.generators)
    )
    rows.append(("braid-from-tl type2 reproduces the Bell braid", dev2, tol))
    return rows


def _ybe_suite(tol: float, samples: int, seed: int, family_filter: str) -> list[tuple[str, float, float]]:
    rows = []
    rng = np.random.default_rng(seed)
    for name, family in sorted(bundled_families().items()):
        if family_filter != "all" and not name.startswith(family_filter):
            continue
        worst = 0.0
        produced = 0
        while produced < samples:
            if family.additivity == "galilean":
                p1, p3 = rng.uniform(-0.9, 0.9, size=2)
                if abs(1.0 - (p1 + p3) ** 2) < 0.05:
                    continue
            else:
                p1, p3 = rng.uniform(0.01, 1.55, size=2)
            worst = max(worst, check_ybe(family, float(p1), float(p3)))
            produced += 1
        rows.append((f"ybe.{name} ({samples} samples)", worst, tol))
    return rows


def _reduction_suite(tol: float, samples: int, seed: int) -> list[tuple[str, float, float]]:
    rows = []
    basis2 = fusion_basis_type2(0.0)
    basis1 = fusion_basis_type1()

    for label, basis in (("type1", basis1), ("type2", basis2)):
        gram_dev = max(
            abs(np.vdot(basis.e1, basis.e1) - 1.0),
            abs(np.vdot(basis.e2, basis.e2) - 1.0),
            abs(np.vdot(basis.e1, basis.e2)),
        )
        rows.append((f"fusion-basis.{label} orthonormality", float(gram_dev), 1e-13))

    b_bell_1 = lift_two_site(bell_braid(0.0), 1, 4)
    red_b1 = reduce_operator(b_bell_1, basis2, tol=1e-10)
    expect_b1 = np.exp(-1j * np.pi / 4) * np.diag([1.0, 1j])
    rows.append(
        ("reduce.type2 braid generator 1 -> e^{-i pi/4} diag(1, i)",
         float(np.max(np.abs(red_b1 - expect_b1))), tol)
    )
    b_bell_2 = lift_two_site(bell_braid(0.0), 2, 4)
    red_b2 = reduce_operator(b_bell_2, basis2, tol=1e-10)
    expect_b2 = np.array([[1, -1j], [-1j, 1]], dtype=complex) / math.sqrt(2.0)
    rows.append(
        ("reduce.type2 braid generator 2 -> [[1,-i],[-i,1]]/sqrt2",
         float(np.max(np.abs(red_b2 - expect_b2))), tol)
    )

    b_perm_2 = lift_two_site(permutation_matrix(), 2, 4)
    red_p2 = reduce_operator(b_perm_2, basis1, tol=1e-10)
    expect_p2 = 0.5 * np.array([[1, -math.sqrt(3)], [-math.sqrt(3), -1]], dtype=complex)
    rows.append(
        ("reduce.type1 braid generator 2 -> [[1,-sqrt3],[-sqrt3,-1]]/2",
         float(np.max(np.abs(red_p2 - expect_p2))), tol)
    )

    rng = np.random.default_rng(seed)
    named = [
        ("ghz preimage (0, pi/4, pi/4)", AngleTriple(0.0, math.pi / 4, math.pi / 4)),
        ("w preimage (pi/8, arctan sqrt2, 3 pi/8)",
         AngleTriple(math.pi / 8, math.atan(math.sqrt(2.0)), 3 * math.pi / 8)),
    ]
    for label, triple in named:
        rows.append((f"reduce.three-body {label}", verify_basis_reduction(triple), 1e-11))
    worst = 0.0
    for _ in range(samples):
        worst = max(worst, verify_basis_reduction(random_constrained_triple(rng)))
    rows.append((f"reduce.three-body random triples ({samples})", worst, 1e-10))
    return rows


def cmd_verify(args) -> int:
    rows: list[tuple[str, float, float]] = []
    suites = (
        ["tl", "braid", "ybe", "reduction"] if args.suite == "all" else [args.suite]
    )
    if "tl" in suites:
        rows += _tl_suite(args.tol, args.perturb)
    if "braid" in suites:
        rows += _braid_suite(args.tol)
    if "ybe" in suites:
        rows += _ybe_suite(args.tol, args.samples, args.seed, args.family)
    if "reduction" in suites:
        rows += _reduction_suite(args.tol, min(args.samples, 200), args.seed)

    failed = 0
    lines = []
    for name, residual, tol in rows:
        ok = residual <= tol
        failed += 0 if ok else 1
        lines.append(
            f"{'PASS' if ok else 'FAIL'}  {name:<64s} residual {fmt(residual):>24s}  tol {tol:.1e}"
        )
    summary = f"{len(rows) - failed}/{len(rows)} checks passed"
    text = "\n".join(lines + [summary]) + "\n"

    if args.format == "json":
        payload = {
            "checks": [
                {"name": n, "residual": float(r), "tol": float(t), "pass": bool(r <= t)}
                for n, r, t in rows
            ],
            "meta": {"seed": args.seed, "tol": args.tol, "version": __version__},
        }
        text = json.dumps(payload, sort_keys=True, indent=1) + "\n"
    _emit(args.output, text)
    if args.output is not None:
        sys.stdout.write(summary + "\n")
    return EXIT_OK if failed == 0 else EXIT_TOLERANCE


# ---------------------------------------------------------------------------
# landscape
# ---------------------------------------------------------------------------

def _csv_text(header: list[str], rows: list[list[str]]) -> str:
    return "\n".join([",".join(header)] + [",".join(r) for r in rows]) + "\n"


def _json_text(fn: str, axes: list[AxisSpec], values: list[float], meta: dict) -> str:
    payload = {
        "fn": fn,
        "axes": [
            {"name": a.name, "start": a.start, "stop": a.stop, "n": a.n} for a in axes
        ],
        "values": values,
        "meta": dict(meta, version=__version__),
    }
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def cmd_landscape(args) -> int:
    spec = get_function(args.fn)
    meta = {"seed": None, "tol": None}

    if spec.arity == 1:
        axis = parse_axis(args.theta, "theta") if args.theta else AxisSpec(
            "theta", spec.default_domain[0][0], spec.default_domain[0][1], 500
        )
        data = sample_curve(args.fn, axis)
        if args.format == "json":
            text = _json_text(args.fn, [axis], [float(v) for v in data[:, 1]], meta)
        else:
            text = _csv_text(
                ["theta", "value"], [[fmt(x), fmt(v)] for x, v in data]
            )
        _emit(args.output, text)
        return EXIT_OK

    if args.section:
        fixed_axis, _, raw_value = args.section.partition("=")
        fixed_axis = fixed_axis.strip()
        if fixed_axis not in ("eta", "beta") or not raw_value:
            raise ValueError(f"--section must be eta=VALUE or beta=VALUE, got {args.section!r}")
        fixed_value = float(raw_value)
        moving = "beta" if fixed_axis == "eta" else "eta"
        if moving == "eta":
            axis = parse_axis(args.eta, "eta") if args.eta else _default_axis(spec, 0, "eta")
        else:
            axis = parse_axis(args.beta, "beta") if args.beta else _default_axis(spec, 1, "beta")
        data = section(args.fn, fixed_axis, fixed_value, axis)
        if args.format == "json":
            text = _json_text(args.fn, [axis], [float(v) for v in data[:, 1]],
                              dict(meta, section=f"{fixed_axis}={fmt(fixed_value)}"))
        else:
            rows = []
            for x, v in data:
                eta = fmt(x) if moving == "eta" else fmt(fixed_value)
                beta = fmt(fixed_value) if moving == "eta" else fmt(x)
                rows.append([eta, beta, fmt(v)])
            text = _csv_text(["eta", "beta", "value"], rows)
        _emit(args.output, text)
        return EXIT_OK

    eta_axis = parse_axis(args.eta, "eta") if args.eta else _default_axis(spec, 0, "eta")
    beta_axis = parse_axis(args.beta, "beta") if args.beta else _default_axis(spec, 1, "beta")
    grid = sample_surface(args.fn, eta_axis, beta_axis)
    if args.format == "json":
        text = _json_text(
            args.fn, [eta_axis, beta_axis],
            [float(v) for v in grid.values.reshape(-1)], meta,
        )
    else:
        etas = eta_axis.points()
        betas = beta_axis.points()
        rows = [
            [fmt(etas[i]), fmt(betas[j]), fmt(grid.values[i, j])]
            for i in range(eta_axis.n)
            for j in range(beta_axis.n)
        ]
        text = _csv_text(["eta", "beta", "value"], rows)
    _emit(args.output, text)
    return EXIT_OK


def _default_axis(spec, index: int, name: str) -> AxisSpec:
    lo, hi = spec.default_domain[index]
    return AxisSpec(name, lo, hi, 200)


# ---------------------------------------------------------------------------
# extrema
# ---------------------------------------------------------------------------

def cmd_extrema(args) -> int:
    spec = get_function(args.fn)
    if spec.arity == 2:
        eta_dom = _axis_bounds(args.eta) if args.eta else None
        beta_dom = _axis_bounds(args.beta) if args.beta else None
        points = find_critical_points_2d(
            args.fn, eta_dom, beta_dom, coarse_n=args.coarse, refine_tol=args.tol
        )
        header = ["eta", "beta", "value", "kind", "smooth", "slocc_class"]
        rows = []
        for p in points:
            label = classify_slocc(state_from_params(ScatterParams(*p.location)))
            rows.append(
                [fmt(p.location[0]), fmt(p.location[1]), fmt(p.value),
                 p.kind, str(p.smooth).lower(), label]
            )
    else:
        dom = _axis_bounds(args.theta) if args.theta else None
        points = find_critical_points_1d(
            args.fn, dom, coarse_n=args.coarse, refine_tol=args.tol
        )
        header = ["theta", "value", "kind", "smooth"]
        rows = [
            [fmt(p.location[0]), fmt(p.value), p.kind, str(p.smooth).lower()]
            for p in points
        ]
    if args.format == "json":
        payload = {
            "fn": args.fn,
            "points": [dict(zip(header, row)) for row in rows],
            "meta": {"coarse": args.coarse, "tol": args.tol, "version": __version__},
        }
        text = json.dumps(payload, sort_keys=True, indent=1) + "\n"
    else:
        text = _csv_text(header, rows)
    _emit(args.output, text)
    return EXIT_OK


def _axis_bounds(raw: str) -> tuple[float, float]:
    parts = raw.split(":")
    if len(parts) < 2:
        raise ValueError(f"domain must look like start:stop[:count], got {raw!r}")
    return float(parts[0]), float(parts[1])


# ---------------------------------------------------------------------------
# state / reduce
# ---------------------------------------------------------------------------

def _params_from_args(args) -> tuple[ScatterParams, AngleTriple | None]:
    if args.thetas:
        triple = parse_thetas(args.thetas)
        return angles_to_params(triple, args.tol), triple
    if args.eta is None or args.beta is None:
        raise ValueError("provide either --thetas or both --eta and --beta")
    return ScatterParams(float(args.eta), float(args.beta)).canonical(), None


def cmd_state(args) -> int:
    params, triple = _params_from_args(args)
    psi = state_from_params(params)
    # Classification thresholds follow the input tolerance: angles typed at
    # a few decimals shift the invariants by the same scale.
    report = entanglement_report(psi, tol=max(args.tol, 1e-6))

    if args.format == "json":
        payload = {
            "eta": params.eta,
            "beta": params.beta,
            "thetas": [triple.t1, triple.t2, triple.t3] if triple else None,
            "amplitudes": [[float(a.real), float(a.imag)] for a in psi],
            "l1": report.l1,
            "vn_entropies_bits": {str(k + 1): v for k, v in report.vn_entropies.items()},
            "three_tangle": report.three_tangle,
            "slocc_class": report.slocc_class,
            "meta": {"version": __version__},
        }
        sys.stdout.write(json.dumps(payload, sort_keys=True, indent=1) + "\n")
        return EXIT_OK

    lines = [f"eta  = {fmt(params.eta)}", f"beta = {fmt(params.beta)}"]
    if triple:
        lines.append(f"thetas = ({fmt(triple.t1)}, {fmt(triple.t2)}, {fmt(triple.t3)})")
    lines.append("amplitudes:")
    for idx, amp in enumerate(psi):
        if abs(amp) > 1e-15:
            lines.append(f"  |{idx:03b}>  {fmt(amp.real)} {'+' if amp.imag >= 0 else '-'} {fmt(abs(amp.imag))}j")
    lines.append(f"l1 norm      = {fmt(report.l1)}")
    for k in range(3):
        lines.append(f"entropy cut {k+1}|rest = {fmt(report.vn_entropies[k])} bits")
    lines.append(f"three-tangle = {fmt(report.three_tangle)}")
    lines.append(f"class        = {report.slocc_class}")
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


def _format_matrix(m: np.ndarray) -> list[str]:
    out = []
    for row in m:
        cells = ", ".join(
            f"{v.real:+.12f}{v.imag:+.12f}j" for v in row
        )
        out.append(f"  [{cells}]")
    return out


def cmd_reduce(args) -> int:
    if args.random:
        rng = np.random.default_rng(args.seed)
        worst = 0.0
        for _ in range(args.random):
            worst = max(worst, verify_basis_reduction(random_constrained_triple(rng)))
        ok = worst <= args.tol
        sys.stdout.write(
            f"{args.random} random constrained triples: max residual {fmt(worst)} "
            f"(tol {args.tol:.1e}) {'PASS' if ok else 'FAIL'}\n"
        )
        return EXIT_OK if ok else EXIT_TOLERANCE

    if not args.thetas:
        raise ValueError("provide --thetas t1,t2,t3 or --random N")
    triple = parse_thetas(args.thetas)
    triple.check(args.constraint_tol)
    reduced = reduce_operator(
        embed_three_body(product_form(triple, args.constraint_tol)),
        fusion_basis_type2(0.0),
        tol=1e-8,
    )
    params = angles_to_params(triple, args.constraint_tol)
    closed = fusion_form(params)
    residual = verify_basis_reduction(triple)
    lines = ["reduced 8x8 product on the fusion basis:"]
    lines += _format_matrix(reduced)
    lines.append("closed 2x2 form at (eta, beta) = "
                 f"({fmt(params.eta)}, {fmt(params.beta)}):")
    lines += _format_matrix(closed)
    lines.append("(the reduced matrix realizes the closed form with reversed "
                 "angle orientation, i.e. entrywise conjugation)")
    ok = residual <= args.tol
    lines.append(f"residual {fmt(residual)} (tol {args.tol:.1e}) {'PASS' if ok else 'FAIL'}")
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK if ok else EXIT_TOLERANCE


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ybekit",
        description="Braid/TL representations, Yang-Baxter families, "
                    "three-body scattering and l1-norm landscapes.",
    )
    parser.add_argument("--version", action="version", version=f"ybekit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run relation/residual suites")
    p_verify.add_argument("--suite", default="all",
                          choices=["tl", "braid", "ybe", "reduction", "all"])
    p_verify.add_argument("--family", default="all",
                          choices=["type1", "type2", "all"],
                          help="restrict the YBE suite to one family")
    p_verify.add_argument("--samples", type=int, default=1000)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--tol", type=float, default=1e-12)
    p_verify.add_argument("--perturb", type=float, default=0.0,
                          help="perturb a TL generator entry (failure-path demo)")
    p_verify.add_argument("--output", default=None)
    p_verify.add_argument("--format", default="text", choices=["text", "json"])
    p_verify.set_defaults(func=cmd_verify)

    p_land = sub.add_parser("landscape", help="emit grid/section/curve samples")
    p_land.add_argument("--fn", required=True, choices=sorted(FUNCTIONS))
    p_land.add_argument("--eta", default=None, help="start:stop:count")
    p_land.add_argument("--beta", default=None, help="start:stop:count")
    p_land.add_argument("--theta", default=None, help="start:stop:count (1-D functions)")
    p_land.add_argument("--section", default=None, help="eta=VALUE or beta=VALUE")
    p_land.add_argument("--output", default=None)
    p_land.add_argument("--format", default="csv", choices=["csv", "json"])
    p_land.set_defaults(func=cmd_landscape)

    p_ext = sub.add_parser("extrema", help="find and classify critical points")
    p_ext.add_argument("--fn", default="l1_S3", choices=sorted(FUNCTIONS))
    p_ext.add_argument("--eta", default=None, help="start:stop domain")
    p_ext.add_argument("--beta", default=None, help="start:stop domain")
    p_ext.add_argument("--theta", default=None, help="start:stop domain (1-D)")
    p_ext.add_argument("--coarse", type=int, default=400)
    p_ext.add_argument("--tol", type=float, default=1e-8)
    p_ext.add_argument("--output", default=None)
    p_ext.add_argument("--format", default="csv", choices=["csv", "json"])
    p_ext.set_defaults(func=cmd_extrema)

    p_state = sub.add_parser("state", help="report one scattering output state")
    p_state.add_argument("--eta", type=float, default=None)
    p_state.add_argument("--beta", type=float, default=None)
    p_state.add_argument("--thetas", default=None, help="t1,t2,t3 on the constraint line")
    p_state.add_argument("--tol", type=float, default=1e-4,
                         help="input tolerance: bounds the --thetas constraint "
                              "residual and the classification thresholds")
    p_state.add_argument("--format", default="text", choices=["text", "json"])
    p_state.set_defaults(func=cmd_state)

    p_red = sub.add_parser("reduce", help="cross-check the fusion-space reduction")
    p_red.add_argument("--thetas", default=None, help="t1,t2,t3 on the constraint line")
    p_red.add_argument("--random", type=int, default=0,
                       help="check N random constrained triples instead")
    p_red.add_argument("--seed", type=int, default=0)
    p_red.add_argument("--tol", type=float, default=1e-10)
    p_red.add_argument("--constraint-tol", type=float, default=1e-4)
    p_red.set_defaults(func=cmd_reduce)

    return parser


_VALUE_FLAGS = {"--eta", "--beta", "--theta", "--thetas"}


def _merge_negative_values(argv: list[str]) -> list[str]:
    """Join flags with values that start with a minus sign (e.g. ranges like
    ``--beta -1.57:1.57:200``) into ``--flag=value`` form so argparse does
    not mistake the value for an option."""
    out: list[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv):
            nxt = argv[i + 1]
            if len(nxt) > 1 and nxt[0] == "-" and (nxt[1].isdigit() or nxt[1] == "."):
                out.append(f"{tok}={nxt}")
                i += 2
                continue
        out.append(tok)
        i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_merge_negative_values(list(argv)))
    try:
        return args.func(args)
    except ConstraintViolation as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except LeakageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_TOLERANCE
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
