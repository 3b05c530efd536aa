"""Command-line front end.

Subcommands::

    supercohom verify          run the reproduction suite on a grid
                               (--acceptance: lambda in [-2, 2], k <= 4)
    supercohom scan            one H^1 report per (lambda, mu) cell
    supercohom bracket-table   structure constants of osp22 / osp12 / sl2
    supercohom invariant-ops   classify invariant bilinear operators
    supercohom catalog list    named cocycle families
    supercohom catalog show    one family at one parameter

Reports go to stdout (or ``--out``) as JSON with sorted keys, or as text.
Exit status: 0 when every check passed, 1 when some check failed, 2 on a
configuration or I/O error.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import logging
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Optional, Sequence

from supercohom import catalog
from supercohom.cohomology import (
    coboundary_solve,
    delta0,
    h1_dimension,
    is_cocycle,
    is_relative_cochain,
    normalize_translation,
    quotient_rank,
)
from supercohom.contact import Algebra, GeneratorId, bracket_table, structure_constants
from supercohom.family import FormulaFamily, Status
from supercohom.invariants import (
    HSource,
    check_closed_form,
    check_pair,
    classify,
    default_gap,
    disagreements,
    scan_constraint_variety,
)
from supercohom.linalg import rank
from supercohom.operators import SuperDiffOp, module_action, psi_blocks
from supercohom.results import (
    CaseResult,
    VerificationReport,
    _build_verification_report,
    predicted_h1,
)
from supercohom.superfield import T12, Parity, SuperFunction, format_scalar, parse_scalar

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)


# -- configuration ----------------------------------------------------------


@dataclasses.dataclass(frozen=True, slots=True)
class RunConfig:
    """Validated command-line settings."""

    command: str
    fmt: str = "json"
    out: Optional[Path] = None
    order: Optional[int] = None
    degree: Optional[int] = None
    relative: bool = False
    lam: Optional[Fraction] = None
    mu: Optional[Fraction] = None
    lam_min: Fraction = Fraction(-1)
    lam_max: Fraction = Fraction(1)
    lam_step: Fraction = HALF
    gap_min: Fraction = Fraction(0)
    gap_max: Fraction = Fraction(1)
    k: Optional[int] = None
    k_max: int = 2
    jobs: int = 1
    algebra: Optional[str] = None
    source: Optional[str] = None
    gap: Optional[str] = None
    action: str = "list"
    name: Optional[str] = None
    param: Optional[Fraction] = None
    acceptance: bool = False
    verbose: int = 0

    @property
    def lambda_grid(self) -> list[Fraction]:
        if self.lam is not None:
            return [self.lam]
        return frange(self.lam_min, self.lam_max, self.lam_step)

    @property
    def gap_grid(self) -> list[Fraction]:
        return frange(self.gap_min, self.gap_max, HALF)

    @property
    def classifier_grid(self) -> tuple[Fraction, ...]:
        bound = Fraction(2) if self.acceptance else Fraction(1)
        return tuple(frange(-bound, bound, Fraction(1, 4)))

    @property
    def off_pattern_bound(self) -> Fraction:
        """|lambda|, |mu| limit for the cells where H^1 must vanish."""
        return Fraction(3) if self.acceptance else Fraction(1)

    def parameters(self) -> dict[str, Any]:
        out = {}
        for f in dataclasses.fields(self):
            value = getattr(self, f.name)
            if f.name in ("out", "verbose", "fmt", "jobs") or value is None:
                continue
            out[f.name] = format_scalar(value) if isinstance(value, Fraction) else value
        return out


def frange(lo: Fraction, hi: Fraction, step: Fraction) -> list[Fraction]:
    """lo, lo+step, ... up to hi inclusive; empty when lo > hi."""
    out = []
    value = lo
    while value <= hi:
        out.append(value)
        value += step
    return out


def _rational(text: Optional[str], flag: str) -> Optional[Fraction]:
    if text is None:
        return None
    try:
        return parse_scalar(text)
    except ValueError as exc:
        raise ValueError(f"{flag}: {exc}") from None


def _build_run_config(args: argparse.Namespace) -> RunConfig:
    """Turn parsed arguments into a RunConfig, validating everything at once."""
    fields: dict[str, Any] = {
        "command": args.command,
        "fmt": args.format,
        "out": Path(args.out) if args.out else None,
        "order": args.order,
        "degree": args.degree,
        "relative": args.relative,
        "lam": _rational(args.lam, "--lambda"),
        "mu": _rational(args.mu, "--mu"),
        "k": args.k,
        "jobs": args.jobs,
        "algebra": args.algebra,
        "source": args.source,
        "gap": args.gap,
        "verbose": args.verbose,
    }
    if args.acceptance:
        fields.update(acceptance=True, lam_min=Fraction(-2), lam_max=Fraction(2), k_max=4)
    if args.k_max is not None:
        fields["k_max"] = args.k_max
    for name, flag in (("lam_min", "--lambda-min"), ("lam_max", "--lambda-max"),
                       ("lam_step", "--lambda-step"), ("gap_min", "--gap-min"),
                       ("gap_max", "--gap-max")):
        value = _rational(getattr(args, name), flag)
        if value is not None:
            fields[name] = value
    if args.command == "catalog":
        fields["action"] = args.action
        fields["name"] = args.name
        fields["param"] = _rational(args.param, "--param")
    config = RunConfig(**fields)

    for name in ("order", "degree"):
        value = getattr(config, name)
        if value is not None and value < 1:
            raise ValueError(f"--{name} must be >= 1, got {value}")
    if config.lam_step <= 0:
        raise ValueError(f"--lambda-step must be > 0, got {format_scalar(config.lam_step)}")
    if config.jobs < 1:
        raise ValueError(f"--jobs must be >= 1, got {config.jobs}")
    if config.k is not None and config.k < 0:
        raise ValueError(f"--k must be >= 0, got {config.k}")
    if config.k_max < 0:
        raise ValueError(f"--k-max must be >= 0, got {config.k_max}")
    if config.algebra is not None:
        Algebra.parse(config.algebra)
    if config.relative and config.algebra not in (None, "osp22"):
        raise ValueError("--relative is only defined for osp22")
    if config.command == "invariant-ops" and config.source is not None:
        check_pair(config.algebra or HSource.parse(config.source).algebra, config.source)
    if config.command == "catalog" and config.action == "show":
        if config.name is None or config.param is None:
            raise ValueError("catalog show needs --name and --param")
        catalog.family(config.name).check_parameter(config.param)
    return config


# -- task dispatch ----------------------------------------------------------

Task = tuple[Callable[..., CaseResult], tuple]


def _task_id(task: Task) -> str:
    fn, args = task
    parts = [fn.__name__.removeprefix("_case_")]
    for arg in args:
        if isinstance(arg, Fraction):
            parts.append(format_scalar(arg))
        elif isinstance(arg, (str, int, bool)) or arg is None:
            parts.append(str(arg))
    return "/".join(parts)


def _call(task: Task) -> CaseResult:
    """Run one case; a mathematical error inside it is that case's failure."""
    fn, args = task
    try:
        return fn(*args)
    except (ValueError, ArithmeticError) as exc:
        case_id = _task_id(task)
        logger.warning("%s raised %s: %s", case_id, type(exc).__name__, exc)
        return CaseResult(case_id, False, witness={"error": f"{type(exc).__name__}: {exc}"})


def _run_tasks(tasks: Sequence[Task], jobs: int) -> list[CaseResult]:
    """Evaluate independent cases, in order, optionally in worker processes."""
    if jobs <= 1 or len(tasks) <= 1:
        return [_call(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_call, tasks))


def _engine_version() -> str:
    from supercohom import __version__

    return __version__


# -- individual checks ------------------------------------------------------


def _case_antisymmetry(algebra: str) -> CaseResult:
    table = structure_constants(algebra)
    for (g, h), coords in table.items():
        sign = -1 if (g.parity is Parity.ODD and h.parity is Parity.ODD) else 1
        mirrored = {k: -sign * c for k, c in table[h, g].items()}
        if coords != mirrored:
            return CaseResult(f"bracket/antisymmetry/{algebra}", False,
                              witness={"pair": [g.value, h.value]})
    return CaseResult(f"bracket/antisymmetry/{algebra}", True)


def _case_jacobi(algebra: str) -> CaseResult:
    table = structure_constants(algebra)
    gens = Algebra.parse(algebra).generators

    def br(u: dict, v: GeneratorId) -> dict:
        out: dict = {}
        for g, c in u.items():
            for k, d in table[g, v].items():
                out[k] = out.get(k, 0) + c * d
        return {k: c for k, c in out.items() if c}

    def p(g: GeneratorId) -> int:
        return int(g.parity)

    for a in gens:
        for b in gens:
            for c in gens:
                total: dict = {}
                # (-1)^{|a||c|}[[a,b],c] + cyclic
                for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
                    sign = -1 if p(x) * p(z) % 2 else 1
                    for k, v in br(table[x, y], z).items():
                        total[k] = total.get(k, 0) + sign * v
                if any(total.values()):
                    return CaseResult(f"bracket/jacobi/{algebra}", False,
                                      witness={"triple": [a.value, b.value, c.value]})
    return CaseResult(f"bracket/jacobi/{algebra}", True)


def _suspect_summands(name: str, parameter: Fraction) -> list[dict[str, Any]]:
    """Summands of a closed formula that are not of ad(X_x)-weight 0."""
    family = catalog.family(name)
    if not isinstance(family, FormulaFamily):
        return []
    suspects = [row for row in family.summand_weights(parameter) if row["weights"] != ["0"]]
    for row in suspects:
        logger.warning("%s(%s): summand %d on %s has weights %s, suspected misprint",
                       name, format_scalar(parameter), row["summand"], row["generator"],
                       ", ".join(row["weights"]))
    return suspects


def _case_catalog(name: str, parameter: Fraction) -> CaseResult:
    """Summand weights and cocycle test, plus a non-triviality certificate for classes."""
    case_id = f"catalog/{name}/{format_scalar(parameter)}"
    entry = catalog.make(name, parameter)
    detail: dict[str, Any] = {
        "lambda": format_scalar(entry.weights[0]),
        "mu": format_scalar(entry.weights[1]),
    }
    suspects = _suspect_summands(name, entry.parameter)
    if suspects:
        return CaseResult(case_id, False, detail, witness={"suspected_misprints": suspects})
    check = is_cocycle(entry.cochain)
    if not check:
        return CaseResult(case_id, False, detail, witness=check.to_json())
    if entry.claimed_status is Status.NONTRIVIAL:
        result = coboundary_solve(entry.cochain)
        if result.is_coboundary or not result.verify():
            return CaseResult(case_id, False, detail, witness=result.to_json())
        detail["certificate_rows"] = result.certificate.size
    return CaseResult(case_id, True, detail)


def _case_translation(name: str, parameter: Fraction) -> CaseResult:
    """After Y(X1) = 0, X1 . Y(X_F) = Y([X1, X_F]) for every generator."""
    case_id = f"translation/{name}/{format_scalar(parameter)}"
    _, Y = normalize_translation(catalog.make(name, parameter).cochain)
    table = structure_constants(Y.algebra)
    x1 = GeneratorId.X1
    for g in Y.generators:
        rhs = SuperDiffOp.zero(Y.source_weight, Y.target_weight, Y.shift)
        for h, c in table[x1, g].items():
            rhs = rhs + Y.value(h) * c
        if module_action(x1.field, Y.value(g), Y.variables) != rhs:
            return CaseResult(case_id, False, witness={"generator": g.value})
    return CaseResult(case_id, True)


def _case_h1(lam: Fraction, mu: Fraction, relative: bool, algebra: str,
             order: Optional[int], degree: Optional[int]) -> CaseResult:
    report = h1_dimension(lam, mu, relative=relative, order=order, degree=degree,
                          algebra=algebra)
    expected = predicted_h1(lam, mu, relative=relative, algebra=algebra)
    tag = "relative" if relative else "absolute"
    case_id = f"h1/{algebra}/{tag}/{format_scalar(lam)},{format_scalar(mu)}"
    detail = report.to_json()
    detail["expected"] = expected
    passed = report.h1_dim == expected and report.plateau
    return CaseResult(case_id, passed, detail, witness=None if passed else detail)


def _case_independence(names: tuple[str, ...], parameter: Fraction) -> CaseResult:
    cochains = [catalog.make(n, parameter).cochain for n in names]
    r = quotient_rank(cochains)
    case_id = f"independence/{'+'.join(names)}/{format_scalar(parameter)}"
    passed = r == len(cochains)
    detail = {"rank": r, "count": len(cochains)}
    return CaseResult(case_id, passed, detail, witness=None if passed else detail)


def _random_even(rng: random.Random, degree: int = 3) -> SuperFunction:
    return SuperFunction.from_terms(
        [(mask, n, rng.randint(-5, 5)) for mask in (0, T12) for n in range(degree + 1)]
    )


def _case_theta12_identity(k: int, seed: int, samples: int = 20) -> CaseResult:
    """Upsilon-k-tilde(X_{t1 t2}) acts on even F as -k eta1 eta2^{2k-1}."""
    case_id = f"identity/upsilon-k-tilde-t1t2/{k}"
    entry = catalog.make("upsilon-k-tilde", k)
    lam, mu = entry.weights
    op = entry.cochain.value(GeneratorId.Xt1t2)
    expected = SuperDiffOp.from_word(-k, 1, 2 * k - 1, 0, lam, mu)
    rng = random.Random(seed)
    for _ in range(samples):
        F = _random_even(rng)
        if op(F) != expected(F):
            return CaseResult(case_id, False, witness={"F": F.to_json()})
    return CaseResult(case_id, True, {"samples": samples})


def _case_relative_generators(lam: Fraction, mu: Fraction) -> CaseResult:
    case_id = f"relative-generators/{format_scalar(lam)},{format_scalar(mu)}"
    ops = catalog.relative_coboundary_generators(lam, mu)
    for op in ops:
        Y = delta0(op)
        if not is_relative_cochain(Y) or not is_cocycle(Y):
            return CaseResult(case_id, False, witness={"operator": op.to_json()})
    return CaseResult(case_id, True, {"generators": len(ops)})


def _case_relative_class(name: str, parameter: Fraction) -> CaseResult:
    """A relative class: zero on osp(1|2), invariant on Pi(h), closed and not exact."""
    case_id = f"relative-class/{name}/{format_scalar(parameter)}"
    Y = catalog.make(name, parameter).cochain
    if not is_relative_cochain(Y):
        return CaseResult(case_id, False, witness={"relative": False})
    check = is_cocycle(Y)
    if not check:
        return CaseResult(case_id, False, witness=check.to_json())
    result = coboundary_solve(Y)
    if result.is_coboundary or not result.verify():
        return CaseResult(case_id, False, witness=result.to_json())
    return CaseResult(case_id, True, {"certificate_rows": result.certificate.size})


def _case_odd_relative_span(lam: Fraction, mu: Fraction) -> CaseResult:
    """Odd relative cocycles are exactly the coboundaries of the listed operators."""
    case_id = f"relative-odd-span/{format_scalar(lam)},{format_scalar(mu)}"
    report = h1_dimension(lam, mu, relative=True, parity=Parity.ODD, check_plateau=False)
    odd = [op for op in catalog.relative_coboundary_generators(lam, mu)
           if op.parity is Parity.ODD]
    spanned = rank([delta0(op).as_vector() for op in odd])
    detail = {"z1": report.z1_dim, "spanned": spanned}
    passed = report.z1_dim == spanned
    return CaseResult(case_id, passed, detail, witness=None if passed else detail)


def _case_lift(name: str, parameter: Fraction, slot: str) -> CaseResult:
    case_id = f"lift/{name}/{format_scalar(parameter)}/{slot}"
    lifted = catalog.lift(catalog.make(name, parameter), slot)
    check = is_cocycle(lifted)
    if not check:
        return CaseResult(case_id, False, witness=check.to_json())
    for g, op in lifted.items():
        blocks = psi_blocks(op)
        stray = [s for s in catalog.BLOCK_SLOTS if s != slot and getattr(blocks, s)]
        if stray:
            return CaseResult(case_id, False, witness={"generator": g.value, "blocks": stray})
    return CaseResult(case_id, True)


def _case_classifier(algebra: str, source: str, gap: str, grid: tuple[Fraction, ...],
                     k_max: int) -> CaseResult:
    rows = scan_constraint_variety(algebra, source, grid, k_max, gap=gap)
    bad = disagreements(rows)
    case_id = f"invariants/{algebra}/{source}/{gap}"
    detail = {"cells": len(rows), "nonempty": sum(1 for r in rows if r.dimension)}
    if bad:
        return CaseResult(case_id, False, detail, witness={"rows": [r.to_json() for r in bad]})
    return CaseResult(case_id, True, detail)


# -- suites -----------------------------------------------------------------

_DIAGONAL = ("upsilon-diag", "upsilon-diag-tilde")
_ANTI_DIAGONAL = ("upsilon-k", "upsilon-k-tilde", "upsilon-k-bar")
_GAMMA_K = ("gamma-k", "gamma-k-tilde")


def _is_pattern(lam: Fraction, mu: Fraction) -> bool:
    k = 2 * mu
    return lam == mu or (lam == -mu and k.denominator == 1 and k >= 1)


_OFF_PATTERN_GAPS = (HALF, -HALF, Fraction(1), Fraction(-1), Fraction(3, 2), Fraction(2))


def off_pattern_cells(bound: Fraction, count: int) -> list[tuple[Fraction, Fraction]]:
    """Up to *count* cells with mu - lambda in Z/2, |lambda|, |mu| <= bound, H^1 = 0."""
    cells = []
    for gap in _OFF_PATTERN_GAPS:
        for lam in frange(-bound, bound, Fraction(1)):
            mu = lam + gap
            if abs(mu) <= bound and not _is_pattern(lam, mu):
                cells.append((lam, mu))
    return cells[:count]


def _verify_tasks(config: RunConfig) -> list[Task]:
    grid = config.lambda_grid
    ks = [Fraction(k) for k in range(1, config.k_max + 1)]
    order, degree = config.order, config.degree
    tasks: list[Task] = []

    def h1(lam: Fraction, mu: Fraction, relative: bool = False, algebra: str = "osp22"):
        tasks.append((_case_h1, (lam, mu, relative, algebra, order, degree)))

    def nontrivial(name: str, parameter: Fraction) -> None:
        tasks.append((_case_catalog, (name, parameter)))
        tasks.append((_case_translation, (name, parameter)))

    for algebra in ("osp22", "osp12", "sl2"):
        tasks += [(_case_antisymmetry, (algebra,)), (_case_jacobi, (algebra,))]
    for lam in grid:
        for name in _DIAGONAL + ("gamma-diag",):
            nontrivial(name, lam)
        tasks.append((_case_independence, (_DIAGONAL, lam)))
        if lam:
            tasks.append((_case_relative_class, ("upsilon-diag-tilde", lam)))
        for slot in catalog.BLOCK_SLOTS:
            tasks.append((_case_lift, ("gamma-diag", lam, slot)))
        h1(lam, lam)
        h1(lam, lam, relative=True)
        h1(lam, lam, algebra="osp12")
        h1(lam, lam + HALF, algebra="osp12")
    for kk in ks:
        for name in _ANTI_DIAGONAL + _GAMMA_K:
            nontrivial(name, kk)
        tasks.append((_case_independence, (_ANTI_DIAGONAL, kk)))
        tasks.append((_case_independence, (_GAMMA_K, kk)))
        tasks.append((_case_relative_class, ("upsilon-k-tilde", kk)))
        h1(-kk / 2, kk / 2)
        h1(-kk / 2, kk / 2, relative=True)
        h1((1 - kk) / 2, kk / 2, algebra="osp12")
        tasks.append((_case_theta12_identity, (int(kk), 1000 + int(kk))))
        for name in _GAMMA_K:
            for slot in catalog.BLOCK_SLOTS:
                tasks.append((_case_lift, (name, kk, slot)))
        lam12 = (1 - kk) / 2
        tasks.append((_case_relative_generators, (lam12, kk / 2)))
        tasks.append((_case_odd_relative_span, (lam12, kk / 2)))
        tasks.append((_case_relative_generators, (-kk / 2, (kk - 1) / 2)))
        tasks.append((_case_odd_relative_span, (-kk / 2, (kk - 1) / 2)))
    if config.acceptance:
        cells = off_pattern_cells(config.off_pattern_bound, 20)
        for lam, mu in cells:
            h1(lam, mu)
        for lam, mu in cells[:10]:
            h1(lam, mu, relative=True)
    else:
        for lam in grid:
            for gap in config.gap_grid:
                mu = lam + gap
                if gap and not _is_pattern(lam, mu):
                    h1(lam, mu)
                    if gap == HALF:
                        h1(lam, mu, relative=True)
    for lam in grid:
        tasks.append((_case_relative_generators, (lam, lam + HALF)))
        tasks.append((_case_relative_generators, (lam, lam - HALF)))
    for algebra, source, gap in (("sl2", "h0", "half"), ("sl2", "h1", "whole"),
                                 ("osp12", "h_full", "half"), ("osp12", "h_full", "whole")):
        tasks.append((_case_classifier,
                      (algebra, source, gap, config.classifier_grid, config.k_max)))
    return tasks


def run_verify_theorems(config: RunConfig) -> VerificationReport:
    """Cocycle families, certificates, dimensions and classifier zero sets on a grid."""
    tasks = _verify_tasks(config)
    logger.info("verify: %d cases, %d job(s)", len(tasks), config.jobs)
    cases = _run_tasks(tasks, config.jobs)
    return _build_verification_report("verify", cases, _engine_version(), config.parameters())


def run_scan(config: RunConfig) -> VerificationReport:
    """One H1 report per (lambda, mu) cell, compared with the predicted table."""
    algebra = config.algebra or "osp22"
    if config.lam is not None and config.mu is not None:
        cells = [(config.lam, config.mu)]
    else:
        cells = [(lam, lam + gap) for lam in config.lambda_grid for gap in config.gap_grid]
    tasks = [(_case_h1, (lam, mu, config.relative, algebra, config.order, config.degree))
             for lam, mu in cells]
    cases = _run_tasks(tasks, config.jobs)
    rows = [{k: v for k, v in c.detail.items() if k != "expected"} for c in cases]
    return _build_verification_report("scan", cases, _engine_version(),
                                      config.parameters(), rows)


def run_bracket_table(config: RunConfig) -> VerificationReport:
    algebra = config.algebra or "osp22"
    cases = [_case_antisymmetry(algebra), _case_jacobi(algebra)]
    return _build_verification_report("bracket-table", cases, _engine_version(),
                                      config.parameters(), [bracket_table(algebra)])


def run_invariant_ops(config: RunConfig) -> VerificationReport:
    if config.source is not None:
        source = HSource.parse(config.source)
        algebra = config.algebra or source.algebra.value
    else:
        algebra = config.algebra or "sl2"
        source = HSource.H_FULL if Algebra.parse(algebra) is Algebra.OSP12 else HSource.H0
    gap = config.gap or default_gap(source).value
    if config.k is not None:
        lam = config.lam if config.lam is not None else Fraction(0)
        result = classify(algebra, source, lam, config.k, gap=gap)
        case_id = f"invariants/{algebra}/{source.value}/{gap}/{format_scalar(lam)}/{config.k}"
        passed = result.agrees is not False
        if result.solution_basis:
            passed = passed and check_closed_form(result)
        case = CaseResult(case_id, passed, {"dimension": result.dimension},
                          witness=None if passed else result.to_json())
        return _build_verification_report("invariant-ops", [case], _engine_version(),
                                          config.parameters(), [result.to_json()])
    case = _case_classifier(algebra, source.value, gap, tuple(config.lambda_grid), config.k_max)
    rows = scan_constraint_variety(algebra, source, config.lambda_grid, config.k_max, gap=gap)
    return _build_verification_report("invariant-ops", [case], _engine_version(),
                                      config.parameters(), [r.to_json() for r in rows])


def run_catalog_list(config: RunConfig) -> VerificationReport:
    if config.action == "show":
        assert config.name is not None and config.param is not None
        entry = catalog.make(config.name, config.param)
        case = _case_catalog(config.name, entry.parameter)
        row = entry.to_json()
        family = catalog.family(config.name)
        if isinstance(family, FormulaFamily):
            row["summand_weights"] = family.summand_weights(entry.parameter)
        return _build_verification_report("catalog", [case], _engine_version(),
                                          config.parameters(), [row])
    return _build_verification_report("catalog", [], _engine_version(),
                                      config.parameters(), catalog.catalog_list())


_RUNNERS = {
    "verify": run_verify_theorems,
    "scan": run_scan,
    "bracket-table": run_bracket_table,
    "invariant-ops": run_invariant_ops,
    "catalog": run_catalog_list,
}


# -- output -----------------------------------------------------------------


def render(report: VerificationReport, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report.to_json(), indent=2, sort_keys=True) + "\n"
    lines = [f"{report.kind} (supercohom {report.engine_version})"]
    for case in report.cases:
        status = "PASS" if case.passed else "FAIL"
        line = f"{status}  {case.case_id}"
        if case.witness is not None:
            line += "  " + json.dumps(case.witness, sort_keys=True)
        lines.append(line)
    for row in report.rows:
        lines.append("  ".join(
            f"{k}={json.dumps(v, sort_keys=True)}" for k, v in sorted(row.items())
        ))
    lines.append(f"{report.n_passed} passed, {report.n_failed} failed")
    return "\n".join(lines) + "\n"


def _write(text: str, out: Optional[Path]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text, encoding="utf-8")


# -- argument parsing -------------------------------------------------------


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")
    common.add_argument("--order", type=int, metavar="N", help="half-order bound")
    common.add_argument("--degree", type=int, metavar="M", help="coefficient degree bound")
    common.add_argument("--relative", action="store_true",
                        help="cohomology relative to osp(1|2)")
    common.add_argument("--lambda", dest="lam", metavar="P/Q")
    common.add_argument("--mu", metavar="P/Q")
    common.add_argument("--lambda-min", dest="lam_min", metavar="P/Q")
    common.add_argument("--lambda-max", dest="lam_max", metavar="P/Q")
    common.add_argument("--lambda-step", dest="lam_step", metavar="P/Q")
    common.add_argument("--gap-min", metavar="P/Q", help="smallest mu - lambda in scans")
    common.add_argument("--gap-max", metavar="P/Q", help="largest mu - lambda in scans")
    common.add_argument("--k", type=int)
    common.add_argument("--k-max", type=int, metavar="K",
                        help="largest k (default 2, 4 with --acceptance)")
    common.add_argument("--acceptance", action="store_true",
                        help="widen verify to the full acceptance grid")
    common.add_argument("--jobs", type=int, default=1, metavar="W")
    common.add_argument("--algebra", choices=("osp22", "osp12", "sl2"))
    common.add_argument("--source", choices=("h0", "h1", "h_full"))
    common.add_argument("--gap", choices=("half", "whole"))
    common.add_argument("-v", "--verbose", action="count", default=0)
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="supercohom",
        description="Exact osp(2|2)-cohomology of differential operators on superdensities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("verify", parents=[common], help="run the reproduction suite")
    sub.add_parser("scan", parents=[common], help="H^1 dimensions over a grid")
    sub.add_parser("bracket-table", parents=[common], help="structure constants")
    sub.add_parser("invariant-ops", parents=[common], help="invariant bilinear operators")
    cat = sub.add_parser("catalog", parents=[common], help="named cocycle families")
    cat.add_argument("action", choices=("list", "show"), nargs="?", default="list")
    cat.add_argument("--name")
    cat.add_argument("--param", metavar="P/Q")
    return parser


def _configure_logging(verbose: int) -> None:
    level = logging.WARNING if verbose == 0 else logging.INFO if verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)
    try:
        config = _build_run_config(args)
    except (ValueError, KeyError) as exc:
        message = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"supercohom: error: {message}", file=sys.stderr)
        return 2
    report = _RUNNERS[config.command](config)
    try:
        _write(render(report, config.fmt), config.out)
    except OSError as exc:
        print(f"supercohom: error: {exc}", file=sys.stderr)
        return 2
    return report.exit_code


__all__ = [
    "RunConfig",
    "frange",
    "build_parser",
    "main",
    "render",
    "run_verify_theorems",
    "run_scan",
    "run_bracket_table",
    "run_invariant_ops",
    "run_catalog_list",
]


if __name__ == "__main__":
    raise SystemExit(main())
