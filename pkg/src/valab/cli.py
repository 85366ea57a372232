"""Command-line driver: ``valab check|invariants|semiconformal|mutate FILE``.

Exit codes: 0 all checks pass, 1 some check fails, 2 malformed input,
3 a precondition of the requested computation does not hold.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import __version__
from .algebroid import (
    check_compatibility,
    check_truncated_conformal,
    check_vertex_algebroid,
    ker_partial,
    leibniz_of,
    semisimple_fixture_check,
)
from .commalg import (
    Locality,
    check_algebra,
    choose_t,
    is_gorenstein,
    is_local,
    jacobson_radical,
    nilpotent_oracle,
    poincare_check,
    socle,
)
from .errors import InputError, NoSolution, ParseError, PreconditionViolated, ValabError
from .fileio import AlgebroidFile, load
from .forms import (
    ann_t,
    double_form,
    ideal_a,
    make_context,
    m_subspace,
    perp_lemma_suite,
    rad_double_form,
    self_duality_dim,
    validate_context,
)
from .leibniz import check_leibniz, derived_series, leib_subspace, radical_report, solvable_radical
from .mutation import run_mutations
from .report import FAIL, INDETERMINATE, PASS, SKIPPED, CheckReport, jsonable
from .semiconformal import LOneMap, heisenberg_search, indecomposability_report, pin_L1, solve_L1

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_PRECONDITION = 0, 1, 2, 3


def exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, InputError):
        return EXIT_INPUT
    if isinstance(exc, PreconditionViolated):
        return EXIT_PRECONDITION
    return EXIT_FAIL


@dataclass
class Report:
    command: str
    fixture: str
    checks: CheckReport = field(default_factory=CheckReport)
    error: dict | None = None
    exit_code: int = EXIT_OK

    def finish(self) -> "Report":
        if self.error is None:
            self.exit_code = EXIT_OK if self.checks.ok else EXIT_FAIL
        return self

    def to_json(self) -> dict:
        return {
            "tool_version": __version__,
            "command": self.command,
            "fixture": self.fixture,
            "entries": self.checks.to_json(),
            "error": self.error,
            "exit_code": self.exit_code,
        }

    def render(self) -> str:
        lines = [f"valab {__version__} {self.command} {self.fixture}"]
        for e in self.checks.entries:
            line = f"{e.status.upper():13} {e.check_id}"
            if e.anchor:
                line += f"  [{e.anchor}]"
            lines.append(line)
            for k, v in e.values.items():
                lines.append(f"    {k} = {json.dumps(jsonable(v), sort_keys=True)}")
            for w in e.witnesses:
                lines.append(f"    witness {json.dumps(jsonable(w), sort_keys=True)}")
        if self.error:
            lines.append(f"ERROR {self.error['type']}: {self.error['message']}")
        lines.append(f"exit {self.exit_code}")
        return "\n".join(lines)


def _guard(report: Report, fn) -> bool:
    """Run ``fn``; on a library error record it on the report and return False."""
    try:
        fn()
        return True
    except ValabError as exc:
        report.error = {"type": type(exc).__name__, "message": str(exc)}
        report.exit_code = exit_code_for(exc)
        return False


def _need_algebroid(f: AlgebroidFile):
    if f.algebroid is None:
        raise ParseError("file has no algebroid block")
    return f.algebroid


# ------------------------------------------------------------------ commands


def cmd_check(f: AlgebroidFile) -> Report:
    rep = Report("check", f.fixture_id)
    rep.checks.extend(check_algebra(f.algebra))
    if f.algebroid is not None:
        g = f.algebroid
        rep.checks.extend(check_leibniz(leibniz_of(g)))
        rep.checks.extend(check_truncated_conformal(g))
        rep.checks.extend(check_vertex_algebroid(g))
        rep.checks.extend(check_compatibility(g))
    return rep.finish()


def _context(f: AlgebroidFile):
    """Gorenstein context from the file, or (None, reason)."""
    g = f.algebroid
    if g is None:
        return None, "no algebroid block"
    if f.gorenstein is not None:
        return make_context(g, f.gorenstein.t, f.gorenstein.B, f.grading), ""
    if f.grading is not None:
        return make_context(g, None, None, f.grading), ""
    return None, "no gorenstein block and no grading"


def _l1_for(f: AlgebroidFile, ctx):
    g = f.algebroid
    if f.l1 is not None:
        return LOneMap(f.l1)
    if ctx is None:
        return None
    try:
        pinned = pin_L1(g, solve_L1(g), ctx)
    except NoSolution:
        return None
    return pinned.l1


def cmd_invariants(f: AlgebroidFile) -> Report:
    rep = Report("invariants", f.fixture_id)
    r = rep.checks
    a = f.algebra
    axioms = cmd_check(f).checks
    r.add("inv.axioms", axioms.ok, "structure axioms", failed=axioms.failed())
    J = jacobson_radical(a)
    r.add("inv.jacobson", all(nilpotent_oracle(a, v) for v in J.basis), "J(A) = nilpotent elements", J=J)
    r.add("inv.socle", PASS, "soc(A) = Ann(J)", socle=socle(a))
    loc = indecomposability_report(a)
    r.add(
        "inv.locality", PASS if loc.locality is not Locality.INDETERMINATE_NON_SPLIT else INDETERMINATE,
        "A local <=> only trivial idempotents", verdict=loc,
    )
    gor = None
    if loc.locality is Locality.LOCAL:
        gor = is_gorenstein(a)
        r.add("inv.gorenstein", PASS, "dim soc(A) = 1", gorenstein=gor)
    else:
        r.add("inv.gorenstein", SKIPPED, "dim soc(A) = 1", reason="A is not local")
    if f.grading is not None and gor is not None:
        pc = poincare_check(a, f.grading)
        duality = all(e.passed for e in pc.entries if e.check_id != "poincare.agrees_gorenstein")
        r.add(
            "inv.poincare", pc["poincare.agrees_gorenstein"].status, "Poincare duality <=> Gorenstein",
            duality=duality, details=[{"check_id": e.check_id, "status": e.status, **e.values} for e in pc.entries],
        )
    if gor:
        r.add("inv.t", PASS, "socle generator", t=choose_t(a))
    if f.algebroid is None:
        r.add("inv.algebroid", SKIPPED, "B-dependent invariants", reason="no algebroid block")
        return rep.finish()
    g = f.algebroid
    lb = leibniz_of(g)
    r.add("inv.ker_partial", PASS, "ker d", ker=ker_partial(g))
    r.add("inv.leib", PASS, "Leib(B) = span{[u,u]}", leib=leib_subspace(lb))
    r.add("inv.derived_series", PASS, "B^(i+1) = [B^(i), B^(i)]", series=derived_series(lb))
    r.add("inv.radical", PASS, "rad(B)", rad=solvable_radical(lb))
    r.extend(radical_report(lb))
    if f.sl2 is not None:
        r.extend(semisimple_fixture_check(g, f.sl2.triple, f.sl2.decomposition))
    ctx, reason = (None, "A is not Gorenstein") if not gor else _context(f)
    if ctx is None:
        r.add("inv.forms", SKIPPED, "form-dependent invariants", reason=f"MissingGorensteinData: {reason}")
        return rep.finish()
    valid = validate_context(ctx)
    r.extend(valid)
    if not valid.ok:
        r.add("inv.forms", SKIPPED, "form-dependent invariants", reason="invalid Gorenstein context")
        return rep.finish()
    ia = ideal_a(ctx)
    r.add("inv.ideal_a", ia.is_ideal, "span{v_0 a : a in m} is an ideal", a=ia.space, proper=ia.proper)
    r.add("inv.M", PASS, "M = {u : u_0 t = 0}", M=m_subspace(ctx))
    r.add("inv.ann_t", PASS, "Ann(t_{-1}) = {u : t.u = 0}", Ann=ann_t(ctx))
    r.add("inv.double_form", PASS, "((u,v)) = B(u_1 v, t)", gram=double_form(ctx))
    r.add("inv.rad_double_form", PASS, "rad((,))", rad=rad_double_form(ctx))
    l1 = _l1_for(f, ctx)
    if ia.proper:
        if not _guard(rep, lambda: r.extend(perp_lemma_suite(ctx, l1))):
            return rep
    else:
        r.add("perp.suite", SKIPPED, "perp lemmas", reason="anchor images of m span A")
    if l1 is None:
        r.add("inv.self_duality_dim", SKIPPED, "dim A / L(1)B", reason="no L(1) map")
    else:
        r.add("inv.self_duality_dim", PASS, "dim A / L(1)B", l1=l1, dim=self_duality_dim(g, l1, ctx))
    return rep.finish()


def cmd_semiconformal(f: AlgebroidFile) -> Report:
    rep = Report("semiconformal", f.fixture_id)
    r = rep.checks
    g = _need_algebroid(f)
    state = {}

    def family():
        state["family"] = solve_L1(g)
        r.add("sc.l1_family", PASS, "L(1) solution family", family=state["family"], dim=state["family"].dim)

    if not _guard(rep, family):
        return rep
    ctx, reason = _context(f) if _is_gorenstein_safe(f) else (None, "A is not Gorenstein")
    if ctx is None:
        r.add("sc.pinned", SKIPPED, "B(1, L(1)u) = 0", reason=reason)
        r.add("sc.heisenberg", SKIPPED, "Heisenberg element", reason=reason)
        return rep.finish()

    def pin():
        res = pin_L1(g, state["family"], ctx)
        r.add("sc.pinned", PASS, "B(1, L(1)u) = 0", pinned=res)
        r.add(
            "sc.self_duality_dim", PASS, "dim A / L(1)B",
            dim=self_duality_dim(g, res.l1, ctx),
        )

    def heis():
        w = heisenberg_search(ctx)
        r.add("sc.heisenberg", w.checks.ok, "h'_0 h' = 0, h'_1 h' = beta 1", witness=w)

    if _guard(rep, pin) and _guard(rep, heis):
        return rep.finish()
    return rep


def _is_gorenstein_safe(f: AlgebroidFile) -> bool:
    return is_local(f.algebra) is Locality.LOCAL and is_gorenstein(f.algebra)


def cmd_mutate(f: AlgebroidFile, seed: int, count: int) -> Report:
    rep = Report("mutate", f.fixture_id)
    g = _need_algebroid(f)
    baseline, outcomes = run_mutations(g, seed, count)
    r = rep.checks
    for k, out in enumerate(outcomes):
        r.add(f"mut.{k:04d}", PASS if out.caught else FAIL, "some axiom check breaks", mutation=out)
    caught = sum(o.caught for o in outcomes)
    r.add(
        "mut.summary", PASS, "mutations caught", seed=seed, count=count, caught=caught,
        uncaught=count - caught, baseline_failures=sorted(baseline),
    )
    return rep.finish()


# ------------------------------------------------------------------- driver


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="valab", description="Exact checks for vertex algebroids.")
    p.add_argument("--json", action="store_true", help="emit the report as JSON")
    p.add_argument("--version", action="version", version=f"valab {__version__}")
    sub = p.add_subparsers(dest="command", required=True)
    for name, helptext in (
        ("check", "run every axiom suite"),
        ("invariants", "ring, Leibniz and form invariants"),
        ("semiconformal", "L(1) family, pinned L(1), Heisenberg element"),
        ("mutate", "mutation-test the axiom checkers"),
    ):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("file")
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")
        if name == "mutate":
            sp.add_argument("--seed", type=int, default=0)
            sp.add_argument("--count", type=int, default=20)
    return p


def run(argv=None) -> tuple[int, str]:
    args = build_parser().parse_args(argv)
    as_json = getattr(args, "json", False)
    try:
        f = load(args.file)
        if args.command == "check":
            rep = cmd_check(f)
        elif args.command == "invariants":
            rep = cmd_invariants(f)
        elif args.command == "semiconformal":
            rep = cmd_semiconformal(f)
        else:
            rep = cmd_mutate(f, args.seed, args.count)
    except ValabError as exc:
        rep = Report(args.command, args.file)
        rep.error = {"type": type(exc).__name__, "message": str(exc)}
        rep.exit_code = exit_code_for(exc)
    if as_json:
        text = json.dumps(jsonable(rep.to_json()), indent=1, sort_keys=True)
    else:
        text = rep.render()
    return rep.exit_code, text


def main(argv=None) -> int:
    code, text = run(argv)
    sys.stdout.write(text + "\n")
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
