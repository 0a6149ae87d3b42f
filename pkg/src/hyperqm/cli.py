"""Command-line front end: expression parsing, experiment subcommands, reports.

The expression grammar covers polynomials in x and p over rational literals
with one imaginary unit (i or j, never both in one expression):

    expr   := ['-'] term (('+'|'-') term)*
    term   := factor (['*'] factor)*          -- adjacency is multiplication
    factor := atom ['^' uint]
    atom   := rational | 'i' | 'j' | 'x' | 'p' | 'F0' | '(' expr ')'

Reports are JSON with sorted keys and no timestamps, so a fixed seed yields
byte-identical output.  Exit codes: 0 success, 1 usage or parse error, 2
property failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import random
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import __version__
from . import composability as comp
from . import dmatrix as dm
from . import para_analysis as pa
from . import phasespace as ps
from .report import PropertyReport
from .sampling import rand_split, rand_split_vector
from .splitc import NullConeError, SplitComplex, polar_decompose


class ExprSyntaxError(ValueError):
    """Malformed expression; carries the offending position."""

    def __init__(self, message: str, pos: int) -> None:
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class UnitMixError(ValueError):
    """An expression mixes the units i and j."""


class CliUsageError(ValueError):
    pass


# -- tokenizer and recursive-descent parser ------------------------------------

_ATOM_NAMES = ("F0", "x", "p", "i", "j")


def _tokenize(text: str) -> list[tuple[str, object, int]]:
    tokens: list[tuple[str, object, int]] = []
    pos = 0
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch.isdigit():
            start = pos
            while pos < n and text[pos].isdigit():
                pos += 1
            num = int(text[start:pos])
            if pos < n and text[pos] == "/":
                look = pos + 1
                if look < n and text[look].isdigit():
                    pos = look
                    dstart = pos
                    while pos < n and text[pos].isdigit():
                        pos += 1
                    den = int(text[dstart:pos])
                    if den == 0:
                        raise ExprSyntaxError("zero denominator", dstart)
                    tokens.append(("number", Fraction(num, den), start))
                    continue
            tokens.append(("number", Fraction(num), start))
            continue
        if ch.isalpha():
            for name in _ATOM_NAMES:
                if text.startswith(name, pos):
                    tokens.append(("name", name, pos))
                    pos += len(name)
                    break
            else:
                raise ExprSyntaxError(f"unknown symbol {ch!r}", pos)
            continue
        if ch in "+-*^()":
            tokens.append((ch, ch, pos))
            pos += 1
            continue
        raise ExprSyntaxError(f"unexpected character {ch!r}", pos)
    tokens.append(("end", None, n))
    return tokens


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens = _tokenize(text)
        self.idx = 0
        self.units_seen: set[str] = set()

    def peek(self) -> tuple[str, object, int]:
        return self.tokens[self.idx]

    def advance(self) -> tuple[str, object, int]:
        tok = self.tokens[self.idx]
        self.idx += 1
        return tok

    def expect(self, kind: str) -> tuple[str, object, int]:
        tok = self.advance()
        if tok[0] != kind:
            raise ExprSyntaxError(f"expected {kind!r}, found {tok[0]!r}", tok[2])
        return tok

    def parse(self) -> tuple:
        ast = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ExprSyntaxError(f"trailing input {tok[0]!r}", tok[2])
        if {"i", "j"} <= self.units_seen:
            raise UnitMixError(f"expression mixes units i and j: {self.text!r}")
        return ast

    def expr(self) -> tuple:
        if self.peek()[0] == "-":
            self.advance()
            node = ("neg", self.term())
        else:
            node = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.advance()[0]
            rhs = self.term()
            node = ("add" if op == "+" else "sub", node, rhs)
        return node

    def term(self) -> tuple:
        node = self.factor()
        while True:
            kind = self.peek()[0]
            if kind == "*":
                self.advance()
                node = ("mul", node, self.factor())
            elif kind in ("number", "name", "("):
                node = ("mul", node, self.factor())
            else:
                return node

    def factor(self) -> tuple:
        node = self.atom()
        if self.peek()[0] == "^":
            self.advance()
            tok = self.expect("number")
            exponent = tok[1]
            if exponent.denominator != 1 or exponent < 0:
                raise ExprSyntaxError("exponent must be a nonnegative integer", tok[2])
            node = ("pow", node, int(exponent))
        return node

    def atom(self) -> tuple:
        tok = self.advance()
        kind, value, pos = tok
        if kind == "number":
            return ("num", value)
        if kind == "name":
            if value in ("i", "j"):
                self.units_seen.add(value)
                return ("unit", value)
            if value in ("x", "p"):
                return ("var", value)
            return ("func", value)
        if kind == "(":
            node = self.expr()
            self.expect(")")
            return node
        raise ExprSyntaxError(f"expected an atom, found {kind!r}", pos)


def parse(text: str) -> tuple:
    """Parse an expression into an AST of nested tuples."""
    return _Parser(text).parse()


def _ast_unit(ast: tuple) -> Optional[str]:
    kind = ast[0]
    if kind == "unit":
        return ast[1]
    units = [u for child in ast[1:] if isinstance(child, tuple) for u in [_ast_unit(child)] if u]
    return units[0] if units else None


def lower(ast: tuple, ring: Optional[ps.Ring] = None) -> ps.PolySymbol:
    """Evaluate an AST into an exact polynomial symbol."""
    if ring is None:
        unit = _ast_unit(ast)
        ring = {"i": ps.Ring.COMPLEX, "j": ps.Ring.SPLIT, None: ps.Ring.REAL}[unit]
    kind = ast[0]
    if kind == "num":
        return ps.PolySymbol.constant(ast[1], ring)
    if kind == "unit":
        return ps.PolySymbol.constant(ps.scalar_unit(ring))
    if kind == "var":
        return ps.PolySymbol.variable(ast[1], ring)
    if kind == "func":
        raise ExprSyntaxError(f"builtin {ast[1]!r} is not valid inside a polynomial", 0)
    if kind == "neg":
        return -lower(ast[1], ring)
    if kind == "add":
        return lower(ast[1], ring) + lower(ast[2], ring)
    if kind == "sub":
        return lower(ast[1], ring) - lower(ast[2], ring)
    if kind == "mul":
        return lower(ast[1], ring) * lower(ast[2], ring)
    if kind == "pow":
        base = lower(ast[1], ring)
        out = ps.PolySymbol.constant(Fraction(1), ring)
        for _ in range(ast[2]):
            out = out * base
        return out
    raise ExprSyntaxError(f"unknown AST node {kind!r}", 0)


def parse_symbol(text: str) -> ps.PolySymbol:
    return lower(parse(text))


def parse_split_scalar(text: str) -> SplitComplex:
    """Parse a scalar expression (no x, p, i) into a split-complex number."""
    sym = parse_symbol(text)
    if sym.ring not in (ps.Ring.REAL, ps.Ring.SPLIT):
        raise UnitMixError(f"{text!r} is not a split-complex scalar")
    if sym.degree() > 0:
        raise ExprSyntaxError(f"{text!r} contains phase-space variables", 0)
    if sym.is_zero():
        return SplitComplex(0, 0)
    coef = sym.terms[0][1]
    if isinstance(coef, Fraction):
        return SplitComplex(coef, Fraction(0))
    return coef


# -- report plumbing ------------------------------------------------------------


def _write_report(payload: dict, path: Optional[str]) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True, default=str) + "\n"
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _report_payload(command: str, config: dict, results: list[PropertyReport], witnesses: list) -> dict:
    return {
        "tool": "hyperqm",
        "version": __version__,
        "command": command,
        "config": config,
        "results": [r.to_dict() for r in results],
        "witnesses": witnesses,
    }


def _exit_code(results: Sequence[PropertyReport]) -> int:
    return 0 if all(r.passed for r in results) else 2


# -- subcommands -----------------------------------------------------------------


def _cmd_verify_axioms(args) -> int:
    cls = comp.CompClass.from_name(args.klass, Fraction(args.hbar))
    witnesses: list = []
    if cls.j_squared == 0:
        if args.compose:
            raise CliUsageError("--compose needs a matrix class (elliptic or hyperbolic)")
        alg = ps.poisson_algebra(cls.hbar)
        witnesses.append({"classical_limit": comp.classical_limit_note(seed=args.seed)})
    else:
        alg = comp.standard_rep(cls, args.dim)
        if args.compose:
            alg = comp.tensor_compose(alg, comp.standard_rep(cls, args.dim))
    results = comp.run_axiom_suite(alg, args.samples, args.seed)
    config = {
        "class": cls.name,
        "hbar": str(cls.hbar),
        "samples": args.samples,
        "seed": args.seed,
        "dim": args.dim,
        "compose": bool(args.compose),
        "algebra": alg.name,
    }
    _write_report(_report_payload("verify-axioms", config, results, witnesses), args.report)
    return _exit_code(results)


def _cmd_phase_axioms(args) -> int:
    cls = comp.CompClass.from_name(args.klass, Fraction(args.hbar))
    results = ps.check_phase_space_axioms(
        cls, args.samples, args.seed, max_degree=args.degree
    )
    config = {
        "class": cls.name,
        "hbar": str(cls.hbar),
        "samples": args.samples,
        "seed": args.seed,
        "degree": args.degree,
    }
    _write_report(_report_payload("phase-axioms", config, results, []), args.report)
    return _exit_code(results)


def _cmd_star(args) -> int:
    f = parse_symbol(args.f)
    g = parse_symbol(args.g)
    hbar = Fraction(args.hbar)
    cls = comp.CompClass.from_name(args.klass, hbar)
    if args.part == "star":
        out = ps.star(f, g, hbar, cls)
    elif args.part == "alpha":
        out = (ps.moyal_alpha if cls.j_squared == -1 else ps.hyper_alpha)(f, g, hbar) \
            if cls.j_squared != 0 else ps.poisson(f, g)
    elif args.part == "sigma":
        out = (ps.moyal_sigma if cls.j_squared == -1 else ps.hyper_sigma)(f, g, hbar) \
            if cls.j_squared != 0 else f * g
    else:  # nabla
        out = ps.nabla_power(f, g, args.order)
    print(out)
    return 0


def _cmd_expectation(args) -> int:
    hbar = Fraction(args.hbar)
    cls = comp.CompClass.from_name(args.klass, hbar)
    g = parse_symbol(args.g)
    state = ps.wigner_ground_state(hbar)
    res = ps.expectation(g, state, hbar, cls)
    chain_equal = res.lhs == res.rhs
    results = [
        PropertyReport(
            law="positivity-chain-equality",
            samples=1,
            failures=[]
            if chain_equal
            else [{"inputs": {"g": str(g)}, "lhs": str(res.lhs), "rhs": str(res.rhs)}],
        )
    ]
    witnesses = [
        {
            "g": str(g),
            "lhs": str(res.lhs),
            "rhs": str(res.rhs),
            "prediction": str(res.prediction()),
        }
    ]
    if args.purity:
        purity_report = PropertyReport(law="pure-state-idempotency", samples=1)
        if cls.j_squared == -1:
            doubled = ps.star_gauss_gauss(state, state, cls).scale_pi(2 * hbar, 1)
            if doubled != state:
                purity_report.add_failure({"state": "ground"}, lhs=str(doubled), rhs=str(state))
            witnesses.append({"purity": "exact closed-form identity checked"})
        else:
            try:
                ps.star_gauss_gauss(state, state, cls)
                purity_report.add_failure(
                    {"state": "ground"}, lhs="finite self-star", rhs="singular self-star"
                )
            except ps.HyperbolicSingularity as exc:
                witnesses.append({"purity": f"hyperbolic self-star diverges: {exc}"})
        results.append(purity_report)
    config = {"class": cls.name, "hbar": str(hbar), "g": args.g, "purity": bool(args.purity)}
    _write_report(_report_payload("expectation", config, results, witnesses), args.report)
    return _exit_code(results)


def _cmd_negativity_search(args) -> int:
    hbar = Fraction(args.hbar)
    cls = comp.CompClass.from_name(args.klass, hbar)
    state = ps.wigner_ground_state(hbar)
    rows = []
    witness = None
    for trial, g, value in ps.negativity_trials(
        state, hbar, args.degree, args.trials, args.seed, cls, args.min_degree
    ):
        rows.append((trial, str(g), str(value), int(value < 0)))
        if value < 0 and witness is None:
            witness = ps.NegativityWitness(symbol=g, expectation=value, trial=trial)
            if not args.csv:
                break
    if args.csv:
        with open(args.csv, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(["trial", "symbol", "expectation", "is_witness"])
            writer.writerows(rows)
    found = witness is not None
    witnesses = (
        [{"symbol": str(witness.symbol), "expectation": str(witness.expectation), "trial": witness.trial}]
        if found
        else ["NotFound"]
    )
    # a witness in the elliptic class would contradict the positivity theorem
    report = PropertyReport(law="negativity-search", samples=len(rows))
    if cls.j_squared == -1 and found:
        report.add_failure(
            {"symbol": str(witness.symbol)}, lhs=str(witness.expectation), rhs=">= 0"
        )
    config = {
        "class": cls.name,
        "hbar": str(hbar),
        "degree": args.degree,
        "min_degree": args.min_degree,
        "trials": args.trials,
        "seed": args.seed,
    }
    _write_report(_report_payload("negativity-search", config, [report], witnesses), args.report)
    return _exit_code([report])


def _load_matrix(path: str) -> dm.DMatrix:
    with open(path, "r", encoding="utf-8") as fh:
        return dm.matrix_from_json(json.load(fh))


def _cmd_spectral(args) -> int:
    witnesses: list = []
    results: list[PropertyReport] = []
    if args.scalar is not None:
        z = parse_split_scalar(args.scalar)
        t = dm.DMatrix.scalar(args.dim, z)
        res = dm.para_spectral_radius(t)
        payload = res.to_dict() if res else "Empty"
        witnesses.append({"operator": f"({args.scalar}) * I_{args.dim}", "para_spectral_radius": payload})
        if res is not None:
            ok = dm.para_spectrum_witness(t, res.witness) and dm.is_singular_exact(t, res.witness)
            report = PropertyReport(law="para-spectral-radius-witness", samples=1)
            if not ok or res.radius != 0:
                report.add_failure({"operator": str(t)}, lhs=str(res.radius), rhs="0 with singular witness")
            results.append(report)
    elif args.matrices:
        mats = [_load_matrix(p) for p in args.matrices]
        if args.op == "inner-product":
            if len(mats) != 2:
                raise CliUsageError("--op inner-product needs two matrix files")
            witnesses.append({"trace_inner_product": str(dm.trace_inner_product(*mats))})
        elif args.op == "para-norm":
            est = dm.operator_para_norm(mats[0], args.samples, args.refine, args.seed)
            witnesses.append({"operator_para_norm": est})
        elif args.op == "cstar":
            results.append(dm.para_cstar_check(mats, args.samples, args.refine, args.seed))
        elif args.op == "complex-radius":
            arr = [
                [complex(float(z.re), float(z.im)) for z in row]
                for row in mats[0].entries
            ]
            witnesses.append({"complex_spectral_radius": dm.complex_spectral_radius(arr)})
        else:  # para-radius
            res = dm.para_spectral_radius(mats[0])
            witnesses.append({"para_spectral_radius": res.to_dict() if res else "Empty"})
    else:
        raise CliUsageError("spectral needs --scalar or matrix files")
    config = {
        "scalar": args.scalar,
        "matrices": list(args.matrices or []),
        "op": args.op,
        "dim": args.dim,
        "samples": args.samples,
        "refine": args.refine,
        "seed": args.seed,
    }
    _write_report(_report_payload("spectral", config, results, witnesses), args.report)
    return _exit_code(results)


def _cmd_para_suite(args) -> int:
    rng = random.Random(args.seed)
    n = args.samples
    pairs = [(rand_split(rng), rand_split(rng)) for _ in range(n)]
    scalars = [rand_split(rng) for _ in range(max(8, n // 100))]
    vectors_1d = [(z,) for z in scalars]
    vectors_3d = [rand_split_vector(rng, 3) for _ in range(max(8, n // 100))]

    results = [
        pa.polarization_check(pairs),
        pa.parallelogram_check(pairs),
        pa.para_cauchy_schwarz_check(pairs),
        pa.para_normed_algebra_check(scalars),
        pa.check_pn_axioms(vectors_1d, scalars),
        pa.check_pn_axioms(vectors_3d, scalars, include_pn2=False),
    ]

    base = SplitComplex(2, 1)
    points = [base * Fraction(k) for k in range(1, 6)]
    space = pa.FiniteParaMetric.from_split_points(points)

    def oracle(i: int, k: int, j: int) -> bool:
        lo, hi = min(i, j), max(i, j)
        return lo < k < hi

    results.append(pa.check_pm_axioms(space, oracle))

    seq = pa.SampledSequence(
        terms=tuple(base * Fraction(k) for k in range(1, args.prefix + 1)),
        description="n * (2+1j)",
    )
    results.append(pa.divergent_implies_para_cauchy_demo(seq, SplitComplex(0, 0), 1.0))
    witnesses = [
        {
            "para_cauchy_detect": {
                "sequence": seq.description,
                "epsilon": 1.0,
                "N": 2,
                "prefix": args.prefix,
                "holds": pa.para_cauchy_detect(seq, 1.0, 2),
            }
        }
    ]
    config = {"samples": n, "seed": args.seed, "prefix": args.prefix}
    _write_report(_report_payload("para-suite", config, results, witnesses), args.report)
    return _exit_code(results)


def _cmd_minimizer_demo(args) -> int:
    x, segment = pa.documented_minimizer_witness()
    scan = pa.minimizer_scan(x, segment, grid=args.grid)
    if args.csv:
        with open(args.csv, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(["t", "distance"])
            writer.writerows(scan.curve)
    report = PropertyReport(law="minimizer-non-uniqueness", samples=len(scan.curve))
    if len(scan.minimizers) != 2:
        report.add_failure(
            {"witness": "segment 1 -+ j/2 against the origin"},
            lhs=f"{len(scan.minimizers)} minimizers",
            rhs="2 minimizers",
        )
    witnesses = [
        {"t": str(mz.t), "point": [z.to_json() for z in mz.point], "distance": mz.value}
        for mz in scan.minimizers
    ]
    config = {"grid": args.grid, "csv": args.csv}
    _write_report(_report_payload("minimizer-demo", config, [report], witnesses), args.report)
    return _exit_code([report])


def _cmd_polar(args) -> int:
    z = parse_split_scalar(args.scalar)
    u, v = z.lightcone()
    info: dict = {
        "scalar": str(z),
        "cone": z.cone().value,
        "norm_squared": str(z.norm_squared()),
        "seminorm": z.seminorm(),
        "lightcone": {"u": str(u), "v": str(v)},
    }
    try:
        form = polar_decompose(z)
        info["polar"] = {
            "sign": form.sign,
            "rho": form.rho,
            "theta": form.theta,
            "branch": form.branch.value,
        }
    except NullConeError as exc:
        info["polar"] = f"NullConeError: {exc}"
    try:
        info["inverse"] = str(z.inverse())
    except Exception as exc:  # zero divisor
        info["inverse"] = f"ZeroDivisorError: {exc}"
    config = {"scalar": args.scalar}
    _write_report(_report_payload("polar", config, [], [info]), args.report)
    return 0


# Every public module operation is reachable through the subcommand listed here;
# the test suite checks this table against the module surfaces.
OPERATION_DISPATCH = {
    "splitc.mul": "polar",
    "splitc.seminorm": "polar",
    "splitc.polar_decompose": "polar",
    "splitc.cone_of": "polar",
    "splitc.inverse": "polar",
    "splitc.lightcone": "polar",
    "dmatrix.trace_inner_product": "spectral",
    "dmatrix.decompose": "spectral",
    "dmatrix.recompose": "spectral",
    "dmatrix.para_spectrum_witness": "spectral",
    "dmatrix.para_spectral_radius": "spectral",
    "dmatrix.complex_spectral_radius": "spectral",
    "dmatrix.operator_para_norm": "spectral",
    "dmatrix.para_cstar_check": "spectral",
    "composability.associator": "verify-axioms",
    "composability.check_jordan": "verify-axioms",
    "composability.check_lie": "verify-axioms",
    "composability.check_leibniz": "verify-axioms",
    "composability.check_comp_identity": "verify-axioms",
    "composability.beta": "verify-axioms",
    "composability.check_beta_associative": "verify-axioms",
    "composability.standard_rep": "verify-axioms",
    "composability.tensor_compose": "verify-axioms",
    "composability.classical_limit_note": "verify-axioms",
    "phasespace.nabla_power": "star",
    "phasespace.moyal_alpha": "star",
    "phasespace.moyal_sigma": "star",
    "phasespace.hyper_alpha": "star",
    "phasespace.hyper_sigma": "star",
    "phasespace.star": "star",
    "phasespace.gaussian_star_isotropic": "expectation",
    "phasespace.wigner_ground_state": "expectation",
    "phasespace.integrate": "expectation",
    "phasespace.expectation": "expectation",
    "phasespace.negativity_search": "negativity-search",
    "phasespace.check_phase_space_axioms": "phase-axioms",
    "para_analysis.check_pm_axioms": "para-suite",
    "para_analysis.para_cauchy_detect": "para-suite",
    "para_analysis.divergent_implies_para_cauchy_demo": "para-suite",
    "para_analysis.check_pn_axioms": "para-suite",
    "para_analysis.polarization_check": "para-suite",
    "para_analysis.parallelogram_check": "para-suite",
    "para_analysis.para_cauchy_schwarz_check": "para-suite",
    "para_analysis.para_normed_algebra_check": "para-suite",
    "para_analysis.minimizer_scan": "minimizer-demo",
    "cli.parse": "star",
}


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str):  # noqa: D102 - argparse hook
        raise CliUsageError(message)


def build_parser() -> _ArgumentParser:
    parser = _ArgumentParser(prog="hyperqm", description=__doc__)
    parser.add_argument("--version", action="version", version=f"hyperqm {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, hbar=True, seed=True, report=True):
        if hbar:
            p.add_argument("--hbar", default="1", help="deformation scale, exact rational")
        if seed:
            p.add_argument("--seed", type=int, default=0)
        if report:
            p.add_argument("--report", default=None, help="write the JSON report here")

    p = sub.add_parser("verify-axioms", help="axiom suite on a reference realization")
    p.add_argument("--class", dest="klass", required=True,
                   choices=["elliptic", "parabolic", "hyperbolic"])
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--compose", action="store_true",
                   help="run the suite on the tensor composition of two copies")
    add_common(p)
    p.set_defaults(func=_cmd_verify_axioms)

    p = sub.add_parser("phase-axioms", help="axiom suite on the phase-space realization")
    p.add_argument("--class", dest="klass", required=True,
                   choices=["elliptic", "parabolic", "hyperbolic"])
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--degree", type=int, default=3)
    add_common(p)
    p.set_defaults(func=_cmd_phase_axioms)

    p = sub.add_parser("star", help="star or bracket products of two expressions")
    p.add_argument("--class", dest="klass", default="elliptic",
                   choices=["elliptic", "parabolic", "hyperbolic"])
    p.add_argument("--part", default="star", choices=["star", "alpha", "sigma", "nabla"])
    p.add_argument("--order", type=int, default=1, help="k for --part nabla")
    p.add_argument("f")
    p.add_argument("g")
    add_common(p, seed=False, report=False)
    p.set_defaults(func=_cmd_star)

    p = sub.add_parser("expectation", help="expectation of g* star g in the ground state")
    p.add_argument("--class", dest="klass", default="elliptic",
                   choices=["elliptic", "hyperbolic"])
    p.add_argument("-g", required=True, help="observable expression")
    p.add_argument("--purity", action="store_true",
                   help="also check the pure-state idempotency of the ground state")
    add_common(p, seed=False)
    p.set_defaults(func=_cmd_expectation)

    p = sub.add_parser("negativity-search", help="search for negative star-square expectations")
    p.add_argument("--class", dest="klass", default="hyperbolic",
                   choices=["elliptic", "hyperbolic"])
    p.add_argument("--degree", type=int, default=1)
    p.add_argument("--min-degree", type=int, default=1)
    p.add_argument("--trials", type=int, default=2000)
    p.add_argument("--csv", default=None, help="write per-trial expectations here")
    add_common(p)
    p.set_defaults(func=_cmd_negativity_search)

    p = sub.add_parser("spectral", help="spectral radius and para-norm operations")
    p.add_argument("matrices", nargs="*", help="JSON matrix files")
    p.add_argument("--scalar", default=None, help="split-complex scalar text for z*I")
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--op", default="para-radius",
                   choices=["para-radius", "para-norm", "inner-product", "cstar", "complex-radius"])
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--refine", type=int, default=60)
    add_common(p, hbar=False)
    p.set_defaults(func=_cmd_spectral)

    p = sub.add_parser("para-suite", help="para functional-analysis property sweep")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--prefix", type=int, default=50)
    add_common(p, hbar=False)
    p.set_defaults(func=_cmd_para_suite)

    p = sub.add_parser("minimizer-demo", help="non-unique closest-point witness scan")
    p.add_argument("--grid", type=int, default=200)
    p.add_argument("--csv", default=None, help="write the (t, distance) curve here")
    add_common(p, hbar=False, seed=False)
    p.set_defaults(func=_cmd_minimizer_demo)

    p = sub.add_parser("polar", help="cone, seminorm and polar form of a scalar")
    p.add_argument("--scalar", required=True)
    add_common(p, hbar=False, seed=False)
    p.set_defaults(func=_cmd_polar)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except (CliUsageError, ExprSyntaxError, UnitMixError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
