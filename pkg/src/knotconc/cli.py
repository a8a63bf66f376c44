"""Command-line surface: batch computation and certificate reports.

Exit codes: 0 for a successful computation or an asserted conclusion,
1 for a sound refusal (Unknown verdicts, withheld conclusions), 2 for
input errors.  Output is deterministic: stable orderings, canonical
polynomial rendering, and certified intervals for every numeric value
(never bare decimals).
"""

from __future__ import annotations

import argparse
import concurrent.futures
import os
import re
import sys
from fractions import Fraction

from .laurent import LaurentError, LaurentPoly
from . import concordance as conc
from . import legendrian, primality, seifert, signature_fn
from .concordance import (
    Base, Cable, Fact, FactSet, Infect, KnotExpr, MirrorReverse, Sum, Twist,
    Unknot, eval_invariants, fact_q_operator_nonzero, fact_r_operator_avoidance,
)

OK, REFUSAL, INPUT_ERROR = 0, 1, 2


class CliError(ValueError):
    pass


# ----------------------------------------------------------------------
# the knot-expression grammar

_TOKEN_RE = re.compile(r'\s*(?:(?P<num>-?\d+)|(?P<name>[A-Za-z][A-Za-z0-9_+-]*)'
                       r'|(?P<str>"[^"]*")|(?P<punct>[(),=]))')


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise CliError(f"parse error at position {pos}: {text[pos:pos + 12]!r}")
            break
        if m.group("num"):
            out.append(("num", int(m.group("num"))))
        elif m.group("name"):
            out.append(("name", m.group("name")))
        elif m.group("str"):
            out.append(("str", m.group("str")[1:-1]))
        else:
            out.append(("punct", m.group("punct")))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens):
        self.toks = tokens
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else ("end", None)

    def next(self):
        t = self.peek()
        self.i += 1
        return t

    def expect(self, kind, value=None):
        t = self.next()
        if t[0] != kind or (value is not None and t[1] != value):
            raise CliError(f"expected {value or kind}, found {t[1]!r} (token {self.i})")
        return t[1]

    def parse_expr(self) -> KnotExpr:
        kind, val = self.next()
        if kind != "name":
            raise CliError(f"expected an expression, found {val!r}")
        head = val.lower()
        if head == "unknot":
            return Unknot()
        if head == "twist":
            self.expect("punct", "(")
            j = self.expect("num")
            self.expect("punct", ")")
            return Twist(j)
        if head == "base":
            self.expect("punct", "(")
            name = self.next()
            if name[0] not in ("str", "name"):
                raise CliError("base(...) takes a quoted name")
            self.expect("punct", ")")
            return resolve_base(name[1])
        if head == "sum":
            self.expect("punct", "(")
            parts = [self.parse_expr()]
            while self.peek() == ("punct", ","):
                self.next()
                parts.append(self.parse_expr())
            self.expect("punct", ")")
            return Sum(tuple(parts))
        if head == "neg":
            self.expect("punct", "(")
            inner = self.parse_expr()
            self.expect("punct", ")")
            return MirrorReverse(inner)
        if head == "cable":
            self.expect("punct", "(")
            inner = self.parse_expr()
            self.expect("punct", ",")
            p = self.expect("num")
            self.expect("punct", ")")
            return Cable(inner, p)
        if head == "infect":
            self.expect("punct", "(")
            op = self.parse_operator()
            self.expect("punct", ",")
            inner = self.parse_expr()
            self.expect("punct", ")")
            return Infect(op, inner)
        raise CliError(f"unknown expression head {val!r}")

    def parse_operator(self):
        kind, val = self.next()
        if kind != "name" or val.upper() not in ("R", "Q"):
            raise CliError(f"expected an operator R(...) or Q(...), found {val!r}")
        self.expect("punct", "(")
        k = self.expect("num")
        if val.upper() == "Q":
            self.expect("punct", ")")
            return conc.operator_q(k)
        self.expect("punct", ",")
        self.expect("name", "J")
        self.expect("punct", "=")
        name = self.next()
        if name[0] not in ("str", "name"):
            raise CliError("J= takes a quoted companion name")
        self.expect("punct", ")")
        return conc.operator_r(k, resolve_base(name[1]), name[1])


def resolve_base(name: str) -> KnotExpr:
    """Named companions and base knots for the grammar."""
    m = re.fullmatch(r"neg-trefoils-(\d+)", name)
    if m:
        return conc.neg_trefoils(int(m.group(1)))
    if name == "left-trefoil":
        return conc.left_trefoil()
    if name in ("wh-double", "whitehead-double"):
        return conc.whitehead_double()
    m = re.fullmatch(r"twist-(\d+)", name)
    if m:
        return Twist(int(m.group(1)))
    raise CliError(f"unknown base knot {name!r}; known: neg-trefoils-<m>, "
                   "left-trefoil, wh-double, twist-<j>")


def parse_expression(text: str) -> KnotExpr:
    p = _Parser(_tokenize(text))
    expr = p.parse_expr()
    if p.peek()[0] != "end":
        raise CliError(f"trailing input after expression (token {p.i})")
    return expr


# ----------------------------------------------------------------------
# facts files

_FACT_RE = re.compile(r'^\s*FACT\s+"([^"]+)"\s+CITE\s+"([^"]*)"\s*$')


def load_facts(path: str | None) -> FactSet:
    if path is None:
        return FactSet()
    facts = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            m = _FACT_RE.match(line)
            if not m:
                raise CliError(f"{path}:{lineno}: bad fact line (FACT \"...\" CITE \"...\")")
            facts.append(Fact(m.group(1), m.group(2)))
    return FactSet(facts)


def parse_range(text: str) -> list[int]:
    m = re.fullmatch(r"(\d+)\.\.(\d+)", text)
    if m:
        lo, hi = int(m.group(1)), int(m.group(2))
        if lo > hi:
            raise CliError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    if re.fullmatch(r"\d+(,\d+)*", text):
        return [int(x) for x in text.split(",")]
    raise CliError(f"bad range {text!r}; use N, N..M, or N,M,...")


# ----------------------------------------------------------------------
# report helpers

def _interval_str(lo: Fraction, hi: Fraction, digits: int = 12) -> str:
    return f"[{float(lo):.{digits}f}, {float(hi):.{digits}f}]"


def _tau_str(tau) -> str:
    if tau.exact is not None:
        return f"exact {tau.exact}"
    if tau.lower is None and tau.upper is None:
        return "unknown"
    lo = "-inf" if tau.lower is None else str(tau.lower)
    hi = "+inf" if tau.upper is None else str(tau.upper)
    return f"bounds [{lo}, {hi}]"


def report_invariants(e: KnotExpr, out) -> None:
    iv = eval_invariants(e)
    print(f"knot: {e.name()}", file=out)
    print(f"alexander: {iv.alexander}", file=out)
    print(f"arf: {iv.arf}", file=out)
    print(f"genus-upper: {iv.genus_upper}", file=out)
    if iv.profile.is_trivial:
        print("signature-profile: trivial (identically zero)", file=out)
    else:
        print("signature-profile: (arc-start theta/pi, arc-end theta/pi, level)", file=out)
        for a, b, lvl in signature_fn.profile_table(iv.profile):
            print(f"  {a}\t{b}\t{lvl}", file=out)
    r = iv.rho0
    lo, hi = r.enclosure(64)
    print(f"rho0: {r!r}", file=out)
    print(f"rho0-interval: {_interval_str(lo, hi)}", file=out)
    print(f"tau: {_tau_str(iv.tau)}", file=out)


# ----------------------------------------------------------------------
# subcommands

def cmd_invariants(args) -> int:
    if os.path.isfile(args.input):
        with open(args.input, encoding="utf-8") as fh:
            V = seifert.SeifertMatrix.from_text(fh.read())
        e = Base(os.path.basename(args.input), matrix=V)
    else:
        e = parse_expression(args.input)
    report_invariants(e, sys.stdout)
    return OK


def cmd_prime(args) -> int:
    f = LaurentPoly.parse(args.poly)
    v = primality.is_irreducible(f)
    print(f"input: {f.normalize()}")
    print(f"status: {v.status}")
    print(f"method: {v.method}")
    if v.witness is not None:
        print(f"witness-factor: {v.witness}")
    return OK


def cmd_strongly_prime(args) -> int:
    f = LaurentPoly.parse(args.poly)
    v = primality.strongly_prime(f, search_bound=args.search_bound)
    print(f"input: {f.normalize()}")
    print(f"status: {v.status}")
    if v.witness_exponent is not None:
        print(f"witness-exponent: {v.witness_exponent}")
    for line in v.certificate:
        print(f"  {line}")
    return OK if v.status != primality.UNKNOWN else REFUSAL


def cmd_strongly_coprime(args) -> int:
    f = LaurentPoly.parse(args.poly1)
    g = LaurentPoly.parse(args.poly2)
    v = primality.strongly_coprime(f, g)
    print(f"inputs: {f.normalize()} ; {g.normalize()}")
    print(f"status: {v.status}")
    if v.witness is not None:
        print(f"witness-exponents: k={v.witness[0]} l={v.witness[1]}")
    for line in v.detail:
        print(f"  {line}")
    return OK if v.status != primality.UNKNOWN else REFUSAL


def cmd_catalan(args) -> int:
    sols = primality.catalan_solutions(args.x_max, args.y_max, args.a_max, args.b_max)
    print(f"solutions of x^a - y^b = 1 with 2 <= x <= {args.x_max}, "
          f"2 <= y <= {args.y_max}, 2 <= a <= {args.a_max}, 2 <= b <= {args.b_max}:")
    for x, a, y, b in sols:
        print(f"  x={x} a={a} y={y} b={b}")
    if not sols:
        print("  none")
    return OK


def cmd_legendrian(args) -> int:
    if args.builtin:
        param = {"twist-front": args.j, "q-front": args.k}.get(args.builtin, 1)
        if args.builtin in ("twist-front", "q-front") and param is None:
            raise CliError(f"--builtin {args.builtin} needs --j/--k")
        front = legendrian.builtin_front(args.builtin, param or 1)
    elif args.front_file:
        with open(args.front_file, encoding="utf-8") as fh:
            front = legendrian.parse_front(fh.read())
    else:
        raise CliError("give a front file or --builtin")
    inv = legendrian.classical_invariants(front)
    print(f"tb: {inv.tb}")
    print(f"rot: {inv.rot}")
    if args.companion_tb is not None:
        comp = legendrian.LegInvariants(args.companion_tb, 0)
        for _ in range(args.iterate):
            inv = legendrian.legendrian_satellite(inv, comp)
            comp = inv if inv.tb == 0 else comp
        print(f"after {args.iterate} satellite iterations: tb={inv.tb} rot={inv.rot}")
    lower = -((-(inv.tb + abs(inv.rot) + 1)) // 2)
    print(f"tau-lower-bound: {lower}")
    if args.genus is not None:
        tb = legendrian.tau_bounds(inv, args.genus)
        if tb.exact is not None:
            print(f"tau: exact {tb.exact} (genus {args.genus})")
        else:
            print(f"tau: bounds [{tb.lower}, {tb.upper}]")
    return OK


def _robust_cell(op_builder, facts, p):
    cert = conc.robustness_check(op_builder(), facts, p=p)
    return p, cert


def cmd_robust(args) -> int:
    facts = load_facts(args.facts)
    if args.op.upper() == "Q":
        def build():
            return conc.operator_q(args.k)
    elif args.op.upper() == "R":
        jname = args.j_name or "3-left-trefoils"
        def build():
            return conc.operator_r(args.k, resolve_base(jname), jname)
    else:
        raise CliError("--op must be Q or R")
    ps = parse_range(args.p)
    cells = _parallel_map(lambda p: _robust_cell(build, facts, p), ps, args.jobs)
    all_ok = True
    for p, cert in sorted(cells):
        print(f"== p = {p} ==")
        print(cert.render())
        all_ok = all_ok and cert.asserted
    return OK if all_ok else REFUSAL


def _parallel_map(fn, items, jobs):
    if jobs and jobs > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def cmd_independence(args) -> int:
    if args.family != "thmA":
        raise CliError("only --family thmA is built in")
    facts = load_facts(args.facts)
    ps = parse_range(args.p)
    companions = list(range(1, args.m + 1))
    seqs, comps, base = conc.thm_a_family(args.k, args.n, ps, companions)
    cert = conc.independence_report(
        seqs, comps, facts,
        run_relation_search=args.relation_search,
        relation_bound=args.relation_bound,
        relation_precision=Fraction(1, 10 ** args.relation_digits),
    )
    print(cert.render())
    return OK if cert.asserted else REFUSAL


def cmd_filtration(args) -> int:
    facts = load_facts(args.facts)
    e = parse_expression(args.expr)
    cert = conc.filtration_certify(e, facts)
    print(cert.render())
    return OK if cert.asserted else REFUSAL


def cmd_kauffman(args) -> int:
    facts = load_facts(args.facts)
    suite = conc.kauffman_suite(facts)
    for entry in suite["entries"]:
        print(f"L = {entry['L']}")
        print(f"  d = {entry['d']}")
        print(f"  Arf(d') = {entry['arf_dprime']}")
        print(f"  alexander(d) = {entry['alexander_d']}")
        print(f"  Arf(d) = {entry['arf_d']}")
        tau = entry["tau_d"]
        print(f"  tau(d) = {tau if tau is not None else 'unknown'}")
        print(f"  topologically-slice(d): {'yes (trivial Alexander polynomial)' if entry['topologically_slice_d'] else 'not derivable'}")
        if "independence_certificate" in entry:
            print(f"  d nontrivial in the filtration quotients: "
                  f"{'asserted' if entry['nontrivial_d'] else 'withheld'}")
    return OK


def cmd_profile_dump(args) -> int:
    e = parse_expression(args.expr)
    iv = eval_invariants(e)
    print("arc-start\tarc-end\tlevel")
    for a, b, lvl in signature_fn.profile_table(iv.profile, bits=args.bits):
        print(f"{a}\t{b}\t{lvl}")
    return OK


# ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="knotconc",
        description="Exact knot-concordance invariants and symbolic certificates")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="invariants of a knot expression or Seifert matrix file")
    p.add_argument("input", help="expression text, or a path to a matrix file (g=..., rows)")
    p.set_defaults(fn=cmd_invariants)

    p = sub.add_parser("prime", help="irreducibility in Q[t,t^-1]")
    p.add_argument("poly")
    p.set_defaults(fn=cmd_prime)

    p = sub.add_parser("strongly-prime", help="irreducibility of every power substitution")
    p.add_argument("poly")
    p.add_argument("--search-bound", type=int, default=12)
    p.set_defaults(fn=cmd_strongly_prime)

    p = sub.add_parser("strongly-coprime", help="coprimality under all power substitutions")
    p.add_argument("poly1")
    p.add_argument("poly2")
    p.set_defaults(fn=cmd_strongly_coprime)

    p = sub.add_parser("catalan", help="bounded search of x^a - y^b = 1")
    p.add_argument("--x-max", type=int, default=1000)
    p.add_argument("--y-max", type=int, default=1000)
    p.add_argument("--a-max", type=int, default=20)
    p.add_argument("--b-max", type=int, default=20)
    p.set_defaults(fn=cmd_catalan)

    p = sub.add_parser("legendrian", help="front-diagram invariants and tau bounds")
    p.add_argument("front_file", nargs="?")
    p.add_argument("--builtin", choices=["twist-front", "q-front", "unknot-front"])
    p.add_argument("--j", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--companion-tb", type=int, dest="companion_tb")
    p.add_argument("--iterate", type=int, default=0)
    p.add_argument("--genus", type=int)
    p.set_defaults(fn=cmd_legendrian)

    p = sub.add_parser("robust", help="robustness certificates for doubling operators")
    p.add_argument("--op", required=True, choices=["Q", "R", "q", "r"])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--j-name", dest="j_name")
    p.add_argument("--p", default="1")
    p.add_argument("--facts")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(fn=cmd_robust)

    p = sub.add_parser("independence", help="linear-independence certificate for a cable family")
    p.add_argument("--family", default="thmA")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--p", default="1..2")
    p.add_argument("--m", type=int, default=2, help="number of twist-knot companions")
    p.add_argument("--facts")
    p.add_argument("--relation-search", action="store_true")
    p.add_argument("--relation-bound", type=int, default=100)
    p.add_argument("--relation-digits", type=int, default=30)
    p.set_defaults(fn=cmd_independence)

    p = sub.add_parser("filtration", help="solvable/bipolar filtration certificate")
    p.add_argument("expr")
    p.add_argument("--facts")
    p.set_defaults(fn=cmd_filtration)

    p = sub.add_parser("kauffman", help="derivative-curve example suite")
    p.add_argument("--facts")
    p.set_defaults(fn=cmd_kauffman)

    p = sub.add_parser("profile-dump", help="TSV dump of the signature profile arcs")
    p.add_argument("expr")
    p.add_argument("--bits", type=int, default=40)
    p.set_defaults(fn=cmd_profile_dump)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code not in (0, None) else OK
    try:
        return args.fn(args)
    except (CliError, LaurentError, seifert.SeifertError, legendrian.FrontError,
            conc.ExprError, signature_fn.ProfileError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
