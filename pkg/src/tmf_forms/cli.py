"""Command-line interface: ``tmf-forms <command> [options]``.

Every command prints one JSON document carrying ``"schema": "tmf-forms/1"``.
Exit status is 0 on success, 1 on input errors and 2 when a congruence or
identity check fails.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import padic, tmf_image
from .errors import TmfFormsError
from .lattice import (
    BUILTIN_NAMES,
    DEFAULT_BUDGET,
    GramLattice,
    bilinear_check,
    borcherds_check,
    builtin,
    phi_mu,
    quad_refinement,
    theta,
    theta_mu,
    validate,
)
from .modforms import (
    ModularForm,
    decompose,
    eisenstein,
    generator_q,
    residue_delta,
    weight_basis,
)
from .polys import Poly
from .series import BiSeries, QSeries, as_rational, rational_str
from .suite import VerificationSuite, default_suite, run_suite
from .weierstrass import (
    CurveTransformation,
    WeierstrassCurve,
    formal_group_law,
    invariants,
    transform,
)

SCHEMA = "tmf-forms/1"
EXIT_OK, EXIT_INPUT, EXIT_FAIL = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


class _Fail(Exception):
    """Carries a payload whose verdict is FAIL."""

    def __init__(self, payload):
        self.payload = payload


# ---------------------------------------------------------------------------
# encoding helpers


def _scalar(v):
    if isinstance(v, Poly):
        return repr(v)
    return rational_str(as_rational(v))


def _bi_json(b: BiSeries) -> dict:
    return {"qprec": b.qprec, "zorder": b.zorder, "terms": [t.to_json() for t in b.terms]}


def _read_json(path: str):
    if path == "-":
        return json.load(sys.stdin)
    with open(path) as fh:
        return json.load(fh)


def _read_series(path: str) -> QSeries:
    return QSeries.from_json(_read_json(path))


def _lattice(args) -> GramLattice:
    if getattr(args, "builtin", None):
        return builtin(args.builtin)
    if getattr(args, "gram", None):
        g = GramLattice.from_json(_read_json(args.gram))
        validate(g)
        return g
    raise ValueError("give --gram FILE or --builtin NAME")


def _curve(values) -> WeierstrassCurve:
    if len(values) != 5:
        raise ValueError("a curve needs five coefficients a1 a2 a3 a4 a6")
    return WeierstrassCurve(*[as_rational(v) for v in values])


def _verdict(payload: dict) -> dict:
    if payload.get("verdict") == "FAIL":
        raise _Fail(payload)
    return payload


# ---------------------------------------------------------------------------
# command implementations; each returns a JSON-ready dict


def cmd_eisenstein(a):
    f = eisenstein(a.weight, a.prec)
    return {"weight": f.weight, **f.series.to_json()}


def cmd_generator(a):
    return generator_q(a.which, a.prec).series.to_json()


def cmd_decompose(a):
    return decompose(ModularForm(a.weight, _read_series(a.series))).to_json()


def cmd_residue(a):
    return {"k": a.k, "residue": rational_str(residue_delta(_read_series(a.series), a.k))}


def cmd_theta(a):
    g = _lattice(a)
    f = theta(g, a.prec, a.budget)
    return {"weight": f.weight, **f.series.to_json()}


def cmd_theta_mu(a):
    g = _lattice(a)
    f = theta_mu(g, a.mu, a.prec, a.budget)
    return {"weight": f.weight, **f.series.to_json()}


def cmd_phi(a):
    g = _lattice(a)
    parts = phi_mu(g, a.mu, a.prec, a.zorder, a.budget)
    return {"terms": [{"x_power": 2 * i, **s.to_json()} for i, s in enumerate(parts)]}


def cmd_borcherds(a):
    rep = borcherds_check(_lattice(a), a.prec if a.prec_given else None, a.budget)
    return _verdict(rep.to_json())


def cmd_quadref(a):
    g = _lattice(a)
    out = quad_refinement(g, a.mu, a.budget).to_json()
    if a.mu2:
        bil = bilinear_check(g, a.mu, a.mu2, a.budget).to_json()
        out = {"refinement": out, "bilinear": bil,
               "verdict": "PASS" if out["verdict"] == bil["verdict"] == "PASS" else "FAIL"}
    return _verdict(out)


def cmd_atkin(a):
    return padic.atkin_U(_read_series(a.infile), a.p).to_json()


def cmd_versch(a):
    return padic.versch_V(_read_series(a.infile), a.p).to_json()


def cmd_star(a):
    return padic.star(_read_series(a.infile), a.weight, a.p).to_json()


def _pairs(text: str):
    out = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        m, n = item.split(":")
        out.append((int(m), int(n)))
    return out


def _report_list(reports):
    rows = [r.to_json() for r in reports]
    verdict = "PASS" if all(r["verdict"] == "PASS" for r in rows) else "FAIL"
    return _verdict({"reports": rows, "verdict": verdict})


def cmd_kummer_ko(a):
    seq = (padic.CharSequence.from_json(_read_json(a.seq)) if a.seq
           else padic.canonical_ko_sequence(max(n for pr in _pairs(a.pairs) for n in pr)))
    return _report_list(padic.kummer_check_ko(seq, a.p, a.c, a.k, _pairs(a.pairs)))


def cmd_kummer_tmf(a):
    pairs = _pairs(a.pairs)
    if a.seq:
        seq = padic.CharSequence.from_json(_read_json(a.seq))
    else:
        seq = padic.eisenstein_sequence(max(n for pr in pairs for n in pr), a.prec)
    reports = padic.kummer_check_tmf(seq, a.p, a.c, a.k, pairs)
    rows = []
    for r in reports:
        d = r.to_json()
        d.pop("lhs")
        d.pop("rhs")
        rows.append(d)
    verdict = "PASS" if all(r["verdict"] == "PASS" for r in rows) else "FAIL"
    return _verdict({"reports": rows, "verdict": verdict})


def cmd_witten(a):
    return _bi_json(padic.witten_series(a.qprec, a.zorder))


def cmd_char_seq(a):
    seq = padic.extract_char_sequence(padic.witten_series(a.qprec, a.zorder), a.nmax)
    return seq.to_json()


def cmd_tau_search(a):
    return {"bound": a.bound, "primes": padic.tau_search(a.bound)}


def cmd_pi23(a):
    return padic.pi23_torsion(a.p).to_json()


def cmd_tmf_image(a):
    return {"weight": a.weight, "basis": [e.to_json() for e in tmf_image.image_basis(a.weight)]}


def cmd_tmf_member(a):
    return _verdict(tmf_image.in_image(ModularForm(a.weight, _read_series(a.series))).to_json())


def cmd_theta_image(a):
    return _verdict(tmf_image.theta_image_check(_lattice(a), budget=a.budget).to_json())


def cmd_tables(a):
    return tmf_image.reference_tables().to_json(a.which)


def cmd_basis(a):
    return {"weight": a.weight, "basis": [{"i": i, "j": j, "k": k} for i, j, k in weight_basis(a.weight)]}


def cmd_invariants(a):
    c = WeierstrassCurve.universal() if a.universal else _curve(a.coeffs)
    inv = invariants(c)
    out = {name: _scalar(getattr(inv, name))
           for name in ("b2", "b4", "b6", "b8", "c4", "c6", "delta")}
    if inv.j is not None:
        out["j"] = _scalar(inv.j)
    return out


def cmd_transform(a):
    c = _curve(a.coeffs)
    lam, r, s, t = [as_rational(v) for v in a.by]
    d = transform(c, CurveTransformation(lam, r, s, t))
    return {"a": [_scalar(v) for v in d.coeffs]}


def cmd_fgl(a):
    c = WeierstrassCurve.universal() if a.universal else _curve(a.coeffs)
    F = formal_group_law(c, a.degree, a.coordinate)
    terms = [{"i": i, "j": j, "c": _scalar(v)} for (i, j), v in sorted(F.coeffs.items())]
    return {"degree": F.degree, "coordinate": F.coordinate, "terms": terms}


def cmd_verify(a):
    if a.print_default:
        return default_suite().to_json()
    suite = VerificationSuite.from_json(_read_json(a.suite)) if a.suite else default_suite()
    if not suite.checks:
        print("warning: empty suite, nothing to verify", file=sys.stderr)
    report = run_suite(suite, seed=a.seed, budget=a.budget)
    if report["verdict"] == "FAIL":
        raise _Fail(report)
    if report["verdict"] == "ERROR":
        raise TmfFormsError(json.dumps(report))
    return report


# ---------------------------------------------------------------------------
# parser


def _global_flags(parser, suppress: bool):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--budget", type=int, default=d(DEFAULT_BUDGET),
                        help="cap on enumerated lattice vectors")
    parser.add_argument("--prec", type=int, default=d(None), help="q-precision")
    parser.add_argument("--zorder", type=int, default=d(None), help="order in the formal variable")
    parser.add_argument("--seed", type=int, default=d(0), help="seed for randomised checks")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="tmf-forms", description="Exact q-expansion, lattice and p-adic computations.")
    _global_flags(p, suppress=False)
    common = _Parser(add_help=False)
    _global_flags(common, suppress=True)
    sub = p.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    def add(name, fn, help_text, prec=None, zorder=None):
        sp = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        sp.set_defaults(func=fn, default_prec=prec, default_zorder=zorder)
        return sp

    def lattice_args(sp):
        grp = sp.add_mutually_exclusive_group(required=True)
        grp.add_argument("--gram", help="Gram matrix JSON file")
        grp.add_argument("--builtin", choices=BUILTIN_NAMES)

    sp = add("eisenstein", cmd_eisenstein, "un-normalised Eisenstein series G_w", prec=10)
    sp.add_argument("--weight", type=int, required=True)
    sp = add("generator", cmd_generator, "q-expansion of c4, c6 or Delta", prec=10)
    sp.add_argument("--which", choices=("c4", "c6", "delta"), required=True)
    sp = add("basis", cmd_basis, "monomials c4^i c6^j Delta^k of a weight")
    sp.add_argument("--weight", type=int, required=True)
    sp = add("decompose", cmd_decompose, "coordinates of a form in the monomial basis")
    sp.add_argument("--weight", type=int, required=True)
    sp.add_argument("--series", required=True, help="QSeries JSON file or -")
    sp = add("residue", cmd_residue, "res_{q=0} f / Delta^k dq/q")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--series", required=True)

    sp = add("theta", cmd_theta, "theta series of a lattice", prec=3)
    lattice_args(sp)
    sp = add("theta-mu", cmd_theta_mu, "twisted theta series theta_mu", prec=3)
    lattice_args(sp)
    sp.add_argument("--mu", required=True, help="comma-separated coordinates")
    sp = add("phi", cmd_phi, "even x-coefficients of phi_mu", prec=3, zorder=4)
    lattice_args(sp)
    sp.add_argument("--mu", required=True)
    sp = add("borcherds", cmd_borcherds, "mod-24 test of the Delta^k coordinate")
    lattice_args(sp)
    sp = add("quadref", cmd_quadref, "quadratic refinement p(mu) and residue identity")
    lattice_args(sp)
    sp.add_argument("--mu", required=True)
    sp.add_argument("--mu2", help="second vector for the bilinear-form check")
    sp = add("theta-image", cmd_theta_image, "membership of theta_L in the tmf image")
    lattice_args(sp)

    sp = add("atkin", cmd_atkin, "Atkin operator U_p")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--in", dest="infile", required=True)
    sp = add("versch", cmd_versch, "Verschiebung V_p")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--in", dest="infile", required=True)
    sp = add("star", cmd_star, "f* = f - p^(k-1) f|V")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--weight", type=int, required=True)
    sp.add_argument("--in", dest="infile", required=True)
    sp = add("kummer-ko", cmd_kummer_ko, "congruences for a rational characteristic sequence")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--c", type=int, required=True)
    sp.add_argument("--k", type=int, default=0)
    sp.add_argument("--pairs", required=True, help='e.g. "4:8,6:10"')
    sp.add_argument("--seq", help="CharSequence JSON (default B_n/2n)")
    sp = add("kummer-tmf", cmd_kummer_tmf, "congruences for a q-series characteristic sequence", prec=30)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--c", type=int, required=True)
    sp.add_argument("--k", type=int, default=0)
    sp.add_argument("--pairs", required=True)
    sp.add_argument("--seq", help="CharSequence JSON (default Eisenstein series)")
    sp = add("witten", cmd_witten, "characteristic series of the Witten genus")
    sp.add_argument("--qprec", type=int, default=8)
    sp = add("char-seq", cmd_char_seq, "characteristic sequence of the Witten genus")
    sp.add_argument("--qprec", type=int, default=8)
    sp.add_argument("--nmax", type=int, default=10)
    sp = add("tau-search", cmd_tau_search, "primes p <= bound with tau(p) = 1 mod p")
    sp.add_argument("--bound", type=int, required=True)
    sp = add("pi23", cmd_pi23, "torsion attached to tau(p) - 1")
    sp.add_argument("--p", type=int, required=True)

    sp = add("tmf-image", cmd_tmf_image, "scaled basis of the image in a weight")
    sp.add_argument("--weight", type=int, required=True)
    sp = add("tmf-member", cmd_tmf_member, "membership of a form in the image")
    sp.add_argument("--weight", type=int, required=True)
    sp.add_argument("--series", required=True)
    sp = add("tables", cmd_tables, "reference homotopy tables")
    sp.add_argument("--which", choices=("stems", "tmf", "both"), default="both")

    sp = add("invariants", cmd_invariants, "b-, c-invariants, discriminant and j")
    sp.add_argument("coeffs", nargs="*", metavar="a", help="a1 a2 a3 a4 a6")
    sp.add_argument("--universal", action="store_true")
    sp = add("transform", cmd_transform, "apply x -> l^2 x + r, y -> l^3 y + s x + t")
    sp.add_argument("coeffs", nargs=5, metavar="a")
    sp.add_argument("--by", nargs=4, required=True, metavar=("LAMBDA", "R", "S", "T"))
    sp = add("fgl", cmd_fgl, "formal group law of a curve")
    sp.add_argument("coeffs", nargs="*", metavar="a")
    sp.add_argument("--universal", action="store_true")
    sp.add_argument("--degree", type=int, default=4)
    sp.add_argument("--coordinate", choices=("-x/y", "x/y"), default="-x/y")

    sp = add("verify", cmd_verify, "run a verification suite (default suite if no file)")
    sp.add_argument("suite", nargs="?")
    sp.add_argument("--print-default", action="store_true")
    return p


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # usage errors and --help
        return int(exc.code or 0)
    args.prec_given = args.prec is not None
    if args.prec is None:
        args.prec = args.default_prec if args.default_prec is not None else 3
    if args.zorder is None:
        args.zorder = args.default_zorder if args.default_zorder is not None else 12
    code = EXIT_OK
    try:
        payload = args.func(args)
    except _Fail as exc:
        payload, code = exc.payload, EXIT_FAIL
    except (TmfFormsError, ValueError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"tmf-forms: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if isinstance(payload, dict):
        payload = {"schema": SCHEMA, **payload}
    stdout.write(json.dumps(payload) + "\n")
    if code == EXIT_FAIL:
        print("tmf-forms: check FAILED", file=sys.stderr)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
