"""Batch verification suites: a JSON list of named checks, each run in isolation."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import padic
from .errors import TmfFormsError
from .lattice import builtin, phi_mu, theta, theta_mu, borcherds_check, enumerate_shells
from .modforms import eisenstein
from .series import QSeries, as_rational

CHECK_KINDS = ("borcherds", "phi-identity", "witten-eisenstein", "kummer-ko", "kummer-tmf",
               "ustar", "tau-search")


@dataclass
class Check:
    kind: str
    params: dict = field(default_factory=dict)
    expect: str = "PASS"
    name: str | None = None

    def to_json(self) -> dict:
        out = {"kind": self.kind, "params": self.params, "expect": self.expect}
        if self.name:
            out["name"] = self.name
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "Check":
        kind = obj["kind"]
        if kind not in CHECK_KINDS:
            raise ValueError(f"unknown check kind {kind!r}")
        return cls(kind, dict(obj.get("params", {})), obj.get("expect", "PASS"), obj.get("name"))


@dataclass
class VerificationSuite:
    checks: list

    def to_json(self) -> dict:
        return {"checks": [c.to_json() for c in self.checks]}

    @classmethod
    def from_json(cls, obj) -> "VerificationSuite":
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls([Check.from_json(c) for c in obj.get("checks", [])])


def default_suite() -> VerificationSuite:
    return VerificationSuite([
        Check("borcherds", {"lattice": "leech"}),
        Check("borcherds", {"lattice": "e8cubed"}),
        Check("phi-identity", {"lattice": "e8", "prec": 4, "xorder": 4, "random": 10, "max_norm": 8}),
        Check("witten-eisenstein", {"qprec": 8, "zorder": 12, "relation": "negated"}),
        Check("kummer-ko", {"primes": [2, 3, 5, 7], "kmax": 2, "nmax": 40}),
        Check("kummer-tmf", {"primes": [2, 3, 5], "kmax": 1, "nmax": 20, "prec": 30}),
        Check("ustar", {"primes": [2, 3, 5], "weights": [4, 6, 8], "prec": 60}),
        Check("tau-search", {"bound": 1000, "expected": [11, 23, 691]}),
    ])


# ---------------------------------------------------------------------------
# individual checks; each returns (verdict, details)


def _run_borcherds(p, ctx):
    rep = borcherds_check(builtin(p.get("lattice", "leech")), budget=ctx["budget"])
    return rep.verdict, rep.to_json()


def _run_phi_identity(p, ctx):
    g = builtin(p.get("lattice", "e8"))
    prec = int(p.get("prec", 4))
    xorder = int(p.get("xorder", 4))
    max_norm = int(p.get("max_norm", 8))
    rng = random.Random(ctx["seed"])
    table = enumerate_shells(g, max_norm, ctx["budget"])
    mus = []
    for norm in (2, 4):
        if len(table.shells.get(norm, ())):
            mus.append([int(t) for t in table.shells[norm][0]])
    pool = table.representatives()
    for _ in range(int(p.get("random", 10))):
        mus.append([int(t) for t in pool[rng.randrange(len(pool))]])
    th = theta(g, prec, ctx["budget"]).series
    rows = []
    ok = True
    for mu in mus:
        m = g.norm(mu)
        lhs = phi_mu(g, mu, prec, xorder, ctx["budget"])[1]
        rhs = theta_mu(g, mu, prec, ctx["budget"]).series - th.scale(Fraction(m, 24))
        rows.append({"mu": mu, "norm": m, "equal": lhs == rhs})
        ok = ok and lhs == rhs
    return ("PASS" if ok else "FAIL"), {"vectors": rows}


def _run_witten(p, ctx):
    qprec = int(p.get("qprec", 8))
    zorder = int(p.get("zorder", 12))
    sign = {"negated": -1, "equal": 1}[p.get("relation", "negated")]
    nmax = zorder - 2 if zorder % 2 == 0 else zorder - 1
    seq = padic.extract_char_sequence(padic.witten_series(qprec, zorder), nmax)
    rows = []
    for n in range(4, nmax + 1, 2):
        G = eisenstein(n, qprec).series
        rows.append({"n": n, "match": seq[n] == G.scale(sign)})
    ok = all(r["match"] for r in rows)
    return ("PASS" if ok else "FAIL"), {"relation": p.get("relation", "negated"), "entries": rows}


def _perturbed(seq, p):
    pert = p.get("perturb")
    if not pert:
        return seq
    n = int(pert["n"])
    delta = as_rational(pert["delta"])
    v = seq[n]
    return seq.replace(n, v + delta if not isinstance(v, QSeries) else v + QSeries.constant(delta, v.prec))


def _kummer_grid(p, ctx, tmf: bool):
    primes = p.get("primes", [p["p"]] if "p" in p else [2, 3, 5])
    kmax = int(p.get("kmax", p.get("k", 1)))
    nmax = int(p.get("nmax", 20))
    if tmf:
        seq = _perturbed(padic.eisenstein_sequence(nmax, int(p.get("prec", 30))), p)
        indices = range(4, nmax + 1, 2)
    else:
        seq = _perturbed(padic.canonical_ko_sequence(nmax), p)
        indices = range(2, nmax + 1, 2)
    failures = []
    total = 0
    for q in primes:
        units = p.get("units") or padic.default_units(q)
        for c in units:
            for k in range(kmax + 1):
                pairs = padic.valid_pairs(q, k, indices)
                if tmf:
                    reps = padic.kummer_check_tmf(seq, q, c, k, pairs, indices=list(indices))
                else:
                    reps = padic.kummer_check_ko(seq, q, c, k, pairs, indices=list(indices))
                total += len(reps)
                failures += [r.to_json() for r in reps if r.verdict != "PASS"]
    # one structured failure list, without the bulky series payloads
    for f in failures:
        f.pop("lhs", None)
        f.pop("rhs", None)
    return ("PASS" if not failures else "FAIL"), {"checked": total, "failures": failures}


def _run_ustar(p, ctx):
    prec = int(p.get("prec", 60))
    rows = []
    for q in p.get("primes", [2, 3, 5]):
        for w in p.get("weights", [4, 6, 8]):
            direct = padic.eisenstein_star(w, q, prec)
            via = padic.star(eisenstein(w, prec).series, w, q)
            u = padic.atkin_U(direct, q)
            rows.append({"p": q, "weight": w, "coincide": direct == via,
                         "u_fixed": u == direct.truncate(u.prec)})
    ok = all(r["coincide"] and r["u_fixed"] for r in rows)
    return ("PASS" if ok else "FAIL"), {"entries": rows}


def _run_tau(p, ctx):
    bound = int(p.get("bound", 1000))
    found = padic.tau_search(bound)
    expected = p.get("expected")
    ok = expected is None or found == list(expected)
    return ("PASS" if ok else "FAIL"), {"bound": bound, "primes": found}


_RUNNERS = {
    "borcherds": _run_borcherds,
    "phi-identity": _run_phi_identity,
    "witten-eisenstein": _run_witten,
    "kummer-ko": lambda p, ctx: _kummer_grid(p, ctx, False),
    "kummer-tmf": lambda p, ctx: _kummer_grid(p, ctx, True),
    "ustar": _run_ustar,
    "tau-search": _run_tau,
}


def run_suite(suite: VerificationSuite, seed: int = 0, budget: int = 2_000_000) -> dict:
    """Run every check; errors are recorded per check and do not stop the run."""
    ctx = {"seed": seed, "budget": budget}
    results = []
    for idx, chk in enumerate(suite.checks):
        entry = {"index": idx, "kind": chk.kind, "name": chk.name or chk.kind, "expect": chk.expect}
        try:
            verdict, details = _RUNNERS[chk.kind](chk.params, ctx)
            entry["verdict"] = verdict
            entry["details"] = details
        except (TmfFormsError, ValueError, KeyError, TypeError) as exc:
            entry["verdict"] = "ERROR"
            entry["error"] = f"{type(exc).__name__}: {exc}"
        entry["ok"] = entry["verdict"] == chk.expect
        results.append(entry)
    mismatches = sum(1 for r in results if not r["ok"] and r["verdict"] != "ERROR")
    errors = sum(1 for r in results if r["verdict"] == "ERROR")
    overall = "PASS" if not mismatches and not errors else ("FAIL" if mismatches else "ERROR")
    return {"verdict": overall, "checks": results, "failures": mismatches, "errors": errors,
            "empty": not results}
