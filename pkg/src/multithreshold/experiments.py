"""Registry of end-to-end reproducible claims.

Each claim runs the relevant construction or search and reports the observed
outcome as an exact string next to the expected one.
"""

import time
from dataclasses import asdict, dataclass
from fractions import Fraction

from . import constructions, solver, theorems
from .graphs import CompleteMultipartite, build_family, pK2, pK3


@dataclass
class ExperimentReport:
    claim: str
    anchor: str
    inputs: str
    expected: str
    observed: str
    passed: bool
    runtime: float

    def to_json(self):
        return asdict(self)


@dataclass(frozen=True)
class Claim:
    id: str
    anchor: str
    inputs: str
    expected: str
    run: object

    def execute(self):
        start = time.perf_counter()
        observed = self.run()
        elapsed = time.perf_counter() - start
        return ExperimentReport(self.id, self.anchor, self.inputs, self.expected,
                                observed, observed == self.expected, round(elapsed, 6))


def _feasible(rep):
    return "infeasible" if rep is None else "feasible"


def _constructions():
    reps = [constructions.pk2_two_threshold(p) for p in range(1, 7)]
    for p in range(2, 6):
        for t in (2 * p - 3 + Fraction(1, 7), 2 * p + 10):
            reps.append(constructions.pk2_c_t(p, t))
    reps += [constructions.two_k3_c_t(t) for t in (Fraction(3, 2), 2, 5, 100)]
    ok = all(r.verify() for r in reps)
    return f"{len(reps)} valid" if ok else "invalid construction"


def _tset(p):
    return lambda: str(solver.threshold_set(build_family(pK2(p))))


def _separation():
    g = build_family(pK2(3))
    at2 = _feasible(solver.decide_fixed(g, (-1, 1, 2)))
    at4 = _feasible(solver.decide_fixed(g, (-1, 1, 4)))
    return f"t=2: {at2}; t=4: {at4}"


def _theta(g):
    def run():
        res = solver.theta_number(g)
        return "exceeded" if res.exceeded else str(res.theta_number)
    return run


def _two_k3_everywhere():
    g = build_family(pK3(2))
    ok = all(constructions.two_k3_c_t(t).verify() for t in (Fraction(11, 10), 2, 7, 1000))
    return f"constructions {'valid' if ok else 'invalid'}; T(2K3) = {solver.threshold_set(g)}"


def _rainbow():
    seen = []
    for t in (Fraction(3, 2), 2, 5, 100):
        seen.append(constructions.two_k3_c_t(t))
    for p in (2, 3):
        res = solver.theta_number(build_family(pK3(p)))
        seen.append(res.witness)
    ok = all(theorems.rainbow_check(rep) for rep in seen)
    bound_ok = all(
        len(theorems.triangles_of(rep.graph)) <= theorems.pigeonhole_bound(rep.thresholds.k)
        for rep in seen)
    return f"rainbow {'holds' if ok else 'FAILS'}; pigeonhole {'holds' if bound_ok else 'FAILS'}"


def _cozzens_k33():
    g = build_family(CompleteMultipartite(3, 3))
    return f"brute force {theorems.tdim_bruteforce(g)}; formula {theorems.cozzens_tdim((3, 3))}"


def _compositions(n, largest=None):
    if n == 0:
        yield ()
        return
    for a in range(min(n, largest or n), 0, -1):
        for rest in _compositions(n - a, a):
            yield (a,) + rest


def _cozzens_all():
    mismatches = []
    count = 0
    for n in range(1, 8):
        for parts in _compositions(n):
            count += 1
            g = build_family(CompleteMultipartite(*parts))
            if theorems.tdim_bruteforce(g) != theorems.cozzens_tdim(parts):
                mismatches.append(parts)
    return f"{count} graphs, {len(mismatches)} mismatches"


REGISTRY = [
    Claim("constructions", "explicit rankings of pK2 and 2K3 verify",
          "pK2 p=1..6 at (-1,1); pK2 p=2..5 at t=2p-3+1/7, 2p+10; 2K3 at t=3/2,2,5,100",
          "18 valid", _constructions),
    Claim("tset-2k2", "2K2 is (-1,1,t)-threshold for every t > 1", "2K2", "(1, inf)", _tset(2)),
    Claim("gp-sharpness-p3", "pK2 is (-1,1,t)-threshold exactly when t > 2p-3", "3K2", "(3, inf)", _tset(3)),
    Claim("gp-sharpness-p4", "pK2 is (-1,1,t)-threshold exactly when t > 2p-3", "4K2", "(5, inf)", _tset(4)),
    Claim("gp-sharpness-p5", "pK2 is (-1,1,t)-threshold exactly when t > 2p-3", "5K2", "(7, inf)", _tset(5)),
    Claim("gp-lower-p4", "pK2 with p >= 4 needs t > 2p-5", "4K2, thresholds (-1,1,3)", "infeasible",
          lambda: _feasible(solver.decide_fixed(build_family(pK2(4)), (-1, 1, 3)))),
    Claim("separation-c2-c4", "3K2 separates C_2 from C_4", "3K2 at t=2 and t=4",
          "t=2: infeasible; t=4: feasible", _separation),
    Claim("2k3-not-2threshold", "2K3 is not a 2-threshold graph", "2K3, k=2", "infeasible",
          lambda: _feasible(solver.decide_k(build_family(pK3(2)), 2))),
    Claim("2k3-in-D", "2K3 is (-1,1,t)-threshold for every t > 1", "2K3",
          "constructions valid; T(2K3) = (1, inf)", _two_k3_everywhere),
    Claim("theta-2k2", "pK2 has threshold number 2", "2K2", "2", _theta(build_family(pK2(2)))),
    Claim("theta-2k3", "2K3 has threshold number 3", "2K3", "3", _theta(build_family(pK3(2)))),
    Claim("rainbow", "triangles of pK3 carry distinct colour multisets", "2K3 constructions; solver witnesses for 2K3, 3K3",
          "rainbow holds; pigeonhole holds", _rainbow),
    Claim("cozzens-k33", "t(K_{3,3}) = 3", "K_{3,3}", "brute force 3; formula 3", _cozzens_k33),
    Claim("tdim-2k2", "t(pK2) = p", "2K2", "2", lambda: str(theorems.tdim_bruteforce(build_family(pK2(2))))),
    Claim("cozzens-all-n7", "t(K_{m1..mp}) = m_{p-1}", "all complete multipartite graphs on <= 7 vertices",
          "44 graphs, 0 mismatches", _cozzens_all),
]

BY_ID = {c.id: c for c in REGISTRY}


def run_claims(which="all"):
    """Yield reports for one claim id or, with ``"all"``, the whole registry in order."""
    if which == "all":
        claims = REGISTRY
    elif which in BY_ID:
        claims = [BY_ID[which]]
    else:
        raise KeyError(which)
    for claim in claims:
        yield claim.execute()
