"""Complete decision procedures for multithreshold representations.

All procedures share one search.  Each unordered vertex pair must be given a
*label*: the index ``j`` of the weight interval ``[theta_j, theta_{j+1})`` its
weight falls in (``j = 0`` is ``(-inf, theta_1)``, ``j = k`` is
``[theta_k, inf)``).  Edges take odd labels, non-edges even ones.  A partial
labelling is a system of linear constraints over the ranks (and any free
thresholds); a node is pruned as soon as that system is strictly infeasible.

At each node every unlabelled pair's remaining labels are tested against the
current system, labels with a single survivor are forced, and the search
branches on the pair with the fewest survivors.  Witness points returned by
the LP are cached so that most tests are answered without a new LP.
"""

import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb

from .graphs import clique_components, twin_classes
from .lp import simplex
from .lp.constraints import ConstraintSystem, LinearConstraint
from .lp.feasibility import feasible_strict, project_onto
from .lp.intervals import IntervalSet
from .lp.rational import to_rational
from .representation import Representation, ThresholdVector

log = logging.getLogger(__name__)

T_VAR = "t"


@dataclass
class SearchStats:
    nodes: int = 0
    lp_calls: int = 0
    max_depth: int = 0
    leaves: int = 0
    wall_time: float = 0.0

    def merge(self, other):
        self.nodes += other.nodes
        self.lp_calls += other.lp_calls
        self.leaves += other.leaves
        self.max_depth = max(self.max_depth, other.max_depth)

    def to_json(self):
        return {
            "nodes": self.nodes,
            "lp_calls": self.lp_calls,
            "max_depth": self.max_depth,
            "leaves": self.leaves,
            "wall_time": round(self.wall_time, 6),
        }


class SearchTimeout(Exception):
    """The search hit its deadline; ``stats`` holds the partial counters."""

    def __init__(self, stats):
        super().__init__(f"search timed out after {stats.nodes} nodes")
        self.stats = stats


@dataclass
class ThetaResult:
    theta_number: int | None
    witness: Representation | None
    k_max: int
    refuted: list = field(default_factory=list)
    stats: SearchStats = field(default_factory=SearchStats)

    @property
    def exceeded(self):
        """True when no k up to ``k_max`` works (the threshold number is larger)."""
        return self.theta_number is None


# -- threshold schemes --------------------------------------------------------
#
# A threshold is an affine expression ``(coeffs, const)`` over the extra
# variables of the search.

def _const(x):
    return ({}, to_rational(x))


def _var(name):
    return ({name: 1}, to_rational(0))


def fixed_scheme(th):
    return [_const(x) for x in th], [], []


def tset_scheme():
    """Thresholds ``(-1, 1, t)`` with ``t > 1`` free."""
    return [_const(-1), _const(1), _var(T_VAR)], [T_VAR], [LinearConstraint.gt({T_VAR: 1}, 1)]


def free_scheme(k):
    """``k`` thresholds normalized by an affine map of the ranks.

    ``k = 1`` pins the threshold at 0; ``k >= 2`` pins the first two at -1
    and 1 and leaves the rest free in strictly increasing order.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if k == 1:
        return [_const(0)], [], []
    names = [f"th{i}" for i in range(3, k + 1)]
    exprs = [_const(-1), _const(1)] + [_var(v) for v in names]
    cons = []
    prev = None
    for v in names:
        if prev is None:
            cons.append(LinearConstraint.gt({v: 1}, 1))
        else:
            cons.append(LinearConstraint.gt({v: 1, prev: -1}, 0))
        prev = v
    return exprs, names, cons


# -- the search space -----------------------------------------------------------

def _rank(v):
    return f"r{v}"


def symmetry_constraints(g):
    """Rank-order constraints that keep one representative per symmetric class.

    Twins (vertices whose transposition is an automorphism) get sorted ranks;
    identical clique components are ordered by their largest rank, which after
    the in-component sort is the rank of their last vertex.
    """
    cons = []
    for cls in twin_classes(g):
        for a, b in zip(cls, cls[1:]):
            cons.append(LinearConstraint.le({_rank(a): 1, _rank(b): -1}, 0))
    for size, comps in sorted(clique_components(g).items()):
        if size == 1 or len(comps) < 2:
            continue
        for c1, c2 in zip(comps, comps[1:]):
            cons.append(LinearConstraint.le({_rank(c1[-1]): 1, _rank(c2[-1]): -1}, 0))
    return cons


class SearchSpace:
    def __init__(self, g, scheme, symmetry=True):
        exprs, extra_vars, extra_cons = scheme
        self.g = g
        self.k = len(exprs)
        self.exprs = exprs
        self.extra_vars = list(extra_vars)
        self.pairs = g.pairs()
        variables = [_rank(v) for v in range(g.n)] + self.extra_vars
        base = list(extra_cons)
        if symmetry:
            base += symmetry_constraints(g)
        self.base = ConstraintSystem(variables, base)
        self.options = {}
        self.label_cons = {}
        for p in self.pairs:
            parity = 1 if g.has_edge(*p) else 0
            opts = [j for j in range(self.k + 1) if j % 2 == parity]
            self.options[p] = opts
            for j in opts:
                self.label_cons[p, j] = self._label_constraints(p, j)

    def _label_constraints(self, p, j):
        u, v = p
        w = {_rank(u): 1, _rank(v): 1}
        cons = []
        if j > 0:
            coeffs, const = self.exprs[j - 1]
            lo = {x: -a for x, a in w.items()}
            for x, a in coeffs.items():
                lo[x] = lo.get(x, 0) + a
            cons.append(LinearConstraint.le(lo, -const))
        if j < self.k:
            coeffs, const = self.exprs[j]
            hi = dict(w)
            for x, a in coeffs.items():
                hi[x] = hi.get(x, 0) - a
            cons.append(LinearConstraint.lt(hi, const))
        return tuple(cons)

    def certifies(self, point, p, j):
        return all(c.holds(point) for c in self.label_cons[p, j])

    def thresholds_at(self, point):
        return ThresholdVector(
            const + sum((a * point[x] for x, a in coeffs.items()), 0) for coeffs, const in self.exprs)

    def representation(self, point):
        ranks = [point[_rank(v)] for v in range(self.g.n)]
        return Representation(self.g, self.thresholds_at(point), ranks)

    def root(self):
        w = feasible_strict(self.base)
        if w is None:
            return None
        return Node({}, self.base, [w], 0)


@dataclass
class Node:
    labels: dict
    system: ConstraintSystem
    witnesses: list
    depth: int


class _Search:
    """Depth-first branch-and-prune over one ``SearchSpace``."""

    def __init__(self, space, deadline=None):
        self.space = space
        self.deadline = deadline
        self.stats = SearchStats()
        self._lp0 = simplex.lp_calls

    def _tick(self, node):
        self.stats.nodes += 1
        self.stats.max_depth = max(self.stats.max_depth, node.depth)
        self.stats.lp_calls = simplex.lp_calls - self._lp0
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise SearchTimeout(self.stats)

    def propagate(self, node):
        """Force single-survivor pairs to a fixpoint.

        Returns ``None`` if some pair has no surviving label, else the map of
        surviving labels for the still-unlabelled pairs (all of size >= 2).
        """
        sp = self.space
        labels = dict(node.labels)
        system, wits = node.system, list(node.witnesses)
        surv = {}
        changed = True
        while changed:
            changed = False
            for p in sp.pairs:
                if p in labels:
                    continue
                alive = []
                for j in surv.get(p, sp.options[p]):
                    if any(sp.certifies(w, p, j) for w in wits):
                        alive.append(j)
                        continue
                    w = feasible_strict(system.extend(sp.label_cons[p, j]))
                    if w is not None:
                        wits.append(w)
                        alive.append(j)
                if not alive:
                    return None
                if len(alive) == 1:
                    j = alive[0]
                    labels[p] = j
                    system = system.extend(sp.label_cons[p, j])
                    wits = [w for w in wits if sp.certifies(w, p, j)]
                    surv.pop(p, None)
                    changed = True
                else:
                    surv[p] = alive
        return Node(labels, system, wits, node.depth), surv

    def expand(self, node):
        """One search step: ``("dead", None)``, ``("leaf", node)`` or
        ``("branch", children)`` with children in canonical order."""
        self._tick(node)
        out = self.propagate(node)
        if out is None:
            return "dead", None
        node, surv = out
        if not surv:
            self.stats.leaves += 1
            return "leaf", node
        sp = self.space
        p = min(surv, key=lambda q: (len(surv[q]), q))
        first = node.witnesses[0]
        order = sorted(surv[p], key=lambda j: (not sp.certifies(first, p, j), j))
        children = []
        for j in order:
            labels = dict(node.labels)
            labels[p] = j
            wits = [w for w in node.witnesses if sp.certifies(w, p, j)]
            children.append(Node(labels, node.system.extend(sp.label_cons[p, j]), wits, node.depth + 1))
        return "branch", children

    def dfs(self, node, on_leaf):
        """Visit leaves in canonical order; stop early if ``on_leaf`` returns True."""
        kind, data = self.expand(node)
        if kind == "dead":
            return False
        if kind == "leaf":
            return bool(on_leaf(data))
        for child in data:
            if self.dfs(child, on_leaf):
                return True
        return False


# -- running a search, optionally over a process pool -------------------------

def _subtree(space, node, mode, deadline):
    search = _Search(space, deadline)
    found = []

    def on_leaf(leaf):
        if mode == "first":
            found.append(leaf.witnesses[0])
            return True
        found.append(project_onto(leaf.system, T_VAR))
        return False

    try:
        search.dfs(node, on_leaf)
    except SearchTimeout as exc:
        return "timeout", exc.stats
    search.stats.lp_calls = simplex.lp_calls - search._lp0
    return found, search.stats


def _frontier(search, root, target):
    """Expand breadth-first (keeping canonical order) until ``target`` open nodes."""
    items = [("open", root)]
    while True:
        n_open = sum(1 for kind, _ in items if kind == "open")
        if n_open == 0 or n_open >= target:
            return items
        nxt = []
        for kind, node in items:
            if kind != "open":
                nxt.append((kind, node))
                continue
            k, data = search.expand(node)
            if k == "leaf":
                nxt.append(("leaf", data))
            elif k == "branch":
                nxt.extend(("open", c) for c in data)
        items = nxt


def _run(space, mode, timeout=None, workers=1):
    """Run the search; ``mode`` is ``"first"`` (one witness point) or
    ``"project"`` (interval of t for every leaf).  Returns (results, stats)."""
    start = time.monotonic()
    deadline = None if timeout is None else start + timeout
    stats = SearchStats()
    lp0 = simplex.lp_calls
    root = space.root()
    stats.lp_calls = simplex.lp_calls - lp0
    if root is None:
        stats.wall_time = time.monotonic() - start
        return [], stats
    if workers is None or workers <= 1:
        found, sub = _subtree(space, root, mode, deadline)
        if found == "timeout":
            sub.wall_time = time.monotonic() - start
            raise SearchTimeout(sub)
        stats.merge(sub)
        stats.wall_time = time.monotonic() - start
        return found, stats

    head = _Search(space, deadline)
    try:
        items = _frontier(head, root, 4 * workers)
    except SearchTimeout as exc:
        exc.stats.wall_time = time.monotonic() - start
        raise
    stats.merge(head.stats)
    stats.lp_calls += simplex.lp_calls - head._lp0
    results = []
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = []
        for kind, node in items:
            if kind == "leaf":
                futures.append(("leaf", node))
            else:
                futures.append(("open", pool.submit(_subtree, space, node, mode, deadline)))
        timed_out = False
        for kind, item in futures:
            if kind == "leaf":
                part = [item.witnesses[0]] if mode == "first" else [project_onto(item.system, T_VAR)]
            else:
                part, sub = item.result()
                stats.merge(sub)
                if part == "timeout":
                    timed_out = True
                    continue
            if timed_out:
                continue
            results.extend(part)
            if mode == "first" and results:
                for _, other in futures:
                    if hasattr(other, "cancel"):
                        other.cancel()
                break
    stats.wall_time = time.monotonic() - start
    if timed_out and not (mode == "first" and results):
        raise SearchTimeout(stats)
    return results, stats


def _default_workers(workers):
    if workers == 0:
        return os.cpu_count() or 1
    return workers


# -- public procedures ---------------------------------------------------------

def decide_fixed(g, th, *, timeout=None, workers=1, symmetry=True, with_stats=False):
    """A representation of ``g`` with the given thresholds, or None.

    None is a certificate: the search is exhaustive.
    """
    if not isinstance(th, ThresholdVector):
        th = ThresholdVector(th)
    space = SearchSpace(g, fixed_scheme(th), symmetry)
    found, stats = _run(space, "first", timeout, _default_workers(workers))
    rep = space.representation(found[0]) if found else None
    assert rep is None or rep.verify()
    return (rep, stats) if with_stats else rep


def threshold_set(g, *, timeout=None, workers=1, symmetry=True, with_stats=False):
    """The exact set of ``t > 1`` for which ``g`` is (-1, 1, t)-threshold."""
    space = SearchSpace(g, tset_scheme(), symmetry)
    found, stats = _run(space, "project", timeout, _default_workers(workers))
    result = IntervalSet(found)
    return (result, stats) if with_stats else result


def decide_k(g, k, *, timeout=None, workers=1, symmetry=True, with_stats=False):
    """A representation of ``g`` with some ``k`` thresholds, or None."""
    space = SearchSpace(g, free_scheme(k), symmetry)
    found, stats = _run(space, "first", timeout, _default_workers(workers))
    rep = space.representation(found[0]) if found else None
    assert rep is None or rep.verify()
    return (rep, stats) if with_stats else rep


def default_k_max(g):
    return comb(g.n, 2) + 1


def theta_number(g, k_max=None, *, timeout=None, workers=1, symmetry=True):
    """Smallest ``k`` such that ``g`` is a k-threshold graph, up to ``k_max``.

    Edgeless graphs have threshold number 0; their witness is the trivial
    single-threshold representation (all ranks 0, threshold 1).  If no
    ``k <= k_max`` works the result has ``theta_number=None``.
    """
    if k_max is None:
        k_max = default_k_max(g)
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    start = time.monotonic()
    total = SearchStats()
    if not g.edges:
        rep = Representation(g, ThresholdVector((1,)), [0] * g.n)
        return ThetaResult(0, rep, k_max, [], total)
    refuted = []
    for k in range(1, k_max + 1):
        remaining = None
        if timeout is not None:
            remaining = timeout - (time.monotonic() - start)
            if remaining <= 0:
                raise SearchTimeout(total)
        try:
            rep, stats = decide_k(g, k, timeout=remaining, workers=workers,
                                  symmetry=symmetry, with_stats=True)
        except SearchTimeout as exc:
            total.merge(exc.stats)
            total.wall_time = time.monotonic() - start
            raise SearchTimeout(total) from None
        total.merge(stats)
        if rep is not None:
            total.wall_time = time.monotonic() - start
            return ThetaResult(k, rep, k_max, refuted, total)
        refuted.append(k)
        log.debug("graph is not %d-threshold", k)
    total.wall_time = time.monotonic() - start
    return ThetaResult(None, None, k_max, refuted, total)
