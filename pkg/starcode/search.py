"""
Computer searches over small Star graphs: enumeration and classification
of perfect codes as exact covers by closed balls, embedding of bitrades
into perfect codes, and the volume spectrum of perfect bitrades.
"""
import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np
import scipy.sparse

from . import perm_core as pc
from . import codes
from . import group_algebra as ga
from .codes import Code, Bitrade
from .dlx import DancingLinks
from .star_graph import StarGraph

LOG = logging.getLogger(__name__)

COVER_CAP = 7
CLASSIFY_CAP = 6
BITRADE_CAP = 6
CODE_BUDGET = 60.
BITRADE_BUDGET = 600.
PROGRESS_NODES = 10 ** 4


class ExactCoverInstance(object):
    """
    Rows and columns are both the vertices of S_n; row v covers the n
    columns of the closed ball of v. An exact cover is a perfect code.
    Forced rows must be part of every cover, forbidden rows of none.
    """

    def __init__(self, n, forced=(), forbidden=(), cap=COVER_CAP):
        if n > cap:
            raise pc.CapExceededError(
                "exact cover over S_%i exceeds the cap %i" % (n, cap))
        graph = StarGraph(n)
        self._n = n
        self._forced = np.unique(np.asarray(forced, dtype=np.int64))
        self._forbidden = np.unique(np.asarray(forbidden, dtype=np.int64))
        if len(np.intersect1d(self._forced, self._forbidden)):
            raise ValueError("a row cannot be both forced and forbidden")
        order = graph.order
        balls = graph.ball_ranks(np.arange(order))
        rows = np.repeat(np.arange(order), n)
        self._matrix = scipy.sparse.csr_matrix(
            (np.ones(order * n, dtype=np.int8), (rows, balls.ravel())),
            shape=(order, order))

    @property
    def n(self):
        return self._n

    @property
    def matrix(self):
        return self._matrix

    @property
    def forced(self):
        return self._forced

    @property
    def forbidden(self):
        return self._forbidden

    def with_forced(self, row):
        return ExactCoverInstance(self._n, np.append(self._forced, row), self._forbidden)

    def covers(self, rows):
        """True iff the given rows cover every column exactly once."""
        column_sums = np.asarray(self._matrix[np.asarray(rows)].sum(axis=0)).ravel()
        return bool((column_sums == 1).all())

    def reduce(self):
        """
        Remove the columns covered by the forced rows and every row that
        meets them. Returns (live rows, live column count), with row
        columns renumbered, or None when the forced rows overlap.
        """
        order = self._matrix.shape[1]
        covered = np.zeros(order, dtype=np.int64)
        for r in self._forced:
            covered[self._matrix[r].indices] += 1
        if covered.max(initial=0) > 1:
            return None
        covered = covered.astype(bool)
        hits = self._matrix @ covered.astype(np.int8)
        live = np.flatnonzero(hits == 0)
        live = np.setdiff1d(live, self._forbidden, assume_unique=True)
        renumber = np.cumsum(~covered) - 1
        rows = [(int(r), renumber[self._matrix[r].indices].tolist()) for r in live]
        return rows, int((~covered).sum())


@dataclass
class SolutionReport:
    solutions: list
    complete: bool
    nodes: int
    elapsed: float


def build_code_cover(n, forced=None, forbidden=None):
    """Exact cover instance whose covers are the perfect codes of S_n
    containing `forced` and avoiding `forbidden`."""
    for c in (forced, forbidden):
        if c is not None and c.degree != n:
            raise pc.PermutationError("degree mismatch: %i and %i" % (c.degree, n))
    return ExactCoverInstance(n,
                              [] if forced is None else forced.ranks,
                              [] if forbidden is None else forbidden.ranks)


def _solve_single(inst, limit, budget):
    start = time.perf_counter()
    reduced = inst.reduce()
    if reduced is None:
        return SolutionReport([], True, 0, time.perf_counter() - start)
    rows, n_columns = reduced
    dlx = DancingLinks(n_columns, rows)
    found = dlx.solve(limit=limit, budget=budget)
    solutions = []
    for chosen in found:
        all_rows = np.concatenate([inst.forced, np.asarray(chosen, dtype=np.int64)])
        assert inst.covers(all_rows)
        solutions.append(Code(inst.n, all_rows))
    return SolutionReport(solutions, dlx.complete, dlx.nodes, time.perf_counter() - start)


def _solve_branch(args):
    inst, row, limit, deadline = args
    budget = None if deadline is None else max(0., deadline - time.time())
    return _solve_single(inst.with_forced(row), limit, budget)


def solve_exact_cover(inst, limit=None, budget=CODE_BUDGET, threads=1):
    """
    Enumerate exact covers. Columns are chosen by fewest remaining rows
    (lowest index on ties), rows in increasing rank. With threads > 1 the
    branches of the first column run in separate processes; the merged
    covers are the same as the single-threaded ones, node counts are not.
    All branches share one wall-clock deadline.
    """
    start = time.perf_counter()
    LOG.info("exact cover over S_%i: %i forced, %i forbidden rows",
             inst.n, len(inst.forced), len(inst.forbidden))
    if threads <= 1:
        report = _solve_single(inst, limit, budget)
    else:
        reduced = inst.reduce()
        if reduced is None:
            return SolutionReport([], True, 0, time.perf_counter() - start)
        rows, n_columns = reduced
        _, branch_rows = DancingLinks(n_columns, rows).first_branch()
        if not branch_rows:
            # forced rows already tile S_n, or some column has no rows left
            report = _solve_single(inst, limit, budget)
        else:
            deadline = None if budget is None else time.time() + budget
            with ProcessPoolExecutor(max_workers=threads) as pool:
                parts = list(pool.map(_solve_branch,
                                      [(inst, r, limit, deadline) for r in branch_rows]))
            solutions = [s for part in parts for s in part.solutions]
            complete = all(part.complete for part in parts)
            if limit is not None and len(solutions) >= limit:
                solutions = solutions[:limit]
                complete = False
            report = SolutionReport(solutions, complete,
                                    len(branch_rows) + sum(part.nodes for part in parts), 0.)
    report.solutions.sort(key=lambda c: tuple(c.ranks.tolist()))
    report.elapsed = time.perf_counter() - start
    LOG.info("exact cover over S_%i: %i covers, %s, %i nodes, %.2f s",
             inst.n, len(report.solutions),
             'complete' if report.complete else 'incomplete',
             report.nodes, report.elapsed)
    return report


@dataclass
class CodeClass:
    representative: Code
    count: int
    canonical: tuple
    certificate: object


@dataclass
class Classification:
    n: int
    classes: list
    report: SolutionReport


def classify_perfect_codes(n, budget=CODE_BUDGET, threads=1, cap=CLASSIFY_CAP):
    """
    Isomorphism classes of perfect codes in S_n. S_n is vertex-transitive,
    so it is enough to enumerate the codes containing the identity.
    """
    if n > cap:
        raise pc.CapExceededError(
            "classification is capped at n = %i, got %i" % (cap, n))
    inst = build_code_cover(n, forced=Code(n, [0]))
    report = solve_exact_cover(inst, budget=budget, threads=threads)
    by_form = {}
    for code in report.solutions:
        form = codes.canonical_form(code)
        if form in by_form:
            by_form[form].count += 1
        else:
            by_form[form] = CodeClass(code, 1, form,
                                      codes.stab1_class_certificate(code))
    classes = [by_form[form] for form in sorted(by_form)]
    LOG.info("S_%i: %i perfect codes through the identity in %i class(es)",
             n, len(report.solutions), len(classes))
    return Classification(n, classes, report)


@dataclass
class SplitCounts:
    pivot: object
    with_pivot: SolutionReport
    without_pivot: SolutionReport


def classify_split(n=6, pivot=None, budget=CODE_BUDGET, threads=1):
    """
    Split the codes through the identity by whether they contain a pivot
    at distance three, (2 3) by default.
    """
    if pivot is None:
        pivot = pc.transposition(n, 2, 3)
    identity = pc.rank(pc.identity(n))
    p = pc.rank(pivot)
    inside = solve_exact_cover(ExactCoverInstance(n, [identity, p]),
                               budget=budget, threads=threads)
    outside = solve_exact_cover(ExactCoverInstance(n, [identity], [p]),
                                budget=budget, threads=threads)
    return SplitCounts(pivot, inside, outside)


@dataclass
class Embedding:
    code: object
    partner: object
    complete: bool

    @property
    def found(self):
        return self.code is not None


def embed_bitrade(t, budget=CODE_BUDGET, threads=1):
    """
    Find a perfect code C containing T0 and avoiding T1. Switching T0 for
    T1 in C gives the partner code C'. When no code is found, `complete`
    tells whether the bitrade is not embeddable or the budget ran out.
    """
    if not codes.verify_bitrade(t):
        raise codes.CodeError("not a perfect bitrade")
    inst = build_code_cover(t.degree, forced=t.t0, forbidden=t.t1)
    report = solve_exact_cover(inst, limit=1, budget=budget, threads=threads)
    if not report.solutions:
        return Embedding(None, None, report.complete)
    code = report.solutions[0]
    partner = code.difference(t.t0).union(t.t1)
    assert codes.is_perfect(code)
    assert codes.is_perfect(partner)
    return Embedding(code, partner, True)


@dataclass
class BitradeSpectrum:
    """
    `volumes` joins the volumes reached by the search (`searched`) with
    those of the constructed bitrades (`witnessed`); `representatives`
    prefers a search-found bitrade for each volume. `complete` and
    `spectrum_complete` refer to the search alone.
    """
    n: int
    volumes: tuple
    representatives: dict
    bitrades: list
    complete: bool
    spectrum_complete: bool
    nodes: int
    searched: tuple = field(default=())
    witnessed: tuple = field(default=())
    elapsed: float = field(default=0.)


def constructed_bitrades(n):
    """
    Bitrades built from pairs of perfect codes: Stab_1 against its right
    translate by (1 n) for every n >= 3, and at n = 6 also Stab_1 against
    PGL(2,5) and PGL(2,5) against a conjugate.
    """
    if n < 3:
        return []
    s = codes.stab1_code(n)
    pairs = [(s, codes.coset_code(s, pc.transposition(n, 1, n), 'right'))]
    if n == 6:
        pgl = codes.pgl_code(5)
        conjugate = Code.from_set(ga.conjugate_subgroup(pgl, pc.transposition(6, 3, 4)))
        pairs += [(s, pgl), (pgl, conjugate)]
    trades = [codes.bitrade_from_codes(a, b) for a, b in pairs]
    for t in trades:
        assert codes.verify_bitrade(t)
    return trades


class _BitradeSearch(object):
    """
    Backtracking over vertex states. A vertex is undecided, in T0 or in
    T1; undecided vertices left at the end are in neither. A ball is
    unbalanced while it meets T0 and T1 in different numbers, and the
    search always branches on the unbalanced ball with the fewest
    vertices able to fill its missing side.
    """

    def __init__(self, n, budget):
        graph = StarGraph(n)
        self.n = n
        self.order = graph.order
        self.balls = graph.ball_ranks(np.arange(self.order)).tolist()
        self.position = np.argsort(graph.bfs_order()).tolist()
        self.side = [-1] * self.order
        self.count = [[0] * self.order, [0] * self.order]
        self.unbalanced = set()
        self.members = [[], []]
        self.deadline = None if budget is None else time.perf_counter() + budget
        self.nodes = 0
        self.stopped = False
        self.found = []

    def _can_take(self, u, s):
        if self.side[u] != -1:
            return False
        count = self.count[s]
        for x in self.balls[u]:
            if count[x]:
                return False
        return True

    def _assign(self, u, s):
        self.side[u] = s
        self.members[s].append(u)
        c0, c1 = self.count
        c = self.count[s]
        for x in self.balls[u]:
            c[x] += 1
            if c0[x] != c1[x]:
                self.unbalanced.add(x)
            else:
                self.unbalanced.discard(x)

    def _undo(self, u, s):
        self.side[u] = -1
        self.members[s].pop()
        c0, c1 = self.count
        c = self.count[s]
        for x in self.balls[u]:
            c[x] -= 1
            if c0[x] != c1[x]:
                self.unbalanced.add(x)
            else:
                self.unbalanced.discard(x)

    def _most_constrained(self):
        best = None
        c0, c1 = self.count
        for x in sorted(self.unbalanced, key=self.position.__getitem__):
            s = 0 if c0[x] < c1[x] else 1
            candidates = [u for u in self.balls[x] if self._can_take(u, s)]
            if len(candidates) == 0:
                return x, s, []
            if best is None or len(candidates) < len(best[2]):
                best = (x, s, candidates)
                if len(candidates) == 1:
                    break
        return best

    def _record(self):
        t0 = Code(self.n, self.members[0])
        t1 = Code(self.n, self.members[1])
        self.found.append(Bitrade(t0, t1))

    def search(self):
        self.nodes += 1
        if self.nodes % PROGRESS_NODES == 0:
            LOG.debug("bitrade search: %i nodes, %i found", self.nodes, len(self.found))
        if self.deadline is not None and self.nodes % 256 == 0 \
                and time.perf_counter() > self.deadline:
            self.stopped = True
            return
        if not self.unbalanced:
            self._record()
            return
        x, s, candidates = self._most_constrained()
        for u in sorted(candidates):
            self._assign(u, s)
            self.search()
            self._undo(u, s)
            if self.stopped:
                return


def enumerate_bitrades(n, budget=BITRADE_BUDGET, cap=BITRADE_CAP):
    """
    Perfect bitrades of S_n through the identity, and their volumes.

    The search anchors the identity in T0 (vertex transitivity, plus the
    symmetry swapping T0 and T1) and only grows balls that are out of
    balance, so it finds the bitrades whose elements are linked through
    shared balls. Every bitrade splits into such linked pieces, each
    itself a bitrade; a piece of volume v fills n*v vertices with balls,
    so when twice the smallest volume exceeds (n-1)! no two pieces fit
    together and the volumes found are the full spectrum.
    """
    if n > cap:
        raise pc.CapExceededError(
            "bitrade enumeration is capped at n = %i, got %i" % (cap, n))
    if n < 2:
        raise ValueError("bitrades need n >= 2, got %i" % n)
    start = time.perf_counter()
    searcher = _BitradeSearch(n, budget)
    searcher._assign(pc.rank(pc.identity(n)), 0)
    searcher.search()
    found = searcher.found
    for t in found:
        assert codes.verify_bitrade(t)
    representatives = {}
    for t in found:
        representatives.setdefault(codes.volume(t), t)
    searched = tuple(sorted(representatives))
    witnessed = {}
    for t in constructed_bitrades(n):
        witnessed.setdefault(codes.volume(t), t)
    for v, t in witnessed.items():
        representatives.setdefault(v, t)
    volumes = tuple(sorted(representatives))
    complete = not searcher.stopped
    spectrum_complete = complete and len(searched) > 0 and \
        2 * searched[0] > math.factorial(n - 1)
    elapsed = time.perf_counter() - start
    LOG.info("S_%i: %i bitrades through the identity, volumes %s (constructed %s), "
             "%s, %i nodes, %.2f s", n, len(found), list(searched), sorted(witnessed),
             'complete' if complete else 'incomplete', searcher.nodes, elapsed)
    return BitradeSpectrum(n, volumes, representatives, found, complete,
                           spectrum_complete, searcher.nodes,
                           searched, tuple(sorted(witnessed)), elapsed)
