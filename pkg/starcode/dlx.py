"""
Algorithm X on dancing links, iterative so that deep searches (one level
per chosen row) do not hit the recursion limit.

Nodes live in flat lists: index 0 is the root, 1..n_columns are the
column headers, and row nodes follow.
"""
import logging
import time

LOG = logging.getLogger(__name__)

CHECK_EVERY = 1024
PROGRESS_EVERY = 10 ** 4


class DancingLinks(object):

    def __init__(self, n_columns, rows):
        """
        rows is an iterable of (row_id, column indices). Rows are linked
        in the given order, which is the order they are tried in.
        """
        self.n_columns = n_columns
        size = n_columns + 1
        self.L = [i - 1 for i in range(size)]
        self.R = [i + 1 for i in range(size)]
        self.L[0] = n_columns
        self.R[n_columns] = 0
        self.U = list(range(size))
        self.D = list(range(size))
        self.C = list(range(size))
        self.S = [0] * size
        self.row_of = [-1] * size
        for row_id, columns in rows:
            self._add_row(row_id, sorted(columns))
        self.nodes = 0
        self.complete = True

    def _add_row(self, row_id, columns):
        first = None
        for col in columns:
            c = col + 1
            node = len(self.C)
            self.C.append(c)
            self.row_of.append(row_id)
            self.U.append(self.U[c])
            self.D.append(c)
            self.D[self.U[c]] = node
            self.U[c] = node
            self.S[c] += 1
            if first is None:
                first = node
                self.L.append(node)
                self.R.append(node)
            else:
                self.L.append(self.L[first])
                self.R.append(first)
                self.R[self.L[first]] = node
                self.L[first] = node

    def _cover(self, c):
        L, R, U, D, C, S = self.L, self.R, self.U, self.D, self.C, self.S
        R[L[c]] = R[c]
        L[R[c]] = L[c]
        i = D[c]
        while i != c:
            j = R[i]
            while j != i:
                D[U[j]] = D[j]
                U[D[j]] = U[j]
                S[C[j]] -= 1
                j = R[j]
            i = D[i]

    def _uncover(self, c):
        L, R, U, D, C, S = self.L, self.R, self.U, self.D, self.C, self.S
        i = U[c]
        while i != c:
            j = L[i]
            while j != i:
                S[C[j]] += 1
                D[U[j]] = j
                U[D[j]] = j
                j = L[j]
            i = U[i]
        R[L[c]] = c
        L[R[c]] = c

    def _choose(self):
        """Column with the fewest rows; ties go to the lowest index."""
        R, S = self.R, self.S
        best = R[0]
        c = R[best]
        while c != 0:
            if S[c] < S[best]:
                best = c
            c = R[c]
        return best

    def _select(self, r):
        j = self.R[r]
        while j != r:
            self._cover(self.C[j])
            j = self.R[j]

    def _unselect(self, r):
        j = self.L[r]
        while j != r:
            self._uncover(self.C[j])
            j = self.L[j]

    def first_branch(self):
        """The column the search branches on first, and the rows it tries."""
        if self.R[0] == 0:
            return None, []
        c = self._choose()
        rows = []
        r = self.D[c]
        while r != c:
            rows.append(self.row_of[r])
            r = self.D[r]
        return c - 1, rows

    def solve(self, limit=None, budget=None):
        """
        Enumerate exact covers as lists of row ids. Stops early, and
        clears self.complete, once `limit` covers are found or `budget`
        seconds have passed.
        """
        D, C, R = self.D, self.C, self.R
        deadline = None if budget is None else time.perf_counter() + budget
        solutions = []
        stack = []
        forward = True
        while True:
            if forward:
                if R[0] == 0:
                    solutions.append(sorted(self.row_of[r] for r in stack))
                    if limit is not None and len(solutions) >= limit:
                        self.complete = False
                        break
                    forward = False
                    continue
                c = self._choose()
                if self.S[c] == 0:
                    forward = False
                    continue
                self._cover(c)
                r = D[c]
            else:
                if not stack:
                    break
                r = stack.pop()
                self._unselect(r)
                c = C[r]
                r = D[r]
                if r == c:
                    self._uncover(c)
                    continue
            stack.append(r)
            self._select(r)
            forward = True
            self.nodes += 1
            if self.nodes % PROGRESS_EVERY == 0:
                LOG.debug("%i nodes, depth %i, %i covers", self.nodes,
                          len(stack), len(solutions))
            if deadline is not None and self.nodes % CHECK_EVERY == 0 \
                    and time.perf_counter() > deadline:
                LOG.warning("exact cover budget of %.1f s exhausted after %i nodes",
                            budget, self.nodes)
                self.complete = False
                break
        return solutions
