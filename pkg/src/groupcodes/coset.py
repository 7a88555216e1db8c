"""Todd-Coxeter coset enumeration over the trivial subgroup.

HLT strategy: every relator is scanned (and filled) at every live coset,
deductions fill single gaps, and coincidences are merged through a
union-find with a queue.  No lookahead; this is plenty for the group
orders this package targets, where simplicity beats speed.

The completed table yields each generator as a permutation of the cosets,
which is the regular representation of the group.
"""

from __future__ import annotations

import numpy as np

from .errors import CosetBudgetExceeded, IncompleteEnumeration
from .presentation import Presentation, Word

DEFAULT_MAX_COSETS = 10**6


def _flatten(word: Word, ngens: int) -> list[int]:
    """Relator as a sequence of column indices (2g for g, 2g+1 for g^-1)."""
    cols: list[int] = []
    for g, e in word:
        col = 2 * g if e > 0 else 2 * g + 1
        cols.extend([col] * abs(e))
    return cols


def _inv_col(c: int) -> int:
    return c ^ 1


class _Enumerator:
    def __init__(self, pres: Presentation, max_cosets: int):
        self.ncols = 2 * pres.ngens
        self.max_cosets = max_cosets
        self.table: list[list[int | None] | None] = [[None] * self.ncols]
        self.parent = [0]
        self.relators = [_flatten(w, pres.ngens) for w in pres.relators]

    # -- union-find -------------------------------------------------------

    def find(self, a: int) -> int:
        root = a
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[a] != root:
            self.parent[a], a = root, self.parent[a]
        return root

    def alive(self, a: int) -> bool:
        return self.parent[a] == a

    # -- table access -------------------------------------------------------

    def get(self, a: int, c: int) -> int | None:
        row = self.table[a]
        e = row[c]
        if e is None:
            return None
        r = self.find(e)
        row[c] = r
        return r

    def define(self, a: int, c: int) -> int:
        if len(self.table) >= self.max_cosets:
            raise CosetBudgetExceeded(
                f"more than {self.max_cosets} cosets defined; "
                "the presentation may not define a finite group"
            )
        b = len(self.table)
        self.table.append([None] * self.ncols)
        self.parent.append(b)
        self.table[a][c] = b
        self.table[b][_inv_col(c)] = a
        return b

    def deduce(self, a: int, c: int, b: int) -> None:
        """Record a*c = b in both directions, queueing coincidences."""
        for x, cc, y in ((a, c, b), (b, _inv_col(c), a)):
            cur = self.get(x, cc)
            if cur is None:
                self.table[x][cc] = y
            elif cur != y:
                self.coincidence(cur, y)

    # -- coincidence handling -----------------------------------------------

    def coincidence(self, a: int, b: int) -> None:
        queue = [(a, b)]
        while queue:
            x, y = queue.pop()
            rx, ry = self.find(x), self.find(y)
            if rx == ry:
                continue
            if rx > ry:
                rx, ry = ry, rx
            self.parent[ry] = rx
            dead_row = self.table[ry]
            self.table[ry] = None
            for c in range(self.ncols):
                e = dead_row[c]
                if e is None:
                    continue
                er = self.find(e)
                cur = self.table[rx][c]
                if cur is None:
                    self.table[rx][c] = er
                    mirror = self.table[er][_inv_col(c)]
                    if mirror is None:
                        self.table[er][_inv_col(c)] = rx
                    elif self.find(mirror) != rx:
                        queue.append((mirror, rx))
                elif self.find(cur) != er:
                    queue.append((cur, er))
        # normalization sweep: point every live entry at its representative
        for i, row in enumerate(self.table):
            if row is None or not self.alive(i):
                continue
            for c in range(self.ncols):
                if row[c] is not None:
                    row[c] = self.find(row[c])

    # -- relator scanning -----------------------------------------------------

    def scan_and_fill(self, a: int, word: list[int]) -> None:
        L = len(word)
        i, j = 0, L
        f = b = a
        while True:
            while i < j:
                nxt = self.get(f, word[i])
                if nxt is None:
                    break
                f = nxt
                i += 1
            if i == j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j > i:
                prv = self.get(b, _inv_col(word[j - 1]))
                if prv is None:
                    break
                b = prv
                j -= 1
            if j == i:
                if f != b:
                    self.coincidence(f, b)
                return
            if j == i + 1:
                self.deduce(f, word[i], b)
                return
            self.define(f, word[i])

    # -- main loop ---------------------------------------------------------

    def run(self) -> np.ndarray:
        idx = 0
        while idx < len(self.table):
            if not self.alive(idx):
                idx += 1
                continue
            for word in self.relators:
                if not self.alive(idx):
                    break
                self.scan_and_fill(idx, word)
            if self.alive(idx):
                for c in range(self.ncols):
                    if self.get(idx, c) is None:
                        self.define(idx, c)
            idx += 1

        live = [i for i in range(len(self.table)) if self.alive(i)]
        compact = {coset: k for k, coset in enumerate(live)}
        ngens = self.ncols // 2
        perms = np.zeros((ngens, len(live)), dtype=np.int64)
        for k, coset in enumerate(live):
            for g in range(ngens):
                e = self.get(coset, 2 * g)
                if e is None:
                    raise IncompleteEnumeration(
                        f"coset {coset} has no image under generator {g}"
                    )
                perms[g, k] = compact[e]
        return perms


def coset_enumeration(pres: Presentation, max_cosets: int = DEFAULT_MAX_COSETS) -> np.ndarray:
    """Enumerate cosets of the trivial subgroup.

    Returns an (ngens, order) array: row g is the permutation that right
    multiplication by generator g induces on the cosets.
    """
    return _Enumerator(pres, max_cosets).run()
