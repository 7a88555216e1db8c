"""The group algebra KG: elements, products, ideals, annihilators.

An algebra element is a length-|G| numpy uint8 vector of field element
indices; entry i is the coefficient of group element g_i.  All operations
live on a ``GroupAlgebra`` context object that ties a ``Group`` to a
``FiniteField`` and precomputes the index matrices that turn products,
translates and regular-representation matrices into numpy gathers.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .errors import (
    CharMismatch,
    ContextMismatch,
    NonPrime,
    NotAPGroup,
    NotARightIdeal,
    ParseError,
    UnknownGenerator,
)
from .field import FiniteField, _factor_prime_power
from .groups import Group
from .linalg import Subspace, nullspace


@dataclass(frozen=True)
class IdealSubspace:
    """A subspace of KG with verified ideal-closure flags."""

    space: Subspace
    is_right: bool
    is_left: bool

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def side(self) -> str:
        if self.is_right and self.is_left:
            return "two-sided"
        if self.is_right:
            return "right"
        if self.is_left:
            return "left"
        return "none"

    def has_side(self, side: str) -> bool:
        if side == "right":
            return self.is_right
        if side == "left":
            return self.is_left
        raise ValueError(f"side must be 'right' or 'left', got {side!r}")

    def __repr__(self) -> str:
        return f"IdealSubspace(dim={self.dim}, side={self.side})"


class GroupAlgebra:
    """KG for a finite group G over GF(q)."""

    def __init__(self, group: Group, field: FiniteField):
        self.group = group
        self.field = field
        self.n = group.order
        mult, inv = group.mult, group.inv
        # L_v = v[lmul_idx] satisfies L_v @ coords(a) = coords(v a)
        self.lmul_idx = mult[:, inv]
        # R_v = v[rmul_idx].T satisfies R_v @ coords(a) = coords(a v)
        self.rmul_idx = mult[inv]
        # row g of v[right_translate_idx] is coords(v g); similarly left
        self.right_translate_idx = self.lmul_idx.T.copy()
        self.left_translate_idx = self.rmul_idx

    # -- elements ---------------------------------------------------------

    def zero(self) -> np.ndarray:
        return np.zeros(self.n, dtype=np.uint8)

    def one(self) -> np.ndarray:
        return self.basis_element(0)

    def basis_element(self, i: int, coeff: int = 1) -> np.ndarray:
        v = self.zero()
        v[i] = coeff
        return v

    def sigma(self) -> np.ndarray:
        """The sum of all group elements."""
        return np.ones(self.n, dtype=np.uint8)

    def weight(self, a: np.ndarray) -> int:
        return int(np.count_nonzero(a))

    def _check(self, a: np.ndarray) -> np.ndarray:
        a = np.asarray(a, dtype=np.uint8)
        if a.shape != (self.n,):
            raise ContextMismatch(f"element shape {a.shape}, expected ({self.n},)")
        return a

    def same_context(self, other: "GroupAlgebra") -> bool:
        return self.group is other.group and self.field == other.field

    # -- products and involution -------------------------------------------

    def mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Convolution product: (ab)_g = sum_h a_h b_{h^-1 g}."""
        a, b = self._check(a), self._check(b)
        K = self.field
        out = self.zero()
        for h in np.nonzero(a)[0]:
            perm = self.group.mult[h]
            out[perm] = K.add_table[out[perm], K.mul_table[a[h], b]]
        return out

    def hat(self, a: np.ndarray) -> np.ndarray:
        """Coefficient-transport along g -> g^-1 (involutive antiautomorphism)."""
        a = self._check(a)
        out = self.zero()
        out[self.group.inv] = a
        return out

    def reg_matrix(self, v: np.ndarray, side: str = "left") -> np.ndarray:
        """Matrix of a -> v a (side='left') or a -> a v (side='right')."""
        v = self._check(v)
        if side == "left":
            return v[self.lmul_idx]
        if side == "right":
            return v[self.rmul_idx].T.copy()
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")

    # -- ideals -------------------------------------------------------------

    def ideal(self, space: Subspace | np.ndarray) -> IdealSubspace:
        """Wrap a subspace with closure flags verified by generator translation."""
        if not isinstance(space, Subspace):
            space = Subspace.from_rows(self.field, space, self.n)
        gens = self.group.generators
        is_right = all(
            space.contains_vector(row[self.right_translate_idx[g]])
            for row in space.basis
            for g in gens
        )
        is_left = all(
            space.contains_vector(row[self.left_translate_idx[g]])
            for row in space.basis
            for g in gens
        )
        return IdealSubspace(space, is_right, is_left)

    def right_ideal(self, space: Subspace | np.ndarray) -> IdealSubspace:
        ideal = self.ideal(space)
        if not ideal.is_right:
            raise NotARightIdeal("subspace is not closed under right translation")
        return ideal

    def principal_ideal(self, v: np.ndarray, side: str = "right") -> IdealSubspace:
        """vKG (side='right') or KGv (side='left')."""
        v = self._check(v)
        if side == "right":
            rows = v[self.right_translate_idx]
        elif side == "left":
            rows = v[self.left_translate_idx]
        else:
            raise ValueError(f"side must be 'right' or 'left', got {side!r}")
        return self.ideal(Subspace.from_rows(self.field, rows, self.n))

    def annihilator(self, x, side: str = "right") -> IdealSubspace:
        """ann_r(x) = {a : xa = 0} or ann_l(x) = {a : ax = 0}.

        x may be a single element or a subspace/ideal; for a subspace the
        result is the intersection of the basis rows' annihilators.
        """
        if side == "right":
            idx = self.lmul_idx  # xa = L_x a
        elif side == "left":
            idx = self.rmul_idx  # ax = R_x a, R_x = x[rmul_idx].T
        else:
            raise ValueError(f"side must be 'right' or 'left', got {side!r}")
        if isinstance(x, IdealSubspace):
            rows = x.space.basis
        elif isinstance(x, Subspace):
            rows = x.basis
        else:
            rows = self._check(x).reshape(1, -1)
        if rows.shape[0] == 0:
            return self.ideal(Subspace.full(self.field, self.n))
        mats = [v[idx] if side == "right" else v[idx].T for v in rows]
        stacked = np.vstack(mats)
        return self.ideal(nullspace(self.field, stacked))

    def augmentation_ideal(self) -> IdealSubspace:
        """The two-sided ideal {a : sum of coefficients = 0}, dim |G|-1."""
        n, K = self.n, self.field
        rows = np.zeros((n - 1, n), dtype=np.uint8)
        rows[:, 0] = K.neg_table[1]
        rows[np.arange(n - 1), np.arange(1, n)] = 1
        return self.ideal(Subspace.from_rows(K, rows, n))

    def radical_power(self, r: int) -> IdealSubspace:
        """J^r for the radical J of KG, G a p-group in characteristic p.

        In that case J is the augmentation ideal; powers are computed by
        pairwise products of basis rows followed by row reduction.  J^0 is
        the full algebra, and powers past the nilpotency index are zero.
        """
        if r < 0:
            raise ValueError(f"exponent must be >= 0, got {r}")
        if self.n > 1:
            try:
                p0, _ = _factor_prime_power(self.n)
            except NonPrime:
                raise NotAPGroup(f"|G| = {self.n} is not a prime power") from None
            if p0 != self.field.p:
                raise CharMismatch(
                    f"|G| = {self.n} is a power of {p0}, but char K = {self.field.p}"
                )
        if r == 0:
            return self.ideal(Subspace.full(self.field, self.n))
        J = self.augmentation_ideal()
        cur = J
        for _ in range(r - 1):
            if cur.dim == 0:
                break
            prods = [
                self.mul(x, y) for x in cur.space.basis for y in J.space.basis
            ]
            cur = self.ideal(Subspace.from_rows(self.field, np.array(prods), self.n))
        return cur

    def product_space(self, A: Subspace, B: Subspace) -> Subspace:
        """Span of {a b : a in A basis, b in B basis}."""
        if A.dim == 0 or B.dim == 0:
            return Subspace.zero(self.field, self.n)
        prods = [self.mul(x, y) for x in A.basis for y in B.basis]
        return Subspace.from_rows(self.field, np.array(prods), self.n)

    # -- random elements -----------------------------------------------------

    def random_element(self, rng: np.random.Generator) -> np.ndarray:
        return rng.integers(0, self.field.q, self.n, dtype=np.int64).astype(np.uint8)

    def random_sparse_element(self, rng: np.random.Generator, w: int) -> np.ndarray:
        if not 0 < w <= self.n:
            raise ValueError(f"support size {w} out of range 1..{self.n}")
        v = self.zero()
        support = rng.choice(self.n, size=w, replace=False)
        v[np.sort(support)] = rng.integers(1, self.field.q, w, dtype=np.int64)
        return v

    def __repr__(self) -> str:
        return f"GroupAlgebra({self.group.name}, {self.field.spec_string()})"


# -- element expressions -------------------------------------------------------
#
# grammar: expr ::= term ('+' term)*
#          term ::= [scalar '*'] word
#          word ::= factor ('*' factor)* | '1'
#          factor ::= gen ('^' int)?
# Scalars are field element indices 0..q-1 in canonical order.  Factors may
# also be juxtaposed without '*' when generator names are unambiguous.

_SCALAR_RE = re.compile(r"\d+")
_INT_RE = re.compile(r"-?\d+")


def parse_element(A: GroupAlgebra, text: str) -> np.ndarray:
    """Map an expression like ``1 + a^6*c + 2*b`` to an algebra element."""
    G, K = A.group, A.field
    names = sorted(range(len(G.gen_names)), key=lambda i: -len(G.gen_names[i]))
    out = A.zero()
    src = text.replace(" ", "").replace("\n", "")
    if not src:
        raise ParseError("empty element expression")
    for term in src.split("+"):
        if not term:
            raise ParseError(f"empty term in {text!r}")
        pos = 0
        coeff = 1
        m = _SCALAR_RE.match(term, pos)
        # a leading integer is a scalar unless it is the whole word '1'
        if m and (m.end() == len(term) or term[m.end()] in "*"):
            val = int(m.group(0))
            if term[m.end():m.end() + 1] == "*":
                if val >= K.q:
                    raise ParseError(f"scalar {val} out of range for {K.spec_string()}")
                coeff = val
                pos = m.end() + 1
            else:
                # bare integer term: '1' is the identity word, other values
                # are scalar multiples of the identity
                if val >= K.q:
                    raise ParseError(f"scalar {val} out of range for {K.spec_string()}")
                out[0] = K.add_table[out[0], val]
                continue
        elem = 0
        first = True
        while pos < len(term):
            if term[pos] == "*":
                pos += 1
                continue
            if first and term[pos] == "1" :
                pos += 1
                first = False
                continue
            gi = None
            for i in names:
                if term.startswith(G.gen_names[i], pos):
                    gi = i
                    break
            if gi is None:
                raise UnknownGenerator(
                    f"no generator matches {term[pos:]!r} in group {G.name}"
                )
            pos += len(G.gen_names[gi])
            exp = 1
            if pos < len(term) and term[pos] == "^":
                pos += 1
                m = _INT_RE.match(term, pos)
                if m is None:
                    raise ParseError(f"expected exponent in term {term!r}")
                exp = int(m.group(0))
                pos = m.end()
            elem = G.mult[elem, G.power(G.generators[gi], exp)]
            first = False
        out[elem] = K.add_table[out[elem], coeff]
    return out


def format_element(A: GroupAlgebra, v: np.ndarray) -> str:
    """Inverse of parse_element, using the group's canonical labels."""
    terms = []
    for i in np.nonzero(v)[0]:
        c = int(v[i])
        label = A.group.labels[i]
        if i == 0:
            terms.append(str(c))
        elif c == 1:
            terms.append(label)
        else:
            terms.append(f"{c}*{label}")
    return " + ".join(terms) if terms else "0"
