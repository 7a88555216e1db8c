"""Finite groups as fully-tabulated objects.

A Group is an indexed element set 0..n-1 with identity at index 0, a full
multiplication table, inverse and element-order tables, and human-readable
labels.  Every construction path fixes a deterministic element indexing:

* groups closed from permutation generators (including everything built
  from a presentation via coset enumeration) are indexed by breadth-first
  order over words in the generators, generators in declaration order, so
  words are visited by length and then lexicographically;
* cyclic groups are indexed by powers of the generator;
* direct products are indexed by lexicographic pairs.

The indexing is part of the contract: coefficient vectors over the group
depend on it, even though code parameters (n, k, d) do not.
"""

from __future__ import annotations

import math
from functools import lru_cache
from importlib import resources

import numpy as np

from .coset import DEFAULT_MAX_COSETS, coset_enumeration
from .errors import NonPrime, OrderCapExceeded
from .field import is_prime
from .presentation import Presentation, parse_presentation

#: Default cap on preset group orders.
ORDER_CAP = 200

#: Exhaustive invariant verification is performed up to this order.
VALIDATION_CAP = 200


class Group:
    """Finite group given by its multiplication table.

    mult[i, j] is the index of g_i * g_j; index 0 is the identity.
    """

    def __init__(
        self,
        mult: np.ndarray,
        labels: list[str] | None = None,
        generators: list[int] | None = None,
        gen_names: list[str] | None = None,
        name: str = "group",
        validate: bool = True,
    ):
        mult = np.asarray(mult, dtype=np.int64)
        n = mult.shape[0]
        self.order = n
        self.mult = mult
        self.name = name
        self.labels = list(labels) if labels is not None else [str(i) for i in range(n)]
        self.generators = list(generators) if generators is not None else []
        self.gen_names = list(gen_names) if gen_names is not None else []

        self.inv = np.argmin(mult, axis=1)  # position of 0 in each row
        self.elem_order = self._orders()

        if validate:
            self._validate()

        self.mult.setflags(write=False)
        self.inv.setflags(write=False)
        self.elem_order.setflags(write=False)

    def _orders(self) -> np.ndarray:
        out = np.ones(self.order, dtype=np.int64)
        for i in range(self.order):
            x = i
            t = 1
            while x != 0:
                x = int(self.mult[x, i])
                t += 1
            out[i] = t
        return out

    def _validate(self) -> None:
        n = self.order
        M = self.mult
        if M.shape != (n, n):
            raise ValueError(f"mult table shape {M.shape} is not square")
        if M.min() < 0 or M.max() >= n:
            raise ValueError("mult table entries out of range")
        ar = np.arange(n)
        if not (np.array_equal(M[0], ar) and np.array_equal(M[:, 0], ar)):
            raise ValueError("index 0 is not a two-sided identity")
        if not (np.array_equal(np.sort(M, axis=1), np.tile(ar, (n, 1)))
                and np.array_equal(np.sort(M, axis=0), np.tile(ar[:, None], (1, n)))):
            raise ValueError("mult table is not a Latin square")
        if np.any(M[ar, self.inv] != 0) or np.any(M[self.inv, ar] != 0):
            raise ValueError("inverse table is wrong")
        if n <= VALIDATION_CAP:
            left = M[M, :]          # left[i, j, k] = (g_i g_j) g_k
            right = M[:, M]         # right[i, j, k] = g_i (g_j g_k)
            if not np.array_equal(left, right):
                raise ValueError("multiplication is not associative")
        if np.any(self.order % self.elem_order != 0):
            raise ValueError("an element order does not divide the group order")

    # -- basic operations -------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        return int(self.mult[a, b])

    def inverse(self, a: int) -> int:
        return int(self.inv[a])

    def power(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inverse(a), -e
        x = 0
        base = a
        while e:
            if e & 1:
                x = int(self.mult[x, base])
            base = int(self.mult[base, base])
            e >>= 1
        return x

    def word_to_element(self, word) -> int:
        """Element of a word ((generator index, exponent), ...)."""
        x = 0
        for gi, e in word:
            x = int(self.mult[x, self.power(self.generators[gi], e)])
        return x

    @property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mult, self.mult.T))

    def cyclic_subgroup(self, g: int) -> tuple[int, ...]:
        """Sorted element tuple of <g>."""
        out = [0]
        x = int(g)
        while x != 0:
            out.append(x)
            x = int(self.mult[x, g])
        return tuple(sorted(out))

    def __repr__(self) -> str:
        return f"Group({self.name}, order={self.order})"


# -- construction from permutations -------------------------------------------


def _word_label(word: tuple[int, ...], gen_names: list[str]) -> str:
    if not word:
        return "1"
    parts: list[str] = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        count = j - i
        name = gen_names[word[i]]
        parts.append(name if count == 1 else f"{name}^{count}")
        i = j
    return "*".join(parts)


def from_permutations(
    gen_perms: np.ndarray,
    gen_names: list[str],
    name: str = "group",
    order_cap: int | None = None,
) -> Group:
    """Close permutations under composition by breadth-first search.

    Words are explored by length then lexicographically (generators in
    declaration order), which defines the element indexing.
    """
    gen_perms = np.asarray(gen_perms, dtype=np.int64)
    deg = gen_perms.shape[1]
    ident = np.arange(deg, dtype=np.int64)

    perms: list[np.ndarray] = [ident]
    words: list[tuple[int, ...]] = [()]
    index: dict[bytes, int] = {ident.tobytes(): 0}
    pos = 0
    while pos < len(perms):
        cur = perms[pos]
        for gi in range(gen_perms.shape[0]):
            new = gen_perms[gi][cur]  # apply cur first, then the generator
            key = new.tobytes()
            if key not in index:
                if order_cap is not None and len(perms) >= order_cap:
                    raise OrderCapExceeded(
                        f"group order exceeds the cap {order_cap}"
                    )
                index[key] = len(perms)
                perms.append(new)
                words.append(words[pos] + (gi,))
        pos += 1

    n = len(perms)
    mult = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        pi = perms[i]
        for j in range(n):
            mult[i, j] = index[perms[j][pi].tobytes()]

    labels = [_word_label(w, gen_names) for w in words]
    generators = [index[gen_perms[gi].tobytes()] for gi in range(gen_perms.shape[0])]
    return Group(mult, labels, generators, list(gen_names), name=name)


def from_presentation(
    pres: Presentation | str,
    max_cosets: int = DEFAULT_MAX_COSETS,
    name: str | None = None,
) -> Group:
    """Build the group a finite presentation defines, via coset enumeration."""
    if isinstance(pres, str):
        pres = parse_presentation(pres)
    perms = coset_enumeration(pres, max_cosets=max_cosets)
    return from_permutations(
        perms, list(pres.gen_names), name=name or f"<{','.join(pres.gen_names)}|...>"
    )


# -- preset constructions ------------------------------------------------------


def cyclic(n: int) -> Group:
    if n < 1:
        raise ValueError(f"cyclic group order must be >= 1, got {n}")
    if n > ORDER_CAP:
        raise OrderCapExceeded(f"order {n} exceeds the cap {ORDER_CAP}")
    idx = np.arange(n)
    mult = (idx[:, None] + idx[None, :]) % n
    labels = ["1"] + ["g" if i == 1 else f"g^{i}" for i in range(1, n)]
    gens = [1] if n > 1 else []
    return Group(mult, labels, gens, ["g"] if n > 1 else [], name=f"c{n}")


def elem_abelian(p: int, m: int, gen_names: tuple[str, ...] | None = None) -> Group:
    if not is_prime(p):
        raise NonPrime(f"{p} is not prime")
    n = p**m
    if n > ORDER_CAP:
        raise OrderCapExceeded(f"order {n} exceeds the cap {ORDER_CAP}")
    if gen_names is None:
        gen_names = ("g", "h") if m == 2 else tuple(f"g{i+1}" for i in range(m))
    if len(gen_names) != m:
        raise ValueError(f"need {m} generator names, got {len(gen_names)}")

    # index <-> exponent tuples, first generator most significant
    weights = p ** np.arange(m - 1, -1, -1, dtype=np.int64)
    digits = (np.arange(n)[:, None] // weights[None, :]) % p
    mult = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights

    labels = []
    for t in digits:
        parts = [
            gen_names[i] if e == 1 else f"{gen_names[i]}^{e}"
            for i, e in enumerate(t)
            if e
        ]
        labels.append("*".join(parts) if parts else "1")
    gens = [int(w) for w in weights]
    return Group(mult, labels, gens, list(gen_names), name=f"ea({p},{m})")


def direct_product(G: Group, H: Group, name: str | None = None) -> Group:
    n = G.order * H.order
    if n > ORDER_CAP:
        raise OrderCapExceeded(f"order {n} exceeds the cap {ORDER_CAP}")
    gi, hi = np.divmod(np.arange(n), H.order)
    mult = G.mult[np.ix_(gi, gi)] * H.order + H.mult[np.ix_(hi, hi)]
    # np.ix_ builds the full n x n component tables
    labels = [f"({G.labels[a]},{H.labels[b]})" for a, b in zip(gi, hi)]

    gen_names: list[str] = []
    seen = set(G.gen_names) & set(H.gen_names)
    for nm in G.gen_names:
        gen_names.append(nm + "1" if nm in seen else nm)
    for nm in H.gen_names:
        gen_names.append(nm + "2" if nm in seen else nm)
    generators = [g * H.order for g in G.generators] + list(H.generators)
    return Group(
        mult, labels, generators, gen_names,
        name=name or f"product({G.name},{H.name})",
    )


def symmetric(n: int) -> Group:
    """Symmetric group on n letters (n <= 5), closed from adjacent transpositions."""
    if not 1 <= n <= 5:
        raise ValueError(f"symmetric(n) supports 1 <= n <= 5, got {n}")
    if math.factorial(n) > ORDER_CAP:
        raise OrderCapExceeded(f"order {math.factorial(n)} exceeds the cap {ORDER_CAP}")
    if n == 1:
        return Group(np.zeros((1, 1), dtype=np.int64), ["1"], [], [], name="s1")
    gens = []
    for i in range(n - 1):
        perm = np.arange(n, dtype=np.int64)
        perm[[i, i + 1]] = perm[[i + 1, i]]
        gens.append(perm)
    names = [f"t{i+1}" for i in range(n - 1)]
    return from_permutations(np.array(gens), names, name=f"s{n}")


def dihedral(order: int) -> Group:
    """Dihedral group of the given (even) order, r of order n = order/2."""
    if order < 4 or order % 2:
        raise ValueError(f"dihedral order must be even and >= 4, got {order}")
    if order > ORDER_CAP:
        raise OrderCapExceeded(f"order {order} exceeds the cap {ORDER_CAP}")
    k = order // 2
    pres = parse_presentation(f"<r,s | r^{k}=s^2=1, s*r*s=r^{k-1}>")
    return from_presentation(pres, name=f"d{order}")


def quaternion8() -> Group:
    pres = parse_presentation("<a,b | a^4=1, b^2=a^2, a*b=b*a^3>")
    return from_presentation(pres, name="q8")


def alternating4() -> Group:
    pres = parse_presentation("<a,b | a^2=1, b^3=1, a*b*a*b*a*b=1>")
    return from_presentation(pres, name="a4")


def _load_data_presentation(stem: str) -> str:
    return (
        resources.files("groupcodes.data").joinpath(f"{stem}.pres").read_text("utf-8")
    )


@lru_cache(maxsize=None)
def build_preset(spec: str) -> Group:
    """Group registered under a preset name.

    Supported: c<n>, klein4, d<even n>, q8, s<n>, a4, ea(p,m),
    product(x,y) with preset arguments, and the bundled presentation
    groups g64 and g48.
    """
    s = spec.strip().lower().replace(" ", "")
    if s.startswith("product(") and s.endswith(")"):
        inner = s[len("product("):-1]
        depth = 0
        for i, ch in enumerate(inner):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "," and depth == 0:
                return direct_product(
                    build_preset(inner[:i]), build_preset(inner[i + 1:]),
                    name=f"product({inner[:i]},{inner[i+1:]})",
                )
        raise ValueError(f"bad product spec {spec!r}")
    if s.startswith("ea(") and s.endswith(")"):
        parts = s[3:-1].split(",")
        if len(parts) != 2:
            raise ValueError(f"bad ea spec {spec!r}")
        return elem_abelian(int(parts[0]), int(parts[1]))
    if s == "klein4":
        return elem_abelian(2, 2)
    if s == "q8":
        return quaternion8()
    if s == "a4":
        return alternating4()
    if s in {"g64", "g48"}:
        return from_presentation(_load_data_presentation(s), name=s)
    if s.startswith("c") and s[1:].isdigit():
        return cyclic(int(s[1:]))
    if s.startswith("d") and s[1:].isdigit():
        return dihedral(int(s[1:]))
    if s.startswith("s") and s[1:].isdigit():
        return symmetric(int(s[1:]))
    raise ValueError(f"unknown group preset {spec!r}")


PRESET_NAMES = (
    "c2", "c4", "c6", "c12", "klein4", "d8", "q8", "d24",
    "s3", "s4", "a4", "ea(p,m)", "product(x,y)", "g64", "g48",
)


# -- predicates ---------------------------------------------------------------


def p_part(n: int, p: int) -> int:
    """Largest power of p dividing n."""
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out


def is_p_nilpotent_cyclic_sylow(G: Group, p: int) -> tuple[bool, bool]:
    """(G has a normal p-complement, G has a cyclic Sylow p-subgroup).

    p-nilpotency is tested by closure of the p'-elements under
    multiplication (one pass over pairs); a closed p'-element set is
    automatically a normal complement of the right size.  The Sylow
    p-subgroup is cyclic iff some element order equals the p-part of |G|.
    Both are vacuously true when p does not divide |G|.
    """
    if not is_prime(p):
        raise NonPrime(f"{p} is not prime")
    pp = p_part(G.order, p)
    if pp == 1:
        return True, True
    pprime = np.nonzero(np.gcd(G.elem_order, p) == 1)[0]
    sub = G.mult[np.ix_(pprime, pprime)]
    closed = bool(np.isin(sub, pprime).all())
    cyclic_sylow = bool((G.elem_order == pp).any())
    return closed, cyclic_sylow


# -- text dump ----------------------------------------------------------------


def format_group(G: Group) -> str:
    lines = [f"order {G.order}"]
    for row in G.mult:
        lines.append(" ".join(str(int(x)) for x in row))
    lines.append("labels " + " ".join(G.labels))
    return "\n".join(lines) + "\n"
