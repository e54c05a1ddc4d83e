"""The cyclic bar chain complex of a group ring and its coproducts.

Degree-n chains are sparse linear combinations of (n+1)-tuples of group
elements.  The boundary multiplies adjacent slots, cyclically at the
end: the last face sends (a_0, ..., a_n) to (a_n a_0, a_1, ..., a_{n-1}),
which is the convention pinned by the boundary-squared tests.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Dict, Iterable, List, Sequence, Tuple

import numpy as np

from .errors import FieldMismatchError
from .groups import FiniteGroup
from .scalars import Field, Scalar

TupleKey = Tuple[int, ...]


@dataclass
class Chain:
    """Sparse element of C_n = k[G]^(n+1): map from (n+1)-tuples to scalars."""

    group: FiniteGroup
    field: Field
    degree: int
    terms: Dict[TupleKey, Scalar] = dc_field(default_factory=dict)

    def __post_init__(self):
        clean: Dict[TupleKey, Scalar] = {}
        for t, c in self.terms.items():
            if len(t) != self.degree + 1:
                raise ValueError(f"tuple {t} has wrong length for degree {self.degree}")
            c = self.field.normalize(c)
            if not self.field.is_zero(c):
                clean[tuple(t)] = c
        self.terms = clean

    @classmethod
    def basis(cls, group: FiniteGroup, field: Field, t: Sequence[int]) -> "Chain":
        t = tuple(t)
        return cls(group, field, len(t) - 1, {t: field.one})

    @classmethod
    def zero(cls, group: FiniteGroup, field: Field, degree: int) -> "Chain":
        return cls(group, field, degree, {})

    def is_zero(self) -> bool:
        return not self.terms

    def add_term(self, t: TupleKey, c: Scalar) -> None:
        f = self.field
        s = f.add(self.terms.get(t, 0), c)
        if f.is_zero(s):
            self.terms.pop(t, None)
        else:
            self.terms[t] = s

    def add(self, other: "Chain") -> "Chain":
        self._check_compatible(other)
        out = Chain(self.group, self.field, self.degree, dict(self.terms))
        for t, c in other.terms.items():
            out.add_term(t, c)
        return out

    def scale(self, c: Scalar) -> "Chain":
        f = self.field
        return Chain(self.group, f, self.degree,
                     {t: f.mul(v, c) for t, v in self.terms.items()})

    def _check_compatible(self, other: "Chain") -> None:
        if self.field != other.field or self.group != other.group:
            raise FieldMismatchError("chains over different groups/fields")
        if self.degree != other.degree:
            raise ValueError("chains of different degree")

    def __eq__(self, other) -> bool:
        return (isinstance(other, Chain) and self.field == other.field
                and self.degree == other.degree and self.terms == other.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for t in sorted(self.terms):
            c = self.terms[t]
            lbl = "(" + ",".join(self.group.labels[g] for g in t) + ")"
            parts.append(lbl if c == 1 else f"{self.field.format_scalar(c)}*{lbl}")
        return " + ".join(parts)


@dataclass
class TensorChain:
    """Sparse element of C_* (x) C_*: map from tuple pairs to scalars."""

    group: FiniteGroup
    field: Field
    terms: Dict[Tuple[TupleKey, TupleKey], Scalar] = dc_field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (l, r), c in self.terms.items():
            c = self.field.normalize(c)
            if not self.field.is_zero(c):
                clean[(tuple(l), tuple(r))] = c
        self.terms = clean

    def is_zero(self) -> bool:
        return not self.terms

    def add_term(self, left: TupleKey, right: TupleKey, c: Scalar) -> None:
        f = self.field
        key = (left, right)
        s = f.add(self.terms.get(key, 0), c)
        if f.is_zero(s):
            self.terms.pop(key, None)
        else:
            self.terms[key] = s

    def __eq__(self, other) -> bool:
        return (isinstance(other, TensorChain) and self.field == other.field
                and self.terms == other.terms)

    def restrict_to_identity_product(self) -> "TensorChain":
        """Keep only terms where both factors multiply to the identity."""
        g = self.group
        kept = {
            (l, r): c for (l, r), c in self.terms.items()
            if has_identity_product(g, l) and has_identity_product(g, r)
        }
        return TensorChain(self.group, self.field, kept)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        lbl = lambda t: "(" + ",".join(self.group.labels[g] for g in t) + ")"
        parts = []
        for (l, r) in sorted(self.terms):
            c = self.terms[(l, r)]
            s = f"{lbl(l)} @ {lbl(r)}"
            parts.append(s if c == 1 else f"{self.field.format_scalar(c)}*{s}")
        return " + ".join(parts)


# -- faces and boundaries -----------------------------------------------------------


def face(group: FiniteGroup, i: int, t: TupleKey) -> TupleKey:
    """i-th cyclic face of a degree-n tuple (n = len(t) - 1 >= 1)."""
    n = len(t) - 1
    if n < 1:
        raise IndexError("face maps need degree >= 1")
    if not 0 <= i <= n:
        raise IndexError(f"face index {i} out of range 0..{n}")
    if i < n:
        return t[:i] + (group.mul_table[t[i]][t[i + 1]],) + t[i + 2:]
    return (group.mul_table[t[n]][t[0]],) + t[1:n]


def boundary(chain: Chain) -> Chain:
    """Alternating sum of the cyclic faces; zero map on degree 0."""
    n = chain.degree
    if n == 0:
        return Chain.zero(chain.group, chain.field, 0)
    out = Chain.zero(chain.group, chain.field, n - 1)
    f = chain.field
    for t, c in chain.terms.items():
        for i in range(n + 1):
            coeff = c if i % 2 == 0 else f.neg(c)
            out.add_term(face(chain.group, i, t), coeff)
    return out


def tensor_boundary(tchain: TensorChain) -> TensorChain:
    """Total differential b(x)1 + (-1)^p 1(x)b on a tensor chain."""
    out = TensorChain(tchain.group, tchain.field, {})
    f = tchain.field
    g = tchain.group
    for (l, r), c in tchain.terms.items():
        p = len(l) - 1
        if p >= 1:
            for i in range(p + 1):
                coeff = c if i % 2 == 0 else f.neg(c)
                out.add_term(face(g, i, l), r, coeff)
        q = len(r) - 1
        if q >= 1:
            sign_p = c if p % 2 == 0 else f.neg(c)
            for i in range(q + 1):
                coeff = sign_p if i % 2 == 0 else f.neg(sign_p)
                out.add_term(l, face(g, i, r), coeff)
    return out


# -- coproducts and counit -----------------------------------------------------------


def convolution_coproduct(chain: Chain) -> TensorChain:
    """The chain-level coproduct dual to the convolution product.

    On a basis tuple (g_0, ..., g_m) it is
    sum over p and h of (h, g_1, ..., g_p) (x) (g_0 h^-1, g_{p+1}, ..., g_m).
    """
    g = chain.group
    out = TensorChain(g, chain.field, {})
    for t, c in chain.terms.items():
        m = len(t) - 1
        g0 = t[0]
        for p in range(m + 1):
            left_rest = t[1:p + 1]
            right_rest = t[p + 1:]
            for h in g.elements():
                left = (h,) + left_rest
                right = (g.mul_table[g0][g.inv_table[h]],) + right_rest
                out.add_term(left, right, c)
    return out


def front_face(group: FiniteGroup, t: TupleKey, p: int) -> TupleKey:
    """Front p-face: ((g_{p+1} ... g_m) g_0, g_1, ..., g_p)."""
    m = len(t) - 1
    if not 0 <= p <= m:
        raise IndexError(f"front face {p} out of range 0..{m}")
    wrap = group.product(t[p + 1:] + (t[0],))
    return (wrap,) + t[1:p + 1]


def back_face(group: FiniteGroup, t: TupleKey, q: int) -> TupleKey:
    """Back q-face: (g_0 g_1 ... g_{m-q}, g_{m-q+1}, ..., g_m)."""
    m = len(t) - 1
    if not 0 <= q <= m:
        raise IndexError(f"back face {q} out of range 0..{m}")
    head = group.product(t[:m - q + 1])
    return (head,) + t[m - q + 1:]


def aw_coproduct(chain: Chain) -> TensorChain:
    """Alexander-Whitney coproduct: sum of front p-face (x) back (m-p)-face."""
    g = chain.group
    out = TensorChain(g, chain.field, {})
    for t, c in chain.terms.items():
        m = len(t) - 1
        for p in range(m + 1):
            out.add_term(front_face(g, t, p), back_face(g, t, m - p), c)
    return out


def counit(chain: Chain) -> Scalar:
    """Coefficient of the identity in degree 0; zero in higher degrees."""
    if chain.degree != 0:
        return chain.field.zero
    return chain.terms.get((chain.group.id,), chain.field.zero)


def apply_counit_left(tchain: TensorChain) -> Chain:
    """(counit (x) 1) applied to a tensor chain; drops non-degree-0 left parts."""
    g, f = tchain.group, tchain.field
    terms: Dict[TupleKey, Scalar] = {}
    degree = 0
    for (l, r), c in tchain.terms.items():
        if len(l) == 1 and l[0] == g.id:
            degree = max(degree, len(r) - 1)
            s = f.add(terms.get(r, 0), c)
            if f.is_zero(s):
                terms.pop(r, None)
            else:
                terms[r] = s
    deg = max((len(r) - 1 for r in terms), default=degree)
    return Chain(g, f, deg, terms)


def has_identity_product(group: FiniteGroup, t: Sequence[int]) -> bool:
    """True iff the ordered product of the tuple is the identity."""
    if len(t) == 0:
        raise ValueError("empty tuple")
    return group.product(t) == group.id


def identity_product_tuples(group: FiniteGroup, degree: int) -> List[TupleKey]:
    """All (degree+1)-tuples whose product is e; |G|^degree of them.

    The first slot is determined by the rest, so enumeration runs over
    the tail.  Order matches the dense mixed-radix order of the tails.
    """
    import itertools

    out = []
    for rest in itertools.product(group.elements(), repeat=degree):
        head = group.inv_table[group.product(rest)]
        out.append((head,) + rest)
    return out


def boundary_squared_basis_sweep(group: FiniteGroup, degree: int,
                                 chunk: int = 1 << 17) -> bool:
    """Exact check that b(b(t)) cancels for every basis tuple of C_degree.

    Runs on face-composition index maps with integer (+/-1) coefficients,
    which covers every coefficient field at once.  Vectorized so that
    degree-6 sweeps over order-8 groups stay fast.
    """
    if degree < 2:
        return True
    m = group.order
    size = m ** (degree + 1)
    n = degree
    first = [group.face_index_map(n, i) for i in range(n + 1)]
    # Composite maps and signs for all face pairs (j after i).
    target_size = m ** (n - 1)
    for start in range(0, size, chunk):
        stop = min(size, start + chunk)
        width = stop - start
        keys = []
        signs = []
        for i in range(n + 1):
            fi = first[i][start:stop]
            for j in range(n):
                comp = group.face_index_map(n - 1, j)[fi]
                keys.append(np.arange(width, dtype=np.int64) * target_size + comp)
                signs.append(1 if (i + j) % 2 == 0 else -1)
        allkeys = np.concatenate(keys)
        allsigns = np.concatenate([np.full(width, s, dtype=np.int64) for s in signs])
        order = np.argsort(allkeys, kind="stable")
        sk = allkeys[order]
        sv = allsigns[order]
        boundaries = np.nonzero(np.diff(sk))[0] + 1
        sums = np.add.reduceat(sv, np.concatenate(([0], boundaries)))
        if np.any(sums):
            return False
    return True
