"""Finite groups as validated multiplication tables, and group-ring elements.

Elements are indices ``0..order-1``; index 0 is always the identity for
the built-in constructors (table-built groups may place it elsewhere).
Element enumeration conventions are pinned so fixtures stay portable:

* ``cyclic(n)``: powers of the generator, ``x^i`` at index ``i``.
* ``dihedral(n)``: rotations ``r^i`` at ``i < n``, reflections ``r^i s``
  at ``n + i``, with ``r^n = s^2 = e`` and ``s r s = r^-1``.
* ``symmetric(n)``: permutations of ``0..n-1`` in lexicographic
  one-line order, acting on the left (``(a*b)(i) = a(b(i))``).
* ``direct_product(G, H)``: pair ``(a, b)`` at index ``a*|H| + b``.
"""

from __future__ import annotations

import itertools
import re
from typing import Dict, Iterable, List, Sequence, Tuple

import numpy as np

from .errors import NotAGroupError, SizeGuardError, SpecParseError
from .scalars import Field, Scalar

DEFAULT_MAX_ORDER = 24


class FiniteGroup:
    """A finite group given by its multiplication table.

    The table is validated eagerly: identity, inverses and associativity
    (the latter O(order^3)) are all checked at construction.
    """

    def __init__(self, mul: Sequence[Sequence[int]], labels: Sequence[str] | None = None,
                 name: str | None = None):
        order = len(mul)
        if order == 0:
            raise NotAGroupError("empty multiplication table")
        table: List[List[int]] = []
        for i, row in enumerate(mul):
            row = [int(x) for x in row]
            if len(row) != order:
                raise NotAGroupError(f"row {i} has length {len(row)}, expected {order}")
            for x in row:
                if not 0 <= x < order:
                    raise NotAGroupError(f"entry {x} out of range [0, {order})", (i,))
            table.append(row)

        self.order = order
        self.mul_table = table
        self.id = self._find_identity()
        self.inv_table = self._find_inverses()
        self._check_associativity()

        if labels is None:
            labels = [f"g{i}" for i in range(order)]
            labels[self.id] = "e"
        if len(labels) != order:
            raise NotAGroupError("labels length does not match order")
        self.labels = [str(s) for s in labels]
        self.name = name or f"table-group-{order}"

        self.mul_np = np.array(table, dtype=np.int64)
        self.inv_np = np.array(self.inv_table, dtype=np.int64)
        self._face_map_cache: Dict[Tuple[int, int], np.ndarray] = {}
        self._face_cache_entries = 0
        self._classes: List[List[int]] | None = None

    # -- validation ----------------------------------------------------------

    def _find_identity(self) -> int:
        n = self.order
        for e in range(n):
            if all(self.mul_table[e][a] == a and self.mul_table[a][e] == a for a in range(n)):
                return e
        raise NotAGroupError("no identity element")

    def _find_inverses(self) -> List[int]:
        n, e = self.order, self.id
        inv = [-1] * n
        for a in range(n):
            for b in range(n):
                if self.mul_table[a][b] == e and self.mul_table[b][a] == e:
                    inv[a] = b
                    break
            if inv[a] < 0:
                raise NotAGroupError(f"no inverse for element {a}", (a,))
        if sorted(inv) != list(range(n)) or any(inv[inv[a]] != a for a in range(n)):
            raise NotAGroupError("inverse map is not an involutive bijection")
        return inv

    def _check_associativity(self) -> None:
        n, t = self.order, self.mul_table
        for a in range(n):
            ta = t[a]
            for b in range(n):
                tab = t[ta[b]]
                tb = t[b]
                for c in range(n):
                    if tab[c] != ta[tb[c]]:
                        raise NotAGroupError("associativity fails", (a, b, c))

    # -- basic operations ------------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def inv(self, a: int) -> int:
        return self.inv_table[a]

    def elements(self) -> range:
        return range(self.order)

    def product(self, elems: Iterable[int]) -> int:
        out = self.id
        for a in elems:
            out = self.mul_table[out][a]
        return out

    def conjugacy_classes(self) -> List[List[int]]:
        """Orbits of the conjugation action, each sorted, ordered by minimum."""
        if self._classes is not None:
            return self._classes
        n = self.order
        seen = [False] * n
        classes: List[List[int]] = []
        for a in range(n):
            if seen[a]:
                continue
            orbit = set()
            stack = [a]
            while stack:
                x = stack.pop()
                if x in orbit:
                    continue
                orbit.add(x)
                for g in range(n):
                    y = self.mul_table[self.mul_table[g][x]][self.inv_table[g]]
                    if y not in orbit:
                        stack.append(y)
            cls = sorted(orbit)
            for x in cls:
                seen[x] = True
            classes.append(cls)
        classes.sort(key=lambda c: c[0])
        self._classes = classes
        return classes

    def class_index_of(self) -> List[int]:
        """Element index -> index of its conjugacy class."""
        out = [0] * self.order
        for k, cls in enumerate(self.conjugacy_classes()):
            for x in cls:
                out[x] = k
        return out

    def label(self, a: int) -> str:
        return self.labels[a]

    def label_to_index(self, s: str) -> int:
        s = s.strip()
        try:
            return self.labels.index(s)
        except ValueError:
            pass
        try:
            v = int(s)
        except ValueError:
            raise SpecParseError(f"unknown element label {s!r} for {self.name}") from None
        if not 0 <= v < self.order:
            raise SpecParseError(f"element index {v} out of range for {self.name}")
        return v

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order={self.order})"

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteGroup) and self.mul_table == other.mul_table

    def __hash__(self) -> int:
        return hash((self.order, self.name))

    # -- dense tuple indexing --------------------------------------------------

    def tuple_to_index(self, t: Sequence[int]) -> int:
        """Mixed-radix encoding: slot 0 is the most significant digit."""
        idx = 0
        for g in t:
            idx = idx * self.order + g
        return idx

    def index_to_tuple(self, idx: int, length: int) -> Tuple[int, ...]:
        m = self.order
        out = [0] * length
        for j in range(length - 1, -1, -1):
            idx, out[j] = divmod(idx, m)
        return tuple(out)

    def face_index_map(self, degree: int, i: int) -> np.ndarray:
        """Index map of the i-th cyclic face on all of G^(degree+1).

        Entry ``t`` is the index of ``face_i`` applied to the degree-``degree``
        tuple with index ``t``.  Maps are cached while the cache stays small.
        """
        key = (degree, i)
        cached = self._face_map_cache.get(key)
        if cached is not None:
            return cached
        m = self.order
        n = degree
        size = m ** (n + 1)
        idx = np.arange(size, dtype=np.int64)
        digits = [(idx // (m ** (n - j))) % m for j in range(n + 1)]
        mul_flat = self.mul_np.reshape(-1)
        if i < n:
            merged = mul_flat[digits[i] * m + digits[i + 1]]
            new_digits = digits[:i] + [merged] + digits[i + 2:]
        else:
            merged = mul_flat[digits[n] * m + digits[0]]
            new_digits = [merged] + digits[1:n]
        out = np.zeros(size, dtype=np.int64)
        for d in new_digits:
            out *= m
            out += d
        if self._face_cache_entries + size <= 4_000_000:
            self._face_map_cache[key] = out
            self._face_cache_entries += size
        return out


# -- constructors ---------------------------------------------------------------


def _check_order_cap(order: int, max_order: int | None) -> None:
    cap = DEFAULT_MAX_ORDER if max_order is None else max_order
    if order > cap:
        raise SizeGuardError(f"group order {order} exceeds cap {cap}")


def group_from_table(order: int, mul: Sequence[Sequence[int]],
                     labels: Sequence[str] | None = None,
                     name: str | None = None) -> FiniteGroup:
    """Validate an explicit ``order x order`` table into a group."""
    if len(mul) != order:
        raise NotAGroupError(f"table has {len(mul)} rows, expected {order}")
    return FiniteGroup(mul, labels=labels, name=name)


def trivial() -> FiniteGroup:
    return FiniteGroup([[0]], labels=["e"], name="C1")


def cyclic(n: int, max_order: int | None = None) -> FiniteGroup:
    if n < 1:
        raise SpecParseError("cyclic(n) needs n >= 1")
    _check_order_cap(n, max_order)
    mul = [[(a + b) % n for b in range(n)] for a in range(n)]
    labels = ["e"] + ["x" if i == 1 else f"x^{i}" for i in range(1, n)]
    return FiniteGroup(mul, labels=labels[:n], name=f"C{n}")


def dihedral(n: int, max_order: int | None = None) -> FiniteGroup:
    """Dihedral group of order 2n (symmetries of the n-gon)."""
    if n < 1:
        raise SpecParseError("dihedral(n) needs n >= 1")
    _check_order_cap(2 * n, max_order)

    def compose(a: int, b: int) -> int:
        ra, sa = a % n, a // n
        rb, sb = b % n, b // n
        if sa == 0:
            return ((ra + rb) % n) + n * sb
        return ((ra - rb) % n) + n * (1 - sb)

    mul = [[compose(a, b) for b in range(2 * n)] for a in range(2 * n)]
    labels = []
    for i in range(n):
        labels.append("e" if i == 0 else ("r" if i == 1 else f"r^{i}"))
    for i in range(n):
        labels.append("s" if i == 0 else ("rs" if i == 1 else f"r^{i}s"))
    return FiniteGroup(mul, labels=labels, name=f"D{n}")


def symmetric(n: int, max_order: int | None = None) -> FiniteGroup:
    """Symmetric group on n letters; n <= 6 keeps enumeration sane."""
    if not 1 <= n <= 6:
        raise SizeGuardError("symmetric(n) supports 1 <= n <= 6")
    perms = list(itertools.permutations(range(n)))
    _check_order_cap(len(perms), max_order)
    index = {p: i for i, p in enumerate(perms)}
    mul = [[index[tuple(a[b[i]] for i in range(n))] for b in perms] for a in perms]
    labels = ["".join(str(v) for v in p) for p in perms]
    return FiniteGroup(mul, labels=labels, name=f"S{n}")


def direct_product(g: FiniteGroup, h: FiniteGroup, max_order: int | None = None,
                   name: str | None = None) -> FiniteGroup:
    _check_order_cap(g.order * h.order, max_order)
    nh = h.order
    size = g.order * nh

    def compose(a: int, b: int) -> int:
        a1, a2 = divmod(a, nh)
        b1, b2 = divmod(b, nh)
        return g.mul_table[a1][b1] * nh + h.mul_table[a2][b2]

    mul = [[compose(a, b) for b in range(size)] for a in range(size)]
    labels = [f"({g.labels[a]},{h.labels[b]})" for a in range(g.order) for b in range(h.order)]
    return FiniteGroup(mul, labels=labels, name=name or f"{g.name}x{h.name}")


_SPEC_PART = re.compile(r"^([CDS])(\d+)$", re.IGNORECASE)


def group_from_spec(spec: str, max_order: int | None = None) -> FiniteGroup:
    """Build a group from a specifier like ``C4``, ``D4``, ``S3`` or ``C2xC2``."""
    s = spec.strip().replace(" ", "")
    if not s:
        raise SpecParseError("empty group spec")
    parts = re.split("[xX]", s)
    groups = []
    for part in parts:
        m = _SPEC_PART.match(part)
        if not m:
            raise SpecParseError(f"unrecognized group spec part {part!r}")
        kind, n = m.group(1).upper(), int(m.group(2))
        if kind == "C":
            groups.append(cyclic(n, max_order=max_order))
        elif kind == "D":
            groups.append(dihedral(n, max_order=max_order))
        else:
            groups.append(symmetric(n, max_order=max_order))
    out = groups[0]
    for extra in groups[1:]:
        out = direct_product(out, extra, max_order=max_order)
    if len(groups) > 1:
        out.name = "x".join(g.name for g in groups)
    return out


def load_group_table(path: str) -> FiniteGroup:
    """Read the CSV table format: first line ``order=n``, then n rows of n indices."""
    with open(path, "r", encoding="utf-8") as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    if not lines or not lines[0].lower().startswith("order="):
        raise SpecParseError("group table file must start with 'order=n'")
    try:
        order = int(lines[0].split("=", 1)[1])
    except ValueError:
        raise SpecParseError("bad order line in group table file") from None
    rows = [[int(v) for v in ln.split(",")] for ln in lines[1:]]
    if len(rows) != order:
        raise SpecParseError(f"expected {order} table rows, found {len(rows)}")
    return group_from_table(order, rows, name=f"csv-group-{order}")


def save_group_table(group: FiniteGroup, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"order={group.order}\n")
        for row in group.mul_table:
            fh.write(",".join(str(v) for v in row) + "\n")


# -- group-ring elements ----------------------------------------------------------


class GroupRingElement:
    """Sparse element of k[G]: map from element index to nonzero coefficient."""

    __slots__ = ("group", "field", "coeffs")

    def __init__(self, group: FiniteGroup, field: Field,
                 coeffs: Dict[int, Scalar] | None = None):
        self.group = group
        self.field = field
        self.coeffs: Dict[int, Scalar] = {}
        if coeffs:
            for g, c in coeffs.items():
                c = field.normalize(c)
                if not field.is_zero(c):
                    self.coeffs[g] = c

    @classmethod
    def basis(cls, group: FiniteGroup, field: Field, g: int) -> "GroupRingElement":
        return cls(group, field, {g: field.one})

    def coefficient(self, g: int) -> Scalar:
        return self.coeffs.get(g, self.field.zero)

    def add(self, other: "GroupRingElement") -> "GroupRingElement":
        out = dict(self.coeffs)
        f = self.field
        for g, c in other.coeffs.items():
            s = f.add(out.get(g, 0), c)
            if f.is_zero(s):
                out.pop(g, None)
            else:
                out[g] = s
        return GroupRingElement(self.group, f, out)

    def scale(self, c: Scalar) -> "GroupRingElement":
        f = self.field
        return GroupRingElement(self.group, f, {g: f.mul(v, c) for g, v in self.coeffs.items()})

    def mul(self, other: "GroupRingElement") -> "GroupRingElement":
        f, t = self.field, self.group.mul_table
        out: Dict[int, Scalar] = {}
        for g, c in self.coeffs.items():
            tg = t[g]
            for h, d in other.coeffs.items():
                k = tg[h]
                s = f.add(out.get(k, 0), f.mul(c, d))
                if f.is_zero(s):
                    out.pop(k, None)
                else:
                    out[k] = s
        return GroupRingElement(self.group, f, out)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        return (isinstance(other, GroupRingElement) and self.field == other.field
                and self.coeffs == other.coeffs)

    def __hash__(self):
        raise TypeError("GroupRingElement is unhashable")

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for g in sorted(self.coeffs):
            c = self.coeffs[g]
            lbl = self.group.labels[g]
            parts.append(lbl if c == 1 else f"{self.field.format_scalar(c)}*{lbl}")
        return " + ".join(parts)

    def dense(self) -> List[Scalar]:
        out = [self.field.zero] * self.group.order
        for g, c in self.coeffs.items():
            out[g] = c
        return out


def norm_element(group: FiniteGroup, field: Field) -> GroupRingElement:
    """Sum of all group elements, each with coefficient 1."""
    return GroupRingElement(group, field, {g: field.one for g in group.elements()})
