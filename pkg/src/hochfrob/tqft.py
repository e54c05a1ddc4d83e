"""The two-dimensional TQFT carried by degree-0 cocycles.

The circle is assigned H = ker(coboundary on degree-0 functionals),
which is exactly the space of class functions.  The product is
convolution, the counit evaluates at the identity, the pairing sums
a(h) b(h^-1), and the coproduct is the pairing-dual of the product.

Closed-surface values follow the surface-count normalization: genus g
>= 1 evaluates |G|^(g-1) * counit(handle^g), which times |G| counts
homomorphisms of the genus-g surface group into G; the sphere is pinned
to counit(unit) = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .cochains import Cochain, coboundary, convolution_cup, convolution_unit
from .errors import (ArityMismatchError, DegeneratePairingError, SizeGuardError,
                     SpecParseError)
from .groups import FiniteGroup
from .scalars import Field, Scalar


@dataclass
class FrobeniusData:
    """Frobenius-algebra data of the class-function convolution algebra.

    basis[i] is the indicator functional of the i-th conjugacy class;
    structure[i][j][k] expands basis_i * basis_j over the basis; P is
    the pairing matrix; Pinv its inverse; comul[k][i][j] expands the
    coproduct of basis_k.
    """

    group: FiniteGroup
    field: Field
    basis: List[Cochain]
    structure: List[List[List[Scalar]]]
    pairing_matrix: List[List[Scalar]]
    pairing_inverse: List[List[Scalar]]
    comul_tensor: List[List[List[Scalar]]]
    unit_index: int

    @property
    def dim(self) -> int:
        return len(self.basis)

    def counit_coords(self, coords: Sequence[Scalar]) -> Scalar:
        """Evaluate at the identity element: picks the identity-class coordinate."""
        return self.field.normalize(coords[self.unit_index])

    def mul_coords(self, a: Sequence[Scalar], b: Sequence[Scalar]) -> List[Scalar]:
        f = self.field
        out = [f.zero] * self.dim
        for i, ca in enumerate(a):
            if f.is_zero(ca):
                continue
            for j, cb in enumerate(b):
                if f.is_zero(cb):
                    continue
                cab = f.mul(ca, cb)
                for k, s in enumerate(self.structure[i][j]):
                    if not f.is_zero(s):
                        out[k] = f.add(out[k], f.mul(cab, s))
        return out

    def pairing_coords(self, a: Sequence[Scalar], b: Sequence[Scalar]) -> Scalar:
        f = self.field
        acc = f.zero
        for i, ca in enumerate(a):
            if f.is_zero(ca):
                continue
            for j, cb in enumerate(b):
                if not f.is_zero(cb):
                    acc = f.add(acc, f.mul(f.mul(ca, cb), self.pairing_matrix[i][j]))
        return acc

    def to_cochain(self, coords: Sequence[Scalar]) -> Cochain:
        out = Cochain.zero(self.group, self.field, 0)
        acc = out
        for c, b in zip(coords, self.basis):
            if not self.field.is_zero(c):
                acc = acc.add(b.scale(c))
        return acc


def _invert_matrix(rows: List[List[Scalar]], field: Field) -> List[List[Scalar]]:
    """Gauss-Jordan inverse; raises DegeneratePairingError when singular."""
    n = len(rows)
    aug = [[field.normalize(x) for x in row] + [field.one if i == j else field.zero
                                                for j in range(n)]
           for i, row in enumerate(rows)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if not field.is_zero(aug[r][col]):
                piv = r
                break
        if piv is None:
            raise DegeneratePairingError(
                f"pairing matrix is singular over {field.spec()}")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = field.inv(aug[col][col])
        aug[col] = [field.mul(x, inv) for x in aug[col]]
        for r in range(n):
            if r != col and not field.is_zero(aug[r][col]):
                c = aug[r][col]
                aug[r] = [field.sub(x, field.mul(c, y))
                          for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def frobenius_data(group: FiniteGroup, field: Field) -> FrobeniusData:
    """Build and validate the degree-0 Frobenius algebra.

    Raises DegeneratePairingError when the pairing matrix is singular,
    which happens exactly when the characteristic divides a class size.
    """
    classes = group.conjugacy_classes()
    class_of = group.class_index_of()
    dim = len(classes)

    basis = []
    for cls in classes:
        vec = [0] * group.order
        for g in cls:
            vec[g] = 1
        basis.append(Cochain(group, field, 0, vec))
    for b in basis:
        if not coboundary(b).is_zero():
            raise AssertionError("class indicator is not a degree-0 cocycle")

    unit_index = class_of[group.id]
    reps = [cls[0] for cls in classes]
    structure: List[List[List[Scalar]]] = []
    for i in range(dim):
        row = []
        for j in range(dim):
            prod = convolution_cup(basis[i], basis[j])
            coords = [prod((r,)) for r in reps]
            expanded = frobenius_expand_check(prod, coords, classes, group, field)
            row.append(expanded)
        structure.append(row)

    inv_class = [class_of[group.inv_table[cls[0]]] for cls in classes]
    P = [[field.from_int(len(classes[i])) if inv_class[i] == j else field.zero
          for j in range(dim)] for i in range(dim)]
    Pinv = _invert_matrix(P, field)

    comul = []
    for k in range(dim):
        mat = [[field.zero] * dim for _ in range(dim)]
        for j in range(dim):
            for i, s in enumerate(structure[k][j]):
                if field.is_zero(s):
                    continue
                for l in range(dim):
                    c = field.mul(s, Pinv[j][l])
                    if not field.is_zero(c):
                        mat[i][l] = field.add(mat[i][l], c)
        comul.append(mat)

    data = FrobeniusData(group, field, basis, structure, P, Pinv, comul, unit_index)
    _validate_frobenius(data)
    return data


def frobenius_expand_check(prod: Cochain, coords: List[Scalar],
                           classes: List[List[int]], group: FiniteGroup,
                           field: Field) -> List[Scalar]:
    """Check a degree-0 product is a class function and return its coordinates."""
    for k, cls in enumerate(classes):
        for g in cls:
            if prod((g,)) != coords[k]:
                raise AssertionError("convolution left the class-function algebra")
    return [field.normalize(c) for c in coords]


def _validate_frobenius(data: FrobeniusData) -> None:
    f = data.field
    dim = data.dim
    eye = [[f.one if i == j else f.zero for j in range(dim)] for i in range(dim)]
    unit = eye[data.unit_index]
    for i in range(dim):
        if data.mul_coords(unit, eye[i]) != eye[i] or data.mul_coords(eye[i], unit) != eye[i]:
            raise AssertionError("unit law fails")
        for j in range(dim):
            ab = data.mul_coords(eye[i], eye[j])
            if ab != data.mul_coords(eye[j], eye[i]):
                raise AssertionError("product not commutative")
            if data.counit_coords(ab) != data.pairing_coords(eye[i], eye[j]):
                raise AssertionError("counit/pairing compatibility fails")
            for k in range(dim):
                lhs = data.pairing_coords(ab, eye[k])
                rhs = data.pairing_coords(eye[i], data.mul_coords(eye[j], eye[k]))
                if lhs != rhs:
                    raise AssertionError("Frobenius associativity fails")


# -- cobordism words ---------------------------------------------------------------


@dataclass
class Move:
    kind: str
    position: int = 0


@dataclass
class CobordismWord:
    """A well-typed sequence of elementary cobordism moves."""

    moves: List[Move]
    inputs: int
    outputs: int

    ARITIES = {"unit": (0, 1), "counit": (1, 0), "mul": (2, 1),
               "comul": (1, 2), "swap": (2, 2), "id": (1, 1)}

    @classmethod
    def parse(cls, text: str, inputs: int = 0) -> "CobordismWord":
        tokens = text.replace(",", " ").split()
        moves: List[Move] = []
        i = 0
        while i < len(tokens):
            kind = tokens[i].lower()
            if kind not in cls.ARITIES:
                raise SpecParseError(f"unknown cobordism move {tokens[i]!r}")
            pos = 0
            if i + 1 < len(tokens):
                try:
                    pos = int(tokens[i + 1])
                except ValueError:
                    pos = -1
                if pos >= 0 and tokens[i + 1].lstrip("+-").isdigit():
                    i += 1
                else:
                    pos = 0
            moves.append(Move(kind, pos))
            i += 1
        word = cls(moves, inputs, inputs)
        word.outputs = word._typecheck()
        return word

    def _typecheck(self) -> int:
        circles = self.inputs
        for mv in self.moves:
            need, make = self.ARITIES[mv.kind]
            if mv.position < 0 or mv.position + need > circles:
                raise ArityMismatchError(
                    f"move {mv.kind} at {mv.position} needs {need} circles, have {circles}")
            circles += make - need
        return circles


def evaluate_cobordism(data: FrobeniusData, word: CobordismWord,
                       inputs: Sequence[Sequence[Scalar]] = ()):
    """Compose the linear maps of a cobordism word.

    The state is an element of H^(x k) stored sparsely over basis-index
    tuples.  Returns a scalar for 0 output circles, the coordinate
    tensor otherwise.
    """
    f = data.field
    if len(inputs) != word.inputs:
        raise ArityMismatchError(f"word expects {word.inputs} inputs, got {len(inputs)}")
    state = {(): f.one}
    for vec in inputs:
        if len(vec) != data.dim:
            raise ArityMismatchError("input vector has wrong dimension")
        new = {}
        for key, c in state.items():
            for i, ci in enumerate(vec):
                if not f.is_zero(ci):
                    new[key + (i,)] = f.add(new.get(key + (i,), f.zero), f.mul(c, ci))
        state = new

    for mv in word.moves:
        pos = mv.position
        new: dict = {}

        def put(key, c):
            if f.is_zero(c):
                return
            s = f.add(new.get(key, f.zero), c)
            if f.is_zero(s):
                new.pop(key, None)
            else:
                new[key] = s

        if mv.kind == "id":
            new = state
        elif mv.kind == "unit":
            for key, c in state.items():
                put(key[:pos] + (data.unit_index,) + key[pos:], c)
        elif mv.kind == "counit":
            for key, c in state.items():
                if key[pos] == data.unit_index:
                    put(key[:pos] + key[pos + 1:], c)
        elif mv.kind == "swap":
            for key, c in state.items():
                swapped = list(key)
                swapped[pos], swapped[pos + 1] = swapped[pos + 1], swapped[pos]
                put(tuple(swapped), c)
        elif mv.kind == "mul":
            for key, c in state.items():
                i, j = key[pos], key[pos + 1]
                for k, s in enumerate(data.structure[i][j]):
                    put(key[:pos] + (k,) + key[pos + 2:], f.mul(c, s))
        elif mv.kind == "comul":
            for key, c in state.items():
                k = key[pos]
                for i in range(data.dim):
                    for l in range(data.dim):
                        s = data.comul_tensor[k][i][l]
                        if not f.is_zero(s):
                            put(key[:pos] + (i, l) + key[pos + 1:], f.mul(c, s))
        state = new

    if word.outputs == 0:
        return state.get((), f.zero)
    return state


def handle_element(data: FrobeniusData) -> List[Scalar]:
    """Coordinates of sum_i basis_i * dual_i (product of coproduct of the unit)."""
    f = data.field
    out = [f.zero] * data.dim
    eye = [[f.one if i == j else f.zero for j in range(data.dim)] for i in range(data.dim)]
    for i in range(data.dim):
        dual = [data.pairing_inverse[i][l] for l in range(data.dim)]
        prod = data.mul_coords(eye[i], dual)
        out = [f.add(a, b) for a, b in zip(out, prod)]
    return out


def surface_invariant(data: FrobeniusData, genus: int) -> Scalar:
    """Closed-surface value: counit(unit) for the sphere, else the
    surface-count normalization |G|^(g-1) * counit(handle^g)."""
    if genus < 0:
        raise ValueError("genus must be >= 0")
    f = data.field
    unit = [f.one if i == data.unit_index else f.zero for i in range(data.dim)]
    if genus == 0:
        return data.counit_coords(unit)
    h = handle_element(data)
    acc = unit
    for _ in range(genus):
        acc = data.mul_coords(acc, h)
    scale = f.from_int(data.group.order ** (genus - 1))
    return f.normalize(f.mul(scale, data.counit_coords(acc)))


def hom_count_oracle(group: FiniteGroup, genus: int, budget: int | None = None) -> int:
    """Count 2g-tuples whose interleaved commutator product is the identity."""
    if genus < 0:
        raise ValueError("genus must be >= 0")
    if genus == 0:
        return 1
    cap = 10 ** 7 if budget is None else budget
    if group.order ** (2 * genus) > cap:
        raise SizeGuardError(f"|G|^(2g) = {group.order ** (2 * genus)} exceeds budget {cap}")
    mul = group.mul_table
    inv = group.inv_table

    def commutator(a: int, b: int) -> int:
        return mul[mul[mul[a][b]][inv[a]]][inv[b]]

    import itertools

    count = 0
    e = group.id
    elements = range(group.order)
    for tup in itertools.product(elements, repeat=2 * genus):
        acc = e
        for i in range(genus):
            acc = mul[acc][commutator(tup[2 * i], tup[2 * i + 1])]
        if acc == e:
            count += 1
    return count
