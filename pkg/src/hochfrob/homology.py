"""Differential assembly and exact (co)homology dimensions.

Five complexes are selectable: the cyclic chain complex, its linear
dual, the bar-cochain complex, and the two subcomplexes (functionals
supported on product-identity tuples, and the norm-radical).

The first three split into blocks indexed by conjugacy classes: every
face map preserves the class of the ordered tuple product (the last
face conjugates it), so differentials never mix blocks.  Ranks are
computed per block - this is what keeps degree-3 tables of order-8
groups affordable - and the block partition is itself validated during
assembly.  Over F_p ranks come from exact int64 elimination; over Q
from the certified integer-rank routine.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from enum import Enum
from typing import Dict, List, Sequence, Tuple

import numpy as np

from .cochains import (BarCochain, Cochain, bar_coboundary, bar_to_cochain,
                       check_entry_budget, coboundary, cochain_to_bar,
                       norm_profile)
from .chains import Chain, boundary, identity_product_tuples
from .errors import SizeGuardError
from .groups import FiniteGroup
from .linalg import (Matrix, integer_kernel_exact, integer_rank_certified,
                     kernel_basis, matrix_rank, modp_kernel, modp_rank)
from .rng import random_cochain, random_bar_cochain, stream_for
from .scalars import Field, Scalar


def kernel_vectors_exact(mat: np.ndarray, fld: Field) -> List[List[int]]:
    """Exact kernel of an integer matrix over the given field, as int rows."""
    if mat.shape[1] == 0:
        return []
    if mat.shape[0] == 0:
        return np.eye(mat.shape[1], dtype=np.int64).tolist()
    if fld.is_rationals:
        return integer_kernel_exact(mat)
    basis, _ = modp_kernel(mat % fld.p, fld.p)
    return basis.tolist()


class Complex(Enum):
    """Which complex a dimension table refers to."""

    CHAIN_B = "chain"
    COCHAIN_BSTAR = "bstar"
    COCHAIN_DELTA = "delta"
    WE_SUB = "we"
    V_SUB = "v"

    @classmethod
    def parse(cls, s: str) -> "Complex":
        key = s.strip().lower()
        for member in cls:
            if member.value == key or member.name.lower() == key:
                return member
        raise ValueError(f"unknown complex selector {s!r}")


@dataclass
class BettiReport:
    group: str
    field: str
    selector: str
    betti: List[Tuple[int, int]]
    matrix_dims: List[Tuple[int, int]]
    ms: List[int] = dc_field(default_factory=list)


# -- block assembly -----------------------------------------------------------------


def _class_of_product(group: FiniteGroup, degree: int) -> np.ndarray:
    """Conjugacy-class id of the ordered product, for every dense tuple index."""
    m = group.order
    size = m ** (degree + 1)
    idx = np.arange(size, dtype=np.int64)
    acc = (idx // (m ** degree)) % m
    for j in range(1, degree + 1):
        dj = (idx // (m ** (degree - j))) % m
        acc = group.mul_np[acc, dj]
    cls = np.array(group.class_index_of(), dtype=np.int64)
    return cls[acc]


def _bar_class_invariant(group: FiniteGroup, degree: int) -> np.ndarray:
    """Class of g0^-1 g1 ... gn over bar coordinates (input, output) flattened."""
    m = group.order
    rows = m ** degree
    idx = np.arange(rows, dtype=np.int64)
    acc = np.full(rows, group.id, dtype=np.int64)
    for j in range(degree):
        dj = (idx // (m ** (degree - 1 - j))) % m
        acc = group.mul_np[acc, dj]
    # flat index = input * m + output g0; invariant uses g0^-1 * product
    out = np.empty(rows * m, dtype=np.int64)
    cls = np.array(group.class_index_of(), dtype=np.int64)
    for g0 in range(m):
        out[idx * m + g0] = cls[group.mul_np[group.inv_table[g0], acc]]
    return out


def _bstar_entries(group: FiniteGroup, degree: int):
    """Sparse triples of the coboundary matrix out of cochain degree `degree`.

    Yields (row_indices, col_indices, sign) per face: rows are tuples of
    degree+1, columns their faces.
    """
    n = degree + 1
    size = group.order ** (n + 1)
    rows = np.arange(size, dtype=np.int64)
    for i in range(n + 1):
        cols = group.face_index_map(n, i)
        yield rows, cols, (1 if i % 2 == 0 else -1)


def _delta_entries(group: FiniteGroup, degree: int):
    """Sparse triples of the bar coboundary out of degree `degree`.

    Coordinates are (input tuple) * m + (output element).  Columns are
    the degree-`degree` basis maps, rows live in degree+1.
    """
    m = group.order
    n = degree
    cols_in = np.arange(m ** n, dtype=np.int64)
    for g0 in range(m):
        col = cols_in * m + g0
        # a * f: row input (a, inputs), output a*g0
        for a in range(m):
            row = ((a * (m ** n) + cols_in) * m) + group.mul_table[a][g0]
            yield row, col, 1
        # merges: replace input slot i by (x, x^-1 g_i)
        sign = -1
        for i in range(1, n + 1):
            post_len = n - i
            post = cols_in % (m ** post_len)
            di = (cols_in // (m ** post_len)) % m
            pre = cols_in // (m ** (post_len + 1))
            for x in range(m):
                y = group.mul_np[group.inv_table[x], di]
                new_input = ((pre * m + x) * m + y) * (m ** post_len) + post
                yield new_input * m + g0, col, sign
            sign = -sign
        # f * a: row input (inputs, a), output g0*a
        end_sign = 1 if (n + 1) % 2 == 0 else -1
        for a in range(m):
            row = ((cols_in * m + a) * m) + group.mul_table[g0][a]
            yield row, col, end_sign


def _block_matrices(group: FiniteGroup, degree: int, selector: Complex,
                    budget: int | None = None) -> List[np.ndarray]:
    """Dense integer blocks of the differential out of `degree`, one per class.

    For WE_SUB only the identity-class block is returned.  Assembly
    asserts that no entry crosses blocks, which re-validates the
    class-invariance of the differential.
    """
    if selector in (Complex.CHAIN_B, Complex.V_SUB):
        raise ValueError("block assembly covers cochain selectors only")
    m = group.order
    n_classes = len(group.conjugacy_classes())
    if selector is Complex.COCHAIN_DELTA:
        col_inv = _bar_class_invariant(group, degree)
        row_inv = _bar_class_invariant(group, degree + 1)
        entries = _delta_entries(group, degree)
        col_dim = m ** (degree + 1)
        row_dim = m ** (degree + 2)
    else:
        col_inv = _class_of_product(group, degree)
        row_inv = _class_of_product(group, degree + 1)
        entries = _bstar_entries(group, degree)
        col_dim = m ** (degree + 1)
        row_dim = m ** (degree + 2)
    check_entry_budget(row_dim, budget)

    if selector is Complex.WE_SUB:
        wanted: Sequence[int] = [group.class_index_of()[group.id]]
    else:
        wanted = range(n_classes)
    col_pos = np.full(col_dim, -1, dtype=np.int64)
    row_pos = np.full(row_dim, -1, dtype=np.int64)
    blocks: List[np.ndarray] = []
    sizes: List[Tuple[int, int]] = []
    for k in wanted:
        csel = np.nonzero(col_inv == k)[0]
        rsel = np.nonzero(row_inv == k)[0]
        col_pos[csel] = np.arange(csel.size)
        row_pos[rsel] = np.arange(rsel.size)
        blocks.append(np.zeros((rsel.size, csel.size), dtype=np.int64))
        sizes.append((rsel.size, csel.size))
    lookup = {k: i for i, k in enumerate(wanted)}

    for rows, cols, sign in entries:
        kcols = col_inv[cols]
        if not np.array_equal(kcols, row_inv[rows]):
            raise AssertionError("differential crossed a class block")
        for k, bi in lookup.items():
            mask = kcols == k
            if not np.any(mask):
                continue
            np.add.at(blocks[bi], (row_pos[rows[mask]], col_pos[cols[mask]]), sign)
    return blocks


def _rank_blocks(blocks: Sequence[np.ndarray], fld: Field) -> int:
    total = 0
    for b in blocks:
        if b.size == 0:
            continue
        if fld.is_rationals:
            total += integer_rank_certified(b)
        else:
            total += modp_rank(b % fld.p, fld.p)
    return total


# -- the V subcomplex --------------------------------------------------------------


def norm_radical_basis_matrix(group: FiniteGroup, degree: int) -> np.ndarray:
    """Echelon basis (rows) of {a : a(h, N, ..., N) = 0 for all h}.

    The norm-evaluation map sends the dual basis element of a tuple to
    the indicator of the tuple's first slot, so the kernel pairs each
    non-leading tuple with the leading tuple of the same first slot.
    """
    m = group.order
    size = m ** (degree + 1)
    if degree == 0:
        return np.zeros((0, m), dtype=np.int64)
    block = m ** degree
    vecs = np.zeros((size - m, size), dtype=np.int64)
    r = 0
    for h in range(m):
        lead = h * block
        for t in range(lead + 1, lead + block):
            vecs[r, t] = 1
            vecs[r, lead] = -1
            r += 1
    return vecs


def _vsub_rank(group: FiniteGroup, fld: Field, degree: int,
               budget: int | None = None) -> Tuple[int, int]:
    """(dim V_degree, rank of the restricted coboundary out of V_degree)."""
    m = group.order
    check_entry_budget(m ** (degree + 2), budget)
    basis = norm_radical_basis_matrix(group, degree)
    dim = basis.shape[0]
    if dim == 0:
        return 0, 0
    images = _apply_bstar_rows(group, basis, degree)
    # Subcomplex closure: images must again kill the norm profile.
    prof = images.reshape(images.shape[0], m, -1).sum(axis=2)
    if fld.is_rationals:
        if np.any(prof):
            raise AssertionError("coboundary left the norm-radical subcomplex")
        rank = integer_rank_certified(images)
    else:
        if np.any(prof % fld.p):
            raise AssertionError("coboundary left the norm-radical subcomplex")
        rank = modp_rank(images % fld.p, fld.p)
    return dim, rank


def _apply_bstar_rows(group: FiniteGroup, vecs: np.ndarray, degree: int) -> np.ndarray:
    """Apply the coboundary to each row vector of cochain coefficients."""
    n = degree + 1
    out = np.zeros((vecs.shape[0], group.order ** (n + 1)), dtype=np.int64)
    for i in range(n + 1):
        fm = group.face_index_map(n, i)
        contrib = vecs[:, fm]
        if i % 2 == 0:
            out += contrib
        else:
            out -= contrib
    return out


# -- public matrix assembly ---------------------------------------------------------


def boundary_matrix(group: FiniteGroup, fld: Field, degree: int, selector: Complex,
                    budget: int | None = None) -> Matrix:
    """Exact dense matrix of the differential out of `degree`.

    Bases: dense tuple order for the full complexes, product-identity
    tuples (tail-major) for WE_SUB, and the echelon norm-radical basis
    for V_SUB.  The chain selector's differential maps degree to
    degree-1; the cochain selectors raise degree by one.
    """
    m = group.order
    if selector is Complex.CHAIN_B:
        check_entry_budget(m ** (degree + 1), budget)
        rows = m ** degree if degree >= 1 else 0
        cols = m ** (degree + 1)
        entries: List[Scalar] = [0] * (rows * cols)
        if degree >= 1:
            for col in range(cols):
                t = group.index_to_tuple(col, degree + 1)
                image = boundary(Chain.basis(group, fld, t))
                for tt, c in image.terms.items():
                    entries[group.tuple_to_index(tt) * cols + col] = c
        return Matrix(rows, cols, entries, fld)

    if selector is Complex.COCHAIN_BSTAR:
        check_entry_budget(m ** (degree + 2), budget)
        rows = m ** (degree + 2)
        cols = m ** (degree + 1)
        mat = np.zeros((rows, cols), dtype=np.int64)
        for r, c, sign in _bstar_entries(group, degree):
            np.add.at(mat, (r, c), sign)
        return Matrix.from_rows(mat.tolist(), fld)

    if selector is Complex.COCHAIN_DELTA:
        check_entry_budget(m ** (degree + 2), budget)
        rows = m ** (degree + 2)
        cols = m ** (degree + 1)
        mat = np.zeros((rows, cols), dtype=np.int64)
        for r, c, sign in _delta_entries(group, degree):
            np.add.at(mat, (r, c), sign)
        return Matrix.from_rows(mat.tolist(), fld)

    if selector is Complex.WE_SUB:
        check_entry_budget(m ** (degree + 2), budget)
        col_tuples = identity_product_tuples(group, degree)
        row_tuples = identity_product_tuples(group, degree + 1)
        row_pos = {t: i for i, t in enumerate(row_tuples)}
        entries = [0] * (len(row_tuples) * len(col_tuples))
        ncols = len(col_tuples)
        for j, t in enumerate(col_tuples):
            alpha = Cochain.dual_basis(group, fld, t)
            img = coboundary(alpha)
            nz = np.nonzero(img.values)[0]
            for flat in nz:
                tt = group.index_to_tuple(int(flat), degree + 2)
                entries[row_pos[tt] * ncols + j] = img.values[flat]
        return Matrix(len(row_tuples), ncols, entries, fld)

    if selector is Complex.V_SUB:
        check_entry_budget(m ** (degree + 2), budget)
        basis = norm_radical_basis_matrix(group, degree)
        target = norm_radical_basis_matrix(group, degree + 1)
        images = _apply_bstar_rows(group, basis, degree)
        # Echelon pattern: coordinates against `target` can be read off the
        # non-leading positions, then verified by reconstruction.
        block = m ** (degree + 1)
        free_cols = [t for h in range(m) for t in range(h * block + 1, (h + 1) * block)]
        coords = images[:, free_cols]
        recon = coords @ target
        if not np.array_equal(recon, images):
            raise AssertionError("image not inside the norm-radical subcomplex")
        return Matrix.from_rows(coords.T.tolist(), fld)

    raise ValueError(f"unhandled selector {selector}")


# -- dimensions ----------------------------------------------------------------------


def _out_rank(group: FiniteGroup, fld: Field, degree: int, selector: Complex,
              budget: int | None = None) -> int:
    """Rank of the differential leaving `degree` (0 for negative degree)."""
    if degree < 0:
        return 0
    if selector is Complex.CHAIN_B:
        if degree == 0:
            return 0
        # rank b_n = rank of its transpose, assembled chain-side per block
        blocks = _block_matrices(group, degree - 1, Complex.COCHAIN_BSTAR, budget=budget)
        return _rank_blocks([b.T for b in blocks], fld)
    if selector in (Complex.COCHAIN_BSTAR, Complex.COCHAIN_DELTA, Complex.WE_SUB):
        blocks = _block_matrices(group, degree, selector, budget=budget)
        return _rank_blocks(blocks, fld)
    if selector is Complex.V_SUB:
        return _vsub_rank(group, fld, degree, budget=budget)[1]
    raise ValueError(f"unhandled selector {selector}")


def space_dimension(group: FiniteGroup, degree: int, selector: Complex) -> int:
    m = group.order
    if selector in (Complex.CHAIN_B, Complex.COCHAIN_BSTAR, Complex.COCHAIN_DELTA):
        return m ** (degree + 1)
    if selector is Complex.WE_SUB:
        return m ** degree
    if selector is Complex.V_SUB:
        return m ** (degree + 1) - m if degree >= 1 else 0
    raise ValueError(f"unhandled selector {selector}")


def betti(group: FiniteGroup, fld: Field, degree: int, selector: Complex,
          budget: int | None = None) -> int:
    """Exact dimension of the degree-n (co)homology of the chosen complex."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    dim = space_dimension(group, degree, selector)
    if selector is Complex.CHAIN_B:
        r_out = _out_rank(group, fld, degree, selector, budget=budget)
        r_in = _out_rank(group, fld, degree + 1, selector, budget=budget)
        return dim - r_out - r_in
    r_out = _out_rank(group, fld, degree, selector, budget=budget)
    r_in = _out_rank(group, fld, degree - 1, selector, budget=budget)
    return dim - r_out - r_in


def betti_table(group: FiniteGroup, fld: Field, max_degree: int, selector: Complex,
                budget: int | None = None) -> BettiReport:
    """Dimensions for degrees 0..max_degree, reusing each rank once."""
    import time

    dims: List[Tuple[int, int]] = []
    sizes: List[Tuple[int, int]] = []
    times: List[int] = []
    ranks: Dict[int, int] = {-1: 0}
    for n in range(max_degree + 1):
        t0 = time.monotonic()
        if selector is Complex.CHAIN_B:
            for k in (n, n + 1):
                if k not in ranks:
                    ranks[k] = _out_rank(group, fld, k, selector, budget=budget)
            value = space_dimension(group, n, selector) - ranks[n] - ranks[n + 1]
            sizes.append((space_dimension(group, n - 1, selector) if n else 0,
                          space_dimension(group, n, selector)))
        else:
            for k in (n - 1, n):
                if k not in ranks:
                    ranks[k] = _out_rank(group, fld, k, selector, budget=budget)
            value = space_dimension(group, n, selector) - ranks[n] - ranks[n - 1]
            sizes.append((space_dimension(group, n + 1, selector),
                          space_dimension(group, n, selector)))
        times.append(int((time.monotonic() - t0) * 1000))
        dims.append((n, value))
    return BettiReport(group.name, fld.spec(), selector.value, dims, sizes, times)


# -- representatives ----------------------------------------------------------------


def cocycle_representatives(group: FiniteGroup, fld: Field, degree: int,
                            selector: Complex, budget: int | None = None) -> List:
    """Cocycles whose classes form a basis of the degree-n (co)homology.

    Kernel vectors (echelon order, lowest-index pivots) are selected
    greedily against the image of the adjacent differential; selection
    is deterministic and the count always equals the betti number.
    """
    out_m = boundary_matrix(group, fld, degree, selector, budget=budget)
    if selector is Complex.CHAIN_B:
        in_m = boundary_matrix(group, fld, degree + 1, selector, budget=budget)
    else:
        in_m = (boundary_matrix(group, fld, degree - 1, selector, budget=budget)
                if degree >= 1 else Matrix.zeros(out_m.cols, 0, fld))
    kernel = kernel_basis(out_m)
    image_cols = [[in_m.at(i, j) for i in range(in_m.rows)] for j in range(in_m.cols)]

    reps: List[List[Scalar]] = []
    span = Matrix.from_rows(image_cols, fld) if image_cols else Matrix.zeros(0, out_m.cols, fld)
    base_rank = matrix_rank(span)
    current = list(image_cols)
    rank_now = base_rank
    for vec in kernel:
        trial = Matrix.from_rows(current + [vec], fld)
        r = matrix_rank(trial)
        if r > rank_now:
            reps.append(vec)
            current.append(vec)
            rank_now = r
    return [_vector_to_element(group, fld, degree, selector, v) for v in reps]


def _vector_to_element(group: FiniteGroup, fld: Field, degree: int,
                       selector: Complex, vec: List[Scalar]):
    if selector is Complex.CHAIN_B:
        terms = {group.index_to_tuple(i, degree + 1): c
                 for i, c in enumerate(vec) if c}
        return Chain(group, fld, degree, terms)
    if selector in (Complex.COCHAIN_BSTAR,):
        return Cochain(group, fld, degree, vec)
    if selector is Complex.COCHAIN_DELTA:
        return BarCochain(group, fld, degree, vec)
    if selector is Complex.WE_SUB:
        dense = Cochain.zero(group, fld, degree)
        for t, c in zip(identity_product_tuples(group, degree), vec):
            if c:
                dense.values = dense.values.astype(object) if not isinstance(c, int) \
                    else dense.values
                dense.values[group.tuple_to_index(t)] = c
        return dense
    if selector is Complex.V_SUB:
        basis = norm_radical_basis_matrix(group, degree)
        acc = [fld.zero] * (group.order ** (degree + 1))
        for coeff, row in zip(vec, basis):
            if coeff:
                for j, b in enumerate(row.tolist()):
                    if b:
                        acc[j] = fld.add(acc[j], fld.mul(coeff, b))
        return Cochain(group, fld, degree, acc)
    raise ValueError(f"unhandled selector {selector}")


def delta_matches_conjugated_coboundary(group: FiniteGroup, degree: int,
                                         budget: int | None = None) -> bool:
    """Entrywise check that the bar coboundary out of `degree` equals the
    comparison-map conjugate of the dual coboundary.

    Both differentials are expanded as sparse integer triples; the bar
    side is translated along the generator bijection
    (g0; g1..gn) -> (g0^-1, g1..gn) and the canonicalized triple lists
    must agree exactly.  Combined with the squared-boundary sweeps this
    extends the delta-squared law to every basis element.
    """
    m = group.order
    n = degree
    check_entry_budget(m ** (n + 2), budget)

    def bar_to_dual(flat: np.ndarray, deg: int) -> np.ndarray:
        g0 = flat % m
        inp = flat // m
        return group.inv_np[g0] * (m ** deg) + inp

    def canonical(triples) -> Tuple[np.ndarray, np.ndarray]:
        ncols = m ** (n + 1)
        keys = []
        vals = []
        for rows, cols, sign in triples:
            keys.append(rows * ncols + cols)
            vals.append(np.full(rows.shape, sign, dtype=np.int64))
        key = np.concatenate(keys)
        val = np.concatenate(vals)
        order = np.argsort(key, kind="stable")
        key, val = key[order], val[order]
        cuts = np.concatenate(([0], np.nonzero(np.diff(key))[0] + 1))
        sums = np.add.reduceat(val, cuts)
        keep = sums != 0
        return key[cuts][keep], sums[keep]

    delta_triples = [(bar_to_dual(np.asarray(rows), n + 1),
                      bar_to_dual(np.asarray(cols), n), sign)
                     for rows, cols, sign in _delta_entries(group, n)]
    bstar_triples = list(_bstar_entries(group, n))
    k1, v1 = canonical(delta_triples)
    k2, v2 = canonical(bstar_triples)
    return np.array_equal(k1, k2) and np.array_equal(v1, v2)


_COCYCLE_CACHE: Dict[Tuple[int, str, str, int], List[List[int]]] = {}


def coboundary_kernel_vectors(group: FiniteGroup, fld: Field, degree: int,
                              budget: int | None = None) -> List[List[int]]:
    """Exact kernel of the coboundary out of cochain degree n (cached)."""
    key = (id(group), group.name, fld.spec(), degree)
    cached = _COCYCLE_CACHE.get(key)
    if cached is not None:
        return cached
    m = group.order
    check_entry_budget(m ** (degree + 2), budget)
    mat = np.zeros((m ** (degree + 2), m ** (degree + 1)), dtype=np.int64)
    for r, c, sign in _bstar_entries(group, degree):
        np.add.at(mat, (r, c), sign)
    vecs = kernel_vectors_exact(mat, fld)
    _COCYCLE_CACHE[key] = vecs
    return vecs


def random_cocycle(group: FiniteGroup, fld: Field, degree: int, seed: int,
                   budget: int | None = None) -> Cochain:
    """Deterministic random element of ker(coboundary) in the given degree."""
    vecs = coboundary_kernel_vectors(group, fld, degree, budget=budget)
    size = group.order ** (degree + 1)
    acc = np.zeros(size, dtype=np.int64)
    stream = stream_for(seed, group.name, fld.spec(), str(degree), "cocycle")
    for vec in vecs:
        c = (int(next(stream) % 5) - 2) if fld.is_rationals else int(next(stream) % fld.p)
        if c:
            acc = acc + c * np.array(vec, dtype=np.int64)
    return Cochain(group, fld, degree, acc)


# -- comparison-map verification ------------------------------------------------------


def verify_phi_iso(group: FiniteGroup, fld: Field, max_degree: int,
                   budget: int | None = None, seed: int = 2024) -> dict:
    """Round-trip and dual-dimension report for the comparison maps.

    Per degree <= max_degree: both round trips and the square
    delta-vs-coboundary identity on a deterministic random cochain, and
    equality of the two cohomology dimensions.
    """
    dual_dims = betti_table(group, fld, max_degree, Complex.COCHAIN_BSTAR, budget=budget)
    bar_dims = betti_table(group, fld, max_degree, Complex.COCHAIN_DELTA, budget=budget)
    degrees = []
    all_ok = True
    for n in range(max_degree + 1):
        f = random_bar_cochain(group, fld, n, seed=seed + n, budget=budget)
        a = random_cochain(group, fld, n, seed=seed + 17 * n, budget=budget)
        round_trip = (cochain_to_bar(bar_to_cochain(f)) == f
                      and bar_to_cochain(cochain_to_bar(a)) == a)
        chain_map = (bar_to_cochain(bar_coboundary(f)) == coboundary(bar_to_cochain(f))
                     and bar_coboundary(cochain_to_bar(a)) == cochain_to_bar(coboundary(a)))
        d_bstar = dual_dims.betti[n][1]
        d_delta = bar_dims.betti[n][1]
        ok = round_trip and chain_map and d_bstar == d_delta
        all_ok = all_ok and ok
        degrees.append({
            "degree": n,
            "round_trip_ok": round_trip,
            "cochain_map_ok": chain_map,
            "dual_dim": d_bstar,
            "bar_dim": d_delta,
            "dims_equal": d_bstar == d_delta,
        })
    return {"group": group.name, "field": fld.spec(), "max_degree": max_degree,
            "passed": all_ok, "degrees": degrees}


# -- the pairing radical ----------------------------------------------------------


def radical_basis(group: FiniteGroup, fld: Field, degree: int,
                  budget: int | None = None) -> Tuple[List[Cochain], dict]:
    """Basis of {a in W_degree : <a, b> = 0 for all degree-0 b}.

    Returns the basis and a report comparing its span with the
    norm-radical subspace V (claimed equal; verified per run).
    """
    from .cochains import norm_pairing

    m = group.order
    size = m ** (degree + 1)
    check_entry_budget(size, budget)
    gram_rows = []
    for j in range(m):
        beta = Cochain.dual_basis(group, fld, (j,))
        row = []
        for t in range(size):
            alpha = Cochain.dual_basis(group, fld, group.index_to_tuple(t, degree + 1))
            row.append(norm_pairing(alpha, beta))
        gram_rows.append(row)
    radical = kernel_vectors_exact(np.array(gram_rows, dtype=np.int64), fld)

    v_basis = norm_radical_basis_matrix(group, degree)
    rad_np = (np.array(radical, dtype=np.int64) if radical
              else np.zeros((0, size), dtype=np.int64))

    def _rank(arr: np.ndarray) -> int:
        if arr.size == 0:
            return 0
        if fld.is_rationals:
            return integer_rank_certified(arr)
        return modp_rank(arr % fld.p, fld.p)

    rad_rank = _rank(rad_np)
    v_rank = _rank(v_basis)
    stack_rank = _rank(np.vstack([rad_np, v_basis]))
    equal = rad_rank == v_rank == stack_rank
    report = {
        "group": group.name, "field": fld.spec(), "degree": degree,
        "radical_dim": len(radical), "norm_radical_dim": int(v_basis.shape[0]),
        "spans_equal": bool(equal),
    }
    cochains = [Cochain(group, fld, degree, v) for v in radical]
    return cochains, report
