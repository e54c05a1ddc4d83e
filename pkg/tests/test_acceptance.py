"""Acceptance criteria, one test per criterion, exact tolerances throughout.

Suite: C2, C3, C4, C2xC2, S3, D4 over Q, F_2, F_3.  Every check is
exact (integer/rational arithmetic); there are no numeric tolerances to
tune.  Each test prints one summary line; run with -s (or -rA) to see
them inline.

Where a law is quantified over every basis element in degrees beyond
direct dense reach, the test decomposes it exactly rather than
sampling: the dual coboundary evaluates functionals along the boundary,
so its squared law on degree <= 4 is the transpose of the squared
boundary on basis tuples of degree <= 6 (swept completely with integer
coefficients that are field-independent), and the bar coboundary is the
entrywise comparison-map conjugate of the dual one (checked per entry).
Direct double-coboundary checks on random cochains in every degree <= 4
exercise the public operations themselves on top of the sweeps.
"""

import json
import time

import numpy as np
import pytest

from hochfrob import (Chain, CobordismWord, Complex, DegeneratePairingError,
                      Field, aw_coproduct, apply_counit_left, bar_coboundary,
                      bar_to_cochain, betti, betti_table, boundary,
                      circle_product, coboundary, cochain_to_bar,
                      convolution_coproduct, convolution_cup,
                      evaluate_cobordism, frobenius_data, handle_element,
                      has_identity_product, homotopy_commutator_defect,
                      homotopy_signs, hom_count_oracle, identity_product_tuples,
                      in_norm_radical, is_identity_supported, kernel_basis,
                      norm_pairing, radical_basis, random_cochain,
                      random_cocycle, random_identity_supported_cochain,
                      simplicial_cup, simplicial_cup_one, surface_invariant,
                      tensor_boundary, verify_phi_iso)
from hochfrob.chains import boundary_squared_basis_sweep
from hochfrob.cochains import restrict_to_identity_support
from hochfrob.homology import delta_matches_conjugated_coboundary
from hochfrob.rng import random_bar_cochain, stream_for
from hochfrob.verify import RunConfig, run_verification

SUITE = ("C2", "C3", "C4", "C2xC2", "S3", "D4")
FIELDS = ("Q", "F2", "F3")
WIDE_BUDGET = 20_000_000

# Pinned homotopy sign fixtures for the three required degree pairs.
HOMOTOPY_SIGN_FIXTURES = {(1, 1): (-1, 1, 1), (1, 2): (-1, -1, 1), (2, 2): (-1, -1, 1)}


def _cells(groups, fields):
    for gname in SUITE:
        for fname in FIELDS:
            yield gname, groups[gname], fields[fname]


def _report(num: int, title: str, failures, started: float) -> None:
    status = "PASS" if not failures else "FAIL"
    elapsed = time.time() - started
    print(f"[{status}] criterion {num} ({title}) in {elapsed:.1f}s")
    assert not failures, f"criterion {num}: {failures[:5]}"


def test_criterion_1_complex_laws(groups, fields):
    started = time.time()
    failures = []
    for gname in SUITE:
        g = groups[gname]
        # Complete integer sweeps: degrees 2..4 directly pin the chain law on
        # every basis tuple; degrees 5..6 are the transpose coverage of the
        # dual law out of degrees 3..4.
        for degree in range(2, 7):
            if not boundary_squared_basis_sweep(g, degree):
                failures.append(("bb-sweep", gname, degree))
        # The bar coboundary agrees entrywise with the conjugated dual one.
        for degree in range(0, 5):
            if g.order ** (degree + 2) > WIDE_BUDGET:
                failures.append(("delta-conjugate-budget", gname, degree))
            elif not delta_matches_conjugated_coboundary(g, degree, budget=WIDE_BUDGET):
                failures.append(("delta-conjugate", gname, degree))
    for gname, g, fld in _cells(groups, fields):
        stream = stream_for(41, gname, fld.spec(), "c1")
        # In-field boundary checks on sampled basis tuples, degrees 2..4.
        for degree in (2, 3, 4):
            for _ in range(20):
                t = tuple(next(stream) % g.order for _ in range(degree + 1))
                if not boundary(boundary(Chain.basis(g, fld, t))).is_zero():
                    failures.append(("bb", gname, fld.spec(), t))
        # Double coboundaries on random cochains in every degree <= 4.
        for degree in range(0, 5):
            trials = 1 if g.order ** (degree + 3) > 10 ** 6 else 3
            for k in range(trials):
                a = random_cochain(g, fld, degree, seed=900 + k, budget=WIDE_BUDGET)
                if not coboundary(coboundary(a, budget=WIDE_BUDGET),
                                  budget=WIDE_BUDGET).is_zero():
                    failures.append(("bstar2", gname, fld.spec(), degree, k))
                f = random_bar_cochain(g, fld, degree, seed=950 + k, budget=WIDE_BUDGET)
                if not bar_coboundary(bar_coboundary(f, budget=WIDE_BUDGET),
                                      budget=WIDE_BUDGET).is_zero():
                    failures.append(("delta2", gname, fld.spec(), degree, k))
    _report(1, "b, b*, delta all square to zero through degree 4", failures, started)


def test_criterion_2_comparison_maps(groups, fields):
    started = time.time()
    failures = []
    for gname, g, fld in _cells(groups, fields):
        for degree in range(0, 5):
            a = random_cochain(g, fld, degree, seed=71 + degree)
            f = random_bar_cochain(g, fld, degree, seed=72 + degree)
            if cochain_to_bar(bar_to_cochain(f)) != f:
                failures.append(("psi-phi", gname, fld.spec(), degree))
            if bar_to_cochain(cochain_to_bar(a)) != a:
                failures.append(("phi-psi", gname, fld.spec(), degree))
            if bar_to_cochain(bar_coboundary(f)) != coboundary(bar_to_cochain(f)):
                failures.append(("phi-delta", gname, fld.spec(), degree))
            if bar_coboundary(cochain_to_bar(a)) != cochain_to_bar(coboundary(a)):
                failures.append(("psi-bstar", gname, fld.spec(), degree))
        report = verify_phi_iso(g, fld, 3, budget=WIDE_BUDGET)
        if not report["passed"]:
            failures.append(("phi-iso", gname, fld.spec(), report["degrees"]))
    _report(2, "comparison maps: round trips and equal dual dimensions", failures, started)


def test_criterion_3_coproduct_theorem(groups, fields):
    started = time.time()
    failures = []
    rationals = fields["Q"]
    for gname in SUITE:
        g = groups[gname]
        # Every basis tuple, degrees <= 3, integer coefficients (reduce to
        # every field); plus per-field samples below.
        for degree in range(0, 4):
            for idx in range(g.order ** (degree + 1)):
                t = g.index_to_tuple(idx, degree + 1)
                sigma = Chain.basis(g, rationals, t)
                ts = convolution_coproduct(sigma)
                if degree >= 1 and convolution_coproduct(boundary(sigma)) != tensor_boundary(ts):
                    failures.append(("chain-map", gname, t))
                if apply_counit_left(ts) != sigma:
                    failures.append(("counit", gname, t))
    for gname, g, fld in _cells(groups, fields):
        stream = stream_for(43, gname, fld.spec(), "c3")
        for _ in range(10):
            degree = 1 + next(stream) % 3
            t = tuple(next(stream) % g.order for _ in range(degree + 1))
            sigma = Chain.basis(g, fld, t)
            if convolution_coproduct(boundary(sigma)) != tensor_boundary(convolution_coproduct(sigma)):
                failures.append(("chain-map-field", gname, fld.spec(), t))
        # duality: >= 200 random (alpha, beta, sigma) per group and field
        count = 0
        while count < 200:
            p = next(stream) % 3
            q = next(stream) % 3
            a = random_cochain(g, fld, p, seed=next(stream) % (1 << 32))
            b = random_cochain(g, fld, q, seed=next(stream) % (1 << 32))
            t = tuple(next(stream) % g.order for _ in range(p + q + 1))
            prod = convolution_cup(a, b)
            tens = convolution_coproduct(Chain.basis(g, fld, t))
            val = fld.zero
            for (l, r), c in tens.terms.items():
                if len(l) - 1 == p and len(r) - 1 == q:
                    val = fld.add(val, fld.mul(c, fld.mul(a(l), b(r))))
            if prod(t) != val:
                failures.append(("duality", gname, fld.spec(), (p, q), t))
            count += 1
    _report(3, "coproduct is a chain map with counit and product duality", failures, started)


def test_criterion_4_frobenius_suite(groups, fields):
    started = time.time()
    failures = []
    for gname, g, fld in _cells(groups, fields):
        stream = stream_for(47, gname, fld.spec(), "c4")
        small_degrees = [d for d in range(3) if g.order ** (d + 3) <= 10 ** 6]
        # associativity and symmetry: >= 100 trials each
        for k in range(100):
            p = next(stream) % 3
            q = next(stream) % 3
            r = next(stream) % 3
            a = random_cochain(g, fld, p, seed=next(stream) % (1 << 32))
            b = random_cochain(g, fld, q, seed=next(stream) % (1 << 32))
            c = random_cochain(g, fld, r, seed=next(stream) % (1 << 32))
            if norm_pairing(convolution_cup(a, b), c) != norm_pairing(a, convolution_cup(b, c)):
                failures.append(("associativity", gname, fld.spec(), k))
            if norm_pairing(a, b) != norm_pairing(b, a):
                failures.append(("symmetry", gname, fld.spec(), k))
        # parity descent: four cases, >= 100 trials total per cell
        cases = [(1, 1), (2, 1), (1, 2), (0, 0)]
        for k in range(100):
            p, q = cases[k % 4]
            a = random_cochain(g, fld, p, seed=next(stream) % (1 << 32))
            beta = random_cocycle(g, fld, q, seed=next(stream) % (1 << 32))
            shifted = a if p == 0 else a.add(coboundary(
                random_cochain(g, fld, p - 1, seed=next(stream) % (1 << 32))))
            if norm_pairing(shifted, beta) != norm_pairing(a, beta):
                failures.append(("parity-descent", gname, fld.spec(), (p, q), k))
        # closures and degeneracy: >= 100 trials each
        from hochfrob.verify import _Ctx

        cfg = RunConfig(group_spec=gname, field_spec=fld.spec(), max_degree=3,
                        seed=13, trials=1)
        ctx = _Ctx(cfg)
        for k in range(100):
            n = 1 + next(stream) % 2
            v = ctx.rand_radical("c4", k, n)
            if not in_norm_radical(v):
                failures.append(("radical-sample", gname, fld.spec(), k))
            if not in_norm_radical(coboundary(v)):
                failures.append(("v-closure", gname, fld.spec(), k))
            e = restrict_to_identity_support(
                random_cochain(g, fld, n, seed=next(stream) % (1 << 32)))
            if not is_identity_supported(coboundary(e)):
                failures.append(("we-closure", gname, fld.spec(), k))
            b = random_cochain(g, fld, next(stream) % 3, seed=next(stream) % (1 << 32))
            if not fld.is_zero(norm_pairing(v, b)):
                failures.append(("degeneracy", gname, fld.spec(), k))
        # radical = V for p <= 2, exact subspace equality
        for p in (0, 1, 2):
            _, rep = radical_basis(g, fld, p)
            if not rep["spans_equal"]:
                failures.append(("radical-equals-v", gname, fld.spec(), p, rep))
    _report(4, "Frobenius pairing laws, parity descent, closures, radical = V",
            failures, started)


def test_criterion_5_agreement_lemmas(groups, fields):
    started = time.time()
    failures = []
    pairs = [(p, q) for p in range(5) for q in range(5) if p + q <= 4]
    for gname, g, fld in _cells(groups, fields):
        stream = stream_for(53, gname, fld.spec(), "c5")
        for (p, q) in pairs:
            if g.order ** (p + q + 2) > WIDE_BUDGET:
                failures.append(("budget", gname, (p, q)))
                continue
            trials = 3 if g.order ** (p + q + 2) <= 10 ** 5 else 1
            for k in range(trials):
                a = random_identity_supported_cochain(
                    g, fld, p, seed=next(stream) % (1 << 32), budget=WIDE_BUDGET)
                b = random_identity_supported_cochain(
                    g, fld, q, seed=next(stream) % (1 << 32), budget=WIDE_BUDGET)
                if convolution_cup(a, b, budget=WIDE_BUDGET) != \
                        simplicial_cup(a, b, budget=WIDE_BUDGET):
                    failures.append(("cup", gname, fld.spec(), (p, q), k))
                if circle_product(a, b, budget=WIDE_BUDGET) != \
                        simplicial_cup_one(a, b, budget=WIDE_BUDGET):
                    failures.append(("cup-one", gname, fld.spec(), (p, q), k))
    rationals = fields["Q"]
    for gname in SUITE:
        g = groups[gname]
        for degree in range(0, 4):
            for t in identity_product_tuples(g, degree):
                sigma = Chain.basis(g, rationals, t)
                proj = convolution_coproduct(sigma).restrict_to_identity_product()
                if proj != aw_coproduct(sigma):
                    failures.append(("aw", gname, t))
    _report(5, "cup and cup-one agreements on identity support; front/back "
               "coproduct matches the identity part", failures, started)


def test_criterion_6_homotopy_commutativity(groups, fields):
    started = time.time()
    failures = []
    for (p, q), signs in HOMOTOPY_SIGN_FIXTURES.items():
        assert homotopy_signs(p, q) == signs
    for gname, g, fld in _cells(groups, fields):
        stream = stream_for(59, gname, fld.spec(), "c6")
        for (p, q) in HOMOTOPY_SIGN_FIXTURES:
            if g.order ** (p + q + 2) > WIDE_BUDGET:
                failures.append(("budget", gname, (p, q)))
                continue
            for k in range(100):
                a = random_cochain(g, fld, p, seed=next(stream) % (1 << 32))
                b = random_cochain(g, fld, q, seed=next(stream) % (1 << 32))
                if not homotopy_commutator_defect(a, b, budget=WIDE_BUDGET).is_zero():
                    failures.append(("homotopy", gname, fld.spec(), (p, q), k))
    _report(6, "cup commutator equals the pinned coboundary homotopy "
               f"(signs {HOMOTOPY_SIGN_FIXTURES})", failures, started)


def test_criterion_7_dimension_tables(groups, fields):
    started = time.time()
    failures = []
    c2, c3 = groups["C2"], groups["C3"]
    f2, f3, q = fields["F2"], fields["F3"], fields["Q"]

    def expect(table, wanted, tag):
        got = [d for _, d in table.betti]
        if got != wanted:
            failures.append((tag, got, wanted))

    expect(betti_table(c2, f2, 4, Complex.CHAIN_B), [2, 2, 2, 2, 2], "C2/F2 chain")
    expect(betti_table(c2, f2, 4, Complex.COCHAIN_BSTAR), [2, 2, 2, 2, 2],
           "C2/F2 dual oracle")
    expect(betti_table(c2, q, 4, Complex.CHAIN_B), [2, 0, 0, 0, 0], "C2/Q chain")
    expect(betti_table(c2, q, 4, Complex.COCHAIN_BSTAR), [2, 0, 0, 0, 0],
           "C2/Q dual oracle")
    expect(betti_table(c2, f2, 4, Complex.WE_SUB), [1, 1, 1, 1, 1], "C2/F2 we")
    expect(betti_table(c3, f3, 3, Complex.WE_SUB), [1, 1, 1, 1], "C3/F3 we")
    for gname, g, fld in _cells(groups, fields):
        classes = len(g.conjugacy_classes())
        m = __import__("hochfrob").boundary_matrix(g, fld, 0, Complex.COCHAIN_BSTAR)
        if len(kernel_basis(m)) != classes:
            failures.append(("ker-b0*", gname, fld.spec()))
        if betti(g, fld, 0, Complex.COCHAIN_BSTAR) != classes:
            failures.append(("H0", gname, fld.spec()))
        if betti(g, fld, 0, Complex.CHAIN_B) != classes:
            failures.append(("H0-chain-oracle", gname, fld.spec()))
    _report(7, "dimension tables with dual-complex oracle", failures, started)


def test_criterion_8_tqft(groups, fields):
    started = time.time()
    failures = []
    q = fields["Q"]
    for gname in SUITE:
        g = groups[gname]
        data = frobenius_data(g, q)
        classes = len(g.conjugacy_classes())
        if data.counit_coords(handle_element(data)) != classes:
            failures.append(("handle-trace", gname))
        for genus in (1, 2):
            z = surface_invariant(data, genus)
            if z * g.order != hom_count_oracle(g, genus):
                failures.append(("surface", gname, genus, z))
        if surface_invariant(data, 0) != 1:
            failures.append(("sphere", gname))
        torus = CobordismWord.parse("unit comul mul counit")
        if evaluate_cobordism(data, torus) != classes:
            failures.append(("torus-word", gname))
    try:
        frobenius_data(groups["S3"], fields["F3"])
        failures.append(("degenerate-not-raised",))
    except DegeneratePairingError:
        pass
    _report(8, "TQFT surface invariants match the homomorphism count oracle",
            failures, started)


def test_criterion_9_determinism(tmp_path):
    started = time.time()
    failures = []
    from hochfrob.cli import main

    for gspec, fspec in (("C2xC2", "Q"), ("C3", "F:3")):
        args = ["verify", "--group", gspec, "--field", fspec, "--max-degree", "2",
                "--trials", "6", "--seed", "2024"]
        p1 = tmp_path / f"{gspec}-{fspec.replace(':', '')}-1.json"
        p2 = tmp_path / f"{gspec}-{fspec.replace(':', '')}-2.json"
        code1 = main(args + ["--out", str(p1)])
        code2 = main(args + ["--out", str(p2)])
        if code1 != 0 or code2 != 0:
            failures.append(("exit", gspec, fspec, code1, code2))
        if p1.read_bytes() != p2.read_bytes():
            failures.append(("bytes", gspec, fspec))
        report = json.loads(p1.read_text())
        if not report["all_passed"]:
            failures.append(("content", gspec, fspec))
    _report(9, "verification reports are byte-identical across runs", failures, started)
