"""Acceptance checks.  Each test prints one PASS/FAIL line.

Run directly with ``python3 tests/test_acceptance.py`` or through pytest.
"""

import importlib
import inspect
import json
import math
import random
import subprocess
import sys
import time
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from lensfib import braid as br
from lensfib import contact as ct
from lensfib import kirby as kb
from lensfib import lenslift as ll
from lensfib import openbook as obk
from lensfib.contfrac import chain_matrix, evaluate_cf, expand_neg_cf
from lensfib.lenslift import BandDiagram, LensParams, S3Point

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture
def verdict(capsys):
    """Call ``verdict(label, check)``: runs ``check`` and prints one result line."""

    def _run(label, check):
        try:
            check()
        except BaseException:
            with capsys.disabled():
                print(f"\nFAIL  {label}")
            raise
        with capsys.disabled():
            print(f"\nPASS  {label}")

    return _run


# 1 ---------------------------------------------------------------------------

def test_ac1_lift_identity(verdict):
    def check():
        start = time.perf_counter()
        for p in range(2, 9):
            res = ll.lift_fibered_Lp1(p)
            assert br.format_word(res.word) == "-1 -1"
            assert res.invariants.component_count == 2
            assert res.invariants.lk(1, 2) == -1
        assert time.perf_counter() - start < 1.0

    verdict("AC1 lift of the L(p,1) fibered link is s1^-2 for p in 2..8, lk -1, < 1 s", check)


# 2 ---------------------------------------------------------------------------

def test_ac2_positive_case(verdict):
    def check():
        word = ll.lift(BandDiagram.trivial(2), LensParams(2, 1))
        assert br.format_word(word) == "1 1"
        assert br.closure_invariants(word).lk(1, 2) == 1
        for p in range(2, 9):
            assert ll.lift(BandDiagram.trivial(2), LensParams(p, 1)).letters == (1, 1)

    verdict("AC2 trivial 2-strand band with q=1 lifts to s1^2, lk +1", check)


# 3 ---------------------------------------------------------------------------

def test_ac3_monodromy(verdict):
    def check():
        for p in range(-8, 9):
            book = obk.build_fibered_Lp1(p).book
            assert book.is_annulus
            assert obk.mcg_annulus_reduce(book) == -p
            quotient = obk.quotient_hopf_book(p)
            assert obk.mcg_annulus_reduce(quotient) == p
            assert obk.books_equivalent_annulus(book, quotient, flip_orientation=True)
            if p:
                assert not obk.books_equivalent_annulus(book, quotient)

    verdict("AC3 L(p,1) monodromy is D_gamma^-p for p in -8..8 and matches (A, D_gamma^p) under the flip", check)


# 4 ---------------------------------------------------------------------------

def test_ac4_continued_fractions(verdict):
    def check():
        start = time.perf_counter()
        count = 0
        for p in range(2, 201):
            for q in range(1, p):
                if math.gcd(p, q) != 1:
                    continue
                terms = expand_neg_cf(p, q)
                assert evaluate_cf(terms) == Fraction(-p, q)
                assert all(a <= -2 for a in terms)
                assert abs(kb.determinant(chain_matrix(terms))) == p
                count += 1
        assert count == sum(1 for p in range(2, 201) for q in range(1, p) if math.gcd(p, q) == 1)
        assert time.perf_counter() - start < 5.0

    verdict("AC4 continued fractions round trip, terms <= -2, |det| = p for p <= 200, < 5 s", check)


# 5 ---------------------------------------------------------------------------

def _random_matrix(rng, n):
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = rng.randint(-5, 5)
    return kb.FramedLinkMatrix(rows)


def _random_legal_move(rng, m):
    options = [kb.K1Add(rng.choice((1, -1)))]
    for k in range(1, m.size + 1):
        row = m.entries[k - 1]
        if abs(row[k - 1]) == 1:
            options.append(kb.BlowDown(k, row[k - 1]))
            if all(x == 0 for j, x in enumerate(row) if j != k - 1):
                options.append(kb.K1Remove(k))
    if m.size >= 2:
        i, j = rng.sample(range(1, m.size + 1), 2)
        options.append(kb.K2Slide(i, j, rng.choice((1, -1))))
    return rng.choice(options)


def test_ac5_kirby_invariance(verdict):
    def check():
        rng = random.Random(5)
        for _ in range(1000):
            m = _random_matrix(rng, rng.randint(0, 6))
            h = kb.h1_order(m)
            assert kb.blow_down(kb.k1_add(m, 1), m.size + 1) == m
            assert kb.blow_down(kb.k1_add(m, -1), m.size + 1) == m
            for _ in range(rng.randint(1, 10)):
                m = kb.apply_move(m, _random_legal_move(rng, m))
                assert kb.h1_order(m) == h

    verdict("AC5 1000 random legal Kirby sequences keep |det|; blow_down after k1_add is the identity", check)


# 6 ---------------------------------------------------------------------------

def test_ac6_contact(verdict):
    def check():
        start = time.perf_counter()
        forms = ct.standard_forms()
        sym, alpha = forms["r3_symmetric"], forms["s3_standard"]
        rng = np.random.default_rng(6)
        for pt in rng.uniform(-3.0, 3.0, size=(100, 3)):
            assert abs(ct.contact_volume_value(sym, pt) - 2.0) <= 1e-6
        ts = np.linspace(ct.T_MIN, 1 - ct.T_MIN, 50)
        thetas = np.linspace(0.0, 2 * math.pi, 50, endpoint=False)
        for omega in np.linspace(0.0, 2 * math.pi, 3, endpoint=False):
            page = ct.hopf_page(float(omega))
            for t in ts:
                for th in thetas:
                    ft, fth = ct.pullback_page(alpha, page, float(t), float(th))
                    assert abs(ft) <= 1e-6 and abs(fth - (2 * t * t - 1)) <= 1e-6
                    assert abs(ct.page_area_value(alpha, page, float(t), float(th)) - 4 * t) <= 1e-4
        for p in range(1, 13):
            for q in range(p):
                if math.gcd(p, q) == 1:
                    assert ct.zp_invariance_defect(LensParams(p, q)) < 1e-9
        assert ct.check_supports(alpha).verdict is True
        assert ct.check_supports(-alpha).verdict is False
        assert time.perf_counter() - start < 30.0

    verdict("AC6 contact volume 2, pullback 2t^2-1, area 4t, Z_p invariance, supported verdicts, < 30 s", check)


# 7 ---------------------------------------------------------------------------

@st.composite
def _words(draw):
    n = draw(st.integers(1, 6))
    if n == 1:
        return br.identity(1)
    gen = st.integers(1, n - 1).flatmap(lambda i: st.sampled_from([i, -i]))
    return br.BraidWord(n, tuple(draw(st.lists(gen, max_size=24))))


@settings(max_examples=200, deadline=None)
@given(_words())
def _prop_free_reduction(w):
    r = br.free_reduce(w)
    assert br.free_reduce(r) == r
    assert br.permutation(r) == br.permutation(w)
    assert br.closure_invariants(r) == br.closure_invariants(w)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.tuples(st.sampled_from(["zero", "stab"]), st.sampled_from([1, -1]),
                          st.integers(0, 9), st.integers(0, 9)), max_size=10))
def _prop_euler_bookkeeping(ops):
    ob = obk.standard_disk_book()
    for kind, sign, i, j in ops:
        chi = ob.euler_characteristic
        if kind == "zero":
            ob = obk.transverse_zero_surgery(ob)
        else:
            b = ob.boundary_count
            ob = obk.stabilize(ob, sign, (i % b, j % b))
        assert ob.euler_characteristic == chi - 1
        if ob.curves:
            label = ob.curves[i % len(ob.curves)].label
            after = obk.page_curve_surgery(ob, label, sign)
            assert after.euler_characteristic == ob.euler_characteristic


_COPRIME_12 = [(p, q) for p in range(1, 13) for q in range(p) if math.gcd(p, q) == 1]


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(_COPRIME_12), st.integers(-40, 40), st.integers(-40, 40),
       st.floats(0.0, math.pi / 2), st.floats(0.0, 2 * math.pi), st.floats(0.0, 2 * math.pi))
def _prop_group_law(pq, m, n, phi, t1, t2):
    params = LensParams(*pq)
    x = S3Point.from_angles(phi, t1, t2)
    lhs = ll.zp_act(params, m, ll.zp_act(params, n, x))
    rhs = ll.zp_act(params, m + n, x)
    assert abs(ll.angle_diff(lhs.theta1, rhs.theta1)) <= 1e-12
    assert abs(ll.angle_diff(lhs.theta2, rhs.theta2)) <= 1e-12
    assert (lhs.rho1, lhs.rho2) == (rhs.rho1, rhs.rho2)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 8), st.integers(0, 3))
def _prop_garside_reversal(n, k):
    d = br.garside_delta(n)
    assert len(d) == d.exponent_sum == n * (n - 1) // 2
    assert oracles.compose_transpositions(n, d.letters) == tuple(range(n, 0, -1))
    assert br.permutation(d).images == tuple(range(n, 0, -1))
    assert br.permutation(br.power(d, 2 * k)).is_identity()


_WAVY = ct.SampledOneForm(3, lambda p: (math.sin(p[1]), math.sin(p[2]), math.sin(p[0])), "wavy")


@settings(max_examples=100, deadline=None)
@given(st.floats(-3, 3), st.floats(-3, 3), st.floats(-3, 3))
def _prop_second_order(x, y, z):
    exact = -math.sin(y) * math.cos(z) - math.sin(z) * math.cos(x) - math.sin(x) * math.cos(y)
    errs = [abs(ct.contact_volume_value(_WAVY, (x, y, z), h) - exact) for h in (0.04, 0.02, 0.01)]
    if errs[0] < 1e-9:
        return
    assert errs[1] <= errs[0] / 3 + 1e-10 and errs[2] <= errs[1] / 3 + 1e-10


_SUITES = ["test_braid", "test_contfrac", "test_kirby", "test_openbook", "test_lenslift", "test_contact",
           "test_cli", "test_kernels"]


def _property_case_counts():
    counts = {}
    for name in _SUITES:
        mod = importlib.import_module(name)
        for attr, fn in inspect.getmembers(mod, inspect.isfunction):
            if getattr(fn, "is_hypothesis_test", False):
                counts[f"{name}.{attr}"] = fn._hypothesis_internal_use_settings.max_examples
    return counts


def test_ac7_property_suites(verdict):
    def check():
        for prop in (_prop_free_reduction, _prop_euler_bookkeeping, _prop_group_law,
                     _prop_garside_reversal, _prop_second_order):
            assert prop._hypothesis_internal_use_settings.max_examples >= 100
            prop()
        counts = _property_case_counts()
        assert counts
        low = {k: v for k, v in counts.items() if v < 100}
        assert not low, f"property tests below 100 cases: {low}"

    verdict("AC7 property suites (free reduction, chi bookkeeping, Z_p group law, Garside reversal, "
            "second-order convergence) green with >= 100 cases each", check)


# 8 ---------------------------------------------------------------------------

GOLDEN_CASES = {
    "lift_p3_q2.json": ["lift", "--p", "3", "--q", "2", "--strands", "2", "--band", "-1 -1"],
    "contfrac_7_2.json": ["contfrac", "7", "2"],
    "contact_check_p5_q2.json": ["contact", "check", "--p", "5", "--q", "2"],
}


def test_ac8_cli_goldens(verdict):
    def check():
        for name, argv in GOLDEN_CASES.items():
            proc = subprocess.run([sys.executable, "-m", "lensfib", *argv, "--format", "json"],
                                  capture_output=True, check=True)
            assert proc.stdout == (GOLDEN / name).read_bytes(), name
            json.loads(proc.stdout)

    verdict("AC8 CLI JSON for lift p=3 q=2, contfrac 7 2, contact check p=5 q=2 matches the goldens byte for byte",
            check)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
