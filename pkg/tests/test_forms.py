import itertools
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from planarpalf import forms
from planarpalf.forms import IntSymForm


def small_matrix(max_rows=5, max_cols=5, bound=8):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(st.integers(-bound, bound), min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


def sym_form(max_n=3, bound=6):
    def build(n):
        cells = st.lists(st.integers(-bound, bound), min_size=n * (n + 1) // 2, max_size=n * (n + 1) // 2)

        def fill(vals):
            it = iter(vals)
            g = [[0] * n for _ in range(n)]
            for i in range(n):
                for j in range(i, n):
                    g[i][j] = g[j][i] = next(it)
            return IntSymForm(g)

        return cells.map(fill)

    return st.integers(1, max_n).flatmap(build)


def test_smith_examples():
    assert forms.smith_normal_form([[2, 0], [0, 3]]).diagonal == [1, 6]
    assert forms.smith_normal_form([[1, 0], [0, 1]]).diagonal == [1, 1]
    assert forms.smith_normal_form([[-8, 1], [1, -2]]).diagonal == [1, 15]


@settings(max_examples=300)
@given(small_matrix())
def test_smith_against_sympy(m):
    sf = forms.smith_normal_form(m)
    forms.check_smith(m, sf)
    ours = [abs(d) for d in sf.diagonal]
    ref = sympy_snf(sympy.Matrix(m), domain=sympy.ZZ)
    theirs = [abs(int(ref[i, i])) for i in range(min(ref.shape))]
    assert ours == theirs


@given(small_matrix())
def test_cokernel_order_matches_determinant(m):
    if len(m) != len(m[0]):
        return
    det = forms.determinant(m)
    factors = forms.cokernel(m)
    if det == 0:
        assert 0 in factors
    else:
        prod = 1
        for x in factors:
            prod *= x
        assert prod == abs(det)


def test_cokernel_conventions():
    assert forms.cokernel([[2, 0], [0, 3]]) == [6]
    assert forms.cokernel([[0]]) == [0]
    assert forms.cokernel([[1]]) == []
    assert forms.format_group([0, 0, 3]) == "Z/3 + Z^2"


@given(small_matrix(bound=4))
def test_kernel_bases_agree(m):
    cols = len(m[0])
    a = forms.kernel_basis(m, cols)
    b = forms.kernel_basis_hermite(m, cols)
    assert len(a) == len(b) == cols - sympy.Matrix(m).rank()
    for v in a + b:
        assert all(sum(r[j] * v[j] for j in range(cols)) == 0 for r in m)
    if a:
        # both bases span the same saturated lattice: each has full-rank Smith form with unit factors
        for basis in (a, b):
            assert all(d == 1 for d in forms.smith_normal_form(basis, cols).invariant_factors)


@pytest.mark.parametrize(
    "gram, sig",
    [([[-8, 1], [1, -2]], -2), ([[1]], 1), ([[0, 0], [0, 0]], 0), ([[0, 1], [1, 0]], 0)],
)
def test_signature(gram, sig):
    assert forms.signature(IntSymForm(gram)) == sig


def test_parity_examples():
    assert forms.is_even(IntSymForm([[-8, 1], [1, -2]]))
    assert not forms.is_even(IntSymForm([[-8, -3], [-3, -3]]))
    assert forms.is_even(IntSymForm([[0]]))


@given(sym_form())
def test_is_even_matches_brute_force(f):
    n = f.rank
    brute = all(f(v, v) % 2 == 0 for v in itertools.product(range(-2, 3), repeat=n))
    assert forms.is_even(f) == brute


def test_gram_must_be_symmetric():
    with pytest.raises(ValueError):
        IntSymForm([[1, 2], [3, 4]])


def test_congruent_examples():
    a = IntSymForm([[-8, 1], [1, -2]])
    b = IntSymForm([[-8, -3], [-3, -3]])
    res = forms.congruent(a, b)
    assert res.verdict == "no" and res.reason == "parity"
    same = forms.congruent(IntSymForm([[-3]]), IntSymForm([[-3]]))
    assert same.verdict == "yes" and same.witness == [[1]]


@settings(max_examples=100, deadline=None)
@given(sym_form(), st.randoms(use_true_random=False))
def test_congruent_finds_constructed_witness(f, rnd):
    P = forms.random_unimodular(f.rank, rnd)
    g = f.pullback(P)
    res = forms.congruent(f, g)
    assert res.verdict == "yes"
    assert f.pullback(res.witness) == g


@settings(max_examples=100, deadline=None)
@given(sym_form(max_n=2), sym_form(max_n=2))
def test_congruence_verdict_is_symmetric(f, g):
    if f.rank != g.rank:
        return
    a, b = forms.congruent(f, g).verdict, forms.congruent(g, f).verdict
    assert (a == "no") == (b == "no")


def test_congruent_rank_mismatch():
    with pytest.raises(ValueError):
        forms.congruent(IntSymForm([[1]]), IntSymForm([[1, 0], [0, 1]]))


def test_linking_form_of_the_even_matrix():
    lf = forms.linking_form([[-8, 1], [1, -2]])
    assert lf.factors == (15,)
    inv = [[Fraction(-2, 15), Fraction(-1, 15)], [Fraction(-1, 15), Fraction(-8, 15)]]
    # -L^-1 = (1/15) [[2, 1], [1, 8]]
    g = lf.generators[0]
    q = -sum(g[i] * inv[i][j] * g[j] for i in range(2) for j in range(2))
    assert lf.q_values()[0] == q - (q.numerator // q.denominator)


def test_linking_form_trivial_group():
    assert forms.linking_form([[-1]]).factors == ()


def test_linking_forms_of_the_two_matrices_agree():
    a = forms.linking_form([[-8, 1], [1, -2]])
    b = forms.linking_form([[-8, -3], [-3, -3]])
    assert forms.linking_forms_isomorphic(a, b) is True
    assert a.self_pairing_multiset() == b.self_pairing_multiset()


def test_linking_forms_distinguish_lens_spaces():
    # both present Z/5, with self-pairings -1/5 and -3/5 on a generator; 3 is not a square mod 5
    a = forms.linking_form([[5]])
    b = forms.linking_form([[2, 1], [1, 3]])
    assert a.factors == b.factors == (5,)
    assert forms.linking_forms_isomorphic(a, b) is False


def test_linking_form_of_degenerate_matrix():
    with pytest.raises(ValueError):
        forms.linking_form([[0]])


def test_random_unimodular_is_unimodular():
    rng = random.Random(1)
    for n in range(1, 5):
        assert abs(forms.determinant(forms.random_unimodular(n, rng))) == 1
