"""Matrix layer: involution, skew slices, weight grading, zero-weight spans."""

import random
from fractions import Fraction

from ealie.exact_arith import GaussianRational
from ealie.linalg import SpanDict
from ealie.matlie import (
    LieElement,
    big_e,
    e_mat,
    hddot,
    hdot,
    mat_bracket,
    nonzero_weights,
    skew_basis,
    skew_root_basis,
    star,
    symplectic_eigenbasis,
    trace_form,
    zero_root_component,
)
from ealie.quantum_torus import SignMatrix, kappa, lattice_box

Q2 = SignMatrix.from_upper(2, [-1])
Q0 = SignMatrix(0)


def _identity(ell, q):
    out = LieElement.zero(ell, q)
    for p in range(2 * ell):
        out = out + e_mat(ell, q, p, p)
    return out


def _bar_transpose(x):
    return LieElement(x.ell, x.q, {(r, p): val.bar() for (p, r), val in x.entries.items()})


def _star_literal(x):
    e = big_e(x.ell, x.q)
    return (-e) @ _bar_transpose(x) @ e


def _random_element(rng, ell, q, box):
    out = LieElement.zero(ell, q)
    for _ in range(4):
        p = rng.randrange(2 * ell)
        r = rng.randrange(2 * ell)
        sigma = box[rng.randrange(len(box))]
        coeff = GaussianRational(rng.randint(-3, 3), rng.randint(-3, 3))
        out = out + e_mat(ell, q, p, r, sigma, coeff)
    return out


def test_big_e_squares_to_minus_identity():
    for ell, q in ((2, Q2), (3, Q0)):
        e = big_e(ell, q)
        assert e @ e == -_identity(ell, q)


def test_star_matches_literal_conjugation():
    rng = random.Random(2)
    box = lattice_box(2, 1)
    for _ in range(50):
        x = _random_element(rng, 2, Q2, box)
        assert star(x) == _star_literal(x)


def test_star_involutive_antiautomorphism():
    rng = random.Random(3)
    box = lattice_box(2, 1)
    for _ in range(30):
        x = _random_element(rng, 2, Q2, box)
        y = _random_element(rng, 2, Q2, box)
        assert star(star(x)) == x
        assert star(x @ y) == star(y) @ star(x)


def test_symplectic_eigenbasis_dimensions():
    for ell in (2, 3):
        minus, plus = symplectic_eigenbasis(ell)
        assert len(minus) == 2 * ell * ell + ell
        assert len(plus) == 2 * ell * ell - ell


def test_skew_basis_is_skew_and_independent():
    for sigma in ((0, 0), (1, 0), (1, 1)):
        basis = skew_basis(2, Q2, sigma)
        assert len(basis) == 16  # 4 l^2 rational dimensions per degree
        span = SpanDict()
        for x in basis:
            assert (star(x) + x).is_zero()
            assert span.add(x.coords())
        k = kappa(sigma, Q2)
        real = skew_basis(2, Q2, sigma, real_only=True)
        assert len(real) == (10 if k > 0 else 6)
        assert all(x.is_real() for x in real)


def test_skew_root_basis_weights_and_dims():
    ell, q = 2, Q2
    hs = [hdot(ell, q, r) for r in range(ell)]
    for sigma in ((0, 0), (0, 1), (1, 1)):
        for weight in nonzero_weights(ell):
            basis = skew_root_basis(ell, q, weight, sigma)
            long_root = any(abs(v) == 2 for v in weight)
            assert len(basis) == (1 if long_root else 2)
            for x in basis:
                assert (star(x) + x).is_zero()
                for r, h in enumerate(hs):
                    assert mat_bracket(h, x) == x * weight[r]


def test_skew_root_basis_unknown_weight_empty():
    assert skew_root_basis(2, Q2, (3, 0), (0, 0)) == []
    assert skew_root_basis(2, Q2, (1, 1, 1), (0, 0)) == []


def test_nonzero_weights_is_type_c():
    ws = nonzero_weights(2)
    assert len(ws) == 8
    assert set(ws) == {
        (1, -1), (-1, 1), (2, 0), (-2, 0), (0, 2), (0, -2), (1, 1), (-1, -1),
    }


def test_trace_form_symmetric_invariant():
    rng = random.Random(4)
    box = lattice_box(2, 1)
    for _ in range(25):
        x = _random_element(rng, 2, Q2, box)
        y = _random_element(rng, 2, Q2, box)
        z = _random_element(rng, 2, Q2, box)
        assert trace_form(x, y) == trace_form(y, x)
        assert trace_form(mat_bracket(x, y), z) == trace_form(x, mat_bracket(y, z))


def test_hdot_form_normalization():
    for r in range(2):
        for s in range(2):
            assert trace_form(hdot(2, Q2, r), hdot(2, Q2, s)) == (2 if r == s else 0)


def test_zero_root_component_cases_mixed_sign_matrix():
    # q12 = -1: dimension pattern 3 at 0, 4 at every other window degree
    expected = {
        (0, 0): (3, "even degree, no odd-product property"),
        (1, 0): (4, "even degree, odd-product property"),
        (0, 1): (4, "even degree, odd-product property"),
        (1, 1): (4, "odd degree, even-product property"),
    }
    for gamma, (dim, case) in expected.items():
        comp = zero_root_component(2, Q2, gamma, include_diagonal_pairs=True)
        assert comp.closed_form_match
        assert comp.dim == dim
        assert comp.case == case
        assert comp.full_dim == comp.dim
        assert comp.nonzero_pair_dim == comp.dim


def test_zero_root_component_trivial_sign_matrix():
    q = SignMatrix(2)
    for gamma in ((0, 0), (1, 0), (1, 1)):
        comp = zero_root_component(2, q, gamma, include_diagonal_pairs=True)
        assert comp.closed_form_match
        assert comp.dim == 3
        assert comp.case == "even degree, no odd-product property"


def test_zero_root_component_real_only():
    comp = zero_root_component(2, Q0, (), real_only=True)
    assert comp.dim == 2
    assert comp.closed_form_match
    span = SpanDict(x.coords() for x in comp.basis)
    target = SpanDict(hdot(2, Q0, r).coords() for r in range(2))
    from ealie.linalg import span_equal

    assert span_equal(span, target)


def test_hddot_definition():
    h = hddot(2, Q2, 0)
    assert h.entries[(0, 0)].coefficient((0, 0)) == GaussianRational(1)
    assert h.entries[(2, 2)].coefficient((0, 0)) == GaussianRational(1)
    d = hdot(2, Q2, 0) * Fraction(1, 2)
    assert (d + d) == hdot(2, Q2, 0)
