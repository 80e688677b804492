"""Tests for polynomial-symbol quantization and the named operators."""

import json
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planequant.errors import DimensionMismatchError
from planequant.operators import (
    OperatorMatrix,
    PolynomialSymbol,
    commutator,
    hall_coordinates,
    hamiltonian,
    last_level_projector,
    momentum_operator,
    position_operator,
    quantize,
    quantize_monomial,
    quantize_quadrature,
)

SQRT2 = math.sqrt(2.0)


def _max_dev(a, b) -> float:
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b))))


class TestPolynomialSymbol:
    def test_canonicalization_merges_terms(self):
        sym = PolynomialSymbol.from_terms([(1, 0, 1.0), (1, 0, 2.0), (0, 0, 0.0)])
        assert sym.terms == ((1, 0, 3.0 + 0j),)

    def test_real_symbol_predicate(self):
        assert PolynomialSymbol.position().is_real_symbol()
        assert PolynomialSymbol.momentum().is_real_symbol()
        assert PolynomialSymbol.monomial(1, 1, 2.5).is_real_symbol()
        assert not PolynomialSymbol.monomial(1, 0, 1.0).is_real_symbol()
        assert not PolynomialSymbol.from_terms([(1, 0, 1.0), (0, 1, -1.0)]).is_real_symbol()

    def test_evaluate(self):
        sym = PolynomialSymbol.position()
        z = 0.8 - 0.25j
        assert sym.evaluate(z) == pytest.approx((z + np.conj(z)) / SQRT2)

    def test_json_round_trip(self):
        sym = PolynomialSymbol.from_terms([(2, 1, 0.5 - 0.25j), (0, 3, 1.5j)])
        again = PolynomialSymbol.from_json(sym.to_json())
        assert again == sym
        parsed = json.loads(sym.to_json())
        assert set(parsed[0]) == {"a", "b", "re", "im"}

    def test_rejects_negative_exponents(self):
        with pytest.raises(ValueError):
            PolynomialSymbol.from_terms([(-1, 0, 1.0)])


class TestQuantizeMonomial:
    def test_constant_gives_identity(self):
        assert _max_dev(quantize_monomial(6, 0, 0).entries, np.eye(6)) == 0.0

    def test_lowering_operator(self):
        a = quantize_monomial(5, 1, 0).entries
        expected = np.diag(np.sqrt(np.arange(1.0, 5.0)), 1)
        assert _max_dev(a, expected) <= 1e-14

    def test_number_diagonal_via_quadrature_oracle(self):
        closed = quantize_monomial(4, 1, 1)
        oracle = quantize_quadrature(lambda z: z * np.conj(z), 4)
        assert _max_dev(closed.entries, oracle.entries) <= 1e-12
        assert _max_dev(np.diag(closed.entries), np.arange(1.0, 5.0)) <= 1e-14

    @pytest.mark.parametrize("a,b", [(0, 0), (1, 0), (0, 2), (2, 1), (3, 3), (5, 2)])
    def test_matches_quadrature_oracle(self, a, b):
        n = 12
        closed = quantize_monomial(n, a, b)
        oracle = quantize_quadrature(lambda z: z**a * np.conj(z) ** b, n)
        assert _max_dev(closed.entries, oracle.entries) <= 1e-10

    def test_large_shift_uses_log_path(self):
        # a+b above the exact-product cutoff still matches the quadrature rule
        from planequant.frame import QuadratureSpec

        n = 6
        closed = quantize_monomial(n, 21, 20)
        oracle = quantize_quadrature(
            lambda z: z**21 * np.conj(z) ** 20,
            n,
            quad=QuadratureSpec(radial_order=60, angular_order=120),
        )
        assert _max_dev(closed.entries, oracle.entries) <= 1e-6 * np.max(np.abs(closed.entries))

    def test_dense_cap(self):
        with pytest.raises(ValueError):
            quantize_monomial(5000, 0, 0)


class TestQuantize:
    def test_zero_symbol(self):
        z = quantize(PolynomialSymbol.zero(), 7)
        assert _max_dev(z.entries, 0.0) == 0.0

    def test_position_symbol_matches_direct_fill(self):
        for n in (1, 2, 5, 33, 170):
            via_symbol = quantize(PolynomialSymbol.position(), n)
            direct = position_operator(n)
            assert _max_dev(via_symbol.entries, direct.entries) <= 1e-14

    def test_momentum_symbol_matches_direct_fill(self):
        for n in (2, 5, 33):
            via_symbol = quantize(PolynomialSymbol.momentum(), n)
            direct = momentum_operator(n)
            assert _max_dev(via_symbol.entries, direct.entries) <= 1e-14

    def test_quadrature_identity(self):
        op = quantize_quadrature(lambda z: np.ones_like(z), 9)
        assert _max_dev(op.entries, np.eye(9)) <= 1e-12

    def test_quadrature_position(self):
        sym = PolynomialSymbol.position()
        op = quantize_quadrature(sym.evaluate, 10)
        assert _max_dev(op.entries, position_operator(10).entries) <= 1e-10

    @settings(max_examples=40, deadline=None)
    @given(
        n=st.integers(min_value=1, max_value=32),
        data=st.lists(
            st.tuples(
                st.integers(min_value=0, max_value=6),
                st.integers(min_value=0, max_value=6),
                st.complex_numbers(min_magnitude=0.05, max_magnitude=3.0),
            ),
            min_size=1,
            max_size=4,
        ),
    )
    def test_real_symbols_quantize_to_hermitian(self, n, data):
        # symmetrize: f + conj(f) is real-valued by construction
        terms = [(a, b, c) for a, b, c in data] + [(b, a, np.conj(c)) for a, b, c in data]
        sym = PolynomialSymbol.from_terms(terms)
        assert sym.is_real_symbol()
        assert quantize(sym, n).is_hermitian

    def test_non_real_symbol_not_hermitian(self):
        op = quantize(PolynomialSymbol.monomial(2, 0, 1.0), 6)
        assert not op.is_hermitian


class TestNamedOperators:
    def test_position_two_by_two(self):
        expected = np.array([[0.0, 1 / SQRT2], [1 / SQRT2, 0.0]])
        assert _max_dev(position_operator(2).entries, expected) <= 1e-15

    def test_momentum_two_by_two(self):
        expected = np.array([[0.0, -1j / SQRT2], [1j / SQRT2, 0.0]])
        assert _max_dev(momentum_operator(2).entries, expected) <= 1e-15

    def test_hermitian_flags(self):
        for n in (1, 2, 9):
            assert position_operator(n).is_hermitian
            assert momentum_operator(n).is_hermitian
            assert hamiltonian(n).is_hermitian

    @pytest.mark.parametrize(
        "n,expected",
        [
            (5, [0.5, 1.5, 2.5, 3.5, 2.0]),
            (2, [0.5, 0.5]),
            (3, [0.5, 1.5, 1.0]),
        ],
    )
    def test_energy_diagonal(self, n, expected):
        assert np.diag(hamiltonian(n).entries).real.tolist() == expected

    @pytest.mark.parametrize("n", [1, 2, 3, 8, 45, 128])
    def test_energy_equals_half_sum_of_squares(self, n):
        q = position_operator(n).entries
        p = momentum_operator(n).entries
        assert _max_dev((p @ p + q @ q) / 2.0, hamiltonian(n).entries) <= 1e-12

    @pytest.mark.parametrize("n", [1, 2, 3, 17, 100, 200])
    def test_commutator_identity(self, n):
        got = commutator(position_operator(n), momentum_operator(n)).entries
        expected = 1j * (np.eye(n) - n * last_level_projector(n).entries)
        assert _max_dev(got, expected) <= 1e-12

    def test_commutator_with_self_vanishes(self):
        q = position_operator(9)
        assert _max_dev(commutator(q, q).entries, 0.0) == 0.0

    def test_commutator_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            commutator(position_operator(3), position_operator(4))

    def test_hall_unit_area_reduces_to_canonical_pair(self):
        x1, x2 = hall_coordinates(6, theta=1.0)
        assert _max_dev(x1.entries, position_operator(6).entries) == 0.0
        assert _max_dev(x2.entries, momentum_operator(6).entries) == 0.0

    def test_hall_two_by_two_scaling(self):
        x1, _ = hall_coordinates(2, theta=2.0)
        assert _max_dev(x1.entries, np.array([[0.0, 1.0], [1.0, 0.0]])) <= 1e-15

    @pytest.mark.parametrize("theta", [0.5, 2.0])
    def test_hall_commutator(self, theta):
        n = 7
        x1, x2 = hall_coordinates(n, theta)
        got = commutator(x1, x2).entries
        expected = 1j * theta * (np.eye(n) - n * last_level_projector(n).entries)
        assert _max_dev(got, expected) <= 1e-12

    def test_hall_rejects_nonpositive_area(self):
        with pytest.raises(ValueError):
            hall_coordinates(4, theta=0.0)


class TestOperatorMatrix:
    def test_json_round_trip(self):
        op = momentum_operator(4)
        again = OperatorMatrix.from_json(op.to_json())
        assert again.dim == 4
        assert _max_dev(again.entries, op.entries) == 0.0

    def test_csv_interleaves_re_im(self):
        op = momentum_operator(2)
        rows = op.to_csv().strip().splitlines()
        assert len(rows) == 2
        first = [float(v) for v in rows[0].split(",")]
        assert first == pytest.approx([0.0, 0.0, 0.0, -1 / SQRT2])

    def test_entries_are_immutable(self):
        op = position_operator(3)
        with pytest.raises(ValueError):
            op.entries[0, 0] = 5.0
