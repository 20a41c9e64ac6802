"""
Unit tests for Gray matrices and the Gray map.
"""
import numpy as np
import pytest

from domain.entities.field import get_field
from domain.entities.gray import GrayMatrix, default_n
from domain.entities.ring import RingElement, random_ring_element
from domain.errors import InvalidGrayMatrixError
from domain.services.gray_map import gray_weight, phi, phi_word


class TestGrayMatrix:
    """N N^T = eta I"""

    @pytest.mark.parametrize("p,m", [(2, 2), (2, 4), (3, 1), (3, 2), (3, 3)])
    def test_default_matrix_is_orthogonal_up_to_scalar(self, p, m):
        # Arrange
        spec = get_field(p, m)

        # Act
        n = default_n(spec)
        (a, b), (c, d) = n.entries

        # Assert
        assert (a * c + b * d).is_zero
        assert a * a + b * b == c * c + d * d == n.eta
        assert not n.eta.is_zero

    def test_gf2_has_no_default(self):
        with pytest.raises(InvalidGrayMatrixError):
            default_n(get_field(2, 1))

    def test_non_orthogonal_matrix_rejected(self):
        spec = get_field(3, 1)
        with pytest.raises(InvalidGrayMatrixError):
            GrayMatrix.parse([["1", "1"], ["0", "1"]], spec)

    def test_parse_then_text(self):
        spec = get_field(2, 2)
        n = GrayMatrix.parse([["1", "t"], ["t", "1"]], spec)
        assert n == default_n(spec)
        assert n.to_text() == [["1", "t"], ["t", "1"]]


class TestGrayMap:
    """phi is an F_q-linear bijection R -> F_q^2"""

    @pytest.mark.parametrize("p,m", [(2, 2), (2, 3), (3, 1), (3, 2), (3, 3)])
    def test_phi_is_bijective(self, p, m):
        spec = get_field(p, m)
        n = default_n(spec)
        images = {
            tuple(y.code for y in phi(RingElement(a, b), n))
            for a in spec.elements() for b in spec.elements()
        }
        assert len(images) == spec.q ** 2

    @pytest.mark.parametrize("p,m", [(2, 2), (3, 2), (3, 3)])
    def test_phi_is_additive(self, p, m):
        spec = get_field(p, m)
        n = default_n(spec)
        elements = list(spec.elements())
        for a in elements:
            for b in elements[:5]:
                x = RingElement(a, b)
                y = RingElement(b, a)
                lhs = phi(x + y, n)
                rhs = tuple(u + w for u, w in zip(phi(x, n), phi(y, n)))
                assert lhs == rhs

    def test_phi_of_v_components(self):
        """phi(c v) = c * row 0 of N and phi(c v') = c * row 1"""
        spec = get_field(3, 2)
        n = default_n(spec)
        c = spec.power(3)
        cv = RingElement.scalar(c) * RingElement.v(spec)
        cvp = RingElement.scalar(c) * RingElement.v_prime(spec)
        assert phi(cv, n) == tuple(c * e for e in n.row(0))
        assert phi(cvp, n) == tuple(c * e for e in n.row(1))

    def test_word_weight(self):
        spec = get_field(2, 2)
        n = default_n(spec)
        rng = np.random.default_rng(3)
        word = [random_ring_element(spec, rng) for _ in range(6)]
        assert gray_weight(word, n) == sum(1 for y in phi_word(word, n) if not y.is_zero)
        assert len(phi_word(word, n)) == 12
