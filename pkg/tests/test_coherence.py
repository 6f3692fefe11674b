from fractions import Fraction

import pytest

from booltermorders.catalog import (
    coherence_isolated_six,
    coherence_isolated_six_certificate,
    noncoherent_five,
    noncoherent_five_certificate,
)
from booltermorders.coherence import (
    Certificate,
    CoherentOrderError,
    TieError,
    find_weight,
    is_coherent,
    noncoherence_certificate,
    order_from_weight,
    verify_certificate,
)
from booltermorders.core import DisjointPair
from booltermorders.enumeration import enumerate_orders
from booltermorders import lp


def test_order_from_weight_basic():
    order = order_from_weight((1, 2, 4), 3)
    assert order.chain == (0b000, 0b001, 0b010, 0b011, 0b100, 0b101, 0b110, 0b111)


def test_order_from_weight_tie():
    with pytest.raises(TieError):
        order_from_weight((1, 2, 3), 3)


def test_find_weight_roundtrip():
    for order in enumerate_orders(4, mode="canonical"):
        w = find_weight(order)
        assert w is not None
        assert order_from_weight(w, 4) == order


def test_find_weight_deterministic():
    order = order_from_weight((7, 10, 16, 20, 22), 5)
    assert find_weight(order) == find_weight(order)


def test_noncoherent_example():
    order = noncoherent_five()
    assert not is_coherent(order)
    assert find_weight(order) is None


def test_bundled_certificates_verify():
    assert verify_certificate(noncoherent_five(), noncoherent_five_certificate())
    assert verify_certificate(
        coherence_isolated_six(), coherence_isolated_six_certificate()
    )


def test_solver_certificate_verifies():
    order = noncoherent_five()
    cert = noncoherence_certificate(order)
    assert verify_certificate(order, cert)


def test_certificate_soundness():
    """Any verified certificate forces incoherence (check on all n=4 classes)."""
    for order in enumerate_orders(4, mode="canonical"):
        assert is_coherent(order)
        with pytest.raises(CoherentOrderError):
            noncoherence_certificate(order)


def test_certificate_rejects_wrong_order():
    # the bundled certificate is tied to its order; against a coherent
    # order some pair must be decreasing
    cert = noncoherent_five_certificate()
    coherent = order_from_weight((7, 10, 16, 20, 22), 5)
    assert not verify_certificate(coherent, cert)


def test_certificate_rejects_noncancelling():
    cert = Certificate(
        pairs=(DisjointPair(0b0001, 0b0010),), multiplicities=(1,)
    )
    assert not verify_certificate(noncoherent_five(), cert)


def test_lp_exactness():
    # fractions survive the pipeline exactly
    A = [[1, 1], [1, -1], [1, 0], [0, 1]]
    b = [1, 0, 0, 0]
    x = lp.feasible_ge(A, b)
    assert x is not None
    assert all(isinstance(v, Fraction) for v in x)
    assert x[0] + x[1] >= 1 and x[0] - x[1] >= 0


def test_farkas_dichotomy():
    A = [[1], [-1]]
    b = [1, 0]  # x >= 1 and x <= 0: infeasible
    assert lp.feasible_ge(A, b) is None
    lam = lp.farkas_ge(A, b)
    assert lam is not None
    assert lam[0] * 1 + lam[1] * -1 == 0
    assert lam[0] * 1 + lam[1] * 0 == 1
