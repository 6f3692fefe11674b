import itertools

import pytest

from booltermorders.core import (
    DisjointPair,
    OrderError,
    ParseError,
    TermOrder,
    canonicalize,
    canonicalize_brute_force,
    complement,
    full_mask,
    is_canonical,
    is_valid,
    mask_of,
    parse_order,
    reduced_pair,
    relabel,
    serialize_order,
    validate,
)
from booltermorders.enumeration import enumerate_orders


def lex_order(n):
    chain = sorted(range(1 << n), key=lambda m: tuple(-(m >> i & 1) for i in range(n)))
    chain.sort(key=lambda m: m.bit_length())
    # graded lex by weight sums 1,2,4,... is simply the numeric order
    return TermOrder.from_chain(n, sorted(range(1 << n)))


def test_from_chain_roundtrip():
    order = lex_order(3)
    assert order.chain == tuple(range(8))
    assert order.rank[0] == 0


def test_invalid_chain_rejected():
    assert not validate(TermOrder.from_chain(2, [1, 0, 2, 3]))  # empty set not minimal
    assert validate(TermOrder(2, (0, 1, 1, 3))).structural  # not a permutation
    with pytest.raises(OrderError):
        TermOrder(2, (0, 1, 2))  # wrong length


def test_validate_catches_union_violation():
    # swap {1,3} and {2,3}: then 1 < 2 but 2,3 < 1,3
    chain = [0b000, 0b001, 0b010, 0b011, 0b100, 0b110, 0b101, 0b111]
    order = TermOrder.from_chain(3, chain)
    report = validate(order)
    assert not report
    assert report.violations
    assert not is_valid(order)


def test_union_axiom_exhaustive_n3():
    for order in enumerate_orders(3, mode="all"):
        rank = order.rank
        fm = full_mask(3)
        for a in range(8):
            for b in range(8):
                if a & b:
                    continue
                g = fm & ~(a | b)
                s = g
                while True:
                    assert (rank[a] < rank[b]) == (rank[a | s] < rank[b | s])
                    if s == 0:
                        break
                    s = (s - 1) & g


def test_complement_duality():
    for n in (2, 3, 4):
        for order in enumerate_orders(n, mode="canonical"):
            top = (1 << n) - 1
            for mask in range(1 << n):
                assert order.rank[mask] + order.rank[complement(mask, n)] == top


def test_disjoint_pair_invariants():
    with pytest.raises(ValueError):
        DisjointPair(0b011, 0b010)
    with pytest.raises(ValueError):
        DisjointPair(0, 0)
    assert str(DisjointPair(0b1000, 0b0011)) == "4 < 1,2"


def test_reduced_pair():
    assert reduced_pair(0b0111, 0b1101) == (0b0010, 0b1000)


def test_canonicalize_matches_brute_force():
    for n in (2, 3, 4):
        for order in enumerate_orders(n, mode="all"):
            assert canonicalize(order) == canonicalize_brute_force(order)


def test_canonical_orbit():
    order = next(enumerate_orders(4, mode="canonical"))
    assert is_canonical(order)
    for perm in itertools.permutations(range(4)):
        assert canonicalize(relabel(order, perm)) == order


def test_parse_serialize_roundtrip():
    for order in enumerate_orders(3, mode="canonical"):
        assert parse_order(serialize_order(order)) == order


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_order("n=2\n-\n1\n2\n")  # missing 1,2
    with pytest.raises(ParseError):
        parse_order("")
    with pytest.raises(ParseError):
        parse_order("n=2\n-\n1\n3\n1,2\n")  # element out of range


def test_parse_without_header():
    text = "-\n1\n2\n1,2\n"
    order = parse_order(text)
    assert order.n == 2
    assert order.chain == (0, 1, 2, 3)


def test_mask_of():
    assert mask_of([1, 3]) == 0b101
