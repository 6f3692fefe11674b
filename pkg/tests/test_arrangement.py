from fractions import Fraction

from booltermorders.arrangement import (
    CharPoly,
    char_poly_mobius,
    normals,
    point_count,
    region_count,
    root_system,
    verify_discriminantal,
)

EXPECTED_FACTORED = {
    1: "(x-1)",
    2: "(x-1)(x-3)",
    3: "(x-1)(x-5)(x-7)",
    4: "(x-1)(x-11)(x-13)(x-15)",
    5: "(x-1)(x-29)(x-31)(x^2 - 60x + 971)",
}

EXPECTED_REGIONS = {1: 2, 2: 8, 3: 96, 4: 5376, 5: 1981440}


def test_normal_counts():
    assert [len(normals(n)) for n in (1, 2, 3)] == [1, 4, 13]


def test_normals_are_sign_canonical():
    for n in (2, 3, 4):
        for v in normals(n):
            first = next(x for x in v if x)
            assert first == 1
            assert all(x in (-1, 0, 1) for x in v)


def test_char_poly_table(char_polys):
    for n, poly in char_polys.items():
        assert poly.factored_str() == EXPECTED_FACTORED[n]


def test_region_counts(char_polys):
    for n, poly in char_polys.items():
        assert abs(poly(-1)) == EXPECTED_REGIONS[n]
    assert region_count(2) == 8


def test_char_poly_properties(char_polys):
    for n, poly in char_polys.items():
        assert poly.coefficients[0] == 1  # monic
        assert poly(1) == 0  # x-1 always divides


def test_mobius_oracle_agrees(char_polys):
    for n in (1, 2, 3):
        assert char_poly_mobius(n).coefficients == char_polys[n].coefficients


def test_point_count_matches_poly(char_polys):
    # evaluate at a fresh prime not used for interpolation
    poly = char_polys[3]
    q = 101
    assert point_count(3, q) == poly(q)


def test_root_system_order():
    roots = root_system(2)
    assert roots == [(1, 0), (0, 1), (1, 1), (1, -1)]


def test_verify_discriminantal():
    for n in (2, 3, 4):
        assert verify_discriminantal(n)


def test_charpoly_str():
    poly = CharPoly((1, -4, 3))
    assert str(poly) == "x^2 - 4x + 3"
    assert poly.factored_str() == "(x-1)(x-3)"
    assert poly(Fraction(2)) == -1
