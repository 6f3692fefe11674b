"""The arrangement of all {0,+1,-1}-normal hyperplanes and its invariants.

The characteristic polynomial is computed by counting, over several prime
fields, the vectors all of whose 2^n subset sums are distinct, then
interpolating; an extra prime cross-validates the result, and for n <= 3 an
independent intersection-lattice Moebius computation must agree.  The
absolute value at -1 is the region count (Zaslavsky), which for this
arrangement is 2^n * n! times the number of coherent order classes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np


def normals(n: int) -> list[tuple[int, ...]]:
    """Sign-canonical normal vectors: first nonzero entry +1."""
    out = []
    for v in itertools.product((0, 1, -1), repeat=n):
        nz = next((x for x in v if x), None)
        if nz == 1:
            out.append(v)
    return out


class CrossValidationError(RuntimeError):
    def __init__(self, primes, message):
        self.primes = primes
        super().__init__(f"{message} (primes used: {primes})")


@dataclass(frozen=True)
class CharPoly:
    """Monic integer polynomial, coefficients in descending degree."""

    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x):
        value = 0
        for c in self.coefficients:
            value = value * x + c
        return value

    def integer_roots(self) -> tuple[list[int], tuple[int, ...]]:
        """(roots with multiplicity, remaining coefficient tuple)."""
        coeffs = list(self.coefficients)
        roots = []
        candidates = None
        while len(coeffs) > 1:
            const = coeffs[-1]
            if const == 0:
                roots.append(0)
                coeffs = coeffs[:-1]
                continue
            candidates = [d for d in range(1, abs(const) + 1) if const % d == 0]
            for cand in candidates:
                for root in (cand, -cand):
                    value = 0
                    for c in coeffs:
                        value = value * root + c
                    if value == 0:
                        break
                else:
                    continue
                break
            else:
                break
            # synthetic division by (x - root)
            new = [coeffs[0]]
            for c in coeffs[1:-1]:
                new.append(c + new[-1] * root)
            roots.append(root)
            coeffs = new
        return sorted(roots), tuple(coeffs)

    def __str__(self) -> str:
        terms = []
        deg = self.degree
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            d = deg - i
            if d == 0:
                body = str(abs(c))
            else:
                lead = "" if abs(c) == 1 else str(abs(c))
                body = f"{lead}x" if d == 1 else f"{lead}x^{d}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(terms) if terms else "0"

    def factored_str(self) -> str:
        roots, rest = self.integer_roots()
        parts = []
        for root in roots:
            parts.append(f"(x{-root:+d})" if root else "(x)")
        if len(rest) > 1:
            parts.append(f"({CharPoly(rest)})")
        return "".join(parts) if parts else str(self)


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    for d in range(2, int(q**0.5) + 1):
        if q % d == 0:
            return False
    return True


def _primes_for(n: int, count: int) -> list[int]:
    # a valid point needs 2^n distinct residues, so q must exceed 2^n
    primes = []
    q = max(2 * n, 1 << n) + 1
    while len(primes) < count:
        if _is_prime(q):
            primes.append(q)
        q += 1
    return primes


def point_count(n: int, q: int, chunk: int = 1 << 18) -> int:
    """Number of v in F_q^n with all 2^n subset sums pairwise distinct.

    Any valid point has every coordinate nonzero, and scaling by a nonzero
    field element preserves validity, so only the slab v_1 = 1 is counted
    and the result multiplied by q - 1.
    """
    if n == 1:
        return q - 1
    incidence = np.zeros((n, 1 << n), dtype=np.int64)
    for mask in range(1 << n):
        for i in range(n):
            if mask >> i & 1:
                incidence[i, mask] = 1
    total = 0
    rest = q ** (n - 1)
    for start in range(0, rest, chunk):
        stop = min(start + chunk, rest)
        idx = np.arange(start, stop, dtype=np.int64)
        coords = np.empty((stop - start, n), dtype=np.int64)
        coords[:, 0] = 1
        for i in range(1, n):
            coords[:, i] = idx % q
            idx //= q
        sums = (coords @ incidence) % q
        sums.sort(axis=1)
        distinct = (np.diff(sums, axis=1) > 0).all(axis=1)
        total += int(distinct.sum())
    return total * (q - 1)


def _interpolate(points: list[tuple[int, int]]) -> list[Fraction]:
    """Lagrange interpolation; coefficients descending degree."""
    k = len(points)
    coeffs = [Fraction(0)] * k
    for xi, yi in points:
        # basis polynomial for xi, ascending-degree product of (x - xj)
        basis = [Fraction(1)]
        denom = Fraction(1)
        for xj, _ in points:
            if xj == xi:
                continue
            new = [Fraction(0)] * (len(basis) + 1)
            for d, b in enumerate(basis):
                new[d] += b * (-xj)
                new[d + 1] += b
            basis = new
            denom *= xi - xj
        scale = Fraction(yi) / denom
        for d, b in enumerate(basis):
            coeffs[d] += scale * b
    return list(reversed(coeffs))  # descending


def char_poly(n: int) -> CharPoly:
    """Characteristic polynomial via prime-field point counts.

    Counts at the smallest n+2 primes above 2n; the first n+1 interpolate,
    the last cross-validates.  For n <= 3 the intersection-lattice Moebius
    computation must agree as well.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    primes = _primes_for(n, n + 2)
    counts = [point_count(n, q) for q in primes]
    coeffs = _interpolate(list(zip(primes[: n + 1], counts[: n + 1])))
    if any(c.denominator != 1 for c in coeffs):
        raise CrossValidationError(primes, "interpolation gave non-integer coefficients")
    poly = CharPoly(tuple(int(c) for c in coeffs))
    if poly.coefficients[0] != 1:
        raise CrossValidationError(primes, "interpolated polynomial is not monic")
    if poly(primes[-1]) != counts[-1]:
        raise CrossValidationError(primes, "validation prime disagrees with interpolation")
    if poly(1) != 0:
        raise CrossValidationError(primes, "polynomial does not vanish at 1")
    if n <= 3 and poly.coefficients != char_poly_mobius(n).coefficients:
        raise CrossValidationError(primes, "Moebius-function oracle disagrees")
    return poly


def region_count(n: int) -> int:
    """|chi(-1)|: the number of regions of the arrangement."""
    return abs(char_poly(n)(-1))


# ---------------------------------------------------------------------------
# intersection-lattice oracle (exact linear algebra over Q)


def _rref(rows: list[list[Fraction]]) -> tuple[tuple[Fraction, ...], ...]:
    mat = [list(r) for r in rows]
    out = []
    cols = len(mat[0]) if mat else 0
    pivot_col = 0
    while mat and pivot_col < cols:
        pivot = next((r for r in mat if r[pivot_col] != 0), None)
        if pivot is None:
            pivot_col += 1
            continue
        mat.remove(pivot)
        inv = Fraction(1) / pivot[pivot_col]
        pivot = [v * inv for v in pivot]
        mat = [
            [v - r[pivot_col] * p for v, p in zip(r, pivot)] if r[pivot_col] else r
            for r in mat
        ]
        out = [
            [v - r[pivot_col] * p for v, p in zip(r, pivot)] if r[pivot_col] else r
            for r in out
        ]
        out.append(pivot)
        pivot_col += 1
    return tuple(tuple(r) for r in out)


def _in_span(vector, span) -> bool:
    v = [Fraction(x) for x in vector]
    for row in span:
        lead = next((j for j, x in enumerate(row) if x != 0), None)
        if lead is not None and v[lead] != 0:
            f = v[lead]
            v = [a - f * b for a, b in zip(v, row)]
    return all(x == 0 for x in v)


def char_poly_mobius(n: int) -> CharPoly:
    """Independent oracle: build the intersection lattice and sum Moebius values.

    Flats are identified with the row spans of the normal subsets cutting
    them out; practical for n <= 3 only.
    """
    hyperplanes = [tuple(Fraction(x) for x in v) for v in normals(n)]
    flats: dict[tuple, int] = {}  # rref span -> codimension
    empty = _rref([])
    flats[empty] = 0
    frontier = [empty]
    while frontier:
        new = []
        for span in frontier:
            for h in hyperplanes:
                if _in_span(h, span):
                    continue
                bigger = _rref(list(span) + [list(h)])
                if bigger not in flats:
                    flats[bigger] = len(bigger)
                    new.append(bigger)
        frontier = new
    ordered = sorted(flats, key=len)
    mobius: dict[tuple, int] = {}
    for span in ordered:
        below = sum(
            mobius[other]
            for other in ordered
            if len(other) < len(span) and all(_in_span(row, span) for row in other)
        )
        mobius[span] = 1 if span == empty else -below
    coeffs = [0] * (n + 1)
    for span, mu in mobius.items():
        dim = n - len(span)
        coeffs[n - dim] += mu
    return CharPoly(tuple(coeffs))


# ---------------------------------------------------------------------------
# link to the root system


def root_system(n: int) -> list[tuple[int, ...]]:
    """e_i, then e_i + e_j, then e_i - e_j, both lexicographic in (i, j)."""
    vectors = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        vectors.append(tuple(e))
    for sign in (1, -1):
        for i in range(n):
            for j in range(i + 1, n):
                e = [0] * n
                e[i] = 1
                e[j] = sign
                vectors.append(tuple(e))
    return vectors


def _det_int(mat: list[list[int]]) -> int:
    """Fraction-free (Bareiss) determinant of a small integer matrix."""
    m = [row[:] for row in mat]
    size = len(m)
    sign = 1
    prev = 1
    for k in range(size - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, size) if m[r][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[-1][-1]


def spanning_set_for_normal(v: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Root-system vectors spanning the hyperplane orthogonal to v.

    Uses the positive/negative/zero support of the normal: e_i for zero
    coordinates, differences within same-sign pairs, sums across opposite
    signs.
    """
    n = len(v)
    pos = [i for i in range(n) if v[i] > 0]
    neg = [i for i in range(n) if v[i] < 0]
    zero = [i for i in range(n) if v[i] == 0]
    span = []
    for i in zero:
        e = [0] * n
        e[i] = 1
        span.append(tuple(e))
    for group in (pos, neg):
        for i, j in itertools.combinations(group, 2):
            e = [0] * n
            e[i] = 1
            e[j] = -1
            span.append(tuple(e))
    for i in pos:
        for j in neg:
            e = [0] * n
            e[i] = 1
            e[j] = 1
            span.append(tuple(e))
    return span


def _rank_int(rows: list[tuple[int, ...]]) -> int:
    mat = [[Fraction(x) for x in r] for r in rows]
    return len(_rref(mat))


def verify_discriminantal(n: int) -> bool:
    """Both directions of the root-system description of the arrangement.

    Every sign-canonical normal's hyperplane is spanned by root-system
    vectors, and every hyperplane spanned by n-1 independent root-system
    vectors has a {0,+1,-1} normal.
    """
    roots = root_system(n)
    for v in normals(n):
        span = spanning_set_for_normal(v)
        if any(r not in roots and tuple(-x for x in r) not in roots for r in span):
            return False
        if any(sum(a * b for a, b in zip(r, v)) != 0 for r in span):
            return False
        if _rank_int(span) != n - 1:
            return False
    canonical = set(normals(n))
    for subset in itertools.combinations(roots, n - 1):
        mat = [list(r) for r in subset]
        normal = []
        for j in range(n):
            minor = [row[:j] + row[j + 1 :] for row in mat]
            normal.append((-1) ** j * _det_int(minor) if n > 1 else 1)
        if all(x == 0 for x in normal):
            continue  # not independent, spans no hyperplane
        g = 0
        for x in normal:
            g = gcd(g, abs(x))
        normal = [x // g for x in normal]
        first = next(x for x in normal if x)
        if first < 0:
            normal = [-x for x in normal]
        if any(abs(x) > 1 for x in normal) or tuple(normal) not in canonical:
            return False
    return True
