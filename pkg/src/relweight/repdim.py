"""Dimension counts for free Lie algebras and irreducible gl_g-modules.

Also the single-irreducible lower bound used when showing that the orbit of
a parabolic piece of ``Gr^W_{-m}`` has positive codimension: the ``gl_g``
module ``[k, k]`` (``m = 2k``) or ``[k, k, 1]`` (``m = 2k - 1``) sits inside
``Gr^M_2 Gr^W_{-m}``, while ``Gr^M_2 sp(H)`` has dimension ``g(g+1)/2``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, prod
from typing import Iterator, Sequence


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius is defined for positive integers")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def witt_dim(r: int, m: int) -> int:
    """Dimension of the degree ``m`` part of the free Lie algebra on ``r`` generators."""
    if r < 1 or m < 1:
        raise ValueError("rank and degree must be positive")
    total = sum(mobius(d) * r ** (m // d) for d in divisors(m))
    assert total % m == 0
    return total // m


def lyndon_words(r: int, m: int) -> Iterator[tuple[int, ...]]:
    """Lyndon words of length exactly ``m`` over ``{0..r-1}`` (Duval's generation)."""
    w = [-1]
    while w:
        w[-1] += 1
        if len(w) == m:
            yield tuple(w)
        k = len(w)
        while len(w) < m:
            w.append(w[len(w) - k])
        while w and w[-1] == r - 1:
            w.pop()


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Sequence[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"{list(parts)} is not a partition")
        return super().__new__(cls, parts)

    @property
    def length(self) -> int:
        return len(self)

    def conjugate(self) -> Partition:
        if not self:
            return Partition()
        return Partition([sum(1 for p in self if p > j) for j in range(self[0])])

    def cells(self) -> Iterator[tuple[int, int]]:
        for i, p in enumerate(self):
            for j in range(p):
                yield i, j


def _check_length(lam: Partition, g: int) -> None:
    if lam.length > g:
        raise ValueError(f"partition {list(lam)} has more than {g} rows")


def gl_irrep_dim(lam: Sequence[int], g: int) -> int:
    """Dimension of the irreducible ``gl_g``-module with highest weight ``lam`` (hook-content)."""
    lam = Partition(lam)
    _check_length(lam, g)
    conj = lam.conjugate()
    num = Fraction(1)
    for i, j in lam.cells():
        hook = (lam[i] - j - 1) + (conj[j] - i - 1) + 1
        num *= Fraction(g + j - i, hook)
    assert num.denominator == 1
    return int(num)


def ssyt_count(lam: Sequence[int], g: int) -> int:
    """Number of semistandard Young tableaux of shape ``lam`` with entries in ``1..g``.

    Brute-force cell-by-cell filling; only meant for small shapes.
    """
    lam = Partition(lam)
    _check_length(lam, g)
    cells = list(lam.cells())
    filling: dict[tuple[int, int], int] = {}

    def fill(idx: int) -> int:
        if idx == len(cells):
            return 1
        i, j = cells[idx]
        lo = 1
        if j > 0:
            lo = max(lo, filling[(i, j - 1)])
        if i > 0:
            lo = max(lo, filling[(i - 1, j)] + 1)
        total = 0
        for v in range(lo, g + 1):
            filling[(i, j)] = v
            total += fill(idx + 1)
        filling.pop((i, j), None)
        return total

    return fill(0)


def paper_dim_kk(g: int, k: int) -> int:
    """Closed form for ``dim V_[k,k]``:
    ``(g-1)(g+k-1) prod_{j=0}^{k-2} (g+j)^2 / (k! (k+1)!)``."""
    num = (g - 1) * (g + k - 1) * prod((g + j) ** 2 for j in range(k - 1))
    den = factorial(k) * factorial(k + 1)
    assert num % den == 0
    return num // den


def paper_dim_kk1(g: int, k: int) -> int:
    """Closed form for ``dim V_[k,k,1]``:
    ``(g-1)(g-2)(g+k-1) prod_{j=0}^{k-2} (g+j)^2 / ((k-1)! (k+2)!)``."""
    num = (g - 1) * (g - 2) * (g + k - 1) * prod((g + j) ** 2 for j in range(k - 1))
    den = factorial(k - 1) * factorial(k + 2)
    assert num % den == 0
    return num // den


def partition_for_degree(m: int) -> Partition:
    """``[k, k]`` when ``m = 2k``, ``[k, k, 1]`` when ``m = 2k - 1``."""
    if m < 1:
        raise ValueError("degree must be positive")
    k = (m + 1) // 2
    return Partition([k, k]) if m % 2 == 0 else Partition([k, k, 1])


def irrep_dim_for_degree(g: int, m: int) -> int:
    k = (m + 1) // 2
    return paper_dim_kk(g, k) if m % 2 == 0 else paper_dim_kk1(g, k)


def sp_top_dim(g: int) -> int:
    """``dim Gr^M_2 sp(H) = g(g+1)/2`` for a Lagrangian curve system."""
    return g * (g + 1) // 2


def codim_bound(g: int, m: int) -> int:
    """One-irreducible lower bound ``dim V_lambda(m) - g(g+1)/2`` on the orbit codimension."""
    if g < 3:
        raise ValueError("the bound is only stated for genus at least 3")
    return irrep_dim_for_degree(g, m) - sp_top_dim(g)


def theorem_threshold(g: int) -> int:
    """Smallest ``m`` for which properness is asserted in genus ``g``."""
    if g < 3:
        raise ValueError("genus must be at least 3")
    if g == 3:
        return 4
    if g <= 6:
        return 2
    return 1


@dataclass(frozen=True)
class DimRow:
    g: int
    m: int
    partition: Partition
    dim: int
    bound: int

    @property
    def covered(self) -> bool:
        return self.m >= theorem_threshold(self.g)

    @property
    def sufficient(self) -> bool:
        return self.bound > 0

    def as_dict(self) -> dict:
        return {"g": self.g, "m": self.m, "partition": list(self.partition),
                "dim": self.dim, "bound": self.bound, "covered": self.covered,
                "sufficient": self.sufficient}


def dims_table(genera: Sequence[int], degrees: Sequence[int]) -> list[DimRow]:
    rows = []
    for g in genera:
        for m in degrees:
            rows.append(DimRow(g, m, partition_for_degree(m), irrep_dim_for_degree(g, m),
                               codim_bound(g, m)))
    return rows


def insufficient_pairs(genera: Sequence[int] = range(3, 11),
                       degrees: Sequence[int] = range(1, 9)) -> list[tuple[int, int]]:
    """Pairs ``(g, m)`` covered by the theorem where the one-irreducible bound is not positive."""
    return [(r.g, r.m) for r in dims_table(genera, degrees) if r.covered and not r.sufficient]


def structural_dims(g: int, n: int | None = None) -> dict[str, int]:
    """Dimensions of the modules that appear next to the codimension estimate.

    ``n`` is the rank of the free group for ``Hom(V, Λ²V)``; it defaults to ``g``.
    """
    if g < 2:
        raise ValueError("genus must be at least 2")
    n = g if n is None else n
    hom_l2 = g * witt_dim(g, 2)
    return {
        "wedge3_H": comb(2 * g, 3),
        "hom_A_L2A": hom_l2,
        "hom_A_L3A": g * witt_dim(g, 3),
        "hom_V_wedge2V": n * comb(n, 2),
        "wedge2_hom_A_L2A": comb(hom_l2, 2),
    }
