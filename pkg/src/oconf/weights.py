"""Weight-lattice combinatorics for the o(2n) and o(2n+1) series.

Covers dominance, the jump sequence of a dominant weight, the half-sum of
positive roots, Pieri decompositions of V(e1) (x) V(mu), Weyl dimensions,
Casimir eigenvalues, the closed-form spectrum of the split Casimir on the
tensor with the natural module, and the excluded central-charge sets that
obstruct irreducibility of the generalized conformal module.

Series tags: "D" for o(2n), "B" for o(2n+1).  Weight coordinates are
half-integers; weights serialize as comma-separated rationals like "3/2,1/2".
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

SERIES = ("D", "B")


def _half_integer(x: Fraction) -> bool:
    return x.denominator in (1, 2)


def _nonneg_integer(x: Fraction) -> bool:
    return x.denominator == 1 and x >= 0


@dataclass(frozen=True)
class WeightVec:
    """A weight sum mu_i e_i of o(2n) (series D) or o(2n+1) (series B)."""

    series: str
    coords: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.series not in SERIES:
            raise ValueError(f"unknown series {self.series!r}")
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))
        for c in self.coords:
            if not _half_integer(c):
                raise ValueError(f"coordinate {c} is not a half-integer")

    @property
    def n(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coords)

    def add_unit(self, i: int, delta: int) -> "WeightVec":
        """mu +- e_i (1-based index i)."""
        c = list(self.coords)
        c[i - 1] += delta
        return WeightVec(self.series, tuple(c))


def parse_weight(text: str, series: str) -> WeightVec:
    parts = [p.strip() for p in text.split(",")]
    try:
        coords = tuple(Fraction(p) for p in parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse weight {text!r}: {exc}") from None
    return WeightVec(series, coords)


def zero_weight(series: str, n: int) -> WeightVec:
    return WeightVec(series, (Fraction(0),) * n)


def epsilon(series: str, n: int, i: int) -> WeightVec:
    """The i-th coordinate weight e_i (1-based)."""
    coords = [Fraction(0)] * n
    coords[i - 1] = Fraction(1)
    return WeightVec(series, tuple(coords))


def is_dominant(mu: WeightVec) -> bool:
    """Membership in the dominant integral cone of the series."""
    c = mu.coords
    n = mu.n
    if mu.series == "D":
        if n < 2:
            return False
        for i in range(n - 1):
            if not _nonneg_integer(c[i] - c[i + 1]):
                return False
        return _nonneg_integer(c[n - 2] + c[n - 1])
    # B series: coordinates in N/2 with integer descents
    if n < 1:
        return False
    for i in range(n - 1):
        if not _nonneg_integer(c[i] - c[i + 1]):
            return False
    return c[n - 1] >= 0


def _require_dominant(mu: WeightVec):
    if not is_dominant(mu):
        raise ValueError(f"weight {mu} is not dominant for series {mu.series}")


@dataclass(frozen=True)
class JumpSeq:
    """Block boundaries n_0=0 < n_1 < ... < n_s = n of equal coordinates."""

    boundaries: Tuple[int, ...]

    @property
    def s(self) -> int:
        return len(self.boundaries) - 1

    @property
    def iota(self) -> int:
        """Length of the leading constant block (n_1)."""
        return self.boundaries[1]

    def block_of(self, i: int) -> int:
        """1-based block index containing coordinate position i (1-based)."""
        for r in range(1, len(self.boundaries)):
            if i <= self.boundaries[r]:
                return r
        raise IndexError(i)


def jump_sequence(mu: WeightVec) -> JumpSeq:
    _require_dominant(mu)
    c = mu.coords
    bounds = [0]
    for i in range(1, mu.n):
        if c[i] != c[i - 1]:
            bounds.append(i)
    bounds.append(mu.n)
    return JumpSeq(tuple(bounds))


def rho(series: str, n: int) -> WeightVec:
    """Half-sum of positive roots; B-series runs through i = n."""
    if series == "D":
        coords = tuple(Fraction(n - i) for i in range(1, n + 1))
    elif series == "B":
        coords = tuple(Fraction(2 * (n - i) + 1, 2) for i in range(1, n + 1))
    else:
        raise ValueError(series)
    return WeightVec(series, coords)


def positive_roots(series: str, n: int) -> List[Tuple[Fraction, ...]]:
    roots: List[Tuple[Fraction, ...]] = []

    def vec(i: int, j: int, sj: int) -> Tuple[Fraction, ...]:
        v = [Fraction(0)] * n
        v[i - 1] += 1
        v[j - 1] += sj
        return tuple(v)

    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            roots.append(vec(i, j, -1))
            roots.append(vec(i, j, +1))
    if series == "B":
        for r in range(1, n + 1):
            v = [Fraction(0)] * n
            v[r - 1] = Fraction(1)
            roots.append(tuple(v))
    return roots


def _inner(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def weyl_dim(mu: WeightVec) -> int:
    """Weyl dimension formula: prod over positive roots of (mu+rho,a)/(rho,a)."""
    _require_dominant(mu)
    r = rho(mu.series, mu.n).coords
    shifted = tuple(m + x for m, x in zip(mu.coords, r))
    num = Fraction(1)
    for alpha in positive_roots(mu.series, mu.n):
        num *= _inner(shifted, alpha) / _inner(r, alpha)
    if num.denominator != 1 or num <= 0:
        raise ArithmeticError(f"non-integral Weyl dimension {num} for {mu}")
    return int(num)


def casimir_eigenvalue(mu: WeightVec) -> Fraction:
    """(mu + 2 rho, mu): scalar action of the quadratic Casimir on V(mu)."""
    r = rho(mu.series, mu.n).coords
    return _inner(tuple(m + 2 * x for m, x in zip(mu.coords, r)), mu.coords)


# ---------------------------------------------------------------------------
# Pieri decomposition of V(e1) (x) V(mu)


@dataclass(frozen=True)
class PieriTerm:
    """One summand of V(e1) (x) V(mu): kind 'raise'/'lower' at coordinate
    `index` (1-based), or kind 'same' (B series only)."""

    kind: str
    index: int
    weight: WeightVec


def pieri_terms(mu: WeightVec) -> List[PieriTerm]:
    _require_dominant(mu)
    c = mu.coords
    n = mu.n
    js = jump_sequence(mu)
    s = js.s
    nb = js.boundaries
    terms: List[PieriTerm] = []

    def raise_at(i: int):
        terms.append(PieriTerm("raise", i, mu.add_unit(i, +1)))

    def lower_at(i: int):
        terms.append(PieriTerm("lower", i, mu.add_unit(i, -1)))

    if mu.series == "D":
        if c[n - 2] + c[n - 1] > 0:
            lower_count = s
        else:
            lower_count = s - 2 + (1 if c[n - 1] == 0 else 0)
        for i in range(1, max(lower_count, 0) + 1):
            lower_at(nb[i])
        for i in range(1, s + 1):
            raise_at(1 + nb[i - 1])
    else:
        if c[n - 1] != 0:
            terms.append(PieriTerm("same", 0, mu))
        lower_count = s - (1 if c[n - 1] == 0 else 0) - (1 if c[n - 1] == Fraction(1, 2) else 0)
        for i in range(1, max(lower_count, 0) + 1):
            lower_at(nb[i])
        for i in range(1, s + 1):
            raise_at(1 + nb[i - 1])

    for t in terms:
        if not is_dominant(t.weight):
            raise AssertionError(f"Pieri produced non-dominant {t.weight} from {mu}")
    return terms


def pieri_decompose(mu: WeightVec) -> List[WeightVec]:
    """Summand highest weights of V(e1) (x) V(mu), canonically ordered."""
    ws = [t.weight for t in pieri_terms(mu)]
    ws.sort(key=lambda w: w.coords, reverse=True)
    return ws


# ---------------------------------------------------------------------------
# Spectrum of the split Casimir on V(e1) (x) V(mu)


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues (distinct, descending) with multiplicities."""

    entries: Tuple[Tuple[Fraction, int], ...]

    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.entries)

    def eigenvalues(self) -> List[Fraction]:
        return [e for e, _ in self.entries]

    def as_charpoly_factors(self) -> List[Tuple[Fraction, int]]:
        return list(self.entries)


def split_casimir_eigenvalue(mu: WeightVec, term: PieriTerm) -> Fraction:
    """Closed-form eigenvalue of the split Casimir on one Pieri summand.

    These are the integral shifts: mu_i+1-i for a raise at i, -(mu_i+2n-i-1)
    (D) or -(mu_i+2n-i) (B) for a lower at i, and -n on the V(mu) block.
    """
    n = mu.n
    if term.kind == "raise":
        i = term.index
        return mu.coords[i - 1] + 1 - i
    if term.kind == "lower":
        i = term.index
        if mu.series == "D":
            return Fraction(1 + i - 2 * n) - mu.coords[i - 1]
        return Fraction(i - 2 * n) - mu.coords[i - 1]
    if term.kind == "same":
        return Fraction(-n)
    raise ValueError(term.kind)


def omega_tilde_spectrum(mu: WeightVec) -> Spectrum:
    """Spectrum of the split Casimir on V(e1) (x) V(mu), multiplicities from
    the Weyl dimensions of the matching Pieri summands."""
    _require_dominant(mu)
    acc: Dict[Fraction, int] = {}
    for term in pieri_terms(mu):
        lam = split_casimir_eigenvalue(mu, term)
        acc[lam] = acc.get(lam, 0) + weyl_dim(term.weight)
    entries = tuple(sorted(acc.items(), key=lambda t: t[0], reverse=True))
    return Spectrum(entries)


# ---------------------------------------------------------------------------
# Excluded central-charge sets


@dataclass(frozen=True)
class LadderSet:
    """The set {base - k*step : k in N} of downward-shifted values."""

    name: str
    base: Fraction
    step: Fraction

    def contains(self, b: Fraction) -> bool:
        d = (self.base - Fraction(b)) / self.step
        return d.denominator == 1 and d >= 0

    def describe(self) -> str:
        lattice = "N/2" if self.step == Fraction(1, 2) else "N"
        return f"{self.name} = {self.base}-{lattice}"


@dataclass(frozen=True)
class CriticalSet:
    """Union of ladders excluded by the irreducibility theorems.

    For mu = 0 the set is exactly -N (membership is equivalent to
    reducibility); for mu != 0 it is only known to be sufficient to avoid.
    """

    components: Tuple[LadderSet, ...]
    exact: bool

    def violated(self, b: Fraction) -> Optional[LadderSet]:
        for comp in self.components:
            if comp.contains(b):
                return comp
        return None

    def contains(self, b: Fraction) -> bool:
        return self.violated(b) is not None


def critical_b_set(mu: WeightVec) -> CriticalSet:
    n = mu.n
    _require_dominant(mu)
    if mu.is_zero():
        return CriticalSet((LadderSet("-N", Fraction(0), Fraction(1)),), exact=True)
    c = mu.coords
    js = jump_sequence(mu)
    comps: List[LadderSet] = []
    if mu.series == "D":
        comps.append(LadderSet("n-1-N/2", Fraction(n - 1), Fraction(1, 2)))
        if c[n - 2] == -c[n - 1] > 0 and js.s == 2:
            comps.append(LadderSet("Theta(mu)", c[0] + n - 1, Fraction(1)))
        else:
            comps.append(LadderSet("Theta(mu)", c[0] + 2 * n - js.boundaries[1] - 1, Fraction(1)))
    else:
        comps.append(LadderSet("n-N/2", Fraction(n), Fraction(1, 2)))
        if all(x == Fraction(1, 2) for x in c):
            pass  # Theta(mu) is empty for the spin weight
        else:
            comps.append(LadderSet("Theta(mu)", c[0] + 2 * n - js.boundaries[1], Fraction(1)))
    return CriticalSet(tuple(comps), exact=False)
