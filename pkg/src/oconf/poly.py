"""Exact multivariate polynomials and normal-ordered differential operators.

A Poly maps exponent tuples to nonzero Fraction coefficients.  A DiffOp is a
finite sum  sum_beta  p_beta(x) * d^beta  stored in normal order (polynomial
coefficients to the left of all derivatives); composition re-normal-orders via
the generalized Leibniz rule, so two operators are equal as operators iff
their stored dictionaries are equal.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Dict, Iterator, List, Optional, Tuple

Exps = Tuple[int, ...]


def monomial_basis(num_vars: int, k: int) -> List[Exps]:
    """All exponent tuples of total degree k, in graded-lex order.

    Graded-lex here means lexicographically descending within the fixed
    degree, e.g. (2,0) > (1,1) > (0,2); length is C(k+v-1, v-1).
    """
    if k < 0:
        raise ValueError("degree must be nonnegative")
    if num_vars == 0:
        return [()] if k == 0 else []
    out: List[Exps] = []

    def rec(prefix: Tuple[int, ...], remaining: int, vars_left: int):
        if vars_left == 1:
            out.append(prefix + (remaining,))
            return
        for a in range(remaining, -1, -1):
            rec(prefix + (a,), remaining - a, vars_left - 1)

    rec((), k, num_vars)
    return out


class Poly:
    """Polynomial with exact rational coefficients."""

    __slots__ = ("num_vars", "terms")

    def __init__(self, num_vars: int, terms: Optional[Dict[Exps, Fraction]] = None):
        self.num_vars = num_vars
        if terms is None:
            terms = {}
        clean = {}
        for e, c in terms.items():
            if c == 0:
                continue
            if len(e) != num_vars:
                raise ValueError(f"exponent {e} has wrong arity for {num_vars} variables")
            clean[e] = c
        self.terms = clean

    @classmethod
    def zero(cls, num_vars: int) -> "Poly":
        return cls(num_vars)

    @classmethod
    def const(cls, num_vars: int, c) -> "Poly":
        return cls(num_vars, {(0,) * num_vars: Fraction(c)})

    @classmethod
    def var(cls, num_vars: int, i: int) -> "Poly":
        e = [0] * num_vars
        e[i] = 1
        return cls(num_vars, {tuple(e): Fraction(1)})

    @classmethod
    def monomial(cls, num_vars: int, exps: Exps, c=1) -> "Poly":
        return cls(num_vars, {tuple(exps): Fraction(c)})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.num_vars == other.num_vars and self.terms == other.terms

    def __hash__(self):
        raise TypeError("Poly is not hashable")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return Poly(self.num_vars, terms)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __neg__(self) -> "Poly":
        return self.scale(-1)

    def scale(self, c) -> "Poly":
        c = Fraction(c)
        return Poly(self.num_vars, {e: c * v for e, v in self.terms.items()})

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        terms: Dict[Exps, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return Poly(self.num_vars, terms)

    def diff(self, i: int) -> "Poly":
        terms = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            ne = list(e)
            ne[i] -= 1
            terms[tuple(ne)] = terms.get(tuple(ne), Fraction(0)) + c * e[i]
        return Poly(self.num_vars, terms)

    def diff_multi(self, beta: Exps) -> "Poly":
        terms = {}
        for e, c in self.terms.items():
            coeff = c
            ne = list(e)
            ok = True
            for i, b in enumerate(beta):
                if b == 0:
                    continue
                if e[i] < b:
                    ok = False
                    break
                # falling factorial e_i (e_i - 1) ... (e_i - b + 1)
                for t in range(b):
                    coeff *= e[i] - t
                ne[i] -= b
            if ok and coeff != 0:
                key = tuple(ne)
                terms[key] = terms.get(key, Fraction(0)) + coeff
        return Poly(self.num_vars, terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.num_vars, Fraction(0))

    def _check(self, other: "Poly"):
        if self.num_vars != other.num_vars:
            raise ValueError("variable-count mismatch")

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms, key=lambda t: (-sum(t), tuple(-x for x in t))):
            c = self.terms[e]
            mono = "*".join(f"x{i}^{p}" if p > 1 else f"x{i}" for i, p in enumerate(e) if p)
            if mono:
                bits.append(f"{c}*{mono}" if c != 1 else mono)
            else:
                bits.append(str(c))
        return " + ".join(bits)


class DiffOp:
    """Normal-ordered polynomial-coefficient differential operator."""

    __slots__ = ("num_vars", "terms")

    def __init__(self, num_vars: int, terms: Optional[Dict[Exps, Poly]] = None):
        self.num_vars = num_vars
        if terms is None:
            terms = {}
        clean = {}
        for beta, p in terms.items():
            if len(beta) != num_vars or p.num_vars != num_vars:
                raise ValueError("arity mismatch in DiffOp term")
            if not p.is_zero():
                clean[beta] = p
        self.terms = clean

    @classmethod
    def zero(cls, num_vars: int) -> "DiffOp":
        return cls(num_vars)

    @classmethod
    def mult(cls, p: Poly) -> "DiffOp":
        """Multiplication operator f -> p*f."""
        return cls(p.num_vars, {(0,) * p.num_vars: p})

    @classmethod
    def identity(cls, num_vars: int) -> "DiffOp":
        return cls.mult(Poly.const(num_vars, 1))

    @classmethod
    def partial(cls, num_vars: int, i: int) -> "DiffOp":
        beta = [0] * num_vars
        beta[i] = 1
        return cls(num_vars, {tuple(beta): Poly.const(num_vars, 1)})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, DiffOp):
            return NotImplemented
        return self.num_vars == other.num_vars and self.terms == other.terms

    def __hash__(self):
        raise TypeError("DiffOp is not hashable")

    def __add__(self, other: "DiffOp") -> "DiffOp":
        self._check(other)
        terms = dict(self.terms)
        for beta, p in other.terms.items():
            terms[beta] = terms.get(beta, Poly.zero(self.num_vars)) + p
        return DiffOp(self.num_vars, terms)

    def __sub__(self, other: "DiffOp") -> "DiffOp":
        return self + (-other)

    def __neg__(self) -> "DiffOp":
        return self.scale(-1)

    def scale(self, c) -> "DiffOp":
        return DiffOp(self.num_vars, {b: p.scale(c) for b, p in self.terms.items()})

    def __matmul__(self, other: "DiffOp") -> "DiffOp":
        """Operator composition self . other, re-normal-ordered."""
        self._check(other)
        nv = self.num_vars
        terms: Dict[Exps, Poly] = {}
        for b1, p1 in self.terms.items():
            for b2, p2 in other.terms.items():
                # move d^b1 across p2: sum over gamma <= b1 of C(b1,gamma)
                for gamma in _sub_multi_indices(b1, p2):
                    dp2 = p2.diff_multi(gamma)
                    if dp2.is_zero():
                        continue
                    coeff = 1
                    for bi, gi in zip(b1, gamma):
                        coeff *= comb(bi, gi)
                    beta = tuple(a - g + b for a, g, b in zip(b1, gamma, b2))
                    contrib = (p1 * dp2).scale(coeff)
                    terms[beta] = terms.get(beta, Poly.zero(nv)) + contrib
        return DiffOp(nv, terms)

    def apply(self, f: Poly) -> Poly:
        """Apply the operator to a polynomial, exactly."""
        if self.num_vars != f.num_vars:
            raise ValueError("variable-count mismatch")
        out = Poly.zero(self.num_vars)
        for beta, p in self.terms.items():
            df = f.diff_multi(beta)
            if not df.is_zero():
                out = out + p * df
        return out

    def _check(self, other: "DiffOp"):
        if self.num_vars != other.num_vars:
            raise ValueError("variable-count mismatch")

    def order(self) -> int:
        if not self.terms:
            return -1
        return max(sum(b) for b in self.terms)

    def is_vector_field(self) -> bool:
        """True iff the operator is sum f_i d_i with no zeroth-order part."""
        return all(sum(b) == 1 for b in self.terms)

    def coefficient_of_partial(self, i: int) -> Poly:
        beta = [0] * self.num_vars
        beta[i] = 1
        return self.terms.get(tuple(beta), Poly.zero(self.num_vars))

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for beta in sorted(self.terms, key=lambda b: (sum(b), tuple(-x for x in b))):
            p = self.terms[beta]
            ds = "*".join(f"d{i}^{b}" if b > 1 else f"d{i}" for i, b in enumerate(beta) if b)
            if ds:
                bits.append(f"({p!r})*{ds}")
            else:
                bits.append(f"({p!r})")
        return " + ".join(bits)


def _sub_multi_indices(beta: Exps, p: Poly) -> Iterator[Exps]:
    """Multi-indices gamma <= beta, capped by the variable degrees present in p."""
    caps = [0] * len(beta)
    for e in p.terms:
        for i, x in enumerate(e):
            if x > caps[i]:
                caps[i] = x
    ranges = [range(min(b, c) + 1) for b, c in zip(beta, caps)]

    def rec(i: int, acc: Tuple[int, ...]) -> Iterator[Exps]:
        if i == len(beta):
            yield acc
            return
        for g in ranges[i]:
            yield from rec(i + 1, acc + (g,))

    return rec(0, ())


def bracket(a: DiffOp, b: DiffOp) -> DiffOp:
    """Commutator a.b - b.a of differential operators."""
    return (a @ b) - (b @ a)
