"""Shen's mixed-product embedding and the generalized conformal module.

A conformal vector field xi = sum f_i d_i extends to an operator on
polynomial-coefficient vector valued functions as

    embed(xi) = xi + sum_{i,j} d_i(f_j) E_{i,j}

with E_{i,j} in gl(#vars).  For the conformal generators the matrix part
decomposes as (orthogonal part) + (scalar) * sum_p E_{p,p}; the scalar
multiplies the hidden central element, which acts on the twisted module by
the central charge b.  The module A (x) V(mu) is materialized degree by
degree: each graded slice A_k (x) V(mu) carries exact action matrices for
every generator, and the comparison map phi sending x^a (x) v to J^a(1 (x) v)
is realized as a matrix per degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .linalg import SparseMat
from .ortho import OrthoBasis, build_conformal, build_ortho, theta_images
from .poly import DiffOp, Poly, monomial_basis
from .weights import WeightVec
from .irreps import IrrepData, build_irrep

Exps = Tuple[int, ...]

DEFAULT_SLICE_CAP = 4096


class ExtendedOp:
    """Vector field plus polynomial-coefficient gl part (and nothing else)."""

    __slots__ = ("num_vars", "field", "gl")

    def __init__(self, num_vars: int, fld: DiffOp, gl: Optional[Dict[Exps, SparseMat]] = None):
        self.num_vars = num_vars
        self.field = fld
        self.gl = {}
        for e, M in (gl or {}).items():
            if M.rows != num_vars or M.cols != num_vars:
                raise ValueError("gl coefficient has wrong size")
            if not M.is_zero():
                self.gl[e] = M

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExtendedOp):
            return NotImplemented
        return self.num_vars == other.num_vars and self.field == other.field and self.gl == other.gl

    def __add__(self, other: "ExtendedOp") -> "ExtendedOp":
        gl = dict(self.gl)
        for e, M in other.gl.items():
            gl[e] = gl.get(e, SparseMat(self.num_vars, self.num_vars)) + M
        return ExtendedOp(self.num_vars, self.field + other.field, gl)

    def scale(self, c) -> "ExtendedOp":
        return ExtendedOp(self.num_vars, self.field.scale(c), {e: M.scale(c) for e, M in self.gl.items()})

    def __sub__(self, other: "ExtendedOp") -> "ExtendedOp":
        return self + other.scale(-1)

    def is_zero(self) -> bool:
        return self.field.is_zero() and not self.gl

    def bracket(self, other: "ExtendedOp") -> "ExtendedOp":
        """[d1+A1, d2+A2] = [d1,d2] + [A1,A2] + d1(A2) - d2(A1)."""
        nv = self.num_vars
        fld = (self.field @ other.field) - (other.field @ self.field)
        gl: Dict[Exps, SparseMat] = {}

        def acc(e: Exps, M: SparseMat):
            cur = gl.get(e)
            gl[e] = M if cur is None else cur + M

        for e1, M1 in self.gl.items():
            for e2, M2 in other.gl.items():
                acc(tuple(a + b for a, b in zip(e1, e2)), M1.bracket(M2))
        for e2, M2 in other.gl.items():
            for de, c in self.field.apply(Poly.monomial(nv, e2)).terms.items():
                acc(de, M2.scale(c))
        for e1, M1 in self.gl.items():
            for de, c in other.field.apply(Poly.monomial(nv, e1)).terms.items():
                acc(de, M1.scale(-c))
        return ExtendedOp(nv, fld, gl)

    def central_orthogonal_split(self, ob: OrthoBasis) -> List[Tuple[Exps, Fraction, Dict[int, Fraction]]]:
        """Per monomial: (exponent, central coefficient, orthogonal coefficients).

        Raises ValueError if some matrix coefficient is not (orthogonal) +
        (scalar identity), i.e. the operator escapes the twisted algebra.
        """
        nv = self.num_vars
        out = []
        for e, M in sorted(self.gl.items()):
            central = M.trace() / nv
            rest = M - SparseMat.identity(nv).scale(central)
            coeffs = ob.expand(rest)  # raises if not in the orthogonal span
            out.append((e, central, coeffs))
        return out


def shen_embed(xi: DiffOp) -> ExtendedOp:
    """The mixed-product extension of a polynomial vector field."""
    if not xi.is_vector_field():
        raise ValueError("mixed-product embedding is defined for vector fields only")
    nv = xi.num_vars
    gl: Dict[Exps, SparseMat] = {}
    for j in range(nv):
        fj = xi.coefficient_of_partial(j)
        if fj.is_zero():
            continue
        for i in range(nv):
            dfj = fj.diff(i)
            for e, c in dfj.terms.items():
                M = gl.setdefault(e, SparseMat(nv, nv))
                gl[e] = M + SparseMat(nv, nv, {(i, j): c})
    return ExtendedOp(nv, xi, gl)


def _unit_exps(nv: int, pos: int) -> Exps:
    e = [0] * nv
    e[pos] = 1
    return tuple(e)


def shen_closed_forms(n: int, series: str) -> Dict[str, ExtendedOp]:
    """The stated closed forms of the embedding on each conformal generator."""
    conf = build_conformal(n, series)
    nv = conf.num_vars
    zero = (0,) * nv

    def E(a: int, b: int, s: int = 1) -> SparseMat:
        return SparseMat(nv, nv, {(conf.var_pos(a), conf.var_pos(b)): Fraction(s)})

    eye = SparseMat.identity(nv)
    var_range = range(1, 2 * n + 1) if series == "D" else range(0, 2 * n + 1)
    out: Dict[str, ExtendedOp] = {}
    out["D"] = ExtendedOp(nv, conf.op("D"), {zero: eye})
    for r in var_range:
        out[f"d_{r}"] = ExtendedOp(nv, conf.op(f"d_{r}"), {})
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            out[f"A_{{{i},{j}}}"] = ExtendedOp(nv, conf.op(f"A_{{{i},{j}}}"), {zero: E(i, j) - E(n + j, n + i)})
            if i < j:
                out[f"B_{{{i},{j}}}"] = ExtendedOp(nv, conf.op(f"B_{{{i},{j}}}"), {zero: E(i, n + j) - E(j, n + i)})
                out[f"C_{{{i},{j}}}"] = ExtendedOp(nv, conf.op(f"C_{{{i},{j}}}"), {zero: E(n + i, j) - E(n + j, i)})
    for i in range(1, n + 1):
        glp: Dict[Exps, SparseMat] = {}
        glm: Dict[Exps, SparseMat] = {}
        for p in range(1, n + 1):
            xnp = _unit_exps(nv, conf.var_pos(n + p))
            xp = _unit_exps(nv, conf.var_pos(p))
            glp[xnp] = glp.get(xnp, SparseMat(nv, nv)) + (E(i, n + p) - E(p, n + i))
            glp[xp] = glp.get(xp, SparseMat(nv, nv)) + (E(i, p) - E(n + p, n + i))
            glm[xnp] = glm.get(xnp, SparseMat(nv, nv)) + (E(n + i, n + p) - E(p, i))
            glm[xp] = glm.get(xp, SparseMat(nv, nv)) + (E(n + i, p) - E(n + p, i))
        xi = _unit_exps(nv, conf.var_pos(i))
        xni = _unit_exps(nv, conf.var_pos(n + i))
        glp[xi] = glp.get(xi, SparseMat(nv, nv)) + eye
        glm[xni] = glm.get(xni, SparseMat(nv, nv)) + eye
        if series == "B":
            x0 = _unit_exps(nv, 0)
            glp[x0] = glp.get(x0, SparseMat(nv, nv)) + (E(i, 0) - E(0, n + i))
            glm[x0] = glm.get(x0, SparseMat(nv, nv)) + (E(n + i, 0) - E(0, i))
        out[f"J_{i}"] = ExtendedOp(nv, conf.op(f"J_{i}"), glp)
        out[f"J_{n + i}"] = ExtendedOp(nv, conf.op(f"J_{n + i}"), glm)
    if series == "B":
        for i in range(1, n + 1):
            out[f"K_{i}"] = ExtendedOp(nv, conf.op(f"K_{i}"), {zero: E(0, i) - E(n + i, 0)})
            out[f"K_{n + i}"] = ExtendedOp(nv, conf.op(f"K_{n + i}"), {zero: E(0, n + i) - E(i, 0)})
        gl0: Dict[Exps, SparseMat] = {}
        for s in range(1, n + 1):
            gl0[_unit_exps(nv, conf.var_pos(s))] = E(0, s) - E(n + s, 0)
            gl0[_unit_exps(nv, conf.var_pos(n + s))] = E(0, n + s) - E(s, 0)
        x0 = _unit_exps(nv, 0)
        gl0[x0] = gl0.get(x0, SparseMat(nv, nv)) + eye
        out["J_0"] = ExtendedOp(nv, conf.op("J_0"), gl0)
    return out


def verify_shen_monomorphism(n: int, series: str) -> Dict[str, object]:
    """embed([xi,zeta]) = [embed(xi), embed(zeta)] for all generator pairs,
    closed-form agreement, and containment in the twisted algebra."""
    conf = build_conformal(n, series)
    small = build_ortho(2 * n if series == "D" else 2 * n + 1)
    labels = conf.labels()
    embeds = {lbl: shen_embed(conf.op(lbl)) for lbl in labels}
    failures: List[Dict[str, str]] = []
    for a in range(len(labels)):
        for bdx in range(a + 1, len(labels)):
            la, lb = labels[a], labels[bdx]
            from .poly import bracket as dbracket

            lhs = shen_embed(dbracket(conf.op(la), conf.op(lb)))
            rhs = embeds[la].bracket(embeds[lb])
            if lhs != rhs:
                failures.append({"identity": f"embed[{la},{lb}]", "status": "fail"})
    closed = shen_closed_forms(n, series)
    closed_fail = [lbl for lbl in labels if embeds[lbl] != closed[lbl]]
    containment_fail = []
    central_parts: Dict[str, List[Tuple[Exps, Fraction]]] = {}
    for lbl in labels:
        try:
            split = embeds[lbl].central_orthogonal_split(small)
            central_parts[lbl] = [(e, c) for e, c, _ in split if c != 0]
        except ValueError:
            containment_fail.append(lbl)
    return {
        "series": series,
        "n": n,
        "pairs_checked": len(labels) * (len(labels) - 1) // 2,
        "bracket_failures": failures,
        "closed_form_failures": closed_fail,
        "containment_failures": containment_fail,
        "central_parts": central_parts,
        "ok": not failures and not closed_fail and not containment_fail,
    }


# ---------------------------------------------------------------------------
# The generalized conformal module, slice by slice


@dataclass
class GradedSlice:
    """One graded component A_k (x) V(mu) with its action matrices.

    Basis order is monomial-major: index = (monomial position) * dim V + r.
    `down`, `flat`, `up` map generator labels to matrices into degrees k-1,
    k, k+1 respectively.
    """

    mu: WeightVec
    b: Fraction
    k: int
    monomials: List[Exps]
    dim: int
    down: Dict[str, SparseMat]
    flat: Dict[str, SparseMat]
    up: Dict[str, SparseMat]


class ConformalModule:
    """A (x) V(mu) for one series, rank and central charge, built lazily."""

    def __init__(self, mu: WeightVec, b, slice_cap: int = DEFAULT_SLICE_CAP, irrep_cap: int = 512):
        self.mu = mu
        self.series = mu.series
        self.n = mu.n
        self.b = Fraction(b)
        self.slice_cap = slice_cap
        self.conf = build_conformal(self.n, self.series)
        self.num_vars = self.conf.num_vars
        self.small = build_ortho(2 * self.n if self.series == "D" else 2 * self.n + 1)
        self.irrep: IrrepData = build_irrep(mu, irrep_cap)
        self.dim_v = self.irrep.dim
        self._embeds: Dict[str, ExtendedOp] = {}
        self._splits: Dict[str, List[Tuple[Exps, Fraction, Dict[int, Fraction]]]] = {}
        self._monos: Dict[int, List[Exps]] = {}
        self._mono_index: Dict[int, Dict[Exps, int]] = {}
        self._act: Dict[Tuple[str, int], SparseMat] = {}
        self._phi: Dict[int, SparseMat] = {}
        self._small_labels = self.small.labels()
        # ordered by label index, matching the monomial variable order
        if self.series == "D":
            self.j_labels = [f"J_{r}" for r in range(1, 2 * self.n + 1)]
        else:
            self.j_labels = [f"J_{r}" for r in range(0, 2 * self.n + 1)]

    # -- bookkeeping -----------------------------------------------------------

    def monomials_of(self, k: int) -> List[Exps]:
        if k < 0:
            return []
        hit = self._monos.get(k)
        if hit is None:
            hit = monomial_basis(self.num_vars, k)
            self._monos[k] = hit
            self._mono_index[k] = {e: i for i, e in enumerate(hit)}
        return hit

    def slice_dim(self, k: int) -> int:
        return len(self.monomials_of(k)) * self.dim_v

    def mono_index(self, k: int) -> Dict[Exps, int]:
        self.monomials_of(k)
        return self._mono_index[k]

    def _check_cap(self, k: int):
        d = self.slice_dim(k)
        if d > self.slice_cap:
            raise ValueError(f"slice dimension {d} at degree {k} exceeds cap {self.slice_cap}")

    def basis_index(self, k: int, e: Exps, r: int) -> int:
        return self.mono_index(k)[e] * self.dim_v + r

    def degree_shift(self, label: str) -> int:
        if label.startswith("d_"):
            return -1
        if label.startswith("J_"):
            return 1
        return 0

    def embed_of(self, label: str) -> ExtendedOp:
        hit = self._embeds.get(label)
        if hit is None:
            hit = shen_embed(self.conf.op(label))
            self._embeds[label] = hit
        return hit

    def _split_of(self, label: str) -> List[Tuple[Exps, Fraction, Dict[int, Fraction]]]:
        hit = self._splits.get(label)
        if hit is None:
            hit = self.embed_of(label).central_orthogonal_split(self.small)
            self._splits[label] = hit
        return hit

    # -- action matrices ---------------------------------------------------------

    def action_matrix(self, label: str, k: int) -> SparseMat:
        """Matrix of the generator from slice k to slice k + shift."""
        key = (label, k)
        hit = self._act.get(key)
        if hit is not None:
            return hit
        shift = self.degree_shift(label)
        kt = k + shift
        self._check_cap(k)
        if kt >= 0:
            self._check_cap(kt)
        monos = self.monomials_of(k)
        tdim = self.slice_dim(kt) if kt >= 0 else 0
        data: Dict[Tuple[int, int], Fraction] = {}
        fld = self.embed_of(label).field
        split = self._split_of(label)
        rep_cols = {
            lbl: self.irrep.rep[lbl].col_vectors() for lbl in self._small_labels
        } if self.dim_v > 1 else None
        for mi, e in enumerate(monos):
            base_col = mi * self.dim_v
            # vector-field part acts on the polynomial factor only
            img = fld.apply(Poly.monomial(self.num_vars, e))
            for de, c in img.terms.items():
                ti = self._mono_index[kt][de]
                for r in range(self.dim_v):
                    data[(ti * self.dim_v + r, base_col + r)] = (
                        data.get((ti * self.dim_v + r, base_col + r), Fraction(0)) + c
                    )
            # gl part: orthogonal piece hits V(mu), central piece scales by b
            for ge, central, coeffs in split:
                te = tuple(a + bb for a, bb in zip(e, ge))
                ti = self._mono_index[kt][te]
                if central:
                    cb = central * self.b
                    for r in range(self.dim_v):
                        key2 = (ti * self.dim_v + r, base_col + r)
                        data[key2] = data.get(key2, Fraction(0)) + cb
                for sidx, sc in coeffs.items():
                    lbl = self._small_labels[sidx]
                    if self.dim_v == 1:
                        continue  # V(0): orthogonal part acts as zero
                    cols = rep_cols[lbl]
                    for r in range(self.dim_v):
                        for rr, v in cols[r].items():
                            key2 = (ti * self.dim_v + rr, base_col + r)
                            nv2 = data.get(key2, Fraction(0)) + sc * v
                            if nv2:
                                data[key2] = nv2
                            elif key2 in data:
                                del data[key2]
        out = SparseMat(tdim, len(monos) * self.dim_v, data)
        self._act[key] = out
        return out

    def central_matrix(self, k: int) -> SparseMat:
        """Action of the hidden central element on slice k (is b * Id)."""
        return SparseMat.identity(self.slice_dim(k)).scale(self.b)

    def mult_matrix(self, p: Poly, k: int) -> SparseMat:
        """Multiplication by a homogeneous polynomial, slice k -> k + deg p."""
        d = p.degree()
        monos = self.monomials_of(k)
        self.monomials_of(k + d)
        data = {}
        for mi, e in enumerate(monos):
            for pe, c in p.terms.items():
                te = tuple(a + bb for a, bb in zip(e, pe))
                ti = self._mono_index[k + d][te]
                for r in range(self.dim_v):
                    data[(ti * self.dim_v + r, mi * self.dim_v + r)] = c
        return SparseMat(self.slice_dim(k + d), self.slice_dim(k), data)

    # -- the comparison map phi ---------------------------------------------------

    def phi_matrix(self, k: int) -> SparseMat:
        """Matrix of x^a (x) v  ->  J^a (1 (x) v) on slice k (a square map)."""
        hit = self._phi.get(k)
        if hit is not None:
            return hit
        self._check_cap(k)
        if k == 0:
            out = SparseMat.identity(self.dim_v)
        else:
            prev = self.phi_matrix(k - 1)
            prev_cols = prev.col_vectors()
            monos = self.monomials_of(k)
            jmats = {i: self.action_matrix(self.j_labels[i], k - 1) for i in range(self.num_vars)}
            data: Dict[Tuple[int, int], Fraction] = {}
            for mi, e in enumerate(monos):
                i = next(t for t, x in enumerate(e) if x > 0)
                pe = list(e)
                pe[i] -= 1
                pcol = self._mono_index[k - 1][tuple(pe)] * self.dim_v
                for r in range(self.dim_v):
                    vec = jmats[i].apply(prev_cols[pcol + r])
                    col = mi * self.dim_v + r
                    for row, v in vec.items():
                        data[(row, col)] = v
            out = SparseMat(self.slice_dim(k), self.slice_dim(k), data)
        self._phi[k] = out
        return out

    def slice(self, k: int) -> GradedSlice:
        self._check_cap(k)
        down: Dict[str, SparseMat] = {}
        flat: Dict[str, SparseMat] = {}
        up: Dict[str, SparseMat] = {}
        for label in self.conf.labels():
            M = self.action_matrix(label, k)
            {-1: down, 0: flat, 1: up}[self.degree_shift(label)][label] = M
        return GradedSlice(self.mu, self.b, k, self.monomials_of(k), self.slice_dim(k), down, flat, up)

    # -- the big-algebra action ---------------------------------------------------

    def big_action_table(self) -> List[Tuple[str, str, Fraction]]:
        """(big basis label, conformal label, sign) for every o(2n+2)/o(2n+3)
        basis element; the module action of X is sign * action(conformal)."""
        if getattr(self, "_big_table", None) is not None:
            return self._big_table
        ob_big, conf, images = theta_images(self.n, self.series)
        table = []
        for el in ob_big.elements:
            im = images[el.label]
            found = None
            for lbl in conf.labels():
                op = conf.op(lbl)
                if im == op:
                    found = (lbl, Fraction(1))
                    break
                if im == op.scale(-1):
                    found = (lbl, Fraction(-1))
                    break
            if found is None:
                raise AssertionError(f"theta image of {el.label} is not +-(a generator)")
            table.append((el.label, found[0], found[1]))
        self._big_table = table
        return table

    def action_matrix_big(self, big_label: str, k: int) -> SparseMat:
        """Action of an o(2n+2)/o(2n+3) basis element, by its matrix label."""
        for lbl, conf_lbl, sign in self.big_action_table():
            if lbl == big_label:
                return self.action_matrix(conf_lbl, k).scale(sign)
        raise KeyError(big_label)


def build_slice(mu: WeightVec, b, k: int, slice_cap: int = DEFAULT_SLICE_CAP) -> GradedSlice:
    """Standalone slice constructor (builds a module behind the scenes)."""
    return ConformalModule(mu, b, slice_cap=slice_cap).slice(k)


def phi_map(mu: WeightVec, b, k: int, slice_cap: int = DEFAULT_SLICE_CAP) -> SparseMat:
    return ConformalModule(mu, b, slice_cap=slice_cap).phi_matrix(k)
