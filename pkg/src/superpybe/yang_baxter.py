"""The Poisson Yang-Baxter equation: defects, the tensor/map dictionary and
solutions built from O-operators.

Products of embedded tensors follow one rule.  For homogeneous
X = a1 (x) a2 (x) a3 and Y = b1 (x) b2 (x) b3, where one of each pair is the
unit except in a single shared slot,

    X . Y = (-1)^{|a2||b1| + |a3|(|b1|+|b2|)} (a1 b1) (x) (a2 b2) (x) (a3 b3)

and [X, Y] is the same expression with the bracket in the shared slot.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from . import linalg
from .graded import (GradedSpace, LinearMap, SpaceMismatch, TensorElement, TripleTensor,
                     dual_space, is_dual_symmetric, sign, twist)
from .linalg import ZERO
from .operators import (BilinearForm, OOperator, PreconditionError, form_to_map, is_o_operator,
                        suspend_operator)
from .representation import NotCoherent, Representation, coregular_rep, dual_rep, parity_reversed_rep
from .superalgebra import SuperAlgebra, semidirect_product, verify_coherence

_SLOTS = {"12": (0, 1), "13": (0, 2), "23": (1, 2)}


def _embed(i: int, j: int, legs: str) -> tuple:
    a, b = _SLOTS[legs]
    out = [None, None, None]
    out[a], out[b] = i, j
    return tuple(out)


def embedded_product(algebra: SuperAlgebra, r: TensorElement, first: str, second: str,
                     op: str = "product", s: TensorElement | None = None) -> dict:
    """Coefficients of r_first . s_second (or the bracket) as ``{(i, j, k): c}``.

    ``first`` and ``second`` are leg labels among "12", "13", "23"; ``s``
    defaults to ``r``.
    """
    if r.space != algebra.space:
        raise SpaceMismatch("tensor does not live on the algebra")
    s = r if s is None else s
    cube = algebra.product if op == "product" else algebra.bracket
    ps = algebra.space.parities
    shared = (set(_SLOTS[first]) & set(_SLOTS[second])).pop()
    out: dict[tuple[int, int, int], Fraction] = {}
    left_terms = r.terms()
    right_terms = s.terms()
    for i1, j1, c1 in left_terms:
        X = _embed(i1, j1, first)
        px = [0 if a is None else ps[a] for a in X]
        for i2, j2, c2 in right_terms:
            Y = _embed(i2, j2, second)
            py = [0 if b is None else ps[b] for b in Y]
            coeff = c1 * c2 * sign(px[1] * py[0] + px[2] * (py[0] + py[1]))
            idx = [X[t] if X[t] is not None else Y[t] for t in range(3)]
            for k, c in enumerate(cube[X[shared]][Y[shared]]):
                if c:
                    idx[shared] = k
                    key = tuple(idx)
                    out[key] = out.get(key, ZERO) + coeff * c
    return {k: v for k, v in out.items() if v}


def _accumulate(*parts: tuple[Fraction, dict]) -> dict:
    out: dict = {}
    for c, d in parts:
        for k, v in d.items():
            out[k] = out.get(k, ZERO) + c * v
    return {k: v for k, v in out.items() if v}


def aybe_defect(algebra: SuperAlgebra, r: TensorElement) -> TripleTensor:
    """A(r) = r13 . r12 - (-1)^{|r|} r12 . r23 + r23 . r13."""
    entries = _accumulate((1, embedded_product(algebra, r, "13", "12")),
                          (-sign(r.parity), embedded_product(algebra, r, "12", "23")),
                          (1, embedded_product(algebra, r, "23", "13")))
    return TripleTensor.from_dict(algebra.space, entries)


def cybe_defect(algebra: SuperAlgebra, r: TensorElement) -> TripleTensor:
    """C(r) = [r12, r13] + [r12, r23] + [r13, r23]."""
    entries = _accumulate((1, embedded_product(algebra, r, "12", "13", "bracket")),
                          (1, embedded_product(algebra, r, "12", "23", "bracket")),
                          (1, embedded_product(algebra, r, "13", "23", "bracket")))
    return TripleTensor.from_dict(algebra.space, entries)


@dataclass(frozen=True)
class PybeReport:
    aybe_defect: TripleTensor
    cybe_defect: TripleTensor

    @property
    def is_solution(self) -> bool:
        return self.aybe_defect.is_zero() and self.cybe_defect.is_zero()


def check_pybe(algebra: SuperAlgebra, r: TensorElement) -> PybeReport:
    return PybeReport(aybe_defect(algebra, r), cybe_defect(algebra, r))


def tensor_to_map(r: TensorElement) -> LinearMap:
    """T_r: V* -> V with <v*, T_r(w*)> = (-1)^{|r||w*|} <v* (x) w*, r>."""
    V = r.space
    ps = V.parities
    n = V.dim
    m = tuple(tuple(sign(r.parity * ps[l] + ps[l] * ps[k]) * r.coeffs[k][l] for l in range(n))
              for k in range(n))
    return LinearMap(dual_space(V), V, r.parity, m)


def map_to_tensor(T: LinearMap) -> TensorElement:
    """Inverse of :func:`tensor_to_map` for a homogeneous T: V* -> V."""
    V = T.codomain
    if T.domain != dual_space(V):
        raise SpaceMismatch("map must go from V* to V")
    ps = V.parities
    n = V.dim
    coeffs = tuple(tuple(sign(T.parity * ps[l] + ps[l] * ps[k]) * T.matrix[k][l] for l in range(n))
                   for k in range(n))
    return TensorElement(V, coeffs, T.parity)


class TheoremTrDiagnostic(NamedTuple):
    pybe_solution: bool
    o_operator: bool

    @property
    def agree(self) -> bool:
        return self.pybe_solution == self.o_operator


def check_theorem_tr(algebra: SuperAlgebra, r: TensorElement,
                     coregular: Representation | None = None) -> TheoremTrDiagnostic:
    """Solve-the-PYBE verdict next to the co-regular O-operator verdict for T_r."""
    if coregular is None:
        report = verify_coherence(algebra)
        if not report.holds:
            raise NotCoherent(report)
        coregular = coregular_rep(algebra)
    if not is_dual_symmetric(r):
        raise PreconditionError("tensor must satisfy sigma(r) = -(-1)^{|r|} r")
    return TheoremTrDiagnostic(check_pybe(algebra, r).is_solution,
                               is_o_operator(tensor_to_map(r), coregular))


def random_dual_symmetric(space: GradedSpace, parity: int, rng: random.Random,
                          grid=(-2, -1, 0, 1, 2)) -> TensorElement:
    """Random tensor of the given parity with sigma(r) = -(-1)^{|r|} r and entries in ``grid``.

    The entries t^{ij}, i <= j, are drawn freely; t^{ji} = -(-1)^{|r| + |i||j|} t^{ij}
    is then forced, and diagonal entries vanish unless that sign is +1.
    """
    n = space.dim
    ps = space.parities
    rows = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            if (ps[i] + ps[j]) % 2 != parity:
                continue
            partner = -sign(parity + ps[i] * ps[j])
            if i == j and partner != 1:
                continue
            c = Fraction(rng.choice(grid))
            rows[i][j] = c
            rows[j][i] = partner * c
    return TensorElement(space, rows, parity)


class DegenerateTensor(ValueError):
    pass


def form_from_tensor(algebra: SuperAlgebra, r: TensorElement) -> BilinearForm:
    """B(x, y) = <T_r^{-1}(x), y> for non-degenerate r."""
    T = tensor_to_map(r)
    if not T.is_invertible():
        raise DegenerateTensor("T_r is not invertible")
    inv = T.inverse().matrix
    return BilinearForm(algebra.space, linalg.transpose(inv))


def tensor_from_form(B: BilinearForm) -> TensorElement:
    """The tensor r with T_r = phi^{-1}, phi the map of a non-degenerate form."""
    phi = form_to_map(B)
    if not phi.is_invertible():
        raise DegenerateTensor("form is degenerate")
    return map_to_tensor(phi.inverse())


@dataclass(frozen=True)
class SolutionBundle:
    operator: OOperator
    ambient: SuperAlgebra
    tensor: TensorElement
    report: PybeReport


def operator_tensor(T: LinearMap, ambient: SuperAlgebra, offset: int) -> TensorElement:
    """sum_i T(v_i) (x) v_i* inside (P + V*) (x) (P + V*); V* starts at ``offset``."""
    N = ambient.dim
    rows = [[ZERO] * N for _ in range(N)]
    for k, row in enumerate(T.matrix):
        for i, c in enumerate(row):
            if c:
                rows[k][offset + i] = c
    return TensorElement(ambient.space, rows, T.parity)


def build_solution(algebra: SuperAlgebra, rep: Representation, T: LinearMap) -> SolutionBundle:
    """r = T - (-1)^{|T|} sigma(T) in P x| V* with V* carrying (-R*, -L*, rho*)."""
    report = verify_coherence(algebra)
    if not report.holds:
        raise NotCoherent(report)
    if rep.algebra != algebra:
        raise SpaceMismatch("representation is over a different algebra")
    if T.domain != rep.module or T.codomain != algebra.space:
        raise SpaceMismatch("operator must map the module to the algebra")
    dual = dual_rep(rep)
    ambient = semidirect_product(algebra, dual)
    t = operator_tensor(T, ambient, algebra.dim)
    r = t - sign(T.parity) * twist(t)
    pybe = check_pybe(ambient, r)
    return SolutionBundle(OOperator.check(T, rep), ambient, r, pybe)


class CorollaryVerdicts(NamedTuple):
    operator: bool
    suspended_operator: bool
    solution: bool
    suspended_solution: bool

    @property
    def agree(self) -> bool:
        return len(set(self)) == 1


def corollary_pipeline(algebra: SuperAlgebra, rep: Representation, T: LinearMap) -> CorollaryVerdicts:
    shifted = parity_reversed_rep(rep)
    Ts = suspend_operator(T, rep)
    return CorollaryVerdicts(
        is_o_operator(T, rep),
        is_o_operator(Ts, shifted),
        build_solution(algebra, rep, T).report.is_solution,
        build_solution(algebra, shifted, Ts).report.is_solution,
    )
