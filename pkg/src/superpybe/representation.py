"""Representations (V; L, R, rho) of a Poisson superalgebra and derived constructions."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as cartesian
from typing import Sequence

from . import linalg
from .graded import (GradedSpace, LinearMap, SpaceMismatch, direct_sum, dual_space, koszul_sign,
                     parity_shift)
from .linalg import ZERO, Matrix
from .superalgebra import (DefectReport, SuperAlgebra, Witness, verify_coherence)


class UnverifiedRepresentation(ValueError):
    def __init__(self, report: DefectReport):
        super().__init__(f"representation fails its axioms ({report.count()} witnesses)")
        self.report = report


class NotCoherent(ValueError):
    def __init__(self, report: DefectReport):
        super().__init__(f"algebra is not coherent ({report.count()} defective triples)")
        self.report = report


class NotDualizable(ValueError):
    def __init__(self, report: DefectReport):
        first = report.witnesses[0].indices if report.witnesses else None
        super().__init__(f"dualizability condition fails, first witness {first}")
        self.report = report


@dataclass(frozen=True)
class Representation:
    """``L[a]``, ``R[a]``, ``rho[a]`` are the actions of the algebra basis element a."""

    algebra: SuperAlgebra
    module: GradedSpace
    L: tuple[LinearMap, ...]
    R: tuple[LinearMap, ...]
    rho: tuple[LinearMap, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        P = self.algebra.space
        for label in ("L", "R", "rho"):
            maps = tuple(getattr(self, label))
            if len(maps) != P.dim:
                raise SpaceMismatch(f"{label} needs one map per algebra basis element")
            for a, m in enumerate(maps):
                if m.domain != self.module or m.codomain != self.module:
                    raise SpaceMismatch(f"{label}[{a}] does not act on the module")
                if m.parity != P.parity(a):
                    raise SpaceMismatch(f"{label}[{a}] must have the parity of {P.names[a]}")
            object.__setattr__(self, label, maps)

    @classmethod
    def from_matrices(cls, algebra, module, L, R, rho, name="") -> Representation:
        def wrap(ms):
            return tuple(LinearMap(module, module, algebra.space.parity(a), m) for a, m in enumerate(ms))
        return cls(algebra, module, wrap(L), wrap(R), wrap(rho), name)

    def action(self, label: str, coeffs: Sequence[Fraction]) -> Matrix:
        """Matrix of L_x, R_x or rho(x) for x given by algebra coefficients."""
        d = self.module.dim
        out = [[ZERO] * d for _ in range(d)]
        for a, c in enumerate(coeffs):
            if c:
                for i, row in enumerate(getattr(self, label)[a].matrix):
                    for j, x in enumerate(row):
                        if x:
                            out[i][j] += c * x
        return tuple(tuple(r) for r in out)


def _lin(*terms: tuple[Fraction, Matrix]) -> Matrix:
    out = None
    for c, m in terms:
        if not c:
            continue
        scaled = linalg.scale(c, m)
        out = scaled if out is None else linalg.add(out, scaled)
    if out is None:
        n = len(terms[0][1])
        return linalg.zeros(n, n)
    return out


def _matrix_witnesses(law: str, prefix: tuple[int, ...], m: Matrix) -> list[Witness]:
    """One witness per module basis vector on which the defect operator is nonzero."""
    out = []
    for v in range(len(m)):
        col = tuple(row[v] for row in m)
        if any(col):
            out.append(Witness(law, prefix + (v,), col))
    return out


REP_LAWS = ("left-module", "right-module", "bimodule", "lie-module",
            "left-bracket", "right-bracket", "rho-product")


def verify_representation(rep: Representation) -> DefectReport:
    """All representation laws over basis pairs (x, y), witnessed per module vector.

    Associative bimodule:  L_{xy} = L_x L_y,  R_{xy} = (-1)^{|x||y|} R_y R_x,
                           R_y L_x = (-1)^{|x||y|} L_x R_y
    Lie module:            rho([x,y]) = rho(x)rho(y) - (-1)^{|x||y|} rho(y)rho(x)
    Compatibility:         L_{[x,y]} = rho(x)L_y - (-1)^{|x||y|} L_y rho(x)
                           R_{[x,y]} = rho(x)R_y - (-1)^{|x||y|} R_y rho(x)
                           rho(xy)  = L_x rho(y) + (-1)^{|x||y|} R_y rho(x)
    """
    P = rep.algebra
    ps = P.space.parities
    n = P.dim
    L = [m.matrix for m in rep.L]
    R = [m.matrix for m in rep.R]
    rho = [m.matrix for m in rep.rho]
    mm = linalg.matmul
    found = {law: [] for law in REP_LAWS}
    for a, b in cartesian(range(n), repeat=2):
        s = koszul_sign(ps[a], ps[b])
        xy = P.product[a][b]
        xb = P.bracket[a][b]
        checks = {
            "left-module": _lin((1, rep.action("L", xy)), (-1, mm(L[a], L[b]))),
            "right-module": _lin((1, rep.action("R", xy)), (-s, mm(R[b], R[a]))),
            "bimodule": _lin((1, mm(R[b], L[a])), (-s, mm(L[a], R[b]))),
            "lie-module": _lin((1, rep.action("rho", xb)), (-1, mm(rho[a], rho[b])),
                               (s, mm(rho[b], rho[a]))),
            "left-bracket": _lin((1, rep.action("L", xb)), (-1, mm(rho[a], L[b])),
                                 (s, mm(L[b], rho[a]))),
            "right-bracket": _lin((1, rep.action("R", xb)), (-1, mm(rho[a], R[b])),
                                  (s, mm(R[b], rho[a]))),
            "rho-product": _lin((1, rep.action("rho", xy)), (-1, mm(L[a], rho[b])),
                                (-s, mm(R[b], rho[a]))),
        }
        for law, m in checks.items():
            found[law] += _matrix_witnesses(law, (a, b), m)
    return DefectReport("representation", tuple(w for law in REP_LAWS for w in found[law]), REP_LAWS)


def verify_dualizable(rep: Representation) -> DefectReport:
    """rho(xy) = rho(x) L_y + (-1)^{|x||y|} rho(y) R_x over basis pairs."""
    P = rep.algebra
    ps = P.space.parities
    L = [m.matrix for m in rep.L]
    R = [m.matrix for m in rep.R]
    rho = [m.matrix for m in rep.rho]
    witnesses = []
    for a, b in cartesian(range(P.dim), repeat=2):
        m = _lin((1, rep.action("rho", P.product[a][b])), (-1, linalg.matmul(rho[a], L[b])),
                 (-koszul_sign(ps[a], ps[b]), linalg.matmul(rho[b], R[a])))
        witnesses += _matrix_witnesses("dualizable", (a, b), m)
    return DefectReport("dualizable", tuple(witnesses), ("dualizable",))


def regular_rep(algebra: SuperAlgebra) -> Representation:
    """L_x y = xy, R_y x = (-1)^{|x||y|} xy, rho = ad."""
    n = algebra.dim
    ps = algebra.space.parities
    P = algebra.product
    B = algebra.bracket
    L = [tuple(tuple(P[a][j][i] for j in range(n)) for i in range(n)) for a in range(n)]
    R = [tuple(tuple(koszul_sign(ps[j], ps[a]) * P[j][a][i] for j in range(n)) for i in range(n))
         for a in range(n)]
    ad = [tuple(tuple(B[a][j][i] for j in range(n)) for i in range(n)) for a in range(n)]
    return Representation.from_matrices(algebra, algebra.space, L, R, ad, name="regular")


def dual_matrix(m: Matrix, action_parity: int, module: GradedSpace) -> Matrix:
    """Matrix of M* on V*, from <M* alpha, v> = -(-1)^{|x||alpha|} <alpha, M v>."""
    d = module.dim
    return tuple(tuple(-koszul_sign(action_parity, module.parity(i)) * m[i][j] for i in range(d))
                 for j in range(d))


def _dual_family(maps: Sequence[LinearMap], algebra: SuperAlgebra, dual: GradedSpace,
                 module: GradedSpace, factor: int = 1) -> tuple[LinearMap, ...]:
    return tuple(LinearMap(dual, dual, m.parity,
                           linalg.scale(factor, dual_matrix(m.matrix, algebra.space.parity(a), module)))
                 for a, m in enumerate(maps))


def plain_dual(rep: Representation) -> Representation:
    """(V*; L*, R*, rho*) with no reordering or sign; not a representation in general."""
    V = rep.module
    Vd = dual_space(V)
    P = rep.algebra
    return Representation(P, Vd, _dual_family(rep.L, P, Vd, V), _dual_family(rep.R, P, Vd, V),
                          _dual_family(rep.rho, P, Vd, V), name=f"{rep.name}^*")


def dual_rep(rep: Representation, check: bool = True) -> Representation:
    """(V*; -R*, -L*, rho*), which is a representation exactly when ``rep`` is dualizable."""
    if check:
        report = verify_dualizable(rep)
        if not report.holds:
            raise NotDualizable(report)
    V = rep.module
    Vd = dual_space(V)
    P = rep.algebra
    name = "co-regular" if rep.name == "regular" else f"dual({rep.name})"
    return Representation(P, Vd, _dual_family(rep.R, P, Vd, V, -1), _dual_family(rep.L, P, Vd, V, -1),
                          _dual_family(rep.rho, P, Vd, V), name=name)


def coregular_rep(algebra: SuperAlgebra) -> Representation:
    report = verify_coherence(algebra)
    if not report.holds:
        raise NotCoherent(report)
    return dual_rep(regular_rep(algebra), check=False)


def parity_reversed_rep(rep: Representation) -> Representation:
    """Action on sV with L^s_x sv = (-1)^{|x|} s(L_x v), likewise R and rho."""
    sV = parity_shift(rep.module)
    ps = rep.algebra.space.parities

    def shift(maps):
        return tuple(LinearMap(sV, sV, m.parity, linalg.scale(-1 if ps[a] else 1, m.matrix))
                     for a, m in enumerate(maps))

    return Representation(rep.algebra, sV, shift(rep.L), shift(rep.R), shift(rep.rho),
                          name=f"s({rep.name})")


def same_matrices(r1: Representation, r2: Representation) -> bool:
    """Equal actions and module parities, ignoring basis names."""
    return (r1.algebra == r2.algebra and r1.module.parities == r2.module.parities
            and all(a.matrix == b.matrix for f in ("L", "R", "rho")
                    for a, b in zip(getattr(r1, f), getattr(r2, f))))


def direct_sum_rep(r1: Representation, r2: Representation) -> Representation:
    """Block-diagonal action on V1 + V2."""
    if r1.algebra != r2.algebra:
        raise SpaceMismatch("representations over different algebras")
    V = direct_sum(r1.module, r2.module)
    d1, d2 = r1.module.dim, r2.module.dim

    def glue(a: LinearMap, b: LinearMap) -> LinearMap:
        m = [[ZERO] * (d1 + d2) for _ in range(d1 + d2)]
        for i in range(d1):
            m[i][:d1] = a.matrix[i]
        for i in range(d2):
            m[d1 + i][d1:] = b.matrix[i]
        return LinearMap(V, V, a.parity, m)

    return Representation(r1.algebra, V,
                          *(tuple(glue(a, b) for a, b in zip(getattr(r1, f), getattr(r2, f)))
                            for f in ("L", "R", "rho")),
                          name=f"{r1.name}+{r2.name}")


@dataclass(frozen=True)
class RepIsomorphism:
    map: LinearMap
    source: Representation
    target: Representation

    def inverse(self) -> RepIsomorphism:
        return RepIsomorphism(self.map.inverse(), self.target, self.source)


class NotAnIsomorphismCandidate(ValueError):
    pass


def verify_rep_isomorphism(phi: LinearMap, r1: Representation, r2: Representation) -> DefectReport:
    """phi L_x = L'_x phi, phi R_x = R'_x phi, phi rho(x) = rho'(x) phi for each basis x."""
    if r1.algebra != r2.algebra:
        raise SpaceMismatch("representations of different algebras")
    if phi.domain != r1.module or phi.codomain != r2.module:
        raise SpaceMismatch("map does not go from the first module to the second")
    if phi.parity != 0:
        raise NotAnIsomorphismCandidate("map must be even")
    if not phi.is_invertible():
        raise NotAnIsomorphismCandidate("map must be invertible")
    witnesses = []
    for label in ("L", "R", "rho"):
        for a in range(r1.algebra.dim):
            m = linalg.sub(linalg.matmul(phi.matrix, getattr(r1, label)[a].matrix),
                           linalg.matmul(getattr(r2, label)[a].matrix, phi.matrix))
            witnesses += _matrix_witnesses(label, (a,), m)
    return DefectReport("rep-isomorphism", tuple(witnesses), ("L", "R", "rho"))


class SearchUndetermined(RuntimeError):
    """The solution space is too large for the bounded grid search."""


ISO_GRID = (-2, -1, 0, 1, 2)
ISO_MAX_BASIS = 5


def intertwiner_space(r1: Representation, r2: Representation) -> list[LinearMap]:
    """Exact basis of even maps phi with phi X_a = X'_a phi for every action X."""
    V, W = r1.module, r2.module
    slots = [(i, j) for i in range(W.dim) for j in range(V.dim) if W.parity(i) == V.parity(j)]
    col = {s: c for c, s in enumerate(slots)}
    rows = []
    for label in ("L", "R", "rho"):
        for a in range(r1.algebra.dim):
            A = getattr(r1, label)[a].matrix
            B = getattr(r2, label)[a].matrix
            # (phi A - B phi)[i][j] = sum_k phi[i][k] A[k][j] - sum_k B[i][k] phi[k][j]
            for i in range(W.dim):
                for j in range(V.dim):
                    eq = [ZERO] * len(slots)
                    for k in range(V.dim):
                        if A[k][j] and (i, k) in col:
                            eq[col[(i, k)]] += A[k][j]
                    for k in range(W.dim):
                        if B[i][k] and (k, j) in col:
                            eq[col[(k, j)]] -= B[i][k]
                    if any(eq):
                        rows.append(tuple(eq))
    basis = linalg.nullspace(tuple(rows), len(slots))
    out = []
    for vec in basis:
        m = [[ZERO] * V.dim for _ in range(W.dim)]
        for (i, j), c in zip(slots, vec):
            m[i][j] = c
        out.append(LinearMap(V, W, 0, m))
    return out


def find_rep_isomorphism(r1: Representation, r2: Representation, grid=ISO_GRID,
                         max_basis: int = ISO_MAX_BASIS) -> RepIsomorphism | None:
    """Search the intertwiner space for an invertible element.

    Combinations of the exact intertwiner basis with coefficients in ``grid``
    are tried in lexicographic order.  ``None`` is exact when the graded
    dimensions differ or no nonzero intertwiner exists; otherwise it means
    nothing invertible turned up in the grid.  More than ``max_basis`` basis
    vectors raises :class:`SearchUndetermined`.
    """
    if r1.algebra != r2.algebra:
        raise SpaceMismatch("representations of different algebras")
    if r1.module.dim != r2.module.dim:
        raise SpaceMismatch("modules have different dimensions")
    V, W = r1.module, r2.module
    if (V.even_dim, V.odd_dim) != (W.even_dim, W.odd_dim):
        return None
    basis = intertwiner_space(r1, r2)
    if not basis:
        return None
    if len(basis) > max_basis:
        raise SearchUndetermined(f"intertwiner space has dimension {len(basis)} > {max_basis}")
    grid = [linalg.as_fraction(g) for g in grid]
    for coeffs in cartesian(grid, repeat=len(basis)):
        if not any(coeffs):
            continue
        phi = coeffs[0] * basis[0]
        for c, b in zip(coeffs[1:], basis[1:]):
            phi = phi + c * b
        if phi.is_invertible() and verify_rep_isomorphism(phi, r1, r2).holds:
            return RepIsomorphism(phi, r1, r2)
    return None


def double_dual_map(rep: Representation) -> LinearMap:
    """theta: (V*)* -> V, (v_i*)* -> (-1)^{|v_i|} v_i."""
    V = rep.module
    Vdd = dual_space(dual_space(V))
    d = V.dim
    return LinearMap(Vdd, V, 0, tuple(tuple((-1 if V.parity(i) else 1) if i == j else 0 for j in range(d))
                                      for i in range(d)))


def shifted_dual_map(rep: Representation) -> LinearMap:
    """phi: sV* -> (sV)*, s v_i* -> (-1)^{|v_i|} (s v_i)*."""
    V = rep.module
    src = parity_shift(dual_space(V))
    tgt = dual_space(parity_shift(V))
    d = V.dim
    return LinearMap(src, tgt, 0, tuple(tuple((-1 if V.parity(i) else 1) if i == j else 0 for j in range(d))
                                        for i in range(d)))


def shifted_double_dual_map(rep: Representation) -> LinearMap:
    """(s v_i*)* -> s v_i with no sign."""
    V = rep.module
    src = dual_space(parity_shift(dual_space(V)))
    tgt = parity_shift(V)
    return LinearMap(src, tgt, 0, linalg.identity(V.dim))


def _block_split(m: Matrix, parities: Sequence[int]):
    even = [i for i, p in enumerate(parities) if p == 0]
    odd = [i for i, p in enumerate(parities) if p == 1]

    def sub(rows, cols):
        return tuple(tuple(m[i][j] for j in cols) for i in rows)

    return sub(even, even), sub(even, odd), sub(odd, even), sub(odd, odd)


def block_form(m: Matrix, parities: Sequence[int], action_parity: int) -> tuple[str, Matrix, Matrix]:
    """Blocks after reordering the basis even-first.

    Even actions give ``("diagonal", A, B)`` for (A 0 / 0 B); odd actions give
    ``("anti-diagonal", C, D)`` for (0 C / D 0).
    """
    ee, eo, oe, oo = _block_split(m, parities)
    if action_parity == 0:
        return "diagonal", ee, oo
    return "anti-diagonal", eo, oe


def _fmt(m: Matrix) -> str:
    if not m or not m[0]:
        return "[]"
    return "[" + "; ".join(" ".join(str(x) for x in row) for row in m) + "]"


def blocks(rep: Representation) -> str:
    """Human-readable block decomposition of every action matrix."""
    P = rep.algebra.space
    ps = rep.module.parities
    order = [i for i, p in enumerate(ps) if p == 0] + [i for i, p in enumerate(ps) if p == 1]
    lines = [f"module basis (even first): {', '.join(rep.module.names[i] for i in order)}"]
    for label in ("L", "R", "rho"):
        for a, m in enumerate(getattr(rep, label)):
            shape, X, Y = block_form(m.matrix, ps, P.parity(a))
            if shape == "diagonal":
                lines.append(f"{label}({P.names[a]}): (A 0 / 0 B)  A={_fmt(X)}  B={_fmt(Y)}")
            else:
                lines.append(f"{label}({P.names[a]}): (0 C / D 0)  C={_fmt(X)}  D={_fmt(Y)}")
    return "\n".join(lines)
