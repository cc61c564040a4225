"""O-operators, Rota-Baxter operators and bilinear forms on a Poisson superalgebra."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as cartesian
from typing import Iterable, Sequence

from . import linalg
from .graded import (GradedSpace, GradingError, LinearMap, SpaceMismatch, dual_space, koszul_sign,
                     parity_shift, sign)
from .linalg import ZERO, Matrix
from .representation import (RepIsomorphism, Representation, coregular_rep, regular_rep,
                             verify_rep_isomorphism)
from .superalgebra import DefectReport, SuperAlgebra, Witness


def _combine(n: int, *terms: tuple[Fraction, Sequence[Fraction]]) -> tuple[Fraction, ...]:
    out = [ZERO] * n
    for c, vec in terms:
        if c:
            for k, x in enumerate(vec):
                if x:
                    out[k] += c * x
    return tuple(out)


def _column(m: Matrix, j: int) -> tuple[Fraction, ...]:
    return tuple(row[j] for row in m)


def verify_o_operator(T: LinearMap, rep: Representation) -> DefectReport:
    """Check, for all basis pairs (v, w) of V,

    T(v)T(w)   = T((-1)^{(|T|+|v|)|T|} L_{T(v)} w + (-1)^{|v|(|T|+|w|)} R_{T(w)} v)
    [T(v),T(w)] = T((-1)^{(|T|+|v|)|T|} rho(T(v)) w - (-1)^{|v|(|T|+|w|)} rho(T(w)) v)
    """
    P = rep.algebra
    V = rep.module
    if T.domain != V or T.codomain != P.space:
        raise SpaceMismatch("operator must map the module to the algebra")
    t = T.parity
    n, d = P.dim, V.dim
    images = [T.column(j) for j in range(d)]
    acts = {label: [rep.action(label, img) for img in images] for label in ("L", "R", "rho")}
    found = {"product": [], "bracket": []}
    for i, j in cartesian(range(d), repeat=2):
        pv, pw = V.parity(i), V.parity(j)
        s1 = sign((t + pv) * t)
        s2 = sign(pv * (t + pw))
        Tv, Tw = images[i], images[j]
        inner = _combine(d, (s1, _column(acts["L"][i], j)), (s2, _column(acts["R"][j], i)))
        d1 = _combine(n, (1, P.mul(Tv, Tw)), (-1, linalg.matvec(T.matrix, inner)))
        if any(d1):
            found["product"].append(Witness("product", (i, j), d1))
        inner = _combine(d, (s1, _column(acts["rho"][i], j)), (-s2, _column(acts["rho"][j], i)))
        d2 = _combine(n, (1, P.br(Tv, Tw)), (-1, linalg.matvec(T.matrix, inner)))
        if any(d2):
            found["bracket"].append(Witness("bracket", (i, j), d2))
    return DefectReport("o-operator", tuple(found["product"] + found["bracket"]),
                        ("product", "bracket"))


def is_o_operator(T: LinearMap, rep: Representation) -> bool:
    return verify_o_operator(T, rep).holds


@dataclass(frozen=True)
class OOperator:
    map: LinearMap
    rep: Representation
    verified: bool

    @classmethod
    def check(cls, T: LinearMap, rep: Representation) -> OOperator:
        return cls(T, rep, is_o_operator(T, rep))


def verify_rota_baxter(B: LinearMap, algebra: SuperAlgebra) -> DefectReport:
    """O-operator condition for the regular representation."""
    if B.domain != algebra.space or B.codomain != algebra.space:
        raise SpaceMismatch("a Rota-Baxter operator maps the algebra to itself")
    report = verify_o_operator(B, regular_rep(algebra))
    return DefectReport("rota-baxter", report.witnesses, report.laws)


class UnverifiedOperator(ValueError):
    pass


def transport(T: LinearMap, iso: RepIsomorphism, check: bool = True) -> LinearMap:
    """T phi, an O-operator for the source of ``iso`` when T is one for its target."""
    if check:
        if not verify_rep_isomorphism(iso.map, iso.source, iso.target).holds:
            raise UnverifiedOperator("map is not an isomorphism of the representations")
        if not is_o_operator(T, iso.target):
            raise UnverifiedOperator("operator is not an O-operator for the target representation")
    return T @ iso.map


def suspend_operator(T: LinearMap, rep: Representation | None = None) -> LinearMap:
    """T^s: sV -> P with T^s(su) = T(u); its parity is |T| + 1."""
    if rep is not None and T.domain != rep.module:
        raise SpaceMismatch("operator domain is not the module")
    return LinearMap(parity_shift(T.domain), T.codomain, 1 - T.parity, T.matrix)


def unsuspend_operator(Ts: LinearMap, module: GradedSpace) -> LinearMap:
    """Inverse of :func:`suspend_operator` given the original module."""
    if parity_shift(module) != Ts.domain:
        raise SpaceMismatch("operator domain is not the shifted module")
    return LinearMap(module, Ts.codomain, 1 - Ts.parity, Ts.matrix)


def odd_from_even(T: LinearMap, iso: RepIsomorphism) -> LinearMap:
    """T^s phi for an isomorphism phi: V -> sV; odd when T is even."""
    return suspend_operator(T) @ iso.map


@dataclass(frozen=True)
class BilinearForm:
    space: GradedSpace
    matrix: Matrix

    def __post_init__(self):
        m = linalg.matrix(self.matrix)
        n = self.space.dim
        if len(m) != n or any(len(r) != n for r in m):
            raise SpaceMismatch(f"form matrix must be {n}x{n}")
        object.__setattr__(self, "matrix", m)

    def __call__(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
        total = ZERO
        for i, a in enumerate(u):
            if a:
                for j, b in enumerate(v):
                    if b and self.matrix[i][j]:
                        total += a * b * self.matrix[i][j]
        return total

    def __add__(self, other: BilinearForm) -> BilinearForm:
        return BilinearForm(self.space, linalg.add(self.matrix, other.matrix))

    def __rmul__(self, c) -> BilinearForm:
        return BilinearForm(self.space, linalg.scale(c, self.matrix))


EVEN, ODD = "even", "odd"
SUPERSYMMETRIC, SKEW = "supersymmetric", "skew-supersymmetric"
NONDEGENERATE, INVARIANT, COCYCLE = "non-degenerate", "invariant", "2-cocycle"


def _unit(n, i):
    return tuple(Fraction(1) if k == i else ZERO for k in range(n))


def invariance_defects(B: BilinearForm, algebra: SuperAlgebra) -> DefectReport:
    """B(xy, z) = B(x, yz) and B([x,y], z) = B(x, [y,z]) over basis triples."""
    n = algebra.dim
    e = [_unit(n, i) for i in range(n)]
    witnesses = []
    for law, op in (("product", algebra.mul), ("bracket", algebra.br)):
        for i, j, k in cartesian(range(n), repeat=3):
            d = B(op(e[i], e[j]), e[k]) - B(e[i], op(e[j], e[k]))
            if d:
                witnesses.append(Witness(law, (i, j, k), (d,)))
    return DefectReport("invariant", tuple(witnesses), ("product", "bracket"))


def cocycle_defects(B: BilinearForm, algebra: SuperAlgebra) -> DefectReport:
    """The two cocycle identities over basis triples:

    B(xy, z)    = B(x, yz) - (-1)^{(|x|+|y|)|z|} B(zx, y)
    B([x,y], z) = B(x, [y,z]) + (-1)^{|y||z|} B([x,z], y)
    """
    n = algebra.dim
    ps = algebra.space.parities
    e = [_unit(n, i) for i in range(n)]
    m, b = algebra.mul, algebra.br
    prod_w, br_w = [], []
    for i, j, k in cartesian(range(n), repeat=3):
        x, y, z = e[i], e[j], e[k]
        d = B(m(x, y), z) - B(x, m(y, z)) + sign((ps[i] + ps[j]) * ps[k]) * B(m(z, x), y)
        if d:
            prod_w.append(Witness("product-cocycle", (i, j, k), (d,)))
        d = B(b(x, y), z) - B(x, b(y, z)) - koszul_sign(ps[j], ps[k]) * B(b(x, z), y)
        if d:
            br_w.append(Witness("bracket-cocycle", (i, j, k), (d,)))
    return DefectReport("2-cocycle", tuple(prod_w + br_w), ("product-cocycle", "bracket-cocycle"))


def classify_form(B: BilinearForm, algebra: SuperAlgebra | None = None) -> frozenset[str]:
    """Predicates that hold for B; invariance and cocycle need the algebra."""
    ps = B.space.parities
    n = B.space.dim
    M = B.matrix
    out = set()
    if all(not M[i][j] for i in range(n) for j in range(n) if ps[i] != ps[j]):
        out.add(EVEN)
    if all(not M[i][j] for i in range(n) for j in range(n) if ps[i] == ps[j]):
        out.add(ODD)
    if all(M[i][j] == koszul_sign(ps[i], ps[j]) * M[j][i] for i in range(n) for j in range(n)):
        out.add(SUPERSYMMETRIC)
    if all(M[i][j] == -koszul_sign(ps[i], ps[j]) * M[j][i] for i in range(n) for j in range(n)):
        out.add(SKEW)
    if linalg.is_invertible(M):
        out.add(NONDEGENERATE)
    if algebra is not None:
        if algebra.space != B.space:
            raise SpaceMismatch("form and algebra live on different spaces")
        if invariance_defects(B, algebra).holds:
            out.add(INVARIANT)
        if SKEW in out and cocycle_defects(B, algebra).holds:
            out.add(COCYCLE)
    return frozenset(out)


def form_parity(B: BilinearForm) -> int:
    kinds = classify_form(B)
    if EVEN in kinds:
        return 0
    if ODD in kinds:
        return 1
    raise GradingError("form is neither even nor odd")


def form_to_map(B: BilinearForm) -> LinearMap:
    """phi: P -> P* with <phi(x), y> = B(x, y)."""
    return LinearMap(B.space, dual_space(B.space), form_parity(B), linalg.transpose(B.matrix))


class PreconditionError(ValueError):
    pass


def rota_baxter_from_o_operator(T: LinearMap, B: BilinearForm, algebra: SuperAlgebra) -> LinearMap:
    """T phi: P -> P for a non-degenerate even invariant form B with phi from :func:`form_to_map`."""
    kinds = classify_form(B, algebra)
    missing = {EVEN, NONDEGENERATE, INVARIANT} - kinds
    if missing:
        raise PreconditionError(f"form is not {', '.join(sorted(missing))}")
    if not is_o_operator(T, coregular_rep(algebra)):
        raise PreconditionError("operator is not an O-operator for the co-regular representation")
    return T @ form_to_map(B)


def find_invariant_forms(algebra: SuperAlgebra, parity: int) -> list[BilinearForm]:
    """Exact basis of invariant forms of the given parity."""
    n = algebra.dim
    ps = algebra.space.parities
    slots = [(i, j) for i in range(n) for j in range(n) if (ps[i] + ps[j]) % 2 == parity]
    col = {s: c for c, s in enumerate(slots)}
    rows = []
    for cube in (algebra.product, algebra.bracket):
        for i, j, k in cartesian(range(n), repeat=3):
            # B(e_i e_j, e_k) - B(e_i, e_j e_k)
            eq = [ZERO] * len(slots)
            for m, c in enumerate(cube[i][j]):
                if c and (m, k) in col:
                    eq[col[(m, k)]] += c
            for m, c in enumerate(cube[j][k]):
                if c and (i, m) in col:
                    eq[col[(i, m)]] -= c
            if any(eq):
                rows.append(tuple(eq))
    out = []
    for vec in linalg.nullspace(tuple(rows), len(slots)):
        M = [[ZERO] * n for _ in range(n)]
        for (i, j), c in zip(slots, vec):
            M[i][j] = c
        out.append(BilinearForm(algebra.space, M))
    return out


DEFAULT_GRID = (-1, 0, 1)
FORM_GRID = (-2, -1, 0, 1, 2)


def nondegenerate_in_span(forms: Sequence[BilinearForm], grid=FORM_GRID) -> BilinearForm | None:
    """First non-degenerate combination of ``forms`` with coefficients in ``grid``.

    ``None`` is exact only when ``forms`` is empty.
    """
    grid = [linalg.as_fraction(g) for g in grid]
    for coeffs in cartesian(grid, repeat=len(forms)):
        if not any(coeffs):
            continue
        total = None
        for c, f in zip(coeffs, forms):
            total = c * f if total is None else total + c * f
        if linalg.is_invertible(total.matrix):
            return total
    return None


class SearchTooLarge(ValueError):
    pass


def homogeneous_maps(domain: GradedSpace, codomain: GradedSpace, parity: int, grid) -> Iterable[LinearMap]:
    """All maps of the given parity with allowed entries drawn from ``grid``, in lexicographic order."""
    grid = [linalg.as_fraction(g) for g in grid]
    slots = [(i, j) for i in range(codomain.dim) for j in range(domain.dim)
             if codomain.parity(i) == (domain.parity(j) + parity) % 2]
    for values in cartesian(grid, repeat=len(slots)):
        M = [[ZERO] * domain.dim for _ in range(codomain.dim)]
        for (i, j), c in zip(slots, values):
            M[i][j] = c
        yield LinearMap(domain, codomain, parity, M)


def search_o_operators(rep: Representation, parity: int, grid=DEFAULT_GRID,
                       max_dim: int = 4) -> list[LinearMap]:
    """Every homogeneous map with entries in ``grid`` that is an O-operator for ``rep``."""
    if rep.module.dim > max_dim:
        raise SearchTooLarge(f"module dimension {rep.module.dim} exceeds the cap {max_dim}")
    return [T for T in homogeneous_maps(rep.module, rep.algebra.space, parity, grid)
            if is_o_operator(T, rep)]
