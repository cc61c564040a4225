"""Poisson superalgebras given by structure constants, and their axiom checks.

An algebra stores two cubes ``product[i][j][k]`` and ``bracket[i][j][k]``:
the coefficient of e_k in e_i . e_j and in [e_i, e_j].
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as cartesian
from typing import Iterable, Sequence

from . import linalg
from .graded import (GradedSpace, GradingError, LinearMap, SpaceMismatch, Vector, direct_sum,
                     koszul_sign, sign)
from .linalg import ZERO

Cube = tuple[tuple[tuple[Fraction, ...], ...], ...]


@dataclass(frozen=True)
class Witness:
    law: str
    indices: tuple[int, ...]
    defect: tuple[Fraction, ...]


@dataclass(frozen=True)
class DefectReport:
    """Outcome of an identity check; no witnesses means the identity holds exactly."""

    axiom: str
    witnesses: tuple[Witness, ...] = ()
    laws: tuple[str, ...] = ()

    @property
    def holds(self) -> bool:
        return not self.witnesses

    def __bool__(self):
        # truthy when there is something to report
        return bool(self.witnesses)

    def count(self, law: str | None = None) -> int:
        return sum(1 for w in self.witnesses if law is None or w.law == law)


def merge_reports(axiom: str, reports: Iterable[DefectReport]) -> DefectReport:
    reports = list(reports)
    return DefectReport(axiom,
                        tuple(w for r in reports for w in r.witnesses),
                        tuple(l for r in reports for l in (r.laws or (r.axiom,))))


def _zero_cube(n: int) -> list[list[list[Fraction]]]:
    return [[[ZERO] * n for _ in range(n)] for _ in range(n)]


def _freeze(cube) -> Cube:
    return tuple(tuple(tuple(linalg.as_fraction(c) for c in row) for row in plane) for plane in cube)


@dataclass(frozen=True)
class SuperAlgebra:
    space: GradedSpace
    product: Cube
    bracket: Cube
    name: str = field(default="", compare=False)

    def __post_init__(self):
        n = self.space.dim
        ps = self.space.parities
        for label in ("product", "bracket"):
            cube = _freeze(getattr(self, label))
            if len(cube) != n or any(len(p) != n or any(len(r) != n for r in p) for p in cube):
                raise SpaceMismatch(f"{label} constants must be {n}x{n}x{n}")
            for i, j, k in cartesian(range(n), repeat=3):
                if cube[i][j][k] and ps[k] != (ps[i] + ps[j]) % 2:
                    names = self.space.names
                    raise GradingError(
                        f"{label} of ({names[i]}, {names[j]}) has a component on "
                        f"{names[k]} of the wrong parity (indices {i},{j},{k})")
            object.__setattr__(self, label, cube)

    @classmethod
    def from_tables(cls, space: GradedSpace, product: dict, bracket: dict, name: str = "",
                    antisymmetrize: bool = True) -> SuperAlgebra:
        """Build from ``{(left, right): {out: coeff}}`` tables keyed by basis names.

        With ``antisymmetrize`` the bracket table only needs one of each pair
        [a, b], [b, a]; the other is filled in by super-antisymmetry.
        """
        n = space.dim
        prod = _zero_cube(n)
        brk = _zero_cube(n)
        ix = space.index
        for (a, b), out in product.items():
            for k, c in out.items():
                prod[ix(a)][ix(b)][ix(k)] += linalg.as_fraction(c)
        for (a, b), out in bracket.items():
            i, j = ix(a), ix(b)
            for k, c in out.items():
                c = linalg.as_fraction(c)
                brk[i][j][ix(k)] += c
                if antisymmetrize and i != j:
                    brk[j][i][ix(k)] -= koszul_sign(space.parity(i), space.parity(j)) * c
        return cls(space, _freeze(prod), _freeze(brk), name)

    @property
    def dim(self) -> int:
        return self.space.dim

    def mul_basis(self, i: int, j: int) -> tuple[Fraction, ...]:
        return self.product[i][j]

    def br_basis(self, i: int, j: int) -> tuple[Fraction, ...]:
        return self.bracket[i][j]

    def _bilinear(self, cube: Cube, u: Sequence[Fraction], v: Sequence[Fraction]) -> tuple[Fraction, ...]:
        n = self.dim
        out = [ZERO] * n
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                ab = a * b
                for k, c in enumerate(cube[i][j]):
                    if c:
                        out[k] += ab * c
        return tuple(out)

    def mul(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> tuple[Fraction, ...]:
        return self._bilinear(self.product, u, v)

    def br(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> tuple[Fraction, ...]:
        return self._bilinear(self.bracket, u, v)

    def has_zero_bracket(self) -> bool:
        return all(not c for plane in self.bracket for row in plane for c in row)

    def is_commutative(self) -> bool:
        """Supercommutative product: e_i e_j = (-1)^{|i||j|} e_j e_i."""
        ps = self.space.parities
        n = self.dim
        return all(self.product[i][j] == tuple(koszul_sign(ps[i], ps[j]) * c for c in self.product[j][i])
                   for i in range(n) for j in range(n))


def multiply(algebra: SuperAlgebra, u: Vector, v: Vector) -> Vector:
    if u.space != algebra.space or v.space != algebra.space:
        raise SpaceMismatch("vectors must live on the algebra")
    return Vector(algebra.space, algebra.mul(u.coeffs, v.coeffs))


def bracket(algebra: SuperAlgebra, u: Vector, v: Vector) -> Vector:
    if u.space != algebra.space or v.space != algebra.space:
        raise SpaceMismatch("vectors must live on the algebra")
    return Vector(algebra.space, algebra.br(u.coeffs, v.coeffs))


def _unit(n: int, i: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(1) if k == i else ZERO for k in range(n))


def _combine(*terms: tuple[Fraction, Sequence[Fraction]]) -> tuple[Fraction, ...]:
    n = len(terms[0][1])
    out = [ZERO] * n
    for c, vec in terms:
        if c:
            for k, x in enumerate(vec):
                if x:
                    out[k] += c * x
    return tuple(out)


def _scan_triples(algebra: SuperAlgebra, law: str, defect_fn) -> list[Witness]:
    n = algebra.dim
    out = []
    for i, j, k in cartesian(range(n), repeat=3):
        d = defect_fn(i, j, k)
        if any(d):
            out.append(Witness(law, (i, j, k), d))
    return out


def verify_associativity(algebra: SuperAlgebra) -> DefectReport:
    n = algebra.dim
    e = [_unit(n, i) for i in range(n)]
    m = algebra.mul

    def defect(i, j, k):
        return _combine((1, m(m(e[i], e[j]), e[k])), (-1, m(e[i], m(e[j], e[k]))))

    return DefectReport("associativity", tuple(_scan_triples(algebra, "associativity", defect)),
                        ("associativity",))


def verify_lie(algebra: SuperAlgebra) -> DefectReport:
    n = algebra.dim
    ps = algebra.space.parities
    e = [_unit(n, i) for i in range(n)]
    b = algebra.br
    witnesses = []
    for i, j in cartesian(range(n), repeat=2):
        d = _combine((1, b(e[i], e[j])), (koszul_sign(ps[i], ps[j]), b(e[j], e[i])))
        if any(d):
            witnesses.append(Witness("super-antisymmetry", (i, j), d))

    def jacobi(i, j, k):
        return _combine((koszul_sign(ps[i], ps[k]), b(e[i], b(e[j], e[k]))),
                        (koszul_sign(ps[j], ps[i]), b(e[j], b(e[k], e[i]))),
                        (koszul_sign(ps[k], ps[j]), b(e[k], b(e[i], e[j]))))

    witnesses += _scan_triples(algebra, "super-jacobi", jacobi)
    return DefectReport("lie", tuple(witnesses), ("super-antisymmetry", "super-jacobi"))


def _leibniz_left(algebra, i, j, k):
    # [x, yz] - [x,y]z - (-1)^{|x||y|} y[x,z]
    n = algebra.dim
    ps = algebra.space.parities
    x, y, z = _unit(n, i), _unit(n, j), _unit(n, k)
    m, b = algebra.mul, algebra.br
    return _combine((1, b(x, m(y, z))), (-1, m(b(x, y), z)),
                    (-koszul_sign(ps[i], ps[j]), m(y, b(x, z))))


def _leibniz_right(algebra, i, j, k):
    # [xy, z] - x[y,z] - (-1)^{|y||z|} [x,z]y
    n = algebra.dim
    ps = algebra.space.parities
    x, y, z = _unit(n, i), _unit(n, j), _unit(n, k)
    m, b = algebra.mul, algebra.br
    return _combine((1, b(m(x, y), z)), (-1, m(x, b(y, z))),
                    (-koszul_sign(ps[j], ps[k]), m(b(x, z), y)))


def verify_leibniz(algebra: SuperAlgebra) -> DefectReport:
    """Both forms of the Leibniz rule, plus their mutual consistency.

    Under super-antisymmetry the left defect at (x, y, z) equals
    -(-1)^{|x|(|y|+|z|)} times the right defect at (y, z, x); a violation of
    that relation is reported under ``forms-disagree``.
    """
    ps = algebra.space.parities
    witnesses = _scan_triples(algebra, "leibniz-left", lambda i, j, k: _leibniz_left(algebra, i, j, k))
    witnesses += _scan_triples(algebra, "leibniz-right", lambda i, j, k: _leibniz_right(algebra, i, j, k))
    laws = ["leibniz-left", "leibniz-right"]
    if not any(w.law == "super-antisymmetry" for w in verify_lie(algebra).witnesses):
        laws.append("forms-disagree")

        def consistency(i, j, k):
            s = -sign(ps[i] * (ps[j] + ps[k]))
            return _combine((1, _leibniz_left(algebra, i, j, k)), (-s, _leibniz_right(algebra, j, k, i)))

        witnesses += _scan_triples(algebra, "forms-disagree", consistency)
    return DefectReport("leibniz", tuple(witnesses), tuple(laws))


def verify_coherence(algebra: SuperAlgebra) -> DefectReport:
    n = algebra.dim
    ps = algebra.space.parities
    e = [_unit(n, i) for i in range(n)]
    m, b = algebra.mul, algebra.br

    def defect(i, j, k):
        x, y, z = e[i], e[j], e[k]
        return _combine((1, b(x, m(y, z))), (-1, b(m(x, y), z)),
                        (sign(ps[i] * (ps[j] + ps[k])), b(y, m(z, x))))

    return DefectReport("coherence", tuple(_scan_triples(algebra, "coherence", defect)),
                        ("coherence",))


def verify_poisson(algebra: SuperAlgebra) -> DefectReport:
    """Associativity, Lie superalgebra axioms and the Leibniz rule together."""
    return merge_reports("poisson", [verify_associativity(algebra), verify_lie(algebra),
                                     verify_leibniz(algebra)])


class NotAssociative(ValueError):
    pass


def from_supercommutator(assoc: SuperAlgebra) -> SuperAlgebra:
    """Attach [x, y] = xy - (-1)^{|x||y|} yx to an associative superalgebra."""
    report = verify_associativity(assoc)
    if not report.holds:
        raise NotAssociative(f"input is not associative ({report.count()} defective triples)")
    n = assoc.dim
    ps = assoc.space.parities
    brk = [[[assoc.product[i][j][k] - koszul_sign(ps[i], ps[j]) * assoc.product[j][i][k]
             for k in range(n)] for j in range(n)] for i in range(n)]
    return SuperAlgebra(assoc.space, assoc.product, _freeze(brk), assoc.name)


def polarize(star: SuperAlgebra) -> tuple[SuperAlgebra, DefectReport]:
    """Split a product ``*`` into its graded symmetric and antisymmetric halves.

    Only ``star.product`` is read.  The report checks, over basis triples,
    3A(x,y,z) = (-1)^{|y||z|}(x*z)*y + (-1)^{|x|(|y|+|z|)}(y*z)*x
                - (-1)^{|x||y|}(y*x)*z - (-1)^{|z|(|x|+|y|)}(z*x)*y
    with A the associator of ``*``; each sign is the Koszul sign of the
    reordering of x, y, z.
    """
    n = star.dim
    ps = star.space.parities
    half = Fraction(1, 2)
    P = star.product
    prod = [[[half * (P[i][j][k] + koszul_sign(ps[i], ps[j]) * P[j][i][k]) for k in range(n)]
             for j in range(n)] for i in range(n)]
    brk = [[[half * (P[i][j][k] - koszul_sign(ps[i], ps[j]) * P[j][i][k]) for k in range(n)]
            for j in range(n)] for i in range(n)]
    result = SuperAlgebra(star.space, _freeze(prod), _freeze(brk), star.name)
    e = [_unit(n, i) for i in range(n)]
    s = star.mul

    def defect(i, j, k):
        x, y, z = e[i], e[j], e[k]
        px, py, pz = ps[i], ps[j], ps[k]
        return _combine(
            (3, s(s(x, y), z)), (-3, s(x, s(y, z))),
            (-sign(py * pz), s(s(x, z), y)),
            (-sign(px * (py + pz)), s(s(y, z), x)),
            (sign(px * py), s(s(y, x), z)),
            (sign(pz * (px + py)), s(s(z, x), y)))

    report = DefectReport("polarization", tuple(_scan_triples(star, "polarization", defect)),
                          ("polarization",))
    return result, report


ONE_ONE = GradedSpace((("x", 0), ("y", 1)))


def family_1dim1(family: int, k=1) -> SuperAlgebra:
    """The five families of 1|1-dimensional Poisson superalgebras on {x even, y odd}."""
    k = linalg.as_fraction(k)
    if not k:
        raise ValueError("k must be nonzero")
    tables = {
        1: ({("y", "y"): {"x": 1}}, {("y", "y"): {"x": k}}),
        2: ({("x", "x"): {"x": 1}, ("x", "y"): {"y": 1}}, {("x", "y"): {"y": k}}),
        3: ({("x", "x"): {"x": 1}, ("y", "x"): {"y": 1}}, {("x", "y"): {"y": k}}),
        4: ({("x", "x"): {"x": 1}, ("x", "y"): {"y": 1}, ("y", "x"): {"y": 1}},
            {("y", "y"): {"x": k}}),
        5: ({("x", "x"): {"x": 1}, ("x", "y"): {"y": 1}, ("y", "x"): {"y": 1}, ("y", "y"): {"x": 1}},
            {("y", "y"): {"x": k}}),
    }
    if family not in tables:
        raise ValueError(f"family must be 1..5, got {family}")
    product, brk = tables[family]
    return SuperAlgebra.from_tables(ONE_ONE, product, brk, name=f"family {family}, k={k}")


def semidirect_product(algebra: SuperAlgebra, rep, check: bool = True) -> SuperAlgebra:
    """P (+) V with (x+u)(y+v) = xy + L_x v + (-1)^{|u||y|} R_y u and
    [x+u, y+v] = [x,y] + rho(x)v - (-1)^{|u||y|} rho(y)u."""
    from .representation import UnverifiedRepresentation, verify_representation

    if rep.algebra != algebra:
        raise SpaceMismatch("representation is over a different algebra")
    if check:
        report = verify_representation(rep)
        if not report.holds:
            raise UnverifiedRepresentation(report)
    n = algebra.dim
    V = rep.module
    d = V.dim
    space = direct_sum(algebra.space, V)
    N = n + d
    prod = _zero_cube(N)
    brk = _zero_cube(N)
    for i, j, k in cartesian(range(n), repeat=3):
        prod[i][j][k] = algebra.product[i][j][k]
        brk[i][j][k] = algebra.bracket[i][j][k]
    for a in range(n):
        pa = algebra.space.parity(a)
        L, R, rho = rep.L[a].matrix, rep.R[a].matrix, rep.rho[a].matrix
        for j in range(d):
            s = koszul_sign(V.parity(j), pa)
            for k in range(d):
                prod[a][n + j][n + k] = L[k][j]
                prod[n + j][a][n + k] = s * R[k][j]
                brk[a][n + j][n + k] = rho[k][j]
                brk[n + j][a][n + k] = -s * rho[k][j]
    name = f"{algebra.name} x| {rep.name}" if algebra.name or rep.name else ""
    return SuperAlgebra(space, _freeze(prod), _freeze(brk), name)


def structure_map_defects(f: LinearMap, source: SuperAlgebra, target: SuperAlgebra) -> DefectReport:
    """Witness basis pairs where f(ab) != f(a)f(b) or f[a,b] != [f(a), f(b)]."""
    if f.domain != source.space or f.codomain != target.space:
        raise SpaceMismatch("map spaces do not match the algebras")
    n = source.dim
    cols = [f.column(j) for j in range(n)]
    witnesses = []
    for law, src, tgt in (("product", source.mul, target.mul), ("bracket", source.br, target.br)):
        for i, j in cartesian(range(n), repeat=2):
            lhs = linalg.matvec(f.matrix, src(_unit(n, i), _unit(n, j)))
            d = _combine((1, lhs), (-1, tgt(cols[i], cols[j])))
            if any(d):
                witnesses.append(Witness(law, (i, j), d))
    return DefectReport("homomorphism", tuple(witnesses), ("product", "bracket"))
