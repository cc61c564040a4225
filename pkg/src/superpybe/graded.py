"""Z2-graded vector spaces, homogeneous maps and tensors, Koszul signs.

Parities are plain ints in {0, 1}.  Every sign of the form (-1)^{|a||b|}
in the package goes through :func:`koszul_sign`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import linalg
from .linalg import ONE, ZERO, Matrix

Parity = int


class GradingError(ValueError):
    """A structure violates parity homogeneity."""


class SpaceMismatch(ValueError):
    pass


def koszul_sign(p: Parity, q: Parity) -> Fraction:
    return -ONE if (p & q & 1) else ONE


def sign(exponent: int) -> Fraction:
    """(-1)**exponent as an exact scalar."""
    return -ONE if exponent & 1 else ONE


def _check_parity(p) -> Parity:
    if p not in (0, 1):
        raise ValueError(f"parity must be 0 or 1, got {p!r}")
    return int(p)


@dataclass(frozen=True)
class GradedSpace:
    """An ordered homogeneous basis ``((name, parity), ...)``."""

    basis: tuple[tuple[str, Parity], ...]

    def __post_init__(self):
        basis = tuple((str(n), _check_parity(p)) for n, p in self.basis)
        if not basis:
            raise ValueError("a graded space needs at least one basis element")
        names = [n for n, _ in basis]
        if len(set(names)) != len(names):
            raise ValueError(f"basis names must be unique: {names}")
        object.__setattr__(self, "basis", basis)

    @classmethod
    def of(cls, *pairs: tuple[str, Parity]) -> GradedSpace:
        return cls(tuple(pairs))

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(n for n, _ in self.basis)

    @property
    def parities(self) -> tuple[Parity, ...]:
        return tuple(p for _, p in self.basis)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def even_dim(self) -> int:
        return sum(1 for _, p in self.basis if p == 0)

    @property
    def odd_dim(self) -> int:
        return sum(1 for _, p in self.basis if p == 1)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"no basis element named {name!r}") from None

    def parity(self, i: int) -> Parity:
        return self.basis[i][1]

    def vector(self, coeffs: Iterable) -> Vector:
        return Vector(self, tuple(coeffs))

    def basis_vector(self, i: int | str) -> Vector:
        if isinstance(i, str):
            i = self.index(i)
        return Vector(self, tuple(ONE if j == i else ZERO for j in range(self.dim)))

    def zero(self) -> Vector:
        return Vector(self, (ZERO,) * self.dim)

    def __str__(self):
        return "span{" + ", ".join(f"{n}({'odd' if p else 'even'})" for n, p in self.basis) + "}"


def dual_space(space: GradedSpace) -> GradedSpace:
    """V* with dual basis e_i* of the same parity as e_i."""
    return GradedSpace(tuple((f"{n}*", p) for n, p in space.basis))


def parity_shift(space: GradedSpace) -> GradedSpace:
    """sV: same order, names prefixed with ``s``, every parity flipped."""
    return GradedSpace(tuple((f"s{n}", 1 - p) for n, p in space.basis))


def direct_sum(first: GradedSpace, second: GradedSpace) -> GradedSpace:
    names = set(first.names)
    tail = []
    for n, p in second.basis:
        while n in names:
            n = n + "'"
        names.add(n)
        tail.append((n, p))
    return GradedSpace(first.basis + tuple(tail))


@dataclass(frozen=True)
class Vector:
    space: GradedSpace
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = tuple(linalg.as_fraction(c) for c in self.coeffs)
        if len(coeffs) != self.space.dim:
            raise SpaceMismatch("coefficient count does not match the basis")
        object.__setattr__(self, "coeffs", coeffs)

    def parity(self) -> Parity | None:
        """Parity of a nonzero homogeneous vector, else None."""
        ps = {self.space.parity(i) for i, c in enumerate(self.coeffs) if c}
        return ps.pop() if len(ps) == 1 else None

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _check(self, other: Vector):
        if other.space != self.space:
            raise SpaceMismatch("vectors live on different spaces")

    def __add__(self, other: Vector) -> Vector:
        self._check(other)
        return Vector(self.space, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: Vector) -> Vector:
        self._check(other)
        return Vector(self.space, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> Vector:
        return Vector(self.space, tuple(-a for a in self.coeffs))

    def __rmul__(self, c) -> Vector:
        c = linalg.as_fraction(c)
        return Vector(self.space, tuple(c * a for a in self.coeffs))

    def __str__(self):
        terms = [f"{c}*{n}" for c, n in zip(self.coeffs, self.space.names) if c]
        return " + ".join(terms) or "0"


def pair(alpha: Vector, v: Vector) -> Fraction:
    """Canonical pairing <alpha, v> with <e_i*, e_j> = delta_ij."""
    if alpha.space != dual_space(v.space):
        raise SpaceMismatch("first argument must live on the dual of the second's space")
    return sum((a * b for a, b in zip(alpha.coeffs, v.coeffs)), ZERO)


@dataclass(frozen=True)
class LinearMap:
    """Homogeneous map; ``matrix[i][j]`` is the codomain-i coefficient of the image of domain-j."""

    domain: GradedSpace
    codomain: GradedSpace
    parity: Parity
    matrix: Matrix

    def __post_init__(self):
        object.__setattr__(self, "parity", _check_parity(self.parity))
        m = linalg.matrix(self.matrix)
        if len(m) != self.codomain.dim or any(len(row) != self.domain.dim for row in m):
            raise SpaceMismatch(
                f"matrix shape must be {self.codomain.dim}x{self.domain.dim}")
        for i, row in enumerate(m):
            for j, x in enumerate(row):
                if x and self.codomain.parity(i) != (self.domain.parity(j) + self.parity) % 2:
                    raise GradingError(
                        f"entry ({i},{j}) breaks homogeneity of a degree-{self.parity} map")
        object.__setattr__(self, "matrix", m)

    @classmethod
    def zero(cls, domain, codomain, parity=0) -> LinearMap:
        return cls(domain, codomain, parity, linalg.zeros(codomain.dim, domain.dim))

    @classmethod
    def identity(cls, space: GradedSpace) -> LinearMap:
        return cls(space, space, 0, linalg.identity(space.dim))

    def __call__(self, v: Vector) -> Vector:
        if v.space != self.domain:
            raise SpaceMismatch("vector is not in the domain")
        return Vector(self.codomain, linalg.matvec(self.matrix, v.coeffs))

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self.matrix)

    def __matmul__(self, other: LinearMap) -> LinearMap:
        if other.codomain != self.domain:
            raise SpaceMismatch("cannot compose: codomain/domain mismatch")
        return LinearMap(other.domain, self.codomain, (self.parity + other.parity) % 2,
                         linalg.matmul(self.matrix, other.matrix))

    def _check_same(self, other: LinearMap):
        if (self.domain, self.codomain, self.parity) != (other.domain, other.codomain, other.parity):
            raise SpaceMismatch("maps differ in spaces or parity")

    def __add__(self, other: LinearMap) -> LinearMap:
        self._check_same(other)
        return LinearMap(self.domain, self.codomain, self.parity, linalg.add(self.matrix, other.matrix))

    def __sub__(self, other: LinearMap) -> LinearMap:
        self._check_same(other)
        return LinearMap(self.domain, self.codomain, self.parity, linalg.sub(self.matrix, other.matrix))

    def __neg__(self) -> LinearMap:
        return LinearMap(self.domain, self.codomain, self.parity, linalg.scale(-1, self.matrix))

    def __rmul__(self, c) -> LinearMap:
        return LinearMap(self.domain, self.codomain, self.parity, linalg.scale(c, self.matrix))

    def is_invertible(self) -> bool:
        return linalg.is_invertible(self.matrix)

    def inverse(self) -> LinearMap:
        return LinearMap(self.codomain, self.domain, self.parity, linalg.inverse(self.matrix))

    def is_zero(self) -> bool:
        return linalg.is_zero(self.matrix)


def map_from_images(domain: GradedSpace, codomain: GradedSpace, parity: Parity,
                    images: Sequence[Sequence]) -> LinearMap:
    """Build a map from the list of images of the domain basis."""
    return LinearMap(domain, codomain, parity, linalg.transpose(linalg.matrix(images), domain.dim)
                     if images else linalg.zeros(codomain.dim, 0))


@dataclass(frozen=True)
class TensorElement:
    """r = sum_ij coeffs[i][j] e_i (x) e_j, homogeneous of the declared parity."""

    space: GradedSpace
    coeffs: Matrix
    parity: Parity

    def __post_init__(self):
        object.__setattr__(self, "parity", _check_parity(self.parity))
        m = linalg.matrix(self.coeffs)
        n = self.space.dim
        if len(m) != n or any(len(row) != n for row in m):
            raise SpaceMismatch(f"tensor coefficients must be {n}x{n}")
        ps = self.space.parities
        for i in range(n):
            for j in range(n):
                if m[i][j] and (ps[i] + ps[j]) % 2 != self.parity:
                    raise GradingError(
                        f"entry ({i},{j}) has parity {(ps[i] + ps[j]) % 2}, "
                        f"tensor declared parity {self.parity}")
        object.__setattr__(self, "coeffs", m)

    @classmethod
    def from_terms(cls, space: GradedSpace, terms: Iterable[tuple], parity: Parity | None = None
                   ) -> TensorElement:
        """Terms are ``(left, right, coeff)`` with names or indices."""
        n = space.dim
        rows = [[ZERO] * n for _ in range(n)]
        for left, right, c in terms:
            i = space.index(left) if isinstance(left, str) else left
            j = space.index(right) if isinstance(right, str) else right
            rows[i][j] += linalg.as_fraction(c)
        if parity is None:
            ps = {(space.parity(i) + space.parity(j)) % 2
                  for i in range(n) for j in range(n) if rows[i][j]}
            if len(ps) > 1:
                raise GradingError("terms of mixed parity")
            parity = ps.pop() if ps else 0
        return cls(space, linalg.matrix(rows), parity)

    def terms(self) -> list[tuple[int, int, Fraction]]:
        return [(i, j, c) for i, row in enumerate(self.coeffs) for j, c in enumerate(row) if c]

    def is_zero(self) -> bool:
        return linalg.is_zero(self.coeffs)

    def __add__(self, other: TensorElement) -> TensorElement:
        if other.space != self.space or other.parity != self.parity:
            raise SpaceMismatch("tensors differ in space or parity")
        return TensorElement(self.space, linalg.add(self.coeffs, other.coeffs), self.parity)

    def __sub__(self, other: TensorElement) -> TensorElement:
        return self + (-1) * other

    def __neg__(self) -> TensorElement:
        return (-1) * self

    def __rmul__(self, c) -> TensorElement:
        return TensorElement(self.space, linalg.scale(c, self.coeffs), self.parity)

    def __str__(self):
        names = self.space.names
        return " + ".join(f"{c}*{names[i]}(x){names[j]}" for i, j, c in self.terms()) or "0"


@dataclass(frozen=True)
class TripleTensor:
    """sum_ijk coeffs[i][j][k] e_i (x) e_j (x) e_k, stored densely."""

    space: GradedSpace
    coeffs: tuple[tuple[tuple[Fraction, ...], ...], ...]

    @classmethod
    def from_dict(cls, space: GradedSpace, entries: dict) -> TripleTensor:
        n = space.dim
        return cls(space, tuple(tuple(tuple(entries.get((i, j, k), ZERO) for k in range(n))
                                      for j in range(n)) for i in range(n)))

    def entries(self) -> dict[tuple[int, int, int], Fraction]:
        return {(i, j, k): c
                for i, plane in enumerate(self.coeffs)
                for j, row in enumerate(plane)
                for k, c in enumerate(row) if c}

    def is_zero(self) -> bool:
        return not self.entries()

    def __str__(self):
        names = self.space.names
        return " + ".join(f"{c}*{names[i]}(x){names[j]}(x){names[k]}"
                          for (i, j, k), c in sorted(self.entries().items())) or "0"


def twist(r: TensorElement) -> TensorElement:
    """sigma(v (x) w) = (-1)^{|v||w|} w (x) v, extended linearly."""
    ps = r.space.parities
    n = r.space.dim
    out = tuple(tuple(koszul_sign(ps[i], ps[j]) * r.coeffs[i][j] for i in range(n)) for j in range(n))
    return TensorElement(r.space, out, r.parity)


def pair_tensor(alpha: TensorElement, r: TensorElement) -> Fraction:
    """<u1* (x) u2*, v1 (x) v2> = (-1)^{|u2*||v1|} <u1*, v1><u2*, v2>, bilinearly."""
    if alpha.space != dual_space(r.space):
        raise SpaceMismatch("first tensor must live on the dual space")
    ps = r.space.parities
    total = ZERO
    for i, j, c in r.terms():
        a = alpha.coeffs[i][j]
        if a:
            total += koszul_sign(ps[j], ps[i]) * a * c
    return total


SUPERSYMMETRIC = "supersymmetric"
SKEW_SUPERSYMMETRIC = "skew-supersymmetric"
NEITHER = "neither"
BOTH = "both"


def symmetry_class(r: TensorElement) -> str:
    if r.is_zero():
        return BOTH
    s = twist(r)
    if s == r:
        return SUPERSYMMETRIC
    if s == -r:
        return SKEW_SUPERSYMMETRIC
    return NEITHER


def is_dual_symmetric(r: TensorElement) -> bool:
    """sigma(r) = -(-1)^{|r|} r: even skew-supersymmetric or odd supersymmetric."""
    return twist(r) == (-1 if r.parity == 0 else 1) * r
