"""Hand-transcribed expansions of the embedded products, checked against the
library on a free algebra where every product and bracket of two generators
is its own basis symbol."""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from superpybe.graded import GradedSpace, TensorElement
from superpybe.superalgebra import SuperAlgebra
from superpybe.yang_baxter import embedded_product

GENERATORS = ("x1", "y1", "x2", "y2")
PATTERNS = list(product((0, 1), repeat=4))


def free_algebra(pattern) -> SuperAlgebra:
    par = dict(zip(GENERATORS, pattern))
    basis = [(g, par[g]) for g in GENERATORS]
    basis += [(f"{a}.{b}", (par[a] + par[b]) % 2) for a in GENERATORS for b in GENERATORS]
    basis += [(f"[{a},{b}]", (par[a] + par[b]) % 2) for a in GENERATORS for b in GENERATORS]
    space = GradedSpace(tuple(basis))
    prod = {(a, b): {f"{a}.{b}": 1} for a in GENERATORS for b in GENERATORS}
    brk = {(a, b): {f"[{a},{b}]": 1} for a in GENERATORS for b in GENERATORS}
    return SuperAlgebra.from_tables(space, prod, brk, antisymmetrize=False)


def _s(e):
    return -1 if e % 2 else 1


def displayed(pattern) -> dict[str, dict[tuple[str, str, str], int]]:
    """The six sums over i, j of the two-term tensor r = x1 (x) y1 + x2 (x) y2."""
    p = dict(zip(GENERATORS, pattern))
    out = {k: {} for k in ("13.12", "12.23", "23.13", "[13,12]", "[23,13]", "[23,12]")}

    def add(key, term, c):
        out[key][term] = out[key].get(term, 0) + c

    for i, j in product((1, 2), repeat=2):
        xi, yi, xj, yj = f"x{i}", f"y{i}", f"x{j}", f"y{j}"
        add("13.12", (f"{xi}.{xj}", yj, yi), _s(p[yi] * (p[xj] + p[yj])))
        add("12.23", (xi, f"{yi}.{xj}", yj), 1)
        add("23.13", (xj, xi, f"{yi}.{yj}"), _s(p[xj] * (p[xi] + p[yi])))
        add("[13,12]", (f"[{xi},{xj}]", yj, yi), _s(p[yi] * (p[xj] + p[yj])))
        add("[23,13]", (xj, xi, f"[{yi},{yj}]"), _s(p[xj] * (p[xi] + p[yi])))
        add("[23,12]", (xj, f"[{xi},{yj}]", yi), _s(p[xi] * p[xj] + p[yi] * (p[xj] + p[yj])))
    return {k: {t: c for t, c in v.items() if c} for k, v in out.items()}


def computed(pattern) -> dict[str, dict[tuple[str, str, str], Fraction]]:
    A = free_algebra(pattern)
    names = A.space.names
    # one homogeneous tensor per term; the displays are bilinear in the terms
    terms = [TensorElement.from_terms(A.space, [(f"x{i}", f"y{i}", 1)]) for i in (1, 2)]
    specs = {"13.12": ("13", "12", "product"), "12.23": ("12", "23", "product"),
             "23.13": ("23", "13", "product"), "[13,12]": ("13", "12", "bracket"),
             "[23,13]": ("23", "13", "bracket"), "[23,12]": ("23", "12", "bracket")}
    out = {}
    for key, (first, second, op) in specs.items():
        acc: dict = {}
        for ti in terms:
            for tj in terms:
                for (a, b, c), v in embedded_product(A, ti, first, second, op, s=tj).items():
                    t = (names[a], names[b], names[c])
                    acc[t] = acc.get(t, 0) + v
        out[key] = {t: v for t, v in acc.items() if v}
    return out
