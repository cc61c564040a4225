from __future__ import annotations

from fractions import Fraction as F

import pytest
from hypothesis import strategies as st

from superpybe.graded import GradedSpace, LinearMap, TensorElement
from superpybe.superalgebra import SuperAlgebra, family_1dim1, from_supercommutator

FAMILIES = (1, 2, 3, 4, 5)
K_VALUES = (F(1), F(-1), F(2), F(1, 2))


def gl11() -> SuperAlgebra:
    """gl(1|1) with the matrix product and the supercommutator."""
    space = GradedSpace((("e11", 0), ("e22", 0), ("e12", 1), ("e21", 1)))
    unit = {(1, 1): "e11", (2, 2): "e22", (1, 2): "e12", (2, 1): "e21"}
    product = {(n1, n2): {unit[(a, d)]: 1}
               for (a, b), n1 in unit.items() for (c, d), n2 in unit.items() if b == c}
    return from_supercommutator(SuperAlgebra.from_tables(space, product, {}, name="gl(1|1)"))


@pytest.fixture
def fam2():
    return family_1dim1(2, 1)


# -- hypothesis strategies ----------------------------------------------------

small_rationals = st.builds(F, st.integers(-3, 3), st.integers(1, 3))


@st.composite
def graded_spaces(draw, max_dim=3):
    ps = draw(st.lists(st.integers(0, 1), min_size=1, max_size=max_dim))
    return GradedSpace(tuple((f"v{i}", p) for i, p in enumerate(ps)))


@st.composite
def homogeneous_maps(draw, domain, codomain, parity=None):
    if parity is None:
        parity = draw(st.integers(0, 1))
    m = [[draw(small_rationals) if codomain.parity(i) == (domain.parity(j) + parity) % 2 else F(0)
          for j in range(domain.dim)] for i in range(codomain.dim)]
    return LinearMap(domain, codomain, parity, m)


@st.composite
def tensors(draw, space, parity=None):
    if parity is None:
        parity = draw(st.integers(0, 1))
    n = space.dim
    m = [[draw(small_rationals) if (space.parity(i) + space.parity(j)) % 2 == parity else F(0)
          for j in range(n)] for i in range(n)]
    return TensorElement(space, m, parity)
