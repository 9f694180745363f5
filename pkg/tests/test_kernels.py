"""Pure and compiled kernels must be interchangeable."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from hallmark import _kernel_py
from hallmark import catalog

_kernel_cy = pytest.importorskip(
    "hallmark._kernel_cy", reason="compiled extension not built"
)

BACKENDS = [_kernel_py, _kernel_cy]

perm_images = st.integers(min_value=1, max_value=40).flatmap(
    lambda n: st.permutations(range(n))
)


def test_backend_tags():
    assert _kernel_py.BACKEND == "pure"
    assert _kernel_cy.BACKEND == "compiled"


@given(perm_images)
def test_pack_unpack_round_trip(images):
    images = tuple(images)
    for k in BACKENDS:
        assert k.unpack(k.pack(images)) == images
    assert _kernel_py.pack(images) == _kernel_cy.pack(images)


@given(perm_images, st.randoms())
def test_row_arithmetic_agrees(images, rng):
    images = tuple(images)
    other = list(range(len(images)))
    rng.shuffle(other)
    other = tuple(other)
    a_py = _kernel_py.pack(images)
    b_py = _kernel_py.pack(other)
    for k in BACKENDS:
        assert k.unpack(k.compose(a_py, b_py)) == oracles.compose(images, other)
        assert k.unpack(k.inverse(a_py)) == oracles.inverse(images)
        assert k.order_of(a_py) == oracles.element_order(images)
        assert k.unpack(k.conjugate(a_py, b_py)) == oracles.compose(
            oracles.compose(oracles.inverse(other), images), other
        )


@pytest.mark.parametrize("name", ["s4", "d6", "a5", "frob20", "psl2_7"])
def test_group_kernels_agree(name):
    group = catalog.build(name)
    degree = group.degree
    gens = [_kernel_py.pack(g.images) for g in group.generators]
    cap = group.order + 1

    rows_py = _kernel_py.close_group(gens, degree, cap)
    rows_cy = _kernel_cy.close_group(gens, degree, cap)
    assert rows_py == rows_cy
    assert len(rows_py) == group.order

    assert _kernel_py.conjugacy_partition(rows_py, gens) == _kernel_cy.conjugacy_partition(
        rows_cy, gens
    )
    assert _kernel_py.orders_list(rows_py) == _kernel_cy.orders_list(rows_cy)

    probe = gens[:1]
    assert _kernel_py.centralizer_filter(rows_py, probe) == _kernel_cy.centralizer_filter(
        rows_cy, probe
    )

    sub_rows = _kernel_py.close_group(probe, degree, cap)
    sub_set = set(sub_rows)
    assert _kernel_py.normalizer_filter(
        rows_py, probe, sub_set
    ) == _kernel_cy.normalizer_filter(rows_cy, probe, sub_set)

    for g in gens:
        assert _kernel_py.coset_min(sub_rows, g) == _kernel_cy.coset_min(sub_rows, g)


def test_close_group_cap_is_shared_behavior():
    group = catalog.build("s4")
    gens = [_kernel_py.pack(g.images) for g in group.generators]
    assert _kernel_py.close_group(gens, 4, 23) is None
    assert _kernel_cy.close_group(gens, 4, 23) is None
