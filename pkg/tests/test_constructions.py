import numpy as np
import pytest

from hdmkit.constructions import almost_cube, dim_lift, paley2, paley3, yang_product
from hdmkit.errors import DimensionMismatch, DimensionTooSmall, NotHadamardInput
from hdmkit.gf import Field
from hdmkit.ncube import SignCube, is_hadamard, is_proper, layer

INF = None  # oracle-side marker for the point at infinity


def pg(pt):
    return 0 if pt is INF else 1 + pt


def oracle_paley2(F):
    """Scalar evaluation of the 2-D definition, case by case."""
    def h(x, y):
        if x is INF and y is INF:
            return -1
        if x == y or x is INF or y is INF:
            return 1
        return F.chi(F.sub(y, x))
    pts = [INF] + list(F.elems)
    return {(x, y): h(x, y) for x in pts for y in pts}


def oracle_paley3(F):
    """Scalar evaluation of the 3-D definition, case by case."""
    def H(x, y, z):
        if x == y == z:
            return -1
        if x == y or y == z or x == z:
            return 1
        if x is INF:
            return F.chi(F.sub(z, y))
        if y is INF:
            return F.chi(F.sub(x, z))
        if z is INF:
            return F.chi(F.sub(y, x))
        return F.chi(F.mul(F.mul(F.sub(x, y), F.sub(y, z)), F.sub(z, x)))
    pts = [INF] + list(F.elems)
    return {(x, y, z): H(x, y, z) for x in pts for y in pts for z in pts}


def oracle_almost(F, chi0=-1):
    def H(x, y, z):
        if x is INF or y is INF or z is INF:
            return 1
        s = F.add(F.add(x, y), z)
        return chi0 if s == 0 else F.chi(s)
    pts = [INF] + list(F.elems)
    return {(x, y, z): H(x, y, z) for x in pts for y in pts for z in pts}


def two_dim_layers(H):
    for axis in range(H.n):
        for val in range(H.v):
            yield layer(H, {axis: val})


# -- paley2 ---------------------------------------------------------------------

def test_paley2_small_example():
    rows = paley2(Field(3)).array.tolist()
    assert rows == [
        [-1, 1, 1, 1],
        [1, 1, 1, -1],
        [1, -1, 1, 1],
        [1, 1, -1, 1],
    ]


@pytest.mark.parametrize("q", [3, 5, 7, 9])
def test_paley2_matches_scalar_oracle(q):
    F = Field(q)
    cube = paley2(F)
    oracle = oracle_paley2(F)
    for (x, y), val in oracle.items():
        assert cube.get((pg(x), pg(y))) == val


def test_paley2_hadamard_iff_q_3_mod_4():
    assert is_hadamard(paley2(Field(7))).passed
    assert is_hadamard(paley2(Field(11))).passed
    assert not is_hadamard(paley2(Field(5))).passed
    assert not is_hadamard(paley2(Field(9))).passed


# -- paley3 ---------------------------------------------------------------------

def test_paley3_coincidence_entries():
    for q in (3, 7):
        cube = paley3(Field(q))
        assert cube.get((0, 0, 0)) == -1          # all three at infinity
        assert cube.get((1, 1, 0)) == 1           # x = y = 0, z = infinity
        assert cube.get((2, 2, 2)) == -1
        assert cube.get((0, 2, 0)) == 1


def test_paley3_character_entries():
    assert paley3(Field(3)).get((0, 1, 2)) == 1   # chi(1 - 0) = +1
    # chi((0-1)(1-2)(2-0)) = chi(2) = +1 since squares mod 7 are {1, 2, 4}
    assert paley3(Field(7)).get((1, 2, 3)) == 1


@pytest.mark.parametrize("q", [3, 5, 9])
def test_paley3_matches_scalar_oracle(q):
    F = Field(q)
    cube = paley3(F)
    oracle = oracle_paley3(F)
    for (x, y, z), val in oracle.items():
        assert cube.get((pg(x), pg(y), pg(z))) == val


ODD_PRIME_POWERS_LE_101 = [
    3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29, 31, 37, 41, 43, 47, 49,
    53, 59, 61, 67, 71, 73, 79, 81, 83, 89, 97, 101,
]


def test_paley3_is_hadamard_for_every_supported_order():
    for q in ODD_PRIME_POWERS_LE_101:
        rep = is_hadamard(paley3(Field(q)))
        assert rep.passed, f"q={q}: {rep}"


@pytest.mark.parametrize("q", [3, 7, 11])
def test_paley3_proper_when_q_is_3_mod_4(q):
    F = Field(q)
    cube = paley3(F)
    assert is_proper(cube).passed
    assert layer(cube, {2: 0}) == paley2(F)  # fixing z = infinity


@pytest.mark.parametrize("q", [5, 9, 13])
def test_paley3_not_proper_when_q_is_1_mod_4(q):
    # order q+1 = 2 (mod 4): no 2-D Hadamard matrix of that order exists
    assert not is_proper(paley3(Field(q))).passed


# -- product construction ---------------------------------------------------------

H2 = SignCube(2, 2, [1, 1, 1, -1])


def test_yang_dim2_is_identity():
    h = paley2(Field(7))
    assert yang_product(h, 2) == h


def test_yang_order2_entry():
    cube = yang_product(H2, 3)
    assert cube.get((1, 1, 1)) == -1  # (-1)^3


def test_yang_entries_match_pairwise_products():
    h = paley2(Field(3))
    cube = yang_product(h, 3)
    for idx in np.ndindex(4, 4, 4):
        expected = 1
        for j in range(3):
            for k in range(j + 1, 3):
                expected *= h.get((idx[j], idx[k]))
        assert cube.get(idx) == expected


@pytest.mark.parametrize("q", [3, 7])
def test_yang_output_is_proper(q):
    assert is_proper(yang_product(paley2(Field(q)), 3)).passed


def test_yang_rejects_bad_input():
    with pytest.raises(NotHadamardInput):
        yang_product(SignCube(2, 4, [1] * 16), 3)
    with pytest.raises(DimensionMismatch):
        yang_product(yang_product(H2, 3), 3)
    with pytest.raises(DimensionTooSmall):
        yang_product(H2, 1)


# -- dimension lift ----------------------------------------------------------------

def test_lift_small_hadamard():
    lifted = dim_lift(H2)
    assert lifted.n == 3 and lifted.v == 2
    assert is_hadamard(lifted).passed
    for i in range(2):
        for j in range(2):
            for k in range(2):
                assert lifted.get((i, j, k)) == H2.get((i, (j + k) % 2))


def test_lift_of_paley3():
    lifted = dim_lift(paley3(Field(5)))
    assert lifted.n == 4 and lifted.v == 6
    assert is_hadamard(lifted).passed


def test_lift_does_not_preserve_propriety():
    lifted = dim_lift(yang_product(paley2(Field(3)), 3))
    assert is_hadamard(lifted).passed
    # propriety is not implied; the observed outcome for this input is a failure
    assert not is_proper(lifted).passed


def test_lift_rejects_non_hadamard():
    with pytest.raises(NotHadamardInput):
        dim_lift(SignCube(2, 4, [1] * 16))


# -- coordinate-sum cube (negative control) ------------------------------------------

def test_almost_cube_matches_scalar_oracle():
    F = Field(5)
    cube = almost_cube(F, 3)
    for (x, y, z), val in oracle_almost(F).items():
        assert cube.get((pg(x), pg(y), pg(z))) == val


def test_almost_cube_2d_is_hadamard_for_q3():
    assert is_hadamard(almost_cube(Field(3), 2)).passed


@pytest.mark.parametrize("q", [3, 5, 7, 9])
def test_almost_cube_3d_fails(q):
    rep = is_hadamard(almost_cube(Field(q), 3))
    assert not rep.passed
    assert rep.axis == 0 and rep.pair == (0, 1)
    assert rep.deviation == q + 1


def test_almost_cube_chi0_flips_zero_sum_cells():
    F = Field(5)
    minus, plus = almost_cube(F, 2, chi0=-1), almost_cube(F, 2, chi0=1)
    for x in F.elems:
        for y in F.elems:
            expected = 2 if F.add(x, y) == 0 else 0
            assert plus.get((pg(x), pg(y))) - minus.get((pg(x), pg(y))) == expected


def layer_dichotomy_violations(H):
    """2-D layers that are neither Hadamard nor all-ones."""
    bad = []
    for axis in range(H.n):
        for val in range(H.v):
            sl = layer(H, {axis: val})
            if not (np.all(sl.data == 1) or is_hadamard(sl).passed):
                bad.append((axis, val))
    return bad


@pytest.mark.parametrize("q", [3, 7])
def test_almost_cube_layer_dichotomy_q_3_mod_4(q):
    assert layer_dichotomy_violations(almost_cube(Field(q), 3)) == []


@pytest.mark.parametrize("q", [5, 9])
def test_almost_cube_layer_dichotomy_breaks_q_1_mod_4(q):
    # chi(-1) = +1 makes the finite-fixed layers non-orthogonal, so the
    # Hadamard-or-all-ones dichotomy only holds for q = 3 (mod 4)
    bad = layer_dichotomy_violations(almost_cube(Field(q), 3))
    assert bad  # every finite-fixed layer violates
    assert all(val >= 1 for _, val in bad)
