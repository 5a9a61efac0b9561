"""Quadratic-character matrix constructions over the projective line.

Rows/columns/axes are indexed by the q+1 projective points in pg_points
order (infinity first, then field elements), so cube index 0 is the point
at infinity and index 1+a is the field element a.

Entry generation is vectorized through the field's difference and product
tables plus a precomputed character table: building the order-(q+1)
3-cube costs a handful of O(q^3) array gathers.
"""

import numpy as np

from .errors import DimensionMismatch, DimensionTooSmall, NotHadamardInput
from .gf import Field
from .ncube import SignCube, is_hadamard


def paley2(F: Field) -> SignCube:
    """2-D quadratic-residue matrix of order q+1: -1 at (inf, inf), +1 on
    the rest of the diagonal and the infinity row/column, chi(y - x)
    elsewhere.  Hadamard for q = 3 (mod 4)."""
    v = F.q + 1
    diff_chi = F.chi_table[F.sub_table]  # chi(x - y), junk on the diagonal
    h = np.ones((v, v), dtype=np.int8)
    h[1:, 1:] = diff_chi.T
    np.fill_diagonal(h[1:, 1:], 1)
    h[0, 0] = -1
    return SignCube(2, v, h)


def paley3(F: Field) -> SignCube:
    """3-D quadratic-residue cube of order q+1.

    Entries: -1 when all three coordinates coincide; +1 when exactly two
    coincide; chi of the opposite difference when one coordinate is
    infinity (chi(z-y), chi(x-z), chi(y-x) for x, y, z = infinity
    respectively); chi((x-y)(y-z)(z-x)) for distinct finite coordinates.
    """
    q, v = F.q, F.q + 1
    sub, mul, chi = F.sub_table, F.mul_table, F.chi_table
    diff_chi = chi[sub]

    H = np.ones((v, v, v), dtype=np.int8)
    d_xy = sub[:, :, None]     # x - y
    d_yz = sub[None, :, :]     # y - z
    d_zx = sub.T[:, None, :]   # z - x
    H[1:, 1:, 1:] = chi[mul[mul[d_xy, d_yz], d_zx]]
    H[0, 1:, 1:] = diff_chi.T  # chi(z - y)
    H[1:, 0, 1:] = diff_chi    # chi(x - z)
    H[1:, 1:, 0] = diff_chi.T  # chi(y - x)

    # coincidence cells overwrite the junk chi(0) sentinels left above
    i = np.arange(v)
    H[i, i, :] = 1
    H[i, :, i] = 1
    H[:, i, i] = 1
    H[i, i, i] = -1
    return SignCube(3, v, H)


def yang_product(h: SignCube, dim: int) -> SignCube:
    """Entrywise product of a 2-D Hadamard matrix over all coordinate
    pairs; yields a proper dim-dimensional Hadamard matrix."""
    if h.n != 2:
        raise DimensionMismatch(f"input must be 2-dimensional, got n={h.n}")
    if dim < 2:
        raise DimensionTooSmall("need dim >= 2")
    if not is_hadamard(h).passed:
        raise NotHadamardInput("product construction needs a Hadamard input")
    if dim == 2:
        return SignCube(2, h.v, h.data)
    v = h.v
    out = np.ones((v,) * dim, dtype=np.int8)
    for j in range(dim):
        for k in range(j + 1, dim):
            shape = [1] * dim
            shape[j] = shape[k] = v
            out = out * h.array.reshape(shape)
    return SignCube(dim, v, out)


def dim_lift(h: SignCube) -> SignCube:
    """Lift an n-dimensional Hadamard matrix to n+1 dimensions by reading
    the last coordinate as a sum of two, modulo v.  Does not preserve
    propriety."""
    if not is_hadamard(h).passed:
        raise NotHadamardInput("dimension lift needs a Hadamard input")
    v = h.v
    folded = (np.arange(v)[:, None] + np.arange(v)[None, :]) % v
    return SignCube(h.n + 1, v, h.array[..., folded])


def almost_cube(F: Field, dim: int, chi0: int = -1) -> SignCube:
    """Coordinate-sum character cube: +1 whenever a coordinate is infinity,
    otherwise chi(x_1 + ... + x_dim) with chi(0) := chi0.

    Not a higher-dimensional Hadamard matrix for dim >= 3; kept as the
    negative control for the verifier.
    """
    if dim < 2:
        raise DimensionTooSmall("need dim >= 2")
    if chi0 not in (-1, 1):
        raise ValueError("chi0 must be +1 or -1")
    q, v = F.q, F.q + 1
    add = F.add_table
    total = np.arange(q)
    for _ in range(dim - 1):
        total = add[total[..., None], np.arange(q)]
    chi = F.chi_table.copy()
    chi[0] = chi0
    H = np.ones((v,) * dim, dtype=np.int8)
    H[(slice(1, None),) * dim] = chi[total]
    return SignCube(dim, v, H)
