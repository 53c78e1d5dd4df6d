"""Tests for the bit-packed GF(2) linear algebra layer.

Ranks are checked against an independent oracle (naive full elimination on
Python int bitmasks) and kernel dimensions against exhaustive null-space
enumeration on small matrices.
"""

from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from f2moduli import f2la
from f2moduli.errors import ShapeError
from f2moduli.f2la import BitMatrix

# ---------------------------------------------------------------------------
# oracles
# ---------------------------------------------------------------------------


def oracle_rank(rows: list[int], cols: int) -> int:
    """Naive elimination on int bitmask rows, no pivot-order guarantees."""
    rows = list(rows)
    r = 0
    for col in range(cols):
        bit = 1 << col
        pivot = next((i for i in range(r, len(rows)) if rows[i] & bit), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i] & bit:
                rows[i] ^= rows[r]
        r += 1
    return r


def to_masks(m: BitMatrix) -> list[int]:
    dense = m.to_dense()
    return [int(sum(int(v) << j for j, v in enumerate(row))) for row in dense]


def oracle_kernel_dim_exhaustive(m: BitMatrix) -> int:
    """Count null-space vectors by brute force; kernel dim is the log2."""
    dense = m.to_dense().astype(np.uint8)
    count = 0
    for vec in itertools.product((0, 1), repeat=m.cols):
        v = np.array(vec, dtype=np.uint8)
        if m.cols == 0 or not ((dense @ v) & 1).any():
            count += 1
    assert count & (count - 1) == 0
    return count.bit_length() - 1


def random_matrix(rng: np.random.Generator, rows: int, cols: int) -> BitMatrix:
    return BitMatrix.from_dense(rng.integers(0, 2, size=(rows, cols), dtype=np.uint8))


# ---------------------------------------------------------------------------
# rank and kernel
# ---------------------------------------------------------------------------


def test_rank_identity():
    assert f2la.rank(BitMatrix.identity(7)) == 7


def test_rank_zero_matrix():
    assert f2la.rank(BitMatrix.zeros(4, 9)) == 0


def test_rank_single_dependency():
    m = BitMatrix.from_rows([[1, 1, 0], [0, 1, 1], [1, 0, 1]])
    assert f2la.rank(m) == 2  # third row is the sum of the first two


def test_rank_matches_oracle_random():
    rng = np.random.default_rng(7)
    for _ in range(200):
        r, c = int(rng.integers(0, 12)), int(rng.integers(0, 12))
        m = random_matrix(rng, r, c)
        assert f2la.rank(m) == oracle_rank(to_masks(m), c)


def test_rank_wide_matrix_crosses_word_boundary():
    # 70 columns forces a second uint64 word per row.
    rng = np.random.default_rng(3)
    m = random_matrix(rng, 40, 70)
    assert f2la.rank(m) == oracle_rank(to_masks(m), 70)


def test_kernel_dim_exhaustive_small():
    rng = np.random.default_rng(11)
    for _ in range(25):
        r, c = int(rng.integers(0, 8)), int(rng.integers(0, 10))
        m = random_matrix(rng, r, c)
        assert f2la.kernel_dim(m) == oracle_kernel_dim_exhaustive(m)


@given(st.integers(0, 10), st.integers(0, 10), st.integers(0, 2**32 - 1))
@settings(max_examples=60)
def test_rank_nullity(rows, cols, seed):
    m = random_matrix(np.random.default_rng(seed), rows, cols)
    assert f2la.rank(m) + f2la.kernel_dim(m) == cols


@given(st.integers(1, 9), st.integers(1, 9), st.integers(0, 2**32 - 1))
@settings(max_examples=60)
def test_rank_invariant_under_permutations(rows, cols, seed):
    rng = np.random.default_rng(seed)
    dense = rng.integers(0, 2, size=(rows, cols), dtype=np.uint8)
    shuffled = dense[rng.permutation(rows)][:, rng.permutation(cols)]
    assert f2la.rank(BitMatrix.from_dense(dense)) == f2la.rank(BitMatrix.from_dense(shuffled))


def test_rank_invariant_under_transpose():
    rng = np.random.default_rng(5)
    for _ in range(40):
        m = random_matrix(rng, int(rng.integers(0, 10)), int(rng.integers(0, 10)))
        assert f2la.rank(m) == f2la.rank(m.transpose())


# ---------------------------------------------------------------------------
# compose / add / assemble
# ---------------------------------------------------------------------------


def test_compose_matches_dense_matmul():
    rng = np.random.default_rng(13)
    for _ in range(60):
        n, k, m = (int(rng.integers(0, 9)) for _ in range(3))
        a, b = random_matrix(rng, n, k), random_matrix(rng, k, m)
        expect = (a.to_dense().astype(int) @ b.to_dense().astype(int)) % 2
        assert np.array_equal(f2la.compose(a, b).to_dense(), expect.astype(np.uint8))


def test_compose_shape_mismatch():
    with pytest.raises(ShapeError):
        f2la.compose(BitMatrix.zeros(2, 3), BitMatrix.zeros(4, 2))


@given(st.integers(0, 2**32 - 1))
@settings(max_examples=40)
def test_compose_rank_bound(seed):
    rng = np.random.default_rng(seed)
    a = random_matrix(rng, int(rng.integers(1, 9)), int(rng.integers(1, 9)))
    b = random_matrix(rng, a.cols, int(rng.integers(1, 9)))
    assert f2la.rank(f2la.compose(a, b)) <= min(f2la.rank(a), f2la.rank(b))


def test_add_is_xor():
    a = BitMatrix.from_rows([[1, 0], [1, 1]])
    b = BitMatrix.from_rows([[1, 1], [0, 1]])
    assert f2la.add(a, b) == BitMatrix.from_rows([[0, 1], [1, 0]])


def test_block_assemble_single_block_is_identity_operation():
    rng = np.random.default_rng(17)
    m = random_matrix(rng, 5, 4)
    assert f2la.block_assemble({(0, 0): m}, [5], [4]) == m


def test_block_assemble_layout():
    a = BitMatrix.identity(2)
    b = BitMatrix.from_rows([[1], [1]])
    out = f2la.block_assemble({(0, 0): a, (1, 1): b}, [2, 2], [2, 1])
    expect = BitMatrix.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 1], [0, 0, 1]])
    assert out == expect


def test_block_assemble_rejects_misfit():
    with pytest.raises(ShapeError, match=r"\(0, 1\)"):
        f2la.block_assemble({(0, 1): BitMatrix.zeros(2, 2)}, [2], [2, 3])


def test_block_assemble_rank_additive_when_diagonal():
    rng = np.random.default_rng(23)
    a, b = random_matrix(rng, 4, 5), random_matrix(rng, 3, 6)
    out = f2la.block_assemble({(0, 0): a, (1, 1): b}, [4, 3], [5, 6])
    assert f2la.rank(out) == f2la.rank(a) + f2la.rank(b)


def test_kron_with_identity():
    rng = np.random.default_rng(29)
    m = random_matrix(rng, 3, 2)
    out = f2la.kron(m, BitMatrix.identity(4))
    assert (out.rows, out.cols) == (12, 8)
    assert f2la.rank(out) == 4 * f2la.rank(m)


def test_inverse_round_trip():
    rng = f2la.rng_for(1, "inv-test")
    for n in (1, 2, 5, 9):
        m = f2la.random_invertible(n, rng)
        assert f2la.compose(m, f2la.inverse(m)) == BitMatrix.identity(n)


def test_inverse_rejects_singular():
    with pytest.raises(ShapeError, match="singular"):
        f2la.inverse(BitMatrix.from_rows([[1, 1], [1, 1]]))


# ---------------------------------------------------------------------------
# witness synthesis
# ---------------------------------------------------------------------------


def test_synth_canonical_form():
    m = f2la.synth_with_rank(4, 6, 2, seed=0)
    expect = np.zeros((4, 6), dtype=np.uint8)
    expect[0, 0] = expect[1, 1] = 1
    assert np.array_equal(m.to_dense(), expect)


@given(
    st.integers(0, 10),
    st.integers(0, 10),
    st.integers(0, 10),
    st.integers(0, 50),
)
@settings(max_examples=80)
def test_synth_rank_exact_and_reproducible(rows, cols, r, seed):
    if r > min(rows, cols):
        with pytest.raises(ShapeError):
            f2la.synth_with_rank(rows, cols, r, seed)
        return
    m = f2la.synth_with_rank(rows, cols, r, seed)
    assert (m.rows, m.cols) == (rows, cols)
    assert f2la.rank(m) == r
    assert m == f2la.synth_with_rank(rows, cols, r, seed)


def test_synth_seeds_differ():
    a = f2la.synth_with_rank(6, 6, 3, seed=1)
    b = f2la.synth_with_rank(6, 6, 3, seed=2)
    assert a != b


def test_random_invertible_is_invertible():
    for seed in range(10):
        rng = f2la.rng_for(seed, "ri")
        n = 1 + seed % 7
        assert f2la.rank(f2la.random_invertible(n, rng)) == n
