"""Dense linear algebra over GF(2) with bit-packed rows.

Matrices store each row as a strip of uint64 words, so row updates during
Gaussian elimination are whole-word XORs.  All operations are pure: a
``BitMatrix`` is never mutated after construction, and every routine that
"modifies" a matrix returns a fresh one.

Elimination uses a fixed pivot order (leftmost unused column first, then
topmost available row), which makes ranks, inverses and synthesized
witnesses reproducible across runs and platforms.
"""

from __future__ import annotations

import hashlib
from typing import Iterable, Sequence

import numpy as np

from .errors import ShapeError

WORD = 64

__all__ = [
    "BitMatrix",
    "rank",
    "kernel_dim",
    "compose",
    "add",
    "block_assemble",
    "kron",
    "inverse",
    "synth_with_rank",
    "random_invertible",
    "rng_for",
]


def _words(cols: int) -> int:
    return max(1, (cols + WORD - 1) // WORD)


class BitMatrix:
    """Immutable GF(2) matrix of shape ``rows x cols``.

    The packed storage is an internal detail; use :meth:`from_dense`,
    :meth:`to_dense`, :meth:`from_rows` and indexing helpers instead of
    touching ``_bits`` directly.
    """

    __slots__ = ("rows", "cols", "_bits")

    def __init__(self, rows: int, cols: int, bits: np.ndarray | None = None):
        if rows < 0 or cols < 0:
            raise ShapeError(f"negative shape ({rows}, {cols})")
        self.rows = rows
        self.cols = cols
        nw = _words(cols)
        if bits is None:
            bits = np.zeros((rows, nw), dtype=np.uint64)
        else:
            bits = np.array(bits, dtype=np.uint64, copy=True)
            if bits.shape != (rows, nw):
                raise ShapeError(
                    f"packed storage shape {bits.shape} does not match ({rows}, {nw})"
                )
            # Mask stray bits beyond the last valid column.
            rem = cols % WORD
            if rem and nw:
                bits[:, -1] &= np.uint64((1 << rem) - 1)
        bits.setflags(write=False)
        self._bits = bits

    # -- constructors -------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        bits = np.zeros((n, _words(n)), dtype=np.uint64)
        for i in range(n):
            bits[i, i // WORD] = np.uint64(1) << np.uint64(i % WORD)
        return cls(n, n, bits)

    @classmethod
    def from_rows(cls, data: Sequence[Iterable[int]], cols: int | None = None) -> "BitMatrix":
        """Build from an iterable of 0/1 rows."""
        rows = [list(r) for r in data]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for i, r in enumerate(rows):
            if len(r) != cols:
                raise ShapeError(f"row {i} has length {len(r)}, expected {cols}")
        bits = np.zeros((len(rows), _words(cols)), dtype=np.uint64)
        for i, r in enumerate(rows):
            for j, v in enumerate(r):
                if v & 1:
                    bits[i, j // WORD] |= np.uint64(1) << np.uint64(j % WORD)
        return cls(len(rows), cols, bits)

    @classmethod
    def from_dense(cls, arr: np.ndarray) -> "BitMatrix":
        arr = np.asarray(arr)
        if arr.ndim != 2:
            raise ShapeError(f"dense input must be 2-d, got shape {arr.shape}")
        return cls.from_rows((arr & 1).tolist(), arr.shape[1])

    # -- views ---------------------------------------------------------

    def to_dense(self) -> np.ndarray:
        """Unpack to a uint8 array of 0/1 entries."""
        out = np.zeros((self.rows, self.cols), dtype=np.uint8)
        if self.cols:
            idx = np.arange(self.cols)
            w, b = idx // WORD, (idx % WORD).astype(np.uint64)
            for i in range(self.rows):
                out[i] = (self._bits[i, w] >> b) & np.uint64(1)
        return out

    def get(self, i: int, j: int) -> int:
        return int((self._bits[i, j // WORD] >> np.uint64(j % WORD)) & np.uint64(1))

    def row_support(self, i: int) -> list[int]:
        """Column indices of the nonzero entries in row ``i``."""
        if not self.cols:
            return []
        idx = np.arange(self.cols)
        vals = (self._bits[i, idx // WORD] >> (idx % WORD).astype(np.uint64)) & np.uint64(1)
        return [int(j) for j in np.nonzero(vals)[0]]

    def is_zero(self) -> bool:
        return not self._bits.any()

    def transpose(self) -> "BitMatrix":
        return BitMatrix.from_dense(self.to_dense().T)

    # -- dunder --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and bool(np.array_equal(self._bits, other._bits))
        )

    def __hash__(self):  # pragma: no cover - immutability guard only
        return hash((self.rows, self.cols, self._bits.tobytes()))

    def __repr__(self) -> str:
        return f"BitMatrix({self.rows}x{self.cols}, rank={rank(self)})"


# ---------------------------------------------------------------------------
# elimination core
# ---------------------------------------------------------------------------


def _echelon(bits: np.ndarray, rows: int, cols: int, reduced: bool = False):
    """In-place row echelon form with the fixed pivot order.

    Returns (rank, pivot column list).  With ``reduced`` the result is the
    Gauss-Jordan form (pivot columns cleared above the pivot as well).
    """
    r = 0
    pivots: list[int] = []
    for col in range(cols):
        if r == rows:
            break
        w = col // WORD
        b = np.uint64(col % WORD)
        colvals = (bits[r:, w] >> b) & np.uint64(1)
        nz = np.nonzero(colvals)[0]
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            bits[[r, p]] = bits[[p, r]]
        below = (bits[r + 1 :, w] >> b) & np.uint64(1)
        sel = np.nonzero(below)[0] + r + 1
        if sel.size:
            bits[sel] ^= bits[r]
        if reduced and r:
            above = (bits[:r, w] >> b) & np.uint64(1)
            sel = np.nonzero(above)[0]
            if sel.size:
                bits[sel] ^= bits[r]
        pivots.append(col)
        r += 1
    return r, pivots


def rank(m: BitMatrix) -> int:
    """Rank over GF(2), computed by packed Gaussian elimination."""
    if m.rows == 0 or m.cols == 0:
        return 0
    work = m._bits.copy()
    r, _ = _echelon(work, m.rows, m.cols)
    return r


def kernel_dim(m: BitMatrix) -> int:
    """Dimension of the right null space: cols minus rank."""
    return m.cols - rank(m)


def compose(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """Matrix product ``a @ b`` over GF(2) (apply ``b`` first, then ``a``)."""
    if a.cols != b.rows:
        raise ShapeError(f"compose: a is {a.rows}x{a.cols}, b is {b.rows}x{b.cols}")
    out = np.zeros((a.rows, b._bits.shape[1]), dtype=np.uint64)
    for i in range(a.rows):
        sup = a.row_support(i)
        if sup:
            out[i] = np.bitwise_xor.reduce(b._bits[sup], axis=0)
    return BitMatrix(a.rows, b.cols, out)


def add(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """Entrywise sum (XOR)."""
    if a.rows != b.rows or a.cols != b.cols:
        raise ShapeError(f"add: shapes {a.rows}x{a.cols} and {b.rows}x{b.cols}")
    return BitMatrix(a.rows, a.cols, a._bits ^ b._bits)


def block_assemble(
    blocks: dict[tuple[int, int], BitMatrix],
    row_dims: Sequence[int],
    col_dims: Sequence[int],
) -> BitMatrix:
    """Assemble a sparse dict of blocks into one matrix.

    ``blocks[(i, j)]`` is placed at block row ``i``, block column ``j``;
    missing blocks are zero.  Each block must match the declared dims.
    """
    row_dims = list(row_dims)
    col_dims = list(col_dims)
    row_off = np.concatenate(([0], np.cumsum(row_dims))).astype(int)
    col_off = np.concatenate(([0], np.cumsum(col_dims))).astype(int)
    total_r, total_c = int(row_off[-1]), int(col_off[-1])
    dense = np.zeros((total_r, total_c), dtype=np.uint8)
    for (bi, bj), blk in blocks.items():
        if not (0 <= bi < len(row_dims) and 0 <= bj < len(col_dims)):
            raise ShapeError(f"block ({bi}, {bj}) outside the {len(row_dims)}x{len(col_dims)} grid")
        if blk.rows != row_dims[bi] or blk.cols != col_dims[bj]:
            raise ShapeError(
                f"block ({bi}, {bj}) is {blk.rows}x{blk.cols}, "
                f"slot wants {row_dims[bi]}x{col_dims[bj]}"
            )
        dense[row_off[bi] : row_off[bi + 1], col_off[bj] : col_off[bj + 1]] = blk.to_dense()
    return BitMatrix.from_dense(dense)


def kron(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """Kronecker product; used for maps of the form (profile x identity)."""
    if a.rows * b.rows == 0 or a.cols * b.cols == 0:
        return BitMatrix.zeros(a.rows * b.rows, a.cols * b.cols)
    return BitMatrix.from_dense(np.kron(a.to_dense(), b.to_dense()))


def inverse(m: BitMatrix) -> BitMatrix:
    """Inverse of a square invertible matrix (Gauss-Jordan on [m | I])."""
    if m.rows != m.cols:
        raise ShapeError(f"inverse of non-square {m.rows}x{m.cols}")
    n = m.rows
    if n == 0:
        return BitMatrix.zeros(0, 0)
    aug = np.concatenate([m.to_dense(), np.eye(n, dtype=np.uint8)], axis=1)
    work = BitMatrix.from_dense(aug)._bits.copy()
    r, pivots = _echelon(work, n, 2 * n, reduced=True)
    if r < n or pivots[:n] != list(range(n)):
        raise ShapeError("matrix is singular")
    full = BitMatrix(n, 2 * n, work).to_dense()
    return BitMatrix.from_dense(full[:, n:])


# ---------------------------------------------------------------------------
# deterministic witnesses
# ---------------------------------------------------------------------------


def rng_for(seed: int, tag: str) -> np.random.Generator:
    """Generator keyed by (seed, tag); stable across platforms and runs."""
    h = hashlib.blake2b(f"{seed}:{tag}".encode(), digest_size=8).digest()
    return np.random.Generator(np.random.PCG64(int.from_bytes(h, "little")))


def random_invertible(n: int, rng: np.random.Generator) -> BitMatrix:
    """Random invertible n x n matrix, built as P @ L @ U.

    Unit-diagonal triangular factors and a permutation guarantee
    invertibility without rejection sampling.
    """
    if n == 0:
        return BitMatrix.zeros(0, 0)
    lo = np.tril(rng.integers(0, 2, size=(n, n), dtype=np.uint8), k=-1) + np.eye(n, dtype=np.uint8)
    up = np.triu(rng.integers(0, 2, size=(n, n), dtype=np.uint8), k=1) + np.eye(n, dtype=np.uint8)
    perm = rng.permutation(n)
    prod = (lo @ up) & 1
    return BitMatrix.from_dense(prod[perm])


def synth_with_rank(rows: int, cols: int, r: int, seed: int = 0) -> BitMatrix:
    """Deterministic witness of exact rank ``r``.

    Seed 0 returns the canonical form: an r x r identity block in the top
    left corner, zero elsewhere.  Other seeds conjugate that form by random
    invertible matrices on both sides, so the rank is exact by construction.
    """
    if not (0 <= r <= min(rows, cols)):
        raise ShapeError(f"rank {r} impossible for a {rows}x{cols} matrix")
    canon = np.zeros((rows, cols), dtype=np.uint8)
    for i in range(r):
        canon[i, i] = 1
    base = BitMatrix.from_dense(canon)
    if seed == 0 or rows == 0 or cols == 0:
        return base
    u = random_invertible(rows, rng_for(seed, f"synth-left:{rows}x{cols}r{r}"))
    v = random_invertible(cols, rng_for(seed, f"synth-right:{rows}x{cols}r{r}"))
    return compose(compose(u, base), v)
