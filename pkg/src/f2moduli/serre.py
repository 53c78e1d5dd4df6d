"""Framed Betti numbers from base-space ring data.

The framed space is the total space of two stacked circle bundles over
the degree-1 part of the unframed moduli space, both with Euler class
the degree-2 generator ``alpha``.  Running the two Gysin sequences and
keeping track of kernels and cokernels of cup product by alpha gives

    h_r = |cok a_{r-2}| + |ker a_{r-1}| + |cok a_{r-4}| + |ker a_{r-3}|

where ``a_s`` is cup product H^s(base) -> H^{s+2}(base).  Everything the
formula needs is the list of base Betti numbers and the rank of ``a_s``
for each s; explicit matrices are optional and only cross-checked.

The base of genus g has dimension 6g-6, so dims has length 6g-5 and the
rank list length 6g-7 (empty at genus 1, where the base is a point).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .betti import BettiTable
from .errors import ValidationError
from .f2la import BitMatrix, rank as f2rank

__all__ = ["AlphaAction", "serre_betti", "genus2_ring", "load_alpha_profile"]


@dataclass(frozen=True)
class AlphaAction:
    """Cup product by the degree-2 class on the base cohomology.

    ``dims[s]`` is dim H^s(base) for s = 0..6g-6 and ``ranks[s]`` the rank
    of a_s: H^s -> H^{s+2} for s = 0..6g-8.  Validated on construction:
    dims must be nonnegative, start at 1 and be palindromic; ranks must
    fit min(dims[s], dims[s+2]) and be palindromic too, since cup product
    on a closed oriented base pairs a_s with a_{6g-8-s}.  ``matrices``,
    when given, must realise exactly the stated ranks.
    """

    genus: int
    dims: tuple[int, ...]
    ranks: tuple[int, ...]
    matrices: tuple[BitMatrix, ...] | None = None

    def __post_init__(self):
        g = self.genus
        if g < 1:
            raise ValidationError("genus must be at least 1")
        nd, nr = 6 * g - 5, max(0, 6 * g - 7)
        if len(self.dims) != nd:
            raise ValidationError(f"need {nd} base dims for genus {g}, got {len(self.dims)}")
        if len(self.ranks) != nr:
            raise ValidationError(f"need {nr} alpha ranks for genus {g}, got {len(self.ranks)}")
        if any(d < 0 for d in self.dims):
            raise ValidationError("negative base dimension")
        if self.dims[0] != 1:
            raise ValidationError("base must be connected: dims[0] == 1")
        if self.dims != self.dims[::-1]:
            raise ValidationError("base dims must be palindromic")
        for s, r in enumerate(self.ranks):
            if not 0 <= r <= min(self.dims[s], self.dims[s + 2]):
                raise ValidationError(f"alpha rank at degree {s} out of range")
        if self.ranks != self.ranks[::-1]:
            raise ValidationError("alpha ranks must be palindromic")
        if self.matrices is not None:
            if len(self.matrices) != nr:
                raise ValidationError(f"need {nr} matrices, got {len(self.matrices)}")
            for s, m in enumerate(self.matrices):
                if (m.rows, m.cols) != (self.dims[s], self.dims[s + 2]):
                    raise ValidationError(
                        f"matrix at degree {s} is {m.rows}x{m.cols}, "
                        f"profile wants {self.dims[s]}x{self.dims[s + 2]}"
                    )
                if f2rank(m) != self.ranks[s]:
                    raise ValidationError(
                        f"matrix at degree {s} has rank {f2rank(m)}, stated {self.ranks[s]}"
                    )

    def dim(self, s: int) -> int:
        return self.dims[s] if 0 <= s < len(self.dims) else 0

    def rank(self, s: int) -> int:
        return self.ranks[s] if 0 <= s < len(self.ranks) else 0

    def kernel(self, s: int) -> int:
        """dim ker a_s, with out-of-range maps read as zero maps."""
        return self.dim(s) - self.rank(s)

    def cokernel(self, s: int) -> int:
        """dim cok a_s, with out-of-range maps read as zero maps."""
        return self.dim(s + 2) - self.rank(s)


def serre_betti(action: AlphaAction) -> BettiTable:
    """Framed Betti numbers from the base ring data, degrees 0..6g-3."""
    g = action.genus
    values = tuple(
        action.cokernel(r - 2)
        + action.kernel(r - 1)
        + action.cokernel(r - 4)
        + action.kernel(r - 3)
        for r in range(6 * g - 2)
    )
    return BettiTable(g, "F2", values, space="framed")


def genus2_ring() -> AlphaAction:
    """The genus-2 base ring, with explicit cup-product matrices.

    H^*(base) has dims (1, 0, 1, 4, 1, 0, 1): generators alpha in degree
    2, four degree-3 classes, one degree-4 class.  alpha^2 = 0, and alpha
    times the degree-4 class spans the top.  So the alpha ranks are
    (1, 0, 0, 0, 1).
    """
    dims = (1, 0, 1, 4, 1, 0, 1)
    ranks = (1, 0, 0, 0, 1)
    mats = tuple(
        BitMatrix.from_dense(np.full((dims[s], dims[s + 2]), ranks[s], dtype=np.uint8))
        if min(dims[s], dims[s + 2]) == 1
        else BitMatrix.zeros(dims[s], dims[s + 2])
        for s in range(5)
    )
    return AlphaAction(genus=2, dims=dims, ranks=ranks, matrices=mats)


_PROFILE_KEYS = {"genus", "dims", "alpha_ranks", "alpha_matrices"}


def load_alpha_profile(source: str | Path | dict) -> AlphaAction:
    """Read an alpha profile from JSON (path or already-parsed dict).

    Required keys: genus, dims, alpha_ranks.  Optional: alpha_matrices, a
    list of flat row-major 0/1 lists, one per alpha degree; when present
    each matrix must realise the stated rank.  Unknown keys are rejected
    so silent typos cannot slip through.
    """
    if isinstance(source, (str, Path)):
        with open(source) as fh:
            data = json.load(fh)
    else:
        data = source
    if not isinstance(data, dict):
        raise ValidationError("alpha profile must be a JSON object")
    extra = set(data) - _PROFILE_KEYS
    if extra:
        raise ValidationError(f"unknown keys in alpha profile: {sorted(extra)}")
    missing = {"genus", "dims", "alpha_ranks"} - set(data)
    if missing:
        raise ValidationError(f"alpha profile missing keys: {sorted(missing)}")
    g = data["genus"]
    if not isinstance(g, int):
        raise ValidationError("genus must be an integer")
    dims = tuple(data["dims"])
    ranks = tuple(data["alpha_ranks"])
    if not all(isinstance(v, int) for v in dims + ranks):
        raise ValidationError("dims and alpha_ranks must be integer lists")
    action = AlphaAction(genus=g, dims=dims, ranks=ranks)  # shape check first
    if "alpha_matrices" in data:
        flat = data["alpha_matrices"]
        if len(flat) != len(ranks):
            raise ValidationError(
                f"need {len(ranks)} matrices, got {len(flat)}"
            )
        mats = []
        for s, entries in enumerate(flat):
            dom, cod = dims[s], dims[s + 2]
            if len(entries) != dom * cod:
                raise ValidationError(
                    f"matrix at degree {s} needs {dom * cod} entries, got {len(entries)}"
                )
            arr = np.asarray(entries, dtype=np.uint8).reshape(dom, cod)
            mats.append(BitMatrix.from_dense(arr))
        action = AlphaAction(genus=g, dims=dims, ranks=ranks, matrices=tuple(mats))
    return action
