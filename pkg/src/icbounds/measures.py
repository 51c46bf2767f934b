"""Joint input distributions on X x Y and function tables.

A Measure is a dense nonnegative matrix summing to one; a FunctionTable is a
matrix over a finite output alphabet {0, ..., alphabet-1}.  Both are immutable
after construction and safe to share across threads.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .tolerances import LOADER_ATOL, MASS_ATOL

DISJ_MAX_BLOCKS = 2  # disj_hard_measure(k) builds an 8^k x 8^k matrix


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=float, copy=True)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class Measure:
    """Joint probability distribution on a finite grid X x Y."""

    mass: np.ndarray

    def __post_init__(self):
        m = _frozen(self.mass)
        if m.ndim != 2 or m.size == 0:
            raise ValueError("mass must be a nonempty 2-D matrix")
        if np.any(m < 0):
            raise ValueError("mass entries must be nonnegative")
        if abs(m.sum() - 1.0) > MASS_ATOL:
            raise ValueError(f"mass must sum to 1 (got {m.sum()!r})")
        if not np.any(m > 0):
            raise ValueError("measure must have nonempty support")
        object.__setattr__(self, "mass", m)

    @property
    def num_rows(self) -> int:
        return self.mass.shape[0]

    @property
    def num_cols(self) -> int:
        return self.mass.shape[1]

    def support(self) -> list[tuple[int, int]]:
        """Input pairs with strictly positive mass, row-major order."""
        xs, ys = np.nonzero(self.mass > 0)
        return list(zip(xs.tolist(), ys.tolist()))

    @staticmethod
    def normalized(mass) -> "Measure":
        m = np.array(mass, dtype=float)
        total = m.sum()
        if not total > 0:
            raise ValueError("cannot normalize a matrix with zero total mass")
        return Measure(m / total)

    def to_obj(self) -> dict:
        return {
            "rows": self.num_rows,
            "cols": self.num_cols,
            "mass": self.mass.tolist(),
        }

    @staticmethod
    def from_obj(obj: dict) -> "Measure":
        mass = np.array(obj["mass"], dtype=float)
        if mass.shape != (obj["rows"], obj["cols"]):
            raise ValueError("mass shape does not match rows/cols")
        if np.any(mass < 0):
            raise ValueError("mass entries must be nonnegative")
        if abs(mass.sum() - 1.0) > LOADER_ATOL:
            raise ValueError(f"mass sums to {mass.sum()!r}, deviation exceeds {LOADER_ATOL}")
        return Measure.normalized(mass)

    def dumps(self) -> str:
        return json.dumps(self.to_obj())

    @staticmethod
    def loads(text: str) -> "Measure":
        return Measure.from_obj(json.loads(text))


@dataclass(frozen=True)
class FunctionTable:
    """A function f: X x Y -> Z as an integer matrix over Z = {0..alphabet-1}."""

    outputs: np.ndarray
    alphabet: int = field(default=0)

    def __post_init__(self):
        out = np.array(self.outputs, dtype=int, copy=True)
        if out.ndim != 2 or out.size == 0:
            raise ValueError("outputs must be a nonempty 2-D matrix")
        alphabet = self.alphabet if self.alphabet else int(out.max()) + 1
        if alphabet < 1:
            raise ValueError("alphabet must have at least one symbol")
        if np.any(out < 0) or np.any(out >= alphabet):
            raise ValueError("outputs contain symbols outside the alphabet")
        out.setflags(write=False)
        object.__setattr__(self, "outputs", out)
        object.__setattr__(self, "alphabet", alphabet)

    @property
    def num_rows(self) -> int:
        return self.outputs.shape[0]

    @property
    def num_cols(self) -> int:
        return self.outputs.shape[1]

    def to_obj(self) -> dict:
        return {
            "rows": self.num_rows,
            "cols": self.num_cols,
            "alphabet": self.alphabet,
            "outputs": self.outputs.tolist(),
        }

    @staticmethod
    def from_obj(obj: dict) -> "FunctionTable":
        out = np.array(obj["outputs"], dtype=int)
        if out.shape != (obj["rows"], obj["cols"]):
            raise ValueError("outputs shape does not match rows/cols")
        return FunctionTable(out, int(obj["alphabet"]))

    def dumps(self) -> str:
        return json.dumps(self.to_obj())

    @staticmethod
    def loads(text: str) -> "FunctionTable":
        return FunctionTable.from_obj(json.loads(text))


def marginals(mu: Measure) -> tuple[np.ndarray, np.ndarray]:
    """Row and column marginals of a joint measure."""
    return mu.mass.sum(axis=1), mu.mass.sum(axis=0)


def scale_rectangle(mu: Measure, row_weights, col_weights) -> Measure:
    """Reweight rows and columns and renormalize.

    The result is proportional to mu(x,y) * row_weights[x] * col_weights[y].
    Raises ValueError when the reweighted mass vanishes (empty rectangle).
    """
    rw = np.asarray(row_weights, dtype=float)
    cw = np.asarray(col_weights, dtype=float)
    if rw.shape != (mu.num_rows,) or cw.shape != (mu.num_cols,):
        raise ValueError("weight vectors must match measure dimensions")
    if np.any(rw < 0) or np.any(cw < 0):
        raise ValueError("weights must be nonnegative")
    scaled = mu.mass * rw[:, None] * cw[None, :]
    total = scaled.sum()
    if not total > 0:
        raise ValueError("rectangle scaling produced an empty measure")
    return Measure(scaled / total)


def product(mu1, mu2) -> Measure:
    """Product measure of two marginal probability vectors."""
    p = np.asarray(mu1, dtype=float)
    q = np.asarray(mu2, dtype=float)
    for v in (p, q):
        if v.ndim != 1 or np.any(v < 0) or abs(v.sum() - 1.0) > MASS_ATOL:
            raise ValueError("factors must be probability vectors summing to 1")
    return Measure.normalized(np.outer(p, q))


def is_product(mu: Measure, atol: float = MASS_ATOL) -> bool:
    row, col = marginals(mu)
    return bool(np.allclose(mu.mass, np.outer(row, col), atol=atol, rtol=0.0))


# Uniform distribution over six disjoint pairs of singleton 3-bit sets.  A
# 3-bit string maps to its integer value, so e.g. 100 -> 4 and 001 -> 1.
_DISJ_BLOCK_PAIRS = [(4, 2), (4, 1), (2, 4), (2, 1), (1, 4), (1, 2)]


def disj_hard_measure(k: int, max_blocks: int = DISJ_MAX_BLOCKS) -> Measure:
    """k-fold tensor power of the uniform six-pair block measure on 8x8.

    Inputs are 3k-bit strings indexed by their integer value; every supported
    pair of the single block is a pair of disjoint singleton sets.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    if k > max_blocks:
        raise ValueError(f"k={k} exceeds the configured maximum of {max_blocks}")
    block = np.zeros((8, 8))
    for x, y in _DISJ_BLOCK_PAIRS:
        block[x, y] = 1.0 / 6.0
    mass = block
    for _ in range(k - 1):
        mass = np.kron(mass, block)
    return Measure.normalized(mass)


def disj_function_table(k: int, max_blocks: int = DISJ_MAX_BLOCKS) -> FunctionTable:
    """Set disjointness on 3k-bit strings; f(x,y)=1 iff the sets are disjoint."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    if k > max_blocks:
        raise ValueError(f"k={k} exceeds the configured maximum of {max_blocks}")
    n = 8**k
    idx = np.arange(n)
    out = ((idx[:, None] & idx[None, :]) == 0).astype(int)
    return FunctionTable(out, 2)
