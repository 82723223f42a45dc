"""Irrep inventory of the algebra and multiplicities from the Weyl dimension formula."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .irreps import EmbeddingContext, gram
from .permgroup import Partition, hook_dimension, partitions_of


def weyl_dimension(weights: Sequence[int]) -> int:
    """Dimension of the U(d) irrep with highest weight ``weights`` (d = len(weights)).

    Evaluated as one exact rational product, reduced at the end.
    """
    w = [int(x) for x in weights]
    if any(x < y for x, y in zip(w, w[1:])):
        raise ValueError(f"weights must be non-increasing: {w}")
    num, den = 1, 1
    for i in range(len(w)):
        for j in range(i + 1, len(w)):
            num *= w[i] - w[j] + j - i
            den *= j - i
    out = Fraction(num, den)
    if out.denominator != 1:
        raise ArithmeticError(f"non-integral Weyl dimension {out}")
    return int(out)


@dataclass(frozen=True)
class IrrepLabel:
    """Staircase label: ``kind`` is "N" (α ⊢ n-1, last weight -1) or "M" (α ⊢ n-2)."""

    kind: str
    alpha: Partition
    d: int

    @property
    def allowed(self) -> bool:
        rows = self.d - 1 if self.kind == "N" else self.d
        return len(self.alpha) <= rows

    @property
    def weights(self) -> tuple[int, ...] | None:
        """Length-d highest weight, or None when α has too many rows to pad."""
        if not self.allowed:
            return None
        pad = [0] * (self.d - len(self.alpha))
        if self.kind == "N":
            pad[-1] = -1
        return tuple(self.alpha) + tuple(pad)

    def __str__(self) -> str:
        w = self.weights
        body = ",".join(str(x) for x in (w if w is not None else self.alpha))
        return f"({body})"


@dataclass(frozen=True)
class InventoryRow:
    label: IrrepLabel
    dimension: int | None
    multiplicity: int

    @property
    def sector(self) -> str:
        return self.label.kind

    @property
    def product(self) -> int:
        return (self.dimension or 0) * self.multiplicity


def inventory(n: int, d: int) -> list[InventoryRow]:
    """All staircase labels for (n, d): N-sector first, then M-sector.

    Labels that cannot be padded to length d are kept with multiplicity 0.
    """
    if n < 2 or d < 2:
        raise ValueError("inventory needs n >= 2 and d >= 2")
    ctx = EmbeddingContext(n, d)
    rows = []
    for alpha in partitions_of(n - 1):
        label = IrrepLabel("N", alpha, d)
        mult = weyl_dimension(label.weights) if label.allowed else 0
        rows.append(InventoryRow(label, hook_dimension(alpha), mult))
    for alpha in partitions_of(n - 2):
        label = IrrepLabel("M", alpha, d)
        if not label.allowed:
            rows.append(InventoryRow(label, None, 0))
            continue
        if ctx.full_rank:
            dim = (n - 1) * hook_dimension(alpha)
        else:
            dim = gram(alpha, ctx).rank
        rows.append(InventoryRow(label, dim, weyl_dimension(label.weights)))
    return rows


def checksum(rows: Sequence[InventoryRow]) -> int:
    return sum(r.product for r in rows)
