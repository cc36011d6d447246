"""Frames of discernment and their subset lattice.

A frame is an ordered list of mutually exclusive hypothesis labels; a
subset is a 64-bit mask over the label positions.  Frames compare by an
identity token minted at construction, never by label equality, so masses
built over look-alike frames cannot be mixed accidentally.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (
    DuplicateLabelError,
    EmptyFrameError,
    FrameMismatchError,
    FrameSizeError,
    RefinementError,
)

_frame_ids = itertools.count(1)


class Frame:
    """An ordered frame of discernment of at most 64 hypotheses."""

    __slots__ = ("labels", "_index", "_uid")

    def __init__(self, labels: Sequence[str]):
        labels = tuple(labels)
        if not labels:
            raise EmptyFrameError("a frame needs at least one label")
        if len(labels) > 64:
            raise FrameSizeError(f"{len(labels)} labels; at most 64 are supported")
        seen: dict[str, int] = {}
        for pos, lab in enumerate(labels):
            if not isinstance(lab, str) or not lab:
                raise DuplicateLabelError(f"label {lab!r} is not a non-empty string")
            if lab in seen:
                raise DuplicateLabelError(f"duplicate label {lab!r}")
            seen[lab] = pos
        self.labels = labels
        self._index = seen
        self._uid = next(_frame_ids)

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Frame) and self._uid == other._uid

    def __hash__(self) -> int:
        return hash(self._uid)

    def __repr__(self) -> str:
        return f"Frame({{{', '.join(self.labels)}}})"

    def bit(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"label {label!r} not in {self!r}") from None

    def subset(self, labels: Iterable[str] = ()) -> "Subset":
        mask = 0
        for lab in labels:
            mask |= 1 << self.bit(lab)
        return Subset(self, mask)

    def singleton(self, label: str) -> "Subset":
        return Subset(self, 1 << self.bit(label))

    @property
    def empty(self) -> "Subset":
        return Subset(self, 0)

    @property
    def full(self) -> "Subset":
        return Subset(self, self.full_mask)

    def subsets(self) -> Iterator["Subset"]:
        """All 2**n subsets in ascending mask order."""
        for mask in range(1 << self.size):
            yield Subset(self, mask)


def make_frame(labels: Sequence[str]) -> Frame:
    """Build a frame; label order fixes the bit positions."""
    return Frame(labels)


@dataclass(frozen=True)
class Subset:
    """A subset of a frame, stored as a bitmask."""

    frame: Frame
    mask: int

    def __post_init__(self):
        if not 0 <= self.mask <= self.frame.full_mask:
            raise ValueError(f"mask {self.mask:#x} out of range for {self.frame!r}")

    def _check(self, other: "Subset") -> None:
        if not isinstance(other, Subset):
            raise TypeError(f"expected Subset, got {type(other).__name__}")
        if other.frame != self.frame:
            raise FrameMismatchError(
                f"subsets of {self.frame!r} and {other.frame!r} cannot be combined"
            )

    def __and__(self, other: "Subset") -> "Subset":
        self._check(other)
        return Subset(self.frame, self.mask & other.mask)

    def __or__(self, other: "Subset") -> "Subset":
        self._check(other)
        return Subset(self.frame, self.mask | other.mask)

    def __invert__(self) -> "Subset":
        return Subset(self.frame, self.mask ^ self.frame.full_mask)

    def complement(self) -> "Subset":
        return ~self

    def intersection(self, other: "Subset") -> "Subset":
        return self & other

    def union(self, other: "Subset") -> "Subset":
        return self | other

    def issubset(self, other: "Subset") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    @property
    def is_empty(self) -> bool:
        return self.mask == 0

    @property
    def is_full(self) -> bool:
        return self.mask == self.frame.full_mask

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, label: str) -> bool:
        return bool(self.mask >> self.frame.bit(label) & 1)

    def members(self) -> tuple[str, ...]:
        return tuple(
            lab for i, lab in enumerate(self.frame.labels) if self.mask >> i & 1
        )

    def render(self) -> str:
        """Deterministic text: ``{}``, ``theta``, or ``{a,b}`` in bit order."""
        if self.is_full:
            return "theta"
        return "{" + ",".join(self.members()) + "}"

    def __repr__(self) -> str:
        return f"Subset({self.render()})"


class Refinement:
    """A partition-respecting map from a coarse frame into a fine one.

    Every coarse label maps to a non-empty fine subset; the images are
    pairwise disjoint and jointly cover the fine frame.
    """

    __slots__ = ("coarse", "fine", "_images")

    def __init__(self, coarse: Frame, fine: Frame, mapping: Mapping[str, Sequence[str]]):
        unknown = set(mapping) - set(coarse.labels)
        if unknown:
            raise RefinementError(f"unknown coarse labels: {sorted(unknown)}")
        missing = set(coarse.labels) - set(mapping)
        if missing:
            raise RefinementError(f"unmapped coarse labels: {sorted(missing)}")
        images: dict[str, Subset] = {}
        covered = 0
        for lab in coarse.labels:
            img = fine.subset(mapping[lab])
            if img.is_empty:
                raise RefinementError(f"image of {lab!r} is empty")
            if covered & img.mask:
                raise RefinementError(f"image of {lab!r} overlaps an earlier image")
            covered |= img.mask
            images[lab] = img
        if covered != fine.full_mask:
            left_out = Subset(fine, fine.full_mask ^ covered).members()
            raise RefinementError(f"images do not cover the fine frame: {left_out}")
        self.coarse = coarse
        self.fine = fine
        self._images = images

    def image(self, label: str) -> Subset:
        return self._images[label]

    def refine(self, a: Subset) -> Subset:
        """Union of the images of a coarse subset's members."""
        if a.frame != self.coarse:
            raise FrameMismatchError("subset does not belong to the coarse frame")
        mask = 0
        for lab in a.members():
            mask |= self._images[lab].mask
        return Subset(self.fine, mask)


def make_refinement(
    coarse: Frame, fine: Frame, mapping: Mapping[str, Sequence[str]]
) -> Refinement:
    return Refinement(coarse, fine, mapping)


def refine_subset(r: Refinement, a: Subset) -> Subset:
    return r.refine(a)


class ProductFrame(Frame):
    """A frame whose hypotheses are pairs drawn from two label lists.

    Pair labels are rendered ``(left,right)`` in row-major order, so the
    bit of ``(a_i, b_j)`` is ``i*len(b_labels) + j``.
    """

    __slots__ = ("left_labels", "right_labels")

    def __init__(self, left_labels: Sequence[str], right_labels: Sequence[str]):
        left = Frame(left_labels)  # validates each factor independently
        right = Frame(right_labels)
        if left.size * right.size > 64:
            raise FrameSizeError(
                f"product of {left.size} x {right.size} labels exceeds 64"
            )
        pairs = [f"({a},{b})" for a in left.labels for b in right.labels]
        super().__init__(pairs)
        self.left_labels = left.labels
        self.right_labels = right.labels

    def pair(self, left: str, right: str) -> Subset:
        return self.singleton(f"({left},{right})")

    def cylinder_left(self, label: str) -> Subset:
        """All pairs whose first component is ``label``."""
        i = self.left_labels.index(label)
        n = len(self.right_labels)
        return Subset(self, ((1 << n) - 1) << (i * n))

    def cylinder_right(self, label: str) -> Subset:
        """All pairs whose second component is ``label``."""
        j = self.right_labels.index(label)
        n = len(self.right_labels)
        mask = 0
        for i in range(len(self.left_labels)):
            mask |= 1 << (i * n + j)
        return Subset(self, mask)

    def cylinder_left_set(self, labels: Iterable[str]) -> Subset:
        out = self.empty
        for lab in labels:
            out = out | self.cylinder_left(lab)
        return out

    def cylinder_right_set(self, labels: Iterable[str]) -> Subset:
        out = self.empty
        for lab in labels:
            out = out | self.cylinder_right(lab)
        return out


def product_frame(
    left_labels: Sequence[str], right_labels: Sequence[str]
) -> ProductFrame:
    return ProductFrame(left_labels, right_labels)
