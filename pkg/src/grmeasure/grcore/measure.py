"""Gabriel-Roiter measures as finite sets of positive integers.

A measure ``I`` stands for the rational number ``sum(2**-i for i in I)``; the
order is computed on the sets directly, the rational view is only used for
display and cross-checks.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Iterator


def measure_compare(I: Iterable[int], J: Iterable[int]) -> int:
    """Return -1, 0 or 1 as ``I`` is smaller, equal or larger than ``J``.

    Both sequences are read in ascending order; at the first difference the
    sequence with the smaller element is the larger measure, and a proper
    prefix is smaller than its extensions.
    """
    a = sorted(I)
    b = sorted(J)
    for x, y in zip(a, b):
        if x != y:
            return 1 if x < y else -1
    if len(a) == len(b):
        return 0
    return 1 if len(a) > len(b) else -1


@total_ordering
class GRMeasure:
    __slots__ = ("elements",)

    def __init__(self, elements: Iterable[int] = ()):
        els = tuple(sorted(int(x) for x in elements))
        if any(x < 1 for x in els):
            raise ValueError("measure elements must be positive integers")
        if any(x == y for x, y in zip(els, els[1:])):
            raise ValueError("measure elements must be distinct")
        self.elements = els

    @classmethod
    def parse(cls, text: str) -> "GRMeasure":
        """Read ``"{1,3,5}"`` (braces optional, blanks ignored)."""
        body = text.strip()
        if body.startswith("{") and body.endswith("}"):
            body = body[1:-1]
        body = body.strip()
        if not body:
            return cls()
        if not re.fullmatch(r"\s*\d+(\s*,\s*\d+)*\s*", body):
            raise ValueError(f"not a measure: {text!r}")
        return cls(int(x) for x in body.split(","))

    @property
    def top(self) -> int:
        """Largest element (0 for the empty measure)."""
        return self.elements[-1] if self.elements else 0

    def is_empty(self) -> bool:
        return not self.elements

    def truncate(self, n: int) -> "GRMeasure":
        """Elements ``<= n``."""
        return GRMeasure(x for x in self.elements if x <= n)

    def with_top(self, n: int) -> "GRMeasure":
        """Append a new largest element ``n``."""
        if n <= self.top:
            raise ValueError(f"{n} is not larger than every element of {self}")
        return GRMeasure(self.elements + (n,))

    def without_top(self) -> "GRMeasure":
        return GRMeasure(self.elements[:-1])

    def starts_with(self, other: "GRMeasure") -> bool:
        """``other`` equals this measure cut at ``other.top``."""
        return self.truncate(other.top) == other

    def to_rational(self) -> Fraction:
        return measure_to_rational(self)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return x in self.elements

    def __eq__(self, other) -> bool:
        if not isinstance(other, GRMeasure):
            return NotImplemented
        return self.elements == other.elements

    def __lt__(self, other: "GRMeasure") -> bool:
        if not isinstance(other, GRMeasure):
            return NotImplemented
        return measure_compare(self.elements, other.elements) < 0

    def __hash__(self) -> int:
        return hash(self.elements)

    def __str__(self) -> str:
        return "{" + ",".join(str(x) for x in self.elements) + "}"

    def __repr__(self) -> str:
        return f"GRMeasure({str(self)})"


def measure_to_rational(I: Iterable[int]) -> Fraction:
    """Exact value ``sum(2**-i)``; the empty measure is 0."""
    els = sorted(set(I))
    if not els:
        return Fraction(0)
    n = els[-1]
    return Fraction(sum(1 << (n - i) for i in els), 1 << n)


def format_measure(I: GRMeasure) -> str:
    """``"{1,3,5} = 21/32"``; the zero measure prints as ``"{} = 0"``."""
    return f"{I} = {format_rational(measure_to_rational(I))}"


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
