"""Explicit permutations on {0, ..., n-1}, composition, orbits, transitivity.

Composition convention (fixed project-wide): ``compose(g, h)`` acts as
"first g, then h", i.e. ``apply(compose(g, h), p) == apply(h, apply(g, p))``.
All modules rely on this right-action order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class Permutation:
    """A bijection on {0, ..., n-1}, stored as an explicit image tuple."""

    __slots__ = ("images", "_inv")

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        n = len(images)
        if n < 1:
            raise ValueError("degree must be at least 1")
        seen = bytearray(n)
        for v in images:
            if not 0 <= v < n or seen[v]:
                raise ValueError(f"not a permutation of 0..{n - 1}: {images!r}")
            seen[v] = 1
        self.images = images
        self._inv: Permutation | None = None

    @property
    def degree(self) -> int:
        return len(self.images)

    def apply(self, p: int) -> int:
        if not 0 <= p < len(self.images):
            raise ValueError(f"point {p} out of range for degree {len(self.images)}")
        return self.images[p]

    def compose(self, other: "Permutation") -> "Permutation":
        """First self, then other."""
        if other.degree != self.degree:
            raise ValueError("degree mismatch in compose")
        oth = other.images
        return Permutation(tuple(oth[v] for v in self.images))

    def inverse(self) -> "Permutation":
        if self._inv is None:
            inv = [0] * len(self.images)
            for p, v in enumerate(self.images):
                inv[v] = p
            self._inv = Permutation(inv)
            self._inv._inv = self
        return self._inv

    def is_identity(self) -> bool:
        return all(v == p for p, v in enumerate(self.images))

    def support(self) -> list[int]:
        """Moved points, ascending."""
        return [p for p, v in enumerate(self.images) if v != p]

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycle decomposition, fixed points omitted."""
        out = []
        seen = bytearray(len(self.images))
        for p in range(len(self.images)):
            if seen[p] or self.images[p] == p:
                continue
            cyc = [p]
            seen[p] = 1
            q = self.images[p]
            while q != p:
                seen[q] = 1
                cyc.append(q)
                q = self.images[q]
            out.append(tuple(cyc))
        return out

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(n))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Iterable[int]]) -> "Permutation":
        """Build from disjoint cycles over 0-based points."""
        images = list(range(n))
        touched = set()
        for cyc in cycles:
            cyc = list(cyc)
            for p in cyc:
                if not 0 <= p < n:
                    raise ValueError(f"point {p} out of range for degree {n}")
                if p in touched:
                    raise ValueError(f"point {p} repeated across cycles")
                touched.add(p)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a] = b
        return cls(images)

    def __mul__(self, other: "Permutation") -> "Permutation":
        return self.compose(other)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return f"Permutation.identity({self.degree})"
        text = "".join("(" + " ".join(map(str, c)) + ")" for c in cycs)
        return f"Permutation[{self.degree}] {text}"


@dataclass
class GeneratorSet:
    """A nonempty ordered list of generators of a common degree."""

    degree: int
    generators: list[Permutation]
    labels: list[str] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError("degree must be at least 1")
        if not self.generators:
            raise ValueError("generator list must be nonempty")
        for g in self.generators:
            if g.degree != self.degree:
                raise ValueError(
                    f"generator degree {g.degree} != set degree {self.degree}"
                )
        if self.labels is not None and len(self.labels) != len(self.generators):
            raise ValueError("labels must match generators one-to-one")

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)


def apply(g: Permutation, p: int) -> int:
    return g.apply(p)


def compose(g: Permutation, h: Permutation) -> Permutation:
    return g.compose(h)


def inverse(g: Permutation) -> Permutation:
    return g.inverse()


def orbit(actions, start: int) -> list[int]:
    """Closure of {start} under point-action providers, in BFS discovery order.

    A provider is anything with an ``apply(p) -> point`` method (a
    Permutation or a Word). ``start`` comes first; order is deterministic
    given provider order.
    """
    appliers = []
    degree = None
    for a in actions:
        if isinstance(a, Permutation):
            appliers.append(a.images.__getitem__)
            d = a.degree
        else:
            appliers.append(a.apply)
            d = a.degree
        if degree is None:
            degree = d
        elif d != degree:
            raise ValueError("providers must share one degree")
    if degree is None:
        return [start]
    if not 0 <= start < degree:
        raise ValueError(f"start point {start} out of range for degree {degree}")
    seen = bytearray(degree)
    seen[start] = 1
    out = [start]
    queue = deque((start,))
    while queue:
        p = queue.popleft()
        for f in appliers:
            q = f(p)
            if not seen[q]:
                seen[q] = 1
                out.append(q)
                queue.append(q)
    return out


def is_transitive(gens: GeneratorSet) -> bool:
    return len(orbit(gens.generators, 0)) == gens.degree
