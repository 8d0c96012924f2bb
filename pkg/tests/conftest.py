"""Shared test oracles: brute-force enumeration helpers kept independent
of the code paths they check."""

from __future__ import annotations

import random
from itertools import combinations

import pytest

from blocksift.perm import GeneratorSet, Permutation


def perm(n, *cycles) -> Permutation:
    """Shorthand: perm(4, (0,1,2,3)) is the 4-cycle on 0..3."""
    return Permutation.from_cycles(n, cycles)


def brute_force_elements(gens: GeneratorSet, limit: int = 200000) -> set[Permutation]:
    """All group elements by BFS closure over generator products."""
    frontier = [Permutation.identity(gens.degree)]
    seen = {frontier[0]}
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens.generators:
                h = g * s
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
                    if len(seen) > limit:
                        raise RuntimeError("group too large for brute force")
        frontier = nxt
    return seen


def random_element(gens: GeneratorSet, rng: random.Random, length: int = 12) -> Permutation:
    g = Permutation.identity(gens.degree)
    for _ in range(rng.randint(0, length)):
        s = rng.choice(gens.generators)
        if rng.random() < 0.5:
            s = s.inverse()
        g = g * s
    return g


def enumerate_cube(elements: list[Permutation]) -> set[Permutation]:
    """All subset products x1^e1 ... xj^ej, e in {0,1}, by prefix DFS."""
    n = elements[0].degree if elements else 1
    out = set()

    def rec(i, acc):
        if i == len(elements):
            out.add(acc)
            return
        rec(i + 1, acc)
        rec(i + 1, acc * elements[i])

    rec(0, Permutation.identity(n) if elements else Permutation.identity(n))
    return out


def enumerate_deep_cube(xstar: list[Permutation]) -> set[Permutation]:
    """All elements of C(X*)^-1 C(X*) = C(X*^-1, X*)."""
    full = [p.inverse() for p in reversed(xstar)] + list(xstar)
    return enumerate_cube(full)


def iter_partitions(n: int):
    """All set partitions of range(n), as tuples of frozensets."""
    cells: list[list[int]] = []

    def rec(p):
        if p == n:
            yield tuple(frozenset(c) for c in cells)
            return
        for c in cells:
            c.append(p)
            yield from rec(p + 1)
            c.pop()
        cells.append([p])
        yield from rec(p + 1)
        cells.pop()

    yield from rec(0)


def invariant_partitions(gens: GeneratorSet):
    """All G-invariant partitions of the points (cells permuted by every generator)."""
    out = []
    for part in iter_partitions(gens.degree):
        cellset = set(part)
        if all(
            frozenset(g.images[p] for p in cell) in cellset
            for g in gens.generators
            for cell in part
        ):
            out.append(part)
    return out


def smallest_invariant_class(gens: GeneratorSet, seed: set[int]) -> frozenset:
    """Oracle for minimal_block: smallest invariant cell containing the seed."""
    best = None
    for part in invariant_partitions(gens):
        for cell in part:
            if seed <= cell and (best is None or len(cell) < len(best)):
                best = cell
    assert best is not None  # the one-cell partition always qualifies
    return best


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def small_corpus():
    """Corpus members small enough for element-wise brute force."""
    from blocksift import corpus

    entries = []
    for e in corpus.standard_corpus():
        if e.order is not None and e.order <= 5000 and e.gens.degree <= 16:
            entries.append(e)
    return entries


@pytest.fixture(scope="session")
def full_corpus():
    from blocksift import corpus

    return corpus.standard_corpus()
