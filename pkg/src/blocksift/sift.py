"""Deep sifting: the base/cube data structure and the sift procedure.

The state keeps base points beta_1..beta_l with, per level i, a list X_i of
stored permutations whose shallow cube C(X_i) maps beta_i to 2^|X_i|
distinct points (the tracked set Delta_i, every point carrying a witness
word over X_i). Sifting an element either strips it to the identity
through the shallow cubes, appends it to the first level whose tracked set
it translates off itself, or opens a new base level.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Literal

from .perm import Permutation
from .words import Atom, CubeList, ElementStore, WitnessMap, Word, deep_cube_orbit


@dataclass
class Level:
    """One level of the structure: beta_i, X_i, and witnessed Delta_i."""

    beta: int
    elems: list[int]  # store indices of X_i, in append order
    witness: dict[int, Word]  # Delta_i point -> word over X_i reaching it from beta_i

    @property
    def delta(self):
        return self.witness.keys()


@dataclass
class Certificate:
    """Nonredundancy witnesses: g_i fixes beta_j (j < i) and moves beta_i."""

    entries: list[tuple[int, Permutation]]

    def __len__(self) -> int:
        return len(self.entries)

    def validate(self) -> bool:
        for i, (beta, g) in enumerate(self.entries):
            if g.images[beta] == beta:
                return False
            for bj, _ in self.entries[:i]:
                if g.images[bj] != bj:
                    return False
        return True


@dataclass
class SiftOutcome:
    """Result of one sift, with enough data to reconstruct the input.

    The chain holds the (s, t) coset-word pairs applied in order; the
    terminal element is what remained when stripping stopped. The input
    factors as s1^-1 (s2^-1 (... terminal ...) t2) t1.
    """

    kind: Literal["appended", "new_base_point", "sifted_to_identity"]
    level: int | None
    chain: list[tuple[Word, Word]]
    terminal: Permutation

    def reconstruct(self) -> Permutation:
        g = self.terminal
        for s, t in reversed(self.chain):
            g = s.eval().inverse() * g * t.eval()
        return g


class SiftState:
    """Single-owner mutable deep-sifting state with base-size cap L."""

    def __init__(self, n: int, cap: int, store: ElementStore, levels: list[Level]):
        self.n = n
        self.cap = cap
        self.store = store
        self.levels = levels
        self.sift_count = 0

    @classmethod
    def init_state(cls, n: int, cap: int, seed: Permutation, beta1: int) -> "SiftState":
        if cap < 1:
            raise ValueError("cap must be at least 1")
        if seed.degree != n:
            raise ValueError("seed degree mismatch")
        if seed.images[beta1] == beta1:
            raise ValueError("seed must move the first base point")
        store = ElementStore(n)
        idx = store.add(seed)
        empty = Word(store)
        witness = {beta1: empty, seed.images[beta1]: empty.extend(Atom(idx))}
        return cls(n, cap, store, [Level(beta1, [idx], witness)])

    @property
    def level_count(self) -> int:
        return len(self.levels)

    @property
    def base(self) -> list[int]:
        return [lv.beta for lv in self.levels]

    def sum_xi(self, start_level: int = 1) -> int:
        return sum(len(lv.elems) for lv in self.levels[start_level - 1:])

    def level_perms(self, i: int) -> list[Permutation]:
        """Explicit elements of X_i (1-based level index)."""
        return [self.store.perm(idx) for idx in self.levels[i - 1].elems]

    def deep_element_perms(self) -> list[Permutation]:
        """Explicit elements of X_2*, i.e. all levels below the first."""
        out = []
        for lv in self.levels[1:]:
            out.extend(self.store.perm(idx) for idx in lv.elems)
        return out

    def xstar(self, i: int) -> CubeList:
        """Concatenation X_l, X_{l-1}, ..., X_i as a cube list."""
        if not 1 <= i <= self.level_count:
            raise ValueError(f"level {i} out of range 1..{self.level_count}")
        atoms = []
        for lv in reversed(self.levels[i - 1:]):
            atoms.extend(Atom(idx) for idx in lv.elems)
        return CubeList(self.store, atoms)

    def level_deep_orbit(self, i: int) -> tuple[list[int], WitnessMap]:
        """Images of beta_i under the deep cube at level i, with r-words."""
        return deep_cube_orbit(self.xstar(i), self.levels[i - 1].beta)

    def deep_sift(self, g: Permutation) -> SiftOutcome:
        if g.degree != self.n:
            raise ValueError("degree mismatch in deep_sift")
        if self.level_count > self.cap:
            raise ValueError("base-size cap already reached; caller must stop")
        self.sift_count += 1
        chain: list[tuple[Word, Word]] = []
        while True:
            idx = next(
                (k for k, lv in enumerate(self.levels) if g.images[lv.beta] != lv.beta),
                None,
            )
            if idx is None:
                break
            lv = self.levels[idx]
            img = g.images
            delta_g = {img[p] for p in lv.delta}
            inter = delta_g & lv.delta
            if not inter:
                self._append_to_level(lv, g)
                return SiftOutcome("appended", idx + 1, chain, g)
            lam = min(inter)
            ginv = g.inverse()
            s = lv.witness[ginv.images[lam]]
            t = lv.witness[lam]
            chain.append((s, t))
            g = s.eval() * g * t.eval().inverse()
        if g.is_identity():
            return SiftOutcome("sifted_to_identity", None, chain, g)
        beta = min(g.support())
        store_idx = self.store.add(g)
        empty = Word(self.store)
        witness = {beta: empty, g.images[beta]: empty.extend(Atom(store_idx))}
        self.levels.append(Level(beta, [store_idx], witness))
        return SiftOutcome("new_base_point", self.level_count, chain, g)

    def _append_to_level(self, lv: Level, g: Permutation) -> None:
        store_idx = self.store.add(g)
        atom = Atom(store_idx)
        img = g.images
        for p, w in list(lv.witness.items()):
            lv.witness[img[p]] = w.extend(atom)
        lv.elems.append(store_idx)

    def certificate(self) -> Certificate:
        """(beta_i, first element of X_i) for every level."""
        return Certificate(
            [(lv.beta, self.store.perm(lv.elems[0])) for lv in self.levels]
        )

    def validate(self) -> None:
        """Check all structural invariants; raises AssertionError on violation."""
        assert 1 <= self.level_count <= self.cap + 1
        assert len(set(self.base)) == self.level_count, "base points must be distinct"
        log2n = max(1, (self.n - 1).bit_length())
        for k, lv in enumerate(self.levels):
            assert lv.elems, "every level has a nonempty X_i"
            assert len(lv.elems) <= log2n
            assert len(lv.delta) == 2 ** len(lv.elems)
            assert lv.beta in lv.delta
            for idx in lv.elems:
                x = self.store.perm(idx)
                assert x.images[lv.beta] != lv.beta
                for prev in self.levels[:k]:
                    assert x.images[prev.beta] == prev.beta
            for p, w in lv.witness.items():
                assert len(w) <= len(lv.elems)
                assert w.apply(lv.beta) == p

    def debug_dump(self) -> dict:
        """JSON-ready snapshot of the per-level structure."""
        return {
            "degree": self.n,
            "cap": self.cap,
            "levels": [
                {
                    "beta": lv.beta,
                    "x": [list(self.store.perm(i).images) for i in lv.elems],
                    "delta": sorted(lv.delta),
                }
                for lv in self.levels
            ],
            "sifts": self.sift_count,
        }


def init_state(n: int, cap: int, seed: Permutation, beta1: int) -> SiftState:
    return SiftState.init_state(n, cap, seed, beta1)


def deep_sift(state: SiftState, g: Permutation) -> SiftOutcome:
    return state.deep_sift(g)


def certificate(state: SiftState) -> Certificate:
    return state.certificate()


def level_deep_orbit(state: SiftState, i: int) -> tuple[list[int], WitnessMap]:
    return state.level_deep_orbit(i)
