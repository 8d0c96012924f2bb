"""Capped transversal construction driven by deep sifting.

``build_point_transversal`` computes coset-representative words for the
point stabilizer of alpha (one word per orbit point), or stops with a
certified partial base of size L+1 when the base-size cap is exceeded.
``build_scoped_transversal`` does the same for the subgroup generated by
one transversal word together with the elements of the levels below the
first, sharing those levels with the live state.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Literal

from .perm import GeneratorSet, Permutation
from .sift import Atom, Certificate, Level, SiftOutcome, SiftState
from .words import WitnessMap, Word


@dataclass
class TransversalResult:
    kind: Literal["transversal", "partial_base"]
    orbit: list[int] | None  # alpha's orbit in discovery order
    rmap: WitnessMap | None  # orbit point -> r-word mapping alpha to it
    certificate: Certificate | None
    state: SiftState

    @property
    def is_partial_base(self) -> bool:
        return self.kind == "partial_base"


def _orbit_words(state: SiftState) -> tuple[list[int], "_RWords"]:
    pts, wit = state.level_deep_orbit(1)
    return pts, _RWords(wit)


class _RWords:
    """Point -> r-word view over a deep-cube witness map."""

    def __init__(self, wit: WitnessMap):
        self._wit = wit

    def __getitem__(self, p: int) -> Word:
        return self._wit.word(p)

    def word(self, p: int) -> Word:
        return self._wit.word(p)

    def __contains__(self, p: int) -> bool:
        return p in self._wit

    def __iter__(self):
        return iter(self._wit)

    def __len__(self) -> int:
        return len(self._wit)


def _close_transversal(
    state: SiftState,
    gens: list[Permutation],
    cap: int,
    on_sift: Callable[[SiftState, SiftOutcome], None] | None = None,
) -> tuple[str, list[int], _RWords]:
    """Shared queue loop: close the level-1 deep orbit under ``gens``.

    Each (orbit point, generator) pair is enqueued exactly once, when the
    point first enters the orbit, and processed at most once. Returns
    ("transversal", orbit, rmap) on closure or ("capped", ..., ...) the
    moment the level count passes the cap.
    """
    omega, rmap = _orbit_words(state)
    in_omega = set(omega)
    queue: deque[tuple[int, int]] = deque()
    for lam in omega:
        for si in range(len(gens)):
            queue.append((lam, si))
    while queue:
        lam, si = queue.popleft()
        mu = gens[si].images[lam]
        if mu in in_omega:
            continue
        elem = rmap[lam].eval() * gens[si]
        outcome = state.deep_sift(elem)
        if on_sift is not None:
            on_sift(state, outcome)
        if state.level_count > cap:
            return "capped", omega, rmap
        omega, rmap = _orbit_words(state)
        for p in omega:
            if p not in in_omega:
                in_omega.add(p)
                for sj in range(len(gens)):
                    queue.append((p, sj))
    return "transversal", omega, rmap


def build_point_transversal(
    gens: GeneratorSet,
    alpha: int,
    cap: int,
    on_sift: Callable[[SiftState, SiftOutcome], None] | None = None,
) -> TransversalResult:
    """Transversal words for G : G_alpha, or a partial base of size cap+1.

    The orbit covers alpha^G whether or not G is transitive.
    """
    seed = next((g for g in gens.generators if g.images[alpha] != alpha), None)
    if seed is None:
        raise ValueError("alpha is fixed by every generator")
    state = SiftState.init_state(gens.degree, cap, seed, alpha)
    status, omega, rmap = _close_transversal(state, gens.generators, cap, on_sift)
    if status == "capped":
        return TransversalResult("partial_base", None, None, state.certificate(), state)
    return TransversalResult("transversal", omega, rmap, None, state)


def build_scoped_transversal(
    state: SiftState, r_word: Word, alpha: int, cap: int
) -> TransversalResult:
    """Transversal for K : K_alpha where K = <X_2* elements, r_word>.

    Works on an overlay whose first level is temporarily the single
    materialized element of ``r_word``; levels below the first are the live
    levels of ``state`` and any appends or new base levels made there
    persist. Overlay first-level appends are discarded.
    """
    if state.level_count > cap:
        return TransversalResult(
            "partial_base", None, None, state.certificate(), state
        )
    if r_word.apply(alpha) == alpha:
        raise ValueError("r-word must move alpha")
    r_elem = r_word.eval()
    r_idx = state.store.add(r_elem)
    empty = Word(state.store)
    overlay_level = Level(
        alpha, [r_idx], {alpha: empty, r_elem.images[alpha]: empty.extend(Atom(r_idx))}
    )
    overlay = SiftState(
        state.n, cap, state.store, [overlay_level] + state.levels[1:]
    )
    kgens = [r_elem] + state.deep_element_perms()
    orig_len = len(state.levels)
    try:
        status, omega, rmap = _close_transversal(overlay, kgens, cap)
    finally:
        # new base levels opened during the scoped run are globally valid
        state.levels.extend(overlay.levels[orig_len:])
        state.sift_count += overlay.sift_count
    if status == "capped":
        return TransversalResult(
            "partial_base", None, None, state.certificate(), state
        )
    return TransversalResult("transversal", omega, rmap, None, state)
