"""Words over stored permutations and the cube construction.

Group elements produced during sifting live in an append-only
:class:`ElementStore`; a :class:`Word` is a flat sequence of atoms, each a
(store index, inversion flag) pair, evaluated left to right under the
project-wide right-action convention. A :class:`CubeList` is an ordered
list of atoms X generating the set of subset products
x1^e1 ... xj^ej (e in {0,1}).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .perm import Permutation


@dataclass(frozen=True, slots=True)
class Atom:
    """One letter of a word: a stored element, possibly inverted."""

    elem: int
    inverted: bool = False

    def invert(self) -> "Atom":
        return Atom(self.elem, not self.inverted)


class ElementStore:
    """Append-only store of explicit permutations referenced by words."""

    def __init__(self, degree: int):
        if degree < 1:
            raise ValueError("degree must be at least 1")
        self.degree = degree
        self._perms: list[Permutation] = []

    def add(self, g: Permutation) -> int:
        if g.degree != self.degree:
            raise ValueError("degree mismatch in element store")
        self._perms.append(g)
        return len(self._perms) - 1

    def perm(self, index: int) -> Permutation:
        if not 0 <= index < len(self._perms):
            raise RuntimeError(f"dangling element reference {index}")
        return self._perms[index]

    def atom_images(self, atom: Atom) -> tuple[int, ...]:
        """Image array realizing one atom's point action."""
        g = self.perm(atom.elem)
        return g.inverse().images if atom.inverted else g.images

    def __len__(self) -> int:
        return len(self._perms)


class Word:
    """A lazily evaluated product of stored elements; empty means identity."""

    __slots__ = ("store", "atoms")

    def __init__(self, store: ElementStore, atoms: Iterable[Atom] = ()):
        self.store = store
        self.atoms = tuple(atoms)

    @property
    def degree(self) -> int:
        return self.store.degree

    def __len__(self) -> int:
        return len(self.atoms)

    def apply(self, p: int) -> int:
        """Image of a point; O(length) via atom-wise image chasing."""
        store = self.store
        for atom in self.atoms:
            p = store.atom_images(atom)[p]
        return p

    def eval(self) -> Permutation:
        """Materialize the product as an explicit permutation."""
        cur = list(range(self.store.degree))
        for atom in self.atoms:
            arr = self.store.atom_images(atom)
            cur = [arr[v] for v in cur]
        return Permutation(cur)

    def extend(self, atom: Atom) -> "Word":
        return Word(self.store, self.atoms + (atom,))

    def inverse_word(self) -> "Word":
        return Word(self.store, tuple(a.invert() for a in reversed(self.atoms)))

    def __repr__(self) -> str:
        body = " ".join(
            f"{a.elem}{'^-1' if a.inverted else ''}" for a in self.atoms
        )
        return f"Word[{body}]" if body else "Word[e]"


def word_apply(w: Word, p: int) -> int:
    return w.apply(p)


def word_eval(w: Word) -> Permutation:
    return w.eval()


class CubeList:
    """An ordered list of atoms over a shared store, all of one degree."""

    __slots__ = ("store", "atoms")

    def __init__(self, store: ElementStore, atoms: Iterable[Atom] = ()):
        self.store = store
        self.atoms = tuple(atoms)

    def __len__(self) -> int:
        return len(self.atoms)

    def __iter__(self) -> Iterator[Atom]:
        return iter(self.atoms)


def cube_inverse_list(x: CubeList) -> CubeList:
    """The reverse of the list of inverses; C(X)^-1 = C(X^-1)."""
    return CubeList(x.store, tuple(a.invert() for a in reversed(x.atoms)))


class WitnessMap(Mapping):
    """Point -> (source point, witness word) map from a cube expansion.

    Words are materialized on first access by walking first-discovery
    parent links, so building the map costs O(n |X|) regardless of how
    many witness words are ever needed.
    """

    def __init__(self, store: ElementStore, roots: Iterable[int]):
        self.store = store
        # parent[p] = (previous point, atom) for discovered points; roots map to None
        self._parent: dict[int, tuple[int, Atom] | None] = {p: None for p in roots}
        self._cache: dict[int, tuple[int, Word]] = {}

    def _record(self, p: int, prev: int, atom: Atom) -> None:
        self._parent[p] = (prev, atom)

    def __getitem__(self, p: int) -> tuple[int, Word]:
        if p in self._cache:
            return self._cache[p]
        link = self._parent[p]
        rev = []
        q = p
        while link is not None:
            prev, atom = link
            rev.append(atom)
            q = prev
            link = self._parent[q]
        entry = (q, Word(self.store, reversed(rev)))
        self._cache[p] = entry
        return entry

    def word(self, p: int) -> Word:
        return self[p][1]

    def source(self, p: int) -> int:
        return self[p][0]

    def __iter__(self):
        return iter(self._parent)

    def __len__(self) -> int:
        return len(self._parent)


def cube_set_image(x: CubeList, delta: Iterable[int]) -> tuple[list[int], WitnessMap]:
    """Image set of ``delta`` under the cube C(X), with witness words.

    Expands Delta_t = Delta_{t-1} union Delta_{t-1}^{x_t} in list order.
    Each output point gets a source point of ``delta`` and a word over a
    subsequence of X (in index order, length <= |X|) mapping source to it;
    ties resolve to the first discovery. Points of ``delta`` get the empty
    word.
    """
    pts = list(dict.fromkeys(delta))
    if not pts:
        raise ValueError("delta must be nonempty")
    n = x.store.degree
    for p in pts:
        if not 0 <= p < n:
            raise ValueError(f"point {p} out of range for degree {n}")
    wit = WitnessMap(x.store, pts)
    seen = bytearray(n)
    for p in pts:
        seen[p] = 1
    out = list(pts)
    for atom in x.atoms:
        arr = x.store.atom_images(atom)
        for p in list(out):
            q = arr[p]
            if not seen[q]:
                seen[q] = 1
                out.append(q)
                wit._record(q, p, atom)
    return out, wit


def deep_cube_orbit(xstar: CubeList, beta: int) -> tuple[list[int], WitnessMap]:
    """Image set of ``beta`` under the deep cube C(X*)^-1 C(X*).

    Runs :func:`cube_set_image` over the concatenation X*^-1, X*; every
    output point gets a word of length <= 2|X*| mapping ``beta`` to it.
    """
    full = CubeList(
        xstar.store, cube_inverse_list(xstar).atoms + tuple(xstar.atoms)
    )
    return cube_set_image(full, [beta])


def is_nondegenerate_extension(x: CubeList, delta: Iterable[int], g: Permutation) -> bool:
    """True iff Delta^g is disjoint from Delta.

    With |Delta| = 2^|X| distinct images witnessing non-degeneracy of
    C(X), a disjoint translate means appending g keeps the cube
    non-degenerate and doubles the tracked set.
    """
    dset = set(delta)
    return dset.isdisjoint(g.images[p] for p in dset)
