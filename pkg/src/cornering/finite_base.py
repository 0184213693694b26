"""Finite cartesian strict monoidal base.

Objects are words of named finite sets, morphisms are total functions given
by tables.  Everything is small and enumerable on purpose: the point of this
base is brute-force verification, so morphisms store a flat tuple mapping
domain index to codomain index (carriers are enumerated lexicographically).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import BoundaryMismatch


class FinObject(tuple):
    """A tensor word of (set name, cardinality) letters."""

    __slots__ = ()

    def __new__(cls, letters: Iterable[tuple] = ()):
        return super().__new__(cls, tuple((str(n), int(c)) for n, c in letters))

    @staticmethod
    def of(*letters) -> "FinObject":
        return FinObject(letters)

    def __matmul__(self, other: "FinObject") -> "FinObject":
        return FinObject(tuple(self) + tuple(other))

    __add__ = __matmul__

    def __getitem__(self, index):
        got = super().__getitem__(index)
        return FinObject(got) if isinstance(index, slice) else got

    def unit(self) -> "FinObject":
        return FinObject()

    @property
    def size(self) -> int:
        n = 1
        for _, card in self:
            n *= card
        return n

    def elements(self) -> Iterator[tuple]:
        """All carrier tuples, in lexicographic order."""
        return itertools.product(*(range(card) for _, card in self))

    def element(self, index: int) -> tuple:
        out = []
        for _, card in reversed(tuple(self)):
            out.append(index % card)
            index //= card
        return tuple(reversed(out))

    def index(self, element: tuple) -> int:
        i = 0
        for (_, card), value in zip(self, element):
            i = i * card + value
        return i

    def identity(self) -> "FinMorphism":
        return FinMorphism(self, self, tuple(range(self.size)))

    def pretty(self) -> str:
        return " * ".join(name for name, _ in self) if self else "I"

    def __repr__(self):
        return "FinObject(%r)" % (tuple(self),)


@dataclass(frozen=True)
class FinMorphism:
    """A total function between carriers, as a tuple of codomain indices."""

    dom: FinObject
    cod: FinObject
    data: tuple

    def __post_init__(self):
        if len(self.data) != self.dom.size:
            raise BoundaryMismatch(
                "table has %d entries for a domain of size %d"
                % (len(self.data), self.dom.size))
        if any(not 0 <= v < self.cod.size for v in self.data):
            raise BoundaryMismatch("table entry outside the codomain carrier")

    @staticmethod
    def from_table(dom: FinObject, cod: FinObject, table) -> "FinMorphism":
        """Build from a dict mapping domain tuples to codomain tuples."""
        data = [0] * dom.size
        seen = 0
        for x, y in table.items():
            data[dom.index(tuple(x))] = cod.index(tuple(y))
            seen += 1
        if seen != dom.size:
            raise BoundaryMismatch("table does not cover the whole carrier")
        return FinMorphism(dom, cod, tuple(data))

    @property
    def table(self) -> dict:
        return {self.dom.element(i): self.cod.element(v)
                for i, v in enumerate(self.data)}

    def apply(self, element: tuple) -> tuple:
        return self.cod.element(self.data[self.dom.index(element)])

    def __rshift__(self, other: "FinMorphism") -> "FinMorphism":
        if self.cod != other.dom:
            raise BoundaryMismatch(
                "cannot compose %s -> %s with %s -> %s"
                % (self.dom.pretty(), self.cod.pretty(),
                   other.dom.pretty(), other.cod.pretty()))
        return FinMorphism(self.dom, other.cod,
                           tuple(other.data[v] for v in self.data))

    def __matmul__(self, other: "FinMorphism") -> "FinMorphism":
        dn, cn = other.dom.size, other.cod.size
        data = tuple(self.data[i] * cn + other.data[j]
                     for i in range(self.dom.size) for j in range(dn))
        return FinMorphism(self.dom @ other.dom, self.cod @ other.cod, data)

    def then(self, other: "FinMorphism") -> "FinMorphism":
        return self >> other

    def tensor(self, other: "FinMorphism") -> "FinMorphism":
        return self @ other

    def equiv(self, other: "FinMorphism") -> bool:
        return self == other

    def pretty(self) -> str:
        return "[%s]" % ", ".join(str(v) for v in self.data)


def identity(obj: FinObject) -> FinMorphism:
    return obj.identity()


def copy(obj: FinObject) -> FinMorphism:
    """The cartesian duplication A -> A * A."""
    n = obj.size
    return FinMorphism(obj, obj @ obj, tuple(i * n + i for i in range(n)))


def delete(obj: FinObject) -> FinMorphism:
    """The cartesian erasure A -> I."""
    return FinMorphism(obj, FinObject(), (0,) * obj.size)


def swap(left: FinObject, right: FinObject) -> FinMorphism:
    """The symmetry A * B -> B * A (internal; the comb layer never needs it)."""
    ln, rn = left.size, right.size
    data = tuple(j * ln + i for i in range(ln) for j in range(rn))
    return FinMorphism(left @ right, right @ left, data)


def point(obj: FinObject, element: tuple) -> FinMorphism:
    """The inhabitant I -> A selecting `element`."""
    return FinMorphism(FinObject(), obj, (obj.index(element),))


def enumerate_homs(dom: FinObject, cod: FinObject) -> Iterator[FinMorphism]:
    """All functions dom -> cod, lexicographic on tables (deterministic)."""
    for data in itertools.product(range(cod.size), repeat=dom.size):
        yield FinMorphism(dom, cod, data)


def is_inhabited(obj: FinObject) -> bool:
    """Whether there is an arrow I -> obj, i.e. the carrier is nonempty."""
    return obj.size > 0


def _splits(obj: FinObject):
    for k in range(len(obj) + 1):
        yield obj[:k], obj[k:]


def check_comonoid_axioms(obj: FinObject, sample_cap: int = 64, seed: int = 0) -> bool:
    """Verify by enumeration that (copy, delete) is a commutative comonoid,
    coherent with the tensor, and that morphisms out of `obj` are comonoid
    homomorphisms (sampled when the hom-set is large).  A False result means
    the base implementation itself is broken."""
    d = copy(obj)
    e = delete(obj)
    i = obj.identity()
    # coassociativity, counits, cocommutativity
    if d >> (d @ i) != d >> (i @ d):
        return False
    if d >> (e @ i) != i or d >> (i @ e) != i:
        return False
    if d >> swap(obj, obj) != d:
        return False
    # coherence with the monoidal structure, at every split of the word
    for left, right in _splits(obj):
        mixed = (copy(left) @ copy(right)) >> \
            (left.identity() @ swap(left, right) @ right.identity())
        if copy(left @ right) != mixed:
            return False
        if delete(left @ right) != delete(left) @ delete(right):
            return False
    # sampled morphisms are comonoid homomorphisms
    for cod in (obj, FinObject((("_t", 2),)), FinObject()):
        total = cod.size ** obj.size
        if total <= sample_cap:
            homs = list(enumerate_homs(obj, cod))
        else:
            rng = random.Random(seed)
            homs = [FinMorphism(obj, cod, tuple(rng.randrange(cod.size)
                                                for _ in range(obj.size)))
                    for _ in range(sample_cap)]
        for f in homs:
            if f >> copy(cod) != d >> (f @ f):
                return False
            if f >> delete(cod) != e:
                return False
    return True
