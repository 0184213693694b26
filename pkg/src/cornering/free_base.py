"""Free strict monoidal category on a signature.

Morphisms are syntax trees (generators, identities, `;` and tensor) and
equality is decided by a canonical form: every term flattens to a list of
whiskered layers, and exchange-equivalent layer lists are normalized by
greedily scheduling each layer as early and as far left as possible.  The
greedy strategy is validated against a breadth-first interchange closure in
the oracle module rather than trusted on faith.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple

from .errors import TypeMismatch, UnknownGenerator


class Word(tuple):
    """A tensor word of object-generator names.  The unit is the empty word."""

    __slots__ = ()

    def __new__(cls, letters: Iterable[str] = ()):
        if isinstance(letters, str):
            letters = (letters,)
        return super().__new__(cls, tuple(letters))

    def __matmul__(self, other: "Word") -> "Word":
        return Word(tuple(self) + tuple(other))

    __add__ = __matmul__

    def __getitem__(self, index):
        got = super().__getitem__(index)
        return Word(got) if isinstance(index, slice) else got

    def unit(self) -> "Word":
        return Word()

    def identity(self) -> "Id":
        return Id(self)

    def pretty(self) -> str:
        return " * ".join(self) if self else "I"

    def __repr__(self):
        return "Word(%r)" % (tuple(self),)


EMPTY = Word()


class Term:
    """A morphism of the free base.  Use `>>` for `;` and `@` for tensor."""

    def __rshift__(self, other: "Term") -> "Seq":
        return Seq(self, other)

    def __matmul__(self, other: "Term") -> "Par":
        return Par(self, other)

    @property
    def dom(self) -> Word:
        raise NotImplementedError

    @property
    def cod(self) -> Word:
        raise NotImplementedError

    def equiv(self, other: "Term") -> bool:
        return equivalent(self, other)


@dataclass(frozen=True)
class Gen(Term):
    """A generating box with an explicit boundary."""

    name: str
    gen_dom: Word
    gen_cod: Word

    @property
    def dom(self) -> Word:
        return self.gen_dom

    @property
    def cod(self) -> Word:
        return self.gen_cod

    def __repr__(self):
        return "Gen(%r, %r, %r)" % (self.name, tuple(self.gen_dom), tuple(self.gen_cod))


@dataclass(frozen=True)
class Id(Term):
    word: Word

    @property
    def dom(self) -> Word:
        return self.word

    @property
    def cod(self) -> Word:
        return self.word


@dataclass(frozen=True)
class Seq(Term):
    before: Term
    after: Term

    @property
    def dom(self) -> Word:
        return self.before.dom

    @property
    def cod(self) -> Word:
        return self.after.cod


@dataclass(frozen=True)
class Par(Term):
    left: Term
    right: Term

    @property
    def dom(self) -> Word:
        return self.left.dom @ self.right.dom

    @property
    def cod(self) -> Word:
        return self.left.cod @ self.right.cod


def seq(*terms: Term) -> Term:
    """n-ary `;` in diagram order."""
    out = terms[0]
    for t in terms[1:]:
        out = out >> t
    return out


def par(*terms: Term) -> Term:
    out = terms[0]
    for t in terms[1:]:
        out = out @ t
    return out


@dataclass(frozen=True)
class Signature:
    """Object generators plus typed morphism generators."""

    objects: frozenset
    generators: Mapping[str, tuple]

    @staticmethod
    def make(objects: Iterable[str], generators: Mapping[str, tuple]) -> "Signature":
        objs = frozenset(objects)
        gens = {}
        for name, (d, c) in generators.items():
            d, c = Word(d), Word(c)
            for letter in tuple(d) + tuple(c):
                if letter not in objs:
                    raise UnknownGenerator(
                        "boundary of %r uses undeclared object %r" % (name, letter))
            gens[name] = (d, c)
        return Signature(objs, gens)

    def gen(self, name: str) -> Gen:
        d, c = self.generators[name]
        return Gen(name, d, c)


def validate(sig: Signature, term: Term) -> Term:
    """Check `term` against `sig`; returns the term itself when well-typed."""
    if isinstance(term, Gen):
        if term.name not in sig.generators:
            raise UnknownGenerator("undeclared generator %r" % term.name)
        d, c = sig.generators[term.name]
        if (term.gen_dom, term.gen_cod) != (d, c):
            raise TypeMismatch(
                "generator %r declared %s -> %s, used as %s -> %s"
                % (term.name, d.pretty(), c.pretty(),
                   term.gen_dom.pretty(), term.gen_cod.pretty()))
        return term
    if isinstance(term, Id):
        for letter in term.word:
            if letter not in sig.objects:
                raise UnknownGenerator("undeclared object %r" % letter)
        return term
    if isinstance(term, Seq):
        validate(sig, term.before)
        validate(sig, term.after)
        if term.before.cod != term.after.dom:
            raise TypeMismatch(
                "cannot compose: %s -> %s then %s -> %s"
                % (term.before.dom.pretty(), term.before.cod.pretty(),
                   term.after.dom.pretty(), term.after.cod.pretty()))
        return term
    if isinstance(term, Par):
        validate(sig, term.left)
        validate(sig, term.right)
        return term
    raise TypeMismatch("not a term: %r" % (term,))


class Layer(NamedTuple):
    """One whiskered generator `id @ g @ id`, located by its left offset."""

    offset: int
    gen: Gen

    def key(self):
        return (self.offset, self.gen.name, self.gen.gen_dom, self.gen.gen_cod)


def layers_of(term: Term) -> tuple:
    """Flatten a term into its layer list (one generator per layer)."""
    if isinstance(term, Gen):
        return (Layer(0, term),)
    if isinstance(term, Id):
        return ()
    if isinstance(term, Seq):
        return layers_of(term.before) + layers_of(term.after)
    if isinstance(term, Par):
        shift = len(term.left.cod)
        right = tuple(Layer(l.offset + shift, l.gen) for l in layers_of(term.right))
        return layers_of(term.left) + right
    raise TypeMismatch("not a term: %r" % (term,))


def _replay_word(dom: Word, layers: Iterable[Layer]) -> Word:
    """Apply each layer to `dom`, checking validity; returns the codomain."""
    word = dom
    for offset, gen in layers:
        take = len(gen.gen_dom)
        if offset < 0 or offset + take > len(word) or word[offset:offset + take] != gen.gen_dom:
            raise TypeMismatch(
                "layer %r at offset %d does not fit boundary %s"
                % (gen.name, offset, word.pretty()))
        word = word[:offset] @ gen.gen_cod @ word[offset + take:]
    return word


def exchange(first: Layer, second: Layer):
    """Swap two adjacent layers when their wire intervals are disjoint.

    Returns the pair with `second` scheduled first, or None when the layers
    interact (the second consumes output of the first, or a floating scalar
    sits over the first layer's wires).
    """
    o1, g1 = first
    o2, g2 = second
    d1, c1 = len(g1.gen_dom), len(g1.gen_cod)
    d2, c2 = len(g2.gen_dom), len(g2.gen_cod)
    if o2 + d2 <= o1:
        return Layer(o2, g2), Layer(o1 + c2 - d2, g1)
    if o2 >= o1 + c1:
        return Layer(o2 - c1 + d1, g2), Layer(o1, g1)
    return None


def _bubble_to(work: tuple, j: int, k: int):
    """Move the layer at position j up to position k by adjacent exchanges;
    None when some exchange on the way is blocked."""
    cand = list(work)
    for pos in range(j, k, -1):
        swapped = exchange(cand[pos - 1], cand[pos])
        if swapped is None:
            return None
        cand[pos - 1], cand[pos] = swapped
    return tuple(cand)


def _canonical(work: tuple, k: int = 0) -> tuple:
    """Greedy earliest-and-leftmost scheduling: fill each position with the
    least layer any box can be bubbled into.  Equal-looking candidates can
    commit different boxes with different futures, so ties branch and the
    least completion wins."""
    if k >= len(work) - 1:
        return tuple(work)
    best_key = None
    candidates: list = []
    for j in range(k, len(work)):
        cand = _bubble_to(work, j, k)
        if cand is None:
            continue
        key = cand[k].key()
        if best_key is None or key < best_key:
            best_key, candidates = key, [cand]
        elif key == best_key:
            candidates.append(cand)
    results = {_canonical(cand, k + 1) for cand in set(candidates)}
    return min(results, key=lambda ls: tuple(l.key() for l in ls))


@dataclass(frozen=True)
class Diagram:
    """Canonical representative of a term's interchange class."""

    dom: Word
    cod: Word
    layers: tuple

    def replay(self) -> Term:
        """Rebuild a term whose normal form is this diagram."""
        word = self.dom
        out = None
        for offset, gen in self.layers:
            take = len(gen.gen_dom)
            assert word[offset:offset + take] == gen.gen_dom
            piece: Term = gen
            if offset:
                piece = Id(word[:offset]) @ piece
            if offset + take < len(word):
                piece = piece @ Id(word[offset + take:])
            word = word[:offset] @ gen.gen_cod @ word[offset + take:]
            out = piece if out is None else out >> piece
        return Id(self.dom) if out is None else out


def normalize(term: Term) -> Diagram:
    """Canonical diagram of a term; equal on terms iff they are equal in the
    free strict monoidal category."""
    layers = layers_of(term)
    cod = _replay_word(term.dom, layers)
    return Diagram(term.dom, cod, _canonical(layers))


def equivalent(s: Term, t: Term) -> bool:
    """Equality in the free base (modulo the monoidal category axioms)."""
    if s.dom != t.dom:
        return False
    return normalize(s) == normalize(t)
