"""Right combs, left combs, sliding, and decidable comb equivalence.

A right comb of depth n is a tuple of teeth f_i : M_{i-1} * A_i -> M_i * B_i
threaded by residual objects M_i (with M_0 = M_n = I), taken modulo sliding:
a mediator m on a residual wire may migrate across the cut between adjacent
teeth.  Equivalence is decided by a base-specific class invariant:

* free base -- glue the teeth along their residual wires into one anchored
  diagram whose dangling ports carry their gap index, and compare canonical
  forms;
* finite cartesian base -- record, for every prefix of inputs, the output
  each tooth produces (the residual of a comb over a cartesian base can
  always be normalized to the full input history), and compare behaviours.

Both strategies are cross-checked against the breadth-first sliding closure
in the oracle module.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import (BoundaryMismatch, DepthMismatch, FactorizationRejected,
                     GapOutOfRange, PatternMismatch)
from .finite_base import FinMorphism
from .free_base import Gen, Id, Term, Word, normalize


class Polarity(enum.Enum):
    """Direction of flow on a vertical boundary wire."""

    SEND = "^o"     # the left participant sends the resource rightward
    RECEIVE = "^*"  # the resource arrives from the right


SEND = Polarity.SEND
RECEIVE = Polarity.RECEIVE


def alternation_depth(word: Sequence[tuple]) -> Optional[int]:
    """Depth n when `word` is of the receive/send-alternating shape
    A_1 recv, B_1 send, ..., A_n recv, B_n send; None otherwise."""
    if not word or len(word) % 2:
        return None
    for i, (_, pol) in enumerate(word):
        want = RECEIVE if i % 2 == 0 else SEND
        if pol is not want:
            return None
    return len(word) // 2


def pattern_of(word: Sequence[tuple]) -> Optional[tuple]:
    """The (A_i, B_i) pairs of an alternating boundary word, or None."""
    depth = alternation_depth(word)
    if depth is None:
        return None
    return tuple((word[2 * i][0], word[2 * i + 1][0]) for i in range(depth))


def boundary_of(pattern: Sequence[tuple]) -> tuple:
    """The alternating boundary word presenting `pattern`."""
    out = []
    for a, b in pattern:
        out.append((a, RECEIVE))
        out.append((b, SEND))
    return tuple(out)


def _is_finite(mor) -> bool:
    return isinstance(mor, FinMorphism)


@dataclass(frozen=True)
class Comb:
    """The tuple normal form of a right-alternating cell."""

    pattern: tuple   # ((A_1, B_1), ..., (A_n, B_n))
    residuals: tuple  # (M_1, ..., M_{n-1})
    teeth: tuple     # (f_1, ..., f_n)

    @staticmethod
    def make(pattern, residuals, teeth) -> "Comb":
        pattern = tuple((a, b) for a, b in pattern)
        residuals = tuple(residuals)
        teeth = tuple(teeth)
        n = len(pattern)
        if n == 0:
            raise BoundaryMismatch("a comb has depth at least 1")
        if len(teeth) != n or len(residuals) != n - 1:
            raise BoundaryMismatch(
                "depth %d needs %d teeth and %d residuals, got %d and %d"
                % (n, n, n - 1, len(teeth), len(residuals)))
        unit = pattern[0][0].unit()
        for i, tooth in enumerate(teeth):
            before = residuals[i - 1] if i > 0 else unit
            after = residuals[i] if i < n - 1 else unit
            want_dom = before @ pattern[i][0]
            want_cod = after @ pattern[i][1]
            if tooth.dom != want_dom or tooth.cod != want_cod:
                raise BoundaryMismatch(
                    "tooth %d must be %s -> %s, got %s -> %s"
                    % (i + 1, want_dom.pretty(), want_cod.pretty(),
                       tooth.dom.pretty(), tooth.cod.pretty()))
            if isinstance(tooth, Term):
                normalize(tooth)  # rejects ill-typed teeth early
        return Comb(pattern, residuals, teeth)

    @property
    def depth(self) -> int:
        return len(self.pattern)

    @property
    def gaps(self) -> int:
        """Internal gaps between teeth (the dangling ends do not count)."""
        return self.depth - 1

    def boundary(self) -> tuple:
        return boundary_of(self.pattern)

    def slide(self, gap: int, core, mediator) -> "Comb":
        return slide(self, gap, core, mediator)

    def equiv(self, other: "Comb") -> bool:
        return equivalent(self, other)


def from_morphism(mor) -> Comb:
    """A base morphism as the depth-1 comb with one tooth."""
    return Comb.make(((mor.dom, mor.cod),), (), (mor,))


def collapse(comb: Comb):
    """The base morphism carried by a depth-1 comb."""
    if comb.depth != 1:
        raise DepthMismatch("collapse needs depth 1, got %d" % comb.depth)
    return comb.teeth[0]


def slide(comb: Comb, gap: int, core, mediator) -> Comb:
    """Move `mediator` across the cut after tooth `gap`.

    Requires mediator : M' -> M_gap and core with f_gap = core ; (mediator @ 1);
    the result replaces tooth `gap` by core, prefixes the mediator onto the
    next tooth, and shrinks or grows the residual to M'.
    """
    n = comb.depth
    if not 1 <= gap <= n - 1:
        raise GapOutOfRange("slide gap %d outside 1..%d" % (gap, n - 1))
    m_old = comb.residuals[gap - 1]
    if mediator.cod != m_old:
        raise BoundaryMismatch(
            "mediator must target the residual %s" % m_old.pretty())
    m_new = mediator.dom
    a, b = comb.pattern[gap - 1]
    before = comb.residuals[gap - 2] if gap > 1 else m_old.unit()
    if core.dom != before @ a or core.cod != m_new @ b:
        raise BoundaryMismatch(
            "core must be %s -> %s" % ((before @ a).pretty(), (m_new @ b).pretty()))
    witness = core >> (mediator @ b.identity())
    if not witness.equiv(comb.teeth[gap - 1]):
        raise FactorizationRejected(
            "core ; (mediator @ 1) does not reproduce tooth %d" % gap)
    a_next = comb.pattern[gap][0]
    next_tooth = (mediator @ a_next.identity()) >> comb.teeth[gap]
    teeth = comb.teeth[:gap - 1] + (core, next_tooth) + comb.teeth[gap + 1:]
    residuals = comb.residuals[:gap - 1] + (m_new,) + comb.residuals[gap:]
    return Comb(comb.pattern, residuals, teeth)


def _history_behaviors(comb: Comb) -> tuple:
    """Finite-base class invariant: outputs of each tooth as a function of
    the whole input prefix, with the residual threaded through."""
    states = {(): ()}
    behaviors = []
    n = comb.depth
    for i, tooth in enumerate(comb.teeth):
        a_obj = comb.pattern[i][0]
        keep = len(comb.residuals[i]) if i < n - 1 else 0
        outputs = []
        new_states = {}
        for prefix in sorted(states):
            m = states[prefix]
            for a in a_obj.elements():
                y = tooth.apply(m + a)
                new_states[prefix + (a,)] = y[:keep]
                outputs.append(y[keep:])
        behaviors.append(tuple(outputs))
        states = new_states
    return tuple(behaviors)


def _glued_diagram(comb: Comb):
    """Free-base class invariant: the anchored diagram obtained by gluing the
    teeth along their residual wires, with port markers recording gap
    indices on the dangling boundary wires."""
    term = None
    word = Word()
    for i, tooth in enumerate(comb.teeth, start=1):
        a, b = comb.pattern[i - 1]
        piece: Term = Gen("[in %d]" % i, Word(), a)
        if word:
            piece = Id(word) @ piece
        term = piece if term is None else term >> piece
        term = term >> tooth
        word = comb.residuals[i - 1] if i - 1 < len(comb.residuals) else Word()
        piece = Gen("[out %d]" % i, b, Word())
        if word:
            piece = Id(word) @ piece
        term = term >> piece
    return normalize(term)


def comb_key(comb: Comb):
    """A hashable invariant of the sliding-equivalence class."""
    if _is_finite(comb.teeth[0]):
        return (comb.pattern, _history_behaviors(comb))
    return (comb.pattern, _glued_diagram(comb))


def equivalent(c1: Comb, c2: Comb) -> bool:
    """Sliding (coend) equivalence of two combs over the same pattern."""
    if c1.pattern != c2.pattern:
        return False
    return comb_key(c1) == comb_key(c2)


def plug_gap(outer: Comb, gap: int, inner: Comb) -> Comb:
    """Insert `inner` into internal gap `gap` of `outer`.

    The inserted comb must accept the output B_gap and deliver the next
    input A_{gap+1}; the result has depth n + m - 2.
    """
    n = outer.depth
    if not 1 <= gap <= n - 1:
        raise GapOutOfRange("gap %d outside 1..%d" % (gap, n - 1))
    if inner.pattern[0][0] != outer.pattern[gap - 1][1] or \
            inner.pattern[-1][1] != outer.pattern[gap][0]:
        raise BoundaryMismatch(
            "inner comb must be a %s ... %s bridge"
            % (outer.pattern[gap - 1][1].pretty(), outer.pattern[gap][0].pretty()))
    m_obj = outer.residuals[gap - 1]
    mid = m_obj.identity()
    if inner.depth == 1:
        merged = outer.teeth[gap - 1] >> (mid @ inner.teeth[0]) >> outer.teeth[gap]
        return Comb.make(
            outer.pattern[:gap - 1]
            + ((outer.pattern[gap - 1][0], outer.pattern[gap][1]),)
            + outer.pattern[gap + 1:],
            outer.residuals[:gap - 1] + outer.residuals[gap:],
            outer.teeth[:gap - 1] + (merged,) + outer.teeth[gap + 1:])
    first = outer.teeth[gap - 1] >> (mid @ inner.teeth[0])
    middle = tuple(mid @ g for g in inner.teeth[1:-1])
    last = (mid @ inner.teeth[-1]) >> outer.teeth[gap]
    pattern = (outer.pattern[:gap - 1]
               + ((outer.pattern[gap - 1][0], inner.pattern[0][1]),)
               + inner.pattern[1:-1]
               + ((inner.pattern[-1][0], outer.pattern[gap][1]),)
               + outer.pattern[gap + 1:])
    residuals = (outer.residuals[:gap - 1]
                 + tuple(m_obj @ nres for nres in inner.residuals)
                 + outer.residuals[gap:])
    return Comb.make(pattern, residuals,
                     outer.teeth[:gap - 1] + (first,) + middle + (last,)
                     + outer.teeth[gap + 1:])


def run(comb: Comb, fillers: Sequence) -> object:
    """Fill every internal gap with a base morphism and collapse to a single
    morphism A_1 -> B_n.  The plugging order does not matter."""
    if len(fillers) != comb.gaps:
        raise GapOutOfRange(
            "%d gaps need %d fillers, got %d"
            % (comb.gaps, comb.gaps, len(fillers)))
    out = comb
    for gap in range(comb.gaps, 0, -1):
        out = plug_gap(out, gap, from_morphism(fillers[gap - 1]))
    return collapse(out)


@dataclass(frozen=True)
class LeftComb:
    """The dual tuple form, with end objects so interleaving yields a
    morphism T -> U; with both ends I it is exactly the dual cell-set."""

    ends: tuple      # (T, U)
    pattern: tuple   # ((A_1, B_1), ..., (A_n, B_n))
    residuals: tuple  # (N_1, ..., N_n)
    teeth: tuple     # (h_0, ..., h_n)

    @staticmethod
    def make(ends, pattern, residuals, teeth) -> "LeftComb":
        ends = tuple(ends)
        pattern = tuple((a, b) for a, b in pattern)
        residuals = tuple(residuals)
        teeth = tuple(teeth)
        n = len(pattern)
        if n == 0:
            raise BoundaryMismatch("a left comb has depth at least 1")
        if len(residuals) != n or len(teeth) != n + 1:
            raise BoundaryMismatch(
                "depth %d needs %d residuals and %d teeth, got %d and %d"
                % (n, n, n + 1, len(residuals), len(teeth)))
        want = [(ends[0], pattern[0][0] @ residuals[0])]
        for i in range(1, n):
            want.append((pattern[i - 1][1] @ residuals[i - 1],
                         pattern[i][0] @ residuals[i]))
        want.append((pattern[n - 1][1] @ residuals[n - 1], ends[1]))
        for i, (tooth, (d, c)) in enumerate(zip(teeth, want)):
            if tooth.dom != d or tooth.cod != c:
                raise BoundaryMismatch(
                    "left tooth %d must be %s -> %s, got %s -> %s"
                    % (i, d.pretty(), c.pretty(),
                       tooth.dom.pretty(), tooth.cod.pretty()))
        return LeftComb(ends, pattern, residuals, teeth)

    @property
    def depth(self) -> int:
        return len(self.pattern)


def interleave(right: Comb, left: LeftComb):
    """Compose a right comb with a left comb over the same pattern by
    alternating their teeth; yields a base morphism T -> U."""
    if right.pattern != left.pattern:
        raise PatternMismatch("interleaving needs identical patterns")
    n = right.depth
    out = left.teeth[0]
    for i in range(1, n + 1):
        out = out >> (right.teeth[i - 1] @ left.residuals[i - 1].identity())
        if i < n:
            out = out >> (right.residuals[i - 1].identity() @ left.teeth[i])
        else:
            out = out >> left.teeth[n]
    return out
