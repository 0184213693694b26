"""Optics as the depth-2 comb fragment.

An optic (A,B) -> (C,D) is a forward part A -> M * C and a backward part
M * D -> B sharing a residual M, stored as a representative: all observable
equality goes through the sliding quotient (`equivalent`), never through raw
component comparison.
"""

from __future__ import annotations

from dataclasses import dataclass

from .combs import Comb, collapse, equivalent as comb_equivalent, from_morphism
from .errors import BoundaryMismatch, DepthMismatch


@dataclass(frozen=True)
class Optic:
    source: tuple    # (A, B)
    target: tuple    # (C, D)
    residual: object  # M
    forward: object   # A -> M * C
    backward: object  # M * D -> B

    @staticmethod
    def make(source, target, residual, forward, backward) -> "Optic":
        a, b = source
        c, d = target
        if forward.dom != a or forward.cod != residual @ c:
            raise BoundaryMismatch(
                "forward part must be %s -> %s" % (a.pretty(), (residual @ c).pretty()))
        if backward.dom != residual @ d or backward.cod != b:
            raise BoundaryMismatch(
                "backward part must be %s -> %s" % ((residual @ d).pretty(), b.pretty()))
        return Optic((a, b), (c, d), residual, forward, backward)

    def to_comb(self) -> Comb:
        """The depth-2 comb presenting this optic; the bridge is a bijection
        on hom-sets commuting with composition."""
        (a, b), (c, d) = self.source, self.target
        return Comb.make(((a, c), (d, b)), (self.residual,),
                         (self.forward, self.backward))

    @staticmethod
    def from_comb(comb: Comb) -> "Optic":
        if comb.depth != 2:
            raise DepthMismatch("an optic is a depth-2 comb, got depth %d"
                                % comb.depth)
        (a, c), (d, b) = comb.pattern
        return Optic((a, b), (c, d), comb.residuals[0],
                     comb.teeth[0], comb.teeth[1])

    def then(self, other: "Optic") -> "Optic":
        """Optic composition: residuals tensor, the forward parts chain and
        the backward parts chain in reverse."""
        if self.target != other.source:
            raise BoundaryMismatch("optic composition needs target == source")
        m = self.residual
        forward = self.forward >> (m.identity() @ other.forward)
        backward = (m.identity() @ other.backward) >> self.backward
        return Optic(self.source, other.target, m @ other.residual,
                     forward, backward)

    def equiv(self, other: "Optic") -> bool:
        return equivalent(self, other)


def identity_optic(a, b) -> Optic:
    """The identity on (A, B): both parts are identities, the residual is I."""
    return Optic((a, b), (a, b), a.unit(), a.identity(), b.identity())


def compose(h1: Optic, h2: Optic) -> Optic:
    return h1.then(h2)


def equivalent(h1: Optic, h2: Optic) -> bool:
    """Sliding equivalence, computed on the comb images."""
    if h1.source != h2.source or h1.target != h2.target:
        return False
    return comb_equivalent(h1.to_comb(), h2.to_comb())


def compose_as_combs(c1: Comb, c2: Comb) -> Comb:
    """Horizontal composition of two depth-2 combs along their middle
    boundary; an independent route used to cross-check `Optic.then`."""
    if c1.depth != 2 or c2.depth != 2:
        raise DepthMismatch("both combs must have depth 2")
    if c2.pattern[0][0] != c1.pattern[0][1] or c2.pattern[1][1] != c1.pattern[1][0]:
        raise BoundaryMismatch(
            "middle boundary mismatch: %s/%s against %s/%s"
            % (c1.pattern[0][1].pretty(), c1.pattern[1][0].pretty(),
               c2.pattern[0][0].pretty(), c2.pattern[1][1].pretty()))
    m = c1.residuals[0]
    first = c1.teeth[0] >> (m.identity() @ c2.teeth[0])
    second = (m.identity() @ c2.teeth[1]) >> c1.teeth[1]
    return Comb.make(((c1.pattern[0][0], c2.pattern[0][1]),
                      (c2.pattern[1][0], c1.pattern[1][1])),
                     (m @ c2.residuals[0],), (first, second))


def send_cell(f) -> Comb:
    """A base morphism acting on a resource sent rightward: the depth-1 comb
    presenting the covariant hom A-send -> B-send.  Every cell between send
    wires arises this way."""
    return from_morphism(f)


def receive_cell(f) -> Comb:
    """The same morphism acting on a resource received from the right: the
    depth-1 comb presenting the contravariant hom B-receive -> A-receive.
    Precomposing either cell with the cap cell gives the same result, which
    is the extranaturality of the counits."""
    return from_morphism(f)


def run_optic(h: Optic, continuation):
    """Collapse an optic against a middle morphism C -> D; the depth-2 case
    of filling a comb's gaps."""
    from .combs import run
    return run(h.to_comb(), [continuation])


__all__ = ["Optic", "compose", "compose_as_combs", "equivalent",
           "identity_optic", "receive_cell", "run_optic", "send_cell"]
