"""Brute-force ground truth, kept independent of the decision procedures.

Two closures are provided: a breadth-first closure over single interchange
moves for free-base equality, and a breadth-first closure over single slides
for comb equivalence.  Both return a three-valued verdict: Equal and Unequal
are conclusive, Inconclusive means a bound truncated the search.  The
acceptance suite only uses instance families where the verdict is conclusive.

The interchange moves are implemented by explicit wire-id tracking rather
than the normalizer's offset arithmetic, so the two sides of every
cross-check are derived separately.
"""

from __future__ import annotations

import enum
import itertools
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from .combs import Comb
from .finite_base import FinMorphism, FinObject, enumerate_homs
from .free_base import Diagram, Gen, Id, Layer, Term, Word, layers_of, normalize


class Verdict(enum.Enum):
    EQUAL = "equal"
    UNEQUAL = "unequal"
    INCONCLUSIVE = "inconclusive"


# ---------------------------------------------------------------------------
# interchange closure (free base)

def _sublist_index(haystack: list, needle: list) -> Optional[int]:
    at = haystack.index(needle[0])
    if haystack[at:at + len(needle)] != needle:
        return None
    return at


def swap_adjacent(dom_len: int, layers: tuple, i: int) -> Optional[tuple]:
    """The layer list with layers i and i+1 transposed, or None when they
    interact.  Wire ids are threaded explicitly to decide independence."""
    wires = list(range(dom_len))
    fresh = dom_len
    for off, gen in layers[:i]:
        take, make = len(gen.gen_dom), len(gen.gen_cod)
        wires[off:off + take] = range(fresh, fresh + make)
        fresh += make
    o1, g1 = layers[i]
    o2, g2 = layers[i + 1]
    d1, c1 = len(g1.gen_dom), len(g1.gen_cod)
    d2, c2 = len(g2.gen_dom), len(g2.gen_cod)
    produced = list(range(fresh, fresh + c1))
    after = wires[:o1] + produced + wires[o1 + d1:]
    eaten = after[o2:o2 + d2]
    if any(w in produced for w in eaten):
        return None
    if d2 == 0:
        if o1 < o2 < o1 + c1:
            return None  # a floating piece trapped over the first layer
        moved_left = o2 <= o1
        new_o2 = o2 if moved_left else o2 - c1 + d1
    elif o2 + d2 <= o1:
        moved_left = True
        new_o2 = o2
    elif o2 >= o1 + c1:
        moved_left = False
        new_o2 = o2 - c1 + d1
    else:
        return None  # the interval straddles the freshly produced block
    made2 = list(range(fresh + c1, fresh + c1 + c2))
    wires2 = wires[:new_o2] + made2 + wires[new_o2 + d2:]
    if d1 > 0:
        new_o1 = _sublist_index(wires2, wires[o1:o1 + d1])
        if new_o1 is None:
            return None
    else:
        new_o1 = o1 + c2 - d2 if moved_left else o1
    return layers[:i] + (Layer(new_o2, g2), Layer(new_o1, g1)) + layers[i + 2:]


def interchange_closure(dom: Word, layers: tuple,
                        move_bound: Optional[int] = None) -> Tuple[set, bool]:
    """All layer lists reachable by single interchange moves.  Returns the
    set and whether the move bound truncated the search."""
    start = tuple(layers)
    seen = {start}
    frontier = [start]
    depth = 0
    while frontier:
        if move_bound is not None and depth >= move_bound:
            return seen, True
        depth += 1
        new = []
        for node in frontier:
            for i in range(len(node) - 1):
                swapped = swap_adjacent(len(dom), node, i)
                if swapped is not None and swapped not in seen:
                    seen.add(swapped)
                    new.append(swapped)
        frontier = new
    return seen, False


def interchange_closure_eq(s: Term, t: Term,
                           move_bound: Optional[int] = None) -> Verdict:
    """Free-base equality by brute force over single interchange moves."""
    if s.dom != t.dom:
        return Verdict.UNEQUAL
    target = layers_of(t)
    closure, truncated = interchange_closure(s.dom, layers_of(s), move_bound)
    if target in closure:
        return Verdict.EQUAL
    return Verdict.INCONCLUSIVE if truncated else Verdict.UNEQUAL


def interchange_minimum(term: Term) -> tuple:
    """Lexicographic minimum of the full interchange class; cross-checks the
    greedy normalizer in tests."""
    closure, truncated = interchange_closure(term.dom, layers_of(term))
    assert not truncated
    return min(closure, key=lambda ls: tuple(l.key() for l in ls))


def enumerate_layer_lists(gens: Sequence[Gen], dom: Word, max_boxes: int,
                          max_width: Optional[int] = None) -> List[tuple]:
    """All valid layer lists from `dom` with at most `max_boxes` layers."""
    out: List[tuple] = []
    acc: List[Layer] = []

    def grow(word: Word):
        out.append(tuple(acc))
        if len(acc) == max_boxes:
            return
        for gen in gens:
            take = len(gen.gen_dom)
            if take == 0:
                offsets: Iterable[int] = range(len(word) + 1)
            else:
                offsets = (o for o in range(len(word) - take + 1)
                           if word[o:o + take] == gen.gen_dom)
            for o in offsets:
                new_word = word[:o] @ gen.gen_cod @ word[o + take:]
                if max_width is not None and len(new_word) > max_width:
                    continue
                acc.append(Layer(o, gen))
                grow(new_word)
                acc.pop()

    grow(dom)
    return out


def term_of_layers(dom: Word, layers: Iterable[Layer]) -> Term:
    """Rebuild a term from a layer list (inverse of flattening, up to the
    monoidal axioms)."""
    word = dom
    out: Optional[Term] = None
    for offset, gen in layers:
        take = len(gen.gen_dom)
        piece: Term = gen
        if offset:
            piece = Id(word[:offset]) @ piece
        if offset + take < len(word):
            piece = piece @ Id(word[offset + take:])
        word = word[:offset] @ gen.gen_cod @ word[offset + take:]
        out = piece if out is None else out >> piece
    return Id(dom) if out is None else out


def enumerate_free_homs(gens: Sequence[Gen], dom: Word, cod: Word,
                        max_boxes: int) -> Iterator[Term]:
    """All terms dom -> cod with at most `max_boxes` generator occurrences,
    one per canonical diagram."""
    seen = set()
    for layers in enumerate_layer_lists(gens, dom, max_boxes):
        term = term_of_layers(dom, layers)
        if term.cod != cod:
            continue
        diagram = normalize(term)
        if diagram not in seen:
            seen.add(diagram)
            yield diagram.replay()


# ---------------------------------------------------------------------------
# sliding closure (finite base)

def residual_words(letters: Sequence[tuple], max_len: int) -> List[FinObject]:
    """All mediator objects: words over `letters` of length <= max_len."""
    letters = sorted(set((str(n), int(c)) for n, c in letters))
    out = [FinObject()]
    for length in range(1, max_len + 1):
        for combo in itertools.product(letters, repeat=length):
            out.append(FinObject(combo))
    return out


def _comb_state(comb: Comb) -> tuple:
    return (comb.residuals, tuple(t.data for t in comb.teeth))


def forward_slides(comb: Comb, mediators: Sequence[FinObject]) -> Iterator[Comb]:
    """All single slides moving a mediator out of tooth i into tooth i+1."""
    n = comb.depth
    for gap in range(1, n):
        m_obj = comb.residuals[gap - 1]
        tooth = comb.teeth[gap - 1]
        nxt = comb.teeth[gap]
        b_size = comb.pattern[gap - 1][1].size
        a2 = comb.pattern[gap][0]
        a2_size = a2.size
        split = [divmod(v, b_size) for v in tooth.data]
        for m_new in mediators:
            for m_data in itertools.product(range(m_obj.size), repeat=m_new.size):
                inv: dict = {}
                for r_new, r_old in enumerate(m_data):
                    inv.setdefault(r_old, []).append(r_new)
                choices = [inv.get(r, ()) for r, _ in split]
                if not all(choices):
                    continue
                prefixed = tuple(nxt.data[r * a2_size + a]
                                 for r in m_data for a in range(a2_size))
                new_next = FinMorphism(m_new @ a2, nxt.cod, prefixed)
                for picks in itertools.product(*choices):
                    core_data = tuple(r_new * b_size + bv
                                      for r_new, (_, bv) in zip(picks, split))
                    core = FinMorphism(tooth.dom, m_new @ comb.pattern[gap - 1][1],
                                       core_data)
                    yield Comb(comb.pattern,
                               comb.residuals[:gap - 1] + (m_new,)
                               + comb.residuals[gap:],
                               comb.teeth[:gap - 1] + (core, new_next)
                               + comb.teeth[gap + 1:])


def backward_slides(comb: Comb, mediators: Sequence[FinObject]) -> Iterator[Comb]:
    """All single slides moving a mediator out of tooth i+1 back into tooth i."""
    n = comb.depth
    for gap in range(1, n):
        m_obj = comb.residuals[gap - 1]
        tooth = comb.teeth[gap - 1]
        nxt = comb.teeth[gap]
        b_obj = comb.pattern[gap - 1][1]
        a2_size = comb.pattern[gap][0].size
        cod_size = nxt.cod.size
        for m_new in mediators:
            new_dom_size = m_new.size * a2_size
            for m_data in itertools.product(range(m_new.size), repeat=m_obj.size):
                fixed: dict = {}
                ok = True
                for r_old in range(m_obj.size):
                    for a in range(a2_size):
                        slot = m_data[r_old] * a2_size + a
                        want = nxt.data[r_old * a2_size + a]
                        if fixed.setdefault(slot, want) != want:
                            ok = False
                            break
                    if not ok:
                        break
                if not ok:
                    continue
                free = [slot for slot in range(new_dom_size) if slot not in fixed]
                med = FinMorphism(m_obj, m_new, m_data)
                new_tooth = tooth >> (med @ b_obj.identity())
                for fill in itertools.product(range(cod_size), repeat=len(free)):
                    data = list(range(new_dom_size))
                    for slot in range(new_dom_size):
                        data[slot] = fixed.get(slot, 0)
                    for slot, value in zip(free, fill):
                        data[slot] = value
                    new_next = FinMorphism(m_new @ comb.pattern[gap][0], nxt.cod,
                                           tuple(data))
                    yield Comb(comb.pattern,
                               comb.residuals[:gap - 1] + (m_new,)
                               + comb.residuals[gap:],
                               comb.teeth[:gap - 1] + (new_tooth, new_next)
                               + comb.teeth[gap + 1:])


def history_bound(comb: Comb) -> int:
    """Residual length below which an exhaustive closure may miss the route
    to the input-history form (over a cartesian base)."""
    longest = max((len(m) for m in comb.residuals), default=0)
    prefix = 0
    for a, _ in comb.pattern[:-1]:
        prefix += len(a)
        longest = max(longest, prefix)
    return longest


def historify(comb: Comb) -> Comb:
    """Slide a finite-base comb into its input-history form, where the
    residual after tooth i is the whole input prefix A_1 * ... * A_i.  Every
    step goes through the validated slide operation, so the path doubles as
    a certificate of sliding equivalence."""
    from .combs import slide
    out = comb
    hist = FinObject()
    for gap in range(1, comb.depth):
        hist = hist @ out.pattern[gap - 1][0]
        tooth = out.teeth[gap - 1]
        b_size = out.pattern[gap - 1][1].size
        core_data = []
        med_data = []
        for idx, value in enumerate(tooth.data):
            r_old, bv = divmod(value, b_size)
            core_data.append(idx * b_size + bv)
            med_data.append(r_old)
        core = FinMorphism(hist, hist @ out.pattern[gap - 1][1], tuple(core_data))
        mediator = FinMorphism(hist, out.residuals[gap - 1], tuple(med_data))
        out = slide(out, gap, core, mediator)
    return out


def sliding_closure_eq(c1: Comb, c2: Comb,
                       residual_bound: Optional[int] = None,
                       mediators: Optional[Sequence] = None,
                       max_nodes: int = 200_000) -> Verdict:
    """Comb equivalence by breadth-first search over single slides.

    The default residual bound is two letters beyond the longest residual in
    the inputs.  Over a finite cartesian base, an exhausted search is
    conclusive whenever the bound covers the input-history route; otherwise
    the verdict is Inconclusive.
    """
    if c1.pattern != c2.pattern:
        return Verdict.UNEQUAL
    if isinstance(c1.teeth[0], Term):
        return _free_sliding_closure_eq(c1, c2, residual_bound, max_nodes)
    longest = max((len(m) for m in c1.residuals + c2.residuals), default=0)
    if residual_bound is None:
        residual_bound = longest + 2
    if mediators is None:
        letters = [letter
                   for obj in c1.residuals + c2.residuals
                   + tuple(a for a, _ in c1.pattern) + tuple(b for _, b in c1.pattern)
                   for letter in obj]
        mediators = residual_words(letters, residual_bound)
    target = _comb_state(c2)
    start = _comb_state(c1)
    seen = {start}
    frontier = [c1]
    if start == target:
        return Verdict.EQUAL
    while frontier:
        new = []
        for node in frontier:
            for neighbour in itertools.chain(forward_slides(node, mediators),
                                             backward_slides(node, mediators)):
                state = _comb_state(neighbour)
                if state in seen:
                    continue
                if state == target:
                    return Verdict.EQUAL
                seen.add(state)
                new.append(neighbour)
                if len(seen) > max_nodes:
                    return Verdict.INCONCLUSIVE
        frontier = new
    needed = max(history_bound(c1), history_bound(c2), longest)
    if residual_bound >= needed:
        return Verdict.UNEQUAL
    return Verdict.INCONCLUSIVE


# ---------------------------------------------------------------------------
# sliding closure (free base)

def _teeth_generators(comb: Comb) -> List[Gen]:
    gens = {}
    for tooth in comb.teeth:
        for _, gen in normalize(tooth).layers:
            gens[(gen.name, gen.gen_dom, gen.gen_cod)] = gen
    return [gens[k] for k in sorted(gens)]


def _free_letters(comb: Comb) -> List[str]:
    letters = set()
    for a, b in comb.pattern:
        letters.update(a)
        letters.update(b)
    for m in comb.residuals:
        letters.update(m)
    for gen in _teeth_generators(comb):
        letters.update(gen.gen_dom)
        letters.update(gen.gen_cod)
    return sorted(letters)


def _free_slides(comb: Comb, words: Sequence[Word], gens: Sequence[Gen],
                 max_boxes: int) -> Iterator[Comb]:
    from .combs import slide
    from .free_base import equivalent
    for gap in range(1, comb.depth):
        m_obj = comb.residuals[gap - 1]
        before = comb.residuals[gap - 2] if gap > 1 else Word()
        a, b = comb.pattern[gap - 1]
        tooth = comb.teeth[gap - 1]
        nxt = comb.teeth[gap]
        a2 = comb.pattern[gap][0]
        for m_new in words:
            for med in enumerate_free_homs(gens, m_new, m_obj, max_boxes):
                for core in enumerate_free_homs(gens, before @ a, m_new @ b,
                                                max_boxes):
                    if equivalent(core >> (med @ Id(b)), tooth):
                        yield slide(comb, gap, core, med)
            # the reverse direction: pull a mediator out of the next tooth
            for med in enumerate_free_homs(gens, m_obj, m_new, max_boxes):
                for rest in enumerate_free_homs(gens, m_new @ a2, nxt.cod,
                                                max_boxes):
                    if equivalent((med @ Id(a2)) >> rest, nxt):
                        yield Comb(comb.pattern,
                                   comb.residuals[:gap - 1] + (m_new,)
                                   + comb.residuals[gap:],
                                   comb.teeth[:gap - 1]
                                   + (tooth >> (med @ Id(b)), rest)
                                   + comb.teeth[gap + 1:])


def _free_comb_state(comb: Comb) -> tuple:
    return (comb.residuals, tuple(normalize(t) for t in comb.teeth))


def _free_sliding_closure_eq(c1: Comb, c2: Comb,
                             residual_bound: Optional[int],
                             max_nodes: int) -> Verdict:
    longest = max((len(m) for m in c1.residuals + c2.residuals), default=0)
    if residual_bound is None:
        residual_bound = longest + 1
    gens = sorted(set(map(tuple, (g for g in _teeth_generators(c1)
                                  + _teeth_generators(c2)))))
    gens = [Gen(*g) for g in gens]
    letters = sorted(set(_free_letters(c1)) | set(_free_letters(c2)))
    words = [Word(combo) for length in range(residual_bound + 1)
             for combo in itertools.product(letters, repeat=length)]
    max_boxes = max(len(normalize(t).layers) for t in c1.teeth + c2.teeth) + 1
    target = _free_comb_state(c2)
    start = _free_comb_state(c1)
    if start == target:
        return Verdict.EQUAL
    seen = {start}
    frontier = [c1]
    clipped = False
    while frontier:
        new = []
        for node in frontier:
            for neighbour in _free_slides(node, words, gens, max_boxes):
                if len(seen) > max_nodes:
                    return Verdict.INCONCLUSIVE
                state = _free_comb_state(neighbour)
                if state in seen:
                    continue
                if state == target:
                    return Verdict.EQUAL
                if max((len(normalize(t).layers) for t in neighbour.teeth),
                       default=0) >= max_boxes:
                    clipped = True
                seen.add(state)
                new.append(neighbour)
        frontier = new
    return Verdict.INCONCLUSIVE if clipped else Verdict.UNEQUAL


# ---------------------------------------------------------------------------
# exhaustive enumerators

def enumerate_combs(pattern: Sequence[tuple], letters: Sequence[tuple],
                    residual_bound: int) -> Iterator[Comb]:
    """All finite-base combs over `pattern` whose residual words are built
    from `letters` with length <= residual_bound, in a deterministic order."""
    pattern = tuple((a, b) for a, b in pattern)
    n = len(pattern)
    words = residual_words(letters, residual_bound)
    unit = FinObject()
    for residuals in itertools.product(words, repeat=n - 1):
        hom_streams = []
        for i in range(n):
            before = residuals[i - 1] if i > 0 else unit
            after = residuals[i] if i < n - 1 else unit
            hom_streams.append(list(enumerate_homs(before @ pattern[i][0],
                                                   after @ pattern[i][1])))
        for teeth in itertools.product(*hom_streams):
            yield Comb(pattern, tuple(residuals), tuple(teeth))


def enumerate_optics(source: tuple, target: tuple, letters: Sequence[tuple],
                     residual_bound: int) -> Iterator:
    """All finite-base optics (A,B) -> (C,D) with bounded residuals."""
    from .optics import Optic
    a, b = source
    c, d = target
    for comb in enumerate_combs(((a, c), (d, b)), letters, residual_bound):
        yield Optic.from_comb(comb)


def enumerate_lenses(store: FinObject, view: FinObject) -> Iterator:
    """All (get, put) pairs between the given carriers."""
    from .lenses import Lens
    for get in enumerate_homs(store, view):
        for put in enumerate_homs(store @ view, store):
            yield Lens(store, view, get, put)


# ---------------------------------------------------------------------------
# partition helpers for the exhaustive cross-checks

class UnionFind:
    def __init__(self):
        self.parent: dict = {}

    def find(self, x):
        parent = self.parent
        if x not in parent:
            parent[x] = x
            return x
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x, y):
        self.parent[self.find(x)] = self.find(y)

    def groups(self) -> dict:
        out: dict = {}
        for x in self.parent:
            out.setdefault(self.find(x), set()).add(x)
        return out


def partition_by_sliding(combs: Iterable[Comb], mediators: Sequence[FinObject],
                         certify_history: bool = False) -> UnionFind:
    """Connected components of the single-slide graph over an exhaustive
    family (forward slides suffice: every backward slide is some family
    member's forward slide).  With `certify_history`, each comb is also
    joined to its input-history form through validated slide steps, which
    covers routes whose mediators exceed the enumeration bound."""
    uf = UnionFind()
    for comb in combs:
        state = _comb_state(comb)
        uf.find(state)
        for neighbour in forward_slides(comb, mediators):
            uf.union(state, _comb_state(neighbour))
        if certify_history:
            uf.union(state, _comb_state(historify(comb)))
    return uf
