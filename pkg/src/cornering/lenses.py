"""Homogeneous optics over a cartesian base: lenses and the lens laws.

Lawfulness means being a comonoid homomorphism for the comonoid that every
pair (A,A) carries in the horizontal category; its two equations are checked
in tuple form.  The classical laws are checked by enumeration:

* GetPut:  put(a, get(a)) = a         (reading back what you just read)
* PutGet:  get(put(a, b)) = b         (reading what you just wrote)
* PutPut:  put(put(a, b), b') = put(a, b')   (the last write wins)

Law checking is enumeration-based on the finite cartesian base only; the
free base has no copy/delete, so it does not support this module.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from .combs import Comb, equivalent as comb_equivalent, from_morphism
from .errors import NotHomogeneous
from .finite_base import FinMorphism, FinObject, copy as fin_copy, delete
from .optics import Optic


def comult_comb(a) -> Comb:
    """The comonoid comultiplication on (A,A), in tuple form: three identity
    teeth with trivial residuals."""
    i = a.identity()
    u = a.unit()
    return Comb.make(((a, a), (a, a), (a, a)), (u, u), (i, i, i))


def counit_comb(a) -> Comb:
    """The comonoid counit on (A,A): the single identity tooth."""
    return from_morphism(a.identity())


def is_lawful(h: Optic) -> bool:
    """Whether a homogeneous optic is a comonoid homomorphism.

    Counit equation: the composite of the two parts is the identity.
    Comultiplication equation: duplicating after h equals running h, feeding
    the output back through, and running it again; both sides are depth-3
    tuples compared under sliding equivalence.
    """
    if h.source[0] != h.source[1] or h.target[0] != h.target[1]:
        raise NotHomogeneous("lawfulness needs an optic (A,A) -> (B,B)")
    a = h.source[0]
    b = h.target[0]
    m = h.residual
    if not (h.forward >> h.backward).equiv(a.identity()):
        return False
    pattern = ((a, b), (b, b), (b, a))
    after_dup = Comb.make(pattern, (m, m),
                          (h.forward, (m @ b).identity(), h.backward))
    dup_before = Comb.make(pattern, (m, m),
                           (h.forward, h.backward >> h.forward, h.backward))
    return comb_equivalent(after_dup, dup_before)


@dataclass(frozen=True)
class Lens:
    """A get/put presentation of a homogeneous optic over a cartesian base."""

    store: FinObject   # A
    view: FinObject    # B
    get: FinMorphism   # A -> B
    put: FinMorphism   # A * B -> A

    def __post_init__(self):
        assert self.get.dom == self.store and self.get.cod == self.view
        assert self.put.dom == self.store @ self.view and self.put.cod == self.store

    def to_optic(self) -> Optic:
        return optic_of_lens(self)


def optic_of_lens(lens: Lens) -> Optic:
    """The optic with residual A: copy the store, read through get, write
    back through put."""
    a, b = lens.store, lens.view
    forward = fin_copy(a) >> (a.identity() @ lens.get)
    return Optic.make((a, a), (b, b), a, forward, lens.put)


def decompose(h: Optic) -> Lens:
    """Extract (get, put) from a homogeneous optic by erasing the unused
    half of the forward part; optic_of_lens(decompose(h)) is equivalent to h."""
    if h.source[0] != h.source[1] or h.target[0] != h.target[1]:
        raise NotHomogeneous("decomposition needs an optic (A,A) -> (B,B)")
    a = h.source[0]
    b = h.target[0]
    m = h.residual
    get = h.forward >> (delete(m) @ b.identity())
    put = ((h.forward >> (m.identity() @ delete(b))) @ b.identity()) >> h.backward
    return Lens(a, b, get, put)


def check_lens_laws(lens: Lens):
    """Evaluate GetPut, PutGet and PutPut by enumerating the carriers."""
    get, put = lens.get, lens.put
    get_put = all(put.apply(a + get.apply(a)) == a
                  for a in lens.store.elements())
    put_get = all(get.apply(put.apply(a + b)) == b
                  for a in lens.store.elements()
                  for b in lens.view.elements())
    put_put = all(put.apply(put.apply(a + b) + b2) == put.apply(a + b2)
                  for a in lens.store.elements()
                  for b in lens.view.elements()
                  for b2 in lens.view.elements())
    return (get_put, put_get, put_put)


@dataclass
class LensRecord:
    get: tuple
    put: tuple
    get_put: bool
    put_get: bool
    put_put: bool
    lawful: bool

    @property
    def lawsful(self) -> bool:
        return self.get_put and self.put_get and self.put_put


@dataclass
class SuiteReport:
    """Outcome of the exhaustive laws-vs-lawfulness cross-check."""

    store_size: int
    view_size: int
    view_inhabited: bool
    records: list = field(default_factory=list)
    laws_without_lawful: list = field(default_factory=list)
    lawful_without_laws: list = field(default_factory=list)

    @property
    def total(self) -> int:
        return len(self.records)

    @property
    def lawful_count(self) -> int:
        return sum(1 for r in self.records if r.lawful)

    @property
    def laws_count(self) -> int:
        return sum(1 for r in self.records if r.lawsful)

    @property
    def violations(self) -> int:
        out = len(self.laws_without_lawful)
        if self.view_inhabited:
            out += len(self.lawful_without_laws)
        return out

    @property
    def ok(self) -> bool:
        return self.violations == 0

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "store_size": self.store_size,
            "view_size": self.view_size,
            "view_inhabited": self.view_inhabited,
            "lenses": self.total,
            "lawful": self.lawful_count,
            "satisfying_laws": self.laws_count,
            "laws_without_lawful": [
                {"get": list(r.get), "put": list(r.put)}
                for r in self.laws_without_lawful],
            "lawful_without_laws": [
                {"get": list(r.get), "put": list(r.put)}
                for r in self.lawful_without_laws],
            "violations": self.violations,
            "ok": self.ok,
        }

    def to_csv(self) -> str:
        out = io.StringIO()
        writer = csv.writer(out)
        writer.writerow(["get", "put", "get_put", "put_get", "put_put",
                         "laws", "lawful"])
        for r in self.records:
            writer.writerow([" ".join(map(str, r.get)),
                             " ".join(map(str, r.put)),
                             int(r.get_put), int(r.put_get), int(r.put_put),
                             int(r.lawsful), int(r.lawful)])
        return out.getvalue()

    def summary(self) -> str:
        lines = [
            "lenses: %d" % self.total,
            "satisfying all three laws: %d" % self.laws_count,
            "lawful (comonoid homomorphism): %d" % self.lawful_count,
            "laws but not lawful: %d" % len(self.laws_without_lawful),
            "lawful but not laws: %d%s" % (
                len(self.lawful_without_laws),
                "" if self.view_inhabited else " (view empty; recorded, not a violation)"),
            "verdict: %s" % ("agree" if self.ok else "VIOLATIONS FOUND"),
        ]
        return "\n".join(lines)

    def __str__(self):
        return self.summary()


def lemma_suite(store: FinObject, view: FinObject) -> SuiteReport:
    """Classify every lens between the given carriers by the three laws and
    by lawfulness, and cross-check the two characterisations: the laws imply
    lawfulness, and for an inhabited view the converse holds as well.
    Violations are reported, never thrown."""
    from .oracle import enumerate_lenses
    report = SuiteReport(store.size, view.size, view.size > 0)
    for lens in enumerate_lenses(store, view):
        laws = check_lens_laws(lens)
        lawful = is_lawful(optic_of_lens(lens))
        record = LensRecord(lens.get.data, lens.put.data, *laws, lawful)
        report.records.append(record)
        if record.lawsful and not lawful:
            report.laws_without_lawful.append(record)
        if lawful and not record.lawsful:
            report.lawful_without_laws.append(record)
    return report


def report_to_json_text(report: SuiteReport) -> str:
    return json.dumps(report.to_json(), indent=2, sort_keys=True)
