"""Comb diagrams, optics and lens laws over free and finite cartesian bases."""

from .errors import (BoundaryMismatch, CorneringError, DepthMismatch,
                     DslError, DuplicateName, FactorizationRejected,
                     GapOutOfRange, LayoutLimitExceeded, NotHomogeneous,
                     ParseFailure, PatternMismatch, TypeMismatch,
                     UnknownGenerator, UnresolvedReference)
from .free_base import (Diagram, Gen, Id, Par, Seq, Signature, Term, Word,
                        equivalent as eq_base, normalize, validate)
from .finite_base import (FinMorphism, FinObject, check_comonoid_axioms, copy,
                          delete, enumerate_homs, is_inhabited, point)
from .combs import (Comb, LeftComb, Polarity, RECEIVE, SEND,
                    alternation_depth, collapse, equivalent as eq_comb,
                    from_morphism, interleave, plug_gap, run, slide)
from .optics import (Optic, compose_as_combs, equivalent as eq_optic,
                     identity_optic, receive_cell, send_cell)
from .lenses import (Lens, check_lens_laws, comult_comb, counit_comb,
                     decompose, is_lawful, lemma_suite, optic_of_lens)
from .oracle import (Verdict, interchange_closure_eq, sliding_closure_eq)

__version__ = "0.1.0"

__all__ = [
    "BoundaryMismatch", "Comb", "CorneringError", "DepthMismatch", "Diagram",
    "DslError", "DuplicateName", "FactorizationRejected", "FinMorphism",
    "FinObject", "GapOutOfRange", "Gen", "Id", "LayoutLimitExceeded",
    "LeftComb", "Lens", "NotHomogeneous", "Optic", "Par", "ParseFailure",
    "PatternMismatch", "Polarity", "RECEIVE", "SEND", "Seq", "Signature",
    "Term", "TypeMismatch", "UnknownGenerator", "UnresolvedReference",
    "Verdict", "Word", "alternation_depth", "check_comonoid_axioms",
    "check_lens_laws", "collapse", "compose_as_combs", "comult_comb", "copy",
    "counit_comb", "decompose", "delete", "enumerate_homs", "eq_base",
    "eq_comb", "eq_optic", "from_morphism", "identity_optic",
    "interchange_closure_eq", "interleave", "is_inhabited", "is_lawful",
    "lemma_suite", "normalize", "optic_of_lens", "plug_gap", "point",
    "receive_cell", "run", "send_cell", "slide", "sliding_closure_eq",
    "validate",
]
