"""Klein-bottle invariants on the Grothendieck ring, and the extension
verdict for slightly degenerate data.

Everything here is decategorified: the eta scalar of a label is theta*d
(the framed loop value in the ribbon gauge), and the Klein invariants of
the two canonical summands singled out by the fermion line e are the
exact rationals

    kappa_pm = 1/2 (#{a : a* = a} +- #{a : a* = e.a}),

computed twice: once by direct counting and once as traces of the exact
rational matrices (Id +- M_e)/2 composed with the dual permutation.  The
two computations must agree exactly; for valid slightly degenerate data
the twisted count vanishes and kappa_minus > 0, which certifies that a
minimal nondegenerate extension exists (the positive, "S", case of the
two possible ambient doubles; the other, "T", would force kappa <= 0 on
purely magnetic objects).  No 2-categorical structure is modelled.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .cyclotomic import CycNum
from .data import CentreKind, PremodularData, classify_degeneracy
from .errors import CrossCheckMismatch, NotSlightlyDegenerate
from .fusion_ring import dual_permutation_matrix, fusion_matrix

__all__ = ["KappaReport", "ExtensionVerdict", "eta_scalar", "kappa_invariants", "extension_verdict"]

#: Reference values of the Klein invariant on a magnetic simple object in
#: the two candidate ambient doubles; positivity selects S.
KAPPA_REFERENCE = {"class_S": 1, "class_T": -1}


@dataclass
class KappaReport:
    n_self_dual: int
    n_e_twisted: int
    kappa_plus: Fraction
    kappa_minus: Fraction
    matrix_kappa_plus: Fraction
    matrix_kappa_minus: Fraction
    verdict: str  # "extension_exists_S" | "inconsistent"

    def to_json(self):
        frac = lambda f: f"{f.numerator}/{f.denominator}"
        return {
            "n_self_dual": self.n_self_dual,
            "n_e_twisted": self.n_e_twisted,
            "kappa_plus": frac(self.kappa_plus),
            "kappa_minus": frac(self.kappa_minus),
            "matrix_kappa_plus": frac(self.matrix_kappa_plus),
            "matrix_kappa_minus": frac(self.matrix_kappa_minus),
            "verdict": self.verdict,
        }


def eta_scalar(data: PremodularData, a: str) -> CycNum:
    """theta_a * d_a, the framed loop value of a dualizable simple."""
    i = data.ring.index(a)
    return data.twists[i] * data.dims[i]


def kappa_invariants(data: PremodularData) -> KappaReport:
    """Klein invariants of the two canonical summands of a slightly
    degenerate datum, with the matrix-trace cross-check.

    Raises NotSlightlyDegenerate unless the classification identifies a
    fermion e, and CrossCheckMismatch if the counting and matrix paths
    disagree (which would signal an implementation bug, never expected
    on valid data).
    """
    cls = classify_degeneracy(data)
    if cls.kind is not CentreKind.SLIGHTLY_DEGENERATE:
        raise NotSlightlyDegenerate(f"classification is {cls.kind.value}; need a fermion line")
    ring = data.ring
    r = ring.rank
    e = ring.index(cls.fermion)

    dual = list(ring.dual)
    n_self_dual = sum(1 for a in range(r) if dual[a] == a)
    n_e_twisted = sum(1 for a in range(r) if dual[a] == ring.product_single(e, a))

    # independent path: exact rational idempotents (Id +- M_e)/2 against
    # the dual permutation matrix
    M_e = fusion_matrix(ring, cls.fermion)
    D = dual_permutation_matrix(ring)
    half = Fraction(1, 2)
    eye = np.eye(r, dtype=np.int64)
    p_plus = [[half * int(eye[i, j] + M_e[i, j]) for j in range(r)] for i in range(r)]
    p_minus = [[half * int(eye[i, j] - M_e[i, j]) for j in range(r)] for i in range(r)]

    def trace_against_dual(P):
        # (P @ D) has diagonal entry P[a, a*] since D[b, a] = 1 iff b = a*
        return sum((P[a][dual[a]] for a in range(r)), Fraction(0))

    matrix_plus = trace_against_dual(p_plus)
    matrix_minus = trace_against_dual(p_minus)

    kappa_plus = Fraction(n_self_dual + n_e_twisted, 2)
    kappa_minus = Fraction(n_self_dual - n_e_twisted, 2)
    if matrix_plus != kappa_plus or matrix_minus != kappa_minus:
        raise CrossCheckMismatch(
            f"matrix traces ({matrix_plus}, {matrix_minus}) != counts ({kappa_plus}, {kappa_minus})"
        )

    verdict = "extension_exists_S" if n_e_twisted == 0 and kappa_minus > 0 else "inconsistent"
    return KappaReport(
        n_self_dual=n_self_dual,
        n_e_twisted=n_e_twisted,
        kappa_plus=kappa_plus,
        kappa_minus=kappa_minus,
        matrix_kappa_plus=matrix_plus,
        matrix_kappa_minus=matrix_minus,
        verdict=verdict,
    )


@dataclass
class ExtensionVerdict:
    code: str                     # already_nondegenerate | extension_exists_S | outside_scope
    message: str
    kappa: KappaReport | None
    reference: dict

    def to_json(self):
        return {
            "code": self.code,
            "message": self.message,
            "kappa": self.kappa.to_json() if self.kappa else None,
            "reference": dict(self.reference),
        }


def extension_verdict(data: PremodularData) -> ExtensionVerdict:
    """Existence verdict for a minimal nondegenerate extension.

    Nondegenerate data is its own extension; slightly degenerate data is
    certified through kappa_minus > 0; data with a transparent boson is
    reported as out of scope without judgment.
    """
    cls = classify_degeneracy(data)
    if cls.kind is CentreKind.NONDEGENERATE:
        return ExtensionVerdict(
            code="already_nondegenerate",
            message="already nondegenerate (M = B)",
            kappa=None,
            reference=KAPPA_REFERENCE,
        )
    if cls.kind is CentreKind.SLIGHTLY_DEGENERATE:
        report = kappa_invariants(data)
        if report.verdict == "extension_exists_S":
            msg = (
                "minimal nondegenerate extension exists (ambient double of class S, "
                f"kappa_minus = {report.kappa_minus})"
            )
        else:
            msg = "kappa invariants inconsistent; datum falsified"
        return ExtensionVerdict(
            code="extension_exists_S" if report.verdict == "extension_exists_S" else "inconsistent",
            message=msg,
            kappa=report,
            reference=KAPPA_REFERENCE,
        )
    return ExtensionVerdict(
        code="outside_scope",
        message="outside scope: transparent boson present (Tannakian direction)",
        kappa=None,
        reference=KAPPA_REFERENCE,
    )
