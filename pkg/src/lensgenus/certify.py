"""Embedding reports: connected-sum bounds for ``L(p, q)`` backed by matrices.

Each bound is the rank of an explicit intersection pairing (or a sum of two)
that presents ``(q/p)`` or ``(-q/p)``.  Turning such a pairing into a
4-manifold, and a pair of them into a closed one, is the topological
realization theorem for simply connected 4-manifolds with prescribed
boundary linking form; the report quotes it as an assumption and computes
nothing about it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import intmatrix as im
from .forms import CyclicLinkingForm, parity
from .numtheory import DEFAULT_CEILING
from .presentations import (
    PresentationCertificate,
    definite_presentation,
    even_presentation,
    rank1_presentation,
    rank2_presentation,
)

__all__ = [
    "EmbeddingReport",
    "embedding_report",
    "certificate_to_dict",
    "report_to_dict",
    "report_to_text",
    "REALIZATION_LICENSE",
    "FIVE_CP2_LABEL",
]

REALIZATION_LICENSE = (
    "assumed, not computed: a nonsingular pairing presenting the linking form of a "
    "homology lens space is realized by a simply connected topological 4-manifold "
    "it bounds (Boyer-Stong realization)"
)
FIVE_CP2_LABEL = "claimed in the literature, no algebraic witness"


@dataclass(frozen=True)
class EmbeddingReport:
    target: CyclicLinkingForm
    coboundary_b2: int
    coboundary_witness: Optional[PresentationCertificate]
    cp2_cp2bar_bound: int
    cp2_cp2bar_witness: Optional[PresentationCertificate]
    s2xs2_bound: int
    s2xs2_witness: PresentationCertificate
    cp2_bound: int
    cp2_witness_plus: PresentationCertificate
    cp2_witness_minus: PresentationCertificate
    five_cp2_flag: bool

    def witnesses(self):
        return [w for w in (self.coboundary_witness, self.cp2_cp2bar_witness,
                            self.s2xs2_witness, self.cp2_witness_plus,
                            self.cp2_witness_minus) if w is not None]


def embedding_report(p: int, q: int, ceiling: int = DEFAULT_CEILING) -> EmbeddingReport:
    """Collect witnesses for every bound on ``L(p, q)``.

    >>> embedding_report(7, 3).coboundary_b2
    1
    """
    t = CyclicLinkingForm(p, q)
    if p == 1:
        cob = None
        b2 = 0
        cc_witness, cc_bound = None, 0
    else:
        cc_witness = rank2_presentation(p, t.q, ceiling)
        cc_bound = 2
        cob = rank1_presentation(p, t.q)
        b2 = 1
        if cob is None:
            cob, b2 = cc_witness, 2
    even = even_presentation(p, t.q, ceiling)
    plus = definite_presentation(p, t.q, ceiling)
    minus = definite_presentation(p, -t.q, ceiling)
    report = EmbeddingReport(
        target=t,
        coboundary_b2=b2,
        coboundary_witness=cob,
        cp2_cp2bar_bound=cc_bound,
        cp2_cp2bar_witness=cc_witness,
        s2xs2_bound=even.rank,
        s2xs2_witness=even,
        cp2_bound=plus.rank + minus.rank,
        cp2_witness_plus=plus,
        cp2_witness_minus=minus,
        five_cp2_flag=(p % 2 == 1) or (t.q - 1) % p == 0 or (t.q + 1) % p == 0,
    )
    if not all(w.verified for w in report.witnesses()):
        raise ArithmeticError("unverified witness in embedding report")
    return report


# -- serialization ------------------------------------------------------------


def certificate_to_dict(c: PresentationCertificate) -> dict:
    g = c.gram
    return {
        "target": {"p": c.target.p, "q": c.target.q},
        "construction": c.construction.value,
        "rank": g.rank,
        "gram": [list(row) for row in g.gram],
        "parity": parity(g).value if g.rank else "even",
        "definiteness": im.definiteness(g.gram).value if g.rank else "positive-definite",
        "det": g.det,
        "verified": c.verified,
        "trace": list(c.trace),
    }


def _bound(value, witnesses, cite):
    return {
        "value": value,
        "witnesses": [certificate_to_dict(w) for w in witnesses if w is not None],
        "cites": cite,
    }


def report_to_dict(r: EmbeddingReport) -> dict:
    return {
        "target": {"p": r.target.p, "q": r.target.q},
        "coboundary_b2": _bound(
            r.coboundary_b2, [r.coboundary_witness],
            "b2 = 1 iff +-q is a square mod p (Saeki); b2 <= 2 always"),
        "cp2_cp2bar_bound": _bound(
            r.cp2_cp2bar_bound, [r.cp2_cp2bar_witness],
            "double of an odd b2 = 2 coboundary is #2(CP2 # -CP2)"),
        "s2xs2_bound": _bound(
            r.s2xs2_bound, [r.s2xs2_witness],
            "double of an even coboundary of rank n is #n S2xS2"),
        "cp2_bound": _bound(
            r.cp2_bound, [r.cp2_witness_plus, r.cp2_witness_minus],
            "positive definite odd pairings for (q/p) and (-q/p) glue to #n CP2"),
        "five_cp2_flag": {"value": r.five_cp2_flag, "label": FIVE_CP2_LABEL},
        "license": REALIZATION_LICENSE,
    }


def _matrix_lines(m) -> list[str]:
    if not m:
        return ["(empty)"]
    width = max(len(str(x)) for row in m for x in row)
    return ["[" + " ".join(str(x).rjust(width) for x in row) + "]" for row in m]


def report_to_text(r: EmbeddingReport) -> str:
    d = report_to_dict(r)
    lines = [f"L({r.target.p}, {r.target.q}): linking form ({r.target.q}/{r.target.p})", ""]
    rows = [
        ("coboundary b2", "coboundary_b2"),
        ("#n (CP2 # -CP2)", "cp2_cp2bar_bound"),
        ("#n S2xS2", "s2xs2_bound"),
        ("#n CP2", "cp2_bound"),
    ]
    label_w = max(len(label) for label, _ in rows)
    for label, key in rows:
        entry = d[key]
        lines.append(f"{label.ljust(label_w)}  <= {entry['value']}    ({entry['cites']})")
        for w in entry["witnesses"]:
            head = (f"{' ' * label_w}    {w['construction']} rank {w['rank']}, "
                    f"{w['parity']}, {w['definiteness']}, det {w['det']}, "
                    f"presents ({w['target']['q']}/{w['target']['p']}): {w['verified']}")
            lines.append(head)
            for m in _matrix_lines(w["gram"]):
                lines.append(f"{' ' * label_w}      {m}")
    lines.append("")
    lines.append(f"{'#5 CP2 flag'.ljust(label_w)}  {r.five_cp2_flag}    ({FIVE_CP2_LABEL})")
    lines.append(f"{'license'.ljust(label_w)}  {REALIZATION_LICENSE}")
    return "\n".join(lines) + "\n"
