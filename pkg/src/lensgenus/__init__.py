"""Small intersection pairings presenting the linking forms of lens spaces.

The linking form ``(q/p)`` of ``L(p, q)`` is presented by any nondegenerate
symmetric integer matrix ``S`` with ``-S^{-1}`` inducing it on ``coker S``.
This package builds such matrices of rank 1, 2, <= 4 (even) and <= 6
(positive definite), checks them exactly, and turns them into bounds on
the number of copies of ``CP2 # -CP2``, ``S2 x S2`` and ``CP2`` needed to
embed ``L(p, q)``.
"""

from .numtheory import (
    CeilingExceeded,
    factorize,
    find_prime_in_progression,
    is_prime,
    is_quadratic_residue,
    is_three_square_excluded,
    jacobi,
    sqrt_mod,
    three_squares,
)
from .intmatrix import Definiteness, determinant, hermite_normal_form, smith_normal_form
from .forms import (
    CyclicLinkingForm,
    FiniteLinkingForm,
    GramPairing,
    Parity,
    blow_down,
    canonical_q,
    characteristic_vector,
    cyclic_equivalent,
    direct_sum,
    is_characteristic,
    lemma_pairing_matrix,
    parity,
    presented_linking_form,
    presents,
)
from .presentations import (
    Construction,
    PresentationCertificate,
    definite_presentation,
    even_presentation,
    plumbing_presentation,
    rank1_presentation,
    rank2_constructive,
    rank2_presentation,
    search_definite_presentation,
)
from .certify import EmbeddingReport, embedding_report

__version__ = "0.1.0"
