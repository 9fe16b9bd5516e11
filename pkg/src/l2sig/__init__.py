"""Exact arithmetic for L2-signature invariants of hermitian forms.

The package computes, in exact rational/cyclotomic arithmetic:

* signatures of hermitian forms over group algebras of finite abelian
  groups, per-character signature tables, g-signatures, L2-signatures
  and the signature defect ``alpha = sig_l2 - sig_trivial``;
* L2-signatures of hermitian forms over Laurent polynomial rings
  (the infinite-cyclic case) via certified circle quadrature, together
  with their finite-quotient approximations;
* a bookkeeping ledger for families of labels separated by exact
  offset invariants.

All values are immutable and all operations are pure functions, so the
public API is safe for concurrent use.
"""

__version__ = "0.1.0"

from .exactnum import CycNumber, DomainError, FormatError, Sign, UsageError

__all__ = [
    "CycNumber",
    "Sign",
    "UsageError",
    "DomainError",
    "FormatError",
    "__version__",
]
