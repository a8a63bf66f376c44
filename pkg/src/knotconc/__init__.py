"""knotconc: exact knot-concordance invariants and symbolic certificates.

Subpackages by concern:

- :mod:`knotconc.laurent` -- the ring Q[t, t^-1] (exact rationals).
- :mod:`knotconc.realalg` -- real algebraic numbers, Sturm isolation,
  certified interval arithmetic for pi / cos / arccos.
- :mod:`knotconc.primality` -- irreducibility, strong primality, strong
  coprimality of Laurent polynomials.
- :mod:`knotconc.seifert` -- Seifert matrices and classical invariants.
- :mod:`knotconc.signature_fn` -- the Levine-Tristram signature as exact
  jump data, its integral, and cable pullback.
- :mod:`knotconc.alexmodule` -- cyclic rational Alexander modules,
  Blanchfield pairing, submodule isotropy.
- :mod:`knotconc.legendrian` -- front-diagram words, tb/rot, satellites,
  tau bound certificates.
- :mod:`knotconc.concordance` -- the knot-expression calculus and the
  certificate engine (robustness, filtration, independence, derived
  slice-knot examples).
- :mod:`knotconc.cli` -- the command-line surface.
"""

__version__ = "0.1.0"
