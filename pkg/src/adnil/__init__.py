"""Ad-nilpotent ideals of Borel subalgebras of simple Lie algebras.

Exact enumeration of upper ideals of the positive-root poset, their
normalizers, affine Weyl group coordinates, Shi arrangement regions, and
counting identities.  All arithmetic is exact (integers and fractions).
"""

from .rootsys import build

__all__ = ["build"]
__version__ = "0.1.0"
