"""kumfib: exact-arithmetic toolkit for twist pencils and Kummer-type surfaces.

Certified rational points on simultaneous twists of superelliptic curves,
rigorous torsion tests over Q, chord-tangent walks on plane cubics, exact
real-topology censuses, and density witnesses for positive-rank fibers, all
backed by machine-checkable certificates (JSON via the `kumfib` CLI).
"""

from ._kernel import impl_name as kernel_impl

__version__ = "0.1.0"
__all__ = ["kernel_impl", "__version__"]
