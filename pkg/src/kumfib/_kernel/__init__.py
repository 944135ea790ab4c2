"""Kernel selection: compiled extension when available, pure Python otherwise.

Set KF_PURE_KERNEL=1 to force the pure implementation (used by the benchmark
and by the twin-agreement tests).  `impl_name` reports which one is active.
"""

import os

if os.environ.get("KF_PURE_KERNEL") == "1":
    from . import pure as _impl

    impl_name = "pure"
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]

        impl_name = "compiled"
    except ImportError:
        from . import pure as _impl

        impl_name = "pure"

norm = _impl.norm
add = _impl.add
neg = _impl.neg
sub = _impl.sub
mul = _impl.mul
scale = _impl.scale
deriv = _impl.deriv
content = _impl.content
primitive = _impl.primitive
eval_scaled = _impl.eval_scaled
sign_at = _impl.sign_at
sign_at_inf = _impl.sign_at_inf
prem = _impl.prem
exact_div = _impl.exact_div
gcd_poly = _impl.gcd_poly
squarefree = _impl.squarefree
sturm_chain = _impl.sturm_chain
variations = _impl.variations
variations_inf = _impl.variations_inf
count_between = _impl.count_between
cauchy_bound = _impl.cauchy_bound
isolate = _impl.isolate
refine = _impl.refine
