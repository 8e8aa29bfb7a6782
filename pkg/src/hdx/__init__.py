"""hdx: weighted simplicial complexes and their expansion machinery.

Exact-rational complexes and links, walk operators with mixing bounds, F2
cohomological expansion constants by exhaustive search, cocycle testers and
CSS code extraction, and matroid base-exchange sampling.
"""

from .codes import cocycle_test, css_distances, css_from_complex, testability_epsilon
from .complexes import (
    LinkView,
    WeightedComplex,
    degree,
    from_top_faces,
    link,
    restrict_cochain,
    restrict_domain,
    skeleton,
)
from .f2 import (
    F2Cochain,
    coboundary,
    coboundary_expansion,
    cosystolic_expansion,
    spaces,
)
from .kernels import BACKEND as kernel_backend
from .matroids import (
    GraphicMatroid,
    LinearF2Matroid,
    UniformMatroid,
    base_walk_matrix,
    independence_complex,
    sample_base,
    verify_axioms,
)
from .spectral import (
    WeightedGraph,
    certify_local_spectral,
    cheeger,
    check_cheeger_inequalities,
    eigen,
    graph_from_complex,
    trickling_check,
)
from .walks import (
    al_bound,
    down_operator,
    exact_tv_curve,
    ko_bound,
    run_walk,
    up_operator,
    verify_mixing,
    walk_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "WeightedComplex",
    "LinkView",
    "from_top_faces",
    "skeleton",
    "link",
    "degree",
    "restrict_cochain",
    "restrict_domain",
    "WeightedGraph",
    "graph_from_complex",
    "eigen",
    "cheeger",
    "check_cheeger_inequalities",
    "certify_local_spectral",
    "trickling_check",
    "up_operator",
    "down_operator",
    "walk_matrix",
    "ko_bound",
    "al_bound",
    "verify_mixing",
    "run_walk",
    "exact_tv_curve",
    "F2Cochain",
    "coboundary",
    "spaces",
    "coboundary_expansion",
    "cosystolic_expansion",
    "cocycle_test",
    "testability_epsilon",
    "css_from_complex",
    "css_distances",
    "UniformMatroid",
    "GraphicMatroid",
    "LinearF2Matroid",
    "verify_axioms",
    "independence_complex",
    "base_walk_matrix",
    "sample_base",
    "kernel_backend",
    "__version__",
]
