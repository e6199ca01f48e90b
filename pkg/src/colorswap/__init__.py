"""Reachability between proper colorings under adjacent color swaps.

A move exchanges the colors of one edge's endpoints, provided the coloring
stays proper.  The package decides reachability exactly on paths (3 colors),
cographs (any k, including the flexible color ``*``), and split graphs
(fixed k, via kernelization); a breadth-first oracle over the full
reconfiguration space serves as ground truth and witness source; and the
constructions from token sliding, single-vertex recoloring, and
nondeterministic constraint logic act as structured instance generators.
"""

__version__ = "0.1.0"

from .core import (
    STAR,
    Coloring,
    Graph,
    Instance,
    ReconfSequence,
    SwapMove,
    apply_swap,
    is_proper,
    is_proper_extended,
    is_valid,
    legal_swaps,
    replay,
    route_bijective,
    solve_k_le_2,
)
from .cographs import (
    Cotree,
    CotreeLeaf,
    CotreeNode,
    build_cotree,
    cotree_to_graph,
    solve_crcs_cograph,
    solve_ecrcs_cograph,
    star_project,
    swappable_colors,
)
from .errors import (
    BudgetExceededError,
    ColorSwapError,
    InvalidInputError,
    NotACographError,
    NotSplitError,
    ParseError,
    PreconditionError,
    WrongSolverError,
)
from .formats import parse_cotree, parse_instance, serialize_cotree, serialize_instance
from .oracle import (
    DEFAULT_BUDGET,
    Decision,
    SearchBudget,
    crcs_components,
    crcs_reachable,
    ecrcs_reachable,
    enumerate_proper_colorings,
    ncl_reachable,
    svr_reachable,
    ts_reachable,
)
from .paths import contractions, invariant, is_swappable, solve_path, string_of
from .reductions import (
    GadgetLayout,
    GraphBuilder,
    NCLInstance,
    NCLMachine,
    SVRInstance,
    TokenSlidingInstance,
    attach_forbidden_pendant,
    ncl_to_3crcs,
    svr_to_kcrcs,
    ts_bipartite_to_crcs,
    ts_split_to_crcs,
    verify_reduction,
)
from .splitgraphs import (
    KernelResult,
    SplitPartition,
    apply_rule1,
    apply_rule2,
    kernel_size_bound,
    kernelize,
    solve_split,
    split_partition,
)
