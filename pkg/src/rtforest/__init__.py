"""Exact computation in the weighted infinitesimal bialgebra of decorated planar rooted forests."""

from .coalgebra import (
    coassoc_defect,
    cocycle_defect,
    coproduct,
    coproduct_lin,
    dotword_coproduct_closed,
    is_group_like,
    leibniz_defect,
)
from .forest import (
    EMPTY,
    Alphabets,
    DecorationError,
    Forest,
    Tree,
    breadth,
    concat,
    count_forests,
    depth,
    dot_word,
    enumerate_forests,
    forests_up_to,
    graft,
    is_valid,
    leaf,
    render,
    validate,
    vertex_count,
)
from .lambda_ring import LAMBDA, ONE, ZERO, LambdaPoly
from .linear import LinComb, Tensor2, Tensor3, bplus, dot_left, dot_right, mul, tensor_of, unit
from .operated import (
    GroupLikeUncheckedWarning,
    MorphismError,
    OperatedTarget,
    UniversalMorphism,
    check_bialgebra_morphism,
    forest_target,
    relabel_assignment,
    universal_morphism,
)
from .prelie import prelie, prelie_defect
from .quiver import Arrow, Path, Quiver, QuiverError, path_coproduct
from .text import (
    ParseError,
    SessionConfig,
    parse_forest,
    parse_lincomb,
    parse_poly,
    parse_tensor,
    serialize_lincomb,
    serialize_tensor,
)

__version__ = "0.1.0"
