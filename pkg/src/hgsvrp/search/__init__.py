from .local_search import (
    LocalSearch,
    default_node_operators,
    default_route_operators,
    ls_run,
)
from .neighbourhood import NeighbourhoodParams, compute_neighbours
from .node_ops import Exchange, MoveTwoClientsReversed, TwoOpt
from .route_ops import RelocateStar, SwapStar
from .state import SearchState

__all__ = [
    "Exchange",
    "LocalSearch",
    "MoveTwoClientsReversed",
    "NeighbourhoodParams",
    "RelocateStar",
    "SearchState",
    "SwapStar",
    "TwoOpt",
    "compute_neighbours",
    "default_node_operators",
    "default_route_operators",
    "ls_run",
]
