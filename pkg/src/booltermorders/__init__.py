"""Boolean term orders on subsets of [n].

Total orders on the power set of {1, ..., n} with the empty set minimal and
comparisons preserved under union with disjoint sets: validation,
enumeration, coherence (exact rational LP), flips and flip graphs, the
associated hyperplane arrangement, oriented-matroid localizations, and the
refinement poset of generalized partial term orders.
"""

from .core import (
    DisjointPair,
    OrderError,
    ParseError,
    TermOrder,
    canonicalize,
    is_valid,
    parse_order,
    serialize_order,
    validate,
)
from .enumeration import count_orders, enumerate_orders
from .coherence import (
    Certificate,
    find_weight,
    is_coherent,
    noncoherence_certificate,
    order_from_weight,
    verify_certificate,
)
from .flips import flip, flip_graph, flippable_pairs, lex_product, primitive_pairs
from .arrangement import char_poly, region_count
from .omatroid import Signature, check_localization, check_mu_conditions, mu_from_order
from .baues import PartialTermOrder, coherent_above_only_trivial, refines

__version__ = "0.1.0"

__all__ = [
    "Certificate",
    "DisjointPair",
    "OrderError",
    "ParseError",
    "PartialTermOrder",
    "Signature",
    "TermOrder",
    "canonicalize",
    "char_poly",
    "check_localization",
    "check_mu_conditions",
    "coherent_above_only_trivial",
    "count_orders",
    "enumerate_orders",
    "find_weight",
    "flip",
    "flip_graph",
    "flippable_pairs",
    "is_coherent",
    "is_valid",
    "lex_product",
    "mu_from_order",
    "noncoherence_certificate",
    "order_from_weight",
    "parse_order",
    "primitive_pairs",
    "refines",
    "region_count",
    "serialize_order",
    "validate",
    "verify_certificate",
]
