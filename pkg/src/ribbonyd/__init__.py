"""Exact certification of ribbon Yetter-Drinfeld data and evaluation of framed tangle invariants."""

from .ring import LAURENT, RATIONAL, LaurentHalf, format_scalar, ring_add, ring_mul, ring_parse
from .linmap import LinMap, compose, scalar_of, swap, tensor
from .hopf import FiniteGroup, HopfData, certify_hopf, check_derived_antipode_identities, check_hopf, group_algebra
from .yd import YDData, adjoint_yd, check_yd, check_yd_morphism, yd_braiding, yd_tensor
from .ribbon import (PivotalData, RibbonDatum, RibbonYDData, certify_ribbon, check_prop_r35, check_snakes,
                     derive_dual_yd, derive_mixed_crossings, double_dual, dual_morphism, gamma, left_curl,
                     right_curl, scalar_twist)
from .tangle import BraidWord, TangleWord, braid_closure, parse_tangle, writhe
from .evaluation import evaluate, framed_invariant
from .data import builtin, builtin_group_datum, builtin_jones_datum
from .oracle import count_meridian_homs, kauffman_bracket

__version__ = "0.1.0"
