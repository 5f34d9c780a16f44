"""Trust-network conflict resolution.

Thin re-export of the compiled core: network construction, the polynomial
resolution algorithm, the stable-model oracle, bulk multi-object resolution,
workload generators and the resolve-vs-oracle equivalence sweep.
"""

from ._core import (
    Belief,
    DomainTooLarge,
    ParseError,
    ResolutionResult,
    TrustMapping,
    TrustNetwork,
    ValidationError,
    bulk_resolve,
    bulk_topology,
    check_instance,
    condense,
    gen_bulk_workload,
    gen_cycle_clusters,
    gen_nested_cycles,
    gen_scale_free,
    oracle_resolve,
    resolve,
    resolve_all_keys,
    sample_edges,
    verify_equivalence,
)

__all__ = [
    "Belief",
    "DomainTooLarge",
    "ParseError",
    "ResolutionResult",
    "TrustMapping",
    "TrustNetwork",
    "ValidationError",
    "bulk_resolve",
    "bulk_topology",
    "check_instance",
    "condense",
    "gen_bulk_workload",
    "gen_cycle_clusters",
    "gen_nested_cycles",
    "gen_scale_free",
    "oracle_resolve",
    "resolve",
    "resolve_all_keys",
    "sample_edges",
    "verify_equivalence",
]
