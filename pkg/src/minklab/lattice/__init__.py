"""Exact integer-grid realisation of the two causal-separation lattices.

Regions are bitsets over a finite integer grid; complements, completions,
meets and joins are computed with exact integer interval arithmetic.  The
inner sweep runs on a compiled kernel when available (see
`backend_name()`), with a bit-identical numpy fallback.
"""

from .engine import (backend_name, complement, completion, de_morgan_check,
                     diamond, galilei_chron_complement, is_complete, join,
                     meet, orthomodularity_check)
from .grid import CAUSAL, CHRONOLOGICAL, GALILEI, MODES, IntegerGrid, Region
from .io import region_from_json, region_to_json, region_to_pbm
from .laws import (covering_counterexample, distributivity_counterexample,
                   fig2_counterexample, lattice_property_suite,
                   modularity_counterexample, random_region)

__all__ = [
    "CAUSAL",
    "CHRONOLOGICAL",
    "GALILEI",
    "MODES",
    "IntegerGrid",
    "Region",
    "backend_name",
    "complement",
    "completion",
    "is_complete",
    "meet",
    "join",
    "diamond",
    "de_morgan_check",
    "orthomodularity_check",
    "galilei_chron_complement",
    "region_to_json",
    "region_from_json",
    "region_to_pbm",
    "fig2_counterexample",
    "covering_counterexample",
    "modularity_counterexample",
    "distributivity_counterexample",
    "lattice_property_suite",
    "random_region",
]
