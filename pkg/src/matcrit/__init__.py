"""Exact matroid covering numbers and density-criticality checks."""

from .constructions import (
    NamedMatroid,
    catalog,
    catalog_names,
    direct_sum,
    fano,
    fano_minus,
    graphic,
    lookup,
    m18,
    mk4,
    mk5_minus_e,
    mstar_k33,
    o7,
    p7,
    p_chain,
    parallel_connection,
    rank3_geometry,
    uniform,
    wheel,
    whirl,
)
from .covering import (
    Cover,
    ViolatingSet,
    covering_number,
    covering_number_oracle,
    flats,
    is_coverable,
    max_subset_density,
)
from .criticality import (
    CriticalityReport,
    MinorSearchResult,
    check_contract_inequality,
    criticality_report,
    is_density_critical,
    is_strictly_t_critical,
    is_t_critical,
    max_proper_minor_density,
)
from .fileformat import MatroidFile, ParseError, SemanticError, parse, serialize
from .iso import IsoCertificate, IsoMemo, canonical_form, certificate, is_isomorphic
from .matroid import (
    Matroid,
    MatroidError,
    SizeLimitError,
    from_bases,
    relax_circuit_hyperplane,
    to_mask,
)
from .verify import (
    Report,
    verify_lemma_1_4,
    verify_lemma_2_2,
    verify_prop_1_2,
    verify_theorem_1_3,
    verify_theorem_1_6,
)

__version__ = "0.1.0"
