"""Lower bounds, constructive extraction, and exact oracles for
k-independence in uniform hypergraphs.

A set S of vertices is k-independent when the subhypergraph induced on
S has maximum degree at most k; alpha_k is the largest such set's size.
This package evaluates every supported lower bound on alpha_k exactly,
constructs sets achieving them, and cross-checks everything against
exhaustive-search oracles on small instances.
"""

from kindep.bounds import (
    DIAGNOSTIC_BOUNDS,
    GAMMA,
    BoundReport,
    BoundValue,
    bound_avg_degree,
    bound_avg_degree_simple,
    bound_caro_tuza_alpha,
    bound_caro_tuza_k,
    bound_cps,
    bound_edge_count,
    bound_max_degree,
    bound_report,
    cps_per_vertex,
    eval_f,
    eval_g,
)
from kindep.exact import OracleResult, alpha_k_bruteforce, alpha_k_exact, chi_k_exact
from kindep.extract import (
    ExtractionDefect,
    ExtractionResult,
    Partition,
    TraceStep,
    band_peel,
    best_extract,
    greedy_peel,
    k_partition,
    partition_extract,
)
from kindep.generators import WordStream, gen_complete, gen_random_uniform
from kindep.hgio import HgParseError, load_hg, parse_hg, save_hg, write_hg
from kindep.hypergraph import (
    DegreeProfile,
    Hypergraph,
    HypergraphError,
    Violation,
)
from kindep.verify import (
    CHECK_ORDER,
    DEFAULT_CONFIG_TEXT,
    CheckResult,
    ConfigError,
    CorpusInstance,
    VerifyConfig,
    VerifyOutcome,
    build_exhaustive_corpus,
    build_random_corpus,
    corpus_instance,
    parse_verify_config,
    run_verify,
)

__all__ = [
    "BoundReport",
    "BoundValue",
    "CHECK_ORDER",
    "CheckResult",
    "ConfigError",
    "CorpusInstance",
    "DEFAULT_CONFIG_TEXT",
    "DIAGNOSTIC_BOUNDS",
    "DegreeProfile",
    "ExtractionDefect",
    "ExtractionResult",
    "GAMMA",
    "HgParseError",
    "Hypergraph",
    "HypergraphError",
    "OracleResult",
    "Partition",
    "TraceStep",
    "VerifyConfig",
    "VerifyOutcome",
    "Violation",
    "WordStream",
    "alpha_k_bruteforce",
    "alpha_k_exact",
    "band_peel",
    "best_extract",
    "bound_avg_degree",
    "bound_avg_degree_simple",
    "bound_caro_tuza_alpha",
    "bound_caro_tuza_k",
    "bound_cps",
    "bound_edge_count",
    "bound_max_degree",
    "bound_report",
    "build_exhaustive_corpus",
    "build_random_corpus",
    "chi_k_exact",
    "corpus_instance",
    "cps_per_vertex",
    "eval_f",
    "eval_g",
    "gen_complete",
    "gen_random_uniform",
    "greedy_peel",
    "k_partition",
    "load_hg",
    "parse_hg",
    "parse_verify_config",
    "partition_extract",
    "run_verify",
    "save_hg",
    "write_hg",
]

__version__ = "0.1.0"
