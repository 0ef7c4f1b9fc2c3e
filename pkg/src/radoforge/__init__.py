"""rado-forge: exact workbench for generalized Schur sum equations.

Computes forcing thresholds for equations x_1+...+x_a = y_1+...+y_b over
integer colorings, verifies and constructs avoidance colorings, evaluates
every closed-form bound exactly, and carries the supporting machinery:
residue obstructions, charge covers, zero-sum sequence structure, covering
systems of arithmetic progressions, and DIMACS CNF export.
"""

from .apcover import (
    APFamily,
    CoveringContradiction,
    coloring_to_apfamily,
    covers_all_integers,
    covers_interval,
    cve_instance_check,
    cve_random_harness,
)
from .bounds import (
    balanced_bound_holds,
    balanced_cap,
    balanced_reduction,
    bound_report,
    efloor_factorial,
    forced_m_statement,
    forced_m_threshold,
    iroot,
    kosciuszko_bound,
    kosciuszko_holds,
    odd_cycle_ramsey_cap,
    repeated_schur_cap,
    schur_bounds,
)
from .cnf import CnfProblem, decode_model, dpll, export_cnf, minimal_supports
from .eqcore import (
    Coloring,
    EquationSpec,
    ResidueObstruction,
    ResourceLimitError,
    SolutionWitness,
    any_m,
    balanced,
    bezout_witness,
    check_coloring,
    find_solution,
    format_spec,
    general,
    has_solution,
    min_m,
    pad_solution,
    parse_spec,
    residue_obstruction,
    sums_with_count,
)
from .localcolor import (
    ChargeCover,
    ChargeCoverError,
    LocalEdgeColoring,
    charge_cover,
    chromatic_number,
    difference_coloring,
    local_chromatic_hypothesis,
    neighborhood,
    neighborhood_within,
    total_weight,
    vertex_count_conclusion,
    vertex_count_predicate,
    vertex_weight,
)
from .search import (
    SearchResult,
    any_m_number,
    extremal_coloring,
    nu2_coloring,
    rado_number,
)
from .zerosum import (
    BalancedIdentity,
    NotPrimitiveError,
    balanced_identity_from_witness,
    is_minimal_zero_sum,
    lambert_reorder,
    quantitative_bound_check,
)

__version__ = "0.1.0"
