"""Exact chromatic quasisymmetric functions of directed graphs."""

from .algebra import (
    TPoly,
    compositions_of,
    eulerian_poly,
    is_palindromic,
    is_unimodal,
    partitions_of,
    rearrangements_of,
    t_bracket,
    t_factorial,
    z_lambda,
)
from .chromatic import (
    ascent_count,
    brute_force_x,
    delta_table,
    descent_count,
    n_lambda_member,
    omega_x_via_f_theorem,
    p_expansion_theorem,
    perm_stats,
    phi_a,
    relabel_invariance_check,
    t_chromatic,
    t_chromatic_via_delta,
    x_via_f_theorem,
)
from .digraph import (
    AcyclicOrientation,
    Digraph,
    UndirectedGraph,
    acyclic_orientations,
    asc_relative,
    connected_components,
    contains_forbidden,
    induced,
    relabel,
    sink_count,
    underlying,
)
from .errors import BoundExceededError, NotSymmetricError
from .families import (
    ArcFamily,
    CircularIntervalSet,
    ao_sink_sum,
    arcs_from_intervals,
    complete_acyclic,
    complete_double,
    cycle_ao_refinement,
    cycle_e_expansion,
    cycle_p_coefficient,
    directed_cycle,
    directed_path,
    from_arcs,
    from_circular_intervals,
    g_c,
    gc_closed_form,
    normalize_intervals,
    path_ao_refinement,
    path_e_expansion,
)
from .qsym import (
    QSymElement,
    f_to_m,
    is_symmetric,
    m_to_f,
    omega_f,
    qsym_multiply,
    rho,
    specialize_ones,
    to_monomial_symmetric,
)
from .sym import (
    SymElement,
    build_transitions,
    convert,
    is_b_positive,
    is_e_unimodal,
    is_palindromic_sym,
    omega_sym,
)

__version__ = "0.1.0"
