"""Polyomino ideals: lattice geometry, interval graphs, binomial algebra and classification."""
from .algebra import (
    Binomial,
    GroebnerBasis,
    Monomial,
    MonomialMap,
    TermOrder,
    ToricReport,
    buchberger,
    edge_ring_map,
    groebner,
    hole_toric_map,
    in_kernel,
    inner_2_minors,
    kernel_binomials_up_to_degree,
    normal_form,
    toric_equality_report,
)
from .classify import Verdict, classify, consistency_audit
from .enumerate import (
    SweepReport,
    conjecture_sweep,
    enumerate_fixed_polyominoes,
    enumerate_weakly_closed_paths,
    minimal_unconfigured_weakly_closed_path,
)
from .graph import (
    BipartiteIntervalGraph,
    GraphCycle,
    LatticeCycle,
    build_graph,
    cycle_to_primitive_cycle,
    enumerate_chordless_cycles,
    is_weakly_chordal,
    primitive_cycle_to_graph_cycle,
)
from .grid import CellCollection, EdgeInterval, LatticeInterval, Point, is_simple, is_weakly_connected
from .io import export_cas, load_fixture, parse_ascii, parse_json, render, render_ascii, render_svg
from .pathclass import (
    ConfigurationWitness,
    WeaklyClosedPathWitness,
    find_any_prime_configuration,
    find_L_configuration,
    find_ladder,
    find_weak_L_configuration,
    find_weak_ladder,
    marked_set_for_configuration,
    recognize_closed_path,
    recognize_weakly_closed_path,
    verify_configuration,
)
from .zigzag import SearchInconclusive, ZigZagWalk, find_zigzag_walk, verify_zigzag_walk

__version__ = "0.1.0"
