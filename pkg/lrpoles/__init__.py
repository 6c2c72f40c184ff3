"""LR-tableaux, poles and partial maps, checked against nilpotent operators
over small prime fields. Public names resolve lazily on first access, so
`import lrpoles` stays cheap and galois loads only with the engine."""
from importlib import import_module

try:
    from dotenv import load_dotenv
except ImportError:
    pass
else:
    load_dotenv()

# Settings: a value here beats LRPOLES_PRIME / LRPOLES_WORKERS.
prime: int | None = None
workers: int | None = None

_PUBLIC = {
    "_combinatorics": """
        Partition SkewShape conjugate dominance_leq multiset_union is_horizontal_strip
        is_vertical_strip is_rook_strip parse_partition
        Tableau Violation LRViolation ShapeMismatch validate_lr validate_grid tableau_union
        enumerate_lr Column column_tableau column_decompositions is_union_of_columns
        sums_of_cyclics_exist
        HeightSequence PoleData CyclicType gaps pole_data pole_columns tableau_of_cyclic
        cyclic_of_tableau extended_pole_split count_endo_submodules
        enumerate_single_entry_tableaux
        PartialMap PoleDecomposition enumerate_partial_maps jumps satisfies_ebp
        canonical_invariant equivalent decomposition_of pole_decompositions
        pair_from_decomposition
    """,
    "_engine": """
        ModuleSpace EmbeddingInstance partition_of_operator tableau_of_embedding
        height_sequence_of endo_submodule endo_orbit count_endo_orbits realize_pole
        realize_decomposition direct_sum
        InvalidContext CertificateFailure BoxMoveContext ExtendedPoles Certificate
        build_extended_poles build_q build_q_mu verify_monomorphisms certify_move
    """,
    "_poset": """
        BoxMove box_move_witnesses is_increasing_box_move box_move_successors
        dominance_leq_tableaux box_move_context EdgeKind Edge TableauPoset
        build_boundary_poset emit_hasse_dot
    """,
    "logs": "log",
}

_HOME = {name: module for module, names in _PUBLIC.items() for name in names.split()}

__all__ = list(_HOME)


def __getattr__(name):
    module = _HOME.get(name)
    if module is None:
        raise AttributeError(f"module 'lrpoles' has no attribute {name!r}")
    value = globals()[name] = getattr(import_module(f".{module}", __name__), name)
    return value


def __dir__():
    return sorted({*globals(), *__all__})
