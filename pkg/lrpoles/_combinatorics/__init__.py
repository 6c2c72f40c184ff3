from .partition import (Partition, SkewShape, conjugate, dominance_leq, multiset_union,
                        multiset_difference, is_horizontal_strip, is_vertical_strip,
                        is_rook_strip, partitions, partitions_up_to, sub_partitions,
                        parse_partition)
from .tableau import (Tableau, Violation, LRViolation, ShapeMismatch, validate_lr,
                      validate_grid, tableau_union, enumerate_lr)
from .columns import (Column, column_tableau, column_decompositions, is_union_of_columns,
                      sums_of_cyclics_exist, union_of)
from .poles import (HeightSequence, PoleData, CyclicType, gaps, pole_data, pole_columns,
                    tableau_of_cyclic, cyclic_of_tableau, extended_pole_split,
                    count_endo_submodules, enumerate_single_entry_tableaux)
from .partial_map import (PartialMap, PoleDecomposition, enumerate_partial_maps, jumps,
                          satisfies_ebp, canonical_invariant, equivalent, decomposition_of,
                          pole_decompositions, pair_from_decomposition)
