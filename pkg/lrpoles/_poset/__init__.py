from .moves import (BoxMove, box_move_witnesses, is_increasing_box_move, box_move_successors,
                    dominance_leq_tableaux, box_move_context)
from .main import EdgeKind, Edge, TableauPoset, build_boundary_poset, emit_hasse_dot
