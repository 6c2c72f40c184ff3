from .field import DEFAULT_PRIME, field
from .main import (ModuleSpace, EmbeddingInstance, partition_of_operator, tableau_of_embedding,
                   height_sequence_of, endo_submodule, endo_orbit, count_endo_orbits,
                   realize_pole, realize_decomposition, direct_sum)
from .family import (InvalidContext, CertificateFailure, BoxMoveContext, ExtendedPoles,
                     Certificate, build_extended_poles, build_q, build_q_mu,
                     verify_monomorphisms, certify_move)
