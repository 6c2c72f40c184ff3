"""Prime fields and the handful of exact linear-algebra moves the engine
needs. Subspaces are matrices whose rows span them."""
import os
import threading
from functools import lru_cache

import galois
import numpy as np

DEFAULT_PRIME = 5


def _get_prime(p=None) -> int:
    import lrpoles
    return int(p or lrpoles.prime or os.getenv("LRPOLES_PRIME") or DEFAULT_PRIME)


# galois compiles its ufuncs and linalg kernels lazily, per field and per
# kernel; first use from several threads at once returns wrong ranks.
_lock = threading.RLock()


@lru_cache(maxsize=None)
def _compiled(p: int) -> type[galois.FieldArray]:
    GF = galois.GF(p)
    A = GF([[1, 1, 0], [0, 1, 1]])
    B = (A + A) * A - A
    np.linalg.matrix_rank(B @ B.T)
    A.row_reduce()
    return GF


def field(p: int) -> type[galois.FieldArray]:
    with _lock:
        return _compiled(p)


def _ints(x) -> np.ndarray:
    return x.view(np.ndarray) if isinstance(x, galois.FieldArray) else np.asarray(x, dtype=np.int64)


def matrix(GF, rows, dim: int) -> galois.FieldArray:
    """Stack vectors and row blocks into one matrix over GF."""
    if dim == 0:
        return GF.Zeros((0, 0))
    blocks = [_ints(r).reshape(-1, dim) for r in rows]
    data = np.vstack(blocks) if blocks else np.zeros((0, dim), dtype=np.int64)
    return GF(data % GF.order)


def rank(M) -> int:
    if M.size == 0:
        return 0
    with _lock:
        return int(np.linalg.matrix_rank(M))


def row_basis(M) -> galois.FieldArray:
    """Reduced row echelon basis; equal subspaces give equal matrices."""
    if M.size == 0:
        return M[:0]
    with _lock:
        R = M.row_reduce()
    return R[np.any(_ints(R) != 0, axis=1)]


def key(M) -> tuple:
    """Hashable form of a subspace."""
    return tuple(map(tuple, _ints(row_basis(M)).tolist()))
