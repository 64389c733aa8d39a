"""Small hand-built right quasigroups used throughout the tests and demos.

Each is given in 1-based cycle notation and stored 0-based.
"""

from __future__ import annotations

from .algebra import RightQuasigroup
from .perm import Perm


def _rq(n: int, *rows) -> RightQuasigroup:
    return RightQuasigroup.from_perms([Perm.from_cycles(n, *cycles, one_based=True) for cycles in rows])


def non_rack_3() -> RightQuasigroup:
    """``R_1 = id, R_2 = (2 3), R_3 = (1 3)``: right quasigroup, not a rack."""
    return _rq(3, (), [(2, 3)], [(1, 3)])


def kei_3() -> RightQuasigroup:
    """``R_1 = (2 3), R_2 = (1 3), R_3 = (1 2)``: the dihedral kei of order 3."""
    return _rq(3, [(2, 3)], [(1, 3)], [(1, 2)])


def twisted_3() -> RightQuasigroup:
    """``R_1 = (1 2), R_2 = (1 3), R_3 = (2 3)``: same full Cayley digraph as :func:`kei_3`, not a rack."""
    return _rq(3, [(1, 2)], [(1, 3)], [(2, 3)])


def cyclic_rack_3() -> RightQuasigroup:
    """Permutation rack with ``sigma = (1 2 3)``."""
    return _rq(3, *([[(1, 2, 3)]] * 3))


def square_4() -> RightQuasigroup:
    """``R_1 = id, R_2 = (1 2 3 4), R_3 = (1 3)(2 4), R_4 = (2 4)``: marks its full Cayley digraph, not a rack."""
    return _rq(4, (), [(1, 2, 3, 4)], [(1, 3), (2, 4)], [(2, 4)])


def quandle_5() -> RightQuasigroup:
    """``R_1 = (3 4 5), R_2 = (3 5 4), R_3 = (1 2)(4 5), R_4 = (1 2)(3 5), R_5 = (1 2)(3 4)``."""
    return _rq(5, [(3, 4, 5)], [(3, 5, 4)], [(1, 2), (4, 5)], [(1, 2), (3, 5)], [(1, 2), (3, 4)])


ALL = {
    "non_rack_3": non_rack_3,
    "kei_3": kei_3,
    "twisted_3": twisted_3,
    "cyclic_rack_3": cyclic_rack_3,
    "square_4": square_4,
    "quandle_5": quandle_5,
}
