"""Petrie (zig-zag) polygons of the quotient maps.

The k-th vertex along the zig-zag starting at the dart ``1/0 -> 0/1`` is
``f_{k-1}/f_k`` with ``f_0 = 1, f_1 = 0, f_{k+1} = f_k + f_{k-1}``. Note the
offset from the usual Fibonacci numbering: here ``f_k`` is ``F_{k-1}``.
"""

from dataclasses import dataclass

from .modular_arith import check_level, fibonacci_semiperiod
from .projective_line import FareyFraction, make_fraction
from .map_builder import build_map
from .psl2 import DEFAULT_CAP

__all__ = [
    "PetriePath",
    "FIRST_TURN",
    "petrie_path_from",
    "petrie_darts",
    "fibonacci_vertex",
    "petrie_length",
]

# -1: the first turn is sigma^-1. Chosen so that the path from 1/0 -> 0/1 runs
# through 1/1, 1/2, 2/3, ... (the Fibonacci fractions) rather than their mirror.
FIRST_TURN = -1


@dataclass(frozen=True)
class PetriePath:
    vertices: tuple
    darts: tuple
    closed: bool
    length: int

    def __str__(self):
        return ", ".join(str(v) for v in self.vertices)


def _turn(m, sigma_inv, i, direction):
    j = m.alpha[i]
    return m.sigma[j] if direction > 0 else sigma_inv[j]


def petrie_darts(m, start, first_turn=FIRST_TURN, sigma_inv=None):
    """Dart indices of the Petrie polygon through dart ``start``.

    Turns alternate between ``sigma`` and ``sigma^-1`` after reversing the
    current dart. The walk stops once it is back on ``start`` and the next
    step would repeat the first one; at valency 2 both turns coincide so the
    parity is irrelevant there.
    """
    if sigma_inv is None:
        sigma_inv = m.sigma_inverse()
    first_next = _turn(m, sigma_inv, start, first_turn)
    path = [start]
    i, direction = start, first_turn
    while True:
        i = _turn(m, sigma_inv, i, direction)
        direction = -direction
        if i == start and _turn(m, sigma_inv, i, direction) == first_next:
            return path
        path.append(i)


def petrie_path_from(m, start, first_turn=FIRST_TURN):
    """Closed Petrie polygon starting with ``start`` (a dart index or ``(u, v)`` pair)."""
    if not isinstance(start, int):
        start = m.dart_between(*start)
    darts = petrie_darts(m, start, first_turn)
    vertices = [m.darts[i].source for i in darts]
    vertices.append(m.darts[darts[-1]].target)
    return PetriePath(vertices=tuple(vertices), darts=tuple(darts), closed=True, length=len(darts))


def fibonacci_vertex(k, n):
    """``f_{k-1}/f_k`` mod ``n`` for ``k >= 1`` (``k = 1`` gives ``1/0``)."""
    n = check_level(n)
    if k < 1:
        raise ValueError("k must be >= 1")
    prev, cur = 1, 0  # f_0, f_1
    for _ in range(k - 1):
        prev, cur = cur, (prev + cur) % n
    return make_fraction(prev, cur, n)


def petrie_length(n, check_map=True, cap=DEFAULT_CAP):
    """Petrie length at level ``n`` (the Fibonacci semiperiod).

    With ``check_map`` the explicit map is built when under ``cap`` and the
    polygon through ``1/0 -> 0/1`` is walked to confirm the value.
    """
    n = check_level(n)
    sigma_n = fibonacci_semiperiod(n)
    if check_map:
        from .modular_arith import mu

        if cap is None or mu(n) <= cap:
            m = build_map(n, cap)
            walked = petrie_path_from(m, (FareyFraction(1, 0, n), FareyFraction(0, 1, n))).length
            if walked != sigma_n:
                raise AssertionError(f"Petrie walk at level {n} has length {walked}, semiperiod is {sigma_n}")
    return sigma_n
