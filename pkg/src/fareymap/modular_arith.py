"""Exact integer arithmetic for Farey maps mod n.

Everything here works on Python integers; there is no floating point.
The product over primes ``prod(1 - 1/p^2)`` is carried as a numerator and
denominator pair and only divided out at the end.
"""

from dataclasses import dataclass

from .errors import ArithmeticInconsistency, InvalidLevel

__all__ = [
    "MapStatistics",
    "check_level",
    "egcd",
    "inverse_mod",
    "prime_factors",
    "euler_phi",
    "is_prime",
    "mu",
    "vertex_count",
    "genus",
    "statistics",
    "fibonacci_semiperiod",
    "fibonacci_period",
]


def check_level(n):
    """Validate a congruence level and return it as an int."""
    if isinstance(n, bool) or not isinstance(n, int):
        raise InvalidLevel(f"level must be an integer, got {n!r}")
    if n < 2:
        raise InvalidLevel(f"level must be >= 2, got {n}")
    return n


def egcd(a, b):
    """Return ``(g, u, v)`` with ``u*a + v*b == g == gcd(a, b)``."""
    r0, r1 = a, b
    s0, s1 = 1, 0
    t0, t1 = 0, 1
    while r1 != 0:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0 < 0:
        r0, s0, t0 = -r0, -s0, -t0
    return r0, s0, t0


def inverse_mod(a, n):
    """Inverse of ``a`` modulo ``n``; raises ValueError if ``gcd(a, n) != 1``."""
    g, u, _ = egcd(a % n, n)
    if g != 1:
        raise ValueError(f"{a} is not invertible modulo {n}")
    return u % n


def prime_factors(n):
    """Distinct prime divisors of ``n`` in increasing order (trial division)."""
    if n < 1:
        raise ValueError("n must be positive")
    primes = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            primes.append(p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        primes.append(n)
    return primes


def is_prime(n):
    return n >= 2 and prime_factors(n) == [n]


def euler_phi(n):
    if n < 1:
        raise ValueError("n must be positive")
    result = n
    for p in prime_factors(n):
        result = result // p * (p - 1)
    return result


def _prime_product(n):
    # prod_{p | n} (1 - 1/p^2) as (numerator, denominator)
    num, den = 1, 1
    for p in prime_factors(n):
        num *= p * p - 1
        den *= p * p
    return num, den


def _exact_div(num, den, what):
    q, r = divmod(num, den)
    if r:
        raise ArithmeticInconsistency(f"{what}: {num}/{den} is not an integer")
    return q


def mu(n):
    """Index of Gamma(n) in the modular group, i.e. ``|PSL(2, Z_n)|``.

    This is also the number of darts of the quotient map. Level 2 is special
    cased to 6; the general formula would give 3 there.
    """
    n = check_level(n)
    if n == 2:
        return 6
    num, den = _prime_product(n)
    return _exact_div(n ** 3 * num, 2 * den, f"mu({n})")


def vertex_count(n):
    """Number of Farey fractions mod n (3 for n == 2)."""
    n = check_level(n)
    if n == 2:
        return 3
    num, den = _prime_product(n)
    return _exact_div(n ** 2 * num, 2 * den, f"vertex_count({n})")


def genus(n):
    """Genus of the quotient map.

    For ``n > 2`` this is ``1 + n^2 (n - 6)/24 * prod(1 - 1/p^2)``. At ``n == 2``
    that expression is 1/2, so the genus is taken from the Euler identity on
    the special-cased counts (3 vertices, 3 edges, 2 faces) instead.
    """
    n = check_level(n)
    if n == 2:
        chi = vertex_count(2) - mu(2) // 2 + mu(2) // 3
        return _exact_div(2 - chi, 2, "genus(2)")
    num, den = _prime_product(n)
    g = 1 + _exact_div(n * n * (n - 6) * num, 24 * den, f"genus({n})")
    if g < 0:
        raise ArithmeticInconsistency(f"genus({n}) = {g} is negative")
    return g


@dataclass(frozen=True)
class MapStatistics:
    darts: int
    edges: int
    faces: int
    vertices: int
    valency: int
    genus: int

    @property
    def euler_characteristic(self):
        return self.vertices - self.edges + self.faces

    def as_tuple(self):
        return (self.darts, self.edges, self.faces, self.vertices, self.valency, self.genus)

    def as_dict(self):
        return {
            "darts": self.darts,
            "edges": self.edges,
            "faces": self.faces,
            "vertices": self.vertices,
            "valency": self.valency,
            "genus": self.genus,
        }


def statistics(n):
    """Formula-side counts for the quotient map at level ``n``."""
    n = check_level(n)
    darts = mu(n)
    stats = MapStatistics(
        darts=darts,
        edges=_exact_div(darts, 2, "edges"),
        faces=_exact_div(darts, 3, "faces"),
        vertices=vertex_count(n),
        valency=n,
        genus=genus(n),
    )
    if stats.euler_characteristic != 2 - 2 * stats.genus:
        raise ArithmeticInconsistency(f"Euler identity fails at level {n}: {stats}")
    return stats


def _fibonacci_pairs(n):
    # (f_k, f_{k+1}) mod n for k = 1, 2, ... with f_0 = 1, f_1 = 0
    x, y = 0, 1 % n
    limit = 6 * n * n
    for k in range(1, limit + 1):
        yield k, x, y
        x, y = y, (x + y) % n
    raise ArithmeticInconsistency(f"Fibonacci pair sequence mod {n} did not recur within {limit} steps")


def fibonacci_semiperiod(n):
    """Period of the Fibonacci sequence mod n up to a global sign.

    Uses the seeds ``f_0 = 1, f_1 = 0`` (so ``f_k`` is the usual ``F_{k-1}``) and
    returns the least ``k >= 1`` with ``(f_k, f_{k+1}) == +-(1, 0) (mod n)``.
    """
    n = check_level(n)
    for k, x, y in _fibonacci_pairs(n):
        if y == 0 and x in (1 % n, (-1) % n):
            return k


def fibonacci_period(n):
    """Full period of the pair sequence mod n (no sign identification)."""
    n = check_level(n)
    for k, x, y in _fibonacci_pairs(n):
        if y == 0 and x == 1 % n:
            return k
