"""Run every structural check on a range of levels and tabulate the results."""

from dataclasses import dataclass

from .errors import TooLarge
from .map_builder import build_map, dart_action, farey_graph, underlying_graph
from .metrics import (
    bfs_distances,
    classify_distance_prime,
    diameter,
    distance2_criterion,
    distance_balls,
    graph,
    pair_distance,
    poles,
    star_decomposition,
)
from .modular_arith import euler_phi, fibonacci_semiperiod, is_prime, statistics, vertex_count
from .petrie import petrie_darts
from .projective_line import FareyFraction
from .psl2 import DEFAULT_CAP, triangle_generators, verify_triangle_relations

__all__ = ["CheckResult", "verify_level", "verify", "format_report"]

# all-pairs checks beyond this many vertices are skipped
ALL_PAIRS_LIMIT = 4000


@dataclass(frozen=True)
class CheckResult:
    n: int
    name: str
    status: str  # "PASS", "FAIL" or "SKIP"
    detail: str = ""

    @property
    def passed(self):
        return self.status != "FAIL"


def _counts(n, m):
    built = m.statistics()
    formula = statistics(n)
    ok = built == formula
    return ok, f"built {built.as_tuple()} formula {formula.as_tuple()}"


def _valency(n, m):
    sizes = {len(c) for c in m.vertex_orbits()}
    return sizes == {n}, f"vertex orbit sizes {sorted(sizes)}"


def _graph_agrees(n, m):
    g1 = underlying_graph(m)
    g2 = farey_graph(n)
    ok = g1.vertices == g2.vertices and g1.neighbors == g2.neighbors
    ok = ok and g2.num_edges == m.num_darts // 2 and g2.num_vertices == vertex_count(n)
    return ok, f"{g2.num_vertices} vertices, {g2.num_edges} edges"


def _regular(n, m):
    # generators act as map automorphisms, and the orbit of one dart is everything
    gens = triangle_generators(n)
    for t in gens:
        for i in range(m.num_darts):
            ti = dart_action(m, t, i)
            if dart_action(m, t, m.sigma[i]) != m.sigma[ti] or dart_action(m, t, m.alpha[i]) != m.alpha[ti]:
                return False, f"{t} does not commute with the map at dart {m.darts[i]}"
    start = m.dart_between(FareyFraction(1, 0, n), FareyFraction(0, 1, n))
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for i in frontier:
            for t in gens:
                j = dart_action(m, t, i)
                if j not in seen:
                    seen.add(j)
                    nxt.append(j)
        frontier = nxt
    ok = len(seen) == m.num_darts
    return ok, f"dart orbit {len(seen)} of {m.num_darts}"


def _petrie(n, m):
    sigma_n = fibonacci_semiperiod(n)
    inv = m.sigma_inverse()
    lengths = {len(petrie_darts(m, i, sigma_inv=inv)) for i in range(m.num_darts)}
    if lengths == {sigma_n}:
        return True, f"Petrie length {sigma_n} from all {m.num_darts} darts"
    return False, f"Petrie lengths {sorted(lengths)}, semiperiod {sigma_n}"


def _poles(n, m):
    ps = poles(n)
    expected = 1 if n == 2 else euler_phi(n) // 2
    if len(ps) != expected:
        return False, f"{len(ps)} poles, expected {expected}"
    if len(ps) == 1:
        return True, f"1 pole ({ps.poles[0]})"
    if n >= 5:
        bad = [(u, v) for i, u in enumerate(ps.poles) for v in ps.poles[i + 1:] if pair_distance(n, u, v) != 3]
        if bad:
            return False, f"poles not at distance 3: {', '.join(f'{u}-{v}' for u, v in bad[:3])}"
    return True, f"{len(ps)} poles, pairwise distance 3"


def _diameter(n, m):
    got = diameter(n)
    claimed = {2: 1, 3: 1, 4: 2}.get(n, 3)
    return got == claimed, f"diameter {got}, claimed {claimed}"


def _trichotomy(n, m):
    g = graph(n)
    layers = distance_balls(n)
    for i, u in enumerate(g.vertices):
        for j, v in enumerate(g.vertices):
            exact = next(r for r, layer in enumerate(layers) if layer[i] >> j & 1)
            if classify_distance_prime(n, u, v) != exact:
                return False, f"{u}, {v}: classified {classify_distance_prime(n, u, v)!r}, distance {exact}"
    return True, f"all {g.num_vertices ** 2} pairs agree"


def _decomposition(n, m):
    stars = star_decomposition(n)
    return True, f"{len(stars)} stars of {n + 1} vertices"


def _distance2(n, m):
    g = graph(n)
    infinity = FareyFraction(1, 0, n)
    dist = bfs_distances(g, g.index[infinity])
    checked = 0
    for i, v in enumerate(g.vertices):
        if v == infinity or v.c in (1 % n, (-1) % n):
            continue
        checked += 1
        if distance2_criterion(n, v.a, v.c) != (dist[i] == 2):
            return False, f"criterion disagrees with BFS at {v} (distance {dist[i]})"
    return True, f"{checked} vertices agree with BFS"


def _triangle(n, m):
    return verify_triangle_relations(n), "X^2 = Y^3 = Z^n = XYZ = 1, <X, Z> = G"


def verify_level(n, cap=DEFAULT_CAP):
    """All checks for one level; returns a list of :class:`CheckResult`."""
    try:
        m = build_map(n, cap)
    except TooLarge as exc:
        return [CheckResult(n, "build", "SKIP", str(exc))]
    checks = [
        ("counts", _counts),
        ("valency", _valency),
        ("graph", _graph_agrees),
        ("triangle group", _triangle),
        ("regularity", _regular),
        ("petrie", _petrie),
    ]
    small = vertex_count(n) <= ALL_PAIRS_LIMIT
    if small:
        checks += [("poles", _poles), ("diameter", _diameter), ("distance2", _distance2)]
        if is_prime(n) and n >= 5:
            checks.append(("trichotomy", _trichotomy))
    if is_prime(n) and n > 2:
        checks.append(("decomposition", _decomposition))

    results = []
    for name, fn in checks:
        try:
            ok, detail = fn(n, m)
        except Exception as exc:  # a crash in a check is a failed check
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(n, name, "PASS" if ok else "FAIL", detail))
    if not small:
        results.append(CheckResult(n, "distances", "SKIP", f"more than {ALL_PAIRS_LIMIT} vertices"))
    return results


def verify(levels, cap=DEFAULT_CAP):
    out = []
    for n in levels:
        out.extend(verify_level(n, cap))
    return out


def format_report(results):
    width = max((len(r.name) for r in results), default=4)
    lines = []
    for r in results:
        lines.append(f"n={r.n:<4} {r.name:<{width}}  {r.status}  {r.detail}")
    failed = sum(r.status == "FAIL" for r in results)
    lines.append(f"{len(results)} checks, {failed} failed")
    return "\n".join(lines)
