"""The projective line over Z_d: points as free cyclic submodules, counting, incidence."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Any

from . import symplectic
from .ring import Modulus, component, is_unit
from .symplectic import Vector2


def is_admissible(v: Vector2, m: Modulus) -> bool:
    """True iff v = (b, c) is unimodular over Z_d, i.e. gcd(b, c, d) = 1.

    Equivalent formulations: some u, w solve u*b + w*c = 1; v is the first row
    of an invertible 2x2 matrix; v extends to a basis of Z_d^2.  For square-free
    d this is also equivalent to v having a non-zero component pair at every
    prime, i.e. index_set_K(v, m) being empty.
    """
    return math.gcd(v[0], v[1], m.d) == 1


def cyclic_submodule(v: Vector2, m: Modulus) -> frozenset[Vector2]:
    """The orbit Z_d * v = {(u*b, u*c) : u in Z_d}.

    Its size divides d, with size exactly d iff scaling is injective iff v is
    admissible.
    """
    d = m.d
    return frozenset(((u * v[0]) % d, (u * v[1]) % d) for u in range(d))


@dataclass(frozen=True, eq=False)
class Point:
    """A free cyclic submodule of Z_d^2 (a point of the line).

    ``generator`` is canonical: the lexicographically smallest admissible
    member.  Equality and hashing go through the member set, because two
    admissible vectors generate the same point exactly when they differ by a
    unit factor.
    """

    generator: Vector2
    members: frozenset[Vector2]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Point):
            return NotImplemented
        return self.members == other.members

    def __hash__(self) -> int:
        return hash(self.members)

    def label(self, d: int) -> str:
        return f"Z{d}({self.generator[0]},{self.generator[1]})"

    def sorted_members(self) -> list[Vector2]:
        return sorted(self.members)

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "generator": list(self.generator),
            "members": [list(w) for w in self.sorted_members()],
        }


def point_through(v: Vector2, m: Modulus) -> Point:
    """The point generated by an admissible vector, with canonical generator."""
    d = m.d
    v = (v[0] % d, v[1] % d)
    if not is_admissible(v, m):
        raise ValueError(f"{v} is not admissible mod {d}: gcd = {math.gcd(v[0], v[1], d)}")
    members = cyclic_submodule(v, m)
    gen = min(w for w in members if is_admissible(w, m))
    return Point(generator=gen, members=members)


@lru_cache(maxsize=None)
def _points_cached(m: Modulus) -> tuple[Point, ...]:
    # Lexicographic scan: the first uncovered admissible vector of each orbit is
    # its lex-smallest admissible member, hence already canonical.
    d = m.d
    covered: set[Vector2] = set()
    points: list[Point] = []
    for b in range(d):
        for c in range(d):
            v = (b, c)
            if v in covered or not is_admissible(v, m):
                continue
            members = cyclic_submodule(v, m)
            points.append(Point(generator=v, members=members))
            covered.update(w for w in members if is_admissible(w, m))
    return tuple(points)


def enumerate_points(m: Modulus) -> list[Point]:
    """All points of the line over Z_d, ordered by canonical generator.

    Works for any d > 1; the closed-form count (the product of p_k + 1 over the
    prime factors) is a square-free statement and asserted only there.
    """
    return list(_points_cached(m))


def line_size_formula(m: Modulus) -> int:
    """Predicted number of points for square-free d: the product of (p_k + 1)."""
    if not m.square_free:
        raise ValueError(f"line size formula requires square-free d, got d={m.d}")
    n = 1
    for p in m.primes:
        n *= p + 1
    return n


def index_set_K(v: Vector2, m: Modulus) -> frozenset[int]:
    """The 1-based indices k whose prime kills v: b = c = 0 mod p_k.

    Empty exactly when v is admissible.  Every counting formula for square-free
    d is controlled by this set.
    """
    if not m.square_free:
        raise ValueError(f"index set K requires square-free d, got d={m.d}")
    return frozenset(
        k
        for k in range(1, m.r + 1)
        if component(v[0], k, m) == 0 and component(v[1], k, m) == 0
    )


def point_count_formula(v: Vector2, m: Modulus) -> int:
    """Predicted number of points containing v: product of (p_k + 1) over K."""
    n = 1
    for k in index_set_K(v, m):
        n *= m.factors[k - 1][0] + 1
    return n


def perp_size_formula(v: Vector2, m: Modulus) -> int:
    """Predicted perp-set size: d times the product of the primes in K."""
    n = m.d
    for k in index_set_K(v, m):
        n *= m.factors[k - 1][0]
    return n


def points_containing(v: Vector2, m: Modulus) -> list[Point]:
    """All points whose member set contains v (square-free d only)."""
    if not m.square_free:
        raise ValueError(f"points_containing requires square-free d, got d={m.d}")
    v = (v[0] % m.d, v[1] % m.d)
    return [p for p in _points_cached(m) if v in p.members]


def perp_as_point_union(v: Vector2, m: Modulus) -> frozenset[Vector2]:
    """The union of the member sets of every point through v.

    For square-free d this equals the perp-set of v exactly; the library's
    verification harness checks that equality exhaustively.
    """
    if not m.square_free:
        raise ValueError(f"perp_as_point_union requires square-free d, got d={m.d}")
    return frozenset().union(*(p.members for p in points_containing(v, m)))


def is_distant(p: Point, q: Point, m: Modulus) -> bool:
    """True iff the two generators form a basis of Z_d^2 (unit determinant).

    Distant points share only the zero vector; any other pair of distinct
    points shares a non-zero vector and is called neighbouring.
    """
    return is_unit(symplectic.form(p.generator, q.generator, m), m)


@dataclass(frozen=True)
class NeighbourGraph:
    """Simple undirected graph on the points; edges join distinct neighbouring points."""

    d: int
    vertices: tuple[Point, ...]
    edges: tuple[tuple[int, int], ...]

    def degree_sequence(self) -> list[int]:
        deg = [0] * len(self.vertices)
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "vertices": [list(p.generator) for p in self.vertices],
            "edges": [list(e) for e in self.edges],
        }

    def to_dot(self) -> str:
        lines = [f"graph line_d{self.d} {{"]
        for i, p in enumerate(self.vertices):
            lines.append(f'  v{i} [label="{p.label(self.d)}"];')
        for i, j in self.edges:
            lines.append(f"  v{i} -- v{j};")
        lines.append("}")
        return "\n".join(lines)


def neighbour_graph(m: Modulus) -> NeighbourGraph:
    """Build the neighbour graph of the line; over a field it is edgeless."""
    pts = _points_cached(m)
    edges = tuple(
        (i, j)
        for i in range(len(pts))
        for j in range(i + 1, len(pts))
        if not is_distant(pts[i], pts[j], m)
    )
    return NeighbourGraph(d=m.d, vertices=pts, edges=edges)
