"""The module Z_d^2 carrying the alternating bilinear form cb' - c'b, and perp-sets."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .ring import Modulus

Vector2 = tuple[int, int]


def form(v: Vector2, w: Vector2, m: Modulus) -> int:
    """The alternating form [(b,c), (b',c')] = c*b' - c'*b mod d.

    This value is the omega-exponent of the group commutator of X^b Z^c with
    X^b' Z^c', so two operators commute exactly when their vectors are
    orthogonal.  The sign convention is pinned: flipping it would leave every
    perp-set unchanged but negate commutator exponents.
    """
    return (v[1] * w[0] - w[1] * v[0]) % m.d


def is_perp(v: Vector2, w: Vector2, m: Modulus) -> bool:
    """True iff form(v, w) = 0; symmetric, since the form is skew."""
    return form(v, w, m) == 0


@dataclass(frozen=True)
class PerpSet:
    """All vectors orthogonal to ``base``; a submodule of Z_d^2 containing Z_d*base."""

    base: Vector2
    members: frozenset[Vector2]

    @property
    def size(self) -> int:
        return len(self.members)

    def sorted_members(self) -> list[Vector2]:
        return sorted(self.members)

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "base": list(self.base),
            "members": [list(w) for w in self.sorted_members()],
            "size": self.size,
        }


def perp_set(v: Vector2, m: Modulus) -> PerpSet:
    """The perp-set of v, by full enumeration of all d^2 vectors."""
    d = m.d
    base = (v[0] % d, v[1] % d)
    members = frozenset(
        (b, c) for b in range(d) for c in range(d) if form(base, (b, c), m) == 0
    )
    return PerpSet(base=base, members=members)
