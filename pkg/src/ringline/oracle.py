"""Exhaustive verification harness.

Every counting claim and group-structure claim the library relies on is
restated here as a brute-force check over the full state space for a given d.
Checks are never sampled; a failure always carries a serialized witness, and a
check that does not apply is reported as skipped, never silently passed.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Any, Callable, Iterable

from . import pauli, projline, symplectic
from .pauli import PauliOp
from .ring import Modulus

PASS = "pass"
FAIL = "fail"
SKIP = "skip"

CHECK_NAMES = ("group", "theorem1", "theorem2", "witness_construction")

Counterexample = dict[str, Any]


@dataclass(frozen=True)
class CheckResult:
    """One named check: pass, fail with counterexample, or skip with the reason in scope."""

    name: str
    scope: str
    status: str
    counterexample: Counterexample | None
    elapsed: float

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_json_dict(self, include_elapsed: bool = True) -> dict[str, Any]:
        out: dict[str, Any] = {
            "name": self.name,
            "scope": self.scope,
            "status": self.status,
            "passed": self.passed,
            "counterexample": self.counterexample,
        }
        if include_elapsed:
            out["elapsed"] = self.elapsed
        return out


@dataclass(frozen=True)
class VerificationReport:
    """All checks for one modulus; all_passed tolerates skips but not failures."""

    d: int
    checks: tuple[CheckResult, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    def to_json_dict(self, include_elapsed: bool = True) -> dict[str, Any]:
        return {
            "d": self.d,
            "checks": [c.to_json_dict(include_elapsed) for c in self.checks],
            "all_passed": self.all_passed,
        }


def _timed(name: str, scope: str, body: Callable[[], Counterexample | None]) -> CheckResult:
    start = time.perf_counter()
    counterexample = body()
    elapsed = time.perf_counter() - start
    status = PASS if counterexample is None else FAIL
    return CheckResult(name, scope, status, counterexample, elapsed)


def _skipped(name: str, reason: str) -> CheckResult:
    return CheckResult(name, reason, SKIP, None, 0.0)


def _vectors(d: int) -> list[tuple[int, int]]:
    return [(b, c) for b in range(d) for c in range(d)]


def verify_theorem1(m: Modulus) -> CheckResult:
    """Every point through a vector lies inside its perp-set; for admissible
    vectors the perp-set equals the (unique) point itself.  Any d."""
    d = m.d

    def body() -> Counterexample | None:
        pts = projline.enumerate_points(m)
        for v in _vectors(d):
            perp = symplectic.perp_set(v, m).members
            containing = [p for p in pts if v in p.members]
            for p in containing:
                if not p.members <= perp:
                    return {
                        "claim": "point through vector not inside its perp-set",
                        "vector": list(v),
                        "point": p.to_json_dict(),
                        "stray": [list(w) for w in sorted(p.members - perp)],
                    }
            if projline.is_admissible(v, m):
                orbit = projline.cyclic_submodule(v, m)
                if perp != orbit:
                    return {
                        "claim": "perp-set of admissible vector differs from its orbit",
                        "vector": list(v),
                        "perp_size": len(perp),
                        "orbit_size": len(orbit),
                    }
                for p in containing:
                    if p.members != orbit:
                        return {
                            "claim": "point through admissible vector differs from its orbit",
                            "vector": list(v),
                            "point": p.to_json_dict(),
                        }
        return None

    return _timed("theorem1", f"all {d * d} vectors of Z_{d}^2", body)


def verify_theorem2(m: Modulus) -> CheckResult:
    """The three square-free counting claims, for every vector: number of
    containing points, union of those points = perp-set, perp-set size."""
    if not m.square_free:
        raise ValueError(f"theorem2 check requires square-free d, got d={m.d}")
    d = m.d

    def body() -> Counterexample | None:
        pts = projline.enumerate_points(m)
        for v in _vectors(d):
            containing = [p for p in pts if v in p.members]
            expected_points = projline.point_count_formula(v, m)
            if len(containing) != expected_points:
                return {
                    "claim": "point count through vector differs from formula",
                    "vector": list(v),
                    "expected": expected_points,
                    "actual": len(containing),
                }
            union = frozenset().union(*(p.members for p in containing))
            perp = symplectic.perp_set(v, m).members
            if union != perp:
                return {
                    "claim": "union of containing points differs from perp-set",
                    "vector": list(v),
                    "union_size": len(union),
                    "perp_size": len(perp),
                    "union_minus_perp": [list(w) for w in sorted(union - perp)],
                    "perp_minus_union": [list(w) for w in sorted(perp - union)],
                }
            expected_size = projline.perp_size_formula(v, m)
            if len(perp) != expected_size:
                return {
                    "claim": "perp-set size differs from formula",
                    "vector": list(v),
                    "expected": expected_size,
                    "actual": len(perp),
                }
        return None

    return _timed("theorem2", f"all {d * d} vectors of Z_{d}^2", body)


def _crt_combine(residues: Iterable[int], m: Modulus) -> int:
    """Assemble an element of Z_d from residues mod each prime factor."""
    assert m.idempotents is not None
    return sum(res * e for res, e in zip(residues, m.idempotents)) % m.d


def construct_witness(
    v: tuple[int, int], w: tuple[int, int], m: Modulus
) -> tuple[tuple[int, int], int, int]:
    """The component-wise recipe producing a point through both v and w in v-perp.

    Returns (generator, u, s): off the vanishing-index set K the generator
    copies v's components and u is 1; on K it copies w's components when they
    are non-zero (else the all-ones pair) and u is 0, so u * generator = v.
    The scalar s with s * generator = w comes from solving over each residue
    field: off K the 2x2 determinant with rows w, v vanishes and v's component
    is non-zero, so w's component is a field multiple of v's.
    """
    if not m.square_free:
        raise ValueError(f"witness construction requires square-free d, got d={m.d}")
    b, c = v
    x, y = w
    K = projline.index_set_K(v, m)
    gen_b, gen_c, u_res, s_res = [], [], [], []
    for k, p in enumerate(m.primes, start=1):
        bk, ck, xk, yk = b % p, c % p, x % p, y % p
        if k not in K:
            gen_b.append(bk)
            gen_c.append(ck)
            u_res.append(1)
            if bk:
                s_res.append(xk * pow(bk, -1, p) % p)
            else:
                s_res.append(yk * pow(ck, -1, p) % p)
        else:
            u_res.append(0)
            if (xk, yk) != (0, 0):
                gen_b.append(xk)
                gen_c.append(yk)
                s_res.append(1)
            else:
                gen_b.append(1)
                gen_c.append(1)
                s_res.append(0)
    generator = (_crt_combine(gen_b, m), _crt_combine(gen_c, m))
    return generator, _crt_combine(u_res, m), _crt_combine(s_res, m)


def verify_witness_construction(m: Modulus) -> CheckResult:
    """For every v and every w in v-perp, the recipe yields an admissible
    generator whose point provably contains both (via the returned scalars)."""
    if not m.square_free:
        raise ValueError(f"witness construction check requires square-free d, got d={m.d}")
    d = m.d

    def body() -> Counterexample | None:
        for v in _vectors(d):
            for w in sorted(symplectic.perp_set(v, m).members):
                gen, u, s = construct_witness(v, w, m)
                failure = None
                if not projline.is_admissible(gen, m):
                    failure = "constructed generator is not admissible"
                elif ((u * gen[0]) % d, (u * gen[1]) % d) != v:
                    failure = "scalar u does not map generator to v"
                elif ((s * gen[0]) % d, (s * gen[1]) % d) != w:
                    failure = "scalar s does not map generator to w"
                if failure:
                    return {
                        "claim": failure,
                        "vector": list(v),
                        "perp_member": list(w),
                        "generator": list(gen),
                        "u": u,
                        "s": s,
                    }
        return None

    return _timed(
        "witness_construction", f"all (v, w) pairs with w in v-perp, d={d}", body
    )


def verify_group(m: Modulus) -> CheckResult:
    """Group-structure checks in one entry: closure order d^3, brute-force
    centre, commutator set = centre, and (square-free only) exhaustive
    commutant sizes against the counting formula."""
    d = m.d
    if d > pauli.CLOSURE_LIMIT:
        raise ValueError(
            f"group check is bounded to d <= {pauli.CLOSURE_LIMIT} "
            f"(closure materializes d^3 matrices), got d={d}"
        )
    if m.square_free:
        scope = f"closure order, centre, commutator set, commutant counts, d={d}"
    else:
        scope = (
            f"closure order, centre, commutator set, d={d} "
            "(commutant-count sub-check skipped: requires square-free d)"
        )

    def body() -> Counterexample | None:
        order = pauli.group_closure_order(m)
        if order != d**3:
            return {"claim": "closure of {X, Z} has wrong order", "expected": d**3, "actual": order}

        classes = _vectors(d)
        central = [
            vc
            for vc in classes
            if all(symplectic.form(vc, other, m) == 0 for other in classes)
        ]
        brute_centre = {
            PauliOp(a, b, c) for a in range(d) for (b, c) in central
        }
        if brute_centre != pauli.centre(m):
            return {
                "claim": "brute-force centre differs from the scalars",
                "brute": sorted(list(op) for op in brute_centre),
            }

        # Commutator set via the defining four-fold product.  Scalars commute
        # and cancel against their inverses, so class representatives with
        # omega-exponent 0 cover every operator pair.
        comms = set()
        for b, c in classes:
            w = PauliOp(0, b, c)
            winv = pauli.inverse(w, m)
            for b2, c2 in classes:
                w2 = PauliOp(0, b2, c2)
                prod = pauli.multiply(
                    pauli.multiply(pauli.multiply(w, w2, m), winv, m),
                    pauli.inverse(w2, m),
                    m,
                )
                comms.add(prod)
        if comms != pauli.centre(m):
            return {
                "claim": "commutator set differs from the centre",
                "commutators": sorted(list(op) for op in comms),
            }

        if m.square_free:
            perp_count = {
                vc: sum(1 for other in classes if symplectic.form(vc, other, m) == 0)
                for vc in classes
            }
            for b, c in classes:
                # commutation ignores omega-exponents, so one row per class
                # settles all d operators (a, b, c) at once
                brute = d * perp_count[(b, c)]
                expected = pauli.commuting_count(PauliOp(0, b, c), m)
                if brute != expected:
                    return {
                        "claim": "exhaustive commutant size differs from formula",
                        "vector": [b, c],
                        "expected": expected,
                        "actual": brute,
                    }
        return None

    return _timed("group", scope, body)


def verify_all(m: Modulus, checks: Iterable[str] | None = None) -> VerificationReport:
    """Run every applicable check (or the named subset), skipping inapplicable
    ones with an explicit reason, and assemble a deterministic report."""
    if checks is None:
        names = set(CHECK_NAMES)
    else:
        names = set(checks)
        unknown = names - set(CHECK_NAMES)
        if unknown:
            raise ValueError(
                f"unknown check names: {sorted(unknown)}; valid names: {list(CHECK_NAMES)}"
            )
    results = []
    if "theorem1" in names:
        results.append(verify_theorem1(m))
    if "theorem2" in names:
        if m.square_free:
            results.append(verify_theorem2(m))
        else:
            results.append(_skipped("theorem2", "skipped: requires square-free d"))
    if "witness_construction" in names:
        if m.square_free:
            results.append(verify_witness_construction(m))
        else:
            results.append(_skipped("witness_construction", "skipped: requires square-free d"))
    if "group" in names:
        if m.d <= pauli.CLOSURE_LIMIT:
            results.append(verify_group(m))
        else:
            results.append(
                _skipped("group", f"skipped: group closure is bounded to d <= {pauli.CLOSURE_LIMIT}")
            )
    results.sort(key=lambda c: c.name)
    return VerificationReport(d=m.d, checks=tuple(results))
