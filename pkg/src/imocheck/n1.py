"""IMO 2017 shortlist N1 sequence dynamics, checked at desk scale.

The step rule: a_{n+1} = sqrt(a_n) when a_n is a perfect square, else
a_n + 3.  For a_0 > 1 the question is for which starting values some value
recurs infinitely often; the answer is exactly the multiples of 3, which
fall into the 3, 6, 9 cycle.  The unbounded statement is restated here as a
bounded-budget contract: a repeated value within the budget certifies a
cycle, a reached residue-2 value plus a confirmed strictly increasing tail
certifies divergence within the examined window.

Everything is integer arithmetic; square roots are exact integer floors.
Orbit values are checked against a fixed 64-bit ceiling so overflow is loud,
never silent.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import backend
from .errors import OrbitOverflowError, PreconditionFailedError, TheoremViolationError
from .report import ClaimReport, failed, passed

ORBIT_CEILING = backend.ORBIT_CEILING


def isqrt(x: int) -> int:
    """Floor integer square root; bracketing isqrt(x)^2 <= x < (isqrt(x)+1)^2."""
    if x < 0:
        raise PreconditionFailedError("isqrt needs a natural number")
    return backend.isqrt(x)


def is_perfect_square(x: int) -> bool:
    if x < 0:
        return False
    s = backend.isqrt(x)
    return s * s == x


def sqrt_exact(x: int) -> int:
    """The s with s*s = x; defined only on perfect squares."""
    s = isqrt(x)
    if s * s != x:
        raise PreconditionFailedError(f"{x} is not a perfect square")
    return s


def n1_step(x: int) -> int:
    """One step: isqrt(x) if x is a perfect square, else x + 3 (checked)."""
    if x < 1:
        raise PreconditionFailedError("step needs x >= 1")
    s = backend.isqrt(x)
    if s * s == x:
        return s
    if x + 3 > ORBIT_CEILING:
        raise OrbitOverflowError(f"orbit value {x} + 3 exceeds ceiling")
    return x + 3


def orbit(a0: int, k: int) -> list[int]:
    """The prefix [a_0, ..., a_k]."""
    if a0 <= 1:
        raise PreconditionFailedError("orbit needs a0 > 1")
    if k < 0:
        raise PreconditionFailedError("orbit needs k >= 0")
    return backend.orbit_fill(a0, k)


def detect_cycle(a0: int, budget: int) -> tuple[int, int] | None:
    """First repeated value among a_0..a_budget.

    Returns (first index of the repeated value, distance between its two
    occurrences), or None when all budget+1 terms are distinct.  Two equal
    values n1 < n2 certify eventual periodicity with period n2 - n1.
    """
    if a0 <= 1:
        raise PreconditionFailedError("detect_cycle needs a0 > 1")
    if budget < 1:
        raise PreconditionFailedError("detect_cycle needs budget >= 1")
    seen = {a0: 0}
    v = a0
    for j in range(1, budget + 1):
        v = n1_step(v)
        if v in seen:
            return seen[v], j - seen[v]
        seen[v] = j
    return None


class OrbitClass(Enum):
    PERIODIC_MULT3 = "PeriodicMult3"
    DIVERGENT_MOD2 = "DivergentMod2"
    DIVERGENT_VIA_MOD1 = "DivergentViaMod1"
    BUDGET_EXCEEDED = "BudgetExceeded"


@dataclass(frozen=True)
class OrbitTrace:
    """Classification of one orbit with its certificate.

    ``values`` is the examined prefix up to the decision point (the closing
    repeat, or the first residue-2 value); the strictly increasing tail that
    confirms divergence is not materialized.  ``cycle`` is (entry index,
    period) for periodic orbits; ``mod2_index`` is the first m with
    a_m = 2 (mod 3) for divergent ones.
    """

    a0: int
    values: tuple[int, ...]
    classification: OrbitClass
    cycle: tuple[int, int] | None = None
    mod2_index: int | None = None
    steps_used: int = 0

    def cycle_values(self) -> frozenset[int]:
        if self.cycle is None:
            raise PreconditionFailedError("no cycle certificate on this trace")
        start, period = self.cycle
        return frozenset(self.values[start:start + period])


def classify(a0: int, budget: int) -> OrbitTrace:
    """Classify the orbit of a0 within a step budget.

    PeriodicMult3 when a value repeats among a_0..a_budget (cycle
    certificate); DivergentMod2 / DivergentViaMod1 when a residue-2 value is
    reached at index m and all remaining budget - m steps are confirmed +3
    steps (strict increase; squares are never congruent to 2 mod 3);
    BudgetExceeded otherwise.  At sufficient budget the outcome is
    PeriodicMult3 exactly when a0 is a multiple of 3.
    """
    if a0 <= 1:
        raise PreconditionFailedError("classify needs a0 > 1")
    if budget < 1:
        raise PreconditionFailedError("classify needs budget >= 1")
    values = [a0]
    mod2_at = 0 if a0 % 3 == 2 else None
    if mod2_at is None:
        seen = {a0: 0}
        v = a0
        for j in range(1, budget + 1):
            v = n1_step(v)
            values.append(v)
            if v in seen:
                start = seen[v]
                return OrbitTrace(a0, tuple(values), OrbitClass.PERIODIC_MULT3,
                                  cycle=(start, j - start), steps_used=j)
            seen[v] = j
            if v % 3 == 2:
                mod2_at = j
                break
    if mod2_at is None:
        return OrbitTrace(a0, tuple(values), OrbitClass.BUDGET_EXCEEDED,
                          steps_used=budget)
    square_at = backend.confirm_plus3_run(values[mod2_at], budget - mod2_at)
    if square_at >= 0:
        raise TheoremViolationError(
            f"square {values[mod2_at] + 3 * square_at} found in a residue-2 run from "
            f"{values[mod2_at]}")
    kind = OrbitClass.DIVERGENT_MOD2 if a0 % 3 == 2 else OrbitClass.DIVERGENT_VIA_MOD1
    return OrbitTrace(a0, tuple(values), kind, mod2_index=mod2_at, steps_used=budget)


def check_claim1(a0: int, n: int, window: int) -> ClaimReport:
    """From a residue-2 term on, every step is +3: no squares, residue kept.

    Precondition: a_n = 2 (mod 3).  Passes iff for all n <= m <= n + window
    the term is not a perfect square, keeps residue 2, and a_{m+1} = a_m + 3.
    """
    vals = orbit(a0, n + window + 1)
    if vals[n] % 3 != 2:
        raise PreconditionFailedError(f"a_{n} = {vals[n]} is not 2 mod 3")
    params = {"a0": a0, "n": n, "window": window}
    for m in range(n, n + window + 1):
        bad = (is_perfect_square(vals[m]) or vals[m] % 3 != 2
               or vals[m + 1] != vals[m] + 3)
        if bad:
            return failed("n1.claim1", params, (m, vals[m], vals[m + 1]), m - n)
    return passed("n1.claim1", params, steps=window + 1)


def check_claim2(x: int) -> ClaimReport:
    """Descent certificate: from x (residue not 2, x > 9) a smaller value appears.

    With t the largest integer whose square is below x, the first perfect
    square reached is one of (t+1)^2, (t+2)^2, (t+3)^2, so the next value is
    at most t + 3 < t^2 < x.  The search is capped at 2*isqrt(x) + 6 steps,
    which the certificate itself justifies; the report records t, the square
    and the step count, and fails loudly if any part of the chain breaks.
    """
    if x % 3 == 2 or x <= 9:
        raise PreconditionFailedError("claim 2 needs x mod 3 != 2 and x > 9")
    t = isqrt(x - 1)
    bound = 2 * isqrt(x) + 6
    params = {"x": x, "t": t, "bound": bound}
    if t < 3:
        return failed("n1.claim2", params, ("t<3", t))
    v = x
    steps = 0
    while not is_perfect_square(v):
        v += 3
        steps += 1
        if steps > bound:
            return failed("n1.claim2", params, ("no square within bound", v), steps)
    if v not in ((t + 1) ** 2, (t + 2) ** 2, (t + 3) ** 2):
        return failed("n1.claim2", params, ("unexpected first square", v), steps)
    after = sqrt_exact(v)
    if not (after <= t + 3 < t * t < x):
        return failed("n1.claim2", params, ("descent chain broken", after), steps)
    # one more step lands on `after`, the smaller value
    if steps + 1 > bound:
        return failed("n1.claim2", params, ("descent slower than bound", steps + 1), steps)
    return passed("n1.claim2", {**params, "square": v, "m": steps + 1}, steps=steps + 1)


def _scan_orbit_for(a0: int, n: int, budget: int, claim_id: str,
                    params: dict, hit) -> ClaimReport:
    vals = orbit(a0, n + budget)
    for m in range(n + 1, n + budget + 1):
        if hit(vals[m]):
            return passed(claim_id, {**params, "m": m}, steps=m - n)
    return failed(claim_id, params, tuple(vals[-6:]), budget)


def check_claim3(a0: int, n: int, budget: int) -> ClaimReport:
    """A multiple of 3 leads to the value 3: some m > n has a_m = 3."""
    vals = orbit(a0, n)
    if vals[n] % 3 != 0:
        raise PreconditionFailedError(f"a_{n} = {vals[n]} is not 0 mod 3")
    return _scan_orbit_for(a0, n, budget, "n1.claim3",
                           {"a0": a0, "n": n}, lambda v: v == 3)


def check_claim3a(a0: int, n: int, budget: int) -> ClaimReport:
    """Claim 3 restricted to small terms: a_n in {3, 6, 9}."""
    vals = orbit(a0, n)
    if vals[n] % 3 != 0 or vals[n] > 9:
        raise PreconditionFailedError(f"a_{n} = {vals[n]} is not a small multiple of 3")
    return _scan_orbit_for(a0, n, budget, "n1.claim3a",
                           {"a0": a0, "n": n}, lambda v: v == 3)


def check_claim4(a0: int, n: int, budget: int) -> ClaimReport:
    """A residue-1 term leads to a residue-2 term: some m > n has a_m = 2 (mod 3)."""
    vals = orbit(a0, n)
    if vals[n] % 3 != 1:
        raise PreconditionFailedError(f"a_{n} = {vals[n]} is not 1 mod 3")
    return _scan_orbit_for(a0, n, budget, "n1.claim4",
                           {"a0": a0, "n": n}, lambda v: v % 3 == 2)


def check_claim4a(a0: int, n: int, budget: int) -> ClaimReport:
    """Claim 4 restricted to small terms: a_n in {4, 7}."""
    vals = orbit(a0, n)
    if vals[n] % 3 != 1 or vals[n] > 9:
        raise PreconditionFailedError(f"a_{n} = {vals[n]} is not a small residue-1 value")
    return _scan_orbit_for(a0, n, budget, "n1.claim4a",
                           {"a0": a0, "n": n}, lambda v: v % 3 == 2)


def lemma_square_mod3_ne2(scan_limit: int = 10 ** 4) -> ClaimReport:
    """No square is 2 mod 3: exhaustive on residues, scanned to the limit."""
    params = {"scan_limit": scan_limit}
    for r in (0, 1, 2):
        if (r * r) % 3 == 2:
            return failed("n1.square_mod3_ne2", params, ("residue", r))
    for s in range(scan_limit + 1):
        if (s * s) % 3 == 2:
            return failed("n1.square_mod3_ne2", params, (s,))
    return passed("n1.square_mod3_ne2", params, steps=scan_limit + 4)


def lemma_three_squares_mod3(scan_limit: int = 10 ** 4) -> ClaimReport:
    """{(t+1)^2, (t+2)^2, (t+3)^2} mod 3 is exactly {0, 1} for every t."""
    params = {"scan_limit": scan_limit}

    def resset(t: int) -> set[int]:
        return {((t + 1) ** 2) % 3, ((t + 2) ** 2) % 3, ((t + 3) ** 2) % 3}

    for r in (0, 1, 2):
        if resset(r) != {0, 1}:
            return failed("n1.three_squares_mod3", params, ("residue", r))
    for t in range(scan_limit + 1):
        if resset(t) != {0, 1}:
            return failed("n1.three_squares_mod3", params, (t,))
    return passed("n1.three_squares_mod3", params, steps=scan_limit + 4)


def lemma_square_mod3_zero(scan_limit: int = 10 ** 4) -> ClaimReport:
    """x^2 = 0 (mod 3) exactly when x = 0 (mod 3)."""
    params = {"scan_limit": scan_limit}
    for r in (0, 1, 2):
        if ((r * r) % 3 == 0) != (r % 3 == 0):
            return failed("n1.square_mod3_zero", params, ("residue", r))
    for x in range(scan_limit + 1):
        if ((x * x) % 3 == 0) != (x % 3 == 0):
            return failed("n1.square_mod3_zero", params, (x,))
    return passed("n1.square_mod3_zero", params, steps=scan_limit + 4)


def lemma_mult3_propagates(a0: int, budget: int) -> ClaimReport:
    """A multiple of 3 is always followed by another multiple of 3."""
    if a0 % 3 != 0:
        raise PreconditionFailedError("needs a0 = 0 mod 3")
    vals = orbit(a0, budget)
    params = {"a0": a0, "budget": budget}
    for i, v in enumerate(vals):
        if v % 3 != 0:
            return failed("n1.mult3_propagates", params, (i, v), i)
    return passed("n1.mult3_propagates", params, steps=budget)


def lemma_nonmult3_propagates(a0: int, budget: int) -> ClaimReport:
    """A non-multiple of 3 never becomes one."""
    if a0 % 3 == 0:
        raise PreconditionFailedError("needs a0 != 0 mod 3")
    vals = orbit(a0, budget)
    params = {"a0": a0, "budget": budget}
    for i, v in enumerate(vals):
        if v % 3 == 0:
            return failed("n1.nonmult3_propagates", params, (i, v), i)
    return passed("n1.nonmult3_propagates", params, steps=budget)


def lemma_all_gt1(a0: int, budget: int) -> ClaimReport:
    """Every orbit value stays above 1 when a0 > 1."""
    vals = orbit(a0, budget)
    params = {"a0": a0, "budget": budget}
    for i, v in enumerate(vals):
        if v <= 1:
            return failed("n1.all_gt1", params, (i, v), i)
    return passed("n1.all_gt1", params, steps=budget)
