"""The IMO 2006 shortlist A2 sequence, computed exactly.

The sequence is fixed by a_0 = -1 together with the relation
sum_{k=0..n} a_{n-k}/(k+1) = 0 for every n >= 1, which determines each new
term uniquely (the k = 0 coefficient is 1).  The checked theorem is that
a_n > 0 for all n >= 1.

Two independent routes produce each term: solving the defining relation
(``extend``) and the isolated closed form

    a_{n+1} = 1/(n+2) * sum_{k=1..n} k / ((n-k+1)(n-k+2)) * a_k

(``closed_form_next``).  Their exact agreement is itself one of the checks,
so the two deliberately share no summation logic beyond ``finite_sum``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionFailedError
from .rational import Rational, ZERO, finite_sum, render
from .report import ClaimReport, failed, passed


@dataclass(frozen=True)
class A2Sequence:
    """Immutable exact prefix a_0..a_n; index 0 always holds -1."""

    values: tuple[Rational, ...]

    @classmethod
    def initial(cls) -> "A2Sequence":
        return cls((Rational(-1),))

    @property
    def last_index(self) -> int:
        return len(self.values) - 1


def extend(seq: A2Sequence) -> A2Sequence:
    """Append a_{n+1}, the unique value making the defining relation hold.

    From sum_{k=0..n+1} a_{n+1-k}/(k+1) = 0:
    a_{n+1} = -sum_{k=1..n+1} a_{n+1-k}/(k+1).
    """
    n = seq.last_index
    a = seq.values
    tail = finite_sum(lambda k: a[n + 1 - k] / (k + 1), 1, n + 2)
    return A2Sequence(a + (-tail,))


def closed_form_next(seq: A2Sequence) -> Rational:
    """Value of a_{n+1} by the closed form; the a_0 coefficient has vanished."""
    n = seq.last_index
    if n < 1:
        raise PreconditionFailedError("closed form needs the prefix up to a_1 at least")
    a = seq.values
    s = finite_sum(lambda k: Rational(k, (n - k + 1) * (n - k + 2)) * a[k], 1, n + 1)
    return s / (n + 2)


def recurrence_residual(seq: A2Sequence, m: int) -> Rational:
    """sum_{k=0..m} a_{m-k}/(k+1); exactly zero whenever the relation holds at m."""
    a = seq.values
    return finite_sum(lambda k: a[m - k] / (k + 1), 0, m + 1)


def build(n: int) -> A2Sequence:
    """The prefix a_0..a_n via the recurrence."""
    seq = A2Sequence.initial()
    for _ in range(n):
        seq = extend(seq)
    return seq


def render_lines(seq: A2Sequence) -> list[str]:
    """CLI text form, one "index<TAB>num/den" line per term."""
    return [f"{i}\t{render(v)}" for i, v in enumerate(seq.values)]


def verify(n_max: int) -> ClaimReport:
    """Machine-check a_1..a_{n_max}: positivity, exact residuals, closed form.

    Passes iff for every 1 <= m <= n_max the term is positive, the relation
    residual at m is exactly 0/1, and (for m >= 2) the closed form applied to
    the shorter prefix reproduces the recurrence value.  On failure the
    report carries the first offending index and the values involved.
    """
    if n_max < 1:
        raise PreconditionFailedError("n_max must be at least 1")
    params = {"n_max": n_max}
    seq = A2Sequence.initial()
    for m in range(1, n_max + 1):
        prev = seq
        seq = extend(seq)
        value = seq.values[m]
        if not value > ZERO:
            return failed("a2.verify", params, (m, "positivity", render(value)), m)
        residual = recurrence_residual(seq, m)
        if residual != ZERO:
            return failed("a2.verify", params, (m, "residual", render(residual)), m)
        if m >= 2:
            cf = closed_form_next(prev)
            if cf != value:
                return failed("a2.verify", params,
                              (m, "closed_form", render(cf), render(value)), m)
    return passed("a2.verify", params, steps=n_max)
