import pytest

from imocheck import a2
from imocheck.errors import PreconditionFailedError
from imocheck.rational import Rational, ZERO

# hand-computed prefix: each term solves the defining relation in turn
EXPECTED = [Rational(-1), Rational(1, 2), Rational(1, 12), Rational(1, 24),
            Rational(19, 720), Rational(3, 160), Rational(863, 60480)]


def test_initial():
    seq = a2.A2Sequence.initial()
    assert seq.values == (Rational(-1),)
    assert seq.last_index == 0


def test_extend_matches_hand_values():
    seq = a2.A2Sequence.initial()
    for n, expected in enumerate(EXPECTED[1:], start=1):
        seq = a2.extend(seq)
        assert seq.values[n] == expected, f"a_{n}"


def test_base_case_is_one_half():
    assert a2.build(1).values[1] == Rational(1, 2)


def test_closed_form_examples():
    assert a2.closed_form_next(a2.build(1)) == Rational(1, 12)
    assert a2.closed_form_next(a2.build(2)) == Rational(1, 24)
    assert a2.closed_form_next(a2.build(3)) == Rational(19, 720)


def test_closed_form_needs_two_terms():
    with pytest.raises(PreconditionFailedError):
        a2.closed_form_next(a2.A2Sequence.initial())


def test_closed_form_equals_recurrence():
    seq = a2.build(60)
    for n in range(1, 60):
        prefix = a2.A2Sequence(seq.values[:n + 1])
        assert a2.closed_form_next(prefix) == seq.values[n + 1], f"n={n}"


def test_residual_is_exactly_zero():
    seq = a2.build(40)
    for m in range(1, 41):
        assert a2.recurrence_residual(seq, m) == ZERO


def test_positivity():
    seq = a2.build(100)
    assert all(v > ZERO for v in seq.values[1:])


def test_verify_passes():
    rep = a2.verify(50)
    assert rep.outcome
    assert rep.params == {"n_max": 50}


def test_verify_rejects_zero():
    with pytest.raises(PreconditionFailedError):
        a2.verify(0)


def test_render_lines():
    lines = a2.render_lines(a2.build(3))
    assert lines[0] == "0\t-1/1"
    assert lines[1] == "1\t1/2"
    assert lines[-1] == "3\t1/24"
