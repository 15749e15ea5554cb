import pytest
from hypothesis import given

from conftest import space_and_set, spaces_up_to
from topsep.core import FinSpace, closure, discrete, indiscrete, sierpinski
from topsep.errors import NotAClosureOperator
from topsep.operators import (
    BUILTIN,
    C,
    LAMBDA,
    QUASI,
    THETA,
    apply,
    check_closure_axioms,
    custom,
    delta_closure,
    derived_topology,
    is_delta_closed,
    is_lambda_closed,
    kernel,
    lambda_sets,
    lambda_sets_shortcut,
    operator,
    regular_opens,
    semi_regularization,
    theta_closure,
    theta_interior,
)

THETA3 = FinSpace(3, [0, 0b001, 0b010, 0b011, 0b111])


def test_sierpinski_regular_opens():
    s = sierpinski()
    assert regular_opens(s) == (0, 0b11)
    assert semi_regularization(s) == indiscrete(2)
    assert delta_closure(s, 0b01) == 0b11


def test_lambda_closure_on_sierpinski():
    s = sierpinski()
    # {0} is closed, {1} is open, so every subset is lambda-closed
    assert all(is_lambda_closed(s, a) for a in s.subsets())
    assert apply(s, LAMBDA, 0b10) == 0b10
    assert kernel(s, 0b01) == 0b11


def test_quasi_closure_collapses_without_clopens():
    s = sierpinski()
    assert apply(s, QUASI, 0b10) == 0b11
    assert derived_topology(s, "zero") == derived_topology(s, "quasi") == (0, 0b11)


def test_discrete_operators_are_identity():
    d = discrete(3)
    for op in BUILTIN:
        assert all(apply(d, op, a) == a for a in d.subsets()), op


def test_theta_cluster_closure_is_not_idempotent():
    a = 0b001
    once = theta_closure(THETA3, a)
    assert once == 0b101
    assert theta_closure(THETA3, once) == 0b111
    # the theta-closed hull is idempotent and contains the cluster closure
    hull = apply(THETA3, THETA, a)
    assert hull == 0b111 and apply(THETA3, THETA, hull) == hull


def test_theta_interior_duality():
    for s in spaces_up_to(3):
        for a in s.subsets():
            assert theta_interior(s, a) == s.full ^ theta_closure(s, s.full ^ a)


def test_operator_lookup():
    assert operator("closure") is C
    with pytest.raises(ValueError):
        operator("nope")


def test_custom_operator_checked_before_use():
    s = sierpinski()
    shrink = custom("shrink", lambda a: a & 0b01)
    with pytest.raises(NotAClosureOperator) as exc:
        apply(s, shrink, 0b11)
    assert exc.value.report.axiom == "extensive"

    grow = custom("grow", lambda a: (a << 1 | a) & 0b11 if a else 0)
    rep = check_closure_axioms(s, grow)
    assert rep.ok  # grows {0} to {0,1}, stable after that

    good = custom("closure-copy", lambda a: closure(s, a))
    assert apply(s, good, 0b10) == 0b11


def test_custom_nonempty_image_of_empty():
    s = sierpinski()
    rep = check_closure_axioms(s, custom("const", lambda a: s.full))
    assert not rep.ok and rep.axiom == "empty"
    assert "empty" in rep.describe()


def test_closure_axioms_all_builtins_small():
    for s in spaces_up_to(3):
        for op in BUILTIN:
            assert check_closure_axioms(s, op).ok, (s, op)


def test_lambda_sets_are_the_opens():
    for s in spaces_up_to(4):
        assert lambda_sets(s) == lambda_sets_shortcut(s)


@given(space_and_set())
def test_operator_chain(sa):
    s, a = sa
    c, d, t = closure(s, a), delta_closure(s, a), theta_closure(s, a)
    assert c & ~d == 0 and d & ~t == 0
    assert is_delta_closed(s, t)


@given(space_and_set(max_n=4))
def test_derived_topologies_nested(sa):
    s, _ = sa
    tau = set(s.opens)
    assert set(derived_topology(s, "theta")) <= set(derived_topology(s, "delta")) <= tau
    assert set(derived_topology(s, "quasi")) <= set(derived_topology(s, "urysohn")) <= tau
