import importlib

import pytest
from hypothesis import given

from conftest import finite_spaces, spaces_up_to
from topsep.classify import (
    AXIOMS,
    check_axiom,
    classify,
    classify_all,
    is_compact,
    singletons_open_or_closed,
    t_kappa_xi,
)
from topsep.core import FinSpace, closure, discrete, indiscrete, sierpinski, subspace
from topsep.operators import BUILTIN, C, LAMBDA, delta_closure, regular_opens, semi_regularization, theta_closure

cl = importlib.import_module("topsep.classify")

THREE = FinSpace(3, [0, 0b001, 0b010, 0b011, 0b111])


def test_sierpinski_vector():
    v = classify_all(sierpinski())
    assert v["T0"] and not v["T1"]
    assert v["TD"] and v["T_half"]
    assert not v["hausdorff"]


def test_indiscrete_vector():
    v = classify_all(indiscrete(2))
    assert not v["T0"]
    assert v["semi_regular"] and v["regular"]
    assert not v["hausdorff"]


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_discrete_satisfies_everything(n):
    assert all(classify_all(discrete(n)).values())
    for xi in BUILTIN:
        assert t_kappa_xi(discrete(n), "all", xi)


def test_three_point_examples():
    assert closure(THREE, 0b001) == 0b101
    assert regular_opens(THREE) == (0, 0b001, 0b010, 0b111)
    assert semi_regularization(THREE) == THREE
    assert delta_closure(THREE, 0b001) == 0b101
    assert theta_closure(THREE, 0b001) == 0b101
    assert set(subspace(THREE, 0b101).opens) == {0, 0b01, 0b11}


def test_compactness_is_trivial_on_finite_spaces():
    d = discrete(4)
    assert is_compact(d, 0) and is_compact(d, d.full)
    assert all(is_compact(THREE, a) for a in THREE.subsets())


def test_unknown_axiom():
    with pytest.raises(ValueError):
        check_axiom("T7")
    with pytest.raises(ValueError):
        classify(sierpinski(), "T7")


def test_kappa_bound():
    s = sierpinski()
    assert t_kappa_xi(s, 1, LAMBDA)
    assert not t_kappa_xi(s, 1, C)  # {1} is compact and not closed
    assert t_kappa_xi(s, 0, C)


def test_t1_iff_t0_and_r0():
    for s in spaces_up_to(4):
        v = classify_all(s)
        assert v["T1"] == (v["T0"] and v["R0"]) == (v["T0"] and v["weak_R0"])


def test_t_half_by_singletons():
    for s in spaces_up_to(4):
        assert classify(s, "T_half") == singletons_open_or_closed(s)


def test_memo_revalidation(monkeypatch):
    s = THREE
    cl.clear_memo()
    first = classify_all(s)
    monkeypatch.setattr(cl, "REVALIDATE", True)
    assert classify_all(s) == first
    # a poisoned memo entry is caught when revalidating
    with cl._memo_lock:
        cl._memo[(s, "T0")] = not first["T0"]
    with pytest.raises(AssertionError):
        classify(s, "T0")
    cl.clear_memo()


@given(finite_spaces(max_n=4))
def test_finite_collapses(s):
    v = classify_all(s)
    # finite spaces are anti-compact and C'
    assert v["anti_compact"] and v["C_prime"]
    assert v["T1"] == v["kc"] == v["kd"] == v["weakly_hausdorff"] == v["hTR1"]
    assert v["hausdorff"] == v["T1"] == v["US"]
    # every subset is finite and compact, and finite T0 spaces are TD
    assert v["T_quarter"] == v["T_third"] == v["T_half"]
    assert v["T0"] == v["TD"]
    assert not v["T_quarter"] or v["T0"]


def test_axiom_list_is_complete():
    assert len(AXIOMS) == 21
