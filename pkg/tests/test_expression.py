import pytest

from partialhopf.crossed_product import SmashElement
from partialhopf.errors import DefinitionSyntaxError, MissingParameter, UndeclaredLabel, UndeclaredParameter
from partialhopf.expression import EvalTypeError, evaluate_expression, specialize_value


def ev(P, text):
    return str(evaluate_expression(P, text))


def test_act_and_omega(hss_action, hs_action):
    assert ev(hss_action, "act(nu, e3)") == "k2*e2 + k1*e3"
    assert ev(hs_action, "omega(gnu, nu)") == "l4*1 + l3*e1 - l2*e2 + l1*e3"
    assert ev(hss_action, "act(g, e1 + e2)") == "0"


def test_specialized_value(hss_action):
    value = evaluate_expression(hss_action, "act(nu, e3)")
    assert str(specialize_value(value, {"k1": 1, "k2": 0})) == "e3"
    with pytest.raises(MissingParameter):
        specialize_value(value, {"k1": 1})


def test_context_decides_which_algebra(hss_action):
    # "1" is the unit of H in the first slot and of A in the second
    assert ev(hss_action, "act(1, 1)") == "1"
    assert ev(hss_action, "smash(e1, nu) * smash(e2, nu)") == "(k1^2 - k2^2)*e3@1"
    assert isinstance(evaluate_expression(hss_action, "smash(1, 1)"), SmashElement)


def test_algebra_arithmetic(hss_action):
    assert ev(hss_action, "e1*e2 - e3") == "0"
    assert ev(hss_action, "(k1 + k2)*(k1 - k2)") == "k1^2 - k2^2"
    assert ev(hss_action, "e1^2") == "1"
    assert ev(hss_action, "e2/2") == "(1/2)*e2"
    assert ev(hss_action, "counit(g) + counit(nu)") == "1"
    assert ev(hss_action, "antipode(nu)") == "-gnu"
    assert ev(hss_action, "delta(nu)") == "g@nu + nu@1"


@pytest.mark.parametrize("text,exc", [
    ("act(nu, e5)", UndeclaredLabel),
    ("k9*e1", UndeclaredParameter),
    ("e1 + k1", EvalTypeError),
    ("act(nu, e1", DefinitionSyntaxError),
    ("frob(e1)", DefinitionSyntaxError),
    ("e1 $ e2", DefinitionSyntaxError),
])
def test_errors(hss_action, text, exc):
    with pytest.raises(exc):
        evaluate_expression(hss_action, text)
