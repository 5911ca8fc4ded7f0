import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kcrank.errors import NonUnitConstant, NotDivisible
from kcrank.qexpr import (
    Add,
    Div,
    IntLiteral,
    JTerm,
    Mul,
    Pochhammer,
    Power,
    QExprSyntaxError,
    evaluate,
    expand,
    parse,
    to_text,
)
from kcrank.series import PochhammerSpec, pochhammer

from conftest import binomial_product


def test_parse_examples():
    assert parse("1/((-q;q)^2)") == Div(IntLiteral(1), Power(Pochhammer(-1, 1, 1), 2))
    assert parse("(q;q^3)*(q^2;q^3)") == Mul((Pochhammer(1, 1, 3), Pochhammer(1, 2, 3)))
    assert parse(" J( 12 , 27 ) / J(3) ") == Div(JTerm(12, 27), JTerm(3))
    assert parse("(q;q)^-2") == Power(Pochhammer(1, 1, 1), -2)
    assert parse("J(1) - J(2) + 3") == Add(((1, JTerm(1)), (-1, JTerm(2)), (1, IntLiteral(3))))


def test_bare_q_is_rejected():
    text = "J(12,27)/J(3) - q*J(6,27)/J(3)"
    with pytest.raises(QExprSyntaxError) as err:
        parse(text)
    assert err.value.position == text.index("q*")
    assert "expected" in str(err.value)


@pytest.mark.parametrize(
    "text",
    ["", "(q;q", "(q;q)^", "J(3,2)", "J(0)", "(q^0;q)", "1 +", "(-3)", "2 2", "(q;q))", "J(1,)", "q"],
)
def test_syntax_errors(text):
    with pytest.raises(QExprSyntaxError) as err:
        parse(text)
    assert 0 <= err.value.position <= len(text.encode())


def test_evaluate_examples():
    assert list(expand("1/((-q;q)^2)", 4)) == [1, -2, 1, -2, 4]
    expect = binomial_product([1, 2, 4, 5], 5)
    assert expect == [1, -1, -1, 1, -1, 0]
    assert list(expand("(q;q^3)*(q^2;q^3)", 5)) == expect
    # residue difference M_2(0,4,n) - M_2(1,4,n), read off rows 0..3 of the table
    assert list(expand("((1/((-q;q)^2)) + ((q^2;q^4)))/2", 3)) == [1, -1, 0, -1]


def test_evaluate_errors():
    with pytest.raises(NotDivisible):
        expand("(q;q)/2", 3)
    with pytest.raises(NonUnitConstant):
        expand("1/2^1", 3)
    with pytest.raises(NonUnitConstant):
        expand("J(1)/(J(1) - J(2))", 3)


def test_j_quotient_identity():
    for n in (0, 1, 17, 200):
        assert expand("J(1)/J(3)", n) == expand("(q;q^3)*(q^2;q^3)", n)


def test_integer_arithmetic():
    assert list(expand("2^3 - 1", 2)) == [7, 0, 0]
    assert list(expand("(q;q)^0", 2)) == [1, 0, 0]
    assert expand("(q;q)^-1", 10) == pochhammer(PochhammerSpec(1, 1, 1, -1), 10)


# random ASTs for round-trip checks
atoms = st.one_of(
    st.builds(IntLiteral, st.integers(0, 50)),
    st.builds(Pochhammer, st.sampled_from([1, -1]), st.integers(1, 9), st.integers(1, 9)),
    st.builds(JTerm, st.integers(1, 5)),
    st.builds(lambda s, d: JTerm(s, s + d), st.integers(1, 9), st.integers(1, 9)),
)


def _extend(children):
    return st.one_of(
        st.builds(Power, children, st.integers(-4, 4)),
        st.builds(lambda xs: Mul(tuple(xs)), st.lists(children, min_size=2, max_size=3)),
        st.builds(Div, children, children),
        st.builds(
            lambda head, tail: Add(((1, head),) + tuple(tail)),
            children,
            st.lists(st.tuples(st.sampled_from([1, -1]), children), min_size=1, max_size=2),
        ),
    )


exprs = st.recursive(atoms, _extend, max_leaves=8)


@given(exprs)
@settings(max_examples=200, deadline=None)
def test_print_parse_round_trip(node):
    text = to_text(node)
    assert parse(text) == node
    assert to_text(parse(text)) == text
