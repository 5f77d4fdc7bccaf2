import pytest
from hypothesis import given

from folforge.formulas import (
    Atom,
    Binary,
    Connective,
    Constant,
    Lexeme,
    Not,
    Quantified,
    Quantifier,
    Variable,
    formula_args,
    is_term,
    quantifier_depth,
    structural_depth,
)
from folforge.syntax import parse

from oracles import quantifier_depth_oracle, structural_depth_oracle
from strategies import formula_trees


def test_identifier_validation():
    with pytest.raises(ValueError):
        Variable("9x")
    with pytest.raises(ValueError):
        Constant("")
    with pytest.raises(ValueError):
        Lexeme("two words", "Person")
    with pytest.raises(ValueError):
        Atom("not an ident", (Constant("a"),))


def test_atom_needs_arguments():
    with pytest.raises(ValueError):
        Atom("P", ())


def test_atom_args_coerced_to_tuple():
    atom = Atom("P", [Constant("a")])
    assert atom.args == (Constant("a"),)


def test_lexeme_name_alias():
    lex = Lexeme("chef", "Person")
    assert lex.name == "chef"
    assert is_term(lex)


def test_formula_args_filters_terms():
    sub = Atom("Q", (Constant("a"),))
    atom = Atom("P", (sub, Constant("b")))
    assert formula_args(atom) == [sub]
    assert formula_args(Atom("P", (Constant("a"),))) == []


def test_quantifier_depth_base_rules():
    atom = Atom("P", (Constant("a"),))
    assert quantifier_depth(atom) == 0
    assert quantifier_depth(Not(atom)) == 0
    q = Quantified(Quantifier.FORALL, Variable("x"), atom)
    assert quantifier_depth(q) == 1
    assert quantifier_depth(Not(q)) == 1
    assert quantifier_depth(Binary(Connective.AND, q, atom)) == 1
    nested_q = Quantified(Quantifier.EXISTS, Variable("y"), q)
    assert quantifier_depth(Binary(Connective.OR, q, nested_q)) == 2


def test_quantifier_depth_through_nested_arguments():
    q = Quantified(Quantifier.FORALL, Variable("x"), Atom("P", (Variable("x"),)))
    holder = Atom("H", (q, Constant("a")))
    assert quantifier_depth(holder) == 1
    assert structural_depth(holder) == 3  # holder > quantifier > inner atom


def test_reference_formula_depths():
    f = parse("∀a(A(a) → ∀b(¬B(b, c) ∨ ¬C(b)))")
    assert quantifier_depth(f) == 2
    assert structural_depth(f) == 6


def test_structural_depth_counts_every_node_kind():
    atom = Atom("P", (Constant("a"),))
    assert structural_depth(atom) == 1
    assert structural_depth(Not(atom)) == 2
    assert structural_depth(Not(Not(atom))) == 3
    pair = Binary(Connective.XOR, Not(atom), atom)
    assert structural_depth(pair) == 3
    assert structural_depth(Quantified(Quantifier.FORALL, Variable("x"), pair)) == 4


@given(formula_trees())
def test_quantifier_depth_matches_oracle(f):
    assert quantifier_depth(f) == quantifier_depth_oracle(f)


@given(formula_trees())
def test_structural_depth_matches_oracle(f):
    assert structural_depth(f) == structural_depth_oracle(f)


def test_nodes_are_immutable_and_hashable():
    f = Quantified(Quantifier.FORALL, Variable("x"),
                   Atom("P", (Variable("x"),)))
    with pytest.raises(AttributeError):
        f.var = Variable("y")
    assert len({f, f}) == 1
