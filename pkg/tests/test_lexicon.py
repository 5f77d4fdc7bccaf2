import json
import random
import re

import pytest

from folforge.errors import ConfigError, NoMatchingPredicate, UnknownSymbol
from folforge.formulas import (
    Atom,
    Binary,
    Constant,
    Lexeme,
    Not,
    Quantified,
    Variable,
    quantifier_depth,
)
from folforge.lexicon import (
    DEFAULT_SYMBOL_MAP,
    ENTITY_CLASSES,
    Predicate,
    SymbolMap,
    Vocabulary,
    lexicalize,
    load_vocabulary,
    rewrite_symbols,
    inverse_rewrite_symbols,
)
from folforge.syntax import parse, render


def test_packaged_vocabulary_shape(vocab):
    assert len(vocab.predicates) == 50
    assert len(vocab.by_arity(1)) == 25
    assert len(vocab.by_arity(2)) == 25
    names = [p.name for p in vocab.predicates]
    assert len(set(names)) == 50
    for name in names:
        assert re.match(r"[A-Z][A-Za-z0-9]*\Z", name)
    for cls in ENTITY_CLASSES:
        assert vocab.entities[cls]
    for required in ("IsHappy", "HasOfficeIn", "LivesIn", "IsThoughtful", "Like"):
        assert required in names
    assert "chef" in vocab.entities["Person"]
    assert "zone" in vocab.entities["Location"]


def test_predicate_validation():
    with pytest.raises(ConfigError):
        Predicate("lowercase", 1, ("Person",))
    with pytest.raises(ConfigError):
        Predicate("Tri", 3, ("Person", "Person", "Person"))
    with pytest.raises(ConfigError):
        Predicate("Solo", 1, ("Person", "Person"))
    with pytest.raises(ConfigError):
        Predicate("Alien", 1, ("Martian",))


def test_vocabulary_validation():
    person = Predicate("IsHappy", 1, ("Person",))
    with pytest.raises(ConfigError):
        Vocabulary((person, person), {"Person": ("chef",)})
    with pytest.raises(ConfigError):
        Vocabulary((person,), {"Martian": ("zork",)})
    with pytest.raises(ConfigError):
        Vocabulary((person,), {"Person": ("Chef",)})
    with pytest.raises(ConfigError):
        Vocabulary((person,), {"Person": ()})


def test_symbol_map_validation():
    with pytest.raises(ConfigError):
        SymbolMap((("¬", "No"), ("¬", "Not")))
    with pytest.raises(ConfigError):
        SymbolMap((("¬", "No"), ("∀", "No")))
    with pytest.raises(ConfigError):
        SymbolMap((("¬", ""),))


def test_default_symbol_map_contents():
    assert DEFAULT_SYMBOL_MAP.pairs == (
        ("¬", "No"),
        ("∀", "For All"),
        ("∃", "There Exists"),
        ("⊕", "XOR"),
        ("→", "implies"),
        ("∧", "and"),
        ("∨", "or"),
    )


def test_load_vocabulary_from_path(tmp_path, vocab):
    doc = {
        "predicates": [
            {"name": "IsHappy", "arity": 1, "signature": ["Person"]},
        ],
        "entities": {"Person": ["chef", "pilot"]},
    }
    path = tmp_path / "vocab.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    loaded = load_vocabulary(str(path))
    assert loaded.predicates[0].name == "IsHappy"
    assert loaded.entities["Person"] == ("chef", "pilot")

    path.write_text("{not json", encoding="utf-8")
    with pytest.raises(ConfigError):
        load_vocabulary(str(path))

    path.write_text(json.dumps({"predicates": [{"name": "X"}]}), encoding="utf-8")
    with pytest.raises(ConfigError):
        load_vocabulary(str(path))


def test_pinned_lexicalization(vocab):
    f = parse("∀a(A(a) → ∀b(¬B(b, c) ∨ ¬C(b)))")
    out = lexicalize(f, vocab, random.Random(170635))
    assert render(out) == (
        "∀a(HasOfficeIn(a) → ∀chef(¬LivesIn(chef, zone) ∨ ¬IsThoughtful(chef)))")


def test_predicate_assignment_is_consistent(vocab):
    f = parse("A(a) ∧ A(b) ∧ B(a, b) ∧ B(b, a)")
    out = lexicalize(f, vocab, random.Random(4))
    text = render(out)
    preds = re.findall(r"[A-Z][A-Za-z0-9]*", text)
    assert preds[0] == preds[1]
    assert preds[2] == preds[3]


def test_term_assignment_is_consistent(vocab):
    f = parse("∀x(B(x, c) ∧ B(x, c))")
    out = lexicalize(f, vocab, random.Random(9))
    atoms = [out.body.left, out.body.right]
    assert atoms[0].args == atoms[1].args


def test_term_class_follows_first_typed_occurrence():
    vocab = Vocabulary(
        (
            Predicate("IsHappy", 1, ("Person",)),
            Predicate("LivesIn", 2, ("Person", "Location")),
        ),
        {
            "Person": ("chef", "pilot"),
            "Location": ("zone", "harbor"),
        },
    )
    f = parse("∀a(A(a) → ∃x(B(x, c)))")
    out = lexicalize(f, vocab, random.Random(21))
    inner = out.body.right
    binder = inner.var.name
    place = inner.body.args[1].name
    assert binder in vocab.entities["Person"]
    assert place in vocab.entities["Location"]


def test_root_binder_is_preserved(vocab):
    f = parse("∀a(A(a) ∧ B(a, c))")
    out = lexicalize(f, vocab, random.Random(2))
    assert out.var == Variable("a")
    assert out.body.left.args[0] == Variable("a")


def test_first_free_constant_preserved_without_root_binder():
    vocab = Vocabulary(
        (Predicate("IsHappy", 1, ("Person",)),),
        {"Person": ("chef", "pilot")},
    )
    f = parse("A(a) → B(a)")
    out = lexicalize(f, vocab, random.Random(0))
    assert render(out) == "IsHappy(a) → IsHappy(a)"


def test_inner_binders_are_renamed(vocab):
    f = parse("∀a(A(a) → ∃b(B(a, b)))")
    out = lexicalize(f, vocab, random.Random(6))
    inner = out.body.right
    assert inner.var.name != "b"
    assert out.var == Variable("a")


def test_lexicalization_is_deterministic(vocab, formula_pool):
    for f in formula_pool[:50]:
        a = lexicalize(f, vocab, random.Random(55))
        b = lexicalize(f, vocab, random.Random(55))
        assert a == b


def shape(f):
    if isinstance(f, Atom):
        return ("atom", tuple(
            shape(a) if not hasattr(a, "name") else "term" for a in f.args))
    if isinstance(f, Not):
        return ("not", shape(f.inner))
    if isinstance(f, Binary):
        return ("binary", f.op, shape(f.left), shape(f.right))
    return ("quant", f.quantifier, shape(f.body))


def test_lexicalization_preserves_structure_and_qd(vocab, formula_pool):
    rng = random.Random(808)
    for f in formula_pool[:300]:
        out = lexicalize(f, vocab, rng)
        assert shape(out) == shape(f)
        assert quantifier_depth(out) == quantifier_depth(f)


def test_missing_arity_raises():
    vocab = Vocabulary(
        (Predicate("IsHappy", 1, ("Person",)),),
        {"Person": ("chef",)},
    )
    with pytest.raises(NoMatchingPredicate):
        lexicalize(parse("B(a, b)"), vocab, random.Random(0))


def test_lexicalized_input_rejected(vocab):
    f = Atom("IsHappy", (Lexeme("chef", "Person"),))
    with pytest.raises(ValueError):
        lexicalize(f, vocab, random.Random(0))


@pytest.mark.parametrize("formula,expected", [
    ("¬P(a)", "No P(a)"),
    ("∀x(P(x))", "For All x(P(x))"),
    ("∃x(P(x))", "There Exists x(P(x))"),
    ("P(a) ⊕ Q(b)", "P(a) XOR Q(b)"),
    ("P(a) → Q(b)", "P(a) implies Q(b)"),
    ("P(a) ∧ Q(b)", "P(a) and Q(b)"),
    ("P(a) ∨ Q(b)", "P(a) or Q(b)"),
])
def test_symbol_rewrite_per_symbol(formula, expected):
    assert rewrite_symbols(formula) == expected


def test_rewrite_reference_example():
    text = "∀a(A(a) → ∀b(¬B(b, c) ∨ ¬C(b)))"
    assert rewrite_symbols(text) == (
        "For All a(A(a) implies For All b( No B(b, c) or No C(b)))")


@pytest.mark.parametrize("text", ["P(a) ↔ Q(b)", "P(a) & Q(b)", "~P(a)", "P(a) | Q(b)"])
def test_unknown_symbols_rejected(text):
    with pytest.raises(UnknownSymbol):
        rewrite_symbols(text)


def test_inverse_round_trip_on_pool(formula_pool):
    for f in formula_pool[:300]:
        text = render(f)
        assert inverse_rewrite_symbols(rewrite_symbols(text)) == text


def test_inverse_round_trip_on_lexicalized(vocab, formula_pool):
    rng = random.Random(77)
    for f in formula_pool[:150]:
        text = render(lexicalize(f, vocab, rng))
        assert inverse_rewrite_symbols(rewrite_symbols(text)) == text


def test_custom_symbol_map_round_trip():
    custom = SymbolMap((
        ("¬", "not"),
        ("∀", "every"),
        ("∃", "some"),
        ("⊕", "either"),
        ("→", "then"),
        ("∧", "also"),
        ("∨", "else"),
    ))
    text = "∀x(P(x) → ¬Q(x))"
    rewritten = rewrite_symbols(text, custom)
    assert rewritten == "every x(P(x) then not Q(x))"
    assert inverse_rewrite_symbols(rewritten, custom) == text
