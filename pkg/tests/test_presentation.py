import random

import pytest

from parcay.errors import DslSyntaxError, EmptyS2, SemanticError
from parcay.presentation import (PartitePresentation, from_two_partite, parse,
                                 serialize, two_partite, validate)
from parcay.words import Alphabet, ClassAction, apply_action, parse_word, reduce

PETERSEN_TEXT = """\
# the Petersen presentation
classes: 0 1
gen a : U : (0)(1)
gen b : I : (0 1)
rel 0 : a^5, a b a^2 b
rel 1 : a^5
"""


def petersen():
    return from_two_partite(two_partite(["a"], [], ["b"],
                                        ["a^5", "a b a^2 b"], ["a^5"]))


def test_petersen_is_valid():
    assert validate(petersen()) == []


def test_fixed_point_involution_violation():
    alph = Alphabet(("a",), ("b",))
    action = ClassAction(alph, ("0", "1"),
                         {"a": {"0": "1", "1": "0"}, "b": {"0": "0", "1": "1"}})
    p = PartitePresentation(("0", "1"), alph, action, {})
    codes = [v.code for v in validate(p)]
    assert "FixedPointInvolution" in codes


def test_relator_not_closed_violation():
    alph = Alphabet((), ("b",))
    action = ClassAction(alph, ("0", "1"), {"b": {"0": "1", "1": "0"}})
    p = PartitePresentation(("0", "1"), alph, action,
                            {"0": [parse_word("b", alph)]})
    codes = [v.code for v in validate(p)]
    assert "RelatorNotClosed" in codes


def test_from_two_partite_petersen():
    p = petersen()
    assert p.classes == ("0", "1")
    assert p.alphabet.u_gens == ("a",)
    assert p.alphabet.i_gens == ("b",)
    assert p.action.table("a") == {"0": "0", "1": "1"}
    assert p.action.table("b") == {"0": "1", "1": "0"}
    assert len(p.relators["0"]) == 2 and len(p.relators["1"]) == 1


def test_from_two_partite_haar_type():
    tp = two_partite([], [], ["s"], [], [])
    p = from_two_partite(tp)
    assert validate(p) == []
    assert p.degree() == 1


def test_from_two_partite_empty_s2():
    with pytest.raises(EmptyS2):
        from_two_partite(two_partite(["a"], [], [], [], []))


def test_relator_parity_matches_stabilizer():
    # even swap-letter count and class stabilisation are two routes to the
    # same predicate
    tp = two_partite(["a"], ["u"], ["s"], [], [])
    p = from_two_partite(tp)
    alph = p.alphabet
    rng = random.Random(0)
    letters = alph.letters()
    for _ in range(200):
        raw = [rng.choice(letters) for _ in range(rng.randrange(0, 12))]
        w = reduce(raw, alph)
        stays = apply_action(p.action, w, "0") == "0"
        assert stays == (tp.swap_count(w) % 2 == 0)


# -- text format ---------------------------------------------------------------

def test_parse_petersen_text():
    p = parse(PETERSEN_TEXT)
    assert p == petersen()


def test_serialize_parse_roundtrip():
    from parcay.acceptance import line_petersen_presentation
    from parcay.constructions import generalized_petersen, line_graph_presentation
    from parcay.extract import pipeline_presentation

    fixtures = [
        petersen(),
        from_two_partite(two_partite([], [], ["s"], [], [])),
        line_petersen_presentation(),
        line_graph_presentation(["a", "b"],
                                ["a^5", "b^2", "a b a^-1 b^-1"]).presentation,
        pipeline_presentation(generalized_petersen(5, 2)),
    ]
    for p in fixtures:
        assert parse(serialize(p)) == p


def test_serialize_is_stable():
    p = parse(PETERSEN_TEXT)
    assert serialize(p) == serialize(parse(serialize(p)))


def test_empty_relator_sections_are_fine():
    p = parse("classes: 0 1\ngen b : I : (0 1)\n")
    assert validate(p) == []
    assert all(p.relators[x] == () for x in p.classes)


def test_parse_rejects_fixed_point_involution():
    text = "classes: 0 1\ngen b : I : (0)(1)\n"
    with pytest.raises(SemanticError) as err:
        parse(text)
    assert "FixedPointInvolution" in str(err.value)
    assert err.value.line == 2


def test_parse_syntax_errors_carry_positions():
    with pytest.raises(DslSyntaxError) as err:
        parse("classes: 0 1\ngen a U (0)(1)\n")
    assert err.value.line == 2
    with pytest.raises(DslSyntaxError):
        parse("gen a : U : (0)(1)\n")  # classes must come first
    with pytest.raises(SemanticError):
        parse("classes: 0 1\ngen a : U : (0)(1)\nrel 7 : a\n")


def test_parse_rejects_bad_cycles():
    with pytest.raises(SemanticError):
        parse("classes: 0 1\ngen a : U : (0 0)\n")
    with pytest.raises(DslSyntaxError):
        parse("classes: 0 1\ngen a : U : (0 1\n")


def test_multichar_class_names():
    text = ("classes: left right\n"
            "gen a : U : (left)(right)\n"
            "gen s : I : (left right)\n"
            "rel left : a^3, a s a^-1 s\n")
    p = parse(text)
    assert p.classes == ("left", "right")
    assert [str(r) for r in p.relators["left"]] == ["a^3", "a s a^-1 s"]


def test_relators_reducing_to_identity_are_violations():
    text = ("classes: 0 1\n"
            "gen s : I : (0 1)\n"
            "rel 0 : s^2\n")
    with pytest.raises(SemanticError) as err:
        parse(text)
    assert "EmptyRelator" in str(err.value)
