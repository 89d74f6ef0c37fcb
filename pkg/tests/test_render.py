from __future__ import annotations

from fractions import Fraction

import pytest

from conftest import GOLDEN_DIR, cleaner_general_af
from goalarg import (
    AbstractAF,
    InputError,
    Semantics,
    apply_successful_attacks,
    build_explanation_model,
    build_xaf,
    complete_explanation,
    derive_goal_af,
    export_dot,
    format_rational,
    render_argument,
    render_partial_explanation,
    select,
    why,
    why_not,
)
from goalarg.explain import Explanation, ExplanationKind, QueryKind
from goalarg.render import SENTENCE_TEMPLATES


@pytest.fixture(scope="module")
def cleaner_model():
    filtered = apply_successful_attacks(derive_goal_af(cleaner_general_af()))
    return build_explanation_model(filtered, select(filtered))


@pytest.fixture(scope="module")
def names():
    return {g.id: g.predicate for g in cleaner_general_af().goals}


def golden_sentences() -> dict[str, list[str]]:
    blocks: dict[str, list[str]] = {}
    current = None
    for line in (GOLDEN_DIR / "cleaner_world_sentences.txt").read_text().splitlines():
        if line.startswith("# "):
            current = line[2:].split()[-1]
            blocks[current] = []
        elif line.strip():
            blocks[current].append(line)
    return blocks


def find_argument(model, schema_id, x, y=None):
    (hit,) = [
        a for a in model.arguments
        if a.schema_id == schema_id and a.instance.x == x and a.instance.y == y
    ]
    return hit


def test_no_conflict_scheme(cleaner_model, names):
    arg = find_argument(cleaner_model, "r1", "g5")
    sentence = render_argument(arg, names)
    assert sentence.text == "be(fixed) has no incompatibility, so it became pursued."
    assert sentence.scheme_id == "r1"
    assert sentence.argument_id == arg.id


def test_preference_scheme(cleaner_model, names):
    arg = find_argument(cleaner_model, "r2", "g1", "g4")
    assert render_argument(arg, names).text == (
        "clean(5,5) and be(in_workshop) have the following conflicts: 't,r'. "
        "Since clean(5,5) is more preferable than be(in_workshop), "
        "clean(5,5) became pursued."
    )


def test_non_max_utility_scheme(cleaner_model, names):
    arg = find_argument(cleaner_model, "r6", "g2")
    assert render_argument(arg, names).text == (
        "Since pickup(5,5) did not belong to the set of goals that maximizes "
        "the utility, it did not become pursued."
    )


def test_equal_preference_scheme(names):
    from goalarg import Belief, BeliefKind, construct_arguments, kinds_from_letters, trigger_rules

    beliefs = (
        Belief(BeliefKind.INCOMPAT, ("g1", "g2"), kinds_from_letters("rs"), index=1),
        Belief(BeliefKind.EQ_PREF, ("g1", "g2"), index=2),
    )
    (arg,) = construct_arguments(beliefs, trigger_rules(beliefs))
    assert render_argument(arg, names).text == (
        "clean(5,5) and pickup(5,5) have the following conflicts: 'r,s'. "
        "Since clean(5,5) and pickup(5,5) have the same preference value, "
        "clean(5,5) became pursued."
    )


def test_unresolvable_goal_id(cleaner_model):
    arg = find_argument(cleaner_model, "r1", "g5")
    with pytest.raises(InputError):
        render_argument(arg, {})


def test_partial_explanations_match_golden_file(cleaner_model, names):
    expected = golden_sentences()
    queries = {
        "g1": why, "g2": why_not, "g3": why, "g4": why_not, "g5": why,
    }
    for goal, query in queries.items():
        sentences = render_partial_explanation(query(cleaner_model, goal), names)
        assert [s.text for s in sentences] == expected[goal]


def test_partial_sentence_counts(cleaner_model, names):
    counts = {"g1": 2, "g2": 2, "g3": 3, "g4": 4, "g5": 2}
    for goal, n in counts.items():
        query = why if goal in cleaner_model.selection.pursued else why_not
        assert len(render_partial_explanation(query(cleaner_model, goal), names)) == n


def test_empty_extension_renders_empty(names):
    xaf = build_xaf("nothing", ())
    explanation = Explanation(
        "nothing", QueryKind.WHY, ExplanationKind.PARTIAL, xaf,
        Semantics.GROUNDED, ((),),
    )
    assert render_partial_explanation(explanation, names) == []


def test_complete_explanation_has_no_sentence_form(cleaner_model, names):
    explanation = complete_explanation(cleaner_model, "g2")
    with pytest.raises(InputError, match="graph"):
        render_partial_explanation(explanation, names)


def test_rendering_is_injective_on_the_fixture(cleaner_model, names):
    texts = [render_argument(a, names).text for a in cleaner_model.arguments]
    assert len(set(texts)) == len(texts) == 14


def test_rendering_is_stable(cleaner_model, names):
    first = [s.text for s in render_partial_explanation(why(cleaner_model, "g1"), names)]
    second = [s.text for s in render_partial_explanation(why(cleaner_model, "g1"), names)]
    assert first == second


def test_every_schema_has_a_template():
    from goalarg.explain import SCHEMAS

    assert {s.id for s in SCHEMAS} == set(SENTENCE_TEMPLATES)


def test_export_dot_empty():
    assert export_dot(AbstractAF.of([])) == "digraph {\n}\n"


def test_export_dot_goal_graph(cleaner_model, names):
    text = export_dot(cleaner_model.gaf_sc, names)
    assert text.count(" -> ") == 4
    assert '"g3" -> "g2" [label="s"];' in text
    assert '"g1" -> "g4" [label="t,r"];' in text
    assert '"g5" [label="g5: be(fixed)"];' in text
    assert text.count("label=") == 5 + 4  # five nodes, four edges


def test_export_dot_explanatory_framework(cleaner_model):
    xaf = cleaner_model.xafs["g2"]
    text = export_dot(xaf)
    for arg in xaf.arguments:
        assert f'"{arg.id}"' in text
    assert text.count(" -> ") == 3


def test_export_dot_abstract():
    af = AbstractAF.of(["a", "b"], [("a", "b")])
    assert export_dot(af) == 'digraph {\n  "a";\n  "b";\n  "a" -> "b";\n}\n'


def test_export_dot_escapes_quotes():
    af = AbstractAF.of(['say "hi"'])
    assert '\\"hi\\"' in export_dot(af)


def test_format_rational():
    assert format_rational(Fraction("0.8")) == "0.8"
    assert format_rational(Fraction(12, 5)) == "2.4"
    assert format_rational(Fraction(1)) == "1"
    assert format_rational(Fraction(1, 4)) == "0.25"
    assert format_rational(Fraction(1, 3)) == "1/3"
    assert format_rational(Fraction(-3, 2)) == "-1.5"
    assert format_rational(Fraction(0)) == "0"
    assert format_rational(Fraction(101, 100)) == "1.01"
