from __future__ import annotations

import json
from fractions import Fraction

import pytest

from conftest import CLEANER_WORLD
from goalarg import (
    ScenarioError,
    Semantics,
    Stage,
    UtilityVariant,
    load_scenario,
    parse_scenario,
    run_pipeline,
    validate_scenario,
)


def load_doc():
    return json.loads(CLEANER_WORLD.read_text())


def write(tmp_path, doc):
    path = tmp_path / "s.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    return path


def test_preferences_parse_as_exact_fractions():
    scenario = load_scenario(CLEANER_WORLD)
    prefs = {g.id: g.preference for g in scenario.goals}
    assert prefs["g1"] == Fraction(4, 5)
    assert all(isinstance(p, Fraction) for p in prefs.values())


def test_preference_accepts_fraction_strings(tmp_path):
    doc = {
        "goals": [{"id": "a", "predicate": "a()", "preference": "1/3"}],
        "goal_attacks": [],
    }
    scenario = load_scenario(write(tmp_path, doc))
    assert scenario.goals[0].preference == Fraction(1, 3)


def test_explicit_main_goals_respected():
    scenario = load_scenario(CLEANER_WORLD)
    assert scenario.main_goals == {"g1", "g5"}


def test_main_goals_default_from_sub_claims(tmp_path):
    doc = load_doc()
    del doc["main_goals"]
    scenario = load_scenario(write(tmp_path, doc))
    # goals achieved only by sub-plans are not main
    assert scenario.main_goals == {"g1", "g5"}


def test_main_goals_default_on_direct_path(tmp_path):
    doc = {
        "goals": [
            {"id": "a", "predicate": "a()", "preference": 0.5},
            {"id": "b", "predicate": "b()", "preference": 0.5},
        ],
        "goal_attacks": [],
    }
    scenario = load_scenario(write(tmp_path, doc))
    assert scenario.main_goals == {"a", "b"}


def test_direct_goal_attacks_are_mirrored(tmp_path):
    doc = {
        "goals": [
            {"id": "a", "predicate": "a()", "preference": 0.5},
            {"id": "b", "predicate": "b()", "preference": 0.5},
        ],
        "goal_attacks": [{"from": "a", "to": "b", "kinds": ["t"]}],
    }
    scenario = load_scenario(write(tmp_path, doc))
    raw = scenario.goal_af_raw
    assert raw is not None and raw.stage is Stage.RAW
    assert raw.attacks == {("a", "b"), ("b", "a")}
    assert raw.incomp[("a", "b")] == raw.incomp[("b", "a")]


def test_direct_goal_attacks_reject_inconsistent_reverse(tmp_path):
    doc = {
        "goals": [
            {"id": "a", "predicate": "a()", "preference": 0.5},
            {"id": "b", "predicate": "b()", "preference": 0.5},
        ],
        "goal_attacks": [
            {"from": "a", "to": "b", "kinds": ["t"]},
            {"from": "b", "to": "a", "kinds": ["s"]},
        ],
    }
    with pytest.raises(ScenarioError, match="disagree"):
        load_scenario(write(tmp_path, doc))


@pytest.mark.parametrize(
    "mutate, location",
    [
        (lambda d: d.pop("goals"), "goals"),
        (lambda d: d["goals"].append({"id": "g1", "predicate": "x", "preference": 0.5}),
         "goals[5].id"),
        (lambda d: d["goals"][0].update(preference=2), "goals[0].preference"),
        (lambda d: d["goals"][0].update(predicate=""), "goals[0].predicate"),
        (lambda d: d["attacks"][0].pop("kinds"), "attacks[0]"),
        (lambda d: d["attacks"][0].update(kinds=["x"]), "attacks[0].kinds"),
        (lambda d: d.update(goal_attacks=[]), "$"),
        (lambda d: d.pop("attacks"), "$"),
        (lambda d: d.update(mystery=1), "$"),
        (lambda d: d.update(main_goals=["gX"]), "main_goals"),
        (lambda d: d.update(config={"utility": "product"}), "config.utility"),
        (lambda d: d.update(config={"semantics": "ideal"}), "config.semantics"),
        (lambda d: d.update(config={"tie_break": "random"}), "config.tie_break"),
        (lambda d: d.update(config={"bogus": 1}), "config"),
    ],
)
def test_schema_violations_carry_locations(mutate, location):
    doc = load_doc()
    mutate(doc)
    with pytest.raises(ScenarioError) as err:
        parse_scenario(doc)
    assert err.value.location == location


def test_duplicate_attack_pair_with_identical_kinds_is_tolerated(tmp_path):
    doc = load_doc()
    doc["attacks"].append(dict(doc["attacks"][0]))
    load_scenario(write(tmp_path, doc))  # no error


def test_missing_file():
    with pytest.raises(ScenarioError, match="cannot read"):
        load_scenario("/nonexistent/nowhere.json")


def test_config_defaults_and_values(tmp_path):
    scenario = load_scenario(CLEANER_WORLD)
    assert scenario.config.utility is UtilityVariant.SUM_ALL
    assert scenario.config.semantics is Semantics.GROUNDED
    assert scenario.config.tie_break == "lexicographic"

    doc = load_doc()
    doc["config"] = {"utility": "sum_main", "semantics": "preferred"}
    scenario = load_scenario(write(tmp_path, doc))
    assert scenario.config.utility is UtilityVariant.SUM_MAIN
    assert scenario.config.semantics is Semantics.PREFERRED


def test_validate_scenario_clean_fixture():
    assert validate_scenario(load_scenario(CLEANER_WORLD)) == []


def test_pipeline_override_beats_file_config(tmp_path):
    doc = load_doc()
    doc["config"] = {"semantics": "preferred"}
    scenario = load_scenario(write(tmp_path, doc))
    assert run_pipeline(scenario).config.semantics is Semantics.PREFERRED
    overridden = run_pipeline(scenario, semantics=Semantics.GROUNDED)
    assert overridden.config.semantics is Semantics.GROUNDED


def test_report_timing_is_measured_but_not_serialized():
    from goalarg import report_to_dict

    report = run_pipeline(load_scenario(CLEANER_WORLD))
    assert report.elapsed_seconds > 0
    assert "elapsed" not in json.dumps(report_to_dict(report))
