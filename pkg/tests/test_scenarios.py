import json

import pytest

from skewinv import scenarios as sc

# table-S4 is exercised by the acceptance suite
FAST = [n for n in sc.names() if n != "table-S4"]


@pytest.mark.parametrize("name", FAST)
def test_scenario_passes(name):
    rep = sc.run_scenario(name)
    assert not rep.error, rep.error
    assert rep.ok, rep.to_text()


def test_every_derived_value_is_frozen():
    frozen = sc.load_goldens()
    for name in sc.names():
        spec = sc.get(name)
        for e in spec.expect:
            assert e.tag in (sc.PAPER, sc.TRIVIAL, sc.DERIVED)
            if e.tag == sc.DERIVED:
                assert e.key in frozen.get(name, {}), (name, e.key)


def test_json_is_deterministic():
    a = json.dumps(sc.run_scenario("prop3.6").to_json(), sort_keys=True)
    b = json.dumps(sc.run_scenario("prop3.6").to_json(), sort_keys=True)
    assert a == b
    assert "seconds" not in a


def test_parallel_matches_serial():
    names = ["prop3.6", "lemma4.1", "thm5.3"]
    serial = [r.to_json() for r in sc.run_many(names, 1)]
    parallel = [r.to_json() for r in sc.run_many(names, 3)]
    assert serial == parallel


def test_aliases_and_unknown_names():
    assert sc.get("lemma21").name == "lemma2.1"
    with pytest.raises(sc.ScenarioError):
        sc.get("nope")


def test_mismatch_is_reported():
    spec = sc.get("prop3.6")
    checks = sc.compare(spec, {"V2 conclusion": "p = 3"}, goldens={})
    by_key = {c.key: c for c in checks}
    assert not by_key["V2 conclusion"].ok
    assert by_key["V2 dims"].expected == "<not frozen>"


def test_regenerate_writes_goldens(tmp_path):
    path = tmp_path / "goldens.json"
    path.write_text("{}")
    data = sc.regenerate(["prop3.6"], path)
    assert json.loads(path.read_text()) == data
    assert data["prop3.6"]["V2 dims"] == [1, 1, 0]
