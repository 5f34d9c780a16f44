import pytest

import trustres as tr


@pytest.fixture
def chooser():
    return tr.TrustNetwork(
        users=["u1", "u2", "u3"],
        mappings=[tr.TrustMapping("u3", "u1", 2), tr.TrustMapping("u3", "u2", 1)],
        beliefs=[tr.Belief("u1", "k", "a"), tr.Belief("u2", "k", "b")],
    )


def test_resolve_strict_priority(chooser):
    result = tr.resolve(chooser, "k")
    assert result.possible_values("u3") == ["a"]
    assert result.certain_value("u3") == "a"
    assert not result.no_stable_solution
    assert result.to_csv().startswith("user,key,value,certain\n")


def test_resolve_matches_oracle(chooser):
    oracle_result, model_count = tr.oracle_resolve(chooser, "k")
    assert model_count == 1
    assert oracle_result == tr.resolve(chooser, "k")
    assert tr.check_instance(chooser, "k")


def test_priority_tie_gives_both_values():
    net = tr.TrustNetwork(
        users=["u1", "u2", "u3"],
        mappings=[tr.TrustMapping("u3", "u1", 1), tr.TrustMapping("u3", "u2", 1)],
        beliefs=[tr.Belief("u1", "k", "a"), tr.Belief("u2", "k", "b")],
    )
    result = tr.resolve(net, "k")
    assert result.possible_values("u3") == ["a", "b"]
    assert result.certain_value("u3") == ""


def test_network_edits_and_json_round_trip(chooser):
    edited = chooser.insert_belief(tr.Belief("u3", "k2", "c"))
    assert edited.keys() == ["k", "k2"]
    assert edited.revoke_belief("u3", "k2") == chooser
    assert tr.TrustNetwork.from_json(chooser.to_json()) == chooser
    assert len(chooser) == 5


def test_validation_errors_surface_as_value_error():
    with pytest.raises(ValueError):
        tr.TrustNetwork(users=["u1"], mappings=[tr.TrustMapping("u1", "u1", 1)])
    with pytest.raises(ValueError):
        tr.TrustNetwork.from_json("{broken")


def test_generators_are_deterministic():
    a = tr.gen_cycle_clusters(5, seed=1)
    b = tr.gen_cycle_clusters(5, seed=1)
    assert a == b
    assert len(a.users) == 20
    nested = tr.gen_nested_cycles(40, seed=2)
    assert len(nested.users) == 40
    sf = tr.gen_scale_free(50, 2, seed=3)
    assert len(sf.users) == 50
    sub = tr.sample_edges(sf, 0.5, seed=4)
    assert len(sub.mappings) == len(sf.mappings) // 2


def test_bulk_resolve_rows():
    rows = tr.gen_bulk_workload(20, 0.5, seed=1)
    assert len(rows) == 40
    out = tr.bulk_resolve(tr.bulk_topology(), rows)
    assert out == sorted(out, key=lambda r: (r[1], r[0], r[2]))
    keys = {key for _, key, _ in out}
    assert len(keys) == 20


def test_condense_orders_components():
    net = tr.TrustNetwork(
        users=["u1", "u2", "u3"],
        mappings=[
            tr.TrustMapping("u2", "u1", 1),
            tr.TrustMapping("u3", "u2", 1),
            tr.TrustMapping("u2", "u3", 1),
        ],
    )
    assert tr.condense(net) == [["u1"], ["u2", "u3"]]


def test_oracle_limit():
    net = tr.gen_nested_cycles(100, seed=1)
    with pytest.raises(RuntimeError):
        tr.oracle_resolve(net, "k")


def test_verify_sweep_small():
    instances, mismatches = tr.verify_equivalence(50, seed=1, include_grid=False)
    assert instances == 50
    assert mismatches == 0
