import json

import pytest

from baumslag.abelianization import Abelianization, abelianization
from baumslag.errors import DomainError
from baumslag.fixtures import fixture_names, fixture_text, load_fixture
from baumslag.graph_of_groups import (
    GogFileError,
    GogValidationError,
    GraphOfGroups,
    SerreGraph,
    collapse_all_but_one,
    dumps,
    essential_check,
    fundamental_presentation,
    loads,
    spanning_tree,
    validate,
)
from baumslag.harness import expected_relator_count
from baumslag.words import Presentation, Word, format_word, parse_word


def z_vertex(name="a"):
    return Presentation((name,), ())


def single_loop_gog(alpha_exp=1, alpha_bar_exp=1):
    graph = SerreGraph.from_edges(["v"], [("e", "v", "v")])
    return GraphOfGroups(
        graph,
        {"v": z_vertex()},
        {"e": ("c",)},
        {"e": (Word([(0, alpha_exp)]),), "e_bar": (Word([(0, alpha_bar_exp)]),)},
    )


def test_serre_graph_basics():
    g = SerreGraph.from_edges(["v1", "v2"], [("e", "v1", "v2")])
    assert g.terminus("e") == "v2"
    assert g.terminus("e_bar") == "v1"
    assert g.pair_key("e_bar") == "e"
    assert g.edge_pairs() == ("e",)
    assert g.is_connected()


def test_validate_well_formed_loop():
    assert validate(single_loop_gog()) == []


def test_validate_edge_equal_to_inverse():
    graph = SerreGraph(["v"], {"e": "e"}, {"e": "v"})
    gog = GraphOfGroups(graph, {"v": z_vertex()}, {}, {})
    problems = validate(gog)
    assert any("equals its inverse" in p for p in problems)


def test_validate_foreign_generator_in_boundary():
    gog = single_loop_gog()
    gog.boundary["e"] = (Word([(7, 1)]),)
    problems = validate(gog)
    assert any("outside the origin vertex group" in p for p in problems)


def test_validate_disconnected():
    graph = SerreGraph.from_edges(["v1", "v2", "v3"], [("e", "v1", "v2")])
    gog = GraphOfGroups(
        graph,
        {"v1": z_vertex(), "v2": z_vertex("b"), "v3": z_vertex("c")},
        {"e": ()},
        {"e": (), "e_bar": ()},
    )
    assert any("not connected" in p for p in validate(gog))


def test_spanning_tree_examples():
    loop = SerreGraph.from_edges(["v"], [("e", "v", "v")])
    assert spanning_tree(loop) == frozenset()

    two = SerreGraph.from_edges(["v1", "v2"], [("e", "v1", "v2")])
    assert spanning_tree(two) == frozenset({"e"})

    triangle = SerreGraph.from_edges(
        ["v1", "v2", "v3"],
        [("e1", "v1", "v2"), ("e2", "v2", "v3"), ("e3", "v3", "v1")],
    )
    # BFS from v1 reaches v2 through e1 and v3 through e3_bar.
    assert spanning_tree(triangle) == frozenset({"e1", "e3"})


def test_spanning_tree_disconnected():
    graph = SerreGraph(["v1", "v2"], {}, {})
    with pytest.raises(DomainError):
        spanning_tree(graph)


def test_pi1_single_loop_z2():
    pi1 = fundamental_presentation(single_loop_gog())
    assert pi1.raw.generators == ("a", "e", "e_bar")
    raw = [format_word(r, pi1.raw.generators) for r in pi1.raw.relators]
    assert raw == ["e e_bar", "e^-1 a e a^-1", "e_bar^-1 a e_bar a^-1"]
    assert pi1.simplified.generators == ("a", "e")
    simplified = [format_word(r, pi1.simplified.generators) for r in pi1.simplified.relators]
    assert simplified == ["e^-1 a e a^-1"]
    assert abelianization(pi1.simplified) == Abelianization(2, ())


def test_pi1_amalgam_example():
    graph = SerreGraph.from_edges(["v1", "v2"], [("e", "v1", "v2")])
    gog = GraphOfGroups(
        graph,
        {"v1": z_vertex(), "v2": z_vertex("b")},
        {"e": ("c",)},
        {"e": (Word([(0, 2)]),), "e_bar": (Word([(0, 3)]),)},
    )
    pi1 = fundamental_presentation(gog)
    assert pi1.simplified.generators == ("a", "b")
    rels = [format_word(r, pi1.simplified.generators) for r in pi1.simplified.relators]
    assert rels == ["a^2 b^-3"]
    assert abelianization(pi1.simplified) == Abelianization(1, ())


def test_pi1_edgeless_returns_vertex_presentation():
    graph = SerreGraph(["v"], {}, {})
    pres = Presentation(("x", "y"), (parse_word("x y x^-1 y^-1", ("x", "y")),))
    gog = GraphOfGroups(graph, {"v": pres}, {}, {})
    pi1 = fundamental_presentation(gog)
    assert pi1.raw == pres
    assert pi1.simplified == pres


def test_pi1_renames_colliding_generators():
    graph = SerreGraph.from_edges(["u", "v"], [("e", "u", "v")])
    gog = GraphOfGroups(
        graph,
        {"u": z_vertex("a"), "v": z_vertex("a")},
        {"e": ("c",)},
        {"e": (Word([(0, 1)]),), "e_bar": (Word([(0, 1)]),)},
    )
    pi1 = fundamental_presentation(gog)
    assert pi1.raw.generators == ("u_a", "v_a", "e", "e_bar")
    assert pi1.vertex_gen_names["u"] == ("u_a",)
    assert pi1.vertex_gen_names["v"] == ("v_a",)
    assert abelianization(pi1.simplified) == Abelianization(1, ())


def test_pi1_relator_count_formula_on_fixtures():
    for name in fixture_names():
        gog = load_fixture(name)
        pi1 = fundamental_presentation(gog)
        assert len(pi1.raw.relators) == expected_relator_count(gog)
        assert abelianization(pi1.raw) == abelianization(pi1.simplified)


def test_pi1_tree_override_and_validation():
    gog = load_fixture("triangle")
    default = fundamental_presentation(gog)
    assert default.tree == frozenset({"e1", "e3"})
    other = fundamental_presentation(gog, frozenset({"e1", "e2"}))
    assert abelianization(other.raw) == abelianization(default.raw)
    with pytest.raises(DomainError):
        fundamental_presentation(gog, frozenset({"e1"}))
    with pytest.raises(DomainError):
        fundamental_presentation(gog, frozenset({"e1", "zzz"}))


def test_pi1_requires_valid_gog():
    graph = SerreGraph(["v"], {"e": "e"}, {"e": "v"})
    gog = GraphOfGroups(graph, {"v": z_vertex()}, {}, {})
    with pytest.raises(GogValidationError):
        fundamental_presentation(gog)


def test_collapse_identity_on_one_edge_graph():
    gog = load_fixture("trefoil_amalgam")
    collapsed = collapse_all_but_one(gog, "e")
    assert collapsed.kind == "amalgam"
    assert collapsed.gog.graph.vertices == ("v1", "v2")
    assert collapsed.gog.vertex_groups["v1"] == gog.vertex_groups["v1"]
    assert collapsed.gog.vertex_groups["v2"] == gog.vertex_groups["v2"]


def test_collapse_path_keep_first_edge():
    gog = load_fixture("path_two_edges")
    collapsed = collapse_all_but_one(gog, "e1")
    assert collapsed.kind == "amalgam"
    assert collapsed.gog.graph.vertices == ("v1", "v2")
    # v2's side collapsed the segment v2 - v3 into one vertex group.
    segment = collapsed.gog.vertex_groups["v2"]
    assert set(segment.generators) == {"b", "c"}
    before = abelianization(fundamental_presentation(gog).raw)
    after = abelianization(fundamental_presentation(collapsed.gog).raw)
    assert before == after


def test_collapse_two_loops_gives_hnn():
    gog = load_fixture("two_loops")
    collapsed = collapse_all_but_one(gog, "e")
    assert collapsed.kind == "hnn"
    assert collapsed.gog.graph.vertices == ("v",)
    base = collapsed.gog.vertex_groups["v"]
    # Base is the single-loop sub-diagram's group < a, f | f^-1 a^3 f a^-5 >.
    assert set(base.generators) == {"a", "f"}
    rels = [format_word(r, base.generators) for r in base.relators]
    assert rels == ["f^-1 a^3 f a^-5"]
    before = abelianization(fundamental_presentation(gog).raw)
    after = abelianization(fundamental_presentation(collapsed.gog).raw)
    assert before == after


def test_collapse_preserves_abelianization_all_fixtures():
    for name in fixture_names():
        gog = load_fixture(name)
        before = abelianization(fundamental_presentation(gog).raw)
        for pair in gog.graph.edge_pairs():
            collapsed = collapse_all_but_one(gog, pair)
            after = abelianization(fundamental_presentation(collapsed.gog).raw)
            assert before == after, (name, pair)


def test_collapse_unknown_edge():
    with pytest.raises(DomainError):
        collapse_all_but_one(load_fixture("z2_loop"), "nope")


def test_essential_check_computed_indices():
    report = essential_check(single_loop_gog(3, 3))
    kinds = {v.half_edge: (v.kind, v.index, v.source) for v in report.entries}
    assert kinds["e"] == ("finite", 3, "computed")
    assert kinds["e_bar"] == ("finite", 3, "computed")
    assert not report.essential

    report = essential_check(single_loop_gog(1, 1))
    assert {v.index for v in report.entries} == {1}

    # Trivial edge group has infinite index in Z.
    graph = SerreGraph.from_edges(["v"], [("e", "v", "v")])
    gog = GraphOfGroups(graph, {"v": z_vertex()}, {"e": ()}, {"e": (), "e_bar": ()})
    report = essential_check(gog)
    assert report.essential


def test_essential_check_declared_metadata():
    gog = load_fixture("declared_infinite_loop")
    report = essential_check(gog)
    assert all(v.kind == "infinite" and v.source == "declared" for v in report.entries)
    assert report.essential

    # Override metadata downgrades the verdict.
    report = essential_check(gog, {"e": "unknown"})
    kinds = {v.half_edge: v.kind for v in report.entries}
    assert kinds["e"] == "unknown"
    assert not report.essential


def test_load_fixture_round_trip():
    for name in fixture_names():
        gog = load_fixture(name)
        again = loads(dumps(gog))
        assert dumps(again) == dumps(gog)
        assert validate(gog) == []


def test_dumps_is_deterministic():
    gog = load_fixture("two_loops")
    assert dumps(gog) == dumps(load_fixture("two_loops"))
    assert json.loads(dumps(gog))["edges"][0]["id"] == "e"


def test_loads_schema_errors_carry_paths():
    with pytest.raises(GogFileError) as info:
        loads("{not json")
    assert "line 1" in info.value.path

    doc = json.loads(fixture_text("z2_loop"))
    del doc["edges"][0]["from"]
    with pytest.raises(GogFileError) as info:
        loads(json.dumps(doc))
    assert info.value.path == "edges[0]"

    doc = json.loads(fixture_text("z2_loop"))
    doc["edges"][0]["alpha"] = ["zz"]
    with pytest.raises(GogFileError) as info:
        loads(json.dumps(doc))
    assert info.value.path == "edges[0].alpha[0]"
    assert "unknown generator" in str(info.value)

    doc = json.loads(fixture_text("z2_loop"))
    doc["edges"][0]["to"] = "missing"
    with pytest.raises(GogFileError) as info:
        loads(json.dumps(doc))
    assert info.value.path == "edges[0].to"

    doc = json.loads(fixture_text("z2_loop"))
    doc["vertices"]["v"]["relators"] = ["a^"]
    with pytest.raises(GogFileError) as info:
        loads(json.dumps(doc))
    assert info.value.path == "vertices.v.relators[0]"

    doc = json.loads(fixture_text("z2_loop"))
    doc["edges"][0]["index_meta"] = {"alpha": "sometimes"}
    with pytest.raises(GogFileError) as info:
        loads(json.dumps(doc))
    assert info.value.path == "edges[0].index_meta.alpha"

    # Booleans are not valid indices even though bool subclasses int.
    doc = json.loads(fixture_text("z2_loop"))
    doc["edges"][0]["index_meta"] = {"alpha": True}
    with pytest.raises(GogFileError):
        loads(json.dumps(doc))


def test_loads_duplicate_edge_id():
    doc = json.loads(fixture_text("two_loops"))
    doc["edges"][1]["id"] = "e"
    with pytest.raises(GogFileError) as info:
        loads(json.dumps(doc))
    assert info.value.path == "edges[1].id"


def test_index_meta_survives_round_trip():
    gog = load_fixture("declared_infinite_loop")
    again = loads(dumps(gog))
    assert again.index_meta == gog.index_meta
