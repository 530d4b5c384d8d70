import pytest

import snortlab


def test_families():
    assert "t2" in snortlab.families()
    assert len(snortlab.families()) == 10


def test_graph_shape():
    g = snortlab.build_family("t2", 2)
    assert g.size == 4
    assert len(g.edges) == 5
    assert g.labels[g.index_of("g2_2")] == "g2_2"


def test_path_six_is_first_player_win():
    assert snortlab.solve("path", 6) == "N"
    p = snortlab.Position.initial("path", 6)
    assert snortlab.Solver().best_moves(p, "Left") == ["g2_1", "g3_1", "g4_1", "g5_1"]


def test_play_and_tints():
    p = snortlab.Position.initial("path", 6).play("Left", "g3_1")
    assert p.alive == 0b111011
    assert p.blue == 0b001010
    assert 1 not in p.legal_moves("Right")
    with pytest.raises(ValueError):
        p.play("Right", 1)


def test_solver_agrees_with_and_without_memo():
    p = snortlab.Position.initial("t3", 3)
    assert snortlab.Solver().wins_moving(p, "Left") == snortlab.Solver(memo=False).wins_moving(p, "Left")


def test_verify_copycat():
    report = snortlab.verify_copycat("t2", 6)
    assert report["verdict"] == "win"
    with pytest.raises(LookupError):
        snortlab.verify_copycat("path", 6)


def test_bad_input():
    with pytest.raises(ValueError):
        snortlab.build_family("hex", 3)
