import os
import pathlib

import pytest

import regsel

DATA = pathlib.Path(os.environ.get("REGSEL_DATA_DIR", pathlib.Path(__file__).parent.parent / "data"))


def read(name):
    return (DATA / name).read_text()


def test_seven_lamp_changeability():
    report = regsel.analyze(read("seven_lamp_board.json"))
    flags = [site["changeable"] for site in report["changeability"]]
    assert flags[:2] == [False, True]
    assert report["kernel_dimension"] == 6


def test_play_to_win():
    game = regsel.Game(read("seven_lamp_board.json"))
    assert not game.won
    game.play(8).play(11)
    assert game.won
    assert game.history == [8, 11]


def test_hint_on_trefoil():
    game = regsel.Game(read("knot_3_1.pd"))
    assert game.won
    game.play(0)
    hint = game.hint()
    for region in hint["regions"]:
        game.play(region)
    assert game.won


def test_unsolvable_certificate():
    answer = regsel.solve(read("board_unsolvable.json"))
    assert not answer["solved"]
    assert answer["certificate"]


def test_unlink_hopf():
    report = regsel.unlink(read("link_hopf.pd"))
    assert report["u_upper"] == 1
    assert report["u_circled_upper"] == 1
    assert report["proper"] is False


def test_tangle_and_fold():
    assert regsel.tanglize(read("crease_t3.fold"))["even_components"] == ["K1"]
    assert regsel.foldcheck(read("crease_preliminary.fold"))["pass"] is True


def test_errors_raise():
    with pytest.raises(regsel.RegselError, match="parse_error"):
        regsel.analyze("X(1,2,3")
