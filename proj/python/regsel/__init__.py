"""Region Select and region crossing change engine."""

import json

from . import _core
from ._core import RegselError

__all__ = ["Game", "RegselError", "analyze", "solve", "tanglize", "foldcheck", "unlink"]


def analyze(text, budget=16):
    return json.loads(_core.analyze(text, budget))


def solve(text, budget=16):
    return json.loads(_core.solve(text, budget))


def tanglize(text, strict=False):
    return json.loads(_core.tanglize(text, strict))


def foldcheck(text):
    return json.loads(_core.foldcheck(text))


def unlink(pd, budget=-1, circle=None):
    return json.loads(_core.unlink(pd, budget, "" if circle is None else json.dumps(circle)))


class Game:
    """A board in play; lamps is a '0'/'1' string, one character per site."""

    def __init__(self, text):
        self._g = _core.Game(text)

    def play(self, region):
        self._g.play(region)
        return self

    @property
    def lamps(self):
        return self._g.lamps

    @property
    def history(self):
        return list(self._g.history)

    @property
    def won(self):
        return self._g.won

    def board(self):
        return json.loads(self._g.board())

    def hint(self, budget=16):
        return json.loads(self._g.hint(budget))
