"""Framed oriented tangles as sliced diagrams, and braid closures.

A tangle is read top to bottom.  Boundary words are strings over ``+``
(a downward strand, the generating object ``X``) and ``-`` (an upward
strand, ``X*``).  Each slice is a row of generators placed side by side:

=========  ===========  ======================
token      local word   meaning
=========  ===========  ======================
``id+``    ``+ -> +``   identity of ``X``
``id-``    ``- -> -``   identity of ``X*``
``cap_l``  ``-+ -> .``  ``ev_X``
``cap_r``  ``+- -> .``  ``ev_{X*}``
``cup_l``  ``. -> +-``  ``coev_X``
``cup_r``  ``. -> -+``  ``coev_{X*}``
``xAB``    ``AB -> BA`` positive crossing, left strand over
``xiAB``   ``AB -> BA`` negative crossing, right strand over
=========  ===========  ======================
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

ORIENTATIONS = ("++", "+-", "-+", "--")

TOKENS: Dict[str, Tuple[str, str]] = {
    "id+": ("+", "+"),
    "id-": ("-", "-"),
    "cap_l": ("-+", ""),
    "cap_r": ("+-", ""),
    "cup_l": ("", "+-"),
    "cup_r": ("", "-+"),
}
for _oo in ORIENTATIONS:
    TOKENS["x" + _oo] = (_oo, _oo[::-1])
    TOKENS["xi" + _oo] = (_oo, _oo[::-1])

CROSSINGS = tuple(t for t in TOKENS if t.startswith("x"))


class TangleSyntaxError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class TangleMismatchError(ValueError):
    """Consecutive slices do not share a boundary word."""

    def __init__(self, message: str, boundary: int):
        super().__init__(message)
        self.boundary = boundary


def crossing_sign(token: str) -> int:
    """Oriented sign of a crossing token.

    ``x++`` is +1.  Reversing one strand flips the sign, so ``x+-`` and
    ``x-+`` are -1; the ``xi`` tokens are the mirror images.
    """
    if token not in CROSSINGS:
        raise ValueError(f"{token!r} is not a crossing")
    neg = token.startswith("xi")
    oo = token[2:] if neg else token[1:]
    sign = 1 if oo[0] == oo[1] else -1
    return -sign if neg else sign


def slice_domain(tokens: Sequence[str]) -> str:
    return "".join(TOKENS[t][0] for t in tokens)


def slice_codomain(tokens: Sequence[str]) -> str:
    return "".join(TOKENS[t][1] for t in tokens)


@dataclass(frozen=True)
class TangleWord:
    """A validated list of slices from ``domain`` (top) to ``codomain`` (bottom)."""

    domain: str
    codomain: str
    slices: Tuple[Tuple[str, ...], ...]

    def __post_init__(self):
        slices = tuple(tuple(s) for s in self.slices)
        object.__setattr__(self, "slices", slices)
        for w in (self.domain, self.codomain):
            if set(w) - {"+", "-"}:
                raise ValueError(f"bad orientation word {w!r}")
        for s in slices:
            if not s:
                raise ValueError("empty slice")
            for t in s:
                if t not in TOKENS:
                    raise ValueError(f"unknown generator {t!r}")
        word = self.domain
        for i, s in enumerate(slices):
            dom = slice_domain(s)
            if dom != word:
                raise TangleMismatchError(
                    f"slice {i + 1} expects {_show(dom)} but boundary {i} is {_show(word)}", i)
            word = slice_codomain(s)
        if word != self.codomain:
            raise TangleMismatchError(
                f"last slice ends at {_show(word)}, declared codomain {_show(self.codomain)}", len(slices))

    @classmethod
    def from_slices(cls, slices: Sequence[Sequence[str]]) -> "TangleWord":
        slices = [tuple(s) for s in slices]
        if not slices:
            raise ValueError("a tangle needs at least one slice")
        return cls(slice_domain(slices[0]), slice_codomain(slices[-1]), tuple(slices))

    @property
    def is_closed(self) -> bool:
        return self.domain == "" and self.codomain == ""

    def then(self, other: "TangleWord") -> "TangleWord":
        """Stack ``other`` below ``self``."""
        return TangleWord(self.domain, other.codomain, self.slices + other.slices)

    def crossings(self) -> List[str]:
        return [t for s in self.slices for t in s if t in CROSSINGS]

    def __str__(self):
        return format_tangle(self)


def _show(word: str) -> str:
    return repr(word) if word else "the empty word"


def identity_tangle(word: str) -> TangleWord:
    if not word:
        raise ValueError("the empty identity has no slice form")
    return TangleWord.from_slices([["id" + c for c in word]])


def format_tangle(t: TangleWord) -> str:
    return " ; ".join(" ".join(s) for s in t.slices)


_TOKEN_RE = re.compile(r"id[+-]|cup_[lr]|cap_[lr]|xi?[+-][+-]")


def parse_tangle(text: str) -> TangleWord:
    """Parse the slice DSL: ``slice (';' slice)*``, tokens separated by whitespace, ``#`` comments."""
    slices: List[List[str]] = [[]]
    starts = [(1, 1)]
    line, col_base = 1, 0
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        col = i - col_base + 1
        if ch == "\n":
            line += 1
            col_base = i + 1
            i += 1
        elif ch.isspace():
            i += 1
        elif ch == "#":
            while i < n and text[i] != "\n":
                i += 1
        elif ch == ";":
            if not slices[-1]:
                raise TangleSyntaxError("empty slice before ';'", line, col)
            slices.append([])
            starts.append((line, col + 1))
            i += 1
        else:
            m = _TOKEN_RE.match(text, i)
            end = m.end() if m else i
            if not m or (end < n and not (text[end].isspace() or text[end] in ";#")):
                j = i
                while j < n and not (text[j].isspace() or text[j] in ";#"):
                    j += 1
                raise TangleSyntaxError(f"unknown token {text[i:j]!r}", line, col)
            slices[-1].append(m.group(0))
            i = end
    if not slices[-1]:
        if len(slices) == 1:
            raise TangleSyntaxError("empty tangle", line, i - col_base + 1)
        raise TangleSyntaxError("empty slice after ';'", line, i - col_base + 1)
    return TangleWord.from_slices(slices)


def normalize_text(text: str) -> str:
    return format_tangle(parse_tangle(text))


# ---------------------------------------------------------------------------
# braids

@dataclass(frozen=True)
class BraidWord:
    """Artin generators: ``i`` is sigma_i, ``-i`` its inverse, on ``strands`` strands."""

    strands: int
    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        for x in self.letters:
            if x == 0 or abs(x) >= self.strands:
                raise ValueError(f"generator {x} out of range for {self.strands} strands")

    @classmethod
    def parse(cls, text: str, strands: int = None) -> "BraidWord":
        """Whitespace or comma separated nonzero integers; ``strands`` defaults to ``max|i| + 1``."""
        parts = [p for p in re.split(r"[\s,]+", text.strip()) if p]
        try:
            letters = [int(p) for p in parts]
        except ValueError as exc:
            raise ValueError(f"bad braid word {text!r}") from exc
        if strands is None:
            strands = max((abs(x) for x in letters), default=0) + 1
        return cls(strands, tuple(letters))

    @property
    def exponent_sum(self) -> int:
        return sum(1 if x > 0 else -1 for x in self.letters)

    def __str__(self):
        return " ".join(str(x) for x in self.letters)


def braid_closure(b: BraidWord) -> TangleWord:
    """Trace closure: nested ``cup_l`` on top, the braid on the ``+`` strands, nested ``cap_r`` below.

    The return strands run upward on the right of the braid.
    """
    n = b.strands
    slices: List[List[str]] = []
    for k in range(n):
        slices.append(["id+"] * k + ["cup_l"] + ["id-"] * k)
    for x in b.letters:
        i = abs(x)
        slices.append(["id+"] * (i - 1) + ["x++" if x > 0 else "xi++"] + ["id+"] * (n - i - 1) + ["id-"] * n)
    for k in reversed(range(n)):
        slices.append(["id+"] * k + ["cap_r"] + ["id-"] * k)
    return TangleWord("", "", tuple(tuple(s) for s in slices))


def writhe(t: TangleWord) -> int:
    """Sum of oriented crossing signs of a closed diagram."""
    if not t.is_closed:
        raise ValueError("writhe is defined here for closed tangles only")
    return sum(crossing_sign(c) for c in t.crossings())
