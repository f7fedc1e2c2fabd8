"""Levenshtein edit distance and spelling-variability analysis.

Unit costs throughout: copying a letter is free; adding, deleting, or
substituting a letter costs 1.  Distances are computed by dynamic programming
in O(m*n) cells and satisfy all four metric axioms, so word-form samples can
be fed straight into the generalized mean/median machinery.

Word forms are compared as sequences of Unicode scalar values, so medieval
letters such as thorn count as single symbols.  Ingestion normalizes to NFC
and lowercases; comparison afterwards is case-sensitive.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from . import core
from .core import FrechetResult, MetricMatrix

__all__ = [
    "levenshtein",
    "edit_script",
    "apply_script",
    "script_cost",
    "EditOp",
    "spelling_variability",
    "form_distance_matrix",
    "builtin_dataset",
    "normalize_form",
    "read_word_list",
    "parse_word_list",
    "LALME_OLD",
    "CHAUCER_OLD",
]

#: The 25 recorded Middle English spellings of "old", in dictionary order.
LALME_OLD: tuple[str, ...] = (
    "aeld", "aelde", "ald", "alde", "alld", "aulde", "awlde", "eeld",
    "eelde", "eld", "elde", "hald", "halde", "held", "helde", "hold",
    "holde", "hoolde", "old", "olde", "oold", "oolde", "ould", "wold",
    "woold",
)

#: The four spellings of "old" used in Chaucer's texts.
CHAUCER_OLD: tuple[str, ...] = ("olde", "old", "oold", "oolde")

_DATASETS: dict[str, tuple[str, ...]] = {
    "lalme_old": LALME_OLD,
    "chaucer_old": CHAUCER_OLD,
}


def builtin_dataset(name: str) -> tuple[str, ...]:
    """Look up a builtin word-form dataset by name."""
    try:
        return _DATASETS[name]
    except KeyError:
        valid = ", ".join(sorted(_DATASETS))
        raise ValueError(f"unknown dataset {name!r}; valid names: {valid}") from None


def levenshtein(s1: str, s2: str) -> int:
    """Unit-cost edit distance between two strings.

    Two-row dynamic program; symmetric; empty strings allowed.
    """
    if len(s1) < len(s2):
        s1, s2 = s2, s1
    m, n = len(s1), len(s2)
    prev = list(range(n + 1))
    for i in range(1, m + 1):
        cur = [i] + [0] * n
        ci = s1[i - 1]
        for j in range(1, n + 1):
            cur[j] = min(
                prev[j] + 1,
                cur[j - 1] + 1,
                prev[j - 1] + (ci != s2[j - 1]),
            )
        prev = cur
    return prev[n]


@dataclass(frozen=True)
class EditOp:
    """One step of an edit script.

    kind is "copy", "add", "delete", or "substitute"; source is the character
    consumed from the first string (None for add), target the character
    produced in the second (None for delete).
    """

    kind: str
    source: str | None = None
    target: str | None = None

    @property
    def cost(self) -> int:
        return 0 if self.kind == "copy" else 1


def script_cost(script: Iterable[EditOp]) -> int:
    return sum(op.cost for op in script)


def apply_script(script: Iterable[EditOp], source: str) -> str:
    """Replay a script against its source string, returning the target.

    Raises ValueError if the script does not fit the source.
    """
    out: list[str] = []
    pos = 0
    for op in script:
        if op.kind in ("copy", "delete", "substitute"):
            if pos >= len(source) or source[pos] != op.source:
                raise ValueError(f"script does not match source at position {pos}")
            pos += 1
        if op.kind == "copy":
            out.append(op.source)
        elif op.kind == "add":
            out.append(op.target)
        elif op.kind == "substitute":
            out.append(op.target)
        elif op.kind != "delete":
            raise ValueError(f"unknown edit operation {op.kind!r}")
    if pos != len(source):
        raise ValueError("script does not consume the whole source")
    return "".join(out)


def edit_script(s1: str, s2: str) -> list[EditOp]:
    """Minimum-cost script of copy/add/delete/substitute steps turning s1 into s2.

    The total cost equals ``levenshtein(s1, s2)`` and replaying the script on
    s1 yields s2.  Ties between optimal paths are broken deterministically
    (diagonal first, then add, then delete).
    """
    m, n = len(s1), len(s2)
    table = [[0] * (n + 1) for _ in range(m + 1)]
    for i in range(m + 1):
        table[i][0] = i
    for j in range(n + 1):
        table[0][j] = j
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            table[i][j] = min(
                table[i - 1][j] + 1,
                table[i][j - 1] + 1,
                table[i - 1][j - 1] + (s1[i - 1] != s2[j - 1]),
            )

    ops: list[EditOp] = []
    i, j = m, n
    while i > 0 or j > 0:
        if i > 0 and j > 0 and table[i][j] == table[i - 1][j - 1] and s1[i - 1] == s2[j - 1]:
            ops.append(EditOp("copy", s1[i - 1], s2[j - 1]))
            i, j = i - 1, j - 1
        elif i > 0 and j > 0 and table[i][j] == table[i - 1][j - 1] + 1:
            ops.append(EditOp("substitute", s1[i - 1], s2[j - 1]))
            i, j = i - 1, j - 1
        elif j > 0 and table[i][j] == table[i][j - 1] + 1:
            ops.append(EditOp("add", None, s2[j - 1]))
            j -= 1
        else:
            ops.append(EditOp("delete", s1[i - 1], None))
            i -= 1
    ops.reverse()
    return ops


def spelling_variability(
    forms: Iterable[str],
    p: float = 2,
    *,
    candidates: Iterable[str] | None = None,
    normalized: bool = False,
) -> FrechetResult:
    """Variability of a word-form sample under edit distance.

    By convention the minimizing form is sought among the distinct observed
    forms; pass ``candidates`` to search a different set.  Repeated forms in
    the sample weight the functional.
    """
    sample = list(forms)
    if candidates is None:
        candidates = list(dict.fromkeys(sample))
    return core.minimize_over_candidates(sample, candidates, levenshtein, p, normalized=normalized)


def form_distance_matrix(forms: Iterable[str]) -> MetricMatrix:
    """Pairwise edit distances over the distinct forms, in order of appearance."""
    distinct = list(dict.fromkeys(forms))
    return core.distance_matrix(distinct, levenshtein)


def normalize_form(text: str) -> str:
    """Ingestion normalization: NFC, then lowercase."""
    return unicodedata.normalize("NFC", text).lower()


def parse_word_list(lines: Iterable[str]) -> list[str]:
    """Parse word-list text: one form per line, '#' starts a comment."""
    forms: list[str] = []
    for line in lines:
        text = line.split("#", 1)[0].strip()
        if text:
            forms.append(normalize_form(text))
    return forms


def read_word_list(path: str | Path) -> list[str]:
    """Read a UTF-8 word-list file (one form per line, '#' comments)."""
    with open(path, encoding="utf-8") as fh:
        return parse_word_list(fh)
