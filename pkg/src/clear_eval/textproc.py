"""Deterministic text processing: sentence segmentation, tokenization, syllables.

All native metrics fall back to these rule-based routines when no annotation
bundle supplies precomputed sentence spans or tokens. Everything here is pure
and model-free so that runs are reproducible byte for byte.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

TERMINATORS = frozenset(".!?…")

_OPENERS = frozenset("([{")
_CLOSERS = frozenset(")]}")
_QUOTES = frozenset('"“”«»')

# Letter/digit runs, with apostrophes only when flanked by letters ("don't").
_WORD_RE = re.compile(r"[^\W_]+(?:['’][^\W_]+)*", re.UNICODE)

_VOWELS_EN = frozenset("aeiouy")
_VOWELS_DE = frozenset("aeiouyäöü")


@dataclass(frozen=True)
class Token:
    surface: str
    span: tuple[int, int]
    is_word: bool


@dataclass(frozen=True)
class Sentence:
    span: tuple[int, int]
    tokens: tuple[Token, ...] = field(default_factory=tuple)

    def text(self, document: str) -> str:
        return document[self.span[0] : self.span[1]]


@lru_cache(maxsize=1)
def default_abbreviations() -> frozenset[str]:
    """Abbreviations that suppress a sentence break, lowercased, final period kept."""
    data = resources.files("clear_eval.data").joinpath("abbreviations.txt").read_text("utf-8")
    return frozenset(line.strip().lower() for line in data.splitlines() if line.strip())


def load_abbreviations(path) -> frozenset[str]:
    with open(path, encoding="utf-8") as fh:
        return frozenset(line.strip().lower() for line in fh if line.strip())


def _abbreviation_guard(text: str, dot: int, abbreviations: frozenset[str]) -> bool:
    """True when the period at ``dot`` ends an abbreviation or a single initial."""
    start = dot
    while start > 0 and (text[start - 1].isalnum() or text[start - 1] in ".-'’"):
        start -= 1
    candidate = text[start : dot + 1]
    if candidate.lower() in abbreviations:
        return True
    # Single-letter initials such as "J. Smith".
    return len(candidate) == 2 and candidate[0].isalpha()


def segment_sentences(text: str, abbreviations: frozenset[str] | None = None) -> list[Sentence]:
    """Split ``text`` into sentences with character spans and tokens.

    A sentence ends at ``.``, ``!``, ``?`` or ``…`` followed by whitespace or
    end of input, unless the terminator sits inside open parentheses/quotes or
    closes a known abbreviation or single-letter initial. A blank line always
    ends the current sentence. Spans cover exactly the non-whitespace content,
    in order.
    """
    if abbreviations is None:
        abbreviations = default_abbreviations()
    sentences: list[Sentence] = []
    n = len(text)
    i = 0
    while i < n:
        while i < n and text[i].isspace():
            i += 1
        if i >= n:
            break
        start = i
        depth = 0
        in_quote = False
        end = None
        j = i
        while j < n:
            ch = text[j]
            if ch == "\n":
                # A whitespace run containing a second newline is a blank line.
                k = j
                newlines = 0
                while k < n and text[k].isspace():
                    if text[k] == "\n":
                        newlines += 1
                    k += 1
                if newlines >= 2:
                    end = j
                    break
                j = k
                continue
            if ch in _OPENERS:
                depth += 1
            elif ch in _CLOSERS:
                depth = max(0, depth - 1)
            elif ch in _QUOTES:
                in_quote = not in_quote
            elif ch in TERMINATORS and depth == 0 and not in_quote:
                if j + 1 >= n or text[j + 1].isspace():
                    if not (ch == "." and _abbreviation_guard(text, j, abbreviations)):
                        end = j + 1
                        break
            j += 1
        if end is None:
            end = n
        stop = end
        while stop > start and text[stop - 1].isspace():
            stop -= 1
        if stop > start:
            raw = text[start:stop]
            tokens = tuple(
                Token(t.surface, (t.span[0] + start, t.span[1] + start), t.is_word)
                for t in tokenize(raw)
            )
            sentences.append(Sentence((start, stop), tokens))
        i = end
    return sentences


def tokenize(text: str) -> list[Token]:
    """Tokenize into word runs and single punctuation marks.

    Words are maximal letter/digit runs, keeping apostrophes between letters;
    every other non-space character becomes its own token. ``is_word`` marks
    tokens containing at least one letter.
    """
    tokens: list[Token] = []
    pos = 0
    for match in _WORD_RE.finditer(text):
        for k in range(pos, match.start()):
            if not text[k].isspace():
                tokens.append(Token(text[k], (k, k + 1), False))
        surface = match.group()
        tokens.append(
            Token(surface, (match.start(), match.end()), any(c.isalpha() for c in surface))
        )
        pos = match.end()
    for k in range(pos, len(text)):
        if not text[k].isspace():
            tokens.append(Token(text[k], (k, k + 1), False))
    return tokens


def count_syllables(word: str, language: str = "en") -> int:
    """Heuristic syllable count, always >= 1 for any input containing a letter.

    English: count maximal vowel groups (a, e, i, o, u, y); drop one for a
    terminal silent "e" unless the word ends in consonant + "le"; a terminal
    consonant + "le" adds a syllable if its "e" formed no group. German:
    count maximal vowel groups including umlauts; adjacent vowels (ei, ie,
    au, eu, äu, ...) merge into one group by construction.
    """
    letters = "".join(c for c in word.lower() if c.isalpha())
    if not letters:
        raise ValueError(f"not a word: {word!r}")
    vowels = _VOWELS_DE if language == "de" else _VOWELS_EN
    groups = 0
    prev_vowel = False
    for c in letters:
        is_vowel = c in vowels
        if is_vowel and not prev_vowel:
            groups += 1
        prev_vowel = is_vowel
    if language != "de" and letters.endswith("e"):
        ends_cons_le = (
            len(letters) >= 3 and letters.endswith("le") and letters[-3] not in vowels
        )
        if ends_cons_le:
            if letters[-1] not in vowels:  # unreachable: "e" is a vowel; kept for symmetry
                groups += 1
        elif groups > 0:
            groups -= 1
    return max(groups, 1)


def normalize(text: str) -> str:
    """Lowercase, NFKC-normalize, and collapse all whitespace to single spaces."""
    return " ".join(unicodedata.normalize("NFKC", text).lower().split())


def word_tokens(text: str) -> list[Token]:
    return [t for t in tokenize(text) if t.is_word]
