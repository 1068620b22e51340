"""Word-level metrics and character-level string distances.

The profile mirrors the lexical rows of the evaluation report: raw counts,
length ratios, type-token ratio, readability, and syllable-count buckets.
Ratio fields are ``None`` (never 0) when the text has no words or sentences,
so that downstream aggregation can skip them honestly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .textproc import count_syllables, normalize, segment_sentences, tokenize

FLESCH_BASE = 206.835
FLESCH_PER_SENTENCE = 1.015
FLESCH_PER_SYLLABLE = 84.6

FK_GRADE_PER_SENTENCE = 0.39
FK_GRADE_PER_SYLLABLE = 11.8
FK_GRADE_OFFSET = 15.59


@dataclass(frozen=True)
class LexicalProfile:
    char_count: int
    letter_count: int
    digit_count: int
    avg_word_length: float | None
    avg_sentence_length: float | None
    avg_words_per_sentence: float | None
    ttr: float | None
    flesch_reading_ease: float | None
    flesch_kincaid_grade: float | None
    count1to3: int
    count4to6: int
    count7to10: int
    count10plus: int

    @property
    def length(self) -> int:
        """Alias of ``char_count`` used in report rows."""
        return self.char_count


@dataclass(frozen=True)
class StringDistances:
    levenshtein: int
    jaro: float
    jaro_winkler: float


def flesch_reading_ease(words: int, sentences: int, syllables: int) -> float:
    """206.835 - 1.015*(words/sentences) - 84.6*(syllables/words)."""
    return (
        FLESCH_BASE
        - FLESCH_PER_SENTENCE * (words / sentences)
        - FLESCH_PER_SYLLABLE * (syllables / words)
    )


def flesch_kincaid_grade(words: int, sentences: int, syllables: int) -> float:
    """0.39*(words/sentences) + 11.8*(syllables/words) - 15.59."""
    return (
        FK_GRADE_PER_SENTENCE * (words / sentences)
        + FK_GRADE_PER_SYLLABLE * (syllables / words)
        - FK_GRADE_OFFSET
    )


def lexical_profile(
    text: str,
    language: str = "en",
    syllable_counter: Callable[[str, str], int] | None = None,
) -> LexicalProfile:
    """Compute the full lexical profile of one document.

    ``syllable_counter`` may replace the built-in heuristic, e.g. to test the
    readability formulas with known syllable counts. Character counts ignore
    trailing whitespace of the document.
    """
    if syllable_counter is None:
        syllable_counter = count_syllables
    stripped = text.rstrip()
    sentences = segment_sentences(stripped)
    words = [t for s in sentences for t in s.tokens if t.is_word]

    char_count = len(stripped)
    letter_count = sum(1 for c in stripped if c.isalpha())
    digit_count = sum(1 for c in stripped if c.isdigit())

    buckets = [0, 0, 0, 0]
    syllable_total = 0
    for token in words:
        k = syllable_counter(token.surface, language)
        syllable_total += k
        if k <= 3:
            buckets[0] += 1
        elif k <= 6:
            buckets[1] += 1
        elif k <= 10:
            buckets[2] += 1
        else:
            buckets[3] += 1

    n_words = len(words)
    n_sentences = len(sentences)
    if n_words and n_sentences:
        fre = flesch_reading_ease(n_words, n_sentences, syllable_total)
        fkg = flesch_kincaid_grade(n_words, n_sentences, syllable_total)
    else:
        fre = fkg = None

    return LexicalProfile(
        char_count=char_count,
        letter_count=letter_count,
        digit_count=digit_count,
        avg_word_length=(
            sum(sum(1 for c in t.surface if c.isalpha()) for t in words) / n_words
            if n_words
            else None
        ),
        avg_sentence_length=(
            sum(s.span[1] - s.span[0] for s in sentences) / n_sentences
            if n_sentences
            else None
        ),
        avg_words_per_sentence=n_words / n_sentences if n_sentences else None,
        ttr=len({normalize(t.surface) for t in words}) / n_words if n_words else None,
        flesch_reading_ease=fre,
        flesch_kincaid_grade=fkg,
        count1to3=buckets[0],
        count4to6=buckets[1],
        count7to10=buckets[2],
        count10plus=buckets[3],
    )


def levenshtein(a: str, b: str) -> int:
    """Minimum number of unit-cost insertions, deletions, and substitutions."""
    if a == b:
        return 0
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return len(a)
    previous = list(range(len(b) + 1))
    for i, ca in enumerate(a):
        current = [i + 1]
        for j, cb in enumerate(b):
            current.append(
                min(previous[j + 1] + 1, current[j] + 1, previous[j] + (ca != cb))
            )
        previous = current
    return previous[-1]


def jaro(a: str, b: str) -> float:
    """Jaro similarity with the standard matching window and half-weight transpositions."""
    if a == b:
        return 1.0
    if not a or not b:
        return 0.0
    window = max(len(a), len(b)) // 2 - 1
    if window < 0:
        window = 0
    a_matched = [False] * len(a)
    b_matched = [False] * len(b)
    matches = 0
    for i, ca in enumerate(a):
        lo = max(0, i - window)
        hi = min(len(b), i + window + 1)
        for j in range(lo, hi):
            if not b_matched[j] and b[j] == ca:
                a_matched[i] = True
                b_matched[j] = True
                matches += 1
                break
    if matches == 0:
        return 0.0
    transpositions = 0
    j = 0
    for i in range(len(a)):
        if a_matched[i]:
            while not b_matched[j]:
                j += 1
            if a[i] != b[j]:
                transpositions += 1
            j += 1
    t = transpositions / 2
    m = matches
    return (m / len(a) + m / len(b) + (m - t) / m) / 3


def jaro_winkler(a: str, b: str, prefix_scale: float = 0.1, max_prefix: int = 4) -> float:
    """Jaro boosted by up to ``max_prefix`` characters of common prefix."""
    base = jaro(a, b)
    prefix = 0
    for ca, cb in zip(a, b):
        if ca != cb or prefix >= max_prefix:
            break
        prefix += 1
    return base + prefix * prefix_scale * (1.0 - base)


def string_distances(original: str, improved: str) -> StringDistances:
    return StringDistances(
        levenshtein=levenshtein(original, improved),
        jaro=jaro(original, improved),
        jaro_winkler=jaro_winkler(original, improved),
    )


def length_change(original: str, improved: str) -> float | None:
    """Percent change in character length; ``None`` for an empty original."""
    base = len(original)
    if base == 0:
        return None
    return 100.0 * (len(improved) - base) / base
