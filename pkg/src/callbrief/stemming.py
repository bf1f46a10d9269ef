"""Deterministic suffix-stripping stemmers, pluggable by language tag.

The French stemmer implements the classic published suffix-stripping
algorithm for French (prelude marking, RV/R1/R2 regions, ordered suffix
steps, postlude). One detail differs from a single run of that algorithm:
``stem`` applies the stripping pass repeatedly until the output stops
changing, so that stemming is idempotent for every input
(a single pass is not: e.g. one pass maps "génération" to "géner",
which a second pass would still shorten).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable

from .errors import ConfigError

_VOWELS = frozenset("aeiouyâàëéêèïîôûù")

_MAX_PASSES = 16


def _prelude(word: str) -> list[str]:
    """Mark non-vowel u/i/y occurrences by upper-casing them, left to right."""
    chars = list(word)
    for i, ch in enumerate(chars):
        prev_v = i > 0 and chars[i - 1] in _VOWELS
        next_v = i + 1 < len(chars) and chars[i + 1] in _VOWELS
        if ch in "ui" and prev_v and next_v:
            chars[i] = ch.upper()
        elif ch == "y" and (prev_v or next_v):
            chars[i] = "Y"
        elif ch == "u" and i > 0 and chars[i - 1] == "q":
            chars[i] = "U"
    return chars


def _regions(chars: list[str]) -> tuple[int, int, int]:
    """Start offsets of the RV, R1 and R2 regions."""
    n = len(chars)
    rv = n
    if n >= 3 and chars[0] in _VOWELS and chars[1] in _VOWELS:
        rv = 3
    elif "".join(chars[:3]) in ("par", "col", "tap"):
        rv = 3
    else:
        for i in range(1, n):
            if chars[i] in _VOWELS:
                rv = i + 1
                break

    def _after_first_nonvowel_following_vowel(start: int) -> int:
        for i in range(start, n - 1):
            if chars[i] in _VOWELS and chars[i + 1] not in _VOWELS:
                return i + 2
        return n

    r1 = _after_first_nonvowel_following_vowel(0)
    r2 = _after_first_nonvowel_following_vowel(r1)
    return rv, r1, r2


_G_SIMPLE = ("ances", "iqUes", "ismes", "ables", "istes",
             "ance", "iqUe", "isme", "able", "iste", "eux")
_G_ATEUR = ("atrices", "atrice", "ateurs", "ations", "ateur", "ation")
_G_LOGIE = ("logies", "logie")
_G_USION = ("usions", "utions", "usion", "ution")
_G_ENCE = ("ences", "ence")
_G_EMENT = ("ements", "ement")
_G_ITE = ("ités", "ité")
_G_IF = ("ives", "ifs", "ive", "if")
_G_EUSE = ("euses", "euse")
_G_ISSEMENT = ("issements", "issement")
_G_MENT = ("ments", "ment")

_STEP1_SUFFIXES = sorted(
    _G_SIMPLE + _G_ATEUR + _G_LOGIE + _G_USION + _G_ENCE + _G_EMENT
    + _G_ITE + _G_IF + ("eaux", "aux") + _G_EUSE + _G_ISSEMENT
    + ("amment", "emment") + _G_MENT,
    key=len, reverse=True)

_STEP2A_SUFFIXES = sorted(
    ("îmes", "ît", "îtes", "i", "ie", "ies", "ir", "ira", "irai", "iraIent",
     "irais", "irait", "iras", "irent", "irez", "iriez", "irions", "irons",
     "iront", "is", "issaIent", "issais", "issait", "issant", "issante",
     "issantes", "issants", "isse", "issent", "isses", "issez", "issiez",
     "issions", "issons", "it"),
    key=len, reverse=True)

_2B_E_GROUP = frozenset(
    ("é", "ée", "ées", "és", "èrent", "er", "era", "erai", "eraIent",
     "erais", "erait", "eras", "erez", "eriez", "erions", "erons", "eront",
     "ez", "iez"))
_2B_A_GROUP = frozenset(
    ("âmes", "ât", "âtes", "a", "ai", "aIent", "ais", "ait", "ant", "ante",
     "antes", "ants", "as", "asse", "assent", "asses", "assiez", "assions"))

_STEP2B_SUFFIXES = sorted(("ions",) + tuple(_2B_E_GROUP) + tuple(_2B_A_GROUP),
                          key=len, reverse=True)


def _step1(word: str, rv: int, r1: int, r2: int) -> tuple[str, bool, bool]:
    """Standard suffix removal. Returns (word, changed, ment_suffix_found)."""
    for suf in _STEP1_SUFFIXES:
        if not word.endswith(suf):
            continue
        k = len(word) - len(suf)
        if suf in _G_SIMPLE:
            if k >= r2:
                return word[:k], True, False
            return word, False, False
        if suf in _G_ATEUR:
            if k < r2:
                return word, False, False
            word = word[:k]
            if word.endswith("ic"):
                if len(word) - 2 >= r2:
                    word = word[:-2]
                else:
                    word = word[:-2] + "iqU"
            return word, True, False
        if suf in _G_LOGIE:
            if k >= r2:
                return word[:k] + "log", True, False
            return word, False, False
        if suf in _G_USION:
            if k >= r2:
                return word[:k] + "u", True, False
            return word, False, False
        if suf in _G_ENCE:
            if k >= r2:
                return word[:k] + "ent", True, False
            return word, False, False
        if suf in _G_EMENT:
            if k < rv:
                return word, False, False
            word = word[:k]
            if word.endswith("iv") and len(word) - 2 >= r2:
                word = word[:-2]
                if word.endswith("at") and len(word) - 2 >= r2:
                    word = word[:-2]
            elif word.endswith("eus"):
                if len(word) - 3 >= r2:
                    word = word[:-3]
                elif len(word) - 3 >= r1:
                    word = word[:-3] + "eux"
            elif (word.endswith("abl") or word.endswith("iqU")) \
                    and len(word) - 3 >= r2:
                word = word[:-3]
            elif (word.endswith("ièr") or word.endswith("Ièr")) \
                    and len(word) - 3 >= rv:
                word = word[:-3] + "i"
            return word, True, False
        if suf in _G_ITE:
            if k < r2:
                return word, False, False
            word = word[:k]
            if word.endswith("abil"):
                if len(word) - 4 >= r2:
                    word = word[:-4]
                else:
                    word = word[:-4] + "abl"
            elif word.endswith("ic"):
                if len(word) - 2 >= r2:
                    word = word[:-2]
                else:
                    word = word[:-2] + "iqU"
            elif word.endswith("iv") and len(word) - 2 >= r2:
                word = word[:-2]
            return word, True, False
        if suf in _G_IF:
            if k < r2:
                return word, False, False
            word = word[:k]
            if word.endswith("at") and len(word) - 2 >= r2:
                word = word[:-2]
                if word.endswith("ic"):
                    if len(word) - 2 >= r2:
                        word = word[:-2]
                    else:
                        word = word[:-2] + "iqU"
            return word, True, False
        if suf == "eaux":
            return word[:k] + "eau", True, False
        if suf == "aux":
            if k >= r1:
                return word[:k] + "al", True, False
            return word, False, False
        if suf in _G_EUSE:
            if k >= r2:
                return word[:k], True, False
            if k >= r1:
                return word[:k] + "eux", True, False
            return word, False, False
        if suf in _G_ISSEMENT:
            if k >= r1 and k >= 1 and word[k - 1] not in _VOWELS:
                return word[:k], True, False
            return word, False, False
        if suf == "amment":
            if k >= rv:
                return word[:k] + "ant", True, True
            return word, False, True
        if suf == "emment":
            if k >= rv:
                return word[:k] + "ent", True, True
            return word, False, True
        if suf in _G_MENT:
            if k >= 1 and k - 1 >= rv and word[k - 1] in _VOWELS:
                return word[:k], True, True
            return word, False, True
    return word, False, False


def _step2a(word: str, rv: int) -> tuple[str, bool]:
    """Verb suffixes beginning with i; tests confined to RV."""
    for suf in _STEP2A_SUFFIXES:
        if word.endswith(suf):
            k = len(word) - len(suf)
            if k - 1 >= rv and word[k - 1] not in _VOWELS:
                return word[:k], True
            return word, False
    return word, False


def _step2b(word: str, rv: int, r2: int) -> tuple[str, bool]:
    """Other verb suffixes; tests confined to RV."""
    for suf in _STEP2B_SUFFIXES:
        if not word.endswith(suf):
            continue
        k = len(word) - len(suf)
        if k < rv:
            return word, False
        if suf == "ions":
            if k >= r2:
                return word[:k], True
            return word, False
        if suf in _2B_E_GROUP:
            return word[:k], True
        word = word[:k]
        if word.endswith("e") and len(word) - 1 >= rv:
            word = word[:-1]
        return word, True
    return word, False


def _step4(word: str, rv: int, r2: int) -> str:
    """Residual suffix removal (runs only when steps 1/2a/2b changed nothing)."""
    if word.endswith("s") and len(word) >= 2 and word[-2] not in "aiouès":
        word = word[:-1]
    for suf in ("ière", "Ière", "ier", "Ier", "ion", "e"):
        if not word.endswith(suf):
            continue
        k = len(word) - len(suf)
        if k < rv:
            break
        if suf == "ion":
            if k >= r2 and k - 1 >= rv and word[k - 1] in "st":
                word = word[:k]
        elif suf == "e":
            word = word[:k]
        else:
            word = word[:k] + "i"
        break
    return word


def _stem_pass(token: str) -> str:
    """One full run of the French stripping algorithm over a lowercase token."""
    chars = _prelude(token)
    rv, r1, r2 = _regions(chars)
    word = "".join(chars)

    word, changed, ment_found = _step1(word, rv, r1, r2)
    if not changed or ment_found:
        word, changed_2a = _step2a(word, rv)
        if changed_2a:
            changed = True
        else:
            word, changed_2b = _step2b(word, rv, r2)
            changed = changed or changed_2b

    if changed:
        if word.endswith("Y"):
            word = word[:-1] + "i"
        elif word.endswith("ç"):
            word = word[:-1] + "c"
    else:
        word = _step4(word, rv, r2)

    if word[-3:] in ("enn", "onn", "ett", "ell") or word[-4:] == "eill":
        word = word[:-1]

    i = len(word) - 1
    if i >= 0 and word[i] not in _VOWELS:
        while i >= 0 and word[i] not in _VOWELS:
            i -= 1
        if i >= 0 and word[i] in "éè":
            word = word[:i] + "e" + word[i + 1:]

    return word.lower()


@lru_cache(maxsize=65536)
def french_stem(token: str) -> str:
    """Stem a French token; repeated application is a no-op."""
    word = token.lower()
    for _ in range(_MAX_PASSES):
        out = _stem_pass(word)
        if out == word:
            return out
        word = out
    return word


def identity_stem(token: str) -> str:
    return token


_STEMMERS: dict[str, Callable[[str], str]] = {
    "french": french_stem,
    "fr": french_stem,
    "none": identity_stem,
}


def get_stemmer(language_tag: str) -> Callable[[str], str]:
    """Resolve a language tag to a stemming function.

    Raises ConfigError for unsupported tags so that misconfiguration is
    detected at pipeline setup rather than per token.
    """
    try:
        return _STEMMERS[language_tag.lower()]
    except KeyError:
        raise ConfigError(
            f"unsupported stemmer language {language_tag!r}; "
            f"available: {', '.join(sorted(_STEMMERS))}") from None


def stem(token: str, language_tag: str = "french") -> str:
    """Stem one lowercase token with the stemmer for ``language_tag``."""
    return get_stemmer(language_tag)(token)
