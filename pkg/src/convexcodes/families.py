"""Generators for the combinatorial code families.

Families are named by the CLI tokens: ``sunflower`` (S_d), ``c2dd``
(the layered alpha/beta/gamma/delta code with vector (2,d,d)), ``c22d``
(its delta-deletion, vector (2,2,d)), and the three fixed codes
``cInf2Inf``, ``c2InfInf``, ``c22Inf`` whose extreme entries are
infinite.
"""

from __future__ import annotations

from typing import Optional

from .codes import (Code, CodeError, Codeword, Label, alpha, beta, delta,
                    gamma, make_code, plain)

FAMILIES = ("sunflower", "c2dd", "c22d", "cInf2Inf", "c2InfInf", "c22Inf")
PARAMETRIC = ("sunflower", "c2dd", "c22d")


def _check_d(family: str, d: Optional[int]) -> int:
    if d is None:
        raise CodeError(f"family {family} needs a size parameter d >= 2")
    if d < 2:
        raise CodeError(f"family {family} needs d >= 2, got {d}")
    return d


def sunflower_code(d: int) -> Code:
    """S_d on base {1..d+1}: the word {1..d}, all singletons, all pairs {i, d+1}."""
    d = _check_d("sunflower", d)
    base = [plain(i) for i in range(1, d + 2)]
    words = [Codeword(plain(i) for i in range(1, d + 1))]
    words += [Codeword([plain(i)]) for i in range(1, d + 2)]
    words += [Codeword([plain(i), plain(d + 1)]) for i in range(1, d + 1)]
    return make_code(base, words)


def c2dd_code(d: int) -> Code:
    """The 6d-codeword layered code on alpha/beta/gamma/delta labels."""
    d = _check_d("c2dd", d)
    base = ([alpha(i) for i in range(1, d + 1)] + [beta(i) for i in range(1, d + 1)]
            + [gamma(i) for i in range(1, d + 1)] + [delta(i) for i in range(1, d + 1)])
    words = []
    for i in range(1, d + 1):
        words.append(Codeword([beta(i), gamma(i)]))                       # (i)
        words.append(Codeword([alpha(i), beta(i), gamma(i), delta(i)]))   # (v)
        words.append(Codeword([alpha(i), delta(i)]))                      # (vi)
    for i in range(1, d):
        words.append(Codeword([beta(i), beta(i + 1), gamma(i)]))          # (ii)
        words.append(Codeword([beta(i), beta(i + 1)]))                    # (iii)
        words.append(Codeword([beta(i), beta(i + 1), gamma(i + 1)]))      # (iv)
    words.append(Codeword([alpha(i) for i in range(1, d + 1)]
                          + [delta(i) for i in range(1, d + 1)]))          # (vii)
    words.append(Codeword([delta(i) for i in range(1, d + 1)]))            # (viii)
    return make_code(base, words)


def c22d_code(d: int) -> Code:
    """The (6d-1)-codeword code on alpha/beta/gamma labels."""
    d = _check_d("c22d", d)
    base = ([alpha(i) for i in range(1, d + 1)] + [beta(i) for i in range(1, d + 1)]
            + [gamma(i) for i in range(1, d + 1)])
    words = []
    for i in range(1, d + 1):
        words.append(Codeword([beta(i), gamma(i)]))                  # (i)
        words.append(Codeword([alpha(i), beta(i), gamma(i)]))        # (v)
        words.append(Codeword([alpha(i)]))                           # (vi)
    for i in range(1, d):
        words.append(Codeword([beta(i), beta(i + 1), gamma(i)]))     # (ii)
        words.append(Codeword([beta(i), beta(i + 1)]))               # (iii)
        words.append(Codeword([beta(i), beta(i + 1), gamma(i + 1)])) # (iv)
    words.append(Codeword([alpha(i) for i in range(1, d + 1)]))       # (vii)
    return make_code(base, words)


def _plain_code(n: int, word_strings) -> Code:
    base = [plain(i) for i in range(1, n + 1)]
    words = [Codeword(plain(int(ch)) for ch in s) for s in word_strings]
    return make_code(base, words)


def cInf2Inf_code() -> Code:
    """Closed-only code on [5]: no open realization in any dimension."""
    return _plain_code(5, ["2345", "123", "134", "145",
                           "13", "14", "23", "34", "45", "3", "4"])


def c2InfInf_code() -> Code:
    """Open-only code on [6]: no closed realization in any dimension."""
    return _plain_code(6, ["123", "126", "156", "234", "345", "456",
                           "12", "16", "23", "34", "45", "56"])


def c22Inf_code() -> Code:
    """Code on [9] with open and closed planar realizations but no
    non-degenerate realization in any dimension."""
    return _plain_code(9, ["123", "145", "2456", "2467", "389", "678", "689",
                           "246", "45", "67", "68", "89", "1", "2", "3"])


def build_code(family: str, d: Optional[int] = None) -> Code:
    if family == "sunflower":
        return sunflower_code(_check_d(family, d))
    if family == "c2dd":
        return c2dd_code(_check_d(family, d))
    if family == "c22d":
        return c22d_code(_check_d(family, d))
    if family in ("cInf2Inf", "c2InfInf", "c22Inf"):
        if d is not None:
            raise CodeError(f"family {family} takes no size parameter")
        return {"cInf2Inf": cInf2Inf_code,
                "c2InfInf": c2InfInf_code,
                "c22Inf": c22Inf_code}[family]()
    raise CodeError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
