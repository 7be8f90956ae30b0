"""
Words in the braid group B_m and their left Garside normal form.

A braid word is a sequence of signed generator letters: the integer +i
stands for sigma_i and -i for its inverse. Words are kept verbatim (no
free reduction on construction); equality and triviality are decided
through the normal form Delta^p A_1 ... A_k, whose factors are
permutation braids stored as permutations of {0, ..., m-1}.

Text grammar (used by the CLI and fixture files): a mandatory header
``strands=<m>;`` followed by whitespace-separated tokens ``s<i>``,
``s<i>^<k>`` (k may be negative, meaning |k| copies of the inverse) and
``D^<k>`` for the k-th power of the half twist.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

Perm = tuple[int, ...]


class BraidError(ValueError):
    pass


@dataclass(frozen=True)
class BraidWord:
    """A word in B_m: ``letters[j] = ±i`` encodes sigma_i^±1, 1 <= i <= m-1."""

    strands: int
    letters: tuple[int, ...]

    def __post_init__(self):
        if self.strands < 2:
            raise BraidError("a braid group needs at least 2 strands")
        for letter in self.letters:
            if letter == 0 or not 1 <= abs(letter) <= self.strands - 1:
                raise BraidError(f"letter {letter} out of range for {self.strands} strands")

    def __len__(self) -> int:
        return len(self.letters)


def word(strands: int, letters) -> BraidWord:
    return BraidWord(strands, tuple(letters))


def identity(strands: int) -> BraidWord:
    return BraidWord(strands, ())


def delta(strands: int) -> BraidWord:
    """The half twist (s1 s2 ... s_{m-1})(s1 ... s_{m-2}) ... (s1 s2) s1."""
    letters = []
    for block in range(strands - 1, 0, -1):
        letters.extend(range(1, block + 1))
    return BraidWord(strands, tuple(letters))


def exponent_sum(b: BraidWord) -> int:
    return sum(1 if letter > 0 else -1 for letter in b.letters)


def compose(a: BraidWord, b: BraidWord) -> BraidWord:
    if a.strands != b.strands:
        raise BraidError("strand count mismatch")
    return BraidWord(a.strands, a.letters + b.letters)


def inverse(a: BraidWord) -> BraidWord:
    return BraidWord(a.strands, tuple(-letter for letter in reversed(a.letters)))


def conjugate(a: BraidWord, b: BraidWord) -> BraidWord:
    """a b a^-1."""
    return compose(compose(a, b), inverse(a))


def power(a: BraidWord, k: int) -> BraidWord:
    base = a if k >= 0 else inverse(a)
    return BraidWord(a.strands, base.letters * abs(k))


def free_reduce(a: BraidWord) -> BraidWord:
    """Cancel adjacent sigma_i sigma_i^-1 pairs (free-group reduction only)."""
    stack: list[int] = []
    for letter in a.letters:
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return BraidWord(a.strands, tuple(stack))


# -- permutations -----------------------------------------------------
# Permutations are tuples p with p[x] the image of x; braid words multiply
# left to right, so perm(ab) = compose_perm(perm(a), perm(b)) applies a first.


def _identity_perm(m: int) -> Perm:
    return tuple(range(m))


def _w0(m: int) -> Perm:
    return tuple(range(m - 1, -1, -1))


def _transposition(m: int, i: int) -> Perm:
    p = list(range(m))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def _compose_perm(p: Perm, q: Perm) -> Perm:
    return tuple(q[x] for x in p)


def _inverse_perm(p: Perm) -> Perm:
    out = [0] * len(p)
    for x, y in enumerate(p):
        out[y] = x
    return tuple(out)


def _length(p: Perm) -> int:
    return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])


def _left_descents(p: Perm):
    """Generators i with l(s_i p) < l(p): p(i-1) > p(i) in 0-based positions."""
    return [i for i in range(1, len(p)) if p[i - 1] > p[i]]


def _right_descents(p: Perm) -> set[int]:
    """Generators i with l(p s_i) < l(p): value i appears after value i+1."""
    inv = _inverse_perm(p)
    return {i for i in range(1, len(p)) if inv[i - 1] > inv[i]}


def _flip(p: Perm) -> Perm:
    """Conjugation by the half twist: w0 p w0."""
    w0 = _w0(len(p))
    return _compose_perm(w0, _compose_perm(p, w0))


@lru_cache(maxsize=None)
def _perm_word(p: Perm) -> tuple[int, ...]:
    """A reduced word for the permutation braid of p, peeling left descents:
    p = s_i p' with l(p') = l(p) - 1."""
    letters: list[int] = []
    current = list(p)
    while True:
        for i in range(1, len(current)):
            if current[i - 1] > current[i]:
                current[i - 1], current[i] = current[i], current[i - 1]
                letters.append(i)
                break
        else:
            return tuple(letters)


@dataclass(frozen=True)
class GarsideNormalForm:
    """Left normal form Delta^inf A_1 ... A_k with left-weighted permutation
    braid factors, none trivial and none the half twist."""

    strands: int
    infimum: int
    factors: tuple[Perm, ...]

    def is_identity(self) -> bool:
        return self.infimum == 0 and not self.factors

    def to_word(self) -> BraidWord:
        letters: list[int] = []
        d = delta(self.strands)
        if self.infimum >= 0:
            letters.extend(d.letters * self.infimum)
        else:
            letters.extend(inverse(d).letters * (-self.infimum))
        for factor in self.factors:
            letters.extend(_perm_word(factor))
        return BraidWord(self.strands, tuple(letters))


def _left_weight_pair(a: Perm, b: Perm) -> tuple[Perm, Perm]:
    """Slide prefix letters of b into a until the pair is left-weighted
    (every left descent of b is a right descent of a)."""
    m = len(a)
    while True:
        rd = _right_descents(a)
        movable = [i for i in _left_descents(b) if i not in rd]
        if not movable:
            return a, b
        i = movable[0]
        s = _transposition(m, i)
        a = _compose_perm(a, s)
        b = _compose_perm(s, b)


def garside_normal_form(b: BraidWord) -> GarsideNormalForm:
    m = b.strands
    ident = _identity_perm(m)
    w0 = _w0(m)

    # sigma_i       -> the factor s_i
    # sigma_i^-1    -> Delta^-1 times the factor (w0 s_i); the Delta powers
    # are commuted to the front afterwards with the flip automorphism.
    factors: list[Perm] = []
    delta_pows: list[int] = []
    for letter in b.letters:
        s = _transposition(m, abs(letter))
        if letter > 0:
            factors.append(s)
            delta_pows.append(0)
        else:
            factors.append(_compose_perm(w0, s))
            delta_pows.append(-1)

    total = 0
    for j in range(len(factors) - 1, -1, -1):
        if total % 2:
            factors[j] = _flip(factors[j])
        total += delta_pows[j]

    factors = [f for f in factors if f != ident]

    # Left-weight adjacent pairs to a fixpoint, dropping identities and
    # migrating full twists into the Delta power.
    changed = True
    while changed:
        changed = False
        i = 0
        while i < len(factors) - 1:
            a2, b2 = _left_weight_pair(factors[i], factors[i + 1])
            if (a2, b2) != (factors[i], factors[i + 1]):
                changed = True
                if b2 == ident:
                    factors[i:i + 2] = [a2]
                else:
                    factors[i], factors[i + 1] = a2, b2
            i += 1
        while factors and factors[0] == w0:
            factors.pop(0)
            total += 1
            changed = True

    return GarsideNormalForm(m, total, tuple(factors))


def is_trivial(b: BraidWord) -> bool:
    return garside_normal_form(b).is_identity()


def equals(a: BraidWord, b: BraidWord) -> bool:
    if a.strands != b.strands:
        raise BraidError("strand count mismatch")
    return garside_normal_form(a) == garside_normal_form(b)


# -- text form ---------------------------------------------------------

_HEADER = re.compile(r"^\s*strands\s*=\s*(\d+)\s*;\s*")
_TOKEN = re.compile(r"^(?:s(\d+)(?:\^(-?\d+))?|D(?:\^(-?\d+))?)$")


def parse_braid(text: str) -> BraidWord:
    m = _HEADER.match(text)
    if not m:
        raise BraidError("braid text must start with 'strands=<m>;'")
    strands = int(m.group(1))
    if strands < 2:
        raise BraidError("strands must be at least 2")
    letters: list[int] = []
    d = delta(strands)
    for token in text[m.end():].split():
        tm = _TOKEN.match(token)
        if not tm:
            raise BraidError(f"bad braid token {token!r}")
        if tm.group(1) is not None:
            i = int(tm.group(1))
            k = int(tm.group(2)) if tm.group(2) is not None else 1
            if not 1 <= i <= strands - 1:
                raise BraidError(f"generator s{i} out of range for {strands} strands")
            letters.extend([i if k > 0 else -i] * abs(k))
        else:
            k = int(tm.group(3)) if tm.group(3) is not None else 1
            base = d.letters if k >= 0 else inverse(d).letters
            letters.extend(base * abs(k))
    return BraidWord(strands, tuple(letters))


def render_braid(b: BraidWord) -> str:
    """Render with run-length grouping of repeated letters."""
    parts = [f"strands={b.strands};"]
    i = 0
    letters = b.letters
    while i < len(letters):
        j = i
        while j < len(letters) and letters[j] == letters[i]:
            j += 1
        run = j - i
        gen = abs(letters[i])
        if letters[i] > 0:
            parts.append(f"s{gen}" if run == 1 else f"s{gen}^{run}")
        else:
            parts.append(f"s{gen}^{-run}")
        i = j
    return " ".join(parts)
