"""
Copyright 2026 The SymThompson Developers

This file is part of SymThompson.

SymThompson is free software: you can redistribute it and/or modify
it under the terms of the GNU General Public License as published by
the Free Software Foundation, either version 3 of the License, or
(at your option) any later version.

SymThompson is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU General Public License for more details.

You should have received a copy of the GNU General Public License
along with SymThompson. If not, see <http://www.gnu.org/licenses/>.
"""

import json

# Finite words are tuples of letters 0..n-1. Tuple ordering is the dictionary
# order (a proper prefix sorts first), so no comparison code is needed for it.

U_PREFIX_OF_V = "u-prefix-of-v"
V_PREFIX_OF_U = "v-prefix-of-u"
INCOMPARABLE = "incomparable"

LT, EQ, GT = "lt", "eq", "gt"

def check_word(w, n):
    """Return w as a tuple of ints, raising ValueError on a letter outside 0..n-1."""
    try:
        w = list(w)
    except TypeError:
        raise ValueError("word must be a sequence of letters, got {!r}.".format(w))
    letters = []
    for a in w:
        try:
            i = int(a)
        except (TypeError, ValueError):
            raise ValueError("letter {!r} is not an integer.".format(a))
        if isinstance(a, bool) or i != a:
            raise ValueError("letter {!r} is not an integer.".format(a))
        if i < 0 or i >= n:
            raise ValueError("letter {} is outside the alphabet 0..{}.".format(i, n - 1))
        letters.append(i)
    return tuple(letters)

def primitive_root(w):
    """Shortest word r with w = r^j."""
    L = len(w)
    for d in range(1, L + 1):
        if L % d == 0 and w[:d] * (L // d) == w:
            return w[:d]
    return w

class EvWord(object):
    """Eventually periodic infinite word head(period)(period)... over n letters.

    The representation is canonical: the period is primitive and the head
    does not end with the last letter of the period, so two EvWords describe
    the same point exactly when their fields agree.
    """
    __slots__ = ("n", "head", "period")

    def __init__(self, n, head, period):
        if n < 2:
            raise ValueError("alphabet size must be at least 2.")
        head = check_word(head, n)
        period = check_word(period, n)
        if len(period) == 0:
            raise ValueError("period must be nonempty.")
        period = primitive_root(period)
        # Absorb trailing head letters into a rotation of the period.
        while head and head[-1] == period[-1]:
            period = (head[-1],) + period[:-1]
            head = head[:-1]
        self.n = n
        self.head = head
        self.period = period

    def letter(self, i):
        if i < len(self.head):
            return self.head[i]
        return self.period[(i - len(self.head)) % len(self.period)]

    def take(self, k):
        """The length-k prefix as a finite word."""
        if k <= len(self.head):
            return self.head[:k]
        rest = k - len(self.head)
        reps = rest // len(self.period) + 1
        return self.head + (self.period * reps)[:rest]

    def drop(self, k):
        """The point with its first k letters removed."""
        if k <= len(self.head):
            return EvWord(self.n, self.head[k:], self.period)
        r = (k - len(self.head)) % len(self.period)
        return EvWord(self.n, (), self.period[r:] + self.period[:r])

    def __eq__(self, other):
        return isinstance(other, EvWord) and self.n == other.n and \
               self.head == other.head and self.period == other.period

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.n, self.head, self.period))

    def __repr__(self):
        return "EvWord({}, {!r}, {!r})".format(self.n, self.head, self.period)

    def __str__(self):
        return format_point(self)

def concat(u, v):
    """u followed by v; v may be finite or an EvWord."""
    u = tuple(u)
    if isinstance(v, EvWord):
        check_word(u, v.n)
        return EvWord(v.n, u + v.head, v.period)
    return u + tuple(v)

def prefix_compare(u, v, n=None):
    """Prefix relation of u to v; with n given both words are checked against the alphabet."""
    if isinstance(v, EvWord):
        if n is not None and n != v.n:
            raise ValueError("Dimension mismatch: alphabet of size {} and point over {} letters.".format(n, v.n))
        u = check_word(u, v.n)
        return U_PREFIX_OF_V if v.take(len(u)) == u else INCOMPARABLE
    u, v = _words(u, v, n)
    if v[:len(u)] == u:
        return U_PREFIX_OF_V
    if u[:len(v)] == v:
        return V_PREFIX_OF_U
    return INCOMPARABLE

def is_prefix(u, v, n=None):
    return prefix_compare(u, v, n) == U_PREFIX_OF_V

def dict_compare(u, v, n=None):
    u, v = _words(u, v, n)
    if u < v:
        return LT
    if u > v:
        return GT
    return EQ

def _words(u, v, n):
    if n is None:
        return tuple(u), tuple(v)
    return check_word(u, n), check_word(v, n)

def ev_equal(x, y):
    return x == y

def format_word(w, n):
    """Digit string for n <= 10, bracketed list otherwise."""
    if n <= 10:
        return "".join(str(a) for a in w)
    return "[" + ",".join(str(a) for a in w) + "]"

def parse_word(text, n):
    if isinstance(text, (list, tuple)):
        return check_word(text, n)
    if not isinstance(text, str):
        raise ValueError("cannot parse word {!r}.".format(text))
    text = text.strip()
    if text in ("", "e", "ε"):
        return ()
    if text.startswith("["):
        return check_word(json.loads(text), n)
    if n > 10:
        raise ValueError("words over more than 10 letters must be written as [a,b,...].")
    if not text.isdigit():
        raise ValueError("cannot parse word {!r}.".format(text))
    return check_word([int(c) for c in text], n)

def format_point(x):
    return "{}({})".format(format_word(x.head, x.n), format_word(x.period, x.n))

def parse_point(text, n):
    """Parse 'head(period)', e.g. '10(01)'."""
    text = text.strip()
    if not text.endswith(")") or "(" not in text:
        raise ValueError("point {!r} must have the form head(period).".format(text))
    i = text.index("(")
    return EvWord(n, parse_word(text[:i], n), parse_word(text[i + 1:-1], n))
