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

import logging
from collections import deque

from symthompson.perms import perm_act
from symthompson.words import check_word, format_word

logger = logging.getLogger(__name__)

def spref(words):
    """Strict prefixes of the given words, i.e. the internal nodes of their tree."""
    return set(w[:i] for w in words for i in range(len(w)))

def is_complete(words, n):
    """True when words are the leaves of a finite n-ary tree."""
    words = [tuple(w) for w in words]
    leaves = set(words)
    if not leaves or len(leaves) != len(words):
        return False
    if any(a < 0 or a >= n for w in leaves for a in w):
        return False
    internal = spref(leaves)
    if internal & leaves:
        return False
    for u in internal:
        for a in range(n):
            child = u + (a,)
            if child not in internal and child not in leaves:
                return False
    return True

def is_invariant(words, G):
    """True when the letterwise action of every element of G permutes words."""
    words = set(tuple(w) for w in words)
    return all(perm_act(g, w) in words for g in G.generators for w in words)

class PrefixCode(object):
    """Complete prefix code over n letters, words kept in dictionary order."""

    def __init__(self, words, n):
        words = [check_word(w, n) for w in words]
        if not is_complete(words, n):
            raise ValueError("{} is not a complete prefix code over {} letters.".format(
                [format_word(w, n) for w in words], n))
        self.n = n
        self.words = tuple(sorted(words))
        self._index = {w: i for i, w in enumerate(self.words)}

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __contains__(self, w):
        return tuple(w) in self._index

    def __eq__(self, other):
        return isinstance(other, PrefixCode) and self.n == other.n and self.words == other.words

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.n, self.words))

    def __repr__(self):
        return "PrefixCode([{}], n={})".format(", ".join(format_word(w, self.n) or "e" for w in self.words), self.n)

    def index(self, w):
        return self._index[tuple(w)]

    def spref(self):
        return spref(self.words)

    def depth(self):
        return max(len(w) for w in self.words)

    def expand(self, w):
        """Replace the word w by its n children."""
        w = tuple(w)
        if w not in self._index:
            raise ValueError("{} is not a word of the code.".format(format_word(w, self.n)))
        words = [u for u in self.words if u != w] + [w + (a,) for a in range(self.n)]
        return PrefixCode(words, self.n)

    def act(self, sigma):
        return PrefixCode([perm_act(sigma, w) for w in self.words], self.n)

    def is_invariant(self, G):
        if G.degree != self.n:
            raise ValueError("Dimension mismatch: group of degree {} on a code over {} letters.".format(G.degree, self.n))
        return is_invariant(self.words, G)

    def find_prefix(self, x):
        """The unique word of the code that is a prefix of the point x."""
        if x.n != self.n:
            raise ValueError("Dimension mismatch: point over {} letters.".format(x.n))
        for k in range(self.depth() + 1):
            w = x.take(k)
            if w in self._index:
                return w
        raise ValueError("no prefix of {} in the code.".format(x))

def expand(code, w):
    return code.expand(w)

def common_refinement(P, Q):
    """Coarsest complete prefix code refining both P and Q."""
    if P.n != Q.n:
        raise ValueError("Dimension mismatch: codes over {} and {} letters.".format(P.n, Q.n))
    n = P.n
    internal = P.spref() | Q.spref()
    if not internal:
        return PrefixCode([()], n)
    leaves = set(u + (a,) for u in internal for a in range(n)) - internal
    return PrefixCode(leaves, n)

class Triple(object):
    """Admissible (m, n, G): 2 <= m <= n, (m-1) | (n-1), G <= Sym(m)."""

    def __init__(self, m, n, G):
        if m < 2:
            raise ValueError("m must be at least 2.")
        if n < m:
            raise ValueError("n must be at least m.")
        if (n - 1) % (m - 1) != 0:
            raise ValueError("n - 1 = {} is not divisible by m - 1 = {}.".format(n - 1, m - 1))
        if G.degree != m:
            raise ValueError("G has degree {}, expected m = {}.".format(G.degree, m))
        self.m = m
        self.n = n
        self.G = G

    def __repr__(self):
        return "Triple({}, {}, {!r})".format(self.m, self.n, self.G)

def leaf_orbits(words, G):
    """G-orbits of an invariant word set, each sorted, in order of their least word."""
    done, orbits = set(), []
    for w in sorted(words):
        if w in done:
            continue
        orbit = sorted(set(perm_act(g, w) for g in G.elements))
        done.update(orbit)
        orbits.append(orbit)
    return orbits

def find_solution(triple, max_depth=4, method="orbit"):
    """Search for a G-invariant complete prefix code of size n over m letters.

    Breadth-first over codes reachable from the root by expansions, words no
    longer than max_depth. Returns a PrefixCode, or None when no solution
    exists within the depth bound.

    method -- "orbit" expands whole G-orbits of leaves, so every visited code
    is invariant; "leaf" expands single leaves and filters for invariance.
    """
    # Validate parameters.
    if max_depth < 0:
        raise ValueError("max_depth must be a non-negative integer.")
    if method not in ["orbit", "leaf"]:
        raise ValueError("method must be orbit or leaf.")

    m, n, G = triple.m, triple.n, triple.G
    start = frozenset([()])
    queue = deque([start])
    seen = {start}
    while queue:
        code = queue.popleft()
        if len(code) == n and (method == "orbit" or is_invariant(code, G)):
            logger.debug("solution of size %d found after visiting %d codes", n, len(seen))
            return PrefixCode(code, m)
        if method == "orbit":
            groups = leaf_orbits(code, G)
        else:
            groups = [[w] for w in sorted(code)]
        for group in groups:
            if len(group[0]) >= max_depth or len(code) + len(group) * (m - 1) > n:
                continue
            child = (code - set(group)) | set(w + (a,) for w in group for a in range(m))
            child = frozenset(child)
            if child not in seen:
                seen.add(child)
                queue.append(child)
    logger.debug("no solution up to depth %d after visiting %d codes", max_depth, len(seen))
    return None
