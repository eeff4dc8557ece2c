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

from symthompson.codes import spref
from symthompson.perms import Perm, PermGroup, perm_act

class RootGroup(object):
    """Permutation group induced by G on an invariant word set S.

    Words are indexed by dictionary order; sigma in G induces the
    permutation i -> index of sigma(s_i).
    """

    def __init__(self, G, words, perms, mapping):
        self.G = G
        self.words = words
        self.perms = perms
        self._lift = mapping
        self._lower = {v: k for k, v in mapping.items()}

    @property
    def degree(self):
        return len(self.words)

    def lift(self, sigma):
        """G -> root group."""
        try:
            return self._lift[sigma]
        except KeyError:
            raise ValueError("{} is not an element of G.".format(sigma))

    def lower(self, perm):
        """Root group -> G."""
        try:
            return self._lower[perm]
        except KeyError:
            raise ValueError("{} is not an element of the root group.".format(perm))

    def is_isomorphism(self):
        if len(self._lower) != self.G.order or self.perms.order != self.G.order:
            return False
        return all(self._lift[a * b] == self._lift[a] * self._lift[b]
                   for a in self.G.elements for b in self.G.elements)

def root_group(G, S):
    """Root group of G on the word set S (a PrefixCode or any collection of words).

    S must be G-invariant and pairwise prefix-incomparable.
    """
    S = [tuple(w) for w in S]
    words = sorted(set(S))
    if len(words) != len(S):
        raise ValueError("word set contains duplicates.")
    if spref(words) & set(words):
        raise ValueError("words must be pairwise prefix-incomparable.")
    index = {w: i for i, w in enumerate(words)}
    mapping = {}
    for sigma in G.elements:
        try:
            mapping[sigma] = Perm([index[perm_act(sigma, w)] for w in words])
        except KeyError:
            raise ValueError("word set is not invariant under G.")
    perms = PermGroup([mapping[g] for g in G.generators], degree=len(words))
    if perms.order != G.order:
        raise ValueError("G does not act faithfully on the word set.")
    return RootGroup(G, tuple(words), perms, mapping)
