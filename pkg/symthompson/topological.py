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

import itertools
import logging

from symthompson.codes import PrefixCode, Triple
from symthompson.perms import find_cyclic_isomorphism, perm_act
from symthompson.roots import root_group
from symthompson.tables import Column, Table
from symthompson.words import EvWord

logger = logging.getLogger(__name__)

class TopoContext(object):
    """Data of the embedding V_n(H) -> V_m(G) through a solution code S.

    Letter i of the n-letter alphabet is spelled as the word
    letter_map[i] = S[conj(i)] over m letters, where conj H conj^-1 is the
    root group of G on S.
    """

    def __init__(self, m, n, G, H, S, root, conj):
        self.m = m
        self.n = n
        self.G = G
        self.H = H
        self.S = S
        self.root = root
        self.conj = conj
        self.letter_map = tuple(S.words[conj(i)] for i in range(n))

    def translate_word(self, w):
        return tuple(itertools.chain.from_iterable(self.letter_map[a] for a in w))

    def translate_point(self, x):
        if not isinstance(x, EvWord) or x.n != self.n:
            raise ValueError("point must be an EvWord over {} letters.".format(self.n))
        return EvWord(self.m, self.translate_word(x.head), self.translate_word(x.period))

    def lower(self, sigma):
        """The element of G that acts on S as sigma acts on the letters."""
        return self.root.lower(sigma.conjugate(self.conj))

    def embed(self, g):
        return embed_topo(self, g)

def build_context(m, n, G, H, S, conj=None):
    """Check the data of a topological embedding and return its TopoContext.

    S may be a PrefixCode over m letters or a collection of words. When conj
    is None a conjugator from H to the root group is searched for.
    """
    if H.degree != n:
        raise ValueError("H has degree {}, expected n = {}.".format(H.degree, n))
    Triple(m, n, G)
    if not isinstance(S, PrefixCode):
        S = PrefixCode(S, m)
    if len(S) != n:
        raise ValueError("code has {} words, expected n = {}.".format(len(S), n))
    if not S.is_invariant(G):
        raise ValueError("code is not invariant under G.")
    root = root_group(G, S)
    if conj is None:
        conj = find_cyclic_isomorphism(H, root.perms)
        if conj is None:
            raise ValueError("H is not cyclically isomorphic to the root group of G on the code.")
    elif conj.degree != n or H.conjugate(conj) != root.perms:
        raise ValueError("conj does not conjugate H onto the root group.")
    ctx = TopoContext(m, n, G, H, S, root, conj)

    for sigma in H.generators:
        g = ctx.lower(sigma)
        for i in range(n):
            if ctx.letter_map[sigma(i)] != perm_act(g, ctx.letter_map[i]):
                raise ValueError("letter map is not aligned with {}.".format(sigma))
    logger.debug("topological context m=%d n=%d conj=%s", m, n, conj)
    return ctx

def embed_topo(ctx, g):
    """Image of g in V_n(H) as an element of V_m(G)."""
    if g.n != ctx.n or g.H != ctx.H:
        raise ValueError("element does not belong to V_{}(H) of this context.".format(ctx.n))
    columns = [Column(ctx.translate_word(c.p), ctx.lower(c.sigma), ctx.translate_word(c.q), ctx.lower(c.tau))
               for c in g.columns]
    return Table(ctx.m, ctx.G, columns)

def translate_point(ctx, x):
    return ctx.translate_point(x)
