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

import bisect
import logging

from symthompson.codes import is_complete, spref
from symthompson.perms import Perm, extend
from symthompson.tables import Column, Table
from symthompson.words import check_word, format_word

logger = logging.getLogger(__name__)

def successor_count(m, n):
    """k = (n - m)/(m - 1), the number of successors per code word."""
    if m < 2:
        raise ValueError("m must be at least 2.")
    if n <= m or (n - m) % (m - 1) != 0:
        raise ValueError("n = {} is not of the form m + k(m - 1) with k >= 1 for m = {}.".format(n, m))
    return (n - m) // (m - 1)

def new_letter(m, k, j, i):
    """Letter of the i-th successor owned by a child labelled j >= 1."""
    return m - 1 + (m - 1 - j) * k + i

class SuccessorAssignment(object):
    """The k successors of each word of an ordered code, in assignment order."""

    def __init__(self, code, succ, m, n):
        self.code = tuple(code)
        self.m = m
        self.n = n
        self._succ = succ

    def __getitem__(self, w):
        return self._succ[tuple(w)]

    def successor(self, w, i):
        """The i-th successor of w, 1 <= i <= k."""
        return self._succ[tuple(w)][i - 1]

    def rows(self):
        return [(w, self._succ[w]) for w in self.code]

    def format(self):
        width = max(len(format_word(w, self.n)) for w in self.code)
        return "\n".join("{}  {}".format(format_word(w, self.n).ljust(width),
                                         " ".join(format_word(s, self.n) for s in succ))
                         for w, succ in self.rows())

def _check_code(ordered_code, m):
    code = [check_word(w, m) for w in ordered_code]
    lead = m - 1
    for w in code:
        if not w or w[0] != lead:
            raise ValueError("word {} does not start with the letter {}.".format(format_word(w, m), lead))
    if not is_complete([w[1:] for w in code], m):
        raise ValueError("code is not a complete prefix code below the letter {}.".format(lead))
    return code

def successors_inductive(ordered_code, m, n):
    """Assign successors greedily in the given order.

    Each word takes, k times, the dictionary-least unassigned candidate
    greater than itself; candidates are x || a_c with x a strict prefix of
    some code word and m <= c < n.
    """
    k = successor_count(m, n)
    code = _check_code(ordered_code, m)
    candidates = sorted(x + (c,) for x in spref(code) for c in range(m, n))
    assigned = set()
    succ = {}
    for p in code:
        chosen = []
        pos = bisect.bisect_right(candidates, p)
        for i in range(k):
            while pos < len(candidates) and candidates[pos] in assigned:
                pos += 1
            if pos == len(candidates):
                raise ValueError("no unassigned successor greater than {} in this order.".format(format_word(p, n)))
            assigned.add(candidates[pos])
            chosen.append(candidates[pos])
        succ[p] = tuple(chosen)
    return SuccessorAssignment(code, succ, m, n)

def successors_formula(w, m, n, i):
    """(u a_j a_0^t)'_i = u a_{m-1+(m-1-j)k+i} where a_j is the last nonzero letter."""
    k = successor_count(m, n)
    if i < 1 or i > k:
        raise ValueError("successor index {} outside 1..{}.".format(i, k))
    w = check_word(w, m)
    if not w or w[0] != m - 1:
        raise ValueError("word {} does not start with the letter {}.".format(format_word(w, m), m - 1))
    pos = max(idx for idx, a in enumerate(w) if a != 0)
    return w[:pos] + (new_letter(m, k, w[pos], i),)

def verify_expansion_lemma(ordered_code, m, n, index):
    """Check how successors change when the word at index is expanded.

    The children are inserted in reverse dictionary order. Child p a_j with
    j >= 1 must get p a_{m-1+(m-1-j)k+i}, child p a_0 must inherit the
    successors of p, and every other word must keep its successors.
    """
    k = successor_count(m, n)
    before = successors_inductive(ordered_code, m, n)
    code = list(before.code)
    if index < 0 or index >= len(code):
        raise ValueError("index {} out of range 0..{}.".format(index, len(code) - 1))
    p = code[index]
    children = [p + (a,) for a in range(m - 1, -1, -1)]
    after = successors_inductive(code[:index] + children + code[index + 1:], m, n)
    for j in range(1, m):
        expected = tuple(p + (new_letter(m, k, j, i),) for i in range(1, k + 1))
        if after[p + (j,)] != expected:
            return False
    if after[p + (0,)] != before[p]:
        return False
    return all(after[q] == before[q] for q in code if q != p)

class AlgContext(object):
    """Data of the embedding V_m(G) -> V_n(G_ext).

    Keyword arguments:
    q_order -- "induced" assigns range-side successors in the order the
    domain's reverse dictionary order induces on the range words;
    "dict" uses the range words' own reverse dictionary order.
    """

    def __init__(self, m, n, G, *args, **kwargs):
        q_order = kwargs.pop("q_order", "induced")

        # Validate parameters.
        self.k = successor_count(m, n)
        if G.degree != m:
            raise ValueError("G has degree {}, expected m = {}.".format(G.degree, m))
        if q_order not in ["induced", "dict"]:
            raise ValueError("q_order must be induced or dict.")

        self.m = m
        self.n = n
        self.G = G
        self.Hext = G.extend(n)
        self.q_order = q_order

    def embed(self, g):
        return embed_alg(self, g)

def embed_alg(ctx, g):
    """Image of g in V_m(G) as an element of V_n(G_ext).

    Columns are, in order: a_j -> a_j for j < m-1; a_{m-1} p_i -> a_{m-1} q_i;
    the successor columns (a_{m-1} p_i)'_j -> (a_{m-1} q_i)'_j for j = 1..k;
    and a_j -> a_j for m+k <= j < n.
    """
    if g.n != ctx.m or g.H != ctx.G:
        raise ValueError("element does not belong to V_{}(G) of this context.".format(ctx.m))
    m, n, k = ctx.m, ctx.n, ctx.k
    lead = (m - 1,)
    cols = g.columns

    order = sorted(range(len(cols)), key=lambda i: cols[i].p, reverse=True)
    after_p = successors_inductive([lead + cols[i].p for i in order], m, n)
    q_words = [lead + cols[i].q for i in order]
    if ctx.q_order == "dict":
        q_words = sorted(q_words, reverse=True)
    after_q = successors_inductive(q_words, m, n)

    e = Perm.identity(n)
    ext = dict((s, extend(s, n)) for s in ctx.G.elements)
    columns = [Column((j,), e, (j,), e) for j in range(m - 1)]
    columns += [Column(lead + c.p, ext[c.sigma], lead + c.q, ext[c.tau]) for c in cols]
    for j in range(k):
        columns += [Column(after_p[lead + c.p][j], ext[c.sigma], after_q[lead + c.q][j], ext[c.tau]) for c in cols]
    columns += [Column((j,), e, (j,), e) for j in range(m + k, n)]
    logger.debug("embedded %d columns of V_%d as %d columns of V_%d", len(cols), m, len(columns), n)
    return Table(n, ctx.Hext, columns)
