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
from collections import OrderedDict, namedtuple

import numpy as np

from symthompson.codes import PrefixCode, common_refinement, is_complete
from symthompson.perms import Perm, perm_act
from symthompson.words import EvWord, concat, format_word

logger = logging.getLogger(__name__)

# A column maps p || sigma(u) to q || tau(u) for every infinite word u.
Column = namedtuple("Column", ["p", "sigma", "q", "tau"])

def column_key(col):
    return (col.p, col.sigma.key, col.q, col.tau.key)

def expand_col(col, n):
    """The n children of a column, child j mapping p sigma(j) to q tau(j)."""
    return [Column(col.p + (col.sigma(j),), col.sigma, col.q + (col.tau(j),), col.tau) for j in range(n)]

def refine_columns(columns, words, n, side="p"):
    """Expand columns until the chosen row consists of the given words."""
    words = set(words)
    result = []
    stack = list(reversed(columns))
    while stack:
        col = stack.pop()
        if getattr(col, side) in words:
            result.append(col)
        else:
            stack.extend(reversed(expand_col(col, n)))
    return result

class Table(object):
    """Element of V_n(H) written as columns (p_i, sigma_i, q_i, tau_i).

    The domain row P = {p_i} and range row Q = {q_i} are complete prefix
    codes over n letters and every permutation lies in H.
    """

    def __init__(self, n, H, columns, check=True):
        self.n = n
        self.H = H
        self.columns = tuple(Column(tuple(c[0]), c[1], tuple(c[2]), c[3]) for c in columns)
        if check:
            errors = self.validate()
            if errors:
                raise ValueError("invalid table: " + " ".join(errors))
        self._domain = {c.p: c for c in self.columns}
        self._depth = max(len(c.p) for c in self.columns) if self.columns else 0

    @classmethod
    def identity(cls, n, H):
        e = Perm.identity(n)
        return cls(n, H, [Column((), e, (), e)])

    def validate(self):
        """List of problems with the table; empty when it is valid."""
        errors = []
        if self.H.degree != self.n:
            errors.append("H has degree {}, expected n = {}.".format(self.H.degree, self.n))
        if not self.columns:
            errors.append("table has no columns.")
            return errors
        for i, col in enumerate(self.columns):
            for name in ("sigma", "tau"):
                perm = getattr(col, name)
                if perm.degree != self.n:
                    errors.append("column {}: {} has degree {}, expected {}.".format(i, name, perm.degree, self.n))
                elif perm not in self.H:
                    errors.append("column {}: {} = {} is not in H.".format(i, name, perm))
        if not is_complete([c.p for c in self.columns], self.n):
            errors.append("domain row is not a complete prefix code.")
        if not is_complete([c.q for c in self.columns], self.n):
            errors.append("range row is not a complete prefix code.")
        return errors

    def __len__(self):
        return len(self.columns)

    def __repr__(self):
        cols = ", ".join("({}, {}, {}, {})".format(format_word(c.p, self.n) or "e", c.sigma,
                                                   format_word(c.q, self.n) or "e", c.tau)
                         for c in self.columns)
        return "Table(n={}, [{}])".format(self.n, cols)

    def __eq__(self, other):
        # Structural: same columns up to order.
        return isinstance(other, Table) and self.n == other.n and self.H == other.H and \
               sorted(self.columns, key=column_key) == sorted(other.columns, key=column_key)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.n, tuple(sorted(column_key(c) for c in self.columns))))

    def __mul__(self, other):
        return compose(self, other)

    def _new(self, columns):
        return Table(self.n, self.H, columns, check=False)

    def domain_code(self):
        return PrefixCode([c.p for c in self.columns], self.n)

    def range_code(self):
        return PrefixCode([c.q for c in self.columns], self.n)

    def evaluate(self, x):
        """Image of the point x: p || w goes to q || tau(sigma^-1(w))."""
        if not isinstance(x, EvWord) or x.n != self.n:
            raise ValueError("point must be an EvWord over {} letters.".format(self.n))
        for k in range(self._depth + 1):
            col = self._domain.get(x.take(k))
            if col is not None:
                u = perm_act(col.sigma.inverse(), x.drop(k))
                return concat(col.q, perm_act(col.tau, u))
        raise ValueError("domain row does not cover {}.".format(x))

    def expand_column(self, i):
        if i < 0 or i >= len(self.columns):
            raise ValueError("column index {} out of range 0..{}.".format(i, len(self.columns) - 1))
        cols = list(self.columns)
        cols[i:i + 1] = expand_col(cols[i], self.n)
        return self._new(cols)

    def reduce_once(self):
        """Merge one group of n sibling columns into their parent column.

        Returns the table itself when no group is reducible.
        """
        groups = OrderedDict()
        for idx, col in enumerate(self.columns):
            if col.p and col.q:
                groups.setdefault((col.p[:-1], col.q[:-1], col.sigma, col.tau), []).append(idx)
        for (p, q, sigma, tau), members in groups.items():
            if len(members) != self.n:
                continue
            sigma_inv = sigma.inverse()
            letters = set()
            for idx in members:
                col = self.columns[idx]
                j = sigma_inv(col.p[-1])
                if col.q[-1] != tau(j):
                    break
                letters.add(j)
            else:
                if len(letters) == self.n:
                    drop = set(members)
                    cols = [c for idx, c in enumerate(self.columns) if idx not in drop]
                    cols.insert(members[0], Column(p, sigma, q, tau))
                    return self._new(cols)
        return self

    def reduce(self):
        t = self
        while True:
            r = t.reduce_once()
            if r is t:
                return t
            t = r

    def push_down(self):
        e = Perm.identity(self.n)
        return self._new([Column(c.p, e, c.q, c.tau * c.sigma.inverse()) for c in self.columns])

    def push_up(self):
        e = Perm.identity(self.n)
        return self._new([Column(c.p, c.sigma * c.tau.inverse(), c.q, e) for c in self.columns])

    def inverse(self):
        return self._new([Column(c.q, c.tau, c.p, c.sigma) for c in self.columns])

    def refine_domain(self, code):
        return self._new(refine_columns(self.columns, code.words, self.n, side="p"))

    def refine_range(self, code):
        return self._new(refine_columns(self.columns, code.words, self.n, side="q"))

    def canonical(self):
        """Pushed down, reduced to exhaustion, columns sorted by domain word."""
        t = self.push_down().reduce()
        logger.debug("reduced %d columns to %d", len(self.columns), len(t.columns))
        return self._new(sorted(t.columns, key=column_key))

    def is_identity(self):
        return all(c.p == c.q and c.tau.is_identity() for c in self.push_down().columns)

    def equals(self, other):
        return equals(self, other)

def compose(v, u):
    """The element v o u (u applied first)."""
    if v.n != u.n:
        raise ValueError("Dimension mismatch: V_{} and V_{}.".format(v.n, u.n))
    if v.H != u.H:
        raise ValueError("tables act with different groups H.")
    S = common_refinement(u.range_code(), v.domain_code())
    u = u.refine_range(S).push_up()
    v = v.refine_domain(S).push_down()
    after = {c.p: c for c in v.columns}
    columns = []
    for c in u.columns:
        d = after[c.q]
        columns.append(Column(c.p, c.sigma, d.q, d.tau))
    return Table(u.n, u.H, columns, check=False)

def inverse(t):
    return t.inverse()

def equals(g, h):
    """True when g and h define the same homeomorphism."""
    if g.n != h.n:
        raise ValueError("Dimension mismatch: V_{} and V_{}.".format(g.n, h.n))
    if g.H != h.H:
        raise ValueError("tables act with different groups H.")
    return compose(g, h.inverse()).is_identity()

def random_code(n, expansions, rng):
    leaves = [()]
    for _ in range(expansions):
        w = leaves.pop(rng.randint(len(leaves)))
        leaves.extend(w + (a,) for a in range(n))
    return sorted(leaves)

def random_element(n, H, depth=3, seed=None):
    """Random table with at most depth expansions per row.

    seed -- an int, None, or a numpy RandomState to draw from.
    """
    if depth < 0:
        raise ValueError("depth must be a non-negative integer.")
    if H.degree != n:
        raise ValueError("H has degree {}, expected n = {}.".format(H.degree, n))
    rng = seed if isinstance(seed, np.random.RandomState) else np.random.RandomState(seed)
    expansions = rng.randint(depth + 1)
    P = random_code(n, expansions, rng)
    Q = random_code(n, expansions, rng)
    order = rng.permutation(len(Q))
    elements = H.elements
    columns = []
    for i, p in enumerate(P):
        sigma = elements[rng.randint(len(elements))]
        tau = elements[rng.randint(len(elements))]
        columns.append(Column(p, sigma, Q[order[i]], tau))
    return Table(n, H, columns, check=False)
