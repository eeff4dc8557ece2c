"""
Copyright 2026 The SymThompson Developers

This file is part of SymThompson.

SymThompson is free software: you can redistribute it and/or modify
it under the terms of the GNU General Public License as published by
the Free Software Foundation, either version 3 of the License, or
(at your option) any later version.

SymThompson is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the
GNU General Public License for more details.

You should have received a copy of the GNU General Public License
along with SymThompson. If not, see <http://www.gnu.org/licenses/>.
"""

# Base class for unit tests.
from unittest import TestCase

from symthompson.tables import Column, Table, compose, equals, random_code
from symthompson.utilities import parse_perm
from symthompson.verify import random_point
from symthompson.words import EvWord, parse_point, parse_word

class BaseTest(TestCase):
    # Words and points from their text forms.
    def w(self, text, n=10):
        return parse_word(text, n)

    def pt(self, text, n):
        return parse_point(text, n)

    def table(self, n, H, rows):
        """Table from rows of text (p, sigma, q, tau)."""
        columns = [Column(self.w(p, n), parse_perm(s, n), self.w(q, n), parse_perm(t, n)) for p, s, q, t in rows]
        return Table(n, H, columns)

    def assertElementsEqual(self, g, h):
        self.assertTrue(equals(g, h), "{} and {} are different elements".format(g, h))

    def assertElementsNotEqual(self, g, h):
        self.assertFalse(equals(g, h), "{} and {} are the same element".format(g, h))

    def witness(self, g, h):
        """A point xi with g(xi) != h(xi), or None when g equals h."""
        f = compose(g, h.inverse()).push_down()
        for c in f.columns:
            for a in (0, 1):
                x = EvWord(g.n, c.p, (a,))
                if f.evaluate(x) != x:
                    return h.inverse().evaluate(x)
        return None

    def random_code_below(self, m, expansions, rng):
        """Complete code under the letter m-1, in reverse dictionary order."""
        return sorted(((m - 1,) + w for w in random_code(m, expansions, rng)), reverse=True)

    def random_points(self, n, count, rng):
        return [random_point(n, rng) for _ in range(count)]
