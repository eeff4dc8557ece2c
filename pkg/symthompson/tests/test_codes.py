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

import numpy as np

from symthompson.codes import (PrefixCode, Triple, common_refinement, expand, find_solution, is_complete,
                               is_invariant, spref)
from symthompson.perms import Perm, PermGroup
from symthompson.tables import random_code
from symthompson.tests.base_test import BaseTest
from symthompson.utilities import parse_perm

class TestCodes(BaseTest):
    """Unit tests for complete prefix codes and the solution search."""

    def setUp(self):
        self.rng = np.random.RandomState(1)
        self.swap = PermGroup([parse_perm("(0 1)", 3)])
        self.cycle = PermGroup([parse_perm("(0 1 2)", 3)])

    def code(self, text, n):
        return PrefixCode([self.w(t) for t in text.split(",")], n)

    def test_is_complete(self):
        self.assertTrue(is_complete([self.w(t) for t in ["0", "1", "2"]], 3))
        self.assertTrue(is_complete([()], 4))
        self.assertTrue(is_complete([self.w(t) for t in ["20", "210", "211", "212", "22", "0", "1"]], 3))
        self.assertFalse(is_complete([self.w(t) for t in ["0", "11"]], 2))
        self.assertFalse(is_complete([self.w(t) for t in ["0", "0", "1"]], 2))
        self.assertFalse(is_complete([(), self.w("0"), self.w("1")], 2))
        self.assertFalse(is_complete([], 2))
        self.assertFalse(is_complete([self.w(t) for t in ["00", "01", "10", "11", "2"]], 3))
        self.assertRaises(ValueError, PrefixCode, [self.w("0")], 2)

    def test_expand(self):
        P = self.code("0,1", 2)
        self.assertEqual(expand(P, self.w("1")), self.code("0,10,11", 2))
        self.assertEqual(PrefixCode([()], 3).expand(()), self.code("0,1,2", 3))
        self.assertEqual(self.code("0,10,11", 2).expand(self.w("10")), self.code("0,100,101,11", 2))
        self.assertRaises(ValueError, P.expand, self.w("00"))

    def test_spref(self):
        self.assertEqual(spref([self.w(t) for t in ["20", "210", "211", "212", "22"]]),
                         set([(), (2,), (2, 1)]))
        self.assertEqual(self.code("0,1,2", 3).spref(), set([()]))
        self.assertEqual(PrefixCode([()], 3).spref(), set())

    def test_size_and_action(self):
        # |P| = 1 mod (n - 1), and letterwise actions preserve completeness.
        for n in [2, 3, 5]:
            G = PermGroup.symmetric(n)
            for _ in range(20):
                P = PrefixCode(random_code(n, self.rng.randint(6), self.rng), n)
                self.assertEqual(len(P) % (n - 1), 1 % (n - 1))
                sigma = G.elements[self.rng.randint(G.order)]
                self.assertEqual(len(P.act(sigma)), len(P))

    def test_common_refinement(self):
        P = self.code("0,1", 2)
        Q = self.code("00,01,1", 2)
        self.assertEqual(common_refinement(P, Q), Q)
        self.assertEqual(common_refinement(self.code("0,10,11", 2), Q), self.code("00,01,10,11", 2))
        self.assertEqual(common_refinement(PrefixCode([()], 2), PrefixCode([()], 2)), PrefixCode([()], 2))
        self.assertRaises(ValueError, common_refinement, P, self.code("0,1,2", 3))

        # The refinement refines both and is coarsest: every internal node comes from P or Q.
        for _ in range(30):
            P = PrefixCode(random_code(3, self.rng.randint(5), self.rng), 3)
            Q = PrefixCode(random_code(3, self.rng.randint(5), self.rng), 3)
            R = common_refinement(P, Q)
            self.assertTrue(P.spref() <= R.spref())
            self.assertTrue(Q.spref() <= R.spref())
            self.assertEqual(R.spref(), P.spref() | Q.spref())

    def test_find_prefix(self):
        P = self.code("0,10,11", 2)
        self.assertEqual(P.find_prefix(self.pt("1(0)", 2)), (1, 0))
        self.assertEqual(P.find_prefix(self.pt("(01)", 2)), (0,))

    def test_is_invariant(self):
        self.assertTrue(is_invariant([self.w(t) for t in ["00", "01", "10", "11", "2"]], self.swap))
        nine = [(a, b) for a in range(3) for b in range(3)]
        self.assertTrue(is_invariant(nine, self.cycle))
        self.assertFalse(is_invariant([self.w(t) for t in ["00", "01", "02", "1", "2"]], self.cycle))
        self.assertTrue(self.code("0,1,20,21,22", 3).is_invariant(self.swap))
        self.assertFalse(self.code("0,1,20,21,22", 3).is_invariant(self.cycle))

    def test_triple(self):
        Triple(3, 5, self.swap)
        Triple(2, 7, PermGroup.trivial(2))
        self.assertRaises(ValueError, Triple, 3, 4, self.swap)
        self.assertRaises(ValueError, Triple, 1, 4, PermGroup.trivial(1))
        self.assertRaises(ValueError, Triple, 3, 2, self.swap)
        self.assertRaises(ValueError, Triple, 2, 3, self.swap)

    def test_find_solution(self):
        S = find_solution(Triple(3, 5, self.swap), max_depth=2)
        self.assertEqual(S, self.code("0,1,20,21,22", 3))

        S = find_solution(Triple(3, 9, self.cycle), max_depth=2)
        self.assertEqual(S.words, tuple((a, b) for a in range(3) for b in range(3)))

        # Orbits of the 3-cycle have size 1 or 3, so sizes grow by 2 or 6 from 3.
        self.assertIsNone(find_solution(Triple(3, 5, self.cycle), max_depth=6))

        S = find_solution(Triple(2, 3, PermGroup.trivial(2)), max_depth=2)
        self.assertEqual(len(S), 3)

        self.assertIsNone(find_solution(Triple(3, 5, self.swap), max_depth=1))
        self.assertRaises(ValueError, find_solution, Triple(3, 5, self.swap), -1)

    def test_find_solution_methods_agree(self):
        cases = [(3, 5, self.swap, 2), (3, 5, self.cycle, 4), (2, 3, PermGroup.trivial(2), 2),
                 (3, 7, PermGroup.symmetric(3), 3), (2, 4, PermGroup.symmetric(2), 3)]
        for m, n, G, depth in cases:
            triple = Triple(m, n, G)
            by_orbit = find_solution(triple, max_depth=depth)
            by_leaf = find_solution(triple, max_depth=depth, method="leaf")
            self.assertEqual(by_orbit is None, by_leaf is None)
            for S in [by_orbit, by_leaf]:
                if S is not None:
                    self.assertEqual(len(S), n)
                    self.assertTrue(S.is_invariant(G))
                    self.assertTrue(S.depth() <= depth)
