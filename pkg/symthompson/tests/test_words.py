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

from symthompson.perms import Perm, perm_act
from symthompson.tests.base_test import BaseTest
from symthompson.words import (EQ, GT, INCOMPARABLE, LT, U_PREFIX_OF_V, V_PREFIX_OF_U, EvWord, concat,
                               dict_compare, ev_equal, format_point, format_word, parse_point, parse_word,
                               prefix_compare)

class TestWords(BaseTest):
    """Unit tests for finite and eventually periodic words."""

    def setUp(self):
        self.rng = np.random.RandomState(1)

    def test_concat(self):
        self.assertEqual(concat((), (2, 0)), (2, 0))
        self.assertEqual(concat((2, 0), (1,)), (2, 0, 1))
        self.assertEqual(concat((1,), EvWord(2, (0,), (1,))), EvWord(2, (1, 0), (1,)))
        self.assertRaises(ValueError, concat, (5,), EvWord(2, (), (0,)))

    def test_prefix_compare(self):
        self.assertEqual(prefix_compare(self.w("2"), self.w("20")), U_PREFIX_OF_V)
        self.assertEqual(prefix_compare(self.w("21"), self.w("22")), INCOMPARABLE)
        self.assertEqual(prefix_compare(self.w("20"), self.w("2")), V_PREFIX_OF_U)
        self.assertEqual(prefix_compare(self.w("20"), self.w("20")), U_PREFIX_OF_V)
        self.assertEqual(prefix_compare((), self.w("1")), U_PREFIX_OF_V)
        self.assertEqual(prefix_compare(self.w("10"), self.pt("1(0)", 2)), U_PREFIX_OF_V)
        self.assertEqual(prefix_compare(self.w("11"), self.pt("1(0)", 2)), INCOMPARABLE)

        # Alphabet checks.
        self.assertEqual(prefix_compare(self.w("2"), self.w("20"), 3), U_PREFIX_OF_V)
        self.assertRaises(ValueError, prefix_compare, self.w("2"), self.w("20"), 2)
        self.assertRaises(ValueError, prefix_compare, self.w("13"), self.w("1"), 3)
        self.assertRaises(ValueError, prefix_compare, self.w("10"), self.pt("1(0)", 2), 3)
        self.assertRaises(ValueError, prefix_compare, self.w("12"), self.pt("1(0)", 2))

    def test_dict_compare(self):
        self.assertEqual(dict_compare(self.w("2"), self.w("20")), LT)
        self.assertEqual(dict_compare(self.w("11"), self.w("12")), LT)
        self.assertEqual(dict_compare(self.w("210"), self.w("22")), LT)
        self.assertEqual(dict_compare(self.w("22"), self.w("210")), GT)
        self.assertEqual(dict_compare(self.w("4"), self.w("4")), EQ)
        self.assertEqual(dict_compare((), self.w("0")), LT)
        self.assertEqual(dict_compare(self.w("210"), self.w("22"), 3), LT)
        self.assertRaises(ValueError, dict_compare, self.w("210"), self.w("22"), 2)
        self.assertRaises(ValueError, dict_compare, self.w("4"), (1.5,), 5)

    def test_non_integer_letters(self):
        self.assertEqual(parse_word([1, 0], 2), (1, 0))
        self.assertRaises(ValueError, parse_word, "[1.9]", 3)
        self.assertRaises(ValueError, parse_word, [1.9], 3)
        self.assertRaises(ValueError, parse_word, 7, 3)
        self.assertRaises(ValueError, parse_word, [True], 3)
        self.assertRaises(ValueError, EvWord, 3, (0.5,), (1,))
        self.assertRaises(ValueError, EvWord, 3, (), 2)

    def test_perm_act(self):
        cycle = Perm([1, 2, 0])
        self.assertEqual(perm_act(Perm.identity(3), self.w("201")), self.w("201"))
        self.assertEqual(perm_act(cycle, self.w("001")), self.w("112"))
        self.assertEqual(perm_act(Perm([1, 0, 2]), self.w("222")), self.w("222"))
        self.assertEqual(perm_act(cycle, ()), ())
        self.assertEqual(perm_act(cycle, self.pt("0(12)", 3)), self.pt("1(20)", 3))
        self.assertRaises(ValueError, perm_act, Perm([1, 0]), self.w("2"))

        # The letterwise action is a group action.
        for _ in range(20):
            s = Perm(self.rng.permutation(4))
            t = Perm(self.rng.permutation(4))
            w = tuple(self.rng.randint(4, size=6).tolist())
            self.assertEqual(perm_act(s * t, w), perm_act(s, perm_act(t, w)))

    def test_canonical_points(self):
        x = EvWord(2, (0, 1, 0, 1), (0, 1))
        self.assertEqual(x.head, ())
        self.assertEqual(x.period, (0, 1))
        self.assertTrue(ev_equal(x, EvWord(2, (), (0, 1, 0, 1))))
        y = EvWord(2, (1,), (0, 0))
        self.assertEqual((y.head, y.period), ((1,), (0,)))
        self.assertEqual(EvWord(3, (2, 1, 0), (1, 0)), EvWord(3, (2,), (1, 0)))
        self.assertFalse(ev_equal(self.pt("(01)", 2), self.pt("(10)", 2)))
        self.assertRaises(ValueError, EvWord, 2, (0,), ())
        self.assertRaises(ValueError, EvWord, 2, (2,), (0,))

        # Canonicalization is idempotent and agrees letter by letter.
        for _ in range(50):
            head = self.rng.randint(3, size=self.rng.randint(5)).tolist()
            period = self.rng.randint(3, size=self.rng.randint(1, 4)).tolist()
            x = EvWord(3, head, period)
            z = EvWord(3, x.head, x.period)
            self.assertEqual((z.head, z.period), (x.head, x.period))
            raw = head + period * 10
            self.assertEqual(x.take(len(raw)), tuple(raw))

    def test_take_drop(self):
        x = self.pt("10(01)", 2)
        self.assertEqual(x.take(5), (1, 0, 0, 1, 0))
        self.assertEqual(x.take(0), ())
        self.assertEqual(x.drop(1), self.pt("0(01)", 2))
        self.assertEqual(x.drop(3), self.pt("(10)", 2))
        self.assertEqual(concat(x.take(4), x.drop(4)), x)

    def test_text_forms(self):
        self.assertEqual(parse_word("201", 3), (2, 0, 1))
        self.assertEqual(parse_word("", 3), ())
        self.assertEqual(parse_word("[10,2]", 12), (10, 2))
        self.assertEqual(format_word((2, 0, 1), 12), "[2,0,1]")
        self.assertEqual(format_word((2, 0, 1), 3), "201")
        self.assertEqual(parse_point("10(01)", 2), EvWord(2, (1, 0), (0, 1)))
        self.assertEqual(format_point(EvWord(3, (2, 2), (0,))), "22(0)")
        self.assertEqual(str(EvWord(3, (), (1, 2, 0))), "(120)")
        self.assertRaises(ValueError, parse_word, "3", 3)
        self.assertRaises(ValueError, parse_word, "12", 11)
        self.assertRaises(ValueError, parse_point, "101", 2)
