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

import os
import tempfile
import unittest

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

from symthompson.diagrams import plot_tree_pair, to_agraph, to_dot
from symthompson.perms import PermGroup
from symthompson.tests.base_test import BaseTest

try:
    import pygraphviz
except ImportError:
    pygraphviz = None

class TestDiagrams(BaseTest):
    """Unit tests for tree-pair diagrams."""

    def setUp(self):
        self.g = self.table(2, PermGroup.symmetric(2), [("0", "Id", "11", "(0 1)"), ("10", "Id", "10", "Id"),
                                                        ("11", "Id", "0", "Id")])

    @unittest.skipIf(pygraphviz is None, "pygraphviz is not installed")
    def test_dot(self):
        G = pygraphviz.AGraph(string=to_dot(self.g))
        self.assertTrue(G.directed)
        self.assertEqual(G.get_subgraph("cluster_d").graph_attr["label"], "domain")
        self.assertEqual(G.get_subgraph("cluster_r").graph_attr["label"], "range")
        self.assertEqual(G.get_node("d_1_0").attr["label"], "1: 10 Id")
        self.assertEqual(G.get_node("d_1_0").attr["shape"], "box")
        self.assertEqual(G.get_node("r_1_1").attr["label"], "0: 11 (0 1)")
        self.assertEqual(G.get_node("d_1").attr["shape"], "point")
        self.assertEqual(G.get_edge("d", "d_1").attr["label"], "1")
        # Three leaves and two internal nodes per tree.
        self.assertEqual(len(G.nodes()), 10)
        self.assertEqual(len(G.edges()), 8)

    @unittest.skipIf(pygraphviz is None, "pygraphviz is not installed")
    def test_single_column(self):
        G = to_agraph(self.table(2, PermGroup.trivial(2), [("", "Id", "", "Id")]))
        self.assertEqual(sorted(G.nodes()), ["d", "r"])
        self.assertEqual(G.get_node("d").attr["label"], "0: e Id")

    def test_plot(self):
        fd, path = tempfile.mkstemp(suffix=".png")
        os.close(fd)
        try:
            fig = plot_tree_pair(self.g, savefig=path, title="g")
            self.assertEqual(fig.axes[0].get_title(), "g")
            self.assertTrue(os.path.getsize(path) > 0)
            plt.close(fig)
        finally:
            os.remove(path)
