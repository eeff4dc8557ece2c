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

from symthompson.codes import spref
from symthompson.words import format_word

def _node_id(prefix, w):
    return prefix + "".join("_" + str(a) for a in w)

def to_agraph(t):
    """Tree-pair diagram of a table as a pygraphviz AGraph.

    The domain tree is the cluster "cluster_d", the range tree "cluster_r";
    leaf i is labelled with its index, word and permutation.
    """
    try:
        from pygraphviz import AGraph
    except ImportError:
        raise ImportError("tree-pair diagrams in DOT format need pygraphviz.")

    G = AGraph(directed=True, name="element")
    rows = [("d", "domain", [(c.p, c.sigma) for c in t.columns]),
            ("r", "range", [(c.q, c.tau) for c in t.columns])]
    for prefix, title, leaves in rows:
        labels = dict((w, "{}: {} {}".format(i, format_word(w, t.n) or "e", perm))
                      for i, (w, perm) in enumerate(leaves))
        nodes = sorted(spref(labels) | set(labels))
        for w in nodes:
            if w in labels:
                G.add_node(_node_id(prefix, w), shape="box", label=labels[w])
            else:
                G.add_node(_node_id(prefix, w), shape="point", label="")
        for w in nodes:
            if w:
                G.add_edge(_node_id(prefix, w[:-1]), _node_id(prefix, w), label=str(w[-1]))
        G.add_subgraph([_node_id(prefix, w) for w in nodes], name="cluster_" + prefix, label=title)
    return G

def to_dot(t):
    """Tree-pair diagram of a table in DOT graph text."""
    return to_agraph(t).string()

def _layout(words, offset):
    # leaves evenly spaced in dictionary order, internal nodes above the mean of their children
    pos = {}
    for i, w in enumerate(sorted(words)):
        pos[w] = (offset + i, -len(w))
    for w in sorted(spref(words), key=len, reverse=True):
        xs = [pos[u][0] for u in pos if len(u) == len(w) + 1 and u[:-1] == w]
        pos[w] = (np.mean(xs), -len(w))
    return pos

def plot_tree_pair(t, savefig=None, show=False, title=None):
    """Draw the domain and range trees side by side with matplotlib."""
    import matplotlib.pyplot as plt

    P = [c.p for c in t.columns]
    Q = [c.q for c in t.columns]
    fig, ax = plt.subplots()
    for words, offset, perms in [(P, 0, [c.sigma for c in t.columns]), (Q, len(P) + 1, [c.tau for c in t.columns])]:
        pos = _layout(words, offset)
        for w, (x, y) in pos.items():
            if w:
                px, py = pos[w[:-1]]
                ax.plot([px, x], [py, y], color="black", linewidth=1)
        for i, w in enumerate(words):
            x, y = pos[w]
            ax.annotate("{}\n{}".format(i, perms[i]), (x, y), textcoords="offset points",
                        xytext=(0, -14), ha="center", va="top", fontsize=8)
        ax.scatter([x for x, _ in pos.values()], [y for _, y in pos.values()], s=12, color="black")
    ax.set_axis_off()
    if title:
        ax.set_title(title)
    if savefig:
        fig.savefig(savefig, bbox_inches="tight")
    if show:
        plt.show()
    return fig
