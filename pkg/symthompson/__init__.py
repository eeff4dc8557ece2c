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

from symthompson.words import EvWord
from symthompson.perms import Perm, PermGroup, find_cyclic_isomorphism
from symthompson.codes import PrefixCode, Triple, common_refinement, find_solution
from symthompson.tables import Column, Table, compose, equals, random_element
from symthompson.roots import root_group
from symthompson.topological import build_context, embed_topo
from symthompson.successors import AlgContext, embed_alg, successors_formula, successors_inductive

__version__ = "0.1.0"
