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
from collections import Counter

from sympy.combinatorics import Permutation, PermutationGroup
from sympy.combinatorics.named_groups import SymmetricGroup

from symthompson.words import EvWord, check_word

logger = logging.getLogger(__name__)

DEFAULT_CAP = 10**6

def _as_ints(values, what):
    try:
        values = list(values)
    except TypeError:
        raise ValueError("{} must be a sequence of integers, got {!r}.".format(what, values))
    result = []
    for a in values:
        try:
            i = int(a)
        except (TypeError, ValueError):
            raise ValueError("{} entry {!r} is not an integer.".format(what, a))
        if isinstance(a, bool) or i != a:
            raise ValueError("{} entry {!r} is not an integer.".format(what, a))
        result.append(i)
    return result

class Perm(object):
    """Permutation of 0..n-1 backed by a sympy Permutation.

    Products compose right to left: (sigma*tau)(i) = sigma(tau(i)),
    the reverse of sympy's left-to-right product.
    """
    __slots__ = ("_perm", "key")

    def __init__(self, image):
        if isinstance(image, Permutation):
            perm = image
        else:
            image = _as_ints(image, "permutation image")
            if not image:
                raise ValueError("permutation image must be nonempty.")
            if sorted(image) != list(range(len(image))):
                raise ValueError("{} is not a permutation of 0..{}.".format(image, len(image) - 1))
            perm = Permutation(image)
        self._perm = perm
        self.key = tuple(perm.array_form)

    @classmethod
    def identity(cls, n):
        return cls(Permutation(n - 1))

    @classmethod
    def from_cycles(cls, cycles, n):
        cycles = [_as_ints(c, "cycle") for c in cycles]
        for a in itertools.chain(*cycles):
            if a < 0 or a >= n:
                raise ValueError("cycle entry {} outside 0..{}.".format(a, n - 1))
        cycles = [c for c in cycles if c]
        if not cycles:
            return cls.identity(n)
        return cls(Permutation(cycles, size=n))

    @property
    def degree(self):
        return self._perm.size

    def __call__(self, i):
        return self.key[i]

    def __mul__(self, other):
        if self.degree != other.degree:
            raise ValueError("Dimension mismatch: degrees {} and {}.".format(self.degree, other.degree))
        return Perm(other._perm * self._perm)

    def inverse(self):
        return Perm(~self._perm)

    def conjugate(self, c):
        """c * self * c^-1."""
        return c * self * c.inverse()

    def is_identity(self):
        return self._perm.is_Identity

    def cycles(self):
        return [tuple(c) for c in self._perm.full_cyclic_form]

    def cycle_type(self):
        structure = self._perm.cycle_structure
        return tuple(sorted((length for length, count in structure.items() for _ in range(count)), reverse=True))

    def to_sympy(self):
        return self._perm

    def to_list(self):
        return list(self.key)

    def __eq__(self, other):
        return isinstance(other, Perm) and self.key == other.key

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return "Perm({})".format(list(self.key))

    def __str__(self):
        moved = self._perm.cyclic_form
        if not moved:
            return "Id"
        return "".join("(" + " ".join(str(a) for a in c) + ")" for c in moved)

def compose_perm(sigma, tau):
    """sigma o tau, tau applied first."""
    return sigma * tau

def cycle_type(sigma):
    return sigma.cycle_type()

def extend(sigma, n):
    """sigma acting on 0..m-1 and fixing m..n-1."""
    m = sigma.degree
    if n < m:
        raise ValueError("cannot extend a permutation of degree {} to degree {}.".format(m, n))
    return Perm(Permutation(list(sigma.key), size=n))

def perm_act(sigma, w):
    """Letterwise action of sigma on a finite word or an EvWord."""
    key = sigma.key
    if isinstance(w, EvWord):
        if w.n != sigma.degree:
            raise ValueError("Dimension mismatch: point over {} letters, permutation of degree {}.".format(w.n, sigma.degree))
        return EvWord(w.n, tuple(key[a] for a in w.head), tuple(key[a] for a in w.period))
    return tuple(key[a] for a in check_word(w, sigma.degree))

class PermGroup(object):
    """Finite permutation group given by generators, enumerated by closure.

    Keyword arguments:
    cap -- abort the closure once more than this many elements are found.
    """

    def __init__(self, generators=(), degree=None, *args, **kwargs):
        cap = kwargs.pop("cap", DEFAULT_CAP)

        # Validate parameters.
        generators = [g if isinstance(g, Perm) else Perm(g) for g in generators]
        if degree is None:
            if not generators:
                raise ValueError("degree must be given for a group without generators.")
            degree = generators[0].degree
        if degree <= 0:
            raise ValueError("degree must be a positive integer.")
        if cap <= 0:
            raise ValueError("cap must be a positive integer.")
        for g in generators:
            if g.degree != degree:
                raise ValueError("generator {} has degree {}, expected {}.".format(g, g.degree, degree))

        gens = []
        for g in generators:
            if not g.is_identity() and g not in gens:
                gens.append(g)
        self.degree = degree
        self.generators = tuple(gens)
        elements = self._closure(cap)
        self.elements = tuple(sorted(elements, key=lambda g: g.key))
        self._elements = frozenset(elements)

    def _closure(self, cap):
        group = self.to_sympy()
        elements = set(Perm(list(af)) for af in itertools.islice(group.generate(af=True), cap + 1))
        if len(elements) > cap:
            raise ValueError("group order exceeds the enumeration cap {}.".format(cap))
        logger.debug("closure of %d generators on %d points: order %d",
                     len(self.generators), self.degree, len(elements))
        return elements

    def to_sympy(self):
        return PermutationGroup([g.to_sympy() for g in self.generators] or [Permutation(self.degree - 1)])

    @classmethod
    def trivial(cls, n):
        return cls([], degree=n)

    @classmethod
    def symmetric(cls, n):
        return cls([Perm(g) for g in SymmetricGroup(n).generators], degree=n)

    @property
    def order(self):
        return len(self.elements)

    def is_trivial(self):
        return self.order == 1

    def __contains__(self, g):
        return g in self._elements

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        return isinstance(other, PermGroup) and self.degree == other.degree and \
               self._elements == other._elements

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.degree, self._elements))

    def __repr__(self):
        return "PermGroup([{}], degree={})".format(", ".join(str(g) for g in self.generators), self.degree)

    def extend(self, n):
        return PermGroup([extend(g, n) for g in self.generators], degree=n)

    def conjugate(self, c):
        """The group c H c^-1."""
        return PermGroup([g.conjugate(c) for g in self.generators], degree=self.degree)

    def cycle_type_profile(self):
        return Counter(g.cycle_type() for g in self.elements)

def closure(generators, degree=None, cap=DEFAULT_CAP):
    return PermGroup(generators, degree=degree, cap=cap)

def find_cyclic_isomorphism(H1, H2, method="backtrack"):
    """Return c in Sym(n) with c H1 c^-1 = H2, or None.

    A conjugator preserves cycle types and, conversely, cycle-type
    preserving isomorphisms between permutation groups are conjugations.
    """
    if H1.degree != H2.degree:
        raise ValueError("Dimension mismatch: degrees {} and {}.".format(H1.degree, H2.degree))
    if method not in ["backtrack", "brute"]:
        raise ValueError("method must be backtrack or brute.")
    if H1.order != H2.order or H1.cycle_type_profile() != H2.cycle_type_profile():
        return None
    if H1 == H2:
        return Perm.identity(H1.degree)
    if method == "brute":
        return _conjugator_brute(H1, H2)
    return _conjugator_backtrack(H1, H2)

def _conjugator_brute(H1, H2):
    n = H1.degree
    if n > 8:
        raise ValueError("exhaustive conjugator search is limited to degree 8.")
    for image in itertools.permutations(range(n)):
        c = Perm(image)
        if all(g.conjugate(c) in H2 for g in H1.generators):
            return c
    return None

def _conjugator_backtrack(H1, H2):
    gens = list(H1.generators)
    candidates = [[h for h in H2.elements if h.cycle_type() == g.cycle_type()] for g in gens]
    for targets in itertools.product(*candidates):
        c = _solve_conjugator(gens, targets, H1.degree)
        if c is not None:
            logger.debug("conjugator %s maps generators to %s", c, [str(h) for h in targets])
            return c
    return None

def _solve_conjugator(gens, targets, n):
    # Find c with c(g(x)) = h(c(x)) for each generator/target pair.
    mapping = [-1] * n
    used = [False] * n

    def undo(assigned):
        for a in assigned:
            used[mapping[a]] = False
            mapping[a] = -1

    def assign(x, y):
        assigned = []
        stack = [(x, y)]
        while stack:
            a, b = stack.pop()
            if mapping[a] >= 0:
                if mapping[a] != b:
                    undo(assigned)
                    return None
                continue
            if used[b]:
                undo(assigned)
                return None
            mapping[a] = b
            used[b] = True
            assigned.append(a)
            for g, h in zip(gens, targets):
                stack.append((g(a), h(b)))
        return assigned

    def search():
        if -1 not in mapping:
            return Perm(mapping)
        x = mapping.index(-1)
        for y in range(n):
            if used[y]:
                continue
            assigned = assign(x, y)
            if assigned is None:
                continue
            result = search()
            if result is not None:
                return result
            undo(assigned)
        return None

    return search()
