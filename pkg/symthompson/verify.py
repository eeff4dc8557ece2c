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
from time import time

import numpy as np

from symthompson.successors import AlgContext
from symthompson.tables import Table, compose, equals, random_element
from symthompson.topological import TopoContext
from symthompson.utilities import get_version
from symthompson.words import EvWord, concat

logger = logging.getLogger(__name__)

def random_point(n, rng, max_head=4, max_period=3):
    head = rng.randint(n, size=rng.randint(max_head + 1))
    period = rng.randint(n, size=rng.randint(1, max_period + 1))
    return EvWord(n, head.tolist(), period.tolist())

def _setup(kwargs):
    samples = kwargs.pop("samples", 100)
    seed = kwargs.pop("seed", None)
    depth = kwargs.pop("depth", 3)
    verbose = kwargs.pop("verbose", False)

    # Validate parameters.
    if samples <= 0:
        raise ValueError("samples must be a positive integer.")
    if depth < 0:
        raise ValueError("depth must be a non-negative integer.")
    rng = seed if isinstance(seed, np.random.RandomState) else np.random.RandomState(seed)
    return samples, rng, depth, verbose

def _report(name, passed, samples, counterexample, start, verbose):
    if verbose:
        print("-" * 60)
        print("symthompson v" + get_version("__init__.py") + " - " + name)
        print("{}/{} samples passed in {:.3f} s".format(passed, samples, time() - start))
        print("-" * 60)
    logger.debug("%s: %d/%d passed", name, passed, samples)
    return {"passed": passed, "samples": samples, "counterexample": counterexample}

def verify_group_axioms(n, H, *args, **kwargs):
    """Associativity, inverse and identity laws on random triples."""
    samples, rng, depth, verbose = _setup(kwargs)
    start = time()
    e = Table.identity(n, H)
    passed, counterexample = 0, None
    for _ in range(samples):
        f, g, h = [random_element(n, H, depth, rng) for _ in range(3)]
        ok = equals(compose(compose(f, g), h), compose(f, compose(g, h))) and \
             compose(f, f.inverse()).is_identity() and compose(f.inverse(), f).is_identity() and \
             equals(compose(e, f), f) and equals(compose(f, e), f)
        if ok:
            passed += 1
        elif counterexample is None:
            counterexample = (f, g, h)
    return _report("group axioms", passed, samples, counterexample, start, verbose)

def verify_moves(n, H, *args, **kwargs):
    """Expansion, reduction and both pushes leave evaluation unchanged."""
    samples, rng, depth, verbose = _setup(kwargs)
    start = time()
    passed, counterexample = 0, None
    for _ in range(samples):
        t = random_element(n, H, depth, rng)
        x = random_point(n, rng)
        expanded = t.expand_column(rng.randint(len(t)))
        moved = [expanded, expanded.reduce_once(), t.push_down(), t.push_up()]
        y = t.evaluate(x)
        if all(s.evaluate(x) == y for s in moved):
            passed += 1
        elif counterexample is None:
            counterexample = (t, x)
    return _report("move soundness", passed, samples, counterexample, start, verbose)

def verify_homomorphism(ctx, *args, **kwargs):
    """equals(embed(h o g), embed(h) o embed(g)) on random pairs."""
    samples, rng, depth, verbose = _setup(kwargs)
    start = time()
    n, H = _source(ctx)
    passed, counterexample = 0, None
    for _ in range(samples):
        g = random_element(n, H, depth, rng)
        h = random_element(n, H, depth, rng)
        if equals(ctx.embed(compose(h, g)), compose(ctx.embed(h), ctx.embed(g))):
            passed += 1
        elif counterexample is None:
            counterexample = (g, h)
    return _report("homomorphism", passed, samples, counterexample, start, verbose)

def verify_cylinder(ctx, *args, **kwargs):
    """Embedded elements act on the image of a point as the element acts on the point."""
    samples, rng, depth, verbose = _setup(kwargs)
    start = time()
    n, H = _source(ctx)
    passed, counterexample = 0, None
    for _ in range(samples):
        g = random_element(n, H, depth, rng)
        x = random_point(n, rng)
        if ctx.embed(g).evaluate(embed_point(ctx, x)) == embed_point(ctx, g.evaluate(x)):
            passed += 1
        elif counterexample is None:
            counterexample = (g, x)
    return _report("cylinder conjugacy", passed, samples, counterexample, start, verbose)

def embed_point(ctx, x):
    """Image of a point under the map the embedding conjugates by."""
    if isinstance(ctx, AlgContext):
        return concat((ctx.m - 1,), EvWord(ctx.n, x.head, x.period))
    return ctx.translate_point(x)

def _source(ctx):
    if isinstance(ctx, AlgContext):
        return ctx.m, ctx.G
    if isinstance(ctx, TopoContext):
        return ctx.n, ctx.H
    raise ValueError("expected an AlgContext or a TopoContext.")
