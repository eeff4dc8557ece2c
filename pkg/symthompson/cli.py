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

import argparse
import json
import logging
import sys

from symthompson.codes import Triple, find_solution
from symthompson.diagrams import plot_tree_pair, to_dot
from symthompson.roots import root_group
from symthompson.successors import AlgContext, successors_inductive
from symthompson.tables import compose, equals, random_element
from symthompson.topological import build_context
from symthompson.utilities import (dump_table, format_code, format_group, load_json, load_table,
                                   parse_code, parse_group, parse_perm, table_to_dict)
from symthompson.verify import verify_homomorphism
from symthompson.words import parse_point

logger = logging.getLogger(__name__)

def _group(gens, n):
    return parse_group(gens or [], n)

def _context_from_json(source):
    data = load_json(source)
    try:
        m, n = int(data["m"]), int(data["n"])
        G = parse_group(data.get("G", []), m)
        H = parse_group(data.get("H", []), n)
        S = parse_code(data["S"], m)
    except (KeyError, TypeError, AttributeError) as err:
        raise ValueError("malformed context JSON: {}.".format(err))
    conj = parse_perm(data["conj"], n) if data.get("conj") is not None else None
    return build_context(m, n, G, H, S, conj=conj)

def cmd_validate(args, out):
    errors = load_table(args.element, check=False).validate()
    if errors:
        out.write(json.dumps({"errors": errors}) + "\n")
        return 1
    out.write("ok\n")
    return 0

def cmd_normalize(args, out):
    out.write(dump_table(load_table(args.element).canonical()) + "\n")
    return 0

def cmd_compose(args, out):
    out.write(dump_table(compose(load_table(args.v), load_table(args.u))) + "\n")
    return 0

def cmd_invert(args, out):
    out.write(dump_table(load_table(args.element).inverse()) + "\n")
    return 0

def cmd_eq(args, out):
    out.write("equal\n" if equals(load_table(args.a), load_table(args.b)) else "not equal\n")
    return 0

def cmd_eval(args, out):
    t = load_table(args.element)
    out.write(str(t.evaluate(parse_point(args.point, t.n))) + "\n")
    return 0

def cmd_push(args, out):
    t = load_table(args.element)
    t = t.push_down() if args.direction == "down" else t.push_up()
    out.write(dump_table(t) + "\n")
    return 0

def cmd_expand(args, out):
    out.write(dump_table(load_table(args.element).expand_column(args.column)) + "\n")
    return 0

def cmd_successors(args, out):
    code = parse_code(args.code, args.m)
    if args.order == "reverse-dict":
        code = sorted(code, reverse=True)
    out.write(successors_inductive(code, args.m, args.n).format() + "\n")
    return 0

def cmd_embed_alg(args, out):
    g = load_table(args.element)
    ctx = AlgContext(g.n, args.n, g.H, q_order=args.q_order)
    out.write(dump_table(ctx.embed(g)) + "\n")
    return 0

def cmd_embed_topo(args, out):
    ctx = _context_from_json(args.context)
    out.write(dump_table(ctx.embed(load_table(args.element))) + "\n")
    return 0

def cmd_find_code(args, out):
    S = find_solution(Triple(args.m, args.n, _group(args.G, args.m)), max_depth=args.depth, method=args.method)
    if S is None:
        out.write("none up to depth {}\n".format(args.depth))
    else:
        out.write(json.dumps(format_code(S.words, args.m)) + "\n")
    return 0

def cmd_root_group(args, out):
    words = parse_code(load_json(args.code) if args.code.strip().startswith("[") else args.code, args.m)
    root = root_group(_group(args.G, args.m), words)
    out.write(json.dumps({"code": format_code(root.words, args.m),
                          "generators": format_group(root.perms),
                          "order": root.perms.order}) + "\n")
    return 0

def cmd_verify_hom(args, out):
    if args.mode == "alg":
        if args.m is None or args.n is None:
            raise ValueError("--m and --n are required in alg mode.")
        ctx = AlgContext(args.m, args.n, _group(args.G, args.m), q_order=args.q_order)
    else:
        if args.context is None:
            raise ValueError("--context is required in topo mode.")
        ctx = _context_from_json(args.context)
    report = verify_homomorphism(ctx, samples=args.samples, seed=args.seed, depth=args.depth,
                                 verbose=args.verbose)
    out.write("{}/{} pairs satisfy ι(h∘g)=ι(h)∘ι(g)\n".format(report["passed"], report["samples"]))
    if report["counterexample"] is not None:
        g, h = report["counterexample"]
        out.write("counterexample: " + json.dumps({"g": table_to_dict(g), "h": table_to_dict(h)}) + "\n")
        return 1
    return 0

def cmd_random(args, out):
    out.write(dump_table(random_element(args.n, _group(args.H, args.n), args.depth, args.seed)) + "\n")
    return 0

def cmd_dot(args, out):
    t = load_table(args.element)
    out.write(to_dot(t))
    if args.plot:
        import matplotlib.pyplot as plt

        plt.close(plot_tree_pair(t, savefig=args.plot))
    return 0

def build_parser():
    parser = argparse.ArgumentParser(prog="symthompson",
                                     description="Compute with elements of symmetric Thompson groups V_n(H).")
    parser.add_argument("--verbose", action="store_true", help="log progress at DEBUG level")
    sub = parser.add_subparsers(dest="command")
    sub.required = True

    def element_command(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("element", help="element JSON file or inline JSON")
        p.set_defaults(func=func)
        return p

    element_command("validate", cmd_validate, "check an element table")
    element_command("normalize", cmd_normalize, "canonical form of an element")
    element_command("invert", cmd_invert, "inverse element")
    p = sub.add_parser("compose", help="composite v o u (u applied first)")
    p.add_argument("v")
    p.add_argument("u")
    p.set_defaults(func=cmd_compose)
    p = sub.add_parser("eq", help="decide equality of two elements")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_eq)
    p = element_command("eval", cmd_eval, "image of an eventually periodic point")
    p.add_argument("point", help="point as head(period), e.g. 10(01)")
    p = element_command("push", cmd_push, "push permutations to one row")
    p.add_argument("--direction", choices=["down", "up"], default="down")
    p = element_command("expand", cmd_expand, "expand one column")
    p.add_argument("--column", type=int, required=True, help="0-based column index")

    p = sub.add_parser("successors", help="successor assignment of a code below the letter m-1")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--code", required=True, help="comma separated words")
    p.add_argument("--order", choices=["reverse-dict", "given"], default="reverse-dict")
    p.set_defaults(func=cmd_successors)

    p = element_command("embed-alg", cmd_embed_alg, "algebraic embedding V_m(G) -> V_n(G_ext)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q-order", choices=["induced", "dict"], default="induced")
    p = element_command("embed-topo", cmd_embed_topo, "topological embedding V_n(H) -> V_m(G)")
    p.add_argument("--context", required=True, help="context JSON with m, n, G, H, S and optional conj")

    p = sub.add_parser("find-code", help="search for a G-invariant complete prefix code of size n")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--G", action="append", help="generator of G, repeatable")
    p.add_argument("--depth", type=int, default=4)
    p.add_argument("--method", choices=["orbit", "leaf"], default="orbit")
    p.set_defaults(func=cmd_find_code)

    p = sub.add_parser("root-group", help="root group of G on an invariant word set")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--G", action="append", help="generator of G, repeatable")
    p.add_argument("--code", required=True, help="comma separated words or a JSON list")
    p.set_defaults(func=cmd_root_group)

    p = sub.add_parser("verify-hom", help="check the homomorphism identity on random pairs")
    p.add_argument("--mode", choices=["alg", "topo"], required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--G", action="append", help="generator of G, repeatable")
    p.add_argument("--context", help="context JSON for topo mode")
    p.add_argument("--q-order", choices=["induced", "dict"], default="induced")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--depth", type=int, default=3)
    p.set_defaults(func=cmd_verify_hom)

    p = sub.add_parser("random", help="random element of V_n(H)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--H", action="append", help="generator of H, repeatable")
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=cmd_random)

    p = element_command("dot", cmd_dot, "tree-pair diagram in DOT format")
    p.add_argument("--plot", help="also draw the diagram to this image file")
    return parser

def main(argv=None, out=None, err=None):
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    args = build_parser().parse_args(argv)
    if args.verbose:
        logging.basicConfig(level=logging.DEBUG)
    try:
        return args.func(args, out)
    except (ValueError, ImportError) as e:
        logger.debug("command %s failed", args.command, exc_info=True)
        err.write(json.dumps({"error": str(e)}) + "\n")
        return 1

if __name__ == "__main__":
    sys.exit(main())
