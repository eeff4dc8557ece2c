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

import codecs
import json
import os.path
import re

from symthompson.perms import Perm, PermGroup
from symthompson.tables import Column, Table
from symthompson.words import format_word, parse_word

# code for single sourcing versions
# reference: https://packaging.python.org/guides/single-sourcing-package-version/
def read(rel_path):
	here = os.path.abspath(os.path.dirname(__file__))
	with codecs.open(os.path.join(here, rel_path), 'r') as fp:
		return fp.read()

def get_version(rel_path):
	for line in read(rel_path).splitlines():
		if line.startswith('__version__'):
			delim = '"' if '"' in line else "'"
			return line.split(delim)[1]
	else:
		raise RuntimeError("Unable to find version string.")

def parse_perm(value, n=None):
	# a one-line image [1,0,2] (list or text), or cycle notation "(0 1)(2 3)"
	if isinstance(value, Perm):
		perm = value
	elif isinstance(value, (list, tuple)):
		perm = Perm(value)
	elif not isinstance(value, str):
		raise ValueError("cannot parse permutation {!r}.".format(value))
	else:
		text = value.strip()
		if text.startswith("["):
			perm = Perm(json.loads(text))
		elif text in ("", "Id", "()"):
			if n is None:
				raise ValueError("degree is required for the identity.")
			perm = Perm.identity(n)
		else:
			if not re.match(r"^(\(\s*\d+(\s*[ ,]\s*\d+)*\s*\)\s*)+$", text):
				raise ValueError("cannot parse permutation {!r}.".format(value))
			cycles = [[int(a) for a in re.split(r"[ ,]+", c.strip())] for c in re.findall(r"\(([^)]*)\)", text)]
			if n is None:
				n = max(max(c) for c in cycles) + 1
			perm = Perm.from_cycles(cycles, n)
	if n is not None and perm.degree != n:
		raise ValueError("permutation {} has degree {}, expected {}.".format(perm, perm.degree, n))
	return perm

def format_perm(perm):
	return perm.to_list()

def parse_group(generators, n):
	# generators may also be one string of cycle products separated by ';'
	if isinstance(generators, str):
		generators = [g for g in generators.split(";") if g.strip()]
	return PermGroup([parse_perm(g, n) for g in generators], degree=n)

def format_group(G):
	return [format_perm(g) for g in G.generators]

def parse_code(words, n):
	if isinstance(words, str):
		words = [w for w in words.split(",") if w.strip()]
	if not isinstance(words, (list, tuple)):
		raise ValueError("code must be a list of words or a comma separated string.")
	return [parse_word(w, n) for w in words]

def format_code(words, n):
	return [format_word(w, n) for w in words]

def table_to_dict(t):
	return {"n": t.n,
	        "H": format_group(t.H),
	        "columns": [{"p": format_word(c.p, t.n), "sigma": format_perm(c.sigma),
	                     "q": format_word(c.q, t.n), "tau": format_perm(c.tau)} for c in t.columns]}

def table_from_dict(data):
	try:
		n = int(data["n"])
		H = parse_group(data.get("H", []), n)
		columns = [Column(parse_word(c["p"], n), parse_perm(c["sigma"], n),
		                  parse_word(c["q"], n), parse_perm(c["tau"], n)) for c in data["columns"]]
	except (KeyError, TypeError, AttributeError) as err:
		raise ValueError("malformed element JSON: {}.".format(err))
	return Table(n, H, columns, check=False)

def dump_table(t):
	return json.dumps(table_to_dict(t))

def load_json(source):
	# inline JSON or a path to a JSON file
	text = source.strip()
	if not text.startswith(("{", "[")):
		if not os.path.exists(source):
			raise ValueError("no such file: {}.".format(source))
		with codecs.open(source, 'r', encoding='utf-8') as fp:
			text = fp.read()
	try:
		return json.loads(text)
	except ValueError as err:
		raise ValueError("invalid JSON: {}.".format(err))

def load_table(source, check=True):
	t = table_from_dict(load_json(source))
	if check:
		errors = t.validate()
		if errors:
			raise ValueError("invalid table: " + " ".join(errors))
	return t
