"""Finite biunary semigroups and finite categories with identity biaction.

Elements are canonically the integers 0..order-1; labels are
presentation-only.  Tables are dense tuples.  Construction validates
eagerly: no structure with a violated defining axiom exists downstream,
so every checker may assume well-formed input.  Instances are immutable
and safe to share.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import (
    AssocError,
    BiactionAxiomError,
    CategoryAxiomError,
    ParseError,
    ShapeError,
)

_LETTERS = "abcdefghijklmnopqrstuvwxyz"


def default_names(n):
    if n <= len(_LETTERS):
        return tuple(_LETTERS[i] for i in range(n))
    return tuple("x%d" % i for i in range(n))


def _check_names(names, order):
    if len(names) != order:
        raise ShapeError("expected %d element labels, got %d" % (order, len(names)))
    seen = set()
    for nm in names:
        if not nm or any(c.isspace() for c in nm) or ":" in nm or nm in ("-", "#"):
            raise ShapeError("invalid element label %r" % nm)
        if nm in seen:
            raise ShapeError("duplicate element label %r" % nm)
        seen.add(nm)


def _check_map(m, order, what):
    if len(m) != order:
        raise ShapeError("%s map has %d entries, expected %d" % (what, len(m), order))
    for v in m:
        if not isinstance(v, int) or not 0 <= v < order:
            raise ShapeError("%s map value %r out of range" % (what, v))


def assoc_witness(mul, order):
    """First (x,y,z) with (xy)z != x(yz), or None.  mul rows must be indexable."""
    for x in range(order):
        rx = mul[x]
        for y in range(order):
            lrow = mul[rx[y]]
            rrow = tuple(map(rx.__getitem__, mul[y]))
            if tuple(lrow) != rrow:
                for z in range(order):
                    if lrow[z] != rrow[z]:
                        return (x, y, z)
    return None


@dataclass(frozen=True)
class CheckReport:
    """Verdict of one law on one structure.

    witness is present exactly when the law fails, and is the
    lexicographically first failing tuple under the law's documented
    quantifier order.
    """

    law: str
    holds: bool
    witness: tuple | None = None

    def __post_init__(self):
        if self.holds != (self.witness is None):
            raise ValueError("witness must be present iff the law fails")

    def describe(self, names=None):
        if self.holds:
            return "%s holds" % self.law
        if names is None:
            shown = self.witness
        else:
            shown = tuple(names[i] for i in self.witness)
        return "%s fails witness=(%s)" % (self.law, ",".join(map(str, shown)))


@dataclass(frozen=True)
class ElementMap:
    """A total map between element sets, used for homomorphisms and functors."""

    source_order: int
    target_order: int
    image: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "image", tuple(self.image))
        if len(self.image) != self.source_order:
            raise ShapeError("map has %d entries, expected %d"
                             % (len(self.image), self.source_order))
        for v in self.image:
            if not 0 <= v < self.target_order:
                raise ShapeError("map value %r out of target range" % (v,))

    def __call__(self, x):
        return self.image[x]

    @staticmethod
    def identity(order):
        return ElementMap(order, order, tuple(range(order)))


@dataclass(frozen=True)
class BiunarySemigroup:
    """A finite semigroup with total unary maps D and R.

    Only associativity and well-shapedness are validated here; whether
    the structure satisfies any of the named law classes is decided by
    the law engine.
    """

    order: int
    names: tuple[str, ...]
    mul: tuple[tuple[int, ...], ...]
    d_map: tuple[int, ...]
    r_map: tuple[int, ...]
    projections: tuple[int, ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        n = self.order
        if n < 1:
            raise ShapeError("order must be positive")
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "mul", tuple(tuple(row) for row in self.mul))
        object.__setattr__(self, "d_map", tuple(self.d_map))
        object.__setattr__(self, "r_map", tuple(self.r_map))
        _check_names(self.names, n)
        if len(self.mul) != n:
            raise ShapeError("mul has %d rows, expected %d" % (len(self.mul), n))
        for row in self.mul:
            if len(row) != n:
                raise ShapeError("mul row has %d entries, expected %d" % (len(row), n))
            for v in row:
                if not isinstance(v, int) or not 0 <= v < n:
                    raise ShapeError("mul entry %r out of range" % (v,))
        _check_map(self.d_map, n, "D")
        _check_map(self.r_map, n, "R")
        w = assoc_witness(self.mul, n)
        if w is not None:
            raise AssocError(w)
        object.__setattr__(self, "projections", tuple(sorted(set(self.d_map))))


def validate_semigroup(names, mul, d_map, r_map) -> BiunarySemigroup:
    """Build a biunary semigroup from raw tables, or raise Shape/AssocError."""
    return BiunarySemigroup(len(mul), tuple(names), mul, d_map, r_map)


@dataclass(frozen=True)
class BiactionCategory:
    """A finite category with total left and right actions of its identities.

    comp[x][y] is None exactly when the composite is undefined; definedness
    is re-derived from R(x)=D(y) and never trusted from input.  left_action
    and right_action are keyed by identity e; left_action[e][s] stores e|s
    and right_action[e][s] stores s|e.  Validation enforces the category
    axioms, the identity coherence conditions and the biaction laws that
    make both actions total, agree on identity pairs, and commute with one
    another.
    """

    order: int
    names: tuple[str, ...]
    d_map: tuple[int, ...]
    r_map: tuple[int, ...]
    comp: tuple[tuple[int | None, ...], ...]
    left_action: dict[int, tuple[int, ...]]
    right_action: dict[int, tuple[int, ...]]
    identities: tuple[int, ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        n = self.order
        if n < 1:
            raise ShapeError("order must be positive")
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "d_map", tuple(self.d_map))
        object.__setattr__(self, "r_map", tuple(self.r_map))
        object.__setattr__(self, "comp", tuple(tuple(row) for row in self.comp))
        object.__setattr__(self, "left_action",
                           {e: tuple(row) for e, row in self.left_action.items()})
        object.__setattr__(self, "right_action",
                           {e: tuple(row) for e, row in self.right_action.items()})
        _check_names(self.names, n)
        _check_map(self.d_map, n, "D")
        _check_map(self.r_map, n, "R")
        d, r = self.d_map, self.r_map
        if len(self.comp) != n:
            raise ShapeError("comp has %d rows, expected %d" % (len(self.comp), n))
        for row in self.comp:
            if len(row) != n:
                raise ShapeError("comp row has %d entries, expected %d" % (len(row), n))
            for v in row:
                if v is not None and (not isinstance(v, int) or not 0 <= v < n):
                    raise ShapeError("comp entry %r out of range" % (v,))
        # C2 before anything that uses the identity set
        for x in range(n):
            if r[d[x]] != d[x] or d[r[x]] != r[x]:
                raise CategoryAxiomError("C2", (x,))
        ids = sorted(set(d))
        if set(r) != set(ids):
            raise CategoryAxiomError("C2", (next(iter(set(r) ^ set(ids))),))
        object.__setattr__(self, "identities", tuple(ids))
        comp = self.comp
        # C3: definedness pattern is exactly R(x)=D(y)
        for x in range(n):
            for y in range(n):
                if (comp[x][y] is not None) != (r[x] == d[y]):
                    raise CategoryAxiomError("C3", (x, y))
        # C1
        for x in range(n):
            if comp[d[x]][x] != x or comp[x][r[x]] != x:
                raise CategoryAxiomError("C1", (x,))
        # C4
        for x in range(n):
            for y in range(n):
                v = comp[x][y]
                if v is not None and (d[v] != d[x] or r[v] != r[y]):
                    raise CategoryAxiomError("C4", (x, y))
        # C5 over composable chains
        for x in range(n):
            for y in range(n):
                if r[x] != d[y]:
                    continue
                xy = comp[x][y]
                for z in range(n):
                    if r[y] == d[z] and comp[xy][z] != comp[x][comp[y][z]]:
                        raise CategoryAxiomError("C5", (x, y, z))
        # actions: total on (identity, element) pairs only
        for which, table in (("left", self.left_action), ("right", self.right_action)):
            if sorted(table) != ids:
                raise ShapeError("%s action rows %r do not match identity set %r"
                                 % (which, sorted(table), ids))
            for e, row in table.items():
                if len(row) != n:
                    raise ShapeError("%s action row for identity %d has %d entries"
                                     % (which, e, len(row)))
                for v in row:
                    if not isinstance(v, int) or not 0 <= v < n:
                        raise ShapeError("%s action value %r out of range" % (which, v))
        la, ra = self.left_action, self.right_action
        # TC1: on identity pairs the two actions agree
        for e in ids:
            for f in ids:
                if la[e][f] != ra[f][e]:
                    raise BiactionAxiomError("TC1", (e, f))
        # TC2: D(a)|a = a and a|R(a) = a
        for a in range(n):
            if la[d[a]][a] != a or ra[r[a]][a] != a:
                raise BiactionAxiomError("TC2", (a,))
        # TC6: (e|a)|f = e|(a|f)
        for e in ids:
            for a in range(n):
                for f in ids:
                    if ra[f][la[e][a]] != la[e][ra[f][a]]:
                        raise BiactionAxiomError("TC6", (e, a, f))

    def lact(self, e, s):
        return self.left_action[e][s]

    def ract(self, s, e):
        return self.right_action[e][s]


def validate_biaction_category(names, d_map, r_map, comp, left_action,
                               right_action) -> BiactionCategory:
    """Build a category with biaction from raw tables.

    Raises ShapeError, CategoryAxiomError or BiactionAxiomError naming the
    first failed axiom (checked in the order C2, C3, C1, C4, C5, TC1, TC2,
    TC6) with a witness tuple.
    """
    return BiactionCategory(len(d_map), tuple(names), d_map, r_map, comp,
                            dict(left_action), dict(right_action))


# ---------------------------------------------------------------------------
# text format


def serialize(structure) -> str:
    """Render a structure in the line-oriented text format."""
    if isinstance(structure, BiunarySemigroup):
        return _serialize_semigroup(structure)
    if isinstance(structure, BiactionCategory):
        return _serialize_category(structure)
    raise TypeError("cannot serialize %r" % type(structure).__name__)


def _unary_block(tag, names, m):
    return tag + " " + " ".join("%s:%s" % (names[x], names[m[x]])
                                for x in range(len(names)))


def _serialize_semigroup(s):
    names = s.names
    lines = ["semigroup order=%d" % s.order,
             "elements " + " ".join(names),
             "mul"]
    for x in range(s.order):
        lines.append("%s: %s" % (names[x], " ".join(names[v] for v in s.mul[x])))
    lines.append(_unary_block("D", names, s.d_map))
    lines.append(_unary_block("R", names, s.r_map))
    return "\n".join(lines) + "\n"


def _serialize_category(c):
    names = c.names
    lines = ["category order=%d" % c.order,
             "elements " + " ".join(names),
             _unary_block("D", names, c.d_map),
             _unary_block("R", names, c.r_map),
             "comp"]
    for x in range(c.order):
        row = " ".join("-" if v is None else names[v] for v in c.comp[x])
        lines.append("%s: %s" % (names[x], row))
    lines.append("lact")
    for e in c.identities:
        lines.append("%s: %s" % (names[e],
                                 " ".join(names[v] for v in c.left_action[e])))
    lines.append("ract")
    for e in c.identities:
        lines.append("%s: %s" % (names[e],
                                 " ".join(names[v] for v in c.right_action[e])))
    return "\n".join(lines) + "\n"


class _Scanner:
    """Token stream over the text format; tracks line/column for errors."""

    def __init__(self, text):
        self.lines = []
        for num, raw in enumerate(text.splitlines(), start=1):
            body = raw.split("#", 1)[0]
            toks = [(m.group(0), num, m.start() + 1)
                    for m in re.finditer(r"\S+", body)]
            if toks:
                self.lines.append(toks)
        self.pos = 0

    def eof(self):
        return self.pos >= len(self.lines)

    def next_line(self, expect=None):
        if self.eof():
            raise ParseError("unexpected end of input"
                             + ("" if expect is None else ", expected %s" % expect))
        line = self.lines[self.pos]
        self.pos += 1
        return line


def _parse_header(tok):
    m = re.fullmatch(r"order=(\d+)", tok[0])
    if not m:
        raise ParseError("expected order=N", tok[1], tok[2])
    n = int(m.group(1))
    if n < 1:
        raise ParseError("order must be positive", tok[1], tok[2])
    return n


def _parse_elements(sc, n):
    line = sc.next_line("elements")
    if line[0][0] != "elements":
        raise ParseError("expected elements line", line[0][1], line[0][2])
    names = [t[0] for t in line[1:]]
    if len(names) != n:
        raise ParseError("expected %d element labels, got %d" % (n, len(names)),
                         line[0][1], line[0][2])
    index = {}
    for tok in line[1:]:
        if tok[0] in index:
            raise ParseError("duplicate element label %r" % tok[0], tok[1], tok[2])
        if tok[0] in ("-", "#") or ":" in tok[0]:
            raise ParseError("invalid element label %r" % tok[0], tok[1], tok[2])
        index[tok[0]] = len(index)
    return tuple(names), index


def _lookup(index, tok):
    if tok[0] not in index:
        raise ParseError("unknown element %r" % tok[0], tok[1], tok[2])
    return index[tok[0]]


def _parse_unary(sc, tag, index, n):
    line = sc.next_line(tag)
    if line[0][0] != tag:
        raise ParseError("expected %s line" % tag, line[0][1], line[0][2])
    m = [None] * n
    for tok in line[1:]:
        if ":" not in tok[0]:
            raise ParseError("expected name:value pair", tok[1], tok[2])
        a, b = tok[0].split(":", 1)
        for nm in (a, b):
            if nm not in index:
                raise ParseError("unknown element %r" % nm, tok[1], tok[2])
        if m[index[a]] is not None:
            raise ParseError("duplicate %s entry for %r" % (tag, a), tok[1], tok[2])
        m[index[a]] = index[b]
    if any(v is None for v in m):
        missing = next(nm for nm, i in index.items() if m[i] is None)
        raise ParseError("missing %s entry for %r" % (tag, missing),
                         line[0][1], line[0][2])
    return tuple(m)


def _parse_block(sc, keyword, index, n, rows_for, allow_undef):
    line = sc.next_line(keyword)
    if line[0][0] != keyword:
        raise ParseError("expected %s block" % keyword, line[0][1], line[0][2])
    table = {}
    for _ in rows_for:
        line = sc.next_line("%s row" % keyword)
        head = line[0]
        if not head[0].endswith(":"):
            raise ParseError("expected row label", head[1], head[2])
        label = head[0][:-1]
        if label not in index:
            raise ParseError("unknown element %r" % label, head[1], head[2])
        x = index[label]
        if x not in rows_for:
            raise ParseError("unexpected %s row %r" % (keyword, label), head[1], head[2])
        if x in table:
            raise ParseError("duplicate %s row %r" % (keyword, label), head[1], head[2])
        vals = []
        for tok in line[1:]:
            if allow_undef and tok[0] == "-":
                vals.append(None)
            else:
                vals.append(_lookup(index, tok))
        if len(vals) != n:
            raise ParseError("row %r has %d entries, expected %d"
                             % (label, len(vals), n), head[1], head[2])
        table[x] = tuple(vals)
    return table


def parse(text):
    """Parse the text format into a validated structure.

    Returns a BiunarySemigroup or a BiactionCategory depending on the
    header.  parse(serialize(A)) == A for every valid structure.
    """
    sc = _Scanner(text)
    header = sc.next_line("header")
    kind = header[0][0]
    if kind not in ("semigroup", "category") or len(header) != 2:
        raise ParseError("expected 'semigroup order=N' or 'category order=N'",
                         header[0][1], header[0][2])
    n = _parse_header(header[1])
    names, index = _parse_elements(sc, n)
    if kind == "semigroup":
        rows = _parse_block(sc, "mul", index, n, set(range(n)), False)
        mul = tuple(rows[x] for x in range(n))
        d = _parse_unary(sc, "D", index, n)
        r = _parse_unary(sc, "R", index, n)
        if not sc.eof():
            tok = sc.next_line()[0]
            raise ParseError("unexpected trailing content", tok[1], tok[2])
        return validate_semigroup(names, mul, d, r)
    d = _parse_unary(sc, "D", index, n)
    r = _parse_unary(sc, "R", index, n)
    rows = _parse_block(sc, "comp", index, n, set(range(n)), True)
    comp = tuple(rows[x] for x in range(n))
    ids = set(d)
    la = _parse_block(sc, "lact", index, n, ids, False)
    ra = _parse_block(sc, "ract", index, n, ids, False)
    if not sc.eof():
        tok = sc.next_line()[0]
        raise ParseError("unexpected trailing content", tok[1], tok[2])
    return validate_biaction_category(names, d, r, comp, la, ra)
