"""Law engine: decide every cataloged law and class on a finite structure.

Each law tag maps to exactly one quantified formula; LAWS.md documents the
catalog.  Checkers return the lexicographically first failing tuple under
the documented quantifier order, or None when the law holds.  Quantifier
loops short-circuit on first failure; structures are tiny, so no caching
is done across structures.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import PseudoproductUndefined, WrongStructureKind
from .structures import (
    BiactionCategory,
    BiunarySemigroup,
    CheckReport,
    assoc_witness,
)

# ---------------------------------------------------------------------------
# semigroup-side checkers


def _cs1(s):
    mul, d = s.mul, s.d_map
    for x in range(s.order):
        if mul[d[x]][x] != x:
            return (x,)


def _cs2(s):
    mul, r = s.mul, s.r_map
    for x in range(s.order):
        if mul[x][r[x]] != x:
            return (x,)


def _cs3(s):
    mul, d = s.mul, s.d_map
    for x in range(s.order):
        e = d[x]
        if mul[e][e] != e:
            return (x,)


def _cs4(s):
    d, r = s.d_map, s.r_map
    for x in range(s.order):
        if d[r[x]] != r[x]:
            return (x,)


def _cs5(s):
    d, r = s.d_map, s.r_map
    for x in range(s.order):
        if r[d[x]] != d[x]:
            return (x,)


def _cs6(s):
    mul, d, r = s.mul, s.d_map, s.r_map
    for x in range(s.order):
        for y in range(s.order):
            if r[x] == d[y]:
                v = mul[x][y]
                if d[v] != d[x] or r[v] != r[y]:
                    return (x, y)


def _lcong(s):
    mul, d = s.mul, s.d_map
    for x in range(s.order):
        for y in range(s.order):
            if d[mul[x][y]] != d[mul[x][d[y]]]:
                return (x, y)


def _rcong(s):
    mul, r = s.mul, s.r_map
    for x in range(s.order):
        for y in range(s.order):
            if r[mul[x][y]] != r[mul[r[x]][y]]:
                return (x, y)


def _lwcong(s):
    mul, d, r = s.mul, s.d_map, s.r_map
    for x in range(s.order):
        for y in range(s.order):
            if d[mul[x][y]] != d[mul[x][d[mul[r[x]][y]]]]:
                return (x, y)


def _rwcong(s):
    mul, d, r = s.mul, s.d_map, s.r_map
    for x in range(s.order):
        for y in range(s.order):
            if r[mul[x][y]] != r[mul[r[mul[x][d[y]]]][y]]:
                return (x, y)


def _lmatch(s):
    mul, d, r = s.mul, s.d_map, s.r_map
    for x in range(s.order):
        for y in range(s.order):
            a = mul[x][d[y]]
            if r[a] != d[mul[r[a]][y]]:
                return (x, y)


def _rmatch(s):
    # formal dual of the left match-up condition
    mul, d, r = s.mul, s.d_map, s.r_map
    for x in range(s.order):
        for y in range(s.order):
            b = mul[r[x]][y]
            if d[b] != r[mul[x][d[b]]]:
                return (x, y)


def _rmatch_asprinted(s):
    # variant with R(y)x in the inner product; see LAWS.md
    mul, d, r = s.mul, s.d_map, s.r_map
    for x in range(s.order):
        for y in range(s.order):
            if d[mul[r[x]][y]] != r[mul[x][d[mul[r[y]][x]]]]:
                return (x, y)


def _smatch1(s):
    mul, d, r = s.mul, s.d_map, s.r_map
    for x in range(s.order):
        for y in range(s.order):
            if r[mul[x][d[y]]] != d[mul[r[x]][y]]:
                return (x, y)


def _smatch2(s):
    mul, d, r = s.mul, s.d_map, s.r_map
    for x in range(s.order):
        for y in range(s.order):
            if mul[x][y] != mul[mul[mul[x][d[y]]][r[x]]][y]:
                return (x, y)


def _dample(s):
    mul, d = s.mul, s.d_map
    for x in range(s.order):
        for y in range(s.order):
            if mul[x][d[y]] != mul[d[mul[x][y]]][x]:
                return (x, y)


def _rtod(s):
    mul, d, r = s.mul, s.d_map, s.r_map
    for x in range(s.order):
        for y in range(s.order):
            v = r[mul[x][y]]
            if v != d[mul[v][r[y]]]:
                return (x, y)


def _dtor(s):
    mul, d, r = s.mul, s.d_map, s.r_map
    for x in range(s.order):
        for y in range(s.order):
            v = d[mul[x][y]]
            if v != r[mul[d[x]][v]]:
                return (x, y)


def _band_d(s):
    mul = s.mul
    proj = s.projections
    pset = set(proj)
    for e in proj:
        for f in proj:
            v = mul[e][f]
            if (e == f and v != e) or v not in pset:
                return (e, f)


def _semilattice_d(s):
    mul = s.mul
    proj = s.projections
    pset = set(proj)
    for e in proj:
        for f in proj:
            v = mul[e][f]
            if (e == f and v != e) or v not in pset or v != mul[f][e]:
                return (e, f)


def _proj_defr(s):
    mul, d, r = s.mul, s.d_map, s.r_map
    for e in s.projections:
        for f in s.projections:
            v = mul[e][f]
            if d[v] != r[v]:
                return (e, f)


def _lrr(s):
    # left restriction laws for (S,mul,D), then the range law
    mul, d, r = s.mul, s.d_map, s.r_map
    n = s.order
    for x in range(n):
        if mul[d[x]][x] != x:
            return (x,)
    for x in range(n):
        for y in range(n):
            if mul[d[x]][d[y]] != mul[d[y]][d[x]]:
                return (x, y)
    for x in range(n):
        for y in range(n):
            if d[mul[d[x]][y]] != mul[d[x]][d[y]]:
                return (x, y)
    for x in range(n):
        for y in range(n):
            if mul[x][d[y]] != mul[d[mul[x][y]]][x]:
                return (x, y)
    for x in range(n):
        for y in range(n):
            v = mul[x][y]
            if mul[r[v]][r[y]] != r[v]:
                return (x, y)


SEMIGROUP_LAWS = {
    "CS1": _cs1,
    "CS2": _cs2,
    "CS3": _cs3,
    "CS4": _cs4,
    "CS5": _cs5,
    "CS6": _cs6,
    "LCONG": _lcong,
    "RCONG": _rcong,
    "LWCONG": _lwcong,
    "RWCONG": _rwcong,
    "LMATCH": _lmatch,
    "RMATCH": _rmatch,
    "RMATCH-ASPRINTED": _rmatch_asprinted,
    "SMATCH1": _smatch1,
    "SMATCH2": _smatch2,
    "DAMPLE": _dample,
    "RTOD": _rtod,
    "DTOR": _dtor,
    "BAND-D": _band_d,
    "SEMILATTICE-D": _semilattice_d,
    "PROJ-DEFR": _proj_defr,
    "LRR": _lrr,
}

SEMIGROUP_CLASSES = {
    "PRECAT": ("CS1", "CS2", "CS3", "CS4", "CS5"),
    "CAT": ("CS1", "CS2", "CS3", "CS4", "CS5", "CS6"),
    "LOCALISABLE": ("CS1", "CS2", "CS3", "CS4", "CS5", "LCONG", "RCONG", "BAND-D"),
    "EHRESMANN": ("CS1", "CS2", "CS3", "CS4", "CS5", "LCONG", "RCONG",
                  "SEMILATTICE-D"),
    "LEFT-SEMI-LOC": ("CS1", "CS2", "CS3", "CS4", "CS5", "LCONG", "RWCONG",
                      "BAND-D"),
    "RIGHT-SEMI-LOC": ("CS1", "CS2", "CS3", "CS4", "CS5", "RCONG", "LWCONG",
                       "BAND-D"),
    "MATCHUP": ("CS1", "CS2", "CS3", "CS4", "CS5", "CS6", "LMATCH", "RMATCH"),
    "STRONG-MATCHUP": ("CS1", "CS2", "CS3", "CS4", "CS5", "CS6", "SMATCH1",
                       "SMATCH2"),
    "DAMPLE-CLASS": ("CS1", "CS2", "CS3", "CS4", "CS5", "DAMPLE"),
    "LRR-CLASS": ("CS1", "CS2", "CS3", "CS4", "CS5", "LRR"),
}

_PRECAT_LAWS = SEMIGROUP_CLASSES["PRECAT"]


# ---------------------------------------------------------------------------
# pseudoproducts on a category with biaction

LEFT = "LEFT"
RIGHT = "RIGHT"
SYMMETRIC = "SYMMETRIC"
STRONG = "STRONG"
PSEUDOPRODUCT_KINDS = (LEFT, RIGHT, SYMMETRIC, STRONG)


def pseudoproduct(c, kind, s, t):
    """Value of the chosen pseudoproduct at (s,t), or None when the
    required composite does not exist in the category."""
    d, r, comp = c.d_map, c.r_map, c.comp
    la, ra = c.left_action, c.right_action
    if kind == LEFT:
        u = ra[d[t]][s]
        w = la[r[u]][t]
        if r[u] != d[w]:
            return None
        return comp[u][w]
    if kind == RIGHT:
        w = la[r[s]][t]
        u = ra[d[w]][s]
        if r[u] != d[w]:
            return None
        return comp[u][w]
    if kind == SYMMETRIC:
        m = la[r[s]][d[t]]
        u = ra[d[m]][s]
        w = la[r[m]][t]
        if r[u] != d[m] or r[m] != d[w]:
            return None
        return comp[comp[u][m]][w]
    if kind == STRONG:
        u = ra[d[t]][s]
        w = la[r[s]][t]
        if r[u] != d[w]:
            return None
        return comp[u][w]
    raise ValueError("unknown pseudoproduct kind %r" % (kind,))


def pseudoproduct_table(c, kind, law=None):
    """Total table of the chosen pseudoproduct.

    Raises PseudoproductUndefined naming the first pair whose composite
    does not exist; `law` overrides the tag used in the error.
    """
    n = c.order
    table = []
    for s in range(n):
        row = []
        for t in range(n):
            v = pseudoproduct(c, kind, s, t)
            if v is None:
                raise PseudoproductUndefined(law or kind, (s, t))
            row.append(v)
        table.append(tuple(row))
    return tuple(table)


# ---------------------------------------------------------------------------
# category-side checkers


def _composable_pairs(c):
    d, r = c.d_map, c.r_map
    for a in range(c.order):
        for b in range(c.order):
            if r[a] == d[b]:
                yield a, b


def _tc1(c):
    la, ra = c.left_action, c.right_action
    for e in c.identities:
        for f in c.identities:
            if la[e][f] != ra[f][e]:
                return (e, f)


def _tc2(c):
    la, ra, d, r = c.left_action, c.right_action, c.d_map, c.r_map
    for a in range(c.order):
        if la[d[a]][a] != a or ra[r[a]][a] != a:
            return (a,)


def _tc3(c):
    la, ra = c.left_action, c.right_action
    ids = set(c.identities)
    for e in c.identities:
        for f in c.identities:
            v = la[e][f]
            if v not in ids:
                return (e, f)
            for a in range(c.order):
                if la[e][la[f][a]] != la[v][a]:
                    return (e, f, a)
                if ra[v][a] != ra[f][ra[e][a]]:
                    return (e, f, a)


def _tc4a(c):
    la, d, r, comp = c.left_action, c.d_map, c.r_map, c.comp
    for a, b in _composable_pairs(c):
        ab = comp[a][b]
        for e in c.identities:
            u = la[e][a]
            w = la[r[u]][b]
            if r[u] != d[w] or comp[u][w] != la[e][ab]:
                return (a, b, e)


def _tc4b(c):
    la, ra, d, r, comp = c.left_action, c.right_action, c.d_map, c.r_map, c.comp
    for a, b in _composable_pairs(c):
        ab = comp[a][b]
        for e in c.identities:
            v = ra[e][b]
            u = ra[d[v]][a]
            if r[u] != d[v] or comp[u][v] != ra[e][ab]:
                return (a, b, e)


def _tc4ap(c):
    la, ra, d, r, comp = c.left_action, c.right_action, c.d_map, c.r_map, c.comp
    for a, b in _composable_pairs(c):
        ab = comp[a][b]
        for e in c.identities:
            u = la[e][a]
            w = la[r[u]][b]
            u2 = ra[d[w]][u]
            if r[u2] != d[w] or comp[u2][w] != la[e][ab]:
                return (a, b, e)


def _tc4bp(c):
    la, ra, d, r, comp = c.left_action, c.right_action, c.d_map, c.r_map, c.comp
    for a, b in _composable_pairs(c):
        ab = comp[a][b]
        for e in c.identities:
            v = ra[e][b]
            u = ra[d[v]][a]
            w = la[r[u]][v]
            if r[u] != d[w] or comp[u][w] != ra[e][ab]:
                return (a, b, e)


def _conj(*fns):
    def check(c):
        for fn in fns:
            w = fn(c)
            if w is not None:
                return w
    return check


def _tc5a(c):
    la, d = c.left_action, c.d_map
    for e in c.identities:
        for a in range(c.order):
            if d[la[e][a]] != la[e][d[a]]:
                return (e, a)


def _tc5b(c):
    ra, r = c.right_action, c.r_map
    for a in range(c.order):
        for e in c.identities:
            if r[ra[e][a]] != ra[e][r[a]]:
                return (a, e)


def _tc6(c):
    la, ra = c.left_action, c.right_action
    for e in c.identities:
        for a in range(c.order):
            for f in c.identities:
                if ra[f][la[e][a]] != la[e][ra[f][a]]:
                    return (e, a, f)


def _lmu(c):
    la, ra, d, r = c.left_action, c.right_action, c.d_map, c.r_map
    for s in range(c.order):
        for t in range(c.order):
            u = ra[d[t]][s]
            if r[u] != d[la[r[u]][t]]:
                return (s, t)


def _rmu(c):
    la, ra, d, r = c.left_action, c.right_action, c.d_map, c.r_map
    for s in range(c.order):
        for t in range(c.order):
            w = la[r[s]][t]
            if d[w] != r[ra[d[w]][s]]:
                return (s, t)


def _smu1(c):
    la, ra, d, r = c.left_action, c.right_action, c.d_map, c.r_map
    for s in range(c.order):
        for t in range(c.order):
            if r[ra[d[t]][s]] != d[la[r[s]][t]]:
                return (s, t)


def _smu2(c):
    la, d, r, comp = c.left_action, c.d_map, c.r_map, c.comp
    for e in c.identities:
        for f in c.identities:
            v = la[e][f]
            if r[v] != d[v] or comp[v][v] != v:
                return (e, f)


def _tc7a(c):
    la = c.left_action
    for a in range(c.order):
        for b in range(c.order):
            p = pseudoproduct(c, LEFT, a, b)
            if p is None:
                raise PseudoproductUndefined("TC7a", (a, b))
            for e in c.identities:
                q = pseudoproduct(c, LEFT, la[e][a], b)
                if q is None:
                    raise PseudoproductUndefined("TC7a", (la[e][a], b))
                if la[e][p] != q:
                    return (a, b, e)


def _tc7b(c):
    ra = c.right_action
    for a in range(c.order):
        for b in range(c.order):
            p = pseudoproduct(c, RIGHT, a, b)
            if p is None:
                raise PseudoproductUndefined("TC7b", (a, b))
            for e in c.identities:
                q = pseudoproduct(c, RIGHT, a, ra[e][b])
                if q is None:
                    raise PseudoproductUndefined("TC7b", (a, ra[e][b]))
                if ra[e][p] != q:
                    return (a, b, e)


def _tc7ap(c):
    # existence is part of the law here, so no error path
    la = c.left_action
    for a in range(c.order):
        for b in range(c.order):
            p = pseudoproduct(c, LEFT, a, b)
            for e in c.identities:
                q = pseudoproduct(c, LEFT, la[e][a], b)
                if p is None or q is None or la[e][p] != q:
                    return (a, b, e)


def _tc7bp(c):
    ra = c.right_action
    for a in range(c.order):
        for b in range(c.order):
            p = pseudoproduct(c, RIGHT, a, b)
            for e in c.identities:
                q = pseudoproduct(c, RIGHT, a, ra[e][b])
                if p is None or q is None or ra[e][p] != q:
                    return (a, b, e)


def _assoc_of(kind, law):
    def check(c):
        table = pseudoproduct_table(c, kind, law)
        return assoc_witness(table, c.order)
    return check


def _proj_comm(c):
    la = c.left_action
    for e in c.identities:
        for f in c.identities:
            if la[e][f] != la[f][e]:
                return (e, f)


def _act_dample(c):
    la, ra, d = c.left_action, c.right_action, c.d_map
    for s in range(c.order):
        for e in c.identities:
            v = ra[e][s]
            if la[d[v]][s] != v:
                return (s, e)


CATEGORY_LAWS = {
    "TC1": _tc1,
    "TC2": _tc2,
    "TC3": _tc3,
    "TC4": _conj(_tc4a, _tc4b),
    "TC4a": _tc4a,
    "TC4b": _tc4b,
    "TC4aP": _tc4ap,
    "TC4bP": _tc4bp,
    "TC4L": _conj(_tc4a, _tc4bp),
    "TC4R": _conj(_tc4ap, _tc4b),
    "TC5": _conj(_tc5a, _tc5b),
    "TC5a": _tc5a,
    "TC5b": _tc5b,
    "TC6": _tc6,
    "LMU": _lmu,
    "RMU": _rmu,
    "SMU1": _smu1,
    "SMU2": _smu2,
    "TC7a": _tc7a,
    "TC7b": _tc7b,
    "TC7aP": _tc7ap,
    "TC7bP": _tc7bp,
    "ASSOC-L": _assoc_of(LEFT, "ASSOC-L"),
    "ASSOC-R": _assoc_of(RIGHT, "ASSOC-R"),
    "ASSOC-SYM": _assoc_of(SYMMETRIC, "ASSOC-SYM"),
    "PROJ-COMM": _proj_comm,
    "ACT-DAMPLE": _act_dample,
}

CATEGORY_CLASSES = {
    "TRANSCRIPTION": ("TC3", "TC4a", "TC4b", "TC5a", "TC5b"),
    "CB-LEFT": ("LMU", "TC4a", "TC4bP", "ASSOC-L"),
    "CB-RIGHT": ("RMU", "TC4aP", "TC4b", "ASSOC-R"),
    "CB-MATCH": ("TC4a", "TC4b", "TC7a", "TC7b"),
    "CB-STRONG": ("TC4a", "TC4b", "TC7a", "TC7b", "SMU1", "SMU2"),
    "CB-SEMILOC": ("TC3", "TC4a", "TC4bP", "TC5a"),
    "CB-LRR": ("TC3", "TC4a", "TC4bP", "TC5a", "PROJ-COMM", "ACT-DAMPLE"),
}


# ---------------------------------------------------------------------------
# public entry points


def check_law(s, law) -> CheckReport:
    """Decide a semigroup-side law on a biunary semigroup."""
    if not isinstance(s, BiunarySemigroup):
        raise WrongStructureKind("check_law expects a biunary semigroup")
    if law in CATEGORY_LAWS:
        raise WrongStructureKind("%s is a category-side law" % law)
    if law not in SEMIGROUP_LAWS:
        raise ValueError("unknown law %r" % (law,))
    w = SEMIGROUP_LAWS[law](s)
    return CheckReport(law, w is None, w)


def check_tc(c, law) -> CheckReport:
    """Decide a category-side law on a category with biaction.

    For laws built on a pseudoproduct (TC7a/TC7b and the ASSOC family)
    raises PseudoproductUndefined when the product is not total.
    """
    if not isinstance(c, BiactionCategory):
        raise WrongStructureKind("check_tc expects a category with biaction")
    if law in SEMIGROUP_LAWS:
        raise WrongStructureKind("%s is a semigroup-side law" % law)
    if law not in CATEGORY_LAWS:
        raise ValueError("unknown law %r" % (law,))
    w = CATEGORY_LAWS[law](c)
    return CheckReport(law, w is None, w)


@dataclass(frozen=True)
class Classification:
    """Which named classes a structure belongs to.

    When the structure is not even a precat-semigroup, gate_failure holds
    the first failing CS-law report and no class is claimed.
    """

    classes: tuple[str, ...]
    gate_failure: CheckReport | None = None

    def __contains__(self, tag):
        return tag in self.classes


def _evaluate_classes(structure, law_table, class_table, checker):
    memo = {}

    def holds(tag):
        if tag not in memo:
            memo[tag] = checker(structure, tag)
        return memo[tag]

    held = tuple(cls for cls, tags in class_table.items()
                 if all(holds(t).holds for t in tags))
    return held, holds


def classify(s) -> Classification:
    """Return every semigroup class whose defining conjunction holds.

    Membership in PRECAT is the gate: when a CS1..CS5 law fails, the
    failing report is returned and no class is claimed.
    """
    if not isinstance(s, BiunarySemigroup):
        raise WrongStructureKind("classify expects a biunary semigroup")
    for tag in _PRECAT_LAWS:
        rep = check_law(s, tag)
        if not rep.holds:
            return Classification((), rep)
    held, _ = _evaluate_classes(s, SEMIGROUP_LAWS, SEMIGROUP_CLASSES, check_law)
    return Classification(held)


def classify_category(c) -> Classification:
    """Return every category-side class whose defining conjunction holds."""
    if not isinstance(c, BiactionCategory):
        raise WrongStructureKind("classify_category expects a category with biaction")
    held, _ = _evaluate_classes(c, CATEGORY_LAWS, CATEGORY_CLASSES, check_tc)
    return Classification(held)
