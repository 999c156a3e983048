"""Exhaustive enumeration of small models with satisfy/violate constraints,
isomorphism rejection via lex-least canonical forms, and quotient-closure
testing.

Semigroup search fills the multiplication table cell by cell in row-major
order with incremental associativity propagation; the D,R maps are chosen
in an outer loop, restricted to the precat-compatible pairs whenever the
constraints demand a precat-semigroup, which also pre-forces the cells
where a projection must act as a one-sided identity.  Category search
fills the composition table over the composable pairs (values already
narrowed by the domain/range coherence axiom) and then the two action
tables, pruning with the mixed-associativity law after every assignment.
Every emitted model is re-validated through the ordinary constructors and
the law engine, so search-internal pruning can never admit a false
positive.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import permutations, product

from .construct import congruences, quotient
from .errors import PseudoproductUndefined
from .laws import (
    CATEGORY_CLASSES,
    CATEGORY_LAWS,
    SEMIGROUP_CLASSES,
    SEMIGROUP_LAWS,
    check_law,
    check_tc,
)
from .structures import (
    BiactionCategory,
    BiunarySemigroup,
    default_names,
    validate_biaction_category,
    validate_semigroup,
)

MAX_SEARCH_ORDER = 6

SEMIGROUP = "semigroup"
CATEGORY = "category"
_KIND_ALIASES = {"semigroup": SEMIGROUP, "category": CATEGORY,
                 "biaction-category": CATEGORY}


@dataclass(frozen=True)
class SearchQuery:
    """What to enumerate: structure kind, order, law constraints, flags."""

    kind: str
    order: int
    satisfy: frozenset = frozenset()
    violate: frozenset = frozenset()
    up_to_iso: bool = False
    limit: int | None = None
    budget: float | None = None

    def __post_init__(self):
        if self.kind not in _KIND_ALIASES:
            raise ValueError("unknown kind %r" % (self.kind,))
        object.__setattr__(self, "kind", _KIND_ALIASES[self.kind])
        object.__setattr__(self, "satisfy", frozenset(self.satisfy))
        object.__setattr__(self, "violate", frozenset(self.violate))
        if not 1 <= self.order <= MAX_SEARCH_ORDER:
            raise ValueError("order must be between 1 and %d" % MAX_SEARCH_ORDER)
        if self.satisfy & self.violate:
            raise ValueError("satisfy and violate overlap: %r"
                             % sorted(self.satisfy & self.violate))
        laws = SEMIGROUP_LAWS if self.kind == SEMIGROUP else CATEGORY_LAWS
        classes = SEMIGROUP_CLASSES if self.kind == SEMIGROUP else CATEGORY_CLASSES
        for tag in self.satisfy | self.violate:
            if tag not in laws and tag not in classes:
                raise ValueError("unknown %s law or class %r" % (self.kind, tag))


@dataclass
class SearchResult:
    """Models found plus enough bookkeeping to tell a full scan from a
    budget- or limit-truncated one."""

    models: list
    nodes: int
    completed: bool


class _Ctx:
    def __init__(self, budget):
        self.nodes = 0
        self.deadline = None if budget is None else time.monotonic() + budget
        self.timed_out = False

    def tick(self):
        self.nodes += 1
        if (self.deadline is not None and self.nodes % 1024 == 0
                and time.monotonic() > self.deadline):
            self.timed_out = True
        return self.timed_out


def _expand_satisfy(tags, classes):
    out = set()
    for tag in tags:
        if tag in classes:
            out.update(classes[tag])
        else:
            out.add(tag)
    return out


def _holds(structure, tag, checker, classes):
    # a law whose pseudoproduct is undefined somewhere certainly does not hold
    try:
        if tag in classes:
            return all(checker(structure, t).holds for t in classes[tag])
        return checker(structure, tag).holds
    except PseudoproductUndefined:
        return False


# ---------------------------------------------------------------------------
# D,R map generation


def _restricted_dr_pairs(n):
    # common image P with both maps the identity on P
    elems = list(range(n))
    for pmask in range(1, 1 << n):
        pset = [i for i in elems if pmask >> i & 1]
        rest = [i for i in elems if not pmask >> i & 1]
        for dv in product(pset, repeat=len(rest)):
            d = list(range(n))
            for i, v in zip(rest, dv):
                d[i] = v
            dt = tuple(d)
            for rv in product(pset, repeat=len(rest)):
                r = list(range(n))
                for i, v in zip(rest, rv):
                    r[i] = v
                yield dt, tuple(r)


def _all_dr_pairs(n):
    for d in product(range(n), repeat=n):
        for r in product(range(n), repeat=n):
            yield d, r


# ---------------------------------------------------------------------------
# semigroup enumeration


def _assoc_ok_after(mul, n, a, b):
    # check only the associativity instances that involve cell (a,b)
    c = mul[a][b]
    row_a, row_b, row_c = mul[a], mul[b], mul[c]
    for z in range(n):
        u = row_b[z]
        if u is not None:
            v = row_a[u]
            w = row_c[z]
            if v is not None and w is not None and v != w:
                return False
    for x in range(n):
        u = mul[x][a]
        if u is not None:
            w = mul[u][b]
            v = mul[x][c]
            if w is not None and v is not None and w != v:
                return False
    for x in range(n):
        rowx = mul[x]
        for y in range(n):
            if rowx[y] == a:
                u = mul[y][b]
                if u is not None:
                    v = rowx[u]
                    if v is not None and v != c:
                        return False
    for y in range(n):
        u = row_a[y]
        if u is not None:
            rowu = mul[u]
            rowy = mul[y]
            for z in range(n):
                if rowy[z] == b and rowu[z] is not None and rowu[z] != c:
                    return False
    return True


def _forced_mul_cells(n, d, r):
    forced = {}
    for x in range(n):
        for a, b, v in ((d[x], x, x), (x, r[x], x)):
            cur = forced.get((a, b))
            if cur is None:
                forced[(a, b)] = v
            elif cur != v:
                return None
    return forced


def _fill_mul(n, d, r, constrained, ctx):
    mul = [[None] * n for _ in range(n)]
    if constrained:
        forced = _forced_mul_cells(n, d, r)
        if forced is None:
            return
        for (a, b), v in forced.items():
            mul[a][b] = v
        for (a, b) in forced:
            if not _assoc_ok_after(mul, n, a, b):
                return
    free = [(x, y) for x in range(n) for y in range(n) if mul[x][y] is None]

    def rec(pos):
        if pos == len(free):
            yield tuple(tuple(row) for row in mul)
            return
        x, y = free[pos]
        for v in range(n):
            if ctx.tick():
                return
            mul[x][y] = v
            if _assoc_ok_after(mul, n, x, y):
                yield from rec(pos + 1)
                if ctx.timed_out:
                    mul[x][y] = None
                    return
            mul[x][y] = None

    yield from rec(0)


def _semigroup_stream(query, ctx):
    n = query.order
    sat = _expand_satisfy(query.satisfy, SEMIGROUP_CLASSES)
    constrained = set(SEMIGROUP_CLASSES["PRECAT"]) <= sat
    names = default_names(n)
    dr_iter = _restricted_dr_pairs(n) if constrained else _all_dr_pairs(n)
    for d, r in dr_iter:
        if ctx.timed_out:
            return
        for mul in _fill_mul(n, d, r, constrained, ctx):
            s = validate_semigroup(names, mul, d, r)
            if all(check_law(s, t).holds for t in sorted(sat)) and \
                    all(not _holds(s, t, check_law, SEMIGROUP_CLASSES)
                        for t in sorted(query.violate)):
                yield s


# ---------------------------------------------------------------------------
# category enumeration


def _category_stream(query, ctx):
    n = query.order
    names = default_names(n)
    for d, r in _restricted_dr_pairs(n):
        if ctx.timed_out:
            return
        yield from _categories_for_dr(n, names, d, r, query, ctx)


def _categories_for_dr(n, names, d, r, query, ctx):
    ids = sorted(set(d))
    comp = [[None] * n for _ in range(n)]
    composable = [(x, y) for x in range(n) for y in range(n) if r[x] == d[y]]
    chains = [(x, y, z) for (x, y) in composable for z in range(n) if r[y] == d[z]]
    ok = True
    for x in range(n):
        for a, b, v in ((d[x], x, x), (x, r[x], x)):
            cur = comp[a][b]
            if cur is None:
                comp[a][b] = v
            elif cur != v:
                ok = False
    if not ok:
        return

    def chains_ok():
        for x, y, z in chains:
            xy = comp[x][y]
            yz = comp[y][z]
            if xy is None or yz is None:
                continue
            lhs = comp[xy][z]
            rhs = comp[x][yz]
            if lhs is not None and rhs is not None and lhs != rhs:
                return False
        return True

    if not chains_ok():
        return
    free = [(x, y) for (x, y) in composable if comp[x][y] is None]
    domains = {}
    for x, y in free:
        vals = [z for z in range(n) if d[z] == d[x] and r[z] == r[y]]
        if not vals:
            return
        domains[(x, y)] = vals

    def rec_comp(pos):
        if pos == len(free):
            yield from _actions_for_comp(n, names, d, r, ids, comp, query, ctx)
            return
        x, y = free[pos]
        for v in domains[(x, y)]:
            if ctx.tick():
                return
            comp[x][y] = v
            if chains_ok():
                yield from rec_comp(pos + 1)
                if ctx.timed_out:
                    comp[x][y] = None
                    return
            comp[x][y] = None

    yield from rec_comp(0)


def _actions_for_comp(n, names, d, r, ids, comp, query, ctx):
    idset = set(ids)
    la = {e: [None] * n for e in ids}
    ra = {e: [None] * n for e in ids}
    for x in range(n):
        la[d[x]][x] = x
        ra[r[x]][x] = x

    def tc6_ok():
        for e in ids:
            row = la[e]
            for x in range(n):
                v = row[x]
                for f in ids:
                    if v is not None:
                        lhs = ra[f][v]
                    else:
                        lhs = None
                    rx = ra[f][x]
                    rhs = row[rx] if rx is not None else None
                    if lhs is not None and rhs is not None and lhs != rhs:
                        return False
        return True

    free_la = [(e, x) for e in ids for x in range(n) if la[e][x] is None]
    free_ra = [(e, x) for e in ids for x in range(n)
               if ra[e][x] is None and x not in idset]
    cells = [("la", e, x) for e, x in free_la] + [("ra", e, x) for e, x in free_ra]

    def set_cell(which, e, x, v):
        if which == "la":
            la[e][x] = v
            if x in idset:
                ra[x][e] = v
        else:
            ra[e][x] = v

    def clear_cell(which, e, x):
        if which == "la":
            la[e][x] = None
            if x in idset:
                ra[x][e] = None
        else:
            ra[e][x] = None

    def rec_act(pos):
        if pos == len(cells):
            c = validate_biaction_category(
                names, d, r, [tuple(row) for row in comp],
                {e: tuple(la[e]) for e in ids}, {e: tuple(ra[e]) for e in ids})
            if all(_holds(c, t, check_tc, CATEGORY_CLASSES)
                   for t in sorted(query.satisfy)) and \
                    all(not _holds(c, t, check_tc, CATEGORY_CLASSES)
                        for t in sorted(query.violate)):
                yield c
            return
        which, e, x = cells[pos]
        for v in range(n):
            if ctx.tick():
                return
            set_cell(which, e, x, v)
            if tc6_ok():
                yield from rec_act(pos + 1)
                if ctx.timed_out:
                    clear_cell(which, e, x)
                    return
            clear_cell(which, e, x)

    if tc6_ok():
        yield from rec_act(0)


# ---------------------------------------------------------------------------
# canonical forms and isomorphism rejection


def canonical_form(structure):
    """Lex-least relabeling of a structure over all element permutations.

    Returns (key, representative) where key is a flat tuple encoding of
    the relabeled tables (the same for all isomorphic structures) and the
    representative carries default labels.
    """
    n = structure.order
    if isinstance(structure, BiunarySemigroup):
        best = None
        for p in permutations(range(n)):
            inv = [0] * n
            for i, v in enumerate(p):
                inv[v] = i
            mul = tuple(p[structure.mul[inv[i]][inv[j]]]
                        for i in range(n) for j in range(n))
            d = tuple(p[structure.d_map[inv[i]]] for i in range(n))
            r = tuple(p[structure.r_map[inv[i]]] for i in range(n))
            key = mul + d + r
            if best is None or key < best:
                best = key
        mul_rows = tuple(tuple(best[i * n:(i + 1) * n]) for i in range(n))
        d = best[n * n:n * n + n]
        r = best[n * n + n:]
        rep = validate_semigroup(default_names(n), mul_rows, d, r)
        return best, rep
    if isinstance(structure, BiactionCategory):
        best = None
        best_tabs = None
        for p in permutations(range(n)):
            inv = [0] * n
            for i, v in enumerate(p):
                inv[v] = i
            comp = tuple(
                (n if structure.comp[inv[i]][inv[j]] is None
                 else p[structure.comp[inv[i]][inv[j]]])
                for i in range(n) for j in range(n))
            d = tuple(p[structure.d_map[inv[i]]] for i in range(n))
            r = tuple(p[structure.r_map[inv[i]]] for i in range(n))
            ids = tuple(sorted(p[e] for e in structure.identities))
            la = tuple(tuple(p[structure.left_action[inv[e]][inv[i]]]
                             for i in range(n)) for e in ids)
            ra = tuple(tuple(p[structure.right_action[inv[e]][inv[i]]]
                             for i in range(n)) for e in ids)
            key = comp + d + r + tuple(v for row in la for v in row) \
                + tuple(v for row in ra for v in row)
            if best is None or key < best:
                best = key
                best_tabs = (comp, d, r, ids, la, ra)
        comp, d, r, ids, la, ra = best_tabs
        comp_rows = tuple(tuple(None if v == n else v
                                for v in comp[i * n:(i + 1) * n])
                          for i in range(n))
        rep = validate_biaction_category(
            default_names(n), d, r, comp_rows,
            {e: la[k] for k, e in enumerate(ids)},
            {e: ra[k] for k, e in enumerate(ids)})
        return best, rep
    raise TypeError("cannot canonicalize %r" % type(structure).__name__)


# ---------------------------------------------------------------------------
# public operations


def enumerate_models(query: SearchQuery) -> SearchResult:
    """Enumerate every model of the given order meeting the constraints.

    With up_to_iso the models are lex-least canonical representatives in
    first-encounter order.  completed is True only when the whole search
    space was scanned (neither the budget nor the limit cut it short);
    every returned model has passed the ordinary validators and the law
    engine.
    """
    ctx = _Ctx(query.budget)
    stream = (_semigroup_stream(query, ctx) if query.kind == SEMIGROUP
              else _category_stream(query, ctx))
    models = []
    seen = set()
    truncated = False
    for m in stream:
        if query.up_to_iso:
            key, rep = canonical_form(m)
            if key in seen:
                continue
            seen.add(key)
            m = rep
        models.append(m)
        if query.limit is not None and len(models) >= query.limit:
            truncated = True
            break
    return SearchResult(models, ctx.nodes, not (ctx.timed_out or truncated))


@dataclass
class MinimalResult:
    """Outcome of a smallest-witness search.

    model is the witness when one was found (at order `order`);
    certified_order is the largest order whose search space was fully
    scanned without finding one.  completed is False when the budget ran
    out mid-order.
    """

    model: object | None
    order: int | None
    certified_order: int
    completed: bool
    nodes: int = 0


def minimal_counterexample(satisfy, violate, max_order: int,
                           budget: float | None = None,
                           kind: str = SEMIGROUP) -> MinimalResult:
    """Search orders 1..max_order for a model meeting the constraints.

    Only fully scanned orders are certified; nothing is extrapolated
    past them.
    """
    deadline = None if budget is None else time.monotonic() + budget
    certified = 0
    nodes = 0
    for order in range(1, max_order + 1):
        remaining = None
        if deadline is not None:
            remaining = deadline - time.monotonic()
            if remaining <= 0:
                return MinimalResult(None, None, certified, False, nodes)
        q = SearchQuery(kind, order, frozenset(satisfy), frozenset(violate),
                        limit=1, budget=remaining)
        res = enumerate_models(q)
        nodes += res.nodes
        if res.models:
            return MinimalResult(res.models[0], order, certified, True, nodes)
        if not res.completed:
            return MinimalResult(None, None, certified, False, nodes)
        certified = order
    return MinimalResult(None, None, certified, True, nodes)


@dataclass
class ClosureResult:
    """Outcome of a quotient-closure test.

    witness is (model, congruence) when some model in the class has a
    quotient outside it; certified_order is the largest fully scanned
    order at which the class proved closed.
    """

    witness: tuple | None
    certified_order: int
    completed: bool


def closure_under_quotients(class_laws, max_order: int,
                            budget: float | None = None) -> ClosureResult:
    """Look for a model in the class with a D,R-respecting quotient
    outside the class, or certify closure up to max_order."""
    deadline = None if budget is None else time.monotonic() + budget
    laws = sorted(frozenset(class_laws))
    certified = 0
    for order in range(1, max_order + 1):
        remaining = None
        if deadline is not None:
            remaining = deadline - time.monotonic()
            if remaining <= 0:
                return ClosureResult(None, certified, False)
        q = SearchQuery(SEMIGROUP, order, frozenset(laws), frozenset(),
                        up_to_iso=True, budget=remaining)
        res = enumerate_models(q)
        for s in res.models:
            for cong in congruences(s):
                qt = quotient(s, cong)
                if not all(_holds(qt, t, check_law, SEMIGROUP_CLASSES)
                           for t in laws):
                    return ClosureResult((s, cong), certified, True)
        if not res.completed:
            return ClosureResult(None, certified, False)
        certified = order
    return ClosureResult(None, certified, True)


# ---------------------------------------------------------------------------
# query text form


def parse_query(text: str) -> SearchQuery:
    """Parse the one-line query form, e.g.
    'search kind=semigroup order=4 satisfy=PRECAT,LCONG violate=CS6
    up_to_iso=true budget=60'."""
    toks = text.split()
    if not toks or toks[0] != "search":
        raise ValueError("query must start with 'search'")
    fields = {}
    for tok in toks[1:]:
        if "=" not in tok:
            raise ValueError("expected key=value, got %r" % tok)
        k, v = tok.split("=", 1)
        if k in fields:
            raise ValueError("duplicate key %r" % k)
        fields[k] = v
    if "order" not in fields:
        raise ValueError("query needs order=N")
    kwargs = {
        "kind": fields.pop("kind", SEMIGROUP),
        "order": int(fields.pop("order")),
    }
    if "satisfy" in fields:
        kwargs["satisfy"] = frozenset(t for t in fields.pop("satisfy").split(",") if t)
    if "violate" in fields:
        kwargs["violate"] = frozenset(t for t in fields.pop("violate").split(",") if t)
    if "up_to_iso" in fields:
        v = fields.pop("up_to_iso").lower()
        if v not in ("true", "false"):
            raise ValueError("up_to_iso must be true or false")
        kwargs["up_to_iso"] = v == "true"
    if "limit" in fields:
        kwargs["limit"] = int(fields.pop("limit"))
    if "budget" in fields:
        kwargs["budget"] = float(fields.pop("budget"))
    if fields:
        raise ValueError("unknown query keys: %s" % ", ".join(sorted(fields)))
    return SearchQuery(**kwargs)
