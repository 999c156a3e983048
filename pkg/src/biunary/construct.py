"""Constructions between biunary semigroups and categories with biaction.

One direction restricts a semigroup's product to the pairs with matching
range and domain and keeps the projection actions; the other rebuilds a
total product on a category with biaction via a pseudoproduct.  Round
trips compare tables literally on the same carrier.  Also here: morphism
checks, isomorphism search, and congruence/quotient machinery.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import NotCatSemigroup, OrderTooLarge, PrerequisiteFailed, ShapeError
from .laws import (
    LEFT,
    PSEUDOPRODUCT_KINDS,
    RIGHT,
    STRONG,
    SYMMETRIC,
    check_law,
    check_tc,
    pseudoproduct_table,
)
from .structures import (
    BiactionCategory,
    BiunarySemigroup,
    CheckReport,
    ElementMap,
    assoc_witness,
    validate_biaction_category,
    validate_semigroup,
)

_CAT_LAWS = ("CS1", "CS2", "CS3", "CS4", "CS5", "CS6")


def category_of(s: BiunarySemigroup) -> BiactionCategory:
    """The category with biaction determined by a cat-semigroup.

    comp(x,y) is the semigroup product exactly when R(x)=D(y); both
    actions are multiplication by a projection.  Raises NotCatSemigroup
    naming the first failing CS law otherwise.
    """
    for tag in _CAT_LAWS:
        rep = check_law(s, tag)
        if not rep.holds:
            raise NotCatSemigroup(tag, rep.witness)
    n, mul, d, r = s.order, s.mul, s.d_map, s.r_map
    comp = tuple(tuple(mul[x][y] if r[x] == d[y] else None for y in range(n))
                 for x in range(n))
    la = {e: tuple(mul[e][x] for x in range(n)) for e in s.projections}
    ra = {e: tuple(mul[x][e] for x in range(n)) for e in s.projections}
    return validate_biaction_category(s.names, d, r, comp, la, ra)


_EXT_PREREQS = {
    LEFT: ("LMU",),
    RIGHT: ("RMU",),
    SYMMETRIC: ("TC4a", "TC4b"),
    STRONG: ("TC4a", "TC4b", "SMU1", "SMU2"),
}

_ASSOC_TAG = {LEFT: "ASSOC-L", RIGHT: "ASSOC-R", SYMMETRIC: "ASSOC-SYM",
              STRONG: "ASSOC-STRONG"}

_RT_PREREQS_SEMIGROUP = {
    LEFT: ("LMATCH",),
    RIGHT: ("RMATCH",),
    SYMMETRIC: ("LMATCH", "RMATCH"),
    STRONG: ("SMATCH1", "SMATCH2"),
}

_RT_PREREQS_CATEGORY = {
    LEFT: ("LMU", "TC4a", "TC4bP", "ASSOC-L"),
    RIGHT: ("RMU", "TC4aP", "TC4b", "ASSOC-R"),
    SYMMETRIC: ("TC4a", "TC4b", "TC7a", "TC7b"),
    STRONG: ("TC4a", "TC4b", "TC7a", "TC7b", "SMU1", "SMU2"),
}


@dataclass(frozen=True)
class ExtensionResult:
    """Total-product candidate built from a category with biaction.

    The candidate tables are always present; `algebra` is the validated
    semigroup when the product is associative and None otherwise, so
    non-associative candidates remain inspectable data.
    """

    kind: str
    names: tuple[str, ...]
    mul: tuple[tuple[int, ...], ...]
    d_map: tuple[int, ...]
    r_map: tuple[int, ...]
    assoc: CheckReport
    algebra: BiunarySemigroup | None


def extension(c: BiactionCategory, kind: str) -> ExtensionResult:
    """Totalize the product of a category with biaction via a pseudoproduct.

    kind is LEFT, RIGHT, SYMMETRIC or STRONG; the corresponding
    definedness prerequisite (LMU, RMU, TC4, TC4+SMU) is checked first
    and PrerequisiteFailed raised when it does not hold.  Associativity
    of the resulting table is reported, never assumed.
    """
    if kind not in PSEUDOPRODUCT_KINDS:
        raise ValueError("unknown pseudoproduct kind %r" % (kind,))
    for tag in _EXT_PREREQS[kind]:
        rep = check_tc(c, tag)
        if not rep.holds:
            raise PrerequisiteFailed(tag, rep.witness)
    mul = pseudoproduct_table(c, kind)
    w = assoc_witness(mul, c.order)
    assoc = CheckReport(_ASSOC_TAG[kind], w is None, w)
    algebra = None
    if w is None:
        algebra = validate_semigroup(c.names, mul, c.d_map, c.r_map)
    return ExtensionResult(kind, c.names, mul, c.d_map, c.r_map, assoc, algebra)


def _table_diff(a_mul, b_mul, a_d, b_d, a_r, b_r, n):
    for x in range(n):
        for y in range(n):
            if a_mul[x][y] != b_mul[x][y]:
                return (x, y)
    for x in range(n):
        if a_d[x] != b_d[x] or a_r[x] != b_r[x]:
            return (x,)
    return None


def roundtrip_semigroup(s: BiunarySemigroup, kind: str) -> CheckReport:
    """Check that rebuilding the product from the determined category
    recovers the semigroup elementwise (same carrier, same tables)."""
    if kind not in PSEUDOPRODUCT_KINDS:
        raise ValueError("unknown pseudoproduct kind %r" % (kind,))
    for tag in _CAT_LAWS + _RT_PREREQS_SEMIGROUP[kind]:
        rep = check_law(s, tag)
        if not rep.holds:
            raise PrerequisiteFailed(tag, rep.witness)
    c = category_of(s)
    ext = extension(c, kind)
    if ext.algebra is None:
        raise PrerequisiteFailed(ext.assoc.law, ext.assoc.witness)
    w = _table_diff(ext.mul, s.mul, ext.d_map, s.d_map, ext.r_map, s.r_map, s.order)
    return CheckReport("ROUNDTRIP-SEMIGROUP-%s" % kind, w is None, w)


def roundtrip_category(c: BiactionCategory, kind: str) -> CheckReport:
    """Check that the category determined by the rebuilt semigroup equals
    the original category with biaction, table for table."""
    if kind not in PSEUDOPRODUCT_KINDS:
        raise ValueError("unknown pseudoproduct kind %r" % (kind,))
    for tag in _RT_PREREQS_CATEGORY[kind]:
        rep = check_tc(c, tag)
        if not rep.holds:
            raise PrerequisiteFailed(tag, rep.witness)
    ext = extension(c, kind)
    if ext.algebra is None:
        raise PrerequisiteFailed(ext.assoc.law, ext.assoc.witness)
    c2 = category_of(ext.algebra)
    w = None
    for x in range(c.order):
        for y in range(c.order):
            if c2.comp[x][y] != c.comp[x][y]:
                w = (x, y)
                break
        if w:
            break
    if w is None:
        for e in c.identities:
            for x in range(c.order):
                if (c2.left_action[e][x] != c.left_action[e][x]
                        or c2.right_action[e][x] != c.right_action[e][x]):
                    w = (e, x)
                    break
            if w:
                break
    return CheckReport("ROUNDTRIP-CATEGORY-%s" % kind, w is None, w)


# ---------------------------------------------------------------------------
# morphisms


def is_homomorphism(f: ElementMap, s1: BiunarySemigroup,
                    s2: BiunarySemigroup) -> bool:
    """True when f preserves multiplication, D and R pointwise."""
    if f.source_order != s1.order or f.target_order != s2.order:
        raise ShapeError("map shape does not match the structures")
    img = f.image
    for x in range(s1.order):
        if img[s1.d_map[x]] != s2.d_map[img[x]]:
            return False
        if img[s1.r_map[x]] != s2.r_map[img[x]]:
            return False
        for y in range(s1.order):
            if img[s1.mul[x][y]] != s2.mul[img[x]][img[y]]:
                return False
    return True


def is_biaction_functor(f: ElementMap, c1: BiactionCategory,
                        c2: BiactionCategory) -> bool:
    """True when f preserves definedness and value of composition, D, R,
    and both actions."""
    if f.source_order != c1.order or f.target_order != c2.order:
        raise ShapeError("map shape does not match the structures")
    img = f.image
    for x in range(c1.order):
        if img[c1.d_map[x]] != c2.d_map[img[x]]:
            return False
        if img[c1.r_map[x]] != c2.r_map[img[x]]:
            return False
    for x in range(c1.order):
        for y in range(c1.order):
            v = c1.comp[x][y]
            if v is None:
                continue
            w = c2.comp[img[x]][img[y]]
            if w is None or w != img[v]:
                return False
    for e in c1.identities:
        fe = img[e]
        for x in range(c1.order):
            if img[c1.left_action[e][x]] != c2.left_action[fe][img[x]]:
                return False
            if img[c1.right_action[e][x]] != c2.right_action[fe][img[x]]:
                return False
    return True


def _semigroup_signature(s, x, respect_unary):
    mul, n = s.mul, s.order
    idem = int(mul[x][x] == x)
    row_distinct = len(set(mul[x]))
    col_distinct = len(set(mul[y][x] for y in range(n)))
    sig = (idem, row_distinct, col_distinct)
    if respect_unary:
        d, r = s.d_map, s.r_map
        sig += (int(d[x] == x), int(r[x] == x),
                sum(1 for y in range(n) if d[y] == x),
                sum(1 for y in range(n) if r[y] == x))
    return sig


def _category_signature(c, x):
    n = c.order
    defined_out = sum(1 for y in range(n) if c.comp[x][y] is not None)
    defined_in = sum(1 for y in range(n) if c.comp[y][x] is not None)
    return (int(c.d_map[x] == x), int(c.r_map[x] == x), defined_out, defined_in,
            sum(1 for y in range(n) if c.d_map[y] == x),
            sum(1 for y in range(n) if c.r_map[y] == x))


def find_isomorphism(a, b, respect_unary: bool = True) -> ElementMap | None:
    """Exhaustive backtracking search for a structure isomorphism.

    Returns a bijective structure-preserving ElementMap, or None when no
    isomorphism exists.  For semigroups respect_unary=False ignores the
    D and R maps and decides plain semigroup isomorphism.  Candidate
    images are pruned by cheap per-element invariants before search.
    """
    if type(a) is not type(b):
        raise ShapeError("structures are of different kinds")
    if a.order != b.order:
        return None
    n = a.order
    is_sgrp = isinstance(a, BiunarySemigroup)
    if is_sgrp:
        sig_a = [_semigroup_signature(a, x, respect_unary) for x in range(n)]
        sig_b = [_semigroup_signature(b, x, respect_unary) for x in range(n)]
    else:
        sig_a = [_category_signature(a, x) for x in range(n)]
        sig_b = [_category_signature(b, x) for x in range(n)]
    if sorted(sig_a) != sorted(sig_b):
        return None
    candidates = [[y for y in range(n) if sig_b[y] == sig_a[x]] for x in range(n)]
    img = [None] * n
    used = [False] * n

    def consistent(x):
        ix = img[x]
        if is_sgrp:
            if respect_unary:
                for m_a, m_b in ((a.d_map, b.d_map), (a.r_map, b.r_map)):
                    v = m_a[x]
                    if img[v] is not None:
                        if m_b[ix] != img[v]:
                            return False
                    elif used[m_b[ix]]:
                        return False
            for y in range(n):
                if img[y] is None:
                    continue
                for u, w in ((a.mul[x][y], b.mul[ix][img[y]]),
                             (a.mul[y][x], b.mul[img[y]][ix])):
                    if img[u] is not None:
                        if w != img[u]:
                            return False
                    elif used[w]:
                        return False
            return True
        for m_a, m_b in ((a.d_map, b.d_map), (a.r_map, b.r_map)):
            v = m_a[x]
            if img[v] is not None:
                if m_b[ix] != img[v]:
                    return False
            elif used[m_b[ix]]:
                return False
        for y in range(n):
            if img[y] is None:
                continue
            for u, w in ((a.comp[x][y], b.comp[ix][img[y]]),
                         (a.comp[y][x], b.comp[img[y]][ix])):
                if (u is None) != (w is None):
                    return False
                if u is None:
                    continue
                if img[u] is not None:
                    if w != img[u]:
                        return False
                elif used[w]:
                    return False
        # action rows for already-mapped identities
        for e in a.identities:
            if img[e] is None:
                continue
            for y in (x,):
                for t_a, t_b in ((a.left_action, b.left_action),
                                 (a.right_action, b.right_action)):
                    u = t_a[e][y]
                    w = t_b[img[e]][ix]
                    if img[u] is not None:
                        if w != img[u]:
                            return False
                    elif used[w]:
                        return False
        return True

    def full_check():
        # partial consistency is a pruning heuristic only: products whose
        # image was unassigned at check time are never revisited, so every
        # complete assignment is verified from scratch before acceptance
        f = ElementMap(n, n, tuple(img))
        if is_sgrp:
            ok = (is_homomorphism(f, a, b) if respect_unary
                  else _plain_semigroup_hom(f, a, b))
        else:
            ok = is_biaction_functor(f, a, b)
        return f if ok else None

    def extend(x):
        if x == n:
            return full_check()
        for y in candidates[x]:
            if used[y]:
                continue
            img[x] = y
            used[y] = True
            if consistent(x):
                found = extend(x + 1)
                if found is not None:
                    return found
            img[x] = None
            used[y] = False
        return None

    return extend(0)


def _plain_semigroup_hom(f, a, b):
    img = f.image
    for x in range(a.order):
        for y in range(a.order):
            if img[a.mul[x][y]] != b.mul[img[x]][img[y]]:
                return False
    return True


# ---------------------------------------------------------------------------
# congruences and quotients

CONGRUENCE_ORDER_CAP = 10


@dataclass(frozen=True)
class Congruence:
    """A partition of the element set compatible with mul, D and R."""

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "blocks",
                           tuple(tuple(sorted(b)) for b in self.blocks))

    def block_of(self):
        out = {}
        for i, blk in enumerate(self.blocks):
            for x in blk:
                out[x] = i
        return out

    def describe(self, names):
        return " ".join("{%s}" % ",".join(names[x] for x in blk)
                        for blk in self.blocks)


def _is_congruence(s, block_of):
    n, mul, d, r = s.order, s.mul, s.d_map, s.r_map
    for x in range(n):
        for y in range(x + 1, n):
            if block_of[x] != block_of[y]:
                continue
            if block_of[d[x]] != block_of[d[y]] or block_of[r[x]] != block_of[r[y]]:
                return False
            for z in range(n):
                if block_of[mul[x][z]] != block_of[mul[y][z]]:
                    return False
                if block_of[mul[z][x]] != block_of[mul[z][y]]:
                    return False
    return True


def congruences(s: BiunarySemigroup) -> list[Congruence]:
    """All D,R-respecting semigroup congruences, by exhaustive partition
    search in restricted-growth order.  Guarded by a hard order cap."""
    n = s.order
    if n > CONGRUENCE_ORDER_CAP:
        raise OrderTooLarge("congruence search capped at order %d"
                            % CONGRUENCE_ORDER_CAP)
    mul, d, r = s.mul, s.d_map, s.r_map
    found = []
    assign = [0] * n

    def compatible_prefix(i):
        # pairwise checks limited to elements assigned so far
        for j in range(i):
            if assign[j] != assign[i]:
                continue
            if d[j] <= i and d[i] <= i and assign[d[j]] != assign[d[i]]:
                return False
            if r[j] <= i and r[i] <= i and assign[r[j]] != assign[r[i]]:
                return False
            for z in range(i + 1):
                p, q = mul[j][z], mul[i][z]
                if p <= i and q <= i and assign[p] != assign[q]:
                    return False
                p, q = mul[z][j], mul[z][i]
                if p <= i and q <= i and assign[p] != assign[q]:
                    return False
        return True

    def grow(i, nblocks):
        if i == n:
            block_of = list(assign)
            if _is_congruence(s, block_of):
                blocks = [[] for _ in range(nblocks)]
                for x in range(n):
                    blocks[assign[x]].append(x)
                found.append(Congruence(tuple(map(tuple, blocks))))
            return
        for b in range(nblocks + 1):
            assign[i] = b
            if compatible_prefix(i):
                grow(i + 1, max(nblocks, b + 1))
        assign[i] = 0

    if n == 1:
        return [Congruence(((0,),))]
    grow(1, 1)
    return found


def quotient(s: BiunarySemigroup, c: Congruence) -> BiunarySemigroup:
    """Quotient algebra with induced tables; block labels are brace-joined
    member labels.  The partition is re-verified to be a congruence."""
    n = s.order
    seen = sorted(x for blk in c.blocks for x in blk)
    if seen != list(range(n)):
        raise ShapeError("partition does not cover the element set")
    block_of = c.block_of()
    if not _is_congruence(s, block_of):
        raise ShapeError("partition is not a D,R-respecting congruence")
    reps = [blk[0] for blk in c.blocks]
    names = tuple("{%s}" % ",".join(s.names[x] for x in blk) for blk in c.blocks)
    k = len(reps)
    mul = tuple(tuple(block_of[s.mul[a][b]] for b in reps) for a in reps)
    d = tuple(block_of[s.d_map[a]] for a in reps)
    r = tuple(block_of[s.r_map[a]] for a in reps)
    return BiunarySemigroup(k, names, mul, d, r)
