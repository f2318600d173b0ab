"""Shared generators and independent oracles for the test-suite.

Oracles here recompute expected values by raw enumeration, without going
through the library's lifting/extension tables or regularity predicates, so
that every law is checked by two unrelated routes.
"""

import itertools

from qsemicat import (
    QArrow,
    builtin_quantaloid,
    validate_quantaloid,
    validate_semicategory,
    validate_sup_lattice,
)
from qsemicat.lattice import chain

NAMES = ("a", "b", "c", "d", "e")


def one_object_semicat(q, elem, name="*"):
    obj = q.objects[0]
    return validate_semicategory(q, [(name, obj)], {(name, name): elem})


def chain3_A():
    """The one-object semicategory with hom e over the three-chain."""
    return one_object_semicat(builtin_quantaloid("3"), 1)


def chain3_C():
    """The one-object category over the three-chain."""
    return one_object_semicat(builtin_quantaloid("3"), 2)


def min_table(k):
    return [[min(g, f) for f in range(k)] for g in range(k)]


def two_object_quantaloid():
    """A two-object quantaloid with all homs the two-chain and meet composition."""
    lat = chain(2)
    objs = ("X", "Y")
    homs = {(x, y): lat for x in objs for y in objs}
    compose = {(x, y, z): min_table(2) for x in objs for y in objs for z in objs}
    return validate_quantaloid(objs, homs, compose, {"X": 1, "Y": 1})


def endomap_quantaloid():
    """The quantale of join-preserving endomaps of the three-chain.

    Elements are the monotone maps fixing bottom, encoded as pairs
    (f(1), f(2)) with f(1) <= f(2); composition is function composition,
    which is noncommutative, so liftings and extensions genuinely differ.
    """
    maps = [(a, b) for a in range(3) for b in range(3) if a <= b]
    index = {m: i for i, m in enumerate(maps)}
    pairs = [
        (index[f], index[g])
        for f in maps
        for g in maps
        if f[0] <= g[0] and f[1] <= g[1]
    ]
    lat = validate_sup_lattice(len(maps), pairs)

    def apply(f, x):
        return 0 if x == 0 else f[x - 1]

    def mult(g, f):
        gf = (apply(maps[g], maps[f][0]), apply(maps[g], maps[f][1]))
        return index[gf]

    from qsemicat import from_quantale

    return from_quantale(lat, mult, index[(1, 2)])


def rel_quantaloid():
    """Sets of sizes one and two with relations as arrows.

    Hom-lattices are powerset lattices ordered by inclusion (encoded as
    bitmasks over the product of the two carriers), composition is
    relational composition, identities are the diagonals.  Homs of all
    four sizes 2, 4, 4, 16 appear, so typed machinery gets exercised on
    genuinely different lattices.
    """
    sizes = {"X": 1, "Y": 2}
    objs = ("X", "Y")

    def lattice(n_dom, n_cod):
        cells = n_dom * n_cod
        n = 1 << cells
        pairs = [(i, j) for i in range(n) for j in range(n) if i | j == j]
        return validate_sup_lattice(n, pairs)

    homs = {(x, y): lattice(sizes[x], sizes[y]) for x in objs for y in objs}

    def compose_table(x, y, z):
        nx, ny, nz = sizes[x], sizes[y], sizes[z]

        def comp(g, f):
            # f ⊆ x×y and g ⊆ y×z as bitmasks with cell (i, j) = bit i*n_cod + j
            out = 0
            for i in range(nx):
                for k in range(nz):
                    if any(
                        f >> (i * ny + j) & 1 and g >> (j * nz + k) & 1
                        for j in range(ny)
                    ):
                        out |= 1 << (i * nz + k)
            return out

        return [
            [comp(g, f) for f in range(1 << (nx * ny))] for g in range(1 << (ny * nz))
        ]

    compose = {(x, y, z): compose_table(x, y, z) for x in objs for y in objs for z in objs}
    identities = {
        x: sum(1 << (i * sizes[x] + i) for i in range(sizes[x])) for x in objs
    }
    return validate_quantaloid(objs, homs, compose, identities)


def idempotent_matrices(k, n):
    """All n x n matrices over the k-chain quantale (meet) with A.A = A."""
    out = []
    for flat in itertools.product(range(k), repeat=n * n):
        rows = [flat[i * n : (i + 1) * n] for i in range(n)]
        ok = True
        for i in range(n):
            for j in range(n):
                best = 0
                for x in range(n):
                    v = min(rows[i][x], rows[x][j])
                    if v > best:
                        best = v
                if best != rows[i][j]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(rows)
    return out


def composition_ok_matrices(k, n):
    """All n x n matrices over the k-chain quantale with A.A <= A (semicategories)."""
    out = []
    for flat in itertools.product(range(k), repeat=n * n):
        rows = [flat[i * n : (i + 1) * n] for i in range(n)]
        ok = True
        for i in range(n):
            for j in range(n):
                for x in range(n):
                    if min(rows[i][x], rows[x][j]) > rows[i][j]:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            out.append(rows)
    return out


def semicat_from_rows(q, rows):
    n = len(rows)
    obj = q.objects[0]
    names = NAMES[:n]
    hom = {(names[i], names[j]): rows[i][j] for i in range(n) for j in range(n)}
    return validate_semicategory(q, [(nm, obj) for nm in names], hom)


def regular_semicats(qname, max_objects):
    """Every regular semicategory with up to max_objects objects over a chain quantaloid."""
    q = builtin_quantaloid(qname)
    k = q.hom_lat(q.objects[0], q.objects[0]).size
    out = []
    for n in range(1, max_objects + 1):
        for rows in idempotent_matrices(k, n):
            out.append(semicat_from_rows(q, rows))
    return out


def all_semicats(qname, max_objects):
    """Every semicategory with up to max_objects objects over a chain quantaloid."""
    q = builtin_quantaloid(qname)
    k = q.hom_lat(q.objects[0], q.objects[0]).size
    out = []
    for n in range(1, max_objects + 1):
        for rows in composition_ok_matrices(k, n):
            out.append(semicat_from_rows(q, rows))
    return out


def transitive_relations(n):
    """All transitive relations on n points, as tuples of row bitmasks.

    Depth-first over the cells in row-major order; local consistency checks
    on every decision make completed assignments exactly the transitive
    relations.
    """
    rows = [0] * n
    dec = [0] * n
    out = []
    cells = [(i, j) for i in range(n) for j in range(n)]

    def rec(t):
        if t == len(cells):
            out.append(tuple(rows))
            return
        i, j = cells[t]
        bit = 1 << j
        ok0 = True
        for k in range(n):
            if rows[i] >> k & 1 and dec[k] >> j & 1 and rows[k] >> j & 1:
                ok0 = False
                break
        if ok0:
            dec[i] |= bit
            rec(t + 1)
            dec[i] &= ~bit
        ok1 = True
        for k in range(n):
            if rows[j] >> k & 1 and dec[i] >> k & 1 and not rows[i] >> k & 1:
                ok1 = False
                break
            if rows[k] >> i & 1 and dec[k] >> j & 1 and not rows[k] >> j & 1:
                ok1 = False
                break
        if ok1:
            rows[i] |= bit
            dec[i] |= bit
            rec(t + 1)
            rows[i] &= ~bit
            dec[i] &= ~bit

    rec(0)
    return out


def rows_to_pairs(rows, names=NAMES):
    n = len(rows)
    return [(names[i], names[j]) for i in range(n) for j in range(n) if rows[i] >> j & 1]


def boolean_square(rows):
    """Row bitmasks of the relational composite R;R."""
    n = len(rows)
    out = []
    for i in range(n):
        acc = 0
        for k in range(n):
            if rows[i] >> k & 1:
                acc |= rows[k]
        out.append(acc)
    return tuple(out)


# -- oracles ----------------------------------------------------------------


def oracle_lifting(q, c: QArrow, b: QArrow) -> int:
    """Brute-force largest d with c∘d <= b, independent of the cached tables.

    Scans every candidate, keeps the satisfying ones, and returns the one
    that dominates all others (asserting it exists rather than joining).
    """
    lat_d = q.hom_lat(b.dom, c.dom)
    lat_b = q.hom_lat(b.dom, b.cod)
    good = [
        d
        for d in range(lat_d.size)
        if lat_b.le(q.compose_table[(b.dom, c.dom, c.cod)][c.elem][d], b.elem)
    ]
    best = [d for d in good if all(lat_d.le(x, d) for x in good)]
    assert len(best) == 1, "lifting candidates have no unique maximum"
    return best[0]


def oracle_extension(q, c: QArrow, b: QArrow) -> int:
    """Brute-force largest d with d∘c <= b."""
    lat_d = q.hom_lat(c.cod, b.cod)
    lat_b = q.hom_lat(b.dom, b.cod)
    good = [
        d
        for d in range(lat_d.size)
        if lat_b.le(q.compose_table[(c.dom, c.cod, b.cod)][d][c.elem], b.elem)
    ]
    best = [d for d in good if all(lat_d.le(x, d) for x in good)]
    assert len(best) == 1, "extension candidates have no unique maximum"
    return best[0]


def downsets(n, rows):
    """All subsets of 0..n-1 down-closed under the relation (i -> j iff rows[i]>>j&1).

    Down-closed means: j in S and i related-below j implies i in S, where
    i is below j when the relation holds as i ≺ j.
    """
    out = []
    for mask in range(1 << n):
        ok = True
        for i in range(n):
            for j in range(n):
                if rows[i] >> j & 1 and mask >> j & 1 and not mask >> i & 1:
                    ok = False
        if ok:
            out.append(mask)
    return out


def upsets_of_poset(elements, le):
    """All up-closed subsets of a poset given as a le(x, y) predicate."""
    out = []
    n = len(elements)
    for mask in range(1 << n):
        S = {elements[i] for i in range(n) if mask >> i & 1}
        if all(y in S for x in S for y in elements if le(x, y)):
            out.append(frozenset(S))
    return sorted(out, key=lambda s: (len(s), sorted(s)))


def downsets_of_poset(elements, le):
    """All down-closed subsets of a poset given as a le(x, y) predicate."""
    out = []
    n = len(elements)
    for mask in range(1 << n):
        S = {elements[i] for i in range(n) if mask >> i & 1}
        if all(x in S for y in S for x in elements if le(x, y)):
            out.append(frozenset(S))
    return sorted(out, key=lambda s: (len(s), sorted(s)))


def all_posets(n):
    """All labeled partial orders on n points, as row bitmasks including loops."""
    out = []
    for rows in transitive_relations(n):
        refl = all(rows[i] >> i & 1 for i in range(n))
        antisym = all(
            not (rows[i] >> j & 1 and rows[j] >> i & 1)
            for i in range(n)
            for j in range(n)
            if i != j
        )
        if refl and antisym:
            out.append(rows)
    return out
