"""Order-theoretic and locale-theoretic instances.

Transitive relations are semicategories over the two-element quantaloid,
interpolation is idempotence of the relation matrix, the way-below relation
of a finite poset is computed by exhausting directed subsets, and Scott
opens and closeds fall out as the covariant regular and contravariant
Yoneda presheaves of the way-below semicategory.  An Omega-valued equality
on a set is a symmetric regular semicategory over the frame.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    ActionFailure,
    EnumerationCapExceeded,
    MissingDirectedJoin,
    NotAPartialOrder,
    NotSymmetric,
    NotTransitive,
    NotTransitiveEq,
    TypeMismatch,
)
from .presheaf import (
    CO,
    CONTRA,
    enumerate_presheaves,
    is_regular_presheaf,
    is_yoneda_presheaf,
)
from .quantaloid import Quantaloid, builtin_quantaloid
from .semicat import (
    SemiCategory,
    SemiDistributor,
    is_regular_semidist,
    right_adjoint,
    validate_semicategory,
    validate_semidistributor,
)

WAY_BELOW_MAX = 12


class FinitePoset:
    """A finite partial order on named elements."""

    __slots__ = ("elements", "leq")

    def __init__(self, elements, leq):
        self.elements = tuple(elements)
        self.leq = leq

    def le(self, x, y) -> bool:
        return self.leq[(x, y)]

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"FinitePoset({list(self.elements)})"


def validate_poset(elements, pairs) -> FinitePoset:
    """Build a poset from generating pairs (x, y) meaning x <= y."""
    elements = tuple(dict.fromkeys(elements))
    index = {x: i for i, x in enumerate(elements)}
    for x, y in pairs:
        if x not in index or y not in index:
            raise TypeMismatch(f"pair ({x!r}, {y!r}) names unknown elements", witness=(x, y))
    lat_pairs = [(index[x], index[y]) for x, y in pairs]
    n = len(elements)
    leq_matrix = [[i == j for j in range(n)] for i in range(n)]
    for i, j in lat_pairs:
        leq_matrix[i][j] = True
    for k in range(n):
        for i in range(n):
            if leq_matrix[i][k]:
                for j in range(n):
                    if leq_matrix[k][j]:
                        leq_matrix[i][j] = True
    for i in range(n):
        for j in range(i + 1, n):
            if leq_matrix[i][j] and leq_matrix[j][i]:
                raise NotAPartialOrder(
                    f"{elements[i]!r} and {elements[j]!r} are order-equivalent",
                    witness=(elements[i], elements[j]),
                )
    leq = {
        (elements[i], elements[j]): leq_matrix[i][j] for i in range(n) for j in range(n)
    }
    return FinitePoset(elements, leq)


def _check_transitive(elements, pairs):
    rel = set(pairs)
    for x, y in pairs:
        for y2, z in pairs:
            if y2 == y and (x, z) not in rel:
                raise NotTransitive(
                    f"({x!r}, {y!r}) and ({y!r}, {z!r}) without ({x!r}, {z!r})",
                    witness=(x, y, z),
                )
    return rel


def strict_order_to_semicat(elements, pairs, base: Quantaloid = None) -> SemiCategory:
    """A transitive relation as a semicategory over the two-element quantaloid.

    The hom entry at key (x, y) is top exactly when (x, y) is in the
    relation; loops are allowed, so any transitive relation qualifies, with
    strict orders as the motivating case.
    """
    elements = tuple(dict.fromkeys(elements))
    rel = _check_transitive(elements, [(x, y) for x, y in pairs])
    q = base if base is not None else builtin_quantaloid("2")
    obj = q.objects[0]
    hom = {(x, y): 1 if (x, y) in rel else 0 for x in elements for y in elements}
    return validate_semicategory(q, [(x, obj) for x in elements], hom)


def has_interpolation(elements, pairs) -> bool:
    """True iff every related pair factors through a middle element.

    Equivalent to idempotence of the relation matrix, and to regularity of
    the associated semicategory; the three routes are asserted against each
    other in the test-suite.
    """
    elements = tuple(dict.fromkeys(elements))
    rel = _check_transitive(elements, [(x, y) for x, y in pairs])
    succ = {x: set() for x in elements}
    for x, y in rel:
        succ[x].add(y)
    for x, z in rel:
        if not any(z in succ[y] for y in succ[x]):
            return False
    return True


def directed_subsets(P: FinitePoset):
    """All nonempty directed subsets with their joins.

    Raises :class:`MissingDirectedJoin` when a directed subset has no least
    upper bound (impossible for finite posets, where directed sets have
    maxima, but checked rather than assumed).
    """
    n = len(P.elements)
    if n > WAY_BELOW_MAX:
        raise EnumerationCapExceeded(
            f"{n} elements exceed the way-below bound {WAY_BELOW_MAX}", witness=n
        )
    out = []
    for mask in range(1, 1 << n):
        subset = [P.elements[i] for i in range(n) if mask >> i & 1]
        if not all(
            any(P.le(x, u) and P.le(y, u) for u in subset) for x in subset for y in subset
        ):
            continue
        ubs = [u for u in P.elements if all(P.le(x, u) for x in subset)]
        join = next((u for u in ubs if all(P.le(u, v) for v in ubs)), None)
        if join is None:
            raise MissingDirectedJoin(
                f"directed subset {subset} has no join", witness=tuple(subset)
            )
        out.append((tuple(subset), join))
    return out


def way_below(P: FinitePoset):
    """The way-below relation, by brute force over directed subsets.

    x is way below y iff every directed subset whose join dominates y
    already contains an element above x.  On a finite poset this collapses
    to the order itself.
    """
    dirs = directed_subsets(P)
    rel = set()
    for x in P.elements:
        for y in P.elements:
            if all(
                any(P.le(x, d) for d in subset)
                for subset, join in dirs
                if P.le(y, join)
            ):
                rel.add((x, y))
    return rel


def _way_below_semicat(P: FinitePoset) -> SemiCategory:
    return strict_order_to_semicat(P.elements, sorted(way_below(P)))


def scott_opens(P: FinitePoset):
    """The Scott-open subsets: covariant regular presheaves of the way-below semicategory."""
    W = _way_below_semicat(P)
    obj = W.base.objects[0]
    opens = []
    for phi in enumerate_presheaves(W, obj, CO):
        if is_regular_presheaf(phi):
            opens.append(frozenset(a for a in W.names if phi.value(a) == 1))
    return sorted(opens, key=lambda s: (len(s), sorted(s)))


def scott_closeds(P: FinitePoset):
    """The Scott-closed subsets: contravariant Yoneda presheaves of the way-below semicategory."""
    W = _way_below_semicat(P)
    obj = W.base.objects[0]
    closeds = []
    for phi in enumerate_presheaves(W, obj, CONTRA):
        if is_yoneda_presheaf(phi):
            closeds.append(frozenset(a for a in W.names if phi.value(a) == 1))
    return sorted(closeds, key=lambda s: (len(s), sorted(s)))


# -- Omega-sets ---------------------------------------------------------------


class OmegaSet:
    """A set with an Omega-valued symmetric transitive equality."""

    __slots__ = ("frame", "elements", "eq")

    def __init__(self, frame, elements, eq):
        self.frame = frame
        self.elements = elements
        self.eq = eq

    def as_semicategory(self) -> SemiCategory:
        obj = self.frame.objects[0]
        return validate_semicategory(
            self.frame, [(x, obj) for x in self.elements], dict(self.eq)
        )

    def __repr__(self):
        return f"OmegaSet({list(self.elements)})"


def validate_omega_set(frame: Quantaloid, elements, eq) -> OmegaSet:
    """Check symmetry and the triangle law of an equality matrix.

    ``frame`` must be a one-object quantaloid whose composition is the
    lattice meet (as produced by :func:`qsemicat.quantaloid.from_frame`);
    ``eq`` maps element pairs to lattice elements, omitted pairs default
    to bottom.
    """
    if len(frame.objects) != 1:
        raise TypeMismatch("an Omega-set needs a one-object base", witness=frame.objects)
    obj = frame.objects[0]
    lat = frame.hom_lat(obj, obj)
    if frame.identity[obj] != lat.top or any(
        frame.compose_elems(obj, obj, obj, g, f) != lat.meet2(g, f)
        for g in range(lat.size)
        for f in range(lat.size)
    ):
        raise TypeMismatch("the base quantaloid is not a frame with meet composition")
    elements = tuple(dict.fromkeys(elements))
    full = {}
    for x in elements:
        for y in elements:
            e = eq.get((x, y), lat.bottom)
            if not 0 <= e < lat.size:
                raise TypeMismatch(f"[{x!r}={y!r}] = {e} out of range", witness=(x, y))
            full[(x, y)] = e
    for x in elements:
        for y in elements:
            if full[(x, y)] != full[(y, x)]:
                raise NotSymmetric(f"[{x!r}={y!r}] != [{y!r}={x!r}]", witness=(x, y))
    for x in elements:
        for y in elements:
            for z in elements:
                if not lat.le(lat.meet2(full[(x, y)], full[(y, z)]), full[(x, z)]):
                    raise NotTransitiveEq(
                        f"[{x!r}={y!r}] ∧ [{y!r}={z!r}] ≰ [{x!r}={z!r}]", witness=(x, y, z)
                    )
    return OmegaSet(frame, elements, full)


def omega_subsets(E: OmegaSet):
    """The subobjects of an Omega-set: regular contravariant presheaves on it."""
    A = E.as_semicategory()
    obj = E.frame.objects[0]
    return [
        phi for phi in enumerate_presheaves(A, obj, CONTRA) if is_regular_presheaf(phi)
    ]


def is_omega_morphism(phi: SemiDistributor) -> bool:
    """True iff the semidistributor is regular and has a right adjoint."""
    if not is_regular_semidist(phi):
        return False
    return right_adjoint(phi) is not None


@dataclass
class ScottContinuityReport:
    """Verdict of the way-below continuity condition for an object map."""

    continuous: bool
    graph_is_semidistributor: bool
    graph_regular: bool

    def __bool__(self):
        return self.continuous


def scott_continuity_check(f, P: FinitePoset, Q: FinitePoset) -> ScottContinuityReport:
    """Check b << f(a) iff some x has b << f(x) and x << a, over all a, b.

    Also reports whether the graph of f between the way-below
    semicategories is a (regular) semidistributor; continuity implies
    regularity of the graph, the converse direction is reported, never
    assumed.
    """
    f = dict(f)
    if set(f) != set(P.elements):
        raise TypeMismatch("map does not cover its domain")
    if any(v not in Q.elements for v in f.values()):
        raise TypeMismatch("map leaves its codomain")
    wb_p = way_below(P)
    wb_q = way_below(Q)
    continuous = all(
        ((b, f[a]) in wb_q)
        == any((b, f[x]) in wb_q and (x, a) in wb_p for x in P.elements)
        for a in P.elements
        for b in Q.elements
    )

    WP = strict_order_to_semicat(P.elements, sorted(wb_p))
    WQ = strict_order_to_semicat(Q.elements, sorted(wb_q), base=WP.base)
    mat = {
        (b, a): 1 if (b, f[a]) in wb_q else 0 for b in Q.elements for a in P.elements
    }
    try:
        graph = validate_semidistributor(WP, WQ, mat)
    except ActionFailure:
        return ScottContinuityReport(continuous, False, False)
    return ScottContinuityReport(continuous, True, is_regular_semidist(graph))
