"""Presheaves on a semicategory and the categories they form.

A contravariant presheaf of type X on A is a semidistributor from the
one-object unit category on X into A; its values are arrows X -> t(a).  A
covariant presheaf points the other way, with values t(a) -> X.  On top of
the raw enumeration this module classifies presheaves (regular, Yoneda),
materialises the presheaf categories PA, RA and YA (and their covariant
duals) as explicit Q-categories, and implements the reflection/coreflection
maps j and k plus weighted colimits computed without units.
"""

from __future__ import annotations

import itertools

from .errors import (
    ActionFailure,
    EnumerationCapExceeded,
    NotACategory,
    NotRegular,
    TypeMismatch,
)
from .quantaloid import QArrow, Quantaloid
from .semicat import (
    SemiCategory,
    SemiDistributor,
    SemiFunctor,
    is_regular_semicat,
    validate_semicategory,
    validate_semidistributor,
)

CONTRA = "contra"
CO = "co"

DEFAULT_CAP = 10**6


def unit_category(q: Quantaloid, x, name: str = "*") -> SemiCategory:
    """The one-object category on x whose single hom-arrow is the identity."""
    return validate_semicategory(q, [(name, x)], {(name, name): q.identity[x]})


class Presheaf:
    """A presheaf on a semicategory, stored as its tuple of value elements.

    ``values`` is aligned with the carrier's object order.  Presheaves
    compare by exact value equality; isomorphism of presheaves is a
    question about the category they live in, not about their raw values.
    """

    __slots__ = ("carrier", "qtype", "variance", "values")

    def __init__(self, carrier: SemiCategory, qtype, variance: str, values):
        if variance not in (CONTRA, CO):
            raise TypeMismatch(f"unknown variance {variance!r}")
        self.carrier = carrier
        self.qtype = qtype
        self.variance = variance
        self.values = tuple(values)

    def value(self, a) -> int:
        return self.values[self.carrier.objects.index_of(a)]

    def arrow(self, a) -> QArrow:
        ta = self.carrier.type_of(a)
        if self.variance == CONTRA:
            return QArrow(self.qtype, ta, self.value(a))
        return QArrow(ta, self.qtype, self.value(a))

    def as_semidistributor(self, name: str = "*") -> SemiDistributor:
        unit = unit_category(self.carrier.base, self.qtype, name)
        if self.variance == CONTRA:
            mat = {(a, name): v for a, v in zip(self.carrier.names, self.values)}
            return validate_semidistributor(unit, self.carrier, mat)
        mat = {(name, a): v for a, v in zip(self.carrier.names, self.values)}
        return validate_semidistributor(self.carrier, unit, mat)

    def __eq__(self, other):
        if not isinstance(other, Presheaf):
            return NotImplemented
        return (
            self.qtype == other.qtype
            and self.variance == other.variance
            and self.values == other.values
            and self.carrier == other.carrier
        )

    def __hash__(self):
        return hash((self.qtype, self.variance, self.values))

    def __repr__(self):
        vals = ", ".join(f"{a}={v}" for a, v in zip(self.carrier.names, self.values))
        return f"Presheaf({self.variance} {self.qtype}: {vals})"


def enumerate_presheaves(A: SemiCategory, x, variance: str = CONTRA, cap: int = DEFAULT_CAP):
    """All presheaves of type x on A, in lexicographic value order.

    The candidate space is the product of the relevant hom-lattice sizes;
    if it exceeds ``cap`` an :class:`EnumerationCapExceeded` is raised
    before any work is done.
    """
    q = A.base
    if x not in q.objects:
        raise TypeMismatch(f"{x!r} is not an object of the base", witness=x)
    names = A.names
    if variance == CONTRA:
        sizes = [q.hom_lat(x, A.type_of(a)).size for a in names]
    elif variance == CO:
        sizes = [q.hom_lat(A.type_of(a), x).size for a in names]
    else:
        raise TypeMismatch(f"unknown variance {variance!r}")
    total = 1
    for s in sizes:
        total *= s
    if total > cap:
        raise EnumerationCapExceeded(
            f"presheaf space of size {total} exceeds cap {cap}", witness=total
        )

    out = []
    for combo in itertools.product(*(range(s) for s in sizes)):
        if _presheaf_ok(A, x, variance, combo):
            out.append(Presheaf(A, x, variance, combo))
    return out


def _presheaf_ok(A, x, variance, values) -> bool:
    q = A.base
    names = A.names
    for i1, a1 in enumerate(names):
        t1 = A.type_of(a1)
        for i0, a0 in enumerate(names):
            t0 = A.type_of(a0)
            if variance == CONTRA:
                # A(a0,a1)∘φ(a1) <= φ(a0)
                comp = q.compose_elems(x, t1, t0, A.hom[(a0, a1)], values[i1])
                if not q.hom_lat(x, t0).le(comp, values[i0]):
                    return False
            else:
                # φ(a1)∘A(a1,a0) <= φ(a0)
                comp = q.compose_elems(t0, t1, x, values[i1], A.hom[(a1, a0)])
                if not q.hom_lat(t0, x).le(comp, values[i0]):
                    return False
    return True


def yoneda(A: SemiCategory, a) -> Presheaf:
    """The representable contravariant presheaf A(-, a) of type t(a)."""
    return Presheaf(A, A.type_of(a), CONTRA, (A.hom[(x, a)] for x in A.names))


def yoneda_covariant(A: SemiCategory, a) -> Presheaf:
    """The representable covariant presheaf A(a, -) of type t(a)."""
    return Presheaf(A, A.type_of(a), CO, (A.hom[(a, x)] for x in A.names))


def presheaf_hom_elem(psi: Presheaf, phi: Presheaf) -> int:
    """The element of the presheaf-category hom from phi to psi."""
    if psi.carrier != phi.carrier or psi.variance != phi.variance:
        raise TypeMismatch("presheaves live in different presheaf categories")
    A = phi.carrier
    q = A.base
    x, y = phi.qtype, psi.qtype
    lat = q.hom_lat(x, y)
    acc = lat.top
    contra = phi.variance == CONTRA
    for i, (a, ta) in enumerate(A.objects.elements):
        if contra:
            acc = lat.meet2(acc, q.lifting_elem(x, y, ta, psi.values[i], phi.values[i]))
        else:
            acc = lat.meet2(acc, q.extension_elem(ta, x, y, phi.values[i], psi.values[i]))
    return acc


def presheaf_hom(psi: Presheaf, phi: Presheaf) -> QArrow:
    """The hom-arrow of the presheaf category from phi to psi: t(phi) -> t(psi).

    Contravariantly this is the meet of base liftings [ψ(a), φ(a)];
    covariantly the meet of base extensions of ψ(a) along φ(a).
    """
    return QArrow(phi.qtype, psi.qtype, presheaf_hom_elem(psi, phi))


def is_regular_presheaf(phi: Presheaf) -> bool:
    """True iff composing with the carrier's hom matrix fixes phi."""
    return phi.values == _act(phi)


def _act(phi: Presheaf):
    """The values of A⊗φ (contravariant) or φ⊗A (covariant)."""
    A = phi.carrier
    q = A.base
    x = phi.qtype
    names = A.names
    out = []
    for a in names:
        ta = A.type_of(a)
        if phi.variance == CONTRA:
            lat = q.hom_lat(x, ta)
            out.append(
                lat.join(
                    q.compose_elems(x, A.type_of(b), ta, A.hom[(a, b)], phi.values[i])
                    for i, b in enumerate(names)
                )
            )
        else:
            lat = q.hom_lat(ta, x)
            out.append(
                lat.join(
                    q.compose_elems(ta, A.type_of(b), x, phi.values[i], A.hom[(b, a)])
                    for i, b in enumerate(names)
                )
            )
    return tuple(out)


def is_yoneda_presheaf(phi: Presheaf) -> bool:
    """True iff homming with every representable recovers the values of phi."""
    A = phi.carrier
    reps = yoneda if phi.variance == CONTRA else yoneda_covariant
    for i, a in enumerate(A.names):
        if phi.variance == CONTRA:
            expected = presheaf_hom_elem(reps(A, a), phi)
        else:
            expected = presheaf_hom_elem(phi, reps(A, a))
        if phi.values[i] != expected:
            return False
    return True


def is_regular_via_liftings(phi: Presheaf, cap: int = DEFAULT_CAP, against=None) -> bool:
    """The colimit-style regularity test: against every presheaf, the hom
    out of phi decomposes through the representables.

    Must agree with :func:`is_regular_presheaf` on every enumerable
    instance; the two are independent routes to the same notion.  When
    ``against`` is given it replaces the internal enumeration (callers
    sweeping one instance enumerate the presheaves once).
    """
    A = phi.carrier
    q = A.base
    reps = yoneda if phi.variance == CONTRA else yoneda_covariant
    rep_cache = [reps(A, a) for a in A.names]
    if against is None:
        against = [
            psi
            for x in q.objects
            for psi in enumerate_presheaves(A, x, phi.variance, cap)
        ]
    for psi in against:
        if phi.variance == CONTRA:
            lhs = presheaf_hom_elem(phi, psi)
            lat = q.hom_lat(psi.qtype, phi.qtype)
            acc = lat.top
            for i, (a, ta) in enumerate(A.objects.elements):
                inner = presheaf_hom_elem(rep_cache[i], psi)
                acc = lat.meet2(
                    acc,
                    q.lifting_elem(psi.qtype, phi.qtype, ta, phi.values[i], inner),
                )
        else:
            lhs = presheaf_hom_elem(psi, phi)
            lat = q.hom_lat(phi.qtype, psi.qtype)
            acc = lat.top
            for i, (a, ta) in enumerate(A.objects.elements):
                inner = presheaf_hom_elem(psi, rep_cache[i])
                acc = lat.meet2(
                    acc,
                    q.extension_elem(ta, phi.qtype, psi.qtype, phi.values[i], inner),
                )
        if lhs != acc:
            return False
    return True


# -- materialised presheaf categories ---------------------------------------


class QCategoryView:
    """A finite Q-category materialised from computed data.

    Objects carry a tag, a type and a payload (e.g. a presheaf); homs are
    explicit arrows.  ``check`` verifies the category axioms exhaustively.
    """

    __slots__ = ("base", "objects", "hom_elems", "_index")

    def __init__(self, base, objects, hom_elems):
        self.base = base
        self.objects = tuple(objects)
        self.hom_elems = hom_elems
        self._index = {tag: (tag, t, p) for tag, t, p in self.objects}

    @property
    def tags(self):
        return tuple(tag for tag, _, _ in self.objects)

    def type_of(self, tag):
        return self._index[tag][1]

    def payload(self, tag):
        return self._index[tag][2]

    def tag_of(self, payload):
        for tag, _, p in self.objects:
            if p == payload:
                return tag
        raise KeyError(f"no object with payload {payload!r}")

    def hom(self, tag1, tag0) -> QArrow:
        return QArrow(self.type_of(tag0), self.type_of(tag1), self.hom_elems[(tag1, tag0)])

    def as_semicategory(self) -> SemiCategory:
        return validate_semicategory(
            self.base, [(tag, t) for tag, t, _ in self.objects], dict(self.hom_elems)
        )

    def check(self):
        """Assert the full Q-category axioms; raises on violation."""
        sc = self.as_semicategory()
        if not sc.is_category:
            raise NotACategory("view violates a unit-inequality", witness=self)
        return True

    def __len__(self):
        return len(self.objects)

    def __repr__(self):
        return f"<Q-category view on {len(self.objects)} objects>"


def _build_view(A, variance, cap, keep, tag_prefix=""):
    q = A.base
    objects = []
    for x in q.objects:
        idx = 0
        for phi in enumerate_presheaves(A, x, variance, cap):
            if keep(phi):
                objects.append((f"{tag_prefix}{x}#{idx}", x, phi))
                idx += 1
    hom_elems = {}
    for tag1, _, psi in objects:
        for tag0, _, phi in objects:
            hom_elems[(tag1, tag0)] = presheaf_hom_elem(psi, phi)
    return QCategoryView(q, objects, hom_elems)


def build_PA(A: SemiCategory, variance: str = CONTRA, cap: int = DEFAULT_CAP) -> QCategoryView:
    """The Q-category of all presheaves on A (equal to that of its free category)."""
    return _build_view(A, variance, cap, lambda phi: True)


def build_RA(
    A: SemiCategory,
    variance: str = CONTRA,
    cap: int = DEFAULT_CAP,
    hom_route: str = "presheaf",
) -> QCategoryView:
    """The full subcategory of regular presheaves.

    ``hom_route="lifting"`` recomputes every hom through the lifting in the
    regular-semidistributor calculus instead of restricting the presheaf
    homs; the two must agree for a regular carrier and the route exists as
    an independent cross-check.
    """
    view = _build_view(A, variance, cap, is_regular_presheaf)
    if hom_route == "presheaf":
        return view
    if hom_route != "lifting":
        raise TypeMismatch(f"unknown hom_route {hom_route!r}")
    if variance != CONTRA:
        raise TypeMismatch("the lifting route describes contravariant homs only")
    if not is_regular_semicat(A):
        raise NotRegular("lifting route needs a regular carrier", witness=A)
    from .semicat import lifting_rsdist

    hom_elems = {}
    for tag1, _, psi in view.objects:
        sd_psi = psi.as_semidistributor()
        for tag0, _, phi in view.objects:
            lifted = lifting_rsdist(sd_psi, phi.as_semidistributor())
            hom_elems[(tag1, tag0)] = next(iter(lifted.mat.values()))
    return QCategoryView(view.base, view.objects, hom_elems)


def build_YA(A: SemiCategory, variance: str = CONTRA, cap: int = DEFAULT_CAP) -> QCategoryView:
    """The full subcategory of Yoneda presheaves."""
    return _build_view(A, variance, cap, is_yoneda_presheaf)


# -- the adjoint triple -------------------------------------------------------


def map_j(A: SemiCategory, psi: Presheaf) -> Presheaf:
    """Project an arbitrary presheaf onto a regular one by acting with A.

    Contravariantly the inclusion of the regular presheaves is left
    adjoint to this projection, which in turn is left adjoint to
    :func:`map_k`; covariantly the two adjunctions trade sides (the
    presheaf homs reverse under dualisation).
    """
    if not is_regular_semicat(A):
        raise NotRegular("j is only an adjoint for a regular carrier", witness=A)
    if psi.carrier != A:
        raise TypeMismatch("presheaf does not live on the given carrier")
    return Presheaf(A, psi.qtype, psi.variance, _act(psi))


def map_k(A: SemiCategory, theta: Presheaf) -> Presheaf:
    """Send a regular presheaf to the Yoneda presheaf with the same homs."""
    if not is_regular_semicat(A):
        raise NotRegular("k needs a regular carrier", witness=A)
    if theta.carrier != A:
        raise TypeMismatch("presheaf does not live on the given carrier")
    if not is_regular_presheaf(theta):
        raise NotRegular("k is defined on regular presheaves", witness=theta)
    q = A.base
    x = theta.qtype
    names = A.names
    out = []
    for a in names:
        ta = A.type_of(a)
        if theta.variance == CONTRA:
            lat = q.hom_lat(x, ta)
            acc = lat.top
            for i, b in enumerate(names):
                acc = lat.meet2(
                    acc, q.lifting_elem(x, ta, A.type_of(b), A.hom[(b, a)], theta.values[i])
                )
        else:
            lat = q.hom_lat(ta, x)
            acc = lat.top
            for i, b in enumerate(names):
                acc = lat.meet2(
                    acc, q.extension_elem(A.type_of(b), ta, x, A.hom[(a, b)], theta.values[i])
                )
        out.append(acc)
    return Presheaf(A, x, theta.variance, out)


# -- weighted colimits without units -----------------------------------------


def weighted_colimit_RA(theta: SemiDistributor, fmap) -> dict:
    """The theta-weighted colimit of an object map into regular presheaves.

    ``theta`` is a weight D -/-> C and ``fmap`` sends each object of C to a
    regular contravariant presheaf on one regular carrier A; the result maps
    each object of D to the regular presheaf obtained by composing the
    graph of fmap with the weight.
    """
    D, C = theta.dom, theta.cod
    fmap = dict(fmap)
    if set(fmap) != set(C.names):
        raise TypeMismatch("object map does not cover the weight's codomain")
    presheaves = [fmap[c] for c in C.names]
    carrier = presheaves[0].carrier if presheaves else None
    if carrier is None:
        raise TypeMismatch("empty diagram has no carrier to land in")
    if not is_regular_semicat(carrier):
        raise NotRegular("colimits are computed in RA of a regular carrier", witness=carrier)
    q = carrier.base
    for c in C.names:
        phi = fmap[c]
        if phi.carrier != carrier or phi.variance != CONTRA:
            raise TypeMismatch(f"image of {c!r} lives in a different category", witness=c)
        if phi.qtype != C.type_of(c):
            raise TypeMismatch(f"image of {c!r} has type {phi.qtype!r} != t({c!r})", witness=c)
        if not is_regular_presheaf(phi):
            raise NotRegular(f"image of {c!r} is not a regular presheaf", witness=c)

    # the graph (c -> fmap[c]) must itself be a distributor in the C direction
    for a in carrier.names:
        ta = carrier.type_of(a)
        for c1 in C.names:
            for c0 in C.names:
                t1, t0 = C.type_of(c1), C.type_of(c0)
                comp = q.compose_elems(t0, t1, ta, fmap[c1].value(a), C.hom[(c1, c0)])
                if not q.hom_lat(t0, ta).le(comp, fmap[c0].value(a)):
                    raise ActionFailure(
                        "object map is not compatible with the homs of its domain",
                        witness=(a, c1, c0),
                    )

    out = {}
    for d in D.names:
        td = D.type_of(d)
        values = []
        for a in carrier.names:
            ta = carrier.type_of(a)
            lat = q.hom_lat(td, ta)
            values.append(
                lat.join(
                    q.compose_elems(td, C.type_of(c), ta, fmap[c].value(a), theta.mat[(c, d)])
                    for c in C.names
                )
            )
        colim = Presheaf(carrier, td, CONTRA, values)
        out[d] = colim
    return out


def is_colimit(G: SemiFunctor, phi: SemiDistributor, F: SemiFunctor) -> bool:
    """Check the unit-free colimit formula: G is the phi-weighted colimit of F.

    Requires a common codomain category C; the test is the exact equality
    C(Ga, c) = meet over b of [phi(b, a), C(Fb, c)], with liftings taken in
    the base quantaloid.
    """
    if G.cod != F.cod:
        raise TypeMismatch("colimit candidates must share their codomain")
    C = G.cod
    if not C.is_category:
        raise NotACategory("colimits are tested in a category", witness=C)
    if G.dom != phi.dom or F.dom != phi.cod:
        raise TypeMismatch("weight endpoints do not match the functors")
    A, B = phi.dom, phi.cod
    q = C.base
    for a in A.names:
        ta = A.type_of(a)
        for c in C.names:
            tc = C.type_of(c)
            lat = q.hom_lat(tc, ta)
            acc = lat.top
            for b in B.names:
                tb = B.type_of(b)
                acc = lat.meet2(
                    acc,
                    q.lifting_elem(tc, ta, tb, phi.mat[(b, a)], C.hom[(F.map[b], c)]),
                )
            if C.hom[(G.map[a], c)] != acc:
                return False
    return True
