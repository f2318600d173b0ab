"""Semicategories, semifunctors and the semidistributor calculus.

A semicategory is a typed object set with a hom matrix satisfying the
composition-inequalities only; no units are required.  Semidistributors are
typed matrices compatible with the hom actions on both sides.  Matrices are
stored dense, indexed (codomain object, domain object), and all operations
are pure.

Order-theoretic instances over the two-element quantaloid follow the
convention ``A(a, b) = top  iff  a ≺ b``: the hom entry at key ``(a, b)``
classifies the relation from its first index to its second.  Representable
presheaves then come out as strict principal downsets, which is the reading
all instance builders in :mod:`qsemicat.instances` rely on.
"""

from __future__ import annotations

import itertools

from .errors import (
    ActionFailure,
    CompositionFailure,
    NotRegular,
    SearchCapExceeded,
    TypeMismatch,
)
from .quantaloid import QArrow, Quantaloid


class TypedSet:
    """A finite set of named elements, each typed by an object of the base."""

    __slots__ = ("elements", "_types", "_pos")

    def __init__(self, elements):
        self.elements = tuple((str(n), t) for n, t in elements)
        names = [n for n, _ in self.elements]
        if len(set(names)) != len(names):
            dup = next(n for n in names if names.count(n) > 1)
            raise TypeMismatch(f"duplicate element name {dup!r}", witness=dup)
        self._types = dict(self.elements)
        self._pos = {n: i for i, (n, _) in enumerate(self.elements)}

    @property
    def names(self):
        return tuple(n for n, _ in self.elements)

    def type_of(self, name):
        try:
            return self._types[name]
        except KeyError:
            raise TypeMismatch(f"unknown element {name!r}", witness=name) from None

    def index_of(self, name) -> int:
        try:
            return self._pos[name]
        except KeyError:
            raise TypeMismatch(f"unknown element {name!r}", witness=name) from None

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.names)

    def __contains__(self, name):
        return name in self._types

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, TypedSet):
            return NotImplemented
        return self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    def __repr__(self):
        return f"TypedSet({list(self.elements)})"


class SemiCategory:
    """A validated semicategory over a quantaloid.

    ``hom`` maps pairs (a1, a0) of object names to the element index of the
    hom-arrow A(a1, a0): t(a0) -> t(a1) in the base.
    """

    __slots__ = ("base", "objects", "hom", "is_category")

    def __init__(self, base, objects, hom, is_category):
        self.base = base
        self.objects = objects
        self.hom = hom
        self.is_category = is_category

    @property
    def names(self):
        return self.objects.names

    def type_of(self, a):
        return self.objects.type_of(a)

    def hom_arrow(self, a1, a0) -> QArrow:
        return QArrow(self.type_of(a0), self.type_of(a1), self.hom[(a1, a0)])

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, SemiCategory):
            return NotImplemented
        return (
            self.base == other.base
            and self.objects == other.objects
            and self.hom == other.hom
        )

    def __repr__(self):
        kind = "category" if self.is_category else "semicategory"
        return f"<{kind} on {list(self.names)}>"


class SemiDistributor:
    """A validated semidistributor between semicategories over one base.

    ``mat`` maps pairs (b, a) to the element index of Phi(b, a): t(a) -> t(b).
    """

    __slots__ = ("dom", "cod", "mat")

    def __init__(self, dom, cod, mat):
        self.dom = dom
        self.cod = cod
        self.mat = mat

    @property
    def base(self):
        return self.dom.base

    def arrow(self, b, a) -> QArrow:
        return QArrow(self.dom.type_of(a), self.cod.type_of(b), self.mat[(b, a)])

    def __eq__(self, other):
        if not isinstance(other, SemiDistributor):
            return NotImplemented
        return self.dom == other.dom and self.cod == other.cod and self.mat == other.mat

    def __repr__(self):
        return f"<semidistributor {list(self.dom.names)} -/-> {list(self.cod.names)}>"


class SemiFunctor:
    """A type-preserving object map whose action only enlarges homs."""

    __slots__ = ("dom", "cod", "map")

    def __init__(self, dom, cod, mapping):
        self.dom = dom
        self.cod = cod
        self.map = mapping

    def __call__(self, a):
        return self.map[a]

    def __eq__(self, other):
        if not isinstance(other, SemiFunctor):
            return NotImplemented
        return self.dom == other.dom and self.cod == other.cod and self.map == other.map

    def __repr__(self):
        return f"<semifunctor {dict(self.map)}>"


# -- validation ------------------------------------------------------------


def validate_typed_set(elements, base: Quantaloid) -> TypedSet:
    ts = TypedSet(elements)
    for name, t in ts.elements:
        if t not in base.objects:
            raise TypeMismatch(f"element {name!r} has unknown type {t!r}", witness=(name, t))
    return ts


def validate_semicategory(base: Quantaloid, objects, hom) -> SemiCategory:
    """Check the composition-inequalities; omitted hom entries default to bottom."""
    raw = objects.elements if isinstance(objects, TypedSet) else objects
    ts = validate_typed_set(raw, base)
    full = {}
    for a1 in ts.names:
        for a0 in ts.names:
            lat = base.hom_lat(ts.type_of(a0), ts.type_of(a1))
            e = hom.get((a1, a0), lat.bottom)
            if not 0 <= e < lat.size:
                raise TypeMismatch(
                    f"hom entry ({a1!r}, {a0!r}) = {e} out of range", witness=(a1, a0)
                )
            full[(a1, a0)] = e
    for key in hom:
        if key not in full:
            raise TypeMismatch(f"hom entry {key} names unknown objects", witness=key)

    for a2 in ts.names:
        for a1 in ts.names:
            for a0 in ts.names:
                t0, t1, t2 = ts.type_of(a0), ts.type_of(a1), ts.type_of(a2)
                comp = base.compose_elems(t0, t1, t2, full[(a2, a1)], full[(a1, a0)])
                if not base.hom_lat(t0, t2).le(comp, full[(a2, a0)]):
                    raise CompositionFailure(
                        f"A({a2!r},{a1!r})∘A({a1!r},{a0!r}) ≰ A({a2!r},{a0!r})",
                        witness=(a2, a1, a0),
                    )

    is_cat = all(
        base.hom_lat(ts.type_of(a), ts.type_of(a)).le(
            base.identity[ts.type_of(a)], full[(a, a)]
        )
        for a in ts.names
    )
    return SemiCategory(base, ts, full, is_cat)


def is_category(A: SemiCategory) -> bool:
    """True iff the unit-inequalities 1 <= A(a, a) hold on top of the semicategory axioms."""
    return A.is_category


def free_category(A: SemiCategory) -> SemiCategory:
    """Join an identity onto every endo-hom; off-diagonal homs are untouched."""
    hom = dict(A.hom)
    for a in A.names:
        t = A.type_of(a)
        lat = A.base.hom_lat(t, t)
        hom[(a, a)] = lat.join2(hom[(a, a)], A.base.identity[t])
    return validate_semicategory(A.base, A.objects, hom)


def _require_same_base(x, y, what):
    if x.base != y.base:
        raise TypeMismatch(f"{what} live over different base quantaloids")


def validate_semidistributor(dom: SemiCategory, cod: SemiCategory, mat) -> SemiDistributor:
    """Check the action-inequalities; omitted entries default to bottom."""
    _require_same_base(dom, cod, "semidistributor endpoints")
    q = dom.base
    full = {}
    for b in cod.names:
        for a in dom.names:
            lat = q.hom_lat(dom.type_of(a), cod.type_of(b))
            e = mat.get((b, a), lat.bottom)
            if not 0 <= e < lat.size:
                raise TypeMismatch(f"entry ({b!r}, {a!r}) = {e} out of range", witness=(b, a))
            full[(b, a)] = e
    for key in mat:
        if key not in full:
            raise TypeMismatch(f"entry {key} names unknown objects", witness=key)

    for b in cod.names:
        tb = cod.type_of(b)
        for a1 in dom.names:
            for a0 in dom.names:
                t0, t1 = dom.type_of(a0), dom.type_of(a1)
                comp = q.compose_elems(t0, t1, tb, full[(b, a1)], dom.hom[(a1, a0)])
                if not q.hom_lat(t0, tb).le(comp, full[(b, a0)]):
                    raise ActionFailure(
                        f"Φ({b!r},{a1!r})∘A({a1!r},{a0!r}) ≰ Φ({b!r},{a0!r})",
                        witness=("dom", b, a1, a0),
                    )
    for b1 in cod.names:
        for b0 in cod.names:
            t1, t0 = cod.type_of(b1), cod.type_of(b0)
            for a in dom.names:
                ta = dom.type_of(a)
                comp = q.compose_elems(ta, t0, t1, cod.hom[(b1, b0)], full[(b0, a)])
                if not q.hom_lat(ta, t1).le(comp, full[(b1, a)]):
                    raise ActionFailure(
                        f"B({b1!r},{b0!r})∘Φ({b0!r},{a!r}) ≰ Φ({b1!r},{a!r})",
                        witness=("cod", b1, b0, a),
                    )
    return SemiDistributor(dom, cod, full)


# -- the algebra of semidistributors ----------------------------------------


def bottom_semidist(dom: SemiCategory, cod: SemiCategory) -> SemiDistributor:
    _require_same_base(dom, cod, "semidistributor endpoints")
    q = dom.base
    mat = {
        (b, a): q.hom_lat(dom.type_of(a), cod.type_of(b)).bottom
        for b in cod.names
        for a in dom.names
    }
    return SemiDistributor(dom, cod, mat)


def identity_semidist(A: SemiCategory) -> SemiDistributor:
    """The hom matrix of A as an endo-semidistributor (not in general a unit)."""
    return SemiDistributor(A, A, dict(A.hom))


def _compose_mat(psi: SemiDistributor, phi: SemiDistributor) -> dict:
    q = phi.base
    A, B, C = phi.dom, phi.cod, psi.cod
    mat = {}
    for c in C.names:
        tc = C.type_of(c)
        for a in A.names:
            ta = A.type_of(a)
            lat = q.hom_lat(ta, tc)
            acc = lat.bottom
            for b in B.names:
                tb = B.type_of(b)
                acc = lat.join2(
                    acc, q.compose_elems(ta, tb, tc, psi.mat[(c, b)], phi.mat[(b, a)])
                )
            mat[(c, a)] = acc
    return mat


def compose_semidist(psi: SemiDistributor, phi: SemiDistributor) -> SemiDistributor:
    """(Ψ⊗Φ)(c, a) = join over b of Ψ(c, b)∘Φ(b, a)."""
    if psi.dom != phi.cod:
        raise TypeMismatch("composition needs cod(Φ) = dom(Ψ)")
    return validate_semidistributor(phi.dom, psi.cod, _compose_mat(psi, phi))


def sup_semidist(family, dom: SemiCategory = None, cod: SemiCategory = None) -> SemiDistributor:
    """Entrywise join of a family of parallel semidistributors.

    An empty family yields the all-bottom matrix, in which case the
    endpoints must be supplied.
    """
    family = list(family)
    if not family:
        if dom is None or cod is None:
            raise TypeMismatch("empty supremum needs explicit dom and cod")
        return bottom_semidist(dom, cod)
    first = family[0]
    if any(p.dom != first.dom or p.cod != first.cod for p in family):
        raise TypeMismatch("supremum of semidistributors with different endpoints")
    q = first.base
    mat = {}
    for b in first.cod.names:
        for a in first.dom.names:
            lat = q.hom_lat(first.dom.type_of(a), first.cod.type_of(b))
            mat[(b, a)] = lat.join(p.mat[(b, a)] for p in family)
    return validate_semidistributor(first.dom, first.cod, mat)


def leq_semidist(lo: SemiDistributor, hi: SemiDistributor) -> bool:
    """Entrywise order on parallel semidistributors."""
    if lo.dom != hi.dom or lo.cod != hi.cod:
        raise TypeMismatch("cannot compare semidistributors with different endpoints")
    q = lo.base
    return all(
        q.hom_lat(lo.dom.type_of(a), lo.cod.type_of(b)).le(lo.mat[(b, a)], hi.mat[(b, a)])
        for b in lo.cod.names
        for a in lo.dom.names
    )


def lifting_dist(psi: SemiDistributor, phi: SemiDistributor) -> SemiDistributor:
    """[Ψ,Φ](c, a) = meet over b of the base lifting [Ψ(b,c), Φ(b,a)].

    For Ψ: C -/-> B and Φ: A -/-> B this is the largest matrix Ξ: A -/-> C
    with Ψ⊗Ξ <= Φ, the residuation being taken between the free categories.
    """
    if psi.cod != phi.cod:
        raise TypeMismatch("lifting needs a common codomain")
    q = phi.base
    A, B, C = phi.dom, phi.cod, psi.dom
    mat = {}
    for c in C.names:
        tc = C.type_of(c)
        for a in A.names:
            ta = A.type_of(a)
            lat = q.hom_lat(ta, tc)
            acc = lat.top
            for b in B.names:
                tb = B.type_of(b)
                acc = lat.meet2(
                    acc, q.lifting_elem(ta, tc, tb, psi.mat[(b, c)], phi.mat[(b, a)])
                )
            mat[(c, a)] = acc
    return validate_semidistributor(A, C, mat)


def is_regular_semicat(A: SemiCategory) -> bool:
    """True iff the hom matrix is idempotent: A⊗A = A entrywise."""
    ida = identity_semidist(A)
    return _compose_mat(ida, ida) == ida.mat


def is_regular_semidist(phi: SemiDistributor) -> bool:
    """True iff Φ⊗A = Φ = B⊗Φ.

    Works on raw matrices too: the two equalities force the action
    inequalities, so enumeration code may filter unvalidated candidates.
    """
    if _compose_mat(phi, identity_semidist(phi.dom)) != phi.mat:
        return False
    return _compose_mat(identity_semidist(phi.cod), phi) == phi.mat


def _require_regular(*items):
    for item in items:
        if isinstance(item, SemiCategory):
            if not is_regular_semicat(item):
                raise NotRegular(f"{item!r} is not regular", witness=item)
        else:
            if not is_regular_semidist(item):
                raise NotRegular(f"{item!r} is not regular", witness=item)


def lifting_rsdist(psi: SemiDistributor, phi: SemiDistributor) -> SemiDistributor:
    """The lifting in the quantaloid of regular semidistributors.

    For regular Ψ: C -/-> B and Φ: A -/-> B between regular semicategories
    this is C⊗[Ψ,Φ]⊗A, the largest *regular* Ξ with Ψ⊗Ξ <= Φ.
    """
    if psi.cod != phi.cod:
        raise TypeMismatch("lifting needs a common codomain")
    _require_regular(phi.dom, phi.cod, psi.dom, psi, phi)
    core = lifting_dist(psi, phi)
    return compose_semidist(
        identity_semidist(psi.dom), compose_semidist(core, identity_semidist(phi.dom))
    )


# -- semifunctors ------------------------------------------------------------


def validate_semifunctor(dom: SemiCategory, cod: SemiCategory, mapping) -> SemiFunctor:
    """Check type-equalities and action-inequalities of an object map."""
    _require_same_base(dom, cod, "semifunctor endpoints")
    mapping = dict(mapping)
    if set(mapping) != set(dom.names):
        raise TypeMismatch("object map does not cover the domain", witness=sorted(mapping))
    for a, fa in mapping.items():
        if fa not in cod.objects:
            raise TypeMismatch(f"image {fa!r} is not an object of the codomain", witness=(a, fa))
        if dom.type_of(a) != cod.type_of(fa):
            raise TypeMismatch(f"t({fa!r}) != t({a!r})", witness=(a, fa))
    q = dom.base
    for a1 in dom.names:
        for a0 in dom.names:
            t0, t1 = dom.type_of(a0), dom.type_of(a1)
            if not q.hom_lat(t0, t1).le(
                dom.hom[(a1, a0)], cod.hom[(mapping[a1], mapping[a0])]
            ):
                raise ActionFailure(
                    f"A({a1!r},{a0!r}) ≰ B(F{a1!r},F{a0!r})", witness=(a1, a0)
                )
    return SemiFunctor(dom, cod, mapping)


def graph_semidists(F: SemiFunctor):
    """The semidistributors B(-, F-): A -/-> B and B(F-, -): B -/-> A."""
    A, B = F.dom, F.cod
    fwd = {(b, a): B.hom[(b, F.map[a])] for b in B.names for a in A.names}
    bwd = {(a, b): B.hom[(F.map[a], b)] for a in A.names for b in B.names}
    return (
        validate_semidistributor(A, B, fwd),
        validate_semidistributor(B, A, bwd),
    )


def is_regular_semifunctor(F: SemiFunctor) -> bool:
    """True iff both graph semidistributors are regular."""
    fwd, bwd = graph_semidists(F)
    return is_regular_semidist(fwd) and is_regular_semidist(bwd)


def is_adjoint_pair(phi: SemiDistributor, psi: SemiDistributor) -> bool:
    """True iff Ψ⊗Φ >= A and Φ⊗Ψ <= B in the regular calculus."""
    if phi.dom != psi.cod or phi.cod != psi.dom:
        raise TypeMismatch("adjoint candidates must be antiparallel")
    _require_regular(phi.dom, phi.cod, phi, psi)
    A, B = phi.dom, phi.cod
    return leq_semidist(identity_semidist(A), compose_semidist(psi, phi)) and leq_semidist(
        compose_semidist(phi, psi), identity_semidist(B)
    )


def right_adjoint(phi: SemiDistributor):
    """The right adjoint of Φ in the regular calculus, or None.

    The only candidate is the lifting of the identity through Φ; it is
    returned exactly when the unit inequality holds as well.
    """
    _require_regular(phi.dom, phi.cod, phi)
    A, B = phi.dom, phi.cod
    psi = lifting_rsdist(phi, identity_semidist(B))
    if leq_semidist(identity_semidist(A), compose_semidist(psi, phi)):
        return psi
    return None


# -- enumeration helpers -----------------------------------------------------


def matrix_space(dom: SemiCategory, cod: SemiCategory):
    """The matrices dom -/-> cod in lexicographic entry order, with their count.

    Returns ``(size, generator)``; callers enforce their own caps before
    consuming the generator.
    """
    _require_same_base(dom, cod, "matrix endpoints")
    q = dom.base
    keys = [(b, a) for b in cod.names for a in dom.names]
    sizes = [q.hom_lat(dom.type_of(a), cod.type_of(b)).size for b, a in keys]
    total = 1
    for s in sizes:
        total *= s

    def gen():
        for combo in itertools.product(*(range(s) for s in sizes)):
            yield dict(zip(keys, combo))

    return total, gen()


def enumerate_regular_semidists(dom: SemiCategory, cod: SemiCategory, cap: int):
    """All regular semidistributors dom -/-> cod, lexicographically ordered."""
    total, gen = matrix_space(dom, cod)
    if total > cap:
        raise SearchCapExceeded(
            f"matrix space of size {total} exceeds cap {cap}", witness=total
        )
    out = []
    for mat in gen:
        if is_regular_semidist(SemiDistributor(dom, cod, mat)):
            out.append(validate_semidistributor(dom, cod, mat))
    return out
