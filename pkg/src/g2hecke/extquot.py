"""Twisted extended quotients on finite orbit models, with two oracles.

A :class:`FiniteOrbitModel` is a desk-scale stand-in for a supercuspidal
orbit: a finite set of points carrying a simply transitive action of a cyclic
translation group, a finite symmetry group of order at most 2 whose action
normalizes the translations (conjugation sends the generator to itself or its
inverse, matching inversion on a one-dimensional torus), and a family of
2-cocycle tables on point stabilizers.  Only trivial tables ship; values are
restricted to +-1 and tables must satisfy the cocycle identity.

Two independent counts of the same quantity are provided:

* :func:`extended_quotient` enumerates orbits and stabilizer characters
  directly (one point per orbit, one entry per irreducible of the twisted
  stabilizer algebra);
* :func:`crossed_product_irr_count` builds the crossed product of functions
  on the points with the symmetry group and computes the dimension of its
  center by exact linear algebra.

For a semisimple algebra the center dimension is the number of simple
modules, so the two routes must agree; the closed form 2k + m (k fixed
points, m free orbits) pins both down for order-2 actions.

Transfers between two models (the group/Galois matching and the depth-zero
reduction) are built orbitwise from a point map after its equivariance has
been checked, and always verified to be bijections.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Sequence

__all__ = [
    "FiniteOrbitModel",
    "ExtQuotPoint",
    "PropertyVerdict",
    "ExtQuotError",
    "torsion_model",
    "extended_quotient",
    "crossed_product_irr_count",
    "check_property",
    "matching_bijection",
    "depth_zero_transfer",
]


class ExtQuotError(ValueError):
    pass


def _is_identity(perm: Mapping) -> bool:
    return all(v == k for k, v in perm.items())


@dataclass(frozen=True)
class ExtQuotPoint:
    """One point of an extended quotient: orbit representative + character index.

    Character indices are canonical: 0 is the trivial-like character (value +1
    on the nontrivial stabilizer element under trivial twisting, or the
    principal square root under a twisted table), 1 the other one.
    """

    representative: object
    irrep_label: int


class FiniteOrbitModel:
    """Points with a cyclic simply transitive translation action and a symmetry.

    ``translation`` is the permutation given by the generator of the
    translation group (must be a single cycle through all points).  ``gamma``
    is None for the trivial symmetry group, else an involution commuting with
    the translations up to inversion.  ``cocycles`` maps a point fixed by the
    symmetry to the value k(s, s) in {+1, -1} of a normalized 2-cocycle on
    its order-2 stabilizer; omitted points carry the trivial table.
    """

    def __init__(
        self,
        points: Sequence,
        translation: Mapping,
        gamma: Optional[Mapping] = None,
        cocycles: Optional[Mapping] = None,
    ):
        self.points = tuple(points)
        if len(set(self.points)) != len(self.points):
            raise ExtQuotError("points must be distinct")
        if not self.points:
            raise ExtQuotError("a model needs at least one point")
        self.translation = dict(translation)
        self.gamma = dict(gamma) if gamma is not None else None
        self.cocycles = dict(cocycles or {})
        self._validate()

    # -- validation ----------------------------------------------------------

    def _validate(self):
        pts = set(self.points)
        tr = self.translation
        if set(tr) != pts or set(tr.values()) != pts:
            raise ExtQuotError("translation must permute the points")
        # simple transitivity of a cyclic group = the generator is one n-cycle
        x = self.points[0]
        seen = [x]
        while True:
            x = tr[x]
            if x == seen[0]:
                break
            seen.append(x)
            if len(seen) > len(self.points):
                raise ExtQuotError("translation orbit overflow")
        if len(seen) != len(self.points):
            raise ExtQuotError("translation generator must act as a single cycle")
        if self.gamma is not None:
            g = self.gamma
            if set(g) != pts or set(g.values()) != pts:
                raise ExtQuotError("gamma must permute the points")
            if not _is_identity({p: g[g[p]] for p in self.points}):
                raise ExtQuotError("gamma must be an involution")
            # gamma t gamma^-1 must be t or t^-1
            conj = {p: g[tr[g[p]]] for p in self.points}
            inv = {v: k for k, v in tr.items()}
            if conj != tr and conj != inv:
                raise ExtQuotError("gamma must normalize the translations (as +-1)")
        for p, value in self.cocycles.items():
            if p not in pts:
                raise ExtQuotError(f"cocycle table attached to unknown point {p!r}")
            if value not in (1, -1):
                raise ExtQuotError("cocycle values are restricted to +1 and -1")
            if self.gamma is None or self.gamma[p] != p:
                raise ExtQuotError(
                    f"cocycle table at {p!r} needs an order-2 stabilizer"
                )
        # orbit compatibility of the table family is automatic here: stabilized
        # points are their own orbits and conjugation is trivial on an abelian
        # stabilizer, so the transported table equals the stored one

    @property
    def size(self) -> int:
        return len(self.points)

    @property
    def has_symmetry(self) -> bool:
        return self.gamma is not None and not _is_identity(self.gamma)

    @property
    def gamma_order(self) -> int:
        return 2 if self.gamma is not None else 1

    def gamma_image(self, p):
        return self.gamma[p] if self.gamma is not None else p

    def stabilizer_order(self, p) -> int:
        if self.gamma is None:
            return 1
        return 2 if self.gamma[p] == p else 1

    def cocycle_value(self, p) -> int:
        """k(s, s) of the normalized table at a stabilized point; 1 if trivial."""
        return self.cocycles.get(p, 1)

    def cocycles_trivial(self) -> bool:
        return all(v == 1 for v in self.cocycles.values())

    def orbits(self) -> list:
        """Symmetry orbits as (canonical representative, orbit) pairs.

        Representatives are minimal in the natural order of the labels, so the
        result does not depend on the ordering of the input points.
        """
        seen = set()
        out = []
        for p in sorted(self.points):
            if p in seen:
                continue
            orb = {p, self.gamma_image(p)}
            seen |= orb
            out.append((min(orb), tuple(sorted(orb))))
        return out

    # -- serialization ---------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "points": list(self.points),
            "translation": {str(k): v for k, v in self.translation.items()},
            "gamma": None if self.gamma is None else {str(k): v for k, v in self.gamma.items()},
            "cocycles": {str(k): v for k, v in self.cocycles.items()},
        }

    @staticmethod
    def from_json(doc: dict) -> "FiniteOrbitModel":
        points = doc["points"]
        key = {str(p): p for p in points}
        tr = {key[k]: v for k, v in doc["translation"].items()}
        gamma = doc.get("gamma")
        if gamma is not None:
            gamma = {key[k]: v for k, v in gamma.items()}
        cocycles = {key[k]: v for k, v in (doc.get("cocycles") or {}).items()}
        return FiniteOrbitModel(points, tr, gamma, cocycles)

    def __repr__(self):
        sym = "Z/2" if self.gamma is not None else "1"
        return f"<FiniteOrbitModel |X|={self.size} Gamma={sym}>"


def torsion_model(n: int, gamma: str = "trivial", offset: int = 0) -> FiniteOrbitModel:
    """The n-torsion model on points 0..n-1 with translation x -> x+1.

    ``gamma`` chooses the symmetry: "trivial" (no symmetry), "identity"
    (order-2 group acting trivially), "inversion" (x -> offset - x), or
    "shift-half" (x -> x + n/2, n even).
    """
    if n < 1:
        raise ExtQuotError("torsion level must be >= 1")
    pts = list(range(n))
    tr = {x: (x + 1) % n for x in pts}
    if gamma == "trivial":
        g = None
    elif gamma == "identity":
        g = {x: x for x in pts}
    elif gamma == "inversion":
        g = {x: (offset - x) % n for x in pts}
    elif gamma == "shift-half":
        if n % 2:
            raise ExtQuotError("shift-half needs an even torsion level")
        g = {x: (x + n // 2) % n for x in pts}
    else:
        raise ExtQuotError(f"unknown symmetry kind {gamma!r}")
    return FiniteOrbitModel(pts, tr, g)


# ---------------------------------------------------------------------------
# The two counting routes
# ---------------------------------------------------------------------------


def extended_quotient(m: FiniteOrbitModel) -> list:
    """Points of the extended quotient: (orbit representative, character index).

    For an order-2 stabilizer the twisted group algebra is two-dimensional
    commutative for either admissible table, so it contributes two characters;
    free orbits and the trivial symmetry contribute one point each.
    """
    out = []
    for rep, _ in m.orbits():
        chars = 2 if m.stabilizer_order(rep) == 2 else 1
        for idx in range(chars):
            out.append(ExtQuotPoint(rep, idx))
    return out


def crossed_product_irr_count(m: FiniteOrbitModel) -> int:
    """Number of simple modules of Fun(X) x| Gamma, via the center dimension.

    The algebra has basis e_x u_g with product
    (e_x u_g)(e_y u_h) = [x = g(y)] e_x u_{gh}; the center is computed as the
    kernel of the commutator map with all basis elements, over the rationals.
    """
    if not m.cocycles_trivial():
        raise ExtQuotError("the crossed-product oracle is stated for trivial cocycles")
    group = [0] if m.gamma is None else [0, 1]

    def act(g, x):
        return x if g == 0 else m.gamma[x]

    basis = [(x, g) for x in m.points for g in group]
    index = {b: i for i, b in enumerate(basis)}
    dim = len(basis)

    def mult(a, b):
        (x, g), (y, h) = a, b
        if x != act(g, y):
            return None
        return (x, (g + h) % 2 if len(group) == 2 else 0)

    # rows of the linear system: for every basis element b, z*b - b*z = 0
    rows = []
    for b in basis:
        row_block = [[Fraction(0)] * dim for _ in range(dim)]
        for a in basis:
            left = mult(a, b)
            if left is not None:
                row_block[index[left]][index[a]] += 1
            right = mult(b, a)
            if right is not None:
                row_block[index[right]][index[a]] -= 1
        rows.extend(r for r in row_block if any(r))

    # rank by Gaussian elimination; center dim = dim - rank
    reduced = [list(r) for r in rows]
    r = 0
    for c in range(dim):
        sel = next((i for i in range(r, len(reduced)) if reduced[i][c] != 0), None)
        if sel is None:
            continue
        reduced[r], reduced[sel] = reduced[sel], reduced[r]
        pv = reduced[r][c]
        reduced[r] = [x / pv for x in reduced[r]]
        for i in range(len(reduced)):
            if i != r and reduced[i][c] != 0:
                f = reduced[i][c]
                reduced[i] = [x - f * y for x, y in zip(reduced[i], reduced[r])]
        r += 1
        if r == len(reduced):
            break
    return dim - r


# ---------------------------------------------------------------------------
# Equivariant transfers between two models
# ---------------------------------------------------------------------------


@dataclass
class PropertyVerdict:
    ok: bool
    reason: str = ""
    witness: Optional[tuple] = None

    def __bool__(self):
        return self.ok


def _check_point_map(m1: FiniteOrbitModel, m2: FiniteOrbitModel, point_map: Mapping) -> PropertyVerdict:
    if set(point_map) != set(m1.points) or set(point_map.values()) != set(m2.points):
        return PropertyVerdict(False, "map is not a bijection of point sets")
    if m1.size != m2.size:
        return PropertyVerdict(False, "models have different sizes")
    return PropertyVerdict(True)


def check_property(
    m_group: FiniteOrbitModel, m_galois: FiniteOrbitModel, point_map: Mapping
) -> PropertyVerdict:
    """Equivariance of a point map for translations and for the symmetry.

    Condition (1): the map intertwines the canonical identification of the two
    translation groups (generator to generator).  Condition (2): it intertwines
    the symmetry actions through the unique isomorphism of the two order-2
    groups.  The verdict carries the first violated pair.
    """
    basic = _check_point_map(m_group, m_galois, point_map)
    if not basic:
        return basic
    if m_group.gamma_order != m_galois.gamma_order:
        return PropertyVerdict(False, "symmetry groups have different orders")
    t1, t2 = m_group.translation, m_galois.translation
    for p in m_group.points:
        if point_map[t1[p]] != t2[point_map[p]]:
            return PropertyVerdict(
                False, "translation equivariance fails", (p, point_map[p])
            )
    if m_group.gamma is not None:
        g1, g2 = m_group.gamma, m_galois.gamma
        for p in m_group.points:
            if point_map[g1[p]] != g2[point_map[p]]:
                return PropertyVerdict(
                    False, "symmetry equivariance fails", (p, point_map[p])
                )
    return PropertyVerdict(True)


def _transport(
    m1: FiniteOrbitModel, m2: FiniteOrbitModel, point_map: Mapping
) -> list:
    """Orbitwise pairing of extended-quotient points along an equivariant map."""
    pairs = []
    for rep, _ in m1.orbits():
        image_orbit = {point_map[rep], m2.gamma_image(point_map[rep])}
        rep2 = min(image_orbit)
        chars = 2 if m1.stabilizer_order(rep) == 2 else 1
        for idx in range(chars):
            pairs.append((ExtQuotPoint(rep, idx), ExtQuotPoint(rep2, idx)))
    return pairs


def _verify_bijection(pairs: list, src: list, dst: list):
    if sorted((p.representative, p.irrep_label) for p, _ in pairs) != sorted(
        (p.representative, p.irrep_label) for p in src
    ):
        raise ExtQuotError("transfer does not cover the source")
    image = [(q.representative, q.irrep_label) for _, q in pairs]
    if len(set(image)) != len(image) or sorted(image) != sorted(
        (p.representative, p.irrep_label) for p in dst
    ):
        raise ExtQuotError("transfer is not a bijection onto the target")


def matching_bijection(
    m_group: FiniteOrbitModel, m_galois: FiniteOrbitModel, point_map: Mapping
) -> list:
    """The canonical pairing of the two extended quotients along the map.

    Refuses (raises) when the equivariance property fails or when either
    model carries a nontrivial cocycle table: no recipe ships for matching
    twisted families.
    """
    verdict = check_property(m_group, m_galois, point_map)
    if not verdict:
        raise ExtQuotError(f"refusing to construct the matching: {verdict.reason}")
    if not (m_group.cocycles_trivial() and m_galois.cocycles_trivial()):
        raise ExtQuotError("cocycle matching beyond trivial tables is not defined")
    for p in m_group.points:
        if m_group.stabilizer_order(p) != m_galois.stabilizer_order(point_map[p]):
            raise ExtQuotError("stabilizer orders do not match along the map")
    pairs = _transport(m_group, m_galois, point_map)
    _verify_bijection(pairs, extended_quotient(m_group), extended_quotient(m_galois))
    return pairs


def depth_zero_transfer(
    m_g: FiniteOrbitModel, m_g0: FiniteOrbitModel, point_map: Mapping
) -> list:
    """The induced bijection of extended quotients for a depth-zero companion.

    The point map must be bijective and equivariant; cocycle tables transport
    along the map (trivially, for the tables that ship).  The result pairs
    each quotient point with its image and is verified to be a bijection.
    """
    verdict = check_property(m_g, m_g0, point_map)
    if not verdict:
        raise ExtQuotError(f"transfer rejected: {verdict.reason}")
    if not (m_g.cocycles_trivial() and m_g0.cocycles_trivial()):
        raise ExtQuotError("cocycle transport beyond trivial tables is not defined")
    pairs = _transport(m_g, m_g0, point_map)
    _verify_bijection(pairs, extended_quotient(m_g), extended_quotient(m_g0))
    return pairs
