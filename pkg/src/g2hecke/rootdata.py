"""Based root data, Weyl groups, and the explicit G2 datum.

Roots are integer vectors in the basis of simple roots, the symmetric pairing
is a Gram matrix on that basis, and coroot pairings come out of the usual
formula <x, g^> = 2(x|g)/(g|g).  Only small finite systems are exercised
(G2, A1, rank-1 subdata of G2), so everything is explicit integer matrices
with a Cartan-type tag used solely for the bad-prime table.

The affine Weyl group of a rank-1 datum is carried as pairs
(translation, sign): no alcove combinatorics, just generators, the length
function and the weight function needed by the Hecke layer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "BasedRootDatum",
    "WeylElement",
    "RootDatumError",
    "g2_datum",
    "a1_datum",
    "empty_datum",
    "rank_one_subdatum",
    "bad_primes",
    "generate_weyl",
    "affine_mul",
    "affine_inverse",
    "affine_length",
    "affine_weight",
    "AFFINE_IDENTITY",
    "AFFINE_S0",
    "AFFINE_S1",
]


class RootDatumError(ValueError):
    pass


Vec = tuple


def _dot(row: Sequence, vec: Sequence) -> Fraction:
    return sum((Fraction(a) * b for a, b in zip(row, vec)), Fraction(0))


def _mat_vec(mat: Sequence[Sequence], vec: Sequence) -> Vec:
    return tuple(sum(row[j] * vec[j] for j in range(len(vec))) for row in mat)


def _mat_mul(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n)
    )


def _identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class WeylElement:
    """A Weyl group element: a reduced word in simple reflections and its matrix."""

    word: tuple
    matrix: tuple

    @property
    def length(self) -> int:
        return len(self.word)

    def act(self, vec: Sequence) -> Vec:
        return _mat_vec(self.matrix, vec)


class BasedRootDatum:
    """A based root datum carried by explicit vectors and a Gram matrix.

    ``roots`` is the full (finite) root set in simple-root coordinates,
    ``simple`` the ordered basis.  Coroots are represented through the pairing
    ``coroot_pairing(x, gamma) = 2(x|gamma)/(gamma|gamma)``, which is checked
    to be integral on all roots.
    """

    def __init__(
        self,
        basis_labels: Sequence[str],
        positive_roots: Iterable[Vec],
        gram: Sequence[Sequence],
        cartan_type: str,
        metadata: dict | None = None,
    ):
        self.basis_labels = tuple(basis_labels)
        self.rank = len(self.basis_labels)
        pos = [tuple(r) for r in positive_roots]
        self.positive_roots = tuple(pos)
        self.roots = tuple(pos + [tuple(-x for x in r) for r in pos])
        self.gram = tuple(tuple(Fraction(x) for x in row) for row in gram)
        self.cartan_type = cartan_type
        self.metadata = dict(metadata or {})
        self.simple = tuple(
            tuple(1 if i == j else 0 for j in range(self.rank)) for i in range(self.rank)
        )
        if pos:
            self._validate()

    # -- bilinear structure --------------------------------------------------

    def pairing(self, x: Sequence, y: Sequence) -> Fraction:
        """The symmetric form (x|y) in simple-root coordinates."""
        return sum(
            Fraction(x[i]) * self.gram[i][j] * y[j]
            for i in range(self.rank)
            for j in range(self.rank)
        )

    def coroot_pairing(self, x: Sequence, gamma: Sequence) -> Fraction:
        """<x, gamma^> = 2(x|gamma)/(gamma|gamma)."""
        gg = self.pairing(gamma, gamma)
        if gg == 0:
            raise RootDatumError("isotropic vector has no coroot")
        return 2 * self.pairing(x, gamma) / gg

    def reflection_matrix(self, gamma: Sequence) -> tuple:
        cols = []
        for j in range(self.rank):
            e = tuple(1 if i == j else 0 for i in range(self.rank))
            coeff = self.coroot_pairing(e, gamma)
            if coeff.denominator != 1:
                raise RootDatumError("non-integral reflection; not a root datum")
            cols.append(tuple(e[i] - int(coeff) * gamma[i] for i in range(self.rank)))
        # cols[j] is the image of basis vector j; matrix acts on column vectors
        return tuple(tuple(cols[j][i] for j in range(self.rank)) for i in range(self.rank))

    def simple_reflections(self) -> tuple:
        if "simple_indices" in self.metadata:
            idx = self.metadata["simple_indices"]
            gens = [self.positive_roots[i] for i in idx]
        else:
            gens = [s for s in self.simple if s in self.roots]
        return tuple(self.reflection_matrix(g) for g in gens)

    def simple_root_vectors(self) -> tuple:
        if "simple_indices" in self.metadata:
            return tuple(self.positive_roots[i] for i in self.metadata["simple_indices"])
        return tuple(s for s in self.simple if s in self.roots)

    # -- invariants ----------------------------------------------------------

    def _validate(self):
        root_set = set(self.roots)
        for g in self.roots:
            if self.coroot_pairing(g, g) != 2:
                raise RootDatumError(f"<a, a^> != 2 for root {g}")
        for d in self.simple_root_vectors():
            if d not in self.positive_roots:
                raise RootDatumError("simple roots must be positive")
        for m in self.simple_reflections():
            for r in self.roots:
                if _mat_vec(m, r) not in root_set:
                    raise RootDatumError("simple reflection does not permute the roots")
        simple = self.simple_root_vectors()
        for r in self.positive_roots:
            coeffs = self._express_in(simple, r)
            if coeffs is None or any(c < 0 or c.denominator != 1 for c in coeffs):
                raise RootDatumError(
                    f"positive root {r} is not a nonnegative integer combination of the basis"
                )

    def _express_in(self, basis: Sequence[Vec], target: Vec):
        # solve basis * c = target by Gaussian elimination over Q
        n = self.rank
        k = len(basis)
        rows = [[Fraction(basis[j][i]) for j in range(k)] + [Fraction(target[i])] for i in range(n)]
        piv = 0
        for col in range(k):
            sel = next((r for r in range(piv, n) if rows[r][col] != 0), None)
            if sel is None:
                continue
            rows[piv], rows[sel] = rows[sel], rows[piv]
            f = rows[piv][col]
            rows[piv] = [x / f for x in rows[piv]]
            for r in range(n):
                if r != piv and rows[r][col] != 0:
                    g = rows[r][col]
                    rows[r] = [x - g * y for x, y in zip(rows[r], rows[piv])]
            piv += 1
        sol = [Fraction(0)] * k
        piv = 0
        for col in range(k):
            if piv < n and rows[piv][col] == 1 and all(rows[piv][c] == 0 for c in range(col)):
                sol[col] = rows[piv][-1]
                piv += 1
        for i in range(n):
            if sum(Fraction(basis[j][i]) * sol[j] for j in range(k)) != target[i]:
                return None
        return sol

    def to_json(self) -> dict:
        return {
            "cartan_type": self.cartan_type,
            "basis": list(self.basis_labels),
            "positive_roots": [list(r) for r in self.positive_roots],
            "gram": [[str(x) if x.denominator != 1 else int(x) for x in row] for row in self.gram],
            "metadata": self.metadata,
        }

    def __repr__(self):
        return f"<BasedRootDatum {self.cartan_type} rank {self.rank}>"


def g2_datum() -> BasedRootDatum:
    """The G2 datum: short simple root alpha, long simple root beta.

    Positive roots alpha, beta, alpha+beta, 2alpha+beta, 3alpha+beta,
    3alpha+2beta; pairings (alpha|alpha)=2, (beta|beta)=6, (alpha|beta)=-3.
    The metadata records how the two coroots evaluate through the standard
    identifications of the maximal torus with two copies of the field, once
    through the short-root Levi chart and once through the dual-side chart.
    """
    positive = [(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)]
    metadata = {
        "coroot_evaluations": {
            "eta_alpha": {"alpha_coroot": [1, -1], "beta_coroot": [0, 1]},
            "eta_beta_dual": {"alpha_coroot": [0, 1], "beta_coroot": [1, -1]},
        },
        # positive root orthogonal to each simple root (defines the maximal Levi)
        "orthogonal_partner": {"alpha": [3, 1], "beta": [3, 2]},
    }
    return BasedRootDatum(
        ("alpha", "beta"), positive, [[2, -3], [-3, 6]], "G2", metadata
    )


def a1_datum() -> BasedRootDatum:
    return BasedRootDatum(("alpha",), [(1,)], [[2]], "A1")


def empty_datum(rank: int = 1, labels: Sequence[str] | None = None) -> BasedRootDatum:
    labels = tuple(labels or tuple(f"x{i}" for i in range(rank)))
    gram = _identity(rank)
    return BasedRootDatum(labels, [], gram, "empty")


def rank_one_subdatum(d: BasedRootDatum, root: Sequence) -> BasedRootDatum:
    """The rank-1 datum {root, -root} inside the ambient lattice of ``d``.

    This is the Sigma_O of a maximal-Levi block; its Weyl group has order 2.
    """
    root = tuple(root)
    if root not in d.roots:
        raise RootDatumError(f"{root} is not a root of {d.cartan_type}")
    pos = root if root in d.positive_roots else tuple(-x for x in root)
    return BasedRootDatum(
        d.basis_labels,
        [pos],
        d.gram,
        "A1",
        {"ambient": d.cartan_type, "simple_indices": [0]},
    )


_BAD_PRIMES = {
    "A": set(),
    "B": {2},
    "C": {2},
    "D": {2},
    "G2": {2, 3},
    "F4": {2, 3},
    "E6": {2, 3},
    "E7": {2, 3},
    "E8": {2, 3, 5},
    "empty": set(),
}


def bad_primes(d: BasedRootDatum) -> set:
    """Bad primes of the root system: 2 unless type A, 3 for G2/F4/E, 5 for E8."""
    t = d.cartan_type
    if not d.positive_roots:
        return set()
    key = t if t in _BAD_PRIMES else t.rstrip("0123456789")
    if key not in _BAD_PRIMES:
        raise RootDatumError(f"unclassified root system {t!r}")
    return set(_BAD_PRIMES[key])


def generate_weyl(d: BasedRootDatum, max_elements: int = 10000) -> list:
    """The full Weyl group with reduced words, by breadth-first closure.

    Words grow one simple reflection at a time, so the first visit to an
    element happens at its true length and the stored word is reduced.
    """
    gens = d.simple_reflections()
    identity = _identity(d.rank)
    seen = {identity: WeylElement((), identity)}
    frontier = [seen[identity]]
    while frontier:
        nxt = []
        for w in frontier:
            for i, g in enumerate(gens):
                m = _mat_mul(w.matrix, g)
                if m not in seen:
                    el = WeylElement(w.word + (i,), m)
                    seen[m] = el
                    nxt.append(el)
                    if len(seen) > max_elements:
                        raise RootDatumError("Weyl closure exceeded growth bound; non-finite system?")
        frontier = nxt
    return sorted(seen.values(), key=lambda w: (w.length, w.word))


# ---------------------------------------------------------------------------
# Rank-1 affine Weyl group: pairs (translation, sign)
# ---------------------------------------------------------------------------

# element (n, s) acts on the line by x -> s*x + n; s0 = (0,-1), s1 = (1,-1)
AFFINE_IDENTITY = (0, 1)
AFFINE_S0 = (0, -1)
AFFINE_S1 = (1, -1)


def affine_mul(a: tuple, b: tuple) -> tuple:
    n1, s1 = a
    n2, s2 = b
    return (n1 + s1 * n2, s1 * s2)


def affine_inverse(a: tuple) -> tuple:
    n, s = a
    return (-s * n, s)


def affine_length(a: tuple) -> int:
    n, s = a
    if s == 1:
        return 2 * abs(n)
    return abs(2 * n - 1)


def affine_weight(a: tuple, lam: int, lam_star: int) -> int:
    """Additive weight with value lam on s0 and lam_star on s1.

    Counts of each generator in any reduced word are determined by the element
    (the two generators alternate), so this is well-defined.
    """
    n, s = a
    if s == 1:
        return abs(n) * (lam + lam_star)
    if n >= 1:
        return n * lam_star + (n - 1) * lam
    return (1 - n) * lam + (-n) * lam_star
