"""Classifier for the maximal-Levi Bernstein blocks of split G2.

A block descriptor records which maximal Levi the block sits on (long or
short simple root), the depth class of its inducing datum, the twisted Levi
G0 underneath it, and the ramification switches that drive the measure
formulas.  ``classify`` maps a descriptor to the unique table row it matches
and returns the row's invariants:

* the rank-1 Weyl group W_O and the twisting group R(O), for the block and
  for its depth-zero companion on G0;
* the order of the stabilizer of the inducing supercuspidal inside the
  unramified twist torus (2 / ramification index);
* presentation data for the block algebra on both sides.

Rows whose measure formula applies are classified through the Plancherel
pipeline: the weight labels come from ``plancherel.labels(mu(case))`` and the
Weyl verdict from the unit-circle zeros, never from hand-copied constants.
The four canonical tables (long/short x depth-zero/positive) are emitted in
a fixed reading order and are frozen as golden JSON files; rows the tables
leave undetermined carry a first-class "unknown" R-group state.

The classification assumes the residual characteristic is not 2 or 3; no
prime arithmetic happens here, callers that cannot grant the assumption get
a refusal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .hecke import AffineHeckePresentation, RGroup, WeightFunction, presentations_equal
from .plancherel import (
    W_ORDER_2,
    W_TRIVIAL,
    PlancherelCase,
    labels,
    mu,
    weyl_from_zeros,
)

__all__ = [
    "BlockDescriptor",
    "BlockClassification",
    "BlocksError",
    "FAMILIES",
    "classify",
    "emit_table",
    "table_rows",
    "render_text_table",
    "check_weyl_iso",
    "check_ro_reduction",
]

SCHEMA_VERSION = 1

FAMILIES = ("long-depth-zero", "long-positive", "short-depth-zero", "short-positive")

# algebra shapes
NONCOMM = "noncommutative"
CROSSED = "crossed-product"  # C[R(O)] x| C[O]
COMMUTATIVE = "commutative"  # C[O]


class BlocksError(ValueError):
    pass


@dataclass(frozen=True)
class BlockDescriptor:
    """Descriptor of one block, mirroring the table columns.

    ``depth_class`` is one of depth-zero, essentially-depth-zero (r != 0 with
    G0 = M), positive-depth.  ``g0_kind`` names the twisted Levi underneath:
    G itself, M0 = M, one of the two unitary groups, a torus (with the
    sequence (M0, G)), or the three-step chain (M0, M, G).
    ``phi0_restriction`` applies to positive depth only and takes
    trivial / sign-character / other-nontrivial / both.
    """

    root_kind: str  # "long" | "short"
    depth_class: str  # "depth-zero" | "essentially-depth-zero" | "positive-depth"
    g0_kind: str  # "G" | "M0=M" | "U_eps(1,1)" | "U_pi(1,1)" | "torus" | "chain"
    L_over_F: str  # "ramified" | "unramified"
    omega_ramified: Optional[bool] = None
    chi_cubic: Optional[bool] = None
    chi2chiprime_ramified: Optional[bool] = None
    phi0_restriction: Optional[str] = None
    phi1_trivial: Optional[bool] = None

    def __post_init__(self):
        if self.root_kind not in ("long", "short"):
            raise BlocksError(f"bad root kind {self.root_kind!r}")
        if self.depth_class not in ("depth-zero", "essentially-depth-zero", "positive-depth"):
            raise BlocksError(f"bad depth class {self.depth_class!r}")
        if self.g0_kind not in ("G", "M0=M", "U_eps(1,1)", "U_pi(1,1)", "torus", "chain"):
            raise BlocksError(f"bad twisted Levi kind {self.g0_kind!r}")
        if self.L_over_F not in ("ramified", "unramified"):
            raise BlocksError(f"bad extension kind {self.L_over_F!r}")
        if self.depth_class == "depth-zero" and self.g0_kind != "G":
            raise BlocksError("depth-zero blocks have G0 = G")
        if self.depth_class == "essentially-depth-zero" and self.g0_kind != "M0=M":
            raise BlocksError("essentially-depth-zero blocks have G0 = M0 = M")
        if self.depth_class == "positive-depth" and self.g0_kind in ("G", "M0=M"):
            raise BlocksError("positive-depth blocks sit under a proper twisted Levi")
        if self.chi_cubic is not None and not (self.root_kind == "long" and self.depth_class == "depth-zero"):
            raise BlocksError("the cubic-character switch only applies to long depth-zero blocks")
        if self.chi2chiprime_ramified is not None and self.chi_cubic is not True:
            raise BlocksError("chi^2 chi'^-1 ramification applies only when chi is cubic")
        if self.phi0_restriction is not None:
            if self.depth_class != "positive-depth":
                raise BlocksError("phi_0 restriction data belongs to positive depth")
            if self.phi0_restriction not in ("trivial", "sign-character", "other-nontrivial", "both"):
                raise BlocksError(f"bad phi_0 restriction {self.phi0_restriction!r}")
        if self.phi1_trivial is not None and self.depth_class != "positive-depth":
            raise BlocksError("phi_1 data belongs to positive depth")
        if self.L_over_F == "unramified" and self.residue_degree != 2:
            raise BlocksError("unramified quadratic extensions have residue degree 2")

    @property
    def residue_degree(self) -> int:
        return 2 if self.L_over_F == "unramified" else 1

    @property
    def ramification_index(self) -> int:
        return 1 if self.L_over_F == "unramified" else 2

    @property
    def family(self) -> str:
        if self.depth_class == "positive-depth":
            return f"{self.root_kind}-positive"
        return f"{self.root_kind}-depth-zero"

    def to_json(self) -> dict:
        return {
            "root_kind": self.root_kind,
            "depth_class": self.depth_class,
            "g0_kind": self.g0_kind,
            "L_over_F": self.L_over_F,
            "omega_ramified": self.omega_ramified,
            "chi_cubic": self.chi_cubic,
            "chi2chiprime_ramified": self.chi2chiprime_ramified,
            "phi0_restriction": self.phi0_restriction,
            "phi1_trivial": self.phi1_trivial,
        }


def _noncomm(lam: int, lam_star: int) -> AffineHeckePresentation:
    return AffineHeckePresentation(
        1, 2, WeightFunction.rank_one(lam, lam_star), RGroup.trivial()
    )


def _crossed(r_group: RGroup) -> AffineHeckePresentation:
    return AffineHeckePresentation(1, 1, None, r_group)


def _commutative() -> AffineHeckePresentation:
    return AffineHeckePresentation(1, 1, None, RGroup.trivial())


@dataclass(frozen=True)
class BlockClassification:
    """Table-row invariants of one block."""

    w_o: str  # "trivial" | "order-2"
    r_o: RGroup
    w_o0: str
    r_o0: RGroup
    xnr_order: int
    h_g: AffineHeckePresentation
    h_g0: AffineHeckePresentation
    mu_case: Optional[str] = None

    def __post_init__(self):
        if self.w_o == W_ORDER_2 and self.r_o.state != "trivial":
            raise BlocksError("an order-2 Weyl part forces a trivial R-group in rank 1")

    def h_kind(self, side: str = "G") -> str:
        p = self.h_g if side == "G" else self.h_g0
        if p.weyl_order == 2:
            return NONCOMM
        return COMMUTATIVE if p.r_group.state == "trivial" else CROSSED

    def to_json(self) -> dict:
        def pres_json(p: AffineHeckePresentation, kind: str) -> dict:
            out = {"kind": kind}
            if p.weyl_order == 2:
                lam, lam_star = p.weights.pair()
                out["lambda"] = lam
                out["lambda_star"] = lam_star
                out["params"] = [f"q^{lam}" if lam != 1 else "q", f"q^{lam_star}" if lam_star != 1 else "q"]
            else:
                out["r_group"] = p.r_group.state
            return out

        return {
            "W_O": self.w_o,
            "R_O": self.r_o.state,
            "W_O0": self.w_o0,
            "R_O0": self.r_o0.state,
            "xnr_order": self.xnr_order,
            "H_G": pres_json(self.h_g, self.h_kind("G")),
            "H_G0": pres_json(self.h_g0, self.h_kind("G0")),
            "mu_case": self.mu_case,
        }


def check_weyl_iso(c: BlockClassification) -> bool:
    """The two block algebras have equal presentation data."""
    return presentations_equal(c.h_g, c.h_g0)


def check_ro_reduction(c: BlockClassification) -> bool:
    """R(O) and W_O agree with their depth-zero companions, state by state."""
    return c.r_o.state == c.r_o0.state and c.w_o == c.w_o0


# ---------------------------------------------------------------------------
# Table construction
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TableRow:
    family: str
    index: int
    descriptor: BlockDescriptor
    classification: BlockClassification
    datum_display: str

    def matches(self, d: BlockDescriptor) -> bool:
        a, b = self.descriptor, d
        if (a.root_kind, a.depth_class, a.g0_kind, a.L_over_F) != (
            b.root_kind,
            b.depth_class,
            b.g0_kind,
            b.L_over_F,
        ):
            return False
        for field_name in ("omega_ramified", "chi_cubic", "chi2chiprime_ramified", "phi1_trivial"):
            av, bv = getattr(a, field_name), getattr(b, field_name)
            if av is not None and bv is not None and av != bv:
                return False
            if (av is None) != (bv is None):
                return False
        if a.phi0_restriction == "both":
            return b.phi0_restriction is not None
        return a.phi0_restriction == b.phi0_restriction

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "index": self.index,
            "datum": self.datum_display,
            "descriptor": self.descriptor.to_json(),
            "classification": self.classification.to_json(),
        }


def _classify_from_case(case: PlancherelCase, xnr_order: int, r_if_trivial_w: RGroup, g0_same: bool, g0_pres=None, w_o0=None, r_o0=None) -> BlockClassification:
    """Build a row's classification through the measure pipeline.

    The weight labels and the Weyl verdict are derived from the case formula;
    when the verdict is order-2 the R-group is trivial (rank-1 constraint),
    otherwise ``r_if_trivial_w`` is used.  For depth-zero rows (g0_same) the
    companion data is identical; otherwise it is supplied explicitly.
    """
    m = mu(case)
    verdict = weyl_from_zeros(m)
    pair = labels(m).pair()
    if verdict == W_ORDER_2:
        r_o = RGroup.trivial()
        h_g = _noncomm(*pair)
    else:
        r_o = r_if_trivial_w
        h_g = _crossed(r_o)
    if g0_same:
        w_o0, r_o0, h_g0 = verdict, r_o, h_g
    else:
        h_g0 = g0_pres
    return BlockClassification(
        verdict, r_o, w_o0, r_o0, xnr_order, h_g, h_g0, mu_case=case.case_id
    )


def _build_long_depth_zero() -> list:
    rows = []
    fam = "long-depth-zero"
    datum_r0 = "((G,M),(y,iota),(M_{y,0},rho_M))"
    datum_rne0 = "(((M,G),M),(y,iota),(r,0),(phi,1),(M_{y,0},rho_M))"

    def D(**kw):
        return BlockDescriptor("long", "depth-zero", "G", "unramified", **kw)

    # four cubic-character rows, then the split "chi not cubic" pair
    row_defs = [
        (D(omega_ramified=False, chi_cubic=True, chi2chiprime_ramified=False), "long-I"),
        (D(omega_ramified=True, chi_cubic=True, chi2chiprime_ramified=False), "long-II"),
        (D(omega_ramified=False, chi_cubic=True, chi2chiprime_ramified=True), "long-III"),
        (D(omega_ramified=True, chi_cubic=True, chi2chiprime_ramified=True), "long-IV"),
        (D(omega_ramified=False, chi_cubic=False), "long-III"),
        (D(omega_ramified=True, chi_cubic=False), "long-IV"),
    ]
    for i, (desc, case_id) in enumerate(row_defs, start=1):
        case = PlancherelCase(
            case_id,
            omega_ramified=desc.omega_ramified,
            sigma_induced=desc.chi_cubic,
            chi2chiprime_ramified=desc.chi2chiprime_ramified,
            residue_degree=desc.residue_degree,
            ramification_index=desc.ramification_index,
        )
        cls = _classify_from_case(
            case,
            xnr_order=2 // desc.ramification_index,
            r_if_trivial_w=RGroup.unknown(),
            g0_same=True,
        )
        rows.append(TableRow(fam, i, desc, cls, datum_r0))

    # r != 0: G0 = M, everything collapses to the translation algebra
    desc = BlockDescriptor(
        "long", "essentially-depth-zero", "M0=M", "unramified", omega_ramified=True
    )
    cls = BlockClassification(
        W_TRIVIAL,
        RGroup.trivial(),
        W_TRIVIAL,
        RGroup.trivial(),
        2,
        _commutative(),
        _commutative(),
    )
    rows.append(TableRow(fam, 7, desc, cls, datum_rne0))
    return rows


def _build_long_positive() -> list:
    rows = []
    fam = "long-positive"

    def D(g0, lf, phi0, phi1):
        return BlockDescriptor(
            "long", "positive-depth", g0, lf, phi0_restriction=phi0, phi1_trivial=phi1
        )

    # T_{beta, pi'} block (ramified torus)
    desc = D("U_pi(1,1)", "ramified", "sign-character", False)
    case = PlancherelCase(
        "long-IV", omega_ramified=True, sigma_induced=False,
        residue_degree=1, ramification_index=2,
    )
    cls = _classify_from_case(
        case, xnr_order=1, r_if_trivial_w=RGroup.nontrivial(), g0_same=False,
        g0_pres=_crossed(RGroup.nontrivial()), w_o0=W_TRIVIAL, r_o0=RGroup.nontrivial(),
    )
    rows.append(TableRow(fam, 1, desc, cls, "(U_pi'(1,1),G)"))

    rows.append(
        TableRow(
            fam, 2, D("torus", "ramified", "other-nontrivial", True),
            BlockClassification(
                W_TRIVIAL, RGroup.trivial(), W_TRIVIAL, RGroup.trivial(), 1,
                _commutative(), _commutative(),
            ),
            "(M0,G)",
        )
    )
    rows.append(
        TableRow(
            fam, 3, D("chain", "ramified", "both", False),
            BlockClassification(
                W_TRIVIAL, RGroup.trivial(), W_TRIVIAL, RGroup.trivial(), 1,
                _commutative(), _commutative(),
            ),
            "(M0,M,G)",
        )
    )

    # T_{beta, eps} block (unramified torus)
    desc = D("U_eps(1,1)", "unramified", "trivial", True)
    case = PlancherelCase(
        "long-III", omega_ramified=False, sigma_induced=False,
        residue_degree=2, ramification_index=1,
    )
    cls = _classify_from_case(
        case, xnr_order=2, r_if_trivial_w=RGroup.trivial(), g0_same=False,
        g0_pres=_noncomm(1, 1), w_o0=W_ORDER_2, r_o0=RGroup.trivial(),
    )
    rows.append(TableRow(fam, 4, desc, cls, "(U_eps(1,1),G)"))

    for i, (g0, phi0, phi1, datum) in enumerate(
        [("torus", "other-nontrivial", True, "(M0,G)"), ("chain", "both", False, "(M0,M,G)")],
        start=5,
    ):
        rows.append(
            TableRow(
                fam, i, D(g0, "unramified", phi0, phi1),
                BlockClassification(
                    W_TRIVIAL, RGroup.trivial(), W_TRIVIAL, RGroup.trivial(), 2,
                    _commutative(), _commutative(),
                ),
                datum,
            )
        )
    return rows


def _build_short_depth_zero() -> list:
    rows = []
    fam = "short-depth-zero"
    datum_r0 = "((G,M),(y,iota),(M_{y,0},rho_M))"
    datum_rne0 = "(((M,G),M),(y,iota),(r,0),(phi,1),(M_{y,0},rho_M))"

    for i, omega_ram in enumerate([False, True], start=1):
        desc = BlockDescriptor(
            "short", "depth-zero", "G", "unramified", omega_ramified=omega_ram
        )
        case = PlancherelCase(
            "short-I" if not omega_ram else "short-II",
            omega_ramified=omega_ram,
            residue_degree=2,
            ramification_index=1,
        )
        cls = _classify_from_case(
            case, xnr_order=2, r_if_trivial_w=RGroup.unknown(), g0_same=True
        )
        rows.append(TableRow(fam, i, desc, cls, datum_r0))

    for i, omega_ram in enumerate([False, True], start=3):
        desc = BlockDescriptor(
            "short", "essentially-depth-zero", "M0=M", "unramified", omega_ramified=omega_ram
        )
        cls = BlockClassification(
            W_TRIVIAL, RGroup.trivial(), W_TRIVIAL, RGroup.trivial(), 2,
            _commutative(), _commutative(),
        )
        rows.append(TableRow(fam, i, desc, cls, datum_rne0))
    return rows


def _build_short_positive() -> list:
    rows = []
    fam = "short-positive"

    def D(g0, lf, phi0, phi1):
        return BlockDescriptor(
            "short", "positive-depth", g0, lf, phi0_restriction=phi0, phi1_trivial=phi1
        )

    # T_{alpha, pi'} block (ramified torus)
    desc = D("U_pi(1,1)", "ramified", "trivial", True)
    case = PlancherelCase("short-I", omega_ramified=False, residue_degree=1, ramification_index=2)
    cls = _classify_from_case(
        case, xnr_order=1, r_if_trivial_w=RGroup.trivial(), g0_same=False,
        g0_pres=_noncomm(1, 1), w_o0=W_ORDER_2, r_o0=RGroup.trivial(),
    )
    rows.append(TableRow(fam, 1, desc, cls, "(U_pi'(1,1),G)"))

    desc = D("U_pi(1,1)", "ramified", "sign-character", False)
    case = PlancherelCase("short-II", omega_ramified=True, residue_degree=1, ramification_index=2)
    cls = _classify_from_case(
        case, xnr_order=1, r_if_trivial_w=RGroup.nontrivial(), g0_same=False,
        g0_pres=_crossed(RGroup.nontrivial()), w_o0=W_TRIVIAL, r_o0=RGroup.nontrivial(),
    )
    rows.append(TableRow(fam, 2, desc, cls, "(U_pi'(1,1),G)"))

    for i, (g0, phi0, phi1, datum) in enumerate(
        [("torus", "other-nontrivial", True, "(M0,G)"), ("chain", "both", False, "(M0,M,G)")],
        start=3,
    ):
        rows.append(
            TableRow(
                fam, i, D(g0, "ramified", phi0, phi1),
                BlockClassification(
                    W_TRIVIAL, RGroup.trivial(), W_TRIVIAL, RGroup.trivial(), 1,
                    _commutative(), _commutative(),
                ),
                datum,
            )
        )

    # T_{alpha, eps} block (unramified torus)
    desc = D("U_eps(1,1)", "unramified", "trivial", True)
    case = PlancherelCase("short-I", omega_ramified=False, residue_degree=2, ramification_index=1)
    cls = _classify_from_case(
        case, xnr_order=2, r_if_trivial_w=RGroup.trivial(), g0_same=False,
        g0_pres=_noncomm(1, 1), w_o0=W_ORDER_2, r_o0=RGroup.trivial(),
    )
    rows.append(TableRow(fam, 5, desc, cls, "(U_eps(1,1),G)"))

    for i, (g0, phi0, phi1, datum) in enumerate(
        [("torus", "other-nontrivial", True, "(M0,G)"), ("chain", "both", False, "(M0,M,G)")],
        start=6,
    ):
        rows.append(
            TableRow(
                fam, i, D(g0, "unramified", phi0, phi1),
                BlockClassification(
                    W_TRIVIAL, RGroup.trivial(), W_TRIVIAL, RGroup.trivial(), 2,
                    _commutative(), _commutative(),
                ),
                datum,
            )
        )
    return rows


_BUILDERS = {
    "long-depth-zero": _build_long_depth_zero,
    "long-positive": _build_long_positive,
    "short-depth-zero": _build_short_depth_zero,
    "short-positive": _build_short_positive,
}

_CACHE: dict = {}


def table_rows(family: str) -> list:
    if family not in _BUILDERS:
        raise BlocksError(f"unknown family {family!r}; choose from {FAMILIES}")
    if family not in _CACHE:
        _CACHE[family] = _BUILDERS[family]()
    return _CACHE[family]


def emit_table(family: str) -> dict:
    """The canonical JSON document for one family, in reading order."""
    rows = table_rows(family)
    return {
        "schema_version": SCHEMA_VERSION,
        "family": family,
        "rows": [r.to_json() for r in rows],
    }


def classify(d: BlockDescriptor, assume_good_residual_char: bool = True) -> BlockClassification:
    """The unique table row matching the descriptor.

    The table data is only valid away from residual characteristic 2 and 3;
    passing ``assume_good_residual_char=False`` refuses instead of answering.
    """
    if not assume_good_residual_char:
        raise BlocksError(
            "classification data assumes residual characteristic not in {2, 3}"
        )
    matches = [r for r in table_rows(d.family) if r.matches(d)]
    if not matches:
        raise BlocksError(f"descriptor matches no table row: {d}")
    if len(matches) > 1:
        raise BlocksError(f"descriptor is ambiguous across rows {[r.index for r in matches]}")
    return matches[0].classification


# ---------------------------------------------------------------------------
# Plain-text rendering aligned with the printed layout
# ---------------------------------------------------------------------------


def _h_display(c: BlockClassification, side: str) -> str:
    kind = c.h_kind(side)
    p = c.h_g if side == "G" else c.h_g0
    if kind == NONCOMM:
        lam, lam_star = p.weights.pair()
        ps = ("q" if lam == 1 else f"q^{lam}", "q" if lam_star == 1 else f"q^{lam_star}")
        return f"non-comm, {ps[0]}, {ps[1]}"
    if kind == CROSSED:
        return "C[R(O)] x| C[O]"
    return "C[O]"


def _state_display(s: str) -> str:
    return {"trivial": "= 1", "nontrivial": "!= 1", "unknown": "*"}[s]


def render_text_table(family: str) -> str:
    rows = table_rows(family)
    depth_zero = family.endswith("depth-zero")
    if depth_zero:
        headers = ["#", "r", "omega", "chi^2chi'^-1", "R(O)", "R(O^0)", "L/F",
                   "#X_nr", "W_O", "W_O^0", "H(G,rho)", "H(G^0,rho^0)"]
    else:
        headers = ["#", "M^0", "phi_0|Z", "phi_1", "vec G", "R(O)", "R(O^0)", "L/F",
                   "#X_nr", "W_O", "W_O^0", "H(G,rho)", "H(G^0,rho^0)"]
    lines = [headers]
    for r in rows:
        d, c = r.descriptor, r.classification
        w = lambda s: "!= 1" if s == W_ORDER_2 else "= 1"
        if depth_zero:
            chi = "N/A"
            if d.chi_cubic is True:
                chi = ("ramified" if d.chi2chiprime_ramified else "unramified") + ", chi cubic"
            elif d.chi_cubic is False:
                chi = "chi not cubic"
            lines.append([
                str(r.index),
                "r = 0" if d.depth_class == "depth-zero" else "r != 0",
                "!= 1" if d.omega_ramified else "= 1",
                chi,
                _state_display(c.r_o.state),
                _state_display(c.r_o0.state),
                d.L_over_F,
                str(c.xnr_order),
                w(c.w_o),
                w(c.w_o0),
                _h_display(c, "G"),
                _h_display(c, "G0"),
            ])
        else:
            torus = ("T_beta," if d.root_kind == "long" else "T_alpha,") + (
                "pi'" if d.L_over_F == "ramified" else "eps"
            )
            phi0 = {
                "trivial": "= 1",
                "sign-character": "= sign char",
                "other-nontrivial": "!= 1, != sign",
                "both": "both",
            }[d.phi0_restriction]
            lines.append([
                str(r.index),
                torus,
                phi0,
                "= 1" if d.phi1_trivial else "!= 1",
                r.datum_display,
                _state_display(c.r_o.state),
                _state_display(c.r_o0.state),
                d.L_over_F,
                str(c.xnr_order),
                w(c.w_o),
                w(c.w_o0),
                _h_display(c, "G"),
                _h_display(c, "G0"),
            ])
    widths = [max(len(row[i]) for row in lines) for i in range(len(headers))]
    out = []
    for j, row in enumerate(lines):
        out.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip())
        if j == 0:
            out.append("  ".join("-" * widths[i] for i in range(len(widths))))
    return "\n".join(out)
