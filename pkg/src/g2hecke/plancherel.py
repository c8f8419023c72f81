"""The six explicit Plancherel-measure case formulas for maximal-Levi blocks.

Each case descriptor carries the ramification data that selects one of the
six formulas (four for the long-root Levi, two for the short-root Levi).  The
measure is assembled symbolically in a single variable X, normalized so that
one X is one unit step of the unramified twist; the recorded substitutions
say what X means case by case.  Conductor powers and the positive constant in
front are bundled into one opaque positive symbol c, which never affects
zeros or labels.

From the factored measure the routine extracts the parameter pair
(q_alpha, q_alpha*) as integer powers of q, converts it into the weight
labels

    lambda  = log_q(q_alpha * q_alpha*),
    lambda* = |log_q(q_alpha / q_alpha*)|,

and reads off the rank-1 Weyl group from the zeros of the measure on the
unit circle: a zero at X = 1 or X = -1 forces an order-2 group, no zero
means the group is trivial.

Unit values of the relevant characters at uniformizers are restricted to
{+1, -1}; this covers every implemented case and keeps zero detection exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .exactalg import LaurentExpr, RationalExpr, eval_unit_circle_zeros, ring
from .hecke import WeightFunction

__all__ = [
    "PlancherelCase",
    "MuFunction",
    "PlancherelError",
    "CASE_IDS",
    "MU_RING",
    "W_TRIVIAL",
    "W_ORDER_2",
    "mu",
    "labels",
    "weyl_from_zeros",
    "solve_matching",
    "silberger_form",
    "render_mu",
]


class PlancherelError(ValueError):
    pass


CASE_IDS = ("long-I", "long-II", "long-III", "long-IV", "short-I", "short-II")

W_TRIVIAL = "trivial"
W_ORDER_2 = "order-2"

# v with q = v^2, X the twist variable, c the opaque positive prefactor
MU_RING = ring(["v", "X", "c"], {"v": "q"})


@dataclass(frozen=True)
class PlancherelCase:
    """Descriptor for one case formula.

    ``residue_degree`` and ``ramification_index`` describe the quadratic
    extension attached to the block (f * e = 2).  ``omega_unit`` is the value
    of the central character at a uniformizer when unramified;  ``chi_unit``
    the value of the twisted character chi^2 chi'^{-1} at a uniformizer of
    the extension when unramified.  Both are +-1.
    """

    case_id: str
    omega_ramified: bool
    sigma_induced: Optional[bool] = None  # sigma = sigma(tau) for the long root
    chi2chiprime_ramified: Optional[bool] = None
    residue_degree: int = 2
    ramification_index: int = 1
    omega_unit: int = 1
    chi_unit: int = -1

    def __post_init__(self):
        if self.case_id not in CASE_IDS:
            raise PlancherelError(f"unknown case {self.case_id!r}")
        if self.residue_degree * self.ramification_index != 2:
            raise PlancherelError("quadratic extension needs f * e = 2")
        if self.omega_unit not in (1, -1) or self.chi_unit not in (1, -1):
            raise PlancherelError("unit values are restricted to +1 and -1")
        kind = self.root_kind
        if kind == "long":
            if self.sigma_induced is None:
                raise PlancherelError("long-root cases need the sigma = sigma(tau) flag")
            rules = {
                "long-I": (False, True, False),
                "long-II": (True, True, False),
            }
            if self.case_id in rules:
                omega_ram, induced, chi_ram = rules[self.case_id]
                if self.omega_ramified != omega_ram:
                    raise PlancherelError(f"{self.case_id} requires omega_ramified={omega_ram}")
                if self.sigma_induced != induced or self.chi2chiprime_ramified is not False:
                    raise PlancherelError(
                        f"{self.case_id} requires sigma = sigma(tau) with unramified chi^2 chi'^-1"
                    )
            elif self.case_id == "long-III":
                if self.omega_ramified:
                    raise PlancherelError("long-III requires an unramified central character")
                if self.sigma_induced and self.chi2chiprime_ramified is not True:
                    raise PlancherelError("long-III needs sigma != sigma(tau) or ramified chi^2 chi'^-1")
            elif self.case_id == "long-IV":
                if not self.omega_ramified:
                    raise PlancherelError("long-IV requires a ramified central character")
                if self.sigma_induced and self.chi2chiprime_ramified is not True:
                    raise PlancherelError("long-IV needs sigma != sigma(tau) or ramified chi^2 chi'^-1")
        else:
            if self.case_id == "short-I" and self.omega_ramified:
                raise PlancherelError("short-I requires an unramified central character")
            if self.case_id == "short-II" and not self.omega_ramified:
                raise PlancherelError("short-II requires a ramified central character")

    @property
    def root_kind(self) -> str:
        return "long" if self.case_id.startswith("long") else "short"

    @staticmethod
    def from_id(case_id: str, residue_degree: int = 2, omega_unit: int = 1, chi_unit: int = -1) -> "PlancherelCase":
        """The canonical descriptor realizing a given case formula."""
        f = residue_degree
        e = 2 // f
        table = {
            "long-I": dict(omega_ramified=False, sigma_induced=True, chi2chiprime_ramified=False),
            "long-II": dict(omega_ramified=True, sigma_induced=True, chi2chiprime_ramified=False),
            "long-III": dict(omega_ramified=False, sigma_induced=False, chi2chiprime_ramified=None),
            "long-IV": dict(omega_ramified=True, sigma_induced=False, chi2chiprime_ramified=None),
            "short-I": dict(omega_ramified=False),
            "short-II": dict(omega_ramified=True),
        }
        if case_id not in table:
            raise PlancherelError(f"unknown case {case_id!r}")
        return PlancherelCase(
            case_id,
            residue_degree=f,
            ramification_index=e,
            omega_unit=omega_unit,
            chi_unit=chi_unit,
            **table[case_id],
        )


@dataclass(frozen=True)
class MuFunction:
    """The symbolic measure of one case, with its extracted parameters.

    ``q_alpha_exp`` and ``q_alpha_star_exp`` are the exponents a, b with
    q_alpha = q^a and q_alpha* = q^b; both lie in {0, 1, 2}.
    """

    case_id: str
    expr: RationalExpr
    q_alpha_exp: int
    q_alpha_star_exp: int
    substitutions: tuple
    num_factors: tuple = field(default=())
    den_factors: tuple = field(default=())

    def extracted(self) -> tuple:
        return (self.q_alpha_exp, self.q_alpha_star_exp)


def _factor(sign: int, qexp: int, xexp: int) -> LaurentExpr:
    """(1 + sign * q^{-qexp} X^{xexp}) in the measure ring."""
    return MU_RING.one() + MU_RING.monomial({"v": -2 * qexp, "X": xexp}, sign)


def silberger_form(a_exp: int, b_exp: int) -> RationalExpr:
    """The normal form c * prod(1 +- X^{+-1}) / prod(1 +- q_*^{-1} X^{+-1}).

    The first factor pair carries q_alpha = q^a, the second q_alpha* = q^b.
    """
    one = MU_RING.one()
    num = one
    for sign in (-1, 1):
        for xexp in (1, -1):
            num = num * _factor(sign, 0, xexp)
    den = one
    for sign, qexp in ((-1, a_exp), (1, b_exp)):
        for xexp in (1, -1):
            den = den * _factor(sign, qexp, xexp)
    return RationalExpr(MU_RING.var("c") * num, den)


_CASE_FACTORS = {
    # case -> (numerator (sign, qexp, xexp) list, denominator list, substitutions)
    "long-I": (
        [(-1, 0, 1), (-1, 0, -1), (1, 0, 1), (1, 0, -1)],
        None,  # denominator depends on f; filled in mu()
        ("X = omega(pi_F) q^(-2s)", "X = -chi^2 chi'^(-1)(pi_L) q_L^(-s)"),
    ),
    "long-II": (
        [(-1, 0, 1), (-1, 0, -1)],
        None,
        ("X = chi^2 chi'^(-1)(pi_L) q_L^(-s)",),
    ),
    "long-III": (
        [(-1, 0, 1), (-1, 0, -1)],
        [(-1, 1, 1), (-1, 1, -1)],
        ("X = omega(pi_F) q^(-2s)",),
    ),
    "long-IV": ([], [], ()),
    "short-I": (
        [(-1, 0, 1), (-1, 0, -1)],
        [(-1, 1, 1), (-1, 1, -1)],
        ("X = omega(pi_F) q^(-2s)",),
    ),
    "short-II": ([], [], ()),
}


def mu(case: PlancherelCase) -> MuFunction:
    """Assemble the factored measure of one case and extract its parameters."""
    f = case.residue_degree
    num_shape, den_shape, subs = _CASE_FACTORS[case.case_id]
    if case.case_id == "long-I":
        den_shape = [(-1, 1, 1), (-1, 1, -1), (1, f, 1), (1, f, -1)]
        extracted = (1, f)
    elif case.case_id == "long-II":
        den_shape = [(-1, f, 1), (-1, f, -1)]
        extracted = (f, 0)
    elif case.case_id in ("long-III", "short-I"):
        extracted = (1, 0)
    else:
        extracted = (0, 0)

    one = MU_RING.one()
    num = MU_RING.var("c")
    for sign, qexp, xexp in num_shape:
        num = num * _factor(sign, qexp, xexp)
    den = one
    for sign, qexp, xexp in den_shape:
        den = den * _factor(sign, qexp, xexp)
    expr = RationalExpr(num, den)
    return MuFunction(
        case.case_id,
        expr,
        extracted[0],
        extracted[1],
        subs,
        tuple(num_shape),
        tuple(den_shape),
    )


def labels(m: MuFunction) -> WeightFunction:
    """Weight labels from the extracted parameters, as exact integers."""
    a, b = m.extracted()
    if not isinstance(a, int) or not isinstance(b, int):
        raise PlancherelError("parameters are not integer powers of q")
    return WeightFunction.rank_one(a + b, abs(a - b))


def weyl_from_zeros(m: MuFunction) -> str:
    """Order-2 exactly when the measure vanishes somewhere on the unit circle."""
    zeros = eval_unit_circle_zeros(m.expr, "X")
    return W_ORDER_2 if zeros else W_TRIVIAL


def solve_matching(case: PlancherelCase) -> bool:
    """Whether the two descriptions of X in the first long-root case agree.

    The consistency equation has a solution exactly when the extension is
    unramified (residue degree 2) and the two unit values are opposite.
    """
    if case.case_id != "long-I":
        raise PlancherelError("the matching equation belongs to the long-I case")
    return case.residue_degree == 2 and case.omega_unit + case.chi_unit == 0


def render_mu(m: MuFunction) -> str:
    """The factored Silberger-style rendering used by the command line."""

    def label(shape):
        sign, qexp, xexp = shape
        mid = "-" if sign < 0 else "+"
        qpart = "" if qexp == 0 else f"q^-{qexp}*"
        xpart = "X" if xexp == 1 else f"X^{xexp}"
        return f"(1 {mid} {qpart}{xpart})"

    num = "*".join(label(s) for s in m.num_factors) or "1"
    if not m.den_factors:
        return f"c * {num}" if num != "1" else "c"
    den = "*".join(label(s) for s in m.den_factors)
    return f"c * {num} / ({den})"
