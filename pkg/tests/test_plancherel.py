import pytest

from g2hecke.exactalg import eval_unit_circle_zeros
from g2hecke.plancherel import (
    CASE_IDS,
    W_ORDER_2,
    W_TRIVIAL,
    MU_RING,
    PlancherelCase,
    PlancherelError,
    labels,
    mu,
    render_mu,
    silberger_form,
    solve_matching,
    weyl_from_zeros,
)

# (case, residue degree f) -> extracted exponents and labels, from the case
# formulas with q_L = q^f
EXPECTED = {
    ("long-I", 2): ((1, 2), (3, 1)),
    ("long-II", 2): ((2, 0), (2, 2)),
    ("long-III", 2): ((1, 0), (1, 1)),
    ("long-IV", 2): ((0, 0), (0, 0)),
    ("short-I", 2): ((1, 0), (1, 1)),
    ("short-II", 2): ((0, 0), (0, 0)),
    ("short-I", 1): ((1, 0), (1, 1)),
    ("short-II", 1): ((0, 0), (0, 0)),
}


@pytest.mark.parametrize("case_id,f", sorted(EXPECTED))
def test_extraction_and_labels(case_id, f):
    m = mu(PlancherelCase.from_id(case_id, residue_degree=f))
    want_extract, want_labels = EXPECTED[(case_id, f)]
    assert m.extracted() == want_extract
    assert labels(m).pair() == want_labels


def test_mu_matches_silberger_normal_form():
    for case_id in CASE_IDS:
        m = mu(PlancherelCase.from_id(case_id))
        a, b = m.extracted()
        assert m.expr == silberger_form(a, b), case_id


def test_mu_symmetric_under_inverting_x():
    for case_id in CASE_IDS:
        m = mu(PlancherelCase.from_id(case_id))
        assert m.expr.invert_variable("X") == m.expr, case_id


def test_weyl_verdicts():
    assert weyl_from_zeros(mu(PlancherelCase.from_id("long-IV"))) == W_TRIVIAL
    assert weyl_from_zeros(mu(PlancherelCase.from_id("short-II"))) == W_TRIVIAL
    assert weyl_from_zeros(mu(PlancherelCase.from_id("short-I"))) == W_ORDER_2
    assert weyl_from_zeros(mu(PlancherelCase.from_id("long-I"))) == W_ORDER_2
    assert weyl_from_zeros(mu(PlancherelCase.from_id("long-II"))) == W_ORDER_2
    assert weyl_from_zeros(mu(PlancherelCase.from_id("long-III"))) == W_ORDER_2


def test_weyl_verdict_matches_labels():
    for case_id in CASE_IDS:
        for f in (1, 2):
            if case_id in ("long-I", "long-II") and f == 1:
                continue
            m = mu(PlancherelCase.from_id(case_id, residue_degree=f))
            nonzero = labels(m).pair() != (0, 0)
            assert (weyl_from_zeros(m) == W_ORDER_2) == nonzero


def test_zero_locations_case_by_case():
    # long-I keeps both orbits of numerator factors: zeros at +1 and -1
    assert eval_unit_circle_zeros(mu(PlancherelCase.from_id("long-I")).expr, "X") == {1, -1}
    # long-II and long-III keep only the (1 - X)(1 - X^-1) pair
    assert eval_unit_circle_zeros(mu(PlancherelCase.from_id("long-II")).expr, "X") == {1}
    assert eval_unit_circle_zeros(mu(PlancherelCase.from_id("long-III")).expr, "X") == {1}
    assert eval_unit_circle_zeros(mu(PlancherelCase.from_id("long-IV")).expr, "X") == set()


def test_solve_matching():
    good = PlancherelCase.from_id("long-I", omega_unit=1, chi_unit=-1)
    assert solve_matching(good)
    same_sign = PlancherelCase.from_id("long-I", omega_unit=1, chi_unit=1)
    assert not solve_matching(same_sign)
    ramified = PlancherelCase.from_id("long-I", residue_degree=1)
    assert not solve_matching(ramified)
    with pytest.raises(PlancherelError):
        solve_matching(PlancherelCase.from_id("long-II"))


def test_descriptor_validation():
    with pytest.raises(PlancherelError):
        PlancherelCase("long-I", omega_ramified=True, sigma_induced=True, chi2chiprime_ramified=False)
    with pytest.raises(PlancherelError):
        PlancherelCase("long-III", omega_ramified=False, sigma_induced=True, chi2chiprime_ramified=False)
    with pytest.raises(PlancherelError):
        PlancherelCase("short-I", omega_ramified=True)
    with pytest.raises(PlancherelError):
        PlancherelCase("short-I", omega_ramified=False, residue_degree=2, ramification_index=2)
    with pytest.raises(PlancherelError):
        PlancherelCase("nope", omega_ramified=False)
    # ramified chi^2 chi'^-1 with induced sigma is a valid long-III descriptor
    PlancherelCase("long-III", omega_ramified=False, sigma_induced=True, chi2chiprime_ramified=True)


def test_prefactor_is_opaque_and_positive_symbol():
    m = mu(PlancherelCase.from_id("long-IV"))
    assert m.expr == silberger_form(0, 0)
    assert m.expr.num == MU_RING.var("c")
    assert render_mu(m) == "c"


def test_render_factored_form():
    m = mu(PlancherelCase.from_id("long-III"))
    s = render_mu(m)
    assert s.startswith("c * (1 - X)")
    assert "q^-1*X" in s
