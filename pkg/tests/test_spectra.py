"""Closed-form spectra: frozen values, domains, decompositions, equivalence."""

from fractions import Fraction

import pytest

from mdscosets import (
    cheung_cumulative,
    delta,
    delta_star,
    full_spectrum,
    helper_terms,
    make_params,
    mds_weight,
    omega,
    phi,
    sigma_le1,
    sigma_le2,
    sigma_w1,
    sigma_w2,
    sigma_w3,
    variants_for,
)
from mdscosets.cli import run_verify
from mdscosets.codes import CodeParams
from mdscosets.combinat import binom

# (n, k, q) triples whose spectra the census has to confirm end to end
VERIFY_CODES = [
    (3, 1, 2),
    (5, 3, 4),
    (6, 4, 5),
    (6, 3, 5),
    (6, 2, 5),
    (6, 1, 5),
    (7, 3, 7),
]

# all constructible parameter sets with small q, for formula-to-formula sweeps
def _sweep_params(qs=(2, 3, 4, 5, 7, 8, 9)) -> list[CodeParams]:
    return [
        make_params(n, k, q)
        for q in qs
        for n in range(1, q + 2)
        for k in range(1, n + 1)
    ]


# -- helper terms -----------------------------------------------------------


def test_phi_frozen_values(flagship_params):
    p = flagship_params
    assert phi(p, 5, 1) == 9
    assert phi(p, 5, 2) == 16
    assert phi(p, 6, 1) == -4
    assert phi(p, 6, 2) == -7
    assert phi(p, 3, 1) == 0
    assert phi(p, 3, 2) == 0


def test_phi_domain():
    with pytest.raises(ValueError):
        phi(make_params(7, 3, 7), 5, 1)  # n != q + 1
    with pytest.raises(ValueError):
        phi(make_params(6, 3, 5), 5, 1)  # d != 5
    p = make_params(6, 2, 5)
    with pytest.raises(ValueError):
        phi(p, 2, 1)
    with pytest.raises(ValueError):
        phi(p, 7, 1)
    with pytest.raises(ValueError):
        phi(p, 5, 3)


def test_delta_frozen_values(flagship_params):
    p = flagship_params
    assert [delta(p, w) for w in (3, 4, 5, 6)] == [240, -720, 720, -240]


def test_omega_frozen_value(flagship_params):
    assert omega(flagship_params, 5, 0) == 24
    with pytest.raises(ValueError):
        omega(flagship_params, 5, 3)


def test_delta_star_scales_delta():
    for p in _sweep_params((4, 5, 7, 8)):
        scale = binom(p.n, 2) * (p.q - 1) ** 2
        for w in range(p.n + 1):
            assert scale * delta_star(p, w) == delta(p, w)


def test_delta_star_denominator_divides_q_minus_1(flagship_params):
    ds = delta_star(flagship_params, 4)
    assert isinstance(ds, Fraction)
    assert (flagship_params.q - 1) % ds.denominator == 0


def test_helper_terms_bundle(flagship_params):
    h = helper_terms(flagship_params, 5)
    assert h.omega[0] == 24
    assert h.phi == {1: 9, 2: 16}
    assert h.delta == 720
    h3 = helper_terms(make_params(6, 3, 5), 4)
    assert h3.phi is None


# -- frozen spectrum values for the [6, 2] code over GF(5) ------------------


def test_sigma_w1_frozen(flagship_params):
    p = flagship_params
    for variant in variants_for("sigma_w1", p):
        got = [sigma_w1(p, w, variant) for w in (4, 5, 6)]
        assert got == [120, 360, 96], variant


def test_sigma_le1_frozen(flagship_params):
    p = flagship_params
    for variant in ("lemma", "corollary"):
        got = [sigma_le1(p, w, variant) for w in (4, 5, 6)]
        assert got == [120, 384, 96], variant


def test_sigma_w2_frozen(flagship_params):
    p = flagship_params
    for variant in variants_for("sigma_w2", p):
        got = [sigma_w2(p, w, variant) for w in (3, 4, 5, 6)]
        assert got == [240, 1440, 2640, 1440], variant


def test_sigma_le2_frozen(flagship_params):
    p = flagship_params
    assert [sigma_le2(p, w) for w in (3, 4, 5, 6)] == [240, 1560, 3024, 1536]


def test_sigma_w3_frozen(flagship_params):
    p = flagship_params
    for variant in variants_for("sigma_w3", p):
        got = [sigma_w3(p, w, variant, covering_radius=3) for w in (3, 4, 5, 6)]
        assert got == [1040, 2280, 3120, 2560], variant


def test_cheung_frozen(flagship_params):
    p = flagship_params
    assert cheung_cumulative(p, 1, 4) == 120
    assert cheung_cumulative(p, 1, 5) == 384
    assert cheung_cumulative(p, 1, 6) == 96
    assert cheung_cumulative(p, 2, 3) == 240
    assert cheung_cumulative(p, 2, 4) == 1560
    assert cheung_cumulative(p, 2, 5) == 3024
    assert cheung_cumulative(p, 2, 6) == 1536


def test_full_spectrum_frozen(flagship_params):
    p = flagship_params
    assert full_spectrum(p, 0) == [1, 0, 0, 0, 0, 24, 0]
    assert full_spectrum(p, 1) == [0, 24, 0, 0, 120, 360, 96]
    assert full_spectrum(p, 2) == [0, 0, 240, 240, 1440, 2640, 1440]
    assert full_spectrum(p, 3, covering_radius=3) == [0, 0, 0, 1040, 2280, 3120, 2560]


# -- domain checks ----------------------------------------------------------


def test_sigma_w1_domain():
    p = make_params(6, 2, 5)
    with pytest.raises(ValueError):
        sigma_w1(p, 3)  # below d - 1
    with pytest.raises(ValueError):
        sigma_w1(p, 7)
    with pytest.raises(ValueError):
        sigma_w1(p, 5, "no_such_form")
    with pytest.raises(ValueError):
        sigma_w1(make_params(7, 3, 7), 5, "q_plus_1")  # n != q + 1
    with pytest.raises(ValueError):
        sigma_w1(make_params(6, 1, 5), 6, "q_plus_1_d5")  # d = 6
    with pytest.raises(ValueError):
        sigma_w1(make_params(4, 3, 5), 2)  # d = 2 has no weight-1 theory


def test_sigma_w2_domain():
    with pytest.raises(ValueError):
        sigma_w2(make_params(6, 3, 5), 4)  # d = 4 < 5
    p = make_params(6, 2, 5)
    with pytest.raises(ValueError):
        sigma_w2(p, 2)
    with pytest.raises(ValueError):
        sigma_w2(p, 5, "no_such_form")
    with pytest.raises(ValueError):
        sigma_w2(make_params(7, 3, 7), 5, "q_plus_1_d5")


def test_sigma_le_domains():
    with pytest.raises(ValueError):
        sigma_le1(make_params(4, 3, 5), 2)  # d = 2
    with pytest.raises(ValueError):
        sigma_le1(make_params(6, 2, 5), 3)
    with pytest.raises(ValueError):
        sigma_le1(make_params(6, 2, 5), 4, "no_such_form")
    with pytest.raises(ValueError):
        sigma_le2(make_params(6, 3, 5), 4)
    with pytest.raises(ValueError):
        sigma_le2(make_params(6, 2, 5), 2)


def test_sigma_w3_domain():
    p = make_params(6, 2, 5)
    with pytest.raises(ValueError):
        sigma_w3(make_params(6, 3, 5), 4, covering_radius=3)  # d != 5
    with pytest.raises(ValueError):
        sigma_w3(p, 4, covering_radius=4)  # wrong covering radius
    with pytest.raises(ValueError):
        sigma_w3(p, 2, covering_radius=3)
    with pytest.raises(ValueError):
        sigma_w3(p, 4, "no_such_form", covering_radius=3)
    with pytest.raises(ValueError):
        sigma_w3(make_params(7, 3, 7), 4, "q_plus_1", covering_radius=3)
    with pytest.raises(TypeError):
        sigma_w3(p, 4)  # covering_radius is required


def test_cheung_domain(flagship_params):
    p = flagship_params
    with pytest.raises(ValueError):
        cheung_cumulative(p, 0, 4)
    with pytest.raises(ValueError):
        cheung_cumulative(p, 3, 4)  # t_cap > t
    with pytest.raises(ValueError):
        cheung_cumulative(p, 2, 2)  # u < d - t_cap
    with pytest.raises(ValueError):
        cheung_cumulative(p, 1, 7)


def test_full_spectrum_domain():
    with pytest.raises(ValueError):
        full_spectrum(make_params(6, 2, 5), 4)
    with pytest.raises(ValueError):
        full_spectrum(make_params(4, 4, 3), 1)  # d = 1
    with pytest.raises(ValueError):
        full_spectrum(make_params(6, 3, 5), 2)  # d = 4
    with pytest.raises(ValueError):
        full_spectrum(make_params(6, 2, 5), 3)  # covering radius not supplied
    with pytest.raises(ValueError):
        full_spectrum(make_params(6, 2, 5), 3, covering_radius=4)


def test_variants_for():
    p = make_params(6, 2, 5)  # n = q + 1, d = 5
    assert variants_for("sigma_w1", p) == [1, 2, 3, 4, 5, "q_plus_1", "q_plus_1_d5"]
    assert variants_for("sigma_w2", p) == [1, 2, 3, 4, 5, "q_plus_1_d5"]
    assert variants_for("sigma_w3", p) == [
        "general", "general_expanded", "q_plus_1", "q_plus_1_compact",
    ]
    short = make_params(7, 3, 7)  # d = 5, n < q + 1
    assert variants_for("sigma_w1", short) == [1, 2, 3, 4, 5]
    assert variants_for("sigma_w2", short) == [1, 2, 3, 4, 5]
    assert variants_for("sigma_w3", short) == ["general", "general_expanded"]
    low = make_params(6, 4, 5)  # d = 3
    assert variants_for("sigma_w2", low) == []
    assert variants_for("sigma_w3", low) == []
    assert variants_for("sigma_le1", make_params(4, 3, 5)) == []  # d = 2
    with pytest.raises(ValueError):
        variants_for("sigma_w9", p)


# -- algebraic decompositions -------------------------------------------------


def test_le1_splits_into_code_plus_w1():
    for p in _sweep_params():
        if p.d < 3:
            continue
        for w in range(p.d - 1, p.n + 1):
            assert sigma_le1(p, w) == mds_weight(p, w) + sigma_w1(p, w)


def test_le2_splits_into_le1_plus_w2():
    for p in _sweep_params():
        if p.d < 5:
            continue
        assert sigma_le2(p, p.d - 2) == sigma_w2(p, p.d - 2)
        for w in range(p.d - 1, p.n + 1):
            assert sigma_le2(p, w) == sigma_le1(p, w) + sigma_w2(p, w)


def test_cheung_matches_le1_and_le2():
    for p in _sweep_params():
        if p.t >= 1 and p.d >= 3:
            for u in range(p.d - 1, p.n + 1):
                assert cheung_cumulative(p, 1, u) == sigma_le1(p, u)
        if p.t >= 2 and p.d >= 5:
            for u in range(p.d - 2, p.n + 1):
                assert cheung_cumulative(p, 2, u) == sigma_le2(p, u)


def test_w3_complements_le2():
    for p in _sweep_params((4, 5, 7, 8, 9)):
        if p.d != 5:
            continue
        for w in range(3, p.n + 1):
            total = binom(p.n, w) * (p.q - 1) ** w
            assert sigma_w3(p, w, covering_radius=3) == total - sigma_le2(p, w)


# -- all printed forms agree ---------------------------------------------------


def test_form_equivalence_sweep():
    for p in _sweep_params():
        for variant in variants_for("sigma_w1", p)[1:]:
            for w in range(p.d - 1, p.n + 1):
                assert sigma_w1(p, w, variant) == sigma_w1(p, w, 1), (p, variant, w)
        for variant in variants_for("sigma_w2", p)[1:]:
            for w in range(p.d - 2, p.n + 1):
                assert sigma_w2(p, w, variant) == sigma_w2(p, w, 1), (p, variant, w)
        for variant in variants_for("sigma_w3", p)[1:]:
            for w in range(3, p.n + 1):
                assert sigma_w3(p, w, variant, covering_radius=3) == sigma_w3(
                    p, w, covering_radius=3
                ), (p, variant, w)
        for variant in variants_for("sigma_le1", p)[1:]:
            for w in range(p.d - 1, p.n + 1):
                assert sigma_le1(p, w, variant) == sigma_le1(p, w), (p, variant, w)


def test_spectra_are_nonnegative():
    for p in _sweep_params():
        if p.d >= 3:
            assert all(c >= 0 for c in full_spectrum(p, 1))
        if p.d >= 5:
            assert all(c >= 0 for c in full_spectrum(p, 2))
        if p.d == 5:
            assert all(c >= 0 for c in full_spectrum(p, 3, covering_radius=3))


# -- identity sweeps that lean on the spectra helpers ---------------------------


def test_q_power_identity_sweep():
    from mdscosets.identities import q_power_failures

    assert q_power_failures(40, 9) == []


def test_signed_product_identity_sweep():
    from mdscosets.identities import signed_product_failures

    assert signed_product_failures(40) == []


def test_delta_star_identity_sweep():
    from mdscosets.identities import delta_star_failures

    assert delta_star_failures(9) == []


# -- end-to-end agreement with the census --------------------------------------


@pytest.mark.parametrize("n,k,q", VERIFY_CODES)
def test_run_verify_passes(n, k, q):
    report = run_verify(make_params(n, k, q))
    assert report.status == "pass", report.mismatches
    assert report.mismatches == []
    assert report.checks > 0
