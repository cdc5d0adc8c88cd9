"""Closed-form weight spectra for MDS code cosets of weight 0, 1, 2 and 3.

For a coset weight W, sigma_wW(params, w) is the number of weight-w vectors
summed over all cosets whose minimum weight is exactly W; sigma_le1 and
sigma_le2 are the cumulative versions over coset weight <= 1 and <= 2, and
cheung_cumulative is the classical bounded-distance tally over coset weight
<= t_cap.  Everything is exact integer arithmetic.

Most of these quantities have several published closed forms.  Each form is
implemented as its own code path, transcribed from its printed shape with no
shared simplification, so that the forms can be played against one another
and against the enumeration census in `oracle`.  Select a form with the
`variant` argument; `variants_for` lists what applies to given parameters.

Weight-3 spectra exist only for d = 5 codes whose covering radius is 3.
Whether a particular code has covering radius 3 is not decided here: callers
must pass `covering_radius=3`, either measured by the census or asserted
deliberately.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .codes import CodeParams, Spectrum, mds_weight, sphere_volume
from .combinat import binom


def _sgn(m: int) -> int:
    """(-1)**m for any integer m, including negative ones."""
    return -1 if m % 2 else 1


def _exact_int(x: Fraction) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"expected an integer, got {x}")
    return int(x)


# -- signed helper terms shared by the displayed formulas ------------------


def omega(params: CodeParams, w: int, j: int) -> int:
    """Signed two-binomial product shared by several of the closed forms.

    Used with j in {0, 1, 2}; the forms only ever evaluate it at w >= j + 1.
    """
    n, d = params.n, params.d
    if j not in (0, 1, 2):
        raise ValueError(f"omega is used with j in {{0, 1, 2}}, got {j}")
    if not 0 <= w <= n:
        raise ValueError(f"w must be in [0, {n}], got {w}")
    return _sgn(w - d) * binom(n - j, w - j) * binom(w - j - 1, d - j - 2)


def phi(params: CodeParams, w: int, j: int) -> int:
    """Signed binomial difference used by the full-length (n = q + 1), d = 5
    specializations.  Undefined for other parameters."""
    n, q, d = params.n, params.q, params.d
    if n != q + 1 or d != 5:
        raise ValueError("phi is only defined for codes with n = q + 1 and d = 5")
    if j not in (0, 1, 2):
        raise ValueError(f"phi is used with j in {{0, 1, 2}}, got {j}")
    if not 3 <= w <= n:
        raise ValueError(f"w must be in [3, {n}], got {w}")
    return _sgn(w - 5) * (
        binom(q + 1, w) * binom(w - 1, 3) - binom(q + 1 - j, w - j) * binom(w - 1 - j, 3 - j)
    )


def delta(params: CodeParams, w: int) -> int:
    """Signed correction term of the weight-2 coset spectrum."""
    n, q, d = params.n, params.q, params.d
    if not 0 <= w <= n:
        raise ValueError(f"w must be in [0, {n}], got {w}")
    return _sgn(w - d) * binom(n, w) * binom(w, d - 2) * binom(n - d + 2, 2) * (q - 1)


def delta_star(params: CodeParams, w: int) -> Fraction:
    """delta scaled down by C(n,2)(q-1)^2, as an exact rational.

    For n < 2 the scale factor is zero as is delta itself; the vacuous value
    0 keeps the defining relation delta == C(n,2)(q-1)^2 * delta_star true.
    """
    n, q, d = params.n, params.q, params.d
    if not 0 <= w <= n:
        raise ValueError(f"w must be in [0, {n}], got {w}")
    if n < 2:
        return Fraction(0)
    return Fraction(_sgn(w - d) * binom(n - d + 2, n - w) * binom(n - 2, d - 2), q - 1)


@dataclass(frozen=True)
class HelperTerms:
    """Bundle of the signed helper terms at a single (params, w)."""

    omega: dict[int, int]
    phi: dict[int, int] | None  # None unless n = q + 1 and d = 5
    delta: int
    delta_star: Fraction


def helper_terms(params: CodeParams, w: int) -> HelperTerms:
    """Evaluate omega/phi/delta/delta_star together for inspection and tests."""
    omegas = {j: omega(params, w, j) for j in (0, 1, 2) if w - j - 1 >= 0 and params.n - j >= 0}
    phis = None
    if params.n == params.q + 1 and params.d == 5 and w >= 3:
        phis = {j: phi(params, w, j) for j in (1, 2)}
    return HelperTerms(
        omega=omegas, phi=phis, delta=delta(params, w), delta_star=delta_star(params, w)
    )


# -- cumulative spectrum over cosets of weight <= t_cap --------------------


def cheung_cumulative(params: CodeParams, t_cap: int, u: int) -> int:
    """Weight-u vector count over all cosets of weight <= t_cap.

    Classical bounded-distance tally for an MDS code correcting t_cap
    errors; valid for 1 <= t_cap <= params.t and d - t_cap <= u <= n.
    """
    n, q, d = params.n, params.q, params.d
    if not 1 <= t_cap <= params.t:
        raise ValueError(f"t_cap must be in [1, {params.t}], got {t_cap}")
    if not d - t_cap <= u <= n:
        raise ValueError(f"u must be in [{d - t_cap}, {n}], got {u}")
    total = 0
    for j in range(u - d + t_cap + 1):
        if j <= u - d:
            nj = binom(u, j) * (
                q ** (u - d + 1 - j) * sphere_volume(n, q, t_cap)
                - sum(binom(u - j, i) * (q - 1) ** i for i in range(t_cap + 1))
            )
        else:
            acc = 0
            for wv in range(d - u + j, t_cap + 1):
                inner = sum(
                    _sgn(i) * binom(wv, i) * (q ** (wv - d + u - j - i + 1) - 1)
                    for i in range(wv - d + u - j + 1)
                )
                tail = sum(
                    binom(u - j, s - wv) * (q - 1) ** (s - wv) for s in range(wv, t_cap + 1)
                )
                acc += binom(n - u + j, wv) * inner * tail
            nj = binom(u, j) * acc
        total += _sgn(j) * nj
    return binom(n, u) * total


# -- cosets of weight <= 1 --------------------------------------------------


def _le1_lemma(params: CodeParams, w: int) -> int:
    n, q, d = params.n, params.q, params.d
    s = sum(
        _sgn(j)
        * binom(w, j)
        * (q ** (w - d + 1 - j) * (1 + n * (q - 1)) - 1 - (w - j) * (q - 1))
        for j in range(w - d + 1)
    )
    tail = _sgn(w - d) * binom(w, d - 1) * (n - d + 1) * (q - 1)
    return binom(n, w) * (s - tail)


def _le1_corollary(params: CodeParams, w: int) -> int:
    n, q, d = params.n, params.q, params.d
    s = sum(
        _sgn(j) * binom(n - j, w - j) * binom(w - j - 1, d - j - 2) for j in range(2)
    )
    return mds_weight(params, w) * sphere_volume(n, q, 1) - _sgn(w - d) * n * (q - 1) * s


_LE1_FORMS = {"lemma": _le1_lemma, "corollary": _le1_corollary}


def sigma_le1(params: CodeParams, w: int, variant: str = "lemma") -> int:
    """Weight-w vector count over all cosets of weight <= 1.

    Needs d >= 3 and d - 1 <= w <= n.  Variants: "lemma" (expanded sum) and
    "corollary" (product with the ball volume plus a two-term correction).
    """
    n, d = params.n, params.d
    if d < 3:
        raise ValueError("cumulative weight-1 spectra need minimum distance >= 3")
    if not d - 1 <= w <= n:
        raise ValueError(f"w must be in [{d - 1}, {n}], got {w}")
    try:
        form = _LE1_FORMS[variant]
    except KeyError:
        raise ValueError(f"unknown sigma_le1 variant {variant!r}") from None
    return form(params, w)


# -- cosets of weight exactly 1 ---------------------------------------------


def _w1_form1(params: CodeParams, w: int) -> int:
    n, q, d = params.n, params.q, params.d
    s = sum(_sgn(j) * binom(w, j) * q ** (w + 1 - d - j) for j in range(w + 2 - d))
    return binom(n, w) * (q - 1) * (n * s + _sgn(w - d) * w * binom(w - 2, d - 3))


def _w1_form2(params: CodeParams, w: int) -> int:
    n, q, d = params.n, params.q, params.d
    s = sum(_sgn(j) * binom(w, j) * q ** (w + 1 - d - j) for j in range(w + 2 - d))
    return n * (q - 1) * (binom(n, w) * s + omega(params, w, 1))


def _w1_form3(params: CodeParams, w: int) -> int:
    n, q, d = params.n, params.q, params.d
    s = sum(_sgn(j) * binom(w, j) * (q ** (w + 1 - d - j) - 1) for j in range(w + 1 - d))
    return n * (q - 1) * (binom(n, w) * s - omega(params, w, 0) + omega(params, w, 1))


def _w1_form4(params: CodeParams, w: int) -> int:
    n, q = params.n, params.q
    return n * (q - 1) * (mds_weight(params, w) - omega(params, w, 0) + omega(params, w, 1))


def _w1_form5(params: CodeParams, w: int) -> int:
    n, q, d = params.n, params.q, params.d
    corr = binom(n, w) * binom(w - 1, d - 2) - binom(n - 1, w - 1) * binom(w - 2, d - 3)
    return n * (q - 1) * (mds_weight(params, w) - _sgn(w - d) * corr)


def _w1_q_plus_1(params: CodeParams, w: int) -> int:
    q, d = params.q, params.d
    s = sum(
        _sgn(i) * (binom(w, i + 1) - binom(w, i)) * q ** (w + 1 - d - i)
        for i in range(w + 1 - d)
    )
    tail = _sgn(w - d) * (binom(w, d - 1) - w * binom(w - 2, d - 3))
    return binom(q + 1, w) * (q - 1) * (q ** (w + 2 - d) - s - tail)


def _w1_q_plus_1_d5(params: CodeParams, w: int) -> int:
    q = params.q
    return (q * q - 1) * (mds_weight(params, w) - phi(params, w, 1))


_W1_FORMS = {
    1: _w1_form1,
    2: _w1_form2,
    3: _w1_form3,
    4: _w1_form4,
    5: _w1_form5,
    "q_plus_1": _w1_q_plus_1,
    "q_plus_1_d5": _w1_q_plus_1_d5,
}


def sigma_w1(params: CodeParams, w: int, variant: int | str = 1) -> int:
    """Weight-w vector count over all cosets of weight exactly 1.

    Needs d >= 3 and d - 1 <= w <= n.  Variants 1..5 hold for every such
    code; "q_plus_1" additionally needs n = q + 1, and "q_plus_1_d5" needs
    n = q + 1 with d = 5.
    """
    n, q, d = params.n, params.q, params.d
    if d < 3:
        raise ValueError("weight-1 coset spectra need minimum distance >= 3")
    if not d - 1 <= w <= n:
        raise ValueError(f"w must be in [{d - 1}, {n}], got {w}")
    if variant in ("q_plus_1", "q_plus_1_d5") and n != q + 1:
        raise ValueError(f"variant {variant!r} needs n = q + 1")
    if variant == "q_plus_1_d5" and d != 5:
        raise ValueError("variant 'q_plus_1_d5' needs d = 5")
    try:
        form = _W1_FORMS[variant]
    except KeyError:
        raise ValueError(f"unknown sigma_w1 variant {variant!r}") from None
    return form(params, w)


# -- cosets of weight <= 2 --------------------------------------------------


def sigma_le2(params: CodeParams, w: int) -> int:
    """Weight-w vector count over all cosets of weight <= 2.

    Needs d >= 5 and d - 2 <= w <= n.
    """
    n, q, d = params.n, params.q, params.d
    if d < 5:
        raise ValueError("cumulative weight-2 spectra need minimum distance >= 5")
    if not d - 2 <= w <= n:
        raise ValueError(f"w must be in [{d - 2}, {n}], got {w}")
    s = sum(
        _sgn(j)
        * binom(w, j)
        * (q ** (w - d + 1 - j) * sphere_volume(n, q, 2) - sphere_volume(w - j, q, 2))
        for j in range(w - d + 1)
    )
    tail = Fraction(_sgn(w - d) * (n - d + 1) * (q - 1), 2) * (
        binom(w, d - 1) * (2 + (q - 1) * (n + d - 2)) - binom(w, d - 2) * (n - d + 2)
    )
    return _exact_int(binom(n, w) * (s - tail))


# -- cosets of weight exactly 2 ----------------------------------------------


def _w2_form1(params: CodeParams, w: int) -> int:
    n, q, d = params.n, params.q, params.d
    s = sum(_sgn(j) * binom(w, j) * q ** (w + 1 - d - j) for j in range(w + 2 - d))
    lead = binom(n, w) * (q - 1) ** 2 * (
        binom(n, 2) * s + _sgn(w - d) * binom(w, 2) * binom(w - 3, d - 4)
    )
    return lead + delta(params, w)


def _w2_form2(params: CodeParams, w: int) -> int:
    n, q, d = params.n, params.q, params.d
    s = sum(_sgn(j) * binom(w, j) * q ** (w + 1 - d - j) for j in range(w + 2 - d))
    return binom(n, 2) * (q - 1) ** 2 * (binom(n, w) * s + omega(params, w, 2)) + delta(
        params, w
    )


def _w2_form3(params: CodeParams, w: int) -> int:
    n, q, d = params.n, params.q, params.d
    s = sum(_sgn(j) * binom(w, j) * (q ** (w + 1 - d - j) - 1) for j in range(w + 1 - d))
    lead = binom(n, 2) * (q - 1) ** 2 * (
        binom(n, w) * s - omega(params, w, 0) + omega(params, w, 2)
    )
    return lead + delta(params, w)


def _w2_form4(params: CodeParams, w: int) -> int:
    n, q = params.n, params.q
    scale = binom(n, 2) * (q - 1) ** 2
    lead = scale * (mds_weight(params, w) - omega(params, w, 0) + omega(params, w, 2))
    return _exact_int(lead + scale * delta_star(params, w))


def _w2_form5(params: CodeParams, w: int) -> int:
    n, q, d = params.n, params.q, params.d
    corr = binom(n, w) * binom(w - 1, d - 2) - binom(n - 2, w - 2) * binom(w - 3, d - 4)
    lead = binom(n, 2) * (q - 1) ** 2 * (mds_weight(params, w) - _sgn(w - d) * corr)
    tail = _sgn(w - d) * binom(n, 2) * (q - 1) * binom(n - d + 2, n - w) * binom(n - 2, d - 2)
    return lead + tail


def _w2_q_plus_1_d5(params: CodeParams, w: int) -> int:
    q = params.q
    inner = (
        mds_weight(params, w)
        - phi(params, w, 2)
        + Fraction(_sgn(w - 5), 3) * binom(q - 2, w - 3) * binom(q - 2, 2)
    )
    return _exact_int(binom(q + 1, 2) * (q - 1) ** 2 * inner)


_W2_FORMS = {
    1: _w2_form1,
    2: _w2_form2,
    3: _w2_form3,
    4: _w2_form4,
    5: _w2_form5,
    "q_plus_1_d5": _w2_q_plus_1_d5,
}


def sigma_w2(params: CodeParams, w: int, variant: int | str = 1) -> int:
    """Weight-w vector count over all cosets of weight exactly 2.

    Needs d >= 5 and d - 2 <= w <= n.  Variants 1..5 hold for every such
    code; "q_plus_1_d5" additionally needs n = q + 1 with d = 5.
    """
    n, q, d = params.n, params.q, params.d
    if d < 5:
        raise ValueError("weight-2 coset spectra need minimum distance >= 5")
    if not d - 2 <= w <= n:
        raise ValueError(f"w must be in [{d - 2}, {n}], got {w}")
    if variant == "q_plus_1_d5" and (n != q + 1 or d != 5):
        raise ValueError("variant 'q_plus_1_d5' needs n = q + 1 and d = 5")
    try:
        form = _W2_FORMS[variant]
    except KeyError:
        raise ValueError(f"unknown sigma_w2 variant {variant!r}") from None
    return form(params, w)


# -- cosets of weight exactly 3 ----------------------------------------------


def _w3_general(params: CodeParams, w: int) -> int:
    n, q = params.n, params.q
    return binom(n, w) * (q - 1) ** w - sigma_le2(params, w)


def _w3_general_expanded(params: CodeParams, w: int) -> int:
    n, q = params.n, params.q
    s = sum(
        _sgn(j)
        * binom(w, j)
        * (q ** (w - 4 - j) * sphere_volume(n, q, 2) - sphere_volume(w - j, q, 2))
        for j in range(w - 4)
    )
    tail = Fraction(_sgn(w - 5) * (n - 4) * (q - 1), 2) * (
        binom(w, 4) * (2 + (q - 1) * (n + 3)) - binom(w, 3) * (n - 3)
    )
    return _exact_int(binom(n, w) * (q - 1) ** w - binom(n, w) * (s - tail))


def _w3_q_plus_1(params: CodeParams, w: int) -> int:
    q = params.q
    s = sum(
        _sgn(j)
        * binom(w, j)
        * (q ** (w - 4 - j) * sphere_volume(q + 1, q, 2) - sphere_volume(w - j, q, 2))
        for j in range(w - 4)
    )
    tail = Fraction(_sgn(w - 5) * (q - 3) * (q - 1), 2) * (
        binom(w, 4) * (q * q + 3 * q - 2) - binom(w, 3) * (q - 2)
    )
    return _exact_int(binom(q + 1, w) * (q - 1) ** w - binom(q + 1, w) * (s - tail))


def _w3_q_plus_1_compact(params: CodeParams, w: int) -> int:
    q = params.q
    inner = (
        sphere_volume(q + 1, q, 2) * mds_weight(params, w)
        - (q * q - 1) * phi(params, w, 1)
        - binom(q + 1, 2) * (q - 1) ** 2 * phi(params, w, 2)
        + delta(params, w)
    )
    return binom(q + 1, w) * (q - 1) ** w - inner


_W3_FORMS = {
    "general": _w3_general,
    "general_expanded": _w3_general_expanded,
    "q_plus_1": _w3_q_plus_1,
    "q_plus_1_compact": _w3_q_plus_1_compact,
}


def sigma_w3(
    params: CodeParams, w: int, variant: str = "general", *, covering_radius: int
) -> int:
    """Weight-w vector count over all cosets of weight exactly 3.

    Only meaningful for d = 5 codes (k = n - 4) whose covering radius is 3,
    in which case the weight-3 cosets are exactly the cosets of weight > 2.
    The covering radius is not derivable from (n, k, q) alone: pass the
    value measured by `oracle.census`, or 3 to assert it deliberately.
    Valid for 3 <= w <= n.  Variants "general" and "general_expanded" hold
    for every such code; "q_plus_1" and "q_plus_1_compact" need n = q + 1.
    """
    n, q, d = params.n, params.q, params.d
    if d != 5:
        raise ValueError("weight-3 coset spectra are only available for d = 5 (k = n - 4)")
    if covering_radius != 3:
        raise ValueError(
            f"weight-3 coset spectra need covering radius 3, got {covering_radius}"
        )
    if not 3 <= w <= n:
        raise ValueError(f"w must be in [3, {n}], got {w}")
    if variant in ("q_plus_1", "q_plus_1_compact") and n != q + 1:
        raise ValueError(f"variant {variant!r} needs n = q + 1")
    try:
        form = _W3_FORMS[variant]
    except KeyError:
        raise ValueError(f"unknown sigma_w3 variant {variant!r}") from None
    return form(params, w)


# -- assembled spectra --------------------------------------------------------


def full_spectrum(
    params: CodeParams, coset_weight: int, *, covering_radius: int | None = None
) -> Spectrum:
    """Length n+1 weight spectrum summed over all cosets of the given weight.

    Entries below the closed-form ranges are forced: a weight-W coset with
    W <= t has its unique minimum-weight vector counted at w = W, and no
    vectors of any other weight below the formula range.  coset_weight = 3
    additionally requires covering_radius == 3 (see sigma_w3).
    """
    n, q, d = params.n, params.q, params.d
    if coset_weight == 0:
        return [mds_weight(params, w) for w in range(n + 1)]
    if coset_weight == 1:
        if d < 3:
            raise ValueError("weight-1 coset spectra need minimum distance >= 3")
        spec = [0] * (n + 1)
        spec[1] = n * (q - 1)
        for w in range(d - 1, n + 1):
            spec[w] = sigma_w1(params, w)
        return spec
    if coset_weight == 2:
        if d < 5:
            raise ValueError("weight-2 coset spectra need minimum distance >= 5")
        spec = [0] * (n + 1)
        spec[2] = binom(n, 2) * (q - 1) ** 2
        for w in range(d - 2, n + 1):
            spec[w] = sigma_w2(params, w)
        return spec
    if coset_weight == 3:
        if d != 5:
            raise ValueError("weight-3 coset spectra are only available for d = 5 (k = n - 4)")
        if covering_radius != 3:
            raise ValueError(
                "weight-3 coset spectra need covering_radius=3 (measure with the census "
                "or assert it explicitly)"
            )
        spec = [0] * (n + 1)
        for w in range(3, n + 1):
            spec[w] = sigma_w3(params, w, covering_radius=3)
        return spec
    raise ValueError(f"coset_weight must be 0, 1, 2 or 3, got {coset_weight}")


def variants_for(op: str, params: CodeParams) -> list[int | str]:
    """Applicable `variant` values of a spectrum function for given params.

    Empty when the operation itself does not apply (wrong d).  Ops:
    "sigma_le1", "sigma_w1", "sigma_le2", "sigma_w2", "sigma_w3".
    """
    n, q, d = params.n, params.q, params.d
    full_length = n == q + 1
    if op == "sigma_le1":
        return ["lemma", "corollary"] if d >= 3 else []
    if op == "sigma_w1":
        if d < 3:
            return []
        out: list[int | str] = [1, 2, 3, 4, 5]
        if full_length:
            out.append("q_plus_1")
            if d == 5:
                out.append("q_plus_1_d5")
        return out
    if op == "sigma_le2":
        return ["lemma"] if d >= 5 else []
    if op == "sigma_w2":
        if d < 5:
            return []
        out = [1, 2, 3, 4, 5]
        if full_length and d == 5:
            out.append("q_plus_1_d5")
        return out
    if op == "sigma_w3":
        if d != 5:
            return []
        out = ["general", "general_expanded"]
        if full_length:
            out += ["q_plus_1", "q_plus_1_compact"]
        return out
    raise ValueError(f"unknown operation {op!r}")
