"""Asymptotic curves: pinned intercepts, the numeric-vs-closed-form
agreement of the composite bound, threshold behavior, and the orderings the
finite-length comparisons predict."""

import io

import pytest

from lrckit.asymptotic import (
    binary_entropy,
    curve,
    default_grid,
    emit_curves,
    improvement_threshold,
    rate_abhmt,
    rate_cm_rdelta,
    rate_gopalan,
    rate_local_griesmer,
    rate_prakash,
    rate_reschain,
    rate_singleton,
    reschain_plotkin_closed,
    ropt_mrrw,
    ropt_plotkin,
)
from lrckit.bounds import local_dim_bound, local_dim_bound_logconvex


def test_binary_entropy_endpoints():
    assert binary_entropy(0.0) == 0.0
    assert binary_entropy(1.0) == 0.0
    assert binary_entropy(0.5) == 1.0
    with pytest.raises(ValueError):
        binary_entropy(1.5)


def test_ropt_plotkin():
    assert ropt_plotkin(0.0, 2) == 1.0
    assert ropt_plotkin(0.5, 2) == 0.0
    assert ropt_plotkin(2 / 3, 3) == 0.0
    assert ropt_plotkin(0.25, 2) == pytest.approx(0.5)


def test_ropt_mrrw_endpoints():
    assert ropt_mrrw(0.0) == 1.0
    assert ropt_mrrw(0.5) == 0.0
    assert ropt_mrrw(0.75) == 0.0
    assert 0.0 < ropt_mrrw(0.1) < ropt_plotkin(0.1, 2)


def test_mrrw_requires_binary():
    with pytest.raises(ValueError) as exc:
        rate_reschain(0.1, 4, 3, 3, "mrrw")
    assert "plotkin" in str(exc.value)


def test_line_intercepts():
    assert rate_singleton(0.0) == 1.0
    assert rate_singleton(1.0) == 0.0
    assert rate_local_griesmer(0.0, 12, 9, 2) == pytest.approx(0.25)
    assert rate_local_griesmer(0.0, 4, 3, 2) == pytest.approx(0.5)
    assert rate_abhmt(0.0, 6, 3, 2, "hamming") == pytest.approx(0.5)
    assert rate_abhmt(1.0, 6, 3, 2, "hamming") == 0.0
    assert rate_prakash(0.0, 4, 3) == pytest.approx(4 / 6)


def test_gopalan_equals_prakash_at_delta_2():
    for dn in (0.0, 0.2, 0.7):
        assert rate_gopalan(dn, 5) == pytest.approx(rate_prakash(dn, 5, 2))


def test_abhmt_best_equals_local_griesmer_when_balanced():
    # locality (4, 3) over GF(2): kappa_A = kappa_B = 3 and G(3,3) = 6 = r + delta - 1
    for dn in (0.0, 0.3, 0.9):
        assert rate_abhmt(dn, 4, 3, 2, "best") == pytest.approx(
            rate_local_griesmer(dn, 4, 3, 2)
        )


def test_reschain_at_zero_distance():
    assert rate_reschain(0.0, 4, 3, 2, "plotkin") <= 1.0
    # the minimization reaches kappa_B / G(kappa_B, delta) at delta_n = 0
    assert rate_reschain(0.0, 4, 3, 2, "plotkin") == pytest.approx(0.5, abs=1e-6)


def test_reschain_plotkin_matches_closed_form():
    kappa_b = local_dim_bound(4, 3, 2)
    for dn in default_grid(512):
        numeric = rate_reschain(float(dn), 4, 3, 2, "plotkin")
        closed = reschain_plotkin_closed(float(dn), kappa_b, 3, 2)
        assert abs(numeric - closed) <= 1e-6


def test_reschain_mrrw_zero_at_half():
    assert rate_reschain(0.5, 4, 3, 2, "mrrw") == 0.0


def test_improvement_threshold_values():
    dt = improvement_threshold(6, 3, 2, "hamming")
    assert dt == pytest.approx(1 / 9, abs=1e-12)
    assert improvement_threshold(4, 3, 2, "best") is None  # G(3,3) = 6 = r + delta - 1


def test_threshold_is_the_crossing_point():
    dt = improvement_threshold(6, 3, 2, "hamming")
    kappa_a = local_dim_bound_logconvex(6, 3, 2, "hamming")
    lhs = reschain_plotkin_closed(dt, kappa_a, 3, 2, clamp=False)
    rhs = rate_abhmt(dt, 6, 3, 2, "hamming")
    assert abs(lhs - rhs) <= 1e-9


def test_strict_improvement_past_threshold():
    """Past the crossing point the Plotkin-composed line (unclamped) sits
    strictly below the log-convexity line, all the way to delta_n = 1."""
    dt = improvement_threshold(6, 3, 2, "hamming")
    kappa_a = local_dim_bound_logconvex(6, 3, 2, "hamming")
    for dn in default_grid(512):
        if dn > dt:
            line = reschain_plotkin_closed(float(dn), kappa_a, 3, 2, clamp=False)
            assert line < rate_abhmt(float(dn), 6, 3, 2, "hamming")


def test_ordering_hamming_blocks_beat_griesmer():
    # locality (6, 3): G(4, 3) = 7 < 8, so the log-convexity line is stronger
    for dn in default_grid(256):
        assert rate_abhmt(float(dn), 6, 3, 2, "hamming") <= rate_local_griesmer(
            float(dn), 6, 3, 2
        ) + 1e-15


def test_ordering_griesmer_beats_hamming_blocks():
    # locality (12, 9): kappa_B = 5 with G = 20 beats kappa_A = 7 over 20
    for dn in default_grid(256):
        assert rate_local_griesmer(float(dn), 12, 9, 2) <= rate_abhmt(
            float(dn), 12, 9, 2, "best"
        ) + 1e-15


def test_reschain_below_local_griesmer_for_plotkin():
    for dn in default_grid(128):
        assert rate_reschain(float(dn), 4, 3, 2, "plotkin") <= rate_local_griesmer(
            float(dn), 4, 3, 2
        ) + 1e-9


@pytest.mark.parametrize("name,kwargs", [
    ("singleton", {}),
    ("prakash", {}),
    ("abhmt", {}),
    ("local_griesmer", {}),
    ("reschain", {}),
    ("cm_rdelta", {}),
    ("mrrw", {}),
])
def test_curves_clamped_and_nonincreasing(name, kwargs):
    c = curve(name, default_grid(128), r=4, delta=3, q=2, ropt_choice="mrrw")
    rates = c.rates
    assert all(0.0 <= v <= 1.0 for v in rates)
    for a, b in zip(rates, rates[1:]):
        assert b <= a + 1e-9


def test_cm_rdelta_curve_looser_than_reschain():
    # block overhead (r + delta - 1)/r is below G(kappa_B, delta)/kappa_B
    # only when repair sets can be MDS; over GF(2) at delta = 3 the chain
    # bound must win everywhere
    for dn in default_grid(64):
        assert rate_reschain(float(dn), 4, 3, 2, "mrrw") <= rate_cm_rdelta(
            float(dn), 4, 3, 2, "mrrw"
        ) + 1e-9


def test_emit_curves_csv_format():
    buf = io.StringIO()
    emit_curves(["prakash", "local_griesmer"], default_grid(8), 4, 3, 2, buf)
    lines = buf.getvalue().splitlines()
    comments = [ln for ln in lines if ln.startswith("#")]
    assert any("o(1)" in ln for ln in comments)
    header = next(ln for ln in lines if not ln.startswith("#"))
    assert header == "delta_n,prakash,local_griesmer"
    rows = [ln for ln in lines if not ln.startswith("#")][1:]
    assert len(rows) == 8
    first = rows[0].split(",")
    assert float(first[0]) == 0.0
    assert float(first[1]) == pytest.approx(4 / 6, abs=1e-9)


def test_emit_curves_to_file(tmp_path):
    out = tmp_path / "curves.csv"
    emit_curves(["singleton"], default_grid(4), 4, 3, 2, out)
    assert out.read_text().count("\n") >= 5


def test_unknown_curve_rejected():
    with pytest.raises(ValueError):
        curve("nope", default_grid(4), 4, 3, 2)
