"""End-to-end smoke test for the armsrace Python module.

Touches every bound name once and pins a handful of closed-form values;
the heavy numerical validation lives in the C++ suites.
"""

import math

import pytest

import armsrace as ar


def base_params():
    return ar.ModelParams(
        q0=0.3,
        h=ar.AmplificationSpec.logarithmic(2.0),
        delta=ar.ErosionSpec.hyperbolic(0.8, 1.5),
        s=1.0,
        V=12.0,
        B=6.0,
        c_d=1.0,
        c_a=1.0,
        F=0.25,
    )


def test_families_and_validation():
    h = ar.AmplificationSpec.logarithmic(2.0)
    assert h.alpha == 2.0
    assert ar.eval_h(h, 0.0) == 1.0
    assert ar.eval_h(h, math.e - 1.0) == pytest.approx(3.0, rel=1e-12)

    sat = ar.AmplificationSpec.saturating(2.0, 0.5)
    assert ar.eval_h(sat, 0.0) == 1.0

    hyp = ar.ErosionSpec.hyperbolic(0.8, 1.5)
    assert hyp.delta0 == 0.8 and hyp.beta == 1.5
    assert hyp.uniqueness_guarantee
    assert ar.eval_delta(hyp, 0.0) == 0.8
    assert ar.eval_delta(hyp, 2.0) == pytest.approx(0.2, rel=1e-12)

    assert ar.ErosionSpec.power_law(0.8, 1.5, 0.7).uniqueness_guarantee
    assert not ar.ErosionSpec.power_law(0.8, 1.5, 1.5, True).uniqueness_guarantee
    assert not ar.ErosionSpec.exponential(0.8, 1.5).uniqueness_guarantee

    with pytest.raises(ValueError):
        ar.ErosionSpec.hyperbolic(0.0, 1.5)
    with pytest.raises(ValueError):
        ar.ErosionSpec.power_law(0.8, 1.5, 1.5)  # k > 1 needs the opt-in flag
    with pytest.raises(ValueError):
        ar.ModelParams(
            q0=1.5,
            h=ar.AmplificationSpec.logarithmic(2.0),
            delta=hyp,
            s=1.0,
            V=12.0,
            B=6.0,
            c_d=1.0,
            c_a=1.0,
        )


def test_contest_and_payoffs():
    p = base_params()
    assert p.q0 == 0.3 and p.V == 12.0 and p.F == 0.25

    # The status quo is exact, not approximate.
    assert ar.breach_probability(p, 0.0, 0.0, 1.0) == 0.3

    q = ar.breach_probability(p, 1.0, 2.0, 1.0)
    assert 0.0 < q < 1.0
    assert ar.payoff_defender(p, 1.0, 2.0, 1.0) == pytest.approx(
        -12.0 * q - 2.0, rel=1e-12
    )
    assert ar.payoff_attacker(p, 1.0, 2.0, 1.0) == pytest.approx(
        6.0 * q - 1.0 - 0.25, rel=1e-12
    )

    lev = ar.adversarial_leverage(p, 2.0)
    h = ar.AmplificationSpec.logarithmic(2.0)
    delta = ar.ErosionSpec.hyperbolic(0.8, 1.5)
    assert lev == pytest.approx(
        ar.eval_h(h, 2.0) / ar.eval_delta(delta, 2.0), rel=1e-12
    )


def test_ratio_reports():
    p = base_params()
    assert ar.r0_single(p) == pytest.approx(2.0 / 0.8, rel=1e-15)

    rep = ar.r_general(p, 1.0, 2.0, 1.0)
    assert rep.r_general == pytest.approx(
        rep.amplification_component + rep.erosion_premium, rel=1e-12
    )
    assert rep.r0 == pytest.approx(2.5, rel=1e-15)

    solo = ar.SurfaceConfig(N=1, rho=0.7, gamma=0.3, s=1.0)
    assert solo.N == 1
    assert ar.effective_signal(solo) == 1.0
    assert ar.r0_multi(p, solo) == ar.r0_single(p)


def test_equilibrium_and_worked_point():
    worked = ar.ModelParams(
        q0=0.5,
        h=ar.AmplificationSpec.logarithmic(1.0),
        delta=ar.ErosionSpec.hyperbolic(1.0, 1.0),
        s=1.0,
        V=10.0,
        B=5.0,
        c_d=1.0,
        c_a=1.0,
    )
    d_star = ar.defender_best_response(worked, 0.0, 1.0)
    assert d_star == pytest.approx(2.0 * math.sqrt(2.5) - 2.0, rel=1e-12)
    assert ar.breach_probability(worked, 0.0, d_star, 1.0) == pytest.approx(
        math.sqrt(0.1), rel=1e-12
    )

    p = base_params()
    eq = ar.solve_equilibrium(p, 1.0)
    assert eq.interior_defender and eq.interior_attacker
    assert eq.uniqueness_certified
    assert 0.0 < eq.q_star < 1.0
    assert eq.r_at_eq == pytest.approx(12.0 * 1.0 / (6.0 * 1.0), rel=1e-9)
    assert isinstance(eq.used_fallback, bool)
    assert ar.defender_best_response(p, eq.a_star, 1.0) == pytest.approx(
        eq.d_star, abs=1e-7
    )
    assert ar.attacker_best_response(p, eq.d_star, 1.0) == pytest.approx(
        eq.a_star, abs=1e-6
    )


def test_dynamics():
    p = base_params()
    eq = ar.solve_equilibrium(p, 1.0)
    tr = ar.simulate_discrete(p, 1.0, d0=0.5, a0=0.5, eta=0.15)
    assert tr.converged and not tr.divergence_detected
    assert tr.sup_norm_residual < 1e-6
    assert len(tr.times) == len(tr.d_path) == len(tr.a_path)
    assert tr.d_path[-1] == pytest.approx(eq.d_star, abs=1e-6)
    assert tr.a_path[-1] == pytest.approx(eq.a_star, abs=1e-6)


def test_multisurface():
    p = base_params()
    cfg = ar.SurfaceConfig(N=7, rho=0.6, gamma=0.2, s=1.0)
    st = ar.multi_surface_state(p, cfg, a=0.8, d=1.2)
    # Identical surfaces share one per-surface breach probability.
    q = st.q_per_surface
    assert q == ar.breach_probability(p, 0.8, 1.2, ar.effective_signal(cfg))
    assert st.lambda_rate == pytest.approx(-7.0 * math.log1p(-q), rel=1e-12)
    assert st.p_overall == pytest.approx(1.0 - (1.0 - q) ** 7, rel=1e-12)
    assert q <= st.p_overall <= 1.0

    assert ar.asymptotic_breach(p, 0.0) == 0.3


SCENARIO = """model.q0 = 0.3
model.alpha = 2.0
model.delta0 = 0.8
model.beta = 1.5
model.s = 1.0
model.V = 12.0
model.B = 6.0
model.c_d = 1.0
model.c_a = 1.0
seed = 17
"""


def test_scenario_and_subcommands():
    sc = ar.parse_scenario(SCENARIO)
    assert sc["seed"] == 17
    assert sc["has_model"] and not sc["has_surfaces"]
    assert sc["hash"] != 0

    tables = ar.run_subcommand("ratio", SCENARIO)
    assert tables
    for t in tables:
        assert t["columns"] and t["rows"]
        assert t["metadata"]["subcommand"] == "ratio"
        assert t["metadata"]["table"] == t["name"]
        assert all(len(row) == len(t["columns"]) for row in t["rows"])

    with pytest.raises(ValueError):
        ar.run_subcommand("no-such-subcommand", SCENARIO)
    with pytest.raises(ValueError):
        ar.run_subcommand("deterrence", SCENARIO)  # missing scenario section
