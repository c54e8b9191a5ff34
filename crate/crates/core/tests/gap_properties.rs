use std::f64::consts::PI;

use hillgaps_core::gap_analysis::*;
use hillgaps_core::hill_spectrum::*;
use hillgaps_core::potential::{Potential, TestPotential};
use hillgaps_core::sequence_spaces::Weight;
use hillgaps_core::Complex64;
use proptest::prelude::*;

fn mean_free(max_cutoff: usize) -> impl Strategy<Value = Potential> {
    proptest::collection::vec((-1.0..1.0f64, -1.0..1.0f64), 1..=max_cutoff).prop_map(|c| {
        Potential::from_dense(
            0.0,
            c.into_iter().map(|(a, b)| Complex64::new(a, b)).collect(),
        )
    })
}

/// `ρ(n)` by an unrestricted double loop over a range wider than the support.
fn rho_oracle(q: &Potential, n: i64) -> Complex64 {
    let k = q.cutoff() as i64;
    let mut sum = Complex64::new(0.0, 0.0);
    for j in -3 * k - 3..=3 * k + 3 {
        if j != n && j != -n {
            sum += q.coeff(n - j) * q.coeff(n + j) / ((n - j) * (n + j)) as f64;
        }
    }
    sum / (PI * PI)
}

fn galerkin(q: &Potential, n_max: usize) -> BandEdges {
    band_edges_galerkin(q, n_max, &GalerkinConfig::default()).unwrap()
}

proptest! {
    #[test]
    fn rho_routes_agree(q in mean_free(16), n in 1..24i64) {
        let direct = rho(&q, n).unwrap();
        prop_assert!((direct - rho_oracle(&q, n)).norm() < 1e-14);
        prop_assert!((direct - rho_via_convolution(&q, n).unwrap()).norm() < 1e-14);
        if n as usize > q.cutoff() {
            prop_assert_eq!(direct, Complex64::new(0.0, 0.0));
        }
    }

    #[test]
    fn paired_residual_matches_corrected(q in mean_free(8), n in 1..10usize) {
        // the paired residual reduces to |resid_corrected| for real potentials
        let edges = edges_with_gap(n, 0.1);
        let rep = residuals(&q, &edges);
        prop_assert!(rep.max_pairing_deviation() < 1e-12);
    }
}

fn edges_with_gap(n_max: usize, gap: f64) -> BandEdges {
    let pairs = (1..=n_max)
        .map(|n| {
            let mid = (n as f64 * PI).powi(2);
            EdgePair {
                n,
                parity: Parity::of_gap(n),
                minus: mid,
                plus: mid + gap / n as f64,
            }
        })
        .collect();
    BandEdges {
        lambda0: 0.0,
        pairs,
        method: Method::Galerkin { n_trunc: 64 },
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    #[test]
    fn reports_satisfy_exact_consequences(q in mean_free(12), mean in -1.0..1.0f64) {
        let q = q.shifted(mean);
        let edges = galerkin(&q, 14);
        let rep = residuals(&q, &edges);
        prop_assert!(rep.residuals_consistent(&q));
        for (e, p) in rep.entries.iter().zip(&edges.pairs) {
            prop_assert!(e.gamma >= 0.0);
            if !e.clamped {
                prop_assert_eq!(e.gamma, p.plus - p.minus);
            }
        }
        for w in [Weight::power(0.0).unwrap(), Weight::power(1.0).unwrap(), Weight::parity_log(1.0).unwrap()] {
            prop_assert!(rep.triangle_check(&w, 1..=14).holds);
            prop_assert!(rep.triangle_check(&w, 5..=14).holds);
        }
    }
}

#[test]
fn zero_and_constant_potentials_have_no_gaps() {
    for q in [Potential::zero(), Potential::constant(-2.0)] {
        let rep = residuals(&q, &galerkin(&q, 10));
        for e in &rep.entries {
            assert_eq!(
                (e.gamma, e.two_qhat, e.resid_plain, e.resid_corrected),
                (0.0, 0.0, 0.0, 0.0)
            );
            assert_eq!(e.rho, Complex64::new(0.0, 0.0));
        }
    }
}

/// Series for Mathieu characteristic values, `Q = c/π²`:
/// `a₁ - b₁ = 2Q - Q³/32`, `a₂ - b₂ = Q²/2 - Q⁴/18`.
#[test]
fn mathieu_gaps_match_series() {
    let c = 0.1;
    let q = TestPotential::Mathieu { c }.sample().unwrap();
    let qq = c / (PI * PI);
    let g = gaps(&band_edges_discriminant(&q, 3, &DiscriminantConfig::default()).unwrap()).values;
    assert!((g[0] - 0.2).abs() / 0.2 < 0.05);
    assert!((g[0] - PI * PI * (2.0 * qq - qq.powi(3) / 32.0)).abs() < 1e-12);
    assert!((g[1] - PI * PI * (qq * qq / 2.0 - qq.powi(4) / 18.0)).abs() < 1e-12);
    assert!(g[1] > 0.0 && g[1] < 1e-2);
}

#[test]
fn mathieu_residual_columns() {
    let q = TestPotential::Mathieu { c: 0.1 }.sample().unwrap();
    let rep = residuals(&q, &galerkin(&q, 4));
    let first = rep.entries[0];
    assert_eq!(first.resid_plain, first.gamma - 0.2);
    assert!((first.rho - Complex64::new(0.01 / (PI * PI), 0.0)).norm() < 1e-14);
    assert!(first.resid_corrected.abs() <= first.resid_plain.abs() + 2.0 * first.rho.norm());
}

#[test]
fn power_decay_residuals_beat_leading_term() {
    let q = TestPotential::PowerDecay { p: 2.0, cutoff: 32 }
        .sample()
        .unwrap();
    let mut rep = residuals(&q, &galerkin(&q, 28));
    for e in &rep.entries[7..28] {
        assert!(e.resid_plain.abs() < 0.5 * e.two_qhat, "n={}", e.n);
    }
    let table = rep
        .add_weight_table(&Weight::power(2.0).unwrap(), 10..=28)
        .unwrap()
        .clone();
    assert!(table
        .rows
        .windows(2)
        .all(|w| w[1].increment < w[0].increment));
    let fit = rep.fit_decay(8, 28).unwrap();
    assert!(fit.slope <= -2.0, "{fit:?}");
}

#[test]
fn plain_residual_slopes_follow_smoothness() {
    for (p, cutoff) in [(2.0, 32usize), (1.5, 24), (3.0, 20)] {
        let q = TestPotential::PowerDecay { p, cutoff }.sample().unwrap();
        let rep = residuals(&q, &galerkin(&q, cutoff - 4));
        let s_eff = p - 0.5 - 0.05;
        let fit = decay_slope(&rep.resid_plain(), 8, cutoff - 4).unwrap();
        assert!(fit.slope <= -(1.0 + s_eff) + 0.3, "p={p}: {fit:?}");
    }
}

#[test]
fn mathieu_plain_residuals_decay_fast() {
    let q = TestPotential::Mathieu { c: 0.5 }.sample().unwrap();
    let rep = residuals(
        &q,
        &band_edges_discriminant(&q, 20, &DiscriminantConfig::default()).unwrap(),
    );
    let fit = decay_slope(&rep.resid_plain(), 4, 20).unwrap();
    assert!(fit.slope <= -2.0, "{fit:?}");
}

#[test]
fn membership_ratio_band() {
    let q = TestPotential::PowerDecay { p: 2.0, cutoff: 32 }
        .sample()
        .unwrap();
    let edges = galerkin(&q, 28);
    let rep =
        verify_membership_consistency(&q, &Weight::parity_log(1.0).unwrap(), 1.0, &edges, 8..=28)
            .unwrap();
    let ratio = rep.ratio.unwrap();
    assert!((1.0..=3.0).contains(&ratio), "{ratio}");
    assert!(rep.triangle.holds);
    assert!(rep.sandwich.pass);

    let zero = verify_membership_consistency(
        &Potential::zero(),
        &Weight::power(1.0).unwrap(),
        1.0,
        &galerkin(&Potential::zero(), 8),
        1..=8,
    )
    .unwrap();
    let last = zero.rows.last().unwrap();
    assert_eq!(
        (last.gamma_norm, last.qhat_norm, zero.ratio),
        (0.0, 0.0, None)
    );
}

#[test]
fn sobolev_sums() {
    let q = TestPotential::Mathieu { c: 0.5 }.sample().unwrap();
    let rep = verify_marchenko_ostrovskii(&q, 2, &galerkin(&q, 20), 1..=20).unwrap();
    assert!(rep.gap_table.plateau);
    let q = TestPotential::PowerDecay { p: 1.2, cutoff: 48 }
        .sample()
        .unwrap();
    let rep = verify_marchenko_ostrovskii(&q, 0, &galerkin(&q, 40), 1..=40).unwrap();
    let last = rep.rows.last().unwrap();
    let ratio = last.gap_sum / last.potential_sum;
    assert!((0.1..10.0).contains(&ratio), "{ratio}");

    let zero = verify_marchenko_ostrovskii(
        &Potential::zero(),
        1,
        &galerkin(&Potential::zero(), 5),
        1..=5,
    )
    .unwrap();
    assert!(zero
        .rows
        .iter()
        .all(|r| r.gap_sum == 0.0 && r.potential_sum == 0.0));
}

#[test]
fn range_errors() {
    let q = TestPotential::Mathieu { c: 0.5 }.sample().unwrap();
    let edges = galerkin(&q, 6);
    assert!(verify_marchenko_ostrovskii(&q, 1, &edges, 1..=7).is_err());
    assert!(
        verify_membership_consistency(&q, &Weight::power(1.0).unwrap(), 1.0, &edges, 0..=3)
            .is_err()
    );
}
