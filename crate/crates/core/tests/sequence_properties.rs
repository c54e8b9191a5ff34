use hillgaps_core::potential::Potential;
use hillgaps_core::sequence_spaces::*;
use hillgaps_core::Complex64;
use proptest::prelude::*;

fn complex() -> impl Strategy<Value = Complex64> {
    (-1.0..1.0f64, -1.0..1.0f64).prop_map(|(re, im)| Complex64::new(re, im))
}

fn sequence(max_bound: usize) -> impl Strategy<Value = TwoSidedSeq> {
    (0..=max_bound).prop_flat_map(|k| {
        proptest::collection::vec(complex(), 2 * k + 1)
            .prop_map(move |v| TwoSidedSeq::from_fn(k, |j| v[(j + k as i64) as usize]))
    })
}

fn weight() -> impl Strategy<Value = Weight> {
    prop_oneof![
        (0.0..3.0f64).prop_map(|s| Weight::power(s).unwrap()),
        (0.0..2.0f64, proptest::collection::vec(-2.0..2.0f64, 1..3))
            .prop_map(|(s, r)| Weight::log_power(s, r).unwrap()),
        (0.0..2.0f64).prop_map(|s| Weight::parity_log(s).unwrap()),
        proptest::collection::vec(0.1..10.0f64, 1..20).prop_map(|v| Weight::table(v).unwrap()),
    ]
}

/// Convolution by the textbook double loop over both supports.
fn brute_convolution(a: &TwoSidedSeq, b: &TwoSidedSeq, k: i64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for (i, x) in a.iter() {
        for (j, y) in b.iter() {
            if i + j == k {
                acc += x * y;
            }
        }
    }
    acc
}

proptest! {
    #[test]
    fn weight_is_one_at_zero_and_even(w in weight(), k in 1..10_000i64) {
        prop_assert_eq!(w.at(0), 1.0);
        prop_assert_eq!(w.at(k), w.at(-k));
        prop_assert!(w.at(k) > 0.0 && w.at(k).is_finite());
    }

    #[test]
    fn norm_axioms(a in sequence(12), b in sequence(12), w in weight(), z in complex()) {
        let na = weighted_norm(&a, &w);
        prop_assert!(na >= 0.0);
        let scaled = weighted_norm(&a.scale(z), &w);
        prop_assert!((scaled - z.norm() * na).abs() <= 1e-12 * (1.0 + z.norm() * na));
        let sum = weighted_norm(&a.add(&b), &w);
        prop_assert!(sum <= na + weighted_norm(&b, &w) + 1e-12);
        prop_assert_eq!(weighted_norm(&a.scale(Complex64::new(0.0, 0.0)), &w), 0.0);
    }

    #[test]
    fn convolution_commutes_exactly(a in sequence(10), b in sequence(10)) {
        let ab = convolve(&a, &b);
        let ba = convolve(&b, &a);
        prop_assert_eq!(ab.bound(), ba.bound());
        for (k, v) in ab.iter() {
            prop_assert_eq!(v, ba.get(k));
        }
    }

    #[test]
    fn convolution_matches_double_sum(a in sequence(8), b in sequence(8)) {
        let ab = convolve(&a, &b);
        for k in -18..=18 {
            let d = brute_convolution(&a, &b, k);
            prop_assert!((ab.get(k) - d).norm() < 1e-13, "k={}", k);
        }
    }

    #[test]
    fn delta_zero_is_identity(a in sequence(10)) {
        let c = convolve(&TwoSidedSeq::delta(0), &a);
        for k in -12..=12 {
            prop_assert_eq!(c.get(k), a.get(k));
        }
    }

    #[test]
    fn delta_shifts(a in sequence(6), m in -5..5i64) {
        let c = convolve(&TwoSidedSeq::delta(m), &a);
        for k in -12..=12 {
            prop_assert!((c.get(k) - a.get(k - m)).norm() < 1e-15);
        }
    }

    #[test]
    fn convolution_associative(a in sequence(5), b in sequence(5), c in sequence(5)) {
        let left = convolve(&convolve(&a, &b), &c);
        let right = convolve(&a, &convolve(&b, &c));
        for k in -15..=15 {
            prop_assert!((left.get(k) - right.get(k)).norm() < 1e-12);
        }
    }

    #[test]
    fn bounded_regime_pairs_stay_below_bound(a in sequence(16), b in sequence(16)) {
        prop_assume!(weighted_norm(&a, &Weight::power(1.0).unwrap()) > 0.0);
        prop_assume!(weighted_norm(&b, &Weight::power(1.0).unwrap()) > 0.0);
        let ratio = convolution_ratio(&a, &b, 1.0, 1.0, 1.0).unwrap();
        prop_assert!(ratio <= finite_support_bound(1.0, 1.0, 1.0, 16) * (1.0 + 1e-12));
    }

    #[test]
    fn embedding_constant_bounds_norms(a in sequence(30), w1 in weight(), w2 in weight()) {
        let rep = compare_weights(&w1, &w2, 30).unwrap();
        let constant = rep.sup_ratio.max(1.0);
        prop_assert!(weighted_norm(&a, &w2) <= constant * weighted_norm(&a, &w1) * (1.0 + 1e-12) + 1e-300);
    }

    #[test]
    fn hormander_norm_is_coefficient_norm(
        mean in -3.0..3.0f64,
        coeffs in proptest::collection::vec(complex(), 0..20),
        w in weight(),
    ) {
        let q = Potential::from_dense(mean, coeffs);
        prop_assert_eq!(q.hormander_norm(&w), weighted_norm(&q.coefficient_sequence(), &w));
    }
}

#[test]
fn embedding_constant_is_brute_force_max() {
    let w1 = Weight::parity_log(1.0).unwrap();
    let w2 = Weight::power(1.0).unwrap();
    let rep = compare_weights(&w1, &w2, 500).unwrap();
    let brute = (1..=500)
        .map(|k| w2.at(k) / w1.at(k))
        .fold(f64::MIN, f64::max);
    assert_eq!(rep.sup_ratio, brute);
    // odd k: (1+2k)/k is largest at k = 1
    assert_eq!(rep.at_k, 1);
    assert_eq!(rep.sup_ratio, 3.0);
}

#[test]
fn power_embedding_direction() {
    for s in [0.0, 0.5, 2.0] {
        let rep = compare_weights(
            &Weight::power(1.0 + s).unwrap(),
            &Weight::power(s).unwrap(),
            1000,
        )
        .unwrap();
        assert!(rep.sup_ratio <= 1.0);
    }
    let w = Weight::log_power(1.0, vec![1.0, -0.5]).unwrap();
    assert_eq!(compare_weights(&w, &w, 100).unwrap().sup_ratio, 1.0);
}

#[test]
fn or_class_examples() {
    let grid = OrGrid::default();
    let power = check_or_class(&Weight::power(2.0).unwrap(), 2.0, 16.0, 1000.0, grid).unwrap();
    assert!(power.in_class);
    assert!(power.max_ratio <= 4.0 * (1.0 + 1e-12));

    let exp = Weight::table((1..=100).map(|k| (k as f64).exp()).collect()).unwrap();
    let rep = check_or_class(&exp, 2.0, 1e6, 100.0, grid).unwrap();
    assert!(!rep.in_class);

    // ω(2·999)/ω(999) = 2·ln(1999) ≈ 15.2 for the parity weight, beyond c = 8
    let parity = check_or_class(&Weight::parity_log(1.0).unwrap(), 2.0, 8.0, 1000.0, grid).unwrap();
    let expect = 1998.0 * 1999f64.ln() / 999.0;
    assert!(
        (parity.max_ratio - expect).abs() < 1e-9 * expect,
        "{parity:?}"
    );
    assert!(!parity.in_class);
}
