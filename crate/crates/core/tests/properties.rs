mod common;

use common::{oracle_p_success_exact, rational, within_3_sigma};
use num_complex::Complex64;
use proptest::prelude::*;
use qpke_core::adversary::{AttackMode, AttackResources, CompoundAttack};
use qpke_core::analysis::{
    p_success_closed, p_success_conditional, s_min_simple, s_min_tight, SecurityThreshold,
};
use qpke_core::experiment::{compound_trial, run_trials};
use qpke_core::keys::{KeyFamily, KeyFamilySpec, PrivateKey};
use qpke_core::linalg::{permutations, permute_registers, trace_norm, Operator, StateVector, SymmetricProjector, TensorLayout};
use qpke_core::rng::{haar_state, trial_rng};
use qpke_core::scheme::{sample_codeword, Bit, SchemeSpec};
use qpke_core::symtest::q_closed_form;

fn arb_layout() -> impl Strategy<Value = (usize, usize)> {
    prop_oneof![(2usize..=5).prop_map(|n| (n, 2)), (2usize..=4).prop_map(|n| (n, 3))]
}

fn random_vector(dim: usize, seed: u64) -> StateVector {
    haar_state(dim, &mut trial_rng(seed, 0))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn projector_is_idempotent((n, d) in arb_layout(), seed in any::<u64>()) {
        let layout = TensorLayout::new(n, d).unwrap();
        let p = SymmetricProjector::new(layout).unwrap();
        let v = random_vector(layout.total_dim(), seed);
        let once = p.apply(&v).unwrap();
        let twice = p.apply(&once).unwrap();
        prop_assert!(once.approx_eq(&twice, 1e-12));
    }

    #[test]
    fn projected_vectors_are_permutation_invariant((n, d) in arb_layout(), seed in any::<u64>()) {
        let layout = TensorLayout::new(n, d).unwrap();
        let v = SymmetricProjector::new(layout).unwrap().apply(&random_vector(layout.total_dim(), seed)).unwrap();
        for perm in permutations(n) {
            prop_assert!(permute_registers(&v, &layout, &perm).unwrap().approx_eq(&v, 1e-12));
        }
    }

    #[test]
    fn permutations_preserve_norm((n, d) in arb_layout(), seed in any::<u64>(), pick in any::<prop::sample::Index>()) {
        let layout = TensorLayout::new(n, d).unwrap();
        let v = random_vector(layout.total_dim(), seed);
        let perms: Vec<_> = permutations(n).collect();
        let w = permute_registers(&v, &layout, pick.get(&perms)).unwrap();
        prop_assert!((w.norm_sqr() - v.norm_sqr()).abs() < 1e-12);
    }

    #[test]
    fn trace_norm_triangle_inequality(dim in 2usize..=6, seed in any::<u64>(), wa in -1.0f64..1.0, wb in -1.0f64..1.0) {
        let mut rng = trial_rng(seed, 0);
        let mut a = Operator::zeros(dim);
        let mut b = Operator::zeros(dim);
        a.add_outer(&haar_state(dim, &mut rng), wa);
        a.add_outer(&haar_state(dim, &mut rng), -wb);
        b.add_outer(&haar_state(dim, &mut rng), wb);
        let sum = a.linear_combination(1.0, &b, 1.0).unwrap();
        prop_assert!(trace_norm(&sum).unwrap() <= trace_norm(&a).unwrap() + trace_norm(&b).unwrap() + 1e-10);
    }

    #[test]
    fn q_increases_with_overlap_and_decreases_with_n(n in 2usize..20, l1 in 0.0f64..=1.0, l2 in 0.0f64..=1.0) {
        let (lo, hi) = if l1 <= l2 { (l1, l2) } else { (l2, l1) };
        prop_assert!(q_closed_form(n, lo).unwrap() <= q_closed_form(n, hi).unwrap());
        prop_assert!(q_closed_form(n + 1, lo).unwrap() <= q_closed_form(n, lo).unwrap() + 1e-15);
    }

    #[test]
    fn simple_bound_dominates_and_tight_bound_suffices(t in 2usize..=100, k in 2i32..=20) {
        let eps = 2f64.powi(-k);
        let th = SecurityThreshold::new(eps).unwrap();
        let tight = s_min_tight(t, th).unwrap();
        prop_assert!(s_min_simple(t, th).unwrap() >= tight);
        prop_assert!(p_success_closed(t, tight).unwrap() <= 0.5 + eps);
        if tight > 1 {
            prop_assert!(p_success_closed(t, tight - 1).unwrap() > 0.5 + eps);
        }
    }

    #[test]
    fn rotation_keys_are_injective(n in 1usize..=12, i in any::<u64>(), j in any::<u64>()) {
        let mask = (1u64 << n) - 1;
        let (i, j) = (i & mask, j & mask);
        prop_assume!(i != j);
        let fam = KeyFamily::new(KeyFamilySpec::rotation(n, 2).unwrap()).unwrap();
        let a = fam.public_key_state(&PrivateKey::from_index(i, n).unwrap()).unwrap();
        let b = fam.public_key_state(&PrivateKey::from_index(j, n).unwrap()).unwrap();
        prop_assert!(a.state().overlap(b.state()) < 1.0 - 1e-12);
    }
}

#[test]
fn rotation_overlap_grows_with_key_bits() {
    let mut last = 0.0;
    for n in 1..=12 {
        let fam = KeyFamily::new(KeyFamilySpec::rotation(n, 2).unwrap()).unwrap();
        let bound = fam.pairwise_overlap_bound().unwrap().value;
        assert!(bound > last, "n={n}");
        last = bound;
    }
}

#[test]
fn symmetrization_spans_symmetric_subspace() {
    // The trace of P_sym equals the dimension C(N+d−1, N) of the symmetric subspace.
    for (n, d, expect) in [(2, 2, 3.0), (3, 2, 4.0), (4, 2, 5.0), (2, 3, 6.0), (3, 3, 10.0)] {
        let layout = TensorLayout::new(n, d).unwrap();
        let p = SymmetricProjector::new(layout).unwrap();
        let trace: Complex64 = (0..layout.total_dim())
            .map(|i| p.apply(&StateVector::basis(layout.total_dim(), i)).unwrap().amplitudes()[i])
            .sum();
        assert!((trace.re - expect).abs() < 1e-12, "N={n} d={d}");
    }
}

#[test]
fn double_sums_agree_with_closed_form_by_induction() {
    for t in 2..=6 {
        for s in 1..=12 {
            let p0 = p_success_conditional(t, s, Bit::Zero).unwrap();
            let p1 = p_success_conditional(t, s, Bit::One).unwrap();
            let closed = p_success_closed(t, s).unwrap();
            assert!(((p0 + p1) / 2.0 - closed).abs() < 1e-10, "T={t} s={s}");
            // Step s -> s+1 multiplies the advantage by (T−1)/T.
            let next = p_success_closed(t, s + 1).unwrap();
            let ratio = (t as f64 - 1.0) / t as f64;
            assert!(((next - 0.5) - (closed - 0.5) * ratio).abs() < 1e-12);
        }
    }
    assert_eq!(oracle_p_success_exact(4, 3), rational(1, 2) + rational(27, 128));
}

/// Pearson chi-square over the `2^{s−1}` admissible codewords, against the
/// 0.001 upper critical value for `2^{s−1} − 1` degrees of freedom.
#[test]
fn codeword_distribution_chi_square() {
    const CRITICAL: [f64; 8] = [10.828, 13.816, 16.266, 18.467, 20.515, 22.458, 24.322, 26.124];
    let draws = 100_000u64;
    for s in 1..=4usize {
        for b in [Bit::Zero, Bit::One] {
            let mut rng = trial_rng(30 + s as u64, b.is_one() as u64);
            let mut counts = vec![0u64; 1 << s];
            for _ in 0..draws {
                let w = sample_codeword(s, b, &mut rng).unwrap();
                assert_eq!(w.parity(), b);
                counts[w.bits().iter().fold(0, |acc, &x| acc * 2 + x as usize)] += 1;
            }
            let cells = 1usize << (s - 1);
            let expected = draws as f64 / cells as f64;
            let chi2: f64 = counts
                .iter()
                .enumerate()
                .filter(|(i, _)| (i.count_ones() % 2 == 1) == b.is_one())
                .map(|(_, &c)| (c as f64 - expected).powi(2) / expected)
                .sum();
            if cells > 1 {
                assert!(chi2 < CRITICAL[cells - 2], "s={s} b={b}: chi2 {chi2}");
            }
        }
    }
}

#[test]
fn bernoulli_mode_tracks_closed_form() {
    for t in [2usize, 3, 5] {
        let spec = SchemeSpec::standard(KeyFamily::new(KeyFamilySpec::rotation(16, t).unwrap()).unwrap()).unwrap();
        let attack = CompoundAttack::new(&spec, AttackResources::new(t).unwrap(), AttackMode::Bernoulli).unwrap();
        for s in 1..=10 {
            let trials = 20_000;
            let wins = run_trials(100 * t as u64 + s as u64, trials, 0, |i, rng| {
                let b = Bit::from_bool(rand::Rng::random::<bool>(rng));
                compound_trial(&spec, &attack, t, s, b, None, i, rng)
            })
            .unwrap()
            .iter()
            .filter(|r| r.success())
            .count() as u64;
            assert!(within_3_sigma(wins, trials, p_success_closed(t, s).unwrap()), "T={t} s={s}: {wins}");
        }
    }
}
