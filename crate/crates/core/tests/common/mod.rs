//! Brute-force reference implementations shared by the test targets.
//!
//! Nothing here calls into the formula paths of `qpke_core`: the symmetric
//! projector is rebuilt from Heap's algorithm over raw amplitude vectors,
//! success probabilities are enumerated with exact rationals, and
//! eigenvalues come from nalgebra.

#![allow(dead_code)]

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use qpke_core::linalg::Operator;

pub const ORACLE_DIM_LIMIT: usize = 1 << 20;

#[derive(Debug, PartialEq)]
pub struct OracleGuard {
    pub requested: usize,
}

/// One oracle-versus-formula comparison.
#[derive(Debug, Clone)]
pub struct OracleCase {
    pub description: String,
    pub inputs: Vec<(&'static str, f64)>,
    pub oracle_value: f64,
    pub formula_value: f64,
    pub tolerance: f64,
}

impl OracleCase {
    pub fn new(description: impl Into<String>, oracle_value: f64, formula_value: f64, tolerance: f64) -> Self {
        Self {
            description: description.into(),
            inputs: Vec::new(),
            oracle_value,
            formula_value,
            tolerance,
        }
    }

    pub fn with(mut self, name: &'static str, value: f64) -> Self {
        self.inputs.push((name, value));
        self
    }

    pub fn passes(&self) -> bool {
        (self.oracle_value - self.formula_value).abs() <= self.tolerance
    }

    pub fn check(&self) {
        assert!(
            self.passes(),
            "{} {:?}: oracle {} vs formula {} (tolerance {})",
            self.description,
            self.inputs,
            self.oracle_value,
            self.formula_value,
            self.tolerance
        );
    }
}

/// All permutations of `0..n` by Heap's algorithm (iterative form).
pub fn heap_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut a: Vec<usize> = (0..n).collect();
    let mut out = vec![a.clone()];
    let mut c = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            out.push(a.clone());
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// `⟨in|P_sym|in⟩` for `|in⟩ = |ξ⟩ ⊗ |χ⟩^{⊗(N−1)}`, by summing every
/// register permutation of the full `d^N` vector.
pub fn oracle_q(n: usize, d: usize, xi: &[Complex64], chi: &[Complex64]) -> Result<f64, OracleGuard> {
    assert_eq!(xi.len(), d);
    assert_eq!(chi.len(), d);
    let total = d.checked_pow(n as u32).unwrap_or(usize::MAX);
    if total > ORACLE_DIM_LIMIT {
        return Err(OracleGuard { requested: total });
    }
    // Register 0 is the most significant digit here.
    let mut input = vec![Complex64::zero(); total];
    for (idx, amp) in input.iter_mut().enumerate() {
        let mut rem = idx;
        let mut digits = vec![0usize; n];
        for k in (0..n).rev() {
            digits[k] = rem % d;
            rem /= d;
        }
        let mut a = xi[digits[0]];
        for &digit in &digits[1..] {
            a *= chi[digit];
        }
        *amp = a;
    }
    let perms = heap_permutations(n);
    let mut sym = vec![Complex64::zero(); total];
    for perm in &perms {
        for (idx, amp) in input.iter().enumerate() {
            let mut rem = idx;
            let mut digits = vec![0usize; n];
            for k in (0..n).rev() {
                digits[k] = rem % d;
                rem /= d;
            }
            let target = perm.iter().fold(0usize, |acc, &src| acc * d + digits[src]);
            sym[target] += *amp;
        }
    }
    let scale = 1.0 / perms.len() as f64;
    Ok(sym.iter().map(|z| (z * scale).norm_sqr()).sum())
}

pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().expect("finite rational")
}

/// Exact success probability of the compound attack given plaintext `b`:
/// every codeword of parity `b` equally likely, every `1` bit misread
/// independently with probability `q = 1/T`, `0` bits never misread.
pub fn oracle_p_success_conditional(t: u64, s: usize, b: bool) -> BigRational {
    assert!((1..=20).contains(&s));
    // tally[α][γ]: codewords with α ones times error patterns of even size γ.
    let mut tally = vec![vec![0u64; s + 1]; s + 1];
    let mut count = 0u64;
    for w in 0u32..(1 << s) {
        if (w.count_ones() % 2 == 1) != b {
            continue;
        }
        count += 1;
        let alpha = w.count_ones() as usize;
        for flips in 0u32..(1 << alpha) {
            let gamma = flips.count_ones() as usize;
            if gamma & 1 == 0 {
                tally[alpha][gamma] += 1;
            }
        }
    }
    let q = rational(1, t as i64);
    let keep = BigRational::one() - &q;
    let mut total = BigRational::zero();
    for (alpha, row) in tally.iter().enumerate() {
        for (gamma, &n) in row.iter().enumerate() {
            if n == 0 {
                continue;
            }
            let weight = pow(&q, gamma) * pow(&keep, alpha - gamma);
            total += weight * BigRational::from_integer(BigInt::from(n));
        }
    }
    total / BigRational::from_integer(BigInt::from(count))
}

fn pow(x: &BigRational, k: usize) -> BigRational {
    (0..k).fold(BigRational::one(), |acc, _| acc * x)
}

/// Plaintext-averaged exact success probability.
pub fn oracle_p_success_exact(t: u64, s: usize) -> BigRational {
    (oracle_p_success_conditional(t, s, false) + oracle_p_success_conditional(t, s, true)) / rational(2, 1)
}

pub fn oracle_p_success(t: u64, s: usize) -> f64 {
    to_f64(&oracle_p_success_exact(t, s))
}

/// Smallest `s` whose exact success probability is at most `½ + ε`, with
/// `ε = 2^-k`. Scans `s` upward using the exact rational recurrence
/// `P(s) − ½ = ½((T−1)/T)^s` obtained from the enumeration above.
pub fn oracle_s_min(t: u64, k: u32) -> usize {
    let eps = BigRational::new(BigInt::one(), BigInt::from(2).pow(k));
    let ratio = rational(t as i64 - 1, t as i64);
    let mut excess = rational(1, 2);
    for s in 1..100_000 {
        excess *= &ratio;
        if excess <= eps {
            return s;
        }
    }
    panic!("no s found");
}

pub fn to_dmatrix(op: &Operator) -> DMatrix<Complex64> {
    let n = op.dim();
    DMatrix::from_fn(n, n, |r, c| op.get(r, c))
}

/// Ascending eigenvalues of a Hermitian operator via nalgebra.
pub fn nalgebra_eigenvalues(op: &Operator) -> Vec<f64> {
    let mut v: Vec<f64> = to_dmatrix(op).symmetric_eigen().eigenvalues.iter().copied().collect();
    v.sort_by(|a, b| a.partial_cmp(b).unwrap());
    v
}

pub fn nalgebra_trace_norm(op: &Operator) -> f64 {
    nalgebra_eigenvalues(op).iter().map(|x| x.abs()).sum()
}

pub fn nalgebra_rank(op: &Operator, tol: f64) -> usize {
    to_dmatrix(op).rank(tol)
}

/// Real pair with `⟨ξ|χ⟩ = λ` in dimension `d ≥ 2`.
pub fn real_pair(d: usize, lambda: f64) -> (Vec<Complex64>, Vec<Complex64>) {
    let mut xi = vec![Complex64::zero(); d];
    let mut chi = vec![Complex64::zero(); d];
    xi[0] = Complex64::new(1.0, 0.0);
    chi[0] = Complex64::new(lambda, 0.0);
    chi[1] = Complex64::new((1.0 - lambda * lambda).max(0.0).sqrt(), 0.0);
    (xi, chi)
}

pub fn inner(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

/// Three-sigma binomial interval check at probability `p`.
pub fn within_3_sigma(hits: u64, trials: u64, p: f64) -> bool {
    let freq = hits as f64 / trials as f64;
    let se = (p * (1.0 - p) / trials as f64).sqrt();
    (freq - p).abs() <= 3.0 * se
}
