//! Success probabilities of the compound attack and the codeword length
//! needed to push them down to `½ + ε`.
//!
//! With `q = q_{T,0} = 1/T` Eve misreads a codeword bit only when it is 1,
//! and does so with probability `q`. Averaging over uniform codewords gives
//! `P⁽ˢ⁾ = ½ + (1 − q)ˢ / 2 = ½ + (T−1)ˢ/(2Tˢ)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scheme::Bit;

pub const MAX_SUM_LEN: usize = 64;

/// Bounds on `ε` as an advantage over random guessing.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SecurityThreshold {
    epsilon: f64,
}

impl SecurityThreshold {
    pub fn new(epsilon: f64) -> Result<Self> {
        if !(epsilon > 0.0 && epsilon < 0.5) {
            return Err(Error::param("epsilon", format!("{epsilon} is outside (0, 1/2)")));
        }
        Ok(Self { epsilon })
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }
}

fn check_copies(copies: usize) -> Result<()> {
    if copies < 2 {
        return Err(Error::param("copies_t", "must be >= 2"));
    }
    Ok(())
}

/// `C(n, k)`, exact for `n ≤ 64`.
pub fn binomial(n: usize, k: usize) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc·(n−i) is divisible by i+1 at every step.
        acc = acc.checked_mul((n - i) as u128)? / (i as u128 + 1);
    }
    u64::try_from(acc).ok()
}

/// `P⁽ˢ⁾(success | b)` as the literal double sum over codeword weights `α`
/// of parity `b` and even error counts `γ`:
/// `2^{1−s} Σ_α Σ_γ C(s,α) C(α,γ) q^γ (1−q)^{α−γ}`.
pub fn p_success_conditional(copies: usize, len: usize, b: Bit) -> Result<f64> {
    check_copies(copies)?;
    if len == 0 || len > MAX_SUM_LEN {
        return Err(Error::param("codeword_len", format!("must be in 1..={MAX_SUM_LEN}")));
    }
    let q = 1.0 / copies as f64;
    let norm = 0.5f64.powi(len as i32 - 1);
    let first_alpha = if b.is_one() { 1 } else { 0 };
    let mut total = 0.0;
    for alpha in (first_alpha..=len).step_by(2) {
        let c_alpha = binomial(len, alpha).expect("len <= 64") as f64;
        let mut inner = 0.0;
        for gamma in (0..=alpha).step_by(2) {
            let c_gamma = binomial(alpha, gamma).expect("alpha <= 64") as f64;
            inner += c_gamma * q.powi(gamma as i32) * (1.0 - q).powi((alpha - gamma) as i32);
        }
        total += c_alpha * norm * inner;
    }
    Ok(total)
}

/// `½ + (T−1)ˢ/(2Tˢ)`.
pub fn p_success_closed(copies: usize, len: usize) -> Result<f64> {
    check_copies(copies)?;
    if len == 0 {
        return Err(Error::param("codeword_len", "must be >= 1"));
    }
    Ok(0.5 + 0.5 * advantage_factor(copies, len))
}

/// `(1 − 1/T)ˢ`, i.e. twice Eve's advantage.
fn advantage_factor(copies: usize, len: usize) -> f64 {
    let keep = (copies as f64 - 1.0) / copies as f64;
    match i32::try_from(len) {
        Ok(s) => keep.powi(s),
        Err(_) => keep.powf(len as f64),
    }
}

/// `(1 + log₂ε) / log₂((T−1)/T)`. Both logs are negative for `ε < ½`, so
/// the absolute value in the bound only restates that the ratio is positive.
pub fn tight_bound_ratio(copies: usize, eps: SecurityThreshold) -> Result<f64> {
    check_copies(copies)?;
    let num = 1.0 + eps.epsilon.log2();
    let den = ((copies as f64 - 1.0) / copies as f64).log2();
    debug_assert!(num < 0.0 && den < 0.0);
    Ok((num / den).abs())
}

/// Smallest `s` with `P⁽ˢ⁾ ≤ ½ + ε`, clamped to at least 1. Sufficient
/// against the symmetry-test attack; says nothing about other attacks.
pub fn s_min_tight(copies: usize, eps: SecurityThreshold) -> Result<usize> {
    let ratio = tight_bound_ratio(copies, eps)?;
    let mut s = (ratio.ceil() as usize).max(1);
    // Guard against the ceiling landing one off through rounding in the logs.
    let ok = |s: usize| 0.5 * advantage_factor(copies, s) <= eps.epsilon;
    while !ok(s) {
        s += 1;
    }
    while s > 1 && ok(s - 1) {
        s -= 1;
    }
    Ok(s)
}

/// `⌈T·|1 + log₂ε|⌉`, clamped to at least 1. Never below [`s_min_tight`].
pub fn s_min_simple(copies: usize, eps: SecurityThreshold) -> Result<usize> {
    check_copies(copies)?;
    let bound = copies as f64 * (1.0 + eps.epsilon.log2()).abs();
    Ok((bound.ceil() as usize).max(1))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SuccessRow {
    pub s: usize,
    pub p_b0: f64,
    pub p_b1: f64,
    pub p_avg: f64,
    pub closed_form: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuccessTable {
    pub copies: usize,
    pub rows: Vec<SuccessRow>,
}

impl SuccessTable {
    /// Rows for `s = 1..=max_len`.
    pub fn build(copies: usize, max_len: usize) -> Result<Self> {
        let rows = (1..=max_len)
            .map(|s| {
                let p_b0 = p_success_conditional(copies, s, Bit::Zero)?;
                let p_b1 = p_success_conditional(copies, s, Bit::One)?;
                Ok(SuccessRow {
                    s,
                    p_b0,
                    p_b1,
                    p_avg: 0.5 * (p_b0 + p_b1),
                    closed_form: p_success_closed(copies, s)?,
                })
            })
            .collect::<Result<_>>()?;
        Ok(Self { copies, rows })
    }
}
