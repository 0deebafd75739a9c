//! The symmetry test for the (1, N−1)-copy state distinguishing problem.
//!
//! Given one copy of `ξ` and `N−1` copies of `χ`, the test projects the `N`
//! registers onto the permutation-symmetric subspace. The Fourier-transform
//! circuit over the `N!`-dimensional control register is never simulated:
//! its outcome-"0" probability is exactly `⟨in|P_sym|in⟩` with
//! `P_sym = (1/N!) Σ_σ σ`, which is what [`SymmetryTest::p_zero_exact`]
//! evaluates by brute force.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{StateVector, SymmetricProjector, TensorLayout};

/// Probabilities this close to 1 are treated as exactly 1 when sampling,
/// so equal states never produce a nonzero outcome through rounding.
const CERTAIN_TOL: f64 = 1e-12;

/// `q_{N,λ} = (1 + (N−1)λ²)/N`.
pub fn q_closed_form(num_registers: usize, lambda: f64) -> Result<f64> {
    if num_registers == 0 {
        return Err(Error::param("num_registers", "must be >= 1"));
    }
    if !(0.0..=1.0).contains(&lambda) {
        return Err(Error::param("lambda", format!("{lambda} is outside [0, 1]")));
    }
    let n = num_registers as f64;
    Ok((1.0 + (n - 1.0) * lambda * lambda) / n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Zero,
    Nonzero,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SymmetryTestOutcome {
    pub outcome: Outcome,
    /// Probability with which `Zero` was drawn.
    pub p_zero: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Equal,
    Different,
}

/// A symmetry test over `N` registers of dimension `d`, with the
/// permutation tables precomputed for repeated use.
#[derive(Debug, Clone)]
pub struct SymmetryTest {
    projector: SymmetricProjector,
}

impl SymmetryTest {
    pub fn new(num_registers: usize, register_dim: usize) -> Result<Self> {
        if register_dim < 2 {
            return Err(Error::param("register_dim", "must be >= 2"));
        }
        let layout = TensorLayout::new(num_registers, register_dim)?;
        Ok(Self {
            projector: SymmetricProjector::new(layout)?,
        })
    }

    pub fn num_registers(&self) -> usize {
        self.projector.layout().num_registers()
    }

    pub fn register_dim(&self) -> usize {
        self.projector.layout().register_dim()
    }

    /// `‖P_sym (|ξ⟩ ⊗ |χ⟩^{⊗(N−1)})‖²`, computed on the full `dᴺ` space.
    pub fn p_zero_exact(&self, xi: &StateVector, chi: &StateVector) -> Result<f64> {
        let d = self.register_dim();
        if xi.dim() != d || chi.dim() != d {
            return Err(Error::Layout(format!(
                "registers have dim {d}, got states of dim {} and {}",
                xi.dim(),
                chi.dim()
            )));
        }
        let mut input = xi.clone();
        for _ in 1..self.num_registers() {
            input = input.tensor(chi)?;
        }
        Ok(self.projector.apply(&input)?.norm_sqr())
    }

    /// One run of the test; the outcome is drawn against the exact `p_zero`.
    pub fn run<R: Rng + ?Sized>(
        &self,
        xi: &StateVector,
        chi: &StateVector,
        rng: &mut R,
    ) -> Result<SymmetryTestOutcome> {
        let p_zero = self.p_zero_exact(xi, chi)?;
        Ok(sample_outcome(p_zero, rng))
    }

    /// Decides between `ξ = χ` and `|⟨ξ|χ⟩| < 1`. Errors are one-sided:
    /// equal states always yield [`Verdict::Equal`].
    pub fn distinguish<R: Rng + ?Sized>(
        &self,
        xi: &StateVector,
        chi_copies: &[StateVector],
        rng: &mut R,
    ) -> Result<Verdict> {
        if chi_copies.len() + 1 != self.num_registers() {
            return Err(Error::Precondition(format!(
                "{} registers need {} copies of chi, got {}",
                self.num_registers(),
                self.num_registers() - 1,
                chi_copies.len()
            )));
        }
        let Some(chi) = chi_copies.first() else {
            // N = 1: nothing to compare against.
            return Ok(Verdict::Equal);
        };
        if !chi_copies.iter().all(|c| c.approx_eq(chi, 1e-12)) {
            return Err(Error::Precondition("copies of chi are not identical".into()));
        }
        Ok(match self.run(xi, chi, rng)?.outcome {
            Outcome::Zero => Verdict::Equal,
            Outcome::Nonzero => Verdict::Different,
        })
    }
}

pub(crate) fn sample_outcome<R: Rng + ?Sized>(p_zero: f64, rng: &mut R) -> SymmetryTestOutcome {
    let p_zero = if p_zero >= 1.0 - CERTAIN_TOL {
        1.0
    } else {
        p_zero.max(0.0)
    };
    let u: f64 = rng.random();
    SymmetryTestOutcome {
        outcome: if u < p_zero { Outcome::Zero } else { Outcome::Nonzero },
        p_zero,
    }
}

pub fn p_zero_exact(xi: &StateVector, chi: &StateVector, num_registers: usize) -> Result<f64> {
    SymmetryTest::new(num_registers, xi.dim())?.p_zero_exact(xi, chi)
}

pub fn run_symmetry_test<R: Rng + ?Sized>(
    xi: &StateVector,
    chi: &StateVector,
    num_registers: usize,
    rng: &mut R,
) -> Result<SymmetryTestOutcome> {
    SymmetryTest::new(num_registers, xi.dim())?.run(xi, chi, rng)
}

/// Runs the test with `N = chi_copies.len() + 1`.
pub fn distinguish<R: Rng + ?Sized>(xi: &StateVector, chi_copies: &[StateVector], rng: &mut R) -> Result<Verdict> {
    SymmetryTest::new(chi_copies.len() + 1, xi.dim())?.distinguish(xi, chi_copies, rng)
}
