//! Eve's side: the forward search attack by symmetry test, the compound
//! attack on the parity scheme, and the Helstrom optimum for `ρ₀` vs `ρ₁`.
//!
//! Nothing in here accepts a [`PrivateKey`](crate::keys::PrivateKey) or a
//! [`Codeword`](crate::scheme::Codeword). Eve sees ciphertexts, public-key
//! copies and the published scheme.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::keys::{PrivateKey, PublicKeyState};
use crate::linalg::{hermitian_eigenvalues, trace_norm, Operator, StateVector};
use crate::scheme::{encrypt_bit, Bit, Ciphertext, CompoundCiphertext, SchemeSpec};
use crate::symtest::{q_closed_form, sample_outcome, Outcome, SymmetryTest, SymmetryTestOutcome};

/// Largest `n` for which the key ensemble of `ρ_b` is summed explicitly.
pub const ENSEMBLE_KEY_BITS_LIMIT: usize = 10;
/// Largest density-operator dimension `d^T` handed to the eigensolver.
pub const DENSITY_DIM_LIMIT: usize = 256;

const DENSITY_TOL: f64 = 1e-10;

/// Public-key copies per key. Eve holds `T − 1` of them plus the ciphertext.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AttackResources {
    copies: usize,
}

impl AttackResources {
    pub fn new(copies: usize) -> Result<Self> {
        if copies < 2 {
            return Err(Error::param(
                "copies_t",
                "the attack needs T >= 2 (T = 1 leaves a vacuous one-register test)",
            ));
        }
        Ok(Self { copies })
    }

    pub fn copies(&self) -> usize {
        self.copies
    }

    /// The test-plaintext is always 0.
    pub fn test_plaintext(&self) -> Bit {
        Bit::Zero
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AttackMode {
    /// Brute-force symmetric projection on the full `d^T` space.
    Quantum,
    /// Outcome drawn from `q_{T,λ}` with `λ` measured on the actual states.
    Bernoulli,
}

/// Forward search by symmetry test with `N = T` registers.
#[derive(Debug, Clone)]
pub struct ForwardSearchAttack {
    resources: AttackResources,
    u0: Operator,
    test: SymmetryTest,
}

impl ForwardSearchAttack {
    pub fn new(spec: &SchemeSpec, resources: AttackResources) -> Result<Self> {
        Ok(Self {
            resources,
            u0: spec.u0().clone(),
            test: SymmetryTest::new(resources.copies(), spec.register_dim())?,
        })
    }

    pub fn resources(&self) -> AttackResources {
        self.resources
    }

    /// `Û₀` applied to each public-key copy: the test-ciphertexts.
    fn test_ciphertexts(&self, pk_copies: &[PublicKeyState]) -> Result<Vec<StateVector>> {
        let expected = self.resources.copies() - 1;
        if pk_copies.len() != expected {
            return Err(Error::Precondition(format!(
                "expected {expected} public-key copies, got {}",
                pk_copies.len()
            )));
        }
        pk_copies.iter().map(|pk| self.u0.apply(pk.state())).collect()
    }

    /// Runs the symmetry test of the ciphertext against the test-ciphertexts.
    pub fn measure<R: Rng + ?Sized>(
        &self,
        ct: &Ciphertext,
        pk_copies: &[PublicKeyState],
        rng: &mut R,
    ) -> Result<SymmetryTestOutcome> {
        let chis = self.test_ciphertexts(pk_copies)?;
        if !chis.iter().all(|c| c.approx_eq(&chis[0], 1e-12)) {
            return Err(Error::Precondition("public-key copies are not identical".into()));
        }
        self.test.run(ct.state(), &chis[0], rng)
    }

    /// Guesses 0 when the test reports "equal", 1 otherwise.
    pub fn guess<R: Rng + ?Sized>(&self, ct: &Ciphertext, pk_copies: &[PublicKeyState], rng: &mut R) -> Result<Bit> {
        Ok(guess_from(self.measure(ct, pk_copies, rng)?.outcome))
    }
}

fn guess_from(outcome: Outcome) -> Bit {
    match outcome {
        Outcome::Zero => Bit::Zero,
        Outcome::Nonzero => Bit::One,
    }
}

/// Forward search attack with `T = pk_copies.len() + 1`.
pub fn forward_search_attack<R: Rng + ?Sized>(
    spec: &SchemeSpec,
    ct: &Ciphertext,
    pk_copies: &[PublicKeyState],
    rng: &mut R,
) -> Result<Bit> {
    let resources = AttackResources::new(pk_copies.len() + 1)?;
    ForwardSearchAttack::new(spec, resources)?.guess(ct, pk_copies, rng)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CompoundGuess {
    pub guess: Bit,
    pub per_bit_outcomes: Vec<SymmetryTestOutcome>,
}

/// `s` independent forward searches, one per ciphertext part, combined by
/// parity. A prepared attack can be reused across trials.
#[derive(Debug, Clone)]
pub struct CompoundAttack {
    resources: AttackResources,
    mode: AttackMode,
    u0: Operator,
    test: Option<SymmetryTest>,
}

impl CompoundAttack {
    pub fn new(spec: &SchemeSpec, resources: AttackResources, mode: AttackMode) -> Result<Self> {
        if !spec.is_orthogonal() {
            return Err(Error::UnsupportedMode(
                "the compound attack model assumes orthogonal ciphertexts".into(),
            ));
        }
        let test = match mode {
            AttackMode::Quantum => Some(SymmetryTest::new(resources.copies(), spec.register_dim())?),
            AttackMode::Bernoulli => None,
        };
        Ok(Self {
            resources,
            mode,
            u0: spec.u0().clone(),
            test,
        })
    }

    pub fn mode(&self) -> AttackMode {
        self.mode
    }

    /// `per_key_copies[i]` holds the `T − 1` public-key copies for part `i`.
    pub fn attack<R: Rng + ?Sized>(
        &self,
        ct: &CompoundCiphertext,
        per_key_copies: &[Vec<PublicKeyState>],
        rng: &mut R,
    ) -> Result<CompoundGuess> {
        if per_key_copies.len() != ct.len() {
            return Err(Error::Precondition(format!(
                "{} copy sets for {} ciphertext parts",
                per_key_copies.len(),
                ct.len()
            )));
        }
        let t = self.resources.copies();
        let mut parity = false;
        let mut per_bit_outcomes = Vec::with_capacity(ct.len());
        for (part, copies) in ct.parts().iter().zip(per_key_copies) {
            if copies.len() != t - 1 {
                return Err(Error::Precondition(format!(
                    "expected {} public-key copies per part, got {}",
                    t - 1,
                    copies.len()
                )));
            }
            let chi = self.u0.apply(copies[0].state())?;
            if !copies.iter().all(|c| c.state().approx_eq(copies[0].state(), 1e-12)) {
                return Err(Error::Precondition("public-key copies are not identical".into()));
            }
            let outcome = match &self.test {
                Some(test) => test.run(part.state(), &chi, rng)?,
                None => {
                    let lambda = part.state().overlap(&chi).min(1.0);
                    sample_outcome(q_closed_form(t, lambda)?, rng)
                }
            };
            parity ^= guess_from(outcome.outcome).is_one();
            per_bit_outcomes.push(outcome);
        }
        Ok(CompoundGuess {
            guess: Bit::from_bool(parity),
            per_bit_outcomes,
        })
    }
}

pub fn compound_attack<R: Rng + ?Sized>(
    spec: &SchemeSpec,
    ct: &CompoundCiphertext,
    per_key_copies: &[Vec<PublicKeyState>],
    mode: AttackMode,
    rng: &mut R,
) -> Result<CompoundGuess> {
    let t = per_key_copies.first().map_or(0, Vec::len) + 1;
    CompoundAttack::new(spec, AttackResources::new(t)?, mode)?.attack(ct, per_key_copies, rng)
}

/// One Monte Carlo trial, assembled by the harness.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialRecord {
    pub true_plaintext: Bit,
    pub guess: Bit,
    pub per_bit_outcomes: Vec<SymmetryTestOutcome>,
    pub seed_index: u64,
}

impl TrialRecord {
    pub fn success(&self) -> bool {
        self.true_plaintext == self.guess
    }
}

/// Two density operators and the prior `p = P[b = 0]`.
#[derive(Debug, Clone)]
pub struct DiscriminationInstance {
    rho0: Operator,
    rho1: Operator,
    prior: f64,
}

impl DiscriminationInstance {
    pub fn new(rho0: Operator, rho1: Operator, prior: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&prior) {
            return Err(Error::param("prior", format!("{prior} is outside [0, 1]")));
        }
        if rho0.dim() != rho1.dim() {
            return Err(Error::Layout("density operators differ in dimension".into()));
        }
        for (name, rho) in [("rho0", &rho0), ("rho1", &rho1)] {
            let tr = rho.trace();
            if (tr.re - 1.0).abs() > DENSITY_TOL || tr.im.abs() > DENSITY_TOL {
                return Err(Error::Precondition(format!("{name} has trace {tr}")));
            }
            let min = hermitian_eigenvalues(rho)?.first().copied().unwrap_or(0.0);
            if min < -DENSITY_TOL {
                return Err(Error::Precondition(format!("{name} has negative eigenvalue {min}")));
            }
        }
        Ok(Self { rho0, rho1, prior })
    }

    pub fn rho0(&self) -> &Operator {
        &self.rho0
    }

    pub fn rho1(&self) -> &Operator {
        &self.rho1
    }

    pub fn prior(&self) -> f64 {
        self.prior
    }

    pub fn dim(&self) -> usize {
        self.rho0.dim()
    }
}

/// `ρ_b = 2⁻ⁿ Σ_x |Ψ_x⟩⟨Ψ_x|^{⊗(T−1)} ⊗ |Φ_{x,b}⟩⟨Φ_{x,b}|`.
pub fn build_discrimination_instance(spec: &SchemeSpec, copies: usize, prior: f64) -> Result<DiscriminationInstance> {
    if copies == 0 {
        return Err(Error::param("copies_t", "must be >= 1"));
    }
    let n = spec.family().spec().key_bits;
    if n > ENSEMBLE_KEY_BITS_LIMIT {
        return Err(Error::guard("ensemble key bits", n as u64, ENSEMBLE_KEY_BITS_LIMIT as u64));
    }
    let d = spec.register_dim();
    let dim = (d as u64).checked_pow(copies as u32).unwrap_or(u64::MAX);
    if dim > DENSITY_DIM_LIMIT as u64 {
        return Err(Error::guard("density dimension d^T", dim, DENSITY_DIM_LIMIT as u64));
    }
    let dim = dim as usize;
    let weight = 1.0 / (1u64 << n) as f64;
    let mut rho = [Operator::zeros(dim), Operator::zeros(dim)];
    for x in 0..1u64 << n {
        let key = PrivateKey::from_index(x, n)?;
        let pk = spec.family().public_key_state(&key)?;
        for (b, rho_b) in [Bit::Zero, Bit::One].into_iter().zip(rho.iter_mut()) {
            let mut joint = encrypt_bit(spec, &pk, b)?.state().clone();
            for _ in 1..copies {
                joint = pk.state().tensor(&joint)?;
            }
            rho_b.add_outer(&joint, weight);
        }
    }
    let [rho0, rho1] = rho;
    DiscriminationInstance::new(rho0, rho1, prior)
}

/// Optimal success probability `½(1 + ‖pρ₀ − (1−p)ρ₁‖₁)`.
pub fn helstrom_success(inst: &DiscriminationInstance) -> Result<f64> {
    let p = inst.prior;
    let diff = inst.rho0.linear_combination(p, &inst.rho1, -(1.0 - p))?;
    Ok(0.5 * (1.0 + trace_norm(&diff)?))
}

/// Exact success probability of the single-bit symmetry-test attack,
/// averaged over all keys: `p·1 + (1−p)·(1 − 2⁻ⁿ Σ_x P_zero(Φ_{x,1}, Φ_{x,0}))`.
pub fn symmetry_attack_success(spec: &SchemeSpec, copies: usize, prior: f64) -> Result<f64> {
    let resources = AttackResources::new(copies)?;
    let test = SymmetryTest::new(resources.copies(), spec.register_dim())?;
    let states = spec.family().all_states()?;
    let mut p_zero_sum = 0.0;
    for s in &states {
        let c0 = spec.u0().apply(s)?;
        let c1 = spec.u1().apply(s)?;
        p_zero_sum += test.p_zero_exact(&c1, &c0)?;
    }
    let miss = p_zero_sum / states.len() as f64;
    Ok(prior + (1.0 - prior) * (1.0 - miss))
}
