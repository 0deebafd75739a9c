//! Key-state families: private keys `k ∈ {0,1}ⁿ`, the public-key states
//! `|Ψ_k⟩`, the pairwise overlap bound and the Holevo distribution limit.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{StateVector, C64};
use crate::rng::haar_state;

/// Families up to this many keys are scanned pairwise and, for the
/// seeded-random kind, materialized with overlap rejection.
pub const EXHAUSTIVE_KEY_LIMIT: u64 = 4096;

/// Overlaps at or above `1 - DEGENERATE_TOL` count as identical states.
pub const DEGENERATE_TOL: f64 = 1e-12;

pub const DEFAULT_HOLEVO_MARGIN: f64 = 10.0;
pub const DEFAULT_OVERLAP_BOUND: f64 = 1.0 - 1e-9;

const SAMPLED_PAIRS: usize = 20_000;
const MAX_REJECTIONS: usize = 1_000;
const MAX_KEY_BITS: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum FamilyKind {
    /// Real qubit states `cos θ_k |0⟩ + sin θ_k |1⟩`, `θ_k = π·int(k)/2ⁿ⁺¹`.
    Rotation,
    /// Haar-random states drawn from a family seed.
    SeededRandom { seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KeyFamilySpec {
    pub kind: FamilyKind,
    pub key_bits: usize,
    pub register_dim: usize,
    pub max_copies: usize,
    pub overlap_bound: f64,
    pub holevo_margin: f64,
}

impl KeyFamilySpec {
    pub fn new(
        kind: FamilyKind,
        key_bits: usize,
        register_dim: usize,
        max_copies: usize,
        overlap_bound: f64,
        holevo_margin: f64,
    ) -> Result<Self> {
        let spec = Self {
            kind,
            key_bits,
            register_dim,
            max_copies,
            overlap_bound,
            holevo_margin,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn rotation(key_bits: usize, max_copies: usize) -> Result<Self> {
        Self::new(
            FamilyKind::Rotation,
            key_bits,
            2,
            max_copies,
            DEFAULT_OVERLAP_BOUND,
            DEFAULT_HOLEVO_MARGIN,
        )
    }

    pub fn seeded_random(seed: u64, key_bits: usize, register_dim: usize, max_copies: usize) -> Result<Self> {
        Self::new(
            FamilyKind::SeededRandom { seed },
            key_bits,
            register_dim,
            max_copies,
            DEFAULT_OVERLAP_BOUND,
            DEFAULT_HOLEVO_MARGIN,
        )
    }

    pub fn validate(&self) -> Result<()> {
        if self.key_bits == 0 || self.key_bits > MAX_KEY_BITS {
            return Err(Error::param("key_bits", format!("must be in 1..={MAX_KEY_BITS}")));
        }
        if self.register_dim < 2 {
            return Err(Error::param("register_dim", "must be >= 2"));
        }
        if self.max_copies == 0 {
            return Err(Error::param("max_copies", "must be >= 1"));
        }
        if !(self.overlap_bound > 0.0 && self.overlap_bound < 1.0) {
            return Err(Error::param("overlap_bound", "must lie in (0, 1)"));
        }
        if !self.holevo_margin.is_finite() || self.holevo_margin < 1.0 {
            return Err(Error::param("holevo_margin", "must be a finite value >= 1"));
        }
        match self.kind {
            FamilyKind::Rotation if self.register_dim != 2 => {
                Err(Error::param("register_dim", "the rotation family is single-qubit (d = 2)"))
            }
            FamilyKind::SeededRandom { .. } if self.key_bits > 64 => {
                Err(Error::param("key_bits", "the seeded-random family supports at most 64 key bits"))
            }
            _ => Ok(()),
        }
    }

    /// `2ⁿ`, when it fits in a `u64`.
    pub fn key_count(&self) -> Option<u64> {
        1u64.checked_shl(self.key_bits as u32).filter(|_| self.key_bits < 64)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrivateKey {
    bits: Vec<bool>,
}

impl PrivateKey {
    pub fn from_bits(bits: Vec<bool>) -> Result<Self> {
        if bits.is_empty() || bits.len() > MAX_KEY_BITS {
            return Err(Error::Key(format!("key length must be in 1..={MAX_KEY_BITS}")));
        }
        Ok(Self { bits })
    }

    /// Key of length `len` whose big-endian integer value is `value`.
    pub fn from_index(value: u64, len: usize) -> Result<Self> {
        if len == 0 || len > 64 || (len < 64 && value >> len != 0) {
            return Err(Error::Key(format!("{value} does not fit in {len} bits")));
        }
        Self::from_bits((0..len).rev().map(|i| value >> i & 1 == 1).collect())
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Big-endian integer value; `None` beyond 64 bits.
    pub fn index(&self) -> Option<u64> {
        (self.bits.len() <= 64).then(|| self.bits.iter().fold(0u64, |acc, &b| acc << 1 | b as u64))
    }

    fn fingerprint(&self) -> KeyFingerprint {
        // FNV-1a over the bit string.
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for &b in &self.bits {
            h ^= b as u64 + 1;
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
        KeyFingerprint(h)
    }
}

impl FromStr for PrivateKey {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Key(format!("unexpected character {other:?} in key"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_bits(bits)
    }
}

impl fmt::Display for PrivateKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Uniform draw from `{0,1}ⁿ`.
pub fn sample_private_key<R: Rng + ?Sized>(spec: &KeyFamilySpec, rng: &mut R) -> PrivateKey {
    PrivateKey {
        bits: (0..spec.key_bits).map(|_| rng.random::<bool>()).collect(),
    }
}

/// Links a public key back to its private key for harness bookkeeping.
/// Adversary code never inspects it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct KeyFingerprint(u64);

#[derive(Debug, Clone, PartialEq)]
pub struct PublicKeyState {
    state: StateVector,
    fingerprint: KeyFingerprint,
}

impl PublicKeyState {
    pub fn state(&self) -> &StateVector {
        &self.state
    }

    pub fn fingerprint(&self) -> KeyFingerprint {
        self.fingerprint
    }

    pub fn matches(&self, key: &PrivateKey) -> bool {
        self.fingerprint == key.fingerprint()
    }
}

/// A validated family, with the seeded-random state table materialized
/// when the key space is small enough.
#[derive(Debug, Clone)]
pub struct KeyFamily {
    spec: KeyFamilySpec,
    table: Option<Vec<StateVector>>,
}

impl KeyFamily {
    pub fn new(spec: KeyFamilySpec) -> Result<Self> {
        spec.validate()?;
        let table = match spec.kind {
            FamilyKind::SeededRandom { seed } => match spec.key_count() {
                Some(count) if count <= EXHAUSTIVE_KEY_LIMIT => Some(random_table(&spec, seed, count)?),
                _ => None,
            },
            FamilyKind::Rotation => None,
        };
        Ok(Self { spec, table })
    }

    pub fn spec(&self) -> &KeyFamilySpec {
        &self.spec
    }

    pub fn register_dim(&self) -> usize {
        self.spec.register_dim
    }

    /// `k ↦ |Ψ_k⟩`; a pure function of `(spec, k)`.
    pub fn public_key_state(&self, key: &PrivateKey) -> Result<PublicKeyState> {
        if key.len() != self.spec.key_bits {
            return Err(Error::Key(format!(
                "key has {} bits, family expects {}",
                key.len(),
                self.spec.key_bits
            )));
        }
        let state = match self.spec.kind {
            FamilyKind::Rotation => rotation_state(key),
            FamilyKind::SeededRandom { seed } => {
                let index = key.index().expect("validated: at most 64 bits");
                match &self.table {
                    Some(table) => table[index as usize].clone(),
                    None => haar_state(self.spec.register_dim, &mut key_stream(seed, index)),
                }
            }
        };
        Ok(PublicKeyState {
            state,
            fingerprint: key.fingerprint(),
        })
    }

    /// Every state of the family, in key order. Only for small families.
    pub fn all_states(&self) -> Result<Vec<StateVector>> {
        let count = self
            .spec
            .key_count()
            .filter(|&c| c <= EXHAUSTIVE_KEY_LIMIT)
            .ok_or_else(|| {
                Error::guard("family size 2^n", self.spec.key_count().unwrap_or(u64::MAX), EXHAUSTIVE_KEY_LIMIT)
            })?;
        (0..count)
            .map(|x| {
                let key = PrivateKey::from_index(x, self.spec.key_bits)?;
                Ok(self.public_key_state(&key)?.state)
            })
            .collect()
    }

    /// `max_{x≠x'} |⟨Ψ_x'|Ψ_x⟩|`, exhaustive for small families and a
    /// sampled estimate otherwise.
    pub fn pairwise_overlap_bound(&self) -> Result<OverlapBound> {
        match self.all_states() {
            Ok(states) => Ok(OverlapBound {
                value: max_pairwise_overlap(&states)?,
                exhaustive: true,
            }),
            Err(Error::SimulationSize { .. }) => self.sampled_overlap_bound(),
            Err(e) => Err(e),
        }
    }

    fn sampled_overlap_bound(&self) -> Result<OverlapBound> {
        let n = self.spec.key_bits;
        let mut rng = ChaCha8Rng::seed_from_u64(0x6f76_6572_6c61_7073 ^ n as u64);
        let mut worst: f64 = 0.0;
        for _ in 0..SAMPLED_PAIRS {
            let a = sample_private_key(&self.spec, &mut rng);
            let b = sample_private_key(&self.spec, &mut rng);
            if a == b {
                continue;
            }
            let ov = self
                .public_key_state(&a)?
                .state
                .overlap(&self.public_key_state(&b)?.state);
            if ov >= 1.0 - DEGENERATE_TOL {
                return Err(Error::FamilyInvalid(format!("keys {a} and {b} have identical states")));
            }
            worst = worst.max(ov);
        }
        Ok(OverlapBound {
            value: worst,
            exhaustive: false,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OverlapBound {
    pub value: f64,
    /// False when the value is a sampled lower estimate of the true maximum.
    pub exhaustive: bool,
}

/// Largest pairwise overlap in a list of states; errors on duplicates.
pub fn max_pairwise_overlap(states: &[StateVector]) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for (i, a) in states.iter().enumerate() {
        for (j, b) in states.iter().enumerate().skip(i + 1) {
            let ov = a.overlap(b);
            if ov >= 1.0 - DEGENERATE_TOL {
                return Err(Error::FamilyInvalid(format!(
                    "states {i} and {j} coincide (overlap {ov})"
                )));
            }
            worst = worst.max(ov);
        }
    }
    Ok(worst)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HolevoVerdict {
    /// `n / (T·log₂ d)`.
    pub ratio: f64,
    pub margin: f64,
    pub pass: bool,
}

/// `n ≫ T·log₂(d)`, read as `n ≥ c·T·log₂(d)`.
pub fn holevo_check(spec: &KeyFamilySpec) -> HolevoVerdict {
    let ratio = spec.key_bits as f64 / (spec.max_copies as f64 * (spec.register_dim as f64).log2());
    HolevoVerdict {
        ratio,
        margin: spec.holevo_margin,
        pass: ratio >= spec.holevo_margin,
    }
}

fn rotation_state(key: &PrivateKey) -> StateVector {
    // θ = (π/2)·int(k)/2ⁿ, accumulated bit by bit so long keys stay finite.
    let mut frac = 0.0;
    let mut weight = 0.5;
    for &b in key.bits() {
        if b {
            frac += weight;
        }
        weight *= 0.5;
    }
    let theta = std::f64::consts::FRAC_PI_2 * frac;
    StateVector::new(vec![C64::new(theta.cos(), 0.0), C64::new(theta.sin(), 0.0)])
        .expect("finite amplitudes")
}

fn key_stream(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn random_table(spec: &KeyFamilySpec, seed: u64, count: u64) -> Result<Vec<StateVector>> {
    let mut table: Vec<StateVector> = Vec::with_capacity(count as usize);
    for x in 0..count {
        let mut rng = key_stream(seed, x);
        let mut accepted = None;
        for _ in 0..MAX_REJECTIONS {
            let candidate = haar_state(spec.register_dim, &mut rng);
            if table.iter().all(|s| s.overlap(&candidate) < spec.overlap_bound) {
                accepted = Some(candidate);
                break;
            }
        }
        let state = accepted.ok_or_else(|| {
            Error::FamilyInvalid(format!(
                "could not place key {x} below overlap bound {} after {MAX_REJECTIONS} draws",
                spec.overlap_bound
            ))
        })?;
        table.push(state);
    }
    Ok(table)
}
