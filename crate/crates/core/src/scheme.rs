//! Deterministic bit encryption `|Φ_{k,b}⟩ = Û_b|Ψ_k⟩` and the
//! parity-encoded randomized scheme built from it.
//!
//! The randomized scheme only ever touches the deterministic one through
//! [`encrypt_bit`]: each codeword bit is encrypted under its own key.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::keys::{KeyFamily, PrivateKey, PublicKeyState};
use crate::linalg::{Operator, StateVector, C64, FLAG_TOL};
use crate::rng::trial_rng;

/// Ciphertexts with overlap at or below this are orthogonal.
pub const ORTHOGONAL_TOL: f64 = 1e-12;
/// A decryption overlap must be this close to 1.
pub const DECRYPT_TOL: f64 = 1e-10;

const MAX_CODEWORD_LEN: usize = 4096;
const ORTHOGONALITY_SAMPLES: u64 = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "u8", try_from = "u8")]
pub enum Bit {
    Zero,
    One,
}

impl Bit {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Bit::One
        } else {
            Bit::Zero
        }
    }

    pub fn is_one(self) -> bool {
        self == Bit::One
    }

    pub fn flip(self) -> Self {
        Self::from_bool(!self.is_one())
    }
}

impl From<Bit> for u8 {
    fn from(b: Bit) -> u8 {
        b.is_one() as u8
    }
}

impl TryFrom<u8> for Bit {
    type Error = Error;

    fn try_from(v: u8) -> Result<Self> {
        match v {
            0 => Ok(Bit::Zero),
            1 => Ok(Bit::One),
            _ => Err(Error::param("bit", format!("{v} is not 0 or 1"))),
        }
    }
}

impl fmt::Display for Bit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", u8::from(*self))
    }
}

/// The published part of a deterministic scheme: the key family and the
/// two encryption unitaries.
#[derive(Debug, Clone)]
pub struct SchemeSpec {
    family: KeyFamily,
    u0: Operator,
    u1: Operator,
    orthogonal: bool,
}

impl SchemeSpec {
    pub fn new(family: KeyFamily, u0: Operator, u1: Operator) -> Result<Self> {
        let d = family.register_dim();
        for (name, u) in [("u0", &u0), ("u1", &u1)] {
            if u.dim() != d {
                return Err(Error::param(name, format!("dimension {} differs from register dim {d}", u.dim())));
            }
            if !u.is_unitary(FLAG_TOL) {
                return Err(Error::param(name, "operator is not unitary"));
            }
        }
        let mut spec = Self {
            family,
            u0,
            u1,
            orthogonal: false,
        };
        spec.orthogonal = spec.max_ciphertext_overlap()? <= ORTHOGONAL_TOL;
        Ok(spec)
    }

    /// `Û₀ = I`, `Û₁` = rotation by π/2 in the span of `|0⟩, |1⟩`
    /// (`|0⟩→|1⟩`, `|1⟩→−|0⟩`). Orthogonal for every real-amplitude key state.
    pub fn standard(family: KeyFamily) -> Result<Self> {
        Self::tilted(family, std::f64::consts::FRAC_PI_2)
    }

    /// `Û₁` = rotation by `angle`; real key states then give `λ = |cos angle|`.
    pub fn tilted(family: KeyFamily, angle: f64) -> Result<Self> {
        if !angle.is_finite() {
            return Err(Error::param("tilt", "angle must be finite"));
        }
        let d = family.register_dim();
        Self::new(family, Operator::identity(d), plane_rotation(d, angle))
    }

    pub fn family(&self) -> &KeyFamily {
        &self.family
    }

    pub fn register_dim(&self) -> usize {
        self.family.register_dim()
    }

    pub fn u0(&self) -> &Operator {
        &self.u0
    }

    pub fn u1(&self) -> &Operator {
        &self.u1
    }

    /// Whether `|⟨Φ_{k,0}|Φ_{k,1}⟩| ≤ 1e-12` for every key checked
    /// (all keys for small families, a fixed sample otherwise).
    pub fn is_orthogonal(&self) -> bool {
        self.orthogonal
    }

    pub fn unitary(&self, b: Bit) -> &Operator {
        match b {
            Bit::Zero => &self.u0,
            Bit::One => &self.u1,
        }
    }

    /// `|⟨Φ_{k,0}|Φ_{k,1}⟩|` for one public key.
    pub fn ciphertext_overlap(&self, pk: &PublicKeyState) -> Result<f64> {
        let c0 = encrypt_bit(self, pk, Bit::Zero)?;
        let c1 = encrypt_bit(self, pk, Bit::One)?;
        Ok(c0.state.overlap(&c1.state))
    }

    fn max_ciphertext_overlap(&self) -> Result<f64> {
        let states = match self.family.all_states() {
            Ok(states) => states,
            Err(Error::SimulationSize { .. }) => {
                let spec = self.family.spec();
                (0..ORTHOGONALITY_SAMPLES)
                    .map(|i| {
                        let key = crate::keys::sample_private_key(spec, &mut trial_rng(0x6f72_7468, i));
                        Ok(self.family.public_key_state(&key)?.state().clone())
                    })
                    .collect::<Result<_>>()?
            }
            Err(e) => return Err(e),
        };
        let mut worst: f64 = 0.0;
        for s in &states {
            let c0 = self.u0.apply(s)?;
            let c1 = self.u1.apply(s)?;
            worst = worst.max(c0.overlap(&c1));
        }
        Ok(worst)
    }
}

fn plane_rotation(d: usize, angle: f64) -> Operator {
    let mut u = Operator::identity(d);
    let (s, c) = angle.sin_cos();
    u.set(0, 0, C64::new(c, 0.0));
    u.set(0, 1, C64::new(-s, 0.0));
    u.set(1, 0, C64::new(s, 0.0));
    u.set(1, 1, C64::new(c, 0.0));
    u
}

/// A ciphertext state. Carries no plaintext or key information.
#[derive(Debug, Clone, PartialEq)]
pub struct Ciphertext {
    state: StateVector,
}

impl Ciphertext {
    pub fn new(state: StateVector) -> Result<Self> {
        if !state.is_normalized() {
            return Err(Error::Precondition("ciphertext state is not normalized".into()));
        }
        Ok(Self { state })
    }

    pub fn state(&self) -> &StateVector {
        &self.state
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CompoundCiphertext {
    parts: Vec<Ciphertext>,
}

impl CompoundCiphertext {
    pub fn new(parts: Vec<Ciphertext>) -> Result<Self> {
        let Some(first) = parts.first() else {
            return Err(Error::param("parts", "compound ciphertext needs at least one part"));
        };
        let d = first.state.dim();
        if parts.iter().any(|p| p.state.dim() != d) {
            return Err(Error::Layout("compound ciphertext parts differ in dimension".into()));
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[Ciphertext] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

/// An `s`-bit string whose Hamming-weight parity is the encoded plaintext.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Codeword {
    bits: Vec<bool>,
}

impl Codeword {
    pub fn from_bits(bits: Vec<bool>) -> Result<Self> {
        if bits.is_empty() || bits.len() > MAX_CODEWORD_LEN {
            return Err(Error::param(
                "codeword_len",
                format!("must be in 1..={MAX_CODEWORD_LEN}"),
            ));
        }
        Ok(Self { bits })
    }

    pub fn zeros(len: usize) -> Result<Self> {
        Self::from_bits(vec![false; len])
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

    pub fn weight(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn parity(&self) -> Bit {
        Bit::from_bool(self.weight() % 2 == 1)
    }
}

impl FromStr for Codeword {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::param("codeword", format!("unexpected character {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_bits(bits)
    }
}

impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// `|Φ_{k,b}⟩ = Û_b |Ψ_k⟩`.
pub fn encrypt_bit(spec: &SchemeSpec, pk: &PublicKeyState, b: Bit) -> Result<Ciphertext> {
    let state = spec.unitary(b).apply(pk.state())?;
    Ok(Ciphertext { state })
}

/// Uniform over the `2^{s−1}` strings of length `s` with weight parity `b`.
pub fn sample_codeword<R: Rng + ?Sized>(len: usize, b: Bit, rng: &mut R) -> Result<Codeword> {
    if len == 0 || len > MAX_CODEWORD_LEN {
        return Err(Error::param("codeword_len", format!("must be in 1..={MAX_CODEWORD_LEN}")));
    }
    let mut bits: Vec<bool> = (0..len - 1).map(|_| rng.random::<bool>()).collect();
    let free_parity = bits.iter().filter(|&&x| x).count() % 2 == 1;
    bits.push(free_parity != b.is_one());
    Ok(Codeword { bits })
}

/// Encrypts each codeword bit under the matching public key.
pub fn encrypt_codeword(spec: &SchemeSpec, pks: &[PublicKeyState], w: &Codeword) -> Result<CompoundCiphertext> {
    if pks.len() != w.len() {
        return Err(Error::param(
            "public_keys",
            format!("{} public keys for a codeword of length {}", pks.len(), w.len()),
        ));
    }
    let parts = pks
        .iter()
        .zip(w.bits())
        .map(|(pk, &wi)| encrypt_bit(spec, pk, Bit::from_bool(wi)))
        .collect::<Result<Vec<_>>>()?;
    CompoundCiphertext::new(parts)
}

/// Randomized encryption of `b` with `s = pks.len()`. The codeword is
/// returned for the test harness only.
pub fn encrypt_randomized<R: Rng + ?Sized>(
    spec: &SchemeSpec,
    pks: &[PublicKeyState],
    b: Bit,
    rng: &mut R,
) -> Result<(CompoundCiphertext, Codeword)> {
    if pks.is_empty() {
        return Err(Error::param("public_keys", "need at least one public key"));
    }
    let w = sample_codeword(pks.len(), b, rng)?;
    let ct = encrypt_codeword(spec, pks, &w)?;
    Ok((ct, w))
}

/// Perfect decryption with the private keys: each part is matched against
/// `Û₀|Ψ_kᵢ⟩` and `Û₁|Ψ_kᵢ⟩`, and the plaintext is the parity of the
/// recovered codeword. Stands in for the receiver's measurement, which is
/// deterministic when the two ciphertexts are orthogonal.
pub fn decrypt_randomized(spec: &SchemeSpec, keys: &[PrivateKey], ct: &CompoundCiphertext) -> Result<Bit> {
    if !spec.is_orthogonal() {
        return Err(Error::UnsupportedMode(
            "decryption requires orthogonal ciphertexts (perfect-decryption regime)".into(),
        ));
    }
    if keys.len() != ct.len() {
        return Err(Error::param(
            "keys",
            format!("{} private keys for {} ciphertext parts", keys.len(), ct.len()),
        ));
    }
    let mut parity = false;
    for (i, (key, part)) in keys.iter().zip(ct.parts()).enumerate() {
        let pk = spec.family().public_key_state(key)?;
        let near_one = |b| -> Result<bool> {
            let reference = encrypt_bit(spec, &pk, b)?;
            Ok(reference.state.overlap(&part.state) >= 1.0 - DECRYPT_TOL)
        };
        match (near_one(Bit::Zero)?, near_one(Bit::One)?) {
            (true, false) => {}
            (false, true) => parity = !parity,
            _ => return Err(Error::CorruptedCiphertext { part: i }),
        }
    }
    Ok(Bit::from_bool(parity))
}
