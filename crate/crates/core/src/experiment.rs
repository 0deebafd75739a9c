//! Reproducible experiments: configuration, Monte Carlo harness, reports.
//!
//! Trial `i` of a run always draws from `trial_rng(master_seed, i)`, and
//! trial results are collected in index order, so a results payload depends
//! only on the configuration, never on the thread count.

use std::fs::File;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::adversary::{
    build_discrimination_instance, helstrom_success, symmetry_attack_success, AttackMode, AttackResources,
    CompoundAttack, ForwardSearchAttack, TrialRecord,
};
use crate::analysis::{
    p_success_closed, p_success_conditional, s_min_simple, s_min_tight, SecurityThreshold, SuccessTable,
    MAX_SUM_LEN,
};
use crate::error::{Error, Result};
use crate::keys::{holevo_check, sample_private_key, FamilyKind, KeyFamily, KeyFamilySpec, PublicKeyState};
use crate::linalg::{StateVector, C64};
use crate::rng::{trial_rng, TrialRng};
use crate::scheme::{encrypt_bit, encrypt_codeword, encrypt_randomized, Bit, Codeword, SchemeSpec};
use crate::symtest::{q_closed_form, Outcome, SymmetryTest};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
pub const MAX_TRIALS: u64 = 1_000_000_000;

/// Label attached to every codeword-length recommendation.
pub const SMIN_GUARANTEE: &str = "sufficient against the symmetry-test attack";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Symtest,
    Attack,
    Compound,
    Helstrom,
    Psuccess,
    Smin,
    Keycheck,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyChoice {
    Rotation,
    Random,
}

/// Command-specific parameters. Unset fields take the defaults listed in
/// the README; every set field is range-checked by [`RunConfig::validate`].
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Parameters {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilyChoice>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family_seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub key_bits: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub register_dim: Option<usize>,
    /// `T`, public-key copies per key.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub copies_t: Option<usize>,
    /// `N`, registers of a standalone symmetry test.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub copies: Option<usize>,
    /// `λ`, overlap of a standalone symmetry test.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub overlap: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub codeword_len: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mode: Option<AttackMode>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub plaintext: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prior: Option<f64>,
    /// Rotation angle of `Û₁`; `π/2` gives orthogonal ciphertexts.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tilt: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub overlap_bound: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub holevo_margin: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub command: Command,
    #[serde(default)]
    pub parameters: Parameters,
    pub master_seed: u64,
    #[serde(default)]
    pub trials: u64,
    #[serde(default = "default_format")]
    pub output_format: OutputFormat,
    /// `None` writes to standard output.
    #[serde(default)]
    pub output_path: Option<PathBuf>,
    /// Worker threads for trials; does not affect results.
    #[serde(default)]
    pub threads: Option<usize>,
}

fn default_format() -> OutputFormat {
    OutputFormat::Json
}

impl RunConfig {
    pub fn new(command: Command, master_seed: u64) -> Self {
        Self {
            command,
            parameters: Parameters::default(),
            master_seed,
            trials: 0,
            output_format: OutputFormat::Json,
            output_path: None,
            threads: None,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let config: Self = serde_json::from_str(text)?;
        config.validate()?;
        Ok(config)
    }

    /// Rejects out-of-domain parameters, naming the offending field.
    pub fn validate(&self) -> Result<()> {
        let p = &self.parameters;
        if self.trials > MAX_TRIALS {
            return Err(Error::param("trials", format!("must be <= {MAX_TRIALS}")));
        }
        if self.threads == Some(0) {
            return Err(Error::param("threads", "must be >= 1"));
        }
        if let Some(t) = p.copies_t {
            let min = if self.command == Command::Keycheck { 1 } else { 2 };
            if t < min {
                return Err(Error::param("copies_t", format!("must be >= {min}")));
            }
        }
        if p.copies == Some(0) {
            return Err(Error::param("copies", "must be >= 1"));
        }
        if let Some(l) = p.overlap {
            if !(0.0..=1.0).contains(&l) {
                return Err(Error::param("overlap", "must lie in [0, 1]"));
            }
        }
        if let Some(s) = p.codeword_len {
            if s == 0 || s > MAX_SUM_LEN {
                return Err(Error::param("codeword_len", format!("must be in 1..={MAX_SUM_LEN}")));
            }
        }
        if let Some(b) = p.plaintext {
            Bit::try_from(b).map_err(|_| Error::param("plaintext", "must be 0 or 1"))?;
        }
        if let Some(e) = p.epsilon {
            SecurityThreshold::new(e)?;
        }
        if let Some(prior) = p.prior {
            if !(0.0..=1.0).contains(&prior) {
                return Err(Error::param("prior", "must lie in [0, 1]"));
            }
        }
        if let Some(tilt) = p.tilt {
            if !(tilt > 0.0 && tilt <= std::f64::consts::FRAC_PI_2) {
                return Err(Error::param("tilt", "must lie in (0, pi/2]"));
            }
        }
        if p.register_dim.is_some_and(|d| d < 2) {
            return Err(Error::param("register_dim", "must be >= 2"));
        }
        match self.command {
            Command::Smin if p.epsilon.is_none() => Err(Error::param("epsilon", "required for smin")),
            Command::Attack | Command::Compound | Command::Helstrom | Command::Keycheck => {
                self.family_spec().map(|_| ())
            }
            Command::Symtest | Command::Psuccess | Command::Smin => Ok(()),
        }
    }

    fn copies_t(&self) -> usize {
        self.parameters.copies_t.unwrap_or(2)
    }

    fn family_spec(&self) -> Result<KeyFamilySpec> {
        let p = &self.parameters;
        let default_bits = if self.command == Command::Helstrom { 2 } else { 8 };
        let kind = match p.family.unwrap_or(FamilyChoice::Rotation) {
            FamilyChoice::Rotation => FamilyKind::Rotation,
            FamilyChoice::Random => FamilyKind::SeededRandom {
                seed: p.family_seed.unwrap_or(0),
            },
        };
        KeyFamilySpec::new(
            kind,
            p.key_bits.unwrap_or(default_bits),
            p.register_dim.unwrap_or(2),
            self.copies_t(),
            p.overlap_bound.unwrap_or(crate::keys::DEFAULT_OVERLAP_BOUND),
            p.holevo_margin.unwrap_or(crate::keys::DEFAULT_HOLEVO_MARGIN),
        )
    }

    fn scheme(&self) -> Result<SchemeSpec> {
        let family = KeyFamily::new(self.family_spec()?)?;
        match self.parameters.tilt {
            Some(angle) => SchemeSpec::tilted(family, angle),
            None => SchemeSpec::standard(family),
        }
    }

    fn plaintext(&self) -> Option<Bit> {
        self.parameters.plaintext.and_then(|b| Bit::try_from(b).ok())
    }
}

/// One results record: an ordered map from column name to value.
pub type Record = Map<String, Value>;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub config: RunConfig,
    pub results: Vec<Record>,
    pub version: String,
    /// Wall time in seconds.
    pub elapsed: f64,
}

impl ExperimentReport {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// The results array alone, serialized. Byte-identical across reruns of
    /// the same configuration.
    pub fn results_payload(&self) -> String {
        serde_json::to_string(&self.results).expect("records are plain json")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is plain json")
    }

    /// Header row from the first record, then one row per record.
    pub fn to_csv(&self) -> Result<String> {
        let mut writer = csv::Writer::from_writer(Vec::new());
        if let Some(first) = self.results.first() {
            writer.write_record(first.keys())?;
            for record in &self.results {
                writer.write_record(record.values().map(csv_cell))?;
            }
        }
        let bytes = writer.into_inner().map_err(|e| Error::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv of utf-8 cells"))
    }

    pub fn render(&self, format: OutputFormat) -> Result<String> {
        match format {
            OutputFormat::Json => Ok(self.to_json() + "\n"),
            OutputFormat::Csv => self.to_csv(),
        }
    }
}

fn csv_cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Writes the report to `path`, or to standard output when `path` is `None`.
pub fn emit(report: &ExperimentReport, format: OutputFormat, path: Option<&Path>) -> Result<()> {
    let text = report.render(format)?;
    match path {
        Some(p) => File::create(p)?.write_all(text.as_bytes())?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

/// Rounds to 12 significant digits; non-finite values become `null`.
pub fn number(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    let rounded: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    Value::from(rounded)
}

/// Empirical frequency of an event against its predicted probability.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BinomialStat {
    pub trials: u64,
    pub hits: u64,
    pub prediction: f64,
}

impl BinomialStat {
    pub fn frequency(&self) -> f64 {
        if self.trials == 0 {
            return f64::NAN;
        }
        self.hits as f64 / self.trials as f64
    }

    /// Binomial standard error at the predicted probability.
    pub fn std_error(&self) -> f64 {
        (self.prediction * (1.0 - self.prediction) / self.trials as f64).sqrt()
    }

    pub fn deviation(&self) -> f64 {
        (self.frequency() - self.prediction).abs()
    }

    /// Deviation in standard errors. A zero-variance prediction yields 0
    /// when matched exactly and infinity otherwise.
    pub fn sigma(&self) -> f64 {
        let se = self.std_error();
        let dev = self.deviation();
        if dev == 0.0 {
            0.0
        } else if se == 0.0 {
            f64::INFINITY
        } else {
            dev / se
        }
    }

    pub fn within(&self, sigmas: f64) -> bool {
        self.sigma() <= sigmas
    }

    fn write_into(&self, rec: &mut Record, freq_name: &str) {
        rec.insert("trials".into(), self.trials.into());
        rec.insert("hits".into(), self.hits.into());
        rec.insert(freq_name.into(), number(self.frequency()));
        rec.insert("prediction".into(), number(self.prediction));
        rec.insert("std_error".into(), number(self.std_error()));
        rec.insert("deviation".into(), number(self.deviation()));
        rec.insert("sigma".into(), number(self.sigma()));
    }
}

/// Runs `trials` independent trials, trial `i` seeded from
/// `(master_seed, i)`, and returns the results in index order.
pub fn run_trials<T, F>(master_seed: u64, trials: u64, first_index: u64, trial: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(u64, &mut TrialRng) -> Result<T> + Sync,
{
    (first_index..first_index + trials)
        .into_par_iter()
        .map(|i| trial(i, &mut trial_rng(master_seed, i)))
        .collect()
}

fn fresh_public_key<R: Rng + ?Sized>(spec: &SchemeSpec, rng: &mut R) -> Result<PublicKeyState> {
    let key = sample_private_key(spec.family().spec(), rng);
    spec.family().public_key_state(&key)
}

/// One single-bit forward search: fresh key, encryption of `b`, attack with
/// the remaining `T − 1` public-key copies.
pub fn forward_search_trial(
    spec: &SchemeSpec,
    attack: &ForwardSearchAttack,
    b: Bit,
    index: u64,
    rng: &mut TrialRng,
) -> Result<TrialRecord> {
    let pk = fresh_public_key(spec, rng)?;
    let ct = encrypt_bit(spec, &pk, b)?;
    let copies = vec![pk; attack.resources().copies() - 1];
    let outcome = attack.measure(&ct, &copies, rng)?;
    let guess = match outcome.outcome {
        Outcome::Zero => Bit::Zero,
        Outcome::Nonzero => Bit::One,
    };
    Ok(TrialRecord {
        true_plaintext: b,
        guess,
        per_bit_outcomes: vec![outcome],
        seed_index: index,
    })
}

/// One compound trial: `s` fresh keys, randomized encryption of `b`, and
/// the compound attack. `forced` replaces the random codeword.
#[allow(clippy::too_many_arguments)]
pub fn compound_trial(
    spec: &SchemeSpec,
    attack: &CompoundAttack,
    copies_t: usize,
    len: usize,
    b: Bit,
    forced: Option<&Codeword>,
    index: u64,
    rng: &mut TrialRng,
) -> Result<TrialRecord> {
    let pks = (0..len)
        .map(|_| fresh_public_key(spec, rng))
        .collect::<Result<Vec<_>>>()?;
    let (ct, true_plaintext) = match forced {
        Some(w) => (encrypt_codeword(spec, &pks, w)?, w.parity()),
        None => (encrypt_randomized(spec, &pks, b, rng)?.0, b),
    };
    let copies: Vec<Vec<PublicKeyState>> = pks.into_iter().map(|pk| vec![pk; copies_t - 1]).collect();
    let g = attack.attack(&ct, &copies, rng)?;
    Ok(TrialRecord {
        true_plaintext,
        guess: g.guess,
        per_bit_outcomes: g.per_bit_outcomes,
        seed_index: index,
    })
}

/// Executes a validated configuration.
pub fn run(config: &RunConfig) -> Result<ExperimentReport> {
    config.validate()?;
    let start = Instant::now();
    let results = match config.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::param("threads", e.to_string()))?
            .install(|| dispatch(config))?,
        None => dispatch(config)?,
    };
    Ok(ExperimentReport {
        config: config.clone(),
        results,
        version: VERSION.to_string(),
        elapsed: start.elapsed().as_secs_f64(),
    })
}

fn dispatch(config: &RunConfig) -> Result<Vec<Record>> {
    match config.command {
        Command::Symtest => run_symtest(config),
        Command::Attack => run_attack(config),
        Command::Compound => run_compound(config),
        Command::Helstrom => run_helstrom(config),
        Command::Psuccess => run_psuccess(config),
        Command::Smin => run_smin(config),
        Command::Keycheck => run_keycheck(config),
    }
}

fn run_symtest(config: &RunConfig) -> Result<Vec<Record>> {
    let p = &config.parameters;
    let n = p.copies.unwrap_or(2);
    let d = p.register_dim.unwrap_or(2);
    let lambda = p.overlap.unwrap_or(0.0);
    let test = SymmetryTest::new(n, d)?;
    if config.trials == 0 {
        return Ok(Vec::new());
    }
    let chi = StateVector::basis(d, 0);
    let mut xi_amps = vec![C64::new(0.0, 0.0); d];
    xi_amps[0] = C64::new(lambda, 0.0);
    xi_amps[1] = C64::new((1.0 - lambda * lambda).max(0.0).sqrt(), 0.0);
    let xi = StateVector::new(xi_amps)?;
    let realized = xi.overlap(&chi).min(1.0);
    let exact = test.p_zero_exact(&xi, &chi)?;

    let zeros = run_trials(config.master_seed, config.trials, 0, |_, rng| {
        Ok(test.run(&xi, &chi, rng)?.outcome == Outcome::Zero)
    })?
    .into_iter()
    .filter(|&z| z)
    .count() as u64;

    let stat = BinomialStat {
        trials: config.trials,
        hits: zeros,
        prediction: q_closed_form(n, realized)?,
    };
    let mut rec = Record::new();
    rec.insert("copies".into(), n.into());
    rec.insert("register_dim".into(), d.into());
    rec.insert("overlap".into(), number(realized));
    rec.insert("p_zero_exact".into(), number(exact));
    stat.write_into(&mut rec, "p_zero_empirical");
    Ok(vec![rec])
}

fn run_attack(config: &RunConfig) -> Result<Vec<Record>> {
    let spec = config.scheme()?;
    let t = config.copies_t();
    let attack = ForwardSearchAttack::new(&spec, AttackResources::new(t)?)?;
    if config.trials == 0 {
        return Ok(Vec::new());
    }
    let plaintexts = match config.plaintext() {
        Some(b) => vec![b],
        None => vec![Bit::Zero, Bit::One],
    };
    let mut out = Vec::new();
    for b in plaintexts {
        let first = u8::from(b) as u64 * config.trials;
        let records = run_trials(config.master_seed, config.trials, first, |i, rng| {
            forward_search_trial(&spec, &attack, b, i, rng)
        })?;
        let errors = records.iter().filter(|r| !r.success()).count() as u64;
        // Exact error probability given the keys actually drawn.
        let expected: f64 = records
            .iter()
            .map(|r| {
                let p0 = r.per_bit_outcomes[0].p_zero;
                if b.is_one() {
                    p0
                } else {
                    1.0 - p0
                }
            })
            .sum::<f64>()
            / config.trials as f64;
        let stat = BinomialStat {
            trials: config.trials,
            hits: errors,
            prediction: expected,
        };
        let mut rec = Record::new();
        rec.insert("plaintext".into(), u8::from(b).into());
        rec.insert("copies_t".into(), t.into());
        let closed = match (b, spec.is_orthogonal()) {
            (Bit::Zero, _) => number(0.0),
            (Bit::One, true) => number(q_closed_form(t, 0.0)?),
            (Bit::One, false) => Value::Null,
        };
        rec.insert("closed_form".into(), closed);
        stat.write_into(&mut rec, "error_rate");
        out.push(rec);
    }
    Ok(out)
}

fn run_compound(config: &RunConfig) -> Result<Vec<Record>> {
    let spec = config.scheme()?;
    let t = config.copies_t();
    let len = config.parameters.codeword_len.unwrap_or(4);
    let mode = config.parameters.mode.unwrap_or(AttackMode::Bernoulli);
    let attack = CompoundAttack::new(&spec, AttackResources::new(t)?, mode)?;
    if config.trials == 0 {
        return Ok(Vec::new());
    }
    let fixed = config.plaintext();
    let records = run_trials(config.master_seed, config.trials, 0, |i, rng| {
        let b = fixed.unwrap_or_else(|| Bit::from_bool(rng.random()));
        compound_trial(&spec, &attack, t, len, b, None, i, rng)
    })?;

    let mut out = Vec::new();
    let mut row = |label: &str, filter: Option<Bit>, prediction: f64| {
        let subset: Vec<_> = records
            .iter()
            .filter(|r| filter.is_none_or(|b| r.true_plaintext == b))
            .collect();
        if subset.is_empty() {
            return;
        }
        let stat = BinomialStat {
            trials: subset.len() as u64,
            hits: subset.iter().filter(|r| r.success()).count() as u64,
            prediction,
        };
        let mut rec = Record::new();
        rec.insert("plaintext".into(), label.into());
        rec.insert("copies_t".into(), t.into());
        rec.insert("codeword_len".into(), len.into());
        rec.insert("mode".into(), serde_json::to_value(mode).expect("enum"));
        stat.write_into(&mut rec, "success_rate");
        out.push(rec);
    };
    row("0", Some(Bit::Zero), p_success_conditional(t, len, Bit::Zero)?);
    row("1", Some(Bit::One), p_success_conditional(t, len, Bit::One)?);
    if fixed.is_none() {
        row("random", None, p_success_closed(t, len)?);
    }
    Ok(out)
}

fn run_helstrom(config: &RunConfig) -> Result<Vec<Record>> {
    let spec = config.scheme()?;
    let t = config.copies_t();
    let prior = config.parameters.prior.unwrap_or(0.5);
    let inst = build_discrimination_instance(&spec, t, prior)?;
    let helstrom = helstrom_success(&inst)?;
    let attack_exact = symmetry_attack_success(&spec, t, prior)?;
    let mut rec = Record::new();
    rec.insert("key_bits".into(), spec.family().spec().key_bits.into());
    rec.insert("copies_t".into(), t.into());
    rec.insert("prior".into(), number(prior));
    rec.insert("dim".into(), inst.dim().into());
    rec.insert("helstrom_success".into(), number(helstrom));
    rec.insert("symmetry_attack_exact".into(), number(attack_exact));
    rec.insert("gap".into(), number(helstrom - attack_exact));
    if config.trials > 0 {
        let attack = ForwardSearchAttack::new(&spec, AttackResources::new(t)?)?;
        let wins = run_trials(config.master_seed, config.trials, 0, |i, rng| {
            let b = Bit::from_bool(rng.random::<f64>() >= prior);
            Ok(forward_search_trial(&spec, &attack, b, i, rng)?.success())
        })?
        .into_iter()
        .filter(|&w| w)
        .count() as u64;
        let stat = BinomialStat {
            trials: config.trials,
            hits: wins,
            prediction: attack_exact,
        };
        stat.write_into(&mut rec, "attack_success_empirical");
        let excess = (stat.frequency() - helstrom) / stat.std_error();
        rec.insert("sigma_above_helstrom".into(), number(excess));
    }
    Ok(vec![rec])
}

fn run_psuccess(config: &RunConfig) -> Result<Vec<Record>> {
    let table = SuccessTable::build(config.copies_t(), config.parameters.codeword_len.unwrap_or(10))?;
    Ok(table
        .rows
        .iter()
        .map(|row| {
            let mut rec = Record::new();
            rec.insert("s".into(), row.s.into());
            rec.insert("p_b0".into(), number(row.p_b0));
            rec.insert("p_b1".into(), number(row.p_b1));
            rec.insert("p_avg".into(), number(row.p_avg));
            rec.insert("closed_form".into(), number(row.closed_form));
            rec.insert("deviation".into(), number((row.p_avg - row.closed_form).abs()));
            rec
        })
        .collect())
}

fn run_smin(config: &RunConfig) -> Result<Vec<Record>> {
    let t = config.copies_t();
    let eps = SecurityThreshold::new(config.parameters.epsilon.expect("validated"))?;
    let tight = s_min_tight(t, eps)?;
    let simple = s_min_simple(t, eps)?;
    let p_at_tight = p_success_closed(t, tight)?;
    let mut rec = Record::new();
    rec.insert("copies_t".into(), t.into());
    rec.insert("epsilon".into(), number(eps.epsilon()));
    rec.insert("tight".into(), tight.into());
    rec.insert("simple".into(), simple.into());
    rec.insert("p_success_at_tight".into(), number(p_at_tight));
    rec.insert(
        "verified".into(),
        (p_at_tight - 0.5 <= eps.epsilon() && simple >= tight).into(),
    );
    rec.insert("guarantee".into(), SMIN_GUARANTEE.into());
    Ok(vec![rec])
}

fn run_keycheck(config: &RunConfig) -> Result<Vec<Record>> {
    let spec = config.family_spec()?;
    let holevo = holevo_check(&spec);
    let family = KeyFamily::new(spec.clone())?;
    let bound = family.pairwise_overlap_bound()?;
    let mut rec = Record::new();
    rec.insert("key_bits".into(), spec.key_bits.into());
    rec.insert("register_dim".into(), spec.register_dim.into());
    rec.insert("copies_t".into(), spec.max_copies.into());
    rec.insert("overlap_max".into(), number(bound.value));
    rec.insert("overlap_exhaustive".into(), bound.exhaustive.into());
    rec.insert("overlap_bound".into(), number(spec.overlap_bound));
    rec.insert("overlap_ok".into(), (bound.value < spec.overlap_bound).into());
    rec.insert("holevo_ratio".into(), number(holevo.ratio));
    rec.insert("holevo_margin".into(), number(holevo.margin));
    rec.insert("holevo_pass".into(), holevo.pass.into());
    Ok(vec![rec])
}
