//! Golay complementary sequence pairs and their chip-level waveforms.
//!
//! Two length-L unimodular sequences x, y form a complementary pair when the
//! sum of their aperiodic autocorrelations is an impulse: C_x(k) + C_y(k) =
//! 2L·δ(k). Pairs are generated by the doubling recursion a' = [a b],
//! b' = [a −b] from ([1], [1]), so every power-of-two length is available and
//! complementarity holds exactly in integer arithmetic.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Largest supported pair length exponent (L = 2^20 ≈ 1M chips).
pub const MAX_LOG2_LEN: u32 = 20;

/// A Golay complementary pair of ±1 sequences.
///
/// Construction only enforces shape (equal lengths, ±1 entries); use
/// [`verify_complementary`] or [`GolayPair::verify`] for the complementarity
/// check itself, so that deliberately corrupted pairs can be diagnosed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GolayPair {
    x: Vec<i32>,
    y: Vec<i32>,
}

impl GolayPair {
    /// Generate the doubling-recursion pair of length 2^log2_len.
    pub fn generate(log2_len: u32) -> Result<Self> {
        if log2_len > MAX_LOG2_LEN {
            return Err(Error::LengthOverflow(log2_len));
        }
        let mut x = vec![1];
        let mut y = vec![1];
        for _ in 0..log2_len {
            let mut nx = x.clone();
            nx.extend_from_slice(&y);
            let mut ny = x;
            ny.extend(y.iter().map(|v| -v));
            x = nx;
            y = ny;
        }
        Ok(Self { x, y })
    }

    /// Build a pair from raw ±1 sequences of equal length.
    pub fn from_sequences(x: Vec<i32>, y: Vec<i32>) -> Result<Self> {
        if x.len() != y.len() {
            return Err(Error::MismatchedLengths(x.len(), y.len()));
        }
        if x.is_empty() {
            return Err(Error::EmptyCode);
        }
        if x.iter().chain(y.iter()).any(|&v| v != 1 && v != -1) {
            return Err(Error::NotUnimodular);
        }
        Ok(Self { x, y })
    }

    pub fn x(&self) -> &[i32] {
        &self.x
    }

    pub fn y(&self) -> &[i32] {
        &self.y
    }

    /// Pair length L in chips.
    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    /// Complementarity report for this pair.
    pub fn verify(&self) -> ComplementarityReport {
        verify_complementary(&self.x, &self.y).expect("pair lengths match by construction")
    }
}

/// Exact integer autocorrelation of a ±1 sequence at lag `k`.
///
/// Returns Σ_ℓ s(ℓ)·s(ℓ−k) with out-of-range terms zero; lags with |k| ≥ L
/// return 0 (finite support convention).
pub fn autocorrelation_exact(seq: &[i32], k: i64) -> i64 {
    let len = seq.len() as i64;
    if k.abs() >= len {
        return 0;
    }
    let k = k.unsigned_abs() as usize; // C(-k) = C(k) for real sequences
    seq[k..]
        .iter()
        .zip(seq.iter())
        .map(|(&a, &b)| i64::from(a) * i64::from(b))
        .sum()
}

/// Complex autocorrelation Σ_ℓ seq(ℓ)·conj(seq(ℓ−k)); 0 when |k| ≥ L.
pub fn autocorrelation(seq: &[Complex64], k: i64) -> Complex64 {
    cross_correlation(seq, seq, k)
}

/// Complex cross-correlation Σ_ℓ a(ℓ)·conj(b(ℓ−k)) with finite support.
pub fn cross_correlation(a: &[Complex64], b: &[Complex64], k: i64) -> Complex64 {
    let mut sum = Complex64::new(0.0, 0.0);
    for (idx, &av) in a.iter().enumerate() {
        let shifted = idx as i64 - k;
        if shifted >= 0 && (shifted as usize) < b.len() {
            sum += av * b[shifted as usize].conj();
        }
    }
    sum
}

/// Result of checking C_x(k) + C_y(k) = 2L·δ(k) over every lag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComplementarityReport {
    pub ok: bool,
    /// Worst absolute deviation from the ideal impulse, in integer units.
    pub max_abs_deviation: i64,
}

/// Check the complementarity identity for two raw ±1 sequences.
pub fn verify_complementary(x: &[i32], y: &[i32]) -> Result<ComplementarityReport> {
    if x.len() != y.len() {
        return Err(Error::MismatchedLengths(x.len(), y.len()));
    }
    if x.is_empty() {
        return Err(Error::EmptyCode);
    }
    let len = x.len() as i64;
    let mut max_abs_deviation = 0i64;
    for k in -(len - 1)..len {
        let target = if k == 0 { 2 * len } else { 0 };
        let sum = autocorrelation_exact(x, k) + autocorrelation_exact(y, k);
        max_abs_deviation = max_abs_deviation.max((sum - target).abs());
    }
    Ok(ComplementarityReport {
        ok: max_abs_deviation == 0,
        max_abs_deviation,
    })
}

/// Chip-level sampling parameters for a phase-coded waveform.
///
/// The baseband chip pulse is rectangular with unit energy, so in sample
/// units each chip contributes `samples_per_chip` samples of magnitude
/// 1/√samples_per_chip.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChipWaveform {
    /// Chip duration t_c in seconds.
    pub chip_duration: f64,
    pub samples_per_chip: usize,
}

impl ChipWaveform {
    pub fn rectangular(chip_duration: f64, samples_per_chip: usize) -> Self {
        Self {
            chip_duration,
            samples_per_chip,
        }
    }

    /// Total duration L·t_c of a length-L code under these parameters.
    pub fn duration(&self, code_len: usize) -> f64 {
        code_len as f64 * self.chip_duration
    }
}

/// Sample the piecewise-constant phase-coded waveform of `code`.
///
/// Sample energy (sum of squared magnitudes) equals the code length L.
pub fn sample_waveform(code: &[i32], cfg: &ChipWaveform) -> Result<Vec<Complex64>> {
    if code.is_empty() {
        return Err(Error::EmptyCode);
    }
    if cfg.samples_per_chip == 0 {
        return Err(Error::InvalidSampling);
    }
    let amp = 1.0 / (cfg.samples_per_chip as f64).sqrt();
    let mut out = Vec::with_capacity(code.len() * cfg.samples_per_chip);
    for &chip in code {
        let v = Complex64::new(f64::from(chip) * amp, 0.0);
        out.extend(std::iter::repeat(v).take(cfg.samples_per_chip));
    }
    Ok(out)
}
