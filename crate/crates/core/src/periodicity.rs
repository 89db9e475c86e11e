//! Eventual-period detection with window certificates.
//!
//! Every value of a subtraction-game sequence is a function of the previous
//! `max(S)` values. So if `seq[q + p] == seq[q]` holds on one full window
//! `l <= q < l + max(S)`, induction over the recurrence gives it for every
//! `q >= l`. A [`PeriodicityCertificate`] records such a window.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::game::{grundy_sequence, outcome_sequence, GrundySequence, OutcomeSequence};
use crate::set::SubtractionSet;

/// Default cap on the sequence length examined by [`find_period`].
pub const DEFAULT_HORIZON_CAP: usize = 1 << 20;

/// Read access to a finite symbol sequence.
pub trait Symbols {
    fn len(&self) -> usize;
    fn symbol(&self, position: usize) -> u32;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl Symbols for OutcomeSequence {
    fn len(&self) -> usize {
        OutcomeSequence::len(self)
    }

    #[inline]
    fn symbol(&self, position: usize) -> u32 {
        self.bit(position) as u32
    }
}

impl Symbols for GrundySequence {
    fn len(&self) -> usize {
        GrundySequence::len(self)
    }

    #[inline]
    fn symbol(&self, position: usize) -> u32 {
        self.values()[position]
    }
}

impl Symbols for [u8] {
    fn len(&self) -> usize {
        <[u8]>::len(self)
    }

    fn symbol(&self, position: usize) -> u32 {
        self[position] as u32
    }
}

impl Symbols for [u32] {
    fn len(&self) -> usize {
        <[u32]>::len(self)
    }

    fn symbol(&self, position: usize) -> u32 {
        self[position]
    }
}

/// A claimed `(preperiod, period)` pair together with the window length that
/// makes it checkable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct PeriodicityCertificate {
    pub preperiod: usize,
    pub period: usize,
    pub window: usize,
    /// Sequence length available when the certificate was produced.
    pub horizon: usize,
}

impl PeriodicityCertificate {
    /// Sequence length needed to check the window.
    pub fn required_len(&self) -> usize {
        self.preperiod + self.period + self.window
    }
}

/// Checks the window condition `seq[q + p] == seq[q]` for
/// `l <= q < l + window`.
///
/// A sequence that is too short is an error, not `false`.
pub fn verify_certificate<S: Symbols + ?Sized>(
    seq: &S,
    cert: &PeriodicityCertificate,
) -> Result<bool> {
    if cert.period == 0 {
        return Ok(false);
    }
    let needed = cert.required_len();
    if seq.len() < needed {
        return Err(Error::SequenceTooShort { len: seq.len(), needed });
    }
    let l = cert.preperiod;
    Ok((l..l + cert.window).all(|q| seq.symbol(q) == seq.symbol(q + cert.period)))
}

/// Finds the certificate with the smallest period and, for that period, the
/// smallest preperiod that can be verified within `seq`.
///
/// For each candidate period the sequence is compared with its shift from
/// the tail backwards. The first mismatch found fixes the least preperiod
/// consistent with the data. Returns `None` when no pair fits in the
/// available length, which means the horizon is too small.
pub fn detect_period<S: Symbols + ?Sized>(
    seq: &S,
    window: usize,
) -> Result<Option<PeriodicityCertificate>> {
    if window == 0 {
        return Err(Error::ZeroWindow);
    }
    let len = seq.len();
    if len < window + 1 {
        return Err(Error::SequenceTooShort { len, needed: window + 1 });
    }
    for period in 1..=len - window {
        // largest preperiod whose window still fits
        let latest = len - period - window;
        let mut q = len - period;
        let mut preperiod = 0;
        while q > 0 {
            q -= 1;
            if seq.symbol(q) != seq.symbol(q + period) {
                preperiod = q + 1;
                break;
            }
        }
        if preperiod <= latest {
            return Ok(Some(PeriodicityCertificate {
                preperiod,
                period,
                window,
                horizon: len,
            }));
        }
    }
    Ok(None)
}

/// Iterative-deepening schedule for [`find_period`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HorizonPolicy {
    /// First horizon tried; `None` means `4·max(S) + 64`.
    pub start: Option<usize>,
    /// Largest horizon tried before giving up.
    pub cap: usize,
}

impl Default for HorizonPolicy {
    fn default() -> Self {
        Self { start: None, cap: DEFAULT_HORIZON_CAP }
    }
}

impl HorizonPolicy {
    pub fn with_cap(cap: usize) -> Self {
        Self { start: None, cap }
    }

    pub fn start_for(&self, set: &SubtractionSet) -> usize {
        self.start.unwrap_or(4 * set.window() + 64)
    }
}

/// A certified period together with the symbols it describes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PeriodReport {
    pub set: SubtractionSet,
    pub certificate: PeriodicityCertificate,
    /// Symbols `0..preperiod + period`: the prefix followed by one block.
    symbols: Vec<u32>,
    pub notation: String,
}

impl PeriodReport {
    fn new<S: Symbols + ?Sized>(set: SubtractionSet, seq: &S, cert: PeriodicityCertificate) -> Self {
        let symbols = (0..cert.preperiod + cert.period).map(|q| seq.symbol(q)).collect();
        let mut report = Self { set, certificate: cert, symbols, notation: String::new() };
        report.notation = format_linear_period(&report);
        report
    }

    pub fn preperiod(&self) -> usize {
        self.certificate.preperiod
    }

    pub fn period(&self) -> usize {
        self.certificate.period
    }

    pub fn horizon(&self) -> usize {
        self.certificate.horizon
    }

    pub fn symbols(&self) -> &[u32] {
        &self.symbols
    }

    pub fn prefix(&self) -> &[u32] {
        &self.symbols[..self.certificate.preperiod]
    }

    /// The `period` symbols starting at the preperiod.
    pub fn block(&self) -> &[u32] {
        &self.symbols[self.certificate.preperiod..]
    }

    pub fn block_string(&self) -> String {
        render(self.block())
    }

    pub fn prefix_string(&self) -> String {
        render(self.prefix())
    }

    /// Symbol at any position, using the period past the stored prefix.
    pub fn symbol_at(&self, position: usize) -> u32 {
        let (l, p) = (self.certificate.preperiod, self.certificate.period);
        if position < l {
            self.symbols[position]
        } else {
            self.symbols[l + (position - l) % p]
        }
    }
}

fn render(symbols: &[u32]) -> String {
    if symbols.iter().all(|&s| s < 10) {
        symbols.iter().map(|&s| char::from_digit(s, 10).unwrap()).collect()
    } else {
        let mut out = String::new();
        for (i, s) in symbols.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            write!(out, "{s}").unwrap();
        }
        out
    }
}

/// Renders `PREFIX(BLOCK)`; an empty prefix gives `(BLOCK)`.
pub fn format_linear_period(report: &PeriodReport) -> String {
    format!("{}({})", report.prefix_string(), report.block_string())
}

fn deepen<S, F>(set: &SubtractionSet, policy: &HorizonPolicy, compute: F) -> Result<PeriodReport>
where
    S: Symbols,
    F: Fn(usize) -> Result<S>,
{
    let start = policy.start_for(set);
    if policy.cap < start {
        return Err(Error::HorizonCapTooSmall { cap: policy.cap, start });
    }
    let mut horizon = start;
    loop {
        let seq = compute(horizon)?;
        if let Some(cert) = detect_period(&seq, set.window())? {
            return Ok(PeriodReport::new(set.clone(), &seq, cert));
        }
        if horizon >= policy.cap {
            return Err(Error::NoCertificate { cap: policy.cap });
        }
        horizon = horizon.saturating_mul(2).min(policy.cap);
    }
}

/// Certified minimal period of the outcome sequence of `set`.
pub fn find_period(set: &SubtractionSet, policy: &HorizonPolicy) -> Result<PeriodReport> {
    deepen(set, policy, |n| outcome_sequence(set, n))
}

/// Certified minimal period of the Grundy sequence of `set`.
pub fn find_grundy_period(set: &SubtractionSet, policy: &HorizonPolicy) -> Result<PeriodReport> {
    deepen(set, policy, |n| grundy_sequence(set, n))
}

/// All-pairs scanner kept as a test oracle.
pub mod reference {
    use super::{PeriodicityCertificate, Symbols};

    /// Tries every period from 1 and every preperiod from 0, checking each
    /// window position directly.
    pub fn naive_detect<S: Symbols + ?Sized>(
        seq: &S,
        window: usize,
    ) -> Option<PeriodicityCertificate> {
        let len = seq.len();
        for period in 1..len {
            for preperiod in 0.. {
                if preperiod + period + window > len {
                    break;
                }
                let ok = (preperiod..preperiod + window)
                    .all(|q| seq.symbol(q) == seq.symbol(q + period));
                if ok {
                    return Some(PeriodicityCertificate { preperiod, period, window, horizon: len });
                }
            }
        }
        None
    }
}
