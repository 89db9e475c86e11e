//! Outcome and Grundy sequences of a subtraction game under normal play.
//!
//! Position 0 is terminal, so it is a P-position. A position is an
//! N-position exactly when some move reaches a P-position.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::periodicity::{find_period, HorizonPolicy};
use crate::set::SubtractionSet;

const WORD: usize = 64;

/// Minimal excludant: the least natural number not produced by `values`.
pub fn mex<I: IntoIterator<Item = u32>>(values: I) -> u32 {
    let mut seen = Vec::new();
    for v in values {
        let v = v as usize;
        if v >= seen.len() {
            seen.resize(v + 1, false);
        }
        seen[v] = true;
    }
    seen.iter().position(|&b| !b).unwrap_or(seen.len()) as u32
}

/// Per-position outcome classes, packed 64 positions per word.
///
/// A set bit means N-position (the mover wins), a clear bit P-position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutcomeSequence {
    set: SubtractionSet,
    len: usize,
    words: Vec<u64>,
}

impl OutcomeSequence {
    pub fn set(&self) -> &SubtractionSet {
        &self.set
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// `true` for an N-position. Panics past the end.
    #[inline]
    pub fn is_n(&self, position: usize) -> bool {
        assert!(position < self.len, "position {position} out of range");
        (self.words[position / WORD] >> (position % WORD)) & 1 == 1
    }

    #[inline]
    pub fn is_p(&self, position: usize) -> bool {
        !self.is_n(position)
    }

    /// Outcome bit at `position`: 0 for P, 1 for N.
    #[inline]
    pub fn bit(&self, position: usize) -> u8 {
        self.is_n(position) as u8
    }

    pub fn bits(&self) -> impl Iterator<Item = u8> + '_ {
        (0..self.len).map(|p| self.bit(p))
    }

    /// The raw packed words; bits past `len` in the last word are zero.
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Renders as a `0`/`1` digit string.
    pub fn to_digits(&self) -> String {
        self.bits().map(|b| char::from(b'0' + b)).collect()
    }

    pub fn count_p(&self) -> usize {
        self.len - self.words.iter().map(|w| w.count_ones() as usize).sum::<usize>()
    }
}

/// Computes the outcome sequence for positions `0..length`.
///
/// Elements up to 64 are looked up in a 64-bit history register holding the
/// P-status of the previous 64 positions; one mask test covers all of them.
/// Larger elements can only reach positions before the current 64-wide
/// block, so their contribution is gathered a whole block at a time by
/// OR-ing shifted windows of the already-computed P-mask.
pub fn outcome_sequence(set: &SubtractionSet, length: usize) -> Result<OutcomeSequence> {
    if length == 0 {
        return Err(Error::ZeroLength);
    }
    let mut near_mask = 0u64;
    let mut far = Vec::new();
    for &s in set.elements() {
        if s as usize <= WORD {
            near_mask |= 1 << (s - 1);
        } else {
            far.push(s as usize);
        }
    }

    let n_words = length.div_ceil(WORD);
    let mut words = vec![0u64; n_words];
    // bit i set <=> position (p - 1 - i) is a P-position
    let mut history = 0u64;
    for w in 0..n_words {
        let base = w * WORD;
        let mut far_hits = 0u64;
        for &s in &far {
            if base + WORD > s {
                far_hits |= p_window(&words, base as isize - s as isize);
            }
        }
        let end = WORD.min(length - base);
        let mut word = 0u64;
        for i in 0..end {
            let n = (history & near_mask) != 0 || (far_hits >> i) & 1 == 1;
            word |= (n as u64) << i;
            history = (history << 1) | (!n) as u64;
        }
        words[w] = word;
    }
    Ok(OutcomeSequence { set: set.clone(), len: length, words })
}

/// P-mask bits for positions `start..start + 64`, all of which must already
/// be computed. Negative positions read as "not P".
#[inline]
fn p_window(words: &[u64], start: isize) -> u64 {
    if start < 0 {
        let shift = (-start) as u32;
        return (!words[0]) << shift;
    }
    let start = start as usize;
    let (w, o) = (start / WORD, start % WORD);
    let n = if o == 0 {
        words[w]
    } else {
        (words[w] >> o) | (words[w + 1] << (WORD - o))
    };
    !n
}

/// Grundy values for positions `0..length`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrundySequence {
    set: SubtractionSet,
    values: Vec<u32>,
}

impl GrundySequence {
    pub fn set(&self) -> &SubtractionSet {
        &self.set
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Streaming Grundy values. Keeps only the last `max(S)` values in a ring.
#[derive(Debug, Clone)]
pub struct GrundyStream {
    elements: Vec<usize>,
    ring: Vec<u32>,
    position: usize,
    seen: Vec<bool>,
}

impl GrundyStream {
    pub fn new(set: &SubtractionSet) -> Self {
        Self {
            elements: set.elements().iter().map(|&s| s as usize).collect(),
            ring: vec![0; set.window()],
            position: 0,
            seen: vec![false; set.len() + 1],
        }
    }
}

impl Iterator for GrundyStream {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        let m = self.ring.len();
        let p = self.position;
        self.seen.iter_mut().for_each(|b| *b = false);
        for &s in &self.elements {
            if s > p {
                break;
            }
            // values are bounded by |S|, so they always index `seen`
            self.seen[self.ring[(p - s) % m] as usize] = true;
        }
        let g = self.seen.iter().position(|&b| !b).unwrap_or(self.seen.len()) as u32;
        self.ring[p % m] = g;
        self.position += 1;
        Some(g)
    }
}

pub fn grundy_sequence(set: &SubtractionSet, length: usize) -> Result<GrundySequence> {
    if length == 0 {
        return Err(Error::ZeroLength);
    }
    Ok(GrundySequence {
        set: set.clone(),
        values: GrundyStream::new(set).take(length).collect(),
    })
}

/// Direct evaluation limit for [`best_move`]; beyond it the position is
/// reduced through the certified period first.
const DIRECT_MOVE_LIMIT: u64 = 1 << 20;

/// Smallest winning move from `position`, or `None` for a P-position.
pub fn best_move(set: &SubtractionSet, position: u64) -> Result<Option<u32>> {
    if position < DIRECT_MOVE_LIMIT {
        let seq = outcome_sequence(set, position as usize + 1)?;
        let p = position as usize;
        if seq.is_p(p) {
            return Ok(None);
        }
        return Ok(set
            .elements()
            .iter()
            .copied()
            .find(|&s| s as usize <= p && seq.is_p(p - s as usize)));
    }

    let report = find_period(set, &HorizonPolicy::default())?;
    let pre = report.certificate.preperiod as u64;
    let period = report.certificate.period as u64;
    let reduce = |x: u64| -> usize {
        if x < pre {
            x as usize
        } else {
            (pre + (x - pre) % period) as usize
        }
    };
    let symbols = report.symbols();
    let is_p = |x: u64| symbols[reduce(x)] == 0;
    if is_p(position) {
        return Ok(None);
    }
    Ok(set
        .elements()
        .iter()
        .copied()
        .find(|&s| s as u64 <= position && is_p(position - s as u64)))
}

/// Straightforward per-position implementations used as test oracles.
pub mod reference {
    use crate::set::SubtractionSet;

    /// `bits[p] = 1` iff some `s <= p` has `bits[p - s] = 0`.
    pub fn outcome_bits(set: &SubtractionSet, length: usize) -> Vec<u8> {
        let mut bits = Vec::with_capacity(length);
        for p in 0..length {
            let win = set
                .elements()
                .iter()
                .any(|&s| (s as usize) <= p && bits[p - s as usize] == 0);
            bits.push(win as u8);
        }
        bits
    }

    /// Full-history mex recurrence.
    pub fn grundy_values(set: &SubtractionSet, length: usize) -> Vec<u32> {
        let mut values: Vec<u32> = Vec::with_capacity(length);
        for p in 0..length {
            let reachable: Vec<u32> = set
                .elements()
                .iter()
                .filter(|&&s| (s as usize) <= p)
                .map(|&s| values[p - s as usize])
                .collect();
            values.push((0..).find(|g| !reachable.contains(g)).unwrap());
        }
        values
    }
}
