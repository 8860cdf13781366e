//! Words, the `m_i` statistic, and `i`-pairing.
//!
//! Marks are ignored throughout: a letter is "`i`-valued" when its value is
//! `i`, whether or not it is marked. In the pairing, `(i+1)`-valued letters
//! open brackets and `i`-valued letters close them; a letter left unmatched
//! by the left-to-right scan is *free*.

use std::fmt;

use thiserror::Error;

use crate::tableau::Entry;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("prefix length {r} exceeds word length {len}")]
    IndexOutOfRange { r: usize, len: usize },
}

/// A finite sequence of entries.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word(Vec<Entry>);

impl Word {
    pub fn new(letters: Vec<Entry>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[Entry] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
        write!(f, "{}", text.join(" "))
    }
}

impl From<Vec<Entry>> for Word {
    fn from(v: Vec<Entry>) -> Self {
        Word(v)
    }
}

/// `#i − #(i+1)` among the first `r` letters of `w`.
pub fn m_i_prefix(w: &Word, i: u32, r: usize) -> Result<i64, WordError> {
    if r > w.len() {
        return Err(WordError::IndexOutOfRange { r, len: w.len() });
    }
    Ok(w.0[..r]
        .iter()
        .map(|e| {
            if e.value == i {
                1
            } else if e.value == i + 1 {
                -1
            } else {
                0
            }
        })
        .sum())
}

/// `max_r m_i(w, r)`, floored at zero.
pub fn m_i(w: &Word, i: u32) -> i64 {
    let mut best = 0;
    let mut cur = 0;
    for e in &w.0 {
        if e.value == i {
            cur += 1;
        } else if e.value == i + 1 {
            cur -= 1;
        }
        best = best.max(cur);
    }
    best
}

/// Outcome of `i`-pairing a word. Positions are 0-based indices into the word.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct PairingResult {
    /// Matched `(opener, closer)` pairs: an `(i+1)`-valued letter and a later `i`-valued one.
    pub pairs: Vec<(usize, usize)>,
    /// Positions of free `i`-valued letters, increasing.
    pub free_low: Vec<usize>,
    /// Positions of free `(i+1)`-valued letters, increasing.
    pub free_high: Vec<usize>,
}

/// Bracket-matches `(i+1)`-valued letters (openers) with later `i`-valued
/// letters (closers) in a single left-to-right scan.
pub fn classify_pairs(w: &Word, i: u32) -> PairingResult {
    let mut open: Vec<usize> = Vec::new();
    let mut result = PairingResult::default();
    for (p, e) in w.0.iter().enumerate() {
        if e.value == i + 1 {
            open.push(p);
        } else if e.value == i {
            match open.pop() {
                Some(q) => result.pairs.push((q, p)),
                None => result.free_low.push(p),
            }
        }
    }
    result.free_high = open;
    result
}
