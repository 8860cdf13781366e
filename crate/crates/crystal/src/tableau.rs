//! Shapes, entries, Young and shifted tableaux.
//!
//! Coordinates follow French notation: row 1 is the bottom row. A Young row
//! `r` occupies columns `1..=λ_r`; a shifted row `r` occupies columns
//! `r..=r+γ_r-1`, so the main diagonal consists of the cells `(r, r)`.
//!
//! Entries are `(value, marked)` pairs ordered `1' < 1 < 2' < 2 < …`.
//! The text format lists rows bottom to top, marks as a trailing
//! apostrophe: `[[1,1,2'],[2]]`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::word::Word;

/// Errors raised while parsing or validating shapes and tableaux.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    NotAPartition(Vec<usize>),
    #[error("invalid strict partition {0:?}: parts must be positive and strictly decreasing")]
    NotStrict(Vec<usize>),
    #[error("row lengths {found:?} do not match shape {expected:?}")]
    ShapeMismatch { expected: Vec<usize>, found: Vec<usize> },
    #[error("row violation at ({row},{col})")]
    RowViolation { row: usize, col: usize },
    #[error("column violation at ({row},{col})")]
    ColumnViolation { row: usize, col: usize },
    #[error("marked entry on the diagonal at ({row},{col})")]
    DiagonalMarkViolation { row: usize, col: usize },
    #[error("repeated marked entry in row {row} at column {col}")]
    DuplicateMarkInRow { row: usize, col: usize },
    #[error("marked entry at ({row},{col}) in a Young tableau")]
    MarkedInYoung { row: usize, col: usize },
    #[error("value {value} at ({row},{col}) outside 1..={n}")]
    ValueOutOfRange { row: usize, col: usize, value: u32, n: usize },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// A single tableau entry `k` or `k'`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Entry {
    pub value: u32,
    pub marked: bool,
}

impl Entry {
    pub const fn new(value: u32, marked: bool) -> Self {
        Entry { value, marked }
    }

    pub const fn unmarked(value: u32) -> Self {
        Entry { value, marked: false }
    }

    pub const fn marked(value: u32) -> Self {
        Entry { value, marked: true }
    }

    /// Position in the chain `1' < 1 < 2' < 2 < …` (`1'` has rank 1).
    pub const fn rank(self) -> u32 {
        2 * self.value - self.marked as u32
    }
}

impl Ord for Entry {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank().cmp(&other.rank())
    }
}

impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.marked {
            write!(f, "{}'", self.value)
        } else {
            write!(f, "{}", self.value)
        }
    }
}

impl FromStr for Entry {
    type Err = TableauError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (digits, marked) = match s.strip_suffix('\'').or_else(|| s.strip_suffix('′')) {
            Some(d) => (d, true),
            None => (s, false),
        };
        let value: u32 =
            digits.trim().parse().map_err(|_| TableauError::Parse { pos: 0, msg: format!("bad entry {s:?}") })?;
        if value == 0 {
            return Err(TableauError::Parse { pos: 0, msg: "entries start at 1".into() });
        }
        Ok(Entry { value, marked })
    }
}

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, TableauError> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Partition(parts))
        } else {
            Err(TableauError::NotAPartition(parts))
        }
    }

    /// Builds a partition from a weight vector by dropping trailing zeros.
    /// Returns `None` if the vector is not weakly decreasing.
    pub fn from_weight(weight: &[i64]) -> Option<Self> {
        let mut parts: Vec<usize> = Vec::new();
        for &w in weight {
            if w < 0 {
                return None;
            }
            parts.push(w as usize);
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition::new(parts).ok()
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// All partitions of `total`, largest first in lexicographic order.
    pub fn all_of_size(total: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(total, total, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

impl FromStr for Partition {
    type Err = TableauError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Partition::new(parse_parts(s)?)
    }
}

/// A strictly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Default)]
pub struct StrictPartition(Vec<usize>);

impl StrictPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self, TableauError> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] > w[1]);
        if ok {
            Ok(StrictPartition(parts))
        } else {
            Err(TableauError::NotStrict(parts))
        }
    }

    /// Builds a strict partition from a weight vector by dropping trailing
    /// zeros; `None` if the result is not strictly decreasing.
    pub fn from_weight(weight: &[i64]) -> Option<Self> {
        let p = Partition::from_weight(weight)?;
        StrictPartition::new(p.0).ok()
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// The staircase `(k-1, k-2, …, 1)`.
    pub fn staircase(k: usize) -> Self {
        StrictPartition((1..k).rev().collect())
    }

    /// All strict partitions of `total`, in decreasing lexicographic order.
    pub fn all_of_size(total: usize) -> Vec<StrictPartition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<StrictPartition>) {
            if rest == 0 {
                out.push(StrictPartition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(total, total, &mut Vec::new(), &mut out);
        out
    }

    pub fn as_partition(&self) -> Partition {
        Partition(self.0.clone())
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

impl FromStr for StrictPartition {
    type Err = TableauError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        StrictPartition::new(parse_parts(s)?)
    }
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    let text: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
    write!(f, "{}", text.join(","))
}

/// Parses a comma-separated list such as `4,3,1` (brackets optional).
fn parse_parts(s: &str) -> Result<Vec<usize>, TableauError> {
    let body = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
    if body.trim().is_empty() {
        return Ok(Vec::new());
    }
    body.split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| TableauError::Parse { pos: 0, msg: format!("bad part {p:?} in {s:?}") })
        })
        .collect()
}

/// Parses the bracketed row format `[[1,1,2'],[2]]` into bottom-up rows.
pub fn parse_rows(text: &str) -> Result<Vec<Vec<Entry>>, TableauError> {
    let bytes: Vec<char> = text.chars().collect();
    let mut pos = 0usize;
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_whitespace() {
            *pos += 1;
        }
    };
    let err = |pos: usize, msg: &str| TableauError::Parse { pos, msg: msg.to_string() };

    skip_ws(&mut pos);
    if bytes.get(pos) != Some(&'[') {
        return Err(err(pos, "expected '['"));
    }
    pos += 1;
    let mut rows = Vec::new();
    skip_ws(&mut pos);
    if bytes.get(pos) == Some(&']') {
        pos += 1;
    } else {
        loop {
            skip_ws(&mut pos);
            if bytes.get(pos) != Some(&'[') {
                return Err(err(pos, "expected '[' starting a row"));
            }
            pos += 1;
            let mut row = Vec::new();
            skip_ws(&mut pos);
            if bytes.get(pos) == Some(&']') {
                return Err(err(pos, "empty row"));
            }
            loop {
                skip_ws(&mut pos);
                let start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                if start == pos {
                    return Err(err(pos, "expected a number"));
                }
                let digits: String = bytes[start..pos].iter().collect();
                let value: u32 = digits.parse().map_err(|_| err(start, "number too large"))?;
                if value == 0 {
                    return Err(err(start, "entries start at 1"));
                }
                let marked = matches!(bytes.get(pos), Some('\'') | Some('′'));
                if marked {
                    pos += 1;
                }
                row.push(Entry { value, marked });
                skip_ws(&mut pos);
                match bytes.get(pos) {
                    Some(',') => pos += 1,
                    Some(']') => {
                        pos += 1;
                        break;
                    }
                    _ => return Err(err(pos, "expected ',' or ']' in row")),
                }
            }
            rows.push(row);
            skip_ws(&mut pos);
            match bytes.get(pos) {
                Some(',') => pos += 1,
                Some(']') => {
                    pos += 1;
                    break;
                }
                _ => return Err(err(pos, "expected ',' or ']' after row")),
            }
        }
    }
    skip_ws(&mut pos);
    if pos != bytes.len() {
        return Err(err(pos, "trailing characters"));
    }
    Ok(rows)
}

fn format_rows(f: &mut fmt::Formatter<'_>, rows: &[Vec<Entry>]) -> fmt::Result {
    write!(f, "[")?;
    for (k, row) in rows.iter().enumerate() {
        if k > 0 {
            write!(f, ",")?;
        }
        write!(f, "[")?;
        for (j, e) in row.iter().enumerate() {
            if j > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]")?;
    }
    write!(f, "]")
}

fn count_weight(rows: &[Vec<Entry>], n: usize) -> Result<Vec<i64>, TableauError> {
    let mut w = vec![0i64; n];
    for (r, row) in rows.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            let v = e.value as usize;
            if v == 0 || v > n {
                return Err(TableauError::ValueOutOfRange { row: r + 1, col: j + 1, value: e.value, n });
            }
            w[v - 1] += 1;
        }
    }
    Ok(w)
}

/// A semistandard Young tableau in French notation.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct YoungTableau {
    shape: Partition,
    rows: Vec<Vec<Entry>>,
}

impl YoungTableau {
    /// Rows bottom to top; row `r` (1-based) is `rows()[r-1]` starting at column 1.
    pub fn rows(&self) -> &[Vec<Entry>] {
        &self.rows
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Entry at `(row, col)`, both 1-based.
    pub fn get(&self, row: usize, col: usize) -> Option<Entry> {
        if row == 0 || col == 0 {
            return None;
        }
        self.rows.get(row - 1)?.get(col - 1).copied()
    }

    pub fn largest_value(&self) -> u32 {
        self.rows.iter().flatten().map(|e| e.value).max().unwrap_or(0)
    }

    /// Weight vector of length `n`.
    pub fn weight(&self, n: usize) -> Result<Vec<i64>, TableauError> {
        count_weight(&self.rows, n)
    }

    /// Reads rows left to right, from the top row down.
    pub fn row_reading_word(&self) -> Word {
        Word::new(self.reading_cells().into_iter().map(|(r, c)| self.rows[r - 1][c - 1]).collect())
    }

    /// Cells `(row, col)` in row-reading order.
    pub fn reading_cells(&self) -> Vec<(usize, usize)> {
        let mut cells = Vec::new();
        for r in (1..=self.rows.len()).rev() {
            for c in 1..=self.rows[r - 1].len() {
                cells.push((r, c));
            }
        }
        cells
    }

    pub(crate) fn with_entry(&self, row: usize, col: usize, e: Entry) -> YoungTableau {
        let mut t = self.clone();
        t.rows[row - 1][col - 1] = e;
        t
    }
}

impl fmt::Display for YoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_rows(f, &self.rows)
    }
}

impl FromStr for YoungTableau {
    type Err = TableauError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let rows = parse_rows(s)?;
        let lengths: Vec<usize> = rows.iter().map(Vec::len).collect();
        let shape = Partition::new(lengths.clone())
            .map_err(|_| TableauError::ShapeMismatch { expected: Vec::new(), found: lengths })?;
        validate_young(&shape, rows)
    }
}

/// A semistandard shifted tableau; row `r` starts at column `r`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ShiftedTableau {
    shape: StrictPartition,
    rows: Vec<Vec<Entry>>,
}

impl ShiftedTableau {
    /// Rows bottom to top; `rows()[r-1][k]` sits at column `r + k`.
    pub fn rows(&self) -> &[Vec<Entry>] {
        &self.rows
    }

    pub fn shape(&self) -> &StrictPartition {
        &self.shape
    }

    /// Whether `(row, col)` (1-based) lies in the shifted diagram.
    pub fn contains(&self, row: usize, col: usize) -> bool {
        row >= 1 && row <= self.rows.len() && col >= row && col < row + self.rows[row - 1].len()
    }

    /// Entry at `(row, col)`, both 1-based.
    pub fn get(&self, row: usize, col: usize) -> Option<Entry> {
        if self.contains(row, col) {
            Some(self.rows[row - 1][col - row])
        } else {
            None
        }
    }

    pub(crate) fn set(&mut self, row: usize, col: usize, e: Entry) {
        self.rows[row - 1][col - row] = e;
    }

    /// All cells `(row, col)` row by row, bottom-up, left to right.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows.iter().enumerate().flat_map(|(k, row)| (0..row.len()).map(move |j| (k + 1, k + 1 + j)))
    }

    pub fn largest_value(&self) -> u32 {
        self.rows.iter().flatten().map(|e| e.value).max().unwrap_or(0)
    }

    pub fn marked_count(&self) -> usize {
        self.rows.iter().flatten().filter(|e| e.marked).count()
    }

    /// Weight vector of length `n` (marked and unmarked counted together).
    pub fn weight(&self, n: usize) -> Result<Vec<i64>, TableauError> {
        count_weight(&self.rows, n)
    }

    /// Cells in hook reading order: for `i` from `max(γ_1, ℓ)` down to 1,
    /// the marked entries of column `i` bottom to top, then the unmarked
    /// entries of row `i` left to right.
    pub fn hook_reading_cells(&self) -> Vec<(usize, usize)> {
        let len = self.rows.len();
        let top = self.shape.parts().first().copied().unwrap_or(0).max(len);
        let mut cells = Vec::with_capacity(self.shape.size());
        for i in (1..=top).rev() {
            for r in 1..=len.min(i) {
                if let Some(e) = self.get(r, i) {
                    if e.marked {
                        cells.push((r, i));
                    }
                }
            }
            if i <= len {
                for c in i..i + self.rows[i - 1].len() {
                    if !self.rows[i - 1][c - i].marked {
                        cells.push((i, c));
                    }
                }
            }
        }
        cells
    }

    pub fn hook_reading_word(&self) -> Word {
        Word::new(self.hook_reading_cells().into_iter().map(|(r, c)| self.get(r, c).unwrap()).collect())
    }
}

impl fmt::Display for ShiftedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_rows(f, &self.rows)
    }
}

impl FromStr for ShiftedTableau {
    type Err = TableauError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let rows = parse_rows(s)?;
        let lengths: Vec<usize> = rows.iter().map(Vec::len).collect();
        let shape = StrictPartition::new(lengths.clone())
            .map_err(|_| TableauError::ShapeMismatch { expected: Vec::new(), found: lengths })?;
        validate_shifted(&shape, rows)
    }
}

fn check_lengths(expected: &[usize], rows: &[Vec<Entry>]) -> Result<(), TableauError> {
    let found: Vec<usize> = rows.iter().map(Vec::len).collect();
    if found != expected {
        return Err(TableauError::ShapeMismatch { expected: expected.to_vec(), found });
    }
    Ok(())
}

/// Validates a Young tableau given bottom-up rows.
pub fn validate_young(shape: &Partition, rows: Vec<Vec<Entry>>) -> Result<YoungTableau, TableauError> {
    check_lengths(shape.parts(), &rows)?;
    for (k, row) in rows.iter().enumerate() {
        for (j, &e) in row.iter().enumerate() {
            let (r, c) = (k + 1, j + 1);
            if e.marked {
                return Err(TableauError::MarkedInYoung { row: r, col: c });
            }
            if j > 0 && e < row[j - 1] {
                return Err(TableauError::RowViolation { row: r, col: c });
            }
            if k > 0 && e <= rows[k - 1][j] {
                return Err(TableauError::ColumnViolation { row: r, col: c });
            }
        }
    }
    Ok(YoungTableau { shape: shape.clone(), rows })
}

/// Validates a shifted tableau given bottom-up rows (row `r` starting at column `r`).
pub fn validate_shifted(shape: &StrictPartition, rows: Vec<Vec<Entry>>) -> Result<ShiftedTableau, TableauError> {
    check_lengths(shape.parts(), &rows)?;
    for (k, row) in rows.iter().enumerate() {
        let r = k + 1;
        for (j, &e) in row.iter().enumerate() {
            let c = r + j;
            if j == 0 && e.marked {
                return Err(TableauError::DiagonalMarkViolation { row: r, col: c });
            }
            if j > 0 {
                let left = row[j - 1];
                if e < left {
                    return Err(TableauError::RowViolation { row: r, col: c });
                }
                if e == left && e.marked {
                    return Err(TableauError::DuplicateMarkInRow { row: r, col: c });
                }
            }
            if k > 0 {
                // The cell below is (r-1, c), which is index c-(r-1) in the row below.
                let below = rows[k - 1].get(c - (r - 1)).copied();
                match below {
                    Some(b) => {
                        if e < b || (e == b && !e.marked) {
                            return Err(TableauError::ColumnViolation { row: r, col: c });
                        }
                    }
                    None => {
                        return Err(TableauError::ShapeMismatch {
                            expected: shape.parts().to_vec(),
                            found: rows.iter().map(Vec::len).collect(),
                        })
                    }
                }
            }
        }
    }
    Ok(ShiftedTableau { shape: shape.clone(), rows })
}

/// Rank key of a word, used for the canonical lexicographic order.
fn word_key(word: &Word) -> Vec<u32> {
    word.letters().iter().map(|e| e.rank()).collect()
}

/// Backtracking fill of a diagram; `cells` are visited in order and each
/// cell knows its left and lower neighbours (as indices into the fill).
struct Filler<'a> {
    n: u32,
    left: Vec<Option<usize>>,
    below: Vec<Option<usize>>,
    allow_marks: Vec<bool>,
    accept: &'a dyn Fn(usize, Entry) -> bool,
}

impl Filler<'_> {
    fn run(&self, cur: &mut Vec<Entry>, out: &mut Vec<Vec<Entry>>) {
        let k = cur.len();
        if k == self.left.len() {
            out.push(cur.clone());
            return;
        }
        for value in 1..=self.n {
            for marked in [true, false] {
                if marked && !self.allow_marks[k] {
                    continue;
                }
                let e = Entry { value, marked };
                if let Some(l) = self.left[k] {
                    let le = cur[l];
                    if e < le || (e == le && marked) {
                        continue;
                    }
                }
                if let Some(b) = self.below[k] {
                    let be = cur[b];
                    if e < be || (e == be && !marked) {
                        continue;
                    }
                }
                if !(self.accept)(k, e) {
                    continue;
                }
                cur.push(e);
                self.run(cur, out);
                cur.pop();
            }
        }
    }
}

/// All semistandard Young tableaux of shape `shape` with entries in `1..=n`,
/// sorted lexicographically by row reading word.
pub fn enumerate_ssyt(shape: &Partition, n: usize) -> Vec<YoungTableau> {
    let parts = shape.parts();
    let mut index = Vec::new(); // (r, c) for each fill position
    for (k, &len) in parts.iter().enumerate() {
        for c in 1..=len {
            index.push((k + 1, c));
        }
    }
    let pos = |r: usize, c: usize| index.iter().position(|&p| p == (r, c));
    let left = index.iter().map(|&(r, c)| if c > 1 { pos(r, c - 1) } else { None }).collect();
    let below = index.iter().map(|&(r, c)| if r > 1 { pos(r - 1, c) } else { None }).collect();
    let accept = |_: usize, _: Entry| true;
    let filler = Filler { n: n as u32, left, below, allow_marks: vec![false; index.len()], accept: &accept };
    let mut fills = Vec::new();
    filler.run(&mut Vec::new(), &mut fills);
    let mut out: Vec<YoungTableau> = fills
        .into_iter()
        .map(|fill| {
            let mut rows: Vec<Vec<Entry>> = parts.iter().map(|&l| Vec::with_capacity(l)).collect();
            for (e, &(r, _)) in fill.into_iter().zip(index.iter()) {
                rows[r - 1].push(e);
            }
            YoungTableau { shape: shape.clone(), rows }
        })
        .collect();
    out.sort_by_cached_key(|t| word_key(&t.row_reading_word()));
    out
}

/// Shifted tableaux of shape `shape` with values in `1..=n` whose every
/// entry placed at `(row, col)` passes `accept`, sorted by hook reading word.
pub fn enumerate_ssht_filtered(
    shape: &StrictPartition,
    n: usize,
    accept: &dyn Fn(usize, usize, Entry) -> bool,
) -> Vec<ShiftedTableau> {
    let parts = shape.parts();
    let mut index = Vec::new();
    for (k, &len) in parts.iter().enumerate() {
        let r = k + 1;
        for c in r..r + len {
            index.push((r, c));
        }
    }
    let pos = |r: usize, c: usize| index.iter().position(|&p| p == (r, c));
    let left = index.iter().map(|&(r, c)| if c > r { pos(r, c - 1) } else { None }).collect();
    let below = index.iter().map(|&(r, c)| if r > 1 { pos(r - 1, c) } else { None }).collect();
    let allow_marks = index.iter().map(|&(r, c)| c != r).collect();
    let cell_accept = |k: usize, e: Entry| {
        let (r, c) = index[k];
        accept(r, c, e)
    };
    let filler = Filler { n: n as u32, left, below, allow_marks, accept: &cell_accept };
    let mut fills = Vec::new();
    filler.run(&mut Vec::new(), &mut fills);
    let mut out: Vec<ShiftedTableau> = fills
        .into_iter()
        .map(|fill| {
            let mut rows: Vec<Vec<Entry>> = parts.iter().map(|&l| Vec::with_capacity(l)).collect();
            for (e, &(r, _)) in fill.into_iter().zip(index.iter()) {
                rows[r - 1].push(e);
            }
            ShiftedTableau { shape: shape.clone(), rows }
        })
        .collect();
    out.sort_by_cached_key(|t| word_key(&t.hook_reading_word()));
    out
}

/// All semistandard shifted tableaux of shape `shape` with values in `1..=n`,
/// sorted lexicographically by hook reading word.
pub fn enumerate_ssht(shape: &StrictPartition, n: usize) -> Vec<ShiftedTableau> {
    enumerate_ssht_filtered(shape, n, &|_, _, _| true)
}
