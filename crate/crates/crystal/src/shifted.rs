//! Crystal operators on semistandard shifted tableaux.
//!
//! Both operators locate their action site through the `i`-pairing of the
//! hook reading word: `f_i` acts at the rightmost free `i'`/`i` (called `x`),
//! `e_i` at the leftmost free `(i+1)'`/`(i+1)`. The local rule then depends
//! on the neighbours of `x` and, in a few cases, on the *ribbon* through a
//! neighbour.
//!
//! A `k`-ribbon is an edge-connected set of cells whose entries have value
//! `k` (marked or not). Such a set never contains a 2×2 block, so it is a
//! path running from its upper-left end down to its lower-right end. We call
//! the upper-left end the *head*; walking "along the ribbon" from a cell
//! visits the cells after it on the way to the lower-right end.

use std::fmt;

use crate::tableau::{enumerate_ssht_filtered, Entry, ShiftedTableau, StrictPartition};
use crate::word::classify_pairs;

/// The rule applied by [`f_shifted`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum LoweringCase {
    /// `x = i` with `(i+1)'` to its east: `x → (i+1)'`, east neighbour `→ i+1`.
    L1a,
    /// `x = i` with nothing, or something larger than `i+1`, to its north: `x → i+1`.
    L1b,
    /// `x = i`, the head of the `(i+1)`-ribbon through the north neighbour is marked:
    /// unmark the head, `x → (i+1)'`.
    L1c,
    /// Remaining unmarked case: `x → (i+1)'`.
    L1d,
    /// `x = i'` with `i` to its north: `x → i`, north neighbour `→ (i+1)'`.
    L2a,
    /// `x = i'` with nothing, or something larger than `(i+1)'`, to its east: `x → (i+1)'`.
    L2b,
    /// Remaining marked case: `x → i`, and the first unmarked `i` further along
    /// the `i`-ribbon whose east neighbour is neither `i` nor `(i+1)'` becomes `(i+1)'`.
    L2c,
}

/// The rule applied by [`e_shifted`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum RaisingCase {
    /// `x = i+1` with `(i+1)'` to its west: `x → (i+1)'`, west neighbour `→ i`.
    R1a,
    /// `x = i+1` with nothing, or something smaller than `i`, to its south: `x → i`.
    R1b,
    /// Remaining unmarked case: `x → (i+1)'`, and the first `(i+1)'` further along
    /// the ribbon whose south neighbour is neither `i` nor `(i+1)'` becomes `i`.
    R1c,
    /// `x = (i+1)'` with `i` to its south: `x → i`, south neighbour `→ i'`.
    R2a,
    /// `x = (i+1)'` with nothing, or something smaller than `i'`, to its west: `x → i'`.
    R2b,
    /// The head of the `i`-ribbon through the west neighbour is off the diagonal:
    /// mark the head, `x → i` (the mark travels back up the ribbon).
    R2c,
    /// Remaining marked case: `x → i`.
    R2d,
}

impl fmt::Display for LoweringCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl fmt::Display for RaisingCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Cells of the ribbon of value `value` through `start`, ordered from the
/// head (upper-left end) to the lower-right end.
pub fn ribbon(t: &ShiftedTableau, start: (usize, usize), value: u32) -> Vec<(usize, usize)> {
    let has = |(r, c): (usize, usize)| t.get(r, c).is_some_and(|e| e.value == value);
    if !has(start) {
        return Vec::new();
    }
    let mut seen = vec![start];
    let mut stack = vec![start];
    while let Some((r, c)) = stack.pop() {
        let mut nbrs = vec![(r + 1, c), (r, c + 1)];
        if r > 1 {
            nbrs.push((r - 1, c));
        }
        if c > 1 {
            nbrs.push((r, c - 1));
        }
        for nb in nbrs {
            if has(nb) && !seen.contains(&nb) {
                seen.push(nb);
                stack.push(nb);
            }
        }
    }
    seen.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    seen
}

/// Lowering operator `f_i` together with the rule that fired; `None` when
/// the hook reading word has no free `i`-valued letter.
pub fn f_shifted(t: &ShiftedTableau, i: u32) -> Option<(ShiftedTableau, LoweringCase)> {
    let cells = t.hook_reading_cells();
    let pairing = classify_pairs(&t.hook_reading_word(), i);
    let &p = pairing.free_low.last()?;
    let (r, c) = cells[p];
    let x = t.get(r, c).expect("reading cell lies in the diagram");
    let north = t.get(r + 1, c);
    let east = t.get(r, c + 1);
    let lo = Entry::unmarked(i);
    let lo_m = Entry::marked(i);
    let hi = Entry::unmarked(i + 1);
    let hi_m = Entry::marked(i + 1);
    let mut u = t.clone();

    if !x.marked {
        if east == Some(hi_m) {
            u.set(r, c, hi_m);
            u.set(r, c + 1, hi);
            return Some((u, LoweringCase::L1a));
        }
        match north {
            None => {
                u.set(r, c, hi);
                return Some((u, LoweringCase::L1b));
            }
            Some(y) if y > hi => {
                u.set(r, c, hi);
                return Some((u, LoweringCase::L1b));
            }
            Some(_) => {}
        }
        let head = ribbon(t, (r + 1, c), i + 1)[0];
        u.set(r, c, hi_m);
        if t.get(head.0, head.1) == Some(hi_m) {
            u.set(head.0, head.1, hi);
            return Some((u, LoweringCase::L1c));
        }
        return Some((u, LoweringCase::L1d));
    }

    debug_assert_eq!(x, lo_m);
    if north == Some(lo) {
        u.set(r, c, lo);
        u.set(r + 1, c, hi_m);
        return Some((u, LoweringCase::L2a));
    }
    match east {
        None => {
            u.set(r, c, hi_m);
            return Some((u, LoweringCase::L2b));
        }
        Some(z) if z > hi_m => {
            u.set(r, c, hi_m);
            return Some((u, LoweringCase::L2b));
        }
        Some(_) => {}
    }
    u.set(r, c, lo);
    let path = ribbon(t, (r, c), i);
    let from = path.iter().position(|&q| q == (r, c)).expect("x lies on its own ribbon");
    let target = path[from + 1..]
        .iter()
        .copied()
        .find(|&(a, b)| t.get(a, b) == Some(lo) && !matches!(t.get(a, b + 1), Some(e) if e == lo || e == hi_m))
        .expect("an i-ribbon continues to a cell that can absorb the mark");
    u.set(target.0, target.1, hi_m);
    Some((u, LoweringCase::L2c))
}

/// Raising operator `e_i` together with the rule that fired; `None` when
/// the hook reading word has no free `(i+1)`-valued letter.
pub fn e_shifted(t: &ShiftedTableau, i: u32) -> Option<(ShiftedTableau, RaisingCase)> {
    let cells = t.hook_reading_cells();
    let pairing = classify_pairs(&t.hook_reading_word(), i);
    let &p = pairing.free_high.first()?;
    let (r, c) = cells[p];
    let x = t.get(r, c).expect("reading cell lies in the diagram");
    let south = if r > 1 { t.get(r - 1, c) } else { None };
    let west = if c > 1 { t.get(r, c - 1) } else { None };
    let lo = Entry::unmarked(i);
    let lo_m = Entry::marked(i);
    let hi_m = Entry::marked(i + 1);
    let mut u = t.clone();

    if !x.marked {
        if west == Some(hi_m) {
            u.set(r, c, hi_m);
            u.set(r, c - 1, lo);
            return Some((u, RaisingCase::R1a));
        }
        if south.is_none_or(|y| y < lo) {
            u.set(r, c, lo);
            return Some((u, RaisingCase::R1b));
        }
        u.set(r, c, hi_m);
        let path = ribbon(t, (r, c), i + 1);
        let from = path.iter().position(|&q| q == (r, c)).expect("x lies on its own ribbon");
        let target = path[from + 1..]
            .iter()
            .copied()
            .find(|&(a, b)| {
                t.get(a, b) == Some(hi_m) && !(a > 1 && matches!(t.get(a - 1, b), Some(e) if e == lo || e == hi_m))
            })
            .expect("an (i+1)-ribbon continues to a marked cell that can be lowered");
        u.set(target.0, target.1, lo);
        return Some((u, RaisingCase::R1c));
    }

    debug_assert_eq!(x, hi_m);
    if south == Some(lo) {
        u.set(r, c, lo);
        u.set(r - 1, c, lo_m);
        return Some((u, RaisingCase::R2a));
    }
    if west.is_none_or(|z| z < lo_m) {
        u.set(r, c, lo_m);
        return Some((u, RaisingCase::R2b));
    }
    let head = ribbon(t, (r, c - 1), i)[0];
    if head.0 != head.1 {
        u.set(head.0, head.1, lo_m);
        u.set(r, c, lo);
        return Some((u, RaisingCase::R2c));
    }
    u.set(r, c, lo);
    Some((u, RaisingCase::R2d))
}

/// String lengths `(φ_i, ε_i)`: the numbers of free `i`-valued and free
/// `(i+1)`-valued letters of the hook reading word.
pub fn phi_eps_shifted(t: &ShiftedTableau, i: u32) -> (usize, usize) {
    let pairing = classify_pairs(&t.hook_reading_word(), i);
    (pairing.free_low.len(), pairing.free_high.len())
}

/// Whether every raising operator kills `t`.
pub fn is_yamanouchi(t: &ShiftedTableau) -> bool {
    (1..t.largest_value().max(1)).all(|i| phi_eps_shifted(t, i).1 == 0)
}

/// The Yamanouchi shifted tableaux of shape `shape` with values at most `n`.
///
/// Any unmarked entry of row `r` in such a tableau equals `r`, which is used
/// to prune the search before the exact test.
pub fn enumerate_yamanouchi(shape: &StrictPartition, n: usize) -> Vec<ShiftedTableau> {
    let prune = |r: usize, _c: usize, e: Entry| e.marked || e.value as usize == r;
    enumerate_ssht_filtered(shape, n, &prune).into_iter().filter(is_yamanouchi).collect()
}

/// The full `i`-string through `t`, from its top to its bottom.
pub fn shifted_string(t: &ShiftedTableau, i: u32) -> Vec<ShiftedTableau> {
    let mut top = t.clone();
    while let Some((u, _)) = e_shifted(&top, i) {
        top = u;
    }
    let mut out = vec![top.clone()];
    while let Some((u, _)) = f_shifted(&top, i) {
        out.push(u.clone());
        top = u;
    }
    out
}
