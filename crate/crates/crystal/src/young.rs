//! Crystal operators on semistandard Young tableaux.
//!
//! `f_i` changes the rightmost `i`-free `i` of the row reading word to
//! `i+1`; `e_i` changes the leftmost `i`-free `i+1` to `i`.

use crate::tableau::{Entry, YoungTableau};
use crate::word::classify_pairs;

/// Lowering operator `f_i`; `None` when no `i` is free.
pub fn f_young(t: &YoungTableau, i: u32) -> Option<YoungTableau> {
    let cells = t.reading_cells();
    let pairing = classify_pairs(&t.row_reading_word(), i);
    let &p = pairing.free_low.last()?;
    let (r, c) = cells[p];
    Some(t.with_entry(r, c, Entry::unmarked(i + 1)))
}

/// Raising operator `e_i`; `None` when no `i+1` is free.
pub fn e_young(t: &YoungTableau, i: u32) -> Option<YoungTableau> {
    let cells = t.reading_cells();
    let pairing = classify_pairs(&t.row_reading_word(), i);
    let &p = pairing.free_high.first()?;
    let (r, c) = cells[p];
    Some(t.with_entry(r, c, Entry::unmarked(i)))
}

/// String lengths `(φ_i, ε_i)` read off the free letters.
pub fn phi_eps_young(t: &YoungTableau, i: u32) -> (usize, usize) {
    let pairing = classify_pairs(&t.row_reading_word(), i);
    (pairing.free_low.len(), pairing.free_high.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::{enumerate_ssyt, Partition};

    fn yt(s: &str) -> YoungTableau {
        s.parse().unwrap()
    }

    #[test]
    fn four_string_of_shape_4311() {
        let left = yt("[[1,1,4,4],[2,4,5],[4],[5]]");
        let middle = yt("[[1,1,4,5],[2,4,5],[4],[5]]");
        let right = yt("[[1,1,4,5],[2,5,5],[4],[5]]");
        assert_eq!(f_young(&left, 4), Some(middle.clone()));
        assert_eq!(f_young(&middle, 4), Some(right.clone()));
        assert_eq!(f_young(&right, 4), None);
        assert_eq!(e_young(&middle, 4), Some(left.clone()));
        assert_eq!(phi_eps_young(&left, 4), (2, 0));
        assert_eq!(phi_eps_young(&middle, 4), (1, 1));
        assert_eq!(phi_eps_young(&right, 4), (0, 2));
    }

    #[test]
    fn small_examples() {
        assert_eq!(f_young(&yt("[[1,1,1],[2]]"), 1), Some(yt("[[1,1,2],[2]]")));
        assert_eq!(e_young(&yt("[[1,1,2],[2]]"), 1), Some(yt("[[1,1,1],[2]]")));
        assert_eq!(f_young(&yt("[[1]]"), 1).map(|t| t.to_string()), Some("[[2]]".to_string()));
        assert_eq!(e_young(&yt("[[1,1],[2]]"), 1), None);
        assert_eq!(phi_eps_young(&yt("[[1,1]]"), 3), (0, 0));
    }

    #[test]
    fn operators_are_mutually_inverse_and_valid() {
        for shape in [vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![3, 2, 1]] {
            let shape = Partition::new(shape).unwrap();
            for t in enumerate_ssyt(&shape, 4) {
                let w = t.weight(4).unwrap();
                for i in 1..4u32 {
                    let (phi, eps) = phi_eps_young(&t, i);
                    assert_eq!(phi as i64 - eps as i64, w[i as usize - 1] - w[i as usize]);
                    if let Some(u) = f_young(&t, i) {
                        assert!(u.to_string().parse::<YoungTableau>().is_ok());
                        assert_eq!(e_young(&u, i), Some(t.clone()));
                        let wu = u.weight(4).unwrap();
                        assert_eq!(wu[i as usize - 1], w[i as usize - 1] - 1);
                        assert_eq!(wu[i as usize], w[i as usize] + 1);
                    }
                    if let Some(u) = e_young(&t, i) {
                        assert_eq!(f_young(&u, i), Some(t.clone()));
                    }
                }
            }
        }
    }
}
