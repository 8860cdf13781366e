//! Schur and Schur-P polynomials as tableau generating functions, the Schur
//! expansion of `P_γ` via Yamanouchi tableaux, and the Schur-P expansion of
//! `P_γ · P_δ` via queer highest weights of a tensor product.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::{shifted_crystal, GraphError, DEFAULT_MAX_VERTICES};
use crate::poly::SparsePolynomial;
use crate::queer::{queer_highest_weights, tensor};
use crate::shifted::enumerate_yamanouchi;
use crate::tableau::{enumerate_ssht, enumerate_ssyt, Partition, StrictPartition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymError {
    #[error("the term indexed by {shape} needs more than {n} variables")]
    Truncated { shape: String, n: usize },
    #[error("highest weight {0:?} is not a strict partition")]
    NotStrict(Vec<i64>),
    #[error("the queer operators need at least 2 variables")]
    TooFewVariables,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn exponents(w: &[i64]) -> Vec<u32> {
    w.iter().map(|&x| x as u32).collect()
}

/// `s_λ(x_1, …, x_n)`: the sum of `x^{wt(T)}` over `SSYT_n(λ)`.
pub fn schur(lambda: &Partition, n: usize) -> SparsePolynomial {
    let mut p = SparsePolynomial::zero(n);
    for t in enumerate_ssyt(lambda, n) {
        p.add_term(exponents(&t.weight(n).expect("bounded")), 1);
    }
    p
}

/// `P_γ(x_1, …, x_n)`: the sum of `x^{wt(S)}` over `SSHT_n(γ)`.
pub fn schur_p(gamma: &StrictPartition, n: usize) -> SparsePolynomial {
    let mut p = SparsePolynomial::zero(n);
    for t in enumerate_ssht(gamma, n) {
        p.add_term(exponents(&t.weight(n).expect("bounded")), 1);
    }
    p
}

/// `g_{γ,λ}` in `P_γ = Σ_λ g_{γ,λ} s_λ`: the number of Yamanouchi shifted
/// tableaux of shape `γ` and weight `λ`. Fails rather than silently
/// dropping a term whose `λ` has more than `n` parts.
pub fn schur_p_to_schur(gamma: &StrictPartition, n: usize) -> Result<BTreeMap<Partition, u64>, SymError> {
    let bound = n.max(gamma.size()).max(1);
    let mut out = BTreeMap::new();
    for t in enumerate_yamanouchi(gamma, bound) {
        let w = t.weight(bound).expect("bounded");
        let lambda = Partition::from_weight(&w).expect("Yamanouchi weights are partitions");
        if lambda.len() > n {
            return Err(SymError::Truncated { shape: lambda.to_string(), n });
        }
        *out.entry(lambda).or_insert(0) += 1;
    }
    Ok(out)
}

/// `Σ_λ c_λ s_λ(x_1, …, x_n)`.
pub fn schur_sum(terms: &BTreeMap<Partition, u64>, n: usize) -> SparsePolynomial {
    terms.iter().fold(SparsePolynomial::zero(n), |acc, (lambda, &c)| &acc + &schur(lambda, n).scale(c as i64))
}

/// `Σ_ε c_ε P_ε(x_1, …, x_n)`.
pub fn schur_p_sum(terms: &BTreeMap<StrictPartition, u64>, n: usize) -> SparsePolynomial {
    terms.iter().fold(SparsePolynomial::zero(n), |acc, (eps, &c)| &acc + &schur_p(eps, n).scale(c as i64))
}

/// `f^ε_{γ,δ}` in `P_γ P_δ = Σ_ε f^ε_{γ,δ} P_ε`, counted as the queer
/// highest weights of `SSHT_n(γ) ⊗ SSHT_n(δ)` by weight. Fails when
/// `n < ℓ(γ) + ℓ(δ)`, since terms could then be lost.
pub fn product_expand(
    gamma: &StrictPartition,
    delta: &StrictPartition,
    n: usize,
) -> Result<BTreeMap<StrictPartition, u64>, SymError> {
    if n < 2 {
        return Err(SymError::TooFewVariables);
    }
    if gamma.len() + delta.len() > n {
        return Err(SymError::Truncated { shape: format!("{gamma} times {delta}"), n });
    }
    let a = shifted_crystal(gamma, n, true, DEFAULT_MAX_VERTICES)?;
    let b = shifted_crystal(delta, n, true, DEFAULT_MAX_VERTICES)?;
    let ab = tensor(&a, &b, true)?;
    let mut out = BTreeMap::new();
    for v in queer_highest_weights(&ab)? {
        let w = ab.weight(v);
        let eps = StrictPartition::from_weight(w).ok_or_else(|| SymError::NotStrict(w.to_vec()))?;
        *out.entry(eps).or_insert(0) += 1;
    }
    Ok(out)
}

/// Whether `γ = (k−1, …, 2, 1)` for some `k ≥ 2`.
pub fn is_staircase(gamma: &StrictPartition) -> bool {
    let p = gamma.parts();
    !p.is_empty() && p.iter().rev().enumerate().all(|(k, &x)| x == k + 1)
}

/// Whether `P_{δ_k} = s_{δ_k}` in `n` variables.
pub fn staircase_check(k: usize, n: usize) -> bool {
    let delta = StrictPartition::staircase(k);
    schur_p(&delta, n) == schur(&delta.as_partition(), n)
}

fn render<K: std::fmt::Display>(prefix: &str, terms: impl Iterator<Item = (K, u64)>) -> String {
    let parts: Vec<String> =
        terms.map(|(k, c)| if c == 1 { format!("{prefix}[{k}]") } else { format!("{c}*{prefix}[{k}]") }).collect();
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

/// Renders `Σ c_λ s_λ` as e.g. `s[3,1] + s[2,2] + s[2,1,1]`, largest
/// partition first in lexicographic order.
pub fn render_schur(terms: &BTreeMap<Partition, u64>) -> String {
    render("s", terms.iter().rev().map(|(k, &c)| (k, c)))
}

/// Renders `Σ c_ε P_ε` as e.g. `P[3] + P[2,1]`, largest first.
pub fn render_schur_p(terms: &BTreeMap<StrictPartition, u64>) -> String {
    render("P", terms.iter().rev().map(|(k, &c)| (k, c)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn strict(v: &[usize]) -> StrictPartition {
        StrictPartition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn small_schur_polynomials() {
        assert_eq!(schur(&part(&[1]), 4).to_string(), "x1 + x2 + x3 + x4");
        assert!(schur(&part(&[2, 2, 2]), 2).is_zero());
        assert_eq!(schur_p(&strict(&[1]), 3), schur(&part(&[1]), 3));
        assert_eq!(schur_p(&strict(&[2, 1]), 3).eval_ones(), 8);
        assert!(schur(&part(&[3, 2]), 3).is_symmetric());
        assert!(schur_p(&strict(&[3, 1]), 4).is_symmetric());
    }

    #[test]
    fn schur_expansion_rendering() {
        let e = schur_p_to_schur(&strict(&[3, 1]), 4).unwrap();
        assert_eq!(render_schur(&e), "s[3,1] + s[2,2] + s[2,1,1]");
        assert_eq!(schur_sum(&e, 4), schur_p(&strict(&[3, 1]), 4));
        assert!(matches!(schur_p_to_schur(&strict(&[3, 1]), 2), Err(SymError::Truncated { .. })));
    }

    #[test]
    fn staircases() {
        assert!(is_staircase(&strict(&[2, 1])));
        assert!(is_staircase(&strict(&[1])));
        assert!(!is_staircase(&strict(&[3, 1])));
        assert!(!is_staircase(&strict(&[])));
        assert!(staircase_check(3, 4));
    }

    #[test]
    fn product_of_single_cells() {
        let e = product_expand(&strict(&[1]), &strict(&[1]), 3).unwrap();
        assert_eq!(render_schur_p(&e), "P[2]");
        assert!(matches!(product_expand(&strict(&[2, 1]), &strict(&[1]), 2), Err(SymError::Truncated { .. })));
    }
}
