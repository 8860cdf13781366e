//! Sparse multivariate polynomials with integer coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A polynomial in `x_1, …, x_n` stored as exponent vector → coefficient.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SparsePolynomial {
    n: usize,
    terms: BTreeMap<Vec<u32>, i64>,
}

impl SparsePolynomial {
    pub fn zero(n: usize) -> Self {
        SparsePolynomial { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(vec![0; n], 1)
    }

    /// `coeff · x^exps`.
    pub fn monomial(exps: Vec<u32>, coeff: i64) -> Self {
        let mut p = SparsePolynomial::zero(exps.len());
        p.add_term(exps, coeff);
        p
    }

    /// The variable `x_k` (1-based).
    pub fn variable(n: usize, k: usize) -> Self {
        let mut exps = vec![0; n];
        exps[k - 1] = 1;
        Self::monomial(exps, 1)
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `coeff · x^exps` in place.
    pub fn add_term(&mut self, exps: Vec<u32>, coeff: i64) {
        assert_eq!(exps.len(), self.n, "exponent vector length must equal the number of variables");
        if coeff == 0 {
            return;
        }
        use std::collections::btree_map::Entry as MapEntry;
        match self.terms.entry(exps) {
            MapEntry::Vacant(v) => {
                v.insert(coeff);
            }
            MapEntry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn coeff(&self, exps: &[u32]) -> i64 {
        self.terms.get(exps).copied().unwrap_or(0)
    }

    /// Terms in ascending lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, i64)> {
        self.terms.iter().map(|(k, &v)| (k, v))
    }

    /// The lexicographically largest exponent vector present.
    pub fn leading_lex(&self) -> Option<(&Vec<u32>, i64)> {
        self.terms.iter().next_back().map(|(k, &v)| (k, v))
    }

    /// Value at `x_1 = … = x_n = 1`.
    pub fn eval_ones(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn scale(&self, c: i64) -> Self {
        let mut out = SparsePolynomial::zero(self.n);
        if c != 0 {
            for (k, &v) in &self.terms {
                out.terms.insert(k.clone(), v * c);
            }
        }
        out
    }

    /// Whether the polynomial is invariant under every adjacent variable swap.
    pub fn is_symmetric(&self) -> bool {
        (0..self.n.saturating_sub(1)).all(|k| {
            self.terms.iter().all(|(e, &c)| {
                let mut s = e.clone();
                s.swap(k, k + 1);
                self.coeff(&s) == c
            })
        })
    }

    /// Terms sorted in graded reverse lexicographic order, largest first.
    pub fn grevlex_terms(&self) -> Vec<(&Vec<u32>, i64)> {
        let mut v: Vec<(&Vec<u32>, i64)> = self.terms().collect();
        v.sort_by(|a, b| grevlex_cmp(b.0, a.0));
        v
    }
}

/// Graded reverse lexicographic comparison of exponent vectors.
pub fn grevlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b.iter()).rev() {
            if x != y {
                // Smaller last exponent means larger in reverse lexicographic order.
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

fn format_monomial(exps: &[u32]) -> String {
    let factors: Vec<String> = exps
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(k, &e)| if e == 1 { format!("x{}", k + 1) } else { format!("x{}^{}", k + 1, e) })
        .collect();
    factors.join("*")
}

impl fmt::Display for SparsePolynomial {
    /// Renders e.g. `x1^3*x2 + 2*x1^2*x2*x3`, terms in grevlex order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (exps, c)) in self.grevlex_terms().into_iter().enumerate() {
            let mono = format_monomial(exps);
            let mag = c.unsigned_abs();
            let body = match (mono.is_empty(), mag) {
                (true, _) => mag.to_string(),
                (false, 1) => mono,
                (false, _) => format!("{mag}*{mono}"),
            };
            match (k, c < 0) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

impl Add for &SparsePolynomial {
    type Output = SparsePolynomial;

    fn add(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        assert_eq!(self.n, rhs.n, "polynomials must share the variable count");
        let mut out = self.clone();
        for (k, &v) in &rhs.terms {
            let e = out.terms.entry(k.clone()).or_insert(0);
            *e += v;
            if *e == 0 {
                out.terms.remove(k);
            }
        }
        out
    }
}

impl Neg for &SparsePolynomial {
    type Output = SparsePolynomial;

    fn neg(self) -> SparsePolynomial {
        self.scale(-1)
    }
}

impl Sub for &SparsePolynomial {
    type Output = SparsePolynomial;

    fn sub(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        self + &(-rhs)
    }
}

impl Mul for &SparsePolynomial {
    type Output = SparsePolynomial;

    fn mul(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        assert_eq!(self.n, rhs.n, "polynomials must share the variable count");
        let mut acc: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
        for (a, &ca) in &self.terms {
            for (b, &cb) in &rhs.terms {
                let e: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                *acc.entry(e).or_insert(0) += ca * cb;
            }
        }
        acc.retain(|_, c| *c != 0);
        SparsePolynomial { n: self.n, terms: acc }
    }
}
