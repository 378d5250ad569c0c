//! Exact q-polynomial distributions of word and tableau statistics, with
//! classical closed-form oracles.
//!
//! Everything here is exact integer arithmetic: the coefficients count
//! words or tableaux, never approximate them.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::tableau::{enumerate_syt, Partition};
use crate::word::{words_on, Multiset, Word};
use crate::{Error, Result};

/// A polynomial in `q` with nonnegative integer coefficients;
/// `coeffs[p]` is the coefficient of `q^p`. Trailing zeros are trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct QPolynomial {
    coeffs: Vec<u64>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPolynomial { coeffs: vec![1] }
    }

    pub fn from_coeffs(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        QPolynomial { coeffs }
    }

    /// The monomial `q^power`.
    pub fn monomial(power: usize) -> Self {
        let mut coeffs = vec![0; power + 1];
        coeffs[power] = 1;
        QPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Add `count * q^power`.
    pub fn add_term(&mut self, power: usize, count: u64) {
        if count == 0 {
            return;
        }
        if self.coeffs.len() <= power {
            self.coeffs.resize(power + 1, 0);
        }
        self.coeffs[power] += count;
    }

    /// Sum of all coefficients: the cardinality of the generating set.
    pub fn coeff_sum(&self) -> u64 {
        self.coeffs.iter().sum()
    }

    pub fn mul(&self, other: &QPolynomial) -> QPolynomial {
        if self.is_zero() || other.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPolynomial::from_coeffs(coeffs)
    }

    /// Multiply by `q^power`.
    pub fn shift(&self, power: usize) -> QPolynomial {
        if self.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![0u64; self.coeffs.len() + power];
        coeffs[power..].copy_from_slice(&self.coeffs);
        QPolynomial { coeffs }
    }

    /// Exact division; `None` unless `divisor` divides `self` with a
    /// nonnegative integer quotient.
    pub fn try_div_exact(&self, divisor: &QPolynomial) -> Option<QPolynomial> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(QPolynomial::zero());
        }
        let dn = divisor.coeffs.len();
        if self.coeffs.len() < dn {
            return None;
        }
        let mut rem: Vec<i128> = self.coeffs.iter().map(|&c| c as i128).collect();
        let lead = *divisor.coeffs.last().unwrap() as i128;
        let qn = rem.len() - dn + 1;
        let mut quot = vec![0i128; qn];
        for t in (0..qn).rev() {
            let top = rem[t + dn - 1];
            if top == 0 {
                continue;
            }
            if top % lead != 0 {
                return None;
            }
            let c = top / lead;
            quot[t] = c;
            for (offset, &d) in divisor.coeffs.iter().enumerate() {
                rem[t + offset] -= c * d as i128;
            }
        }
        if rem.iter().any(|&r| r != 0) || quot.iter().any(|&c| c < 0) {
            return None;
        }
        Some(QPolynomial::from_coeffs(
            quot.into_iter().map(|c| c as u64).collect(),
        ))
    }
}

impl fmt::Display for QPolynomial {
    /// Pretty-prints as `1 + 2q + 2q^2 + q^3`; the zero polynomial prints `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (p, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (p, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "q")?,
                (1, c) => write!(f, "{c}q")?,
                (p, 1) => write!(f, "q^{p}")?,
                (p, c) => write!(f, "{c}q^{p}")?,
            }
        }
        Ok(())
    }
}

/// The q-integer `[n]_q = 1 + q + ... + q^{n-1}`.
pub fn q_int(n: usize) -> QPolynomial {
    QPolynomial::from_coeffs(vec![1; n])
}

/// The q-factorial `[n]_q! = [1]_q [2]_q ... [n]_q`.
pub fn q_factorial(n: usize) -> QPolynomial {
    let mut acc = QPolynomial::one();
    for i in 1..=n {
        acc = acc.mul(&q_int(i));
    }
    acc
}

/// The q-multinomial `[n]_q! / prod_v [m_v]_q!` for the multiset `m`: the
/// closed form of the major-index generating function over the words on
/// `m`, independent of any bijection.
pub fn q_multinomial(m: &Multiset) -> QPolynomial {
    let mut acc = q_factorial(m.size());
    for &c in m.counts().values() {
        acc = acc
            .try_div_exact(&q_factorial(c))
            .expect("q-factorials divide the q-multinomial numerator");
    }
    acc
}

/// The q-analogue of the hook length formula:
/// `q^{sum (r-1) * shape_r} [n]_q! / prod_cells [hook]_q`, which equals the
/// maj generating function over the standard tableaux of `shape`.
pub fn q_hook_length(shape: &Partition) -> QPolynomial {
    let weight: usize = shape
        .parts()
        .iter()
        .enumerate()
        .map(|(r, &len)| r * len)
        .sum();
    let mut acc = q_factorial(shape.size());
    for h in shape.hook_lengths() {
        acc = acc
            .try_div_exact(&q_int(h))
            .expect("hook q-integers divide the q-factorial");
    }
    acc.shift(weight)
}

/// Which word statistic a distribution sums over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Statistic {
    /// Classical major index.
    Maj,
    /// Classical inversion number.
    Inv,
    /// The k-major index; the `k` parameter selects the level.
    MajK,
}

impl Statistic {
    pub fn eval(self, w: &Word, k: usize) -> usize {
        match self {
            Statistic::Maj => w.maj(),
            Statistic::Inv => w.inv(),
            Statistic::MajK => w.maj_k(k),
        }
    }
}

/// The generating function `sum q^{stat(w)}` over all words on `m` with
/// spacers fixed at `spacer_positions`.
pub fn word_distribution(
    m: &Multiset,
    spacer_positions: &BTreeSet<usize>,
    stat: Statistic,
    k: usize,
) -> Result<QPolynomial> {
    let mut poly = QPolynomial::zero();
    for w in words_on(m, spacer_positions)? {
        poly.add_term(stat.eval(&w, k), 1);
    }
    Ok(poly)
}

/// The generating function `sum q^{maj_k(T)}` over the standard tableaux of
/// `shape`, for `k` in `1..=3`.
pub fn syt_distribution(shape: &Partition, k: usize) -> Result<QPolynomial> {
    if !(1..=3).contains(&k) {
        return Err(Error::InvalidArgument(format!(
            "tableau statistics are defined for k in 1..=3, got {k}"
        )));
    }
    let mut poly = QPolynomial::zero();
    for t in enumerate_syt(shape) {
        poly.add_term(t.maj_k(k)?, 1);
    }
    Ok(poly)
}

/// Per-level outcome of a Mahonian check on one word set.
#[derive(Clone, Debug, Serialize)]
pub struct MahonianReport {
    pub multiset: String,
    pub spacers: Vec<usize>,
    pub k_max: usize,
    pub pass: bool,
    /// `distributions[k-1]` is the maj_k distribution, `k = 1..=k_max`.
    pub distributions: Vec<QPolynomial>,
    /// The closed-form oracle; present only when there are no spacers.
    pub multinomial: Option<QPolynomial>,
    pub mismatches: Vec<String>,
}

/// Check that the `maj_k` distributions over the words on `m` (with the
/// given spacer positions) agree for `k = 1..=k_max`, and against the
/// q-multinomial oracle in the spacer-free case.
pub fn verify_mahonian(
    m: &Multiset,
    spacer_positions: &BTreeSet<usize>,
    k_max: usize,
) -> Result<MahonianReport> {
    let k_max = k_max.max(1);
    let words = words_on(m, spacer_positions)?;
    let mut distributions = Vec::with_capacity(k_max);
    for k in 1..=k_max {
        let mut poly = QPolynomial::zero();
        for w in &words {
            poly.add_term(w.maj_k(k), 1);
        }
        distributions.push(poly);
    }
    let mut mismatches = Vec::new();
    for k in 2..=k_max {
        if distributions[k - 1] != distributions[0] {
            mismatches.push(format!(
                "maj_{k} distribution {} differs from maj distribution {}",
                distributions[k - 1],
                distributions[0]
            ));
        }
    }
    let multinomial = if spacer_positions.is_empty() {
        let oracle = q_multinomial(m);
        if oracle != distributions[0] {
            mismatches.push(format!(
                "maj distribution {} differs from q-multinomial {}",
                distributions[0], oracle
            ));
        }
        Some(oracle)
    } else {
        None
    };
    let expected_count = words.len() as u64;
    for (idx, d) in distributions.iter().enumerate() {
        if d.coeff_sum() != expected_count {
            mismatches.push(format!(
                "maj_{} coefficient sum {} != word count {expected_count}",
                idx + 1,
                d.coeff_sum()
            ));
        }
    }
    Ok(MahonianReport {
        multiset: m.to_string(),
        spacers: spacer_positions.iter().copied().collect(),
        k_max,
        pass: mismatches.is_empty(),
        distributions,
        multinomial,
        mismatches,
    })
}
