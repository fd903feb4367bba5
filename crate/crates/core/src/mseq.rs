//! Base sequences `M = (m_i)` and their digit systems.
//!
//! A sequence is a finite head followed by a repeating cycle, which covers
//! every eventually periodic sequence (the constant case is an empty head
//! with a one-element cycle). `m_0 = 1` is implicit and every listed value
//! is at least 2. On top of the sequence sit the cumulative products
//! `M_i = m_1 * ... * m_i`, the unique expansion
//! `n = a_0 + a_1 M_1 + ... + a_k M_k` with `0 <= a_j < m_{j+1}`, plain
//! base-m digit sums and m-adic valuations.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MSeqError {
    #[error("invalid sequence spec `{0}`: {1}")]
    InvalidSpec(String, String),
    #[error("digit {digit} at position {position} exceeds bound {bound}")]
    DigitOutOfRange {
        digit: u64,
        position: usize,
        bound: u64,
    },
}

/// An eventually periodic base sequence: explicit head, then a cycle.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MSeq {
    head: Vec<u64>,
    tail: Vec<u64>,
}

impl MSeq {
    pub fn new(head: Vec<u64>, tail: Vec<u64>) -> Result<Self, MSeqError> {
        let spec = || format!("head={head:?} tail={tail:?}");
        if tail.is_empty() {
            return Err(MSeqError::InvalidSpec(
                spec(),
                "repeating part must be nonempty".into(),
            ));
        }
        if head.iter().chain(tail.iter()).any(|&m| m < 2) {
            return Err(MSeqError::InvalidSpec(
                spec(),
                "every element must be at least 2".into(),
            ));
        }
        Ok(MSeq { head, tail })
    }

    /// The m-ary case `M = (1, m, m, ...)`.
    pub fn constant(m: u64) -> Result<Self, MSeqError> {
        MSeq::new(Vec::new(), vec![m])
    }

    /// Parses the CLI syntax: `"2"` is constant 2, `"2,3;4"` is head 2,3
    /// with repeating 4, `"2,3"` is the cycle 2,3,2,3,...
    pub fn parse(spec: &str) -> Result<Self, MSeqError> {
        let bad = |msg: &str| MSeqError::InvalidSpec(spec.to_string(), msg.into());
        let parse_list = |part: &str| -> Result<Vec<u64>, MSeqError> {
            if part.trim().is_empty() {
                return Ok(Vec::new());
            }
            part.split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<u64>()
                        .map_err(|_| bad(&format!("`{tok}` is not an integer")))
                })
                .collect()
        };
        let (head, tail) = match spec.split_once(';') {
            Some((h, t)) => (parse_list(h)?, parse_list(t)?),
            None => (Vec::new(), parse_list(spec)?),
        };
        MSeq::new(head, tail)
    }

    pub fn head(&self) -> &[u64] {
        &self.head
    }

    pub fn tail(&self) -> &[u64] {
        &self.tail
    }

    pub fn is_constant(&self) -> bool {
        self.head.is_empty() && self.tail.len() == 1
    }

    /// The i-th element, i >= 1 (head first, then the cycle forever).
    pub fn m_at(&self, i: usize) -> u64 {
        assert!(i >= 1, "sequence indices start at 1");
        if i <= self.head.len() {
            self.head[i - 1]
        } else {
            self.tail[(i - 1 - self.head.len()) % self.tail.len()]
        }
    }

    /// Cumulative product `M_i = m_1 * ... * m_i`, with `M_0 = 1`.
    pub fn big_m(&self, i: usize) -> BigInt {
        let mut acc = BigInt::one();
        for j in 1..=i {
            acc *= self.m_at(j);
        }
        acc
    }

    /// Drops `m_1`: the head loses its first element, a bare cycle rotates.
    pub fn shift(&self) -> MSeq {
        if self.head.is_empty() {
            let mut tail = self.tail.clone();
            tail.rotate_left(1);
            MSeq {
                head: Vec::new(),
                tail,
            }
        } else {
            MSeq {
                head: self.head[1..].to_vec(),
                tail: self.tail.clone(),
            }
        }
    }

    /// Number of shifts after which the tower of shifted sequences repeats.
    pub(crate) fn shift_period(&self) -> (usize, usize) {
        (self.head.len(), self.tail.len())
    }

    /// The unique digits of `n` with `n = sum a_j M_j`, `0 <= a_j < m_{j+1}`.
    pub fn to_digits(&self, n: u64) -> MaryDigits {
        if n == 0 {
            return MaryDigits { digits: vec![0] };
        }
        let mut digits = Vec::new();
        let mut rest = n;
        let mut j = 1;
        while rest > 0 {
            let m = self.m_at(j);
            digits.push(rest % m);
            rest /= m;
            j += 1;
        }
        MaryDigits { digits }
    }

    /// Inverse of [`MSeq::to_digits`]; checks every digit bound.
    pub fn from_digits(&self, digits: &MaryDigits) -> Result<u64, MSeqError> {
        let mut acc: u128 = 0;
        let mut weight: u128 = 1;
        for (j, &a) in digits.digits.iter().enumerate() {
            let bound = self.m_at(j + 1) - 1;
            if a > bound {
                return Err(MSeqError::DigitOutOfRange {
                    digit: a,
                    position: j,
                    bound,
                });
            }
            acc += a as u128 * weight;
            weight *= self.m_at(j + 1) as u128;
        }
        Ok(u64::try_from(acc).expect("value exceeds u64"))
    }
}

impl fmt::Display for MSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[u64]| {
            xs.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        if self.head.is_empty() {
            write!(f, "{}", join(&self.tail))
        } else {
            write!(f, "{};{}", join(&self.head), join(&self.tail))
        }
    }
}

/// Digits `a_0, ..., a_k` of an M-ary expansion, least significant first.
/// Canonical form: the top digit is nonzero except for `n = 0`, which is
/// the single digit `[0]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MaryDigits {
    digits: Vec<u64>,
}

impl MaryDigits {
    pub fn new(digits: Vec<u64>) -> Self {
        MaryDigits { digits }
    }

    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    /// Index of the top digit (`k` in `a_0 + a_1 M_1 + ... + a_k M_k`).
    pub fn top_index(&self) -> usize {
        self.digits.len() - 1
    }
}

/// Plain base-m digits of `n`, least significant first; empty for `n = 0`.
pub fn base_digits(m: u64, n: u64) -> Vec<u64> {
    assert!(m >= 2);
    let mut digits = Vec::new();
    let mut rest = n;
    while rest > 0 {
        digits.push(rest % m);
        rest /= m;
    }
    digits
}

/// Digit sum of `n` in base m.
pub fn digit_sum(m: u64, n: u64) -> u64 {
    base_digits(m, n).iter().sum()
}

/// Largest `e` with `m^e | n`; requires `n >= 1`.
pub fn valuation(m: u64, n: u64) -> u32 {
    assert!(m >= 2);
    assert!(n >= 1, "valuation of zero is infinite");
    let mut e = 0;
    let mut rest = n;
    while rest.is_multiple_of(m) {
        rest /= m;
        e += 1;
    }
    e
}
