//! Partition polynomials `p_M(n, t)` and their coefficient sequences.
//!
//! Two independent routes compute the same objects:
//!
//! - [`Engine`] evaluates the two-case recurrence
//!   `p_M(m_1 n + j, t) = t p_M(m_1 n + j - 1, t)` (for `1 <= j < m_1`) and
//!   `p_M(m_1 n, t) = t p_M(m_1 n - 1, t) + p_{M'}(n, t)`, memoizing rows
//!   across the tower `M -> M' -> M'' -> ...` keyed by shift depth. For a
//!   constant sequence the whole tower collapses to a single cache.
//! - [`oracle_series`] expands the generating product
//!   `prod_j 1 / (1 - t q^{M_j})` truncated at `q^max_n`, never touching the
//!   recurrence. It is the master cross-check for everything else.
//!
//! On top of these sit the per-coefficient sequences `a_M(k, n)` (computed by
//! their own scalar recurrence, a third route), the boundedness data for
//! fixed `k`, the eventually-constant tail coefficients `a_M(n - k, n)`, and
//! partitions into parts `M_j - 1`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::intpoly::IntPoly;
use crate::mseq::MSeq;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    /// The truncated product kept too few factors to settle all requested
    /// coefficients.
    #[error("{factors} factors reach only M_{factors} = {reach} <= max_n = {max_n}")]
    InsufficientFactors {
        factors: usize,
        reach: BigInt,
        max_n: u64,
    },
}

/// Truncated table of partition polynomials from the generating product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesTable {
    max_n: u64,
    rows: Vec<IntPoly>,
}

impl SeriesTable {
    pub fn max_n(&self) -> u64 {
        self.max_n
    }

    pub fn rows(&self) -> &[IntPoly] {
        &self.rows
    }

    pub fn row(&self, n: u64) -> &IntPoly {
        &self.rows[n as usize]
    }

    /// `a_M(j, n)`: the number of representations of `n` with exactly `j`
    /// parts.
    pub fn coeff(&self, j: usize, n: u64) -> BigInt {
        self.row(n).coeff(j)
    }
}

/// Expands the generating product over the first `factors` factors,
/// truncated at `q^max_n`.
///
/// Requires `M_factors > max_n`, so that every omitted factor contributes
/// only its constant term below the truncation.
pub fn oracle_series(mseq: &MSeq, max_n: u64, factors: usize) -> Result<SeriesTable, EngineError> {
    let reach = mseq.big_m(factors);
    if reach <= BigInt::from(max_n) {
        return Err(EngineError::InsufficientFactors {
            factors,
            reach,
            max_n,
        });
    }
    let n = max_n as usize;
    let mut rows = vec![IntPoly::zero(); n + 1];
    rows[0] = IntPoly::one();
    for j in 0..factors {
        let part = mseq.big_m(j);
        if part > BigInt::from(max_n) {
            continue;
        }
        let part = usize::try_from(part).unwrap();
        // Multiplying by 1/(1 - t q^part): new[i] = old[i] + t * new[i - part].
        for i in part..=n {
            rows[i] = &rows[i] + &rows[i - part].shift(1);
        }
    }
    Ok(SeriesTable { max_n, rows })
}

/// [`oracle_series`] with the factor count chosen automatically.
pub fn oracle_table(mseq: &MSeq, max_n: u64) -> SeriesTable {
    let mut factors = 0;
    while mseq.big_m(factors) <= BigInt::from(max_n) {
        factors += 1;
    }
    oracle_series(mseq, max_n, factors).expect("factor count chosen to suffice")
}

/// Memoized recurrence evaluation over the shift tower of one base sequence.
///
/// A single engine is single-writer; bulk work over disjoint ranges wants
/// one engine per worker (or a frozen engine shared read-only).
pub struct Engine {
    seqs: Vec<MSeq>,
    head_len: usize,
    rows: Vec<Vec<IntPoly>>,
    coeffs: Vec<Vec<Vec<BigInt>>>,
}

impl Engine {
    pub fn new(mseq: MSeq) -> Self {
        let (head_len, tail_len) = mseq.shift_period();
        let depths = head_len + tail_len;
        let mut seqs = Vec::with_capacity(depths);
        seqs.push(mseq);
        for d in 1..depths {
            let next = seqs[d - 1].shift();
            seqs.push(next);
        }
        Engine {
            seqs,
            head_len,
            rows: vec![Vec::new(); depths],
            coeffs: vec![Vec::new(); depths],
        }
    }

    pub fn mseq(&self) -> &MSeq {
        &self.seqs[0]
    }

    /// Canonical cache key for the sequence shifted `shifts` times.
    fn canon_depth(&self, shifts: usize) -> usize {
        if shifts < self.seqs.len() {
            shifts
        } else {
            let cycle = self.seqs.len() - self.head_len;
            self.head_len + (shifts - self.head_len) % cycle
        }
    }

    fn next_depth(&self, depth: usize) -> usize {
        self.canon_depth(depth + 1)
    }

    fn ensure_rows(&mut self, depth: usize, n: u64) {
        let n = n as usize;
        if self.rows[depth].len() > n {
            return;
        }
        let m1 = self.seqs[depth].m_at(1);
        let nd = self.next_depth(depth);
        for i in self.rows[depth].len()..=n {
            let poly = if i == 0 {
                IntPoly::one()
            } else {
                let stepped = self.rows[depth][i - 1].shift(1);
                if (i as u64).is_multiple_of(m1) {
                    let sub = i as u64 / m1;
                    self.ensure_rows(nd, sub);
                    &stepped + &self.rows[nd][sub as usize]
                } else {
                    stepped
                }
            };
            self.rows[depth].push(poly);
        }
    }

    /// `p_M(n, t)` by the recurrence.
    pub fn p_poly(&mut self, n: u64) -> &IntPoly {
        self.ensure_rows(0, n);
        &self.rows[0][n as usize]
    }

    /// Read-only access to an already-computed row; a frozen engine can be
    /// shared across threads and read concurrently.
    pub fn cached_poly(&self, n: u64) -> Option<&IntPoly> {
        self.rows[0].get(n as usize)
    }

    /// `p` for the sequence shifted `shifts` times (`M`, `M'`, `M''`, ...).
    pub fn p_poly_shifted(&mut self, shifts: usize, n: u64) -> &IntPoly {
        let depth = self.canon_depth(shifts);
        self.ensure_rows(depth, n);
        &self.rows[depth][n as usize]
    }

    fn ensure_coeff_row(&mut self, depth: usize, k: usize, n: u64) {
        let n = n as usize;
        if k == 0 {
            if self.coeffs[depth].is_empty() {
                self.coeffs[depth].push(vec![BigInt::one()]);
            }
            let row = &mut self.coeffs[depth][0];
            while row.len() <= n {
                row.push(BigInt::zero());
            }
            return;
        }
        self.ensure_coeff_row(depth, k - 1, n as u64);
        let m1 = self.seqs[depth].m_at(1);
        let nd = self.next_depth(depth);
        if nd != depth {
            self.ensure_coeff_row(nd, k, n as u64 / m1);
        }
        while self.coeffs[depth].len() <= k {
            self.coeffs[depth].push(Vec::new());
        }
        for i in self.coeffs[depth][k].len()..=n {
            let v = if i == 0 {
                BigInt::zero()
            } else {
                let mut v = self.coeffs[depth][k - 1][i - 1].clone();
                if (i as u64).is_multiple_of(m1) {
                    v += &self.coeffs[nd][k][i / m1 as usize];
                }
                v
            };
            self.coeffs[depth][k].push(v);
        }
    }

    /// `a_M(j, n)` by the scalar coefficient recurrence
    /// `a_M(j, n) = a_M(j - 1, n - 1) + a_{M'}(j, n / m_1)`, with value zero
    /// outside `0 <= j <= n` (and whenever `n / m_1` is not an integer).
    pub fn coeff_a(&mut self, j: i64, n: i64) -> BigInt {
        self.coeff_a_shifted(0, j, n)
    }

    /// [`Engine::coeff_a`] for the shifted sequence.
    pub fn coeff_a_shifted(&mut self, shifts: usize, j: i64, n: i64) -> BigInt {
        if j < 0 || n < 0 || j > n {
            return BigInt::zero();
        }
        let depth = self.canon_depth(shifts);
        self.ensure_coeff_row(depth, j as usize, n as u64);
        self.coeffs[depth][j as usize][n as usize].clone()
    }

    /// The eventually-constant value of `a_M(n - k, n)`, valid once
    /// `n >= k m_1 / (m_1 - 1)`: a finite convolution of the shifted
    /// sequence's coefficients.
    pub fn tail_coeff_stable(&mut self, k: u64) -> BigInt {
        assert!(k >= 1);
        let m1 = self.seqs[0].m_at(1);
        let lo = k.div_ceil(m1);
        let hi = k / (m1 - 1);
        let mut sum = BigInt::zero();
        for j in lo..=hi {
            sum += self.coeff_a_shifted(1, (m1 * j - k) as i64, j as i64);
        }
        sum
    }
}

/// `p_M(n, t)` computed with a fresh cache.
pub fn p_poly(mseq: &MSeq, n: u64) -> IntPoly {
    Engine::new(mseq.clone()).p_poly(n).clone()
}

/// `a_M(j, n)` with a fresh cache.
pub fn coeff_a(mseq: &MSeq, j: i64, n: i64) -> BigInt {
    Engine::new(mseq.clone()).coeff_a(j, n)
}

/// `b_M(n) = p_M(n, 1)`, the number of M-ary partitions of `n`.
pub fn b_count(mseq: &MSeq, n: u64) -> BigInt {
    p_poly(mseq, n).eval_int(&BigInt::one())
}

/// The first `max_n + 1` values of `p_M(n, x)` for a fixed integer `x`,
/// by the recurrence evaluated directly on values (no polynomials held).
pub fn eval_sequence(mseq: &MSeq, max_n: u64, x: &BigInt) -> Vec<BigInt> {
    struct Vals<'a> {
        seqs: Vec<MSeq>,
        head_len: usize,
        vals: Vec<Vec<BigInt>>,
        x: &'a BigInt,
    }
    impl Vals<'_> {
        fn ensure(&mut self, depth: usize, n: u64) {
            let n = n as usize;
            if self.vals[depth].len() > n {
                return;
            }
            let m1 = self.seqs[depth].m_at(1);
            let nd = if depth + 1 < self.seqs.len() {
                depth + 1
            } else {
                self.head_len
            };
            for i in self.vals[depth].len()..=n {
                let v = if i == 0 {
                    BigInt::one()
                } else {
                    let mut v = &self.vals[depth][i - 1] * self.x;
                    if (i as u64).is_multiple_of(m1) {
                        let sub = i as u64 / m1;
                        self.ensure(nd, sub);
                        v += &self.vals[nd][sub as usize];
                    }
                    v
                };
                self.vals[depth].push(v);
            }
        }
    }
    let (head_len, tail_len) = mseq.shift_period();
    let depths = head_len + tail_len;
    let mut seqs = Vec::with_capacity(depths);
    seqs.push(mseq.clone());
    for d in 1..depths {
        let next = seqs[d - 1].shift();
        seqs.push(next);
    }
    let mut v = Vals {
        seqs,
        head_len,
        vals: vec![Vec::new(); depths],
        x,
    };
    v.ensure(0, max_n);
    v.vals.swap_remove(0)
}

/// Coefficients of `t^k` across `p_m(n, t)` for `n = 0..=max_n` (the m-ary
/// case), i.e. the expansion of the fixed-coefficient generating function.
pub fn a_series(m: u64, k: u64, max_n: u64) -> Vec<BigInt> {
    let mut engine = Engine::new(MSeq::constant(m).expect("m >= 2"));
    engine.ensure_coeff_row(0, k as usize, max_n);
    engine.coeffs[0][k as usize][..=max_n as usize].to_vec()
}

/// `a_m(k, n) mod modulus` for `n = 0..=max_n` in the m-ary case, holding
/// only two rolling coefficient rows. This makes kernel exploration of the
/// reduced coefficient sequences feasible at millions of indices.
pub fn a_series_mod(m: u64, k: u64, max_n: u64, modulus: u64) -> Vec<u64> {
    assert!(m >= 2 && modulus >= 1);
    let len = max_n as usize + 1;
    let mut prev = vec![0u64; len];
    prev[0] = 1 % modulus;
    for _ in 1..=k {
        let mut cur = vec![0u64; len];
        for n in 1..len {
            let mut v = prev[n - 1];
            if n % m as usize == 0 {
                v += cur[n / m as usize];
            }
            cur[n] = v % modulus;
        }
        prev = cur;
    }
    prev
}

/// Boundedness data for the sequence `a_m(k, n)` over `n`.
///
/// `recurrence` is the value `C_k` of the integer recurrence `C_j = 1` for
/// `j < m`, `C_k = C_{k-1} + floor(k / (m-1)) C_{k-m}`, which bounds
/// `a_m(k, n)` for `n` divisible by `m`. The closed form
/// `(m/(m-1))^floor(k/m) * prod_{j < floor(k/m)} (k - j m)` is carried as an
/// exact fraction `closed_num / closed_den`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffBound {
    pub recurrence: BigInt,
    pub closed_num: BigInt,
    pub closed_den: BigInt,
}

impl CoeffBound {
    /// Does `a <= closed_num / closed_den` hold exactly?
    pub fn closed_holds(&self, a: &BigInt) -> bool {
        a * &self.closed_den <= self.closed_num
    }
}

pub fn coeff_bound(m: u64, k: u64) -> CoeffBound {
    assert!(m >= 2);
    let ks = k as usize;
    let mut c: Vec<BigInt> = Vec::with_capacity(ks + 1);
    for j in 0..=ks {
        let v = if (j as u64) < m {
            BigInt::one()
        } else {
            &c[j - 1] + BigInt::from(j as u64 / (m - 1)) * &c[j - m as usize]
        };
        c.push(v);
    }
    let e = k / m;
    let mut num = BigInt::from(m).pow(e as u32);
    for j in 0..e {
        num *= BigInt::from(k - j * m);
    }
    let den = BigInt::from(m - 1).pow(e as u32);
    CoeffBound {
        recurrence: c.pop().unwrap(),
        closed_num: num,
        closed_den: den,
    }
}

/// The m-independent bound `2^floor(k/2) * prod_{j < floor(k/2)} (k - 2j)`.
pub fn uniform_bound(k: u64) -> BigInt {
    let e = k / 2;
    let mut b = BigInt::one() << e;
    for j in 0..e {
        b *= BigInt::from(k - 2 * j);
    }
    b
}

/// Stable tail coefficient with a fresh cache; see
/// [`Engine::tail_coeff_stable`].
pub fn tail_coeff_stable(mseq: &MSeq, k: u64) -> BigInt {
    Engine::new(mseq.clone()).tail_coeff_stable(k)
}

/// Counts of partitions of `0..=max_n` into parts of the form `M_j - 1`
/// (`j >= 1`), by truncated product expansion.
pub fn s_partitions(mseq: &MSeq, max_n: u64) -> Vec<BigInt> {
    let n = max_n as usize;
    let mut counts = vec![BigInt::zero(); n + 1];
    counts[0] = BigInt::one();
    let mut j = 1;
    loop {
        let part = &mseq.big_m(j) - 1;
        if part > BigInt::from(max_n) {
            break;
        }
        let part = usize::try_from(part).unwrap();
        for i in part..=n {
            let add = counts[i - part].clone();
            counts[i] += add;
        }
        j += 1;
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(spec: &str) -> MSeq {
        MSeq::parse(spec).unwrap()
    }

    /// Recurrence with no cache at all, used to validate the cached engine.
    fn p_uncached(mseq: &MSeq, n: u64) -> IntPoly {
        if n == 0 {
            return IntPoly::one();
        }
        let m1 = mseq.m_at(1);
        let stepped = p_uncached(mseq, n - 1).shift(1);
        if n.is_multiple_of(m1) {
            &stepped + &p_uncached(&mseq.shift(), n / m1)
        } else {
            stepped
        }
    }

    #[test]
    fn base_cases() {
        for spec in ["2", "3", "2,3;4"] {
            let mut e = Engine::new(m(spec));
            assert_eq!(e.p_poly(0), &IntPoly::one());
            assert_eq!(e.p_poly(1), &IntPoly::monomial(1));
        }
    }

    #[test]
    fn binary_small_rows() {
        let mut e = Engine::new(m("2"));
        assert_eq!(e.p_poly(2), &IntPoly::from_ints(&[0, 1, 1]));
        assert_eq!(e.p_poly(3), &IntPoly::from_ints(&[0, 0, 1, 1]));
        assert_eq!(e.p_poly(4), &IntPoly::from_ints(&[0, 1, 1, 1, 1]));
    }

    #[test]
    fn closed_form_small_n() {
        // For n = k m + j with 0 <= k < m: p = t^{k+j} (1 + t^{m-1} + ... +
        // t^{(m-1)k}), checked for several m.
        for mm in [2u64, 3, 4, 5] {
            let mut e = Engine::new(m(&mm.to_string()));
            for k in 0..mm {
                for j in 0..mm {
                    let n = k * mm + j;
                    let mut expect = IntPoly::zero();
                    for i in 0..=k {
                        expect = &expect + &IntPoly::monomial((i * (mm - 1)) as usize);
                    }
                    let expect = expect.shift((k + j) as usize);
                    assert_eq!(e.p_poly(n), &expect, "m={mm} n={n}");
                }
            }
        }
    }

    #[test]
    fn cached_matches_uncached() {
        for spec in ["2", "3", "2,3;4", "4,6;2"] {
            let seq = m(spec);
            let mut e = Engine::new(seq.clone());
            for n in 0..40 {
                assert_eq!(e.p_poly(n), &p_uncached(&seq, n), "{spec} n={n}");
            }
        }
    }

    #[test]
    fn frozen_cache_reads_across_threads() {
        let mut e = Engine::new(m("2"));
        e.p_poly(50);
        assert!(e.cached_poly(51).is_none());
        let e = &e;
        std::thread::scope(|scope| {
            for offset in 0..2u64 {
                scope.spawn(move || {
                    for n in (offset..=50).step_by(2) {
                        assert_eq!(e.cached_poly(n).unwrap().degree(), Some(n as usize));
                    }
                });
            }
        });
    }

    #[test]
    fn oracle_binary_hand_expansion() {
        // 1/((1-tq)(1-tq^2)) through q^2: rows 1, t, t^2 + t.
        let table = oracle_series(&m("2"), 2, 2).unwrap();
        assert_eq!(table.row(0), &IntPoly::one());
        assert_eq!(table.row(1), &IntPoly::monomial(1));
        assert_eq!(table.row(2), &IntPoly::from_ints(&[0, 1, 1]));
    }

    #[test]
    fn oracle_factor_guard() {
        assert!(matches!(
            oracle_series(&m("2"), 10, 3),
            Err(EngineError::InsufficientFactors { .. })
        ));
        assert!(oracle_series(&m("2"), 10, 4).is_ok());
    }

    #[test]
    fn oracle_row_m_minus_one_is_monomial() {
        for mm in [2u64, 3, 5] {
            let table = oracle_table(&m(&mm.to_string()), mm - 1);
            assert_eq!(table.row(mm - 1), &IntPoly::monomial((mm - 1) as usize));
        }
    }

    #[test]
    fn oracle_equals_recurrence() {
        for spec in ["2", "3", "5", "2,3;4", "4,6;2"] {
            let seq = m(spec);
            let table = oracle_table(&seq, 60);
            let mut e = Engine::new(seq);
            for n in 0..=60 {
                assert_eq!(e.p_poly(n), table.row(n), "{spec} n={n}");
            }
        }
    }

    #[test]
    fn degrees_match_index() {
        for spec in ["2", "3", "2,3;4"] {
            let mut e = Engine::new(m(spec));
            for n in 0..200u64 {
                assert_eq!(e.p_poly(n).degree(), Some(n as usize));
            }
        }
    }

    #[test]
    fn coeff_a_matches_polynomials() {
        for spec in ["2", "3", "2,3;4"] {
            let seq = m(spec);
            let mut e = Engine::new(seq);
            for n in 0..50i64 {
                let p = e.p_poly(n as u64).clone();
                for j in 0..=n {
                    assert_eq!(e.coeff_a(j, n), p.coeff(j as usize), "{spec} {j} {n}");
                }
            }
        }
    }

    #[test]
    fn coeff_a_conventions() {
        let mut e = Engine::new(m("2"));
        assert_eq!(e.coeff_a(-1, 5), BigInt::zero());
        assert_eq!(e.coeff_a(3, 2), BigInt::zero());
        assert_eq!(e.coeff_a(0, 0), BigInt::one());
        // one part: exactly the powers of the base
        for n in 1..64i64 {
            let expect = if (n as u64).is_power_of_two() {
                BigInt::one()
            } else {
                BigInt::zero()
            };
            assert_eq!(e.coeff_a(1, n), expect, "n={n}");
        }
        assert_eq!(e.coeff_a(2, 2), BigInt::one());
    }

    #[test]
    fn b_count_small_values() {
        let seq = m("2");
        let got: Vec<BigInt> = (0..8).map(|n| b_count(&seq, n)).collect();
        let expect: Vec<BigInt> = [1, 1, 2, 2, 4, 4, 6, 6]
            .iter()
            .map(|&v| BigInt::from(v))
            .collect();
        assert_eq!(got, expect);
        assert_eq!(b_count(&m("3"), 3), BigInt::from(2));
        for mm in [2u64, 5, 7] {
            for n in 0..mm {
                assert_eq!(b_count(&m(&mm.to_string()), n), BigInt::one());
            }
        }
    }

    #[test]
    fn b_count_matches_direct_enumeration() {
        // Independent route: count multisets of powers of 2 summing to n.
        fn count(n: u64, max_part: u64) -> u64 {
            if n == 0 {
                return 1;
            }
            if max_part == 0 {
                return 0;
            }
            let mut total = 0;
            let mut used = 0;
            while used <= n {
                total += count(n - used, max_part / 2);
                used += max_part;
            }
            total
        }
        let seq = m("2");
        for n in 0..40u64 {
            let cap = (n + 1).next_power_of_two();
            assert_eq!(b_count(&seq, n), BigInt::from(count(n, cap)), "n={n}");
        }
    }

    #[test]
    fn eval_sequence_matches_polynomials() {
        for spec in ["2", "3", "2,3;4"] {
            let seq = m(spec);
            for x in [1i64, -1, 2] {
                let x = BigInt::from(x);
                let vals = eval_sequence(&seq, 80, &x);
                let mut e = Engine::new(seq.clone());
                for n in 0..=80u64 {
                    assert_eq!(vals[n as usize], e.p_poly(n).eval_int(&x), "{spec} {x} {n}");
                }
            }
        }
    }

    #[test]
    fn a_series_examples() {
        let s = a_series(2, 0, 10);
        assert_eq!(s[0], BigInt::one());
        assert!(s[1..].iter().all(|v| v.is_zero()));

        let s = a_series(2, 1, 64);
        for (n, v) in s.iter().enumerate() {
            let expect = n > 0 && (n as u64).is_power_of_two();
            assert_eq!(!v.is_zero(), expect, "n={n}");
        }
    }

    #[test]
    fn a_series_satisfies_shift_identity() {
        // A(k, x) - x A(k-1, x) = A(k, x^m), compared coefficientwise.
        for mm in [2u64, 3] {
            for k in 1..=4u64 {
                let trunc = 120usize;
                let ak = a_series(mm, k, trunc as u64);
                let prev = a_series(mm, k - 1, trunc as u64);
                for n in 0..=trunc {
                    let lhs = &ak[n]
                        - if n > 0 {
                            prev[n - 1].clone()
                        } else {
                            BigInt::zero()
                        };
                    let rhs = if n % mm as usize == 0 {
                        ak[n / mm as usize].clone()
                    } else {
                        BigInt::zero()
                    };
                    assert_eq!(lhs, rhs, "m={mm} k={k} n={n}");
                }
            }
        }
    }

    #[test]
    fn a_series_mod_matches_exact() {
        for mm in [2u64, 3, 4] {
            for k in 0..=5u64 {
                let exact = a_series(mm, k, 200);
                let reduced = a_series_mod(mm, k, 200, mm);
                for (n, v) in exact.iter().enumerate() {
                    let expect = num_traits::ToPrimitive::to_u64(&(v % mm)).unwrap();
                    assert_eq!(reduced[n], expect, "m={mm} k={k} n={n}");
                }
            }
        }
    }

    #[test]
    fn coeff_bound_values() {
        for mm in [2u64, 3, 4] {
            for k in 0..mm {
                assert_eq!(coeff_bound(mm, k).recurrence, BigInt::one());
            }
        }
        assert_eq!(coeff_bound(2, 2).recurrence, BigInt::from(3));
        let b4 = coeff_bound(2, 4);
        assert_eq!(b4.closed_num, BigInt::from(32));
        assert_eq!(b4.closed_den, BigInt::one());
        assert!(b4.closed_holds(&b4.recurrence));
        // the recurrence value never exceeds the closed form
        for mm in [2u64, 3, 4] {
            for k in 0..=20 {
                let b = coeff_bound(mm, k);
                assert!(b.closed_holds(&b.recurrence), "m={mm} k={k}");
            }
        }
        assert_eq!(uniform_bound(4), BigInt::from(32));
        assert_eq!(uniform_bound(0), BigInt::one());
    }

    #[test]
    fn tail_coefficients_stabilize() {
        for spec in ["2", "3", "2,3;4"] {
            let seq = m(spec);
            let mut e = Engine::new(seq.clone());
            let m1 = seq.m_at(1);
            for k in 1..=6u64 {
                let stable = e.tail_coeff_stable(k);
                let start = (k * m1).div_ceil(m1 - 1);
                for n in start..start + 25 {
                    assert_eq!(
                        e.coeff_a((n - k) as i64, n as i64),
                        stable,
                        "{spec} k={k} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn tail_below_m1_minus_one_vanishes() {
        let seq = m("4,6;2");
        let mut e = Engine::new(seq);
        for k in 1..=2u64 {
            assert_eq!(e.tail_coeff_stable(k), BigInt::zero(), "k={k}");
        }
    }

    #[test]
    fn s_partition_counts() {
        // Parts 1, 3, 7, 15, ... for the binary sequence.
        let s = s_partitions(&m("2"), 20);
        assert_eq!(s[0], BigInt::one());
        // direct enumeration with parts {1, 3, 7, 15}
        fn count(n: i64, parts: &[i64]) -> i64 {
            if n == 0 {
                return 1;
            }
            let (&p, rest) = match parts.split_last() {
                Some(x) => x,
                None => return 0,
            };
            let mut total = 0;
            let mut used = 0;
            while used <= n {
                total += count(n - used, rest);
                used += p;
            }
            total
        }
        for n in 0..=20 {
            assert_eq!(
                s[n as usize],
                BigInt::from(count(n, &[1, 3, 7, 15])),
                "n={n}"
            );
        }
        // part 1 exists whenever m_1 = 2, so every count is positive
        assert!(s.iter().all(|v| v > &BigInt::zero()));
    }

    #[test]
    fn s_partitions_mixed_sequence() {
        // head=[2,3] tail=[4]: parts 1, 5, 23, ...
        let s = s_partitions(&m("2,3;4"), 10);
        let expect: Vec<BigInt> = [1u64, 1, 1, 1, 1, 2, 2, 2, 2, 2, 3]
            .iter()
            .map(|&v| BigInt::from(v))
            .collect();
        assert_eq!(s, expect);
    }
}
