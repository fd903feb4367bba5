//! Digit-product congruences for partition polynomials.
//!
//! The modulus is built from geometric sums: each adjacent pair of sequence
//! elements contributes the generator
//! `t^{m_i + m_{i+1} - 1} (1 + t^{m_i - 1} + ... + t^{(m_i - 1)(m_{i+1} - 1)})`,
//! and the modulus is the monic gcd of all generators up to the top digit
//! index. Modulo that gcd, `p_M(n, t)` collapses to a product read off the
//! M-ary digits of `n`. Setting `t = 1` recovers the classical residue of
//! the partition count modulo `gcd(m_1, ..., m_k)`, and rewriting in
//! `q = t^(m-1)` gives the same statement for quantum integers.
//!
//! Congruence always means exact divisibility of the difference in `Z[t]`
//! by the monic modulus; no rational arithmetic appears.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::engine::Engine;
use crate::intpoly::{IntPoly, PolyError};
use crate::mseq::{self, MSeq, MaryDigits};
use crate::roots;

/// `1 + t^stride + t^(2 stride) + ... + t^((terms - 1) stride)`;
/// zero for `terms = 0`, one for `terms = 1`.
pub fn geom_sum(terms: u64, stride: usize) -> IntPoly {
    assert!(stride >= 1);
    if terms == 0 {
        return IntPoly::zero();
    }
    let mut coeffs = vec![BigInt::zero(); (terms as usize - 1) * stride + 1];
    for i in 0..terms as usize {
        coeffs[i * stride] = BigInt::one();
    }
    IntPoly::from_coeffs(coeffs)
}

/// The i-th generator `t^{m_i + m_{i+1} - 1} * geom_sum(m_{i+1}, m_i - 1)`.
fn generator(mseq: &MSeq, i: usize) -> IntPoly {
    let mi = mseq.m_at(i);
    let mi1 = mseq.m_at(i + 1);
    geom_sum(mi1, (mi - 1) as usize).shift((mi + mi1 - 1) as usize)
}

/// Monic gcd of the first `h` generators (`h >= 1`). For a constant
/// sequence every generator coincides, so this is
/// `t^{2m-1} * geom_sum(m, m-1)`.
pub fn modulus_poly(mseq: &MSeq, h: usize) -> Result<IntPoly, PolyError> {
    assert!(h >= 1);
    let mut g = generator(mseq, 1);
    for i in 2..=h {
        g = IntPoly::gcd_monic(&g, &generator(mseq, i))?;
    }
    if h == 1 {
        // a single generator is already monic, but normalize uniformly
        g = IntPoly::gcd_monic(&g, &IntPoly::zero())?;
    }
    Ok(g)
}

/// The digit side of the congruence:
/// `t^{a_0} * prod_{j>=1} t^{a_j} geom_sum(a_j + 1, m_j - 1)`.
pub fn digit_rhs(mseq: &MSeq, digits: &MaryDigits) -> IntPoly {
    let ds = digits.digits();
    let mut acc = IntPoly::monomial(ds[0] as usize);
    for (j, &a) in ds.iter().enumerate().skip(1) {
        let stride = (mseq.m_at(j) - 1) as usize;
        acc = &acc * &geom_sum(a + 1, stride).shift(a as usize);
    }
    acc
}

/// One verified instance of the digit-product congruence.
#[derive(Debug, Clone)]
pub struct CongruenceCase {
    pub mseq: MSeq,
    pub n: u64,
    pub digits: MaryDigits,
    pub modulus: IntPoly,
    pub lhs: IntPoly,
    pub rhs: IntPoly,
    pub holds: bool,
}

/// Builds and checks the congruence for one `n`: the modulus index is the
/// top digit index (at least 1, since the difference for single-digit `n`
/// vanishes identically anyway).
pub fn congruence_case(engine: &mut Engine, n: u64) -> Result<CongruenceCase, PolyError> {
    let mseq = engine.mseq().clone();
    let digits = mseq.to_digits(n);
    let modulus = modulus_poly(&mseq, digits.top_index().max(1))?;
    let lhs = engine.p_poly(n).clone();
    let rhs = digit_rhs(&mseq, &digits);
    let holds = (&lhs - &rhs).divisible_by(&modulus);
    Ok(CongruenceCase {
        mseq,
        n,
        digits,
        modulus,
        lhs,
        rhs,
        holds,
    })
}

/// The single-step reduction behind the congruence: for `n = k m_2 + r`,
/// `p_M(m_1 n, t)` matches `t^r geom_sum(r + 1, m_1 - 1) p_{M'}(k m_2, t)`
/// modulo the first generator.
pub fn step_congruence_holds(engine: &mut Engine, n: u64) -> bool {
    let m1 = engine.mseq().m_at(1);
    let m2 = engine.mseq().m_at(2);
    let r = n % m2;
    let k = n / m2;
    let lhs = engine.p_poly(m1 * n).clone();
    let shifted = engine.p_poly_shifted(1, k * m2).clone();
    let rhs = &geom_sum(r + 1, (m1 - 1) as usize).shift(r as usize) * &shifted;
    let modulus = generator(engine.mseq(), 1);
    (&lhs - &rhs).divisible_by(&modulus)
}

/// `prod_{j>=1} (a_j + 1)` over the M-ary digits of `n`, exact.
pub fn scalar_digit_product(mseq: &MSeq, n: u64) -> BigInt {
    let digits = mseq.to_digits(n);
    let mut acc = BigInt::one();
    for &a in digits.digits().iter().skip(1) {
        acc *= a + 1;
    }
    acc
}

/// `gcd(m_1, ..., m_k)` with `k` the top digit index of `n`; zero when
/// `n` has a single digit (no constraint beyond exact equality).
pub fn scalar_modulus(mseq: &MSeq, n: u64) -> u64 {
    let k = mseq.to_digits(n).top_index();
    let mut g = 0u64;
    for j in 1..=k {
        g = g.gcd(&mseq.m_at(j));
    }
    g
}

/// Does `value` match the digit product modulo `gcd(m_1, ..., m_k)`?
/// With a zero modulus the values must agree exactly.
pub fn scalar_residue_holds(mseq: &MSeq, n: u64, value: &BigInt) -> bool {
    let diff = value - scalar_digit_product(mseq, n);
    let modulus = scalar_modulus(mseq, n);
    if modulus == 0 {
        diff.is_zero()
    } else {
        (diff % modulus).is_zero()
    }
}

/// The quantum form: the q-recurrence polynomial of `n` matches the product
/// of quantum integers `[a_j + 1]_q` over the base-m digits of `n`, modulo
/// `[m]_q = 1 + q + ... + q^{m-1}`.
pub fn quantum_holds(m: u64, n: u64) -> bool {
    quantum_holds_with(&roots::q_poly(m, n), m, n)
}

/// [`quantum_holds`] against a precomputed q-polynomial (bulk sweeps).
pub fn quantum_holds_with(q_poly: &IntPoly, m: u64, n: u64) -> bool {
    let mut prod = IntPoly::one();
    for d in mseq::base_digits(m, n) {
        prod = &prod * &geom_sum(d + 1, 1);
    }
    let modulus = geom_sum(m, 1);
    (q_poly - &prod)
        .rem_mod(&modulus)
        .expect("quantum modulus is monic")
        .is_zero()
}
