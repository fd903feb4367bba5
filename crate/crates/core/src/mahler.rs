//! Mahler-type functional equations for the fixed-coefficient generating
//! functions `A_m(k, x) = sum_n a_m(k, n) x^n`.
//!
//! For each level `k` there are polynomials `P_{k,0}, ..., P_{k,k}` and an
//! inhomogeneous term `Q_k` with
//! `sum_j P_{k,j}(x) A_m(k, x^{m^j}) + Q_k(x) = 0`. The whole system is
//! generated by a four-line recurrence from `P_{0,0} = 1`, `Q_0 = -1`;
//! level 0 corresponds to `A_m(0, x) = 1` (only `n = 0` has a zero-part
//! representation), under which the identity reads `A - 1 = 0`.
//!
//! Verification substitutes the truncated coefficient sequence by index
//! dilation (never resummation) and demands that every coefficient up to
//! the truncation vanish.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::engine;
use crate::intpoly::IntPoly;

/// The coefficient polynomials of one functional equation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MahlerSystem {
    pub m: u64,
    pub level: usize,
    /// `P_{k,0}, ..., P_{k,k}` in `x`.
    pub coeff_polys: Vec<IntPoly>,
    /// `Q_k` in `x`.
    pub inhom: IntPoly,
}

fn pow_usize(m: u64, e: usize) -> usize {
    let mut acc: usize = 1;
    for _ in 0..e {
        acc = acc
            .checked_mul(m as usize)
            .expect("exponent ladder overflows usize");
    }
    acc
}

/// Builds the system at level `k` by the coefficient recurrence.
pub fn mahler_system(m: u64, k: usize) -> MahlerSystem {
    assert!(m >= 2);
    assert!(
        (m as u128).pow(k as u32) <= 1 << 24,
        "coefficient degrees m^k grow too large to hold densely"
    );
    let mut coeff_polys = vec![IntPoly::one()];
    let mut inhom = IntPoly::from_ints(&[-1]);
    for level in 1..=k {
        let mut next = Vec::with_capacity(level + 1);
        next.push(coeff_polys[0].shift(pow_usize(m, level - 1) - 1));
        // Clearing the denominators x^{m^j} of the substituted level with
        // x^{m^(level-1)} fixes every exponent below; the endpoint rows are
        // the j = 0 and j = level edges of the same telescoping.
        for j in 1..level {
            let a = coeff_polys[j].shift(pow_usize(m, level - 1) - pow_usize(m, j));
            let b = coeff_polys[j - 1].shift(pow_usize(m, level - 1) - pow_usize(m, j - 1));
            next.push(&a - &b);
        }
        next.push(-&coeff_polys[level - 1]);
        coeff_polys = next;
        inhom = inhom.shift(pow_usize(m, level - 1));
    }
    MahlerSystem {
        m,
        level: k,
        coeff_polys,
        inhom,
    }
}

/// Checks the equation of `system` against a coefficient sequence truncated
/// at `x^(series.len() - 1)`; every computable coefficient of the left-hand
/// side must vanish.
pub fn verify_system(system: &MahlerSystem, series: &[BigInt]) -> bool {
    let trunc = series.len() - 1;
    let mut acc = vec![BigInt::zero(); trunc + 1];
    for (i, c) in system.inhom.coeffs().iter().enumerate() {
        if i > trunc {
            break;
        }
        acc[i] += c;
    }
    for (j, poly) in system.coeff_polys.iter().enumerate() {
        let step = pow_usize(system.m, j);
        for (e, c) in poly.coeffs().iter().enumerate() {
            if c.is_zero() || e > trunc {
                continue;
            }
            let mut idx = e;
            let mut n = 0;
            while idx <= trunc {
                if !series[n].is_zero() {
                    acc[idx] += c * &series[n];
                }
                idx += step;
                n += 1;
            }
        }
    }
    acc.iter().all(|c| c.is_zero())
}

/// Builds the level-`k` system and verifies it against the actual
/// coefficient sequence of `t^k`, truncated at `x^trunc`.
pub fn verify_mahler(m: u64, k: usize, trunc: u64) -> bool {
    let system = mahler_system(m, k);
    let series = engine::a_series(m, k as u64, trunc);
    verify_system(&system, &series)
}
