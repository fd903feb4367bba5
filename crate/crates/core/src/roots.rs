//! Root structure of the m-ary partition polynomials.
//!
//! Rational roots only ever sit at 0 and -1: the multiplicity at 0 is the
//! base-m digit sum of `n`, and the value at -1 collapses to a three-valued
//! digit formula for even `m` while growing like `(-1)^n b_m(n)` for odd
//! `m`. Complex roots are located numerically (Aberth-Ehrlich simultaneous
//! iteration) and compared against the `4^(1/m)` modulus bound; the
//! `t^(m-1)`-support normalization and its recurrence in `q = t^(m-1)` live
//! here too.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::engine::{self, Engine};
use crate::intpoly::IntPoly;
use crate::mseq::{self, MSeq};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RootsError {
    #[error("base {0} is odd; the sign formula needs an even base")]
    OddBase(u64),
    #[error("root iteration did not converge within {iterations} iterations")]
    NoConvergence {
        iterations: u32,
        partial: RootReport,
    },
    #[error(
        "exponent {exponent} of a surviving term is not a multiple of {period} (m={m}, n={n})"
    )]
    SupportViolation {
        m: u64,
        n: u64,
        exponent: usize,
        period: u64,
    },
}

/// Exact value `p_M(n, -1)`: the surplus of even-part-count partitions
/// over odd-part-count ones.
pub fn eval_minus_one(mseq: &MSeq, n: u64) -> BigInt {
    engine::p_poly(mseq, n).eval_int(&BigInt::from(-1))
}

/// `p_M(n, -1)` for all `n = 0..=max_n`, by the value-level recurrence.
pub fn minus_one_sequence(mseq: &MSeq, max_n: u64) -> Vec<BigInt> {
    engine::eval_sequence(mseq, max_n, &BigInt::from(-1))
}

/// The digit formula for `p_m(n, -1)` with even `m`: sign from the lowest
/// digit, zero as soon as any higher digit is odd.
pub fn even_m_sign(m: u64, n: u64) -> Result<i8, RootsError> {
    if !m.is_multiple_of(2) {
        return Err(RootsError::OddBase(m));
    }
    let digits = mseq::base_digits(m, n);
    if digits.iter().skip(1).any(|d| d % 2 == 1) {
        return Ok(0);
    }
    Ok(if digits.first().copied().unwrap_or(0) % 2 == 0 {
        1
    } else {
        -1
    })
}

/// The first `len` values of the even-base sign sequence, straight from the
/// digit formula (which the dichotomy suite proves equal to the exact
/// evaluation). Panics on an odd base.
pub fn sign_sequence(m: u64, len: usize) -> Vec<i8> {
    (0..len as u64)
        .map(|n| even_m_sign(m, n).expect("sign sequence needs an even base"))
        .collect()
}

/// Rational-root classification of one polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalRoots {
    /// Multiplicity of the root 0 (index of the lowest nonzero coefficient).
    pub zero_multiplicity: usize,
    pub minus_one_is_root: bool,
}

pub fn rational_roots(engine: &mut Engine, n: u64) -> RationalRoots {
    let p = engine.p_poly(n);
    RationalRoots {
        zero_multiplicity: p
            .order_at_zero()
            .expect("partition polynomials are nonzero"),
        minus_one_is_root: p.eval_int(&BigInt::from(-1)).is_zero(),
    }
}

/// The modulus bound `4^(1/m)` for nonzero roots; at most 2, decreasing
/// in `m`.
pub fn radius_bound(m: u64) -> f64 {
    4f64.powf(1.0 / m as f64)
}

/// Numeric roots of one polynomial, including the deflated zeros.
#[derive(Debug, Clone, PartialEq)]
pub struct RootReport {
    pub zero_multiplicity: usize,
    pub roots: Vec<Complex64>,
    /// Backward error per root: `|p(z)| / max(1, sum |c_i| |z|^i)` over the
    /// deflated polynomial (0 for the deflated zeros). A raw `|p(z)|` would
    /// drown in f64 rounding noise at high degrees.
    pub residuals: Vec<f64>,
    pub max_modulus: f64,
    pub iterations: u32,
}

fn horner_complex(coeffs: &[f64], z: Complex64) -> Complex64 {
    let mut acc = Complex64::zero();
    for &c in coeffs.iter().rev() {
        acc = acc * z + c;
    }
    acc
}

/// Evaluates `p(z)` together with `sum |c_j| |z|^j`, the natural scale for
/// a relative residual.
fn horner_with_scale(coeffs: &[f64], z: Complex64) -> (Complex64, f64) {
    let mut acc = Complex64::zero();
    let mut scale = 0.0;
    let r = z.norm();
    for &c in coeffs.iter().rev() {
        acc = acc * z + c;
        scale = scale * r + c.abs();
    }
    (acc, scale)
}

/// Finds all roots of `p` by deflating the power of `t` and running
/// Aberth-Ehrlich simultaneous iteration on the rest in double precision.
///
/// `tol` is the relative residual target (`|p(z)| <= tol * sum |c_j||z|^j`);
/// the iteration cap is 200.
pub fn complex_roots(p: &IntPoly, tol: f64) -> Result<RootReport, RootsError> {
    assert!(!p.is_zero(), "root finding needs a nonzero polynomial");
    const MAX_ITER: u32 = 200;
    let ord = p.order_at_zero().unwrap();
    let coeffs: Vec<f64> = p.coeffs()[ord..]
        .iter()
        .map(|c| c.to_f64().expect("coefficient overflows f64 range"))
        .collect();
    let deg = coeffs.len() - 1;

    let mut roots = vec![Complex64::zero(); ord];
    let mut residuals = vec![0.0; ord];
    let mut iterations = 0;

    if deg > 0 {
        let deriv: Vec<f64> = (1..=deg).map(|i| coeffs[i] * i as f64).collect();
        // Guesses on a circle just outside the empirical root locus, with an
        // angular offset so no guess starts on the real axis.
        let mut z: Vec<Complex64> = (0..deg)
            .map(|k| Complex64::from_polar(1.05, 2.0 * PI * k as f64 / deg as f64 + 0.41))
            .collect();
        let mut converged = false;
        let mut restarts: u32 = 0;
        while iterations < MAX_ITER {
            iterations += 1;
            let mut all_settled = true;
            for i in 0..deg {
                let zi = z[i];
                let (val, scale) = horner_with_scale(&coeffs, zi);
                if val.norm() <= tol * scale {
                    continue;
                }
                all_settled = false;
                let dval = horner_complex(&deriv, zi);
                let newton = if dval.norm() == 0.0 {
                    // perturb away from a stationary point
                    z[i] = zi + Complex64::new(1e-4, 1e-4);
                    continue;
                } else {
                    val / dval
                };
                let mut repulsion = Complex64::zero();
                for (j, &zj) in z.iter().enumerate() {
                    if j != i {
                        let diff = zi - zj;
                        if diff.norm() > 0.0 {
                            repulsion += diff.inv();
                        }
                    }
                }
                let denom = Complex64::one() - newton * repulsion;
                let mut step = if denom.norm() == 0.0 {
                    newton
                } else {
                    newton / denom
                };
                // damp runaway corrections, restart anything that still
                // escapes (golden-angle ring keeps restarts deterministic)
                let cap = 1.0 + zi.norm();
                if !step.re.is_finite() || !step.im.is_finite() {
                    step = newton;
                }
                if step.norm() > cap {
                    step *= cap / step.norm();
                }
                let next = zi - step;
                z[i] = if next.re.is_finite() && next.im.is_finite() && next.norm() <= 8.0 {
                    next
                } else {
                    restarts += 1;
                    Complex64::from_polar(
                        1.02 + 0.06 * (restarts % 5) as f64,
                        2.0 * PI * 0.381_966 * restarts as f64 + 0.17,
                    )
                };
            }
            if all_settled {
                converged = true;
                break;
            }
        }
        let mut root_residuals: Vec<f64> = z
            .iter()
            .map(|&zi| {
                let (val, scale) = horner_with_scale(&coeffs, zi);
                val.norm() / scale.max(1.0)
            })
            .collect();
        let settled = z.iter().all(|&zi| {
            let (val, scale) = horner_with_scale(&coeffs, zi);
            val.norm() <= tol * scale
        });
        roots.append(&mut z);
        residuals.append(&mut root_residuals);
        let max_modulus = roots.iter().map(|z| z.norm()).fold(0.0, f64::max);
        let report = RootReport {
            zero_multiplicity: ord,
            roots,
            residuals,
            max_modulus,
            iterations,
        };
        if !(converged || settled) {
            return Err(RootsError::NoConvergence {
                iterations,
                partial: report,
            });
        }
        return Ok(report);
    }

    Ok(RootReport {
        zero_multiplicity: ord,
        max_modulus: 0.0,
        roots,
        residuals,
        iterations,
    })
}

/// Root reports for `p_m(n, t)`, `n = 1..=n_max`.
pub fn root_cloud(m: u64, n_max: u64, tol: f64) -> Result<Vec<(u64, RootReport)>, RootsError> {
    let mut eng = Engine::new(MSeq::constant(m).expect("m >= 2"));
    let mut out = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        let p = eng.p_poly(n).clone();
        out.push((n, complex_roots(&p, tol)?));
    }
    Ok(out)
}

/// Divides `p_m(n, t)` by `t^{s_m(n)}` and reindexes the exponents by
/// `m - 1`, which the support theorem guarantees to be lossless; the result
/// is a polynomial in `q = t^(m-1)` with nonnegative coefficients.
pub fn tilde_normalize(m: u64, n: u64) -> Result<IntPoly, RootsError> {
    tilde_normalize_with(&mut Engine::new(MSeq::constant(m).expect("m >= 2")), n)
}

/// [`tilde_normalize`] against a caller-owned engine (bulk sweeps).
pub fn tilde_normalize_with(engine: &mut Engine, n: u64) -> Result<IntPoly, RootsError> {
    let m = engine.mseq().m_at(1);
    assert!(
        engine.mseq().is_constant(),
        "support normalization is m-ary"
    );
    let s = mseq::digit_sum(m, n) as usize;
    let p = engine.p_poly(n);
    let period = (m - 1) as usize;
    let mut out = vec![BigInt::zero(); (p.coeffs().len() - 1 - s) / period + 1];
    for (i, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if i < s || !(i - s).is_multiple_of(period) {
            return Err(RootsError::SupportViolation {
                m,
                n,
                exponent: i,
                period: m - 1,
            });
        }
        if c.is_negative() {
            return Err(RootsError::SupportViolation {
                m,
                n,
                exponent: i,
                period: m - 1,
            });
        }
        out[(i - s) / period] = c.clone();
    }
    Ok(IntPoly::from_coeffs(out))
}

/// The polynomials `1 + q + ... + q^n` for `n < m` extended by the
/// recurrence in `q`: a valuation-weighted step plus the floor-quotient
/// polynomial. Equals [`tilde_normalize`] of index `m * n`.
pub fn q_poly(m: u64, n: u64) -> IntPoly {
    q_poly_table(m, n).pop().unwrap()
}

/// `q_poly(m, 0..=n_max)` in one pass.
pub fn q_poly_table(m: u64, n_max: u64) -> Vec<IntPoly> {
    assert!(m >= 2);
    let mut table: Vec<IntPoly> = Vec::with_capacity(n_max as usize + 1);
    for i in 0..=n_max {
        let poly = if i < m {
            IntPoly::from_coeffs(vec![BigInt::one(); i as usize + 1])
        } else {
            let step = 1 + mseq::valuation(m, i) as usize;
            &table[i as usize - 1].shift(step) + &table[(i / m) as usize]
        };
        table.push(poly);
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(spec: &str) -> MSeq {
        MSeq::parse(spec).unwrap()
    }

    #[test]
    fn minus_one_binary_start() {
        let seq = m("2");
        let got: Vec<BigInt> = (0..3).map(|n| eval_minus_one(&seq, n)).collect();
        assert_eq!(
            got,
            vec![BigInt::from(1), BigInt::from(-1), BigInt::from(0)]
        );
        assert_eq!(minus_one_sequence(&seq, 2), got);
    }

    #[test]
    fn even_sign_formula_cases() {
        assert_eq!(even_m_sign(4, 32).unwrap(), 1); // digits 0,0,2: all even
        assert_eq!(even_m_sign(4, 1).unwrap(), -1); // lowest digit odd, rest even
        assert_eq!(even_m_sign(4, 4).unwrap(), 0); // digits 0,1: higher digit odd
        assert_eq!(even_m_sign(2, 0).unwrap(), 1);
        assert_eq!(even_m_sign(2, 1).unwrap(), -1);
        assert_eq!(even_m_sign(2, 4).unwrap(), 0); // digits 0,0,1
        assert!(matches!(even_m_sign(3, 5), Err(RootsError::OddBase(3))));
    }

    #[test]
    fn even_sign_matches_exact_evaluation() {
        for base in [2u64, 4, 6] {
            let vals = minus_one_sequence(&m(&base.to_string()), 400);
            for n in 0..=400u64 {
                let formula = BigInt::from(even_m_sign(base, n).unwrap());
                assert_eq!(vals[n as usize], formula, "m={base} n={n}");
            }
        }
    }

    #[test]
    fn odd_base_alternating_growth() {
        for base in [3u64, 5] {
            let seq = m(&base.to_string());
            let vals = minus_one_sequence(&seq, 60);
            let counts = engine::eval_sequence(&seq, 60, &BigInt::one());
            for n in 0..=60usize {
                let expect = if n % 2 == 0 {
                    counts[n].clone()
                } else {
                    -counts[n].clone()
                };
                assert_eq!(vals[n], expect, "m={base} n={n}");
                assert!(!vals[n].is_zero());
            }
        }
    }

    #[test]
    fn rational_root_reports() {
        let mut e = Engine::new(m("2"));
        let r = rational_roots(&mut e, 3);
        assert_eq!(r.zero_multiplicity, 2); // digit sum of 11_2
        let r = rational_roots(&mut e, 0);
        assert_eq!(r.zero_multiplicity, 0);
        assert!(!r.minus_one_is_root);
        let r = rational_roots(&mut e, 2); // t^2 + t
        assert_eq!(r.zero_multiplicity, 1);
        assert!(r.minus_one_is_root);
    }

    #[test]
    fn zero_order_equals_digit_sum() {
        for base in [2u64, 3, 4, 5] {
            let mut e = Engine::new(m(&base.to_string()));
            for n in 0..300u64 {
                assert_eq!(
                    rational_roots(&mut e, n).zero_multiplicity as u64,
                    mseq::digit_sum(base, n),
                    "m={base} n={n}"
                );
            }
        }
    }

    #[test]
    fn zero_order_to_ten_thousand() {
        // Coefficients are counts, so orders add under the step and take
        // the min under the split: a one-number recurrence reaches 10^4
        // without building any polynomial.
        for base in [2u64, 3, 4, 5] {
            let mut ord = vec![0u64; 10_001];
            for n in 1..=10_000usize {
                let step = ord[n - 1] + 1;
                ord[n] = if (n as u64).is_multiple_of(base) {
                    step.min(ord[n / base as usize])
                } else {
                    step
                };
                assert_eq!(ord[n], mseq::digit_sum(base, n as u64), "m={base} n={n}");
            }
        }
    }

    #[test]
    fn radius_values() {
        assert!((radius_bound(2) - 2.0).abs() < 1e-15);
        assert!((radius_bound(4) - 2f64.sqrt()).abs() < 1e-15);
        let mut prev = radius_bound(2);
        for base in 3..12 {
            let r = radius_bound(base);
            assert!(r < prev && r <= 2.0);
            prev = r;
        }
    }

    #[test]
    fn complex_roots_quadratic() {
        let report = complex_roots(&IntPoly::from_ints(&[-1, 0, 1]), 1e-12).unwrap();
        assert_eq!(report.roots.len(), 2);
        let mut moduli: Vec<f64> = report.roots.iter().map(|z| z.norm()).collect();
        moduli.sort_by(f64::total_cmp);
        assert!((moduli[0] - 1.0).abs() < 1e-9 && (moduli[1] - 1.0).abs() < 1e-9);
        assert!(report.roots.iter().any(|z| (z - 1.0).norm() < 1e-9));
        assert!(report.roots.iter().any(|z| (z + 1.0).norm() < 1e-9));
    }

    #[test]
    fn complex_roots_pure_power() {
        let report = complex_roots(&IntPoly::monomial(5), 1e-12).unwrap();
        assert_eq!(report.zero_multiplicity, 5);
        assert_eq!(report.roots.len(), 5);
        assert_eq!(report.max_modulus, 0.0);
    }

    #[test]
    fn root_count_matches_degree() {
        let mut e = Engine::new(m("4"));
        for n in [1u64, 7, 20, 33] {
            let p = e.p_poly(n).clone();
            let report = complex_roots(&p, 1e-10).unwrap();
            assert_eq!(report.roots.len(), n as usize);
            assert!(report.max_modulus < radius_bound(4) + 1e-6, "n={n}");
        }
    }

    #[test]
    fn tilde_base_cases() {
        for base in [2u64, 3, 5] {
            let mut e = Engine::new(m(&base.to_string()));
            for k in 0..base {
                let tilde = tilde_normalize_with(&mut e, k * base).unwrap();
                assert_eq!(
                    tilde,
                    IntPoly::from_coeffs(vec![BigInt::one(); k as usize + 1]),
                    "m={base} k={k}"
                );
            }
            assert_eq!(tilde_normalize_with(&mut e, 0).unwrap(), IntPoly::one());
        }
    }

    #[test]
    fn tilde_support_holds_broadly() {
        for base in [2u64, 3, 4, 5] {
            let mut e = Engine::new(m(&base.to_string()));
            for n in 0..200u64 {
                let tilde = tilde_normalize_with(&mut e, n).unwrap();
                assert!(
                    tilde.coeffs().iter().all(|c| !c.is_negative()),
                    "m={base} n={n}"
                );
            }
        }
    }

    #[test]
    fn tilde_binary_identity_map() {
        let mut e = Engine::new(m("2"));
        for n in 0..50u64 {
            let tilde = tilde_normalize_with(&mut e, n).unwrap();
            let p = e.p_poly(n);
            let s = mseq::digit_sum(2, n) as usize;
            assert_eq!(tilde.shift(s), p.clone(), "n={n}");
        }
    }

    #[test]
    fn q_poly_matches_recurrence_step() {
        assert_eq!(q_poly(2, 2), IntPoly::from_ints(&[1, 1, 1, 1]));
        for base in [2u64, 3, 4] {
            for k in 0..base {
                assert_eq!(
                    q_poly(base, k),
                    IntPoly::from_coeffs(vec![BigInt::one(); k as usize + 1])
                );
            }
        }
    }

    #[test]
    fn q_poly_equals_tilde_of_multiple() {
        for base in [2u64, 3, 4] {
            let mut e = Engine::new(m(&base.to_string()));
            let table = q_poly_table(base, 500);
            for (n, got) in table.iter().enumerate() {
                let tilde = tilde_normalize_with(&mut e, base * n as u64).unwrap();
                assert_eq!(got, &tilde, "m={base} n={n}");
            }
        }
    }
}
