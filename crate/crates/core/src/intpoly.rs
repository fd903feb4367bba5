//! Dense univariate polynomials with arbitrary-precision integer
//! coefficients.
//!
//! Coefficients are stored in ascending order of exponent; the invariant is
//! that the highest stored coefficient is nonzero, the zero polynomial being
//! the empty list. `degree` of the zero polynomial is `None` rather than a
//! sentinel integer, so nothing can silently do arithmetic on it.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    /// Exact integer division was requested but no integer quotient exists.
    #[error("polynomial is not exactly divisible")]
    NotDivisible,
    /// Reduction requires a monic modulus.
    #[error("modulus is not monic")]
    NotMonic,
    /// The gcd normalizes to non-integer coefficients.
    #[error("gcd is not monic over the integers")]
    NonIntegerGcd,
}

/// A dense polynomial over `BigInt`, coefficient of `t^i` at index `i`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::from_coeffs(vec![c])
    }

    /// `t^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        IntPoly { coeffs }
    }

    /// Builds a polynomial from an ascending coefficient list, trimming
    /// trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    /// Convenience constructor from machine integers (tests, small moduli).
    pub fn from_ints(coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Ascending coefficients, highest nonzero (empty for zero).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^j`, zero beyond the degree.
    pub fn coeff(&self, j: usize) -> BigInt {
        self.coeffs.get(j).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Index of the lowest nonzero coefficient; `None` for zero.
    pub fn order_at_zero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + self.coeffs.len()];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[k + i] = c.clone();
        }
        IntPoly { coeffs }
    }

    /// Horner evaluation at an integer point.
    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Substitutes `t -> t^d`, dilating every exponent by `d`.
    pub fn dilate(&self, d: usize) -> Self {
        assert!(d >= 1, "dilation factor must be positive");
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * d + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * d] = c.clone();
        }
        IntPoly { coeffs }
    }

    fn add_impl(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let mut c = self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero);
            if let Some(d) = other.coeffs.get(i) {
                c += d;
            }
            coeffs.push(c);
        }
        IntPoly::from_coeffs(coeffs)
    }

    fn sub_impl(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let mut c = self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero);
            if let Some(d) = other.coeffs.get(i) {
                c -= d;
            }
            coeffs.push(c);
        }
        IntPoly::from_coeffs(coeffs)
    }

    /// Schoolbook convolution; exact, and fast enough for desk-scale degrees.
    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        IntPoly { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Exact quotient `self / divisor` over the integers.
    ///
    /// Succeeds iff `self = q * divisor` for some integer polynomial `q`;
    /// a failed leading-coefficient division or a nonzero final remainder
    /// both mean the quotient does not exist in `Z[t]`.
    pub fn divide_exact(&self, divisor: &Self) -> Result<Self, PolyError> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let dd = divisor.coeffs.len() - 1;
        let lead = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() < dd + 1 {
            return Err(PolyError::NotDivisible);
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for qi in (0..quot.len()).rev() {
            let top = std::mem::take(&mut rem[qi + dd]);
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(PolyError::NotDivisible);
            }
            for (i, d) in divisor.coeffs[..dd].iter().enumerate() {
                if !d.is_zero() {
                    rem[qi + i] -= &q * d;
                }
            }
            quot[qi] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(PolyError::NotDivisible);
        }
        Ok(IntPoly::from_coeffs(quot))
    }

    /// Quotient and remainder under a monic divisor, exact over the integers.
    pub fn div_rem_monic(&self, modulus: &Self) -> Result<(Self, Self), PolyError> {
        if modulus.leading().is_none_or(|c| !c.is_one()) {
            return Err(PolyError::NotMonic);
        }
        let dd = modulus.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Ok((IntPoly::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for qi in (0..quot.len()).rev() {
            let q = std::mem::take(&mut rem[qi + dd]);
            if q.is_zero() {
                continue;
            }
            for (i, d) in modulus.coeffs[..dd].iter().enumerate() {
                if !d.is_zero() {
                    rem[qi + i] -= &q * d;
                }
            }
            quot[qi] = q;
        }
        rem.truncate(dd);
        Ok((IntPoly::from_coeffs(quot), IntPoly::from_coeffs(rem)))
    }

    /// Remainder of `self` modulo a monic divisor; degree strictly below
    /// `degree(modulus)`.
    pub fn rem_mod(&self, modulus: &Self) -> Result<Self, PolyError> {
        self.div_rem_monic(modulus).map(|(_, r)| r)
    }

    /// True iff `divisor` divides `self` exactly over the integers. The zero
    /// polynomial is divisible by everything nonzero.
    pub fn divisible_by(&self, divisor: &Self) -> bool {
        self.divide_exact(divisor).is_ok()
    }

    /// Gcd of the coefficients (nonnegative; zero only for the zero
    /// polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a / &c).collect(),
        }
    }

    fn monic_normalize(&self) -> Result<Self, PolyError> {
        let lead = self.leading().expect("normalizing the zero polynomial");
        if lead.is_one() {
            return Ok(self.clone());
        }
        let lead = if lead.is_negative() {
            -lead
        } else {
            lead.clone()
        };
        let flip = self.leading().unwrap().is_negative();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let c = if flip { -c } else { c.clone() };
            let (q, r) = c.div_rem(&lead);
            if !r.is_zero() {
                return Err(PolyError::NonIntegerGcd);
            }
            coeffs.push(q);
        }
        Ok(IntPoly { coeffs })
    }

    /// Pseudo-remainder: repeatedly scales by the divisor's leading
    /// coefficient so every cancellation step stays integral.
    fn pseudo_rem(&self, divisor: &Self) -> Self {
        let db = divisor.coeffs.len() - 1;
        let lb = divisor.leading().unwrap().clone();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.leading().unwrap().clone();
            r = r.scale(&lb).sub_impl(&divisor.shift(dr - db).scale(&lr));
        }
        r
    }

    /// Monic gcd over the rationals, computed with a primitive-part
    /// remainder sequence and returned with integer coefficients.
    ///
    /// Errors with [`PolyError::NonIntegerGcd`] when the monic normalization
    /// leaves the integers (cannot happen for products of monic factors).
    pub fn gcd_monic(a: &Self, b: &Self) -> Result<Self, PolyError> {
        assert!(!(a.is_zero() && b.is_zero()), "gcd of two zero polynomials");
        if a.is_zero() {
            return b.monic_normalize();
        }
        if b.is_zero() {
            return a.monic_normalize();
        }
        let mut f = a.primitive_part();
        let mut g = b.primitive_part();
        if f.degree() < g.degree() {
            std::mem::swap(&mut f, &mut g);
        }
        while !g.is_zero() {
            let r = f.pseudo_rem(&g).primitive_part();
            f = g;
            g = r;
        }
        f.monic_normalize()
    }

    /// Canonical ascending coefficient list `[c0,c1,...,cd]`; `[]` for zero.
    pub fn to_coeff_json(&self) -> String {
        let mut out = String::from("[");
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(&c.to_string());
        }
        out.push(']');
        out
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly{}", self.to_coeff_json())
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            }
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    if i == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        self.add_impl(rhs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self.sub_impl(rhs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        self.mul_impl(rhs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}
