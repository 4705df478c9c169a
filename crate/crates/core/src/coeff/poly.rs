//! Dense univariate polynomials over ℤ in the formal Hecke parameter `q`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Polynomial in `q` with arbitrary-precision integer coefficients.
///
/// `coeffs[i]` is the coefficient of `q^i`. The highest stored coefficient is
/// never zero, so the zero polynomial has an empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// `c * q^deg`.
    pub fn monomial(c: impl Into<BigInt>, deg: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c.into();
        Self::from_coeffs(coeffs)
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn coeff(&self, deg: usize) -> BigInt {
        self.coeffs.get(deg).cloned().unwrap_or_default()
    }

    /// Non-negative gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Divides every coefficient by `c`, which must divide all of them.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Self {
        debug_assert!(self.coeffs.iter().all(|x| (x % c).is_zero()));
        Self::from_coeffs(self.coeffs.iter().map(|x| x / c).collect())
    }

    /// Content removed, sign normalized so the leading coefficient is positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().is_negative() {
            c = -c;
        }
        self.div_scalar_exact(&c)
    }

    fn shift(&self, by: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); by];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Pseudo-remainder of `self` by `divisor` (a scalar multiple of the true remainder).
    fn pseudo_rem(&self, divisor: &IntPoly) -> IntPoly {
        let db = divisor.degree().expect("pseudo_rem by zero");
        let lb = divisor.leading();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.leading();
            r = &r.scale(&lb) - &divisor.scale(&lr).shift(dr - db);
        }
        r
    }

    /// Exact quotient `self / divisor` in ℤ[q], or `None` if the division leaves a
    /// remainder or a non-integral coefficient.
    pub fn div_exact(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let db = divisor.degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let lb = divisor.leading();
        let mut r = self.clone();
        let mut quot = vec![BigInt::zero(); r.coeffs.len().saturating_sub(db)];
        while let Some(dr) = r.degree() {
            if dr < db {
                return None;
            }
            let (qc, rem) = r.leading().div_rem(&lb);
            if !rem.is_zero() {
                return None;
            }
            r = &r - &divisor.scale(&qc).shift(dr - db);
            quot[dr - db] = qc;
        }
        Some(Self::from_coeffs(quot))
    }

    /// Greatest common divisor in ℤ[q], normalized to a positive leading coefficient.
    /// Computed by the primitive polynomial remainder sequence.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return other.primitive_part().scale(&other.content());
        }
        if other.is_zero() {
            return self.primitive_part().scale(&self.content());
        }
        let cg = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part().scale(&cg)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
    }

    /// Coefficients of `p(y + 1)`, i.e. the expansion of `p` in powers of `q − 1`.
    pub fn shift_by_one(&self) -> IntPoly {
        let mut c = self.coeffs.clone();
        let n = c.len();
        // repeated synthetic division by (q - 1)
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let v = c[j + 1].clone();
                c[j] += v;
            }
        }
        Self::from_coeffs(c)
    }

    /// `q ↦ q^f` substitution.
    pub fn compose_power(&self, f: usize) -> IntPoly {
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len().max(1) - 1) * f + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * f] = c.clone();
        }
        Self::from_coeffs(coeffs)
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        IntPoly::from_coeffs(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        IntPoly::from_coeffs(coeffs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match deg {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if deg == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{deg}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn trailing_zeros_are_stripped() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(IntPoly::zero().degree(), None);
    }

    #[test]
    fn gcd_of_q_squared_minus_one_and_q_minus_one() {
        let g = p(&[-1, 0, 1]).gcd(&p(&[-1, 1]));
        assert_eq!(g, p(&[-1, 1]));
    }

    #[test]
    fn gcd_keeps_integer_content() {
        let g = p(&[2, 2]).gcd(&p(&[4, 4]));
        assert_eq!(g, p(&[2, 2]));
        let g = p(&[6]).gcd(&p(&[-4, 0, 2]));
        assert_eq!(g, p(&[2]));
    }

    #[test]
    fn exact_division() {
        let a = p(&[-1, 0, 0, 1]);
        assert_eq!(a.div_exact(&p(&[-1, 1])), Some(p(&[1, 1, 1])));
        assert_eq!(a.div_exact(&p(&[1, 1])), None);
        assert_eq!(p(&[1, 2]).div_exact(&p(&[2])), None);
    }

    #[test]
    fn display_reads_naturally() {
        assert_eq!(p(&[-1, 0, 2]).to_string(), "2*q^2 - 1");
        assert_eq!(p(&[0, -1]).to_string(), "-q");
    }

    #[test]
    fn taylor_shift() {
        // q^2 = (y+1)^2 = y^2 + 2y + 1
        assert_eq!(p(&[0, 0, 1]).shift_by_one(), p(&[1, 2, 1]));
        assert_eq!(p(&[-1, 1]).shift_by_one(), p(&[0, 1]));
        assert_eq!(p(&[1, -1]).shift_by_one(), p(&[0, -1]));
    }

    #[test]
    fn compose_power_substitutes() {
        assert_eq!(p(&[-1, 1]).compose_power(3), p(&[-1, 0, 0, 1]));
    }
}
