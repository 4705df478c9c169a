use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{CoeffError, IntPoly};

/// Element of ℚ(q) in canonical form.
///
/// Numerator and denominator are coprime in ℤ[q] (integer content included) and
/// the denominator has a positive leading coefficient. Zero is `0/1`. With this
/// normalization structural equality is field equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: IntPoly,
    den: IntPoly,
}

impl RatFunc {
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self, CoeffError> {
        if den.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: IntPoly, den: IntPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_one() {
            return Self { num, den };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        if den.leading().is_negative() {
            num = -&num;
            den = -&den;
        }
        Self { num, den }
    }

    pub fn zero() -> Self {
        Self { num: IntPoly::zero(), den: IntPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        Self { num: IntPoly::constant(c), den: IntPoly::one() }
    }

    pub fn from_poly(p: IntPoly) -> Self {
        Self { num: p, den: IntPoly::one() }
    }

    /// `q^deg`.
    pub fn q_power(deg: usize) -> Self {
        Self::from_poly(IntPoly::monomial(1, deg))
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.num
    }

    pub fn denominator(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value lies in ℤ[q].
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_polynomial(&self) -> Option<&IntPoly> {
        self.is_polynomial().then_some(&self.num)
    }

    /// Crude size measure used for pivot selection.
    pub fn weight(&self) -> usize {
        let deg = self.num.degree().unwrap_or(0) + self.den.degree().unwrap_or(0);
        let bits: u64 = self
            .num
            .coeffs()
            .iter()
            .chain(self.den.coeffs())
            .map(|c| c.bits())
            .sum();
        deg * 64 + bits as usize
    }

    pub fn inv(&self) -> Result<Self, CoeffError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<Self, CoeffError> {
        if rhs.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Self::normalized(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Exact specialization at a rational value of `q`.
    pub fn eval(&self, q: &BigRational) -> Result<BigRational, CoeffError> {
        let d = self.den.eval(q);
        if d.is_zero() {
            return Err(CoeffError::Pole(q.to_string()));
        }
        Ok(self.num.eval(q) / d)
    }

    /// Substitutes `q ↦ q^f`.
    pub fn compose_power(&self, f: usize) -> Self {
        Self::normalized(self.num.compose_power(f), self.den.compose_power(f))
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFunc::normalized(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::normalized(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc { num: &self.num * &rhs.num, den: IntPoly::one() };
        }
        RatFunc::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl From<i64> for RatFunc {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl From<IntPoly> for RatFunc {
    fn from(p: IntPoly) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &IntPoly| {
            if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn rf(n: &[i64], d: &[i64]) -> RatFunc {
        RatFunc::new(p(n), p(d)).unwrap()
    }

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn cancels_common_factor() {
        assert_eq!(rf(&[-1, 1], &[-1, 0, 1]), rf(&[1], &[1, 1]));
    }

    #[test]
    fn inverse_product_is_one() {
        let a = RatFunc::q_power(1);
        assert!((&a * &a.inv().unwrap()).is_one());
    }

    #[test]
    fn difference_simplifies_to_zero() {
        let a = rf(&[-1, 0, 1], &[-1, 1]);
        let b = RatFunc::from_poly(p(&[1, 1]));
        assert!((&a - &b).is_zero());
    }

    #[test]
    fn denominator_sign_and_content_are_canonical() {
        let a = rf(&[2], &[-4, -4]);
        assert_eq!(a.numerator(), &p(&[-1]));
        assert_eq!(a.denominator(), &p(&[2, 2]));
        // 1/2 keeps its integer denominator
        let half = rf(&[1], &[2]);
        assert_eq!(half.denominator(), &p(&[2]));
    }

    #[test]
    fn divide_by_zero_is_an_error() {
        assert_eq!(RatFunc::one().checked_div(&RatFunc::zero()), Err(CoeffError::DivisionByZero));
        assert!(RatFunc::new(p(&[1]), IntPoly::zero()).is_err());
    }

    #[test]
    fn evaluation() {
        assert_eq!(RatFunc::from_poly(p(&[1, 1])).eval(&rat(3)).unwrap(), rat(4));
        assert!(matches!(rf(&[1], &[-1, 1]).eval(&rat(1)), Err(CoeffError::Pole(_))));
        assert_eq!(rf(&[0, -1, 1], &[-1, 1]).eval(&rat(5)).unwrap(), rat(5));
    }
}
