use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::IntPolynomial;

/// Quotient of integer polynomials, kept in canonical form: numerator and
/// denominator coprime over the rationals, no integer common to all their
/// coefficients, positive leading coefficient in the denominator.
#[derive(Clone, Serialize, Deserialize)]
#[serde(try_from = "RawRationalFunction", into = "RawRationalFunction")]
pub struct RationalFunction {
    num: IntPolynomial,
    den: IntPolynomial,
}

#[derive(Serialize, Deserialize)]
struct RawRationalFunction {
    num: IntPolynomial,
    den: IntPolynomial,
}

impl TryFrom<RawRationalFunction> for RationalFunction {
    type Error = String;
    fn try_from(raw: RawRationalFunction) -> Result<Self, String> {
        if raw.den.is_zero() {
            return Err("zero denominator".into());
        }
        Ok(RationalFunction::new(raw.num, raw.den))
    }
}

impl From<RationalFunction> for RawRationalFunction {
    fn from(r: RationalFunction) -> Self {
        RawRationalFunction { num: r.num, den: r.den }
    }
}

impl RationalFunction {
    /// Builds `num / den` and reduces it. Panics on a zero denominator.
    pub fn new(num: IntPolynomial, den: IntPolynomial) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let mut num = num.div_exact(&g).expect("gcd divides numerator");
        let mut den = den.div_exact(&g).expect("gcd divides denominator");
        let c = num.content().gcd(&den.content());
        if !c.is_one() {
            num = IntPolynomial::from_coeffs(num.coeffs().iter().map(|x| x / &c).collect());
            den = IntPolynomial::from_coeffs(den.coeffs().iter().map(|x| x / &c).collect());
        }
        if den.leading().is_negative() {
            num = -&num;
            den = -&den;
        }
        RationalFunction { num, den }
    }

    pub fn zero() -> Self {
        RationalFunction { num: IntPolynomial::zero(), den: IntPolynomial::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(IntPolynomial::one())
    }

    pub fn from_poly(p: IntPolynomial) -> Self {
        Self::new(p, IntPolynomial::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_poly(IntPolynomial::constant(c))
    }

    /// `n / (x - t)`.
    pub fn simple_pole(n: impl Into<BigInt>, t: impl Into<BigInt>) -> Self {
        Self::new(IntPolynomial::constant(n.into()), IntPolynomial::linear(t))
    }

    pub fn num(&self) -> &IntPolynomial {
        &self.num
    }

    pub fn den(&self) -> &IntPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial this equals, if the denominator reduced to 1.
    pub fn as_polynomial(&self) -> Option<&IntPolynomial> {
        self.den.is_one().then_some(&self.num)
    }

    /// `r(x - c)`.
    pub fn shift(&self, c: &BigInt) -> Self {
        Self::new(self.num.shift(c), self.den.shift(c))
    }

    /// Value at a rational point, `None` at a pole.
    pub fn eval(&self, x: &BigRational) -> Option<BigRational> {
        let d = self.den.eval_rational(x);
        (!d.is_zero()).then(|| self.num.eval_rational(x) / d)
    }

    pub fn pow(&self, e: u32) -> Self {
        Self::new(self.num.pow(e), self.den.pow(e))
    }

    pub fn recip(&self) -> Self {
        Self::new(self.den.clone(), self.num.clone())
    }
}

/// Equality by cross-multiplication.
impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RationalFunction {}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::new(&self.num + &rhs.num, self.den.clone());
        }
        RationalFunction::new(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        assert!(!rhs.is_zero(), "division by the zero rational function");
        RationalFunction::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl From<IntPolynomial> for RationalFunction {
    fn from(p: IntPolynomial) -> Self {
        RationalFunction::from_poly(p)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn reduces_common_factor() {
        // (3x^2 + 4x) / (x^3 - 2x) = (3x + 4) / (x^2 - 2)
        let r = RationalFunction::new(p(&[0, 4, 3]), p(&[0, -2, 0, 1]));
        assert_eq!(r.num(), &p(&[4, 3]));
        assert_eq!(r.den(), &p(&[-2, 0, 1]));
    }

    #[test]
    fn canonical_sign_and_content() {
        let r = RationalFunction::new(p(&[2]), p(&[0, -4]));
        assert_eq!(r.num(), &p(&[-1]));
        assert_eq!(r.den(), &p(&[0, 2]));
        let s = RationalFunction::new(p(&[1]), p(&[0, 2]));
        assert_eq!(s.den(), &p(&[0, 2]));
    }

    #[test]
    fn arithmetic() {
        let a = RationalFunction::simple_pole(1, 0); // 1/x
        let x = RationalFunction::from_poly(p(&[0, 1]));
        let sum = &x - &a; // (x^2 - 1)/x
        assert_eq!(sum, RationalFunction::new(p(&[-1, 0, 1]), p(&[0, 1])));
        let prod = &sum * &x;
        assert_eq!(prod.as_polynomial(), Some(&p(&[-1, 0, 1])));
        assert_eq!(&(&a / &a), &RationalFunction::one());
    }

    #[test]
    fn shift_moves_pole() {
        let r = RationalFunction::simple_pole(3, 2).shift(&BigInt::from(1));
        assert_eq!(r, RationalFunction::simple_pole(3, 3));
    }

    #[test]
    fn eval_at_pole() {
        let r = RationalFunction::simple_pole(4, 4);
        assert_eq!(r.eval(&BigRational::from_integer(BigInt::from(4))), None);
        assert_eq!(r.eval(&BigRational::from_integer(BigInt::from(6))), Some(BigRational::from_integer(BigInt::from(2))));
    }

    #[test]
    fn json_shape() {
        let r = RationalFunction::simple_pole(4, 4);
        assert_eq!(serde_json::to_string(&r).unwrap(), r#"{"num":[4],"den":[-4,1]}"#);
        let back: RationalFunction = serde_json::from_str(r#"{"num":[8],"den":[-8,2]}"#).unwrap();
        assert_eq!(back, r);
    }
}
