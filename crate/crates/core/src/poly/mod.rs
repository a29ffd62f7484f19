//! Exact univariate polynomials with arbitrary-precision integer coefficients.

mod interpolate;
mod rational;
mod roots;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use interpolate::{interpolate, interpolate_integer, RationalPolynomial};
pub use rational::RationalFunction;
pub use roots::{count_distinct_real_roots, integer_roots, real_roots, square_free_decomposition};

/// Polynomial with integer coefficients stored in ascending degree order.
/// The coefficient list never ends in a zero; the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::from_coeffs(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `x - root`.
    pub fn linear(root: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![-root.into(), BigInt::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn monomial(c: BigInt, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Sign of the polynomial at a rational point: -1, 0 or 1.
    pub fn sign_at(&self, x: &BigRational) -> i32 {
        let v = self.eval_rational(x);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// `f(x - c)`.
    pub fn shift(&self, c: &BigInt) -> Self {
        let step = Self::linear(c.clone());
        self.coeffs.iter().rev().fold(Self::zero(), |acc, coef| &(&acc * &step) + &Self::constant(coef.clone()))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect())
    }

    /// Greatest common divisor of the coefficients (non-negative).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().is_negative() {
            c = -c;
        }
        Self::from_coeffs(self.coeffs.iter().map(|x| x / &c).collect())
    }

    pub fn monic_sign(&self) -> Self {
        if self.leading().is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Exact division over the integers; `None` when `divisor` does not divide.
    pub fn div_exact(&self, divisor: &IntPolynomial) -> Option<IntPolynomial> {
        let (q, r) = self.div_rem_integral(divisor)?;
        r.is_zero().then_some(q)
    }

    /// Long division that fails if a quotient coefficient is not integral.
    fn div_rem_integral(&self, divisor: &IntPolynomial) -> Option<(IntPolynomial, IntPolynomial)> {
        let dd = divisor.degree()?;
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * d;
            }
            quot[i] = q;
        }
        Some((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
    pub fn pseudo_rem(&self, b: &IntPolynomial) -> IntPolynomial {
        let db = b.degree().expect("pseudo-remainder by zero polynomial");
        let Some(da) = self.degree() else { return Self::zero() };
        if da < db {
            return self.clone();
        }
        let lead = b.leading();
        let mut r = self.clone();
        let mut steps = 0;
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let shifted = &Self::monomial(r.leading(), dr - db) * b;
            r = &r.scale(&lead) - &shifted;
            steps += 1;
        }
        for _ in steps..=(da - db) {
            r = r.scale(&lead);
        }
        r
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() {
            return other.primitive_part();
        }
        if other.is_zero() {
            return self.primitive_part();
        }
        let (mut a, mut b) = if self.degree() >= other.degree() {
            (self.primitive_part(), other.primitive_part())
        } else {
            (other.primitive_part(), self.primitive_part())
        };
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part()
    }

    /// Least common multiple over `Z[x]`: content lcm times primitive lcm.
    pub fn lcm(&self, other: &IntPolynomial) -> IntPolynomial {
        let g = self.gcd(other);
        let content = self.content().lcm(&other.content());
        let pa = self.primitive_part();
        let pb = other.primitive_part();
        let pb_over_g = pb.div_exact(&g).expect("gcd divides");
        (&pa * &pb_over_g).scale(&content)
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for IntPolynomial {
            type Output = IntPolynomial;
            fn $method(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Product for IntPolynomial {
    fn product<I: Iterator<Item = IntPolynomial>>(iter: I) -> Self {
        iter.fold(IntPolynomial::one(), |acc, p| &acc * &p)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let show_mag = i == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

/// Coefficients travel as a JSON array of (arbitrarily large) integers.
impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter().map(bigint_json::to_number))
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let nums = Vec::<serde_json::Number>::deserialize(deserializer)?;
        let coeffs = nums
            .iter()
            .map(bigint_json::from_number)
            .collect::<Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        Ok(IntPolynomial::from_coeffs(coeffs))
    }
}

pub(crate) mod bigint_json {
    use std::str::FromStr;

    use num_bigint::BigInt;

    pub fn to_number(x: &BigInt) -> serde_json::Number {
        serde_json::Number::from_str(&x.to_string()).expect("integer literal is valid JSON")
    }

    pub fn from_number(n: &serde_json::Number) -> Result<BigInt, String> {
        BigInt::from_str(&n.to_string()).map_err(|_| format!("`{n}` is not an integer"))
    }

    pub fn serialize<S: serde::Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        serde::Serialize::serialize(&to_number(x), s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn shift_substitutes() {
        // (x-1)^2 - 2 = x^2 - 2x - 1
        assert_eq!(p(&[-2, 0, 1]).shift(&BigInt::from(1)), p(&[-1, -2, 1]));
    }

    #[test]
    fn eval_cubic() {
        assert_eq!(p(&[0, -2, 0, 1]).eval(&BigInt::from(2)), BigInt::from(4));
    }

    #[test]
    fn arithmetic_and_trim() {
        let a = p(&[1, 1]);
        let b = p(&[-1, 1]);
        assert_eq!(&a * &b, p(&[-1, 0, 1]));
        assert_eq!(&a - &a, IntPolynomial::zero());
        assert_eq!((&a - &a).degree(), None);
        assert_eq!(a.pow(3), p(&[1, 3, 3, 1]));
        assert_eq!(p(&[5, 0, 3, 1]).derivative(), p(&[0, 6, 3]));
    }

    #[test]
    fn exact_division() {
        let f = p(&[-4, 9, -6, 1]); // (x-4)(x-1)^2
        assert_eq!(f.div_exact(&p(&[-1, 1])), Some(p(&[4, -5, 1])));
        assert_eq!(f.div_exact(&p(&[1, 1])), None);
        assert_eq!(p(&[1, 1]).div_exact(&p(&[0, 2])), None);
    }

    #[test]
    fn gcd_and_lcm() {
        let a = p(&[-2, 0, 1]).scale(&BigInt::from(6)) * p(&[0, 1]);
        let b = p(&[-2, 0, 1]).scale(&BigInt::from(4)) * p(&[3, 1]);
        assert_eq!(a.gcd(&b), p(&[-2, 0, 1]));
        let l = p(&[0, 2]).lcm(&p(&[0, 3]));
        assert_eq!(l, p(&[0, 6]));
        assert_eq!(p(&[1, 1]).gcd(&p(&[-1, 1])), IntPolynomial::one());
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[0, -2, 0, 1]).to_string(), "x^3 - 2x");
        assert_eq!(p(&[-1]).to_string(), "-1");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn json_keeps_big_coefficients() {
        let big = BigInt::from(10).pow(40u32);
        let f = IntPolynomial::from_coeffs(vec![big.clone(), BigInt::from(-3), BigInt::one()]);
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, format!("[{big},-3,1]"));
        assert_eq!(serde_json::from_str::<IntPolynomial>(&s).unwrap(), f);
    }
}
