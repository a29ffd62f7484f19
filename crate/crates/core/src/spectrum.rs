//! Multisets of eigenvalues with exact descriptors where possible.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poly::{real_roots, square_free_decomposition, IntPolynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Which {
    Minus,
    Plus,
}

/// One root `(-b ± sqrt(b^2 - 4ac)) / 2a` of an integer quadratic.
///
/// Stored with `gcd(a, b, c) = 1` and `a > 0`, so `Plus` is the larger root
/// and two descriptors name the same number exactly when they are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticRoot {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    which: Which,
}

impl QuadraticRoot {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>, which: Which) -> Result<Self> {
        let (mut a, mut b, mut c) = (a.into(), b.into(), c.into());
        let mut which = which;
        if a.is_zero() {
            return Err(Error::InvalidParameter("quadratic with zero leading coefficient".into()));
        }
        if a.is_negative() {
            a = -a;
            b = -b;
            c = -c;
            which = match which {
                Which::Plus => Which::Minus,
                Which::Minus => Which::Plus,
            };
        }
        let g = a.gcd(&b).gcd(&c);
        let root = QuadraticRoot { a: &a / &g, b: &b / &g, c: &c / &g, which };
        if root.discriminant().is_negative() {
            return Err(Error::InvalidParameter(format!("quadratic {}x^2 + {}x + {} has no real roots", root.a, root.b, root.c)));
        }
        Ok(root)
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    pub fn which(&self) -> Which {
        self.which
    }

    pub fn discriminant(&self) -> BigInt {
        &self.b * &self.b - BigInt::from(4) * &self.a * &self.c
    }

    /// The root as a rational, when the discriminant is a perfect square.
    pub fn as_rational(&self) -> Option<BigRational> {
        let d = self.discriminant();
        let s = d.sqrt();
        if &s * &s != d {
            return None;
        }
        let s = match self.which {
            Which::Plus => s,
            Which::Minus => -s,
        };
        Some(BigRational::new(-&self.b + s, BigInt::from(2) * &self.a))
    }

    /// Numerically stable evaluation.
    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        let c = self.c.to_f64().unwrap_or(f64::NAN);
        let d = self.discriminant().to_f64().unwrap_or(f64::NAN).max(0.0).sqrt();
        // q = -(b + sign(b) sqrt(D)) / 2 gives the larger-magnitude root q / a.
        let q = if b >= 0.0 { -(b + d) / 2.0 } else { (-b + d) / 2.0 };
        let (r1, r2) = if q == 0.0 { (0.0, 0.0) } else { (q / a, c / q) };
        let (lo, hi) = if r1 <= r2 { (r1, r2) } else { (r2, r1) };
        match self.which {
            Which::Plus => hi,
            Which::Minus => lo,
        }
    }

    /// The defining polynomial `a x^2 + b x + c`.
    pub fn polynomial(&self) -> IntPolynomial {
        IntPolynomial::from_coeffs(vec![self.c.clone(), self.b.clone(), self.a.clone()])
    }

    /// Descriptor of `root + h`.
    pub fn shifted(&self, h: &BigInt) -> QuadraticRoot {
        let a = self.a.clone();
        let b = &self.b - BigInt::from(2) * &a * h;
        let c = &a * h * h - &self.b * h + &self.c;
        QuadraticRoot::new(a, b, c, self.which).expect("shift keeps the discriminant")
    }
}

impl fmt::Display for QuadraticRoot {
    /// Renders as `(P ± k√R)/Q` with `R` free of small square factors.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (k, r) = split_square(&self.discriminant());
        let mut p = -self.b.clone();
        let mut q = BigInt::from(2) * &self.a;
        let mut k = k;
        let g = p.gcd(&k).gcd(&q);
        if !g.is_zero() {
            p /= &g;
            q /= &g;
            k /= &g;
        }
        let sign = if self.which == Which::Plus { "+" } else { "-" };
        let surd = if k.is_one() { format!("√{r}") } else { format!("{k}√{r}") };
        let body = if p.is_zero() {
            if self.which == Which::Plus {
                surd
            } else {
                format!("-{surd}")
            }
        } else {
            format!("{p} {sign} {surd}")
        };
        if q.is_one() {
            write!(f, "{body}")
        } else if p.is_zero() {
            write!(f, "{body}/{q}")
        } else {
            write!(f, "({body})/{q}")
        }
    }
}

/// Writes `d = k^2 r`, pulling out square factors found by trial division.
fn split_square(d: &BigInt) -> (BigInt, BigInt) {
    let mut k = BigInt::one();
    let mut r = d.clone();
    let mut p = BigInt::from(2);
    let limit = BigInt::from(100_000);
    while &p * &p <= r && p < limit {
        let sq = &p * &p;
        while (&r % &sq).is_zero() {
            r /= &sq;
            k *= &p;
        }
        p += 1;
    }
    (k, r)
}

/// An eigenvalue: exact rational, exact quadratic surd, or a floating approximation.
#[derive(Debug, Clone, PartialEq)]
pub enum Eigenvalue {
    Rational(BigRational),
    Quadratic(QuadraticRoot),
    Approx(f64),
}

impl Eigenvalue {
    pub fn int(v: impl Into<BigInt>) -> Self {
        Eigenvalue::Rational(BigRational::from_integer(v.into()))
    }

    /// Both roots of `a x^2 + b x + c`, as rationals when they are rational.
    pub fn quadratic_pair(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>) -> Result<[Eigenvalue; 2]> {
        let (a, b, c) = (a.into(), b.into(), c.into());
        let lo = QuadraticRoot::new(a.clone(), b.clone(), c.clone(), Which::Minus)?;
        let hi = QuadraticRoot::new(a, b, c, Which::Plus)?;
        Ok([Eigenvalue::from_quadratic(lo), Eigenvalue::from_quadratic(hi)])
    }

    pub fn from_quadratic(q: QuadraticRoot) -> Self {
        match q.as_rational() {
            Some(r) => Eigenvalue::Rational(r),
            None => Eigenvalue::Quadratic(q),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Eigenvalue::Rational(r) => r.to_f64().unwrap_or(f64::NAN),
            Eigenvalue::Quadratic(q) => q.to_f64(),
            Eigenvalue::Approx(v) => *v,
        }
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, Eigenvalue::Approx(_))
    }

    /// `self + h`.
    pub fn shifted(&self, h: &BigInt) -> Eigenvalue {
        match self {
            Eigenvalue::Rational(r) => Eigenvalue::Rational(r + BigRational::from_integer(h.clone())),
            Eigenvalue::Quadratic(q) => Eigenvalue::Quadratic(q.shifted(h)),
            Eigenvalue::Approx(v) => Eigenvalue::Approx(v + h.to_f64().unwrap_or(f64::NAN)),
        }
    }

    /// Exact equality; approximations never compare equal.
    pub fn exact_eq(&self, other: &Eigenvalue) -> bool {
        match (self, other) {
            (Eigenvalue::Rational(a), Eigenvalue::Rational(b)) => a == b,
            (Eigenvalue::Quadratic(a), Eigenvalue::Quadratic(b)) => a == b,
            _ => false,
        }
    }
}

impl fmt::Display for Eigenvalue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Eigenvalue::Rational(r) => write!(f, "{r}"),
            Eigenvalue::Quadratic(q) => write!(f, "{q}"),
            Eigenvalue::Approx(v) => write!(f, "~{v}"),
        }
    }
}

impl Serialize for Eigenvalue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Eigenvalue", 3)?;
        let kind = match self {
            Eigenvalue::Rational(_) => "rational",
            Eigenvalue::Quadratic(_) => "quadratic",
            Eigenvalue::Approx(_) => "approx",
        };
        s.serialize_field("kind", kind)?;
        s.serialize_field("exact", &self.is_exact().then(|| self.to_string()))?;
        s.serialize_field("approx", &self.to_f64())?;
        s.end()
    }
}

/// Eigenvalues with multiplicities, sorted ascending. Exactly equal values
/// share one entry.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct SpectrumMultiset {
    entries: Vec<SpectrumEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumEntry {
    pub value: Eigenvalue,
    pub multiplicity: usize,
}

impl SpectrumMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn entries(&self) -> &[SpectrumEntry] {
        &self.entries
    }

    pub fn total(&self) -> usize {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }

    pub fn is_exact(&self) -> bool {
        self.entries.iter().all(|e| e.value.is_exact())
    }

    pub fn insert(&mut self, value: Eigenvalue, multiplicity: usize) {
        if multiplicity == 0 {
            return;
        }
        if let Some(e) = self.entries.iter_mut().find(|e| e.value.exact_eq(&value)) {
            e.multiplicity += multiplicity;
            return;
        }
        let key = value.to_f64();
        let pos = self.entries.partition_point(|e| e.value.to_f64() <= key);
        self.entries.insert(pos, SpectrumEntry { value, multiplicity });
    }

    pub fn extend(&mut self, other: &SpectrumMultiset) {
        for e in &other.entries {
            self.insert(e.value.clone(), e.multiplicity);
        }
    }

    /// Scales every multiplicity by `k`.
    pub fn repeated(&self, k: usize) -> SpectrumMultiset {
        let mut out = SpectrumMultiset::new();
        for e in &self.entries {
            out.insert(e.value.clone(), e.multiplicity * k);
        }
        out
    }

    /// Every value shifted by `h`.
    pub fn shifted(&self, h: &BigInt) -> SpectrumMultiset {
        let mut out = SpectrumMultiset::new();
        for e in &self.entries {
            out.insert(e.value.shifted(h), e.multiplicity);
        }
        out
    }

    pub fn multiplicity(&self, value: &Eigenvalue) -> usize {
        self.entries.iter().find(|e| e.value.exact_eq(value)).map_or(0, |e| e.multiplicity)
    }

    /// Removes `count` copies of an exact value.
    pub fn remove(&mut self, value: &Eigenvalue, count: usize) -> Result<()> {
        let idx = self
            .entries
            .iter()
            .position(|e| e.value.exact_eq(value))
            .ok_or_else(|| Error::InvalidInput(format!("{value} is not in the spectrum")))?;
        let e = &mut self.entries[idx];
        if e.multiplicity < count {
            return Err(Error::InvalidInput(format!("{value} occurs {} < {count} times", e.multiplicity)));
        }
        e.multiplicity -= count;
        if e.multiplicity == 0 {
            self.entries.remove(idx);
        }
        Ok(())
    }

    /// Removes one copy of the largest value.
    pub fn remove_largest(&mut self) -> Result<Eigenvalue> {
        let last = self.entries.last().ok_or_else(|| Error::InvalidInput("empty spectrum".into()))?;
        let value = last.value.clone();
        let idx = self.entries.len() - 1;
        self.entries[idx].multiplicity -= 1;
        if self.entries[idx].multiplicity == 0 {
            self.entries.pop();
        }
        Ok(value)
    }

    /// Values expanded by multiplicity, ascending.
    pub fn to_f64_sorted(&self) -> Vec<f64> {
        let mut v: Vec<f64> =
            self.entries.iter().flat_map(|e| std::iter::repeat_n(e.value.to_f64(), e.multiplicity)).collect();
        v.sort_by(f64::total_cmp);
        v
    }

    /// Exact sum, available when every value is exact and every surd is
    /// matched by its conjugate with equal multiplicity.
    pub fn exact_sum(&self) -> Option<BigRational> {
        let mut sum = BigRational::zero();
        for e in &self.entries {
            let m = BigRational::from_integer(BigInt::from(e.multiplicity));
            match &e.value {
                Eigenvalue::Rational(r) => sum += r * m,
                Eigenvalue::Quadratic(q) => {
                    if q.which == Which::Plus {
                        let conj = Eigenvalue::Quadratic(QuadraticRoot { which: Which::Minus, ..q.clone() });
                        if self.multiplicity(&conj) != e.multiplicity {
                            return None;
                        }
                        // Each conjugate pair sums to -b/a.
                        sum += BigRational::new(-q.b.clone(), q.a.clone()) * m;
                    } else {
                        let conj = Eigenvalue::Quadratic(QuadraticRoot { which: Which::Plus, ..q.clone() });
                        if self.multiplicity(&conj) != e.multiplicity {
                            return None;
                        }
                    }
                }
                Eigenvalue::Approx(_) => return None,
            }
        }
        Some(sum)
    }

    /// The polynomial with exactly these roots, made primitive; needs every
    /// value exact and surds paired with their conjugates.
    pub fn exact_polynomial(&self) -> Option<IntPolynomial> {
        let mut out = IntPolynomial::one();
        for e in &self.entries {
            let m = u32::try_from(e.multiplicity).ok()?;
            match &e.value {
                Eigenvalue::Rational(r) => {
                    let lin = IntPolynomial::from_coeffs(vec![-r.numer().clone(), r.denom().clone()]);
                    out = &out * &lin.pow(m);
                }
                Eigenvalue::Quadratic(q) => {
                    let conj = Eigenvalue::Quadratic(QuadraticRoot {
                        which: if q.which == Which::Plus { Which::Minus } else { Which::Plus },
                        ..q.clone()
                    });
                    if self.multiplicity(&conj) != e.multiplicity {
                        return None;
                    }
                    if q.which == Which::Plus {
                        out = &out * &q.polynomial().pow(m);
                    }
                }
                Eigenvalue::Approx(_) => return None,
            }
        }
        Some(out.primitive_part())
    }

    /// Spectrum of a polynomial with only real roots: integer roots and
    /// integer quadratic factors are kept exact, the rest approximated.
    pub fn from_charpoly(f: &IntPolynomial) -> Result<SpectrumMultiset> {
        let mut out = SpectrumMultiset::new();
        let degree = f.degree().unwrap_or(0);
        for (g, mult) in square_free_decomposition(f) {
            let mut rest = g;
            let mut approx: Vec<f64> = Vec::new();
            for (r, _) in real_roots(&rest) {
                let k = BigInt::from(r.round() as i64);
                let lin = IntPolynomial::linear(k.clone());
                if (r - r.round()).abs() < 1e-6 {
                    if let Some(q) = rest.div_exact(&lin) {
                        rest = q;
                        out.insert(Eigenvalue::Rational(BigRational::from_integer(k)), mult);
                        continue;
                    }
                }
                approx.push(r);
            }
            let mut used = vec![false; approx.len()];
            for i in 0..approx.len() {
                if used[i] {
                    continue;
                }
                for j in i + 1..approx.len() {
                    if used[j] {
                        continue;
                    }
                    let s = approx[i] + approx[j];
                    let p = approx[i] * approx[j];
                    if (s - s.round()).abs() > 1e-6 || (p - p.round()).abs() > 1e-6 * p.abs().max(1.0) {
                        continue;
                    }
                    let quad = IntPolynomial::from_coeffs(vec![
                        BigInt::from(p.round() as i64),
                        BigInt::from(-(s.round() as i64)),
                        BigInt::one(),
                    ]);
                    if let Some(q) = rest.div_exact(&quad) {
                        rest = q;
                        used[i] = true;
                        used[j] = true;
                        for v in Eigenvalue::quadratic_pair(1, -(s.round() as i64), p.round() as i64)? {
                            out.insert(v, mult);
                        }
                        break;
                    }
                }
            }
            for (i, r) in approx.into_iter().enumerate() {
                if !used[i] {
                    out.insert(Eigenvalue::Approx(r), mult);
                }
            }
        }
        if out.total() != degree {
            return Err(Error::PreconditionViolation(format!(
                "polynomial of degree {degree} has only {} real roots",
                out.total()
            )));
        }
        Ok(out)
    }
}

impl fmt::Display for SpectrumMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            if e.multiplicity == 1 {
                write!(f, "{}", e.value)?;
            } else {
                write!(f, "{}×{}", e.value, e.multiplicity)?;
            }
        }
        f.write_str("}")
    }
}
