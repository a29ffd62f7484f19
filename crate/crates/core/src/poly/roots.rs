use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

use super::IntPolynomial;

/// Square-free factorisation `f = c * prod g_i^i`, returning the non-constant
/// primitive `g_i` with their multiplicities `i`.
pub fn square_free_decomposition(f: &IntPolynomial) -> Vec<(IntPolynomial, usize)> {
    let mut out = Vec::new();
    if f.is_constant() {
        return out;
    }
    let f = f.primitive_part();
    let mut g = f.gcd(&f.derivative());
    let mut w = f.div_exact(&g).expect("primitive gcd divides");
    let mut i = 1;
    while !w.is_constant() {
        let y = w.gcd(&g);
        let z = w.div_exact(&y).expect("primitive gcd divides");
        if !z.is_constant() {
            out.push((z.primitive_part(), i));
        }
        g = g.div_exact(&y).expect("primitive gcd divides");
        w = y;
        i += 1;
    }
    out
}

fn sturm_sequence(p: &IntPolynomial) -> Vec<IntPolynomial> {
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let n = seq.len();
        let (a, b) = (&seq[n - 2], &seq[n - 1]);
        if b.is_constant() {
            break;
        }
        let delta = a.degree().unwrap_or(0) - b.degree().unwrap_or(0);
        let prem = a.pseudo_rem(b);
        if prem.is_zero() {
            break;
        }
        // prem = lc(b)^(delta+1) * rem; the sequence needs -rem up to a positive factor.
        let lc_positive = b.leading().is_positive() || (delta + 1) % 2 == 0;
        let next = if lc_positive { -&prem } else { prem };
        let c = next.content();
        let next = IntPolynomial::from_coeffs(next.coeffs().iter().map(|x| x / &c).collect());
        seq.push(next);
    }
    seq
}

fn variations(seq: &[IntPolynomial], x: &BigRational) -> usize {
    let mut last = 0;
    let mut count = 0;
    for s in seq {
        let v = s.sign_at(x);
        if v != 0 {
            if last != 0 && v != last {
                count += 1;
            }
            last = v;
        }
    }
    count
}

/// Strict bound on the absolute value of every root.
fn cauchy_bound(p: &IntPolynomial) -> BigRational {
    let lead = p.leading().abs();
    let max = p.coeffs()[..p.coeffs().len() - 1].iter().map(|c| c.abs()).max().unwrap_or_default();
    BigRational::new(max, lead) + BigRational::one()
}

/// Isolating intervals `(a, b]` for the real roots of a square-free polynomial.
fn isolate(p: &IntPolynomial) -> Vec<(BigRational, BigRational)> {
    let seq = sturm_sequence(p);
    let b = cauchy_bound(p);
    let a = -b.clone();
    let mut out = Vec::new();
    let mut stack = vec![(variations(&seq, &a), a, variations(&seq, &b), b)];
    while let Some((va, a, vb, b)) = stack.pop() {
        let count = va - vb;
        if count == 0 {
            continue;
        }
        if count == 1 {
            out.push((a, b));
            continue;
        }
        let m = (&a + &b) / BigRational::from_integer(BigInt::from(2));
        let vm = variations(&seq, &m);
        stack.push((vm, m.clone(), vb, b));
        stack.push((va, a, vm, m));
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    out
}

/// Bisects an isolating interval until its ends agree as doubles.
fn refine(p: &IntPolynomial, mut a: BigRational, mut b: BigRational) -> f64 {
    if p.sign_at(&b) == 0 {
        return b.to_f64().unwrap_or(f64::NAN);
    }
    // A root at the open end belongs to the neighbouring interval; just to its
    // right the sign of a square-free p is that of p'.
    let sa = match p.sign_at(&a) {
        0 => p.derivative().sign_at(&a),
        s => s,
    };
    let two = BigRational::from_integer(BigInt::from(2));
    for _ in 0..200 {
        let (fa, fb) = (a.to_f64().unwrap_or(f64::NAN), b.to_f64().unwrap_or(f64::NAN));
        if fa == fb || (fb - fa).abs() <= 4.0 * f64::EPSILON * fa.abs().max(fb.abs()).max(f64::MIN_POSITIVE) {
            break;
        }
        let m = (&a + &b) / &two;
        let sm = p.sign_at(&m);
        if sm == 0 {
            return m.to_f64().unwrap_or(f64::NAN);
        }
        if sm == sa {
            a = m;
        } else {
            b = m;
        }
    }
    ((&a + &b) / two).to_f64().unwrap_or(f64::NAN)
}

/// Real roots with multiplicities, ascending. Roots are certified by Sturm
/// sequences and refined by exact rational bisection.
pub fn real_roots(f: &IntPolynomial) -> Vec<(f64, usize)> {
    let mut out: Vec<(f64, usize)> = Vec::new();
    for (g, mult) in square_free_decomposition(f) {
        for (a, b) in isolate(&g) {
            out.push((refine(&g, a, b), mult));
        }
    }
    out.sort_by(|x, y| x.0.total_cmp(&y.0));
    out
}

/// Integer roots with multiplicities, ascending.
pub fn integer_roots(f: &IntPolynomial) -> Vec<(BigInt, usize)> {
    let mut out = Vec::new();
    for (g, mult) in square_free_decomposition(f) {
        for (a, b) in isolate(&g) {
            let approx = refine(&g, a, b).round();
            let Some(centre) = BigInt::from_f64(approx) else { continue };
            if g.eval(&centre).is_zero() {
                out.push((centre, mult));
            }
        }
    }
    out.sort();
    out
}

/// Number of distinct real roots.
pub fn count_distinct_real_roots(f: &IntPolynomial) -> usize {
    square_free_decomposition(f).iter().map(|(g, _)| isolate(g).len()).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn yun_splits_powers() {
        // (x-1)^3 (x+2)^2 x
        let f = p(&[-1, 1]).pow(3) * p(&[2, 1]).pow(2) * p(&[0, 1]);
        let mut sf = square_free_decomposition(&f);
        sf.sort_by_key(|(_, m)| *m);
        assert_eq!(sf, vec![(p(&[0, 1]), 1), (p(&[2, 1]), 2), (p(&[-1, 1]), 3)]);
    }

    #[test]
    fn real_roots_of_surd_quadratic() {
        let r = real_roots(&p(&[-2, 0, 1]).pow(2));
        assert_eq!(r.len(), 2);
        assert!((r[0].0 + 2f64.sqrt()).abs() < 1e-15 && r[0].1 == 2);
        assert!((r[1].0 - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn close_roots_separated() {
        // (1000x - 1)(1001x - 1)
        let f = p(&[-1, 1000]) * p(&[-1, 1001]);
        let r = real_roots(&f);
        assert_eq!(r.len(), 2);
        assert!((r[0].0 - 1.0 / 1001.0).abs() < 1e-17);
        assert!((r[1].0 - 1.0 / 1000.0).abs() < 1e-17);
    }

    #[test]
    fn integer_roots_found() {
        // x^3 - 2x = x(x^2 - 2); (x - 5)^2 (x + 3)
        assert_eq!(integer_roots(&p(&[0, -2, 0, 1])), vec![(BigInt::zero(), 1)]);
        let f = p(&[-5, 1]).pow(2) * p(&[3, 1]);
        assert_eq!(integer_roots(&f), vec![(BigInt::from(-3), 1), (BigInt::from(5), 2)]);
        assert_eq!(count_distinct_real_roots(&p(&[1, 0, 1])), 0);
    }
}
