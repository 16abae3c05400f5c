//! Univariate polynomials over Q (ascending coefficient lists) and the
//! irreducibility scan used to validate defining polynomials.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exactmath::{fmt_rational, RatMatrix, Rational};

/// Drops trailing zero coefficients.
pub fn trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub fn degree(p: &[Rational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn eval(p: &[Rational], x: &Rational) -> Rational {
    p.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

pub fn format_poly(p: &[Rational]) -> String {
    p.iter().map(fmt_rational).collect::<Vec<_>>().join(" ")
}

/// Characteristic polynomial `det(xI − A)` by Faddeev–LeVerrier, ascending coefficients.
pub fn char_poly(a: &RatMatrix) -> Vec<Rational> {
    let n = a.rows();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut m = RatMatrix::zeros(n, n);
    for k in 1..=n {
        let shifted = RatMatrix::identity(n).scale(&coeffs[n + 1 - k]);
        m = a.mul(&m).and_then(|am| am.add(&shifted)).expect("square");
        let am = a.mul(&m).expect("square");
        coeffs[n - k] = -am.trace() / Rational::from_integer(BigInt::from(k));
    }
    coeffs
}

/// Rescales a monic rational polynomial `f` of degree n to the monic integer
/// polynomial `D^n f(y/D)`; returns it together with `D`.
pub fn integral_rescale(f: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let n = f.len() - 1;
    let d = f.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut out = Vec::with_capacity(n + 1);
    for (i, c) in f.iter().enumerate() {
        let scaled = c * Rational::from_integer(num_traits::pow(d.clone(), n - i));
        debug_assert!(scaled.is_integer());
        out.push(scaled.to_integer());
    }
    (out, d)
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            small.push(d.clone());
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn eval_int(p: &[BigInt], x: &BigInt) -> BigInt {
    p.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// Reports a factorisation witness for monic `f` of degree ≤ 4, or `None` if `f` is irreducible.
/// Panics on degree > 4; callers gate on degree.
pub fn reducibility_witness(f: &[Rational]) -> Option<String> {
    let n = f.len() - 1;
    assert!(n <= 4, "exhaustive scan only covers degree <= 4");
    if n <= 1 {
        return None;
    }
    let (g, d) = integral_rescale(f);
    // Rational roots of f correspond to integer roots of g dividing g[0].
    if g[0].is_zero() {
        return Some("x = 0 is a root".into());
    }
    for q in divisors(&g[0]) {
        for root in [q.clone(), -q] {
            if eval_int(&g, &root).is_zero() {
                let r = Rational::new(root, d.clone());
                return Some(format!("rational root {}", fmt_rational(&r)));
            }
        }
    }
    if n < 4 {
        return None;
    }
    // g = (y² + a y + b)(y² + c y + e) with integer a, b, c, e.
    let (g0, g1, g2, g3) = (&g[0], &g[1], &g[2], &g[3]);
    for b in divisors(g0).into_iter().flat_map(|q| [q.clone(), -q]) {
        let e = g0 / &b;
        let try_a = |a: BigInt| {
            let c = g3 - &a;
            (&b + &e + &a * &c == *g2 && &a * &e + &b * &c == *g1).then(|| {
                format!("quadratic factors with (a,b)=({a},{b}), (c,e)=({c},{e})")
            })
        };
        if b != e {
            // a (e − b) = g1 − b g3
            let num = g1 - &b * g3;
            let den = &e - &b;
            if (&num % &den).is_zero() {
                if let Some(w) = try_a(num / den) {
                    return Some(w);
                }
            }
        } else {
            // a (g3 − a) = g2 − 2b  ⇒  a² − g3 a + (g2 − 2b) = 0
            let disc = g3 * g3 - BigInt::from(4) * (g2 - BigInt::from(2) * &b);
            if !disc.is_negative() {
                let s = crate::exactmath::isqrt(&disc);
                if &s * &s == disc {
                    for a in [(g3 + &s) / 2, (g3 - &s) / 2] {
                        if let Some(w) = try_a(a) {
                            return Some(w);
                        }
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, rat_vec};

    #[test]
    fn char_poly_of_companion() {
        // companion of x² − x + 1
        let a = RatMatrix::from_int_rows(&[&[0, -1], &[1, 1]]);
        assert_eq!(char_poly(&a), rat_vec(&[1, -1, 1]));
    }

    #[test]
    fn irreducible_quadratics_and_quartic() {
        assert!(reducibility_witness(&rat_vec(&[1, -1, 1])).is_none());
        assert!(reducibility_witness(&rat_vec(&[-2, 0, 1])).is_none());
        assert!(reducibility_witness(&rat_vec(&[1, 0, -1, 0, 1])).is_none());
    }

    #[test]
    fn reducible_cases_are_caught() {
        assert!(reducibility_witness(&rat_vec(&[-1, 0, 1])).is_some());
        // (x² + 1)(x² + 2) has no rational root
        assert!(reducibility_witness(&rat_vec(&[2, 0, 3, 0, 1])).is_some());
        // (x² + x + 1)²
        assert!(reducibility_witness(&rat_vec(&[1, 2, 3, 2, 1])).is_some());
        // x² − 1/4 has root 1/2
        let f = vec![crate::exactmath::ratio(-1, 4), rat(0), rat(1)];
        assert!(reducibility_witness(&f).unwrap().contains("1/2"));
    }
}
