//! Candidate generation for roots of a polynomial inside a number field.
//!
//! Complex embeddings are used only to propose integral coordinate vectors;
//! every candidate is accepted solely after exact verification by the caller.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use crate::exactmath::{RatMatrix, Rational};

use super::poly::integral_rescale;

/// Upper bound on the number of embedding assignments tried.
pub const MAX_ASSIGNMENTS: usize = 2_000_000;

fn to_c(x: &Rational) -> Complex64 {
    Complex64::new(x.to_f64().unwrap_or(f64::NAN), 0.0)
}

fn horner(p: &[Complex64], z: Complex64) -> Complex64 {
    p.iter().rev().fold(Complex64::zero(), |acc, c| acc * z + c)
}

/// Complex roots of a monic polynomial (Durand–Kerner with Newton polishing).
pub fn complex_roots(f: &[Rational]) -> Vec<Complex64> {
    let n = f.len() - 1;
    if n == 0 {
        return Vec::new();
    }
    let p: Vec<Complex64> = f.iter().map(to_c).collect();
    let dp: Vec<Complex64> = (1..=n).map(|i| p[i] * i as f64).collect();
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..n).map(|k| seed.powu(k as u32 + 1)).collect();
    for _ in 0..2000 {
        let mut delta = 0.0f64;
        for i in 0..n {
            let denom = (0..n)
                .filter(|&j| j != i)
                .fold(Complex64::new(1.0, 0.0), |acc, j| acc * (z[i] - z[j]));
            if denom.norm() == 0.0 {
                z[i] += Complex64::new(1e-6, 1e-6);
                continue;
            }
            let step = horner(&p, z[i]) / denom;
            z[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 {
            break;
        }
    }
    for zi in &mut z {
        for _ in 0..5 {
            let d = horner(&dp, *zi);
            if d.norm() == 0.0 {
                break;
            }
            *zi -= horner(&p, *zi) / d;
        }
    }
    z
}

fn invert(m: &[Vec<Complex64>]) -> Option<Vec<Vec<Complex64>>> {
    let n = m.len();
    let mut a: Vec<Vec<Complex64>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| Complex64::new(if i == j { 1.0 } else { 0.0 }, 0.0)));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).max_by(|&x, &y| a[x][col].norm().total_cmp(&a[y][col].norm()))?;
        if a[piv][col].norm() < 1e-12 {
            return None;
        }
        a.swap(piv, col);
        let inv = a[col][col].inv();
        for c in 0..2 * n {
            a[col][c] *= inv;
        }
        for r in 0..n {
            if r != col {
                let f = a[r][col];
                if f.norm() != 0.0 {
                    for c in 0..2 * n {
                        let v = a[col][c];
                        a[r][c] -= f * v;
                    }
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Proposes elements `y` of the field (as power-basis coordinates) with `h(y) = 0`.
///
/// `min_poly` defines the field, `basis` holds the integral basis as rows of
/// power-basis coordinates, `h` is monic. Each embedding of the field sends a
/// root of `h` to some complex root of `h`, so trying every assignment of
/// embeddings to roots and rounding the resulting integral coordinates finds
/// all roots of `h` in the field. Returns `None` if the search space exceeds
/// [`MAX_ASSIGNMENTS`].
pub fn root_candidates(min_poly: &[Rational], basis: &RatMatrix, h: &[Rational]) -> Option<Vec<Vec<Rational>>> {
    let n = min_poly.len() - 1;
    let m = h.len() - 1;
    if m == 0 {
        return Some(Vec::new());
    }
    let total = (m as f64).powi(n as i32);
    if total > MAX_ASSIGNMENTS as f64 {
        return None;
    }
    let field_roots = complex_roots(min_poly);
    let (_, scale) = integral_rescale(h);
    let scale_f = scale.to_f64().unwrap_or(f64::NAN);
    let h_roots: Vec<Complex64> = complex_roots(h).into_iter().map(|r| r * scale_f).collect();

    // E[k][i] = ρ_k(b_i)
    let emb: Vec<Vec<Complex64>> = field_roots
        .iter()
        .map(|&r| {
            (0..n)
                .map(|i| {
                    basis
                        .row(i)
                        .iter()
                        .enumerate()
                        .fold(Complex64::zero(), |acc, (j, c)| acc + to_c(c) * r.powu(j as u32))
                })
                .collect()
        })
        .collect();
    let inv = invert(&emb)?;

    let mut found: Vec<Vec<Rational>> = Vec::new();
    let mut assign = vec![0usize; n];
    'outer: loop {
        let target: Vec<Complex64> = assign.iter().map(|&j| h_roots[j]).collect();
        let coords: Vec<Complex64> = inv
            .iter()
            .map(|row| row.iter().zip(&target).map(|(a, b)| a * b).sum())
            .collect();
        let tol = 1e-6 * (1.0 + coords.iter().map(|c| c.norm()).fold(0.0, f64::max));
        if coords.iter().all(|c| c.im.abs() < tol && (c.re - c.re.round()).abs() < tol) {
            let ints: Vec<Rational> = coords
                .iter()
                .map(|c| Rational::new(BigInt::from(c.re.round() as i64), scale.clone()))
                .collect();
            let power = basis.transpose().mul_vec(&ints).expect("basis is n x n");
            if !found.contains(&power) {
                found.push(power);
            }
        }
        for slot in assign.iter_mut() {
            *slot += 1;
            if *slot < m {
                continue 'outer;
            }
            *slot = 0;
        }
        break;
    }
    Some(found)
}
