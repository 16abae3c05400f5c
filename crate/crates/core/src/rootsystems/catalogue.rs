//! Standard data for irreducible types: Cartan matrices (Bourbaki numbering),
//! root sets in simple-root coordinates, and Weyl groups as integer matrices.

use std::collections::{BTreeSet, VecDeque};

use crate::error::Result;
use crate::exactmath::{rat, RatMatrix, Rational};
use crate::group::{FiniteGroup, IntMatrix};

use super::types::{Component, Family, RootSystemType};
use super::RootSet;

/// `A[i][j] = 2⟨αᵢ, αⱼ⟩ / ⟨αⱼ, αⱼ⟩`. `BC_ℓ` shares the matrix of `B_ℓ`.
pub fn cartan_matrix(c: Component) -> Vec<Vec<i64>> {
    let l = c.rank;
    let mut a = vec![vec![0i64; l]; l];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match c.family {
        Family::A | Family::B | Family::C | Family::BC => {
            for i in 1..l {
                link(i - 1, i);
            }
        }
        Family::D => {
            for i in 1..l - 1 {
                link(i - 1, i);
            }
            link(l - 3, l - 1);
        }
        Family::E => {
            link(0, 2);
            link(1, 3);
            for i in 3..l {
                link(i - 1, i);
            }
        }
        Family::F => {
            for i in 1..4 {
                link(i - 1, i);
            }
        }
        Family::G => link(0, 1),
    }
    match c.family {
        Family::B | Family::BC if l >= 2 => a[l - 2][l - 1] = -2,
        Family::C if l >= 2 => a[l - 1][l - 2] = -2,
        Family::F => a[1][2] = -2,
        Family::G => a[1][0] = -3,
        _ => {}
    }
    a
}

/// Squared lengths `⟨αᵢ, αᵢ⟩` compatible with a connected Cartan matrix,
/// scaled so that the shortest simple root has squared length 2.
pub fn simple_root_lengths(cartan: &[Vec<i64>]) -> Vec<Rational> {
    let l = cartan.len();
    let mut d: Vec<Option<Rational>> = vec![None; l];
    if l == 0 {
        return Vec::new();
    }
    d[0] = Some(rat(1));
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for j in 0..l {
            if i != j && cartan[i][j] != 0 && d[j].is_none() {
                // A_ij d_j = A_ji d_i
                let dj = d[i].clone().unwrap() * rat(cartan[j][i]) / rat(cartan[i][j]);
                d[j] = Some(dj);
                queue.push_back(j);
            }
        }
    }
    let d: Vec<Rational> = d.into_iter().map(|x| x.unwrap_or_else(|| rat(1))).collect();
    let min = d.iter().min().cloned().unwrap();
    d.iter().map(|x| x * rat(2) / &min).collect()
}

/// Gram matrix of the simple roots.
pub fn gram_matrix(cartan: &[Vec<i64>]) -> RatMatrix {
    let d = simple_root_lengths(cartan);
    let l = cartan.len();
    let rows: Vec<Vec<Rational>> = (0..l)
        .map(|i| (0..l).map(|j| rat(cartan[i][j]) * &d[j] / rat(2)).collect())
        .collect();
    RatMatrix::from_rows(rows).expect("square")
}

/// All roots in simple-root coordinates, sorted.
pub fn integer_roots(c: Component) -> Vec<Vec<i64>> {
    let a = cartan_matrix(c);
    let l = c.rank;
    let mut roots: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..l {
        let mut e = vec![0; l];
        e[i] = 1;
        roots.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(v) = queue.pop_front() {
        for i in 0..l {
            // s_i(β) = β − ⟨β, α_i^∨⟩ α_i
            let pairing: i64 = (0..l).map(|j| v[j] * a[j][i]).sum();
            let mut w = v.clone();
            w[i] -= pairing;
            if roots.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }
    if c.family == Family::BC {
        let lengths = simple_root_lengths(&a);
        let g = gram_matrix(&a);
        let short = lengths.iter().min().cloned().unwrap();
        let doubles: Vec<Vec<i64>> = roots
            .iter()
            .filter(|v| {
                let q: Vec<Rational> = v.iter().map(|&x| rat(x)).collect();
                g.mul_vec(&q).map(|gq| crate::exactmath::dot(&q, &gq) == short).unwrap_or(false)
            })
            .map(|v| v.iter().map(|x| 2 * x).collect())
            .collect();
        roots.extend(doubles);
    }
    roots.into_iter().collect()
}

/// Standard root set of a type, block-diagonal over its components.
pub fn standard_root_set(t: &RootSystemType) -> Result<RootSet> {
    let mut grams = Vec::new();
    let mut roots = Vec::new();
    let dim = t.rank();
    let mut offset = 0;
    for &c in t.components() {
        let a = cartan_matrix(c);
        grams.push(gram_matrix(&a));
        for r in integer_roots(c) {
            let mut v = vec![rat(0); dim];
            for (i, x) in r.iter().enumerate() {
                v[offset + i] = rat(*x);
            }
            roots.push(v);
        }
        offset += c.rank;
    }
    RootSet::new(crate::exactmath::QuadraticForm::new(RatMatrix::block_diag(&grams))?, roots)
}

/// Simple reflections in simple-root coordinates: column j of `s_i` is
/// `α_j − A[j][i] α_i`.
pub fn simple_reflections(c: Component) -> Vec<IntMatrix> {
    let a = cartan_matrix(c.weyl_equivalent());
    let l = c.rank;
    (0..l)
        .map(|i| {
            let rows: Vec<Vec<i64>> = (0..l)
                .map(|r| {
                    (0..l)
                        .map(|col| {
                            let delta = i64::from(r == col);
                            if r == i {
                                delta - a[col][i]
                            } else {
                                delta
                            }
                        })
                        .collect()
                })
                .collect();
            IntMatrix::from_rows(&rows)
        })
        .collect()
}

/// Weyl group of an irreducible type as integer matrices.
pub fn weyl_group(c: Component, cap: usize) -> Result<FiniteGroup<IntMatrix>> {
    FiniteGroup::generate(&simple_reflections(c), cap)
}

/// Weyl group of a type, generated by block-diagonal simple reflections.
pub fn weyl_group_of_type(t: &RootSystemType, cap: usize) -> Result<FiniteGroup<IntMatrix>> {
    let n = t.rank();
    let blocks: Vec<Vec<IntMatrix>> = t.components().iter().map(|&c| simple_reflections(c)).collect();
    let mut gens = Vec::new();
    for (k, block) in blocks.iter().enumerate() {
        for s in block {
            let diag: Vec<IntMatrix> = blocks
                .iter()
                .enumerate()
                .map(|(m, b)| if m == k { s.clone() } else { IntMatrix::identity(b[0].dim()) })
                .collect();
            gens.push(IntMatrix::block_diag(&diag));
        }
    }
    FiniteGroup::generate_with_identity(IntMatrix::identity(n), &gens, cap)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(s: &str) -> Component {
        s.parse().unwrap()
    }

    #[test]
    fn root_counts_match_formulas() {
        for s in [
            "A1", "A2", "A5", "B2", "B3", "B6", "C3", "C5", "D4", "D6", "E6", "E7", "E8", "F4", "G2", "A1'", "BC2",
            "BC4",
        ] {
            let c = comp(s);
            assert_eq!(integer_roots(c).len(), c.root_count(), "{s}");
        }
    }

    #[test]
    fn cartan_conventions() {
        // G2: α₂ is the long root
        let g = gram_matrix(&cartan_matrix(comp("G2")));
        assert_eq!(g[(1, 1)], rat(6));
        assert_eq!(g[(0, 0)], rat(2));
        // B3: last root short, C3: last root long
        assert_eq!(simple_root_lengths(&cartan_matrix(comp("B3"))), vec![rat(4), rat(4), rat(2)]);
        assert_eq!(simple_root_lengths(&cartan_matrix(comp("C3"))), vec![rat(2), rat(2), rat(4)]);
        let e8 = cartan_matrix(comp("E8"));
        assert!(e8.iter().all(|r| r.iter().filter(|&&x| x != 0).count() <= 4));
    }

    #[test]
    fn small_weyl_orders() {
        assert_eq!(weyl_group(comp("A2"), 100).unwrap().order(), 6);
        assert_eq!(weyl_group(comp("B2"), 100).unwrap().order(), 8);
        assert_eq!(weyl_group(comp("G2"), 100).unwrap().order(), 12);
        assert_eq!(weyl_group(comp("BC2"), 100).unwrap().order(), 8);
        let t: RootSystemType = "A1+A2".parse().unwrap();
        assert_eq!(weyl_group_of_type(&t, 100).unwrap().order(), 12);
    }
}
