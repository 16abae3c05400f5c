//! Finite root sets in a rational space with a positive-definite form:
//! axiom checks, bases, Dynkin types and Weyl groups.

pub mod catalogue;
pub mod file;
pub mod types;

use std::collections::{HashMap, HashSet};

use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{
    dot, fmt_vec, is_zero_vec, rat, vec_add, vec_neg, vec_scale, QuadraticForm, RatMatrix, Rational,
};
use crate::group::{FiniteGroup, MatrixGroup};

pub use catalogue::standard_root_set;
pub use file::RootSetFile;
pub use types::{Component, Family, RootSystemType};

/// Base of the generic functional `(1, T, T², …)`.
const FUNCTIONAL_BASE: i64 = 101;

#[derive(Clone, Debug)]
pub struct RootSet {
    form: QuadraticForm,
    roots: Vec<Vec<Rational>>,
}

/// Outcome of a successful axiom check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verification {
    pub reduced: bool,
    pub rank: usize,
    pub root_count: usize,
}

/// An irreducible summand found by [`RootSet::decompose`].
#[derive(Clone, Debug)]
pub struct ComponentInfo {
    pub component: Component,
    /// Simple roots of this summand, in Dynkin-diagram order.
    pub simple_roots: Vec<Vec<Rational>>,
    /// Positions in [`RootSet::roots`] of the roots in this summand.
    pub root_indices: Vec<usize>,
}

impl RootSet {
    pub fn new(form: QuadraticForm, roots: Vec<Vec<Rational>>) -> Result<Self> {
        if !form.is_positive_definite() {
            return Err(Error::NotPositiveDefinite);
        }
        if roots.is_empty() {
            return Err(Error::DimensionMismatch("empty root set".into()));
        }
        if let Some(r) = roots.iter().find(|r| r.len() != form.dim()) {
            return Err(Error::DimensionMismatch(format!(
                "root {} has {} coordinates, form has dimension {}",
                fmt_vec(r),
                r.len(),
                form.dim()
            )));
        }
        Ok(Self { form, roots })
    }

    pub fn dim(&self) -> usize {
        self.form.dim()
    }

    pub fn form(&self) -> &QuadraticForm {
        &self.form
    }

    pub fn roots(&self) -> &[Vec<Rational>] {
        &self.roots
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.roots.iter().any(|r| r.as_slice() == v)
    }

    /// Dimension of the span of the roots.
    pub fn rank(&self) -> usize {
        RatMatrix::from_rows(self.roots.clone()).map(|m| m.rank()).unwrap_or(0)
    }

    /// `2⟨β, α⟩ / ⟨α, α⟩`.
    pub fn cartan_number(&self, beta: &[Rational], alpha: &[Rational]) -> Rational {
        rat(2) * self.form.bilinear(beta, alpha) / self.form.eval(alpha)
    }

    /// `s_α(x) = x − 2⟨x, α⟩/⟨α, α⟩ · α`.
    pub fn reflect(&self, alpha: &[Rational], x: &[Rational]) -> Vec<Rational> {
        let c = self.cartan_number(x, alpha);
        vec_add(x, &vec_scale(&-c, alpha))
    }

    /// Checks the root system axioms, reporting the first violation with a witness.
    pub fn verify(&self) -> Result<Verification> {
        let fail = |msg: String| Err(Error::AxiomViolation(msg));
        let mut set: HashSet<&[Rational]> = HashSet::new();
        for r in &self.roots {
            if is_zero_vec(r) {
                return fail("0 is not a root".into());
            }
            if !set.insert(r.as_slice()) {
                return fail(format!("root {} listed twice", fmt_vec(r)));
            }
        }
        for r in &self.roots {
            if !set.contains(vec_neg(r).as_slice()) {
                return fail(format!("{} is a root but its negative is not", fmt_vec(r)));
            }
        }
        let images: Vec<Vec<Rational>> = self
            .roots
            .iter()
            .map(|a| self.form.gram().mul_vec(a).expect("dimension checked"))
            .collect();
        let norms: Vec<Rational> = self.roots.iter().zip(&images).map(|(a, ga)| dot(a, ga)).collect();
        for (i, alpha) in self.roots.iter().enumerate() {
            for beta in &self.roots {
                let n = rat(2) * dot(beta, &images[i]) / &norms[i];
                if !n.is_integer() {
                    return fail(format!(
                        "2<b,a>/<a,a> = {} is not an integer for a = {}, b = {}",
                        crate::exactmath::fmt_rational(&n),
                        fmt_vec(alpha),
                        fmt_vec(beta)
                    ));
                }
                let image = vec_add(beta, &vec_scale(&-n, alpha));
                if !set.contains(image.as_slice()) {
                    return fail(format!(
                        "reflection in {} sends the root {} to {}, which is not a root",
                        fmt_vec(alpha),
                        fmt_vec(beta),
                        fmt_vec(&image)
                    ));
                }
            }
        }
        let reduced = !self
            .roots
            .iter()
            .any(|r| set.contains(vec_scale(&rat(2), r).as_slice()));
        Ok(Verification { reduced, rank: self.rank(), root_count: self.roots.len() })
    }

    /// Positive roots for the first functional `x ↦ Σ xᵢ Tⁱ`, `T = 101, 103, …`,
    /// that vanishes on no root.
    pub fn positive_roots(&self) -> Vec<Vec<Rational>> {
        let mut base = FUNCTIONAL_BASE;
        loop {
            let t = rat(base);
            let weights: Vec<Rational> = (0..self.dim())
                .scan(rat(1), |p, _| {
                    let w = p.clone();
                    *p *= &t;
                    Some(w)
                })
                .collect();
            let values: Vec<Rational> = self.roots.iter().map(|r| dot(r, &weights)).collect();
            if values.iter().all(|v| !v.is_zero()) {
                return self
                    .roots
                    .iter()
                    .zip(values)
                    .filter(|(_, v)| v.is_positive())
                    .map(|(r, _)| r.clone())
                    .collect();
            }
            base += 2;
        }
    }

    /// Simple roots: positive roots that are not a sum of two positive roots,
    /// sorted lexicographically.
    pub fn base(&self) -> Vec<Vec<Rational>> {
        let positive = self.positive_roots();
        let set: HashSet<&[Rational]> = positive.iter().map(Vec::as_slice).collect();
        let mut decomposable: HashSet<Vec<Rational>> = HashSet::new();
        for (i, a) in positive.iter().enumerate() {
            for b in &positive[i..] {
                let s = vec_add(a, b);
                if set.contains(s.as_slice()) {
                    decomposable.insert(s);
                }
            }
        }
        let mut simple: Vec<Vec<Rational>> =
            positive.into_iter().filter(|r| !decomposable.contains(r)).collect();
        simple.sort();
        simple
    }

    /// Splits the system into irreducible summands and identifies each one.
    /// Requires a verified root system.
    pub fn decompose(&self) -> Result<Vec<ComponentInfo>> {
        let base = self.base();
        let l = base.len();
        // connected components of the Dynkin graph
        let mut label: Vec<Option<usize>> = vec![None; l];
        let mut groups: Vec<Vec<usize>> = Vec::new();
        for start in 0..l {
            if label[start].is_some() {
                continue;
            }
            let id = groups.len();
            let mut stack = vec![start];
            let mut members = Vec::new();
            label[start] = Some(id);
            while let Some(i) = stack.pop() {
                members.push(i);
                for j in 0..l {
                    if label[j].is_none() && !self.form.bilinear(&base[i], &base[j]).is_zero() {
                        label[j] = Some(id);
                        stack.push(j);
                    }
                }
            }
            members.sort_unstable();
            groups.push(members);
        }
        let mut out = Vec::new();
        for members in groups {
            let simple: Vec<Vec<Rational>> = members.iter().map(|&i| base[i].clone()).collect();
            let root_indices: Vec<usize> = (0..self.roots.len())
                .filter(|&k| simple.iter().any(|s| !self.form.bilinear(&self.roots[k], s).is_zero()))
                .collect();
            let cartan: Vec<Vec<i64>> = simple
                .iter()
                .map(|a| {
                    simple
                        .iter()
                        .map(|b| self.cartan_number(a, b).to_integer().to_i64().expect("small Cartan entry"))
                        .collect()
                })
                .collect();
            let lengths: Vec<Rational> = simple.iter().map(|a| self.form.eval(a)).collect();
            let (family, order) = identify_diagram(&cartan, &lengths)?;
            let members_set: HashSet<&[Rational]> = root_indices.iter().map(|&k| self.roots[k].as_slice()).collect();
            let divisible = root_indices
                .iter()
                .any(|&k| members_set.contains(vec_scale(&rat(2), &self.roots[k]).as_slice()));
            let component = match (family, divisible) {
                (Family::A, true) if simple.len() == 1 => Component { family: Family::BC, rank: 1 },
                (Family::B, true) => Component { family: Family::BC, rank: simple.len() },
                (Family::B, false) if simple.len() == 2 => Component::new(Family::B, 2)?,
                (f, false) => Component::new(f, simple.len())?,
                (f, true) => {
                    return Err(Error::UnknownDiagram(format!(
                        "{}{} summand contains divisible roots",
                        f.letter(),
                        simple.len()
                    )))
                }
            };
            if root_indices.len() != component.root_count() {
                return Err(Error::UnknownDiagram(format!(
                    "{component} summand has {} roots, expected {}",
                    root_indices.len(),
                    component.root_count()
                )));
            }
            out.push(ComponentInfo {
                component,
                simple_roots: order.iter().map(|&i| simple[i].clone()).collect(),
                root_indices,
            });
        }
        out.sort_by(|a, b| a.component.cmp(&b.component).then_with(|| a.simple_roots.cmp(&b.simple_roots)));
        Ok(out)
    }

    pub fn classify(&self) -> Result<RootSystemType> {
        Ok(RootSystemType::new(self.decompose()?.into_iter().map(|c| c.component).collect()))
    }

    /// Matrix of `s_α` acting on coordinate columns.
    pub fn reflection_matrix(&self, alpha: &[Rational]) -> Result<RatMatrix> {
        if !self.contains(alpha) {
            return Err(Error::AxiomViolation(format!("{} is not in the root set", fmt_vec(alpha))));
        }
        Ok(reflection_matrix(&self.form, alpha))
    }

    /// Weyl group generated by the simple reflections.
    pub fn weyl_group(&self, cap: usize) -> Result<MatrixGroup> {
        let gens: Vec<RatMatrix> = self.base().iter().map(|a| reflection_matrix(&self.form, a)).collect();
        FiniteGroup::generate_with_identity(RatMatrix::identity(self.dim()), &gens, cap)
    }

    /// Whether `m` maps the root set onto itself.
    pub fn permuted_by(&self, m: &RatMatrix) -> bool {
        let set: HashSet<&[Rational]> = self.roots.iter().map(Vec::as_slice).collect();
        self.roots
            .iter()
            .all(|r| m.mul_vec(r).map(|img| set.contains(img.as_slice())).unwrap_or(false))
    }

    /// Whether `mᵀ G m = G`.
    pub fn preserves_form(&self, m: &RatMatrix) -> bool {
        let g = self.form.gram();
        m.transpose().mul(g).and_then(|x| x.mul(m)).map(|x| x == *g).unwrap_or(false)
    }
}

/// Reflection in `alpha` with respect to `form`.
pub fn reflection_matrix(form: &QuadraticForm, alpha: &[Rational]) -> RatMatrix {
    let n = form.dim();
    let g_alpha = form.gram().mul_vec(alpha).expect("dimension");
    let norm = dot(alpha, &g_alpha);
    let mut m = RatMatrix::identity(n);
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] -= rat(2) * &alpha[i] * &g_alpha[j] / &norm;
        }
    }
    m
}

/// Identifies a connected Dynkin diagram from its Cartan matrix and the squared
/// lengths of its simple roots. Returns the family and the simple roots
/// reordered to the standard numbering.
pub fn identify_diagram(cartan: &[Vec<i64>], lengths: &[Rational]) -> Result<(Family, Vec<usize>)> {
    let l = cartan.len();
    let unknown = |why: &str| Err(Error::UnknownDiagram(format!("rank {l}: {why}")));
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); l];
    let mut edges: HashMap<(usize, usize), i64> = HashMap::new();
    for i in 0..l {
        if cartan[i][i] != 2 {
            return unknown("diagonal entry is not 2");
        }
        for j in i + 1..l {
            let m = cartan[i][j] * cartan[j][i];
            if (cartan[i][j] == 0) != (cartan[j][i] == 0) || !(0..=3).contains(&m) {
                return unknown("invalid Cartan entries");
            }
            if m > 0 {
                adj[i].push(j);
                adj[j].push(i);
                edges.insert((i, j), m);
            }
        }
    }
    if l == 0 {
        return unknown("empty diagram");
    }
    if edges.len() != l - 1 {
        return unknown("diagram is not a tree");
    }
    if l == 1 {
        return Ok((Family::A, vec![0]));
    }
    let degrees: Vec<usize> = adj.iter().map(Vec::len).collect();
    let multiple: Vec<(&(usize, usize), &i64)> = edges.iter().filter(|(_, &m)| m > 1).collect();
    let max_degree = *degrees.iter().max().unwrap();

    if multiple.len() > 1 {
        return unknown("more than one multiple edge");
    }
    if let Some((&(i, j), &m)) = multiple.first() {
        if max_degree > 2 {
            return unknown("branched diagram with a multiple edge");
        }
        let path = walk_path(&adj, &degrees);
        let pos = |v: usize| path.iter().position(|&x| x == v).unwrap();
        let (p, q) = (pos(i).min(pos(j)), pos(i).max(pos(j)));
        if m == 3 {
            return if l == 2 {
                // short root first
                let order = if lengths[path[0]] < lengths[path[1]] { path } else { vec![path[1], path[0]] };
                Ok((Family::G, order))
            } else {
                unknown("triple edge in rank > 2")
            };
        }
        if l == 2 {
            // long root first, as in B2
            let order = if lengths[path[0]] > lengths[path[1]] { path } else { vec![path[1], path[0]] };
            return Ok((Family::B, order));
        }
        let at_end = p == 0 || q == l - 1;
        if at_end {
            // orient the path so the double edge is at the far end
            let path: Vec<usize> = if p == 0 { path.into_iter().rev().collect() } else { path };
            let end = path[l - 1];
            let neighbour = path[l - 2];
            let family = if lengths[end] < lengths[neighbour] { Family::B } else { Family::C };
            return Ok((family, path));
        }
        if l == 4 && p == 1 {
            // F4: long roots first
            let path: Vec<usize> = if lengths[path[0]] > lengths[path[3]] { path } else { path.into_iter().rev().collect() };
            return Ok((Family::F, path));
        }
        return unknown("double edge in the interior of a long path");
    }

    // simply laced
    if max_degree <= 2 {
        return Ok((Family::A, walk_path(&adj, &degrees)));
    }
    let branches: Vec<usize> = (0..l).filter(|&v| degrees[v] >= 3).collect();
    if branches.len() != 1 || degrees[branches[0]] != 3 {
        return unknown("unsupported branching");
    }
    let centre = branches[0];
    let mut arms: Vec<Vec<usize>> = adj[centre]
        .iter()
        .map(|&start| {
            let mut arm = vec![start];
            let mut prev = centre;
            let mut cur = start;
            while let Some(&next) = adj[cur].iter().find(|&&x| x != prev) {
                arm.push(next);
                prev = cur;
                cur = next;
            }
            arm
        })
        .collect();
    arms.sort_by_key(Vec::len);
    let lens: Vec<usize> = arms.iter().map(Vec::len).collect();
    match lens.as_slice() {
        [1, 1, k] => {
            // D: long arm (reversed) first, then centre, then the two short arms
            let mut order: Vec<usize> = arms[2].iter().rev().copied().collect();
            debug_assert_eq!(order.len(), *k);
            order.push(centre);
            order.push(arms[0][0]);
            order.push(arms[1][0]);
            Ok((Family::D, order))
        }
        [1, 2, 2] | [1, 2, 3] | [1, 2, 4] => {
            // E: α1 = end of the length-2 arm, α2 = short arm, α3, α4 = centre, then the long arm
            let order = vec![arms[1][1], arms[0][0], arms[1][0], centre]
                .into_iter()
                .chain(arms[2].iter().copied())
                .collect();
            Ok((Family::E, order))
        }
        _ => unknown("branch arms do not match D or E"),
    }
}

/// Vertices of a path graph from one end to the other.
fn walk_path(adj: &[Vec<usize>], degrees: &[usize]) -> Vec<usize> {
    let start = (0..adj.len()).find(|&v| degrees[v] <= 1).unwrap_or(0);
    let mut path = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = adj[cur].iter().find(|&&x| x != prev) {
        path.push(next);
        prev = cur;
        cur = next;
    }
    path
}

#[cfg(test)]
mod tests;
