//! Exact arithmetic in a number field `K = Q[x]/(f)`, its ring of integers,
//! automorphisms, trace and norm maps, and torsion units.
//!
//! Elements are stored by their coordinates in the power basis `1, θ, …, θⁿ⁻¹`.
//! Linear maps on `K` (multiplications, automorphisms) are matrices acting on
//! those coordinate columns.

mod embed;
pub mod file;
pub mod poly;
mod presets;

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{
    enumerate_level_set, fmt_rational, is_zero_vec, rat, solve_linear, QuadraticForm, RatMatrix, Rational,
};

pub use file::FieldDescription;
pub use presets::{preset, preset_names, PRESETS};

/// How the conjugation used by the trace form is chosen.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConjugationSpec {
    /// Identity on totally real fields, otherwise the unique central involution
    /// giving a positive-definite trace form.
    Auto,
    Index(usize),
    None,
}

/// Full description of a field before validation.
#[derive(Clone, Debug)]
pub struct FieldSpec {
    pub name: String,
    /// Monic defining polynomial, ascending coefficients.
    pub min_poly: Vec<Rational>,
    /// Rows are power-basis coordinates of a Z-basis of the ring of integers.
    pub integral_basis: RatMatrix,
    pub conjugation: ConjugationSpec,
    /// Set when irreducibility of a degree > 4 polynomial is vouched for externally.
    pub irreducibility_certified: bool,
}

#[derive(Debug)]
pub struct NumberField {
    name: String,
    min_poly: Vec<Rational>,
    degree: usize,
    /// θ^k for k < 2n − 1, reduced to power-basis coordinates.
    powers: Vec<Vec<Rational>>,
    integral_basis: RatMatrix,
    /// Converts power-basis coordinates to integral-basis coordinates.
    to_integral: RatMatrix,
    automorphisms: Vec<RatMatrix>,
    aut_compose: Vec<Vec<usize>>,
    aut_inverse: Vec<usize>,
    aut_order: Vec<usize>,
    conjugation: Option<usize>,
    unity: Option<(Vec<Rational>, usize)>,
}

/// Generator and order of the cyclic group of roots of unity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootsOfUnity {
    pub generator: FieldElement,
    pub order: usize,
}

impl NumberField {
    /// Builds and validates a field: irreducibility, integral basis, automorphisms,
    /// conjugation and the torsion subgroup of the unit group.
    pub fn new(spec: FieldSpec) -> Result<Arc<NumberField>> {
        let mut f = spec.min_poly.clone();
        poly::trim(&mut f);
        let n = poly::degree(&f).ok_or_else(|| Error::InvalidField("zero polynomial".into()))?;
        if n == 0 {
            return Err(Error::InvalidField("defining polynomial must have degree >= 1".into()));
        }
        if !f[n].is_one() {
            return Err(Error::InvalidField("defining polynomial must be monic".into()));
        }
        if n <= 4 {
            if let Some(w) = poly::reducibility_witness(&f) {
                return Err(Error::ReduciblePolynomial(w));
            }
        } else if !spec.irreducibility_certified {
            return Err(Error::InvalidField(
                "degree > 4 requires an irreducibility certificate".into(),
            ));
        }

        let powers = reduced_powers(&f, n);
        let basis = spec.integral_basis.clone();
        if basis.rows() != n || basis.cols() != n {
            return Err(Error::InvalidField(format!("integral basis must be {n}x{n}")));
        }
        let to_integral = basis
            .transpose()
            .inverse()
            .map_err(|_| Error::InvalidField("integral basis is singular".into()))?;

        let mut k = NumberField {
            name: spec.name.clone(),
            min_poly: f.clone(),
            degree: n,
            powers,
            integral_basis: basis,
            to_integral,
            automorphisms: Vec::new(),
            aut_compose: Vec::new(),
            aut_inverse: Vec::new(),
            aut_order: Vec::new(),
            conjugation: None,
            unity: None,
        };
        k.check_integral_basis()?;
        k.find_automorphisms()?;
        k.conjugation = k.resolve_conjugation(&spec.conjugation)?;
        if k.conjugation.is_some() {
            k.unity = Some(k.compute_roots_of_unity()?);
        }
        Ok(Arc::new(k))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn min_poly(&self) -> &[Rational] {
        &self.min_poly
    }

    pub fn integral_basis(&self) -> &RatMatrix {
        &self.integral_basis
    }

    pub fn automorphisms(&self) -> &[RatMatrix] {
        &self.automorphisms
    }

    pub fn aut_count(&self) -> usize {
        self.automorphisms.len()
    }

    /// Index of `g ∘ h`.
    pub fn aut_compose(&self, g: usize, h: usize) -> usize {
        self.aut_compose[g][h]
    }

    pub fn aut_inverse(&self, g: usize) -> usize {
        self.aut_inverse[g]
    }

    pub fn aut_order(&self, g: usize) -> usize {
        self.aut_order[g]
    }

    pub fn conjugation_index(&self) -> Option<usize> {
        self.conjugation
    }

    /// Cached |μ_K|, when a conjugation is designated.
    pub fn unity_group_order(&self) -> Option<usize> {
        self.unity.as_ref().map(|u| u.1)
    }

    // ---- coordinate-level arithmetic ----

    fn mul_coords(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let n = self.degree;
        let mut out = vec![Rational::zero(); n];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (o, p) in out.iter_mut().zip(&self.powers[i + j]) {
                    if !p.is_zero() {
                        *o += &xy * p;
                    }
                }
            }
        }
        out
    }

    fn unit_coords(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.degree];
        v[i] = Rational::one();
        v
    }

    fn mult_matrix_coords(&self, a: &[Rational]) -> RatMatrix {
        let cols: Vec<Vec<Rational>> = (0..self.degree).map(|j| self.mul_coords(a, &self.powers[j])).collect();
        RatMatrix::from_columns(&cols).expect("square")
    }

    fn trace_coords(&self, a: &[Rational]) -> Rational {
        self.mult_matrix_coords(a).trace()
    }

    fn eval_poly_at(&self, p: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut acc = vec![Rational::zero(); self.degree];
        for c in p.iter().rev() {
            acc = self.mul_coords(&acc, y);
            acc[0] += c;
        }
        acc
    }

    fn basis_element(&self, i: usize) -> Vec<Rational> {
        self.integral_basis.row(i).to_vec()
    }

    fn integral_coords(&self, a: &[Rational]) -> Vec<Rational> {
        self.to_integral.mul_vec(a).expect("length n")
    }

    fn check_integral_basis(&self) -> Result<()> {
        let n = self.degree;
        let in_lattice = |v: &[Rational]| self.integral_coords(v).iter().all(Rational::is_integer);
        if !in_lattice(&self.unit_coords(0)) {
            return Err(Error::InvalidField("1 is not in the span of the integral basis".into()));
        }
        for i in 0..n {
            let bi = self.basis_element(i);
            let cp = poly::char_poly(&self.mult_matrix_coords(&bi));
            if !cp.iter().all(Rational::is_integer) {
                return Err(Error::InvalidField(format!("basis element {i} is not integral")));
            }
            for j in i..n {
                let prod = self.mul_coords(&bi, &self.basis_element(j));
                if !in_lattice(&prod) {
                    return Err(Error::InvalidField(format!(
                        "basis is not closed under multiplication (b{i}·b{j})"
                    )));
                }
            }
        }
        Ok(())
    }

    fn aut_matrix_from_image(&self, y: &[Rational]) -> RatMatrix {
        let mut cols = Vec::with_capacity(self.degree);
        let mut p = self.unit_coords(0);
        for _ in 0..self.degree {
            cols.push(p.clone());
            p = self.mul_coords(&p, y);
        }
        RatMatrix::from_columns(&cols).expect("square")
    }

    /// Every automorphism matrix must send 1 to 1 and be multiplicative on basis pairs.
    pub fn verify_automorphism(&self, a: &RatMatrix) -> Result<()> {
        let n = self.degree;
        if a.rows() != n || a.cols() != n {
            return Err(Error::BadAutomorphism("wrong dimension".into()));
        }
        if a.column(0) != self.unit_coords(0) {
            return Err(Error::BadAutomorphism("does not fix 1".into()));
        }
        for i in 0..n {
            for j in i..n {
                let lhs = a.mul_vec(&self.powers[i + j]).expect("n");
                let rhs = self.mul_coords(&a.column(i), &a.column(j));
                if lhs != rhs {
                    return Err(Error::BadAutomorphism(format!("not multiplicative on θ^{i}·θ^{j}")));
                }
            }
        }
        if n > 1 && !is_zero_vec(&self.eval_poly_at(&self.min_poly, &a.column(1))) {
            return Err(Error::BadAutomorphism("image of θ is not a root".into()));
        }
        Ok(())
    }

    fn find_automorphisms(&mut self) -> Result<()> {
        let n = self.degree;
        let mut images = self.roots_in_field(&self.min_poly.clone())?;
        let theta = if n == 1 { vec![-self.min_poly[0].clone()] } else { self.unit_coords(1) };
        images.retain(|y| y != &theta);
        images.sort();
        images.insert(0, theta);
        let mats: Vec<RatMatrix> = images.iter().map(|y| self.aut_matrix_from_image(y)).collect();
        for a in &mats {
            self.verify_automorphism(a)?;
        }
        if !n.is_multiple_of(mats.len()) {
            return Err(Error::BadAutomorphism(format!(
                "{} automorphisms found, which does not divide the degree {n}",
                mats.len()
            )));
        }
        let index_of = |m: &RatMatrix| mats.iter().position(|x| x == m);
        let mut compose = vec![vec![0; mats.len()]; mats.len()];
        for (g, mg) in mats.iter().enumerate() {
            for (h, mh) in mats.iter().enumerate() {
                let prod = mg.mul(mh)?;
                compose[g][h] = index_of(&prod)
                    .ok_or_else(|| Error::BadAutomorphism("automorphisms not closed under composition".into()))?;
            }
        }
        let inverse: Vec<usize> = (0..mats.len())
            .map(|g| (0..mats.len()).find(|&h| compose[g][h] == 0).expect("group"))
            .collect();
        let order: Vec<usize> = (0..mats.len())
            .map(|g| {
                let mut k = 1;
                let mut cur = g;
                while cur != 0 {
                    cur = compose[g][cur];
                    k += 1;
                }
                k
            })
            .collect();
        self.automorphisms = mats;
        self.aut_compose = compose;
        self.aut_inverse = inverse;
        self.aut_order = order;
        Ok(())
    }

    /// All roots of the monic polynomial `h` lying in the field, as power-basis
    /// coordinates, each verified exactly.
    fn roots_in_field(&self, h: &[Rational]) -> Result<Vec<Vec<Rational>>> {
        if self.degree == 1 {
            // K = Q: roots are rational
            let (g, d) = poly::integral_rescale(h);
            let mut out = Vec::new();
            if g.len() == 2 {
                out.push(vec![Rational::new(-g[0].clone(), d)]);
            } else {
                let cands = embed::root_candidates(&self.min_poly, &self.integral_basis, h).unwrap_or_default();
                out.extend(cands);
            }
            out.retain(|y| poly::eval(h, &y[0]).is_zero());
            return Ok(out);
        }
        let cands = embed::root_candidates(&self.min_poly, &self.integral_basis, h).ok_or_else(|| {
            Error::UnsupportedField("root search space too large for this degree".into())
        })?;
        Ok(cands
            .into_iter()
            .filter(|y| is_zero_vec(&self.eval_poly_at(h, y)))
            .collect())
    }

    fn trace_form_gram(&self, tau: usize) -> RatMatrix {
        let n = self.degree;
        let mut g = RatMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let bj = self.automorphisms[tau].mul_vec(&self.basis_element(j)).expect("n");
                g[(i, j)] = self.trace_coords(&self.mul_coords(&self.basis_element(i), &bj));
            }
        }
        g
    }

    fn resolve_conjugation(&self, spec: &ConjugationSpec) -> Result<Option<usize>> {
        let acceptable = |tau: usize| -> bool {
            let order_ok = self.aut_order[tau] <= 2;
            let central = (0..self.aut_count()).all(|g| self.aut_compose[g][tau] == self.aut_compose[tau][g]);
            let pd = QuadraticForm::new(self.trace_form_gram(tau))
                .map(|q| q.is_positive_definite())
                .unwrap_or(false);
            order_ok && central && pd
        };
        match spec {
            ConjugationSpec::None => Ok(None),
            ConjugationSpec::Index(i) => {
                if *i >= self.aut_count() || !acceptable(*i) {
                    return Err(Error::InvalidField(format!(
                        "automorphism {i} is not a conjugation with positive-definite trace form"
                    )));
                }
                Ok(Some(*i))
            }
            ConjugationSpec::Auto => Ok((0..self.aut_count()).find(|&t| acceptable(t))),
        }
    }

    fn compute_roots_of_unity(&self) -> Result<(Vec<Rational>, usize)> {
        let tf = self.trace_form()?;
        let level = rat(self.degree as i64);
        let pts = enumerate_level_set(tf.form(), &level)?;
        let mut best: Option<(Vec<Rational>, usize)> = None;
        let mut count = 0;
        for p in pts {
            let ints: Vec<Rational> = p.into_iter().map(Rational::from_integer).collect();
            let u = self.integral_basis.transpose().mul_vec(&ints)?;
            if let Some(d) = self.root_of_unity_order(&u) {
                count += 1;
                if best.as_ref().is_none_or(|b| d > b.1) {
                    best = Some((u, d));
                }
            }
        }
        let (gen, order) = best.ok_or_else(|| Error::InvalidField("no roots of unity found".into()))?;
        if order != count {
            return Err(Error::InvalidField(format!(
                "roots of unity do not form a cyclic group ({count} found, max order {order})"
            )));
        }
        Ok((gen, order))
    }

    fn root_of_unity_order(&self, a: &[Rational]) -> Option<usize> {
        if is_zero_vec(a) {
            return None;
        }
        let n = self.degree;
        let norm = self.mult_matrix_coords(a).determinant().ok()?;
        if norm.abs() != Rational::one() {
            return None;
        }
        let bound = unity_order_bound(n);
        let one = self.unit_coords(0);
        let mut p = a.to_vec();
        for d in 1..=bound {
            if euler_phi(d as u64) <= n as u64 && p == one {
                return Some(d);
            }
            p = self.mul_coords(&p, a);
        }
        None
    }

    // ---- element constructors ----

    pub fn element(self: &Arc<Self>, coords: Vec<Rational>) -> FieldElement {
        assert_eq!(coords.len(), self.degree, "coordinate vector length");
        FieldElement {
            field: Arc::clone(self),
            coords,
        }
    }

    pub fn from_ints(self: &Arc<Self>, coords: &[i64]) -> FieldElement {
        self.element(coords.iter().map(|&x| rat(x)).collect())
    }

    pub fn from_rational(self: &Arc<Self>, x: Rational) -> FieldElement {
        let mut v = vec![Rational::zero(); self.degree];
        v[0] = x;
        self.element(v)
    }

    pub fn one(self: &Arc<Self>) -> FieldElement {
        self.from_rational(Rational::one())
    }

    pub fn zero(self: &Arc<Self>) -> FieldElement {
        self.from_rational(Rational::zero())
    }

    /// The power-basis generator θ.
    pub fn generator(self: &Arc<Self>) -> FieldElement {
        if self.degree == 1 {
            return self.from_rational(-self.min_poly[0].clone());
        }
        let v = self.unit_coords(1);
        self.element(v)
    }

    /// Element with the given integral-basis coordinates.
    pub fn from_integral_coords(self: &Arc<Self>, c: &[Rational]) -> FieldElement {
        let v = self.integral_basis.transpose().mul_vec(c).expect("length n");
        self.element(v)
    }

    pub fn basis(self: &Arc<Self>, i: usize) -> FieldElement {
        self.element(self.basis_element(i))
    }

    /// Trace form on the integral basis, `(i, j) ↦ Tr(b_i · τ(b_j))`.
    pub fn trace_form(&self) -> Result<TraceForm> {
        let tau = self.conjugation.ok_or_else(|| {
            Error::UnsupportedField(format!("field {} has no designated conjugation", self.name))
        })?;
        Ok(TraceForm {
            form: QuadraticForm::new(self.trace_form_gram(tau))?,
            conjugation: tau,
        })
    }

    /// The trace form expressed on the power basis.
    pub fn trace_form_power_basis(&self) -> Result<QuadraticForm> {
        let tf = self.trace_form()?;
        let c = &self.to_integral;
        QuadraticForm::new(c.transpose().mul(tf.form().gram())?.mul(c)?)
    }

    /// Converts a matrix acting on integral-basis coordinates to one acting on power-basis coordinates.
    pub fn integral_to_power_matrix(&self, m: &RatMatrix) -> Result<RatMatrix> {
        let bt = self.integral_basis.transpose();
        bt.mul(m)?.mul(&self.to_integral)
    }

    pub fn power_to_integral_matrix(&self, m: &RatMatrix) -> Result<RatMatrix> {
        let bt = self.integral_basis.transpose();
        self.to_integral.mul(m)?.mul(&bt)
    }

    /// Generator and order of μ_K.
    pub fn roots_of_unity(self: &Arc<Self>) -> Result<RootsOfUnity> {
        let (g, order) = self.unity.clone().ok_or_else(|| {
            Error::UnsupportedField(format!(
                "field {} is neither totally real nor has a designated conjugation",
                self.name
            ))
        })?;
        Ok(RootsOfUnity {
            generator: self.element(g),
            order,
        })
    }

    /// Roots in this field of another monic polynomial, exactly verified.
    pub fn roots_of(self: &Arc<Self>, h: &[Rational]) -> Result<Vec<FieldElement>> {
        let mut roots = self.roots_in_field(h)?;
        roots.sort();
        Ok(roots.into_iter().map(|r| self.element(r)).collect())
    }

    /// Integral elements of norm `d`, enumerated on the norm form.
    /// Only defined where the norm is a positive-definite quadratic form.
    pub fn norm_level_set(self: &Arc<Self>, d: i64) -> Result<Vec<FieldElement>> {
        let q = self.norm_form()?;
        let pts = enumerate_level_set(&q, &rat(d))?;
        Ok(pts
            .into_iter()
            .map(|p| {
                let c: Vec<Rational> = p.into_iter().map(Rational::from_integer).collect();
                self.from_integral_coords(&c)
            })
            .collect())
    }

    /// The norm `N(Σ x_i b_i)` as a quadratic form in integral coordinates.
    pub fn norm_form(&self) -> Result<QuadraticForm> {
        if self.degree != 2 {
            return Err(Error::UnsupportedField(format!(
                "norm is a quadratic form only for quadratic fields (degree {})",
                self.degree
            )));
        }
        let norm = |v: &[Rational]| self.mult_matrix_coords(v).determinant().expect("square");
        let b0 = self.basis_element(0);
        let b1 = self.basis_element(1);
        let n0 = norm(&b0);
        let n1 = norm(&b1);
        let n01 = norm(&crate::exactmath::vec_add(&b0, &b1));
        let off = (n01 - &n0 - &n1) / rat(2);
        let q = QuadraticForm::new(RatMatrix::from_rows(vec![vec![n0, off.clone()], vec![off, n1]])?)?;
        if !q.is_positive_definite() {
            return Err(Error::UnsupportedField("norm form is indefinite".into()));
        }
        Ok(q)
    }
}

/// Power-basis reductions of θ^k for k < 2n − 1.
fn reduced_powers(f: &[Rational], n: usize) -> Vec<Vec<Rational>> {
    let mut out = Vec::with_capacity(2 * n);
    let mut cur = vec![Rational::zero(); n];
    cur[0] = Rational::one();
    for _ in 0..(2 * n).max(2) {
        out.push(cur.clone());
        // multiply by θ: shift up, reduce θ^n = −Σ f_i θ^i
        let top = cur[n - 1].clone();
        let mut next = vec![Rational::zero(); n];
        for i in (1..n).rev() {
            next[i] = cur[i - 1].clone();
        }
        for i in 0..n {
            next[i] -= &top * &f[i];
        }
        cur = next;
    }
    out
}

pub fn euler_phi(mut d: u64) -> u64 {
    let mut result = d;
    let mut p = 2;
    while p * p <= d {
        if d.is_multiple_of(p) {
            while d.is_multiple_of(p) {
                d /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if d > 1 {
        result -= result / d;
    }
    result
}

/// Trace form `Tr(x · τ(y))` on the integral basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceForm {
    form: QuadraticForm,
    conjugation: usize,
}

impl TraceForm {
    pub fn form(&self) -> &QuadraticForm {
        &self.form
    }

    pub fn conjugation(&self) -> usize {
        self.conjugation
    }
}

/// An element of a number field.
#[derive(Clone)]
pub struct FieldElement {
    field: Arc<NumberField>,
    coords: Vec<Rational>,
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        same_field(&self.field, &other.field) && self.coords == other.coords
    }
}

impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coords.hash(state);
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.coords.cmp(&other.coords)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for FieldElement {
    /// Power-basis polynomial in `t`, e.g. `1 - t`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let body = match i {
                0 => fmt_rational(&mag),
                _ => {
                    let var = if i == 1 { "t".to_string() } else { format!("t^{i}") };
                    if mag.is_one() {
                        var
                    } else {
                        format!("{}*{var}", fmt_rational(&mag))
                    }
                }
            };
            terms.push((c.is_negative(), body));
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (neg, body)) in terms.iter().enumerate() {
            match (k, neg) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

pub fn same_field(a: &Arc<NumberField>, b: &Arc<NumberField>) -> bool {
    Arc::ptr_eq(a, b) || (a.name == b.name && a.min_poly == b.min_poly && a.integral_basis == b.integral_basis)
}

impl FieldElement {
    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn integral_coords(&self) -> Vec<Rational> {
        self.field.integral_coords(&self.coords)
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.coords)
    }

    pub fn is_one(&self) -> bool {
        self.coords == self.field.unit_coords(0)
    }

    pub fn is_integral(&self) -> bool {
        self.integral_coords().iter().all(Rational::is_integer)
    }

    fn check(&self, other: &FieldElement) -> Result<()> {
        if same_field(&self.field, &other.field) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn with(&self, coords: Vec<Rational>) -> FieldElement {
        FieldElement {
            field: Arc::clone(&self.field),
            coords,
        }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(self.with(crate::exactmath::vec_add(&self.coords, &other.coords)))
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(self.with(crate::exactmath::vec_sub(&self.coords, &other.coords)))
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(self.with(self.field.mul_coords(&self.coords, &other.coords)))
    }

    pub fn neg(&self) -> FieldElement {
        self.with(crate::exactmath::vec_neg(&self.coords))
    }

    pub fn scale(&self, c: &Rational) -> FieldElement {
        self.with(crate::exactmath::vec_scale(c, &self.coords))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::SingularMatrix);
        }
        let m = self.mult_matrix();
        let x = solve_linear(&m, &self.field.unit_coords(0)).ok_or(Error::SingularMatrix)?;
        Ok(self.with(x))
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.mul(&other.inv()?)
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        let mut acc = self.field.unit_coords(0);
        for _ in 0..e {
            acc = self.field.mul_coords(&acc, &self.coords);
        }
        self.with(acc)
    }

    /// Matrix of `x ↦ self · x` on the power basis.
    pub fn mult_matrix(&self) -> RatMatrix {
        self.field.mult_matrix_coords(&self.coords)
    }

    pub fn trace(&self) -> Rational {
        self.field.trace_coords(&self.coords)
    }

    pub fn norm(&self) -> Rational {
        self.mult_matrix().determinant().expect("square")
    }

    /// Image under the automorphism with index `g`.
    pub fn apply_aut(&self, g: usize) -> FieldElement {
        self.with(self.field.automorphisms[g].mul_vec(&self.coords).expect("length n"))
    }

    /// Image under the designated conjugation.
    pub fn conj(&self) -> Result<FieldElement> {
        let tau = self
            .field
            .conjugation
            .ok_or_else(|| Error::UnsupportedField("no designated conjugation".into()))?;
        Ok(self.apply_aut(tau))
    }

    /// `∏_{d < ord(g)} g^d(self)`, the norm down to the fixed field of `g`.
    pub fn relative_norm(&self, g: usize) -> FieldElement {
        let m = self.field.aut_order(g);
        let mut acc = self.field.one_coords();
        let mut cur = self.coords.clone();
        for _ in 0..m {
            acc = self.field.mul_coords(&acc, &cur);
            cur = self.field.automorphisms[g].mul_vec(&cur).expect("length n");
        }
        let out = self.with(acc);
        debug_assert_eq!(out.apply_aut(g), out);
        out
    }

    /// Smallest `d` with `self^d = 1`, if any.
    pub fn is_root_of_unity(&self) -> Option<usize> {
        self.field.root_of_unity_order(&self.coords)
    }

    pub fn trace_form_value(&self) -> Result<Rational> {
        let tf = self.field.trace_form()?;
        Ok(tf.form().eval(&self.integral_coords()))
    }
}

impl NumberField {
    fn one_coords(&self) -> Vec<Rational> {
        self.unit_coords(0)
    }
}

/// Largest integer `d` with `φ(d) ≤ n` is below this bound (φ(d) ≥ √(d/2)).
pub fn unity_order_bound(n: usize) -> usize {
    2 * n * n + 6
}

/// Convenience: integer vector from BigInt list.
pub fn bigints_to_rationals(v: &[BigInt]) -> Vec<Rational> {
    v.iter().cloned().map(Rational::from_integer).collect()
}
