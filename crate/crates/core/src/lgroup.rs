//! The group `L(K)` of Q-linear maps `x ↦ a·g(x)` with `a ∈ K*`, `g ∈ Aut(K)`.
//!
//! Elements are stored as the pair `(a, g)`; matrices are derived views acting
//! on power-basis coordinate columns.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactmath::{RatMatrix, Rational};
use crate::group::{FiniteGroup, GroupElement};
use crate::numberfield::{same_field, FieldElement, NumberField};

#[derive(Clone)]
pub struct LOp {
    multiplier: FieldElement,
    aut: usize,
}

impl PartialEq for LOp {
    fn eq(&self, other: &Self) -> bool {
        self.aut == other.aut && self.multiplier == other.multiplier
    }
}

impl Eq for LOp {}

impl Hash for LOp {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.multiplier.hash(state);
        self.aut.hash(state);
    }
}

impl fmt::Debug for LOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.multiplier, aut_label(self.field(), self.aut))
    }
}

/// `id`, `c` for the designated conjugation, `g<i>` otherwise.
pub fn aut_label(k: &NumberField, g: usize) -> String {
    if g == 0 {
        "id".into()
    } else if k.conjugation_index() == Some(g) {
        "c".into()
    } else {
        format!("g{g}")
    }
}

impl LOp {
    pub fn new(multiplier: FieldElement, aut: usize) -> Result<Self> {
        if multiplier.is_zero() {
            return Err(Error::DimensionMismatch("multiplier must be nonzero".into()));
        }
        if aut >= multiplier.field().aut_count() {
            return Err(Error::BadAutomorphism(format!("no automorphism with index {aut}")));
        }
        Ok(Self { multiplier, aut })
    }

    pub fn identity(k: &Arc<NumberField>) -> Self {
        Self { multiplier: k.one(), aut: 0 }
    }

    /// `mult(a)`.
    pub fn mult(a: FieldElement) -> Result<Self> {
        Self::new(a, 0)
    }

    /// The automorphism `g` itself.
    pub fn aut(k: &Arc<NumberField>, g: usize) -> Result<Self> {
        Self::new(k.one(), g)
    }

    pub fn field(&self) -> &Arc<NumberField> {
        self.multiplier.field()
    }

    pub fn multiplier(&self) -> &FieldElement {
        &self.multiplier
    }

    pub fn aut_index(&self) -> usize {
        self.aut
    }

    /// Projection `L(K) → Aut(K)`.
    pub fn psi(&self) -> usize {
        self.aut
    }

    pub fn is_identity(&self) -> bool {
        self.aut == 0 && self.multiplier.is_one()
    }

    /// `(a₁, g₁)(a₂, g₂) = (a₁·g₁(a₂), g₁g₂)`.
    pub fn compose(&self, other: &LOp) -> Result<LOp> {
        if !same_field(self.field(), other.field()) {
            return Err(Error::FieldMismatch);
        }
        let a = self.multiplier.mul(&other.multiplier.apply_aut(self.aut))?;
        Ok(LOp { multiplier: a, aut: self.field().aut_compose(self.aut, other.aut) })
    }

    /// `(a, g)⁻¹ = (g⁻¹(a⁻¹), g⁻¹)`.
    pub fn inverse(&self) -> LOp {
        let g_inv = self.field().aut_inverse(self.aut);
        let a_inv = self.multiplier.inv().expect("multiplier is nonzero");
        LOp { multiplier: a_inv.apply_aut(g_inv), aut: g_inv }
    }

    pub fn pow(&self, e: u64) -> LOp {
        let mut acc = LOp::identity(self.field());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.op(&base);
            }
            base = base.op(&base);
            e >>= 1;
        }
        acc
    }

    /// Order of the element, or `None` when it is infinite. The m-th power of
    /// `(a, g)` with `m = ord(g)` is multiplication by the relative norm of
    /// `a`, so the order is finite exactly when that norm is a root of unity;
    /// the order itself is found by iterating.
    pub fn finite_order(&self) -> Option<u64> {
        let m = self.field().aut_order(self.aut) as u64;
        let r = self.multiplier.relative_norm(self.aut).is_root_of_unity()? as u64;
        let mut cur = self.clone();
        for k in 1..=m * r {
            if cur.is_identity() {
                return Some(k);
            }
            cur = cur.op(self);
        }
        unreachable!("(a, g)^(m·r) is the identity")
    }

    pub fn matrix_of(&self) -> RatMatrix {
        let k = self.field();
        self.multiplier
            .mult_matrix()
            .mul(&k.automorphisms()[self.aut])
            .expect("square matrices of the field degree")
    }

    /// Basis of the subspace of K fixed by the map, in power coordinates.
    pub fn fixed_space(&self) -> Vec<Vec<Rational>> {
        let n = self.field().degree();
        self.matrix_of().sub(&RatMatrix::identity(n)).expect("same size").kernel()
    }

    /// Whether `Mᵀ G M = G` for the power-basis trace form `G`.
    pub fn preserves_trace_form(&self) -> Result<bool> {
        let g = self.field().trace_form_power_basis()?;
        let m = self.matrix_of();
        Ok(m.transpose().mul(g.gram())?.mul(&m)? == *g.gram())
    }
}

impl GroupElement for LOp {
    fn op(&self, other: &Self) -> Self {
        self.compose(other).expect("group elements share a field")
    }

    fn identity_like(&self) -> Self {
        LOp::identity(self.field())
    }
}

/// Decomposes a matrix (power basis) as `mult(a)∘g` if possible.
pub fn recognize(m: &RatMatrix, k: &Arc<NumberField>) -> Result<Option<LOp>> {
    let n = k.degree();
    if m.rows() != n || m.cols() != n {
        return Err(Error::DimensionMismatch(format!(
            "expected a {n}x{n} matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    if m.determinant()?.is_zero() {
        return Err(Error::SingularMatrix);
    }
    // the image of 1 is a·g(1) = a
    let a = k.element(m.column(0));
    for g in 0..k.aut_count() {
        let candidate = LOp::new(a.clone(), g)?;
        if candidate.matrix_of() == *m {
            return Ok(Some(candidate));
        }
    }
    Ok(None)
}

/// Closure of finite-order generators inside `L(K)`.
pub fn generate_subgroup(k: &Arc<NumberField>, gens: &[LOp], cap: usize) -> Result<FiniteGroup<LOp>> {
    for g in gens {
        if !same_field(g.field(), k) {
            return Err(Error::FieldMismatch);
        }
        if g.finite_order().is_none() {
            return Err(Error::InfiniteOrder(g.to_string()));
        }
    }
    FiniteGroup::generate_with_identity(LOp::identity(k), gens, cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, ratio};
    use crate::numberfield::preset;

    #[test]
    fn eisenstein_reflection_squares_to_identity() {
        let k = preset("eisenstein").unwrap();
        let r1 = LOp::new(k.from_ints(&[-1, 0]), 1).unwrap();
        assert!(r1.compose(&r1).unwrap().is_identity());
        assert_eq!(r1.finite_order(), Some(2));
    }

    #[test]
    fn conjugation_of_multiplication() {
        let k = preset("eisenstein").unwrap();
        let a = k.from_ints(&[2, 3]);
        let g = LOp::aut(&k, 1).unwrap();
        let conj = g.compose(&LOp::mult(a.clone()).unwrap()).unwrap().compose(&g.inverse()).unwrap();
        assert_eq!(conj, LOp::mult(a.apply_aut(1)).unwrap());
    }

    #[test]
    fn inverses() {
        let k = preset("sqrt2").unwrap();
        assert!(LOp::identity(&k).inverse().is_identity());
        let two = LOp::mult(k.from_ints(&[2, 0])).unwrap();
        assert_eq!(two.inverse(), LOp::mult(k.from_rational(ratio(1, 2))).unwrap());
        let u = LOp::new(k.from_ints(&[1, 1]), 1).unwrap();
        assert_eq!(u.inverse(), LOp::new(k.from_ints(&[-1, -1]), 1).unwrap());
        assert_eq!(u.inverse().matrix_of(), u.matrix_of().inverse().unwrap());
    }

    #[test]
    fn operator_orders_examples() {
        let k = preset("sqrt2").unwrap();
        let u = LOp::new(k.from_ints(&[1, 1]), 1).unwrap();
        assert_eq!(u.finite_order(), Some(4));
        assert_eq!(u.multiplier().is_root_of_unity(), None);
        let g = preset("gaussian").unwrap();
        let v = LOp::new(g.element(vec![ratio(3, 5), ratio(4, 5)]), 1).unwrap();
        assert_eq!(v.finite_order(), Some(2));
        assert_eq!(LOp::mult(k.from_ints(&[2, 0])).unwrap().finite_order(), None);
    }

    #[test]
    fn recognition() {
        let k = preset("eisenstein").unwrap();
        let c = RatMatrix::from_int_rows(&[&[1, 1], &[0, -1]]);
        let u = recognize(&c, &k).unwrap().unwrap();
        assert!(u.multiplier().is_one());
        assert_eq!(u.aut_index(), 1);
        assert_eq!(recognize(&RatMatrix::identity(2), &k).unwrap(), Some(LOp::identity(&k)));
        let d = RatMatrix::from_int_rows(&[&[1, 0], &[0, 2]]);
        assert_eq!(recognize(&d, &k).unwrap(), None);
        assert!(matches!(recognize(&RatMatrix::zeros(2, 2), &k), Err(Error::SingularMatrix)));
        assert!(recognize(&RatMatrix::identity(3), &k).is_err());
    }

    #[test]
    fn fixed_spaces() {
        let k = preset("eisenstein").unwrap();
        assert_eq!(LOp::identity(&k).fixed_space().len(), 2);
        assert!(LOp::mult(k.generator()).unwrap().fixed_space().is_empty());
        let fixed = LOp::aut(&k, 1).unwrap().fixed_space();
        assert_eq!(fixed.len(), 1);
        assert_eq!(fixed[0][1], rat(0));
    }

    #[test]
    fn subgroups() {
        let k = preset("eisenstein").unwrap();
        let minus = LOp::mult(k.from_ints(&[-1, 0])).unwrap();
        assert_eq!(generate_subgroup(&k, &[minus], 100).unwrap().order(), 2);
        let two = LOp::mult(k.from_ints(&[2, 0])).unwrap();
        assert!(matches!(generate_subgroup(&k, &[two], 100), Err(Error::InfiniteOrder(_))));
    }

    #[test]
    fn finite_order_maps_preserve_trace_form() {
        let k = preset("gaussian").unwrap();
        let v = LOp::new(k.element(vec![ratio(3, 5), ratio(4, 5)]), 1).unwrap();
        assert!(v.preserves_trace_form().unwrap());
        let two = LOp::mult(k.from_ints(&[2, 0])).unwrap();
        assert!(!two.preserves_trace_form().unwrap());
    }

    #[test]
    fn display() {
        let k = preset("eisenstein").unwrap();
        assert_eq!(LOp::identity(&k).to_string(), "(1, id)");
        assert_eq!(LOp::new(k.from_ints(&[-1, 0]), 1).unwrap().to_string(), "(-1, c)");
    }
}
