//! Root systems of rank 1 and 2 realized inside imaginary quadratic fields and
//! `Q`, their certificates, and the rank-4 groups built in `Q(√−3, √−1)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::exactmath::{fmt_rational, fmt_vec, lcm_u64, rat, rat_vec, solve_linear, RatMatrix, Rational};
use crate::group::FiniteGroup;
use crate::lgroup::{aut_label, generate_subgroup, recognize, LOp};
use crate::numberfield::{preset, FieldElement, NumberField};
use crate::rootsystems::{RootSet, RootSystemType};

/// Integral elements of norm `d`.
pub fn norm_level_set(k: &Arc<NumberField>, d: i64) -> Result<Vec<FieldElement>> {
    k.norm_level_set(d)
}

/// `r_a = mult(−a·c(a)⁻¹)∘c`, the reflection in `a` for the trace form.
pub fn reflection_as_lop(k: &Arc<NumberField>, a: &FieldElement) -> Result<LOp> {
    let c = k
        .conjugation_index()
        .ok_or_else(|| Error::UnsupportedField(format!("{} has no designated conjugation", k.name())))?;
    let multiplier = a.neg().div(&a.apply_aut(c))?;
    LOp::new(multiplier, c)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RealizationLabel {
    A1,
    A1Prime,
    A2,
    A2Alt,
    G2,
    TwoA1,
    TwoA1Alt,
    B2,
    BC2,
    TwoA1Prime,
    A1PlusA1Prime,
}

/// Where the roots come from.
enum Source {
    /// Explicit integers in `Q`.
    Integers(&'static [i64]),
    /// Union of norm level sets.
    Levels(&'static [i64]),
    /// `O(1) ∪ {±2}`.
    UnitsAndTwo,
}

impl RealizationLabel {
    pub const ALL: [RealizationLabel; 11] = [
        Self::A1,
        Self::A1Prime,
        Self::A2,
        Self::A2Alt,
        Self::G2,
        Self::TwoA1,
        Self::TwoA1Alt,
        Self::B2,
        Self::BC2,
        Self::TwoA1Prime,
        Self::A1PlusA1Prime,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::A1 => "A1",
            Self::A1Prime => "A1'",
            Self::A2 => "A2",
            Self::A2Alt => "A2-alt",
            Self::G2 => "G2",
            Self::TwoA1 => "2A1",
            Self::TwoA1Alt => "2A1-alt",
            Self::B2 => "B2",
            Self::BC2 => "BC2",
            Self::TwoA1Prime => "2A1'",
            Self::A1PlusA1Prime => "A1+A1'",
        }
    }

    pub fn field_name(self) -> &'static str {
        match self {
            Self::A1 | Self::A1Prime => "rationals",
            Self::A2 | Self::A2Alt | Self::G2 => "eisenstein",
            _ => "gaussian",
        }
    }

    pub fn claimed_type(self) -> RootSystemType {
        let s = match self {
            Self::A2Alt => "A2",
            Self::TwoA1Alt => "2A1",
            other => other.name(),
        };
        s.parse().expect("labels are valid types")
    }

    /// Short description of the root set.
    pub fn construction(self) -> &'static str {
        match self {
            Self::A1 => "{±1}",
            Self::A1Prime => "{±1, ±2}",
            Self::A2 | Self::TwoA1 => "O(1)",
            Self::A2Alt => "O(3)",
            Self::G2 => "O(1) ∪ O(3)",
            Self::TwoA1Alt => "O(2)",
            Self::B2 => "O(1) ∪ O(2)",
            Self::BC2 => "O(1) ∪ O(2) ∪ O(4)",
            Self::TwoA1Prime => "O(1) ∪ O(4)",
            Self::A1PlusA1Prime => "O(1) ∪ {±2}",
        }
    }

    fn source(self) -> Source {
        match self {
            Self::A1 => Source::Integers(&[1, -1]),
            Self::A1Prime => Source::Integers(&[1, -1, 2, -2]),
            Self::A2 | Self::TwoA1 => Source::Levels(&[1]),
            Self::A2Alt => Source::Levels(&[3]),
            Self::G2 => Source::Levels(&[1, 3]),
            Self::TwoA1Alt => Source::Levels(&[2]),
            Self::B2 => Source::Levels(&[1, 2]),
            Self::BC2 => Source::Levels(&[1, 2, 4]),
            Self::TwoA1Prime => Source::Levels(&[1, 4]),
            Self::A1PlusA1Prime => Source::UnitsAndTwo,
        }
    }

    /// The base printed alongside the construction, in power coordinates.
    fn reference_base(self) -> Option<Vec<Vec<i64>>> {
        Some(match self {
            Self::A1 | Self::A1Prime => vec![vec![1]],
            // 1, ω² = ω − 1
            Self::A2 => vec![vec![1, 0], vec![-1, 1]],
            // (1 + ω)·1, (1 + ω)·ω²
            Self::A2Alt => vec![vec![1, 1], vec![-2, 1]],
            Self::G2 => vec![vec![1, 0], vec![-2, 1]],
            Self::TwoA1 => vec![vec![1, 0], vec![0, 1]],
            Self::TwoA1Alt => vec![vec![1, 1], vec![-1, 1]],
            // 1, (1 + i)·i
            Self::B2 | Self::BC2 => vec![vec![1, 0], vec![-1, 1]],
            Self::TwoA1Prime | Self::A1PlusA1Prime => return None,
        })
    }
}

impl fmt::Display for RealizationLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RealizationLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().replace('′', "'").replace('∔', "+").replace(' ', "");
        Self::ALL
            .into_iter()
            .find(|l| l.name().eq_ignore_ascii_case(&norm))
            .ok_or_else(|| {
                let names: Vec<&str> = Self::ALL.iter().map(|l| l.name()).collect();
                Error::IllegalType(format!(
                    "no realization for {s:?}; realizations exist only in rank 1 and 2: {}",
                    names.join(", ")
                ))
            })
    }
}

/// A reflection `r_a` with its decomposition in `L(K)`.
#[derive(Clone, Debug)]
pub struct ReflectionWitness {
    pub root: FieldElement,
    pub lop: LOp,
    /// `r_a` agrees with the form reflection `s_a`.
    pub matches_form_reflection: bool,
    /// Recognizing the matrix of `s_a` gives back `r_a`.
    pub recognized: bool,
    pub order: u64,
}

/// Result of generating `W(R)` and testing every element for membership in `L(K)`.
#[derive(Clone, Debug)]
pub struct WeylCheck {
    pub order: u64,
    pub all_in_l: bool,
    /// Order of the subgroup of `L(K)` generated by the `r_a`.
    pub lop_group_order: u64,
    /// Each `r_a` maps every level set `O(d)` used in the construction onto itself.
    pub levels_preserved: bool,
}

#[derive(Clone, Debug)]
pub struct RealizationCertificate {
    pub label: RealizationLabel,
    pub field: Arc<NumberField>,
    pub construction: &'static str,
    pub claimed_type: RootSystemType,
    pub verified_type: RootSystemType,
    pub reduced: bool,
    /// Sorted by coordinates.
    pub roots: Vec<FieldElement>,
    pub norms: Vec<Rational>,
    /// Gram matrix of the trace form on the integral basis.
    pub form: RatMatrix,
    pub base: Vec<FieldElement>,
    pub reference_base: Option<Vec<FieldElement>>,
    pub reflections: Vec<ReflectionWitness>,
    pub weyl: Option<WeylCheck>,
}

impl RealizationCertificate {
    pub fn short_roots(&self) -> usize {
        let min = self.norms.iter().map(Signed::abs).min();
        self.norms.iter().filter(|n| Some(n.abs()) == min).count()
    }

    /// Whether every check recorded in the certificate passed.
    pub fn is_valid(&self) -> bool {
        self.claimed_type == self.verified_type
            && self.roots.iter().all(FieldElement::is_integral)
            && self
                .reflections
                .iter()
                .all(|w| w.matches_form_reflection && w.recognized && w.order == 2)
            && self.weyl.as_ref().is_none_or(|w| w.all_in_l && w.levels_preserved && w.lop_group_order == w.order)
    }

    /// Line-oriented `key: value` rendering.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |k: &str, v: String| {
            out.push_str(k);
            out.push_str(": ");
            out.push_str(&v);
            out.push('\n');
        };
        let coords = |a: &FieldElement| fmt_vec(a.coords());
        line("realization", self.label.name().into());
        line("field", self.field.name().into());
        line("min_poly", fmt_vec(self.field.min_poly()));
        line("construction", self.construction.into());
        line("claimed_type", self.claimed_type.to_string());
        line("verified_type", self.verified_type.to_string());
        line("reduced", self.reduced.to_string());
        line("form", fmt_vec(self.form.entries()));
        line("root_count", self.roots.len().to_string());
        line("short_roots", self.short_roots().to_string());
        for (a, n) in self.roots.iter().zip(&self.norms) {
            line("root", format!("{} norm {}", coords(a), fmt_rational(n)));
        }
        line("base", self.base.iter().map(coords).collect::<Vec<_>>().join("; "));
        if let Some(r) = &self.reference_base {
            line("reference_base", r.iter().map(coords).collect::<Vec<_>>().join("; "));
        }
        for w in &self.reflections {
            line(
                "reflection",
                format!(
                    "root {} mult {} aut {} order {} form_match {} recognized {}",
                    coords(&w.root),
                    coords(w.lop.multiplier()),
                    aut_label(&self.field, w.lop.aut_index()),
                    w.order,
                    w.matches_form_reflection,
                    w.recognized
                ),
            );
        }
        if let Some(w) = &self.weyl {
            line("weyl_order", w.order.to_string());
            line("weyl_lop_order", w.lop_group_order.to_string());
            line("weyl_in_L", w.all_in_l.to_string());
            line("levels_preserved", w.levels_preserved.to_string());
        }
        line("valid", self.is_valid().to_string());
        out
    }
}

fn collect_roots(label: RealizationLabel, k: &Arc<NumberField>) -> Result<Vec<FieldElement>> {
    let mut roots = match label.source() {
        Source::Integers(xs) => xs.iter().map(|&x| k.from_ints(&[x])).collect(),
        Source::Levels(ds) => {
            let mut v = Vec::new();
            for &d in ds {
                v.extend(norm_level_set(k, d)?);
            }
            v
        }
        Source::UnitsAndTwo => {
            let mut v = norm_level_set(k, 1)?;
            v.push(k.from_ints(&[2, 0]));
            v.push(k.from_ints(&[-2, 0]));
            v
        }
    };
    roots.sort();
    Ok(roots)
}

/// Builds and checks a realization. With `certify`, the Weyl group is
/// generated and each of its elements is decomposed in `L(K)`.
pub fn build_realization(label: RealizationLabel, certify: bool) -> Result<RealizationCertificate> {
    let k = preset(label.field_name())?;
    let roots = collect_roots(label, &k)?;
    if let Some(a) = roots.iter().find(|a| !a.is_integral()) {
        return Err(Error::Certification(format!("root {a} is not integral")));
    }
    let trace_form = k.trace_form()?;
    let form = k.trace_form_power_basis()?;
    let set = RootSet::new(form.clone(), roots.iter().map(|a| a.coords().to_vec()).collect())?;
    let verification = set.verify().map_err(|e| Error::Certification(e.to_string()))?;
    let verified_type = set.classify()?;
    let claimed_type = label.claimed_type();
    if verified_type != claimed_type {
        return Err(Error::Certification(format!("expected {claimed_type}, found {verified_type}")));
    }
    let base: Vec<FieldElement> = set.base().into_iter().map(|v| k.element(v)).collect();
    let reference_base = match label.reference_base() {
        Some(b) => {
            let b: Vec<FieldElement> = b.iter().map(|v| k.element(rat_vec(v))).collect();
            if !is_base(&set, &b) {
                return Err(Error::Certification("reference base is not a base".into()));
            }
            Some(b)
        }
        None => None,
    };

    let mut reflections = Vec::new();
    for a in &roots {
        let lop = reflection_as_lop(&k, a)?;
        let s = set.reflection_matrix(a.coords())?;
        let recognized = recognize(&s, &k)?.as_ref() == Some(&lop);
        reflections.push(ReflectionWitness {
            root: a.clone(),
            matches_form_reflection: lop.matrix_of() == s,
            recognized,
            order: lop.finite_order().unwrap_or(0),
            lop,
        });
    }

    let weyl = if certify { Some(check_weyl(&k, &set, &roots, label)?) } else { None };
    let cert = RealizationCertificate {
        label,
        field: Arc::clone(&k),
        construction: label.construction(),
        claimed_type,
        verified_type,
        reduced: verification.reduced,
        norms: roots.iter().map(FieldElement::norm).collect(),
        roots,
        form: trace_form.form().gram().clone(),
        base,
        reference_base,
        reflections,
        weyl,
    };
    if !cert.is_valid() {
        return Err(Error::Certification(format!("certificate for {label} failed its checks")));
    }
    Ok(cert)
}

fn check_weyl(k: &Arc<NumberField>, set: &RootSet, roots: &[FieldElement], label: RealizationLabel) -> Result<WeylCheck> {
    let cap = crate::group_cap();
    let w = set.weyl_group(cap)?;
    let mut all_in_l = true;
    for m in w.elements() {
        match recognize(m, k)? {
            Some(u) if u.finite_order().is_some() => {}
            _ => all_in_l = false,
        }
    }
    let gens: Vec<LOp> = roots.iter().map(|a| reflection_as_lop(k, a)).collect::<Result<_>>()?;
    let lop_group = generate_subgroup(k, &gens, cap)?;
    let levels: Vec<i64> = match label.source() {
        Source::Levels(ds) => ds.to_vec(),
        Source::UnitsAndTwo => vec![1, 4],
        Source::Integers(_) => Vec::new(),
    };
    let mut levels_preserved = true;
    for &d in &levels {
        let level = norm_level_set(k, d)?;
        for r in &gens {
            let mut image = apply_all(r, &level)?;
            image.sort();
            levels_preserved &= image == level;
        }
    }
    Ok(WeylCheck { order: w.order(), all_in_l, lop_group_order: lop_group.order(), levels_preserved })
}

/// Whether `b` is a base of `set`: linearly independent, spanning, and every
/// root an integer combination with coefficients of one sign.
pub fn is_base(set: &RootSet, b: &[FieldElement]) -> bool {
    let cols: Vec<Vec<Rational>> = b.iter().map(|x| x.coords().to_vec()).collect();
    let Ok(m) = RatMatrix::from_columns(&cols) else { return false };
    if m.rank() != b.len() || b.len() != set.rank() {
        return false;
    }
    set.roots().iter().all(|r| match solve_linear(&m, r) {
        Some(c) => {
            c.iter().all(|x| x.is_integer())
                && (c.iter().all(|x| !x.is_negative()) || c.iter().all(|x| !x.is_positive()))
        }
        None => false,
    })
}

/// The two rank-4 types realized as Weyl groups inside `L(Q(√−3, √−1))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EmbeddingPair {
    A2PlusB2,
    A2Plus2A1,
}

impl EmbeddingPair {
    pub const ALL: [EmbeddingPair; 2] = [Self::A2PlusB2, Self::A2Plus2A1];

    pub fn name(self) -> &'static str {
        match self {
            Self::A2PlusB2 => "A2+B2",
            Self::A2Plus2A1 => "2A1+A2",
        }
    }

    pub fn root_type(self) -> RootSystemType {
        self.name().parse().expect("valid type")
    }

    fn gaussian_factor(self) -> RealizationLabel {
        match self {
            Self::A2PlusB2 => RealizationLabel::B2,
            Self::A2Plus2A1 => RealizationLabel::TwoA1,
        }
    }
}

impl FromStr for EmbeddingPair {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t: RootSystemType = s.parse()?;
        Self::ALL
            .into_iter()
            .find(|p| p.root_type() == t)
            .ok_or_else(|| Error::IllegalType(format!("{s}: expected A2+B2 or 2A1+A2")))
    }
}

/// `L(Q(√−3)) × L(Q(√−1)) → L(K)` for `K = Q(ζ₁₂)`, with `ω ↦ ζ²` and `i ↦ ζ³`.
/// Its kernel is `{(mult(q), mult(q⁻¹)) : q ∈ Q*}`.
pub struct TensorMap {
    target: Arc<NumberField>,
    left: Arc<NumberField>,
    right: Arc<NumberField>,
    /// `aut_table[g][h]`: the automorphism of `K` restricting to `g` and `h`.
    aut_table: Vec<Vec<usize>>,
}

impl TensorMap {
    pub fn new() -> Result<Self> {
        let target = preset("biquadratic")?;
        let left = preset("eisenstein")?;
        let right = preset("gaussian")?;
        let mut map = Self { target, left, right, aut_table: Vec::new() };
        let mut table = vec![vec![usize::MAX; map.right.aut_count()]; map.left.aut_count()];
        for (g, row) in table.iter_mut().enumerate() {
            for (h, slot) in row.iter_mut().enumerate() {
                let want_w = map.embed_left(&map.left.generator().apply_aut(g));
                let want_i = map.embed_right(&map.right.generator().apply_aut(h));
                *slot = (0..map.target.aut_count())
                    .find(|&s| {
                        map.embed_left(&map.left.generator()).apply_aut(s) == want_w
                            && map.embed_right(&map.right.generator()).apply_aut(s) == want_i
                    })
                    .ok_or_else(|| Error::Certification("automorphisms do not extend".into()))?;
            }
        }
        map.aut_table = table;
        Ok(map)
    }

    pub fn target(&self) -> &Arc<NumberField> {
        &self.target
    }

    /// `x + yω ↦ x + yζ²`.
    pub fn embed_left(&self, a: &FieldElement) -> FieldElement {
        let c = a.coords();
        self.target.element(vec![c[0].clone(), rat(0), c[1].clone(), rat(0)])
    }

    /// `x + yi ↦ x + yζ³`.
    pub fn embed_right(&self, b: &FieldElement) -> FieldElement {
        let c = b.coords();
        self.target.element(vec![c[0].clone(), rat(0), rat(0), c[1].clone()])
    }

    pub fn apply(&self, u: &LOp, v: &LOp) -> Result<LOp> {
        let a = self.embed_left(u.multiplier()).mul(&self.embed_right(v.multiplier()))?;
        LOp::new(a, self.aut_table[u.aut_index()][v.aut_index()])
    }

    /// Automorphism index of `K` for `ζ ↦ ζ^k`, used in reports.
    pub fn exponent_of_aut(&self, s: usize) -> u64 {
        let z = self.target.generator();
        let image = z.apply_aut(s);
        (1..12).find(|&k| z.pow(k) == image).expect("ζ ↦ ζ^k")
    }

    pub fn aut_table(&self) -> &[Vec<usize>] {
        &self.aut_table
    }
}

#[derive(Clone, Debug)]
pub struct BiquadraticEmbedding {
    pub pair: EmbeddingPair,
    pub group: FiniteGroup<LOp>,
    pub left_order: u64,
    pub right_order: u64,
    pub order_multiset: BTreeMap<u64, u64>,
    /// Element orders of the abstract direct product of the two factors.
    pub product_multiset: BTreeMap<u64, u64>,
}

impl BiquadraticEmbedding {
    pub fn is_embedding(&self) -> bool {
        self.group.order() == self.left_order * self.right_order && self.order_multiset == self.product_multiset
    }
}

fn factor_group(label: RealizationLabel) -> Result<(Vec<LOp>, FiniteGroup<LOp>)> {
    let k = preset(label.field_name())?;
    let gens: Vec<LOp> = collect_roots(label, &k)?
        .iter()
        .map(|a| reflection_as_lop(&k, a))
        .collect::<Result<_>>()?;
    let group = generate_subgroup(&k, &gens, crate::group_cap())?;
    Ok((gens, group))
}

/// Maps `W(A₂) ⊂ L(Q(√−3))` and `W(B₂)` or `W(2A₁) ⊂ L(Q(√−1))` into `L(K)` and
/// generates the image.
pub fn biquadratic_embedding(pair: EmbeddingPair) -> Result<BiquadraticEmbedding> {
    let map = TensorMap::new()?;
    let (left_gens, left) = factor_group(RealizationLabel::A2)?;
    let (right_gens, right) = factor_group(pair.gaussian_factor())?;
    let id_left = LOp::identity(&map.left);
    let id_right = LOp::identity(&map.right);
    let mut gens = Vec::new();
    for u in &left_gens {
        gens.push(map.apply(u, &id_right)?);
    }
    for v in &right_gens {
        gens.push(map.apply(&id_left, v)?);
    }
    let group = generate_subgroup(map.target(), &gens, crate::group_cap())?;
    let mut product_multiset = BTreeMap::new();
    for (&a, &na) in &left.order_multiset() {
        for (&b, &nb) in &right.order_multiset() {
            *product_multiset.entry(lcm_u64(a, b)).or_insert(0) += na * nb;
        }
    }
    let embedding = BiquadraticEmbedding {
        pair,
        order_multiset: group.order_multiset(),
        group,
        left_order: left.order(),
        right_order: right.order(),
        product_multiset,
    };
    if embedding.group.order() != embedding.left_order * embedding.right_order {
        return Err(Error::Certification(format!(
            "{}: image has order {}, expected {}",
            pair.name(),
            embedding.group.order(),
            embedding.left_order * embedding.right_order
        )));
    }
    Ok(embedding)
}

/// An element of order 3 acting on `K` without nonzero fixed vectors.
#[derive(Clone, Debug)]
pub struct Obstruction {
    pub pair: EmbeddingPair,
    pub z: LOp,
    pub z_order: u64,
    /// `ψ(z)`; 0 is the identity automorphism.
    pub psi: usize,
    pub aut_count: usize,
    pub fixed_dim: usize,
    /// The same check for an order-3 element of `W(A₂)` on `Q(√−3)` alone.
    pub control_fixed_dim: usize,
}

impl Obstruction {
    pub fn holds(&self) -> bool {
        self.z_order == 3 && self.psi == 0 && self.fixed_dim == 0 && self.control_fixed_dim == 0
    }
}

pub fn fixed_space_obstruction(pair: EmbeddingPair) -> Result<Obstruction> {
    let embedding = biquadratic_embedding(pair)?;
    let z = embedding
        .group
        .elements()
        .iter()
        .enumerate()
        .find(|&(i, _)| embedding.group.element_order(i) == 3)
        .map(|(_, z)| z.clone())
        .ok_or_else(|| Error::Certification("no element of order 3".into()))?;
    let (_, w_a2) = factor_group(RealizationLabel::A2)?;
    let control = w_a2
        .elements()
        .iter()
        .enumerate()
        .find(|&(i, _)| w_a2.element_order(i) == 3)
        .map(|(_, x)| x.clone())
        .ok_or_else(|| Error::Certification("W(A2) has no element of order 3".into()))?;
    Ok(Obstruction {
        pair,
        z_order: z.finite_order().unwrap_or(0),
        psi: z.psi(),
        aut_count: z.field().aut_count(),
        fixed_dim: z.fixed_space().len(),
        control_fixed_dim: control.fixed_space().len(),
        z,
    })
}

/// `r` applied to each element.
pub fn apply_all(r: &LOp, xs: &[FieldElement]) -> Result<Vec<FieldElement>> {
    xs.iter()
        .map(|x| r.multiplier().mul(&x.apply_aut(r.aut_index())))
        .collect()
}
