use super::*;
use crate::exactmath::{rat_vec, ratio};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn set(gram: &[&[i64]], roots: &[&[i64]]) -> RootSet {
    let form = QuadraticForm::new(RatMatrix::from_int_rows(gram)).unwrap();
    RootSet::new(form, roots.iter().map(|r| rat_vec(r)).collect()).unwrap()
}

fn with_negatives(roots: &[&[i64]]) -> Vec<Vec<i64>> {
    roots.iter().flat_map(|r| [r.to_vec(), r.iter().map(|x| -x).collect()]).collect()
}

fn set_pm(gram: &[&[i64]], roots: &[&[i64]]) -> RootSet {
    let all = with_negatives(roots);
    let refs: Vec<&[i64]> = all.iter().map(Vec::as_slice).collect();
    set(gram, &refs)
}

/// Trace form of Q(√−3) on the basis {1, ω}.
const EIS: &[&[i64]] = &[&[2, 1], &[1, 2]];
/// Trace form of Q(i) on the basis {1, i}.
const GAU: &[&[i64]] = &[&[2, 0], &[0, 2]];

fn t(s: &str) -> RootSystemType {
    s.parse().unwrap()
}

#[test]
fn eisenstein_units_form_a2() {
    // ±1, ±ω, ±ω² with ω² = ω − 1
    let r = set_pm(EIS, &[&[1, 0], &[0, 1], &[-1, 1]]);
    let v = r.verify().unwrap();
    assert!(v.reduced);
    assert_eq!((v.rank, v.root_count), (2, 6));
    assert_eq!(r.base().len(), 2);
    assert_eq!(r.classify().unwrap(), t("A2"));
}

#[test]
fn eisenstein_g2() {
    // O(1) ∪ O(3), O(3) = (1 + ω)·O(1)
    let r = set_pm(EIS, &[&[1, 0], &[0, 1], &[-1, 1], &[1, 1], &[-1, 2], &[-2, 1]]);
    r.verify().unwrap();
    assert_eq!(r.classify().unwrap(), t("G2"));
    let base = r.base();
    let mut lengths: Vec<Rational> = base.iter().map(|b| r.form().eval(b)).collect();
    lengths.sort();
    assert_eq!(&lengths[1] / &lengths[0], rat(3));
}

#[test]
fn gaussian_systems() {
    let units: &[&[i64]] = &[&[1, 0], &[0, 1]];
    let two: &[&[i64]] = &[&[1, 1], &[1, -1]];
    let four: &[&[i64]] = &[&[2, 0], &[0, 2]];
    let cat = |parts: &[&[&[i64]]]| set_pm(GAU, &parts.concat());

    assert_eq!(cat(&[units]).classify().unwrap(), t("2A1"));
    assert_eq!(cat(&[units, two]).classify().unwrap(), t("B2"));
    let bc2 = cat(&[units, two, four]);
    assert!(!bc2.verify().unwrap().reduced);
    assert_eq!(bc2.classify().unwrap(), t("BC2"));
    assert_eq!(bc2.roots().len(), 12);
    assert_eq!(cat(&[units, four]).classify().unwrap(), t("2A1'"));
    let mixed = cat(&[units, &[&[2, 0]]]);
    mixed.verify().unwrap();
    assert_eq!(mixed.classify().unwrap(), t("A1+A1'"));
}

#[test]
fn axiom_failures() {
    let bad = set(&[&[1]], &[&[1], &[-1], &[3], &[-3]]);
    assert!(matches!(bad.verify(), Err(Error::AxiomViolation(_))));
    // A2-shaped vectors with the standard form are not closed under reflections
    let plane = set_pm(&[&[1, 0], &[0, 1]], &[&[1, 0], &[0, 1], &[1, 1]]);
    assert!(matches!(plane.verify(), Err(Error::AxiomViolation(_))));
    let one_sided = set(&[&[1]], &[&[1]]);
    assert!(one_sided.verify().is_err());
    let zero = set(&[&[1]], &[&[0]]);
    assert!(zero.verify().is_err());
}

#[test]
fn rank_one_base() {
    let r = set_pm(&[&[1]], &[&[1]]);
    assert_eq!(r.base(), vec![rat_vec(&[1])]);
}

#[test]
fn reflections() {
    let r = set_pm(EIS, &[&[1, 0], &[0, 1], &[-1, 1]]);
    for a in r.roots() {
        let s = r.reflection_matrix(a).unwrap();
        assert_eq!(s.mul_vec(a).unwrap(), vec_neg(a));
        assert!(s.mul(&s).unwrap().is_identity());
        assert!(r.preserves_form(&s));
        assert!(r.permuted_by(&s));
    }
    assert!(r.reflection_matrix(&rat_vec(&[5, 5])).is_err());
}

#[test]
fn weyl_groups_of_small_systems() {
    let a2 = set_pm(EIS, &[&[1, 0], &[0, 1], &[-1, 1]]);
    let w = a2.weyl_group(100).unwrap();
    assert_eq!(w.order(), 6);
    assert_eq!(w.max_element_order(), 3);
    let b2 = standard_root_set(&t("B2")).unwrap();
    assert_eq!(b2.weyl_group(100).unwrap().exponent(), 4);
    let bc2 = standard_root_set(&t("BC2")).unwrap();
    assert!(bc2.weyl_group(100).unwrap().same_elements(&b2.weyl_group(100).unwrap()));
    let sum = standard_root_set(&t("A1+A2")).unwrap();
    assert_eq!(sum.weyl_group(100).unwrap().order(), 12);
}

#[test]
fn f4_weyl_group_acts_on_roots() {
    let f4 = standard_root_set(&t("F4")).unwrap();
    let w = f4.weyl_group(10_000).unwrap();
    assert_eq!(w.order(), 1152);
    assert!(w.elements().iter().all(|m| f4.preserves_form(m) && f4.permuted_by(m)));
}

#[test]
fn weyl_cap_is_enforced() {
    let e6 = standard_root_set(&t("E6")).unwrap();
    assert!(matches!(e6.weyl_group(1000), Err(Error::CapExceeded { cap: 1000 })));
}

fn catalogue_labels() -> Vec<String> {
    let mut v = Vec::new();
    for l in 1..=8 {
        v.push(format!("A{l}"));
        v.push(format!("BC{l}"));
    }
    for l in 2..=8 {
        v.push(format!("B{l}"));
    }
    for l in 3..=8 {
        v.push(format!("C{l}"));
    }
    for l in 4..=8 {
        v.push(format!("D{l}"));
    }
    v.extend(["E6", "E7", "E8", "F4", "G2"].map(String::from));
    v
}

#[test]
fn catalogue_round_trip() {
    for label in catalogue_labels() {
        let ty = t(&label);
        let r = standard_root_set(&ty).unwrap();
        r.verify().unwrap();
        assert_eq!(r.classify().unwrap(), ty, "{label}");
    }
    for label in ["A1+A2", "2A1+B3", "A1+A1'", "A2+B2", "C3+G2", "D4+F4"] {
        let ty = t(label);
        assert_eq!(standard_root_set(&ty).unwrap().classify().unwrap(), ty, "{label}");
    }
}

#[test]
fn decompose_orders_simple_roots() {
    let r = standard_root_set(&t("E8")).unwrap();
    let info = r.decompose().unwrap();
    assert_eq!(info.len(), 1);
    let simple = &info[0].simple_roots;
    let cartan: Vec<Vec<i64>> = simple
        .iter()
        .map(|a| simple.iter().map(|b| r.cartan_number(a, b).to_integer().try_into().unwrap()).collect())
        .collect();
    let reference = catalogue::cartan_matrix(Component::new(Family::E, 8).unwrap());
    assert_eq!(cartan, reference);
}

fn transform(r: &RootSet, p: &RatMatrix) -> RootSet {
    // v ↦ P v, with the form transported so that lengths are preserved
    let p_inv = p.inverse().unwrap();
    let gram = p_inv.transpose().mul(r.form().gram()).unwrap().mul(&p_inv).unwrap();
    let roots = r.roots().iter().map(|v| p.mul_vec(v).unwrap()).collect();
    RootSet::new(QuadraticForm::new(gram).unwrap(), roots).unwrap()
}

#[test]
fn classification_is_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for label in ["G2", "B3", "C3", "A3", "BC2", "2A1+A2", "D4", "F4", "A1+A1'"] {
        let ty = t(label);
        let r = standard_root_set(&ty).unwrap();
        let n = r.dim();
        let mut roots = r.roots().to_vec();
        roots.shuffle(&mut rng);
        let shuffled = RootSet::new(r.form().clone(), roots).unwrap();
        assert_eq!(shuffled.classify().unwrap(), ty);
        let scaled = RootSet::new(
            r.form().clone(),
            r.roots().iter().map(|v| vec_scale(&ratio(3, 7), v)).collect(),
        )
        .unwrap();
        assert_eq!(scaled.classify().unwrap(), ty);
        let p = loop {
            let entries: Vec<Rational> = (0..n * n).map(|_| ratio(rng.gen_range(-3..=3), rng.gen_range(1..=2))).collect();
            let m = RatMatrix::from_flat(n, n, entries).unwrap();
            if !m.determinant().unwrap().is_zero() {
                break m;
            }
        };
        assert_eq!(transform(&r, &p).classify().unwrap(), ty, "{label}");
    }
}
