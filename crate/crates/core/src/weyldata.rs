//! Closed-form Weyl group orders, p-adic valuations, and group data obtained
//! from explicit generation (exponents, element orders).

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::Result;
use crate::exactmath::lcm_u64;
use crate::rootsystems::catalogue;
use crate::rootsystems::{Component, Family, RootSystemType};

/// `Σ_{k≥1} ⌊m / p^k⌋`, the exponent of `p` in `m!`.
pub fn legendre_nu(p: u64, m: u64) -> u64 {
    let mut total = 0;
    let mut q = m;
    while q > 0 {
        q /= p;
        total += q;
    }
    total
}

/// Exponent of `p` in `x`; `x` must be nonzero.
pub fn valuation(x: &BigUint, p: u64) -> u64 {
    assert!(!x.is_zero(), "valuation of zero");
    let p = BigUint::from(p);
    let mut x = x.clone();
    let mut v = 0;
    while (&x % &p).is_zero() {
        x /= &p;
        v += 1;
    }
    v
}

fn factorial(m: u64) -> BigUint {
    (1..=m).fold(BigUint::one(), |acc, k| acc * k)
}

/// `|W|` of an irreducible type.
pub fn component_order(c: Component) -> BigUint {
    let l = c.rank as u64;
    let pow2 = |e: u64| BigUint::one() << e;
    match c.weyl_equivalent().family {
        Family::A => factorial(l + 1),
        Family::B | Family::C | Family::BC => pow2(l) * factorial(l),
        Family::D => pow2(l - 1) * factorial(l),
        Family::E => BigUint::from(match l {
            6 => 51_840u64,
            7 => 2_903_040,
            _ => 696_729_600,
        }),
        Family::F => BigUint::from(1152u32),
        Family::G => BigUint::from(12u32),
    }
}

/// `|W|` of a type: the product over its components.
pub fn weyl_order(t: &RootSystemType) -> BigUint {
    t.components().iter().map(|&c| component_order(c)).product()
}

fn component_nu(c: Component, p: u64) -> u64 {
    let l = c.rank as u64;
    let two = u64::from(p == 2);
    match c.weyl_equivalent().family {
        Family::A => legendre_nu(p, l + 1),
        Family::B | Family::C | Family::BC => two * l + legendre_nu(p, l),
        Family::D => two * (l - 1) + legendre_nu(p, l),
        _ => valuation(&component_order(c), p),
    }
}

/// `ν_p(|W|)`, additive over components.
pub fn nu_p(t: &RootSystemType, p: u64) -> u64 {
    t.components().iter().map(|&c| component_nu(c, p)).sum()
}

/// Primes dividing `|W|`, ascending.
pub fn prime_divisors(t: &RootSystemType) -> Vec<u64> {
    let bound = (t.rank() as u64 + 1).max(7);
    (2..=bound).filter(|&p| is_prime(p) && nu_p(t, p) > 0).collect()
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// `⌊(rank + 1)/2⌋`, a lower bound for `ν₂(|W|)` over all types of the given rank.
pub fn nu2_lower_bound(rank: usize) -> u64 {
    (rank as u64).div_ceil(2)
}

/// Lower bound for the largest `m` such that `W` contains a copy of `W(mA₁)`.
///
/// For types `X + a·A1 + b·B2` with `X` one of the listed components (or
/// absent) the bound is `rk`, `rk − 1` or `rk − 2`; other types get the
/// componentwise bound from `A1`, `B2`, `G2`, `B_ℓ`, `C_ℓ` and even `D_ℓ`.
pub fn m_lower_bound(t: &RootSystemType) -> u64 {
    let t = t.weyl_equivalent();
    let rank = t.rank() as u64;
    let a1 = Component { family: Family::A, rank: 1 };
    let b2 = Component { family: Family::B, rank: 2 };
    let rest: Vec<Component> = t.components().iter().copied().filter(|&c| c != a1 && c != b2).collect();
    let shape_drop = match rest.as_slice() {
        [] => Some(0),
        [x] => match (x.family, x.rank) {
            (Family::B | Family::C, 3..=5) | (Family::D, 4) | (Family::G, 2) => Some(0),
            (Family::A, 2 | 3) | (Family::D, 5) => Some(1),
            (Family::A, 4) => Some(2),
            _ => None,
        },
        _ => None,
    };
    if let Some(drop) = shape_drop {
        return rank - drop;
    }
    t.components()
        .iter()
        .map(|c| match (c.family, c.rank) {
            (Family::A, 1) => 1,
            (Family::G, 2) => 2,
            (Family::B | Family::C, l) => l as u64,
            (Family::D, l) if l % 2 == 0 => l as u64,
            _ => 0,
        })
        .sum()
}

/// Data of an explicitly generated irreducible Weyl group.
#[derive(Clone, Debug)]
pub struct GroupData {
    pub order: u64,
    pub exponent: u64,
    pub element_orders: BTreeSet<u64>,
}

type Cache = Mutex<HashMap<(Component, usize), Option<Arc<GroupData>>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Exponent and element orders of `W(c)`, from explicit generation; `None`
/// when `|W(c)|` exceeds `cap`. Results are cached per (component, cap).
pub fn component_group_data(c: Component, cap: usize) -> Option<Arc<GroupData>> {
    let c = c.weyl_equivalent();
    let key = (c, cap);
    if let Some(v) = cache().lock().unwrap().get(&key) {
        return v.clone();
    }
    let fits = component_order(c).to_usize().is_some_and(|o| o <= cap);
    let data = if fits {
        catalogue::weyl_group(c, cap).ok().map(|g| {
            Arc::new(GroupData { order: g.order(), exponent: g.exponent(), element_orders: g.order_set() })
        })
    } else {
        None
    };
    cache().lock().unwrap().insert(key, data.clone());
    data
}

/// `exp(W)`: lcm of the component exponents, when all are available.
pub fn exponent(t: &RootSystemType, cap: usize) -> Option<u64> {
    t.components()
        .iter()
        .try_fold(1u64, |acc, &c| component_group_data(c, cap).map(|d| lcm_u64(acc, d.exponent)))
}

/// Largest element order in `W`: the largest lcm over one element order per component.
pub fn max_element_order(t: &RootSystemType, cap: usize) -> Option<u64> {
    let mut achievable: BTreeSet<u64> = BTreeSet::from([1]);
    for &c in t.components() {
        let data = component_group_data(c, cap)?;
        achievable = achievable
            .iter()
            .flat_map(|&a| data.element_orders.iter().map(move |&o| lcm_u64(a, o)))
            .collect();
    }
    achievable.last().copied()
}

/// Checks the closed-form order against explicit generation.
pub fn explicit_order(c: Component, cap: usize) -> Result<u64> {
    Ok(catalogue::weyl_group(c, cap)?.order())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> RootSystemType {
        s.parse().unwrap()
    }

    #[test]
    fn legendre() {
        assert_eq!(legendre_nu(2, 10), valuation(&factorial(10), 2));
        assert_eq!(legendre_nu(2, 10), 8);
        assert_eq!(legendre_nu(2, 0), 0);
        assert_eq!(legendre_nu(3, 9), 4);
    }

    #[test]
    fn orders() {
        assert_eq!(weyl_order(&t("G2")), BigUint::from(12u32));
        assert_eq!(weyl_order(&t("3A2")), BigUint::from(216u32));
        assert_eq!(weyl_order(&RootSystemType::empty()), BigUint::one());
        assert_eq!(weyl_order(&t("A1'")), BigUint::from(2u32));
        assert_eq!(weyl_order(&t("BC3")), weyl_order(&t("B3")));
        assert_eq!(weyl_order(&t("E8")), BigUint::from(696_729_600u64));
    }

    #[test]
    fn closed_form_valuations_agree_with_orders() {
        for s in ["A7", "B8", "C5", "D6", "E6", "E7", "E8", "F4", "G2", "BC4", "3A2+D5"] {
            let ty = t(s);
            for p in [2, 3, 5, 7] {
                assert_eq!(nu_p(&ty, p), valuation(&weyl_order(&ty), p), "{s} p={p}");
            }
        }
        assert_eq!((nu_p(&t("A7"), 2), nu_p(&t("A7"), 3)), (7, 2));
        assert_eq!(nu_p(&t("B8"), 2), 15);
        assert_eq!((nu_p(&t("E8"), 2), nu_p(&t("E8"), 3)), (14, 5));
    }

    #[test]
    fn lower_bound() {
        assert_eq!(nu2_lower_bound(3), 2);
        assert_eq!(nu2_lower_bound(6), 3);
        assert_eq!(nu_p(&t("3A2"), 2), 3);
        assert_eq!(nu2_lower_bound(16), 8);
    }

    #[test]
    fn m_bounds() {
        assert_eq!(m_lower_bound(&t("4A1")), 4);
        assert_eq!(m_lower_bound(&t("A2+2A1")), 3);
        assert_eq!(m_lower_bound(&t("A4+2A1")), 4);
        assert_eq!(m_lower_bound(&t("B2+G2")), 4);
        assert_eq!(m_lower_bound(&t("A1+A3")), 3);
        assert_eq!(m_lower_bound(&t("D5+B2")), 6);
        assert_eq!(m_lower_bound(&t("14A1+A2")), 15);
        // not of the listed shape: componentwise bound
        assert_eq!(m_lower_bound(&t("2A2")), 0);
        assert_eq!(m_lower_bound(&t("A5+B3+D6")), 9);
        assert_eq!(m_lower_bound(&RootSystemType::empty()), 0);
    }

    #[test]
    fn group_data() {
        assert_eq!(exponent(&t("A2"), 1000), Some(6));
        assert_eq!(exponent(&t("B2"), 1000), Some(4));
        assert_eq!(exponent(&t("G2"), 1000), Some(6));
        assert_eq!(exponent(&t("3A2"), 1000), Some(6));
        assert_eq!(max_element_order(&t("A1+A3"), 1000), Some(6));
        assert_eq!(max_element_order(&t("A2+B2"), 1000), Some(12));
        assert_eq!(exponent(&t("E8"), 1_000_000), None);
    }
}
