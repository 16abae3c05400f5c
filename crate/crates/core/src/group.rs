//! Explicitly generated finite groups.
//!
//! A group is the closure of a generating set under multiplication, stored as
//! a deduplicated element list in breadth-first order. Element orders,
//! exponent and normal cyclic subgroups are derived from that list.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::exactmath::{lcm_u64, RatMatrix};

/// An element of some ambient group with an exact equality.
pub trait GroupElement: Clone + Eq + Hash {
    fn op(&self, other: &Self) -> Self;
    /// The identity of the ambient group containing `self`.
    fn identity_like(&self) -> Self;
}

impl GroupElement for RatMatrix {
    fn op(&self, other: &Self) -> Self {
        self.mul(other).expect("group elements share a dimension")
    }

    fn identity_like(&self) -> Self {
        RatMatrix::identity(self.rows())
    }
}

/// Square integer matrix; used for Weyl groups acting on root coordinates,
/// where every entry is an integer.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    data: Box<[i64]>,
}

impl IntMatrix {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![0; n * n].into_boxed_slice();
        for i in 0..n {
            data[i * n + i] = 1;
        }
        Self { n, data }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "square matrix expected");
        Self { n, data: rows.concat().into_boxed_slice() }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.n + c]
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    pub fn block_diag(blocks: &[IntMatrix]) -> IntMatrix {
        let n = blocks.iter().map(|b| b.n).sum();
        let mut out = vec![0; n * n];
        let mut off = 0;
        for b in blocks {
            for r in 0..b.n {
                for c in 0..b.n {
                    out[(off + r) * n + off + c] = b.get(r, c);
                }
            }
            off += b.n;
        }
        Self { n, data: out.into_boxed_slice() }
    }

    pub fn to_rat(&self) -> RatMatrix {
        let rows: Vec<Vec<i64>> = (0..self.n).map(|r| self.data[r * self.n..(r + 1) * self.n].to_vec()).collect();
        let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
        RatMatrix::from_int_rows(&refs)
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[i64]> = (0..self.n).map(|r| &self.data[r * self.n..(r + 1) * self.n]).collect();
        write!(f, "{rows:?}")
    }
}

impl GroupElement for IntMatrix {
    fn op(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "group elements share a dimension");
        let n = self.n;
        let mut out = vec![0i64; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] += a * other.data[k * n + j];
                }
            }
        }
        Self { n, data: out.into_boxed_slice() }
    }

    fn identity_like(&self) -> Self {
        Self::identity(self.n)
    }
}

/// A cyclic subgroup that is normal in the whole group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalCyclic {
    pub order: u64,
    pub index: u64,
    /// Position of a generator in the element list.
    pub generator: usize,
}

#[derive(Clone, Debug)]
pub struct FiniteGroup<E: GroupElement> {
    elements: Vec<E>,
    lookup: HashMap<E, usize>,
    generators: Vec<usize>,
    orders: Vec<u64>,
}

/// Explicit group of exact rational matrices.
pub type MatrixGroup = FiniteGroup<RatMatrix>;

impl<E: GroupElement> FiniteGroup<E> {
    /// Closure of `gens` under multiplication. Elements beyond `cap` abort
    /// with [`Error::CapExceeded`]. An empty generating set needs an explicit
    /// identity, so it is rejected.
    pub fn generate(gens: &[E], cap: usize) -> Result<Self> {
        let first = gens
            .first()
            .ok_or_else(|| Error::DimensionMismatch("empty generating set".into()))?;
        Self::generate_with_identity(first.identity_like(), gens, cap)
    }

    /// Closure of `gens` (possibly empty) containing `identity`.
    pub fn generate_with_identity(identity: E, gens: &[E], cap: usize) -> Result<Self> {
        let mut elements = vec![identity.clone()];
        let mut lookup = HashMap::from([(identity, 0usize)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in gens {
                let next = elements[i].op(g);
                if !lookup.contains_key(&next) {
                    if elements.len() >= cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    lookup.insert(next.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(next);
                }
            }
        }
        let generators = gens.iter().map(|g| lookup[g]).collect();
        let mut group = Self { elements, lookup, generators, orders: Vec::new() };
        group.orders = (0..group.elements.len()).map(|i| group.power_cycle(i).len() as u64).collect();
        Ok(group)
    }

    /// Indices of x, x², …, identity.
    fn power_cycle(&self, i: usize) -> Vec<usize> {
        let x = &self.elements[i];
        let mut cycle = vec![i];
        let mut cur = x.clone();
        while cycle.last() != Some(&0) {
            cur = cur.op(x);
            cycle.push(self.lookup[&cur]);
        }
        cycle
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn identity(&self) -> &E {
        &self.elements[0]
    }

    pub fn generators(&self) -> Vec<&E> {
        self.generators.iter().map(|&i| &self.elements[i]).collect()
    }

    pub fn index_of(&self, x: &E) -> Option<usize> {
        self.lookup.get(x).copied()
    }

    pub fn contains(&self, x: &E) -> bool {
        self.lookup.contains_key(x)
    }

    pub fn element_order(&self, i: usize) -> u64 {
        self.orders[i]
    }

    pub fn exponent(&self) -> u64 {
        self.orders.iter().fold(1, |acc, &o| lcm_u64(acc, o))
    }

    pub fn max_element_order(&self) -> u64 {
        self.orders.iter().copied().max().unwrap_or(1)
    }

    /// Element order → number of elements of that order.
    pub fn order_multiset(&self) -> BTreeMap<u64, u64> {
        let mut m = BTreeMap::new();
        for &o in &self.orders {
            *m.entry(o).or_insert(0) += 1;
        }
        m
    }

    /// Distinct element orders.
    pub fn order_set(&self) -> BTreeSet<u64> {
        self.orders.iter().copied().collect()
    }

    pub fn inverse_index(&self, i: usize) -> usize {
        let cycle = self.power_cycle(i);
        if cycle.len() == 1 {
            0
        } else {
            cycle[cycle.len() - 2]
        }
    }

    /// Whether the two groups have the same elements.
    pub fn same_elements(&self, other: &Self) -> bool {
        self.order() == other.order() && self.elements.iter().all(|x| other.contains(x))
    }

    /// All cyclic subgroups normal in the group, one entry per subgroup,
    /// sorted by order. Normality of ⟨x⟩ is tested by conjugating x by each
    /// generator.
    pub fn normal_cyclic_subgroups(&self) -> Vec<NormalCyclic> {
        let conjugators: Vec<(usize, usize)> = self
            .generators
            .iter()
            .map(|&s| (s, self.inverse_index(s)))
            .collect();
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut out = Vec::new();
        for i in 0..self.elements.len() {
            let mut members = self.power_cycle(i);
            members.sort_unstable();
            if seen.contains(&members) {
                continue;
            }
            let x = &self.elements[i];
            let normal = conjugators.iter().all(|&(s, s_inv)| {
                let c = self.elements[s].op(x).op(&self.elements[s_inv]);
                members.binary_search(&self.lookup[&c]).is_ok()
            });
            let order = members.len() as u64;
            seen.insert(members);
            if normal {
                out.push(NormalCyclic { order, index: self.order() / order, generator: i });
            }
        }
        out.sort_by_key(|h| (h.order, h.generator));
        out
    }
}
