//! Root-system types: multisets of irreducible Dynkin labels.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    /// Non-reduced `BC_ℓ`; `BC_1` is written `A1'`.
    BC,
}

impl Family {
    pub fn letter(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E => "E",
            Family::F => "F",
            Family::G => "G",
            Family::BC => "BC",
        }
    }
}

/// An irreducible root system type. Ordered by rank, then family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Component {
    pub family: Family,
    pub rank: usize,
}

impl PartialOrd for Component {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Component {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.rank, self.family).cmp(&(other.rank, other.family))
    }
}

impl Component {
    /// Validates and normalizes: `B1`, `C1` become `A1`, `C2` becomes `B2`.
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        use Family::*;
        let legal = match family {
            A | B | C | BC => rank >= 1,
            D => rank >= 4,
            E => (6..=8).contains(&rank),
            F => rank == 4,
            G => rank == 2,
        };
        if !legal {
            return Err(Error::IllegalType(format!("{}{rank} is not a root system type", family.letter())));
        }
        let family = match (family, rank) {
            (B | C, 1) => A,
            (C, 2) => B,
            (f, _) => f,
        };
        Ok(Self { family, rank })
    }

    pub fn is_reduced(&self) -> bool {
        self.family != Family::BC
    }

    /// Number of roots.
    pub fn root_count(&self) -> usize {
        let l = self.rank;
        match self.family {
            Family::A => l * (l + 1),
            Family::B | Family::C => 2 * l * l,
            Family::D => 2 * l * (l - 1),
            Family::E => match l {
                6 => 72,
                7 => 126,
                _ => 240,
            },
            Family::F => 48,
            Family::G => 12,
            Family::BC => 2 * l * l + 2 * l,
        }
    }

    /// The reduced type with the same Weyl group.
    pub fn weyl_equivalent(&self) -> Component {
        match (self.family, self.rank) {
            (Family::BC, 1) => Component { family: Family::A, rank: 1 },
            (Family::BC, l) => Component { family: Family::B, rank: l },
            _ => *self,
        }
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.family == Family::BC && self.rank == 1 {
            write!(f, "A1'")
        } else {
            write!(f, "{}{}", self.family.letter(), self.rank)
        }
    }
}

impl FromStr for Component {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("not a root system label: {s:?}"));
        let primed = s.contains(['\'', '′']);
        let body = s.replace(['\'', '′', '_'], "");
        let split = body.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?;
        let (letters, digits) = body.split_at(split);
        let rank: usize = digits.parse().map_err(|_| bad())?;
        let family = match letters.to_ascii_uppercase().as_str() {
            "A" => Family::A,
            "B" => Family::B,
            "C" => Family::C,
            "D" => Family::D,
            "E" => Family::E,
            "F" => Family::F,
            "G" => Family::G,
            "BC" => Family::BC,
            _ => return Err(bad()),
        };
        if primed {
            if family == Family::A && rank == 1 {
                return Ok(Component { family: Family::BC, rank: 1 });
            }
            return Err(bad());
        }
        Component::new(family, rank)
    }
}

/// A multiset of irreducible components, kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSystemType {
    components: Vec<Component>,
}

impl RootSystemType {
    pub fn new(mut components: Vec<Component>) -> Self {
        components.sort();
        Self { components }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn irreducible(family: Family, rank: usize) -> Result<Self> {
        Ok(Self::new(vec![Component::new(family, rank)?]))
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.rank).sum()
    }

    pub fn is_reduced(&self) -> bool {
        self.components.iter().all(Component::is_reduced)
    }

    pub fn root_count(&self) -> usize {
        self.components.iter().map(Component::root_count).sum()
    }

    /// Replaces non-reduced components by reduced ones with the same Weyl group.
    pub fn weyl_equivalent(&self) -> Self {
        Self::new(self.components.iter().map(Component::weyl_equivalent).collect())
    }

    /// Number of components equal to `c`.
    pub fn count(&self, c: Component) -> usize {
        self.components.iter().filter(|&&x| x == c).count()
    }

    /// Distinct components with multiplicities, in sorted order.
    pub fn grouped(&self) -> Vec<(usize, Component)> {
        let mut out: Vec<(usize, Component)> = Vec::new();
        for &c in &self.components {
            match out.last_mut() {
                Some((m, last)) if *last == c => *m += 1,
                _ => out.push((1, c)),
            }
        }
        out
    }

    /// The direct sum with another type.
    pub fn plus(&self, other: &RootSystemType) -> Self {
        let mut c = self.components.clone();
        c.extend_from_slice(&other.components);
        Self::new(c)
    }
}

impl fmt::Display for RootSystemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .grouped()
            .into_iter()
            .map(|(m, c)| if m == 1 { c.to_string() } else { format!("{m}{c}") })
            .collect();
        write!(f, "{}", parts.join("+"))
    }
}

impl FromStr for RootSystemType {
    type Err = Error;

    /// Accepts e.g. `2A1+A2`, `A1 ∔ A1'`, `BC2`, `0` (empty).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" || s == "∅" {
            return Ok(Self::empty());
        }
        let mut components = Vec::new();
        for term in s.split(['+', '∔']) {
            let term = term.trim();
            let digits = term.chars().take_while(char::is_ascii_digit).count();
            let (mult, label) = term.split_at(digits);
            let mult: usize = if mult.is_empty() {
                1
            } else {
                mult.parse().map_err(|_| Error::Parse(format!("bad multiplicity in {term:?}")))?
            };
            if mult == 0 {
                return Err(Error::Parse(format!("zero multiplicity in {term:?}")));
            }
            let c: Component = label.parse()?;
            components.extend(std::iter::repeat_n(c, mult));
        }
        Ok(Self::new(components))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> RootSystemType {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(t("A2+2A1").to_string(), "2A1+A2");
        assert_eq!(t("A1 ∔ A′1").to_string(), "A1+A1'");
        assert_eq!(t("BC1").to_string(), "A1'");
        assert_eq!(t("C2").to_string(), "B2");
        assert_eq!(t("B1+C1").to_string(), "2A1");
        assert_eq!(t("B2+A2").to_string(), "A2+B2");
        assert_eq!(t("3A2").rank(), 6);
        assert_eq!(t("0"), RootSystemType::empty());
        assert_eq!(t("E_8").to_string(), "E8");
    }

    #[test]
    fn illegal_labels() {
        for bad in ["D3", "E5", "E9", "F3", "G3", "A0", "X2", "0A1", "B2'", ""] {
            assert!(bad.parse::<RootSystemType>().is_err(), "{bad}");
        }
    }

    #[test]
    fn counts_and_equivalents() {
        assert_eq!(t("G2").root_count(), 12);
        assert_eq!(t("BC2").root_count(), 12);
        assert_eq!(t("A1'").root_count(), 4);
        assert_eq!(t("E8").root_count(), 240);
        assert_eq!(t("BC3+A1'").weyl_equivalent(), t("A1+B3"));
        assert!(!t("A1+A1'").is_reduced());
    }
}
