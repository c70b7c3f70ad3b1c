use std::collections::BTreeSet;
use std::fmt;

use crate::chains;
use crate::error::{Error, Result};
use crate::parse::{parse_elements, parse_family, parse_semigroup, split_bound};
use crate::semigroup::NumericalSemigroup;

/// A family of numerical semigroups satisfying the R-variety axioms: it has
/// a maximum `Δ`, is closed under intersection, and `S ∪ {F_Δ(S)}` stays in
/// the family for every member `S ≠ Δ`.
///
/// Everything the tree machinery needs is membership, the maximum, and the
/// smallest member containing a given finite set.
pub trait RFamily {
    /// The maximum `Δ`.
    fn delta(&self) -> &NumericalSemigroup;

    fn contains(&self, s: &NumericalSemigroup) -> bool;

    /// The smallest monoid of the family containing `a` (the intersection
    /// of all members containing `a`). Requires `a ⊆ Δ`.
    fn generated_monoid(&self, a: &[u64]) -> Result<NumericalSemigroup>;

    /// The unique minimal system of generators of a member relative to the
    /// family.
    fn minimal_system(&self, s: &NumericalSemigroup) -> Result<Vec<u64>> {
        chains::minimal_system_by_removal(self, s)
    }
}

/// The three descriptor families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Descriptor {
    /// `[lo, hi]`: every semigroup between the two bounds.
    Interval {
        lo: NumericalSemigroup,
        hi: NumericalSemigroup,
    },
    /// `R(A, T)`: every semigroup `S` with `A ⊆ S ⊆ T`. `required` is sorted
    /// and holds no zero.
    Restricted {
        required: Vec<u64>,
        ambient: NumericalSemigroup,
    },
    /// `R(F, Δ)`: the smallest R-variety containing `F` with maximum `Δ`.
    Generated {
        family: Vec<NumericalSemigroup>,
        delta: NumericalSemigroup,
    },
}

/// A validated descriptor. Generated varieties carry their chain family
/// `C(F, Δ)`, from which membership is decided.
#[derive(Debug, Clone)]
pub struct RVariety {
    descriptor: Descriptor,
    chain_members: Vec<NumericalSemigroup>,
}

impl RVariety {
    pub fn new(descriptor: Descriptor) -> Result<Self> {
        let chain_members = match &descriptor {
            Descriptor::Interval { lo, hi } => {
                if !lo.is_subset(hi) {
                    return Err(Error::not_contained(lo, hi));
                }
                Vec::new()
            }
            Descriptor::Restricted { required, ambient } => {
                if let Some(&x) = required.iter().find(|&&x| !ambient.contains(x)) {
                    return Err(Error::not_contained(x, ambient));
                }
                Vec::new()
            }
            Descriptor::Generated { family, delta } => {
                chains::chain_family(family, delta)?.into_iter().collect()
            }
        };
        Ok(Self {
            descriptor,
            chain_members,
        })
    }

    pub fn interval(lo: NumericalSemigroup, hi: NumericalSemigroup) -> Result<Self> {
        Self::new(Descriptor::Interval { lo, hi })
    }

    pub fn restricted(
        required: impl IntoIterator<Item = u64>,
        ambient: NumericalSemigroup,
    ) -> Result<Self> {
        let required: BTreeSet<u64> = required.into_iter().filter(|&x| x != 0).collect();
        Self::new(Descriptor::Restricted {
            required: required.into_iter().collect(),
            ambient,
        })
    }

    pub fn generated(family: Vec<NumericalSemigroup>, delta: NumericalSemigroup) -> Result<Self> {
        Self::new(Descriptor::Generated { family, delta })
    }

    /// `LO:HI`
    pub fn parse_interval(text: &str) -> Result<Self> {
        let (lo, hi) = split_bound(text)?;
        Self::interval(parse_semigroup(lo)?, parse_semigroup(hi)?)
    }

    /// `a1,a2,...:T`
    pub fn parse_restricted(text: &str) -> Result<Self> {
        let (a, t) = split_bound(text)?;
        Self::restricted(parse_elements(a)?, parse_semigroup(t)?)
    }

    /// `S1;S2;...:DELTA`
    pub fn parse_generated(text: &str) -> Result<Self> {
        let (f, d) = split_bound(text)?;
        Self::generated(parse_family(f)?, parse_semigroup(d)?)
    }

    pub fn descriptor(&self) -> &Descriptor {
        &self.descriptor
    }

    /// `C(F, Δ)` for generated varieties, sorted; empty for the others.
    pub fn chain_members(&self) -> &[NumericalSemigroup] {
        &self.chain_members
    }

    /// Whether the variety is known to have finitely many members.
    pub fn is_finite(&self) -> bool {
        match &self.descriptor {
            Descriptor::Interval { .. } | Descriptor::Generated { .. } => true,
            // Finite iff ⟨A⟩ is already cofinite.
            Descriptor::Restricted { required, .. } => crate::semigroup::gcd_all(required) == 1,
        }
    }
}

impl RFamily for RVariety {
    fn delta(&self) -> &NumericalSemigroup {
        match &self.descriptor {
            Descriptor::Interval { hi, .. } => hi,
            Descriptor::Restricted { ambient, .. } => ambient,
            Descriptor::Generated { delta, .. } => delta,
        }
    }

    fn contains(&self, s: &NumericalSemigroup) -> bool {
        match &self.descriptor {
            Descriptor::Interval { lo, hi } => lo.is_subset(s) && s.is_subset(hi),
            Descriptor::Restricted { required, ambient } => {
                required.iter().all(|&x| s.contains(x)) && s.is_subset(ambient)
            }
            Descriptor::Generated { delta, .. } => {
                if !s.is_subset(delta) {
                    return false;
                }
                // The intersection of every chain member above s is the
                // smallest expressible superset; s is a member iff it is s.
                let hull = self
                    .chain_members
                    .iter()
                    .filter(|c| s.is_subset(c))
                    .fold(delta.clone(), |acc, c| acc.intersect(c));
                &hull == s
            }
        }
    }

    fn generated_monoid(&self, a: &[u64]) -> Result<NumericalSemigroup> {
        chains::rmonoid_generated(self, a)
    }

    fn minimal_system(&self, s: &NumericalSemigroup) -> Result<Vec<u64>> {
        chains::minimal_rsystem(self, s)
    }
}

fn write_elements(f: &mut fmt::Formatter<'_>, xs: &[u64]) -> fmt::Result {
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

/// Writes the descriptor in the CLI grammar.
impl fmt::Display for RVariety {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.descriptor {
            Descriptor::Interval { lo, hi } => write!(f, "interval {lo}:{hi}"),
            Descriptor::Restricted { required, ambient } => {
                f.write_str("restricted ")?;
                write_elements(f, required)?;
                write!(f, ":{ambient}")
            }
            Descriptor::Generated { family, delta } => {
                f.write_str("generated ")?;
                for (i, s) in family.iter().enumerate() {
                    if i > 0 {
                        f.write_str(";")?;
                    }
                    write!(f, "{s}")?;
                }
                write!(f, ":{delta}")
            }
        }
    }
}
