use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

use super::variety::RFamily;

/// The members of a family that descend from `top` in its tree. This is
/// again an R-variety, with maximum `top`, so it can be fed to the tree and
/// genus-level routines directly.
#[derive(Debug, Clone)]
pub struct Descendants<'a, F: RFamily + ?Sized> {
    parent: &'a F,
    top: NumericalSemigroup,
    /// Nonzero elements of `top` below `F_Δ(top) + 1`. Every descendant
    /// agrees with `top` there.
    floor: Vec<u64>,
}

pub fn descendants<'a, F: RFamily + ?Sized>(
    parent: &'a F,
    top: &NumericalSemigroup,
) -> Result<Descendants<'a, F>> {
    if !parent.contains(top) {
        return Err(Error::NotInVariety(top.to_string()));
    }
    let threshold = (top.restricted_frobenius_or_root(parent.delta())? + 1) as u64;
    Ok(Descendants {
        parent,
        floor: top.elements_below(threshold).skip(1).collect(),
        top: top.clone(),
    })
}

impl<F: RFamily + ?Sized> Descendants<'_, F> {
    /// `s` descends from the top iff `top = s ∪ {x ∈ Δ | x ≥ n}` for some n.
    pub fn is_descendant(&self, s: &NumericalSemigroup) -> bool {
        if !s.is_subset(&self.top) {
            return false;
        }
        let Some(n) = self
            .top
            .elements_below(s.conductor())
            .find(|&x| !s.contains(x))
        else {
            return true;
        };
        let delta = self.parent.delta();
        (n..self.top.conductor()).all(|x| !delta.contains(x) || self.top.contains(x))
    }

    pub fn parent(&self) -> &F {
        self.parent
    }
}

impl<F: RFamily + ?Sized> RFamily for Descendants<'_, F> {
    fn delta(&self) -> &NumericalSemigroup {
        &self.top
    }

    fn contains(&self, s: &NumericalSemigroup) -> bool {
        self.is_descendant(s) && self.parent.contains(s)
    }

    fn generated_monoid(&self, a: &[u64]) -> Result<NumericalSemigroup> {
        if let Some(&x) = a.iter().find(|&&x| !self.top.contains(x)) {
            return Err(Error::NotInDelta(x));
        }
        let mut gens = self.floor.clone();
        gens.extend_from_slice(a);
        self.parent.generated_monoid(&gens)
    }
}
