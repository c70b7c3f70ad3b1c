//! Restricted chains and the monoids generated inside an R-variety.
//!
//! The chain of `S` restricted to `T` starts at `S` and repeatedly adjoins
//! `F_T` until `T` is reached. For each descriptor family the smallest
//! member containing a set, and the minimal system of generators relative
//! to the variety, have closed forms; those live here.

use std::collections::BTreeSet;

use crate::engine::{Descriptor, RFamily, RVariety};
use crate::error::{Error, Result};
use crate::semigroup::{gcd_all, NumericalSemigroup};

/// `S = S₀ ⊊ S₁ ⊊ … ⊊ Sₙ = T`.
///
/// `fill_values[i]` is the element adjoined to `links[i]` to obtain
/// `links[i + 1]`, i.e. `F_T(links[i])`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    pub links: Vec<NumericalSemigroup>,
    pub fill_values: Vec<u64>,
}

impl Chain {
    pub fn start(&self) -> &NumericalSemigroup {
        &self.links[0]
    }

    pub fn end(&self) -> &NumericalSemigroup {
        self.links.last().expect("a chain has at least one link")
    }

    pub fn len(&self) -> usize {
        self.links.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// The chain `C(S, T)`. With `T = ℕ` this is the ordinary chain of `S`.
pub fn chain_to(start: &NumericalSemigroup, top: &NumericalSemigroup) -> Result<Chain> {
    if !start.is_subset(top) {
        return Err(Error::not_contained(start, top));
    }
    let mut links = vec![start.clone()];
    let mut fill_values = Vec::new();
    loop {
        let current = links.last().expect("nonempty");
        if current == top {
            break;
        }
        let fill = current.restricted_frobenius(top)?;
        let next = current.add_element(fill)?;
        fill_values.push(fill);
        links.push(next);
    }
    Ok(Chain { links, fill_values })
}

/// `C(F, Δ)`: the union of the restricted chains of the family members.
/// `Δ` itself is always included, so an empty family yields `{Δ}`.
pub fn chain_family(
    family: &[NumericalSemigroup],
    delta: &NumericalSemigroup,
) -> Result<BTreeSet<NumericalSemigroup>> {
    let mut out = BTreeSet::new();
    out.insert(delta.clone());
    for (i, s) in family.iter().enumerate() {
        if !s.is_subset(delta) {
            return Err(Error::not_contained(
                format!("family member #{i} {s}"),
                delta,
            ));
        }
        out.extend(chain_to(s, delta)?.links);
    }
    Ok(out)
}

fn check_in_delta(delta: &NumericalSemigroup, a: &[u64]) -> Result<()> {
    match a.iter().find(|&&x| !delta.contains(x)) {
        Some(&x) => Err(Error::NotInDelta(x)),
        None => Ok(()),
    }
}

fn generated_semigroup(mut gens: Vec<u64>) -> Result<NumericalSemigroup> {
    gens.retain(|&g| g != 0);
    gens.sort_unstable();
    gens.dedup();
    let d = gcd_all(&gens);
    if d != 1 {
        return Err(Error::NotCofinite { gcd: d });
    }
    NumericalSemigroup::from_generators(&gens)
}

/// `min{a ∈ A | a ∉ S}`, if any.
fn first_outside(a: impl IntoIterator<Item = u64>, s: &NumericalSemigroup) -> Option<u64> {
    a.into_iter().filter(|&x| !s.contains(x)).min()
}

/// The smallest member of `variety` containing `a`, i.e. the monoid `R(A)`.
///
/// Interval `[S₁, S₂]` gives `⟨S₁ ∪ A⟩`, restricted `R(A₀, T)` gives
/// `⟨A₀ ∪ A⟩`, and a generated `R(F, Δ)` gives `⋂_{S ∈ F} α(S)` where
/// `α(S) = S` when `A ⊆ S` and `S ∪ {x ∈ Δ | x ≥ min(A ∖ S)}` otherwise.
///
/// For restricted varieties `⟨A₀ ∪ A⟩` can fail to be cofinite; that case
/// is reported as [`Error::NotCofinite`].
pub fn rmonoid_generated(variety: &RVariety, a: &[u64]) -> Result<NumericalSemigroup> {
    let delta = variety.delta();
    check_in_delta(delta, a)?;
    match variety.descriptor() {
        Descriptor::Interval { lo, .. } => {
            let mut gens = lo.msg().to_vec();
            gens.extend_from_slice(a);
            generated_semigroup(gens)
        }
        Descriptor::Restricted { required, .. } => {
            let mut gens = required.clone();
            gens.extend_from_slice(a);
            generated_semigroup(gens)
        }
        Descriptor::Generated { family, delta } => {
            let mut acc = delta.clone();
            for s in family {
                let alpha = match first_outside(a.iter().copied(), s) {
                    None => s.clone(),
                    Some(x) => s.with_tail_of(delta, x)?,
                };
                acc = acc.intersect(&alpha);
            }
            Ok(acc)
        }
    }
}

/// The unique minimal system of generators of the member `m` relative to
/// `variety`.
pub fn minimal_rsystem(variety: &RVariety, m: &NumericalSemigroup) -> Result<Vec<u64>> {
    if !variety.contains(m) {
        return Err(Error::NotInVariety(m.to_string()));
    }
    match variety.descriptor() {
        Descriptor::Interval { lo, .. } => Ok(m
            .msg()
            .iter()
            .copied()
            .filter(|&x| !lo.contains(x))
            .collect()),
        Descriptor::Restricted { required, .. } => Ok(m
            .msg()
            .iter()
            .copied()
            .filter(|x| required.binary_search(x).is_err())
            .collect()),
        Descriptor::Generated { family, .. } => {
            // Take A = m: every x_S = min(m ∖ S) is below the conductor of S.
            let system: BTreeSet<u64> = family
                .iter()
                .filter_map(|s| first_outside(m.elements_below(s.conductor()), s))
                .collect();
            let system: Vec<u64> = system.into_iter().collect();
            check_minimal_system(variety, m, &system)?;
            Ok(system)
        }
    }
}

/// Checks that `system` generates `m` and that no element is generated by
/// the others.
fn check_minimal_system(variety: &RVariety, m: &NumericalSemigroup, system: &[u64]) -> Result<()> {
    if &rmonoid_generated(variety, system)? != m {
        return Err(Error::Invariant(format!(
            "{system:?} does not generate {m} in the variety"
        )));
    }
    for (i, &b) in system.iter().enumerate() {
        let rest: Vec<u64> = system
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &x)| x)
            .collect();
        if rmonoid_generated(variety, &rest)?.contains(b) {
            return Err(Error::Invariant(format!(
                "{b} is redundant in {system:?} for {m}"
            )));
        }
    }
    Ok(())
}

/// Minimal system of a member of any family with a computable `R(A)`:
/// `x` belongs to it iff `x ∈ msg(m)` and `m ∖ {x}` is again a monoid of the
/// family, that is `x ∉ R(m ∖ {x})`.
pub fn minimal_system_by_removal<F: RFamily + ?Sized>(
    family: &F,
    m: &NumericalSemigroup,
) -> Result<Vec<u64>> {
    if !family.contains(m) {
        return Err(Error::NotInVariety(m.to_string()));
    }
    let mut out = Vec::new();
    for &x in m.msg() {
        let removed = m.remove_element(x)?;
        if !family.generated_monoid(removed.msg())?.contains(x) {
            out.push(x);
        }
    }
    Ok(out)
}

/// Cardinality of the minimal system of `m`.
pub fn rrange<F: RFamily + ?Sized>(family: &F, m: &NumericalSemigroup) -> Result<usize> {
    Ok(family.minimal_system(m)?.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    fn generated_fixture() -> RVariety {
        RVariety::generated(
            vec![sg(&[5, 7, 9, 11, 13]), sg(&[4, 10, 11, 13])],
            sg(&[4, 5, 7]),
        )
        .unwrap()
    }

    #[test]
    fn trivial_chain() {
        let s = sg(&[5, 6]);
        let c = chain_to(&s, &s).unwrap();
        assert_eq!(c.links, vec![s]);
        assert!(c.fill_values.is_empty());
    }

    #[test]
    fn chain_below_an_interval_top() {
        let c = chain_to(&sg(&[5, 6]), &sg(&[5, 6, 7])).unwrap();
        assert_eq!(
            c.links,
            vec![
                sg(&[5, 6]),
                sg(&[5, 6, 19]),
                sg(&[5, 6, 14]),
                sg(&[5, 6, 13, 14]),
                sg(&[5, 6, 7]),
            ]
        );
        assert_eq!(c.fill_values, vec![19, 14, 13, 7]);
        assert!(c.fill_values.windows(2).all(|w| w[0] > w[1]));
        assert!(chain_to(&sg(&[5, 6, 7]), &sg(&[5, 6])).is_err());
    }

    #[test]
    fn chain_to_naturals_has_genus_plus_one_links() {
        let s = sg(&[4, 6, 7]);
        let c = chain_to(&s, &NumericalSemigroup::natural()).unwrap();
        assert_eq!(c.len() as u64, s.genus() + 1);
        assert_eq!(c.fill_values, vec![9, 5, 3, 2, 1]);
    }

    #[test]
    fn chain_family_of_two_generators() {
        let delta = sg(&[4, 5, 7]);
        let fam = chain_family(&[sg(&[5, 7, 9, 11, 13]), sg(&[4, 10, 11, 13])], &delta).unwrap();
        let expected: BTreeSet<_> = [
            sg(&[5, 7, 9, 11, 13]),
            sg(&[5, 7, 8, 9, 11]),
            sg(&[4, 10, 11, 13]),
            sg(&[4, 9, 10, 11]),
            sg(&[4, 7, 9, 10]),
            delta.clone(),
        ]
        .into_iter()
        .collect();
        assert_eq!(fam, expected);
        assert_eq!(
            chain_family(std::slice::from_ref(&delta), &delta)
                .unwrap()
                .len(),
            1
        );
        let err = chain_family(&[sg(&[5, 7, 9, 11, 13]), sg(&[3, 4])], &delta).unwrap_err();
        assert!(err.to_string().contains("#1"));
    }

    #[test]
    fn generated_monoids_of_two_generator_family() {
        let v = generated_fixture();
        assert_eq!(rmonoid_generated(&v, &[4, 5, 7]).unwrap(), sg(&[4, 5, 7]));
        assert_eq!(
            rmonoid_generated(&v, &[5, 7, 8, 9, 11]).unwrap(),
            sg(&[5, 7, 8, 9, 11])
        );
        assert_eq!(rmonoid_generated(&v, &[6]), Err(Error::NotInDelta(6)));
    }

    #[test]
    fn minimal_systems_of_two_generator_family() {
        let v = generated_fixture();
        assert_eq!(minimal_rsystem(&v, &sg(&[4, 5, 7])).unwrap(), vec![4, 5]);
        assert_eq!(
            minimal_rsystem(&v, &sg(&[5, 7, 8, 9, 11])).unwrap(),
            vec![5, 8]
        );
        assert_eq!(
            minimal_rsystem(&v, &sg(&[4, 7, 9, 10])).unwrap(),
            vec![4, 7]
        );
        assert!(matches!(
            minimal_rsystem(&v, &sg(&[4, 5])),
            Err(Error::NotInVariety(_))
        ));
    }

    #[test]
    fn interval_and_restricted_minimal_systems() {
        let v = RVariety::interval(sg(&[5, 6]), sg(&[5, 6, 7])).unwrap();
        assert!(minimal_rsystem(&v, &sg(&[5, 6])).unwrap().is_empty());
        assert_eq!(minimal_rsystem(&v, &sg(&[5, 6, 7])).unwrap(), vec![7]);
        assert_eq!(rrange(&v, &sg(&[5, 6, 13, 14])).unwrap(), 2);
        let r = RVariety::restricted([4, 6], sg(&[4, 6, 7])).unwrap();
        assert_eq!(
            minimal_rsystem(&r, &sg(&[4, 6, 11, 13])).unwrap(),
            vec![11, 13]
        );
        assert_eq!(
            rmonoid_generated(&r, &[]),
            Err(Error::NotCofinite { gcd: 2 })
        );
        assert_eq!(rmonoid_generated(&r, &[7]).unwrap(), sg(&[4, 6, 7]));
    }

    #[test]
    fn removal_route_agrees_with_closed_forms() {
        let v = generated_fixture();
        for m in crate::engine::members(&v, 40).unwrap().members {
            assert_eq!(
                minimal_system_by_removal(&v, &m).unwrap(),
                minimal_rsystem(&v, &m).unwrap(),
                "{m}"
            );
        }
        let iv = RVariety::interval(sg(&[5, 6]), sg(&[5, 6, 7])).unwrap();
        for m in crate::engine::members(&iv, 40).unwrap().members {
            assert_eq!(
                minimal_system_by_removal(&iv, &m).unwrap(),
                minimal_rsystem(&iv, &m).unwrap()
            );
        }
    }

    #[test]
    fn chain_variety_ranges() {
        // C(S, T) as a generated variety with F = {S}.
        let s = sg(&[5, 6]);
        let t = sg(&[5, 6, 7]);
        let v = RVariety::generated(vec![s.clone()], t.clone()).unwrap();
        let chain = chain_to(&s, &t).unwrap();
        assert_eq!(rrange(&v, &chain.links[0]).unwrap(), 0);
        for (i, link) in chain.links.iter().enumerate().skip(1) {
            assert_eq!(
                minimal_rsystem(&v, link).unwrap(),
                vec![chain.fill_values[i - 1]]
            );
        }
    }
}
