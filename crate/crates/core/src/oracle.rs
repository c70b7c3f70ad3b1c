//! Brute-force reference implementations.
//!
//! These deliberately avoid the tree machinery: enumeration removes any
//! minimal generator and deduplicates, and R-monoids are intersections over
//! an explicit member list. Agreement with the engine is therefore real
//! evidence rather than a tautology.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::chains::{minimal_system_by_removal, rrange};
use crate::engine::{check_axioms, members, Descriptor, RFamily, RVariety};
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// Lower end of an enumeration window: a semigroup or a bare element set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Lower {
    Semigroup(NumericalSemigroup),
    Elements(Vec<u64>),
}

impl Lower {
    fn contains(&self, x: u64) -> bool {
        match self {
            Lower::Semigroup(s) => s.contains(x),
            Lower::Elements(xs) => x == 0 || xs.contains(&x),
        }
    }
}

/// Every semigroup `S` with `lo ⊆ S ⊆ hi` and genus at most `genus_bound`.
pub fn enumerate_between(
    lo: &Lower,
    hi: &NumericalSemigroup,
    genus_bound: u64,
) -> Result<BTreeSet<NumericalSemigroup>> {
    match lo {
        Lower::Semigroup(s) if !s.is_subset(hi) => return Err(Error::not_contained(s, hi)),
        Lower::Elements(xs) => {
            if let Some(&x) = xs.iter().find(|&&x| !hi.contains(x)) {
                return Err(Error::not_contained(x, hi));
            }
        }
        _ => {}
    }
    let mut seen = HashSet::new();
    let mut stack = Vec::new();
    if hi.genus() <= genus_bound {
        seen.insert(hi.clone());
        stack.push(hi.clone());
    }
    while let Some(s) = stack.pop() {
        if s.genus() >= genus_bound {
            continue;
        }
        for &x in s.msg() {
            if lo.contains(x) {
                continue;
            }
            let child = s.remove_element(x)?;
            if seen.insert(child.clone()) {
                stack.push(child);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// `⋂{M ∈ members | a ⊆ M}`.
pub fn smallest_containing<'a>(
    members: impl IntoIterator<Item = &'a NumericalSemigroup>,
    a: &[u64],
) -> Result<NumericalSemigroup> {
    members
        .into_iter()
        .filter(|m| a.iter().all(|&x| m.contains(x)))
        .fold(None, |acc: Option<NumericalSemigroup>, m| {
            Some(match acc {
                Some(acc) => acc.intersect(m),
                None => m.clone(),
            })
        })
        .ok_or(Error::NoContainingElement)
}

/// Intersections of all nonempty subfamilies of `sets`.
pub fn subset_intersections(sets: &[NumericalSemigroup]) -> BTreeSet<NumericalSemigroup> {
    let mut out = BTreeSet::new();
    for s in sets {
        let extended: Vec<_> = out
            .iter()
            .map(|t: &NumericalSemigroup| t.intersect(s))
            .collect();
        out.extend(extended);
        out.insert(s.clone());
    }
    out
}

/// The worked finite examples, by name.
pub fn fixtures() -> Vec<(&'static str, RVariety)> {
    let sg = |g: &[u64]| NumericalSemigroup::from_generators(g).expect("fixture");
    let family = |gs: &[&[u64]]| gs.iter().map(|g| sg(g)).collect::<Vec<_>>();
    vec![
        (
            "interval <5,6>:<5,6,7>",
            RVariety::interval(sg(&[5, 6]), sg(&[5, 6, 7])).expect("fixture"),
        ),
        (
            "generated <5,7,9,11,13>;<4,10,11,13>:<4,5,7>",
            RVariety::generated(
                family(&[&[5, 7, 9, 11, 13], &[4, 10, 11, 13]]),
                sg(&[4, 5, 7]),
            )
            .expect("fixture"),
        ),
        (
            "pseudo-variety over <5,6,8,9>",
            RVariety::generated(
                family(&[
                    &[5, 6, 8, 9],
                    &[5, 6, 9, 13],
                    &[5, 6, 8],
                    &[5, 6, 13, 14],
                    &[5, 6, 9],
                    &[5, 6, 14],
                    &[5, 6, 13],
                    &[5, 6, 19],
                    &[5, 6],
                ]),
                sg(&[5, 6, 8, 9]),
            )
            .expect("fixture"),
        ),
        (
            "restricted 5,7:<4,5,7>",
            RVariety::restricted([5, 7], sg(&[4, 5, 7])).expect("fixture"),
        ),
    ]
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn record(&mut self, name: String, passed: bool, detail: String) {
        self.checks.push(Check {
            name,
            passed,
            detail,
        });
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = if c.passed { "ok  " } else { "FAIL" };
            write!(f, "{tag} {}", c.name)?;
            if !c.detail.is_empty() {
                write!(f, ": {}", c.detail)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Compares the engine against the oracles on one variety.
pub fn verify_variety(
    name: &str,
    variety: &RVariety,
    genus_bound: u64,
    report: &mut Report,
) -> Result<()> {
    let found = members(variety, genus_bound)?;
    let count = found.members.len();

    let window = match variety.descriptor() {
        Descriptor::Interval { lo, hi } => Some((Lower::Semigroup(lo.clone()), hi)),
        Descriptor::Restricted { required, ambient } => {
            Some((Lower::Elements(required.clone()), ambient))
        }
        Descriptor::Generated { .. } => None,
    };
    if let Some((lo, hi)) = window {
        let oracle = enumerate_between(&lo, hi, genus_bound)?;
        let same = oracle == found.members;
        report.record(
            format!("{name}: tree = enumeration"),
            same,
            format!("{count} vs {} members", oracle.len()),
        );
    }

    if let Descriptor::Generated { .. } = variety.descriptor() {
        if found.complete {
            let closure = subset_intersections(variety.chain_members());
            report.record(
                format!("{name}: members = intersections of chains"),
                closure == found.members,
                format!("{count} vs {}", closure.len()),
            );
        }
    }

    if !found.complete {
        report.record(
            format!("{name}: enumeration"),
            true,
            format!("truncated at genus {genus_bound}; finite-variety checks skipped"),
        );
        return Ok(());
    }

    let axioms = check_axioms(&found.members);
    report.record(
        format!("{name}: axioms"),
        axioms.is_ok(),
        axioms.err().map(|v| v.to_string()).unwrap_or_default(),
    );

    let mut bad = Vec::new();
    for m in &found.members {
        let system = variety.minimal_system(m)?;
        if smallest_containing(&found.members, &system)? != *m
            || variety.generated_monoid(&system)? != *m
            || minimal_system_by_removal(variety, m)? != system
        {
            bad.push(m.to_string());
        }
    }
    report.record(
        format!("{name}: minimal systems"),
        bad.is_empty(),
        bad.join(" "),
    );

    if let Descriptor::Generated { family, .. } = variety.descriptor() {
        let mut over = Vec::new();
        for m in &found.members {
            if rrange(variety, m)? > family.len() {
                over.push(m.to_string());
            }
        }
        report.record(
            format!("{name}: range bounded by family size"),
            over.is_empty(),
            over.join(" "),
        );
    }
    Ok(())
}

/// Runs [`verify_variety`] on `variety`, or on every fixture when none is
/// given.
pub fn verify(variety: Option<&RVariety>, genus_bound: u64) -> Result<Report> {
    let mut report = Report::default();
    match variety {
        Some(v) => verify_variety(&v.to_string(), v, genus_bound, &mut report)?,
        None => {
            for (name, v) in fixtures() {
                verify_variety(name, &v, genus_bound, &mut report)?;
            }
        }
    }
    Ok(report)
}
