//! The tree `G(R)` of an R-variety and genus-level enumeration.
//!
//! Every member `S ≠ Δ` has the parent `S ∪ {F_Δ(S)}`. The children of `S`
//! are obtained by removing the elements of its minimal system that exceed
//! `F_Δ(S)` (with `F_Δ(Δ) = -1`), so the whole variety can be grown from
//! the root without a membership search.

use std::collections::BTreeSet;
use std::fmt;

use super::variety::RFamily;
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// A vertex of `G(R)` together with its subtree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeNode {
    pub semigroup: NumericalSemigroup,
    /// `F_Δ(S)`, or -1 at the root.
    pub restricted_frobenius: i64,
    pub minimal_system: Vec<u64>,
    /// Sorted by the removed element, ascending.
    pub children: Vec<TreeNode>,
}

impl TreeNode {
    /// The root `Δ` without children.
    pub fn root<F: RFamily + ?Sized>(family: &F) -> Result<Self> {
        let delta = family.delta().clone();
        Ok(Self {
            minimal_system: family.minimal_system(&delta)?,
            semigroup: delta,
            restricted_frobenius: -1,
            children: Vec::new(),
        })
    }

    /// Elements whose removal yields a child.
    pub fn branching(&self) -> impl Iterator<Item = u64> + '_ {
        let f = self.restricted_frobenius;
        self.minimal_system
            .iter()
            .copied()
            .filter(move |&x| x as i64 > f)
    }

    pub fn genus(&self) -> u64 {
        self.semigroup.genus()
    }

    /// Number of vertices in the subtree.
    pub fn len(&self) -> usize {
        1 + self.children.iter().map(TreeNode::len).sum::<usize>()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Vertices in depth-first preorder with their depth.
    pub fn preorder(&self) -> Vec<(usize, &TreeNode)> {
        let mut out = Vec::new();
        let mut stack = vec![(0usize, self)];
        while let Some((depth, node)) = stack.pop() {
            out.push((depth, node));
            for child in node.children.iter().rev() {
                stack.push((depth + 1, child));
            }
        }
        out
    }

    pub fn vertices(&self) -> BTreeSet<NumericalSemigroup> {
        self.preorder()
            .into_iter()
            .map(|(_, n)| n.semigroup.clone())
            .collect()
    }

    /// `(child, parent)` pairs, following the direction of adjunction.
    pub fn edges(&self) -> Vec<(&NumericalSemigroup, &NumericalSemigroup)> {
        let mut out = Vec::new();
        for (_, node) in self.preorder() {
            for child in &node.children {
                out.push((&child.semigroup, &node.semigroup));
            }
        }
        out
    }

    /// Looks up the vertex holding `s`.
    pub fn find(&self, s: &NumericalSemigroup) -> Option<&TreeNode> {
        self.preorder()
            .into_iter()
            .map(|(_, n)| n)
            .find(|n| &n.semigroup == s)
    }
}

/// The children of `node`, each with its own minimal system but no
/// grandchildren.
pub fn children<F: RFamily + ?Sized>(family: &F, node: &TreeNode) -> Result<Vec<TreeNode>> {
    let mut out = Vec::new();
    for x in node.branching() {
        let child = node.semigroup.remove_element(x)?;
        out.push(TreeNode {
            minimal_system: family.minimal_system(&child)?,
            semigroup: child,
            restricted_frobenius: x as i64,
            children: Vec::new(),
        });
    }
    if cfg!(debug_assertions) {
        let by_membership =
            children_by_membership(family, &node.semigroup, node.restricted_frobenius)?;
        let by_system: Vec<_> = out.iter().map(|c| c.semigroup.clone()).collect();
        if by_membership != by_system {
            return Err(Error::Invariant(format!(
                "children of {} disagree: {by_system:?} vs {by_membership:?}",
                node.semigroup
            )));
        }
    }
    Ok(out)
}

/// The children of `s` computed by filtering `S ∖ {x}` for `x ∈ msg(S)`,
/// `x > F_Δ(S)` through the membership test. Same order as [`children`].
pub fn children_by_membership<F: RFamily + ?Sized>(
    family: &F,
    s: &NumericalSemigroup,
    restricted_frobenius: i64,
) -> Result<Vec<NumericalSemigroup>> {
    let mut out = Vec::new();
    for &x in s.msg() {
        if x as i64 <= restricted_frobenius {
            continue;
        }
        let candidate = s.remove_element(x)?;
        if family.contains(&candidate) {
            out.push(candidate);
        }
    }
    Ok(out)
}

/// `G(R)` truncated to members of genus at most `genus_bound`. The root is
/// always present.
pub fn build_tree<F: RFamily + ?Sized>(family: &F, genus_bound: u64) -> Result<TreeNode> {
    fn grow<F: RFamily + ?Sized>(family: &F, node: &mut TreeNode, bound: u64) -> Result<()> {
        if node.genus() >= bound {
            return Ok(());
        }
        node.children = children(family, node)?;
        for child in &mut node.children {
            grow(family, child, bound)?;
        }
        Ok(())
    }
    let mut root = TreeNode::root(family)?;
    grow(family, &mut root, genus_bound)?;
    Ok(root)
}

/// Members found up to a genus bound. `complete` is false when some member
/// at the bound still had children, i.e. the listing was cut short.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    pub members: BTreeSet<NumericalSemigroup>,
    pub complete: bool,
}

pub fn members<F: RFamily + ?Sized>(family: &F, genus_bound: u64) -> Result<Enumeration> {
    let mut found = BTreeSet::new();
    let mut complete = true;
    let mut stack = vec![TreeNode::root(family)?];
    while let Some(node) = stack.pop() {
        if node.genus() >= genus_bound {
            if node.branching().next().is_some() {
                complete = false;
            }
        } else {
            stack.extend(children(family, &node)?);
        }
        found.insert(node.semigroup);
    }
    Ok(Enumeration {
        members: found,
        complete,
    })
}

/// One pass of the genus-level algorithm: the current level and, for each
/// of its semigroups, the elements `B_S` whose removal leads to the next.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelStep {
    pub genus: u64,
    pub semigroups: Vec<NumericalSemigroup>,
    pub branching: Vec<Vec<u64>>,
}

/// Runs the genus-level algorithm and records every level it visits. The
/// last step is the answer when its genus equals `g`; otherwise the answer
/// is empty.
pub fn genus_level_trace<F: RFamily + ?Sized>(family: &F, g: u64) -> Result<Vec<LevelStep>> {
    let delta = family.delta();
    let mut steps = Vec::new();
    if g < delta.genus() {
        return Ok(steps);
    }
    let mut level = vec![TreeNode::root(family)?];
    let mut i = delta.genus();
    loop {
        let mut step = LevelStep {
            genus: i,
            semigroups: level.iter().map(|n| n.semigroup.clone()).collect(),
            branching: Vec::new(),
        };
        if i == g {
            steps.push(step);
            return Ok(steps);
        }
        step.branching = level.iter().map(|n| n.branching().collect()).collect();
        let exhausted = step.branching.iter().all(Vec::is_empty);
        steps.push(step);
        if exhausted {
            return Ok(steps);
        }
        let mut next = Vec::new();
        for node in &level {
            for x in node.branching() {
                let child = node.semigroup.remove_element(x)?;
                next.push(TreeNode {
                    minimal_system: family.minimal_system(&child)?,
                    semigroup: child,
                    restricted_frobenius: x as i64,
                    children: Vec::new(),
                });
            }
        }
        level = next;
        i += 1;
    }
}

/// `{S ∈ R | g(S) = g}`.
pub fn genus_level<F: RFamily + ?Sized>(
    family: &F,
    g: u64,
) -> Result<BTreeSet<NumericalSemigroup>> {
    let steps = genus_level_trace(family, g)?;
    Ok(match steps.last() {
        Some(step) if step.genus == g => step.semigroups.iter().cloned().collect(),
        _ => BTreeSet::new(),
    })
}

/// An R-variety is a variety exactly when it contains `ℕ`.
pub fn is_variety<F: RFamily + ?Sized>(family: &F) -> bool {
    family.delta().is_natural()
}

/// Whether `F(S) ∈ Δ` for every member `S ≠ Δ`.
///
/// A counterexample within the bound is conclusive. Without one, the answer
/// is only given when every member has genus at most `genus_bound`;
/// otherwise [`Error::InfiniteVariety`] is returned.
pub fn is_pseudo_variety<F: RFamily + ?Sized>(family: &F, genus_bound: u64) -> Result<bool> {
    if is_variety(family) {
        return Ok(true);
    }
    let delta = family.delta();
    let found = members(family, genus_bound)?;
    let violated = found
        .members
        .iter()
        .filter(|s| *s != delta)
        .any(|s| !delta.contains(s.frobenius() as u64));
    match (violated, found.complete) {
        (true, _) => Ok(false),
        (false, true) => Ok(true),
        (false, false) => Err(Error::InfiniteVariety { bound: genus_bound }),
    }
}

/// `{S ∩ U | S ∈ R, g(S) ≤ genus_bound}`. When the enumeration of `R` is
/// complete the result is checked against the R-variety axioms.
pub fn restrict_variety<F: RFamily + ?Sized>(
    family: &F,
    u: &NumericalSemigroup,
    genus_bound: u64,
) -> Result<Enumeration> {
    let found = members(family, genus_bound)?;
    let restricted: BTreeSet<_> = found.members.iter().map(|s| s.intersect(u)).collect();
    if found.complete {
        check_axioms(&restricted).map_err(|v| Error::Invariant(v.to_string()))?;
    }
    Ok(Enumeration {
        members: restricted,
        complete: found.complete,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomViolation {
    Empty,
    NoMaximum,
    NotClosedUnderIntersection(NumericalSemigroup, NumericalSemigroup),
    MissingAdjunction(NumericalSemigroup),
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::Empty => f.write_str("family is empty"),
            AxiomViolation::NoMaximum => f.write_str("family has no maximum"),
            AxiomViolation::NotClosedUnderIntersection(a, b) => {
                write!(f, "{a} ∩ {b} is missing")
            }
            AxiomViolation::MissingAdjunction(s) => {
                write!(f, "{s} ∪ {{F_Δ({s})}} is missing")
            }
        }
    }
}

/// Checks the three R-variety axioms on a finite family.
#[allow(clippy::result_large_err)]
pub fn check_axioms(family: &BTreeSet<NumericalSemigroup>) -> Result<(), AxiomViolation> {
    let top = family
        .iter()
        .min_by_key(|s| s.genus())
        .ok_or(AxiomViolation::Empty)?;
    if !family.iter().all(|s| s.is_subset(top)) {
        return Err(AxiomViolation::NoMaximum);
    }
    let items: Vec<_> = family.iter().collect();
    for (i, a) in items.iter().enumerate() {
        for b in &items[i + 1..] {
            if !family.contains(&a.intersect(b)) {
                return Err(AxiomViolation::NotClosedUnderIntersection(
                    (*a).clone(),
                    (*b).clone(),
                ));
            }
        }
    }
    for s in family.iter().filter(|s| *s != top) {
        let f = s
            .restricted_frobenius(top)
            .map_err(|_| AxiomViolation::NoMaximum)?;
        let parent = s
            .add_element(f)
            .map_err(|_| AxiomViolation::MissingAdjunction(s.clone()))?;
        if !family.contains(&parent) {
            return Err(AxiomViolation::MissingAdjunction(s.clone()));
        }
    }
    Ok(())
}
