//! R-variety descriptors, the tree `G(R)`, genus-level enumeration and
//! descendant subvarieties.

mod descendants;
mod tree;
mod variety;

pub use descendants::{descendants, Descendants};
pub use tree::{
    build_tree, check_axioms, children, children_by_membership, genus_level, genus_level_trace,
    is_pseudo_variety, is_variety, members, restrict_variety, AxiomViolation, Enumeration,
    LevelStep, TreeNode,
};
pub use variety::{Descriptor, RFamily, RVariety};
