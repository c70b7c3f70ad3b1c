//! R-varieties of numerical semigroups.
//!
//! A numerical semigroup is stored by its elements up to the conductor.
//! On top of that sit restricted Frobenius numbers and chains, the three
//! R-variety descriptor families (intervals, `R(A, T)` and families
//! generated by a finite set), the tree of an R-variety with genus-level
//! enumeration, LD/PL closures, and brute-force oracles for all of it.
//!
//! ```
//! use rvariety::{build_tree, NumericalSemigroup, RVariety};
//!
//! let lo: NumericalSemigroup = "<5,6>".parse().unwrap();
//! let hi: NumericalSemigroup = "<5,6,7>".parse().unwrap();
//! let v = RVariety::interval(lo, hi).unwrap();
//! assert_eq!(build_tree(&v, 40).unwrap().len(), 6);
//! ```

pub mod chains;
pub mod closures;
pub mod engine;
mod error;
pub mod oracle;
pub mod parse;
mod semigroup;

pub use chains::{chain_family, chain_to, minimal_rsystem, rmonoid_generated, rrange, Chain};
pub use closures::{minimal_vsystem, restricted_closure, variety_closure, ClosureKind};
pub use engine::{
    build_tree, descendants, genus_level, genus_level_trace, is_pseudo_variety, is_variety,
    members, restrict_variety, Descriptor, Enumeration, RFamily, RVariety, TreeNode,
};
pub use error::{Error, Result};
pub use semigroup::{gcd_all, NumericalSemigroup, MAX_CONDUCTOR};
