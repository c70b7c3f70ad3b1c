//! LD- and PL-semigroup closures.
//!
//! An LD-semigroup is closed under `a + b - 1`, a PL-semigroup under
//! `a + b + 1`, for nonzero members `a, b`. Both families are varieties, so
//! every set generates a smallest closed semigroup, and restricting to a
//! semigroup `T` gives the R-variety `{S ∩ T}`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClosureKind {
    Ld,
    Pl,
}

impl ClosureKind {
    /// The extra operation applied to nonzero `a, b`.
    pub fn combine(self, a: u64, b: u64) -> u64 {
        match self {
            ClosureKind::Ld => a + b - 1,
            ClosureKind::Pl => a + b + 1,
        }
    }
}

impl fmt::Display for ClosureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClosureKind::Ld => "ld",
            ClosureKind::Pl => "pl",
        })
    }
}

impl FromStr for ClosureKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "ld" => Ok(ClosureKind::Ld),
            "pl" => Ok(ClosureKind::Pl),
            _ => Err(Error::parse(s, "expected ld or pl")),
        }
    }
}

const MAX_DOUBLINGS: u32 = 3;

/// The smallest `kind`-closed numerical semigroup containing `a`.
pub fn variety_closure(kind: ClosureKind, a: &[u64]) -> Result<NumericalSemigroup> {
    let mut gens: Vec<u64> = a.iter().copied().filter(|&x| x != 0).collect();
    gens.sort_unstable();
    gens.dedup();
    let Some(&max) = gens.last() else {
        return Err(Error::EmptyGenerators);
    };
    let mut bound = max
        .checked_mul(max)
        .and_then(|m| m.checked_mul(2))
        .ok_or(Error::Overflow("closure bound"))?
        .max(4);
    for _ in 0..=MAX_DOUBLINGS {
        if let Some(s) = saturate(kind, &gens, bound)? {
            debug_assert!(is_closed(kind, &s));
            return Ok(s);
        }
        bound = bound
            .checked_mul(2)
            .ok_or(Error::Overflow("closure bound"))?;
    }
    Err(Error::NotCofinite { gcd: 1 })
}

/// Ascending sieve: every operation yields a value at least as large as
/// its operands, so membership of `n` only depends on smaller members.
/// Returns `None` if no run of `multiplicity` consecutive members appears
/// past the generators before `bound`.
fn saturate(kind: ClosureKind, gens: &[u64], bound: u64) -> Result<Option<NumericalSemigroup>> {
    if bound > crate::semigroup::MAX_CONDUCTOR {
        return Err(Error::ConductorTooLarge {
            bound,
            limit: crate::semigroup::MAX_CONDUCTOR,
        });
    }
    let max = *gens.last().expect("nonempty");
    let mut bits = vec![true];
    let mut members: Vec<u64> = Vec::new();
    let mut run = 0u64;
    for n in 1..=bound {
        let member = gens.binary_search(&n).is_ok()
            || members.iter().any(|&a| {
                let sum = n.checked_sub(a).filter(|&b| b > 0 && bits[b as usize]);
                let extra = match kind {
                    ClosureKind::Ld => Some(n + 1 - a),
                    ClosureKind::Pl => n.checked_sub(a + 1),
                }
                .filter(|&b| b > 0 && b < n && bits[b as usize]);
                sum.is_some() || extra.is_some()
            });
        bits.push(member);
        if member {
            members.push(n);
            run += 1;
            if n >= max && run >= members[0] {
                let len = bits.len() - run as usize;
                bits.truncate(len);
                return Ok(Some(NumericalSemigroup::from_membership(bits)));
            }
        } else {
            run = 0;
        }
    }
    Ok(None)
}

/// Whether `s` is closed under the kind's operation.
pub fn is_closed(kind: ClosureKind, s: &NumericalSemigroup) -> bool {
    let small = &s.small_elements()[1..];
    small.iter().all(|&a| {
        small
            .iter()
            .take_while(|&&b| b <= a)
            .all(|&b| s.contains(kind.combine(a, b)))
    })
}

/// `V(a) ∩ t`, the smallest member of the restricted variety containing `a`.
pub fn restricted_closure(
    kind: ClosureKind,
    a: &[u64],
    t: &NumericalSemigroup,
) -> Result<NumericalSemigroup> {
    if let Some(&x) = a.iter().find(|&&x| !t.contains(x)) {
        return Err(Error::not_contained(x, t));
    }
    Ok(variety_closure(kind, a)?.intersect(t))
}

/// The minimal V-system of generators of a `kind`-closed semigroup.
///
/// `msg(m)` generates `m` and minimal systems are unique, so dropping every
/// redundant element of `msg(m)` in turn reaches it.
pub fn minimal_vsystem(kind: ClosureKind, m: &NumericalSemigroup) -> Result<Vec<u64>> {
    if !is_closed(kind, m) {
        return Err(Error::NotKindClosed(format!("{m} is not {kind}-closed")));
    }
    let mut system = m.msg().to_vec();
    let mut i = 0;
    while i < system.len() {
        let mut rest = system.clone();
        rest.remove(i);
        if !rest.is_empty() && &variety_closure(kind, &rest)? == m {
            system = rest;
        } else {
            i += 1;
        }
    }
    Ok(system)
}
