//! Numerical semigroups stored by their small elements.
//!
//! A numerical semigroup `S` is kept as the sorted list of its members that
//! do not exceed the conductor `c = F(S) + 1`. Everything from `c` upwards is
//! implicitly a member. The representation is canonical: `c - 1` is never a
//! member, so two semigroups are equal exactly when their lists are equal.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Largest conductor the sieve-based constructors will materialize.
pub const MAX_CONDUCTOR: u64 = 1 << 24;

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// gcd of a list; 0 for the empty list.
pub fn gcd_all(values: &[u64]) -> u64 {
    values.iter().fold(0, |acc, &v| gcd(acc, v))
}

#[derive(Clone)]
pub struct NumericalSemigroup {
    small: Vec<u64>,
    conductor: u64,
    msg: OnceLock<Vec<u64>>,
}

impl NumericalSemigroup {
    /// The semigroup `ℕ` itself.
    pub fn natural() -> Self {
        Self {
            small: vec![0],
            conductor: 0,
            msg: OnceLock::new(),
        }
    }

    /// Builds `⟨gens⟩`. The generators need not be sorted or minimal.
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if gens.contains(&0) {
            return Err(Error::ZeroGenerator);
        }
        let d = gcd_all(gens);
        if d != 1 {
            return Err(Error::GcdNotOne { gcd: d });
        }
        let mut gens = gens.to_vec();
        gens.sort_unstable();
        gens.dedup();
        let smallest = gens[0];
        if smallest == 1 {
            return Ok(Self::natural());
        }
        // Every integer >= (a_min - 1)(a_max - 1) is representable.
        let largest = *gens.last().expect("nonempty");
        let bound = (smallest - 1)
            .checked_mul(largest - 1)
            .ok_or(Error::Overflow("conductor bound"))?;
        if bound > MAX_CONDUCTOR {
            return Err(Error::ConductorTooLarge {
                bound,
                limit: MAX_CONDUCTOR,
            });
        }
        let len = bound as usize;
        let mut bits = vec![false; len];
        if len > 0 {
            bits[0] = true;
        }
        for x in 1..len {
            bits[x] = gens
                .iter()
                .take_while(|&&g| g as usize <= x)
                .any(|&g| bits[x - g as usize]);
        }
        Ok(Self::from_membership(bits))
    }

    /// Builds a semigroup from a list of members where the last entry `L`
    /// stands for `L` and every larger integer. Non-canonical lists (where
    /// `L - 1` is also listed) are accepted and canonicalized.
    pub fn from_small_elements(elements: &[u64]) -> Result<Self> {
        if elements.first() != Some(&0) {
            return Err(Error::parse(
                format!("{elements:?}"),
                "small elements must start with 0",
            ));
        }
        if elements.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::parse(
                format!("{elements:?}"),
                "small elements must be strictly increasing",
            ));
        }
        let last = *elements.last().expect("nonempty");
        if last > MAX_CONDUCTOR {
            return Err(Error::ConductorTooLarge {
                bound: last,
                limit: MAX_CONDUCTOR,
            });
        }
        let mut bits = vec![false; last as usize];
        for &e in &elements[..elements.len() - 1] {
            bits[e as usize] = true;
        }
        let member = |x: u64| x >= last || bits[x as usize];
        for (i, &a) in elements.iter().enumerate().skip(1) {
            for &b in &elements[i..] {
                let sum = a + b;
                if sum >= last {
                    break;
                }
                if !member(sum) {
                    return Err(Error::NotClosed {
                        element: a,
                        witness: sum,
                    });
                }
            }
        }
        Ok(Self::from_membership(bits))
    }

    /// `bits[i]` tells whether `i` is a member for `i < bits.len()`; all
    /// larger integers are members. `bits[0]` must be set when nonempty.
    pub(crate) fn from_membership(bits: Vec<bool>) -> Self {
        let mut conductor = bits.len();
        while conductor > 0 && bits[conductor - 1] {
            conductor -= 1;
        }
        let mut small: Vec<u64> = (0..conductor)
            .filter(|&i| bits[i])
            .map(|i| i as u64)
            .collect();
        if conductor > 0 {
            small.push(conductor as u64);
        } else {
            small = vec![0];
        }
        Self {
            small,
            conductor: conductor as u64,
            msg: OnceLock::new(),
        }
    }

    /// Membership flags for `0..len`.
    pub(crate) fn membership(&self, len: u64) -> Vec<bool> {
        let mut bits = vec![false; len as usize];
        for (i, bit) in bits.iter_mut().enumerate() {
            *bit = self.contains(i as u64);
        }
        bits
    }

    pub fn contains(&self, x: u64) -> bool {
        x >= self.conductor || self.small.binary_search(&x).is_ok()
    }

    /// Members not exceeding the conductor, increasing. Always starts with 0.
    pub fn small_elements(&self) -> &[u64] {
        &self.small
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Largest gap, or -1 for `ℕ`.
    pub fn frobenius(&self) -> i64 {
        self.conductor as i64 - 1
    }

    pub fn genus(&self) -> u64 {
        if self.conductor == 0 {
            0
        } else {
            self.conductor - (self.small.len() as u64 - 1)
        }
    }

    /// Smallest positive member.
    pub fn multiplicity(&self) -> u64 {
        if self.conductor == 0 {
            1
        } else {
            self.small[1]
        }
    }

    pub fn is_natural(&self) -> bool {
        self.conductor == 0
    }

    pub fn gaps(&self) -> Vec<u64> {
        (1..self.conductor).filter(|&x| !self.contains(x)).collect()
    }

    /// Members `x` with `x < bound`, increasing.
    pub fn elements_below(&self, bound: u64) -> impl Iterator<Item = u64> + '_ {
        (0..bound).filter(move |&x| self.contains(x))
    }

    /// The minimal system of generators, strictly increasing.
    pub fn msg(&self) -> &[u64] {
        self.msg.get_or_init(|| self.compute_msg())
    }

    fn compute_msg(&self) -> Vec<u64> {
        if self.is_natural() {
            return vec![1];
        }
        // Minimal generators lie below conductor + multiplicity.
        let upper = self.conductor + self.multiplicity();
        let members: Vec<u64> = self.elements_below(upper).skip(1).collect();
        members
            .iter()
            .copied()
            .filter(|&x| {
                !members
                    .iter()
                    .take_while(|&&a| 2 * a <= x)
                    .any(|&a| self.contains(x - a))
            })
            .collect()
    }

    pub fn embedding_dimension(&self) -> usize {
        self.msg().len()
    }

    /// `true` iff every element of `self` lies in `other`.
    pub fn is_subset(&self, other: &Self) -> bool {
        other.conductor <= self.conductor && self.small.iter().all(|&x| other.contains(x))
    }

    pub fn intersect(&self, other: &Self) -> Self {
        let len = self.conductor.max(other.conductor);
        let bits = (0..len)
            .map(|x| self.contains(x) && other.contains(x))
            .collect();
        Self::from_membership(bits)
    }

    /// `S ∖ {x}` for a minimal generator `x`.
    pub fn remove_element(&self, x: u64) -> Result<Self> {
        if !self.contains(x) {
            return Err(Error::NotMember(x));
        }
        if self.msg().binary_search(&x).is_err() {
            return Err(Error::NotMinimalGenerator(x));
        }
        let len = self.conductor.max(x + 1);
        let mut bits = self.membership(len);
        bits[x as usize] = false;
        Ok(Self::from_membership(bits))
    }

    /// `S ∪ {x}`, checking that the result is closed under addition.
    pub fn add_element(&self, x: u64) -> Result<Self> {
        if self.contains(x) {
            return Err(Error::AlreadyMember(x));
        }
        // x is a gap, so x < conductor and no sum below overflows.
        let doubled = 2 * x;
        if !self.contains(doubled) {
            return Err(Error::NotClosed {
                element: x,
                witness: doubled,
            });
        }
        for &s in self.small.iter().skip(1) {
            let sum = s + x;
            if sum >= self.conductor {
                break;
            }
            if !self.contains(sum) {
                return Err(Error::NotClosed {
                    element: x,
                    witness: sum,
                });
            }
        }
        let mut bits = self.membership(self.conductor);
        bits[x as usize] = true;
        Ok(Self::from_membership(bits))
    }

    /// `F_T(S) = max(T ∖ S)` for `S ⊊ T`.
    pub fn restricted_frobenius(&self, ambient: &Self) -> Result<u64> {
        if !self.is_subset(ambient) {
            return Err(Error::not_contained(self, ambient));
        }
        if self == ambient {
            return Err(Error::Equal);
        }
        (0..self.conductor)
            .rev()
            .find(|&x| ambient.contains(x) && !self.contains(x))
            .ok_or_else(|| Error::Invariant("proper subset with empty difference".into()))
    }

    /// `S ∪ {x ∈ T | x ≥ n}` for `S ⊆ T`; again a numerical semigroup.
    pub fn with_tail_of(&self, ambient: &Self, n: u64) -> Result<Self> {
        if !self.is_subset(ambient) {
            return Err(Error::not_contained(self, ambient));
        }
        if n >= self.conductor {
            return Ok(self.clone());
        }
        let bits = (0..self.conductor)
            .map(|x| self.contains(x) || (x >= n && ambient.contains(x)))
            .collect();
        Ok(Self::from_membership(bits))
    }

    /// `F_T(S)` with the convention `F_T(T) = -1`.
    pub fn restricted_frobenius_or_root(&self, ambient: &Self) -> Result<i64> {
        match self.restricted_frobenius(ambient) {
            Ok(f) => Ok(f as i64),
            Err(Error::Equal) => Ok(-1),
            Err(e) => Err(e),
        }
    }
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.small == other.small
    }
}

impl Eq for NumericalSemigroup {}

impl Hash for NumericalSemigroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.small.hash(state);
    }
}

impl PartialOrd for NumericalSemigroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order on the small-element lists. Used only to make set
/// iteration deterministic.
impl Ord for NumericalSemigroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.small.cmp(&other.small)
    }
}

/// Writes `⟨msg⟩` in the ASCII form `<a,b,c>`.
impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, g) in self.msg().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(">")
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericalSemigroup({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    /// Membership of `⟨gens⟩` by brute-force sums, up to `limit`.
    fn sieve(gens: &[u64], limit: u64) -> Vec<bool> {
        let mut member = vec![false; limit as usize + 1];
        member[0] = true;
        let mut frontier = vec![0u64];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = x + g;
                if y <= limit && !member[y as usize] {
                    member[y as usize] = true;
                    frontier.push(y);
                }
            }
        }
        member
    }

    #[test]
    fn one_generates_naturals() {
        let n = sg(&[1]);
        assert!(n.is_natural());
        assert_eq!(n.small_elements(), &[0]);
        assert_eq!(n.conductor(), 0);
        assert_eq!(n.frobenius(), -1);
        assert_eq!(n.genus(), 0);
        assert_eq!(n.msg(), &[1]);
        assert_eq!(n, NumericalSemigroup::natural());
    }

    #[test]
    fn five_six_seven_matches_sieve() {
        let s = sg(&[5, 6, 7]);
        let oracle = sieve(&[5, 6, 7], 70);
        for x in 0..=70u64 {
            assert_eq!(s.contains(x), oracle[x as usize], "x = {x}");
        }
        assert_eq!(s.frobenius(), 9);
        assert_eq!(s.gaps(), vec![1, 2, 3, 4, 8, 9]);
        assert!(s.contains(0));
        assert!(s.contains(100));
    }

    #[test]
    fn four_six_seven() {
        let s = sg(&[4, 6, 7]);
        assert_eq!(s.small_elements(), &[0, 4, 6, 7, 8, 10]);
        assert_eq!(s.genus(), 5);
        assert!(!s.contains(9));
        assert_eq!(sg(&[4, 6, 13]).genus(), 8);
    }

    #[test]
    fn constructor_errors() {
        assert_eq!(
            NumericalSemigroup::from_generators(&[]),
            Err(Error::EmptyGenerators)
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&[4, 6]),
            Err(Error::GcdNotOne { gcd: 2 })
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&[0, 3]),
            Err(Error::ZeroGenerator)
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&[(1 << 33) + 1, (1 << 33) + 2]),
            Err(Error::Overflow("conductor bound"))
        );
        assert!(matches!(
            NumericalSemigroup::from_generators(&[1 << 13, (1 << 13) + 1]),
            Err(Error::ConductorTooLarge { .. })
        ));
    }

    #[test]
    fn frobenius_examples() {
        let s = sg(&[5, 7, 9]).remove_element(5).unwrap();
        assert_eq!(s.frobenius(), 13);
        assert_eq!(sg(&[5, 6]).frobenius(), 19);
    }

    #[test]
    fn minimal_generators() {
        let s = sg(&[5, 6, 7]).remove_element(7).unwrap();
        assert_eq!(s.msg(), &[5, 6, 13, 14]);
        let s = sg(&[4, 5, 7]).remove_element(4).unwrap();
        assert_eq!(s.msg(), &[5, 7, 8, 9, 11]);
        assert_eq!(sg(&[10, 4, 6, 7, 4]).msg(), &[4, 6, 7]);
    }

    #[test]
    fn intersections() {
        let s = sg(&[5, 9, 13, 17, 21]);
        assert_eq!(s.intersect(&NumericalSemigroup::natural()), s);
        assert_eq!(s.intersect(&sg(&[5, 7, 9])), sg(&[5, 9, 17, 21]));
        assert_eq!(sg(&[4, 7, 9]).intersect(&sg(&[4, 7, 13])), sg(&[4, 7, 13]));
    }

    #[test]
    fn remove_element_cases() {
        assert_eq!(
            sg(&[5, 6, 13, 14]).remove_element(13).unwrap(),
            sg(&[5, 6, 14])
        );
        assert_eq!(
            sg(&[4, 6, 11, 13]).remove_element(11).unwrap(),
            sg(&[4, 6, 13, 15])
        );
        let s = sg(&[5, 6, 7]);
        let removed = s.remove_element(5).unwrap();
        // Set difference computed directly from the sieve.
        let oracle = sieve(&[5, 6, 7], 40);
        for x in 0..=40u64 {
            assert_eq!(removed.contains(x), oracle[x as usize] && x != 5);
        }
        assert_eq!(removed.genus(), s.genus() + 1);
        assert_eq!(s.remove_element(10), Err(Error::NotMinimalGenerator(10)));
        assert_eq!(s.remove_element(8), Err(Error::NotMember(8)));
    }

    #[test]
    fn add_element_cases() {
        assert_eq!(sg(&[5, 6]).add_element(19).unwrap(), sg(&[5, 6, 19]));
        let s = sg(&[5, 7, 9]).remove_element(5).unwrap();
        let grown = s.add_element(13).unwrap();
        assert!(grown.contains(13) && !grown.contains(5));
        assert!(matches!(
            sg(&[5, 6]).add_element(7),
            Err(Error::NotClosed { element: 7, .. })
        ));
        assert_eq!(sg(&[5, 6]).add_element(6), Err(Error::AlreadyMember(6)));
    }

    #[test]
    fn restricted_frobenius_examples() {
        let delta = sg(&[5, 6, 7]);
        assert_eq!(sg(&[5, 6, 13, 14]).restricted_frobenius(&delta), Ok(7));
        assert_eq!(sg(&[5, 6, 19]).restricted_frobenius(&delta), Ok(14));
        assert_eq!(
            sg(&[4, 9, 10, 11]).restricted_frobenius(&sg(&[4, 5, 7])),
            Ok(7)
        );
        assert_eq!(delta.restricted_frobenius(&delta), Err(Error::Equal));
        assert!(matches!(
            delta.restricted_frobenius(&sg(&[5, 6])),
            Err(Error::NotContained { .. })
        ));
        assert_eq!(delta.restricted_frobenius_or_root(&delta), Ok(-1));
    }

    #[test]
    fn subsets() {
        let s = sg(&[5, 6]);
        assert!(s.is_subset(&s));
        assert!(s.is_subset(&sg(&[5, 6, 7])));
        assert!(!sg(&[5, 6, 7]).is_subset(&s));
    }

    #[test]
    fn small_elements_round_trip() {
        let s = NumericalSemigroup::from_small_elements(&[0, 4, 6, 7, 8, 10]).unwrap();
        assert_eq!(s, sg(&[4, 6, 7]));
        // 9 listed as the tail start, 10 implied: canonicalizes down.
        let t = NumericalSemigroup::from_small_elements(&[0, 4, 6, 7, 8, 9]).unwrap();
        assert_eq!(t.conductor(), 6);
        assert!(matches!(
            NumericalSemigroup::from_small_elements(&[0, 3, 7]),
            Err(Error::NotClosed { .. })
        ));
    }
}
