//! Canonical numerical semigroup representation and per-semigroup invariants.
//!
//! A semigroup with Frobenius number `F` is stored as a membership table over
//! `0..=F+1`. Every integer above `F + 1` is implicitly a member, so all set
//! operations are linear in `F`.

use std::cmp::Ordering;
use std::collections::{BinaryHeap, BTreeSet};
use std::cmp::Reverse;
use std::fmt;
use std::ops::Deref;

use num_integer::gcd;
use serde::{Deserialize, Serialize};

use crate::bitmap::Bitmap;
use crate::error::{Error, Result};

/// A finite strictly ascending list of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GeneratorSet(Vec<usize>);

impl GeneratorSet {
    /// Sorts and deduplicates `elements`.
    pub fn new(elements: impl IntoIterator<Item = usize>) -> Self {
        let set: BTreeSet<usize> = elements.into_iter().collect();
        GeneratorSet(set.into_iter().collect())
    }

    pub fn empty() -> Self {
        GeneratorSet(Vec::new())
    }

    /// Wraps an already ascending list.
    pub(crate) fn from_sorted(elements: Vec<usize>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        GeneratorSet(elements)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn gcd(&self) -> usize {
        self.0.iter().fold(0, |acc, &x| gcd(acc, x))
    }
}

impl Deref for GeneratorSet {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl From<Vec<usize>> for GeneratorSet {
    fn from(v: Vec<usize>) -> Self {
        GeneratorSet::new(v)
    }
}

impl<const N: usize> From<[usize; N]> for GeneratorSet {
    fn from(v: [usize; N]) -> Self {
        GeneratorSet::new(v)
    }
}

impl fmt::Display for GeneratorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("⟨")?;
        write_joined(f, &self.0, ",")?;
        f.write_str("⟩")
    }
}

/// The Apéry set `Ap(S, n)`, stored by residue class: `entries[i]` is the
/// least element of `S` congruent to `i` modulo `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AperyTable {
    modulus: usize,
    entries: Vec<usize>,
}

impl AperyTable {
    pub(crate) fn from_entries(modulus: usize, entries: Vec<usize>) -> Self {
        debug_assert_eq!(entries.len(), modulus);
        AperyTable { modulus, entries }
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Entries in ascending order.
    pub fn sorted(&self) -> Vec<usize> {
        let mut v = self.entries.clone();
        v.sort_unstable();
        v
    }

    pub fn contains(&self, w: usize) -> bool {
        self.entries[w % self.modulus] == w
    }

    /// Maximal entries with respect to `a ≤_S b ⇔ b - a ∈ S`. An entry `w`
    /// is maximal iff `w + w'` is not an entry for every nonzero entry `w'`.
    pub fn maximals(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .entries
            .iter()
            .copied()
            .filter(|&w| {
                self.entries
                    .iter()
                    .filter(|&&v| v != 0)
                    .all(|&v| !self.contains(w + v))
            })
            .collect();
        out.sort_unstable();
        out
    }
}

/// A numerical semigroup other than ℕ, in canonical bounded form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    frobenius: usize,
    /// Membership over `0..=frobenius + 1`.
    members: Bitmap,
}

impl NumericalSemigroup {
    /// `Δ(m) = {0, m, m+1, …}`, the semigroup with multiplicity and conductor `m`.
    pub fn ordinary(multiplicity: usize) -> Result<Self> {
        if multiplicity < 2 {
            return Err(Error::NotRepresentable);
        }
        let frobenius = multiplicity - 1;
        let mut members = Bitmap::new(frobenius + 2);
        members.set(0);
        members.set(frobenius + 1);
        Ok(NumericalSemigroup { frobenius, members })
    }

    /// Builds `{0} ∪ small ∪ {F+1, →}`, rejecting sets that are not numerical
    /// semigroups with Frobenius number `frobenius`.
    pub fn from_small_elements(
        frobenius: usize,
        small: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        if frobenius == 0 {
            return Err(Error::ZeroFrobenius);
        }
        let mut members = Bitmap::new(frobenius + 2);
        members.set(0);
        members.set(frobenius + 1);
        for s in small {
            if s == frobenius {
                return Err(Error::FrobeniusViolated { frobenius });
            }
            if s == 0 || s > frobenius {
                return Err(Error::OutOfRange { element: s, frobenius });
            }
            members.set(s);
        }
        let elements: Vec<usize> = members.ones().filter(|&s| s > 0 && s < frobenius).collect();
        for (i, &a) in elements.iter().enumerate() {
            for &b in &elements[i..] {
                if a + b > frobenius + 1 {
                    break;
                }
                if !members.get(a + b) {
                    return Err(Error::NotClosed { a, b });
                }
            }
        }
        Ok(NumericalSemigroup { frobenius, members })
    }

    /// The semigroup generated by `gens`.
    pub fn from_generators(gens: &GeneratorSet) -> Result<Self> {
        let g = gens.gcd();
        if g != 1 {
            return Err(Error::GcdNotOne { gcd: g });
        }
        let m = gens[0];
        if m == 1 {
            return Err(Error::NotRepresentable);
        }
        // Apéry set with respect to the smallest generator, as shortest paths
        // over residues mod m.
        let mut dist = vec![usize::MAX; m];
        dist[0] = 0;
        let mut heap = BinaryHeap::from([Reverse((0usize, 0usize))]);
        while let Some(Reverse((d, r))) = heap.pop() {
            if d > dist[r] {
                continue;
            }
            for &g in &gens[1..] {
                let nd = d + g;
                let nr = nd % m;
                if nd < dist[nr] {
                    dist[nr] = nd;
                    heap.push(Reverse((nd, nr)));
                }
            }
        }
        let max_w = *dist.iter().max().expect("m >= 2");
        let frobenius = max_w - m;
        let mut members = Bitmap::new(frobenius + 2);
        for x in 0..=frobenius + 1 {
            if x >= dist[x % m] {
                members.set(x);
            }
        }
        Ok(NumericalSemigroup { frobenius, members })
    }

    pub(crate) fn from_parts(frobenius: usize, members: Bitmap) -> Self {
        debug_assert_eq!(members.len(), frobenius + 2);
        debug_assert!(members.get(0) && !members.get(frobenius) && members.get(frobenius + 1));
        NumericalSemigroup { frobenius, members }
    }

    /// `S ∪ {x}` without validation.
    pub(crate) fn with_element(&self, x: usize) -> Self {
        let mut members = self.members.clone();
        members.set(x);
        NumericalSemigroup { frobenius: self.frobenius, members }
    }

    pub fn frobenius(&self) -> usize {
        self.frobenius
    }

    /// `F + 1`, the least integer from which on everything is a member.
    pub fn conductor(&self) -> usize {
        self.frobenius + 1
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        x > self.frobenius || self.members.get(x)
    }

    /// Members in `0..=F+1`, ascending.
    pub fn members_to_conductor(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.ones()
    }

    /// Nonzero members below the Frobenius number, ascending.
    pub fn small_elements(&self) -> Vec<usize> {
        self.small_iter().collect()
    }

    fn small_iter(&self) -> impl Iterator<Item = usize> + '_ {
        let f = self.frobenius;
        self.members.ones().skip(1).take_while(move |&s| s < f)
    }

    pub fn gaps(&self) -> Vec<usize> {
        (1..=self.frobenius).filter(|&x| !self.members.get(x)).collect()
    }

    pub fn genus(&self) -> usize {
        self.frobenius + 2 - self.members.count_ones()
    }

    /// `n(S)`: the number of members below `F`, zero included.
    pub fn small_count(&self) -> usize {
        self.members.count_ones() - 1
    }

    pub fn multiplicity(&self) -> usize {
        self.members.next_one(0).expect("F+1 is always a member")
    }

    /// Minimal system of generators.
    ///
    /// Saturated semigroups have maximal embedding dimension, so their
    /// generators are read off `Ap(S, m(S))`; everything else goes through
    /// [`minimal_generators_by_sieve`](Self::minimal_generators_by_sieve).
    pub fn minimal_generators(&self) -> GeneratorSet {
        if self.is_saturated() {
            self.med_generators()
        } else {
            self.minimal_generators_by_sieve()
        }
    }

    /// `(Ap(S, m) \ {0}) ∪ {m}`; equals the minimal generators iff `S` is MED.
    pub(crate) fn med_generators(&self) -> GeneratorSet {
        let m = self.multiplicity();
        let ap = self.apery_unchecked(m);
        let mut gens: Vec<usize> = ap.entries[1..].to_vec();
        gens.push(m);
        gens.sort_unstable();
        GeneratorSet::from_sorted(gens)
    }

    /// Minimal generators by exhaustion: a nonzero member is a minimal
    /// generator iff it is not the sum of two nonzero members. Every minimal
    /// generator is at most `F + m(S)`.
    pub fn minimal_generators_by_sieve(&self) -> GeneratorSet {
        let m = self.multiplicity();
        let bound = self.frobenius + m;
        let mut gens = Vec::new();
        for x in m..=bound {
            if !self.contains(x) {
                continue;
            }
            let decomposable = (m..=x / 2).any(|y| self.contains(y) && self.contains(x - y));
            if !decomposable {
                gens.push(x);
            }
        }
        GeneratorSet::from_sorted(gens)
    }

    pub fn embedding_dimension(&self) -> usize {
        self.minimal_generators().len()
    }

    /// `Ap(S, n)` for a nonzero member `n`.
    pub fn apery(&self, n: usize) -> Result<AperyTable> {
        if n == 0 || !self.contains(n) {
            return Err(Error::NotAMember(n));
        }
        Ok(self.apery_unchecked(n))
    }

    fn apery_unchecked(&self, n: usize) -> AperyTable {
        let entries = (0..n)
            .map(|i| {
                let mut w = i;
                while !self.contains(w) {
                    w += n;
                }
                w
            })
            .collect();
        AperyTable { modulus: n, entries }
    }

    /// Pseudo-Frobenius numbers, from the maximal elements of `Ap(S, m(S))`.
    pub fn pseudo_frobenius(&self) -> Vec<usize> {
        let m = self.multiplicity();
        self.apery_unchecked(m)
            .maximals()
            .into_iter()
            .map(|w| w - m)
            .collect()
    }

    /// Gaps `x` for which `S ∪ {x}` is again a numerical semigroup.
    pub fn special_gaps(&self) -> Vec<usize> {
        let pf = self.pseudo_frobenius();
        pf.iter()
            .copied()
            .filter(|&x| pf.binary_search(&(2 * x)).is_err())
            .collect()
    }

    /// Special gaps straight from the definition: `x ∉ S`, `2x ∈ S` and
    /// `x + s ∈ S` for every nonzero member `s`.
    pub fn special_gaps_by_scan(&self) -> Vec<usize> {
        (1..=self.frobenius)
            .filter(|&x| {
                !self.members.get(x)
                    && self.contains(2 * x)
                    && self.members.ones().skip(1).all(|s| self.contains(x + s))
            })
            .collect()
    }

    /// `d_S(s) = gcd{x ∈ S : x ≤ s}` for a nonzero member `s`.
    pub fn d_of(&self, s: usize) -> Result<usize> {
        if s == 0 || !self.contains(s) {
            return Err(Error::NotAMember(s));
        }
        if s > self.frobenius + 1 {
            // both F+1 and F+2 are at most s
            return Ok(1);
        }
        let mut d = 0;
        for x in self.members.ones().take_while(|&x| x <= s) {
            d = gcd(d, x);
            if d == 1 {
                break;
            }
        }
        Ok(d)
    }

    /// Whether `s + d_S(s) ∈ S` for every nonzero member `s`. Members above
    /// `F + 1` have `d_S(s) = 1` and satisfy this trivially.
    pub fn is_saturated(&self) -> bool {
        let mut d = 0;
        for s in self.members.ones().skip(1) {
            d = gcd(d, s);
            if !self.contains(s + d) {
                return false;
            }
            if s > self.frobenius {
                break;
            }
        }
        true
    }

    /// Maximal embedding dimension: `e(S) = m(S)`.
    pub fn is_med(&self) -> bool {
        self.minimal_generators_by_sieve().len() == self.multiplicity()
    }

    pub fn intersect(&self, other: &NumericalSemigroup) -> NumericalSemigroup {
        let frobenius = self.frobenius.max(other.frobenius);
        let members = self.members.and_extended(&other.members, frobenius + 2);
        NumericalSemigroup { frobenius, members }
    }

    /// `S \ {m(S)}`. Fails on `Δ(F+1)`, whose multiplicity is `F + 1`.
    pub fn remove_multiplicity(&self) -> Result<NumericalSemigroup> {
        let m = self.multiplicity();
        if m > self.frobenius {
            return Err(Error::WouldChangeFrobenius);
        }
        let mut members = self.members.clone();
        members.clear(m);
        Ok(NumericalSemigroup { frobenius: self.frobenius, members })
    }

    /// Whether `self ⊆ other`.
    pub fn is_subset(&self, other: &NumericalSemigroup) -> bool {
        self.frobenius >= other.frobenius && self.members.ones().all(|x| other.contains(x))
    }
}

impl PartialOrd for NumericalSemigroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by Frobenius number, then lexicographically by the ascending list
/// of small elements.
impl Ord for NumericalSemigroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.frobenius
            .cmp(&other.frobenius)
            .then_with(|| self.small_iter().cmp(other.small_iter()))
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericalSemigroup {{ F: {}, small: {:?} }}", self.frobenius, self.small_elements())
    }
}

/// `⟨g₁,g₂,…⟩ | F=…`
impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | F={}", self.minimal_generators(), self.frobenius)
    }
}

pub(crate) fn write_joined(f: &mut fmt::Formatter<'_>, items: &[usize], sep: &str) -> fmt::Result {
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(sep)?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}
