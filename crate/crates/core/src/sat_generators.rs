//! `Sat(F)`-sets, the closure `Sat(F)[X]`, and minimal `Sat(F)`-systems of
//! generators.
//!
//! A set `X ⊆ {1, …, F-1}` lies in some member of `Sat(F)` exactly when `X`
//! is empty or `gcd(X) ∤ F`. If `gcd(X) | F` then `d_S(max X)` divides `F`
//! for every saturated `S ⊇ X`, and stepping from `max X` by `d_S(max X)`
//! reaches `F`.

use num_integer::gcd;
use serde::{Deserialize, Serialize};

use crate::bitmap::Bitmap;
use crate::error::{Error, Result};
use crate::semigroup::{GeneratorSet, NumericalSemigroup};

/// A subset of `{1, …, F-1}` contained in some member of `Sat(F)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SatFSet {
    frobenius: usize,
    elements: GeneratorSet,
}

impl SatFSet {
    pub fn new(frobenius: usize, elements: impl IntoIterator<Item = usize>) -> Result<Self> {
        let elements = GeneratorSet::new(elements);
        if !is_sat_set(frobenius, &elements) {
            return Err(Error::NotASatFSet { frobenius, elements: elements.into_vec() });
        }
        Ok(SatFSet { frobenius, elements })
    }

    pub fn frobenius(&self) -> usize {
        self.frobenius
    }

    pub fn elements(&self) -> &GeneratorSet {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// `gcd{n₁, …, nᵢ}` for each `i`.
    pub fn prefix_gcds(&self) -> Vec<usize> {
        prefix_gcds(&self.elements)
    }
}

fn prefix_gcds(xs: &[usize]) -> Vec<usize> {
    xs.iter()
        .scan(0, |d, &x| {
            *d = gcd(*d, x);
            Some(*d)
        })
        .collect()
}

/// Whether `X` is a `Sat(F)`-set.
pub fn is_sat_set(frobenius: usize, xs: &[usize]) -> bool {
    if frobenius == 0 || xs.iter().any(|&x| x == 0 || x >= frobenius) {
        return false;
    }
    let d = xs.iter().fold(0, |acc, &x| gcd(acc, x));
    d == 0 || frobenius % d != 0
}

/// `Sat(F)[X]`, the least member of `Sat(F)` containing `X`.
///
/// With `n₁ < … < n_p` the elements of `X` and `dᵢ = gcd{n₁, …, nᵢ}`, the
/// result is `{0} ∪ ⋃ᵢ {nᵢ, nᵢ + dᵢ, …} ∪ {F+1, →}`, where the `i`-th
/// progression runs below `nᵢ₊₁` (below `F` for the last one).
pub fn closure(frobenius: usize, xs: &[usize]) -> Result<NumericalSemigroup> {
    let set = SatFSet::new(frobenius, xs.iter().copied())?;
    let ns = set.elements();
    let ds = set.prefix_gcds();
    let mut members = Bitmap::new(frobenius + 2);
    members.set(0);
    members.set(frobenius + 1);
    for (i, (&n, &d)) in ns.iter().zip(&ds).enumerate() {
        let end = ns.get(i + 1).copied().unwrap_or(frobenius);
        for x in (n..end).step_by(d) {
            members.set(x);
        }
    }
    Ok(NumericalSemigroup::from_parts(frobenius, members))
}

/// The unique minimal `Sat(F)`-system of generators of `S`: the members
/// `0 < x < F` where `d_S` drops.
pub fn minimal_system(frobenius: usize, s: &NumericalSemigroup) -> Result<SatFSet> {
    if s.frobenius() != frobenius {
        return Err(Error::WrongFrobenius { expected: frobenius, actual: s.frobenius() });
    }
    if !s.is_saturated() {
        return Err(Error::NotSaturated);
    }
    let mut d = 0;
    let mut out = Vec::new();
    for x in s.small_elements() {
        let next = gcd(d, x);
        if next != d {
            out.push(x);
            d = next;
        }
    }
    Ok(SatFSet { frobenius, elements: GeneratorSet::from_sorted(out) })
}

/// Whether `X` is the minimal `Sat(F)`-system of `Sat(F)[X]`, i.e. its prefix
/// gcds strictly decrease.
pub fn is_minimal_system(frobenius: usize, xs: &[usize]) -> Result<bool> {
    let set = SatFSet::new(frobenius, xs.iter().copied())?;
    Ok(set.prefix_gcds().windows(2).all(|w| w[0] != w[1]))
}

/// `Sat(F)`-rank: the size of the minimal `Sat(F)`-system.
pub fn rank(frobenius: usize, s: &NumericalSemigroup) -> Result<usize> {
    minimal_system(frobenius, s).map(|x| x.len())
}
