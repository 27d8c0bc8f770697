//! Enumeration of `Sat(F)` by `Sat(F)`-rank.
//!
//! A minimal `Sat(F)`-system `n₁ < … < n_p` is determined by its prefix gcd
//! chain `(d₁, …, d_p)` (a [`SatSequence`]) and positive steps `t₂, …, t_p`
//! with `nᵢ₊₁ = nᵢ + tᵢ₊₁·dᵢ₊₁` and `gcd(dᵢ/dᵢ₊₁, tᵢ₊₁) = 1`. The generator
//! set of a witness is `{d₁, t₁d₁ + t₂d₂, …, Σ tᵢdᵢ}`; note `t₁` does not
//! appear in `n₁`, so witnesses differing only in `t₁` can give the same
//! semigroup and [`enumerate_rank`] deduplicates.

use std::collections::BTreeSet;

use num_integer::gcd;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extremal::smallest_non_divisor;
use crate::sat_generators::{closure, minimal_system};
use crate::semigroup::NumericalSemigroup;

/// A strictly decreasing divisor chain `d₁ > … > d_k` with `d_k ∤ F`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SatSequence(Vec<usize>);

impl SatSequence {
    pub fn new(frobenius: usize, ds: Vec<usize>) -> Result<Self> {
        if !is_sat_sequence(frobenius, &ds) {
            return Err(Error::NotASatSequence { frobenius, ds });
        }
        Ok(SatSequence(ds))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The least element `d_k`.
    pub fn last(&self) -> usize {
        *self.0.last().expect("sat sequences are nonempty")
    }
}

pub fn is_sat_sequence(frobenius: usize, ds: &[usize]) -> bool {
    let Some(&last) = ds.last() else {
        return false;
    };
    last > 0
        && frobenius % last != 0
        && ds.windows(2).all(|w| w[0] > w[1] && w[0] % w[1] == 0)
}

/// A `Sat(F)`-sequence together with coefficients `(t₁, …, t_p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RankWitness {
    seq: SatSequence,
    ts: Vec<usize>,
}

impl RankWitness {
    pub fn new(frobenius: usize, seq: SatSequence, ts: Vec<usize>) -> Result<Self> {
        let ds = seq.as_slice();
        if !is_sat_sequence(frobenius, ds) {
            return Err(Error::NotASatSequence { frobenius, ds: ds.to_vec() });
        }
        if ts.len() != ds.len() {
            return Err(Error::InvalidWitness(format!(
                "{} coefficients for a sequence of length {}",
                ts.len(),
                ds.len()
            )));
        }
        if ts.contains(&0) {
            return Err(Error::InvalidWitness("coefficients must be positive".into()));
        }
        let total: usize = ds.iter().zip(&ts).map(|(d, t)| d * t).sum();
        if total >= frobenius {
            return Err(Error::InvalidWitness(format!("Σ tᵢdᵢ = {total} is not below {frobenius}")));
        }
        if !coprime_steps(ds, &ts) {
            return Err(Error::InvalidWitness("gcd(dᵢ/dᵢ₊₁, tᵢ₊₁) ≠ 1".into()));
        }
        Ok(RankWitness { seq, ts })
    }

    pub fn sequence(&self) -> &SatSequence {
        &self.seq
    }

    pub fn coefficients(&self) -> &[usize] {
        &self.ts
    }

    /// `{d₁, t₁d₁ + t₂d₂, …, t₁d₁ + … + t_pd_p}`.
    pub fn generators(&self) -> Vec<usize> {
        let ds = self.seq.as_slice();
        let mut out = Vec::with_capacity(ds.len());
        let mut partial = 0;
        for (i, (&d, &t)) in ds.iter().zip(&self.ts).enumerate() {
            partial += d * t;
            out.push(if i == 0 { d } else { partial });
        }
        out
    }
}

fn coprime_steps(ds: &[usize], ts: &[usize]) -> bool {
    ds.windows(2).zip(&ts[1..]).all(|(w, &t)| gcd(w[0] / w[1], t) == 1)
}

/// `L(F, p)`: the `Sat(F)`-sequences of length `p` with `d₁ + … + d_p < F`,
/// built as `(a₁⋯a_p, …, a₁a₂, a₁)` with `aᵢ ≥ 2` and `a₁ ∤ F`.
/// Sorted lexicographically.
pub fn list_sequences(frobenius: usize, p: usize) -> Vec<SatSequence> {
    fn extend(
        frobenius: usize,
        p: usize,
        chain: &mut Vec<usize>,
        sum: usize,
        out: &mut Vec<SatSequence>,
    ) {
        if chain.len() == p {
            out.push(SatSequence(chain.iter().rev().copied().collect()));
            return;
        }
        let last = chain.last().copied().unwrap_or(1);
        for a in 2.. {
            let d = last * a;
            if sum + d >= frobenius {
                break;
            }
            if chain.is_empty() && frobenius % d == 0 {
                continue;
            }
            chain.push(d);
            extend(frobenius, p, chain, sum + d, out);
            chain.pop();
        }
    }

    let mut out = Vec::new();
    if p > 0 {
        extend(frobenius, p, &mut Vec::with_capacity(p), 0, &mut out);
    }
    out.sort();
    out
}

/// Whether `Sat(F)` has an element of rank `p`: `a(2^p - 1) < F` with `a`
/// the least non-divisor of `F`. Rank 0 is always present.
pub fn feasible_rank(frobenius: usize, p: usize) -> bool {
    if p == 0 {
        return frobenius > 0;
    }
    let a = smallest_non_divisor(frobenius) as u128;
    p < 64 && a * ((1u128 << p) - 1) < frobenius as u128
}

/// All `(x₁, …, x_p) ∈ ℕ^p` with `Σ cᵢxᵢ = k`, in lexicographic order.
/// Coefficients must be positive.
pub fn diophantine_solutions(coeffs: &[usize], k: usize) -> Vec<Vec<usize>> {
    assert!(coeffs.iter().all(|&c| c > 0), "coefficients must be positive");
    // suffix_gcd[i] = gcd(coeffs[i..]); a remainder not divisible by it is dead.
    let mut suffix_gcd = vec![0; coeffs.len() + 1];
    for i in (0..coeffs.len()).rev() {
        suffix_gcd[i] = gcd(suffix_gcd[i + 1], coeffs[i]);
    }

    fn walk(
        coeffs: &[usize],
        suffix_gcd: &[usize],
        i: usize,
        rest: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if i == coeffs.len() {
            if rest == 0 {
                out.push(current.clone());
            }
            return;
        }
        for x in 0..=rest / coeffs[i] {
            let r = rest - x * coeffs[i];
            let g = suffix_gcd[i + 1];
            if (g == 0 && r != 0) || (g != 0 && r % g != 0) {
                continue;
            }
            current.push(x);
            walk(coeffs, suffix_gcd, i + 1, r, current, out);
            current.pop();
        }
    }

    let mut out = Vec::new();
    if suffix_gcd[0] == 0 {
        if k == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    if k % suffix_gcd[0] == 0 {
        walk(coeffs, &suffix_gcd, 0, k, &mut Vec::with_capacity(coeffs.len()), &mut out);
    }
    out
}

/// `C(d₁, …, d_p)`: positive `(t₁, …, t_p)` with `Σ tᵢdᵢ < F` and
/// `gcd(dᵢ/dᵢ₊₁, tᵢ₊₁) = 1`, sorted lexicographically.
///
/// Shifting `xᵢ = tᵢ - 1` turns the bound into `Σ dᵢxᵢ ≤ α = F - 1 - Σ dᵢ`.
/// Every such sum is a multiple `k·d_p`, so the solutions are those of
/// `Σ (dᵢ/d_p)xᵢ = k` for `k = 0, …, ⌊α/d_p⌋`.
pub fn coefficient_tuples(frobenius: usize, seq: &SatSequence) -> Result<Vec<Vec<usize>>> {
    let ds = seq.as_slice();
    if !is_sat_sequence(frobenius, ds) {
        return Err(Error::NotASatSequence { frobenius, ds: ds.to_vec() });
    }
    let total: usize = ds.iter().sum();
    let Some(alpha) = (frobenius - 1).checked_sub(total) else {
        return Ok(Vec::new());
    };
    let dp = seq.last();
    let reduced: Vec<usize> = ds.iter().map(|d| d / dp).collect();
    let mut out: Vec<Vec<usize>> = (0..=alpha / dp)
        .flat_map(|k| diophantine_solutions(&reduced, k))
        .map(|xs| xs.into_iter().map(|x| x + 1).collect::<Vec<_>>())
        .filter(|ts| coprime_steps(ds, ts))
        .collect();
    out.sort();
    Ok(out)
}

/// `Sat(F)[{d₁, t₁d₁ + t₂d₂, …}]`, whose minimal `Sat(F)`-system is exactly
/// that generator set.
pub fn witness_to_semigroup(frobenius: usize, w: &RankWitness) -> Result<NumericalSemigroup> {
    closure(frobenius, &w.generators())
}

/// The witness with `t₁ = 1` and `tᵢ₊₁ = (nᵢ₊₁ - nᵢ)/dᵢ₊₁` read off the
/// minimal `Sat(F)`-system of `S`; `None` for `Δ(F+1)`.
pub fn canonical_witness(frobenius: usize, s: &NumericalSemigroup) -> Result<Option<RankWitness>> {
    let system = minimal_system(frobenius, s)?;
    if system.is_empty() {
        return Ok(None);
    }
    let ns = system.elements();
    let ds = system.prefix_gcds();
    let mut ts = vec![1];
    ts.extend(ns.windows(2).zip(&ds[1..]).map(|(w, &d)| (w[1] - w[0]) / d));
    let seq = SatSequence::new(frobenius, ds)?;
    RankWitness::new(frobenius, seq, ts).map(Some)
}

/// Members of `Sat(F)` with rank `p`, sorted canonically.
pub fn enumerate_rank(frobenius: usize, p: usize) -> Result<Vec<NumericalSemigroup>> {
    enumerate_rank_with_jobs(frobenius, p, 1)
}

pub fn enumerate_rank_with_jobs(
    frobenius: usize,
    p: usize,
    jobs: usize,
) -> Result<Vec<NumericalSemigroup>> {
    if frobenius == 0 {
        return Err(Error::ZeroFrobenius);
    }
    if p == 0 {
        return Ok(vec![NumericalSemigroup::ordinary(frobenius + 1)?]);
    }
    if !feasible_rank(frobenius, p) {
        return Ok(Vec::new());
    }
    let seqs = list_sequences(frobenius, p);
    let per_sequence = |seq: &SatSequence| -> Result<Vec<NumericalSemigroup>> {
        coefficient_tuples(frobenius, seq)?
            .into_iter()
            .map(|ts| {
                let w = RankWitness { seq: seq.clone(), ts };
                witness_to_semigroup(frobenius, &w)
            })
            .collect()
    };
    let batches: Vec<Vec<NumericalSemigroup>> = if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::PreconditionViolated(e.to_string()))?;
        pool.install(|| seqs.par_iter().map(per_sequence).collect::<Result<_>>())?
    } else {
        seqs.iter().map(per_sequence).collect::<Result<_>>()?
    };
    let set: BTreeSet<NumericalSemigroup> = batches.into_iter().flatten().collect();
    Ok(set.into_iter().collect())
}
