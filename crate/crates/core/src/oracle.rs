//! Exhaustive ground truth for small Frobenius numbers.
//!
//! [`brute_force_sat`] tries every subset `T ⊆ {1, …, F-1}` and keeps those
//! for which `{0} ∪ T ∪ {F+1, →}` is additively closed and saturated by the
//! literal definition. It shares nothing with the tree walk beyond the
//! result type. [`check_all`] then compares every fast routine against it.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::gcd;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;
use crate::{
    closure, enumerate_rank, enumerate_sat, enumerate_sat_genus, feasible_rank, is_minimal_system,
    is_sat_set, maximal_elements, min_genus, minimal_system, rank,
};

/// Largest Frobenius number accepted by the subset search.
pub const MAX_FROBENIUS: usize = 20;

/// `{0} ∪ T ∪ {F+1, →}` with `T` encoded as a bitmask, bit `i` standing for `i + 1`.
#[derive(Clone, Copy)]
struct Candidate {
    frobenius: usize,
    mask: u64,
}

impl Candidate {
    #[inline]
    fn has(self, x: usize) -> bool {
        x == 0 || x > self.frobenius || (x < self.frobenius && self.mask >> (x - 1) & 1 == 1)
    }

    /// Members in `0..=F+1`.
    fn members(self) -> impl Iterator<Item = usize> {
        (0..=self.frobenius + 1).filter(move |&x| self.has(x))
    }

    fn small(self) -> Vec<usize> {
        (1..self.frobenius).filter(|&x| self.has(x)).collect()
    }

    fn is_closed(self) -> bool {
        let f = self.frobenius;
        for a in 1..f {
            if !self.has(a) {
                continue;
            }
            for b in a..=f + 1 - a {
                if self.has(b) && !self.has(a + b) {
                    return false;
                }
            }
        }
        true
    }

    /// `gcd{x ∈ A : x ≤ a}`, with `gcd{0} = 0`.
    fn d(self, a: usize) -> usize {
        self.members().take_while(|&x| x <= a).fold(0, gcd)
    }

    /// `s + d(s) ∈ A` for every nonzero member `s` (larger members have `d = 1`).
    fn definition_holds(self) -> bool {
        self.members().skip(1).all(|s| self.has(s + self.d(s)))
    }

    /// `a + d(a) ∈ A` for every member `a`, zero included.
    fn single_step_holds(self) -> bool {
        self.members().all(|a| self.has(a + self.d(a)))
    }

    /// `a + k·d(a) ∈ A` for every member `a` and every `k ≥ 0`; past `F+1`
    /// everything is a member, so `k` stops there.
    fn all_steps_hold(self) -> bool {
        let top = self.frobenius + 1;
        self.members().all(|a| {
            let d = self.d(a);
            if d == 0 {
                return true;
            }
            (a..=top).step_by(d).all(|x| self.has(x))
        })
    }

    fn is_saturated_semigroup(self) -> bool {
        self.is_closed() && self.definition_holds()
    }
}

fn check_range(frobenius: usize) -> Result<()> {
    if frobenius == 0 {
        return Err(Error::ZeroFrobenius);
    }
    if frobenius > MAX_FROBENIUS {
        return Err(Error::TooLarge { frobenius, limit: MAX_FROBENIUS });
    }
    Ok(())
}

fn masks(frobenius: usize) -> std::ops::Range<u64> {
    0..1u64 << (frobenius - 1)
}

/// Every saturated numerical semigroup with Frobenius number `F`, sorted
/// canonically.
pub fn brute_force_sat(frobenius: usize) -> Result<Vec<NumericalSemigroup>> {
    brute_force_sat_with_jobs(frobenius, 1)
}

pub fn brute_force_sat_with_jobs(frobenius: usize, jobs: usize) -> Result<Vec<NumericalSemigroup>> {
    check_range(frobenius)?;
    let keep = |mask: u64| {
        let c = Candidate { frobenius, mask };
        c.is_saturated_semigroup().then(|| c.small())
    };
    let smalls: Vec<Vec<usize>> = if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::PreconditionViolated(e.to_string()))?;
        pool.install(|| masks(frobenius).into_par_iter().filter_map(keep).collect())
    } else {
        masks(frobenius).filter_map(keep).collect()
    };
    let mut out = smalls
        .into_iter()
        .map(|small| NumericalSemigroup::from_small_elements(frobenius, small))
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

/// Candidate sets `{0} ∪ T ∪ {F+1, →}` on which the three equivalent
/// characterizations of saturation disagree: closed with `s + d(s)` for
/// nonzero `s`; `a + d(a)` for every member; `a + k·d(a)` for every member
/// and `k`. Expected to be empty.
pub fn saturation_disagreements(frobenius: usize) -> Result<Vec<Vec<usize>>> {
    check_range(frobenius)?;
    Ok(masks(frobenius)
        .map(|mask| Candidate { frobenius, mask })
        .filter(|&c| {
            let a = c.is_saturated_semigroup();
            a != c.single_step_holds() || a != c.all_steps_hold()
        })
        .map(Candidate::small)
        .collect())
}

/// Outcome of [`check_all`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub frobenius: usize,
    pub sat_count: usize,
    pub checks: usize,
    pub discrepancies: Vec<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "F={} |Sat(F)|={} checks={} discrepancies={}",
            self.frobenius,
            self.sat_count,
            self.checks,
            self.discrepancies.len()
        )?;
        for d in &self.discrepancies {
            write!(f, "\n  {d}")?;
        }
        Ok(())
    }
}

struct Recorder {
    checks: usize,
    discrepancies: Vec<String>,
}

impl Recorder {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.discrepancies.push(what());
        }
    }
}

fn smalls(v: &[NumericalSemigroup]) -> Vec<Vec<usize>> {
    v.iter().map(|s| s.small_elements()).collect()
}

/// Subsets of `{1, …, n}` with at most `k` elements, as ascending lists.
pub fn small_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        if cur.len() == k {
            return;
        }
        for x in start..=n {
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, k, &mut Vec::new(), &mut out);
    out
}

/// Cross-validates the tree walk, genus slices, maximal elements, minimum
/// genus, closure/minimal-system round trips and the rank partition against
/// [`brute_force_sat`].
pub fn check_all(frobenius: usize) -> Result<Report> {
    let brute = brute_force_sat(frobenius)?;
    let f = frobenius;
    let mut r = Recorder { checks: 0, discrepancies: Vec::new() };

    let dis = saturation_disagreements(f)?;
    r.check(dis.is_empty(), || format!("saturation characterizations disagree on {dis:?}"));

    // tree walk
    let fast = enumerate_sat(f)?;
    let fast_set: BTreeSet<_> = fast.iter().cloned().collect();
    r.check(fast_set.len() == fast.len(), || "enumerate_sat emitted duplicates".into());
    let brute_set: BTreeSet<_> = brute.iter().cloned().collect();
    r.check(fast_set == brute_set, || {
        let extra: Vec<_> = fast_set.difference(&brute_set).cloned().collect();
        let missing: Vec<_> = brute_set.difference(&fast_set).cloned().collect();
        format!("enumerate_sat: extra {:?} missing {:?}", smalls(&extra), smalls(&missing))
    });

    // genus slices
    for g in 0..=f + 1 {
        let mut expect: Vec<_> = brute.iter().filter(|s| s.genus() == g).cloned().collect();
        expect.sort();
        let mut got = enumerate_sat_genus(f, g)?;
        got.sort();
        r.check(got == expect, || {
            format!("enumerate_sat_genus(g={g}): got {:?} expected {:?}", smalls(&got), smalls(&expect))
        });
    }

    // extremal structure
    let mut expect_max: Vec<_> = brute
        .iter()
        .filter(|s| !brute.iter().any(|t| t != *s && s.is_subset(t)))
        .cloned()
        .collect();
    expect_max.sort();
    let mut got_max = maximal_elements(f)?;
    got_max.sort();
    r.check(got_max == expect_max, || {
        format!("maximal_elements: got {:?} expected {:?}", smalls(&got_max), smalls(&expect_max))
    });
    let brute_min = brute.iter().map(|s| s.genus()).min().expect("Δ(F+1) is always present");
    let mg = min_genus(f)?;
    r.check(mg == brute_min, || format!("min_genus: got {mg} expected {brute_min}"));

    // closure and minimal systems
    for s in &brute {
        let sys = minimal_system(f, s)?;
        let back = closure(f, sys.elements())?;
        r.check(&back == s, || format!("closure(minimal_system({:?})) = {:?}", s.small_elements(), back.small_elements()));
    }
    for xs in small_subsets(f.saturating_sub(1), 3) {
        if !is_sat_set(f, &xs) {
            let witness = brute.iter().find(|s| xs.iter().all(|&x| s.contains(x)));
            r.check(witness.is_none(), || format!("{xs:?} rejected as Sat(F)-set but lies in {:?}", witness.map(|s| s.small_elements())));
            continue;
        }
        let c = closure(f, &xs)?;
        let containing: Vec<_> = brute.iter().filter(|s| xs.iter().all(|&x| s.contains(x))).collect();
        let meet = containing
            .iter()
            .skip(1)
            .fold(containing.first().map(|s| (*s).clone()), |acc, s| acc.map(|a| a.intersect(s)));
        r.check(meet.as_ref() == Some(&c), || {
            format!("closure({xs:?}) = {:?}, intersection of supersets = {:?}", c.small_elements(), meet.map(|m| m.small_elements()))
        });
        if is_minimal_system(f, &xs)? {
            let sys = minimal_system(f, &c)?;
            r.check(sys.elements().as_slice() == xs.as_slice(), || {
                format!("minimal_system(closure({xs:?})) = {:?}", sys.elements().as_slice())
            });
        }
    }

    // rank partition
    let mut union = BTreeSet::new();
    let mut total = 0;
    for p in 0..=f {
        let layer = enumerate_rank(f, p)?;
        r.check(feasible_rank(f, p) == !layer.is_empty(), || {
            format!("feasible_rank(p={p}) disagrees with |enumerate_rank| = {}", layer.len())
        });
        for s in &layer {
            let rk = rank(f, s)?;
            r.check(rk == p, || format!("{:?} listed with rank {p} but has rank {rk}", s.small_elements()));
        }
        total += layer.len();
        union.extend(layer);
    }
    r.check(total == union.len(), || "rank classes overlap".into());
    r.check(union == brute_set, || "rank classes do not cover Sat(F)".into());

    Ok(Report {
        frobenius,
        sat_count: brute.len(),
        checks: r.checks,
        discrepancies: r.discrepancies,
    })
}
