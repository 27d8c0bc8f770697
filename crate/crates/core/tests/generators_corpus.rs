//! Closure, minimal systems and the rank parametrization over `F ≤ 16`.

use std::collections::BTreeSet;

use num_integer::gcd;
use satsemi::extremal::tooth;
use satsemi::oracle::{brute_force_sat, small_subsets};
use satsemi::rank_enum::canonical_witness;
use satsemi::{
    closure, coefficient_tuples, enumerate_rank, enumerate_sat, feasible_rank, is_minimal_system,
    is_sat_set, list_sequences, minimal_system, rank, witness_to_semigroup, NumericalSemigroup,
    RankWitness,
};

const MAX_F: usize = 16;

#[test]
fn closure_inverts_minimal_system() {
    for f in 1..=MAX_F {
        for s in enumerate_sat(f).unwrap() {
            let sys = minimal_system(f, &s).unwrap();
            assert_eq!(closure(f, sys.elements()).unwrap(), s);
        }
    }
}

#[test]
fn minimal_system_inverts_closure_on_small_sets() {
    for f in 1..=MAX_F {
        for xs in small_subsets(f.saturating_sub(1), 3) {
            if !is_sat_set(f, &xs) || !is_minimal_system(f, &xs).unwrap() {
                continue;
            }
            let c = closure(f, &xs).unwrap();
            assert_eq!(minimal_system(f, &c).unwrap().elements().as_slice(), xs.as_slice(), "F={f}");
        }
    }
}

#[test]
fn closure_is_the_least_saturated_superset() {
    for f in 1..=MAX_F {
        let all = brute_force_sat(f).unwrap();
        for xs in small_subsets(f.saturating_sub(1), 3) {
            let supersets: Vec<_> = all.iter().filter(|s| xs.iter().all(|&x| s.contains(x))).collect();
            assert_eq!(is_sat_set(f, &xs), !supersets.is_empty(), "F={f} X={xs:?}");
            if supersets.is_empty() {
                continue;
            }
            let meet = supersets[1..].iter().fold(supersets[0].clone(), |acc, s| acc.intersect(s));
            assert_eq!(closure(f, &xs).unwrap(), meet, "F={f} X={xs:?}");
        }
    }
}

#[test]
fn sat_set_criterion_matches_brute_force_for_all_subsets() {
    for f in 1..=11 {
        let all = brute_force_sat(f).unwrap();
        for mask in 0u32..1 << (f - 1) {
            let xs: Vec<usize> = (1..f).filter(|x| mask >> (x - 1) & 1 == 1).collect();
            let exists = all.iter().any(|s| xs.iter().all(|&x| s.contains(x)));
            assert_eq!(is_sat_set(f, &xs), exists, "F={f} X={xs:?}");
        }
    }
}

#[test]
fn minimal_system_structure() {
    for f in 1..=MAX_F {
        for s in enumerate_sat(f).unwrap() {
            let sys = minimal_system(f, &s).unwrap();
            let ns = sys.elements();
            assert!(sys.len() <= s.embedding_dimension());
            if s == NumericalSemigroup::ordinary(f + 1).unwrap() {
                assert!(sys.is_empty());
                continue;
            }
            assert_eq!(ns[0], s.multiplicity());
            for (n, d) in ns.iter().zip(sys.prefix_gcds()) {
                assert_eq!(s.d_of(*n).unwrap(), d);
            }
            let is_tooth = (2..f).any(|m| f % m != 0 && tooth(m, f + 1).unwrap() == s);
            assert_eq!(sys.len() == 1, is_tooth, "{s:?}");
        }
    }
}

/// Teeth `T(d₁, n₂), …, T(d_{p-1}, n_p), T(d_p, F+1)` read off the `d_S` jumps.
fn tooth_decomposition(f: usize, s: &NumericalSemigroup) -> Vec<(usize, usize)> {
    let sys = minimal_system(f, s).unwrap();
    let ns = sys.elements();
    let ds = sys.prefix_gcds();
    if ns.is_empty() {
        return vec![(f + 1, f + 1)];
    }
    let mut out: Vec<(usize, usize)> = ds.iter().zip(&ns[1..]).map(|(&d, &n)| (d, n)).collect();
    out.push((*ds.last().unwrap(), f + 1));
    out
}

#[test]
fn saturated_semigroups_are_intersections_of_teeth() {
    for f in 1..=MAX_F {
        for s in enumerate_sat(f).unwrap() {
            let teeth = tooth_decomposition(f, &s);
            for w in teeth.windows(2) {
                assert_eq!(w[0].0 % w[1].0, 0);
                assert!(w[0].0 < w[0].1 && w[0].1 < w[1].1);
            }
            let meet = teeth
                .iter()
                .map(|&(a, b)| tooth(a, b).unwrap())
                .reduce(|acc, t| acc.intersect(&t))
                .unwrap();
            assert_eq!(meet, s);
        }
    }
}

#[test]
fn rank_classes_partition_sat() {
    for f in 1..=MAX_F {
        let all: BTreeSet<_> = enumerate_sat(f).unwrap().into_iter().collect();
        let mut seen = BTreeSet::new();
        for p in 0..=f {
            let class = enumerate_rank(f, p).unwrap();
            if p <= 4 {
                assert_eq!(feasible_rank(f, p), !class.is_empty(), "F={f} p={p}");
            }
            for s in class {
                assert_eq!(rank(f, &s).unwrap(), p);
                assert!(seen.insert(s), "F={f} p={p} duplicate across classes");
            }
        }
        assert_eq!(seen, all, "F={f}");
    }
}

#[test]
fn canonical_witnesses_are_injective_and_cover_each_class() {
    for f in 1..=MAX_F {
        for p in 1..=4 {
            let mut canonical = BTreeSet::new();
            let mut images = BTreeSet::new();
            for seq in list_sequences(f, p) {
                for ts in coefficient_tuples(f, &seq).unwrap() {
                    let w = RankWitness::new(f, seq.clone(), ts.clone()).unwrap();
                    let s = witness_to_semigroup(f, &w).unwrap();
                    let sys = minimal_system(f, &s).unwrap();
                    assert_eq!(sys.elements().as_slice(), w.generators().as_slice());
                    assert_eq!(sys.prefix_gcds(), seq.as_slice());
                    if ts[0] == 1 {
                        assert!(canonical.insert(s.clone()), "F={f} {:?} {ts:?}", seq.as_slice());
                    }
                    images.insert(s);
                }
            }
            assert_eq!(canonical, images, "F={f} p={p}");
            let class: BTreeSet<_> = enumerate_rank(f, p).unwrap().into_iter().collect();
            assert_eq!(images, class);
            for s in &class {
                let w = canonical_witness(f, s).unwrap().unwrap();
                assert_eq!(w.coefficients()[0], 1);
                assert_eq!(&witness_to_semigroup(f, &w).unwrap(), s);
            }
        }
    }
}

#[test]
fn full_parametrization_repeats_semigroups() {
    // (t₁, t₂) and (t₁ - 1, t₂ + d₁/d₂) name the same generator set.
    let seq = satsemi::SatSequence::new(15, vec![4, 2]).unwrap();
    let a = RankWitness::new(15, seq.clone(), vec![2, 1]).unwrap();
    let b = RankWitness::new(15, seq, vec![1, 3]).unwrap();
    assert_eq!(a.generators(), b.generators());
    assert_eq!(witness_to_semigroup(15, &a), witness_to_semigroup(15, &b));
}

#[test]
fn all_ones_tuples_give_minimal_systems() {
    for f in 1..=40 {
        for p in 1..=4 {
            for seq in list_sequences(f, p) {
                let ts = vec![1; p];
                assert!(coefficient_tuples(f, &seq).unwrap().contains(&ts));
                let w = RankWitness::new(f, seq.clone(), ts).unwrap();
                let gens = w.generators();
                let partial: Vec<usize> = seq
                    .as_slice()
                    .iter()
                    .scan(0, |acc, d| {
                        *acc += d;
                        Some(*acc)
                    })
                    .collect();
                assert_eq!(gens, partial);
                assert!(is_minimal_system(f, &gens).unwrap());
                let prefix: Vec<usize> = gens.iter().scan(0, |g, &x| { *g = gcd(*g, x); Some(*g) }).collect();
                assert_eq!(prefix, seq.as_slice());
            }
        }
    }
}
