//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use satsemi::oracle::{brute_force_sat, small_subsets};
use satsemi::sat_tree::extension_is_saturated;
use satsemi::{
    closure, enumerate_rank, enumerate_sat, enumerate_sat_genus, feasible_rank, is_minimal_system,
    is_sat_set, maximal_elements, min_genus, minimal_system, rank, GeneratorSet,
    NumericalSemigroup,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok { Ok(()) } else { Err(msg()) }
}

fn from_small(f: usize, small: &[usize]) -> NumericalSemigroup {
    NumericalSemigroup::from_small_elements(f, small.iter().copied()).unwrap()
}

fn gens(xs: &[usize]) -> NumericalSemigroup {
    NumericalSemigroup::from_generators(&GeneratorSet::new(xs.to_vec())).unwrap()
}

fn sat7_example() -> Outcome {
    let t = Instant::now();
    let got = enumerate_sat(7).map_err(|e| e.to_string())?;
    let elapsed = t.elapsed();
    let msgs: BTreeSet<Vec<usize>> = got.iter().map(|s| s.minimal_generators().into_vec()).collect();
    let expect: BTreeSet<Vec<usize>> = [
        vec![8, 9, 10, 11, 12, 13, 14, 15],
        vec![4, 9, 10, 11],
        vec![5, 8, 9, 11, 12],
        vec![6, 8, 9, 10, 11, 13],
        vec![3, 8, 10],
        vec![4, 6, 9, 11],
        vec![2, 9],
    ]
    .into_iter()
    .collect();
    ensure(got.len() == 7, || format!("{} semigroups", got.len()))?;
    ensure(msgs == expect, || format!("msgs {msgs:?}"))?;
    ensure(elapsed < Duration::from_millis(100), || format!("took {elapsed:?}"))?;
    Ok(format!("7 semigroups in {elapsed:?}"))
}

fn sat7_genus5() -> Outcome {
    let got: BTreeSet<_> = enumerate_sat_genus(7, 5).map_err(|e| e.to_string())?.into_iter().collect();
    let expect: BTreeSet<_> = [from_small(7, &[3, 6]), from_small(7, &[4, 6])].into_iter().collect();
    ensure(got == expect, || format!("got {got:?}"))?;
    Ok("{3,6} and {4,6} over Δ(8)".into())
}

fn maximal30() -> Outcome {
    let got: BTreeSet<_> = maximal_elements(30).map_err(|e| e.to_string())?.into_iter().collect();
    let xs = [4, 7, 9, 11, 13, 17, 19, 23, 25, 29];
    let expect: BTreeSet<_> = xs
        .iter()
        .map(|&x| from_small(30, &(1..).map(|k| k * x).take_while(|&y| y < 30).collect::<Vec<_>>()))
        .collect();
    ensure(got == expect, || format!("got {got:?}"))?;
    Ok(format!("T(x,31) for x in {xs:?}"))
}

fn min_genus_examples() -> Outcome {
    let (a, b) = (min_genus(7).map_err(|e| e.to_string())?, min_genus(6).map_err(|e| e.to_string())?);
    ensure(a == 4 && b == 5, || format!("min_genus(7)={a} min_genus(6)={b}"))?;
    Ok("min_genus(7)=4, min_genus(6)=5".into())
}

fn closure51() -> Outcome {
    let c = closure(51, &[8, 28, 42]).map_err(|e| e.to_string())?;
    let expect = vec![8, 16, 24, 28, 32, 36, 40, 42, 44, 46, 48, 50];
    ensure(c.small_elements() == expect, || format!("small elements {:?}", c.small_elements()))?;
    ensure(c.frobenius() == 51, || format!("F={}", c.frobenius()))?;
    let sys = minimal_system(51, &c).map_err(|e| e.to_string())?;
    ensure(sys.elements().as_slice() == [8, 28, 42], || format!("system {:?}", sys.elements()))?;
    Ok("closure and minimal system match".into())
}

fn minimal_system21() -> Outcome {
    let s = from_small(21, &[4, 8, 10, 12, 14, 16, 18, 20]);
    let sys = minimal_system(21, &s).map_err(|e| e.to_string())?;
    let r = rank(21, &s).map_err(|e| e.to_string())?;
    ensure(sys.elements().as_slice() == [4, 10] && r == 2, || format!("{:?} rank {r}", sys.elements()))?;
    Ok("{4,10}, rank 2".into())
}

fn infeasible18() -> Outcome {
    let f = feasible_rank(18, 3);
    let list = enumerate_rank(18, 3).map_err(|e| e.to_string())?;
    ensure(!f && list.is_empty(), || format!("feasible={f}, {} semigroups", list.len()))?;
    Ok("feasible_rank(18,3)=false, no semigroups".into())
}

fn gap_fixtures() -> Outcome {
    let pf = gens(&[7, 8, 9, 11, 13]).pseudo_frobenius();
    ensure(pf == [6, 10, 12], || format!("PF {pf:?}"))?;
    let sg = gens(&[6, 7, 8, 10, 11]).special_gaps();
    ensure(sg == [4, 5, 9], || format!("SG {sg:?}"))?;
    let ap = gens(&[8, 9, 11, 13]).apery(8).map_err(|e| e.to_string())?;
    ensure(ap.entries() == [0, 9, 18, 11, 20, 13, 22, 31], || format!("Ap {:?}", ap.entries()))?;
    Ok("PF, SG and Apéry set match".into())
}

fn oracle_equivalence() -> Outcome {
    let t = Instant::now();
    for f in 1..=16 {
        let brute: BTreeSet<_> = brute_force_sat(f).map_err(|e| e.to_string())?.into_iter().collect();
        let fast: BTreeSet<_> = enumerate_sat(f).map_err(|e| e.to_string())?.into_iter().collect();
        ensure(brute == fast, || format!("F={f}: tree walk differs from brute force"))?;
        for g in 0..=f + 1 {
            let slice: BTreeSet<_> = enumerate_sat_genus(f, g).map_err(|e| e.to_string())?.into_iter().collect();
            let filtered: BTreeSet<_> = brute.iter().filter(|s| s.genus() == g).cloned().collect();
            ensure(slice == filtered, || format!("F={f} g={g}: genus slice differs"))?;
        }
        let mut seen = BTreeSet::new();
        for p in 0..=f {
            for s in enumerate_rank(f, p).map_err(|e| e.to_string())? {
                let r = rank(f, &s).map_err(|e| e.to_string())?;
                ensure(r == p, || format!("F={f}: rank {r} listed under {p}"))?;
                ensure(seen.insert(s), || format!("F={f}: semigroup in two rank classes"))?;
            }
        }
        ensure(seen == brute, || format!("F={f}: rank classes do not cover Sat(F)"))?;
        let maximal: BTreeSet<_> = maximal_elements(f).map_err(|e| e.to_string())?.into_iter().collect();
        let filtered: BTreeSet<_> =
            brute.iter().filter(|s| !brute.iter().any(|t| t != *s && s.is_subset(t))).cloned().collect();
        ensure(maximal == filtered, || format!("F={f}: maximal elements differ"))?;
    }
    let elapsed = t.elapsed();
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!("F=1..16 in {elapsed:?}"))
}

fn property_suites() -> Outcome {
    let (mut members, mut windows, mut round_trips) = (0, 0, 0);
    for f in 1..=16usize {
        for s in enumerate_sat(f).map_err(|e| e.to_string())? {
            let g = s.genus();
            ensure(s.is_saturated() && s.is_med() && s.frobenius() == f, || format!("{s:?}"))?;
            ensure(g + s.small_count() == f + 1 && f < 2 * g && g <= f, || format!("{s:?}"))?;
            members += 1;
            for x in s.special_gaps() {
                if x >= s.multiplicity() || x == f {
                    continue;
                }
                let mut small = s.small_elements();
                small.push(x);
                let full = from_small(f, &small).is_saturated();
                let fast = extension_is_saturated(&s, x).map_err(|e| e.to_string())?;
                ensure(fast == full, || format!("window test wrong for {s:?} + {x}"))?;
                windows += 1;
            }
            let sys = minimal_system(f, &s).map_err(|e| e.to_string())?;
            ensure(closure(f, sys.elements()).ok() == Some(s.clone()), || format!("{s:?}"))?;
        }
        for xs in small_subsets(f.saturating_sub(1), 3) {
            if !is_sat_set(f, &xs) {
                continue;
            }
            let c = closure(f, &xs).map_err(|e| e.to_string())?;
            let sys = minimal_system(f, &c).map_err(|e| e.to_string())?;
            ensure(closure(f, sys.elements()).ok() == Some(c.clone()), || format!("F={f} X={xs:?}"))?;
            if is_minimal_system(f, &xs).map_err(|e| e.to_string())? {
                ensure(sys.elements().as_slice() == xs.as_slice(), || format!("F={f} X={xs:?}"))?;
            }
            round_trips += 1;
        }
    }
    Ok(format!("{members} members, {windows} window tests, {round_trips} round trips"))
}

fn determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_satsemi");
    let run = |jobs: &str| -> Result<Vec<u8>, String> {
        let out = Command::new(bin)
            .args(["enumerate", "--frobenius", "14", "--jobs", jobs])
            .env_remove("SATSEMI_COLOR")
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.success(), || String::from_utf8_lossy(&out.stderr).into_owned())?;
        Ok(out.stdout)
    };
    let base = run("1")?;
    let (a, b) = (run("4")?, run("4")?);
    ensure(!base.is_empty() && a == base && b == base, || "outputs differ".into())?;
    Ok(format!("{} bytes identical", base.len()))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("Sat(7) enumeration", sat7_example),
        ("Sat(7, genus 5)", sat7_genus5),
        ("maximal elements of Sat(30)", maximal30),
        ("minimum genus for F=7 and F=6", min_genus_examples),
        ("closure of {8,28,42} at F=51", closure51),
        ("minimal system at F=21", minimal_system21),
        ("rank 3 infeasible at F=18", infeasible18),
        ("Apéry, pseudo-Frobenius and special gap fixtures", gap_fixtures),
        ("oracle equivalence for F=1..16", oracle_equivalence),
        ("property suites over F<=16", property_suites),
        ("byte-identical output across --jobs", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
