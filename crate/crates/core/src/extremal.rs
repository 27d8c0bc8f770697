//! Maximal elements and minimum genus of `Sat(F)`.

use crate::bitmap::Bitmap;
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// `T(a, b) = ⟨a⟩ ∪ {x : x ≥ b}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ToothSemigroup {
    pub a: usize,
    pub b: usize,
}

impl ToothSemigroup {
    pub fn to_semigroup(self) -> Result<NumericalSemigroup> {
        tooth(self.a, self.b)
    }
}

/// Builds `T(a, b)`. Its Frobenius number is the largest `x < b` not
/// divisible by `a`; `a = 1` or `b = 1` would give ℕ and is rejected.
pub fn tooth(a: usize, b: usize) -> Result<NumericalSemigroup> {
    if a <= 1 || b <= 1 {
        return Err(Error::NotRepresentable);
    }
    let frobenius = (1..b).rev().find(|x| x % a != 0).expect("1 is not a multiple of a >= 2");
    let mut members = Bitmap::new(frobenius + 2);
    for x in (0..frobenius).step_by(a) {
        members.set(x);
    }
    members.set(frobenius + 1);
    Ok(NumericalSemigroup::from_parts(frobenius, members))
}

/// Least positive integer that does not divide `n`.
pub fn smallest_non_divisor(n: usize) -> usize {
    (2..).find(|p| n % p != 0).expect("n + 1 never divides n")
}

/// `A(n) = {x ∈ {1, …, n} : x ∤ n}`.
pub fn non_divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|x| n % x != 0).collect()
}

/// `B(n)`: the elements of `A(n)` not divisible by any other element of `A(n)`.
pub fn minimal_non_divisors(n: usize) -> Vec<usize> {
    let a = non_divisors(n);
    a.iter()
        .copied()
        .filter(|&x| a.iter().all(|&y| y == x || x % y != 0))
        .collect()
}

/// The inclusion-maximal members of `Sat(F)`: `T(x, F+1)` for `x ∈ B(F)`, in
/// increasing `x`. For `F ∈ {1, 2}` the family is just `{Δ(F+1)}`.
pub fn maximal_elements(frobenius: usize) -> Result<Vec<NumericalSemigroup>> {
    if frobenius == 0 {
        return Err(Error::ZeroFrobenius);
    }
    let b = minimal_non_divisors(frobenius);
    if b.is_empty() {
        return Ok(vec![NumericalSemigroup::ordinary(frobenius + 1)?]);
    }
    b.into_iter().map(|x| tooth(x, frobenius + 1)).collect()
}

/// `min{g(S) : S ∈ Sat(F)} = F - ⌊F / p⌋` with `p` the least non-divisor of `F`.
pub fn min_genus(frobenius: usize) -> Result<usize> {
    if frobenius == 0 {
        return Err(Error::ZeroFrobenius);
    }
    Ok(frobenius - frobenius / smallest_non_divisor(frobenius))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_b(n: usize) -> Vec<usize> {
        // x in 1..=n, x ∤ n, and no y ≠ x in that set divides x
        let mut out = Vec::new();
        for x in 1..=n {
            if n % x == 0 {
                continue;
            }
            if (1..=n).any(|y| y != x && n % y != 0 && x % y == 0) {
                continue;
            }
            out.push(x);
        }
        out
    }

    #[test]
    fn tooth_examples() {
        let t = tooth(2, 8).unwrap();
        assert_eq!(t.frobenius(), 7);
        assert_eq!(t.small_elements(), vec![2, 4, 6]);
        assert_eq!(t.genus(), 4);
        let t = tooth(4, 7).unwrap();
        assert_eq!(t.frobenius(), 6);
        assert_eq!(t.genus(), 5);
        assert_eq!(tooth(1, 8), Err(Error::NotRepresentable));
        // b - 1 divisible by a pulls the conductor down: T(3, 7) = {0,3,6,7,…}
        let t = tooth(3, 7).unwrap();
        assert_eq!(t.frobenius(), 5);
        assert_eq!(t.small_elements(), vec![3]);
    }

    #[test]
    fn non_divisor_sets() {
        assert_eq!(
            non_divisors(30),
            vec![4, 7, 8, 9, 11, 12, 13, 14, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29]
        );
        assert_eq!(non_divisors(30).len(), 22);
        assert_eq!(minimal_non_divisors(30), vec![4, 7, 9, 11, 13, 17, 19, 23, 25, 29]);
        assert!(minimal_non_divisors(1).is_empty());
        assert_eq!(brute_b(7), vec![2, 3, 5]);
        assert_eq!(minimal_non_divisors(7), brute_b(7));
        for n in 1..=60 {
            assert_eq!(minimal_non_divisors(n), brute_b(n), "n = {n}");
        }
    }

    #[test]
    fn maximal_elements_examples() {
        let m = maximal_elements(30).unwrap();
        let xs: Vec<usize> = m.iter().map(|s| s.multiplicity()).collect();
        assert_eq!(xs, vec![4, 7, 9, 11, 13, 17, 19, 23, 25, 29]);
        assert!(m.iter().all(|s| s.frobenius() == 30 && s.is_saturated()));
        assert_eq!(maximal_elements(1).unwrap(), vec![NumericalSemigroup::ordinary(2).unwrap()]);
        assert_eq!(maximal_elements(2).unwrap(), vec![NumericalSemigroup::ordinary(3).unwrap()]);
        let m7: Vec<Vec<usize>> = maximal_elements(7).unwrap().iter().map(|s| s.small_elements()).collect();
        assert_eq!(m7, vec![vec![2, 4, 6], vec![3, 6], vec![5]]);
    }

    #[test]
    fn min_genus_examples() {
        assert_eq!(min_genus(7), Ok(4));
        assert_eq!(min_genus(6), Ok(5));
        assert_eq!(min_genus(12), Ok(10));
        assert_eq!(min_genus(1), Ok(1));
        assert_eq!(min_genus(0), Err(Error::ZeroFrobenius));
    }

    #[test]
    fn tooth_with_non_divisor_is_saturated() {
        for f in 3..=40 {
            for a in 2..f {
                if f % a != 0 {
                    let t = tooth(a, f + 1).unwrap();
                    assert_eq!(t.frobenius(), f);
                    assert!(t.is_saturated(), "T({a},{})", f + 1);
                }
            }
        }
    }
}
