//! The tree of `Sat(F)`.
//!
//! Every `S ∈ Sat(F)` other than `Δ(F+1)` has the parent `S \ {m(S)}`, and
//! the children of `S` are the semigroups `S ∪ {x}` with `x` a special gap of
//! `S` below `m(S)`, `x ≠ F`, and `S ∪ {x}` saturated. Enumeration walks the
//! tree layer by layer; layer `k` holds the members of genus `F - k`.

use num_integer::gcd;
use rayon::prelude::*;
use rayon::ThreadPool;

use crate::error::{Error, Result};
use crate::extremal::min_genus;
use crate::semigroup::{AperyTable, GeneratorSet, NumericalSemigroup};

/// A vertex of the tree: a member of `Sat(F)` together with its minimal
/// generators, which are maintained incrementally from parent to child.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeNode {
    semigroup: NumericalSemigroup,
    msg: GeneratorSet,
    depth: usize,
}

impl TreeNode {
    /// The root `Δ(F+1) = ⟨F+1, …, 2F+1⟩`.
    pub fn root(frobenius: usize) -> Result<Self> {
        if frobenius == 0 {
            return Err(Error::ZeroFrobenius);
        }
        let semigroup = NumericalSemigroup::ordinary(frobenius + 1)?;
        let msg = GeneratorSet::from_sorted((frobenius + 1..=2 * frobenius + 1).collect());
        Ok(TreeNode { semigroup, msg, depth: 0 })
    }

    /// Wraps a member of `Sat(F)`, computing its generators from scratch.
    pub fn new(semigroup: NumericalSemigroup) -> Result<Self> {
        if !semigroup.is_saturated() {
            return Err(Error::NotSaturated);
        }
        let msg = semigroup.minimal_generators();
        let depth = semigroup.small_count() - 1;
        Ok(TreeNode { semigroup, msg, depth })
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    pub fn into_semigroup(self) -> NumericalSemigroup {
        self.semigroup
    }

    pub fn msg(&self) -> &GeneratorSet {
        &self.msg
    }

    /// Edges to the root; equals `F - genus`.
    pub fn depth(&self) -> usize {
        self.depth
    }

    /// Children in canonical order.
    pub fn children(&self) -> Vec<TreeNode> {
        let mut out: Vec<TreeNode> = child_candidates(self)
            .into_iter()
            .map(|x| {
                let msg = child_msg_unchecked(&self.msg, x)
                    .expect("saturated extensions are MED, so every residue class is hit");
                TreeNode {
                    semigroup: self.semigroup.with_element(x),
                    msg,
                    depth: self.depth + 1,
                }
            })
            .collect();
        out.sort_by(|a, b| a.semigroup.cmp(&b.semigroup));
        out
    }
}

/// Special gaps of a MED semigroup from its cached generators: the Apéry set
/// of the multiplicity is `{0} ∪ msg \ {m}`.
fn special_gaps_from_msg(frobenius: usize, msg: &GeneratorSet) -> Vec<usize> {
    let m = msg[0];
    let mut entries = vec![0; m];
    for &g in &msg[1..] {
        entries[g % m] = g;
    }
    debug_assert!(entries[1..].iter().all(|&w| w != 0));
    let pf: Vec<usize> = AperyTable::from_entries(m, entries)
        .maximals()
        .into_iter()
        .map(|w| w - m)
        .collect();
    debug_assert_eq!(pf.last(), Some(&frobenius));
    pf.iter()
        .copied()
        .filter(|&x| pf.binary_search(&(2 * x)).is_err())
        .collect()
}

/// `θ(S)`: the `x ∈ SG(S)` with `x < m(S)`, `x ≠ F` and `S ∪ {x}` saturated.
pub fn child_candidates(node: &TreeNode) -> Vec<usize> {
    let s = &node.semigroup;
    let f = s.frobenius();
    let m = node.msg[0];
    special_gaps_from_msg(f, &node.msg)
        .into_iter()
        .filter(|&x| x < m && x != f && window_test(s, m, x))
        .collect()
}

/// `s + d_{S∪{x}}(s) ∈ S` for the members `s` of `{m, …, m + x}`; the only
/// members of `S ∪ {x}` below `m` are `0` and `x`, so the running gcd starts
/// at `x`.
fn window_test(s: &NumericalSemigroup, m: usize, x: usize) -> bool {
    let mut d = x;
    for t in m..=m + x {
        if s.contains(t) {
            d = gcd(d, t);
            if !s.contains(t + d) {
                return false;
            }
        }
    }
    true
}

/// Decides whether `S ∪ {x}` is saturated by checking only the window
/// `{m(S), …, m(S) + x}`. Requires `S` saturated, `x ∈ SG(S)`, `x < m(S)` and
/// `x ≠ F(S)`.
pub fn extension_is_saturated(s: &NumericalSemigroup, x: usize) -> Result<bool> {
    let m = s.multiplicity();
    if !s.is_saturated() {
        return Err(Error::PreconditionViolated("semigroup is not saturated".into()));
    }
    if x >= m || x == s.frobenius() {
        return Err(Error::PreconditionViolated(format!(
            "{x} must lie below the multiplicity {m} and differ from the frobenius number"
        )));
    }
    if !s.special_gaps().contains(&x) {
        return Err(Error::PreconditionViolated(format!("{x} is not a special gap")));
    }
    Ok(window_test(s, m, x))
}

/// Minimal generators of `S ∪ {x}` from those of `S`: `x` together with the
/// least generator of `S` in each nonzero residue class modulo `x`.
pub fn child_msg(s: &NumericalSemigroup, msg: &GeneratorSet, x: usize) -> Result<GeneratorSet> {
    if x == 0 || x >= s.multiplicity() || s.contains(x) || !s.contains(2 * x) {
        return Err(Error::PreconditionViolated(format!(
            "{x} is not a special gap below the multiplicity"
        )));
    }
    child_msg_unchecked(msg, x)
}

fn child_msg_unchecked(msg: &GeneratorSet, x: usize) -> Result<GeneratorSet> {
    let mut alpha = vec![0usize; x];
    for &g in msg.iter() {
        let r = g % x;
        if r != 0 && alpha[r] == 0 {
            alpha[r] = g;
        }
    }
    if let Some(residue) = (1..x).find(|&r| alpha[r] == 0) {
        return Err(Error::ResidueClassMissing { residue, modulus: x });
    }
    alpha[0] = x;
    alpha.sort_unstable();
    Ok(GeneratorSet::from_sorted(alpha))
}

/// Layered walk of the tree of `Sat(F)`.
///
/// ```
/// use satsemi::SatTree;
/// let counts: Vec<usize> = SatTree::new(7).unwrap().layers().map(|l| l.len()).collect();
/// assert_eq!(counts, vec![1, 3, 2, 1]);
/// ```
pub struct SatTree {
    frobenius: usize,
    max_depth: Option<usize>,
    pool: Option<ThreadPool>,
}

impl SatTree {
    pub fn new(frobenius: usize) -> Result<Self> {
        if frobenius == 0 {
            return Err(Error::ZeroFrobenius);
        }
        Ok(SatTree { frobenius, max_depth: None, pool: None })
    }

    /// Expands nodes of a layer on `jobs` threads. Output does not depend on
    /// the thread count.
    pub fn jobs(mut self, jobs: usize) -> Self {
        self.pool = if jobs > 1 {
            rayon::ThreadPoolBuilder::new().num_threads(jobs).build().ok()
        } else {
            None
        };
        self
    }

    /// Stops after the layer at `depth`.
    pub fn max_depth(mut self, depth: usize) -> Self {
        self.max_depth = Some(depth);
        self
    }

    /// Iterator over layers, each sorted canonically. The previous layer is
    /// dropped as soon as the next one has been expanded.
    pub fn layers(self) -> Layers {
        let root = TreeNode::root(self.frobenius).expect("frobenius checked in new");
        Layers { next: Some(vec![root]), tree: self }
    }

    fn expand(&self, layer: &[TreeNode]) -> Vec<TreeNode> {
        let mut next: Vec<TreeNode> = match &self.pool {
            Some(pool) => pool.install(|| layer.par_iter().flat_map_iter(|n| n.children()).collect()),
            None => layer.iter().flat_map(|n| n.children()).collect(),
        };
        // Children of distinct parents are distinct, so sorting alone fixes the order.
        next.sort_unstable_by(|a, b| a.semigroup.cmp(&b.semigroup));
        next
    }
}

pub struct Layers {
    tree: SatTree,
    next: Option<Vec<TreeNode>>,
}

impl Iterator for Layers {
    type Item = Vec<TreeNode>;

    fn next(&mut self) -> Option<Vec<TreeNode>> {
        let layer = self.next.take().filter(|l| !l.is_empty())?;
        let depth = layer[0].depth;
        if self.tree.max_depth.map_or(true, |d| depth < d) {
            self.next = Some(self.tree.expand(&layer));
        }
        Some(layer)
    }
}

/// All of `Sat(F)`, by increasing depth and canonically within a layer.
pub fn enumerate_sat(frobenius: usize) -> Result<Vec<NumericalSemigroup>> {
    enumerate_sat_with_jobs(frobenius, 1)
}

pub fn enumerate_sat_with_jobs(frobenius: usize, jobs: usize) -> Result<Vec<NumericalSemigroup>> {
    Ok(SatTree::new(frobenius)?
        .jobs(jobs)
        .layers()
        .flatten()
        .map(TreeNode::into_semigroup)
        .collect())
}

/// `Sat(F, g)`: the members of `Sat(F)` with genus `g`, found at depth
/// `F - g`. Genera outside `[min_genus(F), F]` give an empty result.
pub fn enumerate_sat_genus(frobenius: usize, genus: usize) -> Result<Vec<NumericalSemigroup>> {
    enumerate_sat_genus_with_jobs(frobenius, genus, 1)
}

pub fn enumerate_sat_genus_with_jobs(
    frobenius: usize,
    genus: usize,
    jobs: usize,
) -> Result<Vec<NumericalSemigroup>> {
    let tree = SatTree::new(frobenius)?;
    if genus > frobenius || genus < min_genus(frobenius)? {
        return Ok(Vec::new());
    }
    let depth = frobenius - genus;
    let layer = tree
        .jobs(jobs)
        .max_depth(depth)
        .layers()
        .find(|l| l[0].depth == depth)
        .unwrap_or_default();
    Ok(layer.into_iter().map(TreeNode::into_semigroup).collect())
}

/// The associated chain `S, S \ {m(S)}, …, Δ(F+1)`, of length `n(S)`.
pub fn chain(s: &NumericalSemigroup) -> Vec<NumericalSemigroup> {
    let mut out = vec![s.clone()];
    while let Ok(parent) = out.last().expect("nonempty").remove_multiplicity() {
        out.push(parent);
    }
    out
}
