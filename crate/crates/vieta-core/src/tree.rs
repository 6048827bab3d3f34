//! Generation and enumeration of the solution trees, membership testing via
//! descent, and the independent brute-force oracles.
//!
//! The tree side works on [`BigInt`] triples throughout. The oracles scan a
//! box `[1, bound]^3` with fixed-width machine integers whose ranges are
//! validated up front, so every operation stays exact; inputs outside the
//! validated range are rejected rather than rounded.

use crate::cubic::{self, CubicParams, JumpDir, SingularKind, Triple};
use crate::quartic::{self, QuarticParams};
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use std::collections::BTreeSet;
use thiserror::Error;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("{0} is not a solution of the given equation")]
    NotASolution(Triple),
    #[error("oracle input out of the validated exact range: {0}")]
    OracleOutOfRange(String),
}

/// A family selector: one cubic or one quartic equation, providing children,
/// parent, residual and singular classification by delegation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Cubic(CubicParams),
    Quartic(QuarticParams),
}

impl FamilySpec {
    pub fn cubic(k1: u64, k2: u64, k3: u64) -> Self {
        FamilySpec::Cubic(CubicParams::from_u64(k1, k2, k3))
    }

    pub fn quartic(k: u64) -> Self {
        FamilySpec::Quartic(QuarticParams::from_u64(k))
    }

    pub fn residual(&self, t: &Triple) -> BigInt {
        match self {
            FamilySpec::Cubic(p) => cubic::cubic_residual(p, t),
            FamilySpec::Quartic(q) => quartic::quartic_residual(q, t),
        }
    }

    pub fn is_solution(&self, t: &Triple) -> bool {
        self.residual(t).is_zero()
    }

    pub fn children(&self, t: &Triple) -> Result<Vec<(Triple, JumpDir)>, TreeError> {
        match self {
            FamilySpec::Cubic(p) => {
                cubic::children(p, t).map_err(|_| TreeError::NotASolution(t.clone()))
            }
            FamilySpec::Quartic(q) => {
                quartic::quartic_children(q, t).map_err(|_| TreeError::NotASolution(t.clone()))
            }
        }
    }

    pub fn parent(&self, t: &Triple) -> Option<Triple> {
        match self {
            FamilySpec::Cubic(p) => cubic::parent(p, t).ok(),
            FamilySpec::Quartic(q) => quartic::parent(q, t).ok(),
        }
    }

    pub fn classify_singular(&self, t: &Triple) -> Result<SingularKind, TreeError> {
        match self {
            FamilySpec::Cubic(p) => {
                cubic::classify_singular(p, t).map_err(|_| TreeError::NotASolution(t.clone()))
            }
            FamilySpec::Quartic(q) => {
                quartic::classify_singular(q, t).map_err(|_| TreeError::NotASolution(t.clone()))
            }
        }
    }

    fn descend(&self, t: &Triple) -> Result<(Triple, JumpDir), TreeError> {
        match self {
            FamilySpec::Cubic(p) => {
                cubic::descend(p, t).map_err(|_| TreeError::NotASolution(t.clone()))
            }
            FamilySpec::Quartic(q) => {
                quartic::descend(q, t).map_err(|_| TreeError::NotASolution(t.clone()))
            }
        }
    }
}

/// A vertex of the solution tree, stored flat with a parent index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeNode {
    pub triple: Triple,
    pub depth: u32,
    pub parent: Option<usize>,
    pub dir: Option<JumpDir>,
}

/// Enumeration bound: either a depth cap or an entry cap (prune once the
/// triple's maximum exceeds it; sound because maxima never shrink along
/// tree edges).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EnumBound {
    MaxDepth(u32),
    MaxEntry(BigInt),
}

impl EnumBound {
    pub fn max_entry_u64(bound: u64) -> Self {
        EnumBound::MaxEntry(bound.into())
    }
}

fn within(bound: &EnumBound, t: &Triple, depth: u32) -> bool {
    match bound {
        EnumBound::MaxDepth(d) => depth <= *d,
        EnumBound::MaxEntry(m) => t.max_entry() <= m,
    }
}

fn expand(
    spec: &FamilySpec,
    bound: &EnumBound,
    t: &Triple,
    child_depth: u32,
) -> Vec<(Triple, JumpDir)> {
    spec.children(t)
        .expect("tree nodes are solutions")
        .into_iter()
        .filter(|(child, _)| within(bound, child, child_depth))
        .collect()
}

/// Breadth-first listing of all tree nodes within the bound, in the
/// deterministic order (depth, then parent order, then jump direction).
/// With a max-entry bound the output contains every solution with maximum
/// at most the bound, exactly once.
pub fn generate(spec: &FamilySpec, bound: &EnumBound) -> Vec<TreeNode> {
    #[cfg(feature = "parallel")]
    {
        generate_impl(spec, bound, true)
    }
    #[cfg(not(feature = "parallel"))]
    {
        generate_impl(spec, bound, false)
    }
}

/// [`generate`] forced onto the sequential path; the output is identical.
pub fn generate_sequential(spec: &FamilySpec, bound: &EnumBound) -> Vec<TreeNode> {
    generate_impl(spec, bound, false)
}

fn generate_impl(spec: &FamilySpec, bound: &EnumBound, parallel: bool) -> Vec<TreeNode> {
    let root = Triple::root();
    if !within(bound, &root, 0) {
        return Vec::new();
    }
    let mut nodes = vec![TreeNode {
        triple: root,
        depth: 0,
        parent: None,
        dir: None,
    }];
    let mut frontier = vec![0usize];
    let mut depth = 0u32;
    while !frontier.is_empty() {
        depth += 1;
        // Expand the whole level, then append children in parent order so
        // the output is independent of the parallelism setting.
        let expanded: Vec<Vec<(Triple, JumpDir)>> = run_level(spec, bound, &nodes, &frontier, depth, parallel);
        let mut next = Vec::new();
        for (&parent_idx, kids) in frontier.iter().zip(expanded) {
            for (child, dir) in kids {
                let idx = nodes.len();
                nodes.push(TreeNode {
                    triple: child,
                    depth,
                    parent: Some(parent_idx),
                    dir: Some(dir),
                });
                next.push(idx);
            }
        }
        frontier = next;
    }
    nodes
}

#[cfg(feature = "parallel")]
fn run_level(
    spec: &FamilySpec,
    bound: &EnumBound,
    nodes: &[TreeNode],
    frontier: &[usize],
    depth: u32,
    parallel: bool,
) -> Vec<Vec<(Triple, JumpDir)>> {
    if parallel {
        frontier
            .par_iter()
            .map(|&i| expand(spec, bound, &nodes[i].triple, depth))
            .collect()
    } else {
        frontier
            .iter()
            .map(|&i| expand(spec, bound, &nodes[i].triple, depth))
            .collect()
    }
}

#[cfg(not(feature = "parallel"))]
fn run_level(
    spec: &FamilySpec,
    bound: &EnumBound,
    nodes: &[TreeNode],
    frontier: &[usize],
    depth: u32,
    _parallel: bool,
) -> Vec<Vec<(Triple, JumpDir)>> {
    frontier
        .iter()
        .map(|&i| expand(spec, bound, &nodes[i].triple, depth))
        .collect()
}

/// The unique descent path from `t` down to the root `(1,1,1)`. Each entry
/// pairs a triple with the jump direction taken from it; the terminal root
/// is omitted, so the root itself yields an empty path.
pub fn membership_path(spec: &FamilySpec, t: &Triple) -> Result<Vec<(Triple, JumpDir)>, TreeError> {
    if !spec.is_solution(t) {
        return Err(TreeError::NotASolution(t.clone()));
    }
    let mut path = Vec::new();
    let mut cur = t.clone();
    loop {
        match spec.classify_singular(&cur)? {
            SingularKind::Origin => return Ok(path),
            SingularKind::NotSingular => {
                let (down, dir) = spec.descend(&cur)?;
                path.push((cur, dir));
                cur = down;
            }
            kind => {
                let dir = kind.axis_dir().expect("axis singular");
                path.push((cur, dir));
                cur = Triple::root();
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Brute-force oracles
// ---------------------------------------------------------------------------

/// Exhaustive oracle over `[1, bound]^3`, independent of the tree engine.
///
/// The default path fixes two coordinates and solves the remaining monic
/// quadratic exactly (an accelerated but still exhaustive scan); the
/// reference path is the plain triple loop, see [`brute_force_reference`].
pub fn brute_force(spec: &FamilySpec, bound: u64) -> Result<BTreeSet<Triple>, TreeError> {
    #[cfg(feature = "parallel")]
    {
        brute_force_impl(spec, bound, true)
    }
    #[cfg(not(feature = "parallel"))]
    {
        brute_force_impl(spec, bound, false)
    }
}

/// [`brute_force`] forced onto the sequential path; the output is identical.
pub fn brute_force_sequential(spec: &FamilySpec, bound: u64) -> Result<BTreeSet<Triple>, TreeError> {
    brute_force_impl(spec, bound, false)
}

fn brute_force_impl(
    spec: &FamilySpec,
    bound: u64,
    parallel: bool,
) -> Result<BTreeSet<Triple>, TreeError> {
    match spec {
        FamilySpec::Cubic(p) => cubic_scan(p, bound, parallel),
        FamilySpec::Quartic(q) => quartic_scan(q, bound, parallel),
    }
}

fn small_param(k: &BigInt, what: &str) -> Result<i128, TreeError> {
    k.to_i128()
        .filter(|v| *v <= 1 << 20)
        .ok_or_else(|| TreeError::OracleOutOfRange(format!("parameter {what} too large")))
}

// Perfect squares hit only 12 of the 64 residues mod 64; reject the rest
// before paying for an exact integer square root.
const fn square_mask_mod_64() -> u64 {
    let mut mask = 0u64;
    let mut k = 0u64;
    while k < 64 {
        mask |= 1 << ((k * k) % 64);
        k += 1;
    }
    mask
}

const SQUARE_MOD_64: u64 = square_mask_mod_64();

#[inline]
fn maybe_square(n: u128) -> bool {
    (SQUARE_MOD_64 >> ((n as u64) & 63)) & 1 == 1
}

/// Exact floor square root of a u128 (integer Newton iteration).
fn isqrt_u128(n: u128) -> u128 {
    if n == 0 {
        return 0;
    }
    let shift = (127 - n.leading_zeros()) / 2 + 1;
    let mut x = 1u128 << shift;
    loop {
        let y = (x + n / x) >> 1;
        if y >= x {
            return x;
        }
        x = y;
    }
}

#[inline]
fn exact_sqrt(n: i128) -> Option<i128> {
    if n < 0 {
        return None;
    }
    let n = n as u128;
    if !maybe_square(n) {
        return None;
    }
    let r = isqrt_u128(n);
    (r * r == n).then_some(r as i128)
}

/// For fixed leading coefficients, push the (at most two) positive integer
/// roots `z` of `z^2 - s*z + p = 0` with `1 <= z <= bound` into `out`.
#[inline]
fn quadratic_roots(s: i128, p: i128, bound: i128, out: &mut Vec<i128>) {
    out.clear();
    if s < 2 {
        return;
    }
    let disc = s * s - 4 * p;
    let Some(r) = exact_sqrt(disc) else {
        return;
    };
    // disc = s^2 - 4p forces r and s to share parity when r is exact.
    debug_assert_eq!((s - r) & 1, 0);
    let z1 = (s - r) / 2;
    let z2 = (s + r) / 2;
    if z1 >= 1 && z1 <= bound {
        out.push(z1);
    }
    if r != 0 && z2 >= 1 && z2 <= bound {
        out.push(z2);
    }
}

fn cubic_scan(p: &CubicParams, bound: u64, parallel: bool) -> Result<BTreeSet<Triple>, TreeError> {
    let k1 = small_param(p.k1(), "k1")?;
    let k2 = small_param(p.k2(), "k2")?;
    let k3 = small_param(p.k3(), "k3")?;
    let m = 3 + k1 + k2 + k3;
    let b = bound as i128;
    // All intermediates must stay within i128: the dominant one is
    // (m * bound^2)^2 inside the discriminant.
    if m.checked_mul(b)
        .and_then(|v| v.checked_mul(b))
        .is_none_or(|v| v > 1 << 62)
    {
        return Err(TreeError::OracleOutOfRange(format!(
            "cubic scan bound {bound} with parameters {p} exceeds the exact machine range"
        )));
    }
    let row = |x: i128| -> Vec<(i128, i128, i128)> {
        let mut found = Vec::new();
        let mut roots = Vec::new();
        for y in 1..=b {
            // Quadratic in z: z^2 + (k2*y + k3*x - m*x*y) z + (x^2+y^2+k1*x*y).
            let s = m * x * y - k2 * y - k3 * x;
            let q = x * x + y * y + k1 * x * y;
            quadratic_roots(s, q, b, &mut roots);
            for &z in &roots {
                found.push((x, y, z));
            }
        }
        found
    };
    let rows = scan_rows(b, parallel, row);
    let set: BTreeSet<Triple> = rows
        .into_iter()
        .map(|(x, y, z)| Triple::from_u64(x as u64, y as u64, z as u64))
        .collect();
    debug_assert!(set.iter().all(|t| cubic::is_solution(p, t)));
    Ok(set)
}

fn quartic_scan(
    q: &QuarticParams,
    bound: u64,
    parallel: bool,
) -> Result<BTreeSet<Triple>, TreeError> {
    let k = small_param(q.k(), "k")?;
    let m = 7 + k;
    let b = bound as i128;
    // Dominant intermediate: (m * bound^4)^2 in the discriminant.
    if m.checked_mul(b)
        .and_then(|v| v.checked_mul(b))
        .and_then(|v| v.checked_mul(b))
        .and_then(|v| v.checked_mul(b))
        .is_none_or(|v| v > 1 << 62)
    {
        return Err(TreeError::OracleOutOfRange(format!(
            "quartic scan bound {bound} with parameter {q} exceeds the exact machine range"
        )));
    }
    let row = |y: i128| -> Vec<(i128, i128, i128)> {
        let mut found = Vec::new();
        let mut roots = Vec::new();
        let y2 = y * y;
        for z in 1..=b {
            // Quadratic in x: x^2 + (2y^2 + 2z^2 - m*y^2*z^2) x + (y^4 + k*y^2*z^2 + z^4).
            let z2 = z * z;
            let s = m * y2 * z2 - 2 * y2 - 2 * z2;
            let prod = y2 * y2 + k * y2 * z2 + z2 * z2;
            quadratic_roots(s, prod, b, &mut roots);
            for &x in &roots {
                found.push((x, y, z));
            }
        }
        found
    };
    let rows = scan_rows(b, parallel, row);
    let set: BTreeSet<Triple> = rows
        .into_iter()
        .map(|(x, y, z)| Triple::from_u64(x as u64, y as u64, z as u64))
        .collect();
    debug_assert!(set.iter().all(|t| quartic::is_solution(q, t)));
    Ok(set)
}

#[cfg(feature = "parallel")]
fn scan_rows<F>(b: i128, parallel: bool, row: F) -> Vec<(i128, i128, i128)>
where
    F: Fn(i128) -> Vec<(i128, i128, i128)> + Sync,
{
    if parallel {
        (1..=b as u64)
            .into_par_iter()
            .map(|x| row(x as i128))
            .reduce(Vec::new, |mut acc, mut v| {
                acc.append(&mut v);
                acc
            })
    } else {
        (1..=b).flat_map(row).collect()
    }
}

#[cfg(not(feature = "parallel"))]
fn scan_rows<F>(b: i128, _parallel: bool, row: F) -> Vec<(i128, i128, i128)>
where
    F: Fn(i128) -> Vec<(i128, i128, i128)> + Sync,
{
    (1..=b).flat_map(row).collect()
}

/// The reference oracle: the full triple loop over `[1, bound]^3` with a
/// direct residual check per lattice point. Quadratic-formula shortcuts are
/// deliberately absent; this is the path the accelerated scan is checked
/// against.
pub fn brute_force_reference(spec: &FamilySpec, bound: u64) -> Result<BTreeSet<Triple>, TreeError> {
    let b = bound as i128;
    let mut set = BTreeSet::new();
    match spec {
        FamilySpec::Cubic(p) => {
            let k1 = small_param(p.k1(), "k1")?;
            let k2 = small_param(p.k2(), "k2")?;
            let k3 = small_param(p.k3(), "k3")?;
            let m = 3 + k1 + k2 + k3;
            if m.checked_mul(b)
                .and_then(|v| v.checked_mul(b))
                .and_then(|v| v.checked_mul(b))
                .is_none_or(|v| v > i128::MAX / (8 * m.max(1)))
            {
                return Err(TreeError::OracleOutOfRange(format!(
                    "reference loop bound {bound} exceeds the exact machine range"
                )));
            }
            for x in 1..=b {
                for y in 1..=b {
                    for z in 1..=b {
                        let lhs =
                            x * x + y * y + z * z + k1 * x * y + k2 * y * z + k3 * z * x;
                        if lhs == m * x * y * z {
                            set.insert(Triple::from_u64(x as u64, y as u64, z as u64));
                        }
                    }
                }
            }
        }
        FamilySpec::Quartic(q) => {
            let k = small_param(q.k(), "k")?;
            let m = 7 + k;
            if m.checked_mul(b)
                .and_then(|v| v.checked_mul(b))
                .and_then(|v| v.checked_mul(b))
                .and_then(|v| v.checked_mul(b))
                .and_then(|v| v.checked_mul(b))
                .is_none()
            {
                return Err(TreeError::OracleOutOfRange(format!(
                    "reference loop bound {bound} exceeds the exact machine range"
                )));
            }
            for x in 1..=b {
                for y in 1..=b {
                    let y2 = y * y;
                    for z in 1..=b {
                        let z2 = z * z;
                        let lhs = x * x + y2 * y2 + z2 * z2 + k * y2 * z2 + 2 * x * y2 + 2 * x * z2;
                        if lhs == m * x * y2 * z2 {
                            set.insert(Triple::from_u64(x as u64, y as u64, z as u64));
                        }
                    }
                }
            }
        }
    }
    Ok(set)
}

/// True iff generation within the entry bound yields pairwise distinct
/// triples that agree exactly with the brute-force oracle on `[1, bound]^3`.
pub fn verify_uniqueness(spec: &FamilySpec, bound: u64) -> Result<bool, TreeError> {
    let nodes = generate(spec, &EnumBound::max_entry_u64(bound));
    let mut seen = BTreeSet::new();
    for node in &nodes {
        if !seen.insert(node.triple.clone()) {
            return Ok(false);
        }
    }
    let oracle = brute_force(spec, bound)?;
    Ok(seen == oracle)
}

/// Outcome of the max-number witness search for one value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessOutcome {
    /// A solution whose maximum equals the value.
    Witnessed(Triple),
    /// No witness found below the cap; reported, not an error.
    Inconclusive,
}

/// Operational form of the max-number property for cubic equations: every
/// value occurring in a solution with maximum at most `bound` should occur
/// as the maximum of some solution. The witness search walks the tree up to
/// `witness_cap` (it may exceed `bound`); values without a witness below the
/// cap are reported as [`WitnessOutcome::Inconclusive`].
pub fn max_number_witnesses(
    p: &CubicParams,
    bound: u64,
    witness_cap: u64,
) -> Result<Vec<(BigInt, WitnessOutcome)>, TreeError> {
    let spec = FamilySpec::Cubic(p.clone());
    let solutions = brute_force(&spec, bound)?;
    let mut values: BTreeSet<BigInt> = BTreeSet::new();
    for t in &solutions {
        for e in t.entries() {
            values.insert(e.clone());
        }
    }
    let witnesses = generate(&spec, &EnumBound::max_entry_u64(witness_cap));
    let mut report = Vec::new();
    for v in values {
        let witness = witnesses
            .iter()
            .find(|n| *n.triple.max_entry() == v)
            .map(|n| n.triple.clone());
        report.push((
            v,
            match witness {
                Some(t) => WitnessOutcome::Witnessed(t),
                None => WitnessOutcome::Inconclusive,
            },
        ));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triples(nodes: &[TreeNode]) -> Vec<Triple> {
        nodes.iter().map(|n| n.triple.clone()).collect()
    }

    #[test]
    fn generate_cubic_depth_two_matches_paper_tree() {
        let spec = FamilySpec::cubic(0, 1, 2);
        let nodes = generate(&spec, &EnumBound::MaxDepth(2));
        let expected: Vec<Triple> = [
            (1, 1, 1),
            (3, 1, 1),
            (1, 4, 1),
            (1, 1, 2),
            (3, 16, 1),
            (3, 1, 10),
            (21, 4, 1),
            (1, 4, 17),
            (7, 1, 2),
            (1, 9, 2),
        ]
        .iter()
        .map(|&(a, b, c)| Triple::from_u64(a, b, c))
        .collect();
        assert_eq!(triples(&nodes), expected);
    }

    #[test]
    fn generate_quartic_depth_two_matches_paper_tree() {
        let spec = FamilySpec::quartic(1);
        let nodes = generate(&spec, &EnumBound::MaxDepth(2));
        let expected: Vec<Triple> = [
            (1, 1, 1),
            (3, 1, 1),
            (1, 2, 1),
            (1, 1, 2),
            (3, 4, 1),
            (3, 1, 4),
            (21, 2, 1),
            (1, 2, 5),
            (21, 1, 2),
            (1, 5, 2),
        ]
        .iter()
        .map(|&(a, b, c)| Triple::from_u64(a, b, c))
        .collect();
        assert_eq!(triples(&nodes), expected);
    }

    #[test]
    fn generate_markov_by_entry_bound() {
        let spec = FamilySpec::cubic(0, 0, 0);
        let nodes = generate(&spec, &EnumBound::max_entry_u64(30));
        let got: BTreeSet<Triple> = triples(&nodes).into_iter().collect();
        assert_eq!(got.len(), nodes.len(), "no duplicates");
        let oracle = brute_force(&spec, 30).unwrap();
        assert_eq!(got, oracle);
        // All orderings of {1,1,2} and {1,2,5} appear, 22 triples in total.
        assert_eq!(nodes.len(), 22);
        assert!(got.contains(&Triple::from_u64(2, 1, 1)));
        assert!(got.contains(&Triple::from_u64(5, 2, 1)));
        assert!(got.contains(&Triple::from_u64(2, 1, 5)));
    }

    #[test]
    fn brute_force_examples() {
        let spec = FamilySpec::cubic(0, 1, 2);
        let got = brute_force(&spec, 4).unwrap();
        let expected: BTreeSet<Triple> = [(1, 1, 1), (3, 1, 1), (1, 4, 1), (1, 1, 2)]
            .iter()
            .map(|&(a, b, c)| Triple::from_u64(a, b, c))
            .collect();
        assert_eq!(got, expected);

        let spec = FamilySpec::quartic(1);
        let got = brute_force(&spec, 5).unwrap();
        let expected: BTreeSet<Triple> = [
            (1, 1, 1),
            (3, 1, 1),
            (1, 2, 1),
            (1, 1, 2),
            (3, 4, 1),
            (3, 1, 4),
            (1, 2, 5),
            (1, 5, 2),
        ]
        .iter()
        .map(|&(a, b, c)| Triple::from_u64(a, b, c))
        .collect();
        assert_eq!(got, expected);

        let spec = FamilySpec::cubic(0, 1, 2);
        let got = brute_force(&spec, 1).unwrap();
        assert_eq!(got.len(), 1);
        assert!(got.contains(&Triple::root()));
    }

    #[test]
    fn accelerated_matches_reference() {
        for spec in [
            FamilySpec::cubic(0, 0, 0),
            FamilySpec::cubic(0, 1, 2),
            FamilySpec::cubic(2, 2, 2),
            FamilySpec::quartic(0),
            FamilySpec::quartic(1),
        ] {
            assert_eq!(
                brute_force(&spec, 60).unwrap(),
                brute_force_reference(&spec, 60).unwrap()
            );
        }
    }

    #[test]
    fn membership_path_examples() {
        let spec = FamilySpec::cubic(0, 1, 2);
        let path = membership_path(&spec, &Triple::from_u64(373, 4, 17)).unwrap();
        assert_eq!(
            path,
            vec![
                (Triple::from_u64(373, 4, 17), JumpDir::First),
                (Triple::from_u64(1, 4, 17), JumpDir::Third),
                (Triple::from_u64(1, 4, 1), JumpDir::Second),
            ]
        );

        let spec = FamilySpec::quartic(1);
        let path = membership_path(&spec, &Triple::from_u64(741, 5, 2)).unwrap();
        assert_eq!(
            path,
            vec![
                (Triple::from_u64(741, 5, 2), JumpDir::First),
                (Triple::from_u64(1, 5, 2), JumpDir::Second),
                (Triple::from_u64(1, 1, 2), JumpDir::Third),
            ]
        );

        assert_eq!(membership_path(&spec, &Triple::root()).unwrap(), vec![]);
        assert!(membership_path(&spec, &Triple::from_u64(2, 2, 2)).is_err());
    }

    #[test]
    fn verify_uniqueness_small() {
        assert!(verify_uniqueness(&FamilySpec::cubic(0, 1, 2), 500).unwrap());
        assert!(verify_uniqueness(&FamilySpec::quartic(1), 800).unwrap());
    }

    #[test]
    fn squares_family_at_222() {
        assert!(verify_uniqueness(&FamilySpec::cubic(2, 2, 2), 900).unwrap());
        let spec = FamilySpec::cubic(2, 2, 2);
        for t in brute_force(&spec, 900).unwrap() {
            for e in t.entries() {
                assert!(quartic::perfect_sqrt(e).is_some(), "{t} entry {e}");
            }
        }
    }

    #[test]
    fn parent_of_child_is_node() {
        let spec = FamilySpec::quartic(1);
        let nodes = generate(&spec, &EnumBound::MaxDepth(4));
        for node in &nodes[1..] {
            let parent_triple = &nodes[node.parent.unwrap()].triple;
            assert_eq!(spec.parent(&node.triple).as_ref(), Some(parent_triple));
        }
    }

    #[test]
    fn max_number_witnesses_markov_like() {
        let p = CubicParams::from_u64(0, 1, 2);
        let report = max_number_witnesses(&p, 30, 100).unwrap();
        assert!(!report.is_empty());
        for (v, outcome) in report {
            match outcome {
                WitnessOutcome::Witnessed(t) => assert_eq!(*t.max_entry(), v),
                WitnessOutcome::Inconclusive => panic!("no witness for {v} below cap"),
            }
        }
    }

    #[test]
    fn oracle_range_validation() {
        let spec = FamilySpec::cubic(0, 0, 0);
        assert!(matches!(
            brute_force(&spec, 1 << 40),
            Err(TreeError::OracleOutOfRange(_))
        ));
    }

    #[test]
    fn sequential_and_default_agree() {
        let spec = FamilySpec::cubic(1, 1, 1);
        assert_eq!(
            generate(&spec, &EnumBound::max_entry_u64(200)),
            generate_sequential(&spec, &EnumBound::max_entry_u64(200))
        );
        assert_eq!(
            brute_force(&spec, 200).unwrap(),
            brute_force_sequential(&spec, 200).unwrap()
        );
    }
}
