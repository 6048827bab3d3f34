//! Labeled seeds `(x, B, Z)` and the three mutation rules.
//!
//! A seed mutation in direction `k` simultaneously transforms the cluster,
//! the exchange matrix and the exchange polynomials; the whole operation is
//! an involution. Every intermediate cluster variable stays a Laurent
//! polynomial in the initial cluster — observed here as exact-division
//! success, with [`GcpError::NotDivisible`] as the falsification alarm.

use crate::exchange::ExchangePoly;
use crate::gcp::matrix::{mutate_matrix, BdClass, DegreeMatrix, ExchangeMatrix};
use crate::laurent::{LaurentError, LaurentPoly};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GcpError {
    #[error("cluster size {0} does not match matrix rank {1}")]
    RankMismatch(usize, usize),
    #[error("cluster entries must be nonzero")]
    ZeroClusterEntry,
    #[error("mutation direction {0} out of range for rank {1}")]
    DirectionOutOfRange(usize, usize),
    /// The Laurent phenomenon failed: a mutation left a non-divisible
    /// numerator. Must never fire on registry seeds.
    #[error("Laurent phenomenon violated: mutation numerator not divisible by the old variable")]
    NotDivisible,
    /// A specialized cluster value was not a positive integer. Must never
    /// fire on registry seeds.
    #[error("specialization produced a non positive-integer value {0}")]
    NonIntegerSpecialization(String),
    #[error("walk contains an immediate repeat at position {0}")]
    ImmediateRepeat(usize),
    #[error("exchange matrix entry too large for a mutation exponent")]
    ExponentOverflow,
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

/// A labeled seed: cluster, exchange matrix and exchange polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Seed {
    cluster: Vec<LaurentPoly>,
    b: ExchangeMatrix,
    z: Vec<ExchangePoly>,
}

impl Seed {
    /// The initial seed: the cluster is the tuple of ring generators.
    pub fn initial(b: ExchangeMatrix, z: Vec<ExchangePoly>) -> Result<Self, GcpError> {
        let n = b.rank();
        let cluster = (0..n).map(|i| LaurentPoly::var(n, i)).collect();
        Seed::new(cluster, b, z)
    }

    pub fn new(
        cluster: Vec<LaurentPoly>,
        b: ExchangeMatrix,
        z: Vec<ExchangePoly>,
    ) -> Result<Self, GcpError> {
        let n = b.rank();
        if cluster.len() != n {
            return Err(GcpError::RankMismatch(cluster.len(), n));
        }
        if z.len() != n {
            return Err(GcpError::RankMismatch(z.len(), n));
        }
        for x in &cluster {
            if x.rank() != n {
                return Err(GcpError::RankMismatch(x.rank(), n));
            }
            if x.is_zero() {
                return Err(GcpError::ZeroClusterEntry);
            }
        }
        Ok(Seed { cluster, b, z })
    }

    pub fn rank(&self) -> usize {
        self.b.rank()
    }

    pub fn cluster(&self) -> &[LaurentPoly] {
        &self.cluster
    }

    pub fn matrix(&self) -> &ExchangeMatrix {
        &self.b
    }

    pub fn zpolys(&self) -> &[ExchangePoly] {
        &self.z
    }

    /// `D = diag(deg Z_1, ..., deg Z_n)`, derived from the exchange
    /// polynomials and never stored separately.
    pub fn degree_matrix(&self) -> DegreeMatrix {
        DegreeMatrix::new(self.z.iter().map(|z| z.degree() as u64).collect())
    }
}

fn check_direction(seed: &Seed, k: usize) -> Result<(), GcpError> {
    if k >= seed.rank() {
        return Err(GcpError::DirectionOutOfRange(k, seed.rank()));
    }
    Ok(())
}

/// Exchange-polynomial mutation: reverse the k-th coefficient list, leave
/// the others unchanged.
pub fn mutate_zpolys(z: &[ExchangePoly], k: usize) -> Vec<ExchangePoly> {
    z.iter()
        .enumerate()
        .map(|(j, zj)| if j == k { zj.reciprocal() } else { zj.clone() })
        .collect()
}

/// Cluster mutation in direction `k`:
/// `x'_k = (prod_i x_i^{[-b_ik]_+})^{d_k} * Z_k(prod_i x_i^{b_ik}) / x_k`.
///
/// The numerator is assembled with the exponents
/// `d_k*[-b_ik]_+ + j*b_ik >= 0`, so only nonnegative powers of the current
/// cluster variables are ever taken; the final exact division by `x_k` is
/// the observable Laurent phenomenon.
pub fn mutate_cluster(seed: &Seed, k: usize) -> Result<Vec<LaurentPoly>, GcpError> {
    check_direction(seed, k)?;
    let n = seed.rank();
    let dk = seed.z[k].degree() as i64;
    let col: Vec<i64> = (0..n)
        .map(|i| {
            seed.b
                .get(i, k)
                .to_i64()
                .ok_or(GcpError::ExponentOverflow)
        })
        .collect::<Result<_, _>>()?;
    // Exponent of variable i in the j-th numerator term.
    let exp_of = |i: usize, j: i64| -> i64 {
        let bik = col[i];
        dk * (-bik).max(0) + j * bik
    };
    // Power tables per variable (exponents >= 2), shared across the
    // exchange-polynomial terms: the degree-4 rows would otherwise redo the
    // same squarings for every term.
    let mut pows: Vec<Vec<LaurentPoly>> = Vec::with_capacity(n);
    for i in 0..n {
        let max_e = (0..=dk).map(|j| exp_of(i, j)).max().unwrap_or(0);
        debug_assert!((0..=dk).all(|j| exp_of(i, j) >= 0));
        let mut table: Vec<LaurentPoly> = Vec::new();
        for e in 2..=max_e {
            let p = match e {
                2 => seed.cluster[i].square(),
                e if e % 2 == 0 => power(&table, &seed.cluster[i], e / 2).square(),
                e => power(&table, &seed.cluster[i], e - 1).mul(&seed.cluster[i])?,
            };
            table.push(p);
        }
        pows.push(table);
    }
    let mut numerator = LaurentPoly::zero(n);
    for (j, zj) in seed.z[k].coeffs().iter().enumerate() {
        if zj.is_zero() {
            continue;
        }
        let mut term = LaurentPoly::constant(n, zj.clone());
        for i in 0..n {
            let e = exp_of(i, j as i64);
            if e > 0 {
                term = term.mul(power(&pows[i], &seed.cluster[i], e))?;
            }
        }
        numerator = numerator.add(&term)?;
    }
    let new_xk = numerator
        .exact_div(&seed.cluster[k])
        .map_err(|e| match e {
            LaurentError::NotDivisible => GcpError::NotDivisible,
            other => GcpError::Laurent(other),
        })?;
    let mut cluster = seed.cluster.clone();
    cluster[k] = new_xk;
    Ok(cluster)
}

/// Table lookup for `x^e` where the table stores exponents starting at 2.
fn power<'a>(table: &'a [LaurentPoly], x: &'a LaurentPoly, e: i64) -> &'a LaurentPoly {
    match e {
        1 => x,
        e => &table[e as usize - 2],
    }
}

/// Full seed mutation: the composition of the matrix, cluster and
/// exchange-polynomial mutations.
pub fn mutate_seed(seed: &Seed, k: usize) -> Result<Seed, GcpError> {
    check_direction(seed, k)?;
    let cluster = mutate_cluster(seed, k)?;
    let b = mutate_matrix(&seed.b, &seed.degree_matrix(), k);
    let z = mutate_zpolys(&seed.z, k);
    Seed::new(cluster, b, z)
}

/// A walk in the pattern tree: a sequence of mutation directions with no
/// immediate repeats (an immediate repeat is the identity and is rejected).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternWalk {
    dirs: Vec<usize>,
}

impl PatternWalk {
    pub fn new(rank: usize, dirs: Vec<usize>) -> Result<Self, GcpError> {
        for (i, &d) in dirs.iter().enumerate() {
            if d >= rank {
                return Err(GcpError::DirectionOutOfRange(d, rank));
            }
            if i > 0 && dirs[i - 1] == d {
                return Err(GcpError::ImmediateRepeat(i));
            }
        }
        Ok(PatternWalk { dirs })
    }

    pub fn dirs(&self) -> &[usize] {
        &self.dirs
    }

    pub fn len(&self) -> usize {
        self.dirs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dirs.is_empty()
    }
}

/// Evaluate a cluster at the all-ones point, insisting on positive integer
/// values. At this point every monomial is 1, so the value is the
/// coefficient sum.
pub fn specialize_cluster(cluster: &[LaurentPoly]) -> Result<Vec<BigInt>, GcpError> {
    cluster
        .iter()
        .map(|x| {
            let v = x.coefficient_sum();
            if !v.is_positive() {
                return Err(GcpError::NonIntegerSpecialization(v.to_string()));
            }
            Ok(v)
        })
        .collect()
}

/// Walk the seed along `walk`, evaluating every intermediate cluster
/// (including the initial one) at the all-ones point. Every value must be a
/// positive integer.
pub fn specialize_walk(seed: &Seed, walk: &PatternWalk) -> Result<Vec<Vec<BigInt>>, GcpError> {
    let mut out = Vec::with_capacity(walk.len() + 1);
    let mut cur = seed.clone();
    out.push(specialize_cluster(cur.cluster())?);
    for &k in walk.dirs() {
        cur = mutate_seed(&cur, k)?;
        out.push(specialize_cluster(cur.cluster())?);
    }
    Ok(out)
}

/// Per-direction report for the mutation-invariance condition, plus the
/// `B*D` class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Condition51Report {
    /// For each direction: does matrix mutation give exactly `-B`?
    pub matrix_negated: Vec<bool>,
    /// For each direction: are the exchange polynomials fixed?
    pub zpolys_invariant: Vec<bool>,
    /// Row-major entries of `B*D`.
    pub bd: Vec<BigInt>,
    pub bd_class: BdClass,
}

impl Condition51Report {
    pub fn holds(&self) -> bool {
        self.matrix_negated.iter().all(|&b| b) && self.zpolys_invariant.iter().all(|&b| b)
    }
}

/// Audit the two-part condition: mutation in every direction negates the
/// exchange matrix, and leaves the exchange polynomials fixed.
pub fn check_condition51(seed: &Seed) -> Condition51Report {
    let d = seed.degree_matrix();
    let neg = seed.matrix().neg();
    let mut matrix_negated = Vec::with_capacity(seed.rank());
    let mut zpolys_invariant = Vec::with_capacity(seed.rank());
    for k in 0..seed.rank() {
        matrix_negated.push(mutate_matrix(seed.matrix(), &d, k) == neg);
        zpolys_invariant.push(mutate_zpolys(seed.zpolys(), k) == seed.zpolys());
    }
    let bd = seed.matrix().times_degree(&d);
    let bd_class = BdClass::classify(&bd);
    Condition51Report {
        matrix_negated,
        zpolys_invariant,
        bd,
        bd_class,
    }
}

/// All walks of exactly `depth` steps with no immediate repeats, in
/// lexicographic order.
pub fn walks_of_depth(rank: usize, depth: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(depth);
    fn rec(rank: usize, depth: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == depth {
            out.push(cur.clone());
            return;
        }
        for d in 0..rank {
            if cur.last() == Some(&d) {
                continue;
            }
            cur.push(d);
            rec(rank, depth, cur, out);
            cur.pop();
        }
    }
    rec(rank, depth, &mut cur, &mut out);
    out
}

/// One vertex of the walk tree: the direction sequence that reaches it and
/// the specialized cluster there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkPoint {
    pub dirs: Vec<usize>,
    pub specialized: Vec<BigInt>,
}

/// Explore every no-immediate-repeat walk of length at most `depth`,
/// sharing common prefixes, and return the specialized cluster at every
/// vertex in lexicographic direction order. Any Laurent-phenomenon or
/// positivity failure aborts with the corresponding error.
pub fn walk_tree_specializations(seed: &Seed, depth: usize) -> Result<Vec<WalkPoint>, GcpError> {
    #[cfg(feature = "parallel")]
    {
        walk_tree_impl(seed, depth, true)
    }
    #[cfg(not(feature = "parallel"))]
    {
        walk_tree_impl(seed, depth, false)
    }
}

/// [`walk_tree_specializations`] forced onto the sequential path; the
/// output is identical.
pub fn walk_tree_specializations_sequential(
    seed: &Seed,
    depth: usize,
) -> Result<Vec<WalkPoint>, GcpError> {
    walk_tree_impl(seed, depth, false)
}

fn walk_tree_impl(seed: &Seed, depth: usize, parallel: bool) -> Result<Vec<WalkPoint>, GcpError> {
    let root = WalkPoint {
        dirs: Vec::new(),
        specialized: specialize_cluster(seed.cluster())?,
    };
    let mut out = vec![root];
    if depth == 0 {
        return Ok(out);
    }
    let branches = branch_results(seed, depth, parallel)?;
    for branch in branches {
        out.extend(branch);
    }
    Ok(out)
}

#[cfg(feature = "parallel")]
fn branch_results(
    seed: &Seed,
    depth: usize,
    parallel: bool,
) -> Result<Vec<Vec<WalkPoint>>, GcpError> {
    if parallel {
        (0..seed.rank())
            .into_par_iter()
            .map(|k| branch(seed, k, depth))
            .collect()
    } else {
        (0..seed.rank()).map(|k| branch(seed, k, depth)).collect()
    }
}

#[cfg(not(feature = "parallel"))]
fn branch_results(
    seed: &Seed,
    depth: usize,
    _parallel: bool,
) -> Result<Vec<Vec<WalkPoint>>, GcpError> {
    (0..seed.rank()).map(|k| branch(seed, k, depth)).collect()
}

/// Depth-first expansion of the subtree entered by first mutating in
/// direction `k`.
fn branch(seed: &Seed, k: usize, depth: usize) -> Result<Vec<WalkPoint>, GcpError> {
    let mut out = Vec::new();
    let first = mutate_seed(seed, k)?;
    let mut stack = vec![(vec![k], first)];
    while let Some((dirs, cur)) = stack.pop() {
        out.push(WalkPoint {
            dirs: dirs.clone(),
            specialized: specialize_cluster(cur.cluster())?,
        });
        if dirs.len() == depth {
            continue;
        }
        // Push in reverse so the stack pops branches in lexicographic order.
        let last = *dirs.last().expect("nonempty");
        for d in (0..seed.rank()).rev() {
            if d == last {
                continue;
            }
            let mut next_dirs = dirs.clone();
            next_dirs.push(d);
            stack.push((next_dirs, mutate_seed(&cur, d)?));
        }
    }
    Ok(out)
}
