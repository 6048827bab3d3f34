//! Sparse multivariate Laurent polynomials with exact integer coefficients.
//!
//! A [`LaurentPoly`] is a map from exponent vectors (possibly negative) to
//! nonzero [`BigInt`] coefficients. Two equal polynomials compare structurally
//! equal: zero coefficients are never stored and terms are kept in a
//! [`BTreeMap`] keyed by the graded lexicographic order, which also gives the
//! deterministic term order used for printing.

use crate::coeff::Coeff;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rustc_hash::FxHashMap;
use smallvec::SmallVec;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// Errors produced by Laurent-polynomial arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("division by the zero polynomial")]
    DivisorZero,
    /// No exact Laurent quotient exists. In the cluster-pattern checks this
    /// doubles as the falsification signal for the Laurent phenomenon.
    #[error("no exact Laurent quotient exists")]
    NotDivisible,
    #[error("evaluation point has a zero coordinate (index {0})")]
    ZeroCoordinate(usize),
    #[error("evaluation point has {0} coordinates, rank is {1}")]
    PointRankMismatch(usize, usize),
}

/// Largest supported rank; exponent vectors are packed into one machine
/// word with 16-bit lanes.
pub const MAX_RANK: usize = 4;

/// Largest exponent magnitude accepted at construction. Internal products
/// may go somewhat beyond it; the lanes hold +/-32767 and a polynomial big
/// enough to overflow them does not fit in memory in the first place.
pub const MAX_EXPONENT: i64 = 1 << 14;

const LANE_BITS: u32 = 16;
const LANE_BIAS: u64 = 1 << 15;

const fn pack_bias(rank: usize) -> u64 {
    let mut bias = 0u64;
    let mut i = 0;
    while i < rank {
        bias |= LANE_BIAS << lane_shift(i);
        i += 1;
    }
    bias
}

/// Variable 0 sits in the highest lane so that comparing packed words is
/// lexicographic from the first variable.
const fn lane_shift(i: usize) -> u32 {
    (MAX_RANK - 1 - i) as u32 * LANE_BITS
}

/// Exponent vector of a Laurent monomial, packed into a single word with
/// biased 16-bit lanes. The derived order is graded lexicographic: total
/// degree first, then lexicographic on the exponents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    deg: i32,
    packed: u64,
    rank: u8,
}

impl Monomial {
    pub fn new(exps: Vec<i64>) -> Self {
        Self::from_exps(&exps)
    }

    pub fn from_exps(exps: &[i64]) -> Self {
        assert!(exps.len() <= MAX_RANK, "rank at most {MAX_RANK}");
        let mut packed = 0u64;
        let mut deg = 0i64;
        for (i, &e) in exps.iter().enumerate() {
            assert!(
                e.abs() <= MAX_EXPONENT,
                "exponent {e} exceeds the packed range"
            );
            packed |= ((e + LANE_BIAS as i64) as u64) << lane_shift(i);
            deg += e;
        }
        Monomial {
            deg: deg as i32,
            packed,
            rank: exps.len() as u8,
        }
    }

    /// The constant monomial (all exponents zero).
    pub fn unit(rank: usize) -> Self {
        assert!(rank <= MAX_RANK, "rank at most {MAX_RANK}");
        Monomial {
            deg: 0,
            packed: pack_bias(rank),
            rank: rank as u8,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    pub fn exp(&self, i: usize) -> i64 {
        debug_assert!(i < self.rank as usize);
        (((self.packed >> lane_shift(i)) & 0xFFFF) as i64) - LANE_BIAS as i64
    }

    pub fn exps(&self) -> SmallVec<[i64; 4]> {
        (0..self.rank as usize).map(|i| self.exp(i)).collect()
    }

    pub fn total_degree(&self) -> i64 {
        self.deg as i64
    }

    // Lane safety for mul/div is enforced by the polynomial-level range
    // guards of the callers; the word arithmetic wraps modulo 2^64, which
    // is exact as long as no lane overflows.
    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            deg: self.deg + other.deg,
            packed: self
                .packed
                .wrapping_add(other.packed)
                .wrapping_sub(pack_bias(self.rank as usize)),
            rank: self.rank,
        }
    }

    fn div(&self, other: &Monomial) -> Monomial {
        Monomial {
            deg: self.deg - other.deg,
            packed: self
                .packed
                .wrapping_sub(other.packed)
                .wrapping_add(pack_bias(self.rank as usize)),
            rank: self.rank,
        }
    }

    /// Componentwise `self <= other`, the divisibility test for monomials
    /// with nonnegative exponents.
    fn divides(&self, other: &Monomial) -> bool {
        (0..self.rank as usize).all(|i| self.exp(i) <= other.exp(i))
    }

    fn translated(&self, mins: &[i64]) -> Monomial {
        let exps: SmallVec<[i64; 4]> = (0..self.rank as usize)
            .map(|i| self.exp(i) - mins[i])
            .collect();
        Monomial::from_exps(&exps)
    }
}

/// Sparse multivariate Laurent polynomial over the integers. Coefficients
/// are arbitrary precision, stored inline while they fit a machine word
/// pair (see [`crate::coeff`]).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LaurentPoly {
    rank: usize,
    terms: BTreeMap<Monomial, Coeff>,
}

impl LaurentPoly {
    pub fn zero(rank: usize) -> Self {
        LaurentPoly {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        Self::constant(rank, BigInt::one())
    }

    pub fn constant(rank: usize, c: BigInt) -> Self {
        let c = Coeff::from_bigint(c);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::unit(rank), c);
        }
        LaurentPoly { rank, terms }
    }

    /// The generator `x_{idx+1}` of a rank-`rank` Laurent ring (`idx` is
    /// zero-based).
    pub fn var(rank: usize, idx: usize) -> Self {
        assert!(idx < rank, "variable index out of range");
        let mut exps = vec![0i64; rank];
        exps[idx] = 1;
        Self::monomial(rank, exps, BigInt::one())
    }

    /// A single term `c * x^exps`.
    pub fn monomial(rank: usize, exps: Vec<i64>, c: BigInt) -> Self {
        assert_eq!(exps.len(), rank, "exponent vector length must equal rank");
        let c = Coeff::from_bigint(c);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::new(exps), c);
        }
        LaurentPoly { rank, terms }
    }

    /// Build from a term list, merging duplicates and dropping zeros.
    pub fn from_terms(
        rank: usize,
        terms: impl IntoIterator<Item = (Vec<i64>, BigInt)>,
    ) -> Result<Self, LaurentError> {
        let mut map: BTreeMap<Monomial, Coeff> = BTreeMap::new();
        for (exps, c) in terms {
            if exps.len() != rank {
                return Err(LaurentError::RankMismatch(exps.len(), rank));
            }
            let m = Monomial::new(exps);
            map.entry(m)
                .or_insert(Coeff::ZERO)
                .add_assign(&Coeff::from_bigint(c));
        }
        map.retain(|_, c| !c.is_zero());
        Ok(LaurentPoly { rank, terms: map })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::unit(self.rank))
                .is_some_and(Coeff::is_one)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, BigInt)> {
        self.terms.iter().map(|(m, c)| (m, c.to_bigint()))
    }

    /// Sum of all coefficients, i.e. the value at the all-ones point.
    pub fn coefficient_sum(&self) -> BigInt {
        let mut acc = Coeff::ZERO;
        for c in self.terms.values() {
            acc.add_assign(c);
        }
        acc.to_bigint()
    }

    fn check_rank(&self, other: &LaurentPoly) -> Result<(), LaurentError> {
        if self.rank != other.rank {
            return Err(LaurentError::RankMismatch(self.rank, other.rank));
        }
        Ok(())
    }

    /// Exact sum in canonical form.
    pub fn add(&self, other: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        self.check_rank(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            match terms.get_mut(m) {
                Some(acc) => {
                    acc.add_assign(c);
                    if acc.is_zero() {
                        terms.remove(m);
                    }
                }
                None => {
                    terms.insert(*m, c.clone());
                }
            }
        }
        Ok(LaurentPoly {
            rank: self.rank,
            terms,
        })
    }

    pub fn sub(&self, other: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect(),
        }
    }

    fn from_accumulator(rank: usize, acc: FxHashMap<Monomial, Coeff>) -> LaurentPoly {
        LaurentPoly {
            rank,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Product exponents must stay inside the packed 16-bit lanes.
    fn guard_product_range(&self, other: &LaurentPoly) {
        const LANE_GUARD: i64 = 32700;
        let (alo, ahi) = self.exponent_span();
        let (blo, bhi) = other.exponent_span();
        assert!(
            alo + blo >= -LANE_GUARD && ahi + bhi <= LANE_GUARD,
            "product exponents exceed the packed range"
        );
    }

    /// Exact product. Accumulates in a hash map and sorts once at the end;
    /// the quadratic term-product loop is the hot path of seed mutation.
    pub fn mul(&self, other: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        self.check_rank(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(LaurentPoly::zero(self.rank));
        }
        self.guard_product_range(other);
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc: FxHashMap<Monomial, Coeff> =
            FxHashMap::with_capacity_and_hasher(2 * large.terms.len(), Default::default());
        for (ma, ca) in &small.terms {
            for (mb, cb) in &large.terms {
                accumulate(&mut acc, ma.mul(mb), ca.mul(cb));
            }
        }
        Ok(LaurentPoly::from_accumulator(self.rank, acc))
    }

    /// `self * self` with the symmetric products emitted once and doubled.
    pub(crate) fn square(&self) -> LaurentPoly {
        self.guard_product_range(self);
        let terms: Vec<(&Monomial, &Coeff)> = self.terms.iter().collect();
        let mut acc: FxHashMap<Monomial, Coeff> =
            FxHashMap::with_capacity_and_hasher(4 * terms.len(), Default::default());
        for (i, (mi, ci)) in terms.iter().enumerate() {
            accumulate(&mut acc, mi.mul(mi), ci.mul(ci));
            for (mj, cj) in &terms[i + 1..] {
                accumulate(&mut acc, mi.mul(mj), ci.mul(cj).double());
            }
        }
        LaurentPoly::from_accumulator(self.rank, acc)
    }

    /// `self^exp` by repeated squaring.
    pub fn pow(&self, exp: u64) -> LaurentPoly {
        match exp {
            0 => return LaurentPoly::one(self.rank),
            1 => return self.clone(),
            _ => {}
        }
        let mut result: Option<LaurentPoly> = None;
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = Some(match result {
                    None => base.clone(),
                    Some(r) => r.mul(&base).expect("rank preserved"),
                });
            }
            e >>= 1;
            if e > 0 {
                base = base.square();
            }
        }
        result.expect("exp >= 1")
    }

    /// Multiply by a single term `c * x^m`.
    pub fn mul_term(&self, m: &Monomial, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero(self.rank);
        }
        let c = Coeff::from_bigint(c.clone());
        LaurentPoly {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(mm, cc)| (mm.mul(m), cc.mul(&c)))
                .collect(),
        }
    }

    /// Per-variable minimum exponent over all stored monomials.
    fn min_exponents(&self) -> Vec<i64> {
        let mut mins = vec![i64::MAX; self.rank];
        for m in self.terms.keys() {
            for (i, acc) in mins.iter_mut().enumerate() {
                *acc = (*acc).min(m.exp(i));
            }
        }
        mins
    }

    /// Smallest and largest exponent over all variables and terms.
    fn exponent_span(&self) -> (i64, i64) {
        let mut lo = 0i64;
        let mut hi = 0i64;
        for m in self.terms.keys() {
            for i in 0..self.rank {
                let e = m.exp(i);
                lo = lo.min(e);
                hi = hi.max(e);
            }
        }
        (lo, hi)
    }

    /// Exact Laurent division: returns `r` with `r * divisor == self` when
    /// such a Laurent polynomial exists, [`LaurentError::NotDivisible`]
    /// otherwise.
    ///
    /// Both operands are translated by per-variable minimum exponents so all
    /// exponents become nonnegative; plain multivariate division by the
    /// leading term (graded lex) then decides divisibility, because a
    /// normalized divisor with zero valuation in every variable divides in
    /// the Laurent ring iff it divides in the polynomial ring.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        self.check_rank(divisor)?;
        if divisor.is_zero() {
            return Err(LaurentError::DivisorZero);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero(self.rank));
        }
        let pmin = self.min_exponents();
        let qmin = divisor.min_exponents();
        // Normalized remainder in a hash map; a max-heap with lazy deletion
        // tracks the graded-lex leading term. Every live monomial is in the
        // heap, stale copies are skipped on pop, and tail updates only ever
        // insert monomials strictly below the leading term being processed.
        let mut rem: FxHashMap<Monomial, Coeff> =
            FxHashMap::with_capacity_and_hasher(2 * self.terms.len(), Default::default());
        let mut heap: std::collections::BinaryHeap<Monomial> =
            std::collections::BinaryHeap::with_capacity(2 * self.terms.len());
        for (m, c) in &self.terms {
            let key = m.translated(&pmin);
            rem.insert(key, c.clone());
            heap.push(key);
        }
        let q: Vec<(Monomial, Coeff)> = divisor
            .terms
            .iter()
            .map(|(m, c)| (m.translated(&qmin), c.clone()))
            .collect();
        let (q_lm, q_lc) = q.last().cloned().expect("divisor nonzero");
        let q_tail = &q[..q.len() - 1];
        let mut quot: BTreeMap<Monomial, Coeff> = BTreeMap::new();
        while let Some(r_lm) = heap.pop() {
            let Some(r_lc) = rem.remove(&r_lm) else {
                continue;
            };
            if r_lc.is_zero() {
                continue;
            }
            if !q_lm.divides(&r_lm) {
                return Err(LaurentError::NotDivisible);
            }
            let (co, coeff_rem) = r_lc.div_rem(&q_lc);
            if !coeff_rem.is_zero() {
                return Err(LaurentError::NotDivisible);
            }
            let t = r_lm.div(&q_lm);
            // Subtract co * x^t * divisor; its leading term is the popped
            // entry, so only the tail is touched.
            for (qm, qc) in q_tail {
                let delta = qc.mul(&co);
                use std::collections::hash_map::Entry;
                match rem.entry(qm.mul(&t)) {
                    Entry::Occupied(mut e) => {
                        e.get_mut().sub_assign(&delta);
                    }
                    Entry::Vacant(v) => {
                        let key = *v.key();
                        v.insert(delta.neg());
                        heap.push(key);
                    }
                }
            }
            quot.insert(t, co);
        }
        // Undo the translations: p/q = (P/Q) * x^(pmin - qmin).
        let back = Monomial::new(pmin.iter().zip(&qmin).map(|(p, q)| p - q).collect());
        let quot = LaurentPoly {
            rank: self.rank,
            terms: quot,
        };
        Ok(quot.mul_term(&back, &BigInt::one()))
    }

    /// Exact evaluation at a point with no zero coordinate.
    pub fn eval(&self, point: &[BigRational]) -> Result<BigRational, LaurentError> {
        if point.len() != self.rank {
            return Err(LaurentError::PointRankMismatch(point.len(), self.rank));
        }
        for (i, p) in point.iter().enumerate() {
            if p.is_zero() {
                return Err(LaurentError::ZeroCoordinate(i));
            }
        }
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut term = BigRational::from(c.to_bigint());
            for (i, p) in point.iter().enumerate() {
                let e = m.exp(i);
                if e != 0 {
                    term *= rational_pow(p, e);
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Substitute 1 for the variable at `idx`, dropping it from the ring;
    /// the result has rank `self.rank() - 1` with the remaining variables
    /// kept in order.
    pub fn substitute_one(&self, idx: usize) -> LaurentPoly {
        assert!(idx < self.rank, "variable index out of range");
        let rank = self.rank - 1;
        let mut terms: BTreeMap<Monomial, Coeff> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut exps = m.exps();
            exps.remove(idx);
            terms
                .entry(Monomial::from_exps(&exps))
                .or_insert(Coeff::ZERO)
                .add_assign(c);
        }
        terms.retain(|_, c| !c.is_zero());
        LaurentPoly { rank, terms }
    }
}

fn accumulate(acc: &mut FxHashMap<Monomial, Coeff>, m: Monomial, c: Coeff) {
    use std::collections::hash_map::Entry;
    match acc.entry(m) {
        Entry::Occupied(mut e) => {
            e.get_mut().add_assign(&c);
        }
        Entry::Vacant(v) => {
            v.insert(c);
        }
    }
}

/// `base^exp` for a nonzero rational and a signed exponent.
fn rational_pow(base: &BigRational, exp: i64) -> BigRational {
    if exp == 0 {
        return BigRational::one();
    }
    let mut result = BigRational::one();
    let mut b = base.clone();
    let mut e = exp.unsigned_abs();
    while e > 0 {
        if e & 1 == 1 {
            result *= &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    if exp < 0 {
        result = result.recip();
    }
    result
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Descending graded lex: largest term first.
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = {
                use num_traits::Signed;
                c.to_bigint().abs()
            };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let exps = m.exps();
            let vars: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(j, &e)| {
                    if e == 1 {
                        format!("x{}", j + 1)
                    } else {
                        format!("x{}^{}", j + 1, e)
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{}", abs)?;
            } else if abs.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{}*{}", abs, vars.join("*"))?;
            }
        }
        Ok(())
    }
}
