//! Building an implicit relation on `(x, y)` from a symmetric polynomial in
//! the five cluster variables of the finite rank-2 pattern.
//!
//! For symmetric `f`, the equation
//! `f(x, y, (y+1)/x, (x+y+1)/(xy), (x+1)/y) = f(...)|_{x=y=1}`
//! is solved by the five specialized pairs of the pattern. The builder
//! returns both a rational residual evaluator and the cleared-denominator
//! integer polynomial form.

use crate::laurent::{LaurentError, LaurentPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymmetricError {
    #[error("exponent vector must have five entries, got {0}")]
    BadArity(usize),
    #[error("exponents must be nonnegative")]
    NegativeExponent,
    #[error("polynomial is not symmetric (fails under transposition ({0} {1}))")]
    NotSymmetric(usize, usize),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

/// A polynomial in five variables given as exponent-vector/coefficient
/// pairs, validated to be symmetric under all of `S_5`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricPoly {
    terms: BTreeMap<[u32; 5], BigInt>,
}

impl SymmetricPoly {
    pub fn new(
        terms: impl IntoIterator<Item = ([u32; 5], BigInt)>,
    ) -> Result<Self, SymmetricError> {
        let mut map: BTreeMap<[u32; 5], BigInt> = BTreeMap::new();
        for (exps, c) in terms {
            let entry = map.entry(exps).or_insert_with(BigInt::zero);
            *entry += c;
        }
        map.retain(|_, c| !c.is_zero());
        let poly = SymmetricPoly { terms: map };
        // The adjacent transpositions generate all of S_5; invariance under
        // each of them is invariance under the whole group.
        for i in 0..4 {
            if !poly.invariant_under_swap(i, i + 1) {
                return Err(SymmetricError::NotSymmetric(i + 1, i + 2));
            }
        }
        Ok(poly)
    }

    /// The elementary symmetric input `a_1 + a_2 + a_3 + a_4 + a_5`.
    pub fn sum_of_variables() -> Self {
        let mut terms = Vec::new();
        for i in 0..5 {
            let mut e = [0u32; 5];
            e[i] = 1;
            terms.push((e, BigInt::one()));
        }
        Self::new(terms).expect("symmetric by construction")
    }

    /// The elementary symmetric input `a_1 a_2 a_3 a_4 a_5`.
    pub fn product_of_variables() -> Self {
        Self::new([([1u32; 5], BigInt::one())]).expect("symmetric by construction")
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new([([0u32; 5], c)]).expect("symmetric by construction")
    }

    fn invariant_under_swap(&self, i: usize, j: usize) -> bool {
        self.terms.iter().all(|(exps, c)| {
            let mut swapped = *exps;
            swapped.swap(i, j);
            self.terms.get(&swapped) == Some(c)
        })
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32; 5], &BigInt)> {
        self.terms.iter()
    }
}

/// The implicit relation produced by [`build_symmetric_equation`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricEquation {
    /// `f(args) - f(args)|_{x=y=1}` as a Laurent polynomial in `(x, y)`.
    residual: LaurentPoly,
    /// The residual multiplied by the monomial clearing all denominators:
    /// an ordinary integer polynomial, zero exactly on the solution set.
    cleared: LaurentPoly,
    /// The constant `f(1, 1, 2, 3, 2)`.
    rhs: BigInt,
}

impl SymmetricEquation {
    pub fn cleared(&self) -> &LaurentPoly {
        &self.cleared
    }

    pub fn rhs_constant(&self) -> &BigInt {
        &self.rhs
    }

    /// Exact residual at a point with nonzero coordinates.
    pub fn residual_at(&self, x: &BigRational, y: &BigRational) -> Result<BigRational, LaurentError> {
        self.residual.eval(&[x.clone(), y.clone()])
    }

    /// Residual of the cleared form at a positive integer point.
    pub fn cleared_residual_at(&self, x: &BigInt, y: &BigInt) -> BigInt {
        let point = [
            BigRational::from(x.clone()),
            BigRational::from(y.clone()),
        ];
        let v = self.cleared.eval(&point).expect("nonzero point");
        debug_assert!(v.is_integer());
        v.to_integer()
    }

    /// Exhaustive scan of `[1, bound]^2` for zeros of the cleared form, in
    /// machine integers (the coefficients and bound are validated to keep
    /// every intermediate exact).
    pub fn solutions_in_box(&self, bound: u64) -> Vec<(u64, u64)> {
        let terms: Vec<(u32, u32, i128)> = self
            .cleared
            .terms()
            .map(|(m, c)| {
                let e = m.exps();
                (
                    u32::try_from(e[0]).expect("cleared form has nonnegative exponents"),
                    u32::try_from(e[1]).expect("cleared form has nonnegative exponents"),
                    c.to_i128().expect("coefficient fits the machine scan"),
                )
            })
            .collect();
        let max_deg = terms
            .iter()
            .map(|&(e1, e2, _)| e1.max(e2))
            .max()
            .unwrap_or(0);
        // Guard the i128 evaluation: |c| * bound^(e1+e2) must stay in range.
        let b = bound as i128;
        let mut pow_ok = 1i128;
        for _ in 0..(2 * max_deg) {
            pow_ok = pow_ok.checked_mul(b).expect("bound too large for the machine scan");
        }
        for &(_, _, c) in &terms {
            pow_ok
                .checked_mul(c.abs())
                .expect("bound too large for the machine scan");
        }
        let mut out = Vec::new();
        let mut xpows = vec![1i128; max_deg as usize + 1];
        let mut ypows = vec![1i128; max_deg as usize + 1];
        for x in 1..=b {
            for (e, p) in xpows.iter_mut().enumerate() {
                *p = x.pow(e as u32);
            }
            for y in 1..=b {
                for (e, p) in ypows.iter_mut().enumerate() {
                    *p = y.pow(e as u32);
                }
                let mut acc = 0i128;
                for &(e1, e2, c) in &terms {
                    acc += c * xpows[e1 as usize] * ypows[e2 as usize];
                }
                if acc == 0 {
                    out.push((x as u64, y as u64));
                }
            }
        }
        out
    }
}

/// The five argument substitutions, as Laurent polynomials in `(x, y)`:
/// `x`, `y`, `(y+1)/x`, `(x+y+1)/(xy)`, `(x+1)/y`.
fn arguments() -> [LaurentPoly; 5] {
    let one = BigInt::one();
    [
        LaurentPoly::var(2, 0),
        LaurentPoly::var(2, 1),
        LaurentPoly::from_terms(2, vec![(vec![-1, 1], one.clone()), (vec![-1, 0], one.clone())])
            .expect("rank 2"),
        LaurentPoly::from_terms(
            2,
            vec![
                (vec![0, -1], one.clone()),
                (vec![-1, 0], one.clone()),
                (vec![-1, -1], one.clone()),
            ],
        )
        .expect("rank 2"),
        LaurentPoly::from_terms(2, vec![(vec![1, -1], one.clone()), (vec![0, -1], one)])
            .expect("rank 2"),
    ]
}

/// Substitute the five pattern variables into `f` and subtract the value at
/// `x = y = 1`, returning the residual together with its cleared form.
pub fn build_symmetric_equation(f: &SymmetricPoly) -> Result<SymmetricEquation, SymmetricError> {
    let args = arguments();
    let mut value = LaurentPoly::zero(2);
    for (exps, c) in f.terms() {
        let mut term = LaurentPoly::constant(2, c.clone());
        for (arg, &e) in args.iter().zip(exps.iter()) {
            if e > 0 {
                term = term.mul(&arg.pow(e as u64))?;
            }
        }
        value = value.add(&term)?;
    }
    let ones = [BigRational::one(), BigRational::one()];
    let rhs_rat = value.eval(&ones)?;
    debug_assert!(rhs_rat.is_integer());
    let rhs = rhs_rat.to_integer();
    let residual = value.sub(&LaurentPoly::constant(2, rhs.clone()))?;
    // Clear denominators by the smallest monomial multiple.
    let mut min_x = 0i64;
    let mut min_y = 0i64;
    for (m, _) in residual.terms() {
        min_x = min_x.min(m.exp(0));
        min_y = min_y.min(m.exp(1));
    }
    let shift = LaurentPoly::monomial(2, vec![-min_x, -min_y], BigInt::one());
    let cleared = residual.mul(&shift)?;
    Ok(SymmetricEquation {
        residual,
        cleared,
        rhs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    /// The cleared form of the five-solution equation:
    /// x^2 + y^2 + 2x + 2y + x^2 y + x y^2 + 1 - 9xy.
    fn expected_cleared() -> LaurentPoly {
        LaurentPoly::from_terms(
            2,
            vec![
                (vec![2, 0], big(1)),
                (vec![0, 2], big(1)),
                (vec![1, 0], big(2)),
                (vec![0, 1], big(2)),
                (vec![2, 1], big(1)),
                (vec![1, 2], big(1)),
                (vec![0, 0], big(1)),
                (vec![1, 1], big(-9)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn sum_of_variables_builds_the_five_solution_equation() {
        let eq = build_symmetric_equation(&SymmetricPoly::sum_of_variables()).unwrap();
        assert_eq!(eq.rhs_constant(), &big(9));
        assert_eq!(eq.cleared(), &expected_cleared());
    }

    #[test]
    fn product_of_variables_builds_the_same_equation() {
        let e1 = build_symmetric_equation(&SymmetricPoly::sum_of_variables()).unwrap();
        let e5 = build_symmetric_equation(&SymmetricPoly::product_of_variables()).unwrap();
        assert_eq!(e5.rhs_constant(), &big(12));
        assert_eq!(e1.cleared(), e5.cleared());
    }

    #[test]
    fn constant_input_gives_zero_residual() {
        let eq = build_symmetric_equation(&SymmetricPoly::constant(big(1))).unwrap();
        assert!(eq.cleared().is_zero());
        let pt = BigRational::from(big(7));
        assert!(eq.residual_at(&pt, &pt).unwrap().is_zero());
    }

    #[test]
    fn non_symmetric_input_is_rejected() {
        let mut e = [0u32; 5];
        e[0] = 1;
        assert!(matches!(
            SymmetricPoly::new([(e, big(1))]),
            Err(SymmetricError::NotSymmetric(1, 2))
        ));
    }

    #[test]
    fn residual_vanishes_on_the_five_pairs() {
        let eq = build_symmetric_equation(&SymmetricPoly::sum_of_variables()).unwrap();
        for (x, y) in [(1, 1), (1, 2), (2, 1), (2, 3), (3, 2)] {
            assert!(eq.cleared_residual_at(&big(x), &big(y)).is_zero());
            let (xr, yr) = (BigRational::from(big(x)), BigRational::from(big(y)));
            assert!(eq.residual_at(&xr, &yr).unwrap().is_zero());
        }
        assert!(!eq.cleared_residual_at(&big(1), &big(3)).is_zero());
    }

    #[test]
    fn box_scan_finds_exactly_the_five_pairs() {
        let eq = build_symmetric_equation(&SymmetricPoly::sum_of_variables()).unwrap();
        let found = eq.solutions_in_box(50);
        assert_eq!(found, vec![(1, 1), (1, 2), (2, 1), (2, 3), (3, 2)]);
    }
}
