//! Exchange polynomials `Z(u) = z_0 + z_1 u + ... + z_d u^d`.
//!
//! End coefficients are pinned to 1 and interior coefficients are
//! nonnegative integers; the degree `d` of each exchange polynomial is what
//! the degree matrix `D` of a seed is derived from.

use crate::laurent::{LaurentError, LaurentPoly};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExchangeError {
    #[error("exchange polynomial must have degree at least 1")]
    DegreeTooSmall,
    #[error("end coefficients z_0 and z_d must both be 1")]
    EndCoefficientNotOne,
    #[error("coefficient z_{0} is negative")]
    NegativeCoefficient(usize),
}

/// A single-variable exchange polynomial with unit end coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExchangePoly {
    coeffs: Vec<BigInt>,
}

impl ExchangePoly {
    /// Build from the coefficient list `z_0, ..., z_d`.
    pub fn new(coeffs: Vec<BigInt>) -> Result<Self, ExchangeError> {
        if coeffs.len() < 2 {
            return Err(ExchangeError::DegreeTooSmall);
        }
        if !coeffs[0].is_one() || !coeffs[coeffs.len() - 1].is_one() {
            return Err(ExchangeError::EndCoefficientNotOne);
        }
        for (i, c) in coeffs.iter().enumerate() {
            if c.is_negative() {
                return Err(ExchangeError::NegativeCoefficient(i));
            }
        }
        Ok(ExchangePoly { coeffs })
    }

    pub fn from_i64(coeffs: &[i64]) -> Result<Self, ExchangeError> {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `1 + u`.
    pub fn linear() -> Self {
        ExchangePoly {
            coeffs: vec![BigInt::one(), BigInt::one()],
        }
    }

    /// `1 + k*u + u^2` for `k >= 0`.
    pub fn quadratic(k: BigInt) -> Result<Self, ExchangeError> {
        Self::new(vec![BigInt::one(), k, BigInt::one()])
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `u^d Z(u^-1)`: the coefficient list reversed.
    pub fn reciprocal(&self) -> ExchangePoly {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        ExchangePoly { coeffs }
    }

    pub fn is_palindromic(&self) -> bool {
        self == &self.reciprocal()
    }

    /// Evaluate `sum_j z_j * m^j` exactly for a Laurent-polynomial argument.
    pub fn apply(&self, m: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        let rank = m.rank();
        let mut acc = LaurentPoly::zero(rank);
        // Horner from the top coefficient keeps intermediate sizes small.
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(m)?;
            if !c.is_zero() {
                acc = acc.add(&LaurentPoly::constant(rank, c.clone()))?;
            }
        }
        Ok(acc)
    }
}

impl fmt::Display for ExchangePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (j, c.is_one()) {
                (0, _) => write!(f, "{}", c)?,
                (1, true) => write!(f, "u")?,
                (1, false) => write!(f, "{}*u", c)?,
                (_, true) => write!(f, "u^{}", j)?,
                (_, false) => write!(f, "{}*u^{}", c, j)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn apply_on_monomial() {
        // Z = 1 + u on m = x2^-2 * x3^2 -> 1 + x2^-2*x3^2
        let m = LaurentPoly::monomial(3, vec![0, -2, 2], big(1));
        let z = ExchangePoly::linear();
        let out = z.apply(&m).unwrap();
        let expected = LaurentPoly::from_terms(
            3,
            vec![(vec![0, 0, 0], big(1)), (vec![0, -2, 2], big(1))],
        )
        .unwrap();
        assert_eq!(out, expected);
    }

    #[test]
    fn apply_quadratic_on_one() {
        // Z = 1 + k1*u + u^2 on m = 1 -> 2 + k1
        for k1 in 0..4 {
            let z = ExchangePoly::quadratic(big(k1)).unwrap();
            let out = z.apply(&LaurentPoly::one(2)).unwrap();
            assert_eq!(out, LaurentPoly::constant(2, big(2 + k1)));
        }
    }

    #[test]
    fn apply_on_zero() {
        let z = ExchangePoly::linear();
        let out = z.apply(&LaurentPoly::zero(3)).unwrap();
        assert_eq!(out, LaurentPoly::one(3));
    }

    #[test]
    fn reciprocal_reverses() {
        assert_eq!(
            ExchangePoly::linear().reciprocal(),
            ExchangePoly::linear()
        );
        let z = ExchangePoly::quadratic(big(5)).unwrap();
        assert_eq!(z.reciprocal(), z);
        let z = ExchangePoly::from_i64(&[1, 3, 2, 1]).unwrap();
        assert_eq!(z.reciprocal(), ExchangePoly::from_i64(&[1, 2, 3, 1]).unwrap());
        assert!(!z.is_palindromic());
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert_eq!(
            ExchangePoly::from_i64(&[1]),
            Err(ExchangeError::DegreeTooSmall)
        );
        assert_eq!(
            ExchangePoly::from_i64(&[2, 1]),
            Err(ExchangeError::EndCoefficientNotOne)
        );
        assert_eq!(
            ExchangePoly::from_i64(&[1, 2, 3]),
            Err(ExchangeError::EndCoefficientNotOne)
        );
        assert_eq!(
            ExchangePoly::from_i64(&[1, -1, 1]),
            Err(ExchangeError::NegativeCoefficient(1))
        );
    }

    #[test]
    fn display() {
        assert_eq!(ExchangePoly::linear().to_string(), "1 + u");
        assert_eq!(
            ExchangePoly::from_i64(&[1, 2, 1]).unwrap().to_string(),
            "1 + 2*u + u^2"
        );
        assert_eq!(
            ExchangePoly::from_i64(&[1, 0, 1]).unwrap().to_string(),
            "1 + u^2"
        );
    }

    #[test]
    fn apply_matches_eval() {
        // Z(m) evaluated at a point equals Z evaluated at m's value there.
        let m = LaurentPoly::from_terms(2, vec![(vec![1, -1], big(2))]).unwrap();
        let z = ExchangePoly::from_i64(&[1, 4, 1]).unwrap();
        let out = z.apply(&m).unwrap();
        let point = vec![
            BigRational::new(big(3), big(2)),
            BigRational::new(big(5), big(7)),
        ];
        let mv = m.eval(&point).unwrap();
        let direct = BigRational::one()
            + BigRational::from(big(4)) * mv.clone()
            + mv.clone() * mv;
        assert_eq!(out.eval(&point).unwrap(), direct);
    }
}
