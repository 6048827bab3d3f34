//! Internal coefficient type for sparse polynomials: an `i128` inline fast
//! path that escalates to a heap `BigInt` exactly on overflow.
//!
//! Canonical invariant: the `Big` variant holds only values outside the
//! `i128` range, so structural equality and hashing agree with numeric
//! equality. Every operation that can shrink a value re-normalizes.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use std::cmp::Ordering;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) enum Coeff {
    Small(i128),
    Big(Box<BigInt>),
}

impl Coeff {
    pub(crate) const ZERO: Coeff = Coeff::Small(0);

    pub(crate) fn from_bigint(v: BigInt) -> Coeff {
        match v.to_i128() {
            Some(s) => Coeff::Small(s),
            None => Coeff::Big(Box::new(v)),
        }
    }

    fn normalize_big(v: BigInt) -> Coeff {
        Coeff::from_bigint(v)
    }

    pub(crate) fn to_bigint(&self) -> BigInt {
        match self {
            Coeff::Small(v) => BigInt::from(*v),
            Coeff::Big(v) => (**v).clone(),
        }
    }

    pub(crate) fn is_zero(&self) -> bool {
        matches!(self, Coeff::Small(0))
    }

    pub(crate) fn is_one(&self) -> bool {
        matches!(self, Coeff::Small(1))
    }

    pub(crate) fn is_negative(&self) -> bool {
        match self {
            Coeff::Small(v) => *v < 0,
            Coeff::Big(v) => v.is_negative(),
        }
    }

    pub(crate) fn neg(&self) -> Coeff {
        match self {
            Coeff::Small(v) => match v.checked_neg() {
                Some(n) => Coeff::Small(n),
                None => Coeff::Big(Box::new(-BigInt::from(*v))),
            },
            Coeff::Big(v) => Self::normalize_big(-(**v).clone()),
        }
    }

    pub(crate) fn add_assign(&mut self, other: &Coeff) {
        match (&mut *self, other) {
            (Coeff::Small(a), Coeff::Small(b)) => match a.checked_add(*b) {
                Some(s) => *a = s,
                None => {
                    *self = Coeff::Big(Box::new(BigInt::from(*a) + BigInt::from(*b)));
                }
            },
            _ => {
                *self = Self::normalize_big(self.to_bigint() + other.to_bigint());
            }
        }
    }

    pub(crate) fn sub_assign(&mut self, other: &Coeff) {
        match (&mut *self, other) {
            (Coeff::Small(a), Coeff::Small(b)) => match a.checked_sub(*b) {
                Some(s) => *a = s,
                None => {
                    *self = Coeff::Big(Box::new(BigInt::from(*a) - BigInt::from(*b)));
                }
            },
            _ => {
                *self = Self::normalize_big(self.to_bigint() - other.to_bigint());
            }
        }
    }

    pub(crate) fn mul(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Coeff::Small(a), Coeff::Small(b)) => match a.checked_mul(*b) {
                Some(p) => Coeff::Small(p),
                None => Coeff::Big(Box::new(BigInt::from(*a) * BigInt::from(*b))),
            },
            _ => Self::normalize_big(self.to_bigint() * other.to_bigint()),
        }
    }

    pub(crate) fn double(&self) -> Coeff {
        match self {
            Coeff::Small(v) => match v.checked_mul(2) {
                Some(d) => Coeff::Small(d),
                None => Coeff::Big(Box::new(BigInt::from(*v) * 2)),
            },
            Coeff::Big(v) => Coeff::Big(Box::new((**v).clone() * 2)),
        }
    }

    /// Truncated quotient and remainder, as the exactness probe in division.
    pub(crate) fn div_rem(&self, other: &Coeff) -> (Coeff, Coeff) {
        match (self, other) {
            (Coeff::Small(a), Coeff::Small(b)) => {
                // i128::MIN / -1 is the only overflowing case.
                if let (Some(q), Some(r)) = (a.checked_div(*b), a.checked_rem(*b)) {
                    return (Coeff::Small(q), Coeff::Small(r));
                }
                let (q, r) = BigInt::from(*a).div_rem(&BigInt::from(*b));
                (Self::normalize_big(q), Self::normalize_big(r))
            }
            _ => {
                let (q, r) = self.to_bigint().div_rem(&other.to_bigint());
                (Self::normalize_big(q), Self::normalize_big(r))
            }
        }
    }
}

impl Ord for Coeff {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Coeff::Small(a), Coeff::Small(b)) => a.cmp(b),
            // Big values lie strictly outside the i128 range.
            (Coeff::Small(_), Coeff::Big(b)) => {
                if b.is_negative() {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            }
            (Coeff::Big(a), Coeff::Small(_)) => {
                if a.is_negative() {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
            (Coeff::Big(a), Coeff::Big(b)) => a.cmp(b),
        }
    }
}

impl PartialOrd for Coeff {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Zero for Coeff {
    fn zero() -> Self {
        Coeff::ZERO
    }

    fn is_zero(&self) -> bool {
        Coeff::is_zero(self)
    }
}

impl std::ops::Add for Coeff {
    type Output = Coeff;

    fn add(mut self, rhs: Coeff) -> Coeff {
        self.add_assign(&rhs);
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn escalates_and_normalizes() {
        let max = Coeff::Small(i128::MAX);
        let one = Coeff::Small(1);
        let mut big = max.clone();
        big.add_assign(&one);
        assert!(matches!(big, Coeff::Big(_)));
        assert_eq!(big.to_bigint(), BigInt::from(i128::MAX) + 1);
        // shrinking back re-normalizes to Small
        let neg_one = Coeff::Small(-1);
        big.add_assign(&neg_one);
        assert_eq!(big, max);
    }

    #[test]
    fn mul_overflow() {
        let a = Coeff::Small(1 << 100);
        let prod = a.mul(&a);
        assert!(matches!(prod, Coeff::Big(_)));
        assert_eq!(prod.to_bigint(), BigInt::one() << 200);
    }

    #[test]
    fn div_rem_matches_bigint() {
        let a = Coeff::from_bigint(BigInt::from(-17));
        let b = Coeff::Small(5);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, Coeff::Small(-3));
        assert_eq!(r, Coeff::Small(-2));
        let min = Coeff::Small(i128::MIN);
        let (q, r) = min.div_rem(&Coeff::Small(-1));
        assert_eq!(q.to_bigint(), -BigInt::from(i128::MIN));
        assert!(r.is_zero());
    }

    #[test]
    fn ordering_across_variants() {
        let small = Coeff::Small(5);
        let big_pos = Coeff::from_bigint(BigInt::from(i128::MAX) * 2);
        let big_neg = Coeff::from_bigint(BigInt::from(i128::MIN) * 2);
        assert!(small < big_pos);
        assert!(big_neg < small);
        assert!(big_neg < big_pos);
    }
}
