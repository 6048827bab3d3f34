//! The quartic equation family
//! `x^2 + y^4 + z^4 + k*y^2*z^2 + 2*x*y^2 + 2*x*z^2 = (7 + k)*x*y^2*z^2`
//! and its correspondence `(a,b,c) <-> (a, b^2, c^2)` with the cubic family
//! at parameters `(2, k, 2)`.

use crate::cubic::{self, CubicParams, JumpDir, SingularKind, Triple};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuarticError {
    #[error("parameter must be nonnegative")]
    NegativeParameter,
    #[error("{0} is not a solution of the given equation")]
    NotASolution(Triple),
    #[error("{0} has a non-square entry where a perfect square is guaranteed")]
    NotAPerfectSquare(Triple),
    /// A jump that is guaranteed integral produced a remainder. This must
    /// never fire; it would falsify the squares lemma behind the family.
    #[error("internal non-integral jump at {0}")]
    InternalNonIntegral(Triple),
    #[error("{0} is singular; descent is defined for nonsingular solutions")]
    IsSingular(Triple),
    #[error("(1,1,1) is the root and has no parent")]
    IsRoot,
    #[error(transparent)]
    Cubic(#[from] cubic::CubicError),
}

/// Nonnegative parameter `k` selecting one quartic equation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuarticParams {
    k: BigInt,
}

impl QuarticParams {
    pub fn new(k: BigInt) -> Result<Self, QuarticError> {
        if k.is_negative() {
            return Err(QuarticError::NegativeParameter);
        }
        Ok(QuarticParams { k })
    }

    pub fn from_u64(k: u64) -> Self {
        QuarticParams { k: k.into() }
    }

    pub fn k(&self) -> &BigInt {
        &self.k
    }

    /// `7 + k`, the coefficient of `x*y^2*z^2`.
    pub fn coefficient(&self) -> BigInt {
        BigInt::from(7) + &self.k
    }

    /// The conjugate cubic parameters `(2, k, 2)`.
    pub fn cubic_params(&self) -> CubicParams {
        CubicParams::new(BigInt::from(2), self.k.clone(), BigInt::from(2))
            .expect("nonnegative parameters")
    }
}

impl fmt::Display for QuarticParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.k)
    }
}

/// `LHS - RHS` of the quartic equation at `t`; zero iff `t` is a solution.
pub fn quartic_residual(q: &QuarticParams, t: &Triple) -> BigInt {
    let (a, b, c) = (t.a(), t.b(), t.c());
    let b2 = b * b;
    let c2 = c * c;
    let lhs = a * a
        + &b2 * &b2
        + &c2 * &c2
        + q.k() * &b2 * &c2
        + BigInt::from(2) * a * &b2
        + BigInt::from(2) * a * &c2;
    let rhs = q.coefficient() * a * &b2 * &c2;
    lhs - rhs
}

pub fn is_solution(q: &QuarticParams, t: &Triple) -> bool {
    quartic_residual(q, t).is_zero()
}

fn ensure_solution(q: &QuarticParams, t: &Triple) -> Result<(), QuarticError> {
    if is_solution(q, t) {
        Ok(())
    } else {
        Err(QuarticError::NotASolution(t.clone()))
    }
}

/// One quartic Vieta jump. The first jump is computed by the linear
/// (sum-of-roots) form; the second and third replace `b` by `(a + c^2)/b`
/// and `c` by `(a + b^2)/c`, whose integrality is guaranteed by the squares
/// lemma and asserted here.
pub fn quartic_jump(q: &QuarticParams, t: &Triple, dir: JumpDir) -> Result<Triple, QuarticError> {
    ensure_solution(q, t)?;
    let (a, b, c) = (t.a(), t.b(), t.c());
    let b2 = b * b;
    let c2 = c * c;
    let out = match dir {
        JumpDir::First => {
            let new = q.coefficient() * &b2 * &c2 - a - BigInt::from(2) * &b2 - BigInt::from(2) * &c2;
            debug_assert_eq!(
                &new * a,
                &b2 * &b2 + q.k() * &b2 * &c2 + &c2 * &c2,
                "linear and quotient first-jump forms disagree at {t}"
            );
            Triple::new(new, b.clone(), c.clone())
        }
        JumpDir::Second => {
            let (new, rem) = (a + &c2).div_rem(b);
            if !rem.is_zero() {
                return Err(QuarticError::InternalNonIntegral(t.clone()));
            }
            Triple::new(a.clone(), new, c.clone())
        }
        JumpDir::Third => {
            let (new, rem) = (a + &b2).div_rem(c);
            if !rem.is_zero() {
                return Err(QuarticError::InternalNonIntegral(t.clone()));
            }
            Triple::new(a.clone(), b.clone(), new)
        }
    }?;
    debug_assert!(is_solution(q, &out));
    Ok(out)
}

pub fn quartic_jump_first(q: &QuarticParams, t: &Triple) -> Result<Triple, QuarticError> {
    quartic_jump(q, t, JumpDir::First)
}

pub fn quartic_jump_second(q: &QuarticParams, t: &Triple) -> Result<Triple, QuarticError> {
    quartic_jump(q, t, JumpDir::Second)
}

pub fn quartic_jump_third(q: &QuarticParams, t: &Triple) -> Result<Triple, QuarticError> {
    quartic_jump(q, t, JumpDir::Third)
}

/// The conjugate cubic triple `(a, b^2, c^2)`, validated as a solution of
/// the `(2,k,2)` cubic equation.
pub fn to_cubic(q: &QuarticParams, t: &Triple) -> Result<Triple, QuarticError> {
    ensure_solution(q, t)?;
    let lifted = Triple::new(t.a().clone(), t.b() * t.b(), t.c() * t.c())?;
    debug_assert!(cubic::is_solution(&q.cubic_params(), &lifted));
    Ok(lifted)
}

/// Inverse of [`to_cubic`]: `(A, sqrt(B), sqrt(C))` for a `(2,k,2)`-cubic
/// solution `(A,B,C)`. Perfect-squareness of `B` and `C` is guaranteed by
/// the squares lemma; a mismatch raises the falsification error.
pub fn from_cubic(q: &QuarticParams, t: &Triple) -> Result<Triple, QuarticError> {
    if !cubic::is_solution(&q.cubic_params(), t) {
        return Err(QuarticError::NotASolution(t.clone()));
    }
    let b = perfect_sqrt(t.b()).ok_or_else(|| QuarticError::NotAPerfectSquare(t.clone()))?;
    let c = perfect_sqrt(t.c()).ok_or_else(|| QuarticError::NotAPerfectSquare(t.clone()))?;
    let out = Triple::new(t.a().clone(), b, c)?;
    debug_assert!(is_solution(q, &out));
    Ok(out)
}

/// Singular classification, delegated through the cubic conjugate.
pub fn classify_singular(q: &QuarticParams, t: &Triple) -> Result<SingularKind, QuarticError> {
    let lifted = to_cubic(q, t)?;
    Ok(cubic::classify_singular(&q.cubic_params(), &lifted)?)
}

/// Position of the maximal entry of the conjugate `(a, b^2, c^2)`; the tree
/// rule compares these, not the raw entries.
fn max_position(q: &QuarticParams, t: &Triple) -> Result<JumpDir, QuarticError> {
    let lifted = to_cubic(q, t)?;
    assert!(
        !lifted.has_repeated_entry(),
        "nonsingular solution {t} must have pairwise distinct conjugate entries"
    );
    let mut best = JumpDir::First;
    for dir in [JumpDir::Second, JumpDir::Third] {
        if lifted.entries()[dir.index()] > lifted.entries()[best.index()] {
            best = dir;
        }
    }
    Ok(best)
}

/// Children in the quartic solution tree, ordered by jump direction: three
/// for the root, otherwise the two jumps away from the maximal entry of
/// `(a, b^2, c^2)`.
pub fn quartic_children(
    q: &QuarticParams,
    t: &Triple,
) -> Result<Vec<(Triple, JumpDir)>, QuarticError> {
    let kind = classify_singular(q, t)?;
    let skip = match kind {
        SingularKind::Origin => None,
        SingularKind::NotSingular => Some(max_position(q, t)?),
        _ => kind.axis_dir(),
    };
    JumpDir::ALL
        .into_iter()
        .filter(|d| Some(*d) != skip)
        .map(|d| quartic_jump(q, t, d).map(|child| (child, d)))
        .collect()
}

/// Descent step: the jump at the maximal conjugate entry, which strictly
/// decreases the conjugate maximum.
pub fn descend(q: &QuarticParams, t: &Triple) -> Result<(Triple, JumpDir), QuarticError> {
    let kind = classify_singular(q, t)?;
    if kind.is_singular() {
        return Err(QuarticError::IsSingular(t.clone()));
    }
    let dir = max_position(q, t)?;
    let down = quartic_jump(q, t, dir)?;
    assert!(
        to_cubic(q, &down)?.max_entry() < to_cubic(q, t)?.max_entry(),
        "descent must strictly decrease the conjugate maximum"
    );
    Ok((down, dir))
}

/// Parent in the quartic solution tree.
pub fn parent(q: &QuarticParams, t: &Triple) -> Result<Triple, QuarticError> {
    match classify_singular(q, t)? {
        SingularKind::Origin => Err(QuarticError::IsRoot),
        SingularKind::NotSingular => Ok(descend(q, t)?.0),
        _ => Ok(Triple::root()),
    }
}

/// Exact integer square root by binary search: `Some(r)` iff `n == r*r`.
/// No floating point is involved.
pub fn perfect_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    if n.is_zero() || n.is_one() {
        return Some(n.clone());
    }
    let mut lo = BigInt::one();
    let mut hi = BigInt::one() << (n.bits() / 2 + 1);
    while lo <= hi {
        let mid: BigInt = (&lo + &hi) >> 1;
        let sq = &mid * &mid;
        match sq.cmp(n) {
            std::cmp::Ordering::Equal => return Some(mid),
            std::cmp::Ordering::Less => lo = mid + 1,
            std::cmp::Ordering::Greater => hi = mid - 1,
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residual_examples() {
        let k1 = QuarticParams::from_u64(1);
        assert!(quartic_residual(&k1, &Triple::from_u64(21, 11, 1)).is_zero());
        assert!(quartic_residual(&k1, &Triple::root()).is_zero());
        let k0 = QuarticParams::from_u64(0);
        assert!(quartic_residual(&k0, &Triple::from_u64(2, 1, 1)).is_zero());
        assert!(!quartic_residual(&k1, &Triple::from_u64(2, 1, 1)).is_zero());
    }

    #[test]
    fn jump_examples() {
        let q = QuarticParams::from_u64(1);
        assert_eq!(
            quartic_jump_second(&q, &Triple::from_u64(3, 1, 1)).unwrap(),
            Triple::from_u64(3, 4, 1)
        );
        assert_eq!(
            quartic_jump_third(&q, &Triple::from_u64(1, 2, 1)).unwrap(),
            Triple::from_u64(1, 2, 5)
        );
        assert_eq!(
            quartic_jump_first(&q, &Triple::from_u64(1, 2, 5)).unwrap(),
            Triple::from_u64(741, 2, 5)
        );
    }

    #[test]
    fn jumps_are_involutions() {
        let q = QuarticParams::from_u64(1);
        let t = Triple::from_u64(21, 2, 1);
        for dir in JumpDir::ALL {
            let once = quartic_jump(&q, &t, dir).unwrap();
            assert_eq!(quartic_jump(&q, &once, dir).unwrap(), t);
        }
    }

    #[test]
    fn children_examples() {
        let q = QuarticParams::from_u64(1);
        assert_eq!(
            quartic_children(&q, &Triple::root()).unwrap(),
            vec![
                (Triple::from_u64(3, 1, 1), JumpDir::First),
                (Triple::from_u64(1, 2, 1), JumpDir::Second),
                (Triple::from_u64(1, 1, 2), JumpDir::Third),
            ]
        );
        assert_eq!(
            quartic_children(&q, &Triple::from_u64(21, 2, 1)).unwrap(),
            vec![
                (Triple::from_u64(21, 11, 1), JumpDir::Second),
                (Triple::from_u64(21, 2, 25), JumpDir::Third),
            ]
        );
        assert_eq!(
            quartic_children(&q, &Triple::from_u64(1, 5, 2)).unwrap(),
            vec![
                (Triple::from_u64(741, 5, 2), JumpDir::First),
                (Triple::from_u64(1, 5, 13), JumpDir::Third),
            ]
        );
    }

    #[test]
    fn cubic_correspondence() {
        let q = QuarticParams::from_u64(1);
        let lifted = to_cubic(&q, &Triple::from_u64(3, 4, 1)).unwrap();
        assert_eq!(lifted, Triple::from_u64(3, 16, 1));
        // (3,16,1) must satisfy X^2+Y^2+Z^2+2XY+YZ+2ZX = 8XYZ
        assert!(cubic::is_solution(&q.cubic_params(), &lifted));
        assert_eq!(
            from_cubic(&q, &Triple::from_u64(21, 121, 1)).unwrap(),
            Triple::from_u64(21, 11, 1)
        );
        assert_eq!(to_cubic(&q, &Triple::root()).unwrap(), Triple::root());
    }

    #[test]
    fn from_cubic_rejects_non_solution() {
        let q = QuarticParams::from_u64(1);
        let t = Triple::from_u64(2, 4, 9);
        assert_eq!(from_cubic(&q, &t), Err(QuarticError::NotASolution(t)));
    }

    #[test]
    fn perfect_sqrt_basics() {
        assert_eq!(perfect_sqrt(&BigInt::from(0)), Some(BigInt::from(0)));
        assert_eq!(perfect_sqrt(&BigInt::from(1)), Some(BigInt::from(1)));
        assert_eq!(perfect_sqrt(&BigInt::from(4)), Some(BigInt::from(2)));
        assert_eq!(perfect_sqrt(&BigInt::from(15)), None);
        assert_eq!(perfect_sqrt(&BigInt::from(16)), Some(BigInt::from(4)));
        let n = BigInt::from(10_000_000_019u64);
        assert_eq!(perfect_sqrt(&(&n * &n)), Some(n.clone()));
        assert_eq!(perfect_sqrt(&(&n * &n + 1)), None);
        assert_eq!(perfect_sqrt(&BigInt::from(-4)), None);
    }

    #[test]
    fn parent_and_descend() {
        let q = QuarticParams::from_u64(1);
        assert_eq!(
            descend(&q, &Triple::from_u64(741, 5, 2)).unwrap(),
            (Triple::from_u64(1, 5, 2), JumpDir::First)
        );
        assert_eq!(
            parent(&q, &Triple::from_u64(1, 1, 2)).unwrap(),
            Triple::root()
        );
        assert_eq!(parent(&q, &Triple::root()), Err(QuarticError::IsRoot));
    }
}
