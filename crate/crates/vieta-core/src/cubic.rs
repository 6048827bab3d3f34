//! The cubic equation family
//! `x^2 + y^2 + z^2 + k1*xy + k2*yz + k3*zx = (3 + k1 + k2 + k3)*xyz`
//! over positive integers: residual evaluation, the three Vieta jumps,
//! singular classification, descent, parenthood and coprimality.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CubicError {
    #[error("parameter must be nonnegative")]
    NegativeParameter,
    #[error("triple entries must be positive")]
    NonPositiveEntry,
    #[error("{0} is not a solution of the given equation")]
    NotASolution(Triple),
    #[error("{0} is singular; descent is defined for nonsingular solutions")]
    IsSingular(Triple),
    #[error("(1,1,1) is the root and has no parent")]
    IsRoot,
}

/// Nonnegative parameters `(k1, k2, k3)` selecting one cubic equation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CubicParams {
    k1: BigInt,
    k2: BigInt,
    k3: BigInt,
}

impl CubicParams {
    pub fn new(k1: BigInt, k2: BigInt, k3: BigInt) -> Result<Self, CubicError> {
        if k1.is_negative() || k2.is_negative() || k3.is_negative() {
            return Err(CubicError::NegativeParameter);
        }
        Ok(CubicParams { k1, k2, k3 })
    }

    pub fn from_u64(k1: u64, k2: u64, k3: u64) -> Self {
        CubicParams {
            k1: k1.into(),
            k2: k2.into(),
            k3: k3.into(),
        }
    }

    pub fn k1(&self) -> &BigInt {
        &self.k1
    }

    pub fn k2(&self) -> &BigInt {
        &self.k2
    }

    pub fn k3(&self) -> &BigInt {
        &self.k3
    }

    /// `3 + k1 + k2 + k3`, the coefficient of `xyz`.
    pub fn coefficient(&self) -> BigInt {
        BigInt::from(3) + &self.k1 + &self.k2 + &self.k3
    }
}

impl fmt::Display for CubicParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.k1, self.k2, self.k3)
    }
}

/// Ordered triple of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple {
    a: BigInt,
    b: BigInt,
    c: BigInt,
}

impl Triple {
    pub fn new(a: BigInt, b: BigInt, c: BigInt) -> Result<Self, CubicError> {
        if a < BigInt::one() || b < BigInt::one() || c < BigInt::one() {
            return Err(CubicError::NonPositiveEntry);
        }
        Ok(Triple { a, b, c })
    }

    pub fn from_u64(a: u64, b: u64, c: u64) -> Self {
        Triple::new(a.into(), b.into(), c.into()).expect("positive entries")
    }

    pub fn root() -> Self {
        Triple::from_u64(1, 1, 1)
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    pub fn entries(&self) -> [&BigInt; 3] {
        [&self.a, &self.b, &self.c]
    }

    pub fn max_entry(&self) -> &BigInt {
        self.entries().into_iter().max().expect("three entries")
    }

    pub fn is_root(&self) -> bool {
        self.a.is_one() && self.b.is_one() && self.c.is_one()
    }

    pub fn has_repeated_entry(&self) -> bool {
        self.a == self.b || self.b == self.c || self.a == self.c
    }

    /// The sorted multiset of entries.
    pub fn sorted(&self) -> [BigInt; 3] {
        let mut v = [self.a.clone(), self.b.clone(), self.c.clone()];
        v.sort();
        v
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

/// The position replaced by a Vieta jump.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum JumpDir {
    First,
    Second,
    Third,
}

impl JumpDir {
    pub const ALL: [JumpDir; 3] = [JumpDir::First, JumpDir::Second, JumpDir::Third];

    pub fn index(self) -> usize {
        match self {
            JumpDir::First => 0,
            JumpDir::Second => 1,
            JumpDir::Third => 2,
        }
    }

    pub fn from_index(i: usize) -> Option<JumpDir> {
        JumpDir::ALL.get(i).copied()
    }

    pub fn as_str(self) -> &'static str {
        match self {
            JumpDir::First => "first",
            JumpDir::Second => "second",
            JumpDir::Third => "third",
        }
    }
}

impl fmt::Display for JumpDir {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Singular solutions are the four triples with a repeated entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SingularKind {
    NotSingular,
    /// `(1,1,1)`
    Origin,
    /// `(k2+2, 1, 1)`
    FirstAxis,
    /// `(1, k3+2, 1)`
    SecondAxis,
    /// `(1, 1, k1+2)`
    ThirdAxis,
}

impl SingularKind {
    pub fn is_singular(self) -> bool {
        self != SingularKind::NotSingular
    }

    /// The jump direction that carries an axis-singular triple to the root.
    pub fn axis_dir(self) -> Option<JumpDir> {
        match self {
            SingularKind::FirstAxis => Some(JumpDir::First),
            SingularKind::SecondAxis => Some(JumpDir::Second),
            SingularKind::ThirdAxis => Some(JumpDir::Third),
            _ => None,
        }
    }
}

/// `LHS - RHS` of the cubic equation at `t`; zero iff `t` is a solution.
pub fn cubic_residual(p: &CubicParams, t: &Triple) -> BigInt {
    let (a, b, c) = (&t.a, &t.b, &t.c);
    let lhs = a * a
        + b * b
        + c * c
        + p.k1() * a * b
        + p.k2() * b * c
        + p.k3() * c * a;
    let rhs = p.coefficient() * a * b * c;
    lhs - rhs
}

pub fn is_solution(p: &CubicParams, t: &Triple) -> bool {
    cubic_residual(p, t).is_zero()
}

fn ensure_solution(p: &CubicParams, t: &Triple) -> Result<(), CubicError> {
    if is_solution(p, t) {
        Ok(())
    } else {
        Err(CubicError::NotASolution(t.clone()))
    }
}

/// The numerator of the quotient form of a jump, used to cross-check the
/// linear form in debug builds.
fn quotient_numerator(p: &CubicParams, t: &Triple, dir: JumpDir) -> BigInt {
    let (a, b, c) = (&t.a, &t.b, &t.c);
    match dir {
        JumpDir::First => b * b + p.k2() * b * c + c * c,
        JumpDir::Second => a * a + p.k3() * a * c + c * c,
        JumpDir::Third => a * a + p.k1() * a * b + b * b,
    }
}

/// One Vieta jump: replaces the entry at `dir` by the other root of the
/// quadratic obtained by fixing the remaining two entries. Computed by the
/// linear (sum-of-roots) form, which avoids any division.
pub fn vieta_jump(p: &CubicParams, t: &Triple, dir: JumpDir) -> Result<Triple, CubicError> {
    ensure_solution(p, t)?;
    let (a, b, c) = (&t.a, &t.b, &t.c);
    let m = p.coefficient();
    let new = match dir {
        JumpDir::First => m * b * c - a - p.k1() * b - p.k3() * c,
        JumpDir::Second => m * a * c - b - p.k1() * a - p.k2() * c,
        JumpDir::Third => m * a * b - c - p.k2() * b - p.k3() * a,
    };
    debug_assert_eq!(
        &new * t.entries()[dir.index()],
        quotient_numerator(p, t, dir),
        "linear and quotient jump forms disagree at {t} in direction {dir}"
    );
    let out = match dir {
        JumpDir::First => Triple::new(new, b.clone(), c.clone()),
        JumpDir::Second => Triple::new(a.clone(), new, c.clone()),
        JumpDir::Third => Triple::new(a.clone(), b.clone(), new),
    }?;
    debug_assert!(is_solution(p, &out));
    Ok(out)
}

pub fn vieta_first(p: &CubicParams, t: &Triple) -> Result<Triple, CubicError> {
    vieta_jump(p, t, JumpDir::First)
}

pub fn vieta_second(p: &CubicParams, t: &Triple) -> Result<Triple, CubicError> {
    vieta_jump(p, t, JumpDir::Second)
}

pub fn vieta_third(p: &CubicParams, t: &Triple) -> Result<Triple, CubicError> {
    vieta_jump(p, t, JumpDir::Third)
}

/// Classify a solution against the four singular triples.
pub fn classify_singular(p: &CubicParams, t: &Triple) -> Result<SingularKind, CubicError> {
    ensure_solution(p, t)?;
    let one = BigInt::one();
    let two = BigInt::from(2);
    let kind = if t.is_root() {
        SingularKind::Origin
    } else if t.a == p.k2() + &two && t.b.is_one() && t.c.is_one() {
        SingularKind::FirstAxis
    } else if t.a.is_one() && t.b == p.k3() + &two && t.c.is_one() {
        SingularKind::SecondAxis
    } else if t.a.is_one() && t.b.is_one() && t.c == p.k1() + &two {
        SingularKind::ThirdAxis
    } else {
        SingularKind::NotSingular
    };
    let _ = one;
    // Any solution with a repeated entry must be one of the four singular
    // triples; a violation here would falsify the classification.
    debug_assert_eq!(kind.is_singular(), t.has_repeated_entry());
    Ok(kind)
}

/// Position of the maximal entry of a nonsingular solution. Entries of a
/// nonsingular solution are pairwise distinct, so the maximum is unique.
fn max_position(t: &Triple) -> JumpDir {
    assert!(
        !t.has_repeated_entry(),
        "nonsingular solution {t} must have pairwise distinct entries"
    );
    let mut best = JumpDir::First;
    if t.b > *t.entries()[best.index()] {
        best = JumpDir::Second;
    }
    if t.c > *t.entries()[best.index()] {
        best = JumpDir::Third;
    }
    best
}

/// For a nonsingular solution, the unique jump that strictly decreases the
/// maximum: the jump in the direction of the maximal entry.
pub fn descend(p: &CubicParams, t: &Triple) -> Result<(Triple, JumpDir), CubicError> {
    let kind = classify_singular(p, t)?;
    if kind.is_singular() {
        return Err(CubicError::IsSingular(t.clone()));
    }
    let dir = max_position(t);
    let down = vieta_jump(p, t, dir)?;
    assert!(
        down.max_entry() < t.max_entry(),
        "descent must strictly decrease the maximum"
    );
    Ok((down, dir))
}

/// Parent in the solution tree: descent for nonsingular triples, the root
/// for the three axis-singular triples.
pub fn parent(p: &CubicParams, t: &Triple) -> Result<Triple, CubicError> {
    match classify_singular(p, t)? {
        SingularKind::Origin => Err(CubicError::IsRoot),
        SingularKind::NotSingular => Ok(descend(p, t)?.0),
        _ => Ok(Triple::root()),
    }
}

/// Children in the solution tree, ordered by jump direction. The root gets
/// all three jumps; any other solution gets the two jumps away from its
/// maximal entry.
pub fn children(p: &CubicParams, t: &Triple) -> Result<Vec<(Triple, JumpDir)>, CubicError> {
    let kind = classify_singular(p, t)?;
    let skip = match kind {
        SingularKind::Origin => None,
        SingularKind::NotSingular => Some(max_position(t)),
        _ => kind.axis_dir(),
    };
    JumpDir::ALL
        .into_iter()
        .filter(|d| Some(*d) != skip)
        .map(|d| vieta_jump(p, t, d).map(|child| (child, d)))
        .collect()
}

/// Do all three entry pairs have gcd 1?
pub fn pairwise_coprime(t: &Triple) -> bool {
    t.a.gcd(&t.b).is_one() && t.b.gcd(&t.c).is_one() && t.a.gcd(&t.c).is_one()
}

/// Map a Markov solution (the `(0,0,0)` equation) to `(a^2,b^2,c^2)`, a
/// solution of the `(2,2,2)` equation.
pub fn square_lift(t: &Triple) -> Result<Triple, CubicError> {
    let markov = CubicParams::from_u64(0, 0, 0);
    ensure_solution(&markov, t)?;
    let lifted = Triple::new(&t.a * &t.a, &t.b * &t.b, &t.c * &t.c)?;
    debug_assert!(is_solution(&CubicParams::from_u64(2, 2, 2), &lifted));
    Ok(lifted)
}
