//! The finite rank-2 pattern with `B = [[0,1],[-1,0]]` and `Z = (1+u, 1+u)`:
//! alternating mutation closes up after ten labeled seeds, with five
//! distinct cluster variables.

use crate::gcp::registry::registry_entry;
use crate::gcp::seed::{mutate_seed, specialize_cluster, GcpError, Seed};
use crate::laurent::LaurentPoly;
use num_bigint::BigInt;
use std::collections::BTreeSet;
use thiserror::Error;

const ORBIT_CAP: usize = 100;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum A2Error {
    #[error("seed is not the finite rank-2 pattern seed")]
    NotTheA2Seed,
    #[error("orbit did not close within {ORBIT_CAP} mutations")]
    NonTermination,
    #[error(transparent)]
    Gcp(#[from] GcpError),
}

/// The closed orbit of the finite pattern.
#[derive(Debug, Clone)]
pub struct A2Orbit {
    seeds: Vec<Seed>,
}

impl A2Orbit {
    /// The labeled seeds in orbit order, starting from the initial seed.
    pub fn seeds(&self) -> &[Seed] {
        &self.seeds
    }

    pub fn len(&self) -> usize {
        self.seeds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seeds.is_empty()
    }

    pub fn clusters(&self) -> Vec<&[LaurentPoly]> {
        self.seeds.iter().map(|s| s.cluster()).collect()
    }

    /// The set of distinct cluster variables across the orbit.
    pub fn distinct_variables(&self) -> BTreeSet<LaurentPoly> {
        self.seeds
            .iter()
            .flat_map(|s| s.cluster().iter().cloned())
            .collect()
    }

    /// The set of specialized (all-ones) cluster pairs across the orbit.
    pub fn specialized_pairs(&self) -> Result<BTreeSet<(BigInt, BigInt)>, GcpError> {
        self.seeds
            .iter()
            .map(|s| {
                let v = specialize_cluster(s.cluster())?;
                Ok((v[0].clone(), v[1].clone()))
            })
            .collect()
    }
}

/// Alternate mutations from the given seed until the labeled seed repeats
/// and return the closed orbit. The input must be the registry's finite
/// rank-2 seed.
pub fn enumerate_a2(seed: &Seed) -> Result<A2Orbit, A2Error> {
    let reference = registry_entry("a2", &[])
        .expect("a2 row constructs")
        .seed;
    if seed != &reference {
        return Err(A2Error::NotTheA2Seed);
    }
    let mut seeds = vec![seed.clone()];
    let mut cur = seed.clone();
    let mut dir = 0usize;
    for _ in 0..ORBIT_CAP {
        cur = mutate_seed(&cur, dir)?;
        if cur == *seed {
            return Ok(A2Orbit { seeds });
        }
        seeds.push(cur.clone());
        dir = 1 - dir;
    }
    Err(A2Error::NonTermination)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gcp::registry::Rank2Equation;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn orbit_length_is_ten() {
        let seed = registry_entry("a2", &[]).unwrap().seed;
        let orbit = enumerate_a2(&seed).unwrap();
        assert_eq!(orbit.len(), 10);
    }

    #[test]
    fn five_distinct_variables() {
        let seed = registry_entry("a2", &[]).unwrap().seed;
        let orbit = enumerate_a2(&seed).unwrap();
        let vars = orbit.distinct_variables();
        assert_eq!(vars.len(), 5);
        // {x1, x2, (x2+1)/x1, (x1+x2+1)/(x1*x2), (x1+1)/x2}
        let expected: BTreeSet<LaurentPoly> = [
            LaurentPoly::var(2, 0),
            LaurentPoly::var(2, 1),
            LaurentPoly::from_terms(2, vec![(vec![-1, 1], big(1)), (vec![-1, 0], big(1))])
                .unwrap(),
            LaurentPoly::from_terms(
                2,
                vec![
                    (vec![0, -1], big(1)),
                    (vec![-1, 0], big(1)),
                    (vec![-1, -1], big(1)),
                ],
            )
            .unwrap(),
            LaurentPoly::from_terms(2, vec![(vec![1, -1], big(1)), (vec![0, -1], big(1))])
                .unwrap(),
        ]
        .into_iter()
        .collect();
        assert_eq!(vars, expected);
    }

    #[test]
    fn orbit_contains_the_double_mutated_cluster() {
        let seed = registry_entry("a2", &[]).unwrap().seed;
        let orbit = enumerate_a2(&seed).unwrap();
        // ((x1+x2+1)/(x1*x2), (x2+1)/x1)
        let first = LaurentPoly::from_terms(
            2,
            vec![
                (vec![0, -1], big(1)),
                (vec![-1, 0], big(1)),
                (vec![-1, -1], big(1)),
            ],
        )
        .unwrap();
        let second =
            LaurentPoly::from_terms(2, vec![(vec![-1, 1], big(1)), (vec![-1, 0], big(1))])
                .unwrap();
        assert!(orbit
            .clusters()
            .iter()
            .any(|c| c[0] == first && c[1] == second));
    }

    #[test]
    fn specialized_pairs_are_the_five_solutions() {
        let seed = registry_entry("a2", &[]).unwrap().seed;
        let orbit = enumerate_a2(&seed).unwrap();
        let pairs = orbit.specialized_pairs().unwrap();
        let expected: BTreeSet<(BigInt, BigInt)> = [(1, 1), (1, 2), (2, 1), (2, 3), (3, 2)]
            .into_iter()
            .map(|(x, y)| (big(x), big(y)))
            .collect();
        assert_eq!(pairs, expected);
        for (x, y) in &pairs {
            assert_eq!(Rank2Equation::A2.residual(x, y), BigInt::from(0));
        }
    }

    #[test]
    fn rejects_other_seeds() {
        let other = registry_entry("t2r3", &[big(1), big(1)]).unwrap().seed;
        assert!(matches!(enumerate_a2(&other), Err(A2Error::NotTheA2Seed)));
    }
}
