//! The seed registry: six rank-3 rows for the two equation families, eleven
//! rank-2 rows, and one rank-3 seed with no known equation.
//!
//! Each entry carries `(B, Z, D, equation binding)`. `D` is always derived
//! from the exchange-polynomial degrees; the expected `D` column is kept
//! only as a load-time cross-check. Parametric rows default to 1 in every
//! parameter slot and can be instantiated explicitly.

use crate::cubic::CubicParams;
use crate::exchange::ExchangePoly;
use crate::gcp::matrix::ExchangeMatrix;
use crate::gcp::seed::Seed;
use crate::quartic::QuarticParams;
use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RegistryError {
    #[error("unknown seed name {0:?}")]
    UnknownSeed(String),
    #[error("seed {0} takes {1} parameter(s), got {2}")]
    ParameterCount(String, usize, usize),
    #[error("parameters must be nonnegative")]
    NegativeParameter,
    #[error("seed construction failed: {0}")]
    Construction(String),
}

/// A rank-2 equation bound to a registry row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rank2Equation {
    /// `x^2 + y^2 + k1*x + k2*y + 1 = (3 + k1 + k2)*x*y`
    Cubic2 { k1: BigInt, k2: BigInt },
    /// `x^2 + y^4 + k*y^2 + 2*x + 1 = (5 + k)*x*y^2`
    Quartic2 { k: BigInt },
    /// `x^2 + y^2 + 2x + 2y + x^2*y + x*y^2 + 1 = 9*x*y`
    A2,
}

impl Rank2Equation {
    /// `LHS - RHS` at `(x, y)`; zero iff the pair is a solution.
    pub fn residual(&self, x: &BigInt, y: &BigInt) -> BigInt {
        match self {
            Rank2Equation::Cubic2 { k1, k2 } => {
                x * x + y * y + k1 * x + k2 * y + 1 - (BigInt::from(3) + k1 + k2) * x * y
            }
            Rank2Equation::Quartic2 { k } => {
                let y2 = y * y;
                x * x + &y2 * &y2 + k * &y2 + 2 * x + 1 - (BigInt::from(5) + k) * x * &y2
            }
            Rank2Equation::A2 => {
                x * x + y * y + 2 * x + 2 * y + x * x * y + x * y * y + 1
                    - BigInt::from(9) * x * y
            }
        }
    }

    pub fn id(&self) -> String {
        match self {
            Rank2Equation::Cubic2 { k1, k2 } => format!("r2-cubic:{},{}", k1, k2),
            Rank2Equation::Quartic2 { k } => format!("r2-quartic:{}", k),
            Rank2Equation::A2 => "a2".to_string(),
        }
    }
}

/// What equation a registry seed specializes to, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EquationBinding {
    Cubic(CubicParams),
    Quartic(QuarticParams),
    Rank2(Rank2Equation),
}

impl EquationBinding {
    pub fn id(&self) -> String {
        match self {
            EquationBinding::Cubic(p) => format!("cubic:{},{},{}", p.k1(), p.k2(), p.k3()),
            EquationBinding::Quartic(q) => format!("quartic:{}", q.k()),
            EquationBinding::Rank2(eq) => eq.id(),
        }
    }
}

/// A named registry entry.
#[derive(Debug, Clone)]
pub struct RegistrySeed {
    pub name: String,
    pub seed: Seed,
    pub equation: Option<EquationBinding>,
    /// Parameter values the templates were instantiated with.
    pub params: Vec<BigInt>,
}

impl fmt::Display for RegistrySeed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (rank {})", self.name, self.seed.rank())
    }
}

/// Identifies which table rows exist and their parameter arity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeedTemplate {
    pub name: &'static str,
    pub arity: usize,
    /// Expected degree column, cross-checked against `deg Z_i` on load.
    expected_degrees: &'static [u64],
}

const TEMPLATES: &[SeedTemplate] = &[
    SeedTemplate { name: "t1r1", arity: 0, expected_degrees: &[1, 1, 1] },
    SeedTemplate { name: "t1r2", arity: 1, expected_degrees: &[1, 1, 2] },
    SeedTemplate { name: "t1r3", arity: 2, expected_degrees: &[2, 1, 2] },
    SeedTemplate { name: "t1r4", arity: 3, expected_degrees: &[2, 2, 2] },
    SeedTemplate { name: "t1r5", arity: 0, expected_degrees: &[1, 1, 1] },
    SeedTemplate { name: "t1r6", arity: 1, expected_degrees: &[2, 1, 1] },
    SeedTemplate { name: "t2r1", arity: 0, expected_degrees: &[1, 1] },
    SeedTemplate { name: "t2r2", arity: 1, expected_degrees: &[1, 2] },
    SeedTemplate { name: "t2r3", arity: 2, expected_degrees: &[2, 2] },
    SeedTemplate { name: "t2r4", arity: 0, expected_degrees: &[1, 1] },
    SeedTemplate { name: "t2r5", arity: 1, expected_degrees: &[2, 1] },
    SeedTemplate { name: "t3r1", arity: 0, expected_degrees: &[1, 1] },
    SeedTemplate { name: "t3r2", arity: 2, expected_degrees: &[2, 2] },
    SeedTemplate { name: "t3r3", arity: 1, expected_degrees: &[1, 2] },
    SeedTemplate { name: "t3r4", arity: 1, expected_degrees: &[2, 1] },
    SeedTemplate { name: "t3r5", arity: 0, expected_degrees: &[1, 1] },
    SeedTemplate { name: "t3r6", arity: 0, expected_degrees: &[1, 1] },
    SeedTemplate { name: "q52", arity: 2, expected_degrees: &[4, 1, 1] },
];

pub fn templates() -> &'static [SeedTemplate] {
    TEMPLATES
}

/// Resolve friendly aliases to canonical row names.
pub fn resolve_name(name: &str) -> &str {
    match name {
        "markov" => "t1r1",
        "lampe" => "t1r5",
        "a2" => "t3r1",
        "question52" => "q52",
        other => other,
    }
}

fn lin() -> ExchangePoly {
    ExchangePoly::linear()
}

fn quad(k: &BigInt) -> ExchangePoly {
    ExchangePoly::quadratic(k.clone()).expect("nonnegative parameter")
}

fn build(
    name: &str,
    rows: Vec<Vec<i64>>,
    z: Vec<ExchangePoly>,
    equation: Option<EquationBinding>,
    params: Vec<BigInt>,
) -> Result<RegistrySeed, RegistryError> {
    let b = ExchangeMatrix::new(rows).map_err(|e| RegistryError::Construction(e.to_string()))?;
    if b.symmetrizer().is_none() {
        return Err(RegistryError::Construction(format!(
            "no skew-symmetrizer found for {name}"
        )));
    }
    let seed =
        Seed::initial(b, z).map_err(|e| RegistryError::Construction(e.to_string()))?;
    let template = TEMPLATES
        .iter()
        .find(|t| t.name == name)
        .ok_or_else(|| RegistryError::UnknownSeed(name.to_string()))?;
    // Load-time cross-check of the derived degree matrix against the table.
    if seed.degree_matrix().degrees() != template.expected_degrees {
        return Err(RegistryError::Construction(format!(
            "degree matrix mismatch for {name}"
        )));
    }
    Ok(RegistrySeed {
        name: name.to_string(),
        seed,
        equation,
        params,
    })
}

/// Instantiate a registry row by (canonical or alias) name with explicit
/// parameter values.
pub fn registry_entry(name: &str, params: &[BigInt]) -> Result<RegistrySeed, RegistryError> {
    let name = resolve_name(name);
    let template = TEMPLATES
        .iter()
        .find(|t| t.name == name)
        .ok_or_else(|| RegistryError::UnknownSeed(name.to_string()))?;
    if params.len() != template.arity {
        return Err(RegistryError::ParameterCount(
            name.to_string(),
            template.arity,
            params.len(),
        ));
    }
    if params.iter().any(|p| p < &BigInt::ZERO) {
        return Err(RegistryError::NegativeParameter);
    }
    let p = params.to_vec();
    let cubic = |k1: &BigInt, k2: &BigInt, k3: &BigInt| {
        EquationBinding::Cubic(
            CubicParams::new(k1.clone(), k2.clone(), k3.clone()).expect("nonnegative"),
        )
    };
    let quartic = |k: &BigInt| {
        EquationBinding::Quartic(QuarticParams::new(k.clone()).expect("nonnegative"))
    };
    let r2cubic = |k1: &BigInt, k2: &BigInt| {
        EquationBinding::Rank2(Rank2Equation::Cubic2 {
            k1: k1.clone(),
            k2: k2.clone(),
        })
    };
    let r2quartic = |k: &BigInt| {
        EquationBinding::Rank2(Rank2Equation::Quartic2 { k: k.clone() })
    };
    let zero = BigInt::ZERO;
    match name {
        "t1r1" => build(
            name,
            vec![vec![0, 2, -2], vec![-2, 0, 2], vec![2, -2, 0]],
            vec![lin(), lin(), lin()],
            Some(cubic(&zero, &zero, &zero)),
            p,
        ),
        "t1r2" => build(
            name,
            vec![vec![0, 2, -1], vec![-2, 0, 1], vec![2, -2, 0]],
            vec![lin(), lin(), quad(&params[0])],
            Some(cubic(&params[0], &zero, &zero)),
            p,
        ),
        "t1r3" => build(
            name,
            vec![vec![0, 2, -1], vec![-1, 0, 1], vec![1, -2, 0]],
            vec![quad(&params[1]), lin(), quad(&params[0])],
            Some(cubic(&params[0], &params[1], &zero)),
            p,
        ),
        "t1r4" => build(
            name,
            vec![vec![0, 1, -1], vec![-1, 0, 1], vec![1, -1, 0]],
            vec![quad(&params[1]), quad(&params[2]), quad(&params[0])],
            Some(cubic(&params[0], &params[1], &params[2])),
            p,
        ),
        "t1r5" => build(
            name,
            vec![vec![0, 1, -1], vec![-4, 0, 2], vec![4, -2, 0]],
            vec![lin(), lin(), lin()],
            Some(quartic(&zero)),
            p,
        ),
        "t1r6" => build(
            name,
            vec![vec![0, 1, -1], vec![-2, 0, 2], vec![2, -2, 0]],
            vec![quad(&params[0]), lin(), lin()],
            Some(quartic(&params[0])),
            p,
        ),
        "t2r1" | "t3r6" => build(
            name,
            vec![vec![0, 2], vec![-2, 0]],
            vec![lin(), lin()],
            Some(r2cubic(&zero, &zero)),
            p,
        ),
        "t2r2" | "t3r3" => build(
            name,
            vec![vec![0, 1], vec![-2, 0]],
            vec![lin(), quad(&params[0])],
            Some(r2cubic(&params[0], &zero)),
            p,
        ),
        "t2r3" | "t3r2" => build(
            name,
            vec![vec![0, 1], vec![-1, 0]],
            vec![quad(&params[1]), quad(&params[0])],
            Some(r2cubic(&params[0], &params[1])),
            p,
        ),
        "t2r4" | "t3r5" => build(
            name,
            vec![vec![0, 1], vec![-4, 0]],
            vec![lin(), lin()],
            Some(r2quartic(&zero)),
            p,
        ),
        "t2r5" | "t3r4" => build(
            name,
            vec![vec![0, 1], vec![-2, 0]],
            vec![quad(&params[0]), lin()],
            Some(r2quartic(&params[0])),
            p,
        ),
        "t3r1" => build(
            name,
            vec![vec![0, 1], vec![-1, 0]],
            vec![lin(), lin()],
            Some(EquationBinding::Rank2(Rank2Equation::A2)),
            p,
        ),
        "q52" => {
            let (k1, k2) = (&params[0], &params[1]);
            let z1 = ExchangePoly::new(vec![
                BigInt::one(),
                k1.clone(),
                k2.clone(),
                k1.clone(),
                BigInt::one(),
            ])
            .map_err(|e| RegistryError::Construction(e.to_string()))?;
            build(
                name,
                vec![vec![0, 1, -1], vec![-1, 0, 2], vec![1, -2, 0]],
                vec![z1, lin(), lin()],
                None,
                p,
            )
        }
        other => Err(RegistryError::UnknownSeed(other.to_string())),
    }
}

/// The full registry with every parameter slot defaulted to 1:
/// six rank-3 equation rows, eleven rank-2 rows, and the open rank-3 seed.
pub fn registry() -> Vec<RegistrySeed> {
    TEMPLATES
        .iter()
        .map(|t| {
            let params = vec![BigInt::one(); t.arity];
            registry_entry(t.name, &params).expect("registry rows construct")
        })
        .collect()
}

#[derive(Serialize)]
struct RegistryRecord {
    name: String,
    rank: usize,
    /// Row-major entries of `B`.
    #[serde(rename = "B")]
    b: Vec<String>,
    /// Coefficient lists of the exchange polynomials.
    #[serde(rename = "Z")]
    z: Vec<Vec<String>>,
    equation: Option<String>,
}

/// Serialize the registry (default parameters) as JSON:
/// `{name, rank, B (row-major), Z (coefficient lists), equation id or null}`.
pub fn registry_json() -> String {
    let records: Vec<RegistryRecord> = registry()
        .iter()
        .map(|entry| RegistryRecord {
            name: entry.name.clone(),
            rank: entry.seed.rank(),
            b: entry
                .seed
                .matrix()
                .entries()
                .iter()
                .map(|e| e.to_string())
                .collect(),
            z: entry
                .seed
                .zpolys()
                .iter()
                .map(|z| z.coeffs().iter().map(|c| c.to_string()).collect())
                .collect(),
            equation: entry.equation.as_ref().map(|e| e.id()),
        })
        .collect();
    serde_json::to_string_pretty(&records).expect("registry records serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn registry_counts() {
        let all = registry();
        assert_eq!(all.len(), 18);
        let rank3 = all.iter().filter(|e| e.seed.rank() == 3).count();
        let rank2 = all.iter().filter(|e| e.seed.rank() == 2).count();
        assert_eq!(rank3, 7);
        assert_eq!(rank2, 11);
        // table row split: 6 / 5 / 7 (table 3 plus the open seed is 6 + 1)
        assert_eq!(all.iter().filter(|e| e.name.starts_with("t1")).count(), 6);
        assert_eq!(all.iter().filter(|e| e.name.starts_with("t2")).count(), 5);
        assert_eq!(all.iter().filter(|e| e.name.starts_with("t3")).count(), 6);
        assert!(all.iter().any(|e| e.name == "q52"));
    }

    #[test]
    fn first_row_has_identity_degrees() {
        let markov = registry_entry("markov", &[]).unwrap();
        assert_eq!(markov.name, "t1r1");
        assert_eq!(markov.seed.degree_matrix().degrees(), &[1, 1, 1]);
    }

    #[test]
    fn a2_binding() {
        let a2 = registry_entry("a2", &[]).unwrap();
        assert_eq!(
            a2.equation,
            Some(EquationBinding::Rank2(Rank2Equation::A2))
        );
    }

    #[test]
    fn q52_has_no_equation() {
        let q = registry_entry("q52", &[BigInt::one(), BigInt::from(2)]).unwrap();
        assert!(q.equation.is_none());
        assert_eq!(q.seed.degree_matrix().degrees(), &[4, 1, 1]);
    }

    #[test]
    fn parameter_validation() {
        assert!(matches!(
            registry_entry("t1r2", &[]),
            Err(RegistryError::ParameterCount(_, 1, 0))
        ));
        assert!(matches!(
            registry_entry("nope", &[]),
            Err(RegistryError::UnknownSeed(_))
        ));
        assert!(matches!(
            registry_entry("t1r2", &[BigInt::from(-1)]),
            Err(RegistryError::NegativeParameter)
        ));
    }

    #[test]
    fn rank2_residuals() {
        // x^2+y^2+1 = 3xy has the Fibonacci-style solutions (1,1),(1,2),(2,5)
        let eq = Rank2Equation::Cubic2 {
            k1: BigInt::ZERO,
            k2: BigInt::ZERO,
        };
        for (x, y) in [(1, 1), (1, 2), (2, 5), (5, 13)] {
            assert!(eq.residual(&BigInt::from(x), &BigInt::from(y)).is_zero());
        }
        assert!(!eq.residual(&BigInt::from(2), &BigInt::from(3)).is_zero());
        let a2 = Rank2Equation::A2;
        for (x, y) in [(1, 1), (1, 2), (2, 1), (2, 3), (3, 2)] {
            assert!(a2.residual(&BigInt::from(x), &BigInt::from(y)).is_zero());
        }
        assert!(!a2.residual(&BigInt::from(1), &BigInt::from(3)).is_zero());
    }

    #[test]
    fn registry_json_shape() {
        let json = registry_json();
        let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
        let rows = parsed.as_array().unwrap();
        assert_eq!(rows.len(), 18);
        assert_eq!(rows[0]["name"], "t1r1");
        assert_eq!(rows[0]["rank"], 3);
        assert_eq!(rows[0]["B"].as_array().unwrap().len(), 9);
        assert_eq!(rows[0]["equation"], "cubic:0,0,0");
        let q52 = rows.iter().find(|r| r["name"] == "q52").unwrap();
        assert!(q52["equation"].is_null());
    }
}
