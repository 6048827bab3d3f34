//! The aggregated property-audit suite: every invariant family in the crate
//! exercised at desk scale, with a deterministic plain-text report.
//!
//! The report carries no timing or environment information, so two runs
//! (including runs under different thread counts) produce byte-identical
//! output.

use crate::cubic::{self, CubicParams, JumpDir, Triple};
use crate::gcp::{
    build_symmetric_equation, check_condition51, enumerate_a2, mutate_seed, registry,
    registry_entry, walk_tree_specializations, walks_of_depth, EquationBinding, RegistrySeed,
    Seed, SymmetricPoly,
};
use crate::quartic;
use crate::tree::{
    brute_force, brute_force_reference, generate, max_number_witnesses, membership_path,
    EnumBound, FamilySpec, WitnessOutcome,
};
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeSet;
use std::fmt::Write as _;

/// One audited check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditLine {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default)]
pub struct AuditReport {
    pub lines: Vec<AuditLine>,
}

impl AuditReport {
    pub fn all_passed(&self) -> bool {
        self.lines.iter().all(|l| l.passed)
    }

    fn push(&mut self, name: impl Into<String>, result: Result<String, String>) {
        let name = name.into();
        match result {
            Ok(detail) => self.lines.push(AuditLine {
                name,
                passed: true,
                detail,
            }),
            Err(detail) => self.lines.push(AuditLine {
                name,
                passed: false,
                detail,
            }),
        }
    }

    pub fn render(&self) -> String {
        let mut out = String::from("== vieta audit ==\n");
        for line in &self.lines {
            let tag = if line.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{} {}: {}", tag, line.name, line.detail);
        }
        let passed = self.lines.iter().filter(|l| l.passed).count();
        let _ = writeln!(out, "SUMMARY: {} checks, {} passed", self.lines.len(), passed);
        out
    }
}

/// What to audit: the full suite, or a single registry seed.
#[derive(Debug, Clone, Default)]
pub struct AuditOptions {
    /// Restrict to one seed (canonical name or alias) with these parameters.
    pub seed: Option<(String, Vec<BigInt>)>,
    /// Walk depth for the Laurent/specialization checks; per-rank defaults
    /// when absent.
    pub depth: Option<usize>,
}

fn default_depth(rank: usize, requested: Option<usize>) -> usize {
    match requested {
        Some(d) => d,
        None if rank == 2 => 8,
        None => 5,
    }
}

/// Run the audit and collect the report.
pub fn run_audit(opts: &AuditOptions) -> AuditReport {
    let mut report = AuditReport::default();
    match &opts.seed {
        Some((name, params)) => match registry_entry(name, params) {
            Ok(entry) => audit_seed(&mut report, &entry, opts.depth),
            Err(e) => report.push(format!("seed[{name}]"), Err(e.to_string())),
        },
        None => {
            audit_registry_load(&mut report);
            for entry in registry() {
                audit_seed(&mut report, &entry, opts.depth);
            }
            audit_families(&mut report);
            audit_theorem42(&mut report);
            audit_frozen_direction(&mut report);
            audit_a2(&mut report);
            audit_symmetric_builder(&mut report);
        }
    }
    report
}

// ---------------------------------------------------------------------------
// Per-seed checks
// ---------------------------------------------------------------------------

fn audit_seed(report: &mut AuditReport, entry: &RegistrySeed, depth: Option<usize>) {
    let name = &entry.name;
    let depth = default_depth(entry.seed.rank(), depth);

    report.push(
        format!("condition-5.1[{name}]"),
        condition51_check(&entry.seed),
    );
    report.push(
        format!("involution[{name}]"),
        involution_check(&entry.seed),
    );
    report.push(
        format!("laurent-walks[{name}]"),
        laurent_walk_check(&entry.seed, depth),
    );
    if let Some(binding) = &entry.equation {
        report.push(
            format!("specialization[{name}]"),
            specialization_check(&entry.seed, binding, depth.min(4)),
        );
    }
}

fn condition51_check(seed: &Seed) -> Result<String, String> {
    let r = check_condition51(seed);
    if !r.holds() {
        return Err(format!(
            "matrix negated per direction: {:?}, Z invariant per direction: {:?}",
            r.matrix_negated, r.zpolys_invariant
        ));
    }
    Ok(format!(
        "matrix negated and Z fixed in all {} directions; BD class {}",
        seed.rank(),
        r.bd_class
    ))
}

fn involution_check(seed: &Seed) -> Result<String, String> {
    // From the initial seed and from a depth-3 seed.
    let mut starts = vec![seed.clone()];
    let mut deep = seed.clone();
    for k in [0usize, 1, 0] {
        deep = mutate_seed(&deep, k % seed.rank()).map_err(|e| e.to_string())?;
    }
    starts.push(deep);
    for (si, start) in starts.iter().enumerate() {
        for k in 0..seed.rank() {
            let twice = mutate_seed(&mutate_seed(start, k).map_err(|e| e.to_string())?, k)
                .map_err(|e| e.to_string())?;
            if &twice != start {
                return Err(format!(
                    "mu_{} twice differs from the start seed (start {})",
                    k + 1,
                    si
                ));
            }
        }
    }
    Ok(format!(
        "mu_k . mu_k = id on (x,B,Z) for all {} directions, at depth 0 and depth 3",
        seed.rank()
    ))
}

fn laurent_walk_check(seed: &Seed, depth: usize) -> Result<String, String> {
    let points = walk_tree_specializations(seed, depth).map_err(|e| e.to_string())?;
    Ok(format!(
        "{} walk vertices to depth {}: every cluster Laurent, every specialization a positive integer",
        points.len(),
        depth
    ))
}

/// Apply the jump sequence matching a walk's direction sequence, from the
/// root of the bound equation's tree.
fn walk_triple(binding: &EquationBinding, dirs: &[usize]) -> Result<Triple, String> {
    let mut t = Triple::root();
    for &d in dirs {
        let dir = JumpDir::from_index(d).ok_or("direction out of range")?;
        t = match binding {
            EquationBinding::Cubic(p) => {
                cubic::vieta_jump(p, &t, dir).map_err(|e| e.to_string())?
            }
            EquationBinding::Quartic(q) => {
                quartic::quartic_jump(q, &t, dir).map_err(|e| e.to_string())?
            }
            EquationBinding::Rank2(_) => return Err("rank-2 binding has no triple tree".into()),
        };
    }
    Ok(t)
}

fn specialization_check(
    seed: &Seed,
    binding: &EquationBinding,
    depth: usize,
) -> Result<String, String> {
    let points = walk_tree_specializations(seed, depth).map_err(|e| e.to_string())?;
    match binding {
        EquationBinding::Rank2(eq) => {
            for p in &points {
                let (x, y) = (&p.specialized[0], &p.specialized[1]);
                if !eq.residual(x, y).is_zero() {
                    return Err(format!(
                        "pair ({x},{y}) after walk {:?} fails the bound equation",
                        p.dirs
                    ));
                }
            }
            Ok(format!(
                "{} specialized pairs to depth {} all solve the bound equation",
                points.len(),
                depth
            ))
        }
        _ => {
            for p in &points {
                let t = walk_triple(binding, &p.dirs)?;
                let spec = [&p.specialized[0], &p.specialized[1], &p.specialized[2]];
                if spec != t.entries() {
                    return Err(format!(
                        "walk {:?} specializes to {:?}, tree triple is {t}",
                        p.dirs, p.specialized
                    ));
                }
            }
            Ok(format!(
                "{} specialized clusters to depth {} equal the tree triples position-for-position",
                points.len(),
                depth
            ))
        }
    }
}

// ---------------------------------------------------------------------------
// Whole-suite checks
// ---------------------------------------------------------------------------

fn audit_registry_load(report: &mut AuditReport) {
    let all = registry();
    let rank3 = all.iter().filter(|e| e.seed.rank() == 3).count();
    let rank2 = all.iter().filter(|e| e.seed.rank() == 2).count();
    let symmetrized = all
        .iter()
        .all(|e| e.seed.matrix().symmetrizer().is_some());
    let result = if all.len() == 18 && rank3 == 7 && rank2 == 11 && symmetrized {
        Ok(format!(
            "{} seeds ({} rank-3, {} rank-2), degree cross-checks hold, skew-symmetrizers verified",
            all.len(),
            rank3,
            rank2
        ))
    } else {
        Err(format!(
            "{} seeds ({rank3} rank-3, {rank2} rank-2), symmetrizers verified: {symmetrized}",
            all.len()
        ))
    };
    report.push("registry", result);
}

const AUDIT_CUBIC_PARAMS: [(u64, u64, u64); 4] = [(0, 0, 0), (0, 1, 2), (1, 1, 1), (2, 2, 2)];
const AUDIT_CUBIC_BOUND: u64 = 300;
const AUDIT_QUARTIC_BOUND: u64 = 200;

fn audit_families(report: &mut AuditReport) {
    // Oracle equivalence, uniqueness, singular classification, coprimality,
    // and path membership over a small grid.
    let mut specs: Vec<(FamilySpec, u64)> = AUDIT_CUBIC_PARAMS
        .iter()
        .map(|&(k1, k2, k3)| (FamilySpec::cubic(k1, k2, k3), AUDIT_CUBIC_BOUND))
        .collect();
    specs.push((FamilySpec::quartic(0), AUDIT_QUARTIC_BOUND));
    specs.push((FamilySpec::quartic(1), AUDIT_QUARTIC_BOUND));

    for (spec, bound) in &specs {
        let tag = match spec {
            FamilySpec::Cubic(p) => format!("cubic{p}"),
            FamilySpec::Quartic(q) => format!("quartic{q}"),
        };
        report.push(
            format!("oracle-equivalence[{tag}]"),
            family_oracle_check(spec, *bound),
        );
        report.push(
            format!("solution-properties[{tag}]"),
            family_property_check(spec, *bound),
        );
    }

    report.push("reference-oracle-spot-check", reference_spot_check());
    report.push("counterexample-regression", counterexample_check());
    report.push("squares-correspondence", squares_check());
    report.push("max-number-witnesses", witness_check());
    report.push("quartic-11-never-maximal", eleven_check());
}

fn family_oracle_check(spec: &FamilySpec, bound: u64) -> Result<String, String> {
    let nodes = generate(spec, &EnumBound::max_entry_u64(bound));
    let mut seen = BTreeSet::new();
    for n in &nodes {
        if !seen.insert(n.triple.clone()) {
            return Err(format!("duplicate triple {} in the tree", n.triple));
        }
    }
    let oracle = brute_force(spec, bound).map_err(|e| e.to_string())?;
    if seen != oracle {
        return Err(format!(
            "tree found {} solutions, oracle found {}",
            seen.len(),
            oracle.len()
        ));
    }
    Ok(format!(
        "tree and box oracle agree on all {} solutions with max <= {}, no duplicates",
        oracle.len(),
        bound
    ))
}

fn family_property_check(spec: &FamilySpec, bound: u64) -> Result<String, String> {
    let nodes = generate(spec, &EnumBound::max_entry_u64(bound));
    let mut singulars = Vec::new();
    for n in &nodes {
        let t = &n.triple;
        if !cubic::pairwise_coprime(t) {
            return Err(format!("{t} is not pairwise coprime"));
        }
        let kind = spec.classify_singular(t).map_err(|e| e.to_string())?;
        if kind.is_singular() != t_has_repeat(spec, t) {
            return Err(format!("singular classification mismatch at {t}"));
        }
        if kind.is_singular() {
            singulars.push(t.clone());
        }
        // Parent pointers and descent paths terminate at the root.
        if n.depth > 0 {
            let path = membership_path(spec, t).map_err(|e| e.to_string())?;
            if path.is_empty() {
                return Err(format!("empty descent path for non-root {t}"));
            }
        }
    }
    Ok(format!(
        "{} solutions: pairwise coprime, singular set has {} members, descent paths reach the root",
        nodes.len(),
        singulars.len()
    ))
}

/// Repeated-entry test in the family's own comparison space (entries for
/// cubic, conjugate entries for quartic).
fn t_has_repeat(spec: &FamilySpec, t: &Triple) -> bool {
    match spec {
        FamilySpec::Cubic(_) => t.has_repeated_entry(),
        FamilySpec::Quartic(q) => quartic::to_cubic(q, t)
            .map(|lifted| lifted.has_repeated_entry())
            .unwrap_or(false),
    }
}

fn reference_spot_check() -> Result<String, String> {
    for spec in [
        FamilySpec::cubic(0, 1, 2),
        FamilySpec::cubic(0, 0, 0),
        FamilySpec::quartic(1),
    ] {
        let fast = brute_force(&spec, 100).map_err(|e| e.to_string())?;
        let slow = brute_force_reference(&spec, 100).map_err(|e| e.to_string())?;
        if fast != slow {
            return Err("accelerated and reference oracles disagree at bound 100".into());
        }
    }
    Ok("accelerated scan equals the reference triple loop at bound 100".into())
}

fn counterexample_check() -> Result<String, String> {
    let p = CubicParams::from_u64(0, 1, 2);
    let spec = FamilySpec::Cubic(p.clone());
    let a = Triple::from_u64(1, 81, 17);
    let b = Triple::from_u64(7, 81, 2);
    if !spec.is_solution(&a) || !spec.is_solution(&b) {
        return Err("expected solutions fail the residual".into());
    }
    let nodes = generate(&spec, &EnumBound::max_entry_u64(100));
    let set: BTreeSet<&Triple> = nodes.iter().map(|n| &n.triple).collect();
    if !set.contains(&a) || !set.contains(&b) {
        return Err("expected solutions missing from the tree".into());
    }
    if a.sorted() == b.sorted() {
        return Err("sorted multisets unexpectedly coincide".into());
    }
    Ok(format!(
        "{a} and {b} both appear, share maximum 81, and differ as multisets"
    ))
}

fn squares_check() -> Result<String, String> {
    // Every (2,2,2) solution is a squared Markov solution, and square_lift
    // maps every small Markov solution onto one.
    let squares = FamilySpec::cubic(2, 2, 2);
    let markov = FamilySpec::cubic(0, 0, 0);
    let markov_params = CubicParams::from_u64(0, 0, 0);
    for t in brute_force(&squares, 2000).map_err(|e| e.to_string())? {
        let mut root = Vec::new();
        for e in t.entries() {
            match quartic::perfect_sqrt(e) {
                Some(r) => root.push(r),
                None => return Err(format!("(2,2,2) solution {t} has non-square entry {e}")),
            }
        }
        let root = Triple::new(root[0].clone(), root[1].clone(), root[2].clone())
            .map_err(|e| e.to_string())?;
        if !cubic::is_solution(&markov_params, &root) {
            return Err(format!("square root {root} of {t} is not a Markov solution"));
        }
    }
    let markov_solutions = brute_force(&markov, 100).map_err(|e| e.to_string())?;
    for t in &markov_solutions {
        cubic::square_lift(t).map_err(|e| e.to_string())?;
    }
    // Lemma-style check for the (2,k,2) specializations.
    for k in 0..=2 {
        let spec = FamilySpec::Cubic(
            CubicParams::new(2.into(), k.into(), 2.into()).map_err(|e| e.to_string())?,
        );
        for t in brute_force(&spec, 1000).map_err(|e| e.to_string())? {
            if quartic::perfect_sqrt(t.b()).is_none() || quartic::perfect_sqrt(t.c()).is_none() {
                return Err(format!("(2,{k},2) solution {t} has non-square tail entries"));
            }
        }
    }
    Ok(format!(
        "all (2,2,2) solutions to 2000 are squared Markov solutions; square_lift verified on {} Markov solutions; (2,k,2) tails are squares for k <= 2",
        markov_solutions.len()
    ))
}

fn witness_check() -> Result<String, String> {
    for (k1, k2, k3) in [(0, 1, 2), (1, 1, 1)] {
        let p = CubicParams::from_u64(k1, k2, k3);
        let outcomes = max_number_witnesses(&p, 50, 500).map_err(|e| e.to_string())?;
        for (v, o) in outcomes {
            if matches!(o, WitnessOutcome::Inconclusive) {
                return Err(format!(
                    "no solution with maximum {v} found below the witness cap for ({k1},{k2},{k3})"
                ));
            }
        }
    }
    Ok("every value in a solution below 50 occurs as some solution's maximum (cap 500)".into())
}

fn eleven_check() -> Result<String, String> {
    let spec = FamilySpec::quartic(1);
    let solutions = brute_force(&spec, 300).map_err(|e| e.to_string())?;
    let eleven = BigInt::from(11);
    let containing: Vec<&Triple> = solutions
        .iter()
        .filter(|t| t.entries().into_iter().any(|e| e == &eleven))
        .collect();
    if containing.is_empty() {
        return Err("no solution containing 11 found".into());
    }
    for t in &containing {
        if *t.max_entry() == eleven {
            return Err(format!("{t} has 11 as its maximum"));
        }
    }
    Ok(format!(
        "11 occurs in {} solutions below 300 and is never the maximum",
        containing.len()
    ))
}

// ---------------------------------------------------------------------------
// Pattern <-> tree checks
// ---------------------------------------------------------------------------

fn audit_theorem42(report: &mut AuditReport) {
    let cases: Vec<(&str, Vec<i64>)> = vec![
        ("t1r1", vec![]),
        ("t1r2", vec![1]),
        ("t1r2", vec![3]),
        ("t1r3", vec![1, 2]),
        ("t1r4", vec![0, 1, 2]),
        ("t1r4", vec![1, 1, 1]),
        ("t1r5", vec![]),
        ("t1r6", vec![0]),
        ("t1r6", vec![2]),
    ];
    for (name, params) in cases {
        let params: Vec<BigInt> = params.into_iter().map(BigInt::from).collect();
        let label = format!(
            "pattern-vs-tree[{name}({})]",
            params
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        );
        let result = registry_entry(name, &params)
            .map_err(|e| e.to_string())
            .and_then(|entry| {
                let binding = entry.equation.as_ref().expect("equation rows have bindings");
                specialization_check(&entry.seed, binding, 4)
            });
        report.push(label, result);
    }
}

/// Rank-3 rows reduced by freezing one direction (substituting 1 for its
/// variable) against the corresponding rank-2 rows.
const FROZEN_PAIRS: [(&str, usize, &str, usize); 5] = [
    ("t1r1", 2, "t2r1", 0),
    ("t1r2", 1, "t2r2", 1),
    ("t1r3", 1, "t2r3", 2),
    ("t1r5", 2, "t2r4", 0),
    ("t1r6", 2, "t2r5", 1),
];

fn audit_frozen_direction(report: &mut AuditReport) {
    for (r3name, frozen, r2name, arity) in FROZEN_PAIRS {
        let params: Vec<BigInt> = (0..arity).map(|i| BigInt::from(i as i64 + 1)).collect();
        let label = format!("frozen-direction[{r3name}->{r2name}]");
        let result = (|| {
            let r3 = registry_entry(r3name, &params).map_err(|e| e.to_string())?;
            let r2 = registry_entry(r2name, &params).map_err(|e| e.to_string())?;
            frozen_cross_check(&r3.seed, frozen, &r2.seed, 6)
        })();
        report.push(label, result);
    }
}

fn frozen_cross_check(
    r3: &Seed,
    frozen: usize,
    r2: &Seed,
    depth: usize,
) -> Result<String, String> {
    let keep: Vec<usize> = (0..3).filter(|&i| i != frozen).collect();
    let mut checked = 0usize;
    for d in 0..=depth {
        for walk in walks_of_depth(2, d) {
            let mut s2 = r2.clone();
            let mut s3 = r3.clone();
            for &dir in &walk {
                s2 = mutate_seed(&s2, dir).map_err(|e| e.to_string())?;
                s3 = mutate_seed(&s3, keep[dir]).map_err(|e| e.to_string())?;
            }
            for j in 0..2 {
                if s3.cluster()[keep[j]].substitute_one(frozen) != s2.cluster()[j] {
                    return Err(format!(
                        "walk {walk:?}: frozen rank-3 variable {} does not match the rank-2 variable {}",
                        keep[j] + 1,
                        j + 1
                    ));
                }
            }
            checked += 1;
        }
    }
    Ok(format!(
        "rank-3 pattern with x{}=1 matches the rank-2 pattern on {} walks to depth {}",
        frozen + 1,
        checked,
        depth
    ))
}

fn audit_a2(report: &mut AuditReport) {
    let result = (|| {
        let seed = registry_entry("a2", &[]).map_err(|e| e.to_string())?.seed;
        let orbit = enumerate_a2(&seed).map_err(|e| e.to_string())?;
        if orbit.len() != 10 {
            return Err(format!("orbit length {}", orbit.len()));
        }
        let vars = orbit.distinct_variables();
        if vars.len() != 5 {
            return Err(format!("{} distinct cluster variables", vars.len()));
        }
        let pairs = orbit.specialized_pairs().map_err(|e| e.to_string())?;
        let expected: BTreeSet<(BigInt, BigInt)> = [(1, 1), (1, 2), (2, 1), (2, 3), (3, 2)]
            .into_iter()
            .map(|(x, y)| (BigInt::from(x), BigInt::from(y)))
            .collect();
        if pairs != expected {
            return Err(format!("specialized pairs {pairs:?}"));
        }
        Ok("orbit closes after 10 seeds with 5 distinct variables; specialized pairs are (1,1),(1,2),(2,1),(2,3),(3,2)".to_string())
    })();
    report.push("a2-finiteness", result);
}

fn audit_symmetric_builder(report: &mut AuditReport) {
    let result = (|| {
        let e1 = build_symmetric_equation(&SymmetricPoly::sum_of_variables())
            .map_err(|e| e.to_string())?;
        let e5 = build_symmetric_equation(&SymmetricPoly::product_of_variables())
            .map_err(|e| e.to_string())?;
        if e1.cleared() != e5.cleared() {
            return Err("sum and product inputs produce different cleared forms".into());
        }
        let found = e1.solutions_in_box(100);
        let expected = vec![(1u64, 1u64), (1, 2), (2, 1), (2, 3), (3, 2)];
        if found != expected {
            return Err(format!("box scan found {found:?}"));
        }
        Ok("sum and product inputs clear to the same equation; box scan to 100 finds exactly the five pairs".to_string())
    })();
    report.push("symmetric-builder", result);
}

/// Convenience wrapper used by tests: run everything, fail loudly.
pub fn assert_full_audit_passes() {
    let report = run_audit(&AuditOptions::default());
    assert!(report.all_passed(), "{}", report.render());
}
