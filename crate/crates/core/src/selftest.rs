//! The nine acceptance checks as library functions, shared by the `selftest`
//! subcommand and the acceptance test target.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::classify::{dim4_catalog, product_flatness_check, LambdaSign};
use crate::curvature::{ricci, ricci_type_curvature, weyl_part};
use crate::error::Error;
use crate::linalg::{Endo, QMatrix, SympSpace};
use crate::models::{
    build_negative_model, build_positive_model, build_zero_model, complex_structure,
    verify_embedding,
};
use crate::sampling::{
    curvature_space_basis, random_admissible, random_curvature, random_non_scalar,
    random_scalar_square,
};
use crate::scalar::Rational;
use crate::triple::{build_triple_from_A, ricci_data_of_triple, validate_triple};

/// Samples per dimension for the trace and decomposition checks.
pub const ADMISSIBLE_SAMPLES: usize = 50;
/// Arbitrary curvature tensors checked for `ricci(W) = 0`.
pub const ARBITRARY_CURVATURES: usize = 20;
/// Scalar-square and non-scalar samples in the commutation check.
pub const SCALAR_SAMPLES: usize = 30;
pub const NON_SCALAR_SAMPLES: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionResult {
    pub id: u8,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelftestReport {
    pub passed: usize,
    pub failed: usize,
    pub criteria: Vec<CriterionResult>,
}

type Check = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: crate::Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

pub const CRITERIA: [(u8, &str); 9] = [
    (1, "trace consistency"),
    (2, "decomposition"),
    (3, "product flatness"),
    (4, "scalar square"),
    (5, "model validity"),
    (6, "canonical normalizations"),
    (7, "lambda=0 structure"),
    (8, "dimension 4 catalog"),
    (9, "determinism"),
];

pub fn run_criterion(id: u8) -> CriterionResult {
    let outcome = match id {
        1 => trace_consistency(),
        2 => decomposition(),
        3 => product_flatness(),
        4 => scalar_square_commutes(),
        5 => model_validity(),
        6 => normalizations(),
        7 => zero_structure(),
        8 => catalog_entries(),
        9 => determinism(),
        _ => Err(format!("no criterion {id}")),
    };
    let name = CRITERIA
        .iter()
        .find(|c| c.0 == id)
        .map_or("unknown", |c| c.1)
        .to_string();
    let (passed, detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    CriterionResult {
        id,
        name,
        passed,
        detail,
    }
}

pub fn run_all() -> SelftestReport {
    let criteria: Vec<CriterionResult> = CRITERIA.iter().map(|c| run_criterion(c.0)).collect();
    let passed = criteria.iter().filter(|c| c.passed).count();
    SelftestReport {
        passed,
        failed: criteria.len() - passed,
        criteria,
    }
}

/// Random admissible `A` at `n = 2` and `n = 3`, fixed seeds.
pub fn admissible_samples() -> Vec<(SympSpace, Endo)> {
    let mut out = Vec::new();
    for n in [2usize, 3] {
        let space = SympSpace::standard(n).expect("n >= 1");
        let mut rng = ChaCha8Rng::seed_from_u64(100 + n as u64);
        for _ in 0..ADMISSIBLE_SAMPLES {
            out.push((space.clone(), random_admissible(&space, &mut rng, 3)));
        }
    }
    out
}

fn trace_consistency() -> Check {
    let samples = admissible_samples();
    for (k, (space, a)) in samples.iter().enumerate() {
        let r = lib(ricci_type_curvature(space, a))?;
        ensure(ricci(&r).matrix() == &space.form_of(a), || {
            format!("sample {k}: ricci(E(A)) differs from Omega(., A.)")
        })?;
    }
    Ok(format!("{} samples at n = 2, 3", samples.len()))
}

fn decomposition() -> Check {
    let samples = admissible_samples();
    for (k, (space, a)) in samples.iter().enumerate() {
        let r = lib(ricci_type_curvature(space, a))?;
        let dec = lib(weyl_part(&r))?;
        ensure(dec.w.is_zero() && dec.is_ricci_type, || {
            format!("sample {k}: W(E(A)) is nonzero")
        })?;
    }
    let mut arbitrary = 0;
    for (n, count) in [
        (2usize, ARBITRARY_CURVATURES),
        (3, ARBITRARY_CURVATURES / 2),
    ] {
        let space = SympSpace::standard(n).expect("n >= 1");
        let basis = curvature_space_basis(&space);
        let mut rng = ChaCha8Rng::seed_from_u64(200 + n as u64);
        for k in 0..count {
            let r = random_curvature(&basis, &mut rng);
            let dec = lib(weyl_part(&r))?;
            ensure(!dec.is_ricci_type, || {
                format!("n = {n}, tensor {k} is of Ricci type")
            })?;
            ensure(ricci(&dec.w).matrix().is_zero(), || {
                format!("n = {n}, tensor {k}: ricci(W) is nonzero")
            })?;
            arbitrary += 1;
        }
    }
    Ok(format!(
        "W = 0 on {} Ricci-type samples, ricci(W) = 0 on {arbitrary} arbitrary tensors",
        samples.len()
    ))
}

/// The 27 trace-free 2×2 matrices with entries in `{−1, 0, 1}`.
pub fn small_sp2() -> Vec<Endo> {
    let mut out = Vec::with_capacity(27);
    for a in -1..=1i64 {
        for b in -1..=1i64 {
            for c in -1..=1i64 {
                out.push(
                    QMatrix::from_rows(vec![
                        vec![Rational::from_int(a), Rational::from_int(b)],
                        vec![Rational::from_int(c), Rational::from_int(-a)],
                    ])
                    .expect("2x2"),
                );
            }
        }
    }
    out
}

fn product_flatness() -> Check {
    let s = SympSpace::standard(1).expect("n = 1");
    let all = small_sp2();
    let mut flat = 0;
    for a1 in &all {
        for a2 in &all {
            let report = lib(product_flatness_check(&s, a1, &s, a2))?;
            ensure(report.theorem_holds, || {
                format!("W = 0 mismatch for A1 = {a1:?}, A2 = {a2:?}")
            })?;
            ensure(report.cross_block_matches, || {
                format!("cross block mismatch for A1 = {a1:?}, A2 = {a2:?}")
            })?;
            if report.w_zero {
                flat += 1;
            }
        }
    }
    Ok(format!(
        "{} pairs, {flat} with W = 0",
        all.len() * all.len()
    ))
}

fn commutes_with_values(a: &Endo, r: &crate::curvature::CurvatureTensor) -> bool {
    r.pair_values().all(|(_, v)| v.commutator(a).is_zero())
}

fn scalar_square_commutes() -> Check {
    let space = SympSpace::standard(2).expect("n = 2");
    let mut rng = ChaCha8Rng::seed_from_u64(400);
    for k in 0..SCALAR_SAMPLES {
        let a = random_scalar_square(2, &mut rng);
        let r = lib(ricci_type_curvature(&space, &a))?;
        ensure(commutes_with_values(&a, &r), || {
            format!("scalar sample {k}: some E(A)(e_i,e_j) does not commute with A")
        })?;
        ensure(build_triple_from_A(&space, &a).is_ok(), || {
            format!("scalar sample {k}: triple construction rejected")
        })?;
    }
    for k in 0..NON_SCALAR_SAMPLES {
        let a = random_non_scalar(&space, &mut rng);
        let r = lib(ricci_type_curvature(&space, &a))?;
        ensure(!commutes_with_values(&a, &r), || {
            format!("non-scalar sample {k}: every E(A)(e_i,e_j) commutes with A")
        })?;
        ensure(
            matches!(build_triple_from_A(&space, &a), Err(Error::NonScalarSquare)),
            || format!("non-scalar sample {k}: triple construction not rejected"),
        )?;
    }
    Ok(format!(
        "{SCALAR_SAMPLES} scalar-square samples accepted, {NON_SCALAR_SAMPLES} non-scalar rejected"
    ))
}

fn model_validity() -> Check {
    let one = Rational::one();
    let mut triples = 0;
    for n in [2usize, 3] {
        let target = n * n + 2 * n;
        let pos = lib(build_positive_model(n, &one))?;
        let report = validate_triple(&pos.triple);
        ensure(report.is_valid(), || {
            format!("sl n = {n}: {:?}", report.failures)
        })?;
        let emb = verify_embedding(&pos.embedding, &lib(pos.triple.algebra())?);
        ensure(emb.is_valid() && emb.image_dim == target, || {
            format!("sl n = {n}: embedding {emb:?}")
        })?;
        triples += 1;
        for p in 0..=n {
            let neg = lib(build_negative_model(n, p, n - p, &one))?;
            let report = validate_triple(&neg.triple);
            ensure(report.is_valid(), || {
                format!("su n = {n}, p = {p}: {:?}", report.failures)
            })?;
            let emb = verify_embedding(&neg.embedding, &lib(neg.triple.algebra())?);
            ensure(emb.is_valid() && emb.image_dim == target, || {
                format!("su n = {n}, p = {p}: embedding {emb:?}")
            })?;
            triples += 1;
        }
        for rank in 1..=n {
            for p in 0..=rank {
                let zero = lib(build_zero_model(n, rank, p, rank - p))?;
                let report = validate_triple(&zero.triple);
                ensure(report.is_valid(), || {
                    format!(
                        "nilpotent n = {n}, rank = {rank}, p = {p}: {:?}",
                        report.failures
                    )
                })?;
                triples += 1;
            }
        }
    }
    Ok(format!(
        "{triples} triples valid, embeddings bracket-preserving with image dim n^2+2n"
    ))
}

fn normalizations() -> Check {
    let one = Rational::one();
    for n in [2usize, 3, 4] {
        let m = Rational::from_int(n as i64 + 1);
        let pos = lib(build_positive_model(n, &one))?;
        let data = lib(ricci_data_of_triple(&pos.triple))?;
        let mut diag = vec![m.clone(); n];
        diag.extend(vec![-m.clone(); n]);
        ensure(data.a == QMatrix::diagonal(&diag), || {
            format!("sl n = {n}: A = {:?}", data.a)
        })?;
        ensure(data.lambda.as_ref() == Some(&(&m * &m)), || {
            format!("sl n = {n}: lambda = {:?}", data.lambda)
        })?;
        for p in 0..=n {
            let neg = lib(build_negative_model(n, p, n - p, &one))?;
            let data = lib(ricci_data_of_triple(&neg.triple))?;
            let b = Rational::from_int(-2) * &m;
            ensure(data.a == complex_structure(n).scale(&b), || {
                format!("su n = {n}, p = {p}: A = {:?}", data.a)
            })?;
            ensure(
                data.lambda.as_ref() == Some(&(Rational::from_int(-4) * &m * &m)),
                || format!("su n = {n}, p = {p}: lambda = {:?}", data.lambda),
            )?;
        }
    }
    Ok("A and lambda exact for n = 2, 3, 4".into())
}

/// Killing-form signature of `𝔰𝔬(p, q)` for `p + q ≥ 3`: positive on the
/// `pq` noncompact directions, negative on `𝔰𝔬(p) ⊕ 𝔰𝔬(q)`.
pub fn so_killing_signature(p: usize, q: usize) -> (usize, usize) {
    (
        p * q,
        p * p.saturating_sub(1) / 2 + q * q.saturating_sub(1) / 2,
    )
}

fn zero_structure() -> Check {
    let mut cases = 0;
    for n in 2..=3usize {
        for rank in 1..=n {
            for p in 0..=rank {
                let q = rank - p;
                let tag = format!("n = {n}, rank = {rank}, p = {p}");
                let model = lib(build_zero_model(n, rank, p, q))?;
                let g = lib(model.triple.algebra())?;
                let rad = &model.radical_basis;
                ensure(g.is_ideal(rad), || {
                    format!("{tag}: radical is not an ideal")
                })?;
                let lower = g.lower_central_series_of(rad);
                ensure(lower.len() <= 3 && lower.last() == Some(&0), || {
                    format!("{tag}: [r,[r,r]] != 0, lower central series {lower:?}")
                })?;
                let abelian = lower.get(1).is_none_or(|&d| d == 0);
                ensure(abelian == (rank == n), || {
                    format!("{tag}: [r,r] = 0 is {abelian}, series {lower:?}")
                })?;
                let derived = g.derived_series();
                let solvable = derived.last() == Some(&0);
                ensure(solvable == (rank == 1), || {
                    format!("{tag}: solvable is {solvable}, derived series {derived:?}")
                })?;
                let levi = verify_embedding(&model.levi_map, &g);
                ensure(levi.is_valid(), || format!("{tag}: Levi map {levi:?}"))?;
                if rank > 1 {
                    let quotient = lib(g.quotient(rad))?.algebra;
                    let m = rank + 1;
                    ensure(quotient.dim() == m * (m - 1) / 2, || {
                        format!("{tag}: quotient dim {}", quotient.dim())
                    })?;
                    let summary = crate::lie::FormSummary::of(&quotient.killing_form());
                    ensure(summary.is_nondegenerate(quotient.dim()), || {
                        format!("{tag}: quotient Killing form degenerate")
                    })?;
                    let expected = so_killing_signature(p, q + 1);
                    ensure(summary.signature == expected, || {
                        format!(
                            "{tag}: Killing signature {:?}, expected {expected:?}",
                            summary.signature
                        )
                    })?;
                }
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} (n, rank, p) cases with 2 <= n <= 3"))
}

/// Model names of the dimension 4 catalog, in catalog order.
pub const DIM4_NAMES: [&str; 9] = [
    "SL(3,R)/GL(2,R)",
    "SU(1,2)/U(2)",
    "SU(2,1)/U(1,1)",
    "SU(3)/U(2)",
    "lambda=0, rank 1, p=0",
    "lambda=0, rank 1, p=1",
    "lambda=0, rank 2, p=0, Levi factor so(0,3)",
    "lambda=0, rank 2, p=1, Levi factor so(1,2)",
    "lambda=0, rank 2, p=2, Levi factor so(2,1)",
];

fn catalog_entries() -> Check {
    let entries = lib(dim4_catalog())?;
    ensure(entries.len() == 9, || format!("{} entries", entries.len()))?;
    for (e, name) in entries.iter().zip(DIM4_NAMES) {
        ensure(e.validation.is_valid(), || {
            format!("{name}: {:?}", e.validation.failures)
        })?;
        ensure(e.classification.model_name == name, || {
            format!("expected {name}, got {}", e.classification.model_name)
        })?;
    }
    let signs: Vec<LambdaSign> = entries
        .iter()
        .map(|e| e.classification.lambda_sign)
        .collect();
    ensure(
        signs[0] == LambdaSign::Positive
            && signs[1..4].iter().all(|&s| s == LambdaSign::Negative)
            && signs[4..].iter().all(|&s| s == LambdaSign::Zero),
        || format!("lambda signs {signs:?}"),
    )?;
    let compact: Vec<&str> = entries
        .iter()
        .filter(|e| e.classification.compact)
        .map(|e| e.classification.model_name.as_str())
        .collect();
    ensure(compact == ["SU(3)/U(2)"], || {
        format!("compact entries {compact:?}")
    })?;
    Ok("9 validated entries, SU(3)/U(2) the only compact one".into())
}

/// Input fed to a determinism run on standard input.
#[derive(Clone, Copy, Debug)]
pub enum RunInput {
    None,
    /// Output of the previous run.
    Previous,
    /// `E(A)` at `n = 2` for a fixed admissible `A`.
    Curvature,
    /// A pair of small trace-free `A₁, A₂` on `ℝ² ⊕ ℝ²`.
    Product,
}

/// Command lines whose output must be byte-identical across runs.
pub const DETERMINISM_RUNS: [(&[&str], RunInput); 9] = [
    (
        &["build", "--family", "sl", "--n", "2", "--s", "1"],
        RunInput::None,
    ),
    (&["validate", "-"], RunInput::Previous),
    (
        &[
            "build", "--family", "su", "--n", "2", "--p", "1", "--s", "1/2",
        ],
        RunInput::None,
    ),
    (&["classify", "-"], RunInput::Previous),
    (
        &[
            "build",
            "--family",
            "nilpotent",
            "--n",
            "3",
            "--rank",
            "2",
            "--p",
            "1",
        ],
        RunInput::None,
    ),
    (&["classify", "-"], RunInput::Previous),
    (&["decompose", "-"], RunInput::Curvature),
    (&["product-check", "-"], RunInput::Product),
    (&["catalog", "--dim", "4"], RunInput::None),
];

/// Fixed curvature input for the determinism runs.
pub fn sample_curvature_json() -> String {
    let space = SympSpace::standard(2).expect("n = 2");
    let mut rng = ChaCha8Rng::seed_from_u64(900);
    let a = random_admissible(&space, &mut rng, 2);
    let r = ricci_type_curvature(&space, &a).expect("admissible");
    crate::json::to_json_string(&r)
}

/// Fixed product-check input for the determinism runs.
pub fn sample_product_json() -> String {
    let all = small_sp2();
    let input = crate::cli::ProductInput {
        a1: all[5].clone(),
        a2: all[19].clone(),
        omega1: None,
        omega2: None,
    };
    crate::json::to_json_string(&input)
}

fn determinism() -> Check {
    let mut previous = String::new();
    for (args, input) in DETERMINISM_RUNS {
        let stdin = match input {
            RunInput::None => String::new(),
            RunInput::Previous => previous.clone(),
            RunInput::Curvature => sample_curvature_json(),
            RunInput::Product => sample_product_json(),
        };
        let mut outputs = Vec::new();
        for _ in 0..2 {
            let out = crate::cli::run_args(args.iter().copied(), stdin.as_bytes());
            ensure(out.code == 0, || {
                format!("{args:?} exited {}: {}", out.code, out.stderr)
            })?;
            outputs.push(out.stdout);
        }
        ensure(outputs[0] == outputs[1], || {
            format!("{args:?} output differs between runs")
        })?;
        previous = outputs.pop().expect("two runs");
    }
    Ok(format!(
        "{} command lines, each run twice",
        DETERMINISM_RUNS.len()
    ))
}
