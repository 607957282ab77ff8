//! Classification of triples with Ricci-type curvature by the sign of `λ`
//! (`A² = λ·Id`), the flatness criterion for products, and the catalog of
//! all cases in a given dimension.

use serde::{Deserialize, Serialize};

use crate::curvature::{
    cross_block, cross_term, product_curvature, ricci_type_curvature, scalar_square, weyl_part,
    CrossTerm,
};
use crate::error::{Error, Result};
use crate::linalg::{signature, vec_is_zero, Endo, Matrix, SympSpace};
use crate::models::{build_model, ModelParams};
use crate::scalar::{QuadExt, Rational};
use crate::triple::{
    algebra_diagnostics, curvature_of_triple, kernel_ideal, validate_triple, SymmetricTriple,
    TripleReport,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LambdaSign {
    Positive,
    Negative,
    Zero,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Structure {
    Semisimple,
    Solvable,
    Mixed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RadicalClass {
    None,
    Abelian,
    TwoStep,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub lambda: Rational,
    pub lambda_sign: LambdaSign,
    pub rank_a: usize,
    /// `λ > 0`: `(n, n)`; `λ < 0`: Hermitian form; `λ = 0`: Ricci form on
    /// `𝔭/Ker A`.
    pub signature: (usize, usize),
    pub model_name: String,
    pub structure: Structure,
    pub radical_class: RadicalClass,
    pub compact: bool,
    pub dim_k: usize,
    pub dim_g: usize,
    pub derived_series_dims: Vec<usize>,
    pub killing_signature: (usize, usize),
    /// `λ = 0`: lower central series of `{C ∈ 𝔨 : CA = 0} ⊕ Ker A`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal_lower_central_dims: Option<Vec<usize>>,
    /// `λ = 0`: Killing signature of the quotient by that ideal.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub levi_killing_signature: Option<(usize, usize)>,
}

/// `λ` with `A² = λ·Id`.
pub fn compute_lambda(space: &SympSpace, a: &Endo) -> Result<Rational> {
    if !space.is_inf_symplectic(a)? {
        return Err(Error::NotInfSymplectic);
    }
    scalar_square(a).ok_or(Error::NonScalarSquare)
}

/// Signature `(p, q)` of the Hermitian form `Ω(·, J·) + iΩ` for `λ < 0`,
/// with `J = A/b`, `b = −√|λ|`. Runs over `ℚ(√|λ|)` when `|λ|` is not a
/// rational square.
pub fn hermitian_signature(
    space: &SympSpace,
    a: &Endo,
    lambda: &Rational,
) -> Result<(usize, usize)> {
    if !lambda.is_negative() {
        return Err(Error::InvalidParams(
            "hermitian signature needs lambda < 0".into(),
        ));
    }
    let lift = |x: &Rational| QuadExt::from_rational(x.clone());
    let b = -QuadExt::sqrt_of(&lambda.abs())?;
    let j = a.map(lift).scale(&b.try_inv()?);
    let form: Matrix<QuadExt> = space.omega().map(lift).mul(&j);
    if !form.is_symmetric() {
        return Err(Error::NotRicciType);
    }
    let (p2, q2) = signature(&form);
    Ok((p2 / 2, q2 / 2))
}

pub fn sl_name(n: usize) -> String {
    format!("SL({},R)/GL({n},R)", n + 1)
}

/// `SU(p+1, q)/U(p, q)`, dropping zero entries.
pub fn su_name(p: usize, q: usize) -> String {
    let g = if q == 0 {
        format!("SU({})", p + 1)
    } else {
        format!("SU({},{q})", p + 1)
    };
    let k = match (p, q) {
        (p, 0) => format!("U({p})"),
        (0, q) => format!("U({q})"),
        (p, q) => format!("U({p},{q})"),
    };
    format!("{g}/{k}")
}

pub fn nilpotent_name(n: usize, rank: usize, p: usize, q: usize) -> String {
    match rank {
        0 => format!("R^{} (flat)", 2 * n),
        1 => format!("lambda=0, rank 1, p={p}"),
        _ => format!(
            "lambda=0, rank {rank}, p={p}, Levi factor so({p},{})",
            q + 1
        ),
    }
}

pub fn classify_triple(t: &SymmetricTriple) -> Result<ClassificationReport> {
    let report = validate_triple(t);
    if !report.is_valid() {
        return Err(Error::InvalidTriple(report.failures.join("; ")));
    }
    let r = curvature_of_triple(t)?;
    let dec = weyl_part(&r)?;
    if !dec.is_ricci_type {
        return Err(Error::NotRicciType);
    }
    let space = t.space();
    let a = &dec.ricci_data.a;
    let lambda = compute_lambda(space, a)?;
    let rank_a = a.rank();
    let n = t.n();
    let g = t.algebra()?;

    let lambda_sign = match lambda.signum() {
        1 => LambdaSign::Positive,
        -1 => LambdaSign::Negative,
        _ => LambdaSign::Zero,
    };
    let (signature, model_name, ideal) = match lambda_sign {
        LambdaSign::Positive => ((n, n), sl_name(n), None),
        LambdaSign::Negative => {
            let (p, q) = hermitian_signature(space, a, &lambda)?;
            ((p, q), su_name(p, q), None)
        }
        LambdaSign::Zero => {
            let (p, q) = dec.ricci_data.r.signature()?;
            (
                (p, q),
                nilpotent_name(n, rank_a, p, q),
                Some(kernel_ideal(t, a)),
            )
        }
    };
    let diag = algebra_diagnostics(&g, ideal.as_deref())?;
    let structure = if diag.semisimple {
        Structure::Semisimple
    } else if diag.solvable {
        Structure::Solvable
    } else {
        Structure::Mixed
    };
    let radical_class = match &diag.ideal {
        None => RadicalClass::None,
        Some(i) => match i.lower_central_dims.as_slice() {
            [_, 0] | [0] => RadicalClass::Abelian,
            [_, _, 0] => RadicalClass::TwoStep,
            other => {
                return Err(Error::InvalidTriple(format!(
                    "ideal C·A = 0 ⊕ Ker A has lower central series {other:?}"
                )))
            }
        },
    };
    Ok(ClassificationReport {
        lambda,
        lambda_sign,
        rank_a,
        signature,
        model_name,
        structure,
        radical_class,
        compact: lambda_sign == LambdaSign::Negative && signature.1 == 0,
        dim_k: t.dim_k(),
        dim_g: t.dim(),
        derived_series_dims: diag.derived_series_dims.clone(),
        killing_signature: diag.killing.signature,
        ideal_lower_central_dims: diag.ideal.as_ref().map(|i| i.lower_central_dims.clone()),
        levi_killing_signature: diag.ideal.as_ref().map(|i| i.quotient_killing.signature),
    })
}

/// One nonzero value `C(e_i, e_j) e_k` of a cross block.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub value: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductReport {
    pub n: usize,
    pub a1_zero: bool,
    pub a2_zero: bool,
    pub w_zero: bool,
    /// `W = 0` exactly when both factors are flat.
    pub theorem_holds: bool,
    /// `W(X₁, Y₁)Z₂` equals `−ω(X₁, Y₁)A₂Z₂/(n+1)`.
    pub cross_block_matches: bool,
    /// Nonzero entries `W(e_i, e_j)e_k` with `i < j` in the first factor and
    /// `k` in the second.
    pub cross_block: Vec<CrossEntry>,
}

pub fn product_flatness_check(
    s1: &SympSpace,
    a1: &Endo,
    s2: &SympSpace,
    a2: &Endo,
) -> Result<ProductReport> {
    let r1 = ricci_type_curvature(s1, a1)?;
    let r2 = ricci_type_curvature(s2, a2)?;
    let product = product_curvature(&r1, &r2);
    let w = weyl_part(&product)?.w;
    let d1 = s1.dim();
    let block = cross_block(&w, d1);
    let expected: CrossTerm = cross_term(s1, s2, a2)?;
    let a1_zero = a1.is_zero();
    let a2_zero = a2.is_zero();
    let w_zero = w.is_zero();
    let mut entries = Vec::new();
    for i in 0..d1 {
        for j in i + 1..d1 {
            for k in 0..s2.dim() {
                let v = block.get(i, j, k);
                if !vec_is_zero(v) {
                    entries.push(CrossEntry {
                        i,
                        j,
                        k,
                        value: v.to_vec(),
                    });
                }
            }
        }
    }
    Ok(ProductReport {
        n: (d1 + s2.dim()) / 2,
        a1_zero,
        a2_zero,
        w_zero,
        theorem_holds: w_zero == (a1_zero && a2_zero),
        cross_block_matches: block == expected,
        cross_block: entries,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub params: ModelParams,
    pub classification: ClassificationReport,
    pub validation: TripleReport,
    pub triple: SymmetricTriple,
}

/// All cases in dimension `dim = 2n`: the `λ > 0` model, `λ < 0` for
/// `p = 0..n`, and `λ = 0` for every rank `1..n` and `p = 0..rank`.
pub fn catalog(dim: usize) -> Result<Vec<CatalogEntry>> {
    if dim < 4 || !dim.is_multiple_of(2) {
        return Err(Error::InvalidParams(format!(
            "catalog dimension {dim} must be even and at least 4"
        )));
    }
    let n = dim / 2;
    let mut params = vec![ModelParams::sl(n)];
    for p in 0..=n {
        params.push(ModelParams::su(n, p, n - p));
    }
    for rank in 1..=n {
        for p in 0..=rank {
            params.push(ModelParams::nilpotent(n, rank, p, rank - p));
        }
    }
    params
        .into_iter()
        .map(|p| {
            let model = build_model(&p)?;
            let triple = model.triple().clone();
            Ok(CatalogEntry {
                classification: classify_triple(&triple)?,
                validation: validate_triple(&triple),
                params: p.normalized()?,
                triple,
            })
        })
        .collect()
}

pub fn dim4_catalog() -> Result<Vec<CatalogEntry>> {
    catalog(4)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::QMatrix;
    use crate::models::{build_negative_model, build_positive_model, build_zero_model};
    use crate::scalar::q;

    #[test]
    fn lambda_examples() {
        let s = SympSpace::standard(2).unwrap();
        assert_eq!(compute_lambda(&s, &QMatrix::zeros(4, 4)).unwrap(), q(0, 1));
        let m = build_positive_model(2, &q(1, 1)).unwrap();
        assert_eq!(
            compute_lambda(m.triple.space(), &m.ricci_endo).unwrap(),
            q(9, 1)
        );
        let m = build_negative_model(2, 2, 0, &q(1, 1)).unwrap();
        assert_eq!(
            compute_lambda(m.triple.space(), &m.ricci_endo).unwrap(),
            q(-36, 1)
        );
        let a = s
            .omega_inv()
            .mul(&QMatrix::diagonal(&[q(1, 1), q(2, 1), q(1, 1), q(1, 1)]));
        assert_eq!(compute_lambda(&s, &a), Err(Error::NonScalarSquare));
        assert_eq!(
            compute_lambda(&s, &QMatrix::identity(4)),
            Err(Error::NotInfSymplectic)
        );
    }

    #[test]
    fn names() {
        assert_eq!(sl_name(2), "SL(3,R)/GL(2,R)");
        assert_eq!(su_name(2, 0), "SU(3)/U(2)");
        assert_eq!(su_name(0, 2), "SU(1,2)/U(2)");
        assert_eq!(su_name(1, 1), "SU(2,1)/U(1,1)");
    }

    #[test]
    fn classify_models() {
        let m = build_positive_model(2, &q(1, 1)).unwrap();
        let c = classify_triple(&m.triple).unwrap();
        assert_eq!(c.model_name, "SL(3,R)/GL(2,R)");
        assert_eq!(c.structure, Structure::Semisimple);
        assert_eq!(c.signature, (2, 2));

        let m = build_negative_model(2, 2, 0, &q(1, 1)).unwrap();
        let c = classify_triple(&m.triple).unwrap();
        assert_eq!(c.model_name, "SU(3)/U(2)");
        assert!(c.compact);

        let m = build_negative_model(2, 1, 1, &q(1, 1)).unwrap();
        let c = classify_triple(&m.triple).unwrap();
        assert_eq!(c.model_name, "SU(2,1)/U(1,1)");
        assert!(!c.compact);

        let m = build_zero_model(2, 1, 1, 0).unwrap();
        let c = classify_triple(&m.triple).unwrap();
        assert_eq!(c.structure, Structure::Solvable);
        assert_eq!(c.signature, (1, 0));
        assert_ne!(c.radical_class, RadicalClass::None);
    }

    #[test]
    fn non_square_lambda() {
        // A = diag(M, −Mᵀ) on the standard space of dimension 4
        for (m01, m10, lambda) in [(2, 1, 2), (-2, 1, -2)] {
            let s = SympSpace::standard(2).unwrap();
            let m = QMatrix::from_rows(vec![vec![q(0, 1), q(m01, 1)], vec![q(m10, 1), q(0, 1)]])
                .unwrap();
            let a = QMatrix::block_diag(&m, &m.transpose().neg());
            assert_eq!(compute_lambda(&s, &a).unwrap(), q(lambda, 1));
            let t = crate::triple::build_triple_from_A(&s, &a).unwrap();
            let c = classify_triple(&t).unwrap();
            assert_eq!(c.lambda, q(lambda, 1));
            if lambda < 0 {
                assert_eq!(c.signature.0 + c.signature.1, 2);
            }
        }
    }

    #[test]
    fn product_check() {
        let s = SympSpace::standard(1).unwrap();
        let z = QMatrix::zeros(2, 2);
        let r = product_flatness_check(&s, &z, &s, &z).unwrap();
        assert!(r.w_zero && r.theorem_holds && r.cross_block_matches);
        let a2 = QMatrix::from_rows(vec![vec![q(1, 1), q(0, 1)], vec![q(0, 1), q(-1, 1)]]).unwrap();
        let r = product_flatness_check(&s, &z, &s, &a2).unwrap();
        assert!(!r.w_zero && r.theorem_holds && r.cross_block_matches);
        assert!(!r.cross_block.is_empty());
    }

    #[test]
    fn dim4() {
        let cat = dim4_catalog().unwrap();
        assert_eq!(cat.len(), 9);
        assert!(cat.iter().all(|e| e.validation.is_valid()));
        let compact: Vec<_> = cat.iter().filter(|e| e.classification.compact).collect();
        assert_eq!(compact.len(), 1);
        assert_eq!(compact[0].classification.model_name, "SU(3)/U(2)");
        assert!(catalog(3).is_err());
    }
}
