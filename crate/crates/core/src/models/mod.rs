//! Explicit models for the three signs of `λ`, each with a matrix
//! realization of its transvection algebra.

mod embedding;
mod negative;
mod positive;
mod zero;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Endo;
use crate::scalar::Rational;
use crate::triple::SymmetricTriple;

pub use embedding::{realify, verify_embedding, Embedding, EmbeddingReport, TargetAlgebra};
pub use negative::{
    build_negative_model, complex_structure, hermitian, hermitian_signs, negative_closed_form,
    negative_involution, negative_omega, NegativeModel,
};
pub use positive::{
    build_positive_model, positive_closed_form, positive_involution, PositiveModel,
};
pub use zero::{
    build_zero_model, printed_table_report, zero_omega, BlockKind, PrintedTableReport, ZeroModel,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// `λ > 0`
    Sl,
    /// `λ < 0`
    Su,
    /// `λ = 0`
    Nilpotent,
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sl" => Ok(Family::Sl),
            "su" => Ok(Family::Su),
            "nilpotent" => Ok(Family::Nilpotent),
            other => Err(Error::InvalidParams(format!(
                "unknown family {other:?}, expected sl, su or nilpotent"
            ))),
        }
    }
}

/// Parameters selecting one model. `s` applies to `sl`/`su` (default 1),
/// `p`/`q` to `su` and `nilpotent`, `rank` to `nilpotent`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelParams {
    pub family: Family,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
}

impl ModelParams {
    pub fn sl(n: usize) -> Self {
        ModelParams {
            family: Family::Sl,
            n,
            s: None,
            p: None,
            q: None,
            rank: None,
        }
    }

    pub fn su(n: usize, p: usize, q: usize) -> Self {
        ModelParams {
            family: Family::Su,
            p: Some(p),
            q: Some(q),
            ..ModelParams::sl(n)
        }
    }

    pub fn nilpotent(n: usize, rank: usize, p: usize, q: usize) -> Self {
        ModelParams {
            family: Family::Nilpotent,
            rank: Some(rank),
            p: Some(p),
            q: Some(q),
            ..ModelParams::sl(n)
        }
    }

    pub fn with_s(mut self, s: Rational) -> Self {
        self.s = Some(s);
        self
    }

    pub fn s_or_default(&self) -> Rational {
        self.s.clone().unwrap_or_else(Rational::one)
    }

    /// Fills in `q = n − p` (or `rank − p`) and `p` likewise when only one of
    /// them is given, then checks ranges.
    pub fn normalized(&self) -> Result<ModelParams> {
        let mut out = self.clone();
        let total = match self.family {
            Family::Sl => {
                if self.p.is_some() || self.q.is_some() || self.rank.is_some() {
                    return Err(Error::InvalidParams("sl takes only n and s".into()));
                }
                None
            }
            Family::Su => {
                if self.rank.is_some() {
                    return Err(Error::InvalidParams("su does not take rank".into()));
                }
                Some(self.n)
            }
            Family::Nilpotent => {
                if self.s.is_some() {
                    return Err(Error::InvalidParams("nilpotent does not take s".into()));
                }
                Some(
                    self.rank
                        .ok_or_else(|| Error::InvalidParams("nilpotent needs rank".into()))?,
                )
            }
        };
        if let Some(total) = total {
            let (p, q) = match (self.p, self.q) {
                (Some(p), Some(q)) => (p, q),
                (Some(p), None) => (p, total.checked_sub(p).ok_or_else(|| bad_pq(p, total))?),
                (None, Some(q)) => (total.checked_sub(q).ok_or_else(|| bad_pq(q, total))?, q),
                (None, None) => (total, 0),
            };
            out.p = Some(p);
            out.q = Some(q);
        }
        if self.family != Family::Nilpotent && out.s.as_ref().is_some_and(Rational::is_zero) {
            return Err(Error::InvalidParams("s must be nonzero".into()));
        }
        Ok(out)
    }
}

fn bad_pq(x: usize, total: usize) -> Error {
    Error::InvalidParams(format!("signature entry {x} exceeds {total}"))
}

#[derive(Clone, Debug, PartialEq)]
pub enum Model {
    Positive(PositiveModel),
    Negative(NegativeModel),
    Zero(ZeroModel),
}

impl Model {
    pub fn triple(&self) -> &SymmetricTriple {
        match self {
            Model::Positive(m) => &m.triple,
            Model::Negative(m) => &m.triple,
            Model::Zero(m) => &m.triple,
        }
    }

    pub fn ricci_endo(&self) -> &Endo {
        match self {
            Model::Positive(m) => &m.ricci_endo,
            Model::Negative(m) => &m.ricci_endo,
            Model::Zero(m) => &m.ricci_endo,
        }
    }
}

pub fn build_model(params: &ModelParams) -> Result<Model> {
    let p = params.normalized()?;
    let s = p.s_or_default();
    match p.family {
        Family::Sl => Ok(Model::Positive(build_positive_model(p.n, &s)?)),
        Family::Su => Ok(Model::Negative(build_negative_model(
            p.n,
            p.p.unwrap_or_default(),
            p.q.unwrap_or_default(),
            &s,
        )?)),
        Family::Nilpotent => Ok(Model::Zero(build_zero_model(
            p.n,
            p.rank.unwrap_or_default(),
            p.p.unwrap_or_default(),
            p.q.unwrap_or_default(),
        )?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvature::{ricci, scalar_square, RicciData};
    use crate::linalg::{unit_vector, SympSpace};
    use crate::scalar::q;
    use crate::triple::{
        build_triple_from_A, curvature_of_triple, lie_diagnostics, validate_triple,
    };

    fn ricci_data(t: &SymmetricTriple) -> RicciData {
        RicciData::new(t.space(), ricci(&curvature_of_triple(t).unwrap())).unwrap()
    }

    #[test]
    fn positive_model_normalization() {
        let m = build_positive_model(2, &q(1, 1)).unwrap();
        assert_eq!(m.a, q(3, 1));
        assert!(validate_triple(&m.triple).is_valid());
        let rd = ricci_data(&m.triple);
        assert_eq!(rd.a, m.ricci_endo);
        assert_eq!(rd.lambda, Some(q(9, 1)));
        let g = m.triple.algebra().unwrap();
        let report = verify_embedding(&m.embedding, &g);
        assert!(report.is_valid(), "{report:?}");
        assert_eq!(report.pairs_checked, 28);
        assert_eq!(report.image_dim, 8);
    }

    #[test]
    fn positive_model_other_scale() {
        let m = build_positive_model(3, &q(2, 3)).unwrap();
        assert!(validate_triple(&m.triple).is_valid());
        let g = m.triple.algebra().unwrap();
        assert!(verify_embedding(&m.embedding, &g).is_valid());
        assert_eq!(ricci_data(&m.triple).lambda, Some(&m.a * &m.a));
    }

    #[test]
    fn positive_involution_flips_p() {
        let m = build_positive_model(2, &q(1, 1)).unwrap();
        let k = m.triple.dim_k();
        for (i, img) in m.embedding.images.iter().enumerate() {
            let expected = if i < k { img.clone() } else { img.neg() };
            assert_eq!(positive_involution(img), expected);
        }
    }

    #[test]
    fn perturbed_embedding_fails() {
        let m = build_positive_model(2, &q(1, 1)).unwrap();
        let g = m.triple.algebra().unwrap();
        let mut e = m.embedding.clone();
        e.images[0][(0, 1)] += q(1, 1);
        assert!(!verify_embedding(&e, &g).bracket_failures.is_empty());
    }

    #[test]
    fn positive_closed_form_matches() {
        for n in [2, 3] {
            let m = build_positive_model(n, &q(1, 1)).unwrap();
            let r = curvature_of_triple(&m.triple).unwrap();
            let d = 2 * n;
            for i in 0..d {
                for j in 0..d {
                    for k in 0..d {
                        let (x, y, z) = (unit_vector(d, i), unit_vector(d, j), unit_vector(d, k));
                        assert_eq!(r.apply_basis(i, j, k), positive_closed_form(n, &x, &y, &z));
                    }
                }
            }
        }
    }

    #[test]
    fn negative_model_normalization() {
        let m = build_negative_model(2, 2, 0, &q(1, 1)).unwrap();
        assert_eq!(m.b, q(-6, 1));
        assert!(validate_triple(&m.triple).is_valid());
        let rd = ricci_data(&m.triple);
        assert_eq!(rd.a, complex_structure(2).scale(&q(-6, 1)));
        assert_eq!(rd.lambda, Some(q(-36, 1)));
        let g = m.triple.algebra().unwrap();
        let report = verify_embedding(&m.embedding, &g);
        assert!(report.is_valid(), "{report:?}");
        assert_eq!(report.image_dim, 8);
    }

    #[test]
    fn negative_models_embed() {
        for (n, p) in [(2, 1), (2, 0), (3, 2), (3, 0)] {
            let m = build_negative_model(n, p, n - p, &q(1, 2)).unwrap();
            assert!(validate_triple(&m.triple).is_valid());
            assert_eq!(m.triple.dim_k(), n * n);
            let g = m.triple.algebra().unwrap();
            let report = verify_embedding(&m.embedding, &g);
            assert!(report.is_valid(), "n={n} p={p}: {report:?}");
            let k = m.triple.dim_k();
            for (i, img) in m.embedding.images.iter().enumerate() {
                let expected = if i < k { img.clone() } else { img.neg() };
                assert_eq!(negative_involution(img), expected);
            }
        }
    }

    #[test]
    fn negative_closed_form_matches() {
        for (n, p) in [(2, 2), (2, 1), (3, 1)] {
            let m = build_negative_model(n, p, n - p, &q(1, 1)).unwrap();
            let eps = hermitian_signs(p, n - p);
            let r = curvature_of_triple(&m.triple).unwrap();
            let d = 2 * n;
            for i in 0..d {
                for j in 0..d {
                    for k in 0..d {
                        let (x, y, z) = (unit_vector(d, i), unit_vector(d, j), unit_vector(d, k));
                        assert_eq!(
                            r.apply_basis(i, j, k),
                            negative_closed_form(&eps, &x, &y, &z),
                            "n={n} p={p} ({i},{j},{k})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn zero_models() {
        for n in 2..=3 {
            for r in 1..=n {
                for p in 0..=r {
                    let m = build_zero_model(n, r, p, r - p).unwrap();
                    let t = &m.triple;
                    assert_eq!(t.dim_k(), r * (2 * n - r));
                    assert!(validate_triple(t).is_valid());
                    let rd = ricci_data(t);
                    assert_eq!(rd.a, m.ricci_endo);
                    assert_eq!(rd.lambda, Some(q(0, 1)));
                    let g = t.algebra().unwrap();
                    assert!(g.is_ideal(&m.radical_basis));
                    assert!(g.is_subalgebra(&m.levi_basis));
                    let report = verify_embedding(&m.levi_map, &g);
                    assert!(report.is_valid(), "n={n} r={r} p={p}: {report:?}");
                    let printed = printed_table_report(&m);
                    assert!(printed.all_match(), "n={n} r={r} p={p}: {printed:?}");
                    let s = SympSpace::new(zero_omega(n, r)).unwrap();
                    let generic = build_triple_from_A(&s, &m.ricci_endo).unwrap();
                    assert_eq!(generic.dim_k(), t.dim_k());
                }
            }
        }
    }

    #[test]
    fn zero_model_structure() {
        let m = build_zero_model(2, 2, 2, 0).unwrap();
        let d = lie_diagnostics(&m.triple, Some(&m.radical_basis)).unwrap();
        let ideal = d.ideal.unwrap();
        assert_eq!(ideal.lower_central_dims.last(), Some(&0));
        assert_eq!(ideal.lower_central_dims.len(), 2);
        // so(2,1): signature (PQ, P(P−1)/2 + Q(Q−1)/2) = (2, 1)
        assert_eq!(ideal.quotient_killing.signature, (2, 1));

        let m = build_zero_model(3, 2, 1, 1).unwrap();
        let d = lie_diagnostics(&m.triple, Some(&m.radical_basis)).unwrap();
        assert_eq!(d.ideal.unwrap().lower_central_dims.len(), 3);

        let m = build_zero_model(2, 1, 1, 0).unwrap();
        assert!(lie_diagnostics(&m.triple, None).unwrap().solvable);
    }

    #[test]
    fn params() {
        let p: ModelParams =
            serde_json::from_str(r#"{"family":"su","n":2,"s":"1","p":1}"#).unwrap();
        let p = p.normalized().unwrap();
        assert_eq!((p.p, p.q), (Some(1), Some(1)));
        assert!(ModelParams::su(2, 3, 0).normalized().is_ok());
        assert!(build_model(&ModelParams::su(2, 3, 0)).is_err());
        assert!(ModelParams::sl(2).with_s(q(0, 1)).normalized().is_err());
        assert!(build_model(&ModelParams::nilpotent(2, 3, 3, 0)).is_err());
        assert!(build_model(&ModelParams::sl(1)).is_err());
        let m = build_model(&ModelParams::sl(2)).unwrap();
        assert_eq!(scalar_square(m.ricci_endo()), Some(q(9, 1)));
        assert_eq!(m.triple().dim(), 8);
    }
}
