//! Symplectic curvature tensors, the Ricci trace, the Ricci endomorphism,
//! Ricci-type curvature, and the splitting `R = E(A) + W`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::json::PairMap;
use crate::linalg::{unit_vector, vec_is_zero, BilinearForm, Endo, QMatrix, SympSpace};
use crate::scalar::Rational;

/// Curvature tensor on a symplectic space: `R(e_i, e_j) ∈ End(V)` for all
/// basis pairs, antisymmetric in `(i, j)`, each value in 𝔰𝔭(Ω).
#[derive(Clone, Debug, PartialEq)]
pub struct CurvatureTensor {
    space: SympSpace,
    // dim × dim table, values[i * dim + j] = R(e_i, e_j)
    values: Vec<Endo>,
}

impl CurvatureTensor {
    pub fn zero(space: &SympSpace) -> Self {
        let d = space.dim();
        CurvatureTensor {
            space: space.clone(),
            values: vec![QMatrix::zeros(d, d); d * d],
        }
    }

    /// Builds a tensor from its values on pairs `i < j`; other pairs follow
    /// by antisymmetry. Every value must be infinitesimally symplectic.
    pub fn from_pairs(
        space: &SympSpace,
        mut value: impl FnMut(usize, usize) -> Endo,
    ) -> Result<Self> {
        let d = space.dim();
        let mut values = vec![QMatrix::zeros(d, d); d * d];
        for i in 0..d {
            for j in i + 1..d {
                let v = value(i, j);
                if v.rows() != d || v.cols() != d {
                    return Err(Error::DimensionMismatch {
                        expected: d,
                        found: v.rows(),
                    });
                }
                if !space.is_inf_symplectic(&v)? {
                    return Err(Error::InvalidCurvature(format!(
                        "R(e_{i}, e_{j}) is not infinitesimally symplectic"
                    )));
                }
                values[j * d + i] = v.neg();
                values[i * d + j] = v;
            }
        }
        Ok(CurvatureTensor {
            space: space.clone(),
            values,
        })
    }

    pub fn space(&self) -> &SympSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn kappa(&self) -> Rational {
        self.space.kappa()
    }

    /// `R(e_i, e_j)`
    pub fn value(&self, i: usize, j: usize) -> &Endo {
        &self.values[i * self.dim() + j]
    }

    /// `R(e_i, e_j) e_k`
    pub fn apply_basis(&self, i: usize, j: usize, k: usize) -> Vec<Rational> {
        self.value(i, j).col(k)
    }

    /// `R(x, y)` for arbitrary vectors, by bilinearity.
    pub fn apply(&self, x: &[Rational], y: &[Rational]) -> Endo {
        let d = self.dim();
        let mut out = QMatrix::zeros(d, d);
        for i in 0..d {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..d {
                if i == j || y[j].is_zero() {
                    continue;
                }
                out.add_scaled(&(&x[i] * &y[j]), self.value(i, j));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(QMatrix::is_zero)
    }

    pub fn sub(&self, other: &CurvatureTensor) -> CurvatureTensor {
        assert_eq!(
            self.space, other.space,
            "curvature tensors on different spaces"
        );
        CurvatureTensor {
            space: self.space.clone(),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> CurvatureTensor {
        CurvatureTensor {
            space: self.space.clone(),
            values: self.values.iter().map(|v| v.scale(c)).collect(),
        }
    }

    /// Values on pairs `i < j` in pair order.
    pub fn pair_values(&self) -> impl Iterator<Item = ((usize, usize), &Endo)> {
        let d = self.dim();
        (0..d).flat_map(move |i| (i + 1..d).map(move |j| ((i, j), self.value(i, j))))
    }

    /// Span dimension of `{R(e_i, e_j)}`.
    pub fn value_span_dim(&self) -> usize {
        let flat: Vec<Vec<Rational>> = self
            .pair_values()
            .map(|(_, v)| v.as_flat().to_vec())
            .collect();
        crate::linalg::rank_of(&flat)
    }
}

/// Ricci form `r(X, Y) = Tr(Z ↦ R(X, Z) Y)` as a matrix:
/// `r_ij = Σ_k (R(e_i, e_k) e_j)_k`.
pub fn ricci_matrix(r: &CurvatureTensor) -> QMatrix {
    let d = r.dim();
    QMatrix::from_fn(d, d, |i, j| {
        let mut acc = Rational::zero();
        for k in 0..d {
            acc += &r.value(i, k)[(k, j)];
        }
        acc
    })
}

/// Ricci form with its detected symmetry. Symmetric whenever `R` satisfies
/// the first Bianchi identity.
pub fn ricci(r: &CurvatureTensor) -> BilinearForm {
    let m = ricci_matrix(r);
    let sym = if m.is_symmetric() {
        crate::linalg::Symmetry::Symmetric
    } else {
        crate::linalg::Symmetry::None
    };
    BilinearForm::new(m, sym).expect("declared symmetry matches")
}

/// Solves `Ω(X, A Y) = r(X, Y)`, i.e. `A = Ω⁻¹ r`.
pub fn endomorphism_from_ricci(space: &SympSpace, r: &BilinearForm) -> Result<Endo> {
    if !r.matrix().is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if r.matrix().rows() != space.dim() {
        return Err(Error::DimensionMismatch {
            expected: space.dim(),
            found: r.matrix().rows(),
        });
    }
    Ok(space.omega_inv().mul(r.matrix()))
}

/// `λ` with `A² = λ·Id`, if `A²` is scalar.
pub fn scalar_square(a: &Endo) -> Option<Rational> {
    let sq = a.mul(a);
    let lambda = sq[(0, 0)].clone();
    (sq == QMatrix::scalar(a.rows(), lambda.clone())).then_some(lambda)
}

/// Ricci form, Ricci endomorphism, and `λ` of a curvature tensor.
#[derive(Clone, Debug, PartialEq)]
pub struct RicciData {
    pub r: BilinearForm,
    pub a: Endo,
    /// Present iff `A² = λ·Id`.
    pub lambda: Option<Rational>,
    pub kappa: Rational,
}

impl RicciData {
    /// Validates admissibility of the derived `A` once, here.
    pub fn new(space: &SympSpace, r: BilinearForm) -> Result<Self> {
        let a = endomorphism_from_ricci(space, &r)?;
        if !space.is_inf_symplectic(&a)? {
            return Err(Error::NotInfSymplectic);
        }
        let lambda = scalar_square(&a);
        Ok(RicciData {
            r,
            a,
            lambda,
            kappa: space.kappa(),
        })
    }

    pub fn from_endomorphism(space: &SympSpace, a: &Endo) -> Result<Self> {
        if !space.is_inf_symplectic(a)? {
            return Err(Error::NotInfSymplectic);
        }
        RicciData::new(space, BilinearForm::symmetric(space.form_of(a))?)
    }
}

/// `E(A)(X, Y)` on arbitrary vectors:
/// `κ (2Ω(X,Y) A + AY ⊗ X̲ − AX ⊗ Y̲ + X ⊗ (AY)̲ − Y ⊗ (AX)̲)` where
/// `X̲ = Ω(X, ·)`.
pub fn ricci_type_value(space: &SympSpace, a: &Endo, x: &[Rational], y: &[Rational]) -> Endo {
    let ax = a.mul_vec(x);
    let ay = a.mul_vec(y);
    let mut out = a.scale(&(Rational::from_int(2) * space.form(x, y)));
    out = out.add(&QMatrix::outer(&ay, &space.lower(x)));
    out = out.sub(&QMatrix::outer(&ax, &space.lower(y)));
    out = out.add(&QMatrix::outer(x, &space.lower(&ay)));
    out = out.sub(&QMatrix::outer(y, &space.lower(&ax)));
    out.scale(&space.kappa())
}

/// Ricci-type curvature determined by an admissible `A`:
/// `R(X,Y)Z = κ[2ω(X,Y)AZ + ω(X,Z)AY − ω(Y,AZ)X − ω(Y,Z)AX + ω(X,AZ)Y]`
/// with `κ = 1/(2n+2)`.
pub fn ricci_type_curvature(space: &SympSpace, a: &Endo) -> Result<CurvatureTensor> {
    if !space.is_inf_symplectic(a)? {
        return Err(Error::NotInfSymplectic);
    }
    let d = space.dim();
    CurvatureTensor::from_pairs(space, |i, j| {
        ricci_type_value(space, a, &unit_vector(d, i), &unit_vector(d, j))
    })
}

/// Result of splitting a curvature tensor into Ricci part and `W`.
#[derive(Clone, Debug, PartialEq)]
pub struct WeylDecomposition {
    pub w: CurvatureTensor,
    pub ricci_data: RicciData,
    pub is_ricci_type: bool,
}

/// `W = R − E(A_R)` where `A_R` is the Ricci endomorphism of `R`.
///
/// Fails with [`Error::NotSymmetric`] when the Ricci form of `R` is not
/// symmetric, which happens only if `R` violates the first Bianchi identity.
pub fn weyl_part(r: &CurvatureTensor) -> Result<WeylDecomposition> {
    let ricci_data = RicciData::new(r.space(), ricci(r))?;
    let e = ricci_type_curvature(r.space(), &ricci_data.a)?;
    let w = r.sub(&e);
    let is_ricci_type = w.is_zero();
    Ok(WeylDecomposition {
        w,
        ricci_data,
        is_ricci_type,
    })
}

/// `R(e_i,e_j)e_k + R(e_j,e_k)e_i + R(e_k,e_i)e_j` for all basis triples.
#[derive(Clone, Debug, PartialEq)]
pub struct BianchiDefect {
    dim: usize,
    values: Vec<Vec<Rational>>,
}

impl BianchiDefect {
    pub fn get(&self, i: usize, j: usize, k: usize) -> &[Rational] {
        &self.values[(i * self.dim + j) * self.dim + k]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| vec_is_zero(v))
    }

    pub fn nonzero_triples(&self) -> Vec<(usize, usize, usize)> {
        let d = self.dim;
        let mut out = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    if !vec_is_zero(self.get(i, j, k)) {
                        out.push((i, j, k));
                    }
                }
            }
        }
        out
    }
}

pub fn first_bianchi_defect(r: &CurvatureTensor) -> BianchiDefect {
    let d = r.dim();
    let mut values = Vec::with_capacity(d * d * d);
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let mut v = r.apply_basis(i, j, k);
                for (a, b) in v.iter_mut().zip(r.apply_basis(j, k, i)) {
                    *a += b;
                }
                for (a, b) in v.iter_mut().zip(r.apply_basis(k, i, j)) {
                    *a += b;
                }
                values.push(v);
            }
        }
    }
    BianchiDefect { dim: d, values }
}

/// Curvature of the product connection on `S₁ ⊕ S₂`:
/// `R(X, Y)Z = R₁(X₁, Y₁)Z₁ + R₂(X₂, Y₂)Z₂`.
pub fn product_curvature(r1: &CurvatureTensor, r2: &CurvatureTensor) -> CurvatureTensor {
    let d1 = r1.dim();
    let d2 = r2.dim();
    let d = d1 + d2;
    let space = r1.space().direct_sum(r2.space());
    CurvatureTensor::from_pairs(&space, |i, j| {
        let mut m = QMatrix::zeros(d, d);
        if j < d1 {
            m.set_block(0, 0, r1.value(i, j));
        } else if i >= d1 {
            m.set_block(d1, d1, r2.value(i - d1, j - d1));
        }
        m
    })
    .expect("block sums of symplectic curvature values are symplectic")
}

/// Values `C(e_i, e_j) e_k` with `e_i, e_j` from the first factor and `e_k`
/// from the second, as vectors of the sum space.
#[derive(Clone, Debug, PartialEq)]
pub struct CrossTerm {
    pub d1: usize,
    pub d2: usize,
    values: Vec<Vec<Rational>>,
}

impl CrossTerm {
    pub fn get(&self, i: usize, j: usize, k: usize) -> &[Rational] {
        &self.values[(i * self.d1 + j) * self.d2 + k]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| vec_is_zero(v))
    }
}

/// Closed form of the cross block of `W` on a product:
/// `C(X₁, Y₁)Z₂ = −ω(X₁, Y₁) A₂ Z₂ / (n + 1)` with `2n = dim S₁ + dim S₂`.
pub fn cross_term(s1: &SympSpace, s2: &SympSpace, a2: &Endo) -> Result<CrossTerm> {
    if !s2.is_inf_symplectic(a2)? {
        return Err(Error::NotInfSymplectic);
    }
    let (d1, d2) = (s1.dim(), s2.dim());
    let n = (d1 + d2) / 2;
    let factor = -Rational::new(1, n as i64 + 1);
    let mut values = Vec::with_capacity(d1 * d1 * d2);
    for i in 0..d1 {
        for j in 0..d1 {
            let w = &s1.omega()[(i, j)] * &factor;
            for k in 0..d2 {
                let mut v = vec![Rational::zero(); d1];
                v.extend(a2.col(k).iter().map(|c| c * &w));
                values.push(v);
            }
        }
    }
    Ok(CrossTerm { d1, d2, values })
}

/// Extracts the block `T(e_i, e_j) e_k` (i, j < d1 ≤ k) from a tensor on a
/// direct sum.
pub fn cross_block(t: &CurvatureTensor, d1: usize) -> CrossTerm {
    let d2 = t.dim() - d1;
    let mut values = Vec::with_capacity(d1 * d1 * d2);
    for i in 0..d1 {
        for j in 0..d1 {
            for k in 0..d2 {
                values.push(t.apply_basis(i, j, d1 + k));
            }
        }
    }
    CrossTerm { d1, d2, values }
}

#[derive(Serialize, Deserialize)]
struct CurvatureJson {
    n: usize,
    omega: QMatrix,
    #[serde(rename = "R")]
    r: PairMap<QMatrix>,
}

impl Serialize for CurvatureTensor {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let mut r = PairMap::new();
        for ((i, j), v) in self.pair_values() {
            r.insert(i, j, v.clone());
        }
        CurvatureJson {
            n: self.space.n(),
            omega: self.space.omega().clone(),
            r,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CurvatureTensor {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = CurvatureJson::deserialize(deserializer)?;
        let space = SympSpace::new(raw.omega).map_err(D::Error::custom)?;
        if space.n() != raw.n {
            return Err(D::Error::custom(format!(
                "n = {} does not match omega of size {}",
                raw.n,
                space.dim()
            )));
        }
        raw.r.check_keys(space.dim()).map_err(D::Error::custom)?;
        let d = space.dim();
        CurvatureTensor::from_pairs(&space, |i, j| {
            raw.r
                .get(i, j)
                .cloned()
                .unwrap_or_else(|| QMatrix::zeros(d, d))
        })
        .map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    fn m(rows: &[&[i64]]) -> QMatrix {
        QMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from_int(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    /// `A = a·diag(I, −I)` on the standard space.
    fn split_a(n: usize, a: i64) -> Endo {
        let mut d = vec![Rational::from_int(a); n];
        d.extend(vec![Rational::from_int(-a); n]);
        QMatrix::diagonal(&d)
    }

    #[test]
    fn zero_curvature() {
        let s = SympSpace::standard(2).unwrap();
        let r = CurvatureTensor::zero(&s);
        assert!(ricci_matrix(&r).is_zero());
        let dec = weyl_part(&r).unwrap();
        assert!(dec.w.is_zero() && dec.is_ricci_type);
        assert!(dec.ricci_data.a.is_zero());
        assert_eq!(dec.ricci_data.lambda, Some(q(0, 1)));
        assert!(first_bianchi_defect(&r).is_zero());
        assert!(ricci_type_curvature(&s, &QMatrix::zeros(4, 4))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn rejects_non_symplectic_a() {
        let s = SympSpace::standard(2).unwrap();
        assert_eq!(
            ricci_type_curvature(&s, &QMatrix::identity(4)),
            Err(Error::NotInfSymplectic)
        );
        assert_eq!(
            RicciData::from_endomorphism(&s, &QMatrix::identity(4)),
            Err(Error::NotInfSymplectic)
        );
    }

    #[test]
    fn rank_one_nilpotent_span() {
        // A e_3 = e_1 (0-based: column 2 maps to row 0): Ω A symmetric, A² = 0.
        let s = SympSpace::standard(2).unwrap();
        let mut a = QMatrix::zeros(4, 4);
        a[(0, 2)] = q(1, 1);
        assert!(s.is_inf_symplectic(&a).unwrap());
        assert!(a.mul(&a).is_zero());
        let r = ricci_type_curvature(&s, &a).unwrap();
        assert_eq!(r.value_span_dim(), 3);
    }

    #[test]
    fn split_closed_form() {
        // R(X, ξ) = 2aκ(−⟨X,ξ⟩(Id_V − Id_V*) + ξ⊗X − X⊗ξ) for X ∈ V, ξ ∈ V*.
        let n = 2;
        let a = 3;
        let s = SympSpace::standard(n).unwrap();
        let big_a = split_a(n, a);
        let r = ricci_type_curvature(&s, &big_a).unwrap();
        let coef = Rational::from_int(2 * a) * s.kappa();
        for i in 0..n {
            for j in 0..n {
                // X = e_i ∈ V, ξ = e^j ∈ V*, ⟨X, ξ⟩ = δ_ij
                let mut expected = QMatrix::zeros(2 * n, 2 * n);
                if i == j {
                    expected = split_a(n, -1);
                }
                // (ξ⊗X)(z) = ⟨X, z_{V*}⟩ ξ and (X⊗ξ)(z) = ⟨z_V, ξ⟩ X
                expected[(n + j, n + i)] += q(1, 1);
                expected[(i, j)] -= q(1, 1);
                assert_eq!(
                    r.value(i, n + j),
                    &expected.scale(&coef),
                    "pair ({i},{})",
                    n + j
                );
            }
        }
        // R(V, V) = R(V*, V*) = 0
        assert!(r.value(0, 1).is_zero());
        assert!(r.value(2, 3).is_zero());
    }

    #[test]
    fn hand_built_tensor_violates_bianchi() {
        let s = SympSpace::standard(2).unwrap();
        // E_13 (1-based) is the unit at (0, 2); it is in 𝔰𝔭 for this Ω.
        let e13 = QMatrix::unit(4, 4, 0, 2);
        assert!(s.is_inf_symplectic(&e13).unwrap());
        let r = CurvatureTensor::from_pairs(&s, |i, j| {
            if (i, j) == (0, 1) {
                e13.clone()
            } else {
                QMatrix::zeros(4, 4)
            }
        })
        .unwrap();
        assert!(!first_bianchi_defect(&r).is_zero());
    }

    #[test]
    fn non_symplectic_values_rejected() {
        let s = SympSpace::standard(1).unwrap();
        let err = CurvatureTensor::from_pairs(&s, |_, _| QMatrix::identity(2));
        assert!(matches!(err, Err(Error::InvalidCurvature(_))));
    }

    #[test]
    fn cross_term_quoted_value() {
        let s1 = SympSpace::standard(1).unwrap();
        let s2 = SympSpace::standard(1).unwrap();
        let a2 = m(&[&[1, 2], &[3, -1]]);
        let c = cross_term(&s1, &s2, &a2).unwrap();
        // ω(e_1, e_0) = 1 for the standard 2×2 form
        assert_eq!(s1.omega()[(1, 0)], q(1, 1));
        for k in 0..2 {
            let expected: Vec<Rational> = [vec![q(0, 1); 2], a2.col(k)]
                .concat()
                .iter()
                .map(|x| x * &q(-1, 3))
                .collect();
            assert_eq!(c.get(1, 0, k), expected.as_slice());
        }
        assert!(cross_term(&s1, &s2, &QMatrix::zeros(2, 2))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn product_block_assembly() {
        let s = SympSpace::standard(1).unwrap();
        let a1 = m(&[&[1, 0], &[0, -1]]);
        let r1 = ricci_type_curvature(&s, &a1).unwrap();
        let r2 = CurvatureTensor::zero(&s);
        let p = product_curvature(&r1, &r2);
        let a = weyl_part(&p).unwrap().ricci_data.a;
        assert_eq!(a, QMatrix::block_diag(&a1, &QMatrix::zeros(2, 2)));
        let zero = product_curvature(&r2, &r2);
        assert!(zero.is_zero());
    }

    #[test]
    fn json_round_trip() {
        let s = SympSpace::standard(2).unwrap();
        let r = ricci_type_curvature(&s, &split_a(2, 3)).unwrap();
        let text = serde_json::to_string(&r).unwrap();
        assert!(text.starts_with(r#"{"n":2,"omega":"#));
        let back: CurvatureTensor = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        // missing pairs default to zero
        let z: CurvatureTensor =
            serde_json::from_str(r#"{"n":1,"omega":[["0","-1"],["1","0"]],"R":{}}"#).unwrap();
        assert!(z.is_zero());
        assert!(serde_json::from_str::<CurvatureTensor>(
            r#"{"n":2,"omega":[["0","-1"],["1","0"]],"R":{}}"#
        )
        .is_err());
    }
}
