//! Symmetric symplectic triples `(𝔤 = 𝔨 ⊕ 𝔭, σ, Ω)` with `𝔨 ⊂ End(𝔭)`.
//!
//! The bracket is `[(C,X),(D,Y)] = ([C,D] − R(X,Y), CY − DX)`. The basis
//! of `𝔤` used for structure constants is `k_basis` followed by the
//! standard basis of `𝔭`.

use serde::{Deserialize, Serialize};

use crate::curvature::{
    first_bianchi_defect, ricci, ricci_type_curvature, scalar_square, CurvatureTensor, RicciData,
};
use crate::error::{Error, Result};
use crate::json::PairMap;
use crate::lie::{FormSummary, LieAlgebra};
use crate::linalg::{flatten, vec_is_zero, Endo, LinearSpan, QMatrix, SympSpace};
use crate::scalar::Rational;

#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricTriple {
    space: SympSpace,
    k_basis: Vec<Endo>,
    // pp[i * dim_p + j] = coordinates of [e_i, e_j] in k_basis
    pp: Vec<Vec<Rational>>,
}

/// Raw data of a triple, with no mathematical checks. Used for
/// serialization and for deliberately corrupting a triple in tests.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TripleParts {
    pub n: usize,
    pub omega: QMatrix,
    pub k_basis: Vec<Endo>,
    pub pp_bracket: PairMap<Vec<Rational>>,
}

impl SymmetricTriple {
    /// Checks shapes only; use [`validate_triple`] for the axioms.
    pub fn from_parts(parts: TripleParts) -> Result<Self> {
        let space = SympSpace::new(parts.omega)?;
        if space.n() != parts.n {
            return Err(Error::InvalidTriple(format!(
                "n = {} does not match omega of size {}",
                parts.n,
                space.dim()
            )));
        }
        let d = space.dim();
        for (idx, k) in parts.k_basis.iter().enumerate() {
            if k.rows() != d || k.cols() != d {
                return Err(Error::InvalidTriple(format!(
                    "k_basis[{idx}] is {}x{}, expected {d}x{d}",
                    k.rows(),
                    k.cols()
                )));
            }
        }
        parts.pp_bracket.check_keys(d)?;
        let m = parts.k_basis.len();
        let mut pp = vec![vec![Rational::zero(); m]; d * d];
        for (&(i, j), c) in &parts.pp_bracket.0 {
            if c.len() != m {
                return Err(Error::InvalidTriple(format!(
                    "pp_bracket \"{i},{j}\" has {} coefficients, expected {m}",
                    c.len()
                )));
            }
            pp[j * d + i] = c.iter().map(|x| -x).collect();
            pp[i * d + j] = c.clone();
        }
        Ok(SymmetricTriple {
            space,
            k_basis: parts.k_basis,
            pp,
        })
    }

    pub fn to_parts(&self) -> TripleParts {
        let d = self.dim_p();
        let mut pp_bracket = PairMap::new();
        for i in 0..d {
            for j in i + 1..d {
                pp_bracket.insert(i, j, self.pp_coords(i, j).to_vec());
            }
        }
        TripleParts {
            n: self.space.n(),
            omega: self.space.omega().clone(),
            k_basis: self.k_basis.clone(),
            pp_bracket,
        }
    }

    /// Triple whose `𝔨` is the given basis and whose `[𝔭,𝔭]` bracket is
    /// `−R`. Fails if some `R(e_i, e_j)` is outside the span of `k_basis`
    /// or the basis is dependent.
    pub fn with_k_basis(r: &CurvatureTensor, k_basis: Vec<Endo>) -> Result<Self> {
        let d = r.dim();
        let span = k_span(&k_basis);
        if span.dim() != k_basis.len() {
            return Err(Error::InvalidTriple("k_basis is linearly dependent".into()));
        }
        let mut pp = vec![vec![Rational::zero(); k_basis.len()]; d * d];
        for i in 0..d {
            for j in 0..d {
                if i == j {
                    continue;
                }
                let v = r.value(i, j).neg();
                pp[i * d + j] = span.coords(v.as_flat()).ok_or_else(|| {
                    Error::InvalidTriple(format!("R(e_{i}, e_{j}) is not in the span of k_basis"))
                })?;
            }
        }
        Ok(SymmetricTriple {
            space: r.space().clone(),
            k_basis,
            pp,
        })
    }

    pub fn space(&self) -> &SympSpace {
        &self.space
    }

    pub fn n(&self) -> usize {
        self.space.n()
    }

    pub fn dim_p(&self) -> usize {
        self.space.dim()
    }

    pub fn dim_k(&self) -> usize {
        self.k_basis.len()
    }

    pub fn dim(&self) -> usize {
        self.dim_k() + self.dim_p()
    }

    pub fn k_basis(&self) -> &[Endo] {
        &self.k_basis
    }

    /// Coordinates of `[e_i, e_j]` in `k_basis`.
    pub fn pp_coords(&self, i: usize, j: usize) -> &[Rational] {
        &self.pp[i * self.dim_p() + j]
    }

    /// `[e_i, e_j]` as an endomorphism of `𝔭`.
    pub fn pp_value(&self, i: usize, j: usize) -> Endo {
        combine(&self.k_basis, self.pp_coords(i, j), self.dim_p())
    }

    /// Coordinates in `𝔤` of the `𝔭` basis vector `e_i`.
    pub fn p_vector(&self, i: usize) -> Vec<Rational> {
        crate::linalg::unit_vector(self.dim(), self.dim_k() + i)
    }

    /// Structure constants of `𝔤` in the basis `k_basis ++ (e_i)`. Fails
    /// when `[𝔨, 𝔨] ⊄ 𝔨`.
    pub fn algebra(&self) -> Result<LieAlgebra> {
        let m = self.dim_k();
        let d = self.dim_p();
        let span = k_span(&self.k_basis);
        if span.dim() != m {
            return Err(Error::InvalidTriple("k_basis is linearly dependent".into()));
        }
        let mut kk = vec![Vec::new(); m * m];
        for a in 0..m {
            for b in a + 1..m {
                let c = self.k_basis[a].commutator(&self.k_basis[b]);
                kk[a * m + b] = span.coords(c.as_flat()).ok_or_else(|| {
                    Error::InvalidTriple(format!("[k_{a}, k_{b}] is not in the span of k_basis"))
                })?;
            }
        }
        Ok(LieAlgebra::from_brackets(m + d, |x, y| {
            let mut out = vec![Rational::zero(); m + d];
            match (x < m, y < m) {
                (true, true) => out[..m].clone_from_slice(&kk[x * m + y]),
                (true, false) => out[m..].clone_from_slice(&self.k_basis[x].col(y - m)),
                (false, false) => out[..m].clone_from_slice(self.pp_coords(x - m, y - m)),
                (false, true) => unreachable!("x < y"),
            }
            out
        }))
    }
}

fn k_span(k_basis: &[Endo]) -> LinearSpan<Rational> {
    let ambient = k_basis.first().map_or(0, |k| k.rows() * k.cols());
    LinearSpan::from_vectors(ambient, flatten(k_basis))
}

fn combine(basis: &[Endo], coords: &[Rational], d: usize) -> Endo {
    let mut out = QMatrix::zeros(d, d);
    for (c, b) in coords.iter().zip(basis) {
        if !c.is_zero() {
            out.add_scaled(c, b);
        }
    }
    out
}

/// Triple with `𝔨 = span{R(e_i, e_j)}` (greedy basis in pair order) and
/// `[X, Y] = −R(X, Y)`. No axioms are checked, so this also builds the
/// broken tables used to show that scalar `A²` is necessary.
pub fn triple_from_curvature(r: &CurvatureTensor) -> SymmetricTriple {
    let d = r.dim();
    let mut span = LinearSpan::new(d * d);
    for ((_, _), v) in r.pair_values() {
        span.insert(v.neg().into_flat());
    }
    let k_basis: Vec<Endo> = span
        .basis()
        .iter()
        .map(|v| QMatrix::from_flat(d, d, v.clone()).expect("square"))
        .collect();
    SymmetricTriple::with_k_basis(r, k_basis).expect("values lie in their own span")
}

/// Triple generated by the Ricci-type curvature of `A`. Requires `A`
/// admissible with `A² = λ·Id`.
#[allow(non_snake_case)]
pub fn build_triple_from_A(space: &SympSpace, a: &Endo) -> Result<SymmetricTriple> {
    let r = ricci_type_curvature(space, a)?;
    if scalar_square(a).is_none() {
        return Err(Error::NonScalarSquare);
    }
    Ok(triple_from_curvature(&r))
}

/// Outcome of each axiom check on a triple.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TripleReport {
    pub dim_k: usize,
    pub dim_p: usize,
    /// (a) Jacobi on every basis triple of `𝔤`
    pub jacobi: bool,
    pub jacobi_triples_checked: usize,
    pub jacobi_failures: Vec<(usize, usize, usize)>,
    /// Parts of (a) that can be checked without structure constants.
    pub k_closed: bool,
    pub first_bianchi: bool,
    pub k_equivariant: bool,
    /// (b) `[𝔭, 𝔭] = 𝔨`
    pub pp_spans_k: bool,
    /// (c) every `k_basis` element preserves `Ω`
    pub omega_invariant: bool,
    /// (d) `k_basis` is linearly independent
    pub k_independent: bool,
    pub failures: Vec<String>,
}

impl TripleReport {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn validate_triple(t: &SymmetricTriple) -> TripleReport {
    let d = t.dim_p();
    let m = t.dim_k();
    let mut failures = Vec::new();

    let span = k_span(&t.k_basis);
    let k_independent = span.dim() == m;
    if !k_independent {
        failures.push(format!("(d) k_basis has rank {} < {m}", span.dim()));
    }

    let bad_omega: Vec<usize> = (0..m)
        .filter(|&a| !t.space.is_inf_symplectic(&t.k_basis[a]).unwrap_or(false))
        .collect();
    let omega_invariant = bad_omega.is_empty();
    if !omega_invariant {
        failures.push(format!(
            "(c) k_basis elements {bad_omega:?} do not preserve omega"
        ));
    }

    let pp_rank = crate::linalg::rank_of(
        &(0..d)
            .flat_map(|i| (i + 1..d).map(move |j| (i, j)))
            .map(|(i, j)| t.pp_coords(i, j).to_vec())
            .collect::<Vec<_>>(),
    );
    let pp_spans_k = pp_rank == m;
    if !pp_spans_k {
        failures.push(format!("(b) [p,p] spans {pp_rank} of {m} dimensions of k"));
    }

    let mut k_closed = true;
    for a in 0..m {
        for b in a + 1..m {
            if !span.contains(t.k_basis[a].commutator(&t.k_basis[b]).as_flat()) {
                k_closed = false;
            }
        }
    }
    if !k_closed {
        failures.push("(a) [k,k] is not contained in k".into());
    }

    // R(e_i, e_j) = −[e_i, e_j]; skip the symplectic check so broken
    // tables still get a Bianchi verdict.
    let r_values: Vec<Endo> = (0..d * d)
        .map(|idx| t.pp_value(idx / d, idx % d).neg())
        .collect();
    let r_at = |i: usize, j: usize| &r_values[i * d + j];
    let mut first_bianchi = true;
    'bianchi: for i in 0..d {
        for j in i + 1..d {
            for k in j + 1..d {
                let mut v = r_at(i, j).col(k);
                for (x, y) in v.iter_mut().zip(r_at(j, k).col(i)) {
                    *x += y;
                }
                for (x, y) in v.iter_mut().zip(r_at(k, i).col(j)) {
                    *x += y;
                }
                if !vec_is_zero(&v) {
                    first_bianchi = false;
                    break 'bianchi;
                }
            }
        }
    }
    if !first_bianchi {
        failures.push("(a) first Bianchi identity fails for R = -[p,p]".into());
    }

    // R(CX, Y) + R(X, CY) = [C, R(X, Y)]
    let r_apply = |x: &[Rational], y: &[Rational]| {
        let mut out = QMatrix::zeros(d, d);
        for i in 0..d {
            for j in 0..d {
                if i != j && !x[i].is_zero() && !y[j].is_zero() {
                    out.add_scaled(&(&x[i] * &y[j]), r_at(i, j));
                }
            }
        }
        out
    };
    let mut k_equivariant = true;
    'equiv: for c in &t.k_basis {
        for i in 0..d {
            for j in i + 1..d {
                let ei = crate::linalg::unit_vector(d, i);
                let ej = crate::linalg::unit_vector(d, j);
                let lhs = r_apply(&c.col(i), &ej).add(&r_apply(&ei, &c.col(j)));
                if lhs != c.commutator(r_at(i, j)) {
                    k_equivariant = false;
                    break 'equiv;
                }
            }
        }
    }
    if !k_equivariant {
        failures.push("(a) R is not k-equivariant".into());
    }

    let total = m + d;
    let jacobi_triples_checked = total * total.saturating_sub(1) * total.saturating_sub(2) / 6;
    let (jacobi, jacobi_failures) = match t.algebra() {
        Ok(g) => {
            let f = g.jacobi_failures();
            (f.is_empty(), f)
        }
        Err(_) => (false, Vec::new()),
    };
    if !jacobi {
        if jacobi_failures.is_empty() {
            failures.push("(a) Jacobi cannot hold: structure constants undefined".into());
        } else {
            failures.push(format!(
                "(a) Jacobi fails on {} of {jacobi_triples_checked} basis triples",
                jacobi_failures.len()
            ));
        }
    }

    TripleReport {
        dim_k: m,
        dim_p: d,
        jacobi,
        jacobi_triples_checked,
        jacobi_failures,
        k_closed,
        first_bianchi,
        k_equivariant,
        pp_spans_k,
        omega_invariant,
        k_independent,
        failures,
    }
}

/// `R(X, Y)Z = −[[X, Y], Z]`.
pub fn curvature_of_triple(t: &SymmetricTriple) -> Result<CurvatureTensor> {
    CurvatureTensor::from_pairs(t.space(), |i, j| t.pp_value(i, j).neg())
}

/// Ricci form, endomorphism `A` and `λ` of a triple's curvature.
pub fn ricci_data_of_triple(t: &SymmetricTriple) -> Result<RicciData> {
    let r = curvature_of_triple(t)?;
    if !first_bianchi_defect(&r).is_zero() {
        return Err(Error::InvalidTriple(
            "curvature violates the first Bianchi identity".into(),
        ));
    }
    RicciData::new(t.space(), ricci(&r))
}

fn span_basis(d: usize, ms: impl IntoIterator<Item = Endo>) -> Vec<Endo> {
    LinearSpan::from_vectors(d * d, ms.into_iter().map(QMatrix::into_flat))
        .into_basis()
        .into_iter()
        .map(|v| QMatrix::from_flat(d, d, v).expect("square"))
        .collect()
}

/// Basis of `{AB + BA : B antisymplectic-symmetric}`.
pub fn k_from_lemma(space: &SympSpace, a: &Endo) -> Result<Vec<Endo>> {
    if !space.is_inf_symplectic(a)? {
        return Err(Error::NotInfSymplectic);
    }
    Ok(span_basis(
        space.dim(),
        space
            .antisymplectic_basis()
            .iter()
            .map(|b| a.mul(b).add(&b.mul(a))),
    ))
}

/// Basis of `{C ∈ 𝔰𝔭(Ω) : CA = AC}`.
pub fn commutant_sp(space: &SympSpace, a: &Endo) -> Result<Vec<Endo>> {
    if !space.is_inf_symplectic(a)? {
        return Err(Error::NotInfSymplectic);
    }
    let d = space.dim();
    let sp = space.sp_basis();
    let cols: Vec<Endo> = sp.iter().map(|s| s.commutator(a)).collect();
    // Columns of the system are the flattened commutators.
    let system = QMatrix::from_fn(d * d, sp.len(), |r, c| cols[c].as_flat()[r].clone());
    Ok(span_basis(
        d,
        system
            .nullspace()
            .iter()
            .map(|coeffs| combine(&sp, coeffs, d)),
    ))
}

/// Lie-theoretic invariants of `𝔤`, optionally of an ideal and the quotient.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LieDiagnostics {
    pub dim: usize,
    pub derived_series_dims: Vec<usize>,
    pub solvable: bool,
    pub killing: FormSummary,
    pub semisimple: bool,
    pub ideal: Option<IdealDiagnostics>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdealDiagnostics {
    pub dim: usize,
    pub lower_central_dims: Vec<usize>,
    /// Steps until the lower central series reaches 0, if it does.
    pub nilpotency_class: Option<usize>,
    pub quotient_dim: usize,
    pub quotient_killing: FormSummary,
}

pub fn lie_diagnostics(
    t: &SymmetricTriple,
    ideal_basis: Option<&[Vec<Rational>]>,
) -> Result<LieDiagnostics> {
    algebra_diagnostics(&t.algebra()?, ideal_basis)
}

pub fn algebra_diagnostics(
    g: &LieAlgebra,
    ideal_basis: Option<&[Vec<Rational>]>,
) -> Result<LieDiagnostics> {
    let derived_series_dims = g.derived_series();
    let killing = FormSummary::of(&g.killing_form());
    let ideal = match ideal_basis {
        None => None,
        Some(basis) => {
            let quotient = g.quotient(basis)?;
            let lower_central_dims = g.lower_central_series_of(basis);
            let nilpotency_class =
                (lower_central_dims.last() == Some(&0)).then(|| lower_central_dims.len() - 1);
            Some(IdealDiagnostics {
                dim: lower_central_dims[0],
                lower_central_dims,
                nilpotency_class,
                quotient_dim: quotient.algebra.dim(),
                quotient_killing: FormSummary::of(&quotient.algebra.killing_form()),
            })
        }
    };
    Ok(LieDiagnostics {
        dim: g.dim(),
        solvable: derived_series_dims.last() == Some(&0),
        derived_series_dims,
        semisimple: killing.is_nondegenerate(g.dim()),
        killing,
        ideal,
    })
}

/// `{C ∈ 𝔨 : CA = 0} ⊕ Ker A` in `𝔤` coordinates. For `λ = 0` this is the
/// ideal whose lower central series has length at most two.
pub fn kernel_ideal(t: &SymmetricTriple, a: &Endo) -> Vec<Vec<Rational>> {
    let m = t.dim_k();
    let d = t.dim_p();
    let prods: Vec<Endo> = t.k_basis.iter().map(|k| k.mul(a)).collect();
    let system = QMatrix::from_fn(d * d, m, |r, c| prods[c].as_flat()[r].clone());
    let mut out = Vec::new();
    for c in system.nullspace() {
        let mut v = c;
        v.extend(std::iter::repeat_n(Rational::zero(), d));
        out.push(v);
    }
    for x in a.nullspace() {
        let mut v = vec![Rational::zero(); m];
        v.extend(x);
        out.push(v);
    }
    out
}

impl Serialize for SymmetricTriple {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        self.to_parts().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SymmetricTriple {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        SymmetricTriple::from_parts(TripleParts::deserialize(deserializer)?)
            .map_err(D::Error::custom)
    }
}
