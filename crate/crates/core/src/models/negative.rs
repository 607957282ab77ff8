//! `λ < 0`: `𝔭 = ℂⁿ` with a Hermitian form of signature `(p, q)`,
//! `𝔨 = 𝔲(p, q)`, `𝔤 ≅ 𝔰𝔲(p+1, q)`.
//!
//! A complex vector `x + iy` has real coordinates `(x, y)`, and complex
//! matrices `P + iQ` act as `[[P, −Q], [Q, P]]`.

use crate::curvature::ricci_type_curvature;
use crate::error::{Error, Result};
use crate::linalg::{Endo, QMatrix, SympSpace};
use crate::scalar::Rational;
use crate::triple::SymmetricTriple;

use super::embedding::{realify, Embedding, TargetAlgebra};

#[derive(Clone, Debug, PartialEq)]
pub struct NegativeModel {
    pub n: usize,
    pub p: usize,
    pub q: usize,
    pub s: Rational,
    /// `b = −(2n+2)s²`, so `s·s̄ = −κb`.
    pub b: Rational,
    /// Complex structure, `A = bJ`.
    pub j: Endo,
    pub ricci_endo: Endo,
    pub triple: SymmetricTriple,
    /// `j : 𝔤 → 𝔰𝔲(V ⊕ ℂ, ⟨⟨,⟩⟩)`, realified.
    pub embedding: Embedding<Rational>,
}

/// Signs `ε` of `⟨v, w⟩ = Σ ε_i v̄_i w_i`: `p` plus signs, then `q` minus.
pub fn hermitian_signs(p: usize, q: usize) -> Vec<i8> {
    let mut e = vec![1i8; p];
    e.extend(vec![-1i8; q]);
    e
}

/// `Ω = Im⟨,⟩ = [[0, E], [−E, 0]]` with `E = diag(ε)`.
pub fn negative_omega(eps: &[i8]) -> QMatrix {
    let n = eps.len();
    QMatrix::from_fn(2 * n, 2 * n, |r, c| {
        if r < n && c == r + n {
            Rational::from_int(eps[r] as i64)
        } else if r >= n && c + n == r {
            Rational::from_int(-(eps[c] as i64))
        } else {
            Rational::zero()
        }
    })
}

/// Multiplication by `i`.
pub fn complex_structure(n: usize) -> QMatrix {
    realify(&QMatrix::zeros(n, n), &QMatrix::identity(n))
}

/// Basis of `𝔲(p, q) = {Z : Z*E + EZ = 0}` as pairs `(Re Z, Im Z)`:
/// `Z = E·S` for `S` running over `iE_jj`, `E_jk − E_kj`, `i(E_jk + E_kj)`.
fn unitary_basis(eps: &[i8]) -> Vec<(QMatrix, QMatrix)> {
    let n = eps.len();
    let e = QMatrix::diagonal(
        &eps.iter()
            .map(|&x| Rational::from_int(x as i64))
            .collect::<Vec<_>>(),
    );
    let zero = QMatrix::zeros(n, n);
    let mut out = Vec::with_capacity(n * n);
    for j in 0..n {
        out.push((zero.clone(), e.mul(&QMatrix::unit(n, n, j, j))));
    }
    for j in 0..n {
        for k in j + 1..n {
            let anti = QMatrix::unit(n, n, j, k).sub(&QMatrix::unit(n, n, k, j));
            let sym = QMatrix::unit(n, n, j, k).add(&QMatrix::unit(n, n, k, j));
            out.push((e.mul(&anti), zero.clone()));
            out.push((zero.clone(), e.mul(&sym)));
        }
    }
    out
}

pub fn build_negative_model(n: usize, p: usize, q: usize, s: &Rational) -> Result<NegativeModel> {
    if n < 2 {
        return Err(Error::InvalidParams(format!("n = {n}, expected n >= 2")));
    }
    if p + q != n {
        return Err(Error::InvalidParams(format!(
            "p + q = {} but n = {n}",
            p + q
        )));
    }
    if s.is_zero() {
        return Err(Error::InvalidParams("s must be nonzero".into()));
    }
    let eps = hermitian_signs(p, q);
    let space = SympSpace::new(negative_omega(&eps))?;
    let kappa = space.kappa();
    let b = -Rational::from_int(2 * n as i64 + 2) * s * s;
    let j = complex_structure(n);
    let ricci_endo = j.scale(&b);

    let unitary = unitary_basis(&eps);
    let k_basis: Vec<Endo> = unitary.iter().map(|(re, im)| realify(re, im)).collect();
    let r = ricci_type_curvature(&space, &ricci_endo)?;
    let triple = SymmetricTriple::with_k_basis(&r, k_basis)?;

    let two_kappa = Rational::from_int(2) * &kappa;
    let mut images = Vec::with_capacity(triple.dim());
    for (re, im) in &unitary {
        // [[Z − 2κ Tr Z·I, 0], [0, −2κ Tr Z]]
        let (tr_re, tr_im) = (re.trace(), im.trace());
        let mut pr = QMatrix::zeros(n + 1, n + 1);
        let mut pi = QMatrix::zeros(n + 1, n + 1);
        pr.set_block(0, 0, re);
        pi.set_block(0, 0, im);
        for t in 0..=n {
            pr[(t, t)] -= &two_kappa * &tr_re;
            pi[(t, t)] -= &two_kappa * &tr_im;
        }
        images.push(realify(&pr, &pi));
    }
    // p basis: e_i = real unit, e_{n+i} = i·unit. Image [[0, sX], [−s X*E, 0]].
    for imaginary in [false, true] {
        for i in 0..n {
            let mut pr = QMatrix::zeros(n + 1, n + 1);
            let mut pi = QMatrix::zeros(n + 1, n + 1);
            let sign = Rational::from_int(eps[i] as i64);
            if imaginary {
                pi[(i, n)] = s.clone();
                // conj(i) = −i
                pi[(n, i)] = s * &sign;
            } else {
                pr[(i, n)] = s.clone();
                pr[(n, i)] = -(s * &sign);
            }
            images.push(realify(&pr, &pi));
        }
    }
    let dim = triple.dim();
    let mut eta = eps.clone();
    eta.push(1);
    let embedding = Embedding {
        target_dim: 2 * (n + 1),
        domain: (0..dim)
            .map(|i| crate::linalg::unit_vector(dim, i))
            .collect(),
        images,
        target: TargetAlgebra::SpecialUnitary { eta },
    };
    Ok(NegativeModel {
        n,
        p,
        q,
        s: s.clone(),
        b,
        j,
        ricci_endo,
        triple,
        embedding,
    })
}

/// `σ(M) = D M D` with `D = diag(I, −1)` on the complex matrix, realified.
pub fn negative_involution(m: &QMatrix) -> QMatrix {
    let k = m.rows() / 2;
    let last = |t: usize| t % k == k - 1;
    QMatrix::from_fn(2 * k, 2 * k, |r, c| {
        if last(r) != last(c) {
            -m[(r, c)].clone()
        } else {
            m[(r, c)].clone()
        }
    })
}

/// `⟨v, w⟩ = Σ ε_i v̄_i w_i` on real coordinates, as `(Re, Im)`.
pub fn hermitian(eps: &[i8], v: &[Rational], w: &[Rational]) -> (Rational, Rational) {
    let n = eps.len();
    let mut re = Rational::zero();
    let mut im = Rational::zero();
    for i in 0..n {
        let e = Rational::from_int(eps[i] as i64);
        let (a, b) = (&v[i], &v[n + i]);
        let (c, d) = (&w[i], &w[n + i]);
        // (a − ib)(c + id) = ac + bd + i(ad − bc)
        re += &e * (a * c + b * d);
        im += &e * (a * d - b * c);
    }
    (re, im)
}

/// Printed closed-form curvature for `s = 1`:
/// `R(v, w)z = v⟨w,z⟩ − w⟨v,z⟩ + z(−⟨v,w⟩ + ⟨w,v⟩)`.
pub fn negative_closed_form(
    eps: &[i8],
    v: &[Rational],
    w: &[Rational],
    z: &[Rational],
) -> Vec<Rational> {
    let n = eps.len();
    // complex scalar times vector, both in real coordinates
    let cmul = |(cr, ci): (Rational, Rational), x: &[Rational]| -> Vec<Rational> {
        let mut out = Vec::with_capacity(2 * n);
        for i in 0..n {
            out.push(&cr * &x[i] - &ci * &x[n + i]);
        }
        for i in 0..n {
            out.push(&cr * &x[n + i] + &ci * &x[i]);
        }
        out
    };
    let (vw_r, vw_i) = hermitian(eps, v, w);
    let (wv_r, wv_i) = hermitian(eps, w, v);
    let t1 = cmul(hermitian(eps, w, z), v);
    let t2 = cmul(hermitian(eps, v, z), w);
    let t3 = cmul((wv_r - vw_r, wv_i - vw_i), z);
    (0..2 * n).map(|i| &t1[i] - &t2[i] + &t3[i]).collect()
}
