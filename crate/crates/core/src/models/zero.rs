//! `λ = 0`: `𝔭 = Z ⊕ Z* ⊕ V` with `Z = Im A`, `A` nonzero only on `Z*`.
//!
//! Coordinates are `(u, v, w)` with `u ∈ Z = ℝʳ`, `v ∈ Z* = ℝʳ`,
//! `w ∈ V = ℝ^{2n−2r}`. Elements of `𝔨` have the block form
//! `[[K, L, −MᵀJ′], [0, −Kᵀ, 0], [0, M, 0]]` with `KᵀA′ + A′K = 0`,
//! `Lᵀ = L`.

use serde::{Deserialize, Serialize};

use crate::curvature::ricci_type_curvature;
use crate::error::{Error, Result};
use crate::linalg::{standard_omega, unit_vector, Endo, Matrix, QMatrix, SympSpace};
use crate::scalar::{QuadExt, Rational};
use crate::triple::SymmetricTriple;

use super::embedding::{Embedding, TargetAlgebra};

#[derive(Clone, Debug, PartialEq)]
pub struct ZeroModel {
    pub n: usize,
    pub rank: usize,
    pub p: usize,
    pub q: usize,
    /// Diagonal of `A′`: `p` plus signs, then `q` minus signs.
    pub a_prime: Vec<i8>,
    pub ricci_endo: Endo,
    pub triple: SymmetricTriple,
    /// Which `k_basis` entries are of type K, L and M.
    pub k_kinds: Vec<BlockKind>,
    /// `𝔯 = {(0, L, M, u, 0, w)}` in `𝔤` coordinates.
    pub radical_basis: Vec<Vec<Rational>>,
    /// `{(K, 0, 0, 0, v, 0)}` in `𝔤` coordinates.
    pub levi_basis: Vec<Vec<Rational>>,
    /// `(K, v) ↦ [[K, −√κ A′v], [−√κ vᵀ, 0]] ∈ 𝔰𝔬(p, q+1)`.
    pub levi_map: Embedding<QuadExt>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BlockKind {
    K,
    L,
    M,
}

/// Symplectic matrix `[[0, −I, 0], [I, 0, 0], [0, 0, J′]]`.
pub fn zero_omega(n: usize, r: usize) -> QMatrix {
    let mut omega = QMatrix::zeros(2 * n, 2 * n);
    omega.set_block(0, 0, &standard_omega(r));
    if n > r {
        omega.set_block(2 * r, 2 * r, &standard_omega(n - r));
    }
    omega
}

struct Blocks<'a> {
    n: usize,
    r: usize,
    jp: &'a QMatrix,
}

impl Blocks<'_> {
    fn assemble(&self, k: &QMatrix, l: &QMatrix, m: &QMatrix) -> Endo {
        let (n, r) = (self.n, self.r);
        let mut out = QMatrix::zeros(2 * n, 2 * n);
        out.set_block(0, 0, k);
        out.set_block(0, r, l);
        out.set_block(r, r, &k.transpose().neg());
        if n > r {
            out.set_block(0, 2 * r, &m.transpose().mul(self.jp).neg());
            out.set_block(2 * r, r, m);
        }
        out
    }

    /// `(K, L, M)` read back from a block matrix, without checking its shape.
    fn split(&self, c: &Endo) -> (QMatrix, QMatrix, QMatrix) {
        let (n, r) = (self.n, self.r);
        (
            c.submatrix(0, 0, r, r),
            c.submatrix(0, r, r, r),
            c.submatrix(2 * r, r, 2 * (n - r), r),
        )
    }
}

pub fn build_zero_model(n: usize, rank: usize, p: usize, q: usize) -> Result<ZeroModel> {
    if n < 2 {
        return Err(Error::InvalidParams(format!("n = {n}, expected n >= 2")));
    }
    if rank < 1 || rank > n {
        return Err(Error::InvalidParams(format!(
            "rank = {rank}, expected 1 <= rank <= {n}"
        )));
    }
    if p + q != rank {
        return Err(Error::InvalidParams(format!(
            "p + q = {} but rank = {rank}",
            p + q
        )));
    }
    let r = rank;
    let w_dim = 2 * (n - r);
    let mut a_prime = vec![1i8; p];
    a_prime.extend(vec![-1i8; q]);
    let ap = QMatrix::diagonal(
        &a_prime
            .iter()
            .map(|&x| Rational::from_int(x as i64))
            .collect::<Vec<_>>(),
    );
    let jp = standard_omega(n - r);
    let blocks = Blocks { n, r, jp: &jp };

    let space = SympSpace::new(zero_omega(n, r))?;
    let mut ricci_endo = QMatrix::zeros(2 * n, 2 * n);
    ricci_endo.set_block(0, r, &ap);

    let zr = QMatrix::zeros(r, r);
    let zm = QMatrix::zeros(w_dim, r);
    let mut k_basis = Vec::new();
    let mut k_kinds = Vec::new();
    let mut k_blocks = Vec::new();
    for a in 0..r {
        for b in a + 1..r {
            let k = ap.mul(&QMatrix::unit(r, r, a, b).sub(&QMatrix::unit(r, r, b, a)));
            k_basis.push(blocks.assemble(&k, &zr, &zm));
            k_kinds.push(BlockKind::K);
            k_blocks.push(k);
        }
    }
    for a in 0..r {
        for b in a..r {
            let mut l = QMatrix::unit(r, r, a, b);
            if a != b {
                l = l.add(&QMatrix::unit(r, r, b, a));
            }
            k_basis.push(blocks.assemble(&zr, &l, &zm));
            k_kinds.push(BlockKind::L);
        }
    }
    for c in 0..w_dim {
        for a in 0..r {
            k_basis.push(blocks.assemble(&zr, &zr, &QMatrix::unit(w_dim, r, c, a)));
            k_kinds.push(BlockKind::M);
        }
    }
    let curvature = ricci_type_curvature(&space, &ricci_endo)?;
    let triple = SymmetricTriple::with_k_basis(&curvature, k_basis)?;
    let dim = triple.dim();
    let m = triple.dim_k();

    let mut radical_basis = Vec::new();
    let mut levi_basis = Vec::new();
    for (idx, kind) in k_kinds.iter().enumerate() {
        match kind {
            BlockKind::K => levi_basis.push(unit_vector(dim, idx)),
            _ => radical_basis.push(unit_vector(dim, idx)),
        }
    }
    for i in 0..2 * n {
        let is_v = (r..2 * r).contains(&i);
        let v = unit_vector(dim, m + i);
        if is_v {
            levi_basis.push(v);
        } else {
            radical_basis.push(v);
        }
    }

    // √κ = √(1/(2n+2)) in ℚ(√(2n+2))
    let root = QuadExt::sqrt_of(&space.kappa())?;
    let lift = |x: &Rational| QuadExt::from_rational(x.clone());
    let mut images: Vec<Matrix<QuadExt>> = Vec::new();
    for k in &k_blocks {
        let mut img = Matrix::zeros(r + 1, r + 1);
        img.set_block(0, 0, &k.map(lift));
        images.push(img);
    }
    for a in 0..r {
        let mut img = Matrix::<QuadExt>::zeros(r + 1, r + 1);
        let sign = QuadExt::from_rational(Rational::from_int(a_prime[a] as i64));
        img[(a, r)] = -(&root * &sign);
        img[(r, a)] = -root.clone();
        images.push(img);
    }
    let mut eta = a_prime.clone();
    eta.push(-1);
    let levi_map = Embedding {
        target_dim: r + 1,
        domain: levi_basis.clone(),
        images,
        target: TargetAlgebra::Orthogonal { eta },
    };

    Ok(ZeroModel {
        n,
        rank,
        p,
        q,
        a_prime,
        ricci_endo,
        triple,
        k_kinds,
        radical_basis,
        levi_basis,
        levi_map,
    })
}

/// Comparison of the printed `λ = 0` bracket tables with the brackets
/// generated from the Ricci-type curvature.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrintedTableReport {
    /// Generated `[𝔭, 𝔭]` values have the `{K, L, M}` block shape.
    pub pp_block_shape: bool,
    pub kk_matches: bool,
    pub kp_matches: bool,
    pub pp_k_matches: bool,
    pub pp_l_matches: bool,
    pub pp_m_matches: bool,
    /// Basis pairs `(i, j)` of `𝔭` where some printed `[𝔭, 𝔭]` block differs.
    pub pp_mismatches: Vec<(usize, usize)>,
}

impl PrintedTableReport {
    pub fn all_match(&self) -> bool {
        self.pp_block_shape
            && self.kk_matches
            && self.kp_matches
            && self.pp_k_matches
            && self.pp_l_matches
            && self.pp_m_matches
    }
}

struct PrintedPp {
    k: QMatrix,
    l: QMatrix,
    m: QMatrix,
}

fn split_uvw(x: &[Rational], r: usize) -> (QMatrix, QMatrix, QMatrix) {
    (
        QMatrix::column(&x[..r]),
        QMatrix::column(&x[r..2 * r]),
        QMatrix::column(&x[2 * r..]),
    )
}

/// `[(u,v,w),(u′,v′,w′)] = −k(K̃, L̃, M̃)` as printed, with
/// `K̃ = A′(v′ᵗv − vᵗv′)`, `L̃ = A′B + ᵗBA′ + 2(Tr B + ᵗwJ′w′)A′`,
/// `B = vᵗu′ − v′ᵗu`, `M̃ = −ᵗ(A′(v′ᵗw − vᵗw′))`. The upper right block
/// `−{}t{M̃}J′` is read as `−ᵗM̃J′`.
fn printed_pp(
    model: &ZeroModel,
    ap: &QMatrix,
    jp: &QMatrix,
    x: &[Rational],
    y: &[Rational],
) -> PrintedPp {
    let r = model.rank;
    let kappa = model.triple.space().kappa();
    let (u, v, w) = split_uvw(x, r);
    let (u2, v2, w2) = split_uvw(y, r);
    let kt = ap.mul(&v2.mul(&v.transpose()).sub(&v.mul(&v2.transpose())));
    let b = v.mul(&u2.transpose()).sub(&v2.mul(&u.transpose()));
    let wjw = if w.rows() > 0 {
        w.transpose().mul(jp).mul(&w2)[(0, 0)].clone()
    } else {
        Rational::zero()
    };
    let trace_term = Rational::from_int(2) * (b.trace() + &wjw);
    let lt = ap
        .mul(&b)
        .add(&b.transpose().mul(ap))
        .add(&ap.scale(&trace_term));
    let mt = ap
        .mul(&v2.mul(&w.transpose()).sub(&v.mul(&w2.transpose())))
        .transpose()
        .neg();
    let c = -kappa;
    PrintedPp {
        k: kt.scale(&c),
        l: lt.scale(&c),
        m: mt.scale(&c),
    }
}

/// Evaluates the printed `λ = 0` tables against the generated brackets on
/// every basis pair.
pub fn printed_table_report(model: &ZeroModel) -> PrintedTableReport {
    let n = model.n;
    let r = model.rank;
    let t = &model.triple;
    let ap = QMatrix::diagonal(
        &model
            .a_prime
            .iter()
            .map(|&x| Rational::from_int(x as i64))
            .collect::<Vec<_>>(),
    );
    let jp = standard_omega(n - r);
    let blocks = Blocks { n, r, jp: &jp };
    let d = 2 * n;

    let mut pp_block_shape = true;
    let (mut pp_k, mut pp_l, mut pp_m) = (true, true, true);
    let mut pp_mismatches = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            let generated = t.pp_value(i, j);
            let (gk, gl, gm) = blocks.split(&generated);
            if blocks.assemble(&gk, &gl, &gm) != generated {
                pp_block_shape = false;
            }
            let ei = unit_vector(d, i);
            let ej = unit_vector(d, j);
            let printed = printed_pp(model, &ap, &jp, &ei, &ej);
            let ok = (printed.k == gk, printed.l == gl, printed.m == gm);
            pp_k &= ok.0;
            pp_l &= ok.1;
            pp_m &= ok.2;
            if !(ok.0 && ok.1 && ok.2) {
                pp_mismatches.push((i, j));
            }
        }
    }

    // [(K,L,M),(K′,L′,M′)] = ([K,K′], L″, −MᵗK′ + M′ᵗK),
    // L″ = KL′ − LᵗK′ − K′L + L′ᵗK − ᵗMJ′M′ + ᵗM′J′M
    let mut kk_matches = true;
    let ks = t.k_basis();
    for a in 0..ks.len() {
        for b in a + 1..ks.len() {
            let (k1, l1, m1) = blocks.split(&ks[a]);
            let (k2, l2, m2) = blocks.split(&ks[b]);
            let kk = k1.commutator(&k2);
            let mut ll = k1
                .mul(&l2)
                .sub(&l1.mul(&k2.transpose()))
                .sub(&k2.mul(&l1))
                .add(&l2.mul(&k1.transpose()));
            let mut mm = m2.mul(&k1.transpose()).sub(&m1.mul(&k2.transpose()));
            if n > r {
                ll = ll
                    .sub(&m1.transpose().mul(&jp).mul(&m2))
                    .add(&m2.transpose().mul(&jp).mul(&m1));
            } else {
                mm = QMatrix::zeros(0, r);
            }
            let printed = blocks.assemble(&kk, &ll, &mm);
            if printed != ks[a].commutator(&ks[b]) {
                kk_matches = false;
            }
        }
    }

    // [(K,L,M),(u,v,w)] = (Ku + Lv − ᵗMJ′w, −ᵗKv, Mv)
    let mut kp_matches = true;
    for c in ks {
        let (k, l, m) = blocks.split(c);
        for i in 0..d {
            let e = unit_vector(d, i);
            let (u, v, w) = split_uvw(&e, r);
            let mut top = k.mul(&u).add(&l.mul(&v));
            let mut bottom = QMatrix::zeros(0, 1);
            if n > r {
                top = top.sub(&m.transpose().mul(&jp).mul(&w));
                bottom = m.mul(&v);
            }
            let mid = k.transpose().mul(&v).neg();
            let mut printed = top.into_flat();
            printed.extend(mid.into_flat());
            printed.extend(bottom.into_flat());
            if printed != c.col(i) {
                kp_matches = false;
            }
        }
    }

    PrintedTableReport {
        pp_block_shape,
        kk_matches,
        kp_matches,
        pp_k_matches: pp_k,
        pp_l_matches: pp_l,
        pp_m_matches: pp_m,
        pp_mismatches,
    }
}
