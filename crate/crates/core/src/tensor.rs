//! Constant tensors of the calculus: the epsilon tensor, the GL_q(2) braid
//! matrix, the 16x16 SO_q(4) braid matrix with its projector decomposition,
//! the isotropic metric, and the 4-index q-epsilon table.
//!
//! Index conventions, fixed once:
//!  - quaternionic indices run over {1,2}, stored 0-based;
//!  - a vector index a in (-2,-1,1,2) is identified positionally with the
//!    pair (alpha,alpha') in the order (11),(12),(21),(22), i.e. with the
//!    labels (1,2,3,4) of the linear identification x^1 = q x^11, x^2 =
//!    x^12, x^3 = -q x^21, x^4 = x^22;
//!  - a 16-dim pair index (a,b) is encoded 4a + b, row-major.

use crate::error::{EngineError, Result};
use crate::scalar::QRat;
use serde_json::json;
use std::fmt;

/// Dense square matrix over Q(q).
#[derive(Clone, PartialEq, Eq)]
pub struct QMat {
    pub n: usize,
    pub e: Vec<QRat>,
}

impl QMat {
    pub fn zero(n: usize) -> Self {
        QMat {
            n,
            e: vec![QRat::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMat::zero(n);
        for i in 0..n {
            *m.at_mut(i, i) = QRat::one();
        }
        m
    }

    pub fn at(&self, i: usize, j: usize) -> &QRat {
        &self.e[i * self.n + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut QRat {
        &mut self.e[i * self.n + j]
    }

    pub fn mul(&self, other: &QMat) -> QMat {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = QMat::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let t = a.clone() * b;
                    *out.at_mut(i, j) = out.at(i, j).clone() + t;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &QMat) -> QMat {
        assert_eq!(self.n, other.n);
        QMat {
            n: self.n,
            e: self
                .e
                .iter()
                .zip(&other.e)
                .map(|(a, b)| a.clone() + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &QMat) -> QMat {
        assert_eq!(self.n, other.n);
        QMat {
            n: self.n,
            e: self
                .e
                .iter()
                .zip(&other.e)
                .map(|(a, b)| a.clone() + b.clone().neg())
                .collect(),
        }
    }

    pub fn scale(&self, c: &QRat) -> QMat {
        QMat {
            n: self.n,
            e: self.e.iter().map(|a| a.clone() * c).collect(),
        }
    }

    pub fn transpose(&self) -> QMat {
        let mut out = QMat::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                *out.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().all(|a| a.is_zero())
    }

    /// Rank over Q(q) by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let n = self.n;
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..n {
            let pivot = (rank..n).find(|&r| !m.at(r, col).is_zero());
            let Some(p) = pivot else { continue };
            m.e.swap_chunks(p, rank, n);
            let inv = m.at(rank, col).inv().unwrap();
            for r in 0..n {
                if r != rank && !m.at(r, col).is_zero() {
                    let f = m.at(r, col).clone() * &inv;
                    for c in col..n {
                        let v = m.at(rank, c).clone() * &f;
                        *m.at_mut(r, c) = m.at(r, c).clone() + v.neg();
                    }
                }
            }
            rank += 1;
            if rank == n {
                break;
            }
        }
        rank
    }

    /// Inverse by Gauss-Jordan; None for singular matrices.
    pub fn inverse(&self) -> Option<QMat> {
        let n = self.n;
        let mut m = self.clone();
        let mut inv = QMat::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m.at(r, col).is_zero())?;
            m.e.swap_chunks(pivot, col, n);
            inv.e.swap_chunks(pivot, col, n);
            let piv = m.at(col, col).inv().ok()?;
            for c in 0..n {
                *m.at_mut(col, c) = m.at(col, c).clone() * &piv;
                *inv.at_mut(col, c) = inv.at(col, c).clone() * &piv;
            }
            for r in 0..n {
                if r != col && !m.at(r, col).is_zero() {
                    let f = m.at(r, col).clone();
                    for c in 0..n {
                        let a = m.at(col, c).clone() * &f;
                        *m.at_mut(r, c) = m.at(r, c).clone() + a.neg();
                        let b = inv.at(col, c).clone() * &f;
                        *inv.at_mut(r, c) = inv.at(r, c).clone() + b.neg();
                    }
                }
            }
        }
        Some(inv)
    }
}

trait SwapChunks {
    fn swap_chunks(&mut self, a: usize, b: usize, n: usize);
}

impl SwapChunks for Vec<QRat> {
    fn swap_chunks(&mut self, a: usize, b: usize, n: usize) {
        if a == b {
            return;
        }
        for c in 0..n {
            self.swap(a * n + c, b * n + c);
        }
    }
}

impl fmt::Debug for QMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            for j in 0..self.n {
                write!(f, "{}\t", self.at(i, j))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// A dense tensor with exact entries and explicit shape, exportable as JSON
/// arrays of canonical scalar strings.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorTable {
    pub shape: Vec<usize>,
    pub entries: Vec<QRat>,
}

impl TensorTable {
    pub fn new(shape: Vec<usize>) -> Self {
        let len = shape.iter().product();
        TensorTable {
            shape,
            entries: vec![QRat::zero(); len],
        }
    }

    pub fn idx(&self, ix: &[usize]) -> usize {
        debug_assert_eq!(ix.len(), self.shape.len());
        let mut flat = 0;
        for (d, i) in ix.iter().enumerate() {
            debug_assert!(*i < self.shape[d]);
            flat = flat * self.shape[d] + i;
        }
        flat
    }

    pub fn get(&self, ix: &[usize]) -> &QRat {
        &self.entries[self.idx(ix)]
    }

    pub fn set(&mut self, ix: &[usize], v: QRat) {
        let f = self.idx(ix);
        self.entries[f] = v;
    }

    pub fn from_qmat(m: &QMat) -> Self {
        TensorTable {
            shape: vec![m.n, m.n],
            entries: m.e.clone(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "shape": self.shape,
            "entries": self.entries.iter().map(|e| e.to_string()).collect::<Vec<_>>(),
        })
    }
}

fn q() -> QRat {
    QRat::q()
}
fn qp(k: i64) -> QRat {
    QRat::qpow(k)
}

/// epsilon_{alpha beta}: eps_12 = 1, eps_21 = -q.
pub fn eps_lo() -> [[QRat; 2]; 2] {
    [
        [QRat::zero(), QRat::one()],
        [QRat::from_int(-1) * q(), QRat::zero()],
    ]
}

/// epsilon^{alpha beta} (the inverse matrix): eps^12 = -q^-1, eps^21 = 1.
pub fn eps_hi() -> [[QRat; 2]; 2] {
    [
        [QRat::zero(), QRat::from_int(-1) * qp(-1)],
        [QRat::one(), QRat::zero()],
    ]
}

/// Q := -eps^{-1} eps^T = diag(q^-1, q).
pub fn q_matrix() -> [[QRat; 2]; 2] {
    [
        [qp(-1), QRat::zero()],
        [QRat::zero(), qp(1)],
    ]
}

/// Pair encoding (alpha, beta) -> 2 alpha + beta for 0-based indices.
fn pair2(a: usize, b: usize) -> usize {
    2 * a + b
}

/// The GL_q(2) braid matrix R^{ab}_{cd} = q d^a_c d^b_d + eps^{ab} eps_{cd},
/// a 4x4 table on the pair alphabet (11),(12),(21),(22).
pub fn build_rhat2() -> QMat {
    let lo = eps_lo();
    let hi = eps_hi();
    let mut m = QMat::zero(4);
    for a in 0..2 {
        for b in 0..2 {
            for c in 0..2 {
                for d in 0..2 {
                    let mut v = QRat::zero();
                    if a == c && b == d {
                        v = v + q();
                    }
                    v = v + hi[a][b].clone() * &lo[c][d];
                    *m.at_mut(pair2(a, b), pair2(c, d)) = v;
                }
            }
        }
    }
    m
}

/// R^{-1} = R - (q - q^{-1}) from the Hecke relation.
pub fn build_rhat2_inv() -> QMat {
    let r = build_rhat2();
    let shift = QMat::identity(4).scale(&(q() + (QRat::from_int(-1) * qp(-1))));
    r.sub(&shift)
}

/// GL_q(2) projectors: P_a^{ab}_{cd} = -eps^{ab} eps_{cd} / (q + q^-1),
/// P_s = 1 - P_a.
pub fn build_proj2() -> (QMat, QMat) {
    let lo = eps_lo();
    let hi = eps_hi();
    let inv2q = QRat::two_q().inv().unwrap();
    let mut pa = QMat::zero(4);
    for a in 0..2 {
        for b in 0..2 {
            for c in 0..2 {
                for d in 0..2 {
                    let v = (hi[a][b].clone() * &lo[c][d]) * &inv2q;
                    *pa.at_mut(pair2(a, b), pair2(c, d)) = v.neg();
                }
            }
        }
    }
    let ps = QMat::identity(4).sub(&pa);
    (ps, pa)
}

/// Diagonal entries of B on the pair alphabet: (q, 1, -q, 1).
pub fn b_diag() -> [QRat; 4] {
    [q(), QRat::one(), QRat::from_int(-1) * q(), QRat::one()]
}

/// Interleaved tensor square: M2[(i,j),(k,l)] = A[(a,b),(g,d)] *
/// B[(a',b'),(g',d')] where i = (a,a'), j = (b,b'), etc. This is the action
/// of A on unprimed and B on primed quaternionic slots.
pub fn interleave_kron(a4: &QMat, b4: &QMat) -> QMat {
    assert_eq!(a4.n, 4);
    assert_eq!(b4.n, 4);
    let mut out = QMat::zero(16);
    for al in 0..2 {
        for alp in 0..2 {
            for be in 0..2 {
                for bep in 0..2 {
                    for ga in 0..2 {
                        for gap in 0..2 {
                            for de in 0..2 {
                                for dep in 0..2 {
                                    let v = a4.at(pair2(al, be), pair2(ga, de)).clone()
                                        * b4.at(pair2(alp, bep), pair2(gap, dep));
                                    if v.is_zero() {
                                        continue;
                                    }
                                    let i = pair2(al, alp);
                                    let j = pair2(be, bep);
                                    let k = pair2(ga, gap);
                                    let l = pair2(de, dep);
                                    let r = 4 * i + j;
                                    let c = 4 * k + l;
                                    *out.at_mut(r, c) = out.at(r, c).clone() + v;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// Conjugate by the diagonal change of basis B (x B) B^{-1}.
fn b_conjugate(m: &QMat) -> QMat {
    let b = b_diag();
    let mut out = m.clone();
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                for l in 0..4 {
                    let r = 4 * i + j;
                    let c = 4 * k + l;
                    if out.at(r, c).is_zero() {
                        continue;
                    }
                    let f = (b[i].clone() * &b[j]) * &(b[k].clone() * &b[l]).inv().unwrap();
                    *out.at_mut(r, c) = out.at(r, c).clone() * &f;
                }
            }
        }
    }
    out
}

/// The 16x16 SO_q(4) braid matrix q^{-1} B (R x R) B^{-1}.
pub fn build_rhat4() -> QMat {
    let r = build_rhat2();
    b_conjugate(&interleave_kron(&r, &r)).scale(&qp(-1))
}

pub struct Projectors {
    pub ps: QMat,
    pub pa: QMat,
    pub pap: QMat,
    pub pbig_a: QMat,
    pub pt: QMat,
}

/// The five SO_q(4) projectors from the GL_q(2) pair: P_s = s x s,
/// P_t = a x a, P_a = s x a, P_a' = a x s (B-conjugated), P_A = P_a + P_a'.
pub fn build_projectors() -> Projectors {
    let (s, a) = build_proj2();
    let ps = b_conjugate(&interleave_kron(&s, &s));
    let pt = b_conjugate(&interleave_kron(&a, &a));
    let pa = b_conjugate(&interleave_kron(&s, &a));
    let pap = b_conjugate(&interleave_kron(&a, &s));
    let pbig_a = pa.add(&pap);
    Projectors {
        ps,
        pa,
        pap,
        pbig_a,
        pt,
    }
}

/// Metric g_{ab} = B^{-1} B^{-1} eps eps contraction; an antidiagonal table.
pub fn build_metric_lo() -> QMat {
    let lo = eps_lo();
    let b = b_diag();
    let mut g = QMat::zero(4);
    for al in 0..2 {
        for alp in 0..2 {
            for be in 0..2 {
                for bep in 0..2 {
                    let a = pair2(al, alp);
                    let bb = pair2(be, bep);
                    let v = (b[a].clone().inv().unwrap() * &b[bb].inv().unwrap())
                        * &(lo[al][be].clone() * &lo[alp][bep]);
                    *g.at_mut(a, bb) = v;
                }
            }
        }
    }
    g
}

pub fn build_metric_hi() -> QMat {
    build_metric_lo().inverse().expect("metric is invertible")
}

/// The 24 fixed entries of the 4-index q-epsilon table, as (labels, value).
/// Labels use the paper alphabet (-2,-1,1,2) mapped positionally to 0..3.
fn eps4_fixed() -> Vec<([usize; 4], QRat)> {
    // label mapping: -2 -> 0, -1 -> 1, 1 -> 2, 2 -> 3
    let e = |a: i32| -> usize {
        match a {
            -2 => 0,
            -1 => 1,
            1 => 2,
            2 => 3,
            _ => unreachable!(),
        }
    };
    let mk = |a: i32, b: i32, c: i32, d: i32, v: QRat| ([e(a), e(b), e(c), e(d)], v);
    vec![
        mk(-2, -1, 1, 2, qp(-2)),
        mk(-2, 1, -1, 2, qp(-2).neg()),
        mk(-2, -1, 2, 1, qp(-1).neg()),
        mk(-2, 1, 2, -1, qp(-1)),
        mk(-2, 2, -1, 1, QRat::one()),
        mk(-2, 2, 1, -1, QRat::one().neg()),
        mk(-1, -2, 1, 2, qp(-1).neg()),
        mk(-1, 1, -2, 2, QRat::one()),
        mk(-1, -2, 2, 1, QRat::one()),
        mk(-1, 2, -2, 1, QRat::one().neg()),
        mk(-1, 2, 1, -2, qp(1)),
        mk(-1, 1, 2, -2, QRat::one().neg()),
        mk(1, -1, -2, 2, QRat::one().neg()),
        mk(1, -2, -1, 2, qp(-1)),
        mk(1, -1, 2, -2, QRat::one()),
        mk(1, 2, -1, -2, qp(1).neg()),
        mk(1, 2, -2, -1, QRat::one()),
        mk(1, -2, 2, -1, QRat::one().neg()),
        mk(2, -2, -1, 1, QRat::one().neg()),
        mk(2, -1, -2, 1, qp(1)),
        mk(2, 1, -2, -1, qp(1).neg()),
        mk(2, -2, 1, -1, QRat::one()),
        mk(2, -1, 1, -2, qp(2).neg()),
        mk(2, 1, -1, -2, qp(2)),
    ]
}

/// The two k-components: eps^{-1,1,-1,1} = k and eps^{1,-1,1,-1} = -k.
fn eps4_kslots() -> Vec<([usize; 4], i64)> {
    vec![([1, 2, 1, 2], 1), ([2, 1, 2, 1], -1)]
}

/// Build the 4-index table with the given value of k.
pub fn build_eps4(k: &QRat) -> TensorTable {
    let mut t = TensorTable::new(vec![4, 4, 4, 4]);
    for (ix, v) in eps4_fixed() {
        t.set(&ix, v);
    }
    for (ix, sign) in eps4_kslots() {
        t.set(&ix, QRat::from_int(sign) * k);
    }
    t
}

/// Lower the first two slots of eps^{abij} with the metric, producing
/// eps_{kh}{}^{ij} as a 16x16 coefficient matrix indexed (row = (i,j),
/// col = (h,k)), matching the Hodge expansion *xi^i xi^j =
/// (1/[2]) xi^h xi^k eps_{kh}{}^{ij}.
fn eps4_lowered_as_hodge_matrix(t: &TensorTable) -> QMat {
    let g = build_metric_lo();
    let mut m = QMat::zero(16);
    for i in 0..4 {
        for j in 0..4 {
            for h in 0..4 {
                for k in 0..4 {
                    // eps_{kh}^{ij} = g_{ka} g_{hb} eps^{abij}
                    let mut v = QRat::zero();
                    for a in 0..4 {
                        if g.at(k, a).is_zero() {
                            continue;
                        }
                        for b in 0..4 {
                            if g.at(h, b).is_zero() {
                                continue;
                            }
                            let e = t.get(&[a, b, i, j]);
                            if e.is_zero() {
                                continue;
                            }
                            v = v + (g.at(k, a).clone() * g.at(h, b)) * e;
                        }
                    }
                    *m.at_mut(4 * i + j, 4 * h + k) = v;
                }
            }
        }
    }
    m
}

/// Solve for the unique k making (1/[2]) eps_{kh}{}^{ij} equal to
/// (P_a - P_a')^{ij}_{hk} entrywise. Linear in k, so two table instances
/// suffice; errors if the system is inconsistent or k does not appear.
pub fn resolve_k() -> Result<QRat> {
    let pr = build_projectors();
    let target = pr.pa.sub(&pr.pap);
    let inv2 = QRat::two_q().inv().unwrap();
    let m0 = eps4_lowered_as_hodge_matrix(&build_eps4(&QRat::zero())).scale(&inv2);
    let m1 = eps4_lowered_as_hodge_matrix(&build_eps4(&QRat::one())).scale(&inv2);
    // m(k) = m0 + k (m1 - m0); solve m(k) = target entrywise.
    let dir = m1.sub(&m0);
    let mut k: Option<QRat> = None;
    for idx in 0..256 {
        let a = &dir.e[idx];
        let b = target.e[idx].clone() + m0.e[idx].clone().neg();
        if a.is_zero() {
            if !b.is_zero() {
                return Err(EngineError::NoSolution);
            }
            continue;
        }
        let cand = b.div(a)?;
        match &k {
            None => k = Some(cand),
            Some(prev) => {
                if *prev != cand {
                    return Err(EngineError::NonUnique);
                }
            }
        }
    }
    k.ok_or(EngineError::UnresolvedConstant)
}

/// Verify eps_{al} R^{+-1 lm}_{bg} = q^{+-1} R^{-+1 ml}_{ab} eps_{lg} for
/// both signs; returns residual matrices (zero when the identity holds).
pub fn check_eps_rhat_identity() -> (QMat, QMat) {
    let lo = eps_lo();
    let rp = build_rhat2();
    let rm = build_rhat2_inv();
    let check = |rr: &QMat, other: &QMat, sign: i64| -> QMat {
        // residual[(a,b),(g,m)] = sum_l eps_{al} R^{lm}_{bg}
        //                       - q^{sign} sum_l R'^{ml}_{ab} eps_{lg}
        let mut res = QMat::zero(4);
        for a in 0..2 {
            for b in 0..2 {
                for g in 0..2 {
                    for m in 0..2 {
                        let mut lhs = QRat::zero();
                        let mut rhs = QRat::zero();
                        for l in 0..2 {
                            lhs = lhs + lo[a][l].clone() * rr.at(pair2(l, m), pair2(b, g));
                            rhs = rhs + other.at(pair2(m, l), pair2(a, b)).clone() * &lo[l][g];
                        }
                        let v = lhs + (rhs * &qp(sign)).neg();
                        *res.at_mut(pair2(a, b), pair2(g, m)) = v;
                    }
                }
            }
        }
        res
    };
    (check(&rp, &rm, 1), check(&rm, &rp, -1))
}

/// Braid-equation residual for a matrix acting on V x V with dim(V) = dim:
/// (M x 1)(1 x M)(M x 1) - (1 x M)(M x 1)(1 x M) on V^3.
pub fn braid_residual(m: &QMat, dim: usize) -> QMat {
    assert_eq!(m.n, dim * dim);
    let n3 = dim * dim * dim;
    let mut m1 = QMat::zero(n3); // M x 1
    let mut m2 = QMat::zero(n3); // 1 x M
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                for l in 0..dim {
                    let v = m.at(dim * i + j, dim * k + l);
                    if v.is_zero() {
                        continue;
                    }
                    for t in 0..dim {
                        *m1.at_mut((i * dim + j) * dim + t, (k * dim + l) * dim + t) = v.clone();
                        *m2.at_mut((t * dim + i) * dim + j, (t * dim + k) * dim + l) = v.clone();
                    }
                }
            }
        }
    }
    m1.mul(&m2).mul(&m1).sub(&m2.mul(&m1).mul(&m2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigRational;
    use num::FromPrimitive;

    #[test]
    fn eps_entries_and_inverse() {
        let lo = eps_lo();
        assert_eq!(lo[0][1], QRat::one());
        assert_eq!(lo[1][0], QRat::from_int(-1) * QRat::q());
        // eps = -q eps^{-1}: lo[a][b] == -q * hi[a][b]
        let hi = eps_hi();
        for a in 0..2 {
            for b in 0..2 {
                assert_eq!(lo[a][b], (QRat::from_int(-1) * QRat::q()) * &hi[a][b]);
            }
        }
    }

    #[test]
    fn rhat2_symmetric_and_hecke() {
        let r = build_rhat2();
        assert_eq!(r, r.transpose());
        // R^2 = (q - q^-1) R + 1
        let r2 = r.mul(&r);
        let rhs = r
            .scale(&(QRat::q() + (QRat::from_int(-1) * QRat::qpow(-1))))
            .add(&QMat::identity(4));
        assert!(r2.sub(&rhs).is_zero());
        // and therefore R^{-1} as built is a true inverse
        assert!(r.mul(&build_rhat2_inv()).sub(&QMat::identity(4)).is_zero());
    }

    #[test]
    fn rhat2_classical_limit_is_flip() {
        let r = build_rhat2();
        let one = BigRational::from_i64(1).unwrap();
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    for d in 0..2 {
                        let v = r.at(2 * a + b, 2 * c + d).eval(&one).unwrap();
                        let expect = if a == d && b == c { 1 } else { 0 };
                        assert_eq!(v, BigRational::from_i64(expect).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn proj2_idempotent_orthogonal() {
        let (s, a) = build_proj2();
        assert!(s.mul(&s).sub(&s).is_zero());
        assert!(a.mul(&a).sub(&a).is_zero());
        assert!(s.mul(&a).is_zero());
        assert_eq!(s.rank(), 3);
        assert_eq!(a.rank(), 1);
        // R = q P_s - q^{-1} P_a
        let r = s.scale(&QRat::q()).sub(&a.scale(&QRat::qpow(-1)));
        assert!(r.sub(&build_rhat2()).is_zero());
    }

    #[test]
    fn metric_antidiagonal_values() {
        let g = build_metric_lo();
        // g = antidiag(q^-1, 1, 1, q) reading rows 0..3
        assert_eq!(*g.at(0, 3), QRat::qpow(-1));
        assert_eq!(*g.at(1, 2), QRat::one());
        assert_eq!(*g.at(2, 1), QRat::one());
        assert_eq!(*g.at(3, 0), QRat::q());
        for i in 0..4 {
            for j in 0..4 {
                if i + j != 3 {
                    assert!(g.at(i, j).is_zero());
                }
            }
        }
    }

    #[test]
    fn gg_trace_is_two_q_squared() {
        let glo = build_metric_lo();
        let ghi = build_metric_hi();
        let mut tr = QRat::zero();
        for s in 0..4 {
            for m in 0..4 {
                tr = tr + ghi.at(s, m).clone() * glo.at(s, m);
            }
        }
        let expect = QRat::two_q() * &QRat::two_q();
        assert_eq!(tr, expect);
    }

    #[test]
    fn eps4_count() {
        let t = build_eps4(&QRat::one());
        let nz = t.entries.iter().filter(|e| !e.is_zero()).count();
        assert_eq!(nz, 26);
        // first listed entry: eps^{-2,-1,1,2} = q^-2 at positions (0,1,2,3)
        assert_eq!(*t.get(&[0, 1, 2, 3]), QRat::qpow(-2));
        // eps^{2,-1,1,-2} = -q^2
        assert_eq!(*t.get(&[3, 1, 2, 0]), QRat::from_int(-1) * QRat::qpow(2));
    }

    #[test]
    fn qmatrix_diagonal() {
        let qm = q_matrix();
        assert_eq!(qm[0][0], QRat::qpow(-1));
        assert_eq!(qm[1][1], QRat::q());
        assert!(qm[0][1].is_zero() && qm[1][0].is_zero());
    }
}
