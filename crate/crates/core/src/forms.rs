//! Graded differential calculus: degree-checked forms, matrices of forms,
//! Hodge duality on 2-forms with the (anti)self-dual split, the bases f,
//! f' and the potentials a, a-hat.

use crate::algebra::{Engine, Gen, NCElem};
use crate::error::{EngineError, Result};
use crate::scalar::{QRat, Radial};
use crate::tensor;
use serde_json::json;

/// A homogeneous form: an element together with its xi-degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Form {
    pub elem: NCElem,
    pub degree: usize,
}

impl Form {
    pub fn new(elem: NCElem) -> Result<Form> {
        let d = elem
            .xi_degree()
            .ok_or_else(|| EngineError::SectorViolation("element is not xi-homogeneous".into()))?;
        Ok(Form {
            elem,
            degree: d as usize,
        })
    }
}

/// An n x n matrix of elements sharing a configuration; products are
/// row-by-column with the wedge (algebra) product.
#[derive(Clone, PartialEq, Eq)]
pub struct MatForm {
    pub n: usize,
    pub e: Vec<NCElem>,
}

impl MatForm {
    pub fn zero(n: usize) -> Self {
        MatForm {
            n,
            e: vec![NCElem::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = MatForm::zero(n);
        for i in 0..n {
            m.e[i * n + i] = NCElem::scalar(Radial::one());
        }
        m
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> NCElem) -> Self {
        let mut m = MatForm::zero(n);
        for i in 0..n {
            for j in 0..n {
                m.e[i * n + j] = f(i, j);
            }
        }
        m
    }

    pub fn at(&self, i: usize, j: usize) -> &NCElem {
        &self.e[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: NCElem) {
        self.e[i * self.n + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> MatForm {
        MatForm::from_fn(self.n, |i, j| self.at(j, i).clone())
    }

    pub fn map(&self, f: impl Fn(&NCElem) -> NCElem) -> MatForm {
        MatForm {
            n: self.n,
            e: self.e.iter().map(f).collect(),
        }
    }

    pub fn try_map(&self, f: impl Fn(&NCElem) -> Result<NCElem>) -> Result<MatForm> {
        let mut e = Vec::with_capacity(self.e.len());
        for x in &self.e {
            e.push(f(x)?);
        }
        Ok(MatForm { n: self.n, e })
    }

    pub fn add(&self, eng: &Engine, other: &MatForm) -> MatForm {
        assert_eq!(self.n, other.n);
        MatForm {
            n: self.n,
            e: self
                .e
                .iter()
                .zip(&other.e)
                .map(|(a, b)| eng.add(a, b))
                .collect(),
        }
    }

    pub fn sub(&self, eng: &Engine, other: &MatForm) -> MatForm {
        assert_eq!(self.n, other.n);
        MatForm {
            n: self.n,
            e: self
                .e
                .iter()
                .zip(&other.e)
                .map(|(a, b)| eng.sub(a, b))
                .collect(),
        }
    }

    pub fn matmul(&self, eng: &Engine, other: &MatForm) -> Result<MatForm> {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = MatForm::zero(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = NCElem::zero();
                for k in 0..n {
                    let p = eng.mul(self.at(i, k), other.at(k, j))?;
                    acc = eng.add(&acc, &p);
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// Left multiplication by a scalar element.
    pub fn scale_elem(&self, eng: &Engine, c: &NCElem) -> Result<MatForm> {
        self.try_map(|x| eng.mul(c, x))
    }

    /// Right multiplication by a scalar element.
    pub fn scale_elem_right(&self, eng: &Engine, c: &NCElem) -> Result<MatForm> {
        self.try_map(|x| eng.mul(x, c))
    }

    pub fn scale_k(&self, eng: &Engine, c: QRat) -> MatForm {
        self.map(|x| eng.scale_k(c.clone(), x))
    }

    /// bar(a) = eps^{-1} a^T eps (2x2 only).
    pub fn bar(&self, eng: &Engine) -> Result<MatForm> {
        assert_eq!(self.n, 2, "bar is the 2x2 epsilon conjugation");
        let hi = tensor::eps_hi();
        let lo = tensor::eps_lo();
        let mut out = MatForm::zero(2);
        for i in 0..2 {
            for j in 0..2 {
                let mut acc = NCElem::zero();
                for k in 0..2 {
                    for l in 0..2 {
                        let c = hi[i][k].clone() * &lo[l][j];
                        if c.is_zero() {
                            continue;
                        }
                        acc = eng.add(&acc, &eng.scale_k(c, self.at(l, k)));
                    }
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// dagger: entrywise star, then transpose (star-admissible entries).
    pub fn dagger(&self, eng: &Engine) -> Result<MatForm> {
        let starred = self.try_map(|x| eng.star(x))?;
        Ok(starred.transpose())
    }

    /// Entrywise exterior derivative.
    pub fn d(&self, eng: &Engine) -> Result<MatForm> {
        self.try_map(|x| eng.d(x))
    }

    pub fn nf(&self, eng: &Engine) -> Result<MatForm> {
        self.try_map(|x| eng.nf(x))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<Vec<String>> = (0..self.n)
            .map(|i| (0..self.n).map(|j| self.at(i, j).print()).collect())
            .collect();
        json!(rows)
    }
}

impl std::fmt::Debug for MatForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_json())
    }
}

/// The 2x2 matrix of coordinate generators x^{alpha alpha'}.
pub fn x_matrix(eng: &Engine) -> MatForm {
    MatForm::from_fn(2, |i, j| eng.x(2 * i + j))
}

/// The 2x2 matrix of differentials xi^{alpha alpha'}.
pub fn xi_matrix(eng: &Engine) -> MatForm {
    MatForm::from_fn(2, |i, j| eng.xi(2 * i + j))
}

/// y_mu as a 2x2 matrix.
pub fn y_matrix(eng: &Engine, copy: usize) -> MatForm {
    MatForm::from_fn(2, |i, j| eng.y(copy, 2 * i + j))
}

/// The epsilon matrix as a constant MatForm.
pub fn eps_matform(eng: &Engine) -> MatForm {
    let lo = tensor::eps_lo();
    MatForm::from_fn(2, |i, j| NCElem::scalar(eng.k(lo[i][j].clone())))
}

/// Hodge star on 2-forms: the (P_a - P_a') coefficient action on the
/// leading xi-pair of every term; A-bilinear by construction.
pub fn hodge2(eng: &Engine, w: &NCElem) -> Result<NCElem> {
    apply_xi_pair_matrix(eng, w, &hodge_matrix())
}

/// Self-dual / antiself-dual split via P_a and P_a'.
pub fn decompose2(eng: &Engine, w: &NCElem) -> Result<(NCElem, NCElem)> {
    let (ps2, pa2) = tensor::build_proj2();
    let pa = tensor::interleave_kron(&ps2, &pa2);
    let pap = tensor::interleave_kron(&pa2, &ps2);
    Ok((
        apply_xi_pair_matrix(eng, w, &pa)?,
        apply_xi_pair_matrix(eng, w, &pap)?,
    ))
}

fn hodge_matrix() -> tensor::QMat {
    let (ps2, pa2) = tensor::build_proj2();
    let pa = tensor::interleave_kron(&ps2, &pa2);
    let pap = tensor::interleave_kron(&pa2, &ps2);
    pa.sub(&pap)
}

fn apply_xi_pair_matrix(eng: &Engine, w: &NCElem, m: &tensor::QMat) -> Result<NCElem> {
    match w.xi_degree() {
        Some(2) => {}
        Some(d) => {
            return Err(EngineError::WrongDegree {
                expected: 2,
                got: d as usize,
            })
        }
        None => {
            if w.is_zero() {
                return Ok(NCElem::zero());
            }
            return Err(EngineError::SectorViolation("inhomogeneous 2-form".into()));
        }
    }
    let mut out = NCElem::zero();
    for (word, c) in &w.terms {
        let (a, b) = match word.as_slice() {
            [Gen::Xi(a), Gen::Xi(b), ..] => (*a as usize, *b as usize),
            _ => {
                return Err(EngineError::SectorViolation(
                    "2-form term does not start with a xi pair".into(),
                ))
            }
        };
        let rest = &word[2..];
        for cc in 0..4usize {
            for dd in 0..4usize {
                let coeff = m.at(4 * a + b, 4 * cc + dd);
                if coeff.is_zero() {
                    continue;
                }
                let mut nw = vec![Gen::Xi(cc as u8), Gen::Xi(dd as u8)];
                nw.extend_from_slice(rest);
                let t = NCElem::from_term(c.mul_in(&eng.k(coeff.clone()), None), nw);
                out = eng.add(&out, &eng.nf(&t)?);
            }
        }
    }
    Ok(out)
}

/// Self-dual generators f^{alpha beta} = (xi xibar eps)^{alpha beta}.
pub fn build_f(eng: &Engine) -> Result<MatForm> {
    let xi = xi_matrix(eng);
    let xib = xi.bar(eng)?;
    xi.matmul(eng, &xib)?.matmul(eng, &eps_matform(eng))
}

/// Antiself-dual generators f'^{a'b'} = (xibar xi eps)^{a'b'}.
pub fn build_fprime(eng: &Engine) -> Result<MatForm> {
    let xi = xi_matrix(eng);
    let xib = xi.bar(eng)?;
    xib.matmul(eng, &xi)?.matmul(eng, &eps_matform(eng))
}

/// The potential a = P_s (xi eps x^T), with d a = f.
pub fn build_a(eng: &Engine) -> Result<MatForm> {
    let lo = tensor::eps_lo();
    let (ps2, _) = tensor::build_proj2();
    // (xi eps x^T)^{gd} = sum_{mn} xi^{gm} eps_{mn} x^{dn}
    let base = MatForm::from_fn(2, |g, d| {
        let mut acc = NCElem::zero();
        for m in 0..2 {
            for n in 0..2 {
                let c = lo[m][n].clone();
                if c.is_zero() {
                    continue;
                }
                let t = eng
                    .mul(&eng.xi(2 * g + m), &eng.x(2 * d + n))
                    .and_then(|p| eng.scalar(eng.k(c)).and_then(|s| eng.mul(&s, &p)))
                    .expect("polynomial product");
                acc = eng.add(&acc, &t);
            }
        }
        acc
    });
    // a^{ab} = Ps^{ab}_{gd} base^{gd}
    let mut out = MatForm::zero(2);
    for a in 0..2 {
        for b in 0..2 {
            let mut acc = NCElem::zero();
            for g in 0..2 {
                for d in 0..2 {
                    let c = ps2.at(2 * a + b, 2 * g + d);
                    if c.is_zero() {
                        continue;
                    }
                    acc = eng.add(&acc, &eng.scale_k(c.clone(), base.at(g, d)));
                }
            }
            out.set(a, b, acc);
        }
    }
    Ok(out)
}

/// a-hat = -xi xbar.
pub fn build_ahat(eng: &Engine) -> Result<MatForm> {
    let xi = xi_matrix(eng);
    let xb = x_matrix(eng).bar(eng)?;
    Ok(xi.matmul(eng, &xb)?.scale_k(eng, QRat::from_int(-1)))
}

/// Residuals of x xibar + xi xbar = (q^2-1) theta |x|^2 I2 and the barred
/// companion; both zero when the identity holds.
pub fn check_xblu(eng: &Engine) -> Result<(MatForm, MatForm)> {
    let x = x_matrix(eng);
    let xi = xi_matrix(eng);
    let xb = x.bar(eng)?;
    let xib = xi.bar(eng)?;
    // (q^2-1) theta = q^2 theta_scaled at the standard variant; in general
    // (q_v^2 - 1) theta_v = q_v^2 theta_scaled.
    let s = eng.sign();
    let rhs_scalar = eng.scale_k(QRat::qpow(2 * s), eng.theta_scaled());
    let u_elem = NCElem::scalar(Radial::u());
    let rhs_elem = eng.mul(&rhs_scalar, &u_elem)?;
    let rhs = MatForm::identity(2).scale_elem(eng, &rhs_elem)?;
    let lhs1 = x.matmul(eng, &xib)?.add(eng, &xi.matmul(eng, &xb)?);
    let lhs2 = xb.matmul(eng, &xi)?.add(eng, &xib.matmul(eng, &x)?);
    Ok((lhs1.sub(eng, &rhs), lhs2.sub(eng, &rhs)))
}

/// The second form of the xi-xi relations: (xi eps xi^T)^{gd} eps_{gd} = 0.
pub fn check_xi_eps_contraction(eng: &Engine) -> Result<NCElem> {
    let lo = tensor::eps_lo();
    let mut acc = NCElem::zero();
    for g in 0..2 {
        for d in 0..2 {
            for m in 0..2 {
                for n in 0..2 {
                    let c = lo[m][n].clone() * &lo[g][d];
                    if c.is_zero() {
                        continue;
                    }
                    let t = eng.mul(&eng.xi(2 * g + m), &eng.xi(2 * d + n))?;
                    acc = eng.add(&acc, &eng.scale_k(c, &t));
                }
            }
        }
    }
    Ok(acc)
}
