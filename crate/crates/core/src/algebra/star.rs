//! The star map on the function subalgebra: antimultiplicative involution
//! with x^{alpha beta *} = eps^{beta gamma} x^{delta gamma} eps_{delta alpha},
//! extended copy-wise to the braided generators.

use super::engine::Engine;
use super::{Gen, NCElem};
use crate::error::{EngineError, Result};
use crate::scalar::QRat;

/// Star of a single quaternionic index: (alpha,beta) -> coefficient and
/// image index (3-beta', 3-alpha' style conjugation through eps).
pub(crate) fn star_index(i: u8) -> (QRat, u8) {
    let (al, be) = (i / 2, i % 2);
    // x^{ab*} = eps^{b g} x^{d g} eps_{d a}; both eps's have a single
    // nonzero entry at the swapped index.
    let g = 1 - be;
    let d = 1 - al;
    let hi = tensor_hi(be, g);
    let lo = tensor_lo(d, al);
    (hi * &lo, 2 * d + g)
}

fn tensor_hi(a: u8, b: u8) -> QRat {
    match (a, b) {
        (0, 1) => QRat::qpow(-1).neg(),
        (1, 0) => QRat::one(),
        _ => QRat::zero(),
    }
}

fn tensor_lo(a: u8, b: u8) -> QRat {
    match (a, b) {
        (0, 1) => QRat::one(),
        (1, 0) => QRat::q().neg(),
        _ => QRat::zero(),
    }
}

impl Engine {
    /// The antilinear antimultiplicative involution on the star-admissible
    /// subalgebra (x, y, rho, the radial coefficients and |z|^{-2}).
    pub fn star(&self, e: &NCElem) -> Result<NCElem> {
        self.validate(e)?;
        let mut out = NCElem::zero();
        for (w, c) in &e.terms {
            let mut coeff = c.clone(); // radial coefficients are real
            let mut word = Vec::with_capacity(w.len());
            for g in w.iter().rev() {
                match g {
                    Gen::Y(m, i) => {
                        let (f, j) = star_index(*i);
                        coeff = coeff.mul_in(&self.k(f), self.qctx());
                        word.push(Gen::Y(*m, j));
                    }
                    Gen::Rho(m) => word.push(Gen::Rho(*m)),
                    Gen::ZInv(m) => word.push(Gen::ZInv(*m)),
                    Gen::Xi(_) => {
                        return Err(EngineError::StarUndefined("xi (1-forms)".into()))
                    }
                    Gen::Pd(_) => {
                        return Err(EngineError::StarUndefined("partial derivatives".into()))
                    }
                    Gen::Lam(_) => return Err(EngineError::StarUndefined("Lambda".into())),
                }
            }
            let t = NCElem::from_term(coeff, word);
            let t = self.nf(&t)?;
            out = self.add(&out, &t);
        }
        Ok(out)
    }

    /// Star consistency of the rewrite rules: star(lhs) - star(rhs) must
    /// normal-form to zero for every rule on star-admissible words.
    /// Returns the offending rules (empty = consistent).
    pub fn star_rule_consistency(&self) -> Result<Vec<String>> {
        let mut bad = Vec::new();
        for lhs in self.rule_lhs() {
            let (a, b) = lhs;
            let admissible =
                |g: &Gen| matches!(g, Gen::Y(..) | Gen::Rho(_));
            if !admissible(&a) || !admissible(&b) {
                continue;
            }
            let lhs_elem = NCElem::from_term(crate::scalar::Radial::one(), vec![a, b]);
            let rhs_elem = self.rule_rhs(&lhs).unwrap();
            let ls = self.star(&lhs_elem)?;
            let rs = self.star(&rhs_elem)?;
            let resid = self.sub(&ls, &rs);
            if !resid.is_zero() {
                bad.push(format!("{:?} {:?}: residual {}", a, b, resid));
            }
        }
        Ok(bad)
    }
}
