//! Rational functions in (q, u, p) with integer-coefficient numerator and
//! denominator in canonical form: gcd(num, den) = 1 (including integer
//! content) and positive leading denominator coefficient.

use super::mpoly::{self, MPoly, NVARS, VAR_P, VAR_Q, VAR_U};
use crate::error::{EngineError, Result};
use num::bigint::Sign;
use num::{BigInt, BigRational, One, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MRat {
    pub num: MPoly,
    pub den: MPoly,
}

impl MRat {
    pub fn zero() -> Self {
        MRat {
            num: MPoly::zero(),
            den: MPoly::one(),
        }
    }

    pub fn one() -> Self {
        MRat {
            num: MPoly::one(),
            den: MPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        MRat {
            num: MPoly::constant(BigInt::from(n)),
            den: MPoly::one(),
        }
    }

    pub fn from_big(n: BigInt) -> Self {
        MRat {
            num: MPoly::constant(n),
            den: MPoly::one(),
        }
    }

    pub fn from_ratio(r: &BigRational) -> Self {
        MRat {
            num: MPoly::constant(r.numer().clone()),
            den: MPoly::constant(r.denom().clone()),
        }
        .normalized()
    }

    pub fn from_poly(p: MPoly) -> Self {
        MRat {
            num: p,
            den: MPoly::one(),
        }
    }

    pub fn var(v: usize) -> Self {
        MRat::from_poly(MPoly::var(v))
    }

    /// q^k for any integer k.
    pub fn qpow(k: i64) -> Self {
        if k >= 0 {
            MRat::from_poly(MPoly::monomial([k as u32, 0, 0], BigInt::one()))
        } else {
            MRat {
                num: MPoly::one(),
                den: MPoly::monomial([(-k) as u32, 0, 0], BigInt::one()),
            }
        }
    }

    pub fn new(num: MPoly, den: MPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        MRat { num, den }.normalized()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_q_only(&self) -> bool {
        self.num.is_q_only() && self.den.is_q_only()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    fn normalized(self) -> Self {
        let MRat { mut num, mut den } = self;
        if num.is_zero() {
            return MRat::zero();
        }
        // Fast path: denominator 1 -> nothing to cancel.
        if !den.is_one() {
            if let Some(q) = num.div_exact(&den) {
                num = q;
                den = MPoly::one();
            } else {
                let g = mpoly::gcd(&num, &den);
                if !g.is_one() {
                    num = num.div_exact(&g).unwrap();
                    den = den.div_exact(&g).unwrap();
                }
            }
        }
        // Integer contents.
        let cn = num.content();
        let cd = den.content();
        let g = num::Integer::gcd(&cn, &cd);
        if !g.is_one() {
            num = num.div_int_exact(&g);
            den = den.div_int_exact(&g);
        }
        if den.lead_sign() == Sign::Minus {
            num = num.neg();
            den = den.neg();
        }
        MRat { num, den }
    }

    pub fn neg(&self) -> Self {
        MRat {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return MRat {
                num: self.num.add(&other.num),
                den: self.den.clone(),
            }
            .normalized();
        }
        MRat {
            num: self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            den: self.den.mul(&other.den),
        }
        .normalized()
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return MRat::zero();
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        MRat {
            num: self.num.mul(&other.num),
            den: self.den.mul(&other.den),
        }
        .normalized()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(EngineError::DivisionByZero);
        }
        Ok(MRat {
            num: self.den.clone(),
            den: self.num.clone(),
        }
        .normalized())
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        if k < 0 {
            return Ok(self.inv()?.pow(-k).unwrap());
        }
        let mut r = MRat::one();
        for _ in 0..k {
            r = r.mul(self);
        }
        Ok(r)
    }

    /// The scaling automorphism sigma^k: u -> q^{2k} u (q, p fixed).
    pub fn sigma(&self, k: i64) -> Self {
        if k == 0 || self.is_zero() {
            return self.clone();
        }
        // sigma^k(m) multiplies each monomial by q^{2k*deg_u}; for k < 0 we
        // clear denominators with a global positive power of q.
        let shift = |p: &MPoly| -> (MPoly, i64) {
            if k >= 0 {
                (p.sigma_nonneg(k as u32), 0)
            } else {
                let d = p.degree(VAR_U).max(0);
                let comp = 2 * (-k) * d; // multiply by q^comp to stay polynomial
                let mut terms: Vec<(mpoly::Mono, BigInt)> = p
                    .terms
                    .iter()
                    .map(|(m, c)| {
                        let mut mm = *m;
                        let e = 2 * (-k) as i64 * (d - m[VAR_U] as i64) as i64;
                        mm[VAR_Q] += e as u32;
                        (mm, c.clone())
                    })
                    .collect();
                terms.sort_by(|a, b| b.0.cmp(&a.0));
                (MPoly { terms }, comp)
            }
        };
        let (n, sn) = shift(&self.num);
        let (d, sd) = shift(&self.den);
        // value = n q^{-sn} / (d q^{-sd}) = n q^{sd-sn} / d
        let e = sd - sn;
        let (n, d) = if e >= 0 {
            (n.mul(&MPoly::monomial([e as u32, 0, 0], BigInt::one())), d)
        } else {
            (n, d.mul(&MPoly::monomial([(-e) as u32, 0, 0], BigInt::one())))
        };
        MRat { num: n, den: d }.normalized()
    }

    /// sigma^k at a numeric q: multiplies each monomial by qv^{2k deg_u}.
    /// Intended for q-specialized elements (no symbolic q present).
    pub fn sigma_q(&self, k: i64, qv: &BigRational) -> Self {
        if k == 0 || self.is_zero() {
            return self.clone();
        }
        let shift = |p: &MPoly| -> MRat {
            let mut acc = MRat::zero();
            for (m, c) in &p.terms {
                let e = 2 * k * m[VAR_U] as i64;
                let f = rational_pow(qv, e);
                let t = MRat::from_poly(MPoly::monomial(*m, c.clone())).mul(&MRat::from_ratio(&f));
                acc = acc.add(&t);
            }
            acc
        };
        shift(&self.num).div(&shift(&self.den)).expect("nonzero denominator image")
    }

    /// Formal derivative in u (used at the q = 1 specialization).
    pub fn derivative_u(&self) -> Self {
        // (n/d)' = (n' d - n d') / d^2
        let n = self.num.derivative(VAR_U).mul(&self.den).sub(&self.num.mul(&self.den.derivative(VAR_U)));
        MRat {
            num: n,
            den: self.den.mul(&self.den),
        }
        .normalized()
    }

    /// Exact evaluation; errors if the denominator vanishes.
    pub fn eval(&self, qv: &BigRational, uv: &BigRational, pv: &BigRational) -> Result<BigRational> {
        let vals: [BigRational; NVARS] = [qv.clone(), uv.clone(), pv.clone()];
        let d = self.den.eval(&vals);
        if d.is_zero() {
            return Err(EngineError::PoleAtPoint(self.to_string()));
        }
        Ok(self.num.eval(&vals) / d)
    }

    /// Substitute an exact rational value for q, keeping u and p symbolic.
    /// The result is the same value scaled into canonical integer form.
    pub fn eval_q(&self, qv: &BigRational) -> Result<Self> {
        // Each polynomial is replaced by poly|_{q=qv} * denom(qv)^{deg_q},
        // which is integral; the two compensating powers cancel in num/den.
        let sub = |poly: &MPoly| -> MPoly {
            let dq = poly.degree(VAR_Q).max(0) as u32;
            let mut acc = MPoly::zero();
            for (m, c) in &poly.terms {
                let coeff = c * qv.numer().pow(m[VAR_Q]) * qv.denom().pow(dq - m[VAR_Q]);
                let mut mono = *m;
                mono[VAR_Q] = 0;
                acc = acc.add(&MPoly::monomial(mono, coeff));
            }
            acc
        };
        if self.is_zero() {
            return Ok(MRat::zero());
        }
        let dq_n = self.num.degree(VAR_Q).max(0) as u32;
        let dq_d = self.den.degree(VAR_Q).max(0) as u32;
        let n = sub(&self.num);
        let d = sub(&self.den);
        if d.is_zero() {
            return Err(EngineError::PoleAtPoint(self.to_string()));
        }
        // n / denom^dq_n over d / denom^dq_d
        let e = dq_d as i64 - dq_n as i64;
        let (n, d) = if e >= 0 {
            (n.mul_int(&qv.denom().pow(e as u32)), d)
        } else {
            (n, d.mul_int(&qv.denom().pow((-e) as u32)))
        };
        Ok(MRat { num: n, den: d }.normalized())
    }

    /// Is u (or p) actually present?
    pub fn uses_up(&self) -> bool {
        !self.is_q_only()
    }

    pub fn degree_u(&self) -> i64 {
        self.num.degree(VAR_U).max(self.den.degree(VAR_U))
    }
}

impl fmt::Debug for MRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for MRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            if self.num.is_monomial() || self.num.terms.len() <= 1 {
                write!(f, "{}", mpoly::render(&self.num))
            } else {
                write!(f, "({})", mpoly::render(&self.num))
            }
        } else {
            let n = if self.num.is_monomial() {
                mpoly::render(&self.num)
            } else {
                format!("({})", mpoly::render(&self.num))
            };
            let d = if self.den.is_monomial() {
                mpoly::render(&self.den)
            } else {
                format!("({})", mpoly::render(&self.den))
            };
            write!(f, "{}/{}", n, d)
        }
    }
}

pub fn rational_pow(x: &BigRational, e: i64) -> BigRational {
    use num::One;
    let mut acc = BigRational::one();
    let base = if e >= 0 { x.clone() } else { x.recip() };
    for _ in 0..e.unsigned_abs() {
        acc *= &base;
    }
    acc
}

pub fn q() -> MRat {
    MRat::var(VAR_Q)
}
pub fn u() -> MRat {
    MRat::var(VAR_U)
}
pub fn p() -> MRat {
    MRat::var(VAR_P)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_and_field_ops() {
        // (q^2-1)/(q-1) normalizes to q+1
        let n = q().mul(&q()).sub(&MRat::one());
        let d = q().sub(&MRat::one());
        let r = n.div(&d).unwrap();
        assert_eq!(r, q().add(&MRat::one()));
        // inv(q + q^-1) * (q + q^-1) = 1
        let two_q = q().add(&MRat::qpow(-1));
        assert!(two_q.inv().unwrap().mul(&two_q).is_one());
    }

    #[test]
    fn sigma_is_automorphism() {
        let f = u().add(&p()).div(&q().add(&u())).unwrap();
        let g = u().mul(&u()).sub(&MRat::from_int(3));
        let fg = f.mul(&g);
        assert_eq!(fg.sigma(2), f.sigma(2).mul(&g.sigma(2)));
        assert_eq!(f.sigma(3).sigma(-3), f);
        // sigma(u+p) = q^2 u + p
        let s = u().add(&p()).sigma(1);
        assert_eq!(s, q().mul(&q()).mul(&u()).add(&p()));
    }

    #[test]
    fn eval_exact() {
        use num::FromPrimitive;
        let f = u()
            .mul(&p())
            .div(&u().add(&p()).mul(&q().mul(&q()).mul(&u()).add(&p())))
            .unwrap();
        let two = BigRational::from_i64(2).unwrap();
        let one = BigRational::from_i64(1).unwrap();
        let v = f.eval(&two, &one, &one).unwrap();
        // u p / ((u+p)(q^2 u + p)) at (2,1,1) = 1 / (2*5) = 1/10
        assert_eq!(v, BigRational::new(BigInt::from(1), BigInt::from(10)));
    }

    #[test]
    fn eval_q_partial() {
        use num::FromPrimitive;
        let f = q().mul(&u()).add(&p().div(&q()).unwrap());
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let g = f.eval_q(&half).unwrap();
        // (1/2) u + 2 p
        let expect = u()
            .mul(&MRat::from_ratio(&half))
            .add(&p().mul(&MRat::from_int(2)));
        assert_eq!(g, expect);
        let _ = BigRational::from_i64(1); // keep import used
    }

    #[test]
    fn derivative_u_quotient() {
        // d/du [u^2/(u+1)] = (u^2 + 2u)/(u+1)^2
        let f = u().mul(&u()).div(&u().add(&MRat::one())).unwrap();
        let d = f.derivative_u();
        let expect = u()
            .mul(&u())
            .add(&u().mul(&MRat::from_int(2)))
            .div(&u().add(&MRat::one()).mul(&u().add(&MRat::one())))
            .unwrap();
        assert_eq!(d, expect);
    }
}
