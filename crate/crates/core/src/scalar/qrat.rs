//! The field Q(q): rational functions in the deformation parameter only.
//!
//! `QRat` is a thin wrapper around the three-variable rational type that
//! enforces u- and p-freeness, so tensor tables and rewrite-rule constants
//! stay in the cheap univariate regime.

use super::mrat::MRat;
use crate::error::Result;
use num::BigRational;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QRat(pub(crate) MRat);

impl QRat {
    pub fn zero() -> Self {
        QRat(MRat::zero())
    }

    pub fn one() -> Self {
        QRat(MRat::one())
    }

    pub fn from_int(n: i64) -> Self {
        QRat(MRat::from_int(n))
    }

    /// q^k for any integer k.
    pub fn qpow(k: i64) -> Self {
        QRat(MRat::qpow(k))
    }

    pub fn q() -> Self {
        QRat::qpow(1)
    }

    /// [2]_q = q + q^-1.
    pub fn two_q() -> Self {
        QRat::qpow(1) + QRat::qpow(-1)
    }

    pub fn from_mrat(m: MRat) -> Option<Self> {
        if m.is_q_only() {
            Some(QRat(m))
        } else {
            None
        }
    }

    pub fn as_mrat(&self) -> &MRat {
        &self.0
    }

    pub fn into_mrat(self) -> MRat {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn neg(&self) -> Self {
        QRat(self.0.neg())
    }

    pub fn inv(&self) -> Result<Self> {
        Ok(QRat(self.0.inv()?))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(QRat(self.0.div(&other.0)?))
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        Ok(QRat(self.0.pow(k)?))
    }

    /// Exact evaluation at a rational q.
    pub fn eval(&self, qv: &BigRational) -> Result<BigRational> {
        use num::Zero;
        let one = BigRational::zero();
        self.0.eval(qv, &one, &one)
    }

    pub fn eval_q(&self, qv: &BigRational) -> Result<Self> {
        Ok(QRat(self.0.eval_q(qv)?))
    }
}

impl Add for QRat {
    type Output = QRat;
    fn add(self, rhs: QRat) -> QRat {
        QRat(self.0.add(&rhs.0))
    }
}

impl<'a> Add<&'a QRat> for QRat {
    type Output = QRat;
    fn add(self, rhs: &QRat) -> QRat {
        QRat(self.0.add(&rhs.0))
    }
}

impl Sub for QRat {
    type Output = QRat;
    fn sub(self, rhs: QRat) -> QRat {
        QRat(self.0.sub(&rhs.0))
    }
}

impl Mul for QRat {
    type Output = QRat;
    fn mul(self, rhs: QRat) -> QRat {
        QRat(self.0.mul(&rhs.0))
    }
}

impl<'a> Mul<&'a QRat> for QRat {
    type Output = QRat;
    fn mul(self, rhs: &QRat) -> QRat {
        QRat(self.0.mul(&rhs.0))
    }
}

impl Neg for QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        QRat(self.0.neg())
    }
}

impl fmt::Debug for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::{BigInt, FromPrimitive};

    #[test]
    fn field_inverse() {
        let x = QRat::two_q();
        assert!(x.inv().unwrap().mul(&x).is_one());
        assert!(QRat::zero().inv().is_err());
    }

    #[test]
    fn classical_limit_of_deformation_scale() {
        // (q - q^-1) at q = 1 is 0.
        let x = QRat::qpow(1) - QRat::qpow(-1);
        let one = BigRational::from_i64(1).unwrap();
        assert_eq!(x.eval(&one).unwrap(), BigRational::from_i64(0).unwrap());
    }

    #[test]
    fn eval_examples() {
        let one = BigRational::from_i64(1).unwrap();
        let two = BigRational::from_i64(2).unwrap();
        // q + q^-1 at 1 -> 2
        assert_eq!(QRat::two_q().eval(&one).unwrap(), two);
        // q + q^-1 at 2 -> 5/2
        assert_eq!(
            QRat::two_q().eval(&two).unwrap(),
            BigRational::new(BigInt::from(5), BigInt::from(2))
        );
        // (q-1)(q-q^-2) at 1 -> 0
        let f = (QRat::q() - QRat::one()) * (QRat::q() - QRat::qpow(-2));
        assert!(f.eval(&one).unwrap().numer().is_zero());
        use num::Zero;
        let _ = BigRational::zero();
    }
}
