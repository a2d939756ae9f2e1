//! Radial coefficient field: rational functions of (q, u, p) extended by
//! compatible square roots, where u stands for |x|^2 and p for rho^2.
//!
//! Square roots are tracked as square classes. An element is a finite sum
//! of terms c * sqrt(M) with c a rational function and M a squarefree
//! product of the atoms
//!   - `u` (so sqrt(u) = |x|),
//!   - `p` (so sqrt(p) = rho),
//!   - `q^{2k} u + p` for integer k (the denominators of the instanton
//!     sector; the scaling automorphism shifts k),
//!   - a squarefree positive integer.
//! Distinct atoms are multiplicatively independent square classes, so this
//! is a field and inverses exist for every nonzero element. The scaling
//! automorphism sigma (u -> q^2 u, sqrt(u) -> q sqrt(u), shift atoms moved
//! up) is total, which is what lets coefficients commute past 1-forms.

use super::mpoly::{VAR_P, VAR_U};
use super::mrat::MRat;
use super::qrat::QRat;
use crate::error::{EngineError, Result};
use num::{BigInt, BigRational, Integer, One, Signed, Zero};
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Atom {
    /// sqrt(u)
    U,
    /// sqrt(p)
    P,
    /// sqrt(q^{2k} u + p)
    Shift(i32),
}

pub type QCtx<'a> = Option<&'a BigRational>;

impl Atom {
    fn poly_in(&self, ctx: QCtx) -> MRat {
        let raw = match self {
            Atom::U => MRat::var(VAR_U),
            Atom::P => MRat::var(VAR_P),
            Atom::Shift(k) => MRat::qpow(2 * *k as i64)
                .mul(&MRat::var(VAR_U))
                .add(&MRat::var(VAR_P)),
        };
        match ctx {
            Some(qv) => raw.eval_q(qv).expect("atom poly has no q-pole"),
            None => raw,
        }
    }

    fn poly(&self) -> MRat {
        self.poly_in(None)
    }

    /// sigma maps sqrt(q^{2k}u+p) to sqrt(q^{2k+2}u+p) and sqrt(u) to
    /// q*sqrt(u); returns (image atom, extra q-power).
    fn sigma(&self, k: i64) -> (Atom, i64) {
        match self {
            Atom::U => (Atom::U, k),
            Atom::P => (Atom::P, 0),
            Atom::Shift(j) => (Atom::Shift(j + k as i32), 0),
        }
    }
}

/// A square class: squarefree positive integer times a squarefree set of atoms.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Mask {
    pub int: BigInt,
    pub atoms: Vec<Atom>, // sorted, deduplicated
}

impl Mask {
    pub fn trivial() -> Self {
        Mask {
            int: BigInt::one(),
            atoms: Vec::new(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.int.is_one() && self.atoms.is_empty()
    }

    fn single(a: Atom) -> Self {
        Mask {
            int: BigInt::one(),
            atoms: vec![a],
        }
    }

    /// Product of two square classes: shared atoms square away and are
    /// returned as the rational "overflow" factor.
    fn mul_in(&self, other: &Mask, ctx: QCtx) -> (Mask, MRat) {
        let mut overflow = MRat::one();
        // Integer part: sqrt(a) sqrt(b) = g sqrt((a/g)(b/g)) with g = gcd(a,b).
        let g = self.int.gcd(&other.int);
        let int = (&self.int / &g) * (&other.int / &g);
        overflow = overflow.mul(&MRat::from_big(g));
        // Atom part: symmetric difference; intersection contributes polys.
        let mut atoms = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.atoms.len() && j < other.atoms.len() {
            match self.atoms[i].cmp(&other.atoms[j]) {
                std::cmp::Ordering::Less => {
                    atoms.push(self.atoms[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    atoms.push(other.atoms[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    overflow = overflow.mul(&self.atoms[i].poly_in(ctx));
                    i += 1;
                    j += 1;
                }
            }
        }
        atoms.extend_from_slice(&self.atoms[i..]);
        atoms.extend_from_slice(&other.atoms[j..]);
        (Mask { int, atoms }, overflow)
    }

    /// The rational function this class is a square root of.
    fn radicand_in(&self, ctx: QCtx) -> MRat {
        let mut r = MRat::from_big(self.int.clone());
        for a in &self.atoms {
            r = r.mul(&a.poly_in(ctx));
        }
        r
    }
}

/// An element of the radial field: sorted terms (mask, coefficient).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Radial {
    terms: Vec<(Mask, MRat)>,
}

impl Radial {
    pub fn zero() -> Self {
        Radial { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Radial::from_mrat(MRat::one())
    }

    pub fn from_mrat(c: MRat) -> Self {
        if c.is_zero() {
            Radial::zero()
        } else {
            Radial {
                terms: vec![(Mask::trivial(), c)],
            }
        }
    }

    pub fn from_qrat(c: &QRat) -> Self {
        Radial::from_mrat(c.as_mrat().clone())
    }

    pub fn from_int(n: i64) -> Self {
        Radial::from_mrat(MRat::from_int(n))
    }

    pub fn qpow(k: i64) -> Self {
        Radial::from_mrat(MRat::qpow(k))
    }

    /// u = |x|^2.
    pub fn u() -> Self {
        Radial::from_mrat(MRat::var(VAR_U))
    }

    /// p = rho^2.
    pub fn p() -> Self {
        Radial::from_mrat(MRat::var(VAR_P))
    }

    /// |x| = sqrt(u).
    pub fn absx() -> Self {
        Radial {
            terms: vec![(Mask::single(Atom::U), MRat::one())],
        }
    }

    /// rho = sqrt(p).
    pub fn rho() -> Self {
        Radial {
            terms: vec![(Mask::single(Atom::P), MRat::one())],
        }
    }

    /// sqrt of a positive integer (normalized to its squarefree class).
    pub fn sqrt_int(n: u64) -> Self {
        assert!(n > 0);
        let mut square = BigInt::one();
        let mut free = BigInt::one();
        let mut m = n;
        let mut d = 2u64;
        while d * d <= m {
            let mut e = 0;
            while m % d == 0 {
                m /= d;
                e += 1;
            }
            if e > 0 {
                square *= BigInt::from(d).pow(e / 2);
                if e % 2 == 1 {
                    free *= BigInt::from(d);
                }
            }
            d += 1;
        }
        free *= BigInt::from(m); // m is 1 or prime
        Radial {
            terms: vec![(
                Mask {
                    int: free,
                    atoms: Vec::new(),
                },
                MRat::from_big(square),
            )],
        }
    }

    /// s = sqrt(u/(u+p)), the factor in the instanton projector column.
    pub fn s() -> Self {
        // sqrt(u) sqrt(u+p) / (u+p)
        let upp = Atom::Shift(0).poly();
        Radial {
            terms: vec![(
                Mask {
                    int: BigInt::one(),
                    atoms: vec![Atom::U, Atom::Shift(0)],
                },
                MRat::one().div(&upp).unwrap(),
            )],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_trivial() && self.terms[0].1.is_one()
    }

    /// True when no square-root classes are present.
    pub fn is_plain(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_trivial())
    }

    pub fn is_q_only(&self) -> bool {
        self.is_plain() && self.terms.iter().all(|(_, c)| c.is_q_only())
    }

    pub fn as_mrat(&self) -> Option<&MRat> {
        if self.terms.is_empty() {
            None // zero handled by caller via is_zero
        } else if self.terms.len() == 1 && self.terms[0].0.is_trivial() {
            Some(&self.terms[0].1)
        } else {
            None
        }
    }

    pub fn as_qrat(&self) -> Option<QRat> {
        if self.is_zero() {
            return Some(QRat::zero());
        }
        self.as_mrat().and_then(|m| QRat::from_mrat(m.clone()))
    }

    /// Decompose as r0 + r1*s with s = sqrt(u/(u+p)); None if the element
    /// leaves the quadratic subfield generated by s.
    pub fn split_s(&self) -> Option<(MRat, MRat)> {
        let s_mask = Mask {
            int: BigInt::one(),
            atoms: vec![Atom::U, Atom::Shift(0)],
        };
        let mut r0 = MRat::zero();
        let mut r1 = MRat::zero();
        for (m, c) in &self.terms {
            if m.is_trivial() {
                r0 = r0.add(c);
            } else if *m == s_mask {
                // c*sqrt(u(u+p)) = c(u+p) * s
                r1 = r1.add(&c.mul(&Atom::Shift(0).poly()));
            } else {
                return None;
            }
        }
        Some((r0, r1))
    }

    fn push_term(acc: &mut Vec<(Mask, MRat)>, m: Mask, c: MRat) {
        if c.is_zero() {
            return;
        }
        match acc.binary_search_by(|(mm, _)| mm.cmp(&m)) {
            Ok(i) => {
                let s = acc[i].1.add(&c);
                if s.is_zero() {
                    acc.remove(i);
                } else {
                    acc[i].1 = s;
                }
            }
            Err(i) => acc.insert(i, (m, c)),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut acc = self.terms.clone();
        for (m, c) in &other.terms {
            Self::push_term(&mut acc, m.clone(), c.clone());
        }
        Radial { terms: acc }
    }

    pub fn neg(&self) -> Self {
        Radial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.mul_in(other, None)
    }

    pub fn mul_in(&self, other: &Self, ctx: QCtx) -> Self {
        if self.is_zero() || other.is_zero() {
            return Radial::zero();
        }
        let mut acc: Vec<(Mask, MRat)> = Vec::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let (m, over) = ma.mul_in(mb, ctx);
                Self::push_term(&mut acc, m, ca.mul(cb).mul(&over));
            }
        }
        Radial { terms: acc }
    }

    pub fn mul_mrat(&self, c: &MRat) -> Self {
        if c.is_zero() {
            return Radial::zero();
        }
        Radial {
            terms: self.terms.iter().map(|(m, cc)| (m.clone(), cc.mul(c))).collect(),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        self.inv_in(None)
    }

    pub fn inv_in(&self, ctx: QCtx) -> Result<Self> {
        if self.is_zero() {
            return Err(EngineError::DivisionByZero);
        }
        // Single square class: 1/(c sqrt(M)) = sqrt(M)/(c M).
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            let denom = c.mul(&m.radicand_in(ctx));
            return Ok(Radial {
                terms: vec![(m.clone(), denom.inv()?)],
            });
        }
        // Split on some atom (or the integer part) present in a subset of
        // terms: f = g + sqrt(a) h with g, h in the smaller field, then
        // 1/f = (g - sqrt(a) h) / (g^2 - a h^2) and recurse.
        let split = self
            .terms
            .iter()
            .find_map(|(m, _)| m.atoms.first().copied())
            .map(SplitKey::Atom)
            .unwrap_or_else(|| {
                let int = self
                    .terms
                    .iter()
                    .find(|(m, _)| !m.int.is_one())
                    .map(|(m, _)| m.int.clone())
                    .expect("multi-term element must carry a nontrivial class");
                SplitKey::Int(int)
            });
        let (g, h, a) = self.split_on_in(&split, ctx);
        let denom = g.mul_in(&g, ctx).sub(&h.mul_in(&h, ctx).mul_in(&a, ctx));
        let conj = g.sub(&h_sqrt(&split, &h, ctx));
        Ok(conj.mul_in(&denom.inv_in(ctx)?, ctx))
    }

    fn split_on_in(&self, key: &SplitKey, ctx: QCtx) -> (Radial, Radial, Radial) {
        // self = g + sqrt(a) * h; returns (g, h, a as element).
        let mut g = Radial::zero();
        let mut h = Radial::zero();
        for (m, c) in &self.terms {
            let mut mm = m.clone();
            let contains = match key {
                SplitKey::Atom(a) => {
                    if let Ok(i) = mm.atoms.binary_search(a) {
                        mm.atoms.remove(i);
                        true
                    } else {
                        false
                    }
                }
                SplitKey::Int(n) => {
                    if mm.int.is_multiple_of(n) {
                        mm.int /= n;
                        true
                    } else {
                        false
                    }
                }
            };
            let t = Radial {
                terms: vec![(mm, c.clone())],
            };
            if contains {
                h = h.add(&t);
            } else {
                g = g.add(&t);
            }
        }
        let a = match key {
            SplitKey::Atom(at) => Radial::from_mrat(at.poly_in(ctx)),
            SplitKey::Int(n) => Radial::from_mrat(MRat::from_big(n.clone())),
        };
        (g, h, a)
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.div_in(other, None)
    }

    pub fn div_in(&self, other: &Self, ctx: QCtx) -> Result<Self> {
        Ok(self.mul_in(&other.inv_in(ctx)?, ctx))
    }

    /// sigma^k: u -> q^{2k} u on rational parts, atoms shifted.
    pub fn sigma(&self, k: i64) -> Self {
        if k == 0 {
            return self.clone();
        }
        let mut acc: Vec<(Mask, MRat)> = Vec::new();
        for (m, c) in &self.terms {
            let mut atoms = Vec::with_capacity(m.atoms.len());
            let mut qshift = 0i64;
            for a in &m.atoms {
                let (img, e) = a.sigma(k);
                atoms.push(img);
                qshift += e;
            }
            atoms.sort();
            let mask = Mask {
                int: m.int.clone(),
                atoms,
            };
            Self::push_term(&mut acc, mask, c.sigma(k).mul(&MRat::qpow(qshift)));
        }
        Radial { terms: acc }
    }

    /// sigma^k for q-specialized elements: coefficients scaled by rational
    /// powers of qv, atoms shifted as in the symbolic case.
    pub fn sigma_q(&self, k: i64, qv: &BigRational) -> Self {
        if k == 0 {
            return self.clone();
        }
        let mut acc: Vec<(Mask, MRat)> = Vec::new();
        for (m, c) in &self.terms {
            let mut atoms = Vec::with_capacity(m.atoms.len());
            let mut qshift = 0i64;
            for a in &m.atoms {
                let (img, e) = a.sigma(k);
                atoms.push(img);
                qshift += e;
            }
            atoms.sort();
            let mask = Mask {
                int: m.int.clone(),
                atoms,
            };
            let f = super::mrat::rational_pow(qv, qshift);
            Self::push_term(
                &mut acc,
                mask,
                c.sigma_q(k, qv).mul(&MRat::from_ratio(&f)),
            );
        }
        Radial { terms: acc }
    }

    /// Formal d/du, used for the q = 1 specialization of the calculus.
    pub fn derivative_u(&self) -> Self {
        self.derivative_u_in(None)
    }

    pub fn derivative_u_in(&self, ctx: QCtx) -> Self {
        let mut acc = Radial::zero();
        for (m, c) in &self.terms {
            let base = Radial {
                terms: vec![(m.clone(), MRat::one())],
            };
            // c' sqrt(M) + c * sum_a (dA/du) sqrt(M)/(2A)
            acc = acc.add(&base.mul_mrat(&c.derivative_u()));
            for a in &m.atoms {
                let ap = a.poly_in(ctx);
                let da = ap.derivative_u();
                if da.is_zero() {
                    continue;
                }
                let factor = da.div(&ap.mul(&MRat::from_int(2))).unwrap();
                acc = acc.add(&base.mul_mrat(&c.mul(&factor)));
            }
        }
        acc
    }

    /// Exact evaluation; square roots must come out rational.
    pub fn eval(&self, qv: &BigRational, uv: &BigRational, pv: &BigRational) -> Result<BigRational> {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let rad = m.radicand_in(None).eval(qv, uv, pv)?;
            let root = rational_sqrt(&rad)
                .ok_or_else(|| EngineError::IrrationalSquareRoot(format!("{}", rad)))?;
            acc += c.eval(qv, uv, pv)? * root;
        }
        Ok(acc)
    }

    pub fn eval_q(&self, qv: &BigRational) -> Result<Self> {
        // Shift atoms lose their q-dependence only through their polys; the
        // mask itself stays symbolic (q^{2k} u + p still depends on u, p).
        // We therefore only specialize coefficient functions here; shift
        // atoms with distinct k remain distinct classes at generic q.
        let mut acc: Vec<(Mask, MRat)> = Vec::new();
        for (m, c) in &self.terms {
            Self::push_term(&mut acc, m.clone(), c.eval_q(qv)?);
        }
        Ok(Radial { terms: acc })
    }

    pub fn terms(&self) -> &[(Mask, MRat)] {
        &self.terms
    }
}

enum SplitKey {
    Atom(Atom),
    Int(BigInt),
}

fn h_sqrt(key: &SplitKey, h: &Radial, ctx: QCtx) -> Radial {
    let _ = ctx;
    let sq = match key {
        SplitKey::Atom(a) => Radial {
            terms: vec![(Mask::single(*a), MRat::one())],
        },
        SplitKey::Int(n) => Radial {
            terms: vec![(
                Mask {
                    int: n.clone(),
                    atoms: Vec::new(),
                },
                MRat::one(),
            )],
        },
    };
    sq.mul(h)
}

fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_zero() {
        return Some(BigRational::zero());
    }
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

impl fmt::Debug for Radial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Radial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if m.is_trivial() {
                write!(f, "{}", c)?;
            } else {
                let mut parts: Vec<String> = Vec::new();
                if !m.int.is_one() {
                    parts.push(format!("sqrt({})", m.int));
                }
                for a in &m.atoms {
                    match a {
                        Atom::U => parts.push("absx".to_string()),
                        Atom::P => parts.push("rho".to_string()),
                        Atom::Shift(k) => parts.push(format!("rads[{}]", k)),
                    }
                }
                write!(f, "{}*{}", c, parts.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::FromPrimitive;

    #[test]
    fn s_squares_to_u_over_u_plus_p() {
        let s = Radial::s();
        let expect = Radial::u()
            .mul(&Radial::u().add(&Radial::p()).inv().unwrap());
        assert_eq!(s.mul(&s), expect);
        // mul(u/(u+p), inv(s)^2) = 1
        let lhs = expect.mul(&s.inv().unwrap()).mul(&s.inv().unwrap());
        assert!(lhs.is_one());
    }

    #[test]
    fn sigma_of_s_is_canonical_root() {
        // sigma(s)^2 = q^2 u / (q^2 u + p)
        let s1 = Radial::s().sigma(1);
        let q2u = Radial::qpow(2).mul(&Radial::u());
        let expect = q2u.mul(&q2u.add(&Radial::p()).inv().unwrap());
        assert_eq!(s1.mul(&s1), expect);
        // sigma is an automorphism and sigma^-1 sigma = id
        assert_eq!(Radial::s().sigma(2).sigma(-2), Radial::s());
    }

    #[test]
    fn sigma_fixes_p() {
        let f = Radial::u().add(&Radial::p());
        let s = f.sigma(1);
        let expect = Radial::qpow(2).mul(&Radial::u()).add(&Radial::p());
        assert_eq!(s, expect);
    }

    #[test]
    fn inverse_of_mixed_element() {
        // (1 + |x|)^-1 * (1 + |x|) = 1
        let f = Radial::one().add(&Radial::absx());
        assert!(f.inv().unwrap().mul(&f).is_one());
        // (sqrt(2) + s)^{-1}
        let g = Radial::sqrt_int(2).add(&Radial::s());
        assert!(g.inv().unwrap().mul(&g).is_one());
    }

    #[test]
    fn sqrt_int_squarefree() {
        // sqrt(8) = 2 sqrt(2)
        let r = Radial::sqrt_int(8);
        let two_rt2 = Radial::sqrt_int(2).mul(&Radial::from_int(2));
        assert_eq!(r, two_rt2);
        assert_eq!(Radial::sqrt_int(2).mul(&Radial::sqrt_int(2)), Radial::from_int(2));
    }

    #[test]
    fn eval_with_roots() {
        let f = Radial::absx(); // sqrt(u)
        let q1 = BigRational::from_i64(1).unwrap();
        let u4 = BigRational::from_i64(4).unwrap();
        let p0 = BigRational::from_i64(0).unwrap();
        assert_eq!(f.eval(&q1, &u4, &p0).unwrap(), BigRational::from_i64(2).unwrap());
        let u3 = BigRational::from_i64(3).unwrap();
        assert!(matches!(
            f.eval(&q1, &u3, &p0),
            Err(EngineError::IrrationalSquareRoot(_))
        ));
    }

    #[test]
    fn split_s_view() {
        let f = Radial::from_int(3).add(&Radial::s().mul(&Radial::u()));
        let (r0, r1) = f.split_s().unwrap();
        assert_eq!(r0, MRat::from_int(3));
        assert_eq!(r1, MRat::var(VAR_U));
        assert!(Radial::absx().split_s().is_none());
    }
}
