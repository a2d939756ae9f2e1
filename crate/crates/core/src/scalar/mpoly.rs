//! Sparse polynomials over Z in the three commuting variables q, u, p.
//!
//! Terms are kept sorted in descending lexicographic order (q, then u,
//! then p) with nonzero coefficients; the empty term list is the zero
//! polynomial. All arithmetic is exact.

use num::bigint::Sign;
use num::{BigInt, BigRational, Integer, One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

pub const NVARS: usize = 3;
pub const VAR_Q: usize = 0;
pub const VAR_U: usize = 1;
pub const VAR_P: usize = 2;

pub type Mono = [u32; NVARS];

fn mono_cmp(a: &Mono, b: &Mono) -> Ordering {
    a.cmp(b)
}

fn mono_mul(a: &Mono, b: &Mono) -> Mono {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

fn mono_div(a: &Mono, b: &Mono) -> Option<Mono> {
    if a[0] >= b[0] && a[1] >= b[1] && a[2] >= b[2] {
        Some([a[0] - b[0], a[1] - b[1], a[2] - b[2]])
    } else {
        None
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MPoly {
    /// (monomial, coefficient), sorted descending by monomial, coefficients nonzero.
    pub terms: Vec<(Mono, BigInt)>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        MPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        if c.is_zero() {
            MPoly::zero()
        } else {
            MPoly {
                terms: vec![([0; NVARS], c)],
            }
        }
    }

    pub fn var(v: usize) -> Self {
        let mut m = [0u32; NVARS];
        m[v] = 1;
        MPoly {
            terms: vec![(m, BigInt::one())],
        }
    }

    pub fn monomial(m: Mono, c: BigInt) -> Self {
        if c.is_zero() {
            MPoly::zero()
        } else {
            MPoly { terms: vec![(m, c)] }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == [0; NVARS] && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.iter().all(|(m, _)| *m == [0; NVARS])
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading(&self) -> Option<&(Mono, BigInt)> {
        self.terms.first()
    }

    pub fn degree(&self, v: usize) -> i64 {
        self.terms.iter().map(|(m, _)| m[v] as i64).max().unwrap_or(-1)
    }

    /// True if the polynomial involves only the variable q.
    pub fn is_q_only(&self) -> bool {
        self.terms.iter().all(|(m, _)| m[VAR_U] == 0 && m[VAR_P] == 0)
    }

    pub fn neg(&self) -> Self {
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out: Vec<(Mono, BigInt)> = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match mono_cmp(&self.terms[i].0, &other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &self.terms[i].1 + &other.terms[j].1;
                    if !c.is_zero() {
                        out.push((self.terms[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        MPoly { terms: out }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return MPoly::zero();
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return MPoly {
                terms: self.terms.iter().map(|(mm, cc)| (mono_mul(mm, m), cc * c)).collect(),
            };
        }
        if self.terms.len() == 1 {
            return other.mul(self);
        }
        let mut acc: std::collections::BTreeMap<Mono, BigInt> = Default::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = mono_mul(ma, mb);
                let e = acc.entry(m).or_insert_with(BigInt::zero);
                *e += ca * cb;
            }
        }
        let mut terms: Vec<(Mono, BigInt)> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.reverse(); // BTreeMap ascending -> descending
        MPoly { terms }
    }

    pub fn mul_int(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, cc)| (*m, cc * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = MPoly::one();
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// GCD of all integer coefficients (positive; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divide all coefficients by an exact integer divisor.
    pub fn div_int_exact(&self, d: &BigInt) -> Self {
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, c / d)).collect(),
        }
    }

    /// Exact multivariate division; None if the division is not exact.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(MPoly::zero());
        }
        let (dm, dc) = d.leading().unwrap();
        let mut rem = self.clone();
        let mut quo: Vec<(Mono, BigInt)> = Vec::new();
        while !rem.is_zero() {
            let (rm, rc) = rem.leading().unwrap();
            let m = mono_div(rm, dm)?;
            let (c, r) = rc.div_rem(dc);
            if !r.is_zero() {
                return None;
            }
            let t = MPoly::monomial(m, c.clone());
            rem = rem.sub(&t.mul(d));
            quo.push((m, c));
        }
        quo.sort_by(|a, b| mono_cmp(&b.0, &a.0));
        Some(MPoly { terms: quo })
    }

    /// Coefficients viewed as polynomials in the remaining variables,
    /// indexed by the degree in `v` (ascending, length = deg+1).
    pub fn coeffs_wrt(&self, v: usize) -> Vec<MPoly> {
        let d = self.degree(v);
        if d < 0 {
            return Vec::new();
        }
        let mut out = vec![MPoly::zero(); (d + 1) as usize];
        for (m, c) in &self.terms {
            let e = m[v] as usize;
            let mut mm = *m;
            mm[v] = 0;
            out[e] = out[e].add(&MPoly::monomial(mm, c.clone()));
        }
        out
    }

    pub fn from_coeffs_wrt(v: usize, coeffs: &[MPoly]) -> MPoly {
        let mut acc = MPoly::zero();
        for (e, c) in coeffs.iter().enumerate() {
            let mut shift = [0u32; NVARS];
            shift[v] = e as u32;
            acc = acc.add(&c.mul(&MPoly::monomial(shift, BigInt::one())));
        }
        acc
    }

    /// Substitute u -> q^{2k} u; requires k >= 0 here (negative shifts are
    /// handled at the rational-function level by clearing q powers).
    pub fn sigma_nonneg(&self, k: u32) -> MPoly {
        let mut terms: Vec<(Mono, BigInt)> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut mm = *m;
                mm[VAR_Q] += 2 * k * m[VAR_U];
                (mm, c.clone())
            })
            .collect();
        terms.sort_by(|a, b| mono_cmp(&b.0, &a.0));
        MPoly { terms }
    }

    /// Formal derivative with respect to a variable.
    pub fn derivative(&self, v: usize) -> MPoly {
        let mut terms: Vec<(Mono, BigInt)> = Vec::new();
        for (m, c) in &self.terms {
            if m[v] > 0 {
                let mut mm = *m;
                mm[v] -= 1;
                terms.push((mm, c * BigInt::from(m[v])));
            }
        }
        terms.sort_by(|a, b| mono_cmp(&b.0, &a.0));
        MPoly { terms }
    }

    /// Exact evaluation at rational points.
    pub fn eval(&self, vals: &[BigRational; NVARS]) -> BigRational {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = BigRational::from(c.clone());
            for v in 0..NVARS {
                for _ in 0..m[v] {
                    t *= &vals[v];
                }
            }
            acc += t;
        }
        acc
    }

    /// Sign of the leading coefficient.
    pub fn lead_sign(&self) -> Sign {
        self.leading().map(|(_, c)| c.sign()).unwrap_or(Sign::NoSign)
    }
}

/// GCD over Z[q,u,p]: integer content times a recursive primitive PRS.
pub fn gcd(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_zero() {
        return abs_normalized(b);
    }
    if b.is_zero() {
        return abs_normalized(a);
    }
    let ca = a.content();
    let cb = b.content();
    let cg = ca.gcd(&cb);
    let pa = a.div_int_exact(&ca);
    let pb = b.div_int_exact(&cb);
    let g = gcd_primitive(&pa, &pb);
    abs_normalized(&g.mul_int(&cg))
}

fn abs_normalized(p: &MPoly) -> MPoly {
    if p.lead_sign() == Sign::Minus {
        p.neg()
    } else {
        p.clone()
    }
}

/// Pick a variable present in both polynomials, preferring the one with
/// the smallest maximum degree to keep the PRS short.
fn pick_var(a: &MPoly, b: &MPoly) -> Option<usize> {
    let mut best: Option<(usize, i64)> = None;
    for v in 0..NVARS {
        let da = a.degree(v);
        let db = b.degree(v);
        if da > 0 || db > 0 {
            let d = da.max(db);
            if best.map_or(true, |(_, bd)| d < bd) {
                best = Some((v, d));
            }
        }
    }
    best.map(|(v, _)| v)
}

fn gcd_primitive(a: &MPoly, b: &MPoly) -> MPoly {
    let v = match pick_var(a, b) {
        Some(v) => v,
        None => {
            // Both are integer constants (contents already removed -> +-1).
            return MPoly::one();
        }
    };
    if a.degree(v) < 0 || b.degree(v) < 0 {
        return MPoly::one();
    }
    // Work in (Z[rest])[v] with primitive pseudo-remainder sequence.
    let mut f = a.clone();
    let mut g = b.clone();
    if f.degree(v) < g.degree(v) {
        std::mem::swap(&mut f, &mut g);
    }
    let cont_f = poly_content_wrt(&f, v);
    let cont_g = poly_content_wrt(&g, v);
    let cont = gcd(&cont_f, &cont_g);
    f = f.div_exact(&cont_f).unwrap();
    g = g.div_exact(&cont_g).unwrap();
    loop {
        if g.degree(v) < 0 {
            // g == 0
            let pf = primitive_wrt(&f, v);
            return cont.mul(&pf);
        }
        let r = pseudo_rem(&f, &g, v);
        if r.is_zero() {
            let pg = primitive_wrt(&g, v);
            return cont.mul(&pg);
        }
        if r.degree(v) <= 0 && g.degree(v) > 0 {
            // Nonzero remainder of v-degree 0: gcd has v-degree 0 and the
            // primitive parts are coprime in v.
            return cont;
        }
        f = g;
        g = primitive_wrt(&r, v);
    }
}

/// Content of `p` seen as a polynomial in `v` (gcd of its coefficient polys).
fn poly_content_wrt(p: &MPoly, v: usize) -> MPoly {
    let coeffs = p.coeffs_wrt(v);
    let mut acc = MPoly::zero();
    for c in coeffs {
        if !c.is_zero() {
            acc = gcd(&acc, &c);
            if acc.is_one() {
                break;
            }
        }
    }
    acc
}

fn primitive_wrt(p: &MPoly, v: usize) -> MPoly {
    if p.is_zero() {
        return MPoly::zero();
    }
    let c = poly_content_wrt(p, v);
    p.div_exact(&c).unwrap()
}

/// Pseudo-remainder of f by g with respect to v: lc(g)^(df-dg+1) f mod g.
fn pseudo_rem(f: &MPoly, g: &MPoly, v: usize) -> MPoly {
    let dg = g.degree(v);
    debug_assert!(dg >= 0);
    let gc = g.coeffs_wrt(v);
    let lg = gc.last().unwrap().clone();
    let mut r = f.clone();
    loop {
        let dr = r.degree(v);
        if dr < dg || r.is_zero() {
            return r;
        }
        let rc = r.coeffs_wrt(v);
        let lr = rc.last().unwrap().clone();
        let mut shift = [0u32; NVARS];
        shift[v] = (dr - dg) as u32;
        let t = lr.mul(&MPoly::monomial(shift, BigInt::one())).mul(g);
        r = r.mul(&lg).sub(&t);
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render(self))
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render(self))
    }
}

/// Render with monomials in ascending q-then-u-then-p order, e.g.
/// `1 + 2*q^2*u - p^3`.
pub fn render(p: &MPoly) -> String {
    render_with(p, &["q", "u", "rho2"])
}

pub fn render_with(p: &MPoly, names: &[&str; NVARS]) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut s = String::new();
    for (i, (m, c)) in p.terms.iter().rev().enumerate() {
        let neg = c.sign() == Sign::Minus;
        let ca = c.abs();
        if i == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let mut parts: Vec<String> = Vec::new();
        if !ca.is_one() || *m == [0; NVARS] {
            parts.push(ca.to_string());
        }
        for v in 0..NVARS {
            if m[v] == 1 {
                parts.push(names[v].to_string());
            } else if m[v] > 1 {
                parts.push(format!("{}^{}", names[v], m[v]));
            }
        }
        s.push_str(&parts.join("*"));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> MPoly {
        MPoly::var(VAR_Q)
    }
    fn u() -> MPoly {
        MPoly::var(VAR_U)
    }
    fn p() -> MPoly {
        MPoly::var(VAR_P)
    }
    fn int(n: i64) -> MPoly {
        MPoly::constant(BigInt::from(n))
    }

    #[test]
    fn arithmetic_and_division() {
        let a = q().add(&u()); // q + u
        let b = q().sub(&u());
        let prod = a.mul(&b); // q^2 - u^2
        assert_eq!(prod, q().mul(&q()).sub(&u().mul(&u())));
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        assert!(prod.div_exact(&p()).is_none());
    }

    #[test]
    fn gcd_simple() {
        // gcd((u+p)(q^2 u + p), (u+p) u) = u + p
        let f1 = u().add(&p());
        let f2 = q().pow(2).mul(&u()).add(&p());
        let a = f1.mul(&f2);
        let b = f1.mul(&u());
        assert_eq!(gcd(&a, &b), f1);
    }

    #[test]
    fn gcd_with_content() {
        let a = int(6).mul(&q().add(&int(1))).mul(&u());
        let b = int(4).mul(&q().add(&int(1)));
        let g = gcd(&a, &b);
        assert_eq!(g, int(2).mul(&q().add(&int(1))));
    }

    #[test]
    fn gcd_coprime() {
        let a = q().pow(3).add(&u());
        let b = q().add(&p());
        assert_eq!(gcd(&a, &b), MPoly::one());
    }

    #[test]
    fn sigma_shift_monomials() {
        let f = u().pow(2).mul(&p()).add(&u());
        let s = f.sigma_nonneg(1);
        // u^2 p -> q^4 u^2 p, u -> q^2 u
        let expect = q()
            .pow(4)
            .mul(&u().pow(2))
            .mul(&p())
            .add(&q().pow(2).mul(&u()));
        assert_eq!(s, expect);
    }

    #[test]
    fn render_ascending() {
        let f = q().pow(2).mul(&int(2)).add(&int(1)).sub(&p().pow(3));
        assert_eq!(render(&f), "1 - rho2^3 + 2*q^2");
    }
}
