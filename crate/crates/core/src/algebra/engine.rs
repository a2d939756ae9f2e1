//! Engine construction: oriented rewrite rules from the commutation
//! relations, machine-derived quadratic rules and partial-derivative
//! pushthrough, and the public element operations.

use super::reduce::{Item, Reducer, Strategy};
use super::{Config, Gen, Level, NCElem, Word};
use crate::error::{EngineError, Result};
use crate::scalar::{QRat, Radial};
use crate::tensor;
use num::{BigRational, FromPrimitive};
use std::collections::HashMap;

#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize)]
pub enum OrderPreset {
    /// Derived quadratic rules eliminate the lexicographically highest
    /// pair words.
    Default,
    /// Derived quadratic rules rank pair words by the reversed letter pair.
    RevlexPairs,
}

pub type Rhs = Vec<(Radial, Word)>;

pub struct Engine {
    pub config: Config,
    pub(crate) rules: HashMap<(Gen, Gen), Rhs>,
    /// t[i][j]: coefficient of x^j in the derived rule
    /// pd_i u = sum_j t[i][j] x^j + q^{2 sign} u pd_i.
    pub(crate) pd_t: Vec<Vec<Radial>>,
    /// The engine-derived scalar c with pd_i (x.x) = c (g x)_i + ...
    pub pd_c: QRat,
    /// u^{-1} d(u): equals (1 - q_v^{-2}) theta; finite at q = 1.
    pub(crate) theta_scaled: NCElem,
    /// 1/(1 - q_v^{-2}) when q_v != 1.
    pub(crate) theta_prefactor: Option<Radial>,
    pub(crate) qv: Option<BigRational>,
    pub(crate) is_q_one: bool,
    /// Factor 1/((q_v^2 - 1) u) of the pushthrough difference quotient.
    pub(crate) delta_factor: Option<Radial>,
    /// Factor 1/(1 - q_v^{-2}) of the d-rule difference quotient.
    pub(crate) dq_factor: Option<Radial>,
    pub(crate) ncopies: usize,
}

impl Engine {
    pub fn new(config: Config) -> Result<Engine> {
        Engine::new_inner(config, None, true)
    }

    pub(crate) fn new_inner(
        config: Config,
        elim_override: Option<bool>,
        do_derive: bool,
    ) -> Result<Engine> {
        let qv = match config.q_value {
            None => None,
            Some((n, d)) => {
                if n == 0 || d == 0 {
                    return Err(EngineError::Config("q must be a nonzero rational".into()));
                }
                Some(BigRational::new(n.into(), (d as i64).into()))
            }
        };
        let is_q_one = qv.as_ref().map_or(false, |v| *v == BigRational::from_i64(1).unwrap());
        let ncopies = match config.level {
            Level::Braided(n) => n,
            _ => 0,
        };
        let elim = elim_override.unwrap_or(!matches!(config.level, Level::Braided(_)));
        let mut eng = Engine {
            rules: HashMap::new(),
            pd_t: vec![vec![Radial::zero(); 4]; 4],
            pd_c: QRat::zero(),
            theta_scaled: NCElem::zero(),
            theta_prefactor: None,
            delta_factor: None,
            dq_factor: None,
            qv,
            is_q_one,
            ncopies,
            config,
        };
        eng.rules = eng.build_rule_map(elim)?;
        if do_derive {
            super::derive::derive_pushthrough(&mut eng)?;
            eng.build_theta()?;
        }
        Ok(eng)
    }

    pub fn standard() -> Engine {
        Engine::new(Config::default()).expect("default engine builds")
    }

    pub fn sign(&self) -> i64 {
        self.config.variant.sign()
    }

    /// Specialize a q-rational constant under the engine's q-value.
    pub fn k(&self, c: QRat) -> Radial {
        let c = match &self.qv {
            Some(qv) => c.eval_q(qv).expect("rule constant has no pole at q"),
            None => c,
        };
        Radial::from_qrat(&c)
    }

    pub fn kq(&self, e: i64) -> Radial {
        self.k(QRat::qpow(e))
    }

    /// Bring an externally built coefficient into engine form.
    pub fn coeff(&self, c: &Radial) -> Result<Radial> {
        match &self.qv {
            Some(qv) => c.eval_q(qv),
            None => Ok(c.clone()),
        }
    }

    pub(crate) fn qctx(&self) -> Option<&BigRational> {
        self.qv.as_ref()
    }

    /// sigma^k under the engine's q context.
    pub fn sigma(&self, c: &Radial, k: i64) -> Radial {
        match &self.qv {
            Some(qv) => c.sigma_q(k, qv),
            None => c.sigma(k),
        }
    }

    /// Difference quotient for the pd-pushthrough:
    /// Delta(c) = (sigma^s(c) - c) / ((q_v^2 - 1) u), or c'(u) at q = 1.
    pub(crate) fn delta(&self, c: &Radial) -> Radial {
        if self.is_q_one {
            return c.derivative_u_in(self.qctx());
        }
        let s = self.sign();
        let num = self.sigma(c, s).sub(c);
        if num.is_zero() {
            return Radial::zero();
        }
        num.mul_in(self.delta_factor.as_ref().unwrap(), self.qctx())
    }

    /// Difference quotient for d on radial coefficients:
    /// Dq(c) = (c - sigma^{-s}(c)) / (1 - q_v^{-2s}), or u c'(u) at q = 1.
    pub fn dq(&self, c: &Radial) -> Radial {
        if self.is_q_one {
            return Radial::u().mul_in(&c.derivative_u_in(self.qctx()), self.qctx());
        }
        let s = self.sign();
        let num = c.sub(&self.sigma(c, -s));
        if num.is_zero() {
            return Radial::zero();
        }
        num.mul_in(self.dq_factor.as_ref().unwrap(), self.qctx())
    }

    // ---- Element constructors ----

    pub fn zero(&self) -> NCElem {
        NCElem::zero()
    }

    pub fn one(&self) -> NCElem {
        NCElem::scalar(Radial::one())
    }

    pub fn scalar(&self, c: Radial) -> Result<NCElem> {
        Ok(NCElem::scalar(self.coeff(&c)?))
    }

    pub fn gen(&self, g: Gen) -> NCElem {
        NCElem::from_term(Radial::one(), vec![g])
    }

    pub fn x(&self, i: usize) -> NCElem {
        self.gen(Gen::Y(0, i as u8))
    }

    pub fn xi(&self, i: usize) -> NCElem {
        self.gen(Gen::Xi(i as u8))
    }

    pub fn pd(&self, i: usize) -> NCElem {
        self.gen(Gen::Pd(i as u8))
    }

    pub fn y(&self, copy: usize, i: usize) -> NCElem {
        self.gen(Gen::Y(copy as u8, i as u8))
    }

    pub fn rho2(&self, copy: usize) -> NCElem {
        self.gen(Gen::Rho(copy as u8))
    }

    pub fn zinv(&self, copy: usize) -> NCElem {
        self.gen(Gen::ZInv(copy as u8))
    }

    pub fn lam(&self, e: i32) -> NCElem {
        if e == 0 {
            self.one()
        } else {
            self.gen(Gen::Lam(e))
        }
    }

    // ---- Validation ----

    fn validate_gen(&self, g: &Gen) -> Result<()> {
        match g {
            Gen::Xi(i) | Gen::Pd(i) => {
                if *i > 3 {
                    return Err(EngineError::UnknownGenerator(format!("{:?}", g)));
                }
            }
            Gen::Y(m, i) => {
                if *i > 3 || (*m as usize) > self.ncopies {
                    return Err(EngineError::UnknownGenerator(format!("{:?}", g)));
                }
            }
            Gen::Rho(m) | Gen::ZInv(m) => {
                if *m == 0 || (*m as usize) > self.ncopies {
                    return Err(EngineError::UnknownGenerator(format!("{:?}", g)));
                }
            }
            Gen::Lam(_) => {}
        }
        Ok(())
    }

    pub(crate) fn validate(&self, e: &NCElem) -> Result<()> {
        for w in e.terms.keys() {
            for g in w {
                self.validate_gen(g)?;
            }
        }
        Ok(())
    }

    // ---- Core operations ----

    /// Canonical normal form (leftmost reduction strategy).
    pub fn nf(&self, e: &NCElem) -> Result<NCElem> {
        self.nf_strategy(e, Strategy::Leftmost)
    }

    pub fn nf_strategy(&self, e: &NCElem, strategy: Strategy) -> Result<NCElem> {
        self.validate(e)?;
        let mut red = Reducer::new(self, strategy);
        let mut out = NCElem::zero();
        for (w, c) in &e.terms {
            let mut items = Vec::with_capacity(w.len() + 1);
            items.push(Item::C(self.coeff(c)?));
            items.extend(w.iter().map(|g| Item::G(*g)));
            red.reduce_into(items, &mut out)?;
        }
        Ok(out)
    }

    pub fn add(&self, a: &NCElem, b: &NCElem) -> NCElem {
        let mut out = a.clone();
        for (w, c) in &b.terms {
            out.insert(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, a: &NCElem, b: &NCElem) -> NCElem {
        let mut out = a.clone();
        for (w, c) in &b.terms {
            out.insert(w.clone(), c.neg());
        }
        out
    }

    pub fn neg(&self, a: &NCElem) -> NCElem {
        NCElem {
            terms: a.terms.iter().map(|(w, c)| (w.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &Radial, a: &NCElem) -> Result<NCElem> {
        let c = self.coeff(c)?;
        let mut out = NCElem::zero();
        for (w, cc) in &a.terms {
            out.insert(w.clone(), cc.mul_in(&c, self.qctx()));
        }
        Ok(out)
    }

    pub fn scale_k(&self, c: QRat, a: &NCElem) -> NCElem {
        self.scale(&Radial::from_qrat(&c), a).expect("constant scale")
    }

    pub fn mul(&self, a: &NCElem, b: &NCElem) -> Result<NCElem> {
        self.validate(a)?;
        self.validate(b)?;
        let mut red = Reducer::new(self, Strategy::Leftmost);
        let mut out = NCElem::zero();
        for (wa, ca) in &a.terms {
            for (wb, cb) in &b.terms {
                let mut items = Vec::with_capacity(wa.len() + wb.len() + 2);
                items.push(Item::C(self.coeff(ca)?));
                items.extend(wa.iter().map(|g| Item::G(*g)));
                items.push(Item::C(self.coeff(cb)?));
                items.extend(wb.iter().map(|g| Item::G(*g)));
                red.reduce_into(items, &mut out)?;
            }
        }
        Ok(out)
    }

    pub fn mul_many(&self, factors: &[&NCElem]) -> Result<NCElem> {
        let mut acc = self.one();
        for f in factors {
            acc = self.mul(&acc, f)?;
        }
        Ok(acc)
    }

    /// Commutator ab - ba, normal-formed.
    pub fn commutator(&self, a: &NCElem, b: &NCElem) -> Result<NCElem> {
        Ok(self.sub(&self.mul(a, b)?, &self.mul(b, a)?))
    }

    /// Apply a polynomial differential operator to a partial-free element:
    /// normal-order the product and drop every term still carrying a
    /// partial derivative (it annihilates the constant function 1).
    pub fn act(&self, op: &NCElem, f: &NCElem) -> Result<NCElem> {
        if f.contains_kind(|g| matches!(g, Gen::Pd(_))) {
            return Err(EngineError::OperandContainsPartial);
        }
        let prod = self.mul(op, f)?;
        let mut out = NCElem::zero();
        for (w, c) in prod.terms {
            if !w.iter().any(|g| matches!(g, Gen::Pd(_))) {
                out.insert(w, c);
            }
        }
        Ok(out)
    }

    // ---- Differential ----

    /// Exterior derivative: d x = xi, d xi = 0, d y_mu = d rho_mu^2 = 0,
    /// graded Leibniz, and the q-difference rule on radial coefficients.
    pub fn d(&self, e: &NCElem) -> Result<NCElem> {
        self.validate(e)?;
        let mut out = NCElem::zero();
        for (w, c) in &e.terms {
            if w.iter().any(|g| matches!(g, Gen::Pd(_) | Gen::Lam(_))) {
                return Err(EngineError::SectorViolation(
                    "d is defined on forms, not on differential operators".into(),
                ));
            }
            // d(c) w = Dq(c) theta_scaled w
            let dc = self.dq(c);
            if !dc.is_zero() {
                let theta_w = {
                    let mut t = NCElem::zero();
                    for (tw, tc) in &self.theta_scaled.terms {
                        let mut full = tw.clone();
                        full.extend_from_slice(w);
                        t.insert(full, tc.clone());
                    }
                    t
                };
                let term = self.scale(&dc, &self.nf(&theta_w)?)?;
                out = self.add(&out, &term);
            }
            // c sum_k (+-) w[..k] d(w[k]) w[k+1..]
            for (k, g) in w.iter().enumerate() {
                let dg = match g {
                    Gen::Y(0, i) => Gen::Xi(*i),
                    _ => continue, // d(y_mu) = d(rho^2) = d(zinv)... = 0; d(xi) = 0
                };
                let xi_before: i64 = w[..k].iter().map(|x| x.xi_degree()).sum();
                let sign = if xi_before % 2 == 0 { 1 } else { -1 };
                let mut nw = w[..k].to_vec();
                nw.push(dg);
                nw.extend_from_slice(&w[k + 1..]);
                let term = NCElem::from_term(
                    c.mul_in(&self.k(QRat::from_int(sign)), self.qctx()),
                    nw,
                );
                out = self.add(&out, &self.nf(&term)?);
            }
        }
        Ok(out)
    }

    /// d via the graded theta commutator: -theta e + (-1)^p e theta.
    /// Only asserted on the y-free, rho-free sector.
    pub fn d_via_theta(&self, e: &NCElem) -> Result<NCElem> {
        if e.contains_kind(|g| matches!(g, Gen::Y(m, _) | Gen::Rho(m) | Gen::ZInv(m) if *m > 0)) {
            return Err(EngineError::SectorViolation(
                "theta commutator is not asserted on the braided sector".into(),
            ));
        }
        let p = e
            .xi_degree()
            .ok_or_else(|| EngineError::SectorViolation("element is not xi-homogeneous".into()))?;
        let theta = self.theta()?;
        let sign = if p % 2 == 0 { 1 } else { -1 };
        let left = self.mul(&theta, e)?;
        let right = self.mul(e, &theta)?;
        Ok(self.add(&self.neg(&left), &self.scale_k(QRat::from_int(sign), &right)))
    }

    /// The scaled 1-form u^{-1} d(u) = (1 - q_v^{-2}) theta; well defined
    /// at every q including q = 1.
    pub fn theta_scaled(&self) -> &NCElem {
        &self.theta_scaled
    }

    /// The invariant 1-form theta; errors at the q = 1 specialization
    /// where only (1 - q^{-2}) theta is finite.
    pub fn theta(&self) -> Result<NCElem> {
        match &self.theta_prefactor {
            Some(f) => self.scale(&f.clone(), &self.theta_scaled),
            None => Err(EngineError::PoleAtPoint(
                "theta has a 1/(1-q^{-2}) prefactor, undefined at q = 1".into(),
            )),
        }
    }

    fn build_theta(&mut self) -> Result<()> {
        // d(u) via Leibniz on the q-determinant word x11 x22 - q x12 x21,
        // then theta_scaled = u^{-1} d(u).
        let det_du = {
            let t = |a: Gen, b: Gen, c: QRat| NCElem::from_term(self.k(c), vec![a, b]);
            let mut e = NCElem::zero();
            e = self.add(&e, &t(Gen::Xi(0), Gen::Y(0, 3), QRat::one()));
            e = self.add(&e, &t(Gen::Y(0, 0), Gen::Xi(3), QRat::one()));
            e = self.add(&e, &t(Gen::Xi(1), Gen::Y(0, 2), QRat::q().neg()));
            e = self.add(&e, &t(Gen::Y(0, 1), Gen::Xi(2), QRat::q().neg()));
            e
        };
        let du = self.nf(&det_du)?;
        let uinv = Radial::u().inv_in(self.qctx())?;
        let uinv_elem = NCElem::scalar(self.coeff(&uinv)?);
        self.theta_scaled = self.mul(&uinv_elem, &du)?;
        // prefactor 1/(1 - q_v^{-2})
        let s = self.sign();
        let denom = QRat::one() - QRat::qpow(-2 * s);
        let denom = match &self.qv {
            Some(qv) => denom.eval_q(qv)?,
            None => denom,
        };
        self.theta_prefactor = if denom.is_zero() {
            None
        } else {
            Some(Radial::from_qrat(&denom.inv()?))
        };
        // difference-quotient prefactors
        if !self.is_q_one {
            let d1 = (QRat::qpow(2 * s) - QRat::one()).inv()?;
            let d1 = self.k(d1);
            self.delta_factor = Some(
                d1.mul_in(&Radial::u().inv_in(self.qctx())?, self.qctx()),
            );
            let d2 = (QRat::one() - QRat::qpow(-2 * s)).inv()?;
            self.dq_factor = Some(self.k(d2));
        }
        Ok(())
    }

    // ---- Rule construction ----

    fn build_rule_map(&self, elim: bool) -> Result<HashMap<(Gen, Gen), Rhs>> {
        let mut map: HashMap<(Gen, Gen), Rhs> = HashMap::new();
        let s = self.sign();
        let r = tensor::build_rhat2();
        let rinv = tensor::build_rhat2_inv();
        let (rx, rxi) = if s > 0 { (&r, &rinv) } else { (&rinv, &r) };

        // x-copy commutation rules; copies >= 1 always use the no-elim set.
        for copy in 0..=self.ncopies as u8 {
            let use_elim = elim && copy == 0;
            self.copy_rules(&mut map, copy, use_elim);
        }

        // y_mu y_nu braiding for nu < mu: coefficients from R x R.
        let kron_rr = tensor::interleave_kron(&r, &r);
        for mu in 1..=self.ncopies as u8 {
            for nu in 0..mu {
                for i in 0..4u8 {
                    for j in 0..4u8 {
                        let mut rhs = Rhs::new();
                        for k in 0..4u8 {
                            for l in 0..4u8 {
                                let cval = kron_rr.at(4 * i as usize + j as usize, 4 * k as usize + l as usize);
                                if cval.is_zero() {
                                    continue;
                                }
                                rhs.push((self.k(cval.clone()), vec![Gen::Y(nu, k), Gen::Y(mu, l)]));
                            }
                        }
                        map.insert((Gen::Y(mu, i), Gen::Y(nu, j)), rhs);
                    }
                }
            }
        }

        // x xi and y xi: x^i xi^j = (RxR)^{ij}_{kl} xi^k x^l (hat: inverses).
        let kron_x_xi = tensor::interleave_kron(rx, rx);
        for copy in 0..=self.ncopies as u8 {
            for i in 0..4u8 {
                for j in 0..4u8 {
                    let mut rhs = Rhs::new();
                    for k in 0..4u8 {
                        for l in 0..4u8 {
                            let cval = kron_x_xi.at(4 * i as usize + j as usize, 4 * k as usize + l as usize);
                            if cval.is_zero() {
                                continue;
                            }
                            rhs.push((self.k(cval.clone()), vec![Gen::Xi(k), Gen::Y(copy, l)]));
                        }
                    }
                    map.insert((Gen::Y(copy, i), Gen::Xi(j)), rhs);
                }
            }
        }

        // pd x = delta + R R x pd (transposed index pattern), pd y without
        // the inhomogeneous term; pd xi with inverse matrices.
        for copy in 0..=self.ncopies as u8 {
            for i in 0..4u8 {
                let (al, alp) = ((i / 2) as usize, (i % 2) as usize);
                for j in 0..4u8 {
                    let (be, bep) = ((j / 2) as usize, (j % 2) as usize);
                    let mut rhs = Rhs::new();
                    if copy == 0 && i == j {
                        rhs.push((Radial::one(), Vec::new()));
                    }
                    for g1 in 0..2usize {
                        for g1p in 0..2usize {
                            for d1 in 0..2usize {
                                for d1p in 0..2usize {
                                    // R^{beta delta}_{alpha gamma} R^{beta' delta'}_{alpha' gamma'}
                                    let cval = rx.at(2 * be + d1, 2 * al + g1).clone()
                                        * rx.at(2 * bep + d1p, 2 * alp + g1p);
                                    if cval.is_zero() {
                                        continue;
                                    }
                                    rhs.push((
                                        self.k(cval),
                                        vec![
                                            Gen::Y(copy, (2 * g1 + g1p) as u8),
                                            Gen::Pd((2 * d1 + d1p) as u8),
                                        ],
                                    ));
                                }
                            }
                        }
                    }
                    map.insert((Gen::Pd(i), Gen::Y(copy, j)), rhs);
                }
            }
        }
        for i in 0..4u8 {
            let (al, alp) = ((i / 2) as usize, (i % 2) as usize);
            for j in 0..4u8 {
                let (be, bep) = ((j / 2) as usize, (j % 2) as usize);
                let mut rhs = Rhs::new();
                for g1 in 0..2usize {
                    for g1p in 0..2usize {
                        for d1 in 0..2usize {
                            for d1p in 0..2usize {
                                let cval = rxi.at(2 * be + d1, 2 * al + g1).clone()
                                    * rxi.at(2 * bep + d1p, 2 * alp + g1p);
                                if cval.is_zero() {
                                    continue;
                                }
                                rhs.push((
                                    self.k(cval),
                                    vec![Gen::Xi((2 * g1 + g1p) as u8), Gen::Pd((2 * d1 + d1p) as u8)],
                                ));
                            }
                        }
                    }
                }
                map.insert((Gen::Pd(i), Gen::Xi(j)), rhs);
            }
        }

        // Derived quadratic rules for xi xi and pd pd.
        let (xi_rules, pd_rules) = super::derive::derive_quadratic_rules(self)?;
        for (lhs, rhs) in xi_rules {
            map.insert(lhs, rhs);
        }
        for (lhs, rhs) in pd_rules {
            map.insert(lhs, rhs);
        }

        // rho rules.
        for nu in 1..=self.ncopies as u8 {
            for mu in (nu + 1)..=self.ncopies as u8 {
                // rho_mu rho_nu -> q^{-2} rho_nu rho_mu (nu < mu)
                map.insert(
                    (Gen::Rho(mu), Gen::Rho(nu)),
                    vec![(self.kq(-2), vec![Gen::Rho(nu), Gen::Rho(mu)])],
                );
            }
            for mu in 0..=self.ncopies as u8 {
                for i in 0..4u8 {
                    let c = if nu < mu { self.kq(-2) } else { Radial::one() };
                    map.insert(
                        (Gen::Rho(nu), Gen::Y(mu, i)),
                        vec![(c, vec![Gen::Y(mu, i), Gen::Rho(nu)])],
                    );
                }
            }
            // rho commutes with xi and pd.
            for i in 0..4u8 {
                map.insert(
                    (Gen::Rho(nu), Gen::Xi(i)),
                    vec![(Radial::one(), vec![Gen::Xi(i), Gen::Rho(nu)])],
                );
                map.insert(
                    (Gen::Pd(i), Gen::Rho(nu)),
                    vec![(Radial::one(), vec![Gen::Rho(nu), Gen::Pd(i)])],
                );
            }
        }

        Ok(map)
    }

    /// The six commutation rules of one quaternion copy. With elimination,
    /// the words x11 x22 and x22 x11 are rewritten into the central u plus
    /// the x12 x21 monomial (the letter order is x11 < x22 < x12 < x21);
    /// without elimination the natural letter order 11 < 12 < 21 < 22 is
    /// used and x22 x11 is rewritten via the commutator.
    fn copy_rules(&self, map: &mut HashMap<(Gen, Gen), Rhs>, copy: u8, use_elim: bool) {
        let y = |i: u8| Gen::Y(copy, i);
        let qm1 = self.kq(-1);
        let q1 = self.kq(1);
        // shared swap rules
        map.insert((y(1), y(0)), vec![(qm1.clone(), vec![y(0), y(1)])]);
        map.insert((y(2), y(0)), vec![(qm1.clone(), vec![y(0), y(2)])]);
        map.insert((y(2), y(1)), vec![(Radial::one(), vec![y(1), y(2)])]);
        if use_elim {
            map.insert((y(1), y(3)), vec![(q1.clone(), vec![y(3), y(1)])]);
            map.insert((y(2), y(3)), vec![(q1.clone(), vec![y(3), y(2)])]);
            let u = Radial::u();
            map.insert(
                (y(0), y(3)),
                vec![(u.clone(), Vec::new()), (q1.clone(), vec![y(1), y(2)])],
            );
            map.insert(
                (y(3), y(0)),
                vec![(u, Vec::new()), (qm1.clone(), vec![y(1), y(2)])],
            );
        } else {
            map.insert((y(3), y(1)), vec![(qm1.clone(), vec![y(1), y(3)])]);
            map.insert((y(3), y(2)), vec![(qm1.clone(), vec![y(2), y(3)])]);
            // y22 y11 = y11 y22 - (q - q^-1) y12 y21
            let qdiff = self.k(QRat::q() - QRat::qpow(-1));
            map.insert(
                (y(3), y(0)),
                vec![
                    (Radial::one(), vec![y(0), y(3)]),
                    (qdiff.neg(), vec![y(1), y(2)]),
                ],
            );
        }
    }

    pub(crate) fn rule(&self, a: &Gen, b: &Gen) -> Option<&Rhs> {
        self.rules.get(&(*a, *b))
    }

    /// All rule left-hand sides (for confluence enumeration).
    pub fn rule_lhs(&self) -> Vec<(Gen, Gen)> {
        let mut v: Vec<(Gen, Gen)> = self.rules.keys().cloned().collect();
        v.sort();
        v
    }

    /// Look up the RHS of a rule (for inspection and star consistency).
    pub fn rule_rhs(&self, lhs: &(Gen, Gen)) -> Option<NCElem> {
        self.rules.get(lhs).map(|rhs| {
            let mut e = NCElem::zero();
            for (c, w) in rhs {
                e.insert(w.clone(), c.clone());
            }
            e
        })
    }

    /// Box = pd . pd = sum g^{hk} pd_k pd_h transported to quaternionic
    /// index pairs.
    pub fn box_elem(&self) -> NCElem {
        box_operator(self)
    }
}

/// The invariant Laplacian as an element: sum_{hk} g^{hk} b_k^{-1} b_h^{-1}
/// pd_{pair(k)} pd_{pair(h)}.
pub fn box_operator(eng: &Engine) -> NCElem {
    let ghi = tensor::build_metric_hi();
    let b = tensor::b_diag();
    let mut e = NCElem::zero();
    for h in 0..4usize {
        for k in 0..4usize {
            let gv = ghi.at(h, k);
            if gv.is_zero() {
                continue;
            }
            let c = gv.clone() * &(b[k].clone() * &b[h]).inv().unwrap();
            e.insert(vec![Gen::Pd(k as u8), Gen::Pd(h as u8)], eng.k(c));
        }
    }
    e
}

/// Coefficient crossing data: moving a radial coefficient leftward past a
/// generator multiplies it by sigma^{weight * sign} (and, for a partial
/// derivative, adds the derived x-insertion branch).
pub(crate) fn sigma_weight(g: &Gen) -> i64 {
    match g {
        Gen::Xi(_) => -1,
        Gen::Y(..) => 0,
        Gen::Rho(_) | Gen::ZInv(_) => 0,
        Gen::Pd(_) => 1,
        Gen::Lam(e) => -(*e as i64),
    }
}

/// Lambda commutation weight: Lam^e g = q^{-sign * e * w(g)} g Lam^e.
pub(crate) fn lambda_weight(g: &Gen) -> i64 {
    match g {
        Gen::Xi(_) => 0,
        Gen::Y(..) => 1,
        Gen::Rho(_) => 0,
        Gen::ZInv(_) => -2,
        Gen::Pd(_) => -1,
        Gen::Lam(_) => 0,
    }
}

pub(crate) fn needs_qonly_cross(g: &Gen) -> bool {
    matches!(g, Gen::Y(m, _) | Gen::Rho(m) | Gen::ZInv(m) if *m > 0)
}
