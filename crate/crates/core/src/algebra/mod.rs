//! The noncommutative core: generators, words, oriented rewrite rules
//! derived from the commutation relations, canonical normal forms, the
//! star map, localization at the radial elements, and the action of
//! differential operators.

mod confluence;
mod derive;
mod engine;
mod reduce;
mod star;

pub use confluence::ConfluenceReport;
pub use engine::{Engine, OrderPreset, box_operator};

use crate::scalar::Radial;
use serde_json::json;
use std::collections::BTreeMap;
use std::fmt;

/// A single noncommutative generator. Quaternionic index pairs
/// (alpha, alpha') with alpha, alpha' in {1,2} are encoded 0..3 as
/// 2(alpha-1) + (alpha'-1), i.e. 0=(11), 1=(12), 2=(21), 3=(22).
///
/// The variant order Xi < Y < Rho < ZInv < Pd < Lam is the block order of
/// normal words; x is the copy-0 vector y_0.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Gen {
    /// xi^{alpha alpha'} = d x^{alpha alpha'} (or the hat differential).
    Xi(u8),
    /// y_mu^{alpha alpha'}; copy 0 is x itself.
    Y(u8, u8),
    /// rho_mu^2, mu >= 1 (braided moduli only).
    Rho(u8),
    /// |z_mu|^{-2}, a formal per-copy inverse used by the multi-instanton
    /// scalar; carries no rewrite rules of its own.
    ZInv(u8),
    /// partial_{alpha alpha'}.
    Pd(u8),
    /// Lambda^e, e != 0.
    Lam(i32),
}

impl Gen {
    pub fn xi_degree(&self) -> i64 {
        match self {
            Gen::Xi(_) => 1,
            _ => 0,
        }
    }

    fn print(&self) -> String {
        let ab = |i: u8| format!("{},{}", i / 2 + 1, i % 2 + 1);
        match self {
            Gen::Xi(i) => format!("xi[{}]", ab(*i)),
            Gen::Y(0, i) => format!("x[{}]", ab(*i)),
            Gen::Y(m, i) => format!("y[{},{}]", m, ab(*i)),
            Gen::Rho(m) => format!("rho[{}]", m),
            Gen::ZInv(m) => format!("zinv[{}]", m),
            Gen::Pd(i) => format!("pd[{}]", ab(*i)),
            Gen::Lam(e) => {
                if *e == 1 {
                    "Lam".to_string()
                } else {
                    format!("Lam^{}", e)
                }
            }
        }
    }
}

pub type Word = Vec<Gen>;

/// A normal-formed element: finite sum coefficient x word, with canonical
/// (block-ordered) word keys and nonzero radial coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct NCElem {
    pub terms: BTreeMap<Word, Radial>,
}

impl NCElem {
    pub fn zero() -> Self {
        NCElem {
            terms: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn from_term(coeff: Radial, word: Word) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(word, coeff);
        }
        NCElem { terms }
    }

    pub fn scalar(c: Radial) -> Self {
        NCElem::from_term(c, Vec::new())
    }

    pub(crate) fn insert(&mut self, word: Word, coeff: Radial) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&coeff);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// Degree in xi; None when the element is not homogeneous.
    pub fn xi_degree(&self) -> Option<i64> {
        let mut deg = None;
        for w in self.terms.keys() {
            let d: i64 = w.iter().map(|g| g.xi_degree()).sum();
            match deg {
                None => deg = Some(d),
                Some(x) if x == d => {}
                _ => return None,
            }
        }
        deg
    }

    pub fn contains_kind(&self, pred: impl Fn(&Gen) -> bool) -> bool {
        self.terms.keys().any(|w| w.iter().any(&pred))
    }

    /// Canonical deterministic printing, parseable by the CLI grammar.
    pub fn print(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (w, c) in &self.terms {
            let cs = format!("{}", c);
            let needs_paren = cs.contains('+') || (cs.contains(" - ")) || cs.contains("sqrt");
            let coeff = if needs_paren && !w.is_empty() {
                format!("({})", cs)
            } else {
                cs
            };
            if w.is_empty() {
                parts.push(coeff);
            } else {
                let ws: Vec<String> = w.iter().map(|g| g.print()).collect();
                if c.is_one() {
                    parts.push(ws.join("*"));
                } else {
                    parts.push(format!("{} * {}", coeff, ws.join("*")));
                }
            }
        }
        parts.join(" + ")
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!(self.print())
    }
}

impl fmt::Debug for NCElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.print())
    }
}

impl fmt::Display for NCElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.print())
    }
}

/// Differential-calculus variant: the standard calculus or the hat
/// calculus obtained by swapping R <-> R^{-1}, q <-> q^{-1}.
#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize)]
pub enum Variant {
    Standard,
    Hat,
}

impl Variant {
    /// +1 for standard, -1 for hat; q_v = q^{sign}.
    pub fn sign(&self) -> i64 {
        match self {
            Variant::Standard => 1,
            Variant::Hat => -1,
        }
    }
}

/// Extension level of the algebra configuration.
#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize)]
pub enum Level {
    /// Polynomial sector: x, xi, partial, Lambda with polynomial radial
    /// coefficients (the q-determinant is eliminated into the central u).
    Core,
    /// Full radial coefficient field: u^{-1}, |x|^{+-1}, the
    /// (q^{2k}u+p)^{-1} family, (1+2u)^{-1} and the square root s.
    Localized,
    /// n braided copies y_mu with moduli rho_mu^2; coefficients restricted
    /// to Q(q) and the q-determinant kept as an explicit quadratic.
    Braided(usize),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Config {
    pub variant: Variant,
    pub level: Level,
    pub order: OrderPreset,
    /// Exact rational value for q, as (num, den); None means symbolic q.
    pub q_value: Option<(i64, u64)>,
    pub max_steps: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            variant: Variant::Standard,
            level: Level::Localized,
            order: OrderPreset::Default,
            q_value: None,
            max_steps: default_max_steps(),
        }
    }
}

pub fn default_max_steps() -> u64 {
    std::env::var("QHOPF_MAX_STEPS")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(1_000_000)
}

impl Config {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "variant": format!("{:?}", self.variant),
            "level": format!("{:?}", self.level),
            "order": format!("{:?}", self.order),
            "q_value": self.q_value.map(|(n, d)| format!("{}/{}", n, d)),
            "max_steps": self.max_steps,
        })
    }
}

/// Debug helpers for derivation inspection (used by examples and tests).
pub fn debug_xx_contraction(eng: &Engine) -> NCElem {
    derive::xx_contraction(eng, 0)
}

impl Engine {
    /// Build without the derived pushthrough (debug only).
    pub fn new_via_inner_for_debug(config: Config) -> crate::error::Result<Engine> {
        Engine::new_inner(config, Some(false), false)
    }
}
