//! Term normalization: coefficient crossing and oriented rule application
//! with an explicit step budget.

use super::engine::{lambda_weight, needs_qonly_cross, sigma_weight, Engine};
use super::{Gen, NCElem};
use crate::error::{EngineError, Result};
use crate::scalar::Radial;

#[derive(Clone, Debug)]
pub enum Item {
    C(Radial),
    G(Gen),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

pub struct Reducer<'a> {
    eng: &'a Engine,
    strategy: Strategy,
    steps: u64,
}

impl<'a> Reducer<'a> {
    pub fn new(eng: &'a Engine, strategy: Strategy) -> Self {
        Reducer {
            eng,
            strategy,
            steps: 0,
        }
    }

    fn bump(&mut self) -> Result<()> {
        self.steps += 1;
        if self.steps > self.eng.config.max_steps {
            Err(EngineError::NonTerminating(self.eng.config.max_steps))
        } else {
            Ok(())
        }
    }

    /// Fully reduce one item sequence, accumulating terms into `out`.
    pub fn reduce_into(&mut self, items: Vec<Item>, out: &mut NCElem) -> Result<()> {
        let mut work: Vec<Vec<Item>> = vec![items];
        while let Some(mut cur) = work.pop() {
            loop {
                let redex = self.find_redex(&cur);
                match redex {
                    None => {
                        // collapsed: coefficients (if any) are in front
                        self.collect(cur, out);
                        break;
                    }
                    Some(pos) => {
                        self.bump()?;
                        let branches = self.apply_at(&cur, pos)?;
                        match branches {
                            Branches::One(items) => {
                                cur = items;
                            }
                            Branches::Many(mut list) => {
                                if list.is_empty() {
                                    break; // term vanished
                                }
                                cur = list.pop().unwrap();
                                work.extend(list);
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn redex_at(&self, items: &[Item], i: usize) -> bool {
        match (&items[i], &items[i + 1]) {
            (Item::C(_), Item::C(_)) => true,
            (Item::G(_), Item::C(_)) => true,
            (Item::G(a), Item::G(b)) => match (a, b) {
                (Gen::Lam(_), Gen::Lam(_)) => true,
                (Gen::Lam(_), _) => true,
                _ => self.eng.rule(a, b).is_some(),
            },
            (Item::C(_), Item::G(_)) => false,
        }
    }

    fn find_redex(&self, items: &[Item]) -> Option<usize> {
        if items.len() < 2 {
            return None;
        }
        match self.strategy {
            Strategy::Leftmost => (0..items.len() - 1).find(|&i| self.redex_at(items, i)),
            Strategy::Rightmost => (0..items.len() - 1).rev().find(|&i| self.redex_at(items, i)),
        }
    }

    fn apply_at(&self, items: &[Item], i: usize) -> Result<Branches> {
        let eng = self.eng;
        let splice = |mid: Vec<Item>| -> Vec<Item> {
            let mut v = Vec::with_capacity(items.len() + mid.len());
            v.extend_from_slice(&items[..i]);
            v.extend(mid);
            v.extend_from_slice(&items[i + 2..]);
            v
        };
        match (&items[i], &items[i + 1]) {
            (Item::C(a), Item::C(b)) => {
                let c = a.mul_in(b, eng.qctx());
                if c.is_zero() {
                    Ok(Branches::Many(vec![]))
                } else {
                    Ok(Branches::One(splice(vec![Item::C(c)])))
                }
            }
            (Item::G(g), Item::C(c)) => {
                if needs_qonly_cross(g) && !c.is_q_only() {
                    // Braided generators admit only Q(q) coefficients.
                    return Err(EngineError::MixedConfiguration);
                }
                let w = sigma_weight(g) * eng.sign();
                let mut branches = Vec::new();
                if let Gen::Pd(idx) = g {
                    // pd_i c = Delta(c) sum_j t[i][j] x^j + sigma^s(c) pd_i
                    let dc = eng.delta(c);
                    if !dc.is_zero() {
                        for j in 0..4usize {
                            let t = &eng.pd_t[*idx as usize][j];
                            if t.is_zero() {
                                continue;
                            }
                            branches.push(splice(vec![
                                Item::C(dc.mul_in(t, eng.qctx())),
                                Item::G(Gen::Y(0, j as u8)),
                            ]));
                        }
                    }
                    branches.push(splice(vec![Item::C(eng.sigma(c, w)), Item::G(*g)]));
                    return Ok(Branches::Many(branches));
                }
                let c2 = if w == 0 { c.clone() } else { eng.sigma(c, w) };
                Ok(Branches::One(splice(vec![Item::C(c2), Item::G(*g)])))
            }
            (Item::G(Gen::Lam(e)), Item::G(Gen::Lam(f))) => {
                let s = e + f;
                if s == 0 {
                    Ok(Branches::One(splice(vec![])))
                } else {
                    Ok(Branches::One(splice(vec![Item::G(Gen::Lam(s))])))
                }
            }
            (Item::G(Gen::Lam(e)), Item::G(g)) => {
                // Lam^e g = q^{-sign e w(g)} g Lam^e
                let pow = -eng.sign() * (*e as i64) * lambda_weight(g);
                let c = eng.kq(pow);
                Ok(Branches::One(splice(vec![
                    Item::C(c),
                    Item::G(*g),
                    Item::G(Gen::Lam(*e)),
                ])))
            }
            (Item::G(a), Item::G(b)) => {
                let rhs = eng.rule(a, b).expect("redex must have a rule");
                let mut branches = Vec::with_capacity(rhs.len());
                for (c, w) in rhs {
                    let mut mid = Vec::with_capacity(w.len() + 1);
                    mid.push(Item::C(c.clone()));
                    mid.extend(w.iter().map(|g| Item::G(*g)));
                    branches.push(splice(mid));
                }
                Ok(Branches::Many(branches))
            }
            (Item::C(_), Item::G(_)) => unreachable!("not a redex"),
        }
    }

    fn collect(&self, items: Vec<Item>, out: &mut NCElem) {
        let mut coeff = Radial::one();
        let mut word = Vec::new();
        for it in items {
            match it {
                Item::C(c) => coeff = coeff.mul_in(&c, self.eng.qctx()),
                Item::G(g) => word.push(g),
            }
        }
        out.insert(word, coeff);
    }
}

enum Branches {
    One(Vec<Item>),
    Many(Vec<Vec<Item>>),
}
