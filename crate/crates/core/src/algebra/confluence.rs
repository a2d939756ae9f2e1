//! Diamond-lemma checking: every overlap ambiguity of adjacent rules must
//! resolve to a single normal form along all reduction paths.

use super::engine::Engine;
use super::reduce::Strategy;
use super::{Gen, NCElem};
use crate::error::Result;
use crate::scalar::Radial;

#[derive(Debug, Clone)]
pub struct ConfluenceReport {
    pub overlaps_checked: usize,
    pub failures: Vec<String>,
}

impl ConfluenceReport {
    pub fn is_confluent(&self) -> bool {
        self.failures.is_empty()
    }
}

impl Engine {
    /// Enumerate overlap words g1 g2 g3 where (g1,g2) and (g2,g3) are both
    /// rule left-hand sides, reduce along both first steps, and compare
    /// the resulting normal forms. Lambda letters participate through
    /// their coded rules (sampled exponents). `max_len` >= 3 additionally
    /// checks longer words built from chained rule letters.
    pub fn check_confluence(&self, max_len: usize) -> Result<ConfluenceReport> {
        let lhs = self.rule_lhs();
        let mut heads: std::collections::HashMap<Gen, Vec<Gen>> = Default::default();
        for (a, b) in &lhs {
            heads.entry(*a).or_default().push(*b);
        }
        let mut failures = Vec::new();
        let mut checked = 0;
        // Length-3 overlaps from the rule table.
        for (a, b) in &lhs {
            if let Some(tails) = heads.get(b) {
                for c in tails {
                    checked += 1;
                    if let Some(msg) = self.check_overlap(&[*a, *b, *c])? {
                        failures.push(msg);
                    }
                }
            }
        }
        // Lambda overlaps: Lam g h and Lam Lam g samples.
        let letters = self.alphabet();
        for e in [-1i32, 1, 2] {
            for (a, b) in &lhs {
                checked += 1;
                if let Some(msg) = self.check_overlap(&[Gen::Lam(e), *a, *b])? {
                    failures.push(msg);
                }
            }
            for g in &letters {
                checked += 1;
                if let Some(msg) = self.check_overlap(&[Gen::Lam(e), Gen::Lam(-e), *g])? {
                    failures.push(msg);
                }
            }
        }
        // Longer words: all rule-LHS chains up to max_len letters.
        if max_len > 3 {
            let mut words: Vec<Vec<Gen>> = lhs.iter().map(|(a, b)| vec![*a, *b]).collect();
            for _ in 3..=max_len {
                let mut next = Vec::new();
                for w in &words {
                    let last = w.last().unwrap();
                    if let Some(tails) = heads.get(last) {
                        for c in tails {
                            let mut nw = w.clone();
                            nw.push(*c);
                            next.push(nw);
                        }
                    }
                }
                for w in &next {
                    if w.len() >= 3 {
                        checked += 1;
                        if let Some(msg) = self.check_overlap(w)? {
                            failures.push(msg);
                        }
                    }
                }
                words = next;
            }
        }
        Ok(ConfluenceReport {
            overlaps_checked: checked,
            failures,
        })
    }

    fn alphabet(&self) -> Vec<Gen> {
        let mut v = Vec::new();
        for i in 0..4u8 {
            v.push(Gen::Xi(i));
            v.push(Gen::Pd(i));
            for m in 0..=self.ncopies as u8 {
                v.push(Gen::Y(m, i));
            }
        }
        for m in 1..=self.ncopies as u8 {
            v.push(Gen::Rho(m));
        }
        v
    }

    /// Reduce a word with both strategies; Some(message) on mismatch.
    fn check_overlap(&self, word: &[Gen]) -> Result<Option<String>> {
        let e = NCElem::from_term(Radial::one(), word.to_vec());
        let left = self.nf_strategy(&e, Strategy::Leftmost)?;
        let right = self.nf_strategy(&e, Strategy::Rightmost)?;
        if left == right {
            Ok(None)
        } else {
            Ok(Some(format!(
                "overlap {:?}: leftmost {} != rightmost {}",
                word, left, right
            )))
        }
    }
}
