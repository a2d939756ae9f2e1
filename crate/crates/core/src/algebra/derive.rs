//! Machine derivation of rules the relations only determine implicitly:
//! the quadratic xi-xi and pd-pd rules (kernel solves against the
//! projector conditions) and the pushthrough of partial derivatives past
//! radial coefficients.

use super::engine::{Engine, OrderPreset, Rhs};
use super::{Gen, Level, NCElem};
use crate::error::{EngineError, Result};
use crate::scalar::{QRat, Radial};
use crate::tensor::{self, QMat};

/// Row-reduce a relation matrix (rows = relations over the 16 pair words)
/// and orient each pivot into a rewrite rule eliminating the highest word.
/// Returns (pivot column, [(column, coefficient)]) with the rule reading
/// word[pivot] -> sum coeff * word[col].
fn oriented_rules(
    rel: &QMat,
    col_rank: &dyn Fn(usize) -> usize,
) -> Vec<(usize, Vec<(usize, QRat)>)> {
    let n = rel.n; // 16 columns; rel is square here (stacked rows reduced below)
    let mut cols: Vec<usize> = (0..n).collect();
    cols.sort_by_key(|&c| std::cmp::Reverse(col_rank(c)));
    // Gather rows.
    let mut rows: Vec<Vec<QRat>> = (0..n)
        .map(|r| (0..n).map(|c| rel.at(r, c).clone()).collect())
        .filter(|row: &Vec<QRat>| row.iter().any(|v| !v.is_zero()))
        .collect();
    // RREF over the permuted column order.
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut rank = 0;
    for &c in &cols {
        let piv = (rank..rows.len()).find(|&r| !rows[r][c].is_zero());
        let Some(p) = piv else { continue };
        rows.swap(rank, p);
        let inv = rows[rank][c].inv().unwrap();
        for v in rows[rank].iter_mut() {
            *v = v.clone() * &inv;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_zero() {
                let f = rows[r][c].clone();
                for cc in 0..n {
                    let t = rows[rank][cc].clone() * &f;
                    rows[r][cc] = rows[r][cc].clone() + t.neg();
                }
            }
        }
        pivots.push((rank, c));
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    let mut out = Vec::new();
    for (r, c) in pivots {
        let mut rhs = Vec::new();
        for cc in 0..n {
            if cc != c && !rows[r][cc].is_zero() {
                rhs.push((cc, rows[r][cc].neg()));
            }
        }
        out.push((c, rhs));
    }
    out
}

type RulePair = Vec<((Gen, Gen), Rhs)>;

/// Solve (P_s x P_s + P_a x P_a) xi xi = 0 and P_A pd pd = 0 into oriented
/// rules; checks the expected dimensions (6 xi monomials, 10 pd monomials).
pub(crate) fn derive_quadratic_rules(eng: &Engine) -> Result<(RulePair, RulePair)> {
    let (ps2, pa2) = tensor::build_proj2();
    // xi xi relations: rows of (Ps x Ps) and (Pa x Pa), columns = xi^a xi^b.
    let ss = tensor::interleave_kron(&ps2, &ps2);
    let aa = tensor::interleave_kron(&pa2, &pa2);
    let mut rel = QMat::zero(16);
    // Stack by adding aa-rows after ss-rows would need 32 rows; instead use
    // the fact that Ps x Ps + Pa x Pa is itself a projector with the same
    // kernel intersection... they are orthogonal, so the sum has the union
    // of row spaces.
    for r in 0..16 {
        for c in 0..16 {
            *rel.at_mut(r, c) = ss.at(r, c).clone() + aa.at(r, c);
        }
    }
    let xi_rank = |c: usize| -> usize {
        let (a, b) = (c / 4, c % 4);
        match eng.config.order {
            OrderPreset::Default => 4 * a + b,
            OrderPreset::RevlexPairs => 4 * b + a,
        }
    };
    let xi_rules_raw = oriented_rules(&rel, &xi_rank);
    if xi_rules_raw.len() != 10 {
        return Err(EngineError::RankMismatch {
            expected: 10,
            got: xi_rules_raw.len(),
        });
    }
    let mut xi_rules = RulePair::new();
    for (piv, rhs) in xi_rules_raw {
        let (a, b) = ((piv / 4) as u8, (piv % 4) as u8);
        let rhs: Rhs = rhs
            .into_iter()
            .map(|(c, v)| {
                let (g, d) = ((c / 4) as u8, (c % 4) as u8);
                (eng.k(v), vec![Gen::Xi(g), Gen::Xi(d)])
            })
            .collect();
        xi_rules.push(((Gen::Xi(a), Gen::Xi(b)), rhs));
    }

    // pd pd relations: sum_{ij} P_A^{ij}_{hk} pd_j pd_i = 0; the column of
    // the word [pd_j, pd_i] is 4j + i.
    let sa = tensor::interleave_kron(&ps2, &pa2);
    let as_ = tensor::interleave_kron(&pa2, &ps2);
    let mut pa_pair = QMat::zero(16);
    for r in 0..16 {
        for c in 0..16 {
            *pa_pair.at_mut(r, c) = sa.at(r, c).clone() + as_.at(r, c);
        }
    }
    let mut rel_pd = QMat::zero(16);
    for h in 0..4 {
        for k in 0..4 {
            for i in 0..4 {
                for j in 0..4 {
                    *rel_pd.at_mut(4 * h + k, 4 * j + i) = pa_pair.at(4 * i + j, 4 * h + k).clone();
                }
            }
        }
    }
    let pd_rank = |c: usize| -> usize {
        let (a, b) = (c / 4, c % 4);
        match eng.config.order {
            OrderPreset::Default => 4 * a + b,
            OrderPreset::RevlexPairs => 4 * b + a,
        }
    };
    let pd_rules_raw = oriented_rules(&rel_pd, &pd_rank);
    if pd_rules_raw.len() != 6 {
        return Err(EngineError::RankMismatch {
            expected: 6,
            got: pd_rules_raw.len(),
        });
    }
    let mut pd_rules = RulePair::new();
    for (piv, rhs) in pd_rules_raw {
        let (a, b) = ((piv / 4) as u8, (piv % 4) as u8);
        let rhs: Rhs = rhs
            .into_iter()
            .map(|(c, v)| {
                let (g, d) = ((c / 4) as u8, (c % 4) as u8);
                (eng.k(v), vec![Gen::Pd(g), Gen::Pd(d)])
            })
            .collect();
        pd_rules.push(((Gen::Pd(a), Gen::Pd(b)), rhs));
    }
    Ok((xi_rules, pd_rules))
}

/// The invariant quadratic x.x = eps eps x x as an element (2-letter words).
pub(crate) fn xx_contraction(eng: &Engine, copy: u8) -> NCElem {
    let lo = tensor::eps_lo();
    let mut e = NCElem::zero();
    for al in 0..2usize {
        for alp in 0..2usize {
            for be in 0..2usize {
                for bep in 0..2usize {
                    let c = lo[al][be].clone() * &lo[alp][bep];
                    if c.is_zero() {
                        continue;
                    }
                    e.insert(
                        vec![
                            Gen::Y(copy, (2 * al + alp) as u8),
                            Gen::Y(copy, (2 * be + bep) as u8),
                        ],
                        eng.k(c),
                    );
                }
            }
        }
    }
    e
}

/// Derive pd_i u = sum_j t[i][j] x^j + q^{2 sign} u pd_i by double
/// application of the pd-x rule to the invariant quadratic x.x, in a
/// temporary configuration without determinant elimination.
pub(crate) fn derive_pushthrough(eng: &mut Engine) -> Result<()> {
    let mut cfg = eng.config.clone();
    cfg.level = Level::Braided(0);
    let tmp = Engine::new_inner(cfg, Some(false), false)?;
    let xx = xx_contraction(&tmp, 0);
    let s = eng.sign();
    let q2s = tmp.kq(2 * s);
    // x.x = (1 + q^2) u under elimination; derive and then divide.
    let norm = QRat::one() + QRat::qpow(2);
    let norm_inv = eng.k(norm.inv()?);
    let mut t = vec![vec![Radial::zero(); 4]; 4];
    let mut c_report: Option<Radial> = None;
    let glo = tensor::build_metric_lo();
    let b = tensor::b_diag();
    for i in 0..4usize {
        let lhs = tmp.mul(&tmp.pd(i), &xx)?;
        let rhs = tmp.scale(&q2s, &tmp.mul(&xx, &tmp.pd(i))?)?;
        let resid = tmp.sub(&lhs, &rhs);
        for (w, cval) in &resid.terms {
            match w.as_slice() {
                [Gen::Y(0, j)] => {
                    t[i][*j as usize] = cval.mul_in(&norm_inv, eng.qctx());
                }
                _ => {
                    return Err(EngineError::InconsistentDerivation(format!(
                        "pd (x.x) left a non-linear residue {:?}",
                        w
                    )))
                }
            }
        }
        // proportionality check against (1/b_i) g_{ij} (1/b_j)
        for j in 0..4usize {
            let m = glo.at(i, j).clone() * &(b[j].clone() * &b[i]).inv().unwrap();
            let m = eng.k(m);
            if m.is_zero() {
                if !t[i][j].is_zero() {
                    return Err(EngineError::InconsistentDerivation(
                        "pushthrough x-term is not metric-shaped".into(),
                    ));
                }
                continue;
            }
            let c = t[i][j].div_in(&m, eng.qctx())?;
            match &c_report {
                None => c_report = Some(c),
                Some(prev) => {
                    if *prev != c {
                        return Err(EngineError::InconsistentDerivation(
                            "pushthrough constant is not uniform".into(),
                        ));
                    }
                }
            }
        }
    }
    eng.pd_t = t;
    // Report c in the pd_i (x.x) = c (g x)_i + ... normalization, which
    // specializes to the classical 2 at q = 1.
    let c_full = c_report
        .and_then(|c| c.as_qrat())
        .ok_or_else(|| EngineError::InconsistentDerivation("constant not in Q(q)".into()))?;
    eng.pd_c = match &eng.qv {
        None => c_full * &norm,
        Some(qv) => c_full * &norm.eval_q(qv)?,
    };
    Ok(())
}
