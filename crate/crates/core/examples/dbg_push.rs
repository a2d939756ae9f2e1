use qhopf_core::algebra::{Config, Engine, Gen, Level, NCElem};
use qhopf_core::scalar::QRat;
use qhopf_core::tensor;

fn main() {
    // temp no-elim engine
    let mut cfg = Config::default();
    cfg.level = Level::Braided(0);
    let tmp = Engine::new_via_inner_for_debug(cfg).unwrap();
    let xx = qhopf_core::algebra::debug_xx_contraction(&tmp);
    println!("x.x = {}", xx);
    let q2 = QRat::qpow(2);
    for i in 0..4usize {
        let lhs = tmp.mul(&tmp.pd(i), &xx).unwrap();
        let rhs = tmp.scale_k(q2.clone(), &tmp.mul(&xx, &tmp.pd(i)).unwrap());
        let resid = tmp.sub(&lhs, &rhs);
        println!("i={}: residual = {}", i, resid);
    }
    let glo = tensor::build_metric_lo();
    let b = tensor::b_diag();
    for i in 0..4 {
        for j in 0..4 {
            let m = glo.at(i, j).clone() * &(b[j].clone() * &b[i].inv().unwrap());
            if !m.is_zero() { println!("M[{}][{}] = {}", i, j, m); }
        }
    }
    let _ = Gen::Xi(0);
    let _ = NCElem::zero();
}
