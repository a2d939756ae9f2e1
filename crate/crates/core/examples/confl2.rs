use qhopf_core::algebra::{Config, Engine, Level, OrderPreset, Variant};

fn main() {
    // hat variant
    let mut cfg = Config::default();
    cfg.variant = Variant::Hat;
    let eng = Engine::new(cfg).unwrap();
    let rep = eng.check_confluence(3).unwrap();
    println!("hat localized: confluent = {}", rep.is_confluent());
    // hat basics: u xi = q^-2 xi u in hat variant
    use qhopf_core::scalar::{QRat, Radial};
    use qhopf_core::algebra::NCElem;
    let ue = NCElem::scalar(Radial::u());
    let l = eng.mul(&ue, &eng.xi(0)).unwrap();
    let r = eng.scale_k(QRat::qpow(-2), &eng.mul(&eng.xi(0), &ue).unwrap());
    println!("hat: u xi = q^-2 xi u: {}", eng.sub(&l, &r).is_zero());
    let t2 = eng.mul(&eng.theta().unwrap(), &eng.theta().unwrap()).unwrap();
    println!("hat: theta^2 = 0: {}", t2.is_zero());
    let bx = eng.box_elem();
    let uinv = NCElem::scalar(Radial::u().inv().unwrap());
    println!("hat: act(Box, u^-1) = 0: {}", eng.act(&bx, &uinv).unwrap().is_zero());

    // revlex order preset
    let mut cfg = Config::default();
    cfg.order = OrderPreset::RevlexPairs;
    let eng = Engine::new(cfg).unwrap();
    let rep = eng.check_confluence(3).unwrap();
    println!("revlex-pairs localized: confluent = {}", rep.is_confluent());

    // braided star consistency
    let mut cfg = Config::default();
    cfg.level = Level::Braided(2);
    let eng = Engine::new(cfg).unwrap();
    let bad = eng.star_rule_consistency().unwrap();
    println!("braided(2) star rule consistency: {} offenders", bad.len());
    for b in bad.iter().take(4) { println!("  {}", b); }

    // q-numeric engine at 7/5
    let mut cfg = Config::default();
    cfg.q_value = Some((7, 5));
    let eng = Engine::new(cfg).unwrap();
    let t2 = eng.mul(&eng.theta().unwrap(), &eng.theta().unwrap()).unwrap();
    println!("q=7/5: theta^2 = 0: {}", t2.is_zero());
    println!("q=7/5: act(Box,u^-1) = 0: {}", eng.act(&eng.box_elem(), &uinv).unwrap().is_zero());

    // q = 1 engine
    let mut cfg = Config::default();
    cfg.q_value = Some((1, 1));
    let eng = Engine::new(cfg).unwrap();
    println!("q=1: theta() errors: {}", eng.theta().is_err());
    println!("q=1: act(Box,u^-1) = 0: {}", eng.act(&eng.box_elem(), &uinv).unwrap().is_zero());
    // classical commutativity at q=1
    let mut all = true;
    for i in 0..4 { for j in 0..4 {
        if !eng.commutator(&eng.x(i), &eng.x(j)).unwrap().is_zero() { all = false; } } }
    println!("q=1: x's commute: {}", all);
    println!("q=1: pd_c = {}", eng.pd_c);
}
