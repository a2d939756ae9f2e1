use qhopf_core::algebra::{Engine, Gen, NCElem};
use qhopf_core::scalar::{QRat, Radial};
use qhopf_core::tensor;

fn main() {
    let eng = Engine::standard();
    // 1. alpha gamma = q gamma alpha (x11 x21 vs q x21 x11)
    let a = eng.mul(&eng.x(0), &eng.x(2)).unwrap();
    let b = eng.scale_k(QRat::q(), &eng.mul(&eng.x(2), &eng.x(0)).unwrap());
    println!("1. alpha gamma = q gamma alpha: {}", eng.sub(&a, &b).is_zero());

    // 2. [alpha, alpha*] = (1-q^2) gamma gamma*: x11 x22 - x22 x11 = (1-q^2) x21 (-q^-1 x12)
    let lhs = eng.commutator(&eng.x(0), &eng.x(3)).unwrap();
    let gg = eng.mul(&eng.x(2), &eng.x(1)).unwrap();
    let rhs = eng.scale_k((QRat::one() - QRat::q()*&QRat::q()) * &QRat::qpow(-1).neg(), &gg);
    println!("2. [a,a*]=(1-q^2)gg*: {}", eng.sub(&lhs, &rhs).is_zero());

    // 3. det_q = x11x22 - q x12x21 -> u
    let det = eng.sub(&eng.mul(&eng.x(0), &eng.x(3)).unwrap(),
                      &eng.scale_k(QRat::q(), &eng.mul(&eng.x(1), &eng.x(2)).unwrap()));
    let u_elem = NCElem::scalar(Radial::u());
    println!("3. det_q -> u: {}", eng.sub(&det, &u_elem).is_zero());

    // 4. det central: det * x_i == x_i * det for all i
    let mut central = true;
    for i in 0..4 {
        let c = eng.commutator(&det, &eng.x(i)).unwrap();
        if !c.is_zero() { central = false; println!("   noncentral at {}: {}", i, c); }
    }
    println!("4. det central: {}", central);

    // 5. u xi = q^2 xi u
    let ue = NCElem::scalar(Radial::u());
    let l = eng.mul(&ue, &eng.xi(0)).unwrap();
    let r = eng.scale_k(QRat::qpow(2), &eng.mul(&eng.xi(0), &ue).unwrap());
    println!("5. u xi = q^2 xi u: {}", eng.sub(&l, &r).is_zero());

    // 6. (xxrel): x^i x^j = (R x Rinv)^{ij}_{kl} x^k x^l residuals
    let rr = tensor::build_rhat2();
    let ri = tensor::build_rhat2_inv();
    let kron = tensor::interleave_kron(&rr, &ri);
    let mut xxrel = true;
    for i in 0..4usize { for j in 0..4usize {
        let mut rhs = eng.zero();
        for k in 0..4usize { for l in 0..4usize {
            let c = kron.at(4*i+j, 4*k+l);
            if c.is_zero() { continue; }
            let t = eng.scale_k(c.clone(), &eng.mul(&eng.x(k), &eng.x(l)).unwrap());
            rhs = eng.add(&rhs, &t);
        }}
        let lhs = eng.mul(&eng.x(i), &eng.x(j)).unwrap();
        if !eng.sub(&lhs, &rhs).is_zero() { xxrel = false; println!("   xxrel fails at ({},{})", i, j); }
    }}
    println!("6. xxrel (P_A xx = 0 form): {}", xxrel);

    // 7. x xbar = xbar x = u I2
    // xbar = [[x22, -q^-1 x12], [-q x21, x11]]
    let xb = |r: usize, c: usize| -> NCElem {
        match (r, c) {
            (0,0) => eng.x(3),
            (0,1) => eng.scale_k(QRat::qpow(-1).neg(), &eng.x(1)),
            (1,0) => eng.scale_k(QRat::q().neg(), &eng.x(2)),
            (1,1) => eng.x(0),
            _ => unreachable!(),
        }
    };
    let x = |r: usize, c: usize| -> NCElem {
        match (r, c) {
            (0,0) => eng.x(0), (0,1) => eng.x(1), (1,0) => eng.x(2), (1,1) => eng.x(3),
            _ => unreachable!(),
        }
    };
    let mut blu = true;
    for r in 0..2 { for c in 0..2 {
        let mut s1 = eng.zero();
        let mut s2 = eng.zero();
        for k in 0..2 {
            s1 = eng.add(&s1, &eng.mul(&x(r,k), &xb(k,c)).unwrap());
            s2 = eng.add(&s2, &eng.mul(&xb(r,k), &x(k,c)).unwrap());
        }
        let expect = if r == c { NCElem::scalar(Radial::u()) } else { eng.zero() };
        if !eng.sub(&s1, &expect).is_zero() { blu = false; println!("   x xbar fail at ({},{}): {}", r, c, s1); }
        if !eng.sub(&s2, &expect).is_zero() { blu = false; println!("   xbar x fail at ({},{}): {}", r, c, s2); }
    }}
    println!("7. x xbar = xbar x = u I2: {}", blu);

    // 8. theta: theta^2 = 0; d theta = 0
    let theta = eng.theta().unwrap();
    println!("   theta = {}", theta);
    let t2 = eng.mul(&theta, &theta).unwrap();
    println!("8. theta^2 = 0: {}", t2.is_zero());
    let dtheta = eng.d(&theta).unwrap();
    println!("9. d theta = 0: {}", dtheta.is_zero());

    // 10. d(x11 x21) twice is zero
    let e = eng.mul(&eng.x(0), &eng.x(2)).unwrap();
    let dd = eng.d(&eng.d(&e).unwrap()).unwrap();
    println!("10. d(d(x11 x21)) = 0: {}", dd.is_zero());

    // 11. act(pd11, x11) = 1; act(pd11, 1) = 0
    let one = eng.act(&eng.pd(0), &eng.x(0)).unwrap();
    println!("11. act(pd11,x11) = 1: {}", eng.sub(&one, &eng.one()).is_zero());
    println!("    act(pd11,1) = 0: {}", eng.act(&eng.pd(0), &eng.one()).unwrap().is_zero());

    // 12. derived pushthrough constant c
    println!("12. pd_c = {}", eng.pd_c);

    // 13. act(Box, u^-1) = 0   << the key harmonicity engine check
    let bx = eng.box_elem();
    let uinv = NCElem::scalar(Radial::u().inv().unwrap());
    let r = eng.act(&bx, &uinv).unwrap();
    println!("13. act(Box, u^-1) = 0: {}   [{}]", r.is_zero(), r);

    // 14. d via theta on x11: should equal xi11
    let dvt = eng.d_via_theta(&eng.x(0)).unwrap();
    println!("14. d_via_theta(x11) = xi11: {}", eng.sub(&dvt, &eng.xi(0)).is_zero());

    // 15. star: star(x11) = x22; star(star(gamma)) = gamma; star(det) = det
    let s1 = eng.star(&eng.x(0)).unwrap();
    println!("15. star(x11) = x22: {}", eng.sub(&s1, &eng.x(3)).is_zero());
    let s2 = eng.star(&eng.star(&eng.x(2)).unwrap()).unwrap();
    println!("    star^2(x21) = x21: {}", eng.sub(&s2, &eng.x(2)).is_zero());
    let sdet = eng.star(&det).unwrap();
    println!("    star(det) = det: {}", eng.sub(&sdet, &det).is_zero());
}
