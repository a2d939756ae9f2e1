use qhopf_core::tensor::*;
use qhopf_core::scalar::QRat;

fn main() {
    let r4 = build_rhat4();
    println!("braid residual zero: {}", braid_residual(&r4, 4).is_zero());
    let pr = build_projectors();
    println!("ranks: s={} a={} a'={} A={} t={}", pr.ps.rank(), pr.pa.rank(), pr.pap.rank(), pr.pbig_a.rank(), pr.pt.rank());
    // completeness
    let sum = pr.ps.add(&pr.pa).add(&pr.pap).add(&pr.pt);
    println!("completeness: {}", sum.sub(&QMat::identity(16)).is_zero());
    // orthogonality
    println!("pa*pap zero: {}", pr.pa.mul(&pr.pap).is_zero());
    println!("ps idempotent: {}", pr.ps.mul(&pr.ps).sub(&pr.ps).is_zero());
    // spectral: R4 = q Ps - q^-1 PA + q^-3 Pt
    let spect = pr.ps.scale(&QRat::q())
        .sub(&pr.pbig_a.scale(&QRat::qpow(-1)))
        .add(&pr.pt.scale(&QRat::qpow(-3)));
    println!("spectral decomposition: {}", spect.sub(&r4).is_zero());
    // Pt formula: Pt = g^{ij} g_{kl} / (q+q^-1)^2
    let glo = build_metric_lo();
    let ghi = build_metric_hi();
    let inv = QRat::two_q().inv().unwrap();
    let c = inv.clone() * &inv;
    let mut pt2 = QMat::zero(16);
    for i in 0..4 { for j in 0..4 { for k in 0..4 { for l in 0..4 {
        *pt2.at_mut(4*i+j, 4*k+l) = (ghi.at(i,j).clone() * glo.at(k,l)) * &c;
    }}}}
    println!("Pt formula: {}", pt2.sub(&pr.pt).is_zero());
    // eps-rhat identity
    let (r1, r2) = check_eps_rhat_identity();
    println!("eps-rhat identity: {} {}", r1.is_zero(), r2.is_zero());
    // resolve_k
    match resolve_k() {
        Ok(k) => println!("resolved k = {}", k),
        Err(e) => println!("resolve_k FAILED: {}", e),
    }
}
