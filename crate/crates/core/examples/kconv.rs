use qhopf_core::tensor::*;
use qhopf_core::scalar::QRat;

fn main() {
    let pr = build_projectors();
    let m = pr.pa.sub(&pr.pap);
    let ghi = build_metric_hi();
    let two = QRat::two_q();
    // invert lowering convention pos=0 side=0 ord=0:
    // M[(ij)][(hk)] = (1/[2]) sum_{ab} g_{ka} g_{hb} eps^{abij}
    // => eps^{abij} = [2] sum_{hk} g^{ak} g^{bh} M[(ij)][(hk)]
    let mut nz = Vec::new();
    for a in 0..4 { for b in 0..4 { for i in 0..4 { for j in 0..4 {
        let mut v = QRat::zero();
        for h in 0..4 { for k in 0..4 {
            let t = m.at(4*i+j, 4*h+k);
            if t.is_zero() { continue; }
            v = v + (ghi.at(a,k).clone() * ghi.at(b,h)) * t;
        }}
        v = v * &two;
        if !v.is_zero() {
            nz.push(((a,b,i,j), v.to_string()));
        }
    }}}}
    println!("nonzero count: {}", nz.len());
    for (ix, v) in &nz {
        println!("T[{:?}] = {}", ix, v);
    }
}
