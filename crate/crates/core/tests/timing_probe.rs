use std::time::Instant;
use yangian::algebra::Element;

#[test]
fn timing_probe() {
    let g = Element::generator;
    let x = g(2, 1, 2).mul(&g(1, 2, 1));
    let y = g(3, 2, 2).mul(&g(1, 1, 2));
    let z = g(2, 2, 1).mul(&g(2, 1, 1));
    let t0 = Instant::now();
    let xy = x.mul(&y);
    println!("xy: {:?} terms={}", t0.elapsed(), xy.term_count());
    let t0 = Instant::now();
    let xyz = xy.mul(&z);
    println!("xyz: {:?} terms={}", t0.elapsed(), xyz.term_count());
    let t0 = Instant::now();
    let zyx = z.mul(&y).mul(&x);
    println!("zyx: {:?} terms={}", t0.elapsed(), zyx.term_count());
    let a = g(3, 1, 2).mul(&g(3, 2, 1)).mul(&g(3, 1, 1));
    let t0 = Instant::now();
    let aa = a.mul(&a);
    println!("deg6 w18 square: {:?} terms={}", t0.elapsed(), aa.term_count());
}
