use prym_core::curve::new_curve;
use prym_core::family::j_functions;
use prym_core::qalg::rat::int;
use prym_core::qalg::{resultant_bivariate, BiPoly, UniPoly, Var};

fn main() {
    let c = new_curve(int(0), int(0), int(1), int(-6), int(5), int(0)).unwrap();
    let jp = j_functions(&c);
    let n = jp.j_f.num();
    let d = jp.j_f.den();
    let g = BiPoly::outer(d, n).sub(&BiPoly::outer(n, d));
    let bf = g.div_exact_linear1(&UniPoly::x()).primitive1();
    let n = jp.j_k.num();
    let d = jp.j_k.den();
    let g = BiPoly::outer(d, n).sub(&BiPoly::outer(n, d));
    let bk = g.div_exact_linear1(&UniPoly::x()).primitive1();
    let r = resultant_bivariate(&bf, &bk, Var::First).unwrap();
    let sf = prym_core::qalg::squarefree_part(&r);
    let (prim, _) = sf.primitive_int();
    let coeffs = prim.coeffs();
    let tc = coeffs.iter().find(|c| !num_traits::Zero::is_zero(*c)).unwrap();
    let lc = coeffs.last().unwrap();
    eprintln!("deg {} tc bits {} lc bits {}", coeffs.len() - 1, tc.numer().bits(), lc.numer().bits());
    let t = std::time::Instant::now();
    let ftc = prym_core::qalg::factor::factorize(tc.numer());
    eprintln!("tc factors {:?} in {:?}", ftc.iter().map(|(p, e)| (p.bits(), e)).collect::<Vec<_>>(), t.elapsed());
    let t = std::time::Instant::now();
    let flc = prym_core::qalg::factor::factorize(lc.numer());
    eprintln!("lc factors {:?} in {:?}", flc.iter().map(|(p, e)| (p.bits(), e)).collect::<Vec<_>>(), t.elapsed());
    let ndiv: u128 = ftc.values().map(|&e| (e as u128) + 1).product();
    let ddiv: u128 = flc.values().map(|&e| (e as u128) + 1).product();
    eprintln!("divisor counts: {} x {}", ndiv, ddiv);
}
