use prym_core::curve::new_curve;
use prym_core::family::j_functions;
use prym_core::qalg::rat::int;
use prym_core::qalg::{resultant_bivariate, BiPoly, UniPoly, Var};

fn main() {
    let c = new_curve(int(0), int(0), int(1), int(-6), int(5), int(0)).unwrap();
    let jp = j_functions(&c);
    let t0 = std::time::Instant::now();
    let n = jp.j_f.num();
    let d = jp.j_f.den();
    let g = BiPoly::outer(d, n).sub(&BiPoly::outer(n, d));
    let bf = g.div_exact_linear1(&UniPoly::x()).primitive1();
    let n = jp.j_k.num();
    let d = jp.j_k.den();
    let g = BiPoly::outer(d, n).sub(&BiPoly::outer(n, d));
    let bk = g.div_exact_linear1(&UniPoly::x()).primitive1();
    eprintln!(
        "pair loci built: deg1 {:?}/{:?} deg2 {:?}/{:?}  {:?}",
        bf.deg1(),
        bk.deg1(),
        bf.deg2(),
        bk.deg2(),
        t0.elapsed()
    );
    let t1 = std::time::Instant::now();
    let g = prym_core::qalg::gcd_bivariate(&bf, &bk);
    eprintln!("gcd deg1 {:?} in {:?}", g.deg1(), t1.elapsed());
    let t2 = std::time::Instant::now();
    let r = resultant_bivariate(&bf, &bk, Var::First).unwrap();
    eprintln!("resultant deg {:?} in {:?}", r.deg(), t2.elapsed());
    let t3 = std::time::Instant::now();
    let sf = prym_core::qalg::squarefree_part(&r);
    eprintln!("squarefree deg {:?} in {:?}", sf.deg(), t3.elapsed());
    let t4 = std::time::Instant::now();
    let roots = prym_core::qalg::rational_roots(&sf).unwrap();
    eprintln!("roots {:?} in {:?}", roots, t4.elapsed());
}
// appended timing of the full search
