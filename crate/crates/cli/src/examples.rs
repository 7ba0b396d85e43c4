//! End-to-end replay of the three worked curves with one PASS/FAIL line per
//! assertion. Two documented deviations between the source text and exact
//! evaluation are reported as EXPECTED-DEVIATION rather than failures.

use serde_json::{json, Value};

use prym_core::curve::{new_curve, BiellipticCurve};
use prym_core::family::j_functions;
use prym_core::qalg::rat::{int, rat};
use prym_core::qalg::{ratfn_eval, ProjRat, RatFn, UniPoly};
use prym_core::torelli::{find_nodes, image_contains, period_fiber, NodePair};

struct Log {
    entries: Vec<Value>,
    failed: bool,
}

impl Log {
    fn new() -> Self {
        Log {
            entries: vec![],
            failed: false,
        }
    }

    fn check(&mut self, name: &str, ok: bool, detail: &str) {
        self.entries.push(json!({
            "name": name,
            "status": if ok { "PASS" } else { "FAIL" },
            "detail": detail,
        }));
        if !ok {
            self.failed = true;
        }
    }

    fn deviation(&mut self, name: &str, confirmed: bool, detail: &str) {
        // a deviation entry still FAILs if the deviation itself is absent
        self.entries.push(json!({
            "name": name,
            "status": if confirmed { "EXPECTED-DEVIATION" } else { "FAIL" },
            "detail": detail,
        }));
        if !confirmed {
            self.failed = true;
        }
    }
}

fn fin(n: i64, d: i64) -> ProjRat {
    ProjRat::Finite(rat(n, d))
}

fn cube(p: &UniPoly) -> UniPoly {
    &(p * p) * p
}

fn square(p: &UniPoly) -> UniPoly {
    p * p
}

fn curve_52() -> BiellipticCurve {
    new_curve(int(0), int(0), int(1), int(-6), int(5), int(0)).unwrap()
}

fn curve_53() -> BiellipticCurve {
    new_curve(int(1), int(-1), int(0), int(2), int(-3), int(0)).unwrap()
}

fn curve_54() -> BiellipticCurve {
    new_curve(int(1), int(-2), int(3), int(-4), int(3), int(0)).unwrap()
}

pub fn run() -> (Value, bool) {
    let mut log = Log::new();
    example_52(&mut log);
    example_53(&mut log);
    example_54(&mut log);
    let ok = !log.failed;
    let doc = json!({
        "command": "examples",
        "version": env!("CARGO_PKG_VERSION"),
        "assertions": log.entries,
        "all_passed": ok,
    });
    (doc, ok)
}

fn example_52(log: &mut Log) {
    let c = curve_52();
    let jp = j_functions(&c);
    let jf = RatFn::new(
        cube(&UniPoly::from_i64(&[1, -3, 3])).scale(&int(256 * 7)),
        square(&UniPoly::from_i64(&[-1, 5, -6, 1])),
    )
    .unwrap();
    let jk = RatFn::new(
        cube(&UniPoly::from_i64(&[25, -30, 21])).scale(&int(16)),
        square(&UniPoly::from_i64(&[0, 5, -6, 1])).scale(&int(25)),
    )
    .unwrap();
    log.check(
        "curve (0,0,1;-6,5,0): j_F matches the displayed formula",
        jp.j_f == jf,
        "2^8*7 (3a^2-3a+1)^3 / (a^3-6a^2+5a-1)^2",
    );
    log.check(
        "curve (0,0,1;-6,5,0): j_K matches the displayed formula",
        jp.j_k == jk,
        "2^4 (21a^2-30a+25)^3 / (5^2 (a(a-1)(a-5))^2)",
    );
    let j_inf = (
        ratfn_eval(&jp.j_f, &ProjRat::Inf),
        ratfn_eval(&jp.j_k, &ProjRat::Inf),
    );
    log.check(
        "curve (0,0,1;-6,5,0): value at infinity",
        j_inf == (fin(48384, 1), fin(148176, 25)),
        "(2^8 3^3 7, 2^4 3^3 7^3/5^2)",
    );
    log.check(
        "curve (0,0,1;-6,5,0): swapped infinity value escapes the image",
        !image_contains(&c, &fin(148176, 25), &fin(48384, 1))
            && image_contains(&c, &fin(48384, 1), &fin(148176, 25)),
        "membership decided by exact elimination",
    );
    let nodes = find_nodes(&c).unwrap_or_default();
    let node = NodePair {
        a1: fin(-1, 3),
        a2: fin(5, 6),
        value: (fin(338688, 169), fin(148176, 25)),
    };
    log.check(
        "curve (0,0,1;-6,5,0): node (-1/3, 5/6) with its printed value",
        nodes.contains(&node),
        "value (2^8 3^3 7^2/13^2, 2^4 3^3 7^3/5^2)",
    );
    log.check(
        "curve (0,0,1;-6,5,0): j_F and j_K have no common ramification point",
        !prym_core::torelli::common_ramification(&c),
        "square-free ramification loci are coprime",
    );
}

fn example_53(log: &mut Log) {
    let c = curve_53();
    let jp = j_functions(&c);
    let jf = RatFn::new(
        cube(&UniPoly::from_i64(&[27, 18, 7])).scale(&int(64)),
        square(&UniPoly::from_i64(&[-9, -9, 1, 1])).scale(&int(9)),
    )
    .unwrap();
    let jk = RatFn::new(
        cube(&UniPoly::from_i64(&[9, -6, 13])).scale(&int(16)),
        square(&UniPoly::from_i64(&[0, -3, 2, 1])).scale(&int(9)),
    )
    .unwrap();
    log.check(
        "curve (1,-1,0;2,-3,0): j_F matches the displayed formula",
        jp.j_f == jf,
        "2^6 (7a^2+18a+27)^3 / (3^2 ((a+1)(a-3)(a+3))^2)",
    );
    log.check(
        "curve (1,-1,0;2,-3,0): j_K matches the displayed formula",
        jp.j_k == jk,
        "2^4 (13a^2-6a+9)^3 / (3^2 (a(a-1)(a+3))^2)",
    );
    let target = fin(21952, 9);
    let fiber = period_fiber(&c, &target).unwrap();
    let side_f: std::collections::BTreeSet<ProjRat> = [
        ProjRat::Inf,
        fin(-5, 1),
        fin(-3, 2),
        fin(3, 5),
        fin(-3, 7),
        fin(-15, 7),
    ]
    .into();
    let side_k: std::collections::BTreeSet<ProjRat> = [
        fin(-1, 1),
        fin(9, 1),
        fin(-1, 3),
        fin(3, 5),
        fin(9, 5),
        fin(3, 11),
    ]
    .into();
    log.check(
        "curve (1,-1,0;2,-3,0): twelve-point fiber over 21952/9",
        fiber.side_f == side_f && fiber.side_k == side_k,
        "six solutions on each side, a = 3/5 on both",
    );
    let at = |a: ProjRat| (ratfn_eval(&jp.j_f, &a), ratfn_eval(&jp.j_k, &a));
    log.check(
        "curve (1,-1,0;2,-3,0): crossing pair j(-3/2) and j(9)",
        at(fin(-3, 2)) == (fin(21952, 9), fin(148176, 25))
            && at(fin(9, 1)) == (fin(148176, 25), fin(21952, 9)),
        "the two values swap coordinates",
    );
    // the displayed lists are labeled by fibers isomorphic to the base
    // curve, but exact evaluation shows both lists solve j = 21952/9, the
    // j-invariant of the dual base, not of the base (35152/9)
    let base_target = c.j_base();
    let dual_target = c.j_dual_base();
    let deviation_holds = dual_target == fin(21952, 9)
        && base_target == fin(35152, 9)
        && fiber.side_f.len() == 6
        && period_fiber(&c, &base_target).unwrap().side_f != side_f;
    log.deviation(
        "curve (1,-1,0;2,-3,0): printed fiber lists solve j = j of the dual base",
        deviation_holds,
        "the source labels the lists by the base curve; exact evaluation pins the target to 21952/9 = j of the dual base",
    );
}

fn example_54(log: &mut Log) {
    let c = curve_54();
    let jp = j_functions(&c);
    let jf = RatFn::new(
        cube(&UniPoly::from_i64(&[441, -84, 79])).scale(&int(64)),
        square(&UniPoly::from_i64(&[0, -21, 4, 1])).scale(&int(9 * 25 * 49)),
    )
    .unwrap();
    let jk = RatFn::new(
        cube(&UniPoly::from_i64(&[9, -12, 7])).scale(&int(64)),
        square(&UniPoly::from_i64(&[0, 3, -4, 1])).scale(&int(9)),
    )
    .unwrap();
    log.check(
        "curve (1,-2,3;-4,3,0): j_F matches the displayed formula",
        jp.j_f == jf,
        "2^6 (79a^2-84a+441)^3 / (3^2 5^2 7^2 (a(a-3)(a+7))^2)",
    );
    log.check(
        "curve (1,-2,3;-4,3,0): j_K matches the displayed formula",
        jp.j_k == jk,
        "2^6 (7a^2-12a+9)^3 / (3^2 (a(a-1)(a-3))^2)",
    );
    log.check(
        "curve (1,-2,3;-4,3,0): the image curve is self-symmetric",
        prym_core::torelli::image_symmetry(&c).unwrap_or(false),
        "reduced eliminant proportional to its transpose",
    );
    let v = fin(3796416, 1225);
    let nodes = find_nodes(&c).unwrap_or_default();
    let node = NodePair {
        a1: fin(-3, 4),
        a2: fin(21, 11),
        value: (v.clone(), v.clone()),
    };
    log.check(
        "curve (1,-2,3;-4,3,0): node (-3/4, 21/11) with equal coordinates",
        nodes.contains(&node),
        "both coordinates 2^6 3^3 13^3 / (5^2 7^2)",
    );
    // the source prints the node parameter as -4/3; exact evaluation shows
    // the value only matches at -3/4
    let deviation_holds = ratfn_eval(&jp.j_f, &fin(-4, 3)) != v
        && ratfn_eval(&jp.j_k, &fin(-4, 3)) != v
        && ratfn_eval(&jp.j_f, &fin(-3, 4)) == v
        && ratfn_eval(&jp.j_k, &fin(-3, 4)) == v;
    log.deviation(
        "curve (1,-2,3;-4,3,0): printed node parameter -4/3 is -3/4",
        deviation_holds,
        "j(-4/3) has a sixth power of 79 in its numerator and cannot equal the printed value; j(-3/4) matches exactly",
    );
}
