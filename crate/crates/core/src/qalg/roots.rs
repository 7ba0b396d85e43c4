//! Rational roots of rational polynomials by divisor enumeration.

use std::collections::{BTreeSet, HashSet};

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::error::QalgError;
use super::factor::divisors;
use super::poly::{squarefree_part, UniPoly};
use super::rat::{Int, Rat};

/// Above this many candidate pairs the search switches to the mod-prime sieve.
const DIRECT_LIMIT: u128 = 20_000;

/// All rational roots of p, multiplicity discarded.
///
/// Clears denominators, strips the root at 0, reduces to the square-free
/// part, and tests p/q candidates with p dividing the trailing and q the
/// leading integer coefficient. Degree 1 and 2 are solved directly. Small
/// candidate sets are filtered by the Newton conditions (q-p) | f(1) and
/// (q+p) | f(-1); large ones are bucketed by root residues modulo two
/// medium primes before exact verification.
pub fn rational_roots(p: &UniPoly) -> Result<BTreeSet<Rat>, QalgError> {
    if p.is_zero() {
        return Err(QalgError::UndefinedInput("rational roots of the zero polynomial"));
    }
    let mut out = BTreeSet::new();
    let (prim, _) = squarefree_part(p).primitive_int();
    let mut coeffs: Vec<Int> = prim.coeffs().iter().map(|c| c.numer().clone()).collect();
    // strip x^k
    let mut k = 0;
    while coeffs.first().map_or(false, |c| c.is_zero()) {
        coeffs.remove(0);
        k += 1;
    }
    if k > 0 {
        out.insert(Rat::zero());
    }
    if coeffs.len() <= 1 {
        return Ok(out);
    }
    if coeffs.len() == 2 {
        out.insert(Rat::new(-coeffs[0].clone(), coeffs[1].clone()));
        return Ok(out);
    }
    if coeffs.len() == 3 {
        // quadratic formula with exact square test
        let (c, b, a) = (&coeffs[0], &coeffs[1], &coeffs[2]);
        let disc = b * b - Int::from(4) * a * c;
        if !disc.is_negative() {
            let r = disc.sqrt();
            if &r * &r == disc {
                let two_a = Int::from(2) * a;
                out.insert(Rat::new(-b + &r, two_a.clone()));
                out.insert(Rat::new(-b - &r, two_a));
            }
        }
        return Ok(out);
    }

    let trailing = coeffs.first().unwrap().clone();
    let leading = coeffs.last().unwrap().clone();
    let num_divs = divisors(&trailing);
    let den_divs = divisors(&leading);
    let pair_count = (num_divs.len() as u128) * (den_divs.len() as u128);
    if pair_count <= DIRECT_LIMIT {
        direct_search(&coeffs, &num_divs, &den_divs, &mut out);
    } else {
        sieve_search(&coeffs, &num_divs, &den_divs, &mut out);
    }
    Ok(out)
}

fn direct_search(coeffs: &[Int], num_divs: &[Int], den_divs: &[Int], out: &mut BTreeSet<Rat>) {
    let f1: Int = coeffs.iter().sum();
    let fm1: Int = coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| if i % 2 == 0 { c.clone() } else { -c.clone() })
        .sum();
    if f1.is_zero() {
        out.insert(Rat::one());
    }
    if fm1.is_zero() {
        out.insert(-Rat::one());
    }
    for q in den_divs {
        for pnum in num_divs {
            if !pnum.gcd(q).is_one() {
                continue;
            }
            for sign in [1i64, -1] {
                let pn = pnum * Int::from(sign);
                // unity candidates already handled exactly above
                if pn.magnitude() == q.magnitude() {
                    continue;
                }
                // Newton filters at 1 and -1
                let d1 = q - &pn;
                if !f1.is_zero() && !(&f1 % &d1).is_zero() {
                    continue;
                }
                let d2 = q + &pn;
                if !fm1.is_zero() && !(&fm1 % &d2).is_zero() {
                    continue;
                }
                if eval_int_at_fraction_is_zero(coeffs, &pn, q) {
                    out.insert(Rat::new(pn, q.clone()));
                }
            }
        }
    }
}

/// Bucket candidates by residues of roots modulo two primes: a rational
/// root p/q satisfies p = s q mod m for some root s of f mod m.
fn sieve_search(coeffs: &[Int], num_divs: &[Int], den_divs: &[Int], out: &mut BTreeSet<Rat>) {
    const PRIMES: [u64; 6] = [99991, 99989, 99971, 99961, 99929, 99923];
    let leading = coeffs.last().unwrap();
    let mut chosen = Vec::new();
    for m in PRIMES {
        if !(leading % Int::from(m)).is_zero() {
            chosen.push(m);
        }
        if chosen.len() == 2 {
            break;
        }
    }
    if chosen.len() < 2 {
        // enormous smooth leading coefficient; fall back to the direct scan
        direct_search(coeffs, num_divs, den_divs, out);
        return;
    }
    let (m1, m2) = (chosen[0], chosen[1]);
    let s1 = roots_mod_p(coeffs, m1);
    let s2: HashSet<u64> = roots_mod_p(coeffs, m2).into_iter().collect();

    let reduce = |n: &Int, m: u64| -> u64 {
        n.mod_floor(&Int::from(m)).to_u64().expect("residue fits")
    };
    // divisor residues mod m1, sorted for range lookup
    let mut p_by_res: Vec<(u64, u32)> = num_divs
        .iter()
        .enumerate()
        .map(|(i, p)| (reduce(p, m1), i as u32))
        .collect();
    p_by_res.sort_unstable();
    let p_mod2: Vec<u64> = num_divs.iter().map(|p| reduce(p, m2)).collect();

    for q in den_divs {
        let q1 = reduce(q, m1);
        let q2 = reduce(q, m2);
        if q1 == 0 || q2 == 0 {
            // cannot happen: q divides the leading coefficient, which is a
            // unit modulo both chosen primes
            continue;
        }
        let q2_inv = mod_inverse(q2, m2);
        for &s in &s1 {
            for sign_neg in [false, true] {
                // p = sign * s * q mod m1
                let mut target = (s as u128 * q1 as u128 % m1 as u128) as u64;
                if sign_neg {
                    target = (m1 - target) % m1;
                }
                let start = p_by_res.partition_point(|&(r, _)| r < target);
                for &(r, idx) in &p_by_res[start..] {
                    if r != target {
                        break;
                    }
                    let pnum = &num_divs[idx as usize];
                    // second prime check: sign*p/q must be a root mod m2
                    let mut pr2 = p_mod2[idx as usize];
                    if sign_neg {
                        pr2 = (m2 - pr2) % m2;
                    }
                    let ratio = (pr2 as u128 * q2_inv as u128 % m2 as u128) as u64;
                    if !s2.contains(&ratio) {
                        continue;
                    }
                    if !pnum.gcd(q).is_one() {
                        continue;
                    }
                    let pn = if sign_neg { -pnum.clone() } else { pnum.clone() };
                    if eval_int_at_fraction_is_zero(coeffs, &pn, q) {
                        out.insert(Rat::new(pn, q.clone()));
                    }
                }
            }
        }
    }
}

/// All roots of f mod m by full scan (m is a few hundred thousand).
fn roots_mod_p(coeffs: &[Int], m: u64) -> Vec<u64> {
    let mb = Int::from(m);
    let reduced: Vec<u64> = coeffs
        .iter()
        .map(|c| c.mod_floor(&mb).to_u64().expect("residue fits"))
        .collect();
    let mut roots = Vec::new();
    for x in 0..m {
        let mut acc: u64 = 0;
        for c in reduced.iter().rev() {
            acc = ((acc as u128 * x as u128 + *c as u128) % m as u128) as u64;
        }
        if acc == 0 {
            roots.push(x);
        }
    }
    roots
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    // extended Euclid on i128
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (m as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1);
    t.rem_euclid(m as i128) as u64
}

/// Exact test of sum c_i p^i q^(n-i) == 0.
fn eval_int_at_fraction_is_zero(coeffs: &[Int], p: &Int, q: &Int) -> bool {
    let n = coeffs.len() - 1;
    let mut acc = Int::zero();
    let mut ppow = Int::one();
    let mut qpows = vec![Int::one()];
    for _ in 0..n {
        let last = qpows.last().unwrap().clone();
        qpows.push(last * q);
    }
    for (i, c) in coeffs.iter().enumerate() {
        acc += c * &ppow * &qpows[n - i];
        if i < n {
            ppow *= p;
        }
    }
    acc.is_zero()
}
