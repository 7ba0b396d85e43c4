//! Integer factorization support for rational root finding.
//!
//! Trial division up to a fixed bound, then Brent's variant of Pollard rho
//! with Miller-Rabin primality checks. Inputs here are leading/trailing
//! coefficients of desk-scale polynomials, so factor sizes stay moderate.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rat::Int;

const TRIAL_BOUND: u64 = 100_000;

/// Factorization of |n| as a map prime -> exponent. Requires n != 0.
pub fn factorize(n: &Int) -> BTreeMap<Int, u32> {
    assert!(!n.is_zero(), "factorize(0)");
    let mut n = n.abs();
    let mut out = BTreeMap::new();
    for p in TrialPrimes::new() {
        if n.is_one() {
            return out;
        }
        let pb = Int::from(p);
        if (&pb * &pb) > n {
            break;
        }
        while (&n % &pb).is_zero() {
            *out.entry(pb.clone()).or_insert(0) += 1;
            n /= &pb;
        }
    }
    if n.is_one() {
        return out;
    }
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_prime(&m) {
            *out.entry(m).or_insert(0) += 1;
            continue;
        }
        let d = brent_rho(&m);
        stack.push(&m / &d);
        stack.push(d);
    }
    out
}

/// All positive divisors of |n| (unordered). Requires n != 0.
pub fn divisors(n: &Int) -> Vec<Int> {
    let f = factorize(n);
    let mut out = vec![Int::one()];
    for (p, e) in f {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for d in &out {
            let mut pe = Int::one();
            for _ in 0..=e {
                next.push(d * &pe);
                pe *= &p;
            }
        }
        out = next;
    }
    out
}

struct TrialPrimes {
    cur: u64,
}

impl TrialPrimes {
    fn new() -> Self {
        TrialPrimes { cur: 0 }
    }
}

impl Iterator for TrialPrimes {
    type Item = u64;
    fn next(&mut self) -> Option<u64> {
        // 2, 3, then 6k+-1 candidates; compositeness among candidates is
        // harmless for trial division.
        let next = match self.cur {
            0 => 2,
            2 => 3,
            3 => 5,
            c => {
                if c % 6 == 5 {
                    c + 2
                } else {
                    c + 4
                }
            }
        };
        self.cur = next;
        if next > TRIAL_BOUND {
            None
        } else {
            Some(next)
        }
    }
}

fn mod_pow(base: &BigInt, exp: &BigInt, modulus: &BigInt) -> BigInt {
    base.modpow(exp, modulus)
}

/// Miller-Rabin with a fixed witness set; deterministic for n < 3.3e24 and a
/// strong probabilistic check beyond.
pub fn is_prime(n: &Int) -> bool {
    if n <= &Int::one() {
        return false;
    }
    let small: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];
    for &p in &small {
        let pb = Int::from(p);
        if n == &pb {
            return true;
        }
        if (n % &pb).is_zero() {
            return false;
        }
    }
    let n_minus_1: Int = n - 1;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for &w in &small {
        let mut x = mod_pow(&Int::from(w), &d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 0..s.saturating_sub(1) {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Finds a nontrivial factor of composite odd n.
fn brent_rho(n: &Int) -> Int {
    debug_assert!(!is_prime(n));
    if n.is_even() {
        return Int::from(2);
    }
    // Perfect-square shortcut: rho degenerates on p^2 less often than people
    // fear, but the sqrt test is cheap.
    let r = n.sqrt();
    if (&r * &r) == *n {
        return r;
    }
    let mut c = Int::one();
    loop {
        if let Some(d) = brent_rho_attempt(n, &c) {
            return d;
        }
        c += 1;
    }
}

fn brent_rho_attempt(n: &Int, c: &Int) -> Option<Int> {
    let mut y = Int::from(2);
    let mut g = Int::one();
    let mut q = Int::one();
    let mut ys = y.clone();
    let mut x = y.clone();
    let m = 128u64;
    let mut r = 1u64;
    while g.is_one() {
        x = y.clone();
        for _ in 0..r {
            y = (&y * &y + c) % n;
        }
        let mut k = 0u64;
        while k < r && g.is_one() {
            ys = y.clone();
            let lim = m.min(r - k);
            for _ in 0..lim {
                y = (&y * &y + c) % n;
                let diff = (&x - &y).abs();
                q = (&q * &diff) % n;
            }
            g = q.gcd(n);
            k += m;
        }
        r <<= 1;
        if r > (1 << 24) {
            return None;
        }
    }
    if &g == n {
        loop {
            ys = (&ys * &ys + c) % n;
            let d = (&x - &ys).abs().gcd(n);
            if !d.is_one() {
                if &d == n {
                    return None;
                }
                return Some(d);
            }
        }
    }
    Some(g)
}

/// Convenience: factors a u64 (used in tests).
pub fn factorize_u64(n: u64) -> BTreeMap<u64, u32> {
    factorize(&Int::from(n))
        .into_iter()
        .map(|(p, e)| (p.to_u64().expect("fits"), e))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_factorizations() {
        assert_eq!(factorize_u64(1), BTreeMap::new());
        assert_eq!(factorize_u64(2), [(2, 1)].into());
        assert_eq!(factorize_u64(360), [(2, 3), (3, 2), (5, 1)].into());
        assert_eq!(factorize_u64(97), [(97, 1)].into());
    }

    #[test]
    fn big_semiprime() {
        let p = Int::from(1_000_003u64);
        let q = Int::from(999_999_937u64);
        let f = factorize(&(&p * &q));
        assert_eq!(f, [(p, 1), (q, 1)].into());
    }

    #[test]
    fn primality() {
        assert!(is_prime(&Int::from(2u32)));
        assert!(is_prime(&Int::from(1_000_000_007u64)));
        assert!(!is_prime(&Int::from(1_000_000_007u64 * 3)));
        // Carmichael number
        assert!(!is_prime(&Int::from(561u32)));
    }

    #[test]
    fn divisor_enumeration() {
        let mut d = divisors(&Int::from(12));
        d.sort();
        let expect: Vec<Int> = [1, 2, 3, 4, 6, 12].iter().map(|&n| Int::from(n)).collect();
        assert_eq!(d, expect);
    }
}
