//! JSON encoding of exact values: rationals as "p/q" strings, the point at
//! infinity as "inf", polynomials as coefficient arrays lowest degree first.

use prym_core::qalg::{format_rat, ProjRat, Rat, RatFn, UniPoly};
use prym_core::BinForm;
use serde_json::{json, Value};

pub fn rat_str(r: &Rat) -> Value {
    Value::String(format_rat(r))
}

pub fn proj_str(p: &ProjRat) -> Value {
    Value::String(p.to_string())
}

pub fn poly(p: &UniPoly) -> Value {
    Value::Array(p.coeffs().iter().map(rat_str).collect())
}

pub fn form(f: &BinForm) -> Value {
    Value::Array(f.coeffs().iter().map(rat_str).collect())
}

pub fn ratfn(r: &RatFn) -> Value {
    json!({ "num": poly(r.num()), "den": poly(r.den()) })
}

pub fn proj_set<'a>(it: impl Iterator<Item = &'a ProjRat>) -> Value {
    Value::Array(it.map(proj_str).collect())
}
