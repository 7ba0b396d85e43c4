//! Exact computations for bielliptic genus-3 curves and their elliptic
//! surfaces: dual families, j-invariant maps, period-map fibers, nodes of
//! the image curve, and integral lattice verification. All output is JSON
//! (CSV for sampling) with every number an exact rational string.

mod examples;
mod report;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use prym_core::curve::{new_curve, BiellipticCurve, CurveError, FiberKind, FiberLocation};
use prym_core::family::{branch_quartic, family_member, j_functions, ramification_profile, PointDescriptor};
use prym_core::hodge_lattice;
use prym_core::qalg::{parse_proj, parse_rat, ratfn_degree, ratfn_eval, ProjRat, Rat};
use prym_core::torelli;

use report::{form, poly, proj_set, proj_str, rat_str, ratfn};

const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser)]
#[command(name = "prym", version, about = "exact bielliptic-curve and elliptic-surface computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CurveSpec {
    /// Coefficients s0,s1,s2 of S (fractions allowed per slot)
    #[arg(long = "s", value_name = "s0,s1,s2", allow_hyphen_values = true)]
    s: String,
    /// Coefficients t1,t2,t3 of the normalized quartic T
    #[arg(long = "t", value_name = "t1,t2,t3", allow_hyphen_values = true)]
    t: String,
}

#[derive(Subcommand)]
enum Command {
    /// Base data of a curve: tau, tau_check, discriminants, fiber report
    CurveInfo(CurveSpec),
    /// The two degree-6 j-maps with their ramification profiles
    Jfun(CurveSpec),
    /// The dual-family member at a finite parameter value
    FamilyMember {
        #[command(flatten)]
        spec: CurveSpec,
        /// Parameter value a (rational)
        #[arg(long, allow_hyphen_values = true)]
        a: String,
    },
    /// Exact solutions of j_F(a) = target and j_K(a) = target
    Fiber {
        #[command(flatten)]
        spec: CurveSpec,
        /// Target j-value ("p/q" or "inf")
        #[arg(long, allow_hyphen_values = true)]
        target: String,
    },
    /// All rational node pairs of the image curve
    Nodes {
        #[command(flatten)]
        spec: CurveSpec,
        /// Seed for the internal second-chart shift (output is seed-independent)
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Whether (u, v) lies on the image of a -> (j_F, j_K)
    Contains {
        #[command(flatten)]
        spec: CurveSpec,
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
    },
    /// Whether the image curve is symmetric under coordinate swap
    Symmetry(CurveSpec),
    /// Full lattice construction and fixture verification
    LatticeVerify,
    /// Sample (a, j_F(a), j_K(a)) over a rational grid
    Sample {
        #[command(flatten)]
        spec: CurveSpec,
        #[arg(long, allow_hyphen_values = true)]
        from: String,
        #[arg(long, allow_hyphen_values = true)]
        to: String,
        #[arg(long, allow_hyphen_values = true)]
        step: String,
        /// Output format: json or csv
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Replay the three worked examples and report PASS/FAIL per assertion
    Examples,
}

enum CliError {
    /// Invalid input: exit code 1.
    Input(String),
    /// Internal consistency failure: exit code 2.
    Consistency(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(doc) => {
            println!("{}", doc);
            ExitCode::SUCCESS
        }
        Err(CliError::Input(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(1)
        }
        Err(CliError::Consistency(msg)) => {
            eprintln!("consistency failure: {}", msg);
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> Result<String, CliError> {
    let doc = match cmd {
        Command::CurveInfo(spec) => pretty(cmd_curve_info(&parse_curve(&spec)?)),
        Command::Jfun(spec) => pretty(cmd_jfun(&parse_curve(&spec)?)),
        Command::FamilyMember { spec, a } => {
            let c = parse_curve(&spec)?;
            let a = parse_rat(&a).map_err(|e| CliError::Input(e.to_string()))?;
            pretty(cmd_family_member(&c, a)?)
        }
        Command::Fiber { spec, target } => {
            let c = parse_curve(&spec)?;
            let t = parse_proj(&target).map_err(|e| CliError::Input(e.to_string()))?;
            pretty(cmd_fiber(&c, &t)?)
        }
        Command::Nodes { spec, seed } => pretty(cmd_nodes(&parse_curve(&spec)?, seed)?),
        Command::Contains { spec, u, v } => {
            let c = parse_curve(&spec)?;
            let u = parse_proj(&u).map_err(|e| CliError::Input(e.to_string()))?;
            let v = parse_proj(&v).map_err(|e| CliError::Input(e.to_string()))?;
            pretty(cmd_contains(&c, &u, &v))
        }
        Command::Symmetry(spec) => pretty(cmd_symmetry(&parse_curve(&spec)?)?),
        Command::LatticeVerify => pretty(cmd_lattice_verify()?),
        Command::Sample {
            spec,
            from,
            to,
            step,
            format,
        } => {
            let c = parse_curve(&spec)?;
            let from = parse_rat(&from).map_err(|e| CliError::Input(e.to_string()))?;
            let to = parse_rat(&to).map_err(|e| CliError::Input(e.to_string()))?;
            let step = parse_rat(&step).map_err(|e| CliError::Input(e.to_string()))?;
            cmd_sample(&c, from, to, step, &format)?
        }
        Command::Examples => {
            let (doc, ok) = examples::run();
            if !ok {
                println!("{}", pretty(doc));
                return Err(CliError::Consistency(
                    "worked-example fixture mismatch".into(),
                ));
            }
            pretty(doc)
        }
    };
    Ok(doc)
}

fn pretty(v: Value) -> String {
    serde_json::to_string_pretty(&v).expect("serialization")
}

fn parse_triple(s: &str, what: &str) -> Result<[Rat; 3], CliError> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(CliError::Input(format!(
            "--{} needs three comma-separated rationals",
            what
        )));
    }
    let mut out = Vec::with_capacity(3);
    for p in parts {
        out.push(parse_rat(p).map_err(|e| CliError::Input(e.to_string()))?);
    }
    Ok(out.try_into().expect("three entries"))
}

fn parse_curve(spec: &CurveSpec) -> Result<BiellipticCurve, CliError> {
    let s = parse_triple(&spec.s, "s")?;
    let t = parse_triple(&spec.t, "t")?;
    let [s0, s1, s2] = s;
    let [t1, t2, t3] = t;
    new_curve(s0, s1, s2, t1, t2, t3).map_err(|e: CurveError| CliError::Input(e.to_string()))
}

fn base_doc(command: &str) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("command".into(), json!(command));
    m.insert("version".into(), json!(VERSION));
    m
}

fn fiber_report_json(c: &BiellipticCurve) -> Value {
    let report = c.singular_fibers();
    let entries: Vec<Value> = report
        .entries
        .iter()
        .map(|e| {
            let loc = match &e.location {
                FiberLocation::Rational(r) => json!({ "a": rat_str(r) }),
                FiberLocation::Factor(f) => json!({ "factor": poly(f) }),
            };
            let ty = match e.kind {
                FiberKind::PairI2 => "1I2-pair",
                FiberKind::I4 => "1I4",
            };
            json!({ "location": loc, "type": ty })
        })
        .collect();
    json!({ "entries": entries, "count_sigma": report.count_sigma })
}

fn cmd_curve_info(c: &BiellipticCurve) -> Value {
    let mut doc = base_doc("curve-info");
    doc.insert("s".into(), Value::Array(c.s().iter().map(rat_str).collect()));
    doc.insert("t".into(), Value::Array(c.t().iter().map(rat_str).collect()));
    doc.insert("tau".into(), poly(c.tau()));
    doc.insert("tau_check".into(), poly(c.tau_check()));
    doc.insert("disc_tau".into(), rat_str(c.disc_tau()));
    doc.insert("disc_tau_check".into(), rat_str(c.disc_tau_check()));
    doc.insert("nonsingular".into(), json!(true));
    doc.insert("j_base".into(), proj_str(&c.j_base()));
    doc.insert("j_dual_base".into(), proj_str(&c.j_dual_base()));
    doc.insert("fiber_report".into(), fiber_report_json(c));
    Value::Object(doc)
}

fn profile_json(r: &prym_core::family::RamificationProfile) -> Value {
    let values: Vec<Value> = r
        .branch_values
        .iter()
        .map(|b| {
            let pts: Vec<Value> = b
                .points
                .iter()
                .map(|p| {
                    let d = match &p.descriptor {
                        PointDescriptor::Rational(x) => json!({ "a": rat_str(x) }),
                        PointDescriptor::Factor(f) => json!({ "factor": poly(f) }),
                        PointDescriptor::Infinity => json!({ "a": "inf" }),
                    };
                    json!({ "point": d, "index": p.index })
                })
                .collect();
            json!({ "value": proj_str(&b.value), "points": pts })
        })
        .collect();
    json!({ "branch_values": values, "total_branching": r.total_branching })
}

fn cmd_jfun(c: &BiellipticCurve) -> Value {
    let jp = j_functions(c);
    let mut doc = base_doc("jfun");
    doc.insert("j_F".into(), ratfn(&jp.j_f));
    doc.insert("j_K".into(), ratfn(&jp.j_k));
    doc.insert("degree_j_F".into(), json!(ratfn_degree(&jp.j_f).expect("degree 6")));
    doc.insert("degree_j_K".into(), json!(ratfn_degree(&jp.j_k).expect("degree 6")));
    doc.insert(
        "ramification_j_F".into(),
        profile_json(&ramification_profile(&jp.j_f).expect("profile")),
    );
    doc.insert(
        "ramification_j_K".into(),
        profile_json(&ramification_profile(&jp.j_k).expect("profile")),
    );
    Value::Object(doc)
}

fn cmd_family_member(c: &BiellipticCurve, a: Rat) -> Result<Value, CliError> {
    let m = family_member(c, &ProjRat::Finite(a.clone()))
        .map_err(|e| CliError::Input(e.to_string()))?;
    let jp = j_functions(c);
    let mut doc = base_doc("family-member");
    doc.insert("a".into(), rat_str(&a));
    doc.insert("c0".into(), rat_str(&m.c0));
    doc.insert("c1".into(), form(&m.c1));
    doc.insert("c2".into(), form(&m.c2));
    doc.insert("branch_quartic".into(), form(&branch_quartic(&m)));
    doc.insert(
        "j_F_at_a".into(),
        proj_str(&ratfn_eval(&jp.j_f, &ProjRat::Finite(a.clone()))),
    );
    doc.insert(
        "j_K_at_a".into(),
        proj_str(&ratfn_eval(&jp.j_k, &ProjRat::Finite(a))),
    );
    Ok(Value::Object(doc))
}

fn cmd_fiber(c: &BiellipticCurve, target: &ProjRat) -> Result<Value, CliError> {
    let fiber = torelli::period_fiber(c, target).map_err(|e| CliError::Input(e.to_string()))?;
    let mut doc = base_doc("fiber");
    doc.insert("target".into(), proj_str(target));
    doc.insert("side_F".into(), proj_set(fiber.side_f.iter()));
    doc.insert("side_K".into(), proj_set(fiber.side_k.iter()));
    doc.insert("coincidences".into(), proj_set(fiber.coincidences().iter()));
    doc.insert("total".into(), json!(fiber.total()));
    Ok(Value::Object(doc))
}

fn cmd_nodes(c: &BiellipticCurve, seed: u64) -> Result<Value, CliError> {
    // the shift only relocates the second search chart; results are
    // de-duplicated and canonically ordered, hence seed-independent
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let shift = prym_core::qalg::rat(rng.gen_range(-9i64..=9), rng.gen_range(1i64..=9));
    let nodes = torelli::find_nodes_with_shift(c, &shift)
        .map_err(|e| CliError::Consistency(e.to_string()))?;
    let list: Vec<Value> = nodes
        .iter()
        .map(|n| {
            json!({
                "a1": proj_str(&n.a1),
                "a2": proj_str(&n.a2),
                "value": [proj_str(&n.value.0), proj_str(&n.value.1)],
            })
        })
        .collect();
    let mut doc = base_doc("nodes");
    doc.insert("nodes".into(), Value::Array(list));
    Ok(Value::Object(doc))
}

fn cmd_contains(c: &BiellipticCurve, u: &ProjRat, v: &ProjRat) -> Value {
    let mut doc = base_doc("contains");
    doc.insert("u".into(), proj_str(u));
    doc.insert("v".into(), proj_str(v));
    doc.insert("contained".into(), json!(torelli::image_contains(c, u, v)));
    Value::Object(doc)
}

fn cmd_symmetry(c: &BiellipticCurve) -> Result<Value, CliError> {
    let sym = torelli::image_symmetry(c).map_err(|e| CliError::Consistency(e.to_string()))?;
    let mut doc = base_doc("symmetry");
    doc.insert("symmetric".into(), json!(sym));
    Ok(Value::Object(doc))
}

fn cmd_lattice_verify() -> Result<Value, CliError> {
    let data = hodge_lattice::build_overlattices()
        .map_err(|e| CliError::Consistency(e.to_string()))?;
    let amb = hodge_lattice::ambient();
    let mut doc = base_doc("lattice-verify");
    doc.insert("gram_matches_printed".into(), json!(true));
    doc.insert("c_y".into(), json!(data.c_y.to_string()));
    doc.insert(
        "c_y_norm".into(),
        rat_str(&amb.pairing_half(&data.c_y, &data.c_y)),
    );
    doc.insert("self_intersections".into(), json!({
        "K_Y": "0", "Delta_sigma": "-4", "Gamma_i": "-1", "E_ij": "-2"
    }));
    doc.insert("h_y_prime_rank".into(), json!(data.h_y_prime.rank()));
    doc.insert("glue_index_y".into(), json!(data.glue_index_y.to_string()));
    doc.insert("glue_index_a".into(), json!(data.glue_index_a.to_string()));
    doc.insert("overlattices_coincide".into(), json!(true));
    doc.insert("dual_sublattice_reconstructs_surface".into(), json!(true));
    doc.insert(
        "correspondence_entries".into(),
        json!(data.correspondence.len()),
    );
    let rep = hodge_lattice::invariant_compare(
        &hodge_lattice::surface_lattice(),
        &hodge_lattice::abelian_plus_norm_lattice(),
    )
    .map_err(|e| CliError::Consistency(e.to_string()))?;
    let side = |s: &hodge_lattice::CompareSide| {
        json!({
            "rank": s.rank,
            "signature": [s.signature.0, s.signature.1],
            "determinant": rat_str(&s.determinant),
            "invariant_factors": s
                .invariant_factors
                .as_ref()
                .map(|f| f.iter().map(|x| x.to_string()).collect::<Vec<_>>()),
        })
    };
    doc.insert(
        "invariant_comparison".into(),
        json!({
            "surface": side(&rep.left),
            "abelian_plus_norm": side(&rep.right),
            "verdict": match rep.verdict {
                hodge_lattice::Verdict::Distinguished(ref why) => format!("distinguished ({})", why),
                hodge_lattice::Verdict::Inconclusive => "inconclusive".to_string(),
            },
        }),
    );
    Ok(Value::Object(doc))
}

fn cmd_sample(
    c: &BiellipticCurve,
    from: Rat,
    to: Rat,
    step: Rat,
    format: &str,
) -> Result<String, CliError> {
    if step <= prym_core::qalg::int(0) {
        return Err(CliError::Input("--step must be positive".into()));
    }
    let jp = j_functions(c);
    let mut rows = Vec::new();
    let mut a = from;
    while a <= to {
        let pa = ProjRat::Finite(a.clone());
        rows.push((
            a.clone(),
            ratfn_eval(&jp.j_f, &pa),
            ratfn_eval(&jp.j_k, &pa),
        ));
        a += &step;
    }
    match format {
        "csv" => {
            let mut out = String::from("a,j_F,j_K\n");
            for (a, jf, jk) in rows {
                out.push_str(&format!(
                    "{},{},{}\n",
                    prym_core::qalg::format_rat(&a),
                    jf,
                    jk
                ));
            }
            Ok(out.trim_end().to_string())
        }
        "json" => {
            let list: Vec<Value> = rows
                .iter()
                .map(|(a, jf, jk)| {
                    json!({ "a": rat_str(a), "j_F": proj_str(jf), "j_K": proj_str(jk) })
                })
                .collect();
            let mut doc = base_doc("sample");
            doc.insert("rows".into(), Value::Array(list));
            Ok(pretty(Value::Object(doc)))
        }
        other => Err(CliError::Input(format!("unknown format: {}", other))),
    }
}
