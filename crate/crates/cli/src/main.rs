use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use isotwist::exactnum::squarefree_from_rat;
use isotwist::families::{fricke_w9, l211_class, l39_signatures, x011_j, x011_j_printed, L211Variant};
use isotwist::graphs::{
    faltings_by_theorem, faltings_by_volumes, graph_structure, prob_table, twisted_volumes, u_vectors, Edition,
    GraphType, Param,
};
use isotwist::localdata::{candidate_primes, classify, global_minimal, global_pal};
use isotwist::oracle::{empirical_prob, squarefree_density, verify_class, DEFAULT_BITS};
use isotwist::weierstrass::{j_invariant, signature_of, transform, twist_sig, AInvariants, Signature};
use isotwist::{Error, Rat, Result};

mod render;

const SCHEMA_VERSION: u64 = 1;

/// Local reduction data, twist minimality and Faltings curves of rational
/// isogeny graphs.
#[derive(Parser)]
#[command(name = "isotwist", version)]
struct Cli {
    /// Print an indented human-readable rendering instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// Print JSON (the default).
    #[arg(long, global = true, conflicts_with = "pretty")]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct CurveSpec {
    /// a-invariants "a1,a2,a3,a4,a6" (rationals allowed).
    #[arg(long, allow_hyphen_values = true)]
    ainvs: Option<String>,
    /// Signature "c4,c6,delta".
    #[arg(long, allow_hyphen_values = true)]
    sig: Option<String>,
}

impl CurveSpec {
    fn signature(&self) -> Result<Signature> {
        match (&self.ainvs, &self.sig) {
            (Some(a), _) => signature_of(&AInvariants::parse(a)?),
            (_, Some(s)) => Signature::parse(s),
            _ => unreachable!("clap enforces one curve form"),
        }
    }
}

#[derive(Args)]
struct GraphSpec {
    /// Graph type tag: L2_11, L3_9, L4, R4_10, R6, T4, T6, T8, S8, ...
    #[arg(long = "type")]
    ty: String,
    /// Hauptmodul value (genus-0 types).
    #[arg(long, allow_hyphen_values = true)]
    t: Option<String>,
    /// Class tag of a sporadic point (a or b for L2_11).
    #[arg(long)]
    class: Option<String>,
    /// Decision data to use: corrected or printed.
    #[arg(long, default_value = "corrected")]
    edition: String,
}

impl GraphSpec {
    fn parse(&self) -> Result<(GraphType, Param, Edition)> {
        let g: GraphType = self.ty.parse()?;
        let param = match &self.t {
            Some(t) => Param::T(t.parse()?),
            None if !g.genus_ge_1() => {
                return Err(Error::MissingParameter(format!("{g} needs --t")));
            }
            None => Param::Sporadic(self.class.clone()),
        };
        Ok((g, param, self.edition.parse()?))
    }
}

fn parse_d(d: &str) -> Result<BigInt> {
    squarefree_from_rat(&d.parse()?)
}

#[derive(Subcommand)]
enum Cmd {
    /// Kodaira symbol, minimal p-signature and scale at one prime.
    Classify {
        #[command(flatten)]
        curve: CurveSpec,
        #[arg(long)]
        p: u64,
    },
    /// Global minimal model.
    Minimal {
        #[command(flatten)]
        curve: CurveSpec,
    },
    /// Quadratic twist and the scale that re-minimalizes it.
    Twist {
        #[command(flatten)]
        curve: CurveSpec,
        #[arg(long, allow_hyphen_values = true)]
        d: String,
    },
    /// Faltings curve of the twisted graph, by the decision table and by volumes.
    Faltings {
        #[command(flatten)]
        graph: GraphSpec,
        #[arg(long, allow_hyphen_values = true)]
        d: String,
    },
    /// The decision rows for a parameter with their probabilities.
    Prob {
        #[command(flatten)]
        graph: GraphSpec,
    },
    /// Explicit families.
    Family {
        #[command(subcommand)]
        which: FamilyCmd,
    },
    /// Numeric Faltings heights compared with the decision table.
    Verify {
        #[command(flatten)]
        graph: GraphSpec,
        #[arg(long, allow_hyphen_values = true)]
        d: String,
        #[arg(long, env = "ISOTWIST_BITS", default_value_t = DEFAULT_BITS)]
        bits: usize,
    },
    /// Share of square-free integers up to N that are divisible by p.
    Density {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1_000_000)]
        n: u64,
    },
    /// Frequency of each Faltings vertex over square-free |d| <= N.
    Empirical {
        #[command(flatten)]
        graph: GraphSpec,
        #[arg(long, default_value_t = 100_000)]
        n: u64,
    },
}

#[derive(Subcommand)]
enum FamilyCmd {
    /// The 3-power chain E_1 - E_3 - E_9 at t.
    L39 {
        #[arg(long, allow_hyphen_values = true)]
        t: String,
    },
    /// The conductor-121 classes with a rational 11-isogeny.
    L211 {
        #[arg(long)]
        variant: String,
    },
    /// The j-map on y^2 + y = x^3 - x^2 - 10x - 20.
    X011 {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
}

impl Cmd {
    fn name(&self) -> &'static str {
        match self {
            Cmd::Classify { .. } => "classify",
            Cmd::Minimal { .. } => "minimal",
            Cmd::Twist { .. } => "twist",
            Cmd::Faltings { .. } => "faltings",
            Cmd::Prob { .. } => "prob",
            Cmd::Family { .. } => "family",
            Cmd::Verify { .. } => "verify",
            Cmd::Density { .. } => "density",
            Cmd::Empirical { .. } => "empirical",
        }
    }
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn classify_cmd(curve: &CurveSpec, p: u64) -> Result<Value> {
    let s = curve.signature()?;
    let c = classify(&s, p)?;
    let mut v = to_value(&c);
    v["signature"] = to_value(&s);
    v["minimal_signature"] = to_value(&transform(&s, &c.u_p)?);
    Ok(v)
}

fn minimal_cmd(curve: &CurveSpec) -> Result<Value> {
    let s = curve.signature()?;
    let (min, u) = global_minimal(&s)?;
    let mut local = Vec::new();
    for p in candidate_primes(&s)? {
        let c = classify(&s, p)?;
        local.push(json!({ "p": p, "u_p": c.u_p, "kodaira": c.kodaira }));
    }
    Ok(json!({ "signature": s, "minimal": min, "u": u, "j": j_invariant(&s), "local": local }))
}

fn twist_cmd(curve: &CurveSpec, d: &str) -> Result<Value> {
    let s = curve.signature()?;
    let d = parse_d(d)?;
    let (min, u) = global_minimal(&s)?;
    let pal = global_pal(&min, &d)?;
    let twisted = twist_sig(&s, &d)?;
    let (twisted_min, u_twisted) = global_minimal(&twisted)?;
    Ok(json!({
        "signature": s,
        "d": d.to_string(),
        "twisted": twisted,
        "u": u,
        "pal_u": pal,
        "twisted_minimal": twisted_min,
        "u_twisted": u_twisted,
        "consistent": u_twisted == &u * &pal,
    }))
}

fn faltings_cmd(graph: &GraphSpec, d: &str) -> Result<Value> {
    let (g, param, edition) = graph.parse()?;
    let d = parse_d(d)?;
    let r = faltings_by_theorem(g, &param, &d, edition)?;
    let volume_route = match (
        u_vectors(g, &param, &d, edition),
        twisted_volumes(g, &param, &d, edition),
        faltings_by_volumes(g, &param, &d, edition),
    ) {
        (Ok(u), Ok(vols), Ok(vertex)) => json!({ "vertex": vertex, "volumes": vols, "u": u }),
        (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => json!({ "error": error_value(&e) }),
    };
    let agree = volume_route["vertex"] == json!(r.vertex);
    Ok(json!({
        "type": g,
        "param": param.to_string(),
        "d": d.to_string(),
        "edition": edition,
        "vertex": r.vertex,
        "probability": r.probability,
        "d_condition": r.d_condition.to_string(),
        "branch": r.branch,
        "volume_route": volume_route,
        "routes_agree": agree,
    }))
}

fn prob_cmd(graph: &GraphSpec) -> Result<Value> {
    let (g, param, edition) = graph.parse()?;
    let rows: Vec<Value> = prob_table(g, &param, edition)?
        .into_iter()
        .map(|r| {
            json!({
                "vertex": r.vertex,
                "d_condition": r.d_condition.to_string(),
                "probability": r.probability,
                "branch": r.branch,
            })
        })
        .collect();
    Ok(json!({
        "type": g,
        "param": param.to_string(),
        "edition": edition,
        "graph": graph_structure(g),
        "rows": rows,
    }))
}

fn family_cmd(which: &FamilyCmd) -> Result<Value> {
    match which {
        FamilyCmd::L39 { t } => {
            let t: Rat = t.parse()?;
            let members: Vec<Value> = l39_signatures(&t)?
                .iter()
                .zip(["E_1", "E_3", "E_9"])
                .map(|(s, v)| json!({ "vertex": v, "signature": s, "j": j_invariant(s) }))
                .collect();
            Ok(json!({ "family": "l39", "t": t, "fricke_t": fricke_w9(&t)?, "members": members }))
        }
        FamilyCmd::L211 { variant } => {
            let v: L211Variant = variant.parse()?;
            let mut out = to_value(&l211_class(v));
            out["family"] = json!("l211");
            Ok(out)
        }
        FamilyCmd::X011 { x, y } => {
            let (x, y): (Rat, Rat) = (x.parse()?, y.parse()?);
            let j = x011_j(&x, &y)?;
            let printed = x011_j_printed(&x, &y)?;
            Ok(json!({ "family": "x011", "x": x, "y": y, "j": j, "printed_formula_j": printed }))
        }
    }
}

fn run(cmd: &Cmd) -> Result<Value> {
    match cmd {
        Cmd::Classify { curve, p } => classify_cmd(curve, *p),
        Cmd::Minimal { curve } => minimal_cmd(curve),
        Cmd::Twist { curve, d } => twist_cmd(curve, d),
        Cmd::Faltings { graph, d } => faltings_cmd(graph, d),
        Cmd::Prob { graph } => prob_cmd(graph),
        Cmd::Family { which } => family_cmd(which),
        Cmd::Verify { graph, d, bits } => {
            let (g, param, _) = graph.parse()?;
            Ok(to_value(&verify_class(g, &param, &parse_d(d)?, *bits)?))
        }
        Cmd::Density { p, n } => Ok(to_value(&squarefree_density(*p, *n)?)),
        Cmd::Empirical { graph, n } => {
            let (g, param, edition) = graph.parse()?;
            Ok(to_value(&empirical_prob(g, &param, *n, edition)?))
        }
    }
}

fn error_value(e: &Error) -> Value {
    json!({ "kind": e.kind(), "message": e.to_string(), "internal": e.is_internal() })
}

fn envelope(command: &str, body: Value) -> Value {
    let mut m = Map::new();
    m.insert("schema_version".into(), json!(SCHEMA_VERSION));
    m.insert("command".into(), json!(command));
    if let Value::Object(fields) = body {
        m.extend(fields);
    }
    Value::Object(m)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = cli.cmd.name();
    let (out, code) = match run(&cli.cmd) {
        Ok(body) => (envelope(name, body), 0),
        Err(e) => {
            eprintln!("error: {e}");
            (envelope(name, json!({ "error": error_value(&e) })), if e.is_internal() { 3 } else { 2 })
        }
    };
    if cli.pretty {
        print!("{}", render::pretty(&out));
    } else {
        println!("{out}");
    }
    ExitCode::from(code)
}
