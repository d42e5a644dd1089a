//! `toric`: one binary, one subcommand per library entry point.
//!
//! Exit status is 0 on success, 1 on a domain error (bad cone, budget
//! exceeded, …) and 2 when the command line or an input file cannot be parsed.

mod input;
mod session;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use input::{load_cone, load_divisor, load_fan, load_lattice, load_points, load_polytope, load_vector, InputError};
use toric::{
    create_torus, desing_affine_toric_variety, divisor_polytope, fan_automorphism_group, gluing_map, hilbert_basis,
    in_dual_cone, riemann_roch, toric_code, toric_ideal_up_to, torus_embedding, Cone, LatticePolytope,
};

#[derive(Parser)]
#[command(name = "toric", version, about = "Exact computations with toric varieties")]
struct Cli {
    /// Output style: session-style text or JSON.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Cap on enumerations (codewords, distance searches).
    #[arg(long, env = "TORIC_BUDGET", global = true)]
    budget: Option<u128>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Inputs are JSON, given inline or as a path to a file.
#[derive(Subcommand)]
enum Command {
    /// Minimal generators of σ* ∩ L*.
    #[command(alias = "dual_semigp_gens")]
    DualSemigroupGens {
        #[arg(long)]
        cone: String,
        /// Lattice basis; defaults to the standard lattice.
        #[arg(long)]
        lattice: Option<String>,
    },
    /// Whether w lies in the dual cone.
    #[command(alias = "in_dual_cone")]
    InDualCone {
        #[arg(long, allow_hyphen_values = true)]
        w: String,
        #[arg(long)]
        cone: String,
    },
    /// Binomial generators of the toric ideal of U_σ.
    #[command(alias = "ideal_affine_toric_variety")]
    Ideal {
        #[arg(long)]
        cone: String,
        #[arg(long)]
        lattice: Option<String>,
        /// Largest degree examined when minimizing the generators.
        #[arg(long, default_value_t = toric::affine::DEFAULT_IDEAL_DEGREE)]
        degree: u32,
    },
    /// The dense torus mapped into U_σ.
    #[command(alias = "embedding_affine_toric_variety")]
    Embed {
        #[arg(long)]
        cone: String,
        #[arg(long)]
        lattice: Option<String>,
    },
    /// Resolution of a two-dimensional U_σ.
    #[command(alias = "desing_affine_toric_variety")]
    Desing {
        #[arg(long)]
        cone: String,
        #[arg(long)]
        lattice: Option<String>,
        /// Print only the chart on the dense torus.
        #[arg(long)]
        torus_chart: bool,
    },
    /// Cones of the fan having σ as a face.
    Star {
        fan: String,
        #[arg(long, allow_hyphen_values = true)]
        sigma: String,
    },
    /// All cones of the fan, faces included.
    #[command(alias = "subcones_of_fan")]
    Subcones {
        fan: String,
        #[arg(long)]
        dim: Option<usize>,
    },
    /// Number of k-dimensional cones.
    #[command(alias = "number_of_cones_dim")]
    NConesDim {
        fan: String,
        #[arg(long)]
        k: usize,
    },
    /// The Betti number b_k of a smooth complete toric variety.
    #[command(alias = "betti_number")]
    Betti {
        fan: String,
        #[arg(long)]
        k: usize,
    },
    /// Euler characteristic.
    #[command(alias = "euler_characteristic")]
    Euler { fan: String },
    /// Number of F_q points.
    #[command(alias = "cardinality_of_X", alias = "cardinality_of_x")]
    Cardinality {
        fan: String,
        #[arg(long)]
        q: u64,
    },
    /// The polytope P_D of a T-divisor.
    #[command(alias = "divisor_polytope")]
    DivisorPolytope { divisor: String },
    /// Lattice points of P_D, or of a polytope given directly.
    #[command(alias = "divisor_polytope_lattice_points")]
    LatticePoints {
        #[arg(long, conflicts_with = "polytope", required_unless_present = "polytope")]
        divisor: Option<String>,
        #[arg(long)]
        polytope: Option<String>,
    },
    /// Laurent monomial basis of L(D).
    #[command(alias = "riemann_roch")]
    RiemannRoch { divisor: String },
    /// Parameters of the toric evaluation code.
    #[command(alias = "toric_code")]
    ToricCode {
        #[arg(long)]
        points: String,
        #[arg(long)]
        q: u64,
        /// Also list every codeword.
        #[arg(long)]
        list_codewords: bool,
    },
    /// Every codeword of the toric code.
    #[command(alias = "toric_codewords")]
    Codewords {
        #[arg(long)]
        points: String,
        #[arg(long)]
        q: u64,
    },
    /// Lattice automorphisms preserving the fan.
    #[command(alias = "fan_automorphism_group")]
    AutGroup { fan: String },
    /// Checks the fan axioms.
    #[command(alias = "validate_fan")]
    ValidateFan { fan: String },
    /// Whether the support of the fan is the whole space.
    #[command(alias = "is_complete")]
    IsComplete { fan: String },
    /// Maps from U_τ into U_σ1 and U_σ2 along a common face τ.
    #[command(alias = "gluing_map")]
    Glue {
        #[arg(long, allow_hyphen_values = true)]
        tau: String,
        #[arg(long, allow_hyphen_values = true)]
        sigma1: String,
        #[arg(long, allow_hyphen_values = true)]
        sigma2: String,
        #[arg(long)]
        lattice: Option<String>,
    },
}

enum Failure {
    Parse(String),
    Domain(toric::Error),
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        match e {
            InputError::Parse(msg) => Failure::Parse(msg),
            InputError::Domain(e) => Failure::Domain(e),
        }
    }
}

impl From<toric::Error> for Failure {
    fn from(e: toric::Error) -> Self {
        Failure::Domain(e)
    }
}

/// Text for people, a JSON value for machines.
struct Output {
    text: String,
    json: Value,
}

fn out(text: impl Into<String>, json: impl Serialize) -> Result<Output, Failure> {
    let json = serde_json::to_value(json).map_err(|e| Failure::Parse(e.to_string()))?;
    Ok(Output { text: text.into(), json })
}

fn big_json(n: &BigInt) -> Value {
    n.to_string()
        .parse::<i64>()
        .map(Value::from)
        .unwrap_or_else(|_| Value::String(n.to_string()))
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let codeword_limit = cli.budget.unwrap_or(toric::codes::CODEWORD_LIMIT);
    let listing_limit = cli.budget.unwrap_or(toric::codes::LISTING_LIMIT);
    match &cli.command {
        Command::DualSemigroupGens { cone, lattice } => {
            let c = load_cone(cone)?;
            let l = load_lattice(lattice.as_deref(), c.ambient_dim())?;
            let gens = hilbert_basis(&c, &l)?;
            out(session::gap_list(gens.gens.iter().map(session::gap_vector)), &gens.gens)
        }
        Command::InDualCone { w, cone } => {
            let inside = in_dual_cone(&load_vector(w)?, &load_cone(cone)?)?;
            out(inside.to_string(), inside)
        }
        Command::Ideal { cone, lattice, degree } => {
            let c = load_cone(cone)?;
            let l = load_lattice(lattice.as_deref(), c.ambient_dim())?;
            let ideal = toric_ideal_up_to(&hilbert_basis(&c, &l)?, *degree)?;
            out(session::ideal(&ideal), &ideal)
        }
        Command::Embed { cone, lattice } => {
            let c = load_cone(cone)?;
            let l = load_lattice(lattice.as_deref(), c.ambient_dim())?;
            let map = torus_embedding(&c, &l)?;
            let torus = create_torus(map.source_dim)?;
            out(session::torus_embedding(&torus, &map), &map)
        }
        Command::Desing { cone, lattice, torus_chart } => {
            let c = load_cone(cone)?;
            let l = load_lattice(lattice.as_deref(), c.ambient_dim())?;
            let (_, res) = desing_affine_toric_variety(&c, &l)?;
            let mut text = session::affine_map(&res.torus_chart);
            if !torus_chart {
                for p in &res.patches {
                    text.push_str(&format!("\n\n// patch on {}\n", session::gap_cone(&p.subcone)));
                    text.push_str(&session::affine_map(&p.map));
                }
            }
            out(text, &res)
        }
        Command::Star { fan, sigma } => {
            let f = load_fan(fan)?;
            let s = f.star(&load_cone(sigma)?)?;
            out(session::gap_list(s.cones.iter().map(session::gap_cone)), &s.cones)
        }
        Command::Subcones { fan, dim } => {
            let f = load_fan(fan)?;
            let cones: Vec<&Cone> = f.cones().iter().filter(|c| dim.map_or(true, |d| c.dim() == d)).collect();
            out(session::gap_list(cones.iter().map(|c| session::gap_cone(c))), &cones)
        }
        Command::NConesDim { fan, k } => {
            let n = load_fan(fan)?.number_of_cones_dim(*k)?;
            out(n.to_string(), n)
        }
        Command::Betti { fan, k } => {
            let b = load_fan(fan)?.betti_number(*k);
            out(b.to_string(), b)
        }
        Command::Euler { fan } => {
            let e = load_fan(fan)?.euler_characteristic();
            out(e.to_string(), e)
        }
        Command::Cardinality { fan, q } => {
            let n = load_fan(fan)?.cardinality_of_x(*q)?;
            out(n.to_string(), big_json(&n))
        }
        Command::DivisorPolytope { divisor } => {
            let p = divisor_polytope(&load_divisor(divisor)?)?;
            out(session::polytope(&p), &p)
        }
        Command::LatticePoints { divisor, polytope } => {
            let p: LatticePolytope = match (divisor, polytope) {
                (Some(d), _) => divisor_polytope(&load_divisor(d)?)?,
                (None, Some(p)) => load_polytope(p)?,
                (None, None) => unreachable!("clap requires one of the two"),
            };
            let pts = p.lattice_points()?;
            out(session::magma_list(pts.iter().map(session::magma_point)), &pts)
        }
        Command::RiemannRoch { divisor } => {
            let d = load_divisor(divisor)?;
            let basis = riemann_roch(&d)?;
            let monomials = toric::riemann_roch_monomials(&d)?;
            out(session::magma_list(monomials.iter().cloned()), &basis)
        }
        Command::ToricCode { points, q, list_codewords } => {
            let code = toric_code(&load_points(points)?, *q)?;
            let d = code.code.minimum_distance_with_limit(codeword_limit)?;
            let summary = session::code_summary(code.length(), code.dimension(), d, *q);
            let mut json = json!({
                "q": q,
                "n": code.length(),
                "k": code.dimension(),
                "d": d,
                "generator_rows": code.generator_rows(),
            });
            let mut text = summary;
            if *list_codewords {
                let words = code.code.codewords_with_limit(listing_limit)?;
                text = format!("{text}\n{}", session::codewords(&words));
                json["codewords"] = json!(words);
            }
            out(text, json)
        }
        Command::Codewords { points, q } => {
            let code = toric_code(&load_points(points)?, *q)?;
            let words = code.code.codewords_with_limit(listing_limit)?;
            out(session::codewords(&words), &words)
        }
        Command::AutGroup { fan } => {
            let g = fan_automorphism_group(&load_fan(fan)?)?;
            let mut text = format!("Group of order {}", g.order());
            for m in &g.elements {
                text.push('\n');
                text.push_str(&session::gap_list(m.rows().iter().map(session::gap_vector)));
            }
            out(text, &g)
        }
        Command::ValidateFan { fan } => {
            let f = load_fan(fan)?;
            let text = format!(
                "valid fan in dimension {}: {} rays, {} cones, {} maximal",
                f.ambient_dim(),
                f.rays().len(),
                f.cones().len(),
                f.maximal_cones().len()
            );
            out(text, &f)
        }
        Command::IsComplete { fan } => {
            let complete = load_fan(fan)?.is_complete()?;
            out(complete.to_string(), complete)
        }
        Command::Glue { tau, sigma1, sigma2, lattice } => {
            let t = load_cone(tau)?;
            let l = load_lattice(lattice.as_deref(), t.ambient_dim())?;
            let (a, b) = gluing_map(&t, &load_cone(sigma1)?, &load_cone(sigma2)?, &l)?;
            out(format!("{a}\n{b}"), [&a, &b])
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(o) => {
            match cli.format {
                Format::Text => println!("{}", o.text),
                Format::Json => println!("{}", serde_json::to_string_pretty(&o.json).expect("values serialize")),
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Parse(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
