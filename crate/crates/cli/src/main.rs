//! `njp` — compute jacobian Newton polygons of plane curve germs and decide
//! irreducibility from them.
//!
//! Exit codes: 0 on success, 1 on a domain error (invalid input, failed
//! precondition), 2 on a usage error.

mod svg;

use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use njp_core::rat::fmt_rat;
use njp_core::{
    abrasion_criterion, approximate_root, bresinsky_check, build_tree, char_to_semigroup,
    discriminant_surface, gamma_criterion, jacobian_polygon, merle_polygon, parse_poly,
    parse_roots_file, parse_sequence, polar_invariants, reduction_criterion, semigroup_to_char,
    test_irreducible, tree_polygon, CharSeq, CriterionVerdict, Error, NjpOptions, PolarInvariants,
    Polygon, PolygonOp, SgpGens, YPoly,
};

#[derive(Parser)]
#[command(
    name = "njp",
    about = "Jacobian Newton polygons of plane curve germs, exactly",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write an SVG drawing of the resulting polygon to this path.
    #[arg(long, global = true, value_name = "PATH")]
    svg: Option<String>,

    /// Largest shear parameter tried during normalization.
    #[arg(long, global = true, default_value_t = 16)]
    max_shear: u32,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Jacobian Newton polygon of a curve polynomial.
    Njp { poly: String },
    /// Discriminant D(u,v) = Res_y(f(u,y) - v, f_y(u,y)).
    Disc { poly: String },
    /// Polar invariants (inclination : multiplicity pairs).
    Polar { poly: String },
    /// Decide irreducibility of the germ via all three criteria.
    Irreducible { poly: String },
    /// Run the reduction, abrasion and gamma criteria on a polygon.
    Criteria { polygon: String },
    /// Reduction operator on a convenient polygon.
    Reduce { polygon: String },
    /// Abrasion operator on a convenient polygon.
    Abrade { polygon: String },
    /// Jacobian Newton polygon of a branch from its semigroup generators.
    Merle { gens: String },
    /// Semigroup generators from a Puiseux characteristic.
    Char2sgp { seq: String },
    /// Puiseux characteristic from semigroup generators.
    Sgp2char { gens: String },
    /// Bresinsky's plane-branch criterion on a generator list.
    Bresinsky { gens: String },
    /// Kuo-Lu contact tree and polygon from a roots file (JSON).
    Tree { file: String },
    /// p-th approximate root of a polynomial monic in y.
    Approx { poly: String, p: usize },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            match cli.format {
                Format::Json => {
                    let payload = json!({
                        "error": { "kind": err.kind(), "message": err.to_string() }
                    });
                    println!("{payload}");
                }
                Format::Text => eprintln!("error: {err}"),
            }
            ExitCode::from(1)
        }
    }
}

/// Accept a polygon as either the literal form `{6|1}+{14|2}` or the JSON
/// emitted by `njp --format json`.
fn read_polygon(text: &str) -> Result<Polygon, Error> {
    let trimmed = text.trim();
    if let Ok(value) = serde_json::from_str::<Value>(trimmed) {
        if value.is_object() {
            return Polygon::from_json(&value);
        }
    }
    Polygon::from_text(trimmed)
}

fn emit_polygon(cli: &Cli, polygon: &Polygon) {
    match cli.format {
        Format::Text => println!("{polygon}"),
        Format::Json => println!("{}", polygon.to_json()),
    }
    if let Some(path) = &cli.svg {
        if let Err(e) = fs::write(path, svg::render(polygon)) {
            eprintln!("warning: could not write SVG to {path}: {e}");
        }
    }
}

fn verdict_text(v: &CriterionVerdict) -> String {
    match v {
        CriterionVerdict::Pass { characteristic, semigroup } => {
            format!("pass (characteristic {characteristic}; semigroup {semigroup})")
        }
        CriterionVerdict::Fail { condition, stage } => {
            format!("fail (condition {condition} at stage {stage})")
        }
    }
}

fn run(cli: &Cli) -> Result<(), Error> {
    let options = NjpOptions { max_shear: cli.max_shear };
    match &cli.command {
        Command::Njp { poly } => {
            let f = parse_poly(poly)?;
            let result = jacobian_polygon(&f, &options)?;
            if result.needed_extra_shears() {
                eprintln!(
                    "note: polygon certified by shears x := x + {}y and x := x + {}y",
                    result.agreed.0, result.agreed.1
                );
            }
            emit_polygon(cli, &result.polygon);
        }
        Command::Disc { poly } => {
            let f = parse_poly(poly)?;
            let d = discriminant_surface(&f)?;
            match cli.format {
                Format::Text => println!("{d}"),
                Format::Json => println!("{}", json!({ "polynomial": d.to_string() })),
            }
        }
        Command::Polar { poly } => {
            let f = parse_poly(poly)?;
            let inv = polar_invariants(&f, &options)?;
            match cli.format {
                Format::Text => println!("{inv}"),
                Format::Json => println!("{}", inv.to_json()),
            }
        }
        Command::Irreducible { poly } => {
            let f = parse_poly(poly)?;
            let verdict = test_irreducible(&f, &options)?;
            match cli.format {
                Format::Text => {
                    println!("irreducible: {}", verdict.irreducible);
                    println!("polygon: {}", verdict.polygon);
                    let gamma =
                        verdict.gamma.iter().map(fmt_rat).collect::<Vec<_>>().join(", ");
                    println!("gamma: ({gamma})");
                    println!("reduction: {}", verdict_text(&verdict.reduction));
                    println!("abrasion: {}", verdict_text(&verdict.abrasion));
                    println!("gamma test: {}", verdict_text(&verdict.gamma_verdict));
                    if let (Some(c), Some(s)) = (&verdict.characteristic, &verdict.semigroup) {
                        println!("characteristic: {c}");
                        println!("semigroup: {s}");
                    }
                }
                Format::Json => println!("{}", verdict.to_json()),
            }
            if let Some(path) = &cli.svg {
                if let Err(e) = fs::write(path, svg::render(&verdict.polygon)) {
                    eprintln!("warning: could not write SVG to {path}: {e}");
                }
            }
        }
        Command::Criteria { polygon } => {
            let p = read_polygon(polygon)?;
            let reduction = reduction_criterion(&p);
            let abrasion = abrasion_criterion(&p);
            let gamma = gamma_criterion(&p);
            match cli.format {
                Format::Text => {
                    println!("reduction: {}", verdict_text(&reduction));
                    println!("abrasion: {}", verdict_text(&abrasion));
                    println!("gamma: {}", verdict_text(&gamma));
                }
                Format::Json => println!(
                    "{}",
                    json!({
                        "reduction": reduction.to_json(),
                        "abrasion": abrasion.to_json(),
                        "gamma": gamma.to_json(),
                    })
                ),
            }
            if let Some(path) = &cli.svg {
                if let Err(e) = fs::write(path, svg::render(&p)) {
                    eprintln!("warning: could not write SVG to {path}: {e}");
                }
            }
        }
        Command::Reduce { polygon } => {
            let p = read_polygon(polygon)?;
            emit_polygon(cli, &njp_core::iterate(PolygonOp::Reduce, &p, 1)?);
        }
        Command::Abrade { polygon } => {
            let p = read_polygon(polygon)?;
            emit_polygon(cli, &njp_core::iterate(PolygonOp::Abrade, &p, 1)?);
        }
        Command::Merle { gens } => {
            let gens = SgpGens::new(parse_sequence(gens)?)?;
            emit_polygon(cli, &merle_polygon(&gens));
        }
        Command::Char2sgp { seq } => {
            let c = CharSeq::new(parse_sequence(seq)?)?;
            let s = char_to_semigroup(&c);
            match cli.format {
                Format::Text => println!("{s}"),
                Format::Json => println!("{}", json!({ "semigroup": s.gens() })),
            }
        }
        Command::Sgp2char { gens } => {
            let s = SgpGens::new(parse_sequence(gens)?)?;
            let c = semigroup_to_char(&s);
            match cli.format {
                Format::Text => println!("{c}"),
                Format::Json => println!("{}", json!({ "characteristic": c.entries() })),
            }
        }
        Command::Bresinsky { gens } => {
            let report = bresinsky_check(&parse_sequence(gens)?)?;
            match cli.format {
                Format::Text => match report.failure {
                    None => println!("valid"),
                    Some((condition, index)) => {
                        println!("fails condition {condition} at index {index}")
                    }
                },
                Format::Json => {
                    let payload = match report.failure {
                        None => json!({ "valid": true }),
                        Some((condition, index)) => {
                            json!({ "valid": false, "condition": condition, "index": index })
                        }
                    };
                    println!("{payload}");
                }
            }
        }
        Command::Tree { file } => {
            let text = fs::read_to_string(file)
                .map_err(|e| Error::Json(format!("cannot read {file}: {e}")))?;
            let roots = parse_roots_file(&text)?;
            let tree = build_tree(&roots)?;
            let polygon = tree_polygon(&tree);
            let invariants = PolarInvariants::from_polygon(&polygon);
            match cli.format {
                Format::Text => {
                    println!("polygon: {polygon}");
                    println!("invariants: {invariants}");
                    for (i, node) in tree.internal_nodes().iter().enumerate() {
                        println!(
                            "node {i}: height {}, t {}, q {}, members {:?}",
                            fmt_rat(&node.height),
                            node.t(),
                            fmt_rat(&node.q),
                            node.members
                        );
                    }
                }
                Format::Json => println!(
                    "{}",
                    json!({
                        "polygon": polygon.to_json(),
                        "invariants": invariants.to_json(),
                        "tree": tree.to_json(),
                    })
                ),
            }
            if let Some(path) = &cli.svg {
                if let Err(e) = fs::write(path, svg::render(&polygon)) {
                    eprintln!("warning: could not write SVG to {path}: {e}");
                }
            }
        }
        Command::Approx { poly, p } => {
            let f = YPoly::from_bipoly(&parse_poly(poly)?)?;
            let root = approximate_root(&f, *p)?;
            let out = root.to_bipoly();
            match cli.format {
                Format::Text => println!("{out}"),
                Format::Json => println!("{}", json!({ "polynomial": out.to_string() })),
            }
        }
    }
    Ok(())
}
