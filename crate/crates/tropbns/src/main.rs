use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use tropbns::presentation::{parse_presentation, GroupPresentation};
use tropbns::report::{
    analyze, bound_from_cv, bound_from_pencils, brieskorn_from_exponents, bound_to_json,
    cv_from_json, orbifold_from_json, orbifold_report, pencils_from_json, seifert_from_json,
    seifert_report, CmdError,
};
use tropbns::sigma::{brown_rank1, brown_rank2, excluded_directions, Direction, SphereBound};
use tropbns::svg::plot_circle;

#[derive(Parser)]
#[command(
    name = "tropbns",
    version,
    about = "Tropical upper bounds for BNS invariants of finitely presented groups"
)]
struct Cli {
    /// Emit the full JSON report instead of a summary
    #[arg(long, global = true)]
    json: bool,

    /// Write a circle plot to this path (rank-two inputs)
    #[arg(long, global = true, value_name = "PATH")]
    svg: Option<PathBuf>,

    /// Seed echoed into the report; all computation is deterministic
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Height bound for sampled inclusion checks
    #[arg(long, global = true, default_value_t = 50, value_name = "N")]
    height_bound: i64,

    /// Largest cyclotomic order handled in the minor analysis
    #[arg(long, global = true, default_value_t = 12, value_name = "N")]
    max_cyclotomic: u64,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Full pipeline for a presentation like "<x1,x2 | x1 x2 x1^-1 x2>"
    Analyze { presentation: String },
    /// Bound from a characteristic variety description or pencil list
    /// (inline JSON or @path)
    Bound { input: String },
    /// Exact circle computation for a two-generator one-relator group
    Brown { presentation: String },
    /// Seifert invariants and verdict for a Brieskorn sphere link
    Brieskorn {
        #[arg(required = true, num_args = 3..)]
        exponents: Vec<u64>,
    },
    /// Characteristic variety class of a 2-orbifold group (inline JSON
    /// or @path: {"genus": g, "punctures": r, "weights": [m1, ...]})
    Orbifold { input: String },
    /// Verdict for a Seifert fibered presentation (inline JSON or
    /// @path: {"genus": g, "orbits": [[alpha, beta], ...], "e": "p/q"})
    Seifert { input: String },
    /// Check the exact circle computation against the tropical bound
    Verify { presentation: String },
    /// Circle plot for a rank-two presentation
    Plot { presentation: String },
}

fn read_input(arg: &str) -> Result<Value, CmdError> {
    let text = if let Some(path) = arg.strip_prefix('@') {
        std::fs::read_to_string(path)
            .map_err(|e| CmdError::Parse(format!("cannot read {path}: {e}")))?
    } else if arg.ends_with(".json") && std::path::Path::new(arg).exists() {
        std::fs::read_to_string(arg)
            .map_err(|e| CmdError::Parse(format!("cannot read {arg}: {e}")))?
    } else {
        arg.to_string()
    };
    serde_json::from_str(&text).map_err(|e| CmdError::Parse(format!("bad JSON: {e}")))
}

fn parse_pres(text: &str) -> Result<GroupPresentation, CmdError> {
    parse_presentation(text).map_err(|e| CmdError::Parse(e.to_string()))
}

fn describe_bound(b: &SphereBound) -> String {
    match b {
        SphereBound::Full { .. } => "FULL".to_string(),
        SphereBound::Empty { .. } => "EMPTY".to_string(),
        _ => match excluded_directions(b) {
            Some(ex) if ex.is_empty() => "FULL".to_string(),
            Some(ex) => format!(
                "sphere minus {}",
                ex.iter().map(|d| format!("{d:?}")).collect::<Vec<_>>().join(", ")
            ),
            None => "complement of a positive-codimension tropical set".to_string(),
        },
    }
}

fn write_svg(
    path: Option<&PathBuf>,
    ground: Option<&SphereBound>,
    bound: &SphereBound,
) -> Result<(), CmdError> {
    let Some(path) = path else { return Ok(()) };
    if bound.ambient() != 2 {
        return Err(CmdError::Unsupported("circle plots need a rank-two group".into()));
    }
    let arcs = match ground {
        Some(SphereBound::Arcs(a)) => Some(a.clone()),
        Some(SphereBound::Full { .. }) => Some(tropbns::sigma::ArcSet::full()),
        Some(SphereBound::Empty { .. }) => Some(tropbns::sigma::ArcSet::empty()),
        _ => None,
    };
    let excluded = excluded_directions(bound).unwrap_or_default();
    let svg = plot_circle(arcs.as_ref(), &excluded, &excluded);
    std::fs::write(path, svg)
        .map_err(|e| CmdError::Parse(format!("cannot write {}: {e}", path.display())))
}

fn emit(cli: &Cli, mut report: Value, summary: String) {
    if cli.json {
        if let Some(obj) = report.as_object_mut() {
            obj.insert("seed".into(), json!(cli.seed));
        }
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        println!("{summary}");
    }
}

fn run(cli: &Cli) -> Result<(), CmdError> {
    match &cli.cmd {
        Cmd::Analyze { presentation } => {
            let p = parse_pres(presentation)?;
            let a = analyze(&p, cli.max_cyclotomic, cli.height_bound)?;
            write_svg(cli.svg.as_ref(), a.ground.as_ref(), &a.bound)?;
            let mut lines = vec![
                format!("presentation: {p}"),
                format!("bound: {}", describe_bound(&a.bound)),
            ];
            if let Some(g) = &a.ground {
                lines.push(format!("brown: {}", describe_bound(g)));
            }
            if let Some(d) = &a.violation {
                lines.push(format!("verification: VIOLATION at {:?}", d.0));
                emit(cli, a.report, lines.join("\n"));
                return Err(CmdError::Invariant(format!(
                    "bound excludes a direction in Sigma^1: {:?}",
                    d.0
                )));
            }
            emit(cli, a.report, lines.join("\n"));
            Ok(())
        }
        Cmd::Bound { input } => {
            let v = read_input(input)?;
            let (report, bound) = if let Some(p) = v.get("pencils") {
                let (n, mats) = pencils_from_json(p)?;
                bound_from_pencils(n, &mats)?
            } else if let Some(cv) = v.get("char_variety") {
                bound_from_cv(&cv_from_json(cv)?)
            } else {
                bound_from_cv(&cv_from_json(&v)?)
            };
            write_svg(cli.svg.as_ref(), None, &bound)?;
            emit(cli, report, format!("bound: {}", describe_bound(&bound)));
            Ok(())
        }
        Cmd::Brown { presentation } => {
            let p = parse_pres(presentation)?;
            if p.num_generators != 2 || p.relators.len() != 1 {
                return Err(CmdError::Unsupported(
                    "the exact computation needs two generators and one relator".into(),
                ));
            }
            if tropbns::sigma::betti_two(&p) {
                let g = brown_rank2(&p)?;
                write_svg(cli.svg.as_ref(), Some(&g), &g)?;
                emit(
                    cli,
                    bound_to_json(&g),
                    format!("sigma^1: {}", describe_bound(&g)),
                );
                Ok(())
            } else {
                let chi = Direction::new(vec![1]).unwrap();
                let (pos, neg) = brown_rank1(&p, &chi)?;
                emit(
                    cli,
                    json!({ "rank": 1, "sigma1_contains": { "+1": pos, "-1": neg } }),
                    format!("sigma^1 contains +1: {pos}, -1: {neg}"),
                );
                Ok(())
            }
        }
        Cmd::Brieskorn { exponents } => {
            let report = brieskorn_from_exponents(exponents)?;
            let summary = format!(
                "sigma^1 verdict: {}",
                report["sigma1_verdict"].as_str().unwrap_or("?")
            );
            emit(cli, report, summary);
            Ok(())
        }
        Cmd::Orbifold { input } => {
            let o = orbifold_from_json(&read_input(input)?)?;
            let report = orbifold_report(&o)?;
            let summary = format!(
                "class: {}, sigma^1 empty: {}",
                report["class"].as_str().unwrap_or("?"),
                report["sigma1_empty"]
            );
            emit(cli, report, summary);
            Ok(())
        }
        Cmd::Seifert { input } => {
            let s = seifert_from_json(&read_input(input)?)?;
            let report = seifert_report(&s);
            let summary = format!(
                "sigma^1 verdict: {}",
                report["sigma1_verdict"].as_str().unwrap_or("?")
            );
            emit(cli, report, summary);
            Ok(())
        }
        Cmd::Verify { presentation } => {
            let p = parse_pres(presentation)?;
            let a = analyze(&p, cli.max_cyclotomic, cli.height_bound)?;
            let Some(ground) = &a.ground else {
                return Err(CmdError::Unsupported(
                    "no exact computation available for this presentation".into(),
                ));
            };
            write_svg(cli.svg.as_ref(), Some(ground), &a.bound)?;
            if let Some(d) = &a.violation {
                emit(cli, a.report, format!("VIOLATION at {:?}", d.0));
                return Err(CmdError::Invariant(format!(
                    "bound excludes a direction in Sigma^1: {:?}",
                    d.0
                )));
            }
            emit(cli, a.report, "HOLDS".to_string());
            Ok(())
        }
        Cmd::Plot { presentation } => {
            let p = parse_pres(presentation)?;
            let a = analyze(&p, cli.max_cyclotomic, cli.height_bound)?;
            if a.bound.ambient() != 2 {
                return Err(CmdError::Unsupported("circle plots need a rank-two group".into()));
            }
            let arcs = match &a.ground {
                Some(SphereBound::Arcs(arc)) => Some(arc.clone()),
                Some(SphereBound::Full { .. }) => Some(tropbns::sigma::ArcSet::full()),
                Some(SphereBound::Empty { .. }) => Some(tropbns::sigma::ArcSet::empty()),
                _ => None,
            };
            let excluded = excluded_directions(&a.bound).unwrap_or_default();
            let svg = plot_circle(arcs.as_ref(), &excluded, &excluded);
            match &cli.svg {
                Some(path) => std::fs::write(path, svg)
                    .map_err(|e| CmdError::Parse(format!("cannot write {}: {e}", path.display())))?,
                None => print!("{svg}"),
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
