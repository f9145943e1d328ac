//! Command-line front end for the exact representation workbench.
//!
//! ```text
//! workbench group (info|classes) [--group G|H|K]
//! workbench chartab --group G|H|K|Sym4|Sym3|Sym2 [--format json|md]
//! workbench decompose "<expr>"
//! workbench branch --sub H|K
//! workbench idempotents [--format json|md]
//! workbench dirac
//! workbench hypercube
//! workbench suite <name> [--format json|md] [--out PATH]
//! ```
//!
//! Global options: `--prime P` (modular character-table prime) and
//! `--closure-cap N`. Exit codes: 0 success, 1 verification failure,
//! 2 usage or parse error.

use std::process::ExitCode;

use workbench_core::algebra::{
    central_idempotent, complex_structure_check, dirac_relation_table, lepton_idempotents,
    mass_projector_formula, spinor_projector_formula, PairKind,
};
use workbench_core::chartab::{self, character_table};
use workbench_core::expr;
use workbench_core::group::DEFAULT_CLOSURE_CAP;
use workbench_core::octa;
use workbench_core::report::{self, idempotent_data};
use workbench_core::suites::{Workbench, WorkbenchError, SUITE_NAMES};

const USAGE: &str = "\
usage: workbench [--prime P] [--closure-cap N] <command>

commands:
  group (info|classes) [--group G|H|K]   group structure / class data (JSON)
  chartab --group G|H|K|Sym4|Sym3|Sym2 [--format json|md]
  decompose \"<expr>\"                     tensor arithmetic, e.g. \"2+ * 3+\"
  rep <label> [--format json|md]          per-element matrix dump of an irreducible
  branch --sub H|K                       restriction table
  idempotents [--format json|md]         idempotent and projector checks
  dirac                                  gamma-relation comparison
  hypercube                              closures, eigenframes, charges
  suite <name> [--format json|md] [--out PATH]
      names: group chartab branching tensors idempotents dirac hypercube all
";

struct Options {
    prime: u64,
    closure_cap: usize,
    format: String,
    group: String,
    sub: String,
    out: Option<String>,
    positional: Vec<String>,
}

fn parse_args(args: &[String]) -> Result<Options, String> {
    let mut opts = Options {
        prime: chartab::DEFAULT_PRIME,
        closure_cap: DEFAULT_CLOSURE_CAP,
        format: "md".to_string(),
        group: "G".to_string(),
        sub: "H".to_string(),
        out: None,
        positional: Vec::new(),
    };
    let mut iter = args.iter();
    while let Some(arg) = iter.next() {
        let mut take = |name: &str| {
            iter.next()
                .cloned()
                .ok_or_else(|| format!("missing value after {name}"))
        };
        match arg.as_str() {
            "--prime" => {
                opts.prime = take("--prime")?
                    .parse()
                    .map_err(|_| "bad --prime value".to_string())?
            }
            "--closure-cap" => {
                opts.closure_cap = take("--closure-cap")?
                    .parse()
                    .map_err(|_| "bad --closure-cap value".to_string())?
            }
            "--format" => {
                let v = take("--format")?;
                if v != "json" && v != "md" {
                    return Err(format!("unknown format `{v}`; use json or md"));
                }
                opts.format = v;
            }
            "--group" => opts.group = take("--group")?,
            "--sub" => opts.sub = take("--sub")?,
            "--out" => opts.out = Some(take("--out")?),
            other if other.starts_with("--") => return Err(format!("unknown option `{other}`")),
            other => opts.positional.push(other.to_string()),
        }
    }
    Ok(opts)
}

fn main() -> ExitCode {
    // Die quietly when the output pipe closes (e.g. `workbench ... | head`).
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let args: Vec<String> = std::env::args().skip(1).collect();
    match run(&args) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn as_usage<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn run(args: &[String]) -> Result<ExitCode, String> {
    let opts = parse_args(args)?;
    let Some(command) = opts.positional.first() else {
        return Err(USAGE.to_string());
    };
    match command.as_str() {
        "group" => cmd_group(&opts),
        "chartab" => cmd_chartab(&opts),
        "decompose" => cmd_decompose(&opts),
        "rep" => cmd_rep(&opts),
        "branch" => cmd_branch(&opts),
        "idempotents" => cmd_idempotents(&opts),
        "dirac" => cmd_dirac(&opts),
        "hypercube" => cmd_suite_named(&opts, "hypercube"),
        "suite" => cmd_suite(&opts),
        other => Err(format!("unknown command `{other}`\n\n{USAGE}")),
    }
}

fn context_of(opts: &Options) -> Result<octa::GroupContext, String> {
    Ok(match opts.group.as_str() {
        "G" => octa::octahedral_group(),
        "H" => octa::semidihedral_group(),
        "K" => octa::lepton_group(),
        other => return Err(format!("unknown group `{other}`; use G, H or K")),
    })
}

fn cmd_group(opts: &Options) -> Result<ExitCode, String> {
    let action = opts.positional.get(1).map(String::as_str).unwrap_or("info");
    let ctx = context_of(opts)?;
    match action {
        "info" => {
            let g = &ctx.group;
            println!("group {}", ctx.label);
            println!("order: {}", g.order());
            println!("exponent: {}", g.exponent());
            println!("classes: {}", g.classes().len());
            let gens: Vec<String> = g
                .generators()
                .iter()
                .map(|&id| g.display(id).to_string())
                .collect();
            println!("generators: {}", gens.join(", "));
            Ok(ExitCode::SUCCESS)
        }
        "classes" => {
            let data = report::class_data(&ctx.label, &ctx.group);
            println!(
                "{}",
                serde_json::to_string_pretty(&data).expect("serializable")
            );
            Ok(ExitCode::SUCCESS)
        }
        other => Err(format!(
            "unknown group action `{other}`; use info or classes"
        )),
    }
}

fn cmd_chartab(opts: &Options) -> Result<ExitCode, String> {
    let (label, group, table, columns) = match opts.group.as_str() {
        "G" | "H" | "K" => {
            let ctx = context_of(opts)?;
            let mut table = as_usage(character_table(&ctx.group, opts.prime))?;
            let columns = match opts.group.as_str() {
                "G" => {
                    as_usage(chartab::align_g_labels(&mut table, &ctx))?;
                    octa::g_columns(&ctx)
                }
                "H" => {
                    as_usage(chartab::align_h_labels(&mut table, &ctx))?;
                    octa::h_columns(&ctx)
                }
                _ => {
                    as_usage(chartab::align_k_labels(&mut table, &ctx))?;
                    octa::k_columns(&ctx)
                }
            };
            (ctx.label.clone(), ctx.group, table, columns)
        }
        quotient @ ("Sym4" | "Sym3" | "Sym2") => {
            let g = octa::octahedral_group();
            let chain = octa::normal_chain(&g);
            let kernel = match quotient {
                "Sym4" => &chain[1].1,
                "Sym3" => &chain[2].1,
                _ => &chain[3].1,
            };
            let (q, _) = as_usage(g.group.quotient(kernel))?;
            let table = as_usage(character_table(&q, opts.prime))?;
            let order: Vec<usize> = (0..q.classes().len()).collect();
            let columns = report::default_columns(&q, &order);
            (quotient.to_string(), q, table, columns)
        }
        other => return Err(format!("unknown group `{other}` for chartab")),
    };
    if opts.format == "json" {
        let data = report::table_data(&label, &group, &table, &columns);
        println!(
            "{}",
            serde_json::to_string_pretty(&data).expect("serializable")
        );
    } else {
        print!(
            "{}",
            report::table_markdown(&label, &group, &table, &columns)
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_decompose(opts: &Options) -> Result<ExitCode, String> {
    let Some(text) = opts.positional.get(1) else {
        return Err("decompose needs a quoted expression".to_string());
    };
    let ctx = as_usage(expr::EvalContext::new(opts.prime))?;
    match expr::eval_str(&ctx, text) {
        Ok((ambient, d)) => {
            println!("{text} = {d}   (in {})", ambient.name());
            Ok(ExitCode::SUCCESS)
        }
        Err(expr::ExprError::Char(e)) => {
            eprintln!("error: {e}");
            Ok(ExitCode::from(1))
        }
        Err(e) => Err(e.to_string()),
    }
}

fn cmd_rep(opts: &Options) -> Result<ExitCode, String> {
    let Some(label) = opts.positional.get(1) else {
        return Err("rep needs an irreducible label, e.g. `rep 2+`".to_string());
    };
    let g = octa::octahedral_group();
    let rep = as_usage(workbench_core::reps::build_irrep(&g, label))?;
    let data = report::rep_data(&g.group, &rep);
    if opts.format == "json" {
        println!(
            "{}",
            serde_json::to_string_pretty(&data).expect("serializable")
        );
    } else {
        println!(
            "# {} ({} x {})\n",
            data.label, data.dimension, data.dimension
        );
        for image in &data.images {
            println!("{}:", image.element);
            for row in &image.rows {
                println!("  [{}]", row.join("; "));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_branch(opts: &Options) -> Result<ExitCode, String> {
    let ctx = as_usage(expr::EvalContext::new(opts.prime))?;
    let (sub, table, embedding) = match opts.sub.as_str() {
        "H" => (&ctx.h, &ctx.th, &ctx.h_embedding),
        "K" => (&ctx.k, &ctx.tk, &ctx.k_embedding),
        other => return Err(format!("unknown subgroup `{other}`; use H or K")),
    };
    println!("restriction to {}:", sub.label);
    for chi in &ctx.tg.chars {
        let res = chartab::restrict(&ctx.g.group, chi, &sub.group, embedding);
        let d = as_usage(chartab::decompose(&sub.group, table, &res))?;
        println!("  {:4} -> {}", chi.label, d);
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_idempotents(opts: &Options) -> Result<ExitCode, String> {
    let wb = build_workbench(opts)?;
    let report = as_usage(wb.run_suite("idempotents"))?;
    if opts.format == "json" {
        let k = &wb.ctx.k;
        let idem = lepton_idempotents(k);
        let g = &wb.ctx.g;
        let e4 = central_idempotent(&g.group, wb.ctx.tg.by_label("4_0").unwrap());
        let spinor_block = central_idempotent(&g.group, wb.ctx.tg.by_label("2+").unwrap()).add(
            &central_idempotent(&g.group, wb.ctx.tg.by_label("2-").unwrap()),
        );
        let iota = as_usage(complex_structure_check(g, &wb.ctx.tg, 1))?;
        let elements = vec![
            idempotent_data("p", k, &idem.p, vec![]),
            idempotent_data("q", k, &idem.q, vec![]),
            idempotent_data("r", k, &idem.r, vec![]),
            idempotent_data(
                "e(4_0)",
                g,
                &e4,
                vec![(
                    "matches displayed spacetime projector".to_string(),
                    mass_projector_formula(g) == e4,
                )],
            ),
            idempotent_data(
                "e(2+)+e(2-)",
                g,
                &spinor_block,
                vec![(
                    "matches displayed spinor projector".to_string(),
                    spinor_projector_formula(g) == spinor_block,
                )],
            ),
            idempotent_data(
                "iota0",
                g,
                &iota.iota0,
                vec![
                    ("lies in spinor block".to_string(), iota.lies_in_block),
                    (
                        "displayed scalar squares to -e".to_string(),
                        iota.displayed_scalar_squares,
                    ),
                    (
                        "solved scalar exists".to_string(),
                        iota.solved_scalar.is_some(),
                    ),
                ],
            ),
        ];
        #[derive(serde::Serialize)]
        struct Output {
            schema_version: u32,
            report: workbench_core::report::Report,
            elements: Vec<workbench_core::report::IdempotentData>,
        }
        let out = Output {
            schema_version: report::SCHEMA_VERSION,
            report,
            elements,
        };
        println!(
            "{}",
            serde_json::to_string_pretty(&out).expect("serializable")
        );
        let ok = out.report.passed();
        return Ok(if ok {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(1)
        });
    }
    emit_report(&report, opts)
}

fn cmd_dirac(opts: &Options) -> Result<ExitCode, String> {
    let h = octa::semidihedral_group();
    let table = as_usage(dirac_relation_table(&h))?;
    println!("squares:");
    for (name, s) in &table.squares {
        println!("  {name}² = {s:+}");
    }
    println!("pairs (against the all-anticommuting gamma schema):");
    for p in &table.pairs {
        let desc = match &p.kind {
            PairKind::Commute => "commute".to_string(),
            PairKind::Anticommute => "anticommute".to_string(),
            PairKind::Twisted { sign, partner } => format!(
                "twisted: {}·{} = {}{}·{}",
                p.x,
                p.y,
                if *sign < 0 { "-" } else { "" },
                p.y,
                partner
            ),
        };
        println!(
            "  ({}, {}): {desc}{}",
            p.x,
            p.y,
            if p.gamma_agrees { "" } else { "   [deviates]" }
        );
    }
    let wb = build_workbench(opts)?;
    let report = as_usage(wb.run_suite("dirac"))?;
    emit_report(&report, opts)
}

fn build_workbench(opts: &Options) -> Result<Workbench, String> {
    as_usage(Workbench::new(opts.prime, opts.closure_cap))
}

fn cmd_suite_named(opts: &Options, name: &str) -> Result<ExitCode, String> {
    let wb = build_workbench(opts)?;
    let report = as_usage(wb.run_suite(name))?;
    emit_report(&report, opts)
}

fn cmd_suite(opts: &Options) -> Result<ExitCode, String> {
    let Some(name) = opts.positional.get(1) else {
        return Err(format!(
            "suite needs a name; valid: {}",
            SUITE_NAMES.join(", ")
        ));
    };
    let wb = build_workbench(opts)?;
    let report = match wb.run_suite(name) {
        Ok(r) => r,
        Err(WorkbenchError::UnknownSuite(n)) => {
            return Err(format!(
                "unknown suite `{n}`; valid: {}",
                SUITE_NAMES.join(", ")
            ))
        }
        Err(e) => return Err(e.to_string()),
    };
    emit_report(&report, opts)
}

fn emit_report(
    report: &workbench_core::report::Report,
    opts: &Options,
) -> Result<ExitCode, String> {
    let body = if opts.format == "json" {
        report.to_json()
    } else {
        report.to_markdown()
    };
    match &opts.out {
        Some(path) => {
            std::fs::write(path, &body).map_err(|e| format!("cannot write {path}: {e}"))?
        }
        None => print!("{body}"),
    }
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
