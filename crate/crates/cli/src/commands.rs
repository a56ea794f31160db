use std::fs;
use std::io::{self, Read, Write};

use maxmin::atlas::{
    self, lower_bound, pdr_spectrum, pdr_spectrum_csv, search_exotic_extremal, verify_bound,
    verify_classification, BoundMode, GraphFilter,
};
use maxmin::betti::{self, BettiOptions};
use maxmin::covers::{induced_matching_number, matching_number, tau_max};
use maxmin::graph::parse_graph_stream;
use maxmin::spectrum::{build_pdr_graph, build_spectrum_graph, pdr_in_range};
use maxmin::{build_family, emit_graph, Error, FamilySpec, FieldSpec, Graph, GraphFormat};
use serde_json::{json, Value};

use crate::{
    BettiArgs, Command, ConstructArgs, EnumerateArgs, FieldArgs, Filter, Format, GraphArgs,
    Harness, VerifyArgs,
};

pub const EXIT_USAGE: u8 = 1;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_RESOURCE: u8 = 3;
pub const EXIT_COUNTEREXAMPLE: u8 = 4;

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } => EXIT_PARSE,
            Error::ResourceLimit { .. } => EXIT_RESOURCE,
            Error::Parameter(_) | Error::Precondition(_) => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

type Outcome = Result<u8, Failure>;

pub fn run(command: Command) -> Outcome {
    let mut out = io::BufWriter::new(io::stdout().lock());
    let code = match command {
        Command::Invariants(args) => invariants(&args, &mut out)?,
        Command::Betti(args) => betti(&args, &mut out)?,
        Command::Construct(args) => construct(&args, &mut out)?,
        Command::Verify(args) => verify(&args, &mut out)?,
        Command::Enumerate(args) => enumerate(&args, &mut out)?,
    };
    out.flush()?;
    Ok(code)
}

fn load_graphs(src: &GraphArgs) -> Result<Vec<Graph>, Failure> {
    if let Some(spec) = &src.family {
        let spec: FamilySpec = spec.parse()?;
        return Ok(vec![build_family(spec)?]);
    }
    let text = match src.graph.as_deref() {
        None | Some("-") => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            s
        }
        Some(path) => fs::read_to_string(path).map_err(|e| Failure::usage(format!("{path}: {e}")))?,
    };
    let graphs = parse_graph_stream(&text)?;
    if graphs.is_empty() {
        return Err(Error::Parse {
            unit: "line",
            position: 1,
            message: "no graph in input".into(),
        }
        .into());
    }
    Ok(graphs)
}

fn field_of(args: &FieldArgs) -> Result<(FieldSpec, BettiOptions), Failure> {
    if args.max_n > betti::ABSOLUTE_MAX_N {
        return Err(Failure::usage(format!(
            "--max-n {} exceeds the hard ceiling {}",
            args.max_n,
            betti::ABSOLUTE_MAX_N
        )));
    }
    Ok((FieldSpec::new(args.characteristic)?, BettiOptions { max_n: args.max_n }))
}

fn write_json(out: &mut impl Write, value: &Value) -> io::Result<()> {
    writeln!(out, "{}", serde_json::to_string(value).expect("JSON values serialise"))
}

fn invariants(args: &GraphArgs, out: &mut impl Write) -> Outcome {
    for g in load_graphs(args)? {
        let report = tau_max(&g);
        let value = json!({
            "graph6": emit_graph(&g, GraphFormat::Graph6),
            "n": g.n(),
            "m": g.m(),
            "tau_max": report.tau_max,
            "i": report.i_min,
            "witness_cover": report.witness_cover,
            "witness_independent": report.witness_independent,
            "num_minimal_covers": report.num_minimal_covers,
            "matching": matching_number(&g),
            "induced_matching": induced_matching_number(&g),
            "chordal": g.is_chordal(),
            "gap_free": g.is_gap_free(),
            "bipartite": g.is_bipartite(),
            "connected": g.is_connected(),
            "isolated": g.isolated_vertices(),
        });
        write_json(out, &value)?;
    }
    Ok(0)
}

fn betti(args: &BettiArgs, out: &mut impl Write) -> Outcome {
    let (field, opts) = field_of(&args.field)?;
    let mut code = 0;
    for g in load_graphs(&args.source)? {
        let table = betti::betti_table_with(&g, field, opts)?;
        let dual = if args.dual {
            let d = betti::dual_check_with(&g, field, opts)?;
            if !d.identity_holds() || !d.bound_holds() {
                code = EXIT_COUNTEREXAMPLE;
            }
            Some(d)
        } else {
            None
        };
        match args.format {
            Format::Json => {
                let mut value = serde_json::to_value(&table).expect("tables serialise");
                if let Some(d) = dual {
                    value["dual"] = json!({
                        "reg_dual": d.reg_dual,
                        "pd_primal": d.pd_primal,
                        "tau_max": d.tau_max,
                        "identity_holds": d.identity_holds(),
                        "bound_holds": d.bound_holds(),
                    });
                }
                write_json(out, &value)?;
            }
            Format::Csv => {
                writeln!(out, "i,j,beta")?;
                for (&(i, j), b) in table.entries() {
                    writeln!(out, "{i},{j},{b}")?;
                }
            }
            Format::Ascii => {
                write!(out, "{}", table.render_ascii())?;
                writeln!(out, "pd = {}, reg = {}, field = {}", table.pd(), table.reg(), field)?;
                if let Some(d) = dual {
                    writeln!(out, "reg(I^v) = {}, tau_max = {}", d.reg_dual, d.tau_max)?;
                }
            }
        }
    }
    Ok(code)
}

fn construct(args: &ConstructArgs, out: &mut impl Write) -> Outcome {
    let joined = args.family.join(" ");
    let lower = joined.trim().to_ascii_lowercase();
    let spec = match (lower.as_str(), args.n, args.p, args.r) {
        ("spectrum", Some(n), Some(p), None) => FamilySpec::Spectrum { n, p },
        ("pdr", Some(n), Some(p), r) => FamilySpec::Pdr { n, p, r: r.unwrap_or(1) },
        ("gn", Some(n), None, None) => FamilySpec::Gn(n),
        _ => joined.parse()?,
    };
    let g = build_family(spec)?;
    let format = if args.edge_list {
        GraphFormat::EdgeList
    } else {
        GraphFormat::Graph6
    };
    let text = emit_graph(&g, format);
    write!(out, "{text}")?;
    if !text.ends_with('\n') {
        writeln!(out)?;
    }
    Ok(0)
}

fn enumerate(args: &EnumerateArgs, out: &mut impl Write) -> Outcome {
    let filter = match args.filter {
        Filter::All => GraphFilter::All,
        Filter::NoIsolated => GraphFilter::NoIsolated,
        Filter::Connected => GraphFilter::Connected,
    };
    for form in atlas::enumerate_classes(args.n, filter)? {
        writeln!(out, "{}", form.graph6())?;
    }
    Ok(0)
}

fn verify(args: &VerifyArgs, out: &mut impl Write) -> Outcome {
    let (field, opts) = field_of(&args.field)?;
    let n = args.n;
    let found = |bad: bool| if bad { EXIT_COUNTEREXAMPLE } else { 0 };
    match args.harness {
        Harness::Bound => {
            let mode = match (args.exhaustive, args.samples, args.seed) {
                (_, Some(_), None) => return Err(Failure::usage("sampled mode requires --seed")),
                (false, Some(samples), Some(seed)) => BoundMode::Sampled {
                    samples,
                    seed,
                    edge_prob: args.edge_prob,
                },
                (true, _, _) => BoundMode::Exhaustive,
                (false, None, _) if n <= atlas::ENUM_MAX_N => BoundMode::Exhaustive,
                (false, None, _) => {
                    return Err(Failure::usage(format!(
                        "n = {n} is above the exhaustive limit {}; pass --samples and --seed",
                        atlas::ENUM_MAX_N
                    )))
                }
            };
            let record = verify_bound(n, mode)?;
            write_json(out, &serde_json::to_value(&record).expect("records serialise"))?;
            Ok(found(!record.violations.is_empty()))
        }
        Harness::Classification => {
            let record = verify_classification(n)?;
            write_json(out, &serde_json::to_value(&record).expect("records serialise"))?;
            Ok(found(!record.mismatches.is_empty()))
        }
        Harness::Spectrum => {
            let mut bad = false;
            let ps: Vec<usize> = match args.p {
                Some(p) => vec![p],
                None => (lower_bound(n)..n).collect(),
            };
            for p in ps {
                let g = build_spectrum_graph(n, p)?;
                let tau = tau_max(&g).tau_max;
                let nu = induced_matching_number(&g);
                let (chordal, gap_free) = (g.is_chordal(), g.is_gap_free());
                let mut ok = tau == p && chordal && gap_free && nu == 1;
                let mut row = json!({
                    "n": n, "p": p, "graph6": emit_graph(&g, GraphFormat::Graph6),
                    "tau_max": tau, "chordal": chordal, "gap_free": gap_free,
                    "induced_matching": nu,
                });
                if n <= opts.max_n {
                    let t = betti::betti_table_with(&g, field, opts)?;
                    ok &= t.pd() == p && t.reg() == 1;
                    row["pd"] = json!(t.pd());
                    row["reg"] = json!(t.reg());
                }
                row["ok"] = json!(ok);
                bad |= !ok;
                write_json(out, &row)?;
            }
            Ok(found(bad))
        }
        Harness::PdrBuild => {
            let mut bad = false;
            for r in 1..=n / 2 {
                for p in 0..n {
                    if args.p.is_some_and(|q| q != p)
                        || args.r.is_some_and(|q| q != r)
                        || !pdr_in_range(n, p, r)
                    {
                        continue;
                    }
                    let g = build_pdr_graph(n, p, r)?;
                    let pd = betti::proj_dim_with(&g, field, opts)?;
                    let reg = betti::regularity_with(&g, field, opts)?;
                    let ok = (pd, reg) == (p, r);
                    bad |= !ok;
                    write_json(
                        out,
                        &json!({
                            "n": n, "p": p, "r": r, "graph6": emit_graph(&g, GraphFormat::Graph6),
                            "pd": pd, "reg": reg, "ok": ok,
                        }),
                    )?;
                }
            }
            Ok(found(bad))
        }
        Harness::PdrSpec => {
            let report = pdr_spectrum(n, field)?;
            let bad = !report.reg_one_row_complete
                || !report.downward_closure_violations.is_empty()
                || !report.construction_missing.is_empty();
            match args.format {
                Format::Csv | Format::Ascii => write!(out, "{}", pdr_spectrum_csv(&report))?,
                Format::Json => {
                    let points: Vec<Value> = report
                        .points
                        .iter()
                        .map(|pt| json!({"p": pt.p, "r": pt.r, "witness": pt.witness.graph6()}))
                        .collect();
                    write_json(
                        out,
                        &json!({
                            "n": report.n,
                            "char": report.field.characteristic(),
                            "classes_visited": report.classes_visited,
                            "points": points,
                            "reg_one_row": report.reg_one_row,
                            "reg_one_row_complete": report.reg_one_row_complete,
                            "downward_closure_violations": report.downward_closure_violations,
                            "construction_missing": report.construction_missing,
                        }),
                    )?;
                }
            }
            if bad {
                eprintln!(
                    "maxmin: pdr spectrum check failed (reg-1 row {:?}, downward-closure violations {:?}, missing {:?})",
                    report.reg_one_row, report.downward_closure_violations, report.construction_missing
                );
            }
            Ok(found(bad))
        }
        Harness::Exotic => {
            let record = search_exotic_extremal(n)?;
            write_json(out, &serde_json::to_value(&record).expect("records serialise"))?;
            Ok(0)
        }
    }
}
