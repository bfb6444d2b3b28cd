//! Batch command-line front end over quiver and module files.
//!
//! Exit status: 0 on success, 1 when a requested check fails, 2 on usage or
//! parse errors. All output is deterministic.

use std::collections::BTreeSet;
use std::path::Path as FsPath;
use std::process::ExitCode;

use ghorkit::cycles::{
    center_generators_bounded, compare_r_s_bounded, cycle_algebra_generators,
    geodesic_quiver_check_bounded, krull_dimension, simple_cycles, QuiverGeodesicCheck,
    RsComparison,
};
use ghorkit::dqif::parse_dqif;
use ghorkit::matchings::{build_label_table, parse_names, Basis, LabelTable, NameMap};
use ghorkit::modules::{parse_module_spec, validate_simple_module};
use ghorkit::paths::parse_path_literal;
use ghorkit::quiver::DimerQuiver;
use ghorkit::resolution::{assemble_resolution, gldim_report, verify_complex, SlotTag};
use ghorkit::rewrite::{dimer_equal_bounded, DimerEq};

const USAGE: &str = "usage: ghorkit <command> [args]

commands:
  validate <quiver.dqif>
  matchings <quiver.dqif> [--simple-only] [--names FILE]
  labels <quiver.dqif> [--basis all|simple] [--names FILE]
  eq <quiver.dqif> <path> <path> [--dimer] [--bound B]
  cycles <quiver.dqif> [--names FILE]
  cycle-algebra <quiver.dqif> [--names FILE]
  center <quiver.dqif> [--bound D] [--names FILE]
  compare-rs <quiver.dqif> [--bound D] [--names FILE]
  geodesic <quiver.dqif> [--bound B]
  module-check <quiver.dqif> <module> [--bound B]
  resolve <quiver.dqif> <module>
  report <quiver.dqif> [--names FILE] [--bound D]
  manifest [corpus-dir]

paths are written in composition order with the base vertex after '@',
for example b.a.a.d@3; bounds default to 6.";

struct Invocation {
    command: String,
    inputs: Vec<String>,
    bound: Option<usize>,
    basis: Basis,
    names: Option<String>,
    simple_only: bool,
    dimer: bool,
}

fn parse_args(args: &[String]) -> Result<Invocation, String> {
    if args.is_empty() {
        return Err("missing command".into());
    }
    let mut inv = Invocation {
        command: args[0].clone(),
        inputs: Vec::new(),
        bound: None,
        basis: Basis::All,
        names: None,
        simple_only: false,
        dimer: false,
    };
    let mut k = 1;
    while k < args.len() {
        match args[k].as_str() {
            "--bound" => {
                k += 1;
                let raw = args.get(k).ok_or("--bound needs a value")?;
                let b: usize = raw.parse().map_err(|_| format!("bad bound {raw:?}"))?;
                if b == 0 {
                    return Err("bounds must be positive".into());
                }
                inv.bound = Some(b);
            }
            "--basis" => {
                k += 1;
                inv.basis = match args.get(k).map(String::as_str) {
                    Some("all") => Basis::All,
                    Some("simple") => Basis::Simple,
                    other => return Err(format!("bad basis {other:?}, expected all or simple")),
                };
            }
            "--names" => {
                k += 1;
                inv.names = Some(args.get(k).ok_or("--names needs a file")?.clone());
            }
            "--simple-only" => inv.simple_only = true,
            "--dimer" => inv.dimer = true,
            flag if flag.starts_with("--") => return Err(format!("unknown flag {flag:?}")),
            _ => inv.inputs.push(args[k].clone()),
        }
        k += 1;
    }
    Ok(inv)
}

fn read_file(path: &str) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))
}

fn load_quiver(path: &str) -> Result<DimerQuiver, String> {
    parse_dqif(&read_file(path)?).map_err(|e| format!("{path}: {e}"))
}

fn load_table(quiver: &DimerQuiver, names: &Option<String>) -> Result<LabelTable, String> {
    let map: Option<NameMap> = match names {
        Some(path) => Some(parse_names(&read_file(path)?).map_err(|e| format!("{path}: {e}"))?),
        None => None,
    };
    build_label_table(quiver, map.as_ref()).map_err(|e| e.to_string())
}

fn rs_string(table: &LabelTable, rs: &RsComparison, bound: i64) -> String {
    match rs {
        RsComparison::EqualUpToBound => format!("RS=equal-up-to-bound({bound})"),
        RsComparison::StrictlySmaller { witness } => format!(
            "RS=strictly-smaller({bound}) witness={}",
            table.format_monomial(Basis::Simple, witness)
        ),
    }
}

fn check_lines(out: &mut String, checks: &[(&str, bool, Option<String>)]) {
    for (name, pass, witness) in checks {
        if *pass {
            out.push_str(&format!("check {name}: pass\n"));
        } else {
            out.push_str(&format!(
                "check {name}: FAIL ({})\n",
                witness.as_deref().unwrap_or("no witness")
            ));
        }
    }
}

/// Returns the report body and the exit status.
fn run(inv: &Invocation) -> Result<(String, u8), String> {
    let bound = inv.bound.unwrap_or(6);
    let mut out = String::new();
    let mut status = 0u8;
    match inv.command.as_str() {
        "validate" => {
            let [quiver_path] = take_inputs::<1>(&inv.inputs)?;
            let quiver = load_quiver(quiver_path)?;
            let report = quiver.validate();
            let checks: Vec<(&str, bool, Option<String>)> =
                report.checks.iter().map(|c| (c.name, c.pass, c.witness.clone())).collect();
            check_lines(&mut out, &checks);
            out.push_str(&format!("valid={}\n", report.is_valid()));
            status = u8::from(!report.is_valid());
        }
        "matchings" => {
            let [quiver_path] = take_inputs::<1>(&inv.inputs)?;
            let quiver = load_quiver(quiver_path)?;
            let table = load_table(&quiver, &inv.names)?;
            for (k, m) in table.matchings.iter().enumerate() {
                if inv.simple_only && !table.simple_flags[k] {
                    continue;
                }
                let ids = table.matching_arrow_ids(&quiver, k).join(",");
                let prefix = m.name.as_ref().map(|n| format!("{n}=")).unwrap_or_default();
                let flag = if table.simple_flags[k] { "simple" } else { "-" };
                out.push_str(&format!("{prefix}{ids} {flag}\n"));
            }
        }
        "labels" => {
            let [quiver_path] = take_inputs::<1>(&inv.inputs)?;
            let quiver = load_quiver(quiver_path)?;
            let table = load_table(&quiver, &inv.names)?;
            for (k, arrow) in quiver.arrows.iter().enumerate() {
                let label = table.arrow_label(inv.basis, k);
                out.push_str(&format!(
                    "{}: {}\n",
                    arrow.id,
                    table.format_monomial(inv.basis, label)
                ));
            }
            out.push_str(&format!(
                "sigma = {}\n",
                table.format_monomial(inv.basis, &table.sigma(inv.basis))
            ));
        }
        "eq" => {
            let [quiver_path, p_lit, q_lit] = take_inputs::<3>(&inv.inputs)?;
            let quiver = load_quiver(quiver_path)?;
            let table = load_table(&quiver, &inv.names)?;
            let p = parse_path_literal(&quiver, p_lit).map_err(|e| e.to_string())?;
            let q = parse_path_literal(&quiver, q_lit).map_err(|e| e.to_string())?;
            let ghor = ghorkit::paths::ghor_equal(&quiver, &table, &p, &q);
            out.push_str(&format!("ghor: {}\n", if ghor { "equal" } else { "not-equal" }));
            if inv.dimer {
                let verdict = match dimer_equal_bounded(&quiver, &p, &q, bound) {
                    DimerEq::Equal => "equal",
                    DimerEq::NotEqualWithinBound => "not-equal-within-bound",
                };
                out.push_str(&format!("dimer: {verdict}\n"));
            }
        }
        "cycles" => {
            let [quiver_path] = take_inputs::<1>(&inv.inputs)?;
            let quiver = load_quiver(quiver_path)?;
            let table = load_table(&quiver, &inv.names)?;
            for rec in simple_cycles(&quiver, &table) {
                out.push_str(&format!(
                    "{} tau={} eta={} h={}\n",
                    rec.cycle.display(&quiver),
                    table.format_monomial(Basis::Simple, &rec.tau_label),
                    table.format_monomial(Basis::All, &rec.eta_label),
                    rec.homology
                ));
            }
        }
        "cycle-algebra" => {
            let [quiver_path] = take_inputs::<1>(&inv.inputs)?;
            let quiver = load_quiver(quiver_path)?;
            let table = load_table(&quiver, &inv.names)?;
            let gens = cycle_algebra_generators(&quiver, &table);
            let shown: Vec<String> =
                gens.monomials().map(|m| table.format_monomial(Basis::Simple, &m)).collect();
            out.push_str(&format!("generators: {}\n", shown.join(", ")));
            out.push_str(&format!("dimS={}\n", krull_dimension(&gens)));
        }
        "center" => {
            let [quiver_path] = take_inputs::<1>(&inv.inputs)?;
            let quiver = load_quiver(quiver_path)?;
            let table = load_table(&quiver, &inv.names)?;
            let center = center_generators_bounded(&quiver, &table, bound as i64);
            out.push_str(&format!("bound={bound}\n"));
            for m in center.monomials() {
                out.push_str(&format!("{}\n", table.format_monomial(Basis::Simple, &m)));
            }
        }
        "compare-rs" => {
            let [quiver_path] = take_inputs::<1>(&inv.inputs)?;
            let quiver = load_quiver(quiver_path)?;
            let table = load_table(&quiver, &inv.names)?;
            let rs = compare_r_s_bounded(&quiver, &table, bound as i64);
            out.push_str(&format!("{}\n", rs_string(&table, &rs, bound as i64)));
        }
        "geodesic" => {
            let [quiver_path] = take_inputs::<1>(&inv.inputs)?;
            let quiver = load_quiver(quiver_path)?;
            let table = load_table(&quiver, &inv.names)?;
            match geodesic_quiver_check_bounded(&quiver, &table, bound)
                .map_err(|e| e.to_string())?
            {
                QuiverGeodesicCheck::GeodesicUpToBound => {
                    out.push_str(&format!("geodesic=up-to-bound({bound})\n"));
                }
                QuiverGeodesicCheck::Fails { witness_class } => {
                    out.push_str(&format!("geodesic=fails witness_class={witness_class}\n"));
                    status = 1;
                }
                QuiverGeodesicCheck::Unknown { class } => {
                    out.push_str(&format!("geodesic=unknown({bound}) class={class}\n"));
                }
            }
        }
        "module-check" => {
            let [quiver_path, module_path] = take_inputs::<2>(&inv.inputs)?;
            let quiver = load_quiver(quiver_path)?;
            let table = load_table(&quiver, &inv.names)?;
            let spec = parse_module_spec(&quiver, &read_file(module_path)?)
                .map_err(|e| format!("{module_path}: {e}"))?;
            let report = validate_simple_module(&quiver, &table, &spec, bound);
            let checks: Vec<(&str, bool, Option<String>)> =
                report.checks.iter().map(|c| (c.name, c.pass, c.witness.clone())).collect();
            check_lines(&mut out, &checks);
            out.push_str(&format!("valid={}\n", report.is_valid()));
            status = u8::from(!report.is_valid());
        }
        "resolve" => {
            let [quiver_path, module_path] = take_inputs::<2>(&inv.inputs)?;
            let quiver = load_quiver(quiver_path)?;
            let table = load_table(&quiver, &inv.names)?;
            let spec = parse_module_spec(&quiver, &read_file(module_path)?)
                .map_err(|e| format!("{module_path}: {e}"))?;
            let complex =
                assemble_resolution(&quiver, &table, &spec).map_err(|e| e.to_string())?;
            for (k, term) in complex.terms.iter().enumerate() {
                let mut koszul = 0;
                let mut escape = 0;
                let mut bd = 0;
                for slot in &term.slots {
                    match slot.tag {
                        SlotTag::Koszul(_) => koszul += 1,
                        SlotTag::Escape(_) => escape += 1,
                        SlotTag::BdSlot(_) | SlotTag::BdTop => bd += 1,
                    }
                }
                out.push_str(&format!(
                    "term {k}: rank {}, basis [koszul={koszul} escape={escape} bd={bd}]\n",
                    term.rank()
                ));
            }
            let (ok, witness) = verify_complex(&quiver, &table, &complex);
            let d2 = if ok { "ok".to_string() } else { format!("fail ({})", witness.unwrap_or_default()) };
            out.push_str(&format!("d2={d2}\n"));
            out.push_str(&format!("pd={}\n", complex.length()));
            out.push_str(&format!(
                "case={}\n",
                if complex.full_support { "full" } else { "partial" }
            ));
            for w in &complex.warnings {
                out.push_str(&format!("warning: {w}\n"));
            }
            status = u8::from(!ok);
        }
        "report" => {
            let [quiver_path] = take_inputs::<1>(&inv.inputs)?;
            let quiver = load_quiver(quiver_path)?;
            let table = load_table(&quiver, &inv.names)?;
            let report = gldim_report(&quiver, &table, bound as i64);
            out.push_str(&format!(
                "N={} dimS={} bound={} {}\n",
                quiver.rank(),
                report.dim_s,
                report.bound,
                rs_string(&table, &report.rs, report.rs_bound)
            ));
        }
        "manifest" => {
            if inv.inputs.len() > 1 {
                return Err(format!("expected at most 1 input argument, got {}", inv.inputs.len()));
            }
            let dir = inv.inputs.first().map(String::as_str).unwrap_or("corpus");
            let manifest = FsPath::new(dir).join("MANIFEST");
            let notes: Vec<(String, String, String)> = match std::fs::read_to_string(&manifest) {
                Ok(text) => text
                    .lines()
                    .filter(|l| !l.trim().is_empty())
                    .map(|l| {
                        let mut parts = l.splitn(3, '\t');
                        (
                            parts.next().unwrap_or_default().to_string(),
                            parts.next().unwrap_or_default().to_string(),
                            parts.next().unwrap_or("derived").to_string(),
                        )
                    })
                    .collect(),
                Err(_) => Vec::new(),
            };
            let mut files: BTreeSet<String> = BTreeSet::new();
            if let Ok(entries) = std::fs::read_dir(dir) {
                for entry in entries.flatten() {
                    let name = entry.file_name().to_string_lossy().to_string();
                    if name.ends_with(".dqif") {
                        files.insert(name);
                    }
                }
            }
            for file in &files {
                match notes.iter().find(|(_, f, _)| f == file) {
                    Some((name, _, note)) => {
                        out.push_str(&format!("{name}\t{file}\t{note}\n"));
                    }
                    None => {
                        let stem = file.trim_end_matches(".dqif");
                        out.push_str(&format!("{stem}\t{file}\tderived\n"));
                    }
                }
            }
        }
        other => return Err(format!("unknown command {other:?}")),
    }
    Ok((out, status))
}

fn take_inputs<const K: usize>(inputs: &[String]) -> Result<[&String; K], String> {
    if inputs.len() != K {
        return Err(format!("expected {K} input argument(s), got {}", inputs.len()));
    }
    let mut it = inputs.iter();
    Ok(std::array::from_fn(|_| it.next().unwrap()))
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let inv = match parse_args(&args) {
        Ok(inv) => inv,
        Err(msg) => {
            eprintln!("error: {msg}");
            eprintln!("{USAGE}");
            return ExitCode::from(2);
        }
    };
    match run(&inv) {
        Ok((out, status)) => {
            print!("{out}");
            ExitCode::from(status)
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
