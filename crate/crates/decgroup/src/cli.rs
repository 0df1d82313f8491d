//! Command-line front end: `dec`, `sym`, `zeros-dec`, `orbit`.
//!
//! Exit codes: 0 success, 1 usage or parse failure, 2 non-zero-dimensional
//! input, 3 timeout, 4 containment failure. Reports are plain text by
//! default; `--json` emits the same content under a stable schema
//! (`"schema": 1`).

use std::io::Write;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use serde_json::{json, Value};

use crate::dec::{
    dec_from_points, dec_group_from_basis, sym_group, DecOptions, DecResult, RadicalPolicy,
};
use crate::error::{Error, Result};
use crate::groebner::{buchberger_with, Budget, GroebnerBasis};
use crate::monomial::{MonomialOrder, OrderKind};
use crate::parse::{format_poly, format_system, parse_points, parse_system};
use crate::perm::{parse_cycles, PermGroup};
use crate::poly::Polynomial;
use crate::triangular::{is_triangular, is_regular, orbit_triangular};

pub const SCHEMA_VERSION: u64 = 1;

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub order: OrderKind,
    pub radical: RadicalPolicy,
    pub cutoff: usize,
    pub timeout_secs: u64,
    pub json: bool,
    pub cache_dir: Option<PathBuf>,
    pub group: Option<String>,
    pub show_gb: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            order: OrderKind::DegRevLex,
            radical: RadicalPolicy::Auto,
            cutoff: 16,
            timeout_secs: 600,
            json: false,
            cache_dir: None,
            group: None,
            show_gb: false,
        }
    }
}

impl RunConfig {
    fn budget(&self) -> Budget {
        Budget::with_deadline(Instant::now() + Duration::from_secs(self.timeout_secs))
    }

    fn dec_options(&self) -> DecOptions {
        DecOptions {
            radical_policy: self.radical,
            symbolic_cutoff: self.cutoff,
            budget: self.budget(),
        }
    }
}

const USAGE: &str = "usage: decgroup <command> [flags] <file...>

commands:
  dec <system>             decomposition group of a zero-dimensional ideal
  sym <poly>               symmetric group of a single polynomial
  zeros-dec <points>       decomposition group from an explicit zero set
  orbit <system> <triset>  permutation orbit of a triangular set

flags:
  --order lex|grlex|degrevlex   monomial order (default degrevlex)
  --radical auto|strict|off     non-radical input policy (default auto)
  --cutoff N                    symbolic strategy cutoff (default 16)
  --timeout SECS                cooperative deadline (default 600)
  --json                        JSON report
  --cache DIR                   cache reduced bases on disk
  --group \"<cycles>\"            explicit group generators for orbit
  --show-gb                     include the basis in the text report";

/// Entry point; prints to the given sinks and returns the exit code.
pub fn run_to(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(args, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

/// Entry point against stdout/stderr.
pub fn run(args: &[String]) -> i32 {
    let mut out = std::io::stdout();
    let mut err = std::io::stderr();
    run_to(args, &mut out, &mut err)
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NotZeroDimensional | Error::UnitIdeal => 2,
        Error::Timeout { .. } => 3,
        Error::NotContained => 4,
        _ => 1,
    }
}

fn dispatch(args: &[String], out: &mut dyn Write) -> Result<()> {
    let (command, rest) = args
        .split_first()
        .ok_or_else(|| Error::Usage(USAGE.to_string()))?;
    let (config, files) = parse_flags(rest)?;
    match command.as_str() {
        "dec" => cmd_dec(&one_file(&files)?, &config, out),
        "sym" => cmd_sym(&one_file(&files)?, &config, out),
        "zeros-dec" => cmd_zeros_dec(&one_file(&files)?, &config, out),
        "orbit" => {
            if files.len() != 2 {
                return Err(Error::Usage(
                    "orbit expects a system file and a triangular-set file".into(),
                ));
            }
            cmd_orbit(&files[0], &files[1], &config, out)
        }
        "help" | "--help" | "-h" => {
            writeln!(out, "{USAGE}").map_err(io_err)?;
            Ok(())
        }
        other => Err(Error::Usage(format!("unknown command '{other}'\n{USAGE}"))),
    }
}

fn one_file(files: &[String]) -> Result<String> {
    match files {
        [f] => Ok(f.clone()),
        _ => Err(Error::Usage("expected exactly one input file".into())),
    }
}

fn parse_flags(args: &[String]) -> Result<(RunConfig, Vec<String>)> {
    let mut config = RunConfig::default();
    let mut files = Vec::new();
    let mut it = args.iter();
    let missing = |flag: &str| Error::Usage(format!("flag {flag} needs a value"));
    while let Some(a) = it.next() {
        match a.as_str() {
            "--order" => {
                let v = it.next().ok_or_else(|| missing("--order"))?;
                config.order = OrderKind::from_name(v)
                    .ok_or_else(|| Error::Usage(format!("unknown order '{v}'")))?;
            }
            "--radical" => {
                let v = it.next().ok_or_else(|| missing("--radical"))?;
                config.radical = RadicalPolicy::from_name(v)
                    .ok_or_else(|| Error::Usage(format!("unknown radical policy '{v}'")))?;
            }
            "--cutoff" => {
                let v = it.next().ok_or_else(|| missing("--cutoff"))?;
                config.cutoff = v
                    .parse()
                    .map_err(|_| Error::Usage(format!("bad cutoff '{v}'")))?;
            }
            "--timeout" => {
                let v = it.next().ok_or_else(|| missing("--timeout"))?;
                config.timeout_secs = v
                    .parse()
                    .map_err(|_| Error::Usage(format!("bad timeout '{v}'")))?;
            }
            "--json" => config.json = true,
            "--cache" => {
                let v = it.next().ok_or_else(|| missing("--cache"))?;
                config.cache_dir = Some(PathBuf::from(v));
            }
            "--group" => {
                let v = it.next().ok_or_else(|| missing("--group"))?;
                config.group = Some(v.clone());
            }
            "--show-gb" => config.show_gb = true,
            flag if flag.starts_with("--") => {
                return Err(Error::Usage(format!("unknown flag '{flag}'\n{USAGE}")));
            }
            _ => files.push(a.clone()),
        }
    }
    Ok((config, files))
}

fn io_err(e: std::io::Error) -> Error {
    Error::Io(e.to_string())
}

fn read_file(path: &str) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("cannot read '{path}': {e}")))
}

// ---------------------------------------------------------------------------
// Basis cache
// ---------------------------------------------------------------------------

fn fnv1a64(data: &[u8]) -> u64 {
    let mut hash: u64 = 0xcbf29ce484222325;
    for &b in data {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x100000001b3);
    }
    hash
}

/// Computes the reduced basis, or loads it from the cache directory keyed
/// by a content hash of the canonical system text and the order name.
fn load_or_compute_gb(
    names: &[String],
    polys: &[Polynomial],
    order: &MonomialOrder,
    config: &RunConfig,
    budget: &Budget,
) -> Result<(GroebnerBasis, bool)> {
    let key_src = format!("{}\norder: {}\n", format_system(names, polys), order);
    let key = fnv1a64(key_src.as_bytes());
    let path = config
        .cache_dir
        .as_ref()
        .map(|dir| dir.join(format!("{key:016x}.gb")));
    if let Some(p) = &path {
        if let Ok(text) = std::fs::read_to_string(p) {
            let (cached_names, gens) = parse_system(&text, order)?;
            if cached_names == names {
                let gb = GroebnerBasis::from_reduced_generators(gens, names.len(), order)?;
                return Ok((gb, true));
            }
        }
    }
    let gb = buchberger_with(polys, order, budget)?;
    if let Some(p) = &path {
        if let Some(dir) = p.parent() {
            std::fs::create_dir_all(dir).map_err(io_err)?;
        }
        std::fs::write(p, format_system(names, gb.generators())).map_err(io_err)?;
    }
    Ok((gb, false))
}

// ---------------------------------------------------------------------------
// dec
// ---------------------------------------------------------------------------

fn cmd_dec(path: &str, config: &RunConfig, out: &mut dyn Write) -> Result<()> {
    let started = Instant::now();
    let text = read_file(path)?;
    let order = MonomialOrder::new(config.order);
    let (names, polys) = parse_system(&text, &order)?;
    if polys.is_empty() {
        return Err(Error::Usage("system file declares no polynomials".into()));
    }
    let budget = config.budget();
    let (gb, cached) = load_or_compute_gb(&names, &polys, &order, config, &budget)?;
    let gb_ms = started.elapsed().as_millis();
    let mut result = dec_group_from_basis(&gb, &config.dec_options())?;
    if result.dec_group.order() < result.candidate_group.order() {
        result.warnings.push(format!(
            "candidate group (order {}) strictly exceeds the confirmed group (order {}); \
             the block-symmetry product is an over-approximation here",
            result.candidate_group.order(),
            result.dec_group.order()
        ));
    }
    let total_ms = started.elapsed().as_millis();

    let lambda_names = crate::parse::lambda_names(names.len());
    if config.json {
        let v = dec_result_json(&result, &names, &lambda_names, config, cached, gb_ms, total_ms);
        writeln!(out, "{}", serde_json::to_string_pretty(&v).unwrap()).map_err(io_err)?;
        return Ok(());
    }
    writeln!(out, "order: {}", config.order).map_err(io_err)?;
    writeln!(out, "quotient dimension: {}", result.quotient_dimension).map_err(io_err)?;
    writeln!(out, "radicalized: {}", if result.radicalized { "yes" } else { "no" })
        .map_err(io_err)?;
    writeln!(out, "strategy: {}", result.strategy).map_err(io_err)?;
    if config.show_gb {
        writeln!(out, "groebner basis ({} generators):", result.gb.generators().len())
            .map_err(io_err)?;
        for g in result.gb.generators() {
            writeln!(out, "  {}", format_poly(g, &names)).map_err(io_err)?;
        }
    }
    for (i, f) in result.char_polys.iter().enumerate() {
        let fl = f.extend_arity(lambda_names.len(), 0, f.order().clone());
        writeln!(out, "f{} = {}", i + 1, format_poly(&fl, &lambda_names)).map_err(io_err)?;
    }
    writeln!(out, "partition: {}", result.partition).map_err(io_err)?;
    for (k, block) in result.partition.blocks().iter().enumerate() {
        let vars: Vec<String> = block.iter().map(|&i| names[i].clone()).collect();
        match result.block_sym_groups.get(k) {
            Some(sym) => {
                writeln!(
                    out,
                    "block {{{}}}: F{} = {}; Sym = {}",
                    vars.join(","),
                    k + 1,
                    format_poly(&result.block_polys[k], &lambda_names),
                    sym
                )
                .map_err(io_err)?;
            }
            None => {
                writeln!(out, "block {{{}}}: oracle-only", vars.join(",")).map_err(io_err)?;
            }
        }
    }
    writeln!(out, "candidate order: {}", result.candidate_group.order()).map_err(io_err)?;
    writeln!(out, "dec: {}", result.dec_group).map_err(io_err)?;
    for w in &result.warnings {
        writeln!(out, "warning: {w}").map_err(io_err)?;
    }
    writeln!(out, "time: {total_ms} ms (basis {gb_ms} ms{})", if cached { ", cached" } else { "" })
        .map_err(io_err)?;
    Ok(())
}

fn group_json(g: &PermGroup) -> Value {
    let report = g.describe();
    json!({
        "order": report.order,
        "generators": report.generators.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "name": report.tag,
        "elements": g.elements().iter().map(|p| p.to_string()).collect::<Vec<_>>(),
    })
}

fn dec_result_json(
    result: &DecResult,
    names: &[String],
    lambda_names: &[String],
    config: &RunConfig,
    cached: bool,
    gb_ms: u128,
    total_ms: u128,
) -> Value {
    let blocks: Vec<Value> = result
        .partition
        .blocks()
        .iter()
        .enumerate()
        .map(|(k, block)| {
            let mut v = json!({
                "variables": block.iter().map(|i| i + 1).collect::<Vec<_>>(),
            });
            if let Some(sym) = result.block_sym_groups.get(k) {
                v["block_poly"] =
                    json!(format_poly(&result.block_polys[k], lambda_names));
                v["sym"] = group_json(sym);
            }
            v
        })
        .collect();
    json!({
        "schema": SCHEMA_VERSION,
        "command": "dec",
        "order": config.order.name(),
        "quotient_dimension": result.quotient_dimension,
        "radicalized": result.radicalized,
        "strategy": result.strategy.to_string(),
        "gb": result.gb.generators().iter().map(|g| format_poly(g, names)).collect::<Vec<_>>(),
        "char_polys": result
            .char_polys
            .iter()
            .map(|f| {
                let fl = f.extend_arity(lambda_names.len(), 0, f.order().clone());
                format_poly(&fl, lambda_names)
            })
            .collect::<Vec<_>>(),
        "partition": result
            .partition
            .blocks()
            .iter()
            .map(|b| b.iter().map(|i| i + 1).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
        "blocks": blocks,
        "candidate": group_json(&result.candidate_group),
        "dec": group_json(&result.dec_group),
        "warnings": result.warnings,
        "timings_ms": { "basis": gb_ms as u64, "total": total_ms as u64, "basis_cached": cached },
    })
}

// ---------------------------------------------------------------------------
// sym
// ---------------------------------------------------------------------------

fn cmd_sym(path: &str, config: &RunConfig, out: &mut dyn Write) -> Result<()> {
    let text = read_file(path)?;
    let order = MonomialOrder::new(config.order);
    let (names, polys) = parse_system(&text, &order)?;
    if polys.len() != 1 {
        return Err(Error::Usage(format!(
            "sym expects exactly one polynomial, found {}",
            polys.len()
        )));
    }
    let n = names.len();
    let block: Vec<usize> = (0..n).collect();
    let group = sym_group(&polys[0], n, &block)?;
    let report = group.describe();
    if config.json {
        let v = json!({
            "schema": SCHEMA_VERSION,
            "command": "sym",
            "polynomial": format_poly(&polys[0], &names),
            "sym": group_json(&group),
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&v).unwrap()).map_err(io_err)?;
        return Ok(());
    }
    writeln!(out, "polynomial: {}", format_poly(&polys[0], &names)).map_err(io_err)?;
    writeln!(out, "sym: {group}").map_err(io_err)?;
    if let Some(tag) = report.tag {
        writeln!(out, "name: {tag}").map_err(io_err)?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// zeros-dec
// ---------------------------------------------------------------------------

fn cmd_zeros_dec(path: &str, config: &RunConfig, out: &mut dyn Write) -> Result<()> {
    let text = read_file(path)?;
    let (names, points) = parse_points(&text)?;
    if points.is_empty() {
        return Err(Error::Usage("no points given".into()));
    }
    let result = dec_from_points(&points)?;
    let mut warnings: Vec<String> = Vec::new();
    if result.dec_group.order() < result.candidate_group.order() {
        warnings.push(format!(
            "candidate group (order {}) strictly exceeds the confirmed group (order {})",
            result.candidate_group.order(),
            result.dec_group.order()
        ));
    }
    if config.json {
        let sets: Vec<Vec<String>> = result
            .coordinate_sets
            .iter()
            .map(|s| s.iter().map(crate::rational::format_rat).collect())
            .collect();
        let v = json!({
            "schema": SCHEMA_VERSION,
            "command": "zeros-dec",
            "variables": names,
            "points": points.len(),
            "coordinate_sets": sets,
            "partition": result
                .partition
                .blocks()
                .iter()
                .map(|b| b.iter().map(|i| i + 1).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "candidate": group_json(&result.candidate_group),
            "dec": group_json(&result.dec_group),
            "warnings": warnings,
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&v).unwrap()).map_err(io_err)?;
        return Ok(());
    }
    for (i, s) in result.coordinate_sets.iter().enumerate() {
        let vals: Vec<String> = s.iter().map(crate::rational::format_rat).collect();
        writeln!(out, "S{} ({}) = {{{}}}", i + 1, names[i], vals.join(", ")).map_err(io_err)?;
    }
    writeln!(out, "partition: {}", result.partition).map_err(io_err)?;
    writeln!(out, "candidate order: {}", result.candidate_group.order()).map_err(io_err)?;
    writeln!(out, "dec: {}", result.dec_group).map_err(io_err)?;
    for w in &warnings {
        writeln!(out, "warning: {w}").map_err(io_err)?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// orbit
// ---------------------------------------------------------------------------

fn cmd_orbit(
    system_path: &str,
    triset_path: &str,
    config: &RunConfig,
    out: &mut dyn Write,
) -> Result<()> {
    let started = Instant::now();
    let order = MonomialOrder::new(config.order);
    let (names, system) = parse_system(&read_file(system_path)?, &order)?;
    let (tri_names, tri_polys) = parse_system(&read_file(triset_path)?, &order)?;
    if names != tri_names {
        return Err(Error::Usage(
            "system and triangular-set files declare different variables".into(),
        ));
    }
    let tri = is_triangular(&tri_polys)
        .map_err(|d| Error::Usage(format!("input is not a triangular set: {d}")))?;
    let regular = is_regular(&tri)?;
    let budget = config.budget();
    let (gb, cached) = load_or_compute_gb(&names, &system, &order, config, &budget)?;
    let n = names.len();
    let group = match &config.group {
        Some(spec) => {
            let gens = parse_cycles(spec, n)?;
            PermGroup::closure(n, &gens)?
        }
        None => dec_group_from_basis(&gb, &config.dec_options())?.dec_group,
    };
    let orbit = orbit_triangular(&tri, &group, &gb, &budget)?;
    let total_ms = started.elapsed().as_millis();

    if config.json {
        let elements: Vec<Value> = orbit
            .iter()
            .map(|el| {
                json!({
                    "sigma": el.sigma.to_string(),
                    "polys": el.set.polys().iter().map(|p| format_poly(p, &names)).collect::<Vec<_>>(),
                    "verified": el.verified,
                })
            })
            .collect();
        let v = json!({
            "schema": SCHEMA_VERSION,
            "command": "orbit",
            "order": config.order.name(),
            "input_regular": regular,
            "group_order": group.order(),
            "orbit": elements,
            "timings_ms": { "total": total_ms as u64, "basis_cached": cached },
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&v).unwrap()).map_err(io_err)?;
        return Ok(());
    }
    writeln!(out, "input triangular set is {}regular", if regular { "" } else { "NOT " })
        .map_err(io_err)?;
    writeln!(out, "group order: {}", group.order()).map_err(io_err)?;
    writeln!(out, "orbit size: {}", orbit.len()).map_err(io_err)?;
    for el in &orbit {
        let polys: Vec<String> =
            el.set.polys().iter().map(|p| format_poly(p, &names)).collect();
        writeln!(
            out,
            "{} -> [{}]{}",
            el.sigma,
            polys.join(", "),
            if el.verified { "" } else { "  ** CONTAINMENT FAILED **" }
        )
        .map_err(io_err)?;
    }
    if orbit.iter().any(|el| !el.verified) {
        writeln!(
            out,
            "warning: some permuted sets are NOT contained in the ideal's zero set; \
             the supplied group is larger than the ideal's decomposition group"
        )
        .map_err(io_err)?;
    }
    writeln!(out, "time: {total_ms} ms{}", if cached { " (basis cached)" } else { "" })
        .map_err(io_err)?;
    Ok(())
}
