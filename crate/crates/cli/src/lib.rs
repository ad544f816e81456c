//! The `rccloop` command line: argument handling, exit codes and output.

pub mod args;
mod render;

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use rccloop::analysis::{self, Check, StructureReport};
use rccloop::iso::{self, ClassifyOptions};
use rccloop::loops::{Loop, LoopTable};
use rccloop::{Error, FiniteField, Quadratic, RccLoop};

use args::{Cli, Command, Format, LoopParams, Simplicity};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_REDUCIBLE: i32 = 2;
pub const EXIT_BAD_FIELD: i32 = 3;
pub const EXIT_MALFORMED: i32 = 4;
pub const EXIT_INCONSISTENT: i32 = 5;
pub const EXIT_COUNT_MISMATCH: i32 = 6;
pub const EXIT_CLOSURE_CAP: i32 = 7;

#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Reducible { .. } => EXIT_REDUCIBLE,
            Error::NotPrime(_)
            | Error::BadDegree(_)
            | Error::FieldTooLarge { .. }
            | Error::ElementOutOfRange { .. }
            | Error::ElementParse(_) => EXIT_BAD_FIELD,
            Error::Malformed(_) | Error::IndexOutOfRange { .. } => EXIT_MALFORMED,
            Error::ClosureCapExceeded(_) => EXIT_CLOSURE_CAP,
            _ => EXIT_INCONSISTENT,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

/// Result of a command: exit code, text destined for stdout, and a note for stderr.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run(cli: &Cli) -> Outcome {
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.workers.max(1)).build() {
        Ok(pool) => pool,
        Err(e) => return Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: e.to_string() },
    };
    match pool.install(|| dispatch(cli)) {
        Ok((code, body, note)) => match &cli.out {
            Some(path) if !writes_own_files(&cli.command) => match fs::write(path, &body) {
                Ok(()) => Outcome { code, stdout: String::new(), stderr: note },
                Err(e) => Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: e.to_string() },
            },
            _ => Outcome { code, stdout: body, stderr: note },
        },
        Err(f) => Outcome { code: f.code, stdout: String::new(), stderr: f.message },
    }
}

fn writes_own_files(cmd: &Command) -> bool {
    matches!(cmd, Command::Build(_) | Command::Export(_))
}

type Done = std::result::Result<(i32, String, String), Failure>;

fn dispatch(cli: &Cli) -> Done {
    match &cli.command {
        Command::Build(params) => cmd_build(params, cli.format, cli.out.as_deref(), false),
        Command::Export(params) => cmd_build(params, cli.format, cli.out.as_deref(), true),
        Command::Verify { params, table } => cmd_verify(params, table.as_deref(), cli.format),
        Command::Classify { p, n, simplicity, oracle, no_oracle, budget } => {
            cmd_classify(*p, *n, *simplicity, *oracle, *no_oracle, *budget, cli.format)
        }
        Command::Table2 { qs, simplicity } => cmd_table2(qs, *simplicity, cli.format),
        Command::Conjecture(params) => cmd_conjecture(params, cli.closure_cap, cli.format),
    }
}

fn field_of(params: &LoopParams) -> Result<FiniteField, Failure> {
    let p = params.p.ok_or_else(|| Failure::usage("-p is required"))?;
    Ok(FiniteField::new(p, params.n)?)
}

fn parse_elem(field: &FiniteField, text: &str, poly: bool) -> Result<rccloop::Elem, Failure> {
    if poly {
        return Ok(field.parse_poly(text)?);
    }
    let code: u64 = text.trim().parse().map_err(|_| Error::ElementParse(text.to_string()))?;
    Ok(field.elem(code)?)
}

/// The loops selected by the parameters: one quadratic, or all of them.
fn selected(params: &LoopParams) -> Result<(FiniteField, Vec<Quadratic>), Failure> {
    let field = field_of(params)?;
    if params.all_f {
        if params.r.is_some() || params.s.is_some() {
            return Err(Failure::usage("--all-f excludes -r and -s"));
        }
        let all = field.irreducible_quadratics();
        return Ok((field, all));
    }
    let (Some(r), Some(s)) = (&params.r, &params.s) else {
        return Err(Failure::usage("give -r and -s, or --all-f"));
    };
    let r = parse_elem(&field, r, params.poly)?;
    let s = parse_elem(&field, s, params.poly)?;
    let f = field.quadratic(r, s)?;
    Ok((field, vec![f]))
}

/// Metadata written next to an exported table.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Sidecar {
    pub schema: u32,
    pub p: u32,
    pub n: u32,
    pub q: u32,
    pub modulus: Vec<u32>,
    pub modulus_polynomial: String,
    pub r: u32,
    pub s: u32,
    pub polynomial: String,
    pub order: usize,
    pub identity: usize,
    pub labels: Vec<String>,
    pub section_matrices: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rows: Option<Vec<Vec<usize>>>,
}

impl Sidecar {
    pub fn new(lp: &RccLoop, with_rows: bool) -> Self {
        let field = lp.field();
        let f = lp.quadratic();
        let table = lp.table();
        let m = table.order();
        Sidecar {
            schema: 1,
            p: field.p(),
            n: field.n(),
            q: field.q(),
            modulus: field.modulus().to_vec(),
            modulus_polynomial: render::modulus_poly(field.modulus()),
            r: f.r.code(),
            s: f.s.code(),
            polynomial: f.describe(field),
            order: m,
            identity: table.identity() + 1,
            labels: (0..m).map(|i| lp.label(i)).collect(),
            section_matrices: lp.right_section().iter().map(ToString::to_string).collect(),
            rows: with_rows.then(|| (0..m).map(|x| table.row(x).iter().map(|&v| v as usize + 1).collect()).collect()),
        }
    }
}

/// Fields of a sidecar needed to rebuild the loop.
#[derive(Debug, Deserialize)]
struct SidecarKey {
    p: u32,
    n: u32,
    r: u32,
    s: u32,
}

fn sidecar_path(path: &Path) -> PathBuf {
    let mut name = path.as_os_str().to_owned();
    name.push(".json");
    PathBuf::from(name)
}

fn file_stem(lp: &RccLoop) -> String {
    let f = lp.quadratic();
    format!("q{}_r{}_s{}", lp.field().q(), f.r, f.s)
}

fn table_body(lp: &RccLoop, format: Format) -> Result<String, Failure> {
    Ok(match format {
        Format::Text => lp.table().to_text(),
        Format::Json => serde_json::to_string_pretty(&Sidecar::new(lp, true))? + "\n",
        Format::Csv => render::table_csv(lp)?,
    })
}

fn cmd_build(params: &LoopParams, format: Format, out: Option<&Path>, always_sidecar: bool) -> Done {
    let (field, quads) = selected(params)?;
    let loops = quads.iter().map(|&f| RccLoop::build(&field, f)).collect::<rccloop::Result<Vec<_>>>()?;
    if params.all_f {
        let Some(dir) = out else {
            return Err(Failure::usage("--all-f needs --out DIR"));
        };
        fs::create_dir_all(dir)?;
        let ext = match format {
            Format::Text => "txt",
            Format::Json => "json",
            Format::Csv => "csv",
        };
        let mut listing = String::new();
        for lp in &loops {
            let path = dir.join(format!("{}.{ext}", file_stem(lp)));
            fs::write(&path, table_body(lp, format)?)?;
            fs::write(sidecar_path(&path), serde_json::to_string_pretty(&Sidecar::new(lp, false))? + "\n")?;
            listing.push_str(&format!("{}\t{}\n", path.display(), lp.quadratic().describe(&field)));
        }
        return Ok((EXIT_OK, listing, String::new()));
    }
    let lp = &loops[0];
    let body = table_body(lp, format)?;
    match out {
        Some(path) => {
            fs::write(path, &body)?;
            fs::write(sidecar_path(path), serde_json::to_string_pretty(&Sidecar::new(lp, false))? + "\n")?;
            Ok((EXIT_OK, String::new(), format!("wrote {} and {}", path.display(), sidecar_path(path).display())))
        }
        None if always_sidecar && format == Format::Text => {
            // without a destination the sidecar follows the table on stdout
            let side = serde_json::to_string_pretty(&Sidecar::new(lp, false))?;
            Ok((EXIT_OK, format!("{body}{side}\n"), String::new()))
        }
        None => Ok((EXIT_OK, body, String::new())),
    }
}

/// Reads a table and, when a sidecar is present, the construction it claims.
pub fn verify_table_file(path: &Path) -> Result<StructureReport, Failure> {
    let text = fs::read_to_string(path)?;
    let table = LoopTable::parse_text(&text)?;
    let side = sidecar_path(path);
    let key: Option<SidecarKey> = match fs::read_to_string(&side) {
        Ok(s) => Some(serde_json::from_str(&s).map_err(|e| Failure {
            code: EXIT_MALFORMED,
            message: format!("{}: {e}", side.display()),
        })?),
        Err(_) => None,
    };
    let lp = Loop::new(table.clone())?;
    let Some(key) = key else {
        return Ok(analysis::analyze_loop(&lp));
    };
    let field = FiniteField::new(key.p, key.n)?;
    let f = field.quadratic(field.elem(key.r as u64)?, field.elem(key.s as u64)?)?;
    let built = RccLoop::build(&field, f)?;
    if built.table().to_text() == table.to_text() {
        return Ok(analysis::analyze_rcc(&built));
    }
    let mut report = analysis::analyze_loop(&lp);
    report.checks.push(Check {
        name: "table_matches_construction".to_string(),
        passed: false,
        witness: Some(format!("table differs from the loop of {}", f.describe(&field))),
    });
    Ok(report)
}

fn cmd_verify(params: &LoopParams, table: Option<&Path>, format: Format) -> Done {
    let reports = match table {
        Some(path) => vec![verify_table_file(path)?],
        None => {
            let (field, quads) = selected(params)?;
            quads
                .iter()
                .map(|&f| Ok(analysis::analyze_rcc(&RccLoop::build(&field, f)?)))
                .collect::<Result<Vec<_>, Failure>>()?
        }
    };
    let code = if reports.iter().all(StructureReport::consistent) { EXIT_OK } else { EXIT_INCONSISTENT };
    let body = match format {
        Format::Text => reports.iter().map(render::structure_text).collect::<Vec<_>>().join("\n"),
        Format::Json if reports.len() == 1 => serde_json::to_string_pretty(&reports[0])? + "\n",
        Format::Json => serde_json::to_string_pretty(&serde_json::json!({ "schema": 1, "reports": reports }))? + "\n",
        Format::Csv => render::checks_csv(&reports)?,
    };
    let note = if code == EXIT_OK { String::new() } else { "consistency checks failed".to_string() };
    Ok((code, body, note))
}

fn enumerate_for(q: u32, mode: Simplicity) -> bool {
    match mode {
        Simplicity::Auto => q <= 9,
        Simplicity::Enumerate => true,
        Simplicity::Predict => false,
    }
}

fn cmd_classify(p: u32, n: u32, mode: Simplicity, oracle: bool, no_oracle: bool, budget: u64, format: Format) -> Done {
    let field = FiniteField::new(p, n)?;
    let q = field.q();
    let opts = ClassifyOptions { enumerate_simplicity: enumerate_for(q, mode) };
    let run_oracle = oracle || (!no_oracle && q <= iso::ORACLE_MAX_Q);
    let report = iso::classification_crosscheck(&field, opts, run_oracle, budget)?;
    let code = if !report.classes.counts_match {
        EXIT_COUNT_MISMATCH
    } else if !report.ok() {
        EXIT_INCONSISTENT
    } else {
        EXIT_OK
    };
    let body = match format {
        Format::Text => render::classify_text(&field, &report),
        Format::Json => serde_json::to_string_pretty(&report)? + "\n",
        Format::Csv => render::orbits_csv(&report.classes)?,
    };
    Ok((code, body, String::new()))
}

/// Splits a prime power into `(p, n)`.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let (mut rest, mut n) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        n += 1;
    }
    (rest == 1).then_some((p, n))
}

fn cmd_table2(qs: &[u32], mode: Simplicity, format: Format) -> Done {
    let fields = qs
        .iter()
        .map(|&q| prime_power(q).ok_or(Failure { code: EXIT_BAD_FIELD, message: format!("{q} is not a prime power") }))
        .collect::<Result<Vec<_>, _>>()?;
    let mut tables = Vec::new();
    for &(p, n) in &fields {
        let q = p.pow(n);
        let opts = ClassifyOptions { enumerate_simplicity: enumerate_for(q, mode) };
        tables.push(iso::count_table(&[(p, n)], opts)?);
    }
    let mut rows: Vec<iso::CountRow> = tables.iter().flat_map(|t| t.rows.iter().cloned()).collect();
    rows.sort_by_key(|r| (r.order, r.q));
    let table = iso::CountTable {
        schema: 1,
        simplicity_enumerated: tables.iter().all(|t| t.simplicity_enumerated),
        merged: iso::merge_rows(&rows),
        rows,
        notes: tables.into_iter().flat_map(|t| t.notes).collect(),
    };
    let mismatch = table.rows.iter().filter(|r| r.kind == iso::RowKind::Loop).any(|r| {
        let (p, n) = prime_power(r.q).expect("validated");
        r.non_isomorphic as u64 != iso::predicted_count(p, n)
    });
    let body = match format {
        Format::Text => render::count_table_text(&table),
        Format::Json => serde_json::to_string_pretty(&table)? + "\n",
        Format::Csv => render::count_table_csv(&table)?,
    };
    Ok((if mismatch { EXIT_COUNT_MISMATCH } else { EXIT_OK }, body, String::new()))
}

#[derive(Debug, Serialize)]
pub struct GroupReport {
    pub schema: u32,
    pub p: u32,
    pub n: u32,
    pub r: u32,
    pub s: u32,
    pub polynomial: String,
    pub factorization_counts: analysis::GroupOrderReport,
    pub inner_mappings: analysis::ConjectureReport,
}

fn cmd_conjecture(params: &LoopParams, cap: usize, format: Format) -> Done {
    let (field, quads) = selected(params)?;
    let mut reports = Vec::new();
    for f in quads {
        let lp = RccLoop::build(&field, f)?;
        reports.push(GroupReport {
            schema: 1,
            p: field.p(),
            n: field.n(),
            r: f.r.code(),
            s: f.s.code(),
            polynomial: f.describe(&field),
            factorization_counts: analysis::check_group_orders(&lp, cap)?,
            inner_mappings: analysis::check_conjecture(&lp, cap)?,
        });
    }
    let body = match format {
        Format::Text => reports.iter().map(render::group_text).collect::<Vec<_>>().join("\n"),
        Format::Json if reports.len() == 1 => serde_json::to_string_pretty(&reports[0])? + "\n",
        Format::Json => serde_json::to_string_pretty(&serde_json::json!({ "schema": 1, "reports": reports }))? + "\n",
        Format::Csv => render::fibers_csv(&reports)?,
    };
    Ok((EXIT_OK, body, String::new()))
}
