//! Command-line front end.
//!
//! Exit codes: 0 success, 2 input parse error, 3 configuration error,
//! 4 inconsistent table (an inseparable pair in the discernibility matrix).

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::approximation::{decision_class, decision_classes, ApproximationResult};
use crate::error::Error;
use crate::reduction::{
    discernibility_function, discernibility_matrix, reducts_bruteforce, reducts_from_function,
};
use crate::relations::{neighborhood_map, parse_degree, Degree, RelationConfig, RelationKind};
use crate::sets::{AttrSubset, ObjectSet};
use crate::table::{parse_table, DecisionColumn, DecisionTable, ParseOptions};

pub const EXIT_OK: u8 = 0;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_CONFIG: u8 = 3;
pub const EXIT_INCONSISTENT: u8 = 4;

pub fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Parse { .. } => EXIT_PARSE,
        Error::InseparablePair(..) => EXIT_INCONSISTENT,
        _ => EXIT_CONFIG,
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "roughset",
    version,
    about = "Rough-set analysis of incomplete decision tables"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Neighborhood of every object under one relation
    Classes {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        relation: RelationArgs,
    },
    /// Lower and upper approximation of a decision class or object set
    Approx {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        relation: RelationArgs,
        /// Decision value whose class is approximated
        #[arg(long = "class", conflicts_with = "objects")]
        class: Option<String>,
        /// Comma-separated object identifiers to approximate
        #[arg(long, value_delimiter = ',')]
        objects: Option<Vec<String>>,
    },
    /// All reducts and the core
    Reduce {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        relation: RelationArgs,
        /// Cross-check against exhaustive subset search
        #[arg(long)]
        verify: bool,
    },
    /// Discernibility matrix entries kept by the pair filter
    Matrix {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        relation: RelationArgs,
    },
    /// Neighborhoods and approximations under several relations side by side
    Compare {
        #[command(flatten)]
        input: InputArgs,
        /// Comma-separated relation kinds (at least two)
        #[arg(long, value_delimiter = ',', required = true)]
        relations: Vec<String>,
        #[arg(long, default_value = "1/4")]
        k: String,
        #[arg(long)]
        symmetrize: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum IdMode {
    /// First column holds ids when its header is `id`
    Auto,
    Yes,
    No,
}

#[derive(Debug, Args)]
struct InputArgs {
    /// CSV file with a header row
    input: PathBuf,
    /// Decision column name (default: last column)
    #[arg(long)]
    decision: Option<String>,
    #[arg(long, value_enum, default_value = "auto")]
    ids: IdMode,
    /// Token marking a missing value
    #[arg(long, default_value = "*")]
    missing: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Debug, Args)]
struct RelationArgs {
    #[arg(long, default_value = "positive-transitive")]
    relation: String,
    /// Agreement threshold, decimal or fraction
    #[arg(long, default_value = "1/4")]
    k: String,
    /// Use the symmetric closure of the positive transitive relation
    #[arg(long)]
    symmetrize: bool,
}

fn relation_config(kind: &str, k: &str, symmetrize: bool) -> Result<RelationConfig, Error> {
    let kind: RelationKind = kind.parse()?;
    Ok(RelationConfig::with_threshold(kind, parse_degree(k)?)?.symmetrized(symmetrize))
}

impl RelationArgs {
    fn config(&self) -> Result<RelationConfig, Error> {
        relation_config(&self.relation, &self.k, self.symmetrize)
    }
}

impl InputArgs {
    fn load(&self) -> Result<DecisionTable, Error> {
        let text = std::fs::read_to_string(&self.input)
            .map_err(|e| Error::parse(0, format!("{}: {e}", self.input.display())))?;
        let id_column = match self.ids {
            IdMode::Yes => true,
            IdMode::No => false,
            IdMode::Auto => text
                .lines()
                .find(|l| !l.trim().is_empty())
                .and_then(|l| l.split(',').next())
                .is_some_and(|h| h.trim().eq_ignore_ascii_case("id")),
        };
        let options = ParseOptions {
            missing_token: self.missing.clone(),
            id_column,
            decision: self
                .decision
                .clone()
                .map_or(DecisionColumn::Last, DecisionColumn::Named),
        };
        parse_table(&text, &options)
    }

    fn summary(&self, table: &DecisionTable) -> TableSummary {
        TableSummary {
            path: self.input.display().to_string(),
            objects: table.num_objects(),
            attributes: table.num_attrs(),
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct TableSummary {
    pub path: String,
    pub objects: usize,
    pub attributes: usize,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct Report<T> {
    pub command: String,
    pub table: TableSummary,
    pub result: T,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct RelationInfo {
    pub kind: RelationKind,
    pub k: String,
    pub symmetrize: bool,
}

impl From<&RelationConfig> for RelationInfo {
    fn from(c: &RelationConfig) -> Self {
        RelationInfo {
            kind: c.kind,
            k: c.k().to_string(),
            symmetrize: c.symmetrize,
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct Neighborhood {
    pub object: String,
    pub neighborhood: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ClassesResult {
    pub relation: RelationInfo,
    pub neighborhoods: Vec<Neighborhood>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ApproxResult {
    pub relation: RelationInfo,
    pub target: Vec<String>,
    pub lower: Vec<String>,
    pub upper: Vec<String>,
    pub boundary: Vec<String>,
    pub accuracy: String,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ReduceResult {
    pub relation: RelationInfo,
    pub reducts: Vec<Vec<String>>,
    pub core: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleCheck>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct OracleCheck {
    pub agree: bool,
    pub reducts: Vec<Vec<String>>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct MatrixPair {
    pub x: String,
    pub y: String,
    pub attributes: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct MatrixResult {
    pub relation: RelationInfo,
    pub pairs: Vec<MatrixPair>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct KindSets {
    pub relation: RelationKind,
    pub objects: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ObjectComparison {
    pub object: String,
    pub neighborhoods: Vec<KindSets>,
    /// Objects in some but not all of the neighborhoods.
    pub difference: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct KindApproximation {
    pub relation: RelationKind,
    pub lower: Vec<String>,
    pub upper: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ClassComparison {
    pub class: String,
    pub approximations: Vec<KindApproximation>,
    pub lower_difference: Vec<String>,
    pub upper_difference: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CompareResult {
    pub relations: Vec<RelationKind>,
    pub k: String,
    pub symmetrize: bool,
    pub objects: Vec<ObjectComparison>,
    /// Objects whose neighborhood differs between relations.
    pub changed: Vec<String>,
    pub classes: Vec<ClassComparison>,
    pub approximations_agree: bool,
}

/// Parses `args` (including the program name), runs the command and writes
/// its report. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn execute(command: &Command) -> Result<String, Error> {
    match command {
        Command::Classes { input, relation } => {
            let config = relation.config()?;
            let table = input.load()?;
            let result = classes(&table, &config)?;
            render(input, &table, "classes", result, render_classes)
        }
        Command::Approx {
            input,
            relation,
            class,
            objects,
        } => {
            let config = relation.config()?;
            let table = input.load()?;
            let target = match (class, objects) {
                (Some(label), _) => decision_class(&table, label)?,
                (None, Some(names)) => object_set(&table, names)?,
                (None, None) => {
                    return Err(Error::Config("approx needs --class or --objects".into()))
                }
            };
            let result = approx(&table, &target, &config)?;
            render(input, &table, "approx", result, render_approx)
        }
        Command::Reduce {
            input,
            relation,
            verify,
        } => {
            let config = relation.config()?;
            let table = input.load()?;
            let result = reduce(&table, &config, *verify)?;
            render(input, &table, "reduce", result, render_reduce)
        }
        Command::Matrix { input, relation } => {
            let config = relation.config()?;
            let table = input.load()?;
            let result = matrix(&table, &config)?;
            render(input, &table, "matrix", result, render_matrix)
        }
        Command::Compare {
            input,
            relations,
            k,
            symmetrize,
        } => {
            if relations.len() < 2 {
                return Err(Error::Config("compare needs at least two relations".into()));
            }
            let configs = relations
                .iter()
                .map(|r| relation_config(r, k, *symmetrize))
                .collect::<Result<Vec<_>, _>>()?;
            let table = input.load()?;
            let result = compare(&table, &configs)?;
            render(input, &table, "compare", result, render_compare)
        }
    }
}

fn render<T: Serialize>(
    input: &InputArgs,
    table: &DecisionTable,
    command: &str,
    result: T,
    text: fn(&T) -> String,
) -> Result<String, Error> {
    match input.format {
        Format::Text => Ok(text(&result)),
        Format::Json => {
            let report = Report {
                command: command.to_string(),
                table: input.summary(table),
                result,
            };
            let mut s =
                serde_json::to_string_pretty(&report).map_err(|e| Error::Config(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
    }
}

fn object_set(table: &DecisionTable, names: &[String]) -> Result<ObjectSet, Error> {
    let mut set = ObjectSet::empty(table.num_objects());
    for n in names {
        set.insert(table.object_index(n.trim())?);
    }
    Ok(set)
}

pub fn classes(table: &DecisionTable, config: &RelationConfig) -> Result<ClassesResult, Error> {
    let hoods = neighborhood_map(table, &table.all_attrs(), config)?;
    Ok(ClassesResult {
        relation: config.into(),
        neighborhoods: hoods
            .iter()
            .map(|(x, n)| Neighborhood {
                object: table.object_name(x).to_string(),
                neighborhood: table.object_names(n),
            })
            .collect(),
    })
}

pub fn approx(
    table: &DecisionTable,
    target: &ObjectSet,
    config: &RelationConfig,
) -> Result<ApproxResult, Error> {
    let hoods = neighborhood_map(table, &table.all_attrs(), config)?;
    let r =
        ApproximationResult::from_parts(target.clone(), hoods.lower(target), hoods.upper(target));
    Ok(ApproxResult {
        relation: config.into(),
        target: table.object_names(&r.target),
        lower: table.object_names(&r.lower),
        upper: table.object_names(&r.upper),
        boundary: table.object_names(&r.boundary),
        accuracy: r.accuracy.to_string(),
    })
}

fn attr_lists(table: &DecisionTable, sets: &[AttrSubset]) -> Vec<Vec<String>> {
    sets.iter().map(|s| table.attr_names(s)).collect()
}

pub fn reduce(
    table: &DecisionTable,
    config: &RelationConfig,
    verify: bool,
) -> Result<ReduceResult, Error> {
    let all = table.all_attrs();
    let m = discernibility_matrix(table, &all, config)?;
    let found = reducts_from_function(&discernibility_function(&m)?);
    let oracle = if verify {
        let brute = reducts_bruteforce(table, &all, config)?;
        Some(OracleCheck {
            agree: brute == found,
            reducts: attr_lists(table, &brute.reducts),
        })
    } else {
        None
    };
    Ok(ReduceResult {
        relation: config.into(),
        reducts: attr_lists(table, &found.reducts),
        core: table.attr_names(&found.core),
        oracle,
    })
}

pub fn matrix(table: &DecisionTable, config: &RelationConfig) -> Result<MatrixResult, Error> {
    let m = discernibility_matrix(table, &table.all_attrs(), config)?;
    Ok(MatrixResult {
        relation: config.into(),
        pairs: m
            .entries()
            .map(|((x, y), attrs)| MatrixPair {
                x: table.object_name(x).to_string(),
                y: table.object_name(y).to_string(),
                attributes: table.attr_names(attrs),
            })
            .collect(),
    })
}

/// Union minus intersection of the given sets.
fn spread<'a>(width: usize, sets: impl IntoIterator<Item = &'a ObjectSet>) -> ObjectSet {
    let mut union = ObjectSet::empty(width);
    let mut common = ObjectSet::full(width);
    for s in sets {
        union.union_with(s);
        common = common.intersection(s);
    }
    union.difference(&common)
}

pub fn compare(table: &DecisionTable, configs: &[RelationConfig]) -> Result<CompareResult, Error> {
    let n = table.num_objects();
    let all = table.all_attrs();
    let hoods = configs
        .iter()
        .map(|c| neighborhood_map(table, &all, c))
        .collect::<Result<Vec<_>, _>>()?;
    let mut changed = ObjectSet::empty(n);
    let objects = (0..n)
        .map(|x| {
            let diff = spread(n, hoods.iter().map(|h| h.get(x)));
            if !diff.is_empty() {
                changed.insert(x);
            }
            ObjectComparison {
                object: table.object_name(x).to_string(),
                neighborhoods: configs
                    .iter()
                    .zip(&hoods)
                    .map(|(c, h)| KindSets {
                        relation: c.kind,
                        objects: table.object_names(h.get(x)),
                    })
                    .collect(),
                difference: table.object_names(&diff),
            }
        })
        .collect();
    let classes: Vec<ClassComparison> = decision_classes(table)
        .into_iter()
        .map(|class| {
            let lowers: Vec<ObjectSet> = hoods.iter().map(|h| h.lower(&class.members)).collect();
            let uppers: Vec<ObjectSet> = hoods.iter().map(|h| h.upper(&class.members)).collect();
            ClassComparison {
                class: class.label,
                approximations: configs
                    .iter()
                    .zip(lowers.iter().zip(&uppers))
                    .map(|(c, (lo, up))| KindApproximation {
                        relation: c.kind,
                        lower: table.object_names(lo),
                        upper: table.object_names(up),
                    })
                    .collect(),
                lower_difference: table.object_names(&spread(n, &lowers)),
                upper_difference: table.object_names(&spread(n, &uppers)),
            }
        })
        .collect();
    let approximations_agree = classes
        .iter()
        .all(|c| c.lower_difference.is_empty() && c.upper_difference.is_empty());
    let first: Degree = configs[0].k();
    Ok(CompareResult {
        relations: configs.iter().map(|c| c.kind).collect(),
        k: first.to_string(),
        symmetrize: configs[0].symmetrize,
        objects,
        changed: table.object_names(&changed),
        classes,
        approximations_agree,
    })
}

fn braces(items: &[String]) -> String {
    format!("{{{}}}", items.join(", "))
}

fn render_classes(r: &ClassesResult) -> String {
    let mut s = String::new();
    for n in &r.neighborhoods {
        let _ = writeln!(s, "{}: {}", n.object, braces(&n.neighborhood));
    }
    s
}

fn render_approx(r: &ApproxResult) -> String {
    format!(
        "target: {}\nlower: {}\nupper: {}\nboundary: {}\naccuracy: {}\n",
        braces(&r.target),
        braces(&r.lower),
        braces(&r.upper),
        braces(&r.boundary),
        r.accuracy
    )
}

fn render_reduce(r: &ReduceResult) -> String {
    let mut s = String::new();
    for red in &r.reducts {
        let _ = writeln!(s, "reduct: {}", braces(red));
    }
    let _ = writeln!(s, "core: {}", braces(&r.core));
    if let Some(o) = &r.oracle {
        let _ = writeln!(s, "oracle: {}", if o.agree { "agree" } else { "disagree" });
        if !o.agree {
            for red in &o.reducts {
                let _ = writeln!(s, "oracle reduct: {}", braces(red));
            }
        }
    }
    s
}

fn render_matrix(r: &MatrixResult) -> String {
    let mut s = String::new();
    for p in &r.pairs {
        let _ = writeln!(s, "({}, {}): {}", p.x, p.y, braces(&p.attributes));
    }
    s
}

fn render_compare(r: &CompareResult) -> String {
    let mut s = String::new();
    for o in &r.objects {
        let _ = write!(s, "{}:", o.object);
        for k in &o.neighborhoods {
            let _ = write!(s, " {}={}", k.relation, braces(&k.objects));
        }
        let _ = writeln!(s, " difference={}", braces(&o.difference));
    }
    let _ = writeln!(s, "changed: {}", braces(&r.changed));
    for c in &r.classes {
        for a in &c.approximations {
            let _ = writeln!(
                s,
                "class {} {}: lower={} upper={}",
                c.class,
                a.relation,
                braces(&a.lower),
                braces(&a.upper)
            );
        }
        let _ = writeln!(
            s,
            "class {} difference: lower={} upper={}",
            c.class,
            braces(&c.lower_difference),
            braces(&c.upper_difference)
        );
    }
    let _ = writeln!(
        s,
        "approximations: {}",
        if r.approximations_agree {
            "agree"
        } else {
            "differ"
        }
    );
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (u8, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("roughset").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    const TABLE1: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/table1.csv");

    #[test]
    fn bad_flags_are_config_errors() {
        assert_eq!(
            run_args(&["classes", "--relation", "nope", TABLE1]).0,
            EXIT_CONFIG
        );
        assert_eq!(run_args(&["classes", "--k", "2", TABLE1]).0, EXIT_CONFIG);
        assert_eq!(run_args(&["frobnicate"]).0, EXIT_CONFIG);
        assert_eq!(run_args(&["approx", TABLE1]).0, EXIT_CONFIG);
        assert_eq!(run_args(&["approx", "--class", "R", TABLE1]).0, EXIT_CONFIG);
        assert_eq!(
            run_args(&["approx", "--objects", "a99", TABLE1]).0,
            EXIT_CONFIG
        );
        assert_eq!(run_args(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn unreadable_input_is_a_parse_error() {
        let (code, _, err) = run_args(&["classes", "/nonexistent/table.csv"]);
        assert_eq!(code, EXIT_PARSE);
        assert!(err.starts_with("error:"));
    }

    #[test]
    fn classes_text_lines() {
        let (code, out, _) = run_args(&["classes", "--relation", "limited-tolerance", TABLE1]);
        assert_eq!(code, EXIT_OK);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 12);
        assert_eq!(lines[0], "a1: {a1, a11, a12}");
    }

    #[test]
    fn approx_of_single_object() {
        // a1's tolerance class under L is {a1, a11, a12}: not inside {a1};
        // it meets {a1} for a1, a11 and a12 only
        let (code, out, _) = run_args(&[
            "approx",
            "--relation",
            "limited-tolerance",
            "--objects",
            "a1",
            TABLE1,
        ]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("lower: {}\n"), "{out}");
        assert!(out.contains("upper: {a1, a11, a12}\n"), "{out}");
        assert!(out.contains("accuracy: 0\n"), "{out}");
    }
}
