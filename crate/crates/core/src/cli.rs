//! The `tlgsb` command line.
//!
//! ```text
//! tlgsb dim --family gd1n --d 3 --n 3                 # 59
//! tlgsb verify-gs --family b --n 4 --format json
//! tlgsb nf --d 3 --n 3 --word 0,0,0                   # 2*δ*E0
//! ```
//!
//! Exit codes: 0 success, 1 invalid input or domain error, 2 verification
//! failure (non-closed rule set, failed oracle, inconsistent normal form).

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::combinatorics::{fc_words, group_oracle_check, monomial_to_path, packet_decomposition, DyckPathG};
use crate::error::Error;
use crate::free_algebra::{NcPoly, Word};
use crate::presentations::{
    completed_basis, defining_relations_tagged, dimension, gs_basis_tagged, standard_monomials,
    subalg_dimension, subalgebra_basis, Family, RuleFamily, StdMonomial, TaggedRules, TlAlgebra,
};
use crate::rewrite::{
    bounded_completion, enumerate_standard_words, is_closed_with, CompositionOptions, RuleSet,
};

#[derive(Parser, Debug)]
#[command(name = "tlgsb", version, about = "Gröbner–Shirshov bases for Temperley–Lieb algebras of G(d,1,n)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyTag {
    A,
    B,
    Gd1n,
    Gddn,
    Gdrn,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args, Debug)]
struct Common {
    #[arg(long, value_enum, default_value = "gd1n")]
    family: FamilyTag,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum EnumerateWhat {
    /// Structurally generated standard monomials (subalgebra basis for gddn/gdrn).
    Monomials,
    /// Words irreducible under the listed basis.
    Words,
    /// Fully commutative words in the s-alphabet.
    Fc,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum RulesWhat {
    Listed,
    Defining,
    Completed,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dimension from the closed formula.
    Dim(Common),
    /// List standard monomials, irreducible words or fc words.
    Enumerate {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "monomials")]
        what: EnumerateWhat,
    },
    /// Check closure under composition.
    VerifyGs {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "listed")]
        what: RulesWhat,
        /// Ignore ambiguities longer than this (also the completion bound).
        #[arg(long)]
        max_deg: Option<usize>,
    },
    /// Normal form of a word.
    Nf {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        word: String,
    },
    /// Product of two words in the standard basis.
    Mul {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Bounded completion of the defining relations.
    Complete {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 12)]
        max_deg: usize,
    },
    /// Dyck paths of the plus-form monomials.
    Paths(Common),
    /// Packet decomposition of the fc words.
    Packets(Common),
    /// Wreath-product certification of the fc words.
    Oracle(Common),
}

/// `dim` output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimDocument {
    pub family: String,
    pub dimension: u128,
}

/// One line of the `verify-gs` stream: compositions between two rule
/// families.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyPairLine {
    pub left: String,
    pub right: String,
    pub compositions: usize,
    pub nonzero: usize,
}

enum Failure {
    Input(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Inconsistent(_) => Failure::Verification(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(format!("i/o error: {e}"))
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Input(format!("json error: {e}"))
    }
}

type Outcome = Result<(), Failure>;

enum Target {
    Algebra(Family),
    Subalgebra { d: usize, r: usize, n: usize },
}

fn need(v: Option<usize>, flag: &str) -> Result<usize, Failure> {
    v.ok_or_else(|| Failure::Input(format!("missing --{flag}")))
}

fn target(c: &Common) -> Result<Target, Failure> {
    let n = need(c.n, "n")?;
    Ok(match c.family {
        FamilyTag::A => Target::Algebra(Family::type_a(n)?),
        FamilyTag::B => Target::Algebra(Family::type_b(n)?),
        FamilyTag::Gd1n => Target::Algebra(Family::gd1n(need(c.d, "d")?, n)?),
        FamilyTag::Gddn => {
            let d = need(c.d, "d")?;
            Target::Subalgebra { d, r: d, n }
        }
        FamilyTag::Gdrn => Target::Subalgebra { d: need(c.d, "d")?, r: need(c.r, "r")?, n },
    })
}

fn algebra(c: &Common) -> Result<Family, Failure> {
    match target(c)? {
        Target::Algebra(f) => Ok(f),
        Target::Subalgebra { .. } => Err(Failure::Input(
            "families gddn and gdrn are only supported by dim and enumerate".into(),
        )),
    }
}

/// `(d, n)` of a family with a zero generator.
fn group_params(c: &Common) -> Result<(usize, usize), Failure> {
    match algebra(c)? {
        Family::TypeA { .. } => Err(Failure::Input("type A has no E0; use --family b or gd1n".into())),
        f => Ok((f.d(), f.n())),
    }
}

fn parse_word(s: &str, f: &Family) -> Result<Word, Failure> {
    let w = Word::parse_indices(s)?;
    if !f.alphabet().contains(&w) {
        return Err(Failure::Input(format!("word {s:?} uses letters outside {f}")));
    }
    Ok(w)
}

fn json_line<T: Serialize>(out: &mut dyn Write, v: &T) -> Outcome {
    serde_json::to_writer(&mut *out, v)?;
    writeln!(out)?;
    Ok(())
}

fn lines<I: IntoIterator<Item = String>>(out: &mut dyn Write, items: I) -> Outcome {
    for s in items {
        writeln!(out, "{s}")?;
    }
    Ok(())
}

fn cmd_dim(c: &Common, out: &mut dyn Write) -> Outcome {
    let (name, dim) = match target(c)? {
        Target::Algebra(f) => (f.to_string(), dimension(&f)?),
        Target::Subalgebra { d, r, n } => (format!("T({d},{r},{n})"), subalg_dimension(d, r, n)?),
    };
    match c.format {
        Format::Text => lines(out, [dim.to_string()]),
        Format::Json => json_line(out, &DimDocument { family: name, dimension: dim }),
    }
}

fn cmd_enumerate(c: &Common, what: EnumerateWhat, out: &mut dyn Write) -> Outcome {
    match what {
        EnumerateWhat::Monomials => {
            let ms: Vec<StdMonomial> = match target(c)? {
                Target::Algebra(f) => standard_monomials(&f),
                Target::Subalgebra { d, r, n } => subalgebra_basis(d, r, n)?,
            };
            match c.format {
                Format::Text => lines(out, ms.iter().map(|m| m.word().to_string())),
                Format::Json => json_line(out, &ms),
            }
        }
        EnumerateWhat::Words => {
            let f = algebra(c)?;
            let rules = crate::presentations::gs_basis(&f);
            let words = enumerate_standard_words(&rules, None)?;
            match c.format {
                Format::Text => lines(out, words.iter().map(Word::to_string)),
                Format::Json => json_line(out, &words),
            }
        }
        EnumerateWhat::Fc => {
            let (d, n) = group_params(c)?;
            let ws = fc_words(d, n)?;
            match c.format {
                Format::Text => lines(out, ws.iter().map(|w| w.to_string())),
                Format::Json => json_line(out, &ws),
            }
        }
    }
}

fn tag_names(tagged: &TaggedRules) -> BTreeMap<Word, RuleFamily> {
    tagged.iter().map(|(t, r)| (r.lhs().clone(), *t)).collect()
}

fn cmd_verify(c: &Common, what: RulesWhat, max_deg: Option<usize>, out: &mut dyn Write) -> Outcome {
    let f = algebra(c)?;
    let listed = gs_basis_tagged(&f);
    let (rules, tags) = match what {
        RulesWhat::Listed => {
            let rs = RuleSet::new(f.alphabet(), listed.iter().map(|(_, r)| r.clone()).collect())?;
            (rs, tag_names(&listed))
        }
        RulesWhat::Defining => {
            let def = defining_relations_tagged(&f);
            let rs = RuleSet::new(f.alphabet(), def.iter().map(|(_, r)| r.clone()).collect())?;
            (rs, tag_names(&def))
        }
        RulesWhat::Completed => (completed_basis(&f, max_deg.unwrap_or(12))?, tag_names(&listed)),
    };
    let name = |i: usize| -> String {
        tags.get(rules.rule(i).lhs()).map_or_else(|| "derived".to_string(), |t| t.to_string())
    };
    let opts = CompositionOptions { max_degree: max_deg, ..Default::default() };
    let report = is_closed_with(&rules, &opts);
    if c.format == Format::Text {
        let mut pairs: BTreeMap<(String, String), (usize, usize)> = BTreeMap::new();
        let mut nonzero = Vec::new();
        for comp in crate::rewrite::compositions_with(&rules, &opts) {
            let e = pairs.entry((name(comp.left_rule), name(comp.right_rule))).or_default();
            e.0 += 1;
            if !comp.residue.is_zero() {
                e.1 += 1;
                nonzero.push(comp);
            }
        }
        for ((l, r), (n, z)) in pairs {
            writeln!(out, "{l} x {r}: {n} compositions, {z} nonzero")?;
            out.flush()?;
        }
        for comp in &nonzero {
            writeln!(
                out,
                "nonzero {} [{} | {}]: {}",
                comp.overlap_word,
                rules.rule(comp.left_rule),
                rules.rule(comp.right_rule),
                comp.residue
            )?;
        }
        writeln!(
            out,
            "closed: {} (rules {}, compositions {}, failures {})",
            report.closed,
            report.rules.len(),
            report.compositions_checked,
            report.failures.len()
        )?;
    } else {
        json_line(out, &report)?;
    }
    if report.closed {
        Ok(())
    } else {
        Err(Failure::Verification(format!(
            "{f}: {} compositions do not reduce to zero",
            report.failures.len()
        )))
    }
}

fn write_poly(c: &Common, p: &NcPoly, out: &mut dyn Write) -> Outcome {
    match c.format {
        Format::Text => lines(out, [p.to_string()]),
        Format::Json => json_line(out, p),
    }
}

fn cmd_nf(c: &Common, word: &str, out: &mut dyn Write) -> Outcome {
    let f = algebra(c)?;
    let w = parse_word(word, &f)?;
    let rules = crate::presentations::gs_basis(&f);
    write_poly(c, &rules.normal_form(&NcPoly::word(w)), out)
}

fn cmd_mul(c: &Common, a: &str, b: &str, out: &mut dyn Write) -> Outcome {
    let f = algebra(c)?;
    let (u, v) = (parse_word(a, &f)?, parse_word(b, &f)?);
    let alg = TlAlgebra::new(f)?;
    write_poly(c, &alg.product_words(&u, &v)?, out)
}

fn cmd_complete(c: &Common, max_deg: usize, out: &mut dyn Write) -> Outcome {
    let f = algebra(c)?;
    let report = bounded_completion(&crate::presentations::defining_relations(&f), max_deg)?;
    match c.format {
        Format::Json => json_line(out, &report),
        Format::Text => {
            lines(out, report.rules.rules().iter().map(|r| r.to_string()))?;
            lines(out, report.scalings.iter().map(|s| format!("scaling: {s}")))?;
            lines(
                out,
                [format!(
                    "rules: {}, passes: {}, compositions: {}, added: {}, removed: {}",
                    report.rules.len(),
                    report.passes,
                    report.compositions_examined,
                    report.rules_added,
                    report.rules_removed
                )],
            )
        }
    }
}

fn render_path(p: &DyckPathG) -> String {
    let mut parts: Vec<String> = p
        .marked
        .iter()
        .map(|&(i, k)| if k == 1 { format!("({i},0)") } else { format!("({i},0)^{k}") })
        .collect();
    parts.extend(p.corners.iter().map(|&(i, j)| format!("({i},{j})")));
    parts.push(format!("({},{})", p.n, p.n));
    parts.join(" -> ")
}

fn cmd_paths(c: &Common, out: &mut dyn Write) -> Outcome {
    let f = algebra(c)?;
    let (d, n) = group_params(c)?;
    let paths = standard_monomials(&f)
        .iter()
        .filter(|m| matches!(m, StdMonomial::Plus { .. }))
        .map(|m| monomial_to_path(m, d, n))
        .collect::<Result<Vec<_>, _>>()?;
    match c.format {
        Format::Text => lines(out, paths.iter().map(render_path)),
        Format::Json => json_line(out, &paths),
    }
}

fn cmd_packets(c: &Common, out: &mut dyn Write) -> Outcome {
    let (d, n) = group_params(c)?;
    let packets = packet_decomposition(d, n)?;
    match c.format {
        Format::Json => json_line(out, &packets),
        Format::Text => lines(
            out,
            packets.iter().map(|p| {
                let size = p.collections.first().map_or(0, |c| c.members.len());
                format!("s={}: {} collections of {} words", p.s, p.size(), size)
            }),
        ),
    }
}

fn cmd_oracle(c: &Common, out: &mut dyn Write) -> Outcome {
    let (d, n) = group_params(c)?;
    let r = group_oracle_check(d, n)?;
    match c.format {
        Format::Json => json_line(out, &r)?,
        Format::Text => {
            let v = serde_json::to_value(&r)?;
            let obj = v.as_object().expect("report is an object");
            // keep field order of the struct rather than the map's
            for key in [
                "d",
                "n",
                "group_order",
                "expected_order",
                "canonical_words",
                "canonical_distinct_and_reduced",
                "fc_words",
                "fc_distinct",
                "fc_reduced",
                "fc_commutative",
                "fc_elements_in_group",
                "dimension",
                "passed",
            ] {
                writeln!(out, "{key}: {}", obj[key])?;
            }
        }
    }
    if r.passed {
        Ok(())
    } else {
        Err(Failure::Verification(format!("oracle check failed for G({d},1,{n})")))
    }
}

fn common(cmd: &Command) -> &Common {
    match cmd {
        Command::Dim(c) | Command::Paths(c) | Command::Packets(c) | Command::Oracle(c) => c,
        Command::Enumerate { common, .. }
        | Command::VerifyGs { common, .. }
        | Command::Nf { common, .. }
        | Command::Mul { common, .. }
        | Command::Complete { common, .. } => common,
    }
}

fn dispatch(cmd: &Command, out: &mut dyn Write) -> Outcome {
    match cmd {
        Command::Dim(c) => cmd_dim(c, out),
        Command::Enumerate { common, what } => cmd_enumerate(common, *what, out),
        Command::VerifyGs { common, what, max_deg } => cmd_verify(common, *what, *max_deg, out),
        Command::Nf { common, word } => cmd_nf(common, word, out),
        Command::Mul { common, a, b } => cmd_mul(common, a, b, out),
        Command::Complete { common, max_deg } => cmd_complete(common, *max_deg, out),
        Command::Paths(c) => cmd_paths(c, out),
        Command::Packets(c) => cmd_packets(c, out),
        Command::Oracle(c) => cmd_oracle(c, out),
    }
}

/// Runs the command line `args` (including the program name), writing
/// results to `out` (or to `--out`) and diagnostics to standard error.
/// Returns the process exit code.
pub fn run<W: Write>(args: &[String], out: &mut W) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let msg = e.to_string();
            eprintln!("{}", msg.lines().next().unwrap_or("invalid arguments"));
            return 1;
        }
    };
    let result = match &common(&cli.command).out {
        Some(path) => match File::create(path) {
            Ok(mut file) => dispatch(&cli.command, &mut file),
            Err(e) => Err(Failure::Input(format!("cannot create {}: {e}", path.display()))),
        },
        None => dispatch(&cli.command, out),
    };
    let _ = out.flush();
    match result {
        Ok(()) => 0,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            1
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            2
        }
    }
}

/// Convenience wrapper returning the output as a string.
pub fn run_to_string(args: &[&str]) -> (i32, String) {
    let mut argv = vec!["tlgsb".to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    let mut buf = Vec::new();
    let code = run(&argv, &mut buf);
    (code, String::from_utf8(buf).expect("output is UTF-8"))
}
