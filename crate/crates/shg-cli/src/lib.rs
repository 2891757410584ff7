//! `shg` — exact computations on finite semihypergroups.
//!
//! Subcommands: `check`, `construct {coset|double-coset|orbit}`, `ideals`,
//! `kernel`, `means`, `hom`, `arens`, `fixtures`, `report`. Exit codes:
//! `0` success, `1` a mathematically negative answer (not a homomorphism,
//! no invariant mean, axiom failure under `check`), `2` input error,
//! `3` a proved statement failed on validated input — a library bug, never
//! user error.

mod report;

pub use report::{emit, Format, Record};

use clap::{Args, Parser, Subcommand, ValueEnum};
use shg_core::construct::{self, AffineAction, CayleyTable};
use shg_core::element::Subset;
use shg_core::homs::{self, ElementMap};
use shg_core::ideals::{self, DEFAULT_SCAN_BOUND};
use shg_core::io::{
    self, describe_axiom_failure, parse_group, parse_map, parse_name_list, parse_shg_document,
    render_shg, subset_from_names, ShgDocument,
};
use shg_core::means::{self, FunctionVector, MeanWitness, RimVerdict};
use shg_core::measure::Measure;
use shg_core::rational::{rat, Rational};
use shg_core::semihypergroup::Semihypergroup;
use shg_core::Side;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

#[derive(Parser)]
#[command(
    name = "shg",
    version,
    about = "Exact finite semihypergroups: axioms, ideals, means, Arens products"
)]
struct Cli {
    /// Output format for reports
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the semihypergroup axioms of a .shg file
    Check { file: PathBuf },
    /// Build coset, double-coset and orbit-space semihypergroups
    #[command(subcommand)]
    Construct(ConstructKind),
    /// Enumerate minimal ideals, or classify one subset with --subset
    Ideals {
        file: PathBuf,
        /// Whitespace-separated element names
        #[arg(long)]
        subset: Option<String>,
    },
    /// Kernel and the kernel sandwich
    Kernel { file: PathBuf },
    /// Search for a left or right invariant mean
    Means {
        #[arg(long, value_enum)]
        side: CliSide,
        file: PathBuf,
    },
    /// Verify a candidate homomorphism given by a .map file
    Hom {
        #[arg(long)]
        map: PathBuf,
        source: PathBuf,
        target: PathBuf,
    },
    /// Arens products: compute one with --mu/--nu, or self-check on samples
    Arens {
        file: PathBuf,
        /// Measure expression such as "1/2 a + 1/2 b"
        #[arg(long, requires = "nu")]
        mu: Option<String>,
        #[arg(long, requires = "mu")]
        nu: Option<String>,
        #[arg(long, default_value_t = 200)]
        samples: u32,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// List bundled fixtures, or print one as a .shg document
    Fixtures { name: Option<String> },
    /// Full structural and theorem report for one input
    Report {
        file: PathBuf,
        #[arg(long, default_value_t = 200)]
        samples: u32,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum ConstructKind {
    /// Left coset space G/H with the averaged convolution
    Coset(GroupArgs),
    /// Double coset space G//H (a hypergroup)
    DoubleCoset(GroupArgs),
    /// Orbit space of an affine action of a subgroup
    Orbit(OrbitArgs),
}

#[derive(Args)]
struct GroupArgs {
    /// A .group file
    group: PathBuf,
    /// Subgroup as whitespace-separated element names
    #[arg(long)]
    subgroup: Option<String>,
    /// Subgroup listed in a file, one or more names per line
    #[arg(long)]
    subgroup_file: Option<PathBuf>,
    /// Generate the subgroup from these generators
    #[arg(long)]
    generators: Option<String>,
    /// Write the resulting .shg here instead of stdout
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct OrbitArgs {
    #[command(flatten)]
    base: GroupArgs,
    /// Act by conjugation: x^h = h⁻¹ x h
    #[arg(long, conflicts_with = "translation")]
    inner: bool,
    /// Act by translation: x^h = h⁻¹ x (orbits are right cosets)
    #[arg(long)]
    translation: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CliSide {
    Left,
    Right,
}

impl From<CliSide> for Side {
    fn from(s: CliSide) -> Side {
        match s {
            CliSide::Left => Side::Left,
            CliSide::Right => Side::Right,
        }
    }
}

enum Outcome {
    Success,
    Negative,
}

enum Failure {
    Input(String),
    Theorem(String),
}

struct CmdOutput {
    records: Vec<Record>,
    /// Raw document payload (construct/fixtures); printed verbatim in human
    /// mode, carried as a field in json-lines mode.
    raw: Option<String>,
    outcome: Outcome,
}

impl CmdOutput {
    fn ok(records: Vec<Record>) -> Self {
        CmdOutput {
            records,
            raw: None,
            outcome: Outcome::Success,
        }
    }
}

type CmdResult = Result<CmdOutput, Failure>;

/// Entry point used by both `main` and the tests. Arguments include the
/// program name, as in `std::env::args`.
pub fn run_cli<I, S>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders its own help/usage; version and help requests are
            // successes, everything else is an input error
            if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                return 2;
            }
            let _ = write!(stdout, "{e}");
            return 0;
        }
    };
    let scan_bound = match scan_bound_from_env() {
        Ok(b) => b,
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            return 2;
        }
    };
    let result = match &cli.command {
        Command::Check { file } => cmd_check(file),
        Command::Construct(kind) => cmd_construct(kind),
        Command::Ideals { file, subset } => cmd_ideals(file, subset.as_deref(), scan_bound),
        Command::Kernel { file } => cmd_kernel(file),
        Command::Means { side, file } => cmd_means(file, (*side).into()),
        Command::Hom {
            map,
            source,
            target,
        } => cmd_hom(map, source, target),
        Command::Arens {
            file,
            mu,
            nu,
            samples,
            seed,
        } => cmd_arens(file, mu.as_deref(), nu.as_deref(), *samples, *seed),
        Command::Fixtures { name } => cmd_fixtures(name.as_deref()),
        Command::Report {
            file,
            samples,
            seed,
        } => cmd_report(file, *samples, *seed, scan_bound),
    };
    match result {
        Ok(out) => {
            match (cli.format, &out.raw) {
                (Format::Human, Some(raw)) => {
                    let _ = write!(stdout, "{raw}");
                    emit(&out.records, cli.format, stderr);
                }
                _ => emit(&out.records, cli.format, stdout),
            }
            match out.outcome {
                Outcome::Success => 0,
                Outcome::Negative => 1,
            }
        }
        Err(Failure::Input(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
        Err(Failure::Theorem(msg)) => {
            let _ = writeln!(stderr, "theorem violation (library bug): {msg}");
            3
        }
    }
}

/// `SHG_SCAN_BOUND` overrides the power-set scan bound (default 12).
fn scan_bound_from_env() -> Result<usize, String> {
    match std::env::var("SHG_SCAN_BOUND") {
        Ok(v) => v
            .parse::<usize>()
            .map_err(|_| format!("SHG_SCAN_BOUND must be a nonnegative integer, got {v:?}")),
        Err(_) => Ok(DEFAULT_SCAN_BOUND),
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))
}

fn input_err<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Input(e.to_string())
}

/// Loads a `.shg` file. Entries that are not probability vectors make the
/// input unusable (input error); a failure of associativity alone is
/// reported as a warning record and the structure is still returned, since
/// all support-level analysis remains meaningful.
fn load_shg(path: &Path) -> Result<(Semihypergroup, ShgDocument, Vec<Record>), Failure> {
    let text = read_file(path)?;
    let doc = parse_shg_document(&text).map_err(input_err)?;
    let report = doc.table.check_axioms();
    let mut records = Vec::new();
    if report.probability.is_some() {
        return Err(Failure::Input(format!(
            "{}: {}",
            path.display(),
            describe_axiom_failure(&doc, &report)
        )));
    }
    if report.associativity.is_some() {
        records.push(
            Record::new(
                "warning",
                format!(
                    "warning: not associative — {}; support-level results below are still exact",
                    describe_axiom_failure(&doc, &report)
                ),
            )
            .with("detail", describe_axiom_failure(&doc, &report)),
        );
    }
    Ok((Semihypergroup::new_unchecked(doc.table.clone()), doc, records))
}

fn names_of(s: &Semihypergroup, subset: &Subset) -> Vec<String> {
    subset.iter().map(|i| s.carrier().name(i).to_string()).collect()
}

fn render_subset(s: &Semihypergroup, subset: &Subset) -> String {
    s.carrier().render_subset(subset)
}

fn cmd_check(file: &Path) -> CmdResult {
    let text = read_file(file)?;
    let doc = parse_shg_document(&text).map_err(input_err)?;
    let report = doc.table.check_axioms();
    let passed = report.passed();
    let detail = if passed {
        String::new()
    } else {
        describe_axiom_failure(&doc, &report)
    };
    let summary = if passed {
        "axioms: PASS".to_string()
    } else {
        format!("axioms: FAIL — {detail}")
    };
    let a1 = report.associativity.is_none();
    let a3 = report.probability.is_none();
    let vacuous = shg_core::semihypergroup::VACUOUS_ON_FINITE_DISCRETE;
    let records = vec![Record::new("axioms", summary)
        .with("file", file.display().to_string())
        .with("passed", passed)
        .with("a1_associativity", if a1 { "PASS" } else { "FAIL" })
        .with("a2_positive_continuity", vacuous)
        .with("a3_probability_entries", if a3 { "PASS" } else { "FAIL" })
        .with("a4_support_continuity", vacuous)
        .with("detail", detail)];
    Ok(CmdOutput {
        records,
        raw: None,
        outcome: if passed {
            Outcome::Success
        } else {
            Outcome::Negative
        },
    })
}

fn resolve_subgroup(g: &CayleyTable, args: &GroupArgs) -> Result<Subset, Failure> {
    let sources = [
        args.subgroup.is_some(),
        args.subgroup_file.is_some(),
        args.generators.is_some(),
    ];
    if sources.iter().filter(|&&b| b).count() != 1 {
        return Err(Failure::Input(
            "give the subgroup exactly one way: --subgroup, --subgroup-file or --generators"
                .into(),
        ));
    }
    let subset_from = |names: Vec<String>| -> Result<Subset, Failure> {
        subset_from_names(g.elements(), names.iter().map(String::as_str)).map_err(input_err)
    };
    if let Some(inline) = &args.subgroup {
        let h = subset_from(parse_name_list(inline))?;
        g.verify_subgroup(&h).map_err(input_err)?;
        Ok(h)
    } else if let Some(file) = &args.subgroup_file {
        let h = subset_from(parse_name_list(&read_file(file)?))?;
        g.verify_subgroup(&h).map_err(input_err)?;
        Ok(h)
    } else {
        let gens = subset_from(parse_name_list(args.generators.as_ref().expect("checked")))?;
        Ok(g.subgroup_closure(&gens))
    }
}

fn construct_error(e: construct::ConstructError) -> Failure {
    use construct::ConstructError::*;
    match e {
        RepresentativeDependence { .. } | Axioms(_) => Failure::Theorem(e.to_string()),
        other => Failure::Input(other.to_string()),
    }
}

fn cmd_construct(kind: &ConstructKind) -> CmdResult {
    let (base, built) = match kind {
        ConstructKind::Coset(a) => {
            let g = parse_group(&read_file(&a.group)?).map_err(input_err)?;
            let h = resolve_subgroup(&g, a)?;
            (a, construct::coset_space(&g, &h).map_err(construct_error)?)
        }
        ConstructKind::DoubleCoset(a) => {
            let g = parse_group(&read_file(&a.group)?).map_err(input_err)?;
            let h = resolve_subgroup(&g, a)?;
            (
                a,
                construct::double_coset_space(&g, &h).map_err(construct_error)?,
            )
        }
        ConstructKind::Orbit(a) => {
            let g = parse_group(&read_file(&a.base.group)?).map_err(input_err)?;
            let h = resolve_subgroup(&g, &a.base)?;
            let action = if a.inner {
                AffineAction::inner_conjugation(&g, &h).map_err(input_err)?
            } else if a.translation {
                AffineAction::translation(&g, &h).map_err(input_err)?
            } else {
                return Err(Failure::Input(
                    "choose the action: --inner or --translation".into(),
                ));
            };
            (
                &a.base,
                construct::orbit_space(&action).map_err(construct_error)?,
            )
        }
    };
    let document = render_shg(built.table());
    let record = Record::new(
        "construct",
        format!(
            "constructed {} elements: {}",
            built.size(),
            built.carrier().names().join(" ")
        ),
    )
    .with("elements", built.carrier().names().to_vec())
    .with("size", built.size())
    .with("document", document.clone());
    if let Some(out) = &base.output {
        std::fs::write(out, &document)
            .map_err(|e| Failure::Input(format!("cannot write {}: {e}", out.display())))?;
        let note = Record::new("written", format!("wrote {}", out.display()))
            .with("path", out.display().to_string());
        return Ok(CmdOutput::ok(vec![record, note]));
    }
    Ok(CmdOutput {
        records: vec![record],
        raw: Some(document),
        outcome: Outcome::Success,
    })
}

fn side_check_record(s: &Semihypergroup, check: &ideals::SideIdealCheck) -> Record {
    let side = check.side.to_string();
    let mut r = Record::new(
        "ideal-side",
        format!(
            "{side} ideal: {}",
            if check.holds { "yes" } else { "no" }
        ),
    )
    .with("side", side)
    .with("holds", check.holds);
    if let Some(w) = check.witnesses.first() {
        let text = format!(
            "supp({} * {}) reaches {}",
            s.carrier().name(w.left_factor),
            s.carrier().name(w.right_factor),
            s.carrier().name(w.escaped)
        );
        r.human = format!("{} — witness: {text}", r.human);
        r = r
            .with("witness", text)
            .with(
                "witness_pair",
                vec![
                    s.carrier().name(w.left_factor).to_string(),
                    s.carrier().name(w.right_factor).to_string(),
                ],
            )
            .with("witness_count", check.witnesses.len());
    }
    r
}

fn cmd_ideals(file: &Path, subset: Option<&str>, scan_bound: usize) -> CmdResult {
    let (s, _, mut records) = load_shg(file)?;
    match subset {
        None => {
            let left = ideals::minimal_side_ideals_with_bound(&s, Side::Left, scan_bound)
                .map_err(|e| Failure::Theorem(e.to_string()))?;
            let right = ideals::minimal_side_ideals_with_bound(&s, Side::Right, scan_bound)
                .map_err(|e| Failure::Theorem(e.to_string()))?;
            let fmt = |list: &[Subset]| {
                list.iter()
                    .map(|i| render_subset(&s, i))
                    .collect::<Vec<_>>()
                    .join(", ")
            };
            records.push(
                Record::new(
                    "minimal-left-ideals",
                    format!("minimal left ideals: {}", fmt(&left)),
                )
                .with("count", left.len())
                .with(
                    "ideals",
                    left.iter().map(|i| names_of(&s, i)).collect::<Vec<_>>(),
                ),
            );
            records.push(
                Record::new(
                    "minimal-right-ideals",
                    format!("minimal right ideals: {}", fmt(&right)),
                )
                .with("count", right.len())
                .with(
                    "ideals",
                    right.iter().map(|i| names_of(&s, i)).collect::<Vec<_>>(),
                ),
            );
            Ok(CmdOutput::ok(records))
        }
        Some(names) => {
            let subset = subset_from_names(
                s.carrier(),
                parse_name_list(names).iter().map(String::as_str),
            )
            .map_err(input_err)?;
            let rep = ideals::ideal_report(&s, &subset, scan_bound).map_err(input_err)?;
            records.push(side_check_record(&s, &rep.left));
            records.push(side_check_record(&s, &rep.right));
            records.push(
                Record::new(
                    "ideal-two-sided",
                    format!("two-sided ideal: {}", if rep.is_two_sided { "yes" } else { "no" }),
                )
                .with("holds", rep.is_two_sided),
            );
            if let Some(m) = &rep.minimality {
                records.push(
                    Record::new(
                        "ideal-minimality",
                        format!(
                            "minimal left ideal: {} (no-proper-subideal={}, K*{{a}}=I={}, I*{{a}}=I={})",
                            if m.minimal { "yes" } else { "no" },
                            m.no_proper_subideal,
                            m.full_translates_back,
                            m.internal_translates_back
                        ),
                    )
                    .with("minimal", m.minimal)
                    .with("no_proper_subideal", m.no_proper_subideal)
                    .with("full_translates_back", m.full_translates_back)
                    .with("internal_translates_back", m.internal_translates_back),
                );
            }
            for (a, p) in &rep.principal_left {
                records.push(
                    Record::new(
                        "principal-left-ideal",
                        format!(
                            "K*{{{}}} = {}",
                            s.carrier().name(*a),
                            render_subset(&s, p)
                        ),
                    )
                    .with("generator", s.carrier().name(*a).to_string())
                    .with("ideal", names_of(&s, p)),
                );
            }
            Ok(CmdOutput::ok(records))
        }
    }
}

fn cmd_kernel(file: &Path) -> CmdResult {
    let (s, _, mut records) = load_shg(file)?;
    let sandwich = ideals::kernel_sandwich_check(&s).map_err(|e| Failure::Theorem(e.to_string()))?;
    records.push(
        Record::new(
            "kernel",
            format!("kernel: {}", render_subset(&s, &sandwich.kernel)),
        )
        .with("kernel", names_of(&s, &sandwich.kernel)),
    );
    records.push(
        Record::new(
            "kernel-sandwich",
            format!(
                "sandwich holds: ∪ minimal left = {} ⊆ kernel ⊆ each of [{}]",
                render_subset(&s, &sandwich.left_union),
                sandwich
                    .left_covers
                    .iter()
                    .map(|c| render_subset(&s, c))
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
        )
        .with("left_union", names_of(&s, &sandwich.left_union))
        .with("right_union", names_of(&s, &sandwich.right_union))
        .with(
            "left_covers",
            sandwich
                .left_covers
                .iter()
                .map(|c| names_of(&s, c))
                .collect::<Vec<_>>(),
        )
        .with(
            "right_covers",
            sandwich
                .right_covers
                .iter()
                .map(|c| names_of(&s, c))
                .collect::<Vec<_>>(),
        )
        .with(
            "minimal_left",
            sandwich
                .minimal_left
                .iter()
                .map(|c| names_of(&s, c))
                .collect::<Vec<_>>(),
        ),
    );
    Ok(CmdOutput::ok(records))
}

fn witness_record(s: &Semihypergroup, w: &MeanWitness) -> Record {
    let side = w.side.to_string();
    match &w.weights {
        Some(m) => {
            let flat = m
                .weights()
                .iter()
                .map(|r| r.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            let reverified = means::verify_invariant_mean(s, w.side, m);
            Record::new(
                "invariant-mean",
                format!("{side} invariant mean: {flat}"),
            )
            .with("side", side)
            .with("status", "found")
            .with("witness", flat)
            .with("witness_terms", m.render())
            .with("solution_dim", w.solution_dim.unwrap_or(0))
            .with("reverified", reverified)
        }
        None => Record::new("invariant-mean", format!("{side} invariant mean: none"))
            .with("side", side)
            .with("status", "none"),
    }
}

fn cmd_means(file: &Path, side: Side) -> CmdResult {
    let (s, _, mut records) = load_shg(file)?;
    let w = means::find_invariant_mean(&s, side);
    let found = w.found();
    records.push(witness_record(&s, &w));
    Ok(CmdOutput {
        records,
        raw: None,
        outcome: if found {
            Outcome::Success
        } else {
            Outcome::Negative
        },
    })
}

fn cmd_hom(map: &Path, source: &Path, target: &Path) -> CmdResult {
    let doc = parse_map(&read_file(map)?).map_err(input_err)?;
    let (s, _, mut records) = load_shg(source)?;
    let (t, _, more) = load_shg(target)?;
    records.extend(more);
    let phi = ElementMap::from_pairs(
        Arc::clone(s.carrier()),
        Arc::clone(t.carrier()),
        doc.pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())),
    )
    .map_err(input_err)?;
    let check = homs::is_homomorphism(&phi, &s, &t).map_err(input_err)?;
    if let Some(w) = check.witness {
        records.push(
            Record::new(
                "homomorphism",
                format!(
                    "not a homomorphism: at ({}, {}) the pushforward is {} but the target entry is {}",
                    s.carrier().name(w.x),
                    s.carrier().name(w.y),
                    w.pushed.render(),
                    w.expected.render()
                ),
            )
            .with("holds", false)
            .with(
                "witness_pair",
                vec![
                    s.carrier().name(w.x).to_string(),
                    s.carrier().name(w.y).to_string(),
                ],
            )
            .with("pushed", w.pushed.render())
            .with("expected", w.expected.render()),
        );
        return Ok(CmdOutput {
            records,
            raw: None,
            outcome: Outcome::Negative,
        });
    }
    records.push(
        Record::new("homomorphism", "homomorphism: yes").with("holds", true),
    );
    let lemma = homs::support_lemma_check(&phi, &s, &t).map_err(input_err)?;
    records.push(
        Record::new(
            "support-lemma",
            format!("support lemma: {}", if lemma { "PASS" } else { "FAIL" }),
        )
        .with("passed", lemma),
    );
    if !lemma {
        return Err(Failure::Theorem(
            "support lemma failed on a verified homomorphism".into(),
        ));
    }
    match homs::image_semihypergroup(&phi, &s, &t) {
        Ok(img) => records.push(
            Record::new(
                "image",
                format!(
                    "image: {} element(s), axioms PASS",
                    img.shg.size()
                ),
            )
            .with("size", img.shg.size())
            .with("elements", img.shg.carrier().names().to_vec())
            .with("axioms", "PASS"),
        ),
        Err(homs::HomsError::ImageFailsAxioms(f)) => records.push(
            Record::new(
                "image",
                "image: inherits the target's associativity failure".to_string(),
            )
            .with("axioms", "FAIL")
            .with("detail", f.to_string()),
        ),
        Err(e) => return Err(Failure::Theorem(e.to_string())),
    }
    Ok(CmdOutput::ok(records))
}

/// Deterministic xorshift generator for the sampling subcommands.
struct XorShift(u64);

impl XorShift {
    fn new(seed: u64) -> Self {
        XorShift(seed.max(1))
    }

    fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    fn rational(&mut self) -> Rational {
        let p = (self.next_u64() % 19) as i64 - 9;
        let q = (self.next_u64() % 9) as i64 + 1;
        rat(p, q)
    }

    fn measure(&mut self, s: &Semihypergroup) -> Measure {
        let weights = (0..s.size()).map(|_| self.rational()).collect();
        Measure::new(Arc::clone(s.carrier()), weights).expect("length")
    }

    fn function(&mut self, s: &Semihypergroup) -> FunctionVector {
        let values = (0..s.size()).map(|_| self.rational()).collect();
        FunctionVector::new(Arc::clone(s.carrier()), values).expect("length")
    }
}

/// Runs the dual-algebra identities on sampled data. Any failure is a
/// theorem violation.
fn dual_algebra_samples(
    s: &Semihypergroup,
    samples: u32,
    seed: u64,
) -> Result<Record, Failure> {
    // point masses reproduce the table exactly
    for x in 0..s.size() {
        for y in 0..s.size() {
            let px = Measure::point_mass(Arc::clone(s.carrier()), x);
            let py = Measure::point_mass(Arc::clone(s.carrier()), y);
            for side in [Side::Left, Side::Right] {
                let prod = means::arens_product(s, &px, &py, side)
                    .map_err(|e| Failure::Theorem(e.to_string()))?;
                if &prod != s.convolve_points(x, y) {
                    return Err(Failure::Theorem(format!(
                        "point-mass Arens product at ({x}, {y}) does not reproduce the table"
                    )));
                }
            }
        }
    }
    let mut rng = XorShift::new(seed);
    for i in 0..samples {
        let mu = rng.measure(s);
        let nu = rng.measure(s);
        let f = rng.function(s);
        if !means::duality_check(s, &mu, &nu, &f).map_err(|e| Failure::Theorem(e.to_string()))? {
            return Err(Failure::Theorem(format!(
                "duality identity failed on sample {i}"
            )));
        }
        let left = means::arens_product(s, &mu, &nu, Side::Left)
            .map_err(|e| Failure::Theorem(e.to_string()))?;
        let right = means::arens_product(s, &mu, &nu, Side::Right)
            .map_err(|e| Failure::Theorem(e.to_string()))?;
        let conv = s
            .convolve_measures(&mu, &nu)
            .map_err(|e| Failure::Theorem(e.to_string()))?;
        if left != conv || right != conv {
            return Err(Failure::Theorem(format!(
                "Arens products deviate from convolution on sample {i}"
            )));
        }
    }
    Ok(Record::new(
        "dual-algebra",
        format!(
            "dual algebra: PASS (point masses exact; {samples} random samples: duality and left/right Arens = convolution)"
        ),
    )
    .with("passed", true)
    .with("samples", samples)
    .with("seed", seed))
}

fn cmd_arens(
    file: &Path,
    mu: Option<&str>,
    nu: Option<&str>,
    samples: u32,
    seed: u64,
) -> CmdResult {
    let (s, _, mut records) = load_shg(file)?;
    match (mu, nu) {
        (Some(mu), Some(nu)) => {
            let mu = io::parse_measure_expr(s.carrier(), mu, 0).map_err(input_err)?;
            let nu = io::parse_measure_expr(s.carrier(), nu, 0).map_err(input_err)?;
            let left = means::arens_product(&s, &mu, &nu, Side::Left)
                .map_err(|e| Failure::Input(e.to_string()))?;
            let right = means::arens_product(&s, &mu, &nu, Side::Right)
                .map_err(|e| Failure::Input(e.to_string()))?;
            let conv = s
                .convolve_measures(&mu, &nu)
                .map_err(|e| Failure::Input(e.to_string()))?;
            if left != conv || right != conv {
                return Err(Failure::Theorem(
                    "Arens products deviate from the convolution".into(),
                ));
            }
            records.push(
                Record::new("arens-product", format!("μ ⋆ ν = {}", left.render()))
                    .with("product", left.render())
                    .with("left_equals_right", true)
                    .with("equals_convolution", true),
            );
            Ok(CmdOutput::ok(records))
        }
        _ => {
            records.push(dual_algebra_samples(&s, samples, seed)?);
            Ok(CmdOutput::ok(records))
        }
    }
}

fn cmd_fixtures(name: Option<&str>) -> CmdResult {
    match name {
        None => {
            let records = construct::FIXTURE_NAMES
                .iter()
                .map(|n| {
                    let s = construct::builtin_fixture(n).expect("bundled");
                    Record::new(
                        "fixture",
                        format!("{n}: {} elements ({})", s.size(), s.carrier().names().join(" ")),
                    )
                    .with("name", *n)
                    .with("size", s.size())
                    .with("elements", s.carrier().names().to_vec())
                })
                .collect();
            Ok(CmdOutput::ok(records))
        }
        Some(n) => {
            let s = construct::builtin_fixture(n).map_err(input_err)?;
            let document = render_shg(s.table());
            let record = Record::new("fixture", format!("{n}: {} elements", s.size()))
                .with("name", n)
                .with("document", document.clone());
            Ok(CmdOutput {
                records: vec![record],
                raw: Some(document),
                outcome: Outcome::Success,
            })
        }
    }
}

fn cmd_report(file: &Path, samples: u32, seed: u64, scan_bound: usize) -> CmdResult {
    let (s, doc, mut records) = load_shg(file)?;
    let axioms_pass = doc.table.check_axioms().passed();
    records.push(
        Record::new(
            "axioms",
            format!("axioms: {}", if axioms_pass { "PASS" } else { "FAIL (see warning)" }),
        )
        .with("passed", axioms_pass),
    );
    // structure flags
    let describe = |o: Option<usize>| o.map(|i| s.carrier().name(i).to_string());
    let commutative = s.is_commutative();
    records.push(
        Record::new(
            "structure",
            format!(
                "commutative: {commutative}; left identity: {}; right identity: {}; two-sided identity: {}; involution: {}; hypergroup: {}",
                describe(s.left_identity()).unwrap_or_else(|| "none".into()),
                describe(s.right_identity()).unwrap_or_else(|| "none".into()),
                describe(s.identity()).unwrap_or_else(|| "none".into()),
                s.involution()
                    .map(|p| p
                        .iter()
                        .map(|&i| s.carrier().name(i).to_string())
                        .collect::<Vec<_>>()
                        .join(" "))
                    .unwrap_or_else(|| "none".into()),
                s.is_hypergroup()
            ),
        )
        .with("commutative", commutative)
        .with("left_identity", describe(s.left_identity()))
        .with("right_identity", describe(s.right_identity()))
        .with("identity", describe(s.identity()))
        .with(
            "involution",
            s.involution().map(|p| {
                p.iter()
                    .map(|&i| s.carrier().name(i).to_string())
                    .collect::<Vec<_>>()
            }),
        )
        .with("hypergroup", s.is_hypergroup()),
    );
    // finite orbits: every indicator has a right orbit of size ≤ n, which is
    // the finite-carrier form of "every function is almost periodic"
    let mut max_orbit = 0usize;
    for x in 0..s.size() {
        let f = FunctionVector::indicator(Arc::clone(s.carrier()), &Subset::singleton(s.size(), x));
        let orbit = means::right_orbit(&s, &f).map_err(|e| Failure::Theorem(e.to_string()))?;
        max_orbit = max_orbit.max(orbit.len());
    }
    records.push(
        Record::new(
            "orbits",
            format!(
                "right orbits of indicator functions: at most {max_orbit} of a possible {}",
                s.size()
            ),
        )
        .with("max_orbit", max_orbit)
        .with("carrier", s.size()),
    );
    // ideals and kernel
    let sandwich = ideals::kernel_sandwich_check(&s).map_err(|e| Failure::Theorem(e.to_string()))?;
    let _ = scan_bound;
    records.push(
        Record::new(
            "ideals",
            format!(
                "minimal left ideals: {}; minimal right ideals: {}; kernel: {}; sandwich: PASS",
                sandwich
                    .minimal_left
                    .iter()
                    .map(|i| render_subset(&s, i))
                    .collect::<Vec<_>>()
                    .join(", "),
                sandwich
                    .minimal_right
                    .iter()
                    .map(|i| render_subset(&s, i))
                    .collect::<Vec<_>>()
                    .join(", "),
                render_subset(&s, &sandwich.kernel)
            ),
        )
        .with(
            "minimal_left",
            sandwich.minimal_left.iter().map(|i| names_of(&s, i)).collect::<Vec<_>>(),
        )
        .with(
            "minimal_right",
            sandwich.minimal_right.iter().map(|i| names_of(&s, i)).collect::<Vec<_>>(),
        )
        .with("kernel", names_of(&s, &sandwich.kernel))
        .with("sandwich", "PASS"),
    );
    // means
    let lim = means::find_invariant_mean(&s, Side::Left);
    let rim = means::find_invariant_mean(&s, Side::Right);
    records.push(witness_record(&s, &lim));
    records.push(witness_record(&s, &rim));
    if commutative {
        means::lim_exists_commutative_check(&s)
            .map_err(|e| Failure::Theorem(e.to_string()))?;
        records.push(
            Record::new(
                "lim-commutative",
                "commutative amenability: PASS (left invariant mean exists)",
            )
            .with("passed", true),
        );
    }
    let rim_verdict = means::rim_implies_unique_minimal_left_check(&s)
        .map_err(|e| Failure::Theorem(e.to_string()))?;
    records.push(match &rim_verdict {
        RimVerdict::Confirmed {
            minimal_left_ideal, ..
        } => Record::new(
            "rim-unique-minimal",
            format!(
                "right amenability ⇒ unique minimal left ideal: PASS ({})",
                render_subset(&s, minimal_left_ideal)
            ),
        )
        .with("applicable", true)
        .with("passed", true)
        .with("minimal_left_ideal", names_of(&s, minimal_left_ideal)),
        RimVerdict::NotApplicableNoRim => Record::new(
            "rim-unique-minimal",
            "right amenability ⇒ unique minimal left ideal: not applicable (no right invariant mean)",
        )
        .with("applicable", false),
    });
    // dual algebra
    records.push(dual_algebra_samples(&s, samples, seed)?);
    Ok(CmdOutput::ok(records))
}
