//! One function per subcommand, each turning a typed request into a document.

use fracton_thermo::{
    central_charge_index_with_tolerance, entropy_per_state, fractal_index_with_tolerance,
    free_energy, ln_theta, partition_theta, ClassParam, Fugacity, ThermoPoint,
};
use spectrum_core::{
    class_members, dual_filling, farey_sequence, farey_theorem_check, is_unimodular, spectrum_h,
    Ratio, TransitionChain,
};

use crate::cli::TableKind;
use crate::error::CliError;
use crate::fixtures::{self, FixtureReport, FixtureSet, Verdict};
use crate::output::{Document, Table, Value};
use crate::request::{ChainSource, Command, CommandRequest, Grid};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Success,
    ValidationFailed,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Success => 0,
            Status::ValidationFailed => 1,
        }
    }

    fn from_ok(ok: bool) -> Self {
        if ok {
            Status::Success
        } else {
            Status::ValidationFailed
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub document: Document,
    pub status: Status,
}

impl From<Document> for Outcome {
    fn from(document: Document) -> Self {
        Self {
            document,
            status: Status::Success,
        }
    }
}

pub fn run(request: &CommandRequest) -> Result<Outcome, CliError> {
    match &request.command {
        Command::Classify { fillings, count } => classify(fillings, *count).map(Into::into),
        Command::ClassMembers { h, count } => members(h, *count).map(Into::into),
        Command::Dual { fillings } => dual(fillings).map(Into::into),
        Command::Farey { order } => farey(*order).map(Into::into),
        Command::ValidateChain(source) => validate_chain(source),
        Command::TheoremCheck { order } => theorem(*order),
        Command::Occupation { h, fugacities } => occupation(*h, fugacities).map(Into::into),
        Command::Entropy { h, occupations } => entropy(*h, occupations).map(Into::into),
        Command::FreeEnergy { h, fugacities, kt } => energy(*h, fugacities, *kt).map(Into::into),
        Command::FractalIndex { classes, tol } => index(classes, *tol).map(Into::into),
        Command::CentralCharge { nus, tol } => central(nus, *tol).map(Into::into),
        Command::Table { kind, h, grid, tol } => table(*kind, *h, grid, *tol).map(Into::into),
        Command::ValidateFixtures { files, verbose } => validate_fixtures(files, *verbose),
    }
}

fn joined(items: &[Ratio]) -> String {
    items
        .iter()
        .map(Ratio::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn classify(fillings: &[Ratio], count: usize) -> Result<Document, CliError> {
    let mut t = Table::new("classification", &["nu", "h", "dual_nu", "dual_h", "class"]);
    for nu in fillings {
        let h = spectrum_h(nu)?;
        let row = if nu.is_integer() {
            let border = if h == 1 {
                "fermion border"
            } else {
                "boson border"
            };
            vec![
                nu.into(),
                (&h).into(),
                Value::Null,
                Value::Null,
                border.into(),
            ]
        } else {
            let pair = dual_filling(nu)?;
            let class = class_members(&h, count)?;
            vec![
                nu.into(),
                (&h).into(),
                pair.nu_dual.into(),
                pair.h_dual.into(),
                joined(&class.members).into(),
            ]
        };
        t.push(row);
    }
    let mut doc = Document::new("classify");
    doc.table(t);
    Ok(doc)
}

fn members(h: &Ratio, count: usize) -> Result<Document, CliError> {
    let class = class_members(h, count)?;
    let mut doc = Document::new(format!("universal class h = {h}"));
    doc.field("h", h).field("dual_h", 3 - h);
    let mut t = Table::new("members", &["index", "nu", "spin"]);
    for (i, (nu, s)) in class.members.iter().zip(&class.spins).enumerate() {
        t.push(vec![(i + 1).into(), nu.into(), s.into()]);
    }
    doc.table(t);
    Ok(doc)
}

fn dual(fillings: &[Ratio]) -> Result<Document, CliError> {
    let mut t = Table::new("dual pairs", &["nu", "nu_dual", "h", "h_dual", "h_sum"]);
    for nu in fillings {
        let p = dual_filling(nu)?;
        let sum = &p.h + &p.h_dual;
        t.push(vec![
            p.nu.into(),
            p.nu_dual.into(),
            p.h.into(),
            p.h_dual.into(),
            sum.into(),
        ]);
    }
    let mut doc = Document::new("dual");
    doc.table(t);
    Ok(doc)
}

fn farey(order: u64) -> Result<Document, CliError> {
    let seq = farey_sequence(order)?;
    let adjacent = seq.windows(2).all(|w| is_unimodular(&w[0], &w[1]));
    let mut doc = Document::new(format!("Farey sequence F_{order}"));
    doc.field("order", order)
        .field("length", seq.len())
        .field("adjacent_unimodular", adjacent);
    let mut t = Table::new("fractions", &["index", "fraction"]);
    for (i, r) in seq.iter().enumerate() {
        t.push(vec![i.into(), r.into()]);
    }
    doc.table(t);
    Ok(doc)
}

fn chain_table(name: &str, chain: &TransitionChain, report: Option<&FixtureReport>) -> Table {
    let mut t = Table::new(name, &["pair", "from", "to", "det", "verdict", "note"]);
    for (i, ok) in chain.verdicts.iter().enumerate() {
        let (verdict, note) = match report {
            Some(r) => (r.checks[i].verdict.label(), r.checks[i].note.clone()),
            None if *ok => ("pass", String::new()),
            None => ("FAIL", String::new()),
        };
        t.push(vec![
            i.into(),
            (&chain.entries[i]).into(),
            (&chain.entries[i + 1]).into(),
            chain.determinant(i).to_string().into(),
            verdict.into(),
            note.into(),
        ]);
    }
    if let Some(r) = report {
        for stale in r.checks.iter().skip(chain.verdicts.len()) {
            t.push(vec![
                Value::Null,
                Value::Null,
                Value::Null,
                Value::Null,
                stale.verdict.label().into(),
                stale.note.clone().into(),
            ]);
        }
    }
    t
}

fn validate_chain(source: &ChainSource) -> Result<Outcome, CliError> {
    match source {
        ChainSource::Inline(entries) => {
            let chain = spectrum_core::validate_chain(entries)?;
            let failed = chain.failures().len();
            let mut doc = Document::new("transition chain");
            doc.field("entries", chain.entries.len())
                .field("pairs", chain.verdicts.len())
                .field("passed", chain.verdicts.len() - failed)
                .field("failed", failed);
            doc.table(chain_table("verdicts", &chain, None));
            Ok(Outcome {
                document: doc,
                status: Status::from_ok(failed == 0),
            })
        }
        ChainSource::Fixture(path) => {
            let set = fixtures::load_fixture_set(path)?;
            if set.chains.is_empty() {
                return Err(CliError::Fixture {
                    source_name: path.display().to_string(),
                    message: "no chains in fixture set".into(),
                });
            }
            let mut doc = Document::new(format!("transition chains: {}", set.name));
            let mut ok = true;
            let (mut pairs, mut passed, mut annotated, mut unexplained) = (0, 0, 0, 0);
            let mut tables = Vec::new();
            for fixture in &set.chains {
                let (chain, report) = fixtures::check_chain(&set.name, fixture)?;
                pairs += chain.verdicts.len();
                passed += report.count(Verdict::Pass);
                annotated += report.count(Verdict::Annotated);
                unexplained += report.unexplained();
                ok &= !report.breaks_expectation();
                tables.push(chain_table(&fixture.name, &chain, Some(&report)));
            }
            doc.field("chains", set.chains.len())
                .field("pairs", pairs)
                .field("passed", passed)
                .field("annotated", annotated)
                .field("unexplained", unexplained);
            doc.tables = tables;
            Ok(Outcome {
                document: doc,
                status: Status::from_ok(ok),
            })
        }
    }
}

fn theorem(order: u64) -> Result<Outcome, CliError> {
    let report = farey_theorem_check(order)?;
    let mut doc = Document::new(format!("Farey class theorem, order {order}"));
    doc.field("order", order)
        .field("fractions", report.entries.len())
        .field("all_pass", report.all_pass());
    let mut t = Table::new("entries", &["nu", "h", "second", "pass"]);
    for e in &report.entries {
        t.push(vec![
            (&e.nu).into(),
            (&e.h).into(),
            (&e.second).into(),
            e.pass.into(),
        ]);
    }
    doc.table(t);
    Ok(Outcome {
        document: doc,
        status: Status::from_ok(report.all_pass()),
    })
}

const OCCUPATION_COLUMNS: [&str; 5] = ["xi", "Y", "n", "theta", "S/K"];

fn occupation_row(h: ClassParam, xi: Fugacity) -> Result<Vec<Value>, CliError> {
    let p = ThermoPoint::solve(h, xi)?;
    Ok(vec![
        p.xi.into(),
        p.y.into(),
        p.occupation.into(),
        p.theta.into(),
        p.entropy_per_state.into(),
    ])
}

fn occupation(h: ClassParam, fugacities: &[Fugacity]) -> Result<Document, CliError> {
    let mut doc = Document::new(format!("occupation, h = {}", h.value()));
    doc.field("h", h.value());
    let mut t = Table::new("points", &OCCUPATION_COLUMNS);
    for &xi in fugacities {
        t.push(occupation_row(h, xi)?);
    }
    doc.table(t);
    Ok(doc)
}

fn entropy(h: ClassParam, occupations: &[f64]) -> Result<Document, CliError> {
    let mut doc = Document::new(format!("entropy per state, h = {}", h.value()));
    doc.field("h", h.value());
    let mut t = Table::new("points", &["n", "S/K"]);
    for &n in occupations {
        t.push(vec![n.into(), entropy_per_state(h, n)?.into()]);
    }
    doc.table(t);
    Ok(doc)
}

fn energy(h: ClassParam, fugacities: &[Fugacity], kt: f64) -> Result<Document, CliError> {
    let mut doc = Document::new(format!("free energy, h = {}", h.value()));
    doc.field("h", h.value()).field("kT", kt);
    let mut t = Table::new("points", &["xi", "theta", "ln_theta", "F"]);
    for &xi in fugacities {
        t.push(vec![
            xi.value().into(),
            partition_theta(h, xi)?.into(),
            ln_theta(h, xi)?.into(),
            free_energy(h, xi, kt)?.into(),
        ]);
    }
    doc.table(t);
    Ok(doc)
}

const INDEX_COLUMNS: [&str; 3] = ["h", "i_f", "err"];

fn index_row(h: ClassParam, tol: f64) -> Result<Vec<Value>, CliError> {
    let f = fractal_index_with_tolerance(h, tol)?;
    Ok(vec![
        f.h.into(),
        f.value.into(),
        f.abs_error_estimate.into(),
    ])
}

fn index(classes: &[ClassParam], tol: f64) -> Result<Document, CliError> {
    let mut doc = Document::new("fractal index");
    doc.field("tolerance", tol);
    let mut t = Table::new("indices", &INDEX_COLUMNS);
    for &h in classes {
        t.push(index_row(h, tol)?);
    }
    doc.table(t);
    Ok(doc)
}

fn central(nus: &[u32], tol: f64) -> Result<Document, CliError> {
    let mut doc = Document::new("central charge: fractal-index and dilogarithm routes");
    doc.field("tolerance", tol);
    let mut t = Table::new(
        "central charges",
        &[
            "nu",
            "x",
            "c_dilog",
            "c_dilog_power",
            "c_index",
            "index_err",
            "index_minus_dilog",
            "index_minus_dilog_power",
        ],
    );
    let mut worst: [f64; 2] = [0.0, 0.0];
    for &nu in nus {
        let c = central_charge_index_with_tolerance(nu, tol)?;
        let index = c.value_index.expect("index route evaluated");
        let deltas = [index - c.value_dilog, index - c.value_dilog_power];
        worst[0] = worst[0].max(deltas[0].abs());
        worst[1] = worst[1].max(deltas[1].abs());
        t.push(vec![
            nu.into(),
            c.x_root.into(),
            c.value_dilog.into(),
            c.value_dilog_power.into(),
            index.into(),
            c.index_abs_error.into(),
            deltas[0].into(),
            deltas[1].into(),
        ]);
    }
    doc.field("max_abs_index_minus_dilog", worst[0])
        .field("max_abs_index_minus_dilog_power", worst[1]);
    doc.table(t);
    Ok(doc)
}

fn table(
    kind: TableKind,
    h: Option<ClassParam>,
    grid: &Grid,
    tol: f64,
) -> Result<Document, CliError> {
    let values = grid.values();
    let (title, mut t) = match (kind, h) {
        (TableKind::Occupation, Some(h)) => {
            let mut t = Table::new("occupation", &OCCUPATION_COLUMNS);
            for &x in &values {
                t.push(occupation_row(h, Fugacity::new(x)?)?);
            }
            (format!("occupation table, h = {}", h.value()), t)
        }
        (TableKind::Entropy, Some(h)) => {
            let mut t = Table::new("entropy", &["n", "S/K"]);
            for &n in &values {
                t.push(vec![n.into(), entropy_per_state(h, n)?.into()]);
            }
            (format!("entropy table, h = {}", h.value()), t)
        }
        (TableKind::Index, _) => {
            let mut t = Table::new("index", &INDEX_COLUMNS);
            for &hv in &values {
                t.push(index_row(ClassParam::new(hv)?, tol)?);
            }
            ("fractal index table".to_string(), t)
        }
        (_, None) => unreachable!("request validation requires h"),
    };
    t.name = title.clone();
    let mut doc = Document::new(title);
    doc.table(t);
    Ok(doc)
}

fn validate_fixtures(files: &[std::path::PathBuf], verbose: bool) -> Result<Outcome, CliError> {
    let sets: Vec<FixtureSet> = if files.is_empty() {
        fixtures::bundled_sets()
    } else {
        files
            .iter()
            .map(|p| fixtures::load_fixture_set(p))
            .collect::<Result<_, _>>()?
    };
    let mut reports = Vec::new();
    for set in &sets {
        reports.extend(fixtures::check_set(set)?);
    }
    let total = |v: Verdict| reports.iter().map(|r| r.count(v)).sum::<usize>();
    let breaking = reports.iter().filter(|r| r.breaks_expectation()).count();

    let mut doc = Document::new("fixture validation");
    doc.field("fixtures", reports.len())
        .field(
            "checks",
            reports.iter().map(|r| r.checks.len()).sum::<usize>(),
        )
        .field("passed", total(Verdict::Pass))
        .field("annotated", total(Verdict::Annotated))
        .field("unexplained_failures", total(Verdict::Fail))
        .field("stale_annotations", total(Verdict::Stale))
        .field("expectations_broken", breaking);

    let mut summary = Table::new(
        "summary",
        &[
            "set",
            "fixture",
            "kind",
            "checks",
            "passed",
            "annotated",
            "unexplained",
            "expect_valid",
            "status",
        ],
    );
    for r in &reports {
        let status = match (r.is_valid(), r.expect_valid) {
            (true, true) => "ok",
            (false, false) => "invalid (expected)",
            (true, false) => "valid (expected invalid)",
            (false, true) => "FAILED",
        };
        summary.push(vec![
            r.set.clone().into(),
            r.name.clone().into(),
            r.kind.into(),
            r.checks.len().into(),
            r.count(Verdict::Pass).into(),
            r.count(Verdict::Annotated).into(),
            r.unexplained().into(),
            r.expect_valid.into(),
            status.into(),
        ]);
    }
    doc.table(summary);

    let name = if verbose { "checks" } else { "findings" };
    let mut findings = Table::new(
        name,
        &["fixture", "check", "at", "subject", "verdict", "note"],
    );
    for r in &reports {
        for c in &r.checks {
            if verbose || c.verdict != Verdict::Pass {
                findings.push(vec![
                    r.name.clone().into(),
                    c.check.into(),
                    c.at.clone().into(),
                    c.subject.clone().into(),
                    c.verdict.label().into(),
                    c.note.clone().into(),
                ]);
            }
        }
    }
    doc.table(findings);
    Ok(Outcome {
        document: doc,
        status: Status::from_ok(breaking == 0),
    })
}
