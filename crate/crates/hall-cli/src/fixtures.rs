//! Transcribed sequences and their validators.
//!
//! Fixture files hold printed data verbatim. Validation recomputes everything
//! exactly; a failing check is acceptable only when the fixture carries a
//! matching annotation, and an annotation that matches nothing is itself a
//! finding.

use std::collections::HashSet;
use std::path::Path;

use serde::Deserialize;
use spectrum_core::{
    class_members, dual_filling, is_unimodular, validate_chain, Ratio, TransitionChain,
};

use crate::error::CliError;

pub const BUNDLED: [(&str, &str); 4] = [
    (
        "transition-chain.json",
        include_str!("../fixtures/transition-chain.json"),
    ),
    (
        "dual-pairs-observed.json",
        include_str!("../fixtures/dual-pairs-observed.json"),
    ),
    (
        "dual-pairs-proposed.json",
        include_str!("../fixtures/dual-pairs-proposed.json"),
    ),
    (
        "class-groups.json",
        include_str!("../fixtures/class-groups.json"),
    ),
];

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FixtureSet {
    pub name: String,
    #[serde(default)]
    pub description: String,
    #[serde(default)]
    pub chains: Vec<ChainFixture>,
    #[serde(default)]
    pub dual_pairs: Vec<DualPairFixture>,
    #[serde(default)]
    pub groups: Vec<GroupFixture>,
}

fn yes() -> bool {
    true
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChainFixture {
    pub name: String,
    #[serde(default = "yes")]
    pub expect_valid: bool,
    pub entries: Vec<ChainEntry>,
    #[serde(default)]
    pub annotations: Vec<Annotation>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChainEntry {
    pub nu: Ratio,
    #[serde(default)]
    pub at: String,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DualPairFixture {
    pub name: String,
    #[serde(default = "yes")]
    pub expect_valid: bool,
    pub pairs: Vec<PrintedPair>,
    #[serde(default)]
    pub annotations: Vec<Annotation>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PrintedPair {
    pub nu: Ratio,
    pub nu_dual: Ratio,
    #[serde(default)]
    pub at: String,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFixture {
    pub name: String,
    #[serde(default = "yes")]
    pub expect_valid: bool,
    pub classes: Vec<PrintedClass>,
    #[serde(default)]
    pub annotations: Vec<Annotation>,
}

/// A class as printed: its dimension and the leading members exactly as
/// they appear (not necessarily reduced).
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PrintedClass {
    pub h: Ratio,
    pub printed: Vec<String>,
    #[serde(default)]
    pub at: String,
}

/// Explains one expected failure. Pair checks are keyed by their left
/// element.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(tag = "check", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Annotation {
    ChainPair {
        index: usize,
        note: String,
    },
    DualPair {
        nu: Ratio,
        note: String,
    },
    HPair {
        h: Ratio,
        note: String,
    },
    FirstMemberPair {
        h: Ratio,
        note: String,
    },
    PrintedFirstMemberPair {
        h: Ratio,
        note: String,
    },
    Member {
        h: Ratio,
        position: usize,
        #[serde(default)]
        expected: Option<Ratio>,
        note: String,
    },
}

impl Annotation {
    fn note(&self) -> &str {
        match self {
            Annotation::ChainPair { note, .. }
            | Annotation::DualPair { note, .. }
            | Annotation::HPair { note, .. }
            | Annotation::FirstMemberPair { note, .. }
            | Annotation::PrintedFirstMemberPair { note, .. }
            | Annotation::Member { note, .. } => note,
        }
    }

    fn check(&self) -> &'static str {
        match self {
            Annotation::ChainPair { .. } => "chain-pair",
            Annotation::DualPair { .. } => "dual-pair",
            Annotation::HPair { .. } => "h-pair",
            Annotation::FirstMemberPair { .. } => "first-member-pair",
            Annotation::PrintedFirstMemberPair { .. } => "printed-first-member-pair",
            Annotation::Member { .. } => "member",
        }
    }

    fn describe(&self) -> String {
        match self {
            Annotation::ChainPair { index, .. } => format!("pair {index}"),
            Annotation::DualPair { nu, .. } => format!("nu={nu}"),
            Annotation::HPair { h, .. }
            | Annotation::FirstMemberPair { h, .. }
            | Annotation::PrintedFirstMemberPair { h, .. } => format!("h={h}"),
            Annotation::Member { h, position, .. } => format!("h={h}, position {position}"),
        }
    }
}

/// What a failing check would need an annotation to say.
#[derive(Debug, Clone, PartialEq)]
enum Key {
    ChainPair(usize),
    DualPair(Ratio),
    HPair(Ratio),
    FirstMemberPair(Ratio),
    PrintedFirstMemberPair(Ratio),
    Member(Ratio, usize, Ratio),
    /// Malformed input that no annotation may excuse.
    Structural,
}

impl Key {
    fn matches(&self, a: &Annotation) -> bool {
        match (self, a) {
            (Key::ChainPair(i), Annotation::ChainPair { index, .. }) => i == index,
            (Key::DualPair(n), Annotation::DualPair { nu, .. }) => n == nu,
            (Key::HPair(x), Annotation::HPair { h, .. })
            | (Key::FirstMemberPair(x), Annotation::FirstMemberPair { h, .. })
            | (Key::PrintedFirstMemberPair(x), Annotation::PrintedFirstMemberPair { h, .. }) => {
                x == h
            }
            (
                Key::Member(x, p, computed),
                Annotation::Member {
                    h,
                    position,
                    expected,
                    ..
                },
            ) => x == h && p == position && expected.as_ref().is_none_or(|e| e == computed),
            _ => false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    /// Failed, and an annotation explains it.
    Annotated,
    Fail,
    /// An annotation with no failing check behind it.
    Stale,
}

impl Verdict {
    pub fn label(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Annotated => "annotated",
            Verdict::Fail => "FAIL",
            Verdict::Stale => "STALE",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub check: &'static str,
    pub at: String,
    pub subject: String,
    pub verdict: Verdict,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FixtureReport {
    pub set: String,
    pub name: String,
    pub kind: &'static str,
    pub expect_valid: bool,
    pub checks: Vec<Check>,
}

impl FixtureReport {
    pub fn count(&self, verdict: Verdict) -> usize {
        self.checks.iter().filter(|c| c.verdict == verdict).count()
    }

    pub fn unexplained(&self) -> usize {
        self.count(Verdict::Fail) + self.count(Verdict::Stale)
    }

    pub fn is_valid(&self) -> bool {
        self.unexplained() == 0
    }

    /// Only a fixture expected to validate can fail the run.
    pub fn breaks_expectation(&self) -> bool {
        self.expect_valid && !self.is_valid()
    }
}

/// Collects checks and resolves failures against annotations.
struct Ledger<'a> {
    annotations: &'a [Annotation],
    used: Vec<bool>,
    checks: Vec<Check>,
}

impl<'a> Ledger<'a> {
    fn new(annotations: &'a [Annotation]) -> Self {
        Self {
            annotations,
            used: vec![false; annotations.len()],
            checks: Vec::new(),
        }
    }

    fn record(
        &mut self,
        check: &'static str,
        at: String,
        subject: String,
        failure: Option<(Key, String)>,
    ) {
        let (verdict, note) = match failure {
            None => (Verdict::Pass, String::new()),
            Some((key, why)) => match self.annotations.iter().position(|a| key.matches(a)) {
                Some(i) => {
                    self.used[i] = true;
                    (Verdict::Annotated, self.annotations[i].note().to_string())
                }
                None => (Verdict::Fail, why),
            },
        };
        self.checks.push(Check {
            check,
            at,
            subject,
            verdict,
            note,
        });
    }

    fn finish(
        mut self,
        set: &str,
        name: &str,
        kind: &'static str,
        expect_valid: bool,
    ) -> FixtureReport {
        for (a, used) in self.annotations.iter().zip(&self.used) {
            if !used {
                self.checks.push(Check {
                    check: a.check(),
                    at: a.describe(),
                    subject: String::new(),
                    verdict: Verdict::Stale,
                    note: format!("annotation matches no failing check: {}", a.note()),
                });
            }
        }
        FixtureReport {
            set: set.into(),
            name: name.into(),
            kind,
            expect_valid,
            checks: self.checks,
        }
    }
}

fn span(a: &str, b: &str) -> String {
    match (a.is_empty(), b.is_empty()) {
        (true, true) => String::new(),
        _ => format!("{a} .. {b}"),
    }
}

fn det_note(a: &Ratio, b: &Ratio) -> String {
    format!("|det| = {}", a.det(b).magnitude())
}

pub fn check_chain(
    set: &str,
    fixture: &ChainFixture,
) -> Result<(TransitionChain, FixtureReport), CliError> {
    let entries: Vec<Ratio> = fixture.entries.iter().map(|e| e.nu.clone()).collect();
    let chain = validate_chain(&entries)?;
    let mut ledger = Ledger::new(&fixture.annotations);
    for (i, ok) in chain.verdicts.iter().enumerate() {
        let (a, b) = (&fixture.entries[i], &fixture.entries[i + 1]);
        let failure = (!ok).then(|| (Key::ChainPair(i), det_note(&a.nu, &b.nu)));
        ledger.record(
            "chain-pair",
            span(&a.at, &b.at),
            format!("{} -> {}", a.nu, b.nu),
            failure,
        );
    }
    let report = ledger.finish(set, &fixture.name, "chain", fixture.expect_valid);
    Ok((chain, report))
}

pub fn check_dual_pairs(set: &str, fixture: &DualPairFixture) -> FixtureReport {
    let mut ledger = Ledger::new(&fixture.annotations);
    for p in &fixture.pairs {
        let why = match dual_filling(&p.nu) {
            Err(e) => Some(e.to_string()),
            Ok(pair) if pair.nu_dual != p.nu_dual => {
                Some(format!("dual of {} is {}", p.nu, pair.nu_dual))
            }
            Ok(pair) if &pair.h + &pair.h_dual != Ratio::from_integer(3) => {
                Some(format!("h + h~ = {}", &pair.h + &pair.h_dual))
            }
            Ok(_) => None,
        };
        let failure = why.map(|w| (Key::DualPair(p.nu.clone()), w));
        ledger.record(
            "dual-pair",
            p.at.clone(),
            format!("({}, {})", p.nu, p.nu_dual),
            failure,
        );
    }
    ledger.finish(set, &fixture.name, "dual-pairs", fixture.expect_valid)
}

pub fn check_group(set: &str, fixture: &GroupFixture) -> FixtureReport {
    let mut ledger = Ledger::new(&fixture.annotations);
    let classes = &fixture.classes;
    for class in classes {
        let computed = match class_members(&class.h, class.printed.len()) {
            Ok(c) => c.members,
            Err(e) => {
                ledger.record(
                    "class",
                    class.at.clone(),
                    format!("h={}", class.h),
                    Some((Key::Structural, e.to_string())),
                );
                continue;
            }
        };
        for (pos, (text, want)) in class.printed.iter().zip(&computed).enumerate() {
            let why = match Ratio::parse_reduced(text) {
                Ok(r) if &r == want => None,
                Ok(_) => Some(format!("printed {text}, class formula gives {want}")),
                Err(_) => Some(format!(
                    "printed {text} is not a reduced fraction; class formula gives {want}"
                )),
            };
            let failure = why.map(|w| (Key::Member(class.h.clone(), pos, want.clone()), w));
            ledger.record(
                "member",
                format!("{}, member {}", class.at, pos + 1),
                format!("h={}: {text}", class.h),
                failure,
            );
        }
    }
    for w in classes.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        let at = span(&a.at, &b.at);
        let failure =
            (!is_unimodular(&a.h, &b.h)).then(|| (Key::HPair(a.h.clone()), det_note(&a.h, &b.h)));
        ledger.record("h-pair", at.clone(), format!("{} -> {}", a.h, b.h), failure);

        let (fa, fb) = (2 - &a.h, 2 - &b.h);
        let failure = (!is_unimodular(&fa, &fb))
            .then(|| (Key::FirstMemberPair(a.h.clone()), det_note(&fa, &fb)));
        ledger.record(
            "first-member-pair",
            at.clone(),
            format!("{fa} -> {fb}"),
            failure,
        );

        if let (Some(pa), Some(pb)) = (a.printed.first(), b.printed.first()) {
            let parsed = (pa.parse::<Ratio>(), pb.parse::<Ratio>());
            let why = match parsed {
                (Ok(x), Ok(y)) if is_unimodular(&x, &y) => None,
                (Ok(x), Ok(y)) => Some(det_note(&x, &y)),
                _ => Some("unparseable printed member".to_string()),
            };
            let failure = why.map(|w| (Key::PrintedFirstMemberPair(a.h.clone()), w));
            ledger.record(
                "printed-first-member-pair",
                at,
                format!("{pa} -> {pb}"),
                failure,
            );
        }
    }
    ledger.finish(set, &fixture.name, "group", fixture.expect_valid)
}

pub fn check_set(set: &FixtureSet) -> Result<Vec<FixtureReport>, CliError> {
    let mut reports = Vec::new();
    for chain in &set.chains {
        reports.push(check_chain(&set.name, chain)?.1);
    }
    for pairs in &set.dual_pairs {
        reports.push(check_dual_pairs(&set.name, pairs));
    }
    for group in &set.groups {
        reports.push(check_group(&set.name, group));
    }
    Ok(reports)
}

pub fn parse_fixture_set(source: &str, text: &str) -> Result<FixtureSet, CliError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let set: FixtureSet = serde_path_to_error::deserialize(de).map_err(|e| CliError::Fixture {
        source_name: source.to_string(),
        message: format!("at `{}`: {}", e.path(), e.inner()),
    })?;
    let mut seen = HashSet::new();
    let names = set
        .chains
        .iter()
        .map(|c| &c.name)
        .chain(set.dual_pairs.iter().map(|d| &d.name))
        .chain(set.groups.iter().map(|g| &g.name));
    for name in names {
        if !seen.insert(name) {
            return Err(CliError::Fixture {
                source_name: source.to_string(),
                message: format!("duplicate fixture name `{name}`"),
            });
        }
    }
    Ok(set)
}

pub fn load_fixture_set(path: &Path) -> Result<FixtureSet, CliError> {
    let source = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Fixture {
        source_name: source.clone(),
        message: e.to_string(),
    })?;
    parse_fixture_set(&source, &text)
}

pub fn bundled_sets() -> Vec<FixtureSet> {
    BUNDLED
        .iter()
        .map(|(name, text)| parse_fixture_set(name, text).expect("bundled fixtures parse"))
        .collect()
}
