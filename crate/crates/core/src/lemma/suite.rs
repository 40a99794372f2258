use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::generate::{
    generate_k10_shape, generate_k9_shape, generate_nested_k6, generate_nested_k9, generate_optimal_k9, tighten,
    K10Shape, K9Shape,
};
use super::geometric::{sample_witnesses, verify_geometric_lemma, Witness};
use super::{verify_counting, CheckReport, Outcome, RuleId};
use crate::color::{color_by_hulls, color_with_white, ColoredDrawing};
use crate::error::{Error, Result};
use crate::geometry::Drawing;
use crate::kite::ConfigClass;
use crate::search::restart_seed;

/// Witnesses drawn per instance for the geometric lemmas.
pub const WITNESSES_PER_INSTANCE: usize = 16;
/// Descent moves used to tighten an instance.
pub const TIGHTEN_MOVES: usize = 3_000;

/// Instance population a rule is checked on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Nested `K_6`; the class cycles through all five with the instance index.
    NestedK6,
    NestedK9,
    OptimalK9,
    TriTriQuad,
    WhiteInBlue,
    WhiteInGreen,
    Hull6,
    Hull5,
    Quad,
}

impl Family {
    pub fn of(rule: RuleId) -> Family {
        use RuleId::*;
        match rule {
            K5Principle | TwoColour | RbGgNine | RbRgNine | InternalNine => Family::NestedK9,
            K9ConcentricOptimum | NineMax => Family::OptimalK9,
            NonConcentricK6 | ConfigurationLaw | Barrier | Kite | Ccc | Containment | SharedLabels => Family::NestedK6,
            WhiteInGreen => Family::WhiteInGreen,
            WhiteInBlue => Family::WhiteInBlue,
            Ttq62 => Family::TriTriQuad,
            GuiltyHull6 => Family::Hull6,
            GuiltyHull5 => Family::Hull5,
            QuadSecondHull38 => Family::Quad,
        }
    }

    fn tightened(self) -> bool {
        !matches!(self, Family::NestedK6 | Family::OptimalK9)
    }

    /// Seed of instance `i`.
    pub fn seed(self, master: u64, i: usize) -> u64 {
        restart_seed(master ^ (self as u64 + 1).wrapping_mul(0xD1B5_4A32_D192_ED03), i)
    }

    /// The instance for `seed`; `index` picks the K6 class. Even seeds of
    /// the shape families are tightened by a shape-preserving descent.
    pub fn instance(self, seed: u64, index: usize) -> Result<ColoredDrawing> {
        let d = match self {
            Family::NestedK6 => generate_nested_k6(seed, ConfigClass::ALL[index % ConfigClass::ALL.len()])?,
            Family::NestedK9 => generate_nested_k9(seed)?,
            Family::OptimalK9 => generate_optimal_k9(seed)?,
            Family::TriTriQuad => generate_k10_shape(seed, K10Shape::TriTriQuad)?,
            Family::WhiteInBlue => generate_k10_shape(seed, K10Shape::WhiteInBlue)?,
            Family::WhiteInGreen => generate_k10_shape(seed, K10Shape::WhiteInGreen)?,
            Family::Hull6 => generate_k9_shape(seed, K9Shape::Hull6)?,
            Family::Hull5 => generate_k9_shape(seed, K9Shape::Hull5)?,
            Family::Quad => generate_k9_shape(seed, K9Shape::Quad)?,
        };
        let d = if self.tightened() && seed.is_multiple_of(2) { tighten(&d, TIGHTEN_MOVES, seed) } else { d };
        match self {
            Family::WhiteInBlue | Family::WhiteInGreen => color_with_white(&d, 9),
            _ => color_by_hulls(&d),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    K6,
    K9,
    K10,
    Appendix,
    All,
}

impl Suite {
    pub fn rules(self) -> Vec<RuleId> {
        use RuleId::*;
        match self {
            Suite::K6 => vec![NonConcentricK6, ConfigurationLaw, Barrier, Kite, Ccc, Containment, SharedLabels],
            Suite::K9 => vec![K5Principle, TwoColour, RbGgNine, RbRgNine, InternalNine, K9ConcentricOptimum, NineMax],
            Suite::K10 => vec![WhiteInGreen, WhiteInBlue, Ttq62],
            Suite::Appendix => vec![GuiltyHull6, GuiltyHull5, QuadSecondHull38],
            Suite::All => RuleId::ALL.to_vec(),
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "k6" => Suite::K6,
            "k9" => Suite::K9,
            "k10" => Suite::K10,
            "appendix" => Suite::Appendix,
            "all" => Suite::All,
            other => return Err(Error::UnknownRule(format!("suite {other}"))),
        })
    }
}

/// Checks `rule` on one coloured drawing; geometric lemmas are checked on
/// witnesses sampled from `seed` and summarised in one report.
fn check(cd: &ColoredDrawing, rule: RuleId, seed: u64) -> Result<CheckReport> {
    if !rule.is_geometric() {
        return verify_counting(cd, rule);
    }
    if rule == RuleId::SharedLabels {
        return verify_geometric_lemma(cd, rule, &Witness::None);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (rule as u64 + 1).wrapping_mul(0xA076_1D64_78BD_642F));
    let mut applicable = 0;
    let mut failed = 0;
    let mut notes = Vec::new();
    for w in sample_witnesses(cd, rule, &mut rng, WITNESSES_PER_INSTANCE) {
        let r = verify_geometric_lemma(cd, rule, &w)?;
        if r.applicable() {
            applicable += 1;
            if r.failed() {
                failed += 1;
                notes.push(format!("failed witness {w:?}"));
            }
        }
    }
    let outcome = match (applicable, failed) {
        (0, _) => Outcome::NotApplicable("no sampled witness meets the hypothesis".into()),
        (_, 0) => Outcome::Pass,
        _ => Outcome::Fail,
    };
    Ok(CheckReport {
        rule,
        outcome,
        observed: vec![
            ("witnesses", WITNESSES_PER_INSTANCE as i64),
            ("applicable", applicable),
            ("failed", failed),
        ],
        notes,
    })
}

fn generation_failure(rule: RuleId, e: &Error) -> CheckReport {
    CheckReport { rule, outcome: Outcome::Fail, observed: Vec::new(), notes: vec![format!("generation: {e}")] }
}

/// Reports of a suite run, ordered by rule then instance index.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SuiteSummary {
    pub entries: Vec<(u64, CheckReport)>,
}

impl SuiteSummary {
    pub fn failures(&self) -> usize {
        self.entries.iter().filter(|(_, r)| r.failed()).count()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `(pass, fail, not applicable, equality notes)` per rule.
    pub fn per_rule(&self) -> BTreeMap<RuleId, [usize; 4]> {
        let mut m: BTreeMap<RuleId, [usize; 4]> = BTreeMap::new();
        for (_, r) in &self.entries {
            let e = m.entry(r.rule).or_default();
            match r.outcome {
                Outcome::Pass => e[0] += 1,
                Outcome::Fail => e[1] += 1,
                Outcome::NotApplicable(_) => e[2] += 1,
            }
            e[3] += r.notes.iter().any(|n| n == "equality") as usize;
        }
        m
    }

    /// One line per report, then per-rule totals and the failure count.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (seed, r) in &self.entries {
            let _ = writeln!(out, "{}", r.line(*seed));
        }
        for (rule, [pass, fail, na, eq]) in self.per_rule() {
            let _ = write!(out, "rule {rule}: pass={pass} fail={fail} n/a={na}");
            if rule == RuleId::RbRgNine {
                let _ = write!(out, " equality={eq}/{pass}");
            }
            out.push('\n');
        }
        let _ = writeln!(out, "failures: {}", self.failures());
        out
    }
}

/// Runs every rule on `n_instances` instances of its family. Instances of a
/// family are shared between its rules. Deterministic for a fixed
/// `master_seed` whatever the thread count.
pub fn run_suite(rules: &[RuleId], n_instances: usize, master_seed: u64) -> SuiteSummary {
    let mut families: Vec<Family> = rules.iter().map(|&r| Family::of(r)).collect();
    families.sort();
    families.dedup();

    let mut by_rule: BTreeMap<RuleId, Vec<(u64, CheckReport)>> = BTreeMap::new();
    for family in families {
        let family_rules: Vec<RuleId> = rules.iter().copied().filter(|&r| Family::of(r) == family).collect();
        let results: Vec<Vec<(RuleId, u64, CheckReport)>> = (0..n_instances)
            .into_par_iter()
            .map(|i| {
                let seed = family.seed(master_seed, i);
                let instance = family.instance(seed, i);
                family_rules
                    .iter()
                    .map(|&rule| {
                        let report = match &instance {
                            Ok(cd) => check(cd, rule, seed).unwrap_or_else(|e| generation_failure(rule, &e)),
                            Err(e) => generation_failure(rule, e),
                        };
                        (rule, seed, report)
                    })
                    .collect()
            })
            .collect();
        for (rule, seed, report) in results.into_iter().flatten() {
            by_rule.entry(rule).or_default().push((seed, report));
        }
    }

    let mut seen = Vec::new();
    let mut entries = Vec::new();
    for &rule in rules {
        if seen.contains(&rule) {
            continue;
        }
        seen.push(rule);
        entries.extend(by_rule.remove(&rule).unwrap_or_default());
    }
    SuiteSummary { entries }
}

/// Checks `rules` on a single drawing, coloured by its hulls.
pub fn verify_drawing(d: &Drawing, rules: &[RuleId], seed: u64) -> Vec<CheckReport> {
    let cd = match color_by_hulls(d) {
        Ok(cd) => cd,
        Err(e) => {
            return rules
                .iter()
                .map(|&r| CheckReport::not_applicable(r, format!("cannot colour drawing: {e}")))
                .collect()
        }
    };
    rules
        .iter()
        .map(|&r| check(&cd, r, seed).unwrap_or_else(|e| CheckReport::not_applicable(r, e.to_string())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_and_single() {
        assert!(run_suite(&[], 10, 1).is_empty());
        let s = run_suite(&[RuleId::RbGgNine], 1, 1);
        assert_eq!(s.len(), 1);
        assert!(s.entries[0].1.passed());
    }

    #[test]
    fn deterministic() {
        let rules = Suite::K9.rules();
        assert_eq!(run_suite(&rules, 6, 42).to_text(), run_suite(&rules, 6, 42).to_text());
    }

    #[test]
    fn summary_text() {
        let s = run_suite(&[RuleId::RbRgNine, RuleId::Ttq62], 4, 9);
        let text = s.to_text();
        assert!(text.ends_with("failures: 0\n"), "{text}");
        assert!(text.contains("rule rb_rg_nine: pass=4 fail=0 n/a=0 equality=4/4"));
        assert_eq!(text.lines().filter(|l| l.starts_with("ttq_62 ")).count(), 4);
    }
}
