//! Instance checks of the crossing-count lemmas, instance generators and
//! seeded property suites.
//!
//! Every rule is a predicate over one concrete drawing. A rule whose
//! hypothesis does not hold for the drawing reports
//! [`Outcome::NotApplicable`] rather than passing vacuously.

mod counting;
mod generate;
mod geometric;
mod suite;

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

pub use counting::verify_counting;
pub use generate::{
    generate_k10_shape, generate_k9_shape, generate_nested_k6, generate_nested_k9, generate_optimal_k9, tighten,
    K10Shape, K9Shape, GENERATION_BUDGET, GENERATOR_BOX,
};
pub use geometric::{sample_witnesses, verify_geometric_lemma, Witness};
pub use suite::{run_suite, verify_drawing, Family, Suite, SuiteSummary};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleId {
    K5Principle,
    TwoColour,
    NonConcentricK6,
    ConfigurationLaw,
    RbGgNine,
    RbRgNine,
    InternalNine,
    K9ConcentricOptimum,
    NineMax,
    WhiteInGreen,
    WhiteInBlue,
    Ttq62,
    GuiltyHull6,
    GuiltyHull5,
    QuadSecondHull38,
    Barrier,
    Kite,
    Ccc,
    Containment,
    SharedLabels,
}

impl RuleId {
    pub const ALL: [RuleId; 20] = [
        RuleId::K5Principle,
        RuleId::TwoColour,
        RuleId::NonConcentricK6,
        RuleId::ConfigurationLaw,
        RuleId::RbGgNine,
        RuleId::RbRgNine,
        RuleId::InternalNine,
        RuleId::K9ConcentricOptimum,
        RuleId::NineMax,
        RuleId::WhiteInGreen,
        RuleId::WhiteInBlue,
        RuleId::Ttq62,
        RuleId::GuiltyHull6,
        RuleId::GuiltyHull5,
        RuleId::QuadSecondHull38,
        RuleId::Barrier,
        RuleId::Kite,
        RuleId::Ccc,
        RuleId::Containment,
        RuleId::SharedLabels,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RuleId::K5Principle => "k5_principle",
            RuleId::TwoColour => "two_colour",
            RuleId::NonConcentricK6 => "non_concentric_k6",
            RuleId::ConfigurationLaw => "configuration_law",
            RuleId::RbGgNine => "rb_gg_nine",
            RuleId::RbRgNine => "rb_rg_nine",
            RuleId::InternalNine => "internal_nine",
            RuleId::K9ConcentricOptimum => "k9_concentric_optimum",
            RuleId::NineMax => "nine_max",
            RuleId::WhiteInGreen => "white_in_green",
            RuleId::WhiteInBlue => "white_in_blue",
            RuleId::Ttq62 => "ttq_62",
            RuleId::GuiltyHull6 => "guilty_hull6",
            RuleId::GuiltyHull5 => "guilty_hull5",
            RuleId::QuadSecondHull38 => "quad_second_hull_38",
            RuleId::Barrier => "barrier",
            RuleId::Kite => "kite",
            RuleId::Ccc => "ccc",
            RuleId::Containment => "containment",
            RuleId::SharedLabels => "shared_labels",
        }
    }

    /// Geometric rules take witnesses; the rest are pure counting rules.
    pub fn is_geometric(self) -> bool {
        matches!(self, RuleId::Barrier | RuleId::Kite | RuleId::Ccc | RuleId::Containment | RuleId::SharedLabels)
    }

    /// Human-readable predicate.
    pub fn required(self) -> &'static str {
        match self {
            RuleId::K5Principle => "triangular hull, rest green: rg×rg = C(n-3,2)",
            RuleId::TwoColour => "nested K9: rg, rb, gb two-coloured counts each >= 3",
            RuleId::NonConcentricK6 => "nested non-concentric K6: total > 3",
            RuleId::ConfigurationLaw => "non-concentric count = {CCC:0, CCV:1, CVV:2, VVV:3}[class]",
            RuleId::RbGgNine => "nested K9: rb×gg = 9",
            RuleId::RbRgNine => "nested K9: rb×rg >= 9",
            RuleId::InternalNine => "nested K9: rb×gb + gb×bb >= 9",
            RuleId::K9ConcentricOptimum => "nested K9 with 36 crossings: rg×gg = 0 and rb×bb = 0",
            RuleId::NineMax => "nested K9 with 36 crossings: internal = 9, gb×bb <= 2, rb×gb <= 9",
            RuleId::WhiteInGreen => "white inside green: rw×gb + rb×bw + gb×bw + rg×gg >= 6",
            RuleId::WhiteInBlue => "white inside blue: total >= 63 and white + rg×gg >= 27",
            RuleId::Ttq62 => "peel [3,3,4]: total >= 62",
            RuleId::GuiltyHull6 => "peel [3,6]: total >= 42",
            RuleId::GuiltyHull5 => "peel [3,5,1]: total >= 38",
            RuleId::QuadSecondHull38 => "peel [3,4,2]: total >= 38",
            RuleId::Barrier => "(u,w) and (v,w) cross at least 2 kite edges in total",
            RuleId::Kite => "(o1,p) crosses (o2,l) or (o2,r)",
            RuleId::Ccc => "(u,v) crosses at least 2 kite edges",
            RuleId::Containment => "(v,m) crosses a kite edge",
            RuleId::SharedLabels => "unary CCV: both concave kites have the same l, m, r",
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RuleId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        RuleId::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::UnknownRule(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    /// The rule's hypothesis does not hold for this instance.
    NotApplicable(String),
}

impl Outcome {
    fn word(&self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::NotApplicable(_) => "n/a",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub rule: RuleId,
    pub outcome: Outcome,
    /// Every count the predicate reads, in a fixed order.
    pub observed: Vec<(&'static str, i64)>,
    pub notes: Vec<String>,
}

impl CheckReport {
    fn new(rule: RuleId) -> Self {
        CheckReport { rule, outcome: Outcome::NotApplicable(String::new()), observed: Vec::new(), notes: Vec::new() }
    }

    fn not_applicable(rule: RuleId, why: impl Into<String>) -> Self {
        CheckReport { outcome: Outcome::NotApplicable(why.into()), ..CheckReport::new(rule) }
    }

    fn observe(&mut self, key: &'static str, value: impl TryInto<i64>) -> &mut Self {
        let v = value.try_into().unwrap_or(i64::MAX);
        self.observed.push((key, v));
        self
    }

    fn decide(mut self, pass: bool) -> Self {
        self.outcome = if pass { Outcome::Pass } else { Outcome::Fail };
        self
    }

    pub fn applicable(&self) -> bool {
        !matches!(self.outcome, Outcome::NotApplicable(_))
    }

    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    pub fn failed(&self) -> bool {
        self.outcome == Outcome::Fail
    }

    pub fn get(&self, key: &str) -> Option<i64> {
        self.observed.iter().find(|(k, _)| *k == key).map(|&(_, v)| v)
    }

    pub fn required(&self) -> &'static str {
        self.rule.required()
    }

    /// `rule seed outcome key=value ...`
    pub fn line(&self, seed: u64) -> String {
        let mut s = format!("{} {} {}", self.rule, seed, self.outcome.word());
        for (k, v) in &self.observed {
            s.push_str(&format!(" {k}={v}"));
        }
        s
    }
}
