//! Kernelization reports and their key-value text rendering.

use std::fmt::{self, Write as _};
use std::ops::{AddAssign, Index};

use crate::instance::{Instance, Problem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Outcome {
    /// An equivalent, smaller instance.
    Reduced,
    TrivialYes,
    TrivialNo,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Reduced => "reduced",
            Outcome::TrivialYes => "trivial-yes",
            Outcome::TrivialNo => "trivial-no",
        }
    }
}

/// Why a driver answered outright.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Decision {
    NegativeBudget,
    EmptyAfterPawFreeRemoval,
    ModulatorTooLarge,
    TypeTwoTooLarge,
    BudgetExhausted,
    VertexCapExceeded,
    PackingTooLarge,
}

impl Decision {
    pub fn as_str(self) -> &'static str {
        match self {
            Decision::NegativeBudget => "negative-budget",
            Decision::EmptyAfterPawFreeRemoval => "empty-after-paw-free-removal",
            Decision::ModulatorTooLarge => "modulator-too-large",
            Decision::TypeTwoTooLarge => "type-two-too-large",
            Decision::BudgetExhausted => "budget-exhausted",
            Decision::VertexCapExceeded => "vertex-cap-exceeded",
            Decision::PackingTooLarge => "packing-too-large",
        }
    }
}

/// The reduction rules of both kernels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    /// Delete components without an induced paw (both problems).
    PawFreeComponents,
    /// Completion: fold a reducible type-I component.
    TypeOneComponent,
    /// Completion: fold a reducible complete multipartite component.
    MultipartiteComponent,
    /// Deletion: delete an edge shared by `k + 1` otherwise edge-disjoint paws.
    SharedEdge,
    /// Deletion: keep `k + 1` vertices per multipartite part.
    PartSize,
    /// Deletion: keep `k + 4` parts fully adjacent to the component's neighbourhood.
    UniversalParts,
    /// Deletion: marking over type-I components.
    TypeOneMarking,
    /// Deletion: marking over type-II components.
    TypeTwoMarking,
}

impl Rule {
    pub const ALL: [Rule; 8] = [
        Rule::PawFreeComponents,
        Rule::TypeOneComponent,
        Rule::MultipartiteComponent,
        Rule::SharedEdge,
        Rule::PartSize,
        Rule::UniversalParts,
        Rule::TypeOneMarking,
        Rule::TypeTwoMarking,
    ];

    pub fn key(self) -> &'static str {
        match self {
            Rule::PawFreeComponents => "paw_free_components",
            Rule::TypeOneComponent => "type_one_component",
            Rule::MultipartiteComponent => "multipartite_component",
            Rule::SharedEdge => "shared_edge",
            Rule::PartSize => "part_size",
            Rule::UniversalParts => "universal_parts",
            Rule::TypeOneMarking => "type_one_marking",
            Rule::TypeTwoMarking => "type_two_marking",
        }
    }

    /// Rules a driver for `problem` can fire.
    pub fn applies_to(self, problem: Problem) -> bool {
        match self {
            Rule::PawFreeComponents => true,
            Rule::TypeOneComponent | Rule::MultipartiteComponent => problem == Problem::Completion,
            _ => problem == Problem::Deletion,
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

/// Per-rule firing counts.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct RuleCounts([u64; 8]);

impl RuleCounts {
    pub fn record(&mut self, rule: Rule) {
        self.0[rule.index()] += 1;
    }

    pub fn iter(&self) -> impl Iterator<Item = (Rule, u64)> + '_ {
        Rule::ALL.iter().map(move |&r| (r, self[r]))
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }
}

impl Index<Rule> for RuleCounts {
    type Output = u64;

    fn index(&self, rule: Rule) -> &u64 {
        &self.0[rule.index()]
    }
}

impl AddAssign<&RuleCounts> for RuleCounts {
    fn add_assign(&mut self, other: &RuleCounts) {
        for (a, b) in self.0.iter_mut().zip(other.0) {
            *a += b;
        }
    }
}

/// Size certificates of the completion kernel.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CompletionCertificate {
    /// Modulator size at the last construction, if one was built.
    pub modulator_size: Option<usize>,
    /// `4k` at that time.
    pub modulator_cap: Option<i64>,
    /// Vertices in type-II components at the last classification.
    pub type_two_vertices: Option<usize>,
    /// `2k` at that time.
    pub type_two_cap: Option<i64>,
    /// `38k` for the final budget.
    pub vertex_cap: i64,
}

/// Explicit vertex bound of the deletion kernel for budget `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DeletionBound {
    pub k: u64,
    /// `4k`.
    pub modulator_cap: u64,
    /// `4k (5k + 4)(k + 1)`.
    pub cm_cap: u64,
    /// `8(k+1) C(4k,3) + 4k C(4k,2) 4 · 2 (k+3)`.
    pub t1_cap: u64,
    /// `8(k+1) C(4k,3) + C(4k,2) k (k+2)`.
    pub t2_cap: u64,
    pub total: u64,
}

fn binomial(n: u64, r: u64) -> u64 {
    if r > n {
        return 0;
    }
    (0..r).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

impl DeletionBound {
    pub fn new(k: u64) -> Self {
        let m = 4 * k;
        let modulator_cap = m;
        let cm_cap = m * (5 * k + 4) * (k + 1);
        let triples = 8 * (k + 1) * binomial(m, 3);
        let pairs = binomial(m, 2);
        let t1_cap = triples + m * (pairs * 4 * 2 * (k + 3));
        let t2_cap = triples + pairs * k * (k + 2);
        Self {
            k,
            modulator_cap,
            cm_cap,
            t1_cap,
            t2_cap,
            total: modulator_cap + cm_cap + t1_cap + t2_cap,
        }
    }
}

/// Shape of the multipartite region of the final deletion kernel.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MultipartiteShape {
    pub components: usize,
    pub max_parts: usize,
    pub max_part_size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeletionCertificate {
    pub packing_size: Option<usize>,
    pub modulator_size: Option<usize>,
    pub bound: DeletionBound,
    pub shape: Option<MultipartiteShape>,
    /// Whether the output has at most `bound.total` vertices.
    pub bound_met: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Completion(CompletionCertificate),
    Deletion(DeletionCertificate),
}

/// Dimensions of an instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InstanceSize {
    pub n: usize,
    pub m: usize,
    pub k: i64,
}

impl InstanceSize {
    pub fn of(instance: &Instance) -> Self {
        Self {
            n: instance.graph.n(),
            m: instance.graph.m(),
            k: instance.k,
        }
    }
}

/// Result of a kernelization run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelReport {
    pub problem: Problem,
    pub outcome: Outcome,
    pub decision: Option<Decision>,
    pub original: InstanceSize,
    /// The output instance; canonical for trivial outcomes.
    pub kernel: Instance,
    pub firings: RuleCounts,
    /// Edges already committed to the solution by the rules.
    pub budget_consumed: i64,
    pub certificate: Certificate,
}

impl KernelReport {
    /// Renders the report as `key: value` lines in a fixed order.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let final_size = InstanceSize::of(&self.kernel);
        let mut line = |key: &str, value: &dyn fmt::Display| {
            writeln!(out, "{key}: {value}").expect("write to string");
        };
        line("outcome", &self.outcome.as_str());
        line("problem", &self.problem);
        line("decided_by", &self.decision.map_or("none", Decision::as_str));
        line("original.n", &self.original.n);
        line("original.m", &self.original.m);
        line("original.k", &self.original.k);
        line("final.n", &final_size.n);
        line("final.m", &final_size.m);
        line("final.k", &final_size.k);
        line("budget_consumed", &self.budget_consumed);
        for (rule, count) in self.firings.iter() {
            if rule.applies_to(self.problem) {
                line(&format!("rule.{}", rule.key()), &count);
            }
        }
        let opt = |v: Option<String>| v.unwrap_or_else(|| "-".to_owned());
        match &self.certificate {
            Certificate::Completion(c) => {
                line("cert.modulator_size", &opt(c.modulator_size.map(|v| v.to_string())));
                line("cert.modulator_cap", &opt(c.modulator_cap.map(|v| v.to_string())));
                line("cert.type_two_vertices", &opt(c.type_two_vertices.map(|v| v.to_string())));
                line("cert.type_two_cap", &opt(c.type_two_cap.map(|v| v.to_string())));
                line("cert.vertex_cap", &c.vertex_cap);
                line("cert.bound_met", &(final_size.n as i64 <= c.vertex_cap));
            }
            Certificate::Deletion(c) => {
                line("cert.packing_size", &opt(c.packing_size.map(|v| v.to_string())));
                line("cert.modulator_size", &opt(c.modulator_size.map(|v| v.to_string())));
                line("cert.modulator_cap", &c.bound.modulator_cap);
                line("cert.cm_cap", &c.bound.cm_cap);
                line("cert.t1_cap", &c.bound.t1_cap);
                line("cert.t2_cap", &c.bound.t2_cap);
                line("cert.total", &c.bound.total);
                let shape = c.shape;
                line("cert.cm_components", &opt(shape.map(|s| s.components.to_string())));
                line("cert.cm_max_parts", &opt(shape.map(|s| s.max_parts.to_string())));
                line("cert.cm_max_part_size", &opt(shape.map(|s| s.max_part_size.to_string())));
                line("cert.bound_met", &c.bound_met);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(12, 3), 220);
        assert_eq!(binomial(2, 3), 0);
        assert_eq!(binomial(0, 0), 1);
    }

    #[test]
    fn deletion_bound_for_small_budgets() {
        let b = DeletionBound::new(0);
        assert_eq!(b.total, 0);
        // k = 1: m = 4, C(4,3) = 4, C(4,2) = 6
        let b = DeletionBound::new(1);
        assert_eq!(b.modulator_cap, 4);
        assert_eq!(b.cm_cap, 4 * 9 * 2);
        assert_eq!(b.t1_cap, 8 * 2 * 4 + 4 * (6 * 8 * 4));
        assert_eq!(b.t2_cap, 8 * 2 * 4 + 6 * 3);
        assert_eq!(b.total, 4 + 72 + 832 + 82);
    }

    #[test]
    fn deletion_bound_is_quartic() {
        // fourth finite difference of a degree-4 polynomial is constant
        let t: Vec<i128> = (0..8).map(|k| DeletionBound::new(k).total as i128).collect();
        let diff = |v: &[i128]| v.windows(2).map(|w| w[1] - w[0]).collect::<Vec<_>>();
        let d4 = diff(&diff(&diff(&diff(&t))));
        assert!(d4.windows(2).all(|w| w[0] == w[1]), "{d4:?}");
        assert_ne!(d4[0], 0);
    }

    #[test]
    fn rule_counts_merge() {
        let mut a = RuleCounts::default();
        a.record(Rule::SharedEdge);
        let mut b = RuleCounts::default();
        b.record(Rule::SharedEdge);
        b.record(Rule::PartSize);
        a += &b;
        assert_eq!(a[Rule::SharedEdge], 2);
        assert_eq!(a.total(), 3);
    }
}
