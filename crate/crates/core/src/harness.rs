//! Kernel-versus-oracle agreement over seeded random instances.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::completion::kernelize_completion;
use crate::deletion::kernelize_deletion;
use crate::generate::{generate_random_instance, PlantedSpec};
use crate::instance::{Instance, Problem};
use crate::oracle::solve_exact;
use crate::report::{KernelReport, Outcome, RuleCounts};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EquivConfig {
    pub trials: usize,
    pub n_max: usize,
    pub k_max: i64,
    pub seed: u64,
}

impl Default for EquivConfig {
    fn default() -> Self {
        Self {
            trials: 600,
            n_max: 18,
            k_max: 6,
            seed: 1,
        }
    }
}

/// A trial on which the kernel and the oracle disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub trial: usize,
    pub instance: Instance,
    pub outcome: Outcome,
    pub expected: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EquivStats {
    pub trials: usize,
    /// Trials per problem, in [`Problem::ALL`] order.
    pub per_problem: [usize; 2],
    /// Trials per outcome: reduced, trivial-yes, trivial-no.
    pub outcomes: [usize; 3],
    pub firings: RuleCounts,
    pub mismatches: Vec<Mismatch>,
}

impl EquivStats {
    pub fn render(&self) -> String {
        let mut out = format!("trials: {}\n", self.trials);
        for (p, c) in Problem::ALL.iter().zip(self.per_problem) {
            out += &format!("trials.{p}: {c}\n");
        }
        for (o, c) in [Outcome::Reduced, Outcome::TrivialYes, Outcome::TrivialNo]
            .iter()
            .zip(self.outcomes)
        {
            out += &format!("outcome.{}: {c}\n", o.as_str());
        }
        for (rule, c) in self.firings.iter() {
            out += &format!("rule.{}: {c}\n", rule.key());
        }
        out += &format!("mismatches: {}\n", self.mismatches.len());
        out
    }
}

/// Runs either kernel.
pub fn kernelize(instance: &Instance) -> Result<KernelReport, crate::error::DecompositionError> {
    match instance.problem {
        Problem::Completion => kernelize_completion(instance),
        Problem::Deletion => kernelize_deletion(instance),
    }
}

/// Checks a kernel run against the oracle; `Err` describes the disagreement.
pub fn check_against_oracle(instance: &Instance, report: &KernelReport) -> Result<bool, String> {
    let expected = solve_exact(instance).is_some();
    let got = match report.outcome {
        Outcome::TrivialYes => true,
        Outcome::TrivialNo => false,
        Outcome::Reduced => solve_exact(&report.kernel).is_some(),
    };
    if got == expected {
        Ok(expected)
    } else {
        Err(format!(
            "oracle says {} on the input, kernel ({}) says {}",
            answer(expected),
            report.outcome.as_str(),
            answer(got)
        ))
    }
}

fn answer(yes: bool) -> &'static str {
    if yes {
        "yes"
    } else {
        "no"
    }
}

/// Number of trial templates; trial `t` uses template `(t / 2) % TEMPLATES`
/// and alternates problems with `t % 2`.
pub const TEMPLATES: usize = 6;

/// The random instance for one trial. Templates: dense and sparse
/// Erdős–Rényi graphs, multipartite blocks with pendants, a large type-I
/// star, a multipartite block with one dominant part, and a clique with a
/// pendant. Planted templates use `n` close to `n_max`, where the folding
/// rules become applicable, and fall back to Erdős–Rényi below 8 vertices.
pub fn trial_instance(config: &EquivConfig, trial: usize) -> Instance {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ (trial as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let problem = Problem::ALL[trial % 2];
    let n_max = config.n_max.max(4);
    let template = (trial / 2) % TEMPLATES;
    let n = if template < 2 {
        rng.gen_range(4..=n_max)
    } else {
        rng.gen_range(n_max.saturating_sub(3).max(4)..=n_max)
    };
    // planted shapes need a little room
    let template = if n < 8 { template % 2 } else { template };
    let k = rng.gen_range(0..=config.k_max.max(0));
    let seed = rng.gen();
    let planted = match template {
        2 => {
            let size = rng.gen_range(1..=((n - 2) / 3).min(3));
            let parts = rng.gen_range(3..=((n - 2) / size).max(3));
            format!("cm:{parts}x{size},pendants:{}", rng.gen_range(1..=2))
        }
        3 => {
            let right = rng.gen_range(1..=2);
            let left = rng.gen_range((n - 2 - right) / 2..=n - 2 - right);
            format!("tone:{left}x{right},pendants:1")
        }
        4 => format!("cm:1+1+1+1+1+{},pendants:1", rng.gen_range(1..=n - 6)),
        5 => format!("cm:{}x1,pendants:1", n - 1),
        _ => String::new(),
    };
    let p = match template {
        0 => rng.gen_range(0.2..0.7),
        1 => rng.gen_range(0.05..0.25),
        _ => rng.gen_range(0.0..0.05),
    };
    let spec: Option<PlantedSpec> = (!planted.is_empty()).then(|| planted.parse().expect("well-formed spec"));
    generate_random_instance(seed, n, p, k, problem, spec.as_ref()).expect("spec fits in n")
}

/// Runs every trial and collects rule statistics and disagreements.
pub fn run_equivalence(config: &EquivConfig) -> EquivStats {
    let mut stats = EquivStats::default();
    for trial in 0..config.trials {
        let instance = trial_instance(config, trial);
        stats.trials += 1;
        stats.per_problem[trial % 2] += 1;
        let report = match kernelize(&instance) {
            Ok(report) => report,
            Err(e) => {
                stats.mismatches.push(Mismatch {
                    trial,
                    outcome: Outcome::TrivialNo,
                    expected: solve_exact(&instance).is_some(),
                    instance,
                    detail: format!("kernel failed: {e}"),
                });
                continue;
            }
        };
        stats.outcomes[report.outcome as usize] += 1;
        stats.firings += &report.firings;
        if let Err(detail) = check_against_oracle(&instance, &report) {
            stats.mismatches.push(Mismatch {
                trial,
                expected: solve_exact(&instance).is_some(),
                outcome: report.outcome,
                instance,
                detail,
            });
        }
    }
    stats
}
