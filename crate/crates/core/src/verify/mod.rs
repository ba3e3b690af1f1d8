//! A registry of named, reproducible checks. Each check compares claimed
//! values against exact recomputation and yields a [`Verdict`] with
//! witnesses.
//!
//! Claims quantified over a parameter are evaluated at pseudo-random
//! rationals of bounded height drawn from a seeded ChaCha stream, so a run
//! is a deterministic function of `(ids, samples, seed)`.

pub mod chains;
mod checks;

use std::collections::BTreeSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::Value;

use crate::arith::Rational;
use crate::cycle::catalog;
use crate::cycle::CycleSum;
use crate::error::{Error, Result};

/// Whether a check is a fixed computation or samples its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Exact,
    Sampled,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
        })
    }
}

/// Static description of a registered check.
#[derive(Clone, Copy, Debug)]
pub struct Check {
    pub id: &'static str,
    pub description: &'static str,
    pub kind: Kind,
    /// The claim being tested, stated as a formula.
    pub paper_anchor: &'static str,
    /// Parameter values excluded from sampling.
    pub excluded: &'static str,
}

/// One comparison: the claim it belongs to, the input, and both values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub claim: String,
    pub input: String,
    pub expected: String,
    pub computed: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub id: String,
    pub status: Status,
    pub kind: Kind,
    pub description: String,
    pub paper_anchor: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub excluded: String,
    pub comparisons: usize,
    pub failures: usize,
    /// Failing comparisons for `fail`/`error`; one logged instance per
    /// claim for `pass`.
    pub witnesses: Vec<Witness>,
    pub notes: Vec<String>,
}

impl Verdict {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Builders for the two correction families, replaceable for mutation
/// testing of the checks that sample them.
#[derive(Clone, Copy)]
pub struct Builders {
    pub c1: fn(&Rational, &Rational, &Rational) -> Result<CycleSum>,
    pub c2: fn(&Rational, &Rational, &Rational) -> Result<CycleSum>,
}

impl Default for Builders {
    fn default() -> Self {
        Builders {
            c1: catalog::make_c1,
            c2: catalog::make_c2,
        }
    }
}

/// Run parameters.
#[derive(Clone, Copy)]
pub struct Options {
    pub samples: usize,
    pub seed: u64,
    /// Bound on `|numerator|` and denominator of sampled rationals.
    pub height: i64,
    pub builders: Builders,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            samples: 20,
            seed: 7,
            height: 50,
            builders: Builders::default(),
        }
    }
}

/// Deterministic source of rational parameters.
pub struct Sampler {
    rng: ChaCha8Rng,
    height: i64,
}

impl Sampler {
    /// Each check gets its own stream, so a check's samples do not depend
    /// on which other checks run.
    pub fn new(seed: u64, id: &str, height: i64) -> Self {
        let salt = id.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| {
            (h ^ b as u64).wrapping_mul(0x0100_0000_01b3)
        });
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed ^ salt),
            height: height.max(2),
        }
    }

    /// `n/d` with `|n| ≤ height`, `1 ≤ d ≤ height`.
    pub fn rational(&mut self) -> Rational {
        let n = self.rng.gen_range(-self.height..=self.height);
        let d = self.rng.gen_range(1..=self.height);
        crate::arith::rat(n, d)
    }

    /// A rational satisfying `keep`.
    pub fn rational_where(&mut self, keep: impl Fn(&Rational) -> bool) -> Rational {
        loop {
            let q = self.rational();
            if keep(&q) {
                return q;
            }
        }
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }
}

/// Accumulates comparisons for one check.
pub(crate) struct Recorder {
    comparisons: usize,
    failures: usize,
    errors: usize,
    witnesses: Vec<Witness>,
    logged: BTreeSet<String>,
    passing_log: Vec<Witness>,
    notes: Vec<String>,
}

/// Failing witnesses kept per verdict; the rest are counted.
const WITNESS_CAP: usize = 40;

impl Recorder {
    fn new() -> Self {
        Recorder {
            comparisons: 0,
            failures: 0,
            errors: 0,
            witnesses: Vec::new(),
            logged: BTreeSet::new(),
            passing_log: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub(crate) fn compare<T: fmt::Display + PartialEq>(
        &mut self,
        claim: &str,
        input: impl fmt::Display,
        expected: &T,
        computed: &T,
    ) -> bool {
        self.comparisons += 1;
        let w = || Witness {
            claim: claim.to_string(),
            input: input.to_string(),
            expected: expected.to_string(),
            computed: computed.to_string(),
        };
        let ok = expected == computed;
        if ok {
            if self.logged.insert(claim.to_string()) {
                self.passing_log.push(w());
            }
        } else {
            self.failures += 1;
            if self.witnesses.len() < WITNESS_CAP {
                self.witnesses.push(w());
            }
        }
        ok
    }

    /// Records an evaluation error as a failed comparison.
    pub(crate) fn error(&mut self, claim: &str, input: impl fmt::Display, err: &Error) {
        self.comparisons += 1;
        self.errors += 1;
        if self.witnesses.len() < WITNESS_CAP {
            self.witnesses.push(Witness {
                claim: claim.to_string(),
                input: input.to_string(),
                expected: "a value".into(),
                computed: format!("error: {err}"),
            });
        }
    }

    /// Unwraps `r`, recording an error witness on failure.
    pub(crate) fn ok<T>(&mut self, claim: &str, input: impl fmt::Display, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.error(claim, input, &e);
                None
            }
        }
    }

    pub(crate) fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    fn finish(mut self, check: &Check, opts: &Options) -> Verdict {
        let status = if self.errors > 0 {
            Status::Error
        } else if self.failures > 0 {
            Status::Fail
        } else {
            Status::Pass
        };
        let dropped = (self.failures + self.errors).saturating_sub(self.witnesses.len());
        if dropped > 0 {
            self.notes.push(format!("{dropped} further failing comparisons not listed"));
        }
        let witnesses = if status == Status::Pass {
            self.passing_log
        } else {
            self.witnesses
        };
        let sampled = check.kind == Kind::Sampled;
        Verdict {
            id: check.id.to_string(),
            status,
            kind: check.kind,
            description: check.description.to_string(),
            paper_anchor: check.paper_anchor.to_string(),
            samples: sampled.then_some(opts.samples),
            seed: sampled.then_some(opts.seed),
            excluded: check.excluded.to_string(),
            comparisons: self.comparisons,
            failures: self.failures + self.errors,
            witnesses,
            notes: self.notes,
        }
    }
}

/// All registered checks, in id order.
pub fn registry() -> &'static [Check] {
    checks::REGISTRY
}

pub fn find(id: &str) -> Result<&'static Check> {
    registry()
        .iter()
        .find(|c| c.id.eq_ignore_ascii_case(id))
        .ok_or_else(|| Error::UnknownCheck(id.to_string()))
}

/// Runs the given checks (all of them if `ids` is empty), in the order
/// requested.
pub fn run(ids: &[String], opts: &Options) -> Result<Vec<Verdict>> {
    let selected: Vec<&Check> = if ids.is_empty() {
        registry().iter().collect()
    } else {
        ids.iter().map(|id| find(id)).collect::<Result<_>>()?
    };
    Ok(selected.into_iter().map(|c| run_check(c, opts)).collect())
}

pub fn run_check(check: &Check, opts: &Options) -> Verdict {
    let mut rec = Recorder::new();
    let mut sampler = Sampler::new(opts.seed, check.id, opts.height);
    checks::dispatch(check.id, &mut rec, &mut sampler, opts);
    rec.finish(check, opts)
}

pub fn to_json(verdicts: &[Verdict]) -> Value {
    serde_json::to_value(verdicts).expect("verdicts serialize")
}

/// Plain-text rendering of a verdict list.
pub fn render_text(verdicts: &[Verdict]) -> String {
    let mut out = String::new();
    for v in verdicts {
        out.push_str(&format!(
            "{} {:5} {} ({} comparisons, {} failed)\n    claim: {}\n",
            v.id, v.status, v.description, v.comparisons, v.failures, v.paper_anchor
        ));
        if v.status != Status::Pass {
            for w in &v.witnesses {
                out.push_str(&format!(
                    "    [{}] {}: expected {} ; computed {}\n",
                    w.claim, w.input, w.expected, w.computed
                ));
            }
        }
        for n in &v.notes {
            out.push_str(&format!("    note: {n}\n"));
        }
    }
    out
}
