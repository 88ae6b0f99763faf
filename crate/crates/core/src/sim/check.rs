use std::collections::BTreeMap;
use std::fmt;

use crate::bft::{BftParameters, COMMIT, SEND_COMMIT, SEND_VOTE, VOTE};

use super::{NodeStatus, Scenario, SimConfig, SimTrace};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    /// Liveness was not required for this run and some correct nodes did not
    /// finish everything.
    PassUnfinished(usize),
    FailSafety(String),
    FailLiveness(String),
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass | Verdict::PassUnfinished(_))
    }

    pub fn safety_holds(&self) -> bool {
        !matches!(self, Verdict::FailSafety(_))
    }

    pub fn reason(&self) -> Option<&str> {
        match self {
            Verdict::FailSafety(r) | Verdict::FailLiveness(r) => Some(r),
            _ => None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => f.write_str("PASS"),
            Verdict::PassUnfinished(n) => write!(f, "PASS(unfinished={n})"),
            Verdict::FailSafety(_) => f.write_str("FAIL(safety)"),
            Verdict::FailLiveness(_) => f.write_str("FAIL(liveness)"),
        }
    }
}

/// Whether every correct node is required to finish: at most `f` nodes are
/// faulty. Delivery always drains the queue, so it is eventually complete.
pub fn liveness_required(config: &SimConfig) -> bool {
    config.within_budget()
}

/// Agreement verdict for one trace.
pub fn check_agreement(trace: &SimTrace, config: &SimConfig) -> Verdict {
    let updates = config.scenario.updates();
    let correct: Vec<usize> = (0..trace.statuses.len()).filter(|&n| !config.is_faulty(n)).collect();

    for &n in &correct {
        let done = trace.statuses[n].finished();
        if let Some(u) = done.iter().find(|&&u| u >= updates) {
            return Verdict::FailSafety(format!("node n{n} finished unknown update u{u}"));
        }
        for (i, u) in done.iter().enumerate() {
            if done[..i].contains(u) {
                return Verdict::FailSafety(format!("node n{n} finished update u{u} twice"));
            }
        }
    }

    if config.scenario == Scenario::SingleUpdate {
        let mut first: Option<(usize, &[u32])> = None;
        for &n in &correct {
            let done = trace.statuses[n].finished();
            if done.is_empty() {
                continue;
            }
            match first {
                None => first = Some((n, done)),
                Some((m, other)) if other != done => {
                    return Verdict::FailSafety(format!("nodes n{m} and n{n} finished different updates"));
                }
                _ => {}
            }
        }
    }

    for (i, &a) in correct.iter().enumerate() {
        for &b in &correct[i + 1..] {
            let da = trace.statuses[a].finished();
            let db = trace.statuses[b].finished();
            let common_a: Vec<u32> = da.iter().copied().filter(|u| db.contains(u)).collect();
            let common_b: Vec<u32> = db.iter().copied().filter(|u| da.contains(u)).collect();
            if common_a != common_b {
                return Verdict::FailSafety(format!("nodes n{a} and n{b} finished updates in different orders"));
            }
        }
    }

    if let Some(reason) = quorum_violation(trace, config) {
        return Verdict::FailSafety(reason);
    }

    let unfinished = correct.iter().filter(|&&n| !matches!(trace.statuses[n], NodeStatus::Finished(_))).count();
    if unfinished == 0 {
        Verdict::Pass
    } else if liveness_required(config) {
        Verdict::FailLiveness(format!("{unfinished} correct nodes did not finish"))
    } else {
        Verdict::PassUnfinished(unfinished)
    }
}

/// First correct node that sent a commit without a vote or commit quorum.
fn quorum_violation(trace: &SimTrace, config: &SimConfig) -> Option<String> {
    let params = BftParameters::new(config.r).ok()?;
    #[derive(Default)]
    struct Seen {
        votes: u32,
        commits: u32,
        voted: bool,
    }
    let mut seen: BTreeMap<(usize, u32), Seen> = BTreeMap::new();
    for e in &trace.events {
        if config.is_faulty(e.to) {
            continue;
        }
        let s = seen.entry((e.to, e.update)).or_default();
        if e.message == VOTE {
            s.votes += 1;
        } else if e.message == COMMIT {
            s.commits += 1;
        }
        if e.actions.iter().any(|a| a == SEND_VOTE) {
            s.voted = true;
        }
        if e.actions.iter().any(|a| a == SEND_COMMIT) {
            let total = s.votes.min(params.r - 1) + u32::from(s.voted);
            if total < params.vote_threshold && s.commits < params.commit_threshold {
                return Some(format!(
                    "node n{} sent commit for u{} at step {} with {} votes and {} commits",
                    e.to, e.update, e.step, total, s.commits
                ));
            }
        }
    }
    None
}
