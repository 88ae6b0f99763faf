//! The Byzantine distributed commit meta-model.

mod annotate;
mod ledger;
mod rules;

use thiserror::Error;

use crate::engine::{self, GenerationError, MergeSignature, MetaModelSpec, PipelineStats};
use crate::fsm::{ComponentSpec, FsmError, Parameters, StateMachine, StateVector, Value};

pub use annotate::annotate;
pub use ledger::{reference_transitions_hold, search_ledger, LedgerRow, REFERENCE_ROWS};
pub use rules::{BftRules, NotFreeRule, PutRule, RuleVariants};

pub const PUT: &str = "PUT";
pub const VOTE: &str = "VOTE";
pub const COMMIT: &str = "COMMIT";
pub const FREE: &str = "FREE";
pub const NOT_FREE: &str = "NOT_FREE";
pub const SEND_VOTE: &str = "SEND_VOTE";
pub const SEND_COMMIT: &str = "SEND_COMMIT";
pub const SEND_NOT_FREE: &str = "SEND_NOT_FREE";

/// Smallest replication factor tolerating one fault.
pub const MIN_REPLICATION: u32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ParameterError {
    #[error("replication factor {0} is below the minimum of {MIN_REPLICATION}")]
    TooFewReplicas(u32),
    #[error("fault tolerance must be at least 1")]
    ZeroFaults,
    #[error("replication factor {0} is too large")]
    TooManyReplicas(u32),
}

/// Maximum number of faulty participants for `r` replicas.
pub fn fault_tolerance(r: u32) -> Result<u32, ParameterError> {
    if r < MIN_REPLICATION {
        return Err(ParameterError::TooFewReplicas(r));
    }
    Ok((r - 1) / 3)
}

/// Thresholds derived from the replication factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BftParameters {
    pub r: u32,
    pub f: u32,
    /// Total votes, own vote included, needed before sending commit.
    pub vote_threshold: u32,
    /// Received commits needed to finish.
    pub commit_threshold: u32,
}

impl BftParameters {
    pub fn new(r: u32) -> Result<Self, ParameterError> {
        let f = fault_tolerance(r)?;
        if r > 1 << 16 {
            return Err(ParameterError::TooManyReplicas(r));
        }
        Ok(Self { r, f, vote_threshold: r - f, commit_threshold: f + 1 })
    }

    /// Minimal configuration tolerating `f` faults, `r = 3f + 1`.
    pub fn for_faults(f: u32) -> Result<Self, ParameterError> {
        if f == 0 {
            return Err(ParameterError::ZeroFaults);
        }
        let r = f.checked_mul(3).and_then(|x| x.checked_add(1)).ok_or(ParameterError::TooManyReplicas(u32::MAX))?;
        Self::new(r)
    }

    pub fn as_parameters(&self) -> Parameters {
        Parameters { replication_factor: self.r, fault_tolerance: self.f }
    }
}

/// Typed view of a BFT state vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct BftState {
    pub put_received: bool,
    pub votes_received: u32,
    pub vote_sent: bool,
    pub commits_received: u32,
    pub commit_sent: bool,
    pub could_choose: bool,
    pub has_chosen: bool,
}

impl BftState {
    /// Received votes plus the local vote if sent.
    pub fn total_votes(&self) -> u32 {
        self.votes_received + u32::from(self.vote_sent)
    }

    pub fn to_vector(self) -> StateVector {
        StateVector(vec![
            Value::Bool(self.put_received),
            Value::Int(self.votes_received),
            Value::Bool(self.vote_sent),
            Value::Int(self.commits_received),
            Value::Bool(self.commit_sent),
            Value::Bool(self.could_choose),
            Value::Bool(self.has_chosen),
        ])
    }

    pub fn from_vector(v: &StateVector) -> Result<Self, FsmError> {
        let bad = || FsmError::MalformedName(format!("{v:?}"));
        match v.values() {
            [Value::Bool(p), Value::Int(votes), Value::Bool(vs), Value::Int(commits), Value::Bool(cs), Value::Bool(cc), Value::Bool(hc)] => {
                Ok(Self {
                    put_received: *p,
                    votes_received: *votes,
                    vote_sent: *vs,
                    commits_received: *commits,
                    commit_sent: *cs,
                    could_choose: *cc,
                    has_chosen: *hc,
                })
            }
            _ => Err(bad()),
        }
    }

    /// Canonical state name, e.g. `T/2/F/0/F/F/F`.
    pub fn name(&self) -> String {
        let b = |x: bool| if x { "T" } else { "F" };
        format!(
            "{}/{}/{}/{}/{}/{}/{}",
            b(self.put_received),
            self.votes_received,
            b(self.vote_sent),
            self.commits_received,
            b(self.commit_sent),
            b(self.could_choose),
            b(self.has_chosen)
        )
    }

    pub fn parse(name: &str, params: &BftParameters) -> Result<Self, FsmError> {
        let v = crate::fsm::parse_state_name(name, &components(params))?;
        Self::from_vector(&v)
    }
}

/// Component declarations in name-encoding order.
pub fn components(params: &BftParameters) -> Vec<ComponentSpec> {
    let max = params.r - 1;
    vec![
        ComponentSpec::boolean("put_received"),
        ComponentSpec::bounded("votes_received", max),
        ComponentSpec::boolean("vote_sent"),
        ComponentSpec::bounded("commits_received", max),
        ComponentSpec::boolean("commit_sent"),
        ComponentSpec::boolean("could_choose"),
        ComponentSpec::boolean("has_chosen"),
    ]
}

/// Meta-model specification for replication factor `r`.
pub fn bft_spec(r: u32) -> Result<MetaModelSpec, ParameterError> {
    let params = BftParameters::new(r)?;
    Ok(MetaModelSpec {
        parameters: params.as_parameters(),
        components: components(&params),
        messages: [PUT, VOTE, COMMIT, FREE, NOT_FREE].map(String::from).to_vec(),
        actions: [SEND_VOTE, SEND_COMMIT, SEND_NOT_FREE].map(String::from).to_vec(),
        start_vector: BftState::default().to_vector(),
    })
}

#[derive(Debug, Error)]
pub enum BftError {
    #[error(transparent)]
    Parameters(#[from] ParameterError),
    #[error(transparent)]
    Generation(#[from] GenerationError),
}

/// Generates the minimized machine for `r` with the frozen rule variants.
pub fn generate(r: u32) -> Result<StateMachine, BftError> {
    generate_with(r, RuleVariants::default(), MergeSignature::default()).map(|(m, _)| m)
}

/// Generates the minimized machine and stage statistics.
pub fn generate_with(
    r: u32,
    variants: RuleVariants,
    signature: MergeSignature,
) -> Result<(StateMachine, PipelineStats), BftError> {
    let spec = bft_spec(r)?;
    let rules = BftRules::new(BftParameters::new(r)?, variants);
    Ok(engine::generate_with_stats(&spec, &rules, signature)?)
}

/// Raw machine before pruning or merging.
pub fn generate_raw(r: u32, variants: RuleVariants) -> Result<StateMachine, BftError> {
    let spec = bft_spec(r)?;
    let rules = BftRules::new(BftParameters::new(r)?, variants);
    let states = engine::enumerate_states(&spec).map_err(GenerationError::from)?;
    Ok(engine::generate_transitions(&spec, &rules, &states)?)
}
