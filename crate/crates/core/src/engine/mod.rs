//! Protocol-agnostic generation pipeline: enumerate, generate transitions,
//! prune unreachable states, and merge equivalent states to a fixpoint.

mod bisim;
mod merge;
mod prune;

use std::time::{Duration, Instant};

use thiserror::Error;

use crate::fsm::{
    check_vector, state_name, ComponentSpec, FsmError, Parameters, State, StateMachine, StateVector, Transition, FINISH,
};

pub use bisim::bisimulation_oracle;
pub use merge::{merge_equivalent_once, merge_equivalent_once_with, MergeOutcome, MergeSignature};
pub use prune::prune_unreachable;

/// Problems with a meta-model specification.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("the specification declares no components")]
    NoComponents,
    #[error("the specification declares no messages")]
    NoMessages,
    #[error("duplicate {kind} `{name}`")]
    Duplicate { kind: &'static str, name: String },
    #[error("invalid start vector: {0}")]
    StartVector(FsmError),
    #[error("state space of {0} states is too large to enumerate")]
    TooLarge(u128),
}

/// Failure while generating transitions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerationError {
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error("rule for {message} in state {state} returned an invalid successor: {source}")]
    Successor { state: String, message: String, source: FsmError },
    #[error("rule for {message} in state {state} emitted undeclared action `{action}`")]
    UndeclaredAction { state: String, message: String, action: String },
}

/// Declarative description of a machine family member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetaModelSpec {
    pub parameters: Parameters,
    pub components: Vec<ComponentSpec>,
    pub messages: Vec<String>,
    pub actions: Vec<String>,
    pub start_vector: StateVector,
}

impl MetaModelSpec {
    pub fn validate(&self) -> Result<(), SpecError> {
        if self.components.is_empty() {
            return Err(SpecError::NoComponents);
        }
        if self.messages.is_empty() {
            return Err(SpecError::NoMessages);
        }
        no_duplicates("component", self.components.iter().map(|c| c.name.as_str()))?;
        no_duplicates("message", self.messages.iter().map(String::as_str))?;
        no_duplicates("action", self.actions.iter().map(String::as_str))?;
        check_vector(&self.start_vector, &self.components).map_err(SpecError::StartVector)?;
        Ok(())
    }

    /// Product of the component domain sizes.
    pub fn state_space_size(&self) -> u128 {
        self.components.iter().map(|c| u128::from(c.domain_size())).product()
    }
}

fn no_duplicates<'a>(kind: &'static str, names: impl Iterator<Item = &'a str>) -> Result<(), SpecError> {
    let mut seen = std::collections::HashSet::new();
    for n in names {
        if !seen.insert(n) {
            return Err(SpecError::Duplicate { kind, name: n.to_string() });
        }
    }
    Ok(())
}

/// Where a rule sends a state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Successor {
    State(StateVector),
    Finish,
}

/// Result of applying one message rule to one state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleOutcome {
    pub actions: Vec<String>,
    pub successor: Successor,
    pub annotations: Vec<String>,
}

/// Per-message generation-time logic of a meta-model.
pub trait TransitionRuleSet {
    /// Applies the rule for `spec.messages[message]` to `state`.
    fn apply(&self, message: usize, state: &StateVector) -> RuleOutcome;

    /// Commentary describing a state.
    fn describe_state(&self, _state: &StateVector) -> Vec<String> {
        Vec::new()
    }

    /// Commentary for the finish state.
    fn describe_finish(&self) -> Vec<String> {
        Vec::new()
    }
}

/// Every combination of component values, first component most significant.
pub fn enumerate_states(spec: &MetaModelSpec) -> Result<Vec<StateVector>, SpecError> {
    if spec.components.is_empty() {
        return Err(SpecError::NoComponents);
    }
    let size = spec.state_space_size();
    if size > 1 << 32 {
        return Err(SpecError::TooLarge(size));
    }
    let mut out = Vec::with_capacity(size as usize);
    let mut current: Vec<_> = spec.components.iter().map(ComponentSpec::first_value).collect();
    loop {
        out.push(StateVector(current.clone()));
        let mut i = spec.components.len();
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            match spec.components[i].next_value(current[i]) {
                Some(v) => {
                    current[i] = v;
                    break;
                }
                None => current[i] = spec.components[i].first_value(),
            }
        }
    }
}

/// Builds the raw machine: one transition per (state, message) plus the finish state.
pub fn generate_transitions(
    spec: &MetaModelSpec,
    rules: &dyn TransitionRuleSet,
    states: &[StateVector],
) -> Result<StateMachine, GenerationError> {
    spec.validate()?;
    let mut out = Vec::with_capacity(states.len() + 1);
    for vector in states {
        let name = state_name(vector, &spec.components).map_err(|e| GenerationError::Successor {
            state: format!("{vector:?}"),
            message: String::new(),
            source: e,
        })?;
        let mut transitions = Vec::with_capacity(spec.messages.len());
        for (i, message) in spec.messages.iter().enumerate() {
            let outcome = rules.apply(i, vector);
            if let Some(a) = outcome.actions.iter().find(|a| !spec.actions.contains(a)) {
                return Err(GenerationError::UndeclaredAction {
                    state: name,
                    message: message.clone(),
                    action: a.clone(),
                });
            }
            let destination = match &outcome.successor {
                Successor::Finish => FINISH.to_string(),
                Successor::State(next) => state_name(next, &spec.components).map_err(|source| {
                    GenerationError::Successor { state: name.clone(), message: message.clone(), source }
                })?,
            };
            transitions.push(Transition {
                message: message.clone(),
                actions: outcome.actions,
                destination,
                annotations: outcome.annotations,
            });
        }
        out.push(State { name, annotations: rules.describe_state(vector), transitions });
    }
    out.push(State { name: FINISH.to_string(), annotations: rules.describe_finish(), transitions: Vec::new() });
    let start = state_name(&spec.start_vector, &spec.components)
        .map_err(|e| GenerationError::Spec(SpecError::StartVector(e)))?;
    Ok(StateMachine::new(
        spec.parameters,
        spec.components.clone(),
        spec.messages.clone(),
        spec.actions.clone(),
        out,
        start,
        FINISH,
    ))
}

/// Result of [`minimize_with_report`].
#[derive(Debug, Clone)]
pub struct MinimizeReport {
    pub machine: StateMachine,
    /// State count after each merge pass that changed the machine (after the
    /// prune that follows it).
    pub pass_counts: Vec<usize>,
    /// For every state of the input that survived into the result, the name
    /// of the state representing it.
    pub representative: std::collections::BTreeMap<String, String>,
}

/// Alternates pruning and merging until neither changes the machine.
pub fn minimize(machine: StateMachine) -> StateMachine {
    minimize_with_report(machine, MergeSignature::default()).machine
}

pub fn minimize_with_report(machine: StateMachine, signature: MergeSignature) -> MinimizeReport {
    let mut representative: std::collections::BTreeMap<String, String> =
        machine.states().iter().map(|s| (s.name.clone(), s.name.clone())).collect();
    let mut current = prune_unreachable(machine);
    let mut pass_counts = Vec::new();
    loop {
        let outcome = merge_equivalent_once_with(current, signature);
        let pruned = prune_unreachable(outcome.machine);
        if !outcome.changed {
            current = pruned;
            break;
        }
        let mut map = std::collections::HashMap::new();
        for class in &outcome.classes {
            for member in &class[1..] {
                map.insert(member.as_str(), class[0].as_str());
            }
        }
        for rep in representative.values_mut() {
            if let Some(r) = map.get(rep.as_str()) {
                *rep = r.to_string();
            }
        }
        pass_counts.push(pruned.state_count());
        current = pruned;
    }
    representative.retain(|_, rep| current.contains(rep));
    MinimizeReport { machine: current, pass_counts, representative }
}

/// Per-stage statistics of one pipeline run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipelineStats {
    pub parameters: Parameters,
    /// Enumerated component states.
    pub initial: usize,
    /// States after the first prune, finish state included.
    pub after_prune: usize,
    /// State count after each effective merge pass.
    pub pass_counts: Vec<usize>,
    /// Final states, finish state included.
    pub final_count: usize,
    /// Final states, finish state excluded.
    pub final_without_finish: usize,
    pub elapsed: Duration,
}

impl PipelineStats {
    pub const CSV_HEADER: &'static str = "f,r,initial,after_prune,final,passes,millis";

    pub fn passes(&self) -> usize {
        self.pass_counts.len()
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.parameters.fault_tolerance,
            self.parameters.replication_factor,
            self.initial,
            self.after_prune,
            self.final_count,
            self.passes(),
            self.elapsed.as_millis()
        )
    }
}

/// Full pipeline: enumerate, generate, prune, minimize.
pub fn generate_state_machine(
    spec: &MetaModelSpec,
    rules: &dyn TransitionRuleSet,
) -> Result<StateMachine, GenerationError> {
    generate_with_stats(spec, rules, MergeSignature::default()).map(|(m, _)| m)
}

pub fn generate_with_stats(
    spec: &MetaModelSpec,
    rules: &dyn TransitionRuleSet,
    signature: MergeSignature,
) -> Result<(StateMachine, PipelineStats), GenerationError> {
    let started = Instant::now();
    let states = enumerate_states(spec)?;
    let initial = states.len();
    let raw = generate_transitions(spec, rules, &states)?;
    drop(states);
    let pruned = prune_unreachable(raw);
    let after_prune = pruned.state_count();
    let report = minimize_with_report(pruned, signature);
    let elapsed = started.elapsed();
    let machine = report.machine;
    let stats = PipelineStats {
        parameters: spec.parameters,
        initial,
        after_prune,
        pass_counts: report.pass_counts,
        final_count: machine.state_count(),
        final_without_finish: machine.component_state_count(),
        elapsed,
    };
    Ok((machine, stats))
}
