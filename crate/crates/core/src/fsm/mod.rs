//! Abstract state machine model shared by every generated family member.

mod document;
mod naming;
mod validate;

use std::fmt;

use thiserror::Error;

pub use document::{deserialize, serialize, DocumentError};
pub use naming::{check_vector, parse_state_name, state_name};
pub use validate::{validate, Diagnostic};

/// Reserved name of the finish state.
pub const FINISH: &str = "FINISH";

/// Errors raised by naming and interpretation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FsmError {
    #[error("state vector has {found} values but {expected} components are declared")]
    Arity { expected: usize, found: usize },
    #[error("value {value} is outside the domain of component `{component}`")]
    Domain { component: String, value: String },
    #[error("malformed state name `{0}`")]
    MalformedName(String),
    #[error("unknown state `{0}`")]
    UnknownState(String),
    #[error("unknown message `{0}`")]
    UnknownMessage(String),
    #[error("state `{state}` has no transition for message `{message}`")]
    MissingTransition { state: String, message: String },
    #[error("state `{0}` is terminal")]
    TerminalState(String),
}

/// Domain of a single state component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ComponentKind {
    Boolean,
    /// Integer in `0..=max`.
    BoundedInteger {
        max: u32,
    },
}

/// One declared state component.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ComponentSpec {
    pub name: String,
    pub kind: ComponentKind,
}

impl ComponentSpec {
    pub fn boolean(name: impl Into<String>) -> Self {
        Self { name: name.into(), kind: ComponentKind::Boolean }
    }

    pub fn bounded(name: impl Into<String>, max: u32) -> Self {
        Self { name: name.into(), kind: ComponentKind::BoundedInteger { max } }
    }

    /// Number of distinct values the component can take.
    pub fn domain_size(&self) -> u64 {
        match self.kind {
            ComponentKind::Boolean => 2,
            ComponentKind::BoundedInteger { max } => u64::from(max) + 1,
        }
    }

    pub fn admits(&self, value: Value) -> bool {
        match (self.kind, value) {
            (ComponentKind::Boolean, Value::Bool(_)) => true,
            (ComponentKind::BoundedInteger { max }, Value::Int(v)) => v <= max,
            _ => false,
        }
    }

    /// Smallest value of the domain.
    pub fn first_value(&self) -> Value {
        match self.kind {
            ComponentKind::Boolean => Value::Bool(false),
            ComponentKind::BoundedInteger { .. } => Value::Int(0),
        }
    }

    /// Successor of `value` in domain order, or `None` at the top.
    pub fn next_value(&self, value: Value) -> Option<Value> {
        match (self.kind, value) {
            (ComponentKind::Boolean, Value::Bool(false)) => Some(Value::Bool(true)),
            (ComponentKind::BoundedInteger { max }, Value::Int(v)) if v < max => Some(Value::Int(v + 1)),
            _ => None,
        }
    }
}

/// A single component value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Value {
    Bool(bool),
    Int(u32),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Bool(true) => f.write_str("T"),
            Value::Bool(false) => f.write_str("F"),
            Value::Int(v) => write!(f, "{v}"),
        }
    }
}

/// One assignment of values to all declared components, in declaration order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StateVector(pub Vec<Value>);

impl StateVector {
    pub fn values(&self) -> &[Value] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Replication factor and fault tolerance a machine was generated for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Parameters {
    pub replication_factor: u32,
    pub fault_tolerance: u32,
}

/// Outgoing transition for one message.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transition {
    pub message: String,
    pub actions: Vec<String>,
    pub destination: String,
    pub annotations: Vec<String>,
}

/// A named state with its outgoing transitions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct State {
    pub name: String,
    pub annotations: Vec<String>,
    pub transitions: Vec<Transition>,
}

impl State {
    pub fn transition(&self, message: &str) -> Option<&Transition> {
        self.transitions.iter().find(|t| t.message == message)
    }
}

/// A generated state machine.
///
/// States are kept sorted by name and transitions by declared message
/// order, so equal machines compare equal and serialize identically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateMachine {
    parameters: Parameters,
    components: Vec<ComponentSpec>,
    messages: Vec<String>,
    actions: Vec<String>,
    states: Vec<State>,
    start_state: String,
    finish_state: String,
}

impl StateMachine {
    /// Assembles a machine in canonical order. No invariants are checked;
    /// use [`validate`] for that.
    pub fn new(
        parameters: Parameters,
        components: Vec<ComponentSpec>,
        messages: Vec<String>,
        actions: Vec<String>,
        mut states: Vec<State>,
        start_state: impl Into<String>,
        finish_state: impl Into<String>,
    ) -> Self {
        for state in &mut states {
            state.transitions.sort_by_key(|t| messages.iter().position(|m| *m == t.message).unwrap_or(usize::MAX));
        }
        states.sort_by(|a, b| a.name.cmp(&b.name));
        Self {
            parameters,
            components,
            messages,
            actions,
            states,
            start_state: start_state.into(),
            finish_state: finish_state.into(),
        }
    }

    pub fn parameters(&self) -> Parameters {
        self.parameters
    }

    pub fn components(&self) -> &[ComponentSpec] {
        &self.components
    }

    pub fn messages(&self) -> &[String] {
        &self.messages
    }

    pub fn actions(&self) -> &[String] {
        &self.actions
    }

    /// States in name order.
    pub fn states(&self) -> &[State] {
        &self.states
    }

    pub fn start_state(&self) -> &str {
        &self.start_state
    }

    pub fn finish_state(&self) -> &str {
        &self.finish_state
    }

    pub fn state(&self, name: &str) -> Option<&State> {
        self.states.binary_search_by(|s| s.name.as_str().cmp(name)).ok().map(|i| &self.states[i])
    }

    pub fn contains(&self, name: &str) -> bool {
        self.state(name).is_some()
    }

    /// Number of states, counting the finish state when present.
    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    /// Number of states excluding the finish state.
    pub fn component_state_count(&self) -> usize {
        self.states.iter().filter(|s| s.name != self.finish_state).count()
    }

    pub fn transition_count(&self) -> usize {
        self.states.iter().map(|s| s.transitions.len()).sum()
    }

    /// Decomposes the machine into its parts, states in name order.
    pub fn into_parts(self) -> MachineParts {
        MachineParts {
            parameters: self.parameters,
            components: self.components,
            messages: self.messages,
            actions: self.actions,
            states: self.states,
            start_state: self.start_state,
            finish_state: self.finish_state,
        }
    }

    pub fn from_parts(parts: MachineParts) -> Self {
        Self::new(
            parts.parameters,
            parts.components,
            parts.messages,
            parts.actions,
            parts.states,
            parts.start_state,
            parts.finish_state,
        )
    }
}

/// Owned fields of a [`StateMachine`].
#[derive(Debug, Clone)]
pub struct MachineParts {
    pub parameters: Parameters,
    pub components: Vec<ComponentSpec>,
    pub messages: Vec<String>,
    pub actions: Vec<String>,
    pub states: Vec<State>,
    pub start_state: String,
    pub finish_state: String,
}

/// Executes one recorded transition.
///
/// Returns the transition's actions and destination.
pub fn step<'m>(machine: &'m StateMachine, state: &str, message: &str) -> Result<(&'m [String], &'m str), FsmError> {
    if !machine.messages.iter().any(|m| m == message) {
        return Err(FsmError::UnknownMessage(message.to_string()));
    }
    if state == machine.finish_state {
        return Err(FsmError::TerminalState(state.to_string()));
    }
    let s = machine.state(state).ok_or_else(|| FsmError::UnknownState(state.to_string()))?;
    let t = s
        .transition(message)
        .ok_or_else(|| FsmError::MissingTransition { state: state.to_string(), message: message.to_string() })?;
    Ok((&t.actions, &t.destination))
}

/// Outcome of feeding a message sequence to a machine from its start state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Run {
    /// Actions of each processed message.
    pub actions: Vec<Vec<String>>,
    /// Whether the finish state was reached; later messages are not processed.
    pub finished: bool,
    pub final_state: String,
}

/// Steps `machine` through `messages` from the start state, stopping at the
/// finish state.
pub fn run_sequence<S: AsRef<str>>(machine: &StateMachine, messages: &[S]) -> Result<Run, FsmError> {
    let mut state = machine.start_state();
    let mut actions = Vec::with_capacity(messages.len());
    for m in messages {
        if state == machine.finish_state() {
            break;
        }
        let (a, next) = step(machine, state, m.as_ref())?;
        actions.push(a.to_vec());
        state = next;
    }
    Ok(Run { actions, finished: state == machine.finish_state(), final_state: state.to_string() })
}
