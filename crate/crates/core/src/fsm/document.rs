use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{ComponentKind, ComponentSpec, Parameters, State, StateMachine, Transition};

/// Failure to read a machine document.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("invalid machine document: {0}")]
    Schema(String),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DocumentRepr {
    replication_factor: u32,
    fault_tolerance: u32,
    components: Vec<ComponentRepr>,
    messages: Vec<String>,
    actions: Vec<String>,
    start_state: String,
    finish_state: String,
    states: Vec<StateRepr>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComponentRepr {
    name: String,
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    max: Option<u32>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct StateRepr {
    name: String,
    annotations: Vec<String>,
    transitions: Vec<TransitionRepr>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TransitionRepr {
    message: String,
    actions: Vec<String>,
    to: String,
    annotations: Vec<String>,
}

const BOOLEAN: &str = "boolean";
const BOUNDED: &str = "bounded-integer";

/// Canonical JSON document: states sorted by name, transitions in declared
/// message order, two-space indentation, trailing newline.
pub fn serialize(machine: &StateMachine) -> String {
    let repr = DocumentRepr {
        replication_factor: machine.parameters().replication_factor,
        fault_tolerance: machine.parameters().fault_tolerance,
        components: machine
            .components()
            .iter()
            .map(|c| match c.kind {
                ComponentKind::Boolean => ComponentRepr { name: c.name.clone(), kind: BOOLEAN.into(), max: None },
                ComponentKind::BoundedInteger { max } => {
                    ComponentRepr { name: c.name.clone(), kind: BOUNDED.into(), max: Some(max) }
                }
            })
            .collect(),
        messages: machine.messages().to_vec(),
        actions: machine.actions().to_vec(),
        start_state: machine.start_state().to_string(),
        finish_state: machine.finish_state().to_string(),
        states: machine
            .states()
            .iter()
            .map(|s| StateRepr {
                name: s.name.clone(),
                annotations: s.annotations.clone(),
                transitions: s
                    .transitions
                    .iter()
                    .map(|t| TransitionRepr {
                        message: t.message.clone(),
                        actions: t.actions.clone(),
                        to: t.destination.clone(),
                        annotations: t.annotations.clone(),
                    })
                    .collect(),
            })
            .collect(),
    };
    let mut text = serde_json::to_string_pretty(&repr).expect("document serialization cannot fail");
    text.push('\n');
    text
}

/// Reads a machine document. Structural problems are reported; machine
/// invariants such as dangling destinations are left to `validate`.
pub fn deserialize(text: &str) -> Result<StateMachine, DocumentError> {
    let repr: DocumentRepr = serde_json::from_str(text).map_err(|e| match e.classify() {
        serde_json::error::Category::Data => DocumentError::Schema(e.to_string()),
        _ => DocumentError::Parse { line: e.line(), column: e.column(), message: e.to_string() },
    })?;

    let mut components = Vec::with_capacity(repr.components.len());
    let mut component_names = HashSet::new();
    for c in repr.components {
        if !component_names.insert(c.name.clone()) {
            return Err(DocumentError::Schema(format!("duplicate component `{}`", c.name)));
        }
        let kind = match (c.kind.as_str(), c.max) {
            (BOOLEAN, None) => ComponentKind::Boolean,
            (BOOLEAN, Some(_)) => {
                return Err(DocumentError::Schema(format!("boolean component `{}` must not declare max", c.name)))
            }
            (BOUNDED, Some(max)) => ComponentKind::BoundedInteger { max },
            (BOUNDED, None) => {
                return Err(DocumentError::Schema(format!("bounded-integer component `{}` needs max", c.name)))
            }
            (other, _) => return Err(DocumentError::Schema(format!("unknown component kind `{other}`"))),
        };
        components.push(ComponentSpec { name: c.name, kind });
    }
    unique("message", &repr.messages)?;
    unique("action", &repr.actions)?;
    if repr.messages.is_empty() {
        return Err(DocumentError::Schema("at least one message is required".into()));
    }

    let states = repr
        .states
        .into_iter()
        .map(|s| State {
            name: s.name,
            annotations: s.annotations,
            transitions: s
                .transitions
                .into_iter()
                .map(|t| Transition {
                    message: t.message,
                    actions: t.actions,
                    destination: t.to,
                    annotations: t.annotations,
                })
                .collect(),
        })
        .collect();

    Ok(StateMachine::new(
        Parameters { replication_factor: repr.replication_factor, fault_tolerance: repr.fault_tolerance },
        components,
        repr.messages,
        repr.actions,
        states,
        repr.start_state,
        repr.finish_state,
    ))
}

fn unique(what: &str, items: &[String]) -> Result<(), DocumentError> {
    let mut seen = HashSet::new();
    for i in items {
        if !seen.insert(i) {
            return Err(DocumentError::Schema(format!("duplicate {what} `{i}`")));
        }
    }
    Ok(())
}
