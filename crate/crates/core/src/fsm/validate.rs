use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use super::StateMachine;

/// One violated machine invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Diagnostic {
    DuplicateState(String),
    MissingStartState(String),
    MissingFinishState(String),
    FinishHasTransitions(String),
    UnreachableFinish(String),
    DanglingDestination { state: String, message: String, destination: String },
    IncompleteCoverage { state: String, message: String },
    DuplicateTransition { state: String, message: String },
    UndeclaredMessage { state: String, message: String },
    UndeclaredAction { state: String, message: String, action: String },
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostic::DuplicateState(s) => write!(f, "duplicate state name `{s}`"),
            Diagnostic::MissingStartState(s) => write!(f, "start state `{s}` is not declared"),
            Diagnostic::MissingFinishState(s) => write!(f, "finish state `{s}` is not declared"),
            Diagnostic::FinishHasTransitions(s) => write!(f, "finish state `{s}` has outgoing transitions"),
            Diagnostic::UnreachableFinish(s) => write!(f, "finish state `{s}` is unreachable from the start state"),
            Diagnostic::DanglingDestination { state, message, destination } => {
                write!(f, "dangling destination: `{state}` on {message} goes to undeclared `{destination}`")
            }
            Diagnostic::IncompleteCoverage { state, message } => {
                write!(f, "incomplete message coverage: `{state}` has no transition for {message}")
            }
            Diagnostic::DuplicateTransition { state, message } => {
                write!(f, "nondeterminism: `{state}` has several transitions for {message}")
            }
            Diagnostic::UndeclaredMessage { state, message } => {
                write!(f, "`{state}` has a transition for undeclared message {message}")
            }
            Diagnostic::UndeclaredAction { state, message, action } => {
                write!(f, "`{state}` on {message} emits undeclared action {action}")
            }
        }
    }
}

/// Lists every invariant violation; an empty list means the machine is valid.
pub fn validate(machine: &StateMachine) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    let mut names = HashSet::new();
    for s in machine.states() {
        if !names.insert(s.name.as_str()) {
            out.push(Diagnostic::DuplicateState(s.name.clone()));
        }
    }
    let start = machine.start_state();
    let finish = machine.finish_state();
    if !names.contains(start) {
        out.push(Diagnostic::MissingStartState(start.to_string()));
    }
    if !names.contains(finish) {
        out.push(Diagnostic::MissingFinishState(finish.to_string()));
    }
    let messages: HashSet<&str> = machine.messages().iter().map(String::as_str).collect();
    let actions: HashSet<&str> = machine.actions().iter().map(String::as_str).collect();

    for s in machine.states() {
        if s.name == finish {
            if !s.transitions.is_empty() {
                out.push(Diagnostic::FinishHasTransitions(s.name.clone()));
            }
            continue;
        }
        let mut seen = HashSet::new();
        for t in &s.transitions {
            if !messages.contains(t.message.as_str()) {
                out.push(Diagnostic::UndeclaredMessage { state: s.name.clone(), message: t.message.clone() });
            } else if !seen.insert(t.message.as_str()) {
                out.push(Diagnostic::DuplicateTransition { state: s.name.clone(), message: t.message.clone() });
            }
            for a in &t.actions {
                if !actions.contains(a.as_str()) {
                    out.push(Diagnostic::UndeclaredAction {
                        state: s.name.clone(),
                        message: t.message.clone(),
                        action: a.clone(),
                    });
                }
            }
            if !names.contains(t.destination.as_str()) {
                out.push(Diagnostic::DanglingDestination {
                    state: s.name.clone(),
                    message: t.message.clone(),
                    destination: t.destination.clone(),
                });
            }
        }
        for m in machine.messages() {
            if !seen.contains(m.as_str()) {
                out.push(Diagnostic::IncompleteCoverage { state: s.name.clone(), message: m.clone() });
            }
        }
    }

    if names.contains(start) && names.contains(finish) && !reaches(machine, start, finish) {
        out.push(Diagnostic::UnreachableFinish(finish.to_string()));
    }
    out
}

fn reaches(machine: &StateMachine, from: &str, to: &str) -> bool {
    let index: HashMap<&str, usize> = machine.states().iter().enumerate().map(|(i, s)| (s.name.as_str(), i)).collect();
    let mut seen = vec![false; machine.states().len()];
    let mut queue = VecDeque::new();
    if let Some(&i) = index.get(from) {
        seen[i] = true;
        queue.push_back(i);
    }
    while let Some(i) = queue.pop_front() {
        let s = &machine.states()[i];
        if s.name == to {
            return true;
        }
        for t in &s.transitions {
            if let Some(&j) = index.get(t.destination.as_str()) {
                if !seen[j] {
                    seen[j] = true;
                    queue.push_back(j);
                }
            }
        }
    }
    false
}
