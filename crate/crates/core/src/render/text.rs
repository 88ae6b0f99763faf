use std::fmt::Write;

use crate::fsm::StateMachine;

use super::describe_action;

const WRAP: usize = 52;

/// One block per state, in name order. Transitions that neither act nor
/// change state are omitted.
pub fn render_text(machine: &StateMachine, include_annotations: bool) -> String {
    let mut out = String::new();
    for (i, state) in machine.states().iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let _ = writeln!(out, "state: {}", state.name);
        if include_annotations && !state.annotations.is_empty() {
            for line in wrap(&state.annotations.join(" "), WRAP) {
                let _ = writeln!(out, "{line}");
            }
        }
        out.push_str("Transitions:\n");
        for t in &state.transitions {
            if t.actions.is_empty() && t.destination == state.name {
                continue;
            }
            let _ = writeln!(out, "      message: {}", t.message);
            for a in &t.actions {
                let _ = writeln!(out, "          action: {}", describe_action(a));
            }
            let _ = writeln!(out, "          transition to: {}", t.destination);
        }
    }
    out
}

/// Greedy word wrap; words longer than `width` get a line of their own.
fn wrap(text: &str, width: usize) -> Vec<String> {
    let mut lines = Vec::new();
    let mut line = String::new();
    for word in text.split_whitespace() {
        if !line.is_empty() && line.len() + 1 + word.len() > width {
            lines.push(std::mem::take(&mut line));
        }
        if !line.is_empty() {
            line.push(' ');
        }
        line.push_str(word);
    }
    if !line.is_empty() {
        lines.push(line);
    }
    lines
}
