use std::fmt::Write;

use crate::fsm::StateMachine;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// DOT digraph with one node per state and one edge per transition.
///
/// The finish state is double-circled and the start state drawn bold.
pub fn render_dot(machine: &StateMachine) -> String {
    let p = machine.parameters();
    let mut out = String::new();
    let _ = writeln!(out, "digraph {} {{", quote(&format!("commit_r{}_f{}", p.replication_factor, p.fault_tolerance)));
    out.push_str("  rankdir=LR;\n");
    out.push_str("  node [shape=circle, fontname=\"monospace\"];\n");
    out.push_str("  edge [fontname=\"monospace\"];\n");
    for s in machine.states() {
        let mut attrs = Vec::new();
        if s.name == machine.finish_state() {
            attrs.push("shape=doublecircle");
        }
        if s.name == machine.start_state() {
            attrs.push("style=bold");
            attrs.push("xlabel=\"start\"");
        }
        if attrs.is_empty() {
            let _ = writeln!(out, "  {};", quote(&s.name));
        } else {
            let _ = writeln!(out, "  {} [{}];", quote(&s.name), attrs.join(", "));
        }
    }
    for s in machine.states() {
        for t in &s.transitions {
            let label = if t.actions.is_empty() {
                t.message.clone()
            } else {
                format!("{} / {}", t.message, t.actions.join(","))
            };
            let _ = writeln!(out, "  {} -> {} [label={}];", quote(&s.name), quote(&t.destination), quote(&label));
        }
    }
    out.push_str("}\n");
    out
}
