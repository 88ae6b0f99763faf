use std::collections::HashMap;
use std::fmt::Write;

use crate::fsm::StateMachine;

use super::{RenderError, RenderOptions};

const KEYWORDS: &[&str] = &[
    "as", "async", "await", "break", "const", "continue", "crate", "dyn", "else", "enum", "extern", "false", "fn",
    "for", "gen", "if", "impl", "in", "let", "loop", "match", "mod", "move", "mut", "pub", "ref", "return", "self",
    "static", "struct", "super", "trait", "true", "type", "unsafe", "use", "where", "while", "abstract", "become",
    "box", "do", "final", "macro", "override", "priv", "try", "typeof", "unsized", "virtual", "yield",
];

fn is_module_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_lowercase() || c == '_')
        && chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_')
        && name != "_"
        && !KEYWORDS.contains(&name)
}

fn identifier(raw: &str) -> String {
    let mut out: String = raw.chars().map(|c| if c.is_ascii_alphanumeric() { c } else { '_' }).collect();
    if out.is_empty() || out.starts_with(|c: char| c.is_ascii_digit()) || KEYWORDS.contains(&out.as_str()) {
        out.insert(0, '_');
    }
    out
}

/// Constant name for a state: `F/0/F/0/F/F/F` becomes `S_F_0_F_0_F_F_F`; the
/// finish state keeps its name.
pub fn constant_name(state: &str, finish: &str) -> String {
    if state == finish {
        identifier(state)
    } else {
        format!("S_{}", identifier(state))
    }
}

fn method_name(raw: &str) -> String {
    identifier(&raw.to_lowercase())
}

fn comment(out: &mut String, indent: &str, marker: &str, lines: &[String]) {
    for line in lines {
        let _ = writeln!(out, "{indent}{marker} {}", line.replace(['\n', '\r'], " "));
    }
}

fn literal(s: &str) -> String {
    format!("{s:?}")
}

/// Rust module implementing the machine with one handler per message.
///
/// Each handler matches on the current state, calls the action sink in
/// recorded order, and stores the destination. Reaching the finish state
/// also calls `on_finish`.
pub fn render_source(machine: &StateMachine, options: &RenderOptions) -> Result<String, RenderError> {
    if !is_module_name(&options.source_module_name) {
        return Err(RenderError::InvalidModuleName(options.source_module_name.clone()));
    }
    let notes = options.include_annotations;
    let finish = machine.finish_state();
    let p = machine.parameters();

    let mut constants: HashMap<&str, String> = HashMap::new();
    let mut taken: HashMap<String, usize> = HashMap::new();
    for s in machine.states() {
        let mut c = constant_name(&s.name, finish);
        let n = taken.entry(c.clone()).or_insert(0);
        *n += 1;
        if *n > 1 {
            c = format!("{c}_{n}");
        }
        constants.insert(s.name.as_str(), c);
    }
    let constant = |name: &str| constants.get(name).cloned().unwrap_or_else(|| constant_name(name, finish));
    let messages: Vec<(String, String)> = machine.messages().iter().map(|m| (m.clone(), identifier(m))).collect();
    let mut sink_methods: Vec<String> = machine.actions().iter().map(|a| method_name(a)).collect();
    sink_methods.push("on_finish".into());

    let mut out = String::new();
    let _ = writeln!(out, "//! `{}`: generated commit protocol state machine.", options.source_module_name);
    out.push_str("//!\n");
    let _ = writeln!(
        out,
        "//! Replication factor {}, fault tolerance {}; {} states, {} messages.",
        p.replication_factor,
        p.fault_tolerance,
        machine.state_count(),
        machine.messages().len()
    );
    out.push_str("//! Generated by `metafsm render --format source`; do not edit.\n\n");
    out.push_str("#![allow(non_camel_case_types, dead_code, unused_variables, clippy::all)]\n\n");

    out.push_str("/// Receiver of the actions emitted by transitions.\n");
    out.push_str("pub trait ActionSink {\n");
    for m in &sink_methods {
        let _ = writeln!(out, "    fn {m}(&mut self);");
    }
    out.push_str("}\n\n");

    out.push_str("/// Messages the machine accepts.\n");
    out.push_str("#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]\n");
    out.push_str("pub enum Message {\n");
    for (_, id) in &messages {
        let _ = writeln!(out, "    {id},");
    }
    out.push_str("}\n\n");
    out.push_str("impl Message {\n");
    let _ = writeln!(out, "    pub const ALL: [Message; {}] = [", messages.len());
    for (_, id) in &messages {
        let _ = writeln!(out, "        Message::{id},");
    }
    out.push_str("    ];\n\n");
    out.push_str("    pub fn name(self) -> &'static str {\n        match self {\n");
    for (name, id) in &messages {
        let _ = writeln!(out, "            Message::{id} => {},", literal(name));
    }
    out.push_str("        }\n    }\n\n");
    out.push_str("    pub fn from_name(name: &str) -> Option<Message> {\n        match name {\n");
    for (name, id) in &messages {
        let _ = writeln!(out, "            {} => Some(Message::{id}),", literal(name));
    }
    out.push_str("            _ => None,\n        }\n    }\n}\n\n");

    out.push_str("/// Machine states.\n");
    out.push_str("#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]\n");
    out.push_str("pub enum State {\n");
    for s in machine.states() {
        if notes {
            comment(&mut out, "    ", "///", &s.annotations);
        }
        let _ = writeln!(out, "    {},", constant(&s.name));
    }
    out.push_str("}\n\n");
    out.push_str("impl State {\n");
    let _ = writeln!(out, "    pub const ALL: [State; {}] = [", machine.state_count());
    for s in machine.states() {
        let _ = writeln!(out, "        State::{},", constant(&s.name));
    }
    out.push_str("    ];\n\n");
    out.push_str("    /// Canonical state name.\n");
    out.push_str("    pub fn name(self) -> &'static str {\n        match self {\n");
    for s in machine.states() {
        let _ = writeln!(out, "            State::{} => {},", constant(&s.name), literal(&s.name));
    }
    out.push_str("        }\n    }\n\n");
    out.push_str("    pub fn from_name(name: &str) -> Option<State> {\n        match name {\n");
    for s in machine.states() {
        let _ = writeln!(out, "            {} => Some(State::{}),", literal(&s.name), constant(&s.name));
    }
    out.push_str("            _ => None,\n        }\n    }\n}\n\n");

    let _ = writeln!(out, "pub const START: State = State::{};", constant(machine.start_state()));
    let _ = writeln!(out, "pub const FINISH: State = State::{};\n", constant(finish));

    out.push_str("/// One protocol instance.\n");
    out.push_str("#[derive(Debug, Clone, PartialEq, Eq)]\n");
    out.push_str("pub struct Machine {\n    state: State,\n}\n\n");
    out.push_str("impl Default for Machine {\n    fn default() -> Self {\n        Self::new()\n    }\n}\n\n");
    out.push_str("impl Machine {\n");
    out.push_str("    pub fn new() -> Self {\n        Self { state: START }\n    }\n\n");
    out.push_str("    pub fn state(&self) -> State {\n        self.state\n    }\n\n");
    out.push_str("    pub fn set_state(&mut self, state: State) {\n        self.state = state;\n    }\n\n");
    out.push_str("    pub fn is_finished(&self) -> bool {\n        self.state == FINISH\n    }\n\n");
    out.push_str("    /// Dispatches to the handler for `message`.\n");
    out.push_str("    pub fn receive<S: ActionSink + ?Sized>(&mut self, message: Message, sink: &mut S) {\n");
    out.push_str("        match message {\n");
    for (name, id) in &messages {
        let _ = writeln!(out, "            Message::{id} => self.receive_{}(sink),", method_name(name));
    }
    out.push_str("        }\n    }\n");

    for (name, _) in &messages {
        out.push('\n');
        let _ = writeln!(out, "    /// Handles {name}.");
        let _ = writeln!(
            out,
            "    pub fn receive_{}<S: ActionSink + ?Sized>(&mut self, sink: &mut S) {{",
            method_name(name)
        );
        out.push_str("        match self.state {\n");
        for s in machine.states() {
            let c = constant(&s.name);
            let Some(t) = s.transition(name) else {
                let _ = writeln!(out, "            State::{c} => {{}}");
                continue;
            };
            if t.actions.is_empty() && t.destination == s.name && !(notes && !t.annotations.is_empty()) {
                let _ = writeln!(out, "            State::{c} => {{}}");
                continue;
            }
            let _ = writeln!(out, "            State::{c} => {{");
            if notes {
                comment(&mut out, "                ", "//", &t.annotations);
            }
            for a in &t.actions {
                let _ = writeln!(out, "                sink.{}();", method_name(a));
            }
            if t.destination != s.name {
                let _ = writeln!(out, "                self.set_state(State::{});", constant(&t.destination));
                if t.destination == finish {
                    out.push_str("                sink.on_finish();\n");
                }
            }
            out.push_str("            }\n");
        }
        out.push_str("        }\n    }\n");
    }
    out.push_str("}\n");
    Ok(out)
}
