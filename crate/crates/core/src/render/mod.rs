//! Text, DOT and Rust source renderings of a state machine.

mod dot;
mod source;
mod text;

use thiserror::Error;

use crate::fsm::StateMachine;

pub use dot::render_dot;
pub use source::{constant_name, render_source};
pub use text::render_text;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Format {
    Text,
    Dot,
    Source,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderOptions {
    pub format: Format,
    pub include_annotations: bool,
    pub source_module_name: String,
}

impl Default for RenderOptions {
    fn default() -> Self {
        Self { format: Format::Text, include_annotations: true, source_module_name: "commit_machine".into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RenderError {
    #[error("`{0}` is not a valid Rust module name")]
    InvalidModuleName(String),
}

/// Renders in the format selected by `options`.
pub fn render(machine: &StateMachine, options: &RenderOptions) -> Result<String, RenderError> {
    match options.format {
        Format::Text => Ok(render_text(machine, options.include_annotations)),
        Format::Dot => Ok(render_dot(machine)),
        Format::Source => render_source(machine, options),
    }
}

/// Human wording of an action identifier, e.g. `SEND_NOT_FREE` becomes
/// `send not free message`.
pub fn describe_action(action: &str) -> String {
    let words = action.to_lowercase().replace('_', " ");
    if words.starts_with("send ") {
        format!("{words} message")
    } else {
        words
    }
}
