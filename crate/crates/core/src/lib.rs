//! Meta-model generation of Byzantine commit protocol state machines.
//!
//! The crate is organised as a pipeline:
//!
//! - [`fsm`]: the abstract machine model, naming, interpreter and document format.
//! - [`engine`]: protocol-agnostic enumeration, transition generation, pruning and merging.
//! - [`bft`]: the distributed commit meta-model and its commentary.
//! - [`render`]: text, DOT and Rust source renderers.
//! - [`sim`]: a seeded fault-injecting network simulation and co-simulation checks.
//! - [`cli`]: the `metafsm` command-line front end.

pub mod bft;
pub mod cli;
pub mod engine;
pub mod fsm;
pub mod render;
pub mod sim;

pub use engine::{generate_state_machine, MetaModelSpec, TransitionRuleSet};
pub use fsm::{StateMachine, FINISH};
