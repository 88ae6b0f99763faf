use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::fsm::{step, StateMachine};

/// An implementation driven in lock step with the interpreter.
pub trait MachineUnderTest {
    /// Returns to the start state.
    fn reset(&mut self);
    fn state_name(&self) -> String;
    /// Delivers one message and returns the emitted actions in order.
    fn deliver(&mut self, message: &str) -> Vec<String>;
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoSimVerdict {
    Pass,
    Fail { sequence: usize, step: usize, detail: String },
}

/// Compares actions and resulting states step by step. A sequence ends early
/// once the interpreter reaches the finish state.
pub fn co_simulate(
    machine: &StateMachine,
    module: &mut dyn MachineUnderTest,
    sequences: &[Vec<String>],
) -> CoSimVerdict {
    for (i, seq) in sequences.iter().enumerate() {
        module.reset();
        let mut state = machine.start_state().to_string();
        if module.state_name() != state {
            return CoSimVerdict::Fail {
                sequence: i,
                step: 0,
                detail: format!("start state {} != {}", module.state_name(), state),
            };
        }
        for (j, message) in seq.iter().enumerate() {
            if state == machine.finish_state() {
                break;
            }
            let (actions, next) = match step(machine, &state, message) {
                Ok(x) => x,
                Err(e) => return CoSimVerdict::Fail { sequence: i, step: j, detail: e.to_string() },
            };
            let got = module.deliver(message);
            if got != actions {
                return CoSimVerdict::Fail {
                    sequence: i,
                    step: j,
                    detail: format!("{message} in {state}: actions {got:?} != {actions:?}"),
                };
            }
            let got_state = module.state_name();
            if got_state != next {
                return CoSimVerdict::Fail {
                    sequence: i,
                    step: j,
                    detail: format!("{message} in {state}: state {got_state} != {next}"),
                };
            }
            state = next.to_string();
        }
    }
    CoSimVerdict::Pass
}

/// `count` seeded sequences with lengths in `0..=max_len`.
pub fn random_sequences(machine: &StateMachine, count: usize, max_len: usize, seed: u64) -> Vec<Vec<String>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let messages = machine.messages();
    (0..count)
        .map(|_| {
            let len = rng.gen_range(0..=max_len);
            (0..len).map(|_| messages[rng.gen_range(0..messages.len())].clone()).collect()
        })
        .collect()
}
