use std::collections::{HashMap, VecDeque};

use crate::fsm::StateMachine;

/// Restricts the machine to states reachable from the start state.
pub fn prune_unreachable(machine: StateMachine) -> StateMachine {
    let keep = {
        let states = machine.states();
        let index: HashMap<&str, usize> = states.iter().enumerate().map(|(i, s)| (s.name.as_str(), i)).collect();
        let mut keep = vec![false; states.len()];
        let mut queue = VecDeque::new();
        if let Some(&i) = index.get(machine.start_state()) {
            keep[i] = true;
            queue.push_back(i);
        }
        while let Some(i) = queue.pop_front() {
            for t in &states[i].transitions {
                if let Some(&j) = index.get(t.destination.as_str()) {
                    if !keep[j] {
                        keep[j] = true;
                        queue.push_back(j);
                    }
                }
            }
        }
        keep
    };
    if keep.iter().all(|&k| k) {
        return machine;
    }
    let mut parts = machine.into_parts();
    let mut flags = keep.into_iter();
    parts.states.retain(|_| flags.next().unwrap_or(false));
    StateMachine::from_parts(parts)
}
