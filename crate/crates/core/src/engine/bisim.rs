use std::collections::{BTreeMap, HashMap};

use crate::fsm::StateMachine;

/// Coarsest partition in which states of one class emit the same actions for
/// every message and move to states of the same class.
///
/// Independent of the merge pass: starts from action signatures and refines
/// by destination blocks until the block count is stable.
pub fn bisimulation_oracle(machine: &StateMachine) -> Vec<Vec<String>> {
    let states = machine.states();
    let index: HashMap<&str, usize> = states.iter().enumerate().map(|(i, s)| (s.name.as_str(), i)).collect();
    let messages = machine.messages();

    let initial: Vec<Vec<Option<&[String]>>> = states
        .iter()
        .map(|s| messages.iter().map(|m| s.transition(m).map(|t| t.actions.as_slice())).collect())
        .collect();
    let mut block = number(&initial);
    let mut count = block.iter().max().map_or(0, |b| b + 1);

    loop {
        let keys: Vec<(usize, Vec<Option<usize>>)> = states
            .iter()
            .enumerate()
            .map(|(i, s)| {
                let dests = messages
                    .iter()
                    .map(|m| s.transition(m).and_then(|t| index.get(t.destination.as_str())).map(|&j| block[j]))
                    .collect();
                (block[i], dests)
            })
            .collect();
        let next = number(&keys);
        let next_count = next.iter().max().map_or(0, |b| b + 1);
        block = next;
        if next_count == count {
            break;
        }
        count = next_count;
    }

    let mut classes: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    for (i, s) in states.iter().enumerate() {
        classes.entry(block[i]).or_default().push(s.name.clone());
    }
    let mut out: Vec<Vec<String>> = classes.into_values().collect();
    out.sort();
    out
}

fn number<K: Ord>(keys: &[K]) -> Vec<usize> {
    let mut ids: BTreeMap<&K, usize> = BTreeMap::new();
    for k in keys {
        let next = ids.len();
        ids.entry(k).or_insert(next);
    }
    keys.iter().map(|k| ids[k]).collect()
}
