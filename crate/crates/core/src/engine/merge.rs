use std::collections::HashMap;

use crate::fsm::{State, StateMachine};

/// How a state's outgoing transitions are compared when merging.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MergeSignature {
    /// A transition back to the state itself compares equal to any other
    /// self-loop with the same actions.
    #[default]
    SelfLoopAware,
    /// Destinations are compared by name, so self-loops of different states
    /// never match.
    Literal,
}

/// Result of one merge pass.
#[derive(Debug, Clone)]
pub struct MergeOutcome {
    pub machine: StateMachine,
    pub changed: bool,
    /// Merged classes of size > 1, each sorted with the representative first.
    pub classes: Vec<Vec<String>>,
}

#[derive(Hash, PartialEq, Eq)]
enum Target<'a> {
    SelfLoop,
    Named(&'a str),
}

/// One merge pass with the default signature.
pub fn merge_equivalent_once(machine: StateMachine) -> MergeOutcome {
    merge_equivalent_once_with(machine, MergeSignature::default())
}

/// Finish flag plus `(message, actions, target)` per transition.
type Signature<'a> = (bool, Vec<(&'a str, &'a [String], Target<'a>)>);

/// Collapses states with identical outgoing signatures into their
/// lexicographically smallest member and redirects incoming transitions.
pub fn merge_equivalent_once_with(machine: StateMachine, signature: MergeSignature) -> MergeOutcome {
    let classes: Vec<Vec<usize>> = {
        let finish = machine.finish_state();
        let mut groups: HashMap<Signature, Vec<usize>> = HashMap::new();
        for (i, s) in machine.states().iter().enumerate() {
            let key: Vec<_> = s
                .transitions
                .iter()
                .map(|t| {
                    let target = if signature == MergeSignature::SelfLoopAware && t.destination == s.name {
                        Target::SelfLoop
                    } else {
                        Target::Named(t.destination.as_str())
                    };
                    (t.message.as_str(), t.actions.as_slice(), target)
                })
                .collect();
            groups.entry((s.name == finish, key)).or_default().push(i);
        }
        // States are name-sorted, so each group's first index is its smallest name.
        let mut classes: Vec<Vec<usize>> = groups.into_values().filter(|g| g.len() > 1).collect();
        classes.sort();
        classes
    };
    if classes.is_empty() {
        return MergeOutcome { machine, changed: false, classes: Vec::new() };
    }

    let mut parts = machine.into_parts();
    let mut rep: Vec<usize> = (0..parts.states.len()).collect();
    for class in &classes {
        for &member in &class[1..] {
            rep[member] = class[0];
        }
    }
    let names: Vec<String> = parts.states.iter().map(|s| s.name.clone()).collect();
    let names_ref = &names;
    let rename: HashMap<&str, &str> = classes
        .iter()
        .flat_map(|c| c[1..].iter().map(move |&m| (names_ref[m].as_str(), names_ref[c[0]].as_str())))
        .collect();

    let mut merged_annotations: HashMap<usize, Vec<String>> = HashMap::new();
    for class in &classes {
        let mut lines: Vec<String> = Vec::new();
        for &m in class {
            for line in &parts.states[m].annotations {
                if !lines.contains(line) {
                    lines.push(line.clone());
                }
            }
        }
        merged_annotations.insert(class[0], lines);
    }

    let old = std::mem::take(&mut parts.states);
    parts.states = old
        .into_iter()
        .enumerate()
        .filter(|(i, _)| rep[*i] == *i)
        .map(|(i, mut s): (usize, State)| {
            if let Some(lines) = merged_annotations.remove(&i) {
                s.annotations = lines;
            }
            for t in &mut s.transitions {
                if let Some(r) = rename.get(t.destination.as_str()) {
                    t.destination = r.to_string();
                }
            }
            s
        })
        .collect();
    if let Some(r) = rename.get(parts.start_state.as_str()) {
        parts.start_state = r.to_string();
    }

    let class_names = classes.iter().map(|c| c.iter().map(|&i| names[i].clone()).collect()).collect();
    MergeOutcome { machine: StateMachine::from_parts(parts), changed: true, classes: class_names }
}
