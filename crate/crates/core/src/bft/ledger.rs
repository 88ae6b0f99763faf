use crate::engine::MergeSignature;
use crate::fsm::StateMachine;

use super::{
    generate_raw, generate_with, BftError, RuleVariants, COMMIT, FREE, SEND_COMMIT, SEND_NOT_FREE, SEND_VOTE, VOTE,
};

/// Reference rows `(f, r, initial states, final states)` the family is checked against.
pub const REFERENCE_ROWS: [(u32, u32, usize, usize); 5] =
    [(1, 4, 512, 33), (2, 7, 1568, 85), (4, 13, 5408, 261), (8, 25, 20000, 901), (15, 46, 67712, 2945)];

/// Whether state `T/2/F/0/F/F/F` has the three reference transitions.
pub fn reference_transitions_hold(machine: &StateMachine) -> bool {
    let Some(s) = machine.state("T/2/F/0/F/F/F") else {
        return false;
    };
    let expect = [
        (VOTE, vec![SEND_VOTE, SEND_COMMIT], "T/3/T/0/T/F/F"),
        (COMMIT, vec![], "T/2/F/1/F/F/F"),
        (FREE, vec![SEND_VOTE, SEND_COMMIT, SEND_NOT_FREE], "T/2/T/0/T/T/T"),
    ];
    expect
        .iter()
        .all(|(m, actions, dest)| s.transition(m).is_some_and(|t| t.actions == *actions && t.destination == *dest))
}

/// Result of regenerating the family under one variant combination.
#[derive(Debug, Clone)]
pub struct LedgerRow {
    pub variants: RuleVariants,
    /// States of the pruned r=4 machine, finish state included.
    pub pruned_r4: usize,
    /// Final state counts for the requested replication factors.
    pub finals: Vec<usize>,
    pub reference_transitions: bool,
}

impl LedgerRow {
    /// True when the final counts equal `expected` and the reference transitions hold.
    pub fn matches(&self, expected: &[usize]) -> bool {
        self.reference_transitions && self.finals == expected
    }
}

/// Brute-force search over every rule variant combination.
///
/// `rs` lists the replication factors to regenerate. Rows whose r=4 machine
/// fails the reference transitions skip the larger factors.
pub fn search_ledger(rs: &[u32], signature: MergeSignature) -> Result<Vec<LedgerRow>, BftError> {
    let mut out = Vec::new();
    for variants in RuleVariants::all() {
        let raw = generate_raw(4, variants)?;
        let pruned_r4 = crate::engine::prune_unreachable(raw).state_count();
        let (m4, _) = generate_with(4, variants, signature)?;
        let reference_transitions = reference_transitions_hold(&m4);
        let mut finals = Vec::with_capacity(rs.len());
        for &r in rs {
            if r == 4 {
                finals.push(m4.state_count());
            } else if reference_transitions {
                finals.push(generate_with(r, variants, signature)?.0.state_count());
            }
        }
        out.push(LedgerRow { variants, pruned_r4, finals, reference_transitions });
    }
    Ok(out)
}
