use crate::engine::{RuleOutcome, Successor, TransitionRuleSet};
use crate::fsm::StateVector;

use super::{annotate, BftParameters, BftState, SEND_COMMIT, SEND_NOT_FREE, SEND_VOTE};

/// Reconstruction choices for the PUT rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PutRule {
    /// Choose and vote when the slot is free; otherwise vote if the vote
    /// threshold is already met, giving up the slot.
    ChooseOrThreshold,
    /// PUT only records receipt; voting happens through FREE or VOTE.
    NeverVotes,
    /// Like `ChooseOrThreshold` but a threshold vote keeps `could_choose`.
    ThresholdKeepsChoice,
}

/// Reconstruction choices for the NOT_FREE rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NotFreeRule {
    /// Always clear `could_choose`.
    ClearChoice,
    /// Clear `could_choose` and `has_chosen`.
    ClearChoiceAndChosen,
    /// Clear `could_choose` only while this update has not voted; afterwards
    /// the message has no effect.
    ClearChoiceBeforeVote,
}

/// One combination of the rule reconstructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RuleVariants {
    pub put: PutRule,
    pub not_free: NotFreeRule,
    /// Threshold checks also require `put_received`.
    pub vote_requires_put: bool,
}

impl Default for RuleVariants {
    /// The combination that reproduces the reference state counts.
    fn default() -> Self {
        Self { put: PutRule::ChooseOrThreshold, not_free: NotFreeRule::ClearChoiceBeforeVote, vote_requires_put: false }
    }
}

impl RuleVariants {
    /// Every combination, default first.
    pub fn all() -> Vec<RuleVariants> {
        let mut out = vec![RuleVariants::default()];
        for put in [PutRule::ChooseOrThreshold, PutRule::NeverVotes, PutRule::ThresholdKeepsChoice] {
            for not_free in
                [NotFreeRule::ClearChoice, NotFreeRule::ClearChoiceAndChosen, NotFreeRule::ClearChoiceBeforeVote]
            {
                for vote_requires_put in [false, true] {
                    let v = RuleVariants { put, not_free, vote_requires_put };
                    if !out.contains(&v) {
                        out.push(v);
                    }
                }
            }
        }
        out
    }

    /// Short ledger label such as `P-a/N-c/V-a`.
    pub fn label(&self) -> String {
        let p = match self.put {
            PutRule::ChooseOrThreshold => "P-a",
            PutRule::NeverVotes => "P-b",
            PutRule::ThresholdKeepsChoice => "P-c",
        };
        let n = match self.not_free {
            NotFreeRule::ClearChoice => "N-a",
            NotFreeRule::ClearChoiceAndChosen => "N-b",
            NotFreeRule::ClearChoiceBeforeVote => "N-c",
        };
        let v = if self.vote_requires_put { "V-b" } else { "V-a" };
        format!("{p}/{n}/{v}")
    }
}

/// Actions collected during a rule, emitted in canonical order.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
struct Emit {
    vote: bool,
    commit: bool,
    not_free: bool,
}

impl Emit {
    fn into_vec(self) -> Vec<String> {
        let mut out = Vec::new();
        if self.vote {
            out.push(SEND_VOTE.to_string());
        }
        if self.commit {
            out.push(SEND_COMMIT.to_string());
        }
        if self.not_free {
            out.push(SEND_NOT_FREE.to_string());
        }
        out
    }
}

/// Next state of a BFT rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BftNext {
    State(BftState),
    Finish,
}

/// Outcome of a BFT rule in typed form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BftStep {
    pub actions: Vec<String>,
    pub next: BftNext,
    pub notes: Vec<String>,
}

/// The five message rules for one parameter set.
#[derive(Debug, Clone, Copy)]
pub struct BftRules {
    pub params: BftParameters,
    pub variants: RuleVariants,
}

impl BftRules {
    pub fn new(params: BftParameters, variants: RuleVariants) -> Self {
        Self { params, variants }
    }

    fn threshold_met(&self, s: &BftState) -> bool {
        (s.put_received || !self.variants.vote_requires_put) && s.total_votes() >= self.params.vote_threshold
    }

    fn done(s: BftState, emit: Emit, notes: Vec<String>) -> BftStep {
        BftStep { actions: emit.into_vec(), next: BftNext::State(s), notes }
    }

    /// Sends commit once the vote threshold is met.
    fn commit_on_threshold(&self, s: &mut BftState, emit: &mut Emit, notes: &mut Vec<String>) {
        if self.threshold_met(s) && !s.commit_sent {
            emit.commit = true;
            s.commit_sent = true;
            notes.push(format!("Vote threshold ({}) reached: sending commit.", self.params.vote_threshold));
        }
    }

    /// Chooses this update: signal not free and vote.
    fn choose(s: &mut BftState, emit: &mut Emit, notes: &mut Vec<String>) {
        s.has_chosen = true;
        s.vote_sent = true;
        emit.not_free = true;
        emit.vote = true;
        notes.push("Choosing this update: voting and signalling not free.".into());
    }

    pub fn on_put(&self, mut s: BftState) -> BftStep {
        if s.put_received {
            return Self::done(s, Emit::default(), vec!["Duplicate put ignored.".into()]);
        }
        let mut emit = Emit::default();
        let mut notes = vec!["Initial put received from client.".to_string()];
        s.put_received = true;
        match self.variants.put {
            PutRule::NeverVotes => {}
            rule => {
                if s.could_choose && !s.has_chosen && !s.vote_sent {
                    Self::choose(&mut s, &mut emit, &mut notes);
                } else if !s.vote_sent && self.threshold_met(&s) {
                    emit.vote = true;
                    s.vote_sent = true;
                    if rule == PutRule::ChooseOrThreshold {
                        s.could_choose = false;
                    }
                    notes.push(format!("Vote threshold ({}) already reached: voting.", self.params.vote_threshold));
                }
            }
        }
        self.commit_on_threshold(&mut s, &mut emit, &mut notes);
        Self::done(s, emit, notes)
    }

    pub fn on_vote(&self, mut s: BftState) -> BftStep {
        let max = self.params.r - 1;
        if s.votes_received == max {
            return Self::done(
                s,
                Emit::default(),
                vec![format!("Vote ignored: all {max} peer votes already counted.")],
            );
        }
        let mut emit = Emit::default();
        s.votes_received += 1;
        let mut notes = vec![format!(
            "Vote received ({} of {} needed, local vote included).",
            s.total_votes(),
            self.params.vote_threshold
        )];
        if self.threshold_met(&s) {
            if !s.vote_sent {
                if s.could_choose {
                    s.has_chosen = true;
                    emit.not_free = true;
                    notes.push("Choosing this update: signalling not free.".into());
                }
                emit.vote = true;
                s.vote_sent = true;
                s.could_choose = false;
                notes.push(format!("Vote threshold ({}) reached: voting.", self.params.vote_threshold));
            }
            if !s.commit_sent {
                emit.commit = true;
                s.commit_sent = true;
                notes.push(format!("Vote threshold ({}) reached: sending commit.", self.params.vote_threshold));
            }
        }
        Self::done(s, emit, notes)
    }

    pub fn on_commit(&self, mut s: BftState) -> BftStep {
        let max = self.params.r - 1;
        if s.commits_received == max {
            return Self::done(
                s,
                Emit::default(),
                vec![format!("Commit ignored: all {max} peer commits already counted.")],
            );
        }
        s.commits_received += 1;
        let ct = self.params.commit_threshold;
        if s.commits_received >= ct {
            let mut emit = Emit::default();
            let mut notes = vec![format!("External commit threshold ({ct}) reached: finishing.")];
            if !s.commit_sent {
                emit.commit = true;
                notes.push("Echoing commit before finishing.".into());
            }
            return BftStep { actions: emit.into_vec(), next: BftNext::Finish, notes };
        }
        let note = format!("Commit received ({} of {ct} needed).", s.commits_received);
        Self::done(s, Emit::default(), vec![note])
    }

    pub fn on_free(&self, mut s: BftState) -> BftStep {
        let mut emit = Emit::default();
        let mut notes = vec!["Slot free: this update may be chosen.".to_string()];
        s.could_choose = true;
        if s.put_received && !s.vote_sent && !s.has_chosen {
            Self::choose(&mut s, &mut emit, &mut notes);
        }
        self.commit_on_threshold(&mut s, &mut emit, &mut notes);
        Self::done(s, emit, notes)
    }

    pub fn on_not_free(&self, mut s: BftState) -> BftStep {
        let note = match self.variants.not_free {
            NotFreeRule::ClearChoice => {
                s.could_choose = false;
                "Slot taken by another update: may not choose."
            }
            NotFreeRule::ClearChoiceAndChosen => {
                s.could_choose = false;
                s.has_chosen = false;
                "Slot taken by another update: may not choose, choice withdrawn."
            }
            NotFreeRule::ClearChoiceBeforeVote if s.vote_sent => "Already voted: not free ignored.",
            NotFreeRule::ClearChoiceBeforeVote => {
                s.could_choose = false;
                "Slot taken by another update: may not choose."
            }
        };
        Self::done(s, Emit::default(), vec![note.to_string()])
    }

    /// Dispatches on the message index of the BFT specification.
    pub fn step(&self, message: usize, s: BftState) -> BftStep {
        match message {
            0 => self.on_put(s),
            1 => self.on_vote(s),
            2 => self.on_commit(s),
            3 => self.on_free(s),
            4 => self.on_not_free(s),
            _ => panic!("message index {message} out of range"),
        }
    }
}

impl TransitionRuleSet for BftRules {
    fn apply(&self, message: usize, state: &StateVector) -> RuleOutcome {
        let s = BftState::from_vector(state).expect("engine passes well-formed BFT vectors");
        let step = self.step(message, s);
        RuleOutcome {
            actions: step.actions,
            successor: match step.next {
                BftNext::State(n) => Successor::State(n.to_vector()),
                BftNext::Finish => Successor::Finish,
            },
            annotations: step.notes,
        }
    }

    fn describe_state(&self, state: &StateVector) -> Vec<String> {
        annotate(&BftState::from_vector(state).expect("engine passes well-formed BFT vectors"), &self.params)
    }

    fn describe_finish(&self) -> Vec<String> {
        vec![format!("Finished: the external commit threshold ({}) has been reached.", self.params.commit_threshold)]
    }
}
