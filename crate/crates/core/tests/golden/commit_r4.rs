//! `commit_r4`: generated commit protocol state machine.
//!
//! Replication factor 4, fault tolerance 1; 33 states, 5 messages.
//! Generated by `metafsm render --format source`; do not edit.

#![allow(non_camel_case_types, dead_code, unused_variables, clippy::all)]

/// Receiver of the actions emitted by transitions.
pub trait ActionSink {
    fn send_vote(&mut self);
    fn send_commit(&mut self);
    fn send_not_free(&mut self);
    fn on_finish(&mut self);
}

/// Messages the machine accepts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Message {
    PUT,
    VOTE,
    COMMIT,
    FREE,
    NOT_FREE,
}

impl Message {
    pub const ALL: [Message; 5] = [
        Message::PUT,
        Message::VOTE,
        Message::COMMIT,
        Message::FREE,
        Message::NOT_FREE,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Message::PUT => "PUT",
            Message::VOTE => "VOTE",
            Message::COMMIT => "COMMIT",
            Message::FREE => "FREE",
            Message::NOT_FREE => "NOT_FREE",
        }
    }

    pub fn from_name(name: &str) -> Option<Message> {
        match name {
            "PUT" => Some(Message::PUT),
            "VOTE" => Some(Message::VOTE),
            "COMMIT" => Some(Message::COMMIT),
            "FREE" => Some(Message::FREE),
            "NOT_FREE" => Some(Message::NOT_FREE),
            _ => None,
        }
    }
}

/// Machine states.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum State {
    /// Have not yet received initial put from client.
    /// Have not voted since initial put has not been received.
    /// Have received no votes and no commits.
    /// Have not sent a commit since neither the vote threshold (3) nor the external commit threshold (2) has been reached.
    /// May not choose since another ongoing update has been voted for.
    /// Have not chosen this update since another ongoing update has been chosen.
    /// Waiting for 3 further votes (including local vote if any) before sending commit.
    /// Waiting for 2 further external commits to finish.
    S_F_0_F_0_F_F_F,
    /// Have not yet received initial put from client.
    /// Have not voted since initial put has not been received.
    /// Have received no votes and no commits.
    /// Have not sent a commit since neither the vote threshold (3) nor the external commit threshold (2) has been reached.
    /// May choose since no other ongoing update has been voted for.
    /// Have not chosen this update yet.
    /// Waiting for 3 further votes (including local vote if any) before sending commit.
    /// Waiting for 2 further external commits to finish.
    S_F_0_F_0_F_T_F,
    /// Have not yet received initial put from client.
    /// Have not voted since initial put has not been received.
    /// Have received no votes and 1 commit.
    /// Have not sent a commit since neither the vote threshold (3) nor the external commit threshold (2) has been reached.
    /// May not choose since another ongoing update has been voted for.
    /// Have not chosen this update since another ongoing update has been chosen.
    /// Waiting for 3 further votes (including local vote if any) before sending commit.
    /// Waiting for 1 further external commit to finish.
    S_F_0_F_1_F_F_F,
    /// Have not yet received initial put from client.
    /// Have not voted since initial put has not been received.
    /// Have received no votes and 1 commit.
    /// Have not sent a commit since neither the vote threshold (3) nor the external commit threshold (2) has been reached.
    /// May choose since no other ongoing update has been voted for.
    /// Have not chosen this update yet.
    /// Waiting for 3 further votes (including local vote if any) before sending commit.
    /// Waiting for 1 further external commit to finish.
    S_F_0_F_1_F_T_F,
    /// Have not yet received initial put from client.
    /// Have not voted since initial put has not been received.
    /// Have received 1 vote and no commits.
    /// Have not sent a commit since neither the vote threshold (3) nor the external commit threshold (2) has been reached.
    /// May not choose since another ongoing update has been voted for.
    /// Have not chosen this update since another ongoing update has been chosen.
    /// Waiting for 2 further votes (including local vote if any) before sending commit.
    /// Waiting for 2 further external commits to finish.
    S_F_1_F_0_F_F_F,
    /// Have not yet received initial put from client.
    /// Have not voted since initial put has not been received.
    /// Have received 1 vote and no commits.
    /// Have not sent a commit since neither the vote threshold (3) nor the external commit threshold (2) has been reached.
    /// May choose since no other ongoing update has been voted for.
    /// Have not chosen this update yet.
    /// Waiting for 2 further votes (including local vote if any) before sending commit.
    /// Waiting for 2 further external commits to finish.
    S_F_1_F_0_F_T_F,
    /// Have not yet received initial put from client.
    /// Have not voted since initial put has not been received.
    /// Have received 1 vote and 1 commit.
    /// Have not sent a commit since neither the vote threshold (3) nor the external commit threshold (2) has been reached.
    /// May not choose since another ongoing update has been voted for.
    /// Have not chosen this update since another ongoing update has been chosen.
    /// Waiting for 2 further votes (including local vote if any) before sending commit.
    /// Waiting for 1 further external commit to finish.
    S_F_1_F_1_F_F_F,
    /// Have not yet received initial put from client.
    /// Have not voted since initial put has not been received.
    /// Have received 1 vote and 1 commit.
    /// Have not sent a commit since neither the vote threshold (3) nor the external commit threshold (2) has been reached.
    /// May choose since no other ongoing update has been voted for.
    /// Have not chosen this update yet.
    /// Waiting for 2 further votes (including local vote if any) before sending commit.
    /// Waiting for 1 further external commit to finish.
    S_F_1_F_1_F_T_F,
    /// Have not yet received initial put from client.
    /// Have not voted since initial put has not been received.
    /// Have received 2 votes and no commits.
    /// Have not sent a commit since neither the vote threshold (3) nor the external commit threshold (2) has been reached.
    /// May not choose since another ongoing update has been voted for.
    /// Have not chosen this update since another ongoing update has been chosen.
    /// Waiting for 1 further vote (including local vote if any) before sending commit.
    /// Waiting for 2 further external commits to finish.
    S_F_2_F_0_F_F_F,
    /// Have not yet received initial put from client.
    /// Have not voted since initial put has not been received.
    /// Have received 2 votes and no commits.
    /// Have not sent a commit since neither the vote threshold (3) nor the external commit threshold (2) has been reached.
    /// May choose since no other ongoing update has been voted for.
    /// Have not chosen this update yet.
    /// Waiting for 1 further vote (including local vote if any) before sending commit.
    /// Waiting for 2 further external commits to finish.
    S_F_2_F_0_F_T_F,
    /// Have not yet received initial put from client.
    /// Have not voted since initial put has not been received.
    /// Have received 2 votes and 1 commit.
    /// Have not sent a commit since neither the vote threshold (3) nor the external commit threshold (2) has been reached.
    /// May not choose since another ongoing update has been voted for.
    /// Have not chosen this update since another ongoing update has been chosen.
    /// Waiting for 1 further vote (including local vote if any) before sending commit.
    /// Waiting for 1 further external commit to finish.
    S_F_2_F_1_F_F_F,
    /// Have not yet received initial put from client.
    /// Have not voted since initial put has not been received.
    /// Have received 2 votes and 1 commit.
    /// Have not sent a commit since neither the vote threshold (3) nor the external commit threshold (2) has been reached.
    /// May choose since no other ongoing update has been voted for.
    /// Have not chosen this update yet.
    /// Waiting for 1 further vote (including local vote if any) before sending commit.
    /// Waiting for 1 further external commit to finish.
    S_F_2_F_1_F_T_F,
    /// Have not yet received initial put from client.
    /// Have voted for this update since the vote threshold was reached.
    /// Have received 3 votes and no commits.
    /// Have sent a commit since the vote threshold (3) has been reached.
    /// May not choose since another ongoing update has been voted for.
    /// Have not chosen this update since another ongoing update has been chosen.
    /// Waiting for 2 further external commits to finish.
    /// Have voted for this update, having chosen it.
    /// Have chosen this update.
    S_F_3_T_0_T_F_F,
    /// Have not yet received initial put from client.
    /// Have voted for this update since the vote threshold was reached.
    /// Have received 3 votes and no commits.
    /// Have sent a commit since the vote threshold (3) has been reached.
    /// May choose since no other ongoing update has been voted for.
    /// Have not chosen this update yet.
    /// Waiting for 2 further external commits to finish.
    /// Have voted for this update, having chosen it.
    /// Have chosen this update.
    S_F_3_T_0_T_T_F,
    /// Have not yet received initial put from client.
    /// Have voted for this update since the vote threshold was reached.
    /// Have received 3 votes and 1 commit.
    /// Have sent a commit since the vote threshold (3) has been reached.
    /// May not choose since another ongoing update has been voted for.
    /// Have not chosen this update since another ongoing update has been chosen.
    /// Waiting for 1 further external commit to finish.
    /// Have voted for this update, having chosen it.
    /// Have chosen this update.
    S_F_3_T_1_T_F_F,
    /// Have not yet received initial put from client.
    /// Have voted for this update since the vote threshold was reached.
    /// Have received 3 votes and 1 commit.
    /// Have sent a commit since the vote threshold (3) has been reached.
    /// May choose since no other ongoing update has been voted for.
    /// Have not chosen this update yet.
    /// Waiting for 1 further external commit to finish.
    /// Have voted for this update, having chosen it.
    /// Have chosen this update.
    S_F_3_T_1_T_T_F,
    /// Finished: the external commit threshold (2) has been reached.
    FINISH,
    /// Have received initial put from client.
    /// Have not voted since another update has already been voted for.
    /// Have received no votes and no commits.
    /// Have not sent a commit since neither the vote threshold (3) nor the external commit threshold (2) has been reached.
    /// May not choose since another ongoing update has been voted for.
    /// Have not chosen this update since another ongoing update has been chosen.
    /// Waiting for 3 further votes (including local vote if any) before sending commit.
    /// Waiting for 2 further external commits to finish.
    S_T_0_F_0_F_F_F,
    /// Have received initial put from client.
    /// Have not voted since another update has already been voted for.
    /// Have received no votes and 1 commit.
    /// Have not sent a commit since neither the vote threshold (3) nor the external commit threshold (2) has been reached.
    /// May not choose since another ongoing update has been voted for.
    /// Have not chosen this update since another ongoing update has been chosen.
    /// Waiting for 3 further votes (including local vote if any) before sending commit.
    /// Waiting for 1 further external commit to finish.
    S_T_0_F_1_F_F_F,
    /// Have received initial put from client.
    /// Have voted for this update, having chosen it.
    /// Have received no votes and no commits.
    /// Have not sent a commit since neither the vote threshold (3) nor the external commit threshold (2) has been reached.
    /// May choose since no other ongoing update has been voted for.
    /// Have chosen this update.
    /// Waiting for 2 further votes (including local vote if any) before sending commit.
    /// Waiting for 2 further external commits to finish.
    S_T_0_T_0_F_T_T,
    /// Have received initial put from client.
    /// Have voted for this update, having chosen it.
    /// Have received no votes and 1 commit.
    /// Have not sent a commit since neither the vote threshold (3) nor the external commit threshold (2) has been reached.
    /// May choose since no other ongoing update has been voted for.
    /// Have chosen this update.
    /// Waiting for 2 further votes (including local vote if any) before sending commit.
    /// Waiting for 1 further external commit to finish.
    S_T_0_T_1_F_T_T,
    /// Have received initial put from client.
    /// Have not voted since another update has already been voted for.
    /// Have received 1 vote and no commits.
    /// Have not sent a commit since neither the vote threshold (3) nor the external commit threshold (2) has been reached.
    /// May not choose since another ongoing update has been voted for.
    /// Have not chosen this update since another ongoing update has been chosen.
    /// Waiting for 2 further votes (including local vote if any) before sending commit.
    /// Waiting for 2 further external commits to finish.
    S_T_1_F_0_F_F_F,
    /// Have received initial put from client.
    /// Have not voted since another update has already been voted for.
    /// Have received 1 vote and 1 commit.
    /// Have not sent a commit since neither the vote threshold (3) nor the external commit threshold (2) has been reached.
    /// May not choose since another ongoing update has been voted for.
    /// Have not chosen this update since another ongoing update has been chosen.
    /// Waiting for 2 further votes (including local vote if any) before sending commit.
    /// Waiting for 1 further external commit to finish.
    S_T_1_F_1_F_F_F,
    /// Have received initial put from client.
    /// Have voted for this update, having chosen it.
    /// Have received 1 vote and no commits.
    /// Have not sent a commit since neither the vote threshold (3) nor the external commit threshold (2) has been reached.
    /// May choose since no other ongoing update has been voted for.
    /// Have chosen this update.
    /// Waiting for 1 further vote (including local vote if any) before sending commit.
    /// Waiting for 2 further external commits to finish.
    S_T_1_T_0_F_T_T,
    /// Have received initial put from client.
    /// Have voted for this update, having chosen it.
    /// Have received 1 vote and 1 commit.
    /// Have not sent a commit since neither the vote threshold (3) nor the external commit threshold (2) has been reached.
    /// May choose since no other ongoing update has been voted for.
    /// Have chosen this update.
    /// Waiting for 1 further vote (including local vote if any) before sending commit.
    /// Waiting for 1 further external commit to finish.
    S_T_1_T_1_F_T_T,
    /// Have received initial put from client.
    /// Have not voted since another update has already been voted for.
    /// Have received 2 votes and no commits.
    /// Have not sent a commit since neither the vote threshold (3) nor the external commit threshold (2) has been reached.
    /// May not choose since another ongoing update has been voted for.
    /// Have not chosen this update since another ongoing update has been chosen.
    /// Waiting for 1 further vote (including local vote if any) before sending commit.
    /// Waiting for 2 further external commits to finish.
    S_T_2_F_0_F_F_F,
    /// Have received initial put from client.
    /// Have not voted since another update has already been voted for.
    /// Have received 2 votes and 1 commit.
    /// Have not sent a commit since neither the vote threshold (3) nor the external commit threshold (2) has been reached.
    /// May not choose since another ongoing update has been voted for.
    /// Have not chosen this update since another ongoing update has been chosen.
    /// Waiting for 1 further vote (including local vote if any) before sending commit.
    /// Waiting for 1 further external commit to finish.
    S_T_2_F_1_F_F_F,
    /// Have received initial put from client.
    /// Have voted for this update, having chosen it.
    /// Have received 2 votes and no commits.
    /// Have sent a commit since the vote threshold (3) has been reached.
    /// May choose since no other ongoing update has been voted for.
    /// Have chosen this update.
    /// Waiting for 2 further external commits to finish.
    S_T_2_T_0_T_T_T,
    /// Have received initial put from client.
    /// Have voted for this update, having chosen it.
    /// Have received 2 votes and 1 commit.
    /// Have sent a commit since the vote threshold (3) has been reached.
    /// May choose since no other ongoing update has been voted for.
    /// Have chosen this update.
    /// Waiting for 1 further external commit to finish.
    S_T_2_T_1_T_T_T,
    /// Have received initial put from client.
    /// Have voted for this update since the vote threshold was reached.
    /// Have received 3 votes and no commits.
    /// Have sent a commit since the vote threshold (3) has been reached.
    /// May not choose since another ongoing update has been voted for.
    /// Have not chosen this update since another ongoing update has been chosen.
    /// Waiting for 2 further external commits to finish.
    /// Have voted for this update, having chosen it.
    /// Have chosen this update.
    S_T_3_T_0_T_F_F,
    /// Have received initial put from client.
    /// Have voted for this update since the vote threshold was reached.
    /// Have received 3 votes and no commits.
    /// Have sent a commit since the vote threshold (3) has been reached.
    /// May choose since no other ongoing update has been voted for.
    /// Have not chosen this update yet.
    /// Waiting for 2 further external commits to finish.
    /// Have voted for this update, having chosen it.
    /// Have chosen this update.
    S_T_3_T_0_T_T_F,
    /// Have received initial put from client.
    /// Have voted for this update since the vote threshold was reached.
    /// Have received 3 votes and 1 commit.
    /// Have sent a commit since the vote threshold (3) has been reached.
    /// May not choose since another ongoing update has been voted for.
    /// Have not chosen this update since another ongoing update has been chosen.
    /// Waiting for 1 further external commit to finish.
    /// Have voted for this update, having chosen it.
    /// Have chosen this update.
    S_T_3_T_1_T_F_F,
    /// Have received initial put from client.
    /// Have voted for this update since the vote threshold was reached.
    /// Have received 3 votes and 1 commit.
    /// Have sent a commit since the vote threshold (3) has been reached.
    /// May choose since no other ongoing update has been voted for.
    /// Have not chosen this update yet.
    /// Waiting for 1 further external commit to finish.
    /// Have voted for this update, having chosen it.
    /// Have chosen this update.
    S_T_3_T_1_T_T_F,
}

impl State {
    pub const ALL: [State; 33] = [
        State::S_F_0_F_0_F_F_F,
        State::S_F_0_F_0_F_T_F,
        State::S_F_0_F_1_F_F_F,
        State::S_F_0_F_1_F_T_F,
        State::S_F_1_F_0_F_F_F,
        State::S_F_1_F_0_F_T_F,
        State::S_F_1_F_1_F_F_F,
        State::S_F_1_F_1_F_T_F,
        State::S_F_2_F_0_F_F_F,
        State::S_F_2_F_0_F_T_F,
        State::S_F_2_F_1_F_F_F,
        State::S_F_2_F_1_F_T_F,
        State::S_F_3_T_0_T_F_F,
        State::S_F_3_T_0_T_T_F,
        State::S_F_3_T_1_T_F_F,
        State::S_F_3_T_1_T_T_F,
        State::FINISH,
        State::S_T_0_F_0_F_F_F,
        State::S_T_0_F_1_F_F_F,
        State::S_T_0_T_0_F_T_T,
        State::S_T_0_T_1_F_T_T,
        State::S_T_1_F_0_F_F_F,
        State::S_T_1_F_1_F_F_F,
        State::S_T_1_T_0_F_T_T,
        State::S_T_1_T_1_F_T_T,
        State::S_T_2_F_0_F_F_F,
        State::S_T_2_F_1_F_F_F,
        State::S_T_2_T_0_T_T_T,
        State::S_T_2_T_1_T_T_T,
        State::S_T_3_T_0_T_F_F,
        State::S_T_3_T_0_T_T_F,
        State::S_T_3_T_1_T_F_F,
        State::S_T_3_T_1_T_T_F,
    ];

    /// Canonical state name.
    pub fn name(self) -> &'static str {
        match self {
            State::S_F_0_F_0_F_F_F => "F/0/F/0/F/F/F",
            State::S_F_0_F_0_F_T_F => "F/0/F/0/F/T/F",
            State::S_F_0_F_1_F_F_F => "F/0/F/1/F/F/F",
            State::S_F_0_F_1_F_T_F => "F/0/F/1/F/T/F",
            State::S_F_1_F_0_F_F_F => "F/1/F/0/F/F/F",
            State::S_F_1_F_0_F_T_F => "F/1/F/0/F/T/F",
            State::S_F_1_F_1_F_F_F => "F/1/F/1/F/F/F",
            State::S_F_1_F_1_F_T_F => "F/1/F/1/F/T/F",
            State::S_F_2_F_0_F_F_F => "F/2/F/0/F/F/F",
            State::S_F_2_F_0_F_T_F => "F/2/F/0/F/T/F",
            State::S_F_2_F_1_F_F_F => "F/2/F/1/F/F/F",
            State::S_F_2_F_1_F_T_F => "F/2/F/1/F/T/F",
            State::S_F_3_T_0_T_F_F => "F/3/T/0/T/F/F",
            State::S_F_3_T_0_T_T_F => "F/3/T/0/T/T/F",
            State::S_F_3_T_1_T_F_F => "F/3/T/1/T/F/F",
            State::S_F_3_T_1_T_T_F => "F/3/T/1/T/T/F",
            State::FINISH => "FINISH",
            State::S_T_0_F_0_F_F_F => "T/0/F/0/F/F/F",
            State::S_T_0_F_1_F_F_F => "T/0/F/1/F/F/F",
            State::S_T_0_T_0_F_T_T => "T/0/T/0/F/T/T",
            State::S_T_0_T_1_F_T_T => "T/0/T/1/F/T/T",
            State::S_T_1_F_0_F_F_F => "T/1/F/0/F/F/F",
            State::S_T_1_F_1_F_F_F => "T/1/F/1/F/F/F",
            State::S_T_1_T_0_F_T_T => "T/1/T/0/F/T/T",
            State::S_T_1_T_1_F_T_T => "T/1/T/1/F/T/T",
            State::S_T_2_F_0_F_F_F => "T/2/F/0/F/F/F",
            State::S_T_2_F_1_F_F_F => "T/2/F/1/F/F/F",
            State::S_T_2_T_0_T_T_T => "T/2/T/0/T/T/T",
            State::S_T_2_T_1_T_T_T => "T/2/T/1/T/T/T",
            State::S_T_3_T_0_T_F_F => "T/3/T/0/T/F/F",
            State::S_T_3_T_0_T_T_F => "T/3/T/0/T/T/F",
            State::S_T_3_T_1_T_F_F => "T/3/T/1/T/F/F",
            State::S_T_3_T_1_T_T_F => "T/3/T/1/T/T/F",
        }
    }

    pub fn from_name(name: &str) -> Option<State> {
        match name {
            "F/0/F/0/F/F/F" => Some(State::S_F_0_F_0_F_F_F),
            "F/0/F/0/F/T/F" => Some(State::S_F_0_F_0_F_T_F),
            "F/0/F/1/F/F/F" => Some(State::S_F_0_F_1_F_F_F),
            "F/0/F/1/F/T/F" => Some(State::S_F_0_F_1_F_T_F),
            "F/1/F/0/F/F/F" => Some(State::S_F_1_F_0_F_F_F),
            "F/1/F/0/F/T/F" => Some(State::S_F_1_F_0_F_T_F),
            "F/1/F/1/F/F/F" => Some(State::S_F_1_F_1_F_F_F),
            "F/1/F/1/F/T/F" => Some(State::S_F_1_F_1_F_T_F),
            "F/2/F/0/F/F/F" => Some(State::S_F_2_F_0_F_F_F),
            "F/2/F/0/F/T/F" => Some(State::S_F_2_F_0_F_T_F),
            "F/2/F/1/F/F/F" => Some(State::S_F_2_F_1_F_F_F),
            "F/2/F/1/F/T/F" => Some(State::S_F_2_F_1_F_T_F),
            "F/3/T/0/T/F/F" => Some(State::S_F_3_T_0_T_F_F),
            "F/3/T/0/T/T/F" => Some(State::S_F_3_T_0_T_T_F),
            "F/3/T/1/T/F/F" => Some(State::S_F_3_T_1_T_F_F),
            "F/3/T/1/T/T/F" => Some(State::S_F_3_T_1_T_T_F),
            "FINISH" => Some(State::FINISH),
            "T/0/F/0/F/F/F" => Some(State::S_T_0_F_0_F_F_F),
            "T/0/F/1/F/F/F" => Some(State::S_T_0_F_1_F_F_F),
            "T/0/T/0/F/T/T" => Some(State::S_T_0_T_0_F_T_T),
            "T/0/T/1/F/T/T" => Some(State::S_T_0_T_1_F_T_T),
            "T/1/F/0/F/F/F" => Some(State::S_T_1_F_0_F_F_F),
            "T/1/F/1/F/F/F" => Some(State::S_T_1_F_1_F_F_F),
            "T/1/T/0/F/T/T" => Some(State::S_T_1_T_0_F_T_T),
            "T/1/T/1/F/T/T" => Some(State::S_T_1_T_1_F_T_T),
            "T/2/F/0/F/F/F" => Some(State::S_T_2_F_0_F_F_F),
            "T/2/F/1/F/F/F" => Some(State::S_T_2_F_1_F_F_F),
            "T/2/T/0/T/T/T" => Some(State::S_T_2_T_0_T_T_T),
            "T/2/T/1/T/T/T" => Some(State::S_T_2_T_1_T_T_T),
            "T/3/T/0/T/F/F" => Some(State::S_T_3_T_0_T_F_F),
            "T/3/T/0/T/T/F" => Some(State::S_T_3_T_0_T_T_F),
            "T/3/T/1/T/F/F" => Some(State::S_T_3_T_1_T_F_F),
            "T/3/T/1/T/T/F" => Some(State::S_T_3_T_1_T_T_F),
            _ => None,
        }
    }
}

pub const START: State = State::S_F_0_F_0_F_F_F;
pub const FINISH: State = State::FINISH;

/// One protocol instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Machine {
    state: State,
}

impl Default for Machine {
    fn default() -> Self {
        Self::new()
    }
}

impl Machine {
    pub fn new() -> Self {
        Self { state: START }
    }

    pub fn state(&self) -> State {
        self.state
    }

    pub fn set_state(&mut self, state: State) {
        self.state = state;
    }

    pub fn is_finished(&self) -> bool {
        self.state == FINISH
    }

    /// Dispatches to the handler for `message`.
    pub fn receive<S: ActionSink + ?Sized>(&mut self, message: Message, sink: &mut S) {
        match message {
            Message::PUT => self.receive_put(sink),
            Message::VOTE => self.receive_vote(sink),
            Message::COMMIT => self.receive_commit(sink),
            Message::FREE => self.receive_free(sink),
            Message::NOT_FREE => self.receive_not_free(sink),
        }
    }

    /// Handles PUT.
    pub fn receive_put<S: ActionSink + ?Sized>(&mut self, sink: &mut S) {
        match self.state {
            State::S_F_0_F_0_F_F_F => {
                // Initial put received from client.
                self.set_state(State::S_T_0_F_0_F_F_F);
            }
            State::S_F_0_F_0_F_T_F => {
                // Initial put received from client.
                // Choosing this update: voting and signalling not free.
                sink.send_vote();
                sink.send_not_free();
                self.set_state(State::S_T_0_T_0_F_T_T);
            }
            State::S_F_0_F_1_F_F_F => {
                // Initial put received from client.
                self.set_state(State::S_T_0_F_1_F_F_F);
            }
            State::S_F_0_F_1_F_T_F => {
                // Initial put received from client.
                // Choosing this update: voting and signalling not free.
                sink.send_vote();
                sink.send_not_free();
                self.set_state(State::S_T_0_T_1_F_T_T);
            }
            State::S_F_1_F_0_F_F_F => {
                // Initial put received from client.
                self.set_state(State::S_T_1_F_0_F_F_F);
            }
            State::S_F_1_F_0_F_T_F => {
                // Initial put received from client.
                // Choosing this update: voting and signalling not free.
                sink.send_vote();
                sink.send_not_free();
                self.set_state(State::S_T_1_T_0_F_T_T);
            }
            State::S_F_1_F_1_F_F_F => {
                // Initial put received from client.
                self.set_state(State::S_T_1_F_1_F_F_F);
            }
            State::S_F_1_F_1_F_T_F => {
                // Initial put received from client.
                // Choosing this update: voting and signalling not free.
                sink.send_vote();
                sink.send_not_free();
                self.set_state(State::S_T_1_T_1_F_T_T);
            }
            State::S_F_2_F_0_F_F_F => {
                // Initial put received from client.
                self.set_state(State::S_T_2_F_0_F_F_F);
            }
            State::S_F_2_F_0_F_T_F => {
                // Initial put received from client.
                // Choosing this update: voting and signalling not free.
                // Vote threshold (3) reached: sending commit.
                sink.send_vote();
                sink.send_commit();
                sink.send_not_free();
                self.set_state(State::S_T_2_T_0_T_T_T);
            }
            State::S_F_2_F_1_F_F_F => {
                // Initial put received from client.
                self.set_state(State::S_T_2_F_1_F_F_F);
            }
            State::S_F_2_F_1_F_T_F => {
                // Initial put received from client.
                // Choosing this update: voting and signalling not free.
                // Vote threshold (3) reached: sending commit.
                sink.send_vote();
                sink.send_commit();
                sink.send_not_free();
                self.set_state(State::S_T_2_T_1_T_T_T);
            }
            State::S_F_3_T_0_T_F_F => {
                // Initial put received from client.
                self.set_state(State::S_T_3_T_0_T_F_F);
            }
            State::S_F_3_T_0_T_T_F => {
                // Initial put received from client.
                self.set_state(State::S_T_3_T_0_T_T_F);
            }
            State::S_F_3_T_1_T_F_F => {
                // Initial put received from client.
                self.set_state(State::S_T_3_T_1_T_F_F);
            }
            State::S_F_3_T_1_T_T_F => {
                // Initial put received from client.
                self.set_state(State::S_T_3_T_1_T_T_F);
            }
            State::FINISH => {}
            State::S_T_0_F_0_F_F_F => {
                // Duplicate put ignored.
            }
            State::S_T_0_F_1_F_F_F => {
                // Duplicate put ignored.
            }
            State::S_T_0_T_0_F_T_T => {
                // Duplicate put ignored.
            }
            State::S_T_0_T_1_F_T_T => {
                // Duplicate put ignored.
            }
            State::S_T_1_F_0_F_F_F => {
                // Duplicate put ignored.
            }
            State::S_T_1_F_1_F_F_F => {
                // Duplicate put ignored.
            }
            State::S_T_1_T_0_F_T_T => {
                // Duplicate put ignored.
            }
            State::S_T_1_T_1_F_T_T => {
                // Duplicate put ignored.
            }
            State::S_T_2_F_0_F_F_F => {
                // Duplicate put ignored.
            }
            State::S_T_2_F_1_F_F_F => {
                // Duplicate put ignored.
            }
            State::S_T_2_T_0_T_T_T => {
                // Duplicate put ignored.
            }
            State::S_T_2_T_1_T_T_T => {
                // Duplicate put ignored.
            }
            State::S_T_3_T_0_T_F_F => {
                // Duplicate put ignored.
            }
            State::S_T_3_T_0_T_T_F => {
                // Duplicate put ignored.
            }
            State::S_T_3_T_1_T_F_F => {
                // Duplicate put ignored.
            }
            State::S_T_3_T_1_T_T_F => {
                // Duplicate put ignored.
            }
        }
    }

    /// Handles VOTE.
    pub fn receive_vote<S: ActionSink + ?Sized>(&mut self, sink: &mut S) {
        match self.state {
            State::S_F_0_F_0_F_F_F => {
                // Vote received (1 of 3 needed, local vote included).
                self.set_state(State::S_F_1_F_0_F_F_F);
            }
            State::S_F_0_F_0_F_T_F => {
                // Vote received (1 of 3 needed, local vote included).
                self.set_state(State::S_F_1_F_0_F_T_F);
            }
            State::S_F_0_F_1_F_F_F => {
                // Vote received (1 of 3 needed, local vote included).
                self.set_state(State::S_F_1_F_1_F_F_F);
            }
            State::S_F_0_F_1_F_T_F => {
                // Vote received (1 of 3 needed, local vote included).
                self.set_state(State::S_F_1_F_1_F_T_F);
            }
            State::S_F_1_F_0_F_F_F => {
                // Vote received (2 of 3 needed, local vote included).
                self.set_state(State::S_F_2_F_0_F_F_F);
            }
            State::S_F_1_F_0_F_T_F => {
                // Vote received (2 of 3 needed, local vote included).
                self.set_state(State::S_F_2_F_0_F_T_F);
            }
            State::S_F_1_F_1_F_F_F => {
                // Vote received (2 of 3 needed, local vote included).
                self.set_state(State::S_F_2_F_1_F_F_F);
            }
            State::S_F_1_F_1_F_T_F => {
                // Vote received (2 of 3 needed, local vote included).
                self.set_state(State::S_F_2_F_1_F_T_F);
            }
            State::S_F_2_F_0_F_F_F => {
                // Vote received (3 of 3 needed, local vote included).
                // Vote threshold (3) reached: voting.
                // Vote threshold (3) reached: sending commit.
                sink.send_vote();
                sink.send_commit();
                self.set_state(State::S_F_3_T_0_T_F_F);
            }
            State::S_F_2_F_0_F_T_F => {
                // Vote received (3 of 3 needed, local vote included).
                // Choosing this update: signalling not free.
                // Vote threshold (3) reached: voting.
                // Vote threshold (3) reached: sending commit.
                sink.send_vote();
                sink.send_commit();
                sink.send_not_free();
                self.set_state(State::S_F_3_T_0_T_F_F);
            }
            State::S_F_2_F_1_F_F_F => {
                // Vote received (3 of 3 needed, local vote included).
                // Vote threshold (3) reached: voting.
                // Vote threshold (3) reached: sending commit.
                sink.send_vote();
                sink.send_commit();
                self.set_state(State::S_F_3_T_1_T_F_F);
            }
            State::S_F_2_F_1_F_T_F => {
                // Vote received (3 of 3 needed, local vote included).
                // Choosing this update: signalling not free.
                // Vote threshold (3) reached: voting.
                // Vote threshold (3) reached: sending commit.
                sink.send_vote();
                sink.send_commit();
                sink.send_not_free();
                self.set_state(State::S_F_3_T_1_T_F_F);
            }
            State::S_F_3_T_0_T_F_F => {
                // Vote ignored: all 3 peer votes already counted.
            }
            State::S_F_3_T_0_T_T_F => {
                // Vote ignored: all 3 peer votes already counted.
            }
            State::S_F_3_T_1_T_F_F => {
                // Vote ignored: all 3 peer votes already counted.
            }
            State::S_F_3_T_1_T_T_F => {
                // Vote ignored: all 3 peer votes already counted.
            }
            State::FINISH => {}
            State::S_T_0_F_0_F_F_F => {
                // Vote received (1 of 3 needed, local vote included).
                self.set_state(State::S_T_1_F_0_F_F_F);
            }
            State::S_T_0_F_1_F_F_F => {
                // Vote received (1 of 3 needed, local vote included).
                self.set_state(State::S_T_1_F_1_F_F_F);
            }
            State::S_T_0_T_0_F_T_T => {
                // Vote received (2 of 3 needed, local vote included).
                self.set_state(State::S_T_1_T_0_F_T_T);
            }
            State::S_T_0_T_1_F_T_T => {
                // Vote received (2 of 3 needed, local vote included).
                self.set_state(State::S_T_1_T_1_F_T_T);
            }
            State::S_T_1_F_0_F_F_F => {
                // Vote received (2 of 3 needed, local vote included).
                self.set_state(State::S_T_2_F_0_F_F_F);
            }
            State::S_T_1_F_1_F_F_F => {
                // Vote received (2 of 3 needed, local vote included).
                self.set_state(State::S_T_2_F_1_F_F_F);
            }
            State::S_T_1_T_0_F_T_T => {
                // Vote received (3 of 3 needed, local vote included).
                // Vote threshold (3) reached: sending commit.
                sink.send_commit();
                self.set_state(State::S_T_2_T_0_T_T_T);
            }
            State::S_T_1_T_1_F_T_T => {
                // Vote received (3 of 3 needed, local vote included).
                // Vote threshold (3) reached: sending commit.
                sink.send_commit();
                self.set_state(State::S_T_2_T_1_T_T_T);
            }
            State::S_T_2_F_0_F_F_F => {
                // Vote received (3 of 3 needed, local vote included).
                // Vote threshold (3) reached: voting.
                // Vote threshold (3) reached: sending commit.
                sink.send_vote();
                sink.send_commit();
                self.set_state(State::S_T_3_T_0_T_F_F);
            }
            State::S_T_2_F_1_F_F_F => {
                // Vote received (3 of 3 needed, local vote included).
                // Vote threshold (3) reached: voting.
                // Vote threshold (3) reached: sending commit.
                sink.send_vote();
                sink.send_commit();
                self.set_state(State::S_T_3_T_1_T_F_F);
            }
            State::S_T_2_T_0_T_T_T => {
                // Vote received (4 of 3 needed, local vote included).
                self.set_state(State::S_T_3_T_0_T_T_F);
            }
            State::S_T_2_T_1_T_T_T => {
                // Vote received (4 of 3 needed, local vote included).
                self.set_state(State::S_T_3_T_1_T_T_F);
            }
            State::S_T_3_T_0_T_F_F => {
                // Vote ignored: all 3 peer votes already counted.
            }
            State::S_T_3_T_0_T_T_F => {
                // Vote ignored: all 3 peer votes already counted.
            }
            State::S_T_3_T_1_T_F_F => {
                // Vote ignored: all 3 peer votes already counted.
            }
            State::S_T_3_T_1_T_T_F => {
                // Vote ignored: all 3 peer votes already counted.
            }
        }
    }

    /// Handles COMMIT.
    pub fn receive_commit<S: ActionSink + ?Sized>(&mut self, sink: &mut S) {
        match self.state {
            State::S_F_0_F_0_F_F_F => {
                // Commit received (1 of 2 needed).
                self.set_state(State::S_F_0_F_1_F_F_F);
            }
            State::S_F_0_F_0_F_T_F => {
                // Commit received (1 of 2 needed).
                self.set_state(State::S_F_0_F_1_F_T_F);
            }
            State::S_F_0_F_1_F_F_F => {
                // External commit threshold (2) reached: finishing.
                // Echoing commit before finishing.
                sink.send_commit();
                self.set_state(State::FINISH);
                sink.on_finish();
            }
            State::S_F_0_F_1_F_T_F => {
                // External commit threshold (2) reached: finishing.
                // Echoing commit before finishing.
                sink.send_commit();
                self.set_state(State::FINISH);
                sink.on_finish();
            }
            State::S_F_1_F_0_F_F_F => {
                // Commit received (1 of 2 needed).
                self.set_state(State::S_F_1_F_1_F_F_F);
            }
            State::S_F_1_F_0_F_T_F => {
                // Commit received (1 of 2 needed).
                self.set_state(State::S_F_1_F_1_F_T_F);
            }
            State::S_F_1_F_1_F_F_F => {
                // External commit threshold (2) reached: finishing.
                // Echoing commit before finishing.
                sink.send_commit();
                self.set_state(State::FINISH);
                sink.on_finish();
            }
            State::S_F_1_F_1_F_T_F => {
                // External commit threshold (2) reached: finishing.
                // Echoing commit before finishing.
                sink.send_commit();
                self.set_state(State::FINISH);
                sink.on_finish();
            }
            State::S_F_2_F_0_F_F_F => {
                // Commit received (1 of 2 needed).
                self.set_state(State::S_F_2_F_1_F_F_F);
            }
            State::S_F_2_F_0_F_T_F => {
                // Commit received (1 of 2 needed).
                self.set_state(State::S_F_2_F_1_F_T_F);
            }
            State::S_F_2_F_1_F_F_F => {
                // External commit threshold (2) reached: finishing.
                // Echoing commit before finishing.
                sink.send_commit();
                self.set_state(State::FINISH);
                sink.on_finish();
            }
            State::S_F_2_F_1_F_T_F => {
                // External commit threshold (2) reached: finishing.
                // Echoing commit before finishing.
                sink.send_commit();
                self.set_state(State::FINISH);
                sink.on_finish();
            }
            State::S_F_3_T_0_T_F_F => {
                // Commit received (1 of 2 needed).
                self.set_state(State::S_F_3_T_1_T_F_F);
            }
            State::S_F_3_T_0_T_T_F => {
                // Commit received (1 of 2 needed).
                self.set_state(State::S_F_3_T_1_T_T_F);
            }
            State::S_F_3_T_1_T_F_F => {
                // External commit threshold (2) reached: finishing.
                self.set_state(State::FINISH);
                sink.on_finish();
            }
            State::S_F_3_T_1_T_T_F => {
                // External commit threshold (2) reached: finishing.
                self.set_state(State::FINISH);
                sink.on_finish();
            }
            State::FINISH => {}
            State::S_T_0_F_0_F_F_F => {
                // Commit received (1 of 2 needed).
                self.set_state(State::S_T_0_F_1_F_F_F);
            }
            State::S_T_0_F_1_F_F_F => {
                // External commit threshold (2) reached: finishing.
                // Echoing commit before finishing.
                sink.send_commit();
                self.set_state(State::FINISH);
                sink.on_finish();
            }
            State::S_T_0_T_0_F_T_T => {
                // Commit received (1 of 2 needed).
                self.set_state(State::S_T_0_T_1_F_T_T);
            }
            State::S_T_0_T_1_F_T_T => {
                // External commit threshold (2) reached: finishing.
                // Echoing commit before finishing.
                sink.send_commit();
                self.set_state(State::FINISH);
                sink.on_finish();
            }
            State::S_T_1_F_0_F_F_F => {
                // Commit received (1 of 2 needed).
                self.set_state(State::S_T_1_F_1_F_F_F);
            }
            State::S_T_1_F_1_F_F_F => {
                // External commit threshold (2) reached: finishing.
                // Echoing commit before finishing.
                sink.send_commit();
                self.set_state(State::FINISH);
                sink.on_finish();
            }
            State::S_T_1_T_0_F_T_T => {
                // Commit received (1 of 2 needed).
                self.set_state(State::S_T_1_T_1_F_T_T);
            }
            State::S_T_1_T_1_F_T_T => {
                // External commit threshold (2) reached: finishing.
                // Echoing commit before finishing.
                sink.send_commit();
                self.set_state(State::FINISH);
                sink.on_finish();
            }
            State::S_T_2_F_0_F_F_F => {
                // Commit received (1 of 2 needed).
                self.set_state(State::S_T_2_F_1_F_F_F);
            }
            State::S_T_2_F_1_F_F_F => {
                // External commit threshold (2) reached: finishing.
                // Echoing commit before finishing.
                sink.send_commit();
                self.set_state(State::FINISH);
                sink.on_finish();
            }
            State::S_T_2_T_0_T_T_T => {
                // Commit received (1 of 2 needed).
                self.set_state(State::S_T_2_T_1_T_T_T);
            }
            State::S_T_2_T_1_T_T_T => {
                // External commit threshold (2) reached: finishing.
                self.set_state(State::FINISH);
                sink.on_finish();
            }
            State::S_T_3_T_0_T_F_F => {
                // Commit received (1 of 2 needed).
                self.set_state(State::S_T_3_T_1_T_F_F);
            }
            State::S_T_3_T_0_T_T_F => {
                // Commit received (1 of 2 needed).
                self.set_state(State::S_T_3_T_1_T_T_F);
            }
            State::S_T_3_T_1_T_F_F => {
                // External commit threshold (2) reached: finishing.
                self.set_state(State::FINISH);
                sink.on_finish();
            }
            State::S_T_3_T_1_T_T_F => {
                // External commit threshold (2) reached: finishing.
                self.set_state(State::FINISH);
                sink.on_finish();
            }
        }
    }

    /// Handles FREE.
    pub fn receive_free<S: ActionSink + ?Sized>(&mut self, sink: &mut S) {
        match self.state {
            State::S_F_0_F_0_F_F_F => {
                // Slot free: this update may be chosen.
                self.set_state(State::S_F_0_F_0_F_T_F);
            }
            State::S_F_0_F_0_F_T_F => {
                // Slot free: this update may be chosen.
            }
            State::S_F_0_F_1_F_F_F => {
                // Slot free: this update may be chosen.
                self.set_state(State::S_F_0_F_1_F_T_F);
            }
            State::S_F_0_F_1_F_T_F => {
                // Slot free: this update may be chosen.
            }
            State::S_F_1_F_0_F_F_F => {
                // Slot free: this update may be chosen.
                self.set_state(State::S_F_1_F_0_F_T_F);
            }
            State::S_F_1_F_0_F_T_F => {
                // Slot free: this update may be chosen.
            }
            State::S_F_1_F_1_F_F_F => {
                // Slot free: this update may be chosen.
                self.set_state(State::S_F_1_F_1_F_T_F);
            }
            State::S_F_1_F_1_F_T_F => {
                // Slot free: this update may be chosen.
            }
            State::S_F_2_F_0_F_F_F => {
                // Slot free: this update may be chosen.
                self.set_state(State::S_F_2_F_0_F_T_F);
            }
            State::S_F_2_F_0_F_T_F => {
                // Slot free: this update may be chosen.
            }
            State::S_F_2_F_1_F_F_F => {
                // Slot free: this update may be chosen.
                self.set_state(State::S_F_2_F_1_F_T_F);
            }
            State::S_F_2_F_1_F_T_F => {
                // Slot free: this update may be chosen.
            }
            State::S_F_3_T_0_T_F_F => {
                // Slot free: this update may be chosen.
                self.set_state(State::S_F_3_T_0_T_T_F);
            }
            State::S_F_3_T_0_T_T_F => {
                // Slot free: this update may be chosen.
            }
            State::S_F_3_T_1_T_F_F => {
                // Slot free: this update may be chosen.
                self.set_state(State::S_F_3_T_1_T_T_F);
            }
            State::S_F_3_T_1_T_T_F => {
                // Slot free: this update may be chosen.
            }
            State::FINISH => {}
            State::S_T_0_F_0_F_F_F => {
                // Slot free: this update may be chosen.
                // Choosing this update: voting and signalling not free.
                sink.send_vote();
                sink.send_not_free();
                self.set_state(State::S_T_0_T_0_F_T_T);
            }
            State::S_T_0_F_1_F_F_F => {
                // Slot free: this update may be chosen.
                // Choosing this update: voting and signalling not free.
                sink.send_vote();
                sink.send_not_free();
                self.set_state(State::S_T_0_T_1_F_T_T);
            }
            State::S_T_0_T_0_F_T_T => {
                // Slot free: this update may be chosen.
            }
            State::S_T_0_T_1_F_T_T => {
                // Slot free: this update may be chosen.
            }
            State::S_T_1_F_0_F_F_F => {
                // Slot free: this update may be chosen.
                // Choosing this update: voting and signalling not free.
                sink.send_vote();
                sink.send_not_free();
                self.set_state(State::S_T_1_T_0_F_T_T);
            }
            State::S_T_1_F_1_F_F_F => {
                // Slot free: this update may be chosen.
                // Choosing this update: voting and signalling not free.
                sink.send_vote();
                sink.send_not_free();
                self.set_state(State::S_T_1_T_1_F_T_T);
            }
            State::S_T_1_T_0_F_T_T => {
                // Slot free: this update may be chosen.
            }
            State::S_T_1_T_1_F_T_T => {
                // Slot free: this update may be chosen.
            }
            State::S_T_2_F_0_F_F_F => {
                // Slot free: this update may be chosen.
                // Choosing this update: voting and signalling not free.
                // Vote threshold (3) reached: sending commit.
                sink.send_vote();
                sink.send_commit();
                sink.send_not_free();
                self.set_state(State::S_T_2_T_0_T_T_T);
            }
            State::S_T_2_F_1_F_F_F => {
                // Slot free: this update may be chosen.
                // Choosing this update: voting and signalling not free.
                // Vote threshold (3) reached: sending commit.
                sink.send_vote();
                sink.send_commit();
                sink.send_not_free();
                self.set_state(State::S_T_2_T_1_T_T_T);
            }
            State::S_T_2_T_0_T_T_T => {
                // Slot free: this update may be chosen.
            }
            State::S_T_2_T_1_T_T_T => {
                // Slot free: this update may be chosen.
            }
            State::S_T_3_T_0_T_F_F => {
                // Slot free: this update may be chosen.
                self.set_state(State::S_T_3_T_0_T_T_F);
            }
            State::S_T_3_T_0_T_T_F => {
                // Slot free: this update may be chosen.
            }
            State::S_T_3_T_1_T_F_F => {
                // Slot free: this update may be chosen.
                self.set_state(State::S_T_3_T_1_T_T_F);
            }
            State::S_T_3_T_1_T_T_F => {
                // Slot free: this update may be chosen.
            }
        }
    }

    /// Handles NOT_FREE.
    pub fn receive_not_free<S: ActionSink + ?Sized>(&mut self, sink: &mut S) {
        match self.state {
            State::S_F_0_F_0_F_F_F => {
                // Slot taken by another update: may not choose.
            }
            State::S_F_0_F_0_F_T_F => {
                // Slot taken by another update: may not choose.
                self.set_state(State::S_F_0_F_0_F_F_F);
            }
            State::S_F_0_F_1_F_F_F => {
                // Slot taken by another update: may not choose.
            }
            State::S_F_0_F_1_F_T_F => {
                // Slot taken by another update: may not choose.
                self.set_state(State::S_F_0_F_1_F_F_F);
            }
            State::S_F_1_F_0_F_F_F => {
                // Slot taken by another update: may not choose.
            }
            State::S_F_1_F_0_F_T_F => {
                // Slot taken by another update: may not choose.
                self.set_state(State::S_F_1_F_0_F_F_F);
            }
            State::S_F_1_F_1_F_F_F => {
                // Slot taken by another update: may not choose.
            }
            State::S_F_1_F_1_F_T_F => {
                // Slot taken by another update: may not choose.
                self.set_state(State::S_F_1_F_1_F_F_F);
            }
            State::S_F_2_F_0_F_F_F => {
                // Slot taken by another update: may not choose.
            }
            State::S_F_2_F_0_F_T_F => {
                // Slot taken by another update: may not choose.
                self.set_state(State::S_F_2_F_0_F_F_F);
            }
            State::S_F_2_F_1_F_F_F => {
                // Slot taken by another update: may not choose.
            }
            State::S_F_2_F_1_F_T_F => {
                // Slot taken by another update: may not choose.
                self.set_state(State::S_F_2_F_1_F_F_F);
            }
            State::S_F_3_T_0_T_F_F => {
                // Already voted: not free ignored.
            }
            State::S_F_3_T_0_T_T_F => {
                // Already voted: not free ignored.
            }
            State::S_F_3_T_1_T_F_F => {
                // Already voted: not free ignored.
            }
            State::S_F_3_T_1_T_T_F => {
                // Already voted: not free ignored.
            }
            State::FINISH => {}
            State::S_T_0_F_0_F_F_F => {
                // Slot taken by another update: may not choose.
            }
            State::S_T_0_F_1_F_F_F => {
                // Slot taken by another update: may not choose.
            }
            State::S_T_0_T_0_F_T_T => {
                // Already voted: not free ignored.
            }
            State::S_T_0_T_1_F_T_T => {
                // Already voted: not free ignored.
            }
            State::S_T_1_F_0_F_F_F => {
                // Slot taken by another update: may not choose.
            }
            State::S_T_1_F_1_F_F_F => {
                // Slot taken by another update: may not choose.
            }
            State::S_T_1_T_0_F_T_T => {
                // Already voted: not free ignored.
            }
            State::S_T_1_T_1_F_T_T => {
                // Already voted: not free ignored.
            }
            State::S_T_2_F_0_F_F_F => {
                // Slot taken by another update: may not choose.
            }
            State::S_T_2_F_1_F_F_F => {
                // Slot taken by another update: may not choose.
            }
            State::S_T_2_T_0_T_T_T => {
                // Already voted: not free ignored.
            }
            State::S_T_2_T_1_T_T_T => {
                // Already voted: not free ignored.
            }
            State::S_T_3_T_0_T_F_F => {
                // Already voted: not free ignored.
            }
            State::S_T_3_T_0_T_T_F => {
                // Already voted: not free ignored.
            }
            State::S_T_3_T_1_T_F_F => {
                // Already voted: not free ignored.
            }
            State::S_T_3_T_1_T_T_F => {
                // Already voted: not free ignored.
            }
        }
    }
}
