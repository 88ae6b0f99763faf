use super::{BftParameters, BftState};

fn count(n: u32, one: &str, many: &str) -> String {
    match n {
        0 => format!("no {many}"),
        1 => format!("1 {one}"),
        _ => format!("{n} {many}"),
    }
}

/// Commentary lines describing a state in terms of the commit algorithm.
pub fn annotate(s: &BftState, params: &BftParameters) -> Vec<String> {
    let vt = params.vote_threshold;
    let ct = params.commit_threshold;
    let mut out = Vec::with_capacity(8);

    out.push(if s.put_received {
        "Have received initial put from client.".to_string()
    } else {
        "Have not yet received initial put from client.".to_string()
    });

    out.push(
        match (s.vote_sent, s.has_chosen, s.put_received, s.could_choose) {
            (true, true, ..) => "Have voted for this update, having chosen it.",
            (true, false, ..) => "Have voted for this update since the vote threshold was reached.",
            (false, _, false, _) => "Have not voted since initial put has not been received.",
            (false, _, true, false) => "Have not voted since another update has already been voted for.",
            (false, _, true, true) => "Have not voted yet.",
        }
        .to_string(),
    );

    out.push(format!(
        "Have received {} and {}.",
        count(s.votes_received, "vote", "votes"),
        count(s.commits_received, "commit", "commits")
    ));

    out.push(if s.commit_sent {
        format!("Have sent a commit since the vote threshold ({vt}) has been reached.")
    } else {
        format!(
            "Have not sent a commit since neither the vote threshold ({vt}) nor the external commit threshold ({ct}) has been reached."
        )
    });

    out.push(if s.could_choose {
        "May choose since no other ongoing update has been voted for.".to_string()
    } else {
        "May not choose since another ongoing update has been voted for.".to_string()
    });

    out.push(
        match (s.has_chosen, s.could_choose) {
            (true, _) => "Have chosen this update.",
            (false, false) => "Have not chosen this update since another ongoing update has been chosen.",
            (false, true) => "Have not chosen this update yet.",
        }
        .to_string(),
    );

    let votes_needed = vt.saturating_sub(s.total_votes());
    if !s.commit_sent && votes_needed > 0 {
        out.push(format!(
            "Waiting for {} (including local vote if any) before sending commit.",
            count(votes_needed, "further vote", "further votes")
        ));
    }
    let commits_needed = ct.saturating_sub(s.commits_received);
    out.push(format!(
        "Waiting for {} to finish.",
        count(commits_needed, "further external commit", "further external commits")
    ));
    out
}
