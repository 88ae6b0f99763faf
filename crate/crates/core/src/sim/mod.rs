//! Seeded simulation of replica nodes running a generated commit machine.
//!
//! Every node runs one machine instance per update. The client sends PUT to
//! every node, machine actions broadcast VOTE and COMMIT to all peers, and a
//! per-node slot controller supplies FREE and NOT_FREE locally. Delivery
//! order is drawn from a ChaCha generator seeded by the configuration, so a
//! (machine, config) pair fully determines the trace.

mod check;
mod cosim;

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::bft::{BftParameters, COMMIT, FREE, NOT_FREE, PUT, SEND_COMMIT, SEND_NOT_FREE, SEND_VOTE, VOTE};
use crate::fsm::{step, StateMachine};

pub use check::{check_agreement, Verdict};
pub use cosim::{co_simulate, random_sequences, CoSimVerdict, MachineUnderTest};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimError {
    #[error("machine was generated for r={machine} but the configuration has r={config}")]
    ReplicationMismatch { machine: u32, config: u32 },
    #[error("fault plan names node {node} but only {r} nodes exist")]
    NoSuchNode { node: usize, r: u32 },
    #[error("fault plan names node {0} more than once")]
    DuplicateFault(usize),
    #[error("machine does not accept message {0}")]
    Machine(String),
    #[error("invalid replication factor: {0}")]
    Parameters(#[from] crate::bft::ParameterError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scenario {
    /// One update proposed to every node.
    SingleUpdate,
    /// Two competing updates proposed to every node.
    ConcurrentUpdates,
}

impl Scenario {
    pub fn updates(self) -> u32 {
        match self {
            Scenario::SingleUpdate => 1,
            Scenario::ConcurrentUpdates => 2,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Scenario::SingleUpdate => "single_update",
            Scenario::ConcurrentUpdates => "concurrent_updates",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Delivery {
    /// A random non-empty link is chosen and its oldest message delivered.
    FifoPerLink,
    /// Any in-flight message may be delivered next.
    RandomInterleave,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FaultKind {
    /// Processes deliveries until the global step counter reaches the value,
    /// then stops.
    CrashAtStep(u64),
    /// Processes deliveries but sends nothing.
    Silent,
    /// Replaces each outgoing message, per peer, with a random protocol
    /// message for a random update, or drops it.
    ByzantineEquivocate,
}

impl FaultKind {
    pub fn label(self) -> &'static str {
        match self {
            FaultKind::CrashAtStep(_) => "crash",
            FaultKind::Silent => "silent",
            FaultKind::ByzantineEquivocate => "byzantine",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fault {
    pub node: usize,
    pub kind: FaultKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimConfig {
    pub r: u32,
    pub seed: u64,
    pub scenario: Scenario,
    pub faults: Vec<Fault>,
    pub delivery: Delivery,
}

impl SimConfig {
    pub fn new(r: u32, seed: u64, scenario: Scenario) -> Self {
        Self { r, seed, scenario, faults: Vec::new(), delivery: Delivery::RandomInterleave }
    }

    pub fn validate(&self) -> Result<(), SimError> {
        BftParameters::new(self.r)?;
        let mut seen = BTreeSet::new();
        for f in &self.faults {
            if f.node >= self.r as usize {
                return Err(SimError::NoSuchNode { node: f.node, r: self.r });
            }
            if !seen.insert(f.node) {
                return Err(SimError::DuplicateFault(f.node));
            }
        }
        Ok(())
    }

    pub fn fault_of(&self, node: usize) -> Option<FaultKind> {
        self.faults.iter().find(|f| f.node == node).map(|f| f.kind)
    }

    pub fn is_faulty(&self, node: usize) -> bool {
        self.fault_of(node).is_some()
    }

    /// Faulty node count against the tolerance `f`.
    pub fn within_budget(&self) -> bool {
        BftParameters::new(self.r).map(|p| self.faults.len() as u32 <= p.f).unwrap_or(false)
    }

    /// Fault summary such as `silent:1;crash:1`, or `none`.
    pub fn fault_summary(&self) -> String {
        let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
        for f in &self.faults {
            *counts.entry(f.kind.label()).or_default() += 1;
        }
        if counts.is_empty() {
            return "none".into();
        }
        counts.iter().map(|(k, v)| format!("{k}:{v}")).collect::<Vec<_>>().join(";")
    }
}

/// Sender of a delivered message.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Endpoint {
    Client,
    /// The node's own slot controller.
    Slot,
    Node(usize),
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Endpoint::Client => f.write_str("client"),
            Endpoint::Slot => f.write_str("slot"),
            Endpoint::Node(n) => write!(f, "n{n}"),
        }
    }
}

/// One delivery processed by a node machine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Event {
    pub step: u64,
    pub from: Endpoint,
    pub to: usize,
    pub update: u32,
    pub message: String,
    pub state_before: String,
    pub state_after: String,
    pub actions: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NodeStatus {
    /// Finished every update, listed in finishing order.
    Finished(Vec<u32>),
    /// Queue drained with some update unfinished; lists those that did finish.
    Stuck(Vec<u32>),
    Crashed(Vec<u32>),
}

impl NodeStatus {
    pub fn finished(&self) -> &[u32] {
        match self {
            NodeStatus::Finished(u) | NodeStatus::Stuck(u) | NodeStatus::Crashed(u) => u,
        }
    }
}

impl fmt::Display for NodeStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (label, ids) = match self {
            NodeStatus::Finished(u) => ("FINISHED", u),
            NodeStatus::Stuck(u) => ("STUCK", u),
            NodeStatus::Crashed(u) => ("CRASHED", u),
        };
        f.write_str(label)?;
        for id in ids {
            write!(f, " u{id}")?;
        }
        Ok(())
    }
}

/// Ordered event log and terminal node statuses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimTrace {
    pub events: Vec<Event>,
    pub statuses: Vec<NodeStatus>,
}

impl SimTrace {
    pub const HEADER: &'static str = "step,from,to,message,state_before,state_after,actions";

    /// Line-delimited export: a header, one line per event, then one
    /// `status,<node>,<status>` line per node.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(self.events.len() * 64);
        out.push_str(Self::HEADER);
        out.push('\n');
        for e in &self.events {
            out.push_str(&format!(
                "{},{},n{},{}@u{},{},{},{}\n",
                e.step,
                e.from,
                e.to,
                e.message,
                e.update,
                e.state_before,
                e.state_after,
                e.actions.join(";")
            ));
        }
        for (i, s) in self.statuses.iter().enumerate() {
            out.push_str(&format!("status,n{i},{s}\n"));
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct Envelope {
    from: Endpoint,
    to: usize,
    update: u32,
    kind: Kind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Kind {
    Put,
    Vote,
    Commit,
    Free,
    NotFree,
}

impl Kind {
    fn message(self) -> &'static str {
        match self {
            Kind::Put => PUT,
            Kind::Vote => VOTE,
            Kind::Commit => COMMIT,
            Kind::Free => FREE,
            Kind::NotFree => NOT_FREE,
        }
    }
}

/// Local source of FREE and NOT_FREE; grants the slot to one update at a time.
#[derive(Debug, Clone, Default)]
pub struct SlotController {
    granted: Option<u32>,
    pending: VecDeque<u32>,
}

impl SlotController {
    /// Registers an arriving update; returns it if the slot is granted now.
    pub fn on_put(&mut self, update: u32) -> Option<u32> {
        if self.granted.is_none() {
            self.granted = Some(update);
            Some(update)
        } else {
            self.pending.push_back(update);
            None
        }
    }

    /// Releases the slot if `update` held it; returns the next grant.
    pub fn on_finish(&mut self, update: u32) -> Option<u32> {
        self.pending.retain(|&u| u != update);
        if self.granted == Some(update) {
            self.granted = self.pending.pop_front();
            self.granted
        } else {
            None
        }
    }

    pub fn granted(&self) -> Option<u32> {
        self.granted
    }
}

struct Node {
    states: Vec<String>,
    finished: Vec<u32>,
    seen: BTreeSet<(Endpoint, u32, Kind)>,
    slot: SlotController,
    crashed: bool,
}

enum Network {
    Links(BTreeMap<(Endpoint, usize), VecDeque<Envelope>>),
    Pool(Vec<Envelope>),
}

impl Network {
    fn push(&mut self, e: Envelope) {
        match self {
            Network::Links(links) => links.entry((e.from, e.to)).or_default().push_back(e),
            Network::Pool(pool) => pool.push(e),
        }
    }

    fn pop(&mut self, rng: &mut ChaCha8Rng) -> Option<Envelope> {
        match self {
            Network::Links(links) => {
                links.retain(|_, q| !q.is_empty());
                if links.is_empty() {
                    return None;
                }
                let i = rng.gen_range(0..links.len());
                let key = *links.keys().nth(i).expect("index within bounds");
                links.get_mut(&key).and_then(VecDeque::pop_front)
            }
            Network::Pool(pool) => {
                if pool.is_empty() {
                    return None;
                }
                let i = rng.gen_range(0..pool.len());
                Some(pool.remove(i))
            }
        }
    }
}

struct Sim<'m> {
    machine: &'m StateMachine,
    config: &'m SimConfig,
    rng: ChaCha8Rng,
    nodes: Vec<Node>,
    network: Network,
    events: Vec<Event>,
    step: u64,
}

impl<'m> Sim<'m> {
    fn crashed_now(&self, node: usize) -> bool {
        matches!(self.config.fault_of(node), Some(FaultKind::CrashAtStep(k)) if self.step >= k)
    }

    /// Sends `kind` for `update` from `from` to every peer, applying its fault.
    fn broadcast(&mut self, from: usize, update: u32, kind: Kind) {
        let updates = self.config.scenario.updates();
        for to in 0..self.config.r as usize {
            if to == from {
                continue;
            }
            match self.config.fault_of(from) {
                Some(FaultKind::Silent) => {}
                Some(FaultKind::ByzantineEquivocate) => {
                    let choice = self.rng.gen_range(0..3);
                    let fake_update = self.rng.gen_range(0..updates);
                    let fake = match choice {
                        0 => Some(Kind::Vote),
                        1 => Some(Kind::Commit),
                        _ => None,
                    };
                    if let Some(kind) = fake {
                        self.network.push(Envelope { from: Endpoint::Node(from), to, update: fake_update, kind });
                    }
                }
                _ => self.network.push(Envelope { from: Endpoint::Node(from), to, update, kind }),
            }
        }
    }

    /// Delivers one envelope and everything the local slot controller emits in response.
    fn deliver(&mut self, first: Envelope) -> Result<(), SimError> {
        let node = first.to;
        let mut local = VecDeque::from([first]);
        while let Some(env) = local.pop_front() {
            if self.nodes[node].crashed || self.crashed_now(node) {
                self.nodes[node].crashed = true;
                return Ok(());
            }
            let u = env.update as usize;
            if self.nodes[node].states[u] == self.machine.finish_state() {
                continue;
            }
            if matches!(env.from, Endpoint::Node(_) | Endpoint::Client)
                && !self.nodes[node].seen.insert((env.from, env.update, env.kind))
            {
                continue;
            }
            let before = self.nodes[node].states[u].clone();
            let (actions, after) =
                step(self.machine, &before, env.kind.message()).map_err(|e| SimError::Machine(e.to_string()))?;
            let actions = actions.to_vec();
            let after = after.to_string();
            self.events.push(Event {
                step: self.step,
                from: env.from,
                to: node,
                update: env.update,
                message: env.kind.message().to_string(),
                state_before: before,
                state_after: after.clone(),
                actions: actions.clone(),
            });
            self.step += 1;
            self.nodes[node].states[u] = after.clone();

            for a in &actions {
                match a.as_str() {
                    SEND_VOTE => self.broadcast(node, env.update, Kind::Vote),
                    SEND_COMMIT => self.broadcast(node, env.update, Kind::Commit),
                    SEND_NOT_FREE => {
                        for other in 0..self.config.scenario.updates() {
                            if other != env.update
                                && self.nodes[node].states[other as usize] != self.machine.finish_state()
                            {
                                local.push_back(Envelope {
                                    from: Endpoint::Slot,
                                    to: node,
                                    update: other,
                                    kind: Kind::NotFree,
                                });
                            }
                        }
                    }
                    _ => {}
                }
            }
            if env.kind == Kind::Put {
                if let Some(g) = self.nodes[node].slot.on_put(env.update) {
                    local.push_back(Envelope { from: Endpoint::Slot, to: node, update: g, kind: Kind::Free });
                }
            }
            if after == self.machine.finish_state() {
                self.nodes[node].finished.push(env.update);
                if let Some(g) = self.nodes[node].slot.on_finish(env.update) {
                    local.push_back(Envelope { from: Endpoint::Slot, to: node, update: g, kind: Kind::Free });
                }
            }
        }
        Ok(())
    }
}

/// Runs one simulation to quiescence.
pub fn run_simulation(machine: &StateMachine, config: &SimConfig) -> Result<SimTrace, SimError> {
    config.validate()?;
    let machine_r = machine.parameters().replication_factor;
    if machine_r != config.r {
        return Err(SimError::ReplicationMismatch { machine: machine_r, config: config.r });
    }
    let r = config.r as usize;
    let updates = config.scenario.updates();
    let mut sim = Sim {
        machine,
        config,
        rng: ChaCha8Rng::seed_from_u64(config.seed),
        nodes: (0..r)
            .map(|_| Node {
                states: vec![machine.start_state().to_string(); updates as usize],
                finished: Vec::new(),
                seen: BTreeSet::new(),
                slot: SlotController::default(),
                crashed: false,
            })
            .collect(),
        network: match config.delivery {
            Delivery::FifoPerLink => Network::Links(BTreeMap::new()),
            Delivery::RandomInterleave => Network::Pool(Vec::new()),
        },
        events: Vec::new(),
        step: 0,
    };

    for update in 0..updates {
        for to in 0..r {
            sim.network.push(Envelope { from: Endpoint::Client, to, update, kind: Kind::Put });
        }
    }
    for node in 0..r {
        if config.fault_of(node) == Some(FaultKind::ByzantineEquivocate) {
            sim.broadcast(node, 0, Kind::Vote);
        }
    }
    while let Some(env) = sim.network.pop(&mut sim.rng) {
        sim.deliver(env)?;
    }

    let statuses = sim
        .nodes
        .iter()
        .enumerate()
        .map(|(i, n)| {
            let crashed = n.crashed || matches!(config.fault_of(i), Some(FaultKind::CrashAtStep(k)) if sim.step >= k);
            if crashed {
                NodeStatus::Crashed(n.finished.clone())
            } else if n.finished.len() == updates as usize {
                NodeStatus::Finished(n.finished.clone())
            } else {
                NodeStatus::Stuck(n.finished.clone())
            }
        })
        .collect();
    Ok(SimTrace { events: sim.events, statuses })
}

/// Fault plan assigning each kind to distinct nodes chosen by `seed`.
///
/// Crash steps are drawn from `0..4r` unless `crash_at` is given.
pub fn seeded_fault_plan(
    r: u32,
    seed: u64,
    silent: usize,
    crash: usize,
    byzantine: usize,
    crash_at: Option<u64>,
) -> Result<Vec<Fault>, SimError> {
    let total = silent + crash + byzantine;
    if total > r as usize {
        return Err(SimError::NoSuchNode { node: total - 1, r });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut nodes: Vec<usize> = (0..r as usize).collect();
    for i in (1..nodes.len()).rev() {
        let j = rng.gen_range(0..=i);
        nodes.swap(i, j);
    }
    let mut out = Vec::with_capacity(total);
    let mut it = nodes.into_iter();
    for _ in 0..silent {
        out.push(Fault { node: it.next().expect("checked count"), kind: FaultKind::Silent });
    }
    for _ in 0..crash {
        let k = crash_at.unwrap_or_else(|| rng.gen_range(0..4 * u64::from(r)));
        out.push(Fault { node: it.next().expect("checked count"), kind: FaultKind::CrashAtStep(k) });
    }
    for _ in 0..byzantine {
        out.push(Fault { node: it.next().expect("checked count"), kind: FaultKind::ByzantineEquivocate });
    }
    out.sort_by_key(|f| f.node);
    Ok(out)
}
