//! Exact chromatic invariants by constrained backtracking.
//!
//! For each target `k`, starting at [`lower_bound`], the search looks for a
//! proper coloring with exactly `k` non-empty classes that also satisfies the
//! requested [`ConstraintSet`]. Every `k` below the returned value has been
//! searched to exhaustion, so the value is exact; when the node or time budget
//! runs out the solver returns [`SolveError::BudgetExhausted`] with the bounds
//! established so far.
//!
//! Search order: vertices by descending degree (ties by index), colors
//! ascending, and a new color index may only be opened after all lower ones
//! are in use. That canonical form removes the `k!` relabelings.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{Color, Coloring};
use crate::graph::Graph;

mod oracle;

pub use oracle::{exhaustive_oracle, ORACLE_MAX_VERTICES};

/// Which conditions on top of properness the coloring must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ConstraintSet {
    pub equitable: bool,
    pub dominator: bool,
}

impl ConstraintSet {
    /// χ
    pub const CHROMATIC: Self = ConstraintSet::new(false, false);
    /// χ_e
    pub const EQUITABLE: Self = ConstraintSet::new(true, false);
    /// χ_d
    pub const DOMINATOR: Self = ConstraintSet::new(false, true);
    /// χ_ed
    pub const EQUITABLE_DOMINATOR: Self = ConstraintSet::new(true, true);

    pub const ALL: [Self; 4] = [
        Self::CHROMATIC,
        Self::EQUITABLE,
        Self::DOMINATOR,
        Self::EQUITABLE_DOMINATOR,
    ];

    pub const fn new(equitable: bool, dominator: bool) -> Self {
        ConstraintSet {
            equitable,
            dominator,
        }
    }

    pub fn name(self) -> &'static str {
        match (self.equitable, self.dominator) {
            (false, false) => "chi",
            (true, false) => "chi-e",
            (false, true) => "chi-d",
            (true, true) => "chi-ed",
        }
    }
}

impl fmt::Display for ConstraintSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConstraintSet {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|cs| cs.name() == s)
            .ok_or_else(|| {
                format!("unknown invariant `{s}` (expected chi, chi-e, chi-d or chi-ed)")
            })
    }
}

/// Search limits. Both are checked; whichever trips first ends the search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: u64,
    pub time_limit: Option<Duration>,
}

impl Budget {
    pub const DEFAULT_NODES: u64 = 10_000_000;

    pub fn nodes(max_nodes: u64) -> Self {
        Budget {
            max_nodes,
            time_limit: None,
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::nodes(Self::DEFAULT_NODES)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveStats {
    /// Color assignments tried across all targets `k`.
    pub nodes: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub value: usize,
    pub witness: Coloring,
    pub stats: SolveStats,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("budget exhausted after {nodes} nodes; value lies in {lower}..={upper}")]
    BudgetExhausted {
        lower: usize,
        upper: usize,
        nodes: u64,
    },
    #[error("budget must allow at least one node")]
    ZeroBudget,
    #[error("graph has {0} vertices; the solver supports at most 64")]
    TooLarge(usize),
    #[error("the exhaustive oracle is capped at {max} vertices (got {n})")]
    OracleTooLarge { n: usize, max: usize },
}

/// A sound lower bound on the invariant: the size of a greedily grown clique,
/// and for equitable dominator colorings also a bound from neighborhoods.
///
/// With `k` classes every class has at least `⌊n/k⌋` vertices, and the class a
/// vertex `w` dominates is an independent subset of `N[w]`. So
/// `⌊n/k⌋ ≤ α(N[w])` for every `w`, which forces `k > n / (m + 1)` where `m` is
/// the smallest such `α`.
pub fn lower_bound(g: &Graph, cs: ConstraintSet) -> usize {
    let Some(adj) = g.bitmasks() else {
        return 1;
    };
    let clique = greedy_clique(&adj);
    if !(cs.equitable && cs.dominator) {
        return clique;
    }
    let m = (0..adj.len())
        .map(|w| max_independent(&adj, adj[w]).max(1))
        .min()
        .expect("graphs have vertices");
    clique.max(adj.len() / (m + 1) + 1)
}

/// Independence number of the subgraph induced by `mask`.
fn max_independent(adj: &[u64], mask: u64) -> usize {
    fn go(adj: &[u64], mask: u64, size: usize, best: &mut usize) {
        if size + mask.count_ones() as usize <= *best {
            return;
        }
        let mut rest = mask;
        let mut pick = None;
        let mut pick_deg = 0;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let deg = (adj[v] & mask).count_ones();
            if deg > pick_deg {
                pick = Some(v);
                pick_deg = deg;
            }
        }
        match pick {
            None => *best = size + mask.count_ones() as usize,
            Some(v) => {
                let bit = 1u64 << v;
                go(adj, mask & !bit & !adj[v], size + 1, best);
                go(adj, mask & !bit, size, best);
            }
        }
    }
    let mut best = 0;
    go(adj, mask, 0, &mut best);
    best
}

fn greedy_clique(adj: &[u64]) -> usize {
    let n = adj.len();
    let mut best = 1;
    for start in 0..n {
        let mut size = 1;
        let mut candidates = adj[start];
        while candidates != 0 {
            let pick = (0..n)
                .filter(|&v| candidates >> v & 1 == 1)
                .max_by_key(|&v| ((adj[v] & candidates).count_ones(), std::cmp::Reverse(v)))
                .unwrap();
            size += 1;
            candidates &= adj[pick];
        }
        best = best.max(size);
    }
    best
}

/// Computes the chromatic invariant selected by `cs`, with a witness.
pub fn solve(g: &Graph, cs: ConstraintSet, budget: Budget) -> Result<SolveResult, SolveError> {
    if budget.max_nodes == 0 {
        return Err(SolveError::ZeroBudget);
    }
    let adj = g.bitmasks().ok_or(SolveError::TooLarge(g.n()))?;
    let started = Instant::now();
    let n = g.n();

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(adj[v].count_ones()), v));

    let mut nodes = 0u64;
    let deadline = budget.time_limit.map(|t| started + t);
    for k in lower_bound(g, cs)..=n {
        let mut search = Search::new(&adj, &order, k, cs, budget.max_nodes - nodes, deadline);
        let outcome = search.run();
        nodes += search.nodes;
        match outcome {
            Ok(true) => {
                let witness = canonical_witness(&search.colors);
                debug_assert_eq!(witness.num_colors(), k);
                return Ok(SolveResult {
                    value: k,
                    witness,
                    stats: SolveStats {
                        nodes,
                        elapsed: started.elapsed(),
                    },
                });
            }
            Ok(false) => {}
            Err(Exhausted) => {
                return Err(SolveError::BudgetExhausted {
                    lower: k,
                    upper: n,
                    nodes,
                })
            }
        }
    }
    unreachable!("the all-singleton coloring satisfies every constraint set")
}

/// Relabels colors by first occurrence in vertex order, so vertex 1 gets 1.
fn canonical_witness(colors: &[u8]) -> Coloring {
    let mut relabel = [0 as Color; 64];
    let mut next = 0;
    let colors = colors
        .iter()
        .map(|&c| {
            let slot = &mut relabel[c as usize];
            if *slot == 0 {
                next += 1;
                *slot = next;
            }
            *slot
        })
        .collect();
    Coloring::new(colors).expect("search colors are dense and positive")
}

struct Exhausted;

const UNSET: u8 = u8::MAX;

struct Search<'a> {
    adj: &'a [u64],
    order: &'a [usize],
    closed: Vec<u64>,
    k: usize,
    cs: ConstraintSet,
    colors: Vec<u8>,
    class_mask: Vec<u64>,
    class_size: Vec<usize>,
    assigned: u64,
    used: usize,
    /// Equitable profile for exactly `k` classes: `floor` or `floor + 1`
    /// vertices each, with exactly `n_big_allowed` classes at `floor + 1`.
    floor: usize,
    n_big_allowed: usize,
    n_big: usize,
    /// Vertices still needed to lift every class to `floor`.
    deficit: usize,
    nodes: u64,
    max_nodes: u64,
    deadline: Option<Instant>,
}

impl<'a> Search<'a> {
    fn new(
        adj: &'a [u64],
        order: &'a [usize],
        k: usize,
        cs: ConstraintSet,
        max_nodes: u64,
        deadline: Option<Instant>,
    ) -> Self {
        let n = adj.len();
        let closed = adj.iter().enumerate().map(|(v, &m)| m | 1 << v).collect();
        let floor = n / k;
        Search {
            adj,
            order,
            closed,
            k,
            cs,
            colors: vec![UNSET; n],
            class_mask: vec![0; k],
            class_size: vec![0; k],
            assigned: 0,
            used: 0,
            floor,
            n_big_allowed: n - k * floor,
            n_big: 0,
            deficit: k * floor,
            nodes: 0,
            max_nodes,
            deadline,
        }
    }

    fn run(&mut self) -> Result<bool, Exhausted> {
        self.dfs(0)
    }

    fn dfs(&mut self, depth: usize) -> Result<bool, Exhausted> {
        let n = self.adj.len();
        if depth == n {
            return Ok(!self.cs.dominator || self.all_dominate());
        }
        let v = self.order[depth];
        let remaining = n - depth - 1;
        let limit = (self.used + 1).min(self.k);
        for c in 0..limit {
            if self.class_mask[c] & self.adj[v] != 0 {
                continue;
            }
            let opens = c == self.used;
            let used_after = self.used + opens as usize;
            if self.k - used_after > remaining {
                continue;
            }
            let size_after = self.class_size[c] + 1;
            let fills = size_after <= self.floor;
            if self.cs.equitable {
                if size_after > self.floor + 1 {
                    continue;
                }
                if size_after == self.floor + 1 && self.n_big == self.n_big_allowed {
                    continue;
                }
                if self.deficit - fills as usize > remaining {
                    continue;
                }
            }

            if self.nodes == self.max_nodes {
                return Err(Exhausted);
            }
            self.nodes += 1;
            if self.nodes % 4096 == 0 && self.deadline.is_some_and(|d| Instant::now() >= d) {
                return Err(Exhausted);
            }

            self.assign(v, c, opens, fills);
            let feasible = !self.cs.dominator || self.all_can_dominate();
            if feasible && self.dfs(depth + 1)? {
                return Ok(true);
            }
            self.unassign(v, c, opens, fills);
        }
        Ok(false)
    }

    fn assign(&mut self, v: usize, c: usize, opens: bool, fills: bool) {
        self.colors[v] = c as u8;
        self.class_mask[c] |= 1 << v;
        self.assigned |= 1 << v;
        self.class_size[c] += 1;
        self.used += opens as usize;
        self.deficit -= fills as usize;
        self.n_big += (self.class_size[c] == self.floor + 1) as usize;
    }

    fn unassign(&mut self, v: usize, c: usize, opens: bool, fills: bool) {
        self.n_big -= (self.class_size[c] == self.floor + 1) as usize;
        self.colors[v] = UNSET;
        self.class_mask[c] &= !(1 << v);
        self.assigned &= !(1 << v);
        self.class_size[c] -= 1;
        self.used -= opens as usize;
        self.deficit += fills as usize;
    }

    /// Exact dominator condition on a complete coloring.
    fn all_dominate(&self) -> bool {
        self.closed.iter().all(|&closed| {
            self.class_mask[..self.used]
                .iter()
                .any(|&class| class & !closed == 0)
        })
    }

    /// Necessary condition on a partial coloring. Classes only grow, so an
    /// open class with a member outside `N[w]` is lost to `w` for good; an
    /// unopened class can still land inside `N[w]` only through an uncolored
    /// vertex of `N[w]`.
    fn all_can_dominate(&self) -> bool {
        let can_open = self.used < self.k;
        self.closed.iter().all(|&closed| {
            (can_open && closed & !self.assigned != 0)
                || self.class_mask[..self.used]
                    .iter()
                    .any(|&class| class & !closed == 0)
        })
    }
}
