//! Brute-force reference for the solver, used by tests.
//!
//! Enumerates every partition of `1..=n` into exactly `k` blocks as a
//! restricted growth string in plain vertex order, rejects only improper
//! partial assignments, and checks the remaining conditions on complete
//! colorings. The conditions are invariant under renaming colors, so one
//! representative per partition covers all surjective assignments. Nothing
//! here shares code with the bitmask search or with the validator.

use crate::graph::Graph;

use super::{ConstraintSet, SolveError};

pub const ORACLE_MAX_VERTICES: usize = 10;

/// Smallest `k` admitting a coloring with exactly `k` classes that satisfies `cs`.
pub fn exhaustive_oracle(g: &Graph, cs: ConstraintSet) -> Result<usize, SolveError> {
    let n = g.n();
    if n > ORACLE_MAX_VERTICES {
        return Err(SolveError::OracleTooLarge {
            n,
            max: ORACLE_MAX_VERTICES,
        });
    }
    let mut colors = vec![0usize; n];
    for k in 1..=n {
        if enumerate(g, cs, k, 0, 0, &mut colors) {
            return Ok(k);
        }
    }
    unreachable!("n singleton classes always qualify")
}

fn enumerate(
    g: &Graph,
    cs: ConstraintSet,
    k: usize,
    index: usize,
    blocks: usize,
    colors: &mut [usize],
) -> bool {
    let n = colors.len();
    if index == n {
        return blocks == k && satisfies(g, cs, k, colors);
    }
    let v = index + 1;
    for c in 0..(blocks + 1).min(k) {
        let clash = (1..v).any(|u| colors[u - 1] == c && g.has_edge(u, v));
        if clash {
            continue;
        }
        colors[index] = c;
        if enumerate(g, cs, k, index + 1, blocks.max(c + 1), colors) {
            return true;
        }
    }
    false
}

fn satisfies(g: &Graph, cs: ConstraintSet, k: usize, colors: &[usize]) -> bool {
    let n = colors.len();
    if cs.equitable {
        let mut sizes = vec![0usize; k];
        for &c in colors {
            sizes[c] += 1;
        }
        let min = sizes.iter().min().unwrap();
        let max = sizes.iter().max().unwrap();
        if max - min > 1 {
            return false;
        }
    }
    if cs.dominator {
        for v in 1..=n {
            let dominates_some = (0..k).any(|c| {
                (1..=n)
                    .filter(|&u| colors[u - 1] == c)
                    .all(|u| u == v || g.has_edge(u, v))
            });
            if !dominates_some {
                return false;
            }
        }
    }
    true
}
