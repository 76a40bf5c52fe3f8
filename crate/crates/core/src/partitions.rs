//! χ_ed of complete bipartite graphs through equitable integer partitions.
//!
//! In `K_{a,b}` a color class can never straddle the two sides, and every
//! vertex dominates every class on the opposite side. So an equitable
//! dominator coloring is exactly a pair of partitions of `a` and `b` whose
//! parts, taken together, differ by at most one, and χ_ed is the smallest
//! total number of parts.

use serde::Serialize;
use thiserror::Error;

/// Largest `n` accepted by the enumeration routines (`p(40) = 37338`).
pub const PARTITION_CAP: usize = 40;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("{n} is outside the supported range 1..={cap}")]
    OutOfCap { n: usize, cap: usize },
}

/// A partition of `total` into positive parts, stored in non-increasing order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts `parts` into non-increasing order. Panics on an empty list or a zero part.
    pub fn new(mut parts: Vec<usize>) -> Self {
        assert!(!parts.is_empty() && parts.iter().all(|&p| p > 0));
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// `n` split into `k` parts as evenly as possible.
    pub fn near_equal(n: usize, k: usize) -> Self {
        assert!(k >= 1 && k <= n);
        let q = n / k;
        let r = n % k;
        let parts = std::iter::repeat(q + 1)
            .take(r)
            .chain(std::iter::repeat(q).take(k - r))
            .collect();
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn max_part(&self) -> usize {
        self.parts[0]
    }

    pub fn min_part(&self) -> usize {
        *self.parts.last().unwrap()
    }

    pub fn is_equitable(&self) -> bool {
        self.max_part() - self.min_part() <= 1
    }
}

/// Partitions of `a` and `b` whose combined parts spread by at most one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquitablePair {
    pub part_a: Partition,
    pub part_b: Partition,
}

impl EquitablePair {
    pub fn color_count(&self) -> usize {
        self.part_a.len() + self.part_b.len()
    }

    pub fn min_part(&self) -> usize {
        self.part_a.min_part().min(self.part_b.min_part())
    }

    pub fn max_part(&self) -> usize {
        self.part_a.max_part().max(self.part_b.max_part())
    }

    pub fn is_balanced(&self) -> bool {
        self.max_part() - self.min_part() <= 1
    }
}

fn check_cap(n: usize) -> Result<(), PartitionError> {
    if n == 0 || n > PARTITION_CAP {
        Err(PartitionError::OutOfCap {
            n,
            cap: PARTITION_CAP,
        })
    } else {
        Ok(())
    }
}

/// All partitions of `n`, parts non-increasing, in reverse lexicographic order.
pub fn integer_partitions(n: usize) -> Result<Vec<Partition>, PartitionError> {
    check_cap(n)?;
    let mut out = Vec::new();
    let mut current = Vec::new();
    partitions_rec(n, n, &mut current, &mut out);
    Ok(out)
}

fn partitions_rec(
    rest: usize,
    max_part: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if rest == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for part in (1..=max_part.min(rest)).rev() {
        current.push(part);
        partitions_rec(rest - part, part, current, out);
        current.pop();
    }
}

/// Equitable partitions of `n`: one per part count `k = 1..=n`, in that order.
pub fn equitable_partitions(n: usize) -> Result<Vec<Partition>, PartitionError> {
    check_cap(n)?;
    Ok((1..=n).map(|k| Partition::near_equal(n, k)).collect())
}

/// The same set as [`equitable_partitions`], obtained by filtering
/// [`integer_partitions`]. Ordered by part count.
pub fn equitable_partitions_by_filter(n: usize) -> Result<Vec<Partition>, PartitionError> {
    let mut filtered: Vec<Partition> = integer_partitions(n)?
        .into_iter()
        .filter(Partition::is_equitable)
        .collect();
    filtered.sort_by_key(Partition::len);
    Ok(filtered)
}

/// An optimal pair by pairing every equitable partition of `a` with every one
/// of `b`. Among pairs with the fewest parts, prefers the larger smallest
/// part, then the lexicographically smallest `part_a`.
pub fn min_equitable_pair(a: usize, b: usize) -> Result<EquitablePair, PartitionError> {
    check_cap(a + b)?;
    check_cap(a)?;
    check_cap(b)?;
    let parts_a = equitable_partitions_by_filter(a)?;
    let parts_b = equitable_partitions_by_filter(b)?;
    let mut best: Option<EquitablePair> = None;
    for pa in &parts_a {
        for pb in &parts_b {
            let pair = EquitablePair {
                part_a: pa.clone(),
                part_b: pb.clone(),
            };
            if !pair.is_balanced() {
                continue;
            }
            let better = match &best {
                None => true,
                Some(cur) => {
                    let key = |p: &EquitablePair| {
                        (
                            p.color_count(),
                            std::cmp::Reverse(p.min_part()),
                            p.part_a.parts().to_vec(),
                        )
                    };
                    key(&pair) < key(cur)
                }
            };
            if better {
                best = Some(pair);
            }
        }
    }
    Ok(best.expect("all-ones partitions always pair up"))
}

/// Fewest parts with every part in `{s, s + 1}`, if `n` splits that way.
fn min_parts_with_base(n: usize, s: usize) -> Option<usize> {
    let count = n.div_ceil(s + 1);
    (count * s <= n).then_some(count)
}

/// χ_ed(K_{a,b}) by scanning the common base part size `s`.
pub fn chi_ed_complete_bipartite(a: usize, b: usize) -> usize {
    assert!(a >= 1 && b >= 1);
    (1..=a.max(b))
        .filter_map(|s| Some(min_parts_with_base(a, s)? + min_parts_with_base(b, s)?))
        .min()
        .expect("s = 1 always works")
}

/// The direct construction behind [`chi_ed_complete_bipartite`], as partitions.
pub fn equitable_pair_direct(a: usize, b: usize) -> EquitablePair {
    let (_, ca, cb) = (1..=a.max(b))
        .filter_map(|s| Some((s, min_parts_with_base(a, s)?, min_parts_with_base(b, s)?)))
        .min_by_key(|&(s, ca, cb)| (ca + cb, std::cmp::Reverse(s)))
        .expect("s = 1 always works");
    EquitablePair {
        part_a: Partition::near_equal(a, ca),
        part_b: Partition::near_equal(b, cb),
    }
}
