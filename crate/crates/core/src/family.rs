//! Named graph families and their canonical vertex numbering.
//!
//! | family                 | numbering                                                   |
//! |------------------------|-------------------------------------------------------------|
//! | `Path n`, `Cycle n`    | `v_i = i` along the path / cycle                            |
//! | `CompleteBipartite a b`| side A = `1..=a`, side B = `a+1..=a+b`                      |
//! | `BiStar a b`           | supports `u = 1`, `v = 2`; u's pendants `3..=a+2`, v's after |
//! | `Wheel t`              | rim `1..=t` in cycle order, hub `t+1`                       |
//! | `Helm t`               | rim `1..=t`, hub `t+1`, pendant of rim `i` is `t+1+i`       |

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    BiStar(usize, usize),
    Wheel(usize),
    Helm(usize),
}

/// The family kind without parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyKind {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    BiStar,
    Wheel,
    Helm,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 7] = [
        FamilyKind::Path,
        FamilyKind::Cycle,
        FamilyKind::Complete,
        FamilyKind::CompleteBipartite,
        FamilyKind::BiStar,
        FamilyKind::Wheel,
        FamilyKind::Helm,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Path => "path",
            FamilyKind::Cycle => "cycle",
            FamilyKind::Complete => "complete",
            FamilyKind::CompleteBipartite => "complete-bipartite",
            FamilyKind::BiStar => "bistar",
            FamilyKind::Wheel => "wheel",
            FamilyKind::Helm => "helm",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            FamilyKind::CompleteBipartite | FamilyKind::BiStar => 2,
            _ => 1,
        }
    }

    /// Smallest admissible value of every parameter.
    pub fn min_param(self) -> usize {
        match self {
            FamilyKind::Cycle | FamilyKind::Wheel | FamilyKind::Helm => 3,
            _ => 1,
        }
    }

    /// Instantiates the family from a parameter list, checking arity and ranges.
    pub fn with_params(self, params: &[usize]) -> Result<Family, GraphError> {
        if params.len() != self.arity() {
            return Err(GraphError::ParameterOutOfRange {
                family: self.name(),
                requirement: if self.arity() == 2 {
                    "exactly two parameters"
                } else {
                    "exactly one parameter"
                },
                got: format!("{params:?}"),
            });
        }
        let family = match self {
            FamilyKind::Path => Family::Path(params[0]),
            FamilyKind::Cycle => Family::Cycle(params[0]),
            FamilyKind::Complete => Family::Complete(params[0]),
            FamilyKind::CompleteBipartite => Family::CompleteBipartite(params[0], params[1]),
            FamilyKind::BiStar => Family::BiStar(params[0], params[1]),
            FamilyKind::Wheel => Family::Wheel(params[0]),
            FamilyKind::Helm => Family::Helm(params[0]),
        };
        family.check()?;
        Ok(family)
    }
}

impl FromStr for FamilyKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let kind = match s.to_ascii_lowercase().as_str() {
            "path" => FamilyKind::Path,
            "cycle" => FamilyKind::Cycle,
            "complete" => FamilyKind::Complete,
            "complete-bipartite" | "bipartite" | "kab" => FamilyKind::CompleteBipartite,
            "bistar" | "bi-star" => FamilyKind::BiStar,
            "wheel" => FamilyKind::Wheel,
            "helm" => FamilyKind::Helm,
            other => return Err(format!("unknown family `{other}`")),
        };
        Ok(kind)
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Family {
    pub fn kind(&self) -> FamilyKind {
        match self {
            Family::Path(_) => FamilyKind::Path,
            Family::Cycle(_) => FamilyKind::Cycle,
            Family::Complete(_) => FamilyKind::Complete,
            Family::CompleteBipartite(..) => FamilyKind::CompleteBipartite,
            Family::BiStar(..) => FamilyKind::BiStar,
            Family::Wheel(_) => FamilyKind::Wheel,
            Family::Helm(_) => FamilyKind::Helm,
        }
    }

    pub fn params(&self) -> Vec<usize> {
        match *self {
            Family::Path(n) | Family::Cycle(n) | Family::Complete(n) => vec![n],
            Family::Wheel(t) | Family::Helm(t) => vec![t],
            Family::CompleteBipartite(a, b) | Family::BiStar(a, b) => vec![a, b],
        }
    }

    /// Number of vertices of the built graph.
    pub fn order(&self) -> usize {
        match *self {
            Family::Path(n) | Family::Cycle(n) | Family::Complete(n) => n,
            Family::CompleteBipartite(a, b) => a + b,
            Family::BiStar(a, b) => a + b + 2,
            Family::Wheel(t) => t + 1,
            Family::Helm(t) => 2 * t + 1,
        }
    }

    pub fn check(&self) -> Result<(), GraphError> {
        let kind = self.kind();
        let min = kind.min_param();
        if self.params().iter().all(|&p| p >= min) {
            return Ok(());
        }
        let requirement = match kind {
            FamilyKind::Path | FamilyKind::Complete => "n ≥ 1",
            FamilyKind::Cycle => "n ≥ 3",
            FamilyKind::CompleteBipartite | FamilyKind::BiStar => "a, b ≥ 1",
            FamilyKind::Wheel | FamilyKind::Helm => "t ≥ 3",
        };
        Err(GraphError::ParameterOutOfRange {
            family: kind.name(),
            requirement,
            got: self.params_label(),
        })
    }

    pub fn params_label(&self) -> String {
        self.params()
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn build(&self) -> Result<Graph, GraphError> {
        self.check()?;
        match *self {
            Family::Path(n) => Graph::from_edges(n, (1..n).map(|i| (i, i + 1))),
            Family::Cycle(n) => Graph::from_edges(n, cycle_edges(n)),
            Family::Complete(n) => Graph::complete(n),
            Family::CompleteBipartite(a, b) => Graph::from_edges(
                a + b,
                (1..=a).flat_map(|u| (a + 1..=a + b).map(move |v| (u, v))),
            ),
            Family::BiStar(a, b) => {
                let edges = std::iter::once((1, 2))
                    .chain((3..=a + 2).map(|p| (1, p)))
                    .chain((a + 3..=a + b + 2).map(|p| (2, p)));
                Graph::from_edges(a + b + 2, edges)
            }
            Family::Wheel(t) => {
                let hub = t + 1;
                let edges = cycle_edges(t).chain((1..=t).map(move |i| (i, hub)));
                Graph::from_edges(t + 1, edges)
            }
            Family::Helm(t) => {
                let hub = t + 1;
                let edges = cycle_edges(t)
                    .chain((1..=t).map(move |i| (i, hub)))
                    .chain((1..=t).map(move |i| (i, hub + i)));
                Graph::from_edges(2 * t + 1, edges)
            }
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.kind(), self.params_label())
    }
}

fn cycle_edges(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=n).map(move |i| (i, i % n + 1))
}

/// A named family instance, optionally complemented.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GraphClassSpec {
    pub family: Family,
    pub complement: bool,
}

impl GraphClassSpec {
    pub fn new(family: Family) -> Self {
        GraphClassSpec {
            family,
            complement: false,
        }
    }

    pub fn complemented(family: Family) -> Self {
        GraphClassSpec {
            family,
            complement: true,
        }
    }

    /// Builds the instance; complemented specs yield `complement(build(base))`.
    pub fn build(&self) -> Result<Graph, GraphError> {
        let g = self.family.build()?;
        Ok(if self.complement { g.complement() } else { g })
    }

    /// Family label used in reports, e.g. `path` or `complement-wheel`.
    pub fn family_label(&self) -> String {
        if self.complement {
            format!("complement-{}", self.family.kind())
        } else {
            self.family.kind().to_string()
        }
    }
}

impl From<Family> for GraphClassSpec {
    fn from(family: Family) -> Self {
        GraphClassSpec::new(family)
    }
}

impl fmt::Display for GraphClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.family_label(), self.family.params_label())
    }
}
