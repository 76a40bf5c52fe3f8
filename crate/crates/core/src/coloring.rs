//! Colorings and the proper / equitable / dominator validator.
//!
//! A vertex `v` dominates color class `V_i` when `V_i ⊆ N[v]`. Because a
//! proper coloring never puts two adjacent vertices in one class, `v`
//! dominates its own class exactly when that class is `{v}`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::ColoringError;
use crate::graph::{Graph, Vertex};

/// A color index, `1..=k`.
pub type Color = u32;

/// A total assignment of colors `1..=k` to vertices `1..=n`, every color used.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<Color>,
    num_colors: usize,
    normalized: bool,
}

impl Coloring {
    /// Accepts any positive colors. If the used colors are not exactly
    /// `1..=k`, they are relabeled densely in order of first occurrence and
    /// the coloring remembers that it was normalized.
    pub fn new(colors: Vec<Color>) -> Result<Self, ColoringError> {
        if colors.is_empty() {
            return Err(ColoringError::Empty);
        }
        if let Some(i) = colors.iter().position(|&c| c == 0) {
            return Err(ColoringError::ZeroColor(i + 1));
        }
        let max = *colors.iter().max().unwrap() as usize;
        let mut present = vec![false; max + 1];
        for &c in &colors {
            present[c as usize] = true;
        }
        let used = present.iter().filter(|&&p| p).count();
        if used == max {
            return Ok(Coloring {
                colors,
                num_colors: max,
                normalized: false,
            });
        }
        let mut relabel = BTreeMap::new();
        let colors = colors
            .iter()
            .map(|&c| {
                let next = relabel.len() as Color + 1;
                *relabel.entry(c).or_insert(next)
            })
            .collect();
        Ok(Coloring {
            colors,
            num_colors: used,
            normalized: true,
        })
    }

    /// Every vertex in its own class, colored by index.
    pub fn singletons(n: usize) -> Self {
        Coloring {
            colors: (1..=n as Color).collect(),
            num_colors: n,
            normalized: false,
        }
    }

    /// Number of colored vertices.
    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    /// Whether the input colors had gaps and were relabeled.
    pub fn was_normalized(&self) -> bool {
        self.normalized
    }

    /// Color of vertex `v` (1-based). Panics if out of range.
    pub fn color(&self, v: Vertex) -> Color {
        self.colors[v - 1]
    }

    pub fn as_slice(&self) -> &[Color] {
        &self.colors
    }

    /// `classes()[i]` lists the vertices of color `i + 1`, ascending.
    pub fn classes(&self) -> Vec<Vec<Vertex>> {
        let mut classes = vec![Vec::new(); self.num_colors];
        for (i, &c) in self.colors.iter().enumerate() {
            classes[c as usize - 1].push(i + 1);
        }
        classes
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.num_colors];
        for &c in &self.colors {
            sizes[c as usize - 1] += 1;
        }
        sizes
    }

    fn check_domain(&self, g: &Graph) -> Result<(), ColoringError> {
        if self.len() != g.n() {
            return Err(ColoringError::DomainMismatch {
                expected: g.n(),
                found: self.len(),
            });
        }
        Ok(())
    }
}

/// Returns the first edge (in ascending order) whose endpoints share a color.
pub fn improper_edge(g: &Graph, c: &Coloring) -> Result<Option<(Vertex, Vertex)>, ColoringError> {
    c.check_domain(g)?;
    Ok(g.edges().find(|&(u, v)| c.color(u) == c.color(v)))
}

pub fn is_proper(g: &Graph, c: &Coloring) -> Result<bool, ColoringError> {
    Ok(improper_edge(g, c)?.is_none())
}

pub fn is_equitable(c: &Coloring) -> bool {
    let sizes = c.class_sizes();
    let min = sizes.iter().min().copied().unwrap_or(0);
    let max = sizes.iter().max().copied().unwrap_or(0);
    max - min <= 1
}

/// Colors whose whole class lies inside `N[v]`.
pub fn dominated_classes(g: &Graph, c: &Coloring, v: Vertex) -> Result<Vec<Color>, ColoringError> {
    c.check_domain(g)?;
    let closed = g.closed_neighborhood(v)?;
    Ok(dominated_in(&c.classes(), |u| closed.contains(&u)))
}

fn dominated_in(classes: &[Vec<Vertex>], in_closed: impl Fn(Vertex) -> bool) -> Vec<Color> {
    classes
        .iter()
        .enumerate()
        .filter(|(_, class)| class.iter().all(|&u| in_closed(u)))
        .map(|(i, _)| i as Color + 1)
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// Both endpoints carry `color`.
    ImproperEdge { u: Vertex, v: Vertex, color: Color },
    /// Class sizes spread by more than one.
    Unbalanced { min_size: usize, max_size: usize },
    /// `vertex` dominates no color class.
    NoDominatedClass { vertex: Vertex },
}

/// Full verdict of [`validate`], with per-vertex domination evidence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColoringReport {
    pub proper: bool,
    pub equitable: bool,
    pub dominator: bool,
    pub equitable_dominator: bool,
    pub num_colors: usize,
    pub class_sizes: Vec<usize>,
    pub violations: Vec<Violation>,
    pub dom_classes: BTreeMap<Vertex, Vec<Color>>,
    pub normalized: bool,
    #[serde(skip)]
    pub witness_edge: Option<(Vertex, Vertex)>,
    #[serde(skip)]
    pub size_range: (usize, usize),
}

impl ColoringReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

pub fn validate(g: &Graph, c: &Coloring) -> Result<ColoringReport, ColoringError> {
    c.check_domain(g)?;
    let mut violations = Vec::new();

    let improper: Vec<(Vertex, Vertex)> = g
        .edges()
        .filter(|&(u, v)| c.color(u) == c.color(v))
        .collect();
    for &(u, v) in &improper {
        violations.push(Violation::ImproperEdge {
            u,
            v,
            color: c.color(u),
        });
    }

    let class_sizes = c.class_sizes();
    let min_size = *class_sizes.iter().min().unwrap();
    let max_size = *class_sizes.iter().max().unwrap();
    let equitable = max_size - min_size <= 1;
    if !equitable {
        violations.push(Violation::Unbalanced { min_size, max_size });
    }

    let classes = c.classes();
    let mut dom_classes = BTreeMap::new();
    for v in g.vertices() {
        let nbrs = g.neighbors(v);
        let dominated = dominated_in(&classes, |u| u == v || nbrs.contains(&u));
        if dominated.is_empty() {
            violations.push(Violation::NoDominatedClass { vertex: v });
        }
        dom_classes.insert(v, dominated);
    }
    let dominator = dom_classes.values().all(|d| !d.is_empty());
    let proper = improper.is_empty();

    Ok(ColoringReport {
        proper,
        equitable,
        dominator,
        equitable_dominator: proper && equitable && dominator,
        num_colors: c.num_colors(),
        class_sizes,
        violations,
        dom_classes,
        normalized: c.was_normalized(),
        witness_edge: improper.first().copied(),
        size_range: (min_size, max_size),
    })
}
