//! The partition graph, vertex neighborhoods, line graphs, and cliques
//! through a fixed vertex.

use std::collections::BTreeSet;
use std::fmt::{self, Display, Write as _};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::local_model::AdmissibilityGraph;
use crate::partition::{enumerate_partitions, Partition};
use crate::transfer::{are_adjacent, neighbors, TransferMove};

/// Undirected simple graph over labeled vertices `0..len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph<L> {
    labels: Vec<L>,
    adjacency: Vec<BTreeSet<usize>>,
}

impl<L> SimpleGraph<L> {
    pub fn new(labels: Vec<L>) -> Self {
        let adjacency = vec![BTreeSet::new(); labels.len()];
        Self { labels, adjacency }
    }

    /// Adds `{a, b}`. Loops are ignored; repeated edges are a no-op.
    pub fn add_edge(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        self.adjacency[a].insert(b);
        self.adjacency[b].insert(a);
    }

    pub fn labels(&self) -> &[L] {
        &self.labels
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].contains(&b)
    }

    pub fn neighbors_of(&self, v: usize) -> &BTreeSet<usize> {
        &self.adjacency[v]
    }

    /// Edges `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(a, nbrs)| nbrs.range(a + 1..).map(move |&b| (a, b)))
            .collect()
    }

    pub fn position(&self, label: &L) -> Option<usize>
    where
        L: PartialEq,
    {
        self.labels.iter().position(|l| l == label)
    }

    /// Edge set expressed through labels, each pair ordered.
    pub fn labeled_edges(&self) -> BTreeSet<(L, L)>
    where
        L: Ord + Clone,
    {
        self.edges()
            .into_iter()
            .map(|(a, b)| {
                let (x, y) = (self.labels[a].clone(), self.labels[b].clone());
                if x <= y {
                    (x, y)
                } else {
                    (y, x)
                }
            })
            .collect()
    }

    /// Graphviz rendering with each vertex labeled by its `Display` form.
    pub fn to_dot(&self, name: &str) -> String
    where
        L: Display,
    {
        let mut out = String::new();
        let _ = writeln!(out, "graph \"{name}\" {{");
        for (v, label) in self.labels.iter().enumerate() {
            let _ = writeln!(out, "  {v} [label=\"{label}\"];");
        }
        for (a, b) in self.edges() {
            let _ = writeln!(out, "  {a} -- {b};");
        }
        out.push_str("}\n");
        out
    }
}

/// `{"labels": [...], "edges": [[a, b], ...]}` with 0-based indices.
impl<L: Serialize> Serialize for SimpleGraph<L> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let edges: Vec<[usize; 2]> = self.edges().into_iter().map(|(a, b)| [a, b]).collect();
        let mut s = serializer.serialize_struct("SimpleGraph", 2)?;
        s.serialize_field("labels", &self.labels)?;
        s.serialize_field("edges", &edges)?;
        s.end()
    }
}

/// `G_n`: vertices in enumeration order, edges by the conjugate test.
pub fn build_partition_graph(n: usize) -> Result<SimpleGraph<Partition>> {
    let vertices = enumerate_partitions(n)?;
    let mut graph = SimpleGraph::new(vertices);
    let count = graph.vertex_count();
    for a in 0..count {
        for b in a + 1..count {
            if are_adjacent(&graph.labels[a], &graph.labels[b])? {
                graph.add_edge(a, b);
            }
        }
    }
    Ok(graph)
}

fn check_weight(n: usize, p: &Partition) -> Result<()> {
    if p.weight() != n {
        return Err(Error::WeightMismatch {
            left: n,
            right: p.weight(),
        });
    }
    Ok(())
}

/// The subgraph of `G_n` induced on the neighbors of `p`, each vertex
/// labeled by the move producing it. Vertices are ordered by move.
pub fn induced_neighborhood(n: usize, p: &Partition) -> Result<SimpleGraph<TransferMove>> {
    check_weight(n, p)?;
    let (moves, members): (Vec<_>, Vec<_>) = neighbors(p).into_iter().unzip();
    let mut graph = SimpleGraph::new(moves);
    for a in 0..members.len() {
        for b in a + 1..members.len() {
            if are_adjacent(&members[a], &members[b])? {
                graph.add_edge(a, b);
            }
        }
    }
    Ok(graph)
}

/// `L(B)`: one vertex per edge of `B`, adjacent when they share a corner.
pub fn line_graph(b: &AdmissibilityGraph) -> SimpleGraph<TransferMove> {
    let moves: Vec<TransferMove> = b.edges.iter().copied().collect();
    let mut graph = SimpleGraph::new(moves.clone());
    for x in 0..moves.len() {
        for y in x + 1..moves.len() {
            if moves[x].shares_corner(&moves[y]) {
                graph.add_edge(x, y);
            }
        }
    }
    graph
}

/// A pair of admissible moves where adjacency of the resulting neighbors
/// disagrees with corner sharing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LineGraphViolation {
    pub first: TransferMove,
    pub second: TransferMove,
    pub first_neighbor: Partition,
    pub second_neighbor: Partition,
    pub adjacent_in_graph: bool,
    pub share_corner: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LineGraphReport {
    pub partition: Partition,
    /// Move-to-neighbor bijection, in move order.
    pub bijection: Vec<(TransferMove, Partition)>,
    pub pairs_checked: usize,
    pub adjacent_pairs: usize,
    pub non_adjacent_pairs: usize,
    pub violations: Vec<LineGraphViolation>,
}

impl LineGraphReport {
    pub fn verified(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks, pair by pair over admissible moves, that the neighbors they
/// produce are adjacent in `G_n` exactly when the moves share a corner.
pub fn verify_line_graph_theorem(n: usize, p: &Partition) -> Result<LineGraphReport> {
    check_weight(n, p)?;
    let bijection: Vec<(TransferMove, Partition)> = neighbors(p).into_iter().collect();
    let mut report = LineGraphReport {
        partition: p.clone(),
        bijection: Vec::new(),
        pairs_checked: 0,
        adjacent_pairs: 0,
        non_adjacent_pairs: 0,
        violations: Vec::new(),
    };
    for (x, (m1, q1)) in bijection.iter().enumerate() {
        for (m2, q2) in &bijection[x + 1..] {
            let adjacent = are_adjacent(q1, q2)?;
            let share = m1.shares_corner(m2);
            report.pairs_checked += 1;
            if adjacent {
                report.adjacent_pairs += 1;
            } else {
                report.non_adjacent_pairs += 1;
            }
            if adjacent != share {
                report.violations.push(LineGraphViolation {
                    first: *m1,
                    second: *m2,
                    first_neighbor: q1.clone(),
                    second_neighbor: q2.clone(),
                    adjacent_in_graph: adjacent,
                    share_corner: share,
                });
            }
        }
    }
    report.bijection = bijection;
    Ok(report)
}

/// All maximal cliques of `graph` as sorted vertex lists, sorted.
///
/// Bron-Kerbosch with Tomita pivoting. The empty graph has exactly one
/// maximal clique, the empty one.
pub fn maximal_cliques<L>(graph: &SimpleGraph<L>) -> Vec<Vec<usize>> {
    fn expand<L>(
        graph: &SimpleGraph<L>,
        current: &mut Vec<usize>,
        mut candidates: BTreeSet<usize>,
        mut excluded: BTreeSet<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if candidates.is_empty() {
            if excluded.is_empty() {
                let mut clique = current.clone();
                clique.sort_unstable();
                out.push(clique);
            }
            return;
        }
        let pivot = candidates
            .iter()
            .chain(&excluded)
            .copied()
            .max_by_key(|&u| graph.neighbors_of(u).intersection(&candidates).count())
            .expect("candidates is nonempty");
        let branch: Vec<usize> = candidates
            .difference(graph.neighbors_of(pivot))
            .copied()
            .collect();
        for v in branch {
            let nbrs = graph.neighbors_of(v);
            current.push(v);
            expand(
                graph,
                current,
                candidates.intersection(nbrs).copied().collect(),
                excluded.intersection(nbrs).copied().collect(),
                out,
            );
            current.pop();
            candidates.remove(&v);
            excluded.insert(v);
        }
    }

    let mut out = Vec::new();
    let all = (0..graph.vertex_count()).collect();
    expand(graph, &mut Vec::new(), all, BTreeSet::new(), &mut out);
    out.sort();
    out
}

/// Maximal cliques of `G_n` through `p`, each given by its non-central
/// vertices as moves. An isolated `p` yields one empty clique.
pub fn cliques_through(n: usize, p: &Partition) -> Result<Vec<Vec<TransferMove>>> {
    let nbhd = induced_neighborhood(n, p)?;
    let mut cliques: Vec<Vec<TransferMove>> = maximal_cliques(&nbhd)
        .into_iter()
        .map(|c| c.into_iter().map(|v| nbhd.labels()[v]).collect())
        .collect();
    cliques.sort();
    Ok(cliques)
}

/// How the non-central vertices of a clique through a vertex are generated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CliqueClass {
    /// Common removable corner `i`.
    Star { i: usize },
    /// Common addable corner `j`.
    Top { j: usize },
    /// A single move, both star and top.
    Both { i: usize, j: usize },
}

impl Display for CliqueClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliqueClass::Star { i } => write!(f, "star({i})"),
            CliqueClass::Top { j } => write!(f, "top({j})"),
            CliqueClass::Both { i, j } => write!(f, "both({i},{j})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueClassification {
    #[serde(flatten)]
    pub class: CliqueClass,
    pub members: BTreeSet<TransferMove>,
}

pub fn classify_clique(moves: &[TransferMove]) -> Result<CliqueClassification> {
    let members: BTreeSet<TransferMove> = moves.iter().copied().collect();
    let first = *members.iter().next().ok_or(Error::EmptyClique)?;
    let common_i = members.iter().all(|m| m.i == first.i);
    let common_j = members.iter().all(|m| m.j == first.j);
    let class = match (common_i, common_j) {
        (true, true) => CliqueClass::Both {
            i: first.i,
            j: first.j,
        },
        (true, false) => CliqueClass::Star { i: first.i },
        (false, true) => CliqueClass::Top { j: first.j },
        (false, false) => return Err(Error::NoCommonCorner(members.into_iter().collect())),
    };
    Ok(CliqueClassification { class, members })
}
