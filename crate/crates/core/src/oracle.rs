//! Exhaustive verification of the local structure results against brute
//! force, for every partition of every `n` up to a bound.
//!
//! Each check pairs a closed-form path (local type, formulas) with a
//! path that only moves cells and compares conjugates. Failures are data:
//! a run passes iff every check reports none.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{
    build_partition_graph, classify_clique, cliques_through, induced_neighborhood, line_graph,
    verify_line_graph_theorem, SimpleGraph,
};
use crate::local_model::{
    admissibility_graph, degree_formula, local_clique_number, local_dimension, local_type,
    side_degrees, LocalType,
};
use crate::partition::{enumerate_partitions, partition_count, Partition};
use crate::transfer::{are_adjacent, is_admissible, neighbors, TransferMove};

pub const DEGREE: &str = "degree";
pub const ADMISSIBILITY: &str = "admissibility";
pub const SIDE_DEGREES: &str = "side_degrees";
pub const LINE_GRAPH: &str = "line_graph";
pub const CLIQUES: &str = "cliques";
pub const STRUCTURE: &str = "structure";
pub const TYPE_DETERMINACY: &str = "type_determinacy";

/// One counterexample, with enough context to replay it from the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub check: String,
    pub n: usize,
    pub partition: Option<Partition>,
    pub expected: String,
    pub found: String,
    pub detail: String,
}

impl Failure {
    fn new(
        check: &str,
        p: &Partition,
        expected: impl ToString,
        found: impl ToString,
        detail: impl Into<String>,
    ) -> Self {
        Self {
            check: check.to_owned(),
            n: p.weight(),
            partition: Some(p.clone()),
            expected: expected.to_string(),
            found: found.to_string(),
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub examined: usize,
    pub failures: Vec<Failure>,
}

impl CheckResult {
    fn empty(name: &str) -> Self {
        Self {
            name: name.to_owned(),
            examined: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn absorb(&mut self, other: CheckResult) {
        debug_assert_eq!(self.name, other.name);
        self.examined += other.examined;
        self.failures.extend(other.failures);
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub n_range: (usize, usize),
    pub checks: Vec<CheckResult>,
    /// Wall time per check in milliseconds, keyed by check name.
    pub timings: BTreeMap<String, u128>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Failure> {
        self.checks.iter().flat_map(|c| &c.failures)
    }

    /// The report without wall times; identical across runs.
    pub fn deterministic_json(&self) -> serde_json::Value {
        let mut value = serde_json::to_value(self).expect("report serializes");
        value
            .as_object_mut()
            .expect("report is an object")
            .remove("timings_ms");
        value
    }
}

impl Serialize for VerificationReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("VerificationReport", 4)?;
        s.serialize_field("n_range", &[self.n_range.0, self.n_range.1])?;
        s.serialize_field("checks", &self.checks)?;
        s.serialize_field("pass", &self.passed())?;
        s.serialize_field("timings_ms", &self.timings)?;
        s.end()
    }
}

/// Accumulates per-`n` results into one entry per check, in first-seen order.
struct Aggregator {
    checks: Vec<CheckResult>,
    timings: BTreeMap<String, u128>,
}

impl Aggregator {
    fn new() -> Self {
        Self {
            checks: Vec::new(),
            timings: BTreeMap::new(),
        }
    }

    fn add_time(&mut self, name: &str, start: Instant) {
        *self.timings.entry(name.to_owned()).or_default() += start.elapsed().as_millis();
    }

    fn push(&mut self, result: CheckResult) {
        match self.checks.iter_mut().find(|c| c.name == result.name) {
            Some(existing) => existing.absorb(result),
            None => self.checks.push(result),
        }
    }

    fn timed(&mut self, name: &str, run: impl FnOnce() -> CheckResult) {
        let start = Instant::now();
        let result = run();
        self.add_time(name, start);
        self.push(result);
    }

    fn finish(self, n_range: (usize, usize)) -> VerificationReport {
        VerificationReport {
            n_range,
            checks: self.checks,
            timings: self.timings,
        }
    }
}

fn partitions_of(n: usize) -> Vec<Partition> {
    enumerate_partitions(n).expect("n >= 1 is checked by callers")
}

/// Runs `check` on every partition in parallel; failures keep input order.
fn per_partition(
    name: &str,
    partitions: &[Partition],
    check: impl Fn(&Partition) -> Vec<Failure> + Sync + Send,
) -> CheckResult {
    let failures: Vec<Vec<Failure>> = partitions.par_iter().map(check).collect();
    CheckResult {
        name: name.to_owned(),
        examined: partitions.len(),
        failures: failures.into_iter().flatten().collect(),
    }
}

/// Moves that change the partition, found by moving the cell and looking.
fn changing_moves(p: &Partition) -> BTreeSet<TransferMove> {
    TransferMove::all(p.support_size())
        .filter(|&mv| p.move_cell(mv).is_ok_and(|q| &q != p))
        .collect()
}

fn degree_check(p: &Partition, graph: &SimpleGraph<Partition>, vertex: usize) -> Vec<Failure> {
    let by_moves = neighbors(p).len();
    let in_graph = graph.degree(vertex);
    let formula = degree_formula(&local_type(p));
    if by_moves == in_graph && in_graph == formula {
        return Vec::new();
    }
    vec![Failure::new(
        DEGREE,
        p,
        format!("formula {formula}"),
        format!("moves {by_moves}, graph {in_graph}"),
        "neighbor count, graph degree and t(t+1)-S-U disagree",
    )]
}

fn degree_fragment(n: usize, graph: &SimpleGraph<Partition>) -> CheckResult {
    let indexed: Vec<(usize, &Partition)> = graph.labels().iter().enumerate().collect();
    let failures: Vec<Vec<Failure>> = indexed
        .par_iter()
        .map(|&(v, p)| degree_check(p, graph, v))
        .collect();
    debug_assert!(graph.labels().iter().all(|p| p.weight() == n));
    CheckResult {
        name: DEGREE.to_owned(),
        examined: indexed.len(),
        failures: failures.into_iter().flatten().collect(),
    }
}

/// Neighbor count, degree in the constructed `G_n`, and the degree formula
/// agree for every partition of `n`.
pub fn verify_degrees(n: usize) -> Result<CheckResult> {
    let graph = build_partition_graph(n)?;
    Ok(degree_fragment(n, &graph))
}

fn admissibility_check(p: &Partition) -> Vec<Failure> {
    let mut failures = Vec::new();
    let changing = changing_moves(p);
    let lemma: BTreeSet<TransferMove> = TransferMove::all(p.support_size())
        .filter(|&mv| is_admissible(p, mv).unwrap_or(false))
        .collect();
    if lemma != changing {
        failures.push(Failure::new(
            ADMISSIBILITY,
            p,
            format!("{changing:?}"),
            format!("{lemma:?}"),
            "admissibility test disagrees with moves that change the partition",
        ));
    }
    let from_type = admissibility_graph(&local_type(p)).edges;
    if from_type != changing {
        failures.push(Failure::new(
            ADMISSIBILITY,
            p,
            format!("{changing:?}"),
            format!("{from_type:?}"),
            "admissibility graph of the local type has the wrong edges",
        ));
    }
    let nbrs = neighbors(p);
    let distinct: BTreeSet<&Partition> = nbrs.values().collect();
    if distinct.len() != nbrs.len() {
        failures.push(Failure::new(
            ADMISSIBILITY,
            p,
            nbrs.len(),
            distinct.len(),
            "two admissible moves give the same neighbor",
        ));
    }
    for (mv, q) in &nbrs {
        if !are_adjacent(p, q).unwrap_or(false) {
            failures.push(Failure::new(
                ADMISSIBILITY,
                p,
                "adjacent",
                format!("{q} not adjacent"),
                format!("move {mv} result fails the conjugate test"),
            ));
        }
    }
    failures
}

/// Admissibility, uniqueness of neighbors, and consistency with the
/// conjugate adjacency test.
pub fn verify_transfers(n: usize) -> Result<CheckResult> {
    Ok(per_partition(
        ADMISSIBILITY,
        &enumerate_partitions(n)?,
        admissibility_check,
    ))
}

fn choose2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

fn side_degree_check(p: &Partition) -> Vec<Failure> {
    let mut failures = Vec::new();
    let ty = local_type(p);
    let formula = side_degrees(&ty);
    let t = ty.t();
    let changing = changing_moves(p);
    let sigma: Vec<usize> = (1..=t)
        .map(|i| changing.iter().filter(|m| m.i == i).count())
        .collect();
    let tau: Vec<usize> = (1..=t + 1)
        .map(|j| changing.iter().filter(|m| m.j == j).count())
        .collect();
    if sigma != formula.sigma || tau != formula.tau {
        failures.push(Failure::new(
            SIDE_DEGREES,
            p,
            format!("sigma {:?} tau {:?}", formula.sigma, formula.tau),
            format!("sigma {sigma:?} tau {tau:?}"),
            "corner degrees counted from moves disagree with the formula",
        ));
    }
    let lg = line_graph(&admissibility_graph(&ty));
    let expected_edges: usize = formula
        .sigma
        .iter()
        .chain(&formula.tau)
        .map(|&d| choose2(d))
        .sum();
    if lg.vertex_count() != degree_formula(&ty) || lg.edge_count() != expected_edges {
        failures.push(Failure::new(
            SIDE_DEGREES,
            p,
            format!("{} vertices, {expected_edges} edges", degree_formula(&ty)),
            format!("{} vertices, {} edges", lg.vertex_count(), lg.edge_count()),
            "line graph size disagrees with the side degrees",
        ));
    }
    failures
}

pub fn verify_side_degrees(n: usize) -> Result<CheckResult> {
    Ok(per_partition(
        SIDE_DEGREES,
        &enumerate_partitions(n)?,
        side_degree_check,
    ))
}

fn neighborhood_check(p: &Partition) -> Vec<Failure> {
    let n = p.weight();
    let mut failures = Vec::new();
    match verify_line_graph_theorem(n, p) {
        Ok(report) => failures.extend(report.violations.iter().map(|v| {
            Failure::new(
                LINE_GRAPH,
                p,
                format!("adjacent={}", v.share_corner),
                format!("adjacent={}", v.adjacent_in_graph),
                format!(
                    "moves {} and {} -> {} and {}",
                    v.first, v.second, v.first_neighbor, v.second_neighbor
                ),
            )
        })),
        Err(e) => failures.push(Failure::new(
            LINE_GRAPH,
            p,
            "report",
            "error",
            e.to_string(),
        )),
    }
    let nbhd = induced_neighborhood(n, p).expect("weight matches");
    let lg = line_graph(&admissibility_graph(&local_type(p)));
    if nbhd.labels() != lg.labels() || nbhd.labeled_edges() != lg.labeled_edges() {
        failures.push(Failure::new(
            LINE_GRAPH,
            p,
            format!("{} vertices, {} edges", lg.vertex_count(), lg.edge_count()),
            format!(
                "{} vertices, {} edges",
                nbhd.vertex_count(),
                nbhd.edge_count()
            ),
            "induced neighborhood differs from the line graph under move labels",
        ));
    }
    failures
}

/// The neighborhood of every partition of `n` matches the line graph of its
/// admissibility graph, pair by pair.
pub fn verify_neighborhoods(n: usize) -> Result<CheckResult> {
    Ok(per_partition(
        LINE_GRAPH,
        &enumerate_partitions(n)?,
        neighborhood_check,
    ))
}

/// `1 + ` the size of the largest maximal clique in the neighborhood.
fn brute_clique_number(cliques: &[Vec<TransferMove>]) -> usize {
    1 + cliques.iter().map(Vec::len).max().unwrap_or(0)
}

fn clique_check(p: &Partition) -> Vec<Failure> {
    let mut failures = Vec::new();
    let cliques = cliques_through(p.weight(), p).expect("weight matches");
    for clique in cliques.iter().filter(|c| !c.is_empty()) {
        if let Err(e) = classify_clique(clique) {
            failures.push(Failure::new(
                CLIQUES,
                p,
                "star or top",
                format!("{clique:?}"),
                e.to_string(),
            ));
        }
    }
    let ty = local_type(p);
    let brute = brute_clique_number(&cliques);
    let formula = local_clique_number(&ty);
    if brute != formula || brute - 1 != local_dimension(&ty) {
        failures.push(Failure::new(
            CLIQUES,
            p,
            format!("omega {formula}, dim {}", local_dimension(&ty)),
            format!("omega {brute}, dim {}", brute - 1),
            "clique search disagrees with the local clique number",
        ));
    }
    failures
}

/// Every maximal clique through each partition is star or top type, and
/// the largest one matches the local clique number.
pub fn verify_cliques(n: usize) -> Result<CheckResult> {
    Ok(per_partition(
        CLIQUES,
        &enumerate_partitions(n)?,
        clique_check,
    ))
}

fn structure_fragment(n: usize, graph: &SimpleGraph<Partition>) -> CheckResult {
    let partitions = graph.labels();
    let mut result = per_partition(STRUCTURE, partitions, |p| {
        let mut failures = Vec::new();
        let conj = p.conjugate();
        if conj.weight() != p.weight() || conj.conjugate() != *p {
            failures.push(Failure::new(
                STRUCTURE,
                p,
                p,
                conj.conjugate(),
                "conjugation is not an involution",
            ));
        }
        let block_weight: usize = p.blocks().iter().map(|b| b.size * b.multiplicity).sum();
        if block_weight != n {
            failures.push(Failure::new(
                STRUCTURE,
                p,
                n,
                block_weight,
                "block form loses weight",
            ));
        }
        failures
    });

    let distinct: BTreeSet<&Partition> = partitions.iter().collect();
    let expected = partition_count(n);
    if distinct.len() != partitions.len() || partitions.len() as u128 != expected {
        result.failures.push(Failure {
            check: STRUCTURE.to_owned(),
            n,
            partition: None,
            expected: expected.to_string(),
            found: format!("{} listed, {} distinct", partitions.len(), distinct.len()),
            detail: "enumeration disagrees with the partition-number recurrence".into(),
        });
    }
    let degree_sum: usize = (0..graph.vertex_count()).map(|v| graph.degree(v)).sum();
    if degree_sum != 2 * graph.edge_count() {
        result.failures.push(Failure {
            check: STRUCTURE.to_owned(),
            n,
            partition: None,
            expected: (2 * graph.edge_count()).to_string(),
            found: degree_sum.to_string(),
            detail: "handshake lemma fails".into(),
        });
    }
    result
}

/// Conjugation, enumeration count, and the handshake lemma for `G_n`.
pub fn verify_structure(n: usize) -> Result<CheckResult> {
    let graph = build_partition_graph(n)?;
    Ok(structure_fragment(n, &graph))
}

/// Local data computed without the local type.
#[derive(Debug, Clone, PartialEq, Eq)]
struct ObservedLocal {
    admissible: BTreeSet<TransferMove>,
    degree: usize,
    clique_number: usize,
    neighborhood_edges: BTreeSet<(TransferMove, TransferMove)>,
}

fn observe(p: &Partition) -> ObservedLocal {
    let n = p.weight();
    let cliques = cliques_through(n, p).expect("weight matches");
    ObservedLocal {
        admissible: changing_moves(p),
        degree: neighbors(p).len(),
        clique_number: brute_clique_number(&cliques),
        neighborhood_edges: induced_neighborhood(n, p)
            .expect("weight matches")
            .labeled_edges(),
    }
}

/// Partitions of all `n <= n_max` sharing a local type have the same
/// admissible moves, degree, clique number, and move-labeled neighborhood.
pub fn verify_type_determinacy(n_max: usize) -> Result<CheckResult> {
    let mut partitions = Vec::new();
    for n in 1..=n_max {
        partitions.extend(enumerate_partitions(n)?);
    }
    let observed: Vec<(LocalType, ObservedLocal)> = partitions
        .par_iter()
        .map(|p| (local_type(p), observe(p)))
        .collect();

    let mut groups: BTreeMap<&LocalType, (&Partition, &ObservedLocal)> = BTreeMap::new();
    let mut result = CheckResult::empty(TYPE_DETERMINACY);
    for (p, (ty, obs)) in partitions.iter().zip(&observed) {
        result.examined += 1;
        let (rep, rep_obs) = *groups.entry(ty).or_insert((p, obs));
        let mismatch = [
            (rep_obs.admissible != obs.admissible, "admissibility graph"),
            (rep_obs.degree != obs.degree, "degree"),
            (
                rep_obs.clique_number != obs.clique_number,
                "local clique number and dimension",
            ),
            (
                rep_obs.neighborhood_edges != obs.neighborhood_edges,
                "neighborhood adjacency",
            ),
        ];
        for (_, what) in mismatch.iter().filter(|(differs, _)| *differs) {
            result.failures.push(Failure::new(
                TYPE_DETERMINACY,
                p,
                format!("same {what} as {rep}"),
                "different",
                format!(
                    "type {}",
                    serde_json::to_string(ty).expect("type serializes")
                ),
            ));
        }
    }
    Ok(result)
}

fn check_bound(n_max: usize) -> Result<()> {
    if n_max == 0 {
        return Err(Error::InvalidWeight(0));
    }
    Ok(())
}

/// Every check for `n = 1..=n_max`, plus type determinacy across all of them.
pub fn run_all(n_max: usize) -> Result<VerificationReport> {
    check_bound(n_max)?;
    let mut agg = Aggregator::new();
    for n in 1..=n_max {
        let start = Instant::now();
        let graph = build_partition_graph(n)?;
        agg.add_time("graph_build", start);

        let partitions = partitions_of(n);
        agg.timed(DEGREE, || degree_fragment(n, &graph));
        agg.timed(ADMISSIBILITY, || {
            per_partition(ADMISSIBILITY, &partitions, admissibility_check)
        });
        agg.timed(SIDE_DEGREES, || {
            per_partition(SIDE_DEGREES, &partitions, side_degree_check)
        });
        agg.timed(LINE_GRAPH, || {
            per_partition(LINE_GRAPH, &partitions, neighborhood_check)
        });
        agg.timed(CLIQUES, || {
            per_partition(CLIQUES, &partitions, clique_check)
        });
        agg.timed(STRUCTURE, || structure_fragment(n, &graph));
    }
    let start = Instant::now();
    let determinacy = verify_type_determinacy(n_max)?;
    agg.add_time(TYPE_DETERMINACY, start);
    agg.push(determinacy);
    Ok(agg.finish((1, n_max)))
}

/// Only the degree comparison, for larger bounds.
pub fn run_degrees(n_max: usize) -> Result<VerificationReport> {
    check_bound(n_max)?;
    let mut agg = Aggregator::new();
    for n in 1..=n_max {
        let start = Instant::now();
        let graph = build_partition_graph(n)?;
        agg.add_time("graph_build", start);
        agg.timed(DEGREE, || degree_fragment(n, &graph));
    }
    Ok(agg.finish((1, n_max)))
}
