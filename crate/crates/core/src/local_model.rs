//! The ordered local transfer type of a partition and everything computed
//! from it without looking at the partition again.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::transfer::TransferMove;

/// `(t; alpha; beta)` where `alpha[i]` marks a singleton block and `beta[i]`
/// a unit support gap. Bits are serialized as 0/1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawLocalType", into = "RawLocalType")]
pub struct LocalType {
    alpha: Vec<bool>,
    beta: Vec<bool>,
}

#[derive(Serialize, Deserialize)]
struct RawLocalType {
    t: usize,
    alpha: Vec<u8>,
    beta: Vec<u8>,
}

impl LocalType {
    pub fn new(alpha: Vec<bool>, beta: Vec<bool>) -> Result<Self> {
        if alpha.is_empty() {
            return Err(Error::InvalidLocalType(
                "support size must be at least 1".into(),
            ));
        }
        if alpha.len() != beta.len() {
            return Err(Error::InvalidLocalType(format!(
                "alpha has {} entries but beta has {}",
                alpha.len(),
                beta.len()
            )));
        }
        Ok(Self { alpha, beta })
    }

    pub fn of(p: &Partition) -> Self {
        local_type(p)
    }

    pub fn t(&self) -> usize {
        self.alpha.len()
    }

    pub fn alpha(&self) -> &[bool] {
        &self.alpha
    }

    pub fn beta(&self) -> &[bool] {
        &self.beta
    }

    /// Number of singleton blocks.
    pub fn singleton_count(&self) -> usize {
        self.alpha.iter().filter(|&&a| a).count()
    }

    /// Number of unit gaps.
    pub fn unit_gap_count(&self) -> usize {
        self.beta.iter().filter(|&&b| b).count()
    }

    // 1-based, with alpha_{t+1} = 0.
    fn alpha_at(&self, k: usize) -> usize {
        self.alpha.get(k.wrapping_sub(1)).map_or(0, |&a| a as usize)
    }

    // 1-based, with beta_0 = 0.
    fn beta_at(&self, k: usize) -> usize {
        if k == 0 {
            0
        } else {
            self.beta.get(k - 1).map_or(0, |&b| b as usize)
        }
    }
}

impl TryFrom<RawLocalType> for LocalType {
    type Error = Error;

    fn try_from(raw: RawLocalType) -> Result<Self> {
        let bits = |name: &str, v: Vec<u8>| -> Result<Vec<bool>> {
            v.into_iter()
                .map(|b| match b {
                    0 => Ok(false),
                    1 => Ok(true),
                    other => Err(Error::InvalidLocalType(format!(
                        "{name} bit {other} is not 0 or 1"
                    ))),
                })
                .collect()
        };
        let ty = LocalType::new(bits("alpha", raw.alpha)?, bits("beta", raw.beta)?)?;
        if ty.t() != raw.t {
            return Err(Error::InvalidLocalType(format!(
                "t = {} but the indicator sequences have length {}",
                raw.t,
                ty.t()
            )));
        }
        Ok(ty)
    }
}

impl From<LocalType> for RawLocalType {
    fn from(ty: LocalType) -> Self {
        RawLocalType {
            t: ty.t(),
            alpha: ty.alpha.iter().map(|&b| b as u8).collect(),
            beta: ty.beta.iter().map(|&b| b as u8).collect(),
        }
    }
}

pub fn local_type(p: &Partition) -> LocalType {
    let alpha = p.blocks().iter().map(|b| b.multiplicity == 1).collect();
    let beta = p.gaps().into_iter().map(|g| g == 1).collect();
    LocalType { alpha, beta }
}

/// Bipartite graph on removable corners `1..=t` and addable corners
/// `1..=t+1`; an edge per admissible transfer.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AdmissibilityGraph {
    pub t: usize,
    pub edges: BTreeSet<TransferMove>,
}

impl AdmissibilityGraph {
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains(&self, mv: TransferMove) -> bool {
        self.edges.contains(&mv)
    }

    /// Degree of removable corner `i`, by counting edges.
    pub fn left_degree(&self, i: usize) -> usize {
        self.edges.iter().filter(|e| e.i == i).count()
    }

    /// Degree of addable corner `j`, by counting edges.
    pub fn right_degree(&self, j: usize) -> usize {
        self.edges.iter().filter(|e| e.j == j).count()
    }

    /// `{"t": .., "edges": [[i, j], ...]}` with edges sorted.
    pub fn to_json(&self) -> serde_json::Value {
        let edges: Vec<[usize; 2]> = self.edges.iter().map(|e| [e.i, e.j]).collect();
        serde_json::json!({ "t": self.t, "edges": edges })
    }
}

/// `K_{t,t+1}` minus the diagonal edge `i-i` where `alpha_i = 1` and the
/// successor edge `i-(i+1)` where `beta_i = 1`.
pub fn admissibility_graph(ty: &LocalType) -> AdmissibilityGraph {
    let t = ty.t();
    let edges = TransferMove::all(t)
        .filter(|mv| {
            let diagonal = mv.j == mv.i && ty.alpha[mv.i - 1];
            let successor = mv.j == mv.i + 1 && ty.beta[mv.i - 1];
            !diagonal && !successor
        })
        .collect();
    AdmissibilityGraph { t, edges }
}

/// `t(t+1) - S - U`.
pub fn degree_formula(ty: &LocalType) -> usize {
    let t = ty.t();
    t * (t + 1) - ty.singleton_count() - ty.unit_gap_count()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SideDegrees {
    /// Degrees of the removable corners.
    pub sigma: Vec<usize>,
    /// Degrees of the addable corners.
    pub tau: Vec<usize>,
}

impl SideDegrees {
    pub fn max(&self) -> usize {
        self.sigma
            .iter()
            .chain(&self.tau)
            .copied()
            .max()
            .unwrap_or(0)
    }
}

pub fn side_degrees(ty: &LocalType) -> SideDegrees {
    let t = ty.t();
    let sigma = (1..=t)
        .map(|i| t + 1 - ty.alpha_at(i) - ty.beta_at(i))
        .collect();
    let tau = (1..=t + 1)
        .map(|j| t - ty.alpha_at(j) - ty.beta_at(j - 1))
        .collect();
    SideDegrees { sigma, tau }
}

/// Size of the largest clique of the partition graph through the vertex.
pub fn local_clique_number(ty: &LocalType) -> usize {
    1 + side_degrees(ty).max()
}

/// Largest dimension of a simplex of the clique complex through the vertex.
pub fn local_dimension(ty: &LocalType) -> usize {
    local_clique_number(ty) - 1
}

/// Everything the local type determines, bundled for reporting.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalSummary {
    pub local_type: LocalType,
    pub admissibility_graph: serde_json::Value,
    pub degree: usize,
    pub sigma: Vec<usize>,
    pub tau: Vec<usize>,
    pub local_clique_number: usize,
    pub local_dimension: usize,
}

impl LocalSummary {
    pub fn of(ty: &LocalType) -> Self {
        let SideDegrees { sigma, tau } = side_degrees(ty);
        Self {
            local_type: ty.clone(),
            admissibility_graph: admissibility_graph(ty).to_json(),
            degree: degree_formula(ty),
            sigma,
            tau,
            local_clique_number: local_clique_number(ty),
            local_dimension: local_dimension(ty),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn ty(alpha: &[u8], beta: &[u8]) -> LocalType {
        LocalType::new(
            alpha.iter().map(|&b| b == 1).collect(),
            beta.iter().map(|&b| b == 1).collect(),
        )
        .unwrap()
    }

    #[test]
    fn types_of_examples() {
        assert_eq!(local_type(&p(&[4, 4, 2, 2])), ty(&[0, 0], &[0, 0]));
        assert_eq!(local_type(&p(&[3, 2, 1])), ty(&[1, 1, 1], &[1, 1, 1]));
        assert_eq!(local_type(&p(&[9])), ty(&[1], &[0]));
        assert_eq!(local_type(&p(&[1])), ty(&[1], &[1]));
    }

    #[test]
    fn admissibility_graphs() {
        let k23 = admissibility_graph(&ty(&[0, 0], &[0, 0]));
        assert_eq!(k23.edge_count(), 6);
        assert_eq!(k23.edges, TransferMove::all(2).collect());

        let single = admissibility_graph(&ty(&[1], &[0]));
        assert_eq!(
            single.edges.iter().copied().collect::<Vec<_>>(),
            vec![TransferMove::new(1, 2)]
        );

        assert_eq!(
            admissibility_graph(&ty(&[1, 1, 1], &[1, 1, 1])).edge_count(),
            6
        );
        assert_eq!(admissibility_graph(&ty(&[1], &[1])).edge_count(), 0);
    }

    #[test]
    fn admissibility_graph_json() {
        let json = admissibility_graph(&ty(&[1], &[0])).to_json();
        assert_eq!(json.to_string(), r#"{"edges":[[1,2]],"t":1}"#);
    }

    #[test]
    fn degrees() {
        assert_eq!(degree_formula(&ty(&[0, 0], &[0, 0])), 6);
        assert_eq!(degree_formula(&ty(&[1], &[1])), 0);
        assert_eq!(
            degree_formula(&local_type(&Partition::staircase(4).unwrap())),
            12
        );
    }

    #[test]
    fn side_degree_examples() {
        let k23 = side_degrees(&ty(&[0, 0], &[0, 0]));
        assert_eq!(k23.sigma, vec![3, 3]);
        assert_eq!(k23.tau, vec![2, 2, 2]);

        for t in 2..=6 {
            let s = side_degrees(&local_type(&Partition::staircase(t).unwrap()));
            assert_eq!(s.sigma, vec![t - 1; t]);
            let mut tau = vec![t - 2; t + 1];
            tau[0] = t - 1;
            tau[t] = t - 1;
            assert_eq!(s.tau, tau);
        }

        let rect = side_degrees(&local_type(&p(&[3, 3, 3])));
        assert_eq!(rect.sigma, vec![2]);
        assert_eq!(rect.tau, vec![1, 1]);
    }

    #[test]
    fn clique_numbers() {
        assert_eq!(local_clique_number(&ty(&[0, 0], &[0, 0])), 4);
        assert_eq!(local_dimension(&ty(&[0, 0], &[0, 0])), 3);
        for t in 1..=6 {
            let d = local_type(&Partition::staircase(t).unwrap());
            assert_eq!(local_clique_number(&d), t);
            assert_eq!(local_dimension(&d), t - 1);
        }
        assert_eq!(local_clique_number(&local_type(&p(&[2, 2]))), 3);
        assert_eq!(local_clique_number(&ty(&[1], &[1])), 1);
    }

    #[test]
    fn json_round_trip_and_validation() {
        let t = ty(&[1, 0], &[0, 1]);
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(s, r#"{"t":2,"alpha":[1,0],"beta":[0,1]}"#);
        assert_eq!(serde_json::from_str::<LocalType>(&s).unwrap(), t);
        assert!(
            serde_json::from_str::<LocalType>(r#"{"t":3,"alpha":[1,0],"beta":[0,1]}"#).is_err()
        );
        assert!(serde_json::from_str::<LocalType>(r#"{"t":1,"alpha":[2],"beta":[0]}"#).is_err());
        assert!(LocalType::new(vec![], vec![]).is_err());
        assert!(LocalType::new(vec![true], vec![]).is_err());
    }
}
