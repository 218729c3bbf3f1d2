//! Elementary cell transfers between corners of a Ferrers diagram.
//!
//! Removable corner `c_i` (1 <= i <= t) is the last cell of the last row of
//! block `i` and sits in column `s_i`. Addable corner `a_j` (1 <= j <= t + 1)
//! lengthens the first row of block `j` and sits in column `s_j + 1`;
//! `a_{t+1}` starts a new row of length 1.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Move one cell from removable corner `i` to addable corner `j` (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TransferMove {
    pub i: usize,
    pub j: usize,
}

impl TransferMove {
    pub const fn new(i: usize, j: usize) -> Self {
        Self { i, j }
    }

    /// True when the two moves share a removable or an addable corner.
    pub fn shares_corner(&self, other: &TransferMove) -> bool {
        self.i == other.i || self.j == other.j
    }

    /// Every move in range for support size `t`, in lexicographic order.
    pub fn all(t: usize) -> impl Iterator<Item = TransferMove> {
        (1..=t).flat_map(move |i| (1..=t + 1).map(move |j| TransferMove::new(i, j)))
    }
}

impl fmt::Display for TransferMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}", self.i, self.j)
    }
}

impl FromStr for TransferMove {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_err = |reason: &str| Error::Parse {
            input: s.to_owned(),
            reason: reason.to_owned(),
        };
        let (i, j) = s
            .split_once("->")
            .ok_or_else(|| parse_err("expected the form i->j"))?;
        let i: usize = i
            .trim()
            .parse()
            .map_err(|_| parse_err("bad removable index"))?;
        let j: usize = j
            .trim()
            .parse()
            .map_err(|_| parse_err("bad addable index"))?;
        if i == 0 || j == 0 {
            return Err(parse_err("corner indices are 1-based"));
        }
        Ok(TransferMove::new(i, j))
    }
}

/// Why a transfer leaves the partition unchanged.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Obstruction {
    /// `j = i` and block `i` has a single row.
    SingletonBlock,
    /// `j = i + 1` and the gap `s_i - s_{i+1}` is 1.
    UnitGap,
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Obstruction::SingletonBlock => f.write_str("diagonal move on a singleton block"),
            Obstruction::UnitGap => f.write_str("successor move across a unit gap"),
        }
    }
}

/// Columns of the removable corners, `(s_1, ..., s_t)`.
pub fn removable_corner_columns(p: &Partition) -> Vec<usize> {
    p.support()
}

/// Columns of the addable corners, `(s_1 + 1, ..., s_t + 1, 1)`.
pub fn addable_corner_columns(p: &Partition) -> Vec<usize> {
    p.support()
        .into_iter()
        .map(|s| s + 1)
        .chain(std::iter::once(1))
        .collect()
}

fn check_range(p: &Partition, mv: TransferMove) -> Result<()> {
    let t = p.support_size();
    if mv.i == 0 || mv.i > t || mv.j == 0 || mv.j > t + 1 {
        return Err(Error::MoveOutOfRange { mv, t });
    }
    Ok(())
}

/// The obstruction blocking `mv`, if any. `mv` must be in range.
pub fn obstruction(p: &Partition, mv: TransferMove) -> Result<Option<Obstruction>> {
    check_range(p, mv)?;
    let TransferMove { i, j } = mv;
    if j == i && p.multiplicity(i) == 1 {
        return Ok(Some(Obstruction::SingletonBlock));
    }
    if j == i + 1 && p.block_size(i) - p.block_size(i + 1) == 1 {
        return Ok(Some(Obstruction::UnitGap));
    }
    Ok(None)
}

pub fn is_admissible(p: &Partition, mv: TransferMove) -> Result<bool> {
    Ok(obstruction(p, mv)?.is_none())
}

impl Partition {
    /// Moves one cell from removable corner `mv.i` to addable corner `mv.j`
    /// and reorders, without checking admissibility. The result equals
    /// `self` exactly for the obstructed moves.
    pub fn move_cell(&self, mv: TransferMove) -> Result<Partition> {
        check_range(self, mv)?;
        let blocks = self.blocks();
        let rows_through = |k: usize| blocks[..k].iter().map(|b| b.multiplicity).sum::<usize>();

        let mut rows = self.parts().to_vec();
        let source = rows_through(mv.i) - 1;
        let target = (mv.j <= blocks.len()).then(|| rows_through(mv.j - 1));

        // Adding first keeps the source row index valid when i == j.
        match target {
            Some(row) => rows[row] += 1,
            None => rows.push(1),
        }
        rows[source] -= 1;
        rows.retain(|&r| r > 0);
        rows.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition::from_sorted(rows))
    }
}

/// The neighbor `λ(c_i -> a_j)`; errors if the move is out of range or
/// would leave the partition unchanged.
pub fn apply_transfer(p: &Partition, mv: TransferMove) -> Result<Partition> {
    if let Some(reason) = obstruction(p, mv)? {
        return Err(Error::Inadmissible { mv, reason });
    }
    p.move_cell(mv)
}

/// Every admissible move with the neighbor it produces.
pub fn neighbors(p: &Partition) -> BTreeMap<TransferMove, Partition> {
    TransferMove::all(p.support_size())
        .filter_map(|mv| apply_transfer(p, mv).ok().map(|q| (mv, q)))
        .collect()
}

/// Column indices `(col(c_i), col(a_j))` touched by an admissible move.
pub fn conjugate_delta(p: &Partition, mv: TransferMove) -> Result<(usize, usize)> {
    if let Some(reason) = obstruction(p, mv)? {
        return Err(Error::Inadmissible { mv, reason });
    }
    Ok((p.block_size(mv.i), p.block_size(mv.j) + 1))
}

/// Adjacency in the partition graph via conjugates: `q' = p' - e_u + e_v`
/// for some `u != v`.
pub fn are_adjacent(p: &Partition, q: &Partition) -> Result<bool> {
    if p.weight() != q.weight() {
        return Err(Error::WeightMismatch {
            left: p.weight(),
            right: q.weight(),
        });
    }
    let a = p.conjugate_parts();
    let b = q.conjugate_parts();
    let len = a.len().max(b.len());
    let (mut up, mut down) = (0, 0);
    for k in 0..len {
        let diff = b.get(k).copied().unwrap_or(0) as i64 - a.get(k).copied().unwrap_or(0) as i64;
        match diff {
            0 => {}
            1 => up += 1,
            -1 => down += 1,
            _ => return Ok(false),
        }
    }
    Ok(up == 1 && down == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn mv(i: usize, j: usize) -> TransferMove {
        TransferMove::new(i, j)
    }

    #[test]
    fn corner_columns() {
        assert_eq!(removable_corner_columns(&p(&[4, 4, 2, 2])), vec![4, 2]);
        assert_eq!(removable_corner_columns(&p(&[3, 2, 1])), vec![3, 2, 1]);
        assert_eq!(removable_corner_columns(&p(&[9])), vec![9]);
        assert_eq!(addable_corner_columns(&p(&[4, 4, 2, 2])), vec![5, 3, 1]);
        assert_eq!(addable_corner_columns(&p(&[1, 1, 1])), vec![2, 1]);
        assert_eq!(addable_corner_columns(&p(&[3, 2, 1])), vec![4, 3, 2, 1]);
    }

    #[test]
    fn admissibility_examples() {
        assert!(!is_admissible(&p(&[6]), mv(1, 1)).unwrap());
        assert!(is_admissible(&p(&[6]), mv(1, 2)).unwrap());
        let ones = Partition::column(6).unwrap();
        assert!(!is_admissible(&ones, mv(1, 2)).unwrap());
        assert!(is_admissible(&ones, mv(1, 1)).unwrap());
        let q = p(&[4, 4, 2, 2]);
        assert!(TransferMove::all(2).all(|m| is_admissible(&q, m).unwrap()));
    }

    #[test]
    fn out_of_range_moves_error() {
        let q = p(&[4, 4, 2, 2]);
        for bad in [mv(0, 1), mv(3, 1), mv(1, 0), mv(1, 4)] {
            assert_eq!(
                is_admissible(&q, bad),
                Err(Error::MoveOutOfRange { mv: bad, t: 2 })
            );
        }
    }

    #[test]
    fn applies_transfers() {
        let q = p(&[4, 4, 2, 2]);
        assert_eq!(apply_transfer(&q, mv(1, 1)).unwrap(), p(&[5, 3, 2, 2]));
        assert_eq!(apply_transfer(&q, mv(2, 1)).unwrap(), p(&[5, 4, 2, 1]));
        assert_eq!(apply_transfer(&p(&[7]), mv(1, 2)).unwrap(), p(&[6, 1]));
        // removing the only part of size 1
        assert_eq!(apply_transfer(&p(&[3, 1]), mv(2, 1)).unwrap(), p(&[4]));
    }

    #[test]
    fn inadmissible_apply_names_the_case() {
        assert_eq!(
            apply_transfer(&p(&[5]), mv(1, 1)),
            Err(Error::Inadmissible {
                mv: mv(1, 1),
                reason: Obstruction::SingletonBlock
            })
        );
        assert_eq!(
            apply_transfer(&p(&[1, 1]), mv(1, 2)),
            Err(Error::Inadmissible {
                mv: mv(1, 2),
                reason: Obstruction::UnitGap
            })
        );
    }

    #[test]
    fn neighbor_maps() {
        let expected: BTreeMap<_, _> = [(mv(1, 3), p(&[1, 1, 1])), (mv(2, 1), p(&[3]))]
            .into_iter()
            .collect();
        assert_eq!(neighbors(&p(&[2, 1])), expected);

        let row = neighbors(&p(&[8]));
        assert_eq!(row.len(), 1);
        assert_eq!(row[&mv(1, 2)], p(&[7, 1]));

        assert_eq!(neighbors(&p(&[4, 4, 2, 2])).len(), 6);
        assert!(neighbors(&p(&[1])).is_empty());
    }

    #[test]
    fn conjugate_deltas() {
        assert_eq!(
            conjugate_delta(&p(&[4, 4, 2, 2]), mv(1, 3)).unwrap(),
            (4, 1)
        );
        assert_eq!(conjugate_delta(&p(&[3, 2, 1]), mv(1, 3)).unwrap(), (3, 2));
        assert_eq!(
            conjugate_delta(&Partition::column(5).unwrap(), mv(1, 1)).unwrap(),
            (1, 2)
        );
        assert!(conjugate_delta(&p(&[3, 2, 1]), mv(2, 3)).is_err());
    }

    #[test]
    fn conjugate_delta_matches_conjugates() {
        let q = p(&[5, 3, 3, 1]);
        for (m, r) in neighbors(&q) {
            let (u, v) = conjugate_delta(&q, m).unwrap();
            let mut expected = q.conjugate_parts();
            expected.resize(expected.len().max(v), 0);
            expected[u - 1] -= 1;
            expected[v - 1] += 1;
            while expected.last() == Some(&0) {
                expected.pop();
            }
            assert_eq!(r.conjugate_parts(), expected, "move {m}");
        }
    }

    #[test]
    fn adjacency_examples() {
        assert!(are_adjacent(&p(&[3]), &p(&[2, 1])).unwrap());
        assert!(!are_adjacent(&p(&[4]), &p(&[2, 2])).unwrap());
        assert!(!are_adjacent(&p(&[2, 2]), &p(&[2, 2])).unwrap());
        assert_eq!(
            are_adjacent(&p(&[3]), &p(&[2, 2])),
            Err(Error::WeightMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn move_text_form() {
        assert_eq!("2->3".parse::<TransferMove>().unwrap(), mv(2, 3));
        assert_eq!(mv(1, 3).to_string(), "1->3");
        assert!("0->1".parse::<TransferMove>().is_err());
        assert!("1-2".parse::<TransferMove>().is_err());
        assert_eq!(
            serde_json::to_string(&mv(1, 2)).unwrap(),
            r#"{"i":1,"j":2}"#
        );
    }
}
