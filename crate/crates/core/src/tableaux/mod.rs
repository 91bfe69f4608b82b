//! Young diagrams and standard Young tableaux.
//!
//! Tableaux use English notation: row 0 is the top (longest) row and entries
//! increase to the right and downward.

mod counting;
mod evacuation;
mod profile;
mod rsk;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub use counting::{
    barnes_g, count_self_evacuating_rect, enumerate_syt, enumerate_syt_bounded, hook_length_count,
    rect_count_via_barnes, sav_bounds, DEFAULT_SYT_BOUND,
};
pub use evacuation::{evacuate, is_self_evacuating};
pub use profile::{partition_quotient, ProfileWord, Step};
pub use rsk::{rsk, rsk_inverse};

/// An integer partition: weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::invalid("partition parts must be positive"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid("partition parts must be weakly decreasing"));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `λ_{p×q}`: `p` rows of length `q`. Degenerate sides give the empty partition.
    pub fn rectangle(p: usize, q: usize) -> Self {
        if q == 0 {
            return Partition::empty();
        }
        Partition { parts: vec![q; p] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of rows.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        Partition {
            parts: (0..width)
                .map(|c| self.parts.iter().take_while(|&&p| p > c).count())
                .collect(),
        }
    }

    /// All partitions of `n`, parts in decreasing lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for part in (1..=rest.min(max)).rev() {
                cur.push(part);
                go(rest - part, part, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::parse("partition", s, e.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|e| Error::parse("partition", s, e.to_string()))
    }
}

/// A standard Young tableau filled with `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        let n = shape.size();
        let mut seen = vec![false; n];
        for &v in rows.iter().flatten() {
            if v == 0 || v > n || std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::invalid(format!(
                    "tableau entries must be exactly 1..={n}"
                )));
            }
        }
        for (r, row) in rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::invalid(format!("row {r} is not increasing")));
            }
            if r > 0 && row.iter().zip(&rows[r - 1]).any(|(b, a)| a >= b) {
                return Err(Error::invalid(format!(
                    "column violation below row {}",
                    r - 1
                )));
            }
        }
        Ok(StandardTableau { rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<usize>>) -> Self {
        debug_assert!(StandardTableau::new(rows.clone()).is_ok(), "{rows:?}");
        StandardTableau { rows }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition {
            parts: self.rows.iter().map(Vec::len).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn get(&self, row: usize, col: usize) -> Option<usize> {
        self.rows.get(row).and_then(|r| r.get(col)).copied()
    }

    /// Rows concatenated top to bottom.
    pub fn row_reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    pub fn transpose(&self) -> StandardTableau {
        let width = self.rows.first().map_or(0, Vec::len);
        let rows = (0..width)
            .map(|c| {
                self.rows
                    .iter()
                    .take_while(|row| row.len() > c)
                    .map(|row| row[c])
                    .collect()
            })
            .collect();
        StandardTableau { rows }
    }
}

impl fmt::Display for StandardTableau {
    /// Rows separated by `/`, entries by `,`, e.g. `1,3/2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(usize::to_string).collect::<Vec<_>>().join(","))
            .collect();
        f.write_str(&rows.join("/"))
    }
}

impl FromStr for StandardTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(StandardTableau { rows: Vec::new() });
        }
        let rows = s
            .split('/')
            .map(|row| {
                row.split(',')
                    .map(|t| {
                        t.trim()
                            .parse::<usize>()
                            .map_err(|e| Error::parse("tableau", s, e.to_string()))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        StandardTableau::new(rows).map_err(|e| Error::parse("tableau", s, e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> StandardTableau {
        s.parse().unwrap()
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![3, 1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(Partition::rectangle(3, 2).parts(), &[2, 2, 2]);
        assert_eq!(Partition::rectangle(0, 4), Partition::empty());
        assert_eq!(
            "3,1".parse::<Partition>().unwrap().conjugate().parts(),
            &[2, 1, 1]
        );
        assert_eq!(Partition::all_of_size(5).len(), 7);
        assert_eq!(Partition::all_of_size(0), vec![Partition::empty()]);
    }

    #[test]
    fn tableau_validation() {
        assert!(StandardTableau::new(vec![vec![1, 3], vec![2]]).is_ok());
        assert!(StandardTableau::new(vec![vec![2, 1]]).is_err());
        assert!(StandardTableau::new(vec![vec![1, 2], vec![3, 4, 5]]).is_err());
        assert!(StandardTableau::new(vec![vec![1, 3], vec![4, 2]]).is_err());
        assert!(StandardTableau::new(vec![vec![1, 2], vec![2]]).is_err());
        assert!(StandardTableau::new(vec![vec![2, 3], vec![1]]).is_err());
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(t("1,2/3").transpose(), t("1,3/2"));
        assert_eq!(t("1,2,3").transpose(), t("1/2/3"));
        let y = t("1,2,5/3,4/6");
        assert_eq!(y.transpose().transpose(), y);
    }

    #[test]
    fn text_round_trip() {
        let y = t("1,3,4/2,6/5");
        assert_eq!(y.to_string(), "1,3,4/2,6/5");
        assert_eq!(y.shape().to_string(), "3,2,1");
        assert!("1,3/x".parse::<StandardTableau>().is_err());
    }
}
