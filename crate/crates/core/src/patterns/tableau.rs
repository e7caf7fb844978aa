use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Weakly decreasing list of nonnegative parts. Trailing zeros are kept.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<i64>,
}

impl Partition {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        if parts.iter().any(|&p| p < 0) {
            return Err(Error::ShapeViolation(format!("negative part in {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::ShapeViolation(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.iter().take_while(|&&p| p > 0).count()
    }

    pub fn size(&self) -> i64 {
        self.parts.iter().sum()
    }

    /// Parts padded with zeros (or truncated past the nonzero parts) to `k` entries.
    pub fn padded(&self, k: usize) -> Vec<i64> {
        let mut out: Vec<i64> = self.parts.iter().copied().filter(|&p| p > 0).collect();
        out.resize(k.max(out.len()), 0);
        out
    }

    /// All partitions with at most `max_len` parts, each at most `max_part`.
    pub fn all_in_box(max_len: usize, max_part: i64) -> Vec<Partition> {
        fn rec(prefix: &mut Vec<i64>, max_len: usize, cap: i64, out: &mut Vec<Partition>) {
            out.push(Partition { parts: prefix.clone() });
            if prefix.len() == max_len {
                return;
            }
            for p in 1..=cap {
                prefix.push(p);
                rec(prefix, max_len, p, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), max_len, max_part, &mut out);
        out
    }
}

/// Ferrers-shaped filling with weakly increasing rows and strictly
/// increasing columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SemistandardTableau {
    rows: Vec<Vec<i64>>,
}

impl SemistandardTableau {
    /// Checks the Ferrers shape, row/column monotonicity and `1 <= entry <= k`.
    pub fn new(rows: Vec<Vec<i64>>, k: i64) -> Result<Self> {
        let bad = |msg: &str| Err(Error::ShapeViolation(format!("{msg}: {rows:?}")));
        if rows.iter().any(|r| r.is_empty()) {
            return bad("empty row");
        }
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return bad("row lengths increase");
        }
        if rows.iter().flatten().any(|&v| v < 1 || v > k) {
            return bad("entry outside 1..=k");
        }
        if rows.iter().any(|r| r.windows(2).any(|w| w[0] > w[1])) {
            return bad("row not weakly increasing");
        }
        for w in rows.windows(2) {
            if w[1].iter().zip(&w[0]).any(|(below, above)| below <= above) {
                return bad("column not strictly increasing");
            }
        }
        Ok(SemistandardTableau { rows })
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition { parts: self.rows.iter().map(|r| r.len() as i64).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![3, 1, 1, 0]).is_ok());
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, -1]).is_err());
        let p = Partition::new(vec![2, 1, 0]).unwrap();
        assert_eq!(p.length(), 2);
        assert_eq!(p.padded(4), vec![2, 1, 0, 0]);
    }

    #[test]
    fn partitions_in_box() {
        // binom(2 + 2, 2) partitions fit in a 2 x 2 box
        assert_eq!(Partition::all_in_box(2, 2).len(), 6);
        assert_eq!(Partition::all_in_box(4, 4).len(), 70);
    }

    #[test]
    fn tableau_validation() {
        assert!(SemistandardTableau::new(vec![vec![1, 1], vec![2]], 2).is_ok());
        assert!(SemistandardTableau::new(vec![vec![1, 1], vec![1]], 2).is_err());
        assert!(SemistandardTableau::new(vec![vec![2, 1]], 2).is_err());
        assert!(SemistandardTableau::new(vec![vec![1], vec![2, 2]], 2).is_err());
        assert!(SemistandardTableau::new(vec![vec![3]], 2).is_err());
    }
}
