use serde::{Deserialize, Serialize};

use super::{GtPattern, Partition};
use crate::error::{Error, Result};

/// Ferrers-shaped array of positive integers with weakly decreasing rows
/// and strictly decreasing columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct StrictPlanePartition {
    rows: Vec<Vec<i64>>,
}

impl StrictPlanePartition {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let bad = |msg: &str| Err(Error::ShapeViolation(format!("{msg}: {rows:?}")));
        if rows.iter().any(|r| r.is_empty()) {
            return bad("empty row");
        }
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return bad("row lengths increase");
        }
        if rows.iter().flatten().any(|&v| v < 1) {
            return bad("nonpositive part");
        }
        if rows.iter().any(|r| r.windows(2).any(|w| w[0] < w[1])) {
            return bad("row not weakly decreasing");
        }
        for w in rows.windows(2) {
            if w[1].iter().zip(&w[0]).any(|(below, above)| below >= above) {
                return bad("column not strictly decreasing");
            }
        }
        Ok(StrictPlanePartition { rows })
    }

    pub fn empty() -> Self {
        StrictPlanePartition { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len() as i64).collect())
            .expect("row lengths are weakly decreasing")
    }

    pub fn columns(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn max_part(&self) -> i64 {
        self.rows.first().and_then(|r| r.first()).copied().unwrap_or(0)
    }

    pub fn norm(&self) -> i64 {
        self.rows.iter().flatten().sum()
    }

    pub fn count_equal(&self, v: i64) -> usize {
        self.rows.iter().flatten().filter(|&&x| x == v).count()
    }
}

/// Maps a Gelfand-Tsetlin pattern with `n` rows to a strict plane partition
/// with parts in `1..=n`.
///
/// The cells holding entries greater than `i` form the partition read off
/// row `i + 1` of the pattern (counted from the bottom). Parts equal to `n`
/// are counted by the top entry, and the norm is preserved.
pub fn gt_to_spp(g: &GtPattern) -> StrictPlanePartition {
    let n = g.n();
    // layers[i] = partition of cells with entry > i
    let layers: Vec<Vec<i64>> = g.rows().iter().map(|row| row.iter().rev().copied().collect()).collect();
    let layer_part = |i: usize, x: usize| layers[i].get(x).copied().unwrap_or(0);
    let mut rows = Vec::new();
    for (x, &len) in layers[0].iter().enumerate() {
        if len == 0 {
            break;
        }
        let row = (0..len).map(|y| (0..n).filter(|&i| layer_part(i, x) > y).count() as i64).collect();
        rows.push(row);
    }
    StrictPlanePartition { rows }
}

/// Inverse of [`gt_to_spp`] for strict plane partitions with parts at most
/// `n` and at most `c` columns.
pub fn spp_to_gt(s: &StrictPlanePartition, n: usize, c: i64) -> Result<GtPattern> {
    if n == 0 {
        return Err(Error::ShapeViolation("n must be positive".into()));
    }
    if s.max_part() > n as i64 {
        return Err(Error::ShapeViolation(format!("part {} exceeds n = {n}", s.max_part())));
    }
    if s.columns() as i64 > c {
        return Err(Error::ShapeViolation(format!("{} columns exceed c = {c}", s.columns())));
    }
    let rows = (0..n)
        .map(|i| {
            let width = n - i;
            // part x of the layer of entries > i, then reversed to ascending order
            let mut layer: Vec<i64> = (0..width)
                .map(|x| s.rows().get(x).map_or(0, |r| r.iter().filter(|&&v| v > i as i64).count() as i64))
                .collect();
            layer.reverse();
            layer
        })
        .collect();
    GtPattern::new(rows)
}

/// All strict plane partitions with parts in `1..=n` and at most `c` columns,
/// built cell by cell independently of any pattern machinery.
pub fn enumerate_spps(n: i64, c: usize) -> Vec<StrictPlanePartition> {
    let mut out = Vec::new();
    let mut rows: Vec<Vec<i64>> = Vec::new();
    grow_rows(&mut rows, n, c, &mut out);
    out
}

fn grow_rows(rows: &mut Vec<Vec<i64>>, n: i64, c: usize, out: &mut Vec<StrictPlanePartition>) {
    out.push(StrictPlanePartition { rows: rows.clone() });
    let max_len = rows.last().map_or(c, Vec::len);
    let mut row = Vec::new();
    fill_row(rows, &mut row, max_len, n, c, out);
}

fn fill_row(
    rows: &mut Vec<Vec<i64>>,
    row: &mut Vec<i64>,
    max_len: usize,
    n: i64,
    c: usize,
    out: &mut Vec<StrictPlanePartition>,
) {
    let y = row.len();
    if y == max_len {
        return;
    }
    let left = row.last().copied().unwrap_or(n);
    let above = rows.last().map_or(n + 1, |r| r[y]);
    let hi = left.min(above - 1);
    for v in 1..=hi {
        row.push(v);
        rows.push(row.clone());
        grow_rows(rows, n, c, out);
        rows.pop();
        fill_row(rows, row, max_len, n, c, out);
        row.pop();
    }
}
