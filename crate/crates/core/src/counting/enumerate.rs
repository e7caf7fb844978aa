use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::TopRowKey;
use crate::exact::LaurentPolyQ;
use crate::patterns::GenPattern;

/// Depth-first walk over all patterns with a given top row.
///
/// Rows are filled top-down (row `r` to row 1), left to right. A cell with
/// north-west neighbour `w` and north-east neighbour `e` ranges over
/// `w..=e` if `w <= e` and over `e+1..=w-1` otherwise, so every range is an
/// explicit interval, possibly empty.
///
/// The cursor reuses one grid; [`PatternIter`] clones it into owned patterns.
#[derive(Clone, Debug)]
pub struct PatternCursor {
    key: TopRowKey,
    grid: Vec<Vec<i64>>,
    cells: Vec<(usize, usize)>,
    hi: Vec<i64>,
    started: bool,
    done: bool,
}

impl PatternCursor {
    pub fn new(key: &TopRowKey) -> Self {
        let (r, n, c) = (key.r, key.n, key.c);
        let mut grid: Vec<Vec<i64>> = (1..=r + 1)
            .map(|i| {
                let mut row = vec![0; n + 3 - i];
                *row.last_mut().unwrap() = c;
                row
            })
            .collect();
        grid[r] = key.full_top_row();
        let cells: Vec<(usize, usize)> = (1..=r).rev().flat_map(|i| (i..=n).map(move |j| (i, j))).collect();
        let hi = vec![0; cells.len()];
        PatternCursor { key: key.clone(), grid, cells, hi, started: false, done: false }
    }

    fn at(&self, i: usize, j: usize) -> i64 {
        self.grid[i - 1][j + 1 - i]
    }

    fn set(&mut self, i: usize, j: usize, v: i64) {
        self.grid[i - 1][j + 1 - i] = v;
    }

    fn range(&self, t: usize) -> (i64, i64) {
        let (i, j) = self.cells[t];
        let (w, e) = (self.at(i + 1, j), self.at(i + 1, j + 1));
        if w <= e {
            (w, e)
        } else {
            (e + 1, w - 1)
        }
    }

    /// Increments the deepest cell below `limit` that still has room and
    /// returns the index of the first cell to refill.
    fn bump(&mut self, limit: usize) -> Option<usize> {
        for t in (0..limit).rev() {
            let (i, j) = self.cells[t];
            let cur = self.at(i, j);
            if cur < self.hi[t] {
                self.set(i, j, cur + 1);
                return Some(t + 1);
            }
        }
        None
    }

    /// Moves to the next pattern; `false` once the enumeration is exhausted.
    pub fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        let mut t = if self.started {
            match self.bump(self.cells.len()) {
                Some(t) => t,
                None => {
                    self.done = true;
                    return false;
                }
            }
        } else {
            self.started = true;
            0
        };
        loop {
            if t == self.cells.len() {
                return true;
            }
            let (lo, hi) = self.range(t);
            if lo <= hi {
                let (i, j) = self.cells[t];
                self.set(i, j, lo);
                self.hi[t] = hi;
                t += 1;
            } else {
                match self.bump(t) {
                    Some(next) => t = next,
                    None => {
                        self.done = true;
                        return false;
                    }
                }
            }
        }
    }

    /// Current rows, bottom row first, borders included.
    pub fn rows(&self) -> &[Vec<i64>] {
        &self.grid
    }

    pub fn sign(&self) -> i64 {
        let inv: usize = self.grid.iter().skip(1).map(|row| row.windows(2).filter(|w| w[0] > w[1]).count()).sum();
        if inv.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn norm(&self) -> i64 {
        self.grid.iter().map(|row| row[1..row.len() - 1].iter().sum::<i64>()).sum()
    }

    pub fn pattern(&self) -> GenPattern {
        GenPattern::from_rows(self.key.r, self.key.n, self.key.c, self.grid.clone())
    }
}

/// Owning iterator over every pattern with the given top row.
pub struct PatternIter {
    cursor: PatternCursor,
}

impl Iterator for PatternIter {
    type Item = GenPattern;

    fn next(&mut self) -> Option<GenPattern> {
        self.cursor.advance().then(|| self.cursor.pattern())
    }
}

pub fn enumerate_patterns(key: &TopRowKey) -> PatternIter {
    PatternIter { cursor: PatternCursor::new(key) }
}

/// Unsigned number of patterns.
pub fn count_patterns(key: &TopRowKey) -> u64 {
    let mut cursor = PatternCursor::new(key);
    let mut count = 0;
    while cursor.advance() {
        count += 1;
    }
    count
}

/// `F(r, n, c; ks)`: the sum of signs over all patterns.
pub fn f_bruteforce(key: &TopRowKey) -> BigRational {
    let mut cursor = PatternCursor::new(key);
    let mut total: i128 = 0;
    while cursor.advance() {
        total += cursor.sign() as i128;
    }
    BigRational::from_integer(BigInt::from(total))
}

/// `F_q(r, n, c; ks)`: `sum sgn(a) q^norm(a)` divided by `q^(k_1 + ... + k_{n-r})`.
pub fn fq_bruteforce(key: &TopRowKey) -> LaurentPolyQ {
    let mut cursor = PatternCursor::new(key);
    let mut hist: BTreeMap<i64, i128> = BTreeMap::new();
    while cursor.advance() {
        *hist.entry(cursor.norm()).or_insert(0) += cursor.sign() as i128;
    }
    let shift = key.top_sum();
    LaurentPolyQ::from_terms(
        hist.into_iter().map(|(e, c)| (e - shift, BigRational::from_integer(BigInt::from(c)))),
    )
}
