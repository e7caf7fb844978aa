use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Generalized `(r, n, c)` Gelfand-Tsetlin pattern.
///
/// `rows[i - 1]` holds row `i` (row 1 is the bottom row) including both
/// borders, i.e. the entries `a[i][j]` for `j = i-1 ..= n+1`. Row `r + 1` is
/// the top row `(0, k_1, ..., k_{n-r}, c)`.
///
/// Every entry below the top row lies between its north-west neighbour `w`
/// and north-east neighbour `e`: weakly if `w <= e`, strictly otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GenPattern {
    r: usize,
    n: usize,
    c: i64,
    rows: Vec<Vec<i64>>,
}

impl GenPattern {
    /// Wraps the rows without checking them; see [`GenPattern::validate`].
    pub fn from_rows(r: usize, n: usize, c: i64, rows: Vec<Vec<i64>>) -> Self {
        GenPattern { r, n, c, rows }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn c(&self) -> i64 {
        self.c
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// Entry `a[i][j]`, `1 <= i <= r+1`, `i-1 <= j <= n+1`.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.rows[i - 1][j + 1 - i]
    }

    /// Interior of the top row, `(k_1, ..., k_{n-r})`.
    pub fn top_row(&self) -> &[i64] {
        let top = &self.rows[self.r];
        &top[1..top.len() - 1]
    }

    pub fn check_dims(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::DimensionMismatch("n must be positive".into()));
        }
        if self.r > self.n {
            return Err(Error::DimensionMismatch(format!("r = {} exceeds n = {}", self.r, self.n)));
        }
        if self.rows.len() != self.r + 1 {
            return Err(Error::DimensionMismatch(format!(
                "expected {} rows, found {}",
                self.r + 1,
                self.rows.len()
            )));
        }
        for (idx, row) in self.rows.iter().enumerate() {
            let want = self.n - idx + 2;
            if row.len() != want {
                return Err(Error::DimensionMismatch(format!(
                    "row {} has {} entries, expected {}",
                    idx + 1,
                    row.len(),
                    want
                )));
            }
        }
        Ok(())
    }

    /// `Ok(true)` iff borders and both betweenness conditions hold.
    pub fn validate(&self) -> Result<bool> {
        self.check_dims()?;
        for row in &self.rows {
            if row[0] != 0 || row[row.len() - 1] != self.c {
                return Ok(false);
            }
        }
        for i in 2..=self.r + 1 {
            for j in (i - 1)..=self.n {
                let (w, e, below) = (self.get(i, j), self.get(i, j + 1), self.get(i - 1, j));
                let ok = if w <= e { w <= below && below <= e } else { w > below && below > e };
                if !ok {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Number of descents `a[i][j] > a[i][j+1]` in rows `i >= 2`, borders included.
    pub fn inversions(&self) -> usize {
        self.rows
            .iter()
            .skip(1)
            .map(|row| row.windows(2).filter(|w| w[0] > w[1]).count())
            .sum()
    }

    /// `(-1)^inversions`.
    pub fn sign(&self) -> i32 {
        if self.inversions().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Sum of all entries except the two borders of each row.
    pub fn norm(&self) -> i64 {
        self.rows.iter().map(|row| row[1..row.len() - 1].iter().sum::<i64>()).sum()
    }
}

/// Classical Gelfand-Tsetlin pattern with `n` rows.
///
/// `rows[i - 1]` holds `a[i][i..=n]`; row 1 (the bottom) has `n` entries and
/// the top row has the single entry `a[n][n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GtPattern {
    rows: Vec<Vec<i64>>,
}

impl GtPattern {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::DimensionMismatch("a pattern needs at least one row".into()));
        }
        for (idx, row) in rows.iter().enumerate() {
            if row.len() != n - idx {
                return Err(Error::DimensionMismatch(format!(
                    "row {} has {} entries, expected {}",
                    idx + 1,
                    row.len(),
                    n - idx
                )));
            }
        }
        let g = GtPattern { rows };
        for i in 2..=n {
            for j in i..=n {
                // a[i][j] <= a[i-1][j] and a[i-1][j-1] <= a[i][j]
                if g.get(i, j) > g.get(i - 1, j) || g.get(i - 1, j - 1) > g.get(i, j) {
                    return Err(Error::ShapeViolation(format!("interlacing fails at ({i}, {j})")));
                }
            }
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// Entry `a[i][j]`, `1 <= i <= j <= n`.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.rows[i - 1][j - i]
    }

    pub fn top(&self) -> i64 {
        self.rows[self.n() - 1][0]
    }

    pub fn norm(&self) -> i64 {
        self.rows.iter().flatten().sum()
    }

    /// The same array read as an `(n-1, n, c)`-pattern.
    pub fn to_gen(&self, c: i64) -> GenPattern {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut full = Vec::with_capacity(row.len() + 2);
                full.push(0);
                full.extend_from_slice(row);
                full.push(c);
                full
            })
            .collect();
        GenPattern::from_rows(self.n() - 1, self.n(), c, rows)
    }

    /// Inverse of [`GtPattern::to_gen`] for `(n-1, n, c)`-patterns.
    pub fn from_gen(p: &GenPattern) -> Result<Self> {
        if p.r() + 1 != p.n() {
            return Err(Error::DimensionMismatch(format!(
                "({}, {}, {})-pattern is not of type (n-1, n, c)",
                p.r(),
                p.n(),
                p.c()
            )));
        }
        GtPattern::new(p.rows().iter().map(|row| row[1..row.len() - 1].to_vec()).collect())
    }
}

/// Monotone triangle of size `n`: an `(n-1, n, n+1)`-pattern whose rows,
/// borders included, are strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GenPattern", into = "GenPattern")]
pub struct MonotoneTriangle(GenPattern);

impl MonotoneTriangle {
    /// Size `n` and shape checks only; strictness is decided by [`MonotoneTriangle::accepts`].
    pub fn is_monotone_shape(p: &GenPattern) -> bool {
        p.r() + 1 == p.n() && p.c() == p.n() as i64 + 1
    }

    pub fn accepts(p: &GenPattern) -> bool {
        Self::is_monotone_shape(p) && p.rows().iter().all(|row| row.windows(2).all(|w| w[0] < w[1]))
    }

    pub fn pattern(&self) -> &GenPattern {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.n()
    }

    /// Central entry `a[n][n]` of the top row.
    pub fn top(&self) -> i64 {
        self.0.top_row()[0]
    }
}

impl TryFrom<GenPattern> for MonotoneTriangle {
    type Error = Error;

    fn try_from(p: GenPattern) -> Result<Self> {
        if !p.validate()? {
            return Err(Error::ShapeViolation("not a generalized pattern".into()));
        }
        if !Self::accepts(&p) {
            return Err(Error::ShapeViolation("not a monotone triangle".into()));
        }
        Ok(MonotoneTriangle(p))
    }
}

impl From<MonotoneTriangle> for GenPattern {
    fn from(m: MonotoneTriangle) -> GenPattern {
        m.0
    }
}
