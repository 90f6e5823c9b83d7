//! Exact binomial, Stirling and Bell tables.
//!
//! Everything here is arbitrary precision. Tables are built eagerly, row by
//! row, and never mutated afterwards.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Pascal's triangle through row `max_row`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomialTable {
    rows: Vec<Vec<BigUint>>,
}

impl BinomialTable {
    pub fn build(max_row: usize) -> Self {
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(max_row + 1);
        rows.push(vec![BigUint::one()]);
        for n in 1..=max_row {
            let prev = &rows[n - 1];
            let mut row = Vec::with_capacity(n + 1);
            row.push(BigUint::one());
            for k in 1..n {
                row.push(&prev[k - 1] + &prev[k]);
            }
            row.push(BigUint::one());
            rows.push(row);
        }
        BinomialTable { rows }
    }

    pub fn max_row(&self) -> usize {
        self.rows.len() - 1
    }

    /// `C(n, k)`, or zero when `k > n`.
    pub fn get(&self, n: usize, k: usize) -> Result<BigUint> {
        let row = self.row(n)?;
        Ok(row.get(k).cloned().unwrap_or_default())
    }

    pub fn row(&self, n: usize) -> Result<&[BigUint]> {
        self.rows
            .get(n)
            .map(Vec::as_slice)
            .ok_or(Error::TableTooShallow {
                index: n,
                depth: self.max_row(),
            })
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigUint]> {
        self.rows.iter().map(Vec::as_slice)
    }
}

/// Row `n` of Pascal's triangle from the multiplicative formula
/// `C(n, k+1) = C(n, k)·(n−k)/(k+1)`, without building earlier rows.
pub fn binomial_row(n: usize) -> Vec<BigUint> {
    let mut row = Vec::with_capacity(n + 1);
    let mut c = BigUint::one();
    row.push(c.clone());
    for k in 0..n {
        c = c * BigUint::from(n - k) / BigUint::from(k + 1);
        row.push(c.clone());
    }
    row
}

/// Stirling numbers of the second kind, `rows[n][k]` for `0 <= k <= n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StirlingTriangle {
    rows: Vec<Vec<BigUint>>,
}

impl StirlingTriangle {
    /// Builds rows `0..=max_row` from `S(n+1, k) = S(n, k-1) + k·S(n, k)`,
    /// with `S(0, 0) = 1` and `S(n, 0) = 0` for `n >= 1`.
    pub fn build(max_row: usize) -> Self {
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(max_row + 1);
        rows.push(vec![BigUint::one()]);
        for n in 0..max_row {
            rows.push(next_stirling_row(&rows[n]));
        }
        StirlingTriangle { rows }
    }

    pub fn max_row(&self) -> usize {
        self.rows.len() - 1
    }

    /// `S(n, k)`, or zero when `k > n`.
    pub fn get(&self, n: usize, k: usize) -> Result<BigUint> {
        let row = self.row(n)?;
        Ok(row.get(k).cloned().unwrap_or_default())
    }

    pub fn row(&self, n: usize) -> Result<&[BigUint]> {
        self.rows
            .get(n)
            .map(Vec::as_slice)
            .ok_or(Error::TableTooShallow {
                index: n,
                depth: self.max_row(),
            })
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigUint]> {
        self.rows.iter().map(Vec::as_slice)
    }

    /// `B_n` as the row sum `Σ_{k=1}^{n} S(n, k)`; `B_0 = 1`.
    pub fn bell(&self, n: usize) -> Result<BigUint> {
        if n == 0 {
            return Ok(BigUint::one());
        }
        Ok(self.row(n)?[1..].iter().sum())
    }
}

fn next_stirling_row(prev: &[BigUint]) -> Vec<BigUint> {
    let n = prev.len() - 1;
    let mut row = Vec::with_capacity(n + 2);
    row.push(BigUint::zero());
    for k in 1..=n {
        row.push(&prev[k - 1] + &prev[k] * BigUint::from(k));
    }
    row.push(prev[n].clone());
    row
}

/// Exact Bell numbers `B_0..=B_max_index`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BellTable {
    values: Vec<BigUint>,
}

impl BellTable {
    /// Builds the table from `B_{n+1} = Σ_{d=0}^{n} B_d·C(n, n−d)`, carrying a
    /// single Pascal row forward instead of a full binomial table.
    pub fn build(max_index: usize) -> Self {
        let mut values = Vec::with_capacity(max_index + 1);
        values.push(BigUint::one());
        let mut pascal = vec![BigUint::one()];
        for n in 0..max_index {
            // pascal holds row n; C(n, n−d) = C(n, d).
            let next: BigUint = values.iter().zip(&pascal).map(|(b, c)| b * c).sum();
            values.push(next);
            pascal.push(BigUint::one());
            for k in (1..=n).rev() {
                let left = pascal[k - 1].clone();
                pascal[k] += left;
            }
        }
        BellTable { values }
    }

    /// Builds the table from Stirling row sums, generating each row from the
    /// previous one and discarding it afterwards. Memory stays linear in the
    /// depth, which makes this the route for tables thousands deep.
    pub fn from_stirling_rows(max_index: usize) -> Self {
        let mut values = Vec::with_capacity(max_index + 1);
        values.push(BigUint::one());
        let mut row = vec![BigUint::one()];
        for _ in 0..max_index {
            row = next_stirling_row(&row);
            values.push(row[1..].iter().sum());
        }
        BellTable { values }
    }

    pub fn from_values(values: Vec<BigUint>) -> Option<Self> {
        if values.is_empty() {
            None
        } else {
            Some(BellTable { values })
        }
    }

    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, n: usize) -> Result<&BigUint> {
        self.values.get(n).ok_or(Error::TableTooShallow {
            index: n,
            depth: self.max_index(),
        })
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }

    /// `B_n mod p` for every entry.
    pub fn residues(&self, p: u64) -> Vec<u64> {
        let modulus = BigUint::from(p);
        self.values.iter().map(|b| reduce(b, &modulus)).collect()
    }
}

/// Reduces an exact value to a word-sized residue.
pub(crate) fn reduce(value: &BigUint, modulus: &BigUint) -> u64 {
    let r = value % modulus;
    r.iter_u64_digits().next().unwrap_or(0)
}
