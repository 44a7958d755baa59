//! Fibonacci and Binomiacci numbers computed directly from the recurrence.
//!
//! Indexing convention throughout the crate: F(0) = F(1) = 1 and
//! F(j) = F(j-1) + F(j-2). The Binomiacci numbers B(k, n) are the
//! Pascal-style table with Fibonacci boundaries:
//!
//! ```text
//! B(0, n) = F(n),   B(k, 0) = F(k),   B(k, n) = B(k, n-1) + B(k-1, n).
//! ```
//!
//! All arithmetic here is exact big-integer arithmetic; the series and
//! asymptotics modules treat this one as their oracle.
//!
//! Note: the widely reproduced table of initial values prints column n = 8
//! as 44, 98, 232, 550, 1270, which contradicts the recurrence (it gives
//! 34, 88, 222, 540, 1260). This module follows the recurrence; see
//! ERRATA.md at the repository root.

use num_bigint::BigInt;

/// First `len` Fibonacci numbers under the F(0) = F(1) = 1 convention.
fn fibonacci_sequence(len: usize) -> Vec<BigInt> {
    let mut fibs: Vec<BigInt> = Vec::with_capacity(len);
    for j in 0..len {
        let next = match j {
            0 | 1 => BigInt::from(1),
            _ => &fibs[j - 1] + &fibs[j - 2],
        };
        fibs.push(next);
    }
    fibs
}

/// F(j) with F(0) = F(1) = 1.
pub fn fibonacci(j: usize) -> BigInt {
    fibonacci_sequence(j + 1)
        .pop()
        .expect("sequence is non-empty")
}

/// B(k, n), computed by dynamic programming with two rows kept at a time.
///
/// The table is symmetric, so the row axis is chosen along the larger
/// index and each row has only min(k, n) + 1 cells. Cost is O(k·n)
/// big-integer additions, memory O(min(k, n)).
pub fn binomiacci(k: usize, n: usize) -> BigInt {
    let (rows, cols) = if k >= n { (k, n) } else { (n, k) };
    let fibs = fibonacci_sequence(rows + 1);
    let mut row: Vec<BigInt> = fibs[..=cols].to_vec();
    for boundary in &fibs[1..=rows] {
        let mut next = Vec::with_capacity(cols + 1);
        next.push(boundary.clone());
        for j in 1..=cols {
            let cell = &next[j - 1] + &row[j];
            next.push(cell);
        }
        row = next;
    }
    row[cols].clone()
}

/// The central Binomiacci number B(n, n).
pub fn central(n: usize) -> BigInt {
    binomiacci(n, n)
}

/// Row m of the Binomiacci triangle: [B(k, m-k) for k = 0..=m].
///
/// Palindromic, since B(k, n) = B(n, k). Walks the table rows keeping only
/// the previous one, harvesting the anti-diagonal cell as it goes.
pub fn triangle_row(m: usize) -> Vec<BigInt> {
    let fibs = fibonacci_sequence(m + 1);
    let mut out = Vec::with_capacity(m + 1);
    let mut prev = fibs.clone();
    out.push(prev[m].clone());
    for (k, boundary) in fibs.iter().enumerate().skip(1) {
        let width = m - k;
        let mut row = Vec::with_capacity(width + 1);
        row.push(boundary.clone());
        for n in 1..=width {
            let cell = &row[n - 1] + &prev[n];
            row.push(cell);
        }
        out.push(row[width].clone());
        prev = row;
    }
    out
}

/// A fully populated (max_k+1) × (max_n+1) Binomiacci table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomiacciTable {
    cells: Vec<Vec<BigInt>>,
}

impl BinomiacciTable {
    pub fn max_k(&self) -> usize {
        self.cells.len() - 1
    }

    pub fn max_n(&self) -> usize {
        self.cells[0].len() - 1
    }

    pub fn cell(&self, k: usize, n: usize) -> &BigInt {
        &self.cells[k][n]
    }

    pub fn row(&self, k: usize) -> &[BigInt] {
        &self.cells[k]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        self.cells.iter().map(|r| r.as_slice())
    }

    /// The diagonal B(0,0), B(1,1), ... up to min(max_k, max_n).
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..=self.max_k().min(self.max_n()))
            .map(|i| self.cells[i][i].clone())
            .collect()
    }
}

/// Builds the full table row-major from the recurrence.
pub fn table(max_k: usize, max_n: usize) -> BinomiacciTable {
    let fibs = fibonacci_sequence(max_k.max(max_n) + 1);
    let mut cells: Vec<Vec<BigInt>> = Vec::with_capacity(max_k + 1);
    cells.push(fibs[..=max_n].to_vec());
    for k in 1..=max_k {
        let mut row = Vec::with_capacity(max_n + 1);
        row.push(fibs[k].clone());
        for n in 1..=max_n {
            let cell = &row[n - 1] + &cells[k - 1][n];
            row.push(cell);
        }
        cells.push(row);
    }
    BinomiacciTable { cells }
}
