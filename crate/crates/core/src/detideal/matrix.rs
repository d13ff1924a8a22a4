use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::exact_division;
use crate::poly::{same_ring, Polynomial, Ring, RingExt, VarBlock};

/// A dense matrix of polynomials, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: Arc<Ring>,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

impl PolyMatrix {
    pub fn new(ring: &Arc<Ring>, rows: usize, cols: usize, entries: Vec<Polynomial>) -> Result<PolyMatrix> {
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if entries.iter().any(|e| !same_ring(e.ring(), ring)) {
            return Err(Error::RingMismatch);
        }
        Ok(PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(ring: &Arc<Ring>, rows: usize, cols: usize) -> PolyMatrix {
        PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries: vec![ring.zero(); rows * cols],
        }
    }

    pub fn identity(ring: &Arc<Ring>, n: usize) -> PolyMatrix {
        let mut m = PolyMatrix::zeros(ring, n, n);
        for i in 0..n {
            m.set(i, i, ring.one());
        }
        m
    }

    /// Parses a rectangular array of polynomial strings.
    pub fn from_strings<S: AsRef<str>>(ring: &Arc<Ring>, rows: &[Vec<S>]) -> Result<PolyMatrix> {
        let cols = rows.first().map(|r| r.len()).unwrap_or(0);
        let mut entries = Vec::new();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Shape(format!(
                    "row {} has {} entries, expected {cols}",
                    i + 1,
                    row.len()
                )));
            }
            for s in row {
                entries.push(ring.parse(s.as_ref())?);
            }
        }
        PolyMatrix::new(ring, rows.len(), cols, entries)
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Polynomial) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        PolyMatrix {
            ring: self.ring.clone(),
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = PolyMatrix::zeros(&self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = self.ring.zero();
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                entries.push(self.get(i, j).clone());
            }
        }
        PolyMatrix {
            ring: self.ring.clone(),
            rows: rows.len(),
            cols: cols.len(),
            entries,
        }
    }

    /// True if no entry involves a form variable or the Rees variable.
    pub fn entries_in_base_ring(&self) -> bool {
        let outside: Vec<usize> = (0..self.ring.nvars())
            .filter(|&i| self.ring.blocks()[i] != VarBlock::Base)
            .collect();
        self.entries
            .iter()
            .all(|e| outside.iter().all(|&v| !e.involves(v)))
    }

    /// Checks the standing assumptions on a matrix `M`: `1 <= m <= n` and
    /// entries in the base ring.
    pub fn ensure_standard(&self) -> Result<()> {
        if self.rows == 0 || self.rows > self.cols {
            return Err(Error::Shape(format!(
                "expected an m x n matrix with 1 <= m <= n, got {}x{}",
                self.rows, self.cols
            )));
        }
        if !self.entries_in_base_ring() {
            return Err(Error::EntryNotInBaseRing);
        }
        Ok(())
    }

    /// Fraction-free (Bareiss) forward elimination. Returns the rank and the
    /// last pivot, which equals `±det` for a square matrix of full rank.
    fn bareiss(&self) -> (usize, Option<Polynomial>, bool) {
        let mut a: Vec<Vec<Polynomial>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut prev = self.ring.one();
        let mut row = 0;
        let mut swapped_odd = false;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows)
                .filter(|&r| !a[r][col].is_zero())
                .min_by_key(|&r| (a[r][col].len(), r))
            else {
                continue;
            };
            if p != row {
                a.swap(p, row);
                swapped_odd = !swapped_odd;
            }
            for i in row + 1..self.rows {
                for j in col + 1..self.cols {
                    let num = &(&a[row][col] * &a[i][j]) - &(&a[i][col] * &a[row][j]);
                    a[i][j] = exact_division(&num, &prev).expect("Bareiss division is exact");
                }
                a[i][col] = self.ring.zero();
            }
            prev = a[row][col].clone();
            row += 1;
        }
        (row, Some(prev), swapped_odd)
    }

    /// Rank over the fraction field.
    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        self.bareiss().0
    }

    pub fn determinant(&self) -> Result<Polynomial> {
        if self.rows != self.cols {
            return Err(Error::Shape(format!(
                "determinant of a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        Ok(match self.rows {
            0 => self.ring.one(),
            1 => self.get(0, 0).clone(),
            2 => &(self.get(0, 0) * self.get(1, 1)) - &(self.get(0, 1) * self.get(1, 0)),
            n => {
                let (rank, last, odd) = self.bareiss();
                if rank < n {
                    self.ring.zero()
                } else {
                    let d = last.unwrap();
                    if odd {
                        -&d
                    } else {
                        d
                    }
                }
            }
        })
    }

    /// All `k x k` minors, rows-subset major, both in lexicographic order.
    pub fn minors(&self, k: usize) -> Vec<Polynomial> {
        let row_sets = combinations(self.rows, k);
        let col_sets = combinations(self.cols, k);
        let mut out = Vec::with_capacity(row_sets.len() * col_sets.len());
        for rs in &row_sets {
            for cs in &col_sets {
                out.push(self.submatrix(rs, cs).determinant().unwrap());
            }
        }
        out
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        let width = cells.iter().map(|c| c.len()).max().unwrap_or(1);
        for i in 0..self.rows {
            f.write_str("[ ")?;
            for j in 0..self.cols {
                write!(f, "{:>width$} ", cells[i * self.cols + j])?;
            }
            f.write_str("]\n")?;
        }
        Ok(())
    }
}
