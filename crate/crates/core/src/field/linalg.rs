//! Dense vectors and matrices over a finite field, with row reduction.

use super::FieldSpec;
use std::fmt;

/// A vector over GF(q); entries are element reprs.
#[derive(Clone, PartialEq, Eq)]
pub struct FqVector {
    spec: FieldSpec,
    entries: Vec<u64>,
}

impl FqVector {
    pub fn zeros(spec: FieldSpec, n: usize) -> Self {
        FqVector {
            spec,
            entries: vec![0; n],
        }
    }

    pub fn from_reprs(spec: FieldSpec, entries: Vec<u64>) -> Self {
        assert!(
            entries.iter().all(|&x| x < spec.q()),
            "entry out of range for {spec}"
        );
        FqVector { spec, entries }
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn reprs(&self) -> &[u64] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    /// Number of nonzero entries.
    pub fn weight(&self) -> usize {
        self.entries.iter().filter(|&&x| x != 0).count()
    }

    pub fn add(&self, rhs: &FqVector) -> FqVector {
        assert!(self.spec == rhs.spec && self.len() == rhs.len());
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(&a, &b)| self.spec.add(a, b))
            .collect();
        FqVector {
            spec: self.spec.clone(),
            entries,
        }
    }

    pub fn sub(&self, rhs: &FqVector) -> FqVector {
        assert!(self.spec == rhs.spec && self.len() == rhs.len());
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(&a, &b)| self.spec.sub(a, b))
            .collect();
        FqVector {
            spec: self.spec.clone(),
            entries,
        }
    }

    pub fn scale(&self, c: u64) -> FqVector {
        let entries = self.entries.iter().map(|&a| self.spec.mul(c, a)).collect();
        FqVector {
            spec: self.spec.clone(),
            entries,
        }
    }
}

impl fmt::Debug for FqVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?})", self.entries)
    }
}

/// A dense row-major matrix over GF(q).
#[derive(Clone, PartialEq, Eq)]
pub struct FqMatrix {
    spec: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl FqMatrix {
    pub fn zeros(spec: FieldSpec, rows: usize, cols: usize) -> Self {
        FqMatrix {
            spec,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(spec: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(spec, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(spec: FieldSpec, rows: &[Vec<u64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert!(r.iter().all(|&x| x < spec.q()), "entry out of range");
            data.extend_from_slice(r);
        }
        FqMatrix {
            spec,
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn from_vectors(rows: &[FqVector]) -> Self {
        assert!(!rows.is_empty());
        let spec = rows[0].spec().clone();
        let reprs: Vec<Vec<u64>> = rows
            .iter()
            .map(|r| {
                assert!(*r.spec() == spec);
                r.reprs().to_vec()
            })
            .collect();
        Self::from_rows(spec, &reprs)
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        debug_assert!(v < self.spec.q());
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vector(&self, r: usize) -> FqVector {
        FqVector::from_reprs(self.spec.clone(), self.row(r).to_vec())
    }

    pub fn col_vector(&self, c: usize) -> FqVector {
        let entries = (0..self.rows).map(|r| self.at(r, c)).collect();
        FqVector::from_reprs(self.spec.clone(), entries)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn push_row(&mut self, row: &[u64]) {
        assert_eq!(row.len(), self.cols);
        self.data.extend_from_slice(row);
        self.rows += 1;
    }

    pub fn transpose(&self) -> FqMatrix {
        let mut out = FqMatrix::zeros(self.spec.clone(), self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.at(r, c));
            }
        }
        out
    }

    pub fn mat_mul(&self, rhs: &FqMatrix) -> FqMatrix {
        assert!(self.spec == rhs.spec);
        assert_eq!(self.cols, rhs.rows, "inner dimensions must agree");
        let mut out = FqMatrix::zeros(self.spec.clone(), self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.at(k, j);
                    if b != 0 {
                        let cur = out.at(i, j);
                        out.set(i, j, self.spec.add(cur, self.spec.mul(a, b)));
                    }
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn row_mul(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![0u64; self.cols];
        for (k, &c) in v.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for j in 0..self.cols {
                let b = self.at(k, j);
                if b != 0 {
                    out[j] = self.spec.add(out[j], self.spec.mul(c, b));
                }
            }
        }
        out
    }

    /// In-place reduced row echelon form. Returns (rank, pivot columns).
    pub fn rref_in_place(&mut self) -> (usize, Vec<usize>) {
        let spec = self.spec.clone();
        let mut pivots = Vec::new();
        let mut pr = 0; // next pivot row
        for pc in 0..self.cols {
            // find a pivot in column pc at or below row pr
            let Some(sel) = (pr..self.rows).find(|&r| self.at(r, pc) != 0) else {
                continue;
            };
            if sel != pr {
                for c in 0..self.cols {
                    self.data.swap(sel * self.cols + c, pr * self.cols + c);
                }
            }
            let inv = spec.inv(self.at(pr, pc)).unwrap();
            if inv != 1 {
                for c in pc..self.cols {
                    let v = self.at(pr, c);
                    self.set(pr, c, spec.mul(v, inv));
                }
            }
            for r in 0..self.rows {
                if r == pr {
                    continue;
                }
                let factor = self.at(r, pc);
                if factor == 0 {
                    continue;
                }
                for c in pc..self.cols {
                    let v = spec.sub(self.at(r, c), spec.mul(factor, self.at(pr, c)));
                    self.set(r, c, v);
                }
            }
            pivots.push(pc);
            pr += 1;
            if pr == self.rows {
                break;
            }
        }
        (pr, pivots)
    }

    /// Reduced row echelon form, rank, and pivot columns.
    pub fn rref(&self) -> (FqMatrix, usize, Vec<usize>) {
        let mut m = self.clone();
        let (rank, pivots) = m.rref_in_place();
        (m, rank, pivots)
    }

    /// RREF with zero rows removed; the canonical basis of the row space.
    pub fn row_basis(&self) -> FqMatrix {
        let (m, rank, _) = self.rref();
        let mut out = FqMatrix::zeros(self.spec.clone(), 0, self.cols);
        for r in 0..rank {
            out.push_row(m.row(r));
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Columns stacked into one vector: entry c*rows + r holds (r, c).
    pub fn flatten_columns(&self) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.rows * self.cols);
        for c in 0..self.cols {
            for r in 0..self.rows {
                out.push(self.at(r, c));
            }
        }
        out
    }

    /// Inverse of [`FqMatrix::flatten_columns`].
    pub fn from_flat_columns(spec: FieldSpec, rows: usize, cols: usize, flat: &[u64]) -> FqMatrix {
        assert_eq!(flat.len(), rows * cols);
        let mut m = FqMatrix::zeros(spec, rows, cols);
        for c in 0..cols {
            for r in 0..rows {
                m.set(r, c, flat[c * rows + r]);
            }
        }
        m
    }

    /// Solve x * self = target for a row-coefficient vector x; None if
    /// `target` is outside the row space. Free variables are set to zero.
    pub fn solve_row_combination(&self, target: &[u64]) -> Option<Vec<u64>> {
        assert_eq!(target.len(), self.cols);
        // augmented system: self^T * x^T = target^T
        let mut aug = FqMatrix::zeros(self.spec.clone(), self.cols, self.rows + 1);
        for r in 0..self.cols {
            for c in 0..self.rows {
                aug.set(r, c, self.at(c, r));
            }
            aug.set(r, self.rows, target[r]);
        }
        let (reduced, rank, pivots) = aug.rref();
        if pivots.contains(&self.rows) {
            return None; // pivot in the augmented column: inconsistent
        }
        let mut x = vec![0u64; self.rows];
        for (i, &pc) in pivots.iter().enumerate().take(rank) {
            x[pc] = reduced.at(i, self.rows);
        }
        Some(x)
    }

    /// A canonical (RREF) basis of the right null space, one basis vector
    /// per row. `self * v^T = 0` for every returned row v.
    pub fn kernel(&self) -> FqMatrix {
        let spec = self.spec.clone();
        let (r, rank, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = FqMatrix::zeros(spec.clone(), 0, self.cols);
        for &f in &free {
            let mut v = vec![0u64; self.cols];
            v[f] = 1;
            for (i, &pc) in pivots.iter().enumerate().take(rank) {
                v[pc] = spec.neg(r.at(i, f));
            }
            out.push_row(&v);
        }
        out.row_basis()
    }
}

impl fmt::Debug for FqMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FqMatrix {}x{} over {}", self.rows, self.cols, self.spec)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}
