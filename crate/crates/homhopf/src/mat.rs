//! Exact linear maps between based vector spaces.
//!
//! A [`LinMap`] sends the fixed basis of a `domain_dim`-dimensional space into
//! a `codomain_dim`-dimensional space. Columns are stored sparsely (sorted row
//! indices, no explicit zeros) so that large tensor-product composites stay
//! cheap, but the semantics are those of a dense matrix: `get` is total and
//! equality is entrywise.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::{render_scalar, Scalar};

/// Exact linear map, `codomain_dim x domain_dim`.
#[derive(Clone, PartialEq, Eq)]
pub struct LinMap {
    rows: usize,
    cols: usize,
    /// `columns[c]` lists `(row, value)` with strictly increasing rows and
    /// nonzero values.
    columns: Vec<Vec<(usize, Scalar)>>,
}

impl LinMap {
    pub fn zero(codomain_dim: usize, domain_dim: usize) -> Self {
        LinMap {
            rows: codomain_dim,
            cols: domain_dim,
            columns: vec![Vec::new(); domain_dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = LinMap::zero(dim, dim);
        for i in 0..dim {
            m.columns[i].push((i, crate::scalar::one()));
        }
        m
    }

    /// Builds from an entry function `f(row, col)`.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut m = LinMap::zero(rows, cols);
        for c in 0..cols {
            for r in 0..rows {
                let v = f(r, c);
                if !v.is_zero() {
                    m.columns[c].push((r, v));
                }
            }
        }
        m
    }

    /// Builds from a row-major dense list of entries.
    pub fn from_rows(rows: usize, cols: usize, entries: &[Scalar]) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count mismatch");
        LinMap::from_fn(rows, cols, |r, c| entries[r * cols + c].clone())
    }

    /// Builds a map from sparse columns; entries may arrive unsorted and are
    /// normalized (sorted, zero-pruned, duplicates summed).
    pub fn from_sparse_columns(
        rows: usize,
        cols: usize,
        mut col: impl FnMut(usize) -> Vec<(usize, Scalar)>,
    ) -> Self {
        let mut m = LinMap::zero(rows, cols);
        for c in 0..cols {
            let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
            for (r, v) in col(c) {
                assert!(r < rows, "row index out of range");
                let e = acc.entry(r).or_insert_with(crate::scalar::zero);
                *e += v;
            }
            m.columns[c] = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        }
        m
    }

    /// Builds a map column by column: `col(c)` is the image of basis vector `c`.
    pub fn from_columns(rows: usize, cols: usize, mut col: impl FnMut(usize) -> Vec<Scalar>) -> Self {
        let mut m = LinMap::zero(rows, cols);
        for c in 0..cols {
            let v = col(c);
            assert_eq!(v.len(), rows, "column length mismatch");
            for (r, x) in v.into_iter().enumerate() {
                if !x.is_zero() {
                    m.columns[c].push((r, x));
                }
            }
        }
        m
    }

    pub fn codomain_dim(&self) -> usize {
        self.rows
    }

    pub fn domain_dim(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> Scalar {
        assert!(row < self.rows && col < self.cols, "index out of range");
        match self.columns[col].binary_search_by_key(&row, |(r, _)| *r) {
            Ok(i) => self.columns[col][i].1.clone(),
            Err(_) => crate::scalar::zero(),
        }
    }

    pub fn set(&mut self, row: usize, col: usize, value: Scalar) {
        assert!(row < self.rows && col < self.cols, "index out of range");
        let column = &mut self.columns[col];
        match column.binary_search_by_key(&row, |(r, _)| *r) {
            Ok(i) => {
                if value.is_zero() {
                    column.remove(i);
                } else {
                    column[i].1 = value;
                }
            }
            Err(i) => {
                if !value.is_zero() {
                    column.insert(i, (row, value));
                }
            }
        }
    }

    pub fn sparse_column(&self, col: usize) -> &[(usize, Scalar)] {
        &self.columns[col]
    }

    pub fn column(&self, col: usize) -> Vec<Scalar> {
        let mut out = vec![crate::scalar::zero(); self.rows];
        for (r, v) in &self.columns[col] {
            out[*r] = v.clone();
        }
        out
    }

    pub fn iter_entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, v)| (*r, c, v)))
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == LinMap::identity(self.rows)
    }

    pub fn is_zero_map(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    /// Applies the map to a dense coefficient vector.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let mut out = vec![crate::scalar::zero(); self.rows];
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, a) in &self.columns[c] {
                out[*r] += a * x;
            }
        }
        out
    }

    /// Composition `self . rhs` (apply `rhs` first).
    pub fn compose(&self, rhs: &LinMap) -> LinMap {
        assert_eq!(
            self.cols, rhs.rows,
            "composition dimension mismatch: {}x{} . {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        let mut out = LinMap::zero(self.rows, rhs.cols);
        for (c, rhs_col) in rhs.columns.iter().enumerate() {
            let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
            for (k, x) in rhs_col {
                for (r, a) in &self.columns[*k] {
                    let e = acc.entry(*r).or_insert_with(crate::scalar::zero);
                    *e += a * x;
                }
            }
            out.columns[c] = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        }
        out
    }

    pub fn add(&self, rhs: &LinMap) -> LinMap {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols, "shape mismatch");
        let mut out = LinMap::zero(self.rows, self.cols);
        for c in 0..self.cols {
            let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
            for (r, v) in self.columns[c].iter().chain(rhs.columns[c].iter()) {
                let e = acc.entry(*r).or_insert_with(crate::scalar::zero);
                *e += v;
            }
            out.columns[c] = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        }
        out
    }

    pub fn sub(&self, rhs: &LinMap) -> LinMap {
        self.add(&rhs.scale(&crate::scalar::int(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> LinMap {
        if s.is_zero() {
            return LinMap::zero(self.rows, self.cols);
        }
        let mut out = self.clone();
        for col in &mut out.columns {
            for (_, v) in col.iter_mut() {
                *v *= s;
            }
        }
        out
    }

    /// Kronecker product with row-major (left factor slow) index flattening:
    /// `(f (x) g)[(a,b),(i,j)] = f[a,i] * g[b,j]` at row `a*g.rows + b`,
    /// column `i*g.cols + j`.
    pub fn kronecker(&self, rhs: &LinMap) -> LinMap {
        let mut out = LinMap::zero(self.rows * rhs.rows, self.cols * rhs.cols);
        for (ci, lcol) in self.columns.iter().enumerate() {
            for (cj, rcol) in rhs.columns.iter().enumerate() {
                let c = ci * rhs.cols + cj;
                let column = &mut out.columns[c];
                for (ri, a) in lcol {
                    for (rj, b) in rcol {
                        column.push((ri * rhs.rows + rj, a * b));
                    }
                }
                column.sort_by_key(|(r, _)| *r);
            }
        }
        out
    }

    /// Transpose; realizes precomposition on functionals.
    pub fn transpose(&self) -> LinMap {
        let mut cols: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); self.rows];
        for (r, c, v) in self.iter_entries() {
            cols[r].push((c, v.clone()));
        }
        for col in &mut cols {
            col.sort_by_key(|(r, _)| *r);
        }
        LinMap {
            rows: self.cols,
            cols: self.rows,
            columns: cols,
        }
    }

    /// Exact inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<LinMap> {
        if self.rows != self.cols {
            return Err(Error::DimMismatch(format!(
                "cannot invert a {}x{} map",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut a: Vec<Vec<Scalar>> = (0..n).map(|r| (0..n).map(|c| self.get(r, c)).collect()).collect();
        let mut inv: Vec<Vec<Scalar>> = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| if r == c { crate::scalar::one() } else { crate::scalar::zero() })
                    .collect()
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero()).ok_or_else(|| {
                Error::Singular(format!("column {col} has no pivot"))
            })?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col].clone();
            for c in 0..n {
                a[col][c] /= &p;
                inv[col][c] /= &p;
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let factor = a[r][col].clone();
                    for c in 0..n {
                        let t = &a[col][c] * &factor;
                        a[r][c] -= t;
                        let t = &inv[col][c] * &factor;
                        inv[r][c] -= t;
                    }
                }
            }
        }
        Ok(LinMap::from_fn(n, n, |r, c| inv[r][c].clone()))
    }

    /// A nonzero kernel vector, if one exists (witness of non-invertibility).
    #[allow(clippy::needless_range_loop)]
    pub fn kernel_vector(&self) -> Option<Vec<Scalar>> {
        let mut a: Vec<Vec<Scalar>> = (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c)).collect())
            .collect();
        let n = self.cols;
        let mut pivot_of_col: Vec<Option<usize>> = vec![None; n];
        let mut row = 0;
        for col in 0..n {
            if let Some(p) = (row..self.rows).find(|&r| !a[r][col].is_zero()) {
                a.swap(row, p);
                let pv = a[row][col].clone();
                for x in a[row].iter_mut() {
                    *x /= &pv;
                }
                for r in 0..self.rows {
                    if r != row && !a[r][col].is_zero() {
                        let f = a[r][col].clone();
                        for c in 0..n {
                            let t = &a[row][c] * &f;
                            a[r][c] -= t;
                        }
                    }
                }
                pivot_of_col[col] = Some(row);
                row += 1;
            }
        }
        let free = (0..n).find(|&c| pivot_of_col[c].is_none())?;
        let mut v = vec![crate::scalar::zero(); n];
        v[free] = crate::scalar::one();
        for c in 0..n {
            if let Some(r) = pivot_of_col[c] {
                v[c] = -a[r][free].clone();
            }
        }
        Some(v)
    }

    /// `(f (x) g) . t` computed columnwise without materializing the
    /// Kronecker product of `f` and `g`.
    pub fn kron_compose(f: &LinMap, g: &LinMap, t: &LinMap) -> LinMap {
        assert_eq!(t.rows, f.cols * g.cols, "inner dimension mismatch");
        let rows = f.rows * g.rows;
        LinMap::from_sparse_columns(rows, t.cols, |c| {
            let mut out = Vec::new();
            for (r, v) in &t.columns[c] {
                let (p, q) = (r / g.cols, r % g.cols);
                for (rf, vf) in &f.columns[p] {
                    for (rg, vg) in &g.columns[q] {
                        out.push((rf * g.rows + rg, v * vf * vg));
                    }
                }
            }
            out
        })
    }

    /// Integer power; negative exponents require invertibility.
    pub fn pow(&self, k: i64) -> Result<LinMap> {
        assert_eq!(self.rows, self.cols, "powers need a square map");
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut out = LinMap::identity(self.rows);
        for _ in 0..k.unsigned_abs() {
            out = base.compose(&out);
        }
        Ok(out)
    }
}

impl fmt::Debug for LinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LinMap {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| render_scalar(&self.get(r, c))).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Transpose acting on functionals by precomposition: `dualize(f)(p) = p . f`.
pub fn dualize(f: &LinMap) -> LinMap {
    f.transpose()
}

/// Evaluation of a functional against a vector in matching bases.
pub fn pair(p: &[Scalar], v: &[Scalar]) -> Result<Scalar> {
    if p.len() != v.len() {
        return Err(Error::DimMismatch(format!(
            "pairing a {}-functional with a {}-vector",
            p.len(),
            v.len()
        )));
    }
    let mut acc = crate::scalar::zero();
    for (a, b) in p.iter().zip(v) {
        acc += a * b;
    }
    Ok(acc)
}
