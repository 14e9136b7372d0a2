//! Incremental sparse Gauss-Jordan elimination.
//!
//! Rows are kept fully reduced: each stored row has a leading 1 in its pivot
//! column and zeros in every other pivot column. Sorting the rows by pivot
//! therefore yields the reduced row-echelon form of everything inserted so far.

use num_traits::{One, Zero};

use super::scalar::{Scalar, Vector};

pub type SparseRow = Vec<(usize, Scalar)>;

#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<SparseRow>,
    /// `pivot_row[c]` is the row whose pivot is column `c`.
    pivot_row: Vec<Option<usize>>,
}

pub fn to_sparse(v: &[Scalar]) -> SparseRow {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn to_dense(row: &SparseRow, n: usize) -> Vector {
    let mut v = vec![Scalar::zero(); n];
    for (i, x) in row {
        v[*i] = x.clone();
    }
    v
}

/// `a - c * b` on sorted sparse rows.
fn sub_scaled(a: &SparseRow, c: &Scalar, b: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ka = a.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let kb = b.get(j).map(|e| e.0).unwrap_or(usize::MAX);
        if ka < kb {
            out.push(a[i].clone());
            i += 1;
        } else if kb < ka {
            out.push((kb, -(c * &b[j].1)));
            j += 1;
        } else {
            let v = &a[i].1 - c * &b[j].1;
            if !v.is_zero() {
                out.push((ka, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            rows: Vec::new(),
            pivot_row: vec![None; ncols],
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    /// Reduces `row` against the stored rows; the residual is zero iff the
    /// row lies in the current row space.
    pub fn reduce(&self, row: &SparseRow) -> SparseRow {
        let mut r = row.clone();
        let hits: Vec<(usize, Scalar)> = row
            .iter()
            .filter_map(|(c, v)| self.pivot_row[*c].map(|p| (p, v.clone())))
            .collect();
        for (p, v) in hits {
            r = sub_scaled(&r, &v, &self.rows[p]);
        }
        r
    }

    /// Inserts a row; returns true when it enlarged the row space.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let mut r = self.reduce(&row);
        if r.is_empty() {
            return false;
        }
        let (pivot, lead) = r[0].clone();
        if !lead.is_one() {
            let inv = lead.recip();
            for e in r.iter_mut() {
                e.1 = &e.1 * &inv;
            }
        }
        for existing in self.rows.iter_mut() {
            if let Ok(pos) = existing.binary_search_by_key(&pivot, |e| e.0) {
                let c = existing[pos].1.clone();
                *existing = sub_scaled(existing, &c, &r);
            }
        }
        self.pivot_row[pivot] = Some(self.rows.len());
        self.rows.push(r);
        true
    }

    pub fn insert_dense(&mut self, v: &[Scalar]) -> bool {
        self.insert(to_sparse(v))
    }

    pub fn contains_dense(&self, v: &[Scalar]) -> bool {
        self.reduce(&to_sparse(v)).is_empty()
    }

    pub fn pivots(&self) -> Vec<usize> {
        (0..self.ncols).filter(|c| self.pivot_row[*c].is_some()).collect()
    }

    /// Rows of the reduced row-echelon form, ordered by pivot.
    pub fn rref_rows(&self) -> Vec<Vector> {
        self.pivots()
            .into_iter()
            .map(|c| to_dense(&self.rows[self.pivot_row[c].unwrap()], self.ncols))
            .collect()
    }

    /// Basis of `{x : row . x = 0 for every stored row}`, one vector per free column.
    pub fn null_space(&self) -> Vec<Vector> {
        let pivots = self.pivots();
        let mut out = Vec::new();
        for free in 0..self.ncols {
            if self.pivot_row[free].is_some() {
                continue;
            }
            let mut v = vec![Scalar::zero(); self.ncols];
            v[free] = Scalar::one();
            for &p in &pivots {
                let row = self.pivot_row[p].unwrap();
                if let Ok(pos) = self.rows[row].binary_search_by_key(&free, |e| e.0) {
                    v[p] = -self.rows[row][pos].1.clone();
                }
            }
            out.push(v);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::int;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|x| int(*x)).collect()
    }

    #[test]
    fn rank_and_membership() {
        let mut e = Echelon::new(3);
        assert!(e.insert_dense(&v(&[2, 4, 0])));
        assert!(!e.insert_dense(&v(&[1, 2, 0])));
        assert!(e.insert_dense(&v(&[0, 1, 1])));
        assert_eq!(e.rank(), 2);
        assert!(e.contains_dense(&v(&[1, 3, 1])));
        assert!(!e.contains_dense(&v(&[0, 0, 1])));
        assert_eq!(e.rref_rows(), vec![v(&[1, 0, -2]), v(&[0, 1, 1])]);
    }

    #[test]
    fn null_space_is_annihilated() {
        let mut e = Echelon::new(4);
        e.insert_dense(&v(&[1, 1, 0, 2]));
        e.insert_dense(&v(&[0, 3, 1, -1]));
        let ns = e.null_space();
        assert_eq!(ns.len(), 2);
        for x in ns {
            assert!(crate::linalg::scalar::dot(&v(&[1, 1, 0, 2]), &x).is_zero());
            assert!(crate::linalg::scalar::dot(&v(&[0, 3, 1, -1]), &x).is_zero());
        }
    }
}
