//! Exact rational linear algebra.
//!
//! Elimination runs fraction-free over the integers (Bareiss) after clearing
//! denominators row by row, and the result is normalised to the unique
//! reduced row-echelon form.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::pathalg::Rational;
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Build from row vectors, all of length `cols`.
    pub fn from_rows(rows: Vec<Vec<Rational>>, cols: usize) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged row");
            data.extend(row);
        }
        RationalMatrix { rows: n, cols, data }
    }

    /// Build from `(row, col, value)` triplets; repeated positions add up.
    pub fn from_triplets(rows: usize, cols: usize, entries: impl IntoIterator<Item = (usize, usize, Rational)>) -> Self {
        let mut m = Self::zeros(rows, cols);
        for (r, c, v) in entries {
            let slot = &mut m.data[r * cols + c];
            *slot += v;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    /// Reduced row-echelon form and its pivot columns.
    pub fn rref(&self) -> Echelon {
        let ints = self.integer_rows();
        let (ints, pivots) = bareiss(ints, self.cols);
        let r = pivots.len();
        let mut rows: Vec<Vec<Rational>> = ints
            .into_iter()
            .take(r)
            .map(|row| row.into_iter().map(Rational::from_integer).collect())
            .collect();
        for k in (0..r).rev() {
            let pc = pivots[k];
            let inv = Rational::one() / &rows[k][pc];
            for x in rows[k].iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
            let pivot_row = rows[k].clone();
            for row in rows.iter_mut().take(k) {
                let f = row[pc].clone();
                if f.is_zero() {
                    continue;
                }
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *x -= &f * p;
                    }
                }
            }
        }
        rows.resize(self.rows, vec![Rational::zero(); self.cols]);
        Echelon { matrix: RationalMatrix::from_rows(rows, self.cols), pivots }
    }

    pub fn rank(&self) -> usize {
        bareiss(self.integer_rows(), self.cols).1.len()
    }

    /// Basis of the right null space. Each vector sets one free variable to
    /// 1 (free variables in column order) and the others to 0.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let e = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &e.pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Rational::zero(); self.cols];
            v[f] = Rational::one();
            for (k, &p) in e.pivots.iter().enumerate() {
                v[p] = -e.matrix.get(k, f).clone();
            }
            basis.push(v);
        }
        basis
    }

    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|r| {
                let row = self.row(r);
                let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    pub matrix: RationalMatrix,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Fraction-free forward elimination. Returns the echelon rows (pivot rows
/// first) and pivot columns.
fn bareiss(mut m: Vec<Vec<BigInt>>, cols: usize) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let rows = m.len();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let (top, bottom) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = &pivot_row[c];
        for row in bottom.iter_mut() {
            let lead = std::mem::take(&mut row[c]);
            for j in c + 1..cols {
                let v = pivot * &row[j] - &lead * &pivot_row[j];
                row[j] = if prev.is_one() { v } else { v / &prev };
            }
        }
        prev = pivot.clone();
        pivots.push(c);
        r += 1;
    }
    (m, pivots)
}

/// A subspace of `ℚ^dim` held as its canonical reduced basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    dim: usize,
    basis: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(dim: usize) -> Self {
        Subspace { dim, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn span(vectors: &[Vec<Rational>], dim: usize) -> Self {
        if vectors.is_empty() {
            return Self::zero(dim);
        }
        let e = RationalMatrix::from_rows(vectors.to_vec(), dim).rref();
        let r = e.rank();
        let basis = (0..r).map(|k| e.matrix.row(k).to_vec()).collect();
        Subspace { dim, basis, pivots: e.pivots }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    /// Remainder of `v` after clearing every pivot coordinate.
    pub fn residue(&self, v: &[Rational]) -> Vec<Rational> {
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let f = out[p].clone();
            if f.is_zero() {
                continue;
            }
            for (x, b) in out.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x -= &f * b;
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.residue(v).iter().all(Zero::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Subspace::span(&all, self.dim)
    }
}

/// `dim span(space) − dim span(sub)`, after checking `sub ⊆ span(space)`.
pub fn quotient_dim(space: &[Vec<Rational>], sub: &[Vec<Rational>], dim: usize) -> Result<usize> {
    let big = Subspace::span(space, dim);
    let small = Subspace::span(sub, dim);
    if !big.contains_subspace(&small) {
        return Err(Error::NotASubspace);
    }
    Ok(big.dim() - small.dim())
}

/// Rank of a family of vectors.
pub fn rank_of(vectors: &[Vec<Rational>], dim: usize) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    RationalMatrix::from_rows(vectors.to_vec(), dim).rank()
}

/// Rank of sparse rows `(column, value)`, eliminating exactly as rows
/// arrive. Suited to tall, very sparse systems.
pub fn sparse_rank(rows: impl IntoIterator<Item = Vec<(usize, Rational)>>) -> usize {
    let mut pivots: HashMap<usize, BTreeMap<usize, Rational>> = HashMap::new();
    for row in rows {
        let mut r: BTreeMap<usize, Rational> = BTreeMap::new();
        for (c, v) in row {
            *r.entry(c).or_insert_with(Rational::zero) += v;
        }
        r.retain(|_, v| !v.is_zero());
        // clear every pivot column present, lowest first
        let mut from = 0;
        while let Some((&c, _)) = r.range(from..).find(|(c, _)| pivots.contains_key(c)) {
            let f = r.remove(&c).unwrap();
            for (k, v) in pivots[&c].iter().skip(1) {
                let e = r.entry(*k).or_insert_with(Rational::zero);
                *e -= &f * v;
                if e.is_zero() {
                    r.remove(k);
                }
            }
            from = c + 1;
        }
        if let Some((&c, lead)) = r.iter().next() {
            let inv = Rational::one() / lead;
            let r: BTreeMap<usize, Rational> = r.into_iter().map(|(k, v)| (k, v * &inv)).collect();
            pivots.insert(c, r);
        }
    }
    pivots.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pathalg::{frac, rat};

    fn m(rows: &[&[i64]]) -> RationalMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        RationalMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect(), cols)
    }

    #[test]
    fn ranks() {
        assert_eq!(RationalMatrix::identity(3).rank(), 3);
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rank(), 1);
        let p = RationalMatrix::from_rows(vec![vec![frac(1, 2), frac(1, 3)], vec![frac(1, 4), frac(1, 6)]], 2);
        assert_eq!(p.rank(), 1);
    }

    #[test]
    fn kernels() {
        assert_eq!(RationalMatrix::zeros(2, 3).kernel_basis().len(), 3);
        assert_eq!(m(&[&[1, 1]]).kernel_basis(), vec![vec![rat(-1), rat(1)]]);
        assert!(RationalMatrix::identity(4).kernel_basis().is_empty());
    }

    #[test]
    fn rref_of_skipped_column() {
        let a = m(&[&[0, 2, 4, 1], &[0, 1, 2, 3], &[1, 0, 0, 0]]);
        let e = a.rref();
        assert_eq!(e.pivots, vec![0, 1, 3]);
        assert_eq!(e.matrix.row(1), &[rat(0), rat(1), rat(2), rat(0)][..]);
    }

    #[test]
    fn quotients() {
        let e = vec![vec![rat(1), rat(0)], vec![rat(0), rat(1)]];
        assert_eq!(quotient_dim(&e, &[vec![rat(1), rat(1)]], 2), Ok(1));
        assert_eq!(quotient_dim(&e, &e, 2), Ok(0));
        assert_eq!(quotient_dim(&e, &[], 2), Ok(2));
        assert_eq!(
            quotient_dim(&[vec![rat(1), rat(0)]], &[vec![rat(0), rat(1)]], 2),
            Err(Error::NotASubspace)
        );
    }

    #[test]
    fn sparse_rank_matches_dense() {
        let a = m(&[&[0, 2, 4, 1], &[0, 1, 2, 3], &[1, 0, 0, 0], &[1, 2, 4, 1], &[0, 0, 0, 5]]);
        let rows = a.to_rows().into_iter().map(|r| r.into_iter().enumerate().filter(|(_, v)| !v.is_zero()).collect());
        assert_eq!(sparse_rank(rows), a.rank());
    }
}
