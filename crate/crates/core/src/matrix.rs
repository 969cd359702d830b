//! Square matrices stored as sparse rows.
//!
//! Every matrix this crate builds is monomial or block-monomial, so rows
//! hold only their non-zero entries, sorted by column.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::cyclotomic::{CyclotomicNumber, Rational};

pub trait Entry: Clone + PartialEq + std::fmt::Debug {
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn is_zero(&self) -> bool;
}

impl Entry for Rational {
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

impl Entry for CyclotomicNumber {
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self.mul_ref(other)
    }
    fn is_zero(&self) -> bool {
        CyclotomicNumber::is_zero(self)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<T> {
    dim: usize,
    rows: Vec<Vec<(usize, T)>>,
}

pub type RationalMatrix = SparseMatrix<Rational>;
pub type CyclotomicMatrix = SparseMatrix<CyclotomicNumber>;

impl<T: Entry> SparseMatrix<T> {
    pub fn zero(dim: usize) -> Self {
        SparseMatrix { dim, rows: vec![Vec::new(); dim] }
    }

    pub fn identity(dim: usize, one: T) -> Self {
        SparseMatrix { dim, rows: (0..dim).map(|i| vec![(i, one.clone())]).collect() }
    }

    pub fn diagonal(entries: Vec<T>) -> Self {
        let dim = entries.len();
        let rows = entries
            .into_iter()
            .enumerate()
            .map(|(i, x)| if x.is_zero() { Vec::new() } else { vec![(i, x)] })
            .collect();
        SparseMatrix { dim, rows }
    }

    pub fn from_dense(dense: Vec<Vec<T>>) -> Self {
        let dim = dense.len();
        let rows = dense
            .into_iter()
            .map(|row| {
                assert_eq!(row.len(), dim, "matrix must be square");
                row.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect()
            })
            .collect();
        SparseMatrix { dim, rows }
    }

    /// Set entry `(i, j)`; zero values remove the entry.
    pub fn set(&mut self, i: usize, j: usize, value: T) {
        let row = &mut self.rows[i];
        match row.binary_search_by_key(&j, |(c, _)| *c) {
            Ok(pos) if value.is_zero() => {
                row.remove(pos);
            }
            Ok(pos) => row[pos].1 = value,
            Err(_) if value.is_zero() => {}
            Err(pos) => row.insert(pos, (j, value)),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&T> {
        let row = &self.rows[i];
        row.binary_search_by_key(&j, |(c, _)| *c).ok().map(|pos| &row[pos].1)
    }

    pub fn row(&self, i: usize) -> &[(usize, T)] {
        &self.rows[i]
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().map(move |(j, x)| (i, *j, x)))
    }

    pub fn nonzeros(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut acc: BTreeMap<usize, T> = BTreeMap::new();
                for (k, x) in row {
                    for (j, y) in &other.rows[*k] {
                        let v = x.mul(y);
                        match acc.get_mut(j) {
                            Some(cur) => *cur = cur.add(&v),
                            None => {
                                acc.insert(*j, v);
                            }
                        }
                    }
                }
                acc.into_iter().filter(|(_, x)| !x.is_zero()).collect()
            })
            .collect();
        SparseMatrix { dim: self.dim, rows }
    }

    pub fn pow(&self, e: &BigUint, one: &T) -> Self {
        let mut acc = Self::identity(self.dim, one.clone());
        let mut base = self.clone();
        let bits = e.bits();
        for k in 0..bits {
            if e.bit(k) {
                acc = acc.mul(&base);
            }
            if k + 1 < bits {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn pow_u64(&self, e: u64, one: &T) -> Self {
        self.pow(&BigUint::from(e), one)
    }

    pub fn trace(&self, zero: T) -> T {
        self.rows
            .iter()
            .enumerate()
            .filter_map(|(i, row)| row.binary_search_by_key(&i, |(c, _)| *c).ok().map(|pos| &row[pos].1))
            .fold(zero, |acc, x| acc.add(x))
    }

    /// `trace(self * other)` without forming the product.
    pub fn trace_of_product(&self, other: &Self, zero: T) -> T {
        let mut acc = zero;
        for (i, row) in self.rows.iter().enumerate() {
            for (k, x) in row {
                if let Some(y) = other.get(*k, i) {
                    acc = acc.add(&x.mul(y));
                }
            }
        }
        acc
    }

    pub fn is_identity(&self, one: &T) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(i, row)| row.len() == 1 && row[0].0 == i && row[0].1 == *one)
    }

    /// Entry-wise map, dropping entries that become zero.
    pub fn map<U: Entry>(&self, f: impl Fn(&T) -> U) -> SparseMatrix<U> {
        let rows = self
            .rows
            .iter()
            .map(|row| row.iter().map(|(j, x)| (*j, f(x))).filter(|(_, y)| !y.is_zero()).collect())
            .collect();
        SparseMatrix { dim: self.dim, rows }
    }

    /// Sub-block of size `size` starting at `(row, col)`.
    pub fn block(&self, row: usize, col: usize, size: usize) -> Self {
        let rows = (row..row + size)
            .map(|i| {
                self.rows[i]
                    .iter()
                    .filter(|(j, _)| *j >= col && *j < col + size)
                    .map(|(j, x)| (j - col, x.clone()))
                    .collect()
            })
            .collect();
        SparseMatrix { dim: size, rows }
    }

    /// Dense rows with `zero` filling the gaps.
    pub fn to_dense(&self, zero: &T) -> Vec<Vec<T>> {
        self.rows
            .iter()
            .map(|row| {
                let mut out = vec![zero.clone(); self.dim];
                for (j, x) in row {
                    out[*j] = x.clone();
                }
                out
            })
            .collect()
    }
}

impl RationalMatrix {
    pub fn is_integral(&self) -> bool {
        self.entries().all(|(_, _, x)| x.is_integer())
    }
}
