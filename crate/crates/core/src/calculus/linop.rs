use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::field::Space;
use crate::error::{Error, Result};
use crate::rational::{int, zero, Rational};

/// A sparse integer matrix `C(domain) → C(codomain)` in compressed row form.
///
/// Rows index the codomain, columns the domain. Zero entries are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinOp {
    domain: (Space, usize),
    codomain: (Space, usize),
    row_ptr: Vec<usize>,
    cols: Vec<usize>,
    vals: Vec<i64>,
}

impl LinOp {
    /// Builds an operator from `(row, col, value)` triplets; repeated
    /// positions are summed.
    pub fn from_triplets(
        domain: (Space, usize),
        codomain: (Space, usize),
        triplets: impl IntoIterator<Item = (usize, usize, i64)>,
    ) -> Result<Self> {
        let mut acc = BTreeMap::new();
        for (r, c, v) in triplets {
            if r >= codomain.1 {
                return Err(Error::VertexOutOfRange { vertex: r, n: codomain.1 });
            }
            if c >= domain.1 {
                return Err(Error::VertexOutOfRange { vertex: c, n: domain.1 });
            }
            *acc.entry((r, c)).or_insert(0i64) += v;
        }
        let mut row_ptr = vec![0; codomain.1 + 1];
        let mut cols = Vec::with_capacity(acc.len());
        let mut vals = Vec::with_capacity(acc.len());
        for ((r, c), v) in acc {
            if v != 0 {
                row_ptr[r + 1] += 1;
                cols.push(c);
                vals.push(v);
            }
        }
        for r in 0..codomain.1 {
            row_ptr[r + 1] += row_ptr[r];
        }
        Ok(Self { domain, codomain, row_ptr, cols, vals })
    }

    pub fn identity(space: Space, n: usize) -> Self {
        Self::diagonal(space, &vec![1; n])
    }

    pub fn diagonal(space: Space, d: &[i64]) -> Self {
        let n = d.len();
        Self::from_triplets((space, n), (space, n), d.iter().enumerate().map(|(i, &v)| (i, i, v)))
            .expect("diagonal in range")
    }

    pub fn zero(domain: (Space, usize), codomain: (Space, usize)) -> Self {
        Self::from_triplets(domain, codomain, []).expect("empty")
    }

    pub fn domain(&self) -> (Space, usize) {
        self.domain
    }

    pub fn codomain(&self) -> (Space, usize) {
        self.codomain
    }

    pub fn nnz(&self) -> usize {
        self.vals.len()
    }

    /// Nonzero entries of row `r` as `(col, value)`.
    pub fn row(&self, r: usize) -> impl Iterator<Item = (usize, i64)> + '_ {
        let span = self.row_ptr[r]..self.row_ptr[r + 1];
        self.cols[span.clone()].iter().copied().zip(self.vals[span].iter().copied())
    }

    /// All nonzero entries, sorted by `(row, col)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        (0..self.codomain.1).flat_map(move |r| self.row(r).map(move |(c, v)| (r, c, v)))
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        let span = self.row_ptr[r]..self.row_ptr[r + 1];
        match self.cols[span.clone()].binary_search(&c) {
            Ok(k) => self.vals[span.start + k],
            Err(_) => 0,
        }
    }

    pub fn apply(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        if x.len() != self.domain.1 {
            return Err(Error::DimensionMismatch { expected: self.domain.1, found: x.len() });
        }
        Ok((0..self.codomain.1).map(|r| self.row(r).fold(zero(), |acc, (c, v)| acc + &x[c] * int(v))).collect())
    }

    /// Integer application, for cheap randomized checks.
    pub fn apply_i64(&self, x: &[i64]) -> Result<Vec<i64>> {
        if x.len() != self.domain.1 {
            return Err(Error::DimensionMismatch { expected: self.domain.1, found: x.len() });
        }
        Ok((0..self.codomain.1).map(|r| self.row(r).map(|(c, v)| v * x[c]).sum()).collect())
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &LinOp) -> Result<LinOp> {
        if inner.codomain.1 != self.domain.1 || !inner.codomain.0.same_vertices(self.domain.0) {
            return Err(Error::DimensionMismatch { expected: self.domain.1, found: inner.codomain.1 });
        }
        let mut triplets = Vec::new();
        for r in 0..self.codomain.1 {
            let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
            for (m, a) in self.row(r) {
                for (c, b) in inner.row(m) {
                    *acc.entry(c).or_insert(0) += a * b;
                }
            }
            triplets.extend(acc.into_iter().map(|(c, v)| (r, c, v)));
        }
        LinOp::from_triplets(inner.domain, self.codomain, triplets)
    }

    pub fn transpose(&self) -> LinOp {
        LinOp::from_triplets(self.codomain, self.domain, self.entries().map(|(r, c, v)| (c, r, v)))
            .expect("transpose in range")
    }

    fn combine(&self, other: &LinOp, sign: i64) -> Result<LinOp> {
        if self.domain.1 != other.domain.1 || self.codomain.1 != other.codomain.1 {
            return Err(Error::DimensionMismatch { expected: self.domain.1, found: other.domain.1 });
        }
        let triplets = self.entries().chain(other.entries().map(|(r, c, v)| (r, c, sign * v)));
        LinOp::from_triplets(self.domain, self.codomain, triplets)
    }

    pub fn add(&self, other: &LinOp) -> Result<LinOp> {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &LinOp) -> Result<LinOp> {
        self.combine(other, -1)
    }

    pub fn scale(&self, s: i64) -> LinOp {
        LinOp::from_triplets(self.domain, self.codomain, self.entries().map(|(r, c, v)| (r, c, s * v)))
            .expect("same shape")
    }

    pub fn row_sums(&self) -> Vec<i64> {
        (0..self.codomain.1).map(|r| self.row(r).map(|(_, v)| v).sum()).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        self.domain.1 == self.codomain.1 && *self == self.transpose().with_spaces(self.domain, self.codomain)
    }

    fn with_spaces(mut self, domain: (Space, usize), codomain: (Space, usize)) -> LinOp {
        self.domain = domain;
        self.codomain = codomain;
        self
    }

    /// Entry-wise equality, ignoring space labels.
    pub fn same_entries(&self, other: &LinOp) -> bool {
        self.domain.1 == other.domain.1 && self.codomain.1 == other.codomain.1 && self.entries().eq(other.entries())
    }

    /// `row,col,value` with rows sorted by `(row, col)`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("row,col,value\n");
        for (r, c, v) in self.entries() {
            writeln!(out, "{r},{c},{v}").expect("write to string");
        }
        out
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let mut m = vec![vec![zero(); self.domain.1]; self.codomain.1];
        for (r, c, v) in self.entries() {
            m[r][c] = int(v);
        }
        m
    }
}
