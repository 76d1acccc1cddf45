//! Sparse exact linear algebra: vectors as sorted `(index, scalar)` lists and
//! an incremental echelon basis used for spans, membership and rank.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::field::{Field, Scalar};

/// Sparse vector, sorted by index, no stored zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SparseVec {
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec { entries: Vec::new() }
    }

    pub fn unit(index: usize) -> Self {
        SparseVec { entries: vec![(index, Scalar::one())] }
    }

    /// Builds from arbitrary entries, summing duplicates and dropping zeros.
    pub fn from_entries(field: &Field, entries: impl IntoIterator<Item = (usize, Scalar)>) -> Self {
        let mut map: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (i, c) in entries {
            let slot = map.entry(i).or_insert_with(Scalar::zero);
            *slot = field.add(slot, &c);
        }
        SparseVec { entries: map.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn from_dense(dense: &[Scalar]) -> Self {
        SparseVec {
            entries: dense
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, dim: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); dim];
        for (i, c) in &self.entries {
            out[*i] = c.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, Scalar)> {
        self.entries.iter()
    }

    pub fn get(&self, index: usize) -> Scalar {
        match self.entries.binary_search_by_key(&index, |(i, _)| *i) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    pub fn leading(&self) -> Option<(usize, &Scalar)> {
        self.entries.first().map(|(i, c)| (*i, c))
    }

    pub fn scale(&self, field: &Field, c: &Scalar) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec {
            entries: self
                .entries
                .iter()
                .map(|(i, x)| (*i, field.mul(c, x)))
                .filter(|(_, x)| !x.is_zero())
                .collect(),
        }
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, field: &Field, c: &Scalar, other: &SparseVec) -> SparseVec {
        if c.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some((j, y))) => {
                    out.push((*j, field.mul(c, y)));
                    b.next();
                }
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, field.mul(c, y)));
                        b.next();
                    } else {
                        let s = field.add(x, &field.mul(c, y));
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
            }
        }
        out.retain(|(_, x)| !x.is_zero());
        SparseVec { entries: out }
    }

    pub fn add(&self, field: &Field, other: &SparseVec) -> SparseVec {
        self.add_scaled(field, &Scalar::one(), other)
    }

    pub fn sub(&self, field: &Field, other: &SparseVec) -> SparseVec {
        self.add_scaled(field, &field.neg(&Scalar::one()), other)
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }
}

/// Row echelon basis, grown one vector at a time. Each stored row has a
/// pivot coefficient of one, and no two rows share a pivot.
#[derive(Debug, Clone)]
pub struct Echelon {
    field: Field,
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new(field: Field) -> Self {
        Echelon { field, rows: BTreeMap::new() }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.rows.contains_key(&col)
    }

    /// Reduces `v` against the basis. The result has no entry at any pivot
    /// column, and differs from `v` by an element of the span.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        let mut cursor = 0usize;
        loop {
            // stored rows only carry entries at columns >= their pivot, so
            // pivots can be cleared in increasing order
            let next = v
                .entries
                .iter()
                .find(|(i, _)| *i >= cursor && self.rows.contains_key(i))
                .map(|(i, c)| (*i, c.clone()));
            match next {
                None => return v,
                Some((col, c)) => {
                    let row = &self.rows[&col];
                    v = v.add_scaled(&self.field, &self.field.neg(&c), row);
                    cursor = col + 1;
                }
            }
        }
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Inserts a vector; returns `true` if the rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let r = self.reduce(v);
        match r.leading() {
            None => false,
            Some((col, lead)) => {
                let inv = self.field.inv(lead).expect("nonzero leading coefficient");
                let row = r.scale(&self.field, &inv);
                self.rows.insert(col, row);
                true
            }
        }
    }

    /// Reduced row echelon form: every pivot column is zero outside its row.
    pub fn into_rref(self) -> Vec<SparseVec> {
        let field = self.field;
        let mut rows: Vec<(usize, SparseVec)> = self.rows.into_iter().collect();
        // back substitution from the last pivot upwards
        for k in (0..rows.len()).rev() {
            let (pk, rk) = rows[k].clone();
            for (_, row) in rows.iter_mut().take(k) {
                let c = row.get(pk);
                if !c.is_zero() {
                    *row = row.add_scaled(&field, &field.neg(&c), &rk);
                }
            }
        }
        rows.into_iter().map(|(_, r)| r).collect()
    }

    pub fn rows(&self) -> impl Iterator<Item = &SparseVec> {
        self.rows.values()
    }
}

/// Rank of a dense matrix given as rows.
pub fn rank(field: &Field, rows: &[Vec<Scalar>]) -> usize {
    let mut e = Echelon::new(*field);
    for r in rows {
        e.insert(&SparseVec::from_dense(r));
    }
    e.rank()
}
