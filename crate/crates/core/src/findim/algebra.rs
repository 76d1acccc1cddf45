use std::fmt;

use num_traits::Zero;
use rand::Rng;

use super::AlgebraError;
use crate::field::{Field, Scalar};
use crate::linalg::{Echelon, SparseVec};

/// An element of a [`StructAlgebra`] in coordinates over its basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Element {
    dim: usize,
    coords: SparseVec,
}

impl Element {
    pub fn zero(dim: usize) -> Element {
        Element { dim, coords: SparseVec::new() }
    }

    pub fn basis(dim: usize, i: usize) -> Element {
        assert!(i < dim, "basis index {i} out of range for dimension {dim}");
        Element { dim, coords: SparseVec::unit(i) }
    }

    pub fn from_sparse(dim: usize, coords: SparseVec) -> Element {
        assert!(coords.max_index().is_none_or(|i| i < dim), "coordinate out of range");
        Element { dim, coords }
    }

    pub fn from_dense(coords: &[Scalar]) -> Element {
        Element { dim: coords.len(), coords: SparseVec::from_dense(coords) }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coords(&self) -> &SparseVec {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> Scalar {
        self.coords.get(i)
    }

    pub fn to_dense(&self) -> Vec<Scalar> {
        self.coords.to_dense(self.dim)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_zero()
    }

    pub fn add(&self, field: &Field, other: &Element) -> Element {
        debug_assert_eq!(self.dim, other.dim);
        Element { dim: self.dim, coords: self.coords.add(field, &other.coords) }
    }

    pub fn sub(&self, field: &Field, other: &Element) -> Element {
        debug_assert_eq!(self.dim, other.dim);
        Element { dim: self.dim, coords: self.coords.sub(field, &other.coords) }
    }

    pub fn scale(&self, field: &Field, c: &Scalar) -> Element {
        Element { dim: self.dim, coords: self.coords.scale(field, c) }
    }
}

/// A finite-dimensional algebra given by the products of its basis elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructAlgebra {
    field: Field,
    labels: Vec<String>,
    /// `table[i * dim + j]` is `e_i e_j`; unset entries are zero.
    table: Vec<SparseVec>,
}

impl StructAlgebra {
    /// The algebra with the given basis and zero multiplication.
    pub fn new(field: Field, labels: Vec<String>) -> StructAlgebra {
        let dim = labels.len();
        StructAlgebra { field, labels, table: vec![SparseVec::new(); dim * dim] }
    }

    pub fn with_labels(field: Field, labels: &[&str]) -> StructAlgebra {
        StructAlgebra::new(field, labels.iter().map(|s| s.to_string()).collect())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn set_product(&mut self, i: usize, j: usize, value: SparseVec) {
        let dim = self.dim();
        assert!(i < dim && j < dim && value.max_index().is_none_or(|k| k < dim));
        self.table[i * dim + j] = value;
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i * self.dim() + j]
    }

    /// Nonzero basis products in `(i, j)` order.
    pub fn nonzero_products(&self) -> impl Iterator<Item = (usize, usize, &SparseVec)> {
        let dim = self.dim();
        self.table
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(k, v)| (k / dim, k % dim, v))
    }

    pub fn basis_element(&self, i: usize) -> Element {
        Element::basis(self.dim(), i)
    }

    pub fn element(&self, label: &str) -> Option<Element> {
        self.index_of(label).map(|i| self.basis_element(i))
    }

    pub fn zero_element(&self) -> Element {
        Element::zero(self.dim())
    }

    /// Element from `(coefficient, label)` pairs.
    pub fn combination(&self, terms: &[(i64, &str)]) -> Element {
        let entries = terms.iter().map(|(c, l)| {
            let i = self.index_of(l).unwrap_or_else(|| panic!("no basis element {l}"));
            (i, self.field.from_i64(*c))
        });
        Element::from_sparse(self.dim(), SparseVec::from_entries(&self.field, entries))
    }

    fn check_dim(&self, a: &Element) -> Result<(), AlgebraError> {
        if a.dim() == self.dim() {
            Ok(())
        } else {
            Err(AlgebraError::DimensionMismatch { expected: self.dim(), found: a.dim() })
        }
    }

    pub fn multiply(&self, a: &Element, b: &Element) -> Result<Element, AlgebraError> {
        self.check_dim(a)?;
        self.check_dim(b)?;
        Ok(self.mul(a, b))
    }

    /// Bilinear extension of the basis products; dimensions must already agree.
    pub(crate) fn mul(&self, a: &Element, b: &Element) -> Element {
        Element { dim: self.dim(), coords: self.mul_vec(&a.coords, &b.coords) }
    }

    pub(crate) fn mul_vec(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let f = &self.field;
        let dim = self.dim();
        let mut acc: Vec<Scalar> = Vec::new();
        let mut touched = false;
        for (i, ai) in a.iter() {
            for (j, bj) in b.iter() {
                let prod = &self.table[i * dim + j];
                if prod.is_zero() {
                    continue;
                }
                if !touched {
                    acc = vec![Scalar::zero(); dim];
                    touched = true;
                }
                let c = f.mul(ai, bj);
                for (k, g) in prod.iter() {
                    f.add_mul_assign(&mut acc[*k], &c, g);
                }
            }
        }
        if touched {
            SparseVec::from_dense(&acc)
        } else {
            SparseVec::new()
        }
    }

    /// A random element with integer coordinates in `[-bound, bound]`, or
    /// rational ones with denominators up to `bound` when `rational` is set.
    pub fn random_element(&self, rng: &mut impl Rng, bound: i64, rational: bool) -> Element {
        let f = self.field;
        let coords: Vec<Scalar> = (0..self.dim())
            .map(|_| {
                let n = rng.gen_range(-bound..=bound);
                let d = if rational { rng.gen_range(1..=bound.max(1)) } else { 1 };
                f.from_ratio(n, d).unwrap_or_else(|| f.from_i64(n))
            })
            .collect();
        Element::from_dense(&coords)
    }

    /// Checks that `sub` is closed under multiplication and returns it as an
    /// algebra, in the coordinates of its reduced echelon basis.
    pub fn restrict(&self, sub: &Subspace, labels: Vec<String>) -> Result<StructAlgebra, AlgebraError> {
        assert_eq!(labels.len(), sub.dim());
        let pivots: Vec<usize> = sub.pivots().collect();
        let mut out = StructAlgebra::new(self.field, labels);
        for (a, ra) in sub.basis().iter().enumerate() {
            for (b, rb) in sub.basis().iter().enumerate() {
                let prod = self.mul_vec(ra, rb);
                if !sub.contains_vec(&prod) {
                    return Err(AlgebraError::NotSubalgebra);
                }
                let coords = SparseVec::from_entries(
                    &self.field,
                    pivots.iter().enumerate().map(|(k, p)| (k, prod.get(*p))),
                );
                out.set_product(a, b, coords);
            }
        }
        Ok(out)
    }

    /// The smallest subalgebra containing `generators`.
    pub fn generated_subalgebra(&self, generators: &[Element]) -> Subspace {
        let mut span = Subspace::span(self.field, self.dim(), generators.iter().map(|g| g.coords.clone()));
        loop {
            let prod = subspace_product(self, &span, &span);
            let next = span.sum(&prod);
            if next.dim() == span.dim() {
                return span;
            }
            span = next;
        }
    }

    pub fn is_ideal(&self, sub: &Subspace) -> bool {
        let whole = Subspace::whole(self.field, self.dim());
        subspace_product(self, &whole, sub).is_subspace_of(sub) && subspace_product(self, sub, &whole).is_subspace_of(sub)
    }

    /// `A / I`, with basis the elements of `A` outside the pivot columns of `I`.
    pub fn quotient(&self, ideal: &Subspace) -> Result<StructAlgebra, AlgebraError> {
        if !self.is_ideal(ideal) {
            return Err(AlgebraError::NotIdeal);
        }
        let kept: Vec<usize> = (0..self.dim()).filter(|c| !ideal.echelon.is_pivot(*c)).collect();
        let mut new_index = vec![usize::MAX; self.dim()];
        for (k, &c) in kept.iter().enumerate() {
            new_index[c] = k;
        }
        let labels = kept.iter().map(|&c| self.labels[c].clone()).collect();
        let mut out = StructAlgebra::new(self.field, labels);
        for (a, &i) in kept.iter().enumerate() {
            for (b, &j) in kept.iter().enumerate() {
                let r = ideal.echelon.reduce(self.basis_product(i, j));
                let coords = SparseVec::from_entries(&self.field, r.iter().map(|(c, x)| (new_index[*c], x.clone())));
                out.set_product(a, b, coords);
            }
        }
        Ok(out)
    }

    pub fn is_zero_multiplication(&self) -> bool {
        self.table.iter().all(|v| v.is_zero())
    }

    pub fn is_commutative(&self) -> bool {
        let dim = self.dim();
        (0..dim).all(|i| (0..dim).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// Parses the text format written by the `Display` impl.
    pub fn parse(text: &str) -> Result<StructAlgebra, AlgebraError> {
        super::format::parse_algebra(text)
    }
}

impl fmt::Display for StructAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::format::write_algebra(self, f)
    }
}

/// A subspace of `k^dim`, kept in reduced row echelon form.
#[derive(Debug, Clone)]
pub struct Subspace {
    ambient: usize,
    echelon: Echelon,
    rref: Vec<SparseVec>,
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.rref == other.rref
    }
}

impl Eq for Subspace {}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace { ambient, echelon: Echelon::new(field), rref: Vec::new() }
    }

    pub fn whole(field: Field, ambient: usize) -> Subspace {
        Subspace::span(field, ambient, (0..ambient).map(SparseVec::unit))
    }

    pub fn span(field: Field, ambient: usize, vectors: impl IntoIterator<Item = SparseVec>) -> Subspace {
        let mut e = Echelon::new(field);
        for v in vectors {
            if e.rank() == ambient {
                break;
            }
            e.insert(&v);
        }
        Subspace::from_echelon(ambient, e)
    }

    pub fn span_elements<'a>(field: Field, ambient: usize, elems: impl IntoIterator<Item = &'a Element>) -> Subspace {
        Subspace::span(field, ambient, elems.into_iter().map(|e| e.coords.clone()))
    }

    pub(crate) fn from_echelon(ambient: usize, echelon: Echelon) -> Subspace {
        let rref = echelon.clone().into_rref();
        let mut e = Echelon::new(echelon.field());
        for r in &rref {
            e.insert(r);
        }
        Subspace { ambient, echelon: e, rref }
    }

    pub fn field(&self) -> Field {
        self.echelon.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rref.len()
    }

    pub fn codim(&self) -> usize {
        self.ambient - self.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.rref.is_empty()
    }

    /// Reduced echelon basis rows.
    pub fn basis(&self) -> &[SparseVec] {
        &self.rref
    }

    pub fn basis_elements(&self) -> Vec<Element> {
        self.rref.iter().map(|r| Element::from_sparse(self.ambient, r.clone())).collect()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.echelon.pivots()
    }

    pub fn contains_vec(&self, v: &SparseVec) -> bool {
        self.echelon.contains(v)
    }

    pub fn contains(&self, e: &Element) -> bool {
        self.echelon.contains(&e.coords)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rref.iter().all(|r| other.contains_vec(r))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut e = self.echelon.clone();
        for r in &other.rref {
            if e.rank() == self.ambient {
                break;
            }
            e.insert(r);
        }
        Subspace::from_echelon(self.ambient, e)
    }

    /// Reduction modulo this subspace: the representative supported off the pivots.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        self.echelon.reduce(v)
    }
}

/// The span of all products `bc` with `b` in `left` and `c` in `right`.
pub fn subspace_product(alg: &StructAlgebra, left: &Subspace, right: &Subspace) -> Subspace {
    let mut e = Echelon::new(alg.field());
    'outer: for b in left.basis() {
        for c in right.basis() {
            if e.rank() == alg.dim() {
                break 'outer;
            }
            let p = alg.mul_vec(b, c);
            if !p.is_zero() {
                e.insert(&p);
            }
        }
    }
    Subspace::from_echelon(alg.dim(), e)
}
