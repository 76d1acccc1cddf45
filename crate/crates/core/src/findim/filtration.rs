use super::algebra::{subspace_product, StructAlgebra, Subspace};

/// The lower filtration `A_(1) = A`, `A_(n+1) = sum_{m=1..n} A_(m) A_(n+1-m)`,
/// computed on demand and memoized.
#[derive(Debug, Clone)]
pub struct LowerFiltration<'a> {
    alg: &'a StructAlgebra,
    /// `terms[k]` is `A_(k+1)`.
    terms: Vec<Subspace>,
}

impl<'a> LowerFiltration<'a> {
    pub fn new(alg: &'a StructAlgebra) -> Self {
        LowerFiltration { alg, terms: vec![Subspace::whole(alg.field(), alg.dim())] }
    }

    pub fn algebra(&self) -> &'a StructAlgebra {
        self.alg
    }

    /// `A_(n)`, for `n >= 1`.
    pub fn get(&mut self, n: usize) -> &Subspace {
        assert!(n >= 1, "the lower filtration starts at A_(1)");
        while self.terms.len() < n {
            let next = self.terms.len() + 1;
            let last = &self.terms[self.terms.len() - 1];
            let value = if last.is_zero() {
                last.clone()
            } else {
                let mut acc = Subspace::zero(self.alg.field(), self.alg.dim());
                for m in 1..next {
                    let term = subspace_product(self.alg, &self.terms[m - 1], &self.terms[next - m - 1]);
                    acc = acc.sum(&term);
                }
                acc
            };
            self.terms.push(value);
        }
        &self.terms[n - 1]
    }

    /// Dimensions of `A_(1) ..= A_(n)`.
    pub fn dims(&mut self, n: usize) -> Vec<usize> {
        (1..=n).map(|k| self.get(k).dim()).collect()
    }
}

pub fn lower_filtration(alg: &StructAlgebra, n: usize) -> Subspace {
    LowerFiltration::new(alg).get(n).clone()
}

/// Whether some `A_(n)` vanishes, with the least such `n`.
///
/// The filtration is descending, and once `A_(k) = A_(2k)` every later term
/// equals `A_(k)`: each `A_(m)A_(N-m)` for `N > 2k` has a factor index in
/// `[k, N-1)`, which can be raised by one without leaving the chain. So the
/// loop stops either at a zero term or at such a plateau.
pub fn is_nilpotent(alg: &StructAlgebra) -> (bool, Option<usize>) {
    let mut f = LowerFiltration::new(alg);
    let mut n = 1;
    loop {
        if f.get(n).is_zero() {
            return (true, Some(n));
        }
        if n % 2 == 0 && f.get(n / 2).dim() == f.get(n).dim() {
            return (false, None);
        }
        n += 1;
    }
}

/// The derived series `A^(0) = A`, `A^(n+1) = A^(n) A^(n)`.
#[derive(Debug, Clone)]
pub struct DerivedSeries<'a> {
    alg: &'a StructAlgebra,
    terms: Vec<Subspace>,
}

impl<'a> DerivedSeries<'a> {
    pub fn new(alg: &'a StructAlgebra) -> Self {
        DerivedSeries { alg, terms: vec![Subspace::whole(alg.field(), alg.dim())] }
    }

    pub fn get(&mut self, n: usize) -> &Subspace {
        while self.terms.len() <= n {
            let last = &self.terms[self.terms.len() - 1];
            let next = subspace_product(self.alg, last, last);
            self.terms.push(next);
        }
        &self.terms[n]
    }
}

pub fn derived_series(alg: &StructAlgebra, n: usize) -> Subspace {
    DerivedSeries::new(alg).get(n).clone()
}

/// Whether some `A^(n)` vanishes, with the least such `n` (the derived length).
/// A nonzero term equal to its successor repeats forever.
pub fn is_solvable(alg: &StructAlgebra) -> (bool, Option<usize>) {
    let mut s = DerivedSeries::new(alg);
    let mut n = 0;
    loop {
        let cur = s.get(n).dim();
        if cur == 0 {
            return (true, Some(n));
        }
        if s.get(n + 1).dim() == cur {
            return (false, None);
        }
        n += 1;
    }
}
