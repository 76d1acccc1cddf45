//! The separation rewriters: express a monomial, modulo the identities of a
//! variety with a witness, as a combination of `[n, n+d]`-separating monomials.

use std::collections::HashMap;

use super::presentation::VarietyPresentation;
use super::witness::{z_var, SeparativityWitness, Side};
use super::IdentityError;
use crate::monomial::{positional_var, Indeterminate, Monomial};
use crate::poly::Polynomial;

/// Rewriter bound to one presentation, memoizing results per monomial shape.
#[derive(Debug)]
pub struct Rewriter<'a> {
    presentation: &'a VarietyPresentation,
    witness: &'a SeparativityWitness,
    memo: HashMap<Monomial, Polynomial>,
}

impl<'a> Rewriter<'a> {
    pub fn new(presentation: &'a VarietyPresentation) -> Result<Self, IdentityError> {
        let witness = presentation
            .witness()
            .ok_or_else(|| IdentityError::NoWitness(presentation.name().to_string()))?;
        witness.ensure_complete()?;
        Ok(Rewriter { presentation, witness, memo: HashMap::new() })
    }

    pub fn d(&self) -> usize {
        self.witness.d()
    }

    /// A combination of `[1, 1+d]`-separating monomials congruent to `w`.
    pub fn separate_once(&mut self, w: &Monomial) -> Result<Polynomial, IdentityError> {
        if w.len() < 2 {
            return Err(IdentityError::InvalidInput(format!("{w} has length 1; nothing to separate")));
        }
        self.once(w, w.len() + 1)
    }

    /// A combination of `[n, n+d]`-separating monomials congruent to `w`,
    /// by induction on `n`: each output of the previous stage that is only
    /// `(n-1)`-separating has its submonomial of length `len - (n-1)`
    /// rewritten in place.
    pub fn separate_n(&mut self, w: &Monomial, n: usize) -> Result<Polynomial, IdentityError> {
        if n == 0 || w.len() <= n {
            return Err(IdentityError::InvalidInput(format!(
                "need 1 <= n < length; got n = {n} for {w} of length {}",
                w.len()
            )));
        }
        if n == 1 {
            return self.separate_once(w);
        }
        let d = self.d();
        let field = self.presentation.field();
        let prev = self.separate_n(w, n - 1)?;
        let mut out = Polynomial::zero(field);
        for (m, c) in prev.terms() {
            if m.is_range_separating_unchecked(n, n + d) {
                out.add_term(m.clone(), c.clone());
                continue;
            }
            let ctx = m.contexts(m.len() - (n - 1)).into_iter().next().ok_or_else(|| {
                IdentityError::InvalidInput(format!("{m} is not {}-separating", n - 1))
            })?;
            let inner = self.separate_once(&ctx.inner)?;
            for (v, e) in inner.terms() {
                out.add_term(m.replace_at(&ctx.path.0, v), field.mul(c, e));
            }
        }
        Ok(out)
    }

    fn once(&mut self, w: &Monomial, fuel: usize) -> Result<Polynomial, IdentityError> {
        let (shape, leaves) = w.positional();
        let result = match self.memo.get(&shape) {
            Some(r) => r.clone(),
            None => {
                let r = self.once_shape(&shape, fuel)?;
                self.memo.insert(shape, r.clone());
                r
            }
        };
        let names: HashMap<Indeterminate, Monomial> =
            leaves.into_iter().enumerate().map(|(k, l)| (positional_var(k + 1), Monomial::leaf(l))).collect();
        Ok(result.substitute_monomials(&|i| names.get(i).cloned()))
    }

    fn once_shape(&mut self, w: &Monomial, fuel: usize) -> Result<Polynomial, IdentityError> {
        let field = self.presentation.field();
        let d = self.d();
        if w.is_range_separating_unchecked(1, 1 + d) {
            return Ok(Polynomial::monomial(field, w.clone()));
        }
        if fuel == 0 {
            return Err(IdentityError::RewriteDiverged(w.len() + 1));
        }
        let (a, b) = w.factors().expect("a non-separating monomial is a product");
        let mut values: HashMap<Indeterminate, Monomial> = HashMap::new();
        let target = if self.witness.is_paired() {
            let (a1, a2) = a.factors().expect("both factors have length >= 2");
            let (a3, a4) = b.factors().expect("both factors have length >= 2");
            for (k, m) in [a1, a2, a3, a4].into_iter().enumerate() {
                values.insert(Indeterminate::x(k + 1), m.clone());
            }
            self.witness.get(&super::witness::paired_shape(), Side::Paired)
        } else {
            // decompose the shorter top factor; ties go to the left
            let (chosen, other, side) = if a.len() <= b.len() { (a, b, Side::Left) } else { (b, a, Side::Right) };
            let split = chosen.split_into_factors(d + 2)?;
            for (k, m) in split.factors.iter().enumerate() {
                values.insert(Indeterminate::x(k + 1), m.clone());
            }
            values.insert(z_var(), other.clone());
            self.witness.get(&split.shape, side)
        };
        let target = target.expect("witness is complete").clone();
        let substituted = target.substitute_monomials(&|i| values.get(i).cloned());
        let mut out = Polynomial::zero(field);
        for (m, c) in substituted.terms() {
            let r = self.once(m, fuel - 1)?;
            out.add_scaled(c, &r)?;
        }
        Ok(out)
    }
}

pub fn separate_once(w: &Monomial, p: &VarietyPresentation) -> Result<Polynomial, IdentityError> {
    Rewriter::new(p)?.separate_once(w)
}

pub fn separate_n(w: &Monomial, n: usize, p: &VarietyPresentation) -> Result<Polynomial, IdentityError> {
    Rewriter::new(p)?.separate_n(w, n)
}
