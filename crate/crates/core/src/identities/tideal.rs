//! Multihomogeneous components of the T-ideal generated by a presentation.
//!
//! The component at multidegree `D` is spanned by the instances `c(s(g))`
//! with `g` a polarization of a defining identity, `s` a substitution of
//! monomials for its variables and `c` a monomial with one placeholder, such
//! that the result has multidegree `D`. Substituting sums of monomials and
//! splitting into components gives nothing more, and products and later
//! substitutions of instances are again instances, so one pass suffices.

use std::collections::{BTreeMap, HashMap};

use super::presentation::VarietyPresentation;
use super::IdentityError;
use crate::config::Limits;
use crate::field::Field;
use crate::linalg::{Echelon, SparseVec};
use crate::monomial::{Indeterminate, Monomial, Var};
use crate::poly::{Multidegree, MonomialsByDegree, Polynomial};

/// Internal stand-in for a `y` that occurs as an ordinary variable, so that
/// placeholder contexts stay unambiguous.
fn hidden_y() -> Indeterminate {
    Indeterminate::Var(Var::new("y#"))
}

fn hide(f: &Polynomial) -> Polynomial {
    f.substitute_monomials(&|i| i.is_placeholder().then(|| Monomial::leaf(hidden_y())))
}

fn unhide(f: &Polynomial) -> Polynomial {
    let h = hidden_y();
    f.substitute_monomials(&|i| (*i == h).then(Monomial::placeholder))
}

fn hide_degree(md: &Multidegree) -> Multidegree {
    Multidegree::from_counts(md.iter().map(|(v, k)| (if v.is_placeholder() { hidden_y() } else { v.clone() }, k)))
}

#[derive(Debug, Clone)]
pub struct TIdealComponent {
    multidegree: Multidegree,
    columns: HashMap<Monomial, usize>,
    echelon: Echelon,
    basis: Vec<Polynomial>,
}

impl TIdealComponent {
    pub fn multidegree(&self) -> &Multidegree {
        &self.multidegree
    }

    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    /// Row-reduced spanning set.
    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        let f = hide(f);
        let mut entries = Vec::with_capacity(f.len());
        for (m, c) in f.terms() {
            match self.columns.get(m) {
                Some(i) => entries.push((*i, c.clone())),
                None => return false,
            }
        }
        self.echelon.contains(&SparseVec::from_entries(&self.echelon.field(), entries))
    }
}

/// A polarized identity with the degree of each of its variables.
#[derive(Debug, Clone)]
struct Variant {
    poly: Polynomial,
    degrees: Vec<(Indeterminate, usize)>,
}

/// Partitions of `k` into nonincreasing positive parts.
fn partitions(k: usize) -> Vec<Vec<usize>> {
    fn go(left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=left.min(max)).rev() {
            cur.push(p);
            go(left - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, k, &mut Vec::new(), &mut out);
    out
}

/// Whether the polarization with exponents `parts` is itself a consequence
/// over `field`. It is obtained from values `g(t1 v1 + ... + ts vs)` by
/// interpolation exactly when no other exponent vector with the same sum
/// reduces to the same function of `t` under `t^q = t`.
fn polarization_is_safe(field: Field, parts: &[usize]) -> bool {
    let Some(q) = field.order() else { return true };
    let q = q as usize;
    let k: usize = parts.iter().sum();
    if k < q {
        return true;
    }
    let reduce = |m: usize| (m - 1) % (q - 1) + 1;
    let target: Vec<usize> = parts.iter().map(|&m| reduce(m)).collect();
    fn compositions(left: usize, slots: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
        if slots == 0 {
            return left != 0 || f(cur);
        }
        for m in 1..=left {
            cur.push(m);
            let keep_going = compositions(left - m, slots - 1, cur, f);
            cur.pop();
            if !keep_going {
                return false;
            }
        }
        true
    }
    compositions(k, parts.len(), &mut Vec::new(), &mut |mu| {
        mu == parts || mu.iter().map(|&m| reduce(m)).collect::<Vec<_>>() != target
    })
}

fn variants(p: &VarietyPresentation) -> Vec<Variant> {
    let field = p.field();
    let mut out = Vec::new();
    for id in p.identities() {
        let id = hide(id);
        let md = id.multidegree().expect("identities are multihomogeneous");
        // polarize one variable at a time, keeping every safe choice
        let mut partial = vec![(id.clone(), Vec::<(Indeterminate, usize)>::new())];
        for (v, k) in md.iter() {
            let mut next = Vec::new();
            for (g, degs) in &partial {
                for parts in partitions(k).into_iter().filter(|p| polarization_is_safe(field, p)) {
                    if parts.len() == 1 {
                        let mut d = degs.clone();
                        d.push((v.clone(), k));
                        next.push((g.clone(), d));
                        continue;
                    }
                    let fresh: Vec<Indeterminate> =
                        (1..=parts.len()).map(|j| Indeterminate::Var(Var::new(&format!("{v}#{j}")))).collect();
                    let h = g.polarize(v, &parts, &fresh);
                    if h.is_zero() {
                        continue;
                    }
                    let mut d = degs.clone();
                    d.extend(fresh.into_iter().zip(parts));
                    next.push((h, d));
                }
            }
            partial = next;
        }
        out.extend(partial.into_iter().map(|(poly, degrees)| Variant { poly, degrees }));
    }
    out
}

/// Memoized components and congruence tests for one presentation.
#[derive(Debug)]
pub struct Congruence<'a> {
    presentation: &'a VarietyPresentation,
    limits: Limits,
    variants: Vec<Variant>,
    cache: HashMap<Multidegree, TIdealComponent>,
    monomials: MonomialsByDegree,
}

impl<'a> Congruence<'a> {
    pub fn new(presentation: &'a VarietyPresentation, limits: Limits) -> Self {
        Congruence {
            presentation,
            limits,
            variants: variants(presentation),
            cache: HashMap::new(),
            monomials: MonomialsByDegree::new(),
        }
    }

    pub fn presentation(&self) -> &VarietyPresentation {
        self.presentation
    }

    pub fn component(&mut self, md: &Multidegree) -> Result<&TIdealComponent, IdentityError> {
        if md.total() > self.limits.max_degree {
            return Err(IdentityError::DegreeCap { degree: md.total(), cap: self.limits.max_degree });
        }
        let md = hide_degree(md);
        if !self.cache.contains_key(&md) {
            let c = self.build(&md);
            self.cache.insert(md.clone(), c);
        }
        Ok(&self.cache[&md])
    }

    fn build(&mut self, md: &Multidegree) -> TIdealComponent {
        let field = self.presentation.field();
        let full_rank = self.monomials.get(md).len();
        let mut columns: HashMap<Monomial, usize> = HashMap::new();
        let mut echelon = Echelon::new(field);
        let variants = self.variants.clone();
        for v in &variants {
            // a variable of degree k takes a monomial of multidegree e with k*e <= md
            let degrees: Vec<usize> = v.degrees.iter().map(|(_, k)| *k).collect();
            let mut chosen: Vec<Multidegree> = Vec::new();
            self.assign(md, &degrees, &mut chosen, &mut |this, chosen, rest| {
                if echelon.rank() == full_rank {
                    return;
                }
                let contexts: Vec<Monomial> = if rest.is_empty() {
                    vec![Monomial::placeholder()]
                } else {
                    this.monomials.get(&rest.add(&Multidegree::from_counts([(Indeterminate::Placeholder, 1)]))).to_vec()
                };
                let choices: Vec<Vec<Monomial>> = chosen.iter().map(|d| this.monomials.get(d).to_vec()).collect();
                let mut pick = vec![0usize; choices.len()];
                loop {
                    let sigma: BTreeMap<&Indeterminate, &Monomial> =
                        v.degrees.iter().zip(&pick).enumerate().map(|(j, ((var, _), &i))| (var, &choices[j][i])).collect();
                    let inst = v.poly.substitute_monomials(&|i| sigma.get(i).map(|m| (*m).clone()));
                    if !inst.is_zero() {
                        for c in &contexts {
                            let row = SparseVec::from_entries(
                                &field,
                                inst.terms().map(|(m, x)| {
                                    let mono = c.substitute_placeholder(m);
                                    let next = columns.len();
                                    (*columns.entry(mono).or_insert(next), x.clone())
                                }),
                            );
                            echelon.insert(&row);
                            if echelon.rank() == full_rank {
                                return;
                            }
                        }
                    }
                    let mut k = 0;
                    loop {
                        if k == pick.len() {
                            return;
                        }
                        pick[k] += 1;
                        if pick[k] < choices[k].len() {
                            break;
                        }
                        pick[k] = 0;
                        k += 1;
                    }
                }
            });
        }
        let by_index: Vec<Monomial> = {
            let mut v: Vec<(usize, Monomial)> = columns.iter().map(|(m, i)| (*i, m.clone())).collect();
            v.sort_by_key(|(i, _)| *i);
            v.into_iter().map(|(_, m)| m).collect()
        };
        let basis = echelon
            .clone()
            .into_rref()
            .iter()
            .map(|r| unhide(&Polynomial::from_terms(field, r.iter().map(|(i, c)| (c.clone(), by_index[*i].clone())))))
            .collect();
        TIdealComponent { multidegree: md.clone(), columns, echelon, basis }
    }

    /// Calls `visit` with every choice of nonempty multidegrees `e_j` with
    /// `sum degrees[j] * e_j <= budget`, and the remainder.
    fn assign(
        &mut self,
        budget: &Multidegree,
        degrees: &[usize],
        chosen: &mut Vec<Multidegree>,
        visit: &mut impl FnMut(&mut Self, &[Multidegree], &Multidegree),
    ) {
        let j = chosen.len();
        if j == degrees.len() {
            visit(self, chosen, budget);
            return;
        }
        for e in budget.sub_multidegrees() {
            if e.is_empty() {
                continue;
            }
            let Some(rest) = budget.checked_sub(&e.scaled(degrees[j])) else { continue };
            chosen.push(e);
            self.assign(&rest, degrees, chosen, visit);
            chosen.pop();
        }
    }

    /// Whether every multihomogeneous component of `f - g` lies in the T-ideal.
    pub fn is_congruent(&mut self, f: &Polynomial, g: &Polynomial) -> Result<bool, IdentityError> {
        let diff = f.sub(g)?;
        for (md, part) in diff.multidegree_components() {
            if !self.component(&md)?.contains(&part) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub fn t_ideal_component(
    p: &VarietyPresentation,
    md: &Multidegree,
    limits: &Limits,
) -> Result<TIdealComponent, IdentityError> {
    Congruence::new(p, limits.clone()).component(md).cloned()
}

pub fn is_congruent(
    f: &Polynomial,
    g: &Polynomial,
    p: &VarietyPresentation,
    limits: &Limits,
) -> Result<bool, IdentityError> {
    Congruence::new(p, limits.clone()).is_congruent(f, g)
}
