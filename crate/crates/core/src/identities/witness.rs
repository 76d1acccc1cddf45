//! Separativity witnesses: for each bracketing `u` of `x1 .. x{d+2}`, rewrite
//! targets for `u z` and `z u` in which one top factor is a product of a
//! proper nonempty subset of the `x`s.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;

use super::presentation::VarietyPresentation;
use super::tideal::Congruence;
use super::IdentityError;
use crate::config::Limits;
use crate::field::Field;
use crate::linalg::{Echelon, SparseVec};
use crate::monomial::{bracketings, Indeterminate, Monomial};
use crate::poly::{Multidegree, MonomialsByDegree, Polynomial};

/// Where the remaining factor `z` sits relative to the shape `u`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    /// `u z`.
    Left,
    /// `z u`.
    Right,
    /// The shape is `(x1 x2)(x3 x4)` itself, rewritten into monomials
    /// `u x3` and `u x4`. Used by varieties where products of two products
    /// can be pushed to the right, which the one-sided form cannot express.
    Paired,
}

impl Side {
    pub fn letter(self) -> &'static str {
        match self {
            Side::Left => "L",
            Side::Right => "R",
            Side::Paired => "P",
        }
    }

    pub fn from_letter(s: &str) -> Option<Side> {
        match s {
            "L" => Some(Side::Left),
            "R" => Some(Side::Right),
            "P" => Some(Side::Paired),
            _ => None,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.letter())
    }
}

pub(crate) fn z_var() -> Indeterminate {
    Indeterminate::var("z")
}

pub(crate) fn paired_shape() -> Monomial {
    "(x1 x2)(x3 x4)".parse().expect("valid monomial")
}

/// The monomial a certificate rewrites.
pub(crate) fn certificate_source(shape: &Monomial, side: Side) -> Monomial {
    let z = Monomial::leaf(z_var());
    match side {
        Side::Left => Monomial::product(shape, &z),
        Side::Right => Monomial::product(&z, shape),
        Side::Paired => shape.clone(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparativityWitness {
    d: usize,
    certificates: BTreeMap<(Monomial, Side), Polynomial>,
}

impl SeparativityWitness {
    pub fn new(d: usize) -> Self {
        SeparativityWitness { d, certificates: BTreeMap::new() }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn insert(&mut self, shape: Monomial, side: Side, target: Polynomial) {
        self.certificates.insert((shape, side), target);
    }

    pub fn get(&self, shape: &Monomial, side: Side) -> Option<&Polynomial> {
        self.certificates.get(&(shape.clone(), side))
    }

    pub fn certificates(&self) -> impl Iterator<Item = (&Monomial, Side, &Polynomial)> {
        self.certificates.iter().map(|((m, s), p)| (m, *s, p))
    }

    pub fn is_paired(&self) -> bool {
        self.certificates.keys().any(|(_, s)| *s == Side::Paired)
    }

    /// The `(shape, side)` pairs a complete witness covers.
    pub fn required_keys(&self) -> Vec<(Monomial, Side)> {
        if self.is_paired() {
            return vec![(paired_shape(), Side::Paired)];
        }
        bracketings(self.d + 2)
            .into_iter()
            .flat_map(|u| [(u.clone(), Side::Left), (u, Side::Right)])
            .collect()
    }

    pub fn ensure_complete(&self) -> Result<(), IdentityError> {
        if self.is_paired() && self.d != 0 {
            return Err(IdentityError::InvalidInput("paired certificates require d=0".into()));
        }
        for (shape, side) in self.required_keys() {
            if self.get(&shape, side).is_none() {
                return Err(IdentityError::MissingCertificate { shape: shape.to_string(), side });
            }
        }
        Ok(())
    }
}

fn has_z(m: &Monomial) -> bool {
    let z = z_var();
    m.leaves().into_iter().any(|l| *l == z)
}

/// Whether every monomial of `target` has the shape a certificate for
/// `(shape, side)` must produce, and the right multidegree.
pub fn is_split_form(target: &Polynomial, shape: &Monomial, side: Side) -> bool {
    let source = certificate_source(shape, side);
    let md = Multidegree::of(&source);
    let xs = shape.len();
    target.monomials().all(|m| {
        if Multidegree::of(m) != md {
            return false;
        }
        let Some((a, b)) = m.factors() else { return false };
        match side {
            Side::Paired => matches!(b.as_leaf(), Some(l) if *l == Indeterminate::x(3) || *l == Indeterminate::x(4)),
            Side::Left | Side::Right => match (has_z(a), has_z(b)) {
                (false, true) => a.len() < xs,
                (true, false) => b.len() < xs,
                _ => false,
            },
        }
    })
}

/// Result of checking one certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateCheck {
    pub shape: Monomial,
    pub side: Side,
    pub split_form: bool,
    pub congruent: bool,
}

impl CertificateCheck {
    pub fn ok(&self) -> bool {
        self.split_form && self.congruent
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessReport {
    pub presentation: String,
    pub d: usize,
    pub checks: Vec<CertificateCheck>,
}

impl WitnessReport {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(CertificateCheck::ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CertificateCheck> {
        self.checks.iter().filter(|c| !c.ok())
    }
}

impl fmt::Display for WitnessReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let yes = |b: bool| if b { "yes" } else { "NO" };
        writeln!(f, "witness for {} (d={})", self.presentation, self.d)?;
        for c in &self.checks {
            writeln!(
                f,
                "  [{}] {} {}  split-form {}  congruent {}",
                if c.ok() { "ok" } else { "FAIL" },
                c.shape,
                c.side,
                yes(c.split_form),
                yes(c.congruent)
            )?;
        }
        write!(f, "{}", if self.ok() { "verified" } else { "NOT verified" })
    }
}

/// Checks every certificate syntactically (split form) and semantically
/// (congruence of source and target modulo the presentation).
pub fn verify_witness(p: &VarietyPresentation, limits: &Limits) -> Result<WitnessReport, IdentityError> {
    let w = p.witness().ok_or_else(|| IdentityError::NoWitness(p.name().to_string()))?;
    w.ensure_complete()?;
    let mut congruence = Congruence::new(p, limits.clone());
    let mut checks = Vec::new();
    for (shape, side, target) in w.certificates() {
        let source = Polynomial::monomial(p.field(), certificate_source(shape, side));
        checks.push(CertificateCheck {
            shape: shape.clone(),
            side,
            split_form: is_split_form(target, shape, side),
            congruent: congruence.is_congruent(&source, target)?,
        });
    }
    Ok(WitnessReport { presentation: p.name().to_string(), d: w.d(), checks })
}

pub(crate) fn builtin_associative_witness(field: Field) -> SeparativityWitness {
    let mut w = SeparativityWitness::new(0);
    let p = |s: &str| Polynomial::parse(field, s).expect("valid polynomial");
    let u: Monomial = "x1 x2".parse().expect("valid monomial");
    w.insert(u.clone(), Side::Left, p("x1 (x2 z)"));
    w.insert(u, Side::Right, p("(z x1) x2"));
    w
}

/// Both targets lie in the span of the eight monomials with `x1` or `x2` outside.
pub(crate) fn builtin_lie_witness(field: Field) -> SeparativityWitness {
    let mut w = SeparativityWitness::new(0);
    let p = |s: &str| Polynomial::parse(field, s).expect("valid polynomial");
    let u: Monomial = "x1 x2".parse().expect("valid monomial");
    w.insert(u.clone(), Side::Left, p("-(x2 z) x1 - (z x1) x2"));
    w.insert(u, Side::Right, p("(x2 z) x1 + (z x1) x2"));
    w
}

pub(crate) fn builtin_four_nilpotent_witness(field: Field) -> SeparativityWitness {
    let mut w = SeparativityWitness::new(0);
    w.insert(paired_shape(), Side::Paired, Polynomial::zero(field));
    w
}

/// The Jordan identity `(a b)(a a) = a (b (a a))` after `a -> x2 + x3 + z`,
/// `b -> x1`, restricted to the part multilinear in `x1, x2, x3, z` and
/// reduced modulo commutativity. All coefficients are `2` or `-2`.
pub fn jordan_multilinear_identity(field: Field) -> Result<Polynomial, IdentityError> {
    let p = |s: &str| Polynomial::parse(field, s).expect("valid polynomial");
    let jordan = p("(a b)(a a) - a (b (a a))");
    let mut assignment = BTreeMap::new();
    assignment.insert(Indeterminate::var("a"), p("x2 + x3 + z"));
    assignment.insert(Indeterminate::var("b"), p("x1"));
    let vars: BTreeSet<Indeterminate> = [Indeterminate::x(1), Indeterminate::x(2), Indeterminate::x(3), z_var()].into();
    Ok(jordan.substitute(&assignment)?.multilinear_part(&vars).commutative_normal_form())
}

fn is_z_outside(m: &Monomial) -> bool {
    let z = z_var();
    m.factors().is_some_and(|(a, b)| a.as_leaf() == Some(&z) || b.as_leaf() == Some(&z))
}

/// The `d = 1` Jordan witness. The linearized identity has a single term with
/// `z` outside, `z (x1 (x2 x3))`; solving for it gives the certificate, and
/// every other `u z`, `z u` is that monomial up to commutativity and a
/// renaming of `x1, x2, x3`.
pub fn derive_jordan_witness(field: Field) -> Result<SeparativityWitness, IdentityError> {
    if field.characteristic() == 2 {
        return Err(IdentityError::Characteristic2("the Jordan witness"));
    }
    let lin = jordan_multilinear_identity(field)?;
    let two = field.from_i64(2);
    if lin.terms().any(|(_, c)| *c != two && *c != field.neg(&two)) {
        return Err(IdentityError::InvalidInput(format!("unexpected coefficients in {lin}")));
    }
    let half = field.inv(&two).expect("char is not 2");
    let identity = lin.scale(&half);
    let pivot: Monomial = "z (x1 (x2 x3))".parse().expect("valid monomial");
    let outside: Vec<&Monomial> = identity.monomials().filter(|m| is_z_outside(m)).collect();
    if outside != [&pivot] {
        return Err(IdentityError::InvalidInput(format!("expected a single z-outside term in {identity}")));
    }
    // identity = c * pivot + rest, so pivot = -rest / c
    let c = identity.coeff(&pivot);
    let mut rest = identity.clone();
    rest.add_term(pivot.clone(), field.neg(&c));
    let solved = rest.scale(&field.neg(&field.inv(&c).expect("nonzero")));

    let mut w = SeparativityWitness::new(1);
    for u in bracketings(3) {
        for side in [Side::Left, Side::Right] {
            let normal = certificate_source(&u, side).commutative_normal_form();
            let (a, b, c) = match_z_a_bc(&normal)
                .ok_or_else(|| IdentityError::InvalidInput(format!("unexpected normal form {normal}")))?;
            let relabel = |i: &Indeterminate| -> Option<Monomial> {
                [(Indeterminate::x(1), &a), (Indeterminate::x(2), &b), (Indeterminate::x(3), &c)]
                    .into_iter()
                    .find(|(x, _)| x == i)
                    .map(|(_, m)| Monomial::leaf(m.clone()))
            };
            w.insert(u.clone(), side, solved.substitute_monomials(&relabel));
        }
    }
    Ok(w)
}

/// Leaves `a, b, c` of a monomial `z (a (b c))`.
fn match_z_a_bc(m: &Monomial) -> Option<(Indeterminate, Indeterminate, Indeterminate)> {
    let (z, rest) = m.factors()?;
    if z.as_leaf() != Some(&z_var()) {
        return None;
    }
    let (a, bc) = rest.factors()?;
    let (b, c) = bc.factors()?;
    Some((a.as_leaf()?.clone(), b.as_leaf()?.clone(), c.as_leaf()?.clone()))
}

/// Experimental: looks for a one-sided witness with the given `d` by linear
/// algebra in each component. Exact for the given presentation, but says
/// nothing when no witness of this form exists for this `d`.
pub fn search_witness(
    p: &VarietyPresentation,
    d: usize,
    limits: &Limits,
) -> Result<Option<SeparativityWitness>, IdentityError> {
    let field = p.field();
    let mut congruence = Congruence::new(p, limits.clone());
    let mut by_degree = MonomialsByDegree::new();
    let mut witness = SeparativityWitness::new(d);
    for u in bracketings(d + 2) {
        for side in [Side::Left, Side::Right] {
            let source = certificate_source(&u, side);
            let md = Multidegree::of(&source);
            let component = congruence.component(&md)?;
            // columns: monomials outside split form first, so reduction
            // pushes everything it can into the split-form block
            let all = by_degree.get(&md).to_vec();
            let (split, other): (Vec<Monomial>, Vec<Monomial>) =
                all.into_iter().partition(|m| is_split_form(&Polynomial::monomial(field, m.clone()), &u, side));
            let columns: Vec<Monomial> = other.into_iter().chain(split.iter().cloned()).collect();
            let index: BTreeMap<&Monomial, usize> = columns.iter().enumerate().map(|(i, m)| (m, i)).collect();
            let first_split = columns.len() - split.len();
            let as_row = |f: &Polynomial| SparseVec::from_entries(&field, f.terms().map(|(m, c)| (index[m], c.clone())));
            let mut e = Echelon::new(field);
            for b in component.basis() {
                e.insert(&as_row(b));
            }
            let r = e.reduce(&as_row(&Polynomial::monomial(field, source)));
            if r.iter().any(|(i, _)| *i < first_split) {
                return Ok(None);
            }
            let target = Polynomial::from_terms(field, r.iter().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (c.clone(), columns[*i].clone())));
            witness.insert(u.clone(), side, target);
        }
    }
    Ok(Some(witness))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::builtin_presentation;

    const Q: Field = Field::Rationals;

    #[test]
    fn builtin_witnesses_verify() {
        for name in ["associative", "lie", "jordan", "four-nilpotent-products"] {
            let p = builtin_presentation(name, Q).unwrap();
            let report = verify_witness(&p, &Limits::default()).unwrap();
            assert!(report.ok(), "{report}");
            let expected = if name == "jordan" { 4 } else if name == "four-nilpotent-products" { 1 } else { 2 };
            assert_eq!(report.checks.len(), expected);
        }
    }

    #[test]
    fn jordan_over_prime_fields() {
        for p in [3, 5, 7] {
            let pres = builtin_presentation("jordan", Field::Prime(p)).unwrap();
            assert!(verify_witness(&pres, &Limits::default()).unwrap().ok(), "GF({p})");
        }
    }

    #[test]
    fn broken_witness_fails_split_form() {
        let mut w = builtin_associative_witness(Q);
        let u: Monomial = "x1 x2".parse().unwrap();
        w.insert(u, Side::Right, Polynomial::parse(Q, "z (x1 x2)").unwrap());
        let p = builtin_presentation("associative", Q).unwrap().with_witness(w);
        let report = verify_witness(&p, &Limits::default()).unwrap();
        assert!(!report.ok());
        let bad: Vec<_> = report.failures().collect();
        assert_eq!(bad.len(), 1);
        assert!(!bad[0].split_form && bad[0].congruent);
        assert!(report.to_string().contains("NOT verified"));
    }

    #[test]
    fn wrong_certificate_fails_congruence() {
        let mut w = builtin_associative_witness(Q);
        w.insert("x1 x2".parse().unwrap(), Side::Left, Polynomial::parse(Q, "x2 (x1 z)").unwrap());
        let p = builtin_presentation("associative", Q).unwrap().with_witness(w);
        let report = verify_witness(&p, &Limits::default()).unwrap();
        let bad: Vec<_> = report.failures().collect();
        assert!(bad.len() == 1 && bad[0].split_form && !bad[0].congruent);
    }

    #[test]
    fn incomplete_witness() {
        let mut w = SeparativityWitness::new(1);
        w.insert("(x1 x2) x3".parse().unwrap(), Side::Left, Polynomial::zero(Q));
        assert!(matches!(w.ensure_complete(), Err(IdentityError::MissingCertificate { .. })));
        let p = builtin_presentation("pqr", Q).unwrap();
        assert!(matches!(verify_witness(&p, &Limits::default()), Err(IdentityError::NoWitness(_))));
    }

    #[test]
    fn jordan_coefficient_audit() {
        let lin = jordan_multilinear_identity(Q).unwrap();
        assert_eq!(lin.len(), 6);
        assert!(lin.terms().all(|(_, c)| *c == Q.from_i64(2) || *c == Q.from_i64(-2)));
        let pivot: Monomial = "z (x1 (x2 x3))".parse().unwrap();
        assert_eq!(lin.coeff(&pivot), Q.from_i64(-2));
        assert_eq!(lin.monomials().filter(|m| is_z_outside(m)).count(), 1);
        assert!(matches!(derive_jordan_witness(Field::Prime(2)), Err(IdentityError::Characteristic2(_))));
    }

    #[test]
    fn jordan_base_certificate() {
        let w = derive_jordan_witness(Q).unwrap();
        let u: Monomial = "x1 (x2 x3)".parse().unwrap();
        let t = w.get(&u, Side::Right).unwrap();
        assert!(is_split_form(t, &u, Side::Right));
        let expected = Polynomial::parse(
            Q,
            "(x1 x2) (x3 z) + (x1 x3) (x2 z) + (x1 z) (x2 x3) - x2 (x1 (x3 z)) - x3 (x1 (x2 z))",
        )
        .unwrap();
        assert_eq!(*t, expected);
    }

    #[test]
    fn search_recovers_witnesses() {
        let limits = Limits::default();
        let a = builtin_presentation("associative", Q).unwrap();
        let found = search_witness(&a, 0, &limits).unwrap().expect("associative is [1,1]-separative");
        let p = a.clone().with_witness(found);
        assert!(verify_witness(&p, &limits).unwrap().ok());
        let j = builtin_presentation("jordan", Q).unwrap();
        assert!(search_witness(&j, 0, &limits).unwrap().is_none());
        assert!(search_witness(&j, 1, &limits).unwrap().is_some());
        let pqr = builtin_presentation("pqr", Q).unwrap();
        assert!(search_witness(&pqr, 0, &limits).unwrap().is_none());
    }
}
