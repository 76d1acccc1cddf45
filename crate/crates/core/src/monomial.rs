//! Bracketed nonassociative monomials.
//!
//! A monomial is a full binary tree whose leaves are indeterminates. There is
//! no empty monomial. Every monomial of length greater than one factors
//! uniquely as `w = w' w''`, and the submonomials of `w` are `w` together with
//! the submonomials of `w'` and `w''`, counted by position.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

use crate::config::Limits;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonomialError {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("cannot split a monomial of length {len} into {m} factors")]
    TooManyFactors { len: usize, m: usize },
    #[error("length {0} exceeds the enumeration cap of {1}")]
    LengthCap(usize, usize),
    #[error("range [{0}, {1}] is empty")]
    EmptyRange(usize, usize),
    #[error("invalid enumeration request: {0}")]
    BadEnumeration(String),
}

/// A named variable. Names order naturally: alphabetic prefix first, then the
/// numeric suffix as a number, so `x2 < x10`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Var(Arc<str>);

impl Var {
    pub fn new(name: &str) -> Var {
        Var(Arc::from(name))
    }

    /// The variable `x{i}`.
    pub fn x(i: usize) -> Var {
        Var::new(&format!("x{i}"))
    }

    pub fn name(&self) -> &str {
        &self.0
    }

    fn sort_key(&self) -> (&str, Option<u64>) {
        let s: &str = &self.0;
        let split = s.trim_end_matches(|c: char| c.is_ascii_digit()).len();
        let (prefix, digits) = s.split_at(split);
        (prefix, digits.parse().ok())
    }
}

impl Ord for Var {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key()
            .cmp(&other.sort_key())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Var {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A leaf symbol: an ordinary variable or the distinguished placeholder `y`.
/// Variables sort before the placeholder.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Indeterminate {
    Var(Var),
    Placeholder,
}

impl Indeterminate {
    pub fn var(name: &str) -> Indeterminate {
        if name == PLACEHOLDER_NAME {
            Indeterminate::Placeholder
        } else {
            Indeterminate::Var(Var::new(name))
        }
    }

    pub fn x(i: usize) -> Indeterminate {
        Indeterminate::Var(Var::x(i))
    }

    pub fn is_placeholder(&self) -> bool {
        matches!(self, Indeterminate::Placeholder)
    }
}

pub const PLACEHOLDER_NAME: &str = "y";

impl fmt::Display for Indeterminate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Indeterminate::Var(v) => write!(f, "{v}"),
            Indeterminate::Placeholder => f.write_str(PLACEHOLDER_NAME),
        }
    }
}

#[derive(Debug, PartialEq, Eq, Hash)]
enum Node {
    Leaf(Indeterminate),
    Product { left: Monomial, right: Monomial, len: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Arc<Node>);

/// Step from a product node to one of its factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dir {
    Left,
    Right,
}

/// Left/right path from the root to a submonomial occurrence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Path(pub Vec<Dir>);

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("root");
        }
        for d in &self.0 {
            f.write_str(match d {
                Dir::Left => "L",
                Dir::Right => "R",
            })?;
        }
        Ok(())
    }
}

/// Result of [`Monomial::split_into_factors`]: `shape` is a monomial in
/// `x1..xm` (each exactly once, in order) and substituting `factors[i-1]`
/// for `xi` gives back the original monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub shape: Monomial,
    pub factors: Vec<Monomial>,
}

impl Factorization {
    pub fn recombine(&self) -> Monomial {
        self.shape.map_leaves(&mut |ind| match ind {
            Indeterminate::Var(v) => {
                let i: usize = v.name()[1..].parse().expect("shape leaves are x1..xm");
                self.factors[i - 1].clone()
            }
            Indeterminate::Placeholder => unreachable!("shapes carry no placeholder"),
        })
    }
}

/// A one-placeholder context `u` and the submonomial `inner` it wraps:
/// `u[y := inner]` is the monomial the pair was extracted from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Context {
    pub path: Path,
    pub context: Monomial,
    pub inner: Monomial,
}

impl Monomial {
    pub fn leaf(ind: Indeterminate) -> Monomial {
        Monomial(Arc::new(Node::Leaf(ind)))
    }

    pub fn var(name: &str) -> Monomial {
        Monomial::leaf(Indeterminate::var(name))
    }

    pub fn x(i: usize) -> Monomial {
        Monomial::leaf(Indeterminate::x(i))
    }

    pub fn placeholder() -> Monomial {
        Monomial::leaf(Indeterminate::Placeholder)
    }

    pub fn product(left: &Monomial, right: &Monomial) -> Monomial {
        let len = left.len() + right.len();
        Monomial(Arc::new(Node::Product { left: left.clone(), right: right.clone(), len }))
    }

    pub fn len(&self) -> usize {
        match &*self.0 {
            Node::Leaf(_) => 1,
            Node::Product { len, .. } => *len,
        }
    }

    /// Always false: there is no empty monomial.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_leaf(&self) -> bool {
        matches!(&*self.0, Node::Leaf(_))
    }

    pub fn as_leaf(&self) -> Option<&Indeterminate> {
        match &*self.0 {
            Node::Leaf(i) => Some(i),
            Node::Product { .. } => None,
        }
    }

    /// The unique factorization `w = w' w''`, if `w` is not a leaf.
    pub fn factors(&self) -> Option<(&Monomial, &Monomial)> {
        match &*self.0 {
            Node::Leaf(_) => None,
            Node::Product { left, right, .. } => Some((left, right)),
        }
    }

    pub fn node_count(&self) -> usize {
        match self.factors() {
            None => 1,
            Some((l, r)) => 1 + l.node_count() + r.node_count(),
        }
    }

    /// Leaves from left to right.
    pub fn leaves(&self) -> Vec<&Indeterminate> {
        let mut out = Vec::with_capacity(self.len());
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<&'a Indeterminate>) {
        match &*self.0 {
            Node::Leaf(i) => out.push(i),
            Node::Product { left, right, .. } => {
                left.collect_leaves(out);
                right.collect_leaves(out);
            }
        }
    }

    pub fn placeholder_count(&self) -> usize {
        self.leaves().iter().filter(|i| i.is_placeholder()).count()
    }

    /// All submonomial occurrences, `self` first, then those of the left factor,
    /// then those of the right factor. There are `2 * len - 1` of them.
    pub fn submonomial_occurrences(&self) -> Vec<(Path, Monomial)> {
        let mut out = Vec::with_capacity(2 * self.len() - 1);
        let mut path = Vec::new();
        self.collect_occurrences(&mut path, &mut out);
        out
    }

    fn collect_occurrences(&self, path: &mut Vec<Dir>, out: &mut Vec<(Path, Monomial)>) {
        out.push((Path(path.clone()), self.clone()));
        if let Some((l, r)) = self.factors() {
            path.push(Dir::Left);
            l.collect_occurrences(path, out);
            path.pop();
            path.push(Dir::Right);
            r.collect_occurrences(path, out);
            path.pop();
        }
    }

    /// Distinct lengths of submonomials, descending.
    pub fn submonomial_lengths(&self) -> Vec<usize> {
        let mut seen = vec![false; self.len() + 1];
        self.mark_lengths(&mut seen);
        (1..=self.len()).rev().filter(|&l| seen[l]).collect()
    }

    fn mark_lengths(&self, seen: &mut [bool]) {
        seen[self.len()] = true;
        if let Some((l, r)) = self.factors() {
            l.mark_lengths(seen);
            r.mark_lengths(seen);
        }
    }

    fn has_submonomial_of_length(&self, target: usize) -> bool {
        let len = self.len();
        if len == target {
            return true;
        }
        if len < target {
            return false;
        }
        match self.factors() {
            None => false,
            Some((l, r)) => l.has_submonomial_of_length(target) || r.has_submonomial_of_length(target),
        }
    }

    /// `w` has a submonomial of length exactly `len(w) - m`.
    pub fn is_m_separating(&self, m: usize) -> bool {
        m < self.len() && self.has_submonomial_of_length(self.len() - m)
    }

    /// `m`-separating for some `m` in `[lo, hi]`.
    pub fn is_range_separating(&self, lo: usize, hi: usize) -> Result<bool, MonomialError> {
        if lo > hi {
            return Err(MonomialError::EmptyRange(lo, hi));
        }
        Ok(self.is_range_separating_unchecked(lo, hi))
    }

    pub(crate) fn is_range_separating_unchecked(&self, lo: usize, hi: usize) -> bool {
        (lo..=hi.min(self.len().saturating_sub(1))).any(|m| self.is_m_separating(m))
    }

    /// Every `m` for which `w` is `m`-separating, ascending.
    pub fn separating_profile(&self) -> Vec<usize> {
        let len = self.len();
        let mut out: Vec<usize> = self.submonomial_lengths().into_iter().map(|l| len - l).collect();
        out.sort_unstable();
        out
    }

    /// Writes `w` as a bracketed product of exactly `m` submonomials by
    /// repeatedly splitting the leftmost factor of length > 1.
    pub fn split_into_factors(&self, m: usize) -> Result<Factorization, MonomialError> {
        if m == 0 || m > self.len() {
            return Err(MonomialError::TooManyFactors { len: self.len(), m });
        }
        // the leftmost-first rule amounts to a preorder walk that keeps
        // expanding until the factor count reaches m
        let mut count = 1usize;
        let mut factors = Vec::with_capacity(m);
        let shape = self.split_walk(m, &mut count, &mut factors);
        Ok(Factorization { shape, factors })
    }

    fn split_walk(&self, m: usize, count: &mut usize, factors: &mut Vec<Monomial>) -> Monomial {
        match self.factors() {
            Some((l, r)) if *count < m => {
                *count += 1;
                let ls = l.split_walk(m, count, factors);
                let rs = r.split_walk(m, count, factors);
                Monomial::product(&ls, &rs)
            }
            _ => {
                factors.push(self.clone());
                Monomial::x(factors.len())
            }
        }
    }

    pub fn subterm(&self, path: &Path) -> Option<&Monomial> {
        let mut cur = self;
        for d in &path.0 {
            let (l, r) = cur.factors()?;
            cur = match d {
                Dir::Left => l,
                Dir::Right => r,
            };
        }
        Some(cur)
    }

    /// Replaces the occurrence at `path` with `replacement`.
    pub fn replace_at(&self, path: &[Dir], replacement: &Monomial) -> Monomial {
        match path.split_first() {
            None => replacement.clone(),
            Some((d, rest)) => {
                let (l, r) = self.factors().expect("path leads through a product node");
                match d {
                    Dir::Left => Monomial::product(&l.replace_at(rest, replacement), r),
                    Dir::Right => Monomial::product(l, &r.replace_at(rest, replacement)),
                }
            }
        }
    }

    /// One entry per occurrence of a submonomial of length `len`, in
    /// occurrence order. Each context carries the placeholder exactly once
    /// when `self` has none.
    pub fn contexts(&self, len: usize) -> Vec<Context> {
        self.submonomial_occurrences()
            .into_iter()
            .filter(|(_, sub)| sub.len() == len)
            .map(|(path, inner)| Context {
                context: self.replace_at(&path.0, &Monomial::placeholder()),
                path,
                inner,
            })
            .collect()
    }

    /// Rebuilds the tree with every leaf replaced by `f(leaf)`.
    pub fn map_leaves(&self, f: &mut impl FnMut(&Indeterminate) -> Monomial) -> Monomial {
        match &*self.0 {
            Node::Leaf(i) => f(i),
            Node::Product { left, right, .. } => {
                let l = left.map_leaves(f);
                let r = right.map_leaves(f);
                Monomial::product(&l, &r)
            }
        }
    }

    pub fn substitute_placeholder(&self, inner: &Monomial) -> Monomial {
        self.map_leaves(&mut |i| match i {
            Indeterminate::Placeholder => inner.clone(),
            other => Monomial::leaf(other.clone()),
        })
    }

    /// Same tree with leaves renamed to `#1, #2, ...` from left to right,
    /// together with the original leaves. Two monomials with equal shapes
    /// differ only by a leaf substitution.
    pub fn positional(&self) -> (Monomial, Vec<Indeterminate>) {
        let leaves: Vec<Indeterminate> = self.leaves().into_iter().cloned().collect();
        let mut k = 0usize;
        let shape = self.map_leaves(&mut |_| {
            k += 1;
            Monomial::leaf(positional_var(k))
        });
        (shape, leaves)
    }

    /// The monomial with every product node's children in canonical order,
    /// i.e. a normal form modulo commutativity.
    pub fn commutative_normal_form(&self) -> Monomial {
        match self.factors() {
            None => self.clone(),
            Some((l, r)) => {
                let (l, r) = (l.commutative_normal_form(), r.commutative_normal_form());
                if l <= r {
                    Monomial::product(&l, &r)
                } else {
                    Monomial::product(&r, &l)
                }
            }
        }
    }

    fn preorder<'a>(&'a self, out: &mut Vec<Token<'a>>) {
        match &*self.0 {
            Node::Leaf(i) => out.push(Token::Leaf(i)),
            Node::Product { left, right, .. } => {
                out.push(Token::Product);
                left.preorder(out);
                right.preorder(out);
            }
        }
    }
}

/// Internal leaf names used by [`Monomial::positional`]; they cannot be
/// produced by the parser.
pub(crate) fn positional_var(k: usize) -> Indeterminate {
    Indeterminate::Var(Var::new(&format!("#{k}")))
}

#[derive(PartialEq, Eq, PartialOrd, Ord)]
enum Token<'a> {
    Product,
    Leaf(&'a Indeterminate),
}

impl Ord for Monomial {
    /// Length first, then lexicographic on the preorder traversal with
    /// product markers before leaves.
    fn cmp(&self, other: &Self) -> Ordering {
        if Arc::ptr_eq(&self.0, &other.0) {
            return Ordering::Equal;
        }
        self.len().cmp(&other.len()).then_with(|| {
            let (mut a, mut b) = (Vec::new(), Vec::new());
            self.preorder(&mut a);
            other.preorder(&mut b);
            a.cmp(&b)
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            Node::Leaf(i) => write!(f, "{i}"),
            Node::Product { left, right, .. } => write!(f, "({left} {right})"),
        }
    }
}

impl FromStr for Monomial {
    type Err = MonomialError;

    fn from_str(s: &str) -> Result<Monomial, MonomialError> {
        let mut p = Parser { src: s.as_bytes(), pos: 0 };
        let m = p.sequence(false)?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.err("unexpected trailing input"));
        }
        Ok(m)
    }
}

pub(crate) struct Parser<'a> {
    pub(crate) src: &'a [u8],
    pub(crate) pos: usize,
}

impl Parser<'_> {
    pub(crate) fn err(&self, msg: &str) -> MonomialError {
        MonomialError::Parse { pos: self.pos, msg: msg.to_string() }
    }

    pub(crate) fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    pub(crate) fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn ident(&mut self) -> Result<&str, MonomialError> {
        self.skip_ws();
        let start = self.pos;
        match self.src.get(self.pos) {
            Some(c) if c.is_ascii_alphabetic() => self.pos += 1,
            _ => return Err(self.err("expected a variable or '('")),
        }
        while let Some(c) = self.src.get(self.pos) {
            if c.is_ascii_alphanumeric() || *c == b'_' {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii"))
    }

    fn atom(&mut self) -> Result<Monomial, MonomialError> {
        if self.peek() == Some(b'(') {
            self.pos += 1;
            let m = self.sequence(true)?;
            if self.peek() != Some(b')') {
                return Err(self.err("expected ')'"));
            }
            self.pos += 1;
            Ok(m)
        } else {
            let name = self.ident()?;
            Ok(Monomial::var(name))
        }
    }

    /// One atom, or two juxtaposed atoms forming a product. Inside
    /// parentheses exactly two are required.
    pub(crate) fn sequence(&mut self, parenthesized: bool) -> Result<Monomial, MonomialError> {
        let first = self.atom()?;
        match self.peek() {
            Some(c) if c == b'(' || c.is_ascii_alphabetic() => {
                let second = self.atom()?;
                match self.peek() {
                    Some(c) if c == b'(' || c.is_ascii_alphabetic() => {
                        Err(self.err("a product has exactly two factors"))
                    }
                    _ => Ok(Monomial::product(&first, &second)),
                }
            }
            _ if parenthesized => Err(self.err("a parenthesized monomial needs two factors")),
            _ => Ok(first),
        }
    }
}

/// All bracketings of `len` anonymous leaves, each leaf given as `x1..xlen`
/// from left to right.
pub fn bracketings(len: usize) -> Vec<Monomial> {
    fn go(lo: usize, hi: usize) -> Vec<Monomial> {
        if lo == hi {
            return vec![Monomial::x(lo)];
        }
        let mut out = Vec::new();
        for mid in lo..hi {
            let (ls, rs) = (go(lo, mid), go(mid + 1, hi));
            for l in &ls {
                for r in &rs {
                    out.push(Monomial::product(l, r));
                }
            }
        }
        out
    }
    if len == 0 {
        return Vec::new();
    }
    let mut out = go(1, len);
    out.sort();
    out
}

/// All monomials of length `len` with leaves drawn from `vars`, containing
/// the placeholder exactly `placeholder_count` times (0 or 1). Sorted in the
/// canonical order, no duplicates.
pub fn enumerate_monomials(
    vars: &[Indeterminate],
    len: usize,
    placeholder_count: usize,
    limits: &Limits,
) -> Result<Vec<Monomial>, MonomialError> {
    if len > limits.max_enumeration_length {
        return Err(MonomialError::LengthCap(len, limits.max_enumeration_length));
    }
    if len == 0 || placeholder_count > 1 || placeholder_count > len {
        return Err(MonomialError::BadEnumeration(format!(
            "length {len} with {placeholder_count} placeholders"
        )));
    }
    let mut letters: Vec<Indeterminate> = vars.iter().filter(|v| !v.is_placeholder()).cloned().collect();
    letters.sort();
    letters.dedup();
    let free = len - placeholder_count;
    if free > 0 && letters.is_empty() {
        return Ok(Vec::new());
    }
    // table[l][p]: monomials of length l with p placeholders, built from
    // shared factors so each entry costs a single node
    let mut table: Vec<[Vec<Monomial>; 2]> = vec![[Vec::new(), Vec::new()]];
    table.push([letters.iter().cloned().map(Monomial::leaf).collect(), vec![Monomial::placeholder()]]);
    for l in 2..=len {
        let mut cell = [Vec::new(), Vec::new()];
        for (p, slot) in cell.iter_mut().enumerate().take(placeholder_count + 1) {
            for a in 1..l {
                for pl in 0..=p {
                    for left in &table[a][pl] {
                        for right in &table[l - a][p - pl] {
                            slot.push(Monomial::product(left, right));
                        }
                    }
                }
            }
        }
        table.push(cell);
    }
    let out = std::mem::take(&mut table[len][placeholder_count]);
    drop(table);
    // sort on a compact preorder key (0 for a product, 1 + rank for a leaf),
    // which orders exactly like `Ord` for equal lengths
    let mut alphabet = letters;
    if placeholder_count == 1 {
        alphabet.push(Indeterminate::Placeholder);
    }
    alphabet.sort();
    fn key(m: &Monomial, alphabet: &[Indeterminate], out: &mut Vec<u32>) {
        match &*m.0 {
            Node::Leaf(i) => out.push(1 + alphabet.iter().position(|a| a == i).expect("leaf in alphabet") as u32),
            Node::Product { left, right, .. } => {
                out.push(0);
                key(left, alphabet, out);
                key(right, alphabet, out);
            }
        }
    }
    let mut keyed: Vec<(Vec<u32>, Monomial)> = out
        .into_iter()
        .map(|m| {
            let mut k = Vec::with_capacity(2 * len - 1);
            key(&m, &alphabet, &mut k);
            (k, m)
        })
        .collect();
    keyed.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    Ok(keyed.into_iter().map(|(_, m)| m).collect())
}
