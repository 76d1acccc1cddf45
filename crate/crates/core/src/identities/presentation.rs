use std::collections::BTreeSet;
use std::fmt;

use super::witness::{
    builtin_associative_witness, builtin_four_nilpotent_witness, builtin_lie_witness, derive_jordan_witness,
    SeparativityWitness, Side,
};
use super::IdentityError;
use crate::field::Field;
use crate::monomial::{Indeterminate, Monomial};
use crate::poly::Polynomial;

/// A variety given by multihomogeneous identities, each asserted to be zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarietyPresentation {
    name: String,
    field: Field,
    identities: Vec<Polynomial>,
    witness: Option<SeparativityWitness>,
}

impl VarietyPresentation {
    /// Rejects identities that are not multihomogeneous.
    pub fn new(name: &str, field: Field, identities: Vec<Polynomial>) -> Result<Self, IdentityError> {
        for f in &identities {
            field.ensure_same(&f.field())?;
            if !f.is_multihomogeneous() {
                return Err(IdentityError::NotHomogeneous(f.to_string()));
            }
        }
        let identities = identities.into_iter().filter(|f| !f.is_zero()).collect();
        Ok(VarietyPresentation { name: name.to_string(), field, identities, witness: None })
    }

    pub fn with_witness(mut self, witness: SeparativityWitness) -> Self {
        self.witness = Some(witness);
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn identities(&self) -> &[Polynomial] {
        &self.identities
    }

    pub fn witness(&self) -> Option<&SeparativityWitness> {
        self.witness.as_ref()
    }

    /// Text form:
    ///
    /// ```text
    /// name associative
    /// field Q
    /// vars x1 x2 x3
    /// (x1 x2) x3 - x1 (x2 x3)
    /// witness d=0
    /// (x1 x2) L := x1 (x2 z)
    /// (x1 x2) R := (z x1) x2
    /// ```
    pub fn parse(text: &str) -> Result<Self, IdentityError> {
        let err = |line: usize, msg: String| IdentityError::Parse { line, msg };
        let mut name = String::from("custom");
        let mut field: Option<Field> = None;
        let mut vars: Option<BTreeSet<Indeterminate>> = None;
        let mut identities = Vec::new();
        let mut witness: Option<SeparativityWitness> = None;
        for (k, raw) in text.lines().enumerate() {
            let line_no = k + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let f = *field.get_or_insert(Field::Rationals);
            if let Some(rest) = line.strip_prefix("name ") {
                name = rest.trim().to_string();
            } else if let Some(rest) = line.strip_prefix("field ") {
                if !identities.is_empty() || witness.is_some() {
                    return Err(err(line_no, "field must come before identities".into()));
                }
                field = Some(Field::parse(rest.trim()).map_err(|e| err(line_no, e.to_string()))?);
            } else if let Some(rest) = line.strip_prefix("vars ") {
                vars = Some(rest.split_whitespace().map(Indeterminate::var).collect());
            } else if let Some(rest) = line.strip_prefix("witness") {
                let d = rest
                    .trim()
                    .strip_prefix("d=")
                    .and_then(|s| s.trim().parse().ok())
                    .ok_or_else(|| err(line_no, "expected 'witness d=<n>'".into()))?;
                witness = Some(SeparativityWitness::new(d));
            } else if let Some(w) = witness.as_mut() {
                let (lhs, rhs) =
                    line.split_once(":=").ok_or_else(|| err(line_no, "expected '<shape> <L|R|P> := <polynomial>'".into()))?;
                let lhs = lhs.trim();
                let (shape, side) = lhs
                    .rsplit_once(char::is_whitespace)
                    .and_then(|(s, side)| Some((s, Side::from_letter(side)?)))
                    .ok_or_else(|| err(line_no, "expected a side L, R or P after the shape".into()))?;
                let shape: Monomial = shape.trim().parse().map_err(|e: crate::MonomialError| err(line_no, e.to_string()))?;
                let target = Polynomial::parse(f, rhs.trim()).map_err(|e| err(line_no, e.to_string()))?;
                w.insert(shape, side, target);
            } else {
                let id = Polynomial::parse(f, line).map_err(|e| err(line_no, e.to_string()))?;
                if let Some(declared) = &vars {
                    if let Some(v) = id.variables().into_iter().find(|v| !declared.contains(v)) {
                        return Err(err(line_no, format!("variable {v} is not declared in the vars line")));
                    }
                }
                if !id.is_multihomogeneous() {
                    return Err(err(line_no, IdentityError::NotHomogeneous(id.to_string()).to_string()));
                }
                identities.push(id);
            }
        }
        let p = VarietyPresentation::new(&name, field.unwrap_or(Field::Rationals), identities)?;
        Ok(match witness {
            Some(w) => p.with_witness(w),
            None => p,
        })
    }
}

impl fmt::Display for VarietyPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "name {}", self.name)?;
        writeln!(f, "field {}", self.field)?;
        let vars: BTreeSet<Indeterminate> = self.identities.iter().flat_map(|i| i.variables()).collect();
        if !vars.is_empty() {
            let names: Vec<String> = vars.iter().map(|v| v.to_string()).collect();
            writeln!(f, "vars {}", names.join(" "))?;
        }
        for id in &self.identities {
            writeln!(f, "{id}")?;
        }
        if let Some(w) = &self.witness {
            writeln!(f, "witness d={}", w.d())?;
            for (shape, side, target) in w.certificates() {
                writeln!(f, "{shape} {side} := {target}")?;
            }
        }
        Ok(())
    }
}

pub const BUILTIN_NAMES: &[&str] = &[
    "associative",
    "lie",
    "jordan",
    "four-nilpotent-products",
    "pqr",
    "commutative-pqr",
    "alternating-pqr",
];

/// The standard presentations, with witnesses where one is known.
pub fn builtin_presentation(name: &str, field: Field) -> Result<VarietyPresentation, IdentityError> {
    let ids = |list: &[&str]| -> Vec<Polynomial> {
        list.iter().map(|s| Polynomial::parse(field, s).expect("valid builtin identity")).collect()
    };
    let p = match name {
        "associative" => VarietyPresentation::new(name, field, ids(&["(x1 x2) x3 - x1 (x2 x3)"]))?
            .with_witness(builtin_associative_witness(field)),
        "lie" => VarietyPresentation::new(
            name,
            field,
            ids(&["x1 x1", "x1 x2 + x2 x1", "(x1 x2) x3 + (x2 x3) x1 + (x3 x1) x2"]),
        )?
        .with_witness(builtin_lie_witness(field)),
        "jordan" => {
            let w = derive_jordan_witness(field)?;
            VarietyPresentation::new(name, field, ids(&["x1 x2 - x2 x1", "(x1 x2)(x1 x1) - x1 (x2 (x1 x1))"]))?
                .with_witness(w)
        }
        "four-nilpotent-products" => VarietyPresentation::new(name, field, ids(&["(x1 x2)(x3 x4)"]))?
            .with_witness(builtin_four_nilpotent_witness(field)),
        "pqr" => VarietyPresentation::new(name, field, ids(&["((x1 x2) x3) x4", "x4 ((x1 x2) x3)"]))?,
        "commutative-pqr" => {
            VarietyPresentation::new(name, field, ids(&["x1 x2 - x2 x1", "((x1 x2)(x3 x4)) x5"]))?
        }
        "alternating-pqr" => {
            VarietyPresentation::new(name, field, ids(&["x1 x1", "x1 x2 + x2 x1", "((x1 x2)(x3 x4)) x5"]))?
        }
        other => return Err(IdentityError::UnknownPresentation(other.to_string())),
    };
    Ok(p)
}
