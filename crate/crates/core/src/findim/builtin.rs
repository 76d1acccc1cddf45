//! Concrete members of the standard varieties, used as evaluation oracles.

use super::algebra::{StructAlgebra, Subspace};
use super::AlgebraError;
use crate::field::Field;
use crate::linalg::SparseVec;

fn unit_label(i: usize, j: usize) -> String {
    format!("E{}_{}", i + 1, j + 1)
}

/// Strictly upper triangular `k x k` matrices with the matrix product.
pub fn strict_upper_triangular(k: usize, field: Field) -> StructAlgebra {
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect();
    matrix_units(field, &pairs)
}

/// All `k x k` matrices with the matrix product.
pub fn full_matrix(k: usize, field: Field) -> StructAlgebra {
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).collect();
    matrix_units(field, &pairs)
}

/// Algebra on the matrix units `E_ij` for the given (product-closed) index pairs.
fn matrix_units(field: Field, pairs: &[(usize, usize)]) -> StructAlgebra {
    let labels = pairs.iter().map(|&(i, j)| unit_label(i, j)).collect();
    let mut a = StructAlgebra::new(field, labels);
    for (x, &(i, j)) in pairs.iter().enumerate() {
        for (y, &(j2, l)) in pairs.iter().enumerate() {
            if j == j2 {
                let z = pairs.iter().position(|&pr| pr == (i, l)).expect("index pairs closed under products");
                a.set_product(x, y, SparseVec::unit(z));
            }
        }
    }
    a
}

/// Same space with the product replaced by `g(ab, ba)`.
fn derived_product(alg: &StructAlgebra, g: impl Fn(&SparseVec, &SparseVec) -> SparseVec) -> StructAlgebra {
    let mut out = StructAlgebra::new(alg.field(), alg.labels().to_vec());
    let dim = alg.dim();
    for i in 0..dim {
        for j in 0..dim {
            out.set_product(i, j, g(alg.basis_product(i, j), alg.basis_product(j, i)));
        }
    }
    out
}

/// The commutator algebra, `[a, b] = ab - ba`.
pub fn lie_from_associative(alg: &StructAlgebra) -> StructAlgebra {
    let f = alg.field();
    derived_product(alg, |ab, ba| ab.sub(&f, ba))
}

/// The symmetrized product `(ab + ba) / 2`.
pub fn jordan_from_associative(alg: &StructAlgebra) -> Result<StructAlgebra, AlgebraError> {
    let f = alg.field();
    if f.characteristic() == 2 {
        return Err(AlgebraError::Characteristic2("the symmetrized product"));
    }
    let half = f.inv(&f.from_i64(2)).expect("2 is invertible");
    Ok(derived_product(alg, |ab, ba| ab.add(&f, ba).scale(&f, &half)))
}

/// Symmetric `k x k` matrices under the symmetrized product, a special
/// Jordan algebra. Basis `S{i}_{j}` (`i <= j`) is `E_ij + E_ji`, or `E_ii` on the diagonal.
pub fn symmetric_jordan(k: usize, field: Field) -> Result<StructAlgebra, AlgebraError> {
    let jordan = jordan_from_associative(&full_matrix(k, field))?;
    let index = |i: usize, j: usize| i * k + j;
    let vectors = (0..k).flat_map(|i| {
        (i..k).map(move |j| {
            if i == j {
                SparseVec::unit(index(i, i))
            } else {
                SparseVec::from_entries(&field, [(index(i, j), field.one()), (index(j, i), field.one())])
            }
        })
    });
    let sym = Subspace::span(field, k * k, vectors);
    let labels = sym.pivots().map(|c| format!("S{}_{}", c / k + 1, c % k + 1)).collect();
    jordan.restrict(&sym, labels)
}

/// `dim`-dimensional algebra with zero multiplication.
pub fn zero_mult(dim: usize, field: Field) -> StructAlgebra {
    StructAlgebra::new(field, (1..=dim).map(|i| format!("e{i}")).collect())
}

/// Names accepted by [`by_name`].
pub const NAMES: &[&str] = &["upper-triangular", "matrix", "lie-upper-triangular", "jordan-symmetric", "zero"];

/// Builtin algebra by name, with the size parameter `k` (matrix size, or the
/// dimension for `zero`).
pub fn by_name(name: &str, k: usize, field: Field) -> Result<StructAlgebra, AlgebraError> {
    match name {
        "upper-triangular" => Ok(strict_upper_triangular(k, field)),
        "matrix" => Ok(full_matrix(k, field)),
        "lie-upper-triangular" => Ok(lie_from_associative(&strict_upper_triangular(k, field))),
        "jordan-symmetric" => symmetric_jordan(k, field),
        "zero" => Ok(zero_mult(k, field)),
        other => Err(AlgebraError::Parse { line: 0, msg: format!("unknown builtin algebra {other:?}; known: {}", NAMES.join(", ")) }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::findim::{is_nilpotent, satisfies_identity};
    use crate::poly::Polynomial;

    const Q: Field = Field::Rationals;

    fn holds(a: &StructAlgebra, s: &str) -> bool {
        satisfies_identity(a, &Polynomial::parse(a.field(), s).unwrap()).unwrap()
    }

    #[test]
    fn upper_triangular() {
        let a = strict_upper_triangular(3, Q);
        assert_eq!(a.dim(), 3);
        assert_eq!(is_nilpotent(&a), (true, Some(3)));
        assert!(holds(&a, "(x1 x2) x3 - x1 (x2 x3)"));
        assert!(!holds(&a, "x1 x2 - x2 x1"));
    }

    #[test]
    fn lie_bracket_satisfies_jacobi() {
        let l = lie_from_associative(&strict_upper_triangular(4, Q));
        assert!(holds(&l, "(x1 x2) x3 + (x2 x3) x1 + (x3 x1) x2"));
        assert!(holds(&l, "x x"));
        assert!(!holds(&l, "(x1 x2) x3 - x1 (x2 x3)"));
    }

    #[test]
    fn jordan_matrices() {
        let j = symmetric_jordan(3, Q).unwrap();
        assert_eq!(j.dim(), 6);
        assert!(j.is_commutative());
        assert!(holds(&j, "(x w)(x x) - x (w (x x))"));
        assert!(!holds(&j, "(x1 x2) x3 - x1 (x2 x3)"));
        assert_eq!(symmetric_jordan(2, Field::Prime(2)), Err(AlgebraError::Characteristic2("the symmetrized product")));
    }

    #[test]
    fn jordan_identity_over_small_prime() {
        // degree 3 in x over GF(3): decided without linearization
        let j = jordan_from_associative(&full_matrix(2, Field::Prime(3))).unwrap();
        assert!(holds(&j, "(x w)(x x) - x (w (x x))"));
    }
}
