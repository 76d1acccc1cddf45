//! Rewriting and congruence checked against evaluation in concrete algebras
//! known to lie in each variety.

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use separative::findim::builtin::{lie_from_associative, strict_upper_triangular, symmetric_jordan};
use separative::findim::{evaluate, satisfies_identity, Element, StructAlgebra};
use separative::identities::{builtin_presentation, jordan_multilinear_identity, t_ideal_component, Rewriter};
use separative::monomial::bracketings;
use separative::{Field, Indeterminate, Limits, Multidegree, Polynomial};

const Q: Field = Field::Rationals;

fn random_assignment(alg: &StructAlgebra, vars: usize, rng: &mut ChaCha8Rng) -> BTreeMap<Indeterminate, Element> {
    (1..=vars).map(|k| (Indeterminate::x(k), alg.random_element(rng, 6, true))).collect()
}

fn check_rewrites(variety: &str, alg: &StructAlgebra, max_len: usize, samples: usize) {
    let p = builtin_presentation(variety, Q).unwrap();
    let mut rw = Rewriter::new(&p).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0xA11CE);
    for len in 2..=max_len {
        for w in bracketings(len) {
            for n in 1..len {
                let lhs = Polynomial::monomial(Q, w.clone());
                let rhs = rw.separate_n(&w, n).unwrap();
                for _ in 0..samples {
                    let a = random_assignment(alg, len, &mut rng);
                    assert_eq!(evaluate(&lhs, alg, &a).unwrap(), evaluate(&rhs, alg, &a).unwrap(), "{variety}: {w}, n = {n}");
                }
            }
        }
    }
}

#[test]
fn associative_rewrites_hold_in_triangular_matrices() {
    check_rewrites("associative", &strict_upper_triangular(4, Q), 5, 5);
}

#[test]
fn lie_rewrites_hold_in_the_bracket_algebra() {
    check_rewrites("lie", &lie_from_associative(&strict_upper_triangular(4, Q)), 5, 5);
}

#[test]
fn jordan_rewrites_hold_in_symmetric_matrices() {
    check_rewrites("jordan", &symmetric_jordan(3, Q).unwrap(), 5, 3);
}

/// The Heisenberg algebra under the bracket has `[A, A]` central, so
/// products of two products vanish.
#[test]
fn four_nilpotent_rewrites_hold_in_heisenberg() {
    let heis = lie_from_associative(&strict_upper_triangular(3, Q));
    assert!(satisfies_identity(&heis, &Polynomial::parse(Q, "(x1 x2)(x3 x4)").unwrap()).unwrap());
    check_rewrites("four-nilpotent-products", &heis, 5, 3);
}

#[test]
fn jordan_linearization_vanishes_on_symmetric_matrices() {
    let alg = symmetric_jordan(3, Q).unwrap();
    let lin = jordan_multilinear_identity(Q).unwrap();
    let half = Q.from_ratio(1, 2).unwrap();
    let identity = lin.scale(&half);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let vars = identity.variables();
    for _ in 0..100 {
        let a: BTreeMap<_, _> = vars.iter().map(|v| (v.clone(), alg.random_element(&mut rng, 9, true))).collect();
        assert!(evaluate(&identity, &alg, &a).unwrap().is_zero());
    }
}

/// Soundness of the T-ideal component: every spanning element is an
/// identity of an algebra in the variety.
#[test]
fn t_ideal_elements_vanish_in_models() {
    let limits = Limits::default();
    let cases: Vec<(&str, StructAlgebra)> = vec![
        ("associative", strict_upper_triangular(4, Q)),
        ("lie", lie_from_associative(&strict_upper_triangular(4, Q))),
        ("jordan", symmetric_jordan(2, Q).unwrap()),
    ];
    let x = |k| Indeterminate::x(k);
    let degrees = [
        Multidegree::multilinear(&[x(1), x(2), x(3), x(4)]),
        Multidegree::from_counts([(x(1), 2), (x(2), 1)]),
        Multidegree::from_counts([(x(1), 2), (x(2), 2)]),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for (name, alg) in &cases {
        let p = builtin_presentation(name, Q).unwrap();
        for md in &degrees {
            let comp = t_ideal_component(&p, md, &limits).unwrap();
            assert!(comp.dim() > 0, "{name} {md}");
            for f in comp.basis() {
                for _ in 0..3 {
                    let a = random_assignment(alg, 4, &mut rng);
                    assert!(evaluate(f, alg, &a).unwrap().is_zero(), "{name}: {f}");
                }
            }
        }
    }
}
