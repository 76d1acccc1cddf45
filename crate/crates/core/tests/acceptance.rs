//! Acceptance suite: one line per criterion, `[PASS]` or `[FAIL]`, with the
//! elapsed time against its budget. Every check is exact (rational or prime
//! field arithmetic), so there are no numeric tolerances; randomized parts use
//! the fixed seeds below. Exits nonzero if any criterion fails.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use separative::findim::builtin::{self, lie_from_associative, strict_upper_triangular, symmetric_jordan};
use separative::findim::{
    check_identity, derived_series, evaluate, is_nilpotent, is_solvable, CheckStrategy, Element, LowerFiltration,
    StructAlgebra,
};
use separative::identities::{
    builtin_presentation, jordan_multilinear_identity, verify_witness, Rewriter, SeparativityWitness, Side,
    VarietyPresentation, BUILTIN_NAMES,
};
use separative::linalg::SparseVec;
use separative::monomial::{bracketings, enumerate_monomials, Monomial};
use separative::tower::{
    build_free_nilpotent_assoc, build_pqr, build_pqr_alt, build_pqr_comm, separation_defect, Family, Level, RMatrix,
    TruncatedTower,
};
use separative::{Field, Indeterminate, Limits, Multidegree, Polynomial};

const Q: Field = Field::Rationals;

/// Seed for every randomized criterion.
const SEED: u64 = 0x5EED_0001;
/// Random rational assignments per (monomial, n) pair in criterion 3.
const SEMANTIC_SAMPLES: usize = 100;
/// Random pairs per pqr level in criterion 7.
const RANK_PAIRS: usize = 1000;
/// Random Jordan evaluation points in criterion 5.
const JORDAN_POINTS: usize = 100;
/// Items in the round-trip corpus of criterion 10.
const CORPUS_SIZE: usize = 200;
/// Separation defects of the pqr tower at levels 3..=8 (n = 2), recorded
/// from the first run of the subspace computation.
const PQR_DEFECTS: [usize; 6] = [2, 3, 4, 5, 6, 7];

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn x(k: usize) -> Indeterminate {
    Indeterminate::x(k)
}

// ── 1 ─────────────────────────────────────────────────────────────────

/// Submonomial lengths read off the printed form: every parenthesized group
/// is a product submonomial, and its length is the number of letters inside.
/// `out[l]` is set when some submonomial has length `l`.
fn lengths_from_text(text: &str, out: &mut Vec<bool>) {
    out.clear();
    out.resize(text.len() + 2, false);
    out[1] = true;
    let mut stack: Vec<usize> = Vec::new();
    let mut total = 0;
    let mut in_word = false;
    for ch in text.chars() {
        match ch {
            '(' => {
                stack.push(0);
                in_word = false;
            }
            ')' => {
                let n = stack.pop().expect("balanced");
                out[n] = true;
                if let Some(top) = stack.last_mut() {
                    *top += n;
                }
                in_word = false;
            }
            c if c.is_alphanumeric() || c == '_' || c == '#' => {
                if !in_word {
                    total += 1;
                    if let Some(top) = stack.last_mut() {
                        *top += 1;
                    }
                }
                in_word = true;
            }
            _ => in_word = false,
        }
    }
    out[total] = true;
}

fn criterion_1() -> Outcome {
    let limits = Limits::default();
    let vars = [x(1), x(2), x(3)];
    let mut checked = 0usize;
    let (mut text, mut oracle) = (String::new(), Vec::new());
    for len in 1..=8 {
        for w in enumerate_monomials(&vars, len, 0, &limits).map_err(|e| e.to_string())? {
            text.clear();
            write!(text, "{w}").expect("write to string");
            lengths_from_text(&text, &mut oracle);
            for m in 0..len {
                let by_oracle = oracle[len - m];
                ensure(w.is_m_separating(m) == by_oracle, || format!("{w}: m = {m}"))?;
            }
            checked += 1;
        }
    }
    let w: Monomial = "(((x1 x2)(x3 x4))((x5 x6)(x7 x8)))".parse().map_err(|e| format!("{e}"))?;
    ensure(w.separating_profile() == [0, 4, 6, 7], || format!("profile {:?}", w.separating_profile()))?;
    ensure(!w.is_range_separating(1, 3).unwrap(), || "the example is [1,3]-separating".into())?;
    Ok(format!("{checked} monomials, example profile {{0,4,6,7}}"))
}

// ── 2 ─────────────────────────────────────────────────────────────────

const REWRITE_VARIETIES: [&str; 4] = ["associative", "lie", "jordan", "four-nilpotent-products"];

/// Multilinear bracketings of length `2..=max_len`, plus every monomial of
/// those lengths over `x1, x2`.
fn rewrite_corpus(max_len: usize, limits: &Limits) -> Vec<Monomial> {
    let mut out = Vec::new();
    for len in 2..=max_len {
        out.extend(bracketings(len));
        out.extend(enumerate_monomials(&[x(1), x(2)], len, 0, limits).expect("within cap"));
    }
    out.sort();
    out.dedup();
    out
}

fn criterion_2() -> Outcome {
    let limits = Limits::default();
    let corpus = rewrite_corpus(6, &limits);
    let mut outputs = 0usize;
    for name in REWRITE_VARIETIES {
        let p = builtin_presentation(name, Q).map_err(|e| e.to_string())?;
        let d = p.witness().expect("witness").d();
        let mut rw = Rewriter::new(&p).map_err(|e| e.to_string())?;
        for w in &corpus {
            let md = Multidegree::of(w);
            for n in 1..w.len() {
                let r = rw.separate_n(w, n).map_err(|e| format!("{name}: {w}: {e}"))?;
                for m in r.monomials() {
                    ensure(m.is_range_separating(n, n + d).unwrap(), || format!("{name}: {w}, n = {n}: {m}"))?;
                    ensure(Multidegree::of(m) == md, || format!("{name}: {w}: multidegree of {m}"))?;
                    outputs += 1;
                }
            }
        }
    }
    Ok(format!("{} monomials x 4 varieties, {outputs} output terms", corpus.len()))
}

// ── 3 ─────────────────────────────────────────────────────────────────

fn criterion_3() -> Outcome {
    let ut = strict_upper_triangular(4, Q);
    let cases: Vec<(&str, StructAlgebra)> = vec![
        ("associative", ut.clone()),
        ("lie", lie_from_associative(&ut)),
        ("jordan", symmetric_jordan(3, Q).map_err(|e| e.to_string())?),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut evaluations = 0usize;
    for (name, alg) in &cases {
        let p = builtin_presentation(name, Q).map_err(|e| e.to_string())?;
        let mut rw = Rewriter::new(&p).map_err(|e| e.to_string())?;
        for len in 2..=6 {
            for w in bracketings(len) {
                let lhs = Polynomial::monomial(Q, w.clone());
                let rhs = (1..len).map(|n| rw.separate_n(&w, n)).collect::<Result<Vec<_>, _>>().map_err(|e| e.to_string())?;
                // one assignment per sample, shared by every n
                for _ in 0..SEMANTIC_SAMPLES {
                    let a: BTreeMap<Indeterminate, Element> =
                        (1..=len).map(|k| (x(k), alg.random_element(&mut rng, 7, true))).collect();
                    let l = evaluate(&lhs, alg, &a).unwrap();
                    for (k, r) in rhs.iter().enumerate() {
                        ensure(l == evaluate(r, alg, &a).unwrap(), || format!("{name}: {w}, n = {}", k + 1))?;
                        evaluations += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{evaluations} exact evaluations in 3 algebras"))
}

// ── 4 ─────────────────────────────────────────────────────────────────

fn criterion_4() -> Outcome {
    let limits = Limits::default();
    let mut certificates = 0;
    for name in REWRITE_VARIETIES {
        let p = builtin_presentation(name, Q).map_err(|e| e.to_string())?;
        let report = verify_witness(&p, &limits).map_err(|e| e.to_string())?;
        ensure(report.ok(), || format!("{report}"))?;
        certificates += report.checks.len();
    }
    // a certificate with no factor split off, and a wrong but split-form one
    let assoc = builtin_presentation("associative", Q).unwrap();
    let pp = |s: &str| Polynomial::parse(Q, s).unwrap();
    let shape: Monomial = "x1 x2".parse().unwrap();
    let mut broken = SeparativityWitness::new(0);
    broken.insert(shape.clone(), Side::Left, pp("(x1 x2) z"));
    broken.insert(shape.clone(), Side::Right, pp("(z x1) x2"));
    let report = verify_witness(&assoc.clone().with_witness(broken), &limits).map_err(|e| e.to_string())?;
    ensure(!report.ok() && report.failures().all(|c| !c.split_form), || format!("broken witness: {report}"))?;
    let mut wrong = SeparativityWitness::new(0);
    wrong.insert(shape.clone(), Side::Left, pp("x2 (x1 z)"));
    wrong.insert(shape, Side::Right, pp("(z x1) x2"));
    let report = verify_witness(&assoc.with_witness(wrong), &limits).map_err(|e| e.to_string())?;
    ensure(!report.ok() && report.failures().all(|c| c.split_form && !c.congruent), || format!("wrong: {report}"))?;

    // the eight multilinear monomials in x1, x2, z with x1 or x2 outside
    let z = Indeterminate::var("z");
    let eight: BTreeSet<Monomial> = enumerate_monomials(&[x(1), x(2), z.clone()], 3, 0, &limits)
        .unwrap()
        .into_iter()
        .filter(|m| m.leaves().into_iter().collect::<BTreeSet<_>>().len() == 3)
        .filter(|m| m.factors().is_some_and(|(a, b)| [a, b].iter().any(|f| f.as_leaf().is_some_and(|l| *l != z))))
        .collect();
    ensure(eight.len() == 8, || format!("{} monomials in the set", eight.len()))?;
    let lie = builtin_presentation("lie", Q).unwrap();
    for (_, _, target) in lie.witness().unwrap().certificates() {
        ensure(target.monomials().all(|m| eight.contains(m)), || format!("{target} leaves the eight-monomial set"))?;
    }
    Ok(format!("{certificates} builtin certificates verified; broken and wrong witnesses rejected"))
}

// ── 5 ─────────────────────────────────────────────────────────────────

fn criterion_5() -> Outcome {
    let lin = jordan_multilinear_identity(Q).map_err(|e| e.to_string())?;
    let two = Q.from_i64(2);
    ensure(lin.terms().all(|(_, c)| *c == two || *c == Q.neg(&two)), || format!("coefficients of {lin}"))?;
    let z = Indeterminate::var("z");
    let outside: Vec<&Monomial> = lin
        .monomials()
        .filter(|m| m.factors().is_some_and(|(a, b)| a.as_leaf() == Some(&z) || b.as_leaf() == Some(&z)))
        .collect();
    let expected = "z (x1 (x2 x3))".parse::<Monomial>().unwrap().commutative_normal_form();
    ensure(outside == [&expected], || format!("z-outside classes: {outside:?}"))?;
    let identity = lin.scale(&Q.from_ratio(1, 2).unwrap());
    let alg = symmetric_jordan(3, Q).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 5);
    for _ in 0..JORDAN_POINTS {
        let a: BTreeMap<_, _> =
            identity.variables().into_iter().map(|v| (v, alg.random_element(&mut rng, 9, true))).collect();
        ensure(evaluate(&identity, &alg, &a).unwrap().is_zero(), || "nonzero value".into())?;
    }
    Ok(format!("{} terms, all +-2; unique z-outside class {expected}; {JORDAN_POINTS} points vanish", lin.len()))
}

// ── 6 ─────────────────────────────────────────────────────────────────

fn filtration_algebras() -> Vec<(String, StructAlgebra)> {
    let limits = Limits::default();
    let mut out = Vec::new();
    for name in builtin::NAMES {
        for k in 2..=4 {
            if let Ok(a) = builtin::by_name(name, k, Q) {
                out.push((format!("{name}({k})"), a));
            }
        }
    }
    for i in 2..=6 {
        out.push((format!("pqr({i})"), build_pqr(i, Q).unwrap()));
        out.push((format!("pqr-comm({i})"), build_pqr_comm(i, Q).unwrap()));
        out.push((format!("pqr-alt({i})"), build_pqr_alt(i, Q).unwrap()));
    }
    for c in 1..=4 {
        out.push((format!("free-assoc(2,{c})"), build_free_nilpotent_assoc(2, c, Q, &limits).unwrap()));
    }
    out
}

fn criterion_6() -> Outcome {
    let algebras = filtration_algebras();
    for (name, alg) in &algebras {
        let mut f = LowerFiltration::new(alg);
        let depth = is_nilpotent(alg).1.unwrap_or(8).max(8);
        for n in 1..=depth {
            let next = f.get(n + 1).clone();
            let cur = f.get(n).clone();
            ensure(next.is_subspace_of(&cur), || format!("{name}: A_({}) not inside A_({n})", n + 1))?;
            ensure(alg.is_ideal(&cur), || format!("{name}: A_({n}) is not an ideal"))?;
        }
        for n in 0..=3 {
            ensure(derived_series(alg, n).is_subspace_of(f.get(1 << n)), || format!("{name}: A^({n})"))?;
        }
        if is_nilpotent(alg).0 {
            ensure(is_solvable(alg).0, || format!("{name}: nilpotent but not solvable"))?;
        }
    }
    Ok(format!("{} algebras", algebras.len()))
}

// ── 7 ─────────────────────────────────────────────────────────────────

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 7);
    for i in 3..=8 {
        let s = build_pqr(i, Q).unwrap();
        let level = Level::new(Family::Pqr, i, &s).unwrap();
        for _ in 0..RANK_PAIRS {
            let a = s.random_element(&mut rng, 5, true);
            let b = s.random_element(&mut rng, 5, true);
            let ab = s.multiply(&a, &b).unwrap();
            let outer = RMatrix::outer(Q, &level.q_column(&a).unwrap(), &level.q_column(&b).unwrap());
            let m = level.r_matrix(&ab).unwrap();
            ensure(m == outer, || format!("level {i}: r-matrix is not the outer product"))?;
            ensure(m.rank() <= 1, || format!("level {i}: rank {}", m.rank()))?;
        }
        // rank subadditivity on sums of products
        let mut sum = s.zero_element();
        for d in 1..=3 {
            let (a, b) = (s.random_element(&mut rng, 5, false), s.random_element(&mut rng, 5, false));
            sum = sum.add(&Q, &s.multiply(&a, &b).unwrap());
            ensure(level.r_rank(&sum).unwrap() <= d, || format!("level {i}: sum of {d} products"))?;
        }
        let sc = build_pqr_comm(i, Q).unwrap();
        let comm = Level::new(Family::PqrComm, i, &sc).unwrap();
        for _ in 0..RANK_PAIRS / 5 {
            let (a, b) = (sc.random_element(&mut rng, 5, true), sc.random_element(&mut rng, 5, true));
            let r = comm.r_rank(&sc.multiply(&a, &b).unwrap()).unwrap();
            ensure(r <= 2, || format!("comm level {i}: doubled-diagonal rank {r}"))?;
        }
        let diag = level.diagonal().unwrap();
        ensure(level.r_rank(&diag).unwrap() == i - 1, || format!("level {i}: diag rank"))?;
        ensure(level.min_products_lower_bound(&diag).unwrap() == i - 1, || format!("level {i}: lower bound"))?;
        let mut products = s.zero_element();
        for m in 1..i {
            let q = s.element(&format!("q{m}")).unwrap();
            products = products.add(&Q, &s.multiply(&q, &q).unwrap());
        }
        ensure(products == diag, || format!("level {i}: diag is not the sum of q_m q_m"))?;
    }
    Ok(format!("levels 3..8, {RANK_PAIRS} pairs each; diag rank i-1, attained by i-1 products"))
}

// ── 8 ─────────────────────────────────────────────────────────────────

fn criterion_8() -> Outcome {
    let limits = Limits::default();
    let displays: [(Family, &[&str]); 3] = [
        (Family::Pqr, &["((x1 x2) x3) x4", "x4 ((x1 x2) x3)"]),
        (Family::PqrComm, &["x1 x2 - x2 x1", "((x1 x2)(x3 x4)) x5"]),
        (Family::PqrAlt, &["x1 x1", "((x1 x2)(x3 x4)) x5"]),
    ];
    let mut checks = 0;
    let tower_limits = Limits { max_level: 8, ..Limits::default() };
    for (family, ids) in displays {
        let tower = TruncatedTower::new(family, Q, 2, 8, &tower_limits).map_err(|e| e.to_string())?;
        for level in tower.levels() {
            for id in ids {
                let f = Polynomial::parse(Q, id).unwrap();
                let c = check_identity(level.algebra(), &f, &limits).map_err(|e| e.to_string())?;
                let basis = matches!(c.strategy, CheckStrategy::BasisTuples | CheckStrategy::Linearized);
                ensure(c.holds && basis, || format!("{family} level {}: {id}: {c:?}", level.index()))?;
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} identity checks on levels 2..8"))
}

// ── 9 ─────────────────────────────────────────────────────────────────

fn criterion_9() -> Outcome {
    let limits = Limits::default();
    let d_max = limits.max_enumeration_length - 2;
    let free = TruncatedTower::new(Family::FreeAssoc { generators: 2 }, Q, 2, 6, &limits).map_err(|e| e.to_string())?;
    let fd = separation_defect(&free, 2, d_max, &limits).map_err(|e| e.to_string())?;
    ensure(fd.iter().all(|(_, d)| *d == Some(0)), || format!("free-assoc defects {fd:?}"))?;
    let pqr = TruncatedTower::new(Family::Pqr, Q, 3, 8, &limits).map_err(|e| e.to_string())?;
    let pd: Vec<Option<usize>> = separation_defect(&pqr, 2, d_max, &limits).map_err(|e| e.to_string())?.into_iter().map(|(_, d)| d).collect();
    let finite: Vec<usize> = pd.iter().flatten().copied().collect();
    ensure(finite.len() == pd.len() && finite.windows(2).all(|w| w[0] < w[1]), || format!("pqr defects {pd:?}"))?;
    ensure(finite == PQR_DEFECTS, || format!("pqr defects {finite:?} differ from the recorded {PQR_DEFECTS:?}"))?;
    Ok(format!("free-assoc classes 2..6: all 0; pqr levels 3..8: {finite:?}"))
}

// ── 10 ────────────────────────────────────────────────────────────────

fn random_monomial(rng: &mut ChaCha8Rng, len: usize) -> Monomial {
    if len == 1 {
        let names = ["x1", "x2", "x3", "a", "y", "w_2"];
        return Monomial::var(names[rng.gen_range(0..names.len())]);
    }
    let k = rng.gen_range(1..len);
    Monomial::product(&random_monomial(rng, k), &random_monomial(rng, len - k))
}

fn random_polynomial(rng: &mut ChaCha8Rng, field: Field) -> Polynomial {
    let terms = (0..rng.gen_range(0..5)).map(|_| {
        let len = rng.gen_range(1..=5);
        let c = field.from_ratio(rng.gen_range(-9..=9), rng.gen_range(1..=4)).unwrap_or_else(|| field.one());
        (c, random_monomial(rng, len))
    });
    Polynomial::from_terms(field, terms.collect::<Vec<_>>())
}

fn random_algebra(rng: &mut ChaCha8Rng, field: Field) -> StructAlgebra {
    let dim = rng.gen_range(1..=4);
    let labels = (1..=dim).map(|k| format!("b{k}")).collect();
    let mut alg = StructAlgebra::new(field, labels);
    for i in 0..dim {
        for j in 0..dim {
            let mut entries = Vec::new();
            for k in 0..dim {
                if rng.gen_bool(0.4) {
                    let c = field.from_ratio(rng.gen_range(-5..=5), rng.gen_range(1..=3));
                    entries.push((k, c.unwrap_or_else(|| field.one())));
                }
            }
            alg.set_product(i, j, SparseVec::from_entries(&field, entries));
        }
    }
    alg
}

fn criterion_10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 10);
    let fields = [Q, Field::Prime(3), Field::Prime(5), Field::Prime(7), Field::Prime(11)];
    let mut items = 0;
    // monomials
    for _ in 0..50 {
        let len = rng.gen_range(1..=9);
        let m = random_monomial(&mut rng, len);
        ensure(m.to_string().parse::<Monomial>().ok() == Some(m.clone()), || format!("monomial {m}"))?;
        items += 1;
    }
    // polynomials
    for k in 0..50 {
        let field = fields[k % fields.len()];
        let p = random_polynomial(&mut rng, field);
        ensure(Polynomial::parse(field, &p.to_string()).ok() == Some(p.clone()), || format!("polynomial {p}"))?;
        items += 1;
    }
    // identity (presentation) files
    for field in fields {
        for name in BUILTIN_NAMES {
            let p = builtin_presentation(name, field).map_err(|e| e.to_string())?;
            let back = VarietyPresentation::parse(&p.to_string()).map_err(|e| format!("{name}: {e}"))?;
            ensure(back == p, || format!("presentation {name} over {field}"))?;
            items += 1;
        }
    }
    for k in 0..15 {
        let field = fields[k % fields.len()];
        let ids: Vec<Polynomial> = (0..rng.gen_range(1..=3))
            .map(|_| Polynomial::monomial(field, random_monomial(&mut rng, 3)))
            .collect();
        let p = VarietyPresentation::new(&format!("random{k}"), field, ids).map_err(|e| e.to_string())?;
        ensure(VarietyPresentation::parse(&p.to_string()).ok() == Some(p.clone()), || format!("{p}"))?;
        items += 1;
    }
    // algebra files
    let mut algebras: Vec<StructAlgebra> = filtration_algebras().into_iter().map(|(_, a)| a).collect();
    algebras.truncate(25);
    let mut k = 0;
    while items + algebras.len() < CORPUS_SIZE {
        algebras.push(random_algebra(&mut rng, fields[k % fields.len()]));
        k += 1;
    }
    for alg in &algebras {
        let text = alg.to_string();
        ensure(StructAlgebra::parse(&text).ok().as_ref() == Some(alg), || format!("algebra:\n{text}"))?;
        items += 1;
    }
    ensure(items == CORPUS_SIZE, || format!("corpus has {items} items"))?;
    Ok(format!("{items} items (monomials, polynomials, presentations, algebras)"))
}

// ── harness ───────────────────────────────────────────────────────────

struct Criterion {
    id: usize,
    title: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let s = Duration::from_secs;
    let criteria = [
        Criterion { id: 1, title: "separating oracle equivalence", budget: s(10), run: criterion_1 },
        Criterion { id: 2, title: "rewriter soundness (syntactic)", budget: s(60), run: criterion_2 },
        Criterion { id: 3, title: "rewriter soundness (semantic)", budget: s(60), run: criterion_3 },
        Criterion { id: 4, title: "witness verification", budget: s(60), run: criterion_4 },
        Criterion { id: 5, title: "Jordan multilinearization", budget: s(60), run: criterion_5 },
        Criterion { id: 6, title: "filtration laws", budget: s(60), run: criterion_6 },
        Criterion { id: 7, title: "counterexample rank laws", budget: s(120), run: criterion_7 },
        Criterion { id: 8, title: "counterexample identities", budget: s(60), run: criterion_8 },
        Criterion { id: 9, title: "separation defect dichotomy", budget: s(300), run: criterion_9 },
        Criterion { id: 10, title: "format round trips", budget: s(60), run: criterion_10 },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if elapsed <= c.budget => (true, d),
            Ok(d) => (false, format!("{d}; over budget")),
            Err(e) => (false, e),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "[{}] {:>2}. {} ({:.2}s / {}s): {}",
            if ok { "PASS" } else { "FAIL" },
            c.id,
            c.title,
            elapsed.as_secs_f64(),
            c.budget.as_secs(),
            detail
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
