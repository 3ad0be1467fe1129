//! Acceptance runner: one PASS/FAIL line per criterion.
//!
//! Every check is exact (rational arithmetic, tolerance zero). Time budgets
//! are enforced only when debug assertions are off. A criterion that fails
//! because of a known sign defect in a stated identity is listed in
//! `KNOWN_DEFECTS`; the process exits nonzero only on an unexpected failure.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use dialab::finalg::fixtures::{DENDRIFORM_CATALOG, DIALGEBRA_CATALOG, LEIBNIZ_CATALOG, ZINBIEL_CATALOG};
use dialab::finalg::{check_axioms, fixture, Kind};
use dialab::freealg::*;
use dialab::homology::*;
use dialab::linalg::SparseMat;
use dialab::operads::*;
use dialab::rational::{q, sign};
use dialab::trees::catalan;
use dialab::{LinComb, Permutation, Q, Tree};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

mod common;
use common::*;

/// Exact arithmetic throughout; any nonzero defect fails.
const TOLERANCE: i64 = 0;
const SEED: u64 = 20_240_101;
const RANDOM_SAMPLES: usize = 100;
/// Basis chains per fixture for the sampled `d∘d` check in degree 5.
const SAMPLED_CHAINS: usize = 200;

/// Criteria expected to fail because the stated identity has the wrong sign.
const KNOWN_DEFECTS: &[(usize, &str)] =
    &[(8, "d h(y) + h(y) d equals -ad(y), not +ad(y); the chain maps are unaffected")];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn budget(seconds: u64) -> Option<Duration> {
    Some(Duration::from_secs(seconds))
}

fn main() -> ExitCode {
    let criteria: Vec<(usize, &str, Option<Duration>, fn() -> Outcome)> = vec![
        (1, "Catalan counts of planar binary trees", budget(1), c1_catalan),
        (2, "dimonoid normal forms", None, c2_dimonoid),
        (3, "axiom suites", budget(10), c3_axioms),
        (4, "d∘d = 0 for the five complexes", None, c4_d_squared),
        (5, "free dialgebra homology and contracting homotopy", budget(30), c5_free_dialgebra),
        (6, "bar-unit vanishing", None, c6_bar_unit),
        (7, "free dendriform homology", None, c7_free_dendriform),
        (8, "chain maps and the bracket identities", None, c8_chain_maps),
        (9, "Koszul duality of dias and dend", budget(1), c9_koszul),
        (10, "Poincaré series inversion", None, c10_poincare),
        (11, "dendriform to Zinbiel map", None, c11_zinbiel),
        (12, "strong homotopy relations in low degree", None, c12_sh),
        (13, "Lie bracket on a dialgebra tensor a dendriform algebra", None, c13_tensor_bracket),
    ];
    let enforce_budgets = !cfg!(debug_assertions);
    let mut unexpected = Vec::new();
    let mut failed = 0;
    for (id, name, limit, run) in criteria {
        let start = Instant::now();
        let mut result = run();
        let elapsed = start.elapsed();
        if let (Some(limit), true) = (limit, enforce_budgets) {
            if elapsed > limit {
                result.pass = false;
                result.detail.push_str(&format!("; over budget {limit:?}"));
            }
        }
        let verdict = if result.pass { "PASS" } else { "FAIL" };
        println!("{verdict} criterion {id:>2}: {name} [{:.2}s] {}", elapsed.as_secs_f64(), result.detail);
        if !result.pass {
            failed += 1;
            match KNOWN_DEFECTS.iter().find(|(k, _)| *k == id) {
                Some((_, why)) => println!("     known defect: {why}"),
                None => unexpected.push(id),
            }
        }
    }
    for line in informational() {
        println!("INFO {line}");
    }
    println!("{} of 13 criteria pass; {} fail ({} unexpected)", 13 - failed, failed, unexpected.len());
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn c1_catalan() -> Outcome {
    // c_{n+1} = Σ c_i c_{n-i}
    let mut c = vec![1usize];
    for n in 0..6 {
        c.push((0..=n).map(|i| c[i] * c[n - i]).sum());
    }
    let counts: Vec<usize> = (0..=6).map(|n| Tree::enumerate(n).len()).collect();
    let closed: Vec<usize> = (0..=6).map(|n| catalan(n) as usize).collect();
    outcome(counts == [1, 1, 2, 5, 14, 42, 132] && counts == c && counts == closed, format!("{counts:?}"))
}

fn c2_dimonoid() -> Outcome {
    let l = Mono::Leaf;
    let example = node(true, node(false, node(false, l(0), l(1)), l(2)), node(true, node(true, l(3), l(4)), l(5)));
    let letters = syms(&["x1", "x2", "x3", "x4", "x5", "x6"]);
    let worked = normalize_monomial(&to_labelled(&example, &letters)).to_string() == "x1 x2 x3^ x4 x5 x6";
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut agree = 0;
    for _ in 0..RANDOM_SAMPLES {
        let n = rng.gen_range(1..=6);
        let m = random_mono(&mut rng, 0, n);
        let pw = normalize_monomial(&to_labelled(&m, &letters));
        if pw.letters() == &letters[..n] && pw.pointer() == rewrite_pointer(&m) {
            agree += 1;
        }
    }
    outcome(worked && agree == RANDOM_SAMPLES, format!("worked example {worked}; rewriting agrees on {agree}/{RANDOM_SAMPLES}"))
}

fn c3_axioms() -> Outcome {
    use dialab::ProductSymbol::{LeftPointer as L, RightPointer as R};
    let mut failures = Vec::new();
    for names in [DIALGEBRA_CATALOG, DENDRIFORM_CATALOG, ZINBIEL_CATALOG, LEIBNIZ_CATALOG] {
        for name in names {
            if !check_axioms(&fixture(name).unwrap()).is_empty() {
                failures.push(name.to_string());
            }
        }
    }
    let gens = syms(&["x", "y"]);
    let letters = PointedWord::all(&gens, 1);
    for x in &letters {
        for y in &letters {
            for z in &letters {
                let m = |a: &PointedWord, b: &PointedWord, s| a.mul(b, s);
                let ok = m(&m(x, y, L), z, L) == m(x, &m(y, z, L), L)
                    && m(&m(x, y, L), z, L) == m(x, &m(y, z, R), L)
                    && m(&m(x, y, R), z, L) == m(x, &m(y, z, L), R)
                    && m(&m(x, y, L), z, R) == m(x, &m(y, z, R), R)
                    && m(&m(x, y, R), z, R) == m(x, &m(y, z, R), R);
                if !ok {
                    failures.push(format!("dias {x} {y} {z}"));
                }
            }
        }
    }
    let tm = |a: &LinComb<Tree>, b: &LinComb<Tree>, op| a.try_bilinear(b, |x, y| dend_tree_mul(x, y, op)).unwrap();
    let star = |a: &LinComb<Tree>, b: &LinComb<Tree>| tm(a, b, DendOp::Prec) + tm(a, b, DendOp::Succ);
    let trees: Vec<Tree> = (1..=4).flat_map(Tree::enumerate).collect();
    let mut tree_triples = 0;
    for x in &trees {
        for y in &trees {
            for z in &trees {
                if x.degree() + y.degree() + z.degree() > 6 {
                    continue;
                }
                tree_triples += 1;
                let (x, y, z) = (LinComb::basis(x.clone()), LinComb::basis(y.clone()), LinComb::basis(z.clone()));
                let ok = tm(&tm(&x, &y, DendOp::Prec), &z, DendOp::Prec) == tm(&x, &star(&y, &z), DendOp::Prec)
                    && tm(&tm(&x, &y, DendOp::Succ), &z, DendOp::Prec)
                        == tm(&x, &tm(&y, &z, DendOp::Prec), DendOp::Succ)
                    && tm(&star(&x, &y), &z, DendOp::Succ) == tm(&x, &tm(&y, &z, DendOp::Succ), DendOp::Succ)
                    && star(&star(&x, &y), &z) == star(&x, &star(&y, &z));
                if !ok {
                    failures.push(format!("dend {x} {y} {z}"));
                }
            }
        }
    }
    let words: Vec<Word> = (1..=4).flat_map(|k| Word::all(&gens, k)).collect();
    let dot = |a: &LinComb<Word>, b: &LinComb<Word>| zinb_mul(a, b, ZinbMode::Dot);
    let br = leib_bracket_free;
    for x in &words {
        for y in &words {
            for z in &words {
                if x.len() + y.len() + z.len() > 6 {
                    continue;
                }
                let (x, y, z) = (LinComb::basis(x.clone()), LinComb::basis(y.clone()), LinComb::basis(z.clone()));
                if dot(&dot(&x, &y), &z) != dot(&x, &dot(&y, &z)) + dot(&x, &dot(&z, &y)) {
                    failures.push(format!("zinb {x} {y} {z}"));
                }
                if br(&x, &br(&y, &z)) != br(&br(&x, &y), &z) - br(&br(&x, &z), &y) {
                    failures.push(format!("leib {x} {y} {z}"));
                }
            }
        }
    }
    outcome(failures.is_empty(), format!("{tree_triples} tree triples; failures {failures:?}"))
}

fn fixture_theories() -> Vec<(&'static str, Theory)> {
    let mut out = Vec::new();
    for name in DIALGEBRA_CATALOG {
        out.extend([(*name, Theory::CY), (*name, Theory::CS), (*name, Theory::CL)]);
    }
    for name in DENDRIFORM_CATALOG {
        out.push((*name, Theory::CDend));
    }
    for name in ZINBIEL_CATALOG {
        out.extend([(*name, Theory::CZinb), (*name, Theory::CDend)]);
    }
    for name in LEIBNIZ_CATALOG {
        out.push((*name, Theory::CL));
    }
    out
}

/// Size of the degree-5 chain group, as an overflow-safe estimate.
fn chain_dim(theory: Theory, dim: usize, n: usize) -> f64 {
    let index = indices(theory, n).len() as f64;
    index * (dim as f64).powi(n as i32)
}

/// `d(d(t))` for one basis chain, collected into a map.
fn d_d(theory: Theory, coeffs: &Coefficients, t: &ChainTerm) -> BTreeMap<ChainTerm, Q> {
    let mut out: BTreeMap<ChainTerm, Q> = BTreeMap::new();
    for (u, a) in differential_terms(theory, coeffs, t) {
        for (v, b) in differential_terms(theory, coeffs, &u) {
            *out.entry(v).or_insert_with(Q::zero) += &a * &b;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn c4_d_squared() -> Outcome {
    const FULL_LIMIT: f64 = 60_000.0;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let (mut full, mut sampled, mut bad) = (0, 0, Vec::new());
    for (name, theory) in fixture_theories() {
        let a = fixture(name).unwrap();
        let top = (1..=5).rev().find(|&n| chain_dim(theory, a.dim(), n) <= FULL_LIMIT).unwrap_or(1);
        let c = ChainComplex::build(theory, &Source::Finite(a.clone()), top.max(3)).unwrap();
        if !c.d_squared_is_zero() {
            bad.push(format!("{theory} {name} matrices"));
        }
        if top == 5 {
            full += 1;
            continue;
        }
        sampled += 1;
        let coeffs = c.coeffs().clone();
        let idx = indices(theory, 5);
        for _ in 0..SAMPLED_CHAINS {
            let index = idx[rng.gen_range(0..idx.len())].clone();
            let entries = (0..5).map(|_| rng.gen_range(0..a.dim())).collect();
            let t = ChainTerm::new(index, entries);
            if !d_d(theory, &coeffs, &t).is_empty() {
                bad.push(format!("{theory} {name} {}", t.display(coeffs.names())));
                break;
            }
        }
    }
    for (theory, kind) in [
        (Theory::CY, Kind::Dialgebra),
        (Theory::CS, Kind::Dialgebra),
        (Theory::CDend, Kind::Dendriform),
        (Theory::CZinb, Kind::Zinbiel),
        (Theory::CL, Kind::Leibniz),
    ] {
        for w in 2..=4 {
            let c = ChainComplex::build(theory, &Source::Free { kind, dim_v: 2, weight: w }, w).unwrap();
            if !c.d_squared_is_zero() {
                bad.push(format!("{theory} free weight {w}"));
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "{full} fixture complexes as matrices through degree 5, {sampled} by full matrices in low degree \
             plus {SAMPLED_CHAINS} sampled degree-5 chains; free weight pieces 2..4; failures {bad:?}"
        ),
    )
}

fn homotopy_defect(c: &ChainComplex, n: usize) -> SparseMat {
    let co = c.coeffs().clone();
    let h = |k: usize| c.map_matrix(k, c, k + 1, |t| homotopy_free_dialgebra(&co, t).unwrap());
    let mut total = h(n - 1).compose(c.differential(n));
    if n < c.top() {
        total = total.add(&c.differential(n + 1).compose(&h(n)));
    }
    total.sub(&SparseMat::identity(c.dim(n)))
}

fn c5_free_dialgebra() -> Outcome {
    let mut bad = Vec::new();
    let mut weight_one = Vec::new();
    for dim_v in 1..=2 {
        for w in 1..=4 {
            let c = ChainComplex::build(Theory::CY, &Source::Free { kind: Kind::Dialgebra, dim_v, weight: w }, w + 1)
                .unwrap();
            let b = c.betti();
            let mut want = vec![0; b.len()];
            if w == 1 {
                want[0] = dim_v;
                weight_one.push(b[0]);
            }
            if b != want {
                bad.push(format!("betti dimV {dim_v} w {w}: {b:?}"));
            }
            for n in 2..=w.min(4) {
                if !homotopy_defect(&c, n).is_zero() {
                    bad.push(format!("dh+hd dimV {dim_v} w {w} n {n}"));
                }
            }
        }
    }
    outcome(bad.is_empty(), format!("weight-1 HY_1 dims {weight_one:?}; failures {bad:?}"))
}

fn c6_bar_unit() -> Outcome {
    let field = betti_numbers(Theory::CY, &Source::Finite(fixture("field").unwrap()), 5).unwrap();
    let tensor = betti_numbers(Theory::CY, &Source::Finite(fixture("tensor-square-C2").unwrap()), 4).unwrap();
    outcome(field == [0; 5] && tensor == [0; 4], format!("K: {field:?}; tensor square: {tensor:?}"))
}

fn c7_free_dendriform() -> Outcome {
    let mut rows = Vec::new();
    let mut ok = true;
    for w in 1..=4 {
        let c = ChainComplex::build(Theory::CDend, &Source::Free { kind: Kind::Dendriform, dim_v: 1, weight: w }, w + 1)
            .unwrap();
        let b = c.betti();
        let mut want = vec![0; b.len()];
        if w == 1 {
            want[0] = 1;
        }
        ok &= b == want;
        rows.push(format!("w{w} {b:?}"));
    }
    outcome(ok, rows.join(", "))
}

fn unit(i: usize) -> Sparse {
    vec![(i, Q::one())]
}

fn sample_elements(k: usize) -> Vec<Sparse> {
    let mut v: Vec<Sparse> = (0..k).map(unit).collect();
    v.push((0..k).map(|i| (i, q(i as i64 + 1))).collect());
    v
}

struct BracketChecks {
    identity_2: bool,
    stated_3: bool,
    corrected_3: bool,
    identity_4: bool,
}

fn bracket_identities(name: &str) -> BracketChecks {
    let a = fixture(name).unwrap();
    let l = ChainComplex::build(Theory::CL, &Source::Finite(a.clone()), 4).unwrap();
    let s = ChainComplex::build(Theory::CS, &Source::Finite(a), 4).unwrap();
    let (lc, sc) = (l.coeffs().clone(), s.coeffs().clone());
    let mut out = BracketChecks { identity_2: true, stated_3: true, corrected_3: true, identity_4: true };
    for y in sample_elements(sc.dim()) {
        let h = |k: usize| s.map_matrix(k, &s, k + 1, |t| h_of(&y, t).unwrap());
        for n in 1..=3 {
            let eps = map_matrix(MapKind::Epsilon, &l, &s, n).unwrap();
            let ad_l = l.map_matrix(n, &l, n, |t| ad(&lc, &y, t).unwrap());
            let ad_s = s.map_matrix(n, &s, n, |t| ad(&sc, &y, t).unwrap());
            out.identity_2 &= eps.compose(&ad_l) == ad_s.compose(&eps);
            let mut lhs = s.differential(n + 1).compose(&h(n));
            if n >= 2 {
                lhs = lhs.add(&h(n - 1).compose(s.differential(n)));
            }
            out.stated_3 &= lhs.sub(&ad_s).is_zero();
            out.corrected_3 &= lhs.add(&ad_s).is_zero();
        }
    }
    for n in 1..=3 {
        for t in l.terms(n) {
            for last in 0..sc.dim() {
                let mut e = t.entries.clone();
                e.push(last);
                let lhs = normalize(epsilon(&ChainTerm::new(ChainIndex::Plain, e)).unwrap());
                let rhs: Chain = epsilon(&t)
                    .unwrap()
                    .into_iter()
                    .flat_map(|(u, x)| h_of(&unit(last), &u).unwrap().into_iter().map(move |(v, z)| (v, &z * &x)))
                    .map(|(v, z)| (v, sign(n as i64) * z))
                    .collect();
                out.identity_4 &= lhs == normalize(rhs);
            }
        }
    }
    out
}

fn c8_chain_maps() -> Outcome {
    let mut bad = Vec::new();
    let a = fixture("diff-upper2").unwrap();
    let l = ChainComplex::build(Theory::CL, &Source::Finite(a.clone()), 4).unwrap();
    let s = ChainComplex::build(Theory::CS, &Source::Finite(a.clone()), 4).unwrap();
    let y = ChainComplex::build(Theory::CY, &Source::Finite(a), 4).unwrap();
    for n in 2..=4 {
        if !commutes(MapKind::Epsilon, &l, &s, n).unwrap() {
            bad.push(format!("epsilon n {n}"));
        }
        if !commutes(MapKind::Psi, &s, &y, n).unwrap() {
            bad.push(format!("psi n {n}"));
        }
    }
    for name in ZINBIEL_CATALOG {
        let r = fixture(name).unwrap();
        let d = ChainComplex::build(Theory::CDend, &Source::Finite(r.clone()), 4).unwrap();
        let z = ChainComplex::build(Theory::CZinb, &Source::Finite(r), 4).unwrap();
        for n in 2..=4 {
            if !commutes(MapKind::Theta, &d, &z, n).unwrap() {
                bad.push(format!("theta {name} n {n}"));
            }
        }
    }
    let b = bracket_identities("diff-upper2");
    let ok = bad.is_empty() && b.identity_2 && b.stated_3 && b.identity_4;
    outcome(
        ok,
        format!(
            "ε, Ψ, Θ chain maps: {}; ε ad = ad ε {}; d h + h d = +ad as stated {}; ε_{{n+1}} = ±h ε_n {}",
            if bad.is_empty() { "ok".to_string() } else { format!("{bad:?}") },
            b.identity_2,
            b.stated_3,
            b.identity_4
        ),
    )
}

fn c9_koszul() -> Outcome {
    let dias = preset_quadratic("dias").unwrap();
    let dend = preset_quadratic("dend").unwrap();
    let dual = quadratic_dual(&dias);
    let spans = dual.same_span(&dend);
    let sizes = dias.relations().len() + dual.relations().len() == 8;
    let double = quadratic_dual(&dual).same_span(&dias);
    outcome(spans && sizes && double, format!("dual spans dend {spans}; 5 + 3 = 8 {sizes}; double dual {double}"))
}

fn c10_poincare() -> Outcome {
    const N: usize = 10;
    let dias = poincare_check("dias", N).unwrap();
    let dend = poincare_check("dend", N).unwrap();
    let verdict = if dias.inverse_ok == Some(true) {
        format!("OK: g_Dend(g_Dias(x)) = x mod x^{}", N + 1)
    } else {
        "MISMATCH".to_string()
    };
    let coeffs_ok = (1..=N).all(|n| {
        dias.series.coeff(n) == sign(n as i64) * q(n as i64)
            && dend.series.coeff(n) == sign(n as i64) * Q::from_integer((catalan(n) as i64).into())
    });
    let closed = dias.closed_form_ok == Some(true) && dend.closed_form_ok == Some(true);
    let mut x = vec![Q::zero(); N + 1];
    x[1] = Q::one();
    let independent = compose_by_powers(dend.series.coeffs(), dias.series.coeffs(), N) == x;
    outcome(
        verdict.starts_with("OK") && coeffs_ok && closed && independent,
        format!("{verdict}; closed forms {closed}; coefficients {coeffs_ok}; power-sum oracle {independent}"),
    )
}

fn c11_zinbiel() -> Outcome {
    let xyz = syms(&["x", "y", "z"]);
    let table = [
        ("[3,2,1]", &["[1,2,3]"][..]),
        ("[3,1,2]", &["[1,3,2]"][..]),
        ("[1,3,1]", &["[2,1,3]", "[3,1,2]"][..]),
        ("[2,1,3]", &["[2,3,1]"][..]),
        ("[1,2,3]", &["[3,2,1]"][..]),
    ];
    let mut table_ok = 0;
    for (tree, perms) in table {
        let y: Tree = tree.parse().unwrap();
        let got = dend_to_zinb(&LinComb::basis(DendTerm::new(y, xyz.clone()).unwrap())).unwrap();
        let want: LinComb<Word> = perms
            .iter()
            .map(|p| (Q::one(), Word::new(p.parse::<Permutation>().unwrap().act(&xyz))))
            .collect();
        if got == want {
            table_ok += 1;
        }
    }
    let gens = syms(&["x", "y"]);
    let terms: Vec<DendTerm> = (1..=3).flat_map(|n| DendTerm::all(&gens, n)).collect();
    let mut hom_ok = true;
    for a in &terms {
        for b in &terms {
            if a.degree() + b.degree() > 4 {
                continue;
            }
            let (a, b) = (LinComb::basis(a.clone()), LinComb::basis(b.clone()));
            let (pa, pb) = (dend_to_zinb(&a).unwrap(), dend_to_zinb(&b).unwrap());
            hom_ok &= dend_to_zinb(&dend_mul(&a, &b, DendOp::Prec).unwrap()).unwrap() == zinb_mul(&pa, &pb, ZinbMode::Dot);
            hom_ok &= dend_to_zinb(&dend_mul(&a, &b, DendOp::Succ).unwrap()).unwrap() == zinb_mul(&pb, &pa, ZinbMode::Dot);
        }
    }
    outcome(table_ok == 5 && hom_ok, format!("table {table_ok}/5; homomorphism through degree 4 {hom_ok}"))
}

/// The displayed low-degree relations, as `(tree, [(sign, operation)])`
/// with everything moved to the left-hand side.
fn displayed_relations() -> Vec<(&'static str, Vec<(i64, String)>)> {
    let deltas = |m: &str| {
        vec![
            (1, format!("δ∘{m}")),
            (1, format!("{m}(δ⊗1⊗1)")),
            (1, format!("{m}(1⊗δ⊗1)")),
            (1, format!("{m}(1⊗1⊗δ)")),
        ]
    };
    let three = |y: &'static str, m: &str, a: &str, b: &str| {
        let mut terms = deltas(m);
        terms.push((-1, a.to_string()));
        terms.push((1, b.to_string()));
        (y, terms)
    };
    vec![
        ("[1]", vec![(1, "δ∘δ".to_string())]),
        ("[1,2]", vec![(1, "δ∘m12".into()), (-1, "m12(δ⊗1)".into()), (-1, "m12(1⊗δ)".into())]),
        ("[2,1]", vec![(1, "δ∘m21".into()), (-1, "m21(δ⊗1)".into()), (-1, "m21(1⊗δ)".into())]),
        three("[1,2,3]", "m123", "m12(m12⊗1)", "m12(1⊗m12)"),
        three("[2,1,3]", "m213", "m12(m21⊗1)", "m12(1⊗m12)"),
        three("[1,3,1]", "m131", "m21(m12⊗1)", "m12(1⊗m21)"),
        three("[3,1,2]", "m312", "m21(m21⊗1)", "m21(1⊗m12)"),
        three("[3,2,1]", "m321", "m21(m21⊗1)", "m21(1⊗m21)"),
    ]
}

fn generated(y: &str) -> Vec<(i64, String)> {
    let rel = sh_relation(&y.parse().unwrap());
    let zeros = vec![0; rel.tree.degree()];
    let mut terms: Vec<(i64, String)> = rel
        .instantiate(&zeros)
        .unwrap()
        .into_iter()
        .map(|(c, op)| (if c.is_one() { 1 } else { -1 }, op))
        .collect();
    terms.sort();
    terms
}

/// Whether the generated signs agree with the display up to one global sign.
fn signs_agree(y: &str, shown: &[(i64, String)]) -> bool {
    let mut shown = shown.to_vec();
    shown.sort();
    let gen = generated(y);
    let mut flipped: Vec<(i64, String)> = shown.iter().map(|(c, s)| (-c, s.clone())).collect();
    flipped.sort();
    gen == shown || gen == flipped
}

fn c12_sh() -> Outcome {
    let counts: Vec<usize> = (1..=3).map(|n| sh_relations(n).unwrap().len()).collect();
    let mut matched = 0;
    let shown = displayed_relations();
    for (y, terms) in &shown {
        let mut want: Vec<String> = terms.iter().map(|(_, s)| s.clone()).collect();
        let mut got: Vec<String> = generated(y).into_iter().map(|(_, s)| s).collect();
        want.sort();
        got.sort();
        if want == got {
            matched += 1;
        }
    }
    outcome(
        counts == [1, 2, 5] && matched == shown.len(),
        format!("relations per degree {counts:?}; term multisets and labels match {matched}/{}", shown.len()),
    )
}

fn c13_tensor_bracket() -> Outcome {
    let gens = syms(&["x1", "x2"]);
    let dias: Vec<PointedWord> = (1..=2).flat_map(|n| PointedWord::all(&gens, n)).collect();
    let dend: Vec<DendTerm> = (1..=2).flat_map(|n| DendTerm::all(&gens, n)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let (mut anti, mut jacobi, mut nontrivial) = (0, 0, 0);
    for _ in 0..RANDOM_SAMPLES {
        let u = random_tensor(&mut rng, &dias, &dend);
        let v = random_tensor(&mut rng, &dias, &dend);
        let w = random_tensor(&mut rng, &dias, &dend);
        if (tensor_bracket(&u, &v) + tensor_bracket(&v, &u)).is_zero() {
            anti += 1;
        }
        let inner = tensor_bracket(&v, &w);
        if !tensor_bracket(&u, &inner).is_zero() {
            nontrivial += 1;
        }
        let j = tensor_bracket(&u, &inner) + tensor_bracket(&v, &tensor_bracket(&w, &u)) + tensor_bracket(&w, &tensor_bracket(&u, &v));
        if j.is_zero() {
            jacobi += 1;
        }
    }
    outcome(
        anti == RANDOM_SAMPLES && jacobi == RANDOM_SAMPLES && nontrivial > 0,
        format!("antisymmetric {anti}/{RANDOM_SAMPLES}; Jacobi {jacobi}/{RANDOM_SAMPLES}; nonzero double brackets {nontrivial}"),
    )
}

fn informational() -> Vec<String> {
    let mut out = Vec::new();
    let b = bracket_identities("diff-upper2");
    out.push(format!("d h(y) + h(y) d = -ad(y): {}", if b.corrected_3 { "holds" } else { "fails" }));
    let counts: Vec<String> = (2..=5)
        .map(|n| {
            let per_r: Vec<usize> = (1..=n).map(|r| theta_sequences(n, r).map_or(0, |v| v.len())).collect();
            format!("n={n}: {per_r:?}")
        })
        .collect();
    out.push(format!("Θ terms per r (C(n-1, r-1), not C(n, r)): {}", counts.join("; ")));
    let shown = displayed_relations();
    let agree: Vec<String> =
        shown.iter().map(|(y, terms)| format!("{y} {}", if signs_agree(y, terms) { "agree" } else { "differ" })).collect();
    out.push(format!("sh relation signs at |a_j| = 0, up to a global sign: {}", agree.join(", ")));
    let mut orient = Vec::new();
    for outer in (1..=2).flat_map(Tree::enumerate) {
        for inner in (1..=2).flat_map(Tree::enumerate) {
            for i in 1..=outer.degree() {
                let r = compose_report(&outer, i, &inner).unwrap();
                orient.push((r.standard_matches, r.mirrored_matches));
            }
        }
    }
    let standard = orient.iter().filter(|p| p.0).count();
    let mirrored = orient.iter().filter(|p| p.1).count();
    out.push(format!(
        "nested-subtree description of ∘_i through degree 3: standard orientation {standard}/{n}, mirrored {mirrored}/{n}",
        n = orient.len()
    ));
    out.push(format!("tolerance {TOLERANCE} (exact rationals), seed {SEED}"));
    out
}
