//! The built-in verification table: every headline result the crate is
//! expected to reproduce, runnable as a library call (`run_all`), from the
//! CLI (`weylpi repro`), and from the acceptance test suite.
//!
//! All checks are exact; there are no tolerances anywhere.

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::catalog::{named, Name};
use crate::exppoly::{falling_factorial, ExpPoly, Sym};
use crate::freealg::{parse, render, standard_polynomial, FreePoly, MultiDegree, Word};
use crate::idsolve::{assemble_check_matrix, solve, MatrixLabel, SolveReport};
use crate::linearize::{lin, Composition};
use crate::scalar::{Char, Scalar};
use crate::weyl::{quartic_closed_form, SymbolicWeylElement, WeylElement};
use crate::witt::{eval_concrete, eval_weyl, is_identity, BasisIndex, Verdict};

/// Outcome of one criterion.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn from_failures(name: &'static str, ok_detail: &str, failures: Vec<String>) -> CheckResult {
        if failures.is_empty() {
            CheckResult {
                name,
                passed: true,
                detail: ok_detail.to_string(),
            }
        } else {
            CheckResult {
                name,
                passed: false,
                detail: failures.join("; "),
            }
        }
    }
}

fn parallel_enabled() -> bool {
    std::env::var_os("WEYLPI_NO_PARALLEL").is_none()
}

const TESTED_CHARS: [Char; 4] = [Char::Zero, Char::Prime(2), Char::Prime(3), Char::Prime(5)];

/// Run the whole table, one result per criterion.
pub fn run_all() -> Vec<CheckResult> {
    vec![
        quartic_oracle_grid(),
        degree_three_space(),
        multidegree_31_trivial(),
        multidegree_22_spanned_by_phi22(),
        multidegree_211_spaces(),
        multilinear_degree_four_spaces(),
        verification_matrices(),
        st3_product_equalities(),
        identity_verdicts(),
        linearized_evaluation_check(),
        property_suites(),
    ]
}

/// Criterion 1: the quartic closed form agrees with the product chain on
/// the whole grid {0..6}^4 over Q, F_2, F_3.
pub fn quartic_oracle_grid() -> CheckResult {
    let chars = [Char::Zero, Char::Prime(2), Char::Prime(3)];
    let pairs: Vec<(u32, u32)> = (0..=6u32)
        .flat_map(|i| (0..=6u32).map(move |j| (i, j)))
        .collect();
    let check_pair = |&(i, j): &(u32, u32)| -> Vec<String> {
        let mut failures = Vec::new();
        for ch in chars {
            let prefix = WeylElement::basis_c(i, ch).mul(&WeylElement::basis_c(j, ch));
            for k in 0..=6u32 {
                let prefix3 = prefix.mul(&WeylElement::basis_c(k, ch));
                for l in 0..=6u32 {
                    let chain = prefix3.mul(&WeylElement::basis_c(l, ch));
                    if quartic_closed_form(i, j, k, l, ch) != chain {
                        failures.push(format!("({i},{j},{k},{l}) over {ch}"));
                    }
                }
            }
        }
        failures
    };
    let failures: Vec<String> = if parallel_enabled() {
        pairs.par_iter().flat_map_iter(check_pair).collect()
    } else {
        pairs.iter().flat_map(check_pair).collect()
    };
    CheckResult::from_failures(
        "1 quartic closed form = product chain on {0..6}^4 over Q, F2, F3",
        "2401 tuples x 3 characteristics, exact equality",
        failures,
    )
}

/// Criterion 2: the degree-3 multilinear identity space is one-dimensional
/// and spanned by St3 in characteristics 0 and 2.
pub fn degree_three_space() -> CheckResult {
    let mut failures = Vec::new();
    let d = MultiDegree::new(vec![1, 1, 1]);
    for ch in [Char::Zero, Char::Prime(2)] {
        let report = solve(&d, ch);
        let st3 = standard_polynomial(3, &[1, 2, 3], ch).unwrap();
        if report.dimension != 1 {
            failures.push(format!("dimension {} over {ch}", report.dimension));
        } else if !report.contains(&st3).unwrap() {
            failures.push(format!("St3 not in the space over {ch}"));
        }
    }
    CheckResult::from_failures(
        "2 multidegree (1,1,1): dimension 1, spanned by St3 (char 0 and 2)",
        "dimension 1 and St3 membership in both characteristics",
        failures,
    )
}

/// Criterion 3: no identities of multidegree (3,1) in any tested
/// characteristic.
pub fn multidegree_31_trivial() -> CheckResult {
    let d = MultiDegree::new(vec![3, 1]);
    let failures: Vec<String> = TESTED_CHARS
        .iter()
        .filter_map(|&ch| {
            let dim = solve(&d, ch).dimension;
            (dim != 0).then(|| format!("dimension {dim} over {ch}"))
        })
        .collect();
    CheckResult::from_failures(
        "3 multidegree (3,1): dimension 0 over char 0, 2, 3, 5",
        "dimension 0 in all four characteristics",
        failures,
    )
}

/// Criterion 4: the multidegree-(2,2) space is one-dimensional and contains
/// the image of Phi22 in every tested characteristic.
pub fn multidegree_22_spanned_by_phi22() -> CheckResult {
    let d = MultiDegree::new(vec![2, 2]);
    let mut failures = Vec::new();
    for ch in TESTED_CHARS {
        let report = solve(&d, ch);
        if report.dimension != 1 {
            failures.push(format!("dimension {} over {ch}", report.dimension));
        } else if !report.contains(&named(Name::Phi22, ch)).unwrap() {
            failures.push(format!("Phi22 not in the space over {ch}"));
        }
    }
    CheckResult::from_failures(
        "4 multidegree (2,2): dimension 1, contains Phi22 (char 0, 2, 3, 5)",
        "dimension 1 and Phi22 membership in all four characteristics",
        failures,
    )
}

fn x1_st3(ch: Char) -> FreePoly {
    FreePoly::var(1, ch).mul(&standard_polynomial(3, &[1, 2, 3], ch).unwrap())
}

fn st3_x1(ch: Char) -> FreePoly {
    standard_polynomial(3, &[1, 2, 3], ch)
        .unwrap()
        .mul(&FreePoly::var(1, ch))
}

fn check_listed_basis(
    report: &SolveReport,
    listed: &[(&str, FreePoly)],
    failures: &mut Vec<String>,
    want_dim: usize,
) {
    let ch = report.ch;
    if report.dimension != want_dim {
        failures.push(format!("dimension {} over {ch}", report.dimension));
        return;
    }
    for (label, f) in listed {
        if !report.contains(f).unwrap() {
            failures.push(format!("{label} not in the space over {ch}"));
        }
    }
    let polys: Vec<FreePoly> = listed.iter().map(|(_, f)| f.clone()).collect();
    let rank = report.rank_of(&polys).unwrap();
    if rank != listed.len() {
        failures.push(format!(
            "listed elements have rank {rank}, expected {} over {ch}",
            listed.len()
        ));
    }
}

/// Criterion 5: the multidegree-(2,1,1) spaces and their listed bases.
pub fn multidegree_211_spaces() -> CheckResult {
    let d = MultiDegree::new(vec![2, 1, 1]);
    let mut failures = Vec::new();

    let ch = Char::Zero;
    let listed0 = [
        ("x1*St3", x1_st3(ch)),
        ("St3*x1", st3_x1(ch)),
        ("Phi211", named(Name::Phi211, ch)),
    ];
    check_listed_basis(&solve(&d, ch), &listed0, &mut failures, 3);

    let ch = Char::Prime(2);
    let listed2 = [
        ("x1*St3", x1_st3(ch)),
        ("St3*x1", st3_x1(ch)),
        ("Psi211", named(Name::Psi211, ch)),
        ("[[x1,x2],[x1,x3]]", parse("[[x1,x2],[x1,x3]]", ch).unwrap()),
    ];
    check_listed_basis(&solve(&d, ch), &listed2, &mut failures, 4);

    CheckResult::from_failures(
        "5 multidegree (2,1,1): dim 3 (char 0) / dim 4 (char 2) with listed bases",
        "dimensions, memberships, and linear independence verified",
        failures,
    )
}

/// Criterion 6: the multilinear degree-4 spaces and their listed bases.
pub fn multilinear_degree_four_spaces() -> CheckResult {
    let d = MultiDegree::new(vec![1, 1, 1, 1]);
    let mut failures = Vec::new();

    let ch = Char::Zero;
    let mut listed0 = vec![
        ("Gamma".to_string(), named(Name::Gamma, ch)),
        ("PhiLin".to_string(), named(Name::PhiLin, ch)),
    ];
    for i in 1..=4u32 {
        listed0.push((format!("St3Left{i}"), named(Name::St3Left(i), ch)));
    }
    for i in 1..=3u32 {
        listed0.push((format!("St3Right{i}"), named(Name::St3Right(i), ch)));
    }
    let as_refs: Vec<(&str, FreePoly)> = listed0
        .iter()
        .map(|(s, f)| (s.as_str(), f.clone()))
        .collect();
    check_listed_basis(&solve(&d, ch), &as_refs, &mut failures, 9);

    let ch = Char::Prime(2);
    let mut listed2 = vec![
        ("Gamma".to_string(), named(Name::Gamma, ch)),
        ("Psi".to_string(), named(Name::Psi, ch)),
        ("Delta".to_string(), named(Name::Delta, ch)),
        ("Lambda".to_string(), named(Name::Lambda, ch)),
    ];
    for i in 1..=4u32 {
        listed2.push((format!("St3Left{i}"), named(Name::St3Left(i), ch)));
    }
    for i in 1..=3u32 {
        listed2.push((format!("St3Right{i}"), named(Name::St3Right(i), ch)));
    }
    listed2.push((
        "[[x1,x3],[x2,x4]]".to_string(),
        parse("[[x1,x3],[x2,x4]]", ch).unwrap(),
    ));
    let as_refs2: Vec<(&str, FreePoly)> = listed2
        .iter()
        .map(|(s, f)| (s.as_str(), f.clone()))
        .collect();
    check_listed_basis(&solve(&d, ch), &as_refs2, &mut failures, 12);

    CheckResult::from_failures(
        "6 multidegree (1,1,1,1): dim 9 (char 0) / dim 12 (char 2) with listed bases",
        "dimensions, memberships, independence, and cardinality verified",
        failures,
    )
}

fn golden_matrix(label: MatrixLabel) -> Vec<Vec<i64>> {
    let raw = match label {
        MatrixLabel::P44 => include_str!("../golden/matrix_p44.json"),
        MatrixLabel::P45 => include_str!("../golden/matrix_p45.json"),
        MatrixLabel::P45S => include_str!("../golden/matrix_p45s.json"),
    };
    let v: serde_json::Value = serde_json::from_str(raw).expect("golden matrix parses");
    v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|row| {
            row.as_array()
                .unwrap()
                .iter()
                .map(|e| e.as_i64().unwrap())
                .collect()
        })
        .collect()
}

/// Criterion 7: the three verification matrices match their golden copies
/// entry by entry and have the expected determinants.
pub fn verification_matrices() -> CheckResult {
    let mut failures = Vec::new();

    let p44 = assemble_check_matrix(MatrixLabel::P44);
    if p44.entries != golden_matrix(MatrixLabel::P44) {
        failures.push("P44 differs from the stored 15x15 matrix".to_string());
    }
    if p44.det() != BigInt::from(-64) {
        failures.push(format!("det(P44) = {}, expected -64", p44.det()));
    }

    let p45 = assemble_check_matrix(MatrixLabel::P45);
    if p45.entries != golden_matrix(MatrixLabel::P45) {
        failures.push("P45 differs from the stored 12x12 matrix".to_string());
    }
    if p45.det_mod(2) != 1 {
        failures.push(format!("det(P45) = {} mod 2, expected 1", p45.det_mod(2)));
    }

    let p45s = assemble_check_matrix(MatrixLabel::P45S);
    if p45s.entries != golden_matrix(MatrixLabel::P45S) {
        failures.push("P45S differs from the stored 5x5 matrix".to_string());
    }
    if p45s.det_mod(2) == 0 {
        failures.push("P45S is singular mod 2".to_string());
    }

    CheckResult::from_failures(
        "7 verification matrices match their golden copies; det(P44) = -64, det(P45) = 1 mod 2, P45S invertible",
        "all entries equal, determinants exact",
        failures,
    )
}

/// Criterion 8: the two St3-product equalities hold exactly over Q.
pub fn st3_product_equalities() -> CheckResult {
    let q = Char::Zero;
    let mut failures = Vec::new();

    let lhs = named(Name::Gamma, q)
        .scale_int(4)
        .sub(&named(Name::Lambda, q).scale_int(2));
    let rhs = named(Name::PhiLin, q)
        .add(&named(Name::St3Left(1), q))
        .add(&named(Name::St3Left(2), q))
        .add(&named(Name::St3Left(3), q).scale_int(2))
        .add(&named(Name::St3Right(1), q))
        .add(&named(Name::St3Right(2), q))
        .add(&named(Name::St3Right(3), q).scale_int(2));
    if lhs != rhs {
        failures.push("4*Gamma - 2*Lambda differs from the St3 combination".to_string());
    }

    let mut alt = FreePoly::zero(q);
    for i in 1..=4u32 {
        let sign = if i % 2 == 1 { 1 } else { -1 };
        alt = alt.add(&named(Name::St3Left(i), q).scale_int(sign));
        alt = alt.add(&named(Name::St3Right(i), q).scale_int(sign));
    }
    if !alt.is_zero() {
        failures.push("alternating St3 sum is nonzero".to_string());
    }

    CheckResult::from_failures(
        "8 both St3-product equalities hold exactly over Q",
        "4*Gamma - 2*Lambda decomposition and the alternating sum",
        failures,
    )
}

fn expect_identity(f: &FreePoly, label: &str, failures: &mut Vec<String>) {
    let report = is_identity(f);
    if !report.is_identity() {
        failures.push(format!("{label} over {}: expected Identity", f.char()));
    }
}

fn expect_refuted(f: &FreePoly, label: &str, failures: &mut Vec<String>) {
    let report = is_identity(f);
    match report.verdict {
        Verdict::Identity => {
            failures.push(format!("{label} over {}: expected NotIdentity", f.char()));
        }
        Verdict::NotIdentity(w) => {
            // The witness must re-check concretely.
            let concrete = eval_concrete(&w.linearization, &w.point).unwrap();
            let observed = concrete.coefficient(w.x_exp, w.y_exp);
            if observed.is_zero() || observed != w.coefficient {
                failures.push(format!(
                    "{label} over {}: witness does not re-check",
                    f.char()
                ));
            }
        }
    }
}

/// Criterion 9: identity verdicts for the catalog.
pub fn identity_verdicts() -> CheckResult {
    let mut failures = Vec::new();

    for ch in TESTED_CHARS {
        for name in [Name::Phi22, Name::Phi211, Name::PhiLin] {
            expect_identity(&named(name, ch), &name.to_string(), &mut failures);
        }
    }

    let two = Char::Prime(2);
    for name in [
        Name::Psi211,
        Name::Psi,
        Name::PsiLin,
        Name::CommSq,
        Name::Delta,
        Name::Gamma,
        Name::Lambda,
    ] {
        expect_identity(&named(name, two), &name.to_string(), &mut failures);
    }

    expect_refuted(&named(Name::Delta, Char::Zero), "Delta", &mut failures);
    for ch in TESTED_CHARS {
        let st2 = standard_polynomial(2, &[1, 2], ch).unwrap();
        expect_refuted(&st2, "St2", &mut failures);
    }

    CheckResult::from_failures(
        "9 identity verdicts: Phi family everywhere; Psi family, CommSq, Delta, Gamma, Lambda over F2; refutations re-check",
        "all verdicts as expected, refutation witnesses re-verified",
        failures,
    )
}

/// Criterion 10: the linearized evaluations at (c1, c1, c2) over F_2.
pub fn linearized_evaluation_check() -> CheckResult {
    let ch = Char::Prime(2);
    let mut failures = Vec::new();
    let want = WeylElement::monomial(2, 1, Scalar::one(ch));
    for text in ["x1^2*x2^2 - x2^2*x1^2", "x1*x2*x1*x2 + x2*x1*x2*x1"] {
        let f = parse(text, ch).unwrap();
        let h = lin(&f, 2, &Composition::new(vec![1, 1]).unwrap()).unwrap();
        let got = eval_concrete(&h, &[BasisIndex(1), BasisIndex(1), BasisIndex(2)]).unwrap();
        if got != want {
            failures.push(format!("{text}: got {got}"));
        }
    }
    CheckResult::from_failures(
        "10 (1,1)-linearizations in x2 evaluate to x^2*y at (c1,c1,c2) over F2",
        "both survivors of the (2,2) analysis give x^2*y",
        failures,
    )
}

/// Criterion 11: the exact property suites.
pub fn property_suites() -> CheckResult {
    let mut failures = Vec::new();
    field_axiom_sweep(&mut failures);
    zero_function_vs_brute_force(&mut failures);
    st_alternation(&mut failures);
    parse_render_round_trips(&mut failures);
    center_membership(&mut failures);
    truncation_and_substitution_grid(&mut failures);
    multinomial_substitution(&mut failures);
    sum_reconstruction(&mut failures);
    CheckResult::from_failures(
        "11 property suites: field axioms, zero-function oracle, St alternation, \
         parse/render, center, truncation grid, substitution homomorphisms",
        "all exact property suites passed",
        failures,
    )
}

fn field_axiom_sweep(failures: &mut Vec<String>) {
    for ch in TESTED_CHARS {
        for a in -6i64..=6 {
            for b in -6i64..=6 {
                for c in -6i64..=6 {
                    let (x, y, z) = (
                        Scalar::from_int(a, ch),
                        Scalar::from_int(b, ch),
                        Scalar::from_int(c, ch),
                    );
                    let ok = x.add(&y).add(&z) == x.add(&y.add(&z))
                        && x.mul(&y).mul(&z) == x.mul(&y.mul(&z))
                        && x.add(&y) == y.add(&x)
                        && x.mul(&y) == y.mul(&x)
                        && x.mul(&y.add(&z)) == x.mul(&y).add(&x.mul(&z))
                        && x.add(&x.neg()).is_zero()
                        && (x.is_zero() || x.mul(&x.inv().unwrap()).is_one());
                    if !ok {
                        failures.push(format!("field axiom failed at ({a},{b},{c}) over {ch}"));
                        return;
                    }
                }
            }
        }
    }
}

fn zero_function_vs_brute_force(failures: &mut Vec<String>) {
    use itertools::Itertools;
    let i = ExpPoly::symbol(0);
    let j = ExpPoly::symbol(1);
    let k = ExpPoly::symbol(2);
    let cases = vec![
        i.mul(&i).sub(&i),
        i.mul(&i).mul(&i).sub(&i),
        falling_factorial(0, 2),
        falling_factorial(1, 3),
        i.add(&j).scale(&2.into()),
        i.mul(&j).sub(&j.mul(&k)),
        i.mul(&i).mul(&j).sub(&i.mul(&j)),
        k.mul(&k).mul(&k).mul(&k).mul(&k).sub(&k),
        ExpPoly::constant(6.into()),
        ExpPoly::zero(),
    ];
    for p in &cases {
        for q in [2u64, 3, 5] {
            let nvars = p.max_symbol().map_or(0, |s| s as usize + 1);
            let brute = (0..nvars)
                .map(|_| 0..q)
                .multi_cartesian_product()
                .chain(std::iter::once(vec![0; nvars.max(1)]))
                .all(|pt| (p.eval(&pt).unwrap() % BigInt::from(q)).is_zero());
            if p.is_zero_function(Char::Prime(q)) != brute {
                failures.push(format!("zero-function decision wrong for {p} mod {q}"));
            }
        }
    }
}

fn st_alternation(failures: &mut Vec<String>) {
    for n in 2..=4usize {
        let vars: Vec<u32> = (1..=n as u32).collect();
        let base = standard_polynomial(n, &vars, Char::Zero).unwrap();
        for a in 0..n {
            for b in a + 1..n {
                let mut swapped = vars.clone();
                swapped.swap(a, b);
                let args: Vec<FreePoly> = swapped
                    .iter()
                    .map(|&v| FreePoly::var(v, Char::Zero))
                    .collect();
                if crate::freealg::st_of_polys(&args) != base.neg() {
                    failures.push(format!("St_{n} does not alternate under {a}<->{b}"));
                }
            }
        }
    }
}

/// Small deterministic generator for round-trip checks (no RNG dependency).
struct Lcg(u64);

impl Lcg {
    fn next(&mut self) -> u64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.0 >> 33
    }

    fn range(&mut self, n: u64) -> u64 {
        self.next() % n
    }
}

fn parse_render_round_trips(failures: &mut Vec<String>) {
    let mut rng = Lcg(0x5eed);
    for ch in TESTED_CHARS {
        for _ in 0..100 {
            let mut f = FreePoly::zero(ch);
            for _ in 0..rng.range(5) {
                let len = rng.range(5) as usize;
                let letters: Vec<u32> = (0..len).map(|_| rng.range(4) as u32 + 1).collect();
                let num = rng.range(19) as i64 - 9;
                let c = if ch.is_zero() && rng.range(3) == 0 {
                    Scalar::from_ratio(&BigInt::from(num), &BigInt::from(rng.range(4) as i64 + 1))
                        .unwrap()
                } else {
                    Scalar::from_int(num, ch)
                };
                f.add_term(Word::new(letters), &c);
            }
            let text = render(&f);
            match parse(&text, ch) {
                Ok(back) if back == f => {}
                Ok(_) => failures.push(format!("round trip changed `{text}` over {ch}")),
                Err(e) => failures.push(format!("round trip failed on `{text}` over {ch}: {e}")),
            }
        }
    }
}

fn center_membership(failures: &mut Vec<String>) {
    for p in [2u64, 3, 5] {
        let ch = Char::Prime(p);
        let x = WeylElement::monomial(1, 0, Scalar::one(ch));
        let y = WeylElement::monomial(0, 1, Scalar::one(ch));
        if !x.pow(p as u32).commutator(&y).is_zero() || !y.pow(p as u32).commutator(&x).is_zero() {
            failures.push(format!("x^{p} or y^{p} not central mod {p}"));
        }
    }
    let q = Char::Zero;
    let x = WeylElement::monomial(1, 0, Scalar::one(q));
    let y = WeylElement::monomial(0, 1, Scalar::one(q));
    for k in 0..=3u32 {
        for l in 0..=3u32 {
            if (k, l) == (0, 0) {
                continue;
            }
            let m = WeylElement::monomial(k, l, Scalar::one(q));
            if m.commutator(&x).is_zero() && m.commutator(&y).is_zero() {
                failures.push(format!("x^{k} y^{l} is central over Q"));
            }
        }
    }
}

/// Truncation soundness and the substitution homomorphism: for products of
/// up to 6 symbolic basis factors and every point of {0..6}^n, substitution
/// succeeds (no negative exponent carries a nonzero coefficient) and equals
/// the concrete product chain.
fn truncation_and_substitution_grid(failures: &mut Vec<String>) {
    let ch = Char::Zero;
    for n in 1..=6usize {
        let syms: Vec<Sym> = (0..n as Sym).collect();
        let symbolic = SymbolicWeylElement::basis_product(&syms);
        let first: Vec<u64> = (0..=6).collect();
        let check_branch = |&v0: &u64| -> Vec<String> {
            let mut local = Vec::new();
            let start = WeylElement::basis_c(v0 as u32, ch);
            let mut point = vec![v0];
            dfs_grid(&symbolic, &start, &mut point, n, ch, &mut local);
            local
        };
        let branch_failures: Vec<String> = if parallel_enabled() {
            first.par_iter().flat_map_iter(check_branch).collect()
        } else {
            first.iter().flat_map(check_branch).collect()
        };
        failures.extend(branch_failures);
        if !failures.is_empty() {
            return;
        }
    }
}

fn dfs_grid(
    symbolic: &SymbolicWeylElement,
    prefix: &WeylElement,
    point: &mut Vec<u64>,
    n: usize,
    ch: Char,
    failures: &mut Vec<String>,
) {
    if point.len() == n {
        match symbolic.substitute(point, ch) {
            Err(e) => failures.push(format!("substitution failed at {point:?}: {e}")),
            Ok(via_sym) => {
                if via_sym != *prefix {
                    failures.push(format!("homomorphism broken at {point:?}"));
                }
            }
        }
        return;
    }
    for v in 0..=6u64 {
        point.push(v);
        let next = prefix.mul(&WeylElement::basis_c(v as u32, ch));
        dfs_grid(symbolic, &next, point, n, ch, failures);
        point.pop();
    }
}

/// Evaluating a partial linearization with all inserted arguments equal
/// multiplies the plain evaluation by the multinomial coefficient (computed
/// in Z and mapped through the characteristic).
fn multinomial_substitution(failures: &mut Vec<String>) {
    let cases: [(&str, u32, &[u32], i64); 4] = [
        ("x1^2*x2", 1, &[1, 1], 2),
        ("x1^3", 1, &[2, 1], 3),
        ("x1^3", 1, &[1, 1, 1], 6),
        ("x1^2*x2^2 - 3*x1*x2*x1*x2", 2, &[1, 1], 2),
    ];
    for ch in [Char::Zero, Char::Prime(2), Char::Prime(3)] {
        for (text, var, parts, multinomial) in cases {
            let f = parse(text, ch).unwrap();
            let gamma = Composition::new(parts.to_vec()).unwrap();
            let h = lin(&f, var, &gamma).unwrap();
            let m = f.max_var();
            let k = parts.len() as u32;
            for a in 0..=3u32 {
                for b in 0..=3u32 {
                    // Arguments for f, and for h with the block repeated.
                    let base = [a, b];
                    let f_point: Vec<BasisIndex> =
                        (1..=m).map(|v| BasisIndex(base[v as usize - 1])).collect();
                    let mut h_point = Vec::new();
                    for v in 1..=m {
                        if v == var {
                            h_point.extend(std::iter::repeat_n(
                                BasisIndex(base[v as usize - 1]),
                                k as usize,
                            ));
                        } else {
                            h_point.push(BasisIndex(base[v as usize - 1]));
                        }
                    }
                    let lhs = eval_concrete(&h, &h_point).unwrap();
                    let rhs = eval_concrete(&f, &f_point)
                        .unwrap()
                        .scale(&Scalar::from_int(multinomial, ch));
                    if lhs != rhs {
                        failures.push(format!(
                            "multinomial substitution failed for {text} gamma {parts:?} at ({a},{b}) over {ch}"
                        ));
                    }
                }
            }
        }
    }
}

/// Evaluating at a sum of basis elements equals the sum over all
/// compositions of the linearized evaluations (degrees 2 and 3).
fn sum_reconstruction(failures: &mut Vec<String>) {
    for ch in [Char::Zero, Char::Prime(2), Char::Prime(3)] {
        for (text, deg) in [("x1^2*x2", 2u32), ("x1^3", 3)] {
            let f = parse(text, ch).unwrap();
            for a in 0..=2u32 {
                for b in 0..=2u32 {
                    for c in 0..=2u32 {
                        let ca = WeylElement::basis_c(a, ch);
                        let cb = WeylElement::basis_c(b, ch);
                        let cc = WeylElement::basis_c(c, ch);
                        let lhs = eval_weyl(&f, &[ca.add(&cb), cc.clone()]).unwrap();
                        // gamma = (deg): x1 = a, then x1 = b.
                        let mut rhs = eval_weyl(&f, &[ca.clone(), cc.clone()])
                            .unwrap()
                            .add(&eval_weyl(&f, &[cb.clone(), cc.clone()]).unwrap());
                        // Proper two-part compositions route (a, b) into the block.
                        for parts in crate::linearize::compositions(deg)
                            .into_iter()
                            .filter(|p| p.len() == 2)
                        {
                            let gamma = Composition::new(parts).unwrap();
                            let h = lin(&f, 1, &gamma).unwrap();
                            rhs = rhs.add(
                                &eval_weyl(&h, &[ca.clone(), cb.clone(), cc.clone()]).unwrap(),
                            );
                        }
                        if lhs != rhs {
                            failures.push(format!(
                                "sum reconstruction failed for {text} at ({a},{b},{c}) over {ch}"
                            ));
                        }
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn the_whole_table_passes() {
        for result in run_all() {
            assert!(result.passed, "{}: {}", result.name, result.detail);
        }
    }
}
