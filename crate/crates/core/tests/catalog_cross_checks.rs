//! Cross-checks tying the symbolic identity criterion to independent
//! concrete evaluation, over the whole catalog of named elements.

use weylpi::catalog::{named, Name, ALL_NAMES};
use weylpi::freealg::{parse, FreePoly, MultiDegree};
use weylpi::idsolve::solve;
use weylpi::linearize::all_linearizations;
use weylpi::scalar::Char;
use weylpi::witt::{eval_concrete, eval_symbolic, is_identity, BasisIndex};

fn tuples(nvars: usize, max: u32) -> Vec<Vec<BasisIndex>> {
    let mut out = vec![Vec::new()];
    for _ in 0..nvars {
        let mut next = Vec::with_capacity(out.len() * (max as usize + 1));
        for t in &out {
            for v in 0..=max {
                let mut u = t.clone();
                u.push(BasisIndex(v));
                next.push(u);
            }
        }
        out = next;
    }
    out
}

/// Does every linearization of every component vanish on all basis tuples
/// with indices up to 6? Independent of the symbolic criterion: pure
/// concrete product chains.
fn vanishes_on_grid(f: &FreePoly) -> bool {
    for (_, comp) in f.components() {
        for h in all_linearizations(&comp, true).unwrap() {
            let nvars = h.max_var() as usize;
            for t in tuples(nvars, 6) {
                if !eval_concrete(&h, &t).unwrap().is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

/// The symbolic verdict must agree with brute-force evaluation over the
/// index grid {0..6} for every catalog element and tested characteristic.
#[test]
fn identity_verdicts_agree_with_brute_force_on_the_catalog() {
    for name in ALL_NAMES {
        for ch in [Char::Zero, Char::Prime(2), Char::Prime(3)] {
            let f = named(name, ch);
            let verdict = is_identity(&f).is_identity();
            let brute = vanishes_on_grid(&f);
            assert_eq!(verdict, brute, "{name} over {ch}");
        }
    }
}

/// Substituting integers into the symbolic evaluation reproduces the
/// concrete one on the grid {0..4}^m for every catalog element.
#[test]
fn symbolic_evaluation_specializes_to_concrete_on_the_catalog() {
    for name in ALL_NAMES {
        for ch in [Char::Zero, Char::Prime(2), Char::Prime(3)] {
            let f = named(name, ch);
            let sym = eval_symbolic(&f).unwrap();
            let nvars = f.max_var() as usize;
            for t in tuples(nvars, 4) {
                let point: Vec<u64> = t.iter().map(|b| b.0 as u64).collect();
                let via_sym = sym.substitute(&point, ch).unwrap();
                let via_conc = eval_concrete(&f, &t).unwrap();
                assert_eq!(via_sym, via_conc, "{name} over {ch} at {point:?}");
            }
        }
    }
}

/// Every partial linearization of an identity is an identity.
#[test]
fn linearizations_of_identities_are_identities() {
    let identity_cases: Vec<(Name, Vec<Char>)> = vec![
        (
            Name::Phi22,
            vec![Char::Zero, Char::Prime(2), Char::Prime(3)],
        ),
        (
            Name::Phi211,
            vec![Char::Zero, Char::Prime(2), Char::Prime(3)],
        ),
        (
            Name::PhiLin,
            vec![Char::Zero, Char::Prime(2), Char::Prime(3)],
        ),
        (
            Name::Gamma,
            vec![Char::Zero, Char::Prime(2), Char::Prime(3)],
        ),
        (
            Name::Lambda,
            vec![Char::Zero, Char::Prime(2), Char::Prime(3)],
        ),
        (Name::Psi211, vec![Char::Prime(2)]),
        (Name::Psi, vec![Char::Prime(2)]),
        (Name::PsiLin, vec![Char::Prime(2)]),
        (Name::Delta, vec![Char::Prime(2)]),
        (Name::CommSq, vec![Char::Prime(2)]),
    ];
    for (name, chars) in identity_cases {
        for ch in chars {
            let f = named(name, ch);
            assert!(is_identity(&f).is_identity(), "{name} over {ch}");
            for h in all_linearizations(&f, true).unwrap() {
                assert!(
                    is_identity(&h).is_identity(),
                    "linearization of {name} over {ch}: {h}"
                );
            }
        }
    }
}

/// Membership of every named identity in the solved space of its
/// multidegree.
#[test]
fn named_identities_lie_in_their_solved_spaces() {
    let d22 = MultiDegree::new(vec![2, 2]);
    let d211 = MultiDegree::new(vec![2, 1, 1]);
    let d1111 = MultiDegree::new(vec![1, 1, 1, 1]);

    for ch in [Char::Zero, Char::Prime(2), Char::Prime(3)] {
        let r = solve(&d22, ch);
        assert!(
            r.contains(&named(Name::Phi22, ch)).unwrap(),
            "Phi22 over {ch}"
        );

        let r = solve(&d211, ch);
        assert!(
            r.contains(&named(Name::Phi211, ch)).unwrap(),
            "Phi211 over {ch}"
        );

        let r = solve(&d1111, ch);
        assert!(
            r.contains(&named(Name::PhiLin, ch)).unwrap(),
            "PhiLin over {ch}"
        );
        assert!(
            r.contains(&named(Name::Gamma, ch)).unwrap(),
            "Gamma over {ch}"
        );
        assert!(
            r.contains(&named(Name::Lambda, ch)).unwrap(),
            "Lambda over {ch}"
        );
    }

    let two = Char::Prime(2);
    let r211 = solve(&d211, two);
    assert!(r211.contains(&named(Name::Psi211, two)).unwrap());
    assert!(r211
        .contains(&parse("[[x1,x2],[x1,x3]]", two).unwrap())
        .unwrap());

    let r1111 = solve(&d1111, two);
    for name in [Name::Psi, Name::PsiLin, Name::Delta, Name::CommSq, Name::G] {
        assert!(r1111.contains(&named(name, two)).unwrap(), "{name} over F2");
    }
    assert!(r1111
        .contains(&parse("[[x1,x3],[x2,x4]]", two).unwrap())
        .unwrap());
}

/// The non-identities stay out of the solved spaces.
#[test]
fn non_identities_are_excluded_from_their_spaces() {
    let q = Char::Zero;
    let r = solve(&MultiDegree::new(vec![1, 1, 1, 1]), q);
    assert!(!r.contains(&named(Name::Delta, q)).unwrap());
    assert!(!r.contains(&named(Name::Psi, q)).unwrap());
    // A single monomial never is.
    let mono = parse("x1*x2*x3*x4", q).unwrap();
    assert!(!r.contains(&mono).unwrap());
    // Sanity: the brute-force grid also refutes Delta over Q.
    let delta = named(Name::Delta, q);
    let witness_exists = tuples(4, 2)
        .iter()
        .any(|t| !eval_concrete(&delta, t).unwrap().is_zero());
    assert!(witness_exists);
}
