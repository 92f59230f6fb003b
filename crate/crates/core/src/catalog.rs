//! Constructors for the named degree-4 elements and the rewriting of
//! multilinear elements into reduced form.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::freealg::{parse, standard_polynomial, FreePoly, MultiDegree, Word};
use crate::linearize::{lin_complete, Composition};
use crate::scalar::Char;

/// The catalog of named elements accepted by the CLI (case-insensitive,
/// underscores optional).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Name {
    Phi22,
    Phi211,
    PhiLin,
    Psi,
    Psi211,
    PsiLin,
    Gamma,
    Lambda,
    Delta,
    H,
    G,
    /// `[[x1,x2],[x3,x4]]`.
    CommSq,
    /// `x_i * St3` of the other three variables, `i` in `1..=4`.
    St3Left(u32),
    /// `St3` of the other three variables times `x_i`.
    St3Right(u32),
}

pub const ALL_NAMES: [Name; 20] = [
    Name::Phi22,
    Name::Phi211,
    Name::PhiLin,
    Name::Psi,
    Name::Psi211,
    Name::PsiLin,
    Name::Gamma,
    Name::Lambda,
    Name::Delta,
    Name::H,
    Name::G,
    Name::CommSq,
    Name::St3Left(1),
    Name::St3Left(2),
    Name::St3Left(3),
    Name::St3Left(4),
    Name::St3Right(1),
    Name::St3Right(2),
    Name::St3Right(3),
    Name::St3Right(4),
];

impl FromStr for Name {
    type Err = Error;

    fn from_str(s: &str) -> Result<Name> {
        let key: String = s
            .chars()
            .filter(|c| *c != '_')
            .map(|c| c.to_ascii_lowercase())
            .collect();
        match key.as_str() {
            "phi22" => Ok(Name::Phi22),
            "phi211" => Ok(Name::Phi211),
            "philin" => Ok(Name::PhiLin),
            "psi" => Ok(Name::Psi),
            "psi211" => Ok(Name::Psi211),
            "psilin" => Ok(Name::PsiLin),
            "gamma" => Ok(Name::Gamma),
            "lambda" => Ok(Name::Lambda),
            "delta" => Ok(Name::Delta),
            "h" => Ok(Name::H),
            "g" => Ok(Name::G),
            "commsq" => Ok(Name::CommSq),
            "st3left1" => Ok(Name::St3Left(1)),
            "st3left2" => Ok(Name::St3Left(2)),
            "st3left3" => Ok(Name::St3Left(3)),
            "st3left4" => Ok(Name::St3Left(4)),
            "st3right1" => Ok(Name::St3Right(1)),
            "st3right2" => Ok(Name::St3Right(2)),
            "st3right3" => Ok(Name::St3Right(3)),
            "st3right4" => Ok(Name::St3Right(4)),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

impl std::fmt::Display for Name {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Name::Phi22 => write!(f, "Phi22"),
            Name::Phi211 => write!(f, "Phi211"),
            Name::PhiLin => write!(f, "PhiLin"),
            Name::Psi => write!(f, "Psi"),
            Name::Psi211 => write!(f, "Psi211"),
            Name::PsiLin => write!(f, "PsiLin"),
            Name::Gamma => write!(f, "Gamma"),
            Name::Lambda => write!(f, "Lambda"),
            Name::Delta => write!(f, "Delta"),
            Name::H => write!(f, "H"),
            Name::G => write!(f, "G"),
            Name::CommSq => write!(f, "CommSq"),
            Name::St3Left(i) => write!(f, "St3Left{i}"),
            Name::St3Right(i) => write!(f, "St3Right{i}"),
        }
    }
}

const PHI22: &str =
    "x1^2*x2^2 - 3*x1*x2*x1*x2 + 2*x1*x2^2*x1 + 2*x2*x1^2*x2 - 3*x2*x1*x2*x1 + x2^2*x1^2";

const GAMMA: &str = "-x1*x2*x3*x4 + 2*x1*x2*x4*x3 + x1*x3*x4*x2 - 2*x1*x4*x2*x3 \
                     + 2*x2*x1*x3*x4 - 2*x2*x1*x4*x3 - 2*x2*x3*x1*x4 + x2*x3*x4*x1 + x2*x4*x1*x3 \
                     + x3*x1*x2*x4 - 2*x3*x1*x4*x2 + x3*x4*x1*x2 + x4*x1*x2*x3 - x4*x2*x3*x1";

const LAMBDA: &str = "-3*x1*x2*x3*x4 + 3*x1*x2*x4*x3 + 2*x1*x3*x2*x4 - 2*x1*x4*x2*x3 \
                      + 3*x2*x1*x3*x4 - 3*x2*x1*x4*x3 - 2*x2*x3*x1*x4 + 2*x2*x4*x1*x3 \
                      - x3*x1*x4*x2 + x3*x2*x4*x1 + x4*x1*x3*x2 - x4*x2*x3*x1";

const DELTA: &str =
    "x2*x1*x3*x4 + x2*x4*x1*x3 + x3*x1*x2*x4 + x3*x4*x1*x2 + x4*x1*x2*x3 + x4*x1*x3*x2";

const H: &str = "x1^2*x3*x2 + 2*x3*x1^2*x2 + x3*x2*x1^2 - x1*x2*x3*x1 \
                 + 3*x1*x3*x2*x1 - 3*x1*x3*x1*x2 - 3*x3*x1*x2*x1";

const G: &str = "[[x1,x3],[x2,x4]] + x2*St3(x1,x3,x4) + St3(x1,x2,x4)*x3";

/// `Psi(a, b, c, d) = b*[a,d]*c + c*[a,d]*b` for variable indices.
pub fn psi_of(a: u32, b: u32, c: u32, d: u32, ch: Char) -> FreePoly {
    let v = |i| FreePoly::var(i, ch);
    let br = v(a).bracket(&v(d));
    v(b).mul(&br).mul(&v(c)).add(&v(c).mul(&br).mul(&v(b)))
}

fn complement(i: u32) -> Vec<u32> {
    (1..=4).filter(|&v| v != i).collect()
}

/// Build a named element over the field of characteristic `ch`.
pub fn named(name: Name, ch: Char) -> FreePoly {
    match name {
        Name::Phi22 => parse(PHI22, ch).unwrap(),
        Name::Phi211 => {
            let gamma = Composition::new(vec![1, 1]).unwrap();
            crate::linearize::lin(&named(Name::Phi22, ch), 2, &gamma).unwrap()
        }
        Name::PhiLin => lin_complete(&named(Name::Phi22, ch)).unwrap(),
        Name::Psi => psi_of(1, 2, 3, 4, ch),
        Name::Psi211 => parse("x1*[x1,x2]*x3 + x3*[x1,x2]*x1", ch).unwrap(),
        Name::PsiLin => psi_of(1, 2, 4, 3, ch).add(&psi_of(2, 1, 4, 3, ch)),
        Name::Gamma => parse(GAMMA, ch).unwrap(),
        Name::Lambda => parse(LAMBDA, ch).unwrap(),
        Name::Delta => parse(DELTA, ch).unwrap(),
        Name::H => parse(H, ch).unwrap(),
        Name::G => parse(G, ch).unwrap(),
        Name::CommSq => parse("[[x1,x2],[x3,x4]]", ch).unwrap(),
        Name::St3Left(i) => {
            let st = standard_polynomial(3, &complement(i), ch).unwrap();
            FreePoly::var(i, ch).mul(&st)
        }
        Name::St3Right(i) => {
            let st = standard_polynomial(3, &complement(i), ch).unwrap();
            st.mul(&FreePoly::var(i, ch))
        }
    }
}

/// The seven excluded multilinear degree-4 monomials.
pub fn nonreduced_monomials() -> Vec<Word> {
    [
        [1, 4, 3, 2],
        [2, 4, 3, 1],
        [3, 2, 1, 4],
        [3, 4, 2, 1],
        [4, 2, 1, 3],
        [4, 3, 1, 2],
        [4, 3, 2, 1],
    ]
    .iter()
    .map(|w| Word::new(w.to_vec()))
    .collect()
}

/// The 17 reduced multilinear degree-4 monomials in lexicographic order
/// (the order the unknowns `alpha_1 ... alpha_17` are listed in).
pub fn reduced_monomials() -> Vec<Word> {
    let excluded = nonreduced_monomials();
    let mut out = Vec::with_capacity(17);
    for w in crate::idsolve::words_of_multidegree(&MultiDegree::new(vec![1, 1, 1, 1])) {
        if !excluded.contains(&w) {
            out.push(w);
        }
    }
    debug_assert_eq!(out.len(), 17);
    out
}

/// The product that eliminates one non-reduced monomial: the monomial is the
/// largest word of the product and carries coefficient -1 there.
fn eliminator(w: &Word, ch: Char) -> FreePoly {
    let v = |i| FreePoly::var(i, ch);
    let st = |a, b, c| standard_polynomial(3, &[a, b, c], ch).unwrap();
    match w.letters() {
        [1, 4, 3, 2] => v(1).mul(&st(2, 3, 4)),
        [2, 4, 3, 1] => v(2).mul(&st(1, 3, 4)),
        [3, 4, 2, 1] => v(3).mul(&st(1, 2, 4)),
        [4, 3, 2, 1] => v(4).mul(&st(1, 2, 3)),
        [4, 3, 1, 2] => st(1, 3, 4).mul(&v(2)),
        [4, 2, 1, 3] => st(1, 2, 4).mul(&v(3)),
        [3, 2, 1, 4] => st(1, 2, 3).mul(&v(4)),
        _ => unreachable!("not a non-reduced monomial"),
    }
}

/// Split a multilinear degree-4 polynomial as `f = f1 + f2` with `f1`
/// reduced and `f2` a combination of the products `x_i * St3` and
/// `St3 * x_l`. Non-reduced monomials are eliminated largest first; each
/// elimination introduces only lexicographically smaller words.
pub fn reduce_to_reduced(f: &FreePoly) -> Result<(FreePoly, FreePoly)> {
    if f.is_zero() {
        return Ok((f.clone(), FreePoly::zero(f.char())));
    }
    let want = MultiDegree::new(vec![1, 1, 1, 1]);
    let got = f.mdeg()?;
    if got != want {
        return Err(Error::WrongMultidegree(format!("{got}, expected {want}")));
    }
    let excluded = nonreduced_monomials();
    let mut f1 = f.clone();
    let mut f2 = FreePoly::zero(f.char());
    loop {
        let worst = f1
            .terms()
            .filter(|(w, _)| excluded.contains(w))
            .map(|(w, c)| (w.clone(), c.clone()))
            .max_by(|a, b| a.0.cmp(&b.0));
        let Some((w, c)) = worst else {
            return Ok((f1, f2));
        };
        let elim = eliminator(&w, f.char()).scale(&c);
        f1 = f1.add(&elim);
        f2 = f2.sub(&elim);
    }
}
