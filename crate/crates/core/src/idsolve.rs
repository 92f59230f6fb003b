//! Solver for the full space of multihomogeneous polynomial identities of a
//! given multidegree, plus exact linear algebra and the
//! numeric-tuple verification matrices.
//!
//! Constraint assembly is symbolic: the generic combination of all words of
//! the multidegree is linearized in every way, evaluated with symbolic
//! exponents, and each exponent-monomial of each coefficient polynomial
//! (after characteristic reduction) contributes one linear equation on the
//! unknown coefficients. The identity space is the exact nullspace.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::json;

use crate::error::{Error, Result};
use crate::freealg::{FreePoly, MultiDegree, Word};
use crate::linearize::{apply_pattern, linearization_patterns};
use crate::scalar::{Char, Scalar};
use crate::witt::eval_symbolic;

/// All words of the given multidegree, in lexicographic order.
pub fn words_of_multidegree(d: &MultiDegree) -> Vec<Word> {
    let mut counts: Vec<u32> = d.entries().to_vec();
    let total: u32 = counts.iter().sum();
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::with_capacity(total as usize);
    fn rec(counts: &mut [u32], current: &mut Vec<u32>, total: u32, out: &mut Vec<Word>) {
        if current.len() as u32 == total {
            out.push(Word::new(current.clone()));
            return;
        }
        for v in 0..counts.len() {
            if counts[v] > 0 {
                counts[v] -= 1;
                current.push(v as u32 + 1);
                rec(counts, current, total, out);
                current.pop();
                counts[v] += 1;
            }
        }
    }
    rec(&mut counts, &mut current, total, &mut out);
    out
}

// ---------------------------------------------------------------------------
// Exact linear algebra
// ---------------------------------------------------------------------------

/// Reduced row echelon form over the coefficient field; returns the pivot
/// columns. Zero rows are removed. Pivoting takes the first nonzero entry in
/// column order, so the result is deterministic.
pub fn rref(rows: &mut Vec<Vec<Scalar>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        for e in rows[r].iter_mut() {
            *e = e.mul(&inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let factor = row[c].clone();
                for (dst, src) in row.iter_mut().zip(&pivot_row) {
                    *dst = dst.sub(&src.mul(&factor));
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Fraction-free Bareiss echelon form of an integer matrix; returns the
/// pivot columns and the sign of the row permutation.
fn bareiss_echelon(m: &mut [Vec<BigInt>]) -> (Vec<usize>, i32) {
    let nrows = m.len();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut sign = 1;
    let mut r = 0;
    for c in 0..ncols {
        let Some(pr) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        if pr != r {
            m.swap(r, pr);
            sign = -sign;
        }
        for i in r + 1..nrows {
            for cc in 0..ncols {
                if cc == c {
                    continue;
                }
                let num = &m[r][c] * &m[i][cc] - &m[i][c] * &m[r][cc];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                m[i][cc] = q;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        pivots.push(c);
        r += 1;
        if r == nrows {
            break;
        }
    }
    (pivots, sign)
}

/// Exact determinant of a square integer matrix (fraction-free elimination).
pub fn det_bigint(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    assert!(
        m.iter().all(|r| r.len() == n),
        "determinant of a non-square matrix"
    );
    if n == 0 {
        return BigInt::one();
    }
    let (pivots, sign) = bareiss_echelon(&mut m);
    if pivots.len() < n {
        return BigInt::zero();
    }
    let last = m[n - 1][pivots[n - 1]].clone();
    if sign < 0 {
        -last
    } else {
        last
    }
}

/// Exact basis of `{v : Mv = 0}`. Characteristic zero uses fraction-free
/// Bareiss elimination with a final rational normalization; prime fields use
/// standard Gaussian elimination. Pivot choice is deterministic (first
/// nonzero in column order).
pub fn nullspace(rows: &[Vec<Scalar>], ncols: usize, ch: Char) -> Vec<Vec<Scalar>> {
    match ch {
        Char::Zero => {
            // Clear denominators per row.
            let int_rows: Vec<Vec<BigInt>> = rows
                .iter()
                .map(|row| {
                    let mut lcm = BigInt::one();
                    for e in row {
                        lcm = lcm.lcm(e.as_rational().denom());
                    }
                    row.iter()
                        .map(|e| {
                            let q = e.as_rational();
                            q.numer() * (&lcm / q.denom())
                        })
                        .collect()
                })
                .collect();
            bareiss_nullspace(int_rows, ncols)
        }
        Char::Prime(_) => {
            let mut m: Vec<Vec<Scalar>> = rows.to_vec();
            let pivots = rref(&mut m);
            let mut basis = Vec::new();
            let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
            for &fc in &free {
                let mut v = vec![Scalar::zero(ch); ncols];
                v[fc] = Scalar::one(ch);
                for (t, &pc) in pivots.iter().enumerate() {
                    v[pc] = m[t][fc].neg();
                }
                basis.push(v);
            }
            basis
        }
    }
}

fn bareiss_nullspace(mut m: Vec<Vec<BigInt>>, ncols: usize) -> Vec<Vec<Scalar>> {
    let (pivots, _) = bareiss_echelon(&mut m);
    let rank = pivots.len();
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::new();
    for &fc in &free {
        let mut v: Vec<BigRational> = vec![BigRational::zero(); ncols];
        v[fc] = BigRational::one();
        for t in (0..rank).rev() {
            let pc = pivots[t];
            let mut acc = BigRational::zero();
            for c in pc + 1..ncols {
                if !m[t][c].is_zero() && !v[c].is_zero() {
                    acc += BigRational::from_integer(m[t][c].clone()) * &v[c];
                }
            }
            v[pc] = -acc / BigRational::from_integer(m[t][pc].clone());
        }
        basis.push(
            v.into_iter()
                .map(|q| Scalar::from_ratio(q.numer(), q.denom()).expect("denominator nonzero"))
                .collect(),
        );
    }
    basis
}

// ---------------------------------------------------------------------------
// The identity-space solver
// ---------------------------------------------------------------------------

/// The complete space of identities of one multidegree and characteristic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveReport {
    pub mdeg: MultiDegree,
    pub ch: Char,
    /// The words of the multidegree, in lexicographic order; coefficient
    /// vectors below are indexed against this list.
    pub monomials: Vec<Word>,
    pub dimension: usize,
    /// Echelonized basis of the identity space (reduced row echelon form,
    /// rows sorted by pivot column).
    pub basis: Vec<Vec<Scalar>>,
}

/// Compute the identity space of multidegree `d` in characteristic `ch`.
pub fn solve(d: &MultiDegree, ch: Char) -> SolveReport {
    let words = words_of_multidegree(d);
    let n = words.len();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for pattern in linearization_patterns(d, true) {
        rows.extend(pattern_rows(&words, &pattern, ch));
    }
    let mut basis = nullspace(&rows, n, ch);
    rref(&mut basis);
    SolveReport {
        mdeg: d.clone(),
        ch,
        monomials: words,
        dimension: basis.len(),
        basis,
    }
}

/// The linear constraints contributed by one linearization pattern: one row
/// per basis slot and exponent monomial of the symbolically evaluated
/// generic combination.
pub(crate) fn pattern_rows(words: &[Word], pattern: &[Vec<u32>], ch: Char) -> Vec<Vec<Scalar>> {
    let syms: Vec<_> = words
        .iter()
        .map(|w| {
            let poly = FreePoly::monomial(w.clone(), Scalar::one(ch));
            let linearized =
                apply_pattern(&poly, pattern).expect("pattern matches the multidegree");
            eval_symbolic(&linearized).expect("linearized words are multihomogeneous")
        })
        .collect();

    let mut rows = Vec::new();
    let slots: BTreeSet<_> = syms
        .iter()
        .flat_map(|s| s.terms().map(|(key, _)| key.clone()))
        .collect();
    for slot in &slots {
        let coeffs: Vec<_> = syms
            .iter()
            .map(|s| {
                let poly = s
                    .terms()
                    .find(|(key, _)| *key == slot)
                    .map(|(_, p)| p.clone())
                    .unwrap_or_default();
                match ch {
                    Char::Zero => poly,
                    Char::Prime(p) => poly.frobenius_reduce(p),
                }
            })
            .collect();
        let monomials: BTreeSet<_> = coeffs
            .iter()
            .flat_map(|p| p.terms().map(|(m, _)| m.clone()))
            .collect();
        for mono in &monomials {
            let row: Vec<Scalar> = coeffs
                .iter()
                .map(|p| {
                    p.terms()
                        .find(|(m, _)| *m == mono)
                        .map(|(_, c)| Scalar::from_bigint(c, ch))
                        .unwrap_or_else(|| Scalar::zero(ch))
                })
                .collect();
            if row.iter().any(|e| !e.is_zero()) {
                rows.push(row);
            }
        }
    }
    rows
}

/// Solve one multidegree over characteristic 0 and p = 2, 3, 5 in one call;
/// the report pairs each characteristic with its space, for spotting where
/// the dimensions differ.
pub fn solve_sweep(d: &MultiDegree) -> Vec<SolveReport> {
    [Char::Zero, Char::Prime(2), Char::Prime(3), Char::Prime(5)]
        .iter()
        .map(|&ch| solve(d, ch))
        .collect()
}

/// The characteristics whose dimension differs from the characteristic-zero
/// dimension in a sweep.
pub fn sweep_dimension_splits(reports: &[SolveReport]) -> Vec<(Char, usize)> {
    let Some(base) = reports.first() else {
        return Vec::new();
    };
    reports
        .iter()
        .skip(1)
        .filter(|r| r.dimension != base.dimension)
        .map(|r| (r.ch, r.dimension))
        .collect()
}

impl SolveReport {
    /// Rebuild the basis vectors as polynomials.
    pub fn basis_polynomials(&self) -> Vec<FreePoly> {
        self.basis
            .iter()
            .map(|v| {
                let mut f = FreePoly::zero(self.ch);
                for (w, c) in self.monomials.iter().zip(v) {
                    f.add_term(w.clone(), c);
                }
                f
            })
            .collect()
    }

    /// The coefficient vector of `f` against `monomials`.
    pub fn coefficient_vector(&self, f: &FreePoly) -> Result<Vec<Scalar>> {
        if f.is_zero() {
            return Ok(vec![Scalar::zero(self.ch); self.monomials.len()]);
        }
        let got = f.mdeg()?;
        if got != self.mdeg {
            return Err(Error::WrongMultidegree(format!(
                "{got}, expected {}",
                self.mdeg
            )));
        }
        Ok(self.monomials.iter().map(|w| f.coefficient(w)).collect())
    }

    /// Is `f` in the span of the solved identity space?
    pub fn contains(&self, f: &FreePoly) -> Result<bool> {
        let mut v = self.coefficient_vector(f)?;
        // The basis is in reduced row echelon form: eliminate each pivot.
        for row in &self.basis {
            let pc = row.iter().position(|e| !e.is_zero()).expect("no zero rows");
            if !v[pc].is_zero() {
                let factor = v[pc].clone();
                for (ve, re) in v.iter_mut().zip(row) {
                    *ve = ve.sub(&re.mul(&factor));
                }
            }
        }
        Ok(v.iter().all(|e| e.is_zero()))
    }

    /// Rank of a set of vectors inside this report's coordinate system.
    pub fn rank_of(&self, polys: &[FreePoly]) -> Result<usize> {
        let mut rows = Vec::new();
        for f in polys {
            rows.push(self.coefficient_vector(f)?);
        }
        Ok(rref(&mut rows).len())
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "mdeg": self.mdeg.entries(),
            "char": self.ch.value(),
            "monomial_order": self.monomials.iter().map(|w| w.letters().to_vec()).collect::<Vec<_>>(),
            "dimension": self.dimension,
            "basis": self.basis.iter().map(|v| {
                v.iter().map(|c| c.coeff_string()).collect::<Vec<_>>()
            }).collect::<Vec<_>>(),
        })
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "multidegree {} over characteristic {}",
            self.mdeg, self.ch
        );
        let _ = writeln!(out, "dimension {}", self.dimension);
        for (i, f) in self.basis_polynomials().iter().enumerate() {
            let _ = writeln!(out, "basis[{i}] = {f}");
        }
        out
    }
}

// ---------------------------------------------------------------------------
// Printed matrices
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixLabel {
    P44,
    P45,
    P45S,
}

impl std::str::FromStr for MatrixLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<MatrixLabel> {
        match s.to_ascii_uppercase().as_str() {
            "P44" => Ok(MatrixLabel::P44),
            "P45" => Ok(MatrixLabel::P45),
            "P45S" => Ok(MatrixLabel::P45S),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

/// An integer matrix assembled from numeric-tuple evaluations: rows indexed
/// by (basis tuple, normal-form monomial) pairs, columns by reduced words.
/// Golden copies live under `golden/`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckMatrix {
    pub label: MatrixLabel,
    pub entries: Vec<Vec<i64>>,
}

// Row plans: a basis tuple and the (x exponent, y exponent) of the
// coefficient to read off.

fn p44_rows() -> Vec<([u32; 4], (u32, u32))> {
    vec![
        ([1, 0, 0, 0], (1, 4)),
        ([1, 0, 0, 0], (0, 3)),
        ([0, 1, 0, 0], (0, 3)),
        ([0, 0, 1, 0], (0, 3)),
        ([2, 0, 0, 0], (0, 2)),
        ([0, 2, 0, 0], (0, 2)),
        ([0, 0, 2, 0], (0, 2)),
        ([1, 1, 0, 0], (0, 2)),
        ([1, 0, 1, 0], (0, 2)),
        ([1, 1, 1, 0], (0, 1)),
        ([1, 1, 0, 1], (0, 1)),
        ([1, 0, 1, 1], (0, 1)),
        ([2, 1, 0, 0], (0, 1)),
        ([2, 0, 1, 0], (0, 1)),
        ([0, 2, 1, 0], (0, 1)),
    ]
}

fn p45_rows() -> Vec<([u32; 4], (u32, u32))> {
    vec![
        ([1, 0, 0, 0], (1, 4)),
        ([1, 0, 0, 0], (0, 3)),
        ([0, 1, 0, 0], (0, 3)),
        ([0, 0, 1, 0], (0, 3)),
        ([1, 1, 0, 0], (0, 2)),
        ([1, 0, 1, 0], (0, 2)),
        ([1, 1, 1, 0], (0, 1)),
        ([1, 1, 1, 0], (1, 2)),
        ([1, 1, 0, 1], (0, 1)),
        ([1, 1, 0, 1], (1, 2)),
        ([1, 0, 1, 1], (0, 1)),
        ([1, 0, 1, 1], (1, 2)),
    ]
}

/// Assemble one of the verification matrices from evaluations.
pub fn assemble_check_matrix(label: MatrixLabel) -> CheckMatrix {
    let reduced = crate::catalog::reduced_monomials();
    let entries = match label {
        MatrixLabel::P44 => {
            // Columns: the first 15 reduced words (alpha_16 = alpha_17 = 0).
            let ch = Char::Zero;
            let cols = &reduced[..15];
            matrix_from_rows(&p44_rows(), cols, ch)
        }
        MatrixLabel::P45 => {
            // Columns: reduced words with alpha_2, alpha_13, alpha_14,
            // alpha_16, alpha_17 removed.
            let ch = Char::Prime(2);
            let keep = [0usize, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 14];
            let cols: Vec<Word> = keep.iter().map(|&i| reduced[i].clone()).collect();
            matrix_from_rows(&p45_rows(), &cols, ch)
        }
        MatrixLabel::P45S => {
            // Coefficients of the five monomials eliminated by Gamma, Psi,
            // Delta, Lambda, g, in that row order, over F_2.
            let ch = Char::Prime(2);
            let s_words = [
                [1u32, 2, 4, 3],
                [3, 2, 4, 1],
                [3, 4, 1, 2],
                [4, 1, 3, 2],
                [4, 2, 3, 1],
            ];
            use crate::catalog::{named, Name};
            let elements = [
                named(Name::Gamma, ch),
                named(Name::Psi, ch),
                named(Name::Delta, ch),
                named(Name::Lambda, ch),
                named(Name::G, ch),
            ];
            elements
                .iter()
                .map(|f| {
                    s_words
                        .iter()
                        .map(|w| scalar_to_i64(&f.coefficient(&Word::new(w.to_vec()))))
                        .collect()
                })
                .collect()
        }
    };
    CheckMatrix { label, entries }
}

fn matrix_from_rows(rows: &[([u32; 4], (u32, u32))], cols: &[Word], ch: Char) -> Vec<Vec<i64>> {
    use crate::witt::{eval_concrete, BasisIndex};
    rows.iter()
        .map(|(tuple, (r, s))| {
            let point: Vec<BasisIndex> = tuple.iter().map(|&i| BasisIndex(i)).collect();
            cols.iter()
                .map(|w| {
                    let f = FreePoly::monomial(w.clone(), Scalar::one(ch));
                    let value = eval_concrete(&f, &point).expect("tuple covers the word");
                    scalar_to_i64(&value.coefficient(*r, *s))
                })
                .collect()
        })
        .collect()
}

fn scalar_to_i64(c: &Scalar) -> i64 {
    use num_traits::ToPrimitive;
    c.to_bigint()
        .to_i64()
        .expect("matrix entry fits i64")
}

impl CheckMatrix {
    pub fn det(&self) -> BigInt {
        det_bigint(
            self.entries
                .iter()
                .map(|r| r.iter().map(|&e| BigInt::from(e)).collect())
                .collect(),
        )
    }

    /// Determinant as an element of `F_p`.
    pub fn det_mod(&self, p: u64) -> u64 {
        let d = self.det();
        let p_big = BigInt::from(p);
        let mut r = d % &p_big;
        if r.is_negative() {
            r += &p_big;
        }
        use num_traits::ToPrimitive;
        r.to_u64().unwrap()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "label": format!("{:?}", self.label),
            "entries": self.entries,
        })
    }
}
