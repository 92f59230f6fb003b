//! The subspace of the Weyl algebra spanned by `c_i = x^i*y`, and the exact
//! polynomial-identity test for it.
//!
//! A free polynomial `f` is an identity for the subspace (over an infinite
//! field of the given characteristic) exactly when every partial
//! linearization of every multihomogeneous component of `f` vanishes on all
//! basis tuples. Evaluating a linearization with a fresh exponent symbol per
//! variable turns that condition into "every coefficient polynomial is zero
//! as a function on the nonnegative integers", which [`ExpPoly`] decides
//! exactly per characteristic: no sampling, no exponent bounds.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use serde_json::json;

use crate::error::{Error, Result};
use crate::exppoly::Sym;
use crate::freealg::FreePoly;
use crate::linearize::all_linearizations;
use crate::scalar::{Char, Scalar};
use crate::weyl::{SymbolicWeylElement, WeylElement};

/// Index of a subspace basis element `c_i = x^i*y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisIndex(pub u32);

/// The basis element `c_i` as a concrete Weyl-algebra element.
pub fn basis_element(i: BasisIndex, ch: Char) -> WeylElement {
    WeylElement::basis_c(i.0, ch)
}

/// Evaluate `f` at arbitrary Weyl-algebra elements, one per variable.
pub fn eval_weyl(f: &FreePoly, args: &[WeylElement]) -> Result<WeylElement> {
    let need = f.max_var() as usize;
    if args.len() < need {
        return Err(Error::ArityMismatch {
            need,
            got: args.len(),
        });
    }
    let ch = f.char();
    let mut out = WeylElement::zero(ch);
    for (w, c) in f.terms() {
        let mut prod = WeylElement::one(ch);
        for &v in w.letters() {
            prod = prod.mul(&args[v as usize - 1]);
        }
        out = out.add(&prod.scale(c));
    }
    Ok(out)
}

/// Evaluate `f` at basis elements: variable `x_t` becomes `c_{point[t-1]}`.
pub fn eval_concrete(f: &FreePoly, point: &[BasisIndex]) -> Result<WeylElement> {
    let args: Vec<WeylElement> = point.iter().map(|&i| basis_element(i, f.char())).collect();
    eval_weyl(f, &args)
}

/// Evaluate a multihomogeneous `f` at basis elements with a fresh exponent
/// symbol per variable (`x_v` becomes `c_s` with `s` the symbol `v - 1`).
///
/// Coefficients of `f` are lifted to integers first: residues lift directly,
/// and in characteristic zero the whole polynomial is scaled by the (positive)
/// least common multiple of the denominators. The scaling is invisible to
/// zero-testing; [`substitute`](SymbolicWeylElement::substitute) reproduces
/// [`eval_concrete`] exactly whenever the coefficients were already integers.
pub fn eval_symbolic(f: &FreePoly) -> Result<SymbolicWeylElement> {
    if !f.is_multihomogeneous() {
        return Err(Error::NotMultihomogeneous);
    }
    let mut out = SymbolicWeylElement::zero();
    for (w, c) in f.terms() {
        let syms: Vec<Sym> = w.letters().iter().map(|&v| v - 1).collect();
        let prod = SymbolicWeylElement::basis_product(&syms);
        out = out.add_scaled(&prod, &integer_lift(c, f));
    }
    Ok(out)
}

fn integer_lift(c: &Scalar, f: &FreePoly) -> BigInt {
    match f.char() {
        Char::Prime(_) => BigInt::from(c.as_residue()),
        Char::Zero => {
            let scale = denominator_lcm(f);
            let q = c.as_rational();
            q.numer() * (scale / q.denom())
        }
    }
}

fn denominator_lcm(f: &FreePoly) -> BigInt {
    let mut acc = BigInt::one();
    if f.char().is_zero() {
        for (_, c) in f.terms() {
            acc = acc.lcm(c.as_rational().denom());
        }
    }
    acc
}

/// Outcome of the identity test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalReport {
    pub polynomial: FreePoly,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Identity,
    NotIdentity(Witness),
}

/// A re-checkable refutation: a partial linearization of the input, a basis
/// tuple, and the normal-form monomial whose coefficient is nonzero there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub linearization: FreePoly,
    pub point: Vec<BasisIndex>,
    pub x_exp: u32,
    pub y_exp: u32,
    pub coefficient: Scalar,
}

impl EvalReport {
    pub fn is_identity(&self) -> bool {
        matches!(self.verdict, Verdict::Identity)
    }

    pub fn render_text(&self) -> String {
        match &self.verdict {
            Verdict::Identity => "Identity".to_string(),
            Verdict::NotIdentity(w) => {
                let pt: Vec<String> = w.point.iter().map(|b| format!("c{}", b.0)).collect();
                format!(
                    "NotIdentity\nwitness: {} at ({}) has {} with coefficient {}",
                    w.linearization,
                    pt.join(","),
                    monomial_string(w.x_exp, w.y_exp),
                    w.coefficient.coeff_string(),
                )
            }
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match &self.verdict {
            Verdict::Identity => json!({ "verdict": "Identity" }),
            Verdict::NotIdentity(w) => json!({
                "verdict": "NotIdentity",
                "witness": {
                    "linearization": w.linearization.to_string(),
                    "point": w.point.iter().map(|b| b.0).collect::<Vec<_>>(),
                    "monomial": monomial_string(w.x_exp, w.y_exp),
                    "coefficient": w.coefficient.coeff_string(),
                },
            }),
        }
    }
}

fn monomial_string(i: u32, j: u32) -> String {
    let mut parts = Vec::new();
    match i {
        0 => {}
        1 => parts.push("x".to_string()),
        _ => parts.push(format!("x^{i}")),
    }
    match j {
        0 => {}
        1 => parts.push("y".to_string()),
        _ => parts.push(format!("y^{j}")),
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

/// Exact identity test for the subspace, in the characteristic `f` carries.
///
/// Every multihomogeneous component is linearized in all ways (one
/// representative per composition tuple), evaluated symbolically, and each
/// coefficient polynomial must vanish as a function on the nonnegative
/// integers. On failure the offending coefficient yields a concrete basis
/// tuple, which is re-evaluated concretely before being reported.
pub fn is_identity(f: &FreePoly) -> EvalReport {
    let ch = f.char();
    for (_, comp) in f.components() {
        let linearizations =
            all_linearizations(&comp, true).expect("components are multihomogeneous");
        for h in linearizations {
            let sym = eval_symbolic(&h).expect("linearizations are multihomogeneous");
            for ((x_exp, y_exp), coeff) in sym.terms() {
                if coeff.is_zero_function(ch) {
                    continue;
                }
                let mut point_values = coeff
                    .find_nonzero_point(ch)
                    .expect("nonzero function has a nonzero point");
                point_values.resize(h.max_var() as usize, 0);
                let x_val = x_exp.eval(&point_values);
                assert!(
                    x_val >= 0,
                    "truncation soundness: negative exponent with nonzero coefficient"
                );
                let c_val = Scalar::from_bigint(&coeff.eval(&point_values).unwrap(), ch);
                let point: Vec<BasisIndex> =
                    point_values.iter().map(|&v| BasisIndex(v as u32)).collect();
                // The witness must re-check concretely.
                let concrete = eval_concrete(&h, &point).expect("point covers h");
                let observed = concrete.coefficient(x_val as u32, *y_exp);
                let scale = Scalar::from_bigint(&denominator_lcm(&h), ch);
                assert_eq!(
                    observed.mul(&scale),
                    c_val,
                    "symbolic and concrete evaluation disagree on the witness"
                );
                assert!(!observed.is_zero(), "witness coefficient vanished");
                return EvalReport {
                    polynomial: f.clone(),
                    verdict: Verdict::NotIdentity(Witness {
                        linearization: h.clone(),
                        point,
                        x_exp: x_val as u32,
                        y_exp: *y_exp,
                        coefficient: observed,
                    }),
                };
            }
        }
    }
    EvalReport {
        polynomial: f.clone(),
        verdict: Verdict::Identity,
    }
}
