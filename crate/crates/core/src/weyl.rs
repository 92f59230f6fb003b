//! The Weyl algebra `A_1` in normal-ordered form.
//!
//! Elements are stored on the basis `x^i*y^j`. Two independent product
//! implementations are kept permanently as mutual oracles: exhaustive string
//! rewriting of `yx -> xy + 1` ([`normal_form`]) and the closed-form
//! reordering rule
//!
//! ```text
//! y^t * x^k = sum_{s=0..min(t,k)} C(t,s) * k*(k-1)*...*(k-s+1) * x^(k-s) * y^(t-s)
//! ```
//!
//! used by [`WeylElement::mul`]. The symbolic variant keeps the `x`
//! exponents as affine forms in exponent symbols so that identity testing
//! can be exact rather than sampled.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exppoly::{falling_factorial, ExpPoly, Sym};
use crate::scalar::{Char, Scalar};

/// A normal-ordered element: finite map `(i, j) -> coefficient` for the
/// basis monomials `x^i*y^j`. Representation is unique, so equality is
/// structural.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    ch: Char,
    terms: BTreeMap<(u32, u32), Scalar>,
}

impl WeylElement {
    pub fn zero(ch: Char) -> WeylElement {
        WeylElement {
            ch,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ch: Char) -> WeylElement {
        WeylElement::monomial(0, 0, Scalar::one(ch))
    }

    pub fn monomial(i: u32, j: u32, coeff: Scalar) -> WeylElement {
        let ch = coeff.char();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((i, j), coeff);
        }
        WeylElement { ch, terms }
    }

    /// The subspace basis element `c_i = x^i*y`.
    pub fn basis_c(i: u32, ch: Char) -> WeylElement {
        WeylElement::monomial(i, 1, Scalar::one(ch))
    }

    pub fn char(&self) -> Char {
        self.ch
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, i: u32, j: u32) -> Scalar {
        self.terms
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.ch))
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: &Scalar) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry((i, j)) {
            Entry::Occupied(mut e) => {
                let sum = e.get().add(c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
        }
    }

    pub fn add(&self, other: &WeylElement) -> WeylElement {
        let mut out = self.clone();
        for (&(i, j), c) in &other.terms {
            out.add_term(i, j, c);
        }
        out
    }

    pub fn sub(&self, other: &WeylElement) -> WeylElement {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> WeylElement {
        WeylElement {
            ch: self.ch,
            terms: self.terms.iter().map(|(k, c)| (*k, c.neg())).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> WeylElement {
        let mut out = WeylElement::zero(self.ch);
        for (&(i, j), c) in &self.terms {
            out.add_term(i, j, &c.mul(s));
        }
        out
    }

    /// Product in normal form via the closed-form reordering rule.
    pub fn mul(&self, other: &WeylElement) -> WeylElement {
        let mut out = WeylElement::zero(self.ch);
        for (&(a, b), c1) in &self.terms {
            for (&(k, d), c2) in &other.terms {
                // (x^a y^b)(x^k y^d): reorder y^b past x^k.
                let coeff = c1.mul(c2);
                for s in 0..=b.min(k) {
                    let factor = binomial(b, s) * falling_product(k, s);
                    let term = coeff.mul(&Scalar::from_bigint(&factor, self.ch));
                    out.add_term(a + k - s, b + d - s, &term);
                }
            }
        }
        out
    }

    /// `ab - ba`.
    pub fn commutator(&self, other: &WeylElement) -> WeylElement {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn pow(&self, e: u32) -> WeylElement {
        let mut acc = WeylElement::one(self.ch);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

/// Exact binomial coefficient.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for t in 0..k {
        acc = acc * BigInt::from(n - t) / BigInt::from(t + 1);
    }
    acc
}

/// `k*(k-1)*...*(k-s+1)` as an exact integer.
fn falling_product(k: u32, s: u32) -> BigInt {
    let mut acc = BigInt::one();
    for t in 0..s {
        acc *= BigInt::from(k - t);
    }
    acc
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Descending graded-lex on (i, j): leading monomial first.
        let mut keys: Vec<&(u32, u32)> = self.terms.keys().collect();
        keys.sort_by_key(|&&(i, j)| std::cmp::Reverse((i + j, i)));
        for (idx, &&(i, j)) in keys.iter().enumerate() {
            let c = &self.terms[&(i, j)];
            let neg = c.is_negative();
            let abs = if neg { c.neg() } else { c.clone() };
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut parts: Vec<String> = Vec::new();
            if !abs.is_one() || (i, j) == (0, 0) {
                parts.push(abs.coeff_string());
            }
            match i {
                0 => {}
                1 => parts.push("x".into()),
                _ => parts.push(format!("x^{i}")),
            }
            match j {
                0 => {}
                1 => parts.push("y".into()),
                _ => parts.push(format!("y^{j}")),
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

/// A letter of a word in the generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    X,
    Y,
}

/// Parse a word like `"yxxy"` (whitespace ignored).
pub fn parse_word(text: &str) -> Result<Vec<Gen>> {
    let mut out = Vec::new();
    for (pos, c) in text.char_indices() {
        match c {
            'x' | 'X' => out.push(Gen::X),
            'y' | 'Y' => out.push(Gen::Y),
            c if c.is_whitespace() => {}
            _ => {
                return Err(Error::Syntax {
                    pos,
                    msg: format!("expected `x` or `y`, found `{c}`"),
                })
            }
        }
    }
    Ok(out)
}

/// Normal-order an arbitrary word in `x`, `y` by exhaustively rewriting the
/// leftmost `yx` into `xy + 1`. Independent of the closed-form product; kept
/// as its oracle.
pub fn normal_form(word: &[Gen], ch: Char) -> WeylElement {
    let mut out = WeylElement::zero(ch);
    let mut stack: Vec<Vec<Gen>> = vec![word.to_vec()];
    while let Some(w) = stack.pop() {
        match w.windows(2).position(|p| p == [Gen::Y, Gen::X]) {
            None => {
                // Sorted: all x before y.
                let i = w.iter().filter(|&&g| g == Gen::X).count() as u32;
                let j = w.len() as u32 - i;
                out.add_term(i, j, &Scalar::one(ch));
            }
            Some(t) => {
                let mut swapped = w.clone();
                swapped.swap(t, t + 1);
                stack.push(swapped);
                let mut dropped = w;
                dropped.drain(t..t + 2);
                stack.push(dropped);
            }
        }
    }
    out
}

/// The four-term expansion of `c_i c_j c_k c_l` with `e = i+j+k+l`:
/// coefficient 1 on `x^e y^4`, `j+2k+3l` on `x^(e-1) y^3`,
/// `(k+2l)(j+k+l-1) + l(k+l-1)` on `x^(e-2) y^2`, and
/// `l(k+l-1)(j+k+l-2)` on `x^(e-3) y`. Terms whose `x` exponent would be
/// negative carry coefficient zero automatically.
pub fn quartic_closed_form(i: u32, j: u32, k: u32, l: u32, ch: Char) -> WeylElement {
    let (i, j, k, l) = (i as i64, j as i64, k as i64, l as i64);
    let e = i + j + k + l;
    let coeffs = [
        1,
        j + 2 * k + 3 * l,
        (k + 2 * l) * (j + k + l - 1) + l * (k + l - 1),
        l * (k + l - 1) * (j + k + l - 2),
    ];
    let mut out = WeylElement::zero(ch);
    for (drop, &c) in coeffs.iter().enumerate() {
        let x_exp = e - drop as i64;
        if x_exp < 0 {
            debug_assert_eq!(c, 0, "negative x-exponent must carry coefficient zero");
            continue;
        }
        out.add_term(x_exp as u32, 4 - drop as u32, &Scalar::from_int(c, ch));
    }
    out
}

/// An `x` exponent that is an affine form in exponent symbols: symbol
/// multiplicities plus an integer offset (negative offsets track dropped
/// powers of `x`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct AffineExp {
    mults: BTreeMap<Sym, u32>,
    offset: i64,
}

impl AffineExp {
    pub fn zero() -> AffineExp {
        AffineExp::default()
    }

    pub fn plus_symbol(&self, s: Sym) -> AffineExp {
        let mut out = self.clone();
        *out.mults.entry(s).or_insert(0) += 1;
        out
    }

    pub fn minus(&self, n: u32) -> AffineExp {
        let mut out = self.clone();
        out.offset -= n as i64;
        out
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn eval(&self, point: &[u64]) -> i64 {
        let mut acc = self.offset;
        for (&s, &m) in &self.mults {
            acc += m as i64 * point[s as usize] as i64;
        }
        acc
    }
}

impl fmt::Display for AffineExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        for (&s, &m) in &self.mults {
            if m == 1 {
                parts.push(crate::exppoly::sym_name(s));
            } else {
                parts.push(format!("{m}*{}", crate::exppoly::sym_name(s)));
            }
        }
        if parts.is_empty() {
            return write!(f, "{}", self.offset);
        }
        write!(f, "{}", parts.join("+"))?;
        match self.offset.cmp(&0) {
            std::cmp::Ordering::Less => write!(f, "{}", self.offset),
            std::cmp::Ordering::Greater => write!(f, "+{}", self.offset),
            std::cmp::Ordering::Equal => Ok(()),
        }
    }
}

/// A normal-ordered element whose `x` exponents are affine forms in exponent
/// symbols and whose coefficients are integer polynomials in those symbols.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SymbolicWeylElement {
    terms: BTreeMap<(AffineExp, u32), ExpPoly>,
}

impl SymbolicWeylElement {
    pub fn zero() -> SymbolicWeylElement {
        SymbolicWeylElement::default()
    }

    pub fn one() -> SymbolicWeylElement {
        let mut terms = BTreeMap::new();
        terms.insert((AffineExp::zero(), 0), ExpPoly::one());
        SymbolicWeylElement { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(AffineExp, u32), &ExpPoly)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, x_exp: AffineExp, y_exp: u32, coeff: &ExpPoly) {
        use std::collections::btree_map::Entry;
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry((x_exp, y_exp)) {
            Entry::Occupied(mut e) => {
                let sum = e.get().add(coeff);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
            Entry::Vacant(e) => {
                e.insert(coeff.clone());
            }
        }
    }

    pub fn add_scaled(&self, other: &SymbolicWeylElement, n: &BigInt) -> SymbolicWeylElement {
        let mut out = self.clone();
        for ((x, y), c) in &other.terms {
            out.add_term(x.clone(), *y, &c.scale(n));
        }
        out
    }

    /// Right-multiply by the basis element `x^sym * y`. Reordering follows
    /// `y^t x^J = sum_s C(t,s) * ff(J,s) * x^(J-s) y^(t-s)` with the falling
    /// factorial `ff(J,s)` kept symbolic in `J`.
    pub fn mul_basis(&self, sym: Sym) -> SymbolicWeylElement {
        let mut out = SymbolicWeylElement::zero();
        for ((x_exp, t), coeff) in &self.terms {
            for s in 0..=*t {
                let factor = falling_factorial(sym, s).scale(&binomial(*t, s));
                let c = coeff.mul(&factor);
                out.add_term(x_exp.plus_symbol(sym).minus(s), t - s + 1, &c);
            }
        }
        out
    }

    /// The symbolic product `c_{s_1} ... c_{s_n}` for the given symbols.
    pub fn basis_product(symbols: &[Sym]) -> SymbolicWeylElement {
        let mut acc = SymbolicWeylElement::one();
        for &s in symbols {
            acc = acc.mul_basis(s);
        }
        acc
    }

    /// Specialize every symbol to a nonnegative integer. A term whose `x`
    /// exponent evaluates negative must have an integer-zero coefficient
    /// there; anything else is a soundness bug and reported as an error.
    pub fn substitute(&self, point: &[u64], ch: Char) -> Result<WeylElement> {
        let mut out = WeylElement::zero(ch);
        for ((x_exp, y_exp), coeff) in &self.terms {
            let x_val = x_exp.eval(point);
            let c_val = coeff.eval(point)?;
            if x_val < 0 {
                if !c_val.is_zero() {
                    return Err(Error::NegativeExponent(format!(
                        "x^({x_exp}) evaluates to x^{x_val} with coefficient {c_val} at {point:?}"
                    )));
                }
                continue;
            }
            out.add_term(x_val as u32, *y_exp, &Scalar::from_bigint(&c_val, ch));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn nf(s: &str, ch: Char) -> WeylElement {
        normal_form(&parse_word(s).unwrap(), ch)
    }

    fn q() -> Char {
        Char::Zero
    }

    #[test]
    fn defining_relation() {
        // yx = xy + 1
        let got = nf("yx", q());
        let mut want = WeylElement::monomial(1, 1, Scalar::one(q()));
        want.add_term(0, 0, &Scalar::one(q()));
        assert_eq!(got, want);
        assert_eq!(got.to_string(), "x*y + 1");
    }

    #[test]
    fn normal_form_examples() {
        // yyxx = x^2 y^2 + 4xy + 2, cross-checked against the independent
        // closed-form product below.
        let got = nf("yyxx", q());
        assert_eq!(got.to_string(), "x^2*y^2 + 4*x*y + 2");
        let y2 = WeylElement::monomial(0, 2, Scalar::one(q()));
        let x2 = WeylElement::monomial(2, 0, Scalar::one(q()));
        assert_eq!(got, y2.mul(&x2));

        // [y, x^3] = 3x^2 (the derivative).
        let diff = nf("yxxx", q()).sub(&nf("xxxy", q()));
        assert_eq!(diff, WeylElement::monomial(2, 0, Scalar::from_int(3, q())));
    }

    #[test]
    fn product_examples() {
        // (xy)(x^2 y) = x^3 y^2 + 2 x^2 y
        let got = WeylElement::basis_c(1, q()).mul(&WeylElement::basis_c(2, q()));
        assert_eq!(got.to_string(), "x^3*y^2 + 2*x^2*y");

        let a = nf("yxyxx", q());
        assert_eq!(WeylElement::one(q()).mul(&a), a);
        assert_eq!(a.mul(&WeylElement::one(q())), a);

        let y = WeylElement::monomial(0, 1, Scalar::one(q()));
        let x = WeylElement::monomial(1, 0, Scalar::one(q()));
        assert_eq!(y.mul(&x), nf("yx", q()));
    }

    #[test]
    fn commutator_examples() {
        let y = WeylElement::monomial(0, 1, Scalar::one(q()));
        let x3 = WeylElement::monomial(3, 0, Scalar::one(q()));
        assert_eq!(
            y.commutator(&x3),
            WeylElement::monomial(2, 0, Scalar::from_int(3, q()))
        );

        // [c_1, c_2] = (2-1) x^2 y = c_2-1... the bracket of basis elements
        // stays in the subspace: [x^i y, x^j y] = (j - i) x^(i+j-1) y.
        let c1 = WeylElement::basis_c(1, q());
        let c2 = WeylElement::basis_c(2, q());
        assert_eq!(c1.commutator(&c2), WeylElement::basis_c(2, q()));
        assert!(c1.commutator(&c1).is_zero());
    }

    #[test]
    fn quartic_closed_form_examples() {
        assert_eq!(
            quartic_closed_form(0, 0, 0, 0, q()),
            WeylElement::monomial(0, 4, Scalar::one(q()))
        );

        let e1111 = quartic_closed_form(1, 1, 1, 1, q());
        assert_eq!(e1111.to_string(), "x^4*y^4 + 6*x^3*y^3 + 7*x^2*y^2 + x*y");

        let e0001 = quartic_closed_form(0, 0, 0, 1, q());
        assert_eq!(e0001.to_string(), "x*y^4 + 3*y^3");
    }

    #[test]
    fn quartic_matches_product_chain_on_a_small_grid() {
        for ch in [Char::Zero, Char::Prime(2), Char::Prime(3)] {
            for i in 0..=3u32 {
                for j in 0..=3u32 {
                    for k in 0..=3u32 {
                        for l in 0..=3u32 {
                            let chain = WeylElement::basis_c(i, ch)
                                .mul(&WeylElement::basis_c(j, ch))
                                .mul(&WeylElement::basis_c(k, ch))
                                .mul(&WeylElement::basis_c(l, ch));
                            assert_eq!(
                                quartic_closed_form(i, j, k, l, ch),
                                chain,
                                "({i},{j},{k},{l}) over {ch}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn center_membership() {
        for p in [2u64, 3, 5] {
            let ch = Char::Prime(p);
            let x = WeylElement::monomial(1, 0, Scalar::one(ch));
            let y = WeylElement::monomial(0, 1, Scalar::one(ch));
            assert!(x.pow(p as u32).commutator(&y).is_zero(), "x^{p} central");
            assert!(y.pow(p as u32).commutator(&x).is_zero(), "y^{p} central");
        }
        // Over the rationals nothing of the form x^k y^l with (k,l) != (0,0)
        // is central.
        let x = WeylElement::monomial(1, 0, Scalar::one(q()));
        let y = WeylElement::monomial(0, 1, Scalar::one(q()));
        for k in 0..=3u32 {
            for l in 0..=3u32 {
                if (k, l) == (0, 0) {
                    continue;
                }
                let m = WeylElement::monomial(k, l, Scalar::one(q()));
                assert!(
                    !m.commutator(&x).is_zero() || !m.commutator(&y).is_zero(),
                    "x^{k} y^{l} must not be central in characteristic 0"
                );
            }
        }
    }

    #[test]
    fn symbolic_unit_times_basis() {
        let e = SymbolicWeylElement::one().mul_basis(1);
        let terms: Vec<_> = e.terms().collect();
        assert_eq!(terms.len(), 1);
        let ((x_exp, y_exp), coeff) = terms[0];
        assert_eq!(*y_exp, 1);
        assert_eq!(x_exp, &AffineExp::zero().plus_symbol(1));
        assert_eq!(coeff, &ExpPoly::one());
    }

    #[test]
    fn symbolic_product_of_two_matches_reordering_rule() {
        // (x^i y)(x^j y) = x^(i+j) y^2 + j x^(i+j-1) y
        let e = SymbolicWeylElement::basis_product(&[0, 1]);
        let base = AffineExp::zero().plus_symbol(0).plus_symbol(1);
        assert_eq!(e.terms().count(), 2);
        let c0 = &e.terms[&(base.clone(), 2)];
        assert_eq!(c0, &ExpPoly::one());
        let c1 = &e.terms[&(base.minus(1), 1)];
        assert_eq!(c1, &ExpPoly::symbol(1));
    }

    #[test]
    fn symbolic_t2_case_matches_integer_substitution() {
        // (x^i y^2) * (x^j y) = x^(i+j) y^3 + 2j x^(i+j-1) y^2
        //                      + j(j-1) x^(i+j-2) y.
        let mut start = SymbolicWeylElement::zero();
        let mut x_i = AffineExp::zero().plus_symbol(0);
        start.add_term(x_i.clone(), 2, &ExpPoly::one());
        let e = start.mul_basis(1);
        x_i = x_i.plus_symbol(1);
        assert_eq!(e.terms[&(x_i.clone(), 3)], ExpPoly::one());
        assert_eq!(
            e.terms[&(x_i.minus(1), 2)],
            ExpPoly::symbol(1).scale(&2.into())
        );
        assert_eq!(e.terms[&(x_i.minus(2), 1)], falling_factorial(1, 2));

        // Oracle: substitute j = 0..6 and compare with the concrete product.
        for i in 0..=3u64 {
            for j in 0..=6u64 {
                let concrete = e.substitute(&[i, j], q()).unwrap();
                let lhs = WeylElement::monomial(i as u32, 2, Scalar::one(q()));
                let rhs = WeylElement::basis_c(j as u32, q());
                assert_eq!(concrete, lhs.mul(&rhs), "i={i} j={j}");
            }
        }
    }

    #[test]
    fn substitution_examples() {
        // Symbolic c_i c_j at (1,2).
        let e = SymbolicWeylElement::basis_product(&[0, 1]);
        let got = e.substitute(&[1, 2], q()).unwrap();
        assert_eq!(got.to_string(), "x^3*y^2 + 2*x^2*y");

        // Quartic at (1,1,1,1).
        let e4 = SymbolicWeylElement::basis_product(&[0, 1, 2, 3]);
        let got4 = e4.substitute(&[1, 1, 1, 1], q()).unwrap();
        assert_eq!(got4, quartic_closed_form(1, 1, 1, 1, q()));

        // All-zero point on a length-n product gives y^n.
        for n in 1..=5usize {
            let syms: Vec<Sym> = (0..n as Sym).collect();
            let e = SymbolicWeylElement::basis_product(&syms);
            let got = e.substitute(&vec![0; n], q()).unwrap();
            assert_eq!(got, WeylElement::monomial(0, n as u32, Scalar::one(q())));
        }
    }

    fn arb_word() -> impl Strategy<Value = Vec<Gen>> {
        proptest::collection::vec(prop::sample::select(vec![Gen::X, Gen::Y]), 0..7)
    }

    proptest! {
        #[test]
        fn rewriting_is_multiplicative(w1 in arb_word(), w2 in arb_word(), which in 0usize..3) {
            let ch = [Char::Zero, Char::Prime(2), Char::Prime(3)][which];
            let mut concat = w1.clone();
            concat.extend_from_slice(&w2);
            prop_assert_eq!(
                normal_form(&concat, ch),
                normal_form(&w1, ch).mul(&normal_form(&w2, ch))
            );
        }
    }
}
