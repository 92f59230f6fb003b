//! Commutative integer polynomials in exponent symbols.
//!
//! These polynomials carry the coefficients that appear when products of
//! basis elements `x^i*y` are normal-ordered with the exponents `i` left
//! symbolic. Coefficients stay in `Z`; a characteristic is applied only when
//! deciding whether a polynomial vanishes as a function on the nonnegative
//! integers, so one symbolic computation serves every characteristic.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::scalar::Char;

/// Exponent symbol, identified by index. The first four render as the
/// traditional `i`, `j`, `k`, `l`; later ones as `i5`, `i6`, ...
pub type Sym = u32;

pub fn sym_name(s: Sym) -> String {
    match s {
        0 => "i".into(),
        1 => "j".into(),
        2 => "k".into(),
        3 => "l".into(),
        n => format!("i{}", n + 1),
    }
}

/// A monomial in the symbols: exponent per symbol index, trailing zeros
/// trimmed. Ordered graded-lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn unit() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn symbol(s: Sym) -> Monomial {
        let mut v = vec![0; s as usize + 1];
        v[s as usize] = 1;
        Monomial(v)
    }

    fn normalize(mut self) -> Monomial {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
        self
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exponent(&self, s: Sym) -> u32 {
        self.0.get(s as usize).copied().unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut v = vec![0; self.0.len().max(other.0.len())];
        for (i, e) in self.0.iter().enumerate() {
            v[i] += e;
        }
        for (i, e) in other.0.iter().enumerate() {
            v[i] += e;
        }
        Monomial(v).normalize()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial with `BigInt` coefficients; no zero coefficients are
/// stored, so equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ExpPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl ExpPoly {
    pub fn zero() -> ExpPoly {
        ExpPoly::default()
    }

    pub fn one() -> ExpPoly {
        ExpPoly::constant(BigInt::one())
    }

    pub fn constant(n: BigInt) -> ExpPoly {
        let mut terms = BTreeMap::new();
        if !n.is_zero() {
            terms.insert(Monomial::unit(), n);
        }
        ExpPoly { terms }
    }

    pub fn symbol(s: Sym) -> ExpPoly {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::symbol(s), BigInt::one());
        ExpPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m: Monomial, c: &BigInt) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
        }
    }

    pub fn add(&self, other: &ExpPoly) -> ExpPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &ExpPoly) -> ExpPoly {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn mul(&self, other: &ExpPoly) -> ExpPoly {
        let mut out = ExpPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), &(c1 * c2));
            }
        }
        out
    }

    pub fn scale(&self, n: &BigInt) -> ExpPoly {
        if n.is_zero() {
            return ExpPoly::zero();
        }
        ExpPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * n)).collect(),
        }
    }

    /// Largest symbol index appearing with nonzero exponent, if any.
    pub fn max_symbol(&self) -> Option<Sym> {
        self.terms
            .keys()
            .filter_map(|m| m.exponents().iter().rposition(|&e| e > 0).map(|i| i as Sym))
            .max()
    }

    pub fn degree_in(&self, s: Sym) -> u32 {
        self.terms.keys().map(|m| m.exponent(s)).max().unwrap_or(0)
    }

    /// Evaluate at nonnegative integer values, one per symbol index.
    pub fn eval(&self, point: &[u64]) -> Result<BigInt> {
        if let Some(max) = self.max_symbol() {
            if point.len() <= max as usize {
                return Err(Error::MissingSymbol(sym_name(max)));
            }
        }
        let mut acc = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    t *= BigInt::from(point[i]);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Fast-path evaluation used by the dense verification grids; `i128`
    /// accumulation with overflow checks.
    pub fn eval_i128(&self, point: &[u64]) -> Result<i128> {
        if let Some(max) = self.max_symbol() {
            if point.len() <= max as usize {
                return Err(Error::MissingSymbol(sym_name(max)));
            }
        }
        let mut acc: i128 = 0;
        for (m, c) in &self.terms {
            let mut t: i128 = c.to_i128().expect("grid coefficient fits i128");
            for (i, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    t = t.checked_mul(point[i] as i128).expect("grid eval overflow");
                }
            }
            acc = acc.checked_add(t).expect("grid eval overflow");
        }
        Ok(acc)
    }

    /// Reduction modulo the relations `s^p = s` (for every symbol `s`) and
    /// `p = 0`: exponents `e >= 1` are capped to `((e-1) mod (p-1)) + 1`,
    /// terms recollected, coefficients reduced into `[0, p)`.
    pub fn frobenius_reduce(&self, p: u64) -> ExpPoly {
        let p_big = BigInt::from(p);
        let mut out = ExpPoly::zero();
        for (m, c) in &self.terms {
            let capped: Vec<u32> = m
                .exponents()
                .iter()
                .map(|&e| {
                    if e == 0 {
                        0
                    } else {
                        ((e - 1) % (p as u32 - 1).max(1)) + 1
                    }
                })
                .collect();
            let mut r = c % &p_big;
            if r < BigInt::zero() {
                r += &p_big;
            }
            out.add_term(Monomial(capped).normalize(), &r);
        }
        // Recollection may have produced coefficients >= p; reduce again.
        let terms = out
            .terms
            .into_iter()
            .filter_map(|(m, c)| {
                let mut r = &c % &p_big;
                if r < BigInt::zero() {
                    r += &p_big;
                }
                if r.is_zero() {
                    None
                } else {
                    Some((m, r))
                }
            })
            .collect();
        ExpPoly { terms }
    }

    /// Does the polynomial vanish at every point of `N^m` in the given
    /// characteristic? Char 0: only the zero polynomial does. Char `p`:
    /// decided by the Frobenius-quotient reduction.
    pub fn is_zero_function(&self, ch: Char) -> bool {
        match ch {
            Char::Zero => self.is_zero(),
            Char::Prime(p) => self.frobenius_reduce(p).is_zero(),
        }
    }

    /// A nonnegative-integer point where the polynomial is nonzero in the
    /// given characteristic, or `None` when it is a zero function.
    ///
    /// Works variable by variable: split off the highest power of the last
    /// symbol whose coefficient polynomial is nonzero, recurse for the
    /// remaining symbols, then scan the resulting univariate polynomial over
    /// a grid large enough that a nonzero polynomial cannot vanish on it.
    pub fn find_nonzero_point(&self, ch: Char) -> Option<Vec<u64>> {
        let reduced = match ch {
            Char::Zero => self.clone(),
            Char::Prime(p) => self.frobenius_reduce(p),
        };
        if reduced.is_zero() {
            return None;
        }
        let nvars = reduced.max_symbol().map_or(0, |s| s as usize + 1);
        let mut point = vec![0u64; nvars];
        Some(find_point_rec(&reduced, ch, &mut point))
    }
}

fn find_point_rec(poly: &ExpPoly, ch: Char, point: &mut Vec<u64>) -> Vec<u64> {
    debug_assert!(!poly.is_zero());
    let Some(s) = poly.max_symbol() else {
        return point.clone(); // Nonzero constant: any point works.
    };
    // Coefficient of the highest power of symbol `s`.
    let top = poly.degree_in(s);
    let mut coeff = ExpPoly::zero();
    for (m, c) in poly.terms() {
        if m.exponent(s) == top {
            let mut rest = m.exponents().to_vec();
            rest[s as usize] = 0;
            coeff.add_term(Monomial(rest).normalize(), c);
        }
    }
    find_point_rec(&coeff, ch, point);
    // The specialization in `s` is univariate and nonzero; in char 0 a degree
    // d polynomial has at most d roots, in char p a reduced polynomial of
    // degree < p cannot vanish on all residues.
    let limit = match ch {
        Char::Zero => top as u64 + 1,
        Char::Prime(p) => p,
    };
    for v in 0..=limit {
        point[s as usize] = v;
        let val = poly.eval(point).expect("point covers all symbols");
        let nonzero = match ch {
            Char::Zero => !val.is_zero(),
            Char::Prime(p) => !(val % BigInt::from(p)).is_zero(),
        };
        if nonzero {
            return point.clone();
        }
    }
    unreachable!("nonzero polynomial vanished on the whole guaranteed grid");
}

/// The falling factorial `s*(s-1)*...*(s-n+1)`; the empty product is 1.
pub fn falling_factorial(s: Sym, n: u32) -> ExpPoly {
    let mut acc = ExpPoly::one();
    for t in 0..n {
        let factor = ExpPoly::symbol(s).add(&ExpPoly::constant(BigInt::from(-(t as i64))));
        acc = acc.mul(&factor);
    }
    acc
}

impl fmt::Display for ExpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Graded-lex order, leading term first.
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c < &BigInt::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.degree() == 0 {
                factors.push(abs.to_string());
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(sym_name(i as Sym)),
                    _ => factors.push(format!("{}^{}", sym_name(i as Sym), e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
