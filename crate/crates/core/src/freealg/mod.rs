//! The free unital associative algebra on countably many generators
//! `x1, x2, ...`: words, sparse polynomials, commutators, standard
//! polynomials, and the multidegree machinery.

mod parse;

pub use parse::parse;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{Char, Scalar};

/// A monomial: a finite sequence of 1-based variable indices. The empty
/// word is the unit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Word {
        assert!(
            letters.iter().all(|&v| v >= 1),
            "variable indices are 1-based"
        );
        Word(letters)
    }

    pub fn unit() -> Word {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Letter counts per variable, up to the largest index present.
    pub fn mdeg(&self) -> MultiDegree {
        let m = self.0.iter().copied().max().unwrap_or(0) as usize;
        let mut counts = vec![0u32; m];
        for &v in &self.0 {
            counts[v as usize - 1] += 1;
        }
        MultiDegree::new(counts)
    }
}

/// Canonical term order: length, then lexicographic.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let v = self.0[i];
            let mut run = 0;
            while i < self.0.len() && self.0[i] == v {
                run += 1;
                i += 1;
            }
            if run == 1 {
                parts.push(format!("x{v}"));
            } else {
                parts.push(format!("x{v}^{run}"));
            }
        }
        write!(f, "{}", parts.join("*"))
    }
}

/// Per-variable degrees. Comparisons ignore trailing zeros, so `(1, 2)` and
/// `(1, 2, 0)` denote the same multidegree.
#[derive(Debug, Clone, Default)]
pub struct MultiDegree(Vec<u32>);

impl MultiDegree {
    pub fn new(entries: Vec<u32>) -> MultiDegree {
        MultiDegree(entries)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    fn trimmed(&self) -> &[u32] {
        let mut n = self.0.len();
        while n > 0 && self.0[n - 1] == 0 {
            n -= 1;
        }
        &self.0[..n]
    }

    /// Degree of one variable (1-based index).
    pub fn degree_of(&self, var: u32) -> u32 {
        self.0.get(var as usize - 1).copied().unwrap_or(0)
    }

    /// Total degree.
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of variable slots after trimming trailing zeros.
    pub fn nvars(&self) -> usize {
        self.trimmed().len()
    }
}

impl PartialEq for MultiDegree {
    fn eq(&self, other: &Self) -> bool {
        self.trimmed() == other.trimmed()
    }
}

impl Eq for MultiDegree {}

impl Ord for MultiDegree {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.trimmed().cmp(other.trimmed())
    }
}

impl PartialOrd for MultiDegree {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl std::hash::Hash for MultiDegree {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.trimmed().hash(state);
    }
}

impl fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        write!(f, "({})", strs.join(","))
    }
}

/// An element of the free algebra: a finite linear combination of words over
/// one characteristic. No zero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreePoly {
    ch: Char,
    terms: BTreeMap<Word, Scalar>,
}

impl FreePoly {
    pub fn zero(ch: Char) -> FreePoly {
        FreePoly {
            ch,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ch: Char) -> FreePoly {
        FreePoly::monomial(Word::unit(), Scalar::one(ch))
    }

    /// The generator `x_v` (1-based).
    pub fn var(v: u32, ch: Char) -> FreePoly {
        FreePoly::monomial(Word::new(vec![v]), Scalar::one(ch))
    }

    pub fn monomial(w: Word, coeff: Scalar) -> FreePoly {
        let ch = coeff.char();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(w, coeff);
        }
        FreePoly { ch, terms }
    }

    pub fn char(&self) -> Char {
        self.ch
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &Word) -> Scalar {
        self.terms
            .get(w)
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.ch))
    }

    pub fn add_term(&mut self, w: Word, c: &Scalar) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
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

    pub fn add(&self, other: &FreePoly) -> FreePoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &FreePoly) -> FreePoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> FreePoly {
        FreePoly {
            ch: self.ch,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c.neg()))
                .collect(),
        }
    }

    /// Bilinear product: words concatenate.
    pub fn mul(&self, other: &FreePoly) -> FreePoly {
        let mut out = FreePoly::zero(self.ch);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), &c1.mul(c2));
            }
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> FreePoly {
        let mut out = FreePoly::zero(self.ch);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), &c.mul(s));
        }
        out
    }

    pub fn scale_int(&self, n: i64) -> FreePoly {
        self.scale(&Scalar::from_int(n, self.ch))
    }

    /// The commutator `[f, g] = fg - gf`.
    pub fn bracket(&self, other: &FreePoly) -> FreePoly {
        self.mul(other).sub(&other.mul(self))
    }

    /// Largest variable index appearing in any word.
    pub fn max_var(&self) -> u32 {
        self.terms
            .keys()
            .flat_map(|w| w.letters().iter().copied())
            .max()
            .unwrap_or(0)
    }

    /// The multidegrees present, one per multihomogeneous component.
    pub fn multidegrees(&self) -> BTreeSet<MultiDegree> {
        self.terms.keys().map(|w| w.mdeg()).collect()
    }

    pub fn is_multihomogeneous(&self) -> bool {
        self.multidegrees().len() <= 1
    }

    /// The common multidegree of a nonzero multihomogeneous polynomial.
    pub fn mdeg(&self) -> Result<MultiDegree> {
        let degs = self.multidegrees();
        if degs.len() == 1 {
            Ok(degs.into_iter().next().unwrap())
        } else {
            Err(Error::NotMultihomogeneous)
        }
    }

    /// Sum of the terms of multidegree `d` (zero when none).
    pub fn homogeneous_component(&self, d: &MultiDegree) -> FreePoly {
        let mut out = FreePoly::zero(self.ch);
        for (w, c) in &self.terms {
            if &w.mdeg() == d {
                out.add_term(w.clone(), c);
            }
        }
        out
    }

    /// All multihomogeneous components, keyed by multidegree.
    pub fn components(&self) -> Vec<(MultiDegree, FreePoly)> {
        self.multidegrees()
            .into_iter()
            .map(|d| {
                let comp = self.homogeneous_component(&d);
                (d, comp)
            })
            .collect()
    }

    /// Rename variables: letter `v` becomes `map[v - 1]`.
    pub fn rename_variables(&self, map: &[u32]) -> FreePoly {
        let mut out = FreePoly::zero(self.ch);
        for (w, c) in &self.terms {
            let letters = w
                .letters()
                .iter()
                .map(|&v| map[v as usize - 1])
                .collect::<Vec<_>>();
            out.add_term(Word::new(letters), c);
        }
        out
    }
}

impl fmt::Display for FreePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (w, c)) in self.terms.iter().enumerate() {
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
            if w.is_empty() {
                write!(f, "{}", abs.coeff_string())?;
            } else if abs.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{}*{w}", abs.coeff_string())?;
            }
        }
        Ok(())
    }
}

/// Render a polynomial in the textual grammar. Same as `Display`.
pub fn render(f: &FreePoly) -> String {
    f.to_string()
}

/// The standard polynomial `St_N`: the alternating sum over all
/// permutations of `N` distinct variables.
pub fn standard_polynomial(n: usize, vars: &[u32], ch: Char) -> Result<FreePoly> {
    assert_eq!(vars.len(), n, "St_{n} takes exactly {n} variables");
    let mut seen = BTreeSet::new();
    for &v in vars {
        if !seen.insert(v) {
            return Err(Error::DuplicateVariable(v));
        }
    }
    let args: Vec<FreePoly> = vars.iter().map(|&v| FreePoly::var(v, ch)).collect();
    Ok(st_of_polys(&args))
}

/// `St_N` applied to arbitrary polynomial arguments (multilinear extension).
pub fn st_of_polys(args: &[FreePoly]) -> FreePoly {
    assert!(!args.is_empty());
    let ch = args[0].char();
    let mut out = FreePoly::zero(ch);
    for (perm, sign) in signed_permutations(args.len()) {
        let mut prod = FreePoly::one(ch);
        for &i in &perm {
            prod = prod.mul(&args[i]);
        }
        out = out.add(&prod.scale_int(sign));
    }
    out
}

/// All permutations of `0..n` with their signs.
pub fn signed_permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    use itertools::Itertools;
    (0..n)
        .permutations(n)
        .map(|p| {
            let mut inversions = 0;
            for i in 0..p.len() {
                for j in i + 1..p.len() {
                    if p[i] > p[j] {
                        inversions += 1;
                    }
                }
            }
            let sign = if inversions % 2 == 0 { 1 } else { -1 };
            (p, sign)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn x(v: u32) -> FreePoly {
        FreePoly::var(v, Char::Zero)
    }

    #[test]
    fn product_examples() {
        let p = x(1).mul(&x(2));
        assert_eq!(p.num_terms(), 1);
        assert!(p.coefficient(&Word::new(vec![1, 2])).is_one());

        let s = x(1).add(&x(2));
        let sq = s.mul(&s);
        assert_eq!(sq.num_terms(), 4);
        for w in [[1, 1], [1, 2], [2, 1], [2, 2]] {
            assert!(sq.coefficient(&Word::new(w.to_vec())).is_one());
        }

        let f = x(1).mul(&x(2)).sub(&x(2).scale_int(3));
        assert_eq!(f.mul(&FreePoly::one(Char::Zero)), f);
        assert_eq!(FreePoly::one(Char::Zero).mul(&f), f);
    }

    #[test]
    fn bracket_examples() {
        assert!(x(1).bracket(&x(1)).is_zero());
        let b = x(1).bracket(&x(2));
        assert_eq!(b, x(1).mul(&x(2)).sub(&x(2).mul(&x(1))));
        // [[x1,x2],[x3,x4]] expands by definition into 8 words with
        // coefficients +-1; the oracle is the direct product expansion.
        let nested = x(1).bracket(&x(2)).bracket(&x(3).bracket(&x(4)));
        let direct = {
            let ab = x(1).mul(&x(2)).sub(&x(2).mul(&x(1)));
            let cd = x(3).mul(&x(4)).sub(&x(4).mul(&x(3)));
            ab.mul(&cd).sub(&cd.mul(&ab))
        };
        assert_eq!(nested, direct);
        assert_eq!(nested.num_terms(), 8);
        for (_, c) in nested.terms() {
            assert!(c.is_one() || c.neg().is_one());
        }
    }

    #[test]
    fn standard_polynomial_examples() {
        let st2 = standard_polynomial(2, &[1, 2], Char::Zero).unwrap();
        assert_eq!(st2, x(1).mul(&x(2)).sub(&x(2).mul(&x(1))));

        let st3 = standard_polynomial(3, &[1, 2, 3], Char::Zero).unwrap();
        assert_eq!(st3.num_terms(), 6);
        // Signs follow permutation parity.
        assert!(st3.coefficient(&Word::new(vec![1, 2, 3])).is_one());
        assert!(st3.coefficient(&Word::new(vec![1, 3, 2])).neg().is_one());
        assert!(st3.coefficient(&Word::new(vec![3, 1, 2])).is_one());

        assert_eq!(
            standard_polynomial(3, &[1, 2, 1], Char::Zero),
            Err(Error::DuplicateVariable(1))
        );
    }

    #[test]
    fn standard_polynomial_alternates() {
        // Swapping any two arguments negates the polynomial, N <= 4.
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
                    assert_eq!(st_of_polys(&args), base.neg(), "St_{n} swap {a}<->{b}");
                }
            }
        }
    }

    #[test]
    fn multidegree_examples() {
        let w = Word::new(vec![1, 2, 2, 3, 3, 3]);
        assert_eq!(w.mdeg(), MultiDegree::new(vec![1, 2, 3]));
        assert_eq!(Word::unit().mdeg(), MultiDegree::new(vec![]));
        // mdeg is additive under concatenation.
        let u = Word::new(vec![2, 1]);
        let both = w.concat(&u).mdeg();
        assert_eq!(both, MultiDegree::new(vec![2, 3, 3]));
        // Trailing zeros do not matter.
        assert_eq!(MultiDegree::new(vec![1, 0]), MultiDegree::new(vec![1]));
    }

    #[test]
    fn homogeneous_component_examples() {
        let s = x(1).add(&x(2));
        let sq = s.mul(&s);
        let mixed = sq.homogeneous_component(&MultiDegree::new(vec![1, 1]));
        assert_eq!(mixed, x(1).mul(&x(2)).add(&x(2).mul(&x(1))));
        let squares = sq.homogeneous_component(&MultiDegree::new(vec![2, 0]));
        assert_eq!(squares, x(1).mul(&x(1)));
        // Components partition the polynomial.
        let mut sum = FreePoly::zero(Char::Zero);
        for (_, comp) in sq.components() {
            sum = sum.add(&comp);
        }
        assert_eq!(sum, sq);
    }

    fn arb_poly(ch: Char) -> impl Strategy<Value = FreePoly> {
        proptest::collection::vec((proptest::collection::vec(1u32..4, 0..4), -5i64..6), 0..5)
            .prop_map(move |terms| {
                let mut f = FreePoly::zero(ch);
                for (letters, c) in terms {
                    f.add_term(Word::new(letters), &Scalar::from_int(c, ch));
                }
                f
            })
    }

    proptest! {
        #[test]
        fn mul_is_associative(f in arb_poly(Char::Zero), g in arb_poly(Char::Zero), h in arb_poly(Char::Zero)) {
            prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
        }

        #[test]
        fn bracket_antisymmetry_and_jacobi(f in arb_poly(Char::Prime(5)), g in arb_poly(Char::Prime(5)), h in arb_poly(Char::Prime(5))) {
            prop_assert_eq!(f.bracket(&g), g.bracket(&f).neg());
            let jacobi = f
                .bracket(&g).bracket(&h)
                .add(&g.bracket(&h).bracket(&f))
                .add(&h.bracket(&f).bracket(&g));
            prop_assert!(jacobi.is_zero());
        }

        #[test]
        fn components_partition(f in arb_poly(Char::Zero)) {
            let mut sum = FreePoly::zero(Char::Zero);
            for (d, comp) in f.components() {
                prop_assert!(comp.is_multihomogeneous());
                if !comp.is_zero() {
                    prop_assert_eq!(comp.mdeg().unwrap(), d);
                }
                sum = sum.add(&comp);
            }
            prop_assert_eq!(sum, f);
        }
    }
}
