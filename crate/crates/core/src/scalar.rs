//! Exact field coefficients over the rationals or a prime field.
//!
//! Every [`Scalar`] carries its [`Char`] and arithmetic between scalars of
//! different characteristics is a bug, not a recoverable condition: the
//! binary operations panic on a mismatch, the same way `ndarray` treats a
//! shape mismatch. Division by zero is the one value-dependent failure and
//! [`Scalar::inv`] reports it as an error.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Field characteristic: zero or a prime `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Char {
    Zero,
    Prime(u64),
}

impl Char {
    /// Characteristic `p`, verified prime by trial division.
    pub fn prime(p: u64) -> Result<Char> {
        if is_prime(p) {
            Ok(Char::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn is_zero(self) -> bool {
        self == Char::Zero
    }

    /// The characteristic as an integer (0 for `Zero`).
    pub fn value(self) -> u64 {
        match self {
            Char::Zero => 0,
            Char::Prime(p) => p,
        }
    }
}

impl FromStr for Char {
    type Err = Error;

    fn from_str(s: &str) -> Result<Char> {
        let n: u64 = s.trim().parse().map_err(|_| Error::NotPrime(0))?;
        if n == 0 {
            Ok(Char::Zero)
        } else {
            Char::prime(n)
        }
    }
}

impl fmt::Display for Char {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum Repr {
    /// Lowest terms, positive denominator (maintained by `BigRational`).
    Rat(BigRational),
    /// Residue in `[0, p)`.
    Mod(u64),
}

/// An exact field element tagged with its characteristic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Scalar {
    ch: Char,
    repr: Repr,
}

impl Scalar {
    pub fn zero(ch: Char) -> Scalar {
        Scalar::from_bigint(&BigInt::zero(), ch)
    }

    pub fn one(ch: Char) -> Scalar {
        Scalar::from_bigint(&BigInt::one(), ch)
    }

    /// Canonical image of an integer in the field of characteristic `ch`.
    pub fn from_int(n: i64, ch: Char) -> Scalar {
        Scalar::from_bigint(&BigInt::from(n), ch)
    }

    pub fn from_bigint(n: &BigInt, ch: Char) -> Scalar {
        let repr = match ch {
            Char::Zero => Repr::Rat(BigRational::from_integer(n.clone())),
            Char::Prime(p) => Repr::Mod(mod_reduce(n, p)),
        };
        Scalar { ch, repr }
    }

    /// Exact rational `num/den` in characteristic zero.
    pub fn from_ratio(num: &BigInt, den: &BigInt) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar {
            ch: Char::Zero,
            repr: Repr::Rat(BigRational::new(num.clone(), den.clone())),
        })
    }

    pub fn char(&self) -> Char {
        self.ch
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Rat(q) => q.is_zero(),
            Repr::Mod(r) => *r == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.repr {
            Repr::Rat(q) => q.is_one(),
            Repr::Mod(r) => *r == 1,
        }
    }

    /// The rational value; panics unless characteristic zero.
    pub fn as_rational(&self) -> &BigRational {
        match &self.repr {
            Repr::Rat(q) => q,
            Repr::Mod(_) => panic!("as_rational called on a residue"),
        }
    }

    /// The residue in `[0, p)`; panics in characteristic zero.
    pub fn as_residue(&self) -> u64 {
        match &self.repr {
            Repr::Rat(_) => panic!("as_residue called on a rational"),
            Repr::Mod(r) => *r,
        }
    }

    #[track_caller]
    fn check_char(&self, rhs: &Scalar) {
        assert_eq!(
            self.ch, rhs.ch,
            "scalar characteristic mismatch: {} vs {}",
            self.ch, rhs.ch
        );
    }

    #[track_caller]
    pub fn add(&self, rhs: &Scalar) -> Scalar {
        self.check_char(rhs);
        let repr = match (&self.repr, &rhs.repr) {
            (Repr::Rat(a), Repr::Rat(b)) => Repr::Rat(a + b),
            (Repr::Mod(a), Repr::Mod(b)) => Repr::Mod((a + b) % self.ch.value()),
            _ => unreachable!(),
        };
        Scalar { ch: self.ch, repr }
    }

    #[track_caller]
    pub fn sub(&self, rhs: &Scalar) -> Scalar {
        self.add(&rhs.neg())
    }

    #[track_caller]
    pub fn mul(&self, rhs: &Scalar) -> Scalar {
        self.check_char(rhs);
        let repr = match (&self.repr, &rhs.repr) {
            (Repr::Rat(a), Repr::Rat(b)) => Repr::Rat(a * b),
            (Repr::Mod(a), Repr::Mod(b)) => {
                Repr::Mod((((*a as u128) * (*b as u128)) % self.ch.value() as u128) as u64)
            }
            _ => unreachable!(),
        };
        Scalar { ch: self.ch, repr }
    }

    pub fn neg(&self) -> Scalar {
        let repr = match &self.repr {
            Repr::Rat(a) => Repr::Rat(-a),
            Repr::Mod(0) => Repr::Mod(0),
            Repr::Mod(a) => Repr::Mod(self.ch.value() - a),
        };
        Scalar { ch: self.ch, repr }
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let repr = match &self.repr {
            Repr::Rat(a) => Repr::Rat(a.recip()),
            Repr::Mod(a) => Repr::Mod(mod_inv(*a, self.ch.value())),
        };
        Ok(Scalar { ch: self.ch, repr })
    }

    /// Division; errors when `rhs` is zero.
    #[track_caller]
    pub fn div(&self, rhs: &Scalar) -> Result<Scalar> {
        Ok(self.mul(&rhs.inv()?))
    }

    /// Lift to an integer representative: the numerator when the value is an
    /// integer rational, or the residue. Panics on a non-integer rational.
    pub fn to_bigint(&self) -> BigInt {
        match &self.repr {
            Repr::Rat(q) => {
                assert!(q.is_integer(), "to_bigint on non-integer rational {q}");
                q.to_integer()
            }
            Repr::Mod(r) => BigInt::from(*r),
        }
    }

    /// Plain coefficient form used inside polynomial rendering and JSON
    /// reports: `a/b` rationals, bare residues.
    pub fn coeff_string(&self) -> String {
        match &self.repr {
            Repr::Rat(q) => q.to_string(),
            Repr::Mod(r) => r.to_string(),
        }
    }

    /// True when the value is a negative rational (never for residues).
    pub fn is_negative(&self) -> bool {
        match &self.repr {
            Repr::Rat(q) => q.is_negative(),
            Repr::Mod(_) => false,
        }
    }
}

/// Standalone rendering: rationals as `a/b`, residues as `k (mod p)`.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Rat(q) => write!(f, "{q}"),
            Repr::Mod(r) => write!(f, "{r} (mod {})", self.ch.value()),
        }
    }
}

fn mod_reduce(n: &BigInt, p: u64) -> u64 {
    use num_traits::ToPrimitive;
    let p_big = BigInt::from(p);
    let mut r = n % &p_big;
    if r.is_negative() {
        r += &p_big;
    }
    r.to_u64().expect("reduced residue fits u64")
}

/// Inverse mod a prime via Fermat: `a^(p-2) mod p`.
fn mod_inv(a: u64, p: u64) -> u64 {
    let mut base = a as u128;
    let mut exp = p - 2;
    let m = p as u128;
    let mut acc: u128 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn chars() -> [Char; 4] {
        [Char::Zero, Char::Prime(2), Char::Prime(3), Char::Prime(5)]
    }

    #[test]
    fn primality_is_checked() {
        assert!(Char::prime(2).is_ok());
        assert!(Char::prime(3).is_ok());
        assert!(Char::prime(101).is_ok());
        assert_eq!(Char::prime(1), Err(Error::NotPrime(1)));
        assert_eq!(Char::prime(4), Err(Error::NotPrime(4)));
        assert_eq!(Char::prime(0), Err(Error::NotPrime(0)));
    }

    #[test]
    fn from_integer_examples() {
        assert_eq!(Scalar::from_int(5, Char::Prime(2)).as_residue(), 1);
        let z = Scalar::from_int(0, Char::Zero);
        assert!(z.is_zero());
        assert_eq!(z.coeff_string(), "0");
        // -64 mod 3: long division gives -64 = 3*(-22) + 2.
        assert_eq!(Scalar::from_int(-64, Char::Prime(3)).as_residue(), 2);
    }

    #[test]
    fn arithmetic_examples() {
        let two = Scalar::from_int(2, Char::Prime(5));
        assert_eq!(two.inv().unwrap().as_residue(), 3);

        let half = Scalar::from_ratio(&1.into(), &2.into()).unwrap();
        let third = Scalar::from_ratio(&1.into(), &3.into()).unwrap();
        let five_sixths = Scalar::from_ratio(&5.into(), &6.into()).unwrap();
        assert_eq!(half.add(&third), five_sixths);

        for ch in chars() {
            for n in [-7i64, -1, 1, 2, 3, 10] {
                let a = Scalar::from_int(n, ch);
                if a.is_zero() {
                    assert_eq!(a.inv(), Err(Error::DivisionByZero));
                } else {
                    assert!(a.mul(&a.inv().unwrap()).is_one());
                }
            }
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(
            Scalar::from_ratio(&5.into(), &6.into())
                .unwrap()
                .to_string(),
            "5/6"
        );
        assert_eq!(Scalar::from_int(7, Char::Zero).to_string(), "7");
        assert_eq!(Scalar::from_int(7, Char::Prime(5)).to_string(), "2 (mod 5)");
        assert_eq!(Scalar::from_int(7, Char::Prime(5)).coeff_string(), "2");
    }

    #[test]
    #[should_panic(expected = "characteristic mismatch")]
    fn mixing_characteristics_panics() {
        let a = Scalar::from_int(1, Char::Zero);
        let b = Scalar::from_int(1, Char::Prime(2));
        let _ = a.add(&b);
    }

    proptest! {
        #[test]
        fn field_axioms(a in -50i64..50, b in -50i64..50, c in -50i64..50, which in 0usize..4) {
            let ch = chars()[which];
            let (x, y, z) = (Scalar::from_int(a, ch), Scalar::from_int(b, ch), Scalar::from_int(c, ch));
            // Associativity and commutativity.
            prop_assert_eq!(x.add(&y).add(&z), x.add(&y.add(&z)));
            prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
            prop_assert_eq!(x.add(&y), y.add(&x));
            prop_assert_eq!(x.mul(&y), y.mul(&x));
            // Distributivity.
            prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
            // Inverses.
            prop_assert!(x.add(&x.neg()).is_zero());
            if !x.is_zero() {
                prop_assert!(x.mul(&x.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn from_integer_is_a_ring_homomorphism(a in -1000i64..1000, b in -1000i64..1000, which in 0usize..4) {
            let ch = chars()[which];
            let f = |n: i64| Scalar::from_int(n, ch);
            prop_assert_eq!(f(a).add(&f(b)), f(a + b));
            prop_assert_eq!(f(a).mul(&f(b)), f(a * b));
        }
    }
}
