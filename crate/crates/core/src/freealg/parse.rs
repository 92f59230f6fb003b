//! Recursive-descent parser for the textual polynomial grammar.
//!
//! ```text
//! poly     := ['-'] term { ('+'|'-') term }
//! term     := [number ['*']] factor { '*' factor } | number
//! factor   := atom ['^' nonneg_integer]
//! atom     := variable | '[' poly ',' poly ']' | '(' poly ')'
//!           | 'St' positive_integer '(' poly { ',' poly } ')'
//! variable := 'x' positive_integer
//! number   := integer ['/' positive_integer]
//! ```
//!
//! Whitespace is insignificant. The `a/b` form keeps `parse . render` the
//! identity when characteristic-zero coefficients are not integers.

use num_bigint::BigInt;

use super::{st_of_polys, FreePoly};
use crate::error::{Error, Result};
use crate::scalar::{Char, Scalar};

/// Parse a polynomial over the field of characteristic `ch`.
pub fn parse(text: &str, ch: Char) -> Result<FreePoly> {
    let mut p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
        ch,
    };
    let poly = p.poly()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(poly)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    ch: Char,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.err(&format!("expected `{}`", b as char)))
        }
    }

    fn poly(&mut self) -> Result<FreePoly> {
        let mut acc = FreePoly::zero(self.ch);
        let mut negate = self.eat(b'-');
        loop {
            let t = self.term()?;
            acc = if negate { acc.sub(&t) } else { acc.add(&t) };
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    negate = false;
                }
                Some(b'-') => {
                    self.pos += 1;
                    negate = true;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<FreePoly> {
        let mut acc = match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n = self.number()?;
                let coeff = FreePoly::monomial(super::Word::unit(), n);
                // `number '*' factor`, `number factor`, or a bare constant.
                let followed_by_factor = matches!(
                    self.peek(),
                    Some(b'*') | Some(b'x') | Some(b'[') | Some(b'(') | Some(b'S')
                );
                if !followed_by_factor {
                    return Ok(coeff);
                }
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                }
                coeff.mul(&self.factor()?)
            }
            _ => self.factor()?,
        };
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<FreePoly> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.uint()? as u32;
            let mut acc = FreePoly::one(self.ch);
            for _ in 0..e {
                acc = acc.mul(&base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<FreePoly> {
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                let v = self.uint()?;
                if v == 0 {
                    return Err(self.err("variable indices start at 1"));
                }
                Ok(FreePoly::var(v as u32, self.ch))
            }
            Some(b'[') => {
                self.pos += 1;
                let lhs = self.poly()?;
                self.expect(b',')?;
                let rhs = self.poly()?;
                self.expect(b']')?;
                Ok(lhs.bracket(&rhs))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.poly()?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                let mut end = self.pos;
                while end < self.bytes.len() && self.bytes[end].is_ascii_alphabetic() {
                    end += 1;
                }
                let name = std::str::from_utf8(&self.bytes[start..end]).unwrap();
                if name != "St" {
                    return Err(Error::UnknownFunction {
                        pos: start,
                        name: name.to_string(),
                    });
                }
                self.pos = end;
                let n = self.uint()?;
                if n == 0 {
                    return Err(self.err("St requires a positive order"));
                }
                self.expect(b'(')?;
                let mut args = vec![self.poly()?];
                while self.eat(b',') {
                    args.push(self.poly()?);
                }
                self.expect(b')')?;
                if args.len() != n as usize {
                    return Err(
                        self.err(&format!("St{n} takes {n} arguments, found {}", args.len()))
                    );
                }
                Ok(st_of_polys(&args))
            }
            _ => Err(self.err("expected a variable, `[`, `(`, `St`, or a number")),
        }
    }

    /// Integer or `a/b` rational coefficient.
    fn number(&mut self) -> Result<Scalar> {
        let num = self.bigint()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let den_pos = self.pos;
            let den = self.bigint()?;
            return match self.ch {
                Char::Zero => Scalar::from_ratio(&num, &den),
                Char::Prime(_) => {
                    let d = Scalar::from_bigint(&den, self.ch);
                    let n = Scalar::from_bigint(&num, self.ch);
                    n.div(&d).map_err(|_| Error::Syntax {
                        pos: den_pos,
                        msg: format!("denominator {den} is zero mod {}", self.ch),
                    })
                }
            };
        }
        Ok(Scalar::from_bigint(&num, self.ch))
    }

    fn bigint(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a number"));
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        Ok(s.parse().expect("digit run parses"))
    }

    fn uint(&mut self) -> Result<u64> {
        let start = self.pos;
        let mut end = self.pos;
        while end < self.bytes.len() && self.bytes[end].is_ascii_digit() {
            end += 1;
        }
        if end == start {
            return Err(self.err("expected a number"));
        }
        let s = std::str::from_utf8(&self.bytes[start..end]).unwrap();
        self.pos = end;
        s.parse().map_err(|_| Error::Syntax {
            pos: start,
            msg: "number too large".to_string(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::super::{render, standard_polynomial, FreePoly, Word};
    use super::*;
    use proptest::prelude::*;

    fn x(v: u32) -> FreePoly {
        FreePoly::var(v, Char::Zero)
    }

    #[test]
    fn parse_examples() {
        let b = parse("x1*x2 - x2*x1", Char::Zero).unwrap();
        assert_eq!(b, x(1).bracket(&x(2)));

        let st3x1 = parse("St3(x1,x2,x3)*x1", Char::Zero).unwrap();
        let expected = standard_polynomial(3, &[1, 2, 3], Char::Zero)
            .unwrap()
            .mul(&x(1));
        assert_eq!(st3x1, expected);
        assert_eq!(st3x1.num_terms(), 6);
        assert!(st3x1.terms().all(|(w, _)| w.len() == 4));

        let nested = parse("[x1,[x2,x3]]", Char::Zero).unwrap();
        assert_eq!(nested, x(1).bracket(&x(2).bracket(&x(3))));
        assert_eq!(nested.num_terms(), 4);
    }

    #[test]
    fn parse_coefficients_and_powers() {
        let f = parse("2x1^2 - 3*x2 + 5", Char::Zero).unwrap();
        assert_eq!(
            f.coefficient(&Word::new(vec![1, 1])),
            Scalar::from_int(2, Char::Zero)
        );
        assert_eq!(
            f.coefficient(&Word::new(vec![2])),
            Scalar::from_int(-3, Char::Zero)
        );
        assert_eq!(
            f.coefficient(&Word::unit()),
            Scalar::from_int(5, Char::Zero)
        );

        let half = parse("1/2*x1", Char::Zero).unwrap();
        assert_eq!(
            half.coefficient(&Word::new(vec![1])),
            Scalar::from_ratio(&1.into(), &2.into()).unwrap()
        );

        // In characteristic 5, 1/2 is the residue 3.
        let mod5 = parse("1/2*x1", Char::Prime(5)).unwrap();
        assert_eq!(mod5.coefficient(&Word::new(vec![1])).as_residue(), 3);

        assert_eq!(
            parse("x1^0", Char::Zero).unwrap(),
            FreePoly::one(Char::Zero)
        );
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse("x1 + + x2", Char::Zero) {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("expected syntax error, got {other:?}"),
        }
        match parse("sin(x1)", Char::Zero) {
            Err(Error::UnknownFunction { pos, name }) => {
                assert_eq!(pos, 0);
                assert_eq!(name, "sin");
            }
            other => panic!("expected unknown function, got {other:?}"),
        }
        assert!(parse("St3(x1,x2)", Char::Zero).is_err());
        assert!(parse("x1*", Char::Zero).is_err());
        assert!(parse("x0", Char::Zero).is_err());
        assert!(parse("1/2*x1", Char::Prime(2)).is_err());
    }

    fn arb_poly(ch: Char) -> impl Strategy<Value = FreePoly> {
        proptest::collection::vec(
            (proptest::collection::vec(1u32..5, 0..5), -9i64..10, 1i64..5),
            0..6,
        )
        .prop_map(move |terms| {
            let mut f = FreePoly::zero(ch);
            for (letters, n, d) in terms {
                let c = match ch {
                    Char::Zero => Scalar::from_ratio(&BigInt::from(n), &BigInt::from(d)).unwrap(),
                    Char::Prime(_) => Scalar::from_int(n, ch),
                };
                f.add_term(Word::new(letters), &c);
            }
            f
        })
    }

    proptest! {
        #[test]
        fn parse_render_round_trip(which in 0usize..3, f_seed in arb_poly(Char::Zero)) {
            let ch = [Char::Zero, Char::Prime(2), Char::Prime(5)][which];
            // Rebuild the polynomial in the target characteristic.
            let mut f = FreePoly::zero(ch);
            if ch == Char::Zero {
                f = f_seed.clone();
            } else {
                for (w, c) in f_seed.terms() {
                    let lifted = Scalar::from_bigint(&c.as_rational().numer().clone(), ch);
                    f.add_term(w.clone(), &lifted);
                }
            }
            let text = render(&f);
            let back = parse(&text, ch).unwrap();
            prop_assert_eq!(back, f, "text was {}", text);
        }
    }
}
