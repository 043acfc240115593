use super::{QScalar, ScalarError};
use num_bigint::BigInt;

/// Parses the textual scalar grammar, e.g. `(q^2 + 1 + q^-2)/(q - q^-1)` or
/// `3*q^(1/2)`. Fractional exponents must be multiples of `1/l0`.
pub fn parse_scalar(src: &str, l0: u32) -> Result<QScalar, ScalarError> {
    let mut p = Parser {
        s: src.as_bytes(),
        pos: 0,
        l0,
    };
    let v = p.expr()?;
    p.ws();
    if p.pos != p.s.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    l0: u32,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> ScalarError {
        ScalarError::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<QScalar, ScalarError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = acc.checked_add(&self.term()?)?;
            } else if self.eat(b'-') {
                acc = acc.checked_sub(&self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<QScalar, ScalarError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = acc.checked_mul(&self.unary()?)?;
            } else if self.eat(b'/') {
                acc = acc.checked_div(&self.unary()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<QScalar, ScalarError> {
        if self.eat(b'-') {
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<QScalar, ScalarError> {
        match self.peek() {
            Some(b'q') => {
                self.pos += 1;
                if !self.eat(b'^') {
                    return Ok(QScalar::q_pow(self.l0, 1));
                }
                let (n, d) = self.exponent()?;
                QScalar::q_pow_ratio(self.l0, n, d)
                    .ok_or_else(|| self.err("exponent is not a multiple of 1/l0"))
            }
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                if self.eat(b'^') {
                    let (n, d) = self.exponent()?;
                    if d != 1 {
                        return Err(self.err("only integer powers of a bracket"));
                    }
                    if v.is_zero() && n < 0 {
                        return Err(ScalarError::DivisionByZero);
                    }
                    return Ok(v.pow(n));
                }
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(QScalar::from_bigint(n))
            }
            _ => Err(self.err("expected 'q', integer or '('")),
        }
    }

    fn integer(&mut self) -> Result<BigInt, ScalarError> {
        self.ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii digits");
        text.parse().map_err(|_| self.err("bad integer"))
    }

    fn small_int(&mut self) -> Result<i64, ScalarError> {
        let neg = self.eat(b'-');
        let n: i64 = self
            .integer()?
            .try_into()
            .map_err(|_| self.err("exponent out of range"))?;
        Ok(if neg { -n } else { n })
    }

    fn exponent(&mut self) -> Result<(i64, i64), ScalarError> {
        if self.eat(b'(') {
            let n = self.small_int()?;
            let d = if self.eat(b'/') { self.small_int()? } else { 1 };
            if !self.eat(b')') {
                return Err(self.err("expected ')'"));
            }
            if d == 0 {
                return Err(self.err("zero exponent denominator"));
            }
            return Ok((n, d));
        }
        Ok((self.small_int()?, 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_quotient() {
        let v = parse_scalar("(q^2 + 1 + q^-2)/(q - q^-1)", 1).unwrap();
        let again = parse_scalar(&v.to_string(), 1).unwrap();
        assert_eq!(v, again);
    }

    #[test]
    fn fractional_exponents() {
        let v = parse_scalar("q^(1/2) * q^(1/2)", 2).unwrap();
        assert_eq!(v, QScalar::q_pow(2, 1));
        assert!(parse_scalar("q^(1/3)", 2).is_err());
    }

    #[test]
    fn reports_position() {
        match parse_scalar("q + ", 1) {
            Err(ScalarError::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        assert_eq!(parse_scalar("1/(q-q)", 1), Err(ScalarError::DivisionByZero));
    }
}
