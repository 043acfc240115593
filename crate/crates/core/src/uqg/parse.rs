use super::algebra::QuantumGroup;
use super::element::UElement;
use super::UqError;
use crate::cartan::Weight;
use crate::scalars::{parse_scalar, QScalar};

/// Parses expressions such as `e[1]*f[1] - q^-1*k[1,0]` or
/// `(q - q^-1)*f[2]^2*e[1]`. Indices are 1-based; `k[...]` takes
/// fundamental-weight coordinates.
pub fn parse_element(uq: &QuantumGroup, src: &str) -> Result<UElement, UqError> {
    let mut p = ElemParser { s: src.as_bytes(), pos: 0, uq };
    let v = p.expr()?;
    p.ws();
    if p.pos != p.s.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

struct ElemParser<'a> {
    s: &'a [u8],
    pos: usize,
    uq: &'a QuantumGroup,
}

impl ElemParser<'_> {
    fn err(&self, msg: &str) -> UqError {
        UqError::Parse {
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

    fn expr(&mut self) -> Result<UElement, UqError> {
        let mut acc = if self.eat(b'-') {
            self.term()?.scale(&-QScalar::one())
        } else {
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.term()?);
            } else if self.eat(b'-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<UElement, UqError> {
        let mut acc = self.power()?;
        loop {
            // juxtaposed generators multiply, as in `f[2]e[1]`
            let implicit = matches!(self.peek(), Some(b'e' | b'f' | b'k'));
            if !implicit && !self.eat(b'*') {
                return Ok(acc);
            }
            let rhs = self.power()?;
            acc = self.uq.mul(&acc, &rhs)?;
        }
    }

    fn power(&mut self) -> Result<UElement, UqError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.ws();
            let start = self.pos;
            while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let n: usize = std::str::from_utf8(&self.s[start..self.pos])
                .ok()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| self.err("expected a nonnegative exponent"))?;
            return self.uq.pow(&base, n);
        }
        Ok(base)
    }

    fn index_list(&mut self) -> Result<Vec<i32>, UqError> {
        if !self.eat(b'[') {
            return Err(self.err("expected '['"));
        }
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos] != b']' {
            self.pos += 1;
        }
        let inner = std::str::from_utf8(&self.s[start..self.pos]).map_err(|_| self.err("utf8"))?;
        if !self.eat(b']') {
            return Err(self.err("expected ']'"));
        }
        inner
            .split(',')
            .map(|t| t.trim().parse::<i32>().map_err(|_| self.err("bad index")))
            .collect()
    }

    fn atom(&mut self) -> Result<UElement, UqError> {
        let rank = self.uq.rank();
        match self.peek() {
            Some(c @ (b'e' | b'f')) => {
                self.pos += 1;
                let idx = self.index_list()?;
                if idx.len() != 1 || idx[0] < 1 || idx[0] as usize > rank {
                    return Err(self.err("generator index out of range"));
                }
                let i = idx[0] as usize - 1;
                Ok(if c == b'e' { self.uq.e(i) } else { self.uq.f(i) })
            }
            Some(b'k') => {
                self.pos += 1;
                let idx = self.index_list()?;
                if idx.len() != rank {
                    return Err(self.err("k[...] needs one coordinate per fundamental weight"));
                }
                Ok(self.uq.k(Weight::new(&idx)))
            }
            Some(b'(') => {
                // either a scalar or a bracketed element
                let save = self.pos;
                if let Some(end) = matching_paren(self.s, self.pos) {
                    let text = std::str::from_utf8(&self.s[save..=end]).map_err(|_| self.err("utf8"))?;
                    if let Ok(c) = parse_scalar(text, self.uq.datum().l0()) {
                        self.pos = end + 1;
                        return Ok(self.uq.scalar(c));
                    }
                }
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(v)
            }
            Some(b'q') | Some(b'0'..=b'9') => {
                let start = self.pos;
                // scalar token: q, q^n, q^(a/b) or an integer
                if self.s[self.pos] == b'q' {
                    self.pos += 1;
                    if self.peek() == Some(b'^') {
                        self.pos += 1;
                        self.ws();
                        if self.s.get(self.pos) == Some(&b'(') {
                            let end = matching_paren(self.s, self.pos).ok_or_else(|| self.err("unbalanced"))?;
                            self.pos = end + 1;
                        } else {
                            if self.s.get(self.pos) == Some(&b'-') {
                                self.pos += 1;
                            }
                            while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                                self.pos += 1;
                            }
                        }
                    }
                } else {
                    while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                        self.pos += 1;
                    }
                }
                let text = std::str::from_utf8(&self.s[start..self.pos]).map_err(|_| self.err("utf8"))?;
                let c = parse_scalar(text, self.uq.datum().l0()).map_err(|e| self.err(&e.to_string()))?;
                Ok(self.uq.scalar(c))
            }
            _ => Err(self.err("expected e[i], f[i], k[...], a scalar or '('")),
        }
    }
}

fn matching_paren(s: &[u8], open: usize) -> Option<usize> {
    let mut depth = 0;
    for (i, &c) in s.iter().enumerate().skip(open) {
        match c {
            b'(' => depth += 1,
            b')' => {
                depth -= 1;
                if depth == 0 {
                    return Some(i);
                }
            }
            _ => {}
        }
    }
    None
}
