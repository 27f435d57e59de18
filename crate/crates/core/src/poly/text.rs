//! Canonical text form: `x1^3 - 3*x1*x2 + 3*x3`, `1` for the empty
//! monomial, `0` for the zero polynomial.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{GradedPoly, Monomial, PolyError, VarTable};

pub(super) fn render(p: &GradedPoly) -> String {
    let terms = p.terms();
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in terms.into_iter().enumerate() {
        let neg = c.is_negative();
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mag = c.abs();
        let mono = render_monomial(p.table(), m);
        if mono.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&mag.to_string());
            out.push('*');
            out.push_str(&mono);
        }
    }
    out
}

pub(super) fn render_monomial(table: &VarTable, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (idx, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(table.name(idx).to_string()),
            _ => parts.push(format!("{}^{e}", table.name(idx))),
        }
    }
    parts.join("*")
}

impl Monomial {
    pub fn render(&self, table: &VarTable) -> String {
        let s = render_monomial(table, self);
        if s.is_empty() {
            "1".to_string()
        } else {
            s
        }
    }
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn err(&self, msg: impl Into<String>) -> PolyError {
        PolyError::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn take_while(&mut self, f: impl Fn(u8) -> bool) -> &str {
        let start = self.pos;
        while self.pos < self.src.len() && f(self.src[self.pos]) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).unwrap_or_default()
    }

    fn integer(&mut self) -> Result<BigInt, PolyError> {
        let digits = self.take_while(|b| b.is_ascii_digit()).to_string();
        digits.parse().map_err(|_| self.err("expected an integer"))
    }
}

pub(super) fn parse(table: &Arc<VarTable>, s: &str) -> Result<GradedPoly, PolyError> {
    let mut cur = Cursor {
        src: s.as_bytes(),
        pos: 0,
    };
    let mut out = GradedPoly::zero(table);
    cur.skip_ws();
    if cur.peek().is_none() {
        return Err(cur.err("empty input"));
    }
    let mut first = true;
    loop {
        cur.skip_ws();
        let negative = if cur.eat(b'-') {
            true
        } else if cur.eat(b'+') {
            if first {
                return Err(cur.err("leading `+`"));
            }
            false
        } else if first {
            false
        } else {
            return Err(cur.err("expected `+` or `-`"));
        };
        first = false;
        cur.skip_ws();
        let (m, mut c) = term(&mut cur, table)?;
        if negative {
            c = -c;
        }
        out.add_term(m, c);
        cur.skip_ws();
        if cur.peek().is_none() {
            break;
        }
    }
    Ok(out)
}

fn term(cur: &mut Cursor<'_>, table: &Arc<VarTable>) -> Result<(Monomial, BigInt), PolyError> {
    let mut coeff = BigInt::one();
    let mut exps = vec![0u32; table.len()];
    loop {
        match cur.peek() {
            Some(b) if b.is_ascii_digit() => coeff *= cur.integer()?,
            Some(b) if b.is_ascii_alphabetic() || b == b'_' => {
                let name = cur
                    .take_while(|b| b.is_ascii_alphanumeric() || b == b'_')
                    .to_string();
                let idx = table
                    .index_of(&name)
                    .ok_or(PolyError::UnknownVariable(name))?;
                let e = if cur.eat(b'^') {
                    let e = cur.integer()?;
                    u32::try_from(e).map_err(|_| cur.err("exponent out of range"))?
                } else {
                    1
                };
                exps[idx] += e;
            }
            _ => return Err(cur.err("expected a coefficient or variable")),
        }
        if !cur.eat(b'*') {
            break;
        }
    }
    Ok((Monomial::new(exps), coeff))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_signs_and_units() {
        let t = VarTable::indexed("x", 2).unwrap();
        let p = GradedPoly::parse(&t, "-x1 + 1").unwrap();
        assert_eq!(p.to_text(), "-x1 + 1");
        assert_eq!(GradedPoly::zero(&t).to_text(), "0");
        assert_eq!(GradedPoly::constant(&t, -7).to_text(), "-7");
        assert_eq!(GradedPoly::parse(&t, "0").unwrap().to_text(), "0");
        assert_eq!(
            GradedPoly::parse(&t, "2*x1*x1 - x2*3").unwrap().to_text(),
            "2*x1^2 - 3*x2"
        );
    }

    #[test]
    fn rejects_malformed_text() {
        let t = VarTable::indexed("x", 2).unwrap();
        for bad in ["", "+x1", "x1 x2", "x1 +", "x3", "x1^", "x1**x2", "*x1"] {
            assert!(GradedPoly::parse(&t, bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn monomial_render() {
        let t = VarTable::indexed("x", 3).unwrap();
        assert_eq!(Monomial::new(vec![0, 0, 0]).render(&t), "1");
        assert_eq!(Monomial::new(vec![2, 0, 1]).render(&t), "x1^2*x3");
    }
}
