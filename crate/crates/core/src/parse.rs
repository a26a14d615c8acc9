//! Text grammar for fields, rings, polynomials and polynomial matrices.
//!
//! ```text
//! ring   := field '[' ident (',' ident)* ']' ( '/' '(' poly (',' poly)* ')' )?
//! field  := 'Q' | 'Q(i)' | 'F' prime
//! poly   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' integer)?
//! atom   := integer ('/' integer)? | ident | '(' poly ')'
//! ```

use std::sync::Arc;

use num_bigint::BigInt;

use crate::algebra::{Field, PolyRing, Polynomial};
use crate::error::{Error, Result};

pub(crate) struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(src: &'a str) -> Cursor<'a> {
        Cursor { src, pos: 0 }
    }

    pub(crate) fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    pub(crate) fn skip_ws(&mut self) {
        while let Some(c) = self.peek_raw() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek_raw(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    pub(crate) fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_raw()
    }

    pub(crate) fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(d) => self.err(format!("expected `{c}`, found `{d}`")),
                None => self.err(format!("expected `{c}`, found end of input")),
            }
        }
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    pub(crate) fn eat_keyword(&mut self, kw: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(kw) {
            let after = self.src[self.pos + kw.len()..].chars().next();
            if !after.is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
                self.pos += kw.len();
                return true;
            }
        }
        false
    }

    pub(crate) fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        let mut chars = self.src[self.pos..].char_indices();
        match chars.next() {
            Some((_, c)) if c.is_ascii_alphabetic() || c == '_' => {}
            _ => return self.err("expected identifier"),
        }
        let mut end = self.src.len();
        for (i, c) in chars {
            if !(c.is_ascii_alphanumeric() || c == '_') {
                end = self.pos + i;
                break;
            }
        }
        self.pos = end;
        Ok(self.src[start..end].to_string())
    }

    pub(crate) fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        let neg = self.src[self.pos..].starts_with('-');
        if neg {
            self.pos += 1;
        }
        let digits: String = self.src[self.pos..]
            .chars()
            .take_while(|c| c.is_ascii_digit())
            .collect();
        if digits.is_empty() {
            self.pos = start;
            return self.err("expected integer");
        }
        self.pos += digits.len();
        let v: BigInt = digits.parse().expect("digits");
        Ok(if neg { -v } else { v })
    }

    pub(crate) fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    pub(crate) fn position(&self) -> usize {
        self.pos
    }

    pub(crate) fn advance(&mut self, n: usize) {
        self.pos += n;
    }
}

pub fn parse_field(s: &str) -> Result<Field> {
    let t = s.trim();
    match t {
        "Q" | "QQ" => Ok(Field::Rational),
        "Q(i)" | "QQ(i)" => Ok(Field::GaussianRational),
        _ => {
            let p = t
                .strip_prefix("Fp:")
                .or_else(|| t.strip_prefix('F'))
                .or_else(|| t.strip_prefix("GF"))
                .and_then(|d| d.parse::<u64>().ok());
            match p {
                Some(p) => Field::prime(p),
                None => Err(Error::Parse {
                    pos: 0,
                    msg: format!("unknown field `{t}`"),
                }),
            }
        }
    }
}

fn parse_field_prefix(c: &mut Cursor) -> Result<Field> {
    c.skip_ws();
    let rest = c.rest();
    let end = rest.find('[').ok_or(Error::Parse {
        pos: c.position(),
        msg: "expected `[` after field".into(),
    })?;
    let f = parse_field(&rest[..end]).map_err(|e| match e {
        Error::Parse { msg, .. } => Error::Parse {
            pos: c.position(),
            msg,
        },
        other => other,
    })?;
    c.advance(end);
    Ok(f)
}

/// Parses `Q[x,y]/(f,g)` into the ambient ring and the ideal generators.
pub fn parse_ring(s: &str) -> Result<(Arc<PolyRing>, Vec<Polynomial>)> {
    let mut c = Cursor::new(s);
    let r = parse_ring_at(&mut c)?;
    if !c.at_end() {
        return c.err("trailing input after ring");
    }
    Ok(r)
}

pub(crate) fn parse_ring_at(c: &mut Cursor) -> Result<(Arc<PolyRing>, Vec<Polynomial>)> {
    let field = parse_field_prefix(c)?;
    c.expect('[')?;
    let mut vars = Vec::new();
    loop {
        let v = c.ident()?;
        if vars.contains(&v) {
            return c.err(format!("variable `{v}` listed twice"));
        }
        vars.push(v);
        if c.eat(']') {
            break;
        }
        c.expect(',')?;
    }
    let names: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
    let ring = PolyRing::new(field, &names);
    let mut ideal = Vec::new();
    if c.eat('/') {
        c.expect('(')?;
        loop {
            ideal.push(parse_poly_at(c, &ring)?);
            if c.eat(')') {
                break;
            }
            c.expect(',')?;
        }
    }
    Ok((ring, ideal))
}

pub fn parse_poly(ring: &Arc<PolyRing>, s: &str) -> Result<Polynomial> {
    let mut c = Cursor::new(s);
    let p = parse_poly_at(&mut c, ring)?;
    if !c.at_end() {
        return c.err("unexpected trailing input");
    }
    Ok(p)
}

pub(crate) fn parse_poly_at(c: &mut Cursor, ring: &Arc<PolyRing>) -> Result<Polynomial> {
    let neg = c.eat('-');
    let mut acc = parse_term(c, ring)?;
    if neg {
        acc = acc.neg();
    }
    loop {
        if c.eat('+') {
            acc = acc.add(&parse_term(c, ring)?);
        } else if c.eat('-') {
            acc = acc.sub(&parse_term(c, ring)?);
        } else {
            return Ok(acc);
        }
    }
}

fn parse_term(c: &mut Cursor, ring: &Arc<PolyRing>) -> Result<Polynomial> {
    let mut acc = parse_factor(c, ring)?;
    while c.eat('*') {
        acc = acc.mul(&parse_factor(c, ring)?);
    }
    Ok(acc)
}

fn parse_factor(c: &mut Cursor, ring: &Arc<PolyRing>) -> Result<Polynomial> {
    let base = parse_atom(c, ring)?;
    if c.eat('^') {
        c.skip_ws();
        let at = c.position();
        let e = c.integer()?;
        let e: u32 = match u32::try_from(e) {
            Ok(e) if e <= 1000 => e,
            _ => {
                return Err(Error::Parse {
                    pos: at,
                    msg: "exponent must be a small nonnegative integer".into(),
                })
            }
        };
        return Ok(base.pow(e));
    }
    Ok(base)
}

fn parse_atom(c: &mut Cursor, ring: &Arc<PolyRing>) -> Result<Polynomial> {
    match c.peek() {
        Some('(') => {
            c.advance(1);
            let p = parse_poly_at(c, ring)?;
            c.expect(')')?;
            Ok(p)
        }
        Some(d) if d.is_ascii_digit() => {
            let num = c.integer()?;
            let val = if c.rest().trim_start().starts_with('/') && !c.rest().trim_start().starts_with("/(") {
                c.expect('/')?;
                let at = c.position();
                let den = c.integer()?;
                ring.field.from_fraction(&num, &den).map_err(|_| Error::Parse {
                    pos: at,
                    msg: "zero denominator".into(),
                })?
            } else {
                ring.field.from_bigint(&num)
            };
            Ok(Polynomial::constant(ring, val))
        }
        Some(d) if d.is_ascii_alphabetic() || d == '_' => {
            let at = c.position();
            let name = c.ident()?;
            if name == "i" && ring.var_index("i").is_none() {
                if let Some(u) = ring.field.imaginary_unit() {
                    return Ok(Polynomial::constant(ring, u));
                }
            }
            match ring.var_index(&name) {
                Some(i) => Ok(Polynomial::var(ring, i)),
                None => Err(Error::Parse {
                    pos: at,
                    msg: format!("unknown variable `{name}`"),
                }),
            }
        }
        Some(d) => c.err(format!("unexpected `{d}`")),
        None => c.err("unexpected end of input"),
    }
}

/// `[p, q, ...]`
pub(crate) fn parse_poly_list_at(c: &mut Cursor, ring: &Arc<PolyRing>) -> Result<Vec<Polynomial>> {
    c.expect('[')?;
    let mut out = Vec::new();
    if c.eat(']') {
        return Ok(out);
    }
    loop {
        out.push(parse_poly_at(c, ring)?);
        if c.eat(']') {
            return Ok(out);
        }
        c.expect(',')?;
    }
}

/// `[[p11, p12], [p21, p22]]`: a list of rows.
pub fn parse_poly_matrix(ring: &Arc<PolyRing>, s: &str) -> Result<Vec<Vec<Polynomial>>> {
    let mut c = Cursor::new(s);
    let m = parse_poly_matrix_at(&mut c, ring)?;
    if !c.at_end() {
        return c.err("unexpected trailing input");
    }
    Ok(m)
}

pub(crate) fn parse_poly_matrix_at(
    c: &mut Cursor,
    ring: &Arc<PolyRing>,
) -> Result<Vec<Vec<Polynomial>>> {
    c.expect('[')?;
    let mut rows = Vec::new();
    if c.eat(']') {
        return Ok(rows);
    }
    loop {
        let at = c.position();
        let row = parse_poly_list_at(c, ring)?;
        if let Some(first) = rows.first() {
            let first: &Vec<Polynomial> = first;
            if first.len() != row.len() {
                return Err(Error::Parse {
                    pos: at,
                    msg: format!("row has {} entries, expected {}", row.len(), first.len()),
                });
            }
        }
        rows.push(row);
        if c.eat(']') {
            return Ok(rows);
        }
        c.expect(',')?;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_with_relation() {
        let (r, ideal) = parse_ring("Q[x,y,z,w]/(x*y+z*w)").unwrap();
        assert_eq!(r.nvars(), 4);
        assert_eq!(ideal[0].to_string(), "x*y + z*w");
    }

    #[test]
    fn prime_field_ring() {
        let (r, ideal) = parse_ring("F5[x,y]").unwrap();
        assert_eq!(r.field, Field::Prime(5));
        assert!(ideal.is_empty());
        assert!(matches!(parse_ring("F6[x]"), Err(Error::NotPrime(6))));
    }

    #[test]
    fn powers_and_fractions() {
        let (r, _) = parse_ring("Q[z,w]").unwrap();
        let p = parse_poly(&r, "z^2 + z^3 + w^2 - 1/2*z").unwrap();
        assert_eq!(p.to_string(), "z^3 + z^2 + w^2 - 1/2*z");
        let q = parse_poly(&r, "-(z+w)^2").unwrap();
        assert_eq!(q.to_string(), "-z^2 - 2*z*w - w^2");
    }

    #[test]
    fn error_positions() {
        let (r, _) = parse_ring("Q[x,y]").unwrap();
        assert_eq!(
            parse_poly(&r, "x + q"),
            Err(Error::Parse {
                pos: 4,
                msg: "unknown variable `q`".into()
            })
        );
        assert!(matches!(parse_poly(&r, "x +"), Err(Error::Parse { pos: 3, .. })));
        assert!(matches!(parse_poly(&r, "1/0"), Err(Error::Parse { .. })));
    }

    #[test]
    fn matrices() {
        let (r, _) = parse_ring("Q[x,y,z,w]").unwrap();
        let m = parse_poly_matrix(&r, "[[x, -w],[z, y]]").unwrap();
        assert_eq!(m.len(), 2);
        assert_eq!(m[0][1].to_string(), "-w");
        assert!(parse_poly_matrix(&r, "[[x],[z, y]]").is_err());
    }
}
