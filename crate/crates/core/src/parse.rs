//! Text grammars for bundles and classes.
//!
//! Bundles:
//! `taut(i)`, `dual(e)`, `sum(e,e,..)`, `tensor(e,e,..)`, `wedge(p,e)`,
//! `sym(p,e)`, `triv(r)`. Factor indices start at 0; the rank of `taut(i)`
//! comes from the ring.
//!
//! Classes:
//! sums and products of integers, `h(i)` (or `h` on a single factor),
//! `sigma(4321)`, `sigma(21;1;)` with one slot per factor, `point`, and
//! `c(d, bundle)`, with `^n` powers and parentheses.

use num_bigint::BigInt;

use crate::bundle::BundleExpr;
use crate::cohomology::{GrassmannProduct, SchubertClass};
use crate::error::{Error, Result};
use crate::partition::Partition;

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {} in {:?}", self.pos, self.src))
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek_raw() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek_raw(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_raw()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{c}'")))
        }
    }

    fn ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest
            .char_indices()
            .find(|(_, c)| !(c.is_ascii_alphabetic() || *c == '_'))
            .map_or(rest.len(), |(i, _)| i);
        if len == 0 {
            return None;
        }
        self.pos += len;
        Some(&rest[..len])
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest
            .char_indices()
            .find(|(_, c)| !c.is_ascii_digit())
            .map_or(rest.len(), |(i, _)| i);
        if len == 0 {
            return Err(self.err("expected a number"));
        }
        self.pos += len;
        rest[..len].parse().map_err(|_| self.err("number out of range"))
    }

    /// Text up to the matching close parenthesis, which is consumed.
    fn until_close(&mut self) -> Result<&'a str> {
        let rest = &self.src[self.pos..];
        let end = rest.find(')').ok_or_else(|| self.err("unclosed '('"))?;
        self.pos += end + 1;
        Ok(&rest[..end])
    }

    fn finish(&mut self) -> Result<()> {
        if self.peek().is_some() {
            return Err(self.err("trailing input"));
        }
        Ok(())
    }
}

pub fn parse_bundle(src: &str, ring: &GrassmannProduct) -> Result<BundleExpr> {
    let mut cur = Cursor::new(src);
    let e = bundle(&mut cur, ring)?;
    cur.finish()?;
    e.validate(&ring.ranks())?;
    Ok(e)
}

fn bundle(cur: &mut Cursor, ring: &GrassmannProduct) -> Result<BundleExpr> {
    let name = cur.ident().ok_or_else(|| cur.err("expected a bundle"))?;
    cur.expect('(')?;
    let e = match name {
        "taut" => {
            let i = cur.number()?;
            let k = ring
                .factors()
                .get(i)
                .map(|f| f.0)
                .ok_or_else(|| Error::MalformedBundle(format!("taut({i}) on {ring}")))?;
            BundleExpr::taut(i, k)
        }
        "triv" => BundleExpr::trivial(cur.number()?),
        "dual" => bundle(cur, ring)?.dual(),
        "wedge" | "sym" => {
            let p = cur.number()?;
            cur.expect(',')?;
            let inner = bundle(cur, ring)?;
            if name == "wedge" {
                BundleExpr::wedge(p, inner)
            } else {
                BundleExpr::sym(p, inner)
            }
        }
        "sum" | "tensor" => {
            let mut acc = bundle(cur, ring)?;
            while cur.eat(',') {
                let next = bundle(cur, ring)?;
                acc = if name == "sum" { acc.sum(next) } else { acc.tensor(next) };
            }
            acc
        }
        other => return Err(cur.err(&format!("unknown bundle constructor {other:?}"))),
    };
    cur.expect(')')?;
    Ok(e)
}

pub fn parse_class(src: &str, ring: &GrassmannProduct) -> Result<SchubertClass> {
    let mut cur = Cursor::new(src);
    let c = class_sum(&mut cur, ring)?;
    cur.finish()?;
    Ok(c)
}

fn class_sum(cur: &mut Cursor, ring: &GrassmannProduct) -> Result<SchubertClass> {
    let negate = cur.eat('-');
    let mut acc = class_product(cur, ring)?;
    if negate {
        acc = acc.scale(&BigInt::from(-1));
    }
    loop {
        if cur.eat('+') {
            acc = acc.add(&class_product(cur, ring)?)?;
        } else if cur.eat('-') {
            acc = acc.sub(&class_product(cur, ring)?)?;
        } else {
            return Ok(acc);
        }
    }
}

fn class_product(cur: &mut Cursor, ring: &GrassmannProduct) -> Result<SchubertClass> {
    let mut acc = class_power(cur, ring)?;
    while cur.eat('*') {
        acc = acc.multiply(&class_power(cur, ring)?)?;
    }
    Ok(acc)
}

fn class_power(cur: &mut Cursor, ring: &GrassmannProduct) -> Result<SchubertClass> {
    let base = class_atom(cur, ring)?;
    if cur.eat('^') {
        let e = cur.number()?;
        return base.pow(e);
    }
    Ok(base)
}

fn class_atom(cur: &mut Cursor, ring: &GrassmannProduct) -> Result<SchubertClass> {
    match cur.peek() {
        Some('(') => {
            cur.expect('(')?;
            let inner = class_sum(cur, ring)?;
            cur.expect(')')?;
            Ok(inner)
        }
        Some(c) if c.is_ascii_digit() => {
            let n = cur.number()?;
            Ok(ring.unit().scale(&BigInt::from(n)))
        }
        _ => {
            let name = cur.ident().ok_or_else(|| cur.err("expected a class"))?;
            match name {
                "point" => Ok(ring.point_class()),
                "h" => {
                    if cur.eat('(') {
                        let i = cur.number()?;
                        cur.expect(')')?;
                        if i >= ring.num_factors() {
                            return Err(cur.err(&format!("factor {i} out of range")));
                        }
                        Ok(ring.hyperplane(i))
                    } else if ring.num_factors() == 1 {
                        Ok(ring.hyperplane(0))
                    } else {
                        Err(cur.err("h needs a factor index on a product"))
                    }
                }
                "sigma" => {
                    cur.expect('(')?;
                    let body = cur.until_close()?;
                    let slots: Vec<&str> = body.split(';').collect();
                    if slots.len() != ring.num_factors() {
                        return Err(Error::Parse(format!(
                            "sigma({body}) has {} slots, ring {ring} has {} factors",
                            slots.len(),
                            ring.num_factors()
                        )));
                    }
                    let key = slots.iter().map(|s| parse_partition(s)).collect::<Result<_>>()?;
                    Ok(ring.sigma(key))
                }
                "c" => {
                    cur.expect('(')?;
                    let d = cur.number()?;
                    cur.expect(',')?;
                    let e = bundle(cur, ring)?;
                    cur.expect(')')?;
                    e.validate(&ring.ranks())?;
                    ring.chern_class(&e, d)
                }
                other => Err(cur.err(&format!("unknown class atom {other:?}"))),
            }
        }
    }
}

/// `4321`, `10,2`, or empty / `0` for the empty partition.
pub fn parse_partition(s: &str) -> Result<Partition> {
    let s = s.trim();
    if s.is_empty() || s == "0" || s == "()" {
        return Ok(Partition::empty());
    }
    let parts: Vec<usize> = if s.contains(',') {
        s.split(',')
            .map(|p| p.trim().parse().map_err(|_| Error::Parse(format!("partition {s:?}"))))
            .collect::<Result<_>>()?
    } else {
        s.chars()
            .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::Parse(format!("partition {s:?}"))))
            .collect::<Result<_>>()?
    };
    Partition::new(parts)
}

/// Comma-separated integer weights, e.g. `1,1,0`.
pub fn parse_weights(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|w| w.trim().parse().map_err(|_| Error::Parse(format!("weights {s:?}"))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    #[test]
    fn bundles_round_trip() {
        let ring: GrassmannProduct = "G(2,4)^3".parse().unwrap();
        let e = parse_bundle("tensor(dual(taut(0)), dual(taut(1)), dual(taut(2)))", &ring).unwrap();
        assert_eq!(e.rank(), 8);
        assert_eq!(parse_bundle(&e.to_string(), &ring).unwrap(), e);
        let g59: GrassmannProduct = "G(5,9)".parse().unwrap();
        let w = parse_bundle("wedge(3,dual(taut(0)))", &g59).unwrap();
        assert_eq!(w.rank(), 10);
        assert_eq!(parse_bundle("sum(triv(2),sym(2,taut(0)))", &g59).unwrap().rank(), 17);
    }

    #[test]
    fn bundle_errors() {
        let ring: GrassmannProduct = "G(2,4)".parse().unwrap();
        assert!(parse_bundle("taut(1)", &ring).is_err());
        assert!(parse_bundle("wedge(2,taut(0)", &ring).is_err());
        assert!(parse_bundle("frob(taut(0))", &ring).is_err());
        assert!(parse_bundle("taut(0) x", &ring).is_err());
    }

    #[test]
    fn classes() {
        let g24: GrassmannProduct = "G(2,4)".parse().unwrap();
        assert_eq!(parse_class("h^4", &g24).unwrap().integrate().to_i64(), Some(2));
        assert_eq!(parse_class("sigma(2)*sigma(11)", &g24).unwrap().integrate().to_i64(), Some(0));
        assert_eq!(parse_class("2*point - (point)", &g24).unwrap(), g24.point_class());
        let cube: GrassmannProduct = "G(2,4)^3".parse().unwrap();
        let c = parse_class("sigma(1;;) + h(1)", &cube).unwrap();
        assert_eq!(c.terms().len(), 2);
        assert!(parse_class("sigma(1;)", &cube).is_err());
        assert!(parse_class("h", &cube).is_err());
        let g59: GrassmannProduct = "G(5,9)".parse().unwrap();
        let n = parse_class("c(10,wedge(2,dual(taut(0))))*c(10,wedge(3,dual(taut(0))))", &g59).unwrap();
        assert_eq!(n.integrate().to_i64(), Some(9));
    }

    #[test]
    fn partitions() {
        assert_eq!(parse_partition("4321").unwrap().parts(), &[4, 3, 2, 1]);
        assert_eq!(parse_partition("10,2").unwrap().parts(), &[10, 2]);
        assert!(parse_partition("").unwrap().is_empty());
        assert!(parse_partition("12a").is_err());
        assert!(parse_partition("13").is_err());
        assert_eq!(parse_weights("1, 1,0").unwrap(), vec![1, 1, 0]);
    }
}
