//! Recursive-descent parser for the domain language
//!
//! ```text
//! domain   := base ( '-' removal )*
//! base     := 'disk' '(' number ')' | 'plane'
//! removal  := 'punct' '(' complex ')'
//!           | 'slit' '(' number ',' number [ ',' 'angle' '=' number ] ')'
//! complex  := number [ ('+'|'-') number 'i' ] | number 'i'
//! ```
//!
//! Whitespace is ignored between tokens. `slit(inner, R)` runs along the
//! positive real axis, `slit(-R, -inner)` along the negative one and
//! `angle=θ` (radians) rotates the first form.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{Boundary, DomainSpec};
use crate::{Complex, Error, Result};

pub fn parse_domain(text: &str) -> Result<DomainSpec> {
    let mut p = Parser::new(text);
    let spec = p.domain()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.syntax("unexpected trailing input"));
    }
    Ok(spec)
}

/// Parses `x`, `x+yi`, `x-yi` or `yi`.
pub fn parse_complex(text: &str) -> Result<Complex> {
    let mut p = Parser::new(text);
    let z = p.complex()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.syntax("unexpected trailing input"));
    }
    Ok(z)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

enum Removal {
    Puncture(Complex),
    Slit { direction: Complex, inner: f64, outer: f64 },
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Self { src, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.as_bytes().get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b) if b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn syntax(&self, message: impl Into<String>) -> Error {
        Error::Syntax { position: self.pos, message: message.into() }
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.syntax(format!("expected `{token}`")))
        }
    }

    fn number(&mut self) -> Result<f64> {
        self.skip_ws();
        let start = self.pos;
        let bytes = self.src.as_bytes();
        let mut end = start;
        if matches!(bytes.get(end), Some(b'+' | b'-')) {
            end += 1;
        }
        let digits_start = end;
        while matches!(bytes.get(end), Some(b) if b.is_ascii_digit()) {
            end += 1;
        }
        if bytes.get(end) == Some(&b'.') {
            end += 1;
            while matches!(bytes.get(end), Some(b) if b.is_ascii_digit()) {
                end += 1;
            }
        }
        if end == digits_start || (end == digits_start + 1 && bytes[digits_start] == b'.') {
            return Err(self.syntax("expected a number"));
        }
        if matches!(bytes.get(end), Some(b'e' | b'E')) {
            let mut exp = end + 1;
            if matches!(bytes.get(exp), Some(b'+' | b'-')) {
                exp += 1;
            }
            if matches!(bytes.get(exp), Some(b) if b.is_ascii_digit()) {
                while matches!(bytes.get(exp), Some(b) if b.is_ascii_digit()) {
                    exp += 1;
                }
                end = exp;
            }
        }
        let value: f64 = self.src[start..end].parse().map_err(|_| self.syntax("malformed number"))?;
        if !value.is_finite() {
            return Err(self.syntax("number out of range"));
        }
        self.pos = end;
        Ok(value)
    }

    fn complex(&mut self) -> Result<Complex> {
        let first = self.number()?;
        if self.eat("i") {
            return Ok(Complex::new(0.0, first));
        }
        self.skip_ws();
        let save = self.pos;
        if let Some(sign @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let magnitude = self.number()?;
            let im = if sign == b'-' { -magnitude } else { magnitude };
            if self.eat("i") {
                return Ok(Complex::new(first, im));
            }
            self.pos = save;
            return Err(self.syntax("expected an imaginary part ending in `i`"));
        }
        Ok(Complex::new(first, 0.0))
    }

    fn domain(&mut self) -> Result<DomainSpec> {
        self.skip_ws();
        let boundary = if self.eat("disk") {
            self.expect("(")?;
            let at = self.pos;
            let radius = self.number()?;
            self.expect(")")?;
            if !(radius > 0.0) {
                return Err(Error::Semantic { position: at, message: "disk radius must be positive".to_string() });
            }
            Boundary::Disk { radius }
        } else if self.eat("plane") {
            Boundary::Plane
        } else {
            return Err(self.syntax("expected `disk(R)` or `plane`"));
        };

        let mut punctures = Vec::new();
        let mut slits = Vec::new();
        let mut last_position = 0;
        while self.eat("-") {
            self.skip_ws();
            let at = self.pos;
            last_position = at;
            match self.removal()? {
                Removal::Puncture(p) => {
                    if let Boundary::Disk { radius } = boundary {
                        if p.norm() >= radius {
                            return Err(Error::Semantic {
                                position: at,
                                message: format!("puncture {p} is not inside the disk of radius {radius}"),
                            });
                        }
                    }
                    punctures.push(p);
                }
                Removal::Slit { direction, inner, outer } => {
                    let Boundary::Disk { radius } = boundary else {
                        return Err(Error::Semantic {
                            position: at,
                            message: "slits are only defined inside a disk".to_string(),
                        });
                    };
                    if (outer - radius).abs() > 1e-12 * radius {
                        return Err(Error::Semantic {
                            position: at,
                            message: format!("slit must reach the boundary: outer end {outer} ≠ R = {radius}"),
                        });
                    }
                    if !(inner > 0.0 && inner < radius) {
                        return Err(Error::Semantic {
                            position: at,
                            message: format!("slit inner endpoint {inner} must lie in (0, {radius})"),
                        });
                    }
                    slits.push((direction, inner));
                }
            }
        }
        DomainSpec::new(boundary, punctures, slits).map_err(|e| match e {
            Error::Domain(message) => Error::Semantic { position: last_position, message },
            other => other,
        })
    }

    fn removal(&mut self) -> Result<Removal> {
        if self.eat("punct") {
            self.expect("(")?;
            let p = self.complex()?;
            self.expect(")")?;
            Ok(Removal::Puncture(p))
        } else if self.eat("slit") {
            self.expect("(")?;
            let at = self.pos;
            let a = self.number()?;
            self.expect(",")?;
            let b = self.number()?;
            let angle = if self.eat(",") {
                self.expect("angle")?;
                self.expect("=")?;
                Some(self.number()?)
            } else {
                None
            };
            self.expect(")")?;
            let rotation = match angle {
                Some(theta) => Complex::new(libm::cos(theta), libm::sin(theta)),
                None => Complex::new(1.0, 0.0),
            };
            if a >= 0.0 && b > a {
                Ok(Removal::Slit { direction: rotation, inner: a, outer: b })
            } else if a < 0.0 && b < 0.0 && a < b {
                Ok(Removal::Slit { direction: -rotation, inner: -b, outer: -a })
            } else {
                Err(Error::Semantic {
                    position: at,
                    message: format!("slit({a}, {b}) is neither `slit(inner, R)` nor `slit(-R, -inner)`"),
                })
            }
        } else {
            Err(self.syntax("expected `punct(...)` or `slit(...)`"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::family;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    #[test]
    fn parses_the_examples() {
        assert_eq!(parse_domain("disk(1)").unwrap(), DomainSpec::unit_disk());
        assert_eq!(parse_domain("disk(1) - slit(0.5, 1)").unwrap(), family::slit_right(0.5).unwrap());
        assert_eq!(parse_domain("disk(1)-slit(-1,-0.5)").unwrap(), family::slit_left(0.5).unwrap());
        let pair = parse_domain("disk(1) - punct(0.1) - punct(-0.1)").unwrap();
        assert_eq!(pair.punctures(), &[c(-0.1, 0.0), c(0.1, 0.0)]);
    }

    #[test]
    fn complex_literals() {
        assert_eq!(parse_complex("0.3").unwrap(), c(0.3, 0.0));
        assert_eq!(parse_complex("0.1+0.2i").unwrap(), c(0.1, 0.2));
        assert_eq!(parse_complex(" 0.1 - 0.2i ").unwrap(), c(0.1, -0.2));
        assert_eq!(parse_complex("-0.5i").unwrap(), c(0.0, -0.5));
        assert_eq!(parse_complex("1e-3-2E+0i").unwrap(), c(1e-3, -2.0));
        assert!(parse_complex("0.1+").is_err());
        assert!(parse_complex("abc").is_err());
    }

    #[test]
    fn angled_slits() {
        let d = parse_domain("disk(2) - slit(0.5, 2, angle=1.5707963267948966)").unwrap();
        assert_eq!(d.slits()[0].direction(), c(0.0, 1.0));
        let left = parse_domain("disk(1) - slit(0.5, 1, angle=3.141592653589793)").unwrap();
        assert_eq!(left, family::slit_left(0.5).unwrap());
    }

    #[test]
    fn plane_with_punctures() {
        let d = parse_domain("plane - punct(-1) - punct(1)").unwrap();
        assert_eq!(d.punctures(), &[c(-1.0, 0.0), c(1.0, 0.0)]);
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse_domain("disk(1) - hole(0.5)") {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 10),
            other => panic!("unexpected {other:?}"),
        }
        match parse_domain("disk(1") {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 6),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_domain("disk(1) junk"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_domain(""), Err(Error::Syntax { position: 0, .. })));
    }

    #[test]
    fn semantic_errors() {
        assert!(matches!(parse_domain("disk(1) - punct(1.5)"), Err(Error::Semantic { position: 10, .. })));
        assert!(matches!(parse_domain("disk(1) - slit(0.5, 0.9)"), Err(Error::Semantic { .. })));
        assert!(matches!(parse_domain("disk(1) - slit(0.5, 0.2)"), Err(Error::Semantic { .. })));
        assert!(matches!(parse_domain("plane - slit(0.5, 1)"), Err(Error::Semantic { .. })));
        assert!(matches!(parse_domain("plane - punct(1)"), Err(Error::Semantic { .. })));
        assert!(matches!(parse_domain("disk(0)"), Err(Error::Semantic { .. })));
    }

    #[test]
    fn mixed_specs_parse() {
        let d = parse_domain("disk(1) - punct(0.2i) - slit(0.5, 1)").unwrap();
        assert_eq!(d.kind(), crate::domain::DomainKind::DiskMinusPuncturesAndSlits);
    }
}
