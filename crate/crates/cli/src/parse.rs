//! Text formats: polynomials, points, point-configuration files, lattice
//! classes and lattice matrix files.
//!
//! Polynomial grammar (whitespace is free between tokens):
//!
//! ```text
//! poly    := sign? term (sign term)*
//! term    := coeff ('*'? monomial)? | monomial
//! coeff   := int ('/' int)? | '(' '-'? int ('/' int)? ')'
//! monomial:= factor ('*'? factor)*
//! factor  := ('x' | 'y' | 'z') ('^' int)?
//! ```

use num_traits::Zero;
use thiserror::Error;

use cremona::exactpoly::{HPoly, Rat};
use cremona::picard::{DivClass, LatticeMatrix};
use cremona::projmaps::ProjPoint;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at offset {pos}: expected {expected}")]
    Syntax { pos: usize, expected: &'static str },
    #[error("inhomogeneous polynomial: term at offset {pos} has degree {found}, expected {expected}")]
    Inhomogeneous { pos: usize, expected: u32, found: u32 },
    #[error("empty input")]
    Empty,
    #[error("point has all coordinates zero")]
    ZeroPoint,
    #[error("line {line}: {source}")]
    Line {
        line: usize,
        #[source]
        source: Box<ParseError>,
    },
    #[error("matrix has {found} entries, rank {rank} needs {}", rank * rank)]
    MatrixShape { rank: usize, found: usize },
    #[error("not an integer: {0:?}")]
    Integer(String),
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor {
            src: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8, what: &'static str) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(what))
        }
    }

    fn error(&mut self, expected: &'static str) -> ParseError {
        self.skip_ws();
        ParseError::Syntax {
            pos: self.pos,
            expected,
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).expect("ascii"))
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    /// `int ('/' int)?` without a sign.
    fn unsigned_rat(&mut self) -> Result<Rat, ParseError> {
        let num = self.digits().ok_or_else(|| self.error("a number"))?;
        let mut text = num.to_string();
        if self.eat(b'/') {
            self.skip_ws();
            let at = self.pos;
            let den = self.digits().ok_or_else(|| self.error("a denominator"))?;
            if den.bytes().all(|b| b == b'0') {
                return Err(ParseError::Syntax {
                    pos: at,
                    expected: "a nonzero denominator",
                });
            }
            text.push('/');
            text.push_str(den);
        }
        Ok(text.parse().expect("digits form a rational"))
    }

    fn signed_rat(&mut self) -> Result<Rat, ParseError> {
        if self.eat(b'-') {
            Ok(-self.unsigned_rat()?)
        } else {
            self.eat(b'+');
            self.unsigned_rat()
        }
    }

    fn factor(&mut self) -> Option<Result<(usize, u32), ParseError>> {
        let var = match self.peek()? {
            b'x' => 0,
            b'y' => 1,
            b'z' => 2,
            _ => return None,
        };
        self.pos += 1;
        let mut exp = 1;
        if self.eat(b'^') {
            match self.digits().map(str::parse::<u32>) {
                Some(Ok(e)) => exp = e,
                _ => return Some(Err(self.error("an exponent"))),
            }
        }
        Some(Ok((var, exp)))
    }

    fn monomial(&mut self, exps: &mut [u32; 3]) -> Result<bool, ParseError> {
        let mut any = false;
        loop {
            let save = self.pos;
            let star = any && self.eat(b'*');
            match self.factor() {
                Some(f) => {
                    let (v, e) = f?;
                    exps[v] += e;
                    any = true;
                }
                None if star => return Err(self.error("a variable")),
                None => {
                    self.pos = save;
                    return Ok(any);
                }
            }
        }
    }

    fn term(&mut self) -> Result<(Rat, [u32; 3]), ParseError> {
        let mut exps = [0; 3];
        let coeff = match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let c = self.signed_rat()?;
                self.expect(b')', "')'")?;
                Some(c)
            }
            Some(c) if c.is_ascii_digit() => Some(self.unsigned_rat()?),
            _ => None,
        };
        match coeff {
            Some(c) => {
                let star = self.eat(b'*');
                if !self.monomial(&mut exps)? && star {
                    return Err(self.error("a variable"));
                }
                Ok((c, exps))
            }
            None => {
                if !self.monomial(&mut exps)? {
                    return Err(self.error("a coefficient or variable"));
                }
                Ok((Rat::from_integer(1.into()), exps))
            }
        }
    }
}

/// Parses a homogeneous polynomial in `x, y, z`. Coefficients are kept as
/// written; only the term order is normalized.
pub fn parse_poly(text: &str) -> Result<HPoly, ParseError> {
    let mut cur = Cursor::new(text);
    if cur.at_end() {
        return Err(ParseError::Empty);
    }
    let mut terms = Vec::new();
    let mut degree: Option<u32> = None;
    let mut first = true;
    while !cur.at_end() {
        let negative = if cur.eat(b'-') {
            true
        } else if cur.eat(b'+') || first {
            false
        } else {
            return Err(cur.error("'+' or '-'"));
        };
        first = false;
        cur.skip_ws();
        let pos = cur.pos;
        let (c, e) = cur.term()?;
        let d = e.iter().sum();
        match degree {
            None => degree = Some(d),
            Some(expected) if expected != d => {
                return Err(ParseError::Inhomogeneous {
                    pos,
                    expected,
                    found: d,
                })
            }
            _ => {}
        }
        terms.push((e, if negative { -c } else { c }));
    }
    let degree = degree.expect("at least one term");
    Ok(HPoly::from_terms(degree, terms).expect("degrees checked"))
}

/// Parses `(a:b:c)` with rational entries into the canonical representative.
pub fn parse_point(text: &str) -> Result<ProjPoint, ParseError> {
    let mut cur = Cursor::new(text);
    cur.expect(b'(', "'('")?;
    let a = cur.signed_rat()?;
    cur.expect(b':', "':'")?;
    let b = cur.signed_rat()?;
    cur.expect(b':', "':'")?;
    let c = cur.signed_rat()?;
    cur.expect(b')', "')'")?;
    if !cur.at_end() {
        return Err(cur.error("end of input"));
    }
    if a.is_zero() && b.is_zero() && c.is_zero() {
        return Err(ParseError::ZeroPoint);
    }
    Ok(ProjPoint::new([a, b, c]).expect("nonzero"))
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

/// One `(a:b:c)` per line; `#` starts a comment.
pub fn parse_points_file(text: &str) -> Result<Vec<ProjPoint>, ParseError> {
    content_lines(text)
        .map(|(line, l)| {
            parse_point(l).map_err(|e| ParseError::Line {
                line,
                source: Box::new(e),
            })
        })
        .collect()
}

fn integer(tok: &str) -> Result<i64, ParseError> {
    tok.parse().map_err(|_| ParseError::Integer(tok.to_string()))
}

/// First line is the rank, then the entries in row-major order.
pub fn parse_matrix_file(text: &str) -> Result<LatticeMatrix, ParseError> {
    let mut lines = content_lines(text);
    let (_, head) = lines.next().ok_or(ParseError::Empty)?;
    let rank = integer(head)?;
    let rank = usize::try_from(rank).map_err(|_| ParseError::Integer(head.to_string()))?;
    let entries = lines
        .flat_map(|(_, l)| l.split_whitespace())
        .map(integer)
        .collect::<Result<Vec<_>, _>>()?;
    if entries.len() != rank * rank {
        return Err(ParseError::MatrixShape {
            rank,
            found: entries.len(),
        });
    }
    Ok(LatticeMatrix(
        entries.chunks(rank.max(1)).map(<[i64]>::to_vec).collect(),
    ))
}

/// `(a, b, ...)` or bare comma-separated integers.
pub fn parse_class(text: &str) -> Result<DivClass, ParseError> {
    let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
    if inner.trim().is_empty() {
        return Err(ParseError::Empty);
    }
    Ok(DivClass(
        inner.split(',').map(|t| integer(t.trim())).collect::<Result<_, _>>()?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n.into(), d.into())
    }

    #[test]
    fn conic() {
        let q = parse_poly("x*z - y^2").unwrap();
        assert_eq!(q.degree(), 2);
        assert_eq!(q.coeff([1, 0, 1]), r(1, 1));
        assert_eq!(q.coeff([0, 2, 0]), r(-1, 1));
    }

    #[test]
    fn implicit_products_and_fractions() {
        let f = parse_poly("3x^2y - 1/2z^3").unwrap();
        assert_eq!(f.degree(), 3);
        assert_eq!(f.num_terms(), 2);
        assert_eq!(f.coeff([2, 1, 0]), r(3, 1));
        assert_eq!(f.coeff([0, 0, 3]), r(-1, 2));
        assert_eq!(parse_poly("(-3/4)*x*y").unwrap().coeff([1, 1, 0]), r(-3, 4));
        assert_eq!(parse_poly("x y").unwrap(), parse_poly("x*y").unwrap());
    }

    #[test]
    fn inhomogeneous_rejected() {
        assert_eq!(
            parse_poly("x + y^2"),
            Err(ParseError::Inhomogeneous {
                pos: 4,
                expected: 1,
                found: 2
            })
        );
    }

    #[test]
    fn syntax_errors_carry_position() {
        assert_eq!(
            parse_poly("x*y +"),
            Err(ParseError::Syntax {
                pos: 5,
                expected: "a coefficient or variable"
            })
        );
        assert!(matches!(parse_poly("x*w"), Err(ParseError::Syntax { pos: 2, .. })));
        assert!(matches!(parse_poly("x y z)"), Err(ParseError::Syntax { pos: 5, .. })));
        assert!(matches!(parse_poly("3/0 x"), Err(ParseError::Syntax { pos: 2, .. })));
        assert_eq!(parse_poly("  "), Err(ParseError::Empty));
    }

    #[test]
    fn points() {
        assert_eq!(parse_point("(0:1:0)").unwrap(), ProjPoint::from_ints(0, 1, 0).unwrap());
        assert_eq!(parse_point("(2:4:6)").unwrap(), ProjPoint::from_ints(1, 2, 3).unwrap());
        assert_eq!(
            parse_point("( 1/2 : -1 : 0 )").unwrap(),
            ProjPoint::from_ints(1, -2, 0).unwrap()
        );
        assert_eq!(parse_point("(0:0:0)"), Err(ParseError::ZeroPoint));
        assert!(matches!(parse_point("(1:2)"), Err(ParseError::Syntax { .. })));
    }

    #[test]
    fn files() {
        let pts = parse_points_file("# config\n(1:0:0)\n\n(0:1:0) # second\n").unwrap();
        assert_eq!(pts.len(), 2);
        assert!(matches!(
            parse_points_file("(1:0:0)\n(1:0)\n"),
            Err(ParseError::Line { line: 2, .. })
        ));
        let m = parse_matrix_file("2\n0 1\n1 0\n").unwrap();
        assert_eq!(m.0, vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(
            parse_matrix_file("2\n0 1 1\n"),
            Err(ParseError::MatrixShape { rank: 2, found: 3 })
        );
        assert_eq!(parse_class("(1, -1, 0)").unwrap(), DivClass(vec![1, -1, 0]));
    }
}
