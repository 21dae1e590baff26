//! Text input for parametrizations and implicit polynomials.
//!
//! ```text
//! ratfun := group [ "/" group ]
//! group  := "(" poly ")" | poly
//! poly   := [ "+" | "-" ] term { ( "+" | "-" ) term }
//! term   := coef [ "*" mono ] | mono
//! mono   := var [ "^" exp ] { "*" var [ "^" exp ] }
//! coef   := int [ "/" int ]
//! ```
//!
//! A `/` directly between two integers is a rational literal, so `1/2*t` is
//! one term while `t/2` divides the numerator `t` by the denominator `2`.
//! Whitespace is ignored everywhere.

use std::collections::BTreeMap;

use implicit_core::{BiPoly, Rat, UniPoly};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at column {}: {msg}", .pos + 1)]
pub struct ParseError {
    /// Zero-based character offset into the input.
    pub pos: usize,
    pub msg: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(String),
    Var(char),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Int(chars[start..i].iter().collect()), start));
                continue;
            }
            'a'..='z' => Tok::Var(c),
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => {
                return Err(ParseError {
                    pos: i,
                    msg: format!("unexpected character `{other}`"),
                })
            }
        };
        out.push((tok, i));
        i += 1;
    }
    out.push((Tok::End, chars.len()));
    Ok(out)
}

/// Sparse polynomial: exponent vector (one entry per variable) to coefficient.
type Terms = BTreeMap<Vec<usize>, Rat>;

struct Parser<'v> {
    toks: Vec<(Tok, usize)>,
    at: usize,
    vars: &'v [char],
}

impl<'v> Parser<'v> {
    fn new(text: &str, vars: &'v [char]) -> Result<Self, ParseError> {
        Ok(Parser {
            toks: tokenize(text)?,
            at: 0,
            vars,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn peek2(&self) -> &Tok {
        &self.toks[(self.at + 1).min(self.toks.len() - 1)].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.error(format!("expected {what}"))
        }
    }

    fn integer(&mut self) -> Result<String, ParseError> {
        match self.bump() {
            Tok::Int(s) => Ok(s),
            _ => {
                self.at -= 1;
                self.error("expected an integer")
            }
        }
    }

    fn coef(&mut self) -> Result<Rat, ParseError> {
        let num = self.integer()?;
        let num: Rat = num.parse().expect("digits");
        if *self.peek() == Tok::Slash && matches!(self.peek2(), Tok::Int(_)) {
            self.bump();
            let pos = self.pos();
            let den: Rat = self.integer()?.parse().expect("digits");
            if den == Rat::from_integer(0.into()) {
                return Err(ParseError {
                    pos,
                    msg: "zero denominator in rational literal".into(),
                });
            }
            return Ok(num / den);
        }
        Ok(num)
    }

    fn mono(&mut self) -> Result<Vec<usize>, ParseError> {
        let mut exps = vec![0; self.vars.len()];
        loop {
            let Tok::Var(v) = *self.peek() else {
                return self.error("expected a variable");
            };
            let Some(slot) = self.vars.iter().position(|&c| c == v) else {
                let allowed: String = self.vars.iter().collect();
                return self.error(format!(
                    "unknown variable `{v}` (expected one of `{allowed}`)"
                ));
            };
            self.bump();
            let mut e = 1;
            if *self.peek() == Tok::Caret {
                self.bump();
                let pos = self.pos();
                e = self.integer()?.parse().map_err(|_| ParseError {
                    pos,
                    msg: "exponent too large".into(),
                })?;
            }
            exps[slot] += e;
            if *self.peek() == Tok::Star && matches!(self.peek2(), Tok::Var(_)) {
                self.bump();
            } else {
                return Ok(exps);
            }
        }
    }

    fn term(&mut self) -> Result<(Vec<usize>, Rat), ParseError> {
        match self.peek() {
            Tok::Int(_) => {
                let c = self.coef()?;
                if *self.peek() == Tok::Star {
                    self.bump();
                    Ok((self.mono()?, c))
                } else {
                    Ok((vec![0; self.vars.len()], c))
                }
            }
            Tok::Var(_) => Ok((self.mono()?, Rat::from_integer(1.into()))),
            _ => self.error("expected a coefficient or a variable"),
        }
    }

    fn poly(&mut self) -> Result<Terms, ParseError> {
        let mut terms = Terms::new();
        let mut negate = match self.peek() {
            Tok::Minus => {
                self.bump();
                true
            }
            Tok::Plus => {
                self.bump();
                false
            }
            _ => false,
        };
        loop {
            let (exps, c) = self.term()?;
            let c = if negate { -c } else { c };
            *terms.entry(exps).or_default() += c;
            match self.peek() {
                Tok::Plus => negate = false,
                Tok::Minus => negate = true,
                _ => return Ok(terms),
            }
            self.bump();
        }
    }

    fn group(&mut self) -> Result<Terms, ParseError> {
        if *self.peek() == Tok::LParen {
            self.bump();
            let p = self.poly()?;
            self.expect(Tok::RParen, "`)`")?;
            Ok(p)
        } else {
            self.poly()
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        if *self.peek() == Tok::End {
            Ok(())
        } else {
            self.error("unexpected trailing input")
        }
    }
}

fn to_unipoly(terms: &Terms) -> UniPoly {
    let deg = terms.keys().map(|e| e[0]).max().unwrap_or(0);
    let mut coeffs = vec![Rat::default(); deg + 1];
    for (e, c) in terms {
        coeffs[e[0]] += c;
    }
    UniPoly::from_coeffs(coeffs)
}

/// Parse `x(t)` or `y(t)` into a numerator/denominator pair in lowest terms.
pub fn parse_rational_function(text: &str) -> Result<(UniPoly, UniPoly), ParseError> {
    let mut p = Parser::new(text, &['t'])?;
    let num = to_unipoly(&p.group()?);
    let den_pos = p.pos();
    let den = if *p.peek() == Tok::Slash {
        p.bump();
        to_unipoly(&p.group()?)
    } else {
        UniPoly::one()
    };
    p.finish()?;
    if den.is_zero() {
        return Err(ParseError {
            pos: den_pos,
            msg: "denominator is the zero polynomial".into(),
        });
    }
    let g = num.gcd(&den).expect("denominator is nonzero");
    if g.degree() == Some(0) {
        return Ok((num, den));
    }
    let (num, _) = num.div_rem(&g).expect("nonzero divisor");
    let (den, _) = den.div_rem(&g).expect("nonzero divisor");
    Ok((num, den))
}

/// Parse a polynomial in `x` and `y` in the form printed by [`BiPoly::render`].
pub fn parse_bipoly(text: &str) -> Result<BiPoly, ParseError> {
    let mut p = Parser::new(text, &['x', 'y'])?;
    let terms = p.poly()?;
    p.finish()?;
    let m = terms.keys().map(|e| e[0]).max().unwrap_or(0);
    let n = terms.keys().map(|e| e[1]).max().unwrap_or(0);
    let mut grid = vec![vec![Rat::default(); n + 1]; m + 1];
    for (e, c) in terms {
        grid[e[0]][e[1]] += c;
    }
    Ok(BiPoly::from_grid(grid).expect("rectangular grid"))
}

/// Inverse of [`parse_rational_function`] for pairs already in lowest terms.
pub fn render_rational_function(num: &UniPoly, den: &UniPoly) -> String {
    format!("({})/({})", num.render("t"), den.render("t"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use implicit_core::rat::{frac, int};

    fn uni(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn example_inputs() {
        assert_eq!(
            parse_rational_function("(1+t)/(2+t)").unwrap(),
            (uni(&[1, 1]), uni(&[2, 1]))
        );
        assert_eq!(
            parse_rational_function("t^2").unwrap(),
            (uni(&[0, 0, 1]), uni(&[1]))
        );
        assert_eq!(
            parse_rational_function("(2*t^2+2*t+1)/(t^3+5)").unwrap(),
            (uni(&[1, 2, 2]), uni(&[5, 0, 0, 1]))
        );
        assert_eq!(
            parse_rational_function("(t^3 - 3*t^2 + t - 1) / (t^2 - 3)").unwrap(),
            (uni(&[-1, 1, -3, 1]), uni(&[-3, 0, 1]))
        );
    }

    #[test]
    fn rational_literals_and_bare_division() {
        let (n, d) = parse_rational_function("1/2*t - 3/4").unwrap();
        assert_eq!(n, UniPoly::from_coeffs(vec![frac(-3, 4), frac(1, 2)]));
        assert_eq!(d, uni(&[1]));
        assert_eq!(
            parse_rational_function("t/2").unwrap(),
            (uni(&[0, 1]), uni(&[2]))
        );
        assert_eq!(
            parse_rational_function("1 + t / 3 + t").unwrap(),
            (uni(&[1, 1]), uni(&[3, 1]))
        );
    }

    #[test]
    fn common_factors_are_cancelled() {
        let (n, d) = parse_rational_function("(t^2-1)/(t-1)").unwrap();
        assert_eq!((n, d), (uni(&[1, 1]), uni(&[1])));
    }

    #[test]
    fn like_terms_combine() {
        assert_eq!(
            parse_rational_function("t + t - 2*t + 1").unwrap().0,
            uni(&[1])
        );
        assert_eq!(parse_rational_function("t*t").unwrap().0, uni(&[0, 0, 1]));
    }

    #[test]
    fn errors_report_positions() {
        let e = parse_rational_function("(1+t)/(t-t)").unwrap_err();
        assert!(e.msg.contains("zero polynomial"), "{e}");
        let e = parse_rational_function("1 + 2t").unwrap_err();
        assert_eq!(e.pos, 5);
        let e = parse_rational_function("(1+t").unwrap_err();
        assert_eq!(e.pos, 4);
        let e = parse_rational_function("1 + s").unwrap_err();
        assert!(e.msg.contains("unknown variable"));
        let e = parse_rational_function("3/0*t").unwrap_err();
        assert_eq!(e.pos, 2);
        assert!(parse_rational_function("").is_err());
        assert!(parse_rational_function("t^").is_err());
        assert!(parse_rational_function("t # 1").is_err());
    }

    #[test]
    fn bivariate_human_form() {
        let f = parse_bipoly("2 - 3*y - x + 2*x*y").unwrap();
        assert_eq!(f, BiPoly::from_ints(1, 1, &[2, -3, -1, 2]).unwrap());
        let g = parse_bipoly("y - x^2").unwrap();
        assert_eq!(g.render(), "y - x^2");
        let h = parse_bipoly("1/2*x*y^2 + y*x").unwrap();
        assert_eq!(*h.coeff(1, 2), frac(1, 2));
        assert_eq!(*h.coeff(1, 1), int(1));
        assert!(parse_bipoly("x + t").is_err());
    }
}
