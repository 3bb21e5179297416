//! Recursive-descent parser for representation expressions.
//!
//! ```text
//! expr    ::= 'triv' | factor (('x' | '×') factor)*
//! factor  ::= 'chi'    '(' n, eps, z ')'
//!           | 'stein'  '(' m, s [';' eps, t] ')'
//!           | 'speh'   '(' m, k [';' t] ')'
//!           | 'spehcs' '(' m, k, s [';' t] ')'
//! arg     ::= [name '='] value
//! ```
//!
//! Twist parameters after `;` default to zero. Any argument may be given
//! by name (`spehcs(2,k=3,s=1/4)`).

use num_traits::Zero;

use super::{BasicRep, Field, RepExpr};
use crate::error::{Error, Result};
use crate::scalar::{parse_rational, ExactComplex, Rational};

struct Arg<'a> {
    name: Option<&'a str>,
    value: &'a str,
    pos: usize,
    vpos: usize,
    twist: bool,
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        let rest = &self.text[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn at_end(&self) -> bool {
        self.pos >= self.text.len()
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn ident(&mut self) -> &'a str {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if c.is_ascii_alphabetic() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
        &self.text[start..self.pos]
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        match self.peek() {
            Some(found) if found == c => {
                self.pos += c.len_utf8();
                Ok(())
            }
            Some(found) => Err(Error::parse(self.pos, format!("expected '{c}', found '{found}'"))),
            None => Err(Error::parse(
                self.pos,
                format!("expected '{c}', found end of input"),
            )),
        }
    }

    /// Reads the comma/semicolon separated arguments up to the closing paren.
    fn args(&mut self) -> Result<Vec<Arg<'a>>> {
        let open = self.pos;
        let close = self.text[open..]
            .find(')')
            .map(|i| open + i)
            .ok_or_else(|| Error::parse(self.text.len(), "missing closing ')'"))?;
        if let Some(i) = self.text[open..close].find('(') {
            return Err(Error::parse(open + i, "nested parentheses are not allowed"));
        }
        let mut out = Vec::new();
        let mut twist = false;
        let mut start = open;
        let body = &self.text[open..close];
        let mut pieces: Vec<(usize, usize, bool)> = Vec::new();
        for (i, c) in body.char_indices() {
            if c == ',' || c == ';' {
                pieces.push((start, open + i, twist));
                if c == ';' {
                    if twist {
                        return Err(Error::parse(open + i, "more than one ';' in argument list"));
                    }
                    twist = true;
                }
                start = open + i + 1;
            }
        }
        pieces.push((start, close, twist));
        for (s, e, tw) in pieces {
            let raw = &self.text[s..e];
            let lead = raw.len() - raw.trim_start().len();
            let raw_trim = raw.trim();
            if raw_trim.is_empty() {
                if out.is_empty() && e == close && s == open {
                    break;
                }
                return Err(Error::parse(s + lead, "empty argument"));
            }
            let (name, value, vpos) = match raw_trim.split_once('=') {
                Some((n, v)) => {
                    let n = n.trim();
                    if n.is_empty() || !n.chars().all(|c| c.is_ascii_alphabetic()) {
                        return Err(Error::parse(s + lead, format!("bad argument name '{n}'")));
                    }
                    let vpos = s + lead + raw_trim.find('=').unwrap_or(0) + 1;
                    (Some(n), v, vpos)
                }
                None => (None, raw_trim, s + lead),
            };
            out.push(Arg {
                name,
                value,
                pos: s + lead,
                vpos,
                twist: tw,
            });
        }
        self.pos = close + 1;
        Ok(out)
    }
}

/// Parameter slots of one factor family.
struct Signature {
    main: &'static [&'static str],
    twist: &'static [&'static str],
}

fn signature(kind: &str) -> Option<Signature> {
    Some(match kind {
        "chi" => Signature {
            main: &["n", "eps", "z"],
            twist: &[],
        },
        "stein" => Signature {
            main: &["m", "s"],
            twist: &["eps", "t"],
        },
        "speh" => Signature {
            main: &["m", "k"],
            twist: &["t"],
        },
        "spehcs" => Signature {
            main: &["m", "k", "s"],
            twist: &["t"],
        },
        _ => return None,
    })
}

struct Slots<'a> {
    names: Vec<&'static str>,
    values: Vec<Option<(&'a str, usize)>>,
}

impl<'a> Slots<'a> {
    fn get(&self, name: &str) -> Option<(&'a str, usize)> {
        let idx = self.names.iter().position(|n| *n == name)?;
        self.values[idx]
    }

    fn required(&self, name: &str, kind: &str, at: usize) -> Result<(&'a str, usize)> {
        self.get(name)
            .ok_or_else(|| Error::parse(at, format!("{kind}: missing parameter '{name}'")))
    }
}

fn assign<'a>(kind: &str, sig: &Signature, args: Vec<Arg<'a>>) -> Result<Slots<'a>> {
    let names: Vec<&'static str> = sig.main.iter().chain(sig.twist).copied().collect();
    let mut values: Vec<Option<(&'a str, usize)>> = vec![None; names.len()];
    let (mut next_main, mut next_twist) = (0usize, sig.main.len());
    for arg in args {
        let idx = match arg.name {
            Some(n) => names
                .iter()
                .position(|x| *x == n)
                .ok_or_else(|| Error::parse(arg.pos, format!("{kind} has no parameter named '{n}'")))?,
            None if arg.twist => {
                let i = next_twist;
                next_twist += 1;
                if i >= names.len() {
                    return Err(Error::parse(
                        arg.pos,
                        format!("too many twist arguments for {kind}"),
                    ));
                }
                i
            }
            None => {
                let i = next_main;
                next_main += 1;
                if i >= sig.main.len() {
                    let hint = if sig.twist.is_empty() {
                        ""
                    } else {
                        " (twist parameters follow ';')"
                    };
                    return Err(Error::parse(
                        arg.pos,
                        format!("too many arguments for {kind}{hint}"),
                    ));
                }
                i
            }
        };
        if values[idx].is_some() {
            return Err(Error::parse(
                arg.pos,
                format!("{kind}: '{}' given twice", names[idx]),
            ));
        }
        values[idx] = Some((arg.value, arg.vpos));
    }
    Ok(Slots { names, values })
}

fn uint(v: (&str, usize)) -> Result<usize> {
    let (text, pos) = v;
    text.trim().parse::<usize>().map_err(|_| {
        Error::parse(
            pos,
            format!("expected a non-negative integer, found '{}'", text.trim()),
        )
    })
}

fn sint(v: (&str, usize)) -> Result<i64> {
    let (text, pos) = v;
    text.trim()
        .parse::<i64>()
        .map_err(|_| Error::parse(pos, format!("expected an integer, found '{}'", text.trim())))
}

fn rational(v: (&str, usize)) -> Result<Rational> {
    parse_rational(v.0, v.1)
}

fn rational_or_zero(v: Option<(&str, usize)>) -> Result<Rational> {
    v.map(rational)
        .transpose()
        .map(|r| r.unwrap_or_else(Rational::zero))
}

fn build(kind: &str, slots: &Slots<'_>, at: usize) -> Result<BasicRep> {
    let req = |name: &str| slots.required(name, kind, at);
    Ok(match kind {
        "chi" => {
            let (z, zpos) = req("z")?;
            BasicRep::chi(
                uint(req("n")?)?,
                sint(req("eps")?)?,
                ExactComplex::parse_at(z, zpos)?,
            )
        }
        "stein" => BasicRep::stein(
            uint(req("m")?)?,
            rational(req("s")?)?,
            slots.get("eps").map(sint).transpose()?.unwrap_or(0),
            rational_or_zero(slots.get("t"))?,
        ),
        "speh" => BasicRep::speh(
            uint(req("m")?)?,
            uint(req("k")?)?,
            rational_or_zero(slots.get("t"))?,
        ),
        "spehcs" => BasicRep::spehcs(
            uint(req("m")?)?,
            uint(req("k")?)?,
            rational(req("s")?)?,
            rational_or_zero(slots.get("t"))?,
        ),
        _ => unreachable!("signature() gates the kinds"),
    })
}

/// Parses an expression over `field`. Parameter ranges are not checked
/// here; see [`RepExpr::validate`].
pub fn parse_expr(text: &str, field: Field) -> Result<RepExpr> {
    let mut cur = Cursor { text, pos: 0 };
    cur.skip_ws();
    if cur.at_end() {
        return Err(Error::parse(
            0,
            "empty expression (write 'triv' for the trivial representation of G_0)",
        ));
    }
    let mut factors = Vec::new();
    loop {
        cur.skip_ws();
        let at = cur.pos;
        let name = cur.ident();
        if name.is_empty() {
            let found = cur
                .peek()
                .map_or("end of input".to_string(), |c| format!("'{c}'"));
            return Err(Error::parse(at, format!("expected a factor name, found {found}")));
        }
        if name == "triv" && factors.is_empty() {
            cur.skip_ws();
            if !cur.at_end() {
                return Err(Error::parse(cur.pos, "'triv' must stand alone"));
            }
            return Ok(RepExpr::trivial(field));
        }
        let sig = signature(name).ok_or_else(|| {
            Error::parse(
                at,
                format!("unknown factor '{name}' (expected chi, stein, speh or spehcs)"),
            )
        })?;
        cur.expect('(')?;
        let args = cur.args()?;
        let slots = assign(name, &sig, args)?;
        factors.push(build(name, &slots, at)?);
        cur.skip_ws();
        match cur.peek() {
            None => break,
            Some('x') | Some('×') => {
                let c = cur.peek().unwrap_or('x');
                cur.pos += c.len_utf8();
            }
            Some(c) => {
                return Err(Error::parse(
                    cur.pos,
                    format!("expected 'x' between factors, found '{c}'"),
                ))
            }
        }
    }
    Ok(RepExpr::new(field, factors))
}
