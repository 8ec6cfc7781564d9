use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::{needs_mult_set, ElemLit, MultDef, Query, Ref, Script, ScriptError, SemiringDef, Stmt, StmtKind, CHECK_PREDICATES};
use crate::semiring::Poly;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Num(BigUint),
    Sym(&'static str),
    Newline,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("'{s}'"),
            Tok::Num(n) => format!("'{n}'"),
            Tok::Sym(s) => format!("'{s}'"),
            Tok::Newline => "end of line".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

const SYMBOLS: [&str; 13] = ["<=", "=", "(", ")", "<", ">", ",", "{", "}", "[", "]", "+", "^"];

const RESERVED: [&str; 3] = ["in", "odds", "table"];

/// Splits the source into tokens. Newlines inside braces are dropped, so a
/// table body may span several lines.
fn lex(src: &str) -> Result<Vec<Token>, ScriptError> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    for (ln, text) in src.lines().enumerate() {
        let line = ln + 1;
        let chars: Vec<char> = text.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let col = i + 1;
            if c == '#' {
                break;
            }
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                let n = digits.parse().expect("ascii digits");
                out.push(Token { tok: Tok::Num(n), line, col });
                continue;
            }
            if c.is_ascii_alphabetic() || c == '_' {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let word: String = chars[start..i].iter().collect();
                out.push(Token { tok: Tok::Ident(word), line, col });
                continue;
            }
            let rest: String = chars[i..chars.len().min(i + 2)].iter().collect();
            let Some(sym) = SYMBOLS.iter().find(|s| rest.starts_with(*s)) else {
                return Err(ScriptError::Parse {
                    line,
                    column: col,
                    expected: vec!["a token".into()],
                    found: format!("'{c}'"),
                });
            };
            match *sym {
                "{" => depth += 1,
                "}" => depth = depth.saturating_sub(1),
                _ => {}
            }
            out.push(Token { tok: Tok::Sym(sym), line, col });
            i += sym.len();
        }
        if depth == 0 {
            out.push(Token {
                tok: Tok::Newline,
                line,
                col: chars.len() + 1,
            });
        }
    }
    let (line, col) = out.last().map_or((1, 1), |t| (t.line, t.col + 1));
    out.push(Token { tok: Tok::Eof, line, col });
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Semiring,
    MultSet,
    Ideal,
}

impl Kind {
    fn noun(self) -> &'static str {
        match self {
            Kind::Semiring => "semiring",
            Kind::MultSet => "multiplicative set",
            Kind::Ideal => "ideal",
        }
    }
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    names: HashMap<String, Kind>,
    last_semiring: Option<String>,
}

type PResult<T> = Result<T, ScriptError>;

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &[&str]) -> PResult<T> {
        let t = self.peek();
        Err(ScriptError::Parse {
            line: t.line,
            column: t.col,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: t.tok.describe(),
        })
    }

    fn at_sym(&self, s: &str) -> bool {
        matches!(self.peek().tok, Tok::Sym(x) if x == s)
    }

    fn at_word(&self, w: &str) -> bool {
        matches!(&self.peek().tok, Tok::Ident(x) if x == w)
    }

    fn at_end(&self) -> bool {
        matches!(self.peek().tok, Tok::Newline | Tok::Eof)
    }

    fn sym(&mut self, s: &'static str) -> PResult<()> {
        if self.at_sym(s) {
            self.bump();
            Ok(())
        } else {
            self.fail(&[&format!("'{s}'")])
        }
    }

    fn word(&mut self, w: &str) -> PResult<()> {
        if self.at_word(w) {
            self.bump();
            Ok(())
        } else {
            self.fail(&[&format!("'{w}'")])
        }
    }

    fn num(&mut self) -> PResult<BigUint> {
        match self.peek().tok.clone() {
            Tok::Num(n) => {
                self.bump();
                Ok(n)
            }
            _ => self.fail(&["number"]),
        }
    }

    fn small(&mut self) -> PResult<usize> {
        let t = self.peek().clone();
        let n = self.num()?;
        n.to_usize().ok_or(ScriptError::Parse {
            line: t.line,
            column: t.col,
            expected: vec!["small number".into()],
            found: t.tok.describe(),
        })
    }

    /// A fresh identifier, not a reserved word.
    fn ident(&mut self, what: &str) -> PResult<(String, Token)> {
        match self.peek().tok.clone() {
            Tok::Ident(s) if !RESERVED.contains(&s.as_str()) => Ok((s, self.bump())),
            _ => self.fail(&[what]),
        }
    }

    fn declare(&mut self, name: &str, at: &Token, kind: Kind) -> PResult<()> {
        if let Some(prev) = self.names.get(name) {
            return Err(ScriptError::Name {
                line: at.line,
                column: at.col,
                name: name.into(),
                message: format!("'{name}' is already declared as a {}", prev.noun()),
            });
        }
        self.names.insert(name.into(), kind);
        Ok(())
    }

    /// A use of a declared name of the given kind.
    fn use_name(&mut self, kind: Kind, what: &str) -> PResult<String> {
        let (name, at) = self.ident(what)?;
        match self.names.get(&name) {
            Some(&k) if k == kind => Ok(name),
            Some(&k) => Err(ScriptError::Name {
                line: at.line,
                column: at.col,
                message: format!("'{name}' is a {}, not a {}", k.noun(), kind.noun()),
                name,
            }),
            None => Err(ScriptError::Name {
                line: at.line,
                column: at.col,
                message: format!("'{name}' is not declared"),
                name,
            }),
        }
    }

    fn end(&mut self) -> PResult<()> {
        if self.at_end() {
            self.bump();
            Ok(())
        } else {
            self.fail(&["end of line"])
        }
    }

    fn term(&mut self) -> PResult<Poly> {
        let coeff = if matches!(self.peek().tok, Tok::Num(_)) { Some(self.num()?) } else { None };
        if !self.at_word("x") {
            return match coeff {
                Some(c) => Ok(Poly::constant(c)),
                None => self.fail(&["element"]),
            };
        }
        self.bump();
        let exp = if self.at_sym("^") {
            self.bump();
            self.small()?
        } else {
            1
        };
        Ok(Poly::monomial(coeff.unwrap_or(BigUint::from(1u8)), exp))
    }

    fn elem(&mut self) -> PResult<ElemLit> {
        let mut p = self.term()?;
        while self.at_sym("+") {
            self.bump();
            p = p.add(&self.term()?);
        }
        Ok(ElemLit::from_poly(p))
    }

    fn elems(&mut self, close: &'static str, allow_empty: bool) -> PResult<Vec<ElemLit>> {
        let mut out = Vec::new();
        if allow_empty && self.at_sym(close) {
            self.bump();
            return Ok(out);
        }
        loop {
            out.push(self.elem()?);
            if self.at_sym(",") {
                self.bump();
                continue;
            }
            self.sym(close)?;
            return Ok(out);
        }
    }

    fn inline_semiring(&self, at: &Token) -> PResult<String> {
        self.last_semiring.clone().ok_or(ScriptError::Name {
            line: at.line,
            column: at.col,
            name: String::new(),
            message: "an inline ideal or multiplicative set needs a declared semiring".into(),
        })
    }

    fn ideal_ref(&mut self) -> PResult<Ref<Vec<ElemLit>>> {
        if self.at_sym("(") {
            let at = self.bump();
            let def = self.elems(")", false)?;
            return Ok(Ref::Inline {
                def,
                semiring: self.inline_semiring(&at)?,
            });
        }
        if self.at_end() {
            return self.fail(&["IDEAL"]);
        }
        self.use_name(Kind::Ideal, "IDEAL").map(Ref::Name)
    }

    fn mult_def(&mut self) -> PResult<MultDef> {
        if self.at_word("odds") {
            self.bump();
            return Ok(MultDef::Odds);
        }
        if !self.at_sym("<") {
            return self.fail(&["'<'", "'odds'"]);
        }
        self.bump();
        Ok(MultDef::Gens(self.elems(">", true)?))
    }

    fn mult_ref(&mut self) -> PResult<Ref<MultDef>> {
        if self.at_sym("<") || self.at_word("odds") {
            let at = self.peek().clone();
            let def = self.mult_def()?;
            return Ok(Ref::Inline {
                def,
                semiring: self.inline_semiring(&at)?,
            });
        }
        if self.at_end() {
            return self.fail(&["MULTSET"]);
        }
        self.use_name(Kind::MultSet, "MULTSET").map(Ref::Name)
    }

    fn table(&mut self) -> PResult<Vec<Vec<usize>>> {
        self.sym("[")?;
        let mut rows = Vec::new();
        loop {
            self.sym("[")?;
            let mut row = Vec::new();
            loop {
                row.push(self.small()?);
                if self.at_sym(",") {
                    self.bump();
                    continue;
                }
                self.sym("]")?;
                break;
            }
            rows.push(row);
            if self.at_sym(",") {
                self.bump();
                continue;
            }
            self.sym("]")?;
            return Ok(rows);
        }
    }

    fn semiring_def(&mut self) -> PResult<SemiringDef> {
        let t = self.peek().clone();
        let Tok::Ident(w) = &t.tok else {
            return self.fail(&["'nat_plus'", "'nat_gcd'", "'nat_poly'", "'table'"]);
        };
        let def = match w.as_str() {
            "nat_plus" => SemiringDef::NatPlus,
            "nat_gcd" => SemiringDef::NatGcd,
            "nat_poly" => SemiringDef::NatPoly,
            "table" => {
                self.bump();
                self.sym("{")?;
                self.word("add")?;
                let add = self.table()?;
                self.word("mul")?;
                let mul = self.table()?;
                let mut zero = None;
                let mut one = None;
                if self.at_word("zero") {
                    self.bump();
                    zero = Some(self.small()?);
                }
                if self.at_word("one") {
                    self.bump();
                    one = Some(self.small()?);
                }
                if !self.at_sym("}") {
                    let mut exp = Vec::new();
                    if zero.is_none() {
                        exp.push("'zero'");
                    }
                    if one.is_none() {
                        exp.push("'one'");
                    }
                    exp.push("'}'");
                    return self.fail(&exp);
                }
                self.bump();
                return Ok(SemiringDef::Table { add, mul, zero, one });
            }
            _ => return self.fail(&["'nat_plus'", "'nat_gcd'", "'nat_poly'", "'table'"]),
        };
        self.bump();
        Ok(def)
    }

    fn query(&mut self, cmd: &str) -> PResult<Query> {
        Ok(match cmd {
            "check" => {
                let t = self.peek().clone();
                let pred = match &t.tok {
                    Tok::Ident(p) if CHECK_PREDICATES.contains(&p.as_str()) => p.clone(),
                    _ => return self.fail(&CHECK_PREDICATES),
                };
                self.bump();
                let ideal = self.ideal_ref()?;
                // optional for the classical predicates, where it only echoes
                let at_end = matches!(self.peek().tok, Tok::Newline | Tok::Eof);
                let mult = if needs_mult_set(&pred) || !at_end {
                    Some(self.mult_ref()?)
                } else {
                    None
                };
                Query::Check { pred, ideal, mult }
            }
            "radical" => Query::Radical { ideal: self.ideal_ref()? },
            "sradical" => Query::SRadical {
                ideal: self.ideal_ref()?,
                mult: self.mult_ref()?,
            },
            "decompose" => Query::Decompose {
                ideal: self.ideal_ref()?,
                mult: self.mult_ref()?,
            },
            "assoc_primes" => Query::AssocPrimes {
                ideal: self.ideal_ref()?,
                mult: self.mult_ref()?,
            },
            "colon" => Query::Colon {
                ideal: self.ideal_ref()?,
                elem: self.elem_or_fail()?,
            },
            "member" => Query::Member {
                ideal: self.ideal_ref()?,
                elem: self.elem_or_fail()?,
            },
            _ => {
                self.word("run")?;
                let order = if self.at_word("order") {
                    self.bump();
                    self.sym("<=")?;
                    Some(self.small()?)
                } else {
                    None
                };
                Query::Lab { order }
            }
        })
    }

    fn elem_or_fail(&mut self) -> PResult<ElemLit> {
        if self.at_end() {
            return self.fail(&["ELEMENT"]);
        }
        self.elem()
    }

    fn stmt(&mut self) -> PResult<Option<Stmt>> {
        while matches!(self.peek().tok, Tok::Newline) {
            self.bump();
        }
        let start = self.peek().clone();
        let word = match &start.tok {
            Tok::Eof => return Ok(None),
            Tok::Ident(w) => w.clone(),
            _ => return self.fail(&STATEMENT_WORDS),
        };
        self.bump();
        let kind = match word.as_str() {
            "semiring" => {
                let (name, at) = self.ident("NAME")?;
                self.sym("=")?;
                let def = self.semiring_def()?;
                self.declare(&name, &at, Kind::Semiring)?;
                self.last_semiring = Some(name.clone());
                StmtKind::Semiring { name, def }
            }
            "multset" => {
                let (name, at) = self.ident("NAME")?;
                self.sym("=")?;
                let def = self.mult_def()?;
                self.word("in")?;
                let semiring = self.use_name(Kind::Semiring, "SEMIRING")?;
                self.declare(&name, &at, Kind::MultSet)?;
                StmtKind::MultSet { name, def, semiring }
            }
            "ideal" => {
                let (name, at) = self.ident("NAME")?;
                self.sym("=")?;
                self.sym("(")?;
                let gens = self.elems(")", false)?;
                self.word("in")?;
                let semiring = self.use_name(Kind::Semiring, "SEMIRING")?;
                self.declare(&name, &at, Kind::Ideal)?;
                StmtKind::Ideal { name, gens, semiring }
            }
            w if QUERY_WORDS.contains(&w) => StmtKind::Query(self.query(w)?),
            _ => {
                self.pos -= 1;
                return self.fail(&STATEMENT_WORDS);
            }
        };
        self.end()?;
        Ok(Some(Stmt {
            line: start.line,
            column: start.col,
            kind,
        }))
    }
}

const QUERY_WORDS: [&str; 8] = ["check", "radical", "sradical", "colon", "decompose", "assoc_primes", "member", "lab"];

const STATEMENT_WORDS: [&str; 11] = [
    "semiring",
    "multset",
    "ideal",
    "check",
    "radical",
    "sradical",
    "colon",
    "decompose",
    "assoc_primes",
    "member",
    "lab",
];

/// Parses a whole script, resolving every name against earlier declarations.
pub fn parse(src: &str) -> Result<Script, ScriptError> {
    let mut p = Parser {
        toks: lex(src)?,
        pos: 0,
        names: HashMap::new(),
        last_semiring: None,
    };
    let mut stmts = Vec::new();
    while let Some(s) = p.stmt()? {
        stmts.push(s);
    }
    Ok(Script { stmts })
}
