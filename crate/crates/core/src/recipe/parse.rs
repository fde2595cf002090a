use std::collections::HashMap;

use super::{Call, Loc, Name, PosSet, Recipe, RecipeError, Statement};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(u64),
    Str(String),
    Punct(&'static str),
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Int(v) => format!("`{v}`"),
            Tok::Str(_) => "a string".to_string(),
            Tok::Punct(p) => format!("`{p}`"),
        }
    }
}

fn syntax(at: Loc, message: impl Into<String>) -> RecipeError {
    RecipeError::Syntax { at, message: message.into() }
}

struct Lexer {
    chars: Vec<char>,
    i: usize,
    line: usize,
    col: usize,
}

impl Lexer {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.i).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.i += 1;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> String {
        let mut s = String::new();
        while let Some(c) = self.peek().filter(|&c| pred(c)) {
            s.push(c);
            self.bump();
        }
        s
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, Loc)>, RecipeError> {
    let mut lx = Lexer { chars: text.chars().collect(), i: 0, line: 1, col: 1 };
    let mut out = Vec::new();
    while let Some(c) = lx.peek() {
        let at = Loc { line: lx.line, col: lx.col };
        if c.is_whitespace() {
            lx.bump();
        } else if c == '#' {
            lx.take_while(|c| c != '\n');
        } else if c.is_ascii_alphabetic() || c == '_' {
            let s = lx.take_while(|c| c.is_ascii_alphanumeric() || c == '_');
            out.push((Tok::Ident(s), at));
        } else if c.is_ascii_digit() {
            let digits = lx.take_while(|c| c.is_ascii_digit());
            let v = digits.parse::<u64>().map_err(|_| syntax(at, "integer too large"))?;
            out.push((Tok::Int(v), at));
        } else if c == '"' {
            lx.bump();
            let s = lx.take_while(|c| c != '"');
            if lx.bump().is_none() {
                return Err(syntax(at, "unterminated string"));
            }
            out.push((Tok::Str(s), at));
        } else if c == '.' && lx.chars.get(lx.i + 1) == Some(&'.') {
            lx.bump();
            lx.bump();
            out.push((Tok::Punct(".."), at));
        } else {
            let p = match c {
                '=' => "=",
                '(' => "(",
                ')' => ")",
                ',' => ",",
                '{' => "{",
                '}' => "}",
                ';' => ";",
                _ => return Err(syntax(at, format!("unexpected character '{c}'"))),
            };
            lx.bump();
            out.push((Tok::Punct(p), at));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Loc)>,
    pos: usize,
    end: Loc,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn loc(&self) -> Loc {
        self.toks.get(self.pos).map_or(self.end, |t| t.1)
    }

    fn next(&mut self, what: &str) -> Result<(Tok, Loc), RecipeError> {
        let t = self.toks.get(self.pos).cloned().ok_or_else(|| syntax(self.end, format!("expected {what}, found end of input")))?;
        self.pos += 1;
        Ok(t)
    }

    fn unexpected(what: &str, tok: &Tok, at: Loc) -> RecipeError {
        syntax(at, format!("expected {what}, found {}", tok.describe()))
    }

    fn punct(&mut self, p: &'static str) -> Result<(), RecipeError> {
        let what = format!("`{p}`");
        match self.next(&what)? {
            (Tok::Punct(q), _) if q == p => Ok(()),
            (t, at) => Err(Parser::unexpected(&what, &t, at)),
        }
    }

    fn ident(&mut self) -> Result<Name, RecipeError> {
        match self.next("a name")? {
            (Tok::Ident(text), at) => Ok(Name { text, at }),
            (t, at) => Err(Parser::unexpected("a name", &t, at)),
        }
    }

    fn int(&mut self) -> Result<u64, RecipeError> {
        match self.next("an integer")? {
            (Tok::Int(v), _) => Ok(v),
            (t, at) => Err(Parser::unexpected("an integer", &t, at)),
        }
    }

    fn usize(&mut self) -> Result<usize, RecipeError> {
        let at = self.loc();
        usize::try_from(self.int()?).map_err(|_| syntax(at, "integer too large"))
    }

    fn string(&mut self) -> Result<String, RecipeError> {
        match self.next("a quoted string")? {
            (Tok::Str(s), _) => Ok(s),
            (t, at) => Err(Parser::unexpected("a quoted string", &t, at)),
        }
    }

    fn order(&mut self) -> Result<u32, RecipeError> {
        let at = self.loc();
        u32::try_from(self.int()?).map_err(|_| syntax(at, "field order too large"))
    }

    fn posset(&mut self) -> Result<PosSet, RecipeError> {
        self.punct("{")?;
        let mut ranges = Vec::new();
        loop {
            let at = self.loc();
            let a = self.usize()?;
            let b = if self.peek() == Some(&Tok::Punct("..")) {
                self.pos += 1;
                self.usize()?
            } else {
                a
            };
            if b < a {
                return Err(syntax(at, format!("empty range {a}..{b}")));
            }
            ranges.push((a, b));
            match self.next("`,` or `}`")? {
                (Tok::Punct(","), _) => continue,
                (Tok::Punct("}"), _) => break,
                (t, at) => return Err(Parser::unexpected("`,` or `}`", &t, at)),
            }
        }
        Ok(PosSet(ranges))
    }

    fn call(&mut self) -> Result<Call, RecipeError> {
        let head = self.ident()?;
        self.punct("(")?;
        let call = match head.text.as_str() {
            "bch" => {
                let q = self.order()?;
                self.punct(",")?;
                let n = self.usize()?;
                self.punct(",")?;
                let delta = self.usize()?;
                let b = if self.peek() == Some(&Tok::Punct(",")) {
                    self.pos += 1;
                    Some(self.usize()?)
                } else {
                    None
                };
                Call::Bch { q, n, delta, b }
            }
            "cyclic" => {
                let q = self.order()?;
                self.punct(",")?;
                let n = self.usize()?;
                self.punct(",")?;
                let poly: String = self.string()?.chars().filter(|c| !c.is_whitespace()).collect();
                Call::Cyclic { q, n, poly }
            }
            "extend" => Call::Extend(self.ident()?),
            "dual" => Call::Dual(self.ident()?),
            "shorten" | "puncture" => {
                let a = self.ident()?;
                self.punct(",")?;
                let s = self.posset()?;
                if head.text == "shorten" {
                    Call::Shorten(a, s)
                } else {
                    Call::Puncture(a, s)
                }
            }
            "plotkin" => {
                let a = self.ident()?;
                self.punct(",")?;
                let b = self.ident()?;
                Call::Plotkin(a, b)
            }
            "load" => Call::Load(self.string()?),
            other => return Err(syntax(head.at, format!("unknown construction `{other}`"))),
        };
        self.punct(")")?;
        Ok(call)
    }
}

/// Parses recipe text, checking that every operand refers to an earlier
/// statement and that no name is defined twice.
pub fn parse_recipe(text: &str) -> Result<Recipe, RecipeError> {
    let toks = lex(text)?;
    let end = match text.lines().count() {
        0 => Loc { line: 1, col: 1 },
        n => Loc { line: n, col: text.lines().last().unwrap_or("").chars().count() + 1 },
    };
    let mut p = Parser { toks, pos: 0, end };
    let mut statements = Vec::new();
    let mut defined: HashMap<String, Loc> = HashMap::new();
    while p.peek().is_some() {
        let name = p.ident()?;
        p.punct("=")?;
        let call = p.call()?;
        if p.peek() == Some(&Tok::Punct(";")) {
            p.pos += 1;
        }
        for op in call.operands() {
            if !defined.contains_key(&op.text) {
                return Err(RecipeError::Undefined { name: op.text.clone(), at: op.at });
            }
        }
        if let Some(&first) = defined.get(&name.text) {
            return Err(RecipeError::Duplicate { name: name.text, at: name.at, first });
        }
        defined.insert(name.text.clone(), name.at);
        statements.push(Statement { name, call });
    }
    if statements.is_empty() {
        return Err(syntax(p.end, "a recipe needs at least one statement"));
    }
    Ok(Recipe { statements })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn name(text: &str) -> Name {
        Name { text: text.to_string(), at: Loc::default() }
    }

    #[test]
    fn single_statement() {
        let r = parse_recipe("c = bch(2,7,3)").unwrap();
        assert_eq!(r.statements.len(), 1);
        assert_eq!(r.terminal().call, Call::Bch { q: 2, n: 7, delta: 3, b: None });
        assert_eq!(r.terminal().name.at, Loc { line: 1, col: 1 });
    }

    #[test]
    fn all_constructions() {
        let text = "a = bch(3, 13, 4, 2); b = cyclic(4, 5, \"x +\n 1\")\nc = extend(a) # comment\n\
                    d = shorten(c, {1, 3..5}) e = puncture(d, {2}) f = dual(e)\ng = load(\"m/x.mat\") h = plotkin(g, g)";
        let r = parse_recipe(text).unwrap();
        let calls: Vec<Call> = r.statements.iter().map(|s| s.call.clone()).collect();
        assert_eq!(
            calls,
            vec![
                Call::Bch { q: 3, n: 13, delta: 4, b: Some(2) },
                Call::Cyclic { q: 4, n: 5, poly: "x+1".into() },
                Call::Extend(name("a")),
                Call::Shorten(name("c"), PosSet(vec![(1, 1), (3, 5)])),
                Call::Puncture(name("d"), PosSet(vec![(2, 2)])),
                Call::Dual(name("e")),
                Call::Load("m/x.mat".into()),
                Call::Plotkin(name("g"), name("g")),
            ]
        );
        assert_eq!(PosSet(vec![(1, 1), (3, 5)]).positions(), vec![1, 3, 4, 5]);
        assert_eq!(r.statements[3].name.at, Loc { line: 4, col: 1 });
    }

    #[test]
    fn undefined_name_at_use_site() {
        let err = parse_recipe("b = bch(2,7,3)\nc = plotkin(a, b)").unwrap_err();
        assert_eq!(err, RecipeError::Undefined { name: "a".into(), at: Loc { line: 2, col: 13 } });
        // a statement cannot refer to itself
        assert!(matches!(parse_recipe("c = extend(c)"), Err(RecipeError::Undefined { .. })));
    }

    #[test]
    fn duplicate_names() {
        let err = parse_recipe("c = bch(2,7,3)\n  c = extend(c)").unwrap_err();
        assert_eq!(
            err,
            RecipeError::Duplicate { name: "c".into(), at: Loc { line: 2, col: 3 }, first: Loc { line: 1, col: 1 } }
        );
    }

    #[test]
    fn syntax_errors_carry_locations() {
        let cases = [
            ("c = bch(2,7)", Loc { line: 1, col: 12 }),
            ("c = foo(2)", Loc { line: 1, col: 5 }),
            ("c = bch(2,7,3", Loc { line: 1, col: 14 }),
            ("\nc = shorten(a, {3..1})", Loc { line: 2, col: 17 }),
            ("c = cyclic(2, 7, \"x+1)", Loc { line: 1, col: 18 }),
            ("c = bch(2,7,3) $", Loc { line: 1, col: 16 }),
            ("c bch(2,7,3)", Loc { line: 1, col: 3 }),
            ("", Loc { line: 1, col: 1 }),
            ("# only a comment\n", Loc { line: 1, col: 17 }),
            ("c = bch(99999999999999999999, 1, 1)", Loc { line: 1, col: 9 }),
        ];
        for (text, want) in cases {
            match parse_recipe(text) {
                Err(RecipeError::Syntax { at, .. }) => assert_eq!(at, want, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn printing_round_trips() {
        let text = "t = bch(4,63,5)\nu = extend(t)\nv = shorten(u,{62..64})\nw = cyclic(4, 65, \"x^2 + a*x + 1\")\n\
                    x = puncture(w, {1,3..4}) y = dual(x) z = load(\"g.mat\") r = plotkin(v, y)";
        let r = parse_recipe(text).unwrap();
        let printed = r.to_string();
        assert!(printed.contains("shorten(u, {62..64})"));
        assert!(printed.contains("\"x^2+a*x+1\""));
        assert_eq!(parse_recipe(&printed).unwrap(), r);
    }
}
