//! A small language for describing code constructions.
//!
//! ```text
//! # [122,91] over GF(4)
//! tmp1 = bch(4, 63, 5)
//! tmp2 = extend(tmp1)
//! c1   = shorten(tmp2, {62..64})
//! tmp3 = cyclic(4, 65, "x^21+a*x^20+...+1")
//! c2   = shorten(tmp3, {62..65})
//! c    = plotkin(c1, c2)
//! ```
//!
//! Each statement names one code; operands must be defined earlier and the
//! last statement is the result. Position sets are 1-based and inclusive,
//! relative to the operand's length. `load("file.mat")` reads a generator
//! matrix relative to the evaluation directory.

mod eval;
mod parse;

use std::fmt;

use thiserror::Error;

use crate::codes::CodeError;

pub use eval::{eval_recipe, eval_recipe_with, Evaluated};
pub use parse::parse_recipe;

/// Line and column (both 1-based) of a token.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct Loc {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Loc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

/// A reference to an earlier statement. Locations do not take part in
/// equality, so printed and reparsed recipes compare equal.
#[derive(Clone, Debug, Eq)]
pub struct Name {
    pub text: String,
    pub at: Loc,
}

impl PartialEq for Name {
    fn eq(&self, other: &Name) -> bool {
        self.text == other.text
    }
}

/// Inclusive 1-based ranges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosSet(pub Vec<(usize, usize)>);

impl PosSet {
    pub fn positions(&self) -> Vec<usize> {
        self.0.iter().flat_map(|&(a, b)| a..=b).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Call {
    Bch { q: u32, n: usize, delta: usize, b: Option<usize> },
    Cyclic { q: u32, n: usize, poly: String },
    Extend(Name),
    Shorten(Name, PosSet),
    Puncture(Name, PosSet),
    Plotkin(Name, Name),
    Dual(Name),
    Load(String),
}

impl Call {
    pub fn operands(&self) -> Vec<&Name> {
        match self {
            Call::Extend(a) | Call::Shorten(a, _) | Call::Puncture(a, _) | Call::Dual(a) => vec![a],
            Call::Plotkin(a, b) => vec![a, b],
            Call::Bch { .. } | Call::Cyclic { .. } | Call::Load(_) => vec![],
        }
    }
}

#[derive(Clone, Debug, Eq)]
pub struct Statement {
    pub name: Name,
    pub call: Call,
}

impl PartialEq for Statement {
    fn eq(&self, other: &Statement) -> bool {
        self.name == other.name && self.call == other.call
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recipe {
    pub statements: Vec<Statement>,
}

impl Recipe {
    /// The statement whose code the recipe evaluates to.
    pub fn terminal(&self) -> &Statement {
        self.statements.last().expect("a parsed recipe has at least one statement")
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RecipeError {
    #[error("{at}: {message}")]
    Syntax { at: Loc, message: String },
    #[error("{at}: undefined name `{name}`")]
    Undefined { name: String, at: Loc },
    #[error("{at}: `{name}` is already defined at {first}")]
    Duplicate { name: String, at: Loc, first: Loc },
    #[error("{at}: in `{name}`: {source}")]
    Code { name: String, at: Loc, source: CodeError },
    #[error("{at}: in `{name}`: {message}")]
    Load { name: String, at: Loc, message: String },
}

impl fmt::Display for PosSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&(a, b)| if a == b { a.to_string() } else { format!("{a}..{b}") })
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

impl fmt::Display for Call {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Call::Bch { q, n, delta, b: None } => write!(f, "bch({q}, {n}, {delta})"),
            Call::Bch { q, n, delta, b: Some(b) } => write!(f, "bch({q}, {n}, {delta}, {b})"),
            Call::Cyclic { q, n, poly } => write!(f, "cyclic({q}, {n}, \"{poly}\")"),
            Call::Extend(a) => write!(f, "extend({})", a.text),
            Call::Shorten(a, s) => write!(f, "shorten({}, {s})", a.text),
            Call::Puncture(a, s) => write!(f, "puncture({}, {s})", a.text),
            Call::Plotkin(a, b) => write!(f, "plotkin({}, {})", a.text, b.text),
            Call::Dual(a) => write!(f, "dual({})", a.text),
            Call::Load(path) => write!(f, "load(\"{path}\")"),
        }
    }
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.statements {
            writeln!(f, "{} = {}", s.name.text, s.call)?;
        }
        Ok(())
    }
}
