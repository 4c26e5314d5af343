//! Free magma and free monoid terms.
//!
//! A [`MagmaTerm`] is a fully parenthesised product of generators, with a
//! unit that only ever appears at the top level. A [`Shape`] is a term over
//! the single generator `•` and records how a sequence is bracketed. A
//! [`Word`] is the flat, unbracketed reading of a term.
//!
//! Text syntax: `term := "1" | ident | "(" term term ")"`.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

use crate::error::{CatError, Result};

/// An interned generator label. Equality is string equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator(Arc<str>);

impl Generator {
    pub fn new(name: &str) -> Self {
        Generator(Arc::from(name))
    }

    /// The bullet `•` used by shapes.
    pub fn bullet() -> Self {
        Generator::new(BULLET)
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub const BULLET: &str = "•";

/// An element of the free unital magma.
///
/// `Unit` never occurs below a `Pair`; use [`MagmaTerm::pair`] or
/// [`MagmaTerm::product`] rather than building `Pair` by hand.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum MagmaTerm {
    Unit,
    Leaf(Generator),
    Pair(Arc<MagmaTerm>, Arc<MagmaTerm>),
}

impl MagmaTerm {
    pub fn leaf(name: &str) -> Self {
        MagmaTerm::Leaf(Generator::new(name))
    }

    /// Binary node. Both children must be non-unit.
    pub fn pair(left: MagmaTerm, right: MagmaTerm) -> Result<Self> {
        if left.is_unit() || right.is_unit() {
            return Err(CatError::Precondition(
                "the unit cannot appear inside a product".into(),
            ));
        }
        Ok(MagmaTerm::Pair(Arc::new(left), Arc::new(right)))
    }

    /// The unital magma product: `Unit` is a two-sided identity.
    pub fn product(left: &MagmaTerm, right: &MagmaTerm) -> Self {
        match (left, right) {
            (MagmaTerm::Unit, r) => r.clone(),
            (l, MagmaTerm::Unit) => l.clone(),
            (l, r) => MagmaTerm::Pair(Arc::new(l.clone()), Arc::new(r.clone())),
        }
    }

    pub fn is_unit(&self) -> bool {
        matches!(self, MagmaTerm::Unit)
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            MagmaTerm::Unit => 0,
            MagmaTerm::Leaf(_) => 1,
            MagmaTerm::Pair(l, r) => l.leaf_count() + r.leaf_count(),
        }
    }

    /// In-order list of leaf labels.
    pub fn forget_parens(&self) -> Word {
        let mut out = Vec::with_capacity(self.leaf_count());
        self.push_leaves(&mut out);
        Word(out)
    }

    fn push_leaves(&self, out: &mut Vec<Generator>) {
        match self {
            MagmaTerm::Unit => {}
            MagmaTerm::Leaf(g) => out.push(g.clone()),
            MagmaTerm::Pair(l, r) => {
                l.push_leaves(out);
                r.push_leaves(out);
            }
        }
    }

    /// Relabel every leaf with `•`.
    pub fn collapse(&self) -> Shape {
        fn go(t: &MagmaTerm) -> MagmaTerm {
            match t {
                MagmaTerm::Unit => MagmaTerm::Unit,
                MagmaTerm::Leaf(_) => MagmaTerm::Leaf(Generator::bullet()),
                MagmaTerm::Pair(l, r) => MagmaTerm::Pair(Arc::new(go(l)), Arc::new(go(r))),
            }
        }
        Shape(go(self))
    }

    /// The two factors of a binary node.
    pub fn split(&self) -> Result<(MagmaTerm, MagmaTerm)> {
        match self {
            MagmaTerm::Pair(l, r) => Ok(((**l).clone(), (**r).clone())),
            other => Err(CatError::Precondition(format!(
                "`{other}` has fewer than two leaves and cannot be split"
            ))),
        }
    }

    /// Attach labels to the bullets of `shape`, left to right.
    pub fn from_shape(shape: &Shape, labels: &[Generator]) -> Result<Self> {
        if shape.leaf_count() != labels.len() {
            return Err(CatError::LengthMismatch {
                seq: labels.len(),
                leaves: shape.leaf_count(),
            });
        }
        fn go(t: &MagmaTerm, labels: &mut std::slice::Iter<'_, Generator>) -> MagmaTerm {
            match t {
                MagmaTerm::Unit => MagmaTerm::Unit,
                MagmaTerm::Leaf(_) => MagmaTerm::Leaf(labels.next().expect("count checked").clone()),
                MagmaTerm::Pair(l, r) => {
                    let l = go(l, labels);
                    let r = go(r, labels);
                    MagmaTerm::Pair(Arc::new(l), Arc::new(r))
                }
            }
        }
        Ok(go(&shape.0, &mut labels.iter()))
    }

    /// Left-nested product of the letters of `word`.
    pub fn left_comb_of(word: &Word) -> Self {
        word.0.iter().fold(MagmaTerm::Unit, |acc, g| {
            MagmaTerm::product(&acc, &MagmaTerm::Leaf(g.clone()))
        })
    }
}

impl fmt::Display for MagmaTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MagmaTerm::Unit => f.write_str("1"),
            MagmaTerm::Leaf(g) => write!(f, "{g}"),
            MagmaTerm::Pair(l, r) => write!(f, "({l} {r})"),
        }
    }
}

impl fmt::Debug for MagmaTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Syntax error in a term, with the byte offset where it was detected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at offset {pos}: {message}")]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq)]
enum Token<'a> {
    Open,
    Close,
    Atom(&'a str),
}

fn tokenize(text: &str) -> Vec<(usize, Token<'_>)> {
    let mut tokens = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c == '(' {
            tokens.push((pos, Token::Open));
            chars.next();
        } else if c == ')' {
            tokens.push((pos, Token::Close));
            chars.next();
        } else {
            let start = pos;
            let mut end = text.len();
            while let Some(&(p, c)) = chars.peek() {
                if c.is_whitespace() || c == '(' || c == ')' {
                    end = p;
                    break;
                }
                chars.next();
            }
            tokens.push((start, Token::Atom(&text[start..end])));
        }
    }
    tokens
}

struct Parser<'a> {
    tokens: Vec<(usize, Token<'a>)>,
    next: usize,
    len: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, pos: usize, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            pos,
            message: message.into(),
        })
    }

    fn here(&self) -> usize {
        self.tokens.get(self.next).map_or(self.len, |t| t.0)
    }

    fn term(&mut self) -> Result<MagmaTerm, ParseError> {
        let Some((pos, tok)) = self.tokens.get(self.next).cloned() else {
            return self.err(self.len, "unexpected end of input");
        };
        self.next += 1;
        match tok {
            Token::Atom("1") => Ok(MagmaTerm::Unit),
            Token::Atom(name) => Ok(MagmaTerm::leaf(name)),
            Token::Close => self.err(pos, "unexpected `)`"),
            Token::Open => {
                let left_pos = self.here();
                let left = self.term()?;
                let right_pos = self.here();
                let right = self.term()?;
                match self.tokens.get(self.next) {
                    Some((_, Token::Close)) => self.next += 1,
                    Some((p, _)) => return self.err(*p, "expected `)` after two factors"),
                    None => return self.err(self.len, "missing `)`"),
                }
                if left.is_unit() {
                    return self.err(left_pos, "the unit cannot appear inside a product");
                }
                if right.is_unit() {
                    return self.err(right_pos, "the unit cannot appear inside a product");
                }
                Ok(MagmaTerm::Pair(Arc::new(left), Arc::new(right)))
            }
        }
    }
}

/// Parse a term from its text form.
pub fn parse_term(text: &str) -> Result<MagmaTerm, ParseError> {
    let mut parser = Parser {
        tokens: tokenize(text),
        next: 0,
        len: text.len(),
    };
    let term = parser.term()?;
    if parser.next != parser.tokens.len() {
        let pos = parser.here();
        return parser.err(pos, "trailing input after term");
    }
    Ok(term)
}

/// Canonical text form: binary nodes parenthesised, leaves bare, unit as `1`.
pub fn render_term(term: &MagmaTerm) -> String {
    term.to_string()
}

impl FromStr for MagmaTerm {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_term(s)
    }
}

/// An element of the free unital magma on `•`: a parenthesisation pattern.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Shape(MagmaTerm);

impl Shape {
    pub fn empty() -> Self {
        Shape(MagmaTerm::Unit)
    }

    pub fn bullet() -> Self {
        Shape(MagmaTerm::Leaf(Generator::bullet()))
    }

    /// Wrap a term, checking that every leaf is `•`.
    pub fn from_term(term: MagmaTerm) -> Result<Self> {
        if term.forget_parens().0.iter().all(|g| g.as_str() == BULLET) {
            Ok(Shape(term))
        } else {
            Err(CatError::Precondition(format!(
                "`{term}` is not a shape: leaves must be `{BULLET}`"
            )))
        }
    }

    pub fn pair(left: &Shape, right: &Shape) -> Result<Self> {
        MagmaTerm::pair(left.0.clone(), right.0.clone()).map(Shape)
    }

    /// Unital product; `Shape::empty()` is a two-sided identity.
    pub fn product(left: &Shape, right: &Shape) -> Self {
        Shape(MagmaTerm::product(&left.0, &right.0))
    }

    pub fn as_term(&self) -> &MagmaTerm {
        &self.0
    }

    pub fn leaf_count(&self) -> usize {
        self.0.leaf_count()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_unit()
    }

    /// Fully left-nested shape with `n` leaves.
    pub fn left_comb(n: usize) -> Self {
        (0..n).fold(Shape::empty(), |acc, _| Shape::product(&acc, &Shape::bullet()))
    }

    /// The unique `(t1, t2)` with `self = t1 t2`; needs at least two leaves.
    pub fn split(&self) -> Result<(Shape, Shape)> {
        let (l, r) = self.0.split()?;
        Ok((Shape(l), Shape(r)))
    }

    /// All shapes with exactly `n` leaves, sorted by rendered text.
    pub fn all_with_leaves(n: usize) -> Vec<Shape> {
        let mut table: Vec<Vec<Shape>> = vec![vec![Shape::empty()], vec![Shape::bullet()]];
        for k in 2..=n {
            let mut level = Vec::new();
            for i in 1..k {
                for l in &table[i] {
                    for r in &table[k - i] {
                        level.push(Shape::pair(l, r).expect("non-empty factors"));
                    }
                }
            }
            table.push(level);
        }
        let mut out = table.swap_remove(n);
        out.sort_by_cached_key(|s| s.to_string());
        out
    }

    /// All shapes with at most `max` leaves: by leaf count, then by text.
    pub fn all_up_to(max: usize) -> Vec<Shape> {
        (0..=max).flat_map(Shape::all_with_leaves).collect()
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for Shape {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let term = parse_term(s)?;
        Shape::from_term(term).map_err(|e| ParseError {
            pos: 0,
            message: e.to_string(),
        })
    }
}

/// An element of the free monoid: a flat list of generators.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Word(pub Vec<Generator>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters<'a>(letters: impl IntoIterator<Item = &'a str>) -> Self {
        Word(letters.into_iter().map(Generator::new).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = self.0.clone();
        out.extend(other.0.iter().cloned());
        Word(out)
    }

    /// Parse whitespace-separated letters; `1` alone is the empty word.
    pub fn parse(text: &str) -> Word {
        let text = text.trim();
        if text == "1" {
            return Word::empty();
        }
        Word::from_letters(text.split_whitespace())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> MagmaTerm {
        parse_term(s).unwrap()
    }

    fn sh(s: &str) -> Shape {
        s.parse().unwrap()
    }

    #[test]
    fn leaf_count_examples() {
        assert_eq!(sh("(((• •) •) (• •))").leaf_count(), 5);
        assert_eq!(MagmaTerm::Unit.leaf_count(), 0);
        assert_eq!(t("(a b)").leaf_count(), 2);
    }

    #[test]
    fn forget_parens_examples() {
        assert_eq!(t("((x y) z)").forget_parens(), Word::from_letters(["x", "y", "z"]));
        assert_eq!(MagmaTerm::Unit.forget_parens(), Word::empty());
        assert_eq!(t("x").forget_parens(), Word::from_letters(["x"]));
    }

    #[test]
    fn collapse_examples() {
        assert_eq!(t("(x (y z))").collapse(), sh("(• (• •))"));
        assert_eq!(MagmaTerm::Unit.collapse(), Shape::empty());
        assert_eq!(t("x").collapse(), Shape::bullet());
    }

    #[test]
    fn left_comb_examples() {
        assert_eq!(Shape::left_comb(3), sh("((• •) •)"));
        assert_eq!(Shape::left_comb(0), Shape::empty());
        assert_eq!(Shape::left_comb(1), Shape::bullet());
        // fold-left oracle, built by explicit nesting
        let mut oracle = MagmaTerm::leaf(BULLET);
        for _ in 1..5 {
            oracle = MagmaTerm::pair(oracle, MagmaTerm::leaf(BULLET)).unwrap();
        }
        assert_eq!(Shape::left_comb(5).as_term(), &oracle);
        assert_eq!(Shape::left_comb(5).to_string(), "((((• •) •) •) •)");
    }

    #[test]
    fn split_examples() {
        let (l, r) = sh("(((• •) •) (• •))").split().unwrap();
        assert_eq!(l, sh("((• •) •)"));
        assert_eq!(r, sh("(• •)"));
        let (l, r) = sh("(• •)").split().unwrap();
        assert_eq!((l, r), (Shape::bullet(), Shape::bullet()));
        let (l, r) = sh("((• •) (• •))").split().unwrap();
        assert_eq!(l, r);
    }

    #[test]
    fn split_rejects_small_shapes() {
        assert!(Shape::empty().split().is_err());
        assert!(Shape::bullet().split().is_err());
    }

    #[test]
    fn parse_examples() {
        let expected = MagmaTerm::pair(
            MagmaTerm::pair(MagmaTerm::leaf("x"), MagmaTerm::leaf("y")).unwrap(),
            MagmaTerm::leaf("z"),
        )
        .unwrap();
        assert_eq!(t("((x y) z)"), expected);
        assert_eq!(t("1"), MagmaTerm::Unit);
        assert_eq!(render_term(&t("(x (y z))")), "(x (y z))");
    }

    #[test]
    fn parse_errors_carry_positions() {
        let e = parse_term("(x y").unwrap_err();
        assert_eq!(e.pos, 4);
        let e = parse_term("(x y z)").unwrap_err();
        assert_eq!(e.pos, 5);
        let e = parse_term("(x 1)").unwrap_err();
        assert_eq!(e.pos, 3);
        let e = parse_term(")").unwrap_err();
        assert_eq!(e.pos, 0);
        let e = parse_term("x y").unwrap_err();
        assert_eq!(e.pos, 2);
        assert!(parse_term("").is_err());
        assert!("(x y)".parse::<Shape>().is_err());
    }

    #[test]
    fn pair_rejects_unit_children() {
        assert!(MagmaTerm::pair(MagmaTerm::Unit, MagmaTerm::leaf("x")).is_err());
        assert_eq!(
            MagmaTerm::product(&MagmaTerm::Unit, &MagmaTerm::leaf("x")),
            MagmaTerm::leaf("x")
        );
    }

    #[test]
    fn catalan_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| Shape::all_with_leaves(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14, 42]);
        assert_eq!(Shape::all_with_leaves(0), vec![Shape::empty()]);
        let four = Shape::all_with_leaves(4);
        let mut sorted = four.clone();
        sorted.sort_by_key(|s| s.to_string());
        assert_eq!(four, sorted);
    }

    #[test]
    fn from_shape_attaches_labels() {
        let labels = Word::from_letters(["a", "b", "c"]);
        let v = MagmaTerm::from_shape(&sh("(• (• •))"), labels.letters()).unwrap();
        assert_eq!(v, t("(a (b c))"));
        assert!(MagmaTerm::from_shape(&sh("(• •)"), labels.letters()).is_err());
        assert_eq!(MagmaTerm::left_comb_of(&labels), t("((a b) c)"));
    }

    #[test]
    fn word_text() {
        assert_eq!(Word::parse("x y  z").to_string(), "x y z");
        assert_eq!(Word::parse("1"), Word::empty());
        assert_eq!(Word::empty().to_string(), "1");
    }
}
