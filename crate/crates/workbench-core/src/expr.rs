//! The small query language for representation arithmetic.
//!
//! Grammar (whitespace insensitive, `*` binds tighter than `+`):
//!
//! ```text
//! expr   := term ('+' term)*
//! term   := factor ('*' factor)*
//! factor := NAME | FUNCTOR '(' expr ')' | '(' expr ')'
//! ```
//!
//! Names are irreducible labels (`1+`, `2_0`, `4_0`, `1a`–`1d`, `2a`–`2c`,
//! ...), functors are `S2`, `L2`, `S3`, `L3`, `M3`, `Dual`, `Res[H]`,
//! `Res[K]`, `Ind[G]`. Restriction and induction change the ambient group;
//! bare expressions are ambient in the order-48 group unless their leaves
//! are subgroup labels.

use std::fmt;

use thiserror::Error;

use crate::chartab::{
    self, align_g_labels, align_h_labels, align_k_labels, character_table, CharError, Character,
    CharacterTable, Decomposition,
};
use crate::group::GroupError;
use crate::octa::{self, GroupContext};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExprError {
    #[error("parse error at byte {position}: expected {expected}, found `{found}`")]
    Parse {
        position: usize,
        expected: String,
        found: String,
    },
    #[error("unknown name `{name}`; valid names: {valid}")]
    UnknownName { name: String, valid: String },
    #[error("mixed ambient groups in one scope")]
    MixedAmbient,
    #[error("argument of Ind[G] must live in the order-16 or order-6 subgroup")]
    BadInduction,
    #[error(transparent)]
    Char(#[from] CharError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Unary functors of the language.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Functor {
    Sym2,
    Alt2,
    Sym3,
    Alt3,
    Mid3,
    Dual,
    /// Restrict from the order-48 group to the named subgroup (`H` or `K`).
    Res(String),
    /// Induce up to the order-48 group.
    Ind,
}

impl Functor {
    fn render(&self) -> String {
        match self {
            Functor::Sym2 => "S2".into(),
            Functor::Alt2 => "L2".into(),
            Functor::Sym3 => "S3".into(),
            Functor::Alt3 => "L3".into(),
            Functor::Mid3 => "M3".into(),
            Functor::Dual => "Dual".into(),
            Functor::Res(t) => format!("Res[{t}]"),
            Functor::Ind => "Ind[G]".into(),
        }
    }
}

/// Abstract syntax tree of a query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Leaf(String),
    Sum(Box<Expr>, Box<Expr>),
    Tensor(Box<Expr>, Box<Expr>),
    Apply(Functor, Box<Expr>),
}

impl Expr {
    /// Canonical rendering; reparses to an identical tree. The parser
    /// left-associates, so right-nested operands are parenthesized.
    pub fn render(&self) -> String {
        match self {
            Expr::Leaf(name) => name.clone(),
            Expr::Sum(a, b) => {
                let rhs = match **b {
                    Expr::Sum(_, _) => format!("({})", b.render()),
                    _ => b.render(),
                };
                format!("{} + {}", a.render(), rhs)
            }
            Expr::Tensor(a, b) => {
                let lhs = match **a {
                    Expr::Sum(_, _) => format!("({})", a.render()),
                    _ => a.render(),
                };
                let rhs = match **b {
                    Expr::Sum(_, _) | Expr::Tensor(_, _) => format!("({})", b.render()),
                    _ => b.render(),
                };
                format!("{lhs} * {rhs}")
            }
            Expr::Apply(f, e) => format!("{}({})", f.render(), e.render()),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

// ---------------------------------------------------------------------------
// Lexer and parser.
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Name(String),
    Functor(Functor),
    Plus,
    Star,
    LParen,
    RParen,
}

struct Lexer<'a> {
    text: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer {
            text: text.as_bytes(),
            pos: 0,
        }
    }

    fn error(&self, expected: &str) -> ExprError {
        let found = if self.pos < self.text.len() {
            (self.text[self.pos] as char).to_string()
        } else {
            "end of input".to_string()
        };
        ExprError::Parse {
            position: self.pos,
            expected: expected.to_string(),
            found,
        }
    }

    fn next_token(&mut self) -> Result<Option<(usize, Token)>, ExprError> {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        if self.pos >= self.text.len() {
            return Ok(None);
        }
        let start = self.pos;
        let c = self.text[self.pos];
        let token = match c {
            b'+' => {
                self.pos += 1;
                Token::Plus
            }
            b'*' => {
                self.pos += 1;
                Token::Star
            }
            b'(' => {
                self.pos += 1;
                Token::LParen
            }
            b')' => {
                self.pos += 1;
                Token::RParen
            }
            b'0'..=b'9' => {
                // Irreducible name: digits then one of `+`, `-`, `_0`,
                // or a trailing lowercase letter.
                let mut name = String::new();
                while self.pos < self.text.len() && self.text[self.pos].is_ascii_digit() {
                    name.push(self.text[self.pos] as char);
                    self.pos += 1;
                }
                if self.pos < self.text.len() {
                    match self.text[self.pos] {
                        b'+' | b'-' => {
                            name.push(self.text[self.pos] as char);
                            self.pos += 1;
                        }
                        b'_' => {
                            name.push('_');
                            self.pos += 1;
                            while self.pos < self.text.len() && self.text[self.pos].is_ascii_digit()
                            {
                                name.push(self.text[self.pos] as char);
                                self.pos += 1;
                            }
                        }
                        b'a'..=b'z' => {
                            name.push(self.text[self.pos] as char);
                            self.pos += 1;
                        }
                        _ => {}
                    }
                }
                Token::Name(name)
            }
            b'A'..=b'Z' | b'a'..=b'z' => {
                let mut word = String::new();
                while self.pos < self.text.len() && (self.text[self.pos].is_ascii_alphanumeric()) {
                    word.push(self.text[self.pos] as char);
                    self.pos += 1;
                }
                let functor = match word.as_str() {
                    "S2" => Functor::Sym2,
                    "L2" => Functor::Alt2,
                    "S3" => Functor::Sym3,
                    "L3" => Functor::Alt3,
                    "M3" => Functor::Mid3,
                    "Dual" => Functor::Dual,
                    "Res" | "Ind" => {
                        if self.pos >= self.text.len() || self.text[self.pos] != b'[' {
                            return Err(self.error("`[` after Res/Ind"));
                        }
                        self.pos += 1;
                        let mut target = String::new();
                        while self.pos < self.text.len() && self.text[self.pos] != b']' {
                            target.push(self.text[self.pos] as char);
                            self.pos += 1;
                        }
                        if self.pos >= self.text.len() {
                            return Err(self.error("`]`"));
                        }
                        self.pos += 1;
                        if word == "Res" {
                            if target != "H" && target != "K" {
                                return Err(ExprError::Parse {
                                    position: start,
                                    expected: "Res[H] or Res[K]".into(),
                                    found: format!("Res[{target}]"),
                                });
                            }
                            Functor::Res(target)
                        } else {
                            if target != "G" {
                                return Err(ExprError::Parse {
                                    position: start,
                                    expected: "Ind[G]".into(),
                                    found: format!("Ind[{target}]"),
                                });
                            }
                            Functor::Ind
                        }
                    }
                    _ => {
                        return Err(ExprError::Parse {
                            position: start,
                            expected: "one of S2, L2, S3, L3, M3, Dual, Res[...], Ind[G]".into(),
                            found: word,
                        })
                    }
                };
                Token::Functor(functor)
            }
            _ => return Err(self.error("a name, functor, `(`, `+` or `*`")),
        };
        Ok(Some((start, token)))
    }
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    cursor: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.cursor).map(|(_, t)| t)
    }

    fn advance(&mut self) -> Option<(usize, Token)> {
        let t = self.tokens.get(self.cursor).cloned();
        self.cursor += 1;
        t
    }

    fn error(&self, expected: &str) -> ExprError {
        let (position, found) = match self.tokens.get(self.cursor) {
            Some((p, t)) => (*p, format!("{t:?}")),
            None => (self.len, "end of input".to_string()),
        };
        ExprError::Parse {
            position,
            expected: expected.to_string(),
            found,
        }
    }

    fn parse_expr(&mut self) -> Result<Expr, ExprError> {
        let mut node = self.parse_term()?;
        while matches!(self.peek(), Some(Token::Plus)) {
            self.advance();
            let rhs = self.parse_term()?;
            node = Expr::Sum(Box::new(node), Box::new(rhs));
        }
        Ok(node)
    }

    fn parse_term(&mut self) -> Result<Expr, ExprError> {
        let mut node = self.parse_factor()?;
        while matches!(self.peek(), Some(Token::Star)) {
            self.advance();
            let rhs = self.parse_factor()?;
            node = Expr::Tensor(Box::new(node), Box::new(rhs));
        }
        Ok(node)
    }

    fn parse_factor(&mut self) -> Result<Expr, ExprError> {
        match self.advance() {
            Some((_, Token::Name(name))) => Ok(Expr::Leaf(name)),
            Some((_, Token::Functor(f))) => {
                if !matches!(self.peek(), Some(Token::LParen)) {
                    return Err(self.error("`(` after functor"));
                }
                self.advance();
                let inner = self.parse_expr()?;
                if !matches!(self.peek(), Some(Token::RParen)) {
                    return Err(self.error("`)`"));
                }
                self.advance();
                Ok(Expr::Apply(f, Box::new(inner)))
            }
            Some((_, Token::LParen)) => {
                let inner = self.parse_expr()?;
                if !matches!(self.peek(), Some(Token::RParen)) {
                    return Err(self.error("`)`"));
                }
                self.advance();
                Ok(inner)
            }
            _ => {
                self.cursor = self.cursor.saturating_sub(1);
                Err(self.error("a name, functor or `(`"))
            }
        }
    }
}

/// Parses a query into its syntax tree.
pub fn parse_expression(text: &str) -> Result<Expr, ExprError> {
    let mut lexer = Lexer::new(text);
    let mut tokens = Vec::new();
    while let Some(t) = lexer.next_token()? {
        tokens.push(t);
    }
    let mut parser = Parser {
        tokens,
        cursor: 0,
        len: text.len(),
    };
    let expr = parser.parse_expr()?;
    if parser.cursor != parser.tokens.len() {
        return Err(parser.error("end of input, `+` or `*`"));
    }
    Ok(expr)
}

// ---------------------------------------------------------------------------
// Evaluation.
// ---------------------------------------------------------------------------

/// Which group an (sub)expression lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ambient {
    G,
    H,
    K,
}

impl Ambient {
    pub fn name(self) -> &'static str {
        match self {
            Ambient::G => "G",
            Ambient::H => "H",
            Ambient::K => "K",
        }
    }
}

/// Everything evaluation needs: the three groups, their aligned character
/// tables, and the subgroup embeddings.
pub struct EvalContext {
    pub g: GroupContext,
    pub h: GroupContext,
    pub k: GroupContext,
    pub tg: CharacterTable,
    pub th: CharacterTable,
    pub tk: CharacterTable,
    pub h_embedding: Vec<u32>,
    pub k_embedding: Vec<u32>,
}

impl EvalContext {
    pub fn new(prime: u64) -> Result<EvalContext, ExprError> {
        let g = octa::octahedral_group();
        let h = octa::semidihedral_group();
        let k = octa::lepton_group();
        let mut tg = character_table(&g.group, prime)?;
        align_g_labels(&mut tg, &g)?;
        let mut th = character_table(&h.group, prime)?;
        align_h_labels(&mut th, &h)?;
        let mut tk = character_table(&k.group, prime)?;
        align_k_labels(&mut tk, &k)?;
        let h_embedding = g.group.embedding_of(&h.group)?;
        let k_embedding = g.group.embedding_of(&k.group)?;
        Ok(EvalContext {
            g,
            h,
            k,
            tg,
            th,
            tk,
            h_embedding,
            k_embedding,
        })
    }

    fn context(&self, a: Ambient) -> (&GroupContext, &CharacterTable) {
        match a {
            Ambient::G => (&self.g, &self.tg),
            Ambient::H => (&self.h, &self.th),
            Ambient::K => (&self.k, &self.tk),
        }
    }

    fn unknown_name(&self, name: &str, ambient: Ambient) -> ExprError {
        let (_, table) = self.context(ambient);
        ExprError::UnknownName {
            name: name.to_string(),
            valid: table.labels().join(", "),
        }
    }
}

/// Groups a leaf name could belong to.
fn leaf_groups(ctx: &EvalContext, name: &str) -> Vec<Ambient> {
    let mut out = Vec::new();
    if ctx.tg.by_label(name).is_some() {
        out.push(Ambient::G);
    }
    if ctx.th.by_label(name).is_some() {
        out.push(Ambient::H);
    }
    if ctx.tk.by_label(name).is_some() {
        out.push(Ambient::K);
    }
    out
}

/// Resolves the ambient group of an expression. Bare names shared between
/// the order-48 group and the order-6 subgroup resolve to the former; inside
/// `Ind[G](...)` they resolve to the subgroup.
fn resolve_ambient(
    ctx: &EvalContext,
    expr: &Expr,
    prefer: &[Ambient],
) -> Result<Ambient, ExprError> {
    let set = possible_ambients(ctx, expr)?;
    for p in prefer {
        if set.contains(p) {
            return Ok(*p);
        }
    }
    set.first().copied().ok_or(ExprError::MixedAmbient)
}

fn possible_ambients(ctx: &EvalContext, expr: &Expr) -> Result<Vec<Ambient>, ExprError> {
    Ok(match expr {
        Expr::Leaf(name) => {
            let groups = leaf_groups(ctx, name);
            if groups.is_empty() {
                return Err(ExprError::UnknownName {
                    name: name.clone(),
                    valid: format!(
                        "{} (G); {} (H); {} (K)",
                        ctx.tg.labels().join(", "),
                        ctx.th.labels().join(", "),
                        ctx.tk.labels().join(", ")
                    ),
                });
            }
            groups
        }
        Expr::Sum(a, b) | Expr::Tensor(a, b) => {
            let left = possible_ambients(ctx, a)?;
            let right = possible_ambients(ctx, b)?;
            let both: Vec<Ambient> = left.into_iter().filter(|x| right.contains(x)).collect();
            if both.is_empty() {
                return Err(ExprError::MixedAmbient);
            }
            both
        }
        Expr::Apply(Functor::Res(target), _) => {
            vec![if target == "H" {
                Ambient::H
            } else {
                Ambient::K
            }]
        }
        Expr::Apply(Functor::Ind, _) => vec![Ambient::G],
        Expr::Apply(_, inner) => possible_ambients(ctx, inner)?,
    })
}

/// Evaluates an expression to a virtual character on its ambient group.
fn eval_character(
    ctx: &EvalContext,
    expr: &Expr,
    ambient: Ambient,
) -> Result<Character, ExprError> {
    let (gc, table) = ctx.context(ambient);
    let grp = &gc.group;
    Ok(match expr {
        Expr::Leaf(name) => table
            .by_label(name)
            .ok_or_else(|| ctx.unknown_name(name, ambient))?
            .clone(),
        Expr::Sum(a, b) => chartab::add_characters(
            &eval_character(ctx, a, ambient)?,
            &eval_character(ctx, b, ambient)?,
        ),
        Expr::Tensor(a, b) => chartab::tensor(
            &eval_character(ctx, a, ambient)?,
            &eval_character(ctx, b, ambient)?,
        ),
        Expr::Apply(Functor::Sym2, e) => chartab::sym2(grp, &eval_character(ctx, e, ambient)?),
        Expr::Apply(Functor::Alt2, e) => chartab::alt2(grp, &eval_character(ctx, e, ambient)?),
        Expr::Apply(Functor::Sym3, e) => chartab::sym3(grp, &eval_character(ctx, e, ambient)?),
        Expr::Apply(Functor::Alt3, e) => chartab::alt3(grp, &eval_character(ctx, e, ambient)?),
        Expr::Apply(Functor::Mid3, e) => chartab::mid3(grp, &eval_character(ctx, e, ambient)?),
        Expr::Apply(Functor::Dual, e) => eval_character(ctx, e, ambient)?.dual(),
        Expr::Apply(Functor::Res(target), e) => {
            let inner = eval_character(ctx, e, Ambient::G)?;
            if target == "H" {
                chartab::restrict(&ctx.g.group, &inner, &ctx.h.group, &ctx.h_embedding)
            } else {
                chartab::restrict(&ctx.g.group, &inner, &ctx.k.group, &ctx.k_embedding)
            }
        }
        Expr::Apply(Functor::Ind, e) => {
            let sub_ambient = resolve_ambient(ctx, e, &[Ambient::H, Ambient::K])?;
            let inner = eval_character(ctx, e, sub_ambient)?;
            match sub_ambient {
                Ambient::H => chartab::induce(&ctx.h.group, &inner, &ctx.g.group, &ctx.h_embedding),
                Ambient::K => chartab::induce(&ctx.k.group, &inner, &ctx.g.group, &ctx.k_embedding),
                Ambient::G => return Err(ExprError::BadInduction),
            }
        }
    })
}

/// Parses and evaluates a query; the result is the multiplicity vector in
/// the ambient group's irreducibles.
pub fn eval_expression(
    ctx: &EvalContext,
    expr: &Expr,
) -> Result<(Ambient, Decomposition), ExprError> {
    let ambient = resolve_ambient(ctx, expr, &[Ambient::G])?;
    let chi = eval_character(ctx, expr, ambient)?;
    let (gc, table) = ctx.context(ambient);
    let decomposition = chartab::decompose(&gc.group, table, &chi)?;
    Ok((ambient, decomposition))
}

pub fn eval_str(ctx: &EvalContext, text: &str) -> Result<(Ambient, Decomposition), ExprError> {
    let expr = parse_expression(text)?;
    eval_expression(ctx, &expr)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::DEFAULT_PRIME;
    use proptest::prelude::*;
    use std::collections::BTreeMap;
    use std::sync::OnceLock;

    fn ctx() -> &'static EvalContext {
        static CTX: OnceLock<EvalContext> = OnceLock::new();
        CTX.get_or_init(|| EvalContext::new(DEFAULT_PRIME).unwrap())
    }

    fn decomp(text: &str) -> BTreeMap<String, u32> {
        eval_str(ctx(), text).unwrap().1.as_map()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(
            parse_expression("2+ * 3+").unwrap(),
            Expr::Tensor(
                Box::new(Expr::Leaf("2+".into())),
                Box::new(Expr::Leaf("3+".into()))
            )
        );
        assert_eq!(
            parse_expression("S3(3+)").unwrap(),
            Expr::Apply(Functor::Sym3, Box::new(Expr::Leaf("3+".into())))
        );
        assert_eq!(
            parse_expression("Res[H](4_0)").unwrap(),
            Expr::Apply(Functor::Res("H".into()), Box::new(Expr::Leaf("4_0".into())))
        );
    }

    #[test]
    fn parse_precedence_and_whitespace() {
        // `*` binds tighter than `+`.
        let a = parse_expression("1+ + 2+ * 3+").unwrap();
        assert_eq!(
            a,
            Expr::Sum(
                Box::new(Expr::Leaf("1+".into())),
                Box::new(Expr::Tensor(
                    Box::new(Expr::Leaf("2+".into())),
                    Box::new(Expr::Leaf("3+".into()))
                ))
            )
        );
        assert_eq!(
            parse_expression("2++3-").unwrap(),
            parse_expression("2+ + 3-").unwrap()
        );
        assert_eq!(
            parse_expression("(1+ + 2+) * 3+").unwrap(),
            Expr::Tensor(
                Box::new(parse_expression("1+ + 2+").unwrap()),
                Box::new(Expr::Leaf("3+".into()))
            )
        );
    }

    #[test]
    fn parse_errors_carry_position_and_expectation() {
        let err = parse_expression("2+ *").unwrap_err();
        match err {
            ExprError::Parse {
                position, expected, ..
            } => {
                assert_eq!(position, 4);
                assert!(expected.contains("name"));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_expression("Res(4_0)").unwrap_err(),
            ExprError::Parse { .. }
        ));
        assert!(matches!(
            parse_expression("Q2(3+)").unwrap_err(),
            ExprError::Parse { .. }
        ));
        assert!(matches!(
            parse_expression("2+ ** 3+").unwrap_err(),
            ExprError::Parse { .. }
        ));
    }

    #[test]
    fn degenerate_inputs_error_cleanly() {
        for bad in ["", "()", "Res[H]()", "+ 2+", "2+ +", "(2+", "S2 3+"] {
            assert!(
                matches!(parse_expression(bad), Err(ExprError::Parse { .. })),
                "input `{bad}` must be a parse error"
            );
        }
        // Nested parentheses collapse.
        assert_eq!(parse_expression("((2+))").unwrap(), Expr::Leaf("2+".into()));
    }

    #[test]
    fn unknown_name_lists_valid_labels() {
        let err = eval_str(ctx(), "5+ * 3+").unwrap_err();
        match err {
            ExprError::UnknownName { name, valid } => {
                assert_eq!(name, "5+");
                assert!(valid.contains("4_0"));
                assert!(valid.contains("2b"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn eval_examples() {
        assert_eq!(
            decomp("2+ * 2+"),
            BTreeMap::from([("1-".into(), 1), ("3+".into(), 1)])
        );
        assert_eq!(
            decomp("L2(3+ + 4_0)"),
            BTreeMap::from([
                ("1-".into(), 1),
                ("2_0".into(), 1),
                ("3-".into(), 2),
                ("2+".into(), 1),
                ("2-".into(), 1),
                ("4_0".into(), 2),
            ])
        );
        let (ambient, d) = eval_str(ctx(), "2b * 2c").unwrap();
        assert_eq!(ambient, Ambient::H);
        assert_eq!(
            d.as_map(),
            BTreeMap::from([("1a".into(), 1), ("1d".into(), 1), ("2a".into(), 1)])
        );
    }

    #[test]
    fn restriction_and_induction_change_ambient() {
        let (ambient, d) = eval_str(ctx(), "Res[H](4_0)").unwrap();
        assert_eq!(ambient, Ambient::H);
        assert_eq!(
            d.as_map(),
            BTreeMap::from([("2b".into(), 1), ("2c".into(), 1)])
        );
        let (ambient, d) = eval_str(ctx(), "Ind[G](2b)").unwrap();
        assert_eq!(ambient, Ambient::G);
        assert_eq!(
            d.as_map(),
            BTreeMap::from([("2+".into(), 1), ("4_0".into(), 1)])
        );
        // The sign-breaking restriction lands on 3-; 3+ keeps the trivial part.
        let (ambient, d) = eval_str(ctx(), "Res[K](3+)").unwrap();
        assert_eq!(ambient, Ambient::K);
        assert_eq!(
            d.as_map(),
            BTreeMap::from([("1+".into(), 1), ("2_0".into(), 1)])
        );
        let (_, d) = eval_str(ctx(), "Res[K](3-)").unwrap();
        assert_eq!(
            d.as_map(),
            BTreeMap::from([("1-".into(), 1), ("2_0".into(), 1)])
        );
        // Round trip through the order-6 subgroup.
        let (ambient, d) = eval_str(ctx(), "Ind[G](Res[K](1+))").unwrap();
        assert_eq!(ambient, Ambient::G);
        assert_eq!(d.as_map().get("1+"), Some(&1));
    }

    #[test]
    fn formal_sums_evaluate_linearly() {
        let pairs = [
            ("2+ + 3-", "2+", "3-"),
            ("4_0 + 4_0", "4_0", "4_0"),
            ("S2(2_0) + L2(2_0)", "S2(2_0)", "L2(2_0)"),
        ];
        for (sum, a, b) in pairs {
            let mut merged = decomp(a);
            for (k, v) in decomp(b) {
                *merged.entry(k).or_insert(0) += v;
            }
            assert_eq!(decomp(sum), merged, "{sum}");
        }
    }

    fn leaf_strategy() -> impl Strategy<Value = Expr> {
        prop_oneof![
            Just(Expr::Leaf("1+".into())),
            Just(Expr::Leaf("1-".into())),
            Just(Expr::Leaf("2_0".into())),
            Just(Expr::Leaf("2+".into())),
            Just(Expr::Leaf("3-".into())),
            Just(Expr::Leaf("4_0".into())),
        ]
    }

    fn expr_strategy() -> impl Strategy<Value = Expr> {
        leaf_strategy().prop_recursive(4, 24, 4, |inner| {
            prop_oneof![
                (inner.clone(), inner.clone())
                    .prop_map(|(a, b)| Expr::Sum(Box::new(a), Box::new(b))),
                (inner.clone(), inner.clone())
                    .prop_map(|(a, b)| Expr::Tensor(Box::new(a), Box::new(b))),
                inner
                    .clone()
                    .prop_map(|e| Expr::Apply(Functor::Sym2, Box::new(e))),
                inner
                    .clone()
                    .prop_map(|e| Expr::Apply(Functor::Mid3, Box::new(e))),
                inner
                    .clone()
                    .prop_map(|e| Expr::Apply(Functor::Res("H".into()), Box::new(e))),
                inner.prop_map(|e| Expr::Apply(Functor::Dual, Box::new(e))),
            ]
        })
    }

    proptest! {
        #[test]
        fn render_parse_round_trip(e in expr_strategy()) {
            let rendered = e.render();
            let reparsed = parse_expression(&rendered).unwrap();
            prop_assert_eq!(reparsed, e);
        }
    }
}
