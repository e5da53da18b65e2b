//! The `.euclid` front end: lexer, parser, and lowering to board macros.
//!
//! The surface language binds named points and derived objects and lowers
//! each construct to the corresponding macro: `line` to the distant-points
//! line construction, `midpoint`/`perp_bisector` to the bisector chains,
//! `perp`/`parallel` to the perpendicular and parallel families,
//! `intersect` to crossing, circle–line or circle–circle intersection, and
//! `translate` to the parallelogram translation.
//!
//! Grammar (comments run from `#` to end of line):
//!
//! ```text
//! program := stmt*
//! stmt    := "point" IDENT "=" "(" NUM "," NUM ")" ";"
//!          | "let" IDENT "=" expr ";"
//!          | "output" IDENT ";"
//!          | "assert_on" "(" IDENT "," IDENT ")" ";"
//! expr    := "line" "(" IDENT "," IDENT ")"
//!          | "circle" "(" IDENT "," IDENT ")"
//!          | "midpoint" "(" IDENT "," IDENT ")"
//!          | "perp_bisector" "(" IDENT "," IDENT ")"
//!          | "perp" "(" IDENT "," IDENT ")"
//!          | "parallel" "(" IDENT "," IDENT ")"
//!          | "intersect" "(" IDENT "," IDENT ")" "[" ("0"|"1") "]"
//!          | "translate" "(" IDENT "," IDENT "," IDENT ")"
//! ```

use std::collections::BTreeMap;
use std::fmt;

use crate::config::Config;
use crate::constructions::{
    circle_circle_intersect, circle_line_intersect, line_through, parallel_through,
    perpendicular_bisector, perpendicular_through, translate_segment, CircleSpec,
    ConstructionError, LineHandle, Toolkit,
};
use crate::numerics::Scalar;
use crate::trace::{PointId, Trace};

// ----- source locations ------------------------------------------------------

/// Byte range in the source text plus its human 1-based position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SourceSpan {
    pub start: usize,
    pub end: usize,
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for SourceSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

/// Front-end failure: lexing, parsing, name resolution, typing, or lowering.
#[derive(Debug, Clone, thiserror::Error)]
#[error("{span}: {kind}: {message}")]
pub struct CompileError {
    pub kind: CompileErrorKind,
    pub message: String,
    pub span: SourceSpan,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompileErrorKind {
    Lex,
    Syntax,
    DuplicateBinding,
    UnboundName,
    TypeMismatch,
    NoIntersection,
    IndexOutOfRange,
    AssertionFailed,
    Construction,
}

impl fmt::Display for CompileErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CompileErrorKind::Lex => "lex error",
            CompileErrorKind::Syntax => "syntax error",
            CompileErrorKind::DuplicateBinding => "duplicate binding",
            CompileErrorKind::UnboundName => "unbound name",
            CompileErrorKind::TypeMismatch => "type mismatch",
            CompileErrorKind::NoIntersection => "no intersection",
            CompileErrorKind::IndexOutOfRange => "index out of range",
            CompileErrorKind::AssertionFailed => "assertion failed",
            CompileErrorKind::Construction => "construction failed",
        };
        f.write_str(s)
    }
}

fn err(kind: CompileErrorKind, span: SourceSpan, message: impl Into<String>) -> CompileError {
    CompileError { kind, message: message.into(), span }
}

// ----- AST -------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Program {
    pub statements: Vec<Stmt>,
}

#[derive(Debug, Clone, Eq)]
pub struct Stmt {
    pub span: SourceSpan,
    pub kind: StmtKind,
}

/// Statements compare structurally; spans are locations, not content.
impl PartialEq for Stmt {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StmtKind {
    /// `point A = (x, y);` — coordinates keep their literal spelling.
    PointDecl { name: String, x: String, y: String },
    Let { name: String, expr: Expr },
    Output { name: String },
    /// `assert_on(P, l);` — `P` must lie on the object bound to `l`.
    AssertOn { point: String, object: String },
}

#[derive(Debug, Clone, Eq)]
pub struct Expr {
    pub span: SourceSpan,
    pub kind: ExprKind,
}

impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprKind {
    Line(String, String),
    Circle(String, String),
    Midpoint(String, String),
    PerpBisector(String, String),
    Perp(String, String),
    Parallel(String, String),
    Intersect(String, String, u8),
    Translate(String, String, String),
}

// ----- pretty printer --------------------------------------------------------

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for stmt in &self.statements {
            match &stmt.kind {
                StmtKind::PointDecl { name, x, y } => writeln!(f, "point {name} = ({x}, {y});")?,
                StmtKind::Let { name, expr } => writeln!(f, "let {name} = {expr};")?,
                StmtKind::Output { name } => writeln!(f, "output {name};")?,
                StmtKind::AssertOn { point, object } => writeln!(f, "assert_on({point}, {object});")?,
            }
        }
        Ok(())
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ExprKind::Line(a, b) => write!(f, "line({a}, {b})"),
            ExprKind::Circle(a, b) => write!(f, "circle({a}, {b})"),
            ExprKind::Midpoint(a, b) => write!(f, "midpoint({a}, {b})"),
            ExprKind::PerpBisector(a, b) => write!(f, "perp_bisector({a}, {b})"),
            ExprKind::Perp(a, b) => write!(f, "perp({a}, {b})"),
            ExprKind::Parallel(a, b) => write!(f, "parallel({a}, {b})"),
            ExprKind::Intersect(a, b, i) => write!(f, "intersect({a}, {b})[{i}]"),
            ExprKind::Translate(p, q, t) => write!(f, "translate({p}, {q}, {t})"),
        }
    }
}

// ----- lexer -----------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Num(String),
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Semi,
    Eq,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "identifier {s:?}"),
            Tok::Num(s) => write!(f, "number {s:?}"),
            Tok::LParen => f.write_str("'('"),
            Tok::RParen => f.write_str("')'"),
            Tok::LBracket => f.write_str("'['"),
            Tok::RBracket => f.write_str("']'"),
            Tok::Comma => f.write_str("','"),
            Tok::Semi => f.write_str("';'"),
            Tok::Eq => f.write_str("'='"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

fn lex(source: &str) -> Result<Vec<(Tok, SourceSpan)>, CompileError> {
    let bytes = source.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let (mut line, mut col) = (1usize, 1usize);
    let span_at = |start: usize, end: usize, line: usize, col: usize| SourceSpan { start, end, line, col };
    while i < bytes.len() {
        let c = bytes[i] as char;
        let (l0, c0, start) = (line, col, i);
        match c {
            '\n' => {
                i += 1;
                line += 1;
                col = 1;
            }
            ' ' | '\t' | '\r' => {
                i += 1;
                col += 1;
            }
            '#' => {
                while i < bytes.len() && bytes[i] != b'\n' {
                    i += 1;
                }
            }
            '(' | ')' | '[' | ']' | ',' | ';' | '=' => {
                let tok = match c {
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    '[' => Tok::LBracket,
                    ']' => Tok::RBracket,
                    ',' => Tok::Comma,
                    ';' => Tok::Semi,
                    _ => Tok::Eq,
                };
                out.push((tok, span_at(start, i + 1, l0, c0)));
                i += 1;
                col += 1;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < bytes.len() && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                    col += 1;
                }
                out.push((Tok::Ident(source[start..i].to_owned()), span_at(start, i, l0, c0)));
            }
            c if c.is_ascii_digit() || c == '-' || c == '+' || c == '.' => {
                i += 1;
                col += 1;
                while i < bytes.len() {
                    let d = bytes[i] as char;
                    let prev = bytes[i - 1] as char;
                    let exp_sign = (d == '-' || d == '+') && (prev == 'e' || prev == 'E');
                    if d.is_ascii_digit() || d == '.' || d == 'e' || d == 'E' || exp_sign {
                        i += 1;
                        col += 1;
                    } else {
                        break;
                    }
                }
                let text = &source[start..i];
                if Scalar::from_decimal(text, 64).is_err() {
                    return Err(err(
                        CompileErrorKind::Lex,
                        span_at(start, i, l0, c0),
                        format!("malformed number literal {text:?}"),
                    ));
                }
                out.push((Tok::Num(text.to_owned()), span_at(start, i, l0, c0)));
            }
            other => {
                return Err(err(
                    CompileErrorKind::Lex,
                    span_at(start, i + 1, l0, c0),
                    format!("unexpected character {other:?}"),
                ));
            }
        }
    }
    out.push((Tok::Eof, span_at(bytes.len(), bytes.len(), line, col)));
    Ok(out)
}

// ----- parser ----------------------------------------------------------------

struct Parser {
    toks: Vec<(Tok, SourceSpan)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &(Tok, SourceSpan) {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> (Tok, SourceSpan) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: &Tok) -> Result<SourceSpan, CompileError> {
        let (tok, span) = self.next();
        if &tok == want {
            Ok(span)
        } else {
            Err(err(CompileErrorKind::Syntax, span, format!("expected {want}, found {tok}")))
        }
    }

    fn ident(&mut self) -> Result<(String, SourceSpan), CompileError> {
        let (tok, span) = self.next();
        match tok {
            Tok::Ident(s) => Ok((s, span)),
            other => Err(err(CompileErrorKind::Syntax, span, format!("expected identifier, found {other}"))),
        }
    }

    fn num(&mut self) -> Result<String, CompileError> {
        let (tok, span) = self.next();
        match tok {
            Tok::Num(s) => Ok(s),
            other => Err(err(CompileErrorKind::Syntax, span, format!("expected number, found {other}"))),
        }
    }

    fn args(&mut self, n: usize) -> Result<Vec<String>, CompileError> {
        self.expect(&Tok::LParen)?;
        let mut names = Vec::with_capacity(n);
        for k in 0..n {
            if k > 0 {
                self.expect(&Tok::Comma)?;
            }
            names.push(self.ident()?.0);
        }
        self.expect(&Tok::RParen)?;
        Ok(names)
    }

    fn expr(&mut self) -> Result<Expr, CompileError> {
        let (head, span) = self.ident()?;
        let kind = match head.as_str() {
            "line" | "circle" | "midpoint" | "perp_bisector" | "perp" | "parallel" => {
                let a = self.args(2)?;
                match head.as_str() {
                    "line" => ExprKind::Line(a[0].clone(), a[1].clone()),
                    "circle" => ExprKind::Circle(a[0].clone(), a[1].clone()),
                    "midpoint" => ExprKind::Midpoint(a[0].clone(), a[1].clone()),
                    "perp_bisector" => ExprKind::PerpBisector(a[0].clone(), a[1].clone()),
                    "perp" => ExprKind::Perp(a[0].clone(), a[1].clone()),
                    _ => ExprKind::Parallel(a[0].clone(), a[1].clone()),
                }
            }
            "translate" => {
                let a = self.args(3)?;
                ExprKind::Translate(a[0].clone(), a[1].clone(), a[2].clone())
            }
            "intersect" => {
                let a = self.args(2)?;
                self.expect(&Tok::LBracket)?;
                let (tok, ispan) = self.next();
                let idx = match tok {
                    Tok::Num(ref s) if s == "0" => 0,
                    Tok::Num(ref s) if s == "1" => 1,
                    other => {
                        return Err(err(
                            CompileErrorKind::Syntax,
                            ispan,
                            format!("intersection index must be 0 or 1, found {other}"),
                        ))
                    }
                };
                self.expect(&Tok::RBracket)?;
                ExprKind::Intersect(a[0].clone(), a[1].clone(), idx)
            }
            other => {
                return Err(err(CompileErrorKind::Syntax, span, format!("unknown construction {other:?}")));
            }
        };
        Ok(Expr { span, kind })
    }

    fn stmt(&mut self) -> Result<Option<Stmt>, CompileError> {
        let (tok, span) = self.peek().clone();
        let kind = match tok {
            Tok::Eof => return Ok(None),
            Tok::Ident(word) => match word.as_str() {
                "point" => {
                    self.next();
                    let (name, _) = self.ident()?;
                    self.expect(&Tok::Eq)?;
                    self.expect(&Tok::LParen)?;
                    let x = self.num()?;
                    self.expect(&Tok::Comma)?;
                    let y = self.num()?;
                    self.expect(&Tok::RParen)?;
                    StmtKind::PointDecl { name, x, y }
                }
                "let" => {
                    self.next();
                    let (name, _) = self.ident()?;
                    self.expect(&Tok::Eq)?;
                    let expr = self.expr()?;
                    StmtKind::Let { name, expr }
                }
                "output" => {
                    self.next();
                    let (name, _) = self.ident()?;
                    StmtKind::Output { name }
                }
                "assert_on" => {
                    self.next();
                    let a = self.args(2)?;
                    StmtKind::AssertOn { point: a[0].clone(), object: a[1].clone() }
                }
                other => {
                    return Err(err(CompileErrorKind::Syntax, span, format!("unknown statement keyword {other:?}")));
                }
            },
            other => {
                return Err(err(CompileErrorKind::Syntax, span, format!("expected a statement, found {other}")));
            }
        };
        self.expect(&Tok::Semi)?;
        Ok(Some(Stmt { span, kind }))
    }
}

/// Parse `.euclid` source text into an AST.
pub fn parse(source: &str) -> Result<Program, CompileError> {
    let toks = lex(source)?;
    let mut parser = Parser { toks, pos: 0 };
    let mut statements = Vec::new();
    while let Some(stmt) = parser.stmt()? {
        statements.push(stmt);
    }
    Ok(Program { statements })
}

// ----- lowering --------------------------------------------------------------

/// A bound value during lowering.
enum Value {
    Point(PointId),
    Line(LineHandle),
    Circle(CircleSpec),
}

impl Value {
    fn type_name(&self) -> &'static str {
        match self {
            Value::Point(_) => "point",
            Value::Line(_) => "line",
            Value::Circle(_) => "circle",
        }
    }
}

/// Lowering result: the recorded trace plus the name of each output.
#[derive(Debug)]
pub struct Lowered {
    pub trace: Trace,
    /// Output names in declaration order.
    pub outputs: Vec<String>,
}

/// Execute a program on a fresh board, producing the instruction trace.
pub fn lower(program: &Program, config: &Config) -> Result<Lowered, CompileError> {
    let mut tk = Toolkit::new(config.clone());
    let mut env: BTreeMap<String, Value> = BTreeMap::new();
    let mut outputs = Vec::new();

    for stmt in &program.statements {
        lower_stmt(&mut tk, &mut env, &mut outputs, stmt)?;
    }
    Ok(Lowered { trace: tk.board.into_trace(), outputs })
}

fn lower_stmt(
    tk: &mut Toolkit,
    env: &mut BTreeMap<String, Value>,
    outputs: &mut Vec<String>,
    stmt: &Stmt,
) -> Result<(), CompileError> {
    let span = stmt.span;
    match &stmt.kind {
        StmtKind::PointDecl { name, x, y } => {
            check_unbound(env, name, span)?;
            let bits = tk.board.config().precision_bits;
            let xv = Scalar::from_decimal(x, bits)
                .map_err(|e| err(CompileErrorKind::Lex, span, e.to_string()))?;
            let yv = Scalar::from_decimal(y, bits)
                .map_err(|e| err(CompileErrorKind::Lex, span, e.to_string()))?;
            let id = tk.board.given_point(&xv, &yv);
            env.insert(name.clone(), Value::Point(id));
        }
        StmtKind::Let { name, expr } => {
            check_unbound(env, name, span)?;
            let value = lower_expr(tk, env, expr)?;
            env.insert(name.clone(), value);
        }
        StmtKind::Output { name } => {
            let value = lookup(env, name, span)?;
            let (points, sticks) = match value {
                Value::Point(id) => (vec![*id], vec![]),
                Value::Line(l) => (l.mark_points(), l.stick_ids()),
                Value::Circle(c) => (vec![c.center, c.on], vec![]),
            };
            tk.board.output(name, points, sticks);
            outputs.push(name.clone());
        }
        StmtKind::AssertOn { point, object } => {
            let &Value::Point(p) = lookup(env, point, span)? else {
                return Err(err(
                    CompileErrorKind::TypeMismatch,
                    span,
                    format!("assert_on needs a point first, {point} is not one"),
                ));
            };
            let residual = match lookup(env, object, span)? {
                Value::Line(l) => l.carrier.signed_dist(tk.pt(p)).abs(),
                Value::Circle(c) => {
                    (c.circle2(tk).center.dist(tk.pt(p)) - c.radius(tk)).abs()
                }
                Value::Point(_) => {
                    return Err(err(
                        CompileErrorKind::TypeMismatch,
                        span,
                        format!("assert_on needs a line or circle second, {object} is a point"),
                    ));
                }
            };
            if !tk.ctx().scalar_equal(&residual, &Scalar::zero(residual.precision())) {
                return Err(err(
                    CompileErrorKind::AssertionFailed,
                    span,
                    format!(
                        "{point} is not on {object} (residual {})",
                        residual.to_decimal_string(6)
                    ),
                ));
            }
        }
    }
    Ok(())
}

fn check_unbound(env: &BTreeMap<String, Value>, name: &str, span: SourceSpan) -> Result<(), CompileError> {
    if env.contains_key(name) {
        Err(err(CompileErrorKind::DuplicateBinding, span, format!("{name} is already bound")))
    } else {
        Ok(())
    }
}

fn lookup<'e>(
    env: &'e BTreeMap<String, Value>,
    name: &str,
    span: SourceSpan,
) -> Result<&'e Value, CompileError> {
    env.get(name)
        .ok_or_else(|| err(CompileErrorKind::UnboundName, span, format!("{name} is not bound")))
}

fn as_point(env: &BTreeMap<String, Value>, name: &str, span: SourceSpan) -> Result<PointId, CompileError> {
    match lookup(env, name, span)? {
        Value::Point(id) => Ok(*id),
        other => Err(err(
            CompileErrorKind::TypeMismatch,
            span,
            format!("{name} is a {}, expected a point", other.type_name()),
        )),
    }
}

fn as_line(env: &BTreeMap<String, Value>, name: &str, span: SourceSpan) -> Result<LineHandle, CompileError> {
    match lookup(env, name, span)? {
        Value::Line(l) => Ok(l.clone()),
        other => Err(err(
            CompileErrorKind::TypeMismatch,
            span,
            format!("{name} is a {}, expected a line", other.type_name()),
        )),
    }
}

fn construction(span: SourceSpan, e: ConstructionError) -> CompileError {
    let kind = match &e {
        ConstructionError::NoIntersection(_) | ConstructionError::CoincidentCircles => {
            CompileErrorKind::NoIntersection
        }
        _ => CompileErrorKind::Construction,
    };
    err(kind, span, e.to_string())
}

fn lower_expr(
    tk: &mut Toolkit,
    env: &mut BTreeMap<String, Value>,
    expr: &Expr,
) -> Result<Value, CompileError> {
    let span = expr.span;
    match &expr.kind {
        ExprKind::Line(a, b) => {
            let (a, b) = (as_point(env, a, span)?, as_point(env, b, span)?);
            let l = line_through(tk, a, b).map_err(|e| construction(span, e))?;
            Ok(Value::Line(l))
        }
        ExprKind::Circle(center, on) => {
            let (c, s) = (as_point(env, center, span)?, as_point(env, on, span)?);
            let spec = CircleSpec::new(tk, c, s).map_err(|e| construction(span, e))?;
            Ok(Value::Circle(spec))
        }
        ExprKind::Midpoint(a, b) => {
            let (a, b) = (as_point(env, a, span)?, as_point(env, b, span)?);
            let mut l = line_through(tk, a, b).map_err(|e| construction(span, e))?;
            let (_, mid) = perpendicular_bisector(tk, a, b, &mut l).map_err(|e| construction(span, e))?;
            Ok(Value::Point(mid))
        }
        ExprKind::PerpBisector(a, b) => {
            let (a, b) = (as_point(env, a, span)?, as_point(env, b, span)?);
            let mut l = line_through(tk, a, b).map_err(|e| construction(span, e))?;
            let (bis, _) = perpendicular_bisector(tk, a, b, &mut l).map_err(|e| construction(span, e))?;
            Ok(Value::Line(bis))
        }
        ExprKind::Perp(line, through) => {
            let mut l = as_line(env, line, span)?;
            let t = as_point(env, through, span)?;
            let p = perpendicular_through(tk, &mut l, t).map_err(|e| construction(span, e))?;
            Ok(Value::Line(p))
        }
        ExprKind::Parallel(line, through) => {
            let mut l = as_line(env, line, span)?;
            let t = as_point(env, through, span)?;
            let p = parallel_through(tk, &mut l, t).map_err(|e| construction(span, e))?;
            Ok(Value::Line(p))
        }
        ExprKind::Translate(p, q, t) => {
            let (p, q, t) = (as_point(env, p, span)?, as_point(env, q, span)?, as_point(env, t, span)?);
            let u = translate_segment(tk, p, q, t).map_err(|e| construction(span, e))?;
            Ok(Value::Point(u))
        }
        ExprKind::Intersect(a, b, idx) => {
            let hits = intersect_objects(tk, env, a, b, span)?;
            match hits.get(*idx as usize) {
                Some(&id) => Ok(Value::Point(id)),
                None => Err(err(
                    CompileErrorKind::IndexOutOfRange,
                    span,
                    format!("intersection has {} point(s), index {idx} does not exist", hits.len()),
                )),
            }
        }
    }
}

fn intersect_objects(
    tk: &mut Toolkit,
    env: &mut BTreeMap<String, Value>,
    a: &str,
    b: &str,
    span: SourceSpan,
) -> Result<Vec<PointId>, CompileError> {
    // Clone out the operands so the environment borrow ends before macros run.
    enum Obj {
        Line(LineHandle),
        Circle(CircleSpec),
    }
    let grab = |env: &BTreeMap<String, Value>, name: &str| -> Result<Obj, CompileError> {
        match lookup(env, name, span)? {
            Value::Line(l) => Ok(Obj::Line(l.clone())),
            Value::Circle(c) => Ok(Obj::Circle(*c)),
            Value::Point(_) => Err(err(
                CompileErrorKind::TypeMismatch,
                span,
                format!("{name} is a point; intersect needs lines or circles"),
            )),
        }
    };
    let (oa, ob) = (grab(env, a)?, grab(env, b)?);
    match (oa, ob) {
        (Obj::Line(mut la), Obj::Line(mut lb)) => {
            let p = tk.cross_lines(&mut la, &mut lb).map_err(|e| {
                let msg = e.to_string();
                err(CompileErrorKind::NoIntersection, span, msg)
            })?;
            Ok(vec![p])
        }
        (Obj::Circle(c), Obj::Line(mut l)) | (Obj::Line(mut l), Obj::Circle(c)) => {
            circle_line_intersect(tk, &c, &mut l).map_err(|e| construction(span, e))
        }
        (Obj::Circle(c1), Obj::Circle(c2)) => {
            circle_circle_intersect(tk, &c1, &c2).map_err(|e| construction(span, e))
        }
    }
}

/// Convenience: parse and lower in one step.
pub fn compile(source: &str, config: &Config) -> Result<Lowered, CompileError> {
    let program = parse(source)?;
    lower(&program, config)
}
