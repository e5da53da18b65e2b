//! Analytic oracle: classical compass-and-ruler semantics for `.euclid`
//! programs, evaluated with direct coordinate formulas, and the comparison
//! against the match-stick construction's trace outputs.
//!
//! The oracle never touches a board: it re-evaluates the program with ordinary
//! analytic geometry (lines through two points, quadratic intersections) and
//! checks that the constructive answer agrees per output, per coordinate,
//! within `ε_cmp`. Intersection candidate counts must agree exactly.

use std::collections::BTreeMap;
use std::fmt;

use crate::config::Config;
use crate::lang::{ExprKind, Program, StmtKind};
use crate::numerics::predicates::NumCtx;
use crate::numerics::{intersect, sort_points_lex, Circle2, Line2, Point2, Scalar};
use crate::trace::{Instr, Trace};

/// Failure while evaluating a program analytically or comparing results.
#[derive(Debug, thiserror::Error)]
pub enum OracleError {
    #[error("{name} is not bound")]
    UnboundName { name: String },
    #[error("{name} has the wrong type: {message}")]
    TypeMismatch { name: String, message: String },
    #[error("no intersection: {0}")]
    NoIntersection(String),
    #[error("intersection has {found} point(s), index {index} does not exist")]
    IndexOutOfRange { index: u8, found: usize },
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("assertion failed: {0}")]
    AssertionFailed(String),
    #[error("output {name} missing from the trace")]
    MissingOutput { name: String },
    #[error("numeric failure: {0}")]
    Num(#[from] crate::numerics::NumError),
}

/// An analytic value bound to a name.
#[derive(Debug, Clone)]
pub enum AnalyticValue {
    Point(Point2),
    Line(Line2),
    Circle(Circle2),
}

/// Evaluate the program with analytic formulas; returns every binding.
pub fn evaluate_analytic(
    program: &Program,
    config: &Config,
) -> Result<BTreeMap<String, AnalyticValue>, OracleError> {
    let ctx = NumCtx::new(config);
    let bits = config.precision_bits;
    let mut env: BTreeMap<String, AnalyticValue> = BTreeMap::new();

    let point = |env: &BTreeMap<String, AnalyticValue>, name: &str| -> Result<Point2, OracleError> {
        match env.get(name) {
            Some(AnalyticValue::Point(p)) => Ok(p.clone()),
            Some(v) => Err(OracleError::TypeMismatch {
                name: name.into(),
                message: format!("expected a point, found a {}", kind_name(v)),
            }),
            None => Err(OracleError::UnboundName { name: name.into() }),
        }
    };
    let line = |env: &BTreeMap<String, AnalyticValue>, name: &str| -> Result<Line2, OracleError> {
        match env.get(name) {
            Some(AnalyticValue::Line(l)) => Ok(l.clone()),
            Some(v) => Err(OracleError::TypeMismatch {
                name: name.into(),
                message: format!("expected a line, found a {}", kind_name(v)),
            }),
            None => Err(OracleError::UnboundName { name: name.into() }),
        }
    };

    for stmt in &program.statements {
        match &stmt.kind {
            StmtKind::PointDecl { name, x, y } => {
                let x = Scalar::from_decimal(x, bits).map_err(|e| OracleError::Degenerate(e.to_string()))?;
                let y = Scalar::from_decimal(y, bits).map_err(|e| OracleError::Degenerate(e.to_string()))?;
                env.insert(name.clone(), AnalyticValue::Point(Point2::new(x, y)));
            }
            StmtKind::Let { name, expr } => {
                let value = match &expr.kind {
                    ExprKind::Line(a, b) => {
                        let (a, b) = (point(&env, a)?, point(&env, b)?);
                        AnalyticValue::Line(Line2::through(&a, &b, &ctx).map_err(OracleError::Num)?)
                    }
                    ExprKind::Circle(c, s) => {
                        let (c, s) = (point(&env, c)?, point(&env, s)?);
                        let r = c.dist(&s);
                        if ctx.scalar_equal(&r, &Scalar::zero(bits)) {
                            return Err(OracleError::Degenerate("circle through its own center".into()));
                        }
                        AnalyticValue::Circle(Circle2::new(c, r))
                    }
                    ExprKind::Midpoint(a, b) => {
                        let (a, b) = (point(&env, a)?, point(&env, b)?);
                        AnalyticValue::Point(a.add(&b).scale(&Scalar::one(bits).half()))
                    }
                    ExprKind::PerpBisector(a, b) => {
                        let (a, b) = (point(&env, a)?, point(&env, b)?);
                        let mid = a.add(&b).scale(&Scalar::one(bits).half());
                        let dir = b.sub(&a).perp();
                        if ctx.scalar_equal(&dir.norm(), &Scalar::zero(bits)) {
                            return Err(OracleError::Degenerate("bisector of a degenerate segment".into()));
                        }
                        AnalyticValue::Line(Line2::from_anchor_dir(mid, dir))
                    }
                    ExprKind::Perp(l, t) => {
                        let (l, t) = (line(&env, l)?, point(&env, t)?);
                        AnalyticValue::Line(Line2::from_anchor_dir(t, l.dir.perp()))
                    }
                    ExprKind::Parallel(l, t) => {
                        let (l, t) = (line(&env, l)?, point(&env, t)?);
                        AnalyticValue::Line(Line2::from_anchor_dir(t, l.dir.clone()))
                    }
                    ExprKind::Translate(p, q, t) => {
                        let (p, q, t) = (point(&env, p)?, point(&env, q)?, point(&env, t)?);
                        if ctx.points_equal(&p, &q) {
                            return Err(OracleError::Degenerate("translation by a zero vector".into()));
                        }
                        AnalyticValue::Point(t.add(&q.sub(&p)))
                    }
                    ExprKind::Intersect(a, b, idx) => {
                        let hits = analytic_intersection(&env, a, b, &ctx)?;
                        match hits.get(*idx as usize) {
                            Some(p) => AnalyticValue::Point(p.clone()),
                            None => {
                                return Err(OracleError::IndexOutOfRange { index: *idx, found: hits.len() })
                            }
                        }
                    }
                };
                env.insert(name.clone(), value);
            }
            StmtKind::Output { name } => {
                if !env.contains_key(name) {
                    return Err(OracleError::UnboundName { name: name.clone() });
                }
            }
            StmtKind::AssertOn { point: p, object } => {
                let p = point(&env, p)?;
                let residual = match env.get(object) {
                    Some(AnalyticValue::Line(l)) => l.signed_dist(&p).abs(),
                    Some(AnalyticValue::Circle(c)) => (c.center.dist(&p) - &c.radius).abs(),
                    Some(AnalyticValue::Point(_)) => {
                        return Err(OracleError::TypeMismatch {
                            name: object.clone(),
                            message: "assert_on needs a line or circle".into(),
                        })
                    }
                    None => return Err(OracleError::UnboundName { name: object.clone() }),
                };
                if residual > config.epsilon_cmp {
                    return Err(OracleError::AssertionFailed(format!(
                        "residual {}",
                        residual.to_decimal_string(6)
                    )));
                }
            }
        }
    }
    Ok(env)
}

fn kind_name(v: &AnalyticValue) -> &'static str {
    match v {
        AnalyticValue::Point(_) => "point",
        AnalyticValue::Line(_) => "line",
        AnalyticValue::Circle(_) => "circle",
    }
}

/// All intersection points of two named objects, lexicographically sorted.
pub fn analytic_intersection(
    env: &BTreeMap<String, AnalyticValue>,
    a: &str,
    b: &str,
    ctx: &NumCtx,
) -> Result<Vec<Point2>, OracleError> {
    let get = |name: &str| -> Result<&AnalyticValue, OracleError> {
        env.get(name).ok_or_else(|| OracleError::UnboundName { name: name.into() })
    };
    let (va, vb) = (get(a)?, get(b)?);
    let mut hits = match (va, vb) {
        (AnalyticValue::Line(l1), AnalyticValue::Line(l2)) => {
            match intersect::line_line(l1, l2, ctx)? {
                intersect::LineLine::Point(p) => vec![p],
                intersect::LineLine::Parallel => {
                    return Err(OracleError::NoIntersection("lines are parallel".into()))
                }
                intersect::LineLine::Coincident => {
                    return Err(OracleError::NoIntersection("lines coincide".into()))
                }
            }
        }
        (AnalyticValue::Circle(c), AnalyticValue::Line(l))
        | (AnalyticValue::Line(l), AnalyticValue::Circle(c)) => intersect::circle_line(c, l, ctx)?,
        (AnalyticValue::Circle(c1), AnalyticValue::Circle(c2)) => {
            intersect::circle_circle(c1, c2, ctx)?
        }
        _ => {
            return Err(OracleError::TypeMismatch {
                name: a.into(),
                message: "intersect needs lines or circles".into(),
            })
        }
    };
    sort_points_lex(&mut hits);
    Ok(hits)
}

// ----- trace output extraction ----------------------------------------------

/// Coordinates of every named output in a trace, in claim precision.
///
/// Claims are taken at face value here; validating them is the verifier's
/// job, and the comparison tolerance `ε_cmp` dwarfs the claim quantum.
pub fn trace_outputs(trace: &Trace) -> Result<BTreeMap<String, Vec<Point2>>, OracleError> {
    let bits = trace.header.precision_bits;
    let mut coords = BTreeMap::new();
    let mut outputs = BTreeMap::new();
    for rec in &trace.records {
        for claim in &rec.new_points {
            let x = Scalar::from_decimal(&claim.x, bits)
                .map_err(|e| OracleError::Degenerate(e.to_string()))?;
            let y = Scalar::from_decimal(&claim.y, bits)
                .map_err(|e| OracleError::Degenerate(e.to_string()))?;
            coords.insert(claim.id, Point2::new(x, y));
        }
        if let Instr::Output { name, points, .. } = &rec.instr {
            let mut pts = Vec::with_capacity(points.len());
            for id in points {
                let p = coords
                    .get(id)
                    .ok_or_else(|| OracleError::MissingOutput { name: name.clone() })?;
                pts.push(p.clone());
            }
            outputs.insert(name.clone(), pts);
        }
    }
    Ok(outputs)
}

// ----- comparison ------------------------------------------------------------

/// One compared output.
#[derive(Debug, Clone)]
pub struct OracleEntry {
    pub name: String,
    pub constructive: Vec<(String, String)>,
    pub analytic: String,
    /// Largest per-coordinate deviation observed, as a decimal string.
    pub delta: String,
    pub pass: bool,
}

/// Result of comparing a program's constructive outputs with the oracle.
#[derive(Debug, Clone)]
pub struct OracleReport {
    pub entries: Vec<OracleEntry>,
    pub pass: bool,
}

impl fmt::Display for OracleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "oracle: {}", if self.pass { "PASS" } else { "FAIL" })?;
        for e in &self.entries {
            writeln!(
                f,
                "  {} {}: delta {} vs {}",
                if e.pass { "ok  " } else { "FAIL" },
                e.name,
                e.delta,
                e.analytic
            )?;
        }
        Ok(())
    }
}

/// Compare the trace outputs of a lowered program against the analytic
/// evaluation. Point outputs must agree per coordinate within `ε_cmp`; line
/// and circle outputs must have all their witness points incident to the
/// analytic object within `ε_cmp`.
pub fn compare(
    program: &Program,
    trace: &Trace,
    config: &Config,
) -> Result<OracleReport, OracleError> {
    let analytic = evaluate_analytic(program, config)?;
    let constructed = trace_outputs(trace)?;
    let eps = &config.epsilon_cmp;
    let mut entries = Vec::new();
    let mut pass = true;

    for stmt in &program.statements {
        let StmtKind::Output { name } = &stmt.kind else { continue };
        let value = analytic
            .get(name)
            .ok_or_else(|| OracleError::UnboundName { name: name.clone() })?;
        let pts = constructed
            .get(name)
            .ok_or_else(|| OracleError::MissingOutput { name: name.clone() })?;
        let (delta, ok, summary) = match value {
            AnalyticValue::Point(p) => {
                let ok = pts.len() == 1;
                let mut worst = Scalar::zero(64);
                for q in pts {
                    worst = worst.max(coord_delta(p, q));
                }
                let summary = format!(
                    "point ({}, {})",
                    p.x.to_decimal_string(20),
                    p.y.to_decimal_string(20)
                );
                (worst.clone(), ok && &worst <= eps, summary)
            }
            AnalyticValue::Line(l) => {
                let mut worst = Scalar::zero(64);
                for q in pts {
                    worst = worst.max(l.signed_dist(q).abs());
                }
                (worst.clone(), !pts.is_empty() && &worst <= eps, "line incidence".to_string())
            }
            AnalyticValue::Circle(c) => {
                // Constructive circle outputs are [center, on-point].
                let ok = pts.len() == 2;
                let mut worst = Scalar::zero(64);
                if let [center, on] = pts.as_slice() {
                    worst = worst.max(coord_delta(&c.center, center));
                    worst = worst.max((center.dist(on) - &c.radius).abs());
                }
                (worst.clone(), ok && &worst <= eps, "circle center/radius".to_string())
            }
        };
        pass &= ok;
        entries.push(OracleEntry {
            name: name.clone(),
            constructive: pts
                .iter()
                .map(|p| (p.x.to_decimal_string(20), p.y.to_decimal_string(20)))
                .collect(),
            analytic: summary,
            delta: delta.to_decimal_string(6),
            pass: ok,
        });
    }
    Ok(OracleReport { entries, pass })
}

fn coord_delta(p: &Point2, q: &Point2) -> Scalar {
    (&p.x - &q.x).abs().max((&p.y - &q.y).abs())
}
