//! Elaboration of parsed expressions into truncated series at a configured
//! order. Literals and `z` are padded to the full order up front, so the
//! min-order truncation rule of the series arithmetic never collapses a
//! result just because one operand was written as a short polynomial.

use gutzmer::scalar::principal_root;
use gutzmer::{ComplexScalar, LaurentSeries, SeriesError, TruncatedSeries, ZERO_THRESHOLD};
use thiserror::Error;

use crate::expr::Expr;

#[derive(Debug, Error)]
pub enum ElabError {
    #[error("laurent series admit no further operations; use them only as whole definitions")]
    LaurentOperand,
    #[error("{slot} must elaborate to a constant")]
    NonConstant { slot: &'static str },
    #[error("root requires a nonzero constant term")]
    RootAtZero,
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// A fully elaborated definition: either a one-sided truncated series or a
/// two-sided Laurent series (the latter only at the top level).
#[derive(Debug, Clone)]
pub enum Value {
    Series(TruncatedSeries),
    Laurent(LaurentSeries),
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Series(_) => "series",
            Value::Laurent(_) => "laurent",
        }
    }
}

pub fn elaborate(expr: &Expr, order: usize) -> Result<Value, ElabError> {
    match expr {
        Expr::Laurent(neg, pos) => {
            let neg = constants("laurent coefficient", neg, order)?;
            let pos = constants("laurent coefficient", pos, order)?;
            // Laurent polynomials converge on the whole punctured plane.
            Ok(Value::Laurent(LaurentSeries::new(neg, pos, (0.0, f64::INFINITY))?))
        }
        _ => Ok(Value::Series(elaborate_series(expr, order)?)),
    }
}

fn elaborate_series(expr: &Expr, order: usize) -> Result<TruncatedSeries, ElabError> {
    let one = ComplexScalar::new(1.0, 0.0);
    match expr {
        Expr::Literal { value, imaginary } => {
            let c = if *imaginary {
                ComplexScalar::new(0.0, *value)
            } else {
                ComplexScalar::new(*value, 0.0)
            };
            Ok(TruncatedSeries::constant(c, order)?)
        }
        Expr::Var => {
            let mut coeffs = vec![ComplexScalar::new(0.0, 0.0); order + 1];
            if order >= 1 {
                coeffs[1] = one;
            }
            Ok(TruncatedSeries::polynomial(coeffs)?)
        }
        Expr::Exp => Ok(TruncatedSeries::exp(order)),
        Expr::Sin => Ok(TruncatedSeries::sin(order)),
        Expr::Cos => Ok(TruncatedSeries::cos(order)),
        Expr::Neg(e) => {
            let s = elaborate_series(e, order)?;
            Ok(TruncatedSeries::linear_combine(-one, &s, ComplexScalar::new(0.0, 0.0), &s)?)
        }
        Expr::Add(l, r) => {
            let (l, r) = (elaborate_series(l, order)?, elaborate_series(r, order)?);
            Ok(TruncatedSeries::linear_combine(one, &l, one, &r)?)
        }
        Expr::Sub(l, r) => {
            let (l, r) = (elaborate_series(l, order)?, elaborate_series(r, order)?);
            Ok(TruncatedSeries::linear_combine(one, &l, -one, &r)?)
        }
        Expr::Mul(l, r) => {
            let (l, r) = (elaborate_series(l, order)?, elaborate_series(r, order)?);
            Ok(l.cauchy_product(&r)?)
        }
        Expr::Div(l, r) => {
            let (l, r) = (elaborate_series(l, order)?, elaborate_series(r, order)?);
            Ok(l.cauchy_product(&r.reciprocal()?)?)
        }
        Expr::Pow(b, k) => {
            let base = elaborate_series(b, order)?;
            let mut acc = TruncatedSeries::constant(one, order)?;
            if base.center().norm() > 0.0 {
                acc = acc.recenter(base.center())?;
            }
            for _ in 0..*k {
                acc = acc.cauchy_product(&base)?;
            }
            Ok(acc)
        }
        Expr::Recip(e) => Ok(elaborate_series(e, order)?.reciprocal()?),
        Expr::Root(e, p) => {
            let s = elaborate_series(e, order)?;
            let a0 = s.coeff(0);
            if a0.norm() <= ZERO_THRESHOLD {
                return Err(ElabError::RootAtZero);
            }
            // s = a0 * (1 + g) with g(center) = 0, so s^(1/p) is the
            // principal root of a0 times the binomial series applied to g.
            let unit = TruncatedSeries::constant(one, s.order())?;
            let unit = if s.center().norm() > 0.0 { unit.recenter(s.center())? } else { unit };
            let g = TruncatedSeries::linear_combine(one / a0, &s, -one, &unit)?;
            let rooted = TruncatedSeries::binomial_root(*p, s.order()).compose(&g)?;
            let scale = TruncatedSeries::constant(principal_root(a0, *p), s.order())?;
            let scale =
                if s.center().norm() > 0.0 { scale.recenter(s.center())? } else { scale };
            Ok(scale.cauchy_product(&rooted)?)
        }
        Expr::Compose(outer, inner) => {
            let (outer, inner) = (elaborate_series(outer, order)?, elaborate_series(inner, order)?);
            Ok(outer.compose(&inner)?)
        }
        Expr::Recenter(e, w) => {
            let s = elaborate_series(e, order)?;
            let w = constant_value("recenter offset", w, order)?;
            Ok(s.recenter(w)?)
        }
        Expr::Derive(e) => Ok(elaborate_series(e, order)?.derivative()),
        Expr::Laurent(..) => Err(ElabError::LaurentOperand),
    }
}

/// Elaborates an expression that must reduce to a single complex number.
fn constant_value(slot: &'static str, expr: &Expr, order: usize) -> Result<ComplexScalar, ElabError> {
    let s = match elaborate(expr, order)? {
        Value::Series(s) => s,
        Value::Laurent(_) => return Err(ElabError::LaurentOperand),
    };
    if s.coeffs().iter().skip(1).any(|c| c.norm() > ZERO_THRESHOLD) {
        return Err(ElabError::NonConstant { slot });
    }
    Ok(s.coeff(0))
}

fn constants(
    slot: &'static str,
    exprs: &[Expr],
    order: usize,
) -> Result<Vec<ComplexScalar>, ElabError> {
    exprs.iter().map(|e| constant_value(slot, e, order)).collect()
}
