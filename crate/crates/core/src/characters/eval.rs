//! Specialization of character expressions to Puiseux series.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::expr::{CharExpr, FormalMonomial, Var};
use crate::algebra::{EpsSeries, Monomial, PuiseuxSeries, Rat};
use crate::error::{MathError, Result};
use crate::modforms::{eta_scaled, jacobi_theta_eps, twisted_eisenstein_eps};

/// What a formal variable is replaced by.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VarValue {
    Value(Monomial),
    /// `v → 1` along `v = (1+ε)^c`.
    Limit(Rat),
    /// `v = 1`.
    Drop,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Specialization {
    pub vars: BTreeMap<Var, VarValue>,
    pub trunc: Rat,
    pub eps_degree: usize,
}

impl Specialization {
    pub fn new(trunc: Rat) -> Specialization {
        Specialization { vars: BTreeMap::new(), trunc, eps_degree: 4 }
    }

    pub fn set(mut self, v: Var, val: VarValue) -> Specialization {
        self.vars.insert(v, val);
        self
    }

    pub fn with_eps_degree(mut self, d: usize) -> Specialization {
        self.eps_degree = d;
        self
    }

    /// `y = 1` and `z_i = q^{s_i}`.
    pub fn generic(trunc: Rat, s: &[Rat]) -> Specialization {
        let mut sp = Specialization::new(trunc).set(Var::Y, VarValue::Drop);
        for (i, si) in s.iter().enumerate() {
            sp = sp.set(Var::Z(i as u8 + 1), VarValue::Value(Monomial::q(si.clone())));
        }
        sp
    }

    /// `y = 1` and `z_i → 1` along `(1+ε)^{c_i}`.
    pub fn limit(trunc: Rat, c: &[i64], eps_degree: usize) -> Specialization {
        let mut sp = Specialization::new(trunc).set(Var::Y, VarValue::Drop).with_eps_degree(eps_degree);
        for (i, ci) in c.iter().enumerate() {
            sp = sp.set(Var::Z(i as u8 + 1), VarValue::Limit(Rat::int(*ci)));
        }
        sp
    }

    fn has_limit(&self) -> bool {
        self.vars.values().any(|v| matches!(v, VarValue::Limit(c) if !c.is_zero()))
    }

    /// The monomial value and the power of `(1+ε)` of a formal monomial.
    fn resolve(&self, m: &FormalMonomial) -> Result<(Monomial, Rat)> {
        let mut out = Monomial::new(m.phase.clone(), Rat::zero());
        let mut eps = Rat::zero();
        for (v, e) in &m.exps {
            if *v == Var::Q {
                out = out.mul(&Monomial::q(e.clone()));
                continue;
            }
            match self.vars.get(v) {
                Some(VarValue::Value(x)) => out = out.mul(&x.pow(e)?),
                Some(VarValue::Limit(c)) => eps += &(c * e),
                Some(VarValue::Drop) => {}
                None => return Err(MathError::OutOfRange(format!("variable {v} is not specialized"))),
            }
        }
        Ok((out, eps))
    }
}

struct Ctx<'a> {
    spec: &'a Specialization,
    trunc: Rat,
    degree: usize,
    no_limit: bool,
}

impl Ctx<'_> {
    fn constant(&self, s: PuiseuxSeries) -> EpsSeries {
        EpsSeries::constant(s, self.degree)
    }

    fn eval(&self, e: &CharExpr) -> Result<EpsSeries> {
        Ok(match e {
            CharExpr::Literal(s) => self.constant(s.truncate(&self.trunc)),
            CharExpr::Eta { scale } => self.constant(eta_scaled(scale, &self.trunc)),
            CharExpr::Theta { kind, arg, modulus } => {
                let (m, c) = self.spec.resolve(arg)?;
                jacobi_theta_eps(*kind, &m, &c, modulus, &self.trunc, self.degree)?
            }
            CharExpr::TwistedE { k, lambda, theta } => {
                let (m, c) = self.spec.resolve(theta)?;
                twisted_eisenstein_eps(*k, lambda, &m, &c, &self.trunc, self.degree)?
            }
            CharExpr::Prefactor { coef, mono } => {
                let (m, c) = self.spec.resolve(mono)?;
                let base = m.to_series().scale(coef);
                let coeffs = EpsSeries::one_plus_eps_pow(&c, self.degree)
                    .into_iter()
                    .map(|w| base.scale_rat(&w))
                    .collect();
                EpsSeries::from_coeffs(0, coeffs)
            }
            CharExpr::Sum(xs) => {
                let mut acc: Option<EpsSeries> = None;
                for (w, x) in xs {
                    let v = self.eval(x)?.scale(w);
                    acc = Some(match acc {
                        Some(a) => a.add(&v),
                        None => v,
                    });
                }
                acc.unwrap_or_else(|| self.constant(PuiseuxSeries::zero()))
            }
            CharExpr::Product(xs) => {
                let mut acc = self.constant(PuiseuxSeries::one());
                for x in xs {
                    acc = acc.mul(&self.eval(x)?);
                }
                acc
            }
            CharExpr::Quotient(a, b) => {
                let den = self.eval(b)?;
                let num = self.eval(a)?;
                num.div(&den, self.degree, self.no_limit)?
            }
            CharExpr::Power(a, n) => self.eval(a)?.pow(*n, self.degree, self.no_limit)?,
        })
    }
}

/// Evaluates `e` at the specialization, returning a series known through `s.trunc`.
///
/// Quotients lose precision, so the working truncation is raised until the result
/// reaches the requested order.
pub fn evaluate(e: &CharExpr, s: &Specialization) -> Result<PuiseuxSeries> {
    let limit = s.has_limit();
    let degree = if limit { s.eps_degree } else { 0 };
    let mut work = s.trunc.clone();
    for _ in 0..8 {
        let ctx = Ctx { spec: s, trunc: work.clone(), degree, no_limit: !limit };
        let r = ctx.eval(e)?;
        let out = if limit {
            r.limit(degree)?
        } else {
            match r.valuation() {
                None => r.coeff(0).cloned().unwrap_or_else(PuiseuxSeries::zero),
                Some(0) => r.coeff(0).unwrap().clone(),
                Some(_) => return Err(MathError::Pole("unexpected ε-dependence without a limit".into())),
            }
        };
        match out.trunc() {
            Some(t) if *t < s.trunc => {
                let deficit = &s.trunc - t;
                work = &(&work + &deficit) + &Rat::one();
            }
            _ => return Ok(out.truncate(&s.trunc)),
        }
    }
    Err(MathError::TruncationExhausted(format!("could not reach q^{} after raising the working order", s.trunc)))
}

