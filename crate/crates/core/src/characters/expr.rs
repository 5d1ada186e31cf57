//! Symbolic character expressions and spectral-flow substitution.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::{CycNumber, PuiseuxSeries, Rat};
use crate::error::{MathError, Result};
use crate::modforms::ThetaKind;

/// A formal variable: the level fugacity `y`, a Cartan fugacity `z_i`, or `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Y,
    Z(u8),
    Q,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Y => write!(f, "y"),
            Var::Z(i) => write!(f, "z{i}"),
            Var::Q => write!(f, "q"),
        }
    }
}

impl FromStr for Var {
    type Err = MathError;
    fn from_str(s: &str) -> Result<Var> {
        match s {
            "y" => Ok(Var::Y),
            "q" => Ok(Var::Q),
            "z" => Ok(Var::Z(1)),
            _ => s
                .strip_prefix('z')
                .and_then(|i| i.parse::<u8>().ok())
                .filter(|i| *i >= 1)
                .map(Var::Z)
                .ok_or_else(|| MathError::Parse(format!("unknown variable '{s}'"))),
        }
    }
}

impl Serialize for Var {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Var {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Var, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `e^{2πi·phase} · ∏ v^{exps[v]}` over formal variables.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct FormalMonomial {
    #[serde(default)]
    pub phase: Rat,
    pub exps: BTreeMap<Var, Rat>,
}

impl FormalMonomial {
    pub fn one() -> FormalMonomial {
        FormalMonomial::default()
    }

    pub fn var(v: Var) -> FormalMonomial {
        FormalMonomial::one().with(v, Rat::one())
    }

    pub fn z(i: u8) -> FormalMonomial {
        FormalMonomial::var(Var::Z(i))
    }

    pub fn q(e: Rat) -> FormalMonomial {
        FormalMonomial::one().with(Var::Q, e)
    }

    /// Multiplies in `v^e`.
    pub fn with(mut self, v: Var, e: Rat) -> FormalMonomial {
        let x = self.exps.entry(v).or_default();
        *x += &e;
        if x.is_zero() {
            self.exps.remove(&v);
        }
        self
    }

    pub fn with_phase(mut self, p: Rat) -> FormalMonomial {
        self.phase = (&self.phase + &p).fract();
        self
    }

    pub fn exp(&self, v: Var) -> Rat {
        self.exps.get(&v).cloned().unwrap_or_default()
    }

    pub fn mul(&self, o: &FormalMonomial) -> FormalMonomial {
        let mut out = self.clone().with_phase(o.phase.clone());
        for (v, e) in &o.exps {
            out = out.with(*v, e.clone());
        }
        out
    }

    pub fn pow(&self, r: &Rat) -> FormalMonomial {
        FormalMonomial {
            phase: (&self.phase * r).fract(),
            exps: self.exps.iter().map(|(v, e)| (*v, e * r)).filter(|(_, e)| !e.is_zero()).collect(),
        }
    }

    pub fn inv(&self) -> FormalMonomial {
        self.pow(&-Rat::one())
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.exps.keys().copied().filter(|v| *v != Var::Q)
    }

    /// Spectral-flow substitution of every variable, performed simultaneously.
    pub fn flowed(&self, f: &FlowData) -> FormalMonomial {
        let mut out = FormalMonomial { phase: self.phase.clone(), exps: BTreeMap::new() };
        for (v, e) in &self.exps {
            out = out.with(*v, e.clone());
            match v {
                Var::Y => {
                    for (w, p) in &f.prefactor {
                        out = out.with(*w, e * p);
                    }
                }
                Var::Z(i) => {
                    if let Some(s) = f.shifts.get(i) {
                        out = out.with(Var::Q, e * s);
                    }
                }
                Var::Q => {}
            }
        }
        out
    }
}

/// A character as an expression tree.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CharExpr {
    Literal(PuiseuxSeries),
    /// `η(q^scale)`.
    Eta { scale: Rat },
    /// `θ_kind(arg; q^modulus)`.
    Theta { kind: ThetaKind, arg: FormalMonomial, modulus: Rat },
    /// `𝔼_k[e^{2πiλ}; theta]`.
    TwistedE { k: usize, lambda: Rat, theta: FormalMonomial },
    Prefactor { coef: CycNumber, mono: FormalMonomial },
    Sum(Vec<(CycNumber, CharExpr)>),
    Product(Vec<CharExpr>),
    Quotient(Box<CharExpr>, Box<CharExpr>),
    Power(Box<CharExpr>, i64),
}

impl CharExpr {
    pub fn eta() -> CharExpr {
        CharExpr::Eta { scale: Rat::one() }
    }

    pub fn theta(kind: ThetaKind, arg: FormalMonomial, modulus: i64) -> CharExpr {
        CharExpr::Theta { kind, arg, modulus: Rat::int(modulus) }
    }

    pub fn e2(theta: FormalMonomial) -> CharExpr {
        CharExpr::TwistedE { k: 2, lambda: Rat::zero(), theta }
    }

    pub fn mono(mono: FormalMonomial) -> CharExpr {
        CharExpr::Prefactor { coef: CycNumber::one(), mono }
    }

    pub fn scalar(c: CycNumber) -> CharExpr {
        CharExpr::Prefactor { coef: c, mono: FormalMonomial::one() }
    }

    pub fn prod(items: Vec<CharExpr>) -> CharExpr {
        CharExpr::Product(items)
    }

    pub fn quot(n: CharExpr, d: CharExpr) -> CharExpr {
        CharExpr::Quotient(Box::new(n), Box::new(d))
    }

    pub fn pow(self, e: i64) -> CharExpr {
        CharExpr::Power(Box::new(self), e)
    }

    pub fn sum(items: Vec<(CycNumber, CharExpr)>) -> CharExpr {
        CharExpr::Sum(items)
    }

    /// Every non-`q` variable the expression mentions.
    pub fn variables(&self) -> Vec<Var> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out.sort();
        out.dedup();
        out
    }

    fn collect_vars(&self, out: &mut Vec<Var>) {
        match self {
            CharExpr::Literal(_) | CharExpr::Eta { .. } => {}
            CharExpr::Theta { arg, .. } => out.extend(arg.vars()),
            CharExpr::TwistedE { theta, .. } => out.extend(theta.vars()),
            CharExpr::Prefactor { mono, .. } => out.extend(mono.vars()),
            CharExpr::Sum(xs) => xs.iter().for_each(|(_, x)| x.collect_vars(out)),
            CharExpr::Product(xs) => xs.iter().for_each(|x| x.collect_vars(out)),
            CharExpr::Quotient(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            CharExpr::Power(a, _) => a.collect_vars(out),
        }
    }

    /// Applies `f` to every monomial in the tree.
    pub fn map_monomials<F: Fn(&FormalMonomial) -> FormalMonomial + Copy>(&self, f: F) -> CharExpr {
        match self {
            CharExpr::Literal(_) | CharExpr::Eta { .. } => self.clone(),
            CharExpr::Theta { kind, arg, modulus } => {
                CharExpr::Theta { kind: *kind, arg: f(arg), modulus: modulus.clone() }
            }
            CharExpr::TwistedE { k, lambda, theta } => {
                CharExpr::TwistedE { k: *k, lambda: lambda.clone(), theta: f(theta) }
            }
            CharExpr::Prefactor { coef, mono } => CharExpr::Prefactor { coef: coef.clone(), mono: f(mono) },
            CharExpr::Sum(xs) => CharExpr::Sum(xs.iter().map(|(c, x)| (c.clone(), x.map_monomials(f))).collect()),
            CharExpr::Product(xs) => CharExpr::Product(xs.iter().map(|x| x.map_monomials(f)).collect()),
            CharExpr::Quotient(a, b) => CharExpr::quot(a.map_monomials(f), b.map_monomials(f)),
            CharExpr::Power(a, e) => a.map_monomials(f).pow(*e),
        }
    }
}

/// The substitution `y ↦ y·∏ v^{prefactor[v]}`, `z_i ↦ z_i q^{shifts[i]}`.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct FlowData {
    pub prefactor: BTreeMap<Var, Rat>,
    pub shifts: BTreeMap<u8, Rat>,
    /// Level of the algebra, kept for reference; the `y^k` prefactors already carry it.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub level: Option<Rat>,
}

impl FlowData {
    pub fn identity() -> FlowData {
        FlowData::default()
    }

    /// From a coweight `w` (components paired with each `z_i`) and its norm `|w|²`:
    /// `y ↦ y z^w q^{|w|²/2}` and `z_i ↦ z_i q^{shift_i}`.
    pub fn from_parts(z_pref: &[(u8, Rat)], q_pref: Rat, shifts: &[(u8, Rat)]) -> FlowData {
        let mut prefactor: BTreeMap<Var, Rat> = z_pref.iter().map(|(i, e)| (Var::Z(*i), e.clone())).collect();
        if !q_pref.is_zero() {
            prefactor.insert(Var::Q, q_pref);
        }
        prefactor.retain(|_, e| !e.is_zero());
        let shifts = shifts.iter().filter(|(_, s)| !s.is_zero()).map(|(i, s)| (*i, s.clone())).collect();
        FlowData { prefactor, shifts, level: None }
    }

    /// `σ^ℓ` for `sl2`: `y ↦ y z^ℓ q^{ℓ²/4}`, `z ↦ z q^{ℓ/2}`.
    pub fn sl2(l: &Rat) -> FlowData {
        FlowData::from_parts(&[(1, l.clone())], &(l * l) / &Rat::int(4), &[(1, l / &Rat::int(2))])
    }

    /// The flow equivalent to applying `self` and then `next`.
    pub fn then(&self, next: &FlowData) -> FlowData {
        let mut prefactor = self.prefactor.clone();
        for (v, e) in &next.prefactor {
            *prefactor.entry(*v).or_default() += e;
        }
        let mut dq = Rat::zero();
        for (v, e) in &self.prefactor {
            if let Var::Z(i) = v {
                if let Some(s) = next.shifts.get(i) {
                    dq += &(e * s);
                }
            }
        }
        *prefactor.entry(Var::Q).or_default() += &dq;
        prefactor.retain(|_, e| !e.is_zero());
        let mut shifts = self.shifts.clone();
        for (i, s) in &next.shifts {
            *shifts.entry(*i).or_default() += s;
        }
        shifts.retain(|_, s| !s.is_zero());
        FlowData { prefactor, shifts, level: self.level.clone().or_else(|| next.level.clone()) }
    }
}

/// `ch[σ(M)]` from `ch[M]` by substituting the flow into every monomial.
pub fn apply_spectral_flow(e: &CharExpr, f: &FlowData) -> Result<CharExpr> {
    let vars = e.variables();
    for v in f.prefactor.keys() {
        if let Var::Z(_) = v {
            if !vars.contains(v) && !vars.is_empty() {
                return Err(MathError::OutOfRange(format!("flow mentions {v}, absent from the expression")));
            }
        }
    }
    for i in f.shifts.keys() {
        if !vars.contains(&Var::Z(*i)) {
            return Err(MathError::OutOfRange(format!("flow shifts z{i}, absent from the expression")));
        }
    }
    Ok(e.map_monomials(|m| m.flowed(f)))
}
