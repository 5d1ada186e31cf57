//! Serre derivatives, modular linear differential operators, verification and fitting.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::linalg::solve;
use crate::algebra::{CycNumber, Monomial, PuiseuxSeries, Rat};
use crate::error::{MathError, Result};
use crate::modforms::{eisenstein, theta_bar, twisted_eisenstein, TwistPair};

/// Working truncation for a series: its own, or 24 orders past the valuation when exact.
fn horizon(f: &PuiseuxSeries) -> Rat {
    match f.trunc() {
        Some(t) => t.clone(),
        None => &f.valuation().unwrap_or_default() + &Rat::int(24),
    }
}

/// `∂_(w) f = q df/dq + w 𝔼₂ f`.
pub fn serre_derivative(f: &PuiseuxSeries, w: &Rat) -> Result<PuiseuxSeries> {
    let d = f.qderiv();
    if w.is_zero() || f.is_zero() {
        return Ok(d);
    }
    let t = &horizon(f) - &f.valuation().unwrap_or_default();
    let e2 = eisenstein(2, &t.max(Rat::one()))?;
    Ok(&d + &(&e2 * f).scale_rat(w))
}

/// `D^(k) = ∂_(2k-2) ∘ … ∘ ∂_(2) ∘ ∂_(0)`.
pub fn d_power(f: &PuiseuxSeries, k: usize) -> Result<PuiseuxSeries> {
    let mut g = f.clone();
    for i in 0..k {
        g = serre_derivative(&g, &Rat::int(2 * i as i64))?;
    }
    Ok(g)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Group {
    #[serde(rename = "full-sl2z")]
    FullSl2z,
    #[serde(rename = "gamma0-2")]
    Gamma0Two,
}

impl FromStr for Group {
    type Err = MathError;
    fn from_str(s: &str) -> Result<Group> {
        match s {
            "full-sl2z" | "sl2z" => Ok(Group::FullSl2z),
            "gamma0-2" | "gamma0_2" => Ok(Group::Gamma0Two),
            _ => Err(MathError::Parse(format!("unknown group '{s}'"))),
        }
    }
}

/// A modular form used as an operator coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BasisForm {
    /// `Θ̄_{r,s}`, weight `4(r+s)/2 = 2(r+s)`.
    ThetaBar(u32, u32),
    /// `𝔼₄^a 𝔼₆^b`.
    E4E6(u32, u32),
    /// `𝔼_k[e^{2πiλ}; ϑ]`.
    TwistedE { k: usize, tw: TwistPair },
}

impl BasisForm {
    pub fn weight(&self) -> u32 {
        match self {
            BasisForm::ThetaBar(r, s) => 2 * (r + s),
            BasisForm::E4E6(a, b) => 4 * a + 6 * b,
            BasisForm::TwistedE { k, .. } => *k as u32,
        }
    }

    pub fn series(&self, trunc: &Rat) -> Result<PuiseuxSeries> {
        match self {
            BasisForm::ThetaBar(r, s) => Ok(theta_bar(*r, *s, trunc)),
            BasisForm::E4E6(a, b) => {
                let e4 = eisenstein(4, trunc)?.pow(*a as i64)?;
                let e6 = eisenstein(6, trunc)?.pow(*b as i64)?;
                Ok((&e4 * &e6).truncate(trunc))
            }
            BasisForm::TwistedE { k, tw } => twisted_eisenstein(*k, tw, trunc),
        }
    }

    /// The coefficient basis of weight `2r` for the group.
    pub fn basis(group: Group, r: u32) -> Vec<BasisForm> {
        match group {
            Group::Gamma0Two => (0..=r / 2).map(|i| BasisForm::ThetaBar(i, r - i)).collect(),
            Group::FullSl2z => {
                let w = 2 * r;
                (0..=w / 4).filter(|a| (w - 4 * a).is_multiple_of(6)).map(|a| BasisForm::E4E6(a, (w - 4 * a) / 6)).collect()
            }
        }
    }
}

impl fmt::Display for BasisForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisForm::ThetaBar(r, s) => write!(f, "Theta({r},{s})"),
            BasisForm::E4E6(a, b) => write!(f, "E4^{a}E6^{b}"),
            BasisForm::TwistedE { k, tw } => {
                write!(f, "TwE({k},{},{},{})", tw.lambda, tw.theta.phase, tw.theta.exp)
            }
        }
    }
}

impl FromStr for BasisForm {
    type Err = MathError;
    fn from_str(s: &str) -> Result<BasisForm> {
        let bad = || MathError::Parse(format!("unknown basis form '{s}'"));
        let t = s.replace(' ', "");
        if let Some(inner) = t.strip_prefix("Theta(").and_then(|x| x.strip_suffix(')')) {
            let (a, b) = inner.split_once(',').ok_or_else(bad)?;
            return Ok(BasisForm::ThetaBar(a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?));
        }
        if let Some(inner) = t.strip_prefix("TwE(").and_then(|x| x.strip_suffix(')')) {
            let parts: Vec<&str> = inner.split(',').collect();
            if parts.len() != 4 {
                return Err(bad());
            }
            let k = parts[0].parse().map_err(|_| bad())?;
            let lambda: Rat = parts[1].parse()?;
            let theta = Monomial::new(parts[2].parse()?, parts[3].parse()?);
            return Ok(BasisForm::TwistedE { k, tw: TwistPair { lambda, theta } });
        }
        if let Some(rest) = t.strip_prefix("E4^") {
            let (a, b) = rest.split_once("E6^").ok_or_else(bad)?;
            return Ok(BasisForm::E4E6(a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?));
        }
        Err(bad())
    }
}

impl Serialize for BasisForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for BasisForm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<BasisForm, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// `weight · form · D^(at)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MldeTerm {
    pub at: usize,
    pub basis: BasisForm,
    pub weight: Rat,
}

/// The monic operator `D^(order) + Σ terms`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MldeOp {
    pub order: usize,
    pub group: Group,
    pub coeffs: Vec<MldeTerm>,
}

impl MldeOp {
    pub fn new(order: usize, group: Group) -> MldeOp {
        MldeOp { order, group, coeffs: Vec::new() }
    }

    pub fn term(mut self, at: usize, basis: BasisForm, weight: Rat) -> MldeOp {
        self.coeffs.push(MldeTerm { at, basis, weight });
        self
    }

    /// Weight of the form multiplying `D^(at)` must be `2(order - at)`.
    pub fn check_weights(&self) -> Result<()> {
        for t in &self.coeffs {
            if t.at >= self.order || t.basis.weight() as usize != 2 * (self.order - t.at) {
                return Err(MathError::OutOfRange(format!(
                    "form {} of weight {} cannot multiply D^({}) in an order-{} operator",
                    t.basis,
                    t.basis.weight(),
                    t.at,
                    self.order
                )));
            }
        }
        Ok(())
    }

    /// Weight of a named coefficient, zero when absent.
    pub fn coefficient(&self, at: usize, basis: &BasisForm) -> Rat {
        self.coeffs
            .iter()
            .filter(|t| t.at == at && t.basis == *basis)
            .fold(Rat::zero(), |acc, t| &acc + &t.weight)
    }
}

/// `D^(k) f + Σ weight·form·D^(at) f`.
pub fn mlde_apply(op: &MldeOp, f: &PuiseuxSeries) -> Result<PuiseuxSeries> {
    let t = &horizon(f) - &f.valuation().unwrap_or_default();
    let t = t.max(Rat::one());
    let mut ders = vec![f.clone()];
    for i in 0..op.order {
        let next = serre_derivative(&ders[i], &Rat::int(2 * i as i64))?;
        ders.push(next);
    }
    let mut acc = ders[op.order].clone();
    for term in &op.coeffs {
        if term.at > op.order {
            return Err(MathError::OutOfRange(format!("coefficient at D^({}) exceeds the order", term.at)));
        }
        let form = term.basis.series(&t)?;
        acc = &acc + &(&form * &ders[term.at]).scale_rat(&term.weight);
    }
    Ok(acc)
}

/// True iff the operator kills `f` below `q^through`.
pub fn mlde_verify(op: &MldeOp, f: &PuiseuxSeries, through: &Rat) -> Result<bool> {
    let r = mlde_apply(op, f)?;
    if let Some(t) = r.trunc() {
        if t < through {
            return Err(MathError::TruncationExhausted(format!(
                "operator output known only below q^{t}, asked through q^{through}"
            )));
        }
    }
    Ok(r.truncate(through).is_zero())
}

/// Minimum number of equations beyond the unknown count demanded by [`mlde_fit`].
pub const FIT_MARGIN: usize = 5;

/// Solves for the unique monic operator of the given order annihilating every solution.
pub fn mlde_fit(solutions: &[PuiseuxSeries], order: usize, group: Group) -> Result<MldeOp> {
    if order == 0 || solutions.is_empty() {
        return Err(MathError::OutOfRange("need a positive order and at least one solution".into()));
    }
    let mut unknowns: Vec<(usize, BasisForm)> = Vec::new();
    for r in 1..=order as u32 {
        for b in BasisForm::basis(group, r) {
            unknowns.push((order - r as usize, b));
        }
    }
    let n = unknowns.len();
    let mut rows: Vec<Vec<CycNumber>> = Vec::new();
    let mut rhs: Vec<CycNumber> = Vec::new();
    for f in solutions {
        let v = f.valuation().ok_or_else(|| MathError::OutOfRange("zero solution".into()))?;
        let t = &horizon(f) - &v;
        let mut ders = vec![f.clone()];
        for i in 0..order {
            let next = serre_derivative(&ders[i], &Rat::int(2 * i as i64))?;
            ders.push(next);
        }
        let cols: Vec<PuiseuxSeries> = unknowns
            .iter()
            .map(|(at, b)| Ok(&b.series(&t)? * &ders[*at]))
            .collect::<Result<_>>()?;
        let target = ders[order].clone();
        let tmin = cols
            .iter()
            .chain(std::iter::once(&target))
            .filter_map(|c| c.trunc().cloned())
            .min()
            .ok_or_else(|| MathError::TruncationExhausted("solutions must be truncated series".into()))?;
        let mut exps: Vec<Rat> = cols
            .iter()
            .chain(std::iter::once(&target))
            .flat_map(|c| c.terms().map(|(e, _)| e).collect::<Vec<_>>())
            .filter(|e| *e < tmin)
            .collect();
        exps.sort();
        exps.dedup();
        for e in exps {
            rows.push(cols.iter().map(|c| c.coeff(&e)).collect());
            rhs.push(-&target.coeff(&e));
        }
    }
    if rows.len() < n + FIT_MARGIN {
        return Err(MathError::Underdetermined(format!(
            "{} equations for {} unknowns; need at least {}",
            rows.len(),
            n,
            n + FIT_MARGIN
        )));
    }
    let sol = solve(&rows, &rhs, n)?;
    if !sol.kernel.is_empty() {
        return Err(MathError::Underdetermined(format!("{} free coefficient(s)", sol.kernel.len())));
    }
    let mut op = MldeOp::new(order, group);
    for ((at, b), c) in unknowns.into_iter().zip(sol.particular) {
        let w = c.expect_rational()?;
        if !w.is_zero() {
            op = op.term(at, b, w);
        }
    }
    Ok(op)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn weight_zero_is_plain_derivative() {
        let f = PuiseuxSeries::from_rational_terms([(rat(1, 2), Rat::one())], Some(Rat::int(4)));
        assert_eq!(serre_derivative(&f, &Rat::zero()).unwrap(), f.scale_rat(&rat(1, 2)));
        let one = PuiseuxSeries::one().truncate(&Rat::int(4));
        assert!(d_power(&one, 2).unwrap().is_zero());
    }

    #[test]
    fn basis_sizes() {
        assert_eq!(BasisForm::basis(Group::Gamma0Two, 2).len(), 2);
        assert_eq!(BasisForm::basis(Group::Gamma0Two, 3).len(), 2);
        assert_eq!(BasisForm::basis(Group::Gamma0Two, 4).len(), 3);
        assert_eq!(BasisForm::basis(Group::FullSl2z, 1).len(), 0);
        assert_eq!(BasisForm::basis(Group::FullSl2z, 2), vec![BasisForm::E4E6(1, 0)]);
        assert_eq!(BasisForm::basis(Group::FullSl2z, 3), vec![BasisForm::E4E6(0, 1)]);
    }

    #[test]
    fn basis_form_strings_round_trip() {
        for s in ["Theta(0,2)", "E4^1E6^0", "TwE(4,1/2,1/2,0)"] {
            let b: BasisForm = s.parse().unwrap();
            assert_eq!(b.to_string(), s);
        }
    }
}
