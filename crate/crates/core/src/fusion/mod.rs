//! Fusion rules of `L_ℓ(sl2)` at admissible level `ℓ = -2 + p/q` and of its twisted and
//! contragredient modules.
//!
//! Closed forms live in [`closed`], the bimodule-quotient oracles in [`oracle`], and the
//! `k = -4/3` Verlinde comparison in [`verlinde`].

pub mod closed;
pub mod oracle;
pub mod verlinde;

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::algebra::{Poly, Rat};
use crate::error::{MathError, Result};

pub use closed::{covered_pairs, fuse, fuse_contra, fuse_hw_hw, fuse_hw_twisted, fusion_table, FusionTable, TableRow};
pub use oracle::{bimodule_oracle, oracle_fuse, OracleKind};
pub use verlinde::{s_matrix, verlinde_check, VerlindeTables, VERLINDE_CONTRACTION};

/// Admissible level `ℓ = -2 + p/q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawLevel")]
pub struct Level {
    pub p: i64,
    pub q: i64,
}

#[derive(Deserialize)]
struct RawLevel {
    p: i64,
    q: i64,
}

impl TryFrom<RawLevel> for Level {
    type Error = MathError;
    fn try_from(r: RawLevel) -> Result<Level> {
        Level::new(r.p, r.q)
    }
}

impl Level {
    pub fn new(p: i64, q: i64) -> Result<Level> {
        if p < 2 || q < 1 || p.gcd(&q) != 1 {
            return Err(MathError::OutOfRange(format!("admissible level needs p ≥ 2, q ≥ 1, gcd(p,q) = 1; got ({p},{q})")));
        }
        Ok(Level { p, q })
    }

    pub fn t(&self) -> Rat {
        Rat::new(self.p, self.q)
    }

    pub fn ell(&self) -> Rat {
        &self.t() - &Rat::int(2)
    }

    /// All admissible labels in the given convention.
    pub fn labels(&self, convention: Convention) -> Vec<AdmLabel> {
        let off = convention.offset();
        let mut out = Vec::new();
        for kappa in 1..=self.q {
            for n in 1..self.p {
                out.push(AdmLabel { n: n - off, kappa, convention });
            }
        }
        out
    }

    /// Decomposes a weight as `a - b·t` with `0 ≤ a ≤ p-2`, `0 ≤ b ≤ q-1`.
    pub fn decompose(&self, w: &Rat) -> Option<(i64, i64)> {
        let t = self.t();
        (0..self.q).find_map(|b| {
            let a = w + &(&Rat::int(b) * &t);
            let a = a.is_integer().then(|| a.to_i64()).flatten()?;
            (0..=self.p - 2).contains(&a).then_some((a, b))
        })
    }

    /// The label of weight `w`, if it is admissible.
    pub fn label_of(&self, w: &Rat, convention: Convention) -> Option<AdmLabel> {
        self.decompose(w).map(|(a, b)| AdmLabel { n: a + 1 - convention.offset(), kappa: b + 1, convention })
    }

    /// Roots `r - st` of the Zhu algebra `C[x]/<∏(x - r + st)>`.
    pub fn zhu_roots(&self) -> Vec<Rat> {
        self.roots_shifted(&Rat::zero())
    }

    /// Roots `r - st - ℓ/2` of the twisted Zhu algebra.
    pub fn twisted_zhu_roots(&self) -> Vec<Rat> {
        self.roots_shifted(&(&self.ell() / &Rat::int(-2)))
    }

    fn roots_shifted(&self, shift: &Rat) -> Vec<Rat> {
        let t = self.t();
        let mut out = Vec::with_capacity(((self.p - 1) * self.q) as usize);
        for r in 0..=self.p - 2 {
            for s in 0..self.q {
                out.push(&(&Rat::int(r) - &(&Rat::int(s) * &t)) + shift);
            }
        }
        out
    }

    /// The defining polynomial of the (twisted) Zhu algebra.
    pub fn zhu_polynomial(&self, twisted: bool) -> Poly {
        let roots = if twisted { self.twisted_zhu_roots() } else { self.zhu_roots() };
        Poly::from_roots(&roots)
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.ell())
    }
}

/// Roots of the twisted Zhu algebra of `L_ℓ(sl2)`.
pub fn twisted_zhu_roots(lvl: &Level) -> Vec<Rat> {
    lvl.twisted_zhu_roots()
}

/// How `n` enters the weight: `j = n-1-(κ-1)t` (`Hw`) or `j = n-(κ-1)t` (`Twisted`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Convention {
    Hw,
    Twisted,
}

impl Convention {
    fn offset(self) -> i64 {
        match self {
            Convention::Hw => 0,
            Convention::Twisted => 1,
        }
    }
}

/// An admissible weight `(n, κ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AdmLabel {
    pub n: i64,
    pub kappa: i64,
    pub convention: Convention,
}

impl AdmLabel {
    pub fn hw(lvl: &Level, n: i64, kappa: i64) -> Result<AdmLabel> {
        AdmLabel { n, kappa, convention: Convention::Hw }.checked(lvl)
    }

    pub fn twisted(lvl: &Level, n: i64, kappa: i64) -> Result<AdmLabel> {
        AdmLabel { n, kappa, convention: Convention::Twisted }.checked(lvl)
    }

    pub fn vacuum(convention: Convention) -> AdmLabel {
        AdmLabel { n: 1 - convention.offset(), kappa: 1, convention }
    }

    pub fn checked(self, lvl: &Level) -> Result<AdmLabel> {
        let n = self.dlm_n();
        if !(1..lvl.p).contains(&n) || !(1..=lvl.q).contains(&self.kappa) {
            return Err(MathError::OutOfRange(format!(
                "label (n={}, κ={}, {:?}) is not admissible at level {lvl}",
                self.n, self.kappa, self.convention
            )));
        }
        Ok(self)
    }

    /// `n` in the `j = n-1-(κ-1)t` normalization, which sizes the Zhu bimodule.
    pub fn dlm_n(&self) -> i64 {
        self.n + self.convention.offset()
    }

    pub fn weight(&self, lvl: &Level) -> Rat {
        &Rat::int(self.dlm_n() - 1) - &(&Rat::int(self.kappa - 1) * &lvl.t())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Base {
    Hw,
    Contra,
}

/// Spectral-flow twist applied to a module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Flow {
    #[serde(rename = "0")]
    None,
    #[serde(rename = "-1/2")]
    MinusHalf,
    #[serde(rename = "1/2")]
    PlusHalf,
}

impl Flow {
    fn prefix(self) -> &'static str {
        match self {
            Flow::None => "",
            Flow::MinusHalf => "sigma^{-1/2}",
            Flow::PlusHalf => "sigma^{1/2}",
        }
    }
}

/// `L(ℓ,j)`, `L(ℓ,j)*` and their images under `σ^{±1/2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ModuleLabel {
    pub base: Base,
    pub flow: Flow,
    pub label: AdmLabel,
}

impl ModuleLabel {
    pub fn new(base: Base, flow: Flow, label: AdmLabel) -> ModuleLabel {
        ModuleLabel { base, flow, label }
    }

    pub fn hw(label: AdmLabel) -> ModuleLabel {
        ModuleLabel::new(Base::Hw, Flow::None, label)
    }

    pub fn contra(label: AdmLabel) -> ModuleLabel {
        ModuleLabel::new(Base::Contra, Flow::None, label)
    }

    pub fn tw_hw(label: AdmLabel) -> ModuleLabel {
        ModuleLabel::new(Base::Hw, Flow::MinusHalf, label)
    }

    pub fn tw_contra(label: AdmLabel) -> ModuleLabel {
        ModuleLabel::new(Base::Contra, Flow::PlusHalf, label)
    }

    pub fn with_flow(self, flow: Flow) -> ModuleLabel {
        ModuleLabel { flow, ..self }
    }

    pub fn weight(&self, lvl: &Level) -> Rat {
        self.label.weight(lvl)
    }

    /// `L(j)* ≅ L(j)` when `κ = 1`, since the top space is then finite dimensional.
    pub fn canonical(self) -> ModuleLabel {
        if self.base == Base::Contra && self.label.kappa == 1 {
            ModuleLabel { base: Base::Hw, ..self }
        } else {
            self
        }
    }

    pub fn display(&self, lvl: &Level) -> String {
        let star = if self.base == Base::Contra { "*" } else { "" };
        let inner = format!("L({}){star}", self.weight(lvl));
        match self.flow {
            Flow::None => inner,
            fl => format!("{}({inner})", fl.prefix()),
        }
    }

    /// Parses `L(j)`, `L(j)*`, `sigma^{-1/2}(L(j))`, `sigma^{1/2}(L(j)*)`, ...
    ///
    /// The convention is twisted for `sigma^{-1/2}(L(j))` and for untwisted `L(j)` when
    /// `twisted_hw` is set, and `hw` otherwise.
    pub fn parse(lvl: &Level, s: &str, twisted_hw: bool) -> Result<ModuleLabel> {
        let bad = || MathError::Parse(format!("module label {s:?}"));
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (flow, rest) = if let Some(r) = s.strip_prefix("sigma^{-1/2}(").or_else(|| s.strip_prefix("sigma^-1/2(")) {
            (Flow::MinusHalf, r.strip_suffix(')').ok_or_else(bad)?)
        } else if let Some(r) = s.strip_prefix("sigma^{1/2}(").or_else(|| s.strip_prefix("sigma^1/2(")) {
            (Flow::PlusHalf, r.strip_suffix(')').ok_or_else(bad)?)
        } else {
            (Flow::None, s.as_str())
        };
        let (base, rest) = match rest.strip_suffix('*') {
            Some(r) => (Base::Contra, r),
            None => (Base::Hw, rest),
        };
        let j: Rat = rest.strip_prefix("L(").and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?.parse()?;
        let convention = match (base, flow) {
            (Base::Hw, Flow::MinusHalf) => Convention::Twisted,
            (Base::Hw, Flow::None) if twisted_hw => Convention::Twisted,
            _ => Convention::Hw,
        };
        let label = lvl
            .label_of(&j, convention)
            .ok_or_else(|| MathError::OutOfRange(format!("{j} is not an admissible weight at level {lvl}")))?;
        Ok(ModuleLabel { base, flow, label })
    }
}

/// A direct sum of modules; empty means the fusion product vanishes.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FusionResult {
    pub summands: Vec<ModuleLabel>,
}

impl FusionResult {
    pub fn zero() -> FusionResult {
        FusionResult::default()
    }

    pub fn from_summands(mut summands: Vec<ModuleLabel>) -> FusionResult {
        summands.sort();
        FusionResult { summands }
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    /// Multiplicity of `m`, identifying isomorphic labels.
    pub fn multiplicity(&self, m: &ModuleLabel) -> usize {
        let m = m.canonical();
        self.summands.iter().filter(|x| x.canonical() == m).count()
    }

    pub fn contains(&self, m: &ModuleLabel) -> bool {
        self.multiplicity(m) > 0
    }

    /// The same sum with every label in canonical form.
    pub fn canonical(&self) -> FusionResult {
        FusionResult::from_summands(self.summands.iter().map(|m| m.canonical()).collect())
    }

    pub fn weights(&self, lvl: &Level) -> Vec<Rat> {
        self.summands.iter().map(|m| m.weight(lvl)).collect()
    }

    pub fn display(&self, lvl: &Level) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.summands.iter().map(|m| m.display(lvl)).collect::<Vec<_>>().join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn level_checks() {
        assert!(Level::new(2, 3).is_ok());
        assert!(Level::new(2, 4).is_err());
        assert!(Level::new(1, 3).is_err());
        assert_eq!(Level::new(2, 3).unwrap().ell(), rat(-4, 3));
    }

    #[test]
    fn roots_at_minus_four_thirds() {
        let mut r = Level::new(2, 3).unwrap().twisted_zhu_roots();
        r.sort();
        assert_eq!(r, vec![rat(-2, 3), Rat::zero(), rat(2, 3)]);
        assert_eq!(Level::new(2, 1).unwrap().twisted_zhu_roots(), vec![Rat::zero()]);
    }

    #[test]
    fn root_count() {
        for (p, q) in [(3, 2), (2, 5), (3, 4)] {
            assert_eq!(Level::new(p, q).unwrap().twisted_zhu_roots().len() as i64, (p - 1) * q);
        }
    }

    #[test]
    fn label_weights() {
        let l = Level::new(2, 3).unwrap();
        let ws: Vec<Rat> = l.labels(Convention::Hw).iter().map(|a| a.weight(&l)).collect();
        assert_eq!(ws, vec![Rat::zero(), rat(-2, 3), rat(-4, 3)]);
        let tw: Vec<Rat> = l.labels(Convention::Twisted).iter().map(|a| a.weight(&l)).collect();
        assert_eq!(ws, tw);
        for a in l.labels(Convention::Twisted) {
            assert_eq!(l.label_of(&a.weight(&l), Convention::Twisted), Some(a));
        }
    }

    #[test]
    fn parse_round_trip() {
        let l = Level::new(3, 2).unwrap();
        for s in ["L(-1/2)*", "sigma^{-1/2}(L(1))", "sigma^{1/2}(L(0)*)", "L(-3/2)"] {
            let m = ModuleLabel::parse(&l, s, false).unwrap();
            assert_eq!(m.display(&l), s);
        }
        assert!(ModuleLabel::parse(&l, "L(2)", false).is_err());
    }
}
