//! Normal ordering for affine `sl2` acting on highest weight, vacuum and contragredient
//! Verma modules.
//!
//! A monomial lists its modes left to right; the rightmost acts first. Normal form sorts
//! the creation modes by `(mode, generator)` with `f < h < e`.

mod parse;
pub mod ul0;
pub mod zhu;

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::Rat;
use crate::error::{MathError, Result};

pub use parse::{parse_vector, ModuleVector};
pub use ul0::{ul0_reduce, Ul0Report, UL0Element};
pub use zhu::{zhu_twisted_image, ZhuImage};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Gen {
    F,
    H,
    E,
}

impl Gen {
    /// `h0`-weight of the generator.
    pub fn charge(self) -> i64 {
        match self {
            Gen::E => 2,
            Gen::H => 0,
            Gen::F => -2,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Gen::E => 'e',
            Gen::H => 'h',
            Gen::F => 'f',
        }
    }

    /// `[x, y] = c·z`.
    fn bracket(self, o: Gen) -> Option<(i64, Gen)> {
        use Gen::*;
        match (self, o) {
            (E, F) => Some((1, H)),
            (F, E) => Some((-1, H)),
            (H, E) => Some((2, E)),
            (E, H) => Some((-2, E)),
            (H, F) => Some((-2, F)),
            (F, H) => Some((2, F)),
            _ => None,
        }
    }

    /// Normalized invariant form with `⟨e,f⟩ = 1`, `⟨h,h⟩ = 2`.
    fn form(self, o: Gen) -> i64 {
        use Gen::*;
        match (self, o) {
            (E, F) | (F, E) => 1,
            (H, H) => 2,
            _ => 0,
        }
    }
}

/// A single mode `x_(n)`.
pub type Mode = (Gen, i64);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModuleKind {
    /// Highest weight Verma module: `e_0` and positive modes kill the generator.
    Verma,
    /// Vacuum module: all nonnegative modes kill the vacuum.
    Vacuum,
    /// Contragredient side: `f_0` and positive modes kill the generator.
    Contra,
}

/// The module a PBW element lives in.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleData {
    pub kind: ModuleKind,
    pub level: Rat,
    /// `h_0`-eigenvalue of the generating vector.
    pub weight: Rat,
}

impl ModuleData {
    pub fn verma(level: Rat, weight: Rat) -> ModuleData {
        ModuleData { kind: ModuleKind::Verma, level, weight }
    }

    pub fn vacuum(level: Rat) -> ModuleData {
        ModuleData { kind: ModuleKind::Vacuum, level, weight: Rat::zero() }
    }

    pub fn contra(level: Rat, weight: Rat) -> ModuleData {
        ModuleData { kind: ModuleKind::Contra, level, weight }
    }

    fn creates(&self, (g, n): Mode) -> bool {
        n < 0
            || (n == 0
                && match self.kind {
                    ModuleKind::Verma => g == Gen::F,
                    ModuleKind::Contra => g == Gen::E,
                    ModuleKind::Vacuum => false,
                })
    }

    /// Raising operators used by [`is_singular`] when none are given. The vacuum set is
    /// the positive modes only, so weight-zero members of an `sl2` multiplet qualify.
    pub fn default_raising(&self) -> Vec<Mode> {
        match self.kind {
            ModuleKind::Verma => vec![(Gen::E, 0), (Gen::F, 1)],
            ModuleKind::Contra => vec![(Gen::F, 0), (Gen::E, 1)],
            ModuleKind::Vacuum => vec![(Gen::E, 1), (Gen::H, 1), (Gen::F, 1)],
        }
    }
}

fn key((g, n): Mode) -> (i64, Gen) {
    (n, g)
}

/// Ordered product of creation modes, leftmost acting last.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ModeMonomial(pub Vec<Mode>);

impl ModeMonomial {
    pub fn is_normal(&self) -> bool {
        self.0.windows(2).all(|w| key(w[0]) <= key(w[1]))
    }

    /// `h0`-charge relative to the generating vector.
    pub fn charge(&self) -> i64 {
        self.0.iter().map(|(g, _)| g.charge()).sum()
    }

    /// Depth `-Σ modes`.
    pub fn depth(&self) -> i64 {
        -self.0.iter().map(|(_, n)| n).sum::<i64>()
    }
}

impl fmt::Display for ModeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (g, n) in &self.0 {
            write!(f, "{}[{n}]", g.symbol())?;
        }
        Ok(())
    }
}

/// A linear combination of normal-ordered monomials applied to the generating vector.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(into = "Vec<(Rat, ModeMonomial)>", from = "Vec<(Rat, ModeMonomial)>")]
pub struct PBWElement {
    terms: BTreeMap<ModeMonomial, Rat>,
}

impl PBWElement {
    pub fn zero() -> PBWElement {
        PBWElement::default()
    }

    /// The generating vector itself.
    pub fn vacuum() -> PBWElement {
        PBWElement::monomial(ModeMonomial::default(), Rat::one())
    }

    pub fn monomial(m: ModeMonomial, c: Rat) -> PBWElement {
        let mut e = PBWElement::zero();
        e.add_term(m, &c);
        e
    }

    /// Builds `Σ c·m`, normal-ordering each monomial inside `module`.
    pub fn from_terms(terms: Vec<(Rat, Vec<Mode>)>, module: &ModuleData) -> PBWElement {
        let mut out = PBWElement::zero();
        for (c, modes) in terms {
            let mut v = PBWElement::vacuum();
            for &(g, n) in modes.iter().rev() {
                v = apply_mode(g, n, &v, module);
            }
            out = out.add(&v.scale(&c));
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ModeMonomial, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &ModeMonomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, m: ModeMonomial, c: &Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, o: &PBWElement) -> PBWElement {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> PBWElement {
        if c.is_zero() {
            return PBWElement::zero();
        }
        PBWElement { terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    /// `(charge, depth)` when all terms share it.
    pub fn homogeneous_degree(&self) -> Option<(i64, i64)> {
        let mut it = self.terms.keys().map(|m| (m.charge(), m.depth()));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }
}

impl From<PBWElement> for Vec<(Rat, ModeMonomial)> {
    fn from(e: PBWElement) -> Self {
        e.terms.into_iter().map(|(m, c)| (c, m)).collect()
    }
}

impl From<Vec<(Rat, ModeMonomial)>> for PBWElement {
    fn from(v: Vec<(Rat, ModeMonomial)>) -> Self {
        let mut e = PBWElement::zero();
        for (c, m) in v {
            e.add_term(m, &c);
        }
        e
    }
}

impl fmt::Display for PBWElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*{m}")?;
        }
        Ok(())
    }
}

fn apply_to_monomial(x: Mode, mono: &[Mode], module: &ModuleData) -> PBWElement {
    let Some((&first, rest)) = mono.split_first() else {
        return if module.creates(x) {
            PBWElement::monomial(ModeMonomial(vec![x]), Rat::one())
        } else if x == (Gen::H, 0) {
            PBWElement::monomial(ModeMonomial::default(), module.weight.clone())
        } else {
            PBWElement::zero()
        };
    };
    if module.creates(x) && key(x) <= key(first) {
        let mut v = Vec::with_capacity(mono.len() + 1);
        v.push(x);
        v.extend_from_slice(mono);
        return PBWElement::monomial(ModeMonomial(v), Rat::one());
    }
    // x first rest = first (x rest) + [x, first] rest
    let moved = apply_to_monomial(x, rest, module);
    let mut out = apply_mode(first.0, first.1, &moved, module);
    let (m, n) = (x.1, first.1);
    if let Some((c, g)) = x.0.bracket(first.0) {
        out = out.add(&apply_to_monomial((g, m + n), rest, module).scale(&Rat::int(c)));
    }
    let central = m * x.0.form(first.0);
    if m + n == 0 && central != 0 {
        let rest_el = PBWElement::monomial(ModeMonomial(rest.to_vec()), Rat::one());
        out = out.add(&rest_el.scale(&(&module.level * &Rat::int(central))));
    }
    out
}

/// `g_(n) · v`, normal-ordered, with `K` replaced by the level.
pub fn apply_mode(g: Gen, n: i64, v: &PBWElement, module: &ModuleData) -> PBWElement {
    let mut out = PBWElement::zero();
    for (m, c) in &v.terms {
        out = out.add(&apply_to_monomial((g, n), &m.0, module).scale(c));
    }
    out
}

/// True iff every raising operator kills `v`; `raising = None` uses the module default.
pub fn is_singular(v: &PBWElement, module: &ModuleData, raising: Option<&[Mode]>) -> Result<bool> {
    if v.homogeneous_degree().is_none() && !v.is_zero() {
        return Err(MathError::Unsupported("singular-vector test needs a homogeneous vector".into()));
    }
    let default = module.default_raising();
    let ops = raising.unwrap_or(&default);
    Ok(ops.iter().all(|&(g, n)| apply_mode(g, n, v, module).is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn verma() -> ModuleData {
        ModuleData::verma(rat(-4, 3), rat(-2, 3))
    }

    fn single(g: Gen, n: i64) -> PBWElement {
        apply_mode(g, n, &PBWElement::vacuum(), &verma())
    }

    #[test]
    fn e1_f_minus1() {
        let m = verma();
        let v = apply_mode(Gen::E, 1, &single(Gen::F, -1), &m);
        assert_eq!(v, PBWElement::vacuum().scale(&(&m.weight + &m.level)));
    }

    #[test]
    fn h1_h_minus1() {
        let m = verma();
        let v = apply_mode(Gen::H, 1, &single(Gen::H, -1), &m);
        assert_eq!(v, PBWElement::vacuum().scale(&(&Rat::int(2) * &m.level)));
    }

    #[test]
    fn e0_f0() {
        let m = verma();
        let v = apply_mode(Gen::E, 0, &single(Gen::F, 0), &m);
        assert_eq!(v, PBWElement::vacuum().scale(&m.weight));
    }

    #[test]
    fn normal_form_is_sorted() {
        let m = verma();
        let v = PBWElement::from_terms(vec![(Rat::one(), vec![(Gen::E, -1), (Gen::F, -2), (Gen::H, -1)])], &m);
        assert!(v.terms().all(|(mono, _)| mono.is_normal()));
        assert_eq!(v.homogeneous_degree(), Some((0, 4)));
    }

    #[test]
    fn contra_zero_mode() {
        let m = ModuleData::contra(rat(-4, 3), rat(2, 3));
        let v = apply_mode(Gen::F, 0, &apply_mode(Gen::E, 0, &PBWElement::vacuum(), &m), &m);
        // f0 e0 v = e0 f0 v - h0 v = -(2/3) v
        assert_eq!(v, PBWElement::vacuum().scale(&rat(-2, 3)));
    }
}
