//! The quotient `U(L_0)` spanned by `T_-^a T_0^b T_+^d` with
//! `[T_0,T_+] = -2T_+`, `[T_0,T_-] = 2T_-`, `[T_+,T_-] = T_0`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::rat::binom;
use crate::algebra::Rat;
use crate::error::{MathError, Result};
use crate::fusion::Level;

/// Exponents `(a, b, d)` of `T_-^a T_0^b T_+^d`.
pub type Ul0Key = (u32, u32, u32);

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Ul0Gen {
    Minus,
    Zero,
    Plus,
}

#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(into = "Vec<(Ul0Key, Rat)>", from = "Vec<(Ul0Key, Rat)>")]
pub struct UL0Element {
    terms: BTreeMap<Ul0Key, Rat>,
}

impl From<UL0Element> for Vec<(Ul0Key, Rat)> {
    fn from(e: UL0Element) -> Self {
        e.terms.into_iter().collect()
    }
}

impl From<Vec<(Ul0Key, Rat)>> for UL0Element {
    fn from(v: Vec<(Ul0Key, Rat)>) -> Self {
        let mut e = UL0Element::zero();
        for (k, c) in v {
            e.add_term(k, &c);
        }
        e
    }
}

impl UL0Element {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial((0, 0, 0), Rat::one())
    }

    pub fn monomial(k: Ul0Key, c: Rat) -> Self {
        let mut e = Self::zero();
        e.add_term(k, &c);
        e
    }

    pub fn generator(g: Ul0Gen) -> Self {
        Self::monomial(
            match g {
                Ul0Gen::Minus => (1, 0, 0),
                Ul0Gen::Zero => (0, 1, 0),
                Ul0Gen::Plus => (0, 0, 1),
            },
            Rat::one(),
        )
    }

    /// `G_α = T_-T_+ - αT_0 + α(α+1)`.
    pub fn g_alpha(alpha: &Rat) -> Self {
        let mut e = Self::monomial((1, 0, 1), Rat::one());
        e.add_term((0, 1, 0), &-alpha);
        e.add_term((0, 0, 0), &(alpha * &(alpha + &Rat::one())));
        e
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Ul0Key, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, k: Ul0Key) -> Rat {
        self.terms.get(&k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, k: Ul0Key, c: &Rat) {
        if c.is_zero() {
            return;
        }
        let v = self.terms.entry(k).or_insert_with(Rat::zero);
        *v += c;
        if v.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.add_term(*k, c);
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.add_term(*k, &(v * c));
        }
        out
    }

    /// `self · g`.
    pub fn mul_gen(&self, g: Ul0Gen) -> Self {
        let mut out = Self::zero();
        for (&(a, b, d), c) in &self.terms {
            match g {
                Ul0Gen::Plus => out.add_term((a, b, d + 1), c),
                Ul0Gen::Zero => {
                    // T_+^d T_0 = (T_0 + 2d) T_+^d
                    out.add_term((a, b + 1, d), c);
                    out.add_term((a, b, d), &(c * &Rat::int(2 * d as i64)));
                }
                Ul0Gen::Minus => {
                    // T_0^b T_- = T_- (T_0 + 2)^b
                    for i in 0..=b {
                        let w = &binom(&Rat::int(b as i64), i as usize) * &Rat::int(2i64.pow(b - i));
                        out.add_term((a + 1, i, d), &(c * &w));
                    }
                    // T_+^d T_- = T_- T_+^d + (d T_0 + d(d-1)) T_+^{d-1}
                    if d > 0 {
                        let dd = d as i64;
                        out.add_term((a, b + 1, d - 1), &(c * &Rat::int(dd)));
                        out.add_term((a, b, d - 1), &(c * &Rat::int(dd * (dd - 1))));
                    }
                }
            }
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for (&(a, b, d), c) in &o.terms {
            let mut x = self.scale(c);
            for _ in 0..a {
                x = x.mul_gen(Ul0Gen::Minus);
            }
            for _ in 0..b {
                x = x.mul_gen(Ul0Gen::Zero);
            }
            for _ in 0..d {
                x = x.mul_gen(Ul0Gen::Plus);
            }
            out = out.add(&x);
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Drops the right ideal `T_- U(L_0)`, i.e. every monomial with `a > 0`.
    pub fn reduce_mod_tminus(&self) -> Self {
        Self { terms: self.terms.iter().filter(|(k, _)| k.0 == 0).map(|(k, v)| (*k, v.clone())).collect() }
    }
}

impl fmt::Display for UL0Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, ((a, b, d), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*T-^{a} T0^{b} T+^{d}")?;
        }
        Ok(())
    }
}

fn poly_t0(c0: &Rat, c1: &Rat) -> UL0Element {
    UL0Element::monomial((0, 0, 0), c0.clone()).add(&UL0Element::monomial((0, 1, 0), c1.clone()))
}

fn tminus(a: u32) -> UL0Element {
    UL0Element::monomial((a, 0, 0), Rat::one())
}

fn tzero(b: u32) -> UL0Element {
    UL0Element::monomial((0, b, 0), Rat::one())
}

fn tplus(d: u32) -> UL0Element {
    UL0Element::monomial((0, 0, d), Rat::one())
}

/// `P(E_1(n,κ)) = ∏_{r=1}^{n} ∏_{s=1}^{κ-1} G_{-r-st} · T_+^n`.
pub fn p_e1(n: u32, kappa: u32, lvl: &Level) -> UL0Element {
    let t = lvl.t();
    let mut acc = UL0Element::one();
    for r in 1..=n as i64 {
        for s in 1..kappa as i64 {
            acc = acc.mul(&UL0Element::g_alpha(&-&(&Rat::int(r) + &(&Rat::int(s) * &t))));
        }
    }
    acc.mul(&tplus(n))
}

/// `P(E_2(n,κ)) = ∏_{r=0}^{p-n-1} ∏_{s=1}^{q-κ} G_{r+st} · T_-^{p-n}`.
pub fn p_e2(n: u32, kappa: u32, lvl: &Level) -> UL0Element {
    let t = lvl.t();
    let pn = lvl.p as u32 - n;
    let mut acc = UL0Element::one();
    for r in 0..pn as i64 {
        for s in 1..=(lvl.q - kappa as i64) {
            acc = acc.mul(&UL0Element::g_alpha(&(&Rat::int(r) + &(&Rat::int(s) * &t))));
        }
    }
    acc.mul(&tminus(pn))
}

/// Both sides of the two reduction identities, reduced modulo `T_- U(L_0)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ul0Report {
    pub a: u32,
    pub b: u32,
    pub d: u32,
    pub n: u32,
    pub kappa: u32,
    pub e1_expanded: UL0Element,
    pub e1_closed: UL0Element,
    pub e2_expanded: UL0Element,
    pub e2_closed: UL0Element,
    /// `"d < p-n"` or `"d >= p-n"`.
    pub e2_branch: String,
}

impl Ul0Report {
    pub fn e1_agrees(&self) -> bool {
        self.e1_expanded == self.e1_closed
    }

    pub fn e2_agrees(&self) -> bool {
        self.e2_expanded == self.e2_closed
    }
}

pub const UL0_BOUND: u32 = 4;

/// Expands `T_-^a T_0^b T_+^d P(E_i(n,κ))` and compares with the closed forms.
pub fn ul0_reduce(a: u32, b: u32, d: u32, n: u32, kappa: u32, lvl: &Level) -> Result<Ul0Report> {
    if [a, b, d, n, kappa].iter().any(|&x| x > UL0_BOUND) {
        return Err(MathError::OutOfRange(format!("parameters must be at most {UL0_BOUND}")));
    }
    if n < 1 || n as i64 >= lvl.p || kappa < 1 || kappa as i64 > lvl.q {
        return Err(MathError::OutOfRange(format!("(n, kappa) = ({n}, {kappa}) is not admissible at level {lvl}")));
    }
    let t = lvl.t();
    let prefix = tminus(a).mul(&tzero(b)).mul(&tplus(d));
    let e1_expanded = prefix.mul(&p_e1(n, kappa, lvl)).reduce_mod_tminus();
    let e2_expanded = prefix.mul(&p_e2(n, kappa, lvl)).reduce_mod_tminus();

    let mut e1 = tminus(a);
    for r in 1..=n as i64 {
        for s in 1..kappa as i64 {
            let c = &(&Rat::int(r + d as i64) + &(&Rat::int(s) * &t));
            e1 = e1.mul(&poly_t0(&(c - &Rat::one()), &Rat::one()).scale(c));
        }
    }
    let e1_closed = e1.mul(&tzero(b)).mul(&tplus(n + d)).reduce_mod_tminus();

    let pn = lvl.p as u32 - n;
    let (e2, branch) = if d < pn {
        let mut e2 = tminus(a + pn - d).mul(&poly_t0(&Rat::int(2 * (pn - d) as i64), &Rat::one()).pow(b));
        for r in 0..pn as i64 {
            for s in 1..=(lvl.q - kappa as i64) {
                for i in 1..=d as i64 {
                    let g1 = &(&Rat::int(r - pn as i64) + &(&Rat::int(s) * &t));
                    let g2 = Rat::int(-i - pn as i64 + d as i64);
                    e2 = e2.mul(&UL0Element::g_alpha(g1)).mul(&UL0Element::g_alpha(&g2));
                }
            }
        }
        (e2, "d < p-n")
    } else {
        let m = (d - pn) as i64;
        let mut e2 = tminus(a);
        for r in 1..=pn as i64 {
            for s in 0..=(lvl.q - kappa as i64) {
                let c = &(&Rat::int(s) * &t) - &Rat::int(m + r);
                e2 = e2.mul(&poly_t0(&(&c + &Rat::one()), &Rat::int(-1)).scale(&c));
            }
        }
        (e2.mul(&tzero(b)).mul(&tplus(m as u32)), "d >= p-n")
    };
    Ok(Ul0Report {
        a,
        b,
        d,
        n,
        kappa,
        e1_expanded,
        e1_closed,
        e2_expanded,
        e2_closed: e2.reduce_mod_tminus(),
        e2_branch: branch.into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use Ul0Gen::*;

    #[test]
    fn sl2_relations() {
        let (m, z, p) = (UL0Element::generator(Minus), UL0Element::generator(Zero), UL0Element::generator(Plus));
        let br = |x: &UL0Element, y: &UL0Element| x.mul(y).add(&y.mul(x).scale(&Rat::int(-1)));
        assert_eq!(br(&z, &p), p.scale(&Rat::int(-2)));
        assert_eq!(br(&z, &m), m.scale(&Rat::int(2)));
        assert_eq!(br(&p, &m), z);
    }

    #[test]
    fn g_alpha_shifts() {
        let p = UL0Element::generator(Plus);
        let alpha = Rat::new(-5, 3);
        let g = UL0Element::g_alpha(&alpha);
        assert_eq!(p.mul(&g), UL0Element::g_alpha(&(&alpha - &Rat::one())).mul(&p));
        // T_+ T_- = G_{-1}
        assert_eq!(p.mul(&UL0Element::generator(Minus)), UL0Element::g_alpha(&Rat::int(-1)));
    }

    #[test]
    fn small_cases_agree() {
        let l = Level::new(2, 3).unwrap();
        let r = ul0_reduce(0, 0, 0, 1, 2, &l).unwrap();
        assert!(r.e1_agrees() && !r.e1_expanded.is_zero());
        let l = Level::new(3, 2).unwrap();
        let r = ul0_reduce(0, 0, 2, 1, 1, &l).unwrap();
        assert_eq!(r.e2_branch, "d >= p-n");
        assert!(r.e2_agrees() && !r.e2_expanded.is_zero());
    }

    #[test]
    fn bound_enforced() {
        let l = Level::new(2, 3).unwrap();
        assert!(ul0_reduce(5, 0, 0, 1, 1, &l).is_err());
        assert!(ul0_reduce(0, 0, 0, 2, 1, &l).is_err());
    }
}
