//! Truncated Puiseux series in `q` with cyclotomic coefficients.
//!
//! A series stores exponent numerators over a common ramification `M`, so the
//! exponent of key `k` is `k/M`. The truncation `T` records that every
//! coefficient with exponent `< T` is known; `None` marks an exact finite sum.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::cyclo::CycNumber;
use super::rat::Rat;
use crate::error::{MathError, Result};

#[derive(Clone)]
pub struct PuiseuxSeries {
    ram: u32,
    terms: BTreeMap<i64, CycNumber>,
    trunc: Option<Rat>,
}

fn key_bound(trunc: &Rat, ram: u32) -> i64 {
    (trunc * &Rat::int(ram as i64)).ceil_i64()
}

fn exp_to_key(e: &Rat, ram: u32) -> Option<i64> {
    let k = e * &Rat::int(ram as i64);
    k.to_i64()
}

fn min_trunc(a: Option<Rat>, b: Option<Rat>) -> Option<Rat> {
    match (a, b) {
        (Some(x), Some(y)) => Some(if x < y { x } else { y }),
        (x, None) => x,
        (None, y) => y,
    }
}

impl PuiseuxSeries {
    /// The exact zero series.
    pub fn zero() -> PuiseuxSeries {
        PuiseuxSeries { ram: 1, terms: BTreeMap::new(), trunc: None }
    }

    /// `O(q^T)`.
    pub fn big_o(trunc: Rat) -> PuiseuxSeries {
        PuiseuxSeries { ram: 1, terms: BTreeMap::new(), trunc: Some(trunc) }
    }

    pub fn one() -> PuiseuxSeries {
        PuiseuxSeries::constant(CycNumber::one())
    }

    pub fn constant(c: CycNumber) -> PuiseuxSeries {
        PuiseuxSeries::monomial(c, &Rat::zero())
    }

    /// The exact monomial `c q^e`.
    pub fn monomial(c: CycNumber, e: &Rat) -> PuiseuxSeries {
        let ram = e.denom_u64().expect("exponent denominator too large") as u32;
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp_to_key(e, ram).unwrap(), c);
        }
        PuiseuxSeries { ram, terms, trunc: None }
    }

    /// Builds a series from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (Rat, CycNumber)>>(it: I, trunc: Option<Rat>) -> PuiseuxSeries {
        let items: Vec<(Rat, CycNumber)> = it.into_iter().collect();
        let mut ram = 1u64;
        for (e, _) in &items {
            ram = ram.lcm(&e.denom_u64().expect("exponent denominator too large"));
        }
        let ram = ram as u32;
        let mut terms: BTreeMap<i64, CycNumber> = BTreeMap::new();
        for (e, c) in items {
            let k = exp_to_key(&e, ram).unwrap();
            let slot = terms.entry(k).or_insert_with(CycNumber::zero);
            *slot = &*slot + &c;
        }
        let mut s = PuiseuxSeries { ram, terms, trunc };
        s.normalize();
        s
    }

    /// Same as [`from_terms`](Self::from_terms) with rational coefficients.
    pub fn from_rational_terms<I: IntoIterator<Item = (Rat, Rat)>>(it: I, trunc: Option<Rat>) -> PuiseuxSeries {
        PuiseuxSeries::from_terms(it.into_iter().map(|(e, c)| (e, CycNumber::rational(c))), trunc)
    }

    pub fn ram(&self) -> u32 {
        self.ram
    }

    pub fn trunc(&self) -> Option<&Rat> {
        self.trunc.as_ref()
    }

    pub fn is_exact(&self) -> bool {
        self.trunc.is_none()
    }

    /// True when no nonzero coefficient is known.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterates `(exponent, coefficient)` in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (Rat, &CycNumber)> + '_ {
        let m = self.ram as i64;
        self.terms.iter().map(move |(k, c)| (Rat::new(*k, m), c))
    }

    pub fn coeff(&self, e: &Rat) -> CycNumber {
        match exp_to_key(e, self.ram) {
            Some(k) => self.terms.get(&k).cloned().unwrap_or_else(CycNumber::zero),
            None => CycNumber::zero(),
        }
    }

    /// Lowest exponent carrying a nonzero coefficient.
    pub fn valuation(&self) -> Option<Rat> {
        self.terms.keys().next().map(|k| Rat::new(*k, self.ram as i64))
    }

    /// Leading `(exponent, coefficient)`.
    pub fn leading(&self) -> Option<(Rat, CycNumber)> {
        self.terms.iter().next().map(|(k, c)| (Rat::new(*k, self.ram as i64), c.clone()))
    }

    /// Valuation used for truncation bookkeeping: an `O(q^T)` series counts as `T`.
    fn effective_val(&self) -> Option<Rat> {
        self.valuation().or_else(|| self.trunc.clone())
    }

    fn normalize(&mut self) {
        self.terms.retain(|_, c| !c.is_zero());
        if let Some(t) = &self.trunc {
            let b = key_bound(t, self.ram);
            self.terms.retain(|k, _| *k < b);
        }
        let mut g = self.ram as i64;
        for k in self.terms.keys() {
            g = g.gcd(k);
            if g == 1 {
                return;
            }
        }
        if g > 1 {
            let terms = std::mem::take(&mut self.terms);
            self.terms = terms.into_iter().map(|(k, c)| (k / g, c)).collect();
            self.ram /= g as u32;
        }
    }

    fn keys_at(&self, ram: u32) -> impl Iterator<Item = (i64, &CycNumber)> + '_ {
        let f = (ram / self.ram) as i64;
        self.terms.iter().map(move |(k, c)| (k * f, c))
    }

    /// Drops every term with exponent `>= t` and lowers the truncation to `t` if needed.
    pub fn truncate(&self, t: &Rat) -> PuiseuxSeries {
        let trunc = min_trunc(self.trunc.clone(), Some(t.clone()));
        let mut s = PuiseuxSeries { ram: self.ram, terms: self.terms.clone(), trunc };
        s.normalize();
        s
    }

    pub fn scale(&self, c: &CycNumber) -> PuiseuxSeries {
        if c.is_zero() {
            return PuiseuxSeries::zero();
        }
        let terms = self.terms.iter().map(|(k, x)| (*k, x * c)).collect();
        PuiseuxSeries { ram: self.ram, terms, trunc: self.trunc.clone() }
    }

    pub fn scale_rat(&self, r: &Rat) -> PuiseuxSeries {
        self.scale(&CycNumber::rational(r.clone()))
    }

    /// Multiplies by `q^e`.
    pub fn shift(&self, e: &Rat) -> PuiseuxSeries {
        let ram = (self.ram as u64).lcm(&e.denom_u64().unwrap()) as u32;
        let de = exp_to_key(e, ram).unwrap();
        let terms = self.keys_at(ram).map(|(k, c)| (k + de, c.clone())).collect();
        let mut s = PuiseuxSeries { ram, terms, trunc: self.trunc.as_ref().map(|t| t + e) };
        s.normalize();
        s
    }

    /// `q d/dq`.
    pub fn qderiv(&self) -> PuiseuxSeries {
        let m = self.ram as i64;
        let terms = self
            .terms
            .iter()
            .map(|(k, c)| (*k, c.scale(&Rat::new(*k, m))))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let mut s = PuiseuxSeries { ram: self.ram, terms, trunc: self.trunc.clone() };
        s.normalize();
        s
    }

    /// The substitution `q ↦ q^u` for positive rational `u`.
    pub fn substitute_scale(&self, u: &Rat) -> Result<PuiseuxSeries> {
        if !u.is_positive() {
            return Err(MathError::OutOfRange(format!("substitute_scale needs u > 0, got {u}")));
        }
        let un = num_traits::ToPrimitive::to_i64(&u.numer()).unwrap();
        let ud = u.denom_u64().unwrap() as u32;
        let terms = self.terms.iter().map(|(k, c)| (k * un, c.clone())).collect();
        let mut s = PuiseuxSeries { ram: self.ram * ud, terms, trunc: self.trunc.as_ref().map(|t| t * u) };
        s.normalize();
        Ok(s)
    }

    /// Multiplicative inverse. Exact non-monomial series need [`inverse_to`](Self::inverse_to).
    pub fn inverse(&self) -> Result<PuiseuxSeries> {
        self.inverse_impl(None)
    }

    /// Inverse of an exact series, expanded up to (but excluding) `q^t`.
    pub fn inverse_to(&self, t: &Rat) -> Result<PuiseuxSeries> {
        self.inverse_impl(Some(t.clone()))
    }

    fn inverse_impl(&self, target: Option<Rat>) -> Result<PuiseuxSeries> {
        let (v, c) = match self.leading() {
            Some(l) => l,
            None => {
                return Err(match &self.trunc {
                    None => MathError::DivisionByZero,
                    Some(t) => MathError::TruncationExhausted(format!("inverting O(q^{t})")),
                })
            }
        };
        let cinv = c.inv()?;
        if self.terms.len() == 1 && self.trunc.is_none() {
            return Ok(PuiseuxSeries::monomial(cinv, &-&v));
        }
        let rel = match (&self.trunc, target) {
            (Some(t), _) => t - &v,
            (None, Some(t)) => &t + &v,
            (None, None) => {
                return Err(MathError::TruncationExhausted("inverse of an exact non-monomial series needs a target truncation".into()))
            }
        };
        let mut u_terms: Vec<(i64, CycNumber)> = Vec::new();
        let vk = exp_to_key(&v, self.ram).unwrap();
        for (k, x) in self.terms.iter().skip(1) {
            u_terms.push((k - vk, x * &cinv));
        }
        let mut g = self.ram as i64;
        for (k, _) in &u_terms {
            g = g.gcd(k);
        }
        let g = g.max(1);
        let m = (self.ram as i64 / g) as u32;
        let u_terms: Vec<(usize, CycNumber)> = u_terms.into_iter().map(|(k, x)| ((k / g) as usize, x)).collect();
        let n = key_bound(&rel, m).max(0) as usize;
        let mut w: Vec<CycNumber> = Vec::with_capacity(n);
        for i in 0..n {
            if i == 0 {
                w.push(CycNumber::one());
                continue;
            }
            let mut acc = CycNumber::zero();
            for (k, x) in &u_terms {
                if *k > i {
                    break;
                }
                let y = &w[i - k];
                if !y.is_zero() {
                    acc = &acc + &(x * y);
                }
            }
            w.push(-&acc);
        }
        let terms = w.into_iter().enumerate().map(|(i, x)| (i as i64, &x * &cinv)).collect();
        let base = PuiseuxSeries { ram: m, terms, trunc: Some(rel.clone()) };
        let mut out = base.shift(&-&v);
        out.trunc = Some(&rel - &v);
        out.normalize();
        Ok(out)
    }

    pub fn pow(&self, e: i64) -> Result<PuiseuxSeries> {
        if e < 0 {
            return self.inverse()?.pow(-e);
        }
        let mut base = self.clone();
        let mut acc = PuiseuxSeries::one();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    pub fn div(&self, other: &PuiseuxSeries) -> Result<PuiseuxSeries> {
        Ok(self * &other.inverse()?)
    }

    /// True when both series agree on every exponent below their common truncation.
    pub fn agrees_with(&self, other: &PuiseuxSeries) -> bool {
        let d = self - other;
        d.is_zero()
    }

    /// Checks agreement on all exponents `< through`; fails if either series is not known that far.
    pub fn agrees_through(&self, other: &PuiseuxSeries, through: &Rat) -> Result<bool> {
        for s in [self, other] {
            if let Some(t) = &s.trunc {
                if t < through {
                    return Err(MathError::TruncationExhausted(format!("series known only below q^{t}, need q^{through}")));
                }
            }
        }
        Ok(self.truncate(through).agrees_with(&other.truncate(through)))
    }

    pub fn map_coeffs<F: Fn(&CycNumber) -> CycNumber>(&self, f: F) -> PuiseuxSeries {
        let terms = self.terms.iter().map(|(k, c)| (*k, f(c))).collect();
        let mut s = PuiseuxSeries { ram: self.ram, terms, trunc: self.trunc.clone() };
        s.normalize();
        s
    }

    /// Coefficients as rationals, failing on any irrational entry.
    pub fn rational_terms(&self) -> Result<Vec<(Rat, Rat)>> {
        self.terms().map(|(e, c)| Ok((e, c.expect_rational()?))).collect()
    }
}

impl<'a> Add<&'a PuiseuxSeries> for &'a PuiseuxSeries {
    type Output = PuiseuxSeries;
    fn add(self, rhs: &PuiseuxSeries) -> PuiseuxSeries {
        let ram = (self.ram as u64).lcm(&(rhs.ram as u64)) as u32;
        let mut terms: BTreeMap<i64, CycNumber> = self.keys_at(ram).map(|(k, c)| (k, c.clone())).collect();
        for (k, c) in rhs.keys_at(ram) {
            match terms.get_mut(&k) {
                Some(x) => *x = &*x + c,
                None => {
                    terms.insert(k, c.clone());
                }
            }
        }
        let mut s = PuiseuxSeries { ram, terms, trunc: min_trunc(self.trunc.clone(), rhs.trunc.clone()) };
        s.normalize();
        s
    }
}

impl Neg for &PuiseuxSeries {
    type Output = PuiseuxSeries;
    fn neg(self) -> PuiseuxSeries {
        let terms = self.terms.iter().map(|(k, c)| (*k, -c)).collect();
        PuiseuxSeries { ram: self.ram, terms, trunc: self.trunc.clone() }
    }
}

impl<'a> Sub<&'a PuiseuxSeries> for &'a PuiseuxSeries {
    type Output = PuiseuxSeries;
    fn sub(self, rhs: &PuiseuxSeries) -> PuiseuxSeries {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a PuiseuxSeries> for &'a PuiseuxSeries {
    type Output = PuiseuxSeries;
    fn mul(self, rhs: &PuiseuxSeries) -> PuiseuxSeries {
        let exact_zero = |s: &PuiseuxSeries| s.terms.is_empty() && s.trunc.is_none();
        if exact_zero(self) || exact_zero(rhs) {
            return PuiseuxSeries::zero();
        }
        let va = self.effective_val().unwrap();
        let vb = rhs.effective_val().unwrap();
        let trunc = min_trunc(self.trunc.as_ref().map(|t| t + &vb), rhs.trunc.as_ref().map(|t| t + &va));
        let ram = (self.ram as u64).lcm(&(rhs.ram as u64)) as u32;
        let bound = trunc.as_ref().map(|t| key_bound(t, ram));
        let a: Vec<(i64, &CycNumber)> = self.keys_at(ram).collect();
        let b: Vec<(i64, &CycNumber)> = rhs.keys_at(ram).collect();
        let mut terms: BTreeMap<i64, CycNumber> = BTreeMap::new();
        if a.is_empty() || b.is_empty() {
            let mut s = PuiseuxSeries { ram, terms, trunc };
            s.normalize();
            return s;
        }
        let lo = a[0].0 + b[0].0;
        let hi = match bound {
            Some(bd) => bd.min(a[a.len() - 1].0 + b[b.len() - 1].0 + 1),
            None => a[a.len() - 1].0 + b[b.len() - 1].0 + 1,
        };
        let width = (hi - lo).max(0) as usize;
        let both_rational = a.iter().all(|(_, c)| c.is_rational()) && b.iter().all(|(_, c)| c.is_rational());
        if both_rational {
            let ra: Vec<(i64, Rat)> = a.iter().map(|(k, c)| (*k, c.to_rational().unwrap())).collect();
            let rb: Vec<(i64, Rat)> = b.iter().map(|(k, c)| (*k, c.to_rational().unwrap())).collect();
            let mut acc: Vec<Rat> = vec![Rat::zero(); width];
            for (ka, xa) in &ra {
                for (kb, xb) in &rb {
                    let k = ka + kb;
                    if k >= hi {
                        break;
                    }
                    acc[(k - lo) as usize] += &(xa * xb);
                }
            }
            for (i, r) in acc.into_iter().enumerate() {
                if !r.is_zero() {
                    terms.insert(lo + i as i64, CycNumber::rational(r));
                }
            }
        } else {
            let mut acc: Vec<Option<CycNumber>> = vec![None; width];
            for (ka, ca) in &a {
                for (kb, cb) in &b {
                    let k = ka + kb;
                    if k >= hi {
                        break;
                    }
                    let p = *ca * *cb;
                    let slot = &mut acc[(k - lo) as usize];
                    *slot = Some(match slot.take() {
                        Some(x) => &x + &p,
                        None => p,
                    });
                }
            }
            for (i, c) in acc.into_iter().enumerate() {
                if let Some(c) = c {
                    if !c.is_zero() {
                        terms.insert(lo + i as i64, c);
                    }
                }
            }
        }
        let mut s = PuiseuxSeries { ram, terms, trunc };
        s.normalize();
        s
    }
}

macro_rules! forward_ps {
    ($tr:ident, $m:ident) => {
        impl $tr<PuiseuxSeries> for PuiseuxSeries {
            type Output = PuiseuxSeries;
            fn $m(self, rhs: PuiseuxSeries) -> PuiseuxSeries {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_ps!(Add, add);
forward_ps!(Sub, sub);
forward_ps!(Mul, mul);

impl PartialEq for PuiseuxSeries {
    fn eq(&self, other: &Self) -> bool {
        self.trunc == other.trunc && (self - other).is_zero()
    }
}

impl fmt::Display for PuiseuxSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let cs = if c.is_rational() { c.to_string() } else { format!("({c})") };
            if e.is_zero() {
                write!(f, "{cs}")?;
            } else {
                write!(f, "{cs}*q^({e})")?;
            }
        }
        if let Some(t) = &self.trunc {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "O(q^({t}))")?;
        } else if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PuiseuxSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    ram: u32,
    trunc: Option<Rat>,
    terms: Vec<(String, CycNumber)>,
}

impl Serialize for PuiseuxSeries {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self.terms.iter().map(|(k, c)| (format!("{k}/{}", self.ram), c.clone())).collect();
        SeriesRepr { ram: self.ram, trunc: self.trunc.clone(), terms }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for PuiseuxSeries {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<PuiseuxSeries, D::Error> {
        let r = SeriesRepr::deserialize(d)?;
        let mut items = Vec::with_capacity(r.terms.len());
        for (e, c) in r.terms {
            let e: Rat = e.parse().map_err(serde::de::Error::custom)?;
            items.push((e, c));
        }
        Ok(PuiseuxSeries::from_terms(items, r.trunc))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::rat;

    fn ps(terms: &[(i64, i64, i64)], t: Option<Rat>) -> PuiseuxSeries {
        PuiseuxSeries::from_rational_terms(terms.iter().map(|&(n, d, c)| (rat(n, d), Rat::int(c))), t)
    }

    #[test]
    fn geometric_inverse() {
        let one_minus_q = ps(&[(0, 1, 1), (1, 1, -1)], Some(Rat::int(10)));
        let inv = one_minus_q.inverse().unwrap();
        assert_eq!(inv.trunc(), Some(&Rat::int(10)));
        for k in 0..10 {
            assert!(inv.coeff(&Rat::int(k)).is_one());
        }
    }

    #[test]
    fn truncation_is_pessimistic_under_product() {
        let a = ps(&[(1, 2, 1)], Some(Rat::int(5)));
        let b = ps(&[(3, 1, 2)], Some(Rat::int(4)));
        let p = &a * &b;
        assert_eq!(p.trunc(), Some(&rat(9, 2)));
    }

    #[test]
    fn mixed_ramification_add() {
        let a = ps(&[(1, 2, 1)], None);
        let b = ps(&[(1, 3, 1)], None);
        let s = &a + &b;
        assert_eq!(s.ram(), 6);
        assert!(s.coeff(&rat(1, 3)).is_one());
    }

    #[test]
    fn inverse_with_offset() {
        let a = ps(&[(1, 8, 2), (9, 8, 6)], Some(rat(33, 8)));
        let b = a.inverse().unwrap();
        assert_eq!(b.trunc(), Some(&rat(31, 8)));
        let p = &a * &b;
        assert_eq!(p.trunc(), Some(&Rat::int(4)));
        assert!(p.agrees_with(&PuiseuxSeries::one()));
    }

    #[test]
    fn scale_and_derivative() {
        let a = ps(&[(1, 2, 3), (1, 1, 1)], Some(Rat::int(2)));
        let s = a.substitute_scale(&Rat::int(2)).unwrap();
        assert!(s.coeff(&Rat::int(1)) == CycNumber::int(3));
        assert_eq!(s.trunc(), Some(&Rat::int(4)));
        let d = a.qderiv();
        assert_eq!(d.coeff(&rat(1, 2)), CycNumber::rational(rat(3, 2)));
    }

    #[test]
    fn json_roundtrip() {
        let a = PuiseuxSeries::from_terms(
            vec![(rat(1, 6), CycNumber::i()), (rat(2, 3), CycNumber::int(-4))],
            Some(Rat::int(3)),
        );
        let s = serde_json::to_string(&a).unwrap();
        let b: PuiseuxSeries = serde_json::from_str(&s).unwrap();
        assert_eq!(a, b);
    }
}
