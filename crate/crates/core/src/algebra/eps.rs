//! Truncated Laurent series in an auxiliary parameter `ε` with Puiseux-series coefficients.
//!
//! Used to take limits `z_i → 1` along `z_i = (1+ε)^{c_i}`: every factor is expanded in
//! `ε`, zeros and poles are tracked by the `ε`-valuation, and the limit is the `ε^0`
//! coefficient of the final result.

use super::cyclo::CycNumber;
use super::rat::{binom, Rat};
use super::series::PuiseuxSeries;
use crate::error::{MathError, Result};

/// `Σ coeffs[i] ε^{start+i} + O(ε^{start+len})`.
#[derive(Clone, Debug)]
pub struct EpsSeries {
    start: i64,
    coeffs: Vec<PuiseuxSeries>,
}

impl EpsSeries {
    /// A series independent of `ε`, known through `ε^{degree}`.
    pub fn constant(c: PuiseuxSeries, degree: usize) -> EpsSeries {
        let mut coeffs = vec![PuiseuxSeries::zero(); degree + 1];
        coeffs[0] = c;
        EpsSeries { start: 0, coeffs }
    }

    pub fn from_coeffs(start: i64, coeffs: Vec<PuiseuxSeries>) -> EpsSeries {
        EpsSeries { start, coeffs }
    }

    /// `(1+ε)^a` through `ε^{degree}`.
    pub fn one_plus_eps_pow(a: &Rat, degree: usize) -> Vec<Rat> {
        (0..=degree).map(|k| binom(a, k)).collect()
    }

    pub fn start(&self) -> i64 {
        self.start
    }

    /// Absolute precision: everything below `ε^{end}` is known.
    pub fn end(&self) -> i64 {
        self.start + self.coeffs.len() as i64
    }

    pub fn coeff(&self, order: i64) -> Option<&PuiseuxSeries> {
        if order < self.start {
            return None;
        }
        self.coeffs.get((order - self.start) as usize)
    }

    /// Lowest `ε`-order with a nonzero coefficient.
    pub fn valuation(&self) -> Option<i64> {
        self.coeffs.iter().position(|c| !c.is_zero()).map(|i| self.start + i as i64)
    }

    fn stripped(&self) -> Option<(i64, &[PuiseuxSeries])> {
        let v = self.valuation()?;
        Some((v, &self.coeffs[(v - self.start) as usize..]))
    }

    pub fn add(&self, other: &EpsSeries) -> EpsSeries {
        let start = self.start.min(other.start);
        let end = self.end().min(other.end());
        if end <= start {
            return EpsSeries { start: end, coeffs: vec![] };
        }
        let coeffs = (start..end)
            .map(|o| match (self.coeff(o), other.coeff(o)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => PuiseuxSeries::zero(),
            })
            .collect();
        EpsSeries { start, coeffs }
    }

    pub fn neg(&self) -> EpsSeries {
        EpsSeries { start: self.start, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, c: &CycNumber) -> EpsSeries {
        EpsSeries { start: self.start, coeffs: self.coeffs.iter().map(|x| x.scale(c)).collect() }
    }

    pub fn mul_series(&self, s: &PuiseuxSeries) -> EpsSeries {
        EpsSeries { start: self.start, coeffs: self.coeffs.iter().map(|x| x * s).collect() }
    }

    pub fn mul(&self, other: &EpsSeries) -> EpsSeries {
        match (self.stripped(), other.stripped()) {
            (None, None) => EpsSeries { start: self.end() + other.end(), coeffs: vec![] },
            (None, Some((vb, _))) => EpsSeries { start: self.end() + vb, coeffs: vec![] },
            (Some((va, _)), None) => EpsSeries { start: other.end() + va, coeffs: vec![] },
            (Some((va, a)), Some((vb, b))) => {
                let n = a.len().min(b.len());
                let mut coeffs = Vec::with_capacity(n);
                for k in 0..n {
                    let mut acc = PuiseuxSeries::zero();
                    for i in 0..=k {
                        if a[i].is_zero() || b[k - i].is_zero() {
                            continue;
                        }
                        acc = &acc + &(&a[i] * &b[k - i]);
                    }
                    coeffs.push(acc);
                }
                EpsSeries { start: va + vb, coeffs }
            }
        }
    }

    /// Multiplicative inverse; `no_limit` selects the error reported for a vanishing series.
    pub fn inverse(&self, degree: usize, no_limit: bool) -> Result<EpsSeries> {
        let (v, a) = match self.stripped() {
            Some(x) => x,
            None => {
                return Err(if no_limit {
                    MathError::Pole("denominator vanishes identically".into())
                } else {
                    MathError::InsufficientEpsDegree(degree)
                })
            }
        };
        if no_limit && v > 0 {
            return Err(MathError::Pole("denominator vanishes".into()));
        }
        let a0inv = a[0].inverse()?;
        let mut b: Vec<PuiseuxSeries> = Vec::with_capacity(a.len());
        b.push(a0inv.clone());
        for k in 1..a.len() {
            let mut acc = PuiseuxSeries::zero();
            for i in 1..=k {
                if a[i].is_zero() || b[k - i].is_zero() {
                    continue;
                }
                acc = &acc + &(&a[i] * &b[k - i]);
            }
            b.push(-&(&acc * &a0inv));
        }
        Ok(EpsSeries { start: -v, coeffs: b })
    }

    pub fn div(&self, other: &EpsSeries, degree: usize, no_limit: bool) -> Result<EpsSeries> {
        Ok(self.mul(&other.inverse(degree, no_limit)?))
    }

    pub fn pow(&self, e: i64, degree: usize, no_limit: bool) -> Result<EpsSeries> {
        if e < 0 {
            return self.inverse(degree, no_limit)?.pow(-e, degree, no_limit);
        }
        let mut acc = EpsSeries::constant(PuiseuxSeries::one(), degree);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        Ok(acc)
    }

    /// Drops all orders above `ε^{degree}`.
    pub fn cap(mut self, degree: usize) -> EpsSeries {
        let end = degree as i64 + 1;
        if self.end() > end {
            let keep = (end - self.start).max(0) as usize;
            self.coeffs.truncate(keep);
            if keep == 0 {
                self.start = end;
            }
        }
        self
    }

    /// The `ε → 0` limit.
    pub fn limit(&self, degree: usize) -> Result<PuiseuxSeries> {
        match self.valuation() {
            Some(v) if v < 0 => Err(MathError::Pole(format!("limit diverges like ε^{v}"))),
            Some(_) | None if self.end() <= 0 => Err(MathError::InsufficientEpsDegree(degree)),
            Some(v) if v > 0 => {
                let t = self.coeffs.iter().find_map(|c| c.trunc().cloned());
                Ok(t.map_or_else(PuiseuxSeries::zero, PuiseuxSeries::big_o))
            }
            _ => Ok(self.coeff(0).cloned().unwrap_or_else(PuiseuxSeries::zero)),
        }
    }
}

/// `lim_{ε→0} numer/denom`, both given as `ε`-expansions.
pub fn eps_limit_ratio(numer: &EpsSeries, denom: &EpsSeries, degree: usize) -> Result<PuiseuxSeries> {
    if numer.valuation().is_none() && denom.valuation().is_none() {
        return Err(MathError::InsufficientEpsDegree(degree));
    }
    numer.div(denom, degree, false)?.limit(degree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::rat;

    fn c(r: Rat) -> PuiseuxSeries {
        PuiseuxSeries::constant(CycNumber::rational(r))
    }

    #[test]
    fn ratio_of_simple_zeros() {
        // ((1+ε)^2 - 1) / ((1+ε)^3 - 1) → 2/3
        let d = 4;
        let mk = |a: i64| {
            let mut v: Vec<PuiseuxSeries> = EpsSeries::one_plus_eps_pow(&Rat::int(a), d).into_iter().map(c).collect();
            v[0] = PuiseuxSeries::zero();
            EpsSeries::from_coeffs(0, v)
        };
        let r = eps_limit_ratio(&mk(2), &mk(3), d).unwrap();
        assert_eq!(r, c(rat(2, 3)));
    }

    #[test]
    fn pole_is_reported() {
        let d = 3;
        let num = EpsSeries::constant(c(Rat::one()), d);
        let mut v = vec![PuiseuxSeries::zero(); d + 1];
        v[1] = c(Rat::one());
        let den = EpsSeries::from_coeffs(0, v);
        assert!(matches!(eps_limit_ratio(&num, &den, d), Err(MathError::Pole(_))));
    }

    #[test]
    fn vanishing_to_degree() {
        let d = 2;
        let z = EpsSeries::from_coeffs(0, vec![PuiseuxSeries::zero(); d + 1]);
        assert_eq!(eps_limit_ratio(&z, &z, d), Err(MathError::InsufficientEpsDegree(2)));
    }
}
