//! Bernoulli data, Eisenstein series, twisted Eisenstein series and the `Γ⁰(2)` basis.

use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use super::theta::{theta_nullwert, ThetaKind};
use crate::algebra::rat::{binom, factorial};
use crate::algebra::{CycNumber, EpsSeries, Monomial, PuiseuxSeries, Rat};
use crate::error::{MathError, Result};

/// Bernoulli number `B_n` with `B_1 = -1/2`.
pub fn bernoulli(n: usize) -> Rat {
    static CACHE: OnceLock<Mutex<Vec<Rat>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(vec![Rat::one()]));
    let mut b = cache.lock().unwrap();
    while b.len() <= n {
        let m = b.len();
        // Σ_{j<m} C(m+1, j) B_j = -(m+1) B_m
        let mut acc = Rat::zero();
        for (j, bj) in b.iter().enumerate() {
            acc += &(&binom(&Rat::int(m as i64 + 1), j) * bj);
        }
        b.push(-(&acc / &Rat::int(m as i64 + 1)));
    }
    b[n].clone()
}

/// Bernoulli polynomial `B_k(x) = Σ_j C(k,j) B_j x^{k-j}`.
pub fn bernoulli_poly(k: usize, x: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for j in 0..=k {
        acc += &(&(&binom(&Rat::int(k as i64), j) * &bernoulli(j)) * &x.pow((k - j) as i64));
    }
    acc
}

/// `𝔼_k = -B_k/k! + (2/(k-1)!) Σ_{n≥1} σ_{k-1}(n) q^n` for even `k ≥ 2`.
pub fn eisenstein(k: usize, trunc: &Rat) -> Result<PuiseuxSeries> {
    if k < 2 || k % 2 == 1 {
        return Err(MathError::OutOfRange(format!("eisenstein weight must be even and >= 2, got {k}")));
    }
    let n_max = trunc.ceil_i64().max(1);
    let mut sigma = vec![Rat::zero(); n_max as usize];
    for d in 1..n_max {
        let p = Rat::int(d).pow(k as i64 - 1);
        let mut m = d;
        while m < n_max {
            sigma[m as usize] += &p;
            m += d;
        }
    }
    let c = &Rat::int(2) / &factorial(k as u64 - 1);
    let mut terms = vec![(Rat::zero(), -(&bernoulli(k) / &factorial(k as u64)))];
    for (n, s) in sigma.into_iter().enumerate().skip(1) {
        terms.push((Rat::int(n as i64), &c * &s));
    }
    Ok(PuiseuxSeries::from_rational_terms(terms, Some(trunc.clone())))
}

/// `1/(1-m)` as a Puiseux series with exponents bounded below.
pub fn expand_geometric(m: &Monomial, trunc: &Rat) -> Result<PuiseuxSeries> {
    let g = geometric_tail(m, &Rat::zero(), trunc, 0)?;
    Ok(&PuiseuxSeries::one() + g.coeff(0).unwrap())
}

/// `1/(1 - m(1+ε)^b)` expanded in `ε` through `ε^degree`.
pub fn expand_geometric_eps(m: &Monomial, b: &Rat, trunc: &Rat, degree: usize) -> Result<EpsSeries> {
    let g = geometric_tail(m, b, trunc, degree)?;
    Ok(g.add(&EpsSeries::constant(PuiseuxSeries::one(), degree)))
}

/// `G(m) = m/(1-m)` for `m = c q^e (1+ε)^b`.
fn geometric_tail(m: &Monomial, b: &Rat, trunc: &Rat, degree: usize) -> Result<EpsSeries> {
    if m.exp.is_positive() {
        let c = m.coeff();
        let mut layers: Vec<Vec<(Rat, CycNumber)>> = vec![Vec::new(); degree + 1];
        let mut n = 1i64;
        let mut cn = c.clone();
        loop {
            let e = &m.exp * &Rat::int(n);
            if e >= *trunc {
                break;
            }
            let bn = b * &Rat::int(n);
            for (k, layer) in layers.iter_mut().enumerate() {
                let w = binom(&bn, k);
                if !w.is_zero() {
                    layer.push((e.clone(), cn.scale(&w)));
                }
            }
            cn = &cn * &c;
            n += 1;
        }
        let coeffs = layers.into_iter().map(|l| PuiseuxSeries::from_terms(l, Some(trunc.clone()))).collect();
        return Ok(EpsSeries::from_coeffs(0, coeffs));
    }
    if m.exp.is_negative() {
        // m/(1-m) = -1 - m⁻¹/(1-m⁻¹)
        let inner = geometric_tail(&m.inv(), &-b, trunc, degree)?;
        let minus_one = EpsSeries::constant(PuiseuxSeries::constant(CycNumber::int(-1)), degree);
        return Ok(minus_one.add(&inner.neg()));
    }
    let c = m.coeff();
    if c.is_one() && b.is_zero() {
        return Err(MathError::Pole("geometric series 1/(1-m) at m = 1".into()));
    }
    let num: Vec<PuiseuxSeries> = EpsSeries::one_plus_eps_pow(b, degree + 1)
        .into_iter()
        .map(|w| PuiseuxSeries::constant(c.scale(&w)).truncate(trunc))
        .collect();
    let mut den: Vec<PuiseuxSeries> = num.iter().map(|x| -x).collect();
    den[0] = &den[0] + &PuiseuxSeries::one().truncate(trunc);
    let num = EpsSeries::from_coeffs(0, num);
    let den = EpsSeries::from_coeffs(0, den);
    Ok(num.div(&den, degree, false)?.cap(degree))
}

/// The bracket data `[φ; ϑ]` of a twisted Eisenstein series with `φ = e^{2πiλ}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistPair {
    pub lambda: Rat,
    pub theta: Monomial,
}

/// `𝔼_k[φ;ϑ]` through `q^trunc`.
pub fn twisted_eisenstein(k: usize, tw: &TwistPair, trunc: &Rat) -> Result<PuiseuxSeries> {
    let e = twisted_eisenstein_eps(k, &tw.lambda, &tw.theta, &Rat::zero(), trunc, 0)?;
    Ok(e.coeff(0).unwrap().clone())
}

/// `𝔼_k[e^{2πiλ}; ϑ(1+ε)^b]` expanded in `ε`.
pub fn twisted_eisenstein_eps(
    k: usize,
    lambda: &Rat,
    theta: &Monomial,
    b: &Rat,
    trunc: &Rat,
    degree: usize,
) -> Result<EpsSeries> {
    if k == 0 {
        return Err(MathError::OutOfRange("twisted eisenstein weight must be positive".into()));
    }
    if lambda.is_negative() || *lambda >= Rat::one() {
        return Err(MathError::OutOfRange(format!("λ must lie in [0,1), got {lambda}")));
    }
    let kf = factorial(k as u64 - 1);
    let constant = -(&bernoulli_poly(k, lambda) / &factorial(k as u64));
    let mut acc = EpsSeries::constant(PuiseuxSeries::constant(CycNumber::rational(constant)).truncate(trunc), degree);
    let primed = lambda.is_zero() && theta.is_one() && b.is_zero();
    let inv = theta.inv();
    let sign = if k.is_multiple_of(2) { Rat::one() } else { -Rat::one() };
    let mut r = 0i64;
    loop {
        let x = &Rat::int(r) + lambda;
        let m = inv.mul(&Monomial::q(x.clone()));
        if m.exp >= *trunc {
            break;
        }
        let w = &x.pow(k as i64 - 1) / &kf;
        if !(r == 0 && primed) && !w.is_zero() {
            let g = geometric_tail(&m, &-b, trunc, degree)?;
            acc = acc.add(&g.scale(&CycNumber::rational(w)));
        }
        r += 1;
    }
    let mut r = 1i64;
    loop {
        let x = &Rat::int(r) - lambda;
        let m = theta.mul(&Monomial::q(x.clone()));
        if m.exp >= *trunc {
            break;
        }
        let w = &(&sign * &x.pow(k as i64 - 1)) / &kf;
        if !w.is_zero() {
            let g = geometric_tail(&m, b, trunc, degree)?;
            acc = acc.add(&g.scale(&CycNumber::rational(w)));
        }
        r += 1;
    }
    Ok(acc)
}

/// `Θ̄_{r,s} = θ2^{4r} θ3^{4s} + θ2^{4s} θ3^{4r}` with theta nullwerte.
pub fn theta_bar(r: u32, s: u32, trunc: &Rat) -> PuiseuxSeries {
    let (r, s) = if r <= s { (r, s) } else { (s, r) };
    let t2 = theta_nullwert(ThetaKind::Two, trunc).pow(4).unwrap();
    let t3 = theta_nullwert(ThetaKind::Three, trunc).pow(4).unwrap();
    let a = &t2.pow(r as i64).unwrap() * &t3.pow(s as i64).unwrap();
    let b = &t2.pow(s as i64).unwrap() * &t3.pow(r as i64).unwrap();
    (&a + &b).truncate(trunc)
}
