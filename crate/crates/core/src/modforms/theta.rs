//! Jacobi and classical theta functions from their sum forms.

use serde::{Deserialize, Serialize};

use crate::algebra::{CycNumber, EpsSeries, Monomial, PuiseuxSeries, Rat};
use crate::algebra::rat::binom;
use crate::error::{MathError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ThetaKind {
    #[serde(rename = "1")]
    One,
    #[serde(rename = "2")]
    Two,
    #[serde(rename = "3")]
    Three,
    #[serde(rename = "4")]
    Four,
}

impl ThetaKind {
    pub fn from_index(i: u8) -> Result<ThetaKind> {
        Ok(match i {
            1 => ThetaKind::One,
            2 => ThetaKind::Two,
            3 => ThetaKind::Three,
            4 => ThetaKind::Four,
            _ => return Err(MathError::OutOfRange(format!("theta index {i}"))),
        })
    }

    fn half_integral(self) -> bool {
        matches!(self, ThetaKind::One | ThetaKind::Two)
    }

    /// Phase `e^{2πi·φ(r)}` multiplying the `r`-th term.
    fn phase(self, r: &Rat) -> Rat {
        match self {
            ThetaKind::One => r / &Rat::int(2),
            ThetaKind::Four => r / &Rat::int(2),
            _ => Rat::zero(),
        }
    }
}

/// Enumerates the summation indices `r ∈ Z` (or `Z + 1/2`) with `u r²/2 + s r < trunc`.
fn indices(half: bool, u: &Rat, s: &Rat, trunc: &Rat) -> Vec<Rat> {
    let offset = if half { Rat::new(1, 2) } else { Rat::zero() };
    let expo = |r: &Rat| &(&(u * r) * r) / &Rat::int(2) + s * r;
    let centre = (&(-s) / u - &offset).floor_i64();
    let mut out = Vec::new();
    let mut n = centre + 1;
    loop {
        let r = &Rat::int(n) + &offset;
        if expo(&r) >= *trunc {
            break;
        }
        out.push(r);
        n += 1;
    }
    let mut n = centre;
    loop {
        let r = &Rat::int(n) + &offset;
        if expo(&r) >= *trunc {
            break;
        }
        out.push(r);
        n -= 1;
    }
    out
}

/// `θ_i(x·(1+ε)^a; q^u)` expanded through `ε^{degree}` and `q^{trunc}`.
pub fn jacobi_theta_eps(
    kind: ThetaKind,
    arg: &Monomial,
    eps_exp: &Rat,
    modulus: &Rat,
    trunc: &Rat,
    degree: usize,
) -> Result<EpsSeries> {
    if !modulus.is_positive() {
        return Err(MathError::OutOfRange(format!("theta modulus must be positive, got {modulus}")));
    }
    let rs = indices(kind.half_integral(), modulus, &arg.exp, trunc);
    let mut layers: Vec<Vec<(Rat, CycNumber)>> = vec![Vec::with_capacity(rs.len()); degree + 1];
    for r in rs {
        let x = arg.pow(&r)?;
        let e = &(&(modulus * &r) * &r) / &Rat::int(2) + &x.exp;
        let c = &x.coeff() * &CycNumber::root_of_unity(&kind.phase(&r));
        let ar = eps_exp * &r;
        for (k, layer) in layers.iter_mut().enumerate() {
            let b = if k == 0 { Rat::one() } else { binom(&ar, k) };
            if !b.is_zero() {
                layer.push((e.clone(), c.scale(&b)));
            }
        }
    }
    let coeffs = layers.into_iter().map(|l| PuiseuxSeries::from_terms(l, Some(trunc.clone()))).collect();
    Ok(EpsSeries::from_coeffs(0, coeffs))
}

/// `θ_i(z; q^u)` for a monomial argument `z = c q^s`.
pub fn jacobi_theta(kind: ThetaKind, arg: &Monomial, modulus: &Rat, trunc: &Rat) -> Result<PuiseuxSeries> {
    let s = jacobi_theta_eps(kind, arg, &Rat::zero(), modulus, trunc, 0)?;
    Ok(s.coeff(0).cloned().unwrap())
}

/// Theta nullwert `θ_i(1; q)`.
pub fn theta_nullwert(kind: ThetaKind, trunc: &Rat) -> PuiseuxSeries {
    jacobi_theta(kind, &Monomial::one(), &Rat::one(), trunc).expect("nullwert")
}

/// `Θ_{m,k}(z; q) = Σ_{n ∈ Z + m/2k} z^{kn} q^{kn²}`.
pub fn classical_theta(m: i64, k: i64, arg: &Monomial, trunc: &Rat) -> Result<PuiseuxSeries> {
    if k <= 0 {
        return Err(MathError::OutOfRange(format!("classical theta level must be positive, got {k}")));
    }
    let kk = Rat::int(k);
    let offset = Rat::new(m, 2 * k);
    let expo = |n: &Rat| -> Result<Rat> { Ok(&(&kk * n) * n + &arg.pow(&(&kk * n))?.exp) };
    let centre = (&(&(-&arg.exp) / &Rat::int(2)) - &offset).floor_i64();
    let mut terms = Vec::new();
    for dir in [1i64, -1] {
        let mut j = if dir == 1 { centre + 1 } else { centre };
        loop {
            let n = &Rat::int(j) + &offset;
            let e = expo(&n)?;
            if e >= *trunc {
                break;
            }
            let x = arg.pow(&(&kk * &n))?;
            terms.push((e, x.coeff()));
            j += dir;
        }
    }
    Ok(PuiseuxSeries::from_terms(terms, Some(trunc.clone())))
}

/// Product form of `θ_i(z; q^u)`:
///
/// * `θ3 = ∏ (1-q^{un})(1+z q^{u(n-1/2)})(1+z⁻¹ q^{u(n-1/2)})`
/// * `θ4 = ∏ (1-q^{un})(1-z q^{u(n-1/2)})(1-z⁻¹ q^{u(n-1/2)})`
/// * `θ2 = z^{1/2} q^{u/8} ∏ (1-q^{un})(1+z q^{un})(1+z⁻¹ q^{u(n-1)})`
/// * `θ1 = i z^{1/2} q^{u/8} ∏ (1-q^{un})(1-z q^{un})(1-z⁻¹ q^{u(n-1)})`
pub fn jacobi_theta_product(kind: ThetaKind, arg: &Monomial, modulus: &Rat, trunc: &Rat) -> Result<PuiseuxSeries> {
    if !modulus.is_positive() {
        return Err(MathError::OutOfRange(format!("theta modulus must be positive, got {modulus}")));
    }
    let u = modulus;
    let (sign, pre, pre_coeff) = match kind {
        ThetaKind::Three => (1, Monomial::one(), CycNumber::one()),
        ThetaKind::Four => (-1, Monomial::one(), CycNumber::one()),
        ThetaKind::Two => (1, arg.pow(&Rat::new(1, 2))?.mul(&Monomial::q(u / &Rat::int(8))), CycNumber::one()),
        ThetaKind::One => (-1, arg.pow(&Rat::new(1, 2))?.mul(&Monomial::q(u / &Rat::int(8))), CycNumber::i()),
    };
    let inv = arg.inv();
    // each entry: (monomial m, sign) for a factor (1 + sign·m), generated lazily by n
    let factor = |n: i64| -> Vec<(Monomial, i64)> {
        let nn = Rat::int(n);
        let mut v = vec![(Monomial::q(u * &nn), -1)];
        if kind.half_integral() {
            v.push((arg.mul(&Monomial::q(u * &nn)), sign));
            v.push((inv.mul(&Monomial::q(u * &Rat::int(n - 1))), sign));
        } else {
            let e = u * &(&nn - &Rat::new(1, 2));
            v.push((arg.mul(&Monomial::q(e.clone())), sign));
            v.push((inv.mul(&Monomial::q(e)), sign));
        }
        v
    };
    let binomial = |m: &Monomial, s: i64| -> PuiseuxSeries {
        let one = PuiseuxSeries::one();
        let t = PuiseuxSeries::monomial(m.coeff().scale(&Rat::int(s)), &m.exp);
        &one + &t
    };
    let min_exp = |n: i64| factor(n).into_iter().map(|(m, _)| m.exp).min().unwrap();
    let mut v_neg = Rat::zero();
    let mut n = 1;
    while !min_exp(n).is_positive() {
        for (m, _) in factor(n) {
            if m.exp.is_negative() {
                v_neg += &m.exp;
            }
        }
        n += 1;
    }
    let work = &(trunc - &v_neg) - &pre.exp;
    let mut acc = &PuiseuxSeries::big_o(work.clone()) + &PuiseuxSeries::one();
    let mut n = 1;
    while min_exp(n) < work {
        for (m, s) in factor(n) {
            if m.exp.is_positive() {
                if m.exp < work {
                    acc = &acc * &binomial(&m, s);
                }
            } else {
                acc = &acc * &binomial(&m, s);
            }
        }
        n += 1;
    }
    let out = acc.scale(&(&pre.coeff() * &pre_coeff)).shift(&pre.exp);
    Ok(out.truncate(trunc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn theta3_nullwert_is_sum_of_squares() {
        let t = theta_nullwert(ThetaKind::Three, &Rat::int(3));
        // Σ q^{n²/2}: 1 + 2q^{1/2} + 2q^2 + ...
        assert!(t.coeff(&Rat::zero()).is_one());
        assert_eq!(t.coeff(&rat(1, 2)), CycNumber::int(2));
        assert_eq!(t.coeff(&Rat::int(2)), CycNumber::int(2));
        assert!(t.coeff(&Rat::int(1)).is_zero());
    }

    #[test]
    fn theta1_vanishes_at_one() {
        let t = theta_nullwert(ThetaKind::One, &Rat::int(6));
        assert!(t.is_zero());
    }

    #[test]
    fn theta2_leading_term() {
        let t = theta_nullwert(ThetaKind::Two, &Rat::int(2));
        assert_eq!(t.leading(), Some((rat(1, 8), CycNumber::int(2))));
    }

    #[test]
    fn theta1_half_power_of_q_argument() {
        // θ1(q^{1/3}; q): leading terms i q^{1/8}(q^{1/6} - q^{-1/6})
        let t = jacobi_theta(ThetaKind::One, &Monomial::q(rat(1, 3)), &Rat::one(), &Rat::int(1)).unwrap();
        assert_eq!(t.coeff(&rat(-1, 24)), -&CycNumber::i());
        assert_eq!(t.coeff(&rat(7, 24)), CycNumber::i());
    }
}
