//! Monomials `c·q^e` whose coefficient is a rational times a root of unity.

use serde::{Deserialize, Serialize};

use super::cyclo::CycNumber;
use super::rat::Rat;
use super::series::PuiseuxSeries;
use crate::error::{MathError, Result};

/// `scale · e^{2πi·phase} · q^{exp}` with `phase ∈ [0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Monomial {
    pub scale: Rat,
    pub phase: Rat,
    pub exp: Rat,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial { scale: Rat::one(), phase: Rat::zero(), exp: Rat::zero() }
    }

    /// `q^e`.
    pub fn q(e: Rat) -> Monomial {
        Monomial { scale: Rat::one(), phase: Rat::zero(), exp: e }
    }

    /// `e^{2πi·phase} q^e`.
    pub fn new(phase: Rat, exp: Rat) -> Monomial {
        Monomial { scale: Rat::one(), phase: phase.fract(), exp }
    }

    pub fn scaled(scale: Rat, phase: Rat, exp: Rat) -> Result<Monomial> {
        if scale.is_zero() {
            return Err(MathError::OutOfRange("monomial with zero coefficient".into()));
        }
        Ok(Monomial { scale, phase: phase.fract(), exp })
    }

    pub fn is_one(&self) -> bool {
        self.scale.is_one() && self.phase.is_zero() && self.exp.is_zero()
    }

    /// True when the coefficient is exactly 1 (the exponent may be anything).
    pub fn unit_coeff(&self) -> bool {
        self.scale.is_one() && self.phase.is_zero()
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        Monomial { scale: &self.scale * &o.scale, phase: (&self.phase + &o.phase).fract(), exp: &self.exp + &o.exp }
    }

    pub fn inv(&self) -> Monomial {
        Monomial { scale: self.scale.recip().unwrap(), phase: (-&self.phase).fract(), exp: -&self.exp }
    }

    /// Rational power, using the principal branch `e^{2πi·phase·r}` on the phase.
    pub fn pow(&self, r: &Rat) -> Result<Monomial> {
        let scale = self
            .scale
            .pow_rat(r)
            .ok_or_else(|| MathError::Unsupported(format!("({})^({r}) is not rational", self.scale)))?;
        Ok(Monomial { scale, phase: (&self.phase * r).fract(), exp: &self.exp * r })
    }

    pub fn coeff(&self) -> CycNumber {
        CycNumber::root_of_unity(&self.phase).scale(&self.scale)
    }

    pub fn to_series(&self) -> PuiseuxSeries {
        PuiseuxSeries::monomial(self.coeff(), &self.exp)
    }
}
