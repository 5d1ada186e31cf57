//! Dense univariate polynomials over `Q`.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::rat::Rat;

/// `Σ coeffs[k] x^k`, with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { coeffs: vec![] }
    }

    pub fn constant(c: Rat) -> Poly {
        Poly::from_coeffs(vec![c])
    }

    pub fn x() -> Poly {
        Poly::from_coeffs(vec![Rat::zero(), Rat::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// `∏ (x - r)`.
    pub fn from_roots<'a, I: IntoIterator<Item = &'a Rat>>(roots: I) -> Poly {
        roots.into_iter().fold(Poly::constant(Rat::one()), |acc, r| {
            acc.mul(&Poly::from_coeffs(vec![-r, Rat::one()]))
        })
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::from_coeffs((0..n).map(|k| &self.coeff(k) + &o.coeff(k)).collect())
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.scale(&Rat::int(-1)))
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs.iter().rev().fold(Rat::zero(), |acc, c| &(&acc * x) + c)
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Poly {
        match self.coeffs.last() {
            Some(l) => self.scale(&l.recip().unwrap()),
            None => Poly::zero(),
        }
    }

    /// True when `self = c·other` for a nonzero rational `c`.
    pub fn proportional(&self, other: &Poly) -> bool {
        !self.is_zero() && !other.is_zero() && self.monic() == other.monic()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (neg, a) = if c.is_negative() { (true, -c) } else { (false, c.clone()) };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show = !a.is_one() || k == 0;
            if show {
                write!(f, "{a}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "{}x", if show { "*" } else { "" })?,
                _ => write!(f, "{}x^{k}", if show { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn roots_and_eval() {
        let p = Poly::from_roots(&[rat(2, 3), Rat::zero(), rat(-2, 3)]);
        assert_eq!(p, Poly::from_coeffs(vec![Rat::zero(), rat(-4, 9), Rat::zero(), Rat::one()]));
        assert!(p.eval(&rat(2, 3)).is_zero());
        assert_eq!(p.eval(&Rat::one()), rat(5, 9));
        assert_eq!(p.to_string(), "x^3 - 4/9*x");
    }

    #[test]
    fn proportionality() {
        let p = Poly::from_coeffs(vec![Rat::one(), Rat::int(2)]);
        assert!(p.proportional(&p.scale(&rat(-3, 7))));
        assert!(!p.proportional(&Poly::x()));
    }
}
