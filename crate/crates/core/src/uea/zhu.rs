//! Image of weight-zero vacuum vectors in the `σ`-twisted Zhu algebra `C[x]`.
//!
//! The leftmost mode of each monomial is rewritten until only `h_{(-1)}` powers remain:
//!
//! * `u ∈ {e, f}`: `u(-m-1)w ≡ -Σ_{k≥1} C(1/2, k) u(-m-1+k)w`;
//! * `h(-m-2)w ≡ -h(-m-1)w`;
//! * `[h(-1)w] = x·[w]` for `h_0`-charge zero `w`.
//!
//! Each rewrite strictly lowers the depth, and a positive mode beyond the depth of `w`
//! annihilates it, so the binomial tails are finite.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{apply_mode, Gen, ModeMonomial, ModuleData, PBWElement};
use crate::algebra::rat::binom;
use crate::algebra::{Poly, Rat};
use crate::error::{MathError, Result};
use crate::fusion::Level;

/// Depth beyond which the reduction refuses to run.
pub const MAX_DEPTH: i64 = 24;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZhuImage {
    pub polynomial: Poly,
    /// Image of every monomial of the input, in input order.
    pub pieces: Vec<(ModeMonomial, Poly)>,
}

impl ZhuImage {
    /// True when the image is a nonzero multiple of `∏ (x - r)`.
    pub fn vanishes_exactly_at(&self, roots: &[Rat]) -> bool {
        !self.polynomial.is_zero() && self.polynomial.proportional(&Poly::from_roots(roots))
    }
}

struct Reducer {
    module: ModuleData,
    memo: HashMap<ModeMonomial, Poly>,
}

impl Reducer {
    fn element(&mut self, v: &PBWElement) -> Result<Poly> {
        let mut acc = Poly::zero();
        for (m, c) in v.terms() {
            acc = acc.add(&self.monomial(m)?.scale(c));
        }
        Ok(acc)
    }

    fn monomial(&mut self, m: &ModeMonomial) -> Result<Poly> {
        if let Some(p) = self.memo.get(m) {
            return Ok(p.clone());
        }
        if m.depth() > MAX_DEPTH {
            return Err(MathError::TruncationExhausted(format!("depth {} exceeds {MAX_DEPTH}", m.depth())));
        }
        if m.charge() != 0 {
            return Err(MathError::Unsupported(format!("monomial {m} has nonzero h0-weight")));
        }
        let p = match m.0.split_first() {
            None => Poly::constant(Rat::one()),
            Some((&(g, n), rest)) => {
                let w = PBWElement::monomial(ModeMonomial(rest.to_vec()), Rat::one());
                match g {
                    Gen::H if n == -1 => Poly::x().mul(&self.monomial(&ModeMonomial(rest.to_vec()))?),
                    Gen::H => self.element(&apply_mode(Gen::H, n + 1, &w, &self.module))?.scale(&Rat::int(-1)),
                    _ => {
                        let half = Rat::new(1, 2);
                        let depth = -rest.iter().map(|(_, k)| k).sum::<i64>();
                        let mut acc = Poly::zero();
                        for k in 1.. {
                            let mode = n + k;
                            if mode > depth {
                                break;
                            }
                            let c = -&binom(&half, k as usize);
                            let term = apply_mode(g, mode, &w, &self.module);
                            acc = acc.add(&self.element(&term)?.scale(&c));
                        }
                        acc
                    }
                }
            }
        };
        self.memo.insert(m.clone(), p.clone());
        Ok(p)
    }
}

/// Reduces a weight-zero vacuum-module vector at level `lvl` to a polynomial in `x = [h_{(-1)}]`.
pub fn zhu_twisted_image(v: &PBWElement, lvl: &Level) -> Result<ZhuImage> {
    let mut r = Reducer { module: ModuleData::vacuum(lvl.ell()), memo: HashMap::new() };
    let mut pieces = Vec::with_capacity(v.len());
    let mut polynomial = Poly::zero();
    for (m, c) in v.terms() {
        let p = r.monomial(m)?;
        polynomial = polynomial.add(&p.scale(c));
        pieces.push((m.clone(), p));
    }
    Ok(ZhuImage { polynomial, pieces })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::uea::Mode;
    use Gen::*;

    fn lvl() -> Level {
        Level::new(2, 3).unwrap()
    }

    fn image(modes: Vec<Mode>) -> Poly {
        let l = lvl();
        let v = PBWElement::from_terms(vec![(Rat::one(), modes)], &ModuleData::vacuum(l.ell()));
        zhu_twisted_image(&v, &l).unwrap().polynomial
    }

    #[test]
    fn charged_intermediates() {
        assert_eq!(image(vec![(F, -1), (H, -1), (E, -1)]), Poly::from_coeffs(vec![rat(1, 3), rat(-11, 12), rat(1, 2)]));
        assert_eq!(image(vec![(E, -2), (F, -1)]), Poly::from_coeffs(vec![rat(1, 6), rat(3, 8)]));
        assert_eq!(image(vec![(F, -2), (E, -1)]), Poly::from_coeffs(vec![rat(1, 6), rat(-3, 8)]));
    }

    #[test]
    fn h_modes_alternate() {
        assert_eq!(image(vec![(H, -3)]), Poly::x());
        assert_eq!(image(vec![(H, -2), (H, -1)]), Poly::x().mul(&Poly::x()).scale(&rat(-1, 1)));
    }

    #[test]
    fn rejects_charged_input() {
        let l = lvl();
        let v = PBWElement::from_terms(vec![(Rat::one(), vec![(E, -1)])], &ModuleData::vacuum(l.ell()));
        assert!(zhu_twisted_image(&v, &l).is_err());
    }
}
