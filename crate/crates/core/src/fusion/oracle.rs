//! Brute-force fusion from the Zhu bimodule quotients.
//!
//! For `A(M) ⊗ C v` the quotient of `C[x,y]` is spanned by those `y^i`, `i < n1`, whose
//! defining product vanishes at the value of `x` fixed by `v`; each survivor is an
//! eigenvector of the left action `x*f = (x + j - 2y∂_y) f`.

use serde::{Deserialize, Serialize};

use super::{AdmLabel, Base, Convention, Flow, FusionResult, Level, ModuleLabel};
use crate::algebra::Rat;
use crate::error::{MathError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OracleKind {
    /// `A(L(j1)) ⊗ C v_{j2}`.
    Hw,
    /// `A_{σ,σ}(L(j1)) ⊗ C v'_{j2}`, twisted-convention labels.
    Twisted,
    /// `A(L(j1)*) ⊗ C v_{-j2}`.
    Contra,
    /// `A(L(j1)*)` against the highest weight vector of `L(j2)`.
    Mixed,
}

/// `∏_{r=0}^{p-n-1} ∏_{s=0}^{q-κ} (x + sign·(r + i - st))`.
fn block_product(lvl: &Level, a: &AdmLabel, i: i64, x: &Rat, sign: i64) -> Rat {
    let t = lvl.t();
    let mut acc = Rat::one();
    for r in 0..=lvl.p - a.dlm_n() - 1 {
        for s in 0..=lvl.q - a.kappa {
            let shift = &Rat::int(r + i) - &(&Rat::int(s) * &t);
            acc = &acc * &(x + &(&Rat::int(sign) * &shift));
        }
    }
    acc
}

fn survivors(lvl: &Level, a: &AdmLabel, x: &Rat, sign: i64) -> Vec<i64> {
    (0..a.dlm_n()).filter(|&i| block_product(lvl, a, i, x, sign).is_zero()).collect()
}

fn classify(lvl: &Level, w: &Rat, convention: Convention) -> Result<AdmLabel> {
    lvl.label_of(w, convention)
        .ok_or_else(|| MathError::Inconsistent(format!("survivor weight {w} is not admissible at level {lvl}")))
}

/// Fusion read off the bimodule quotient of the given kind.
pub fn bimodule_oracle(lvl: &Level, j1: &AdmLabel, j2: &AdmLabel, kind: OracleKind) -> Result<FusionResult> {
    j1.checked(lvl)?;
    j2.checked(lvl)?;
    let (w1, w2) = (j1.weight(lvl), j2.weight(lvl));
    let two = Rat::int(2);
    let half_ell = &lvl.ell() / &two;
    let mut out = Vec::new();
    match kind {
        OracleKind::Hw => {
            for i in survivors(lvl, j1, &w2, -1) {
                let e = &(&w2 + &w1) - &(&two * &Rat::int(i));
                out.push(ModuleLabel::hw(classify(lvl, &e, Convention::Hw)?));
            }
        }
        OracleKind::Twisted => {
            // x - j2 + ℓ/2 lies in J, and g carries x + ℓ/2 - r - i + st
            let x = &w2 - &half_ell;
            let g_arg = &x + &half_ell;
            for i in survivors(lvl, j1, &g_arg, -1) {
                let e = &(&x + &w1) - &(&two * &Rat::int(i));
                let w = &e + &half_ell;
                out.push(ModuleLabel::tw_hw(classify(lvl, &w, Convention::Twisted)?));
            }
        }
        OracleKind::Contra => {
            let x = -&w2;
            for i in survivors(lvl, j1, &x, 1) {
                let e = &(&x - &w1) + &(&two * &Rat::int(i));
                out.push(ModuleLabel::contra(classify(lvl, &-&e, Convention::Hw)?));
            }
        }
        OracleKind::Mixed => {
            // the one-dimensional quotient only fixes the weight; candidates are checked
            // against the dual triples N_{A,B}^C = N_{A,C'}^{B'} = N_{B,C'}^{A'}
            let e = &w2 - &w1;
            if let Some(c) = lvl.label_of(&e, Convention::Hw) {
                if bimodule_oracle(lvl, j1, &c, OracleKind::Contra)?.contains(&ModuleLabel::contra(*j2)) {
                    out.push(ModuleLabel::hw(c).canonical());
                }
            }
            if let Some(c) = lvl.label_of(&-&e, Convention::Hw) {
                if bimodule_oracle(lvl, j2, &c, OracleKind::Hw)?.contains(&ModuleLabel::hw(*j1)) {
                    out.push(ModuleLabel::contra(c).canonical());
                }
            }
            out.dedup();
            if out.len() > 1 {
                return Err(MathError::Inconsistent(format!("weight {e} is ambiguous at level {lvl}")));
            }
        }
    }
    Ok(FusionResult::from_summands(out))
}

/// Oracle counterpart of [`super::fuse`]; flowed products are transported through the
/// `Δ(1)` isomorphism, which leaves the quotient unchanged and flows every summand.
pub fn oracle_fuse(lvl: &Level, a: &ModuleLabel, b: &ModuleLabel) -> Result<FusionResult> {
    use Base::*;
    use Flow::*;
    let (a, b) = if a.flow != None && b.flow == None { (b, a) } else { (a, b) };
    let flowed = |r: FusionResult, f: Flow| FusionResult::from_summands(r.summands.into_iter().map(|m| m.with_flow(f)).collect());
    match ((a.base, a.flow), (b.base, b.flow)) {
        ((Hw, None), (Hw, None)) => bimodule_oracle(lvl, &a.label, &b.label, OracleKind::Hw),
        ((Hw, None), (Hw, MinusHalf)) => bimodule_oracle(lvl, &a.label, &b.label, OracleKind::Twisted),
        ((Contra, None), (Hw, f @ (None | PlusHalf))) => {
            Ok(flowed(bimodule_oracle(lvl, &a.label, &b.label, OracleKind::Mixed)?, f))
        }
        ((Hw, None), (Contra, f @ (None | MinusHalf))) => {
            Ok(flowed(bimodule_oracle(lvl, &b.label, &a.label, OracleKind::Mixed)?, f))
        }
        ((Contra, None), (Contra, f @ (None | PlusHalf))) => {
            Ok(flowed(bimodule_oracle(lvl, &a.label, &b.label, OracleKind::Contra)?, f))
        }
        _ => Err(MathError::Unsupported(format!("no bimodule oracle for {} × {}", a.display(lvl), b.display(lvl)))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn twisted_single_survivor() {
        let l = Level::new(2, 3).unwrap();
        let a = l.label_of(&rat(-2, 3), Convention::Twisted).unwrap();
        let r = bimodule_oracle(&l, &a, &a, OracleKind::Twisted).unwrap();
        assert_eq!(r.weights(&l), vec![rat(-4, 3)]);
    }

    #[test]
    fn violated_condition_has_no_survivors() {
        let l = Level::new(2, 3).unwrap();
        let a = l.label_of(&rat(-4, 3), Convention::Twisted).unwrap();
        let b = l.label_of(&rat(-2, 3), Convention::Twisted).unwrap();
        assert!(bimodule_oracle(&l, &a, &b, OracleKind::Twisted).unwrap().is_zero());
    }
}
