//! Verlinde formula versus the Zhu-algebra fusion rules at `k = -4/3`.

use serde::{Deserialize, Serialize};

use super::{fuse_hw_twisted, AdmLabel, Convention, Level, ModuleLabel};
use crate::algebra::linalg::solve;
use crate::algebra::{CycNumber, Rat};
use crate::error::{MathError, Result};

pub type CycMatrix = Vec<Vec<CycNumber>>;

/// The contraction used below. No index is conjugated and the vacuum row normalizes.
pub const VERLINDE_CONTRACTION: &str = "N_a[i][j] = sum_m S[a][m] * S[i][m] * Sinv[m][j] / S[0][m]";

/// Fusion matrices `N_a[i][j]` from both sides, indexed by `λ1 = -4/3Λ0`, `λ2`, `λ3`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerlindeTables {
    pub closed_form: Vec<Vec<Vec<i64>>>,
    pub verlinde: Vec<CycMatrix>,
}

impl VerlindeTables {
    /// The Verlinde matrices as integers, when every entry is one.
    pub fn verlinde_integral(&self) -> Option<Vec<Vec<Vec<i64>>>> {
        self.verlinde
            .iter()
            .map(|m| m.iter().map(|r| r.iter().map(|c| c.to_rational()?.to_i64()).collect()).collect())
            .collect()
    }
}

/// The modular S-matrix of the twisted characters at `k = -4/3`, over `Q(ζ12)`.
pub fn s_matrix() -> CycMatrix {
    let w = CycNumber::zeta(12, 4);
    let wb = CycNumber::zeta(12, 8);
    let sqrt3_over_3 = (&CycNumber::zeta(12, 1) + &CycNumber::zeta(12, 11)).scale(&Rat::new(1, 3));
    let m = |x: i64| CycNumber::int(x);
    let raw = vec![
        vec![m(-1), m(1), m(-1)],
        vec![m(1), -&wb, w.clone()],
        vec![m(-1), w, -&wb],
    ];
    raw.into_iter().map(|r| r.iter().map(|c| c * &sqrt3_over_3).collect()).collect()
}

fn inverse(s: &CycMatrix) -> Result<CycMatrix> {
    let n = s.len();
    let mut cols = Vec::with_capacity(n);
    for k in 0..n {
        let rhs: Vec<CycNumber> = (0..n).map(|i| if i == k { CycNumber::one() } else { CycNumber::zero() }).collect();
        let sol = solve(s, &rhs, n)?;
        if !sol.kernel.is_empty() {
            return Err(MathError::Inconsistent("singular S-matrix".into()));
        }
        cols.push(sol.particular);
    }
    Ok((0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect())
}

/// Verlinde sums for an arbitrary invertible `S`.
pub fn verlinde_matrices(s: &CycMatrix) -> Result<Vec<CycMatrix>> {
    let n = s.len();
    let sinv = inverse(s)?;
    let vac_inv: Vec<CycNumber> = s[0].iter().map(|c| c.inv()).collect::<Result<_>>()?;
    Ok((0..n)
        .map(|a| {
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            (0..n).fold(CycNumber::zero(), |acc, m| {
                                &acc + &(&(&(&s[a][m] * &s[i][m]) * &sinv[m][j]) * &vac_inv[m])
                            })
                        })
                        .collect()
                })
                .collect()
        })
        .collect())
}

/// Both tables at `(p,q) = (2,3)`: `N_a[i][j]` is the multiplicity of `σ^{-1/2}(L(λ_j))` in
/// `L(λ_a) × σ^{-1/2}(L(λ_i))`.
pub fn verlinde_check() -> Result<VerlindeTables> {
    let lvl = Level::new(2, 3)?;
    let labels: Vec<AdmLabel> = (1..=3).map(|k| AdmLabel::twisted(&lvl, 0, k)).collect::<Result<_>>()?;
    let mut closed = vec![vec![vec![0i64; 3]; 3]; 3];
    for (a, la) in labels.iter().enumerate() {
        for (i, li) in labels.iter().enumerate() {
            let r = fuse_hw_twisted(&lvl, la, li)?;
            for (j, lj) in labels.iter().enumerate() {
                closed[a][i][j] = r.multiplicity(&ModuleLabel::tw_hw(*lj)) as i64;
            }
        }
    }
    debug_assert!(labels.iter().all(|l| l.convention == Convention::Twisted));
    Ok(VerlindeTables { closed_form: closed, verlinde: verlinde_matrices(&s_matrix())? })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s_is_unitary_up_to_sign() {
        let s = s_matrix();
        // S·S̄ᵀ = 1
        for i in 0..3 {
            for j in 0..3 {
                let v = (0..3).fold(CycNumber::zero(), |acc, m| &acc + &(&s[i][m] * &s[j][m].conj()));
                assert_eq!(v, if i == j { CycNumber::one() } else { CycNumber::zero() });
            }
        }
    }

    #[test]
    fn vacuum_matrix_is_identity() {
        let t = verlinde_check().unwrap();
        let id = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
        assert_eq!(t.closed_form[0], id);
        assert_eq!(t.verlinde_integral().unwrap()[0], id);
    }
}
