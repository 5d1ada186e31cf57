//! Dynkin labels and conformal dimensions of flowed `sl2` modules.

use serde::{Deserialize, Serialize};

use crate::algebra::{rat, Rat};
use crate::error::{MathError, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightDim {
    pub dynkin_label: Rat,
    pub conformal_dim: Rat,
}

/// `σ^{-1/2}` data of `L(Λ_{k,j})` at `k = -2 + 2/u`.
pub fn flowed_weight_dim(u: i64, j: i64) -> Result<WeightDim> {
    if u < 3 || u % 2 == 0 || j < 0 || j >= u {
        return Err(MathError::OutOfRange(format!("invalid boundary data u={u}, j={j}")));
    }
    Ok(WeightDim {
        dynkin_label: rat(u - 2 * j - 1, u),
        conformal_dim: rat(1 + 4 * j * (1 + j - u) - u, 8 * u),
    })
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 { a.abs() } else { gcd(b, a % b) }
}

/// `σ^{-1/2}` data at `k = -2 + p/q` for `1 ≤ i ≤ p-1`, `0 ≤ j ≤ q-1`.
pub fn general_admissible_weight_dim(p: i64, q: i64, i: i64, j: i64) -> Result<WeightDim> {
    if p < 2 || q < 1 || gcd(p, q) != 1 || i < 1 || i >= p || j < 0 || j >= q {
        return Err(MathError::OutOfRange(format!("invalid admissible data p={p}, q={q}, i={i}, j={j}")));
    }
    let t = rat(p, q);
    let k = &t - &Rat::int(2);
    let (ir, jr) = (Rat::int(i), Rat::int(j));
    let label = &(&(&ir - &Rat::one()) - &(&t * &jr)) - &(&k / &Rat::int(2));
    let a = &ir - &(&t * &jr);
    let inner = &(&(&(&Rat::int(4) + &k) - &(&Rat::int(4) * &ir)) + &(&Rat::int(4) * &(&t * &jr)))
        + &(&(&Rat::int(4) * &(&(&a * &a) - &Rat::one())) / &t);
    Ok(WeightDim { dynkin_label: label, conformal_dim: &inner / &Rat::int(16) })
}
