use crate::algebra::{CycNumber, PuiseuxSeries, Rat};

/// `η(q^u) = q^{u/24} ∏ (1 - q^{un})` from the pentagonal-number expansion.
pub fn eta_scaled(u: &Rat, trunc: &Rat) -> PuiseuxSeries {
    let mut terms = Vec::new();
    // η(q) = Σ_n (-1)^n q^{(6n-1)^2/24}
    for sign in [1i64, -1] {
        let mut n: i64 = if sign == 1 { 0 } else { -1 };
        loop {
            let m = 6 * n - 1;
            let e = &Rat::new(m * m, 24) * u;
            if e >= *trunc {
                break;
            }
            let c = if n % 2 == 0 { 1 } else { -1 };
            terms.push((e, CycNumber::int(c)));
            n += sign;
        }
    }
    PuiseuxSeries::from_terms(terms, Some(trunc.clone()))
}

/// `η(q)` through `q^trunc`.
pub fn dedekind_eta(trunc: &Rat) -> PuiseuxSeries {
    eta_scaled(&Rat::one(), trunc)
}
