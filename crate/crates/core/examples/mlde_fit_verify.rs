//! Fit and verify the twisted MLDEs of the boundary sl2 characters for u = 3, 5, 7.

use twistvoa::characters::{evaluate, sl2_boundary_twisted, Specialization, Var, VarValue};
use twistvoa::cli::pretty_operator;
use twistvoa::mlde::{mlde_fit, mlde_verify, Group};
use twistvoa::Rat;

fn main() -> twistvoa::Result<()> {
    for u in [3i64, 5, 7] {
        let trunc = Rat::int(4 * u);
        let sp = Specialization::new(trunc.clone()).set(Var::Y, VarValue::Drop).set(Var::Z(1), VarValue::Drop);
        let sols = (0..=(u - 1) / 2)
            .map(|j| evaluate(&sl2_boundary_twisted(u, j)?, &sp))
            .collect::<twistvoa::Result<Vec<_>>>()?;
        let op = mlde_fit(&sols, ((u + 1) / 2) as usize, Group::Gamma0Two)?;
        let through = &trunc - &Rat::int(4);
        let ok = sols.iter().map(|f| mlde_verify(&op, f, &through)).collect::<twistvoa::Result<Vec<_>>>()?;
        println!("u={u}: {}  verified through q^{through}: {ok:?}", pretty_operator(&op));
    }
    Ok(())
}
