//! Boundary-level sl2 characters, spectral flow and the σ-twisted specialization.

use twistvoa::characters::{
    apply_spectral_flow, evaluate, flowed_weight_dim, sl2_boundary, sl2_boundary_twisted, FlowData, Specialization, Var,
    VarValue,
};
use twistvoa::io::pretty_series;
use twistvoa::{rat, Rat};

fn main() -> twistvoa::Result<()> {
    let u = 5;
    let sp = Specialization::new(Rat::int(10)).set(Var::Y, VarValue::Drop).set(Var::Z(1), VarValue::Drop);
    for j in 0..u {
        let twisted = evaluate(&sl2_boundary_twisted(u, j)?, &sp)?;
        let wd = flowed_weight_dim(u, j)?;
        println!(
            "u={u} j={j}: label {} dim {}  {}",
            wd.dynkin_label,
            wd.conformal_dim,
            pretty_series(&twisted)
        );
    }

    let untwisted = sl2_boundary(3, 1)?;
    for l in [rat(-1, 2), rat(1, 2), rat(-3, 2)] {
        let flowed = apply_spectral_flow(&untwisted, &FlowData::sl2(&l))?;
        println!("sigma^{l} L(j=1), u=3: {}", pretty_series(&evaluate(&flowed, &sp)?));
    }
    Ok(())
}
