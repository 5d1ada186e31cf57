//! sl2 at level -1/2: untwisted order-3 and twisted order-2 operators.

use twistvoa::characters::{evaluate, sl2_half, sl2_half_twisted, HalfModule, Specialization, Var, VarValue};
use twistvoa::cli::pretty_operator;
use twistvoa::io::pretty_series;
use twistvoa::mlde::{mlde_verify, BasisForm, Group, MldeOp};
use twistvoa::{rat, Rat};

fn main() -> twistvoa::Result<()> {
    let sp = Specialization::new(Rat::int(24)).set(Var::Y, VarValue::Drop).set(Var::Z(1), VarValue::Drop);
    let through = Rat::int(20);

    let untwisted = MldeOp::new(3, Group::FullSl2z)
        .term(1, BasisForm::E4E6(1, 0), rat(-235, 4))
        .term(0, BasisForm::E4E6(0, 1), rat(-455, 8));
    let vac = evaluate(&sl2_half(HalfModule::L0), &sp)?;
    println!("L0 = {}", pretty_series(&vac.truncate(&Rat::int(6))));
    println!("{}: {}", pretty_operator(&untwisted), mlde_verify(&untwisted, &vac, &through)?);

    let twisted = MldeOp::new(2, Group::Gamma0Two)
        .term(1, BasisForm::ThetaBar(0, 1), rat(-5, 48))
        .term(0, BasisForm::ThetaBar(0, 2), rat(25, 9216))
        .term(0, BasisForm::ThetaBar(1, 1), rat(-41, 9216));
    for m in [HalfModule::L0, HalfModule::L1] {
        let f = evaluate(&sl2_half_twisted(m), &sp)?;
        println!("twisted {m:?}: {}", mlde_verify(&twisted, &f, &through)?);
    }
    Ok(())
}
