//! Higher rank: the flowed sl3 vacuum (a z → 1 limit), the Bershadsky–Polyakov character and D4.

use twistvoa::characters::{
    a2_flow_half_lambda1, apply_spectral_flow, bp_flowed_char, d4_char, d4_flow, d4_flow_minus_half_lambda2, d4_vacuum,
    evaluate, sl3_boundary, D4Module, Sl3Module, Specialization,
};
use twistvoa::cli::pretty_operator;
use twistvoa::io::pretty_series;
use twistvoa::mlde::{mlde_verify, BasisForm, Group, MldeOp};
use twistvoa::{rat, Rat};

fn main() -> twistvoa::Result<()> {
    let a2 = apply_spectral_flow(&sl3_boundary(Sl3Module::Lambda0), &a2_flow_half_lambda1())?;
    let f = evaluate(&a2, &Specialization::limit(Rat::int(18), &[1, 2], 4))?;
    let op = MldeOp::new(2, Group::Gamma0Two)
        .term(0, BasisForm::ThetaBar(0, 2), rat(-5, 576))
        .term(0, BasisForm::ThetaBar(1, 1), rat(-11, 576));
    println!("sl3 flowed vacuum: {}", pretty_series(&f.truncate(&Rat::int(4))));
    println!("  {}: {}", pretty_operator(&op), mlde_verify(&op, &f, &Rat::int(16))?);

    let bp = bp_flowed_char();
    let op = MldeOp::new(3, Group::FullSl2z)
        .term(1, BasisForm::E4E6(1, 0), Rat::int(-25))
        .term(0, BasisForm::E4E6(0, 1), Rat::int(-175));
    println!("BP: {}", pretty_series(&bp));
    println!("  {}: {}", pretty_operator(&op), mlde_verify(&op, &bp, &rat(31, 6))?);

    let generic = Specialization::generic(Rat::int(8), &[rat(1, 11), rat(2, 11), rat(4, 11), rat(7, 11)]);
    for (i, m) in [(1, D4Module::L1), (3, D4Module::L3), (4, D4Module::L4)] {
        let flowed = evaluate(&apply_spectral_flow(&d4_vacuum(), &d4_flow(i)?)?, &generic)?;
        println!("D4: sigma^(w{i}) L(k Λ0) == {m:?}: {}", flowed.agrees_with(&evaluate(&d4_char(m), &generic)?));
    }
    let defect = apply_spectral_flow(&d4_char(D4Module::Lmid), &d4_flow_minus_half_lambda2())?;
    let f = evaluate(&defect, &Specialization::limit(Rat::int(12), &[1, 2, 3, 5], 8))?;
    let op = MldeOp::new(2, Group::Gamma0Two)
        .term(0, BasisForm::ThetaBar(0, 2), rat(1, 144))
        .term(0, BasisForm::ThetaBar(1, 1), rat(-37, 288));
    println!("D4 defect: {}: {}", pretty_operator(&op), mlde_verify(&op, &f, &Rat::int(12))?);
    Ok(())
}
