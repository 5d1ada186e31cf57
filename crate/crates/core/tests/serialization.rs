//! JSON round trips of the public data types.

use serde::de::DeserializeOwned;
use serde::Serialize;
use twistvoa::characters::{sl2_boundary_twisted, sl3_boundary, Sl3Module};
use twistvoa::fusion::{fusion_table, verlinde_check, Level};
use twistvoa::io::{from_json, to_json};
use twistvoa::mlde::{BasisForm, Group, MldeOp};
use twistvoa::modforms::dedekind_eta;
use twistvoa::uea::{parse_vector, ul0_reduce, zhu_twisted_image};
use twistvoa::{rat, CycNumber, Rat};

fn round_trip<T: Serialize + DeserializeOwned + PartialEq + std::fmt::Debug>(v: &T) {
    let back: T = from_json(&to_json(v)).unwrap();
    assert_eq!(&back, v);
}

#[test]
fn algebra_types() {
    round_trip(&rat(-883, 49392));
    round_trip(&(&CycNumber::zeta(12, 1) + &CycNumber::rational(rat(1, 3))));
    round_trip(&dedekind_eta(&Rat::int(10)));
    round_trip(&twistvoa::PuiseuxSeries::zero());
}

#[test]
fn expressions_and_operators() {
    round_trip(&sl2_boundary_twisted(5, 2).unwrap());
    round_trip(&sl3_boundary(Sl3Module::Lambda1));
    round_trip(&MldeOp::new(3, Group::FullSl2z).term(1, BasisForm::E4E6(1, 0), rat(-235, 4)));
}

#[test]
fn fusion_and_uea_data() {
    let lvl = Level::new(3, 2).unwrap();
    round_trip(&fusion_table(&lvl).unwrap());
    round_trip(&verlinde_check().unwrap());
    let v = parse_vector("h[-1]h[-1] - 3/2 h[-2] + f[-1]e[-1] |vac: level=-4/3>").unwrap();
    round_trip(&v);
    round_trip(&v.element());
    round_trip(&zhu_twisted_image(&v.element(), &Level::new(2, 3).unwrap()).unwrap());
    round_trip(&ul0_reduce(1, 1, 2, 1, 1, &lvl).unwrap());
}
