//! Property checks shared by the property suite and the acceptance run.
#![allow(dead_code)]

use proptest::prelude::*;
use proptest::strategy::ValueTree;
use proptest::test_runner::{Config, TestCaseError, TestRunner};
use twistvoa::characters::{
    a2_flow_half_lambda1, apply_spectral_flow, evaluate, sl2_boundary, sl2_boundary_twisted, sl3_boundary, FlowData,
    Sl3Module, Specialization, Var, VarValue,
};
use twistvoa::modforms::{eisenstein, jacobi_theta, jacobi_theta_product, twisted_eisenstein, ThetaKind, TwistPair};
use twistvoa::{rat, CycNumber, Monomial, PuiseuxSeries, Rat};

pub type Check = Result<(), String>;

pub const THETA_CASES: u32 = 20;
pub const RING_CASES: u32 = 64;

pub fn y_z_one(trunc: i64) -> Specialization {
    Specialization::new(Rat::int(trunc)).set(Var::Y, VarValue::Drop).set(Var::Z(1), VarValue::Drop)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn runner(cases: u32) -> TestRunner {
    TestRunner::new_with_rng(Config { cases, failure_persistence: None, ..Config::default() }, proptest::test_runner::TestRng::deterministic_rng(proptest::test_runner::RngAlgorithm::ChaCha))
}

fn fail(e: impl std::fmt::Display) -> TestCaseError {
    TestCaseError::fail(e.to_string())
}

pub fn series_strategy() -> impl Strategy<Value = PuiseuxSeries> {
    let term = (-6i64..18, -9i64..10, 1i64..4);
    (prop::collection::vec(term, 0..8), 6i64..30).prop_map(|(terms, t)| {
        PuiseuxSeries::from_rational_terms(terms.into_iter().map(|(e, n, d)| (rat(e, 6), rat(n, d))), Some(rat(t, 6)))
    })
}

/// Sum and product forms of all four thetas at random `z = e^{2πi a} q^b` and modulus 1 or 2.
pub fn theta_sum_equals_product() -> Check {
    let args = (1u8..=4, 0i64..12, 1i64..13, -5i64..6, 2i64..8, 1i64..3);
    runner(THETA_CASES)
        .run(&args, |(kind, pn, pd, en, ed, m)| {
            let z = Monomial::new(rat(pn, pd), rat(en, ed));
            let kind = ThetaKind::from_index(kind).map_err(fail)?;
            let trunc = Rat::int(8);
            let sum = jacobi_theta(kind, &z, &Rat::int(m), &trunc).map_err(fail)?;
            let prod = jacobi_theta_product(kind, &z, &Rat::int(m), &trunc).map_err(fail)?;
            prop_assert!(sum.agrees_with(&prod), "{} vs {}", sum, prod);
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn puiseux_ring_axioms() -> Check {
    let s = (series_strategy(), series_strategy(), series_strategy());
    runner(RING_CASES)
        .run(&s, |(a, b, c)| {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert!((&a * &(&b + &c)).agrees_with(&(&(&a * &b) + &(&a * &c))));
            prop_assert!((&a + &(-&a)).valuation().is_none());
            prop_assert_eq!(&a * &PuiseuxSeries::one(), a.clone());
            if a.valuation().is_some() {
                let inv = a.inverse().map_err(fail)?;
                prop_assert!((&a * &inv).agrees_with(&PuiseuxSeries::one()));
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn eisenstein_trivial_twist() -> Check {
    let trunc = Rat::int(15);
    let trivial = TwistPair { lambda: Rat::zero(), theta: Monomial::new(Rat::zero(), Rat::zero()) };
    for k in [2, 4, 6, 8, 10] {
        let a = twisted_eisenstein(k, &trivial, &trunc).map_err(|e| e.to_string())?;
        ensure(a == eisenstein(k, &trunc).map_err(|e| e.to_string())?, || format!("k={k}"))?;
    }
    Ok(())
}

/// Ten random `(ℓ, ℓ')` in ½ℤ on the u=3 and u=5 vacua, at `z = q^{1/7}`.
pub fn flow_composition() -> Check {
    let mut r = runner(1);
    let halves = (-6i64..=6, -6i64..=6);
    let sp = Specialization::new(Rat::int(8)).set(Var::Y, VarValue::Drop).set(Var::Z(1), VarValue::Value(Monomial::q(rat(1, 7))));
    let ev = |e: &twistvoa::characters::CharExpr| evaluate(e, &sp).map_err(|e| e.to_string());
    let fl = |e: &twistvoa::characters::CharExpr, f: &FlowData| apply_spectral_flow(e, f).map_err(|e| e.to_string());
    for u in [3, 5] {
        let vac = sl2_boundary(u, 0).map_err(|e| e.to_string())?;
        for _ in 0..10 {
            let (a, b) = halves.new_tree(&mut r).map_err(|e| e.to_string())?.current();
            let (l, m) = (rat(a, 2), rat(b, 2));
            let direct = ev(&fl(&vac, &FlowData::sl2(&(&l + &m)))?)?;
            let composed = ev(&fl(&vac, &FlowData::sl2(&l).then(&FlowData::sl2(&m)))?)?;
            let sequential = ev(&fl(&fl(&vac, &FlowData::sl2(&l))?, &FlowData::sl2(&m))?)?;
            ensure(direct.agrees_with(&composed) && direct.agrees_with(&sequential), || format!("u={u} l={l} l'={m}"))?;
        }
    }
    Ok(())
}

pub fn twisted_reflection_symmetry() -> Check {
    let sp = y_z_one(20);
    for u in [3, 5, 7] {
        for j in 0..u {
            let a = evaluate(&sl2_boundary_twisted(u, j).map_err(|e| e.to_string())?, &sp).map_err(|e| e.to_string())?;
            let b = evaluate(&sl2_boundary_twisted(u, u - 1 - j).map_err(|e| e.to_string())?, &sp).map_err(|e| e.to_string())?;
            ensure(a == b && a.trunc() == Some(&Rat::int(20)), || format!("u={u} j={j}"))?;
        }
    }
    Ok(())
}

/// Twisted characters are finite at z = 1 while untwisted j ≠ 0 ones hit a pole.
pub fn twisted_finite_untwisted_poles() -> Check {
    let sp = y_z_one(10);
    for j in 0..3 {
        let f = evaluate(&sl2_boundary_twisted(3, j).map_err(|e| e.to_string())?, &sp).map_err(|e| e.to_string())?;
        ensure(f.leading().map(|l| l.1) == Some(CycNumber::one()), || format!("twisted j={j}"))?;
    }
    for j in 1..3 {
        ensure(evaluate(&sl2_boundary(3, j).map_err(|e| e.to_string())?, &sp).is_err(), || format!("untwisted j={j} has no pole"))?;
    }
    Ok(())
}

pub fn limits_direction_independent() -> Check {
    let a2 = apply_spectral_flow(&sl3_boundary(Sl3Module::Lambda0), &a2_flow_half_lambda1()).map_err(|e| e.to_string())?;
    let d1 = evaluate(&a2, &Specialization::limit(Rat::int(8), &[1, 2], 4)).map_err(|e| e.to_string())?;
    let d2 = evaluate(&a2, &Specialization::limit(Rat::int(8), &[3, -1], 4)).map_err(|e| e.to_string())?;
    ensure(d1 == d2, || "A2 directions (1,2) and (3,-1) differ".into())?;
    let vac = sl2_boundary(3, 0).map_err(|e| e.to_string())?;
    let at = |c: Rat| {
        evaluate(&vac, &Specialization::new(Rat::int(10)).set(Var::Y, VarValue::Drop).set(Var::Z(1), VarValue::Limit(c)))
            .map_err(|e| e.to_string())
    };
    ensure(at(Rat::int(1))? == at(rat(-5, 2))?, || "sl2 vacuum directions 1 and -5/2 differ".into())
}

pub const ALL: &[(&str, fn() -> Check)] = &[
    ("theta sum = product", theta_sum_equals_product),
    ("E_k[1;1] = E_k", eisenstein_trivial_twist),
    ("flow composition", flow_composition),
    ("twisted j <-> u-1-j symmetry", twisted_reflection_symmetry),
    ("twisted finite, untwisted poles", twisted_finite_untwisted_poles),
    ("limit direction independence", limits_direction_independent),
    ("Puiseux ring axioms", puiseux_ring_axioms),
];
