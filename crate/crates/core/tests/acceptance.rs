//! Acceptance run: one PASS/FAIL line per criterion. Every check is exact rational
//! identity through the stated order; "through q^N" includes the q^N coefficient.
//!
//! Criterion 9 is a documented known failure: the weight-zero vacuum vector as given has
//! sign errors in its charged terms, so its image is not proportional to x(x-2/3)(x+2/3).
//! The run fails if any criterion flips from its expected state in either direction.

mod common;

use std::path::PathBuf;
use std::time::{Duration, Instant};

use twistvoa::characters::{
    a2_flow_half_lambda1, apply_spectral_flow, bp_flowed_char, d4_char, d4_flow, d4_flow_minus_half_lambda2, d4_vacuum,
    evaluate, sl2_boundary_twisted, sl2_half, sl2_half_twisted, sl3_boundary, D4Module, HalfModule, Sl3Module,
    Specialization,
};
use twistvoa::fusion::{covered_pairs, fuse, oracle_fuse, verlinde_check, Level};
use twistvoa::io::read_vector;
use twistvoa::mlde::{mlde_fit, mlde_verify, BasisForm, Group, MldeOp};
use twistvoa::uea::{is_singular, zhu_twisted_image, Gen, ModuleData, PBWElement};
use twistvoa::{rat, CycNumber, Poly, PuiseuxSeries, Rat, Result};

const KNOWN_RED: &[usize] = &[9];

const C1_BUDGET: Duration = Duration::from_secs(10);
const C7_BUDGET: Duration = Duration::from_secs(120);
const C8_BUDGET: Duration = Duration::from_secs(5);
const C12_BUDGET: Duration = Duration::from_secs(300);

struct Outcome {
    pass: bool,
    detail: String,
}

fn data(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(rel)
}

/// True iff `op` kills `f` through and including `q^n`.
fn kills_through(op: &MldeOp, f: &PuiseuxSeries, n: &Rat) -> Result<bool> {
    mlde_verify(op, f, &(n + &rat(1, 2 * f.ram() as i64)))
}

fn twisted_family(u: i64, trunc: i64) -> Result<Vec<PuiseuxSeries>> {
    (0..=(u - 1) / 2).map(|j| evaluate(&sl2_boundary_twisted(u, j)?, &common::y_z_one(trunc))).collect()
}

fn fitted_matches(op: &MldeOp, expected: &[(usize, BasisForm, Rat)]) -> bool {
    let nonzero = op.coeffs.iter().filter(|t| !t.weight.is_zero()).count();
    nonzero == expected.len() && expected.iter().all(|(at, b, w)| &op.coefficient(*at, b) == w)
}

fn c1() -> Result<Outcome> {
    let t = Instant::now();
    let op = MldeOp::new(2, Group::Gamma0Two).term(0, BasisForm::ThetaBar(1, 1), rat(-1, 96));
    let sols = twisted_family(3, 24)?;
    let ok = sols.iter().map(|f| kills_through(&op, f, &Rat::int(20))).collect::<Result<Vec<_>>>()?;
    let el = t.elapsed();
    Ok(Outcome {
        pass: ok.iter().all(|&b| b) && el < C1_BUDGET,
        detail: format!("u=3, j=0,1 annihilated through q^20 at trunc 24: {ok:?}; {el:.2?} (budget {C1_BUDGET:?})"),
    })
}

fn c2() -> Result<Outcome> {
    let sols = twisted_family(5, 24)?;
    let op = mlde_fit(&sols, 3, Group::Gamma0Two)?;
    let expected = [
        (1, BasisForm::ThetaBar(0, 2), rat(-7, 450)),
        (1, BasisForm::ThetaBar(1, 1), rat(-31, 1800)),
        (0, BasisForm::ThetaBar(1, 2), rat(-1, 400)),
    ];
    let fit = fitted_matches(&op, &expected);
    let ok = sols.iter().map(|f| kills_through(&op, f, &Rat::int(20))).collect::<Result<Vec<_>>>()?;
    Ok(Outcome {
        pass: fit && ok.iter().all(|&b| b),
        detail: format!("fit = {{7/450, 31/1800, 1/400}} with the minus signs of the monic form: {fit}; verify through q^20: {ok:?}"),
    })
}

fn c3() -> Result<Outcome> {
    let sols = twisted_family(7, 28)?;
    let op = mlde_fit(&sols, 4, Group::Gamma0Two)?;
    let expected = [
        (2, BasisForm::ThetaBar(0, 2), rat(-1, 18)),
        (2, BasisForm::ThetaBar(1, 1), rat(-17, 1008)),
        (1, BasisForm::ThetaBar(0, 3), rat(50, 9261)),
        (1, BasisForm::ThetaBar(1, 2), rat(-883, 49392)),
        (0, BasisForm::ThetaBar(1, 3), rat(9, 10976)),
        (0, BasisForm::ThetaBar(2, 2), rat(-225, 175616)),
    ];
    let fit = fitted_matches(&op, &expected);
    let ok = sols.iter().map(|f| kills_through(&op, f, &Rat::int(24))).collect::<Result<Vec<_>>>()?;
    Ok(Outcome {
        pass: fit && ok.iter().all(|&b| b),
        detail: format!("six rationals incl. 883/49392, 225/175616: {fit}; verify through q^24: {ok:?}"),
    })
}

fn c4() -> Result<Outcome> {
    let sp = common::y_z_one(24);
    let third = MldeOp::new(3, Group::FullSl2z)
        .term(1, BasisForm::E4E6(1, 0), rat(-235, 4))
        .term(0, BasisForm::E4E6(0, 1), rat(-455, 8));
    let a = kills_through(&third, &evaluate(&sl2_half(HalfModule::L0), &sp)?, &Rat::int(20))?;
    let second = MldeOp::new(2, Group::Gamma0Two)
        .term(1, BasisForm::ThetaBar(0, 1), rat(-5, 48))
        .term(0, BasisForm::ThetaBar(0, 2), rat(25, 9216))
        .term(0, BasisForm::ThetaBar(1, 1), rat(-41, 9216));
    let b = [HalfModule::L0, HalfModule::L1]
        .into_iter()
        .map(|m| kills_through(&second, &evaluate(&sl2_half_twisted(m), &sp)?, &Rat::int(20)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Outcome {
        pass: a && b.iter().all(|&x| x),
        detail: format!("order-3 SL(2,Z) on ch[L0] through q^20: {a}; order-2 Gamma0(2) on both flowed series through q^20: {b:?}"),
    })
}

fn c5() -> Result<Outcome> {
    let e = apply_spectral_flow(&sl3_boundary(Sl3Module::Lambda0), &a2_flow_half_lambda1())?;
    let f = evaluate(&e, &Specialization::limit(Rat::int(18), &[1, 2], 4))?;
    let op = MldeOp::new(2, Group::Gamma0Two)
        .term(0, BasisForm::ThetaBar(0, 2), rat(-5, 576))
        .term(0, BasisForm::ThetaBar(1, 1), rat(-11, 576));
    let ok = kills_through(&op, &f, &Rat::int(16))?;
    Ok(Outcome { pass: ok, detail: format!("flowed A2 vacuum at z -> 1 along (1,2), through q^16: {ok}") })
}

fn c6() -> Result<Outcome> {
    let f = bp_flowed_char();
    let op = MldeOp::new(3, Group::FullSl2z)
        .term(1, BasisForm::E4E6(1, 0), Rat::int(-25))
        .term(0, BasisForm::E4E6(0, 1), Rat::int(-175));
    let top = rat(31, 6);
    let ok = kills_through(&op, &f, &top)?;
    Ok(Outcome {
        pass: ok,
        detail: format!("stored series ({} terms) annihilated through q^{top}: {ok}; partial check, limited by the stored data", f.num_terms()),
    })
}

fn c7() -> Result<Outcome> {
    let t = Instant::now();
    let e = apply_spectral_flow(&d4_char(D4Module::Lmid), &d4_flow_minus_half_lambda2())?;
    let f = evaluate(&e, &Specialization::limit(Rat::int(13), &[1, 2, 3, 5], 8))?;
    let op = MldeOp::new(2, Group::Gamma0Two)
        .term(0, BasisForm::ThetaBar(0, 2), rat(1, 144))
        .term(0, BasisForm::ThetaBar(1, 1), rat(-37, 288));
    let mlde = kills_through(&op, &f, &Rat::int(12))?;
    let points = [[1, 2, 4, 7, 11], [1, 2, 3, 6, 13], [1, 4, 6, 10, 13]];
    let mut flows = Vec::new();
    for p in points {
        let s: Vec<Rat> = p[..4].iter().map(|&n| rat(n, p[4])).collect();
        let sp = Specialization::generic(Rat::int(9), &s);
        for (i, m) in [(1, D4Module::L1), (3, D4Module::L3), (4, D4Module::L4)] {
            let lhs = evaluate(&apply_spectral_flow(&d4_vacuum(), &d4_flow(i)?)?, &sp)?;
            let rhs = evaluate(&d4_char(m), &sp)?;
            flows.push(lhs.agrees_through(&rhs, &rat(17, 2))?);
        }
    }
    let el = t.elapsed();
    Ok(Outcome {
        pass: mlde && flows.iter().all(|&b| b) && el < C7_BUDGET,
        detail: format!(
            "defect MLDE through q^12: {mlde}; flow identities i=1,3,4 at 3 points through q^8: {}/{}; {el:.2?} (budget {C7_BUDGET:?})",
            flows.iter().filter(|&&b| b).count(),
            flows.len()
        ),
    })
}

fn c8() -> Result<Outcome> {
    let t = Instant::now();
    let (mut total, mut agree) = (0, 0);
    for (p, q) in [(2, 3), (2, 5), (3, 2), (3, 4), (4, 3)] {
        let lvl = Level::new(p, q)?;
        for (a, b) in covered_pairs(&lvl) {
            total += 1;
            agree += (fuse(&lvl, &a, &b)?.canonical() == oracle_fuse(&lvl, &a, &b)?.canonical()) as usize;
        }
    }
    let el = t.elapsed();
    Ok(Outcome {
        pass: agree == total && total >= 200 && el < C8_BUDGET,
        detail: format!("oracle = closed form on {agree}/{total} pairs over 5 levels; {el:.2?} (budget {C8_BUDGET:?})"),
    })
}

fn c9() -> Result<Outcome> {
    let lvl = Level::new(2, 3)?;
    let mut roots = lvl.twisted_zhu_roots();
    roots.sort();
    let roots_ok = roots == vec![rat(-2, 3), Rat::zero(), rat(2, 3)];

    let vac = ModuleData::vacuum(lvl.ell());
    let one = |m: Vec<(Gen, i64)>| zhu_twisted_image(&PBWElement::from_terms(vec![(Rat::one(), m)], &vac), &lvl).map(|i| i.polynomial);
    let i1 = one(vec![(Gen::F, -1), (Gen::H, -1), (Gen::E, -1)])? == Poly::from_coeffs(vec![rat(1, 3), rat(-11, 12), rat(1, 2)]);
    let i2 = one(vec![(Gen::E, -2), (Gen::F, -1)])? == Poly::from_coeffs(vec![rat(1, 6), rat(3, 8)]);
    let i3 = one(vec![(Gen::F, -2), (Gen::E, -1)])? == Poly::from_coeffs(vec![rat(1, 6), rat(-3, 8)]);

    let target = [rat(0, 1), rat(2, 3), rat(-2, 3)];
    let verbatim = zhu_twisted_image(&read_vector(&data("vectors/vacuum_weight_zero.pbw"))?.element(), &lvl)?;
    let flipped = zhu_twisted_image(&read_vector(&data("vectors/vacuum_weight_zero_flipped.pbw"))?.element(), &lvl)?;
    let image_ok = verbatim.vanishes_exactly_at(&target);
    Ok(Outcome {
        pass: roots_ok && i1 && i2 && i3 && image_ok,
        detail: format!(
            "roots {{0, ±2/3}}: {roots_ok}; [f-1 h-1 e-1], [e-2 f-1], [f-2 e-1] verbatim: {i1}, {i2}, {i3}; \
             image of the vector as given = {} (multiple of x(x-2/3)(x+2/3): {image_ok}); \
             with the charged signs reversed: {} ({})",
            verbatim.polynomial,
            flipped.polynomial,
            flipped.vanishes_exactly_at(&target)
        ),
    })
}

fn c10() -> Result<Outcome> {
    let t = verlinde_check()?;
    let closed = vec![
        vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]],
        vec![vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]],
        vec![vec![0, 0, 1], vec![0, 0, 0], vec![0, 0, 0]],
    ];
    let verlinde: Vec<Vec<Vec<i64>>> = vec![
        vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]],
        vec![vec![0, 1, 0], vec![0, 0, 1], vec![-1, 0, 0]],
        vec![vec![0, 0, 1], vec![-1, 0, 0], vec![0, -1, 0]],
    ];
    let exact: Vec<Vec<Vec<CycNumber>>> =
        verlinde.iter().map(|m| m.iter().map(|r| r.iter().map(|&x| CycNumber::int(x)).collect()).collect()).collect();
    let a = t.closed_form == closed;
    let b = t.verlinde == exact;
    Ok(Outcome { pass: a && b, detail: format!("closed-form N0,N1,N2: {a}; Verlinde N0,N1,N2 over Q(zeta12) incl. -1 entries: {b}") })
}

fn c11() -> Result<Outcome> {
    let mut parts = Vec::new();
    let mut pass = true;
    for (file, expect) in [
        ("v1_minus_two_thirds.pbw", true),
        ("v2_minus_two_thirds.pbw", true),
        ("e_minus_one_minus_four_thirds.pbw", true),
        ("long_minus_four_thirds.pbw", true),
        ("v1_perturbed.pbw", false),
    ] {
        let v = read_vector(&data(&format!("vectors/{file}")))?;
        let s = is_singular(&v.element(), &v.module, None)?;
        pass &= s == expect;
        parts.push(format!("{file}: {s}"));
    }
    let vac = read_vector(&data("vectors/vacuum_weight_zero.pbw"))?;
    let s = is_singular(&vac.element(), &vac.module, None)?;
    let flipped = read_vector(&data("vectors/vacuum_weight_zero_flipped.pbw"))?;
    let sf = is_singular(&flipped.element(), &flipped.module, None)?;
    pass &= sf;
    parts.push(format!(
        "vacuum weight-zero vector as given: {s} (transcription failure reported; charged-sign reversal is singular: {sf})"
    ));
    Ok(Outcome { pass, detail: parts.join("; ") })
}

fn c12() -> Result<Outcome> {
    let t = Instant::now();
    let mut failed = Vec::new();
    for (name, check) in common::ALL {
        if let Err(e) = check() {
            failed.push(format!("{name}: {e}"));
        }
    }
    let el = t.elapsed();
    Ok(Outcome {
        pass: failed.is_empty() && el < C12_BUDGET,
        detail: format!(
            "{} suites ({} theta args, {} ring triples); failures {failed:?}; {el:.2?} (budget {C12_BUDGET:?})",
            common::ALL.len(),
            common::THETA_CASES,
            common::RING_CASES
        ),
    })
}

fn main() {
    let criteria: [fn() -> Result<Outcome>; 12] = [c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c12];
    let mut unexpected = Vec::new();
    for (i, c) in criteria.iter().enumerate() {
        let n = i + 1;
        let o = c().unwrap_or_else(|e| Outcome { pass: false, detail: format!("error: {e}") });
        let known = KNOWN_RED.contains(&n);
        let tag = match (o.pass, known) {
            (true, _) => "PASS",
            (false, true) => "FAIL (known)",
            (false, false) => "FAIL",
        };
        println!("criterion {n:>2}: {tag}: {}", o.detail);
        if o.pass == known {
            unexpected.push(n);
        }
    }
    if !unexpected.is_empty() {
        eprintln!("criteria not in their expected state: {unexpected:?}");
        std::process::exit(1);
    }
}
