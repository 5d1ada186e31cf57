//! Builders for the character families and their spectral-flow presets.

use serde::{Deserialize, Serialize};

use super::expr::{apply_spectral_flow, CharExpr, FlowData, FormalMonomial, Var};
use crate::algebra::{rat, CycNumber, PuiseuxSeries, Rat};
use crate::error::{MathError, Result};
use crate::modforms::ThetaKind;

fn z(i: u8) -> FormalMonomial {
    FormalMonomial::z(i)
}


fn y_pow(k: Rat) -> FormalMonomial {
    FormalMonomial::var(Var::Y).pow(&k)
}

fn th(kind: ThetaKind, arg: FormalMonomial, modulus: i64) -> CharExpr {
    CharExpr::theta(kind, arg, modulus)
}

fn th1(arg: FormalMonomial) -> CharExpr {
    th(ThetaKind::One, arg, 1)
}

fn half() -> CycNumber {
    CycNumber::rational(rat(1, 2))
}

/// Level `-2 + 2/u` of the boundary admissible `sl2` family.
pub fn sl2_boundary_level(u: i64) -> Rat {
    &Rat::int(-2) + &rat(2, u)
}

fn check_boundary(u: i64, j: i64) -> Result<()> {
    if u < 3 || u % 2 == 0 {
        return Err(MathError::OutOfRange(format!("u must be odd and >= 3, got {u}")));
    }
    if j < 0 || j >= u {
        return Err(MathError::OutOfRange(format!("j must lie in [0, {}], got {j}", u - 1)));
    }
    Ok(())
}

/// `y^k z^{-2j/u} q^{j²/2u} θ1(z² q^{-j}; q^u) / θ1(z²; q)` at `k = -2 + 2/u`.
pub fn sl2_boundary(u: i64, j: i64) -> Result<CharExpr> {
    check_boundary(u, j)?;
    let k = sl2_boundary_level(u);
    let pre = y_pow(k).with(Var::Z(1), rat(-2 * j, u)).with(Var::Q, rat(j * j, 2 * u));
    let num = th(ThetaKind::One, z(1).pow(&Rat::int(2)).with(Var::Q, Rat::int(-j)), u);
    let den = th1(z(1).pow(&Rat::int(2)));
    Ok(CharExpr::prod(vec![CharExpr::mono(pre), CharExpr::quot(num, den)]))
}

/// The boundary character after `σ^{-1/2}`.
pub fn sl2_boundary_twisted(u: i64, j: i64) -> Result<CharExpr> {
    apply_spectral_flow(&sl2_boundary(u, j)?, &sl2_twist_flow())
}

/// `σ^{-1/2}` for `sl2`.
pub fn sl2_twist_flow() -> FlowData {
    FlowData::sl2(&rat(-1, 2))
}

/// The four admissible modules at level `-1/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum HalfModule {
    L0,
    L1,
    DPlusHalf,
    DPlusThreeHalf,
}

impl std::str::FromStr for HalfModule {
    type Err = MathError;
    fn from_str(s: &str) -> Result<HalfModule> {
        Ok(match s {
            "L0" | "l0" => HalfModule::L0,
            "L1" | "l1" => HalfModule::L1,
            "D+1/2" | "dplus-half" => HalfModule::DPlusHalf,
            "D+3/2" | "dplus-threehalf" => HalfModule::DPlusThreeHalf,
            _ => return Err(MathError::Parse(format!("unknown level -1/2 module '{s}'"))),
        })
    }
}

/// `y^{-1/2}/2 · [η/θ_a(z) ± η/θ_b(z)]`, with `-iη/θ1` for the `D⁺` modules.
pub fn sl2_half(which: HalfModule) -> CharExpr {
    let eta_over = |kind: ThetaKind| CharExpr::quot(CharExpr::eta(), th(kind, z(1), 1));
    let (a, b, sign) = match which {
        HalfModule::L0 => (ThetaKind::Four, ThetaKind::Three, 1),
        HalfModule::L1 => (ThetaKind::Four, ThetaKind::Three, -1),
        HalfModule::DPlusHalf => (ThetaKind::One, ThetaKind::Two, 1),
        HalfModule::DPlusThreeHalf => (ThetaKind::One, ThetaKind::Two, -1),
    };
    let wa = if a == ThetaKind::One { -&CycNumber::i() } else { CycNumber::one() };
    let bracket = CharExpr::sum(vec![(wa, eta_over(a)), (CycNumber::int(sign), eta_over(b))]);
    CharExpr::prod(vec![CharExpr::Prefactor { coef: half(), mono: y_pow(rat(-1, 2)) }, bracket])
}

pub fn sl2_half_twisted(which: HalfModule) -> CharExpr {
    apply_spectral_flow(&sl2_half(which), &sl2_twist_flow()).expect("flow variables match")
}

/// The four admissible modules of `sl3` at level `-3/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sl3Module {
    Lambda0,
    Lambda1,
    Lambda2,
    RhoHalf,
}

impl std::str::FromStr for Sl3Module {
    type Err = MathError;
    fn from_str(s: &str) -> Result<Sl3Module> {
        Ok(match s {
            "vac" | "Lambda0" => Sl3Module::Lambda0,
            "Lambda1" => Sl3Module::Lambda1,
            "Lambda2" => Sl3Module::Lambda2,
            "rho-half" | "rho_half" => Sl3Module::RhoHalf,
            _ => return Err(MathError::Parse(format!("unknown sl3 module '{s}'"))),
        })
    }
}

pub fn sl3_boundary(which: Sl3Module) -> CharExpr {
    let z12 = z(1).mul(&z(2));
    let den = CharExpr::prod(vec![th1(z(1)), th1(z(2)), th1(z12.clone())]);
    let eta_ratio = CharExpr::quot(CharExpr::eta(), CharExpr::Eta { scale: Rat::int(2) });
    let t = |kind, arg| th(kind, arg, 2);
    use ThetaKind::{Four, One};
    let (sign, extra, num) = match which {
        Sl3Module::Lambda0 => (1, FormalMonomial::one(), vec![t(One, z(1)), t(One, z(2)), t(One, z12.clone())]),
        Sl3Module::Lambda1 => (-1, FormalMonomial::one(), vec![t(One, z(2)), t(Four, z(1)), t(Four, z12.clone())]),
        Sl3Module::Lambda2 => (-1, FormalMonomial::one(), vec![t(One, z(1)), t(Four, z12.clone()), t(Four, z(2))]),
        Sl3Module::RhoHalf => {
            let n = vec![
                t(One, z(2).inv().with(Var::Q, Rat::int(-1))),
                t(One, z(1).inv().with(Var::Q, Rat::int(-1))),
                t(One, z12.inv().with(Var::Q, Rat::int(-2))),
            ];
            (1, z12.pow(&rat(3, 2)).with(Var::Q, rat(3, 2)), n)
        }
    };
    let pre = CharExpr::Prefactor { coef: CycNumber::int(sign), mono: y_pow(rat(-3, 2)).mul(&extra) };
    CharExpr::prod(vec![pre, eta_ratio, CharExpr::quot(CharExpr::prod(num), den)])
}

/// Flow along `½Λ̄₁^∨`: `y ↦ y z1^{1/3} z2^{1/6} q^{1/12}`, `z1 ↦ z1 q^{1/2}`.
pub fn a2_flow_half_lambda1() -> FlowData {
    FlowData::from_parts(&[(1, rat(1, 3)), (2, rat(1, 6))], rat(1, 12), &[(1, rat(1, 2))])
}

/// Flow along `⅓(Λ̄₁^∨ + Λ̄₂^∨)`: `y ↦ y (z1 z2)^{1/3} q^{1/9}`, `z_i ↦ z_i q^{1/3}`.
pub fn a2_flow_third_rho() -> FlowData {
    FlowData::from_parts(&[(1, rat(1, 3)), (2, rat(1, 3))], rat(1, 9), &[(1, rat(1, 3)), (2, rat(1, 3))])
}

/// Modules of the `D4` family at level `-2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum D4Module {
    Vac,
    L1,
    L3,
    L4,
    /// `L(-Λ2)`.
    Lmid,
}

impl std::str::FromStr for D4Module {
    type Err = MathError;
    fn from_str(s: &str) -> Result<D4Module> {
        Ok(match s {
            "vac" => D4Module::Vac,
            "L1" => D4Module::L1,
            "L3" => D4Module::L3,
            "L4" => D4Module::L4,
            "Lmid" | "L2" => D4Module::Lmid,
            _ => return Err(MathError::Parse(format!("unknown d4 module '{s}'"))),
        })
    }
}

/// `m̃_j` as monomials in `z̃`: `m3 = (z3 z4)^{1/2}`, `m4 = (z3/z4)^{1/2}`, `m2 = z2 m3`, `m1 = z1 m2`.
pub fn d4_m(j: u8) -> FormalMonomial {
    let h = rat(1, 2);
    let m3 = z(3).pow(&h).mul(&z(4).pow(&h));
    match j {
        3 => m3,
        4 => z(3).pow(&h).mul(&z(4).pow(&-&h)),
        2 => z(2).mul(&m3),
        1 => z(1).mul(&z(2)).mul(&m3),
        _ => panic!("m index out of range"),
    }
}

/// The vacuum character: the signed sum of sixteen `𝔼₂[1; ·]` brackets over four `θ1`.
pub fn d4_vacuum() -> CharExpr {
    let h = rat(1, 2);
    let a = [
        z(1).pow(&h).mul(&z(2)).mul(&z(3).pow(&h)).mul(&z(4).pow(&h)),
        z(1).pow(&h),
        z(4).pow(&h),
        z(3).pow(&h),
    ];
    let mut terms = Vec::new();
    for mask in 0..16u32 {
        let mut arg = FormalMonomial::one();
        let mut sign = 1i64;
        for (i, ai) in a.iter().enumerate() {
            if mask & (1 << i) != 0 {
                arg = arg.mul(&ai.inv());
                sign = -sign;
            } else {
                arg = arg.mul(ai);
            }
        }
        terms.push((CycNumber::int(sign), CharExpr::e2(arg)));
    }
    let big = z(1).mul(&z(2).pow(&Rat::int(2))).mul(&z(3)).mul(&z(4));
    let den = CharExpr::prod(vec![th1(big), th1(z(1)), th1(z(4)), th1(z(3))]);
    CharExpr::prod(vec![
        CharExpr::Prefactor { coef: half(), mono: y_pow(Rat::int(-2)) },
        CharExpr::quot(CharExpr::eta().pow(2), den),
        CharExpr::sum(terms),
    ])
}

/// `R_j = -(i/2) θ1(m_j²)/η ∏_{l≠j} η²/(θ1(m_j m_l) θ1(m_j/m_l))`, times `y^{-2}`.
pub fn d4_r(j: u8) -> Result<CharExpr> {
    if !(1..=4).contains(&j) {
        return Err(MathError::OutOfRange(format!("R index must be 1..4, got {j}")));
    }
    let mj = d4_m(j);
    let mut den = Vec::new();
    for l in (1..=4).filter(|l| *l != j) {
        let ml = d4_m(l);
        den.push(th1(mj.mul(&ml)));
        den.push(th1(mj.mul(&ml.inv())));
    }
    let coef = CycNumber::i().scale(&rat(-1, 2));
    Ok(CharExpr::prod(vec![
        CharExpr::Prefactor { coef, mono: y_pow(Rat::int(-2)) },
        CharExpr::quot(
            CharExpr::prod(vec![th1(mj.pow(&Rat::int(2))), CharExpr::eta().pow(5)]),
            CharExpr::prod(den),
        ),
    ]))
}

pub fn d4_char(which: D4Module) -> CharExpr {
    let r = |j| d4_r(j).unwrap();
    let c = CycNumber::int;
    let vac = d4_vacuum();
    let terms = match which {
        D4Module::Vac => return vac,
        D4Module::L1 => vec![(c(1), vac), (c(-2), r(1))],
        D4Module::Lmid => vec![(c(-2), vac), (c(2), r(1)), (c(2), r(2))],
        D4Module::L3 => vec![(c(1), vac), (c(-1), r(1)), (c(-1), r(2)), (c(-1), r(3)), (c(-1), r(4))],
        D4Module::L4 => vec![(c(1), vac), (c(-1), r(1)), (c(-1), r(2)), (c(-1), r(3)), (c(1), r(4))],
    };
    CharExpr::sum(terms)
}

/// Flow along `Λ̄_i` for `i ∈ {1, 3, 4}`.
pub fn d4_flow(i: u8) -> Result<FlowData> {
    let h = rat(1, 2);
    let one = Rat::one();
    let (p, shift) = match i {
        1 => ([one.clone(), one.clone(), h.clone(), h.clone()], 1),
        3 => ([h.clone(), one.clone(), one.clone(), h.clone()], 3),
        4 => ([h.clone(), one.clone(), h.clone(), one.clone()], 4),
        _ => return Err(MathError::OutOfRange(format!("d4 flow direction must be 1, 3 or 4, got {i}"))),
    };
    let zp: Vec<(u8, Rat)> = p.into_iter().enumerate().map(|(k, e)| (k as u8 + 1, e)).collect();
    Ok(FlowData::from_parts(&zp, h, &[(shift, one)]))
}

/// Flow along `-½Λ̄₂`, with the prefactor `y z1^{1/2} z2 z3^{1/2} z4^{1/2} q^{1/4}` and `z2 ↦ z2 q^{-1/2}`.
pub fn d4_flow_minus_half_lambda2() -> FlowData {
    let h = rat(1, 2);
    FlowData::from_parts(
        &[(1, h.clone()), (2, Rat::one()), (3, h.clone()), (4, h)],
        rat(1, 4),
        &[(2, rat(-1, 2))],
    )
}

/// `q^{1/6}(1 + 4q + 10q² + 24q³ + 51q⁴ + 100q⁵ + O(q⁶))`.
pub fn bp_flowed_char() -> PuiseuxSeries {
    let c = [1, 4, 10, 24, 51, 100];
    let s = rat(1, 6);
    PuiseuxSeries::from_rational_terms(
        c.iter().enumerate().map(|(n, a)| (&s + &Rat::int(n as i64), Rat::int(*a))),
        Some(&s + &Rat::int(6)),
    )
}
