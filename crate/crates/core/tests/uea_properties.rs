//! Normal-ordering engine: commutator relations, h0 bookkeeping and the twisted Zhu relations.

use proptest::prelude::*;
use twistvoa::algebra::rat::binom;
use twistvoa::fusion::Level;
use twistvoa::uea::{apply_mode, zhu_twisted_image, Gen, Mode, ModeMonomial, ModuleData, PBWElement};
use twistvoa::{rat, Rat};

fn gen_strategy() -> impl Strategy<Value = Gen> {
    prop_oneof![Just(Gen::E), Just(Gen::H), Just(Gen::F)]
}

fn module_strategy() -> impl Strategy<Value = ModuleData> {
    prop_oneof![
        Just(ModuleData::vacuum(rat(-4, 3))),
        Just(ModuleData::verma(rat(-4, 3), rat(-2, 3))),
        Just(ModuleData::verma(rat(-1, 2), rat(-3, 2))),
        Just(ModuleData::contra(rat(-4, 3), rat(-2, 3))),
    ]
}

fn word(module: &ModuleData, modes: &[Mode]) -> PBWElement {
    modes.iter().rev().fold(PBWElement::vacuum(), |v, &(g, n)| apply_mode(g, n, &v, module))
}

fn sub(a: &PBWElement, b: &PBWElement) -> PBWElement {
    a.add(&b.scale(&Rat::int(-1)))
}

/// `[x_m, y_n] = [x, y]_{m+n} + m δ_{m+n,0} <x, y> K`.
fn bracket(x: Gen, m: i64, y: Gen, n: i64, v: &PBWElement, module: &ModuleData) -> PBWElement {
    use Gen::*;
    let (lie, c) = match (x, y) {
        (E, F) => (Some((H, Rat::one())), Rat::one()),
        (F, E) => (Some((H, Rat::int(-1))), Rat::one()),
        (H, E) => (Some((E, Rat::int(2))), Rat::zero()),
        (E, H) => (Some((E, Rat::int(-2))), Rat::zero()),
        (H, F) => (Some((F, Rat::int(-2))), Rat::zero()),
        (F, H) => (Some((F, Rat::int(2))), Rat::zero()),
        (H, H) => (None, Rat::int(2)),
        _ => (None, Rat::zero()),
    };
    let mut out = PBWElement::zero();
    if let Some((g, s)) = lie {
        out = apply_mode(g, m + n, v, module).scale(&s);
    }
    if m + n == 0 && !c.is_zero() {
        out = out.add(&v.scale(&(&(&c * &Rat::int(m)) * &module.level)));
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn modes_satisfy_the_affine_commutators(
        module in module_strategy(),
        w in prop::collection::vec((gen_strategy(), -3i64..=0), 0..4),
        x in gen_strategy(), m in -3i64..=3,
        y in gen_strategy(), n in -3i64..=3,
    ) {
        let v = word(&module, &w);
        let xy = apply_mode(x, m, &apply_mode(y, n, &v, &module), &module);
        let yx = apply_mode(y, n, &apply_mode(x, m, &v, &module), &module);
        prop_assert_eq!(sub(&xy, &yx), bracket(x, m, y, n, &v, &module));
    }

    #[test]
    fn jacobi_identity(
        module in module_strategy(),
        w in prop::collection::vec((gen_strategy(), -2i64..=0), 0..3),
        a in (gen_strategy(), -2i64..=2), b in (gen_strategy(), -2i64..=2), c in (gen_strategy(), -2i64..=2),
    ) {
        let v = word(&module, &w);
        let act = |g: (Gen, i64), h: (Gen, i64), u: &PBWElement| {
            sub(&apply_mode(g.0, g.1, &apply_mode(h.0, h.1, u, &module), &module),
                &apply_mode(h.0, h.1, &apply_mode(g.0, g.1, u, &module), &module))
        };
        let nested = |g: (Gen, i64), h: (Gen, i64), k: (Gen, i64)| {
            let hk = act(h, k, &v);
            let khv = |u: &PBWElement| apply_mode(g.0, g.1, u, &module);
            sub(&khv(&hk), &act(h, k, &khv(&v)))
        };
        let total = nested(a, b, c).add(&nested(b, c, a)).add(&nested(c, a, b));
        prop_assert!(total.is_zero(), "{}", total);
    }

    #[test]
    fn h0_measures_the_weight(
        module in module_strategy(),
        w in prop::collection::vec((gen_strategy(), -3i64..=-1), 0..4),
    ) {
        let v = word(&module, &w);
        let charge: i64 = w.iter().map(|(g, _)| g.charge()).sum();
        let expected = v.scale(&(&module.weight + &Rat::int(charge)));
        prop_assert_eq!(apply_mode(Gen::H, 0, &v, &module), expected);
        prop_assert_eq!(v.homogeneous_degree().map(|(c, _)| c).unwrap_or(charge), charge);
    }

    #[test]
    fn zhu_image_kills_the_twisted_relations(
        w in prop::collection::vec((gen_strategy(), -3i64..=-1), 0..3),
        n in -3i64..=-1,
        h_shift in -3i64..=-2,
    ) {
        let lvl = Level::new(2, 3).unwrap();
        let module = ModuleData::vacuum(lvl.ell());
        let v = word(&module, &w);
        prop_assume!(!v.is_zero());
        let charge: i64 = w.iter().map(|(g, _)| g.charge()).sum();
        let image = |x: &PBWElement| zhu_twisted_image(x, &lvl).unwrap().polynomial;

        let u = match charge {
            c if c == -Gen::E.charge() => Gen::E,
            c if c == -Gen::F.charge() => Gen::F,
            0 => {
                let rel = apply_mode(Gen::H, h_shift, &v, &module).add(&apply_mode(Gen::H, h_shift + 1, &v, &module));
                prop_assert!(image(&rel).is_zero(), "h relation at {h_shift} on {v}");
                return Ok(());
            }
            _ => return Ok(()),
        };
        let depth = -w.iter().map(|(_, k)| k).sum::<i64>();
        let half = rat(1, 2);
        let mut rel = PBWElement::zero();
        for k in 0..=(depth - n + 1) {
            rel = rel.add(&apply_mode(u, n + k, &v, &module).scale(&binom(&half, k as usize)));
        }
        prop_assert!(image(&rel).is_zero(), "relation u={u:?} n={n} on {v}: {}", image(&rel));
    }
}

#[test]
fn charge_of_monomials() {
    let m = ModeMonomial(vec![(Gen::F, -1), (Gen::H, -1), (Gen::E, -1)]);
    assert_eq!(m.charge(), 0);
    assert_eq!(m.depth(), 3);
}
