//! Closed-form fusion rules.

use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use super::{AdmLabel, Base, Convention, Flow, FusionResult, Level, ModuleLabel};
use crate::error::{MathError, Result};

/// `max{0, n1+n2-p} ..= min{n1-1, n2-1}` in the `j = n-1-(κ-1)t` normalization.
pub(crate) fn summation_range(lvl: &Level, a: &AdmLabel, b: &AdmLabel) -> RangeInclusive<i64> {
    let (n1, n2) = (a.dlm_n(), b.dlm_n());
    0.max(n1 + n2 - lvl.p)..=(n1 - 1).min(n2 - 1)
}

/// `0 ≤ κ2 - 1 ≤ q - κ1`.
pub(crate) fn kappa_condition(lvl: &Level, a: &AdmLabel, b: &AdmLabel) -> bool {
    b.kappa >= 1 && b.kappa - 1 <= lvl.q - a.kappa
}

fn expect_convention(c: Convention, labels: &[&AdmLabel]) -> Result<()> {
    match labels.iter().find(|l| l.convention != c) {
        Some(l) => Err(MathError::Unsupported(format!("label {l:?} must use the {c:?} convention"))),
        None => Ok(()),
    }
}

/// Labels `j1 + j2 - 2i` over the summation range, in the convention of `a`.
fn range_sum(lvl: &Level, a: &AdmLabel, b: &AdmLabel) -> Vec<AdmLabel> {
    if !kappa_condition(lvl, a, b) {
        return vec![];
    }
    summation_range(lvl, a, b)
        .map(|i| AdmLabel {
            n: a.dlm_n() + b.dlm_n() - 1 - 2 * i - (a.dlm_n() - a.n),
            kappa: a.kappa + b.kappa - 1,
            convention: a.convention,
        })
        .collect()
}

/// `L(ℓ,j1) × L(ℓ,j2)`.
pub fn fuse_hw_hw(lvl: &Level, j1: &AdmLabel, j2: &AdmLabel) -> Result<FusionResult> {
    expect_convention(Convention::Hw, &[j1, j2])?;
    j1.checked(lvl)?;
    j2.checked(lvl)?;
    Ok(FusionResult::from_summands(range_sum(lvl, j1, j2).into_iter().map(ModuleLabel::hw).collect()))
}

/// `L(ℓ,j1) × σ^{-1/2}(L(ℓ,j2))`, both labels in the twisted convention.
pub fn fuse_hw_twisted(lvl: &Level, j1: &AdmLabel, j2: &AdmLabel) -> Result<FusionResult> {
    expect_convention(Convention::Twisted, &[j1, j2])?;
    j1.checked(lvl)?;
    j2.checked(lvl)?;
    Ok(FusionResult::from_summands(range_sum(lvl, j1, j2).into_iter().map(ModuleLabel::tw_hw).collect()))
}

/// `L(ℓ,j1)* × L(ℓ,j2)`: `L(j2-j1)` if `n2 ≥ n1, κ2 ≥ κ1`; `L(j1-j2)*` if `n2 ≤ n1, κ2 ≤ κ1`.
fn mixed(contra: &AdmLabel, hw: &AdmLabel) -> Option<ModuleLabel> {
    let (n1, n2, k1, k2) = (contra.n, hw.n, contra.kappa, hw.kappa);
    let conv = Convention::Hw;
    if n2 >= n1 && k2 >= k1 {
        Some(ModuleLabel::hw(AdmLabel { n: n2 - n1 + 1, kappa: k2 - k1 + 1, convention: conv }))
    } else if n2 <= n1 && k2 <= k1 {
        Some(ModuleLabel::contra(AdmLabel { n: n1 - n2 + 1, kappa: k1 - k2 + 1, convention: conv }))
    } else {
        None
    }
}

/// Products involving a contragredient module, up to commutativity:
///
/// * `L(j1)* × L(j2)`, `L(j1)* × L(j2)*`
/// * `L(j1)* × σ^{1/2}(L(j2)*)`, `L(j1)* × σ^{1/2}(L(j2))`
/// * `L(j2) × σ^{-1/2}(L(j1)*)`
pub fn fuse_contra(lvl: &Level, a: &ModuleLabel, b: &ModuleLabel) -> Result<FusionResult> {
    use Base::*;
    use Flow::*;
    let (a, b) = if a.flow != None && b.flow == None { (b, a) } else { (a, b) };
    expect_convention(Convention::Hw, &[&a.label, &b.label])?;
    a.label.checked(lvl)?;
    b.label.checked(lvl)?;
    let uncovered = || MathError::Unsupported(format!("no fusion rule for {} × {}", a.display(lvl), b.display(lvl)));
    let single = |m: Option<ModuleLabel>, flow: Flow| FusionResult::from_summands(m.map(|m| m.with_flow(flow)).into_iter().collect());
    Ok(match ((a.base, a.flow), (b.base, b.flow)) {
        ((Contra, None), (Hw, None)) => single(mixed(&a.label, &b.label), None),
        ((Hw, None), (Contra, None)) => single(mixed(&b.label, &a.label), None),
        ((Contra, None), (Hw, PlusHalf)) => single(mixed(&a.label, &b.label), PlusHalf),
        ((Hw, None), (Contra, MinusHalf)) => single(mixed(&b.label, &a.label), MinusHalf),
        ((Contra, None), (Contra, f @ (None | PlusHalf))) => FusionResult::from_summands(
            range_sum(lvl, &a.label, &b.label).into_iter().map(|l| ModuleLabel::new(Contra, f, l)).collect(),
        ),
        _ => return Err(uncovered()),
    })
}

/// Dispatches to the rule covering the pair `a × b`.
pub fn fuse(lvl: &Level, a: &ModuleLabel, b: &ModuleLabel) -> Result<FusionResult> {
    use Base::*;
    use Flow::*;
    match ((a.base, a.flow), (b.base, b.flow)) {
        ((Hw, None), (Hw, None)) => fuse_hw_hw(lvl, &a.label, &b.label),
        ((Hw, None), (Hw, MinusHalf)) => fuse_hw_twisted(lvl, &a.label, &b.label),
        ((Hw, MinusHalf), (Hw, None)) => fuse_hw_twisted(lvl, &b.label, &a.label),
        _ => fuse_contra(lvl, a, b),
    }
}

/// Every ordered pair covered by a closed-form rule.
pub fn covered_pairs(lvl: &Level) -> Vec<(ModuleLabel, ModuleLabel)> {
    let hw = lvl.labels(Convention::Hw);
    let tw = lvl.labels(Convention::Twisted);
    let families: Vec<(Vec<ModuleLabel>, Vec<ModuleLabel>)> = vec![
        (hw.iter().map(|&l| ModuleLabel::hw(l)).collect(), hw.iter().map(|&l| ModuleLabel::hw(l)).collect()),
        (tw.iter().map(|&l| ModuleLabel::hw(l)).collect(), tw.iter().map(|&l| ModuleLabel::tw_hw(l)).collect()),
        (hw.iter().map(|&l| ModuleLabel::contra(l)).collect(), hw.iter().map(|&l| ModuleLabel::hw(l)).collect()),
        (hw.iter().map(|&l| ModuleLabel::hw(l)).collect(), hw.iter().map(|&l| ModuleLabel::contra(l)).collect()),
        (hw.iter().map(|&l| ModuleLabel::contra(l)).collect(), hw.iter().map(|&l| ModuleLabel::contra(l)).collect()),
        (hw.iter().map(|&l| ModuleLabel::contra(l)).collect(), hw.iter().map(|&l| ModuleLabel::tw_contra(l)).collect()),
        (
            hw.iter().map(|&l| ModuleLabel::contra(l)).collect(),
            hw.iter().map(|&l| ModuleLabel::new(Base::Hw, Flow::PlusHalf, l)).collect(),
        ),
        (
            hw.iter().map(|&l| ModuleLabel::hw(l)).collect(),
            hw.iter().map(|&l| ModuleLabel::new(Base::Contra, Flow::MinusHalf, l)).collect(),
        ),
    ];
    let mut out = Vec::new();
    for (xs, ys) in families {
        for x in &xs {
            for y in &ys {
                out.push((*x, *y));
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub a: ModuleLabel,
    pub b: ModuleLabel,
    pub result: Vec<ModuleLabel>,
    pub display: String,
}

/// A fusion table in the command-line JSON layout.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FusionTable {
    pub level: Level,
    pub pairs: Vec<TableRow>,
}

/// All covered products at the given level, zeros included.
pub fn fusion_table(lvl: &Level) -> Result<FusionTable> {
    let pairs = covered_pairs(lvl)
        .into_iter()
        .map(|(a, b)| {
            let r = fuse(lvl, &a, &b)?;
            let display = format!("{} x {} = {}", a.display(lvl), b.display(lvl), r.display(lvl));
            Ok(TableRow { a, b, result: r.summands, display })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FusionTable { level: *lvl, pairs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, Rat};

    fn lvl23() -> Level {
        Level::new(2, 3).unwrap()
    }

    #[test]
    fn vacuum_is_identity() {
        let l = lvl23();
        let v = AdmLabel::vacuum(Convention::Hw);
        for a in l.labels(Convention::Hw) {
            let r = fuse_hw_hw(&l, &v, &a).unwrap();
            assert_eq!(r.summands, vec![ModuleLabel::hw(a)]);
        }
    }

    #[test]
    fn minus_two_thirds_squared() {
        let l = lvl23();
        let a = l.label_of(&rat(-2, 3), Convention::Hw).unwrap();
        let r = fuse_hw_hw(&l, &a, &a).unwrap();
        assert_eq!(r.weights(&l), vec![rat(-4, 3)]);
    }

    #[test]
    fn range_example_three_two() {
        let l = Level::new(3, 2).unwrap();
        let a = AdmLabel::hw(&l, 2, 1).unwrap();
        let r = fuse_hw_hw(&l, &a, &a).unwrap();
        assert_eq!(r.weights(&l), vec![&(&a.weight(&l) + &a.weight(&l)) - &Rat::int(2)]);
    }

    #[test]
    fn twisted_example() {
        let l = lvl23();
        for k1 in 0..3 {
            for k2 in 0..3 {
                let a = AdmLabel::twisted(&l, 0, k1 + 1).unwrap();
                let b = AdmLabel::twisted(&l, 0, k2 + 1).unwrap();
                let r = fuse_hw_twisted(&l, &a, &b).unwrap();
                if k2 <= 2 - k1 {
                    let w = &a.weight(&l) + &b.weight(&l);
                    assert_eq!(r.summands, vec![ModuleLabel::tw_hw(l.label_of(&w, Convention::Twisted).unwrap())]);
                } else {
                    assert!(r.is_zero());
                }
            }
        }
    }

    #[test]
    fn contragredient_examples() {
        let l = lvl23();
        let p = |s: &str| ModuleLabel::parse(&l, s, false).unwrap();
        let one = |a: &str, b: &str| fuse(&l, &p(a), &p(b)).unwrap().display(&l);
        assert_eq!(one("L(-2/3)*", "L(-2/3)"), "L(0)");
        assert_eq!(one("L(-2/3)", "L(-2/3)*"), "L(0)");
        assert_eq!(one("L(-4/3)", "L(-4/3)*"), "L(0)");
        assert_eq!(one("L(-2/3)", "L(-4/3)*"), "L(-2/3)*");
        assert_eq!(one("L(-4/3)", "L(-2/3)*"), "L(-2/3)");
    }

    #[test]
    fn symmetric_products() {
        for (p, q) in [(2, 3), (3, 2), (3, 4), (5, 2)] {
            let l = Level::new(p, q).unwrap();
            for (a, b) in covered_pairs(&l) {
                assert_eq!(fuse(&l, &a, &b).unwrap(), fuse(&l, &b, &a).unwrap());
            }
        }
    }

    #[test]
    fn uncovered_pair_errors() {
        let l = lvl23();
        let a = ModuleLabel::tw_contra(AdmLabel::vacuum(Convention::Hw));
        assert!(fuse(&l, &a, &a).is_err());
    }
}
