//! Expand the U(L0) reduction identities and compare with their closed forms.

use twistvoa::fusion::Level;
use twistvoa::uea::ul0_reduce;

fn main() -> twistvoa::Result<()> {
    for (p, q) in [(2, 3), (3, 2), (3, 4)] {
        let lvl = Level::new(p, q)?;
        let (mut total, mut good) = (0, 0);
        for n in 1..p as u32 {
            for kappa in 1..=q as u32 {
                for a in 0..=2 {
                    for b in 0..=2 {
                        for d in 0..=3 {
                            let r = ul0_reduce(a, b, d, n, kappa, &lvl)?;
                            total += 1;
                            good += (r.e1_agrees() && r.e2_agrees()) as usize;
                        }
                    }
                }
            }
        }
        println!("k = {}: {good}/{total} cases agree", lvl.ell());
    }
    let r = ul0_reduce(0, 1, 2, 1, 1, &Level::new(3, 2)?)?;
    println!("example ({}): {}", r.e2_branch, r.e2_expanded);
    Ok(())
}
