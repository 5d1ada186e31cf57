//! Closed-form twisted fusion matrices at k = -4/3 next to the Verlinde-formula matrices.
//! The Verlinde side acquires -1 entries, so the two genuinely differ.

use twistvoa::fusion::{verlinde_check, VERLINDE_CONTRACTION};

fn main() -> twistvoa::Result<()> {
    let t = verlinde_check()?;
    println!("{VERLINDE_CONTRACTION}");
    let verlinde = t.verlinde_integral().expect("integral Verlinde matrices");
    for (a, (c, v)) in t.closed_form.iter().zip(&verlinde).enumerate() {
        println!("N_{a}: closed form {c:?}  Verlinde {v:?}");
    }
    Ok(())
}
