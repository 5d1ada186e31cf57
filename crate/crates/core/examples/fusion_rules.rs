//! Fusion tables at admissible levels, cross-checked against the Zhu-bimodule oracle.

use twistvoa::fusion::{fusion_table, oracle_fuse, FusionResult, Level};

fn main() -> twistvoa::Result<()> {
    for (p, q) in [(2, 3), (3, 2), (2, 5)] {
        let lvl = Level::new(p, q)?;
        let table = fusion_table(&lvl)?;
        let mut agree = 0;
        for row in &table.pairs {
            let oracle = oracle_fuse(&lvl, &row.a, &row.b)?;
            if oracle.canonical() == FusionResult::from_summands(row.result.clone()).canonical() {
                agree += 1;
            } else {
                println!("  mismatch: {} (oracle {})", row.display, oracle.display(&lvl));
            }
        }
        println!("k = {}: {agree}/{} products agree with the oracle", lvl.ell(), table.pairs.len());
        if (p, q) == (2, 3) {
            for row in table.pairs.iter().take(9) {
                println!("  {}", row.display);
            }
        }
    }
    Ok(())
}
