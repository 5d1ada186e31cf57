//! Exact Gaussian elimination over cyclotomic fields.

use super::cyclo::CycNumber;
use crate::error::{MathError, Result};

/// Solution set `particular + span(kernel)` of a linear system.
#[derive(Clone, Debug)]
pub struct AffineSolution {
    pub particular: Vec<CycNumber>,
    pub kernel: Vec<Vec<CycNumber>>,
}

/// Solves `rows · x = rhs` exactly, where each row has `n` entries.
pub fn solve(rows: &[Vec<CycNumber>], rhs: &[CycNumber], n: usize) -> Result<AffineSolution> {
    let mut m: Vec<Vec<CycNumber>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut v = r.clone();
            v.push(b.clone());
            v
        })
        .collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..m.len()).find(|&i| !m[i][col].is_zero()) else { continue };
        m.swap(row, p);
        let inv = m[row][col].inv()?;
        for x in m[row].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = m[row].clone();
        for (i, r) in m.iter_mut().enumerate() {
            if i == row || r[col].is_zero() {
                continue;
            }
            let f = r[col].clone();
            for (x, y) in r.iter_mut().zip(pivot_row.iter()) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    if let Some(r) = m[row..].iter().find(|r| !r[n].is_zero()) {
        return Err(MathError::Inconsistent(format!("residual equation 0 = {}", r[n])));
    }
    let mut particular = vec![CycNumber::zero(); n];
    for (i, &c) in pivots.iter().enumerate() {
        particular[c] = m[i][n].clone();
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let kernel = free
        .iter()
        .map(|&f| {
            let mut v = vec![CycNumber::zero(); n];
            v[f] = CycNumber::one();
            for (i, &c) in pivots.iter().enumerate() {
                v[c] = -&m[i][f];
            }
            v
        })
        .collect();
    Ok(AffineSolution { particular, kernel })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64) -> CycNumber {
        CycNumber::int(n)
    }

    #[test]
    fn unique_solution() {
        let rows = vec![vec![c(1), c(1)], vec![c(1), c(-1)], vec![c(2), c(0)]];
        let s = solve(&rows, &[c(3), c(1), c(4)], 2).unwrap();
        assert_eq!(s.particular, vec![c(2), c(1)]);
        assert!(s.kernel.is_empty());
    }

    #[test]
    fn inconsistent_system() {
        let rows = vec![vec![c(1)], vec![c(1)]];
        assert!(solve(&rows, &[c(1), c(2)], 1).is_err());
    }

    #[test]
    fn underdetermined_kernel() {
        let rows = vec![vec![c(1), c(1)]];
        let s = solve(&rows, &[c(1)], 2).unwrap();
        assert_eq!(s.kernel.len(), 1);
    }
}
