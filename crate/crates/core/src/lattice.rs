//! Exact solves of `Q·S = x` against the Laplacian lattice.
//!
//! On a connected graph the kernel of Q is spanned by the all-ones vector, so
//! pinning one coordinate of S to zero leaves a nonsingular reduced system.
//! The reduced inverse is computed once over the rationals; membership of `x`
//! in the image lattice is then an integrality check on `M·x`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::divisor::FiringScript;
use crate::error::Result;
use crate::graph::Graph;

/// Precomputed inverse of the Laplacian with the last vertex pinned.
#[derive(Clone, Debug)]
pub struct LaplacianSolver {
    n: usize,
    // (n-1)x(n-1), row-major
    inverse: Vec<BigRational>,
}

impl LaplacianSolver {
    pub fn new(graph: &Graph) -> Result<Self> {
        graph.require_connected()?;
        let n = graph.n();
        let m = n.saturating_sub(1);
        let q = graph.laplacian();
        let mut a: Vec<BigRational> = Vec::with_capacity(m * m);
        for r in 0..m {
            for c in 0..m {
                a.push(BigRational::from_integer(BigInt::from(q.get(r, c))));
            }
        }
        let inverse = invert(a, m).expect("reduced Laplacian of a connected graph is nonsingular");
        Ok(LaplacianSolver { n, inverse })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Returns the integer script S with `Q·S = rhs` and `S[n-1] = 0`, or
    /// `None` when no integer solution exists.
    pub fn solve(&self, rhs: &[i64]) -> Option<FiringScript> {
        assert_eq!(rhs.len(), self.n, "right-hand side has wrong length");
        if rhs.iter().sum::<i64>() != 0 {
            return None;
        }
        let m = self.n.saturating_sub(1);
        let mut script = vec![0i64; self.n];
        for (r, slot) in script.iter_mut().enumerate().take(m) {
            let mut acc = BigRational::zero();
            for (c, &x) in rhs.iter().enumerate().take(m) {
                if x != 0 {
                    acc += &self.inverse[r * m + c] * BigInt::from(x);
                }
            }
            if !acc.is_integer() {
                return None;
            }
            *slot = acc.to_integer().to_i64()?;
        }
        Some(FiringScript::new(script))
    }
}

/// Gauss-Jordan inversion over the rationals with partial pivoting on
/// nonzero entries. `None` if singular.
fn invert(mut a: Vec<BigRational>, m: usize) -> Option<Vec<BigRational>> {
    let mut inv: Vec<BigRational> = (0..m * m)
        .map(|i| if i / m == i % m { BigRational::one() } else { BigRational::zero() })
        .collect();
    for col in 0..m {
        let pivot = (col..m)
            .filter(|&r| !a[r * m + col].is_zero())
            .max_by(|&x, &y| a[x * m + col].abs().cmp(&a[y * m + col].abs()))?;
        if pivot != col {
            for c in 0..m {
                a.swap(pivot * m + c, col * m + c);
                inv.swap(pivot * m + c, col * m + c);
            }
        }
        let p = a[col * m + col].clone();
        for c in 0..m {
            a[col * m + c] /= &p;
            inv[col * m + c] /= &p;
        }
        for r in 0..m {
            if r == col || a[r * m + col].is_zero() {
                continue;
            }
            let factor = a[r * m + col].clone();
            for c in 0..m {
                let da = &factor * &a[col * m + c];
                a[r * m + c] -= da;
                let di = &factor * &inv[col * m + c];
                inv[r * m + c] -= di;
            }
        }
    }
    Some(inv)
}
