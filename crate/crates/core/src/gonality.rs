//! Rank, exact gonality search, and closed-form gonality of special families.

use num_integer::Integer;
use rayon::prelude::*;

use crate::divisor::Divisor;
use crate::enumerate::EffectiveDivisors;
use crate::error::{Error, Result};
use crate::families::CycleChainSpec;
use crate::graph::Graph;
use crate::reduction::{self, has_effective_unchecked, reduce_unchecked};

/// Outcome of an exact gonality search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GonalityCertificate {
    pub value: usize,
    /// Lexicographically least base-reduced divisor of degree `value` with
    /// rank at least one.
    pub witness: Divisor,
    /// Every degree below `value` was searched exhaustively.
    pub exhausted_below: bool,
}

fn validate(graph: &Graph, divisor: &Divisor) -> Result<()> {
    divisor.check_len(graph)?;
    graph.require_connected()
}

/// `r(D) ≥ 1` for an effective divisor: every vertex can receive a chip,
/// checked by reducing at each vertex that is currently empty.
pub fn rank_at_least_one(graph: &Graph, divisor: &Divisor) -> Result<bool> {
    validate(graph, divisor)?;
    if !divisor.is_effective() {
        return Err(Error::NotEffective);
    }
    Ok(covers_every_vertex(graph, divisor))
}

fn covers_every_vertex(graph: &Graph, divisor: &Divisor) -> bool {
    graph.vertices().all(|w| divisor[w] >= 1 || reduce_unchecked(graph, divisor, w)[w] >= 1)
}

/// Baker-Norine rank, capped at `k_max`: `-1` when `D` has no effective
/// equivalent, otherwise `min(r(D), k_max)`.
pub fn rank(graph: &Graph, divisor: &Divisor, k_max: usize) -> Result<i64> {
    validate(graph, divisor)?;
    if !has_effective_unchecked(graph, divisor) {
        return Ok(-1);
    }
    for k in 1..=k_max {
        let fails = EffectiveDivisors::new(graph.n(), k).any(|e| !has_effective_unchecked(graph, &(divisor - &e)));
        if fails {
            return Ok(k as i64 - 1);
        }
    }
    Ok(k_max as i64)
}

/// `K(v) = deg(v) − 2`.
pub fn canonical_divisor(graph: &Graph) -> Divisor {
    Divisor::new(graph.vertices().map(|v| graph.degree(v) as i64 - 2).collect())
}

/// Exact gonality with the search anchored at vertex 0.
pub fn gonality(graph: &Graph, budget: usize) -> Result<GonalityCertificate> {
    gonality_with_base(graph, budget, 0)
}

/// Exact gonality by increasing degree.
///
/// Every class of positive rank contains its `base`-reduced representative,
/// which then carries at least one chip on `base`; only such candidates are
/// tested. Candidates of one degree are checked in parallel and the
/// lexicographically least success is reported.
pub fn gonality_with_base(graph: &Graph, budget: usize, base: usize) -> Result<GonalityCertificate> {
    graph.require_connected()?;
    graph.check_vertex(base)?;
    if budget == 0 {
        return Err(Error::InvalidParameter("budget must be at least 1".into()));
    }
    for degree in 1..=budget {
        let candidates: Vec<Divisor> = EffectiveDivisors::new(graph.n(), degree)
            .filter(|d| d[base] >= 1 && reduction::is_v_reduced(graph, d, base).unwrap_or(false))
            .collect();
        let hit = candidates.into_par_iter().find_first(|d| covers_every_vertex(graph, d));
        if let Some(witness) = hit {
            return Ok(GonalityCertificate { value: degree, witness, exhausted_below: true });
        }
    }
    Err(Error::BudgetExhausted { budget })
}

/// Closed form for the fan on `n` vertices: the minimum of
/// `t + ⌈(n−1−t)/(t+1)⌉` over `t ∈ {⌊√n−1⌋, ⌈√n−1⌉}`.
pub fn fan_gonality(n: usize) -> Result<usize> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("fan needs at least 2 vertices, got {n}")));
    }
    let floor_root = n.isqrt();
    let ceil_root = if floor_root * floor_root == n { floor_root } else { floor_root + 1 };
    let value = [floor_root - 1, ceil_root - 1]
        .into_iter()
        .map(|t| t + (n - 1 - t.min(n - 1)).div_ceil(t + 1))
        .min()
        .expect("two candidates");
    Ok(value)
}

/// Gonality of a graph with a universal vertex `v`, via the min-max over
/// effective divisors `D` of `H − v` of `deg(D)` plus the largest clump at a
/// chip-free vertex.
///
/// Entries are capped at the degree in `H − v`: beyond that a vertex never
/// joins a clump, so larger values only raise the degree.
pub fn universal_gonality(graph: &Graph, v: usize) -> Result<usize> {
    graph.check_vertex(v)?;
    if graph.n() < 2 {
        return Err(Error::InvalidParameter("need at least 2 vertices".into()));
    }
    if !graph.is_universal(v) {
        return Err(Error::NotUniversal(v));
    }
    let rest: Vec<usize> = graph.vertices().filter(|&w| w != v).collect();
    let (sub, _) = graph.induced_subgraph(&rest)?;
    let caps: Vec<i64> = sub.vertices().map(|w| sub.degree(w) as i64).collect();
    let mut search = MinMaxSearch { graph: &sub, caps: &caps, best: i64::MAX, current: Divisor::zeros(sub.n()) };
    search.descend(0, 0);
    Ok(search.best as usize)
}

struct MinMaxSearch<'a> {
    graph: &'a Graph,
    caps: &'a [i64],
    best: i64,
    current: Divisor,
}

impl MinMaxSearch<'_> {
    fn descend(&mut self, index: usize, degree: i64) {
        if degree >= self.best {
            return;
        }
        if index == self.graph.n() {
            let value = degree + self.largest_empty_clump();
            self.best = self.best.min(value);
            return;
        }
        for value in 0..=self.caps[index] {
            self.current[index] = value;
            self.descend(index + 1, degree + value);
        }
        self.current[index] = 0;
    }

    fn largest_empty_clump(&self) -> i64 {
        self.graph
            .vertices()
            .filter(|&w| self.current[w] == 0)
            .map(|w| reduction::clump(self.graph, &self.current, w).expect("effective").len() as i64)
            .max()
            .unwrap_or(0)
    }
}

/// Position-weighted class invariant of a divisor pair on the cycle `ℤ_b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CycleDivisorClass {
    pub b: usize,
    pub delta: usize,
}

impl CycleDivisorClass {
    pub fn is_zero(&self) -> bool {
        self.delta == 0
    }
}

/// `Σ v·(D(v) − D'(v)) mod b` for equal-degree divisors on the cycle of
/// length `b`; zero exactly when the divisors are equivalent.
pub fn cycle_delta(b: usize, a: &Divisor, other: &Divisor) -> Result<CycleDivisorClass> {
    for d in [a, other] {
        if d.len() != b {
            return Err(Error::LengthMismatch { expected: b, found: d.len() });
        }
    }
    if a.degree() != other.degree() {
        return Err(Error::DegreeMismatch(a.degree(), other.degree()));
    }
    let weighted: i64 = (0..b).map(|v| v as i64 * (a[v] - other[v])).sum();
    Ok(CycleDivisorClass { b, delta: weighted.rem_euclid(b as i64) as usize })
}

/// `min(⌊(g+3)/2⌋, b / gcd(b, k))`.
pub fn cycle_chain_gonality(spec: CycleChainSpec) -> usize {
    let (g, b, k) = (spec.blocks(), spec.cycle_len(), spec.step());
    ((g + 3) / 2).min(b / b.gcd(&k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle, fan, grid, path, star, wheel};

    fn d(v: &[i64]) -> Divisor {
        Divisor::new(v.to_vec())
    }

    #[test]
    fn rank_one_examples() {
        let c4 = cycle(4).unwrap();
        assert_eq!(rank_at_least_one(&c4, &d(&[1, 0, 1, 0])), Ok(true));
        assert_eq!(rank_at_least_one(&c4, &d(&[1, 0, 0, 0])), Ok(false));
        assert_eq!(rank_at_least_one(&path(5), &Divisor::chips(5, 3, 1)), Ok(true));
    }

    #[test]
    fn rank_examples() {
        let c4 = cycle(4).unwrap();
        assert_eq!(rank(&c4, &d(&[1, 0, 0, 0]), 5), Ok(0));
        assert_eq!(rank(&c4, &d(&[1, 0, 1, 0]), 5), Ok(1));
        assert_eq!(rank(&c4, &d(&[1, -1, 0, 0]), 5), Ok(-1));
        assert_eq!(rank(&c4, &d(&[4, 0, 0, 0]), 2), Ok(2));
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(canonical_divisor(&cycle(6).unwrap()), Divisor::zeros(6));
        assert_eq!(canonical_divisor(&path(3)), d(&[-1, 0, -1]));
        assert_eq!(canonical_divisor(&fan(4).unwrap()), d(&[1, 0, 1, 0]));
    }

    #[test]
    fn gonality_examples() {
        assert_eq!(gonality(&grid(3, 3).unwrap(), 9).unwrap().value, 3);
        assert_eq!(gonality(&cycle(5).unwrap(), 5).unwrap().value, 2);
        let cert = gonality(&fan(9).unwrap(), 9).unwrap();
        assert_eq!(cert.value, 4);
        assert!(cert.exhausted_below);
        assert_eq!(cert.witness.degree(), 4);
        assert_eq!(
            gonality(&cycle(5).unwrap(), 1),
            Err(Error::BudgetExhausted { budget: 1 })
        );
        assert_eq!(gonality(&path(4), 4).unwrap().value, 1);
    }

    #[test]
    fn fan_formula_examples() {
        assert_eq!(fan_gonality(4), Ok(2));
        assert_eq!(fan_gonality(9), Ok(4));
        assert_eq!(fan_gonality(16), Ok(6));
        assert_eq!(fan_gonality(2), Ok(1));
        assert!(fan_gonality(1).is_err());
    }

    #[test]
    fn universal_formula_examples() {
        assert_eq!(universal_gonality(&wheel(5).unwrap(), 0), Ok(3));
        assert_eq!(universal_gonality(&fan(9).unwrap(), 0), Ok(4));
        assert_eq!(universal_gonality(&star(3), 0), Ok(1));
        assert_eq!(universal_gonality(&path(4), 1), Err(Error::NotUniversal(1)));
    }

    #[test]
    fn cycle_delta_examples() {
        let zero = cycle_delta(4, &d(&[2, 0, 0, 0]), &d(&[0, 0, 2, 0])).unwrap();
        assert!(zero.is_zero());
        assert_eq!(cycle_delta(4, &d(&[2, 0, 0, 0]), &d(&[1, 1, 0, 0])).unwrap().delta, 3);
        assert!(cycle_delta(4, &d(&[1, 2, 0, 1]), &d(&[1, 2, 0, 1])).unwrap().is_zero());
        assert_eq!(cycle_delta(4, &d(&[1, 0, 0, 0]), &d(&[0, 0, 0, 0])), Err(Error::DegreeMismatch(1, 0)));
    }

    #[test]
    fn cycle_chain_formula_examples() {
        let f = |g, b, k| cycle_chain_gonality(CycleChainSpec::new(g, b, k).unwrap());
        assert_eq!(f(3, 4, 2), 2);
        assert_eq!(f(3, 5, 2), 3);
        assert_eq!(f(5, 8, 3), 4);
    }
}
