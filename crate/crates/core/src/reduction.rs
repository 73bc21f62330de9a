//! Burning closures and reduced divisors.
//!
//! A single closure primitive serves both the clump of a divisor at a vertex
//! and the reduction algorithm: the clump is exactly the set burnt by the
//! burning process seeded at that vertex, and a divisor is reduced at `v`
//! precisely when the fire consumes the whole graph.

use crate::divisor::{fire_in_place, Divisor};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::lattice::LaplacianSolver;

/// Outcome of burning from a seed vertex.
///
/// Every unburnt vertex `w` satisfies `D(w) ≥ |N(w) ∩ burnt|`, and `burnt`
/// is the smallest set containing the seed with that property.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BurnResult {
    pub burnt: VertexSet,
    pub unburnt: VertexSet,
}

/// Burns from `seed`: a vertex catches fire once the burnt neighbours
/// outnumber its chips.
pub fn burn(graph: &Graph, divisor: &Divisor, seed: usize) -> BurnResult {
    let burnt = closure(graph, divisor, seed);
    let unburnt = burnt.complement();
    BurnResult { burnt, unburnt }
}

fn closure(graph: &Graph, divisor: &Divisor, seed: usize) -> VertexSet {
    let n = graph.n();
    let mut burnt = VertexSet::new(n);
    let mut pressure = vec![0i64; n];
    let mut stack = vec![seed];
    burnt.insert(seed);
    while let Some(u) = stack.pop() {
        for &w in graph.neighbors(u) {
            if burnt.contains(w) {
                continue;
            }
            pressure[w] += 1;
            if pressure[w] > divisor[w] {
                burnt.insert(w);
                stack.push(w);
            }
        }
    }
    burnt
}

/// `clump(G, D, v)`: the minimal set containing `v` such that every vertex
/// outside it holds at least as many chips as it has neighbours inside.
pub fn clump(graph: &Graph, divisor: &Divisor, v: usize) -> Result<VertexSet> {
    divisor.check_len(graph)?;
    graph.check_vertex(v)?;
    if !divisor.is_effective() {
        return Err(Error::NotEffective);
    }
    Ok(closure(graph, divisor, v))
}

pub fn is_v_reduced(graph: &Graph, divisor: &Divisor, v: usize) -> Result<bool> {
    Ok(clump(graph, divisor, v)?.is_full())
}

/// The unique `v`-reduced effective divisor equivalent to an effective `D`.
pub fn v_reduce(graph: &Graph, divisor: &Divisor, v: usize) -> Result<Divisor> {
    divisor.check_len(graph)?;
    graph.check_vertex(v)?;
    if !divisor.is_effective() {
        return Err(Error::NotEffective);
    }
    graph.require_connected()?;
    Ok(reduce_unchecked(graph, divisor, v))
}

/// `v_reduce` without validation, for inner loops over a graph already known
/// to be connected and a divisor known to be effective.
pub(crate) fn reduce_unchecked(graph: &Graph, divisor: &Divisor, v: usize) -> Divisor {
    let mut d = divisor.clone();
    reduce_nonneg_off_base(graph, &mut d, v);
    d
}

/// Whether the class of an arbitrary divisor contains an effective divisor,
/// without validation.
pub(crate) fn has_effective_unchecked(graph: &Graph, divisor: &Divisor) -> bool {
    if divisor.is_effective() {
        return true;
    }
    if divisor.degree() < 0 {
        return false;
    }
    let mut d = divisor.clone();
    lift_off_base(graph, &mut d, 0);
    reduce_nonneg_off_base(graph, &mut d, 0);
    d[0] >= 0
}

/// The `q`-reduced representative of an arbitrary divisor: non-negative away
/// from `q` and admitting no legal firing that avoids `q`. The class contains
/// an effective divisor iff the returned value at `q` is non-negative.
pub fn reduce_extended(graph: &Graph, divisor: &Divisor, q: usize) -> Result<Divisor> {
    divisor.check_len(graph)?;
    graph.check_vertex(q)?;
    graph.require_connected()?;
    let mut d = divisor.clone();
    lift_off_base(graph, &mut d, q);
    reduce_nonneg_off_base(graph, &mut d, q);
    Ok(d)
}

/// Whether some effective divisor is equivalent to `D`.
pub fn has_effective_equivalent(graph: &Graph, divisor: &Divisor) -> Result<bool> {
    divisor.check_len(graph)?;
    graph.require_connected()?;
    if graph.n() == 0 {
        return Ok(true);
    }
    Ok(has_effective_unchecked(graph, divisor))
}

/// Makes every vertex except `q` non-negative by firing balls around `q`,
/// from the outermost shell inward. Firing the ball of radius `r` only
/// changes vertices at distance `r` and `r + 1`.
fn lift_off_base(graph: &Graph, d: &mut Divisor, q: usize) {
    let dist: Vec<usize> = graph.distances_from(q).into_iter().map(|x| x.expect("connected")).collect();
    let radius = dist.iter().copied().max().unwrap_or(0);
    for r in (0..radius).rev() {
        let ball = VertexSet::from_indices(graph.n(), (0..graph.n()).filter(|&v| dist[v] <= r));
        let times = (0..graph.n())
            .filter(|&w| dist[w] == r + 1 && d[w] < 0)
            .map(|w| {
                let inside = graph.neighbors(w).iter().filter(|&&u| dist[u] == r).count() as i64;
                (-d[w] + inside - 1) / inside
            })
            .max()
            .unwrap_or(0);
        if times > 0 {
            fire_in_place(graph, d, &ball, times);
        }
    }
}

/// Repeatedly fires the unburnt complement of the fire seeded at `q`, as
/// many times at once as stays legal. Requires `D(w) ≥ 0` for `w ≠ q`.
fn reduce_nonneg_off_base(graph: &Graph, d: &mut Divisor, q: usize) {
    loop {
        let burnt = closure(graph, d, q);
        if burnt.is_full() {
            return;
        }
        let unburnt = burnt.complement();
        let times = unburnt
            .iter()
            .filter_map(|w| {
                let into_fire = graph.neighbors(w).iter().filter(|&&u| burnt.contains(u)).count() as i64;
                (into_fire > 0).then(|| d[w] / into_fire)
            })
            .min()
            .expect("a connected graph has an edge between burnt and unburnt");
        debug_assert!(times >= 1);
        fire_in_place(graph, d, &unburnt, times);
    }
}

/// Linear equivalence, decided by an exact integer solve of `Q·S = D − D'`.
pub fn equivalent(graph: &Graph, a: &Divisor, b: &Divisor) -> Result<bool> {
    a.check_len(graph)?;
    b.check_len(graph)?;
    if a.degree() != b.degree() {
        return Ok(false);
    }
    let solver = LaplacianSolver::new(graph)?;
    Ok(solver.solve((a - b).values()).is_some())
}

/// `max{D'(v) : D' effective, D' ~ D}`, which is the value at `v` of the
/// `v`-reduced representative.
pub fn max_at_vertex(graph: &Graph, divisor: &Divisor, v: usize) -> Result<i64> {
    Ok(v_reduce(graph, divisor, v)?[v])
}
