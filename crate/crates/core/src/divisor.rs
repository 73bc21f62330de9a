//! Divisor arithmetic, set-firing and the nested-chain decomposition between
//! equivalent effective divisors.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Sub};

use crate::error::{Error, Result};
use crate::graph::{parse_numbers, Graph, VertexSet};
use crate::lattice::LaplacianSolver;

/// An integer vector indexed by the vertices of a graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Divisor(Vec<i64>);

impl Divisor {
    pub fn new(values: Vec<i64>) -> Self {
        Divisor(values)
    }

    pub fn zeros(n: usize) -> Self {
        Divisor(vec![0; n])
    }

    /// `count` chips on `v`, nothing elsewhere.
    pub fn chips(n: usize, v: usize, count: i64) -> Self {
        let mut d = Divisor::zeros(n);
        d.0[v] = count;
        d
    }

    pub fn indicator(set: &VertexSet) -> Self {
        Divisor((0..set.universe()).map(|v| i64::from(set.contains(v))).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn into_values(self) -> Vec<i64> {
        self.0
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_effective(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn support(&self) -> VertexSet {
        VertexSet::from_indices(self.len(), (0..self.len()).filter(|&v| self.0[v] != 0))
    }

    /// Restriction to the listed vertices, in the listed order.
    pub fn restrict(&self, vertices: &[usize]) -> Divisor {
        Divisor(vertices.iter().map(|&v| self.0[v]).collect())
    }

    pub fn check_len(&self, graph: &Graph) -> Result<()> {
        if self.len() == graph.n() {
            Ok(())
        } else {
            Err(Error::LengthMismatch { expected: graph.n(), found: self.len() })
        }
    }

    /// Single line of whitespace-separated integers.
    pub fn to_text(&self) -> String {
        let mut s = self.0.iter().map(i64::to_string).collect::<Vec<_>>().join(" ");
        s.push('\n');
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (line, body) = lines.next().ok_or(Error::Parse { line: 0, msg: "missing divisor".into() })?;
        if let Some((extra, _)) = lines.next() {
            return Err(Error::Parse { line: extra, msg: "divisor must be a single line".into() });
        }
        Ok(Divisor(parse_numbers(body, line)?))
    }
}

impl From<Vec<i64>> for Divisor {
    fn from(values: Vec<i64>) -> Self {
        Divisor(values)
    }
}

impl Index<usize> for Divisor {
    type Output = i64;
    fn index(&self, v: usize) -> &i64 {
        &self.0[v]
    }
}

impl IndexMut<usize> for Divisor {
    fn index_mut(&mut self, v: usize) -> &mut i64 {
        &mut self.0[v]
    }
}

impl Add for &Divisor {
    type Output = Divisor;
    fn add(self, rhs: &Divisor) -> Divisor {
        assert_eq!(self.len(), rhs.len());
        Divisor(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Divisor {
    type Output = Divisor;
    fn sub(self, rhs: &Divisor) -> Divisor {
        assert_eq!(self.len(), rhs.len());
        Divisor(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Debug for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<_> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Per-vertex firing counts S, acting by `D ↦ D − Q·S`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FiringScript(Vec<i64>);

impl FiringScript {
    pub fn new(values: Vec<i64>) -> Self {
        FiringScript(values)
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }

    /// Shifted so the minimum entry is zero. On a connected graph the action
    /// on divisors does not change.
    pub fn normalized(&self) -> FiringScript {
        let min = self.0.iter().copied().min().unwrap_or(0);
        FiringScript(self.0.iter().map(|x| x - min).collect())
    }

    /// Computes `D − Q·S`.
    pub fn apply(&self, graph: &Graph, divisor: &Divisor) -> Divisor {
        let qs = graph.laplacian().mul_vec(&self.0);
        Divisor(divisor.0.iter().zip(qs).map(|(d, q)| d - q).collect())
    }
}

/// Fires the set `a` once: every edge from `a` to its complement moves one
/// chip out of `a`.
pub fn fire_set(graph: &Graph, divisor: &Divisor, a: &VertexSet) -> Result<Divisor> {
    fire_set_times(graph, divisor, a, 1)
}

/// Fires `a` `times` times, i.e. `D − times·Q·1_A`.
pub fn fire_set_times(graph: &Graph, divisor: &Divisor, a: &VertexSet, times: i64) -> Result<Divisor> {
    divisor.check_len(graph)?;
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    if a.universe() != graph.n() {
        return Err(Error::LengthMismatch { expected: graph.n(), found: a.universe() });
    }
    let mut out = divisor.clone();
    fire_in_place(graph, &mut out, a, times);
    Ok(out)
}

pub(crate) fn fire_in_place(graph: &Graph, divisor: &mut Divisor, a: &VertexSet, times: i64) {
    for &(u, v) in graph.edges() {
        match (a.contains(u), a.contains(v)) {
            (true, false) => {
                divisor.0[u] -= times;
                divisor.0[v] += times;
            }
            (false, true) => {
                divisor.0[v] -= times;
                divisor.0[u] += times;
            }
            _ => {}
        }
    }
}

/// Whether firing `a` from an effective divisor keeps it effective.
pub fn is_legal_move(graph: &Graph, divisor: &Divisor, a: &VertexSet) -> Result<bool> {
    if !divisor.is_effective() {
        return Err(Error::NotEffective);
    }
    Ok(fire_set(graph, divisor, a)?.is_effective())
}

/// Integer script S with `target = divisor − Q·S`, normalized to minimum 0,
/// or `None` if the divisors are not equivalent.
pub fn equivalence_script(graph: &Graph, divisor: &Divisor, target: &Divisor) -> Result<Option<FiringScript>> {
    divisor.check_len(graph)?;
    target.check_len(graph)?;
    let solver = LaplacianSolver::new(graph)?;
    let diff = divisor - target;
    Ok(solver.solve(diff.values()).map(|s| s.normalized()))
}

/// The nested chain `∅ ⊊ A₁ ⊆ … ⊆ A_t ⊊ V` with effective intermediates
/// `D₀ = D, …, D_t = D'` where `D_i = D_{i−1} − Q·1_{A_i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainDecomposition {
    pub sets: Vec<VertexSet>,
    pub divisors: Vec<Divisor>,
}

impl ChainDecomposition {
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Re-checks nesting, properness, effectiveness and every firing step.
    pub fn is_valid(&self, graph: &Graph) -> bool {
        if self.divisors.len() != self.sets.len() + 1 {
            return false;
        }
        let nested = self.sets.windows(2).all(|w| w[0].is_subset(&w[1]));
        let proper = self.sets.iter().all(|a| !a.is_empty() && !a.is_full());
        let effective = self.divisors.iter().all(Divisor::is_effective);
        let steps = self.sets.iter().enumerate().all(|(i, a)| {
            fire_set(graph, &self.divisors[i], a).is_ok_and(|d| d == self.divisors[i + 1])
        });
        nested && proper && effective && steps
    }
}

/// Decomposes the passage between two equivalent effective divisors into the
/// unique nested chain of legal set-firings.
///
/// The chain is read off the level sets of the normalized script: with
/// `t = max S`, `A_i = {v : S(v) ≥ t − i + 1}`.
pub fn chain_decompose(graph: &Graph, divisor: &Divisor, target: &Divisor) -> Result<ChainDecomposition> {
    if !divisor.is_effective() || !target.is_effective() {
        return Err(Error::NotEffective);
    }
    let script = equivalence_script(graph, divisor, target)?.ok_or(Error::NotEquivalent)?;
    let s = script.values();
    let t = s.iter().copied().max().unwrap_or(0);
    let n = graph.n();
    let mut sets = Vec::with_capacity(t as usize);
    let mut divisors = vec![divisor.clone()];
    for i in 1..=t {
        let level = t - i + 1;
        let a = VertexSet::from_indices(n, (0..n).filter(|&v| s[v] >= level));
        let next = fire_set(graph, divisors.last().unwrap(), &a)?;
        if !next.is_effective() {
            return Err(Error::ChainNotEffective { step: i as usize });
        }
        sets.push(a);
        divisors.push(next);
    }
    debug_assert_eq!(divisors.last(), Some(target));
    Ok(ChainDecomposition { sets, divisors })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    fn p3() -> Graph {
        Graph::new(3, [(0, 1), (1, 2)]).unwrap()
    }

    fn set(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_indices(n, v.iter().copied())
    }

    #[test]
    fn effectiveness() {
        assert!(Divisor::new(vec![0, 0, 0]).is_effective());
        assert!(!Divisor::new(vec![2, -1, 0]).is_effective());
        assert!(Divisor::new(vec![1, 1, 1, 1]).is_effective());
    }

    #[test]
    fn fire_set_examples() {
        let d = Divisor::new(vec![2, 0, 0, 0]);
        assert_eq!(fire_set(&c4(), &d, &set(4, &[0])).unwrap().values(), &[0, 1, 0, 1]);
        assert_eq!(fire_set(&c4(), &d, &VertexSet::full(4)).unwrap(), d);
        let d = Divisor::new(vec![0, 1, 0]);
        assert_eq!(fire_set(&p3(), &d, &set(3, &[1])).unwrap().values(), &[1, -1, 1]);
        assert_eq!(fire_set(&p3(), &d, &VertexSet::new(3)), Err(Error::EmptySet));
    }

    #[test]
    fn fire_set_matches_laplacian() {
        let g = c4();
        let d = Divisor::new(vec![3, 1, 0, 2]);
        let a = set(4, &[1, 2]);
        let via_q = FiringScript::new(Divisor::indicator(&a).into_values()).apply(&g, &d);
        assert_eq!(fire_set(&g, &d, &a).unwrap(), via_q);
    }

    #[test]
    fn legal_moves() {
        let d = Divisor::new(vec![2, 0, 0, 0]);
        assert_eq!(is_legal_move(&c4(), &d, &set(4, &[0])), Ok(true));
        assert_eq!(is_legal_move(&p3(), &Divisor::new(vec![0, 1, 0]), &set(3, &[1])), Ok(false));
        assert_eq!(is_legal_move(&c4(), &d, &VertexSet::full(4)), Ok(true));
    }

    #[test]
    fn chain_on_c4() {
        let g = c4();
        let d = Divisor::new(vec![2, 0, 0, 0]);
        let d2 = Divisor::new(vec![0, 0, 2, 0]);
        assert_eq!(equivalence_script(&g, &d, &d2).unwrap().unwrap().values(), &[2, 1, 0, 1]);
        let chain = chain_decompose(&g, &d, &d2).unwrap();
        assert_eq!(chain.sets, vec![set(4, &[0]), set(4, &[0, 1, 3])]);
        assert_eq!(
            chain.divisors,
            vec![d.clone(), Divisor::new(vec![0, 1, 0, 1]), d2.clone()]
        );
        assert!(chain.is_valid(&g));
    }

    #[test]
    fn chain_trivial_and_errors() {
        let g = c4();
        let d = Divisor::new(vec![2, 0, 0, 0]);
        assert!(chain_decompose(&g, &d, &d).unwrap().is_empty());
        assert_eq!(
            chain_decompose(&g, &d, &Divisor::new(vec![1, 1, 0, 0])),
            Err(Error::NotEquivalent)
        );
        assert_eq!(
            chain_decompose(&g, &Divisor::new(vec![3, -1, 0, 0]), &d),
            Err(Error::NotEffective)
        );
    }

    #[test]
    fn divisor_text() {
        let d = Divisor::from_text("# comment\n 1 -2 3 \n").unwrap();
        assert_eq!(d.values(), &[1, -2, 3]);
        assert_eq!(Divisor::from_text(&d.to_text()).unwrap(), d);
        assert!(Divisor::from_text("1 2\n3\n").is_err());
    }
}
