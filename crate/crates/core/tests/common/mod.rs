//! Independent oracles shared by the integration suites.
//!
//! Nothing here calls the reduction or gonality modules: classes are found by
//! walking legal set-firings directly, which is the chip-firing game itself.
#![allow(dead_code)]

use std::collections::{HashMap, VecDeque};

use gonal::enumerate::effective_divisors;
use gonal::{Divisor, Graph, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `D − Q·1_A` computed straight from the edge list.
pub fn fire(graph: &Graph, d: &Divisor, a: &VertexSet) -> Divisor {
    let mut out = d.clone();
    for &(u, v) in graph.edges() {
        if a.contains(u) && !a.contains(v) {
            out[u] -= 1;
            out[v] += 1;
        } else if a.contains(v) && !a.contains(u) {
            out[v] -= 1;
            out[u] += 1;
        }
    }
    out
}

/// Every non-empty proper vertex subset.
pub fn proper_subsets(n: usize) -> Vec<VertexSet> {
    (1u32..(1 << n) - 1)
        .map(|mask| VertexSet::from_indices(n, (0..n).filter(|&v| mask >> v & 1 == 1)))
        .collect()
}

/// Partition of all effective divisors of one degree into the components of
/// the legal-move graph. Legal moves are reversible (fire the complement), so
/// on a connected graph these components are exactly the equivalence classes
/// restricted to effective divisors.
pub struct MoveClasses {
    pub divisors: Vec<Divisor>,
    pub class_of: HashMap<Divisor, usize>,
    pub classes: usize,
}

impl MoveClasses {
    pub fn new(graph: &Graph, degree: usize) -> Self {
        let divisors = effective_divisors(graph.n(), degree);
        let subsets = proper_subsets(graph.n());
        let mut class_of: HashMap<Divisor, usize> = HashMap::new();
        let mut classes = 0;
        for start in &divisors {
            if class_of.contains_key(start) {
                continue;
            }
            let id = classes;
            classes += 1;
            class_of.insert(start.clone(), id);
            let mut queue = VecDeque::from([start.clone()]);
            while let Some(d) = queue.pop_front() {
                for a in &subsets {
                    let next = fire(graph, &d, a);
                    if next.is_effective() && !class_of.contains_key(&next) {
                        class_of.insert(next.clone(), id);
                        queue.push_back(next);
                    }
                }
            }
        }
        MoveClasses { divisors, class_of, classes }
    }

    pub fn members(&self, class: usize) -> impl Iterator<Item = &Divisor> {
        self.divisors.iter().filter(move |d| self.class_of[*d] == class)
    }

    pub fn same_class(&self, a: &Divisor, b: &Divisor) -> bool {
        self.class_of[a] == self.class_of[b]
    }

    /// Largest value at `v` over the class of `d`.
    pub fn max_at(&self, d: &Divisor, v: usize) -> i64 {
        self.members(self.class_of[d]).map(|e| e[v]).max().unwrap()
    }

    /// Whether some class lets every vertex receive a chip.
    pub fn has_winning_class(&self, n: usize) -> bool {
        (0..self.classes).any(|c| (0..n).all(|v| self.members(c).any(|d| d[v] >= 1)))
    }
}

/// Gonality as the fewest chips that win the chip-firing game.
pub fn game_gonality(graph: &Graph) -> usize {
    (1..=graph.n())
        .find(|&d| MoveClasses::new(graph, d).has_winning_class(graph.n()))
        .expect("one chip per vertex always wins")
}

/// Seeded connected graph on `n` vertices: a random spanning tree plus each
/// remaining pair with probability `p`.
pub fn random_connected(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.random_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Two cycles of lengths `a` and `b` sharing vertex 0. Returns the graph and
/// both blocks as vertex lists.
pub fn two_cycles(a: usize, b: usize) -> (Graph, Vec<usize>, Vec<usize>) {
    let n = a + b - 1;
    let first: Vec<usize> = (0..a).collect();
    let second: Vec<usize> = std::iter::once(0).chain(a..n).collect();
    let mut edges = Vec::new();
    for ring in [&first, &second] {
        for i in 0..ring.len() {
            edges.push((ring[i], ring[(i + 1) % ring.len()]));
        }
    }
    (Graph::new(n, edges).unwrap(), first, second)
}
