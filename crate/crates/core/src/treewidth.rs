//! Tree decompositions: certificate checking, the path decomposition of a
//! path with universal vertices, and exact treewidth for small graphs.

use thiserror::Error;

use crate::error::{Error as CoreError, Result};
use crate::graph::{parse_numbers, Graph};

/// Largest graph accepted by [`exact_treewidth`].
pub const EXACT_TREEWIDTH_LIMIT: usize = 14;

/// A tree together with a bag of graph vertices per tree node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    pub tree: Graph,
    pub bags: Vec<Vec<usize>>,
}

/// Ways a tree decomposition can fail.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DecompositionError {
    #[error("decomposition tree is not a tree")]
    NotATree,
    #[error("{bags} bags for a tree on {nodes} nodes")]
    BagCount { nodes: usize, bags: usize },
    #[error("bag {bag} contains vertex {vertex}, which is not in the graph")]
    UnknownVertex { bag: usize, vertex: usize },
    #[error("vertex {0} is in no bag")]
    VertexUncovered(usize),
    #[error("edge ({0}, {1}) is in no bag")]
    EdgeUncovered(usize, usize),
    #[error("bags containing vertex {0} do not form a subtree")]
    NotConnected(usize),
}

/// Checks vertex coverage, edge coverage and the subtree property; returns
/// the width (largest bag size minus one).
pub fn verify_decomposition(graph: &Graph, td: &TreeDecomposition) -> Result<usize, DecompositionError> {
    let nodes = td.tree.n();
    if nodes == 0 || td.tree.edge_count() + 1 != nodes || !td.tree.is_connected() {
        return Err(DecompositionError::NotATree);
    }
    if td.bags.len() != nodes {
        return Err(DecompositionError::BagCount { nodes, bags: td.bags.len() });
    }
    let mut holders: Vec<Vec<usize>> = vec![Vec::new(); graph.n()];
    for (t, bag) in td.bags.iter().enumerate() {
        for &v in bag {
            if v >= graph.n() {
                return Err(DecompositionError::UnknownVertex { bag: t, vertex: v });
            }
            if !holders[v].contains(&t) {
                holders[v].push(t);
            }
        }
    }
    if let Some(v) = (0..graph.n()).find(|&v| holders[v].is_empty()) {
        return Err(DecompositionError::VertexUncovered(v));
    }
    for &(u, v) in graph.edges() {
        if !holders[u].iter().any(|t| td.bags[*t].contains(&v)) {
            return Err(DecompositionError::EdgeUncovered(u, v));
        }
    }
    for (v, nodes_with_v) in holders.iter().enumerate() {
        let (sub, _) = td.tree.induced_subgraph(nodes_with_v).expect("distinct tree nodes");
        if !sub.is_connected() {
            return Err(DecompositionError::NotConnected(v));
        }
    }
    let widest = td.bags.iter().map(|b| dedup_len(b)).max().unwrap_or(0);
    Ok(widest.saturating_sub(1))
}

fn dedup_len(bag: &[usize]) -> usize {
    let mut b = bag.to_vec();
    b.sort_unstable();
    b.dedup();
    b.len()
}

impl TreeDecomposition {
    /// `T_n T_m`, then the tree edges, then one `bag: v₁ v₂ …` line per tree
    /// node in order.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.tree.n(), self.tree.edge_count());
        for &(u, v) in self.tree.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        for bag in &self.bags {
            out.push_str("bag:");
            for v in bag {
                out.push_str(&format!(" {v}"));
            }
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (line, header) = lines.next().ok_or(CoreError::Parse { line: 0, msg: "missing header".into() })?;
        let [nodes, m] = parse_numbers::<usize>(header, line)?[..] else {
            return Err(CoreError::Parse { line, msg: "header must be \"T_n T_m\"".into() });
        };
        let mut edges = Vec::with_capacity(m);
        let mut bags = Vec::with_capacity(nodes);
        for (line, l) in lines {
            if let Some(rest) = l.strip_prefix("bag:") {
                bags.push(parse_numbers::<usize>(rest, line)?);
            } else if bags.is_empty() {
                let [u, v] = parse_numbers::<usize>(l, line)?[..] else {
                    return Err(CoreError::Parse { line, msg: "tree edge must be \"u v\"".into() });
                };
                edges.push((u, v));
            } else {
                return Err(CoreError::Parse { line, msg: "expected a bag line".into() });
            }
        }
        if edges.len() != m {
            return Err(CoreError::Parse { line: 1, msg: format!("header declares {m} tree edges, found {}", edges.len()) });
        }
        if bags.len() != nodes {
            return Err(CoreError::Parse { line: 1, msg: format!("header declares {nodes} bags, found {}", bags.len()) });
        }
        Ok(TreeDecomposition { tree: Graph::new(nodes, edges)?, bags })
    }
}

/// Decomposition of `universal_path(n, k)` along its path: node `i` holds
/// path vertices `pᵢ, pᵢ₊₁` and every universal vertex. Width `k`.
pub fn universal_path_decomposition(n: usize, k: usize) -> Result<TreeDecomposition> {
    if n < 3 || k < 2 {
        return Err(CoreError::InvalidParameter(format!(
            "universal path decomposition needs n >= 3 and k >= 2, got n={n}, k={k}"
        )));
    }
    let hubs = k - 1;
    let path_len = n - 1;
    let nodes = path_len - 1;
    let tree = Graph::new(nodes, (1..nodes).map(|i| (i - 1, i)))?;
    let bags = (0..nodes)
        .map(|i| {
            let mut bag = vec![hubs + i, hubs + i + 1];
            bag.extend(0..hubs);
            bag.sort_unstable();
            bag
        })
        .collect();
    Ok(TreeDecomposition { tree, bags })
}

/// δ(G), a lower bound on treewidth.
pub fn min_degree_bound(graph: &Graph) -> usize {
    graph.min_degree()
}

/// Exact treewidth by dynamic programming over vertex subsets: eliminating
/// the vertices of `S` first costs `TW(S) = min_{v∈S} max(TW(S∖v), |Q(S∖v, v)|)`,
/// where `Q(S, v)` is the set of vertices outside `S ∪ {v}` reachable from
/// `v` through `S`.
pub fn exact_treewidth(graph: &Graph) -> Result<usize> {
    let n = graph.n();
    if n > EXACT_TREEWIDTH_LIMIT {
        return Err(CoreError::TooLarge { found: n, limit: EXACT_TREEWIDTH_LIMIT });
    }
    if n == 0 {
        return Ok(0);
    }
    let adj: Vec<u32> = graph
        .vertices()
        .map(|v| graph.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    let full = (1u32 << n) - 1;
    let mut tw = vec![0u8; 1 << n];
    for set in 1..=full {
        let mut best = u8::MAX;
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let without = set & !(1 << v);
            let q = eliminated_neighbourhood(&adj, without, v);
            best = best.min(tw[without as usize].max(q));
        }
        tw[set as usize] = best;
    }
    Ok(tw[full as usize] as usize)
}

fn eliminated_neighbourhood(adj: &[u32], eliminated: u32, v: usize) -> u8 {
    let mut comp = 1u32 << v;
    loop {
        let reach = comp.iter_bits().fold(0u32, |m, w| m | adj[w]);
        let grown = comp | (reach & eliminated);
        if grown == comp {
            return (reach & !eliminated & !(1 << v)).count_ones() as u8;
        }
        comp = grown;
    }
}

trait BitIter {
    fn iter_bits(self) -> impl Iterator<Item = usize>;
}

impl BitIter for u32 {
    fn iter_bits(self) -> impl Iterator<Item = usize> {
        let mut rest = self;
        std::iter::from_fn(move || {
            (rest != 0).then(|| {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                v
            })
        })
    }
}
