//! Graph families and constructions, each with the certificate it promises.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{parse_numbers, Graph};

fn param(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg()))
    }
}

pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path edges are valid")
}

pub fn complete(n: usize) -> Graph {
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).expect("valid")
}

/// Vertex 0 joined to `leaves` isolated vertices.
pub fn star(leaves: usize) -> Graph {
    Graph::new(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("valid")
}

/// The cycle on `0..b`, vertex `i` adjacent to `i ± 1 mod b`.
pub fn cycle(b: usize) -> Result<Graph> {
    param(b >= 3, || format!("cycle length must be at least 3, got {b}"))?;
    Graph::new(b, (0..b).map(|i| (i, (i + 1) % b)))
}

/// The fan on `n` vertices: vertex 0 is universal, `1..n` is a path in index
/// order.
pub fn fan(n: usize) -> Result<Graph> {
    param(n >= 2, || format!("fan needs at least 2 vertices, got {n}"))?;
    universal_path(n, 2)
}

/// Hub 0 joined to every vertex of the cycle on `1..n`.
pub fn wheel(n: usize) -> Result<Graph> {
    param(n >= 4, || format!("wheel needs at least 4 vertices, got {n}"))?;
    let rim = n - 1;
    let spokes = (1..n).map(|v| (0, v));
    let cycle = (0..rim).map(|i| (1 + i, 1 + (i + 1) % rim));
    Graph::new(n, spokes.chain(cycle))
}

/// The `rows × cols` grid; vertex `(i, j)` has index `i * cols + j`.
pub fn grid(rows: usize, cols: usize) -> Result<Graph> {
    param(rows >= 1 && cols >= 1, || format!("grid dimensions must be positive, got {rows}x{cols}"))?;
    let id = |i: usize, j: usize| i * cols + j;
    let mut edges = Vec::new();
    for i in 0..rows {
        for j in 0..cols {
            if j + 1 < cols {
                edges.push((id(i, j), id(i, j + 1)));
            }
            if i + 1 < rows {
                edges.push((id(i, j), id(i + 1, j)));
            }
        }
    }
    Graph::new(rows * cols, edges)
}

/// A path on `n − 1` vertices plus `k − 1` universal vertices.
///
/// Universal vertices take indices `0..k−1`, path vertices follow in order,
/// so `universal_path(n, 2)` is index-identical to `fan(n)`.
pub fn universal_path(n: usize, k: usize) -> Result<Graph> {
    param(n >= 2 && k >= 2, || format!("universal_path needs n >= 2 and k >= 2, got n={n}, k={k}"))?;
    let hubs = k - 1;
    let total = n - 1 + hubs;
    let mut edges = Vec::new();
    for h in 0..hubs {
        for v in h + 1..total {
            edges.push((h, v));
        }
    }
    for p in hubs + 1..total {
        edges.push((p - 1, p));
    }
    Graph::new(total, edges)
}

/// Parameters of a chain of `g` cycles of length `b` whose consecutive cut
/// vertices are `k` steps apart.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CycleChainSpec {
    g: usize,
    b: usize,
    k: usize,
}

impl CycleChainSpec {
    pub fn new(g: usize, b: usize, k: usize) -> Result<Self> {
        param(g >= 3, || format!("cycle chain needs at least 3 blocks, got {g}"))?;
        param(b >= 3, || format!("cycle length must be at least 3, got {b}"))?;
        param(k >= 1 && k < b, || format!("cut-vertex distance must satisfy 1 <= k < b, got k={k}, b={b}"))?;
        Ok(CycleChainSpec { g, b, k })
    }

    pub fn blocks(&self) -> usize {
        self.g
    }

    pub fn cycle_len(&self) -> usize {
        self.b
    }

    pub fn step(&self) -> usize {
        self.k
    }

    pub fn vertex_count(&self) -> usize {
        self.g * (self.b - 1) + 1
    }
}

/// A constructed cycle chain with its block structure.
#[derive(Clone, Debug)]
pub struct CycleChain {
    pub graph: Graph,
    /// Block `i` in cycle order, starting at its entry vertex.
    pub blocks: Vec<Vec<usize>>,
    /// `cut_vertices[i]` is shared by blocks `i` and `i + 1`.
    pub cut_vertices: Vec<usize>,
}

/// Glues `g` cycles into a path of blocks.
///
/// Vertex 0 is the entry of block 0. Within each block, cycle position 0 is
/// the entry, positions run clockwise, and position `k` is the exit, which
/// becomes the entry of the next block. New vertices are numbered in order of
/// creation.
pub fn cycle_chain(spec: CycleChainSpec) -> CycleChain {
    let CycleChainSpec { g, b, k } = spec;
    let mut next = 1;
    let mut entry = 0;
    let mut edges = Vec::with_capacity(g * b);
    let mut blocks = Vec::with_capacity(g);
    let mut cut_vertices = Vec::with_capacity(g - 1);
    for i in 0..g {
        let mut ring = Vec::with_capacity(b);
        ring.push(entry);
        ring.extend(next..next + b - 1);
        next += b - 1;
        for p in 0..b {
            edges.push((ring[p], ring[(p + 1) % b]));
        }
        entry = ring[k];
        if i + 1 < g {
            cut_vertices.push(entry);
        }
        blocks.push(ring);
    }
    let graph = Graph::new(next, edges).expect("cycle chain edges are valid");
    CycleChain { graph, blocks, cut_vertices }
}

/// A graph of genus `g` whose gonality is `⌊(g + 3)/2⌋`.
///
/// For `g ≤ 2` this is the `(g+1) × 2` grid oriented with the longer side
/// first; otherwise the chain of `g` cycles of length `max(3, ⌊(g+3)/2⌋)`
/// with adjacent cut vertices.
pub fn genus_witness(g: usize) -> Graph {
    if g <= 2 {
        let long = (g + 1).max(2);
        let short = (g + 1).min(2);
        grid(long, short).expect("positive dimensions")
    } else {
        let b = ((g + 3) / 2).max(3);
        cycle_chain(CycleChainSpec::new(g, b, 1).expect("valid for g >= 3")).graph
    }
}

/// An injective map from pattern vertices to host vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgraphCertificate {
    pub mapping: Vec<usize>,
}

impl SubgraphCertificate {
    /// Header line with the pattern size, then one `pattern host` line per
    /// vertex.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.mapping.len());
        for (p, h) in self.mapping.iter().enumerate() {
            out.push_str(&format!("{p} {h}\n"));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (line, header) = lines.next().ok_or(Error::Parse { line: 0, msg: "missing header".into() })?;
        let [k] = parse_numbers::<usize>(header, line)?[..] else {
            return Err(Error::Parse { line, msg: "header must be the pattern size".into() });
        };
        let mut mapping = vec![None; k];
        for (line, l) in lines {
            let [p, h] = parse_numbers::<usize>(l, line)?[..] else {
                return Err(Error::Parse { line, msg: "mapping line must be \"p h\"".into() });
            };
            let slot = mapping
                .get_mut(p)
                .ok_or(Error::Parse { line, msg: format!("pattern vertex {p} out of range") })?;
            if slot.replace(h).is_some() {
                return Err(Error::Parse { line, msg: format!("pattern vertex {p} mapped twice") });
            }
        }
        let mapping = mapping
            .into_iter()
            .enumerate()
            .map(|(p, h)| h.ok_or(Error::Parse { line: 0, msg: format!("pattern vertex {p} unmapped") }))
            .collect::<Result<_>>()?;
        Ok(SubgraphCertificate { mapping })
    }
}

/// True iff the certificate is an injective, edge-preserving map of
/// `pattern` into `host`.
pub fn verify_subgraph(cert: &SubgraphCertificate, pattern: &Graph, host: &Graph) -> bool {
    if cert.mapping.len() != pattern.n() {
        return false;
    }
    let mut used = vec![false; host.n()];
    for &h in &cert.mapping {
        if h >= host.n() || std::mem::replace(&mut used[h], true) {
            return false;
        }
    }
    pattern
        .edges()
        .iter()
        .all(|&(u, v)| host.has_edge(cert.mapping[u], cert.mapping[v]))
}

/// The chain of `2t₀−3` cycles of length `2t₀` at step `t₀−1`, drawn inside
/// the 3-row grid of width `(2t₀−3)(t₀−1)+1`.
#[derive(Clone, Debug)]
pub struct GridEmbedding {
    pub host: Graph,
    pub pattern: CycleChain,
    pub certificate: SubgraphCertificate,
}

/// Lays the cycle chain along the middle row of a 3-row grid.
///
/// Block `i` spans columns `i(t₀−1)..=(i+1)(t₀−1)`: its entry-to-exit arc runs
/// along the middle row and the remaining `t₀` vertices return along the top
/// row for even `i` and the bottom row for odd `i`, so neighbouring blocks
/// only meet at their shared cut vertex.
pub fn grid_embedding(t0: usize) -> Result<GridEmbedding> {
    param(t0 >= 4, || format!("grid embedding needs t0 >= 4, got {t0}"))?;
    let g = 2 * t0 - 3;
    let b = 2 * t0;
    let k = t0 - 1;
    let cols = g * k + 1;
    let host = grid(3, cols)?;
    let pattern = cycle_chain(CycleChainSpec::new(g, b, k)?);
    let cell = |row: usize, col: usize| row * cols + col;
    let mut mapping = vec![usize::MAX; pattern.graph.n()];
    for (i, ring) in pattern.blocks.iter().enumerate() {
        let start = i * k;
        let end = start + k;
        let arc_row = if i % 2 == 0 { 0 } else { 2 };
        for (p, &v) in ring.iter().enumerate() {
            mapping[v] = if p <= k { cell(1, start + p) } else { cell(arc_row, end + k + 1 - p) };
        }
    }
    debug_assert!(mapping.iter().all(|&h| h != usize::MAX));
    Ok(GridEmbedding { host, pattern, certificate: SubgraphCertificate { mapping } })
}

/// Replaces every cut vertex lying in exactly two blocks by two vertices, one
/// per block, joined by a bridge.
///
/// The block whose smallest other vertex is lower keeps the original index;
/// the other side gets a fresh index, allocated in increasing order of the
/// cut vertex. Cut vertices in three or more blocks are left alone.
pub fn bridge_split(graph: &Graph) -> Result<Graph> {
    graph.require_connected()?;
    let blocks = graph.blocks();
    let n = graph.n();
    let mut membership: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (b, block) in blocks.iter().enumerate() {
        for &v in block {
            membership[v].push(b);
        }
    }
    // (cut vertex, block moved to the copy) -> copy index
    let mut copies: HashMap<(usize, usize), usize> = HashMap::new();
    let mut next = n;
    let mut bridges = Vec::new();
    for (c, owners) in membership.iter().enumerate() {
        let [b0, b1] = owners[..] else { continue };
        let smallest_other = |b: usize| blocks[b].iter().copied().filter(|&v| v != c).min();
        let moved = if smallest_other(b0) <= smallest_other(b1) { b1 } else { b0 };
        copies.insert((c, moved), next);
        bridges.push((c, next));
        next += 1;
    }
    let mut edges = bridges;
    for &(u, v) in graph.edges() {
        let block = membership[u]
            .iter()
            .copied()
            .find(|b| membership[v].contains(b))
            .expect("every edge lies in a block");
        let map = |x: usize| copies.get(&(x, block)).copied().unwrap_or(x);
        edges.push((map(u), map(v)));
    }
    Graph::new(next, edges)
}

/// All connected graphs on `n ≤ 6` vertices, one per isomorphism class.
///
/// A labelled graph is kept iff its edge mask is the smallest among all
/// relabellings; results are ordered by that canonical mask.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > 6 {
        return Err(Error::TooLarge { found: n, limit: 6 });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut pair_index = vec![vec![0usize; n]; n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        pair_index[u][v] = i;
        pair_index[v][u] = i;
    }
    let perms = permutations(n);
    let mut out = Vec::new();
    'masks: for mask in 0u32..(1 << pairs.len()) {
        let edges: Vec<_> = (0..pairs.len()).filter(|&i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
        let graph = Graph::new(n, edges.iter().copied()).expect("valid");
        if !graph.is_connected() {
            continue;
        }
        for perm in &perms {
            let image = edges.iter().fold(0u32, |acc, &(u, v)| acc | 1 << pair_index[perm[u]][perm[v]]);
            if image < mask {
                continue 'masks;
            }
        }
        out.push(graph);
    }
    Ok(out)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                extend(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(g: usize, b: usize, k: usize) -> CycleChain {
        cycle_chain(CycleChainSpec::new(g, b, k).unwrap())
    }

    #[test]
    fn fan_shapes() {
        let f4 = fan(4).unwrap();
        assert_eq!((f4.n(), f4.edge_count()), (4, 5));
        assert!(f4.is_universal(0));
        assert_eq!(fan(2).unwrap().edges(), &[(0, 1)]);
        assert_eq!(fan(5).unwrap().genus(), Ok(3));
        assert!(fan(1).is_err());
    }

    #[test]
    fn grid_shapes() {
        assert_eq!(grid(2, 2).unwrap(), cycle(4).unwrap().induced_subgraph(&[0, 1, 3, 2]).unwrap().0);
        let g33 = grid(3, 3).unwrap();
        assert_eq!((g33.n(), g33.edge_count()), (9, 12));
        assert_eq!(grid(2, 3).unwrap().genus(), Ok(2));
    }

    #[test]
    fn cycle_shapes() {
        assert_eq!(cycle(3).unwrap(), complete(3));
        assert_eq!(cycle(4).unwrap().edge_count(), 4);
        let c8 = cycle(8).unwrap();
        assert_eq!((c8.n(), c8.edge_count()), (8, 8));
        assert!(cycle(2).is_err());
    }

    #[test]
    fn cycle_chain_shapes() {
        let c = chain(3, 4, 2);
        assert_eq!((c.graph.n(), c.graph.edge_count()), (10, 12));
        assert_eq!(c.graph.genus(), Ok(3));
        assert_eq!(c.cut_vertices, c.graph.cut_vertices());
        let c = chain(5, 8, 3);
        assert_eq!((c.graph.n(), c.graph.edge_count()), (36, 40));
        assert!(CycleChainSpec::new(2, 4, 2).is_err());
        assert!(CycleChainSpec::new(3, 4, 4).is_err());
        assert!(CycleChainSpec::new(3, 2, 1).is_err());
    }

    #[test]
    fn cut_vertices_at_distance_k() {
        for (g, b, k) in [(3, 4, 2), (4, 5, 2), (3, 7, 3), (5, 8, 3)] {
            let c = chain(g, b, k);
            for i in 1..c.cut_vertices.len() {
                let d = c.graph.distances_from(c.cut_vertices[i - 1])[c.cut_vertices[i]].unwrap();
                assert_eq!(d, k.min(b - k));
            }
            assert_eq!(c.graph.blocks().len(), g);
        }
    }

    #[test]
    fn universal_path_shapes() {
        assert_eq!(universal_path(16, 2).unwrap(), fan(16).unwrap());
        let g = universal_path(5, 3).unwrap();
        assert_eq!(g.n(), 6);
        assert!(g.is_universal(0) && g.is_universal(1));
        assert_eq!(universal_path(9, 3).unwrap().min_degree(), 3);
        assert!(universal_path(5, 1).is_err());
    }

    #[test]
    fn genus_witness_shapes() {
        assert_eq!(genus_witness(1), grid(2, 2).unwrap());
        assert_eq!(genus_witness(3), chain(3, 3, 1).graph);
        assert_eq!(genus_witness(5), chain(5, 4, 1).graph);
        for g in 0..=8 {
            assert_eq!(genus_witness(g).genus(), Ok(g as i64));
        }
    }

    #[test]
    fn embedding_certificates() {
        let e = grid_embedding(4).unwrap();
        assert_eq!((e.host.n(), e.pattern.graph.n()), (48, 36));
        assert!(verify_subgraph(&e.certificate, &e.pattern.graph, &e.host));
        let e = grid_embedding(5).unwrap();
        assert_eq!(e.host.n(), 3 * 29);
        assert!(verify_subgraph(&e.certificate, &e.pattern.graph, &e.host));
        assert!(grid_embedding(3).is_err());
    }

    #[test]
    fn verify_subgraph_rejects() {
        let c4 = cycle(4).unwrap();
        let id = SubgraphCertificate { mapping: vec![0, 1, 2, 3] };
        assert!(verify_subgraph(&id, &c4, &c4));
        let collapse = SubgraphCertificate { mapping: vec![0, 1, 2, 2] };
        assert!(!verify_subgraph(&collapse, &c4, &c4));
        let non_edge = SubgraphCertificate { mapping: vec![0, 2, 1, 3] };
        assert!(!verify_subgraph(&non_edge, &c4, &c4));
        let text = id.to_text();
        assert_eq!(SubgraphCertificate::from_text(&text).unwrap(), id);
    }

    #[test]
    fn bridge_split_counts() {
        let split = bridge_split(&chain(3, 4, 2).graph).unwrap();
        assert_eq!((split.n(), split.edge_count()), (12, 14));
        assert!(split.is_connected());
        assert_eq!(split.genus(), Ok(3));
        let c4 = cycle(4).unwrap();
        assert_eq!(bridge_split(&c4).unwrap(), c4);
        // a star's centre lies in three blocks and is kept
        assert_eq!(bridge_split(&star(3)).unwrap(), star(3));
        assert!(bridge_split(&Graph::empty(2)).is_err());
    }

    #[test]
    fn small_graph_catalogue() {
        let counts: Vec<usize> = (1..=5).map(|n| connected_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21]);
    }
}
