//! Simple undirected graphs on dense vertex indices.
//!
//! Vertices are `0..n`. Every divisor, firing script and matrix in the crate
//! is indexed in this order, so canonical forms are reproducible.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A finite simple undirected graph.
///
/// Edges are stored normalized (`u < v`) and sorted; adjacency lists are
/// sorted and symmetric.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse to one.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            set.insert((u.min(v), u.max(v)));
        }
        let edges: Vec<_> = set.into_iter().collect();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges, adj })
    }

    pub fn empty(n: usize) -> Self {
        Graph { n, edges: Vec::new(), adj: vec![Vec::new(); n] }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// δ(G); zero for the empty graph.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::InvalidVertex { vertex: v, n: self.n })
        }
    }

    /// True iff `v` is adjacent to every other vertex.
    pub fn is_universal(&self, v: usize) -> bool {
        v < self.n && self.degree(v) + 1 == self.n
    }

    /// Connectivity of the graph with the vertices in `removed` deleted.
    /// The graph with no remaining vertices counts as connected.
    pub fn is_connected_without(&self, removed: &VertexSet) -> bool {
        let Some(start) = (0..self.n).find(|&v| !removed.contains(v)) else {
            return true;
        };
        let mut seen = removed.clone();
        seen.insert(start);
        let mut stack = vec![start];
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if !seen.contains(w) {
                    seen.insert(w);
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached + removed.len() == self.n
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_without(&VertexSet::new(self.n))
    }

    pub fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Breadth-first distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = std::collections::VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// The Laplacian Q = degree matrix − adjacency matrix.
    pub fn laplacian(&self) -> IntMatrix {
        let mut q = IntMatrix::zeros(self.n);
        for v in 0..self.n {
            q.set(v, v, self.degree(v) as i64);
        }
        for &(u, v) in &self.edges {
            q.set(u, v, -1);
            q.set(v, u, -1);
        }
        q
    }

    /// |E| − |V| + 1, defined for connected graphs only.
    pub fn genus(&self) -> Result<i64> {
        self.require_connected()?;
        Ok(self.edge_count() as i64 - self.n as i64 + 1)
    }

    /// `|V| > k` and deleting any fewer than `k` vertices leaves the graph
    /// connected. Exhaustive over deletion sets.
    pub fn is_k_connected(&self, k: usize) -> bool {
        if self.n <= k {
            return false;
        }
        let mut removed = VertexSet::new(self.n);
        (0..k).all(|size| self.all_deletions_connected(&mut removed, 0, size))
    }

    fn all_deletions_connected(&self, removed: &mut VertexSet, from: usize, left: usize) -> bool {
        if left == 0 {
            return self.is_connected_without(removed);
        }
        for v in from..self.n {
            removed.insert(v);
            let ok = self.all_deletions_connected(removed, v + 1, left - 1);
            removed.remove(v);
            if !ok {
                return false;
            }
        }
        true
    }

    /// Induced subgraph on `vertices` (in the given order). Returns the
    /// subgraph and, for each of its vertices, the original index.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            self.check_vertex(v)?;
            if index[v] != usize::MAX {
                return Err(Error::InvalidParameter(format!("vertex {v} listed twice")));
            }
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]));
        Ok((Graph::new(vertices.len(), edges)?, vertices.to_vec()))
    }

    /// Biconnected components (blocks), each as a sorted vertex list.
    /// Isolated vertices form no block. Blocks are sorted by their vertex lists.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut state = BlockState {
            disc: vec![usize::MAX; self.n],
            low: vec![0; self.n],
            time: 0,
            edge_stack: Vec::new(),
            blocks: Vec::new(),
        };
        for root in 0..self.n {
            if state.disc[root] == usize::MAX {
                self.block_dfs(root, usize::MAX, &mut state);
            }
        }
        let mut blocks = state.blocks;
        blocks.sort();
        blocks
    }

    fn block_dfs(&self, u: usize, parent: usize, st: &mut BlockState) {
        st.disc[u] = st.time;
        st.low[u] = st.time;
        st.time += 1;
        for &w in &self.adj[u] {
            if st.disc[w] == usize::MAX {
                st.edge_stack.push((u, w));
                self.block_dfs(w, u, st);
                st.low[u] = st.low[u].min(st.low[w]);
                if st.low[w] >= st.disc[u] {
                    let mut block = BTreeSet::new();
                    while let Some((a, b)) = st.edge_stack.pop() {
                        block.insert(a);
                        block.insert(b);
                        if (a, b) == (u, w) {
                            break;
                        }
                    }
                    st.blocks.push(block.into_iter().collect());
                }
            } else if w != parent && st.disc[w] < st.disc[u] {
                st.edge_stack.push((u, w));
                st.low[u] = st.low[u].min(st.disc[w]);
            }
        }
    }

    /// Vertices whose deletion increases the number of components, ascending.
    pub fn cut_vertices(&self) -> Vec<usize> {
        let mut count = vec![0usize; self.n];
        for block in self.blocks() {
            for v in block {
                count[v] += 1;
            }
        }
        (0..self.n).filter(|&v| count[v] >= 2).collect()
    }

    /// Serializes to the text format: `n m` then one `u v` line per edge.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Parses the text format. Lines starting with `#` and blank lines are
    /// ignored.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (line, header) = lines.next().ok_or(Error::Parse { line: 0, msg: "missing header".into() })?;
        let header = parse_numbers::<usize>(header, line)?;
        let [n, m] = header[..] else {
            return Err(Error::Parse { line, msg: "header must be \"n m\"".into() });
        };
        let mut edges = Vec::with_capacity(m);
        for (line, l) in lines {
            let nums = parse_numbers::<usize>(l, line)?;
            let [u, v] = nums[..] else {
                return Err(Error::Parse { line, msg: "edge line must be \"u v\"".into() });
            };
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(Error::Parse {
                line: 1,
                msg: format!("header declares {m} edges, found {}", edges.len()),
            });
        }
        Graph::new(n, edges)
    }
}

struct BlockState {
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    edge_stack: Vec<(usize, usize)>,
    blocks: Vec<Vec<usize>>,
}

pub(crate) fn parse_numbers<T: std::str::FromStr>(line: &str, line_no: usize) -> Result<Vec<T>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<T>()
                .map_err(|_| Error::Parse { line: line_no, msg: format!("invalid number {tok:?}") })
        })
        .collect()
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// A square integer matrix in row-major order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        IntMatrix { n, data: vec![0; n * n] }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        IntMatrix { n, data: rows.concat() }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.n + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: i64) {
        self.data[r * self.n + c] = value;
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.n.max(1)).take(self.n).map(<[i64]>::to_vec).collect()
    }

    pub fn row_sums(&self) -> Vec<i64> {
        (0..self.n).map(|r| (0..self.n).map(|c| self.get(r, c)).sum()).collect()
    }

    pub fn column_sums(&self) -> Vec<i64> {
        (0..self.n).map(|c| (0..self.n).map(|r| self.get(r, c)).sum()).collect()
    }

    pub fn mul_vec(&self, x: &[i64]) -> Vec<i64> {
        assert_eq!(x.len(), self.n);
        (0..self.n)
            .map(|r| (0..self.n).map(|c| self.get(r, c) * x[c]).sum())
            .collect()
    }
}

/// A subset of the vertices `0..n`, stored as a membership mask.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    mask: Vec<bool>,
    len: usize,
}

impl VertexSet {
    pub fn new(n: usize) -> Self {
        VertexSet { mask: vec![false; n], len: 0 }
    }

    pub fn full(n: usize) -> Self {
        VertexSet { mask: vec![true; n], len: n }
    }

    /// Panics if an index is `>= n`.
    pub fn from_indices(n: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut set = VertexSet::new(n);
        for v in indices {
            set.insert(v);
        }
        set
    }

    /// Universe size.
    pub fn universe(&self) -> usize {
        self.mask.len()
    }

    /// Number of members.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_full(&self) -> bool {
        self.len == self.mask.len()
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.mask.get(v).copied().unwrap_or(false)
    }

    pub fn insert(&mut self, v: usize) -> bool {
        let fresh = !self.mask[v];
        if fresh {
            self.mask[v] = true;
            self.len += 1;
        }
        fresh
    }

    pub fn remove(&mut self, v: usize) -> bool {
        let present = self.mask[v];
        if present {
            self.mask[v] = false;
            self.len -= 1;
        }
        present
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.mask.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i)
    }

    pub fn complement(&self) -> VertexSet {
        VertexSet {
            mask: self.mask.iter().map(|b| !b).collect(),
            len: self.mask.len() - self.len,
        }
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Graph {
        Graph::new(3, [(0, 1), (1, 2)]).unwrap()
    }

    fn c4() -> Graph {
        Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn build_rejects_bad_edges() {
        assert_eq!(Graph::new(2, [(0, 0)]), Err(Error::SelfLoop(0)));
        assert!(matches!(Graph::new(2, [(0, 2)]), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn build_deduplicates() {
        let g = Graph::new(3, [(0, 1), (1, 0), (1, 2), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.neighbors(1), &[0, 2]);
        assert_eq!(path3(), g);
        assert_eq!(c4().edge_count(), 4);
    }

    #[test]
    fn laplacian_examples() {
        assert_eq!(
            path3().laplacian(),
            IntMatrix::from_rows(&[vec![1, -1, 0], vec![-1, 2, -1], vec![0, -1, 1]])
        );
        let q = c4().laplacian();
        for v in 0..4 {
            assert_eq!(q.get(v, v), 2);
            assert_eq!(q.get(v, (v + 1) % 4), -1);
            assert_eq!(q.get(v, (v + 2) % 4), 0);
        }
        assert_eq!(Graph::empty(2).laplacian(), IntMatrix::zeros(2));
    }

    #[test]
    fn genus_examples() {
        assert_eq!(path3().genus(), Ok(0));
        assert_eq!(c4().genus(), Ok(1));
        assert_eq!(Graph::empty(2).genus(), Err(Error::Disconnected));
    }

    #[test]
    fn k_connectivity() {
        assert!(path3().is_k_connected(1));
        assert!(!path3().is_k_connected(2));
        assert!(c4().is_k_connected(2));
        assert!(!c4().is_k_connected(3));
        // |V| > k is required
        let k2 = Graph::new(2, [(0, 1)]).unwrap();
        assert!(k2.is_k_connected(1));
        assert!(!k2.is_k_connected(2));
    }

    #[test]
    fn blocks_of_two_triangles() {
        let g = Graph::new(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        assert_eq!(g.blocks(), vec![vec![0, 1, 2], vec![2, 3, 4]]);
        assert_eq!(g.cut_vertices(), vec![2]);
        assert_eq!(path3().blocks(), vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(path3().cut_vertices(), vec![1]);
        assert!(c4().cut_vertices().is_empty());
    }

    #[test]
    fn text_round_trip_with_comments() {
        let text = "# a 4-cycle\n4 4\n0 1\n1 2\n# middle\n2 3\n3 0\n";
        let g = Graph::from_text(text).unwrap();
        assert_eq!(g, c4());
        assert_eq!(Graph::from_text(&g.to_text()).unwrap(), g);
        assert!(matches!(Graph::from_text("3 2\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(Graph::from_text("3 1\n0 x\n"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn induced_subgraph_relabels() {
        let (h, map) = c4().induced_subgraph(&[3, 0, 1]).unwrap();
        assert_eq!(map, vec![3, 0, 1]);
        assert_eq!(h.edges(), &[(0, 1), (1, 2)]);
    }
}
