//! Simple graphs, weighted oriented graphs, matchings and the forest
//! notions (leaves, distant configurations, strong edges) used by the
//! classifier.
//!
//! Vertices are `0..n` for a fixed ambient `n <= 64`. Deleting vertices
//! keeps the ambient numbering, so monomials built from a subgraph live in
//! the same polynomial ring as those of the original graph.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::MAX_VARS;

/// A set of vertices packed into a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// `{0, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(v)
        })
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Normalizes an unordered edge to `(min, max)`.
pub fn edge_key(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// A set of pairwise disjoint edges, each stored as `(min, max)`, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Matching(Vec<(usize, usize)>);

impl Matching {
    /// Builds a matching, rejecting edges that share a vertex.
    pub fn new(edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut seen = VertexSet::EMPTY;
        let mut out: Vec<(usize, usize)> = Vec::new();
        for (a, b) in edges {
            if a == b || seen.contains(a) || seen.contains(b) {
                return Err(Error::Precondition(format!(
                    "edge {{{a}, {b}}} overlaps another matching edge"
                )));
            }
            seen.insert(a);
            seen.insert(b);
            out.push(edge_key(a, b));
        }
        out.sort_unstable();
        Ok(Matching(out))
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `V(M)`.
    pub fn vertices(&self) -> VertexSet {
        self.0.iter().flat_map(|&(a, b)| [a, b]).collect()
    }

    pub fn contains_edge(&self, a: usize, b: usize) -> bool {
        self.0.binary_search(&edge_key(a, b)).is_ok()
    }

    /// The matching edge covering `v`, if any.
    pub fn edge_at(&self, v: usize) -> Option<(usize, usize)> {
        self.0.iter().copied().find(|&(a, b)| a == v || b == v)
    }
}

/// A distant configuration `(a_1, ..., a_t | b, c)`: leaves `a_i` hanging
/// off `b`, and an edge `{b, c}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Configuration {
    pub leaves: Vec<usize>,
    pub b: usize,
    pub c: usize,
}

impl Configuration {
    pub fn t(&self) -> usize {
        self.leaves.len()
    }
}

/// Result of looking for a place to apply the recursive classification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DistantConfiguration {
    IsolatedEdge(usize, usize),
    Config(Configuration),
    NoEdges,
}

/// An undirected simple graph on a subset of the ambient vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    vertices: VertexSet,
    adj: Vec<u64>,
}

impl SimpleGraph {
    /// Edgeless graph on `0..n`.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VARS {
            return Err(Error::TooManyVariables {
                max: MAX_VARS,
                found: n,
            });
        }
        Ok(SimpleGraph {
            n,
            vertices: VertexSet::full(n),
            adj: vec![0; n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        if a == b {
            return Err(Error::InvalidGraph(format!("loop at vertex {a}")));
        }
        for v in [a, b] {
            if !self.vertices.contains(v) {
                return Err(Error::UnknownVertex(v));
            }
        }
        if self.has_edge(a, b) {
            return Err(Error::InvalidGraph(format!(
                "duplicate edge {{{a}, {b}}}"
            )));
        }
        self.adj[a] |= 1 << b;
        self.adj[b] |= 1 << a;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        self.vertices
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && self.adj[a] >> b & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.degree(v) == 1
    }

    /// Edges as `(min, max)` pairs in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in self.vertices.iter() {
            let higher = self.adj[a] & !((2u64 << a) - 1);
            for b in VertexSet(higher).iter() {
                out.push((a, b));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.iter().map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Induced subgraph on `keep`, which must be a subset of the vertices.
    pub fn induced(&self, keep: VertexSet) -> Result<SimpleGraph> {
        if !keep.is_subset(self.vertices) {
            let v = keep.difference(self.vertices).first().unwrap_or(0);
            return Err(Error::UnknownVertex(v));
        }
        let adj = (0..self.n)
            .map(|v| {
                if keep.contains(v) {
                    self.adj[v] & keep.0
                } else {
                    0
                }
            })
            .collect();
        Ok(SimpleGraph {
            n: self.n,
            vertices: keep,
            adj,
        })
    }

    /// `G \ W` for a vertex set `W`.
    pub fn delete(&self, remove: VertexSet) -> Result<SimpleGraph> {
        if !remove.is_subset(self.vertices) {
            let v = remove.difference(self.vertices).first().unwrap_or(0);
            return Err(Error::UnknownVertex(v));
        }
        self.induced(self.vertices.difference(remove))
    }

    /// `G` with one edge removed; vertices are kept.
    pub fn remove_edge(&self, a: usize, b: usize) -> Result<SimpleGraph> {
        if !self.has_edge(a, b) {
            return Err(Error::NotAnEdge(a, b));
        }
        let mut g = self.clone();
        g.adj[a] &= !(1 << b);
        g.adj[b] &= !(1 << a);
        Ok(g)
    }

    pub fn is_forest(&self) -> bool {
        // A graph is acyclic iff every component has one fewer edge than
        // it has vertices.
        let mut seen = VertexSet::EMPTY;
        let mut components = 0;
        for start in self.vertices.iter() {
            if seen.contains(start) {
                continue;
            }
            components += 1;
            let mut frontier = VertexSet::singleton(start);
            seen.insert(start);
            while let Some(v) = frontier.first() {
                frontier.remove(v);
                let fresh = self.neighbors(v).difference(seen);
                seen = seen.union(fresh);
                frontier = frontier.union(fresh);
            }
        }
        self.edge_count() + components == self.vertices.len()
    }

    /// All `k`-matchings, each exactly once, in lexicographic edge order.
    pub fn matchings(&self, k: usize) -> Vec<Matching> {
        let edges = self.edges();
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(k);
        fn rec(
            edges: &[(usize, usize)],
            start: usize,
            used: u64,
            k: usize,
            current: &mut Vec<(usize, usize)>,
            out: &mut Vec<Matching>,
        ) {
            if current.len() == k {
                out.push(Matching(current.clone()));
                return;
            }
            let need = k - current.len();
            for idx in start..edges.len() {
                if edges.len() - idx < need {
                    break;
                }
                let (a, b) = edges[idx];
                let mask = 1u64 << a | 1u64 << b;
                if used & mask != 0 {
                    continue;
                }
                current.push((a, b));
                rec(edges, idx + 1, used | mask, k, current, out);
                current.pop();
            }
        }
        rec(&edges, 0, 0, k, &mut current, &mut out);
        out
    }

    /// Matching number, using the leaf-pruning path on forests and the
    /// exact search otherwise.
    pub fn matching_number(&self) -> usize {
        if self.is_forest() {
            self.matching_number_forest()
                .expect("forest fast path applies to forests")
        } else {
            self.matching_number_exact()
        }
    }

    /// Greedy leaf matching. Exact on forests; `None` if some step finds no
    /// leaf while edges remain (the graph has a cycle).
    pub fn matching_number_forest(&self) -> Option<usize> {
        let mut adj = self.adj.clone();
        let mut stack: Vec<usize> = self
            .vertices
            .iter()
            .filter(|&v| adj[v].count_ones() == 1)
            .collect();
        let mut size = 0;
        fn drop_vertex(adj: &mut [u64], v: usize, stack: &mut Vec<usize>) {
            for u in VertexSet(adj[v]).iter() {
                adj[u] &= !(1 << v);
                if adj[u].count_ones() == 1 {
                    stack.push(u);
                }
            }
            adj[v] = 0;
        }
        while let Some(leaf) = stack.pop() {
            if adj[leaf].count_ones() != 1 {
                continue;
            }
            let partner = adj[leaf].trailing_zeros() as usize;
            size += 1;
            drop_vertex(&mut adj, leaf, &mut stack);
            drop_vertex(&mut adj, partner, &mut stack);
        }
        adj.iter().all(|&a| a == 0).then_some(size)
    }

    /// Exact matching number by branching on the lowest non-isolated
    /// vertex, memoized on the remaining vertex set.
    pub fn matching_number_exact(&self) -> usize {
        let mut memo: HashMap<u64, usize> = HashMap::new();
        fn rec(adj: &[u64], alive: u64, memo: &mut HashMap<u64, usize>) -> usize {
            // Drop isolated vertices so equivalent states share a key.
            let mut live = 0u64;
            for v in VertexSet(alive).iter() {
                if adj[v] & alive != 0 {
                    live |= 1 << v;
                }
            }
            if live.count_ones() < 2 {
                return 0;
            }
            if let Some(&r) = memo.get(&live) {
                return r;
            }
            let v = live.trailing_zeros() as usize;
            let mut best = rec(adj, live & !(1 << v), memo);
            let bound = live.count_ones() as usize / 2;
            for u in VertexSet(adj[v] & live).iter() {
                if best == bound {
                    break;
                }
                let r = 1 + rec(adj, live & !(1 << v | 1 << u), memo);
                best = best.max(r);
            }
            memo.insert(live, best);
            best
        }
        rec(&self.adj, self.vertices.0, &mut memo)
    }

    /// Whether `{a, b}` lies in every maximum matching.
    pub fn is_strong_edge(&self, a: usize, b: usize) -> Result<bool> {
        let without = self.remove_edge(a, b)?;
        Ok(without.matching_number() + 1 == self.matching_number())
    }

    /// Leaf neighbours and non-leaf neighbours of `b`, both ascending.
    fn split_neighbors(&self, b: usize) -> (Vec<usize>, Vec<usize>) {
        self.neighbors(b).iter().partition(|&u| self.is_leaf(u))
    }

    /// The deterministic distant configuration used by the classifier:
    /// the least isolated edge if any, else the configuration at the
    /// lowest vertex `b` adjacent to a leaf with at most one non-leaf
    /// neighbour. When every neighbour of `b` is a leaf, the highest one
    /// becomes `c`.
    pub fn find_distant_configuration(&self) -> Result<DistantConfiguration> {
        let edges = self.edges();
        if edges.is_empty() {
            return Ok(DistantConfiguration::NoEdges);
        }
        if let Some(&(a, b)) = edges
            .iter()
            .find(|&&(a, b)| self.is_leaf(a) && self.is_leaf(b))
        {
            return Ok(DistantConfiguration::IsolatedEdge(a, b));
        }
        for b in self.vertices.iter() {
            if let Some(cfg) = self.configurations_at(b).into_iter().next_back() {
                return Ok(DistantConfiguration::Config(cfg));
            }
        }
        Err(Error::NoDistantLeaf)
    }

    /// Distant configurations centred at `b` (empty if there are none or
    /// `b` belongs to an isolated edge). When all neighbours of `b` are
    /// leaves, each of them can play the role of `c`; these are returned
    /// in increasing order of `c`.
    pub fn configurations_at(&self, b: usize) -> Vec<Configuration> {
        if !self.vertices.contains(b) || self.degree(b) < 2 {
            return Vec::new();
        }
        let (leaves, others) = self.split_neighbors(b);
        if leaves.is_empty() || others.len() > 1 {
            return Vec::new();
        }
        if let [c] = others[..] {
            return vec![Configuration { leaves, b, c }];
        }
        leaves
            .iter()
            .map(|&c| Configuration {
                leaves: leaves.iter().copied().filter(|&a| a != c).collect(),
                b,
                c,
            })
            .collect()
    }

    /// Every distant configuration of the graph.
    pub fn all_distant_configurations(&self) -> Vec<Configuration> {
        self.vertices
            .iter()
            .flat_map(|b| self.configurations_at(b))
            .collect()
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimpleGraph")
            .field("n", &self.n)
            .field("vertices", &self.vertices)
            .field("edges", &self.edges())
            .finish()
    }
}

/// A vertex-weighted oriented graph `D = (V, E, w)`.
///
/// Arcs `(i, j)` point from `i` to `j`; at most one orientation per
/// underlying edge. Weights are stored for all ambient vertices and are
/// at least 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeightedOrientedGraph {
    names: Vec<String>,
    arcs: Vec<(usize, usize)>,
    weights: Vec<u32>,
    graph: SimpleGraph,
}

impl WeightedOrientedGraph {
    pub fn new(names: Vec<String>, arcs: Vec<(usize, usize)>, weights: Vec<u32>) -> Result<Self> {
        let n = names.len();
        if weights.len() != n {
            return Err(Error::InvalidGraph(format!(
                "{} weights for {n} vertices",
                weights.len()
            )));
        }
        if let Some(v) = weights.iter().position(|&w| w == 0) {
            return Err(Error::InvalidGraph(format!(
                "vertex {} has weight 0",
                names[v]
            )));
        }
        let mut graph = SimpleGraph::empty(n)?;
        for &(a, b) in &arcs {
            if a >= n || b >= n {
                return Err(Error::UnknownVertex(a.max(b)));
            }
            graph.add_edge(a, b)?;
        }
        let mut arcs = arcs;
        arcs.sort_unstable_by_key(|&(a, b)| edge_key(a, b));
        Ok(WeightedOrientedGraph {
            names,
            arcs,
            weights,
            graph,
        })
    }

    /// Graph on `0..n` with default names `x1, ..., xn`.
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)], weights: &[u32]) -> Result<Self> {
        Self::new(default_names(n), arcs.to_vec(), weights.to_vec())
    }

    /// Orients every edge of `g` from its smaller to its larger endpoint,
    /// with all weights 1.
    pub fn from_simple(g: &SimpleGraph) -> Self {
        let arcs = g.edges();
        let mut d = Self::new(default_names(g.n()), arcs, vec![1; g.n()])
            .expect("edges of a simple graph are valid arcs");
        d.graph = g.clone();
        d
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|s| s == name)
    }

    pub fn vertices(&self) -> VertexSet {
        self.graph.vertices()
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn weight(&self, v: usize) -> u32 {
        self.weights[v]
    }

    pub fn underlying(&self) -> &SimpleGraph {
        &self.graph
    }

    /// The arc on the underlying edge `{a, b}`, as `(tail, head)`.
    pub fn arc_between(&self, a: usize, b: usize) -> Option<(usize, usize)> {
        self.arcs
            .binary_search_by_key(&edge_key(a, b), |&(x, y)| edge_key(x, y))
            .ok()
            .map(|i| self.arcs[i])
    }

    /// A vertex with no incoming arc.
    pub fn is_source(&self, v: usize) -> bool {
        !self.arcs.iter().any(|&(_, h)| h == v)
    }

    /// Vertices whose weight differs from 1 although they are sources,
    /// with their current weight.
    pub fn source_adjustments(&self) -> Vec<(usize, u32)> {
        let mut heads = VertexSet::EMPTY;
        for &(_, h) in &self.arcs {
            heads.insert(h);
        }
        self.vertices()
            .iter()
            .filter(|&v| !heads.contains(v) && self.weights[v] != 1)
            .map(|v| (v, self.weights[v]))
            .collect()
    }

    /// Resets the weight of every source to 1. Sources never contribute
    /// their weight to the edge ideal, so this does not change `I(D)`.
    pub fn normalize_sources(&self) -> Self {
        let mut d = self.clone();
        for (v, _) in self.source_adjustments() {
            d.weights[v] = 1;
        }
        d
    }

    pub fn is_normalized(&self) -> bool {
        self.source_adjustments().is_empty()
    }

    /// `I(D) = I(G)`: every arc head has weight 1.
    pub fn has_trivial_weights(&self) -> bool {
        self.arcs.iter().all(|&(_, h)| self.weights[h] == 1)
    }

    pub fn is_forest(&self) -> bool {
        self.graph.is_forest()
    }

    pub fn matching_number(&self) -> usize {
        self.graph.matching_number()
    }

    /// Induced subgraph on the kept vertex set `keep`.
    pub fn induced_subgraph(&self, keep: VertexSet) -> Result<Self> {
        let graph = self.graph.induced(keep)?;
        let arcs = self
            .arcs
            .iter()
            .copied()
            .filter(|&(a, b)| keep.contains(a) && keep.contains(b))
            .collect();
        Ok(WeightedOrientedGraph {
            names: self.names.clone(),
            arcs,
            weights: self.weights.clone(),
            graph,
        })
    }

    /// `D \ W`.
    pub fn delete(&self, remove: VertexSet) -> Result<Self> {
        if !remove.is_subset(self.vertices()) {
            let v = remove.difference(self.vertices()).first().unwrap_or(0);
            return Err(Error::UnknownVertex(v));
        }
        self.induced_subgraph(self.vertices().difference(remove))
    }

    pub fn delete_vertices(&self, remove: &[usize]) -> Result<Self> {
        self.delete(remove.iter().copied().collect())
    }

    /// Copy with one weight changed.
    pub fn with_weight(&self, v: usize, w: u32) -> Result<Self> {
        if w == 0 {
            return Err(Error::InvalidGraph("weight 0".into()));
        }
        let mut d = self.clone();
        d.weights[v] = w;
        Ok(d)
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.names[v]
    }
}

impl fmt::Debug for WeightedOrientedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arcs: Vec<String> = self
            .arcs
            .iter()
            .map(|&(a, b)| format!("{}->{}", self.names[a], self.names[b]))
            .collect();
        let weights: Vec<String> = self
            .vertices()
            .iter()
            .filter(|&v| self.weights[v] != 1)
            .map(|v| format!("w({})={}", self.names[v], self.weights[v]))
            .collect();
        write!(f, "D[{}; {}]", arcs.join(", "), weights.join(", "))
    }
}

pub fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> SimpleGraph {
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        SimpleGraph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn normalize_sources_examples() {
        // star a1 -> b, a2 -> b with w(a1) = 5, w(b) = 2
        let d = WeightedOrientedGraph::from_arcs(3, &[(0, 2), (1, 2)], &[5, 1, 2]).unwrap();
        let nd = d.normalize_sources();
        assert_eq!(nd.weights(), &[1, 1, 2]);
        assert_eq!(nd.normalize_sources(), nd);

        let e = WeightedOrientedGraph::from_arcs(2, &[(0, 1)], &[3, 4]).unwrap();
        assert_eq!(e.normalize_sources().weights(), &[1, 4]);
        assert_eq!(e.source_adjustments(), vec![(0, 3)]);
    }

    #[test]
    fn invalid_graphs_rejected() {
        assert!(WeightedOrientedGraph::from_arcs(2, &[(0, 1), (1, 0)], &[1, 1]).is_err());
        assert!(WeightedOrientedGraph::from_arcs(2, &[(0, 0)], &[1, 1]).is_err());
        assert!(WeightedOrientedGraph::from_arcs(2, &[(0, 1)], &[1, 0]).is_err());
        assert!(WeightedOrientedGraph::from_arcs(2, &[(0, 2)], &[1, 1]).is_err());
    }

    #[test]
    fn forest_examples() {
        assert!(path(4).is_forest());
        let tri = SimpleGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(!tri.is_forest());
        let two = SimpleGraph::from_edges(5, &[(0, 1), (2, 3)]).unwrap();
        assert!(two.is_forest());
    }

    #[test]
    fn matchings_of_paths() {
        let p5 = path(5);
        let m = p5.matchings(2);
        let got: Vec<Vec<(usize, usize)>> = m.iter().map(|m| m.edges().to_vec()).collect();
        assert_eq!(
            got,
            vec![
                vec![(0, 1), (2, 3)],
                vec![(0, 1), (3, 4)],
                vec![(1, 2), (3, 4)]
            ]
        );
        assert_eq!(path(4).matchings(2).len(), 1);
        assert_eq!(p5.matchings(0), vec![Matching(vec![])]);
        assert!(p5.matchings(3).is_empty());
    }

    #[test]
    fn matching_numbers() {
        assert_eq!(path(5).matching_number(), 2);
        let star = SimpleGraph::from_edges(5, &[(0, 4), (1, 4), (2, 4), (3, 4)]).unwrap();
        assert_eq!(star.matching_number(), 1);
        let two = SimpleGraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(two.matching_number(), 2);
        assert_eq!(SimpleGraph::empty(3).unwrap().matching_number(), 0);
        let c5 = SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        assert_eq!(c5.matching_number(), 2);
        assert_eq!(c5.matching_number_forest(), None);
    }

    #[test]
    fn strong_edges() {
        assert!(path(4).is_strong_edge(0, 1).unwrap());
        assert!(!path(3).is_strong_edge(0, 1).unwrap());
        let single = SimpleGraph::from_edges(2, &[(0, 1)]).unwrap();
        assert!(single.is_strong_edge(0, 1).unwrap());
        assert_eq!(path(3).is_strong_edge(0, 2), Err(Error::NotAnEdge(0, 2)));
    }

    #[test]
    fn distant_configuration_examples() {
        assert_eq!(
            path(4).find_distant_configuration().unwrap(),
            DistantConfiguration::Config(Configuration {
                leaves: vec![0],
                b: 1,
                c: 2
            })
        );
        let star = SimpleGraph::from_edges(4, &[(0, 3), (1, 3), (2, 3)]).unwrap();
        assert_eq!(
            star.find_distant_configuration().unwrap(),
            DistantConfiguration::Config(Configuration {
                leaves: vec![0, 1],
                b: 3,
                c: 2
            })
        );
        let single = SimpleGraph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(
            single.find_distant_configuration().unwrap(),
            DistantConfiguration::IsolatedEdge(0, 1)
        );
        assert_eq!(
            SimpleGraph::empty(3).unwrap().find_distant_configuration().unwrap(),
            DistantConfiguration::NoEdges
        );
        let c4 = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert_eq!(c4.find_distant_configuration(), Err(Error::NoDistantLeaf));
    }

    #[test]
    fn all_configurations_of_a_star() {
        let star = SimpleGraph::from_edges(4, &[(0, 3), (1, 3), (2, 3)]).unwrap();
        let all = star.all_distant_configurations();
        assert_eq!(all.len(), 3);
        assert!(all.iter().all(|c| c.b == 3 && c.t() == 2));
    }

    #[test]
    fn deletion_keeps_identities() {
        let p4 = WeightedOrientedGraph::from_arcs(4, &[(0, 1), (1, 2), (2, 3)], &[1; 4]).unwrap();
        let d = p4.delete_vertices(&[1]).unwrap();
        assert_eq!(d.arcs(), &[(2, 3)]);
        assert_eq!(d.n(), 4);
        assert!(!d.vertices().contains(1));
        assert_eq!(p4.delete(VertexSet::EMPTY).unwrap(), p4);
        assert!(d.delete_vertices(&[1]).is_err());
        assert!(p4.induced_subgraph(VertexSet::from_bits(1 << 5)).is_err());
    }

    #[test]
    fn vertex_set_iteration() {
        let s: VertexSet = [5, 1, 3].into_iter().collect();
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![1, 3, 5]);
        assert_eq!(s.len(), 3);
        assert_eq!(VertexSet::full(64).len(), 64);
    }
}
