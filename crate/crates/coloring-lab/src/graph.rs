//! Undirected simple graphs on vertices `0..n-1`, stored as adjacency bit rows.
//!
//! Everything here is sized for small dense graphs (roughly 20 vertices and
//! below); one `u64` row per vertex is plenty.

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 62;

/// An undirected simple graph. Immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    /// An edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "graph too large for bit rows");
        Graph { n, adj: vec![0; n] }
    }

    /// Builds a graph from an explicit edge list. Rejects loops and
    /// out-of-range endpoints; duplicate edges are allowed and collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        if a == b {
            return Err(Error::domain(format!("loop at vertex {a}")));
        }
        if a >= self.n || b >= self.n {
            return Err(Error::domain(format!(
                "edge ({a},{b}) out of range for n={}",
                self.n
            )));
        }
        self.adj[a] |= 1 << b;
        self.adj[b] |= 1 << a;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.adj[a] & (1 << b) != 0
    }

    /// Neighbor bitmask of `v`.
    pub fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = self.adj[v];
        (0..self.n).filter(move |&u| row & (1 << u) != 0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as `(a, b)` with `a < b`, lexicographically sorted. This order is
    /// the reference order used by orientations and covers.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for a in 0..self.n {
            for b in (a + 1)..self.n {
                if self.has_edge(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Number of edges with both ends inside `mask`.
    pub fn edges_within(&self, mask: u64) -> usize {
        let mut total = 0usize;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            total += (self.adj[v] & rest).count_ones() as usize;
        }
        total
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut queue = vec![start];
            seen[start] = true;
            let mut comp = Vec::new();
            while let Some(v) = queue.pop() {
                comp.push(v);
                for u in self.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        queue.push(u);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// A spanning forest as an edge list: BFS from the least vertex of each
    /// component, neighbors visited in increasing order.
    pub fn spanning_forest(&self) -> Vec<(usize, usize)> {
        let mut seen = vec![false; self.n];
        let mut forest = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for u in self.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        forest.push((v.min(u), v.max(u)));
                        queue.push_back(u);
                    }
                }
            }
        }
        forest.sort_unstable();
        forest
    }

    /// Size of a largest clique, by branch and bound over bit rows.
    pub fn clique_number(&self) -> usize {
        if self.n == 0 {
            return 0;
        }
        let mut best = 1;
        let full = if self.n == 64 { !0 } else { (1u64 << self.n) - 1 };
        self.clique_rec(full, 0, &mut best);
        best
    }

    fn clique_rec(&self, cand: u64, size: usize, best: &mut usize) {
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        let v = cand.trailing_zeros() as usize;
        // branch: take v, then skip v
        self.clique_rec(cand & self.adj[v], size + 1, best);
        self.clique_rec(cand & !(1 << v), size, best);
    }

    pub fn contains_clique(&self, k: usize) -> bool {
        self.clique_number() >= k
    }
}

/// Complete graph `K_m`, `m >= 1`.
pub fn complete(m: usize) -> Result<Graph> {
    if m == 0 {
        return Err(Error::domain("complete graph needs at least one vertex"));
    }
    let mut g = Graph::empty(m);
    for a in 0..m {
        for b in (a + 1)..m {
            g.add_edge(a, b)?;
        }
    }
    Ok(g)
}

/// Cycle `C_n`, `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::domain("cycle needs at least three vertices"));
    }
    let mut g = Graph::empty(n);
    for v in 0..n {
        g.add_edge(v, (v + 1) % n)?;
    }
    Ok(g)
}

/// Path `P_n` on `n >= 1` vertices.
pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::domain("path needs at least one vertex"));
    }
    let mut g = Graph::empty(n);
    for v in 0..n.saturating_sub(1) {
        g.add_edge(v, v + 1)?;
    }
    Ok(g)
}

/// Complete bipartite `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(Error::domain("complete bipartite parts must be nonempty"));
    }
    let mut g = Graph::empty(a + b);
    for x in 0..a {
        for y in a..a + b {
            g.add_edge(x, y)?;
        }
    }
    Ok(g)
}

/// Disjoint union; vertices of `h` are shifted past those of `g`.
/// Either operand may be the empty graph.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let mut out = Graph::empty(g.n() + h.n());
    for (a, b) in g.edges() {
        out.add_edge(a, b).unwrap();
    }
    for (a, b) in h.edges() {
        out.add_edge(a + g.n(), b + g.n()).unwrap();
    }
    out
}

/// Join: disjoint union plus every edge between the two sides.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let mut out = disjoint_union(g, h);
    for a in 0..g.n() {
        for b in 0..h.n() {
            out.add_edge(a, g.n() + b).unwrap();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_constructions() {
        let c4 = cycle(4).unwrap();
        assert_eq!(c4.n(), 4);
        assert_eq!(c4.edge_count(), 4);
        assert!((0..4).all(|v| c4.degree(v) == 2));

        let k3 = complete(3).unwrap();
        assert_eq!(k3.edge_count(), 3);

        let k33 = complete_bipartite(3, 3).unwrap();
        assert_eq!(k33.edge_count(), 9);
        // bipartite: no edge within either part
        for a in 0..3 {
            for b in 0..3 {
                assert!(!k33.has_edge(a, b));
                assert!(!k33.has_edge(3 + a, 3 + b));
            }
        }

        assert!(complete(0).is_err());
        assert!(cycle(2).is_err());
        assert!(complete_bipartite(0, 3).is_err());
    }

    #[test]
    fn join_counts() {
        // join of two empty pairs is K_{2,2}, i.e. a 4-cycle
        let two_k1 = Graph::empty(2);
        let j = join(&two_k1, &two_k1);
        assert_eq!(j, complete_bipartite(2, 2).unwrap());
        assert_eq!(j.edge_count(), 4);
        assert!((0..4).all(|v| j.degree(v) == 2));

        let wheelish = join(&complete(1).unwrap(), &cycle(4).unwrap());
        assert_eq!(wheelish.n(), 5);
        assert_eq!(wheelish.edge_count(), 8);

        // |E| = |E(g)| + |E(h)| + |V(g)| * |V(h)|
        let g = cycle(5).unwrap();
        let h = complete(3).unwrap();
        assert_eq!(join(&g, &h).edge_count(), 5 + 3 + 15);
    }

    #[test]
    fn rejects_loops_and_range() {
        assert!(Graph::from_edges(3, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
    }

    #[test]
    fn edges_are_sorted_and_symmetric() {
        let g = Graph::from_edges(4, &[(2, 1), (3, 0), (0, 1)]).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 3), (1, 2)]);
        assert!(g.has_edge(1, 0) && g.has_edge(0, 1));
    }

    #[test]
    fn components_and_forest() {
        let g = disjoint_union(&cycle(3).unwrap(), &path(2).unwrap());
        assert_eq!(g.components(), vec![vec![0, 1, 2], vec![3, 4]]);
        assert!(!g.is_connected());
        let forest = g.spanning_forest();
        assert_eq!(forest.len(), 3); // 2 tree edges + 1
        assert!(forest.contains(&(3, 4)));
    }

    #[test]
    fn clique_numbers() {
        assert_eq!(complete(5).unwrap().clique_number(), 5);
        assert_eq!(cycle(5).unwrap().clique_number(), 2);
        assert_eq!(complete_bipartite(3, 3).unwrap().clique_number(), 2);
        assert_eq!(Graph::empty(4).clique_number(), 1);
        assert_eq!(Graph::empty(0).clique_number(), 0);
    }

    #[test]
    fn edges_within_mask() {
        let k4 = complete(4).unwrap();
        assert_eq!(k4.edges_within(0b1111), 6);
        assert_eq!(k4.edges_within(0b0111), 3);
        assert_eq!(k4.edges_within(0b0001), 0);
    }
}
