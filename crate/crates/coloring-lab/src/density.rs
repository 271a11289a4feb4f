//! Exact degeneracy and maximum average degree.
//!
//! Densities are exact rationals, never floats. The primary `mad` walks every
//! nonempty vertex subset with incrementally maintained edge counts; `mad_bruteforce`
//! recounts everything from scratch and serves as the independent oracle. A
//! third, flow-based route (`mad_flow`) cross-checks both.

use crate::error::{Error, Result};
use crate::flow::FlowNetwork;
use crate::graph::Graph;
use num_rational::Ratio;
use serde::{Serialize, Serializer};

/// Largest vertex count accepted by the subset-enumeration routines.
pub const MAD_VERTEX_GUARD: usize = 20;

/// An exact nonnegative rational, always in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(Ratio<i64>);

impl Rational {
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom > 0, "denominator must be positive");
        Rational(Ratio::new(numer, denom))
    }

    pub fn from_integer(k: i64) -> Self {
        Rational(Ratio::from_integer(k))
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    /// Exact comparison against an integer.
    pub fn cmp_int(&self, k: i64) -> std::cmp::Ordering {
        self.0.cmp(&Ratio::from_integer(k))
    }

    /// Half of this value, still exact.
    pub fn half(&self) -> Rational {
        Rational(self.0 / 2)
    }

    pub fn floor(&self) -> i64 {
        self.0.floor().to_integer()
    }
}

impl std::fmt::Display for Rational {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Least `k` such that repeatedly peeling a minimum-degree vertex never meets
/// a degree above `k`. Ties peel the lowest vertex id. Returns the value and
/// the peel order.
pub fn degeneracy_with_order(g: &Graph) -> Result<(usize, Vec<usize>)> {
    if g.n() == 0 {
        return Err(Error::domain("degeneracy of the empty graph is undefined"));
    }
    let n = g.n();
    let mut alive: u64 = if n == 64 { !0 } else { (1u64 << n) - 1 };
    let mut order = Vec::with_capacity(n);
    let mut k = 0usize;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| alive & (1 << v) != 0)
            .min_by_key(|&v| ((g.row(v) & alive).count_ones(), v))
            .unwrap();
        k = k.max((g.row(v) & alive).count_ones() as usize);
        alive &= !(1 << v);
        order.push(v);
    }
    Ok((k, order))
}

pub fn degeneracy(g: &Graph) -> Result<usize> {
    degeneracy_with_order(g).map(|(k, _)| k)
}

fn subset_guard(g: &Graph, what: &'static str) -> Result<()> {
    if g.n() > MAD_VERTEX_GUARD {
        return Err(Error::Guard {
            what,
            needed: g.n() as u128,
            limit: MAD_VERTEX_GUARD as u128,
        });
    }
    Ok(())
}

/// Maximum of `2|E(H)| / |V(H)|` over induced subgraphs (induced suffices:
/// for a fixed vertex set the induced subgraph maximizes the edge count).
/// The edgeless graph has mad 0/1 by convention.
///
/// Walks subsets in increasing mask order, reusing `edges[S \ lowbit]`.
pub fn mad(g: &Graph) -> Result<Rational> {
    subset_guard(g, "mad subset enumeration")?;
    let n = g.n();
    if n == 0 || g.edge_count() == 0 {
        return Ok(Rational::from_integer(0));
    }
    let total = 1usize << n;
    let mut edges = vec![0u32; total];
    let mut best = Rational::from_integer(0);
    for mask in 1..total {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        edges[mask] = edges[rest] + (g.row(low) & rest as u64).count_ones();
        let density = Rational::new(2 * edges[mask] as i64, mask.count_ones() as i64);
        if density > best {
            best = density;
        }
    }
    Ok(best)
}

/// Independent oracle for [`mad`]: recomputes each subset's edge count from
/// scratch. Deliberately shares no state with the primary route.
pub fn mad_bruteforce(g: &Graph) -> Result<Rational> {
    subset_guard(g, "mad_bruteforce subset enumeration")?;
    let n = g.n();
    if n == 0 {
        return Ok(Rational::from_integer(0));
    }
    let mut best = Rational::from_integer(0);
    for mask in 1u64..(1 << n) {
        let e = g.edges_within(mask);
        let v = mask.count_ones() as i64;
        let density = Rational::new(2 * e as i64, v);
        if density > best {
            best = density;
        }
    }
    Ok(best)
}

/// Flow-based route to the same value: binary search over all candidate
/// densities `e/v`, testing each with a Goldberg-style cut network. An
/// optional extension cross-checked against the enumeration routes.
pub fn mad_flow(g: &Graph) -> Result<Rational> {
    let n = g.n() as i64;
    if n == 0 || g.edge_count() == 0 {
        return Ok(Rational::from_integer(0));
    }
    let m = g.edge_count() as i64;
    // candidate densities |E(H)|/|V(H)|, v <= n, e <= min(m, v(v-1)/2)
    let mut candidates: Vec<Rational> = Vec::new();
    for v in 1..=n {
        for e in 0..=m.min(v * (v - 1) / 2) {
            candidates.push(Rational::new(e, v));
        }
    }
    candidates.sort_unstable();
    candidates.dedup();
    // exceeds(c) is monotone: true for c < D*, false for c >= D*.
    // D* is itself a candidate, so it is the least candidate where the test fails.
    let mut lo = 0usize; // exceeds(candidates[0] = 0/1) holds: g has an edge
    let mut hi = candidates.len() - 1; // the largest candidate is never exceeded
    while lo + 1 < hi {
        let mid = (lo + hi) / 2;
        if density_exceeded(g, candidates[mid]) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let d = if density_exceeded(g, candidates[lo]) {
        candidates[hi]
    } else {
        candidates[lo]
    };
    Ok(Rational::new(2 * d.numer(), d.denom()))
}

/// Is there a subgraph H with |E(H)|/|V(H)| strictly above `a/b`?
fn density_exceeded(g: &Graph, bound: Rational) -> bool {
    let (a, b) = (bound.numer(), bound.denom());
    let n = g.n();
    let edges = g.edges();
    // nodes: source, sink, one per vertex, one per edge
    let s = 0;
    let t = 1;
    let vertex = |v: usize| 2 + v;
    let edge_node = |i: usize| 2 + n + i;
    let mut net = FlowNetwork::new(2 + n + edges.len());
    let infinity = (edges.len() as i64 + 1) * b.max(a);
    for (i, &(u, v)) in edges.iter().enumerate() {
        net.add_arc(s, edge_node(i), b);
        net.add_arc(edge_node(i), vertex(u), infinity);
        net.add_arc(edge_node(i), vertex(v), infinity);
    }
    for v in 0..n {
        net.add_arc(vertex(v), t, a);
    }
    let flow = net.max_flow(s, t);
    flow < b * edges.len() as i64
}
