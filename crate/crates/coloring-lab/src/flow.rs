//! A small deterministic Dinic max-flow, shared by the bounded-outdegree
//! orientation routine and the flow-based density cross-check.

#[derive(Clone)]
struct Arc {
    to: usize,
    cap: i64,
}

pub struct FlowNetwork {
    arcs: Vec<Arc>,
    head: Vec<Vec<usize>>,
}

impl FlowNetwork {
    pub fn new(nodes: usize) -> Self {
        FlowNetwork {
            arcs: Vec::new(),
            head: vec![Vec::new(); nodes],
        }
    }

    /// Adds a directed arc with the given capacity; returns its index.
    pub fn add_arc(&mut self, from: usize, to: usize, cap: i64) -> usize {
        let id = self.arcs.len();
        self.arcs.push(Arc { to, cap });
        self.arcs.push(Arc { to: from, cap: 0 });
        self.head[from].push(id);
        self.head[to].push(id + 1);
        id
    }

    /// Residual capacity left on arc `id` (0 once saturated).
    pub fn residual(&self, id: usize) -> i64 {
        self.arcs[id].cap
    }

    pub fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut total = 0;
        while let Some(level) = self.levels(s, t) {
            let mut iter = vec![0usize; self.head.len()];
            loop {
                let pushed = self.augment(s, t, i64::MAX, &level, &mut iter);
                if pushed == 0 {
                    break;
                }
                total += pushed;
            }
        }
        total
    }

    fn levels(&self, s: usize, t: usize) -> Option<Vec<u32>> {
        let mut level = vec![u32::MAX; self.head.len()];
        level[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &id in &self.head[v] {
                let arc = &self.arcs[id];
                if arc.cap > 0 && level[arc.to] == u32::MAX {
                    level[arc.to] = level[v] + 1;
                    queue.push_back(arc.to);
                }
            }
        }
        (level[t] != u32::MAX).then_some(level)
    }

    fn augment(&mut self, v: usize, t: usize, limit: i64, level: &[u32], iter: &mut [usize]) -> i64 {
        if v == t {
            return limit;
        }
        while iter[v] < self.head[v].len() {
            let id = self.head[v][iter[v]];
            let (to, cap) = (self.arcs[id].to, self.arcs[id].cap);
            if cap > 0 && level[to] == level[v] + 1 {
                let pushed = self.augment(to, t, limit.min(cap), level, iter);
                if pushed > 0 {
                    self.arcs[id].cap -= pushed;
                    self.arcs[id ^ 1].cap += pushed;
                    return pushed;
                }
            }
            iter[v] += 1;
        }
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_network() {
        // s=0, t=3; two disjoint paths of capacity 2 and 1
        let mut net = FlowNetwork::new(4);
        net.add_arc(0, 1, 2);
        net.add_arc(1, 3, 2);
        net.add_arc(0, 2, 1);
        net.add_arc(2, 3, 5);
        assert_eq!(net.max_flow(0, 3), 3);
    }

    #[test]
    fn bottleneck() {
        let mut net = FlowNetwork::new(3);
        net.add_arc(0, 1, 10);
        net.add_arc(1, 2, 4);
        assert_eq!(net.max_flow(0, 2), 4);
    }
}
