//! Minimal integer max-flow (BFS augmentation) for the star-forest
//! feasibility networks. Deterministic: arcs are scanned in insertion order.

pub struct FlowNet {
    adj: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<i64>,
}

impl FlowNet {
    pub fn new(nodes: usize) -> Self {
        FlowNet {
            adj: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    /// Adds a forward arc with capacity `cap` and its residual twin; returns
    /// the forward arc id.
    pub fn add_arc(&mut self, from: usize, to: usize, cap: i64) -> usize {
        let id = self.to.len();
        self.adj[from].push(id);
        self.to.push(to);
        self.cap.push(cap);
        self.adj[to].push(id + 1);
        self.to.push(from);
        self.cap.push(0);
        id
    }

    /// Flow currently routed through the forward arc `id`.
    pub fn flow_on(&self, id: usize) -> i64 {
        self.cap[id ^ 1]
    }

    /// Augments along shortest paths until `limit` is reached or no path
    /// remains; returns the total flow pushed.
    pub fn max_flow(&mut self, source: usize, sink: usize, limit: i64) -> i64 {
        let mut total = 0;
        while total < limit {
            let Some(path) = self.find_path(source, sink) else {
                break;
            };
            let mut push = limit - total;
            for &arc in &path {
                push = push.min(self.cap[arc]);
            }
            for &arc in &path {
                self.cap[arc] -= push;
                self.cap[arc ^ 1] += push;
            }
            total += push;
        }
        total
    }

    fn find_path(&self, source: usize, sink: usize) -> Option<Vec<usize>> {
        let mut parent_arc = vec![usize::MAX; self.adj.len()];
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(source);
        let mut seen = vec![false; self.adj.len()];
        seen[source] = true;
        while let Some(u) = queue.pop_front() {
            if u == sink {
                break;
            }
            for &arc in &self.adj[u] {
                let v = self.to[arc];
                if !seen[v] && self.cap[arc] > 0 {
                    seen[v] = true;
                    parent_arc[v] = arc;
                    queue.push_back(v);
                }
            }
        }
        if !seen[sink] {
            return None;
        }
        let mut path = Vec::new();
        let mut node = sink;
        while node != source {
            let arc = parent_arc[node];
            path.push(arc);
            node = self.to[arc ^ 1];
        }
        path.reverse();
        Some(path)
    }
}
