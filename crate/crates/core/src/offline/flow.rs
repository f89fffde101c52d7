use super::Schedule;
use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::metric::{Cost, MetricSpace, Point};
use crate::online::Move;
use num_traits::Zero;

struct Arc {
    to: usize,
    cap: i32,
    cost: Cost,
}

/// Residual network with paired forward/backward arcs.
struct Network {
    arcs: Vec<Arc>,
    adj: Vec<Vec<usize>>,
}

impl Network {
    fn new(nodes: usize) -> Self {
        Self { arcs: Vec::new(), adj: vec![Vec::new(); nodes] }
    }

    fn add(&mut self, from: usize, to: usize, cost: Cost) -> usize {
        let id = self.arcs.len();
        self.arcs.push(Arc { to, cap: 1, cost });
        self.arcs.push(Arc { to: from, cap: 0, cost: -cost });
        self.adj[from].push(id);
        self.adj[to].push(id + 1);
        id
    }

    fn flow(&self, arc: usize) -> i32 {
        self.arcs[arc ^ 1].cap
    }

    /// Pushes `units` units from `source` to `sink` along successive
    /// shortest paths. Nodes must be numbered in a topological order of the
    /// original arcs, which gives the starting potentials.
    fn min_cost_flow(&mut self, source: usize, sink: usize, units: usize) -> Result<Cost> {
        let n = self.adj.len();
        let mut potential: Vec<Option<Cost>> = vec![None; n];
        potential[source] = Some(Cost::zero());
        for v in 0..n {
            let Some(pv) = potential[v] else { continue };
            for &a in &self.adj[v] {
                let arc = &self.arcs[a];
                if arc.cap > 0 && arc.to > v {
                    let cand = pv + arc.cost;
                    if potential[arc.to].is_none_or(|p| cand < p) {
                        potential[arc.to] = Some(cand);
                    }
                }
            }
        }
        let mut h: Vec<Cost> = potential.iter().map(|p| p.unwrap_or_else(Cost::zero)).collect();
        let mut total = Cost::zero();
        for _ in 0..units {
            // dense Dijkstra on reduced costs
            let mut dist: Vec<Option<Cost>> = vec![None; n];
            let mut prev = vec![usize::MAX; n];
            let mut done = vec![false; n];
            dist[source] = Some(Cost::zero());
            while let Some(u) = (0..n).filter(|&v| !done[v] && dist[v].is_some()).min_by_key(|&v| dist[v]) {
                done[u] = true;
                let du = dist[u].expect("selected nodes are reached");
                for &a in &self.adj[u] {
                    let arc = &self.arcs[a];
                    if arc.cap == 0 || done[arc.to] {
                        continue;
                    }
                    let reduced = arc.cost + h[u] - h[arc.to];
                    debug_assert!(reduced >= Cost::zero());
                    let cand = du + reduced;
                    if dist[arc.to].is_none_or(|d| cand < d) {
                        dist[arc.to] = Some(cand);
                        prev[arc.to] = a;
                    }
                }
            }
            if dist[sink].is_none() {
                return Err(Error::Infeasible);
            }
            for v in 0..n {
                if let Some(d) = dist[v] {
                    h[v] += d;
                }
            }
            let mut v = sink;
            while v != source {
                let a = prev[v];
                self.arcs[a].cap -= 1;
                self.arcs[a ^ 1].cap += 1;
                total += self.arcs[a].cost;
                v = self.arcs[a ^ 1].to;
            }
        }
        Ok(total)
    }
}

/// Optimal offline `k`-server schedule for the point sequence `points`,
/// starting from `initial` (one entry per server), via min-cost flow.
///
/// Every request is a node pair joined by an arc of cost `-M`, with `M`
/// more than twice the diameter, so skipping a request never pays and
/// optimal flows route a server through every request.
pub fn kserver_flow(space: &MetricSpace, initial: &[Point], points: &[Point]) -> Result<(Cost, Schedule)> {
    let (k, m) = (initial.len(), points.len());
    let big = Cost::from(2) * space.diameter() + Cost::from(1);
    let source = 0;
    let server = |s: usize| 1 + s;
    let inn = |i: usize| 1 + k + 2 * i;
    let out = |i: usize| 2 + k + 2 * i;
    let sink = 1 + k + 2 * m;
    let mut net = Network::new(sink + 1);

    let mut first_arcs = Vec::with_capacity(k);
    for s in 0..k {
        net.add(source, server(s), Cost::zero());
        let arcs: Vec<usize> = (0..m).map(|i| net.add(server(s), inn(i), space.dist(initial[s], points[i]))).collect();
        net.add(server(s), sink, Cost::zero());
        first_arcs.push(arcs);
    }
    let mut serve_arcs = Vec::with_capacity(m);
    let mut next_arcs: Vec<Vec<(usize, usize)>> = vec![Vec::new(); m];
    for i in 0..m {
        serve_arcs.push(net.add(inn(i), out(i), -big));
        for j in i + 1..m {
            let a = net.add(out(i), inn(j), space.dist(points[i], points[j]));
            next_arcs[i].push((j, a));
        }
        net.add(out(i), sink, Cost::zero());
    }

    let raw = net.min_cost_flow(source, sink, k)?;
    if serve_arcs.iter().any(|&a| net.flow(a) != 1) {
        return Err(Error::Infeasible);
    }
    let cost = raw + big * Cost::from(m as i64);

    // decompose into one path per server
    let mut steps: Vec<Vec<Move>> = vec![Vec::new(); m];
    let mut total = Cost::zero();
    for s in 0..k {
        let mut at = initial[s];
        let mut cur = first_arcs[s].iter().position(|&a| net.flow(a) == 1);
        while let Some(i) = cur {
            let to = points[i];
            if at != to {
                let c = space.dist(at, to);
                steps[i].push(Move { server: s, from: at, to, cost: c });
                total += c;
            }
            at = to;
            cur = next_arcs[i].iter().find(|&&(_, a)| net.flow(a) == 1).map(|&(j, _)| j);
        }
    }
    if total != cost {
        return Err(Error::Certificate("flow decomposition disagrees with the flow cost".into()));
    }
    Ok((cost, Schedule { initial: initial.to_vec(), steps, cost }))
}

/// Exact optimum of a `k`-server instance (every request a single point).
pub fn opt_kserver_flow(inst: &Instance) -> Result<(Cost, Schedule)> {
    if inst.requests.iter().any(|r| r.len() != 1) {
        return Err(Error::Precondition("the flow solver needs single-point requests".into()));
    }
    let points: Vec<Point> = inst.requests.iter().map(|r| r.points()[0]).collect();
    kserver_flow(&inst.space, inst.initial.points(), &points)
}
