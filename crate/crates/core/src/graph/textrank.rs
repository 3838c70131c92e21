//! Weighted TextRank over a directed graph:
//! `S(i) = (1 - lambda) + lambda * sum_{j in I(i)} w(j,i) * S(j) / out(j)`
//! iterated from uniform scores until the largest per-node change drops
//! below tolerance.

pub const DEFAULT_LAMBDA: f64 = 0.85;
pub const DEFAULT_TOL: f64 = 1e-6;
pub const DEFAULT_MAX_ITER: usize = 200;

/// Directed weighted graph with dense node indices. Self-loops are ignored.
#[derive(Debug, Clone)]
pub struct RankGraph {
    out: Vec<Vec<(usize, f64)>>,
}

impl RankGraph {
    pub fn new(nodes: usize) -> RankGraph {
        RankGraph {
            out: vec![Vec::new(); nodes],
        }
    }

    pub fn node_count(&self) -> usize {
        self.out.len()
    }

    /// Adds weight onto the directed edge `from -> to`.
    pub fn add_edge(&mut self, from: usize, to: usize, weight: f64) {
        debug_assert!(weight >= 0.0, "edge weights are non-negative");
        if from == to {
            return;
        }
        match self.out[from].iter_mut().find(|(t, _)| *t == to) {
            Some((_, w)) => *w += weight,
            None => self.out[from].push((to, weight)),
        }
    }

    /// Adds weight in both directions.
    pub fn add_symmetric_edge(&mut self, a: usize, b: usize, weight: f64) {
        self.add_edge(a, b, weight);
        self.add_edge(b, a, weight);
    }

    /// Multiplies the weight of every edge pointing at `to` by `factor`.
    pub fn scale_incoming(&mut self, to: usize, factor: f64) {
        for edges in &mut self.out {
            for (target, weight) in edges.iter_mut() {
                if *target == to {
                    *weight *= factor;
                }
            }
        }
    }

    pub fn out_edges(&self, node: usize) -> &[(usize, f64)] {
        &self.out[node]
    }

    fn out_weight_sums(&self) -> Vec<f64> {
        self.out
            .iter()
            .map(|edges| edges.iter().map(|(_, w)| w).sum())
            .collect()
    }
}

#[derive(Debug, Clone)]
pub struct TextRankResult {
    pub scores: Vec<f64>,
    pub iterations: usize,
    pub converged: bool,
    /// Largest per-node change at each iteration (the convergence measure).
    pub deltas: Vec<f64>,
    /// Summed per-node change at each iteration. Contracts by at least
    /// lambda per step: the update matrix is column-substochastic.
    pub l1_deltas: Vec<f64>,
}

/// Runs the recurrence from uniform initial scores of 1.0. Nodes without
/// out-edges contribute nothing (their 0/0 share is treated as 0). On
/// non-convergence the last iterate is returned with `converged = false`.
pub fn textrank_scores(
    graph: &RankGraph,
    lambda: f64,
    tol: f64,
    max_iter: usize,
) -> TextRankResult {
    let n = graph.node_count();
    let out_sums = graph.out_weight_sums();
    let mut scores = vec![1.0; n];
    let mut deltas = Vec::new();
    let mut l1_deltas = Vec::new();

    for iteration in 1..=max_iter {
        let mut next = vec![1.0 - lambda; n];
        for from in 0..n {
            if out_sums[from] <= 0.0 {
                continue;
            }
            let share = lambda * scores[from] / out_sums[from];
            for &(to, weight) in &graph.out[from] {
                next[to] += share * weight;
            }
        }
        let mut delta = 0.0_f64;
        let mut l1 = 0.0;
        for (a, b) in scores.iter().zip(&next) {
            let change = (a - b).abs();
            delta = delta.max(change);
            l1 += change;
        }
        deltas.push(delta);
        l1_deltas.push(l1);
        scores = next;
        if delta < tol {
            return TextRankResult {
                scores,
                iterations: iteration,
                converged: true,
                deltas,
                l1_deltas,
            };
        }
    }
    TextRankResult {
        scores,
        iterations: max_iter,
        converged: false,
        deltas,
        l1_deltas,
    }
}

/// Plain-text node and edge listing for debugging graph construction.
#[derive(Debug, Clone)]
pub struct GraphDump {
    pub labels: Vec<String>,
    pub edges: Vec<(usize, usize, f64)>,
}

impl GraphDump {
    pub fn new(graph: &RankGraph, labels: Vec<String>) -> GraphDump {
        let mut edges = Vec::new();
        for from in 0..graph.node_count() {
            for &(to, weight) in graph.out_edges(from) {
                edges.push((from, to, weight));
            }
        }
        edges.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
        GraphDump { labels, edges }
    }
}

impl std::fmt::Display for GraphDump {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "# nodes: {}", self.labels.len())?;
        for (i, label) in self.labels.iter().enumerate() {
            writeln!(f, "node\t{i}\t{label}")?;
        }
        writeln!(f, "# edges: {}", self.edges.len())?;
        for (from, to, weight) in &self.edges {
            writeln!(f, "edge\t{from}\t{to}\t{weight}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isolated_node_scores_one_minus_lambda() {
        let graph = RankGraph::new(1);
        let result = textrank_scores(&graph, 0.85, 1e-9, 100);
        assert!((result.scores[0] - 0.15).abs() < 1e-12);
        assert!(result.converged);
    }

    #[test]
    fn symmetric_pair_scores_equal() {
        let mut graph = RankGraph::new(2);
        graph.add_symmetric_edge(0, 1, 1.0);
        let result = textrank_scores(&graph, 0.85, 1e-12, 500);
        assert!((result.scores[0] - result.scores[1]).abs() < 1e-10);
        // Fixed point of s = 0.15 + 0.85 s is 1.
        assert!((result.scores[0] - 1.0).abs() < 1e-9);
    }

    #[test]
    fn matches_dense_reference_on_a_weighted_triangle() {
        // 3-node weighted digraph checked against a brute-force dense
        // iteration.
        let edges = [(0, 1, 2.0), (1, 2, 1.0), (2, 0, 0.5), (0, 2, 1.5)];
        let mut graph = RankGraph::new(3);
        for &(a, b, w) in &edges {
            graph.add_edge(a, b, w);
        }
        let result = textrank_scores(&graph, 0.85, 1e-12, 1000);

        // Independent dense iteration.
        let mut dense = [[0.0_f64; 3]; 3];
        for &(a, b, w) in &edges {
            dense[a][b] = w;
        }
        let mut reference = [1.0_f64; 3];
        for _ in 0..100 {
            let mut next = [0.15_f64; 3];
            for (i, next_i) in next.iter_mut().enumerate() {
                for j in 0..3 {
                    let out: f64 = dense[j].iter().sum();
                    if dense[j][i] > 0.0 && out > 0.0 {
                        *next_i += 0.85 * dense[j][i] * reference[j] / out;
                    }
                }
            }
            reference = next;
        }
        for i in 0..3 {
            assert!(
                (result.scores[i] - reference[i]).abs() < 1e-6,
                "node {i}: {} vs {}",
                result.scores[i],
                reference[i]
            );
        }
    }

    #[test]
    fn self_loops_are_ignored() {
        let mut graph = RankGraph::new(2);
        graph.add_edge(0, 0, 5.0);
        graph.add_edge(0, 1, 1.0);
        assert_eq!(graph.out_edges(0).len(), 1);
    }

    #[test]
    fn non_convergence_reports_flag() {
        // A chain keeps moving for several iterations.
        let mut graph = RankGraph::new(2);
        graph.add_edge(0, 1, 1.0);
        let result = textrank_scores(&graph, 0.85, 1e-15, 2);
        assert!(!result.converged);
        assert_eq!(result.iterations, 2);
        assert_eq!(result.deltas.len(), 2);
    }

    #[test]
    fn scores_at_least_one_minus_lambda() {
        let mut graph = RankGraph::new(4);
        graph.add_edge(0, 1, 1.0);
        graph.add_edge(1, 2, 2.0);
        graph.add_edge(2, 3, 3.0);
        let result = textrank_scores(&graph, 0.85, 1e-9, 500);
        for score in result.scores {
            assert!(score >= 0.15 - 1e-12);
        }
    }
}
