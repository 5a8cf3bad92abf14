//! Unit-disk connectivity and anchor hop counts.
//!
//! Graph node indices follow [`Deployment`]: anchors first, then unknowns.

use std::collections::VecDeque;

use crate::deployment::Deployment;
use crate::geometry::{distance, Point2D, PHI};

/// Communication range scaled by the golden ratio, `R = φ·r`.
pub fn scaled_range(r: f64) -> f64 {
    PHI * r
}

/// Undirected adjacency lists. Neighbor lists are sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Edge between every pair at distance `<= comm_range`.
    pub fn unit_disk(positions: &[Point2D], comm_range: f64) -> Self {
        let n = positions.len();
        let mut adjacency = vec![Vec::new(); n];
        for i in 0..n {
            for j in i + 1..n {
                if distance(&positions[i], &positions[j]) <= comm_range {
                    adjacency[i].push(j);
                    adjacency[j].push(i);
                }
            }
        }
        Self { adjacency }
    }

    /// Build from an explicit edge list; duplicates and self-loops are dropped.
    pub fn from_edges(node_count: usize, edges: &[(usize, usize)]) -> Self {
        let mut adjacency = vec![Vec::new(); node_count];
        for &(u, v) in edges {
            if u != v {
                adjacency[u].push(v);
                adjacency[v].push(u);
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        Self { adjacency }
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, node: usize) -> &[usize] {
        &self.adjacency[node]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Unweighted shortest-path lengths from `source`; `None` where unreachable.
    pub fn bfs(&self, source: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.node_count()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let next = dist[u].map(|d| d + 1);
            for &v in &self.adjacency[u] {
                if dist[v].is_none() {
                    dist[v] = next;
                    queue.push_back(v);
                }
            }
        }
        dist
    }
}

/// Connectivity graph of a deployment at a single global range.
pub fn build_graph(deployment: &Deployment, comm_range: f64) -> Graph {
    let positions: Vec<Point2D> = deployment.positions().copied().collect();
    Graph::unit_disk(&positions, comm_range)
}

/// Minimum hop counts, `[node][anchor column]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopTable {
    anchor_ids: Vec<usize>,
    // row-major, node_count x anchor_count
    hops: Vec<Option<u32>>,
}

impl HopTable {
    /// Table from explicit rows, one per graph node, one column per anchor.
    ///
    /// Panics if a row length differs from `anchor_ids.len()`.
    pub fn from_rows(anchor_ids: Vec<usize>, rows: Vec<Vec<Option<u32>>>) -> Self {
        let k = anchor_ids.len();
        assert!(rows.iter().all(|r| r.len() == k), "ragged hop table");
        Self {
            anchor_ids,
            hops: rows.into_iter().flatten().collect(),
        }
    }

    pub fn node_count(&self) -> usize {
        if self.anchor_ids.is_empty() {
            0
        } else {
            self.hops.len() / self.anchor_ids.len()
        }
    }

    pub fn anchor_count(&self) -> usize {
        self.anchor_ids.len()
    }

    /// Graph index of each anchor column.
    pub fn anchor_ids(&self) -> &[usize] {
        &self.anchor_ids
    }

    pub fn get(&self, node: usize, anchor_col: usize) -> Option<u32> {
        self.row(node)[anchor_col]
    }

    pub fn row(&self, node: usize) -> &[Option<u32>] {
        let k = self.anchor_ids.len();
        &self.hops[node * k..(node + 1) * k]
    }

    /// `(anchor column, hops)` for every anchor the node can reach.
    pub fn reachable(&self, node: usize) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.row(node)
            .iter()
            .enumerate()
            .filter_map(|(a, h)| h.map(|h| (a, h)))
    }
}

/// One BFS per anchor.
pub fn compute_hops(graph: &Graph, anchor_ids: &[usize]) -> HopTable {
    let n = graph.node_count();
    let k = anchor_ids.len();
    let mut hops = vec![None; n * k];
    for (col, &anchor) in anchor_ids.iter().enumerate() {
        for (node, d) in graph.bfs(anchor).into_iter().enumerate() {
            hops[node * k + col] = d;
        }
    }
    HopTable {
        anchor_ids: anchor_ids.to_vec(),
        hops,
    }
}

/// A deployment together with its connectivity at one range.
#[derive(Debug, Clone)]
pub struct Topology {
    deployment: Deployment,
    comm_range: f64,
    graph: Graph,
    hops: HopTable,
}

impl Topology {
    pub fn build(deployment: Deployment, comm_range: f64) -> Self {
        assert!(comm_range > 0.0, "communication range must be positive");
        let graph = build_graph(&deployment, comm_range);
        let anchor_ids: Vec<usize> = (0..deployment.anchor_count()).collect();
        let hops = compute_hops(&graph, &anchor_ids);
        Self {
            deployment,
            comm_range,
            graph,
            hops,
        }
    }

    pub fn deployment(&self) -> &Deployment {
        &self.deployment
    }

    pub fn comm_range(&self) -> f64 {
        self.comm_range
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn hops(&self) -> &HopTable {
        &self.hops
    }
}
