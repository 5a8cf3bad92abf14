//! Independent oracles and generators shared by the integration tests.
#![allow(dead_code)]

use grl_sim::geometry::{distance, Point2D};
use grl_sim::network::Graph;
use proptest::prelude::*;

/// All-pairs unweighted shortest paths by Floyd–Warshall.
pub fn floyd_warshall(graph: &Graph) -> Vec<Vec<Option<u32>>> {
    let n = graph.node_count();
    let mut d = vec![vec![None; n]; n];
    for (u, row) in d.iter_mut().enumerate() {
        row[u] = Some(0);
        for &v in graph.neighbors(u) {
            row[v] = Some(1);
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

/// Andrew's monotone chain, counter-clockwise, collinear points dropped.
pub fn convex_hull(points: &[Point2D]) -> Vec<Point2D> {
    let mut pts: Vec<(f64, f64)> = points.iter().map(|p| (p.x(), p.y())).collect();
    pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    pts.dedup();
    if pts.len() < 3 {
        return pts.into_iter().map(|(x, y)| Point2D::new(x, y)).collect();
    }
    let cross = |o: (f64, f64), a: (f64, f64), b: (f64, f64)| {
        (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
    };
    let mut hull: Vec<(f64, f64)> = Vec::new();
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &(f64, f64)>> = if pass == 0 {
            Box::new(pts.iter())
        } else {
            Box::new(pts.iter().rev())
        };
        for &p in iter {
            while hull.len() >= start + 2
                && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0
            {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    hull.into_iter().map(|(x, y)| Point2D::new(x, y)).collect()
}

/// Distance from `p` to the hull when outside, 0 when inside.
pub fn hull_violation(hull: &[Point2D], p: &Point2D) -> f64 {
    let n = hull.len();
    let edges = || (0..n).map(|i| (hull[i], hull[(i + 1) % n]));
    let inside = n >= 3
        && edges().all(|(a, b)| {
            (b.x() - a.x()) * (p.y() - a.y()) - (b.y() - a.y()) * (p.x() - a.x()) >= 0.0
        });
    if inside {
        0.0
    } else {
        edges()
            .map(|(a, b)| segment_distance(&a, &b, p))
            .fold(f64::INFINITY, f64::min)
    }
}

pub fn segment_distance(a: &Point2D, b: &Point2D, p: &Point2D) -> f64 {
    let (dx, dy) = (b.x() - a.x(), b.y() - a.y());
    let len2 = dx * dx + dy * dy;
    if len2 == 0.0 {
        return distance(a, p);
    }
    let t = (((p.x() - a.x()) * dx + (p.y() - a.y()) * dy) / len2).clamp(0.0, 1.0);
    distance(&Point2D::new(a.x() + t * dx, a.y() + t * dy), p)
}

pub fn point() -> impl Strategy<Value = Point2D> {
    (0.0..100.0f64, 0.0..100.0f64).prop_map(|(x, y)| Point2D::new(x, y))
}

/// Twice the triangle area; used to reject nearly collinear triples.
pub fn area2(a: &Point2D, b: &Point2D, c: &Point2D) -> f64 {
    ((b.x() - a.x()) * (c.y() - a.y()) - (b.y() - a.y()) * (c.x() - a.x())).abs()
}

pub fn random_graph() -> impl Strategy<Value = Graph> {
    (2usize..=30).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..=3 * n)
            .prop_map(move |edges| Graph::from_edges(n, &edges))
    })
}

pub const FIELD_DIAGONAL: f64 = 141.421_356_237_309_5;
