//! Shortest-path betweenness (Brandes' accumulation).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::collections::BinaryHeap;
use std::collections::VecDeque;

use crate::SocialGraph;

const EPS: f64 = 1e-12;

/// Betweenness centrality per actor id. Uses breadth-first search when
/// every weight is 1.0 and Dijkstra otherwise; scores are halved at the
/// end because each undirected pair is counted from both endpoints.
pub fn betweenness(graph: &SocialGraph) -> BTreeMap<String, f64> {
    let n = graph.len();
    let adj = graph.adjacency();
    let unit = graph.edges().iter().all(|e| e.weight == 1.0);
    let mut score = vec![0.0f64; n];

    for source in 0..n {
        let (order, preds, sigma) = if unit {
            shortest_paths_bfs(&adj, source)
        } else {
            shortest_paths_dijkstra(&adj, source)
        };
        let mut delta = vec![0.0f64; n];
        for &w in order.iter().rev() {
            for &v in &preds[w] {
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            }
            if w != source {
                score[w] += delta[w];
            }
        }
    }

    graph
        .actors()
        .iter()
        .enumerate()
        .map(|(i, actor)| (actor.id.clone(), score[i] / 2.0))
        .collect()
}

type Paths = (Vec<usize>, Vec<Vec<usize>>, Vec<f64>);

fn shortest_paths_bfs(adj: &[Vec<(usize, f64)>], source: usize) -> Paths {
    let n = adj.len();
    let mut dist = vec![usize::MAX; n];
    let mut sigma = vec![0.0f64; n];
    let mut preds = vec![Vec::new(); n];
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::new();

    dist[source] = 0;
    sigma[source] = 1.0;
    queue.push_back(source);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &(w, _) in &adj[v] {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
            if dist[w] == dist[v] + 1 {
                sigma[w] += sigma[v];
                preds[w].push(v);
            }
        }
    }
    (order, preds, sigma)
}

/// Max-heap entry inverted so the smallest tentative distance pops first.
struct HeapItem {
    dist: f64,
    node: usize,
}

impl PartialEq for HeapItem {
    fn eq(&self, other: &Self) -> bool {
        self.dist == other.dist && self.node == other.node
    }
}
impl Eq for HeapItem {}
impl PartialOrd for HeapItem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for HeapItem {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .dist
            .total_cmp(&self.dist)
            .then(other.node.cmp(&self.node))
    }
}

fn shortest_paths_dijkstra(adj: &[Vec<(usize, f64)>], source: usize) -> Paths {
    let n = adj.len();
    let mut dist = vec![f64::INFINITY; n];
    let mut sigma = vec![0.0f64; n];
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut order = Vec::with_capacity(n);
    let mut done = vec![false; n];
    let mut heap = BinaryHeap::new();

    dist[source] = 0.0;
    sigma[source] = 1.0;
    heap.push(HeapItem {
        dist: 0.0,
        node: source,
    });
    while let Some(HeapItem { node: v, .. }) = heap.pop() {
        if done[v] {
            continue;
        }
        done[v] = true;
        order.push(v);
        for &(w, weight) in &adj[v] {
            let candidate = dist[v] + weight;
            if candidate < dist[w] - EPS {
                dist[w] = candidate;
                sigma[w] = sigma[v];
                preds[w] = vec![v];
                heap.push(HeapItem {
                    dist: candidate,
                    node: w,
                });
            } else if (candidate - dist[w]).abs() <= EPS {
                sigma[w] += sigma[v];
                preds[w].push(v);
            }
        }
    }
    (order, preds, sigma)
}
