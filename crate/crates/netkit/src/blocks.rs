//! Block structure: partition entropy, annealed search, and agreement
//! between runs.
//!
//! The score of a partition is S = E - 1/2 * sum over block pairs (r, s)
//! of e_rs * ln(e_rs / (n_r * n_s)), with e_rr counting within-block edge
//! ends twice and 0 * ln 0 = 0. Lower is better. Weights are ignored;
//! only the tie pattern matters here.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::{NetError, SocialGraph};

#[derive(Clone, Debug, PartialEq)]
pub struct Partition {
    /// Block label per actor, aligned with the graph's actor order.
    pub blocks: Vec<usize>,
    pub entropy: f64,
    pub b: usize,
}

#[derive(Clone, Debug)]
pub struct PartitionSearch {
    /// Lowest-entropy state seen with a block count inside the range.
    pub best: Partition,
    /// One post-sweep snapshot per in-range level, largest block count first.
    pub samples: Vec<Partition>,
}

/// Mean edge counts between blocks across partition samples, after aligning
/// every sample's labels to the lowest-entropy partition.
#[derive(Clone, Debug)]
pub struct BlockCorrelation {
    /// matrix[r][s] = mean number of edges joining aligned blocks r and s;
    /// within-block edges count once on the diagonal. Symmetric.
    pub matrix: Vec<Vec<f64>>,
    /// Index of the partition used as alignment reference (lowest entropy).
    pub reference: usize,
}

impl BlockCorrelation {
    /// Share of the mean edge mass that falls within blocks.
    pub fn within_share(&self) -> f64 {
        let diag: f64 = (0..self.matrix.len()).map(|r| self.matrix[r][r]).sum();
        let total: f64 = self.matrix.iter().flatten().sum();
        if total == 0.0 {
            return 1.0;
        }
        diag / total
    }
}

fn term(e: usize, nr: usize, ns: usize) -> f64 {
    if e == 0 {
        return 0.0;
    }
    let e = e as f64;
    e * (e / (nr as f64 * ns as f64)).ln()
}

/// Partition entropy of the graph under the given block labels.
pub fn sbm_entropy(graph: &SocialGraph, blocks: &[usize]) -> Result<f64, NetError> {
    if blocks.len() != graph.len() {
        return Err(NetError::BadPartition(format!(
            "{} labels for {} actors",
            blocks.len(),
            graph.len()
        )));
    }
    if blocks.is_empty() {
        return Ok(0.0);
    }
    if let Some(&bad) = blocks.iter().find(|&&l| l >= blocks.len()) {
        return Err(NetError::BadPartition(format!(
            "block label {bad} out of range"
        )));
    }
    let b = blocks.iter().max().copied().unwrap_or(0) + 1;
    Ok(State::from_blocks(graph, blocks.to_vec(), b).entropy)
}

/// Incremental bookkeeping for the Metropolis walk: block sizes, the
/// edge-count matrix, and a running entropy updated move by move.
struct State {
    blocks: Vec<usize>,
    sizes: Vec<usize>,
    counts: Vec<Vec<usize>>,
    entropy: f64,
    total_edges: f64,
}

impl State {
    fn from_blocks(graph: &SocialGraph, blocks: Vec<usize>, b: usize) -> State {
        let mut sizes = vec![0usize; b];
        for &label in &blocks {
            sizes[label] += 1;
        }
        let mut counts = vec![vec![0usize; b]; b];
        for edge in graph.edges() {
            let (r, s) = (blocks[edge.a], blocks[edge.b]);
            if r == s {
                counts[r][r] += 2;
            } else {
                counts[r][s] += 1;
                counts[s][r] += 1;
            }
        }
        let mut state = State {
            blocks,
            sizes,
            counts,
            entropy: 0.0,
            total_edges: graph.edges().len() as f64,
        };
        state.entropy = state.full_entropy();
        state
    }

    fn block_count(&self) -> usize {
        self.sizes.len()
    }

    fn full_entropy(&self) -> f64 {
        let b = self.block_count();
        let mut sum = 0.0;
        for r in 0..b {
            for s in 0..b {
                sum += term(self.counts[r][s], self.sizes[r], self.sizes[s]);
            }
        }
        self.total_edges - 0.5 * sum
    }

    fn to_partition(&self) -> Partition {
        Partition {
            blocks: self.blocks.clone(),
            entropy: self.entropy,
            b: self.block_count(),
        }
    }

    /// Entropy change from moving one node of block r (with k_to[t] edges
    /// into each block t) over to block s. Only rows and columns r and s
    /// of the count matrix are touched, so the sum is over those.
    fn move_delta(&self, r: usize, s: usize, k_to: &[usize]) -> f64 {
        let b = self.block_count();
        let (nr, ns) = (self.sizes[r], self.sizes[s]);
        let (nr2, ns2) = (nr - 1, ns + 1);
        let new_rr = self.counts[r][r] - 2 * k_to[r];
        let new_ss = self.counts[s][s] + 2 * k_to[s];
        let new_rs = self.counts[r][s] + k_to[r] - k_to[s];

        let mut old = term(self.counts[r][r], nr, nr)
            + term(self.counts[s][s], ns, ns)
            + 2.0 * term(self.counts[r][s], nr, ns);
        let mut new = term(new_rr, nr2, nr2) + term(new_ss, ns2, ns2) + 2.0 * term(new_rs, nr2, ns2);
        for t in 0..b {
            if t == r || t == s {
                continue;
            }
            let nt = self.sizes[t];
            old += 2.0 * (term(self.counts[r][t], nr, nt) + term(self.counts[s][t], ns, nt));
            new += 2.0
                * (term(self.counts[r][t] - k_to[t], nr2, nt)
                    + term(self.counts[s][t] + k_to[t], ns2, nt));
        }
        -0.5 * (new - old)
    }

    fn apply_move(&mut self, v: usize, r: usize, s: usize, k_to: &[usize], delta: f64) {
        let b = self.block_count();
        self.blocks[v] = s;
        self.sizes[r] -= 1;
        self.sizes[s] += 1;
        self.counts[r][r] -= 2 * k_to[r];
        self.counts[s][s] += 2 * k_to[s];
        let cross = self.counts[r][s] + k_to[r] - k_to[s];
        self.counts[r][s] = cross;
        self.counts[s][r] = cross;
        for t in 0..b {
            if t == r || t == s {
                continue;
            }
            self.counts[r][t] -= k_to[t];
            self.counts[t][r] = self.counts[r][t];
            self.counts[s][t] += k_to[t];
            self.counts[t][s] = self.counts[s][t];
        }
        self.entropy += delta;
    }

    /// One sweep: n single-node move proposals, accepted when they lower
    /// the entropy and with probability exp(-delta) otherwise. Moves that
    /// would empty their source block are skipped so the level keeps its
    /// block count.
    fn sweep(&mut self, adj: &[Vec<(usize, f64)>], rng: &mut ChaCha8Rng) {
        let n = self.blocks.len();
        let b = self.block_count();
        if b < 2 {
            return;
        }
        for _ in 0..n {
            let v = rng.gen_range(0..n);
            let r = self.blocks[v];
            if self.sizes[r] == 1 {
                continue;
            }
            let mut s = rng.gen_range(0..b - 1);
            if s >= r {
                s += 1;
            }
            let mut k_to = vec![0usize; b];
            for &(u, _) in &adj[v] {
                k_to[self.blocks[u]] += 1;
            }
            let delta = self.move_delta(r, s, &k_to);
            if delta < 0.0 || rng.gen::<f64>() < (-delta).exp() {
                self.apply_move(v, r, s, &k_to, delta);
            }
        }
    }

    /// Entropy change from fusing blocks a and b into one.
    fn merge_delta(&self, a: usize, bl: usize) -> f64 {
        let b = self.block_count();
        let (na, nb) = (self.sizes[a], self.sizes[bl]);
        let nn = na + nb;
        let new_aa = self.counts[a][a] + self.counts[bl][bl] + 2 * self.counts[a][bl];
        let mut old = term(self.counts[a][a], na, na)
            + term(self.counts[bl][bl], nb, nb)
            + 2.0 * term(self.counts[a][bl], na, nb);
        let mut new = term(new_aa, nn, nn);
        for t in 0..b {
            if t == a || t == bl {
                continue;
            }
            let nt = self.sizes[t];
            old += 2.0 * (term(self.counts[a][t], na, nt) + term(self.counts[bl][t], nb, nt));
            new += 2.0 * term(self.counts[a][t] + self.counts[bl][t], nn, nt);
        }
        -0.5 * (new - old)
    }

    /// Fuse the pair of blocks whose merge raises the entropy least,
    /// then rebuild with compact labels (which also resets any float
    /// drift in the running entropy).
    fn merge_best(self, graph: &SocialGraph) -> State {
        let b = self.block_count();
        let mut best: Option<(f64, usize, usize)> = None;
        for x in 0..b {
            for y in (x + 1)..b {
                let delta = self.merge_delta(x, y);
                if best.map_or(true, |(d, _, _)| delta < d) {
                    best = Some((delta, x, y));
                }
            }
        }
        let (_, x, y) = best.expect("merge needs at least two blocks");
        let mut blocks = self.blocks;
        for label in &mut blocks {
            if *label == y {
                *label = x;
            }
        }
        let b = compact(&mut blocks);
        State::from_blocks(graph, blocks, b)
    }
}

/// Relabel to 0..B-1 preserving order; returns B.
fn compact(blocks: &mut [usize]) -> usize {
    let mut used: Vec<usize> = blocks.to_vec();
    used.sort_unstable();
    used.dedup();
    let map: BTreeMap<usize, usize> = used.iter().enumerate().map(|(i, &l)| (l, i)).collect();
    for label in blocks.iter_mut() {
        *label = map[label];
    }
    used.len()
}

/// Agglomerative search: start from singleton blocks, run Metropolis
/// sweeps at each level, then greedily merge one pair and descend until
/// the block count falls to the bottom of the range. The best state seen
/// inside the range wins; one snapshot per in-range level is kept for
/// cross-checking runs.
pub fn partition_search(
    graph: &SocialGraph,
    range: (usize, usize),
    sweeps_per_level: usize,
    seed: u64,
) -> Result<PartitionSearch, NetError> {
    let n = graph.len();
    let (b_min, b_max) = range;
    if n == 0 {
        return Err(NetError::BadPartition("no actors to partition".into()));
    }
    if b_min == 0 || b_min > b_max || b_max > n {
        return Err(NetError::BadPartition(format!(
            "block range {b_min}..={b_max} invalid for {n} actors"
        )));
    }

    let adj = graph.adjacency();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut state = State::from_blocks(graph, (0..n).collect(), n);
    let mut best: Option<Partition> = None;
    let mut samples = Vec::new();
    let in_range = |b: usize| b >= b_min && b <= b_max;
    let consider = |best: &mut Option<Partition>, state: &State| {
        let b = state.block_count();
        if in_range(b) && best.as_ref().map_or(true, |p| state.entropy < p.entropy) {
            *best = Some(state.to_partition());
        }
    };

    loop {
        let b = state.block_count();
        consider(&mut best, &state);
        if b > 1 {
            for _ in 0..sweeps_per_level {
                state.sweep(&adj, &mut rng);
                let drift = (state.entropy - state.full_entropy()).abs();
                assert!(drift < 1e-9, "entropy tracker drifted by {drift}");
                consider(&mut best, &state);
            }
        }
        if in_range(b) {
            samples.push(state.to_partition());
        }
        if b <= b_min {
            break;
        }
        state = state.merge_best(graph);
    }

    Ok(PartitionSearch {
        best: best.expect("descent visits every level down to b_min"),
        samples,
    })
}

/// Mean inter-block edge counts across partitions of the same graph. The
/// lowest-entropy partition is the alignment reference; every partition's
/// blocks (block counts may differ) are mapped onto reference labels by
/// largest overlap (ties to the lower label) before its edges are tallied.
pub fn block_correlation(
    graph: &SocialGraph,
    partitions: &[Partition],
) -> Result<BlockCorrelation, NetError> {
    if partitions.is_empty() {
        return Err(NetError::BadPartition("no partitions to compare".into()));
    }
    let n = graph.len();
    for p in partitions {
        if p.blocks.len() != n {
            return Err(NetError::BadPartition(
                "partitions cover different actor sets".into(),
            ));
        }
        if p.blocks.iter().any(|&l| l >= p.b) {
            return Err(NetError::BadPartition(
                "block label exceeds stated block count".into(),
            ));
        }
    }
    let reference = partitions
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.entropy.total_cmp(&b.1.entropy))
        .map(|(i, _)| i)
        .expect("nonempty by the check above");
    let ref_blocks = &partitions[reference].blocks;
    let ref_b = partitions[reference].b;

    let mut matrix = vec![vec![0.0_f64; ref_b]; ref_b];
    for p in partitions {
        let mut overlap = vec![vec![0usize; ref_b]; p.b];
        for i in 0..n {
            overlap[p.blocks[i]][ref_blocks[i]] += 1;
        }
        let map: Vec<usize> = overlap
            .iter()
            .map(|row| {
                let mut arg = 0;
                for (j, &v) in row.iter().enumerate() {
                    if v > row[arg] {
                        arg = j;
                    }
                }
                arg
            })
            .collect();
        for e in graph.edges() {
            let (r, s) = (map[p.blocks[e.a]], map[p.blocks[e.b]]);
            matrix[r][s] += 1.0;
            if r != s {
                matrix[s][r] += 1.0;
            }
        }
    }
    let scale = partitions.len() as f64;
    for row in &mut matrix {
        for v in row {
            *v /= scale;
        }
    }
    Ok(BlockCorrelation { matrix, reference })
}

/// Partition rendered for export: actor id to block label, plus the
/// entropy and block count.
pub fn partition_json(graph: &SocialGraph, partition: &Partition) -> Result<Value, NetError> {
    if partition.blocks.len() != graph.len() {
        return Err(NetError::BadPartition(format!(
            "{} labels for {} actors",
            partition.blocks.len(),
            graph.len()
        )));
    }
    let blocks: serde_json::Map<String, Value> = graph
        .actors()
        .iter()
        .zip(&partition.blocks)
        .map(|(actor, &label)| (actor.id.clone(), json!(label)))
        .collect();
    Ok(json!({
        "blocks": blocks,
        "entropy": partition.entropy,
        "B": partition.b,
    }))
}

/// Load a saved partition back against a graph. Labels come from the file;
/// the entropy is recomputed for this graph rather than trusted.
pub fn partition_from_json(graph: &SocialGraph, value: &Value) -> Result<Partition, NetError> {
    let map = value["blocks"]
        .as_object()
        .ok_or_else(|| NetError::BadPartition("'blocks' must be an object".into()))?;
    let mut blocks = Vec::with_capacity(graph.len());
    for actor in graph.actors() {
        let label = map
            .get(&actor.id)
            .and_then(Value::as_u64)
            .ok_or_else(|| NetError::BadPartition(format!("no block for actor {}", actor.id)))?;
        blocks.push(label as usize);
    }
    let entropy = sbm_entropy(graph, &blocks)?;
    let b = blocks.iter().max().map_or(0, |m| m + 1);
    Ok(Partition { blocks, entropy, b })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn csv_graph(ids: &[String], edges: &[(String, String, f64)]) -> SocialGraph {
        let mut actors = String::from("id,name,municipality,typology,lat,lon\n");
        for id in ids {
            actors.push_str(&format!("{id},{id},Charala,Social,6.0,-73.0\n"));
        }
        let mut lines = String::from("src,dst,weight,relation\n");
        for (a, b, w) in edges {
            lines.push_str(&format!("{a},{b},{w},tie\n"));
        }
        SocialGraph::from_csv(actors.as_bytes(), lines.as_bytes()).unwrap()
    }

    fn complete(ids: &[&str]) -> SocialGraph {
        let ids: Vec<String> = ids.iter().map(|s| s.to_string()).collect();
        let mut edges = Vec::new();
        for i in 0..ids.len() {
            for j in (i + 1)..ids.len() {
                edges.push((ids[i].clone(), ids[j].clone(), 1.0));
            }
        }
        csv_graph(&ids, &edges)
    }

    /// Two tight four-cliques joined by a single bridge tie.
    fn two_cliques() -> SocialGraph {
        let ids: Vec<String> = ["a1", "a2", "a3", "a4", "b1", "b2", "b3", "b4"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let mut edges = Vec::new();
        for group in [&ids[..4], &ids[4..]] {
            for i in 0..4 {
                for j in (i + 1)..4 {
                    edges.push((group[i].clone(), group[j].clone(), 1.0));
                }
            }
        }
        edges.push(("a1".to_string(), "b1".to_string(), 1.0));
        csv_graph(&ids, &edges)
    }

    #[test]
    fn entropy_of_a_clique_under_three_groupings() {
        let g = complete(&["a", "b", "c", "d"]);
        let one = sbm_entropy(&g, &[0, 0, 0, 0]).unwrap();
        let halves = sbm_entropy(&g, &[0, 0, 1, 1]).unwrap();
        let singles = sbm_entropy(&g, &[0, 1, 2, 3]).unwrap();
        assert!((one - (6.0 - 6.0 * 0.75f64.ln())).abs() < 1e-12);
        assert!((halves - (6.0 + 2.0 * std::f64::consts::LN_2)).abs() < 1e-12);
        assert!((singles - 6.0).abs() < 1e-12);
    }

    #[test]
    fn entropy_ignores_weights_and_checks_labels() {
        let ids: Vec<String> = ["a", "b", "c"].iter().map(|s| s.to_string()).collect();
        let light = csv_graph(
            &ids,
            &[("a".into(), "b".into(), 1.0), ("b".into(), "c".into(), 1.0)],
        );
        let heavy = csv_graph(
            &ids,
            &[("a".into(), "b".into(), 9.0), ("b".into(), "c".into(), 1.0)],
        );
        let split = [0, 0, 1];
        assert_eq!(
            sbm_entropy(&light, &split).unwrap(),
            sbm_entropy(&heavy, &split).unwrap()
        );

        assert!(matches!(
            sbm_entropy(&light, &[0, 0]),
            Err(NetError::BadPartition(_))
        ));
        assert!(matches!(
            sbm_entropy(&light, &[0, 0, 7]),
            Err(NetError::BadPartition(_))
        ));

        let empty = SocialGraph::from_csv(
            "id,name,municipality,typology,lat,lon\n".as_bytes(),
            "src,dst,weight,relation\n".as_bytes(),
        )
        .unwrap();
        assert_eq!(sbm_entropy(&empty, &[]).unwrap(), 0.0);
    }

    #[test]
    fn search_recovers_the_two_cliques() {
        let g = two_cliques();
        let found = partition_search(&g, (2, 2), 30, 11).unwrap();
        assert_eq!(found.best.b, 2);
        assert_eq!(found.samples.len(), 1);
        let blocks = &found.best.blocks;
        assert!(blocks[..4].iter().all(|&l| l == blocks[0]));
        assert!(blocks[4..].iter().all(|&l| l == blocks[4]));
        assert_ne!(blocks[0], blocks[4]);
        let recomputed = sbm_entropy(&g, blocks).unwrap();
        assert!((found.best.entropy - recomputed).abs() < 1e-9);

        let again = partition_search(&g, (2, 2), 30, 11).unwrap();
        assert_eq!(found.best, again.best);
    }

    #[test]
    fn search_samples_one_state_per_level_in_range() {
        let g = two_cliques();
        let found = partition_search(&g, (2, 4), 5, 3).unwrap();
        assert_eq!(found.samples.len(), 3);
        assert_eq!(
            found.samples.iter().map(|p| p.b).collect::<Vec<_>>(),
            vec![4, 3, 2]
        );
        for sample in &found.samples {
            let recomputed = sbm_entropy(&g, &sample.blocks).unwrap();
            assert!((sample.entropy - recomputed).abs() < 1e-9);
            assert!(found.best.entropy <= sample.entropy);
        }
    }

    #[test]
    fn search_rejects_bad_ranges() {
        let g = two_cliques();
        for range in [(0, 2), (3, 2), (2, 99)] {
            assert!(matches!(
                partition_search(&g, range, 5, 1),
                Err(NetError::BadPartition(_))
            ));
        }
    }

    #[test]
    fn search_splits_a_planted_two_block_graph() {
        for seed in [1u64, 2, 3] {
            let mut rng = ChaCha8Rng::seed_from_u64(900 + seed);
            let n = 30;
            let ids: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
            let planted = |i: usize| usize::from(i >= n / 2);
            let mut edges = Vec::new();
            for i in 0..n {
                for j in (i + 1)..n {
                    let p = if planted(i) == planted(j) { 0.9 } else { 0.05 };
                    if rng.gen::<f64>() < p {
                        edges.push((ids[i].clone(), ids[j].clone(), 1.0));
                    }
                }
            }
            let g = csv_graph(&ids, &edges);
            let found = partition_search(&g, (2, 2), 40, seed).unwrap();
            let matches: usize = (0..n)
                .filter(|&i| found.best.blocks[i] == planted(i))
                .count();
            let agreement = matches.max(n - matches);
            assert!(agreement >= 27, "seed {seed}: {agreement}/{n} recovered");

            // recovered blocks keep the edge mass on the diagonal
            let mut all = vec![found.best.clone()];
            all.extend(found.samples.iter().cloned());
            let corr = block_correlation(&g, &all).unwrap();
            let diag = (corr.matrix[0][0] + corr.matrix[1][1]) / 2.0;
            let off = corr.matrix[0][1];
            assert!(off < 0.2 * diag, "seed {seed}: off {off} vs diag {diag}");
        }
    }

    #[test]
    fn correlation_averages_aligned_edge_counts() {
        let g = two_cliques();
        let planted = |entropy| Partition {
            blocks: vec![0, 0, 0, 0, 1, 1, 1, 1],
            entropy,
            b: 2,
        };
        // each clique holds 6 edges; the bridge joins the blocks
        let same = block_correlation(&g, &[planted(1.0), planted(1.0), planted(1.0)]).unwrap();
        assert_eq!(same.reference, 0);
        assert_eq!(same.matrix, vec![vec![6.0, 1.0], vec![1.0, 6.0]]);
        assert!((same.within_share() - 12.0 / 14.0).abs() < 1e-12);

        // swapped labels align back onto the reference
        let flipped = Partition {
            blocks: vec![1, 1, 1, 1, 0, 0, 0, 0],
            entropy: 2.0,
            b: 2,
        };
        let aligned = block_correlation(&g, &[planted(1.0), flipped]).unwrap();
        assert_eq!(aligned.matrix, vec![vec![6.0, 1.0], vec![1.0, 6.0]]);

        // a4 strays into the other block: its three clique edges cross over
        let strayed = Partition {
            blocks: vec![0, 0, 0, 1, 1, 1, 1, 1],
            entropy: 2.0,
            b: 2,
        };
        let off = block_correlation(&g, &[planted(1.0), strayed]).unwrap();
        assert_eq!(off.matrix, vec![vec![4.5, 2.5], vec![2.5, 6.0]]);

        // a finer partition is coarsened onto the reference labels
        let split = Partition {
            blocks: vec![0, 0, 0, 0, 1, 1, 2, 2],
            entropy: 2.0,
            b: 3,
        };
        let coarsened = block_correlation(&g, &[planted(1.0), split]).unwrap();
        assert_eq!(coarsened.matrix, vec![vec![6.0, 1.0], vec![1.0, 6.0]]);

        assert!(matches!(
            block_correlation(&g, &[]),
            Err(NetError::BadPartition(_))
        ));
        assert!(matches!(
            block_correlation(
                &g,
                &[Partition { blocks: vec![0], entropy: 0.0, b: 1 }]
            ),
            Err(NetError::BadPartition(_))
        ));
    }

    #[test]
    fn partition_reports_labels_by_actor_id() {
        let g = complete(&["a", "b", "c", "d"]);
        let partition = Partition {
            blocks: vec![0, 0, 1, 1],
            entropy: 7.386,
            b: 2,
        };
        let report = partition_json(&g, &partition).unwrap();
        assert_eq!(report["B"], 2);
        assert_eq!(report["blocks"]["a"], 0);
        assert_eq!(report["blocks"]["d"], 1);
        assert!((report["entropy"].as_f64().unwrap() - 7.386).abs() < 1e-12);

        // reload recovers labels and recomputes the entropy for this graph
        let reloaded = partition_from_json(&g, &report).unwrap();
        assert_eq!(reloaded.blocks, partition.blocks);
        assert_eq!(reloaded.b, 2);
        assert!((reloaded.entropy - sbm_entropy(&g, &partition.blocks).unwrap()).abs() < 1e-12);
        assert!(matches!(
            partition_from_json(&g, &json!({"blocks": {"a": 0}})),
            Err(NetError::BadPartition(_))
        ));

        let short = Partition {
            blocks: vec![0],
            entropy: 0.0,
            b: 1,
        };
        assert!(matches!(
            partition_json(&g, &short),
            Err(NetError::BadPartition(_))
        ));
    }
}
