//! Trees built over a layering partition and exact distance machinery on
//! them: the canonic support tree, its uniformly weighted variant, the
//! Steiner-augmented variant, LCA-based distance queries, and compact
//! distance labels from a centroid decomposition.
//!
//! All edge weights are uniform per tree and stored doubled
//! (`weight_times_two`), so half-integral weights stay exact integers.
//! Every distance returned by this module is in half-units: divide by 2
//! for the metric value.

use std::collections::VecDeque;
use std::io::{BufRead, Read, Write};

use rayon::prelude::*;

use crate::graph::{bfs_fill, Graph, VertexId, UNREACHED};
use crate::layering::LayeringPartition;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeKind {
    /// Unweighted support tree: each cluster hangs off one vertex of the
    /// parent cluster.
    Canonic,
    /// Same topology, uniform integer weight on every edge.
    Scaled,
    /// One Steiner point per non-root cluster, uniform (possibly
    /// half-integral) weight.
    Steiner,
}

impl TreeKind {
    pub fn as_str(self) -> &'static str {
        match self {
            TreeKind::Canonic => "canonic",
            TreeKind::Scaled => "scaled",
            TreeKind::Steiner => "steiner",
        }
    }

    fn from_str(s: &str) -> Option<TreeKind> {
        match s {
            "canonic" => Some(TreeKind::Canonic),
            "scaled" => Some(TreeKind::Scaled),
            "steiner" => Some(TreeKind::Steiner),
            _ => None,
        }
    }
}

/// A rooted tree over the graph's vertices, possibly with Steiner points
/// appended after them. Immutable after build; queries are pure.
#[derive(Debug, Clone)]
pub struct EmbeddingTree {
    kind: TreeKind,
    /// parent[root] == root.
    parent: Vec<u32>,
    root: u32,
    graph_vertex_count: usize,
    weight_times_two: u32,
    // derived: children in CSR form, hop depths, binary lifting table
    child_offsets: Vec<usize>,
    children: Vec<u32>,
    depth: Vec<u32>,
    up: Vec<u32>, // levels * node_count, level-major
    levels: usize,
}

impl EmbeddingTree {
    /// Assemble from a parent array. `parent[root] == root`; Steiner nodes,
    /// if any, occupy ids `graph_vertex_count..`.
    pub fn from_parts(
        kind: TreeKind,
        parent: Vec<u32>,
        root: u32,
        graph_vertex_count: usize,
        weight_times_two: u32,
    ) -> EmbeddingTree {
        let n = parent.len();
        assert!(n > 0 && (root as usize) < n && parent[root as usize] == root);
        assert!(weight_times_two >= 1);

        let mut degree = vec![0usize; n];
        for v in 0..n {
            if v as u32 != root {
                degree[parent[v] as usize] += 1;
            }
        }
        let mut child_offsets = Vec::with_capacity(n + 1);
        let mut acc = 0;
        child_offsets.push(0);
        for d in &degree {
            acc += d;
            child_offsets.push(acc);
        }
        let mut cursor = child_offsets.clone();
        let mut children = vec![0u32; acc];
        for v in 0..n as u32 {
            if v != root {
                let p = parent[v as usize] as usize;
                children[cursor[p]] = v;
                cursor[p] += 1;
            }
        }

        // depths by BFS from the root over the child lists
        let mut depth = vec![u32::MAX; n];
        let mut queue = VecDeque::new();
        depth[root as usize] = 0;
        queue.push_back(root);
        let mut visited = 1usize;
        while let Some(u) = queue.pop_front() {
            for &c in &children[child_offsets[u as usize]..child_offsets[u as usize + 1]] {
                depth[c as usize] = depth[u as usize] + 1;
                visited += 1;
                queue.push_back(c);
            }
        }
        assert_eq!(visited, n, "parent array contains a cycle");

        let max_depth = depth.iter().copied().max().unwrap();
        let levels = (32 - max_depth.leading_zeros()).max(1) as usize;
        let mut up = vec![root; levels * n];
        up[..n].copy_from_slice(&parent);
        for l in 1..levels {
            for v in 0..n {
                up[l * n + v] = up[(l - 1) * n + up[(l - 1) * n + v] as usize];
            }
        }

        EmbeddingTree {
            kind,
            parent,
            root,
            graph_vertex_count,
            weight_times_two,
            child_offsets,
            children,
            depth,
            up,
            levels,
        }
    }

    pub fn kind(&self) -> TreeKind {
        self.kind
    }

    pub fn node_count(&self) -> usize {
        self.parent.len()
    }

    pub fn graph_vertex_count(&self) -> usize {
        self.graph_vertex_count
    }

    pub fn steiner_count(&self) -> usize {
        self.node_count() - self.graph_vertex_count
    }

    pub fn is_steiner(&self, v: u32) -> bool {
        v as usize >= self.graph_vertex_count
    }

    pub fn root(&self) -> u32 {
        self.root
    }

    pub fn weight_times_two(&self) -> u32 {
        self.weight_times_two
    }

    pub fn parent_of(&self, v: u32) -> Option<u32> {
        if v == self.root {
            None
        } else {
            Some(self.parent[v as usize])
        }
    }

    pub fn children_of(&self, v: u32) -> &[u32] {
        &self.children[self.child_offsets[v as usize]..self.child_offsets[v as usize + 1]]
    }

    fn lca(&self, mut a: u32, mut b: u32) -> u32 {
        let n = self.node_count();
        if self.depth[a as usize] < self.depth[b as usize] {
            std::mem::swap(&mut a, &mut b);
        }
        let mut diff = self.depth[a as usize] - self.depth[b as usize];
        let mut l = 0;
        while diff > 0 {
            if diff & 1 == 1 {
                a = self.up[l * n + a as usize];
            }
            diff >>= 1;
            l += 1;
        }
        if a == b {
            return a;
        }
        for l in (0..self.levels).rev() {
            let ua = self.up[l * n + a as usize];
            let ub = self.up[l * n + b as usize];
            if ua != ub {
                a = ua;
                b = ub;
            }
        }
        self.parent[a as usize]
    }

    /// Exact tree distance between any two nodes, in half-units.
    pub fn distance_half(&self, u: u32, v: u32) -> u64 {
        let l = self.lca(u, v);
        let hops =
            (self.depth[u as usize] + self.depth[v as usize] - 2 * self.depth[l as usize]) as u64;
        hops * self.weight_times_two as u64
    }

    /// Like [`distance_half`](Self::distance_half) but only for graph
    /// vertices; Steiner points are rejected.
    pub fn graph_pair_distance_half(&self, u: u32, v: u32) -> Result<u64> {
        if self.is_steiner(u) {
            return Err(Error::SteinerQuery(u));
        }
        if self.is_steiner(v) {
            return Err(Error::SteinerQuery(v));
        }
        Ok(self.distance_half(u, v))
    }

    /// Fill `out` (length `node_count`) with hop counts from `source` over
    /// the tree. Multiply by `weight_times_two` for half-unit distances.
    pub fn hop_row(&self, source: u32, out: &mut [u32], queue: &mut VecDeque<u32>) {
        out.fill(u32::MAX);
        queue.clear();
        out[source as usize] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let d = out[u as usize] + 1;
            let mut push = |v: u32, out: &mut [u32], queue: &mut VecDeque<u32>| {
                if out[v as usize] == u32::MAX {
                    out[v as usize] = d;
                    queue.push_back(v);
                }
            };
            if u != self.root {
                push(self.parent[u as usize], out, queue);
            }
            for &c in self.children_of(u) {
                push(c, out, queue);
            }
        }
    }

    /// Parent-array text form: a `kind weight_times_two steiner_count`
    /// header, a node count line, then one parent per line (`-1` for the
    /// root). Node ids are implicit line order, graph vertices first.
    pub fn write_text<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(
            w,
            "{} {} {}",
            self.kind.as_str(),
            self.weight_times_two,
            self.steiner_count()
        )?;
        writeln!(w, "{}", self.node_count())?;
        for v in 0..self.node_count() as u32 {
            if v == self.root {
                writeln!(w, "-1")?;
            } else {
                writeln!(w, "{}", self.parent[v as usize])?;
            }
        }
        Ok(())
    }

    pub fn read_text<R: BufRead>(r: R) -> Result<EmbeddingTree> {
        let mut lines = r.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::Format("missing tree header".into()))??;
        let mut parts = header.split_whitespace();
        let kind = parts
            .next()
            .and_then(TreeKind::from_str)
            .ok_or_else(|| Error::Format(format!("bad tree kind in header: {header}")))?;
        let w2: u32 = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Format("bad weight in tree header".into()))?;
        let steiner: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Format("bad steiner count in tree header".into()))?;
        let count: usize = lines
            .next()
            .ok_or_else(|| Error::Format("missing node count".into()))??
            .trim()
            .parse()
            .map_err(|_| Error::Format("bad node count".into()))?;
        let mut parent = Vec::with_capacity(count);
        let mut root = None;
        for v in 0..count {
            let line = lines
                .next()
                .ok_or_else(|| Error::Format("truncated parent array".into()))??;
            let p: i64 = line
                .trim()
                .parse()
                .map_err(|_| Error::Format(format!("bad parent line: {line}")))?;
            if p < 0 {
                root = Some(v as u32);
                parent.push(v as u32);
            } else {
                parent.push(p as u32);
            }
        }
        let root = root.ok_or_else(|| Error::Format("no root in parent array".into()))?;
        Ok(EmbeddingTree::from_parts(
            kind,
            parent,
            root,
            count - steiner,
            w2,
        ))
    }
}

/// Support vertex of each non-root cluster: the smallest-id vertex of the
/// parent cluster with a graph neighbor inside the cluster.
fn support_vertices(g: &Graph, lp: &LayeringPartition) -> Vec<Option<VertexId>> {
    let mut support: Vec<Option<VertexId>> = vec![None; lp.clusters.len()];
    for v in 0..g.vertex_count() as VertexId {
        let layer = lp.layer_of[v as usize];
        if layer == 0 {
            continue;
        }
        let c = lp.cluster_of[v as usize] as usize;
        for &u in g.neighbors(v) {
            if lp.layer_of[u as usize] + 1 == layer {
                debug_assert_eq!(
                    Some(lp.cluster_of[u as usize]),
                    lp.clusters[c].parent,
                    "down edges of a cluster all reach its parent cluster"
                );
                support[c] = Some(match support[c] {
                    Some(cur) => cur.min(u),
                    None => u,
                });
            }
        }
    }
    support
}

/// Build the canonic tree: every vertex of a non-root cluster becomes a
/// child of the cluster's support vertex. Linear time.
pub fn build_canonic_tree(g: &Graph, lp: &LayeringPartition) -> EmbeddingTree {
    let n = g.vertex_count();
    let support = support_vertices(g, lp);
    let mut parent: Vec<u32> = (0..n as u32).collect();
    for (c, cluster) in lp.clusters.iter().enumerate() {
        if cluster.layer == 0 {
            continue;
        }
        let x = support[c].expect("non-root cluster has a support vertex");
        for &v in &cluster.vertices {
            parent[v as usize] = x;
        }
    }
    EmbeddingTree::from_parts(TreeKind::Canonic, parent, lp.source, n, 2)
}

/// The uniform weight that makes the scaled tree non-contractive: the
/// largest graph distance across any tree edge. One BFS per distinct
/// support vertex, parallel over supports.
pub fn max_edge_graph_distance(g: &Graph, tree: &EmbeddingTree) -> u16 {
    assert_eq!(tree.kind(), TreeKind::Canonic);
    let n = g.vertex_count();
    let supports: Vec<u32> = (0..n as u32)
        .filter(|&v| !tree.children_of(v).is_empty())
        .collect();
    supports
        .par_iter()
        .map_init(
            || (vec![UNREACHED; n], VecDeque::new()),
            |(dist, queue), &x| {
                bfs_fill(g, x, dist, queue);
                tree.children_of(x)
                    .iter()
                    .map(|&c| dist[c as usize])
                    .max()
                    .unwrap_or(0)
            },
        )
        .max()
        .unwrap_or(0)
}

/// Same topology as the canonic tree with uniform integer weight `weight`.
pub fn build_scaled_tree(tree: &EmbeddingTree, weight: u16) -> Result<EmbeddingTree> {
    assert_eq!(tree.kind(), TreeKind::Canonic);
    if weight < 1 {
        return Err(Error::ZeroWeight);
    }
    Ok(EmbeddingTree::from_parts(
        TreeKind::Scaled,
        tree.parent.clone(),
        tree.root(),
        tree.graph_vertex_count(),
        2 * weight as u32,
    ))
}

/// Steiner-augmented tree: one new point per non-root cluster, adjacent to
/// every vertex of the cluster and to the cluster's support vertex, with
/// uniform weight `max(delta_s, ell) / 2` (stored exactly in half-units).
pub fn build_steiner_tree(
    lp: &LayeringPartition,
    canonic: &EmbeddingTree,
    delta_s: u16,
    ell: u16,
) -> EmbeddingTree {
    assert_eq!(canonic.kind(), TreeKind::Canonic);
    let n = canonic.graph_vertex_count();
    let non_root: Vec<usize> = (0..lp.clusters.len())
        .filter(|&c| lp.clusters[c].layer != 0)
        .collect();
    let mut parent: Vec<u32> = (0..(n + non_root.len()) as u32).collect();
    for (idx, &c) in non_root.iter().enumerate() {
        let steiner = (n + idx) as u32;
        let members = &lp.clusters[c].vertices;
        // the canonic tree already points every member at the support vertex
        let support = canonic.parent[members[0] as usize];
        parent[steiner as usize] = support;
        for &v in members {
            parent[v as usize] = steiner;
        }
    }
    let w2 = (delta_s as u32).max(ell as u32).max(1);
    EmbeddingTree::from_parts(TreeKind::Steiner, parent, lp.source, n, w2)
}

/// One label entry per centroid level: which centroid, and the half-unit
/// distance to it within the component that level was split from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LabelEntry {
    pub level: u8,
    pub centroid: u32,
    pub dist_half: u32,
}

/// Distance labels from a recursive centroid decomposition; every label has
/// at most `floor(log2 node_count) + 1` entries.
#[derive(Debug, Clone)]
pub struct DistanceLabeling {
    labels: Vec<Vec<LabelEntry>>,
}

impl DistanceLabeling {
    pub fn label(&self, v: u32) -> &[LabelEntry] {
        &self.labels[v as usize]
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn max_label_len(&self) -> usize {
        self.labels.iter().map(|l| l.len()).max().unwrap_or(0)
    }

    /// Length-prefixed binary records, little-endian:
    /// `u32 node_count`, then per node `u8 len` followed by `len` entries of
    /// `(u8 level, u32 centroid, u32 dist_half)`.
    pub fn write_binary<W: Write>(&self, mut w: W) -> Result<()> {
        w.write_all(&(self.labels.len() as u32).to_le_bytes())?;
        for label in &self.labels {
            w.write_all(&[label.len() as u8])?;
            for e in label {
                w.write_all(&[e.level])?;
                w.write_all(&e.centroid.to_le_bytes())?;
                w.write_all(&e.dist_half.to_le_bytes())?;
            }
        }
        Ok(())
    }

    pub fn read_binary<R: Read>(mut r: R) -> Result<DistanceLabeling> {
        let mut buf4 = [0u8; 4];
        let mut buf1 = [0u8; 1];
        r.read_exact(&mut buf4)?;
        let n = u32::from_le_bytes(buf4) as usize;
        let mut labels = Vec::with_capacity(n);
        for _ in 0..n {
            r.read_exact(&mut buf1)?;
            let len = buf1[0] as usize;
            let mut label = Vec::with_capacity(len);
            for _ in 0..len {
                r.read_exact(&mut buf1)?;
                let level = buf1[0];
                r.read_exact(&mut buf4)?;
                let centroid = u32::from_le_bytes(buf4);
                r.read_exact(&mut buf4)?;
                let dist_half = u32::from_le_bytes(buf4);
                label.push(LabelEntry {
                    level,
                    centroid,
                    dist_half,
                });
            }
            labels.push(label);
        }
        Ok(DistanceLabeling { labels })
    }
}

/// Recursive centroid decomposition of the tree. Each node's label lists
/// its distance to the centroid at every level of its centroid-ancestor
/// chain.
pub fn build_distance_labels(tree: &EmbeddingTree) -> DistanceLabeling {
    let n = tree.node_count();
    let w2 = tree.weight_times_two();
    let mut labels: Vec<Vec<LabelEntry>> = vec![Vec::new(); n];
    let mut removed = vec![false; n];
    let mut size = vec![0u32; n];
    let mut order: Vec<u32> = Vec::with_capacity(n); // scratch: DFS order of a component
    let mut from: Vec<u32> = vec![0; n]; // scratch: DFS parent within a component

    let neighbors = |v: u32, tree: &EmbeddingTree| -> Vec<u32> {
        let mut nb: Vec<u32> = tree.children_of(v).to_vec();
        if let Some(p) = tree.parent_of(v) {
            nb.push(p);
        }
        nb
    };

    // (component representative, level)
    let mut stack: Vec<(u32, u8)> = vec![(tree.root(), 0)];
    while let Some((start, level)) = stack.pop() {
        // collect the component and subtree sizes rooted at `start`
        order.clear();
        order.push(start);
        from[start as usize] = start;
        let mut head = 0;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for v in neighbors(u, tree) {
                if !removed[v as usize] && v != from[u as usize] {
                    from[v as usize] = u;
                    order.push(v);
                }
            }
        }
        for &v in order.iter() {
            size[v as usize] = 1;
        }
        for &v in order.iter().rev() {
            if v != start {
                size[from[v as usize] as usize] += size[v as usize];
            }
        }
        let total = size[start as usize];

        // reroot towards the centroid; sizes are patched along the way so
        // neighbor subtree weights stay valid relative to the current node
        let threshold = (total + 1) / 2;
        let mut centroid = start;
        let mut prev = start;
        'walk: loop {
            for v in neighbors(centroid, tree) {
                if removed[v as usize] || v == prev {
                    continue;
                }
                if size[v as usize] >= threshold {
                    size[centroid as usize] = total - size[v as usize];
                    size[v as usize] = total;
                    prev = centroid;
                    centroid = v;
                    continue 'walk;
                }
            }
            break;
        }

        // distances from the centroid across the component
        order.clear();
        order.push(centroid);
        from[centroid as usize] = centroid;
        labels[centroid as usize].push(LabelEntry {
            level,
            centroid,
            dist_half: 0,
        });
        let mut dist: Vec<u32> = vec![0];
        let mut head = 0;
        while head < order.len() {
            let u = order[head];
            let du = dist[head];
            head += 1;
            for v in neighbors(u, tree) {
                if !removed[v as usize] && v != from[u as usize] {
                    from[v as usize] = u;
                    order.push(v);
                    dist.push(du + w2);
                    labels[v as usize].push(LabelEntry {
                        level,
                        centroid,
                        dist_half: du + w2,
                    });
                }
            }
        }

        removed[centroid as usize] = true;
        for v in neighbors(centroid, tree) {
            if !removed[v as usize] {
                stack.push((v, level + 1));
            }
        }
    }

    DistanceLabeling { labels }
}

/// Distance between two labelled nodes, in half-units: the minimum of
/// `dist_a + dist_b` over the shared prefix of centroid levels. Exact.
pub fn label_query(a: &[LabelEntry], b: &[LabelEntry]) -> u64 {
    let mut best = u64::MAX;
    for (ea, eb) in a.iter().zip(b.iter()) {
        debug_assert_eq!(ea.level, eb.level);
        if ea.centroid != eb.centroid {
            break;
        }
        best = best.min(ea.dist_half as u64 + eb.dist_half as u64);
    }
    debug_assert!(best != u64::MAX, "labels share the root level by construction");
    best
}

/// Hop-distance rows for every listed source, parallel. Used by the
/// distortion pipeline; rows are hop counts, scale by `weight_times_two`.
pub fn hop_rows(tree: &EmbeddingTree, sources: &[u32]) -> Vec<Vec<u32>> {
    sources
        .par_iter()
        .map_init(
            || (vec![u32::MAX; tree.node_count()], VecDeque::new()),
            |(buf, queue), &s| {
                tree.hop_row(s, buf, queue);
                buf.clone()
            },
        )
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::layering::build_layering_partition;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<(VertexId, VertexId)> = (0..n)
            .map(|i| (i as VertexId, ((i + 1) % n) as VertexId))
            .collect();
        Graph::from_edges(n, &edges)
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<(VertexId, VertexId)> = (0..n - 1)
            .map(|i| (i as VertexId, (i + 1) as VertexId))
            .collect();
        Graph::from_edges(n, &edges)
    }

    fn tree_edges(t: &EmbeddingTree) -> Vec<(u32, u32)> {
        let mut edges = Vec::new();
        for v in 0..t.node_count() as u32 {
            if let Some(p) = t.parent_of(v) {
                edges.push((p.min(v), p.max(v)));
            }
        }
        edges.sort_unstable();
        edges
    }

    #[test]
    fn canonic_tree_on_cycle() {
        let g = cycle(6);
        let lp = build_layering_partition(&g, 0);
        let h = build_canonic_tree(&g, &lp);
        assert_eq!(
            tree_edges(&h),
            vec![(0, 1), (0, 5), (1, 2), (1, 4), (2, 3)]
        );
        assert_eq!(h.weight_times_two(), 2);
        assert_eq!(h.steiner_count(), 0);
    }

    #[test]
    fn canonic_tree_of_tree_is_bfs_tree() {
        let g = path(6);
        let lp = build_layering_partition(&g, 2);
        let h = build_canonic_tree(&g, &lp);
        let mut want: Vec<(u32, u32)> = (0..5).map(|i| (i, i + 1)).collect();
        want.sort_unstable();
        assert_eq!(tree_edges(&h), want);
    }

    #[test]
    fn edge_weight_on_cycle() {
        let g = cycle(6);
        let lp = build_layering_partition(&g, 0);
        let h = build_canonic_tree(&g, &lp);
        // tree edge 1-4 spans graph distance 3
        assert_eq!(max_edge_graph_distance(&g, &h), 3);
    }

    #[test]
    fn edge_weight_on_tree_is_one() {
        let g = path(9);
        let lp = build_layering_partition(&g, 4);
        let h = build_canonic_tree(&g, &lp);
        assert_eq!(max_edge_graph_distance(&g, &h), 1);
    }

    #[test]
    fn scaled_tree_distances() {
        let g = cycle(6);
        let lp = build_layering_partition(&g, 0);
        let h = build_canonic_tree(&g, &lp);
        let ell = max_edge_graph_distance(&g, &h);
        let hl = build_scaled_tree(&h, ell).unwrap();
        // 4 and 5 are three tree hops apart, so weight 3 puts them at 9
        assert_eq!(hl.distance_half(4, 5), 18); // 9 in half-units
        assert!(build_scaled_tree(&h, 0).is_err());
    }

    #[test]
    fn steiner_tree_on_cycle() {
        let g = cycle(6);
        let lp = build_layering_partition(&g, 0);
        let h = build_canonic_tree(&g, &lp);
        let ell = max_edge_graph_distance(&g, &h);
        let hp = build_steiner_tree(&lp, &h, 2, ell);
        // weight = max(2, 3) / 2 = 1.5
        assert_eq!(hp.weight_times_two(), 3);
        assert_eq!(hp.steiner_count(), 3);
        assert_eq!(hp.node_count(), 9);
        // every Steiner point's neighbors: its cluster plus the support
        for s in 6..9u32 {
            assert!(hp.is_steiner(s));
        }
        // 4 -> p({2,4}) -> 1 -> p({1,5}) -> 5 is 4 hops of 1.5 = 6
        assert_eq!(hp.distance_half(4, 5), 12);
    }

    #[test]
    fn steiner_points_on_tree_input_have_degree_two() {
        let g = path(5);
        let lp = build_layering_partition(&g, 0);
        let h = build_canonic_tree(&g, &lp);
        let hp = build_steiner_tree(&lp, &h, 0, 1);
        assert_eq!(hp.weight_times_two(), 1); // weight 1/2
        for s in 5..hp.node_count() as u32 {
            let deg = hp.children_of(s).len() + usize::from(hp.parent_of(s).is_some());
            assert_eq!(deg, 2);
        }
        // distances collapse back to the graph metric
        for u in 0..5u32 {
            for v in 0..5u32 {
                assert_eq!(hp.distance_half(u, v), 2 * u.abs_diff(v) as u64);
            }
        }
    }

    #[test]
    fn tree_distance_matches_bfs_oracle() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let n = rng.gen_range(2..200usize);
            let edges: Vec<(u32, u32)> = (1..n as u32)
                .map(|v| (rng.gen_range(0..v), v))
                .collect();
            let g = Graph::from_edges(n, &edges);
            let lp = build_layering_partition(&g, 0);
            let h = build_canonic_tree(&g, &lp);
            // h is the BFS tree of a tree, i.e. the tree itself
            let mut hops = vec![u32::MAX; n];
            let mut queue = VecDeque::new();
            for u in 0..n as u32 {
                h.hop_row(u, &mut hops, &mut queue);
                for v in 0..n as u32 {
                    assert_eq!(h.distance_half(u, v), hops[v as usize] as u64 * 2);
                }
            }
        }
    }

    #[test]
    fn root_distance_zero() {
        let g = path(4);
        let lp = build_layering_partition(&g, 0);
        let h = build_canonic_tree(&g, &lp);
        assert_eq!(h.distance_half(0, 0), 0);
        assert_eq!(h.distance_half(0, 3), 6);
    }

    #[test]
    fn steiner_rejected_in_graph_pair_mode() {
        let g = cycle(6);
        let lp = build_layering_partition(&g, 0);
        let h = build_canonic_tree(&g, &lp);
        let hp = build_steiner_tree(&lp, &h, 2, 3);
        assert!(hp.graph_pair_distance_half(0, 6).is_err());
        assert!(hp.graph_pair_distance_half(7, 0).is_err());
        assert!(hp.graph_pair_distance_half(0, 3).is_ok());
    }

    #[test]
    fn labels_single_node() {
        let t = EmbeddingTree::from_parts(TreeKind::Canonic, vec![0], 0, 1, 2);
        let labels = build_distance_labels(&t);
        assert_eq!(labels.label(0).len(), 1);
        assert_eq!(label_query(labels.label(0), labels.label(0)), 0);
    }

    #[test]
    fn labels_two_nodes() {
        let t = EmbeddingTree::from_parts(TreeKind::Canonic, vec![0, 0], 0, 2, 2);
        let labels = build_distance_labels(&t);
        assert!(labels.max_label_len() <= 2);
        assert_eq!(label_query(labels.label(0), labels.label(1)), 2);
    }

    #[test]
    fn labels_path_endpoints() {
        // path on 4 nodes: endpoints sit 3 edges apart
        let t = EmbeddingTree::from_parts(TreeKind::Canonic, vec![0, 0, 1, 2], 0, 4, 2);
        let labels = build_distance_labels(&t);
        assert_eq!(label_query(labels.label(0), labels.label(3)), 6);
        assert!(labels.max_label_len() <= 3);
    }

    #[test]
    fn labels_match_exact_distances_random() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let n = rng.gen_range(2..300usize);
            let parent: Vec<u32> = std::iter::once(0)
                .chain((1..n as u32).map(|v| rng.gen_range(0..v)))
                .collect();
            let t = EmbeddingTree::from_parts(TreeKind::Scaled, parent, 0, n, 6);
            let labels = build_distance_labels(&t);
            let bound = (usize::BITS - (n.leading_zeros())) as usize; // floor(log2 n) + 1
            assert!(labels.max_label_len() <= bound, "n={n}");
            for u in 0..n as u32 {
                for v in 0..n as u32 {
                    assert_eq!(
                        label_query(labels.label(u), labels.label(v)),
                        t.distance_half(u, v)
                    );
                }
            }
        }
    }

    #[test]
    fn tree_text_round_trip() {
        let g = cycle(6);
        let lp = build_layering_partition(&g, 0);
        let h = build_canonic_tree(&g, &lp);
        let hp = build_steiner_tree(&lp, &h, 2, 3);
        for t in [&h, &hp] {
            let mut buf = Vec::new();
            t.write_text(&mut buf).unwrap();
            let back = EmbeddingTree::read_text(&buf[..]).unwrap();
            assert_eq!(back.kind(), t.kind());
            assert_eq!(back.weight_times_two(), t.weight_times_two());
            assert_eq!(back.node_count(), t.node_count());
            assert_eq!(back.steiner_count(), t.steiner_count());
            assert_eq!(tree_edges(&back), tree_edges(t));
        }
    }

    #[test]
    fn labels_binary_round_trip() {
        let g = cycle(6);
        let lp = build_layering_partition(&g, 0);
        let h = build_canonic_tree(&g, &lp);
        let labels = build_distance_labels(&h);
        let mut buf = Vec::new();
        labels.write_binary(&mut buf).unwrap();
        let back = DistanceLabeling::read_binary(&buf[..]).unwrap();
        assert_eq!(back.node_count(), labels.node_count());
        for v in 0..6u32 {
            assert_eq!(back.label(v), labels.label(v));
        }
    }
}
