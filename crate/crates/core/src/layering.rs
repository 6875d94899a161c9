//! Layering partition of a graph from a start vertex, the cluster tree over
//! it, and the cluster-diameter / cluster-radius measurements.
//!
//! Two vertices of BFS layer `i` share a cluster exactly when some path
//! using only vertices at distance >= `i` from the start connects them.
//! The cluster adjacency graph is always a tree rooted at the start
//! vertex's singleton cluster.

use std::collections::VecDeque;

use rayon::prelude::*;

use crate::graph::{bfs_fill, Graph, VertexId, UNREACHED};

#[derive(Debug, Clone)]
pub struct Cluster {
    pub layer: u16,
    /// Sorted member vertices.
    pub vertices: Vec<VertexId>,
    /// The unique adjacent cluster in the previous layer; `None` for the root.
    pub parent: Option<u32>,
}

#[derive(Debug, Clone)]
pub struct LayeringPartition {
    pub source: VertexId,
    pub layer_of: Vec<u16>,
    pub cluster_of: Vec<u32>,
    /// Ordered by (layer, smallest member); index 0 is the root cluster.
    pub clusters: Vec<Cluster>,
}

impl LayeringPartition {
    pub fn cluster_count(&self) -> usize {
        self.clusters.len()
    }
}

struct UnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, x: u32) -> u32 {
        let mut r = x;
        while self.parent[r as usize] != r {
            let p = self.parent[r as usize];
            self.parent[r as usize] = self.parent[p as usize];
            r = p;
        }
        r
    }

    fn union(&mut self, a: u32, b: u32) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        if self.size[ra as usize] < self.size[rb as usize] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb as usize] = ra;
        self.size[ra as usize] += self.size[rb as usize];
    }
}

/// Build the layering partition of a connected graph from start vertex `s`.
///
/// Vertices are added layer by layer in decreasing distance into a
/// union-find over the edges among already-added vertices; grouping each
/// layer right after it is added realizes the "connected outside the ball"
/// rule. Near-linear total time.
pub fn build_layering_partition(g: &Graph, s: VertexId) -> LayeringPartition {
    let n = g.vertex_count();
    assert!((s as usize) < n, "start vertex out of range");
    let mut layer_of = vec![UNREACHED; n];
    let mut queue = VecDeque::new();
    bfs_fill(g, s, &mut layer_of, &mut queue);
    debug_assert!(
        layer_of.iter().all(|&d| d != UNREACHED),
        "layering needs a connected graph"
    );
    let max_layer = layer_of.iter().copied().max().unwrap() as usize;

    let mut by_layer: Vec<Vec<VertexId>> = vec![Vec::new(); max_layer + 1];
    for v in 0..n as VertexId {
        by_layer[layer_of[v as usize] as usize].push(v);
    }

    let mut uf = UnionFind::new(n);
    let mut cluster_of = vec![u32::MAX; n];
    // clusters collected deepest layer first, regrouped below
    let mut raw: Vec<(u16, Vec<VertexId>)> = Vec::new();
    let mut root_of: Vec<(u32, u32)> = Vec::new(); // scratch: (uf root, cluster idx)

    for i in (0..=max_layer).rev() {
        for &v in &by_layer[i] {
            for &u in g.neighbors(v) {
                if layer_of[u as usize] as usize >= i {
                    uf.union(v, u);
                }
            }
        }
        root_of.clear();
        for &v in &by_layer[i] {
            let r = uf.find(v);
            let idx = match root_of.iter().find(|&&(root, _)| root == r) {
                Some(&(_, idx)) => idx,
                None => {
                    let idx = raw.len() as u32;
                    raw.push((i as u16, Vec::new()));
                    root_of.push((r, idx));
                    idx
                }
            };
            raw[idx as usize].1.push(v);
            cluster_of[v as usize] = idx;
        }
    }

    // reorder clusters by (layer, smallest member); members are already
    // ascending because each layer was scanned in vertex order
    let mut order: Vec<u32> = (0..raw.len() as u32).collect();
    order.sort_by_key(|&c| (raw[c as usize].0, raw[c as usize].1[0]));
    let mut remap = vec![0u32; raw.len()];
    for (new, &old) in order.iter().enumerate() {
        remap[old as usize] = new as u32;
    }
    for v in 0..n {
        cluster_of[v] = remap[cluster_of[v] as usize];
    }
    let mut clusters: Vec<Cluster> = vec![
        Cluster {
            layer: 0,
            vertices: Vec::new(),
            parent: None,
        };
        raw.len()
    ];
    for (old, (layer, vertices)) in raw.into_iter().enumerate() {
        clusters[remap[old] as usize] = Cluster {
            layer,
            vertices,
            parent: None,
        };
    }

    // parent = cluster of any neighbor one layer down; the cluster tree
    // property makes the choice unique
    for c in 0..clusters.len() {
        if clusters[c].layer == 0 {
            continue;
        }
        let want = clusters[c].layer - 1;
        let mut parent = None;
        'outer: for &v in &clusters[c].vertices {
            for &u in g.neighbors(v) {
                if layer_of[u as usize] == want {
                    parent = Some(cluster_of[u as usize]);
                    break 'outer;
                }
            }
        }
        clusters[c].parent = Some(parent.expect("non-root cluster has a down edge"));
    }
    debug_assert!(clusters[0].layer == 0 && clusters[0].vertices == vec![s]);

    LayeringPartition {
        source: s,
        layer_of,
        cluster_of,
        clusters,
    }
}

/// Per-cluster hop diameter (in the whole graph's metric) and its maximum.
#[derive(Debug, Clone)]
pub struct ClusterDiameters {
    pub delta_s: u16,
    pub per_cluster: Vec<u16>,
}

/// Per-cluster covering radius, center witnesses, and the maximum radius.
/// The witness center may lie outside its cluster.
#[derive(Debug, Clone)]
pub struct ClusterRadii {
    pub r_s: u16,
    pub per_cluster: Vec<u16>,
    pub witness: Vec<VertexId>,
}

#[derive(Debug, Clone, Copy)]
struct ClusterGeometry {
    diameter: u16,
    radius: u16,
    center: VertexId,
}

/// One BFS per member of each multi-vertex cluster; singleton clusters are
/// trivially (0, 0, self). Clusters are independent parallel tasks.
fn cluster_geometry(g: &Graph, lp: &LayeringPartition) -> Vec<ClusterGeometry> {
    let n = g.vertex_count();
    lp.clusters
        .par_iter()
        .map(|cluster| {
            if cluster.vertices.len() == 1 {
                return ClusterGeometry {
                    diameter: 0,
                    radius: 0,
                    center: cluster.vertices[0],
                };
            }
            let mut dist = vec![UNREACHED; n];
            let mut queue = VecDeque::new();
            let mut cover = vec![0u16; n]; // pointwise max over member rows
            let mut diameter = 0u16;
            for &u in &cluster.vertices {
                bfs_fill(g, u, &mut dist, &mut queue);
                for &v in &cluster.vertices {
                    diameter = diameter.max(dist[v as usize]);
                }
                for v in 0..n {
                    cover[v] = cover[v].max(dist[v]);
                }
            }
            let mut radius = UNREACHED;
            let mut center = 0 as VertexId;
            for v in 0..n {
                if cover[v] < radius {
                    radius = cover[v];
                    center = v as VertexId;
                }
            }
            ClusterGeometry {
                diameter,
                radius,
                center,
            }
        })
        .collect()
}

pub fn cluster_diameters(g: &Graph, lp: &LayeringPartition) -> ClusterDiameters {
    let geo = cluster_geometry(g, lp);
    let per_cluster: Vec<u16> = geo.iter().map(|g| g.diameter).collect();
    ClusterDiameters {
        delta_s: per_cluster.iter().copied().max().unwrap_or(0),
        per_cluster,
    }
}

pub fn cluster_radii(g: &Graph, lp: &LayeringPartition) -> ClusterRadii {
    let geo = cluster_geometry(g, lp);
    let per_cluster: Vec<u16> = geo.iter().map(|g| g.radius).collect();
    ClusterRadii {
        r_s: per_cluster.iter().copied().max().unwrap_or(0),
        per_cluster,
        witness: geo.iter().map(|g| g.center).collect(),
    }
}

/// The row-level summary of a layering partition: cluster count, diameter
/// distribution, cluster-diameter, cluster-radius.
#[derive(Debug, Clone)]
pub struct ClusterStats {
    pub cluster_count: usize,
    pub cluster_diameters: Vec<u16>,
    pub delta_s: u16,
    pub r_s: u16,
    pub avg_diameter: f64,
    /// Fraction of clusters with diameter <= 1 (cliques).
    pub clique_fraction: f64,
    /// diameter -> number of clusters, dense over 0..=delta_s.
    pub diameter_histogram: Vec<(u16, u64)>,
}

pub fn cluster_stats(g: &Graph, lp: &LayeringPartition) -> ClusterStats {
    let geo = cluster_geometry(g, lp);
    let cluster_diameters: Vec<u16> = geo.iter().map(|g| g.diameter).collect();
    let delta_s = cluster_diameters.iter().copied().max().unwrap_or(0);
    let r_s = geo.iter().map(|g| g.radius).max().unwrap_or(0);
    let count = cluster_diameters.len();
    let mut histogram = vec![0u64; delta_s as usize + 1];
    let mut sum = 0u64;
    let mut cliques = 0u64;
    for &d in &cluster_diameters {
        histogram[d as usize] += 1;
        sum += d as u64;
        if d <= 1 {
            cliques += 1;
        }
    }
    ClusterStats {
        cluster_count: count,
        delta_s,
        r_s,
        avg_diameter: sum as f64 / count as f64,
        clique_fraction: cliques as f64 / count as f64,
        diameter_histogram: histogram
            .into_iter()
            .enumerate()
            .map(|(d, f)| (d as u16, f))
            .collect(),
        cluster_diameters,
    }
}

/// Optional scan over several start vertices (the minimum over all of them
/// is the graph-level cluster-diameter/radius). Cost is one full
/// [`cluster_stats`] per source; keep the source set small on big graphs.
pub fn scan_sources(g: &Graph, sources: &[VertexId]) -> Vec<(VertexId, ClusterStats)> {
    sources
        .iter()
        .map(|&s| {
            let lp = build_layering_partition(g, s);
            (s, cluster_stats(g, &lp))
        })
        .collect()
}
