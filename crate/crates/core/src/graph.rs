//! Graph ingestion, compressed adjacency storage, BFS primitives,
//! connectivity/biconnectivity, and exact diameter/radius.
//!
//! A [`Graph`] is immutable after construction and safe to share across
//! parallel workers; every operation here is a pure read. Multi-source
//! sweeps run concurrently with per-source private buffers and a
//! deterministic (ordered) reduction.

use std::collections::{HashMap, VecDeque};
use std::io::BufRead;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::{Error, Result};

pub type VertexId = u32;

/// Sentinel for "not reached yet" in distance rows. Connected inputs never
/// surface it.
pub const UNREACHED: u16 = u16::MAX;

/// Undirected simple graph in compressed sparse row form.
///
/// Neighbor lists are sorted ascending, which makes every traversal in this
/// crate deterministic. `labels[v]` is the source token that vertex `v` was
/// parsed from; dense ids are assigned in first-appearance order.
#[derive(Debug, Clone)]
pub struct Graph {
    offsets: Vec<usize>,
    neighbors: Vec<VertexId>,
    labels: Vec<String>,
    edge_count: usize,
}

impl Graph {
    /// Build from deduplicated, loop-free edges over vertices `0..n`.
    /// Intended for tests and generators; duplicates and loops are dropped
    /// silently here, unlike [`parse_edge_list`] which counts them.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Graph {
        let mut norm: Vec<(VertexId, VertexId)> = edges
            .iter()
            .filter(|(u, v)| u != v)
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        norm.sort_unstable();
        norm.dedup();
        let labels = (0..n).map(|i| i.to_string()).collect();
        Graph::from_normalized_edges(labels, &norm)
    }

    /// `edges` must be sorted, deduplicated, loop-free pairs with `u < v`.
    fn from_normalized_edges(labels: Vec<String>, edges: &[(VertexId, VertexId)]) -> Graph {
        let n = labels.len();
        let mut degree = vec![0usize; n];
        for &(u, v) in edges {
            assert!(u < v && (v as usize) < n, "edge ({u},{v}) out of range");
            degree[u as usize] += 1;
            degree[v as usize] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        let mut acc = 0usize;
        offsets.push(0);
        for d in &degree {
            acc += d;
            offsets.push(acc);
        }
        let mut cursor = offsets.clone();
        let mut neighbors = vec![0 as VertexId; acc];
        for &(u, v) in edges {
            neighbors[cursor[u as usize]] = v;
            cursor[u as usize] += 1;
            neighbors[cursor[v as usize]] = u;
            cursor[v as usize] += 1;
        }
        for v in 0..n {
            neighbors[offsets[v]..offsets[v + 1]].sort_unstable();
        }
        Graph {
            offsets,
            neighbors,
            labels,
            edge_count: edges.len(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.neighbors[self.offsets[v as usize]..self.offsets[v as usize + 1]]
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.offsets[v as usize + 1] - self.offsets[v as usize]
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v as usize]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut dist = vec![UNREACHED; n];
        let mut queue = VecDeque::new();
        bfs_fill(self, 0, &mut dist, &mut queue);
        dist.iter().all(|&d| d != UNREACHED)
    }

    /// Canonical emission: one `u v` line per edge with `u < v`, sorted by
    /// the dense id pair. Re-parsing this text yields an isomorphic graph.
    pub fn canonical_edge_text(&self) -> String {
        let mut out = String::with_capacity(self.edge_count * 8);
        for u in 0..self.vertex_count() as VertexId {
            for &v in self.neighbors(u) {
                if v > u {
                    out.push_str(&u.to_string());
                    out.push(' ');
                    out.push_str(&v.to_string());
                    out.push('\n');
                }
            }
        }
        out
    }
}

/// Knobs for [`parse_edge_list`]. Lines whose first non-blank character is
/// one of `comment_prefixes` are skipped.
#[derive(Debug, Clone)]
pub struct IngestionOptions {
    pub comment_prefixes: Vec<char>,
}

impl Default for IngestionOptions {
    fn default() -> Self {
        IngestionOptions {
            comment_prefixes: vec!['#', '%'],
        }
    }
}

/// What ingestion dropped on the floor.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct IngestionStats {
    pub loops_dropped: u64,
    pub duplicates_dropped: u64,
}

/// Parse a whitespace-separated edge list, one edge per line.
///
/// Tokens map to dense ids in first-appearance order. Self-loops and
/// parallel edges are dropped (and counted); direction is ignored. The
/// returned graph may be disconnected; run
/// [`largest_connected_component`] afterwards for analysis.
pub fn parse_edge_list<R: BufRead>(
    reader: R,
    options: &IngestionOptions,
) -> Result<(Graph, IngestionStats)> {
    let mut ids: HashMap<String, VertexId> = HashMap::new();
    let mut labels: Vec<String> = Vec::new();
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    let mut stats = IngestionStats::default();

    let mut intern = |tok: &str, ids: &mut HashMap<String, VertexId>| -> VertexId {
        if let Some(&id) = ids.get(tok) {
            return id;
        }
        let id = labels.len() as VertexId;
        ids.insert(tok.to_string(), id);
        labels.push(tok.to_string());
        id
    };

    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if options.comment_prefixes.iter().any(|&c| trimmed.starts_with(c)) {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let (a, b) = match (tokens.next(), tokens.next(), tokens.next()) {
            (Some(a), Some(b), None) => (a, b),
            (a, b, c) => {
                let found = [a.is_some(), b.is_some(), c.is_some()]
                    .iter()
                    .filter(|&&x| x)
                    .count()
                    + tokens.count();
                return Err(Error::MalformedLine {
                    line: idx + 1,
                    found,
                });
            }
        };
        let u = intern(a, &mut ids);
        let v = intern(b, &mut ids);
        if u == v {
            stats.loops_dropped += 1;
            continue;
        }
        edges.push((u.min(v), u.max(v)));
    }

    if edges.is_empty() {
        return Err(Error::NoEdges);
    }
    edges.sort_unstable();
    let before = edges.len();
    edges.dedup();
    stats.duplicates_dropped = (before - edges.len()) as u64;

    Ok((Graph::from_normalized_edges(labels, &edges), stats))
}

/// BFS into a caller-provided distance buffer (reset to [`UNREACHED`] here).
/// Visits neighbors in ascending id order.
pub(crate) fn bfs_fill(g: &Graph, source: VertexId, dist: &mut [u16], queue: &mut VecDeque<VertexId>) {
    dist.fill(UNREACHED);
    queue.clear();
    dist[source as usize] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let du = dist[u as usize];
        let dv = du + 1;
        assert!(dv != UNREACHED, "distance overflows 16-bit cell");
        for &v in g.neighbors(u) {
            if dist[v as usize] == UNREACHED {
                dist[v as usize] = dv;
                queue.push_back(v);
            }
        }
    }
}

/// BFS that also records the discovering parent of every vertex.
pub(crate) fn bfs_parents(
    g: &Graph,
    source: VertexId,
    dist: &mut [u16],
    parent: &mut [VertexId],
    queue: &mut VecDeque<VertexId>,
) {
    dist.fill(UNREACHED);
    queue.clear();
    dist[source as usize] = 0;
    parent[source as usize] = source;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let dv = dist[u as usize] + 1;
        for &v in g.neighbors(u) {
            if dist[v as usize] == UNREACHED {
                dist[v as usize] = dv;
                parent[v as usize] = u;
                queue.push_back(v);
            }
        }
    }
}

/// Exact hop distances from one source.
#[derive(Debug, Clone)]
pub struct DistanceRow {
    pub source: VertexId,
    pub dist: Vec<u16>,
}

pub fn bfs_distances(g: &Graph, source: VertexId) -> DistanceRow {
    let mut dist = vec![UNREACHED; g.vertex_count()];
    let mut queue = VecDeque::new();
    bfs_fill(g, source, &mut dist, &mut queue);
    DistanceRow { source, dist }
}

/// Largest distance from `v`. Requires a connected graph.
pub fn eccentricity(g: &Graph, v: VertexId) -> u16 {
    let row = bfs_distances(g, v);
    let ecc = row.dist.iter().copied().max().unwrap_or(0);
    debug_assert!(ecc != UNREACHED, "eccentricity on a disconnected graph");
    ecc
}

/// Exact diameter, radius, and a witness center vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiameterRadius {
    pub diameter: u16,
    pub radius: u16,
    /// Smallest-id vertex whose eccentricity equals the radius.
    pub center_witness: VertexId,
}

/// Full BFS sweep: one BFS per source, parallel over sources. This is the
/// ground-truth oracle; the heuristic shortcut lives in [`crate::estimation`].
pub fn exact_diameter_radius(g: &Graph) -> DiameterRadius {
    let n = g.vertex_count();
    assert!(n > 0, "empty graph");
    let (diameter, radius, center_witness) = (0..n as VertexId)
        .into_par_iter()
        .map_init(
            || (vec![UNREACHED; n], VecDeque::new()),
            |(dist, queue), s| {
                bfs_fill(g, s, dist, queue);
                let ecc = dist.iter().copied().max().unwrap();
                debug_assert!(ecc != UNREACHED, "graph must be connected");
                (ecc, ecc, s)
            },
        )
        .reduce(
            || (0u16, UNREACHED, 0 as VertexId),
            |a, b| {
                let diam = a.0.max(b.0);
                // min eccentricity, ties to the smaller vertex id
                let (rad, w) = if (b.1, b.2) < (a.1, a.2) {
                    (b.1, b.2)
                } else {
                    (a.1, a.2)
                };
                (diam, rad, w)
            },
        );
    DiameterRadius {
        diameter,
        radius,
        center_witness,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentKind {
    Connected,
    Biconnected,
}

/// Connected or biconnected components, with articulation vertices in the
/// biconnected case. Component vertex sets are sorted, and components are
/// ordered by their smallest contained vertex (full lexicographic order on
/// the sorted sets breaks remaining ties).
#[derive(Debug, Clone)]
pub struct ComponentDecomposition {
    pub kind: ComponentKind,
    pub components: Vec<Vec<VertexId>>,
    pub articulation_vertices: Vec<VertexId>,
}

pub fn connected_components(g: &Graph) -> ComponentDecomposition {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut components = Vec::new();
    let mut queue = VecDeque::new();
    for s in 0..n as VertexId {
        if seen[s as usize] {
            continue;
        }
        let mut comp = Vec::new();
        seen[s as usize] = true;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            comp.push(u);
            for &v in g.neighbors(u) {
                if !seen[v as usize] {
                    seen[v as usize] = true;
                    queue.push_back(v);
                }
            }
        }
        comp.sort_unstable();
        components.push(comp);
    }
    ComponentDecomposition {
        kind: ComponentKind::Connected,
        components,
        articulation_vertices: Vec::new(),
    }
}

/// Induced subgraph on the largest connected component, with dense
/// re-indexing that preserves the relative order of the surviving vertices
/// and their labels. Size ties go to the component with the smallest
/// minimum original id.
pub fn largest_connected_component(g: &Graph) -> Graph {
    let decomp = connected_components(g);
    // components are ordered by smallest vertex, so the first maximum wins
    let best = decomp
        .components
        .iter()
        .enumerate()
        .max_by(|(ia, a), (ib, b)| a.len().cmp(&b.len()).then(ib.cmp(ia)))
        .map(|(i, _)| i)
        .expect("graph has at least one vertex");
    induced_subgraph(g, &decomp.components[best])
}

/// `vertices` must be sorted and closed under adjacency is NOT required;
/// edges leaving the set are dropped.
pub(crate) fn induced_subgraph(g: &Graph, vertices: &[VertexId]) -> Graph {
    let mut remap: HashMap<VertexId, VertexId> = HashMap::with_capacity(vertices.len());
    for (new, &old) in vertices.iter().enumerate() {
        remap.insert(old, new as VertexId);
    }
    let labels = vertices
        .iter()
        .map(|&v| g.label(v).to_string())
        .collect::<Vec<_>>();
    let mut edges = Vec::new();
    for &u in vertices {
        let nu = remap[&u];
        for &v in g.neighbors(u) {
            if v > u {
                if let Some(&nv) = remap.get(&v) {
                    edges.push((nu.min(nv), nu.max(nv)));
                }
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Graph::from_normalized_edges(labels, &edges)
}

/// Standard DFS lowpoint decomposition into biconnected components
/// (iterative, with an explicit edge stack).
pub fn biconnected_components(g: &Graph) -> ComponentDecomposition {
    let n = g.vertex_count();
    let mut disc = vec![0u32; n]; // 0 = unvisited, otherwise discovery time + 1
    let mut low = vec![0u32; n];
    let mut is_art = vec![false; n];
    let mut edge_stack: Vec<(VertexId, VertexId)> = Vec::new();
    let mut components: Vec<Vec<VertexId>> = Vec::new();
    let mut timer = 1u32;

    // frame: (vertex, parent, next neighbor index, children seen so far)
    let mut stack: Vec<(VertexId, VertexId, usize, u32)> = Vec::new();

    let mut pop_component = |edge_stack: &mut Vec<(VertexId, VertexId)>,
                             until: (VertexId, VertexId),
                             components: &mut Vec<Vec<VertexId>>| {
        let mut verts: Vec<VertexId> = Vec::new();
        loop {
            let e = edge_stack.pop().expect("edge stack underflow");
            verts.push(e.0);
            verts.push(e.1);
            if e == until {
                break;
            }
        }
        verts.sort_unstable();
        verts.dedup();
        components.push(verts);
    };

    for root in 0..n as VertexId {
        if disc[root as usize] != 0 {
            continue;
        }
        disc[root as usize] = timer;
        low[root as usize] = timer;
        timer += 1;
        stack.push((root, root, 0, 0));
        while let Some(&mut (u, parent, ref mut next, ref mut children)) = stack.last_mut() {
            let nbrs = g.neighbors(u);
            if *next < nbrs.len() {
                let v = nbrs[*next];
                *next += 1;
                if disc[v as usize] == 0 {
                    *children += 1;
                    edge_stack.push((u, v));
                    disc[v as usize] = timer;
                    low[v as usize] = timer;
                    timer += 1;
                    stack.push((v, u, 0, 0));
                } else if v != parent && disc[v as usize] < disc[u as usize] {
                    edge_stack.push((u, v));
                    low[u as usize] = low[u as usize].min(disc[v as usize]);
                }
            } else {
                stack.pop();
                if let Some(&mut (p, _, _, _)) = stack.last_mut() {
                    low[p as usize] = low[p as usize].min(low[u as usize]);
                    if low[u as usize] >= disc[p as usize] {
                        // p closes a block; p is an articulation vertex unless
                        // it is the root with a single child
                        pop_component(&mut edge_stack, (p, u), &mut components);
                        let p_frame = stack.last().unwrap();
                        let p_is_root = p_frame.0 == p_frame.1;
                        if !p_is_root || p_frame.3 > 1 {
                            is_art[p as usize] = true;
                        }
                    }
                }
            }
        }
    }

    components.sort();
    let articulation_vertices = (0..n as VertexId)
        .filter(|&v| is_art[v as usize])
        .collect();
    ComponentDecomposition {
        kind: ComponentKind::Biconnected,
        components,
        articulation_vertices,
    }
}

/// How [`pair_sampler`] picks vertex pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairMode {
    /// Every unordered distinct pair exactly once.
    All,
    /// `k` pairs i.i.d. uniform over unordered distinct pairs,
    /// reproducible from `seed`.
    Uniform { k: u64, seed: u64 },
}

/// Stream of vertex pairs; see [`PairMode`].
pub struct PairSampler {
    n: VertexId,
    state: SamplerState,
}

enum SamplerState {
    All { u: VertexId, v: VertexId },
    Uniform { rng: ChaCha8Rng, remaining: u64 },
}

pub fn pair_sampler(g: &Graph, mode: PairMode) -> Result<PairSampler> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::TooFewVertices { need: 2, have: n });
    }
    let state = match mode {
        PairMode::All => SamplerState::All { u: 0, v: 0 },
        PairMode::Uniform { k, seed } => SamplerState::Uniform {
            rng: ChaCha8Rng::seed_from_u64(seed),
            remaining: k,
        },
    };
    Ok(PairSampler {
        n: n as VertexId,
        state,
    })
}

impl Iterator for PairSampler {
    type Item = (VertexId, VertexId);

    fn next(&mut self) -> Option<(VertexId, VertexId)> {
        let n = self.n;
        match &mut self.state {
            SamplerState::All { u, v } => {
                *v += 1;
                if *v == n {
                    *u += 1;
                    *v = *u + 1;
                    if *v >= n {
                        return None;
                    }
                }
                Some((*u, *v))
            }
            SamplerState::Uniform { rng, remaining } => {
                if *remaining == 0 {
                    return None;
                }
                *remaining -= 1;
                let u = rng.gen_range(0..n);
                let mut v = rng.gen_range(0..n - 1);
                if v >= u {
                    v += 1;
                }
                Some((u.min(v), u.max(v)))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Cursor;

    fn parse(text: &str) -> Result<(Graph, IngestionStats)> {
        parse_edge_list(Cursor::new(text), &IngestionOptions::default())
    }

    pub(crate) fn cycle(n: usize) -> Graph {
        let edges: Vec<(VertexId, VertexId)> = (0..n)
            .map(|i| (i as VertexId, ((i + 1) % n) as VertexId))
            .collect();
        Graph::from_edges(n, &edges)
    }

    pub(crate) fn path(n: usize) -> Graph {
        let edges: Vec<(VertexId, VertexId)> = (0..n - 1)
            .map(|i| (i as VertexId, (i + 1) as VertexId))
            .collect();
        Graph::from_edges(n, &edges)
    }

    #[test]
    fn parse_drops_loops_and_duplicates() {
        let (g, stats) = parse("1 2\n2 3\n1 2\n3 3\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(stats.duplicates_dropped, 1);
        assert_eq!(stats.loops_dropped, 1);
    }

    #[test]
    fn parse_string_tokens_first_appearance() {
        let (g, _) = parse("a b\nb c\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.labels(), &["a", "b", "c"]);
    }

    #[test]
    fn parse_empty_is_error() {
        match parse("") {
            Err(Error::NoEdges) => {}
            other => panic!("expected NoEdges, got {other:?}"),
        }
        // comments only is still "no edges"
        match parse("# nothing\n% here\n") {
            Err(Error::NoEdges) => {}
            other => panic!("expected NoEdges, got {other:?}"),
        }
    }

    #[test]
    fn parse_malformed_line_reports_number() {
        match parse("1 2\n3 4 5\n") {
            Err(Error::MalformedLine { line: 2, found: 3 }) => {}
            other => panic!("unexpected {other:?}"),
        }
        match parse("1 2\n\n7\n") {
            Err(Error::MalformedLine { line: 3, found: 1 }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn parse_reverse_direction_is_duplicate() {
        let (g, stats) = parse("1 2\n2 1\n").unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(stats.duplicates_dropped, 1);
    }

    #[test]
    fn bfs_rows() {
        let p3 = path(3);
        assert_eq!(bfs_distances(&p3, 0).dist, vec![0, 1, 2]);
        let c6 = cycle(6);
        assert_eq!(bfs_distances(&c6, 0).dist, vec![0, 1, 2, 3, 2, 1]);
    }

    #[test]
    fn eccentricities() {
        let star = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]);
        assert_eq!(eccentricity(&star, 0), 1);
        let p5 = path(5);
        assert_eq!(eccentricity(&p5, 0), 4);
        assert_eq!(eccentricity(&p5, 2), 2);
    }

    #[test]
    fn diameter_radius_cycle() {
        let c6 = cycle(6);
        let dr = exact_diameter_radius(&c6);
        assert_eq!(dr.diameter, 3);
        assert_eq!(dr.radius, 3);
        assert_eq!(dr.center_witness, 0);
    }

    #[test]
    fn largest_component_ties_to_first_triangle() {
        // two triangles plus a 2-path; the first triangle wins the size tie
        let g = Graph::from_edges(
            8,
            &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (6, 7)],
        );
        let lcc = largest_connected_component(&g);
        assert_eq!(lcc.vertex_count(), 3);
        assert_eq!(lcc.labels(), &["0", "1", "2"]);
    }

    #[test]
    fn largest_component_identity_on_connected() {
        let c6 = cycle(6);
        let lcc = largest_connected_component(&c6);
        assert_eq!(lcc.vertex_count(), 6);
        assert_eq!(lcc.canonical_edge_text(), c6.canonical_edge_text());
    }

    #[test]
    fn biconnected_of_tree_is_edges() {
        let p5 = path(5);
        let d = biconnected_components(&p5);
        assert_eq!(d.components.len(), 4);
        for c in &d.components {
            assert_eq!(c.len(), 2);
        }
        assert_eq!(d.articulation_vertices, vec![1, 2, 3]);
    }

    #[test]
    fn biconnected_shared_vertex() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]);
        let d = biconnected_components(&g);
        assert_eq!(d.components.len(), 2);
        assert_eq!(d.articulation_vertices, vec![2]);
        assert_eq!(d.components[0], vec![0, 1, 2]);
        assert_eq!(d.components[1], vec![2, 3, 4]);
    }

    #[test]
    fn biconnected_cycle_single_block() {
        let c6 = cycle(6);
        let d = biconnected_components(&c6);
        assert_eq!(d.components.len(), 1);
        assert_eq!(d.components[0].len(), 6);
        assert!(d.articulation_vertices.is_empty());
    }

    #[test]
    fn sampler_all_small() {
        let g = path(3);
        let pairs: Vec<_> = pair_sampler(&g, PairMode::All).unwrap().collect();
        assert_eq!(pairs, vec![(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn sampler_reproducible() {
        let g = cycle(10);
        let a: Vec<_> = pair_sampler(&g, PairMode::Uniform { k: 100, seed: 7 })
            .unwrap()
            .collect();
        let b: Vec<_> = pair_sampler(&g, PairMode::Uniform { k: 100, seed: 7 })
            .unwrap()
            .collect();
        assert_eq!(a, b);
        assert_eq!(a.len(), 100);
        assert!(a.iter().all(|&(u, v)| u < v && v < 10));
    }

    #[test]
    fn sampler_rejects_tiny_graph() {
        let g = Graph::from_edges(1, &[]);
        assert!(matches!(
            pair_sampler(&g, PairMode::All),
            Err(Error::TooFewVertices { .. })
        ));
    }

    #[test]
    fn canonical_round_trip_reaches_fixpoint() {
        let (g, _) = parse("x y\nq r\ny q\nx r\nx q\n").unwrap();
        let t1 = g.canonical_edge_text();
        let (g2, _) = parse(&t1).unwrap();
        let t2 = g2.canonical_edge_text();
        let (g3, _) = parse(&t2).unwrap();
        assert_eq!(t2, g3.canonical_edge_text());
        assert_eq!(g.vertex_count(), g2.vertex_count());
        assert_eq!(g.edge_count(), g2.edge_count());
    }
}
