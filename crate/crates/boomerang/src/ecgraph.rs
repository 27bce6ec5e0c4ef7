//! Edge-colored graphs: walks, rainbow/shortest analysis, the
//! rainbow-boomerang decision procedure, quotients, hypercube embedding,
//! and exhaustive colorability search.
//!
//! A properly edge-colored connected graph is a *rainbow boomerang* (RB)
//! graph when a walk is shortest exactly when its colors are pairwise
//! distinct.  The fast decision procedure used here rests on three facts:
//! every RB graph is bipartite, embeds into a hypercube indexed by its
//! colors, and has all-pairs distances equal to Hamming distances of the
//! embedding.  The definitional brute-force check is kept as `rb_oracle`
//! and the two are differential-tested.

use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EcError {
    #[error("graph is not properly colored: {0:?}")]
    NotProperlyColored(Vec<(String, String)>),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not a rainbow boomerang graph")]
    NotRainbowBoomerang,
    #[error("duplicate edge {0}-{1} with color {2}")]
    DuplicateEdge(String, String, String),
    #[error("loop at vertex {0}")]
    LoopEdge(String),
    #[error("color {0} is unused")]
    UnusedColor(String),
    #[error("unknown vertex or color name {0}")]
    UnknownName(String),
    #[error("size limit exceeded: {0}")]
    SizeLimitExceeded(String),
    #[error("invalid walk: {0}")]
    InvalidWalk(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}

/// Finite properly-colorable edge-colored graph.
///
/// Vertices and colors are kept as names; all algorithms work on indices.
/// Colors are required to be surjective onto the edge set (every declared
/// color occurs on some edge), matching the definition of an edge coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    vertices: Vec<String>,
    colors: Vec<String>,
    /// Normalized: u < v, sorted, deduplicated.
    edges: Vec<(usize, usize, usize)>,
    adj: Vec<Vec<(usize, usize)>>,
}

/// JSON wire format: order-insensitive lists of names.
#[derive(Debug, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<String>,
    pub colors: Vec<String>,
    pub edges: Vec<(String, String, String)>,
}

impl ColoredGraph {
    pub fn new(
        vertices: Vec<String>,
        colors: Vec<String>,
        edges: Vec<(usize, usize, usize)>,
    ) -> Result<Self, EcError> {
        let mut norm: Vec<(usize, usize, usize)> = Vec::with_capacity(edges.len());
        for (u, v, c) in edges {
            if u >= vertices.len() || v >= vertices.len() || c >= colors.len() {
                return Err(EcError::UnknownName(format!("edge ({u},{v},{c})")));
            }
            if u == v {
                return Err(EcError::LoopEdge(vertices[u].clone()));
            }
            norm.push((u.min(v), u.max(v), c));
        }
        norm.sort_unstable();
        for w in norm.windows(2) {
            if w[0] == w[1] {
                return Err(EcError::DuplicateEdge(
                    vertices[w[0].0].clone(),
                    vertices[w[0].1].clone(),
                    colors[w[0].2].clone(),
                ));
            }
        }
        let mut used = vec![false; colors.len()];
        for &(_, _, c) in &norm {
            used[c] = true;
        }
        if let Some(c) = used.iter().position(|u| !u) {
            return Err(EcError::UnusedColor(colors[c].clone()));
        }
        let mut adj = vec![Vec::new(); vertices.len()];
        for &(u, v, c) in &norm {
            adj[u].push((v, c));
            adj[v].push((u, c));
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Ok(ColoredGraph {
            vertices,
            colors,
            edges: norm,
            adj,
        })
    }

    pub fn from_json(json: &GraphJson) -> Result<Self, EcError> {
        let mut vertices = json.vertices.clone();
        vertices.sort();
        vertices.dedup();
        let mut colors = json.colors.clone();
        colors.sort();
        colors.dedup();
        let vidx: HashMap<&str, usize> =
            vertices.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let cidx: HashMap<&str, usize> =
            colors.iter().enumerate().map(|(i, c)| (c.as_str(), i)).collect();
        let mut edges = Vec::new();
        for (u, v, c) in &json.edges {
            let ui = *vidx.get(u.as_str()).ok_or_else(|| EcError::UnknownName(u.clone()))?;
            let vi = *vidx.get(v.as_str()).ok_or_else(|| EcError::UnknownName(v.clone()))?;
            let ci = *cidx.get(c.as_str()).ok_or_else(|| EcError::UnknownName(c.clone()))?;
            edges.push((ui, vi, ci));
        }
        ColoredGraph::new(vertices, colors, edges)
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            vertices: self.vertices.clone(),
            colors: self.colors.clone(),
            edges: self
                .edges
                .iter()
                .map(|&(u, v, c)| {
                    (
                        self.vertices[u].clone(),
                        self.vertices[v].clone(),
                        self.colors[c].clone(),
                    )
                })
                .collect(),
        }
    }

    /// Deterministic DOT export; one edge per line, `label` = color name.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph \"{name}\" {{\n");
        for v in &self.vertices {
            out.push_str(&format!("  \"{v}\";\n"));
        }
        for &(u, v, c) in &self.edges {
            out.push_str(&format!(
                "  \"{}\" -- \"{}\" [label=\"{}\"];\n",
                self.vertices[u], self.vertices[v], self.colors[c]
            ));
        }
        out.push_str("}\n");
        out
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn color_count(&self) -> usize {
        self.colors.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn color_names(&self) -> &[String] {
        &self.colors
    }

    pub fn edges(&self) -> &[(usize, usize, usize)] {
        &self.edges
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    /// Fails with the full list of (vertex, color) clashes if two edges at
    /// a common vertex share a color.
    pub fn validate_proper(&self) -> Result<(), EcError> {
        let mut bad = Vec::new();
        for (v, nbrs) in self.adj.iter().enumerate() {
            let mut seen = HashSet::new();
            for &(_, c) in nbrs {
                if !seen.insert(c) {
                    bad.push((self.vertices[v].clone(), self.colors[c].clone()));
                }
            }
        }
        if bad.is_empty() {
            Ok(())
        } else {
            bad.sort();
            bad.dedup();
            Err(EcError::NotProperlyColored(bad))
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return true;
        }
        let d = self.bfs_distances(0);
        d.iter().all(|x| x.is_some())
    }

    fn bfs_distances(&self, start: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertices.len()];
        dist[start] = Some(0);
        let mut q = VecDeque::from([start]);
        while let Some(u) = q.pop_front() {
            let du = dist[u].unwrap();
            for &(v, _) in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    q.push_back(v);
                }
            }
        }
        dist
    }

    /// All-pairs distance table; `None` marks unreachable pairs.
    pub fn distances(&self) -> Vec<Vec<Option<usize>>> {
        (0..self.vertices.len()).map(|v| self.bfs_distances(v)).collect()
    }
}

/// A walk, stored as its vertex sequence plus the color sequence between
/// consecutive vertices.  Colors suffice to recover edges because validated
/// graphs are simple with per-vertex-unique colors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Walk {
    pub vertex_seq: Vec<usize>,
    pub color_seq: Vec<usize>,
}

impl Walk {
    pub fn validate(&self, g: &ColoredGraph) -> Result<(), EcError> {
        if self.vertex_seq.is_empty() {
            return Err(EcError::InvalidWalk("empty vertex sequence".into()));
        }
        if self.color_seq.len() + 1 != self.vertex_seq.len() {
            return Err(EcError::InvalidWalk("length mismatch".into()));
        }
        for i in 0..self.color_seq.len() {
            let (u, v, c) = (self.vertex_seq[i], self.vertex_seq[i + 1], self.color_seq[i]);
            if !g.adj[u].contains(&(v, c)) {
                return Err(EcError::InvalidWalk(format!(
                    "no edge {}-{} with color {}",
                    g.vertices[u], g.vertices[v], g.colors[c]
                )));
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.color_seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.color_seq.is_empty()
    }

    pub fn origin(&self) -> usize {
        self.vertex_seq[0]
    }

    pub fn terminus(&self) -> usize {
        *self.vertex_seq.last().unwrap()
    }
}

/// True iff the walk's colors are pairwise distinct (the empty walk is
/// vacuously rainbow).
pub fn is_rainbow(w: &Walk) -> bool {
    let mut seen = HashSet::new();
    w.color_seq.iter().all(|c| seen.insert(*c))
}

/// True iff the walk's length equals the graph distance of its endpoints.
pub fn is_shortest(g: &ColoredGraph, w: &Walk) -> bool {
    g.bfs_distances(w.origin())[w.terminus()] == Some(w.len())
}

/// Labels of a hypercube embedding: vertex ↦ subset of colors, stored as a
/// bitset (128 colors max).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypercubeLabeling {
    pub base: usize,
    pub label: Vec<u128>,
}

/// Reason a properly colored connected graph fails the RB test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RbFailure {
    /// An edge closing an odd cycle, breaking bipartiteness.
    NotBipartite { edge: (usize, usize) },
    /// An edge whose endpoints' labels do not differ exactly in its color.
    LabelConflict { edge: (usize, usize, usize) },
    /// A vertex pair where Hamming label distance differs from graph distance.
    DistanceMismatch {
        x: usize,
        y: usize,
        distance: usize,
        hamming: usize,
    },
}

/// Fast rainbow-boomerang decision: bipartite check, hypercube labeling by
/// breadth-first toggling, then the all-pairs distance = Hamming check.
/// Returns the labeling on success and a structured witness on failure.
pub fn is_rainbow_boomerang(
    g: &ColoredGraph,
) -> Result<Result<HypercubeLabeling, RbFailure>, EcError> {
    g.validate_proper()?;
    if !g.is_connected() {
        return Err(EcError::Disconnected);
    }
    if g.color_count() > 128 {
        return Err(EcError::SizeLimitExceeded("more than 128 colors".into()));
    }
    let n = g.vertex_count();
    // Bipartite check via BFS 2-coloring.
    let mut side = vec![None; n];
    side[0] = Some(false);
    let mut q = VecDeque::from([0usize]);
    while let Some(u) = q.pop_front() {
        for &(v, _) in &g.adj[u] {
            match side[v] {
                None => {
                    side[v] = Some(!side[u].unwrap());
                    q.push_back(v);
                }
                Some(s) if s == side[u].unwrap() => {
                    return Ok(Err(RbFailure::NotBipartite { edge: (u, v) }));
                }
                _ => {}
            }
        }
    }
    // Hypercube labeling: toggle the edge color along a BFS tree, then
    // verify the toggling law on every edge.
    let mut label = vec![0u128; n];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut q = VecDeque::from([0usize]);
    while let Some(u) = q.pop_front() {
        for &(v, c) in &g.adj[u] {
            if !seen[v] {
                seen[v] = true;
                label[v] = label[u] ^ (1u128 << c);
                q.push_back(v);
            }
        }
    }
    for &(u, v, c) in &g.edges {
        if label[u] ^ label[v] != 1u128 << c {
            return Ok(Err(RbFailure::LabelConflict { edge: (u, v, c) }));
        }
    }
    // All-pairs: graph distance must equal Hamming distance of labels.
    for x in 0..n {
        let dist = g.bfs_distances(x);
        for y in x + 1..n {
            let d = dist[y].unwrap();
            let h = (label[x] ^ label[y]).count_ones() as usize;
            if d != h {
                return Ok(Err(RbFailure::DistanceMismatch {
                    x,
                    y,
                    distance: d,
                    hamming: h,
                }));
            }
        }
    }
    Ok(Ok(HypercubeLabeling { base: 0, label }))
}

/// Definitional ground truth, exponential: every shortest path must be
/// rainbow and every rainbow walk must be shortest.
pub fn rb_oracle(g: &ColoredGraph) -> Result<bool, EcError> {
    g.validate_proper()?;
    if !g.is_connected() {
        return Err(EcError::Disconnected);
    }
    if g.color_count() > 12 {
        return Err(EcError::SizeLimitExceeded("rb_oracle needs <= 12 colors".into()));
    }
    let n = g.vertex_count();
    // Part 1: every shortest path is rainbow.  Enumerate shortest paths as
    // monotone paths in the BFS layered DAG from each source.
    for s in 0..n {
        let dist = g.bfs_distances(s);
        // DFS over the DAG, tracking the multiset of colors used so far.
        let mut stack: Vec<(usize, Vec<usize>)> = vec![(s, Vec::new())];
        while let Some((u, used)) = stack.pop() {
            if used.iter().collect::<HashSet<_>>().len() != used.len() {
                return Ok(false);
            }
            for &(v, c) in &g.adj[u] {
                if dist[v] == Some(dist[u].unwrap() + 1) {
                    let mut next = used.clone();
                    next.push(c);
                    stack.push((v, next));
                }
            }
        }
    }
    // Part 2: every rainbow walk is shortest.  DFS with a used-color bitmask.
    for s in 0..n {
        let dist = g.bfs_distances(s);
        let mut stack: Vec<(usize, u32, usize)> = vec![(s, 0, 0)];
        while let Some((u, mask, len)) = stack.pop() {
            if dist[u] != Some(len) {
                return Ok(false);
            }
            for &(v, c) in &g.adj[u] {
                if mask & (1 << c) == 0 {
                    stack.push((v, mask | (1 << c), len + 1));
                }
            }
        }
    }
    Ok(true)
}

/// `C(x,y)`: the colors of any rainbow shortest path from x to y, computed
/// as the symmetric difference of hypercube labels.
pub fn color_set(g: &ColoredGraph, x: usize, y: usize) -> Result<u128, EcError> {
    let lab = is_rainbow_boomerang(g)?.map_err(|_| EcError::NotRainbowBoomerang)?;
    Ok(lab.label[x] ^ lab.label[y])
}

/// Quotient by a color set `D`: contract all D-colored edges, drop loops,
/// merge parallel edges, and shrink the color set back to the colors that
/// still occur.  Returns the graph and the projection vertex ↦ class index.
pub fn quotient(g: &ColoredGraph, d: &BTreeSet<usize>) -> (ColoredGraph, Vec<usize>) {
    let n = g.vertex_count();
    // Union-find over D-colored edges.
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &(u, v, c) in g.edges() {
        if d.contains(&c) {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                parent[ru.max(rv)] = ru.min(rv);
            }
        }
    }
    // Name classes by their sorted member names, joined with '|'.
    let mut members: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        let r = find(&mut parent, v);
        members.entry(r).or_default().push(v);
    }
    let class_of_root: HashMap<usize, usize> =
        members.keys().enumerate().map(|(i, &r)| (r, i)).collect();
    let class_names: Vec<String> = members
        .values()
        .map(|vs| {
            vs.iter()
                .map(|&v| g.vertex_names()[v].clone())
                .collect::<Vec<_>>()
                .join("|")
        })
        .collect();
    let projection: Vec<usize> = (0..n)
        .map(|v| class_of_root[&find(&mut parent, v)])
        .collect();
    // Surviving edges: non-D colors between distinct classes, deduplicated.
    let mut new_edges: BTreeSet<(usize, usize, usize)> = BTreeSet::new();
    let mut used_colors: BTreeSet<usize> = BTreeSet::new();
    for &(u, v, c) in g.edges() {
        if d.contains(&c) {
            continue;
        }
        let (cu, cv) = (projection[u], projection[v]);
        if cu != cv {
            new_edges.insert((cu.min(cv), cu.max(cv), c));
            used_colors.insert(c);
        }
    }
    let color_map: HashMap<usize, usize> =
        used_colors.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let color_names: Vec<String> = used_colors
        .iter()
        .map(|&c| g.color_names()[c].clone())
        .collect();
    let edges: Vec<(usize, usize, usize)> = new_edges
        .into_iter()
        .map(|(u, v, c)| (u, v, color_map[&c]))
        .collect();
    let q = ColoredGraph::new(class_names, color_names, edges)
        .expect("quotient construction is always well-formed");
    (q, projection)
}

/// Remove all edges of color `c` from a connected RB graph; the result is
/// exactly two components, each again RB.
pub fn split_by_color(
    g: &ColoredGraph,
    c: usize,
) -> Result<(ColoredGraph, ColoredGraph), EcError> {
    is_rainbow_boomerang(g)?.map_err(|_| EcError::NotRainbowBoomerang)?;
    let n = g.vertex_count();
    let mut comp = vec![None; n];
    let mut ncomp = 0;
    for s in 0..n {
        if comp[s].is_some() {
            continue;
        }
        comp[s] = Some(ncomp);
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for &(v, cc) in &g.adj[u] {
                if cc == c || comp[v].is_some() {
                    continue;
                }
                comp[v] = Some(ncomp);
                q.push_back(v);
            }
        }
        ncomp += 1;
    }
    if ncomp != 2 {
        return Err(EcError::PreconditionViolated(format!(
            "removing the color yields {ncomp} components, expected 2"
        )));
    }
    let side = |k: usize| -> ColoredGraph {
        let verts: Vec<usize> = (0..n).filter(|&v| comp[v] == Some(k)).collect();
        let vmap: HashMap<usize, usize> =
            verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let names: Vec<String> = verts.iter().map(|&v| g.vertices[v].clone()).collect();
        let mut used: BTreeSet<usize> = BTreeSet::new();
        let mut raw = Vec::new();
        for &(u, v, cc) in &g.edges {
            if cc != c && comp[u] == Some(k) && comp[v] == Some(k) {
                raw.push((u, v, cc));
                used.insert(cc);
            }
        }
        let cmap: HashMap<usize, usize> =
            used.iter().enumerate().map(|(i, &cc)| (cc, i)).collect();
        let cnames: Vec<String> = used.iter().map(|&cc| g.colors[cc].clone()).collect();
        let edges = raw.into_iter().map(|(u, v, cc)| (vmap[&u], vmap[&v], cmap[&cc])).collect();
        ColoredGraph::new(names, cnames, edges).expect("component is well-formed")
    };
    Ok((side(0), side(1)))
}

/// The exchange move: given a rainbow walk `w = v_0 c_0 v_1 ... c_k v_{k+1}`
/// and a closing edge `(v_{k+1}, c_0, v_{k+2})`, return a rainbow walk from
/// `v_{k+2}` back to `v_0` of length k whose color set is `{c_1,...,c_k}`.
pub fn exchange_walk(g: &ColoredGraph, w: &Walk, closing_to: usize) -> Result<Walk, EcError> {
    w.validate(g)?;
    if !is_rainbow(w) {
        return Err(EcError::PreconditionViolated("walk is not rainbow".into()));
    }
    if w.is_empty() {
        return Err(EcError::PreconditionViolated("walk must have an edge".into()));
    }
    let c0 = w.color_seq[0];
    let tail = w.terminus();
    if !g.adj[tail].contains(&(closing_to, c0)) {
        return Err(EcError::PreconditionViolated(
            "closing edge with the first color does not exist".into(),
        ));
    }
    is_rainbow_boomerang(g)?.map_err(|_| EcError::NotRainbowBoomerang)?;
    // In an RB graph the shortest path from v_{k+2} to v_0 has exactly the
    // required length and color set; extract one by BFS parent tracking.
    let start = closing_to;
    let goal = w.origin();
    let mut prev: Vec<Option<(usize, usize)>> = vec![None; g.vertex_count()];
    let mut seen = vec![false; g.vertex_count()];
    seen[start] = true;
    let mut q = VecDeque::from([start]);
    while let Some(u) = q.pop_front() {
        for &(v, c) in &g.adj[u] {
            if !seen[v] {
                seen[v] = true;
                prev[v] = Some((u, c));
                q.push_back(v);
            }
        }
    }
    let mut vseq = vec![goal];
    let mut cseq = Vec::new();
    let mut cur = goal;
    while cur != start {
        let (p, c) = prev[cur].ok_or(EcError::Disconnected)?;
        cseq.push(c);
        vseq.push(p);
        cur = p;
    }
    vseq.reverse();
    cseq.reverse();
    let out = Walk {
        vertex_seq: vseq,
        color_seq: cseq,
    };
    debug_assert_eq!(out.len(), w.len() - 1);
    Ok(out)
}

/// The hypercube embedding of an RB graph; injective with edges mapping to
/// Hamming-1 pairs.
pub fn embed_hypercube(g: &ColoredGraph) -> Result<HypercubeLabeling, EcError> {
    let lab = is_rainbow_boomerang(g)?.map_err(|_| EcError::NotRainbowBoomerang)?;
    let mut seen = HashSet::new();
    for &l in &lab.label {
        if !seen.insert(l) {
            return Err(EcError::NotRainbowBoomerang);
        }
    }
    Ok(lab)
}

/// A sub-edge-colored subgraph of the hypercube Q_n: vertices are coordinate
/// bitstrings, edges connect Hamming-1 pairs and inherit the coordinate color.
#[derive(Debug, Clone)]
pub struct HypercubeSubgraph {
    pub n: usize,
    pub vertices: Vec<u32>,
    pub edges: Vec<(u32, u32)>,
}

impl HypercubeSubgraph {
    pub fn to_colored_graph(&self) -> Result<ColoredGraph, EcError> {
        let names: Vec<String> = self
            .vertices
            .iter()
            .map(|&v| format!("{v:0width$b}", width = self.n))
            .collect();
        let vmap: HashMap<u32, usize> =
            self.vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut used: BTreeSet<usize> = BTreeSet::new();
        let mut raw = Vec::new();
        for &(u, v) in &self.edges {
            let x = u ^ v;
            if x.count_ones() != 1 {
                return Err(EcError::PreconditionViolated(format!(
                    "{u} and {v} are not hypercube-adjacent"
                )));
            }
            let c = x.trailing_zeros() as usize;
            used.insert(c);
            raw.push((vmap[&u], vmap[&v], c));
        }
        let cmap: HashMap<usize, usize> =
            used.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let cnames: Vec<String> = used.iter().map(|&c| format!("c{}", c + 1)).collect();
        let edges = raw.into_iter().map(|(u, v, c)| (u, v, cmap[&c])).collect();
        ColoredGraph::new(names, cnames, edges)
    }
}

/// Subcube connectivity test: true iff the subgraph meets every subhypercube
/// of Q_n (free-coordinate set plus fixed assignment on the rest) in a
/// connected — possibly empty — piece.
pub fn check_subcube_connectivity(sub: &HypercubeSubgraph) -> Result<bool, EcError> {
    if sub.n > 5 {
        return Err(EcError::SizeLimitExceeded("subcube check needs n <= 5".into()));
    }
    let full = (1u32 << sub.n) - 1;
    let vset: HashSet<u32> = sub.vertices.iter().copied().collect();
    let mut adj: HashMap<u32, Vec<u32>> = HashMap::new();
    for &(u, v) in &sub.edges {
        adj.entry(u).or_default().push(v);
        adj.entry(v).or_default().push(u);
    }
    // Enumerate all subhypercubes: free set F, then every assignment on !F.
    for free in 0..=full {
        let fixed = full & !free;
        let mut a = fixed;
        loop {
            let assign = a;
            let inside: Vec<u32> = sub
                .vertices
                .iter()
                .copied()
                .filter(|&v| v & fixed == assign)
                .collect();
            if inside.len() > 1 {
                let start = inside[0];
                let mut seen: HashSet<u32> = HashSet::from([start]);
                let mut q = VecDeque::from([start]);
                while let Some(u) = q.pop_front() {
                    if let Some(nbrs) = adj.get(&u) {
                        for &v in nbrs {
                            if v & fixed == assign && vset.contains(&v) && seen.insert(v) {
                                q.push_back(v);
                            }
                        }
                    }
                }
                if seen.len() != inside.len() {
                    return Ok(false);
                }
            }
            if a == 0 {
                break;
            }
            a = (a - 1) & fixed;
        }
    }
    Ok(true)
}

/// Exhaustive rainbow-boomerang colorability search over an uncolored simple
/// graph, enumerating proper edge partitions up to color renaming.
pub fn search_rb_coloring(
    n_vertices: usize,
    edge_list: &[(usize, usize)],
    max_colors: usize,
) -> Result<Option<ColoredGraph>, EcError> {
    if edge_list.len() > 12 {
        return Err(EcError::SizeLimitExceeded("search needs <= 12 edges".into()));
    }
    // An RB graph is bipartite; refuse early if the input is not.
    let mut adj = vec![Vec::new(); n_vertices];
    for (i, &(u, v)) in edge_list.iter().enumerate() {
        adj[u].push((v, i));
        adj[v].push((u, i));
    }
    let mut side = vec![None; n_vertices];
    for s in 0..n_vertices {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for &(v, _) in &adj[u] {
                match side[v] {
                    None => {
                        side[v] = Some(!side[u].unwrap());
                        q.push_back(v);
                    }
                    Some(x) if x == side[u].unwrap() => return Ok(None),
                    _ => {}
                }
            }
        }
    }
    // Backtracking over restricted-growth color assignments per edge.
    let m = edge_list.len();
    let mut color = vec![usize::MAX; m];
    let build = |color: &[usize], n_colors: usize| -> Option<ColoredGraph> {
        let names: Vec<String> = (0..n_vertices).map(|v| format!("v{}", v + 1)).collect();
        let cnames: Vec<String> = (0..n_colors).map(|c| format!("c{}", c + 1)).collect();
        let edges: Vec<(usize, usize, usize)> = edge_list
            .iter()
            .zip(color)
            .map(|(&(u, v), &c)| (u, v, c))
            .collect();
        let g = ColoredGraph::new(names, cnames, edges).ok()?;
        match is_rainbow_boomerang(&g) {
            Ok(Ok(_)) => Some(g),
            _ => None,
        }
    };
    fn rec(
        idx: usize,
        used: usize,
        color: &mut Vec<usize>,
        edge_list: &[(usize, usize)],
        adj: &[Vec<(usize, usize)>],
        max_colors: usize,
        build: &dyn Fn(&[usize], usize) -> Option<ColoredGraph>,
    ) -> Option<ColoredGraph> {
        if idx == edge_list.len() {
            return build(color, used);
        }
        let (u, v) = edge_list[idx];
        // Restricted growth: new color index is at most `used`.
        for c in 0..=used.min(max_colors - 1) {
            // Properness: no incident colored edge may already use c.
            let clash = adj[u]
                .iter()
                .chain(adj[v].iter())
                .any(|&(_, e)| e < idx && color[e] == c);
            if clash {
                continue;
            }
            color[idx] = c;
            // Four-cycle law: any 4-cycle must alternate two colors.  Check
            // cycles closed by this edge whose other three edges are colored.
            let mut ok = true;
            'outer: for &(w1, e1) in &adj[u] {
                if e1 >= idx || w1 == v {
                    continue;
                }
                for &(w2, e2) in &adj[v] {
                    if e2 >= idx || w2 == u || w2 == w1 {
                        continue;
                    }
                    // u - w1, v - w2; need w1 - w2 edge to close the 4-cycle.
                    for &(w3, e3) in &adj[w1] {
                        if e3 < idx && w3 == w2 {
                            // Cycle edges: idx (u,v), e1 (u,w1), e3 (w1,w2), e2 (w2,v).
                            if color[idx] != color[e3] || color[e1] != color[e2] {
                                ok = false;
                                break 'outer;
                            }
                        }
                    }
                }
            }
            if ok {
                if let Some(g) = rec(idx + 1, used.max(c + 1), color, edge_list, adj, max_colors, build)
                {
                    return Some(g);
                }
            }
            color[idx] = usize::MAX;
        }
        None
    }
    if m == 0 {
        return Ok(None);
    }
    Ok(rec(0, 0, &mut color, edge_list, &adj, max_colors, &build))
}

// ---- standard constructors ----

/// The hypercube Q_n with its natural coordinate coloring.
pub fn hypercube(n: usize) -> ColoredGraph {
    assert!(n >= 1 && n <= 7);
    let names: Vec<String> = (0..1u32 << n).map(|v| format!("{v:0n$b}")).collect();
    let cnames: Vec<String> = (0..n).map(|c| format!("c{}", c + 1)).collect();
    let mut edges = Vec::new();
    for v in 0..1u32 << n {
        for c in 0..n {
            let w = v ^ (1 << c);
            if v < w {
                edges.push((v as usize, w as usize, c));
            }
        }
    }
    ColoredGraph::new(names, cnames, edges).unwrap()
}

/// A cycle whose i-th edge (between v_i and v_{i+1}, cyclically) carries the
/// i-th given color name.
pub fn cycle(color_seq: &[&str]) -> Result<ColoredGraph, EcError> {
    let n = color_seq.len();
    assert!(n >= 3);
    let names: Vec<String> = (0..n).map(|v| format!("v{}", v + 1)).collect();
    let mut cnames: Vec<String> = color_seq.iter().map(|s| s.to_string()).collect();
    cnames.sort();
    cnames.dedup();
    let cidx: HashMap<&str, usize> =
        cnames.iter().enumerate().map(|(i, c)| (c.as_str(), i)).collect();
    let edges: Vec<(usize, usize, usize)> = (0..n)
        .map(|i| (i, (i + 1) % n, cidx[color_seq[i]]))
        .collect();
    ColoredGraph::new(names, cnames, edges)
}

/// Edge list of the complete bipartite graph K_{m,n} (uncolored).
pub fn complete_bipartite_edges(m: usize, n: usize) -> (usize, Vec<(usize, usize)>) {
    let mut edges = Vec::new();
    for i in 0..m {
        for j in 0..n {
            edges.push((i, m + j));
        }
    }
    (m + n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(vs: usize, cs: &[&str], es: &[(usize, usize, usize)]) -> ColoredGraph {
        ColoredGraph::new(
            (0..vs).map(|v| format!("v{}", v + 1)).collect(),
            cs.iter().map(|c| c.to_string()).collect(),
            es.to_vec(),
        )
        .unwrap()
    }

    #[test]
    fn proper_validation() {
        // Triangle with all edges the same color: improper at every vertex.
        let t = graph(3, &["c"], &[(0, 1, 0), (1, 2, 0), (0, 2, 0)]);
        assert!(matches!(t.validate_proper(), Err(EcError::NotProperlyColored(_))));
        // Alternating square is proper.
        let sq = cycle(&["c1", "c2", "c1", "c2"]).unwrap();
        assert!(sq.validate_proper().is_ok());
        // A single edge is proper.
        let e = graph(2, &["c"], &[(0, 1, 0)]);
        assert!(e.validate_proper().is_ok());
    }

    #[test]
    fn distance_tables() {
        let p3 = graph(3, &["a", "b"], &[(0, 1, 0), (1, 2, 1)]);
        assert_eq!(p3.distances()[0][2], Some(2));
        let q3 = hypercube(3);
        let d = q3.distances();
        let max = d.iter().flatten().map(|x| x.unwrap()).max().unwrap();
        assert_eq!(max, 3);
        let c10 = cycle(&["a", "b", "c", "d", "e", "a", "b", "c", "d", "e"]).unwrap();
        let d = c10.distances();
        let max = d.iter().flatten().map(|x| x.unwrap()).max().unwrap();
        assert_eq!(max, 5);
    }

    #[test]
    fn rainbow_and_shortest() {
        let sq = cycle(&["c1", "c2", "c1", "c2"]).unwrap();
        let empty = Walk {
            vertex_seq: vec![0],
            color_seq: vec![],
        };
        assert!(is_rainbow(&empty));
        let around = Walk {
            vertex_seq: vec![0, 1, 2, 3],
            color_seq: vec![
                sq.color_names().iter().position(|c| c == "c1").unwrap(),
                sq.color_names().iter().position(|c| c == "c2").unwrap(),
                sq.color_names().iter().position(|c| c == "c1").unwrap(),
            ],
        };
        around.validate(&sq).unwrap();
        assert!(!is_rainbow(&around));
        assert!(!is_shortest(&sq, &around));
    }

    #[test]
    fn rb_fast_path_verdicts() {
        let sq = cycle(&["c1", "c2", "c1", "c2"]).unwrap();
        assert!(is_rainbow_boomerang(&sq).unwrap().is_ok());
        let sq4 = cycle(&["c1", "c2", "c3", "c4"]).unwrap();
        assert!(is_rainbow_boomerang(&sq4).unwrap().is_err());
        assert!(is_rainbow_boomerang(&hypercube(4)).unwrap().is_ok());
        let c6 = cycle(&["c1", "c2", "c3", "c1", "c2", "c3"]).unwrap();
        assert!(is_rainbow_boomerang(&c6).unwrap().is_ok());
    }

    #[test]
    fn oracle_matches_on_fixtures() {
        for g in [
            cycle(&["c1", "c2", "c1", "c2"]).unwrap(),
            cycle(&["c1", "c2", "c3", "c4"]).unwrap(),
            cycle(&["c1", "c2", "c3", "c1", "c2", "c3"]).unwrap(),
            cycle(&["c1", "c2", "c1", "c3", "c1", "c2", "c1", "c3"]).unwrap(),
            hypercube(3),
        ] {
            assert_eq!(
                rb_oracle(&g).unwrap(),
                is_rainbow_boomerang(&g).unwrap().is_ok()
            );
        }
    }

    #[test]
    fn color_sets() {
        let q3 = hypercube(3);
        assert_eq!(color_set(&q3, 0, 0).unwrap(), 0);
        assert_eq!(color_set(&q3, 0, 1).unwrap().count_ones(), 1);
        assert_eq!(color_set(&q3, 0, 7).unwrap().count_ones(), 3);
        // Separation: distinct vertices have distinct color sets.
        let mut seen = HashSet::new();
        for v in 0..8 {
            assert!(seen.insert(color_set(&q3, 0, v).unwrap()));
        }
    }

    #[test]
    fn quotient_basics() {
        let q3 = hypercube(3);
        let (same, _) = quotient(&q3, &BTreeSet::new());
        assert_eq!(same.vertex_count(), 8);
        assert_eq!(same.edge_count(), 12);
        let all: BTreeSet<usize> = (0..3).collect();
        let (point, _) = quotient(&q3, &all);
        assert_eq!(point.vertex_count(), 1);
        assert_eq!(point.edge_count(), 0);
        // Quotient of an RB graph by any color subset stays RB.
        for mask in 0..8usize {
            let d: BTreeSet<usize> = (0..3).filter(|c| mask >> c & 1 == 1).collect();
            let (q, _) = quotient(&q3, &d);
            if q.vertex_count() > 1 {
                assert!(is_rainbow_boomerang(&q).unwrap().is_ok());
            }
        }
    }

    #[test]
    fn splitting() {
        let e = graph(2, &["c"], &[(0, 1, 0)]);
        let (a, b) = split_by_color(&e, 0).unwrap();
        assert_eq!((a.vertex_count(), b.vertex_count()), (1, 1));
        let q3 = hypercube(3);
        let (a, b) = split_by_color(&q3, 0).unwrap();
        assert_eq!((a.vertex_count(), b.vertex_count()), (4, 4));
        assert!(is_rainbow_boomerang(&a).unwrap().is_ok());
        assert!(is_rainbow_boomerang(&b).unwrap().is_ok());
        let sq = cycle(&["c1", "c2", "c1", "c2"]).unwrap();
        let c1 = sq.color_names().iter().position(|c| c == "c1").unwrap();
        let (a, b) = split_by_color(&sq, c1).unwrap();
        assert_eq!((a.edge_count(), b.edge_count()), (1, 1));
    }

    #[test]
    fn exchange_move() {
        let sq = cycle(&["c1", "c2", "c1", "c2"]).unwrap();
        let c1 = sq.color_names().iter().position(|c| c == "c1").unwrap();
        let c2 = sq.color_names().iter().position(|c| c == "c2").unwrap();
        // w = v1 -c1- v2 -c2- v3, closing edge (v3, c1, v4).
        let w = Walk {
            vertex_seq: vec![0, 1, 2],
            color_seq: vec![c1, c2],
        };
        let back = exchange_walk(&sq, &w, 3).unwrap();
        assert_eq!(back.len(), 1);
        assert_eq!(back.color_seq, vec![c2]);
        assert_eq!((back.origin(), back.terminus()), (3, 0));
        // Length-1 walk: closing edge returns to the start, empty walk back.
        let w = Walk {
            vertex_seq: vec![0, 1],
            color_seq: vec![c1],
        };
        let back = exchange_walk(&sq, &w, 0).unwrap();
        assert!(back.is_empty());
        // Brute-force all rainbow 2-walks with closing edges in Q_3.
        let q3 = hypercube(3);
        for &(u, v, c) in q3.edges() {
            for &(x, d) in q3.neighbors(v) {
                if d == c {
                    continue;
                }
                for &(y, e) in q3.neighbors(x) {
                    if e != c {
                        continue;
                    }
                    let w = Walk {
                        vertex_seq: vec![u, v, x],
                        color_seq: vec![c, d],
                    };
                    let back = exchange_walk(&q3, &w, y).unwrap();
                    assert_eq!(back.len(), 1);
                    assert!(is_rainbow(&back));
                    assert_eq!(back.color_seq, vec![d]);
                }
            }
        }
    }

    #[test]
    fn hypercube_embedding() {
        let e = graph(2, &["c"], &[(0, 1, 0)]);
        let lab = embed_hypercube(&e).unwrap();
        assert_eq!(lab.label, vec![0, 1]);
        let q3 = hypercube(3);
        let lab = embed_hypercube(&q3).unwrap();
        let set: HashSet<u128> = lab.label.iter().copied().collect();
        assert_eq!(set.len(), 8);
        let c6 = cycle(&["c1", "c2", "c3", "c1", "c2", "c3"]).unwrap();
        let lab = embed_hypercube(&c6).unwrap();
        let set: HashSet<u128> = lab.label.iter().copied().collect();
        assert_eq!(set.len(), 6);
        assert!(lab.label.iter().all(|l| *l < 8));
    }

    #[test]
    fn subcube_connectivity_cases() {
        // The full hypercube is fine.
        let full = HypercubeSubgraph {
            n: 3,
            vertices: (0..8).collect(),
            edges: (0..8u32)
                .flat_map(|v| (0..3).map(move |c| (v, v ^ (1 << c))))
                .filter(|&(u, v)| u < v)
                .collect(),
        };
        assert!(check_subcube_connectivity(&full).unwrap());
        // A 2-edge path covering 3 of the 4 vertices of Q_2.
        let path = HypercubeSubgraph {
            n: 2,
            vertices: vec![0b00, 0b01, 0b11],
            edges: vec![(0b00, 0b01), (0b01, 0b11)],
        };
        assert!(check_subcube_connectivity(&path).unwrap());
        assert!(is_rainbow_boomerang(&path.to_colored_graph().unwrap())
            .unwrap()
            .is_ok());
        // All 4 vertices of Q_2 but one edge missing: a Q_1 face is disconnected.
        let broken = HypercubeSubgraph {
            n: 2,
            vertices: vec![0b00, 0b01, 0b10, 0b11],
            edges: vec![(0b00, 0b01), (0b01, 0b11), (0b11, 0b10)],
        };
        assert!(!check_subcube_connectivity(&broken).unwrap());
    }

    #[test]
    fn coloring_search() {
        // K_{2,3} admits no RB coloring.
        let (n, es) = complete_bipartite_edges(2, 3);
        assert!(search_rb_coloring(n, &es, 6).unwrap().is_none());
        // K_{2,2} does: the alternating square.
        let (n, es) = complete_bipartite_edges(2, 2);
        let g = search_rb_coloring(n, &es, 4).unwrap().unwrap();
        assert_eq!(g.color_count(), 2);
        // Trees always do, with all-distinct colors.
        let tree = vec![(0, 1), (1, 2), (1, 3), (3, 4)];
        let g = search_rb_coloring(5, &tree, 4).unwrap().unwrap();
        assert!(is_rainbow_boomerang(&g).unwrap().is_ok());
        // Odd cycles never do (not bipartite).
        let tri = vec![(0, 1), (1, 2), (2, 0)];
        assert!(search_rb_coloring(3, &tri, 3).unwrap().is_none());
    }

    #[test]
    fn bridge_color_is_unique() {
        // Two alternating squares with disjoint color pairs, joined by a
        // bridge of a fresh color: RB, and the bridge color is unique.
        let es = vec![
            (0, 1, 0),
            (1, 2, 1),
            (2, 3, 0),
            (3, 0, 1),
            (3, 4, 2),
            (4, 5, 3),
            (5, 6, 4),
            (6, 7, 3),
            (7, 4, 4),
        ];
        let g = graph(8, &["c1", "c2", "b", "c3", "c4"], &es);
        assert!(is_rainbow_boomerang(&g).unwrap().is_ok());
        // Every edge of a tree is a bridge, so a tree is RB exactly when all
        // its colors are distinct: the properly colored path a,b,a fails.
        let p = graph(4, &["a", "b"], &[(0, 1, 0), (1, 2, 1), (2, 3, 0)]);
        assert!(p.validate_proper().is_ok());
        assert!(is_rainbow_boomerang(&p).unwrap().is_err());
        let p = graph(4, &["a", "b", "c"], &[(0, 1, 0), (1, 2, 1), (2, 3, 2)]);
        assert!(is_rainbow_boomerang(&p).unwrap().is_ok());
    }

    #[test]
    fn json_round_trip() {
        let q3 = hypercube(3);
        let j = q3.to_json();
        let back = ColoredGraph::from_json(&j).unwrap();
        assert_eq!(back.vertex_count(), 8);
        assert_eq!(back.edge_count(), 12);
        assert!(is_rainbow_boomerang(&back).unwrap().is_ok());
    }
}
