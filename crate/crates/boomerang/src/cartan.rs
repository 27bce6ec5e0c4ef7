//! Semi Cartan graphs, Weyl groupoid generation, real roots, the axioms
//! (CG1)-(CG4), the exchange property l(w) = N(w), simply connected covers,
//! path subgroupoids, root orbits, and the induced rainbow boomerang graph.
//!
//! A semi Cartan graph is encoded by per-color involutions `r_i` on the
//! vertex set (fixed points are loops) together with one generalized Cartan
//! matrix per vertex; (CG1) is then structural and (CG2) is validated at
//! construction time.  All matrix arithmetic is checked `i64`; overflow is
//! reported as a budget error rather than wrapping.

use crate::ecgraph::ColoredGraph;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CartanError {
    #[error("invalid generalized Cartan matrix: {0}")]
    InvalidGcm(String),
    #[error("invalid semi Cartan graph: {0}")]
    InvalidGraph(String),
    #[error("generation budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("graph is not path-simply connected: {0}")]
    NotPathSimplyConnected(String),
    #[error("rank-2 structure required: {0}")]
    NotRank2(String),
}

/// A generalized Cartan matrix: 2s on the diagonal, non-positive entries off
/// it, and a symmetric zero pattern.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Gcm(Vec<Vec<i64>>);

impl Gcm {
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self, CartanError> {
        let n = entries.len();
        for row in &entries {
            if row.len() != n {
                return Err(CartanError::InvalidGcm("matrix is not square".into()));
            }
        }
        for i in 0..n {
            if entries[i][i] != 2 {
                return Err(CartanError::InvalidGcm(format!("a[{i}][{i}] != 2")));
            }
            for j in 0..n {
                if i != j && entries[i][j] > 0 {
                    return Err(CartanError::InvalidGcm(format!("a[{i}][{j}] > 0")));
                }
                if i != j && (entries[i][j] == 0) != (entries[j][i] == 0) {
                    return Err(CartanError::InvalidGcm(format!(
                        "zero pattern asymmetric at ({i},{j})"
                    )));
                }
            }
        }
        Ok(Gcm(entries))
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.0[i][j]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.0[i]
    }

    pub fn entries(&self) -> &Vec<Vec<i64>> {
        &self.0
    }

    /// The Cartan matrix of type A_n (tridiagonal -1s).
    pub fn type_a(n: usize) -> Gcm {
        let mut m = vec![vec![0i64; n]; n];
        for i in 0..n {
            m[i][i] = 2;
            if i + 1 < n {
                m[i][i + 1] = -1;
                m[i + 1][i] = -1;
            }
        }
        Gcm(m)
    }
}

/// Square integer matrix with checked arithmetic.
pub type IMat = Vec<Vec<i64>>;

pub fn identity_matrix(n: usize) -> IMat {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

/// Checked matrix product; overflow means the groupoid is running away and is
/// surfaced as a budget error.
pub fn mat_mul(a: &IMat, b: &IMat) -> Result<IMat, CartanError> {
    let n = a.len();
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut acc: i64 = 0;
            for k in 0..n {
                let p = a[i][k]
                    .checked_mul(b[k][j])
                    .ok_or_else(|| CartanError::BudgetExceeded("matrix overflow".into()))?;
                acc = acc
                    .checked_add(p)
                    .ok_or_else(|| CartanError::BudgetExceeded("matrix overflow".into()))?;
            }
            out[i][j] = acc;
        }
    }
    Ok(out)
}

pub fn mat_vec(a: &IMat, v: &[i64]) -> Result<Vec<i64>, CartanError> {
    let n = a.len();
    let mut out = vec![0i64; n];
    for i in 0..n {
        let mut acc: i64 = 0;
        for k in 0..n {
            let p = a[i][k]
                .checked_mul(v[k])
                .ok_or_else(|| CartanError::BudgetExceeded("vector overflow".into()))?;
            acc = acc
                .checked_add(p)
                .ok_or_else(|| CartanError::BudgetExceeded("vector overflow".into()))?;
        }
        out[i] = acc;
    }
    Ok(out)
}

/// A semi Cartan graph: named vertices, one involution per color (fixed
/// points encode loops), and a GCM label per vertex.
#[derive(Debug, Clone)]
pub struct SemiCartanGraph {
    theta: usize,
    names: Vec<String>,
    /// r[i][x] = the vertex reached from x along color i (possibly x itself).
    r: Vec<Vec<usize>>,
    gcm: Vec<Gcm>,
}

/// JSON wire format; loops are omitted (a missing color at a vertex is a loop).
#[derive(Debug, Serialize, Deserialize)]
pub struct SemiCartanJson {
    pub theta: usize,
    pub vertices: Vec<SemiCartanVertexJson>,
    pub edges: Vec<(String, String, usize)>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct SemiCartanVertexJson {
    pub name: String,
    pub gcm: Vec<Vec<i64>>,
}

impl SemiCartanGraph {
    /// Validates (CG1) (involutions) and (CG2) (row compatibility along
    /// non-loop edges) besides basic well-formedness.
    pub fn new(
        theta: usize,
        names: Vec<String>,
        r: Vec<Vec<usize>>,
        gcm: Vec<Gcm>,
    ) -> Result<Self, CartanError> {
        let n = names.len();
        if r.len() != theta || gcm.len() != n {
            return Err(CartanError::InvalidGraph("shape mismatch".into()));
        }
        for g in &gcm {
            if g.rank() != theta {
                return Err(CartanError::InvalidGraph("GCM rank != theta".into()));
            }
        }
        for (i, ri) in r.iter().enumerate() {
            if ri.len() != n {
                return Err(CartanError::InvalidGraph("involution length mismatch".into()));
            }
            for x in 0..n {
                if ri[x] >= n || ri[ri[x]] != x {
                    return Err(CartanError::InvalidGraph(format!(
                        "r_{} is not an involution at vertex {}",
                        i + 1,
                        names[x]
                    )));
                }
            }
        }
        // CG2: the i-th row of A^x equals the i-th row of A^{r_i x}.
        for i in 0..theta {
            for x in 0..n {
                let y = r[i][x];
                if gcm[x].row(i) != gcm[y].row(i) {
                    return Err(CartanError::InvalidGraph(format!(
                        "(CG2) fails at vertex {} color {}",
                        names[x],
                        i + 1
                    )));
                }
            }
        }
        Ok(SemiCartanGraph {
            theta,
            names,
            r,
            gcm,
        })
    }

    pub fn theta(&self) -> usize {
        self.theta
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn reflect_vertex(&self, i: usize, x: usize) -> usize {
        self.r[i][x]
    }

    pub fn is_loop(&self, i: usize, x: usize) -> bool {
        self.r[i][x] == x
    }

    pub fn gcm(&self, x: usize) -> &Gcm {
        &self.gcm[x]
    }

    pub fn from_json(json: &SemiCartanJson) -> Result<Self, CartanError> {
        let names: Vec<String> = json.vertices.iter().map(|v| v.name.clone()).collect();
        let idx: HashMap<&str, usize> =
            names.iter().enumerate().map(|(i, n)| (n.as_str(), i)).collect();
        let gcm = json
            .vertices
            .iter()
            .map(|v| Gcm::new(v.gcm.clone()))
            .collect::<Result<Vec<_>, _>>()?;
        let mut r: Vec<Vec<usize>> = (0..json.theta).map(|_| (0..names.len()).collect()).collect();
        for (x, y, i) in &json.edges {
            let xi = *idx
                .get(x.as_str())
                .ok_or_else(|| CartanError::InvalidGraph(format!("unknown vertex {x}")))?;
            let yi = *idx
                .get(y.as_str())
                .ok_or_else(|| CartanError::InvalidGraph(format!("unknown vertex {y}")))?;
            if *i == 0 || *i > json.theta {
                return Err(CartanError::InvalidGraph(format!("color {i} out of range")));
            }
            r[i - 1][xi] = yi;
            r[i - 1][yi] = xi;
        }
        SemiCartanGraph::new(json.theta, names, r, gcm)
    }

    pub fn to_json(&self) -> SemiCartanJson {
        let mut edges = Vec::new();
        for i in 0..self.theta {
            for x in 0..self.vertex_count() {
                let y = self.r[i][x];
                if x < y {
                    edges.push((self.names[x].clone(), self.names[y].clone(), i + 1));
                }
            }
        }
        SemiCartanJson {
            theta: self.theta,
            vertices: self
                .names
                .iter()
                .zip(&self.gcm)
                .map(|(name, g)| SemiCartanVertexJson {
                    name: name.clone(),
                    gcm: g.entries().clone(),
                })
                .collect(),
            edges,
        }
    }

    /// Deterministic DOT export; loops are drawn as self-edges.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph \"{name}\" {{\n");
        for v in &self.names {
            out.push_str(&format!("  \"{v}\";\n"));
        }
        for i in 0..self.theta {
            for x in 0..self.vertex_count() {
                let y = self.r[i][x];
                if x <= y {
                    out.push_str(&format!(
                        "  \"{}\" -- \"{}\" [label=\"{}\"];\n",
                        self.names[x],
                        self.names[y],
                        i + 1
                    ));
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

/// The matrix of the simple reflection `s_i^x`: it sends `α_j` to
/// `α_j − a^x_{ij} α_i` and `α_i` to `−α_i`, i.e. it is the identity except
/// in row i, where the entry at (i,j) is `−a^x_{ij}` (so −1 at (i,i)).
pub fn simple_reflection_matrix(g: &SemiCartanGraph, x: usize, i: usize) -> IMat {
    let n = g.theta();
    let mut m = identity_matrix(n);
    for j in 0..n {
        m[i][j] = if j == i { -1 } else { -g.gcm(x).entry(i, j) };
    }
    m
}

/// An element of the Weyl groupoid: a linear map from the root lattice at
/// `source` to the one at `target`, with a shortest witnessing word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupoidMorphism {
    pub source: usize,
    pub target: usize,
    pub matrix: IMat,
    /// Generator indices applied left to right starting at `source`;
    /// guaranteed shortest by breadth-first generation.
    pub word: Vec<usize>,
}

impl GroupoidMorphism {
    pub fn is_identity(&self) -> bool {
        self.source == self.target && self.matrix == identity_matrix(self.matrix.len())
    }

    pub fn apply(&self, v: &[i64]) -> Result<Vec<i64>, CartanError> {
        mat_vec(&self.matrix, v)
    }
}

const DEFAULT_MAX_WORD: usize = 64;
const DEFAULT_MAX_MORPHISMS: usize = 1_000_000;

/// Breadth-first closure of the groupoid generated by all simple reflections.
/// Morphisms are identified by (source, target, matrix); the stored word is a
/// shortest representative.  Generation failing to terminate within the
/// budget is reported as an error (the groupoid is then presumed infinite).
pub fn generate_groupoid(g: &SemiCartanGraph) -> Result<Vec<GroupoidMorphism>, CartanError> {
    generate_with(g, |_i, _x| true)
}

fn generate_with(
    g: &SemiCartanGraph,
    allow: impl Fn(usize, usize) -> bool,
) -> Result<Vec<GroupoidMorphism>, CartanError> {
    let n = g.vertex_count();
    let mut seen: BTreeSet<(usize, usize, IMat)> = BTreeSet::new();
    let mut out: Vec<GroupoidMorphism> = Vec::new();
    let mut queue: VecDeque<usize> = VecDeque::new();
    for x in 0..n {
        let id = GroupoidMorphism {
            source: x,
            target: x,
            matrix: identity_matrix(g.theta()),
            word: Vec::new(),
        };
        seen.insert((x, x, id.matrix.clone()));
        out.push(id);
        queue.push_back(out.len() - 1);
    }
    while let Some(idx) = queue.pop_front() {
        let (src, tgt, word_len) = (out[idx].source, out[idx].target, out[idx].word.len());
        if word_len >= DEFAULT_MAX_WORD {
            return Err(CartanError::BudgetExceeded(format!(
                "word length exceeded {DEFAULT_MAX_WORD}"
            )));
        }
        for i in 0..g.theta() {
            if !allow(i, tgt) {
                continue;
            }
            let s = simple_reflection_matrix(g, tgt, i);
            let m = mat_mul(&s, &out[idx].matrix)?;
            let new_tgt = g.reflect_vertex(i, tgt);
            if seen.insert((src, new_tgt, m.clone())) {
                let mut word = out[idx].word.clone();
                word.push(i);
                out.push(GroupoidMorphism {
                    source: src,
                    target: new_tgt,
                    matrix: m,
                    word,
                });
                if out.len() > DEFAULT_MAX_MORPHISMS {
                    return Err(CartanError::BudgetExceeded(format!(
                        "more than {DEFAULT_MAX_MORPHISMS} morphisms"
                    )));
                }
                queue.push_back(out.len() - 1);
            }
        }
    }
    Ok(out)
}

/// The path subgroupoid: the closure using only non-loop generator steps.
pub fn path_subgroupoid(g: &SemiCartanGraph) -> Result<Vec<GroupoidMorphism>, CartanError> {
    generate_with(g, |i, x| !g.is_loop(i, x))
}

/// Real roots per vertex: `R^x` is the set of images of simple roots under
/// all morphisms into x, and `R^{x+}` its coordinatewise-nonnegative part.
#[derive(Debug, Clone)]
pub struct RootSystem {
    pub roots: Vec<BTreeSet<Vec<i64>>>,
    pub positive: Vec<BTreeSet<Vec<i64>>>,
}

pub fn real_roots(
    g: &SemiCartanGraph,
    morphisms: &[GroupoidMorphism],
) -> Result<RootSystem, CartanError> {
    let n = g.vertex_count();
    let mut roots: Vec<BTreeSet<Vec<i64>>> = vec![BTreeSet::new(); n];
    for w in morphisms {
        for i in 0..g.theta() {
            let mut e = vec![0i64; g.theta()];
            e[i] = 1;
            roots[w.target].insert(w.apply(&e)?);
        }
    }
    let positive = roots
        .iter()
        .map(|rs| rs.iter().filter(|r| r.iter().all(|&c| c >= 0)).cloned().collect())
        .collect();
    Ok(RootSystem { roots, positive })
}

/// Per-axiom verdict with an optional human-readable witness.
#[derive(Debug, Clone, Serialize)]
pub struct AxiomReport {
    pub cg1: bool,
    pub cg2: bool,
    pub cg3: bool,
    pub cg4: bool,
    pub witness: Option<String>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.cg1 && self.cg2 && self.cg3 && self.cg4
    }
}

/// Checks (CG1)-(CG4).  (CG1)/(CG2) hold by construction and are re-verified;
/// (CG3) requires every real root to be sign-coherent; (CG4) requires any
/// morphism sending all simple roots of its source into `R^{target+}` to be
/// an identity.
pub fn check_axioms(
    g: &SemiCartanGraph,
    morphisms: &[GroupoidMorphism],
    roots: &RootSystem,
) -> Result<AxiomReport, CartanError> {
    let mut report = AxiomReport {
        cg1: true,
        cg2: true,
        cg3: true,
        cg4: true,
        witness: None,
    };
    for i in 0..g.theta() {
        for x in 0..g.vertex_count() {
            if g.reflect_vertex(i, g.reflect_vertex(i, x)) != x {
                report.cg1 = false;
                report.witness = Some(format!("(CG1) fails at ({}, {})", g.names()[x], i + 1));
            }
            let y = g.reflect_vertex(i, x);
            if g.gcm(x).row(i) != g.gcm(y).row(i) {
                report.cg2 = false;
                report.witness = Some(format!("(CG2) fails at ({}, {})", g.names()[x], i + 1));
            }
        }
    }
    'cg3: for (x, rs) in roots.roots.iter().enumerate() {
        for r in rs {
            let pos = r.iter().all(|&c| c >= 0);
            let neg = r.iter().all(|&c| c <= 0);
            if !(pos || neg) {
                report.cg3 = false;
                report.witness = Some(format!(
                    "(CG3) fails: root {:?} at {} is sign-mixed",
                    r,
                    g.names()[x]
                ));
                break 'cg3;
            }
        }
    }
    'cg4: for w in morphisms {
        let mut all_pos = true;
        for i in 0..g.theta() {
            let mut e = vec![0i64; g.theta()];
            e[i] = 1;
            let img = w.apply(&e)?;
            if !roots.positive[w.target].contains(&img) {
                all_pos = false;
                break;
            }
        }
        if all_pos && !w.is_identity() {
            report.cg4 = false;
            report.witness = Some(format!(
                "(CG4) fails: non-identity morphism {} -> {} fixes positivity",
                g.names()[w.source],
                g.names()[w.target]
            ));
            break 'cg4;
        }
    }
    Ok(report)
}

/// The bijection of `s_i^x` between `R^{x+} \ {α_i}` and `R^{r_i x,+} \ {α_i}`:
/// the only positive root a simple reflection sends negative is its own.
pub fn root_bijection_check(
    g: &SemiCartanGraph,
    roots: &RootSystem,
    x: usize,
    i: usize,
) -> Result<bool, CartanError> {
    let s = simple_reflection_matrix(g, x, i);
    let y = g.reflect_vertex(i, x);
    let mut alpha = vec![0i64; g.theta()];
    alpha[i] = 1;
    let dom: BTreeSet<&Vec<i64>> =
        roots.positive[x].iter().filter(|r| **r != alpha).collect();
    let cod: BTreeSet<Vec<i64>> = roots.positive[y]
        .iter()
        .filter(|r| **r != alpha)
        .cloned()
        .collect();
    let mut image = BTreeSet::new();
    for r in dom {
        image.insert(mat_vec(&s, r)?);
    }
    Ok(image == cod)
}

/// Computes the pair (word length, inversion number) for a morphism
/// `w: x → y`: `N(w)` counts the roots `α ∈ R^{y+}` with `w⁻¹ α ∈ −R^{x+}`.
/// The exchange property of finite Cartan graphs asserts l = N.
pub fn length_and_n(
    g: &SemiCartanGraph,
    roots: &RootSystem,
    w: &GroupoidMorphism,
) -> Result<(usize, usize), CartanError> {
    // w⁻¹ by composing the involutive generator matrices in reverse order
    // along the vertex trail of the word.
    let mut inv = identity_matrix(g.theta());
    let mut vtx = w.source;
    let mut trail = Vec::with_capacity(w.word.len());
    for &i in &w.word {
        trail.push((vtx, i));
        vtx = g.reflect_vertex(i, vtx);
    }
    debug_assert_eq!(vtx, w.target);
    // (s_{i_t} ... s_{i_1})⁻¹ = s_{i_1}⁻¹ ... s_{i_t}⁻¹, and each generator
    // matrix is its own inverse's matrix by (CG2).
    for &(x, i) in trail.iter() {
        inv = mat_mul(&inv, &simple_reflection_matrix(g, x, i))?;
    }
    debug_assert_eq!(mat_mul(&inv, &w.matrix)?, identity_matrix(g.theta()));
    let mut n = 0usize;
    for alpha in &roots.positive[w.target] {
        let pre = mat_vec(&inv, alpha)?;
        let neg: Vec<i64> = pre.iter().map(|c| -c).collect();
        if roots.positive[w.source].contains(&neg) {
            n += 1;
        }
    }
    Ok((w.word.len(), n))
}

/// A simply connected cover together with its covering data.
#[derive(Debug, Clone)]
pub struct Cover {
    pub graph: SemiCartanGraph,
    /// Covering map: cover vertex index → base vertex index.
    pub projection: Vec<usize>,
    /// The defining morphism (out of the fixed base vertex) of each cover
    /// vertex.
    pub morphisms: Vec<GroupoidMorphism>,
    /// The base vertex in the underlying graph.
    pub base: usize,
}

/// Builds the simply connected cover of a connected Cartan graph: the cover
/// vertices are the groupoid morphisms out of a fixed base vertex, with `r_i`
/// acting by left composition with the target's simple reflection.
pub fn simply_connected_cover(g: &SemiCartanGraph, base: usize) -> Result<Cover, CartanError> {
    let all = generate_groupoid(g)?;
    let mut verts: Vec<GroupoidMorphism> =
        all.into_iter().filter(|w| w.source == base).collect();
    // Deterministic vertex order: by word length then word.
    verts.sort_by(|a, b| (a.word.len(), &a.word).cmp(&(b.word.len(), &b.word)));
    let key = |w: &GroupoidMorphism| (w.target, w.matrix.clone());
    let index: HashMap<(usize, IMat), usize> =
        verts.iter().enumerate().map(|(k, w)| (key(w), k)).collect();
    let names: Vec<String> = verts
        .iter()
        .map(|w| {
            if w.word.is_empty() {
                "id".to_string()
            } else {
                w.word
                    .iter()
                    .rev()
                    .map(|i| format!("s{}", i + 1))
                    .collect::<Vec<_>>()
                    .join("")
            }
        })
        .collect();
    let mut r: Vec<Vec<usize>> = vec![vec![0; verts.len()]; g.theta()];
    for (k, w) in verts.iter().enumerate() {
        for i in 0..g.theta() {
            let s = simple_reflection_matrix(g, w.target, i);
            let m = mat_mul(&s, &w.matrix)?;
            let t = g.reflect_vertex(i, w.target);
            let k2 = *index
                .get(&(t, m))
                .ok_or_else(|| CartanError::InvalidGraph("cover closure broken".into()))?;
            r[i][k] = k2;
        }
    }
    let gcm: Vec<Gcm> = verts.iter().map(|w| g.gcm(w.target).clone()).collect();
    let projection: Vec<usize> = verts.iter().map(|w| w.target).collect();
    let graph = SemiCartanGraph::new(g.theta(), names, r, gcm)?;
    Ok(Cover {
        graph,
        projection,
        morphisms: verts,
        base,
    })
}

/// Root orbit data of a path-simply-connected Cartan graph.
#[derive(Debug, Clone)]
pub struct OrbitData {
    /// The base vertex the orbit representatives are anchored at.
    pub base: usize,
    /// Each orbit as its representative-per-vertex table (index = vertex).
    pub orbits: Vec<Vec<Vec<i64>>>,
    /// Indices (into `orbits`) of orbits positive at the base vertex.
    pub delta_base_plus: BTreeSet<usize>,
    /// Indices of orbits positive at every vertex.
    pub delta_pure_plus: BTreeSet<usize>,
}

impl OrbitData {
    /// Display name for an orbit: its representative at the base vertex.
    pub fn orbit_name(&self, o: usize) -> String {
        let rep = &self.orbits[o][self.base];
        format!(
            "({})",
            rep.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
        )
    }
}

/// Computes the orbit partition of all real roots under the path subgroupoid.
/// Requires path simple connectedness: exactly one path morphism between any
/// two vertices; violations are reported with a witness.
pub fn orbits_delta(
    g: &SemiCartanGraph,
    roots: &RootSystem,
) -> Result<OrbitData, CartanError> {
    let p = path_subgroupoid(g)?;
    let n = g.vertex_count();
    // Hom_P(base, y) must be a singleton for every y.
    let base = 0usize;
    let mut to: Vec<Vec<&GroupoidMorphism>> = vec![Vec::new(); n];
    for w in &p {
        if w.source == base {
            to[w.target].push(w);
        }
    }
    for (y, ws) in to.iter().enumerate() {
        if ws.len() != 1 {
            return Err(CartanError::NotPathSimplyConnected(format!(
                "|Hom_P({}, {})| = {}",
                g.names()[base],
                g.names()[y],
                ws.len()
            )));
        }
    }
    // Also check uniqueness between all pairs, not just from the base.
    let mut pair_count: HashMap<(usize, usize), usize> = HashMap::new();
    for w in &p {
        *pair_count.entry((w.source, w.target)).or_insert(0) += 1;
    }
    for ((x, y), c) in &pair_count {
        if *c != 1 {
            return Err(CartanError::NotPathSimplyConnected(format!(
                "|Hom_P({}, {})| = {}",
                g.names()[*x],
                g.names()[*y],
                c
            )));
        }
    }
    let u: Vec<&GroupoidMorphism> = to.iter().map(|ws| ws[0]).collect();
    let mut orbits = Vec::new();
    let mut delta_base_plus = BTreeSet::new();
    let mut delta_pure_plus = BTreeSet::new();
    for alpha in &roots.roots[base] {
        let mut table = Vec::with_capacity(n);
        for y in 0..n {
            let img = u[y].apply(alpha)?;
            if !roots.roots[y].contains(&img) {
                return Err(CartanError::NotPathSimplyConnected(format!(
                    "orbit of {:?} leaves the root system at {}",
                    alpha,
                    g.names()[y]
                )));
            }
            table.push(img);
        }
        let o = orbits.len();
        let pos_at = |y: usize, t: &Vec<Vec<i64>>| t[y].iter().all(|&c| c >= 0);
        if pos_at(base, &table) {
            delta_base_plus.insert(o);
        }
        if (0..n).all(|y| pos_at(y, &table)) {
            delta_pure_plus.insert(o);
        }
        orbits.push(table);
    }
    // Sanity: orbits partition each R^y (the maps u_y are bijections on roots).
    for y in 0..n {
        let imgs: BTreeSet<&Vec<i64>> = orbits.iter().map(|t| &t[y]).collect();
        if imgs.len() != roots.roots[y].len() {
            return Err(CartanError::NotPathSimplyConnected(format!(
                "orbit representatives collide at {}",
                g.names()[y]
            )));
        }
    }
    Ok(OrbitData {
        base,
        orbits,
        delta_base_plus,
        delta_pure_plus,
    })
}

/// The rainbow boomerang graph of a path-simply-connected Cartan graph:
/// drop loops and recolor each non-loop edge `z — r_i z` by the unique orbit
/// that is positive at the base vertex and passes through `±α_i` at `z`.
pub fn build_rb(
    g: &SemiCartanGraph,
    roots: &RootSystem,
    orbits: &OrbitData,
) -> Result<ColoredGraph, CartanError> {
    let n = g.vertex_count();
    let mut color_of_orbit: BTreeMap<usize, usize> = BTreeMap::new();
    let mut raw_edges: Vec<(usize, usize, usize)> = Vec::new();
    for i in 0..g.theta() {
        for z in 0..n {
            let y = g.reflect_vertex(i, z);
            if y <= z {
                continue;
            }
            // Find the orbit whose representative at z is ±α_i and which is
            // positive at the base vertex.
            let mut alpha = vec![0i64; g.theta()];
            alpha[i] = 1;
            let neg: Vec<i64> = alpha.iter().map(|c| -c).collect();
            let mut hit = None;
            for (o, table) in orbits.orbits.iter().enumerate() {
                if (table[z] == alpha || table[z] == neg)
                    && orbits.delta_base_plus.contains(&o)
                {
                    if hit.replace(o).is_some() {
                        return Err(CartanError::InvalidGraph(format!(
                            "edge ({}, {}) has an ambiguous orbit color",
                            g.names()[z],
                            g.names()[y]
                        )));
                    }
                }
            }
            let o = hit.ok_or_else(|| {
                CartanError::InvalidGraph(format!(
                    "edge ({}, {}) has no orbit color",
                    g.names()[z],
                    g.names()[y]
                ))
            })?;
            let next = color_of_orbit.len();
            let c = *color_of_orbit.entry(o).or_insert(next);
            raw_edges.push((z, y, c));
        }
    }
    // The color set must be exactly the non-pure positive orbits at the base.
    let used: BTreeSet<usize> = color_of_orbit.keys().copied().collect();
    let expected: BTreeSet<usize> = orbits
        .delta_base_plus
        .difference(&orbits.delta_pure_plus)
        .copied()
        .collect();
    if used != expected {
        return Err(CartanError::InvalidGraph(
            "edge orbit colors do not match the non-pure positive orbits".into(),
        ));
    }
    let _ = roots;
    let mut cnames = vec![String::new(); color_of_orbit.len()];
    for (&o, &c) in &color_of_orbit {
        cnames[c] = orbits.orbit_name(o);
    }
    ColoredGraph::new(g.names().to_vec(), cnames, raw_edges)
        .map_err(|e| CartanError::InvalidGraph(format!("RB construction failed: {e}")))
}

/// One-vertex semi Cartan graph with all colors looped.
pub fn one_vertex(gcm: Gcm) -> SemiCartanGraph {
    let theta = gcm.rank();
    SemiCartanGraph::new(
        theta,
        vec!["x".to_string()],
        vec![vec![0]; theta],
        vec![gcm],
    )
    .expect("one-vertex graph is always valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ecgraph;

    fn a1() -> SemiCartanGraph {
        one_vertex(Gcm::new(vec![vec![2]]).unwrap())
    }

    fn a2() -> SemiCartanGraph {
        one_vertex(Gcm::type_a(2))
    }

    /// The 4-cycle of identical rank-2 matrices that satisfies the axioms
    /// but is not path-simply connected.
    fn four_cycle() -> SemiCartanGraph {
        let g = Gcm::new(vec![vec![2, -1], vec![-2, 2]]).unwrap();
        SemiCartanGraph::new(
            2,
            (1..=4).map(|k| format!("x{k}")).collect(),
            vec![vec![1, 0, 3, 2], vec![3, 2, 1, 0]],
            vec![g.clone(), g.clone(), g.clone(), g],
        )
        .unwrap()
    }

    #[test]
    fn reflection_matrices() {
        let g = a2();
        let s1 = simple_reflection_matrix(&g, 0, 0);
        // Columns: alpha_1 -> -alpha_1, alpha_2 -> alpha_2 + alpha_1.
        assert_eq!(mat_vec(&s1, &[1, 0]).unwrap(), vec![-1, 0]);
        assert_eq!(mat_vec(&s1, &[0, 1]).unwrap(), vec![1, 1]);
        // s_i is an involution.
        assert_eq!(mat_mul(&s1, &s1).unwrap(), identity_matrix(2));
        // Braid sanity: s1 s2 s1 = s2 s1 s2 on the one-vertex A_2 graph.
        let s2 = simple_reflection_matrix(&g, 0, 1);
        let lhs = mat_mul(&s1, &mat_mul(&s2, &s1).unwrap()).unwrap();
        let rhs = mat_mul(&s2, &mat_mul(&s1, &s2).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        // The longest element of A_2 sends alpha_2 to -alpha_1.
        assert_eq!(mat_vec(&lhs, &[0, 1]).unwrap(), vec![-1, 0]);
    }

    #[test]
    fn groupoid_sizes() {
        assert_eq!(generate_groupoid(&a1()).unwrap().len(), 2);
        assert_eq!(generate_groupoid(&a2()).unwrap().len(), 6);
    }

    #[test]
    fn roots_of_small_types() {
        let g = a1();
        let ms = generate_groupoid(&g).unwrap();
        let rs = real_roots(&g, &ms).unwrap();
        assert_eq!(rs.roots[0].len(), 2);
        assert_eq!(rs.positive[0].len(), 1);
        let g = a2();
        let ms = generate_groupoid(&g).unwrap();
        let rs = real_roots(&g, &ms).unwrap();
        assert_eq!(rs.positive[0].len(), 3);
        assert_eq!(rs.roots[0].len(), 6);
    }

    #[test]
    fn axioms_pass_on_small_types() {
        for g in [a1(), a2(), four_cycle()] {
            let ms = generate_groupoid(&g).unwrap();
            let rs = real_roots(&g, &ms).unwrap();
            let rep = check_axioms(&g, &ms, &rs).unwrap();
            assert!(rep.all_pass(), "{:?}", rep.witness);
        }
    }

    #[test]
    fn bijection_lemma() {
        for g in [a1(), a2()] {
            let ms = generate_groupoid(&g).unwrap();
            let rs = real_roots(&g, &ms).unwrap();
            for x in 0..g.vertex_count() {
                for i in 0..g.theta() {
                    assert!(root_bijection_check(&g, &rs, x, i).unwrap());
                }
            }
        }
    }

    #[test]
    fn exchange_property() {
        let g = a2();
        let ms = generate_groupoid(&g).unwrap();
        let rs = real_roots(&g, &ms).unwrap();
        let mut lengths = Vec::new();
        for w in &ms {
            let (l, n) = length_and_n(&g, &rs, w).unwrap();
            assert_eq!(l, n);
            lengths.push(l);
        }
        lengths.sort_unstable();
        assert_eq!(lengths, vec![0, 1, 1, 2, 2, 3]);
    }

    #[test]
    fn covers() {
        // One-vertex A_1: the cover is a single edge.
        let c = simply_connected_cover(&a1(), 0).unwrap();
        assert_eq!(c.graph.vertex_count(), 2);
        assert!(!c.graph.is_loop(0, 0));
        // One-vertex A_2: the cover is the hexagon (Cayley graph of S_3).
        let c = simply_connected_cover(&a2(), 0).unwrap();
        assert_eq!(c.graph.vertex_count(), 6);
        for x in 0..6 {
            for i in 0..2 {
                assert!(!c.graph.is_loop(i, x));
            }
        }
        // Alternating colors around a 6-cycle: each vertex has degree 2, and
        // following r_1, r_2 alternately returns after 6 steps.
        let mut x = 0;
        for k in 0..6 {
            x = c.graph.reflect_vertex(k % 2, x);
        }
        assert_eq!(x, 0);
        // Covering map is the target; fibers all have size |Aut(x)| = 6.
        assert!(c.projection.iter().all(|&t| t == 0));
    }

    #[test]
    fn path_subgroupoid_extremes() {
        // Every generator of the one-vertex A_2 graph is a loop: only
        // identities survive.
        let p = path_subgroupoid(&a2()).unwrap();
        assert_eq!(p.len(), 1);
        assert!(p[0].is_identity());
        // A simply connected graph's path subgroupoid is everything: take
        // the hexagon cover of A_2.
        let c = simply_connected_cover(&a2(), 0).unwrap();
        let full = generate_groupoid(&c.graph).unwrap();
        let p = path_subgroupoid(&c.graph).unwrap();
        assert_eq!(p.len(), full.len());
        assert_eq!(p.len(), 36);
    }

    #[test]
    fn four_cycle_is_not_path_simply_connected() {
        let g = four_cycle();
        let ms = generate_groupoid(&g).unwrap();
        let rs = real_roots(&g, &ms).unwrap();
        assert!(matches!(
            orbits_delta(&g, &rs),
            Err(CartanError::NotPathSimplyConnected(_))
        ));
    }

    #[test]
    fn hexagon_rb_is_a_cycle() {
        let c = simply_connected_cover(&a2(), 0).unwrap();
        let ms = generate_groupoid(&c.graph).unwrap();
        let rs = real_roots(&c.graph, &ms).unwrap();
        let orb = orbits_delta(&c.graph, &rs).unwrap();
        // Simply connected: no pure-positive orbits.
        assert!(orb.delta_pure_plus.is_empty());
        assert_eq!(orb.delta_base_plus.len(), 3);
        let rb = build_rb(&c.graph, &rs, &orb).unwrap();
        assert_eq!(rb.vertex_count(), 6);
        assert_eq!(rb.edge_count(), 6);
        assert_eq!(rb.color_count(), 3);
        assert!(ecgraph::is_rainbow_boomerang(&rb).unwrap().is_ok());
    }

    #[test]
    fn json_round_trip() {
        let c = simply_connected_cover(&a2(), 0).unwrap();
        let j = c.graph.to_json();
        let back = SemiCartanGraph::from_json(&j).unwrap();
        assert_eq!(back.vertex_count(), 6);
        assert_eq!(generate_groupoid(&back).unwrap().len(), 36);
    }
}
