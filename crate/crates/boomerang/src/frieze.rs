//! Rank-2 bridge between quiddity sequences, Conway-Coxeter frieze patterns,
//! and Cartan graphs.
//!
//! A cyclic quiddity sequence of even length encodes a rank-2 semi Cartan
//! graph on a cycle with alternating edge colors; the real root system of
//! that graph is equivalent to the frieze pattern generated by the quiddity:
//! the slope-ordered positive-root coefficient vectors at each vertex appear
//! as a pair of adjacent southeast diagonals, shifting by one position per
//! vertex.

use crate::cartan::{
    generate_groupoid, real_roots, CartanError, Gcm, RootSystem, SemiCartanGraph,
};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FriezeError {
    #[error("inconsistent quiddity sequence: {0}")]
    InconsistentQuiddity(String),
    #[error("frieze does not close: {0}")]
    NotFinite(String),
    #[error("rank-2 loopless cycle required: {0}")]
    NotRank2(String),
    #[error(transparent)]
    Cartan(#[from] CartanError),
}

/// A cyclic sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuidditySequence(pub Vec<i64>);

impl QuidditySequence {
    pub fn new(entries: Vec<i64>) -> Result<Self, FriezeError> {
        if entries.len() < 4 {
            return Err(FriezeError::InconsistentQuiddity(
                "need at least 4 entries".into(),
            ));
        }
        if entries.len() % 2 != 0 {
            return Err(FriezeError::InconsistentQuiddity(
                "length must be even to alternate two colors".into(),
            ));
        }
        if entries.iter().any(|&e| e < 1) {
            return Err(FriezeError::InconsistentQuiddity(
                "entries must be positive".into(),
            ));
        }
        Ok(QuidditySequence(entries))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// A frieze pattern: `rows[0]` all zeros, `rows[1]` all ones, interior rows,
/// then a closing row of ones and a closing row of zeros.  All rows have the
/// cyclic length of the quiddity; successive rows are offset half a step, and
/// every diamond satisfies the unimodular rule `ad - bc = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FriezePattern {
    pub rows: Vec<Vec<i64>>,
}

impl FriezePattern {
    pub fn period(&self) -> usize {
        self.rows[0].len()
    }

    /// Number of interior rows (between the two rows of ones).
    pub fn width(&self) -> usize {
        self.rows.len() - 4
    }

    pub fn quiddity_row(&self) -> &[i64] {
        &self.rows[2]
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (r, row) in self.rows.iter().enumerate() {
            if r % 2 == 1 {
                out.push_str("  ");
            }
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>3}")).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Generates the frieze from a quiddity sequence with the recurrence
/// `rows[r+1][j] = (rows[r][j-1] * rows[r][j] - 1) / rows[r-1][j-1]`
/// (cyclic indices), stopping once a row of ones appears.  A division that
/// fails to be exact and positive, or a pattern that does not close, means
/// the corresponding Cartan graph is not finite.
pub fn frieze_from_quiddity(q: &QuidditySequence) -> Result<FriezePattern, FriezeError> {
    let n = q.len();
    let mut rows: Vec<Vec<i64>> = vec![vec![0; n], vec![1; n], q.0.clone()];
    if q.0.iter().all(|&v| v == 1) {
        // Degenerate width-0 pattern: quiddity row is already the ones row.
        rows.push(vec![0; n]);
        return Ok(FriezePattern { rows });
    }
    loop {
        if rows.len() > n + 2 {
            return Err(FriezeError::NotFinite("pattern does not close".into()));
        }
        let r = rows.len() - 1;
        let mut next = vec![0i64; n];
        for j in 0..n {
            let jm = (j + n - 1) % n;
            let num = rows[r][jm]
                .checked_mul(rows[r][j])
                .and_then(|p| p.checked_sub(1))
                .ok_or_else(|| FriezeError::NotFinite("entry overflow".into()))?;
            let den = rows[r - 1][jm];
            if den == 0 || num % den != 0 || num / den < 1 {
                return Err(FriezeError::NotFinite(format!(
                    "diamond at row {r} position {j} does not resolve"
                )));
            }
            next[j] = num / den;
        }
        let done = next.iter().all(|&v| v == 1);
        rows.push(next);
        if done {
            rows.push(vec![0; n]);
            return Ok(FriezePattern { rows });
        }
    }
}

/// Checks the unimodular diamond rule on every interior diamond and the
/// positivity of all interior entries.
pub fn verify_conway_coxeter(p: &FriezePattern) -> bool {
    let n = p.period();
    let h = p.rows.len();
    if h < 4 {
        return false;
    }
    if p.rows[0].iter().any(|&v| v != 0)
        || p.rows[1].iter().any(|&v| v != 1)
        || p.rows[h - 2].iter().any(|&v| v != 1)
        || p.rows[h - 1].iter().any(|&v| v != 0)
    {
        return false;
    }
    for r in 2..h - 2 {
        if p.rows[r].iter().any(|&v| v < 1) {
            return false;
        }
    }
    for r in 1..h - 1 {
        for j in 0..n {
            let jm = (j + n - 1) % n;
            let (a, d) = (p.rows[r][jm], p.rows[r][j]);
            let (b, c) = (p.rows[r - 1][jm], p.rows[r + 1][j]);
            if a * d - b * c != 1 {
                return false;
            }
        }
    }
    true
}

/// Builds the rank-2 semi Cartan graph of a quiddity sequence: a cycle of
/// `len(q)` vertices whose k-th edge (between v_k and v_{k+1}, 1-based,
/// cyclic) carries color 1 for odd k and color 2 for even k, and the value
/// q_k.  Vertex k's label has `a_12 = -q` of its incident color-1 edge and
/// `a_21 = -q` of its incident color-2 edge; (CG2) then holds around the
/// cycle by construction.
pub fn cartan_graph_from_quiddity(q: &QuidditySequence) -> Result<SemiCartanGraph, FriezeError> {
    let n = q.len();
    let qk = |k: usize| q.0[k % n]; // 0-based edge index
    let mut gcms = Vec::with_capacity(n);
    for v in 0..n {
        // 0-based: vertex v has incident edges v-1 (from predecessor) and v;
        // edge index e is color 1 when e is even (edge 1 in 1-based terms).
        let prev = (v + n - 1) % n;
        let (a12, a21) = if v % 2 == 0 {
            // 1-based odd vertex: color-1 edge is the outgoing edge v.
            (-qk(v), -qk(prev))
        } else {
            (-qk(prev), -qk(v))
        };
        gcms.push(
            Gcm::new(vec![vec![2, a12], vec![a21, 2]])
                .map_err(|e| FriezeError::InconsistentQuiddity(e.to_string()))?,
        );
    }
    let mut r: Vec<Vec<usize>> = vec![vec![0; n]; 2];
    for e in 0..n {
        let color = e % 2; // 0-based color of 1-based edge e+1
        r[color][e] = (e + 1) % n;
        r[color][(e + 1) % n] = e;
    }
    let names = (1..=n).map(|k| format!("v{k}")).collect();
    Ok(SemiCartanGraph::new(2, names, r, gcms)?)
}

/// Recovers the quiddity sequence of a rank-2 loopless alternating cycle and
/// regenerates the frieze, then verifies the root correspondence: for every
/// vertex x there is a diagonal offset `j0(x)` (consecutive vertices shifted
/// by one) such that the slope-ordered positive roots at x satisfy
/// `alpha_2-coeff of root t = rows[t][j0+t]` and
/// `alpha_1-coeff of root t = rows[t+1][j0+t]`.
pub fn frieze_from_cartan_graph(g: &SemiCartanGraph) -> Result<FriezePattern, FriezeError> {
    let q = quiddity_of(g)?;
    let frieze = frieze_from_quiddity(&q)?;
    let morphisms = generate_groupoid(g).map_err(|e| match e {
        CartanError::BudgetExceeded(m) => FriezeError::NotFinite(m),
        other => FriezeError::Cartan(other),
    })?;
    let roots = real_roots(g, &morphisms)?;
    verify_root_diagonals(g, &roots, &frieze)?;
    Ok(frieze)
}

/// Reads the quiddity back off the vertex labels, checking the alternating
/// cycle shape.
pub fn quiddity_of(g: &SemiCartanGraph) -> Result<QuidditySequence, FriezeError> {
    if g.theta() != 2 {
        return Err(FriezeError::NotRank2(format!("theta = {}", g.theta())));
    }
    let n = g.vertex_count();
    for x in 0..n {
        if g.is_loop(0, x) || g.is_loop(1, x) {
            return Err(FriezeError::NotRank2(format!(
                "loop at vertex {}",
                g.names()[x]
            )));
        }
    }
    // Walk the cycle from vertex 0 alternating colors 1, 2, recording the
    // quiddity value of each traversed edge from the labels.
    let mut entries = Vec::with_capacity(n);
    let mut v = 0usize;
    for e in 0..n {
        let color = e % 2;
        let w = g.reflect_vertex(color, v);
        // Color 1 edge: q = -a_12 at both endpoints; color 2: q = -a_21.
        let val = if color == 0 {
            -g.gcm(v).entry(0, 1)
        } else {
            -g.gcm(v).entry(1, 0)
        };
        entries.push(val);
        v = w;
    }
    if v != 0 {
        return Err(FriezeError::NotRank2(
            "alternating walk does not close into a single cycle".into(),
        ));
    }
    QuidditySequence::new(entries)
}

fn verify_root_diagonals(
    g: &SemiCartanGraph,
    roots: &RootSystem,
    frieze: &FriezePattern,
) -> Result<(), FriezeError> {
    let n = frieze.period();
    let height = frieze.rows.len();
    let expected_roots = height - 1;
    // Minimal cyclic period of the rows (the underlying polygon order).
    let min_period = (1..=n)
        .find(|&p| {
            n % p == 0
                && frieze
                    .rows
                    .iter()
                    .all(|row| (0..n).all(|j| row[j] == row[(j + p) % n]))
        })
        .unwrap_or(n);
    let mut offsets: Vec<usize> = Vec::with_capacity(g.vertex_count());
    for x in 0..g.vertex_count() {
        let mut pos: Vec<&Vec<i64>> = roots.positive[x].iter().collect();
        if pos.len() != expected_roots {
            return Err(FriezeError::NotFinite(format!(
                "vertex {} has {} positive roots, frieze implies {}",
                g.names()[x],
                pos.len(),
                expected_roots
            )));
        }
        // Slope order: alpha_1 first, alpha_2 last.
        pos.sort_by(|a, b| (a[1] * b[0]).cmp(&(b[1] * a[0])));
        // Moving to an adjacent vertex mirrors the picture, so vertices of
        // the two parities read their diagonal pair with the coefficient
        // roles swapped and the slope order reversed.
        if x % 2 == 1 {
            pos.reverse();
        }
        // Root t has its coefficients on the adjacent diagonals
        // rows[t][j0+t] and rows[t+1][j0+t].
        let matches = |j0: usize| {
            pos.iter().enumerate().all(|(t, root)| {
                let col = (j0 + t) % n;
                let (outer, inner) = (frieze.rows[t][col], frieze.rows[t + 1][col]);
                if x % 2 == 0 {
                    root[0] == inner && root[1] == outer
                } else {
                    root[0] == outer && root[1] == inner
                }
            })
        };
        let j0 = (0..min_period).find(|&j0| matches(j0)).ok_or_else(|| {
            FriezeError::NotFinite(format!(
                "no frieze diagonal matches the roots at vertex {}",
                g.names()[x]
            ))
        })?;
        offsets.push(j0);
    }
    // Adjacent vertices around the cycle use adjacent diagonals.
    for x in 0..g.vertex_count() {
        let next = offsets[(x + 1) % g.vertex_count()];
        if (offsets[x] + 1) % min_period != next % min_period {
            return Err(FriezeError::NotFinite(format!(
                "diagonal offsets do not shift by one at vertex {}",
                g.names()[x]
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{check_axioms, length_and_n};

    fn w5_quiddity() -> QuidditySequence {
        QuidditySequence::new(vec![2, 1, 3, 1, 2, 2, 1, 3, 1, 2]).unwrap()
    }

    #[test]
    fn quiddity_validation() {
        assert!(matches!(
            QuidditySequence::new(vec![1, 1, 1]),
            Err(FriezeError::InconsistentQuiddity(_))
        ));
        assert!(matches!(
            QuidditySequence::new(vec![2, 0, 2, 1]),
            Err(FriezeError::InconsistentQuiddity(_))
        ));
        assert!(QuidditySequence::new(vec![2, 1, 2, 1]).is_ok());
    }

    #[test]
    fn w5_graph_labels() {
        let g = cartan_graph_from_quiddity(&w5_quiddity()).unwrap();
        assert_eq!(g.vertex_count(), 10);
        let expect = [
            [[2, -2], [-2, 2]],
            [[2, -2], [-1, 2]],
            [[2, -3], [-1, 2]],
            [[2, -3], [-1, 2]],
            [[2, -2], [-1, 2]],
            [[2, -2], [-2, 2]],
            [[2, -1], [-2, 2]],
            [[2, -1], [-3, 2]],
            [[2, -1], [-3, 2]],
            [[2, -1], [-2, 2]],
        ];
        for (v, m) in expect.iter().enumerate() {
            assert_eq!(
                g.gcm(v).entries(),
                &m.iter().map(|r| r.to_vec()).collect::<Vec<_>>(),
                "vertex {}",
                v + 1
            );
        }
    }

    #[test]
    fn w5_frieze_rows() {
        let f = frieze_from_quiddity(&w5_quiddity()).unwrap();
        assert_eq!(f.width(), 2);
        assert_eq!(f.rows[2], vec![2, 1, 3, 1, 2, 2, 1, 3, 1, 2]);
        assert_eq!(f.rows[3], vec![3, 1, 2, 2, 1, 3, 1, 2, 2, 1]);
        assert!(verify_conway_coxeter(&f));
    }

    #[test]
    fn w5_root_correspondence() {
        let g = cartan_graph_from_quiddity(&w5_quiddity()).unwrap();
        let f = frieze_from_cartan_graph(&g).unwrap();
        assert!(verify_conway_coxeter(&f));
        // Double-check the printed positive roots at the first vertex.
        let ms = generate_groupoid(&g).unwrap();
        let rs = real_roots(&g, &ms).unwrap();
        let want: std::collections::BTreeSet<Vec<i64>> =
            [[1, 0], [2, 1], [1, 1], [1, 2], [0, 1]]
                .iter()
                .map(|r| r.to_vec())
                .collect();
        assert_eq!(rs.positive[0], want);
        // The graph is a finite Cartan graph: all axioms pass, l(w) = N(w).
        let rep = check_axioms(&g, &ms, &rs).unwrap();
        assert!(rep.all_pass(), "{:?}", rep.witness);
        assert_eq!(ms.len(), 100);
        for w in &ms {
            let (l, n) = length_and_n(&g, &rs, w).unwrap();
            assert_eq!(l, n);
        }
    }

    #[test]
    fn b2_style_four_cycle_round_trips() {
        let q = QuidditySequence::new(vec![2, 1, 2, 1]).unwrap();
        let g = cartan_graph_from_quiddity(&q).unwrap();
        let f = frieze_from_cartan_graph(&g).unwrap();
        assert_eq!(f.width(), 1);
        assert_eq!(f.quiddity_row(), &[2, 1, 2, 1]);
        assert!(verify_conway_coxeter(&f));
        let back = quiddity_of(&g).unwrap();
        assert_eq!(back, q);
    }

    #[test]
    fn diverging_quiddity_is_rejected() {
        let q = QuidditySequence::new(vec![2, 2, 2, 2]).unwrap();
        let g = cartan_graph_from_quiddity(&q).unwrap();
        assert!(matches!(
            frieze_from_cartan_graph(&g),
            Err(FriezeError::NotFinite(_))
        ));
    }

    #[test]
    fn perturbed_frieze_fails() {
        let mut f = frieze_from_quiddity(&w5_quiddity()).unwrap();
        assert!(verify_conway_coxeter(&f));
        f.rows[3][4] += 1;
        assert!(!verify_conway_coxeter(&f));
        // All-ones quiddity: the degenerate width-0 frieze is valid.
        let ones = QuidditySequence::new(vec![1, 1, 1, 1]).unwrap();
        let f = frieze_from_quiddity(&ones).unwrap();
        assert!(verify_conway_coxeter(&f));
    }
}

