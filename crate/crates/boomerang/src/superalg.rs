//! Odd-reflection graphs of two families of basic Lie superalgebras.
//!
//! For gl(m|n) the Borel subalgebras containing the standard even Borel are
//! in bijection with Young diagrams inside an m×n rectangle, and odd
//! reflections add or remove a single box.  The exchange graph colors the
//! edge through a box at French coordinates (col, row) by `col - row + m`,
//! and every vertex carries the Cartan matrix A_{m+n-1}; the odd-reflection
//! graph OR(g) instead colors the edge by the box coordinate itself.
//!
//! D(2,1;α) is small enough to store verbatim: four Borel subalgebras, rank
//! three, three non-loop edges, together with the four positive root lists
//! and the odd-root names of the orbits over the basis {δ, ε1, ε2}.
//!
//! `verify_or_equals_rb` checks the general theorem that OR(g) coincides
//! with the rainbow boomerang graph RB(G(g)) of the associated Cartan graph,
//! and extracts the color bijection.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::cartan::{CartanError, Gcm, SemiCartanGraph};
use crate::ecgraph::{ColoredGraph, EcError};

#[derive(Debug, Error)]
pub enum SuperError {
    /// gl(m|n) is only materialized at desk scale.
    #[error("gl({0}|{1}) out of range: need m, n >= 1 and m + n <= 8")]
    SizeLimitExceeded(usize, usize),
    /// The two graphs are not isomorphic as edge-colored graphs.
    #[error("not isomorphic: {0}")]
    IsomorphismFailed(String),
    #[error(transparent)]
    Cartan(#[from] CartanError),
    #[error(transparent)]
    Graph(#[from] EcError),
}

/// All Young diagrams fitting in an m-row, n-column box, as weakly
/// decreasing part lists, in lexicographic order.
pub fn partitions_in_box(m: usize, n: usize) -> Vec<Vec<usize>> {
    fn rec(rows_left: usize, cur: &mut Vec<usize>, max_next: usize, out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        if rows_left == 0 {
            return;
        }
        for part in 1..=max_next {
            cur.push(part);
            rec(rows_left - 1, cur, part, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, &mut Vec::new(), n, &mut out);
    out.sort();
    out
}

/// Human-readable diagram name: `∅`, `(1)`, `(2,2,1)`, ...
pub fn diagram_name(p: &[usize]) -> String {
    if p.is_empty() {
        "∅".to_string()
    } else {
        format!(
            "({})",
            p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
        )
    }
}

/// Addable box corners of `p` inside the m×n box, as French (col, row)
/// coordinates with (1, 1) at the bottom-left (row 1 is the longest row).
fn addable_boxes(p: &[usize], m: usize, n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for row in 1..=m {
        let len = if row <= p.len() { p[row - 1] } else { 0 };
        let cap = if row >= 2 {
            if row - 1 <= p.len() {
                p[row - 2]
            } else {
                0
            }
        } else {
            n
        };
        if len < cap {
            out.push((len + 1, row));
        }
    }
    out
}

fn add_box(p: &[usize], row: usize) -> Vec<usize> {
    let mut q = p.to_vec();
    if row > q.len() {
        q.push(1);
    } else {
        q[row - 1] += 1;
    }
    q
}

fn check_gl_size(m: usize, n: usize) -> Result<(), SuperError> {
    if m == 0 || n == 0 || m + n > 8 {
        return Err(SuperError::SizeLimitExceeded(m, n));
    }
    Ok(())
}

/// The exchange graph of gl(m|n): diagrams in the m×n box, an edge of color
/// `col - row + m` through each addable box, every absent color a loop, and
/// the Cartan matrix A_{m+n-1} at every vertex.
pub fn exchange_graph_gl(m: usize, n: usize) -> Result<SemiCartanGraph, SuperError> {
    check_gl_size(m, n)?;
    let theta = m + n - 1;
    let parts = partitions_in_box(m, n);
    let index: BTreeMap<&[usize], usize> =
        parts.iter().enumerate().map(|(k, p)| (p.as_slice(), k)).collect();
    let names: Vec<String> = parts.iter().map(|p| diagram_name(p)).collect();
    let mut r: Vec<Vec<usize>> = (0..theta).map(|_| (0..parts.len()).collect()).collect();
    for (x, p) in parts.iter().enumerate() {
        for (col, row) in addable_boxes(p, m, n) {
            let i = col + m - row; // 1-based color
            let y = index[add_box(p, row).as_slice()];
            // Distinct corners of a diagram lie on distinct diagonals, so
            // each color occurs at most once per vertex.
            assert!(r[i - 1][x] == x && r[i - 1][y] == y, "corner diagonal clash");
            r[i - 1][x] = y;
            r[i - 1][y] = x;
        }
    }
    let gcm = vec![Gcm::type_a(theta); parts.len()];
    Ok(SemiCartanGraph::new(theta, names, r, gcm)?)
}

/// The odd-reflection graph OR(gl(m|n)): same vertices and edges as the
/// exchange graph, but each edge is colored by its box coordinate "(col,row)".
pub fn or_graph_gl(m: usize, n: usize) -> Result<ColoredGraph, SuperError> {
    check_gl_size(m, n)?;
    let parts = partitions_in_box(m, n);
    let index: BTreeMap<&[usize], usize> =
        parts.iter().enumerate().map(|(k, p)| (p.as_slice(), k)).collect();
    let names: Vec<String> = parts.iter().map(|p| diagram_name(p)).collect();
    let mut color_names: BTreeSet<String> = BTreeSet::new();
    let mut raw = Vec::new();
    for (x, p) in parts.iter().enumerate() {
        for (col, row) in addable_boxes(p, m, n) {
            let y = index[add_box(p, row).as_slice()];
            let c = format!("({col},{row})");
            color_names.insert(c.clone());
            raw.push((x, y, c));
        }
    }
    let colors: Vec<String> = color_names.into_iter().collect();
    let cidx: BTreeMap<&str, usize> =
        colors.iter().enumerate().map(|(k, c)| (c.as_str(), k)).collect();
    let edges = raw.into_iter().map(|(x, y, c)| (x, y, cidx[c.as_str()])).collect();
    Ok(ColoredGraph::new(names, colors, edges)?)
}

/// The stored D(2,1;α) package: the Cartan graph, the four expected positive
/// root lists, the expected OR graph with odd-root color names, and the name
/// table for base-vertex roots over {δ, ε1, ε2} (written d, e1, e2).
#[derive(Debug, Clone)]
pub struct D21Alpha {
    pub graph: SemiCartanGraph,
    /// Positive roots of b1..b4, each in its own simple-root coordinates.
    pub expected_positive: Vec<Vec<Vec<i64>>>,
    /// OR(D(2,1;α)): the 3-edge tree colored by isotropic odd roots.
    pub expected_or: ColoredGraph,
    /// Odd/even root names of the seven positive base-vertex root vectors.
    pub root_names: BTreeMap<Vec<i64>, String>,
    /// Names of the orbits positive at every vertex.
    pub pure_plus_names: Vec<String>,
}

/// Hardcoded D(2,1;α) data: vertices b1..b4 with edges b1—2—b3, b2—1—b3,
/// b3—3—b4 and the four rank-3 Cartan matrices.
pub fn d21alpha() -> D21Alpha {
    let names: Vec<String> = ["b1", "b2", "b3", "b4"].iter().map(|s| s.to_string()).collect();
    let gcm = |e: [[i64; 3]; 3]| Gcm::new(e.iter().map(|r| r.to_vec()).collect()).unwrap();
    let gcms = vec![
        gcm([[2, -1, 0], [-1, 2, -1], [0, -1, 2]]),
        gcm([[2, -1, -1], [-1, 2, 0], [-1, 0, 2]]),
        gcm([[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]),
        gcm([[2, 0, -1], [0, 2, -1], [-1, -1, 2]]),
    ];
    // r[i][x]; vertices indexed b1=0, b2=1, b3=2, b4=3.
    let r = vec![
        vec![0, 2, 1, 3], // color 1: b2 — b3
        vec![2, 1, 0, 3], // color 2: b1 — b3
        vec![0, 1, 3, 2], // color 3: b3 — b4
    ];
    let graph = SemiCartanGraph::new(3, names.clone(), r, gcms)
        .expect("stored D(2,1;α) data is a valid semi Cartan graph");
    let v = |a: i64, b: i64, c: i64| vec![a, b, c];
    let expected_positive = vec![
        vec![
            v(1, 0, 0),
            v(1, 1, 0),
            v(1, 1, 1),
            v(1, 2, 1),
            v(0, 1, 0),
            v(0, 1, 1),
            v(0, 0, 1),
        ],
        vec![
            v(0, 1, 0),
            v(1, 1, 0),
            v(1, 1, 1),
            v(2, 1, 1),
            v(1, 0, 0),
            v(1, 0, 1),
            v(0, 0, 1),
        ],
        vec![
            v(1, 0, 0),
            v(1, 1, 0),
            v(1, 0, 1),
            v(1, 1, 1),
            v(0, 1, 0),
            v(0, 1, 1),
            v(0, 0, 1),
        ],
        vec![
            v(1, 0, 0),
            v(1, 0, 1),
            v(1, 1, 1),
            v(1, 1, 2),
            v(0, 0, 1),
            v(0, 1, 1),
            v(0, 1, 0),
        ],
    ];
    let root_names: BTreeMap<Vec<i64>, String> = [
        (v(1, 0, 0), "2e1"),
        (v(0, 1, 0), "d-e1-e2"),
        (v(0, 0, 1), "2e2"),
        (v(1, 1, 0), "d+e1-e2"),
        (v(0, 1, 1), "d-e1+e2"),
        (v(1, 1, 1), "d+e1+e2"),
        (v(1, 2, 1), "2d"),
    ]
    .into_iter()
    .map(|(k, s)| (k, s.to_string()))
    .collect();
    let or_colors = vec![
        "d+e1-e2".to_string(),
        "d-e1+e2".to_string(),
        "d-e1-e2".to_string(),
    ];
    let expected_or = ColoredGraph::new(
        names,
        or_colors,
        vec![(0, 2, 2), (1, 2, 0), (2, 3, 1)],
    )
    .expect("stored OR(D(2,1;α)) is a valid colored graph");
    let pure_plus_names = ["2d", "2e1", "2e2", "d+e1+e2"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    D21Alpha {
        graph,
        expected_positive,
        expected_or,
        root_names,
        pure_plus_names,
    }
}

/// Checks that two edge-colored graphs on the same named vertex set have
/// identical edges up to a bijective recoloring, and returns that bijection
/// as sorted (left color, right color) pairs.
pub fn verify_or_equals_rb(
    or_graph: &ColoredGraph,
    rb_graph: &ColoredGraph,
) -> Result<Vec<(String, String)>, SuperError> {
    let vs: BTreeSet<&String> = or_graph.vertex_names().iter().collect();
    let ws: BTreeSet<&String> = rb_graph.vertex_names().iter().collect();
    if vs != ws {
        return Err(SuperError::IsomorphismFailed("vertex sets differ".into()));
    }
    let edge_map = |g: &ColoredGraph| -> BTreeMap<(String, String), String> {
        g.edges()
            .iter()
            .map(|&(u, v, c)| {
                let mut a = g.vertex_names()[u].clone();
                let mut b = g.vertex_names()[v].clone();
                if a > b {
                    std::mem::swap(&mut a, &mut b);
                }
                ((a, b), g.color_names()[c].clone())
            })
            .collect()
    };
    let left = edge_map(or_graph);
    let right = edge_map(rb_graph);
    if left.len() != or_graph.edge_count() || right.len() != rb_graph.edge_count() {
        return Err(SuperError::IsomorphismFailed("parallel edges present".into()));
    }
    if left.keys().ne(right.keys()) {
        return Err(SuperError::IsomorphismFailed("edge sets differ".into()));
    }
    let mut forward: BTreeMap<&String, &String> = BTreeMap::new();
    let mut backward: BTreeMap<&String, &String> = BTreeMap::new();
    for (pair, lc) in &left {
        let rc = &right[pair];
        if *forward.entry(lc).or_insert(rc) != rc {
            return Err(SuperError::IsomorphismFailed(format!(
                "color {lc} maps to both {} and {rc} (edge {} — {})",
                forward[lc], pair.0, pair.1
            )));
        }
        if *backward.entry(rc).or_insert(lc) != lc {
            return Err(SuperError::IsomorphismFailed(format!(
                "colors {} and {lc} both map to {rc}",
                backward[rc]
            )));
        }
    }
    Ok(forward
        .into_iter()
        .map(|(a, b)| (a.clone(), b.clone()))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{
        build_rb, check_axioms, generate_groupoid, length_and_n, orbits_delta, real_roots,
    };
    use crate::ecgraph::is_rainbow_boomerang;

    fn exchange_edge_set(g: &SemiCartanGraph) -> BTreeSet<(String, String, usize)> {
        let mut out = BTreeSet::new();
        for i in 0..g.theta() {
            for x in 0..g.vertex_count() {
                let y = g.reflect_vertex(i, x);
                if y > x {
                    out.insert((g.names()[x].clone(), g.names()[y].clone(), i + 1));
                }
            }
        }
        out
    }

    fn colored_edge_set(g: &ColoredGraph) -> BTreeSet<(String, String, String)> {
        g.edges()
            .iter()
            .map(|&(u, v, c)| {
                let mut a = g.vertex_names()[u].clone();
                let mut b = g.vertex_names()[v].clone();
                if a > b {
                    std::mem::swap(&mut a, &mut b);
                }
                (a, b, g.color_names()[c].clone())
            })
            .collect()
    }

    #[test]
    fn partition_counts_are_binomial() {
        // #P_{m×n} = C(m+n, m).
        let binom = |a: usize, b: usize| -> usize {
            (0..b).fold(1usize, |acc, k| acc * (a - k) / (k + 1))
        };
        for m in 1..=7 {
            for n in 1..=7 {
                if m + n > 8 {
                    continue;
                }
                let parts = partitions_in_box(m, n);
                assert_eq!(parts.len(), binom(m + n, m), "gl({m}|{n})");
                let names: BTreeSet<String> =
                    parts.iter().map(|p| diagram_name(p)).collect();
                assert_eq!(names.len(), parts.len(), "duplicate diagram names");
            }
        }
    }

    #[test]
    fn gl_size_limits() {
        assert!(matches!(
            exchange_graph_gl(0, 3),
            Err(SuperError::SizeLimitExceeded(0, 3))
        ));
        assert!(matches!(
            or_graph_gl(5, 4),
            Err(SuperError::SizeLimitExceeded(5, 4))
        ));
    }

    #[test]
    fn gl_1_1_is_a_single_edge() {
        let g = exchange_graph_gl(1, 1).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.theta(), 1);
        assert_eq!(
            exchange_edge_set(&g),
            BTreeSet::from([("∅".to_string(), "(1)".to_string(), 1)])
        );
        let or = or_graph_gl(1, 1).unwrap();
        assert_eq!(
            colored_edge_set(&or),
            BTreeSet::from([("(1)".to_string(), "∅".to_string(), "(1,1)".to_string())])
        );
    }

    #[test]
    fn gl_3_2_exchange_graph_matches_fixture() {
        let g = exchange_graph_gl(3, 2).unwrap();
        assert_eq!(g.vertex_count(), 10);
        assert_eq!(g.theta(), 4);
        for x in 0..10 {
            assert_eq!(*g.gcm(x), Gcm::type_a(4));
        }
        let e = |a: &str, b: &str, i: usize| (a.to_string(), b.to_string(), i);
        let expected: BTreeSet<_> = [
            e("∅", "(1)", 3),
            e("(1)", "(2)", 4),
            e("(2)", "(2,1)", 2),
            e("(2,1)", "(2,2)", 3),
            e("(2,2)", "(2,2,1)", 1),
            e("(2,2,1)", "(2,2,2)", 2),
            e("(1)", "(1,1)", 2),
            e("(1,1)", "(2,1)", 4),
            e("(2,1)", "(2,1,1)", 1),
            e("(2,1,1)", "(2,2,1)", 3),
            e("(1,1)", "(1,1,1)", 1),
            e("(1,1,1)", "(2,1,1)", 4),
        ]
        .into_iter()
        .collect();
        assert_eq!(exchange_edge_set(&g), expected);
    }

    #[test]
    fn gl_3_2_or_graph_matches_fixture() {
        let or = or_graph_gl(3, 2).unwrap();
        assert_eq!(or.vertex_count(), 10);
        assert_eq!(or.edge_count(), 12);
        assert_eq!(or.color_count(), 6);
        let e = |a: &str, b: &str, c: &str| (a.to_string(), b.to_string(), c.to_string());
        let expected: BTreeSet<_> = [
            e("(1)", "∅", "(1,1)"),
            e("(1)", "(2)", "(2,1)"),
            e("(2)", "(2,1)", "(1,2)"),
            e("(2,1)", "(2,2)", "(2,2)"),
            e("(2,2)", "(2,2,1)", "(1,3)"),
            e("(2,2,1)", "(2,2,2)", "(2,3)"),
            e("(1)", "(1,1)", "(1,2)"),
            e("(1,1)", "(2,1)", "(2,1)"),
            e("(2,1)", "(2,1,1)", "(1,3)"),
            e("(2,1,1)", "(2,2,1)", "(2,2)"),
            e("(1,1)", "(1,1,1)", "(1,3)"),
            e("(1,1,1)", "(2,1,1)", "(2,1)"),
        ]
        .into_iter()
        .collect();
        assert_eq!(colored_edge_set(&or), expected);
        assert!(is_rainbow_boomerang(&or).unwrap().is_ok());
    }

    #[test]
    fn gl_3_2_or_equals_rb() {
        let g = exchange_graph_gl(3, 2).unwrap();
        let morphisms = generate_groupoid(&g).unwrap();
        let roots = real_roots(&g, &morphisms).unwrap();
        assert!(check_axioms(&g, &morphisms, &roots).unwrap().all_pass());
        let orbits = orbits_delta(&g, &roots).unwrap();
        let rb = build_rb(&g, &roots, &orbits).unwrap();
        let bij = verify_or_equals_rb(&or_graph_gl(3, 2).unwrap(), &rb).unwrap();
        assert_eq!(bij.len(), 6);
    }

    #[test]
    fn gl_2_1_orbits_match_fixture() {
        let g = exchange_graph_gl(2, 1).unwrap();
        let e = |a: &str, b: &str, i: usize| (a.to_string(), b.to_string(), i);
        assert_eq!(
            exchange_edge_set(&g),
            BTreeSet::from([e("∅", "(1)", 2), e("(1)", "(1,1)", 1)])
        );
        let morphisms = generate_groupoid(&g).unwrap();
        let roots = real_roots(&g, &morphisms).unwrap();
        let orbits = orbits_delta(&g, &roots).unwrap();
        // Vertex order is ∅, (1), (1,1); tables list the orbit member at
        // each vertex.  ε1−ε2 is the orbit of α1 at ∅; ε1−δ1 is the orbit
        // of α1+α2 at ∅.
        let tables: BTreeSet<&Vec<Vec<i64>>> = orbits.orbits.iter().collect();
        assert!(tables.contains(&vec![vec![1, 0], vec![1, 1], vec![0, 1]]));
        assert!(tables.contains(&vec![vec![1, 1], vec![1, 0], vec![-1, 0]]));
        // ε1−ε2 is even and stays positive everywhere; ε1−δ1 does not.
        let idx = |t: &Vec<Vec<i64>>| orbits.orbits.iter().position(|o| o == t).unwrap();
        assert!(orbits
            .delta_pure_plus
            .contains(&idx(&vec![vec![1, 0], vec![1, 1], vec![0, 1]])));
        assert!(!orbits
            .delta_pure_plus
            .contains(&idx(&vec![vec![1, 1], vec![1, 0], vec![-1, 0]])));
        let rb = build_rb(&g, &roots, &orbits).unwrap();
        let e3 = |a: &str, b: &str, c: &str| (a.to_string(), b.to_string(), c.to_string());
        assert_eq!(
            colored_edge_set(&rb),
            BTreeSet::from([e3("(1)", "∅", "(0,1)"), e3("(1)", "(1,1)", "(1,1)")])
        );
        let bij = verify_or_equals_rb(&or_graph_gl(2, 1).unwrap(), &rb).unwrap();
        assert_eq!(
            bij,
            vec![
                ("(1,1)".to_string(), "(0,1)".to_string()),
                ("(1,2)".to_string(), "(1,1)".to_string()),
            ]
        );
    }

    #[test]
    fn gl_small_family_is_rainbow_boomerang_with_exchange_property() {
        for m in 1..=4 {
            for n in 1..=4 {
                if m + n > 5 {
                    continue;
                }
                let g = exchange_graph_gl(m, n).unwrap();
                let morphisms = generate_groupoid(&g).unwrap();
                let roots = real_roots(&g, &morphisms).unwrap();
                assert!(
                    check_axioms(&g, &morphisms, &roots).unwrap().all_pass(),
                    "gl({m}|{n}) axioms"
                );
                for w in &morphisms {
                    let (l, nn) = length_and_n(&g, &roots, w).unwrap();
                    assert_eq!(l, nn, "gl({m}|{n}) length formula");
                }
                let orbits = orbits_delta(&g, &roots).unwrap();
                let rb = build_rb(&g, &roots, &orbits).unwrap();
                assert!(
                    is_rainbow_boomerang(&rb).unwrap().is_ok(),
                    "RB(gl({m}|{n}))"
                );
                let or = or_graph_gl(m, n).unwrap();
                assert!(is_rainbow_boomerang(&or).unwrap().is_ok(), "OR(gl({m}|{n}))");
                verify_or_equals_rb(&or, &rb).unwrap();
            }
        }
    }

    #[test]
    fn d21alpha_roots_match_fixture() {
        let d = d21alpha();
        let morphisms = generate_groupoid(&d.graph).unwrap();
        let roots = real_roots(&d.graph, &morphisms).unwrap();
        assert!(check_axioms(&d.graph, &morphisms, &roots).unwrap().all_pass());
        for (x, expect) in d.expected_positive.iter().enumerate() {
            let got = &roots.positive[x];
            let want: BTreeSet<Vec<i64>> = expect.iter().cloned().collect();
            assert_eq!(want.len(), 7);
            assert_eq!(got.iter().cloned().collect::<BTreeSet<_>>(), want, "R+ at b{}", x + 1);
            assert_eq!(roots.roots[x].len(), 14, "R at b{}", x + 1);
        }
        for w in &morphisms {
            let (l, n) = length_and_n(&d.graph, &roots, w).unwrap();
            assert_eq!(l, n);
        }
    }

    #[test]
    fn d21alpha_orbits_and_rb_tree() {
        let d = d21alpha();
        let morphisms = generate_groupoid(&d.graph).unwrap();
        let roots = real_roots(&d.graph, &morphisms).unwrap();
        let orbits = orbits_delta(&d.graph, &roots).unwrap();
        assert_eq!(orbits.orbits.len(), 14);
        assert_eq!(orbits.delta_base_plus.len(), 7);
        assert_eq!(orbits.delta_pure_plus.len(), 4);
        let pure: BTreeSet<String> = orbits
            .delta_pure_plus
            .iter()
            .map(|&o| d.root_names[&orbits.orbits[o][orbits.base]].clone())
            .collect();
        assert_eq!(
            pure,
            d.pure_plus_names.iter().cloned().collect::<BTreeSet<_>>()
        );
        let rb = build_rb(&d.graph, &roots, &orbits).unwrap();
        assert_eq!(rb.vertex_count(), 4);
        assert_eq!(rb.edge_count(), 3);
        assert_eq!(rb.color_count(), 3);
        assert!(rb.is_connected());
        assert!(is_rainbow_boomerang(&rb).unwrap().is_ok());
        // The RB colors, translated through the base root names, are exactly
        // the isotropic odd positive roots of the stored OR graph.
        let bij = verify_or_equals_rb(&d.expected_or, &rb).unwrap();
        for (odd_name, orbit_name) in &bij {
            let vec_name = d
                .root_names
                .iter()
                .find(|(v, _)| {
                    format!(
                        "({})",
                        v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
                    ) == *orbit_name
                })
                .map(|(_, s)| s.clone())
                .unwrap();
            assert_eq!(&vec_name, odd_name);
        }
        assert_eq!(bij.len(), 3);
    }

    #[test]
    fn verify_rejects_recolored_graph() {
        let or = or_graph_gl(2, 1).unwrap();
        // Same shape, but both edges share one color: the bijection fails.
        let idx = |s: &str| or.vertex_index(s).unwrap();
        let bad = ColoredGraph::new(
            or.vertex_names().to_vec(),
            vec!["c".to_string()],
            vec![(idx("∅"), idx("(1)"), 0), (idx("(1)"), idx("(1,1)"), 0)],
        )
        .unwrap();
        assert!(matches!(
            verify_or_equals_rb(&or, &bad),
            Err(SuperError::IsomorphismFailed(_))
        ));
    }
}
