//! Deterministic corpora of small connected loop-free graphs for the
//! cross-identity suites.

use std::collections::BTreeSet;

use crate::graph::Multigraph;

/// All permutations of 1…d in lexicographic order; each entry maps vertex i
/// to `perm[i-1]`.
pub fn permutations(d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(d);
    let mut used = vec![false; d + 1];
    fn recurse(d: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if current.len() == d {
            out.push(current.clone());
            return;
        }
        for v in 1..=d {
            if !used[v] {
                used[v] = true;
                current.push(v);
                recurse(d, current, used, out);
                current.pop();
                used[v] = false;
            }
        }
    }
    recurse(d, &mut current, &mut used, &mut out);
    out
}

/// Isomorphism key: the lexicographically smallest sorted edge list over all
/// vertex relabelings.
fn canonical(d: usize, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    permutations(d)
        .iter()
        .map(|perm| {
            let mut relabeled: Vec<(usize, usize)> = edges
                .iter()
                .map(|&(u, v)| {
                    let (a, b) = (perm[u - 1], perm[v - 1]);
                    (a.min(b), a.max(b))
                })
                .collect();
            relabeled.sort_unstable();
            relabeled
        })
        .min()
        .expect("at least the identity permutation exists")
}

/// Connected loop-free simple graphs on exactly `d` vertices, one per
/// isomorphism class, in increasing edge-subset order; `exact_q` restricts to
/// a fixed edge count.
fn simple_connected(d: usize, exact_q: Option<usize>) -> Vec<Multigraph> {
    let mut pairs = Vec::new();
    for u in 1..=d {
        for v in (u + 1)..=d {
            pairs.push((u, v));
        }
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        if let Some(q) = exact_q {
            if mask.count_ones() as usize != q {
                continue;
            }
        }
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        let g = Multigraph::new(d, edges).expect("vertex pairs are in range");
        if !g.is_connected() {
            continue;
        }
        if seen.insert(canonical(d, g.edges())) {
            out.push(g);
        }
    }
    out
}

/// Deterministic stream of connected loop-free graphs: one simple graph per
/// isomorphism class for every d ≤ `max_d` with at most `max_q` edges, plus —
/// when `include_multigraphs` is set — a doubled-first-edge variant of each
/// small one and a tripled edge on two vertices.
pub fn generate_corpus(max_d: usize, max_q: usize, include_multigraphs: bool) -> Vec<Multigraph> {
    let mut out = Vec::new();
    for d in 1..=max_d {
        out.extend(
            simple_connected(d, None)
                .into_iter()
                .filter(|g| g.edge_count() <= max_q),
        );
    }
    if include_multigraphs {
        let mut extras = Vec::new();
        for g in &out {
            if g.vertex_count() <= 4 && g.edge_count() >= 1 && g.edge_count() < max_q {
                let mut edges = g.edges().to_vec();
                edges.push(edges[0]);
                extras.push(Multigraph::new(g.vertex_count(), edges).unwrap());
            }
        }
        out.extend(extras);
        if max_d >= 2 && max_q >= 3 {
            out.push(Multigraph::new(2, vec![(1, 2); 3]).unwrap());
        }
    }
    out
}

/// The suite's standard corpus: everything up to five vertices (with
/// multigraph variants), the six-vertex trees, and the six-cycle.
pub fn default_corpus() -> Vec<Multigraph> {
    let mut out = generate_corpus(5, 10, true);
    out.extend(simple_connected(6, Some(5)));
    out.push(Multigraph::cycle(6));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutations_are_all_of_them() {
        assert_eq!(permutations(0), vec![Vec::<usize>::new()]);
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(permutations(3)[0], vec![1, 2, 3]);
        assert_eq!(permutations(3)[5], vec![3, 2, 1]);
        assert_eq!(permutations(5).len(), 120);
    }

    // Connected simple graphs per vertex count: 1, 1, 2, 6, 21 — and the
    // three-vertex classes are the path and the triangle.
    #[test]
    fn simple_class_counts_match_the_census() {
        for (d, expect) in [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21)] {
            assert_eq!(simple_connected(d, None).len(), expect, "d = {d}");
        }
        let three = simple_connected(3, None);
        assert_eq!(
            canonical(3, three[0].edges()),
            canonical(3, Multigraph::path(3).edges())
        );
        assert_eq!(three[1], Multigraph::complete(3));
    }

    #[test]
    fn six_vertex_trees_number_six() {
        let trees = simple_connected(6, Some(5));
        assert_eq!(trees.len(), 6);
        assert!(trees
            .iter()
            .all(|g| g.edge_count() == 5 && g.is_connected()));
    }

    #[test]
    fn corpus_is_deterministic_and_loop_free() {
        let a = default_corpus();
        let b = default_corpus();
        assert_eq!(a, b);
        let rendered: Vec<String> = a.iter().map(Multigraph::to_string).collect();
        let again: Vec<String> = b.iter().map(Multigraph::to_string).collect();
        assert_eq!(rendered, again);
        assert!(a.iter().all(|g| !g.has_loops() && g.is_connected()));
        // 31 simple + 9 doubled + 1 tripled + 6 trees + the six-cycle.
        assert_eq!(a.len(), 48);
    }

    #[test]
    fn multigraph_extras_obey_the_flags() {
        let with = generate_corpus(3, 10, true);
        assert!(with.iter().any(|g| {
            let e = g.edges();
            e.len() >= 2 && e[e.len() - 1] == e[0]
        }));
        assert!(with.contains(&Multigraph::new(2, vec![(1, 2); 3]).unwrap()));
        let without = generate_corpus(3, 10, false);
        assert_eq!(without.len(), 4); // point, edge, path, triangle
        let capped = generate_corpus(5, 4, false);
        assert!(capped.iter().all(|g| g.edge_count() <= 4));
    }
}
