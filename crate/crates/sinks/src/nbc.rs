//! Circuits, broken circuits under the fixed edge order, and the
//! broken-circuit complex B_G whose top-dimensional members are the NBC
//! spanning trees.
//!
//! A circuit is a closed walk with distinct vertices viewed as an edge set:
//! loops are 1-circuits, parallel pairs are 2-circuits, and longer circuits
//! pick one edge per consecutive vertex pair. A broken circuit is a circuit
//! minus its largest edge id.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::graph::{EdgeId, Multigraph, Vertex};
use crate::{Error, Result};

/// A sorted, duplicate-free set of edge ids. Rendered `{1,3}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EdgeSet(Vec<EdgeId>);

impl EdgeSet {
    pub fn new(mut ids: Vec<EdgeId>) -> Self {
        ids.sort_unstable();
        ids.dedup();
        EdgeSet(ids)
    }

    pub fn empty() -> Self {
        EdgeSet(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn ids(&self) -> &[EdgeId] {
        &self.0
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.0.binary_search(&e).is_ok()
    }

    pub fn max_id(&self) -> Option<EdgeId> {
        self.0.last().copied()
    }

    /// The set without its largest element — the broken version of a circuit.
    pub fn without_max(&self) -> Self {
        let mut ids = self.0.clone();
        ids.pop();
        EdgeSet(ids)
    }

    pub fn is_subset_of(&self, other: &EdgeSet) -> bool {
        self.0.iter().all(|&e| other.contains(e))
    }
}

impl fmt::Display for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl FromStr for EdgeSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| Error::Parse(format!("edge set must look like {{1,3}}, got {s:?}")))?;
        let inner = inner.trim();
        if inner.is_empty() {
            return Ok(EdgeSet::empty());
        }
        let mut ids = Vec::new();
        for part in inner.split(',') {
            let id = part
                .trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad edge id {part:?} in edge set")))?;
            if id == 0 {
                return Err(Error::Parse("edge ids start at 1".into()));
            }
            ids.push(id);
        }
        Ok(EdgeSet::new(ids))
    }
}

/// All circuits of G, each reported once, sorted by (size, contents).
pub fn circuits(g: &Multigraph) -> Vec<EdgeSet> {
    let mut found = Vec::new();

    for e in 1..=g.edge_count() {
        if g.is_loop(e) {
            found.push(EdgeSet::new(vec![e]));
        }
    }

    for e in 1..=g.edge_count() {
        for f in (e + 1)..=g.edge_count() {
            if g.is_loop(e) || g.is_loop(f) {
                continue;
            }
            let (a, b) = g.endpoints(e);
            let (c, d) = g.endpoints(f);
            if (a.min(b), a.max(b)) == (c.min(d), c.max(d)) {
                found.push(EdgeSet::new(vec![e, f]));
            }
        }
    }

    // Circuits on ≥ 3 vertices: enumerate vertex cycles canonically (start
    // at the minimum vertex, smaller second vertex than last), then take one
    // edge per consecutive pair in every possible way.
    let d = g.vertex_count();
    let mut pair_edges: Vec<Vec<Vec<EdgeId>>> = vec![vec![Vec::new(); d + 1]; d + 1];
    for e in 1..=g.edge_count() {
        let (u, v) = g.endpoints(e);
        if u != v {
            pair_edges[u][v].push(e);
            pair_edges[v][u].push(e);
        }
    }
    fn extend(
        cycle: &mut Vec<Vertex>,
        vis: &mut [bool],
        s: Vertex,
        pair_edges: &[Vec<Vec<EdgeId>>],
        found: &mut Vec<EdgeSet>,
    ) {
        let u = *cycle.last().unwrap();
        for w in (s + 1)..vis.len() {
            if pair_edges[u][w].is_empty() {
                continue;
            }
            if w == s {
                continue;
            }
            if !vis[w] {
                cycle.push(w);
                vis[w] = true;
                // Close the cycle when it has ≥ 3 vertices and passes the
                // reversal-dedup check (second vertex < last vertex).
                if cycle.len() >= 3
                    && cycle[1] < *cycle.last().unwrap()
                    && !pair_edges[w][s].is_empty()
                {
                    emit_choices(cycle, s, pair_edges, found);
                }
                extend(cycle, vis, s, pair_edges, found);
                vis[w] = false;
                cycle.pop();
            }
        }
    }
    fn emit_choices(
        cycle: &[Vertex],
        s: Vertex,
        pair_edges: &[Vec<Vec<EdgeId>>],
        found: &mut Vec<EdgeSet>,
    ) {
        // One multigraph edge per consecutive pair, all combinations.
        let mut hops: Vec<&[EdgeId]> = Vec::with_capacity(cycle.len());
        for i in 0..cycle.len() {
            let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
            hops.push(&pair_edges[a][b]);
        }
        let _ = s;
        let mut pick = vec![0usize; hops.len()];
        loop {
            let ids: Vec<EdgeId> = hops.iter().zip(&pick).map(|(h, &i)| h[i]).collect();
            found.push(EdgeSet::new(ids));
            let mut i = hops.len();
            loop {
                if i == 0 {
                    return;
                }
                i -= 1;
                pick[i] += 1;
                if pick[i] < hops[i].len() {
                    break;
                }
                pick[i] = 0;
            }
        }
    }
    for s in 1..=d {
        let mut vis = vec![false; d + 1];
        vis[s] = true;
        extend(&mut vec![s], &mut vis, s, &pair_edges, &mut found);
    }

    found.sort_by(|a, b| (a.len(), a.ids()).cmp(&(b.len(), b.ids())));
    found.dedup();
    found
}

/// Broken circuits: each circuit minus its largest edge, duplicates removed,
/// sorted by (size, contents). A loop contributes the empty set.
pub fn broken_circuits(g: &Multigraph) -> Vec<EdgeSet> {
    let set: BTreeSet<EdgeSet> = circuits(g).iter().map(EdgeSet::without_max).collect();
    let mut out: Vec<EdgeSet> = set.into_iter().collect();
    out.sort_by(|a, b| (a.len(), a.ids()).cmp(&(b.len(), b.ids())));
    out
}

/// Members of the broken-circuit complex B_G — all edge sets containing no
/// broken circuit — optionally restricted to a given size. Sorted by (size,
/// contents). A graph with a loop has an empty complex: the empty broken
/// circuit is inside every set.
pub fn nbc_sets(g: &Multigraph, size: Option<usize>) -> Vec<EdgeSet> {
    let broken = broken_circuits(g);
    if broken.iter().any(EdgeSet::is_empty) {
        return Vec::new();
    }
    let q = g.edge_count();
    // Backtrack in ascending edge order; B_G is subset-closed, so every
    // member is reachable through members. Prune by checking only broken
    // circuits whose maximum is the edge being added.
    let mut out = Vec::new();
    let mut current: Vec<EdgeId> = Vec::new();
    let mut mask = vec![false; q + 1];
    fn step(
        next: EdgeId,
        q: usize,
        broken: &[EdgeSet],
        current: &mut Vec<EdgeId>,
        mask: &mut Vec<bool>,
        out: &mut Vec<EdgeSet>,
    ) {
        out.push(EdgeSet::new(current.clone()));
        for e in next..=q {
            let completes_broken = broken.iter().any(|bc| {
                bc.max_id() == Some(e) && bc.ids()[..bc.len() - 1].iter().all(|&x| mask[x])
            });
            if completes_broken {
                continue;
            }
            current.push(e);
            mask[e] = true;
            step(e + 1, q, broken, current, mask, out);
            mask[e] = false;
            current.pop();
        }
    }
    step(1, q, &broken, &mut current, &mut mask, &mut out);
    out.sort_by(|a, b| (a.len(), a.ids()).cmp(&(b.len(), b.ids())));
    match size {
        Some(k) => out.into_iter().filter(|s| s.len() == k).collect(),
        None => out,
    }
}

/// The (d−1)-sized members of B_G. Requires G connected and loop-free; each
/// member is checked to be a spanning tree.
pub fn nbc_trees(g: &Multigraph) -> Result<Vec<EdgeSet>> {
    if g.has_loops() {
        return Err(Error::HasLoop);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let trees = nbc_sets(g, Some(g.vertex_count() - 1));
    for t in &trees {
        assert!(
            spans(g, t),
            "NBC set {t} of size d-1 is a spanning tree of {g:?}"
        );
    }
    Ok(trees)
}

fn spans(g: &Multigraph, s: &EdgeSet) -> bool {
    let d = g.vertex_count();
    let mut parent: Vec<usize> = (0..=d).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let r = find(parent, parent[x]);
            parent[x] = r;
        }
        parent[x]
    }
    let mut merged = 0;
    for &e in s.ids() {
        let (u, v) = g.endpoints(e);
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru != rv {
            parent[ru.max(rv)] = ru.min(rv);
            merged += 1;
        }
    }
    merged == d - 1
}
