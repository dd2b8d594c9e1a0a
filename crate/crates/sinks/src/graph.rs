//! Multigraphs with an ordered edge list, total orientations, and mixed
//! digraphs in which every edge is Forward, Backward, Unoriented, or Deleted.
//!
//! The edge order is significant everywhere: it is the total order that
//! defines broken circuits, the processing order of the staged bijection, and
//! the position of each symbol in an orientation word.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// 1-based vertex index.
pub type Vertex = usize;
/// 1-based edge id; ids are list positions and survive nothing — deletion and
/// contraction renumber the survivors, preserving relative order.
pub type EdgeId = usize;

/// An undirected multigraph on vertices `1..=d` with an ordered edge list.
/// Loops (`u == v`) and parallel edges (repeated pairs) are allowed and kept
/// distinct.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    d: usize,
    edges: Vec<(Vertex, Vertex)>,
}

impl Multigraph {
    pub fn new(d: usize, edges: Vec<(Vertex, Vertex)>) -> Result<Self> {
        if d == 0 {
            return Err(Error::Parse("vertex count must be at least 1".into()));
        }
        for &(u, v) in &edges {
            if u == 0 || u > d {
                return Err(Error::VertexOutOfRange(u, d));
            }
            if v == 0 || v > d {
                return Err(Error::VertexOutOfRange(v, d));
            }
        }
        Ok(Multigraph { d, edges })
    }

    /// Path v1 - v2 - … - vd with edges (i, i+1) in order.
    pub fn path(d: usize) -> Self {
        let edges = (1..d).map(|i| (i, i + 1)).collect();
        Multigraph { d: d.max(1), edges }
    }

    /// Cycle on d ≥ 3 vertices: edges (1,2), …, (d−1,d), (d,1).
    pub fn cycle(d: usize) -> Self {
        assert!(d >= 3, "cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..d).map(|i| (i, i + 1)).collect();
        edges.push((d, 1));
        Multigraph { d, edges }
    }

    /// Complete graph on d vertices, edges in lexicographic order.
    pub fn complete(d: usize) -> Self {
        let mut edges = Vec::new();
        for u in 1..=d.max(1) {
            for v in (u + 1)..=d {
                edges.push((u, v));
            }
        }
        Multigraph { d: d.max(1), edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.d
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn check_edge(&self, e: EdgeId) -> Result<()> {
        if e == 0 || e > self.edges.len() {
            Err(Error::EdgeOutOfRange(e, self.edges.len()))
        } else {
            Ok(())
        }
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v == 0 || v > self.d {
            Err(Error::VertexOutOfRange(v, self.d))
        } else {
            Ok(())
        }
    }

    /// Endpoints of edge `e` as written (first = tail of the normal
    /// orientation).
    pub fn endpoints(&self, e: EdgeId) -> (Vertex, Vertex) {
        self.edges[e - 1]
    }

    pub fn is_loop(&self, e: EdgeId) -> bool {
        let (u, v) = self.endpoints(e);
        u == v
    }

    pub fn has_loops(&self) -> bool {
        (1..=self.edge_count()).any(|e| self.is_loop(e))
    }

    pub fn is_incident(&self, e: EdgeId, v: Vertex) -> bool {
        let (a, b) = self.endpoints(e);
        a == v || b == v
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.d + 1];
        let mut queue = VecDeque::from([1]);
        seen[1] = true;
        while let Some(u) = queue.pop_front() {
            for &(a, b) in &self.edges {
                let w = if a == u {
                    b
                } else if b == u {
                    a
                } else {
                    continue;
                };
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen[1..].iter().all(|&s| s)
    }

    /// The same graph with edges reordered: new edge `i+1` is old `order[i]`.
    /// `order` must be a permutation of `1..=q`.
    pub fn with_edge_order(&self, order: &[EdgeId]) -> Result<Self> {
        let q = self.edge_count();
        let mut seen = vec![false; q + 1];
        if order.len() != q {
            return Err(Error::Parse(format!(
                "edge order has {} entries, graph has {} edges",
                order.len(),
                q
            )));
        }
        for &e in order {
            self.check_edge(e)?;
            if seen[e] {
                return Err(Error::Parse(format!("edge {e} repeated in order")));
            }
            seen[e] = true;
        }
        let edges = order.iter().map(|&e| self.endpoints(e)).collect();
        Ok(Multigraph { d: self.d, edges })
    }

    /// The graph with vertex i renamed δ(i) = `delta[i-1]`; edge order and
    /// written endpoint order are preserved.
    pub fn relabel_vertices(&self, delta: &[usize]) -> Result<Self> {
        if delta.len() != self.d {
            return Err(Error::Parse(format!(
                "relabeling has {} entries, graph has {} vertices",
                delta.len(),
                self.d
            )));
        }
        let mut seen = vec![false; self.d + 1];
        for &img in delta {
            if img == 0 || img > self.d || seen[img] {
                return Err(Error::Parse(format!("{delta:?} is not a permutation")));
            }
            seen[img] = true;
        }
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| (delta[u - 1], delta[v - 1]))
            .collect();
        Ok(Multigraph { d: self.d, edges })
    }

    /// G \ e: remove edge `e`; later edges shift down one id.
    pub fn delete_edge(&self, e: EdgeId) -> Result<Self> {
        self.check_edge(e)?;
        let mut edges = self.edges.clone();
        edges.remove(e - 1);
        Ok(Multigraph { d: self.d, edges })
    }

    /// G / e: merge the endpoints of the non-loop edge `e` into the smaller
    /// of the two labels; vertices above the larger label shift down one.
    /// Parallel copies of `e` become loops and are kept.
    pub fn contract_edge(&self, e: EdgeId) -> Result<Self> {
        Ok(self.contract_edge_with_map(e)?.0)
    }

    /// Like [`contract_edge`](Self::contract_edge), also returning the vertex
    /// relabeling: `map[old_vertex] = new_vertex`.
    pub fn contract_edge_with_map(&self, e: EdgeId) -> Result<(Self, Vec<Vertex>)> {
        self.check_edge(e)?;
        if self.is_loop(e) {
            return Err(Error::ContractLoop(e));
        }
        let (u, v) = self.endpoints(e);
        let (keep, gone) = (u.min(v), u.max(v));
        let map: Vec<Vertex> = (0..=self.d)
            .map(|w| match w {
                _ if w == gone => keep,
                _ if w > gone => w - 1,
                _ => w,
            })
            .collect();
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != e - 1)
            .map(|(_, &(a, b))| (map[a], map[b]))
            .collect();
        Ok((
            Multigraph {
                d: self.d - 1,
                edges,
            },
            map,
        ))
    }
}

impl fmt::Display for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "d {}", self.d)?;
        for &(u, v) in &self.edges {
            writeln!(f, "e {u} {v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multigraph(d={}, edges={:?})", self.d, self.edges)
    }
}

impl FromStr for Multigraph {
    type Err = Error;

    /// Text format: a `d <count>` line, then one `e <u> <v>` line per edge in
    /// order. Lines starting with `#` and blank lines are skipped.
    fn from_str(s: &str) -> Result<Self> {
        let mut d: Option<usize> = None;
        let mut edges = Vec::new();
        for (lineno, raw) in s.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut tokens = line.split_whitespace();
            let head = tokens.next().unwrap();
            let bad = |msg: &str| Error::Parse(format!("line {}: {}", lineno + 1, msg));
            match head {
                "d" => {
                    if d.is_some() {
                        return Err(bad("duplicate d line"));
                    }
                    let n = tokens
                        .next()
                        .ok_or_else(|| bad("d needs a count"))?
                        .parse::<usize>()
                        .map_err(|_| bad("d count must be a positive integer"))?;
                    if tokens.next().is_some() {
                        return Err(bad("trailing tokens after d line"));
                    }
                    d = Some(n);
                }
                "e" => {
                    if d.is_none() {
                        return Err(bad("e line before d line"));
                    }
                    let mut get = |name: &str| {
                        tokens
                            .next()
                            .ok_or_else(|| bad(&format!("e needs {name}")))?
                            .parse::<usize>()
                            .map_err(|_| bad(&format!("{name} must be a positive integer")))
                    };
                    let u = get("u")?;
                    let v = get("v")?;
                    if tokens.next().is_some() {
                        return Err(bad("trailing tokens after e line"));
                    }
                    edges.push((u, v));
                }
                _ => return Err(bad(&format!("unknown directive {head:?}"))),
            }
        }
        let d = d.ok_or_else(|| Error::Parse("missing d line".into()))?;
        Multigraph::new(d, edges)
    }
}

/// Direction of one edge relative to its written endpoints.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Dir {
    /// u → v for an edge written `e u v`; this is the normal orientation.
    Forward,
    /// v → u.
    Backward,
}

impl Dir {
    pub fn flipped(self) -> Dir {
        match self {
            Dir::Forward => Dir::Backward,
            Dir::Backward => Dir::Forward,
        }
    }
}

/// A total orientation: one direction per edge, indexed by edge id. Rendered
/// as a word of `>` (Forward) and `<` (Backward) in edge order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Orientation {
    dirs: Vec<Dir>,
}

impl Orientation {
    pub fn new(dirs: Vec<Dir>) -> Self {
        Orientation { dirs }
    }

    pub fn all_forward(q: usize) -> Self {
        Orientation {
            dirs: vec![Dir::Forward; q],
        }
    }

    pub fn all_backward(q: usize) -> Self {
        Orientation {
            dirs: vec![Dir::Backward; q],
        }
    }

    pub fn from_word(word: &str) -> Result<Self> {
        let mut dirs = Vec::with_capacity(word.len());
        for c in word.chars() {
            dirs.push(match c {
                '>' => Dir::Forward,
                '<' => Dir::Backward,
                _ => return Err(Error::Parse(format!("bad orientation symbol {c:?}"))),
            });
        }
        Ok(Orientation { dirs })
    }

    pub fn word(&self) -> String {
        self.dirs
            .iter()
            .map(|d| match d {
                Dir::Forward => '>',
                Dir::Backward => '<',
            })
            .collect()
    }

    pub fn len(&self) -> usize {
        self.dirs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dirs.is_empty()
    }

    pub fn dir(&self, e: EdgeId) -> Dir {
        self.dirs[e - 1]
    }

    /// The arc of edge `e` as (tail, head).
    pub fn arc(&self, g: &Multigraph, e: EdgeId) -> (Vertex, Vertex) {
        let (u, v) = g.endpoints(e);
        match self.dir(e) {
            Dir::Forward => (u, v),
            Dir::Backward => (v, u),
        }
    }

    pub fn with_dir(&self, e: EdgeId, dir: Dir) -> Self {
        let mut dirs = self.dirs.clone();
        dirs[e - 1] = dir;
        Orientation { dirs }
    }

    /// Orientation of G \ e obtained by dropping position `e`.
    pub fn without_edge(&self, e: EdgeId) -> Self {
        let mut dirs = self.dirs.clone();
        dirs.remove(e - 1);
        Orientation { dirs }
    }

    /// Inverse of [`without_edge`](Self::without_edge): reinsert a direction
    /// at position `e`.
    pub fn with_inserted(&self, e: EdgeId, dir: Dir) -> Self {
        let mut dirs = self.dirs.clone();
        dirs.insert(e - 1, dir);
        Orientation { dirs }
    }

    pub fn check_for(&self, g: &Multigraph) -> Result<()> {
        if self.dirs.len() != g.edge_count() {
            return Err(Error::WordLength {
                got: self.dirs.len(),
                want: g.edge_count(),
            });
        }
        Ok(())
    }
}

impl fmt::Debug for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Orientation({})", self.word())
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word())
    }
}

/// Per-edge state of a mixed digraph. An Unoriented edge stands for both
/// opposite arcs at once; a Deleted edge is absent entirely.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum EdgeState {
    Forward,
    Backward,
    Unoriented,
    Deleted,
}

impl EdgeState {
    pub fn is_oriented(self) -> bool {
        matches!(self, EdgeState::Forward | EdgeState::Backward)
    }
}

/// A multigraph together with a state for every edge: the working object of
/// the staged sink bijection.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MixedDigraph {
    host: Multigraph,
    state: Vec<EdgeState>,
}

/// Result of contracting away the unoriented edges of an acyclic mixed
/// digraph: the contraction itself plus the vertex surjection and the edge id
/// translation (None for edges that were Unoriented).
pub struct ContractedMixed {
    pub digraph: MixedDigraph,
    /// `vertex_map[old] = new`; index 0 unused.
    pub vertex_map: Vec<Vertex>,
    /// `edge_map[old] = Some(new)` for surviving edges; index 0 unused.
    pub edge_map: Vec<Option<EdgeId>>,
}

impl MixedDigraph {
    pub fn new(host: Multigraph, state: Vec<EdgeState>) -> Result<Self> {
        if state.len() != host.edge_count() {
            return Err(Error::WordLength {
                got: state.len(),
                want: host.edge_count(),
            });
        }
        Ok(MixedDigraph { host, state })
    }

    /// Totally oriented mixed digraph from an orientation.
    pub fn total(host: Multigraph, o: &Orientation) -> Result<Self> {
        o.check_for(&host)?;
        let state = (1..=host.edge_count())
            .map(|e| match o.dir(e) {
                Dir::Forward => EdgeState::Forward,
                Dir::Backward => EdgeState::Backward,
            })
            .collect();
        Ok(MixedDigraph { host, state })
    }

    pub fn host(&self) -> &Multigraph {
        &self.host
    }

    pub fn state(&self, e: EdgeId) -> EdgeState {
        self.state[e - 1]
    }

    pub fn states(&self) -> &[EdgeState] {
        &self.state
    }

    pub fn with_state(&self, e: EdgeId, s: EdgeState) -> Self {
        let mut state = self.state.clone();
        state[e - 1] = s;
        MixedDigraph {
            host: self.host.clone(),
            state,
        }
    }

    /// Ids of Unoriented edges, ascending.
    pub fn unoriented_edges(&self) -> Vec<EdgeId> {
        (1..=self.host.edge_count())
            .filter(|&e| self.state(e) == EdgeState::Unoriented)
            .collect()
    }

    /// The total orientation, if every edge is oriented.
    pub fn to_orientation(&self) -> Option<Orientation> {
        let mut dirs = Vec::with_capacity(self.state.len());
        for s in &self.state {
            dirs.push(match s {
                EdgeState::Forward => Dir::Forward,
                EdgeState::Backward => Dir::Backward,
                _ => return None,
            });
        }
        Some(Orientation::new(dirs))
    }

    /// Arcs of edge `e` as (tail, head) pairs: one for an oriented edge, both
    /// for an Unoriented one, none for a Deleted one.
    fn arcs_of(&self, e: EdgeId) -> impl Iterator<Item = (Vertex, Vertex)> {
        let (u, v) = self.host.endpoints(e);
        let pair: [Option<(Vertex, Vertex)>; 2] = match self.state(e) {
            EdgeState::Forward => [Some((u, v)), None],
            EdgeState::Backward => [Some((v, u)), None],
            EdgeState::Unoriented => [Some((u, v)), Some((v, u))],
            EdgeState::Deleted => [None, None],
        };
        pair.into_iter().flatten()
    }

    /// Acyclicity under the mixed-digraph convention: no non-deleted loops,
    /// no two distinct edges traversed as a 2-cycle (the two arcs of a single
    /// Unoriented edge do NOT count), and no directed cycle on ≥ 3 distinct
    /// vertices.
    pub fn is_acyclic(&self) -> bool {
        let d = self.host.vertex_count();
        let q = self.host.edge_count();

        for e in 1..=q {
            if self.state(e) != EdgeState::Deleted && self.host.is_loop(e) {
                return false;
            }
        }

        // 2-cycles from distinct edges on the same vertex pair.
        let mut pairs: HashMap<(Vertex, Vertex), (u32, u32, u32)> = HashMap::new();
        for e in 1..=q {
            if self.host.is_loop(e) {
                continue;
            }
            let (u, v) = self.host.endpoints(e);
            let key = (u.min(v), u.max(v));
            let entry = pairs.entry(key).or_insert((0, 0, 0));
            match self.state(e) {
                EdgeState::Deleted => {}
                EdgeState::Unoriented => entry.2 += 1,
                EdgeState::Forward | EdgeState::Backward => {
                    let (t, _) = self.arcs_of(e).next().unwrap();
                    if t == key.0 {
                        entry.0 += 1;
                    } else {
                        entry.1 += 1;
                    }
                }
            }
        }
        for &(lo, hi, un) in pairs.values() {
            let two_cycle = (lo >= 1 && hi >= 1) || (un >= 1 && lo + hi >= 1) || un >= 2;
            if two_cycle {
                return false;
            }
        }

        // Directed cycles on ≥ 3 distinct vertices, searched in the derived
        // simple digraph. Canonical start: the cycle's minimum vertex.
        let mut adj = vec![Vec::new(); d + 1];
        for e in 1..=q {
            for (t, h) in self.arcs_of(e) {
                if t != h && !adj[t].contains(&h) {
                    adj[t].push(h);
                }
            }
        }
        fn dfs(u: Vertex, s: Vertex, len: usize, adj: &[Vec<Vertex>], vis: &mut [bool]) -> bool {
            for &w in &adj[u] {
                if w == s && len >= 2 {
                    return true;
                }
                if w > s && !vis[w] {
                    vis[w] = true;
                    if dfs(w, s, len + 1, adj, vis) {
                        return true;
                    }
                    vis[w] = false;
                }
            }
            false
        }
        let mut vis = vec![false; d + 1];
        for s in 1..=d {
            if dfs(s, s, 0, &adj, &mut vis) {
                return false;
            }
        }
        true
    }

    /// Vertices all of whose incident non-deleted arcs point toward them.
    /// An Unoriented edge contributes an outgoing arc at both endpoints, and
    /// a non-deleted loop contributes one at its vertex, so neither endpoint
    /// is a sink. Isolated vertices are sinks. Sorted ascending.
    pub fn sinks(&self) -> Vec<Vertex> {
        let d = self.host.vertex_count();
        let mut out = vec![false; d + 1];
        for e in 1..=self.host.edge_count() {
            for (t, h) in self.arcs_of(e) {
                out[t] = true;
                if t == h {
                    out[h] = true;
                }
            }
        }
        (1..=d).filter(|&v| !out[v]).collect()
    }

    /// True iff every vertex has a directed path to `v0` (Unoriented edges
    /// are traversable both ways, Deleted edges not at all).
    pub fn all_reach(&self, v0: Vertex) -> bool {
        self.unreachable_to(v0).is_empty()
    }

    /// Vertices with no directed path to `v0`, ascending.
    pub fn unreachable_to(&self, v0: Vertex) -> Vec<Vertex> {
        let d = self.host.vertex_count();
        let mut rev = vec![Vec::new(); d + 1];
        for e in 1..=self.host.edge_count() {
            for (t, h) in self.arcs_of(e) {
                rev[h].push(t);
            }
        }
        let mut seen = vec![false; d + 1];
        let mut queue = VecDeque::from([v0]);
        seen[v0] = true;
        while let Some(u) = queue.pop_front() {
            for &t in &rev[u] {
                if !seen[t] {
                    seen[t] = true;
                    queue.push_back(t);
                }
            }
        }
        (1..=d).filter(|&v| !seen[v]).collect()
    }

    /// c(D): contract every Unoriented edge. Each unoriented component is
    /// collapsed to one vertex; components are relabeled 1, 2, … in order of
    /// their minimum original vertex. Oriented and Deleted edges survive with
    /// mapped endpoints, renumbered consecutively in the original order.
    ///
    /// Errors when `self` is not acyclic; the result is acyclic again (an
    /// oriented edge inside an unoriented component would already have been a
    /// cycle), which is asserted.
    pub fn contract_unoriented(&self) -> Result<ContractedMixed> {
        if !self.is_acyclic() {
            return Err(Error::InvalidStage(
                "contract_unoriented requires an acyclic mixed digraph".into(),
            ));
        }
        let d = self.host.vertex_count();
        // Union-find over unoriented edges.
        let mut parent: Vec<usize> = (0..=d).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let r = find(parent, parent[x]);
                parent[x] = r;
            }
            parent[x]
        }
        for e in 1..=self.host.edge_count() {
            if self.state(e) == EdgeState::Unoriented {
                let (u, v) = self.host.endpoints(e);
                let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                if ru != rv {
                    parent[ru.max(rv)] = ru.min(rv);
                }
            }
        }
        // Components labeled by minimum vertex, in ascending order.
        let mut label: HashMap<Vertex, Vertex> = HashMap::new();
        let mut vertex_map = vec![0; d + 1];
        for (v, slot) in vertex_map.iter_mut().enumerate().skip(1) {
            let root = find(&mut parent, v);
            let next = label.len() + 1;
            *slot = *label.entry(root).or_insert(next);
        }
        let new_d = label.len();

        let mut edges = Vec::new();
        let mut state = Vec::new();
        let mut edge_map = vec![None; self.host.edge_count() + 1];
        for (e, slot) in edge_map.iter_mut().enumerate().skip(1) {
            if self.state(e) == EdgeState::Unoriented {
                continue;
            }
            let (u, v) = self.host.endpoints(e);
            edges.push((vertex_map[u], vertex_map[v]));
            state.push(self.state(e));
            *slot = Some(edges.len());
        }
        let digraph = MixedDigraph {
            host: Multigraph { d: new_d, edges },
            state,
        };
        assert!(
            digraph.is_acyclic(),
            "contraction of an acyclic mixed digraph stayed acyclic"
        );
        Ok(ContractedMixed {
            digraph,
            vertex_map,
            edge_map,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(d: usize, edges: &[(usize, usize)]) -> Multigraph {
        Multigraph::new(d, edges.to_vec()).unwrap()
    }

    #[test]
    fn parse_round_trip() {
        let text = "# a triangle\nd 3\ne 1 2\ne 1 3\ne 2 3\n";
        let g: Multigraph = text.parse().unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edges(), &[(1, 2), (1, 3), (2, 3)]);
        assert_eq!(g.to_string(), "d 3\ne 1 2\ne 1 3\ne 2 3\n");
        assert_eq!(g, Multigraph::complete(3));
    }

    #[test]
    fn parse_rejects_malformed_input() {
        assert!("e 1 2\nd 2".parse::<Multigraph>().is_err());
        assert!("d 2\ne 1".parse::<Multigraph>().is_err());
        assert!("d 2\ne 1 3".parse::<Multigraph>().is_err());
        assert!("d 0".parse::<Multigraph>().is_err());
        assert!("d 2\nf 1 2".parse::<Multigraph>().is_err());
        assert!("d 2\nd 2".parse::<Multigraph>().is_err());
        assert!("d 2\ne 1 2 3".parse::<Multigraph>().is_err());
    }

    #[test]
    fn delete_edge_keeps_order_and_vertices() {
        let p3 = Multigraph::path(3);
        let g = p3.delete_edge(2).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edges(), &[(1, 2)]);

        let k3 = Multigraph::complete(3);
        let path = k3.delete_edge(2).unwrap();
        assert_eq!(path.edges(), &[(1, 2), (2, 3)]);
        assert!(path.is_connected());

        let loopy = graph(1, &[(1, 1)]);
        let bare = loopy.delete_edge(1).unwrap();
        assert_eq!(bare.vertex_count(), 1);
        assert_eq!(bare.edge_count(), 0);
    }

    #[test]
    fn contract_keeps_parallels_and_loops() {
        let k3 = Multigraph::complete(3);
        let g = k3.contract_edge(1).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edges(), &[(1, 2), (1, 2)]);

        let doubled = graph(2, &[(1, 2), (1, 2)]);
        let looped = doubled.contract_edge(1).unwrap();
        assert_eq!(looped.edges(), &[(1, 1)]);

        let p3 = Multigraph::path(3);
        let (p2, map) = p3.contract_edge_with_map(2).unwrap();
        assert_eq!(p2.edges(), &[(1, 2)]);
        assert_eq!(map[1..], [1, 2, 2]);

        assert!(matches!(
            graph(1, &[(1, 1)]).contract_edge(1),
            Err(Error::ContractLoop(1))
        ));
    }

    #[test]
    fn delete_and_contract_commute_on_disjoint_edges() {
        // Exhaustive over small graphs: pick two distinct edges, contract one
        // and delete the other in both orders.
        for g in [
            Multigraph::complete(4),
            Multigraph::cycle(4),
            graph(3, &[(1, 2), (1, 2), (2, 3), (3, 1)]),
        ] {
            let q = g.edge_count();
            for ce in 1..=q {
                if g.is_loop(ce) {
                    continue;
                }
                for de in 1..=q {
                    if de == ce {
                        continue;
                    }
                    let a = g.contract_edge(ce).unwrap();
                    let de_a = if de > ce { de - 1 } else { de };
                    let a = a.delete_edge(de_a).unwrap();
                    let b = g.delete_edge(de).unwrap();
                    let ce_b = if ce > de { ce - 1 } else { ce };
                    let b = b.contract_edge(ce_b).unwrap();
                    assert_eq!(a, b, "contract {ce} / delete {de} on {g:?}");
                }
            }
        }
    }

    #[test]
    fn edge_reorder_permutes_list() {
        let k3 = Multigraph::complete(3);
        let g = k3.with_edge_order(&[3, 1, 2]).unwrap();
        assert_eq!(g.edges(), &[(2, 3), (1, 2), (1, 3)]);
        assert!(k3.with_edge_order(&[1, 1, 2]).is_err());
        assert!(k3.with_edge_order(&[1, 2]).is_err());
    }

    #[test]
    fn orientation_words() {
        let o = Orientation::from_word("><>").unwrap();
        assert_eq!(o.word(), "><>");
        assert_eq!(o.dir(2), Dir::Backward);
        let k3 = Multigraph::complete(3);
        assert_eq!(o.arc(&k3, 2), (3, 1));
        assert!(Orientation::from_word(">x<").is_err());
        assert_eq!(o.without_edge(2).word(), ">>");
        assert_eq!(o.without_edge(2).with_inserted(2, Dir::Backward), o);
    }

    #[test]
    fn cyclic_triangle_is_detected() {
        let k3 = Multigraph::complete(3);
        // 1→2, 2→3, 3→1: edges (1,2) F, (1,3) B, (2,3) F.
        let cyc = MixedDigraph::total(k3.clone(), &Orientation::from_word("><>").unwrap()).unwrap();
        assert!(!cyc.is_acyclic());
        let acyc = MixedDigraph::total(k3, &Orientation::from_word(">>>").unwrap()).unwrap();
        assert!(acyc.is_acyclic());
    }

    #[test]
    fn unoriented_pairs_are_not_cycles() {
        let p3 = Multigraph::path(3);
        let d = MixedDigraph::new(p3, vec![EdgeState::Unoriented; 2]).unwrap();
        assert!(d.is_acyclic());
    }

    #[test]
    fn fully_unoriented_circuit_is_a_cycle() {
        let k3 = Multigraph::complete(3);
        let d = MixedDigraph::new(k3, vec![EdgeState::Unoriented; 3]).unwrap();
        assert!(!d.is_acyclic());
    }

    #[test]
    fn opposite_parallel_edges_are_a_cycle() {
        let doubled = graph(2, &[(1, 2), (1, 2)]);
        let opposite = MixedDigraph::new(
            doubled.clone(),
            vec![EdgeState::Forward, EdgeState::Backward],
        )
        .unwrap();
        assert!(!opposite.is_acyclic());
        let aligned = MixedDigraph::new(doubled.clone(), vec![EdgeState::Forward; 2]).unwrap();
        assert!(aligned.is_acyclic());
        let one_unoriented = MixedDigraph::new(
            doubled.clone(),
            vec![EdgeState::Unoriented, EdgeState::Forward],
        )
        .unwrap();
        assert!(!one_unoriented.is_acyclic());
        let both_unoriented = MixedDigraph::new(doubled, vec![EdgeState::Unoriented; 2]).unwrap();
        assert!(!both_unoriented.is_acyclic());
    }

    #[test]
    fn loops_block_acyclicity_unless_deleted() {
        let loopy = graph(2, &[(1, 1), (1, 2)]);
        for s in [
            EdgeState::Forward,
            EdgeState::Backward,
            EdgeState::Unoriented,
        ] {
            let d = MixedDigraph::new(loopy.clone(), vec![s, EdgeState::Forward]).unwrap();
            assert!(!d.is_acyclic(), "loop in state {s:?}");
        }
        let gone = MixedDigraph::new(loopy, vec![EdgeState::Deleted, EdgeState::Forward]).unwrap();
        assert!(gone.is_acyclic());
    }

    #[test]
    fn sinks_of_small_orientations() {
        let p3 = Multigraph::path(3);
        let inward =
            MixedDigraph::total(p3.clone(), &Orientation::from_word("><").unwrap()).unwrap();
        assert_eq!(inward.sinks(), vec![2]);
        let chain =
            MixedDigraph::total(p3.clone(), &Orientation::from_word(">>").unwrap()).unwrap();
        assert_eq!(chain.sinks(), vec![3]);

        let edgeless = graph(3, &[]);
        let d = MixedDigraph::new(edgeless, vec![]).unwrap();
        assert_eq!(d.sinks(), vec![1, 2, 3]);

        // Unoriented edges block both endpoints; deleted edges free them.
        let half =
            MixedDigraph::new(p3.clone(), vec![EdgeState::Unoriented, EdgeState::Deleted]).unwrap();
        assert_eq!(half.sinks(), vec![3]);
    }

    #[test]
    fn reachability_respects_states() {
        let p3 = Multigraph::path(3);
        // 1→2←3 reaches 2 from everywhere.
        let inward =
            MixedDigraph::total(p3.clone(), &Orientation::from_word("><").unwrap()).unwrap();
        assert!(inward.all_reach(2));
        assert!(!inward.all_reach(1));
        // An unoriented edge is a two-way street.
        let half = MixedDigraph::new(p3.clone(), vec![EdgeState::Unoriented, EdgeState::Backward])
            .unwrap();
        assert!(half.all_reach(1));
        assert!(half.all_reach(2));
        // A deleted edge is no street at all.
        let cut = MixedDigraph::new(p3, vec![EdgeState::Deleted, EdgeState::Backward]).unwrap();
        assert!(!cut.all_reach(1));
    }

    #[test]
    fn contract_unoriented_identity_when_nothing_unoriented() {
        let k3 = Multigraph::complete(3);
        let d = MixedDigraph::total(k3, &Orientation::from_word(">>>").unwrap()).unwrap();
        let c = d.contract_unoriented().unwrap();
        assert_eq!(c.digraph, d);
        assert_eq!(c.vertex_map[1..], [1, 2, 3]);
        assert_eq!(c.edge_map[1..], [Some(1), Some(2), Some(3)]);
    }

    #[test]
    fn contract_unoriented_collapses_components() {
        // P4 with middle edge oriented, outer edges unoriented: components
        // {1,2} and {3,4} collapse to vertices 1 and 2.
        let p4 = Multigraph::path(4);
        let d = MixedDigraph::new(
            p4,
            vec![
                EdgeState::Unoriented,
                EdgeState::Forward,
                EdgeState::Unoriented,
            ],
        )
        .unwrap();
        let c = d.contract_unoriented().unwrap();
        assert_eq!(c.digraph.host().vertex_count(), 2);
        assert_eq!(c.digraph.host().edges(), &[(1, 2)]);
        assert_eq!(c.digraph.state(1), EdgeState::Forward);
        assert_eq!(c.vertex_map[1..], [1, 1, 2, 2]);
        assert_eq!(c.edge_map[1..], [None, Some(1), None]);
    }

    #[test]
    fn contract_unoriented_keeps_deleted_edges_deleted() {
        let p3 = Multigraph::path(3);
        let d = MixedDigraph::new(p3, vec![EdgeState::Unoriented, EdgeState::Deleted]).unwrap();
        let c = d.contract_unoriented().unwrap();
        assert_eq!(c.digraph.host().vertex_count(), 2);
        assert_eq!(c.digraph.state(1), EdgeState::Deleted);
        assert_eq!(c.digraph.sinks(), vec![1, 2]);
    }

    #[test]
    fn contract_unoriented_rejects_cyclic_input() {
        let k3 = Multigraph::complete(3);
        let cyc = MixedDigraph::total(k3, &Orientation::from_word("><>").unwrap()).unwrap();
        assert!(cyc.contract_unoriented().is_err());
    }

    #[test]
    fn fully_unoriented_connected_graph_contracts_to_a_point() {
        let p3 = Multigraph::path(3);
        let d = MixedDigraph::new(p3, vec![EdgeState::Unoriented; 2]).unwrap();
        let c = d.contract_unoriented().unwrap();
        assert_eq!(c.digraph.host().vertex_count(), 1);
        assert_eq!(c.digraph.host().edge_count(), 0);
        assert_eq!(c.vertex_map[1..], [1, 1, 1]);
    }
}
