//! Enumeration of acyclic orientations, unique-sink filtering, sink-count
//! distributions, and the one-edge deletion-contraction bijection
//! A(G,v0) ≅ A(G\e,v0) ⊎ A(G/e,v0) for an edge e = u v0.

use std::collections::BTreeMap;

use crate::graph::{Dir, EdgeId, MixedDigraph, Multigraph, Orientation, Vertex};
use crate::{Error, Result};

/// Streaming enumeration of acyclic orientations in word order: orientation
/// words are binary counters over edge ids with Forward as bit 0, so the
/// all-Forward word comes first when it is acyclic.
pub fn acyclic_iter(g: &Multigraph) -> impl Iterator<Item = Orientation> + '_ {
    let q = g.edge_count();
    assert!(q < 62, "orientation enumeration is limited to q < 62 edges");
    (0u64..(1u64 << q)).filter_map(move |word| {
        let dirs = (0..q)
            .map(|i| {
                if word >> i & 1 == 0 {
                    Dir::Forward
                } else {
                    Dir::Backward
                }
            })
            .collect();
        let o = Orientation::new(dirs);
        let d = MixedDigraph::total(g.clone(), &o).unwrap();
        d.is_acyclic().then_some(o)
    })
}

/// All acyclic orientations, materialized in enumeration order. Empty when G
/// has a loop.
pub fn all_acyclic(g: &Multigraph) -> Vec<Orientation> {
    acyclic_iter(g).collect()
}

/// Sink set of a total orientation.
pub fn sinks_of(g: &Multigraph, o: &Orientation) -> Vec<Vertex> {
    MixedDigraph::total(g.clone(), o).unwrap().sinks()
}

/// The acyclic orientations whose sink set is exactly {v0}.
pub fn unique_sink(g: &Multigraph, v0: Vertex) -> Result<Vec<Orientation>> {
    g.check_vertex(v0)?;
    Ok(all_acyclic(g)
        .into_iter()
        .filter(|o| sinks_of(g, o) == [v0])
        .collect())
}

/// For each j ≥ 1, how many acyclic orientations have exactly j sinks.
pub fn sink_distribution(g: &Multigraph) -> BTreeMap<usize, u64> {
    let mut dist = BTreeMap::new();
    for o in acyclic_iter(g) {
        *dist.entry(sinks_of(g, &o).len()).or_insert(0) += 1;
    }
    dist
}

/// Where an orientation lands under the deletion-contraction bijection.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DelConBranch {
    /// D \ a, an element of A(G\e, v0).
    Deleted(Orientation),
    /// D / a, an element of A(G/e, image of v0).
    Contracted(Orientation),
}

fn check_pivot_edge(g: &Multigraph, v0: Vertex, e: EdgeId) -> Result<Vertex> {
    g.check_vertex(v0)?;
    g.check_edge(e)?;
    if g.is_loop(e) {
        return Err(Error::ContractLoop(e));
    }
    let (x, y) = g.endpoints(e);
    if x != v0 && y != v0 {
        return Err(Error::NotInDomain(format!(
            "edge {e} is not incident to the sink vertex {v0}"
        )));
    }
    Ok(if x == v0 { y } else { x })
}

/// Direction of edge e that points at v0.
fn dir_towards(g: &Multigraph, e: EdgeId, v0: Vertex) -> Dir {
    let (_, y) = g.endpoints(e);
    if y == v0 {
        Dir::Forward
    } else {
        Dir::Backward
    }
}

fn check_in_a_g_v0(g: &Multigraph, v0: Vertex, o: &Orientation) -> Result<()> {
    o.check_for(g)?;
    let d = MixedDigraph::total(g.clone(), o).unwrap();
    if !d.is_acyclic() {
        return Err(Error::NotInDomain(format!("{} is not acyclic", o.word())));
    }
    if d.sinks() != [v0] {
        return Err(Error::NotInDomain(format!(
            "{} does not have unique sink {v0}",
            o.word()
        )));
    }
    Ok(())
}

/// Send D ∈ A(G,v0) to D\a when that still has unique sink v0, and to D/a
/// otherwise, where a is D's arc u→v0 on the pivot edge e.
pub fn delcon_bijection(
    g: &Multigraph,
    v0: Vertex,
    e: EdgeId,
    o: &Orientation,
) -> Result<DelConBranch> {
    check_pivot_edge(g, v0, e)?;
    check_in_a_g_v0(g, v0, o)?;
    // In A(G,v0) every edge at v0 already points at it.
    debug_assert_eq!(o.dir(e), dir_towards(g, e, v0));

    let rest = o.without_edge(e);
    let deleted_host = g.delete_edge(e).unwrap();
    let still = MixedDigraph::total(deleted_host, &rest).unwrap();
    if still.is_acyclic() && still.sinks() == [v0] {
        Ok(DelConBranch::Deleted(rest))
    } else {
        let (contracted_host, map) = g.contract_edge_with_map(e).unwrap();
        check_in_a_g_v0(&contracted_host, map[v0], &rest)
            .expect("contracted image lies in A(G/e, v0)");
        Ok(DelConBranch::Contracted(rest))
    }
}

/// Two-sided inverse of [`delcon_bijection`]: reinstate the arc u→v0 on top
/// of an element of A(G\e,v0) or A(G/e,v0).
pub fn delcon_inverse(
    g: &Multigraph,
    v0: Vertex,
    e: EdgeId,
    branch: &DelConBranch,
) -> Result<Orientation> {
    check_pivot_edge(g, v0, e)?;
    let rest = match branch {
        DelConBranch::Deleted(o) => {
            let host = g.delete_edge(e).unwrap();
            check_in_a_g_v0(&host, v0, o)?;
            o
        }
        DelConBranch::Contracted(o) => {
            let (host, map) = g.contract_edge_with_map(e).unwrap();
            check_in_a_g_v0(&host, map[v0], o)?;
            o
        }
    };
    let full = rest.with_inserted(e, dir_towards(g, e, v0));
    check_in_a_g_v0(g, v0, &full).expect("reinstating the sink arc lands in A(G,v0)");
    Ok(full)
}
