//! Staged reduction of a unique-sink acyclic orientation to a spanning tree
//! containing no broken circuit, together with its inverse.
//!
//! Edges are processed in id order against a fixed reference ("normal")
//! orientation. At each step the current edge is either deleted — (I) when
//! unorienting it would close a cycle, or (II) when the contraction minus
//! that edge keeps a single sink and the edge disagrees with the normal
//! orientation — or it is unoriented. After all steps the unoriented edges
//! form a spanning tree with no broken circuit, and the whole pass is a
//! bijection onto those trees for every choice of normal orientation.

use std::fmt;

use crate::graph::{Dir, EdgeId, EdgeState, MixedDigraph, Multigraph, Orientation, Vertex};
use crate::nbc::{broken_circuits, EdgeSet};
use crate::{Error, Result};

/// Why the forward pass deleted an edge (reasons `I` and `II`) or kept it
/// (`U`, rendered `u`).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StepLabel {
    I,
    II,
    U,
}

impl fmt::Display for StepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StepLabel::I => "I",
            StepLabel::II => "II",
            StepLabel::U => "u",
        })
    }
}

/// Comma-joined step labels, e.g. `I,II,u,u,u`.
pub fn trace_string(trace: &[StepLabel]) -> String {
    let parts: Vec<String> = trace.iter().map(StepLabel::to_string).collect();
    parts.join(",")
}

/// A snapshot of the algorithm after `k` edges have been processed: each of
/// the first `k` edges is Unoriented or Deleted, every later edge still
/// carries exactly one direction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Stage {
    k: usize,
    digraph: MixedDigraph,
}

impl Stage {
    pub fn new(k: usize, digraph: MixedDigraph) -> Result<Self> {
        if k > digraph.host().edge_count() {
            return Err(Error::InvalidStage(format!(
                "prefix length {k} exceeds the edge count {}",
                digraph.host().edge_count()
            )));
        }
        Ok(Stage { k, digraph })
    }

    /// The start of the forward pass: nothing processed, `o` as given.
    pub fn initial(g: &Multigraph, o: &Orientation) -> Result<Self> {
        Ok(Stage {
            k: 0,
            digraph: MixedDigraph::total(g.clone(), o)?,
        })
    }

    /// The end of the forward pass: the edges of `s` Unoriented, every other
    /// edge Deleted.
    pub fn terminal(g: &Multigraph, s: &EdgeSet) -> Result<Self> {
        for &e in s.ids() {
            g.check_edge(e)?;
        }
        let state = (1..=g.edge_count())
            .map(|e| {
                if s.contains(e) {
                    EdgeState::Unoriented
                } else {
                    EdgeState::Deleted
                }
            })
            .collect();
        Ok(Stage {
            k: g.edge_count(),
            digraph: MixedDigraph::new(g.clone(), state)?,
        })
    }

    /// Number of edges already processed.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn digraph(&self) -> &MixedDigraph {
        &self.digraph
    }
}

/// The condition a stage failed to satisfy. A stage is valid when
///
/// (a) every edge in the processed prefix is Unoriented or Deleted and every
///     later edge keeps exactly one direction,
/// (b) the mixed digraph is acyclic,
/// (c) every vertex has a directed path to the root (Unoriented edges run
///     both ways), and
/// (d) the unoriented edge set contains no broken circuit.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum StageViolation {
    /// (a): an edge in the processed prefix is still oriented.
    NotProcessed { edge: EdgeId },
    /// (a): an edge past the processed prefix is Unoriented or Deleted.
    NotOriented { edge: EdgeId },
    /// (b): the mixed digraph contains a cycle.
    Cyclic,
    /// (c): a vertex with no directed path to the root.
    Unreachable { vertex: Vertex },
    /// (d): a broken circuit inside the unoriented edge set.
    ContainsBrokenCircuit { bc: EdgeSet },
}

impl fmt::Display for StageViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StageViolation::NotProcessed { edge } => {
                write!(
                    f,
                    "(a): edge {edge} lies in the processed prefix but is still oriented"
                )
            }
            StageViolation::NotOriented { edge } => {
                write!(
                    f,
                    "(a): edge {edge} lies past the processed prefix but is not oriented"
                )
            }
            StageViolation::Cyclic => write!(f, "(b): the mixed digraph contains a cycle"),
            StageViolation::Unreachable { vertex } => {
                write!(f, "(c): vertex {vertex} has no directed path to the root")
            }
            StageViolation::ContainsBrokenCircuit { bc } => {
                write!(
                    f,
                    "(d): the unoriented edges contain the broken circuit {bc}"
                )
            }
        }
    }
}

/// Check conditions (a)–(d) for `stage` with root `v0`, reporting the first
/// violation found (in that order).
pub fn check_stage(v0: Vertex, stage: &Stage) -> std::result::Result<(), StageViolation> {
    let g = stage.digraph.host();
    for e in 1..=g.edge_count() {
        let oriented = stage.digraph.state(e).is_oriented();
        if e <= stage.k && oriented {
            return Err(StageViolation::NotProcessed { edge: e });
        }
        if e > stage.k && !oriented {
            return Err(StageViolation::NotOriented { edge: e });
        }
    }
    if !stage.digraph.is_acyclic() {
        return Err(StageViolation::Cyclic);
    }
    if let Some(&vertex) = stage.digraph.unreachable_to(v0).first() {
        return Err(StageViolation::Unreachable { vertex });
    }
    let unoriented = EdgeSet::new(stage.digraph.unoriented_edges());
    for bc in broken_circuits(g) {
        if bc.is_subset_of(&unoriented) {
            return Err(StageViolation::ContainsBrokenCircuit { bc });
        }
    }
    Ok(())
}

pub fn is_valid_stage(v0: Vertex, stage: &Stage) -> bool {
    check_stage(v0, stage).is_ok()
}

/// Process the next edge of a valid stage: delete it for reason I or II, or
/// unorient it. The result is again a valid stage.
pub fn forward_step(v0: Vertex, normal: &Orientation, stage: &Stage) -> Result<(Stage, StepLabel)> {
    let g = stage.digraph.host();
    normal.check_for(g)?;
    if stage.k >= g.edge_count() {
        return Err(Error::InvalidStage(
            "every edge is already processed".into(),
        ));
    }
    check_stage(v0, stage).map_err(|v| Error::InvalidStage(v.to_string()))?;
    let e = stage.k + 1;
    let dir = match stage.digraph.state(e) {
        EdgeState::Forward => Dir::Forward,
        EdgeState::Backward => Dir::Backward,
        _ => unreachable!("condition (a) keeps edge {e} oriented"),
    };

    // Reason I: restoring the opposite arc as well would close a cycle.
    let unoriented = stage.digraph.with_state(e, EdgeState::Unoriented);
    if !unoriented.is_acyclic() {
        let next = Stage {
            k: e,
            digraph: stage.digraph.with_state(e, EdgeState::Deleted),
        };
        debug_assert!(is_valid_stage(v0, &next));
        return Ok((next, StepLabel::I));
    }

    // Reason II: the contraction minus this edge keeps a single sink while
    // the edge runs against the normal orientation.
    let contracted = stage
        .digraph
        .contract_unoriented()
        .expect("a valid stage is acyclic");
    let image = contracted.edge_map[e].expect("an oriented edge survives contraction");
    let one_sink = contracted
        .digraph
        .with_state(image, EdgeState::Deleted)
        .sinks()
        .len()
        == 1;
    if one_sink && dir != normal.dir(e) {
        let next = Stage {
            k: e,
            digraph: stage.digraph.with_state(e, EdgeState::Deleted),
        };
        debug_assert!(is_valid_stage(v0, &next));
        return Ok((next, StepLabel::II));
    }

    let next = Stage {
        k: e,
        digraph: unoriented,
    };
    debug_assert!(is_valid_stage(v0, &next));
    Ok((next, StepLabel::U))
}

/// Undo the last step of a valid stage by restoring a single direction to
/// edge `k`: a Deleted edge gets the unique direction that keeps the digraph
/// acyclic (the abnormal one if both do), an Unoriented edge gets the unique
/// direction that keeps the root reachable (the normal one if both do).
pub fn inverse_step(v0: Vertex, normal: &Orientation, stage: &Stage) -> Result<Stage> {
    let g = stage.digraph.host();
    normal.check_for(g)?;
    if stage.k == 0 {
        return Err(Error::InvalidStage("no edge has been processed".into()));
    }
    check_stage(v0, stage).map_err(|v| Error::InvalidStage(v.to_string()))?;
    let e = stage.k;
    let forward = stage.digraph.with_state(e, EdgeState::Forward);
    let backward = stage.digraph.with_state(e, EdgeState::Backward);
    let restored = match stage.digraph.state(e) {
        EdgeState::Deleted => match (forward.is_acyclic(), backward.is_acyclic()) {
            (true, false) => forward,
            (false, true) => backward,
            (true, true) => match normal.dir(e) {
                Dir::Forward => backward,
                Dir::Backward => forward,
            },
            (false, false) => {
                unreachable!("both directions of edge {e} close a cycle in a valid stage")
            }
        },
        EdgeState::Unoriented => match (forward.all_reach(v0), backward.all_reach(v0)) {
            (true, false) => forward,
            (false, true) => backward,
            (true, true) => match normal.dir(e) {
                Dir::Forward => forward,
                Dir::Backward => backward,
            },
            (false, false) => {
                unreachable!("both directions of edge {e} cut the root off in a valid stage")
            }
        },
        _ => unreachable!("condition (a) keeps edge {e} processed"),
    };
    let prev = Stage {
        k: e - 1,
        digraph: restored,
    };
    debug_assert!(is_valid_stage(v0, &prev));
    Ok(prev)
}

/// Run the full forward pass on an acyclic orientation with unique sink `v0`.
/// Returns the final unoriented edge set — a spanning tree containing no
/// broken circuit — and the per-step labels.
pub fn forward(
    g: &Multigraph,
    v0: Vertex,
    normal: &Orientation,
    d: &Orientation,
) -> Result<(EdgeSet, Vec<StepLabel>)> {
    g.check_vertex(v0)?;
    normal.check_for(g)?;
    let mut stage = Stage::initial(g, d)?;
    check_stage(v0, &stage).map_err(|v| Error::NotInDomain(v.to_string()))?;
    let mut trace = Vec::with_capacity(g.edge_count());
    for _ in 0..g.edge_count() {
        let (next, label) = forward_step(v0, normal, &stage)?;
        stage = next;
        trace.push(label);
    }
    Ok((EdgeSet::new(stage.digraph.unoriented_edges()), trace))
}

/// Run the full inverse pass on a spanning tree containing no broken
/// circuit, recovering the unique orientation that `forward` maps to it.
pub fn inverse(
    g: &Multigraph,
    v0: Vertex,
    normal: &Orientation,
    s: &EdgeSet,
) -> Result<Orientation> {
    g.check_vertex(v0)?;
    normal.check_for(g)?;
    if s.len() + 1 != g.vertex_count() {
        return Err(Error::NotInDomain(format!(
            "edge set has {} edges but a spanning tree on {} vertices needs {}",
            s.len(),
            g.vertex_count(),
            g.vertex_count() - 1
        )));
    }
    let mut stage = Stage::terminal(g, s)?;
    check_stage(v0, &stage).map_err(|v| Error::NotInDomain(v.to_string()))?;
    for _ in 0..g.edge_count() {
        stage = inverse_step(v0, normal, &stage)?;
    }
    Ok(stage
        .digraph
        .to_orientation()
        .expect("the fully unwound stage is totally oriented"))
}
