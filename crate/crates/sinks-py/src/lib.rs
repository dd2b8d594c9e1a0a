//! Python bindings for the `sinks` crate.
//!
//! Everything hangs off a single `Graph` class mirroring
//! [`sinks::graph::Multigraph`]: counting and listing acyclic orientations,
//! chromatic polynomial coefficients, broken-circuit data, the staged
//! tree bijection, and the noncommutative invariant (returned as rendered
//! strings, since its coefficients are rationals indexed by set partitions).

use std::collections::BTreeMap;

use num::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use sinks::bijection;
use sinks::chromatic::chromatic_delcon;
use sinks::graph::{Multigraph, Orientation};
use sinks::nbc::{nbc_sets, nbc_trees, EdgeSet};
use sinks::ncsf::{commutativize, specialize_ones, to_e_basis, y_delcon};
use sinks::orientations::{all_acyclic, sink_distribution, unique_sink};
use sinks::verify::verify_graph;

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_orientation(word: &str, q: usize) -> PyResult<Orientation> {
    let o = Orientation::from_word(word).map_err(value_err)?;
    if o.len() != q {
        return Err(value_err(format!(
            "expected {q} edge directions, got {}",
            o.len()
        )));
    }
    Ok(o)
}

/// A multigraph with vertices 1..=d and an ordered list of edges.
#[pyclass(frozen)]
struct Graph {
    inner: Multigraph,
}

#[pymethods]
impl Graph {
    #[new]
    fn new(d: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(Graph {
            inner: Multigraph::new(d, edges).map_err(value_err)?,
        })
    }

    /// Parse the `d …` / `e u v` text format (same as the CLI reads).
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(Graph {
            inner: text.parse().map_err(value_err)?,
        })
    }

    #[staticmethod]
    fn path(d: usize) -> Self {
        Graph {
            inner: Multigraph::path(d),
        }
    }

    #[staticmethod]
    fn cycle(d: usize) -> PyResult<Self> {
        if d < 3 {
            return Err(value_err("cycle needs at least 3 vertices"));
        }
        Ok(Graph {
            inner: Multigraph::cycle(d),
        })
    }

    #[staticmethod]
    fn complete(d: usize) -> Self {
        Graph {
            inner: Multigraph::complete(d),
        }
    }

    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().to_vec()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(d={}, edges={:?})",
            self.inner.vertex_count(),
            self.inner.edges()
        )
    }

    /// Chromatic polynomial coefficients, constant term first.
    fn chromatic(&self) -> Vec<BigInt> {
        let p = chromatic_delcon(&self.inner);
        (0..=p.degree())
            .map(|i| p.coefficient(i).unwrap().clone())
            .collect()
    }

    /// Every acyclic orientation as a direction word over `<` and `>`.
    fn acyclic_words(&self) -> Vec<String> {
        all_acyclic(&self.inner)
            .iter()
            .map(Orientation::word)
            .collect()
    }

    fn acyclic_count(&self) -> usize {
        all_acyclic(&self.inner).len()
    }

    /// Acyclic orientations whose one and only sink is `v0`.
    fn unique_sink_words(&self, v0: usize) -> PyResult<Vec<String>> {
        let list = unique_sink(&self.inner, v0).map_err(value_err)?;
        Ok(list.iter().map(Orientation::word).collect())
    }

    /// Map from sink count to the number of acyclic orientations with it.
    fn sink_distribution(&self) -> BTreeMap<usize, u64> {
        sink_distribution(&self.inner)
    }

    /// Edge-id sets containing no broken circuit, optionally of one size.
    #[pyo3(signature = (size=None))]
    fn nbc_sets(&self, size: Option<usize>) -> Vec<Vec<usize>> {
        nbc_sets(&self.inner, size)
            .iter()
            .map(|s| s.ids().to_vec())
            .collect()
    }

    /// The (d-1)-element sets from `nbc_sets`: the surviving spanning trees.
    fn nbc_tree_sets(&self) -> PyResult<Vec<Vec<usize>>> {
        let trees = nbc_trees(&self.inner).map_err(value_err)?;
        Ok(trees.iter().map(|s| s.ids().to_vec()).collect())
    }

    /// Run one unique-sink orientation through the staged tree map.
    ///
    /// Returns the resulting edge-id set and the comma-joined step trace.
    fn forward(&self, v0: usize, normal: &str, word: &str) -> PyResult<(Vec<usize>, String)> {
        let q = self.inner.edge_count();
        let normal = parse_orientation(normal, q)?;
        let d = parse_orientation(word, q)?;
        let (s, labels) = bijection::forward(&self.inner, v0, &normal, &d).map_err(value_err)?;
        Ok((s.ids().to_vec(), bijection::trace_string(&labels)))
    }

    /// Invert the staged tree map on one surviving spanning tree.
    fn inverse(&self, v0: usize, normal: &str, ids: Vec<usize>) -> PyResult<String> {
        let normal = parse_orientation(normal, self.inner.edge_count())?;
        let s = EdgeSet::new(ids);
        let d = bijection::inverse(&self.inner, v0, &normal, &s).map_err(value_err)?;
        Ok(d.word())
    }

    /// The noncommutative chromatic invariant in the monomial basis.
    fn y_m(&self) -> String {
        y_delcon(&self.inner).to_string()
    }

    /// The same invariant written in the elementary basis.
    fn y_e(&self) -> PyResult<String> {
        Ok(to_e_basis(&y_delcon(&self.inner))
            .map_err(value_err)?
            .to_string())
    }

    /// Commutative image of the elementary-basis expansion.
    fn commutative(&self) -> PyResult<String> {
        let e = to_e_basis(&y_delcon(&self.inner)).map_err(value_err)?;
        Ok(commutativize(&e).map_err(value_err)?.to_string())
    }

    /// Evaluate the invariant at n parallel ones; equals the chromatic
    /// polynomial at n.
    fn specialize(&self, n: u64) -> PyResult<BigInt> {
        let value = specialize_ones(&y_delcon(&self.inner), n);
        if !value.is_integer() {
            return Err(value_err(format!("non-integer specialization {value}")));
        }
        Ok(value.to_integer())
    }

    /// Cross-check every identity the crate promises on this graph.
    ///
    /// Returns one "PASS …"/"FAIL …" line per identity; `all_sinks`
    /// additionally checks the full sink distribution.
    #[pyo3(signature = (all_sinks=false))]
    fn verify(&self, all_sinks: bool) -> Vec<String> {
        verify_graph(&self.inner, all_sinks)
            .iter()
            .map(|r| r.to_string())
            .collect()
    }
}

#[pymodule]
fn sinks_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Graph>()?;
    Ok(())
}
