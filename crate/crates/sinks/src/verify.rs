//! Cross-identity suite: the count and coefficient equalities the library
//! exposes, checked exactly on one graph at a time with witness-carrying
//! failure reports.

use std::collections::BTreeSet;
use std::fmt;

use num::{BigInt, BigRational, Signed};

use crate::bijection::{forward, inverse};
use crate::chromatic::{chromatic_bruteforce, chromatic_delcon, chromatic_whitney, IntPolynomial};
use crate::graph::{Multigraph, Orientation, Vertex};
use crate::nbc::nbc_trees;
use crate::ncsf::{commutativize, to_e_basis, unique_sink_count_via_c, y_delcon};
use crate::orientations::{all_acyclic, sink_distribution, unique_sink};

/// Outcome of one identity on one graph; `witness` names the offending
/// object on failure.
#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub name: &'static str,
    pub passed: bool,
    pub witness: Option<String>,
}

impl IdentityReport {
    fn pass(name: &'static str) -> Self {
        IdentityReport {
            name,
            passed: true,
            witness: None,
        }
    }

    fn fail(name: &'static str, witness: String) -> Self {
        IdentityReport {
            name,
            passed: false,
            witness: Some(witness),
        }
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed {
            write!(f, "PASS {}", self.name)
        } else {
            write!(
                f,
                "FAIL {}: {}",
                self.name,
                self.witness.as_deref().unwrap_or("")
            )
        }
    }
}

fn tag(g: &Multigraph) -> String {
    format!("d={} edges={:?}", g.vertex_count(), g.edges())
}

/// Run every identity on `g`. Root-dependent identities use v0 = 1 unless
/// `all_sinks` asks for every root.
pub fn verify_graph(g: &Multigraph, all_sinks: bool) -> Vec<IdentityReport> {
    let roots: Vec<Vertex> = if all_sinks {
        (1..=g.vertex_count()).collect()
    } else {
        vec![1]
    };
    let chi = chromatic_delcon(g);
    vec![
        acyclic_count(g, &chi),
        unique_sink_count(g, &chi, &roots),
        chromatic_routes(g, &chi),
        root_count_via_full_block(g, &roots),
        sink_distribution_via_lengths(g),
        tree_bijection(g, &chi, &roots),
    ]
}

/// The number of acyclic orientations equals |chi(-1)|.
fn acyclic_count(g: &Multigraph, chi: &IntPolynomial) -> IdentityReport {
    const NAME: &str = "acyclic-count";
    let count = BigInt::from(all_acyclic(g).len());
    let expect = chi.eval_i64(-1).abs();
    if count == expect {
        IdentityReport::pass(NAME)
    } else {
        IdentityReport::fail(
            NAME,
            format!(
                "{}: {count} acyclic orientations vs |chi(-1)| = {expect}",
                tag(g)
            ),
        )
    }
}

/// The number of acyclic orientations with unique sink v0 equals |a_1| for
/// every root checked.
fn unique_sink_count(g: &Multigraph, chi: &IntPolynomial, roots: &[Vertex]) -> IdentityReport {
    const NAME: &str = "unique-sink-count";
    let a1 = chi.coefficient(1).expect("degree >= 1").abs();
    for &v0 in roots {
        let count = BigInt::from(unique_sink(g, v0).expect("root is a vertex").len());
        if count != a1 {
            return IdentityReport::fail(
                NAME,
                format!("{}: v0={v0}: {count} orientations vs |a_1| = {a1}", tag(g)),
            );
        }
    }
    IdentityReport::pass(NAME)
}

/// The broken-circuit expansion and deletion-contraction agree as
/// polynomials, and both count proper colorings for n = 0…d.
fn chromatic_routes(g: &Multigraph, chi: &IntPolynomial) -> IdentityReport {
    const NAME: &str = "chromatic-routes";
    match chromatic_whitney(g) {
        Ok(whitney) if &whitney != chi => {
            return IdentityReport::fail(
                NAME,
                format!("{}: expansion [{whitney}] vs recursion [{chi}]", tag(g)),
            );
        }
        _ => {} // a loop: the expansion is undefined, the recursion gives 0
    }
    for n in 0..=g.vertex_count() as u64 {
        let direct = chromatic_bruteforce(g, n);
        let via_chi = chi.eval_i64(n as i64);
        if direct != via_chi {
            return IdentityReport::fail(
                NAME,
                format!(
                    "{}: n={n}: {direct} colorings vs chi(n) = {via_chi}",
                    tag(g)
                ),
            );
        }
    }
    IdentityReport::pass(NAME)
}

/// (d-1)! times the full-block coefficient of Y_G in the e basis equals the
/// unique-sink count at every root checked.
fn root_count_via_full_block(g: &Multigraph, roots: &[Vertex]) -> IdentityReport {
    const NAME: &str = "root-count-via-full-block";
    let via_c = unique_sink_count_via_c(g);
    for &v0 in roots {
        let count = BigInt::from(unique_sink(g, v0).expect("root is a vertex").len());
        if count != via_c {
            return IdentityReport::fail(
                NAME,
                format!(
                    "{}: v0={v0}: {count} orientations vs (d-1)! * c_full = {via_c}",
                    tag(g)
                ),
            );
        }
    }
    IdentityReport::pass(NAME)
}

/// Summing the commutativized e-coefficients of Y_G over compositions of each
/// length j recovers the number of acyclic orientations with j sinks.
fn sink_distribution_via_lengths(g: &Multigraph) -> IdentityReport {
    const NAME: &str = "sink-distribution-via-lengths";
    let csym = match to_e_basis(&y_delcon(g)).and_then(|e| commutativize(&e)) {
        Ok(c) => c,
        Err(err) => return IdentityReport::fail(NAME, format!("{}: {err}", tag(g))),
    };
    let sums = csym.length_sums();
    let observed = sink_distribution(g);
    for j in 1..=g.vertex_count() {
        let from_c = sums
            .get(&j)
            .cloned()
            .unwrap_or_else(|| BigRational::from_integer(0.into()));
        let counted = BigRational::from_integer(observed.get(&j).copied().unwrap_or(0).into());
        if from_c != counted {
            return IdentityReport::fail(
                NAME,
                format!(
                    "{}: {counted} orientations with {j} sinks vs coefficient sum {from_c}",
                    tag(g)
                ),
            );
        }
    }
    IdentityReport::pass(NAME)
}

/// The staged bijection is injective, lands in the no-broken-circuit spanning
/// trees, covers |a_1| of them, and its inverse recovers every input.
fn tree_bijection(g: &Multigraph, chi: &IntPolynomial, roots: &[Vertex]) -> IdentityReport {
    const NAME: &str = "tree-bijection";
    let normal = Orientation::all_forward(g.edge_count());
    let trees: BTreeSet<Vec<usize>> = match nbc_trees(g) {
        Ok(t) => t.into_iter().map(|s| s.ids().to_vec()).collect(),
        Err(_) => {
            // Disconnected or loopy: the domain must be empty for the
            // identity to hold vacuously.
            for &v0 in roots {
                let n = unique_sink(g, v0).expect("root is a vertex").len();
                if n != 0 {
                    return IdentityReport::fail(
                        NAME,
                        format!(
                            "{}: no spanning trees, yet v0={v0} has {n} orientations",
                            tag(g)
                        ),
                    );
                }
            }
            return IdentityReport::pass(NAME);
        }
    };
    let a1 = chi.coefficient(1).expect("degree >= 1").abs();
    for &v0 in roots {
        let mut image = BTreeSet::new();
        for d in unique_sink(g, v0).expect("root is a vertex") {
            let (s, _) = match forward(g, v0, &normal, &d) {
                Ok(out) => out,
                Err(err) => {
                    return IdentityReport::fail(
                        NAME,
                        format!("{}: v0={v0} D={d}: forward failed: {err}", tag(g)),
                    )
                }
            };
            if !trees.contains(s.ids()) {
                return IdentityReport::fail(
                    NAME,
                    format!(
                        "{}: v0={v0} D={d}: image {s} is not a surviving tree",
                        tag(g)
                    ),
                );
            }
            match inverse(g, v0, &normal, &s) {
                Ok(back) if back == d => {}
                Ok(back) => {
                    return IdentityReport::fail(
                        NAME,
                        format!("{}: v0={v0} D={d}: inverse returned {back}", tag(g)),
                    )
                }
                Err(err) => {
                    return IdentityReport::fail(
                        NAME,
                        format!("{}: v0={v0} S={s}: inverse failed: {err}", tag(g)),
                    )
                }
            }
            image.insert(s.ids().to_vec());
        }
        if BigInt::from(image.len()) != a1 {
            return IdentityReport::fail(
                NAME,
                format!(
                    "{}: v0={v0}: image has {} trees vs |a_1| = {a1}",
                    tag(g),
                    image.len()
                ),
            );
        }
    }
    IdentityReport::pass(NAME)
}
