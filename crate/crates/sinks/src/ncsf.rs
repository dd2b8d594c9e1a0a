//! Noncommutative symmetric functions of bounded degree in the monomial (m)
//! and elementary (e) bases indexed by set partitions, the degree-raising
//! induction operator ↑, the relabeling action, the chromatic invariant Y_G
//! by deletion-contraction and by a stable-partition oracle, and the bridges
//! to sink counting: the leading e-coefficient, commutativization, and the
//! 1^n specialization.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::graph::Multigraph;
use crate::partitions::{mobius, partitions_of, Lattice, SetPartition};
use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Basis {
    M,
    E,
}

impl Basis {
    fn letter(self) -> &'static str {
        match self {
            Basis::M => "m",
            Basis::E => "e",
        }
    }
}

/// A degree-d noncommutative symmetric function as exact rational
/// coefficients over set partitions of [d], in a tagged basis. Zero
/// coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NcSym {
    degree: usize,
    basis: Basis,
    coeffs: BTreeMap<SetPartition, BigRational>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl NcSym {
    pub fn zero(degree: usize, basis: Basis) -> Self {
        NcSym {
            degree,
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn single(degree: usize, basis: Basis, p: SetPartition, c: BigRational) -> Result<Self> {
        let mut f = NcSym::zero(degree, basis);
        f.add_term(p, c)?;
        Ok(f)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SetPartition, &BigRational)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, p: &SetPartition) -> BigRational {
        self.coeffs
            .get(p)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, p: SetPartition, c: BigRational) -> Result<()> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch(p.degree(), self.degree));
        }
        let entry = self.coeffs.entry(p).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            let key = self
                .coeffs
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .unwrap();
            self.coeffs.remove(&key);
        }
        Ok(())
    }

    fn check_compatible(&self, other: &NcSym) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        if self.basis != other.basis {
            return Err(Error::BasisMismatch(
                self.basis.letter(),
                other.basis.letter(),
            ));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &NcSym) -> Result<NcSym> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (p, c) in &other.coeffs {
            out.add_term(p.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &NcSym) -> Result<NcSym> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (p, c) in &other.coeffs {
            out.add_term(p.clone(), -c.clone())?;
        }
        Ok(out)
    }
}

impl fmt::Display for NcSym {
    /// Signed terms sorted by partition: `+(1)·m_{13/2} +(1)·m_{1/2/3}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            let sign = if c.is_negative() { '-' } else { '+' };
            write!(f, "{sign}({})·{}_{{{p}}}", c.abs(), self.basis.letter())?;
        }
        Ok(())
    }
}

/// A commutative symmetric function of degree d in the elementary basis,
/// indexed by integer partitions λ ⊢ d (weakly decreasing key vectors).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CSym {
    degree: usize,
    coeffs: BTreeMap<Vec<usize>, BigRational>,
}

impl CSym {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &BigRational)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, shape: &[usize]) -> BigRational {
        self.coeffs
            .get(shape)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Σ_{l(λ)=j} c_λ for each part count j that occurs.
    pub fn length_sums(&self) -> BTreeMap<usize, BigRational> {
        let mut out: BTreeMap<usize, BigRational> = BTreeMap::new();
        for (shape, c) in &self.coeffs {
            let entry = out.entry(shape.len()).or_insert_with(BigRational::zero);
            *entry += c;
        }
        out.retain(|_, v| !v.is_zero());
        out
    }
}

impl fmt::Display for CSym {
    /// `+(3)·e_{3} +(1)·e_{2,1}` with shapes sorted lexicographically.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (shape, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            let sign = if c.is_negative() { '-' } else { '+' };
            let parts: Vec<String> = shape.iter().map(usize::to_string).collect();
            write!(f, "{sign}({})·e_{{{}}}", c.abs(), parts.join(","))?;
        }
        Ok(())
    }
}

/// e_π expanded in the m basis: Σ m_σ over σ with σ ∧ π = 0̂.
pub fn e_in_m(p: &SetPartition) -> NcSym {
    let d = p.degree();
    let bottom = SetPartition::singletons(d);
    let mut out = NcSym::zero(d, Basis::M);
    for sigma in partitions_of(d) {
        if sigma.meet(p).unwrap() == bottom {
            out.add_term(sigma, BigRational::one()).unwrap();
        }
    }
    out
}

/// Expand an e-basis element into the m basis term by term.
pub fn e_to_m(f: &NcSym) -> Result<NcSym> {
    if f.basis != Basis::E {
        return Err(Error::BasisMismatch("e", f.basis.letter()));
    }
    let mut out = NcSym::zero(f.degree, Basis::M);
    for (p, c) in &f.coeffs {
        for (sigma, unit) in e_in_m(p).coeffs {
            out.add_term(sigma, c.clone() * unit)?;
        }
    }
    Ok(out)
}

/// Change of basis m → e. Writing f = Σ_σ f_σ m_σ and using
/// [σ ∧ π = 0̂] = Σ_{τ ≤ σ∧π} μ(0̂,τ), the e-coefficients come out of two
/// Möbius inversions over Π_d:
///
///   c_π = Σ_{τ ≥ π} μ(π,τ) · g(τ) / μ(0̂,τ),  g(τ) = Σ_{σ ≤ τ} μ(σ,τ) f_σ.
pub fn to_e_basis(f: &NcSym) -> Result<NcSym> {
    if f.basis != Basis::M {
        return Err(Error::BasisMismatch("m", f.basis.letter()));
    }
    let d = f.degree;
    let lat = Lattice::for_degree(d);
    let n = lat.partitions().len();

    let mut fv = vec![BigRational::zero(); n];
    for (p, c) in &f.coeffs {
        fv[lat.index_of(p)] = c.clone();
    }

    let mut g = vec![BigRational::zero(); n];
    for (sigma, f_sigma) in fv.iter().enumerate() {
        if f_sigma.is_zero() {
            continue;
        }
        let row = lat.mu_row(sigma);
        for tau in sigma..n {
            if lat.leq_idx(sigma, tau) && row[tau] != 0 {
                g[tau] += f_sigma * rat(row[tau]);
            }
        }
    }

    let bottom = lat.index_of(&SetPartition::singletons(d));
    let mu_bottom = lat.mu_row(bottom);
    let mut out = NcSym::zero(d, Basis::E);
    for (pi, p) in lat.partitions().iter().enumerate() {
        let row = lat.mu_row(pi);
        let mut c = BigRational::zero();
        for tau in pi..n {
            if lat.leq_idx(pi, tau) && row[tau] != 0 && !g[tau].is_zero() {
                c += &g[tau] * rat(row[tau]) / rat(mu_bottom[tau]);
            }
        }
        if !c.is_zero() {
            out.add_term(p.clone(), c)?;
        }
    }
    Ok(out)
}

/// The induction operator on the m basis: m_π ↦ m_{π+(d+1)}, linearly.
pub fn induct_m(f: &NcSym) -> Result<NcSym> {
    if f.basis != Basis::M {
        return Err(Error::BasisMismatch("m", f.basis.letter()));
    }
    let mut out = NcSym::zero(f.degree + 1, Basis::M);
    for (p, c) in &f.coeffs {
        out.add_term(p.insert_with_last(), c.clone())?;
    }
    Ok(out)
}

/// The induction operator on one e-basis element, computed entirely inside
/// the e basis:
///
///   e_π↑ = Σ_{σ≤π} [μ(0̂,σ)/μ(0̂,σ+(d))] Σ_{τ≤σ+(d)} μ(τ, σ+(d)) e_τ
///
/// for π a partition of [d−1]. Agrees with expanding to m, inducting, and
/// converting back.
pub fn induct_e(p: &SetPartition) -> Result<NcSym> {
    let small = p.degree();
    let bottom_small = SetPartition::singletons(small);
    let big_lat = Lattice::for_degree(small + 1);
    let mut out = NcSym::zero(small + 1, Basis::E);
    for sigma in partitions_of(small) {
        if !sigma.leq(p)? {
            continue;
        }
        let sigma_plus = sigma.insert_with_last();
        let mu_small = mobius(&bottom_small, &sigma)?;
        let mu_big = mobius(&SetPartition::singletons(small + 1), &sigma_plus)?;
        let outer = rat(mu_small) / rat(mu_big);
        let sp_idx = big_lat.index_of(&sigma_plus);
        for (ti, tau) in big_lat.partitions().iter().enumerate() {
            if !big_lat.leq_idx(ti, sp_idx) {
                continue;
            }
            let mu_t = big_lat.mu_row(ti)[sp_idx];
            if mu_t != 0 {
                out.add_term(tau.clone(), &outer * rat(mu_t))?;
            }
        }
    }
    Ok(out)
}

/// The relabeling action δ∘f: every index partition π becomes δ(π). Works in
/// either basis.
pub fn relabel(f: &NcSym, delta: &[usize]) -> Result<NcSym> {
    let mut out = NcSym::zero(f.degree, f.basis);
    for (p, c) in &f.coeffs {
        out.add_term(p.relabel(delta)?, c.clone())?;
    }
    Ok(out)
}

/// Y_G read off from its definition: m_π appears (with coefficient 1) exactly
/// when every block of π is independent in G. A loop kills everything.
pub fn y_stable_oracle(g: &Multigraph) -> NcSym {
    let d = g.vertex_count();
    if g.has_loops() {
        return NcSym::zero(d, Basis::M);
    }
    let mut out = NcSym::zero(d, Basis::M);
    'parts: for p in partitions_of(d) {
        for e in 1..=g.edge_count() {
            let (u, v) = g.endpoints(e);
            if p.block_of(u) == p.block_of(v) {
                continue 'parts;
            }
        }
        out.add_term(p, BigRational::one()).unwrap();
    }
    out
}

/// Y_G by the deletion-contraction rule Y_G = Y_{G\e} − Y_{G/e}↑, which
/// requires the pivot to be the edge v_{d−1} v_d with the contraction
/// keeping label v_{d−1}. The pivot here is the highest-numbered edge; the
/// graph is relabeled so that pivot's endpoints become v_{d−1} and v_d,
/// recursed on, and relabeled back. Base cases: any loop gives 0, an
/// edgeless graph gives Σ_π m_π.
pub fn y_delcon(g: &Multigraph) -> NcSym {
    let d = g.vertex_count();
    if g.has_loops() {
        return NcSym::zero(d, Basis::M);
    }
    if g.edge_count() == 0 {
        let mut out = NcSym::zero(d, Basis::M);
        for p in partitions_of(d) {
            out.add_term(p, BigRational::one()).unwrap();
        }
        return out;
    }
    let e = g.edge_count();
    let (u, v) = g.endpoints(e);
    let (lo, hi) = (u.min(v), u.max(v));
    // δ sends lo ↦ d−1 and hi ↦ d, packing the others in increasing order.
    let mut delta = vec![0usize; d];
    let mut next = 1;
    for w in 1..=d {
        delta[w - 1] = match w {
            _ if w == lo => d - 1,
            _ if w == hi => d,
            _ => {
                let lbl = next;
                next += 1;
                lbl
            }
        };
    }
    let relabeled = g.relabel_vertices(&delta).unwrap();
    let deleted = y_delcon(&relabeled.delete_edge(e).unwrap());
    let contracted = y_delcon(&relabeled.contract_edge(e).unwrap());
    let combined = deleted
        .checked_sub(&induct_m(&contracted).unwrap())
        .unwrap();
    // Undo δ on the result.
    let mut inverse = vec![0usize; d];
    for (i, &img) in delta.iter().enumerate() {
        inverse[img - 1] = i + 1;
    }
    relabel(&combined, &inverse).unwrap()
}

/// (d−1)! · c_{[d]}, the unique-sink orientation count carried by the
/// leading e-coefficient of Y_G. The product is checked to be a nonnegative
/// integer.
pub fn unique_sink_count_via_c(g: &Multigraph) -> BigInt {
    let d = g.vertex_count();
    let c = to_e_basis(&y_delcon(g))
        .unwrap()
        .coeff(&SetPartition::full(d));
    let factorial: BigInt = (1..d as i64).map(BigInt::from).product();
    let count = c * BigRational::from_integer(factorial);
    assert!(
        count.is_integer() && !count.is_negative(),
        "(d-1)! times the leading e-coefficient is a nonnegative integer, got {count}"
    );
    count.to_integer()
}

/// Let the variables commute: e_π collapses to (Π_i |B_i|!) · e_{λ(π)}, so
/// c_λ = (Π_i λ_i!) · Σ_{π: λ(π)=λ} c_π.
pub fn commutativize(f: &NcSym) -> Result<CSym> {
    if f.basis != Basis::E {
        return Err(Error::BasisMismatch("e", f.basis.letter()));
    }
    let mut coeffs: BTreeMap<Vec<usize>, BigRational> = BTreeMap::new();
    for (p, c) in &f.coeffs {
        let shape = p.shape();
        let factor: BigInt = shape
            .iter()
            .map(|&s| (1..=s as i64).map(BigInt::from).product::<BigInt>())
            .product();
        let entry = coeffs.entry(shape).or_insert_with(BigRational::zero);
        *entry += c * BigRational::from_integer(factor);
    }
    coeffs.retain(|_, v| !v.is_zero());
    Ok(CSym {
        degree: f.degree,
        coeffs,
    })
}

fn falling(n: u64, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k as u64 {
        if i >= n {
            return BigInt::zero();
        }
        acc *= BigInt::from(n - i);
    }
    acc
}

/// Evaluate at x_1 = … = x_n = 1, x_{n+1} = … = 0. In the m basis a
/// partition with k blocks contributes n(n−1)…(n−k+1); in the e basis each
/// block contributes its own falling factorial.
pub fn specialize_ones(f: &NcSym, n: u64) -> BigRational {
    let mut total = BigRational::zero();
    for (p, c) in &f.coeffs {
        let weight = match f.basis {
            Basis::M => falling(n, p.num_blocks()),
            Basis::E => p.blocks().iter().map(|b| falling(n, b.len())).product(),
        };
        total += c * BigRational::from_integer(weight);
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chromatic::chromatic_delcon;
    use crate::orientations::sink_distribution;

    fn graph(d: usize, edges: &[(usize, usize)]) -> Multigraph {
        Multigraph::new(d, edges.to_vec()).unwrap()
    }

    fn blocks(d: usize, spec: &[&[usize]]) -> SetPartition {
        let blocks: Vec<Vec<usize>> = spec.iter().map(|b| b.to_vec()).collect();
        SetPartition::from_blocks(d, &blocks).unwrap()
    }

    #[test]
    fn elementary_expansion_of_a_worked_partition() {
        let p = blocks(4, &[&[1, 2, 4], &[3]]);
        let e = e_in_m(&p);
        assert_eq!(
            e.to_string(),
            "+(1)·m_{13/2/4} +(1)·m_{1/23/4} +(1)·m_{1/2/34} +(1)·m_{1/2/3/4}"
        );
    }

    #[test]
    fn elementary_expansion_extremes() {
        // Meeting 0̂ is automatic against the singleton partition.
        let bottom = SetPartition::singletons(3);
        assert_eq!(e_in_m(&bottom).terms().count(), 5);
        // Only 1/2 meets 12 trivially.
        let e2 = e_in_m(&SetPartition::full(2));
        assert_eq!(e2.to_string(), "+(1)·m_{1/2}");
    }

    #[test]
    fn basis_round_trip_is_the_identity() {
        for p in partitions_of(4) {
            let back = to_e_basis(&e_in_m(&p)).unwrap();
            let expect = NcSym::single(4, Basis::E, p.clone(), BigRational::one()).unwrap();
            assert_eq!(back, expect, "round trip through {p}");
        }
    }

    #[test]
    fn expansion_then_collection_round_trips() {
        // A made-up rational combination survives m → e → m.
        let mut f = NcSym::zero(4, Basis::M);
        for (i, p) in partitions_of(4).into_iter().enumerate() {
            f.add_term(
                p,
                BigRational::new(BigInt::from(i as i64 + 1), BigInt::from(3)),
            )
            .unwrap();
        }
        let again = e_to_m(&to_e_basis(&f).unwrap()).unwrap();
        assert_eq!(again, f);
    }

    #[test]
    fn induction_on_monomials() {
        let f = NcSym::single(2, Basis::M, blocks(2, &[&[1], &[2]]), BigRational::one()).unwrap();
        assert_eq!(induct_m(&f).unwrap().to_string(), "+(1)·m_{1/23}");
        let g = NcSym::single(2, Basis::M, SetPartition::full(2), BigRational::one()).unwrap();
        assert_eq!(induct_m(&g).unwrap().to_string(), "+(1)·m_{123}");
        let sum = f.checked_add(&g).unwrap();
        assert_eq!(
            induct_m(&sum).unwrap(),
            induct_m(&f)
                .unwrap()
                .checked_add(&induct_m(&g).unwrap())
                .unwrap()
        );
    }

    #[test]
    fn induction_in_the_e_basis_matches_the_m_route() {
        for d in 2..=4usize {
            for p in partitions_of(d - 1) {
                let direct = induct_e(&p).unwrap();
                let via_m = to_e_basis(&induct_m(&e_in_m(&p)).unwrap()).unwrap();
                assert_eq!(direct, via_m, "π = {p} at degree {d}");
            }
        }
    }

    #[test]
    fn leading_coefficient_of_induced_top_element() {
        for d in 3..=5usize {
            let top_small = SetPartition::full(d - 1);
            let lifted = induct_e(&top_small).unwrap();
            let c = lifted.coeff(&SetPartition::full(d));
            assert_eq!(c, -rat(1) / rat(d as i64 - 1), "degree {d}");
        }
    }

    #[test]
    fn y_of_path_three_matches_displayed_value() {
        let y = y_delcon(&Multigraph::path(3));
        assert_eq!(y.to_string(), "+(1)·m_{13/2} +(1)·m_{1/2/3}");
    }

    #[test]
    fn y_of_edge_plus_isolated_vertex() {
        let y = y_delcon(&graph(3, &[(1, 2)]));
        assert_eq!(y.to_string(), "+(1)·m_{13/2} +(1)·m_{1/23} +(1)·m_{1/2/3}");
    }

    #[test]
    fn y_of_a_loop_graph_is_zero() {
        assert!(y_delcon(&graph(2, &[(1, 2), (2, 2)])).is_zero());
        assert!(y_stable_oracle(&graph(1, &[(1, 1)])).is_zero());
    }

    #[test]
    fn y_routes_agree_on_small_graphs() {
        for g in [
            Multigraph::path(3),
            Multigraph::complete(3),
            Multigraph::complete(4),
            Multigraph::cycle(4),
            graph(3, &[(1, 2)]),
            graph(2, &[(1, 2), (1, 2)]),
            graph(4, &[(1, 2), (1, 2), (2, 3), (3, 4), (1, 4)]),
        ] {
            assert_eq!(y_delcon(&g), y_stable_oracle(&g), "{g:?}");
        }
    }

    #[test]
    fn stable_partitions_of_small_graphs() {
        let y = y_stable_oracle(&Multigraph::complete(3));
        assert_eq!(y.to_string(), "+(1)·m_{1/2/3}");
        let edgeless = y_stable_oracle(&graph(2, &[]));
        assert_eq!(edgeless.to_string(), "+(1)·m_{12} +(1)·m_{1/2}");
    }

    #[test]
    fn leading_e_coefficient_counts_unique_sink_orientations() {
        assert_eq!(unique_sink_count_via_c(&Multigraph::complete(1)), 1.into());
        assert_eq!(unique_sink_count_via_c(&Multigraph::path(3)), 1.into());
        assert_eq!(unique_sink_count_via_c(&Multigraph::complete(3)), 2.into());
        // Y_{P3} really does carry c_{123} = 1/2.
        let c = to_e_basis(&y_delcon(&Multigraph::path(3)))
            .unwrap()
            .coeff(&SetPartition::full(3));
        assert_eq!(c, BigRational::new(1.into(), 2.into()));
    }

    #[test]
    fn commutativization_matches_sink_counts() {
        // Sums of c_λ over shapes of length j count acyclic orientations
        // with j sinks.
        for g in [
            Multigraph::complete(2),
            Multigraph::path(3),
            Multigraph::complete(4),
            Multigraph::cycle(4),
        ] {
            let x = commutativize(&to_e_basis(&y_delcon(&g)).unwrap()).unwrap();
            let by_len = x.length_sums();
            let dist = sink_distribution(&g);
            assert_eq!(by_len.len(), dist.len(), "{g:?}");
            for (j, count) in dist {
                assert_eq!(by_len[&j], rat(count as i64), "{g:?} at j={j}");
            }
        }
    }

    #[test]
    fn commutativization_of_path_three() {
        let x = commutativize(&to_e_basis(&y_delcon(&Multigraph::path(3))).unwrap()).unwrap();
        assert_eq!(x.coeff(&[3]), rat(3));
        assert_eq!(x.coeff(&[2, 1]), rat(1));
        assert_eq!(x.coeff(&[1, 1, 1]), rat(0));
        assert_eq!(x.to_string(), "+(1)·e_{2,1} +(3)·e_{3}");
    }

    #[test]
    fn specialization_recovers_the_chromatic_polynomial() {
        for g in [
            Multigraph::path(3),
            Multigraph::complete(4),
            graph(3, &[(1, 2), (1, 2), (2, 3)]),
        ] {
            let y = y_delcon(&g);
            let e = to_e_basis(&y).unwrap();
            let chi = chromatic_delcon(&g);
            for n in 0..=(g.vertex_count() as u64 + 1) {
                let expect = BigRational::from_integer(chi.eval_i64(n as i64));
                assert_eq!(specialize_ones(&y, n), expect, "m route, {g:?} n={n}");
                assert_eq!(specialize_ones(&e, n), expect, "e route, {g:?} n={n}");
            }
        }
    }

    #[test]
    fn specialization_base_cases() {
        let e2 = NcSym::single(2, Basis::E, SetPartition::full(2), BigRational::one()).unwrap();
        assert_eq!(specialize_ones(&e2, 1), rat(0));
        let m3 =
            NcSym::single(3, Basis::M, SetPartition::singletons(3), BigRational::one()).unwrap();
        assert_eq!(specialize_ones(&m3, 2), rat(0));
        assert_eq!(specialize_ones(&m3, 3), rat(6));
    }

    #[test]
    fn relabeling_commutes_with_y() {
        let g = graph(3, &[(1, 2)]);
        let delta = [2, 3, 1];
        let lhs = relabel(&y_delcon(&g), &delta).unwrap();
        let rhs = y_delcon(&g.relabel_vertices(&delta).unwrap());
        assert_eq!(lhs, rhs);
        // Identity and inverse behave.
        let y = y_delcon(&g);
        assert_eq!(relabel(&y, &[1, 2, 3]).unwrap(), y);
        let back = relabel(&relabel(&y, &delta).unwrap(), &[3, 1, 2]).unwrap();
        assert_eq!(back, y);
    }

    #[test]
    fn mismatched_operands_are_rejected() {
        let f = NcSym::zero(3, Basis::M);
        let g = NcSym::zero(4, Basis::M);
        assert!(f.checked_add(&g).is_err());
        let h = NcSym::zero(3, Basis::E);
        assert!(f.checked_add(&h).is_err());
        assert!(to_e_basis(&h).is_err());
        assert!(e_to_m(&f).is_err());
        assert!(commutativize(&f).is_err());
    }
}
