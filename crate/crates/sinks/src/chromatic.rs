//! The chromatic polynomial by three independent routes: brute-force proper
//! coloring counts, deletion-contraction, and the broken-circuit (Whitney)
//! expansion. All arithmetic is exact.

use std::fmt;

use num::{BigInt, Signed, Zero};

use crate::graph::Multigraph;
use crate::nbc;
use crate::{Error, Result};

/// Dense integer polynomial in n; index i holds the coefficient of n^i.
/// For a graph on d vertices the length is d+1, and a graph with a loop gets
/// the zero polynomial (all d+1 coefficients zero).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero(degree: usize) -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::zero(); degree + 1],
        }
    }

    /// The monomial n^degree.
    pub fn monomial(degree: usize) -> Self {
        let mut p = Self::zero(degree);
        p.coeffs[degree] = BigInt::from(1);
        p
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        IntPolynomial { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// a_i, failing when i exceeds the stored degree.
    pub fn coefficient(&self, i: usize) -> Result<&BigInt> {
        self.coeffs.get(i).ok_or_else(|| {
            Error::Parse(format!(
                "coefficient index {i} exceeds degree {}",
                self.degree()
            ))
        })
    }

    pub fn eval(&self, n: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * n + c;
        }
        acc
    }

    pub fn eval_i64(&self, n: i64) -> BigInt {
        self.eval(&BigInt::from(n))
    }

    fn sub_assign(&mut self, other: &IntPolynomial) {
        assert!(other.coeffs.len() <= self.coeffs.len());
        for (i, c) in other.coeffs.iter().enumerate() {
            self.coeffs[i] -= c;
        }
    }
}

impl fmt::Display for IntPolynomial {
    /// Coefficients low to high, space-separated: `0 1 -2 1` for n³−2n²+n.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Number of proper colorings of G with colors {1…n}, counted directly by
/// backtracking over vertex assignments.
pub fn chromatic_bruteforce(g: &Multigraph, n: u64) -> BigInt {
    if g.has_loops() {
        return BigInt::zero();
    }
    let d = g.vertex_count();
    // Constraints between already-colored vertices only; one application per
    // edge, so parallels cost nothing extra.
    let mut colors = vec![0u64; d + 1];
    fn assign(v: usize, d: usize, n: u64, g: &Multigraph, colors: &mut Vec<u64>) -> BigInt {
        if v > d {
            return BigInt::from(1);
        }
        let mut total = BigInt::zero();
        'next: for c in 1..=n {
            for e in 1..=g.edge_count() {
                let (a, b) = g.endpoints(e);
                let w = if a == v && b < v {
                    b
                } else if b == v && a < v {
                    a
                } else {
                    continue;
                };
                if colors[w] == c {
                    continue 'next;
                }
            }
            colors[v] = c;
            total += assign(v + 1, d, n, g, colors);
            colors[v] = 0;
        }
        total
    }
    assign(1, d, n, g, &mut colors)
}

/// The chromatic polynomial via χ_G = χ_{G\e} − χ_{G/e}, pivoting on the
/// first edge. Base cases: an edgeless graph gives n^d, a loop gives zero.
pub fn chromatic_delcon(g: &Multigraph) -> IntPolynomial {
    if g.has_loops() {
        return IntPolynomial::zero(g.vertex_count());
    }
    if g.edge_count() == 0 {
        return IntPolynomial::monomial(g.vertex_count());
    }
    let e = 1;
    let mut p = chromatic_delcon(&g.delete_edge(e).unwrap());
    let contracted = chromatic_delcon(&g.contract_edge(e).unwrap());
    p.sub_assign(&contracted);
    p
}

/// The chromatic polynomial as Σ_{S ∈ B_G} (−1)^{|S|} n^{d−|S|}. Defined for
/// loop-free graphs only.
pub fn chromatic_whitney(g: &Multigraph) -> Result<IntPolynomial> {
    if g.has_loops() {
        return Err(Error::HasLoop);
    }
    let d = g.vertex_count();
    let mut p = IntPolynomial::zero(d);
    for s in nbc::nbc_sets(g, None) {
        let i = d - s.len();
        if s.len() % 2 == 0 {
            p.coeffs[i] += 1;
        } else {
            p.coeffs[i] -= 1;
        }
    }
    Ok(p)
}

/// Test helper shape of the polynomial for loop-free graphs: monic with
/// coefficients alternating in sign, i.e. (−1)^{d−i} a_i ≥ 0.
pub fn alternates_in_sign(p: &IntPolynomial) -> bool {
    let d = p.degree();
    p.coeffs.iter().enumerate().all(|(i, c)| {
        if (d - i).is_multiple_of(2) {
            !c.is_negative()
        } else {
            !c.is_positive()
        }
    })
}
