//! Set partitions of [d] in restricted-growth form, the refinement lattice
//! Π_d with 0̂ = all-singletons at the bottom and [d] = one block at the top,
//! and its Möbius function.
//!
//! Per-degree lattice tables (a refinement-compatible linear order, order
//! bitsets, lazily computed Möbius rows) are cached globally and shared
//! read-only.

use std::cmp::Reverse;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::{Error, Result};

/// A set partition of [d], stored as a restricted-growth string: entry i−1 is
/// the block index of element i, blocks numbered 0, 1, … by first appearance.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SetPartition {
    rgs: Vec<usize>,
}

impl SetPartition {
    pub fn from_rgs(rgs: Vec<usize>) -> Result<Self> {
        if rgs.is_empty() {
            return Err(Error::Partition("degree must be at least 1".into()));
        }
        let mut max_seen = 0;
        for (i, &b) in rgs.iter().enumerate() {
            let limit = if i == 0 { 0 } else { max_seen + 1 };
            if b > limit {
                return Err(Error::Partition(format!(
                    "entry {b} at position {i} breaks restricted growth"
                )));
            }
            max_seen = max_seen.max(b);
        }
        Ok(SetPartition { rgs })
    }

    /// Canonicalize an arbitrary block assignment into restricted growth.
    fn from_labels<T: Eq + std::hash::Hash>(labels: Vec<T>) -> Self {
        let mut seen: HashMap<T, usize> = HashMap::new();
        let mut rgs = Vec::with_capacity(labels.len());
        for l in labels {
            let next = seen.len();
            rgs.push(*seen.entry(l).or_insert(next));
        }
        SetPartition { rgs }
    }

    pub fn from_blocks(d: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut labels = vec![usize::MAX; d];
        for (bi, block) in blocks.iter().enumerate() {
            for &el in block {
                if el == 0 || el > d {
                    return Err(Error::Partition(format!("element {el} outside 1..={d}")));
                }
                if labels[el - 1] != usize::MAX {
                    return Err(Error::Partition(format!("element {el} appears twice")));
                }
                labels[el - 1] = bi;
            }
        }
        if labels.contains(&usize::MAX) {
            return Err(Error::Partition("blocks do not cover [d]".into()));
        }
        Ok(Self::from_labels(labels))
    }

    /// 0̂: every element in its own block (the bottom of Π_d).
    pub fn singletons(d: usize) -> Self {
        SetPartition {
            rgs: (0..d).collect(),
        }
    }

    /// [d]: one block (the top of Π_d).
    pub fn full(d: usize) -> Self {
        SetPartition { rgs: vec![0; d] }
    }

    pub fn degree(&self) -> usize {
        self.rgs.len()
    }

    pub fn rgs(&self) -> &[usize] {
        &self.rgs
    }

    pub fn num_blocks(&self) -> usize {
        self.rgs.iter().max().unwrap() + 1
    }

    /// Block index (0-based) of element i (1-based).
    pub fn block_of(&self, i: usize) -> usize {
        self.rgs[i - 1]
    }

    /// Blocks in index order (equivalently: sorted by minimum element), each
    /// ascending.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.num_blocks()];
        for (i, &b) in self.rgs.iter().enumerate() {
            blocks[b].push(i + 1);
        }
        blocks
    }

    /// Block sizes, largest first: the integer partition λ(π).
    pub fn shape(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.blocks().iter().map(Vec::len).collect();
        sizes.sort_unstable_by_key(|&s| Reverse(s));
        sizes
    }

    fn check_same_degree(&self, other: &SetPartition) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(())
    }

    /// Refinement order: true iff every block of self lies inside a block of
    /// other.
    pub fn leq(&self, other: &SetPartition) -> Result<bool> {
        self.check_same_degree(other)?;
        // self ≤ other iff the self-block of an element determines its
        // other-block.
        let mut image = vec![usize::MAX; self.num_blocks()];
        for i in 0..self.rgs.len() {
            let (sb, ob) = (self.rgs[i], other.rgs[i]);
            if image[sb] == usize::MAX {
                image[sb] = ob;
            } else if image[sb] != ob {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Greatest lower bound in Π_d: the common refinement.
    pub fn meet(&self, other: &SetPartition) -> Result<SetPartition> {
        self.check_same_degree(other)?;
        let labels: Vec<(usize, usize)> = self
            .rgs
            .iter()
            .zip(&other.rgs)
            .map(|(&a, &b)| (a, b))
            .collect();
        Ok(SetPartition::from_labels(labels))
    }

    /// π + (d+1) for π a partition of [d]: adjoin a new largest element to
    /// the block containing the current largest.
    pub fn insert_with_last(&self) -> SetPartition {
        let mut rgs = self.rgs.clone();
        rgs.push(*rgs.last().unwrap());
        SetPartition { rgs }
    }

    /// δ(π): replace every element i by δ(i). `delta[i-1]` is δ(i), a
    /// permutation of 1..=d.
    pub fn relabel(&self, delta: &[usize]) -> Result<SetPartition> {
        let d = self.degree();
        if delta.len() != d {
            return Err(Error::DegreeMismatch(delta.len(), d));
        }
        let mut inverse = vec![0; d + 1];
        for (i, &img) in delta.iter().enumerate() {
            if img == 0 || img > d || inverse[img] != 0 {
                return Err(Error::Partition(format!("{delta:?} is not a permutation")));
            }
            inverse[img] = i + 1;
        }
        // Element j of δ(π) sits where δ⁻¹(j) sat in π.
        let labels: Vec<usize> = (1..=d).map(|j| self.rgs[inverse[j] - 1]).collect();
        Ok(SetPartition::from_labels(labels))
    }
}

impl fmt::Display for SetPartition {
    /// Slash-separated blocks sorted by minimum, `13/2` style. Elements are
    /// concatenated for d ≤ 9 and dot-separated beyond.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.degree() > 9;
        for (bi, block) in self.blocks().iter().enumerate() {
            if bi > 0 {
                write!(f, "/")?;
            }
            for (i, el) in block.iter().enumerate() {
                if wide && i > 0 {
                    write!(f, ".")?;
                }
                write!(f, "{el}")?;
            }
        }
        Ok(())
    }
}

/// All partitions of [d] in restricted-growth lexicographic order.
pub fn partitions_of(d: usize) -> Vec<SetPartition> {
    let mut out = Vec::new();
    let mut rgs = Vec::with_capacity(d);
    fn rec(d: usize, max_seen: usize, rgs: &mut Vec<usize>, out: &mut Vec<SetPartition>) {
        if rgs.len() == d {
            out.push(SetPartition { rgs: rgs.clone() });
            return;
        }
        let limit = if rgs.is_empty() { 0 } else { max_seen + 1 };
        for b in 0..=limit {
            rgs.push(b);
            rec(d, max_seen.max(b), rgs, out);
            rgs.pop();
        }
    }
    rec(d, 0, &mut rgs, &mut out);
    out
}

/// Cached order tables and Möbius rows for Π_d.
pub struct Lattice {
    parts: Vec<SetPartition>,
    index: HashMap<SetPartition, usize>,
    /// up[i] — bitset of j with parts[i] ≤ parts[j].
    up: Vec<Vec<u64>>,
    /// down[i] — bitset of j with parts[j] ≤ parts[i].
    down: Vec<Vec<u64>>,
    mu_rows: Mutex<HashMap<usize, Arc<Vec<i64>>>>,
}

fn bit(bits: &[u64], j: usize) -> bool {
    bits[j / 64] >> (j % 64) & 1 == 1
}

impl Lattice {
    /// The table for Π_d, built once per degree and shared.
    pub fn for_degree(d: usize) -> Arc<Lattice> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Lattice>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = cache.lock().unwrap();
        guard
            .entry(d)
            .or_insert_with(|| Arc::new(Lattice::build(d)))
            .clone()
    }

    fn build(d: usize) -> Lattice {
        // Linear extension of refinement: finer partitions (more blocks)
        // first, ties broken by the growth string.
        let mut parts = partitions_of(d);
        parts.sort_by_key(|p| (Reverse(p.num_blocks()), p.rgs.clone()));
        let index: HashMap<SetPartition, usize> = parts
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let n = parts.len();
        let w = n.div_ceil(64);
        let mut up = vec![vec![0u64; w]; n];
        let mut down = vec![vec![0u64; w]; n];
        for i in 0..n {
            for j in 0..n {
                if parts[i].leq(&parts[j]).unwrap() {
                    up[i][j / 64] |= 1 << (j % 64);
                    down[j][i / 64] |= 1 << (i % 64);
                }
            }
        }
        Lattice {
            parts,
            index,
            up,
            down,
            mu_rows: Mutex::new(HashMap::new()),
        }
    }

    pub fn partitions(&self) -> &[SetPartition] {
        &self.parts
    }

    pub fn index_of(&self, p: &SetPartition) -> usize {
        self.index[p]
    }

    pub fn leq_idx(&self, i: usize, j: usize) -> bool {
        bit(&self.up[i], j)
    }

    /// μ(parts[tau], ·) as a dense row; entries outside the up-set are 0.
    pub fn mu_row(&self, tau: usize) -> Arc<Vec<i64>> {
        if let Some(row) = self.mu_rows.lock().unwrap().get(&tau) {
            return row.clone();
        }
        let n = self.parts.len();
        let mut row = vec![0i64; n];
        row[tau] = 1;
        // Everything ≥ parts[tau] appears after it in the linear extension,
        // so one ascending sweep closes the recursion
        // μ(τ,σ) = −Σ_{τ≤ρ<σ} μ(τ,ρ).
        for sigma in (tau + 1)..n {
            if !self.leq_idx(tau, sigma) {
                continue;
            }
            let mut sum = 0i64;
            for wi in 0..self.up[tau].len() {
                let mut both = self.up[tau][wi] & self.down[sigma][wi];
                while both != 0 {
                    let j = wi * 64 + both.trailing_zeros() as usize;
                    both &= both - 1;
                    if j != sigma {
                        sum += row[j];
                    }
                }
            }
            row[sigma] = -sum;
        }
        let row = Arc::new(row);
        self.mu_rows.lock().unwrap().insert(tau, row.clone());
        row
    }
}

/// Möbius function of the interval [τ, σ] in Π_d. Errors when degrees differ
/// or τ ≰ σ.
pub fn mobius(tau: &SetPartition, sigma: &SetPartition) -> Result<i64> {
    if !tau.leq(sigma)? {
        return Err(Error::Partition(format!(
            "mobius needs {tau} ≤ {sigma} in the refinement order"
        )));
    }
    let lat = Lattice::for_degree(tau.degree());
    let row = lat.mu_row(lat.index_of(tau));
    Ok(row[lat.index_of(sigma)])
}
