//! Brute-force ground truth: explicit spanning-tree enumeration with degree
//! filtering, and the histogram of labeled degree sequences.
//!
//! Enumeration is contraction/deletion in disguise: edges are decided in
//! canonical order, inclusion merges endpoints in a union-find, and the
//! exclusion branch is pruned unless the remaining edges still connect the
//! contracted graph. Every surviving branch yields at least one tree, and
//! trees come out in lexicographic order of their sorted edge lists.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::kirchhoff::{count_spanning_trees, Assignment};
use crate::parity::ParityVector;

/// Default ceiling on the number of trees the oracle will enumerate.
pub const DEFAULT_ENUMERATION_CAP: u64 = 10_000_000;

/// Predicate over a labeled degree sequence.
pub type DegreePredicate = Box<dyn Fn(&[usize]) -> bool>;

/// Predicate over the labeled degree sequence of a spanning tree.
pub enum DegreeFilter {
    /// Every vertex has odd degree.
    AllOdd,
    /// Degree parities match the given target exactly.
    ParityMatch(ParityVector),
    /// No vertex has degree exactly two (homeomorphically irreducible).
    NoDegreeTwo,
    /// No filtering.
    All,
    /// Arbitrary predicate over the degree sequence.
    Custom(DegreePredicate),
}

impl DegreeFilter {
    fn matches(&self, degrees: &[usize]) -> bool {
        match self {
            DegreeFilter::AllOdd => degrees.iter().all(|d| d % 2 == 1),
            DegreeFilter::ParityMatch(r) => degrees
                .iter()
                .zip(r.parities())
                .all(|(d, &bit)| (d % 2) as u8 == bit),
            DegreeFilter::NoDegreeTwo => degrees.iter().all(|&d| d != 2),
            DegreeFilter::All => true,
            DegreeFilter::Custom(pred) => pred(degrees),
        }
    }
}

impl fmt::Debug for DegreeFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DegreeFilter::AllOdd => f.write_str("AllOdd"),
            DegreeFilter::ParityMatch(r) => write!(f, "ParityMatch({r:?})"),
            DegreeFilter::NoDegreeTwo => f.write_str("NoDegreeTwo"),
            DegreeFilter::All => f.write_str("All"),
            DegreeFilter::Custom(_) => f.write_str("Custom(..)"),
        }
    }
}

/// Map from labeled degree sequence to the number of spanning trees
/// realizing it.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DegreeHistogram {
    counts: BTreeMap<Vec<usize>, BigInt>,
}

impl DegreeHistogram {
    pub fn counts(&self) -> &BTreeMap<Vec<usize>, BigInt> {
        &self.counts
    }

    /// Total number of trees across all buckets.
    pub fn total(&self) -> BigInt {
        self.counts.values().sum()
    }

    /// Reconstructs the spanning-tree polynomial from the histogram:
    /// the sum over sequences of `count * prod_i x[i]^(d[i])`.
    pub fn evaluate(&self, x: &Assignment) -> Result<BigInt> {
        let mut total = BigInt::zero();
        for (degrees, count) in &self.counts {
            if degrees.len() != x.len() {
                return Err(Error::DimensionMismatch(format!(
                    "histogram keys have {} entries but assignment has {}",
                    degrees.len(),
                    x.len()
                )));
            }
            let mut term = count.clone();
            for (&d, &value) in degrees.iter().zip(x.values()) {
                term *= BigInt::from(value).pow(d as u32);
            }
            total += term;
        }
        Ok(total)
    }
}

/// Calls `visit(edges, degrees)` once per spanning tree, edges 1-indexed in
/// lexicographic order. Returns the number of trees visited.
pub fn visit_spanning_trees<F>(g: &Graph, cap: u64, visit: F) -> Result<u64>
where
    F: FnMut(&[(usize, usize)], &[usize]),
{
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    let total = count_spanning_trees(g);
    if total > BigInt::from(cap) {
        return Err(Error::EnumerationCapExceeded { count: total, cap });
    }
    let n = g.order();
    let mut enumerator = TreeEnumerator {
        edges: g.edges(),
        parent: (0..n).collect(),
        size: vec![1; n],
        scratch: vec![0; n],
        chosen: Vec::with_capacity(n.saturating_sub(1)),
        emitted: Vec::with_capacity(n.saturating_sub(1)),
        degrees: vec![0; n],
        yielded: 0,
        visit,
    };
    enumerator.recurse(0, n - 1);
    let yielded = enumerator.yielded;
    debug_assert_eq!(BigInt::from(yielded), total);
    Ok(yielded)
}

/// Collects every spanning tree as a sorted list of 1-indexed edges.
pub fn enumerate_spanning_trees(g: &Graph, cap: u64) -> Result<Vec<Vec<(usize, usize)>>> {
    let mut trees = Vec::new();
    visit_spanning_trees(g, cap, |edges, _| trees.push(edges.to_vec()))?;
    Ok(trees)
}

/// Number of spanning trees whose degree sequence satisfies the filter.
pub fn count_filtered(g: &Graph, filter: &DegreeFilter, cap: u64) -> Result<BigInt> {
    if let DegreeFilter::ParityMatch(r) = filter {
        if r.len() != g.order() {
            return Err(Error::DimensionMismatch(format!(
                "graph has {} vertices but parity vector has {} entries",
                g.order(),
                r.len()
            )));
        }
    }
    let mut matched: u64 = 0;
    visit_spanning_trees(g, cap, |_, degrees| {
        if filter.matches(degrees) {
            matched += 1;
        }
    })?;
    Ok(BigInt::from(matched))
}

/// Exact map from labeled degree sequence to multiplicity.
pub fn degree_histogram(g: &Graph, cap: u64) -> Result<DegreeHistogram> {
    let mut histogram = DegreeHistogram::default();
    visit_spanning_trees(g, cap, |_, degrees| {
        *histogram
            .counts
            .entry(degrees.to_vec())
            .or_insert_with(BigInt::zero) += BigInt::one();
    })?;
    Ok(histogram)
}

/// Number of spanning trees with no degree-two vertex.
pub fn count_hists(g: &Graph, cap: u64) -> Result<BigInt> {
    count_filtered(g, &DegreeFilter::NoDegreeTwo, cap)
}

/// One line per tree: edges as `u-v` pairs, space-separated, sorted.
pub fn dump_trees(g: &Graph, cap: u64) -> Result<String> {
    let mut out = String::new();
    visit_spanning_trees(g, cap, |edges, _| {
        let line = edges
            .iter()
            .map(|(u, v)| format!("{u}-{v}"))
            .collect::<Vec<_>>()
            .join(" ");
        out.push_str(&line);
        out.push('\n');
    })?;
    Ok(out)
}

struct TreeEnumerator<'g, F> {
    edges: &'g [(usize, usize)],
    parent: Vec<usize>,
    size: Vec<usize>,
    scratch: Vec<usize>,
    chosen: Vec<usize>,
    emitted: Vec<(usize, usize)>,
    degrees: Vec<usize>,
    yielded: u64,
    visit: F,
}

impl<F: FnMut(&[(usize, usize)], &[usize])> TreeEnumerator<'_, F> {
    fn find(parent: &[usize], mut v: usize) -> usize {
        while parent[v] != v {
            v = parent[v];
        }
        v
    }

    /// `needed` is the number of unions still required; it always equals
    /// the current component count minus one.
    fn recurse(&mut self, pos: usize, needed: usize) {
        if needed == 0 {
            self.emitted.clear();
            self.emitted.extend(
                self.chosen
                    .iter()
                    .map(|&id| (self.edges[id].0 + 1, self.edges[id].1 + 1)),
            );
            self.yielded += 1;
            (self.visit)(&self.emitted, &self.degrees);
            return;
        }
        if pos == self.edges.len() {
            return;
        }
        let (u, v) = self.edges[pos];
        let root_u = Self::find(&self.parent, u);
        let root_v = Self::find(&self.parent, v);
        if root_u == root_v {
            // The edge closes a cycle with the current tree; skip it.
            self.recurse(pos + 1, needed);
            return;
        }

        // Include the edge: contract its endpoints.
        let (winner, child) = if self.size[root_u] >= self.size[root_v] {
            (root_u, root_v)
        } else {
            (root_v, root_u)
        };
        self.parent[child] = winner;
        self.size[winner] += self.size[child];
        self.chosen.push(pos);
        self.degrees[u] += 1;
        self.degrees[v] += 1;
        self.recurse(pos + 1, needed - 1);
        self.degrees[u] -= 1;
        self.degrees[v] -= 1;
        self.chosen.pop();
        self.size[winner] -= self.size[child];
        self.parent[child] = child;

        // Exclude the edge, unless the remaining edges cannot reconnect
        // the contracted graph (the edge is an effective bridge).
        if self.connected_without(pos, needed) {
            self.recurse(pos + 1, needed);
        }
    }

    fn connected_without(&mut self, pos: usize, needed: usize) -> bool {
        self.scratch.copy_from_slice(&self.parent);
        let mut components = needed + 1;
        for &(u, v) in &self.edges[pos + 1..] {
            let root_u = Self::find(&self.scratch, u);
            let root_v = Self::find(&self.scratch, v);
            if root_u != root_v {
                self.scratch[root_u] = root_v;
                components -= 1;
                if components == 1 {
                    return true;
                }
            }
        }
        false
    }
}
