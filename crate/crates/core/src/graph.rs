//! Simple undirected labeled graphs, the edge-list text format, and
//! generators for the supported graph families.
//!
//! Vertices are 1-indexed in all I/O and 0-indexed internally; the parser
//! and serializer are the boundary.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An immutable simple undirected graph on vertices `1..=n` (stored
/// 0-indexed). No loops, no parallel edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Validates and canonicalizes a graph given 1-indexed edge pairs.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InvalidSpec(
                "graph must have at least one vertex".into(),
            ));
        }
        let mut canonical = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            canonical.push((a - 1, b - 1));
        }
        canonical.sort_unstable();
        if let Some(w) = canonical.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0 + 1, w[0].1 + 1));
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &canonical {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: canonical,
            adjacency,
        })
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonically sorted edges, 0-indexed with `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbor list of a 0-indexed vertex.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// True iff the graph has a single connected component.
    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut visited = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    visited += 1;
                    queue.push_back(w);
                }
            }
        }
        visited == self.n
    }

    /// Parses the edge-list text format: a `"n m"` header, then `m` lines
    /// `"u v"`. Lines starting with `#` are comments; LF and CRLF both work.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(idx, line)| (idx + 1, line.trim()))
            .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'));

        let (header_line, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing header line".into(),
        })?;
        let mut fields = header.split_whitespace();
        let n = parse_field(&mut fields, header_line, "vertex count")?;
        let m: usize = parse_field(&mut fields, header_line, "edge count")?;
        if fields.next().is_some() {
            return Err(Error::Parse {
                line: header_line,
                message: "trailing tokens after header".into(),
            });
        }

        let mut edges = Vec::with_capacity(m);
        let mut last_line = header_line;
        for (line_no, line) in lines.by_ref() {
            if edges.len() == m {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("declared {m} edges, found more"),
                });
            }
            let mut fields = line.split_whitespace();
            let u = parse_field(&mut fields, line_no, "edge endpoint")?;
            let v = parse_field(&mut fields, line_no, "edge endpoint")?;
            if fields.next().is_some() {
                return Err(Error::Parse {
                    line: line_no,
                    message: "trailing tokens after edge".into(),
                });
            }
            edges.push((u, v));
            last_line = line_no;
        }
        if edges.len() != m {
            return Err(Error::Parse {
                line: last_line,
                message: format!("declared {m} edges, found {}", edges.len()),
            });
        }
        Graph::new(n, &edges)
    }

    /// Serializes back to the edge-list format (1-indexed, `u < v`,
    /// canonical order).
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{} {}\n", u + 1, v + 1));
        }
        out
    }
}

fn parse_field<'a, I, T>(fields: &mut I, line: usize, what: &str) -> Result<T>
where
    I: Iterator<Item = &'a str>,
    T: FromStr,
{
    let token = fields.next().ok_or_else(|| Error::Parse {
        line,
        message: format!("missing {what}"),
    })?;
    token.parse().map_err(|_| Error::Parse {
        line,
        message: format!("invalid {what}: {token:?}"),
    })
}

/// A description of one instance of a supported graph family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    /// Complete graph on `n` vertices.
    Complete { n: usize },
    /// Complete multipartite graph with the given part sizes.
    Multipartite { parts: Vec<usize> },
    /// Complete graph on `n` vertices minus a matching of `p` edges.
    AlmostComplete { n: usize, p: usize },
    /// Join of a clique on `m` vertices with an independent set of `n`.
    CompleteSplit { m: usize, n: usize },
    /// Bipartite graph of a partition: row `i` is adjacent to the first
    /// `partition[i]` columns.
    Ferrers { partition: Vec<usize> },
}

impl FamilySpec {
    /// Checks the family's structural invariants.
    pub fn validate(&self) -> Result<()> {
        match self {
            FamilySpec::Complete { n } => {
                if *n == 0 {
                    return Err(Error::InvalidSpec("complete: n must be positive".into()));
                }
            }
            FamilySpec::Multipartite { parts } => {
                if parts.len() < 2 {
                    return Err(Error::InvalidSpec(
                        "multipartite: need at least two parts".into(),
                    ));
                }
                if parts.contains(&0) {
                    return Err(Error::InvalidSpec(
                        "multipartite: part sizes must be positive".into(),
                    ));
                }
            }
            FamilySpec::AlmostComplete { n, p } => {
                if *n == 0 {
                    return Err(Error::InvalidSpec("almost: n must be positive".into()));
                }
                if 2 * p > *n {
                    return Err(Error::InvalidSpec(format!(
                        "almost: matching of {p} edges needs 2*{p} <= {n}"
                    )));
                }
            }
            FamilySpec::CompleteSplit { m, n } => {
                if *m == 0 || *n == 0 {
                    return Err(Error::InvalidSpec(
                        "split: both sides must be nonempty".into(),
                    ));
                }
            }
            FamilySpec::Ferrers { partition } => {
                if partition.is_empty() {
                    return Err(Error::InvalidSpec("ferrers: empty partition".into()));
                }
                if partition.contains(&0) {
                    return Err(Error::InvalidSpec(
                        "ferrers: parts must be positive".into(),
                    ));
                }
                if partition.windows(2).any(|w| w[0] < w[1]) {
                    return Err(Error::InvalidSpec(
                        "ferrers: parts must be weakly decreasing".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Total number of vertices of the generated graph.
    pub fn order(&self) -> usize {
        match self {
            FamilySpec::Complete { n } => *n,
            FamilySpec::Multipartite { parts } => parts.iter().sum(),
            FamilySpec::AlmostComplete { n, .. } => *n,
            FamilySpec::CompleteSplit { m, n } => m + n,
            FamilySpec::Ferrers { partition } => partition.len() + partition[0],
        }
    }

    /// Builds the labeled graph for this family instance.
    pub fn generate(&self) -> Result<Graph> {
        self.validate()?;
        let edges = match self {
            FamilySpec::Complete { n } => all_pairs(1..=*n),
            FamilySpec::Multipartite { parts } => {
                // Vertices are grouped consecutively: part 1 first, then
                // part 2, and so on. Edges join distinct parts only.
                let mut part_of = Vec::new();
                for (idx, &size) in parts.iter().enumerate() {
                    part_of.extend(std::iter::repeat_n(idx, size));
                }
                let n = part_of.len();
                let mut edges = Vec::new();
                for u in 1..=n {
                    for v in u + 1..=n {
                        if part_of[u - 1] != part_of[v - 1] {
                            edges.push((u, v));
                        }
                    }
                }
                edges
            }
            FamilySpec::AlmostComplete { n, p } => {
                // Canonical matching on the first 2p vertices; the count is
                // isomorphism-invariant so the choice does not matter.
                let matched: Vec<(usize, usize)> =
                    (0..*p).map(|i| (2 * i + 1, 2 * i + 2)).collect();
                all_pairs(1..=*n)
                    .into_iter()
                    .filter(|e| !matched.contains(e))
                    .collect()
            }
            FamilySpec::CompleteSplit { m, n } => {
                let mut edges = all_pairs(1..=*m);
                for u in 1..=*m {
                    for v in m + 1..=m + n {
                        edges.push((u, v));
                    }
                }
                edges
            }
            FamilySpec::Ferrers { partition } => {
                let m = partition.len();
                let mut edges = Vec::new();
                for (i, &row_len) in partition.iter().enumerate() {
                    for j in 1..=row_len {
                        edges.push((i + 1, m + j));
                    }
                }
                edges
            }
        };
        Graph::new(self.order(), &edges)
    }
}

fn all_pairs(range: std::ops::RangeInclusive<usize>) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for u in range.clone() {
        for v in u + 1..=*range.end() {
            edges.push((u, v));
        }
    }
    edges
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Parses the CLI syntax: `complete:N`, `multipartite:N1,N2,...`,
    /// `almost:N,P`, `split:M,N`, `ferrers:L1,L2,...`.
    fn from_str(s: &str) -> Result<FamilySpec> {
        let (name, args) = s
            .split_once(':')
            .ok_or_else(|| Error::InvalidSpec(format!("expected name:args, got {s:?}")))?;
        let nums: Vec<usize> = args
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse()
                    .map_err(|_| Error::InvalidSpec(format!("invalid number {tok:?} in {s:?}")))
            })
            .collect::<Result<_>>()?;
        let spec = match name {
            "complete" => match nums[..] {
                [n] => FamilySpec::Complete { n },
                _ => return Err(Error::InvalidSpec("complete takes one number".into())),
            },
            "multipartite" => FamilySpec::Multipartite { parts: nums },
            "almost" => match nums[..] {
                [n, p] => FamilySpec::AlmostComplete { n, p },
                _ => return Err(Error::InvalidSpec("almost takes two numbers".into())),
            },
            "split" => match nums[..] {
                [m, n] => FamilySpec::CompleteSplit { m, n },
                _ => return Err(Error::InvalidSpec("split takes two numbers".into())),
            },
            "ferrers" => FamilySpec::Ferrers { partition: nums },
            other => return Err(Error::InvalidSpec(format!("unknown family {other:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn join(nums: &[usize]) -> String {
            nums.iter()
                .map(|n| n.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
        match self {
            FamilySpec::Complete { n } => write!(f, "complete:{n}"),
            FamilySpec::Multipartite { parts } => write!(f, "multipartite:{}", join(parts)),
            FamilySpec::AlmostComplete { n, p } => write!(f, "almost:{n},{p}"),
            FamilySpec::CompleteSplit { m, n } => write!(f, "split:{m},{n}"),
            FamilySpec::Ferrers { partition } => write!(f, "ferrers:{}", join(partition)),
        }
    }
}

/// Dual (conjugate) partition: `dual[j] = #{i : partition[i] >= j+1}`.
pub fn dual_partition(partition: &[usize]) -> Result<Vec<usize>> {
    FamilySpec::Ferrers {
        partition: partition.to_vec(),
    }
    .validate()?;
    let width = partition[0];
    let dual = (1..=width)
        .map(|j| partition.iter().filter(|&&part| part >= j).count())
        .collect();
    Ok(dual)
}
