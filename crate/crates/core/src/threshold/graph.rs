use std::fmt::Write as _;

use super::nsg::{ClassTag, NsgForm};
use super::sequence::{CreationSequence, Symbol};
use crate::error::{Error, Result};
use crate::spectral::Matrix;

/// Simple undirected graph stored as a dense 0/1 adjacency matrix.
///
/// Graphs built from a creation sequence also carry the class tag of every
/// vertex; graphs read from an edge list do not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseGraph {
    order: usize,
    adjacency: Vec<bool>,
    class_of: Option<Vec<ClassTag>>,
}

impl DenseGraph {
    pub fn empty(order: usize) -> Self {
        Self { order, adjacency: vec![false; order * order], class_of: None }
    }

    /// Vertex `i` is joined to every `j < i` iff symbol `i` is dominating.
    pub fn from_creation(seq: &CreationSequence) -> Self {
        let n = seq.order();
        let mut g = Self::empty(n);
        for (i, s) in seq.symbols().iter().enumerate() {
            if *s == Symbol::Dominating {
                for j in 0..i {
                    g.set_edge(i, j);
                }
            }
        }
        g.class_of = Some(NsgForm::from_creation(seq).vertex_tags());
        g
    }

    /// Builds a graph from an edge list, rejecting loops, vertices out of
    /// range and repeated edges.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(order);
        for &(u, v) in edges {
            if u == v {
                return Err(Error::InvalidEdge(u, v, "self-loop"));
            }
            if u >= order || v >= order {
                return Err(Error::InvalidEdge(u, v, "vertex out of range"));
            }
            if g.has_edge(u, v) {
                return Err(Error::InvalidEdge(u, v, "duplicate edge"));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    fn set_edge(&mut self, u: usize, v: usize) {
        self.adjacency[u * self.order + v] = true;
        self.adjacency[v * self.order + u] = true;
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u * self.order + v]
    }

    pub fn row(&self, u: usize) -> &[bool] {
        &self.adjacency[u * self.order..(u + 1) * self.order]
    }

    pub fn class_of(&self, v: usize) -> Option<ClassTag> {
        self.class_of.as_ref().map(|tags| tags[v])
    }

    pub fn class_tags(&self) -> Option<&[ClassTag]> {
        self.class_of.as_deref()
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(u).iter().enumerate().filter(|(_, &a)| a).map(|(v, _)| v)
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().filter(|&&a| a).count()
    }

    /// Edges `(u, v)` with `u < v`, in row-major order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.order {
            for v in u + 1..self.order {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().filter(|&&a| a).count() / 2
    }

    /// Induced subgraph on `vertices`, in the given order. Tags are dropped.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let mut g = Self::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(i, j);
                }
            }
        }
        g
    }

    pub fn adjacency_matrix(&self) -> Matrix {
        Matrix::from_fn(self.order, |i, j| if self.has_edge(i, j) { 1.0 } else { 0.0 })
    }

    /// Partition into duplication classes (equal open neighborhoods) and
    /// coduplication classes (equal closed neighborhoods).
    ///
    /// Both partitions cover every vertex; classes are listed by smallest
    /// member and singletons are included.
    pub fn partition_classes(&self) -> VertexClasses {
        let n = self.order;
        let same_open = |u: usize, v: usize| self.row(u) == self.row(v);
        let same_closed = |u: usize, v: usize| {
            self.has_edge(u, v)
                && (0..n).all(|w| w == u || w == v || self.has_edge(u, w) == self.has_edge(v, w))
        };
        VertexClasses {
            duplication: group_by_relation(n, same_open),
            coduplication: group_by_relation(n, same_closed),
        }
    }

    pub fn to_edge_list(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.order, edges.len());
        for (u, v) in edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

/// Result of [`DenseGraph::partition_classes`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexClasses {
    pub duplication: Vec<Vec<usize>>,
    pub coduplication: Vec<Vec<usize>>,
}

fn group_by_relation(n: usize, related: impl Fn(usize, usize) -> bool) -> Vec<Vec<usize>> {
    let mut assigned = vec![false; n];
    let mut classes = Vec::new();
    for u in 0..n {
        if assigned[u] {
            continue;
        }
        let mut class = vec![u];
        for v in u + 1..n {
            if !assigned[v] && related(u, v) {
                assigned[v] = true;
                class.push(v);
            }
        }
        classes.push(class);
    }
    classes
}

/// Parses the edge-list format: a header line `n m` followed by `m` lines
/// `u v` with 0-based vertices. Blank lines and `#` comments are skipped.
pub fn parse_edge_list(text: &str) -> Result<(usize, Vec<(usize, usize)>)> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let parse_pair = |line: usize, l: &str| -> Result<(usize, usize)> {
        let err = |msg: &str| Error::EdgeListParse { line, msg: msg.to_string() };
        let mut it = l.split_whitespace();
        let a = it.next().ok_or_else(|| err("missing field"))?;
        let b = it.next().ok_or_else(|| err("missing field"))?;
        if it.next().is_some() {
            return Err(err("expected two fields"));
        }
        Ok((
            a.parse().map_err(|_| err("not a nonnegative integer"))?,
            b.parse().map_err(|_| err("not a nonnegative integer"))?,
        ))
    };
    let (line, header) = lines
        .next()
        .ok_or(Error::EdgeListParse { line: 1, msg: "missing header".into() })?;
    let (order, m) = parse_pair(line, header)?;
    let edges = lines.map(|(line, l)| parse_pair(line, l)).collect::<Result<Vec<_>>>()?;
    if edges.len() != m {
        return Err(Error::EdgeListParse {
            line,
            msg: format!("header announces {m} edges, found {}", edges.len()),
        });
    }
    Ok((order, edges))
}
