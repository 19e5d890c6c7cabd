use serde::Serialize;

use super::graph::DenseGraph;
use super::sequence::{CreationSequence, Symbol};
use crate::error::{Error, Result};

/// Outcome of [`recognize`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Recognition {
    /// The graph is threshold. `vertex_order[i]` is the input vertex placed
    /// at position `i` of `sequence`, so it is an explicit isomorphism.
    Threshold { sequence: CreationSequence, vertex_order: Vec<usize> },
    /// Peeling got stuck: `witness` has no isolated and no dominating vertex.
    NotThreshold { witness: StuckSubgraph },
}

impl Recognition {
    pub fn sequence(&self) -> Option<&CreationSequence> {
        match self {
            Recognition::Threshold { sequence, .. } => Some(sequence),
            Recognition::NotThreshold { .. } => None,
        }
    }

    pub fn is_threshold(&self) -> bool {
        self.sequence().is_some()
    }
}

/// Induced subgraph of the input on which peeling stopped.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StuckSubgraph {
    /// Input vertex labels, ascending.
    pub vertices: Vec<usize>,
    /// Induced edges in input labels.
    pub edges: Vec<(usize, usize)>,
}

impl StuckSubgraph {
    /// True when no vertex of the subgraph is isolated or dominating in it.
    pub fn is_valid_witness(&self, g: &DenseGraph) -> bool {
        let k = self.vertices.len();
        k >= 2
            && self.vertices.iter().all(|&u| {
                let d = self.vertices.iter().filter(|&&v| v != u && g.has_edge(u, v)).count();
                d != 0 && d != k - 1
            })
    }
}

/// Recognizes a threshold graph given as an edge list on `0..order`.
pub fn recognize(order: usize, edges: &[(usize, usize)]) -> Result<Recognition> {
    if order == 0 {
        return Err(Error::EmptyInput);
    }
    let g = DenseGraph::from_edges(order, edges)?;
    Ok(recognize_graph(&g))
}

/// Repeatedly removes an isolated or a dominating vertex of what remains.
pub fn recognize_graph(g: &DenseGraph) -> Recognition {
    let n = g.order();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut peeled: Vec<(usize, Symbol)> = Vec::with_capacity(n);
    let mut remaining = n;
    while remaining > 1 {
        let pick = (0..n)
            .filter(|&v| alive[v])
            .find_map(|v| match degree[v] {
                0 => Some((v, Symbol::Isolated)),
                d if d == remaining - 1 => Some((v, Symbol::Dominating)),
                _ => None,
            });
        let Some((v, sym)) = pick else {
            let vertices: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
            let edges = g
                .induced(&vertices)
                .edges()
                .into_iter()
                .map(|(a, b)| (vertices[a], vertices[b]))
                .collect();
            return Recognition::NotThreshold { witness: StuckSubgraph { vertices, edges } };
        };
        alive[v] = false;
        remaining -= 1;
        for w in g.neighbors(v) {
            degree[w] -= 1;
        }
        peeled.push((v, sym));
    }
    if let Some(last) = (0..n).find(|&v| alive[v]) {
        peeled.push((last, Symbol::Isolated));
    }
    peeled.reverse();
    let vertex_order = peeled.iter().map(|&(v, _)| v).collect();
    let sequence = CreationSequence::new(peeled.into_iter().map(|(_, s)| s).collect())
        .expect("order is positive");
    Recognition::Threshold { sequence, vertex_order }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::threshold::sequence::enumerate_threshold;

    fn seq_of(order: usize, edges: &[(usize, usize)]) -> Option<String> {
        recognize(order, edges).unwrap().sequence().map(|s| s.to_string())
    }

    #[test]
    fn recognize_examples() {
        assert_eq!(seq_of(3, &[(0, 1), (1, 2)]).as_deref(), Some("001"));
        assert_eq!(seq_of(3, &[(0, 1), (1, 2), (0, 2)]).as_deref(), Some("011"));
        let c4 = [(0, 1), (1, 2), (2, 3), (3, 0)];
        match recognize(4, &c4).unwrap() {
            Recognition::NotThreshold { witness } => {
                assert_eq!(witness.vertices, [0, 1, 2, 3]);
                assert_eq!(witness.edges.len(), 4);
            }
            r => panic!("C4 recognized as {r:?}"),
        }
        assert_eq!(seq_of(4, &[(0, 1), (2, 3)]), None);
        assert_eq!(seq_of(4, &[(0, 1), (1, 2), (2, 3)]), None);
    }

    #[test]
    fn recognize_errors() {
        assert_eq!(recognize(0, &[]), Err(Error::EmptyInput));
        assert!(matches!(recognize(2, &[(0, 0)]), Err(Error::InvalidEdge(..))));
        assert!(matches!(recognize(2, &[(0, 2)]), Err(Error::InvalidEdge(..))));
        assert!(matches!(recognize(2, &[(0, 1), (0, 1)]), Err(Error::InvalidEdge(..))));
    }

    #[test]
    fn witness_is_stuck() {
        // P4 with a pendant dominating-free extension.
        let edges = [(0, 1), (1, 2), (2, 3), (4, 0)];
        let g = DenseGraph::from_edges(5, &edges).unwrap();
        match recognize_graph(&g) {
            Recognition::NotThreshold { witness } => assert!(witness.is_valid_witness(&g)),
            r => panic!("{r:?}"),
        }
    }

    #[test]
    fn every_enumerated_graph_recognizes_to_itself() {
        for n in 1..=10 {
            for s in enumerate_threshold(n, false) {
                let g = DenseGraph::from_creation(&s);
                match recognize(n, &g.edges()).unwrap() {
                    Recognition::Threshold { sequence, .. } => assert_eq!(sequence, s),
                    r => panic!("{s}: {r:?}"),
                }
            }
        }
    }
}
