use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// One step of the creation process.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    /// New vertex with no neighbors (`0`).
    Isolated,
    /// New vertex adjacent to every earlier vertex (`1`).
    Dominating,
}

impl Symbol {
    pub fn flip(self) -> Self {
        match self {
            Symbol::Isolated => Symbol::Dominating,
            Symbol::Dominating => Symbol::Isolated,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Symbol::Isolated => '0',
            Symbol::Dominating => '1',
        }
    }
}

/// Canonical creation sequence of a threshold graph.
///
/// Vertex `i` (0-based) is adjacent to every vertex `j < i` when symbol `i`
/// is [`Symbol::Dominating`] and to none of them otherwise. The first
/// symbol is always stored as [`Symbol::Isolated`], so there are exactly
/// `2^(n-1)` sequences of length `n`, one per isomorphism class.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CreationSequence {
    symbols: Vec<Symbol>,
}

impl CreationSequence {
    /// Builds a sequence, normalizing the first symbol. Fails on empty input.
    pub fn new(mut symbols: Vec<Symbol>) -> Result<Self> {
        match symbols.first_mut() {
            None => Err(Error::EmptyInput),
            Some(first) => {
                *first = Symbol::Isolated;
                Ok(Self { symbols })
            }
        }
    }

    /// Parses a string of `0`/`1` characters.
    pub fn parse(text: &str) -> Result<Self> {
        if text.is_empty() {
            return Err(Error::EmptyInput);
        }
        let symbols = text
            .chars()
            .enumerate()
            .map(|(pos, c)| match c {
                '0' => Ok(Symbol::Isolated),
                '1' => Ok(Symbol::Dominating),
                _ => Err(Error::InvalidCharacter(pos)),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(symbols)
    }

    /// The `index`-th sequence of length `order` in lexicographic order.
    ///
    /// Bit `order - 2 - k` of `index` is the symbol at position `k + 1`.
    pub fn from_index(order: usize, index: u64) -> Self {
        assert!(order >= 1, "order must be positive");
        assert!(order <= 64, "index form limited to order <= 64");
        let mut symbols = Vec::with_capacity(order);
        symbols.push(Symbol::Isolated);
        for pos in 1..order {
            let bit = (index >> (order - 1 - pos)) & 1;
            symbols.push(if bit == 1 { Symbol::Dominating } else { Symbol::Isolated });
        }
        Self { symbols }
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn order(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_connected(&self) -> bool {
        self.order() == 1 || self.symbols.last() == Some(&Symbol::Dominating)
    }

    /// Edge-complement: every symbol after the first flips.
    pub fn complement(&self) -> Self {
        let symbols = self
            .symbols
            .iter()
            .enumerate()
            .map(|(i, s)| if i == 0 { *s } else { s.flip() })
            .collect();
        Self { symbols }
    }

    /// Sequence of the induced subgraph obtained by deleting `vertex`.
    ///
    /// Returns `None` when the sequence has a single vertex.
    pub fn delete_vertex(&self, vertex: usize) -> Option<Self> {
        assert!(vertex < self.order(), "vertex out of range");
        if self.order() == 1 {
            return None;
        }
        let mut symbols = self.symbols.clone();
        symbols.remove(vertex);
        Self::new(symbols).ok()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let n = self.order();
        let mut deg = vec![0usize; n];
        // Number of dominating symbols after position i.
        let mut later_dominating = 0usize;
        for i in (0..n).rev() {
            deg[i] += later_dominating;
            if self.symbols[i] == Symbol::Dominating {
                deg[i] += i;
                later_dominating += 1;
            }
        }
        deg
    }

    pub fn edge_count(&self) -> usize {
        self.symbols
            .iter()
            .enumerate()
            .filter(|(_, s)| **s == Symbol::Dominating)
            .map(|(i, _)| i)
            .sum()
    }
}

impl fmt::Display for CreationSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.symbols {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for CreationSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl Serialize for CreationSequence {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CreationSequence {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        Self::parse(&text).map_err(serde::de::Error::custom)
    }
}

/// All canonical sequences of `order` vertices in lexicographic order.
///
/// With `connected_only` (and `order >= 2`) only sequences ending in a
/// dominating vertex are produced.
pub fn enumerate_threshold(
    order: usize,
    connected_only: bool,
) -> impl Iterator<Item = CreationSequence> + Clone {
    assert!(order >= 1, "order must be positive");
    let (count, step, offset) = enumeration_layout(order, connected_only);
    (0..count).map(move |k| CreationSequence::from_index(order, k * step + offset))
}

/// Number of sequences produced by [`enumerate_threshold`].
pub fn enumeration_count(order: usize, connected_only: bool) -> u64 {
    enumeration_layout(order, connected_only).0
}

/// `k`-th enumerated sequence; lets workers split the stream by index.
pub fn enumerated_at(order: usize, connected_only: bool, k: u64) -> CreationSequence {
    let (_, step, offset) = enumeration_layout(order, connected_only);
    CreationSequence::from_index(order, k * step + offset)
}

fn enumeration_layout(order: usize, connected_only: bool) -> (u64, u64, u64) {
    assert!(order <= 64, "enumeration limited to order <= 64");
    let total = 1u64 << (order - 1);
    if connected_only && order >= 2 {
        // Odd indices are exactly the sequences whose last bit is set.
        (total / 2, 2, 1)
    } else {
        (total, 1, 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Symbol::{Dominating as D, Isolated as I};

    #[test]
    fn parse_examples() {
        assert_eq!(CreationSequence::parse("0101").unwrap().symbols(), &[I, D, I, D]);
        assert_eq!(CreationSequence::parse("1101").unwrap().symbols(), &[I, D, I, D]);
        assert_eq!(CreationSequence::parse("01x1"), Err(Error::InvalidCharacter(2)));
        assert_eq!(CreationSequence::parse(""), Err(Error::EmptyInput));
    }

    #[test]
    fn complement_examples() {
        let s = CreationSequence::parse("01").unwrap();
        assert_eq!(s.complement().to_string(), "00");
        let paw = CreationSequence::parse("0101").unwrap();
        assert_eq!(paw.complement().to_string(), "0010");
    }

    #[test]
    fn complement_is_involution_up_to_ten() {
        for n in 1..=10 {
            for s in enumerate_threshold(n, false) {
                assert_eq!(s.complement().complement(), s);
            }
        }
    }

    #[test]
    fn complement_degrees_are_reflected() {
        for n in 1..=9 {
            for s in enumerate_threshold(n, false) {
                let d = s.degrees();
                let dc = s.complement().degrees();
                for v in 0..n {
                    assert_eq!(dc[v], n - 1 - d[v], "{s} vertex {v}");
                }
            }
        }
    }

    #[test]
    fn enumeration_orders() {
        let two: Vec<String> = enumerate_threshold(2, false).map(|s| s.to_string()).collect();
        assert_eq!(two, ["00", "01"]);
        let four: Vec<_> = enumerate_threshold(4, false).collect();
        assert_eq!(four.len(), 8);
        assert_eq!(four.iter().filter(|s| s.is_connected()).count(), 4);
        let one: Vec<String> = enumerate_threshold(1, true).map(|s| s.to_string()).collect();
        assert_eq!(one, ["0"]);
    }

    #[test]
    fn enumeration_counts_distinct_and_sorted() {
        for n in 1..=12 {
            let all: Vec<_> = enumerate_threshold(n, false).collect();
            assert_eq!(all.len() as u64, 1u64 << (n - 1));
            assert!(all.windows(2).all(|w| w[0].to_string() < w[1].to_string()));
            let conn: Vec<_> = enumerate_threshold(n, true).collect();
            let expect = if n >= 2 { 1u64 << (n - 2) } else { 1 };
            assert_eq!(conn.len() as u64, expect);
            assert!(conn.iter().all(|s| s.is_connected()));
            assert_eq!(enumeration_count(n, true), expect);
        }
    }

    #[test]
    fn degrees_of_paw() {
        let paw = CreationSequence::parse("0101").unwrap();
        let mut d = paw.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(d, [3, 2, 2, 1]);
        assert_eq!(paw.edge_count(), 4);
    }
}
