use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::sequence::{CreationSequence, Symbol};
use crate::error::{Error, Result};

/// Membership of a vertex in the nested split decomposition.
///
/// Indices are 1-based: `U(i)` is the coclique class whose neighborhood is
/// `V_1 ∪ … ∪ V_i`, and `V(1)` is adjacent to every `U` class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClassTag {
    U(usize),
    V(usize),
    Isolated,
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassTag::U(i) => write!(f, "U_{i}"),
            ClassTag::V(i) => write!(f, "V_{i}"),
            ClassTag::Isolated => write!(f, "isolated"),
        }
    }
}

impl FromStr for ClassTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::MalformedNsg(format!("bad class tag {s:?}"));
        let t = s.trim();
        if t.eq_ignore_ascii_case("isolated") {
            return Ok(ClassTag::Isolated);
        }
        let (kind, rest) = t.split_at(t.chars().next().map_or(0, char::len_utf8));
        let idx: usize = rest.trim_start_matches('_').parse().map_err(|_| bad())?;
        match kind {
            "U" | "u" => Ok(ClassTag::U(idx)),
            "V" | "v" => Ok(ClassTag::V(idx)),
            _ => Err(bad()),
        }
    }
}

/// `NSG(m_1..m_h; n_1..n_h)` plus a count of extra isolated vertices.
///
/// `m[i-1] = |U_i|` and `n[i-1] = |V_i|`. A disconnected threshold graph
/// has at most one non-trivial component, so the remaining vertices are
/// recorded in `isolated`. `h = 0` describes an edgeless graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NsgForm {
    m: Vec<usize>,
    n: Vec<usize>,
    isolated: usize,
}

impl NsgForm {
    pub fn new(m: Vec<usize>, n: Vec<usize>, isolated: usize) -> Result<Self> {
        if m.len() != n.len() {
            return Err(Error::InvalidNsg(format!(
                "{} coclique sizes but {} clique sizes",
                m.len(),
                n.len()
            )));
        }
        if m.iter().chain(&n).any(|&x| x == 0) {
            return Err(Error::InvalidNsg("class sizes must be positive".into()));
        }
        if m.is_empty() && isolated == 0 {
            return Err(Error::InvalidNsg("graph has no vertices".into()));
        }
        Ok(Self { m, n, isolated })
    }

    /// Coclique class sizes `m_1..m_h`.
    pub fn m(&self) -> &[usize] {
        &self.m
    }

    /// Clique class sizes `n_1..n_h`.
    pub fn n(&self) -> &[usize] {
        &self.n
    }

    pub fn isolated(&self) -> usize {
        self.isolated
    }

    pub fn h(&self) -> usize {
        self.m.len()
    }

    pub fn order(&self) -> usize {
        self.m.iter().sum::<usize>() + self.n.iter().sum::<usize>() + self.isolated
    }

    pub fn is_connected(&self) -> bool {
        self.isolated == 0 || (self.h() == 0 && self.isolated == 1)
    }

    /// Connected graph with every class a singleton, except `m_h = 2` for
    /// odd orders.
    pub fn is_anti_regular(&self) -> bool {
        let h = self.h();
        h >= 1
            && self.isolated == 0
            && self.n.iter().all(|&x| x == 1)
            && self.m[..h - 1].iter().all(|&x| x == 1)
            && (self.m[h - 1] == 1 || self.m[h - 1] == 2)
    }

    /// Size of a class, 0 if the class does not exist.
    pub fn class_size(&self, tag: ClassTag) -> usize {
        match tag {
            ClassTag::U(i) if (1..=self.h()).contains(&i) => self.m[i - 1],
            ClassTag::V(i) if (1..=self.h()).contains(&i) => self.n[i - 1],
            ClassTag::Isolated => self.isolated,
            _ => 0,
        }
    }

    /// Vertex positions of a class in the layout of [`Self::to_creation`].
    pub fn class_range(&self, tag: ClassTag) -> Option<Range<usize>> {
        let mut pos = 0;
        for k in (1..=self.h()).rev() {
            let u = pos..pos + self.m[k - 1];
            let v = u.end..u.end + self.n[k - 1];
            pos = v.end;
            if tag == ClassTag::U(k) {
                return Some(u);
            }
            if tag == ClassTag::V(k) {
                return Some(v);
            }
        }
        (tag == ClassTag::Isolated && self.isolated > 0).then(|| pos..pos + self.isolated)
    }

    /// Per-vertex class tags in the layout of [`Self::to_creation`].
    pub fn vertex_tags(&self) -> Vec<ClassTag> {
        let mut tags = Vec::with_capacity(self.order());
        for k in (1..=self.h()).rev() {
            tags.extend(std::iter::repeat_n(ClassTag::U(k), self.m[k - 1]));
            tags.extend(std::iter::repeat_n(ClassTag::V(k), self.n[k - 1]));
        }
        tags.extend(std::iter::repeat_n(ClassTag::Isolated, self.isolated));
        tags
    }

    /// Splits a creation sequence into its maximal runs.
    ///
    /// `0^{a_1} 1^{b_1} … 0^{a_h} 1^{b_h} 0^{a_{h+1}}` maps to
    /// `m_h = a_1, n_h = b_1, …, m_1 = a_h, n_1 = b_h` and
    /// `isolated = a_{h+1}`.
    pub fn from_creation(seq: &CreationSequence) -> Self {
        let mut runs: Vec<(Symbol, usize)> = Vec::new();
        for &s in seq.symbols() {
            match runs.last_mut() {
                Some((sym, len)) if *sym == s => *len += 1,
                _ => runs.push((s, 1)),
            }
        }
        let isolated = match runs.last() {
            Some(&(Symbol::Isolated, len)) => {
                runs.pop();
                len
            }
            _ => 0,
        };
        // Remaining runs alternate 0,1,0,1,... starting with 0.
        let mut m = Vec::with_capacity(runs.len() / 2);
        let mut n = Vec::with_capacity(runs.len() / 2);
        for pair in runs.chunks_exact(2).rev() {
            m.push(pair[0].1);
            n.push(pair[1].1);
        }
        Self { m, n, isolated }
    }

    pub fn to_creation(&self) -> CreationSequence {
        let mut symbols = Vec::with_capacity(self.order());
        for k in (0..self.h()).rev() {
            symbols.extend(std::iter::repeat_n(Symbol::Isolated, self.m[k]));
            symbols.extend(std::iter::repeat_n(Symbol::Dominating, self.n[k]));
        }
        symbols.extend(std::iter::repeat_n(Symbol::Isolated, self.isolated));
        CreationSequence::new(symbols).expect("valid NSG forms have at least one vertex")
    }

    /// The connected anti-regular graph `A_order`.
    pub fn anti_regular(order: usize) -> Result<Self> {
        if order < 2 {
            return Err(Error::OrderTooSmall(order));
        }
        let h = order / 2;
        let mut m = vec![1; h];
        if order % 2 == 1 {
            m[h - 1] = 2;
        }
        Ok(Self { m, n: vec![1; h], isolated: 0 })
    }

    /// Form of `G - v` for one vertex `v` of class `tag`.
    pub fn delete_from(&self, tag: ClassTag) -> Result<Self> {
        let range = self
            .class_range(tag)
            .filter(|r| !r.is_empty())
            .ok_or_else(|| Error::EmptyClass(tag.to_string()))?;
        let child = self
            .to_creation()
            .delete_vertex(range.start)
            .ok_or(Error::OrderTooSmall(1))?;
        Ok(Self::from_creation(&child))
    }

    pub fn parse(text: &str) -> Result<Self> {
        let bad = |msg: &str| Error::MalformedNsg(format!("{msg} in {text:?}"));
        let t = text.trim();
        let body = t
            .strip_prefix("nsg(")
            .or_else(|| t.strip_prefix("NSG("))
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| bad("expected nsg(...)"))?;
        let parts: Vec<&str> = body.split(';').collect();
        if parts.len() < 2 || parts.len() > 3 {
            return Err(bad("expected two or three ';'-separated fields"));
        }
        let list = |s: &str| -> Result<Vec<usize>> {
            let s = s.trim();
            if s.is_empty() {
                return Ok(Vec::new());
            }
            s.split(',')
                .map(|x| x.trim().parse::<usize>().map_err(|_| bad("bad class size")))
                .collect()
        };
        let m = list(parts[0])?;
        let n = list(parts[1])?;
        let isolated = match parts.get(2) {
            None => 0,
            Some(k) => k
                .trim()
                .strip_prefix('+')
                .ok_or_else(|| bad("isolated count must be written +k"))?
                .trim()
                .parse()
                .map_err(|_| bad("bad isolated count"))?,
        };
        Self::new(m, n, isolated)
    }
}

impl fmt::Display for NsgForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "nsg({};{}", join(&self.m), join(&self.n))?;
        if self.isolated > 0 {
            write!(f, ";+{}", self.isolated)?;
        }
        write!(f, ")")
    }
}

impl FromStr for NsgForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl From<&CreationSequence> for NsgForm {
    fn from(seq: &CreationSequence) -> Self {
        Self::from_creation(seq)
    }
}
