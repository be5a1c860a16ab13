use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Simple graph on vertices `1..=n`; edges stored as sorted pairs `(i, j)`
/// with `i < j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut out = Vec::new();
        for (a, b) in edges {
            if a == 0 || b == 0 || a > n || b > n {
                return Err(Error::InvalidSpec(format!("edge ({a}, {b}) out of range 1..={n}")));
            }
            if a == b {
                return Err(Error::InvalidInput(format!("loop at vertex {a}")));
            }
            out.push((a.min(b), a.max(b)));
        }
        out.sort_unstable();
        if let Some(w) = out.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput(format!("repeated edge {:?}", w[0])));
        }
        Ok(Self { n, edges: out })
    }

    pub fn empty(n: usize) -> Self {
        Self { n, edges: Vec::new() }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
        Self { n, edges }
    }

    pub fn path(n: usize) -> Self {
        Self {
            n,
            edges: (1..n).map(|i| (i, i + 1)).collect(),
        }
    }

    /// The graph whose edges are the set bits of `mask` over the pairs of
    /// [`Graph::complete`] in order.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        let edges = Self::complete(n)
            .edges
            .into_iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, e)| e)
            .collect();
        Self { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Parses `vertices n` followed by one `i j` edge per line (1-based).
    /// `#` comments and blank lines are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let parse_err = |line: usize, message: String| Error::Parse { line, message };
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (no, first) = lines
            .next()
            .ok_or_else(|| parse_err(0, "missing `vertices n` header".into()))?;
        let n = match first.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["vertices", n] => n
                .parse::<usize>()
                .map_err(|_| parse_err(no, format!("bad vertex count {n:?}")))?,
            _ => return Err(parse_err(no, "expected `vertices n`".into())),
        };
        let mut edges = Vec::new();
        for (no, line) in lines {
            let ends: Vec<usize> = line
                .split_whitespace()
                .map(|t| t.parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| parse_err(no, format!("bad edge {line:?}")))?;
            let [a, b] = ends.as_slice() else {
                return Err(parse_err(no, "expected `i j`".into()));
            };
            if *a == 0 || *b == 0 || *a > n || *b > n || a == b {
                return Err(parse_err(no, format!("invalid edge ({a}, {b}) for {n} vertices")));
            }
            edges.push((*a, *b));
        }
        Self::new(n, edges).map_err(|e| parse_err(0, e.to_string()))
    }
}
