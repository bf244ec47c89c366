use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::array::IntersectionArray;
use crate::error::{Error, Result};

/// A simple undirected graph given by sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConcreteGraph {
    adj: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl ConcreteGraph {
    /// Builds a graph from an edge predicate evaluated on every unordered pair.
    pub fn from_predicate(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut adj = vec![Vec::new(); n];
        for x in 0..n {
            for y in (x + 1)..n {
                if adjacent(x, y) {
                    adj[x].push(y);
                    adj[y].push(x);
                }
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Self { adj, labels: None }
    }

    /// Validates symmetry, loops and duplicates.
    pub fn from_adjacency(mut adj: Vec<Vec<usize>>) -> Result<Self> {
        let n = adj.len();
        for (x, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Parse(format!("vertex {x} lists a neighbour twice")));
            }
            if let Some(&y) = list.iter().find(|&&y| y >= n || y == x) {
                return Err(Error::Parse(format!("vertex {x} has invalid neighbour {y}")));
            }
        }
        for x in 0..n {
            for &y in &adj[x] {
                if adj[y].binary_search(&x).is_err() {
                    return Err(Error::Parse(format!("edge {x}-{y} is not symmetric")));
                }
            }
        }
        Ok(Self { adj, labels: None })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        debug_assert_eq!(labels.len(), self.adj.len());
        self.labels = Some(labels);
        self
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbours(&self, x: usize) -> &[usize] {
        &self.adj[x]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn is_adjacent(&self, x: usize, y: usize) -> bool {
        self.adj[x].binary_search(&y).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    fn bfs(&self, src: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.n()];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(x) = queue.pop_front() {
            let dx = dist[x].unwrap();
            for &y in &self.adj[x] {
                if dist[y].is_none() {
                    dist[y] = Some(dx + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.bfs(0).iter().all(Option::is_some)
    }

    /// Connected components, each a sorted vertex list.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            let comp: Vec<usize> = self.bfs(s).iter().enumerate().filter_map(|(v, d)| d.map(|_| v)).collect();
            for &v in &comp {
                seen[v] = true;
            }
            out.push(comp);
        }
        out
    }

    /// Writes the `v: u1 u2 ...` adjacency-list format.
    pub fn to_adjacency_text(&self) -> String {
        let mut out = String::new();
        for (v, list) in self.adj.iter().enumerate() {
            let _ = write!(out, "{v}:");
            for u in list {
                let _ = write!(out, " {u}");
            }
            out.push('\n');
        }
        out
    }
}

/// Parses the adjacency-list fixture format: one line per vertex,
/// `v: u1 u2 ...`, vertices numbered `0..n` in order. Blank lines and lines
/// starting with `#` are ignored.
pub fn parse_adjacency_text(text: &str) -> Result<ConcreteGraph> {
    let mut adj = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (head, tail) =
            line.split_once(':').ok_or_else(|| Error::Parse(format!("line {}: missing ':'", lineno + 1)))?;
        let v: usize =
            head.trim().parse().map_err(|_| Error::Parse(format!("line {}: bad vertex {head:?}", lineno + 1)))?;
        if v != adj.len() {
            return Err(Error::Parse(format!("line {}: expected vertex {}, found {v}", lineno + 1, adj.len())));
        }
        let nbrs = tail
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("line {}: bad neighbour {t:?}", lineno + 1))))
            .collect::<Result<Vec<_>>>()?;
        adj.push(nbrs);
    }
    ConcreteGraph::from_adjacency(adj)
}

/// All-pairs shortest path lengths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, x: usize, y: usize) -> u32 {
        self.dist[x * self.n + y]
    }

    pub fn row(&self, x: usize) -> &[u32] {
        &self.dist[x * self.n..(x + 1) * self.n]
    }

    pub fn diameter(&self) -> u32 {
        self.dist.iter().copied().max().unwrap_or(0)
    }
}

/// BFS from every vertex.
pub fn distances(g: &ConcreteGraph) -> Result<DistanceMatrix> {
    let n = g.n();
    let mut dist = Vec::with_capacity(n * n);
    for x in 0..n {
        for d in g.bfs(x) {
            dist.push(d.ok_or(Error::DisconnectedInput)?);
        }
    }
    Ok(DistanceMatrix { n, dist })
}

/// Result of [`distance_power`]; disconnected results are flagged, not errors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistancePower {
    pub graph: ConcreteGraph,
    pub connected: bool,
}

/// The distance-`i` graph: same vertices, adjacent iff at distance exactly `i`.
pub fn distance_power(g: &ConcreteGraph, i: u32) -> Result<DistancePower> {
    let dm = distances(g)?;
    if i == 0 || i > dm.diameter() {
        return Err(Error::OutOfRange(format!("distance {i} outside 1..={}", dm.diameter())));
    }
    let mut graph = ConcreteGraph::from_predicate(g.n(), |x, y| dm.get(x, y) == i);
    graph.labels = g.labels.clone();
    let connected = graph.is_connected();
    Ok(DistancePower { graph, connected })
}

/// Brute-force distance-regularity test. For every ordered pair `(x, y)` at
/// distance `i` counts the neighbours of `y` at distance `i-1`, `i`, `i+1`
/// from `x`, and requires these to depend on `i` only. Returns the
/// intersection array, or `None` if the graph is not distance-regular, is
/// disconnected, or has diameter below 2.
pub fn verify_drg(g: &ConcreteGraph) -> Option<IntersectionArray> {
    let dm = distances(g).ok()?;
    let diam = dm.diameter() as usize;
    if diam < 2 {
        return None;
    }
    let mut b: Vec<Option<u64>> = vec![None; diam + 1];
    let mut c: Vec<Option<u64>> = vec![None; diam + 1];
    let mut a: Vec<Option<u64>> = vec![None; diam + 1];
    let set = |slot: &mut Option<u64>, v: u64| -> bool {
        match *slot {
            None => {
                *slot = Some(v);
                true
            }
            Some(w) => w == v,
        }
    };
    for x in 0..g.n() {
        let row = dm.row(x);
        for y in 0..g.n() {
            let i = row[y];
            let (mut lo, mut same, mut hi) = (0u64, 0u64, 0u64);
            for &z in g.neighbours(y) {
                match row[z] as i64 - i as i64 {
                    -1 => lo += 1,
                    0 => same += 1,
                    1 => hi += 1,
                    _ => unreachable!("BFS distances differ by at most one along an edge"),
                }
            }
            let i = i as usize;
            if !(set(&mut c[i], lo) && set(&mut a[i], same) && set(&mut b[i], hi)) {
                return None;
            }
        }
    }
    let b: Vec<u64> = b[..diam].iter().map(|v| v.unwrap()).collect();
    let c: Vec<u64> = c[1..].iter().map(|v| v.unwrap()).collect();
    IntersectionArray::new(b, c).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> ConcreteGraph {
        ConcreteGraph::from_predicate(n, |x, y| y == x + 1)
    }

    #[test]
    fn path_is_not_drg() {
        assert_eq!(verify_drg(&path(4)), None);
    }

    #[test]
    fn adjacency_text_round_trip() {
        let g = path(5);
        let text = g.to_adjacency_text();
        assert_eq!(text.lines().next(), Some("0: 1"));
        assert_eq!(parse_adjacency_text(&text).unwrap(), g);
    }

    #[test]
    fn adjacency_text_errors() {
        for bad in ["0: 1\n", "0: 0\n", "0: 1 1\n1: 0\n", "1: 0\n0: 1\n", "0 1\n", "0: x\n", "0: 1\n1:\n"] {
            assert!(parse_adjacency_text(bad).is_err(), "{bad:?}");
        }
        let g = parse_adjacency_text("# two vertices\n0: 1\n\n1: 0\n").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn disconnected_input() {
        let g = ConcreteGraph::from_predicate(4, |x, y| x + 2 == y);
        assert_eq!(distances(&g), Err(Error::DisconnectedInput));
        assert_eq!(g.components().len(), 2);
        assert_eq!(verify_drg(&g), None);
    }
}
