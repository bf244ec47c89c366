//! Named distance-regular graphs at vertex level.

use crate::error::{Error, Result};

use super::graph::{distance_power, ConcreteGraph};

/// Vertex cap for constructions.
pub const MAX_VERTICES: usize = 20_000;

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// All `k`-subsets of `0..v` as bitmasks, in lexicographic order of the
/// sorted element lists.
fn subsets(v: usize, k: usize) -> Vec<u32> {
    fn rec(start: usize, v: usize, k: usize, cur: u32, out: &mut Vec<u32>) {
        if k == 0 {
            out.push(cur);
            return;
        }
        for e in start..=(v - k) {
            rec(e + 1, v, k - 1, cur | (1 << e), out);
        }
    }
    let mut out = Vec::with_capacity(binomial(v, k));
    rec(0, v, k, 0, &mut out);
    out
}

fn subset_label(mask: u32) -> String {
    let elems: Vec<String> = (0..32).filter(|e| mask & (1 << e) != 0).map(|e| e.to_string()).collect();
    format!("{{{}}}", elems.join(","))
}

/// Johnson graph `J(v, k)`: `k`-subsets of a `v`-set, adjacent iff they
/// share `k-1` elements.
pub fn johnson_graph(v: usize, k: usize) -> Result<ConcreteGraph> {
    if k == 0 || k >= v || v > 12 {
        return Err(Error::OutOfRange(format!("J({v},{k}) needs 1 <= k <= v-1 and v <= 12")));
    }
    let sets = subsets(v, k);
    let g = ConcreteGraph::from_predicate(sets.len(), |x, y| (sets[x] & sets[y]).count_ones() as usize == k - 1);
    Ok(g.with_labels(sets.iter().map(|&m| subset_label(m)).collect()))
}

fn kneser(v: usize, k: usize) -> ConcreteGraph {
    let sets = subsets(v, k);
    ConcreteGraph::from_predicate(sets.len(), |x, y| sets[x] & sets[y] == 0)
        .with_labels(sets.iter().map(|&m| subset_label(m)).collect())
}

/// The Odd graph `O_4`: 3-subsets of a 7-set, adjacent iff disjoint.
pub fn kneser_graph_73() -> ConcreteGraph {
    kneser(7, 3)
}

/// The Petersen graph as the Kneser graph `K(5,2)`.
pub fn petersen_graph() -> ConcreteGraph {
    kneser(5, 2)
}

fn tuples(d: usize, s: usize) -> Vec<Vec<usize>> {
    let total = s.pow(d as u32);
    (0..total)
        .map(|mut idx| {
            let mut t = vec![0; d];
            for slot in t.iter_mut().rev() {
                *slot = idx % s;
                idx /= s;
            }
            t
        })
        .collect()
}

fn hamming_distance(x: &[usize], y: &[usize]) -> usize {
    x.iter().zip(y).filter(|(a, b)| a != b).count()
}

/// Hamming graph `H(d, s)`: `d`-tuples over an `s`-set, adjacent iff they
/// differ in exactly one coordinate.
pub fn hamming_graph(d: usize, s: usize) -> Result<ConcreteGraph> {
    let too_big = (s as u128).checked_pow(d as u32).is_none_or(|n| n > MAX_VERTICES as u128);
    if d == 0 || s < 2 || too_big {
        return Err(Error::OutOfRange(format!("H({d},{s}) needs d >= 1, s >= 2, s^d <= {MAX_VERTICES}")));
    }
    let ts = tuples(d, s);
    let g = ConcreteGraph::from_predicate(ts.len(), |x, y| hamming_distance(&ts[x], &ts[y]) == 1);
    Ok(g.with_labels(ts.iter().map(|t| t.iter().map(usize::to_string).collect::<String>()).collect()))
}

/// The `d`-cube, `H(d, 2)`.
pub fn hypercube(d: usize) -> Result<ConcreteGraph> {
    hamming_graph(d, 2)
}

pub fn cycle_graph(n: usize) -> Result<ConcreteGraph> {
    if !(3..=MAX_VERTICES).contains(&n) {
        return Err(Error::OutOfRange(format!("cycle length {n} must be at least 3")));
    }
    Ok(ConcreteGraph::from_predicate(n, |x, y| y == x + 1 || (x == 0 && y == n - 1)))
}

/// `K_{m,m}` minus a perfect matching; vertices `0..m` on one side,
/// `m..2m` on the other, `i` unmatched with `m + i`.
pub fn crown_graph(m: usize) -> Result<ConcreteGraph> {
    if !(3..=MAX_VERTICES / 2).contains(&m) {
        return Err(Error::OutOfRange(format!("crown graph needs m >= 3, got {m}")));
    }
    Ok(ConcreteGraph::from_predicate(2 * m, |x, y| x < m && y >= m && y - m != x))
}

/// Halved `d`-cube: even-weight binary `d`-tuples, adjacent iff at Hamming
/// distance 2.
pub fn halved_cube(d: usize) -> Result<ConcreteGraph> {
    if !(4..=8).contains(&d) {
        return Err(Error::OutOfRange(format!("halved cube needs 4 <= d <= 8, got {d}")));
    }
    let words: Vec<u32> = (0u32..(1 << d)).filter(|w| w.count_ones() % 2 == 0).collect();
    let g = ConcreteGraph::from_predicate(words.len(), |x, y| (words[x] ^ words[y]).count_ones() == 2);
    Ok(g.with_labels(words.iter().map(|w| format!("{w:0d$b}")).collect()))
}

/// Heawood graph: point-line incidence graph of the Fano plane, lines
/// `{i, i+1, i+3} mod 7`. Points are `0..7`, lines `7..14`.
pub fn heawood_graph() -> ConcreteGraph {
    ConcreteGraph::from_predicate(14, |x, y| {
        if x >= 7 || y < 7 {
            return false;
        }
        let line = y - 7;
        [0, 1, 3].iter().any(|&s| (line + s) % 7 == x)
    })
}

/// One graph in the bundled atlas.
#[derive(Debug, Clone)]
pub struct AtlasEntry {
    pub name: String,
    pub graph: ConcreteGraph,
}

/// Builds a graph from its atlas name, e.g. `johnson-6-3`, `hamming-2-3`,
/// `cube-3`, `cycle-7`, `crown-5`, `halved-6`, `halved-6-d2`, `kneser-7-3`,
/// `petersen`, `heawood`.
pub fn by_name(name: &str) -> Result<ConcreteGraph> {
    let bad = || Error::Parse(format!("unknown atlas graph {name:?}; bundled: {}", ATLAS_NAMES.join(", ")));
    let parts: Vec<&str> = name.trim().split('-').collect();
    let num = |s: &str| s.parse::<usize>().map_err(|_| bad());
    match parts.as_slice() {
        ["petersen"] => Ok(petersen_graph()),
        ["heawood"] => Ok(heawood_graph()),
        ["kneser", "7", "3"] => Ok(kneser_graph_73()),
        ["johnson", v, k] => johnson_graph(num(v)?, num(k)?),
        ["hamming", d, s] => hamming_graph(num(d)?, num(s)?),
        ["cube", d] => hypercube(num(d)?),
        ["cycle", n] => cycle_graph(num(n)?),
        ["crown", m] => crown_graph(num(m)?),
        ["halved", d] => halved_cube(num(d)?),
        ["halved", d, "d2"] => Ok(distance_power(&halved_cube(num(d)?)?, 2)?.graph),
        _ => Err(bad()),
    }
}

/// Names of the bundled atlas graphs: diameters 2 through 7, at most 128
/// vertices each.
pub const ATLAS_NAMES: &[&str] = &[
    "petersen",
    "johnson-4-2",
    "hamming-2-3",
    "halved-4",
    "cube-3",
    "johnson-6-3",
    "johnson-8-3",
    "cycle-6",
    "cycle-7",
    "kneser-7-3",
    "heawood",
    "crown-4",
    "crown-5",
    "crown-6",
    "crown-7",
    "crown-8",
    "halved-6",
    "halved-6-d2",
    "hamming-3-3",
    "cube-4",
    "cycle-8",
    "johnson-8-4",
    "cube-5",
    "cycle-10",
    "cube-6",
    "cycle-12",
    "cube-7",
    "cycle-14",
];

pub fn atlas() -> Vec<AtlasEntry> {
    ATLAS_NAMES
        .iter()
        .map(|&name| AtlasEntry { name: name.to_string(), graph: by_name(name).expect("bundled atlas name") })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas::graph::{distances, verify_drg};

    fn array_of(g: &ConcreteGraph) -> String {
        verify_drg(g).map(|a| a.to_string()).unwrap_or_default()
    }

    #[test]
    fn johnson_graphs() {
        let g = johnson_graph(6, 3).unwrap();
        assert_eq!(g.n(), 20);
        assert_eq!(array_of(&g), "{9,4,1;1,4,9}");
        let g = johnson_graph(8, 3).unwrap();
        assert_eq!(g.n(), 56);
        assert_eq!(array_of(&g), "{15,8,3;1,4,9}");
        let g = johnson_graph(4, 2).unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(array_of(&g), "{4,1;1,4}");
        assert!(johnson_graph(13, 3).is_err());
        assert!(johnson_graph(6, 6).is_err());
        assert_eq!(g.labels().unwrap()[0], "{0,1}");
    }

    #[test]
    fn hamming_graphs() {
        assert_eq!(array_of(&hamming_graph(3, 2).unwrap()), "{3,2,1;1,2,3}");
        assert_eq!(array_of(&hamming_graph(2, 3).unwrap()), "{4,2;1,2}");
        let g = hamming_graph(7, 2).unwrap();
        assert_eq!(distances(&g).unwrap().diameter(), 7);
        assert!(hamming_graph(15, 2).is_err());
        assert!(hamming_graph(3, 1).is_err());
    }

    #[test]
    fn cycles() {
        assert_eq!(array_of(&cycle_graph(7).unwrap()), "{2,1,1;1,1,1}");
        assert_eq!(array_of(&cycle_graph(8).unwrap()), "{2,1,1,1;1,1,1,2}");
        assert_eq!(array_of(&cycle_graph(4).unwrap()), "{2,1;1,2}");
        assert_eq!(distances(&cycle_graph(8).unwrap()).unwrap().diameter(), 4);
        assert!(cycle_graph(2).is_err());
    }

    #[test]
    fn odd_graph() {
        let g = kneser_graph_73();
        assert_eq!(g.n(), 35);
        assert!((0..35).all(|v| g.neighbours(v).len() == 4));
        assert_eq!(distances(&g).unwrap().diameter(), 3);
        let ia = verify_drg(&g).unwrap();
        assert_eq!(ia.to_string(), "{4,3,3;1,1,2}");
        assert!(!ia.is_antipodal() && !ia.is_bipartite());
    }

    #[test]
    fn crown_graphs() {
        assert_eq!(array_of(&crown_graph(4).unwrap()), "{3,2,1;1,2,3}");
        assert_eq!(array_of(&crown_graph(5).unwrap()), "{4,3,1;1,3,4}");
        let ia = verify_drg(&crown_graph(6).unwrap()).unwrap();
        assert_eq!(ia.antipodal_r(), Some(2));
        assert!(ia.is_bipartite());
        assert!(crown_graph(2).is_err());
    }

    #[test]
    fn halved_cubes() {
        let g = halved_cube(6).unwrap();
        assert_eq!(g.n(), 32);
        assert_eq!(array_of(&g), "{15,6,1;1,6,15}");
        let g = halved_cube(4).unwrap();
        assert_eq!(g.n(), 8);
        assert_eq!(array_of(&g), "{6,1;1,6}");
        assert!(halved_cube(3).is_err() && halved_cube(9).is_err());
    }

    #[test]
    fn distance_powers() {
        let p = distance_power(&halved_cube(6).unwrap(), 2).unwrap();
        assert!(p.connected);
        assert_eq!(array_of(&p.graph), "{15,8,1;1,8,15}");

        let c7 = cycle_graph(7).unwrap();
        let p = distance_power(&c7, 2).unwrap();
        assert!(p.connected);
        assert_eq!(array_of(&p.graph), "{2,1,1;1,1,1}");

        let p = distance_power(&hypercube(3).unwrap(), 3).unwrap();
        assert!(!p.connected);
        assert_eq!(p.graph.edge_count(), 4);
        assert!(p.graph.components().iter().all(|c| c.len() == 2));

        let g = johnson_graph(6, 3).unwrap();
        assert_eq!(distance_power(&g, 1).unwrap().graph, g);
        assert!(distance_power(&g, 4).is_err());
        assert!(distance_power(&g, 0).is_err());
    }

    #[test]
    fn petersen_and_heawood() {
        assert_eq!(array_of(&petersen_graph()), "{3,2;1,1}");
        assert_eq!(array_of(&heawood_graph()), "{3,2,2;1,1,3}");
    }

    #[test]
    fn names() {
        assert!(by_name("nope").is_err());
        assert!(by_name("cycle-x").is_err());
        assert_eq!(by_name("cube-3").unwrap(), hypercube(3).unwrap());
    }
}
