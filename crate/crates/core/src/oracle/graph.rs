use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scheme::{IntersectionArray, SchemeSpec};
use crate::spectral::catalog;

use super::cayley::cayley_graph;

pub const MAX_VERTICES: usize = 2000;

/// Simple undirected regular connected graph with a distinguished root.
#[derive(Debug, Clone, PartialEq)]
pub struct VertexGraph {
    pub neighbours: Vec<Vec<usize>>,
    pub labels: Vec<String>,
    pub root: usize,
    /// Class-union index of every vertex for Cayley graphs.
    pub class_of: Option<Vec<usize>>,
}

impl VertexGraph {
    /// Builds from an edge predicate and checks the type invariants.
    pub fn from_predicate(labels: Vec<String>, adjacent: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let n = labels.len();
        if n > MAX_VERTICES {
            return Err(Error::TooLarge(n));
        }
        let neighbours = (0..n)
            .map(|i| (0..n).filter(|&j| j != i && adjacent(i, j)).collect())
            .collect();
        Self::from_neighbours(labels, neighbours)
    }

    pub fn from_neighbours(labels: Vec<String>, neighbours: Vec<Vec<usize>>) -> Result<Self> {
        let n = labels.len();
        if n > MAX_VERTICES {
            return Err(Error::TooLarge(n));
        }
        let g = VertexGraph {
            neighbours,
            labels,
            root: 0,
            class_of: None,
        };
        for (i, adj) in g.neighbours.iter().enumerate() {
            if adj.contains(&i) {
                return Err(Error::InconsistentInputs(format!("loop at vertex {i}")));
            }
            if adj.iter().any(|&j| !g.neighbours[j].contains(&i)) {
                return Err(Error::NonSymmetricGeneratingSet);
            }
        }
        let degree = g.neighbours.first().map_or(0, Vec::len);
        if g.neighbours.iter().any(|a| a.len() != degree) {
            return Err(Error::InconsistentInputs("graph is not regular".into()));
        }
        if bfs_strata(&g).distances.contains(&usize::MAX) {
            return Err(Error::Disconnected);
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.neighbours.len()
    }

    pub fn degree(&self) -> usize {
        self.neighbours[self.root].len()
    }

    pub fn adjacency(&self) -> Matrix {
        let n = self.order();
        let mut a = Matrix::zeros(n, n);
        for (i, adj) in self.neighbours.iter().enumerate() {
            for &j in adj {
                a[(i, j)] = 1.0;
            }
        }
        a
    }

    pub fn complete(n: usize) -> Result<Self> {
        Self::from_predicate((0..n).map(|i| i.to_string()).collect(), |_, _| true)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        Self::from_predicate((0..n).map(|i| i.to_string()).collect(), |i, j| {
            (i + 1) % n == j || (j + 1) % n == i
        })
    }

    pub fn complete_bipartite(m: usize) -> Result<Self> {
        Self::from_predicate((0..2 * m).map(|i| i.to_string()).collect(), |i, j| (i < m) != (j < m))
    }

    /// `k`-subsets of `{1..v}`, adjacent when they meet in `meet` points.
    fn subsets(v: usize, k: usize, meet: usize) -> Result<Self> {
        let sets: Vec<u64> = (0u64..1 << v).filter(|s| s.count_ones() as usize == k).collect();
        let labels = sets
            .iter()
            .map(|s| {
                let items: Vec<String> = (0..v)
                    .filter(|i| s >> i & 1 == 1)
                    .map(|i| (i + 1).to_string())
                    .collect();
                format!("{{{}}}", items.join(","))
            })
            .collect();
        Self::from_predicate(labels, |i, j| (sets[i] & sets[j]).count_ones() as usize == meet)
    }

    /// Kneser graph: `k`-subsets adjacent when disjoint. `kneser(5, 2)` is
    /// the Petersen graph.
    pub fn kneser(v: usize, k: usize) -> Result<Self> {
        if v > 20 || 2 * k > v {
            return Err(Error::BadParams(format!("kneser({v},{k})")));
        }
        Self::subsets(v, k, 0)
    }

    /// Johnson graph `J(v, d)`: adjacent when `d - |x ∩ y| = 1`.
    pub fn johnson(v: usize, d: usize) -> Result<Self> {
        if v > 20 || d == 0 || 2 * d > v {
            return Err(Error::BadParams(format!("johnson({v},{d})")));
        }
        Self::subsets(v, d, d - 1)
    }

    /// Hamming graph `H(d, n)`: words of length `d` over `n` letters,
    /// adjacent when they differ in one position.
    pub fn hamming(d: usize, n: usize) -> Result<Self> {
        let total = (n as f64).powi(d as i32);
        if total > MAX_VERTICES as f64 {
            return Err(Error::TooLarge(total as usize));
        }
        let words: Vec<Vec<usize>> = (0..total as usize)
            .map(|mut x| {
                (0..d)
                    .map(|_| {
                        let c = x % n;
                        x /= n;
                        c
                    })
                    .collect()
            })
            .collect();
        let labels = words
            .iter()
            .map(|w| w.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(""))
            .collect();
        Self::from_predicate(labels, |i, j| {
            words[i].iter().zip(&words[j]).filter(|(a, b)| a != b).count() == 1
        })
    }
}

/// Strata `Γ_0 .. Γ_d` around the root; for Cayley graphs the same type
/// holds the class-union partition, with `distances` holding the part index.
#[derive(Debug, Clone, PartialEq)]
pub struct DistancePartition {
    pub strata: Vec<Vec<usize>>,
    pub distances: Vec<usize>,
}

impl DistancePartition {
    pub fn from_levels(levels: Vec<usize>) -> Self {
        let count = levels.iter().copied().max().map_or(0, |m| m + 1);
        let mut strata = vec![Vec::new(); count];
        for (v, &l) in levels.iter().enumerate() {
            strata[l].push(v);
        }
        DistancePartition {
            strata,
            distances: levels,
        }
    }

    pub fn sizes(&self) -> Vec<u64> {
        self.strata.iter().map(|s| s.len() as u64).collect()
    }

    /// Per-vertex counts of neighbours one stratum out and one stratum
    /// back, required to be constant on each stratum; returned as an
    /// intersection array.
    pub fn intersection_array(&self, g: &VertexGraph) -> Result<IntersectionArray> {
        let d = self.strata.len() - 1;
        let count =
            |v: usize, level: usize| g.neighbours[v].iter().filter(|&&u| self.distances[u] == level).count() as u64;
        let mut c = Vec::with_capacity(d);
        let mut b = Vec::with_capacity(d);
        for (k, stratum) in self.strata.iter().enumerate() {
            let constant = |f: &dyn Fn(usize) -> u64, what: &str| -> Result<u64> {
                let first = f(stratum[0]);
                if stratum.iter().any(|&v| f(v) != first) {
                    return Err(Error::NotDistanceRegular(format!("{what} varies on stratum {k}")));
                }
                Ok(first)
            };
            if k < d {
                c.push(constant(&|v| count(v, k + 1), "forward count")?);
            }
            if k > 0 {
                b.push(constant(&|v| count(v, k - 1), "backward count")?);
            }
            constant(&|v| count(v, k), "intra-stratum count")?;
        }
        IntersectionArray::new(c, b)
    }
}

pub fn bfs_strata(g: &VertexGraph) -> DistancePartition {
    let n = g.order();
    let mut dist = vec![usize::MAX; n];
    dist[g.root] = 0;
    let mut queue = VecDeque::from([g.root]);
    while let Some(v) = queue.pop_front() {
        for &u in &g.neighbours[v] {
            if dist[u] == usize::MAX {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
    if dist.contains(&usize::MAX) {
        return DistancePartition {
            strata: vec![],
            distances: dist,
        };
    }
    DistancePartition::from_levels(dist)
}

/// Explicit graph behind a scheme spec, where a construction is known.
pub fn build_graph(spec: &SchemeSpec) -> Result<VertexGraph> {
    let unknown = || Error::NotConstructible(spec.describe());
    match spec {
        SchemeSpec::FromIntersectionArray(_) => Err(unknown()),
        SchemeSpec::FromSrg { n, k, lambda, mu } => match (*n, *k, *lambda, *mu) {
            (10, 3, 0, 1) => VertexGraph::kneser(5, 2),
            (n, k, 0, m) if n == 2 * k && k == m => VertexGraph::complete_bipartite(k as usize),
            _ => Err(unknown()),
        },
        SchemeSpec::Product { n, copies } => VertexGraph::hamming(*copies as usize, *n as usize),
        SchemeSpec::Catalog { name, params } => {
            let p = catalog(name, params)?.params;
            match name.as_str() {
                "complete" => VertexGraph::complete(p[0] as usize),
                "cycle" => VertexGraph::cycle(p[0] as usize),
                "petersen" => VertexGraph::kneser(5, 2),
                "hamming" => VertexGraph::hamming(p[0] as usize, p[1] as usize),
                "johnson" => VertexGraph::johnson(p[0] as usize, p[1] as usize),
                _ => Err(unknown()),
            }
        }
        SchemeSpec::FromGroup { group, class } => {
            let table = group.character_table()?;
            let strata = group.strata(&table, *class)?;
            cayley_graph(*group, &strata)
        }
    }
}
