//! Bipartite graph of a matrix's zero pattern, graph-based extremality tests,
//! and fill.

use std::collections::{BTreeSet, VecDeque};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::extremes::center_row;
use crate::matrix::Matrix;
use crate::rational::{self, Rational};

/// Row vertices `r_1..r_m`, column vertices `s_1..s_n`, and edges `(i, j)`
/// (1-based) joining `r_i` to `s_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    row_count: usize,
    col_count: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl BipartiteGraph {
    pub fn new(row_count: usize, col_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let edges: BTreeSet<(usize, usize)> = edges.into_iter().collect();
        if let Some(&(i, j)) = edges
            .iter()
            .find(|&&(i, j)| !(1..=row_count).contains(&i) || !(1..=col_count).contains(&j))
        {
            return Err(Error::IndexOutOfRange(format!(
                "edge r{i}-s{j} outside {row_count} rows and {col_count} columns"
            )));
        }
        Ok(Self {
            row_count,
            col_count,
            edges,
        })
    }

    pub fn row_count(&self) -> usize {
        self.row_count
    }

    pub fn col_count(&self) -> usize {
        self.col_count
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn row_degree(&self, i: usize) -> usize {
        self.edges.iter().filter(|e| e.0 == i).count()
    }

    pub fn col_degree(&self, j: usize) -> usize {
        self.edges.iter().filter(|e| e.1 == j).count()
    }

    fn vertex_count(&self) -> usize {
        self.row_count + self.col_count
    }

    // Rows occupy vertex ids 0..m, columns m..m+n.
    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for &(i, j) in &self.edges {
            let (r, s) = (i - 1, self.row_count + j - 1);
            adj[r].push(s);
            adj[s].push(r);
        }
        adj
    }
}

/// Edge `r_i s_j` iff `a_{i,j} != 0`.
pub fn bipartite_of(a: &Matrix) -> BipartiteGraph {
    let edges = (1..=a.rows())
        .flat_map(|i| (1..=a.cols()).map(move |j| (i, j)))
        .filter(|&(i, j)| !a.entry(i, j).is_zero());
    BipartiteGraph::new(a.rows(), a.cols(), edges).expect("edges come from matrix cells")
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(size: usize) -> Self {
        Self {
            parent: (0..size).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// False when `a` and `b` were already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

pub fn is_forest(g: &BipartiteGraph) -> bool {
    let mut sets = DisjointSets::new(g.vertex_count());
    g.edges.iter().all(|&(i, j)| sets.union(i - 1, g.row_count + j - 1))
}

fn farthest_from(adj: &[Vec<usize>], start: usize, seen: &mut [bool]) -> (usize, usize) {
    let mut dist = vec![usize::MAX; adj.len()];
    let mut queue = VecDeque::from([start]);
    dist[start] = 0;
    seen[start] = true;
    let mut best = (start, 0);
    while let Some(v) = queue.pop_front() {
        if dist[v] > best.1 {
            best = (v, dist[v]);
        }
        for &w in &adj[v] {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    best
}

/// Longest simple path, in edges, of a forest: two sweeps per component.
pub fn longest_path(g: &BipartiteGraph) -> Result<usize> {
    if !is_forest(g) {
        return Err(Error::NotForest);
    }
    let adj = g.adjacency();
    let mut visited = vec![false; adj.len()];
    let mut longest = 0;
    for v in 0..adj.len() {
        if visited[v] {
            continue;
        }
        let (far, _) = farthest_from(&adj, v, &mut visited);
        let mut scratch = vec![false; adj.len()];
        let (_, diameter) = farthest_from(&adj, far, &mut scratch);
        longest = longest.max(diameter);
    }
    Ok(longest)
}

/// `|E| / (m n)`.
pub fn fill(g: &BipartiteGraph) -> Rational {
    rational::ratio(g.edge_count() as i64, (g.row_count * g.col_count) as i64)
}

/// Forest whose row vertices are all leaves.
pub fn is_extreme_stochastic_via_graph(a: &Matrix) -> Result<bool> {
    if !a.is_stochastic() {
        return Err(Error::NotStochastic);
    }
    let g = bipartite_of(a);
    Ok(is_forest(&g) && (1..=g.row_count).all(|i| g.row_degree(i) == 1))
}

/// Even `m`: as for the stochastic case. Odd `m`: forest, center row vertex of
/// degree 1 or 2, every other row vertex a leaf.
pub fn is_extreme_centro_via_graph(a: &Matrix) -> Result<bool> {
    if !a.is_stochastic() {
        return Err(Error::NotStochastic);
    }
    if !a.is_centrosymmetric() {
        return Err(Error::NotCentrosymmetric);
    }
    let Some(center) = center_row(a.rows()) else {
        return is_extreme_stochastic_via_graph(a);
    };
    let g = bipartite_of(a);
    let degrees_ok = (1..=g.row_count).all(|i| {
        let d = g.row_degree(i);
        if i == center {
            d == 1 || d == 2
        } else {
            d == 1
        }
    });
    Ok(is_forest(&g) && degrees_ok)
}
