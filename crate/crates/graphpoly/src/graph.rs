//! Small labelled graphs, edge-subset enumeration, and the component
//! statistics `kappa` and `c` used by every defining sum.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({u}, {v}) is invalid for a graph on {n} vertices")]
    InvalidEdge { u: usize, v: usize, n: usize },
    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },
    #[error("enumeration over {edges} edges exceeds the budget of {budget}")]
    BudgetExceeded { edges: usize, budget: usize },
    #[error("bad graph input: {0}")]
    Parse(String),
}

/// Enumeration budgets. Brute-force sums are oracles, so there is no silent
/// truncation: exceeding a budget is an error, never a partial result.
#[derive(Debug, Clone, Copy)]
pub struct EnumBudget {
    /// Maximum edge count for `2^m` subset loops.
    pub max_subset_edges: usize,
    /// Maximum edge count for `3^m` disjoint-pair loops.
    pub max_pair_edges: usize,
}

impl Default for EnumBudget {
    fn default() -> Self {
        EnumBudget { max_subset_edges: 28, max_pair_edges: 15 }
    }
}

/// Simple labelled graph: vertex count plus an explicit edge list.
/// No loops, no multi-edges; endpoints live in `[0, n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmallGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl SmallGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        let mut normalized = Vec::with_capacity(edges.len());
        for (u, v) in edges {
            if u == v || u >= n || v >= n {
                return Err(GraphError::InvalidEdge { u, v, n });
            }
            let e = (u.min(v), u.max(v));
            if normalized.contains(&e) {
                return Err(GraphError::DuplicateEdge { u: e.0, v: e.1 });
            }
            normalized.push(e);
        }
        Ok(SmallGraph { n, edges: normalized })
    }

    /// `K_n`: all `n(n-1)/2` edges in lexicographic order.
    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::with_capacity(n.saturating_sub(1) * n / 2);
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v));
            }
        }
        SmallGraph { n, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Parse the text format `n m` followed by `m` lines `u v` (0-based).
    pub fn parse(input: &str) -> Result<Self, GraphError> {
        let mut numbers = input
            .split_whitespace()
            .map(|tok| tok.parse::<usize>().map_err(|_| GraphError::Parse(format!("bad token `{tok}`"))));
        let mut next = |what: &str| {
            numbers
                .next()
                .unwrap_or_else(|| Err(GraphError::Parse(format!("missing {what}"))))
        };
        let n = next("vertex count")?;
        let m = next("edge count")?;
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let u = next("edge endpoint")?;
            let v = next("edge endpoint")?;
            edges.push((u, v));
        }
        SmallGraph::new(n, edges)
    }

    /// Number of connected components of the spanning subgraph `(V, subset)`;
    /// isolated vertices count.
    pub fn component_count(&self, subset: EdgeSubset) -> usize {
        let mut uf = UnionFind::new(self.n);
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if subset.contains(i) {
                uf.union(u, v);
            }
        }
        uf.component_count()
    }

    /// Number of components of `(V, subset)` containing at least one edge.
    pub fn covered_component_count(&self, subset: EdgeSubset) -> usize {
        let mut uf = UnionFind::new(self.n);
        let mut covered = vec![false; self.n];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if subset.contains(i) {
                uf.union(u, v);
                covered[u] = true;
                covered[v] = true;
            }
        }
        let mut roots = Vec::new();
        for v in 0..self.n {
            if covered[v] {
                let r = uf.find(v);
                if !roots.contains(&r) {
                    roots.push(r);
                }
            }
        }
        roots.len()
    }

    /// All `2^m` edge subsets in deterministic mask order.
    pub fn edge_subsets(&self, budget: &EnumBudget) -> Result<impl Iterator<Item = EdgeSubset>, GraphError> {
        let m = self.edges.len();
        if m > budget.max_subset_edges {
            return Err(GraphError::BudgetExceeded { edges: m, budget: budget.max_subset_edges });
        }
        Ok((0u64..(1u64 << m)).map(EdgeSubset))
    }

    /// All `3^m` ordered pairs `(A, B)` of edge-disjoint subsets.
    pub fn disjoint_edge_subset_pairs(
        &self,
        budget: &EnumBudget,
    ) -> Result<impl Iterator<Item = (EdgeSubset, EdgeSubset)>, GraphError> {
        let m = self.edges.len();
        if m > budget.max_pair_edges {
            return Err(GraphError::BudgetExceeded { edges: m, budget: budget.max_pair_edges });
        }
        let total = 3u64.pow(m as u32);
        Ok((0..total).map(move |mut t| {
            let mut a = 0u64;
            let mut b = 0u64;
            for i in 0..m {
                match t % 3 {
                    1 => a |= 1 << i,
                    2 => b |= 1 << i,
                    _ => {}
                }
                t /= 3;
            }
            (EdgeSubset(a), EdgeSubset(b))
        }))
    }
}

/// Membership mask over a graph's edge list.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeSubset(pub u64);

impl EdgeSubset {
    pub const EMPTY: EdgeSubset = EdgeSubset(0);

    pub fn contains(&self, edge_index: usize) -> bool {
        self.0 >> edge_index & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn union(&self, other: &EdgeSubset) -> EdgeSubset {
        EdgeSubset(self.0 | other.0)
    }
}

/// Union-find with path halving and union by size.
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
    components: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), size: vec![1; n], components: n }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, x: usize, y: usize) {
        let mut rx = self.find(x);
        let mut ry = self.find(y);
        if rx == ry {
            return;
        }
        if self.size[rx] < self.size[ry] {
            std::mem::swap(&mut rx, &mut ry);
        }
        self.parent[ry] = rx;
        self.size[rx] += self.size[ry];
        self.components -= 1;
    }

    pub fn component_count(&self) -> usize {
        self.components
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_edge_counts() {
        assert_eq!(SmallGraph::complete(0).edge_count(), 0);
        assert_eq!(SmallGraph::complete(0).vertex_count(), 0);
        assert_eq!(SmallGraph::complete(3).edge_count(), 3);
        assert_eq!(SmallGraph::complete(5).edge_count(), 10);
    }

    #[test]
    fn component_counts() {
        let k4 = SmallGraph::complete(4);
        assert_eq!(k4.component_count(EdgeSubset::EMPTY), 4);
        assert_eq!(k4.component_count(EdgeSubset(1)), 3);
        let k3 = SmallGraph::complete(3);
        assert_eq!(k3.component_count(EdgeSubset(0b111)), 1);
    }

    #[test]
    fn covered_component_counts() {
        let k4 = SmallGraph::complete(4);
        assert_eq!(k4.covered_component_count(EdgeSubset::EMPTY), 0);
        // Edges of K4 in lexicographic order: (0,1),(0,2),(0,3),(1,2),(1,3),(2,3).
        // {(0,1),(2,3)} is a perfect matching.
        let matching = EdgeSubset(0b100001);
        assert_eq!(k4.covered_component_count(matching), 2);
        assert_eq!(k4.component_count(matching), 2);
        let k3 = SmallGraph::complete(3);
        assert_eq!(k3.covered_component_count(EdgeSubset(0b111)), 1);
    }

    #[test]
    fn subset_enumeration_counts() {
        let budget = EnumBudget::default();
        assert_eq!(SmallGraph::complete(3).edge_subsets(&budget).unwrap().count(), 8);
        assert_eq!(SmallGraph::complete(4).edge_subsets(&budget).unwrap().count(), 64);
        assert_eq!(SmallGraph::complete(0).edge_subsets(&budget).unwrap().count(), 1);
    }

    #[test]
    fn pair_enumeration_counts_and_disjointness() {
        let budget = EnumBudget::default();
        let k2 = SmallGraph::complete(2);
        assert_eq!(k2.disjoint_edge_subset_pairs(&budget).unwrap().count(), 3);
        let k3 = SmallGraph::complete(3);
        let pairs: Vec<_> = k3.disjoint_edge_subset_pairs(&budget).unwrap().collect();
        assert_eq!(pairs.len(), 27);
        assert!(pairs.iter().all(|(a, b)| a.0 & b.0 == 0));
        assert_eq!(SmallGraph::complete(0).disjoint_edge_subset_pairs(&budget).unwrap().count(), 1);
    }

    #[test]
    fn budget_is_enforced() {
        let tight = EnumBudget { max_subset_edges: 2, max_pair_edges: 2 };
        let k3 = SmallGraph::complete(3);
        assert!(matches!(k3.edge_subsets(&tight), Err(GraphError::BudgetExceeded { .. })));
        assert!(matches!(
            k3.disjoint_edge_subset_pairs(&tight),
            Err(GraphError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn parse_and_validation() {
        let g = SmallGraph::parse("3 2\n0 1\n1 2\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        assert!(SmallGraph::parse("2 1\n0 2\n").is_err());
        assert!(SmallGraph::parse("3 2\n0 1\n1 0\n").is_err());
        assert!(SmallGraph::parse("2 1\n1 1\n").is_err());
    }

    #[test]
    fn kappa_minus_c_counts_isolated_vertices() {
        let k4 = SmallGraph::complete(4);
        let budget = EnumBudget::default();
        for a in k4.edge_subsets(&budget).unwrap() {
            let kappa = k4.component_count(a);
            let c = k4.covered_component_count(a);
            let mut covered = vec![false; 4];
            for (i, &(u, v)) in k4.edges().iter().enumerate() {
                if a.contains(i) {
                    covered[u] = true;
                    covered[v] = true;
                }
            }
            let isolated = covered.iter().filter(|&&x| !x).count();
            assert_eq!(kappa - c, isolated);
            assert!(c <= kappa);
            assert!(kappa >= 1 && kappa <= 4);
            // Rank/nullity nonnegativity for spanning subgraphs.
            assert!(a.len() + kappa >= 4);
        }
    }
}
