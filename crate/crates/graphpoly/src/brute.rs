//! Definition-faithful computation of each graph polynomial by direct
//! summation over edge subsets; ground truth for every faster engine path.
//!
//! All sums accumulate exponent-vector counts first and expand into a
//! [`LaurentPoly`] at the end, so results are bit-identical regardless of
//! enumeration schedule.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::LaurentPoly;
use crate::graph::{EnumBudget, GraphError, SmallGraph, UnionFind};

/// Tutte polynomial by the rank–nullity sum over all edge subsets:
/// sum of `(X-1)^{kappa(A)-kappa(G)} * (Y-1)^{|A|+kappa(A)-n}`.
pub fn tutte_brute(g: &SmallGraph, budget: &EnumBudget) -> Result<LaurentPoly, GraphError> {
    let n = g.vertex_count();
    assert!(n >= 1, "Tutte polynomial requires at least one vertex");
    let kappa_g = g.component_count(crate::graph::EdgeSubset(
        (1u64 << g.edge_count()).wrapping_sub(1),
    ));
    let mut counts: BTreeMap<(i64, i64), BigInt> = BTreeMap::new();
    for a in g.edge_subsets(budget)? {
        let kappa = g.component_count(a) as i64;
        let i = kappa - kappa_g as i64;
        let j = a.len() as i64 + kappa - n as i64;
        *counts.entry((i, j)).or_insert_with(BigInt::zero) += 1;
    }
    let x1 = LaurentPoly::var("X").sub(&LaurentPoly::one());
    let y1 = LaurentPoly::var("Y").sub(&LaurentPoly::one());
    Ok(expand_binomial_counts(&counts, &x1, &y1))
}

fn expand_binomial_counts(
    counts: &BTreeMap<(i64, i64), BigInt>,
    base_a: &LaurentPoly,
    base_b: &LaurentPoly,
) -> LaurentPoly {
    let max_a = counts.keys().map(|&(i, _)| i).max().unwrap_or(0) as u32;
    let max_b = counts.keys().map(|&(_, j)| j).max().unwrap_or(0) as u32;
    let pow_a = power_table(base_a, max_a);
    let pow_b = power_table(base_b, max_b);
    let mut acc = LaurentPoly::zero();
    for (&(i, j), c) in counts {
        let term = pow_a[i as usize].mul(&pow_b[j as usize]).scale(c);
        acc = acc.add(&term);
    }
    acc
}

fn power_table(base: &LaurentPoly, up_to: u32) -> Vec<LaurentPoly> {
    let mut table = Vec::with_capacity(up_to as usize + 1);
    table.push(LaurentPoly::one());
    for k in 1..=up_to {
        let next = table[k as usize - 1].mul(base);
        table.push(next);
    }
    table
}

/// Edge elimination polynomial by its subset expansion: the sum over pairs
/// of edge-disjoint subsets `(A, B)` that additionally share no vertex, of
/// `X^{kappa(A|B)-c(B)} * Y^{|A|+|B|-c(B)} * Z^{c(B)}`.
///
/// The vertex-disjointness condition is what makes the covered components of
/// `B` genuine components of `(V, A|B)`; without it the substitution
/// relating this polynomial to the covered-components polynomial fails
/// already on the triangle.
pub fn xi_brute(g: &SmallGraph, budget: &EnumBudget) -> Result<LaurentPoly, GraphError> {
    let vertex_masks: Vec<u64> = g
        .edges()
        .iter()
        .map(|&(u, v)| (1u64 << u) | (1u64 << v))
        .collect();
    let mut counts: BTreeMap<(i64, i64, i64), BigInt> = BTreeMap::new();
    for (a, b) in g.disjoint_edge_subset_pairs(budget)? {
        let mut mask_a = 0u64;
        let mut mask_b = 0u64;
        for (i, vm) in vertex_masks.iter().enumerate() {
            if a.contains(i) {
                mask_a |= vm;
            }
            if b.contains(i) {
                mask_b |= vm;
            }
        }
        if mask_a & mask_b != 0 {
            continue;
        }
        let kappa = g.component_count(a.union(&b)) as i64;
        let c = g.covered_component_count(b) as i64;
        let key = (kappa - c, a.len() as i64 + b.len() as i64 - c, c);
        *counts.entry(key).or_insert_with(BigInt::zero) += 1;
    }
    Ok(expand_monomial_counts(&counts))
}

fn expand_monomial_counts(counts: &BTreeMap<(i64, i64, i64), BigInt>) -> LaurentPoly {
    let mut acc = LaurentPoly::zero();
    for (&(x, y, z), c) in counts {
        let term = LaurentPoly::monomial(c.clone(), &[("X", x as i32), ("Y", y as i32), ("Z", z as i32)]);
        acc = acc.add(&term);
    }
    acc
}

/// Subgraph counting polynomial: sum over all subgraphs `H = (W, F)` of
/// `X^{|W|} * Y^{kappa(H)} * Z^{|F|}`, with `kappa(H)` counted on `W` alone.
pub fn s_brute(g: &SmallGraph, budget: &EnumBudget) -> Result<LaurentPoly, GraphError> {
    let n = g.vertex_count();
    // Total work is sum over W of 2^{|E[W]|}; bound it by the subset budget.
    let mut work: u128 = 0;
    for w_mask in 0u64..(1u64 << n) {
        let inner = g
            .edges()
            .iter()
            .filter(|&&(u, v)| w_mask >> u & 1 == 1 && w_mask >> v & 1 == 1)
            .count();
        work += 1u128 << inner;
        if work > (1u128 << budget.max_subset_edges) {
            return Err(GraphError::BudgetExceeded {
                edges: g.edge_count(),
                budget: budget.max_subset_edges,
            });
        }
    }

    let mut counts: BTreeMap<(i64, i64, i64), BigInt> = BTreeMap::new();
    for w_mask in 0u64..(1u64 << n) {
        let w_size = w_mask.count_ones() as i64;
        let inner: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .copied()
            .filter(|&(u, v)| w_mask >> u & 1 == 1 && w_mask >> v & 1 == 1)
            .collect();
        let vertices: Vec<usize> = (0..n).filter(|&v| w_mask >> v & 1 == 1).collect();
        for f_mask in 0u64..(1u64 << inner.len()) {
            let mut uf = UnionFind::new(n);
            for (i, &(u, v)) in inner.iter().enumerate() {
                if f_mask >> i & 1 == 1 {
                    uf.union(u, v);
                }
            }
            let mut roots: Vec<usize> = vertices.iter().map(|&v| uf.find(v)).collect();
            roots.sort_unstable();
            roots.dedup();
            let key = (w_size, roots.len() as i64, f_mask.count_ones() as i64);
            *counts.entry(key).or_insert_with(BigInt::zero) += 1;
        }
    }
    Ok(expand_monomial_counts(&counts))
}

/// Covered components polynomial: sum over edge subsets of
/// `X^{kappa(A)} * Y^{|A|} * Z^{c(A)}`.
pub fn c_brute(g: &SmallGraph, budget: &EnumBudget) -> Result<LaurentPoly, GraphError> {
    let mut counts: BTreeMap<(i64, i64, i64), BigInt> = BTreeMap::new();
    for a in g.edge_subsets(budget)? {
        let kappa = g.component_count(a) as i64;
        let c = g.covered_component_count(a) as i64;
        *counts.entry((kappa, a.len() as i64, c)).or_insert_with(BigInt::zero) += 1;
    }
    Ok(expand_monomial_counts(&counts))
}

/// Matching counts `m_k`: the number of `k`-subsets of edges that are
/// pairwise vertex-disjoint, enumerated by backtracking over the edge list.
pub fn matching_counts_brute(g: &SmallGraph, budget: &EnumBudget) -> Result<Vec<BigInt>, GraphError> {
    let m = g.edge_count();
    if m > budget.max_subset_edges {
        return Err(GraphError::BudgetExceeded { edges: m, budget: budget.max_subset_edges });
    }
    let masks: Vec<u64> = g.edges().iter().map(|&(u, v)| (1u64 << u) | (1u64 << v)).collect();
    let mut counts = vec![BigInt::zero(); g.vertex_count() / 2 + 1];
    counts[0] = BigInt::one();
    fn descend(masks: &[u64], from: usize, used: u64, size: usize, counts: &mut [BigInt]) {
        for i in from..masks.len() {
            if used & masks[i] == 0 {
                counts[size + 1] += 1;
                descend(masks, i + 1, used | masks[i], size + 1, counts);
            }
        }
    }
    descend(&masks, 0, 0, 0, &mut counts);
    while counts.len() > 1 && counts.last().map_or(false, Zero::is_zero) {
        counts.pop();
    }
    Ok(counts)
}

/// Dominating-set counts `d_k` by exhaustive vertex-subset enumeration.
pub fn dominating_counts_brute(g: &SmallGraph) -> Result<Vec<BigInt>, GraphError> {
    let n = g.vertex_count();
    if n > 20 {
        return Err(GraphError::BudgetExceeded { edges: n, budget: 20 });
    }
    let mut closed: Vec<u64> = (0..n).map(|v| 1u64 << v).collect();
    for &(u, v) in g.edges() {
        closed[u] |= 1 << v;
        closed[v] |= 1 << u;
    }
    let full = (1u64 << n).wrapping_sub(1);
    let mut counts = vec![BigInt::zero(); n + 1];
    for mask in 0u64..(1u64 << n) {
        let mut dominated = 0u64;
        for v in 0..n {
            if mask >> v & 1 == 1 {
                dominated |= closed[v];
            }
        }
        if dominated == full {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    Ok(counts)
}

/// Number of labelled `d`-regular graphs on `n` vertices by exhaustive
/// enumeration of all graphs on `[n]`.
pub fn regular_count_brute(n: usize, d: usize) -> Result<BigInt, GraphError> {
    if n > 7 {
        return Err(GraphError::BudgetExceeded { edges: n * (n - 1) / 2, budget: 21 });
    }
    if n * d % 2 != 0 {
        return Ok(BigInt::zero());
    }
    let g = SmallGraph::complete(n);
    let m = g.edge_count();
    let mut count = BigInt::zero();
    'mask: for mask in 0u64..(1u64 << m) {
        let mut deg = [0usize; 8];
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            if mask >> i & 1 == 1 {
                deg[u] += 1;
                deg[v] += 1;
                if deg[u] > d || deg[v] > d {
                    continue 'mask;
                }
            }
        }
        if deg[..n].iter().all(|&x| x == d) {
            count += 1;
        }
    }
    Ok(count)
}

/// Outcome of checking the substitution identities between the edge
/// elimination polynomial and the covered components polynomial on one graph.
#[derive(Debug, Clone)]
pub struct TrinksReport {
    /// `C(G;X,Y,Z) == xi(G;X,Y,XYZ-XY)` as polynomials.
    pub symbolic_ok: bool,
    /// Numeric checks of `xi(G;a,b,c) == C(G;a,b,c/(ab)+1)` at points with
    /// `ab | c`: `(a, b, c, xi_value, c_value)`.
    pub numeric: Vec<(i64, i64, i64, BigInt, BigInt)>,
}

impl TrinksReport {
    pub fn all_ok(&self) -> bool {
        self.symbolic_ok && self.numeric.iter().all(|(_, _, _, x, c)| x == c)
    }
}

/// Check both directions of the xi <-> C substitution relation on `g`.
///
/// Numeric points are `(a, b) in {1,2,3}^2`, `c = ab*t` for `t in {0,1,2}`.
pub fn verify_trinks(g: &SmallGraph, budget: &EnumBudget) -> Result<TrinksReport, GraphError> {
    let xi = xi_brute(g, budget)?;
    let c = c_brute(g, budget)?;
    let z_sub = LaurentPoly::monomial(1, &[("X", 1), ("Y", 1), ("Z", 1)])
        .sub(&LaurentPoly::monomial(1, &[("X", 1), ("Y", 1)]));
    let substituted = xi
        .substitute("Z", &z_sub)
        .expect("Z occurs with nonnegative exponents in xi");
    let symbolic_ok = substituted == c;

    let mut numeric = Vec::new();
    for a in 1i64..=3 {
        for b in 1i64..=3 {
            for t in 0i64..=2 {
                let cc = a * b * t;
                let xi_val = xi
                    .eval_int(&[
                        ("X", BigInt::from(a)),
                        ("Y", BigInt::from(b)),
                        ("Z", BigInt::from(cc)),
                    ])
                    .expect("xi evaluation is integral");
                let c_val = c
                    .eval_int(&[
                        ("X", BigInt::from(a)),
                        ("Y", BigInt::from(b)),
                        ("Z", BigInt::from(t + 1)),
                    ])
                    .expect("C evaluation is integral");
                numeric.push((a, b, cc, xi_val, c_val));
            }
        }
    }
    Ok(TrinksReport { symbolic_ok, numeric })
}
