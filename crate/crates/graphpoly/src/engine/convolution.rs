//! Labelled-component convolutions shared by every complete-graph engine.
//!
//! Everything here rests on two classical identities for labelled structures
//! on `[n]` that decompose along the component containing the lowest vertex:
//!
//! * connected weights: `c_k = g_k - sum_{j<k} C(k-1, j-1) c_j g_{k-j}`
//!   where `g_k = (1+v)^{k(k-1)/2}` is the weight of all graphs on `[k]`,
//! * piece convolution: `a_n = sum_k C(n-1, k-1) w_k a_{n-k}`, `a_0 = 1`,
//!   for any per-component weight `w_k`.

use super::ring::{pascal_step, Ring};

/// `c_k` for `k = 1..=n`: the total `v^{|edges|}` weight of connected
/// spanning subgraphs of `K_k`. Index 0 is unused (kept zero).
pub(crate) fn connected_weight_entries<R: Ring>(ring: &R, v: &R::Elem, n: usize) -> Vec<R::Elem> {
    let mut c = vec![ring.zero(); n + 1];
    if n == 0 {
        return c;
    }
    let one_plus_v = ring.add(&ring.one(), v);
    let mut g = vec![ring.zero(); n + 1];
    g[0] = ring.one();
    let mut row = vec![ring.one()]; // Pascal row k-1, starting at row 0
    let mut step_pow = ring.one(); // (1+v)^{k-1}
    for k in 1..=n {
        if k > 1 {
            pascal_step(ring, &mut row);
            step_pow = ring.mul(&step_pow, &one_plus_v);
        }
        g[k] = ring.mul(&g[k - 1], &step_pow);
        let mut acc = g[k].clone();
        for j in 1..k {
            let t = ring.mul(&row[j - 1], &ring.mul(&c[j], &g[k - j]));
            acc = ring.sub(&acc, &t);
        }
        c[k] = acc;
    }
    c
}

/// Exponential-structure convolution: `a_0 = 1` and
/// `a_n = sum_{k=1}^{n} C(n-1, k-1) * weights[k] * a_{n-k}`.
///
/// `weights` must have length `n + 1`; index 0 is ignored.
pub(crate) fn piece_convolution<R: Ring>(ring: &R, weights: &[R::Elem], n: usize) -> Vec<R::Elem> {
    assert!(weights.len() >= n + 1);
    let mut a = Vec::with_capacity(n + 1);
    a.push(ring.one());
    let mut row = vec![ring.one()];
    for m in 1..=n {
        if m > 1 {
            pascal_step(ring, &mut row);
        }
        let mut acc = ring.zero();
        for k in 1..=m {
            let t = ring.mul(&row[k - 1], &ring.mul(&weights[k], &a[m - k]));
            acc = ring.add(&acc, &t);
        }
        a.push(acc);
    }
    a
}

/// `Z_m = sum_{A subset E(K_m)} q^{kappa(A)} v^{|A|}` for `m = 0..=n`.
pub(crate) fn z_table<R: Ring>(ring: &R, q: &R::Elem, v: &R::Elem, n: usize) -> Vec<R::Elem> {
    let c = connected_weight_entries(ring, v, n);
    let weights: Vec<R::Elem> = c.iter().map(|ck| ring.mul(q, ck)).collect();
    piece_convolution(ring, &weights, n)
}

/// Covered-components values `C(K_m; x, y, z)` for `m = 0..=n`.
///
/// Component weights: an isolated vertex contributes `x`; a component on
/// `k >= 2` vertices contributes `x * z * c_k(y)`.
pub(crate) fn covered_components_table<R: Ring>(
    ring: &R,
    x: &R::Elem,
    y: &R::Elem,
    z: &R::Elem,
    n: usize,
) -> Vec<R::Elem> {
    let c = connected_weight_entries(ring, y, n);
    let xz = ring.mul(x, z);
    let mut weights = vec![ring.zero(); n + 1];
    if n >= 1 {
        weights[1] = x.clone();
    }
    for k in 2..=n {
        weights[k] = ring.mul(&xz, &c[k]);
    }
    piece_convolution(ring, &weights, n)
}

/// Subgraph-counting values `S(K_m; x, y, z)` for `m = 0..=n`:
/// `S_m = sum_w C(m, w) x^w Z_w(q=y, v=z)`.
pub(crate) fn subgraph_counting_table<R: Ring>(
    ring: &R,
    x: &R::Elem,
    y: &R::Elem,
    z: &R::Elem,
    n: usize,
) -> Vec<R::Elem> {
    let zt = z_table(ring, y, z, n);
    let mut x_pow = Vec::with_capacity(n + 1);
    x_pow.push(ring.one());
    for w in 1..=n {
        x_pow.push(ring.mul(&x_pow[w - 1], x));
    }
    let mut out = Vec::with_capacity(n + 1);
    let mut row = vec![ring.one()];
    for m in 0..=n {
        if m > 0 {
            pascal_step(ring, &mut row);
        }
        let mut acc = ring.zero();
        for w in 0..=m {
            let t = ring.mul(&row[w], &ring.mul(&x_pow[w], &zt[w]));
            acc = ring.add(&acc, &t);
        }
        out.push(acc);
    }
    out
}

/// Matching counts `m_k(K_m)` for `m = 0..=n`, returned as the final row
/// plus optionally every row via the callback. Recurrence: a matching of
/// `K_m` either misses vertex `m` or pairs it with one of `m-1` partners.
pub(crate) fn matching_rows<R: Ring>(
    ring: &R,
    n: usize,
    mut on_row: impl FnMut(usize, &[R::Elem]),
) -> Vec<R::Elem> {
    let mut prev2: Vec<R::Elem> = vec![ring.one()]; // K_0
    on_row(0, &prev2);
    if n == 0 {
        return prev2;
    }
    let mut prev: Vec<R::Elem> = vec![ring.one()]; // K_1
    on_row(1, &prev);
    for m in 2..=n {
        let mut factor = ring.zero(); // m - 1 as a ring element
        for _ in 0..(m - 1) {
            factor = ring.add(&factor, &ring.one());
        }
        let len = m / 2 + 1;
        let mut row = Vec::with_capacity(len);
        for k in 0..len {
            let keep = if k < prev.len() { prev[k].clone() } else { ring.zero() };
            let pair = if k >= 1 && k - 1 < prev2.len() {
                ring.mul(&factor, &prev2[k - 1])
            } else {
                ring.zero()
            };
            row.push(ring.add(&keep, &pair));
        }
        on_row(m, &row);
        prev2 = std::mem::replace(&mut prev, row);
    }
    prev
}
