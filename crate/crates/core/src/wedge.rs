//! Exterior-algebra bookkeeping: the shared wedge basis conventions.
//!
//! Degree-two coefficient vectors are indexed by the pairs
//! `{(j, k) : j < k}` in lexicographic order. Higher wedge powers are
//! indexed by sorted index subsets ranked lexicographically; those rankings
//! drive the sparse Chevalley-Eilenberg differentials.

use crate::exactlin::Mat;
use crate::scalar::Scalar;

/// Number of basis monomials of degree two over an `n`-dimensional space.
pub fn pair_count(n: usize) -> usize {
    n * (n - 1) / 2
}

/// The pairs `(j, k)`, `j < k`, in lexicographic order.
pub fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |j| (j + 1..n).map(move |k| (j, k)))
}

/// Lexicographic rank of the pair `(j, k)` with `j < k`.
pub fn pair_index(n: usize, j: usize, k: usize) -> usize {
    debug_assert!(j < k && k < n);
    j * n - j * (j + 1) / 2 + (k - j - 1)
}

/// Expands the wedge `v ∧ w` of two coordinate vectors into the pair basis.
pub fn wedge_of_vectors<S: Scalar>(v: &[S], w: &[S]) -> Vec<S> {
    let n = v.len();
    debug_assert_eq!(n, w.len());
    let mut out = vec![S::zero(); pair_count(n)];
    for (idx, (j, k)) in pairs(n).enumerate() {
        out[idx] = v[j].clone() * w[k].clone() - v[k].clone() * w[j].clone();
    }
    out
}

/// Pairing between a degree-two vector (pair coordinates on `Λ²V`) and a
/// degree-two covector (pair coordinates on `Λ²V*`): monomials pair as
/// `⟨e_j ∧ e_k, e_a* ∧ e_b*⟩ = δ_ja δ_kb − δ_jb δ_ka`.
pub fn pair_apply<S: Scalar>(two_vector: &[S], two_covector: &[S]) -> S {
    debug_assert_eq!(two_vector.len(), two_covector.len());
    two_vector
        .iter()
        .zip(two_covector)
        .fold(S::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

/// Contraction `x ⌟ r` of a vector with a degree-two covector, yielding a
/// covector: `x ⌟ (ξ ∧ η) = ξ(x) η − η(x) ξ`.
pub fn contract<S: Scalar>(x: &[S], r: &[S]) -> Vec<S> {
    let n = x.len();
    debug_assert_eq!(r.len(), pair_count(n));
    let mut out = vec![S::zero(); n];
    for (idx, (j, k)) in pairs(n).enumerate() {
        if r[idx].is_zero() {
            continue;
        }
        let c = r[idx].clone();
        out[k] = out[k].clone() + x[j].clone() * c.clone();
        out[j] = out[j].clone() - x[k].clone() * c;
    }
    out
}

/// Degree-two coefficients as an antisymmetric matrix `m[j][k] = r_{jk}`.
pub fn pair_vec_to_matrix<S: Scalar>(n: usize, r: &[S]) -> Mat<S> {
    let mut m = Mat::<S>::zeros(n, n);
    for (idx, (j, k)) in pairs(n).enumerate() {
        m[(j, k)] = r[idx].clone();
        m[(k, j)] = -r[idx].clone();
    }
    m
}

/// Binomial coefficients up to `n`, for subset ranking.
#[derive(Clone)]
pub struct Binomials {
    table: Vec<Vec<usize>>,
}

impl Binomials {
    pub fn new(n: usize) -> Self {
        let mut table = vec![vec![0usize; n + 1]; n + 1];
        for row in table.iter_mut() {
            row[0] = 1;
        }
        for i in 1..=n {
            for j in 1..=i {
                table[i][j] = table[i - 1][j - 1] + table[i - 1][j];
            }
        }
        Binomials { table }
    }

    pub fn choose(&self, n: usize, k: usize) -> usize {
        if k > n {
            0
        } else {
            self.table[n][k]
        }
    }

    /// Lexicographic rank of a strictly increasing index subset of
    /// `{0, .., n-1}`.
    pub fn rank(&self, n: usize, subset: &[usize]) -> usize {
        let k = subset.len();
        let mut r = 0;
        let mut prev = 0;
        for (pos, &s) in subset.iter().enumerate() {
            for c in prev..s {
                r += self.choose(n - c - 1, k - pos - 1);
            }
            prev = s + 1;
        }
        r
    }
}

/// All strictly increasing `k`-subsets of `{0, .., n-1}` in lexicographic
/// order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let remaining = k - cur.len();
        for i in start..=n.saturating_sub(remaining) {
            cur.push(i);
            rec(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(n, k, 0, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// Inserts `x` into a sorted set, returning the sign `(-1)^pos` of moving
/// it to its slot and the resulting set; `None` if `x` is already present.
pub fn insert_signed(set: &[usize], x: usize) -> Option<(i64, Vec<usize>)> {
    let pos = set.partition_point(|&s| s < x);
    if set.get(pos) == Some(&x) {
        return None;
    }
    let mut out = Vec::with_capacity(set.len() + 1);
    out.extend_from_slice(&set[..pos]);
    out.push(x);
    out.extend_from_slice(&set[pos..]);
    let sign = if pos % 2 == 0 { 1 } else { -1 };
    Some((sign, out))
}
