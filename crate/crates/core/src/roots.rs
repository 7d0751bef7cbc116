//! Root systems from Cartan matrices, Chevalley-basis semisimple Lie
//! algebras, and Weyl groups with lengths and inversion sets.
//!
//! Conventions: `cartan[i][j] = 2(α_i, α_j)/(α_i, α_i)`, so the simple
//! reflection acts by `s_i(β) = β - ⟨β, α_i^∨⟩ α_i` with
//! `⟨β, α_i^∨⟩ = Σ_k β_k cartan[i][k]`. Positive roots are kept sorted by
//! height and then lexicographically; that total order fixes the
//! extraspecial pairs and hence the signs of the structure constants.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::bialg::LieBialgebra;
use crate::error::Error;
use crate::exactlin::{unit_vec, zero_vec, Subspace};
use crate::liealg::LieAlgebra;
use crate::scalar::{from_int, Scalar};
use crate::wedge;

const ROOT_CAP: usize = 10_000;
const WEYL_CAP: usize = 1_000_000;

/// A finite root system presented by its Cartan matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    rank: usize,
    cartan: Vec<Vec<i64>>,
    positive_roots: Vec<Vec<i64>>,
    /// symmetrizer: `(α_i, α_i) = 2 d[i]`
    d: Vec<i64>,
    all_roots: BTreeSet<Vec<i64>>,
}

/// Built-in Cartan matrices for the named types.
pub fn cartan_of_type(name: &str) -> Result<Vec<Vec<i64>>, Error> {
    let m: &[&[i64]] = match name {
        "A1" => &[&[2]],
        "A2" => &[&[2, -1], &[-1, 2]],
        "A3" => &[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]],
        "B2" => &[&[2, -1], &[-2, 2]],
        "B3" => &[&[2, -1, 0], &[-1, 2, -1], &[0, -2, 2]],
        "C3" => &[&[2, -1, 0], &[-1, 2, -2], &[0, -1, 2]],
        "G2" => &[&[2, -3], &[-1, 2]],
        _ => return Err(Error::UnknownType(name.to_string())),
    };
    Ok(m.iter().map(|r| r.to_vec()).collect())
}

fn is_positive(v: &[i64]) -> bool {
    v.iter().all(|&c| c >= 0) && v.iter().any(|&c| c != 0)
}

fn neg(v: &[i64]) -> Vec<i64> {
    v.iter().map(|&c| -c).collect()
}

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn height(v: &[i64]) -> i64 {
    v.iter().sum()
}

impl RootSystem {
    pub fn by_name(name: &str) -> Result<Self, Error> {
        build_root_system(cartan_of_type(name)?)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn num_positive(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn is_root(&self, v: &[i64]) -> bool {
        self.all_roots.contains(v)
    }

    pub fn index_of_positive(&self, v: &[i64]) -> Option<usize> {
        self.positive_roots.iter().position(|b| b == v)
    }

    /// `⟨β, α_i^∨⟩`.
    pub fn pair_with_coroot(&self, beta: &[i64], i: usize) -> i64 {
        beta.iter().zip(&self.cartan[i]).map(|(b, a)| b * a).sum()
    }

    /// `(β, γ)` in the symmetrized form, `(α_i, α_j) = d_i · cartan[i][j]`.
    pub fn inner(&self, beta: &[i64], gamma: &[i64]) -> i64 {
        let mut acc = 0;
        for i in 0..self.rank {
            if beta[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                acc += beta[i] * gamma[j] * self.d[i] * self.cartan[i][j];
            }
        }
        acc
    }

    pub fn length_sq(&self, beta: &[i64]) -> i64 {
        self.inner(beta, beta)
    }

    /// Coefficients of the coroot `β^∨ = Σ c_i α_i^∨`.
    pub fn coroot_coeffs(&self, beta: &[i64]) -> Vec<i64> {
        let bb = self.length_sq(beta);
        beta.iter()
            .enumerate()
            .map(|(i, &m)| {
                let num = 2 * m * self.d[i];
                assert_eq!(num % bb, 0, "coroot coefficients must be integers");
                num / bb
            })
            .collect()
    }

    /// The α-string through β: `max {k ≥ 0 : β - kα ∈ Δ}`.
    fn string_down(&self, alpha: &[i64], beta: &[i64]) -> i64 {
        let mut k = 0;
        let mut cur = beta.to_vec();
        loop {
            cur = cur.iter().zip(alpha).map(|(c, a)| c - a).collect();
            if self.all_roots.contains(&cur) {
                k += 1;
            } else {
                return k;
            }
        }
    }

    /// Matrix of the simple reflection `s_i` on simple-root coordinates
    /// (column `j` holds the coordinates of `s_i(α_j)`).
    fn simple_reflection(&self, i: usize) -> Vec<Vec<i64>> {
        let r = self.rank;
        let mut m = vec![vec![0i64; r]; r];
        for (j, row) in m.iter_mut().enumerate() {
            row[j] = 1;
        }
        for j in 0..r {
            m[i][j] -= self.cartan[i][j];
        }
        m
    }

    /// Twice the half-sum of positive roots.
    pub fn two_rho(&self) -> Vec<i64> {
        let mut acc = vec![0i64; self.rank];
        for beta in &self.positive_roots {
            acc = add(&acc, beta);
        }
        acc
    }
}

fn validate_cartan(cartan: &[Vec<i64>]) -> Result<(), Error> {
    let rank = cartan.len();
    if rank == 0 {
        return Err(Error::InvalidCartan("empty matrix".into()));
    }
    for (i, row) in cartan.iter().enumerate() {
        if row.len() != rank {
            return Err(Error::InvalidCartan(format!(
                "row {i} has {} entries, expected {rank}",
                row.len()
            )));
        }
        if row[i] != 2 {
            return Err(Error::InvalidCartan(format!("diagonal entry {i} is not 2")));
        }
        for (j, &a) in row.iter().enumerate() {
            if i == j {
                continue;
            }
            if a > 0 {
                return Err(Error::InvalidCartan(format!(
                    "off-diagonal entry ({i}, {j}) is positive"
                )));
            }
            let prod = a * cartan[j][i];
            if !(0..=3).contains(&prod) {
                return Err(Error::InvalidCartan(format!(
                    "product of entries ({i}, {j}) and ({j}, {i}) is {prod}, outside 0..=3"
                )));
            }
            if (a == 0) != (cartan[j][i] == 0) {
                return Err(Error::InvalidCartan(format!(
                    "entries ({i}, {j}) and ({j}, {i}) disagree on vanishing"
                )));
            }
        }
    }
    Ok(())
}

/// Symmetrizer `d` with `d_i cartan[i][j] = d_j cartan[j][i]`; smallest
/// positive integers, connected component by component.
fn symmetrizer(cartan: &[Vec<i64>]) -> Result<Vec<i64>, Error> {
    let rank = cartan.len();
    // rationals as (num, den)
    let mut d: Vec<Option<(i64, i64)>> = vec![None; rank];
    for start in 0..rank {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some((1, 1));
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            let (ni, di) = d[i].expect("visited");
            for j in 0..rank {
                if cartan[i][j] == 0 || i == j {
                    continue;
                }
                // d_j = d_i · a_ij / a_ji
                let (nj, dj) = reduce(ni * cartan[i][j], di * cartan[j][i]);
                match d[j] {
                    None => {
                        d[j] = Some((nj, dj));
                        queue.push_back(j);
                    }
                    Some(existing) => {
                        if existing != (nj, dj) {
                            return Err(Error::InvalidCartan(
                                "matrix is not symmetrizable".into(),
                            ));
                        }
                    }
                }
            }
        }
    }
    let lcm_den = d.iter().map(|x| x.expect("all visited").1).fold(1i64, lcm);
    Ok(d.iter()
        .map(|x| {
            let (n, den) = x.expect("all visited");
            n * (lcm_den / den)
        })
        .collect())
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn lcm(a: i64, b: i64) -> i64 {
    a / gcd(a, b) * b
}

fn reduce(n: i64, d: i64) -> (i64, i64) {
    let g = gcd(n, d);
    let (n, d) = (n / g, d / g);
    if d < 0 {
        (-n, -d)
    } else {
        (n, d)
    }
}

/// Generates the root system by closing the simple roots under the simple
/// reflections, rejecting matrices whose root set exceeds the cap.
pub fn build_root_system(cartan: Vec<Vec<i64>>) -> Result<RootSystem, Error> {
    validate_cartan(&cartan)?;
    let rank = cartan.len();
    let d = symmetrizer(&cartan)?;

    let pair_with_coroot =
        |beta: &[i64], i: usize| -> i64 { beta.iter().zip(&cartan[i]).map(|(b, a)| b * a).sum() };

    let mut all: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..rank {
        let alpha = (0..rank).map(|j| i64::from(j == i)).collect::<Vec<_>>();
        all.insert(alpha.clone());
        all.insert(neg(&alpha));
        queue.push_back(alpha.clone());
        queue.push_back(neg(&alpha));
    }
    while let Some(beta) = queue.pop_front() {
        for i in 0..rank {
            let coeff = pair_with_coroot(&beta, i);
            let mut image = beta.clone();
            image[i] -= coeff;
            if all.insert(image.clone()) {
                if all.len() > ROOT_CAP {
                    return Err(Error::NotFiniteType);
                }
                queue.push_back(image);
            }
        }
    }

    let mut positive_roots: Vec<Vec<i64>> =
        all.iter().filter(|v| is_positive(v)).cloned().collect();
    if positive_roots.len() * 2 != all.len() {
        return Err(Error::InvalidCartan(
            "root set is not symmetric around zero".into(),
        ));
    }
    positive_roots.sort_by_key(|v| (height(v), v.clone()));

    Ok(RootSystem {
        rank,
        cartan,
        positive_roots,
        d,
        all_roots: all,
    })
}

/// An element of the Weyl group, acting on simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    matrix: Vec<Vec<i64>>,
    inverse: Vec<Vec<i64>>,
    length: usize,
    inversion_set: Vec<usize>,
}

impl WeylElement {
    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn inversion_set(&self) -> &[usize] {
        &self.inversion_set
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        mat_apply(&self.matrix, v)
    }

    pub fn apply_inverse(&self, v: &[i64]) -> Vec<i64> {
        mat_apply(&self.inverse, v)
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }
}

fn mat_apply(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    (0..m.len())
        .map(|i| (0..v.len()).map(|j| m[i][j] * v[j]).sum())
        .collect()
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

/// Breadth-first enumeration of the Weyl group; lengths are the BFS depth
/// and elements are canonicalized by their integer matrix.
pub fn weyl_enumerate(rs: &RootSystem) -> Result<Vec<WeylElement>, Error> {
    let rank = rs.rank;
    let gens: Vec<Vec<Vec<i64>>> = (0..rank).map(|i| rs.simple_reflection(i)).collect();
    let identity: Vec<Vec<i64>> = (0..rank)
        .map(|i| (0..rank).map(|j| i64::from(i == j)).collect())
        .collect();

    let mut seen: BTreeMap<Vec<Vec<i64>>, (Vec<Vec<i64>>, usize)> = BTreeMap::new();
    seen.insert(identity.clone(), (identity.clone(), 0));
    let mut order: Vec<Vec<Vec<i64>>> = vec![identity.clone()];
    let mut queue: VecDeque<Vec<Vec<i64>>> = VecDeque::from([identity]);
    while let Some(w) = queue.pop_front() {
        let (w_inv, depth) = seen.get(&w).expect("queued elements are recorded").clone();
        for g in &gens {
            let next = mat_mul(&w, g);
            if !seen.contains_key(&next) {
                if seen.len() >= WEYL_CAP {
                    return Err(Error::NotFiniteType);
                }
                // s_i is an involution, so inv(w s_i) = s_i inv(w)
                let next_inv = mat_mul(g, &w_inv);
                seen.insert(next.clone(), (next_inv, depth + 1));
                order.push(next.clone());
                queue.push_back(next);
            }
        }
    }

    let elements = order
        .into_iter()
        .map(|matrix| {
            let (inverse, length) = seen.remove(&matrix).expect("recorded");
            let inversion_set = compute_inversions(rs, &inverse);
            debug_assert_eq!(inversion_set.len(), length);
            WeylElement {
                matrix,
                inverse,
                length,
                inversion_set,
            }
        })
        .collect();
    Ok(elements)
}

fn compute_inversions(rs: &RootSystem, inverse: &[Vec<i64>]) -> Vec<usize> {
    rs.positive_roots
        .iter()
        .enumerate()
        .filter(|(_, beta)| {
            let image = mat_apply(inverse, beta);
            debug_assert!(is_positive(&image) || is_positive(&neg(&image)));
            !is_positive(&image)
        })
        .map(|(i, _)| i)
        .collect()
}

/// The inversion set `{β > 0 : w⁻¹ β < 0}` as positive-root indices.
pub fn inversion_set(rs: &RootSystem, w: &WeylElement) -> Vec<usize> {
    compute_inversions(rs, &w.inverse)
}

/// A semisimple Lie algebra in a Chevalley basis: Cartan generators
/// `h_1 … h_r` followed by the positive root vectors and then the negative
/// ones, with integer structure constants `N_{α,β} = ±(p+1)` fixed by the
/// convention that extraspecial pairs are positive.
#[derive(Clone, Debug)]
pub struct ChevalleyAlgebra<S> {
    g: LieAlgebra<S>,
    rs: RootSystem,
    cartan_sub: Subspace<S>,
    nilradical: Subspace<S>,
    opposite: Subspace<S>,
    root_of_basis: Vec<Vec<i64>>,
    /// `N_{α,β}` for positive-root index pairs `(a, b)`, `a < b`, with
    /// `α + β` a root.
    pos_constants: BTreeMap<(usize, usize), i64>,
}

impl<S: Scalar> ChevalleyAlgebra<S> {
    pub fn algebra(&self) -> &LieAlgebra<S> {
        &self.g
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn cartan_sub(&self) -> &Subspace<S> {
        &self.cartan_sub
    }

    pub fn nilradical(&self) -> &Subspace<S> {
        &self.nilradical
    }

    pub fn opposite(&self) -> &Subspace<S> {
        &self.opposite
    }

    /// Weight of each basis vector in simple-root coordinates (zero rows
    /// for the Cartan part).
    pub fn root_of_basis(&self) -> &[Vec<i64>] {
        &self.root_of_basis
    }

    pub fn rank(&self) -> usize {
        self.rs.rank
    }

    pub fn num_positive(&self) -> usize {
        self.rs.num_positive()
    }

    /// Basis index of `e_β` for the `idx`-th positive root.
    pub fn pos_index(&self, idx: usize) -> usize {
        self.rs.rank + idx
    }

    /// Basis index of `e_{-β}` for the `idx`-th positive root.
    pub fn neg_index(&self, idx: usize) -> usize {
        self.rs.rank + self.rs.num_positive() + idx
    }

    /// `N_{α,β}` over positive-root indices (`None` if `α+β` is not a
    /// root).
    pub fn pos_constant(&self, a: usize, b: usize) -> Option<i64> {
        if a == b {
            return None;
        }
        if a < b {
            self.pos_constants.get(&(a, b)).copied()
        } else {
            self.pos_constants.get(&(b, a)).map(|n| -n)
        }
    }

    /// The bracket restricted to the positive root vectors, as a
    /// standalone nilpotent algebra on `|Δ⁺|` generators.
    pub fn nilradical_algebra(&self) -> LieAlgebra<S> {
        let np = self.rs.num_positive();
        let names = (0..np)
            .map(|i| format!("x{}", root_label(&self.rs.positive_roots[i])))
            .collect();
        let mut brackets = Vec::new();
        for a in 0..np {
            for b in (a + 1)..np {
                let sum = add(&self.rs.positive_roots[a], &self.rs.positive_roots[b]);
                if let Some(c) = self.rs.index_of_positive(&sum) {
                    let n = self.pos_constant(a, b).expect("sum is a root");
                    let mut v = zero_vec::<S>(np);
                    v[c] = from_int(n);
                    brackets.push((a, b, v));
                }
            }
        }
        LieAlgebra::from_brackets(np, names, &brackets)
            .expect("antisymmetric by construction")
            .validated()
            .expect("nilpotent part of a validated algebra")
    }

    /// The standard quasitriangular bialgebra structure: `δ = ad(r)` for
    /// `r = Σ_{β>0} ((β,β)/2) e_β ∧ e_{-β}`. The overall normalization is
    /// immaterial; the relative root-length weights are not.
    pub fn standard_bialgebra(&self) -> LieBialgebra<S> {
        let dim = self.g.dim();
        let mut r = zero_vec::<S>(wedge::pair_count(dim));
        for idx in 0..self.rs.num_positive() {
            let weight = self.rs.length_sq(&self.rs.positive_roots[idx]) / 2;
            let (i, j) = (self.pos_index(idx), self.neg_index(idx));
            r[wedge::pair_index(dim, i, j)] = from_int(weight);
        }
        crate::bialg::make_coboundary(&self.g, &r)
    }
}

fn root_label(v: &[i64]) -> String {
    v.iter().map(i64::to_string).collect::<Vec<_>>().join("")
}

/// Builds the Chevalley algebra of a root system. Signs of the structure
/// constants: extraspecial pairs get `+(p+1)`; the remaining special-pair
/// signs are the unique assignment passing the Jacobi identity, found by
/// search.
pub fn chevalley_algebra<S: Scalar>(rs: &RootSystem) -> Result<ChevalleyAlgebra<S>, Error> {
    let rank = rs.rank;
    let np = rs.num_positive();
    let dim = rank + 2 * np;

    // special pairs per non-simple positive root
    let mut special: Vec<(usize, usize)> = Vec::new();
    let mut extraspecial: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (c, gamma) in rs.positive_roots.iter().enumerate() {
        if height(gamma) == 1 {
            continue;
        }
        let mut pairs = Vec::new();
        for a in 0..np {
            for b in (a + 1)..np {
                if add(&rs.positive_roots[a], &rs.positive_roots[b]) == *gamma {
                    pairs.push((a, b));
                }
            }
        }
        debug_assert!(!pairs.is_empty(), "positive root {c} has no decomposition");
        let extra = *pairs.iter().min_by_key(|(a, _)| *a).expect("nonempty");
        extraspecial.insert(extra);
        special.extend(pairs);
    }
    let unknowns: Vec<(usize, usize)> = special
        .iter()
        .copied()
        .filter(|p| !extraspecial.contains(p))
        .collect();

    let p_plus_one = |a: usize, b: usize| -> i64 {
        rs.string_down(&rs.positive_roots[a], &rs.positive_roots[b]) + 1
    };

    for mask in 0u64..(1 << unknowns.len()) {
        let mut table: BTreeMap<(usize, usize), i64> = BTreeMap::new();
        for &(a, b) in &extraspecial {
            table.insert((a, b), p_plus_one(a, b));
        }
        for (bit, &(a, b)) in unknowns.iter().enumerate() {
            let sign = if mask & (1 << bit) == 0 { 1 } else { -1 };
            table.insert((a, b), sign * p_plus_one(a, b));
        }
        if let Ok(algebra) = assemble_chevalley::<S>(rs, &table) {
            let subspace_of = |range: std::ops::Range<usize>| {
                Subspace::from_rows(dim, range.map(|i| unit_vec::<S>(dim, i)).collect())
            };
            let mut root_of_basis = vec![vec![0i64; rank]; rank];
            for beta in &rs.positive_roots {
                root_of_basis.push(beta.clone());
            }
            for beta in &rs.positive_roots {
                root_of_basis.push(neg(beta));
            }
            return Ok(ChevalleyAlgebra {
                g: algebra,
                rs: rs.clone(),
                cartan_sub: subspace_of(0..rank),
                nilradical: subspace_of(rank..rank + np),
                opposite: subspace_of(rank + np..dim),
                root_of_basis,
                pos_constants: table,
            });
        }
    }
    Err(Error::Inconsistent(
        "no consistent Chevalley sign assignment found".into(),
    ))
}

/// Assembles the full bracket table from a positive-pair sign table and
/// validates Jacobi. Constants for other sign combinations come from
/// `N_{β,α} = -N_{α,β}`, `N_{-α,-β} = -N_{α,β}`, and the cyclic identity
/// `N_{α,β}/(γ,γ) = N_{β,γ}/(α,α)` for `α + β + γ = 0`.
fn assemble_chevalley<S: Scalar>(
    rs: &RootSystem,
    table: &BTreeMap<(usize, usize), i64>,
) -> Result<LieAlgebra<S>, Error> {
    let rank = rs.rank;
    let np = rs.num_positive();
    let dim = rank + 2 * np;

    struct Ctx<'a> {
        rs: &'a RootSystem,
        table: &'a BTreeMap<(usize, usize), i64>,
    }

    impl Ctx<'_> {
        fn n_pos(&self, a: usize, b: usize) -> i64 {
            if a < b {
                *self.table.get(&(a, b)).expect("special pair in table")
            } else {
                -*self.table.get(&(b, a)).expect("special pair in table")
            }
        }

        /// `N_{α,β}` for arbitrary signed roots with `α + β` a root.
        fn n_const(&self, alpha: &[i64], beta: &[i64]) -> i64 {
            match (is_positive(alpha), is_positive(beta)) {
                (true, true) => {
                    let a = self.rs.index_of_positive(alpha).expect("root");
                    let b = self.rs.index_of_positive(beta).expect("root");
                    self.n_pos(a, b)
                }
                (false, false) => -self.n_const(&neg(alpha), &neg(beta)),
                (false, true) => -self.n_const(beta, alpha),
                (true, false) => {
                    let gamma = add(alpha, beta);
                    if is_positive(&gamma) {
                        // cyclic identity on (α, β, -γ)
                        let num = self.rs.length_sq(&gamma) * self.n_const(beta, &neg(&gamma));
                        let den = self.rs.length_sq(alpha);
                        debug_assert_eq!(num % den, 0, "length-weighted constant not integral");
                        num / den
                    } else {
                        -self.n_const(&neg(alpha), &neg(beta))
                    }
                }
            }
        }
    }

    let ctx = Ctx { rs, table };
    let e_index = |idx: usize| rank + idx;
    let f_index = |idx: usize| rank + np + idx;
    let signed_root_index = |v: &[i64]| -> usize {
        if is_positive(v) {
            e_index(rs.index_of_positive(v).expect("root"))
        } else {
            f_index(rs.index_of_positive(&neg(v)).expect("root"))
        }
    };

    let mut brackets: Vec<(usize, usize, Vec<S>)> = Vec::new();

    // Cartan against root vectors
    for i in 0..rank {
        for (idx, beta) in rs.positive_roots.iter().enumerate() {
            let coeff = rs.pair_with_coroot(beta, i);
            if coeff != 0 {
                let mut v = zero_vec::<S>(dim);
                v[e_index(idx)] = from_int(coeff);
                brackets.push((i, e_index(idx), v));
                let mut v = zero_vec::<S>(dim);
                v[f_index(idx)] = from_int(-coeff);
                brackets.push((i, f_index(idx), v));
            }
        }
    }

    // root vectors among themselves
    let signed_roots: Vec<(usize, Vec<i64>)> = (0..np)
        .map(|idx| (e_index(idx), rs.positive_roots[idx].clone()))
        .chain((0..np).map(|idx| (f_index(idx), neg(&rs.positive_roots[idx]))))
        .collect();
    for (pos_a, (ia, ra)) in signed_roots.iter().enumerate() {
        for (ib, rb) in signed_roots.iter().skip(pos_a + 1).map(|(i, r)| (i, r)) {
            let sum = add(ra, rb);
            if sum.iter().all(|&c| c == 0) {
                // [e_β, e_{-β}] = h_β
                let beta = if is_positive(ra) { ra } else { rb };
                let sign_flip = !is_positive(ra);
                let coeffs = rs.coroot_coeffs(beta);
                let mut v = zero_vec::<S>(dim);
                for (i, c) in coeffs.into_iter().enumerate() {
                    v[i] = from_int(if sign_flip { -c } else { c });
                }
                brackets.push((*ia, *ib, v));
            } else if rs.is_root(&sum) {
                let n = ctx.n_const(ra, rb);
                let mut v = zero_vec::<S>(dim);
                v[signed_root_index(&sum)] = from_int(n);
                brackets.push((*ia, *ib, v));
            }
        }
    }

    let mut names: Vec<String> = (0..rank).map(|i| format!("h{}", i + 1)).collect();
    for beta in &rs.positive_roots {
        names.push(format!("e{}", root_label(beta)));
    }
    for beta in &rs.positive_roots {
        names.push(format!("f{}", root_label(beta)));
    }

    LieAlgebra::from_brackets(dim, names, &brackets)?.validated()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;
    use num_traits::Zero;

    fn histogram(elements: &[WeylElement]) -> Vec<usize> {
        let max = elements.iter().map(WeylElement::length).max().unwrap_or(0);
        let mut h = vec![0usize; max + 1];
        for w in elements {
            h[w.length()] += 1;
        }
        h
    }

    #[test]
    fn a1_has_one_positive_root() {
        let rs = RootSystem::by_name("A1").unwrap();
        assert_eq!(rs.positive_roots(), &[vec![1]]);
    }

    #[test]
    fn a2_positive_roots_by_reflection_closure() {
        let rs = RootSystem::by_name("A2").unwrap();
        assert_eq!(rs.positive_roots(), &[vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn g2_has_six_positive_roots_with_highest_3a_2b() {
        let rs = RootSystem::by_name("G2").unwrap();
        assert_eq!(rs.num_positive(), 6);
        assert_eq!(rs.positive_roots().last().unwrap(), &vec![3, 2]);
    }

    #[test]
    fn positive_root_counts_by_type() {
        for (name, count) in [
            ("A1", 1),
            ("A2", 3),
            ("A3", 6),
            ("B2", 4),
            ("B3", 9),
            ("C3", 9),
            ("G2", 6),
        ] {
            assert_eq!(
                RootSystem::by_name(name).unwrap().num_positive(),
                count,
                "{name}"
            );
        }
    }

    #[test]
    fn invalid_cartan_matrices_are_rejected() {
        assert!(matches!(
            build_root_system(vec![vec![2, -1], vec![-4, 2]]),
            Err(Error::InvalidCartan(_))
        ));
        assert!(matches!(
            build_root_system(vec![vec![2, 1], vec![1, 2]]),
            Err(Error::InvalidCartan(_))
        ));
        assert!(matches!(
            build_root_system(vec![vec![2, 0], vec![-1, 2]]),
            Err(Error::InvalidCartan(_))
        ));
    }

    #[test]
    fn affine_like_cycle_hits_generation_cap() {
        // the affine A2 cycle is symmetrizable with all pair products 1
        // but has an infinite root system
        let affine = vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]];
        assert!(matches!(build_root_system(affine), Err(Error::NotFiniteType)));
    }

    #[test]
    fn chevalley_a1_is_sl2() {
        let rs = RootSystem::by_name("A1").unwrap();
        let chev = chevalley_algebra::<Rat>(&rs).unwrap();
        let g = chev.algebra();
        assert_eq!(g.dim(), 3);
        // basis (h, e, f): [h, e] = 2e, [h, f] = -2f, [e, f] = h
        let q = |n: i64| from_int::<Rat>(n);
        assert_eq!(g.bracket_basis(0, 1), &[q(0), q(2), q(0)]);
        assert_eq!(g.bracket_basis(0, 2), &[q(0), q(0), q(-2)]);
        assert_eq!(g.bracket_basis(1, 2), &[q(1), q(0), q(0)]);
    }

    #[test]
    fn chevalley_a2_magnitudes_match_sl3_oracle() {
        // oracle: in sl3 with elementary matrices, every |N_{α,β}| = 1
        let rs = RootSystem::by_name("A2").unwrap();
        let chev = chevalley_algebra::<Rat>(&rs).unwrap();
        assert_eq!(chev.algebra().dim(), 8);
        assert!(chev.algebra().trusted());
        for a in 0..3 {
            for b in (a + 1)..3 {
                let sum = add(&rs.positive_roots()[a], &rs.positive_roots()[b]);
                if rs.is_root(&sum) {
                    assert_eq!(chev.pos_constant(a, b).unwrap().abs(), 1);
                }
            }
        }
    }

    #[test]
    fn chevalley_weights_are_additive() {
        for name in ["A2", "B2", "G2"] {
            let rs = RootSystem::by_name(name).unwrap();
            let chev = chevalley_algebra::<Rat>(&rs).unwrap();
            let g = chev.algebra();
            let weights = chev.root_of_basis();
            for i in 0..g.dim() {
                for j in 0..g.dim() {
                    let sum = add(&weights[i], &weights[j]);
                    for (l, c) in g.bracket_basis(i, j).iter().enumerate() {
                        if !c.is_zero() && !weights[l].iter().all(|&x| x == 0) {
                            assert_eq!(weights[l], sum, "bracket ({i},{j}) target {l}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn chevalley_nilradical_is_a_subalgebra_normalized_by_cartan() {
        for name in ["A2", "B2", "G2", "A3"] {
            let rs = RootSystem::by_name(name).unwrap();
            let chev = chevalley_algebra::<Rat>(&rs).unwrap();
            let g = chev.algebra();
            assert!(g.is_subalgebra(chev.nilradical()).unwrap(), "{name}");
            assert!(g.is_subalgebra(chev.opposite()).unwrap(), "{name}");
            assert!(g.is_subalgebra(chev.cartan_sub()).unwrap(), "{name}");
            for i in 0..chev.rank() {
                for idx in 0..chev.num_positive() {
                    let br = g.bracket_basis(i, chev.pos_index(idx));
                    assert!(chev.nilradical().contains(br), "{name}: [h,n] escapes n");
                }
            }
        }
    }

    #[test]
    fn g2_constants_reach_magnitude_three() {
        let rs = RootSystem::by_name("G2").unwrap();
        let chev = chevalley_algebra::<Rat>(&rs).unwrap();
        let max = chev.pos_constants.values().map(|n| n.abs()).max().unwrap();
        assert_eq!(max, 3);
    }

    #[test]
    fn weyl_orders_by_type() {
        for (name, order) in [
            ("A1", 2),
            ("A2", 6),
            ("B2", 8),
            ("G2", 12),
            ("A3", 24),
            ("B3", 48),
            ("C3", 48),
        ] {
            let rs = RootSystem::by_name(name).unwrap();
            assert_eq!(weyl_enumerate(&rs).unwrap().len(), order, "{name}");
        }
    }

    #[test]
    fn weyl_length_histograms() {
        let cases = [
            ("A1", vec![1, 1]),
            ("A2", vec![1, 2, 2, 1]),
            ("B2", vec![1, 2, 2, 2, 1]),
            ("G2", vec![1, 2, 2, 2, 2, 2, 1]),
            ("A3", vec![1, 3, 5, 6, 5, 3, 1]),
        ];
        for (name, expected) in cases {
            let rs = RootSystem::by_name(name).unwrap();
            let elements = weyl_enumerate(&rs).unwrap();
            assert_eq!(histogram(&elements), expected, "{name}");
        }
    }

    #[test]
    fn histograms_are_palindromic() {
        for name in ["A1", "A2", "A3", "B2", "B3", "C3", "G2"] {
            let rs = RootSystem::by_name(name).unwrap();
            let h = histogram(&weyl_enumerate(&rs).unwrap());
            let mut rev = h.clone();
            rev.reverse();
            assert_eq!(h, rev, "{name}");
        }
    }

    #[test]
    fn inversion_sets_have_length_cardinality_and_rho_sum() {
        for name in ["A2", "B2", "G2", "A3"] {
            let rs = RootSystem::by_name(name).unwrap();
            let two_rho = rs.two_rho();
            for w in weyl_enumerate(&rs).unwrap() {
                let inv = inversion_set(&rs, &w);
                assert_eq!(inv.len(), w.length(), "{name}");
                // Σ_{β ∈ inv(w)} 2β = 2ρ - w(2ρ)
                let mut sum = vec![0i64; rs.rank()];
                for &idx in &inv {
                    for (s, c) in sum.iter_mut().zip(&rs.positive_roots()[idx]) {
                        *s += 2 * c;
                    }
                }
                let expected: Vec<i64> = two_rho
                    .iter()
                    .zip(w.apply(&two_rho))
                    .map(|(a, b)| a - b)
                    .collect();
                assert_eq!(sum, expected, "{name}");
            }
        }
    }

    #[test]
    fn identity_and_longest_element_inversions() {
        let rs = RootSystem::by_name("A2").unwrap();
        let elements = weyl_enumerate(&rs).unwrap();
        let identity = elements.iter().find(|w| w.length() == 0).unwrap();
        assert!(identity.inversion_set().is_empty());
        let longest = elements.iter().max_by_key(|w| w.length()).unwrap();
        assert_eq!(longest.inversion_set(), &[0, 1, 2]);
        // each simple reflection inverts exactly its own simple root
        for w in elements.iter().filter(|w| w.length() == 1) {
            assert_eq!(w.inversion_set().len(), 1);
            let idx = w.inversion_set()[0];
            assert_eq!(height(&rs.positive_roots()[idx]), 1);
        }
    }

    #[test]
    fn inversion_sums_are_pairwise_distinct() {
        for name in ["A1", "A2", "A3", "B2", "B3", "C3", "G2"] {
            let rs = RootSystem::by_name(name).unwrap();
            let elements = weyl_enumerate(&rs).unwrap();
            let mut sums = BTreeSet::new();
            for w in &elements {
                let mut sum = vec![0i64; rs.rank()];
                for &idx in w.inversion_set() {
                    for (s, c) in sum.iter_mut().zip(&rs.positive_roots()[idx]) {
                        *s += c;
                    }
                }
                assert!(sums.insert(sum), "{name}: duplicate inversion sum");
            }
        }
    }

    #[test]
    fn standard_bialgebra_is_compatible_for_small_types() {
        for name in ["A1", "A2", "B2"] {
            let rs = RootSystem::by_name(name).unwrap();
            let chev = chevalley_algebra::<Rat>(&rs).unwrap();
            let b = chev.standard_bialgebra();
            assert!(
                crate::bialg::check_compatibility(&b).ok(),
                "{name}: standard structure fails compatibility"
            );
        }
    }

    #[test]
    fn standard_sl2_bialgebra_agrees_with_chevalley_route() {
        let rs = RootSystem::by_name("A1").unwrap();
        let chev = chevalley_algebra::<Rat>(&rs).unwrap();
        let b = chev.standard_bialgebra();
        // compare against the sl2 constructor after permuting the bases
        // (e, h, f) -> (h, e, f)
        let reference = LieBialgebra::<Rat>::standard_sl2();
        let perm = [1usize, 0, 2];
        for (i, row) in reference.delta().iter().enumerate() {
            for (idx, (j, k)) in wedge::pairs(3).enumerate() {
                let (pj, pk) = (perm[j], perm[k]);
                let expected = if pj < pk {
                    row[idx].clone()
                } else {
                    -row[idx].clone()
                };
                let (lo, hi) = if pj < pk { (pj, pk) } else { (pk, pj) };
                assert_eq!(
                    b.delta()[perm[i]][wedge::pair_index(3, lo, hi)],
                    expected,
                    "delta({i}) component ({j},{k})"
                );
            }
        }
    }
}
