//! The Bruhat Poisson pipeline: invariant Poisson cohomology of the flag
//! manifold `K/T`, the nilradical cohomology check, distinguished class
//! representatives, and the symplectic-leaf census.
//!
//! The cohomology is computed on the direct sum `m = n ⊕ n₋` (the two
//! root halves with zero cross brackets, i.e. the complexification of the
//! real Iwasawa nilradical) by cutting the Chevalley-Eilenberg complex of
//! `m` down to the weight-zero subcomplex under the Cartan action.

use num_traits::Zero;

use crate::cohom::{self, CochainComplex};
use crate::error::Error;
use crate::exactlin::{unit_vec, zero_vec, Mat};
use crate::liealg::LieAlgebra;
use crate::roots::{weyl_enumerate, ChevalleyAlgebra, RootSystem, WeylElement};
use crate::scalar::{from_int, Scalar};
use crate::sparse::SparseMat;
use crate::wedge::Binomials;

/// Cohomology table of `K/T`, indexed by degree `0 ..= dim_R(K/T)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagCohomologyTable {
    pub type_name: String,
    pub dims: Vec<usize>,
    pub total: usize,
}

/// The direct-sum algebra `m = n ⊕ n₋` with zero cross brackets, plus the
/// weight of each basis vector (`β` on the `n` leg, `-β` on the other).
fn double_nilradical<S: Scalar>(chev: &ChevalleyAlgebra<S>) -> (LieAlgebra<S>, Vec<Vec<i64>>) {
    let rs = chev.root_system();
    let np = rs.num_positive();
    let dim = 2 * np;
    let mut brackets = Vec::new();
    for a in 0..np {
        for b in (a + 1)..np {
            let sum: Vec<i64> = rs.positive_roots()[a]
                .iter()
                .zip(&rs.positive_roots()[b])
                .map(|(x, y)| x + y)
                .collect();
            if let Some(c) = rs.index_of_positive(&sum) {
                let n = chev.pos_constant(a, b).expect("sum is a root");
                let mut v = zero_vec::<S>(dim);
                v[c] = from_int(n);
                brackets.push((a, b, v));
                // [e_{-α}, e_{-β}] = -N_{α,β} e_{-(α+β)}
                let mut v = zero_vec::<S>(dim);
                v[np + c] = from_int(-n);
                brackets.push((np + a, np + b, v));
            }
        }
    }
    let names = (0..np)
        .map(|i| format!("E{i}"))
        .chain((0..np).map(|i| format!("F{i}")))
        .collect();
    let m = LieAlgebra::from_brackets(dim, names, &brackets)
        .expect("antisymmetric by construction")
        .validated()
        .expect("two commuting nilpotent halves");
    let mut weights: Vec<Vec<i64>> = rs.positive_roots().to_vec();
    for beta in rs.positive_roots() {
        weights.push(beta.iter().map(|c| -c).collect());
    }
    (m, weights)
}

/// Per-degree matrices of the Cartan action on `Λ• m*`: the contragredient
/// weight action extended as a derivation. A monomial is invariant exactly
/// when its weight multiset sums to zero.
fn cartan_actions_on_wedge<S: Scalar>(
    rs: &RootSystem,
    weights: &[Vec<i64>],
    top: usize,
) -> Vec<Vec<SparseMat<S>>> {
    let dim = weights.len();
    (0..rs.rank())
        .map(|i| {
            let mut diag = Mat::<S>::zeros(dim, dim);
            for (b, w) in weights.iter().enumerate() {
                // action on the dual basis vector carries -⟨w, α_i^∨⟩
                diag[(b, b)] = from_int(-rs.pair_with_coroot(w, i));
            }
            (0..=top)
                .map(|k| cohom::derivation_on_wedge(&diag, k))
                .collect()
        })
        .collect()
}

/// The weight-zero (Cartan-invariant) subcomplex of the full complex of
/// `m = n ⊕ n₋`, which computes the invariant Poisson cohomology of
/// `K/T`.
fn invariant_flag_complex<S: Scalar>(
    chev: &ChevalleyAlgebra<S>,
) -> Result<(CochainComplex<S>, CochainComplex<S>), Error> {
    let (m, weights) = double_nilradical(chev);
    let full = cohom::ce_complex(&m, None)?;
    let actions = cartan_actions_on_wedge::<S>(chev.root_system(), &weights, m.dim());
    let invariant = cohom::invariant_subcomplex(&full, &actions)?;
    Ok((full, invariant))
}

/// Invariant Poisson cohomology dimensions of `K/T` for the given root
/// system, reported up to the real dimension `2 |Δ⁺|` of the flag
/// manifold.
pub fn flag_cohomology<S: Scalar>(
    rs: &RootSystem,
    type_name: &str,
) -> Result<FlagCohomologyTable, Error> {
    let chev = crate::roots::chevalley_algebra::<S>(rs)?;
    let (_, invariant) = invariant_flag_complex(&chev)?;
    let dims = cohom::cohomology_dims(&invariant);
    let total = dims.iter().sum();
    Ok(FlagCohomologyTable {
        type_name: type_name.to_string(),
        dims,
        total,
    })
}

/// Outcome of the nilradical cohomology check: per-degree dimensions of
/// `H(n)`, the Weyl length histogram, and the per-element weight check
/// (each class sits at weight `-Σ_{β ∈ inv(w)} β` with multiplicity one).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KostantReport {
    pub dims: Vec<usize>,
    pub histogram: Vec<usize>,
    pub class_weights: Vec<(usize, Vec<i64>, usize)>,
    pub ok: bool,
}

/// Verifies that `dim Hᵏ(n)` equals the number of Weyl elements of length
/// `k` and that the classes sit at the pairwise-distinct weights
/// `-Σ inv(w)`, one per Weyl element.
pub fn kostant_check<S: Scalar>(rs: &RootSystem) -> Result<KostantReport, Error> {
    let chev = crate::roots::chevalley_algebra::<S>(rs)?;
    let n = chev.nilradical_algebra();
    let np = rs.num_positive();
    let complex = cohom::ce_complex(&n, None)?;
    let dims = cohom::cohomology_dims(&complex);

    let elements = weyl_enumerate(rs)?;
    let max_len = elements.iter().map(WeylElement::length).max().unwrap_or(0);
    let mut histogram = vec![0usize; max_len + 1];
    for w in &elements {
        histogram[w.length()] += 1;
    }

    // weight grading: the monomial for an index subset has weight
    // -Σ_{a ∈ S} β_a, and the differential preserves it
    let binom = Binomials::new(np);
    let weight_of = |subset: &[usize]| -> Vec<i64> {
        let mut acc = vec![0i64; rs.rank()];
        for &a in subset {
            for (s, c) in acc.iter_mut().zip(&rs.positive_roots()[a]) {
                *s -= c;
            }
        }
        acc
    };

    let mut class_weights = Vec::new();
    let mut ok = dims.iter().take(histogram.len()).eq(histogram.iter())
        && dims.len() >= histogram.len()
        && dims[histogram.len()..].iter().all(|&d| d == 0);
    for w in &elements {
        let k = w.length();
        let target: Vec<i64> = {
            let mut acc = vec![0i64; rs.rank()];
            for &idx in w.inversion_set() {
                for (s, c) in acc.iter_mut().zip(&rs.positive_roots()[idx]) {
                    *s -= c;
                }
            }
            acc
        };
        let multiplicity = weight_block_cohomology(&complex, &binom, np, k, &target, &weight_of);
        if multiplicity != 1 {
            ok = false;
        }
        class_weights.push((k, target, multiplicity));
    }

    Ok(KostantReport {
        dims,
        histogram,
        class_weights,
        ok,
    })
}

/// `dim Hᵏ` of the weight-`λ` block of the complex.
fn weight_block_cohomology<S: Scalar>(
    complex: &CochainComplex<S>,
    binom: &Binomials,
    n: usize,
    k: usize,
    lambda: &[i64],
    weight_of: &dyn Fn(&[usize]) -> Vec<i64>,
) -> usize {
    let select = |deg: usize| -> Vec<usize> {
        crate::wedge::subsets(n, deg)
            .iter()
            .filter(|s| weight_of(s) == *lambda)
            .map(|s| binom.rank(n, s))
            .collect()
    };
    let block_rank = |deg: usize, cols: &[usize], rows: &[usize]| -> usize {
        if cols.is_empty() || rows.is_empty() {
            return 0;
        }
        let row_of: std::collections::BTreeMap<usize, usize> =
            rows.iter().enumerate().map(|(l, &g)| (g, l)).collect();
        let mut triplets = Vec::new();
        for (local_col, &global_col) in cols.iter().enumerate() {
            for (global_row, v) in complex.diff(deg).col(global_col) {
                let local_row = row_of
                    .get(global_row)
                    .expect("differential preserves the weight grading");
                triplets.push((*local_row, local_col, v.clone()));
            }
        }
        SparseMat::from_triplets(rows.len(), cols.len(), triplets).rank()
    };

    let here = select(k);
    let dim_here = here.len();
    let rank_out = if k < complex.top_degree() {
        block_rank(k, &here, &select(k + 1))
    } else {
        0
    };
    let rank_in = if k > 0 {
        block_rank(k - 1, &select(k - 1), &here)
    } else {
        0
    };
    dim_here - rank_out - rank_in
}

/// A distinguished representative of the invariant cohomology class of a
/// Weyl element: the wedge monomial pairing the inversion set on the `n`
/// and `n₋` dual legs, in degree `2 l(w)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KostantRepresentative {
    pub label: String,
    /// index subset of the monomial in the basis of `m = n ⊕ n₋`
    pub indices: Vec<usize>,
    pub weight_zero: bool,
    pub closed: bool,
    pub nonexact: bool,
}

impl KostantRepresentative {
    pub fn verified(&self) -> bool {
        self.weight_zero && self.closed && self.nonexact
    }
}

/// Builds and verifies the representative for one Weyl element: weight
/// zero, `d`-closed in the full complex, and non-exact in the invariant
/// subcomplex.
pub fn kostant_representative<S: Scalar>(
    rs: &RootSystem,
    w: &WeylElement,
) -> Result<KostantRepresentative, Error> {
    let chev = crate::roots::chevalley_algebra::<S>(rs)?;
    let (full, invariant) = invariant_flag_complex(&chev)?;
    let np = rs.num_positive();
    let dim = 2 * np;
    let binom = Binomials::new(dim);

    let mut indices: Vec<usize> = w.inversion_set().to_vec();
    indices.extend(w.inversion_set().iter().map(|&i| np + i));
    indices.sort_unstable();
    let degree = indices.len();
    debug_assert_eq!(degree, 2 * w.length());

    let label = if indices.is_empty() {
        "1".to_string()
    } else {
        indices
            .iter()
            .map(|&i| full.labels(1)[i].clone())
            .collect::<Vec<_>>()
            .join("∧")
    };

    // weight zero: the two legs cancel root by root
    let mut weight = vec![0i64; rs.rank()];
    for &i in &indices {
        let (sign, idx) = if i < np { (1, i) } else { (-1, i - np) };
        for (s, c) in weight.iter_mut().zip(&rs.positive_roots()[idx]) {
            *s += sign * c;
        }
    }
    let weight_zero = weight.iter().all(|&c| c == 0);

    let rank_in_full = binom.rank(dim, &indices);
    let cochain = unit_vec::<S>(full.degree_dims()[degree], rank_in_full);
    let closed = if degree < full.top_degree() {
        full.diff(degree)
            .apply_dense(&cochain)
            .iter()
            .all(Zero::is_zero)
    } else {
        true
    };

    // non-exactness inside the invariant subcomplex: the monomial must
    // stay outside the image of the previous invariant differential
    let nonexact = if degree == 0 {
        true
    } else {
        let inv_dim = invariant.degree_dims()[degree];
        let prev_dim = invariant.degree_dims()[degree - 1];
        // locate the monomial in the invariant basis by its label
        let position = invariant.labels(degree).iter().position(|l| *l == label);
        match position {
            None => false,
            Some(pos) => {
                let boundary = invariant.diff(degree - 1);
                let mut rows: Vec<Vec<S>> = (0..prev_dim)
                    .map(|j| boundary.apply_dense(&unit_vec::<S>(prev_dim, j)))
                    .collect();
                let image_rank = crate::exactlin::rank(&Mat::from_rows(rows.clone()));
                rows.push(unit_vec::<S>(inv_dim, pos));
                let extended_rank = crate::exactlin::rank(&Mat::from_rows(rows));
                extended_rank > image_rank
            }
        }
    };

    Ok(KostantRepresentative {
        label,
        indices,
        weight_zero,
        closed,
        nonexact,
    })
}

/// Symplectic-leaf census of the Bruhat Poisson structure: one leaf per
/// Weyl element, of dimension twice the length.
pub fn bruhat_leaves(rs: &RootSystem) -> Result<Vec<(WeylElement, usize)>, Error> {
    Ok(weyl_enumerate(rs)?
        .into_iter()
        .map(|w| {
            let dim = 2 * w.length();
            (w, dim)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    fn histogram_of(rs: &RootSystem) -> Vec<usize> {
        let elements = weyl_enumerate(rs).unwrap();
        let max = elements.iter().map(WeylElement::length).max().unwrap();
        let mut h = vec![0usize; max + 1];
        for w in &elements {
            h[w.length()] += 1;
        }
        h
    }

    #[test]
    fn a1_flag_cohomology_is_the_two_sphere() {
        let rs = RootSystem::by_name("A1").unwrap();
        let table = flag_cohomology::<Rat>(&rs, "A1").unwrap();
        assert_eq!(table.dims, vec![1, 0, 1]);
        assert_eq!(table.total, 2);
    }

    #[test]
    fn a2_flag_cohomology_matches_weyl_histogram() {
        let rs = RootSystem::by_name("A2").unwrap();
        let table = flag_cohomology::<Rat>(&rs, "A2").unwrap();
        assert_eq!(table.dims, vec![1, 0, 2, 0, 2, 0, 1]);
        assert_eq!(table.total, 6);
        // the independent route: Weyl length histogram by BFS
        let hist = histogram_of(&rs);
        for (k, &count) in hist.iter().enumerate() {
            assert_eq!(table.dims[2 * k], count);
        }
    }

    #[test]
    fn b2_flag_cohomology_matches_weyl_histogram() {
        let rs = RootSystem::by_name("B2").unwrap();
        let table = flag_cohomology::<Rat>(&rs, "B2").unwrap();
        let hist = histogram_of(&rs);
        assert_eq!(table.dims.len(), 2 * rs.num_positive() + 1);
        for (k, &d) in table.dims.iter().enumerate() {
            if k % 2 == 1 {
                assert_eq!(d, 0, "odd degree {k}");
            } else {
                assert_eq!(d, hist.get(k / 2).copied().unwrap_or(0), "degree {k}");
            }
        }
        assert_eq!(table.total, 8);
    }

    #[test]
    fn kostant_dims_for_small_types() {
        for (name, expected) in [
            ("A1", vec![1, 1]),
            ("A2", vec![1, 2, 2, 1]),
            ("B2", vec![1, 2, 2, 2, 1]),
        ] {
            let rs = RootSystem::by_name(name).unwrap();
            let report = kostant_check::<Rat>(&rs).unwrap();
            assert_eq!(report.dims, expected, "{name}");
            assert_eq!(report.histogram, expected, "{name}");
            assert!(report.ok, "{name}");
            assert!(report
                .class_weights
                .iter()
                .all(|(_, _, multiplicity)| *multiplicity == 1));
        }
    }

    #[test]
    fn kostant_class_weights_are_distinct() {
        let rs = RootSystem::by_name("B2").unwrap();
        let report = kostant_check::<Rat>(&rs).unwrap();
        let mut seen = std::collections::BTreeSet::new();
        for (_, weight, _) in &report.class_weights {
            assert!(seen.insert(weight.clone()));
        }
    }

    #[test]
    fn representative_of_identity_is_the_constant() {
        let rs = RootSystem::by_name("A2").unwrap();
        let elements = weyl_enumerate(&rs).unwrap();
        let id = elements.iter().find(|w| w.is_identity()).unwrap();
        let rep = kostant_representative::<Rat>(&rs, id).unwrap();
        assert_eq!(rep.label, "1");
        assert!(rep.verified());
    }

    #[test]
    fn a1_reflection_representative_is_top_invariant_monomial() {
        let rs = RootSystem::by_name("A1").unwrap();
        let elements = weyl_enumerate(&rs).unwrap();
        let s = elements.iter().find(|w| w.length() == 1).unwrap();
        let rep = kostant_representative::<Rat>(&rs, s).unwrap();
        assert_eq!(rep.indices, vec![0, 1]);
        assert!(rep.verified());
    }

    #[test]
    fn a2_representatives_exhaust_the_cohomology() {
        let rs = RootSystem::by_name("A2").unwrap();
        let table = flag_cohomology::<Rat>(&rs, "A2").unwrap();
        let mut per_degree = vec![0usize; table.dims.len()];
        for w in weyl_enumerate(&rs).unwrap() {
            let rep = kostant_representative::<Rat>(&rs, &w).unwrap();
            assert!(rep.verified(), "w of length {}", w.length());
            per_degree[rep.indices.len()] += 1;
        }
        assert_eq!(per_degree, table.dims);
    }

    #[test]
    fn leaf_census_counts_and_extremes() {
        for (name, w_order) in [("A1", 2), ("A2", 6), ("B2", 8)] {
            let rs = RootSystem::by_name(name).unwrap();
            let leaves = bruhat_leaves(&rs).unwrap();
            assert_eq!(leaves.len(), w_order, "{name}");
            let top = 2 * rs.num_positive();
            assert_eq!(
                leaves.iter().filter(|(_, d)| *d == 0).count(),
                1,
                "{name}: one point leaf"
            );
            assert_eq!(
                leaves.iter().filter(|(_, d)| *d == top).count(),
                1,
                "{name}: one open leaf"
            );
            assert!(leaves.iter().all(|(w, d)| *d == 2 * w.length()));
        }
    }

    #[test]
    fn a2_leaf_dimension_multiset() {
        let rs = RootSystem::by_name("A2").unwrap();
        let mut dims: Vec<usize> = bruhat_leaves(&rs).unwrap().iter().map(|(_, d)| *d).collect();
        dims.sort_unstable();
        assert_eq!(dims, vec![0, 2, 2, 4, 4, 6]);
    }
}
