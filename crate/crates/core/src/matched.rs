//! Matched pairs of Lie algebras: decompositions `l = h ⊕ n` into two
//! subalgebras with their mutual actions, the coisotropic double
//! `h + h^⊥` inside `d = g ⋈ g*`, and the fiber algebra at a vanishing
//! point of the Poisson structure.

use crate::bialg::{self, LieBialgebra};
use crate::error::Error;
use crate::exactlin::{self, kernel_basis, unit_vec, zero_vec, Mat, Subspace};
use crate::liealg::LieAlgebra;
use crate::scalar::Scalar;

/// A Lie algebra `l` split as `h ⊕ n` with both legs subalgebras. The
/// mixed bracket decomposes as `[x, ξ] = -ξ·x + x·ξ` with `ξ·x ∈ h` and
/// `x·ξ ∈ n`; the two action families are stored as matrices over the
/// canonical bases of the legs.
#[derive(Clone, Debug)]
pub struct MatchedPair<S> {
    l: LieAlgebra<S>,
    h: Subspace<S>,
    n: Subspace<S>,
    /// `act_h_on_n[i]` maps `n → n`; column `j` holds the `n`-coordinates
    /// of `h_i · n_j`.
    act_h_on_n: Vec<Mat<S>>,
    /// `act_n_on_h[j]` maps `h → h`; column `i` holds the `h`-coordinates
    /// of `n_j · h_i`.
    act_n_on_h: Vec<Mat<S>>,
}

impl<S: Scalar> MatchedPair<S> {
    pub fn algebra(&self) -> &LieAlgebra<S> {
        &self.l
    }

    pub fn h(&self) -> &Subspace<S> {
        &self.h
    }

    pub fn n(&self) -> &Subspace<S> {
        &self.n
    }

    pub fn act_h_on_n(&self) -> &[Mat<S>] {
        &self.act_h_on_n
    }

    pub fn act_n_on_h(&self) -> &[Mat<S>] {
        &self.act_n_on_h
    }

    /// Rebuilds the bracket table of `l` in the combined `(h, n)` basis
    /// from the leg brackets and the stored actions:
    /// `[x₁+ξ₁, x₂+ξ₂] = [x₁,x₂] + [ξ₁,ξ₂] + x₁·ξ₂ - ξ₂·x₁ + ξ₁·x₂ - x₂·ξ₁`.
    pub fn reassembled_algebra(&self) -> LieAlgebra<S> {
        let dh = self.h.dim();
        let dn = self.n.dim();
        let dim = dh + dn;
        let mut brackets = Vec::new();
        let h_rows: Vec<Vec<S>> = self.h.basis_rows().map(<[S]>::to_vec).collect();
        let n_rows: Vec<Vec<S>> = self.n.basis_rows().map(<[S]>::to_vec).collect();

        let embed = |hc: Vec<S>, nc: Vec<S>| {
            let mut v = hc;
            v.extend(nc);
            v
        };

        for i in 0..dh {
            for j in (i + 1)..dh {
                let br = self.l.bracket_of(&h_rows[i], &h_rows[j]).expect("leg vector");
                let coords = self.h.coordinates(&br).expect("h is a subalgebra");
                brackets.push((i, j, embed(coords, zero_vec(dn))));
            }
            for j in 0..dn {
                let h_part = exactlin::neg_vec(&self.act_n_on_h[j].col_vec(i));
                let n_part = self.act_h_on_n[i].col_vec(j);
                brackets.push((i, dh + j, embed(h_part, n_part)));
            }
        }
        for i in 0..dn {
            for j in (i + 1)..dn {
                let br = self.l.bracket_of(&n_rows[i], &n_rows[j]).expect("leg vector");
                let coords = self.n.coordinates(&br).expect("n is a subalgebra");
                brackets.push((dh + i, dh + j, embed(zero_vec(dh), coords)));
            }
        }
        LieAlgebra::from_brackets(dim, Vec::new(), &brackets)
            .expect("reassembled table is antisymmetric")
    }

    /// The bracket table of `l` expressed in the combined `(h, n)` basis,
    /// computed directly from `l`. Equality with
    /// [`MatchedPair::reassembled_algebra`] is the defining property of a
    /// matched pair.
    pub fn algebra_in_split_basis(&self) -> LieAlgebra<S> {
        let rows: Vec<Vec<S>> = self
            .h
            .basis_rows()
            .chain(self.n.basis_rows())
            .map(<[S]>::to_vec)
            .collect();
        let dim = rows.len();
        let basis_t = Mat::from_rows(rows.clone()).transpose();
        let mut brackets = Vec::new();
        for i in 0..dim {
            for j in (i + 1)..dim {
                let br = self.l.bracket_of(&rows[i], &rows[j]).expect("leg vector");
                let coords = exactlin::solve(&basis_t, &br).expect("basis spans l");
                brackets.push((i, j, coords));
            }
        }
        LieAlgebra::from_brackets(dim, Vec::new(), &brackets)
            .expect("change of basis preserves antisymmetry")
    }
}

/// Splits `l` along two complementary subalgebras, extracting the mutual
/// actions from the mixed brackets.
pub fn split_matched_pair<S: Scalar>(
    l: &LieAlgebra<S>,
    h: &Subspace<S>,
    n: &Subspace<S>,
) -> Result<MatchedPair<S>, Error> {
    let dim = l.dim();
    for s in [h, n] {
        if s.ambient_dim() != dim {
            return Err(Error::DimMismatch {
                expected: dim,
                got: s.ambient_dim(),
                context: "matched pair leg",
            });
        }
    }
    if h.dim() + n.dim() != dim {
        return Err(Error::NotDirectSum {
            reason: "leg dimensions do not add up to dim l",
        });
    }
    if exactlin::intersect(h, n)?.dim() != 0 {
        return Err(Error::NotDirectSum {
            reason: "legs intersect nontrivially",
        });
    }
    if !l.is_subalgebra(h)? {
        return Err(Error::NotSubalgebra { which: "h" });
    }
    if !l.is_subalgebra(n)? {
        return Err(Error::NotSubalgebra { which: "n" });
    }

    let dh = h.dim();
    let dn = n.dim();
    let h_rows: Vec<Vec<S>> = h.basis_rows().map(<[S]>::to_vec).collect();
    let n_rows: Vec<Vec<S>> = n.basis_rows().map(<[S]>::to_vec).collect();
    let basis_t = Mat::from_rows(
        h_rows.iter().chain(n_rows.iter()).cloned().collect(),
    )
    .transpose();

    let mut act_h_on_n = vec![Mat::<S>::zeros(dn, dn); dh];
    let mut act_n_on_h = vec![Mat::<S>::zeros(dh, dh); dn];
    for i in 0..dh {
        for j in 0..dn {
            let br = l.bracket_of(&h_rows[i], &n_rows[j])?;
            let coords = exactlin::solve(&basis_t, &br).expect("legs span l");
            // [x, ξ] = -ξ·x + x·ξ
            for a in 0..dh {
                act_n_on_h[j][(a, i)] = -coords[a].clone();
            }
            for b in 0..dn {
                act_h_on_n[i][(b, j)] = coords[dh + b].clone();
            }
        }
    }

    Ok(MatchedPair {
        l: l.clone(),
        h: h.clone(),
        n: n.clone(),
        act_h_on_n,
        act_n_on_h,
    })
}

/// The coisotropic double: for a subalgebra `h ⊆ g` whose annihilator
/// `h^⊥` is closed under the dual bracket, the subalgebra `h + h^⊥` of the
/// double `d = g ⋈ g*`, returned as a matched pair with legs `h` and
/// `h^⊥`.
pub fn coisotropic_double<S: Scalar>(
    b: &LieBialgebra<S>,
    h: &Subspace<S>,
) -> Result<MatchedPair<S>, Error> {
    let n = b.algebra().dim();
    if h.ambient_dim() != n {
        return Err(Error::DimMismatch {
            expected: n,
            got: h.ambient_dim(),
            context: "coisotropic subalgebra",
        });
    }
    if !b.algebra().is_subalgebra(h)? {
        return Err(Error::NotSubalgebra { which: "h" });
    }
    let h_perp = if h.dim() == 0 {
        Subspace::full(n)
    } else {
        kernel_basis(h.basis())
    };
    let dual = bialg::dual_algebra(b);
    if !dual.is_subalgebra(&h_perp)? {
        return Err(Error::NotCoisotropic);
    }

    let double = bialg::assemble_double(b);
    let dh = h.dim();
    let dp = h_perp.dim();
    let dim = dh + dp;

    // basis of h + h_perp inside the 2n-dimensional double
    let mut rows: Vec<Vec<S>> = Vec::with_capacity(dim);
    for r in h.basis_rows() {
        let mut v = r.to_vec();
        v.extend(zero_vec::<S>(n));
        rows.push(v);
    }
    for r in h_perp.basis_rows() {
        let mut v = zero_vec::<S>(n);
        v.extend(r.to_vec());
        rows.push(v);
    }
    let basis_t = Mat::from_rows(rows.clone()).transpose();

    let mut brackets = Vec::new();
    for i in 0..dim {
        for j in (i + 1)..dim {
            let br = double.algebra().bracket_of(&rows[i], &rows[j])?;
            let coords = exactlin::solve(&basis_t, &br).ok_or(Error::NotSubalgebra {
                which: "h + h_perp",
            })?;
            // solve() leaves free coordinates at zero, so verify membership
            let mut recon = zero_vec::<S>(2 * n);
            for (c, row) in coords.iter().zip(&rows) {
                for (acc, x) in recon.iter_mut().zip(row) {
                    let t = c.clone() * x.clone();
                    *acc = acc.clone() + t;
                }
            }
            if recon != br {
                return Err(Error::NotSubalgebra {
                    which: "h + h_perp",
                });
            }
            brackets.push((i, j, coords));
        }
    }
    let names: Vec<String> = (0..dh)
        .map(|i| format!("h{i}"))
        .chain((0..dp).map(|i| format!("p{i}")))
        .collect();
    let l = LieAlgebra::from_brackets(dim, names, &brackets)?.validated()?;

    let h_leg = Subspace::from_rows(dim, (0..dh).map(|i| unit_vec(dim, i)).collect());
    let n_leg = Subspace::from_rows(dim, (dh..dim).map(|i| unit_vec(dim, i)).collect());
    split_matched_pair(&l, &h_leg, &n_leg)
}

/// The fiber algebra `l_p ≅ g_p ⊕ T*_pP` at a point where the Poisson
/// bivector vanishes. `sigma` maps `g → T_pP` (columns indexed by the
/// `g`-basis); the stabilizer `g_p = ker sigma` is computed internally and
/// `gp_action` must list one `T*_pP`-endomorphism per canonical basis
/// vector of `g_p`. `t_bracket` is the transversal Lie algebra on `T*_pP`.
///
/// The bracket is
/// `[(x,α), (y,β)] = ([x,y] + ad*_{φ(α)} y - ad*_{φ(β)} x, [α,β] + x·β - y·α)`
/// with `φ(α) = σᵀ α`. The stability `ad*_{φ(α)} g_p ⊆ g_p` is validated
/// rather than assumed, and the assembled algebra must pass Jacobi.
pub fn lp_at_vanishing_point<S: Scalar>(
    b: &LieBialgebra<S>,
    sigma: &Mat<S>,
    t_bracket: &LieAlgebra<S>,
    gp_action: &[Mat<S>],
) -> Result<LieAlgebra<S>, Error> {
    let g = b.algebra();
    let g_dim = g.dim();
    let p_dim = sigma.rows();
    if sigma.cols() != g_dim {
        return Err(Error::DimMismatch {
            expected: g_dim,
            got: sigma.cols(),
            context: "sigma columns vs g basis",
        });
    }
    if t_bracket.dim() != p_dim {
        return Err(Error::DimMismatch {
            expected: p_dim,
            got: t_bracket.dim(),
            context: "transversal algebra dimension",
        });
    }
    if let Some(e) = t_bracket.validate_jacobi().first_error() {
        return Err(e);
    }

    let g_p = kernel_basis(sigma);
    let dgp = g_p.dim();
    if gp_action.len() != dgp {
        return Err(Error::Inconsistent(format!(
            "gp_action has {} matrices but g_p has dimension {dgp}",
            gp_action.len()
        )));
    }
    for m in gp_action {
        if m.rows() != p_dim || m.cols() != p_dim {
            return Err(Error::DimMismatch {
                expected: p_dim,
                got: m.rows(),
                context: "gp_action matrix size",
            });
        }
    }
    if !g.is_subalgebra(&g_p)? {
        return Err(Error::NotSubalgebra { which: "g_p" });
    }

    let dual = bialg::dual_algebra(b);
    let sigma_t = sigma.transpose();
    // φ(e_a*) = σᵀ e_a is the a-th row of sigma read as a covector on g
    let phi: Vec<Vec<S>> = (0..p_dim).map(|a| sigma_t.col_vec(a)).collect();

    let gp_rows: Vec<Vec<S>> = g_p.basis_rows().map(<[S]>::to_vec).collect();
    for (a, phi_a) in phi.iter().enumerate() {
        for x in &gp_rows {
            let moved = dual.coadjoint(phi_a, x)?;
            if !g_p.contains(&moved) {
                return Err(Error::Inconsistent(format!(
                    "ad*_phi(alpha_{a}) does not preserve g_p"
                )));
            }
        }
    }

    let dim = dgp + p_dim;
    let embed = |gp_coords: Vec<S>, t_coords: Vec<S>| {
        let mut v = gp_coords;
        v.extend(t_coords);
        v
    };

    let mut brackets = Vec::new();
    for i in 0..dgp {
        for j in (i + 1)..dgp {
            let br = g.bracket_of(&gp_rows[i], &gp_rows[j])?;
            let coords = g_p.coordinates(&br).expect("g_p is a subalgebra");
            brackets.push((i, j, embed(coords, zero_vec(p_dim))));
        }
        for a in 0..p_dim {
            // [(x_i, 0), (0, e_a)] = (-ad*_{φ(e_a)} x_i,  x_i · e_a)
            let moved = dual.coadjoint(&phi[a], &gp_rows[i])?;
            let gp_coords = g_p
                .coordinates(&exactlin::neg_vec(&moved))
                .expect("stability was validated");
            let t_coords = gp_action[i].col_vec(a);
            brackets.push((i, dgp + a, embed(gp_coords, t_coords)));
        }
    }
    for a in 0..p_dim {
        for c in (a + 1)..p_dim {
            brackets.push((
                dgp + a,
                dgp + c,
                embed(zero_vec(dgp), t_bracket.bracket_basis(a, c).to_vec()),
            ));
        }
    }

    let names: Vec<String> = (0..dgp)
        .map(|i| format!("k{i}"))
        .chain(t_bracket.basis_names().iter().cloned())
        .collect();
    LieAlgebra::from_brackets(dim, names, &brackets)?.validated()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::is_zero_vec;
    use crate::scalar::from_int;
    use crate::Rat;

    fn q(n: i64) -> Rat {
        from_int(n)
    }

    fn v(coords: &[i64]) -> Vec<Rat> {
        coords.iter().map(|&n| q(n)).collect()
    }

    fn spanned(ambient: usize, rows: &[&[i64]]) -> Subspace<Rat> {
        Subspace::from_rows(ambient, rows.iter().map(|r| v(r)).collect())
    }

    /// Direct sum of two sl2 copies: both legs are ideals.
    fn sl2_plus_sl2() -> LieAlgebra<Rat> {
        let g = LieAlgebra::<Rat>::sl2();
        let mut brackets = Vec::new();
        for i in 0..3 {
            for j in (i + 1)..3 {
                let mut left = g.bracket_basis(i, j).to_vec();
                left.extend(v(&[0, 0, 0]));
                brackets.push((i, j, left));
                let mut right = v(&[0, 0, 0]);
                right.extend(g.bracket_basis(i, j).to_vec());
                brackets.push((3 + i, 3 + j, right));
            }
        }
        LieAlgebra::from_brackets(6, Vec::new(), &brackets)
            .unwrap()
            .validated()
            .unwrap()
    }

    #[test]
    fn direct_sum_of_ideals_has_zero_actions() {
        let l = sl2_plus_sl2();
        let h = spanned(6, &[&[1, 0, 0, 0, 0, 0], &[0, 1, 0, 0, 0, 0], &[0, 0, 1, 0, 0, 0]]);
        let n = spanned(6, &[&[0, 0, 0, 1, 0, 0], &[0, 0, 0, 0, 1, 0], &[0, 0, 0, 0, 0, 1]]);
        let mp = split_matched_pair(&l, &h, &n).unwrap();
        assert!(mp.act_h_on_n().iter().all(Mat::is_zero));
        assert!(mp.act_n_on_h().iter().all(Mat::is_zero));
    }

    #[test]
    fn double_of_standard_sl2_splits_into_coadjoint_actions() {
        let b = LieBialgebra::<Rat>::standard_sl2();
        let d = bialg::build_double(&b).unwrap();
        let mp = split_matched_pair(d.algebra(), d.g_part(), d.gstar_part()).unwrap();

        // oracle: the actions are the two co-adjoint actions of the
        // double bracket, compared componentwise
        let dual = bialg::dual_algebra(&b);
        for i in 0..3 {
            let x = unit_vec::<Rat>(3, i);
            for j in 0..3 {
                let xi = unit_vec::<Rat>(3, j);
                // x · ξ = ad*_x ξ
                let expected_n = b.algebra().coadjoint(&x, &xi).unwrap();
                assert_eq!(mp.act_h_on_n()[i].col_vec(j), expected_n);
                // ξ · x = ad*_ξ x
                let expected_h = dual.coadjoint(&xi, &x).unwrap();
                assert_eq!(mp.act_n_on_h()[j].col_vec(i), expected_h);
            }
        }
    }

    #[test]
    fn non_subalgebra_leg_is_rejected() {
        let l = LieAlgebra::<Rat>::sl2();
        let h = spanned(3, &[&[0, 1, 0]]);
        let n = spanned(3, &[&[1, 0, 0], &[0, 0, 1]]);
        // [e, f] = h is not in n
        assert!(matches!(
            split_matched_pair(&l, &h, &n),
            Err(Error::NotSubalgebra { which: "n" })
        ));
    }

    #[test]
    fn reassembly_reproduces_structure_constants() {
        let b = LieBialgebra::<Rat>::standard_sl2();
        let d = bialg::build_double(&b).unwrap();
        let mp = split_matched_pair(d.algebra(), d.g_part(), d.gstar_part()).unwrap();
        let rebuilt = mp.reassembled_algebra();
        let direct = mp.algebra_in_split_basis();
        for i in 0..6 {
            for j in 0..6 {
                assert_eq!(rebuilt.bracket_basis(i, j), direct.bracket_basis(i, j));
            }
        }
    }

    #[test]
    fn coisotropic_double_of_cartan_in_sl2() {
        let b = LieBialgebra::<Rat>::standard_sl2();
        let cartan = spanned(3, &[&[0, 1, 0]]);
        let mp = coisotropic_double(&b, &cartan).unwrap();
        let l = mp.algebra();
        assert_eq!(l.dim(), 3);
        // frozen: with basis (h; e*, f*): [h, e*] = -2e*, [h, f*] = 2f*,
        // [e*, f*] = 0 (exhaustive bracket computation inside the double)
        assert_eq!(l.bracket_basis(0, 1), &v(&[0, -2, 0])[..]);
        assert_eq!(l.bracket_basis(0, 2), &v(&[0, 0, 2])[..]);
        assert!(is_zero_vec(l.bracket_basis(1, 2)));
    }

    #[test]
    fn coisotropic_double_with_zero_delta_is_semidirect() {
        // δ = 0: h^⊥ abelian and the bracket reduces to the semidirect
        // form [x + ξ, y + η] = [x,y] + ad*_x η - ad*_y ξ
        let g = LieAlgebra::<Rat>::sl2();
        let b = LieBialgebra::with_zero_delta(g.clone());
        let borel = spanned(3, &[&[1, 0, 0], &[0, 1, 0]]);
        let mp = coisotropic_double(&b, &borel).unwrap();
        let l = mp.algebra();
        assert_eq!(l.dim(), 3);
        // n-leg brackets vanish
        assert!(is_zero_vec(l.bracket_basis(2, 2)));
        // mixed bracket equals ad*_x restricted to h^⊥
        let h_rows: Vec<Vec<Rat>> = borel.basis_rows().map(<[Rat]>::to_vec).collect();
        let h_perp = kernel_basis(borel.basis());
        for (i, x) in h_rows.iter().enumerate() {
            let xi = h_perp.basis_rows().next().unwrap().to_vec();
            let moved = g.coadjoint(x, &xi).unwrap();
            let br = l.bracket_basis(i, 2);
            // the n-component of [h_i, n_0] must be ad*_x ξ in h^⊥ coords
            let expected = h_perp.coordinates(&moved).unwrap();
            assert_eq!(&br[2..], &expected[..]);
        }
    }

    #[test]
    fn coisotropic_double_with_full_h_is_g_itself() {
        let b = LieBialgebra::<Rat>::standard_sl2();
        let full = Subspace::full(3);
        let mp = coisotropic_double(&b, &full).unwrap();
        assert_eq!(mp.n().dim(), 0);
        let g = b.algebra();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(mp.algebra().bracket_basis(i, j), g.bracket_basis(i, j));
            }
        }
    }

    #[test]
    fn non_coisotropic_h_is_rejected() {
        // δ(e) = h ∧ f makes [h*, f*] = e*, which escapes
        // h^⊥ = span{h*, f*} for h = span{e}
        let g = LieAlgebra::<Rat>::sl2();
        let mut delta = vec![zero_vec::<Rat>(3); 3];
        delta[0][crate::wedge::pair_index(3, 1, 2)] = q(1);
        let b = LieBialgebra::new(g, delta).unwrap();
        let h = spanned(3, &[&[1, 0, 0]]);
        assert!(matches!(
            coisotropic_double(&b, &h),
            Err(Error::NotCoisotropic)
        ));
    }

    #[test]
    fn vanishing_point_trivial_cases() {
        // sigma = 0, abelian transversal algebra, zero action: everything
        // abelian of dimension g_dim + p_dim
        let b = LieBialgebra::with_zero_delta(LieAlgebra::<Rat>::abelian(2));
        let sigma = Mat::<Rat>::zeros(2, 2);
        let t = LieAlgebra::<Rat>::abelian(2);
        let actions = vec![Mat::<Rat>::zeros(2, 2); 2];
        let l = lp_at_vanishing_point(&b, &sigma, &t, &actions).unwrap();
        assert_eq!(l.dim(), 4);
        for i in 0..4 {
            for j in 0..4 {
                assert!(is_zero_vec(l.bracket_basis(i, j)));
            }
        }
    }

    #[test]
    fn vanishing_point_semidirect_when_delta_zero() {
        // δ = 0 and abelian t: all ad* terms vanish and the result is the
        // semidirect product g_p ⋉ T*_pP through gp_action
        let b = LieBialgebra::with_zero_delta(LieAlgebra::<Rat>::sl2());
        // sigma kills h only
        let sigma = Mat::from_int_rows(&[&[1, 0, 0], &[0, 0, 1]]);
        let t = LieAlgebra::<Rat>::abelian(2);
        let action = Mat::from_int_rows(&[&[-2, 0], &[0, 2]]);
        let l = lp_at_vanishing_point(&b, &sigma, &t, &[action.clone()]).unwrap();
        assert_eq!(l.dim(), 3);
        // [k0, t_a] = action column a
        assert_eq!(l.bracket_basis(0, 1), &v(&[0, -2, 0])[..]);
        assert_eq!(l.bracket_basis(0, 2), &v(&[0, 0, 2])[..]);
        assert!(is_zero_vec(l.bracket_basis(1, 2)));
    }

    #[test]
    fn vanishing_point_homogeneous_case_matches_coisotropic_double() {
        // Standard sl2 bialgebra at the identity coset of K/T: sigma is the
        // quotient map g -> g/h in the (e, f) transversal coordinates, the
        // transversal bracket is the dual bracket on h^⊥ ≅ span{e*, f*}
        // (abelian here), and the Cartan acts on T*_pP by (-2, 2).
        let b = LieBialgebra::<Rat>::standard_sl2();
        let sigma = Mat::from_int_rows(&[&[1, 0, 0], &[0, 0, 1]]);
        let t = LieAlgebra::<Rat>::abelian(2);
        let action = Mat::from_int_rows(&[&[-2, 0], &[0, 2]]);
        let l = lp_at_vanishing_point(&b, &sigma, &t, &[action]).unwrap();

        let cartan = spanned(3, &[&[0, 1, 0]]);
        let reference = coisotropic_double(&b, &cartan).unwrap();
        // identical structure constants under T*_pP ≅ h^⊥
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(
                    l.bracket_basis(i, j),
                    reference.algebra().bracket_basis(i, j),
                    "pair ({i},{j})"
                );
            }
        }
    }

    #[test]
    fn vanishing_point_dimension_formula_with_full_rank_sigma() {
        let b = LieBialgebra::with_zero_delta(LieAlgebra::<Rat>::sl2());
        let sigma = Mat::from_int_rows(&[&[1, 0, 0], &[0, 0, 1]]);
        let t = LieAlgebra::<Rat>::abelian(2);
        let action = Mat::from_int_rows(&[&[-2, 0], &[0, 2]]);
        let l = lp_at_vanishing_point(&b, &sigma, &t, &[action]).unwrap();
        // dim = dim g_p + dim T*_pP when sigma has full row rank
        assert_eq!(l.dim(), 1 + 2);
    }

    #[test]
    fn vanishing_point_rejects_inconsistent_action_count() {
        let b = LieBialgebra::with_zero_delta(LieAlgebra::<Rat>::sl2());
        let sigma = Mat::<Rat>::zeros(2, 3);
        let t = LieAlgebra::<Rat>::abelian(2);
        assert!(matches!(
            lp_at_vanishing_point(&b, &sigma, &t, &[]),
            Err(Error::Inconsistent(_))
        ));
    }
}
