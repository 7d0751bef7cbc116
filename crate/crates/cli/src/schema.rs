//! JSON schemas for algebras, bialgebras, and point data.
//!
//! Rationals travel as bare integers or `"p/q"` strings; no floating point
//! anywhere. Unknown fields are rejected, and index errors name the
//! offending entry. Serialization is deterministic: struct fields in
//! declaration order, coefficient maps in numeric key order.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer, Visitor};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use manin::bialg::LieBialgebra;
use manin::exactlin::Mat;
use manin::fiber::PointActionData;
use manin::liealg::LieAlgebra;
use manin::wedge;
use manin::Rat;

/// A rational in transport form: integer when the denominator is one,
/// `"p/q"` string otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Q(pub Rat);

impl Serialize for Q {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        if self.0.denom().is_one() {
            let numer = self.0.numer();
            if let Ok(small) = i64::try_from(numer.clone()) {
                return serializer.serialize_i64(small);
            }
            return serializer.serialize_str(&numer.to_string());
        }
        serializer.serialize_str(&format!("{}/{}", self.0.numer(), self.0.denom()))
    }
}

pub fn parse_rational(s: &str) -> Result<Rat, String> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n = BigInt::from_str(num).map_err(|_| format!("`{s}` is not an exact rational"))?;
    let d = BigInt::from_str(den).map_err(|_| format!("`{s}` is not an exact rational"))?;
    if d.is_zero() {
        return Err(format!("`{s}` has a zero denominator"));
    }
    Ok(Rat::new(n, d))
}

impl<'de> Deserialize<'de> for Q {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct QVisitor;
        impl Visitor<'_> for QVisitor {
            type Value = Q;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a \"p/q\" string")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Q, E> {
                Ok(Q(Rat::from_integer(v.into())))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Q, E> {
                Ok(Q(Rat::from_integer(v.into())))
            }

            fn visit_f64<E: de::Error>(self, _: f64) -> Result<Q, E> {
                Err(E::custom(
                    "floating-point numbers are not accepted; use \"p/q\" strings",
                ))
            }

            fn visit_str<E: de::Error>(self, s: &str) -> Result<Q, E> {
                parse_rational(s).map(Q).map_err(E::custom)
            }
        }
        deserializer.deserialize_any(QVisitor)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketJson {
    pub i: usize,
    pub j: usize,
    pub coeffs: BTreeMap<usize, Q>,
}

/// Structure-constant presentation of a Lie algebra; omitted bracket pairs
/// are zero.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraJson {
    pub dim: usize,
    pub basis: Vec<String>,
    pub brackets: Vec<BracketJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DeltaJson {
    pub i: usize,
    /// entries `[j, k, coeff]` of `δ(e_i)` in the `e_j ∧ e_k` basis
    pub wedge: Vec<(usize, usize, Q)>,
}

/// A Lie algebra plus its cocommutator.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BialgebraJson {
    pub dim: usize,
    pub basis: Vec<String>,
    pub brackets: Vec<BracketJson>,
    pub delta: Vec<DeltaJson>,
}

/// Point data for the anchor-kernel computation.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointDataJson {
    pub g_dim: usize,
    pub p_dim: usize,
    pub sigma: Vec<Vec<Q>>,
    pub pi_sharp: Vec<Vec<Q>>,
}

impl AlgebraJson {
    pub fn to_algebra(&self) -> Result<LieAlgebra<Rat>, String> {
        if self.basis.len() != self.dim {
            return Err(format!(
                "basis has {} names but dim is {}",
                self.basis.len(),
                self.dim
            ));
        }
        let mut brackets = Vec::new();
        for (pos, b) in self.brackets.iter().enumerate() {
            if b.i >= self.dim || b.j >= self.dim {
                return Err(format!(
                    "brackets[{pos}]: pair ({}, {}) references an index >= dim {}",
                    b.i, b.j, self.dim
                ));
            }
            let mut v = vec![Rat::zero(); self.dim];
            for (&k, q) in &b.coeffs {
                if k >= self.dim {
                    return Err(format!(
                        "brackets[{pos}].coeffs: index {k} >= dim {}",
                        self.dim
                    ));
                }
                v[k] = q.0.clone();
            }
            brackets.push((b.i, b.j, v));
        }
        LieAlgebra::from_brackets(self.dim, self.basis.clone(), &brackets)
            .map_err(|e| e.to_string())
    }

    pub fn from_algebra(g: &LieAlgebra<Rat>) -> Self {
        let dim = g.dim();
        let mut brackets = Vec::new();
        for i in 0..dim {
            for j in (i + 1)..dim {
                let coeffs: BTreeMap<usize, Q> = g
                    .bracket_basis(i, j)
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(k, v)| (k, Q(v.clone())))
                    .collect();
                if !coeffs.is_empty() {
                    brackets.push(BracketJson { i, j, coeffs });
                }
            }
        }
        AlgebraJson {
            dim,
            basis: g.basis_names().to_vec(),
            brackets,
        }
    }
}

impl BialgebraJson {
    pub fn to_bialgebra(&self) -> Result<LieBialgebra<Rat>, String> {
        let algebra = AlgebraJson {
            dim: self.dim,
            basis: self.basis.clone(),
            brackets: self.brackets.clone(),
        }
        .to_algebra()?;
        let n = self.dim;
        let mut delta = vec![vec![Rat::zero(); wedge::pair_count(n)]; n];
        for (pos, row) in self.delta.iter().enumerate() {
            if row.i >= n {
                return Err(format!("delta[{pos}]: index {} >= dim {n}", row.i));
            }
            for &(j, k, ref q) in &row.wedge {
                if j >= n || k >= n {
                    return Err(format!(
                        "delta[{pos}]: wedge pair ({j}, {k}) references an index >= dim {n}"
                    ));
                }
                if j == k {
                    return Err(format!(
                        "delta[{pos}]: wedge pair ({j}, {k}) is diagonal"
                    ));
                }
                let (lo, hi, v) = if j < k {
                    (j, k, q.0.clone())
                } else {
                    (k, j, -q.0.clone())
                };
                let idx = wedge::pair_index(n, lo, hi);
                delta[row.i][idx] = delta[row.i][idx].clone() + v;
            }
        }
        LieBialgebra::new(algebra, delta).map_err(|e| e.to_string())
    }
}

pub fn parse_matrix(rows: &[Vec<Q>], rows_expected: usize, cols_expected: usize, what: &str) -> Result<Mat<Rat>, String> {
    if rows.len() != rows_expected {
        return Err(format!(
            "{what}: expected {rows_expected} rows, found {}",
            rows.len()
        ));
    }
    for (i, r) in rows.iter().enumerate() {
        if r.len() != cols_expected {
            return Err(format!(
                "{what}: row {i} has {} entries, expected {cols_expected}",
                r.len()
            ));
        }
    }
    Ok(Mat::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|q| q.0.clone()).collect())
            .collect(),
    ))
}

impl PointDataJson {
    pub fn to_point_data(&self) -> Result<PointActionData<Rat>, String> {
        let sigma = parse_matrix(&self.sigma, self.p_dim, self.g_dim, "sigma")?;
        let pi_sharp = parse_matrix(&self.pi_sharp, self.p_dim, self.p_dim, "pi_sharp")?;
        PointActionData::new(sigma, pi_sharp).map_err(|e| e.to_string())
    }
}

/// Rows of rationals as a plain matrix block (subspace bases and the like).
pub fn rows_to_vecs(rows: &[Vec<Q>], width: usize, what: &str) -> Result<Vec<Vec<Rat>>, String> {
    for (i, r) in rows.iter().enumerate() {
        if r.len() != width {
            return Err(format!(
                "{what}: row {i} has {} entries, expected {width}",
                r.len()
            ));
        }
    }
    Ok(rows
        .iter()
        .map(|r| r.iter().map(|q| q.0.clone()).collect())
        .collect())
}

/// Input for the Manin-triple check.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManinJson {
    pub bialgebra: BialgebraJson,
    pub a: Vec<Vec<Q>>,
    pub b: Vec<Vec<Q>>,
}

/// Input for relative cohomology.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelativeJson {
    pub algebra: AlgebraJson,
    pub h: Vec<Vec<Q>>,
}

/// Input for the matched-pair split.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatchedJson {
    pub algebra: AlgebraJson,
    pub h: Vec<Vec<Q>>,
    pub n: Vec<Vec<Q>>,
}

/// Input for plain cohomology: an algebra plus an optional representation
/// (one matrix per basis vector).
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CohomologyJson {
    pub dim: usize,
    pub basis: Vec<String>,
    pub brackets: Vec<BracketJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub representation: Option<Vec<Vec<Vec<Q>>>>,
}

/// Any of the accepted top-level documents, distinguished by their fields.
pub enum ParsedInput {
    Algebra(LieAlgebra<Rat>),
    Bialgebra(LieBialgebra<Rat>),
    PointData(PointActionData<Rat>),
}

/// Parses bytes into whichever schema matches the present fields:
/// `delta` selects the bialgebra schema, `sigma` the point-data schema,
/// plain structure constants otherwise.
pub fn parse_algebra_json(bytes: &str) -> Result<ParsedInput, String> {
    let value: serde_json::Value =
        serde_json::from_str(bytes).map_err(|e| format!("invalid JSON: {e}"))?;
    let obj = value
        .as_object()
        .ok_or_else(|| "top-level JSON value must be an object".to_string())?;
    if obj.contains_key("delta") {
        let parsed: BialgebraJson =
            serde_json::from_value(value.clone()).map_err(|e| format!("bialgebra schema: {e}"))?;
        return parsed.to_bialgebra().map(ParsedInput::Bialgebra);
    }
    if obj.contains_key("sigma") {
        let parsed: PointDataJson =
            serde_json::from_value(value.clone()).map_err(|e| format!("point-data schema: {e}"))?;
        return parsed.to_point_data().map(ParsedInput::PointData);
    }
    let parsed: AlgebraJson =
        serde_json::from_value(value).map_err(|e| format!("algebra schema: {e}"))?;
    parsed.to_algebra().map(ParsedInput::Algebra)
}

/// Formats a rational the way the JSON layer does ("p" or "p/q").
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Signed-magnitude guard used by tables: true when worth printing.
pub fn is_nonzero(r: &Rat) -> bool {
    !r.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_round_trip() {
        for s in ["0", "5", "-12", "1/3", "-7/4"] {
            let q = Q(parse_rational(s).unwrap());
            let json = serde_json::to_string(&q).unwrap();
            let back: Q = serde_json::from_str(&json).unwrap();
            assert_eq!(q, back, "{s}");
        }
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(serde_json::from_str::<Q>("0.5").is_err());
    }

    #[test]
    fn minimal_abelian_parses() {
        let doc = r#"{"dim":1,"basis":["x"],"brackets":[]}"#;
        let ParsedInput::Algebra(g) = parse_algebra_json(doc).unwrap() else {
            panic!("expected algebra");
        };
        assert_eq!(g.dim(), 1);
    }

    #[test]
    fn out_of_range_index_names_the_entry() {
        let doc = r#"{"dim":2,"basis":["x","y"],"brackets":[{"i":0,"j":5,"coeffs":{}}]}"#;
        let err = parse_algebra_json(doc).unwrap_err();
        assert!(err.contains("brackets[0]"), "{err}");
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let doc = r#"{"dim":1,"basis":["x"],"brackets":[],"extra":1}"#;
        assert!(parse_algebra_json(doc).is_err());
    }

    #[test]
    fn algebra_emit_then_parse_is_identity() {
        let g = LieAlgebra::<Rat>::sl2();
        let json = serde_json::to_string(&AlgebraJson::from_algebra(&g)).unwrap();
        let ParsedInput::Algebra(back) = parse_algebra_json(&json).unwrap() else {
            panic!("expected algebra");
        };
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(back.bracket_basis(i, j), g.bracket_basis(i, j));
            }
        }
    }

    #[test]
    fn wedge_entries_antisymmetrize() {
        let doc = r#"{
            "dim": 2, "basis": ["x", "y"], "brackets": [],
            "delta": [{"i": 0, "wedge": [[1, 0, "1/2"]]}]
        }"#;
        let ParsedInput::Bialgebra(b) = parse_algebra_json(doc).unwrap() else {
            panic!("expected bialgebra");
        };
        // [1,0,1/2] means (e1 ∧ e0) coefficient 1/2 = -(1/2) on (e0 ∧ e1)
        assert_eq!(b.delta()[0][0], -Rat::new(1.into(), 2.into()));
    }
}
