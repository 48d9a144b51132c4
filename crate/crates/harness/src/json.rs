//! JSON forms of matrices, reports and decompositions.
//!
//! Matrices are `{"rows", "cols", "re", "im"}` with `re`/`im` nested
//! row arrays. Entries are written with 17 significant digits so a
//! write/read cycle is bit-exact.

use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Deserialize, Serialize, Serializer};
use serde_json::value::RawValue;

use tripotent_core::decomp::HSDecomposition;
use tripotent_core::{ComplexMatrix, TheoremReport};

use crate::error::{HarnessError, Result};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixIn {
    rows: usize,
    cols: usize,
    re: Vec<Vec<f64>>,
    im: Vec<Vec<f64>>,
}

/// Parses the matrix JSON format.
pub fn parse_matrix(text: &str) -> Result<ComplexMatrix> {
    let m: MatrixIn = serde_json::from_str(text)?;
    matrix_from_parts(m)
}

fn matrix_from_parts(m: MatrixIn) -> Result<ComplexMatrix> {
    let bad = |msg: String| Err(HarnessError::Format(msg));
    for (name, part) in [("re", &m.re), ("im", &m.im)] {
        if part.len() != m.rows {
            return bad(format!("`{name}` has {} rows, expected {}", part.len(), m.rows));
        }
        if let Some((i, row)) = part.iter().enumerate().find(|(_, r)| r.len() != m.cols) {
            return bad(format!("`{name}` row {i} has {} entries, expected {}", row.len(), m.cols));
        }
    }
    let re: Vec<f64> = m.re.into_iter().flatten().collect();
    let im: Vec<f64> = m.im.into_iter().flatten().collect();
    Ok(ComplexMatrix::from_parts(m.rows, m.cols, &re, &im)?)
}

pub fn read_matrix(path: &std::path::Path) -> Result<ComplexMatrix> {
    let text = std::fs::read_to_string(path).map_err(|source| HarnessError::Read { path: path.into(), source })?;
    parse_matrix(&text)
}

fn number(x: f64) -> Box<RawValue> {
    // `{:e}` on a non-finite value is not JSON; entries are finite by invariant.
    let text = if x.is_finite() { format!("{x:.16e}") } else { "null".into() };
    RawValue::from_string(text).expect("formatted float is valid JSON")
}

/// Serializes as the matrix JSON object.
pub struct MatrixJson<'a>(pub &'a ComplexMatrix);

impl Serialize for MatrixJson<'_> {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let m = self.0;
        let rows = |f: fn(tripotent_core::C64) -> f64| -> Vec<Vec<Box<RawValue>>> {
            (0..m.rows()).map(|i| (0..m.cols()).map(|j| number(f(m.get(i, j)))).collect()).collect()
        };
        let mut s = ser.serialize_struct("Matrix", 4)?;
        s.serialize_field("rows", &m.rows())?;
        s.serialize_field("cols", &m.cols())?;
        s.serialize_field("re", &rows(|z| z.re))?;
        s.serialize_field("im", &rows(|z| z.im))?;
        s.end()
    }
}

pub fn matrix_to_string(m: &ComplexMatrix) -> String {
    serde_json::to_string(&MatrixJson(m)).expect("matrix serializes")
}

/// Name → value pairs, emitted as an object in their original order.
struct Residuals<'a>(&'a [(String, f64)]);

impl Serialize for Residuals<'_> {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = ser.serialize_map(Some(self.0.len()))?;
        for (k, v) in self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

pub struct ReportJson<'a>(pub &'a TheoremReport);

impl Serialize for ReportJson<'_> {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let r = self.0;
        let mut s = ser.serialize_struct("TheoremReport", 9)?;
        s.serialize_field("theorem_id", &r.theorem_id)?;
        s.serialize_field("condition_holds", &r.condition_holds)?;
        s.serialize_field("is_three_op", &r.is_three_op)?;
        s.serialize_field("target", r.target)?;
        s.serialize_field("target_holds", &r.target_holds)?;
        s.serialize_field("verdict_consistent", &r.verdict_consistent)?;
        s.serialize_field("exclusion_flag", &r.exclusion_flag)?;
        s.serialize_field("residuals", &Residuals(&r.residuals))?;
        s.serialize_field("witness", &r.witness.as_ref().map(MatrixJson))?;
        s.end()
    }
}

pub struct HsJson<'a>(pub &'a HSDecomposition);

impl Serialize for HsJson<'_> {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let d = self.0;
        let mut s = ser.serialize_struct("HSDecomposition", 5)?;
        s.serialize_field("rank", &d.rank)?;
        s.serialize_field("sigma", &d.sigma)?;
        s.serialize_field("u", &MatrixJson(&d.u))?;
        s.serialize_field("k", &MatrixJson(&d.k))?;
        s.serialize_field("l", &MatrixJson(&d.l))?;
        s.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use tripotent_core::c64;

    #[test]
    fn round_trip_is_bit_exact() {
        let vals = [0.1, -1.0 / 3.0, 1e-300, 5e-324, f64::MAX, -0.0, 2.0f64.sqrt()];
        let m = ComplexMatrix::from_fn(2, 7, |i, j| c64(if i == 0 { vals[j] } else { -vals[j] }, -vals[6 - j]));
        let back = parse_matrix(&matrix_to_string(&m)).unwrap();
        for (x, y) in m.entries().iter().zip(back.entries()) {
            assert_eq!(x.re.to_bits(), y.re.to_bits());
            assert_eq!(x.im.to_bits(), y.im.to_bits());
        }
    }

    #[test]
    fn shape_errors() {
        assert!(parse_matrix(r#"{"rows":1,"cols":2,"re":[[1]],"im":[[0,0]]}"#).is_err());
        assert!(parse_matrix(r#"{"rows":2,"cols":1,"re":[[1]],"im":[[0]]}"#).is_err());
        assert!(parse_matrix(r#"{"rows":0,"cols":0,"re":[],"im":[]}"#).is_err());
        assert!(matches!(parse_matrix("{"), Err(HarnessError::Json(_))));
    }

    #[test]
    fn report_shape() {
        let a = ComplexMatrix::diag_real(&[2.0]);
        let r = tripotent_core::characterizations::check_linear_family(&a, 'b', &Default::default()).unwrap();
        let v: serde_json::Value = serde_json::to_value(ReportJson(&r)).unwrap();
        assert_eq!(v["theorem_id"], "linear-family/b");
        assert_eq!(v["condition_holds"], false);
        assert!(v["residuals"].is_object());
        assert!(v["witness"].is_null());
    }
}
