//! Matrix file formats and JSON emission.
//!
//! The matrix schema is
//! `{"name": str, "field": "real"|"complex", "dim": n, "data": [[...]]}`
//! with row-major entries; a complex scalar is a `[re, im]` pair. CSV input
//! is accepted for the real field only, as a plain `n x n` numeric grid.
//! All floating-point output is printed with 17 significant digits so files
//! round-trip to the exact in-memory doubles.

use std::fs;
use std::io::{self, Write};
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use serde::Deserialize;
use serde::Serialize;
use serde_json::{json, Value};

use pdcone::geometry::ExtendedReal;
use pdcone::linalg::{classify_definiteness, validate_hermitian, Definiteness, HermitianMatrix};
use pdcone::scalar::{Complex64, Scalar, ScalarField};
use pdcone::{tol, Matrix};

/// A parsed matrix of either field.
#[derive(Debug, Clone)]
pub enum AnyHermitian {
    Real(HermitianMatrix<f64>),
    Complex(HermitianMatrix<Complex64>),
}

impl AnyHermitian {
    pub fn dim(&self) -> usize {
        match self {
            AnyHermitian::Real(h) => h.dim(),
            AnyHermitian::Complex(h) => h.dim(),
        }
    }

    pub fn field(&self) -> ScalarField {
        match self {
            AnyHermitian::Real(_) => ScalarField::Real,
            AnyHermitian::Complex(_) => ScalarField::Complex,
        }
    }

    pub fn classify(&self) -> pdcone::Result<Definiteness> {
        match self {
            AnyHermitian::Real(h) => classify_definiteness(h, tol::ORDER),
            AnyHermitian::Complex(h) => classify_definiteness(h, tol::ORDER),
        }
    }

    pub fn to_complex(&self) -> HermitianMatrix<Complex64> {
        match self {
            AnyHermitian::Real(h) => promote_matrix(h),
            AnyHermitian::Complex(h) => h.clone(),
        }
    }
}

fn promote_matrix(h: &HermitianMatrix<f64>) -> HermitianMatrix<Complex64> {
    let m = h.matrix();
    HermitianMatrix::symmetrize(Matrix::from_fn(m.rows(), m.cols(), |i, j| {
        Complex64::new(m[(i, j)], 0.0)
    }))
}

/// A matrix with its collection name.
#[derive(Debug, Clone)]
pub struct NamedMatrix {
    pub name: String,
    pub matrix: AnyHermitian,
}

/// A pair lifted to a common field; mixed pairs are promoted to complex.
pub enum MatrixPair {
    Real(HermitianMatrix<f64>, HermitianMatrix<f64>),
    Complex(HermitianMatrix<Complex64>, HermitianMatrix<Complex64>),
}

pub fn promote_pair(a: &AnyHermitian, b: &AnyHermitian) -> MatrixPair {
    match (a, b) {
        (AnyHermitian::Real(x), AnyHermitian::Real(y)) => MatrixPair::Real(x.clone(), y.clone()),
        _ => MatrixPair::Complex(a.to_complex(), b.to_complex()),
    }
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum RawEntry {
    Real(f64),
    Complex([f64; 2]),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMatrixFile {
    name: String,
    field: String,
    dim: usize,
    data: Vec<Vec<RawEntry>>,
}

/// Parse a matrix from a `.json` or `.csv` file.
pub fn read_matrix(path: &Path) -> Result<NamedMatrix> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    match path.extension().and_then(|e| e.to_str()) {
        Some("csv") => parse_csv(path, &text),
        _ => parse_json(path, &text),
    }
}

fn parse_json(path: &Path, text: &str) -> Result<NamedMatrix> {
    let raw: RawMatrixFile = serde_json::from_str(text)
        .with_context(|| format!("invalid matrix JSON in {}", path.display()))?;
    if raw.name.is_empty() {
        bail!("{}: matrix name must be nonempty", path.display());
    }
    if raw.data.len() != raw.dim || raw.data.iter().any(|row| row.len() != raw.dim) {
        bail!(
            "{}: data shape does not match dim = {}",
            path.display(),
            raw.dim
        );
    }
    let matrix = match raw.field.as_str() {
        "real" => {
            let mut rows = Vec::with_capacity(raw.dim);
            for row in &raw.data {
                let mut out = Vec::with_capacity(raw.dim);
                for entry in row {
                    match entry {
                        RawEntry::Real(x) => out.push(*x),
                        RawEntry::Complex(_) => {
                            bail!("{}: complex entry in a real-field matrix", path.display())
                        }
                    }
                }
                rows.push(out);
            }
            AnyHermitian::Real(
                validate_hermitian(&Matrix::from_rows(rows), tol::SYMMETRY)
                    .map_err(|e| anyhow!("{}: {e}", path.display()))?,
            )
        }
        "complex" => {
            let mut rows = Vec::with_capacity(raw.dim);
            for row in &raw.data {
                let mut out = Vec::with_capacity(raw.dim);
                for entry in row {
                    out.push(match entry {
                        RawEntry::Real(x) => Complex64::new(*x, 0.0),
                        RawEntry::Complex([re, im]) => Complex64::new(*re, *im),
                    });
                }
                rows.push(out);
            }
            AnyHermitian::Complex(
                validate_hermitian(&Matrix::from_rows(rows), tol::SYMMETRY)
                    .map_err(|e| anyhow!("{}: {e}", path.display()))?,
            )
        }
        other => bail!(
            "{}: field must be \"real\" or \"complex\", got {other:?}",
            path.display()
        ),
    };
    Ok(NamedMatrix {
        name: raw.name,
        matrix,
    })
}

fn parse_csv(path: &Path, text: &str) -> Result<NamedMatrix> {
    let mut rows = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let row: Vec<f64> = line
            .split(',')
            .map(|cell| {
                cell.trim()
                    .parse::<f64>()
                    .with_context(|| format!("{}:{}: bad number {cell:?}", path.display(), lineno + 1))
            })
            .collect::<Result<_>>()?;
        rows.push(row);
    }
    let n = rows.len();
    if n == 0 || rows.iter().any(|r| r.len() != n) {
        bail!("{}: CSV must be a nonempty square grid", path.display());
    }
    let name = path
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("matrix")
        .to_string();
    let matrix = validate_hermitian(&Matrix::from_rows(rows), tol::SYMMETRY)
        .map_err(|e| anyhow!("{}: {e}", path.display()))?;
    Ok(NamedMatrix {
        name,
        matrix: AnyHermitian::Real(matrix),
    })
}

/// JSON value for a finite float; non-finite values must never reach the
/// serializer as bare numbers.
pub fn finite_num(x: f64) -> Value {
    assert!(x.is_finite(), "non-finite value leaked into JSON output");
    json!(x)
}

/// JSON value for an extended real: a number, or the string `"inf"`.
pub fn extended_value(x: ExtendedReal) -> Value {
    match x {
        ExtendedReal::Finite(v) => finite_num(v),
        ExtendedReal::Infinity => json!("inf"),
    }
}

/// Format an extended real for CSV cells.
pub fn extended_cell(x: ExtendedReal) -> String {
    match x {
        ExtendedReal::Finite(v) => format!("{v:.16e}"),
        ExtendedReal::Infinity => "inf".to_string(),
    }
}

fn entry_value<T: Scalar>(x: T) -> Value {
    match T::FIELD {
        ScalarField::Real => finite_num(x.re()),
        ScalarField::Complex => json!([finite_num(x.re()), finite_num(x.im())]),
    }
}

/// Matrix in the file schema, as a JSON value.
pub fn matrix_value<T: Scalar>(name: &str, h: &HermitianMatrix<T>) -> Value {
    let n = h.dim();
    let data: Vec<Value> = (0..n)
        .map(|i| Value::Array((0..n).map(|j| entry_value(h[(i, j)])).collect()))
        .collect();
    json!({
        "name": name,
        "field": T::FIELD.as_str(),
        "dim": n,
        "data": data,
    })
}

/// Serializer that prints every float with 17 significant digits
/// (`{:.16e}`), so emitted files are byte-stable and parse back exactly.
#[derive(Clone, Copy)]
struct SciFloats;

impl serde_json::ser::Formatter for SciFloats {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        write!(writer, "{value:.16e}")
    }
}

/// Serialize a JSON value with the fixed float format, newline-terminated.
pub fn to_json_string(value: &Value) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, SciFloats);
    value
        .serialize(&mut ser)
        .expect("in-memory JSON serialization cannot fail");
    buf.push(b'\n');
    String::from_utf8(buf).expect("serialized JSON is UTF-8")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_format_round_trips() {
        for &x in &[0.1, 1.0, -3.5e-7, 4f64.ln(), f64::MAX, f64::MIN_POSITIVE] {
            let s = format!("{x:.16e}");
            assert_eq!(s.parse::<f64>().unwrap(), x, "{s}");
        }
    }

    #[test]
    fn json_writer_uses_sci_floats() {
        let v = json!({"x": 0.25});
        assert_eq!(to_json_string(&v), "{\"x\":2.5000000000000000e-1}\n");
    }

    #[test]
    fn matrix_json_round_trip() {
        let h = HermitianMatrix::<f64>::from_real_diagonal(&[0.1, 2.0]);
        let value = matrix_value("t", &h);
        let text = to_json_string(&value);
        let tmp = std::env::temp_dir().join("pdcone_io_test_roundtrip.json");
        fs::write(&tmp, &text).unwrap();
        let parsed = read_matrix(&tmp).unwrap();
        fs::remove_file(&tmp).ok();
        assert_eq!(parsed.name, "t");
        match parsed.matrix {
            AnyHermitian::Real(m) => assert_eq!(m, h),
            _ => panic!("wrong field"),
        }
    }

    #[test]
    fn complex_entries_round_trip() {
        let m = Matrix::from_rows(vec![
            vec![Complex64::new(1.0, 0.0), Complex64::new(0.25, -0.5)],
            vec![Complex64::new(0.25, 0.5), Complex64::new(2.0, 0.0)],
        ]);
        let h = validate_hermitian(&m, tol::SYMMETRY).unwrap();
        let text = to_json_string(&matrix_value("c", &h));
        let tmp = std::env::temp_dir().join("pdcone_io_test_complex.json");
        fs::write(&tmp, &text).unwrap();
        let parsed = read_matrix(&tmp).unwrap();
        fs::remove_file(&tmp).ok();
        match parsed.matrix {
            AnyHermitian::Complex(p) => assert_eq!(p, h),
            _ => panic!("wrong field"),
        }
    }

    #[test]
    fn real_matrix_with_complex_entry_is_rejected() {
        let text = r#"{"name":"x","field":"real","dim":1,"data":[[[1.0,2.0]]]}"#;
        let tmp = std::env::temp_dir().join("pdcone_io_test_badfield.json");
        fs::write(&tmp, text).unwrap();
        let err = read_matrix(&tmp).unwrap_err();
        fs::remove_file(&tmp).ok();
        assert!(err.to_string().contains("complex entry"));
    }
}
