//! JSON and CSV representations of codes, reports and decode results.

use std::fmt;
use std::io::{Read, Write};

use rescodes_core::code::construct;
use rescodes_core::decode::{DecodeResult, DecodeRoute, DecodeStatus};
use rescodes_core::lattice::{LatticeKind, LatticePoint};
use rescodes_core::verify::DistanceReport;
use rescodes_core::{Family, FieldElement, LinearCode, PrimeField};
use serde::{Deserialize, Serialize};

#[derive(Debug)]
pub enum FormatError {
    Json(serde_json::Error),
    Csv(csv::Error),
    Io(std::io::Error),
    Code(rescodes_core::Error),
    /// Rows in a document disagree with the rebuilt code.
    RowMismatch,
    Malformed(String),
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormatError::Json(e) => write!(f, "json: {e}"),
            FormatError::Csv(e) => write!(f, "csv: {e}"),
            FormatError::Io(e) => write!(f, "io: {e}"),
            FormatError::Code(e) => write!(f, "{e}"),
            FormatError::RowMismatch => write!(f, "matrix rows do not match the stated family and parameters"),
            FormatError::Malformed(s) => write!(f, "{s}"),
        }
    }
}

impl std::error::Error for FormatError {}

impl From<serde_json::Error> for FormatError {
    fn from(e: serde_json::Error) -> Self {
        FormatError::Json(e)
    }
}

impl From<csv::Error> for FormatError {
    fn from(e: csv::Error) -> Self {
        FormatError::Csv(e)
    }
}

impl From<std::io::Error> for FormatError {
    fn from(e: std::io::Error) -> Self {
        FormatError::Io(e)
    }
}

impl From<rescodes_core::Error> for FormatError {
    fn from(e: rescodes_core::Error) -> Self {
        FormatError::Code(e)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeDocument {
    pub family: String,
    pub p: u32,
    /// `gaussian` or `eisenstein` for lattice families.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub kind: Option<String>,
    /// Order of the error-value group `E`.
    pub m: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub r: Option<usize>,
    pub n: usize,
    pub k: usize,
    pub guaranteed_distance: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub a: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub b: Option<u64>,
    /// Coordinates of the lattice generator `pi`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub pi: Option<[i64; 2]>,
    #[serde(rename = "A", skip_serializing_if = "Option::is_none", default)]
    pub value_set: Option<Vec<i64>>,
    /// Column labels; positions `0..n` when the family has none.
    pub columns: Vec<i64>,
    pub rows: Vec<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub warning: Option<String>,
}

fn kind_name(kind: LatticeKind) -> &'static str {
    match kind {
        LatticeKind::Gaussian => "gaussian",
        LatticeKind::Eisenstein => "eisenstein",
    }
}

pub fn values(v: &[FieldElement]) -> Vec<i64> {
    v.iter().map(|x| x.value()).collect()
}

impl CodeDocument {
    pub fn from_code(code: &LinearCode) -> Self {
        let ctx = code.context();
        let columns = match code.labels() {
            Some(l) => values(l),
            None => (0..code.len() as i64).collect(),
        };
        CodeDocument {
            family: code.family().name().to_string(),
            p: code.field().p(),
            kind: ctx.map(|c| kind_name(c.kind()).to_string()),
            m: code.metric().subgroup().order(),
            r: code.dimension_param(),
            n: code.len(),
            k: code.dimension(),
            guaranteed_distance: code.guaranteed_distance(),
            a: ctx.map(|c| c.a()),
            b: ctx.map(|c| c.b()),
            pi: ctx.map(|c| {
                let (x, y) = match c.pi() {
                    LatticePoint::Gauss(z) => (z.x, z.y),
                    LatticePoint::Eisen(z) => (z.u, z.v),
                };
                [x, y]
            }),
            value_set: code.value_set().map(|s| s.to_vec()),
            columns,
            rows: code.rows().iter().map(|r| values(r)).collect(),
            warning: code.warning().map(|w| w.to_string()),
        }
    }

    /// Rebuilds the code: families are reconstructed from their parameters
    /// and checked against `rows`; `custom` documents use `rows` directly.
    pub fn to_code(&self) -> Result<LinearCode, FormatError> {
        let family = Family::from_name(&self.family)
            .ok_or_else(|| FormatError::Malformed(format!("unknown family '{}'", self.family)))?;
        let code = match family {
            Family::Custom => {
                let f = PrimeField::new(self.p as u64)?;
                let rows = self.rows.iter().map(|r| r.iter().map(|&x| f.elem(x)).collect()).collect();
                LinearCode::from_matrix(f, rows, self.m)?
            }
            _ => construct(family, self.p as u64, self.m, self.r.unwrap_or(1), self.value_set.as_deref())?,
        };
        let rows: Vec<Vec<i64>> = code.rows().iter().map(|r| values(r)).collect();
        if rows != self.rows {
            return Err(FormatError::RowMismatch);
        }
        Ok(code)
    }
}

pub fn write_json(code: &LinearCode, out: &mut dyn Write) -> Result<(), FormatError> {
    serde_json::to_writer_pretty(&mut *out, &CodeDocument::from_code(code))?;
    writeln!(out)?;
    Ok(())
}

pub fn read_json(input: &str) -> Result<LinearCode, FormatError> {
    let doc: CodeDocument = serde_json::from_str(input)?;
    doc.to_code()
}

/// Header row of column labels, then one row per parity check.
pub fn write_csv(code: &LinearCode, out: &mut dyn Write) -> Result<(), FormatError> {
    let doc = CodeDocument::from_code(code);
    let mut w = csv::Writer::from_writer(out);
    w.write_record(doc.columns.iter().map(|x| x.to_string()))?;
    for row in &doc.rows {
        w.write_record(row.iter().map(|x| x.to_string()))?;
    }
    w.flush()?;
    Ok(())
}

/// Reads a CSV matrix as a custom code over `F_p` with `m` error values.
pub fn read_csv(input: impl Read, p: u64, m: u32) -> Result<LinearCode, FormatError> {
    let f = PrimeField::new(p)?;
    let mut r = csv::ReaderBuilder::new().has_headers(true).trim(csv::Trim::All).from_reader(input);
    let mut rows = Vec::new();
    for record in r.records() {
        let row = record?
            .iter()
            .map(|s| s.parse::<i64>().map(|x| f.elem(x)))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| FormatError::Malformed(format!("bad matrix entry: {e}")))?;
        rows.push(row);
    }
    Ok(LinearCode::from_matrix(f, rows, m)?)
}

/// Loads a JSON document, or a CSV matrix when `p` is given and the input
/// is not JSON.
pub fn read_matrix(input: &str, p: Option<u64>, m: u32) -> Result<LinearCode, FormatError> {
    match serde_json::from_str::<CodeDocument>(input) {
        Ok(doc) => doc.to_code(),
        Err(e) => match p {
            Some(p) if !input.trim_start().starts_with('{') => read_csv(input.as_bytes(), p, m),
            _ => Err(e.into()),
        },
    }
}

/// Parses `"c0,c1,..."` into `n` field elements.
pub fn parse_vector(input: &str, f: &PrimeField, n: usize) -> Result<Vec<FieldElement>, FormatError> {
    let v = input
        .trim()
        .split(',')
        .map(|s| s.trim().parse::<i64>().map(|x| f.elem(x)))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| FormatError::Malformed(format!("bad vector entry: {e}")))?;
    if v.len() != n {
        return Err(FormatError::Malformed(format!("expected {n} entries, found {}", v.len())));
    }
    Ok(v)
}

/// Parses `"-k..k"` (inclusive) or a comma-separated list.
pub fn parse_set(s: &str) -> Result<Vec<i64>, FormatError> {
    let bad = || FormatError::Malformed(format!("bad value set '{s}'"));
    if let Some((lo, hi)) = s.split_once("..") {
        let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
        let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
        if lo > hi {
            return Err(bad());
        }
        return Ok((lo..=hi).collect());
    }
    s.split(',').map(|x| x.trim().parse().map_err(|_| bad())).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DistanceDocument {
    pub code: String,
    pub method: String,
    pub bound: u32,
    pub result: u32,
    pub exact: bool,
    pub certified: bool,
    pub witness: Option<Vec<i64>>,
    pub elapsed: f64,
}

impl From<&DistanceReport> for DistanceDocument {
    fn from(r: &DistanceReport) -> Self {
        DistanceDocument {
            code: r.code_id.clone(),
            method: r.method.name().to_string(),
            bound: r.bound_checked,
            result: r.result,
            exact: r.exact,
            certified: r.certified(),
            witness: r.witness.as_deref().map(values),
            elapsed: r.elapsed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorEntry {
    pub position: usize,
    pub value: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecodeDocument {
    pub status: String,
    pub route: String,
    pub syndrome: Vec<i64>,
    pub pattern: Option<Vec<ErrorEntry>>,
    pub codeword: Option<Vec<i64>>,
}

pub fn status_name(s: DecodeStatus) -> &'static str {
    match s {
        DecodeStatus::NoError => "no_error",
        DecodeStatus::Corrected => "corrected",
        DecodeStatus::DetectedUncorrectable => "detected_uncorrectable",
    }
}

impl DecodeDocument {
    pub fn new(result: &DecodeResult, syndrome: &[FieldElement]) -> Self {
        DecodeDocument {
            status: status_name(result.status).to_string(),
            route: match result.route {
                DecodeRoute::Algebraic => "algebraic",
                DecodeRoute::Search => "search",
            }
            .to_string(),
            syndrome: values(syndrome),
            pattern: result
                .pattern
                .as_ref()
                .map(|e| e.entries().iter().map(|&(position, x)| ErrorEntry { position, value: x.value() }).collect()),
            codeword: result.codeword.as_deref().map(values),
        }
    }
}
