//! State files, reports and sweep tables.
//!
//! A state file is a single JSON object:
//!
//! ```json
//! {
//!   "dims": [2, 2, 2],
//!   "amps": [
//!     { "idx": [0, 0, 0], "re": 0.707106781187, "im": 0.0 },
//!     { "idx": [1, 1, 1], "re": 0.707106781187, "im": 0.0 }
//!   ],
//!   "normalize": true
//! }
//! ```
//!
//! Indices are 0-based; unlisted amplitudes are zero; unknown keys are
//! rejected. Without `"normalize": true` the amplitudes must already have
//! norm 1 to within `1e-8`.
//!
//! Every number written by this crate uses 12 digits after the decimal point.

use crate::bipartite::{
    concurrence_closed_form, concurrence_norm, eof, fei_concurrence, i_concurrence,
    von_neumann_entropy,
};
use crate::multipartite::{separability_flag, total_concurrence, Separability};
use crate::state::{gw_superposition, unflatten, ww_superposition, PureState};
use crate::{Complex64, Result};
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};
use std::fmt;
use std::io::Write;

pub const DECIMALS: usize = 12;

/// Fixed 12-decimal rendering; a rounded negative zero prints unsigned.
pub fn fmt_num(x: f64) -> String {
    let s = format!("{x:.DECIMALS$}");
    match s.strip_prefix('-') {
        Some(rest) if rest.bytes().all(|b| b == b'0' || b == b'.') => rest.to_string(),
        _ => s,
    }
}

/// `x` rounded to 12 decimals, so JSON output shows the same digits as text.
pub fn round_num(x: f64) -> f64 {
    fmt_num(x).parse().expect("formatted float parses")
}

/// A parse or validation problem in a state file, anchored to a line when
/// one can be determined.
#[derive(Debug, Clone, PartialEq)]
pub struct FileError {
    pub line: Option<usize>,
    pub message: String,
}

impl fmt::Display for FileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(line) => write!(f, "line {line}: {}", self.message),
            None => f.write_str(&self.message),
        }
    }
}

impl std::error::Error for FileError {}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AmpRecord {
    pub idx: Vec<usize>,
    pub re: f64,
    pub im: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StateFile {
    pub dims: Vec<usize>,
    pub amps: Vec<AmpRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub normalize: Option<bool>,
}

const KEYS: [&str; 3] = ["dims", "amps", "normalize"];

fn key_line(text: &str, key: &str) -> Option<usize> {
    let pos = text.find(&format!("\"{key}\""))?;
    Some(text[..pos].matches('\n').count() + 1)
}

fn field<T: for<'de> Deserialize<'de>>(
    text: &str,
    obj: &Map<String, Value>,
    key: &str,
) -> std::result::Result<Option<T>, FileError> {
    obj.get(key)
        .map(|v| {
            T::deserialize(v).map_err(|e| FileError {
                line: key_line(text, key),
                message: format!("key `{key}`: {e}"),
            })
        })
        .transpose()
}

impl StateFile {
    pub fn parse(text: &str) -> std::result::Result<Self, FileError> {
        let value: Value = serde_json::from_str(text).map_err(|e| FileError {
            line: Some(e.line()),
            message: format!("invalid JSON: {e}"),
        })?;
        let obj = value.as_object().ok_or_else(|| FileError {
            line: Some(1),
            message: "state file must be a JSON object".into(),
        })?;
        if let Some(key) = obj.keys().find(|k| !KEYS.contains(&k.as_str())) {
            return Err(FileError {
                line: key_line(text, key),
                message: format!("unknown key `{key}` (expected dims, amps, normalize)"),
            });
        }
        let missing = |key: &str| FileError {
            line: None,
            message: format!("missing key `{key}`"),
        };
        let dims: Vec<usize> = field(text, obj, "dims")?.ok_or_else(|| missing("dims"))?;
        let amps: Vec<AmpRecord> = field(text, obj, "amps")?.ok_or_else(|| missing("amps"))?;
        let normalize = field(text, obj, "normalize")?;
        let file = Self {
            dims,
            amps,
            normalize,
        };
        file.to_state().map_err(|e| {
            let key = match e {
                crate::Error::InvalidDims(_) => "dims",
                _ => "amps",
            };
            FileError {
                line: key_line(text, key),
                message: format!("key `{key}`: {e}"),
            }
        })?;
        Ok(file)
    }

    pub fn to_state(&self) -> Result<PureState> {
        let entries: Vec<_> = self
            .amps
            .iter()
            .map(|r| (r.idx.clone(), Complex64::new(r.re, r.im)))
            .collect();
        PureState::from_entries(self.dims.clone(), &entries, self.normalize.unwrap_or(false))
    }

    /// Nonzero amplitudes of `psi`, rounded to 12 decimals, with
    /// `normalize` set so the rounding is absorbed on reading.
    pub fn from_state(psi: &PureState) -> Self {
        let amps = psi
            .amps()
            .iter()
            .enumerate()
            .filter(|(_, a)| round_num(a.re) != 0.0 || round_num(a.im) != 0.0)
            .map(|(offset, a)| AmpRecord {
                idx: unflatten(psi.dims(), offset).expect("offset within state"),
                re: round_num(a.re),
                im: round_num(a.im),
            })
            .collect();
        Self {
            dims: psi.dims().to_vec(),
            amps,
            normalize: Some(true),
        }
    }

    /// Pretty JSON with one amplitude record per line.
    pub fn to_json(&self) -> String {
        let mut s = String::from("{\n");
        let dims: Vec<String> = self.dims.iter().map(usize::to_string).collect();
        s += &format!("  \"dims\": [{}],\n  \"amps\": [\n", dims.join(", "));
        let records: Vec<String> = self
            .amps
            .iter()
            .map(|r| {
                let idx: Vec<String> = r.idx.iter().map(usize::to_string).collect();
                format!(
                    "    {{ \"idx\": [{}], \"re\": {}, \"im\": {} }}",
                    idx.join(", "),
                    fmt_num(r.re),
                    fmt_num(r.im)
                )
            })
            .collect();
        s += &records.join(",\n");
        s += "\n  ]";
        if let Some(n) = self.normalize {
            s += &format!(",\n  \"normalize\": {n}");
        }
        s += "\n}\n";
        s
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PairRecord {
    pub i: usize,
    pub j: usize,
    pub norm: f64,
}

/// Two-party cross-checks; all values should agree except `fei`,
/// `entropy_bits` and `eof_bits`, which are different measures.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BipartiteChecks {
    pub vector_norm: f64,
    pub closed_form: f64,
    pub i_concurrence: f64,
    pub fei_concurrence: f64,
    pub entropy_bits: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eof_bits: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportDocument {
    pub tool: String,
    pub version: String,
    pub tolerance: f64,
    pub dims: Vec<usize>,
    pub pairs: Vec<PairRecord>,
    pub total: f64,
    pub separability: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bipartite: Option<BipartiteChecks>,
}

fn separability_name(s: Separability) -> &'static str {
    match s {
        Separability::SeparableCertified => "separable-certified",
        Separability::Entangled => "entangled",
        Separability::Inconclusive => "inconclusive",
    }
}

impl ReportDocument {
    pub fn build(psi: &PureState, tol: f64) -> Result<Self> {
        let report = total_concurrence(psi)?;
        let bipartite = if psi.num_subsystems() == 2 {
            let min_dim = psi.dims().iter().copied().min().unwrap_or(0);
            Some(BipartiteChecks {
                vector_norm: round_num(concurrence_norm(psi)?),
                closed_form: round_num(concurrence_closed_form(psi)?),
                i_concurrence: round_num(i_concurrence(psi)?),
                fei_concurrence: round_num(fei_concurrence(psi)?),
                entropy_bits: round_num(von_neumann_entropy(psi)?),
                eof_bits: if min_dim == 2 {
                    Some(round_num(eof(psi)?))
                } else {
                    None
                },
            })
        } else {
            None
        };
        Ok(Self {
            tool: env!("CARGO_PKG_NAME").into(),
            version: env!("CARGO_PKG_VERSION").into(),
            tolerance: tol,
            dims: report.dims.clone(),
            pairs: report
                .pairwise
                .iter()
                .map(|p| PairRecord {
                    i: p.i,
                    j: p.j,
                    norm: round_num(p.norm),
                })
                .collect(),
            total: round_num(report.total),
            separability: separability_name(separability_flag(psi, tol)?).into(),
            bipartite,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_text(&self) -> String {
        let dims: Vec<String> = self.dims.iter().map(usize::to_string).collect();
        let mut s = format!("{} {}\n", self.tool, self.version);
        s += &format!("dims: [{}]\n", dims.join(", "));
        s += &format!("tolerance: {:e}\n", self.tolerance);
        for p in &self.pairs {
            s += &format!("pair {} {}: {}\n", p.i, p.j, fmt_num(p.norm));
        }
        s += &format!("total: {}\n", fmt_num(self.total));
        s += &format!("separability: {}\n", self.separability);
        if let Some(b) = &self.bipartite {
            s += &format!("vector norm: {}\n", fmt_num(b.vector_norm));
            s += &format!("closed form: {}\n", fmt_num(b.closed_form));
            s += &format!("i-concurrence: {}\n", fmt_num(b.i_concurrence));
            s += &format!("fei concurrence: {}\n", fmt_num(b.fei_concurrence));
            s += &format!("entropy (bits): {}\n", fmt_num(b.entropy_bits));
            if let Some(e) = b.eof_bits {
                s += &format!("eof (bits): {}\n", fmt_num(e));
            }
        }
        s
    }
}

/// Three-qubit superposition families swept by [`sweep`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepFamily {
    /// √s |W⟩ + √(1−s) e^{iφ} |W̃⟩
    Ww,
    /// √s |GHZ⟩ + √(1−s) e^{iφ} |W⟩
    Gw,
}

impl SweepFamily {
    pub fn build(self, s: f64, phi: f64) -> Result<PureState> {
        match self {
            SweepFamily::Ww => ww_superposition(s, phi),
            SweepFamily::Gw => gw_superposition(s, phi),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub s: f64,
    pub phi: f64,
    pub pairs: Vec<f64>,
    pub total: f64,
}

/// Evaluates the family at `s = 0, 1/(steps−1), …, 1` crossed with every
/// phase, `s` outermost.
pub fn sweep(family: SweepFamily, steps: usize, phis: &[f64]) -> Result<Vec<SweepRow>> {
    if steps < 2 {
        return Err(crate::Error::InvalidParameter(format!(
            "sweep needs at least 2 steps, got {steps}"
        )));
    }
    let mut rows = Vec::with_capacity(steps * phis.len());
    for k in 0..steps {
        let s = k as f64 / (steps - 1) as f64;
        for &phi in phis {
            let report = total_concurrence(&family.build(s, phi)?)?;
            rows.push(SweepRow {
                s,
                phi,
                pairs: report.pairwise.iter().map(|p| p.norm).collect(),
                total: report.total,
            });
        }
    }
    Ok(rows)
}

/// `C<i><j>` for every pair of `m` subsystems, lexicographic.
pub fn pair_labels(m: usize) -> Vec<String> {
    let mut out = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            out.push(format!("C{i}{j}"));
        }
    }
    out
}

pub fn write_sweep_csv<W: Write>(rows: &[SweepRow], m: usize, mut w: W) -> std::io::Result<()> {
    writeln!(w, "s,phi,{},C_total", pair_labels(m).join(","))?;
    for row in rows {
        let pairs: Vec<String> = row.pairs.iter().map(|&x| fmt_num(x)).collect();
        writeln!(
            w,
            "{},{},{},{}",
            fmt_num(row.s),
            fmt_num(row.phi),
            pairs.join(","),
            fmt_num(row.total)
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::state::{ghz, random_state};

    #[test]
    fn number_formatting() {
        assert_eq!(fmt_num(std::f64::consts::FRAC_1_SQRT_2), "0.707106781187");
        assert_eq!(fmt_num(1.5f64.sqrt()), "1.224744871392");
        assert_eq!(fmt_num(-1e-17), "0.000000000000");
        assert_eq!(fmt_num(-0.25), "-0.250000000000");
        assert_eq!(round_num(2.0 / 3.0), 0.666666666667);
    }

    #[test]
    fn parse_ghz_file() {
        let text = r#"{
  "dims": [2, 2, 2],
  "amps": [
    { "idx": [0, 0, 0], "re": 0.707106781187, "im": 0.0 },
    { "idx": [1, 1, 1], "re": 0.707106781187, "im": 0.0 }
  ]
}"#;
        let file = StateFile::parse(text).unwrap();
        assert_eq!(file.dims, vec![2, 2, 2]);
        assert_eq!(file.normalize, None);
        let psi = file.to_state().unwrap();
        assert!((psi.norm() - 1.0).abs() < 1e-11);
    }

    #[test]
    fn parse_errors_name_the_key_and_line() {
        let bad_dims = "{\n  \"dims\": \"two\",\n  \"amps\": []\n}";
        let e = StateFile::parse(bad_dims).unwrap_err();
        assert_eq!(e.line, Some(2));
        assert!(e.message.contains("`dims`"), "{e}");

        let small =
            "{\n  \"dims\": [2, 1],\n  \"amps\": [{\"idx\": [0, 0], \"re\": 1, \"im\": 0}]\n}";
        let e = StateFile::parse(small).unwrap_err();
        assert_eq!(e.line, Some(2));
        assert!(e.message.contains("`dims`"), "{e}");

        let unknown = "{\n  \"dims\": [2],\n  \"amps\": [],\n  \"extra\": 1\n}";
        let e = StateFile::parse(unknown).unwrap_err();
        assert_eq!(e.line, Some(4));
        assert!(e.message.contains("`extra`"));

        let syntax = "{\n  \"dims\": [2,\n}";
        assert!(StateFile::parse(syntax)
            .unwrap_err()
            .message
            .contains("invalid JSON"));

        let range = "{\"dims\": [2], \"amps\": [{\"idx\": [2], \"re\": 1, \"im\": 0}]}";
        assert!(StateFile::parse(range)
            .unwrap_err()
            .message
            .contains("`amps`"));

        let dup = "{\"dims\": [2], \"amps\": [{\"idx\": [0], \"re\": 1, \"im\": 0}, {\"idx\": [0], \"re\": 1, \"im\": 0}], \"normalize\": true}";
        assert!(StateFile::parse(dup)
            .unwrap_err()
            .message
            .contains("duplicate"));

        let unnorm = "{\"dims\": [2, 2], \"amps\": [{\"idx\": [0, 0], \"re\": 1, \"im\": 0}, {\"idx\": [1, 1], \"re\": 1, \"im\": 0}]}";
        assert!(StateFile::parse(unnorm)
            .unwrap_err()
            .message
            .contains("not normalized"));

        let record_key =
            "{\"dims\": [2], \"amps\": [{\"idx\": [0], \"re\": 1, \"im\": 0, \"x\": 1}]}";
        assert!(StateFile::parse(record_key).is_err());

        assert!(StateFile::parse("{\"dims\": [2]}")
            .unwrap_err()
            .message
            .contains("missing key `amps`"));
    }

    #[test]
    fn state_file_roundtrip() {
        let psi = random_state(&[2, 3, 2], 7).unwrap();
        let file = StateFile::from_state(&psi);
        let back = StateFile::parse(&file.to_json())
            .unwrap()
            .to_state()
            .unwrap();
        for (a, b) in psi.amps().iter().zip(back.amps()) {
            assert!((a - b).norm() < 1e-11);
        }
    }

    #[test]
    fn ghz_report_text() {
        let doc = ReportDocument::build(&ghz(3).unwrap(), 1e-10).unwrap();
        let text = doc.to_text();
        assert!(text.contains("pair 0 1: 0.707106781187\n"));
        assert!(text.contains("pair 1 2: 0.707106781187\n"));
        assert!(text.contains("total: 1.224744871392\n"));
        assert!(text.contains("separability: entangled\n"));
        assert!(doc.bipartite.is_none());
        let json: Value = serde_json::from_str(&doc.to_json()).unwrap();
        assert_eq!(json["total"], 1.224744871392);
        assert_eq!(json["pairs"][2]["j"], 2);
    }

    #[test]
    fn bipartite_report_has_cross_checks() {
        let doc = ReportDocument::build(&ghz(2).unwrap(), 1e-10).unwrap();
        let b = doc.bipartite.unwrap();
        assert_eq!(b.vector_norm, 1.0);
        assert_eq!(b.i_concurrence, 1.0);
        assert_eq!(b.eof_bits, Some(1.0));
        let doc = ReportDocument::build(&random_state(&[3, 3], 1).unwrap(), 1e-10).unwrap();
        assert_eq!(doc.bipartite.unwrap().eof_bits, None);
    }

    #[test]
    fn sweep_rows_and_csv() {
        let rows = sweep(SweepFamily::Ww, 11, &[0.0]).unwrap();
        assert_eq!(rows.len(), 11);
        let last = rows.last().unwrap();
        assert_eq!(last.s, 1.0);
        assert_eq!(fmt_num(last.pairs[0]), "0.666666666667");
        let mut buf = Vec::new();
        write_sweep_csv(&rows, 3, &mut buf).unwrap();
        let csv = String::from_utf8(buf).unwrap();
        assert!(csv.starts_with("s,phi,C01,C02,C12,C_total\n"));
        assert_eq!(csv.lines().count(), 12);
        assert!(sweep(SweepFamily::Gw, 1, &[0.0]).is_err());
        assert_eq!(pair_labels(4), ["C01", "C02", "C03", "C12", "C13", "C23"]);
    }
}
