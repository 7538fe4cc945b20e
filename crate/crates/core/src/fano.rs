//! Numeric screens for Fano threefolds.
//!
//! Everything here is integer arithmetic on the invariants `(-K)^3`, the
//! Picard rank, the third Betti number and `c1 c2`.

use std::io::Read;
use std::path::Path;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FanoError {
    #[error("chi = {numerator}/{denominator} is not an integer")]
    NonIntegralChi { numerator: i64, denominator: i64 },
    #[error("b3 = {0} is odd")]
    OddB3(i64),
    #[error("b3 = {0} is negative")]
    NegativeB3(i64),
    #[error("degree {0} is below 2")]
    DegreeTooSmall(i64),
    #[error("rho = {0} is not positive")]
    RhoNotPositive(i64),
    #[error("m and M must be positive")]
    NonPositiveBound,
    #[error("arithmetic overflow")]
    Overflow,
    #[error("missing column `{0}`")]
    MissingColumn(&'static str),
    #[error("cannot read table: {0}")]
    Io(String),
}

/// `(-K)^3`, `rho`, `b3` and `c1 c2` of a Fano threefold.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FanoInvariantRecord {
    pub id: String,
    pub degree: i64,
    pub rho: i64,
    pub b3: i64,
    pub c1c2: i64,
    /// Carried through untouched; no formula uses it.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h12: Option<i64>,
}

impl FanoInvariantRecord {
    pub fn new(id: impl Into<String>, degree: i64, rho: i64, b3: i64) -> Result<Self, FanoError> {
        let r = FanoInvariantRecord {
            id: id.into(),
            degree,
            rho,
            b3,
            c1c2: 24,
            h12: None,
        };
        r.validate()?;
        Ok(r)
    }

    pub fn validate(&self) -> Result<(), FanoError> {
        if self.b3 < 0 {
            return Err(FanoError::NegativeB3(self.b3));
        }
        if self.b3 % 2 != 0 {
            return Err(FanoError::OddB3(self.b3));
        }
        if self.degree < 2 {
            return Err(FanoError::DegreeTooSmall(self.degree));
        }
        if self.rho < 1 {
            return Err(FanoError::RhoNotPositive(self.rho));
        }
        Ok(())
    }
}

/// Intersection numbers entering Riemann-Roch for a bundle `E` on a threefold.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ChernInput {
    pub rk: i64,
    pub c1c2_t: i64,
    pub c1e_c1t2: i64,
    pub c1e_c2t: i64,
    pub c1t_c1e2: i64,
    pub c1t_c2e: i64,
    pub c1e3: i64,
    pub c1e_c2e: i64,
    pub c3e: i64,
}

impl ChernInput {
    /// `E = O_X`.
    pub fn structure_sheaf(c1c2: i64) -> Self {
        ChernInput {
            rk: 1,
            c1c2_t: c1c2,
            ..Default::default()
        }
    }

    /// `E = T_X`, where `c1 = -K`, `c1^3 = (-K)^3` and `c3` is the Euler number.
    pub fn tangent_bundle(r: &FanoInvariantRecord) -> Self {
        let d = r.degree;
        let c1c2 = r.c1c2;
        ChernInput {
            rk: 3,
            c1c2_t: c1c2,
            c1e_c1t2: d,
            c1e_c2t: c1c2,
            c1t_c1e2: d,
            c1t_c2e: c1c2,
            c1e3: d,
            c1e_c2e: c1c2,
            c3e: euler_c3(r),
        }
    }
}

fn exact_div(numerator: i64, denominator: i64) -> Result<i64, FanoError> {
    if numerator % denominator == 0 {
        Ok(numerator / denominator)
    } else {
        let g = gcd(numerator.unsigned_abs(), denominator.unsigned_abs()) as i64;
        Err(FanoError::NonIntegralChi {
            numerator: numerator / g,
            denominator: denominator / g,
        })
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Hirzebruch-Riemann-Roch on a threefold with `chi(O) = c1 c2 / 24`.
pub fn hrr_chi(c: &ChernInput) -> Result<i64, FanoError> {
    let parts = [
        c.rk.checked_mul(c.c1c2_t),
        c.c1e_c1t2
            .checked_add(c.c1e_c2t)
            .and_then(|v| v.checked_mul(2)),
        c.c1t_c2e
            .checked_mul(2)
            .and_then(|v| c.c1t_c1e2.checked_sub(v))
            .and_then(|v| v.checked_mul(6)),
        c.c1e_c2e
            .checked_mul(3)
            .and_then(|v| c.c1e3.checked_sub(v))
            .and_then(|v| c.c3e.checked_mul(3).and_then(|w| v.checked_add(w)))
            .and_then(|v| v.checked_mul(4)),
    ];
    let mut numerator = 0i64;
    for part in parts {
        numerator = part
            .and_then(|v| numerator.checked_add(v))
            .ok_or(FanoError::Overflow)?;
    }
    exact_div(numerator, 24)
}

/// `c3(T_X) = 2 + 2 rho - b3`.
pub fn euler_c3(r: &FanoInvariantRecord) -> i64 {
    2 + 2 * r.rho - r.b3
}

/// `chi(T_X) = (-K)^3/2 - 19 c1c2/24 + 1 + rho - b3/2`, which is
/// `(-K)^3/2 - 18 + rho - b3/2` when `c1 c2 = 24`.
pub fn chi_tangent(r: &FanoInvariantRecord) -> Result<i64, FanoError> {
    r.validate()?;
    let numerator = [
        r.degree.checked_mul(12),
        r.c1c2.checked_mul(-19),
        Some(24),
        r.rho.checked_mul(24),
        r.b3.checked_mul(-12),
    ]
    .into_iter()
    .try_fold(0i64, |acc, v| v.and_then(|v| acc.checked_add(v)))
    .ok_or(FanoError::Overflow)?;
    exact_div(numerator, 24)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RigidityVerdict {
    NotRigid,
    PossiblyRigid,
}

/// One-sided: a negative `chi(T_X)` forces `h^1(T_X) > 0`.
pub fn rigidity_screen(r: &FanoInvariantRecord) -> Result<RigidityVerdict, FanoError> {
    Ok(if chi_tangent(r)? < 0 {
        RigidityVerdict::NotRigid
    } else {
        RigidityVerdict::PossiblyRigid
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BoundednessParams {
    pub m: u64,
    #[serde(rename = "M")]
    pub big_m: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundednessReport {
    #[serde(rename = "N")]
    pub n: u64,
    /// `M, Mm, Mm^2, Mm^3`.
    pub chain: [u64; 4],
    pub chain_sum: u64,
    /// `chain_sum < N`; false exactly at `m = 1`.
    pub strict: bool,
}

/// `N = 4 M m^3` and the chain `M + Mm + Mm^2 + Mm^3` compared against it.
pub fn boundedness_bounds(b: BoundednessParams) -> Result<BoundednessReport, FanoError> {
    if b.m == 0 || b.big_m == 0 {
        return Err(FanoError::NonPositiveBound);
    }
    let mut chain = [b.big_m; 4];
    for k in 1..4 {
        chain[k] = chain[k - 1].checked_mul(b.m).ok_or(FanoError::Overflow)?;
    }
    let n = chain[3].checked_mul(4).ok_or(FanoError::Overflow)?;
    let chain_sum = chain
        .iter()
        .try_fold(0u64, |acc, &v| acc.checked_add(v))
        .ok_or(FanoError::Overflow)?;
    Ok(BoundednessReport {
        n,
        chain,
        chain_sum,
        strict: chain_sum < n,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScreenedRecord {
    pub record: FanoInvariantRecord,
    pub chi_tangent: i64,
    pub euler_c3: i64,
    pub verdict: RigidityVerdict,
    /// Riemann-Roch for `T_X` agrees with the closed formula.
    pub hrr_consistent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowError {
    pub line: u64,
    pub message: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ScreenSummary {
    pub rows: usize,
    pub not_rigid: usize,
    pub possibly_rigid: usize,
    pub errors: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ScreenReport {
    pub records: Vec<ScreenedRecord>,
    pub errors: Vec<RowError>,
    pub summary: ScreenSummary,
}

pub fn screen_record(r: &FanoInvariantRecord) -> Result<ScreenedRecord, FanoError> {
    let chi = chi_tangent(r)?;
    let hrr = hrr_chi(&ChernInput::tangent_bundle(r));
    Ok(ScreenedRecord {
        record: r.clone(),
        chi_tangent: chi,
        euler_c3: euler_c3(r),
        verdict: rigidity_screen(r)?,
        hrr_consistent: hrr == Ok(chi),
    })
}

pub fn ingest_table(path: impl AsRef<Path>) -> Result<ScreenReport, FanoError> {
    let file = std::fs::File::open(path).map_err(|e| FanoError::Io(e.to_string()))?;
    ingest_reader(file)
}

/// Reads `id,degree,rho,b3[,c1c2][,h12]`. Bad rows are reported with their
/// line numbers and skipped; only unreadable input or a missing column fails.
pub fn ingest_reader<R: Read>(reader: R) -> Result<ScreenReport, FanoError> {
    let mut csv = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(reader);
    let headers = csv
        .headers()
        .map_err(|e| FanoError::Io(e.to_string()))?
        .clone();
    let mut report = ScreenReport::default();
    if headers.is_empty() {
        return Ok(report);
    }
    let column = |name: &'static str| headers.iter().position(|h| h.eq_ignore_ascii_case(name));
    let required = |name: &'static str| column(name).ok_or(FanoError::MissingColumn(name));
    let (id_at, degree_at, rho_at, b3_at) = (
        required("id")?,
        required("degree")?,
        required("rho")?,
        required("b3")?,
    );
    let (c1c2_at, h12_at) = (column("c1c2"), column("h12"));

    for row in csv.records() {
        report.summary.rows += 1;
        let row = match row {
            Ok(row) => row,
            Err(e) => {
                let line = e.position().map_or(0, |p| p.line());
                report.errors.push(RowError {
                    line,
                    message: e.to_string(),
                });
                continue;
            }
        };
        let line = row.position().map_or(0, |p| p.line());
        let parsed = (|| -> Result<FanoInvariantRecord, String> {
            let field = |at: usize, name: &str| {
                row.get(at)
                    .filter(|s| !s.is_empty())
                    .ok_or_else(|| format!("missing {name}"))
            };
            let int = |at: usize, name: &str| -> Result<i64, String> {
                field(at, name)?
                    .parse::<i64>()
                    .map_err(|_| format!("{name} is not an integer"))
            };
            let optional = |at: Option<usize>, name: &str| -> Result<Option<i64>, String> {
                match at.and_then(|a| row.get(a)).filter(|s| !s.is_empty()) {
                    None => Ok(None),
                    Some(s) => s
                        .parse::<i64>()
                        .map(Some)
                        .map_err(|_| format!("{name} is not an integer")),
                }
            };
            let record = FanoInvariantRecord {
                id: field(id_at, "id")?.to_string(),
                degree: int(degree_at, "degree")?,
                rho: int(rho_at, "rho")?,
                b3: int(b3_at, "b3")?,
                c1c2: optional(c1c2_at, "c1c2")?.unwrap_or(24),
                h12: optional(h12_at, "h12")?,
            };
            record.validate().map_err(|e| e.to_string())?;
            Ok(record)
        })();
        match parsed.and_then(|r| screen_record(&r).map_err(|e| e.to_string())) {
            Ok(s) => {
                match s.verdict {
                    RigidityVerdict::NotRigid => report.summary.not_rigid += 1,
                    RigidityVerdict::PossiblyRigid => report.summary.possibly_rigid += 1,
                }
                report.records.push(s);
            }
            Err(message) => report.errors.push(RowError { line, message }),
        }
    }
    report.summary.errors = report.errors.len();
    Ok(report)
}

/// The four reference rows shipped with the crate.
pub const REFERENCE_TABLE: &str = include_str!("../data/fano_reference.csv");
