//! Sweep rows and their CSV form.
//!
//! Layout: a `#` provenance comment, the header
//! `method,beta,n,requested_orness,achieved_orness,dispersion,status,w1..wn`,
//! then one line per row. Numbers carry 17 significant digits so a parse of
//! the file reproduces every double exactly. Rows that produced no vector
//! leave the numeric result cells empty.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Linear,
    Exponential,
    ExponentialNoPreset,
    Maxent,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::Linear,
        Method::Exponential,
        Method::ExponentialNoPreset,
        Method::Maxent,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Linear => "linear",
            Method::Exponential => "exponential",
            Method::ExponentialNoPreset => "exponential-no-preset",
            Method::Maxent => "maxent",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = CliError;

    /// Accepts both the CSV names and the short flag spellings.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "linear" => Ok(Method::Linear),
            "exp" | "exponential" => Ok(Method::Exponential),
            "exp-nopreset" | "exponential-no-preset" => Ok(Method::ExponentialNoPreset),
            "maxent" => Ok(Method::Maxent),
            other => Err(CliError::Usage(format!("unknown method '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    /// The method failed numerically; no vector is reported.
    Unstable,
    /// The method is undefined at this orness.
    Unsupported,
    /// A vector was produced but its orness differs from the request by
    /// construction (exponential weights without calibration).
    Uncalibrated,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Unstable => "unstable",
            Status::Unsupported => "unsupported",
            Status::Uncalibrated => "uncalibrated",
        }
    }
}

impl FromStr for Status {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ok" => Ok(Status::Ok),
            "unstable" => Ok(Status::Unstable),
            "unsupported" => Ok(Status::Unsupported),
            "uncalibrated" => Ok(Status::Uncalibrated),
            other => Err(format!("unknown status '{other}'")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub method: Method,
    pub beta: Option<f64>,
    pub n: usize,
    pub requested_orness: f64,
    pub achieved_orness: Option<f64>,
    pub dispersion: Option<f64>,
    pub status: Status,
    /// Empty unless a vector was produced.
    pub w: Vec<f64>,
    /// Failure detail for non-ok rows; not serialized to CSV.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub message: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct SweepTable {
    pub n: usize,
    pub rows: Vec<SweepRow>,
}

pub fn format_number(x: f64) -> String {
    format!("{x:.16e}")
}

fn format_opt(x: Option<f64>) -> String {
    x.map(format_number).unwrap_or_default()
}

pub fn csv_header(n: usize) -> String {
    let mut h = String::from("method,beta,n,requested_orness,achieved_orness,dispersion,status");
    for i in 1..=n {
        h.push_str(&format!(",w{i}"));
    }
    h
}

impl SweepRow {
    pub fn to_csv_line(&self, n: usize) -> String {
        let mut cells = vec![
            self.method.name().to_string(),
            format_opt(self.beta),
            self.n.to_string(),
            format_number(self.requested_orness),
            format_opt(self.achieved_orness),
            format_opt(self.dispersion),
            self.status.name().to_string(),
        ];
        for i in 0..n {
            cells.push(self.w.get(i).map(|&x| format_number(x)).unwrap_or_default());
        }
        cells.join(",")
    }
}

impl SweepTable {
    /// Orders rows by method, then requested orness, then beta.
    pub fn sort(&mut self) {
        self.rows.sort_by(|a, b| {
            a.method
                .cmp(&b.method)
                .then(a.requested_orness.total_cmp(&b.requested_orness))
                .then(a.beta.unwrap_or(0.0).total_cmp(&b.beta.unwrap_or(0.0)))
        });
    }

    pub fn to_csv(&self, provenance: &str) -> String {
        let mut out = String::new();
        out.push_str("# ");
        out.push_str(provenance);
        out.push('\n');
        out.push_str(&csv_header(self.n));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.to_csv_line(self.n));
            out.push('\n');
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Self, CliError> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.starts_with('#') && !l.trim().is_empty());
        let (_, header) = lines.next().ok_or(CliError::Parse {
            line: 1,
            message: "missing header".into(),
        })?;
        let columns: Vec<&str> = header.split(',').collect();
        if columns.len() < 7 || columns[..7].join(",") != csv_header(0) {
            return Err(CliError::Parse {
                line: 1,
                message: format!("unexpected header '{header}'"),
            });
        }
        let n = columns.len() - 7;

        let mut rows = Vec::new();
        for (idx, line) in lines {
            let err = |message: String| CliError::Parse {
                line: idx + 1,
                message,
            };
            let cells: Vec<&str> = line.split(',').collect();
            if cells.len() != columns.len() {
                return Err(err(format!(
                    "{} cells, expected {}",
                    cells.len(),
                    columns.len()
                )));
            }
            let num = |s: &str| -> Result<f64, CliError> {
                s.parse::<f64>().map_err(|e| err(format!("'{s}': {e}")))
            };
            let opt = |s: &str| -> Result<Option<f64>, CliError> {
                if s.is_empty() {
                    Ok(None)
                } else {
                    num(s).map(Some)
                }
            };
            let w = cells[7..]
                .iter()
                .filter(|c| !c.is_empty())
                .map(|c| num(c))
                .collect::<Result<Vec<_>, _>>()?;
            rows.push(SweepRow {
                method: cells[0].parse()?,
                beta: opt(cells[1])?,
                n: cells[2].parse().map_err(|e| err(format!("n: {e}")))?,
                requested_orness: num(cells[3])?,
                achieved_orness: opt(cells[4])?,
                dispersion: opt(cells[5])?,
                status: cells[6].parse().map_err(err)?,
                w,
                message: None,
            });
        }
        Ok(SweepTable { n, rows })
    }
}
