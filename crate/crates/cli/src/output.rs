//! Record types shared by the text, CSV and JSON renderers.
//!
//! CSV is `;`-separated with a header row. Every record starts with the
//! columns `set;preperiod;period;block;horizon`; theorem records append
//! `family;params;predicted;status`.

use std::io::Write;

use anyhow::Result;
use serde::{Deserialize, Serialize};
use subperiod_core::{PeriodReport, VerificationRecord};

pub const BASE_HEADER: [&str; 5] = ["set", "preperiod", "period", "block", "horizon"];
pub const THEOREM_HEADER: [&str; 4] = ["family", "params", "predicted", "status"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodRow {
    pub set: Vec<u32>,
    pub preperiod: Option<usize>,
    pub period: Option<usize>,
    pub block: Option<String>,
    pub horizon: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub status: Option<String>,
}

impl PeriodRow {
    pub fn from_report(report: &PeriodReport) -> Self {
        Self {
            set: report.set.elements().to_vec(),
            preperiod: Some(report.preperiod()),
            period: Some(report.period()),
            block: Some(report.block_string()),
            horizon: report.horizon(),
            status: None,
        }
    }

    pub fn failed(set: Vec<u32>, horizon: usize, status: String) -> Self {
        Self { set, preperiod: None, period: None, block: None, horizon, status: Some(status) }
    }

    fn csv_fields(&self) -> Vec<String> {
        vec![
            join(&self.set),
            opt(self.preperiod),
            opt(self.period),
            self.block.clone().unwrap_or_default(),
            self.horizon.to_string(),
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremRow {
    #[serde(flatten)]
    pub base: PeriodRow,
    pub family: String,
    pub params: String,
    pub predicted: usize,
}

impl TheoremRow {
    pub fn from_record(record: &VerificationRecord) -> Self {
        let p = &record.prediction;
        let mut base = match &record.computed {
            Some(report) => PeriodRow::from_report(report),
            None => PeriodRow::failed(p.set.elements().to_vec(), 0, String::new()),
        };
        base.status = Some(record.status.to_string());
        Self {
            base,
            family: p.family.to_string(),
            params: p.parameters.to_string(),
            predicted: p.predicted_period,
        }
    }
}

pub fn join(set: &[u32]) -> String {
    set.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

fn opt(v: Option<usize>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn csv_writer<W: Write>(out: W) -> csv::Writer<W> {
    csv::WriterBuilder::new()
        .delimiter(b';')
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out)
}

pub fn write_period_csv<W: Write>(out: W, rows: &[PeriodRow]) -> Result<()> {
    let mut w = csv_writer(out);
    w.write_record(BASE_HEADER)?;
    for r in rows {
        w.write_record(r.csv_fields())?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_theorem_csv<W: Write>(out: W, rows: &[TheoremRow]) -> Result<()> {
    let mut w = csv_writer(out);
    w.write_record(BASE_HEADER.iter().chain(THEOREM_HEADER.iter()))?;
    for r in rows {
        let mut fields = r.base.csv_fields();
        fields.extend([
            r.family.clone(),
            r.params.clone(),
            r.predicted.to_string(),
            r.base.status.clone().unwrap_or_default(),
        ]);
        w.write_record(fields)?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_json<W: Write, T: Serialize>(mut out: W, value: &T) -> Result<()> {
    serde_json::to_writer_pretty(&mut out, value)?;
    out.write_all(b"\n")?;
    Ok(())
}

/// Reads period rows back from CSV; used to check the formats agree.
#[cfg(test)]
pub fn read_period_csv(input: &str) -> Result<Vec<PeriodRow>> {
    let mut r = csv::ReaderBuilder::new().delimiter(b';').from_reader(input.as_bytes());
    let mut rows = Vec::new();
    for rec in r.records() {
        let rec = rec?;
        let num = |i: usize| -> Result<Option<usize>> {
            let f = &rec[i];
            Ok(if f.is_empty() { None } else { Some(f.parse()?) })
        };
        let set = if rec[0].is_empty() {
            Vec::new()
        } else {
            rec[0].split(',').map(str::parse).collect::<Result<_, _>>()?
        };
        rows.push(PeriodRow {
            set,
            preperiod: num(1)?,
            period: num(2)?,
            block: (!rec[3].is_empty()).then(|| rec[3].to_string()),
            horizon: rec[4].parse()?,
            status: None,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_round_trip() {
        let rows = vec![
            PeriodRow {
                set: vec![1, 4, 10],
                preperiod: Some(11),
                period: Some(11),
                block: Some("11011010110".into()),
                horizon: 104,
                status: None,
            },
            PeriodRow::failed(vec![1, 2], 64, "no-certificate".into()),
        ];
        let mut buf = Vec::new();
        write_period_csv(&mut buf, &rows).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("set;preperiod;period;block;horizon\n1,4,10;11;11;11011010110;104\n"));
        let back = read_period_csv(&text).unwrap();
        assert_eq!(back[0], rows[0]);
        assert_eq!(back[1].period, None);
    }

    #[test]
    fn json_omits_absent_status() {
        let row = PeriodRow {
            set: vec![1],
            preperiod: Some(0),
            period: Some(2),
            block: Some("01".into()),
            horizon: 68,
            status: None,
        };
        let v = serde_json::to_value(&row).unwrap();
        assert_eq!(v["set"], serde_json::json!([1]));
        assert!(v.get("status").is_none());
    }
}
