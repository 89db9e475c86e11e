use std::fmt::Write as _;
use std::io::Write;
use std::ops::RangeInclusive;

use anyhow::{bail, Result};
use subperiod_core::lab::{printed, scan_family};
use subperiod_core::{
    best_move, find_period, grundy_sequence, outcome_sequence, tables, verify_family,
    verify_predictions, FamilyExpression, FamilyQuery, FormulaPrediction, HorizonPolicy,
    ScanOutcome, SelectorSpec, SubtractionSet,
};

use crate::args::{Format, SeqMode, TheoremId};
use crate::output::{
    join, write_json, write_period_csv, write_theorem_csv, PeriodRow, TheoremRow,
};

/// Exit status for a theorem run that found a mismatch.
pub const EXIT_MISMATCH: u8 = 2;

pub struct Context {
    pub format: Format,
    pub policy: HorizonPolicy,
}

pub fn seq(ctx: &Context, out: &mut dyn Write, set: &SubtractionSet, n: usize, mode: SeqMode) -> Result<u8> {
    let values: Vec<u32> = match mode {
        SeqMode::Outcome => outcome_sequence(set, n)?.bits().map(u32::from).collect(),
        SeqMode::Grundy => grundy_sequence(set, n)?.values().to_vec(),
    };
    match ctx.format {
        Format::Text => {
            let text = match mode {
                SeqMode::Outcome => values.iter().map(|v| v.to_string()).collect::<String>(),
                SeqMode::Grundy => values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "),
            };
            writeln!(out, "{text}")?;
        }
        Format::Csv => {
            writeln!(out, "position;value")?;
            for (p, v) in values.iter().enumerate() {
                writeln!(out, "{p};{v}")?;
            }
        }
        Format::Json => {
            let mode = match mode {
                SeqMode::Outcome => "outcome",
                SeqMode::Grundy => "grundy",
            };
            write_json(out, &serde_json::json!({ "set": set, "mode": mode, "values": values }))?;
        }
    }
    Ok(0)
}

pub fn period(ctx: &Context, out: &mut dyn Write, set: &SubtractionSet) -> Result<u8> {
    let report = find_period(set, &ctx.policy)?;
    match ctx.format {
        Format::Text => writeln!(
            out,
            "set={} preperiod={} period={} block={} notation={}",
            report.set,
            report.preperiod(),
            report.period(),
            report.block_string(),
            report.notation
        )?,
        Format::Csv => write_period_csv(out, &[PeriodRow::from_report(&report)])?,
        Format::Json => write_json(out, &[PeriodRow::from_report(&report)])?,
    }
    Ok(0)
}

pub struct TheoremArgs {
    pub id: TheoremId,
    pub k: Option<RangeInclusive<u32>>,
    pub s: Option<RangeInclusive<u32>>,
    pub selectors: Option<Vec<bool>>,
    pub n: Option<usize>,
    pub s1: Option<RangeInclusive<u32>>,
    pub s2: Option<RangeInclusive<u32>>,
    pub printed: bool,
}

/// Defaults cover the published table rows; eq1 covers all pairs up to 60.
fn theorem_query(a: &TheoremArgs) -> FamilyQuery {
    let k = |default: RangeInclusive<u32>| a.k.clone().unwrap_or(default);
    match a.id {
        TheoremId::T1 => FamilyQuery::T1 { k: k(3..=15) },
        TheoremId::T2 => FamilyQuery::T2 { k: k(4..=18) },
        TheoremId::T3 => FamilyQuery::T3 { k: k(2..=14) },
        TheoremId::T4 => FamilyQuery::T4 {
            s: a.s.clone().unwrap_or(1..=10),
            selectors: match (&a.selectors, a.n) {
                (Some(list), _) => SelectorSpec::Exact(list.clone()),
                (None, Some(n)) => SelectorSpec::All(n),
                (None, None) => SelectorSpec::All(4),
            },
        },
        TheoremId::Eq1 => FamilyQuery::Eq1 {
            s1: a.s1.clone().unwrap_or(1..=59),
            s2: a.s2.clone().unwrap_or(2..=60),
        },
    }
}

fn as_printed(query: &FamilyQuery) -> Result<Vec<FormulaPrediction>> {
    let reprint = |p: FormulaPrediction| -> Result<FormulaPrediction> {
        use subperiod_core::Parameters::*;
        Ok(match p.parameters {
            K { k } if p.family == subperiod_core::Family::T2 => printed::predict_t2(k)?,
            K { k } if p.family == subperiod_core::Family::T3 => printed::predict_t3(k)?,
            Pair { s1, s2 } => printed::predict_eq1(s1, s2)?,
            _ => p,
        })
    };
    query.predictions()?.into_iter().map(reprint).collect()
}

pub fn theorem(ctx: &Context, out: &mut dyn Write, args: &TheoremArgs) -> Result<u8> {
    let query = theorem_query(args);
    let uses_k = matches!(args.id, TheoremId::T1 | TheoremId::T2 | TheoremId::T3);
    if (args.s.is_some() || args.selectors.is_some() || args.n.is_some()) && args.id != TheoremId::T4 {
        bail!("--s, --selectors and --n only apply to theorem 4");
    }
    if (args.s1.is_some() || args.s2.is_some()) && args.id != TheoremId::Eq1 {
        bail!("--s1 and --s2 only apply to eq1");
    }
    if args.k.is_some() && !uses_k {
        bail!("--k only applies to theorems 1, 2 and 3");
    }
    let records = if args.printed {
        if matches!(args.id, TheoremId::T1 | TheoremId::T4) {
            bail!("--printed only applies to theorems 2, 3 and eq1");
        }
        verify_predictions(as_printed(&query)?, &ctx.policy)
    } else {
        verify_family(&query, &ctx.policy)?
    };
    let rows: Vec<TheoremRow> = records.iter().map(TheoremRow::from_record).collect();
    match ctx.format {
        Format::Text => {
            for (r, rec) in rows.iter().zip(&records) {
                let mut line = format!(
                    "{} predicted={} computed={} preperiod={} set={} family={} {}",
                    rec.status,
                    r.predicted,
                    r.base.period.map_or("-".into(), |p| p.to_string()),
                    r.base.preperiod.map_or("-".into(), |p| p.to_string()),
                    join(&r.base.set),
                    r.family,
                    r.params,
                );
                if let Some(e) = &rec.error {
                    write!(line, " error=\"{e}\"")?;
                }
                writeln!(out, "{line}")?;
            }
        }
        Format::Csv => write_theorem_csv(out, &rows)?,
        Format::Json => write_json(out, &rows)?,
    }
    let matched = records.iter().filter(|r| r.is_match()).count();
    eprintln!("{} records: {} match, {} not matching", records.len(), matched, records.len() - matched);
    Ok(if matched == records.len() { 0 } else { EXIT_MISMATCH })
}

pub fn table(ctx: &Context, out: &mut dyn Write, id: u8) -> Result<u8> {
    let published = tables::table(id).expect("clap restricts the id to 1..=4");
    let mut rows = Vec::with_capacity(published.len());
    let mut lines = Vec::with_capacity(published.len());
    for row in &published {
        let report = find_period(&row.set, &ctx.policy)?;
        let mut line = format!("{} {} {}", report.set, report.notation, report.period());
        if report.notation != row.layout {
            write!(line, " paper={}", row.layout)?;
        }
        if report.period() != row.period {
            write!(line, " paper-period={}", row.period)?;
        }
        lines.push(line);
        rows.push(PeriodRow::from_report(&report));
    }
    match ctx.format {
        Format::Text => {
            for l in lines {
                writeln!(out, "{l}")?;
            }
        }
        Format::Csv => write_period_csv(out, &rows)?,
        Format::Json => write_json(out, &rows)?,
    }
    Ok(0)
}

pub fn scan(ctx: &Context, out: &mut dyn Write, family: &str, range: RangeInclusive<u32>) -> Result<u8> {
    let expr: FamilyExpression = family.parse()?;
    if ctx.policy.cap < 64 {
        bail!("horizon cap {} is too small", ctx.policy.cap);
    }
    let records = scan_family(&expr, range, &ctx.policy);
    let mut rows = Vec::with_capacity(records.len());
    let mut lines = Vec::with_capacity(records.len());
    for rec in &records {
        let raw: Vec<u32> = expr.terms().iter().filter_map(|t| t.eval(rec.k)).collect();
        match &rec.outcome {
            ScanOutcome::Ok { report } => {
                lines.push(format!(
                    "k={} set={} preperiod={} period={} block={} notation={} horizon={}",
                    rec.k,
                    report.set,
                    report.preperiod(),
                    report.period(),
                    report.block_string(),
                    report.notation,
                    report.horizon()
                ));
                rows.push(PeriodRow::from_report(report));
            }
            ScanOutcome::Invalid { reason } => {
                eprintln!("warning: k={} skipped: {reason}", rec.k);
                lines.push(format!("k={} set={} status=invalid reason=\"{reason}\"", rec.k, join(&raw)));
                rows.push(PeriodRow::failed(raw, 0, "invalid".into()));
            }
            ScanOutcome::NoCertificate { cap } => {
                eprintln!("warning: k={} has no certificate within horizon cap {cap}", rec.k);
                lines.push(format!("k={} set={} status=no-certificate horizon={cap}", rec.k, join(&raw)));
                rows.push(PeriodRow::failed(raw, *cap, "no-certificate".into()));
            }
        }
    }
    match ctx.format {
        Format::Text => {
            for l in lines {
                writeln!(out, "{l}")?;
            }
        }
        Format::Csv => write_period_csv(out, &rows)?,
        Format::Json => write_json(out, &rows)?,
    }
    Ok(0)
}

pub fn r#move(ctx: &Context, out: &mut dyn Write, set: &SubtractionSet, pos: u64) -> Result<u8> {
    let choice = best_move(set, pos)?;
    match ctx.format {
        Format::Text => match choice {
            Some(s) => writeln!(out, "take {s} → {}", pos - s as u64)?,
            None => writeln!(out, "P-position")?,
        },
        Format::Csv => {
            writeln!(out, "set;position;move;next")?;
            match choice {
                Some(s) => writeln!(out, "{set};{pos};{s};{}", pos - s as u64)?,
                None => writeln!(out, "{set};{pos};;")?,
            }
        }
        Format::Json => write_json(
            out,
            &serde_json::json!({
                "set": set,
                "position": pos,
                "move": choice,
                "next": choice.map(|s| pos - s as u64),
            }),
        )?,
    }
    Ok(0)
}
