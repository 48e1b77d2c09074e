//! CSV, JSON and plain-table output, plus loaders that re-check every record.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::io::{Read, Write};
use std::str::FromStr;

use serde_json::{json, Value};

use crate::catalog::{DescriptorKind, GenusRecord, SubgroupDescriptor};
use crate::error::{Error, Result};
use crate::params::{make_params, CurveFamily, CurveParams};
use crate::spectrum::SpectrumReport;

pub const SCHEMA_VERSION: u32 = 1;

pub const CSV_COLUMNS: [&str; 11] = [
    "family",
    "s",
    "q",
    "m",
    "descriptor_kind",
    "param1",
    "param2",
    "param3",
    "subgroup_order",
    "delta",
    "genus",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Format {
    Csv,
    Json,
    Table,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            "table" => Ok(Format::Table),
            _ => Err(Error::Parse {
                what: "output format",
                input: s.to_string(),
            }),
        }
    }
}

fn csv_fields(params: &CurveParams, r: &GenusRecord) -> Vec<String> {
    let mut fields = vec![
        params.family.as_str().to_string(),
        params.s.to_string(),
        params.q.to_string(),
        params.m.to_string(),
        r.descriptor.kind().as_str().to_string(),
    ];
    fields.extend(
        r.descriptor
            .params()
            .iter()
            .map(|p| p.map(|v| v.to_string()).unwrap_or_default()),
    );
    fields.extend([r.order.to_string(), r.delta.to_string(), r.genus.to_string()]);
    fields
}

pub fn write_csv<W: Write>(report: &SpectrumReport, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_COLUMNS)?;
    for r in &report.records {
        w.write_record(csv_fields(&report.params, r))?;
    }
    w.flush()?;
    Ok(())
}

fn int(v: i128) -> Value {
    serde_json::to_value(v).expect("i128 serializes with arbitrary precision")
}

pub fn to_json(report: &SpectrumReport) -> Value {
    let p = &report.params;
    let records: Vec<Value> = report
        .records
        .iter()
        .map(|r| {
            json!({
                "descriptor": r.descriptor.to_string(),
                "kind": r.descriptor.kind().as_str(),
                "params": r.descriptor.params().iter().map(|v| v.map(int).unwrap_or(Value::Null)).collect::<Vec<_>>(),
                "subgroup_order": int(r.order),
                "delta": int(r.delta),
                "genus": int(r.genus),
            })
        })
        .collect();
    json!({
        "schema_version": SCHEMA_VERSION,
        "params": {
            "family": p.family.as_str(),
            "s": p.s,
            "q0": int(p.q0),
            "q": int(p.q),
            "m": int(p.m),
            "ambient_degree": int(p.ambient_degree),
            "ambient_genus": int(p.ambient_genus()),
        },
        "records": records,
        "genera": report.genera.iter().map(|&g| int(g)).collect::<Vec<_>>(),
        "families_covered": report.families_covered.iter().map(|k| k.as_str()).collect::<Vec<_>>(),
        "completeness_note": report.completeness_note,
    })
}

pub fn write_json<W: Write>(report: &SpectrumReport, mut out: W) -> Result<()> {
    // Object keys are kept sorted by serde_json's map type.
    serde_json::to_writer_pretty(&mut out, &to_json(report))?;
    out.write_all(b"\n")?;
    Ok(())
}

pub fn render_table(report: &SpectrumReport) -> String {
    let p = &report.params;
    let mut s = String::new();
    let _ = writeln!(s, "# {p}");
    let _ = writeln!(
        s,
        "# ambient genus {}, {} records, {} distinct genera",
        p.ambient_genus(),
        report.records.len(),
        report.genera.len()
    );
    let _ = writeln!(s, "# {}", report.completeness_note);
    let rows: Vec<[String; 4]> = report
        .records
        .iter()
        .map(|r| {
            [
                r.descriptor.to_string(),
                r.order.to_string(),
                r.delta.to_string(),
                r.genus.to_string(),
            ]
        })
        .collect();
    let header = ["descriptor", "order", "delta", "genus"].map(String::from);
    let mut widths = header.clone().map(|h| h.len());
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    for row in std::iter::once(&header).chain(&rows) {
        let _ = writeln!(
            s,
            "{:<w0$}  {:>w1$}  {:>w2$}  {:>w3$}",
            row[0],
            row[1],
            row[2],
            row[3],
            w0 = widths[0],
            w1 = widths[1],
            w2 = widths[2],
            w3 = widths[3]
        );
    }
    let genera: Vec<String> = report.genera.iter().map(|g| g.to_string()).collect();
    let _ = writeln!(s, "# genera: {}", genera.join(", "));
    s
}

pub fn write_report<W: Write>(report: &SpectrumReport, format: Format, mut out: W) -> Result<()> {
    match format {
        Format::Csv => write_csv(report, out),
        Format::Json => write_json(report, out),
        Format::Table => Ok(out.write_all(render_table(report).as_bytes())?),
    }
}

/// One loaded CSV row after validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoadedRecord {
    pub family: CurveFamily,
    pub s: u32,
    pub record: GenusRecord,
}

fn parse_field<T: FromStr>(what: &'static str, raw: &str) -> Result<T> {
    raw.trim().parse().map_err(|_| Error::Parse {
        what,
        input: raw.to_string(),
    })
}

fn params_cached(
    cache: &mut HashMap<(CurveFamily, u32), CurveParams>,
    family: CurveFamily,
    s: u32,
) -> Result<CurveParams> {
    if let Some(p) = cache.get(&(family, s)) {
        return Ok(p.clone());
    }
    let p = make_params(family, s)?;
    cache.insert((family, s), p.clone());
    Ok(p)
}

fn check_curve(params: &CurveParams, q: i128, m: i128) -> Result<()> {
    if params.q != q || params.m != m {
        return Err(Error::InvalidRecord(format!("q = {q}, m = {m} do not match {params}")));
    }
    Ok(())
}

/// Reads a CSV export, re-deriving parameters and re-checking Riemann–Hurwitz on every row.
pub fn read_csv<R: Read>(input: R) -> Result<Vec<LoadedRecord>> {
    let mut reader = csv::Reader::from_reader(input);
    let headers = reader.headers()?.clone();
    if headers.iter().ne(CSV_COLUMNS.iter().copied()) {
        return Err(Error::InvalidRecord(format!("unexpected CSV header {:?}", headers)));
    }
    let mut cache = HashMap::new();
    let mut out = Vec::new();
    for row in reader.records() {
        let row = row?;
        let family: CurveFamily = row[0].parse()?;
        let s: u32 = parse_field("s", &row[1])?;
        let params = params_cached(&mut cache, family, s)?;
        check_curve(&params, parse_field("q", &row[2])?, parse_field("m", &row[3])?)?;
        let kind: DescriptorKind = row[4].parse()?;
        let values = (5..8)
            .filter(|&i| !row[i].trim().is_empty())
            .map(|i| parse_field("descriptor parameter", &row[i]))
            .collect::<Result<Vec<i128>>>()?;
        let descriptor = SubgroupDescriptor::from_parts(kind, &values)?;
        descriptor.validate(&params)?;
        let record = GenusRecord {
            descriptor,
            order: parse_field("subgroup_order", &row[8])?,
            delta: parse_field("delta", &row[9])?,
            genus: parse_field("genus", &row[10])?,
        };
        record.validate(&params)?;
        out.push(LoadedRecord { family, s, record });
    }
    Ok(out)
}

fn json_int(v: &Value, what: &'static str) -> Result<i128> {
    serde_json::from_value(v.clone()).map_err(|_| Error::Parse {
        what,
        input: v.to_string(),
    })
}

fn field<'a>(v: &'a Value, key: &'static str) -> Result<&'a Value> {
    v.get(key)
        .ok_or_else(|| Error::InvalidRecord(format!("missing field {key}")))
}

/// Reads a JSON export back into a report, re-checking every record and the genus list.
pub fn read_json<R: Read>(input: R) -> Result<SpectrumReport> {
    let doc: Value = serde_json::from_reader(input)?;
    let version = json_int(field(&doc, "schema_version")?, "schema_version")?;
    if version != SCHEMA_VERSION as i128 {
        return Err(Error::InvalidRecord(format!("unsupported schema_version {version}")));
    }
    let p = field(&doc, "params")?;
    let family: CurveFamily = field(p, "family")?
        .as_str()
        .ok_or_else(|| Error::InvalidRecord("family is not a string".into()))?
        .parse()?;
    let s = u32::try_from(json_int(field(p, "s")?, "s")?).map_err(|_| Error::InvalidRecord("s out of range".into()))?;
    let params = make_params(family, s)?;
    check_curve(&params, json_int(field(p, "q")?, "q")?, json_int(field(p, "m")?, "m")?)?;

    let mut records = Vec::new();
    for r in field(&doc, "records")?
        .as_array()
        .ok_or_else(|| Error::InvalidRecord("records is not a list".into()))?
    {
        let descriptor: SubgroupDescriptor = field(r, "descriptor")?
            .as_str()
            .ok_or_else(|| Error::InvalidRecord("descriptor is not a string".into()))?
            .parse()?;
        descriptor.validate(&params)?;
        let record = GenusRecord {
            descriptor,
            order: json_int(field(r, "subgroup_order")?, "subgroup_order")?,
            delta: json_int(field(r, "delta")?, "delta")?,
            genus: json_int(field(r, "genus")?, "genus")?,
        };
        record.validate(&params)?;
        records.push(record);
    }
    let genera = field(&doc, "genera")?
        .as_array()
        .ok_or_else(|| Error::InvalidRecord("genera is not a list".into()))?
        .iter()
        .map(|g| json_int(g, "genus"))
        .collect::<Result<Vec<_>>>()?;
    let mut expected: Vec<i128> = records.iter().map(|r| r.genus).collect();
    expected.sort_unstable();
    expected.dedup();
    if genera != expected {
        return Err(Error::InvalidRecord("genera list does not match the records".into()));
    }
    let families_covered = field(&doc, "families_covered")?
        .as_array()
        .ok_or_else(|| Error::InvalidRecord("families_covered is not a list".into()))?
        .iter()
        .map(|k| k.as_str().unwrap_or_default().parse())
        .collect::<Result<Vec<DescriptorKind>>>()?;
    let completeness_note = field(&doc, "completeness_note")?
        .as_str()
        .unwrap_or_default()
        .to_string();
    Ok(SpectrumReport {
        params,
        records,
        genera,
        families_covered,
        completeness_note,
    })
}
