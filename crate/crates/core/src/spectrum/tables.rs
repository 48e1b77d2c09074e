//! Reference genus tables and membership checks against computed spectra.

use std::fmt;

use crate::catalog::DescriptorKind;
use crate::config::Caps;
use crate::error::Result;
use crate::params::{make_params, CurveFamily};
use crate::spectrum::spectrum_for;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReferenceTable {
    pub family: CurveFamily,
    pub s: u32,
    pub expected_genera: &'static [i128],
    pub source_table: u8,
    /// Field of definition, `F_{2^(4(2s+1))}` or `F_{3^(6(2s+1))}`.
    pub field: &'static str,
}

impl ReferenceTable {
    /// Descriptor kinds whose spectrum the row is checked against.
    pub fn kinds(&self) -> &'static [DescriptorKind] {
        match self.source_table {
            3 => &[DescriptorKind::Psl28, DescriptorKind::N2NonSkew],
            _ => &[DescriptorKind::SigmaCm],
        }
    }
}

const fn row(
    family: CurveFamily,
    s: u32,
    source_table: u8,
    field: &'static str,
    expected_genera: &'static [i128],
) -> ReferenceTable {
    ReferenceTable {
        family,
        s,
        expected_genera,
        source_table,
        field,
    }
}

/// Subcovers `C_m x C_m` of the Suzuki cover.
pub const SUZUKI_SIGMA_CM: [ReferenceTable; 4] = [
    row(CurveFamily::Suzuki, 1, 1, "F_2^12", &[38]),
    row(CurveFamily::Suzuki, 2, 1, "F_2^20", &[104, 534, 604, 614, 3066]),
    row(CurveFamily::Suzuki, 3, 1, "F_2^28", &[9080]),
    row(
        CurveFamily::Suzuki,
        4,
        1,
        "F_2^36",
        &[
            3484, 10420, 129160, 135688, 138736, 138952, 138958, 138970, 1806442, 5141854,
        ],
    ),
];

/// Subcovers `C_m x C_m` of the Ree cover.
pub const REE_SIGMA_CM: [ReferenceTable; 1] = [row(CurveFamily::Ree, 1, 2, "F_3^18", &[12942])];

/// `PSL(2,8) x C_n` and `K x C_n` subcovers of the Ree cover.
pub const REE_PSL28_N2: [ReferenceTable; 1] = [row(CurveFamily::Ree, 1, 3, "F_3^18", &[445, 4393])];

pub fn reference_tables() -> Vec<ReferenceTable> {
    SUZUKI_SIGMA_CM
        .iter()
        .chain(&REE_SIGMA_CM)
        .chain(&REE_PSL28_N2)
        .copied()
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MissingGenus {
    pub genus: i128,
    pub nearest_below: Option<i128>,
    pub nearest_above: Option<i128>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowCheck {
    pub table: ReferenceTable,
    pub found: Vec<i128>,
    pub missing: Vec<MissingGenus>,
}

impl RowCheck {
    pub fn passed(&self) -> bool {
        self.missing.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableReport {
    pub rows: Vec<RowCheck>,
    /// Rows left out because their `s` exceeds the requested range.
    pub skipped: Vec<ReferenceTable>,
}

impl TableReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(RowCheck::passed)
    }
}

impl fmt::Display for TableReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            let t = &r.table;
            let status = if r.passed() { "PASS" } else { "FAIL" };
            let kinds: Vec<&str> = t.kinds().iter().map(|k| k.as_str()).collect();
            write!(
                f,
                "{status} {} s={} [{}] over {}: {}/{} present",
                t.family,
                t.s,
                kinds.join("+"),
                t.field,
                r.found.len(),
                t.expected_genera.len()
            )?;
            for miss in &r.missing {
                write!(
                    f,
                    "; missing {} (nearest {:?} / {:?})",
                    miss.genus, miss.nearest_below, miss.nearest_above
                )?;
            }
            writeln!(f)?;
        }
        for t in &self.skipped {
            writeln!(f, "SKIP {} s={}", t.family, t.s)?;
        }
        Ok(())
    }
}

/// Checks membership of every reference genus with `s <= s_max`.
pub fn verify_tables_with(s_max: u32, caps: &Caps) -> Result<TableReport> {
    let mut report = TableReport {
        rows: Vec::new(),
        skipped: Vec::new(),
    };
    for table in reference_tables() {
        if table.s > s_max || caps.check_s(table.family, table.s).is_err() {
            report.skipped.push(table);
            continue;
        }
        let params = make_params(table.family, table.s)?;
        let spectrum = spectrum_for(&params, Some(table.kinds()))?;
        let mut check = RowCheck {
            table,
            found: Vec::new(),
            missing: Vec::new(),
        };
        for &g in table.expected_genera {
            if spectrum.contains(g) {
                check.found.push(g);
            } else {
                let (nearest_below, nearest_above) = spectrum.nearest(g);
                check.missing.push(MissingGenus {
                    genus: g,
                    nearest_below,
                    nearest_above,
                });
            }
        }
        report.rows.push(check);
    }
    Ok(report)
}

pub fn verify_tables(s_max: u32) -> Result<TableReport> {
    verify_tables_with(s_max, &Caps::from_env()?)
}
