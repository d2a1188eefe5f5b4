use std::io::Read;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const RECORD_COLUMNS: [&str; 5] = [
    "person_id",
    "phd_institution",
    "phd_year",
    "discipline",
    "hire_institution",
];

/// One person's doctoral origin and first faculty placement.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HiringRecord {
    pub person_id: String,
    pub phd_institution: String,
    pub phd_year: u32,
    pub discipline: String,
    pub hire_institution: String,
}

impl HiringRecord {
    pub fn is_self_hire(&self) -> bool {
        self.phd_institution == self.hire_institution
    }
}

/// Reads person-level hiring records from CSV text.
///
/// The header must name every column in [`RECORD_COLUMNS`]; extra columns are
/// ignored. Fields are trimmed and row order is preserved.
pub fn load_records<R: Read>(source: R) -> Result<Vec<HiringRecord>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(false)
        .from_reader(source);

    let headers = reader.headers()?.clone();
    let mut column = [0usize; 5];
    for (slot, name) in column.iter_mut().zip(RECORD_COLUMNS) {
        *slot = headers
            .iter()
            .position(|h| h.trim() == name)
            .ok_or_else(|| Error::Format(format!("missing column `{name}` in header")))?;
    }

    let mut records = Vec::new();
    for row in reader.records() {
        let row = row?;
        let line = row.position().map(|p| p.line()).unwrap_or(0);
        let field = |k: usize| row.get(column[k]).unwrap_or("").trim();

        let phd_institution = field(1);
        let hire_institution = field(4);
        if phd_institution.is_empty() || hire_institution.is_empty() {
            return Err(Error::Row {
                line,
                message: "institution name is empty".into(),
            });
        }
        let year_text = field(2);
        let phd_year = match year_text.parse::<u32>() {
            Ok(y) if y > 0 => y,
            _ => {
                return Err(Error::Row {
                    line,
                    message: format!("phd_year `{year_text}` is not a positive integer"),
                })
            }
        };

        records.push(HiringRecord {
            person_id: field(0).to_string(),
            phd_institution: phd_institution.to_string(),
            phd_year,
            discipline: field(3).to_string(),
            hire_institution: hire_institution.to_string(),
        });
    }
    Ok(records)
}

/// Writes records in the same layout [`load_records`] accepts.
pub fn write_records<W: std::io::Write>(records: &[HiringRecord], sink: W) -> Result<()> {
    let mut writer = csv::Writer::from_writer(sink);
    writer.write_record(RECORD_COLUMNS)?;
    for r in records {
        writer.write_record([
            r.person_id.as_str(),
            &r.phd_institution,
            &r.phd_year.to_string(),
            &r.discipline,
            &r.hire_institution,
        ])?;
    }
    writer.flush()?;
    Ok(())
}
