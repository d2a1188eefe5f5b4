use std::collections::BTreeSet;
use std::fmt;
use std::io::{BufRead, BufReader, Read};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::network::records::HiringRecord;

/// Half-open interval of doctoral graduation years `[start, end)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct YearRange {
    start: u32,
    end: u32,
}

impl YearRange {
    pub fn new(start: u32, end: u32) -> Result<Self> {
        if start >= end {
            return Err(Error::contract(format!(
                "year range {start}:{end} is empty (start must be < end)"
            )));
        }
        Ok(YearRange { start, end })
    }

    pub fn start(&self) -> u32 {
        self.start
    }

    pub fn end(&self) -> u32 {
        self.end
    }

    pub fn contains(&self, year: u32) -> bool {
        self.start <= year && year < self.end
    }
}

impl fmt::Display for YearRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.start, self.end)
    }
}

impl FromStr for YearRange {
    type Err = Error;

    /// Parses `A:B`.
    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s
            .split_once(':')
            .ok_or_else(|| Error::Format(format!("year range `{s}` is not of the form A:B")))?;
        let parse = |t: &str| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Error::Format(format!("year range `{s}` has a non-integer bound")))
        };
        let (start, end) = (parse(a)?, parse(b)?);
        YearRange::new(start, end)
            .map_err(|_| Error::Format(format!("year range `{s}` is empty (start must be < end)")))
    }
}

/// Record selection applied before a network is built. Every present
/// criterion must hold; absent criteria accept everything.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct NetworkFilter {
    pub year_range: Option<YearRange>,
    pub disciplines: Option<BTreeSet<String>>,
    /// Both endpoints of a record must be listed for it to survive.
    pub whitelist: Option<BTreeSet<String>>,
}

impl NetworkFilter {
    pub fn accepts(&self, record: &HiringRecord) -> bool {
        if let Some(range) = &self.year_range {
            if !range.contains(record.phd_year) {
                return false;
            }
        }
        if let Some(disciplines) = &self.disciplines {
            if !disciplines.contains(&record.discipline) {
                return false;
            }
        }
        if let Some(whitelist) = &self.whitelist {
            if !whitelist.contains(&record.phd_institution)
                || !whitelist.contains(&record.hire_institution)
            {
                return false;
            }
        }
        true
    }

    pub fn apply(&self, records: &[HiringRecord]) -> Vec<HiringRecord> {
        records
            .iter()
            .filter(|r| self.accepts(r))
            .cloned()
            .collect()
    }
}

/// Reads a whitelist: one institution name per line, blank lines ignored.
pub fn load_whitelist<R: Read>(source: R) -> Result<BTreeSet<String>> {
    let mut names = BTreeSet::new();
    for line in BufReader::new(source).lines() {
        let line = line?;
        let name = line.trim();
        if !name.is_empty() {
            names.insert(name.to_string());
        }
    }
    Ok(names)
}
