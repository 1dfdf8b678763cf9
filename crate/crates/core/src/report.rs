//! Output records and their CSV, JSON and Markdown renderings.

use std::io::{self, Write};

use serde::{Deserialize, Serialize};

use crate::count::BigCount;
use crate::sci::Sci3;

/// One `(n, delta)` result. Counts are strings so consumers never round them.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub n: usize,
    pub delta: usize,
    pub count_exact: String,
    pub count_sci: String,
    pub millis: f64,
}

impl OutputRecord {
    pub fn new(n: usize, delta: usize, count: &BigCount, millis: f64) -> Self {
        Self {
            n,
            delta,
            count_exact: count.to_str_radix(10),
            count_sci: Sci3::from_count(count).to_string(),
            millis,
        }
    }
}

pub const CSV_HEADER: &str = "n,delta,count_exact,count_sci,millis";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
    Markdown,
}

pub fn write_records<W: Write>(out: &mut W, records: &[OutputRecord], format: Format) -> io::Result<()> {
    match format {
        Format::Csv => {
            writeln!(out, "{CSV_HEADER}")?;
            for r in records {
                writeln!(
                    out,
                    "{},{},{},{},{:.3}",
                    r.n, r.delta, r.count_exact, r.count_sci, r.millis
                )?;
            }
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, records)?;
            writeln!(out)?;
        }
        Format::Markdown => {
            writeln!(out, "| n | delta | count_exact | count_sci | millis |")?;
            writeln!(out, "|---:|---:|---:|---:|---:|")?;
            for r in records {
                writeln!(
                    out,
                    "| {} | {} | {} | {} | {:.3} |",
                    r.n, r.delta, r.count_exact, r.count_sci, r.millis
                )?;
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Vec<OutputRecord> {
        vec![
            OutputRecord::new(1, 0, &BigCount::from(1u8), 0.25),
            OutputRecord::new(8, 5, &BigCount::from(4410u32), 1.5),
        ]
    }

    #[test]
    fn csv_layout() {
        let mut buf = Vec::new();
        write_records(&mut buf, &sample(), Format::Csv).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "n,delta,count_exact,count_sci,millis\n1,0,1,1.00e0,0.250\n8,5,4410,4.41e3,1.500\n"
        );
    }

    #[test]
    fn json_round_trip_is_idempotent() {
        let mut first = Vec::new();
        write_records(&mut first, &sample(), Format::Json).unwrap();
        let parsed: Vec<OutputRecord> = serde_json::from_slice(&first).unwrap();
        assert_eq!(parsed, sample());
        let mut second = Vec::new();
        write_records(&mut second, &parsed, Format::Json).unwrap();
        assert_eq!(first, second);

        let v: serde_json::Value = serde_json::from_slice(&first).unwrap();
        let obj = v[1].as_object().unwrap();
        assert_eq!(obj.len(), 5);
        assert!(obj["count_exact"].is_string());
        assert_eq!(obj["count_sci"], "4.41e3");
    }

    #[test]
    fn markdown_has_a_row_per_record() {
        let mut buf = Vec::new();
        write_records(&mut buf, &sample(), Format::Markdown).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 4);
        assert!(text.contains("| 8 | 5 | 4410 | 4.41e3 |"));
    }
}
