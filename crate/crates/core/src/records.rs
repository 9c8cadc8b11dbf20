//! CSV and JSON output with a fixed header and round-trip-exact numbers.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::InvalidParameter(format!("unknown format {other:?}"))),
        }
    }
}

/// Writes `records` under `header`. CSV output always carries the header,
/// even with no rows; JSON output is an array.
pub fn write_records_to<W: Write, T: Serialize>(
    writer: W,
    records: &[T],
    header: &[&str],
    format: Format,
) -> Result<()> {
    match format {
        Format::Csv => {
            let mut w = csv::WriterBuilder::new()
                .has_headers(false)
                .from_writer(writer);
            w.write_record(header)?;
            for r in records {
                w.serialize(r)?;
            }
            w.flush()?;
        }
        Format::Json => {
            let mut writer = writer;
            serde_json::to_writer_pretty(&mut writer, records)?;
            writer.write_all(b"\n")?;
        }
    }
    Ok(())
}

pub fn write_records<T: Serialize>(
    records: &[T],
    path: impl AsRef<Path>,
    header: &[&str],
    format: Format,
) -> Result<()> {
    let file = BufWriter::new(File::create(path)?);
    write_records_to(file, records, header, format)
}
