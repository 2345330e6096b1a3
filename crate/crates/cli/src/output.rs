//! Machine-readable records, mirrored as `key: value` lines for humans.

use std::io::{self, Write};

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    /// Header line plus one comma-separated row per record.
    Csv,
    /// One JSON object per line.
    Jsonlike,
}

pub fn write_records<T: Serialize>(records: &[T], format: Format, w: impl Write) -> anyhow::Result<()> {
    match format {
        Format::Csv => {
            let mut out = csv::Writer::from_writer(w);
            for r in records {
                out.serialize(r)?;
            }
            out.flush()?;
        }
        Format::Jsonlike => {
            let mut w = io::BufWriter::new(w);
            for r in records {
                serde_json::to_writer(&mut w, r)?;
                w.write_all(b"\n")?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

/// The same fields as the structured record, one `key: value` per line.
pub fn write_human<T: Serialize>(record: &T, mut w: impl Write) -> anyhow::Result<()> {
    if let serde_json::Value::Object(map) = serde_json::to_value(record)? {
        for (key, value) in map {
            match value {
                serde_json::Value::Null => writeln!(w, "{key}: -")?,
                serde_json::Value::String(s) => writeln!(w, "{key}: {s}")?,
                other => writeln!(w, "{key}: {other}")?,
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Serialize)]
    struct Row {
        n: usize,
        label: &'static str,
        seed: Option<u64>,
    }

    #[test]
    fn csv_and_json_share_fields() {
        let rows = [Row { n: 3, label: "x", seed: None }, Row { n: 4, label: "y", seed: Some(2) }];
        let mut csv = Vec::new();
        write_records(&rows, Format::Csv, &mut csv).unwrap();
        assert_eq!(String::from_utf8(csv).unwrap(), "n,label,seed\n3,x,\n4,y,2\n");
        let mut json = Vec::new();
        write_records(&rows, Format::Jsonlike, &mut json).unwrap();
        assert_eq!(
            String::from_utf8(json).unwrap(),
            "{\"n\":3,\"label\":\"x\",\"seed\":null}\n{\"n\":4,\"label\":\"y\",\"seed\":2}\n"
        );
        let mut human = Vec::new();
        write_human(&rows[1], &mut human).unwrap();
        assert_eq!(String::from_utf8(human).unwrap(), "n: 4\nlabel: y\nseed: 2\n");
    }
}
