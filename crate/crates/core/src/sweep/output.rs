use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use crate::error::{Error, Result};

use super::{SweepRow, SweepTable, ThresholdRow};

const BASE_HEADER: &str = "N,k,a,xi,tperp_min,mean_spin_len,squeezed,degenerate";
const ORACLE_HEADER: &str = ",xi_oracle,oracle_diff";
const THRESHOLD_HEADER: &str = "N,k,a_low,min_xi,argmin_a,status";

/// Shortest decimal that parses back to exactly `x`: fixed notation for
/// exponents in `-5..17`, scientific otherwise.
pub fn format_real(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if x.is_nan() {
        return "nan".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    let sci = format!("{x:e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..17).contains(&exp) {
        format!("{x}")
    } else {
        format!("{mantissa}e{exp}")
    }
}

fn opt(x: Option<f64>) -> String {
    x.map(format_real).unwrap_or_default()
}

fn csv_line(row: &SweepRow, crosscheck: bool) -> String {
    let mut line = format!(
        "{},{},{},{},{},{},{},{}",
        row.n,
        row.k,
        format_real(row.a),
        opt(row.xi),
        opt(row.tperp_min),
        format_real(row.mean_spin_len),
        row.squeezed,
        row.degenerate
    );
    if crosscheck {
        line.push(',');
        line.push_str(&opt(row.xi_oracle));
        line.push(',');
        line.push_str(&opt(row.oracle_diff));
    }
    line
}

/// CSV with LF line endings. Degenerate rows leave `xi` and `tperp_min`
/// empty.
pub fn emit_csv<W: Write>(table: &SweepTable, mut out: W) -> io::Result<()> {
    out.write_all(BASE_HEADER.as_bytes())?;
    if table.crosscheck {
        out.write_all(ORACLE_HEADER.as_bytes())?;
    }
    out.write_all(b"\n")?;
    for row in &table.rows {
        out.write_all(csv_line(row, table.crosscheck).as_bytes())?;
        out.write_all(b"\n")?;
    }
    out.flush()
}

pub fn emit_json<W: Write>(table: &SweepTable, mut out: W) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut out, &table.rows)?;
    out.write_all(b"\n")?;
    out.flush()
}

fn with_file(path: &Path, f: impl FnOnce(BufWriter<File>) -> io::Result<()>) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    }
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    f(BufWriter::new(file)).map_err(|e| Error::io(path, e))
}

pub fn write_csv(table: &SweepTable, path: &Path) -> Result<()> {
    with_file(path, |w| emit_csv(table, w))
}

pub fn write_json(table: &SweepTable, path: &Path) -> Result<()> {
    with_file(path, |w| emit_json(table, w))
}

/// Reads back a table written by [`emit_csv`].
pub fn parse_csv(text: &str) -> Result<SweepTable> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::config("csv:1", "missing header"))?;
    let crosscheck = if header == BASE_HEADER {
        false
    } else if header == format!("{BASE_HEADER}{ORACLE_HEADER}") {
        true
    } else {
        return Err(Error::config(
            "csv:1",
            format!("unexpected header {header:?}"),
        ));
    };
    let width = if crosscheck { 10 } else { 8 };
    let mut rows = Vec::new();
    for (idx, line) in lines.enumerate() {
        let loc = format!("csv:{}", idx + 2);
        let f: Vec<&str> = line.split(',').collect();
        if f.len() != width {
            return Err(Error::config(
                loc,
                format!("expected {width} fields, got {}", f.len()),
            ));
        }
        let bad = |what: &str, v: &str| Error::config(loc.clone(), format!("bad {what} {v:?}"));
        let int = |i: usize, what: &str| f[i].parse::<usize>().map_err(|_| bad(what, f[i]));
        let real = |i: usize, what: &str| f[i].parse::<f64>().map_err(|_| bad(what, f[i]));
        let opt_real = |i: usize, what: &str| -> Result<Option<f64>> {
            if f[i].is_empty() {
                Ok(None)
            } else {
                real(i, what).map(Some)
            }
        };
        let boolean = |i: usize, what: &str| f[i].parse::<bool>().map_err(|_| bad(what, f[i]));
        rows.push(SweepRow {
            n: int(0, "N")?,
            k: int(1, "k")?,
            a: real(2, "a")?,
            xi: opt_real(3, "xi")?,
            tperp_min: opt_real(4, "tperp_min")?,
            mean_spin_len: real(5, "mean_spin_len")?,
            squeezed: boolean(6, "squeezed")?,
            degenerate: boolean(7, "degenerate")?,
            xi_oracle: if crosscheck {
                opt_real(8, "xi_oracle")?
            } else {
                None
            },
            oracle_diff: if crosscheck {
                opt_real(9, "oracle_diff")?
            } else {
                None
            },
        });
    }
    Ok(SweepTable {
        crosscheck,
        squared: false,
        rows,
    })
}

pub fn emit_thresholds<W: Write>(rows: &[ThresholdRow], mut out: W) -> io::Result<()> {
    writeln!(out, "{THRESHOLD_HEADER}")?;
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{},{}",
            r.n,
            r.k,
            opt(r.a_low),
            format_real(r.min_xi),
            format_real(r.argmin_a),
            r.status.as_str()
        )?;
    }
    out.flush()
}

pub fn write_thresholds_csv(rows: &[ThresholdRow], path: &Path) -> Result<()> {
    with_file(path, |w| emit_thresholds(rows, w))
}

pub fn write_thresholds_json(rows: &[ThresholdRow], path: &Path) -> Result<()> {
    with_file(path, |mut w| {
        serde_json::to_writer_pretty(&mut w, rows)?;
        w.write_all(b"\n")?;
        w.flush()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shortest_round_trip() {
        assert_eq!(format_real(1.0), "1");
        assert_eq!(format_real(-0.0), "0");
        assert_eq!(format_real(0.005), "0.005");
        assert_eq!(format_real(1.0 / 3.0), "0.3333333333333333");
        assert_eq!(format_real(-1.234e-9), "-1.234e-9");
        assert_eq!(format_real(123456.0), "123456");
        assert_eq!(format_real(1e17), "1e17");
        assert_eq!(format_real(0.00001), "0.00001");
        for x in [2.5f64.sqrt(), 0.99999999999999, 1e-300, 6.02e23, 0.1 + 0.2] {
            assert_eq!(format_real(x).parse::<f64>().unwrap(), x);
        }
        assert_eq!(format_real(f64::INFINITY), "inf");
    }

    #[test]
    fn empty_table_is_header_only() {
        let mut buf = Vec::new();
        emit_csv(&SweepTable::default(), &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), format!("{BASE_HEADER}\n"));
        let mut buf = Vec::new();
        emit_csv(
            &SweepTable {
                crosscheck: true,
                ..SweepTable::default()
            },
            &mut buf,
        )
        .unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "N,k,a,xi,tperp_min,mean_spin_len,squeezed,degenerate,xi_oracle,oracle_diff\n"
        );
    }

    #[test]
    fn one_row_round_trip() {
        let row = SweepRow {
            n: 4,
            k: 2,
            a: 0.0,
            xi: None,
            tperp_min: None,
            mean_spin_len: 0.0,
            squeezed: false,
            degenerate: true,
            xi_oracle: None,
            oracle_diff: Some(0.0),
        };
        let table = SweepTable {
            crosscheck: true,
            rows: vec![row],
            ..SweepTable::default()
        };
        let mut buf = Vec::new();
        emit_csv(&table, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().nth(1), Some("4,2,0,,,0,false,true,,0"));
        assert_eq!(parse_csv(&text).unwrap(), table);
    }

    #[test]
    fn rejects_malformed_csv() {
        assert!(parse_csv("").is_err());
        assert!(parse_csv("a,b\n").is_err());
        assert!(parse_csv(&format!("{BASE_HEADER}\n1,2,3\n")).is_err());
    }
}
