//! Reading and writing interval tables as CSV, and turning classic
//! single-valued tables into interval tables by grouping on a concept column.
//!
//! Interval cells use the bracket form `[lo,hi]`. Because the cell itself
//! contains a comma it is normally quoted, but unquoted bracket cells are
//! accepted too. Files may alternatively carry paired `name.lo`/`name.hi`
//! numeric columns; that layout is read-only.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::interval::{Interval, IntervalMatrix};
use crate::linalg::Matrix;

fn read_records(text: &str) -> Result<Vec<Vec<String>>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut out = Vec::new();
    for record in reader.records() {
        let record = record?;
        out.push(merge_bracket_fields(record.iter()));
    }
    Ok(out)
}

/// Re-joins `[a` and `b]` when an unquoted bracket cell was split on its
/// comma.
fn merge_bracket_fields<'a>(fields: impl Iterator<Item = &'a str>) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    let mut open = false;
    for f in fields {
        if open {
            let last = out.last_mut().expect("open cell has a predecessor");
            last.push(',');
            last.push_str(f);
            open = !f.contains(']');
        } else {
            out.push(f.to_string());
            open = f.starts_with('[') && !f.contains(']');
        }
    }
    out
}

fn parse_number(text: &str, row: usize, col: usize) -> Result<f64> {
    let t = text.trim();
    let v: f64 = t.parse().map_err(|_| Error::Parse {
        row,
        col,
        msg: format!("{t:?} is not a number"),
    })?;
    if !v.is_finite() {
        return Err(Error::Parse {
            row,
            col,
            msg: format!("{t:?} is not finite"),
        });
    }
    Ok(v)
}

/// Parses one `[lo,hi]` cell. `row` and `col` are 1-based positions used
/// in error messages.
pub fn parse_interval_cell(text: &str, row: usize, col: usize) -> Result<Interval> {
    let t = text.trim();
    let inner = t
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| Error::Parse {
            row,
            col,
            msg: format!("expected [lo,hi], found {t:?}"),
        })?;
    let mut parts = inner.split(',');
    let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next()) else {
        return Err(Error::Parse {
            row,
            col,
            msg: format!("expected exactly two bounds in {t:?}"),
        });
    };
    let lo = parse_number(a, row, col)?;
    let hi = parse_number(b, row, col)?;
    if lo > hi {
        return Err(Error::Parse {
            row,
            col,
            msg: format!("lower bound exceeds upper bound ({lo} > {hi})"),
        });
    }
    Interval::new(lo, hi)
}

/// Column stems when the header uses the `name.lo`/`name.hi` layout.
fn paired_layout(header: &[String]) -> Option<Vec<String>> {
    if header.is_empty() || header.len() % 2 != 0 {
        return None;
    }
    header
        .chunks(2)
        .map(|pair| {
            let lo = pair[0].strip_suffix(".lo")?;
            let hi = pair[1].strip_suffix(".hi")?;
            (lo == hi).then(|| lo.to_string())
        })
        .collect()
}

/// Parses an interval table: a header row of column names, then one row per
/// object whose first field is the row label.
pub fn parse_interval_csv(text: &str) -> Result<IntervalMatrix> {
    let records = read_records(text)?;
    let Some((header, body)) = records.split_first() else {
        return Err(Error::EmptyInput("no header row"));
    };
    let names = header.get(1..).unwrap_or_default().to_vec();
    let bracketed = body
        .iter()
        .any(|r| r.iter().skip(1).any(|c| c.starts_with('[')));
    let paired = if bracketed {
        None
    } else {
        paired_layout(&names)
    };

    let width = header.len();
    let mut rows = Vec::with_capacity(body.len());
    let mut cells = Vec::new();
    for (r, record) in body.iter().enumerate() {
        let row_no = r + 1;
        if record.len() != width {
            return Err(Error::Parse {
                row: row_no,
                col: record.len().min(width),
                msg: format!("expected {width} fields, found {}", record.len()),
            });
        }
        rows.push(record[0].clone());
        let data = &record[1..];
        if paired.is_some() {
            for (k, pair) in data.chunks(2).enumerate() {
                let lo = parse_number(&pair[0], row_no, 2 * k + 1)?;
                let hi = parse_number(&pair[1], row_no, 2 * k + 2)?;
                if lo > hi {
                    return Err(Error::Parse {
                        row: row_no,
                        col: 2 * k + 1,
                        msg: format!("lower bound exceeds upper bound ({lo} > {hi})"),
                    });
                }
                cells.push(Interval::new(lo, hi)?);
            }
        } else {
            for (c, cell) in data.iter().enumerate() {
                cells.push(parse_interval_cell(cell, row_no, c + 1)?);
            }
        }
    }
    let cols = paired.unwrap_or(names);
    IntervalMatrix::new(rows, cols, cells)
}

/// Shortest text that parses back to exactly `v`.
pub(crate) fn format_number(v: f64) -> String {
    let a = v.abs();
    if a != 0.0 && !(1e-5..1e16).contains(&a) {
        format!("{v:e}")
    } else {
        format!("{v}")
    }
}

pub fn format_interval(iv: &Interval) -> String {
    format!("[{},{}]", format_number(iv.lo()), format_number(iv.hi()))
}

/// Serializes a table in the bracket layout with LF line endings.
pub fn write_interval_csv(table: &IntervalMatrix) -> String {
    let mut writer = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    let mut header = vec![String::new()];
    header.extend(table.col_labels().iter().cloned());
    writer.write_record(&header).expect("writing to memory");
    for i in 0..table.n_rows() {
        let mut record = vec![table.row_labels()[i].clone()];
        record.extend(table.row(i).iter().map(format_interval));
        writer.write_record(&record).expect("writing to memory");
    }
    let bytes = writer.into_inner().expect("flushing to memory");
    String::from_utf8(bytes).expect("csv output is UTF-8")
}

/// A single-valued table. An optional concept column is kept as text so it
/// can hold non-numeric keys; every other cell is a finite real.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassicTable {
    rows: Vec<String>,
    cols: Vec<String>,
    values: Matrix,
    concept: Option<(String, Vec<String>)>,
}

impl ClassicTable {
    pub fn new(rows: Vec<String>, cols: Vec<String>, values: Matrix) -> Result<Self> {
        if values.shape() != (rows.len(), cols.len()) {
            return Err(Error::Dimension(format!(
                "values are {:?} but {} row and {} column labels were given",
                values.shape(),
                rows.len(),
                cols.len()
            )));
        }
        Ok(ClassicTable {
            rows,
            cols,
            values,
            concept: None,
        })
    }

    /// Attaches a textual concept column.
    pub fn with_concept(mut self, name: impl Into<String>, keys: Vec<String>) -> Result<Self> {
        if keys.len() != self.rows.len() {
            return Err(Error::Dimension(format!(
                "{} concept keys for {} rows",
                keys.len(),
                self.rows.len()
            )));
        }
        self.concept = Some((name.into(), keys));
        Ok(self)
    }

    pub fn row_labels(&self) -> &[String] {
        &self.rows
    }

    pub fn col_labels(&self) -> &[String] {
        &self.cols
    }

    pub fn values(&self) -> &Matrix {
        &self.values
    }

    pub fn concept(&self) -> Option<(&str, &[String])> {
        self.concept
            .as_ref()
            .map(|(n, k)| (n.as_str(), k.as_slice()))
    }
}

/// Parses a classic CSV whose header names every column. Rows are labelled
/// `1..=m`. When `concept` names a column it is read as text; all other
/// cells must be numeric.
pub fn parse_classic_csv(text: &str, concept: Option<&str>) -> Result<ClassicTable> {
    let records = read_records(text)?;
    let Some((header, body)) = records.split_first() else {
        return Err(Error::EmptyInput("no header row"));
    };
    let concept_idx = match concept {
        Some(name) => Some(
            header
                .iter()
                .position(|h| h == name)
                .ok_or_else(|| Error::MissingColumn(name.to_string()))?,
        ),
        None => None,
    };
    let cols: Vec<String> = header
        .iter()
        .enumerate()
        .filter(|(j, _)| Some(*j) != concept_idx)
        .map(|(_, h)| h.clone())
        .collect();
    let mut values = Vec::with_capacity(body.len() * cols.len());
    let mut keys = Vec::new();
    for (r, record) in body.iter().enumerate() {
        if record.len() != header.len() {
            return Err(Error::Parse {
                row: r + 1,
                col: record.len().min(header.len()),
                msg: format!("expected {} fields, found {}", header.len(), record.len()),
            });
        }
        for (j, cell) in record.iter().enumerate() {
            if Some(j) == concept_idx {
                keys.push(cell.clone());
            } else {
                values.push(parse_number(cell, r + 1, j + 1)?);
            }
        }
    }
    let rows = (1..=body.len()).map(|i| i.to_string()).collect();
    let table = ClassicTable::new(
        rows,
        cols.clone(),
        Matrix::from_row_major(body.len(), cols.len(), values)?,
    )?;
    match concept {
        Some(name) => table.with_concept(name, keys),
        None => Ok(table),
    }
}

/// Groups rows by the concept column and replaces each numeric column by the
/// `[min, max]` of the group. Groups appear in order of first occurrence and
/// the concept column is dropped from the output.
pub fn aggregate_classic(table: &ClassicTable, concept_col: &str) -> Result<IntervalMatrix> {
    if table.rows.is_empty() {
        return Err(Error::EmptyInput("classic table has no rows"));
    }
    let (keys, keep): (Vec<String>, Vec<usize>) = match &table.concept {
        Some((name, keys)) if name == concept_col => {
            (keys.clone(), (0..table.cols.len()).collect())
        }
        _ => {
            let idx = table
                .cols
                .iter()
                .position(|c| c == concept_col)
                .ok_or_else(|| Error::MissingColumn(concept_col.to_string()))?;
            let keys = table
                .values
                .column(idx)
                .into_iter()
                .map(format_number)
                .collect();
            (keys, (0..table.cols.len()).filter(|&j| j != idx).collect())
        }
    };

    let mut group_of: HashMap<&str, usize> = HashMap::new();
    let mut labels: Vec<String> = Vec::new();
    let mut acc: Vec<Vec<Interval>> = Vec::new();
    for (i, key) in keys.iter().enumerate() {
        let row: Vec<Interval> = keep
            .iter()
            .map(|&j| Interval::point(table.values[(i, j)]))
            .collect();
        match group_of.get(key.as_str()) {
            Some(&g) => {
                for (cell, v) in acc[g].iter_mut().zip(&row) {
                    *cell = cell.hull(v);
                }
            }
            None => {
                group_of.insert(key, labels.len());
                labels.push(key.clone());
                acc.push(row);
            }
        }
    }
    let cols = keep.iter().map(|&j| table.cols[j].clone()).collect();
    IntervalMatrix::new(labels, cols, acc.concat())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bracket_cells() {
        let c = parse_interval_cell("[0.93,0.935]", 1, 1).unwrap();
        assert_eq!((c.lo(), c.hi()), (0.93, 0.935));
        assert!(parse_interval_cell(" [5, 5] ", 1, 1)
            .unwrap()
            .is_degenerate());
        let err = parse_interval_cell("[2,1]", 3, 4).unwrap_err();
        assert!(
            err.to_string().contains("lower bound exceeds upper bound"),
            "{err}"
        );
        assert!(err.to_string().contains("row 3, col 4"), "{err}");
        assert!(parse_interval_cell("[1e-3,2.5E2]", 1, 1).is_ok());
        for bad in ["1,2", "[1]", "[1,2,3]", "[a,2]", "[1,inf]", "(1,2)"] {
            assert!(parse_interval_cell(bad, 1, 1).is_err(), "{bad}");
        }
    }

    #[test]
    fn quoted_unquoted_and_crlf() {
        let text = ",A,B\r\nx,\"[1,2]\",[3,4]\r\ny,[ -1 , 0 ],\"[5,5]\"\r\n";
        let t = parse_interval_csv(text).unwrap();
        assert_eq!(t.row_labels(), ["x", "y"]);
        assert_eq!(t.col_labels(), ["A", "B"]);
        assert_eq!(t.get(0, 1), Interval::new(3.0, 4.0).unwrap());
        assert_eq!(t.get(1, 0), Interval::new(-1.0, 0.0).unwrap());
    }

    #[test]
    fn ragged_and_duplicate_rows() {
        assert!(matches!(
            parse_interval_csv(",A,B\nx,\"[1,2]\"\n"),
            Err(Error::Parse { row: 1, .. })
        ));
        assert!(matches!(
            parse_interval_csv(",A\nx,[1,2]\nx,[1,2]\n"),
            Err(Error::DuplicateLabel { .. })
        ));
        assert!(matches!(parse_interval_csv(""), Err(Error::EmptyInput(_))));
    }

    #[test]
    fn paired_columns() {
        let t = parse_interval_csv("obj,a.lo,a.hi,b.lo,b.hi\nx,1,2,-3,-1\n").unwrap();
        assert_eq!(t.col_labels(), ["a", "b"]);
        assert_eq!(t.get(0, 1), Interval::new(-3.0, -1.0).unwrap());
        assert!(parse_interval_csv("obj,a.lo,a.hi\nx,2,1\n").is_err());
    }

    #[test]
    fn writes_header_only_for_empty_table() {
        let t = IntervalMatrix::new(vec![], vec!["A".into(), "B".into()], vec![]).unwrap();
        assert_eq!(write_interval_csv(&t), ",A,B\n");
        assert_eq!(parse_interval_csv(&write_interval_csv(&t)).unwrap(), t);
    }

    #[test]
    fn writes_degenerate_cells_compactly() {
        let t = IntervalMatrix::new(
            vec!["r".into()],
            vec!["A".into()],
            vec![Interval::point(3.0)],
        )
        .unwrap();
        assert_eq!(write_interval_csv(&t), ",A\nr,\"[3,3]\"\n");
    }

    #[test]
    fn number_formatting_round_trips() {
        for v in [
            0.1,
            1.0 / 3.0,
            -2.5e-9,
            6.02e23,
            1e300,
            0.0,
            -0.0,
            123456.789,
        ] {
            assert_eq!(format_number(v).parse::<f64>().unwrap(), v);
        }
    }

    #[test]
    fn aggregate_min_max_and_order() {
        let t = parse_classic_csv("g,v,w\nb,3,1\na,7,1\nb,5,2\nb,4,0\n", Some("g")).unwrap();
        let agg = aggregate_classic(&t, "g").unwrap();
        assert_eq!(agg.row_labels(), ["b", "a"]);
        assert_eq!(agg.col_labels(), ["v", "w"]);
        assert_eq!(agg.get(0, 0), Interval::new(3.0, 5.0).unwrap());
        assert_eq!(agg.get(1, 0), Interval::point(7.0));
        assert_eq!(agg.get(0, 1), Interval::new(0.0, 2.0).unwrap());
    }

    #[test]
    fn aggregate_on_numeric_concept() {
        let t = parse_classic_csv("state,x\n8,1\n53,2\n8,0.5\n", None).unwrap();
        let agg = aggregate_classic(&t, "state").unwrap();
        assert_eq!(agg.row_labels(), ["8", "53"]);
        assert_eq!(agg.col_labels(), ["x"]);
        assert_eq!(agg.get(0, 0), Interval::new(0.5, 1.0).unwrap());
    }

    #[test]
    fn aggregate_errors() {
        let t = parse_classic_csv("g,v\na,1\n", None);
        assert!(t.is_err(), "non-numeric cell without concept designation");
        let t = parse_classic_csv("g,v\n1,1\n", None).unwrap();
        assert!(matches!(
            aggregate_classic(&t, "zzz"),
            Err(Error::MissingColumn(_))
        ));
        let empty = parse_classic_csv("g,v\n", None).unwrap();
        assert!(matches!(
            aggregate_classic(&empty, "g"),
            Err(Error::EmptyInput(_))
        ));
        assert!(matches!(
            parse_classic_csv("g,v\n1,1\n", Some("h")),
            Err(Error::MissingColumn(_))
        ));
    }
}
