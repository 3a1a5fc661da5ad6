//! Output records and their four encodings.
//!
//! Every command produces rows of `(index, value[, monomial][, quotient])`.
//! Big integers are written as decimal strings in every format. The b-file
//! encoding is exactly one `index value` pair per line with no header or
//! comments.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::Monomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Bfile,
}

/// How rows are laid out in the text format.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TextLayout {
    /// `index value (monomial) [quotient]` per line.
    Rows,
    /// Values only, one line per monomial length (triangle rows).
    Grouped,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub index: usize,
    pub value: BigUint,
    pub monomial: Option<Monomial>,
    pub quotient: Option<String>,
}

impl Row {
    pub fn new(index: usize, value: BigUint) -> Self {
        Row {
            index,
            value,
            monomial: None,
            quotient: None,
        }
    }

    pub fn with_monomial(mut self, a: Monomial) -> Self {
        self.monomial = Some(a);
        self
    }

    pub fn with_quotient(mut self, q: String) -> Self {
        self.quotient = Some(q);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutputRecord {
    pub rows: Vec<Row>,
    pub layout: TextLayout,
}

#[derive(Debug, Serialize, Deserialize)]
struct WireRow {
    index: usize,
    value: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    monomial: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    quotient: Option<String>,
}

impl From<&Row> for WireRow {
    fn from(r: &Row) -> Self {
        WireRow {
            index: r.index,
            value: r.value.to_string(),
            monomial: r.monomial.as_ref().map(|a| a.to_string()),
            quotient: r.quotient.clone(),
        }
    }
}

impl TryFrom<WireRow> for Row {
    type Error = Error;

    fn try_from(w: WireRow) -> Result<Row> {
        Ok(Row {
            index: w.index,
            value: parse_big(&w.value)?,
            monomial: w
                .monomial
                .filter(|s| !s.is_empty())
                .map(|s| Monomial::from_str(&s))
                .transpose()?,
            quotient: w.quotient.filter(|s| !s.is_empty()),
        })
    }
}

fn parse_big(s: &str) -> Result<BigUint> {
    s.trim()
        .parse()
        .map_err(|e| Error::Parse(format!("{s:?}: {e}")))
}

fn parse_index(s: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|e| Error::Parse(format!("{s:?}: {e}")))
}

impl OutputRecord {
    pub fn new(rows: Vec<Row>, layout: TextLayout) -> Self {
        OutputRecord { rows, layout }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.render_text(),
            Format::Json => self.render_json(),
            Format::Csv => self.render_csv(),
            Format::Bfile => self.render_bfile(),
        }
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        match self.layout {
            TextLayout::Rows => {
                for r in &self.rows {
                    write!(out, "{} {}", r.index, r.value).unwrap();
                    if let Some(a) = &r.monomial {
                        write!(out, " {a}").unwrap();
                    }
                    if let Some(q) = &r.quotient {
                        write!(out, " {q}").unwrap();
                    }
                    out.push('\n');
                }
            }
            TextLayout::Grouped => {
                let mut last_len = None;
                for r in &self.rows {
                    let len = r.monomial.as_ref().map(Monomial::len);
                    if last_len.is_some() {
                        out.push(if len == last_len { ' ' } else { '\n' });
                    }
                    write!(out, "{}", r.value).unwrap();
                    last_len = len;
                }
                if !self.rows.is_empty() {
                    out.push('\n');
                }
            }
        }
        out
    }

    fn render_json(&self) -> String {
        let wire: Vec<WireRow> = self.rows.iter().map(WireRow::from).collect();
        let mut s = serde_json::to_string_pretty(&wire).expect("rows serialize");
        s.push('\n');
        s
    }

    fn render_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["index", "value", "monomial", "quotient"])
            .expect("in-memory write");
        for r in &self.rows {
            let wr = WireRow::from(r);
            w.write_record([
                wr.index.to_string(),
                wr.value,
                wr.monomial.unwrap_or_default(),
                wr.quotient.unwrap_or_default(),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }

    fn render_bfile(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            writeln!(out, "{} {}", r.index, r.value).unwrap();
        }
        out
    }
}

/// Decodes rendered output. Text in grouped layout and b-files carry only
/// indices and values; grouped text is re-indexed from 1.
pub fn parse(format: Format, layout: TextLayout, input: &str) -> Result<Vec<Row>> {
    match format {
        Format::Bfile => parse_bfile(input),
        Format::Json => {
            let wire: Vec<WireRow> =
                serde_json::from_str(input).map_err(|e| Error::Parse(e.to_string()))?;
            wire.into_iter().map(Row::try_from).collect()
        }
        Format::Csv => {
            let mut rdr = csv::Reader::from_reader(input.as_bytes());
            let mut rows = Vec::new();
            for rec in rdr.records() {
                let rec = rec.map_err(|e| Error::Parse(e.to_string()))?;
                let field = |i: usize| rec.get(i).unwrap_or("").to_string();
                rows.push(Row::try_from(WireRow {
                    index: parse_index(&field(0))?,
                    value: field(1),
                    monomial: Some(field(2)),
                    quotient: Some(field(3)),
                })?);
            }
            Ok(rows)
        }
        Format::Text => match layout {
            TextLayout::Grouped => {
                let mut rows = Vec::new();
                for tok in input.split_whitespace() {
                    rows.push(Row::new(rows.len() + 1, parse_big(tok)?));
                }
                Ok(rows)
            }
            TextLayout::Rows => input
                .lines()
                .filter(|l| !l.trim().is_empty())
                .map(|line| {
                    let mut it = line.split_whitespace();
                    let index = parse_index(it.next().unwrap_or(""))?;
                    let value = parse_big(it.next().unwrap_or(""))?;
                    let mut row = Row::new(index, value);
                    for tok in it {
                        if tok.starts_with('(') {
                            row.monomial = Some(tok.parse()?);
                        } else {
                            row.quotient = Some(tok.to_string());
                        }
                    }
                    Ok(row)
                })
                .collect(),
        },
    }
}

/// Parses `index value` lines. Blank lines and `#` comments are skipped so
/// published b-files can be read too.
pub fn parse_bfile(input: &str) -> Result<Vec<Row>> {
    input
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|line| {
            let mut it = line.split_whitespace();
            let (Some(i), Some(v), None) = (it.next(), it.next(), it.next()) else {
                return Err(Error::Parse(format!("bad b-file line {line:?}")));
            };
            Ok(Row::new(parse_index(i)?, parse_big(v)?))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> OutputRecord {
        let m = |s: &str| s.parse::<Monomial>().unwrap();
        OutputRecord::new(
            vec![
                Row::new(1, 1u32.into()).with_monomial(m("(1)")),
                Row::new(2, 1u32.into()).with_monomial(m("(2,0)")),
                Row::new(3, 1u32.into()).with_monomial(m("(1,1)")),
                Row::new(4, 2u32.into())
                    .with_monomial(m("(2,1,0)"))
                    .with_quotient("9/4".into()),
            ],
            TextLayout::Rows,
        )
    }

    #[test]
    fn bfile_is_plain_pairs() {
        assert_eq!(sample().render(Format::Bfile), "1 1\n2 1\n3 1\n4 2\n");
    }

    #[test]
    fn grouped_text_breaks_on_length() {
        let mut rec = sample();
        rec.layout = TextLayout::Grouped;
        assert_eq!(rec.render(Format::Text), "1\n1 1\n2\n");
    }

    #[test]
    fn json_and_csv_decode_to_same_rows() {
        let rec = sample();
        for f in [Format::Json, Format::Csv, Format::Text] {
            let back = parse(f, TextLayout::Rows, &rec.render(f)).unwrap();
            assert_eq!(back, rec.rows, "{f:?}");
        }
    }

    #[test]
    fn bfile_parser_rejects_garbage() {
        assert!(parse_bfile("1 2 3\n").is_err());
        assert!(parse_bfile("1\n").is_err());
        assert!(parse_bfile("x 2\n").is_err());
        assert_eq!(
            parse_bfile("# comment\n\n5 7\n").unwrap(),
            vec![Row::new(5, 7u32.into())]
        );
    }
}
