//! A small document model rendered as JSON, CSV or text.
//!
//! Exact rationals become `{"num": "...", "den": "..."}`, Gaussian rationals
//! `{"re": rational, "im": rational}`, and floating-point complex numbers a
//! pair of decimal strings `[re, im]` with a fixed number of significant
//! digits.

use std::fmt::Write;

use extrans::qseries::{ComplexF, GaussRational, Rational};
use serde_json::{json, Map, Value};

use crate::args::Format;

#[derive(Clone, Debug, PartialEq)]
pub enum Doc {
    Null,
    Bool(bool),
    Int(i64),
    Float(f64),
    Str(String),
    Rat(Rational),
    Gauss(GaussRational),
    Complex(ComplexF),
    List(Vec<Doc>),
    Map(Vec<(String, Doc)>),
}

impl Doc {
    pub fn map<K: Into<String>>(entries: impl IntoIterator<Item = (K, Doc)>) -> Doc {
        Doc::Map(entries.into_iter().map(|(k, v)| (k.into(), v)).collect())
    }

    pub fn str(s: impl Into<String>) -> Doc {
        Doc::Str(s.into())
    }

    pub fn opt<T>(x: Option<T>, f: impl FnOnce(T) -> Doc) -> Doc {
        x.map_or(Doc::Null, f)
    }
}

/// Renders `x` with `digits` significant digits in scientific notation.
pub fn decimal(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".into();
    }
    format!("{:.*e}", digits.saturating_sub(1), x)
}

fn rat_json(r: &Rational) -> Value {
    json!({"num": r.numer().to_string(), "den": r.denom().to_string()})
}

fn rat_text(r: &Rational) -> String {
    if r.denom() == &1.into() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn gauss_text(g: &GaussRational) -> String {
    use num_traits::{Signed, Zero};
    match (g.re.is_zero(), g.im.is_zero()) {
        (_, true) => rat_text(&g.re),
        (true, false) => format!("{}i", rat_text(&g.im)),
        (false, false) => {
            let sign = if g.im.is_negative() { "-" } else { "+" };
            format!("{}{}{}i", rat_text(&g.re), sign, rat_text(&g.im.abs()))
        }
    }
}

fn complex_text(z: ComplexF, digits: usize) -> String {
    let im = decimal(z.im.abs(), digits);
    let sign = if z.im.is_sign_negative() && z.im != 0.0 {
        "-"
    } else {
        "+"
    };
    format!("{}{}{}i", decimal(z.re, digits), sign, im)
}

pub fn to_json(doc: &Doc, digits: usize) -> Value {
    match doc {
        Doc::Null => Value::Null,
        Doc::Bool(b) => Value::Bool(*b),
        Doc::Int(i) => json!(i),
        Doc::Float(x) => Value::String(decimal(*x, digits)),
        Doc::Str(s) => Value::String(s.clone()),
        Doc::Rat(r) => rat_json(r),
        Doc::Gauss(g) => json!({"re": rat_json(&g.re), "im": rat_json(&g.im)}),
        Doc::Complex(z) => json!([decimal(z.re, digits), decimal(z.im, digits)]),
        Doc::List(xs) => Value::Array(xs.iter().map(|x| to_json(x, digits)).collect()),
        Doc::Map(kv) => {
            let mut m = Map::new();
            for (k, v) in kv {
                m.insert(k.clone(), to_json(v, digits));
            }
            Value::Object(m)
        }
    }
}

/// A scalar cell for text and CSV output.
fn scalar(doc: &Doc, digits: usize) -> Option<String> {
    Some(match doc {
        Doc::Null => "null".into(),
        Doc::Bool(b) => b.to_string(),
        Doc::Int(i) => i.to_string(),
        Doc::Float(x) => decimal(*x, digits),
        Doc::Str(s) => s.clone(),
        Doc::Rat(r) => rat_text(r),
        Doc::Gauss(g) => gauss_text(g),
        Doc::Complex(z) => complex_text(*z, digits),
        Doc::List(_) | Doc::Map(_) => return None,
    })
}

fn text_into(out: &mut String, doc: &Doc, indent: usize, digits: usize) {
    let pad = "  ".repeat(indent);
    match doc {
        Doc::Map(kv) => {
            for (k, v) in kv {
                match scalar(v, digits) {
                    Some(s) => writeln!(out, "{pad}{k}: {s}").unwrap(),
                    None => {
                        writeln!(out, "{pad}{k}:").unwrap();
                        text_into(out, v, indent + 1, digits);
                    }
                }
            }
        }
        Doc::List(xs) => {
            if let Some(cells) = xs
                .iter()
                .map(|x| scalar(x, digits))
                .collect::<Option<Vec<_>>>()
            {
                writeln!(out, "{pad}[{}]", cells.join(", ")).unwrap();
                return;
            }
            for (i, x) in xs.iter().enumerate() {
                writeln!(out, "{pad}- [{i}]").unwrap();
                text_into(out, x, indent + 1, digits);
            }
        }
        other => writeln!(out, "{pad}{}", scalar(other, digits).unwrap_or_default()).unwrap(),
    }
}

fn flatten(prefix: &str, doc: &Doc, digits: usize, rows: &mut Vec<(String, String)>) {
    let key = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match doc {
        Doc::Map(kv) => kv
            .iter()
            .for_each(|(k, v)| flatten(&key(k), v, digits, rows)),
        Doc::List(xs) => xs
            .iter()
            .enumerate()
            .for_each(|(i, v)| flatten(&key(&i.to_string()), v, digits, rows)),
        other => rows.push((
            prefix.to_string(),
            scalar(other, digits).unwrap_or_default(),
        )),
    }
}

fn csv_cell(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// A rendered table for CSV output.
#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<Doc>>,
}

/// A command result: a document plus, for tabular commands, a table used
/// in CSV mode.
pub struct Output {
    pub doc: Doc,
    pub table: Option<Table>,
}

impl Output {
    pub fn doc(doc: Doc) -> Self {
        Output { doc, table: None }
    }

    pub fn render(&self, format: Format, digits: usize) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&to_json(&self.doc, digits))
                    .expect("serializable");
                s.push('\n');
                s
            }
            Format::Text => {
                let mut s = String::new();
                text_into(&mut s, &self.doc, 0, digits);
                s
            }
            Format::Csv => {
                let (header, rows): (Vec<String>, Vec<Vec<String>>) = match &self.table {
                    Some(t) => (
                        t.header.clone(),
                        t.rows
                            .iter()
                            .map(|r| {
                                r.iter()
                                    .map(|c| scalar(c, digits).unwrap_or_default())
                                    .collect()
                            })
                            .collect(),
                    ),
                    None => {
                        let mut flat = Vec::new();
                        flatten("", &self.doc, digits, &mut flat);
                        (
                            vec!["key".into(), "value".into()],
                            flat.into_iter().map(|(k, v)| vec![k, v]).collect(),
                        )
                    }
                };
                let mut s = String::new();
                for line in std::iter::once(header).chain(rows) {
                    let cells: Vec<String> = line.iter().map(|c| csv_cell(c)).collect();
                    writeln!(s, "{}", cells.join(",")).unwrap();
                }
                s
            }
        }
    }
}
