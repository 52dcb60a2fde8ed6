//! Text, JSON and LaTeX renderings of command results.

use clap::ValueEnum;
use iterhopf::{LinComb, Monomial, TensorK, Wedge2, Q};
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

/// One result in all three formats.
#[derive(Clone, Debug, PartialEq)]
pub struct Output {
    pub text: String,
    pub json: Value,
    pub latex: String,
}

impl Output {
    /// A result whose LaTeX form is its text form.
    pub fn plain(text: impl Into<String>, json: Value) -> Output {
        let text = text.into();
        Output { latex: text.clone(), text, json }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => serde_json::to_string_pretty(&self.json).expect("json values serialize"),
            Format::Latex => self.latex.clone(),
        }
    }

    /// Stacks several results: text and LaTeX line by line, JSON as an array.
    pub fn lines(items: Vec<Output>) -> Output {
        Output {
            text: items.iter().map(|o| o.text.as_str()).collect::<Vec<_>>().join("\n"),
            latex: items.iter().map(|o| o.latex.as_str()).collect::<Vec<_>>().join("\n"),
            json: Value::Array(items.into_iter().map(|o| o.json).collect()),
        }
    }
}

/// Rationals travel as `"p/q"` strings, integers as `"p"`.
pub fn rational(x: &Q) -> Value {
    Value::String(x.to_string())
}

fn term<'a>(slots: impl Iterator<Item = &'a Monomial>, c: &Q) -> Value {
    json!({ "coeff": rational(c), "slots": slots.map(|m| m.to_string()).collect::<Vec<_>>() })
}

pub fn lincomb(x: &LinComb) -> Output {
    let terms: Vec<Value> = x.terms().map(|(m, c)| term(std::iter::once(m), c)).collect();
    Output { text: x.to_string(), latex: x.latex(), json: json!({ "kind": "lincomb", "terms": terms }) }
}

pub fn tensor(t: &TensorK) -> Output {
    let terms: Vec<Value> = t.terms().map(|(s, c)| term(s.iter(), c)).collect();
    Output {
        text: t.to_string(),
        latex: t.latex(),
        json: json!({ "kind": "tensor", "arity": t.arity(), "terms": terms }),
    }
}

pub fn wedge(w: &Wedge2) -> Output {
    let terms: Vec<Value> = w.terms().map(|((x, y), c)| term([x, y].into_iter(), c)).collect();
    Output { text: w.to_string(), latex: w.latex(), json: json!({ "kind": "wedge", "terms": terms }) }
}
