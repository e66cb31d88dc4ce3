//! Number formatting and the CSV / JSON renderers.

use serde_json::{Map, Number, Value};

/// Significant digits kept in every emitted number.
pub const DIGITS: usize = 15;

fn scientific(x: f64) -> (String, i32) {
    let s = format!("{:.*e}", DIGITS - 1, x);
    let (mantissa, exp) = s.split_once('e').expect("exponent present");
    (mantissa.to_string(), exp.parse().expect("integer exponent"))
}

/// `x` rounded to [`DIGITS`] significant digits.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return if x == 0.0 { 0.0 } else { x };
    }
    format!("{:.*e}", DIGITS - 1, x)
        .parse()
        .expect("formatted float parses")
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Fifteen significant digits; positional for exponents in `-4..15`,
/// lowercase scientific otherwise. Trailing zeros are dropped.
pub fn fmt_num(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let x = round_sig(x);
    if x == 0.0 {
        return "0".into();
    }
    let (mantissa, exp) = scientific(x);
    if (-4..DIGITS as i32).contains(&exp) {
        let decimals = (DIGITS as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    } else {
        format!("{}e{exp}", trim_zeros(&mantissa))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Num(f64),
    Text(String),
    Bool(bool),
    /// Named coefficients, `name=value` joined by `;` in CSV.
    Terms(Vec<(String, f64)>),
    /// Values joined by `;` in CSV.
    List(Vec<f64>),
    /// Spectral labels joined by `;` in CSV (`none` when empty).
    Labels(Vec<usize>),
    Missing,
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(i) => i.to_string(),
            Cell::Num(x) => fmt_num(*x),
            Cell::Text(t) => t.clone(),
            Cell::Bool(b) => b.to_string(),
            Cell::Terms(ts) => ts
                .iter()
                .map(|(n, v)| format!("{n}={}", fmt_num(*v)))
                .collect::<Vec<_>>()
                .join(";"),
            Cell::List(xs) => xs.iter().map(|x| fmt_num(*x)).collect::<Vec<_>>().join(";"),
            Cell::Labels(ls) if ls.is_empty() => "none".into(),
            Cell::Labels(ls) => ls
                .iter()
                .map(|l| l.to_string())
                .collect::<Vec<_>>()
                .join(";"),
            Cell::Missing => String::new(),
        }
    }

    fn json(&self) -> Value {
        let num = |x: f64| Number::from_f64(round_sig(x)).map_or(Value::Null, Value::Number);
        match self {
            Cell::Int(i) => Value::from(*i),
            Cell::Num(x) => num(*x),
            Cell::Text(t) => Value::from(t.as_str()),
            Cell::Bool(b) => Value::from(*b),
            Cell::Terms(ts) => {
                Value::Object(ts.iter().map(|(n, v)| (n.clone(), num(*v))).collect())
            }
            Cell::List(xs) => Value::Array(xs.iter().map(|x| num(*x)).collect()),
            Cell::Labels(ls) => Value::Array(ls.iter().map(|l| Value::from(*l)).collect()),
            Cell::Missing => Value::Null,
        }
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Num(x)
    }
}

impl From<usize> for Cell {
    fn from(i: usize) -> Self {
        Cell::Int(i as i64)
    }
}

impl From<u32> for Cell {
    fn from(i: u32) -> Self {
        Cell::Int(i64::from(i))
    }
}

impl From<bool> for Cell {
    fn from(b: bool) -> Self {
        Cell::Bool(b)
    }
}

impl From<&str> for Cell {
    fn from(t: &str) -> Self {
        Cell::Text(t.to_string())
    }
}

impl From<String> for Cell {
    fn from(t: String) -> Self {
        Cell::Text(t)
    }
}

impl<T: Into<Cell>> From<Option<T>> for Cell {
    fn from(v: Option<T>) -> Self {
        v.map_or(Cell::Missing, Into::into)
    }
}

/// A table with a header of key/value metadata.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: String,
    pub meta: Vec<(String, Cell)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Report {
    pub fn new(command: &str, columns: &[&str]) -> Self {
        Report {
            command: command.to_string(),
            meta: Vec::new(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn meta(&mut self, key: &str, value: impl Into<Cell>) -> &mut Self {
        self.meta.push((key.to_string(), value.into()));
        self
    }

    pub fn row(&mut self, cells: Vec<Cell>) {
        debug_assert_eq!(cells.len(), self.columns.len());
        self.rows.push(cells);
    }

    /// `#`-prefixed metadata lines, a header line, then one line per row.
    pub fn to_csv(&self) -> String {
        let mut out = format!("# command: {}\n", self.command);
        for (k, v) in &self.meta {
            out.push_str(&format!("# {k}: {}\n", v.csv()));
        }
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.iter().map(Cell::csv).collect::<Vec<_>>().join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json_value(&self) -> Value {
        let meta: Map<String, Value> = self
            .meta
            .iter()
            .map(|(k, v)| (k.clone(), v.json()))
            .collect();
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                Value::Object(
                    self.columns
                        .iter()
                        .cloned()
                        .zip(r.iter().map(Cell::json))
                        .collect(),
                )
            })
            .collect();
        let mut top = Map::new();
        top.insert("command".into(), Value::from(self.command.as_str()));
        top.insert("meta".into(), Value::Object(meta));
        top.insert("rows".into(), Value::Array(rows));
        Value::Object(top)
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        render_json(&self.to_json_value())
    }
}

pub fn render_json(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values always serialise");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn number_formatting() {
        assert_eq!(fmt_num(4.0), "4");
        assert_eq!(fmt_num(-0.0), "0");
        assert_eq!(fmt_num(-6.246211251235321), "-6.24621125123532");
        assert_eq!(fmt_num(0.1), "0.1");
        assert_eq!(fmt_num(3.3e-4), "0.00033");
        assert_eq!(fmt_num(1.3145002972e-35), "1.3145002972e-35");
        assert_eq!(fmt_num(2.5e20), "2.5e20");
        assert_eq!(fmt_num(123456789012345.0), "123456789012345");
        assert_eq!(fmt_num(1234567890123456.0), "1.23456789012346e15");
        assert_eq!(fmt_num(f64::NAN), "nan");
        assert_eq!(fmt_num(f64::NEG_INFINITY), "-inf");
    }

    #[test]
    fn fifteen_digits_survive_parsing() {
        for x in [std::f64::consts::PI, -1e-300, 6.02214076e23, 0.1 + 0.2] {
            let s = fmt_num(x);
            assert_eq!(s.parse::<f64>().unwrap(), round_sig(x));
            assert!((s.parse::<f64>().unwrap() - x).abs() <= 1e-14 * x.abs());
        }
    }

    #[test]
    fn csv_and_json_layout() {
        let mut r = Report::new("demo", &["a", "b", "c"]);
        r.meta("s", 3u32).meta("alpha", 0.5);
        r.row(vec![
            1usize.into(),
            0.25.into(),
            Cell::Terms(vec![("c0".into(), 1.0), ("c2".into(), -0.5)]),
        ]);
        r.row(vec![
            2usize.into(),
            Cell::Missing,
            Cell::List(vec![1.0, 2.0]),
        ]);
        assert_eq!(
            r.to_csv(),
            "# command: demo\n# s: 3\n# alpha: 0.5\na,b,c\n1,0.25,c0=1;c2=-0.5\n2,,1;2\n"
        );
        let json = r.to_json();
        let parsed: Value = serde_json::from_str(&json).unwrap();
        assert_eq!(render_json(&parsed), json);
        assert_eq!(parsed["rows"][0]["c"]["c2"], -0.5);
    }
}
