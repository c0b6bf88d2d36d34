//! Line-oriented `key = value` reports.
//!
//! Machine mode prints only the key/value lines, in insertion order; human
//! mode adds `# section` headers and blank separators. Keys are fully
//! qualified so machine output can be diffed or grepped without context.

use std::fmt::Display;

use crate::algebra::Poly;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Line {
    Section(String),
    Field(String, String),
    Note(String),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    lines: Vec<Line>,
}

/// Process exit status of a command.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    /// All checks passed.
    Ok,
    /// Usage or input error.
    Usage,
    /// A criterion disagreed with its oracle.
    Mismatch,
}

impl Status {
    pub fn code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Usage => 1,
            Status::Mismatch => 2,
        }
    }
}

/// A rendered report with the status it should exit with.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub report: Report,
    pub status: Status,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn section(&mut self, name: impl Into<String>) -> &mut Self {
        self.lines.push(Line::Section(name.into()));
        self
    }

    pub fn field(&mut self, key: impl Into<String>, value: impl Display) -> &mut Self {
        self.lines.push(Line::Field(key.into(), value.to_string()));
        self
    }

    /// Human-only commentary (dropped in machine mode).
    pub fn note(&mut self, text: impl Into<String>) -> &mut Self {
        self.lines.push(Line::Note(text.into()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.lines.iter().find_map(|l| match l {
            Line::Field(k, v) if k == key => Some(v.as_str()),
            _ => None,
        })
    }

    pub fn fields(&self) -> impl Iterator<Item = (&str, &str)> {
        self.lines.iter().filter_map(|l| match l {
            Line::Field(k, v) => Some((k.as_str(), v.as_str())),
            _ => None,
        })
    }

    pub fn extend(&mut self, other: Report) {
        self.lines.extend(other.lines);
    }

    pub fn render(&self, machine: bool) -> String {
        let mut out = String::new();
        for line in &self.lines {
            match line {
                Line::Field(k, v) => {
                    out.push_str(k);
                    out.push_str(" = ");
                    out.push_str(v);
                    out.push('\n');
                }
                Line::Section(s) if !machine => {
                    if !out.is_empty() {
                        out.push('\n');
                    }
                    out.push_str("# ");
                    out.push_str(s);
                    out.push('\n');
                }
                Line::Note(n) if !machine => {
                    out.push_str("# ");
                    out.push_str(n);
                    out.push('\n');
                }
                _ => {}
            }
        }
        out
    }
}

/// `[a, b, c]`
pub fn list<T: Display>(items: impl IntoIterator<Item = T>) -> String {
    let parts: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

/// Coefficient-code form used in reports: `[c0, c1, ...]`, ascending.
pub fn coeffs(p: &Poly) -> String {
    list(p.codes())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn machine_mode_drops_headers() {
        let mut r = Report::new();
        r.section("shape").field("shape.q", 2).note("hello").field("shape.n", 5);
        assert_eq!(r.render(true), "shape.q = 2\nshape.n = 5\n");
        assert_eq!(r.render(false), "# shape\nshape.q = 2\n# hello\nshape.n = 5\n");
        assert_eq!(r.get("shape.n"), Some("5"));
        assert_eq!(list([1, 2]), "[1, 2]");
    }
}
