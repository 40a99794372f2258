//! Plain-text drawing files.
//!
//! ```text
//! # optional comment lines
//! 3
//! 0 0
//! 4 0
//! 2 3
//! ```

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::geometry::{Drawing, Point};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DrawingFile {
    /// Header comments without the leading `#`.
    pub comments: Vec<String>,
    pub drawing: Drawing,
}

impl DrawingFile {
    pub fn new(drawing: Drawing) -> Self {
        DrawingFile { comments: Vec::new(), drawing }
    }

    pub fn with_comment(mut self, c: impl Into<String>) -> Self {
        self.comments.push(c.into());
        self
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.comments {
            let _ = writeln!(out, "#{c}");
        }
        out.push_str(&write_drawing(&self.drawing));
        out
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

/// Parses a drawing file from raw bytes.
pub fn parse_bytes(bytes: &[u8]) -> Result<DrawingFile> {
    let text = std::str::from_utf8(bytes).map_err(|e| {
        let line = 1 + bytes[..e.valid_up_to()].iter().filter(|&&b| b == b'\n').count();
        parse_err(line, "invalid UTF-8")
    })?;
    parse_file(text)
}

pub fn parse_file(text: &str) -> Result<DrawingFile> {
    let body = text.strip_suffix('\n').unwrap_or(text);
    if body.is_empty() {
        return Err(parse_err(1, "empty input, expected a vertex count"));
    }
    let mut lines = body.split('\n').enumerate().map(|(i, l)| (i + 1, l)).peekable();

    let mut comments = Vec::new();
    while let Some((_, l)) = lines.peek() {
        match l.strip_prefix('#') {
            Some(c) => {
                comments.push(c.to_string());
                lines.next();
            }
            None => break,
        }
    }

    let (count_line, raw) = lines.next().ok_or_else(|| parse_err(comments.len() + 1, "missing vertex count"))?;
    let n: usize = parse_decimal(raw).ok_or_else(|| parse_err(count_line, format!("bad vertex count `{raw}`")))?;

    let mut points = Vec::with_capacity(n);
    for k in 0..n {
        let (line, raw) =
            lines.next().ok_or_else(|| parse_err(count_line + k + 1, format!("expected {n} coordinate lines, found {k}")))?;
        let (x, y) = raw
            .split_once(' ')
            .and_then(|(x, y)| Some((parse_decimal(x)?, parse_decimal(y)?)))
            .ok_or_else(|| parse_err(line, format!("expected `x y`, found `{raw}`")))?;
        points.push(Point::new(x, y));
    }
    if let Some((line, _)) = lines.next() {
        return Err(parse_err(line, format!("unexpected line after {n} coordinates")));
    }

    let drawing = Drawing::new(points)?;
    Ok(DrawingFile { comments, drawing })
}

/// Parses only the drawing, discarding comments.
pub fn parse_drawing(text: &str) -> Result<Drawing> {
    parse_file(text).map(|f| f.drawing)
}

/// Canonical text: count line then one `x y` line per vertex.
pub fn write_drawing(d: &Drawing) -> String {
    let mut out = format!("{}\n", d.n());
    for p in d.points() {
        let _ = writeln!(out, "{} {}", p.x, p.y);
    }
    out
}

/// Strict decimal: optional `-`, then ASCII digits only.
fn parse_decimal<T: std::str::FromStr>(s: &str) -> Option<T> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let d = parse_drawing("3\n0 0\n4 0\n2 3\n").unwrap();
        assert_eq!(d.n(), 3);
        assert_eq!(d.point(2), Point::new(2, 3));
    }

    #[test]
    fn collinear_triple_is_named() {
        let err = parse_drawing("4\n0 0\n1 1\n5 0\n2 2\n").unwrap_err();
        assert_eq!(err, Error::GeneralPositionViolation([0, 1, 3]));
    }

    #[test]
    fn comments_and_round_trip() {
        let text = "# nested\n#second\n3\n0 0\n4 0\n2 3\n";
        let f = parse_file(text).unwrap();
        assert_eq!(f.comments, vec![" nested".to_string(), "second".to_string()]);
        assert_eq!(f.to_text(), text);
        assert_eq!(parse_file("3\n0 0\n4 0\n2 3").unwrap().to_text(), "3\n0 0\n4 0\n2 3\n");
    }

    #[test]
    fn located_errors() {
        let line = |s: &str| match parse_file(s) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected parse error, got {other:?}"),
        };
        assert_eq!(line(""), 1);
        assert_eq!(line("# c\nthree\n"), 2);
        assert_eq!(line("3\n0 0\n4  0\n2 3\n"), 3);
        assert_eq!(line("3\n0 0\n4 0\n"), 4);
        assert_eq!(line("3\n0 0\n4 0\n2 3\n\n"), 5);
        assert_eq!(line("3\n0 0\n4 0.5\n2 3\n"), 3);
        assert_eq!(line("3\n0 0\n+4 0\n2 3\n"), 3);
        assert_eq!(line("3\n0 0\n4 0\r\n2 3\n"), 3);
        assert!(matches!(parse_bytes(b"3\n0 0\n\xff 0\n2 3\n"), Err(Error::Parse { line: 3, .. })));
    }

    #[test]
    fn rejects_duplicates_and_range() {
        assert_eq!(parse_drawing("3\n0 0\n0 0\n2 3\n").unwrap_err(), Error::DuplicatePoint(0, 1));
        assert!(matches!(
            parse_drawing("3\n0 0\n2000000 0\n2 3\n"),
            Err(Error::CoordinateOutOfRange { index: 1, .. })
        ));
    }
}
