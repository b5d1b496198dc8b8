//! Text formats.
//!
//! Presentation file:
//!
//! ```text
//! # comment
//! k = 2
//! alphabet 1: a b
//! alphabet 2: α β
//! square: a α -> β b
//! commute: *
//! ```
//!
//! `square: u v -> v' u'` declares `uv = v'u'`; the reverse square is filled
//! in automatically. `commute: *` gives every still unspecified cross-color
//! pair the commuting square. Every alphabet line must appear exactly once,
//! possibly empty.
//!
//! Word lists (code files) hold one element per line as space separated
//! letters; `ε` denotes the identity.

use crate::error::{Error, Result};
use crate::presentation::{Presentation, PresentationBuilder};

fn syntax(line: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        message: message.into(),
    }
}

/// Strips comments and blank lines, yielding `(1-based line number, text)`.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut k: Option<usize> = None;
    let mut alphabets: Vec<Option<Vec<String>>> = Vec::new();
    let mut squares = Vec::new();
    let mut commute = false;

    for (n, line) in content_lines(text) {
        if let Some(rest) = line.strip_prefix("k") {
            let rest = rest.trim_start();
            if let Some(value) = rest.strip_prefix('=') {
                if k.is_some() {
                    return Err(syntax(n, "duplicate `k =` header"));
                }
                let value: usize = value
                    .trim()
                    .parse()
                    .map_err(|_| syntax(n, format!("bad value for k: `{}`", value.trim())))?;
                k = Some(value);
                alphabets = vec![None; value];
                continue;
            }
        }
        let Some(k) = k else {
            return Err(syntax(n, "expected `k = <int>` header first"));
        };
        let (keyword, body) = line
            .split_once(':')
            .ok_or_else(|| syntax(n, format!("unrecognised line `{line}`")))?;
        let keyword = keyword.trim();
        if let Some(index) = keyword.strip_prefix("alphabet") {
            let index: usize = index
                .trim()
                .parse()
                .map_err(|_| syntax(n, format!("bad alphabet index `{}`", index.trim())))?;
            if index == 0 || index > k {
                return Err(syntax(n, format!("alphabet {index} out of range 1..={k}")));
            }
            if alphabets[index - 1].is_some() {
                return Err(syntax(n, format!("alphabet {index} declared twice")));
            }
            alphabets[index - 1] = Some(body.split_whitespace().map(str::to_string).collect());
        } else if keyword == "square" {
            let (lhs, rhs) = body
                .split_once("->")
                .ok_or_else(|| syntax(n, "square needs `u v -> v' u'`"))?;
            let lhs: Vec<&str> = lhs.split_whitespace().collect();
            let rhs: Vec<&str> = rhs.split_whitespace().collect();
            if lhs.len() != 2 || rhs.len() != 2 {
                return Err(syntax(n, "square needs exactly two letters on each side"));
            }
            squares.push((
                lhs[0].to_string(),
                lhs[1].to_string(),
                rhs[0].to_string(),
                rhs[1].to_string(),
            ));
        } else if keyword == "commute" {
            if body.trim() != "*" {
                return Err(syntax(n, "only `commute: *` is supported"));
            }
            commute = true;
        } else {
            return Err(syntax(n, format!("unknown keyword `{keyword}`")));
        }
    }

    let Some(k) = k else {
        return Err(syntax(0, "missing `k = <int>` header"));
    };
    let alphabets = alphabets
        .into_iter()
        .enumerate()
        .map(|(i, a)| a.ok_or_else(|| syntax(0, format!("alphabet {} of {k} missing", i + 1))))
        .collect::<Result<Vec<_>>>()?;

    let mut builder = PresentationBuilder::new(alphabets).squares(squares);
    if commute {
        builder = builder.commute_rest();
    }
    let p = builder.build()?;
    let missing = p.missing_squares();
    if missing > 0 {
        return Err(Error::IncompleteSquares(missing));
    }
    Ok(p)
}

/// Canonical rendering. For a complete, mutually inverse square map only
/// the non-commuting squares with `color(u) < color(v)` are written, followed
/// by `commute: *`. Anything else is written out entry by entry.
pub fn render_presentation(p: &Presentation) -> String {
    let mut out = format!("k = {}\n", p.k());
    for (i, names) in p.alphabet_names().iter().enumerate() {
        if names.is_empty() {
            out.push_str(&format!("alphabet {}:\n", i + 1));
        } else {
            out.push_str(&format!("alphabet {}: {}\n", i + 1, names.join(" ")));
        }
    }
    let involutive = p.validate_squares().passed();
    let mut any_commuting = false;
    for ((u, v), (v2, u2)) in p.squares().entries() {
        if involutive {
            if p.color(u) > p.color(v) {
                continue;
            }
            if v2 == v && u2 == u {
                any_commuting = true;
                continue;
            }
        }
        out.push_str(&format!(
            "square: {} {} -> {} {}\n",
            p.name(u),
            p.name(v),
            p.name(v2),
            p.name(u2)
        ));
    }
    if any_commuting {
        out.push_str("commute: *\n");
    }
    out
}

/// Splits a whitespace separated word into letter names; `ε` is dropped.
pub fn word_tokens(line: &str) -> Vec<&str> {
    line.split_whitespace().filter(|t| *t != "ε").collect()
}

/// One word per non-blank line.
pub fn parse_word_list(text: &str) -> Vec<(usize, Vec<&str>)> {
    content_lines(text)
        .map(|(n, line)| (n, word_tokens(line)))
        .collect()
}
