//! Character normalization driven by a checked-in codepoint table.

use std::collections::HashMap;
use std::path::Path;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::text::ZWNJ;

const BUILTIN_MAP: &str = include_str!("../../data/norm_map.txt");

/// Maps Arabic letter variants to canonical Persian forms, Arabic-Indic and
/// Extended Arabic-Indic digits to ASCII, and removes kashida and diacritics.
/// Whitespace runs collapse to a single separator and ZWNJ survives only
/// between word characters.
#[derive(Debug, Clone)]
pub struct Normalizer {
    map: HashMap<char, Option<char>>,
}

impl Normalizer {
    /// The bundled normalization table.
    pub fn builtin() -> &'static Normalizer {
        static INSTANCE: OnceLock<Normalizer> = OnceLock::new();
        INSTANCE.get_or_init(|| {
            Normalizer::parse(BUILTIN_MAP).expect("bundled normalization table is well-formed")
        })
    }

    /// Parses a table: one entry per line, `SOURCE TARGET` hex codepoints,
    /// or a lone `SOURCE` for removal. `#` starts a comment.
    pub fn parse(table: &str) -> std::result::Result<Normalizer, String> {
        let mut map = HashMap::new();
        for (lineno, line) in table.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut fields = line.split_whitespace();
            let source = parse_codepoint(fields.next().unwrap())
                .map_err(|e| format!("line {}: {e}", lineno + 1))?;
            let target = match fields.next() {
                Some(f) => {
                    Some(parse_codepoint(f).map_err(|e| format!("line {}: {e}", lineno + 1))?)
                }
                None => None,
            };
            if fields.next().is_some() {
                return Err(format!("line {}: expected at most two fields", lineno + 1));
            }
            map.insert(source, target);
        }
        Ok(Normalizer { map })
    }

    pub fn load(path: &Path) -> Result<Normalizer> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_owned(),
            source,
        })?;
        Normalizer::parse(&text).map_err(|reason| Error::Resource {
            path: path.to_owned(),
            reason,
        })
    }

    /// Normalizes text. Total and idempotent.
    pub fn normalize(&self, raw: &str) -> String {
        // Codepoint mapping / removal.
        let mapped: Vec<char> = raw
            .chars()
            .filter_map(|c| match self.map.get(&c) {
                Some(&Some(target)) => Some(target),
                Some(&None) => None,
                None => Some(c),
            })
            .collect();

        // ZWNJ survives only between word characters; runs collapse to one.
        let mut joined: Vec<char> = Vec::with_capacity(mapped.len());
        for (idx, &c) in mapped.iter().enumerate() {
            if c == ZWNJ {
                let prev_is_word = joined.last().is_some_and(|p| p.is_alphanumeric());
                let next_is_word = mapped[idx + 1..]
                    .iter()
                    .find(|&&n| n != ZWNJ)
                    .is_some_and(|n| n.is_alphanumeric());
                if prev_is_word && next_is_word {
                    joined.push(ZWNJ);
                }
            } else {
                joined.push(c);
            }
        }

        // Whitespace runs collapse to one separator: '\n' when the run
        // contained a line break (sentence splitting keys on it), else ' '.
        // Leading and trailing whitespace is dropped.
        let mut out = String::with_capacity(joined.len());
        let mut i = 0;
        while i < joined.len() {
            if joined[i].is_whitespace() {
                let mut has_newline = false;
                while i < joined.len() && joined[i].is_whitespace() {
                    if matches!(joined[i], '\n' | '\r') {
                        has_newline = true;
                    }
                    i += 1;
                }
                if !out.is_empty() && i < joined.len() {
                    out.push(if has_newline { '\n' } else { ' ' });
                }
            } else {
                out.push(joined[i]);
                i += 1;
            }
        }
        out
    }
}

/// Normalizes with the bundled table.
pub fn normalize_text(raw: &str) -> String {
    Normalizer::builtin().normalize(raw)
}

fn parse_codepoint(field: &str) -> std::result::Result<char, String> {
    let hex = field.trim_start_matches("U+");
    let value =
        u32::from_str_radix(hex, 16).map_err(|_| format!("`{field}` is not a hex codepoint"))?;
    char::from_u32(value).ok_or_else(|| format!("U+{value:04X} is not a valid codepoint"))
}
