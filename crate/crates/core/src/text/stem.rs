//! Light suffix-stripping stemmer.
//!
//! Only stem equality matters to the extractors (candidate merging, Jaccard
//! similarity, evaluation matching), so the stemmer is a fixed ordered list
//! of plural, comparative, and enclitic suffixes, stripped to a fixed point.

use std::path::Path;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::text::ZWNJ;

const BUILTIN_SUFFIXES: &str = include_str!("../../data/suffixes.txt");

/// A suffix is stripped only when at least this many codepoints remain.
const MIN_STEM_CHARS: usize = 2;

#[derive(Debug, Clone)]
pub struct Stemmer {
    suffixes: Vec<String>,
}

impl Stemmer {
    pub fn builtin() -> &'static Stemmer {
        static INSTANCE: OnceLock<Stemmer> = OnceLock::new();
        INSTANCE.get_or_init(|| Stemmer::parse(BUILTIN_SUFFIXES))
    }

    /// One suffix per line, `#` starts a comment. Tried in file order.
    pub fn parse(table: &str) -> Stemmer {
        let suffixes = table
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty())
            .map(str::to_string)
            .collect();
        Stemmer { suffixes }
    }

    pub fn load(path: &Path) -> Result<Stemmer> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_owned(),
            source,
        })?;
        Ok(Stemmer::parse(&text))
    }

    pub fn suffixes(&self) -> &[String] {
        &self.suffixes
    }

    /// Stems a single token. Deterministic, idempotent, never empty.
    pub fn stem(&self, surface: &str) -> String {
        let mut current: String = surface.to_lowercase();
        loop {
            let mut changed = false;

            // A stripped suffix can leave its joining ZWNJ behind.
            let trimmed = current.trim_end_matches(ZWNJ);
            if trimmed.len() != current.len() && !trimmed.is_empty() {
                current.truncate(trimmed.len());
                changed = true;
            }

            let char_count = current.chars().count();
            for suffix in &self.suffixes {
                let suffix_chars = suffix.chars().count();
                if char_count >= suffix_chars + MIN_STEM_CHARS {
                    if let Some(rest) = current.strip_suffix(suffix.as_str()) {
                        current.truncate(rest.len());
                        changed = true;
                        break;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        if current.is_empty() {
            surface.to_lowercase()
        } else {
            current
        }
    }
}

/// Stems with the bundled suffix list.
pub fn stem(surface: &str) -> String {
    Stemmer::builtin().stem(surface)
}
