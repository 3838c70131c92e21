//! Corpus-level document frequency table backing every idf computation.

use std::collections::{HashMap, HashSet};
use std::io::{BufReader, BufWriter};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::candidates::span_candidates;
use crate::error::{Error, Result};
use crate::text::ProcessedDocument;

const FORMAT: &str = "kpx-df";
const VERSION: u32 = 1;

/// Document counts per stem-sequence key. `n_t` counts documents containing
/// the term at least once, never occurrences. Immutable once built.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DocumentFrequencyTable {
    format: String,
    version: u32,
    n_docs: usize,
    df: HashMap<String, usize>,
}

/// Accumulates documents into a [`DocumentFrequencyTable`].
pub struct DfBuilder {
    max_ngram: usize,
    n_docs: usize,
    df: HashMap<String, usize>,
}

impl DfBuilder {
    /// `max_ngram` bounds the indexed span length. Spans follow the n-gram
    /// candidate rule: within one sentence, crossing no punctuation, not
    /// starting or ending with a stopword.
    pub fn new(max_ngram: usize) -> DfBuilder {
        DfBuilder {
            max_ngram,
            n_docs: 0,
            df: HashMap::new(),
        }
    }

    pub fn add_document(&mut self, doc: &ProcessedDocument) {
        self.n_docs += 1;
        let keys: HashSet<String> = span_candidates(doc, self.max_ngram, true)
            .into_iter()
            .map(|c| c.stem_key())
            .collect();
        for key in keys {
            *self.df.entry(key).or_insert(0) += 1;
        }
    }

    pub fn finish(self) -> Result<DocumentFrequencyTable> {
        if self.n_docs == 0 {
            return Err(Error::EmptyCorpus);
        }
        Ok(DocumentFrequencyTable {
            format: FORMAT.to_string(),
            version: VERSION,
            n_docs: self.n_docs,
            df: self.df,
        })
    }
}

impl DocumentFrequencyTable {
    /// Builds a table over processed documents with the default 5-gram bound.
    pub fn build<'a>(docs: impl IntoIterator<Item = &'a ProcessedDocument>) -> Result<Self> {
        let mut builder = DfBuilder::new(5);
        for doc in docs {
            builder.add_document(doc);
        }
        builder.finish()
    }

    pub fn n_docs(&self) -> usize {
        self.n_docs
    }

    pub fn term_count(&self) -> usize {
        self.df.len()
    }

    /// Document count for a stem key. Unseen terms fall back to 1 so that
    /// idf stays finite and maximal for corpus-unseen phrases.
    pub fn n_t(&self, stem_key: &str) -> usize {
        self.df.get(stem_key).copied().unwrap_or(1)
    }

    pub fn contains(&self, stem_key: &str) -> bool {
        self.df.contains_key(stem_key)
    }

    /// `ln(1 + N / n_t)`, the TFIDF idf.
    pub fn idf_ln(&self, stem_key: &str) -> f64 {
        (1.0 + self.n_docs as f64 / self.n_t(stem_key) as f64).ln()
    }

    /// `log2(N / n_t)`, the KP-Miner idf.
    pub fn idf_log2(&self, stem_key: &str) -> f64 {
        (self.n_docs as f64 / self.n_t(stem_key) as f64).log2()
    }

    /// Terms sorted by descending document count, then key.
    pub fn top_terms(&self, limit: usize) -> Vec<(&str, usize)> {
        let mut terms: Vec<(&str, usize)> =
            self.df.iter().map(|(k, &v)| (k.as_str(), v)).collect();
        terms.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(b.0)));
        terms.truncate(limit);
        terms
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let file = std::fs::File::create(path).map_err(|source| Error::Io {
            path: path.to_owned(),
            source,
        })?;
        serde_json::to_writer(BufWriter::new(file), self)?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self> {
        let file = std::fs::File::open(path).map_err(|source| Error::Io {
            path: path.to_owned(),
            source,
        })?;
        let table: DocumentFrequencyTable = serde_json::from_reader(BufReader::new(file))?;
        if table.format != FORMAT || table.version != VERSION {
            return Err(Error::ModelFormat {
                expected: format!("{FORMAT} v{VERSION}"),
                found: format!("{} v{}", table.format, table.version),
            });
        }
        for (key, &n_t) in &table.df {
            if n_t == 0 || n_t > table.n_docs {
                return Err(Error::ModelFormat {
                    expected: format!("1 <= n_t <= {}", table.n_docs),
                    found: format!("n_t({key}) = {n_t}"),
                });
            }
        }
        Ok(table)
    }
}
