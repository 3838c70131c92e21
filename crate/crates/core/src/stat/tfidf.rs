//! TFIDF n-gram scoring: `tf * ln(1 + N / n_t)`.

use crate::candidates::ngram_candidates;
use crate::df::DocumentFrequencyTable;
use crate::phrase::{rank_descending, ScoredPhrase};
use crate::text::ProcessedDocument;

pub const DEFAULT_MAX_NGRAM: usize = 3;

/// Ranks n-gram candidates by `tf * ln(1 + N / n_t)`.
pub fn tfidf_extract(
    doc: &ProcessedDocument,
    df: &DocumentFrequencyTable,
    k: usize,
) -> Vec<ScoredPhrase> {
    tfidf_extract_with(doc, df, k, DEFAULT_MAX_NGRAM)
}

pub fn tfidf_extract_with(
    doc: &ProcessedDocument,
    df: &DocumentFrequencyTable,
    k: usize,
    max_ngram: usize,
) -> Vec<ScoredPhrase> {
    let mut phrases: Vec<ScoredPhrase> = ngram_candidates(doc, max_ngram)
        .into_iter()
        .map(|c| {
            let score = c.frequency() as f64 * df.idf_ln(&c.stem_key());
            ScoredPhrase {
                surface: c.surface(),
                first_position: c.first_position(),
                stems: c.stems,
                score,
            }
        })
        .collect();
    rank_descending(&mut phrases);
    phrases.truncate(k);
    phrases
}
