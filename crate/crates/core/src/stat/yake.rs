//! YAKE: statistical single-document extraction from five per-term features,
//! combined per phrase and deduplicated with Levenshtein similarity.
//! Lower scores are better.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::candidates::span_candidates;
use crate::phrase::{rank_ascending, ScoredPhrase};
use crate::text::ProcessedDocument;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct YakeConfig {
    /// Longest candidate phrase in tokens.
    pub ngram_max: usize,
    /// Co-occurrence window, in tokens on each side within a sentence.
    pub window: usize,
    /// Candidates at or above this Levenshtein similarity deduplicate.
    pub dedup_threshold: f64,
}

impl Default for YakeConfig {
    fn default() -> Self {
        YakeConfig {
            ngram_max: 3,
            window: 1,
            dedup_threshold: 0.8,
        }
    }
}

/// The five per-term features and their combined score.
#[derive(Debug, Clone)]
pub struct YakeTermFeatures {
    pub tf: f64,
    /// All-digit or Latin-uppercase occurrence rate; constant 1 for pure
    /// Persian tokens, where script casing does not exist.
    pub casing: f64,
    /// Grows with the median sentence index: later terms score worse.
    pub position: f64,
    /// Frequency normalized by the mean and deviation of term frequencies.
    pub frequency: f64,
    /// Context diversity: the more distinct neighbors, the less informative.
    pub relatedness: f64,
    /// Share of distinct sentences containing the term.
    pub dif_sentence: f64,
    /// Combined importance; lower is better.
    pub score: f64,
}

struct TermOccurrences {
    sentence_indices: Vec<usize>,
    upper_or_digit: usize,
    left_context: Vec<String>,
    right_context: Vec<String>,
}

/// Per-term feature extraction over non-punctuation, non-stopword terms,
/// keyed by stem.
pub fn yake_term_features(
    doc: &ProcessedDocument,
    config: &YakeConfig,
) -> HashMap<String, YakeTermFeatures> {
    let total_sentences = doc.sentence_count().max(1);
    let mut occurrences: HashMap<&str, TermOccurrences> = HashMap::new();
    let mut all_term_tf: HashMap<&str, usize> = HashMap::new();

    for sentence in &doc.sentences {
        let words: Vec<_> = sentence.iter().filter(|t| !t.is_punct()).collect();
        for (i, token) in words.iter().enumerate() {
            *all_term_tf.entry(token.stem.as_str()).or_insert(0) += 1;
            if token.is_stopword {
                continue;
            }
            let entry = occurrences
                .entry(token.stem.as_str())
                .or_insert_with(|| TermOccurrences {
                    sentence_indices: Vec::new(),
                    upper_or_digit: 0,
                    left_context: Vec::new(),
                    right_context: Vec::new(),
                });
            entry.sentence_indices.push(token.sentence_index);
            let surface = token.surface.as_str();
            let all_digits = surface.chars().all(|c| c.is_ascii_digit());
            let latin_upper = surface.chars().next().is_some_and(|c| c.is_ascii_uppercase());
            if all_digits || latin_upper {
                entry.upper_or_digit += 1;
            }
            for neighbor in words[i.saturating_sub(config.window)..i].iter() {
                entry.left_context.push(neighbor.stem.clone());
            }
            for neighbor in words[(i + 1)..words.len().min(i + 1 + config.window)].iter() {
                entry.right_context.push(neighbor.stem.clone());
            }
        }
    }

    let max_tf = all_term_tf.values().copied().max().unwrap_or(1) as f64;
    let tfs: Vec<f64> = occurrences
        .values()
        .map(|o| o.sentence_indices.len() as f64)
        .collect();
    let mean = tfs.iter().sum::<f64>() / tfs.len().max(1) as f64;
    let variance = tfs.iter().map(|t| (t - mean).powi(2)).sum::<f64>() / tfs.len().max(1) as f64;
    let tf_norm = (mean + variance.sqrt()).max(f64::MIN_POSITIVE);

    occurrences
        .into_iter()
        .map(|(stem, occ)| {
            let tf = occ.sentence_indices.len() as f64;
            let casing = 1.0 + occ.upper_or_digit as f64 / (1.0 + tf);

            let mut distinct_sentences: Vec<usize> = occ.sentence_indices.clone();
            distinct_sentences.dedup();
            let position = (3.0 + median(&distinct_sentences)).ln().ln();

            let frequency = tf / tf_norm;

            let ratio = |context: &[String]| {
                if context.is_empty() {
                    0.0
                } else {
                    let distinct: HashSet<&str> = context.iter().map(String::as_str).collect();
                    distinct.len() as f64 / context.len() as f64
                }
            };
            let relatedness =
                1.0 + (ratio(&occ.left_context) + ratio(&occ.right_context)) * (tf / max_tf);

            let dif_sentence = {
                let distinct: HashSet<usize> = occ.sentence_indices.iter().copied().collect();
                distinct.len() as f64 / total_sentences as f64
            };

            let score = (relatedness * position)
                / (casing + frequency / relatedness + dif_sentence / relatedness);

            (
                stem.to_string(),
                YakeTermFeatures {
                    tf,
                    casing,
                    position,
                    frequency,
                    relatedness,
                    dif_sentence,
                    score,
                },
            )
        })
        .collect()
}

fn median(sorted: &[usize]) -> f64 {
    if sorted.is_empty() {
        return 0.0;
    }
    let mid = sorted.len() / 2;
    if sorted.len() % 2 == 1 {
        sorted[mid] as f64
    } else {
        (sorted[mid - 1] + sorted[mid]) as f64 / 2.0
    }
}

/// `S(kw) = prod(S(w)) / (TF(kw) * (1 + sum(S(w))))`.
fn combine_scores(word_scores: &[f64], tf: f64) -> f64 {
    let prod: f64 = word_scores.iter().product();
    let sum: f64 = word_scores.iter().sum();
    prod / (tf * (1.0 + sum))
}

pub(crate) fn levenshtein(a: &str, b: &str) -> usize {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    let mut row: Vec<usize> = (0..=b.len()).collect();
    for (i, &ca) in a.iter().enumerate() {
        let mut previous_diagonal = row[0];
        row[0] = i + 1;
        for (j, &cb) in b.iter().enumerate() {
            let cost = if ca == cb { 0 } else { 1 };
            let value = (previous_diagonal + cost).min(row[j] + 1).min(row[j + 1] + 1);
            previous_diagonal = row[j + 1];
            row[j + 1] = value;
        }
    }
    row[b.len()]
}

/// Similarity in [0, 1]: 1 for identical strings.
pub fn levenshtein_similarity(a: &str, b: &str) -> f64 {
    let longest = a.chars().count().max(b.chars().count());
    if longest == 0 {
        return 1.0;
    }
    1.0 - levenshtein(a, b) as f64 / longest as f64
}

/// Extracts up to `k` keyphrases, ascending score, deduplicated.
pub fn yake_extract(doc: &ProcessedDocument, config: &YakeConfig, k: usize) -> Vec<ScoredPhrase> {
    let features = yake_term_features(doc, config);
    // Stopword-free spans only: every constituent term has a score.
    let candidates = span_candidates(doc, config.ngram_max, false);

    let mut phrases: Vec<ScoredPhrase> = candidates
        .into_iter()
        .filter_map(|c| {
            let word_scores: Option<Vec<f64>> =
                c.stems.iter().map(|s| features.get(s).map(|f| f.score)).collect();
            let word_scores = word_scores?;
            let score = combine_scores(&word_scores, c.frequency() as f64);
            Some(ScoredPhrase {
                surface: c.surface(),
                first_position: c.first_position(),
                stems: c.stems,
                score,
            })
        })
        .collect();
    rank_ascending(&mut phrases);

    let mut kept: Vec<ScoredPhrase> = Vec::new();
    for phrase in phrases {
        if kept.len() == k {
            break;
        }
        let duplicate = kept
            .iter()
            .any(|p| levenshtein_similarity(&p.surface, &phrase.surface) >= config.dedup_threshold);
        if !duplicate {
            kept.push(phrase);
        }
    }
    kept
}
