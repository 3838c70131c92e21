//! Corpus cleaning filters with an audit trail.

use serde::{Deserialize, Serialize};

use crate::corpus::NewsRecord;
use crate::text::Pipeline;

/// Cleaning thresholds. Defaults follow the dataset construction rules:
/// body length in [40, 500] tokens, at least 2 keyphrases, every keyphrase
/// at least 3 characters and at most 7 tokens.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FilterConfig {
    pub min_body_tokens: usize,
    pub max_body_tokens: usize,
    pub min_keyphrases: usize,
    pub min_keyphrase_chars: usize,
    pub max_keyphrase_tokens: usize,
}

impl Default for FilterConfig {
    fn default() -> Self {
        FilterConfig {
            min_body_tokens: 40,
            max_body_tokens: 500,
            min_keyphrases: 2,
            min_keyphrase_chars: 3,
            max_keyphrase_tokens: 7,
        }
    }
}

/// The first rule a rejected record violated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FilterRule {
    BodyTokens,
    MinKeyphrases,
    KeyphraseChars,
    KeyphraseTokens,
}

impl FilterRule {
    pub fn as_str(self) -> &'static str {
        match self {
            FilterRule::BodyTokens => "body_tokens",
            FilterRule::MinKeyphrases => "min_keyphrases",
            FilterRule::KeyphraseChars => "keyphrase_chars",
            FilterRule::KeyphraseTokens => "keyphrase_tokens",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RejectedRecord {
    pub url: String,
    pub rule: FilterRule,
    pub detail: String,
}

/// Character count of a keyphrase after normalization.
pub fn keyphrase_char_count(pipeline: &Pipeline, phrase: &str) -> usize {
    pipeline.normalize(phrase).chars().count()
}

/// Token count of a keyphrase after normalization.
pub fn keyphrase_token_count(pipeline: &Pipeline, phrase: &str) -> usize {
    pipeline.count_tokens(phrase)
}

/// Checks one record against the rules in order; returns the first violation.
pub fn check_record(
    pipeline: &Pipeline,
    record: &NewsRecord,
    config: &FilterConfig,
) -> Option<(FilterRule, String)> {
    let body_tokens = pipeline.count_tokens(&record.body);
    if body_tokens < config.min_body_tokens || body_tokens > config.max_body_tokens {
        return Some((
            FilterRule::BodyTokens,
            format!(
                "body has {body_tokens} tokens, outside [{}, {}]",
                config.min_body_tokens, config.max_body_tokens
            ),
        ));
    }
    if record.keyphrases.len() < config.min_keyphrases {
        return Some((
            FilterRule::MinKeyphrases,
            format!(
                "{} keyphrases, need at least {}",
                record.keyphrases.len(),
                config.min_keyphrases
            ),
        ));
    }
    // A single offending keyphrase removes the whole record.
    for phrase in &record.keyphrases {
        let chars = keyphrase_char_count(pipeline, phrase);
        if chars < config.min_keyphrase_chars {
            return Some((
                FilterRule::KeyphraseChars,
                format!(
                    "keyphrase `{phrase}` has {chars} characters, need at least {}",
                    config.min_keyphrase_chars
                ),
            ));
        }
    }
    for phrase in &record.keyphrases {
        let tokens = keyphrase_token_count(pipeline, phrase);
        if tokens > config.max_keyphrase_tokens {
            return Some((
                FilterRule::KeyphraseTokens,
                format!(
                    "keyphrase `{phrase}` has {tokens} tokens, at most {} allowed",
                    config.max_keyphrase_tokens
                ),
            ));
        }
    }
    None
}

/// Applies the cleaning rules to every record. Boundary values (exactly
/// `min_body_tokens` or `max_body_tokens` tokens) are kept.
pub fn apply_filters(
    pipeline: &Pipeline,
    records: Vec<NewsRecord>,
    config: &FilterConfig,
) -> (Vec<NewsRecord>, Vec<RejectedRecord>) {
    let mut kept = Vec::with_capacity(records.len());
    let mut rejected = Vec::new();
    for record in records {
        match check_record(pipeline, &record, config) {
            None => kept.push(record),
            Some((rule, detail)) => rejected.push(RejectedRecord {
                url: record.url,
                rule,
                detail,
            }),
        }
    }
    (kept, rejected)
}
