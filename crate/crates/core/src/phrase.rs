//! Scored keyphrase output shared by every extractor.

use std::cmp::Ordering;

use serde::Serialize;

/// One ranked keyphrase.
#[derive(Debug, Clone, Serialize)]
pub struct ScoredPhrase {
    /// Surface form from the phrase's first occurrence.
    pub surface: String,
    /// Stem sequence, the phrase's identity for matching and dedup.
    pub stems: Vec<String>,
    pub score: f64,
    /// Document-wide token position of the first occurrence.
    pub first_position: usize,
}

impl ScoredPhrase {
    pub fn stem_key(&self) -> String {
        self.stems.join(" ")
    }
}

/// Deterministic tie order shared by every ranking: earlier first occurrence,
/// then shorter phrase, then lexicographic stems.
fn tie_order(a: &ScoredPhrase, b: &ScoredPhrase) -> Ordering {
    a.first_position
        .cmp(&b.first_position)
        .then(a.stems.len().cmp(&b.stems.len()))
        .then_with(|| a.stems.cmp(&b.stems))
}

/// Sorts in place, higher scores first.
pub fn rank_descending(phrases: &mut [ScoredPhrase]) {
    phrases.sort_by(|a, b| b.score.total_cmp(&a.score).then_with(|| tie_order(a, b)));
}

/// Sorts in place, lower scores first.
pub fn rank_ascending(phrases: &mut [ScoredPhrase]) {
    phrases.sort_by(|a, b| a.score.total_cmp(&b.score).then_with(|| tie_order(a, b)));
}

#[cfg(test)]
mod tests {
    use super::*;

    fn phrase(stems: &[&str], score: f64, pos: usize) -> ScoredPhrase {
        ScoredPhrase {
            surface: stems.join(" "),
            stems: stems.iter().map(|s| s.to_string()).collect(),
            score,
            first_position: pos,
        }
    }

    #[test]
    fn ties_break_on_position_then_length_then_stems() {
        let mut phrases = vec![
            phrase(&["b"], 1.0, 5),
            phrase(&["a", "b"], 1.0, 2),
            phrase(&["a"], 1.0, 2),
            phrase(&["c"], 2.0, 9),
        ];
        rank_descending(&mut phrases);
        let keys: Vec<String> = phrases.iter().map(|p| p.stem_key()).collect();
        assert_eq!(keys, vec!["c", "a", "a b", "b"]);
    }

    #[test]
    fn ascending_is_reverse_of_descending_on_distinct_scores() {
        let mut up = vec![phrase(&["a"], 0.3, 0), phrase(&["b"], 0.1, 1)];
        rank_ascending(&mut up);
        assert_eq!(up[0].stem_key(), "b");
    }
}
