//! SingleRank: a word co-occurrence graph over nouns and adjectives, scored
//! with TextRank; candidate phrases score as the sum of their word scores.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::candidates::pos_sequence_candidates;
use crate::graph::textrank::{textrank_scores, RankGraph, DEFAULT_MAX_ITER, DEFAULT_TOL};
use crate::phrase::{rank_descending, ScoredPhrase};
use crate::text::{PosTag, ProcessedDocument};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SingleRankConfig {
    /// Two words co-occur when their token positions differ by less than
    /// this window.
    pub window: usize,
    pub lambda: f64,
}

impl Default for SingleRankConfig {
    fn default() -> Self {
        SingleRankConfig {
            window: 10,
            lambda: 0.85,
        }
    }
}

/// Builds the word graph: nodes are stems of non-stopword noun/adjective
/// tokens, symmetric edges count co-occurrences within the window.
pub fn build_word_graph(
    doc: &ProcessedDocument,
    window: usize,
) -> (RankGraph, Vec<String>, HashMap<String, usize>) {
    let mut labels: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut words: Vec<(usize, usize)> = Vec::new(); // (node, token position)

    for (position, token) in doc.tokens().enumerate() {
        if token.is_stopword || !matches!(token.pos, PosTag::Noun | PosTag::Adj) {
            continue;
        }
        let node = *index.entry(token.stem.clone()).or_insert_with(|| {
            labels.push(token.stem.clone());
            labels.len() - 1
        });
        words.push((node, position));
    }

    let mut graph = RankGraph::new(labels.len());
    for (i, &(node_a, pos_a)) in words.iter().enumerate() {
        for &(node_b, pos_b) in words[i + 1..].iter() {
            if pos_b - pos_a >= window {
                break;
            }
            graph.add_symmetric_edge(node_a, node_b, 1.0);
        }
    }
    (graph, labels, index)
}

pub fn singlerank_extract(
    doc: &ProcessedDocument,
    config: &SingleRankConfig,
    k: usize,
) -> Vec<ScoredPhrase> {
    let (graph, _, index) = build_word_graph(doc, config.window);
    let ranks = textrank_scores(&graph, config.lambda, DEFAULT_TOL, DEFAULT_MAX_ITER);

    let mut phrases: Vec<ScoredPhrase> = pos_sequence_candidates(doc)
        .into_iter()
        .map(|c| {
            let score = c
                .stems
                .iter()
                .map(|stem| index.get(stem).map_or(0.0, |&node| ranks.scores[node]))
                .sum();
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
