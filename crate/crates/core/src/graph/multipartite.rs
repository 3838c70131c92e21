//! MultipartiteRank: a directed graph over candidates where edges connect
//! only different topics, weighted by reciprocal occurrence distances, with
//! incoming weights of each topic's first-occurring candidate boosted to
//! encode position before TextRank runs.

use serde::{Deserialize, Serialize};

use crate::candidates::{pos_sequence_candidates, Candidate};
use crate::graph::hac::{cluster_topics, DEFAULT_SIMILARITY_THRESHOLD};
use crate::graph::textrank::{textrank_scores, RankGraph, DEFAULT_MAX_ITER, DEFAULT_TOL};
use crate::phrase::{rank_descending, ScoredPhrase};
use crate::text::ProcessedDocument;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MultipartiteConfig {
    pub similarity_threshold: f64,
    pub lambda: f64,
    /// Strength of the first-occurrence promotion.
    pub alpha_boost: f64,
}

impl Default for MultipartiteConfig {
    fn default() -> Self {
        MultipartiteConfig {
            similarity_threshold: DEFAULT_SIMILARITY_THRESHOLD,
            lambda: 0.85,
            alpha_boost: 1.1,
        }
    }
}

/// Sum over occurrence pairs of `1 / |p_i - p_j|`.
fn candidate_distance_weight(a: &Candidate, b: &Candidate) -> f64 {
    let mut weight = 0.0;
    for occ_a in &a.occurrences {
        for occ_b in &b.occurrences {
            let distance = occ_a
                .first_token_position
                .abs_diff(occ_b.first_token_position)
                .max(1);
            weight += 1.0 / distance as f64;
        }
    }
    weight
}

/// Builds the multipartite candidate graph, weight adjustment applied.
/// Returns the graph, candidate labels, and the topic assignment.
pub fn build_candidate_graph(
    candidates: &[Candidate],
    config: &MultipartiteConfig,
) -> (RankGraph, Vec<String>, Vec<usize>) {
    let clustering = cluster_topics(candidates, config.similarity_threshold);
    let topic_of = clustering.topic_of(candidates.len());

    let mut graph = RankGraph::new(candidates.len());
    for i in 0..candidates.len() {
        for j in i + 1..candidates.len() {
            if topic_of[i] == topic_of[j] {
                continue;
            }
            let weight = candidate_distance_weight(&candidates[i], &candidates[j]);
            graph.add_symmetric_edge(i, j, weight);
        }
    }

    // Promotion step: the first-occurring candidate of every topic has its
    // incoming edge weights multiplied by alpha * e^(1 / (1 + p)), p being
    // its first-occurrence token position.
    for topic in &clustering.topics {
        let first = topic
            .iter()
            .copied()
            .min_by_key(|&i| (candidates[i].first_position(), i))
            .expect("topics are never empty");
        let p = candidates[first].first_position() as f64;
        let factor = config.alpha_boost * (1.0 / (1.0 + p)).exp();
        graph.scale_incoming(first, factor);
    }

    let labels = candidates.iter().map(Candidate::stem_key).collect();
    (graph, labels, topic_of)
}

pub fn multipartite_extract(
    doc: &ProcessedDocument,
    config: &MultipartiteConfig,
    k: usize,
) -> Vec<ScoredPhrase> {
    let candidates = pos_sequence_candidates(doc);
    if candidates.is_empty() {
        return Vec::new();
    }
    let (graph, _, _) = build_candidate_graph(&candidates, config);
    let ranks = textrank_scores(&graph, config.lambda, DEFAULT_TOL, DEFAULT_MAX_ITER);

    // A single topic yields an edgeless graph; uniform scores fall back to
    // position order through the shared tie-break.
    let mut phrases: Vec<ScoredPhrase> = candidates
        .iter()
        .enumerate()
        .map(|(i, c)| ScoredPhrase {
            surface: c.surface(),
            stems: c.stems.clone(),
            score: ranks.scores[i],
            first_position: c.first_position(),
        })
        .collect();
    rank_descending(&mut phrases);
    phrases.truncate(k);
    phrases
}
