//! TopicRank: cluster noun-phrase candidates into topics, rank topics with
//! TextRank over a complete topic graph, and emit the first-occurring
//! candidate of each top topic.

use serde::{Deserialize, Serialize};

use crate::candidates::{pos_sequence_candidates, Candidate};
use crate::graph::hac::{cluster_topics, TopicClustering, DEFAULT_SIMILARITY_THRESHOLD};
use crate::graph::textrank::{textrank_scores, RankGraph, DEFAULT_MAX_ITER, DEFAULT_TOL};
use crate::phrase::ScoredPhrase;
use crate::text::ProcessedDocument;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TopicRankConfig {
    pub similarity_threshold: f64,
    pub lambda: f64,
}

impl Default for TopicRankConfig {
    fn default() -> Self {
        TopicRankConfig {
            similarity_threshold: DEFAULT_SIMILARITY_THRESHOLD,
            lambda: 0.85,
        }
    }
}

/// Sum over candidate occurrence pairs of reciprocal token-offset distances.
fn topic_edge_weight(a: &[&Candidate], b: &[&Candidate]) -> f64 {
    let mut weight = 0.0;
    for ca in a {
        for cb in b {
            for occ_a in &ca.occurrences {
                for occ_b in &cb.occurrences {
                    let distance = occ_a
                        .first_token_position
                        .abs_diff(occ_b.first_token_position)
                        .max(1);
                    weight += 1.0 / distance as f64;
                }
            }
        }
    }
    weight
}

/// Builds the complete topic graph. Returns the graph, the clustering, and
/// per-topic labels (the first-occurring candidate's stem key).
pub fn build_topic_graph(
    candidates: &[Candidate],
    config: &TopicRankConfig,
) -> (RankGraph, TopicClustering, Vec<String>) {
    let clustering = cluster_topics(candidates, config.similarity_threshold);
    let members: Vec<Vec<&Candidate>> = clustering
        .topics
        .iter()
        .map(|topic| topic.iter().map(|&i| &candidates[i]).collect())
        .collect();

    let mut graph = RankGraph::new(members.len());
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            let weight = topic_edge_weight(&members[i], &members[j]);
            graph.add_symmetric_edge(i, j, weight);
        }
    }
    let labels = members
        .iter()
        .map(|topic| first_occurring(topic).stem_key())
        .collect();
    (graph, clustering, labels)
}

fn first_occurring<'a>(topic: &[&'a Candidate]) -> &'a Candidate {
    topic
        .iter()
        .min_by_key(|c| c.first_position())
        .expect("topics are never empty")
}

pub fn topicrank_extract(
    doc: &ProcessedDocument,
    config: &TopicRankConfig,
    k: usize,
) -> Vec<ScoredPhrase> {
    let candidates = pos_sequence_candidates(doc);
    if candidates.is_empty() {
        return Vec::new();
    }
    let (graph, clustering, _) = build_topic_graph(&candidates, config);
    let ranks = textrank_scores(&graph, config.lambda, DEFAULT_TOL, DEFAULT_MAX_ITER);

    let mut topics: Vec<(usize, f64, &Candidate)> = clustering
        .topics
        .iter()
        .enumerate()
        .map(|(idx, topic)| {
            let members: Vec<&Candidate> = topic.iter().map(|&i| &candidates[i]).collect();
            (idx, ranks.scores[idx], first_occurring(&members))
        })
        .collect();
    // Highest topic score first; ties fall back to earliest representative.
    topics.sort_by(|a, b| {
        b.1.total_cmp(&a.1)
            .then_with(|| a.2.first_position().cmp(&b.2.first_position()))
            .then(a.0.cmp(&b.0))
    });

    topics
        .into_iter()
        .take(k)
        .map(|(_, score, representative)| ScoredPhrase {
            surface: representative.surface(),
            stems: representative.stems.clone(),
            score,
            first_position: representative.first_position(),
        })
        .collect()
}
