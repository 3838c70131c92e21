//! Hierarchical agglomerative clustering with average linkage over stem
//! Jaccard similarity, used to group lexically similar candidates into
//! topics.

use std::collections::HashSet;

use crate::candidates::Candidate;

pub const DEFAULT_SIMILARITY_THRESHOLD: f64 = 0.25;

/// `|stems(a) n stems(b)| / |stems(a) u stems(b)|` with set semantics.
pub fn jaccard_stem_similarity(a: &Candidate, b: &Candidate) -> f64 {
    let set_a: HashSet<&str> = a.stems.iter().map(String::as_str).collect();
    let set_b: HashSet<&str> = b.stems.iter().map(String::as_str).collect();
    let intersection = set_a.intersection(&set_b).count();
    let union = set_a.union(&set_b).count();
    if union == 0 {
        0.0
    } else {
        intersection as f64 / union as f64
    }
}

/// Topics partition the candidate indices `0..n`.
#[derive(Debug, Clone, PartialEq)]
pub struct TopicClustering {
    pub topics: Vec<Vec<usize>>,
    pub threshold: f64,
}

impl TopicClustering {
    /// Topic index of every candidate.
    pub fn topic_of(&self, candidate_count: usize) -> Vec<usize> {
        let mut assignment = vec![0; candidate_count];
        for (topic_idx, members) in self.topics.iter().enumerate() {
            for &member in members {
                assignment[member] = topic_idx;
            }
        }
        assignment
    }
}

/// Agglomerative average-linkage clustering over a precomputed similarity
/// matrix. Cluster similarity is the mean pairwise similarity of members;
/// merging stops when the best pair falls below `threshold`.
///
/// Deterministic merge order: highest similarity first, ties broken by the
/// lexicographically lowest (min-member, min-member) pair. Output topics are
/// sorted by their smallest member index.
pub fn cluster_from_matrix(sim: &[Vec<f64>], threshold: f64) -> Vec<Vec<usize>> {
    let n = sim.len();
    let mut clusters: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();

    loop {
        if clusters.len() <= 1 {
            break;
        }
        let mut best: Option<(f64, usize, usize)> = None;
        for i in 0..clusters.len() {
            for j in i + 1..clusters.len() {
                let mut total = 0.0;
                for &a in &clusters[i] {
                    for &b in &clusters[j] {
                        total += sim[a][b];
                    }
                }
                let average = total / (clusters[i].len() * clusters[j].len()) as f64;
                let key = (clusters[i][0], clusters[j][0]);
                let better = match best {
                    None => true,
                    Some((s, bi, bj)) => {
                        average > s
                            || (average == s && key < (clusters[bi][0], clusters[bj][0]))
                    }
                };
                if better {
                    best = Some((average, i, j));
                }
            }
        }
        match best {
            Some((similarity, i, j)) if similarity >= threshold => {
                let merged = clusters.remove(j);
                clusters[i].extend(merged);
                clusters[i].sort_unstable();
            }
            _ => break,
        }
    }

    clusters.sort_by_key(|c| c[0]);
    clusters
}

/// Clusters candidates into topics on stem Jaccard similarity.
pub fn cluster_topics(candidates: &[Candidate], threshold: f64) -> TopicClustering {
    let n = candidates.len();
    let mut sim = vec![vec![0.0; n]; n];
    for i in 0..n {
        sim[i][i] = 1.0;
        for j in i + 1..n {
            let s = jaccard_stem_similarity(&candidates[i], &candidates[j]);
            sim[i][j] = s;
            sim[j][i] = s;
        }
    }
    TopicClustering {
        topics: cluster_from_matrix(&sim, threshold),
        threshold,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::candidates::ngram_candidates;
    use crate::text::Pipeline;

    fn candidate(stems: &[&str]) -> Candidate {
        use crate::candidates::Occurrence;
        Candidate {
            surface_tokens: stems.iter().map(|s| s.to_string()).collect(),
            stems: stems.iter().map(|s| s.to_string()).collect(),
            occurrences: vec![Occurrence {
                sentence_index: 0,
                first_token_position: 0,
            }],
        }
    }

    #[test]
    fn jaccard_on_hand_sets() {
        assert_eq!(
            jaccard_stem_similarity(&candidate(&["a", "b"]), &candidate(&["a", "b"])),
            1.0
        );
        assert_eq!(
            jaccard_stem_similarity(&candidate(&["a"]), &candidate(&["b"])),
            0.0
        );
        let s = jaccard_stem_similarity(&candidate(&["a", "b"]), &candidate(&["b", "c"]));
        assert!((s - 1.0 / 3.0).abs() < 1e-12);
        // Duplicates collapse: stems {a, a, b} is the set {a, b}.
        let s = jaccard_stem_similarity(&candidate(&["a", "a", "b"]), &candidate(&["a", "b"]));
        assert_eq!(s, 1.0);
    }

    #[test]
    fn identical_candidates_form_one_topic() {
        let candidates = vec![
            candidate(&["نفت", "خام"]),
            candidate(&["خام", "نفت"]),
            candidate(&["نفت", "خام"]),
        ];
        let clustering = cluster_topics(&candidates, 0.25);
        assert_eq!(clustering.topics, vec![vec![0, 1, 2]]);
    }

    #[test]
    fn disjoint_candidates_stay_singletons() {
        let candidates = vec![
            candidate(&["a"]),
            candidate(&["b"]),
            candidate(&["c"]),
        ];
        let clustering = cluster_topics(&candidates, 0.25);
        assert_eq!(clustering.topics, vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn output_is_a_partition() {
        let pipeline = Pipeline::default();
        let doc = pipeline.process(
            "بازار نفت خام. قیمت نفت. بازار بورس تهران. شاخص بورس. اقتصاد جهانی",
        );
        let candidates = ngram_candidates(&doc, 3);
        let clustering = cluster_topics(&candidates, 0.25);
        let mut seen = vec![false; candidates.len()];
        for topic in &clustering.topics {
            for &member in topic {
                assert!(!seen[member], "candidate {member} in two topics");
                seen[member] = true;
            }
        }
        assert!(seen.into_iter().all(|s| s), "candidate missing from topics");
    }

    #[test]
    fn four_item_average_linkage_hand_case() {
        // sim(0,1) = 0.9, sim(2,3) = 0.8, cross pairs low. The first merge is
        // {0,1}, then {2,3}; average linkage between the pairs is 0.1, below
        // the threshold, so merging stops at two topics.
        let sim = vec![
            vec![1.0, 0.9, 0.1, 0.1],
            vec![0.9, 1.0, 0.1, 0.1],
            vec![0.1, 0.1, 1.0, 0.8],
            vec![0.1, 0.1, 0.8, 1.0],
        ];
        let topics = cluster_from_matrix(&sim, 0.25);
        assert_eq!(topics, vec![vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn merge_order_is_deterministic_on_ties() {
        // Three mutually similar items with equal similarities: the lowest
        // index pair merges first, and everything joins one topic.
        let sim = vec![
            vec![1.0, 0.5, 0.5],
            vec![0.5, 1.0, 0.5],
            vec![0.5, 0.5, 1.0],
        ];
        let topics = cluster_from_matrix(&sim, 0.25);
        assert_eq!(topics, vec![vec![0, 1, 2]]);
    }
}
