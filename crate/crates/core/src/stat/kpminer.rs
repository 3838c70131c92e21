//! KP-Miner: stopword/punctuation-bounded candidates with frequency and
//! position cutoffs, idf weighting with a multi-word boost, and a sub-phrase
//! refinement pass.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::candidates::{kpminer_candidates, Candidate};
use crate::df::DocumentFrequencyTable;
use crate::phrase::{rank_descending, ScoredPhrase};
use crate::text::ProcessedDocument;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct KpMinerConfig {
    /// Least allowable seen frequency.
    pub lasf: usize,
    /// Candidates first occurring at token position >= cutoff are dropped.
    pub cutoff: usize,
    pub alpha: f64,
    pub sigma: f64,
    /// Position factor of the weight formula; neutral by default.
    pub position_factor: f64,
}

impl Default for KpMinerConfig {
    fn default() -> Self {
        KpMinerConfig {
            lasf: 3,
            cutoff: 250,
            alpha: 2.3,
            sigma: 3.0,
            position_factor: 1.0,
        }
    }
}

/// Document boost factor `B_d = |N_d| / (|P_d| * alpha)`, capped at sigma.
/// `n_d` is the total number of candidate-term occurrences and `p_d` the
/// number of candidate terms longer than one token. With no multi-word
/// candidates the boost has nothing to scale and defaults to sigma.
pub fn boost_factor(n_d: usize, p_d: usize, alpha: f64, sigma: f64) -> f64 {
    if p_d == 0 {
        return sigma;
    }
    (n_d as f64 / (p_d as f64 * alpha)).min(sigma)
}

fn weight(
    candidate: &Candidate,
    tf: f64,
    df: &DocumentFrequencyTable,
    boost: f64,
    config: &KpMinerConfig,
) -> f64 {
    let idf = df.idf_log2(&candidate.stem_key());
    if candidate.len_tokens() == 1 {
        tf * idf
    } else {
        tf * idf * boost * config.position_factor
    }
}

/// True when `needle` is a strict contiguous sub-sequence of `haystack`.
fn is_subphrase(needle: &[String], haystack: &[String]) -> bool {
    needle.len() < haystack.len() && haystack.windows(needle.len()).any(|w| w == needle)
}

pub fn kpminer_extract(
    doc: &ProcessedDocument,
    df: &DocumentFrequencyTable,
    config: &KpMinerConfig,
    k: usize,
) -> Vec<ScoredPhrase> {
    let candidates = kpminer_candidates(doc, config.lasf, config.cutoff);
    if candidates.is_empty() {
        return Vec::new();
    }

    let n_d: usize = candidates.iter().map(Candidate::frequency).sum();
    let p_d = candidates.iter().filter(|c| c.len_tokens() > 1).count();
    let boost = boost_factor(n_d, p_d, config.alpha, config.sigma);

    let mut phrases: Vec<(ScoredPhrase, &Candidate)> = candidates
        .iter()
        .map(|c| {
            let score = weight(c, c.frequency() as f64, df, boost, config);
            (
                ScoredPhrase {
                    surface: c.surface(),
                    stems: c.stems.clone(),
                    score,
                    first_position: c.first_position(),
                },
                c,
            )
        })
        .collect();
    phrases.sort_by(|a, b| {
        b.0.score
            .total_cmp(&a.0.score)
            .then(a.0.first_position.cmp(&b.0.first_position))
            .then(a.0.stems.len().cmp(&b.0.stems.len()))
            .then_with(|| a.0.stems.cmp(&b.0.stems))
    });

    // Refinement: within the top-k, a phrase that is a sub-phrase of another
    // top-k phrase has its frequency decremented by the containing phrase's
    // frequency, then weights are recalculated and the list re-ranked.
    let top = phrases.len().min(k);
    let top_stems: Vec<(Vec<String>, usize)> = phrases[..top]
        .iter()
        .map(|(p, c)| (p.stems.clone(), c.frequency()))
        .collect();
    let mut adjusted: HashMap<String, f64> = HashMap::new();
    for (phrase, candidate) in &phrases[..top] {
        let contained_in: usize = top_stems
            .iter()
            .filter(|(other, _)| is_subphrase(&phrase.stems, other))
            .map(|(_, freq)| freq)
            .sum();
        if contained_in > 0 {
            let tf = (candidate.frequency() as f64 - contained_in as f64).max(0.0);
            adjusted.insert(
                phrase.stem_key(),
                weight(candidate, tf, df, boost, config),
            );
        }
    }

    let mut refined: Vec<ScoredPhrase> = phrases
        .into_iter()
        .map(|(mut p, _)| {
            if let Some(&score) = adjusted.get(&p.stem_key()) {
                p.score = score;
            }
            p
        })
        .collect();
    rank_descending(&mut refined);
    refined.truncate(k);
    refined
}
