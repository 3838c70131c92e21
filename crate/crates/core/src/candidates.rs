//! Candidate generation under the three selection regimes the extractors
//! need: n-grams, noun-phrase POS patterns, and KP-Miner's punctuation and
//! stopword bounded phrases with frequency and position cutoffs.

use std::collections::HashMap;

use crate::text::{PosTag, ProcessedDocument, Token};

/// A contiguous token span proposed as a keyphrase. Identity is the stem
/// sequence: surface variants of the same stems merge into one candidate.
#[derive(Debug, Clone)]
pub struct Candidate {
    /// Surfaces from the first occurrence.
    pub surface_tokens: Vec<String>,
    pub stems: Vec<String>,
    /// Sorted by position; never empty.
    pub occurrences: Vec<Occurrence>,
}

/// One occurrence of a candidate span.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Occurrence {
    pub sentence_index: usize,
    /// Document-wide token position of the span's first token.
    pub first_token_position: usize,
}

impl Candidate {
    pub fn len_tokens(&self) -> usize {
        self.stems.len()
    }

    pub fn frequency(&self) -> usize {
        self.occurrences.len()
    }

    pub fn first_position(&self) -> usize {
        self.occurrences[0].first_token_position
    }

    pub fn stem_key(&self) -> String {
        self.stems.join(" ")
    }

    pub fn surface(&self) -> String {
        self.surface_tokens.join(" ")
    }
}

/// Accumulates spans into candidates keyed by stem sequence.
#[derive(Default)]
struct CandidatePool {
    by_key: HashMap<Vec<String>, Candidate>,
}

impl CandidatePool {
    fn add(&mut self, tokens: &[Token], sentence_index: usize, position: usize) {
        let stems: Vec<String> = tokens.iter().map(|t| t.stem.clone()).collect();
        let occurrence = Occurrence {
            sentence_index,
            first_token_position: position,
        };
        self.by_key
            .entry(stems)
            .or_insert_with(|| Candidate {
                surface_tokens: tokens.iter().map(|t| t.surface.clone()).collect(),
                stems: tokens.iter().map(|t| t.stem.clone()).collect(),
                occurrences: Vec::new(),
            })
            .occurrences
            .push(occurrence);
    }

    fn finish(self) -> Vec<Candidate> {
        let mut candidates: Vec<Candidate> = self
            .by_key
            .into_values()
            .map(|mut c| {
                c.occurrences.sort_by_key(|o| o.first_token_position);
                c
            })
            .collect();
        candidates.sort_by(|a, b| {
            a.first_position()
                .cmp(&b.first_position())
                .then(a.stems.len().cmp(&b.stems.len()))
                .then_with(|| a.stems.cmp(&b.stems))
        });
        candidates
    }
}

/// Maximal punctuation-free token runs per sentence, with each token's
/// document-wide position.
fn punctuation_free_runs(doc: &ProcessedDocument) -> Vec<(usize, Vec<(&Token, usize)>)> {
    let mut runs = Vec::new();
    let mut position = 0;
    for (sentence_index, sentence) in doc.sentences.iter().enumerate() {
        let mut run: Vec<(&Token, usize)> = Vec::new();
        for token in sentence {
            if token.is_punct() {
                if !run.is_empty() {
                    runs.push((sentence_index, std::mem::take(&mut run)));
                }
            } else {
                run.push((token, position));
            }
            position += 1;
        }
        if !run.is_empty() {
            runs.push((sentence_index, run));
        }
    }
    runs
}

/// All contiguous spans of length <= `max_n` within a sentence that cross no
/// punctuation and neither start nor end with a stopword. Interior stopwords
/// are allowed unless `allow_interior_stopwords` is false.
pub(crate) fn span_candidates(
    doc: &ProcessedDocument,
    max_n: usize,
    allow_interior_stopwords: bool,
) -> Vec<Candidate> {
    let mut pool = CandidatePool::default();
    for (sentence_index, run) in punctuation_free_runs(doc) {
        let len = run.len();
        for start in 0..len {
            if run[start].0.is_stopword {
                continue;
            }
            for end in start + 1..=len.min(start + max_n) {
                if run[end - 1].0.is_stopword {
                    continue;
                }
                if !allow_interior_stopwords
                    && run[start..end].iter().any(|(t, _)| t.is_stopword)
                {
                    continue;
                }
                let tokens: Vec<Token> =
                    run[start..end].iter().map(|(t, _)| (*t).clone()).collect();
                pool.add(&tokens, sentence_index, run[start].1);
            }
        }
    }
    pool.finish()
}

/// n-gram candidates for TFIDF and KEA: spans of length <= `max_n` that do
/// not cross sentence or punctuation boundaries and neither start nor end
/// with a stopword.
pub fn ngram_candidates(doc: &ProcessedDocument, max_n: usize) -> Vec<Candidate> {
    span_candidates(doc, max_n, true)
}

/// Noun-phrase candidates: maximal spans of one-or-more NOUN followed by
/// zero-or-more ADJ within one sentence. Stopwords break spans.
pub fn pos_sequence_candidates(doc: &ProcessedDocument) -> Vec<Candidate> {
    let mut pool = CandidatePool::default();
    let mut position = 0;
    for (sentence_index, sentence) in doc.sentences.iter().enumerate() {
        let usable = |t: &Token| !t.is_stopword && !t.is_punct();
        let mut i = 0;
        while i < sentence.len() {
            let token = &sentence[i];
            if token.pos == PosTag::Noun && usable(token) {
                let start = i;
                while i < sentence.len()
                    && sentence[i].pos == PosTag::Noun
                    && usable(&sentence[i])
                {
                    i += 1;
                }
                while i < sentence.len() && sentence[i].pos == PosTag::Adj && usable(&sentence[i])
                {
                    i += 1;
                }
                let tokens: Vec<Token> = sentence[start..i].to_vec();
                pool.add(&tokens, sentence_index, position + start);
            } else {
                i += 1;
            }
        }
        position += sentence.len();
    }
    pool.finish()
}

/// KP-Miner candidates: maximal stopword/punctuation-free spans plus all of
/// their sub-spans, kept when frequency >= `lasf` and the first occurrence
/// starts before token position `cutoff` (0-based, strict).
pub fn kpminer_candidates(doc: &ProcessedDocument, lasf: usize, cutoff: usize) -> Vec<Candidate> {
    let mut pool = CandidatePool::default();
    for (sentence_index, run) in punctuation_free_runs(doc) {
        // Split the punctuation-free run further at stopwords.
        let mut segment: Vec<(&Token, usize)> = Vec::new();
        let flush = |segment: &mut Vec<(&Token, usize)>, pool: &mut CandidatePool| {
            let len = segment.len();
            for start in 0..len {
                for end in start + 1..=len {
                    let tokens: Vec<Token> =
                        segment[start..end].iter().map(|(t, _)| (*t).clone()).collect();
                    pool.add(&tokens, sentence_index, segment[start].1);
                }
            }
            segment.clear();
        };
        for (token, position) in run {
            if token.is_stopword {
                flush(&mut segment, &mut pool);
            } else {
                segment.push((token, position));
            }
        }
        flush(&mut segment, &mut pool);
    }
    pool.finish()
        .into_iter()
        .filter(|c| c.frequency() >= lasf && c.first_position() < cutoff)
        .collect()
}
