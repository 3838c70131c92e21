//! The document processing pipeline: normalize, sentence-split, tokenize,
//! stem, stopword-tag, POS-tag.

use std::collections::HashSet;
use std::path::PathBuf;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::text::pos::structural_tag;
use crate::text::{
    split_sentences, tokenize, LexiconTagger, Normalizer, PosTag, PosTagger, ProcessedDocument,
    Stemmer, Token,
};

const BUILTIN_STOPWORDS: &str = include_str!("../../data/stopwords.txt");

/// Optional overrides for the bundled resource tables.
#[derive(Debug, Clone, Default)]
pub struct ResourcePaths {
    pub norm_map: Option<PathBuf>,
    pub suffixes: Option<PathBuf>,
    pub stopwords: Option<PathBuf>,
    pub pos_lexicon: Option<PathBuf>,
}

/// Immutable once built; all methods are pure and thread-safe.
pub struct Pipeline {
    normalizer: Normalizer,
    stemmer: Stemmer,
    stopwords: HashSet<String>,
    tagger: Arc<dyn PosTagger>,
}

impl Default for Pipeline {
    fn default() -> Self {
        Pipeline::from_resources(&ResourcePaths::default())
            .expect("bundled resources always load")
    }
}

impl Pipeline {
    pub fn from_resources(paths: &ResourcePaths) -> Result<Pipeline> {
        let normalizer = match &paths.norm_map {
            Some(p) => Normalizer::load(p)?,
            None => Normalizer::builtin().clone(),
        };
        let stemmer = match &paths.suffixes {
            Some(p) => Stemmer::load(p)?,
            None => Stemmer::builtin().clone(),
        };
        let stopword_text = match &paths.stopwords {
            Some(p) => std::fs::read_to_string(p).map_err(|source| Error::Io {
                path: p.clone(),
                source,
            })?,
            None => BUILTIN_STOPWORDS.to_string(),
        };
        // Stopword entries are normalized so lookups hit regardless of the
        // letter variants used in the list.
        let stopwords = stopword_text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty())
            .map(|l| normalizer.normalize(l))
            .collect();
        let tagger: Arc<dyn PosTagger> = match &paths.pos_lexicon {
            Some(p) => Arc::new(LexiconTagger::load(p)?),
            None => Arc::new(
                LexiconTagger::parse(include_str!("../../data/pos_lexicon.txt"))
                    .expect("bundled POS lexicon is well-formed"),
            ),
        };
        Ok(Pipeline {
            normalizer,
            stemmer,
            stopwords,
            tagger,
        })
    }

    /// Replaces the POS tagger; every other stage is unchanged.
    pub fn with_tagger(mut self, tagger: Arc<dyn PosTagger>) -> Pipeline {
        self.tagger = tagger;
        self
    }

    pub fn normalize(&self, raw: &str) -> String {
        self.normalizer.normalize(raw)
    }

    pub fn stem(&self, surface: &str) -> String {
        self.stemmer.stem(surface)
    }

    pub fn is_stopword(&self, surface: &str) -> bool {
        self.stopwords.contains(surface)
    }

    pub fn stopword_count(&self) -> usize {
        self.stopwords.len()
    }

    /// Runs the full pipeline on raw text.
    pub fn process(&self, raw: &str) -> ProcessedDocument {
        let text = self.normalizer.normalize(raw);
        let spans = split_sentences(&text);
        let mut sentences: Vec<Vec<Token>> = vec![Vec::new(); spans.len()];

        let mut span_idx = 0;
        for (surface, char_offset) in tokenize(&text) {
            while span_idx + 1 < spans.len() && char_offset >= spans[span_idx].end {
                span_idx += 1;
            }
            let pos = structural_tag(&surface)
                .unwrap_or_else(|| self.tagger.tag_word(&surface));
            let is_stopword = pos != PosTag::Punct && self.stopwords.contains(&surface);
            let stem = if pos == PosTag::Punct {
                surface.clone()
            } else {
                self.stemmer.stem(&surface)
            };
            sentences[span_idx].push(Token {
                surface,
                stem,
                pos,
                char_offset,
                sentence_index: span_idx,
                is_stopword,
            });
        }

        ProcessedDocument {
            sentences,
            source_text: text,
        }
    }

    /// Token count of raw text after normalization.
    pub fn count_tokens(&self, raw: &str) -> usize {
        tokenize(&self.normalizer.normalize(raw)).len()
    }

    /// Stem sequence of a free-standing phrase, punctuation dropped.
    ///
    /// This is the shared notion of phrase identity used by presence
    /// analysis, KEA training labels, and evaluation matching. Returns None
    /// when the phrase has no word tokens.
    pub fn phrase_stems(&self, raw: &str) -> Option<Vec<String>> {
        let text = self.normalizer.normalize(raw);
        let stems: Vec<String> = tokenize(&text)
            .into_iter()
            .filter(|(surface, _)| structural_tag(surface) != Some(PosTag::Punct))
            .map(|(surface, _)| self.stemmer.stem(&surface))
            .collect();
        if stems.is_empty() {
            None
        } else {
            Some(stems)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn process_assigns_sentence_indices_and_offsets() {
        let pipeline = Pipeline::default();
        let doc = pipeline.process("خبر مهم امروز. دولت جدید آمد");
        assert_eq!(doc.sentence_count(), 2);
        for (idx, sentence) in doc.sentences.iter().enumerate() {
            for token in sentence {
                assert_eq!(token.sentence_index, idx);
            }
        }
        let offsets: Vec<usize> = doc.tokens().map(|t| t.char_offset).collect();
        for pair in offsets.windows(2) {
            assert!(pair[0] < pair[1], "offsets must strictly increase");
        }
    }

    #[test]
    fn stopwords_and_tags_are_assigned() {
        let pipeline = Pipeline::default();
        let doc = pipeline.process("او از تهران آمد.");
        let tokens: Vec<&Token> = doc.tokens().collect();
        let from = tokens.iter().find(|t| t.surface == "از").unwrap();
        assert!(from.is_stopword);
        let city = tokens.iter().find(|t| t.surface == "تهران").unwrap();
        assert!(!city.is_stopword);
        assert_eq!(city.pos, PosTag::Noun);
        let period = tokens.last().unwrap();
        assert_eq!(period.pos, PosTag::Punct);
    }

    #[test]
    fn phrase_stems_drop_punctuation_and_normalize() {
        let pipeline = Pipeline::default();
        // Arabic yeh in the input, Persian yeh in the body form.
        let a = pipeline.phrase_stems("انتخابات رياست");
        let b = pipeline.phrase_stems("انتخابات ریاست");
        assert_eq!(a, b);
        assert_eq!(pipeline.phrase_stems("..."), None);
        assert_eq!(
            pipeline.phrase_stems("نفت، گاز"),
            pipeline.phrase_stems("نفت گاز")
        );
    }

    #[test]
    fn empty_document() {
        let pipeline = Pipeline::default();
        let doc = pipeline.process("");
        assert_eq!(doc.token_count(), 0);
        assert_eq!(doc.sentence_count(), 0);
    }
}
