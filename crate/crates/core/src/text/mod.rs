//! Persian-script text processing: character normalization, tokenization,
//! sentence splitting, light suffix stemming, and part-of-speech tagging.

pub mod normalize;
pub mod pipeline;
pub mod pos;
pub mod stem;
pub mod tokenize;

pub use normalize::{normalize_text, Normalizer};
pub use pipeline::{Pipeline, ResourcePaths};
pub use pos::{tag_pos, LexiconTagger, PosTag, PosTagger};
pub use stem::Stemmer;
pub use tokenize::{split_sentences, tokenize};

/// Zero-width non-joiner, the intra-word separator of Persian orthography.
pub const ZWNJ: char = '\u{200C}';

/// One token of a processed document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    /// Normalized surface form; never empty, never contains whitespace.
    pub surface: String,
    /// Stemmed form; never empty.
    pub stem: String,
    pub pos: PosTag,
    /// 0-based codepoint index into the normalized document text.
    pub char_offset: usize,
    /// 0-based index of the containing sentence.
    pub sentence_index: usize,
    pub is_stopword: bool,
}

impl Token {
    pub fn is_punct(&self) -> bool {
        self.pos == PosTag::Punct
    }
}

/// Normalized, sentence-split, tokenized text. Every extractor consumes this.
#[derive(Debug, Clone, Default)]
pub struct ProcessedDocument {
    pub sentences: Vec<Vec<Token>>,
    pub source_text: String,
}

impl ProcessedDocument {
    /// Tokens in document order.
    pub fn tokens(&self) -> impl Iterator<Item = &Token> {
        self.sentences.iter().flatten()
    }

    pub fn token_count(&self) -> usize {
        self.sentences.iter().map(Vec::len).sum()
    }

    pub fn sentence_count(&self) -> usize {
        self.sentences.len()
    }
}
