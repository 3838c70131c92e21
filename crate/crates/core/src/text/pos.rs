//! Part-of-speech tagging behind a swappable interface.
//!
//! The bundled tagger is lexicon + heuristics: digits tag NUM, punctuation
//! PUNCT, verbal stopwords VERB, lexicon entries their listed tag, and
//! everything else NOUN. Defaulting unknowns to NOUN keeps the noun-phrase
//! candidate pattern permissive.

use std::collections::HashMap;
use std::path::Path;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::text::Token;

const BUILTIN_LEXICON: &str = include_str!("../../data/pos_lexicon.txt");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PosTag {
    Noun,
    Adj,
    Verb,
    Num,
    Punct,
    Other,
}

impl FromStr for PosTag {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().as_str() {
            "NOUN" | "N" => Ok(PosTag::Noun),
            "ADJ" | "AJ" => Ok(PosTag::Adj),
            "VERB" | "V" => Ok(PosTag::Verb),
            "NUM" => Ok(PosTag::Num),
            "PUNCT" => Ok(PosTag::Punct),
            "OTHER" => Ok(PosTag::Other),
            other => Err(format!("unknown POS tag `{other}`")),
        }
    }
}

/// Assigns tags to word tokens. Implementations see the normalized surface.
pub trait PosTagger: Send + Sync {
    fn tag_word(&self, surface: &str) -> PosTag;
}

/// Frequent verbal stopwords (copula, auxiliaries, light verbs) that the
/// default tagger marks VERB ahead of the lexicon.
const VERBAL_STOPWORDS: &[&str] = &[
    "است",
    "هست",
    "نیست",
    "بود",
    "نبود",
    "باشد",
    "شد",
    "نشد",
    "شود",
    "نشود",
    "شدند",
    "شده",
    "کرد",
    "نکرد",
    "کند",
    "نکند",
    "کنند",
    "کرده",
    "کردند",
    "دارد",
    "ندارد",
    "دارند",
    "داشت",
    "داشته",
    "خواهد",
    "نخواهد",
    "خواهند",
    "باید",
    "نباید",
    "گفت",
    "گفته",
    "گوید",
    "آمد",
    "آید",
    "رفت",
    "رود",
    "داد",
    "دهد",
    "گرفت",
    "گیرد",
    "می\u{200C}شود",
    "نمی\u{200C}شود",
    "می\u{200C}شد",
    "می\u{200C}کند",
    "نمی\u{200C}کند",
    "می\u{200C}کرد",
    "می\u{200C}تواند",
    "نمی\u{200C}تواند",
    "می\u{200C}توان",
    "نمی\u{200C}توان",
    "می\u{200C}باشد",
    "می\u{200C}گوید",
    "می\u{200C}دهد",
    "می\u{200C}گیرد",
    "می\u{200C}رود",
    "می\u{200C}آید",
];

/// The bundled lexicon + heuristics tagger.
pub struct LexiconTagger {
    lexicon: HashMap<String, PosTag>,
    verbal_stopwords: HashMap<String, ()>,
}

impl LexiconTagger {
    pub fn builtin() -> &'static LexiconTagger {
        static INSTANCE: OnceLock<LexiconTagger> = OnceLock::new();
        INSTANCE.get_or_init(|| {
            LexiconTagger::parse(BUILTIN_LEXICON).expect("bundled POS lexicon is well-formed")
        })
    }

    /// Parses `word<TAB>tag` lines; `#` starts a comment.
    pub fn parse(table: &str) -> std::result::Result<LexiconTagger, String> {
        let mut lexicon = HashMap::new();
        for (lineno, line) in table.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (word, tag) = line
                .split_once('\t')
                .or_else(|| line.split_once(' '))
                .ok_or_else(|| format!("line {}: expected `word<TAB>tag`", lineno + 1))?;
            let tag = PosTag::from_str(tag).map_err(|e| format!("line {}: {e}", lineno + 1))?;
            lexicon.insert(word.trim().to_string(), tag);
        }
        Ok(LexiconTagger {
            lexicon,
            verbal_stopwords: VERBAL_STOPWORDS.iter().map(|w| (w.to_string(), ())).collect(),
        })
    }

    pub fn load(path: &Path) -> Result<LexiconTagger> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_owned(),
            source,
        })?;
        LexiconTagger::parse(&text).map_err(|reason| Error::Resource {
            path: path.to_owned(),
            reason,
        })
    }

    pub fn lexicon(&self) -> &HashMap<String, PosTag> {
        &self.lexicon
    }
}

impl PosTagger for LexiconTagger {
    fn tag_word(&self, surface: &str) -> PosTag {
        if self.verbal_stopwords.contains_key(surface) {
            return PosTag::Verb;
        }
        self.lexicon.get(surface).copied().unwrap_or(PosTag::Noun)
    }
}

/// Tags every token exactly once: punctuation and all-digit tokens are
/// structural, word tokens go through the tagger.
pub fn tag_pos(tokens: &mut [Token], tagger: &dyn PosTagger) {
    for token in tokens {
        token.pos = structural_tag(&token.surface).unwrap_or_else(|| tagger.tag_word(&token.surface));
    }
}

/// PUNCT for non-word tokens, NUM for all-digit tokens, None otherwise.
pub(crate) fn structural_tag(surface: &str) -> Option<PosTag> {
    let mut chars = surface.chars();
    let first = chars.next()?;
    if !first.is_alphanumeric() && first != crate::text::ZWNJ {
        return Some(PosTag::Punct);
    }
    if surface.chars().all(|c| c.is_ascii_digit()) {
        return Some(PosTag::Num);
    }
    None
}
