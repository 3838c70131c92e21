//! Tokenization and sentence splitting over normalized text.

use std::ops::Range;

use crate::text::ZWNJ;

fn is_word_char(c: char) -> bool {
    c.is_alphanumeric() || c == ZWNJ
}

fn is_sentence_terminator(c: char) -> bool {
    matches!(
        c,
        '.' | '!' | '?' | '\u{061F}' | '\u{061B}' | '\u{2026}' | '\n'
    )
}

/// Splits normalized text into `(surface, char_offset)` tokens.
///
/// Tokens are maximal runs of word codepoints (letters, digits, ZWNJ-joined
/// sequences); every other non-whitespace codepoint becomes a single-codepoint
/// token. Offsets are 0-based codepoint indices.
pub fn tokenize(text: &str) -> Vec<(String, usize)> {
    let mut tokens = Vec::new();
    let mut run = String::new();
    let mut run_start = 0;
    for (idx, c) in text.chars().enumerate() {
        if is_word_char(c) {
            if run.is_empty() {
                run_start = idx;
            }
            run.push(c);
        } else {
            if !run.is_empty() {
                tokens.push((std::mem::take(&mut run), run_start));
            }
            if !c.is_whitespace() {
                tokens.push((c.to_string(), idx));
            }
        }
    }
    if !run.is_empty() {
        tokens.push((run, run_start));
    }
    tokens
}

/// Splits normalized text into sentence spans (codepoint ranges).
///
/// Boundaries fall after runs of sentence-final punctuation or line breaks.
/// Spans that contain no word characters are merged into the preceding span,
/// so the result partitions the text and every span but possibly the first
/// contains at least one word.
pub fn split_sentences(text: &str) -> Vec<Range<usize>> {
    let chars: Vec<char> = text.chars().collect();
    let mut raw_spans = Vec::new();
    let mut start = 0;
    let mut i = 0;
    while i < chars.len() {
        if is_sentence_terminator(chars[i]) {
            while i < chars.len() && is_sentence_terminator(chars[i]) {
                i += 1;
            }
            raw_spans.push(start..i);
            start = i;
        } else {
            i += 1;
        }
    }
    if start < chars.len() {
        raw_spans.push(start..chars.len());
    }

    let mut spans: Vec<Range<usize>> = Vec::with_capacity(raw_spans.len());
    for span in raw_spans {
        let has_word = chars[span.clone()].iter().any(|c| c.is_alphanumeric());
        match spans.last_mut() {
            Some(prev) if !has_word => prev.end = span.end,
            _ => spans.push(span),
        }
    }
    spans
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_input() {
        assert!(tokenize("").is_empty());
        assert!(split_sentences("").is_empty());
    }

    #[test]
    fn two_ascii_tokens() {
        assert_eq!(
            tokenize("a b"),
            vec![("a".to_string(), 0), ("b".to_string(), 2)]
        );
    }

    #[test]
    fn punctuation_is_its_own_token() {
        assert_eq!(
            tokenize("a,b"),
            vec![
                ("a".to_string(), 0),
                (",".to_string(), 1),
                ("b".to_string(), 2)
            ]
        );
    }

    #[test]
    fn zwnj_joined_compound_is_one_token() {
        let text = format!("می{ZWNJ}رود");
        let tokens = tokenize(&text);
        assert_eq!(tokens.len(), 1);
        assert_eq!(tokens[0].0, text);
    }

    #[test]
    fn offsets_are_codepoint_indices() {
        // Persian letters are multi-byte; offsets must still count codepoints.
        let tokens = tokenize("آب و نان");
        assert_eq!(
            tokens,
            vec![
                ("آب".to_string(), 0),
                ("و".to_string(), 3),
                ("نان".to_string(), 5)
            ]
        );
    }

    #[test]
    fn sentence_boundaries() {
        assert_eq!(split_sentences("a. b."), vec![0..2, 2..5]);
        assert_eq!(split_sentences("no terminal punctuation"), vec![0..23]);
        // Three sentences, mixed ASCII and Persian question marks.
        assert_eq!(split_sentences("a? b\u{061F} c").len(), 3);
    }

    #[test]
    fn terminator_runs_and_trailing_punctuation() {
        assert_eq!(split_sentences("a!! b"), vec![0..3, 3..5]);
        // A trailing span without word characters merges backwards.
        assert_eq!(split_sentences("a. "), vec![0..3]);
        assert_eq!(split_sentences("a.."), vec![0..3]);
    }

    #[test]
    fn spans_partition_the_text() {
        for text in ["a. b! c? d", "x", "؟؟", "پایان."] {
            let spans = split_sentences(text);
            let total: usize = text.chars().count();
            let mut covered = 0;
            for span in &spans {
                assert_eq!(span.start, covered);
                covered = span.end;
            }
            assert_eq!(covered, total);
        }
    }
}
