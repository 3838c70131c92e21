//! JSONL news record ingestion.

use std::collections::HashMap;
use std::io::BufRead;

use serde::{Deserialize, Serialize};

/// One news article with its author-assigned keyphrases.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct NewsRecord {
    pub title: String,
    pub body: String,
    pub summary: String,
    pub keyphrases: Vec<String>,
    pub category: String,
    pub url: String,
}

/// A line that failed to parse, reported without aborting the stream.
#[derive(Debug, Clone, Serialize)]
pub struct RejectedLine {
    /// 1-based line number.
    pub line: usize,
    pub reason: String,
}

/// Reads line-delimited JSON records. Malformed lines become rejection
/// entries; duplicate urls keep the last record seen (first position),
/// with a logged warning.
pub fn load_records<R: BufRead>(
    reader: R,
) -> std::io::Result<(Vec<NewsRecord>, Vec<RejectedLine>)> {
    let mut records: Vec<NewsRecord> = Vec::new();
    let mut rejected = Vec::new();
    let mut seen_urls: HashMap<String, usize> = HashMap::new();

    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        match serde_json::from_str::<NewsRecord>(&line) {
            Ok(record) => match seen_urls.get(&record.url) {
                Some(&existing) => {
                    log::warn!(
                        "duplicate url {} at line {}, keeping the later record",
                        record.url,
                        idx + 1
                    );
                    records[existing] = record;
                }
                None => {
                    seen_urls.insert(record.url.clone(), records.len());
                    records.push(record);
                }
            },
            Err(err) => rejected.push(RejectedLine {
                line: idx + 1,
                reason: friendly_reason(&err),
            }),
        }
    }
    Ok((records, rejected))
}

/// Rewrites serde's diagnostics into stable, compact reasons.
fn friendly_reason(err: &serde_json::Error) -> String {
    let msg = err.to_string();
    if let Some(rest) = msg.strip_prefix("missing field `") {
        if let Some(field) = rest.split('`').next() {
            return format!("missing field: {field}");
        }
    }
    if let Some(rest) = msg.strip_prefix("unknown field `") {
        if let Some(field) = rest.split('`').next() {
            return format!("unknown field: {field}");
        }
    }
    // Keep serde's message but drop the trailing position clutter.
    msg.split(" at line ").next().unwrap_or(&msg).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record_json(url: &str, body: &str) -> String {
        serde_json::json!({
            "title": "t", "body": body, "summary": "s",
            "keyphrases": ["اقتصاد", "نفت"], "category": "c", "url": url
        })
        .to_string()
    }

    #[test]
    fn empty_stream() {
        let (records, rejected) = load_records(std::io::Cursor::new("")).unwrap();
        assert!(records.is_empty());
        assert!(rejected.is_empty());
    }

    #[test]
    fn one_valid_line() {
        let line = record_json("https://example.com/1", "متن خبر");
        let (records, rejected) = load_records(std::io::Cursor::new(line)).unwrap();
        assert_eq!(records.len(), 1);
        assert!(rejected.is_empty());
    }

    #[test]
    fn missing_body_is_rejected_with_field_name() {
        let line = r#"{"title":"t","summary":"s","keyphrases":["a"],"category":"c","url":"u"}"#;
        let (records, rejected) = load_records(std::io::Cursor::new(line)).unwrap();
        assert!(records.is_empty());
        assert_eq!(rejected.len(), 1);
        assert_eq!(rejected[0].line, 1);
        assert_eq!(rejected[0].reason, "missing field: body");
    }

    #[test]
    fn bad_json_does_not_abort_the_stream() {
        let input = format!("not json\n{}\n", record_json("u1", "b"));
        let (records, rejected) = load_records(std::io::Cursor::new(input)).unwrap();
        assert_eq!(records.len(), 1);
        assert_eq!(rejected.len(), 1);
        assert_eq!(rejected[0].line, 1);
    }

    #[test]
    fn duplicate_url_keeps_last_record() {
        let input = format!(
            "{}\n{}\n{}\n",
            record_json("u1", "first"),
            record_json("u2", "other"),
            record_json("u1", "second")
        );
        let (records, _) = load_records(std::io::Cursor::new(input)).unwrap();
        assert_eq!(records.len(), 2);
        assert_eq!(records[0].body, "second");
        assert_eq!(records[1].url, "u2");
    }
}
